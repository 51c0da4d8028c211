"""t-design verification, intersection-number calculus, and design-based FR codes.

A t-(v, m, lam) design is a simple incidence structure on v points whose
blocks all have size m, such that every t-subset of points lies in exactly
lam blocks (t <= m < v).  For disjoint point sets X (|X| = i) and Y
(|Y| = j) with i + j <= t, the number of blocks containing all of X and
none of Y depends only on i and j:

    intersection_number(i, j) = lam * C(v-i-j, m-i) / C(v-t, m-t)

which is always an exact integer.  Using the blocks of such a design as
storage nodes gives an FR code with n = b blocks, alpha = m, theta = v and
rho = intersection_number(1, 0); for reconstruction degrees k above
intersection_number(0, t) its file size follows a closed stair-case and
meets the reconstruction-degree lower bound with equality.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from itertools import combinations

from .bounds import min_reconstruction_degree
from .errors import DesignError, FormatError, ParameterError
from .hierarchy import supported_file_size
from .incidence import FrCode, IncidenceStructure, from_json_text, is_simple, validate_fr

MAX_DESIGN_POINTS = 64
MAX_DESIGN_STRENGTH = 4


def intersection_number(
    t: int, v: int, m: int, lam: int, contained: int, avoided: int
) -> int:
    """Blocks containing ``contained`` fixed points and avoiding ``avoided`` others."""
    if contained < 0 or avoided < 0:
        raise ParameterError("contained/avoided must be nonnegative")
    if contained + avoided > t:
        raise ParameterError(
            f"contained + avoided = {contained + avoided} exceeds strength t = {t}"
        )
    num = lam * math.comb(v - contained - avoided, m - contained)
    den = math.comb(v - t, m - t)
    if den == 0 or num % den:
        raise DesignError(
            f"non-integral intersection number for t-({v},{m},{lam}), "
            f"i={contained}, j={avoided}"
        )
    return num // den


def block_count(t: int, v: int, m: int, lam: int) -> int:
    """b = lam * C(v, t) / C(m, t)."""
    num = lam * math.comb(v, t)
    den = math.comb(m, t)
    if den == 0 or num % den:
        raise DesignError(f"non-integral block count for t-({v},{m},{lam})")
    return num // den


@dataclass(frozen=True)
class TDesign:
    """A verified t-(v, m, lam) design."""

    v: int
    m: int
    t: int
    lam: int
    structure: IncidenceStructure

    @property
    def b(self) -> int:
        return self.structure.n

    def intersection_number(self, contained: int, avoided: int) -> int:
        return intersection_number(self.t, self.v, self.m, self.lam, contained, avoided)


def verify_t_design(structure: IncidenceStructure, t: int) -> TDesign:
    """Exhaustively check the t-subset covering condition and return the design.

    Every t-subset of points must lie in the same number lam of blocks; the
    structure must be simple with constant block size m satisfying t <= m < v.
    """
    v = structure.theta
    if v > MAX_DESIGN_POINTS:
        raise ParameterError(f"design verification capped at v <= {MAX_DESIGN_POINTS}")
    if not 1 <= t <= MAX_DESIGN_STRENGTH:
        raise ParameterError(f"strength t must be in 1..{MAX_DESIGN_STRENGTH}, got {t}")
    if not is_simple(structure):
        raise DesignError("repeated blocks: a design must be simple")
    sizes = structure.block_sizes()
    m = sizes[0]
    if any(s != m for s in sizes):
        raise DesignError("block sizes are not constant")
    if not t <= m < v:
        raise DesignError(f"need t <= m < v, got t={t}, m={m}, v={v}")
    counts: dict[tuple[int, ...], int] = {}
    for block in structure.blocks:
        for sub in combinations(block, t):
            counts[sub] = counts.get(sub, 0) + 1
    lam = None
    for sub in combinations(range(v), t):
        c = counts.get(sub, 0)
        if lam is None:
            lam = c
        elif c != lam:
            raise DesignError(
                f"point set {sub} lies in {c} blocks, expected {lam}: not a {t}-design"
            )
    assert lam is not None
    if lam == 0:
        raise DesignError("no t-subset is covered; empty design")
    design = TDesign(v=v, m=m, t=t, lam=lam, structure=structure)
    if design.b != block_count(t, v, m, lam):
        raise DesignError("block count disagrees with the counting identity")
    return design


def design_from_json_text(text: str) -> TDesign:
    """Load and verify a design from the block-list JSON format plus a "t" key."""
    structure = from_json_text(text)
    payload = json.loads(text)
    if "t" not in payload or not isinstance(payload["t"], int):
        raise FormatError("design JSON needs an integer 't' key")
    return verify_t_design(structure, payload["t"])


def design_to_fr(design: TDesign) -> FrCode:
    """The FR code whose nodes are the design's blocks:
    (n, alpha, theta, rho) = (b, m, v, intersection_number(1, 0))."""
    code = validate_fr(design.structure)
    expected = (design.b, design.m, design.v, design.intersection_number(1, 0))
    assert code.params == expected
    return code


def design_hierarchy(design: TDesign) -> dict[int, int]:
    """Predicted M_k of the design-based code on its guaranteed range.

    Returns {k: M_k} for intersection_number(0, t) < k <= b, following the
    stair-case M_k = v - l + 1 on intersection_number(0, l) < k <=
    intersection_number(0, l-1).  No prediction is made for smaller k.
    """
    predictions: dict[int, int] = {}
    upper = design.b  # intersection_number(0, 0)
    for ell in range(1, design.t + 1):
        lower = design.intersection_number(0, ell)
        for k in range(lower + 1, upper + 1):
            predictions[k] = design.v - ell + 1
        upper = lower
    return predictions


@dataclass(frozen=True)
class OptimalityRow:
    file_size: int
    smallest_k: int
    degree_bound: int

    @property
    def attained(self) -> bool:
        return self.smallest_k == self.degree_bound


@dataclass(frozen=True)
class OptimalityReport:
    design: TDesign
    rows: tuple[OptimalityRow, ...]

    @property
    def all_attained(self) -> bool:
        return all(row.attained for row in self.rows)


def check_design_optimality(design: TDesign) -> OptimalityReport:
    """Compare enumerated reconstruction degrees against the closed-form bound.

    For each file size M in v-t+1 .. v, the smallest k with M_k >= M is
    enumerated by brute force and compared to min_reconstruction_degree.
    """
    if design.b > MAX_DESIGN_POINTS:
        raise ParameterError(
            f"optimality check capped at b <= {MAX_DESIGN_POINTS} blocks"
        )
    code = design_to_fr(design)
    m_values = [supported_file_size(code, k) for k in range(1, code.n + 1)]
    rows = []
    for file_size in range(design.v - design.t + 1, design.v + 1):
        smallest_k = next(
            k for k, mk in enumerate(m_values, start=1) if mk >= file_size
        )
        bound = min_reconstruction_degree(code.n, code.alpha, code.theta, file_size)
        rows.append(
            OptimalityRow(file_size=file_size, smallest_k=smallest_k, degree_bound=bound)
        )
    return OptimalityReport(design=design, rows=tuple(rows))
