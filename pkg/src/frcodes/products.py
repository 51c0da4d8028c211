"""Tensor products of FR codes, block folding, and GFR constructions.

Two codes with the same exact storage ratio alpha/theta combine into a
product code on point pairs (p, p'): every block of the left factor is
extended by the full right point set, and vice versa.  Point pairs are
indexed row-major, ``p * theta2 + p'``, which makes the product associative
with bit-identical matrices.

The complementary chain of a product is the max-convolution of the factor
chains:

    N_k(C1 x C2) = max { N_x(C1) * N_y(C2) : x + y = k }.

Folding a code (repeating every block e times) leaves its point set alone,
so N_k of the folded code equals N_ceil(k/e) of the original; multi-factor
folded products are therefore convolutions of stretched chains.

A (g, a_1, ..., a_s)-GFR code is the transpose of the product of s copies of
the trivial (g, 1, g, 1) code folded a_1, ..., a_s times; its parameters are
(g^s, sum a_i, g * sum a_i, g^(s-1)) and its hierarchy follows from the
convolution plus the dual transfer, with no subset enumeration.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Sequence

from .errors import ParameterError
from .hierarchy import Hierarchy, full_hierarchy, hierarchy_from_dual
from .incidence import FrCode, IncidenceStructure, dual, validate_fr


def tensor(c1: FrCode, c2: FrCode) -> FrCode:
    """The product code on c1.theta * c2.theta points and c1.n + c2.n blocks."""
    r1 = Fraction(c1.alpha, c1.theta)
    r2 = Fraction(c2.alpha, c2.theta)
    if r1 != r2:
        raise ParameterError(
            f"storage ratios differ: {c1.alpha}/{c1.theta} vs {c2.alpha}/{c2.theta}"
        )
    theta2 = c2.theta
    blocks = []
    for block in c1.blocks:
        blocks.append(tuple(p * theta2 + q for p in block for q in range(theta2)))
    for block in c2.blocks:
        blocks.append(tuple(p * theta2 + q for p in range(c1.theta) for q in block))
    product = validate_fr(IncidenceStructure(c1.theta * theta2, tuple(blocks)))
    assert product.params == (
        c1.n + c2.n,
        c1.alpha * theta2,
        c1.theta * theta2,
        c1.rho + c2.rho,
    )
    return product


def repeat_blocks(code: FrCode, e: int) -> FrCode:
    """The code with every block repeated e consecutive times: (e*n, alpha, theta, e*rho)."""
    if not isinstance(e, int) or e < 1:
        raise ParameterError(f"fold must be a positive integer, got {e!r}")
    if e == 1:
        return code
    blocks = []
    for block in code.blocks:
        blocks.extend([block] * e)
    folded = validate_fr(IncidenceStructure(code.theta, tuple(blocks)))
    assert folded.params == (e * code.n, code.alpha, code.theta, e * code.rho)
    return folded


def _check_chain(chain: Sequence[int], label: str) -> tuple[int, ...]:
    values = tuple(chain)
    if len(values) < 2:
        raise ParameterError(f"{label} chain needs at least N_0 and N_1")
    if any(not isinstance(v, int) or v < 0 for v in values):
        raise ParameterError(f"{label} chain entries must be nonnegative integers")
    if values[1] >= values[0]:
        raise ParameterError(f"{label} chain must drop strictly from N_0 to N_1")
    for i in range(1, len(values) - 1):
        if values[i + 1] > values[i]:
            raise ParameterError(f"{label} chain increases at index {i + 1}")
    if values[-1] != 0:
        raise ParameterError(f"{label} chain must end at 0, got {values[-1]}")
    return values


def tensor_hierarchy(
    n1_values: Sequence[int], n2_values: Sequence[int]
) -> tuple[int, ...]:
    """Max-convolution of two complementary chains: the chain of the product."""
    c1 = _check_chain(n1_values, "left")
    c2 = _check_chain(n2_values, "right")
    n1 = len(c1) - 1
    n2 = len(c2) - 1
    out = []
    for k in range(n1 + n2 + 1):
        lo = max(0, k - n2)
        hi = min(k, n1)
        out.append(max(c1[x] * c2[k - x] for x in range(lo, hi + 1)))
    return tuple(out)


def stretch_chain(n_values: Sequence[int], e: int) -> tuple[int, ...]:
    """Chain of the e-folded code: N_k becomes N_ceil(k/e) of the original."""
    if not isinstance(e, int) or e < 1:
        raise ParameterError(f"fold must be a positive integer, got {e!r}")
    values = tuple(n_values)
    n = len(values) - 1
    return tuple(values[-(-k // e)] for k in range(e * n + 1))


@dataclass(frozen=True)
class ProductSpec:
    """An ordered list of (factor code, fold) sharing one exact storage ratio."""

    factors: tuple[tuple[FrCode, int], ...]

    def __post_init__(self):
        if not self.factors:
            raise ParameterError("a product needs at least one factor")
        for _, e in self.factors:
            if not isinstance(e, int) or e < 1:
                raise ParameterError(f"fold must be a positive integer, got {e!r}")
        ratios = {Fraction(c.alpha, c.theta) for c, _ in self.factors}
        if len(ratios) != 1:
            raise ParameterError("all factors must share the same alpha/theta ratio")

    @property
    def ratio(self) -> Fraction:
        code = self.factors[0][0]
        return Fraction(code.alpha, code.theta)

    def params(self) -> tuple[int, int, int, int]:
        """Closed-form parameters of the folded product."""
        n = sum(e * c.n for c, e in self.factors)
        theta = 1
        for c, _ in self.factors:
            theta *= c.theta
        alpha = int(self.ratio * theta)
        rho = sum(e * c.rho for c, e in self.factors)
        return (n, alpha, theta, rho)

    def build(self) -> FrCode:
        """Construct the folded product code explicitly."""
        folded = [repeat_blocks(c, e) for c, e in self.factors]
        product = reduce(tensor, folded)
        assert product.params == self.params()
        return product

    def n_chain(self) -> tuple[int, ...]:
        """Chain of the folded product via stretched max-convolution."""
        chains = [
            stretch_chain(full_hierarchy(c).n_values, e) for c, e in self.factors
        ]
        return reduce(tensor_hierarchy, chains)


def _gfr_spec(g: int, alphas: Sequence[int]) -> ProductSpec:
    from .catalog import trivial_code

    if not isinstance(g, int) or g < 2:
        raise ParameterError(f"g must be an integer >= 2, got {g!r}")
    folds = tuple(alphas)
    if not folds or any(not isinstance(a, int) or a < 1 for a in folds):
        raise ParameterError("alphas must be a nonempty list of positive integers")
    base = trivial_code(g)
    return ProductSpec(tuple((base, a) for a in folds))


def gfr(g: int, alphas: Sequence[int]) -> FrCode:
    """The (g, a_1, ..., a_s)-GFR code: transpose of the folded trivial-code product."""
    spec = _gfr_spec(g, alphas)
    code = dual(spec.build())
    s = len(spec.factors)
    total = sum(e for _, e in spec.factors)
    assert code.params == (g**s, total, g * total, g ** (s - 1))
    return code


def gfr_hierarchy(g: int, alphas: Sequence[int]) -> Hierarchy:
    """GFR hierarchy from the convolution formula, with no subset enumeration."""
    spec = _gfr_spec(g, alphas)
    product_chain = spec.n_chain()
    n = g ** len(spec.factors)
    theta = g * sum(e for _, e in spec.factors)
    m_tail = hierarchy_from_dual(product_chain, theta, n)
    m_values = (0,) + m_tail
    n_values = tuple(theta - m for m in m_values)
    return Hierarchy(n, theta, m_values, n_values)
