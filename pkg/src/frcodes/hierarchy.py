"""Supported-file-size hierarchies of FR codes.

``M_k`` is the guaranteed number of distinct packets obtainable from any k
storage nodes: the minimum, over all k-subsets of blocks, of the size of
their union.  ``N_k = theta - M_k`` is the complementary size, i.e. the
widest all-zero submatrix reachable with k rows of the incidence matrix.
``M_0 = 0`` and ``N_0 = theta`` by convention.

The chains of a code and of its transpose determine each other:

    M_k(C) = #{ i in 1..theta : N_i(C^t) < k }

so the hierarchy can be computed on whichever orientation has fewer blocks
and transferred to the other.  ``full_hierarchy`` does this automatically;
pass ``via_dual=False`` to force direct enumeration.

Enumeration is depth-first over block indices in increasing order with the
running union kept as an int bitset.  A partial selection is pruned when its
union size plus the r-th smallest marginal contribution of the remaining
candidates (r picks still to make) cannot undercut the incumbent; a greedy
multi-start completion seeds the incumbent.  The pruned search returns
exactly what the unpruned enumeration returns (tested against a naive
oracle), it only skips subsets that provably cannot improve.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import EnumerationLimitError, ParameterError
from .incidence import FrCode, dual

DEFAULT_STATE_BUDGET = 100_000_000
_ENV_BUDGET = "FRC_MAX_ENUM"


def _state_budget() -> int:
    raw = os.environ.get(_ENV_BUDGET)
    if raw is None:
        return DEFAULT_STATE_BUDGET
    try:
        value = int(raw)
    except ValueError as exc:
        raise ParameterError(f"{_ENV_BUDGET} must be an integer, got {raw!r}") from exc
    if value < 1:
        raise ParameterError(f"{_ENV_BUDGET} must be positive, got {value}")
    return value


@dataclass(frozen=True)
class Hierarchy:
    """The chains M_0..M_n and N_0..N_n of one code orientation."""

    n: int
    theta: int
    m_values: tuple[int, ...]
    n_values: tuple[int, ...]

    def __post_init__(self):
        if len(self.m_values) != self.n + 1 or len(self.n_values) != self.n + 1:
            raise ParameterError("hierarchy chains must have n+1 entries (k = 0..n)")

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "theta": self.theta,
            "M": list(self.m_values),
            "N": list(self.n_values),
        }


@dataclass(frozen=True)
class ParetoPoint:
    """A stair-case vertex: l0 = N_{k0}(C) and k0 = N_{l0}(C^t), both strict beyond."""

    k0: int
    l0: int


def _greedy_union_upper(masks: Sequence[int], k: int) -> int:
    """Upper bound on the minimum k-union: best of n greedy completions."""
    n = len(masks)
    best: Optional[int] = None
    for start in range(n):
        union = masks[start]
        chosen = 1 << start
        for _ in range(k - 1):
            pick = -1
            pick_add = -1
            pick_union = 0
            for j in range(n):
                if chosen >> j & 1:
                    continue
                u2 = union | masks[j]
                add = (u2 & ~union).bit_count()
                if pick < 0 or add < pick_add:
                    pick, pick_add, pick_union = j, add, u2
            chosen |= 1 << pick
            union = pick_union
        size = union.bit_count()
        if best is None or size < best:
            best = size
    assert best is not None
    return best


def _min_union(
    masks: Sequence[int],
    k: int,
    *,
    floor: int = 0,
    want_witness: bool = False,
    budget: Optional[int] = None,
) -> tuple[int, Optional[tuple[int, ...]]]:
    """Minimum union size over k-subsets of ``masks``; optional lex-min witness.

    ``floor`` must be a valid lower bound on the answer; the search stops as
    soon as it is attained.  In witness mode ties with the incumbent are
    never pruned, so the first leaf reaching the final minimum in DFS order
    is the lexicographically smallest witnessing index subset.
    """
    n = len(masks)
    if not 1 <= k <= n:
        raise ParameterError(f"k must be in 1..{n}, got {k}")
    cap = budget if budget is not None else _state_budget()

    best = _greedy_union_upper(masks, k)
    witness: Optional[tuple[int, ...]] = None
    if best <= floor and not want_witness:
        return best, None

    suffix_or = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        suffix_or[i] = suffix_or[i + 1] | masks[i]

    states = 0
    chosen: list[int] = []
    done = False

    def visit(idx: int, union: int) -> None:
        nonlocal best, witness, states, done
        if done:
            return
        states += 1
        if states > cap:
            raise EnumerationLimitError(
                f"subset enumeration exceeded {cap} partial states; "
                f"raise {_ENV_BUDGET} to allow more"
            )
        needed = k - len(chosen)
        if needed == 0:
            size = union.bit_count()
            if size < best or (size == best and want_witness and witness is None):
                best = size
                witness = tuple(chosen)
                if best <= floor:
                    done = True
            return
        avail = n - idx
        if avail < needed:
            return
        if avail == needed and not want_witness:
            # forced to take the whole suffix
            size = (union | suffix_or[idx]).bit_count()
            if size < best:
                best = size
                if best <= floor:
                    done = True
            return
        cur = union.bit_count()
        if cur >= best and not (want_witness and cur == best):
            return
        adds = sorted((masks[j] & ~union).bit_count() for j in range(idx, n))
        bound = cur + adds[needed - 1]
        if bound > best or (bound == best and not want_witness):
            return
        for j in range(idx, n):
            chosen.append(j)
            visit(j + 1, union | masks[j])
            chosen.pop()
            if done:
                return

    visit(0, 0)
    if want_witness:
        # some leaf always ties or beats the greedy seed, and ties are never
        # pruned in witness mode, so a witness must have been recorded
        assert witness is not None
    return best, witness


def supported_file_size(code: FrCode, k: int, *, with_witness: bool = False):
    """M_k: the guaranteed distinct-packet count from any k nodes.

    With ``with_witness=True`` returns ``(M_k, subset)`` where ``subset`` is
    the lexicographically smallest k-tuple of block indices achieving it.
    """
    if not 1 <= k <= code.n:
        raise ParameterError(f"k must be in 1..{code.n}, got {k}")
    size, witness = _min_union(
        code.block_masks, k, floor=code.alpha, want_witness=with_witness
    )
    if with_witness:
        return size, witness
    return size


def complementary_size(code: FrCode, k: int) -> int:
    """N_k = theta - M_k for k >= 1; N_0 = theta."""
    if not 0 <= k <= code.n:
        raise ParameterError(f"k must be in 0..{code.n}, got {k}")
    if k == 0:
        return code.theta
    return code.theta - supported_file_size(code, k)


def hierarchy_from_dual(
    dual_n_values: Sequence[int], theta: int, n: int
) -> tuple[int, ...]:
    """M_1..M_n of C from the chain N_0..N_theta of its transpose.

    M_k(C) counts the i in 1..theta with N_i(C^t) strictly below k.
    """
    chain = tuple(dual_n_values)
    if len(chain) != theta + 1:
        raise ParameterError(
            f"dual chain must have theta+1 = {theta + 1} entries, got {len(chain)}"
        )
    if chain[0] != n:
        raise ParameterError(f"dual chain must start at N_0 = n = {n}, got {chain[0]}")
    if chain[-1] != 0:
        raise ParameterError(f"dual chain must end at N_theta = 0, got {chain[-1]}")
    if theta >= 1 and chain[1] >= chain[0]:
        raise ParameterError("dual chain must drop strictly from N_0 to N_1")
    for i in range(1, theta):
        if chain[i + 1] > chain[i]:
            raise ParameterError(f"dual chain increases at index {i + 1}")
    if any(v < 0 for v in chain):
        raise ParameterError("dual chain entries must be nonnegative")
    return tuple(sum(1 for v in chain[1:] if v < k) for k in range(1, n + 1))


def _direct_hierarchy(code: FrCode) -> Hierarchy:
    masks = code.block_masks
    m_values = [0]
    prev = 0
    for k in range(1, code.n + 1):
        floor = max(prev, code.alpha)
        mk, _ = _min_union(masks, k, floor=floor)
        m_values.append(mk)
        prev = mk
    n_values = tuple(code.theta - m for m in m_values)
    return Hierarchy(code.n, code.theta, tuple(m_values), n_values)


def full_hierarchy(code: FrCode, *, via_dual: Optional[bool] = None) -> Hierarchy:
    """All of M_0..M_n and N_0..N_n.

    ``via_dual=None`` routes the enumeration through whichever orientation
    has fewer blocks and transfers the result; both routes give identical
    chains.
    """
    if via_dual is None:
        via_dual = code.theta < code.n
    if not via_dual:
        return _direct_hierarchy(code)
    dual_h = _direct_hierarchy(dual(code))
    m_tail = hierarchy_from_dual(dual_h.n_values, code.theta, code.n)
    m_values = (0,) + m_tail
    n_values = tuple(code.theta - m for m in m_values)
    return Hierarchy(code.n, code.theta, m_values, n_values)


def dual_n_chain(code: FrCode, hierarchy: Optional[Hierarchy] = None) -> tuple[int, ...]:
    """N_0..N_theta of the transpose, transferred from the code's own chain."""
    h = hierarchy if hierarchy is not None else full_hierarchy(code)
    dual_m = [0]
    for ell in range(1, code.theta + 1):
        dual_m.append(sum(1 for v in h.n_values[1:] if v < ell))
    return tuple(code.n - m for m in dual_m)


def pareto_points(code: FrCode) -> list[ParetoPoint]:
    """All stair-case vertices (k0, l0) satisfying both fixed-point equations
    and both strictness conditions, sorted by k0."""
    h = full_hierarchy(code)
    n_c = h.n_values
    n_ct = dual_n_chain(code, h)
    points = []
    for k0 in range(0, code.n + 1):
        l0 = n_c[k0]
        if n_ct[l0] != k0:
            continue
        if any(n_c[k] >= l0 for k in range(k0 + 1, code.n + 1)):
            continue
        if any(n_ct[ell] >= k0 for ell in range(l0 + 1, code.theta + 1)):
            continue
        points.append(ParetoPoint(k0, l0))
    return points


def staircase_csv(hierarchy: Hierarchy) -> str:
    """CSV columns k, N_k for the stair-case plot of one orientation."""
    lines = ["k,N_k"]
    for k, v in enumerate(hierarchy.n_values):
        lines.append(f"{k},{v}")
    return "\n".join(lines) + "\n"
