"""End-to-end two-layer storage: outer MDS code, inner FR layout.

A file of M symbols is encoded into theta symbols by a systematic
Reed-Solomon-style code over GF(256): the interpolating polynomial of degree
below M through the points (0, file[0]) .. (M-1, file[M-1]) is evaluated at
M .. theta-1 for the parity symbols.  Any M of the theta outputs determine
the polynomial, hence the file.  Evaluation points are fixed to 0..theta-1,
so theta is capped at 255.

The theta coded symbols are laid out on storage nodes by an FR code: node i
stores the symbols indexed by its block.  A failed node is rebuilt by copying
each of its symbols from the lowest-indexed surviving holder; helpers never
compute, they only forward stored bytes.  A data collector reconstructs the
file whenever the nodes it contacts cover at least M distinct symbols.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .errors import ParameterError, ReconstructionError, RepairError
from .gf256 import check_symbol, gf_div, gf_mul, gf_sub
from .incidence import FrCode

MAX_THETA = 255


def _lagrange_eval(
    xs: Sequence[int], ys: Sequence[int], x: int
) -> int:
    """Evaluate the interpolating polynomial through (xs, ys) at x."""
    total = 0
    for i, xi in enumerate(xs):
        if ys[i] == 0:
            continue
        num = 1
        den = 1
        for j, xj in enumerate(xs):
            if j == i:
                continue
            num = gf_mul(num, gf_sub(x, xj))
            den = gf_mul(den, gf_sub(xi, xj))
        total ^= gf_mul(ys[i], gf_div(num, den))
    return total


def mds_encode(file_symbols: Sequence[int], theta: int) -> tuple[int, ...]:
    """Systematic encoding of M symbols into theta symbols (any M recover all)."""
    m = len(file_symbols)
    if m < 1:
        raise ParameterError("file must contain at least one symbol")
    if theta > MAX_THETA:
        raise ParameterError(f"theta = {theta} exceeds the field cap {MAX_THETA}")
    if m > theta:
        raise ParameterError(f"file size {m} exceeds code length {theta}")
    symbols = [check_symbol(s) for s in file_symbols]
    if m == theta:
        return tuple(symbols)
    xs = list(range(m))
    parity = [_lagrange_eval(xs, symbols, x) for x in range(m, theta)]
    return tuple(symbols + parity)


def mds_decode(
    shares: Iterable[tuple[int, int]], file_size: int
) -> tuple[int, ...]:
    """Recover the file from any ``file_size`` coded symbols given as (position, value)."""
    seen: dict[int, int] = {}
    for pos, value in shares:
        check_symbol(value)
        if not isinstance(pos, int) or not 0 <= pos < 256:
            raise ParameterError(f"share position must be an int in 0..255, got {pos!r}")
        if pos in seen and seen[pos] != value:
            raise ParameterError(f"conflicting values for position {pos}")
        seen[pos] = value
    if len(seen) < file_size:
        raise ParameterError(
            f"need {file_size} distinct positions to decode, got {len(seen)}"
        )
    xs = sorted(seen)[:file_size]
    ys = [seen[x] for x in xs]
    out = []
    for target in range(file_size):
        if target in seen:
            out.append(seen[target])
        else:
            out.append(_lagrange_eval(xs, ys, target))
    return tuple(out)


@dataclass(frozen=True)
class Transfer:
    """One repair transfer: a helper forwards one stored symbol unchanged."""

    helper: int
    point: int
    symbol: int
    uncoded: bool = True


@dataclass(frozen=True)
class RepairResult:
    node: int
    contents: tuple[tuple[int, int], ...]
    transfers: tuple[Transfer, ...]


@dataclass
class DressSystem:
    """Storage state: node i holds the (point, symbol) pairs of block i.

    Mutable only through ``repair``; share one instance across readers, but
    serialize repairs per instance.
    """

    code: FrCode
    symbols: tuple[int, ...]
    file_size: int
    node_contents: list[list[tuple[int, int]]] = field(init=False)

    def __post_init__(self):
        self.node_contents = [
            [(p, self.symbols[p]) for p in block] for block in self.code.blocks
        ]


def distribute(
    code: FrCode, symbols: Sequence[int], file_size: Optional[int] = None
) -> DressSystem:
    """Lay theta coded symbols out on the nodes of ``code``."""
    if len(symbols) != code.theta:
        raise ParameterError(
            f"need exactly theta = {code.theta} symbols, got {len(symbols)}"
        )
    m = file_size if file_size is not None else code.theta
    if not 1 <= m <= code.theta:
        raise ParameterError(f"file size must be in 1..{code.theta}, got {m}")
    checked = tuple(check_symbol(s) for s in symbols)
    return DressSystem(code=code, symbols=checked, file_size=m)


def repair(system: DressSystem, failed: int) -> RepairResult:
    """Rebuild a failed node from surviving holders, one raw symbol per point.

    The replacement content equals the failed node's content exactly; the
    transfer log records which helper forwarded which point.
    """
    code = system.code
    if not 0 <= failed < code.n:
        raise ParameterError(f"node index must be in 0..{code.n - 1}, got {failed}")
    transfers = []
    replacement = []
    for p in code.blocks[failed]:
        holders = [i for i in code.structure.point_blocks[p] if i != failed]
        if not holders:
            raise RepairError(
                f"point {p} was stored only on node {failed}; unrepairable (rho = 1)"
            )
        helper = min(holders)
        stored = dict(system.node_contents[helper])
        symbol = stored[p]
        transfers.append(Transfer(helper=helper, point=p, symbol=symbol))
        replacement.append((p, symbol))
    system.node_contents[failed] = list(replacement)
    return RepairResult(
        node=failed, contents=tuple(replacement), transfers=tuple(transfers)
    )


def reconstruct(system: DressSystem, nodes: Iterable[int]) -> tuple[int, ...]:
    """Decode the file from the symbols stored on the contacted nodes.

    Succeeds whenever the contacted blocks cover at least ``file_size``
    distinct points (even if fewer nodes than the nominal reconstruction
    degree were contacted); otherwise raises ``ReconstructionError`` with
    the deficit.
    """
    code = system.code
    chosen = sorted(set(nodes))
    for i in chosen:
        if not 0 <= i < code.n:
            raise ParameterError(f"node index must be in 0..{code.n - 1}, got {i}")
    if not chosen:
        raise ParameterError("at least one node must be contacted")
    covered: dict[int, int] = {}
    for i in chosen:
        for p, symbol in system.node_contents[i]:
            covered.setdefault(p, symbol)
    if len(covered) < system.file_size:
        deficit = system.file_size - len(covered)
        raise ReconstructionError(
            f"nodes {chosen} cover {len(covered)} distinct symbols, "
            f"need {system.file_size} (deficit {deficit})",
            deficit=deficit,
        )
    shares = sorted(covered.items())[: system.file_size]
    return mds_decode(shares, system.file_size)
