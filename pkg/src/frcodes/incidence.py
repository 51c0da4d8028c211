"""Incidence structures and fractional repetition (FR) codes.

An incidence structure is a set of points ``0 .. theta-1`` together with an
ordered list of blocks; each block is a set of points.  The same block may
appear several times in the list (block identity is positional), but a point
is never repeated inside one block.  The equivalent matrix view is the
``n x theta`` zero-one matrix whose row i has a 1 in column p iff point p
lies in block i.

An FR code is a structure whose matrix has constant row sum ``alpha`` and
constant column sum ``rho``; the node/packet counts then satisfy
``n * alpha == theta * rho``.

All indices are 0-based everywhere: in memory, in files and in CLI output.
Classical presentations of the catalog constructions often use 1-based point
labels; shift those down by one when comparing.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import FormatError, NotTacticalError, StructureError

MAX_POINTS = 4096
MAX_BLOCKS = 4096


@dataclass(frozen=True)
class IncidenceStructure:
    """Immutable point/block incidence structure.

    ``blocks`` holds each block as a tuple of point indices sorted
    increasingly.  ``block_masks`` (one int bitset per block) and
    ``point_blocks`` (for every point, which blocks contain it) are derived
    eagerly and shared by the enumeration and repair machinery.
    """

    theta: int
    blocks: tuple[tuple[int, ...], ...]
    block_masks: tuple[int, ...] = field(init=False, repr=False, compare=False)
    point_blocks: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.theta < 1:
            raise StructureError(f"point count must be >= 1, got {self.theta}")
        if self.theta > MAX_POINTS:
            raise StructureError(f"point count {self.theta} exceeds cap {MAX_POINTS}")
        if not self.blocks:
            raise StructureError("block list must be nonempty")
        if len(self.blocks) > MAX_BLOCKS:
            raise StructureError(f"block count {len(self.blocks)} exceeds cap {MAX_BLOCKS}")
        masks = []
        for i, block in enumerate(self.blocks):
            mask = 0
            for p in block:
                if not 0 <= p < self.theta:
                    raise StructureError(
                        f"block {i} contains point {p}, outside 0..{self.theta - 1}"
                    )
                bit = 1 << p
                if mask & bit:
                    raise StructureError(f"block {i} repeats point {p}")
                mask |= bit
            if tuple(sorted(block)) != block:
                raise StructureError(f"block {i} is not sorted: {block}")
            masks.append(mask)
        reverse: list[list[int]] = [[] for _ in range(self.theta)]
        for i, block in enumerate(self.blocks):
            for p in block:
                reverse[p].append(i)
        object.__setattr__(self, "block_masks", tuple(masks))
        object.__setattr__(self, "point_blocks", tuple(tuple(bs) for bs in reverse))

    @property
    def n(self) -> int:
        return len(self.blocks)

    def block_sizes(self) -> tuple[int, ...]:
        return tuple(len(b) for b in self.blocks)

    def point_degrees(self) -> tuple[int, ...]:
        return tuple(len(bs) for bs in self.point_blocks)

    def matrix_rows(self) -> tuple[tuple[int, ...], ...]:
        """The 0/1 matrix, row i = block i, column p = point p."""
        rows = []
        for mask in self.block_masks:
            rows.append(tuple((mask >> p) & 1 for p in range(self.theta)))
        return tuple(rows)


def from_blocks(theta: int, blocks: Iterable[Iterable[int]]) -> IncidenceStructure:
    """Build a structure from a block list; order and duplicates are kept."""
    prepared = tuple(tuple(sorted(block)) for block in blocks)
    return IncidenceStructure(theta, prepared)


def from_matrix(rows: Sequence[Sequence[int]]) -> IncidenceStructure:
    """Build a structure from 0/1 matrix rows (row i becomes block i)."""
    if not rows:
        raise StructureError("matrix must have at least one row")
    width = len(rows[0])
    if width < 1:
        raise StructureError("matrix rows must have at least one column")
    blocks = []
    for i, row in enumerate(rows):
        if len(row) != width:
            raise StructureError(f"row {i} has length {len(row)}, expected {width}")
        block = []
        for p, entry in enumerate(row):
            if entry == 1:
                block.append(p)
            elif entry != 0:
                raise StructureError(f"row {i} column {p}: entry {entry!r} is not 0/1")
        blocks.append(tuple(block))
    return IncidenceStructure(width, tuple(blocks))


@dataclass(frozen=True)
class FrCode:
    """A validated FR code: tactical configuration plus its parameters."""

    structure: IncidenceStructure
    n: int
    alpha: int
    theta: int
    rho: int

    @property
    def params(self) -> tuple[int, int, int, int]:
        return (self.n, self.alpha, self.theta, self.rho)

    @property
    def blocks(self) -> tuple[tuple[int, ...], ...]:
        return self.structure.blocks

    @property
    def block_masks(self) -> tuple[int, ...]:
        return self.structure.block_masks


def validate_fr(structure: IncidenceStructure) -> FrCode:
    """Check the tactical-configuration conditions and derive (n, alpha, theta, rho).

    Raises ``NotTacticalError`` when block sizes or point degrees are not
    constant, or when some point lies in no block at all.
    """
    sizes = structure.block_sizes()
    alpha = sizes[0]
    for i, s in enumerate(sizes):
        if s != alpha:
            raise NotTacticalError(
                f"block sizes are not constant: block 0 has {alpha}, block {i} has {s}"
            )
    if alpha == 0:
        raise NotTacticalError("blocks are empty; every point lies in zero blocks")
    degrees = structure.point_degrees()
    rho = degrees[0]
    for p, d in enumerate(degrees):
        if d == 0:
            raise NotTacticalError(f"point {p} lies in zero blocks")
        if d != rho:
            raise NotTacticalError(
                f"point degrees are not constant: point 0 has {rho}, point {p} has {d}"
            )
    n = structure.n
    theta = structure.theta
    assert n * alpha == theta * rho, "row/column double count violated"
    return FrCode(structure, n, alpha, theta, rho)


def dual(code: FrCode) -> FrCode:
    """The FR code whose incidence matrix is the transpose.

    Block j of the dual collects the nodes containing point j, so the block
    order of the dual follows the point order of the original.  Parameters
    map (n, alpha, theta, rho) -> (theta, rho, n, alpha).
    """
    transposed = IncidenceStructure(code.n, code.structure.point_blocks)
    result = validate_fr(transposed)
    assert result.params == (code.theta, code.rho, code.n, code.alpha)
    return result


def is_simple(structure: IncidenceStructure) -> bool:
    """True iff no two blocks are equal as point sets."""
    return len(set(structure.block_masks)) == len(structure.block_masks)


# --- file formats ---------------------------------------------------------
#
# Text matrix format: first line "n theta", then n lines of theta characters
# from {0,1}; single spaces between characters are allowed and ignored.
# Structured format: JSON object {"theta": int, "blocks": [[int, ...], ...]}.
# Both readers reject trailing garbage.


def to_matrix_text(structure: IncidenceStructure) -> str:
    lines = [f"{structure.n} {structure.theta}"]
    for row in structure.matrix_rows():
        lines.append("".join(str(e) for e in row))
    return "\n".join(lines) + "\n"


def from_matrix_text(text: str) -> IncidenceStructure:
    lines = text.splitlines()
    if not lines:
        raise FormatError("empty matrix file")
    header = lines[0].split()
    if len(header) != 2:
        raise FormatError(f"header must be 'n theta', got {lines[0]!r}")
    try:
        n, theta = int(header[0]), int(header[1])
    except ValueError as exc:
        raise FormatError(f"header must be two integers, got {lines[0]!r}") from exc
    if len(lines) < n + 1:
        raise FormatError(f"expected {n} matrix rows, found {len(lines) - 1}")
    rows = []
    for i in range(1, n + 1):
        compact = lines[i].replace(" ", "")
        if len(compact) != theta:
            raise FormatError(f"row {i - 1} has {len(compact)} entries, expected {theta}")
        if set(compact) - {"0", "1"}:
            raise FormatError(f"row {i - 1} contains characters other than 0/1")
        rows.append(tuple(int(c) for c in compact))
    for i in range(n + 1, len(lines)):
        if lines[i].strip():
            raise FormatError(f"trailing garbage after row {n}: {lines[i]!r}")
    return from_matrix(rows)


def to_json_text(structure: IncidenceStructure) -> str:
    payload = {"theta": structure.theta, "blocks": [list(b) for b in structure.blocks]}
    return json.dumps(payload, indent=2) + "\n"


def _structure_payload(text: str) -> dict:
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid structure JSON: {exc}") from exc
    if not isinstance(payload, dict):
        raise FormatError("structure JSON must be an object")
    if "theta" not in payload or "blocks" not in payload:
        raise FormatError("structure JSON needs 'theta' and 'blocks' keys")
    if not isinstance(payload["theta"], int):
        raise FormatError("'theta' must be an integer")
    blocks = payload["blocks"]
    if not isinstance(blocks, list) or not all(isinstance(b, list) for b in blocks):
        raise FormatError("'blocks' must be a list of lists of point indices")
    for b in blocks:
        if not all(isinstance(p, int) and not isinstance(p, bool) for p in b):
            raise FormatError("block entries must be integers")
    return payload


def from_json_text(text: str) -> IncidenceStructure:
    payload = _structure_payload(text)
    return from_blocks(payload["theta"], payload["blocks"])
