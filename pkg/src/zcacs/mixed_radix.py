"""Mixed-radix codecs between flat indices and block-structured digit vectors.

A flat index is split across a list of blocks, block 1 least significant.
Each block holds ``digits`` base-``base`` digits, digit 1 least significant,
so a block spans ``base ** digits`` consecutive values.  A block with base 1
spans exactly one value and its digits are identically zero; such blocks are
kept in the structure (rather than dropped) so positions always line up with
the per-block coefficient tables elsewhere in the package.

A spec carries two independent sides, ``row`` and ``col``, plus an optional
*primed* extension per side: a list of scalar bases that widen the span.
For an extended index x, the base part is ``x mod span(blocks)`` decomposed
over the blocks, and the primed part is ``x // span(blocks)`` decomposed over
the primed bases, first base least significant.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Tuple

from zcacs.errors import RangeError, ShapeError


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class RadixBlock:
    """One digit block: ``digits`` base-``base`` digits."""

    base: int
    digits: int

    def __post_init__(self):
        if self.base != 1 and not _is_prime(self.base):
            raise ShapeError(f"block base must be 1 or a prime, got {self.base}")
        if self.digits < 1:
            raise ShapeError(f"block needs at least one digit, got {self.digits}")

    @property
    def span(self) -> int:
        return self.base**self.digits


def _as_blocks(blocks: Iterable) -> Tuple[RadixBlock, ...]:
    out = []
    for b in blocks:
        out.append(b if isinstance(b, RadixBlock) else RadixBlock(*b))
    return tuple(out)


@dataclass(frozen=True)
class RadixSpec:
    """Digit layout for the two sides of an array index.

    row_blocks may use base 1 (placeholder blocks); col_blocks must use prime
    bases.  row_primed entries are 1 or prime, col_primed entries prime.  An
    empty primed list is the same as a list of 1s: the extension is trivial.
    """

    row_blocks: Tuple[RadixBlock, ...]
    col_blocks: Tuple[RadixBlock, ...]
    row_primed: Tuple[int, ...] = ()
    col_primed: Tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "row_blocks", _as_blocks(self.row_blocks))
        object.__setattr__(self, "col_blocks", _as_blocks(self.col_blocks))
        object.__setattr__(self, "row_primed", tuple(self.row_primed))
        object.__setattr__(self, "col_primed", tuple(self.col_primed))
        if not self.col_blocks:
            raise ShapeError("col_blocks must not be empty")
        for blk in self.col_blocks:
            if blk.base == 1:
                raise ShapeError("col_blocks bases must be prime, got 1")
        for b in self.row_primed:
            if b != 1 and not _is_prime(b):
                raise ShapeError(f"row_primed entries must be 1 or prime, got {b}")
        for b in self.col_primed:
            if not _is_prime(b):
                raise ShapeError(f"col_primed entries must be prime, got {b}")

    def blocks(self, side: str) -> Tuple[RadixBlock, ...]:
        if side == "row":
            return self.row_blocks
        if side == "col":
            return self.col_blocks
        raise ShapeError(f"side must be 'row' or 'col', got {side!r}")

    def primed(self, side: str) -> Tuple[int, ...]:
        return self.row_primed if side == "row" else self.col_primed

    @property
    def row_span(self) -> int:
        return math.prod(b.span for b in self.row_blocks)

    @property
    def col_span(self) -> int:
        return math.prod(b.span for b in self.col_blocks)

    @property
    def row_primed_span(self) -> int:
        return math.prod(self.row_primed)

    @property
    def col_primed_span(self) -> int:
        return math.prod(self.col_primed)

    @property
    def row_ext_span(self) -> int:
        return self.row_span * self.row_primed_span

    @property
    def col_ext_span(self) -> int:
        return self.col_span * self.col_primed_span

    def span(self, side: str, include_primed: bool = False) -> int:
        total = math.prod(b.span for b in self.blocks(side))
        if include_primed:
            total *= math.prod(self.primed(side))
        return total


@dataclass(frozen=True)
class DigitVector:
    """Digits of one side of an index.

    blocks: one tuple of digits per block, digit 1 first.
    primed: digits over the primed bases, or None when the index was
        decomposed without its primed extension.
    """

    blocks: Tuple[Tuple[int, ...], ...]
    primed: Optional[Tuple[int, ...]] = None

    def __post_init__(self):
        object.__setattr__(self, "blocks", tuple(tuple(d) for d in self.blocks))
        if self.primed is not None:
            object.__setattr__(self, "primed", tuple(self.primed))


def decompose(value: int, spec: RadixSpec, side: str, include_primed: bool = False) -> DigitVector:
    """Split a flat index into per-block digits (and primed digits if asked).

    Block 1 is least significant and digit 1 is least significant within a
    block, so enumerating values 0, 1, 2, ... cycles digit 1 of block 1
    fastest.  Raises RangeError when value falls outside the side's span.
    """
    blocks = spec.blocks(side)
    total = spec.span(side, include_primed)
    if not 0 <= value < total:
        raise RangeError(f"index {value} outside span {total} of the {side} side")
    rem = value
    block_digits = []
    for blk in blocks:
        v = rem % blk.span
        rem //= blk.span
        digs = []
        for _ in range(blk.digits):
            digs.append(v % blk.base)
            v //= blk.base
        block_digits.append(tuple(digs))
    primed: Optional[Tuple[int, ...]] = None
    if include_primed:
        pr = []
        for base in spec.primed(side):
            pr.append(rem % base)
            rem //= base
        primed = tuple(pr)
    return DigitVector(tuple(block_digits), primed)


def compose(vec: DigitVector, spec: RadixSpec, side: str) -> int:
    """Inverse of decompose; validates digit counts and digit ranges.

    The primed part is folded in exactly when ``vec.primed`` is not None.
    """
    blocks = spec.blocks(side)
    if len(vec.blocks) != len(blocks):
        raise ShapeError(
            f"{side} side has {len(blocks)} blocks, vector has {len(vec.blocks)}"
        )
    value = 0
    scale = 1
    for pos, (blk, digs) in enumerate(zip(blocks, vec.blocks)):
        if len(digs) != blk.digits:
            raise ShapeError(
                f"{side} block {pos + 1} has {blk.digits} digits, vector has {len(digs)}"
            )
        v = 0
        place = 1
        for k, d in enumerate(digs):
            if not 0 <= d < blk.base:
                raise ShapeError(
                    f"{side} block {pos + 1} digit {k + 1} is {d}, base is {blk.base}"
                )
            v += d * place
            place *= blk.base
        value += v * scale
        scale *= blk.span
    if vec.primed is not None:
        primed_bases = spec.primed(side)
        if len(vec.primed) != len(primed_bases):
            raise ShapeError(
                f"{side} side has {len(primed_bases)} primed bases, "
                f"vector has {len(vec.primed)}"
            )
        for pos, (base, d) in enumerate(zip(primed_bases, vec.primed)):
            if not 0 <= d < base:
                raise ShapeError(
                    f"{side} primed digit {pos + 1} is {d}, base is {base}"
                )
            value += d * scale
            scale *= base
    return value


def successor_digits(value: int, bases: Sequence[int]) -> DigitVector:
    """Digits of ``value + 1`` over the given scalar bases (first fastest).

    Only used by test oracles that want carry behaviour spelled out; raises
    RangeError when value + 1 would overflow the span.
    """
    for base in bases:
        if base < 1:
            raise ShapeError(f"bases must be >= 1, got {base}")
    span = math.prod(bases)
    if not 0 <= value < span - 1:
        raise RangeError(f"value {value} has no successor inside span {span}")
    v = value + 1
    digs = []
    for base in bases:
        digs.append(v % base)
        v //= base
    return DigitVector((), tuple(digs))
