"""Cylindric loops and skew diagrams on the cylinder C_mn.

Boxes use canonical coordinates: the row is always a representative in
``1..m`` and the column is any positive integer.  Two boxes share a row
(column) of the cylinder when their rows agree mod ``m`` (columns agree
mod ``n - m``).  Wrapped boxes of a ``d = 1`` diagram therefore sit in the
top row with columns past ``n - m``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .shapes import InvalidPartition, Partition, Rect


class NotContained(ValueError):
    """The outer loop does not dominate the inner partition."""


@dataclass(frozen=True)
class LoopRows:
    rect: Rect
    d: int
    rows: tuple[int, ...]


@dataclass(frozen=True)
class CylindricSkew:
    lam: Partition
    d: int
    mu: Partition
    outer: tuple[int, ...]  # lam[d]_i for i = 1..m

    @property
    def rect(self) -> Rect:
        return self.mu.rect

    @property
    def boxes(self) -> frozenset[tuple[int, int]]:
        return frozenset(
            (i, j)
            for i in range(1, self.rect.m + 1)
            for j in range(self.mu.row(i) + 1, self.outer[i - 1] + 1)
        )

    def row_length(self, i: int) -> int:
        """Number of skew boxes in row ``i``."""
        return self.outer[i - 1] - self.mu.row(i)

    def __len__(self) -> int:
        return sum(self.outer) - self.mu.size


@dataclass(frozen=True)
class StripKind:
    vertical_r: Optional[int]
    horizontal_r: Optional[int]


def _check_shift(d: int) -> None:
    if d not in (0, 1):
        raise ValueError(f"only shifts d in {{0, 1}} are supported, got {d}")


def loop_entry(lam: Partition, k: int) -> int:
    """``l_k`` of the doubly infinite sequence ``lam[0]``."""
    m, w = lam.rect.m, lam.rect.width
    q, r = divmod(k - 1, m)
    return lam.parts[r] - q * w


def loop_rows(lam: Partition, d: int) -> LoopRows:
    """``lam[d]_i = l_{i-d} + d`` for ``i = 1..m``."""
    _check_shift(d)
    m = lam.rect.m
    rows = tuple(loop_entry(lam, i - d) + d for i in range(1, m + 1))
    return LoopRows(lam.rect, d, rows)


def loop_to_partition(rect: Rect, rows: tuple[int, ...], d: int) -> Partition:
    """Invert :func:`loop_rows`; raises :class:`InvalidPartition` if no partition fits."""
    _check_shift(d)
    if d == 0:
        return Partition(rect, tuple(rows))
    m = rect.m
    parts = tuple(rows[i] - 1 for i in range(1, m)) + (rows[0] - rect.width - 1,)
    return Partition(rect, parts)


def cylindric_skew(lam: Partition, d: int, mu: Partition) -> CylindricSkew:
    if lam.rect != mu.rect:
        raise ValueError("lam and mu must live in the same rectangle")
    outer = loop_rows(lam, d).rows
    for i, (a, b) in enumerate(zip(outer, mu.parts), start=1):
        if a < b:
            raise NotContained(f"lam[{d}]_{i} = {a} < mu_{i} = {b}")
    return CylindricSkew(lam, d, mu, outer)


def classify_strip(s: CylindricSkew) -> StripKind:
    boxes = s.boxes
    count = len(boxes)
    rows = {i for i, _ in boxes}
    w = s.rect.width
    cols = {(j - 1) % w for _, j in boxes}
    return StripKind(
        count if len(rows) == count else None,
        count if len(cols) == count else None,
    )


def try_skew(lam: Partition, d: int, mu: Partition) -> Optional[CylindricSkew]:
    try:
        return cylindric_skew(lam, d, mu)
    except NotContained:
        return None


__all__ = [
    "CylindricSkew",
    "InvalidPartition",
    "LoopRows",
    "NotContained",
    "StripKind",
    "classify_strip",
    "cylindric_skew",
    "loop_entry",
    "loop_rows",
    "loop_to_partition",
    "try_skew",
]
