"""Partitions in a rectangle, boundary paths, and n-core reduction.

Rows are indexed top-down ``1..m`` wherever a box coordinate appears; the
bottom-up counts used by up-step numbering are derived on demand.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb
from operator import ge
from typing import Iterable, Sequence

DEFAULT_CAP = 10**6


class InvalidPartition(ValueError):
    pass


class TooLarge(RuntimeError):
    """An enumeration would exceed its configured size cap."""


@dataclass(frozen=True, order=True)
class Rect:
    """The ``m x (n - m)`` rectangle indexing Schubert classes of Gr(m, n)."""

    m: int
    n: int

    def __post_init__(self):
        if not (1 <= self.m < self.n):
            raise ValueError(f"need 1 <= m < n, got m={self.m}, n={self.n}")

    @property
    def width(self) -> int:
        return self.n - self.m

    def transpose(self) -> "Rect":
        return Rect(self.n - self.m, self.n)

    def to_json(self) -> dict:
        return {"m": self.m, "n": self.n}


@dataclass(frozen=True)
class Partition:
    rect: Rect
    parts: tuple[int, ...]

    def __post_init__(self):
        p = self.parts
        m, w = self.rect.m, self.rect.width
        if len(p) != m:
            raise InvalidPartition(f"{p} must have exactly {m} parts")
        if any(x < 0 for x in p):
            raise InvalidPartition(f"{p} has a negative part")
        if any(p[i] < p[i + 1] for i in range(m - 1)):
            raise InvalidPartition(f"{p} is not weakly decreasing")
        if p and p[0] > w:
            raise InvalidPartition(f"{p} does not fit in a {m}x{w} rectangle")

    def __len__(self) -> int:
        return len(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __iter__(self):
        return iter(self.parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def nonzero(self) -> tuple[int, ...]:
        return tuple(x for x in self.parts if x)

    def row(self, i: int) -> int:
        """Part in row ``i`` (1-based, top-down)."""
        return self.parts[i - 1]

    def contains(self, other: "Partition | Sequence[int]") -> bool:
        parts = other.parts if isinstance(other, Partition) else tuple(other)
        if len(parts) > len(self.parts):
            if any(parts[len(self.parts):]):
                return False
            parts = parts[: len(self.parts)]
        return all(map(ge, self.parts, parts))

    def embed(self, rect: Rect) -> "Partition":
        """The same diagram viewed in another rectangle with the same row count."""
        if rect.m != self.rect.m:
            raise ValueError("embedding must preserve the number of rows")
        return Partition(rect, self.parts)

    def sort_key(self):
        return (self.size, tuple(-x for x in self.parts))

    def to_json(self) -> list[int]:
        return list(self.nonzero)

    def __str__(self) -> str:
        nz = self.nonzero
        return "(" + ",".join(map(str, nz)) + ")" if nz else "()"


@dataclass(frozen=True)
class WidePartition:
    """A weakly decreasing length-``m`` vector with no bound on the parts."""

    parts: tuple[int, ...]

    def __post_init__(self):
        p = self.parts
        if any(x < 0 for x in p) or any(p[i] < p[i + 1] for i in range(len(p) - 1)):
            raise InvalidPartition(f"{p} is not a partition")

    @property
    def m(self) -> int:
        return len(self.parts)

    @property
    def size(self) -> int:
        return sum(self.parts)


@dataclass(frozen=True)
class BoundarySteps:
    up: tuple[int, ...]
    side: tuple[int, ...]


@dataclass(frozen=True)
class RimHookReduction:
    core: Partition | None  # None means the class vanishes
    hooks_removed: int
    heights: tuple[int, ...]
    sign: int

    @property
    def vanishes(self) -> bool:
        return self.core is None


def make_partition(rect: Rect, parts: Iterable[int]) -> Partition:
    parts = [int(x) for x in parts]
    if len(parts) > rect.m:
        if any(parts[rect.m:]):
            raise InvalidPartition(f"{parts} has more than {rect.m} nonzero rows")
        parts = parts[: rect.m]
    parts += [0] * (rect.m - len(parts))
    return Partition(rect, tuple(parts))


def empty(rect: Rect) -> Partition:
    return Partition(rect, (0,) * rect.m)


def column(rect: Rect, p: int) -> Partition:
    """The column shape ``(1)^p``."""
    return make_partition(rect, [1] * p)


def row(rect: Rect, k: int) -> Partition:
    """The row shape ``(k)``."""
    return make_partition(rect, [k])


def conjugate(parts: Sequence[int]) -> tuple[int, ...]:
    top = parts[0] if parts else 0
    return tuple(sum(1 for x in parts if x > j) for j in range(top))


def transpose(lam: Partition) -> Partition:
    """Conjugate diagram, living in ``Rect(n - m, n)``."""
    rect = lam.rect.transpose()
    return make_partition(rect, conjugate(lam.parts))


@lru_cache(maxsize=1 << 16)
def boundary_steps(mu: Partition) -> BoundarySteps:
    """Number the edges of the boundary path of ``mu`` from the lower-left corner."""
    m, w = mu.rect.m, mu.rect.width
    up, side = [], []
    step = 0
    col = 0
    for i in range(m, 0, -1):
        while col < mu.row(i):
            step += 1
            col += 1
            side.append(step)
        step += 1
        up.append(step)
    while col < w:
        step += 1
        col += 1
        side.append(step)
    return BoundarySteps(tuple(up), tuple(side))


def up_step(mu: Partition, i: int) -> int:
    """Index of the vertical boundary edge closing row ``i`` (top-down)."""
    return mu.row(i) + mu.rect.m - i + 1


@lru_cache(maxsize=1 << 16)
def grassmann_perm(eta: Partition) -> tuple[int, ...]:
    """Window ``[u_1 .. u_m | s_1 .. s_{n-m}]`` of the Grassmann permutation."""
    steps = boundary_steps(eta)
    return steps.up + steps.side


def from_up_steps(rect: Rect, up: Iterable[int]) -> Partition:
    """Inverse of :func:`boundary_steps`: the partition with the given up-steps."""
    ups = sorted(up)
    if len(ups) != rect.m or len(set(ups)) != rect.m or ups[0] < 1 or ups[-1] > rect.n:
        raise InvalidPartition(f"{ups} is not an m-subset of [n]")
    # the up-step of bottom-up row k sits after u_k - k side-steps
    parts = [ups[rect.m - i] - (rect.m - i + 1) for i in range(1, rect.m + 1)]
    return Partition(rect, tuple(parts))


def enumerate_partitions(rect: Rect, cap: int = DEFAULT_CAP) -> list[Partition]:
    """All of ``P_mn``, by size then lexicographically descending."""
    total = comb(rect.n, rect.m)
    if total > cap:
        raise TooLarge(f"binomial({rect.n},{rect.m}) = {total} exceeds cap {cap}")
    out = [from_up_steps(rect, ups) for ups in combinations(range(1, rect.n + 1), rect.m)]
    out.sort(key=Partition.sort_key)
    return out


def beta_numbers(parts: Sequence[int]) -> list[int]:
    m = len(parts)
    return [parts[i] + m - 1 - i for i in range(m)]


def _from_beta(betas: Iterable[int], m: int) -> tuple[int, ...]:
    b = sorted(betas, reverse=True)
    return tuple(b[i] - (m - 1 - i) for i in range(m))


def removable_hooks(betas: Sequence[int], n: int) -> list[tuple[int, int]]:
    """``(bead, height)`` for every n-rim hook removable from the bead set."""
    present = set(betas)
    out = []
    for b in betas:
        if b - n >= 0 and (b - n) not in present:
            height = 1 + sum(1 for c in betas if b - n < c < b)
            out.append((b, height))
    return out


def n_core_reduce(gamma: WidePartition | Sequence[int], n: int, target: Rect) -> RimHookReduction:
    """Strip all n-rim hooks from ``gamma`` via beta-numbers.

    Hooks are removed largest bead first; the core, hook count and sign do not
    depend on that choice.
    """
    parts = tuple(gamma.parts if isinstance(gamma, WidePartition) else gamma)
    m = target.m
    if len(parts) > m:
        if any(parts[m:]):
            raise InvalidPartition(f"{parts} has more than {m} rows")
        parts = parts[:m]
    parts = parts + (0,) * (m - len(parts))
    WidePartition(parts)
    betas = beta_numbers(parts)
    heights = []
    while True:
        moves = removable_hooks(betas, n)
        if not moves:
            break
        b, h = max(moves)
        betas[betas.index(b)] = b - n
        heights.append(h)
    core = _from_beta(betas, m)
    sign = 1
    for h in heights:
        if (h - m) % 2:
            sign = -sign
    fits = core[0] <= target.width if core else True
    return RimHookReduction(
        Partition(target, core) if fits else None, len(heights), tuple(heights), sign
    )
