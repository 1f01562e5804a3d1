"""Equivariant quantum Pieri products on cylindric shapes.

Multiplying ``sigma_mu`` by a column class ``sigma_{(1)^p}`` sums, over every
cylindric vertical strip ``lam/d/mu`` with at most ``p`` boxes, the products of
addable-box weights over all ways of padding the strip to ``p`` boxes with
row-end boxes of ``mu``.  Row classes are handled by transposition plus the
level-rank weight involution, with a direct horizontal-strip route kept
alongside as an independent check.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .cylinder import (
    CylindricSkew,
    classify_strip,
    cylindric_skew,
    loop_to_partition,
    try_skew,
)
from .expansion import Expansion, Factored
from .polyring import TPoly, linear_diff, linear_product
from .shapes import (
    InvalidPartition,
    Partition,
    Rect,
    conjugate,
    enumerate_partitions,
    make_partition,
    transpose,
    up_step,
)


class InvalidP(ValueError):
    pass


class InvalidK(ValueError):
    pass


@dataclass(frozen=True)
class AddableBox:
    """A row-end box of ``mu`` padded onto a vertical strip.

    ``u`` is its up-step, ``r`` its row counted from the bottom, ``b`` the
    number of strip boxes (skew or added) in lower rows.
    """

    row: int
    col: int
    u: int = 0
    r: int = 0
    b: int = 0


@dataclass(frozen=True)
class HAddableBox:
    """A column-end box of ``mu`` padded onto a horizontal strip.

    ``s`` is its side-step, ``c`` its column counted from the right, ``rt``
    the number of strip boxes in columns further right.
    """

    row: int
    col: int
    s: int = 0
    c: int = 0
    rt: int = 0


@dataclass(frozen=True)
class Extension:
    skew: CylindricSkew
    added: tuple


def wt_v(alpha: AddableBox) -> TPoly:
    return linear_diff(alpha.u, alpha.r - alpha.b)


def wt_v_pair(alpha: AddableBox) -> tuple[int, int]:
    return (alpha.u, alpha.r - alpha.b)


def wt_h(alpha: HAddableBox, n: int) -> TPoly:
    return linear_diff(*wt_h_pair(alpha, n))


def wt_h_pair(alpha: HAddableBox, n: int) -> tuple[int, int]:
    return (n + 1 - (alpha.c - alpha.rt), alpha.s)


# -- vertical strips ---------------------------------------------------------


def addable_candidates(s: CylindricSkew) -> list[AddableBox]:
    """Row-end boxes ``(i, mu_i)`` of rows the strip leaves untouched."""
    if classify_strip(s).vertical_r is None:
        raise ValueError("addable boxes are defined for vertical strips only")
    return [
        AddableBox(i, s.mu.row(i))
        for i in range(1, s.rect.m + 1)
        if s.row_length(i) == 0 and s.mu.row(i) >= 1
    ]


def _fill_vertical(s: CylindricSkew, rows: Iterable[int]) -> tuple[AddableBox, ...]:
    m = s.rect.m
    occupied = [s.row_length(i) > 0 for i in range(1, m + 1)]
    chosen = set(rows)
    for i in chosen:
        occupied[i - 1] = True
    out = []
    for i in sorted(chosen):
        below = sum(occupied[i:])
        out.append(AddableBox(i, s.mu.row(i), up_step(s.mu, i), m - i + 1, below))
    return tuple(out)


def extensions(s: CylindricSkew, p: int) -> list[Extension]:
    """Every way to pad the vertical strip ``s`` to a vertical ``p``-strip."""
    r = len(s)
    if r > p:
        return []
    cands = [a.row for a in addable_candidates(s)]
    return [Extension(s, _fill_vertical(s, rows)) for rows in combinations(cands, p - r)]


def _vertical_factored(s: CylindricSkew, p: int) -> Factored:
    return tuple(tuple(wt_v_pair(a) for a in ext.added) for ext in extensions(s, p))


def vertical_targets(mu: Partition, max_r: int):
    """``(lam, d, skew)`` for every cylindric vertical strip ``lam/d/mu`` of size <= max_r."""
    rect = mu.rect
    m = rect.m
    for d in (0, 1):
        for r in range(0, max_r + 1):
            for rows in combinations(range(1, m + 1), r):
                outer = list(mu.parts)
                for i in rows:
                    outer[i - 1] += 1
                try:
                    lam = loop_to_partition(rect, tuple(outer), d)
                except InvalidPartition:
                    continue
                yield lam, d, cylindric_skew(lam, d, mu)


def column_pieri(p: int, mu: Partition) -> Expansion:
    """``sigma_{(1)^p} * sigma_mu`` in the equivariant quantum cohomology of Gr(m, n)."""
    rect = mu.rect
    if not 1 <= p <= rect.m:
        raise InvalidP(f"p must lie in [1, {rect.m}], got {p}")
    terms, factored = {}, {}
    for lam, d, skew in vertical_targets(mu, p):
        fac = _vertical_factored(skew, p)
        if not fac:
            continue
        poly = TPoly()
        for prod in fac:
            poly = poly + linear_product(prod)
        if poly:
            terms[(lam, d)] = poly
            factored[(lam, d)] = fac
    return Expansion(rect, terms, factored)


# -- horizontal strips -------------------------------------------------------


def h_addable_candidates(s: CylindricSkew) -> list[HAddableBox]:
    """Column-end boxes ``(mu'_c, c)`` of columns whose residue the strip misses."""
    if classify_strip(s).horizontal_r is None:
        raise ValueError("horizontal addable boxes are defined for horizontal strips only")
    w = s.rect.width
    hit = {(j - 1) % w + 1 for _, j in s.boxes}
    cols = conjugate(s.mu.parts) + (0,) * (w - (s.mu.row(1) if s.rect.m else 0))
    return [HAddableBox(cols[c - 1], c) for c in range(1, w + 1) if c not in hit and cols[c - 1] >= 1]


def _fill_horizontal(s: CylindricSkew, cols: Iterable[int]) -> tuple[HAddableBox, ...]:
    rect = s.rect
    w, m = rect.width, rect.m
    occupied = [0] * (w + 1)
    for _, j in s.boxes:
        occupied[(j - 1) % w + 1] += 1
    chosen = set(cols)
    for c in chosen:
        occupied[c] += 1
    heights = conjugate(s.mu.parts)
    out = []
    for c in sorted(chosen):
        h = heights[c - 1]
        right = sum(occupied[c + 1:])
        out.append(HAddableBox(h, c, c + (m - h), w - c + 1, right))
    return tuple(out)


def h_extensions(s: CylindricSkew, k: int) -> list[Extension]:
    r = len(s)
    if r > k:
        return []
    cands = [a.col for a in h_addable_candidates(s)]
    return [Extension(s, _fill_horizontal(s, cols)) for cols in combinations(cands, k - r)]


def row_pieri_direct(k: int, mu: Partition) -> Expansion:
    """``sigma_{(k)} * sigma_mu`` straight from horizontal strips and their weights."""
    rect = mu.rect
    if not 1 <= k <= rect.width:
        raise InvalidK(f"k must lie in [1, {rect.width}], got {k}")
    n = rect.n
    terms, factored = {}, {}
    for lam in enumerate_partitions(rect):
        for d in (0, 1):
            s = try_skew(lam, d, mu)
            if s is None or len(s) > k or classify_strip(s).horizontal_r is None:
                continue
            fac = tuple(tuple(wt_h_pair(a, n) for a in ext.added) for ext in h_extensions(s, k))
            poly = TPoly()
            for prod in fac:
                poly = poly + linear_product(prod)
            if poly:
                terms[(lam, d)] = poly
                factored[(lam, d)] = fac
    return Expansion(rect, terms, factored)


def levelrank_pair(pair: tuple[int, int], n: int) -> tuple[int, int]:
    """Image of ``t_a - t_b`` under ``t_i -> -t_{n+1-i}``."""
    a, b = pair
    return (n + 1 - b, n + 1 - a)


def row_pieri(k: int, mu: Partition) -> Expansion:
    """``sigma_{(k)} * sigma_mu`` via the transposed column rule."""
    rect = mu.rect
    if not 1 <= k <= rect.width:
        raise InvalidK(f"k must lie in [1, {rect.width}], got {k}")
    n = rect.n
    dual = column_pieri(k, transpose(mu))
    terms, factored = {}, {}
    for (lam_t, d), fac in dual.factored.items():
        key = (transpose(lam_t), d)
        fac2 = tuple(tuple(levelrank_pair(pr, n) for pr in prod) for prod in fac)
        factored[key] = fac2
        poly = TPoly()
        for prod in fac2:
            poly = poly + linear_product(prod)
        terms[key] = poly
    return Expansion(rect, terms, factored)


def pieri(size: int, mu: Partition, shape: str = "column") -> Expansion:
    if shape == "column":
        return column_pieri(size, mu)
    if shape == "row":
        return row_pieri(size, mu)
    raise ValueError(f"shape must be 'column' or 'row', got {shape!r}")


def pieri_word(word: Iterable[tuple[str, int]], mu: Partition) -> Expansion:
    """Apply ``pieri(size, ., shape)`` for each ``(shape, size)`` in turn, right to left.

    Coefficients multiply and q-degrees add, so ``d`` may exceed 1 here.
    """
    rect = mu.rect
    current = {(mu, 0): TPoly.const(1)}
    for shape, size in reversed(list(word)):
        nxt: dict = {}
        for (lam, d), c in current.items():
            for (nu, e), coeff in pieri(size, lam, shape).terms.items():
                key = (nu, d + e)
                term = c * coeff
                nxt[key] = nxt[key] + term if key in nxt else term
        current = {k: v for k, v in nxt.items() if v}
    return Expansion(rect, current)


def postnikov_pieri(size: int, mu: Partition, shape: str = "column") -> dict:
    """Non-equivariant rule: ``{(lam, d): 1}`` over full cylindric strips."""
    rect = mu.rect
    if shape == "column" and not 1 <= size <= rect.m:
        raise InvalidP(f"p must lie in [1, {rect.m}], got {size}")
    if shape == "row" and not 1 <= size <= rect.width:
        raise InvalidK(f"k must lie in [1, {rect.width}], got {size}")
    out = {}
    for lam in enumerate_partitions(rect):
        for d in (0, 1):
            s = try_skew(lam, d, mu)
            if s is None:
                continue
            kind = classify_strip(s)
            r = kind.vertical_r if shape == "column" else kind.horizontal_r
            if r == size:
                out[(lam, d)] = 1
    return out


__all__ = [
    "AddableBox",
    "Extension",
    "HAddableBox",
    "InvalidK",
    "InvalidP",
    "addable_candidates",
    "column_pieri",
    "extensions",
    "h_addable_candidates",
    "h_extensions",
    "pieri",
    "pieri_word",
    "postnikov_pieri",
    "row_pieri",
    "row_pieri_direct",
    "vertical_targets",
    "wt_h",
    "wt_v",
]
