"""Localizations of Schubert classes at torus-fixed points.

``xi(gamma, eta)`` is the factorial Schur polynomial ``s_gamma(x | t)`` with
``x_i -> t_{pi_eta(i)}``, where ``pi_eta`` lists the up-steps of ``eta``
(bottom-up) followed by its side-steps.  The SSYT sum is evaluated column by
column: a state is the strictly increasing filling of one column, and rows
must weakly increase from one column to the next.  ``factorial_schur_naive``
keeps the literal tableau sum for cross-checking.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, combinations_with_replacement
from typing import Callable, Iterator, Mapping, Optional, Sequence

from .polyring import TPoly, linear_diff, linear_product
from .shapes import (
    InvalidPartition,
    Partition,
    Rect,
    boundary_steps,
    conjugate,
    grassmann_perm,
    make_partition,
)


class NotVerticalStrip(ValueError):
    pass


@dataclass(frozen=True)
class SSYT:
    shape: tuple[int, ...]
    filling: Mapping[tuple[int, int], int]

    def __hash__(self):
        return hash((self.shape, tuple(sorted(self.filling.items()))))

    def columns(self) -> list[tuple[int, ...]]:
        cols = conjugate(self.shape)
        return [tuple(self.filling[(i, j)] for i in range(1, h + 1)) for j, h in enumerate(cols, 1)]


@dataclass(frozen=True)
class XSpec:
    """The substitution ``x_i -> values[i-1]``."""

    values: tuple[TPoly, ...]

    @classmethod
    def grassmann(cls, eta: Partition) -> "XSpec":
        return cls(tuple(TPoly.var(i) for i in grassmann_perm(eta)[: eta.rect.m]))

    @classmethod
    def identity(cls, size: int) -> "XSpec":
        return cls(tuple(TPoly.var(i) for i in range(1, size + 1)))

    def __len__(self) -> int:
        return len(self.values)


def _shape_parts(shape) -> tuple[int, ...]:
    parts = shape.parts if isinstance(shape, Partition) else tuple(shape)
    return tuple(x for x in parts if x)


# -- tableaux ----------------------------------------------------------------


def _column_chains(cols: Sequence[int], alphabet: int) -> Iterator[list[tuple[int, ...]]]:
    """Sequences of column fillings forming an SSYT with the given column heights."""

    def rec(j, prev):
        if j == len(cols):
            yield []
            return
        for c in combinations(range(1, alphabet + 1), cols[j]):
            if prev is not None and any(c[i] < prev[i] for i in range(len(c))):
                continue
            for rest in rec(j + 1, c):
                yield [c] + rest

    yield from rec(0, None)


def enumerate_ssyt(shape, alphabet: int) -> list[SSYT]:
    """All semistandard tableaux of ``shape`` with entries in ``1..alphabet``."""
    parts = _shape_parts(shape)
    if len(parts) > alphabet:
        return []
    cols = conjugate(parts)
    out = []
    for chain in _column_chains(cols, alphabet):
        filling = {(i, j): chain[j - 1][i - 1] for j, h in enumerate(cols, 1) for i in range(1, h + 1)}
        out.append(SSYT(parts, filling))
    return out


# -- factorial Schur polynomials ---------------------------------------------


def _schur_dp(cols: Sequence[int], alphabet: int, weight: Callable, zero, one):
    """Sum over SSYT of the product of per-column weights ``weight(j, filling)``."""
    prev = {(): one}
    for j, h in enumerate(cols, 1):
        proj: dict = {}
        for c, v in prev.items():
            key = c[:h]
            proj[key] = proj[key] + v if key in proj else v
        new = {}
        for c in combinations(range(1, alphabet + 1), h):
            acc = zero
            for key, v in proj.items():
                if all(key[i] <= c[i] for i in range(len(key))):
                    acc = acc + v
            if acc:
                w = weight(j, c)
                if w:
                    new[c] = acc * w
        prev = new
        if not prev:
            return zero
    total = zero
    for v in prev.values():
        total = total + v
    return total


def _t(i: int, tmap) -> TPoly:
    return TPoly.var(i) if tmap is None else tmap(i)


def factorial_schur(gamma, x: XSpec, tmap: Optional[Callable[[int], TPoly]] = None) -> TPoly:
    """``s_gamma(x | t)`` with ``x`` substituted; ``tmap`` optionally renames ``t_i``."""
    parts = _shape_parts(gamma)
    m = len(x)
    if len(parts) > m:
        return TPoly()
    if not parts:
        return TPoly.const(1)

    def weight(j, c):
        out = TPoly.const(1)
        for i, a in enumerate(c, 1):
            out = out * (x.values[a - 1] - _t(a + j - i, tmap))
        return out

    return _schur_dp(conjugate(parts), m, weight, TPoly(), TPoly.const(1))


def factorial_schur_naive(gamma, x: XSpec, tmap: Optional[Callable[[int], TPoly]] = None) -> TPoly:
    total = TPoly()
    for T in enumerate_ssyt(gamma, len(x)):
        term = TPoly.const(1)
        for (i, j), a in T.filling.items():
            term = term * (x.values[a - 1] - _t(a + j - i, tmap))
        total = total + term
    return total


# -- localizations -----------------------------------------------------------


@lru_cache(maxsize=1 << 16)
def _xi_cached(parts: tuple[int, ...], perm: tuple[int, ...], m: int) -> TPoly:
    if not parts:
        return TPoly.const(1)
    if len(parts) > m:
        return TPoly()

    def weight(j, c):
        return linear_product((perm[a - 1], a + j - i) for i, a in enumerate(c, 1))

    return _schur_dp(conjugate(parts), m, weight, TPoly(), TPoly.const(1))


def xi(gamma: Partition, eta: Partition, use_support: bool = True) -> TPoly:
    """``xi^gamma(eta) = s_gamma(x_{pi_eta} | t)``.

    With ``use_support`` the tableau sum is skipped when ``gamma`` is not
    contained in ``eta``, where it vanishes.
    """
    if gamma.rect.m != eta.rect.m:
        raise ValueError("gamma and eta need the same number of rows")
    if use_support and not eta.contains(gamma):
        return TPoly()
    return _xi_cached(gamma.nonzero, grassmann_perm(eta), eta.rect.m)


def xi_value(gamma: Partition, eta: Partition, point: Sequence[int]) -> int:
    """``xi^gamma(eta)`` evaluated at ``t_i = point[i-1]``, in exact integers."""
    if not eta.contains(gamma):
        return 0
    return _xi_value_cached(gamma.nonzero, grassmann_perm(eta), eta.rect.m, tuple(point))


@lru_cache(maxsize=1 << 20)
def _xi_value_cached(parts: tuple[int, ...], perm: tuple[int, ...], m: int, point: tuple[int, ...]) -> int:
    if not parts:
        return 1
    if len(parts) > m:
        return 0

    def weight(j, c):
        out = 1
        for i, a in enumerate(c, 1):
            out *= point[perm[a - 1] - 1] - point[a + j - i - 1]
        return out

    return _schur_dp(conjugate(parts), m, weight, 0, 1)


def xi_diag_factors(eta: Partition) -> list[tuple[int, int]]:
    """Linear factors ``(a, b)`` meaning ``t_a - t_b`` whose product is ``xi^eta(eta)``."""
    steps = boundary_steps(eta)
    m = eta.rect.m
    return [
        (steps.up[m - i], steps.side[j - 1])
        for i in range(1, m + 1)
        for j in range(1, eta.row(i) + 1)
    ]


def xi_diag(eta: Partition) -> TPoly:
    return linear_product(xi_diag_factors(eta))


def excited_diagrams(gamma: Partition, eta: Partition) -> list[frozenset]:
    """All excited diagrams of ``gamma`` inside ``eta``."""
    if not eta.contains(gamma):
        return []
    inside = lambda i, j: 1 <= i <= eta.rect.m and 1 <= j <= eta.row(i)
    start = frozenset((i, j) for i in range(1, gamma.rect.m + 1) for j in range(1, gamma.row(i) + 1))
    seen = {start}
    todo = [start]
    while todo:
        D = todo.pop()
        for i, j in D:
            if (
                inside(i + 1, j + 1)
                and (i, j + 1) not in D
                and (i + 1, j) not in D
                and (i + 1, j + 1) not in D
            ):
                E = (D - {(i, j)}) | {(i + 1, j + 1)}
                if E not in seen:
                    seen.add(E)
                    todo.append(E)
    return sorted(seen, key=sorted)


def xi_column_excited(k: int, eta: Partition) -> TPoly:
    """``xi^{(1)^k}(eta)`` as a sum over excited diagrams of the column."""
    gamma = make_partition(eta.rect, [1] * k) if k <= eta.rect.m else None
    if gamma is None:
        return TPoly()
    steps = boundary_steps(eta)
    m = eta.rect.m
    total = TPoly()
    for D in excited_diagrams(gamma, eta):
        total = total + linear_product((steps.up[m - i], steps.side[j - 1]) for i, j in sorted(D))
    return total


# -- join-and-cut and Psi ----------------------------------------------------


def _strip_rows(lam_parts: Sequence[int], mu: Partition) -> list[int]:
    m = mu.rect.m
    if len(lam_parts) != m:
        raise NotVerticalStrip("lam and mu need the same number of rows")
    diffs = [lam_parts[i] - mu.parts[i] for i in range(m)]
    if any(d not in (0, 1) for d in diffs):
        raise NotVerticalStrip(f"{tuple(lam_parts)}/{mu.parts} is not a vertical strip")
    return [i for i in range(1, m + 1) if diffs[i - 1] == 0]


def join_and_cut(lam: Partition, mu: Partition) -> Optional[Partition]:
    """``lam_mu`` in ``Rect(m - r, n + 1)``; None when ``r = m``.

    ``lam`` lives in ``Rect(m, n + 1)`` (or any rectangle with ``m`` rows) and
    ``lam / mu`` must be a vertical ``r``-strip.
    """
    same = _strip_rows(lam.parts, mu)
    m = mu.rect.m
    r = m - len(same)
    if r == m:
        return None
    parts = tuple(mu.row(i) - i + r + j for j, i in enumerate(same, 1))
    return Partition(Rect(m - r, mu.rect.n + 1), parts)


def psi_monomial(eta: Partition, iota: Sequence[int], j: int) -> TPoly:
    """``Psi_eta(iota, j) = t_{u_{iota_j + j - 1}} - t_{iota_j}`` with bottom-up up-steps."""
    up = boundary_steps(eta).up
    return linear_diff(up[iota[j - 1] + j - 2], iota[j - 1])


def index_set(mprime: int, pprime: int) -> list[tuple[int, ...]]:
    """Weakly increasing vectors in ``[m' - p' + 1]^{p'}``."""
    return list(combinations_with_replacement(range(1, mprime - pprime + 2), pprime))


def psi(eta: Partition, pprime: int) -> TPoly:
    mprime = eta.rect.m
    if not 0 <= pprime <= mprime:
        raise ValueError(f"p' must lie in [0, {mprime}], got {pprime}")
    up = boundary_steps(eta).up
    total = TPoly()
    for iota in index_set(mprime, pprime):
        total = total + linear_product((up[a + j - 2], a) for j, a in enumerate(iota, 1))
    return total


def _column_in(rect: Rect, k: int) -> Partition:
    return make_partition(rect, [1] * k)


def huangli_column_pieri(p: int, mu: Partition) -> dict[Partition, TPoly]:
    """Classical equivariant ``sigma_{(1)^p} sigma_mu`` expanded over ``P_{m, n+1}``."""
    from .pieri import InvalidP

    rect = mu.rect
    m = rect.m
    if not 1 <= p <= m:
        raise InvalidP(f"p must lie in [1, {m}], got {p}")
    wide = Rect(m, rect.n + 1)
    out = {}
    for r in range(0, p + 1):
        for rows in combinations(range(1, m + 1), r):
            parts = list(mu.parts)
            for i in rows:
                parts[i - 1] += 1
            try:
                lam = Partition(wide, tuple(parts))
            except InvalidPartition:
                continue
            eta = join_and_cut(lam, mu)
            if eta is None:
                coeff = TPoly.const(1) if p == r else TPoly()
            else:
                coeff = xi(_column_in(eta.rect, p - r), eta)
            if coeff:
                out[lam] = coeff
    return out


__all__ = [
    "NotVerticalStrip",
    "SSYT",
    "XSpec",
    "enumerate_ssyt",
    "excited_diagrams",
    "factorial_schur",
    "factorial_schur_naive",
    "huangli_column_pieri",
    "index_set",
    "join_and_cut",
    "psi",
    "psi_monomial",
    "xi",
    "xi_column_excited",
    "xi_diag",
    "xi_diag_factors",
    "xi_value",
]
