"""Brute-force products from fixed-point localizations, and cross-check drivers.

The classical equivariant product ``sigma_lam sigma_mu = sum c^nu sigma_nu`` is
recovered from the pointwise identity ``xi^lam(eta) xi^mu(eta) =
sum_nu c^nu xi^nu(eta)``, which is triangular because ``xi^nu(eta)`` vanishes
unless ``nu`` is contained in ``eta``.  Quantum products come from a wide
ambient ``Rect(m, 2n - 1)`` followed by the rim hook reduction.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import comb
from typing import Optional

from .expansion import Expansion
from .localization import huangli_column_pieri, xi, xi_diag_factors, xi_value
from .pieri import column_pieri, row_pieri, row_pieri_direct
from .polyring import NonzeroRemainder, TPoly, divide_linear, substitute_indices
from .rimhook import quantumize
from .shapes import (
    DEFAULT_CAP,
    Partition,
    Rect,
    TooLarge,
    column,
    enumerate_partitions,
    make_partition,
    row,
    transpose,
)

QUANTUM_CAP = 10**4

CONSISTENCY_MODES = ("symbolic", "sampled", "none", "auto")
# Above this many variables "auto" checks the pointwise identity numerically.
SYMBOLIC_CHECK_MAX_N = 9


class Mismatch(AssertionError):
    def __init__(self, message: str, nu=None, d=None):
        super().__init__(message)
        self.nu = nu
        self.d = d


def _exact_divide(rhs: TPoly, nu: Partition) -> TPoly:
    out = rhs
    for a, b in xi_diag_factors(nu):
        out = divide_linear(out, a, b)
    return out


def _union_contains(nu: Partition, lam: Partition, mu: Partition) -> bool:
    return nu.contains(lam) and nu.contains(mu)


def gkm_classical_product(
    lam: Partition,
    mu: Partition,
    ambient: Rect,
    cap: int = DEFAULT_CAP,
    consistency: str = "auto",
    seed: int = 0,
    shortcuts: bool = True,
) -> dict[Partition, TPoly]:
    """Classical equivariant product in the cohomology of ``Gr(ambient.m, ambient.n)``.

    Fixed points are processed by size, then lexicographically.  Only ``nu``
    containing both factors with ``|nu| <= |lam| + |mu|`` are solved for; every
    other fixed point is then checked against the pointwise identity, either
    symbolically or by exact integer evaluation at a seeded random point.
    Raises :class:`NonzeroRemainder` if a division is inexact and
    :class:`Mismatch` if the check fails.

    With ``shortcuts=False`` every fixed point is solved for with the full
    tableau sums, so the support of the result is an output, not an input.
    """
    if consistency not in CONSISTENCY_MODES:
        raise ValueError(f"consistency must be one of {CONSISTENCY_MODES}")
    if consistency == "auto":
        consistency = "symbolic" if ambient.n <= SYMBOLIC_CHECK_MAX_N else "sampled"
    if lam.rect.m != ambient.m or mu.rect.m != ambient.m:
        raise ValueError("factors and ambient need the same number of rows")
    L = lam.embed(ambient)
    M = mu.embed(ambient)
    top = L.size + M.size
    nus = enumerate_partitions(ambient, cap)
    coeffs: dict[Partition, TPoly] = {}
    rest = []
    for nu in nus:
        if shortcuts and (nu.size > top or not _union_contains(nu, L, M)):
            rest.append(nu)
            continue
        rhs = xi(L, nu, use_support=shortcuts) * xi(M, nu, use_support=shortcuts)
        for kappa, c in coeffs.items():
            if kappa != nu and nu.contains(kappa):
                rhs = rhs - c * xi(kappa, nu, use_support=shortcuts)
        if not rhs:
            continue
        try:
            coeffs[nu] = _exact_divide(rhs, nu)
        except NonzeroRemainder as exc:
            raise NonzeroRemainder(f"inexact division at fixed point {nu}") from exc
    if consistency == "symbolic":
        for eta in rest:
            if not _union_contains(eta, L, M):
                continue
            lhs = xi(L, eta) * xi(M, eta)
            got = TPoly()
            for kappa, c in coeffs.items():
                if eta.contains(kappa):
                    got = got + c * xi(kappa, eta)
            if lhs != got:
                raise Mismatch(f"pointwise identity fails at {eta}", nu=eta)
    elif consistency == "sampled":
        rng = random.Random(seed)
        point = [rng.randrange(-(10**9), 10**9) for _ in range(ambient.n)]
        values = {kappa: c.evaluate(point) for kappa, c in coeffs.items()}
        for eta in rest:
            if not _union_contains(eta, L, M):
                continue
            lhs = xi_value(L, eta, point) * xi_value(M, eta, point)
            got = sum(v * xi_value(kappa, eta, point) for kappa, v in values.items() if eta.contains(kappa))
            if lhs != got:
                raise Mismatch(f"pointwise identity fails at {eta}", nu=eta)
    return coeffs


def quantum_ambient(rect: Rect) -> Rect:
    return Rect(rect.m, 2 * rect.n - 1)


def eq_quantum_product(
    lam: Partition,
    mu: Partition,
    cap: int = QUANTUM_CAP,
    consistency: str = "auto",
) -> Expansion:
    """``sigma_lam * sigma_mu`` in the equivariant quantum cohomology of Gr(m, n)."""
    rect = mu.rect
    if lam.rect != rect:
        raise ValueError("factors must live in the same rectangle")
    ambient = quantum_ambient(rect)
    size = comb(ambient.n, ambient.m)
    if size > cap:
        raise TooLarge(f"binomial({ambient.n},{ambient.m}) = {size} exceeds cap {cap}")
    classical = gkm_classical_product(lam, mu, ambient, cap=cap, consistency=consistency)
    return quantumize(classical, rect)


def levelrank_image(e: Expansion) -> Expansion:
    """Transpose every index and apply ``t_i -> -t_{n+1-i}`` to every coefficient."""
    rect = e.rect
    n = rect.n
    flip = lambda i: n + 1 - i
    terms = {
        (transpose(lam), d): substitute_indices(c, flip, negate=True) for (lam, d), c in e.terms.items()
    }
    return Expansion(rect.transpose(), terms)


# -- reports -----------------------------------------------------------------


@dataclass
class Report:
    status: str = "ok"
    checked: int = 0
    skipped: int = 0
    failures: list = field(default_factory=list)
    message: str = ""

    @property
    def ok(self) -> bool:
        return not self.failures

    def merge(self, other: "Report") -> None:
        self.checked += other.checked
        self.skipped += other.skipped
        self.failures.extend(other.failures)
        if self.failures:
            self.status = "fail"

    def to_json(self) -> dict:
        return {
            "status": self.status,
            "checked": self.checked,
            "skipped": self.skipped,
            "failures": self.failures,
            "message": self.message,
        }


def _failure(lam, mu, key, expected: Expansion, actual: Expansion, route: str) -> dict:
    nu, d = key
    return {
        "lambda": list(lam.nonzero),
        "mu": list(mu.nonzero),
        "nu": list(nu.nonzero),
        "d": d,
        "route": route,
        "expected": expected[key].to_json(),
        "actual": actual[key].to_json(),
    }


def _compare(report: Report, lam, mu, expected: Expansion, actual: Expansion, route: str) -> None:
    bad = expected.diff(actual)
    if bad:
        report.failures.append(_failure(lam, mu, bad[0], expected, actual, route))
        report.status = "fail"


def levelrank_check(lam: Partition, mu: Partition, cap: int = QUANTUM_CAP) -> Report:
    """Compare the product with the level-rank image of the transposed product."""
    report = Report()
    left = eq_quantum_product(lam, mu, cap=cap)
    right = levelrank_image(eq_quantum_product(transpose(lam), transpose(mu), cap=cap))
    report.checked = 1
    _compare(report, lam, mu, left, right, "level-rank")
    return report


def huangli_quantum_column(p: int, mu: Partition) -> Expansion:
    return quantumize(huangli_column_pieri(p, mu), mu.rect)


def huangli_quantum_row(k: int, mu: Partition) -> Expansion:
    return levelrank_image(huangli_quantum_column(k, transpose(mu)))


def _check_mu(args) -> Report:
    mu, oracle, consistency = args
    rect = mu.rect
    report = Report()
    classes = [("column", p) for p in range(1, rect.m + 1)] + [("row", k) for k in range(1, rect.width + 1)]
    for shape, size in classes:
        if shape == "column":
            lam = column(rect, size)
            rule = column_pieri(size, mu)
            hl = huangli_quantum_column(size, mu)
        else:
            lam = row(rect, size)
            rule = row_pieri(size, mu)
            hl = huangli_quantum_row(size, mu)
            _compare(report, lam, mu, rule, row_pieri_direct(size, mu), "row-direct")
        _compare(report, lam, mu, rule, hl, "huang-li")
        if oracle:
            _compare(report, lam, mu, rule, eq_quantum_product(lam, mu, consistency=consistency), "gkm")
        else:
            report.skipped += 1
        report.checked += 1
    return report


def crosscheck_pieri(
    rect: Rect,
    max_fixed_points: int = QUANTUM_CAP,
    workers: Optional[int] = None,
    consistency: str = "auto",
) -> Report:
    """Every Pieri product in ``rect`` by the cylindric rule, Huang-Li plus rim hooks, and GKM.

    The GKM leg is skipped when the wide ambient has more than
    ``max_fixed_points`` fixed points; ``skipped`` counts those products.
    """
    oracle = comb(2 * rect.n - 1, rect.m) <= max_fixed_points
    jobs = [(mu, oracle, consistency) for mu in enumerate_partitions(rect)]
    total = Report()
    if workers and workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_check_mu, jobs))
    else:
        parts = [_check_mu(job) for job in jobs]
    for part in parts:
        total.merge(part)
    routes = 3 if oracle else 2
    if total.ok:
        total.message = f"all products agree ({routes} routes)"
    else:
        total.message = f"{len(total.failures)} disagreement(s)"
    return total


__all__ = [
    "CONSISTENCY_MODES",
    "Mismatch",
    "QUANTUM_CAP",
    "Report",
    "crosscheck_pieri",
    "eq_quantum_product",
    "gkm_classical_product",
    "huangli_quantum_column",
    "huangli_quantum_row",
    "levelrank_check",
    "levelrank_image",
    "quantum_ambient",
]
