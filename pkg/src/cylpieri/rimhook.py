"""Reduce classical equivariant expansions to quantum ones by n-rim hooks.

A class ``sigma_gamma`` of a wide Grassmannian with ``m`` rows becomes
``sign * q^d * sigma_core`` where ``core`` is the n-core of ``gamma`` and ``d``
the number of hooks removed, or vanishes when the core overflows the target
rectangle.  Coefficients are folded by ``t_i -> t_{((i-1) mod n) + 1}``.
"""

from __future__ import annotations

from typing import Mapping

from .expansion import Expansion
from .polyring import TPoly, substitute_indices
from .shapes import Partition, Rect, WidePartition, n_core_reduce


def fold_index(i: int, n: int) -> int:
    return (i - 1) % n + 1


def quantumize(expansion: Mapping, target: Rect) -> Expansion:
    """Apply the rim hook rule to ``{gamma: c}`` with at most ``target.m`` rows."""
    n = target.n
    acc: dict = {}
    for gamma, c in expansion.items():
        parts = gamma.parts if isinstance(gamma, (Partition, WidePartition)) else tuple(gamma)
        red = n_core_reduce(parts, n, target)
        if red.vanishes:
            continue
        folded = substitute_indices(c, lambda i: fold_index(i, n))
        key = (red.core, red.hooks_removed)
        term = folded if red.sign > 0 else -folded
        acc[key] = acc[key] + term if key in acc else term
    return Expansion(target, acc)


__all__ = ["fold_index", "quantumize"]
