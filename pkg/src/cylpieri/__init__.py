"""Equivariant quantum Pieri products for Grassmannians via cylindric shapes."""

from ._backend import BACKEND
from .cylinder import CylindricSkew, classify_strip, cylindric_skew, loop_rows
from .expansion import Expansion
from .localization import huangli_column_pieri, join_and_cut, psi, xi, xi_diag
from .oracle import crosscheck_pieri, eq_quantum_product, gkm_classical_product, levelrank_check
from .pieri import column_pieri, pieri, postnikov_pieri, row_pieri, row_pieri_direct
from .polyring import TPoly, graham_decompose, is_graham_positive
from .rimhook import quantumize
from .shapes import Partition, Rect, enumerate_partitions, make_partition, n_core_reduce

__all__ = [
    "BACKEND",
    "CylindricSkew",
    "Expansion",
    "Partition",
    "Rect",
    "TPoly",
    "classify_strip",
    "column_pieri",
    "crosscheck_pieri",
    "cylindric_skew",
    "enumerate_partitions",
    "eq_quantum_product",
    "gkm_classical_product",
    "graham_decompose",
    "huangli_column_pieri",
    "is_graham_positive",
    "join_and_cut",
    "levelrank_check",
    "loop_rows",
    "make_partition",
    "n_core_reduce",
    "pieri",
    "postnikov_pieri",
    "psi",
    "quantumize",
    "row_pieri",
    "row_pieri_direct",
    "xi",
    "xi_diag",
]
