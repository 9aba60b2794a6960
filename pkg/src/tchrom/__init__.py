"""tchrom: chromatic symmetric and quasisymmetric functions of graphs.

The library computes the chromatic symmetric function of a simple graph,
its q-refinements relative to a vertex labeling or an acyclic
orientation, and the totals of those refinements over all labelings or
over all acyclic orientations.  For star graphs it also provides closed
coefficient formulas, and a marked-box configuration model that proves
the binomial identity behind one of them.  Everything is exact integer
arithmetic, and every closed form ships next to a brute-force
counterpart.
"""

__version__ = "0.1.0"

from .qpoly import QPolynomial, q_analog, one_plus_q_power
from .graph import Graph, star, cycle, path, from_edge_list
from .qsymfunc import QSymExpansion, SymExpansion
from .chromatic import (
    csf,
    cqsf_labeled,
    cqsf_oriented,
    total_labeling_cqsf,
    total_orientation_cqsf,
)

__all__ = [
    "QPolynomial",
    "q_analog",
    "one_plus_q_power",
    "Graph",
    "star",
    "cycle",
    "path",
    "from_edge_list",
    "QSymExpansion",
    "SymExpansion",
    "csf",
    "cqsf_labeled",
    "cqsf_oriented",
    "total_labeling_cqsf",
    "total_orientation_cqsf",
    "__version__",
]
