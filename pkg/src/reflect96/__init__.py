"""Exact computations for the unitary reflection group H1 of order 96.

The group is generated by T = (1+i)/2 [[1, 1], [1, -1]] and D = diag(1, i)
over Q(zeta_8).  Everything is computed exactly: characters, tensor
decompositions, the Bratteli diagram of tensor powers of the natural
representation, centralizer dimensions, Molien series and the
weight-enumerator / theta-series link for doubly-even self-dual codes.
"""

from .exact import Cyc8, parse_cyc8
from .linalg import Matrix
from .matgroup import FiniteMatrixGroup, generate_group, h1

__all__ = ["Cyc8", "parse_cyc8", "Matrix", "FiniteMatrixGroup", "generate_group", "h1"]
__version__ = "0.1.0"
