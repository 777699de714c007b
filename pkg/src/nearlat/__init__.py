"""Finite distributive nearlattices: element theory, filters, the free
lattice extension and the discrete DN-structure representation."""

from .errors import NearlatError
from .extension import FreeExtension, free_extension, irreducibles
from .nearlattice import Nearlattice, NMap, find_isomorphism, from_join_table, from_order
from .order import Poset
from .representation import DNStructure, enumerate_dn, n_of, s_of, sample_dn, validate_dn
from .structure import classify

__version__ = "0.1.0"

__all__ = [
    "DNStructure",
    "FreeExtension",
    "NMap",
    "Nearlattice",
    "NearlatError",
    "Poset",
    "classify",
    "enumerate_dn",
    "find_isomorphism",
    "free_extension",
    "from_join_table",
    "from_order",
    "irreducibles",
    "n_of",
    "s_of",
    "sample_dn",
    "validate_dn",
]
