"""Homomorphisms between Specht lattices of symmetric groups modulo m.

Start with :func:`hom_group` to compute a Hom group by linear algebra,
:func:`build_boxshift_morphism` for the explicit box-shift maps, and
:func:`transpose_morphism` to move a morphism to the conjugate shapes.
"""

from .boxshift import BoxShiftProblem, build_boxshift_morphism, theta_table
from .combinatorics import Partition, Permutation, Tableau, Tabloid, canonical_tableau, partitions
from .errors import DomainError, NotAPartition, ParseError, SpechtError
from .homsolver import HomGroup, Morphism, hom_group, morphism_order
from .lattices import SpechtVector, polytabloid, standard_basis, straighten
from .semistandard import Correspondoid, count_semistandard, transpose_morphism

__all__ = [
    "BoxShiftProblem",
    "Correspondoid",
    "DomainError",
    "HomGroup",
    "Morphism",
    "NotAPartition",
    "ParseError",
    "Partition",
    "Permutation",
    "SpechtError",
    "SpechtVector",
    "Tableau",
    "Tabloid",
    "build_boxshift_morphism",
    "canonical_tableau",
    "count_semistandard",
    "hom_group",
    "morphism_order",
    "partitions",
    "polytabloid",
    "standard_basis",
    "straighten",
    "theta_table",
    "transpose_morphism",
]
