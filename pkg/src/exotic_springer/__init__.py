"""Cup diagram combinatorics for one-boundary Springer-type fibres.

Diagrams and bitableaux live in :mod:`.diagrams`, intersections and
orientations in :mod:`.circles`, the homology basis in :mod:`.homology`,
ring arithmetic in :mod:`.cohomology` and the signed permutation action in
:mod:`.weyl`.
"""

from .circles import (
    EmptyIntersection,
    IntersectionReport,
    SpherePoint,
    glue,
    intersect,
    km_dimension,
    member_of,
    orientations,
    witness_point,
)
from .cohomology import RingElement, cell_generating_function, parse_element, poincare_polynomial
from .diagrams import (
    Bitableau,
    CupDiagram,
    Weight,
    component_constraints,
    cup_from_weight,
    enumerate_diagrams,
    from_bitableau,
    springer_fiber_dimension,
    to_bitableau,
)
from .errors import ExoticError
from .homology import (
    EnrichedCupDiagram,
    LineDiagramVector,
    beta_map,
    betti_numbers,
    line_diagram_sum,
    rank_check,
    standard_enriched,
)
from .kernels import BACKEND
from .render import render
from .weyl import SignedPermutation, act_on_monomial, character_value, inner_product, verify_generator_relations

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "Bitableau",
    "CupDiagram",
    "EmptyIntersection",
    "EnrichedCupDiagram",
    "ExoticError",
    "IntersectionReport",
    "LineDiagramVector",
    "RingElement",
    "SignedPermutation",
    "SpherePoint",
    "Weight",
    "act_on_monomial",
    "beta_map",
    "betti_numbers",
    "cell_generating_function",
    "character_value",
    "component_constraints",
    "cup_from_weight",
    "enumerate_diagrams",
    "from_bitableau",
    "glue",
    "inner_product",
    "intersect",
    "km_dimension",
    "line_diagram_sum",
    "member_of",
    "orientations",
    "parse_element",
    "poincare_polynomial",
    "rank_check",
    "render",
    "springer_fiber_dimension",
    "standard_enriched",
    "to_bitableau",
    "verify_generator_relations",
    "witness_point",
]
