"""Exact invariants for distinguishing homologous tori in 4-manifolds."""

from .alexpoly import (
    alexander_matrix,
    alexander_polynomial,
    collapse,
    equal_up_to_relabel,
    exact_determinant,
    fox_derivative,
    hosokawa,
    link_alexander,
    specialize,
    symmetrize,
)
from .braid import BraidWord, Permutation, braid_permutation, closure_components, conjugate, parse_braid, stabilize
from .laurent import AssociateClass, LaurentPoly, normalize_units
from .linkpresent import (
    FreeGroupEndomorphism,
    FreeWord,
    GroupPresentation,
    artin_action,
    braid_axis_presentation,
    closed_braid_presentation,
)
from .obstruct import (
    ObstructionVerdict,
    Status,
    braided_torus_obstruction,
    simple_cover_obstruction,
    strands_from_genus,
)
from .surgeryfam import (
    FamilyVerdict,
    SurgeryBasisTriple,
    family_equal,
    family_membership,
    lagrangian_pair_triples,
    mms_evaluate,
)
from .swring import (
    ManifoldBlock,
    adjunction_check,
    basic_classes,
    check_symmetry,
    cover_pushforward,
    e1_block,
    fibersum_relative,
    knot_surgery,
    link_surgery,
    vanishing_flag,
)

__version__ = "0.1.0"
