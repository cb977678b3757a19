"""Finite strict 2-groups, crossed modules and the equivalence between them."""

from .constructions import (
    automorphism_two_group,
    automorphism_xmod,
    catalog,
    catalog_group,
    conjugation_xmod,
    delooping_two_group,
    delooping_xmod,
    discrete_two_group,
    is_central_extension,
    trivial_xmod,
    xmod_from_central_extension,
    xmod_from_normal_subgroup,
)
from .equivalence import s0, s1, s2, t0, t1, t2, verify_round_trip, xi, zeta
from .errors import AxiomViolation, OrderBoundExceeded, ParseError, TwoGroupError, UnresolvedReference
from .formats import parse, serialize
from .groups import (
    FiniteGroup,
    GroupAction,
    GroupHom,
    GroupIso,
    automorphism_group,
    cyclic_group,
    direct_product,
    make_action,
    make_group,
    make_hom,
    semidirect_product,
)
from .twogroup import (
    StrictTwoGroup,
    TwoGroupMorphism,
    TwoGroupTwoMorphism,
    make_morphism,
    make_two_group,
    make_two_morphism,
)
from .xmod import (
    CrossedModule,
    XMod2Morphism,
    XModMorphism,
    make_crossed_module,
    make_xmod_2morphism,
    make_xmod_morphism,
)

__version__ = "0.1.0"
