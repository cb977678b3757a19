import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from twogroups import constructions as cons
from twogroups import fixtures as fx
from twogroups import groups as gp
from twogroups import xmod as xmm
from twogroups.errors import (
    ChainHomotopy1Violation,
    CrossedLawViolation,
    NotComposable,
    NotParallel,
    PeifferViolation,
    XModMorphismViolation,
)

COL = fx.xmod_collection(8)


def cat(name):
    return cons.catalog_group(name)


def test_peiffer_witness_is_first_noncommuting_pair():
    s3 = cat("S3")
    one = gp.trivial_group()
    with pytest.raises(PeifferViolation) as err:
        xmm.make_crossed_module(one, s3, gp.trivial_hom(s3, one), gp.trivial_action(one, s3))
    w = err.value.witness
    assert (w["h"], w["h'"]) == (1, 2)
    assert not s3.commutes(1, 2)
    assert all(s3.commutes(0, x) for x in range(6)) and s3.commutes(1, 0) and s3.commutes(1, 1)


def test_aut_xmod_of_s3():
    x = cons.automorphism_xmod(cat("S3"))
    assert x.g.order == 6
    assert x.tau.is_injective  # S3 has trivial center


def test_central_extension_xmod_q8():
    x = cons.xmod_from_central_extension(fx.catalog_hom("Q8->Z2xZ2"))
    assert (x.g.order, x.h.order) == (4, 8)
    # alpha(g, -) is conjugation by a preimage: -1 is fixed, i -> -i under j
    assert x.alpha(1, 2) == 3


def test_morphism_violation_witness():
    c = cons.conjugation_xmod(cat("Z2"))
    t = cons.trivial_xmod(cat("Z2"))
    with pytest.raises(XModMorphismViolation) as err:
        xmm.make_xmod_morphism(c, t, gp.identity_hom(cat("Z2")), gp.trivial_hom(cat("Z2"), t.h))
    assert err.value.check == "xmod-morphism-tau"
    assert err.value.witness == {"h": 1}


def test_identity_and_composition():
    m = next(f for f in COL.morphisms if f.name == "conj(S3)->aut(S3)")
    assert xmm.compose_xmod_morphisms(xmm.identity_xmod_morphism(m.dst), m) == m
    with pytest.raises(NotComposable):
        xmm.compose_xmod_morphisms(m, m)


def test_parallel_required():
    a = COL.morphisms[0]
    b = next(f for f in COL.morphisms if f.src is not a.src)
    with pytest.raises(NotParallel):
        xmm.make_xmod_2morphism(a, b, np.zeros(a.src.g.order, dtype=int))


def test_crossed_law_and_chain_homotopy_witnesses():
    z2, z3 = cat("Z2"), cat("Z3")
    one = gp.trivial_group()
    src, dst = cons.trivial_xmod(z2), cons.delooping_xmod(z3)
    m = xmm.make_xmod_morphism(src, dst, gp.trivial_hom(z2, one), gp.trivial_hom(one, z3))
    with pytest.raises(CrossedLawViolation) as err:
        xmm.make_xmod_2morphism(m, m, [0, 1])
    assert err.value.witness == {"g": 1, "gt": 1}
    src, dst = cons.trivial_xmod(z2), cons.conjugation_xmod(z2)
    m = xmm.make_xmod_morphism(src, dst, gp.identity_hom(z2), gp.trivial_hom(one, z2))
    with pytest.raises(ChainHomotopy1Violation):
        xmm.make_xmod_2morphism(m, m, [0, 1])


@given(st.sampled_from(COL.two_morphisms))
def test_induced_hom_is_a_hom(e):
    f = xmm.induced_hom(e)
    assert f.src == e.src.g


@given(st.sampled_from(COL.two_morphisms), st.sampled_from(COL.two_morphisms))
def test_horizontal_formulas_agree(a, b):
    if b.dst is not a.src:
        return
    assert np.array_equal(xmm.hcompose_xmod_2morphisms(a, b).eta, xmm.hcompose_xmod_alternative(a, b))


def test_vertical_composition_is_pointwise():
    twos = [e for e in COL.two_morphisms if e.name and e.name.startswith("inn[conj(S3)->aut(S3)")]
    lo, hi = twos[0], twos[1]
    assert lo.dst_mor == hi.src_mor
    v = xmm.vcompose_xmod_2morphisms(hi, lo)
    h = lo.dst.h
    assert np.array_equal(v.eta, h.table[hi.eta, lo.eta])
    assert v.src_mor == lo.src_mor and v.dst_mor == hi.dst_mor


def test_unit_2morphism_is_identity_for_vertical():
    e = COL.two_morphisms[-1]
    assert xmm.vcompose_xmod_2morphisms(xmm.unit_2morphism(e.dst_mor), e) == e


def test_two_morphism_identity_is_the_triple():
    # same eta, different boundaries -> different 2-morphisms
    m = next(f for f in COL.morphisms if f.name == "F5:conj(S3)")
    n = xmm.identity_xmod_morphism(m.src)
    assert xmm.unit_2morphism(m) != xmm.unit_2morphism(n)
    assert np.array_equal(xmm.unit_2morphism(m).eta, xmm.unit_2morphism(n).eta)


def test_2category_laws_on_small_collection():
    rep = xmm.check_2category_laws(COL.morphisms[:30], COL.two_morphisms[:60])
    assert rep.ok, rep.failures()[:3]
