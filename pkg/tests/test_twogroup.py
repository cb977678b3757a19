import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import brute_interchange
from twogroups import constructions as cons
from twogroups import fixtures as fx
from twogroups import groups as gp
from twogroups import twogroup as tgm
from twogroups.errors import (
    BoundaryViolation,
    CompositionDomainViolation,
    InterchangeViolation,
    NaturalityViolation,
    NotAbelian,
    NotComposable,
    UnitLawViolation,
)


def cat(name):
    return cons.catalog_group(name)


def test_discrete_two_group_on_s3():
    d = cons.discrete_two_group(cat("S3"))
    assert d.kernel_of_source[0].order == 1
    assert len(d.comp) == 6


def test_delooping_requires_abelian():
    d = cons.delooping_two_group(cat("Z4"))
    assert d.compose(1, 2) == 3
    with pytest.raises(NotAbelian) as err:
        cons.delooping_two_group(cat("S3"))
    a, b = err.value.witness["a"], err.value.witness["b"]
    assert not cat("S3").commutes(a, b)


def test_nonabelian_delooping_breaks_interchange_only():
    tg = cons.unchecked_delooping(cat("S3"))
    errs = tgm.two_group_violations(tg)
    assert [e.check for e in errs] == ["interchange"]
    assert not brute_interchange(tg)


@pytest.mark.parametrize("name,aut", [("Z2", 1), ("S3", 6), ("Q8", 24), ("D4", 8)])
def test_automorphism_two_group(name, aut):
    g = cat(name)
    tg = cons.automorphism_two_group(g)
    assert tg.g0.order == aut and tg.g1.order == g.order * aut
    # derived composition is (g'g, F) on composable ((g', Ad_g F), (g, F))
    a, b = tg.pairs
    m = tg.g0.order
    ga, fa = np.divmod(a, m)
    gb, fb = np.divmod(b, m)
    assert np.array_equal(tg.comp, g.table[ga, gb] * m + fb)


def test_unit_law_witness():
    d = cons.delooping_two_group(cat("Z2"))
    with pytest.raises(UnitLawViolation) as err:
        tgm.make_two_group(d.g0, d.g1, d.s, d.t, d.i, d.pairs[0])
    assert err.value.witness == {"b": 1}


def test_comp_mapping_must_cover_composable_pairs():
    d = cons.delooping_two_group(cat("Z2"))
    with pytest.raises(CompositionDomainViolation):
        tgm.make_two_group(d.g0, d.g1, d.s, d.t, d.i, {(0, 0): 0, (0, 1): 1, (1, 0): 1})
    ok = tgm.make_two_group(d.g0, d.g1, d.s, d.t, d.i, {(0, 0): 0, (0, 1): 1, (1, 0): 1, (1, 1): 0})
    assert np.array_equal(ok.comp, d.comp)


def test_compose_rejects_non_composable():
    tg = cons.automorphism_two_group(cat("S3"))
    a = int(np.flatnonzero(tg.s.images != tg.t.images[0])[0])
    with pytest.raises(NotComposable):
        tg.compose(a, 0)


def test_cat_inverse():
    tg = cons.automorphism_two_group(cat("S3"))
    for a in range(tg.g1.order):
        inv = tg.cat_inverse(a)
        assert tg.compose(a, inv) == tg.i(tg.t(a))
        assert tg.compose(inv, a) == tg.i(tg.s(a))


@pytest.mark.parametrize("tg", fx.twogroup_collection(8).objects, ids=lambda t: t.name)
def test_catalog_two_groups_pass_brute_interchange(tg):
    if len(tg.comp) > 2000:
        pytest.skip("quadratic oracle")
    assert brute_interchange(tg)
    assert tgm.derived_composition_failure(tg) is None


def test_phi_is_isomorphism():
    tg = cons.automorphism_two_group(cat("D4"))
    iso = tgm.phi_iso(tg)
    assert iso.forward.is_injective and iso.forward.is_surjective


@given(st.sampled_from([x for x in fx.twogroup_collection(8).two_morphisms]))
def test_two_morphisms_revalidate(th):
    assert tgm.two_morphism_violations(th) == []
    assert tgm.make_two_morphism(th.src_mor, th.dst_mor, th.theta) == th


def test_naturality_witness():
    d = cons.delooping_two_group(cat("Z2"))
    f = tgm.make_morphism(d, d, gp.identity_hom(d.g0), gp.identity_hom(d.g1))
    e = tgm.make_morphism(d, d, gp.identity_hom(d.g0), gp.trivial_hom(d.g1, d.g1))
    with pytest.raises(NaturalityViolation) as err:
        tgm.make_two_morphism(f, e, gp.trivial_hom(d.g0, d.g1))
    assert err.value.witness == {"b": 1}


def test_boundary_witness():
    tg = cons.automorphism_two_group(cat("S3"))
    f = tgm.identity_morphism(tg)
    with pytest.raises(BoundaryViolation) as err:
        tgm.make_two_morphism(f, f, gp.trivial_hom(tg.g0, tg.g1))
    assert err.value.check == "boundary-source"
    assert err.value.witness == {"g": 1}


def test_vertical_and_horizontal_composition_laws():
    col = fx.twogroup_collection(8)
    from twogroups.twocat import TWOGROUP_OPS, check_laws
    rep = check_laws(TWOGROUP_OPS, col.morphisms[:20], col.two_morphisms)
    assert rep.ok, rep.failures()[:3]
    assert any(c.id.startswith("interchange[") for c in rep.checks)


def test_interchange_chunked_matches_brute_on_mutants():
    s3 = cat("S3")
    tg = cons.unchecked_delooping(s3)
    err = tgm.interchange_failure(tg)
    assert isinstance(err, InterchangeViolation)
    w = err.witness
    a, b, ap, bp = w["a"], w["b"], w["ap"], w["bp"]
    lhs = s3.mul(tg.compose(a, b), tg.compose(ap, bp))
    rhs = tg.compose(s3.mul(a, ap), s3.mul(b, bp))
    assert lhs != rhs
