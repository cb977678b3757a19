import numpy as np
import pytest

from twogroups import constructions as cons
from twogroups import equivalence as eq
from twogroups import fixtures as fx
from twogroups import groups as gp
from twogroups import twogroup as tgm
from twogroups import xmod as xmm

XC = fx.xmod_collection(8)
TC = fx.twogroup_collection(8)


def cat(name):
    return cons.catalog_group(name)


def test_t0_of_discrete_is_trivial_xmod():
    g = cat("S3")
    x = eq.t0(cons.discrete_two_group(g))
    assert x.same_as(cons.trivial_xmod(g))


def test_t0_of_delooping():
    g = cat("Z2xZ4")
    x = eq.t0(cons.delooping_two_group(g))
    assert x.same_as(cons.delooping_xmod(g))


@pytest.mark.parametrize("name", ["S3", "Q8", "D4", "Z4"])
def test_t0_of_aut2_matches_aut_xmod_via_witness(name):
    g = cat(name)
    tg = cons.automorphism_two_group(g)
    x = eq.t0(tg)
    ref = cons.automorphism_xmod(g)
    # ker s = {(g, id)} sits at index g * |Aut|
    _, incl = tg.kernel_of_source
    w = incl.images // tg.g0.order
    assert np.array_equal(incl.images % tg.g0.order, np.zeros(g.order))
    assert x.g == ref.g
    assert np.array_equal(x.tau.images, ref.tau.images[w])
    assert np.array_equal(w[x.alpha.map], ref.alpha.map[:, w])


def test_s0_of_trivial_xmod_is_discrete():
    g = cat("D4")
    tg = eq.s0(cons.trivial_xmod(g))
    d = cons.discrete_two_group(g)
    assert tg.g1 == d.g1 and np.array_equal(tg.comp, d.comp)


def test_s0_of_delooping():
    g = cat("Z6")
    tg = eq.s0(cons.delooping_xmod(g))
    assert tg.g0.order == 1 and tg.g1 == g
    assert np.array_equal(tg.comp, g.table.ravel())


@pytest.mark.parametrize("x", XC.objects, ids=lambda x: x.name)
def test_s0_validates_and_composition_is_derived(x):
    tg = eq.s0(x)
    assert tgm.two_group_violations(tg) == []
    assert tgm.derived_composition_failure(tg) is None


@pytest.mark.parametrize("tg", TC.objects, ids=lambda t: t.name)
def test_t0_validates(tg):
    assert xmm.xmod_violations(eq.t0(tg)) == []


def test_images_are_memoized():
    x = XC.objects[5]
    assert eq.s0(x) is eq.s0(x)
    m = XC.morphisms[3]
    assert eq.s1(m).src is eq.s0(m.src)


def test_functors_preserve_identities_and_units():
    for m in XC.morphisms[:10]:
        assert eq.s2(xmm.unit_2morphism(m)) == tgm.identity_two_morphism(eq.s1(m))
    for m in TC.morphisms[:10]:
        assert eq.t2(tgm.identity_two_morphism(m)) == xmm.unit_2morphism(eq.t1(m))


def test_ts_eta_projects_back():
    """TS(eta) takes values (eta g, e) and zeta's second component maps them to eta."""
    for e in XC.two_morphisms:
        back = eq.ts(e)
        mor, iso = eq.zeta(e.dst)
        _, incl = eq.s0(e.dst).kernel_of_source
        pairs = incl.images[back.eta]
        assert np.array_equal(pairs % e.dst.g.order, np.zeros(e.src.g.order))
        assert np.array_equal(mor.delta.images[back.eta], e.eta)


def test_restriction_well_defined_on_catalog_morphisms():
    for m in TC.morphisms:
        k = m.dst.kernel_of_source[1].images
        assert np.isin(m.f1.images[m.src.kernel_of_source[1].images], k).all()


def test_xi_on_discrete_is_relabeling():
    d = cons.discrete_two_group(cat("S3"))
    mor, iso = eq.xi(d)
    assert np.array_equal(mor.f1.images, np.arange(6))
    assert np.array_equal(gp.compose_homs(iso.forward, iso.backward).images, np.arange(6))


def test_round_trip_small_collection_green():
    d = cons.discrete_two_group(cat("Z2"))
    rep = eq.verify_round_trip([d], [tgm.identity_morphism(d)])
    assert rep.ok
    assert rep.lines()[0] == "PASS xi-iso[disc(Z2)]"


def test_report_lists_each_input_once():
    rep = eq.verify_round_trip(XC.objects, XC.morphisms, XC.two_morphisms)
    natural = [c.id for c in rep.naturality.checks]
    assert len(natural) == len(XC.morphisms) + len(XC.two_morphisms)
    assert len(set(natural)) == len(natural)


def test_corrupted_image_fails_only_its_square():
    target = next(m for m in XC.morphisms if m.name == "F5:conj(S3)")

    def corrupt(x, image):
        if x is target:
            # swap in the round trip of a different morphism with the same ends
            return eq.ts(xmm.identity_xmod_morphism(target.src))
        return image

    rep = eq.verify_round_trip(XC.objects, XC.morphisms, [], mutate=corrupt)
    fails = rep.naturality.failures()
    assert [c.id for c in fails] == ["zeta-natural[F5:conj(S3)]"]
    assert rep.witnesses.ok and rep.functoriality.ok


def test_corrupted_2morphism_image_localized():
    target = next(e for e in TC.two_morphisms if e.name and e.name.startswith("inn[disc(S3)->aut2(S3)"))

    def corrupt(x, image):
        if x is target:
            return eq.st(tgm.identity_two_morphism(target.src_mor))
        return image

    rep = eq.verify_round_trip(TC.objects, TC.morphisms, TC.two_morphisms, mutate=corrupt)
    fails = [c.id for c in rep.checks() if not c.ok]
    assert fails == [f"xi-natural-2[{target.name}]"]
