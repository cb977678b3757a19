import numpy as np
import pytest

from oracles import element_order
from twogroups import constructions as cons
from twogroups import fixtures as fx
from twogroups import groups as gp
from twogroups.errors import KernelNotCentral, NotASection, NotInjective, NotNormal, NotSurjective

NAMES = ["1", "Z2", "Z3", "Z4", "Z2xZ2", "Z6", "Z8", "S3", "D4", "Q8", "Z2xZ4", "A4"]


def test_catalog_names_unique_and_stable():
    assert [g.name for g in cons.catalog()] == NAMES
    assert cons.catalog()[3] is cons.catalog()[3]
    assert [g.name for g in cons.catalog(6)] == ["1", "Z2", "Z3", "Z4", "Z2xZ2", "Z6", "S3"]


@pytest.mark.parametrize("g", cons.catalog(), ids=lambda g: g.name)
def test_catalog_groups_validate(g):
    again = gp.make_group(g.table)
    assert again == g


def test_q8_has_one_involution():
    q8 = cons.catalog_group("Q8")
    orders = [element_order(q8.table, x) for x in range(8)]
    assert orders.count(2) == 1
    assert q8.label(orders.index(2)) == "-1"


def test_pinned_orderings():
    s3 = cons.catalog_group("S3")
    assert s3.labels == ("012", "021", "102", "120", "201", "210")
    assert cons.catalog_group("D4").labels[:3] == ("r0", "r0f", "r1")
    a4 = cons.catalog_group("A4")
    assert a4.labels[0] == "0123" and len(a4.labels) == 12


def test_z4_extension_has_trivial_action():
    tau = fx.catalog_hom("Z4->Z2")
    a = cons.xmod_from_central_extension(tau, [0, 1])
    b = cons.xmod_from_central_extension(tau, [0, 3])
    assert a.alpha.is_trivial
    assert np.array_equal(a.alpha.map, b.alpha.map)


def test_q8_extension_section_independent():
    tau = fx.catalog_hom("Q8->Z2xZ2")
    maps = [cons.xmod_from_central_extension(tau, s).alpha.map
            for s in ([0, 4, 2, 6], [1, 5, 3, 7], [0, 5, 3, 6], [1, 4, 2, 7])]
    for m in maps[1:]:
        assert np.array_equal(m, maps[0])
    assert not cons.xmod_from_central_extension(tau).alpha.is_trivial


def test_default_section_is_smallest_preimage():
    assert list(cons.default_section(fx.catalog_hom("Q8->Z2xZ2"))) == [0, 4, 2, 6]


def test_sign_is_not_central():
    sign = fx.catalog_hom("S3->Z2")
    ok, err = cons.is_central_extension(sign)
    assert not ok and isinstance(err, KernelNotCentral)
    s3 = cons.catalog_group("S3")
    k, h = err.witness["k"], err.witness["h"]
    assert sign(k) == 0 and not s3.commutes(k, h)
    with pytest.raises(KernelNotCentral):
        cons.xmod_from_central_extension(sign)


def test_identity_is_central_extension():
    assert cons.is_central_extension(gp.identity_hom(cons.catalog_group("S3"))) == (True, None)


def test_not_surjective_and_not_section():
    z2, z4 = cons.catalog_group("Z2"), cons.catalog_group("Z4")
    with pytest.raises(NotSurjective):
        cons.xmod_from_central_extension(gp.make_hom(z2, z4, [0, 2]))
    with pytest.raises(NotASection) as err:
        cons.xmod_from_central_extension(fx.catalog_hom("Z4->Z2"), [0, 2])
    assert err.value.witness == {"g": 1}


def test_normal_subgroups():
    s3 = cons.catalog_group("S3")
    x = cons.normal_subgroup_xmod(s3, [0, 3, 4])
    assert x.h.order == 3
    with pytest.raises(NotNormal) as err:
        cons.normal_subgroup_xmod(s3, [0, 1])
    g, n = err.value.witness["g"], err.value.witness["n"]
    conj = s3.mul(s3.mul(g, [0, 1][n]), s3.inv(g))
    assert conj not in (0, 1)
    z2 = cons.catalog_group("Z2")
    with pytest.raises(NotInjective):
        cons.xmod_from_normal_subgroup(s3, gp.trivial_hom(z2, s3))


def test_group_normal_in_itself_gives_conjugation_xmod():
    g = cons.catalog_group("Q8")
    assert cons.xmod_from_normal_subgroup(g, gp.identity_hom(g)).same_as(cons.conjugation_xmod(g))


def test_abelian_extension_has_trivial_action():
    for name, hom in fx.catalog_homs():
        if hom.src.is_abelian:
            assert cons.xmod_from_central_extension(hom).alpha.is_trivial, name


def test_aut2_z2():
    tg = cons.automorphism_two_group(cons.catalog_group("Z2"))
    assert tg.g0.order == 1 and tg.g1.order == 2


def test_collections_meet_fixture_size():
    for col in (fx.xmod_collection(8), fx.twogroup_collection(8)):
        assert len(col.morphisms) >= 10 and len(col.two_morphisms) >= 10
        assert len(col.carriers()) >= 4
