import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import brute_associative, brute_automorphisms, element_order
from twogroups import constructions as cons
from twogroups import groups as gp
from twogroups.errors import (
    NoIdentity,
    NoInverse,
    NotAssociative,
    NotAutomorphism,
    NotClosed,
    NotMultiplicative,
    NotUnital,
    OrderBoundExceeded,
)

Z = gp.cyclic_group


def test_cyclic_group_table():
    z4 = Z(4)
    assert z4.order == 4
    assert z4.mul(3, 2) == 1
    assert list(z4.inverse) == [0, 3, 2, 1]


def test_ragged_or_open_table_rejected():
    with pytest.raises(NotClosed) as err:
        gp.make_group([[0, 1], [1, 2]])
    assert err.value.witness == {"a": 1, "b": 1}


def test_identity_relabeled_to_zero():
    # identity at index 1
    g = gp.make_group([[0, 1], [1, 0]][::-1])
    assert g.table[0, 0] == 0 and g.table[0, 1] == 1


def test_no_identity():
    with pytest.raises(NoIdentity):
        gp.make_group([[1, 1], [1, 1]])


def test_no_inverse_witness():
    # a monoid: 0 identity, 1 absorbing
    with pytest.raises(NoInverse) as err:
        gp.make_group([[0, 1], [1, 1]])
    assert err.value.witness == {"x": 1}


def test_latin_square_not_associative():
    # identity 0 with a non-associative Latin square of order 5
    t = [[0, 1, 2, 3, 4],
         [1, 0, 3, 4, 2],
         [2, 4, 0, 1, 3],
         [3, 2, 4, 0, 1],
         [4, 3, 1, 2, 0]]
    with pytest.raises(NotAssociative) as err:
        gp.make_group(t)
    w = err.value.witness
    assert (w["a"], w["b"], w["c"]) == brute_associative(np.array(t))


def test_order_bound(monkeypatch):
    monkeypatch.setenv("TG_MAX_ORDER", "5")
    with pytest.raises(OrderBoundExceeded):
        Z(6)
    assert Z(5).order == 5


def test_hom_validation_first_witness():
    with pytest.raises(NotMultiplicative) as err:
        gp.make_hom(Z(4), Z(4), [1, 2, 3, 0])
    assert err.value.witness == {"a": 0, "b": 0}


def test_kernel_image_of_quotient():
    f = gp.make_hom(Z(6), Z(3), [k % 3 for k in range(6)])
    k, incl = gp.kernel(f)
    assert list(incl.images) == [0, 3]
    im, _ = gp.image(f)
    assert im.order == 3
    assert f.is_surjective and not f.is_injective


def test_direct_product_indexing():
    p, (pa, pb), (ia, ib) = gp.direct_product(Z(2), Z(3))
    assert p.order == 6
    # (1, 2) * (1, 2) = (0, 1)
    assert p.mul(1 * 3 + 2, 1 * 3 + 2) == 0 * 3 + 1
    assert gp.compose_homs(pa, ia) == gp.identity_hom(Z(2))
    assert p.is_abelian


def test_semidirect_product_is_s3():
    inv = gp.make_action(Z(2), Z(3), [[0, 1, 2], [0, 2, 1]])
    p, _, proj = gp.semidirect_product(Z(3), Z(2), inv)
    assert p.order == 6 and not p.is_abelian
    assert sorted(p.element_orders) == sorted(cons.catalog_group("S3").element_orders)


def test_pullback_pairs_lexicographic():
    f = gp.make_hom(Z(4), Z(2), [0, 1, 0, 1])
    pb, p1, p2 = gp.pullback(f, f)
    assert pb.order == 8
    assert list(zip(p1.images, p2.images))[:3] == [(0, 0), (0, 2), (1, 1)]


def test_action_validation():
    with pytest.raises(NotUnital):
        gp.make_action(Z(2), Z(3), [[0, 2, 1], [0, 2, 1]])
    with pytest.raises(NotAutomorphism):
        gp.make_action(Z(2), Z(3), [[0, 1, 2], [0, 1, 1]])


def test_conjugation_action_on_s3():
    s3 = cons.catalog_group("S3")
    act = gp.conjugation_action(s3)
    for x in range(6):
        for h in range(6):
            assert act(x, h) == s3.mul(s3.mul(x, h), s3.inv(x))


@pytest.mark.parametrize("name,size", [
    ("1", 1), ("Z2", 1), ("Z3", 2), ("Z4", 2), ("Z2xZ2", 6), ("Z6", 2), ("Z8", 4),
    ("S3", 6), ("D4", 8), ("Q8", 24), ("Z2xZ4", 8),
])
def test_automorphism_group_matches_brute_force(name, size):
    g = cons.catalog_group(name)
    aut, taut = gp.automorphism_group(g)
    brute = brute_automorphisms(g.table)
    assert aut.order == len(brute) == size
    assert [tuple(r) for r in taut.map.tolist()] == brute
    # identity automorphism is element 0, product is composition
    assert list(taut.map[0]) == list(range(g.order))
    for f in range(aut.order):
        for h in range(aut.order):
            assert np.array_equal(taut.map[aut.mul(f, h)], taut.map[f][taut.map[h]])


def test_adjoint_hom_kernel_is_center():
    q8 = cons.catalog_group("Q8")
    _, _, ad = cons.automorphisms(q8)
    k, incl = gp.kernel(ad)
    assert list(incl.images) == [0, 1]


def test_subgroup_and_restriction():
    s3 = cons.catalog_group("S3")
    a3, incl = gp.subgroup(s3, [0, 3, 4])
    assert a3.order == 3 and a3.is_abelian
    sign = gp.make_hom(s3, Z(2), [0, 1, 1, 0, 0, 1])
    assert not gp.restrict(sign, incl).images.any()


def test_group_iso_checks_inverse():
    with pytest.raises(ValueError):
        gp.GroupIso(gp.identity_hom(Z(3)), gp.make_hom(Z(3), Z(3), [0, 2, 1]))


@st.composite
def abelian_groups(draw):
    n1 = draw(st.integers(1, 6))
    n2 = draw(st.integers(1, 4))
    p, _, _ = gp.direct_product(Z(n1), Z(n2))
    return p


@given(abelian_groups(), st.data())
def test_element_orders_match_oracle(g, data):
    x = data.draw(st.integers(0, g.order - 1))
    assert g.element_orders[x] == element_order(g.table, x)


@given(abelian_groups())
def test_light_test_agrees_with_brute(g):
    assert brute_associative(g.table) is None
    g2 = gp.make_group(g.table)
    assert g2 == g


@given(st.integers(1, 7), st.integers(0, 2**16))
def test_perturbed_tables_fail_exactly_like_brute(n, seed):
    """Randomly corrupt one cell of a cyclic table; validation must agree
    with the brute-force scans about the first failure."""
    rng = np.random.default_rng(seed)
    t = Z(n).table.copy()
    a, b = rng.integers(0, n, size=2)
    t[a, b] = rng.integers(0, n)
    try:
        gp.make_group(t)
    except (NotClosed, NoIdentity, NoInverse):
        return
    except NotAssociative as err:
        ar = np.arange(n)
        if (t[0] == ar).all() and (t[:, 0] == ar).all():
            assert (err.witness["a"], err.witness["b"], err.witness["c"]) == brute_associative(t)
        return
    assert brute_associative(t) is None
