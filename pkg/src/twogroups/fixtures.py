"""Catalog-generated collections of objects, morphisms and 2-morphisms.

Everything is built from the group catalog with closed-form recipes, then
passed through the validating constructors. Collections are cached per
order bound so that object identity is stable across calls (composability
is checked by reference).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import constructions as cons
from . import groups as gp
from . import twogroup as tgm
from . import xmod as xmm
from .groups import FiniteGroup, GroupHom


@dataclass(frozen=True)
class Collection:
    objects: tuple
    morphisms: tuple
    two_morphisms: tuple

    def carriers(self) -> set[int]:
        return {carrier_order(x) for x in self.objects}


def carrier_order(x) -> int:
    """``max(|G|, |H|)`` for a crossed module, ``max(|G0|, |ker s|)`` for a 2-group."""
    if isinstance(x, xmm.CrossedModule):
        return max(x.g.order, x.h.order)
    return max(x.g0.order, x.kernel_of_source[0].order)


# ---------------------------------------------------------------- homs


def _quotient(src: str, dst: str, images) -> tuple[str, GroupHom]:
    g, h = cons.catalog_group(src), cons.catalog_group(dst)
    return f"{src}->{dst}", gp.make_hom(g, h, images)


@lru_cache(maxsize=None)
def catalog_homs() -> tuple[tuple[str, GroupHom], ...]:
    """Surjections between catalog groups; all but ``S3->Z2`` are central."""
    q8 = [0, 0, 2, 2, 1, 1, 3, 3]
    d4 = [(k // 2 % 2) * 2 + k % 2 for k in range(8)]
    return (
        _quotient("Z4", "Z2", [k % 2 for k in range(4)]),
        _quotient("Z6", "Z2", [k % 2 for k in range(6)]),
        _quotient("Z6", "Z3", [k % 3 for k in range(6)]),
        _quotient("Z8", "Z4", [k % 4 for k in range(8)]),
        _quotient("S3", "Z2", [0, 1, 1, 0, 0, 1]),
        _quotient("D4", "Z2xZ2", d4),
        _quotient("Q8", "Z2xZ2", q8),
        _quotient("Z2xZ4", "Z4", [k % 4 for k in range(8)]),
    )


def catalog_hom(name: str) -> GroupHom:
    return dict(catalog_homs())[name]


NORMAL_SUBGROUPS = (
    # (group, generators of the subgroup, subgroup label)
    ("S3", (3,), "A3"),
    ("D4", (2,), "R4"),
    ("Q8", (1,), "Z(Q8)"),
    ("A4", (3, 8), "V4"),
)


# ---------------------------------------------------------------- crossed modules


@dataclass(frozen=True)
class _Registry:
    objs: dict
    mors: list
    twos: list

    def keep(self, *xs) -> bool:
        return all(id(x) in self.objs for x in xs)


def _auto(g: FiniteGroup) -> int:
    """A canonical non-identity automorphism (the last one), or the identity."""
    aut, _, _ = cons.automorphisms(g)
    return aut.order - 1


def _inner_xmod(f: xmm.XModMorphism, k: int, tag: str):
    dst = f.dst
    kinv = dst.h.inverse[k]
    eta = dst.h.table[k, dst.alpha.map[f.gamma.images, kinv]]
    ad_g = gp.conjugation_table(dst.g)[dst.tau.images[k]]
    ad_h = gp.conjugation_table(dst.h)[k]
    e = xmm.make_xmod_morphism(f.src, dst, ad_g[f.gamma.images], ad_h[f.delta.images], f"{f.name}^{tag}")
    return e, xmm.make_xmod_2morphism(f, e, eta, f"inn[{f.name};{tag}]")


def _inner_chain(reg: _Registry, f, inner, ks) -> None:
    cur = f
    for k in ks:
        nxt, two = inner(cur, k, str(k))
        reg.mors.append(nxt)
        reg.twos.append(two)
        cur = nxt


def _generators(g: FiniteGroup, limit: int = 2) -> list[int]:
    return gp.greedy_generators(g.table)[:limit]


@lru_cache(maxsize=None)
def catalog_xmods(max_order: int | None = None) -> tuple[xmm.CrossedModule, ...]:
    return xmod_collection(max_order).objects


@lru_cache(maxsize=None)
def xmod_collection(max_order: int | None = None) -> Collection:
    """Catalog crossed modules with morphisms and 2-morphisms between them.

    Objects per catalog group ``G``: ``triv(G)``, ``conj(G)``, ``aut(G)`` and
    ``deloop(G)`` for abelian ``G``; then the central extensions of
    :func:`catalog_homs` and the normal subgroups in ``NORMAL_SUBGROUPS``.
    Only objects with carrier order at most ``max_order`` are kept.
    """
    reg = _Registry({}, [], [])
    triv, conj, aut = {}, {}, {}

    def add(x):
        if max_order is None or carrier_order(x) <= max_order:
            reg.objs[id(x)] = x
        return x

    def mor(src, dst, gamma, delta, name):
        if reg.keep(src, dst):
            m = xmm.make_xmod_morphism(src, dst, gamma, delta, name)
            reg.mors.append(m)
            return m
        return None

    for g in cons.catalog():
        triv[g.name] = add(cons.trivial_xmod(g))
        conj[g.name] = add(cons.conjugation_xmod(g))
        if max_order is None or g.order <= max_order:
            aut[g.name] = add(cons.automorphism_xmod(g))
        if g.is_abelian:
            add(cons.delooping_xmod(g))
    for _, hom in catalog_homs():
        if cons.is_central_extension(hom)[0]:
            add(cons.xmod_from_central_extension(hom, name=f"ext({hom.src.name}->{hom.dst.name})"))
    for gname, gens, nname in NORMAL_SUBGROUPS:
        g = cons.catalog_group(gname)
        elems = np.flatnonzero(gp.generated_mask(g.table, gens))
        add(cons.normal_subgroup_xmod(g, elems, f"norm({nname}<{gname})"))

    ordered = [x for x in reg.objs.values()]
    for g in cons.catalog():
        n = g.name
        mor(triv[n], conj[n], gp.identity_hom(g), gp.trivial_hom(triv[n].h, g), f"{triv[n].name}->{conj[n].name}")
        if n in aut:
            a = aut[n]
            m2 = mor(conj[n], a, a.tau, gp.identity_hom(g), f"{conj[n].name}->{a.name}")
            f = _auto(g)
            autg, taut, _ = cons.automorphisms(g)
            fimg = taut.map[f]
            mor(conj[n], conj[n], fimg, fimg, f"F{f}:{conj[n].name}")
            cf = gp.conjugation_table(autg)[f]
            mor(a, a, cf, fimg, f"F{f}:{a.name}")
            if m2 is not None:
                _inner_chain(reg, m2, _inner_xmod, _generators(g))
        if reg.keep(conj[n]):
            _inner_chain(reg, xmm.identity_xmod_morphism(conj[n]), _inner_xmod, _generators(g)[:1])
    for hname, hom in catalog_homs():
        g, gq = hom.src.name, hom.dst.name
        mor(conj[g], conj[gq], hom, hom, f"{hname}:conj")
        mor(triv[g], triv[gq], hom, gp.trivial_hom(triv[g].h, triv[gq].h), f"{hname}:triv")
    for x in ordered:
        if x.name.startswith(("ext(", "norm(")):
            g = x.g.name
            mor(triv[g], x, gp.identity_hom(x.g), gp.trivial_hom(triv[g].h, x.h), f"{triv[g].name}->{x.name}")
            m = mor(x, conj[g], gp.identity_hom(x.g), x.tau, f"{x.name}->{conj[g].name}")
            if m is not None:
                _inner_chain(reg, m, _inner_xmod, _generators(x.g)[:1])
            hn = x.h.name
            if hn in conj and conj[hn].h == x.h:
                mor(conj[hn], x, x.tau, gp.identity_hom(x.h), f"{conj[hn].name}->{x.name}")
    units = [xmm.unit_2morphism(m) for m in reg.mors]
    return Collection(tuple(ordered), tuple(reg.mors), tuple(units + reg.twos))


# ---------------------------------------------------------------- 2-groups


def _inner_2grp(f: tgm.TwoGroupMorphism, k: int, tag: str):
    """``theta(g) = k i'(f0 g) k^-1`` for ``k`` in ``ker s'``."""
    dst = f.dst
    g1 = dst.g1
    theta = g1.table[g1.table[k, dst.i.images[f.f0.images]], g1.inverse[k]]
    e0 = gp.conjugation_table(dst.g0)[dst.t.images[k]][f.f0.images]
    # e1(b) = theta(t b) ∘ f1(b) ∘ theta(s b)^-1, forced by naturality
    src = f.src
    e1 = dst.compose(dst.compose(theta[src.t.images], f.f1.images), dst.cat_inverse(theta[src.s.images]))
    e = tgm.make_morphism(f.src, dst, e0, e1, f"{f.name}^{tag}")
    return e, tgm.make_two_morphism(f, e, theta, f"inn[{f.name};{tag}]")


def _kernel_generators(tg: tgm.StrictTwoGroup, limit: int = 2) -> list[int]:
    k, incl = tg.kernel_of_source
    return [int(incl.images[x]) for x in _generators(k, limit)]


@lru_cache(maxsize=None)
def twogroup_collection(max_order: int | None = None) -> Collection:
    """Catalog 2-groups with morphisms and 2-morphisms between them.

    Objects per catalog group ``G``: ``disc(G)``, ``aut2(G)`` and
    ``deloop(G)`` for abelian ``G``, subject to the carrier bound.
    """
    reg = _Registry({}, [], [])
    disc, aut2, deloop = {}, {}, {}

    def add(x):
        if max_order is None or carrier_order(x) <= max_order:
            reg.objs[id(x)] = x
        return x

    def mor(src, dst, f0, f1, name):
        if reg.keep(src, dst):
            m = tgm.make_morphism(src, dst, f0, f1, name)
            reg.mors.append(m)
            return m
        return None

    for g in cons.catalog():
        disc[g.name] = add(cons.discrete_two_group(g))
        if max_order is None or g.order <= max_order:
            aut2[g.name] = add(cons.automorphism_two_group(g))
        if g.is_abelian:
            deloop[g.name] = add(cons.delooping_two_group(g))

    for g in cons.catalog():
        n = g.name
        d = disc[n]
        f = _auto(g)
        autg, taut, ad = cons.automorphisms(g)
        fimg = taut.map[f]
        mor(d, d, fimg, fimg, f"F{f}:{d.name}")
        if n in aut2:
            a = aut2[n]
            m = mor(d, a, ad, ad.images, f"{d.name}->{a.name}")
            cf = gp.conjugation_table(autg)[f]
            xg, xf = np.divmod(np.arange(a.g1.order), autg.order)
            mor(a, a, cf, fimg[xg] * autg.order + cf[xf], f"F{f}:{a.name}")
            if m is not None:
                _inner_chain(reg, m, _inner_2grp, _kernel_generators(a))
            if reg.keep(a):
                _inner_chain(reg, tgm.identity_morphism(a), _inner_2grp, _kernel_generators(a)[:1])
        if n in deloop and reg.keep(deloop[n]):
            _inner_chain(reg, tgm.identity_morphism(deloop[n]), _inner_2grp, _kernel_generators(deloop[n]))
    for hname, hom in catalog_homs():
        g, gq = hom.src.name, hom.dst.name
        mor(disc[g], disc[gq], hom, hom, f"{hname}:disc")
        if g in deloop and gq in deloop:
            mor(deloop[g], deloop[gq], gp.identity_hom(deloop[g].g0), hom, f"{hname}:deloop")
    units = [tgm.identity_two_morphism(m) for m in reg.mors]
    return Collection(tuple(reg.objs.values()), tuple(reg.mors), tuple(units + reg.twos))


@lru_cache(maxsize=None)
def catalog_two_groups(max_order: int | None = None) -> tuple[tgm.StrictTwoGroup, ...]:
    return twogroup_collection(max_order).objects
