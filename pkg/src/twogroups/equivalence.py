"""The 2-functors ``T: 2-Grp -> X-Mod`` and ``S: X-Mod -> 2-Grp`` and the
natural isomorphisms ``xi: ST => id`` and ``zeta: TS => id``.

Images of objects and 1-morphisms are memoized per input object, so that
``t1(F).src is t0(F.src)`` and the strict (reference) composability checks
downstream line up. Every image is rebuilt through the validating
constructors; nothing produced here is trusted.
"""

from __future__ import annotations

import weakref
from dataclasses import dataclass, field
from functools import wraps
from typing import Callable, Iterable

import numpy as np

from . import groups as gp
from . import twogroup as tgm
from . import xmod as xmm
from .groups import GroupIso
from .twocat import TWOGROUP_OPS, XMOD_OPS, Check, Ops, Report, label
from .twogroup import StrictTwoGroup, TwoGroupMorphism, TwoGroupTwoMorphism
from .xmod import CrossedModule, XMod2Morphism, XModMorphism


def _memo(fn):
    cache: weakref.WeakKeyDictionary = weakref.WeakKeyDictionary()

    @wraps(fn)
    def wrapper(x):
        try:
            return cache[x]
        except KeyError:
            out = cache[x] = fn(x)
            return out

    wrapper.cache = cache
    return wrapper


def _tag(prefix: str, x) -> str | None:
    return f"{prefix}({x.name})" if getattr(x, "name", None) else None


# ---------------------------------------------------------------- T


@_memo
def t0(tg: StrictTwoGroup) -> CrossedModule:
    """``(g0, ker s, t|ker s, (g, h) -> i(g) h i(g)^-1)``."""
    k, incl = tg.kernel_of_source
    tau = gp.restrict(tg.t, incl)
    return xmm.make_crossed_module(tg.g0, k, tau, tg.kernel_action, _tag("T", tg))


@_memo
def t1(m: TwoGroupMorphism) -> XModMorphism:
    """``(f0, f1 restricted to ker s)``."""
    _, incl = m.src.kernel_of_source
    _, incl_p = m.dst.kernel_of_source
    delta = gp.restrict(m.f1, incl, into=incl_p)
    return xmm.make_xmod_morphism(t0(m.src), t0(m.dst), m.f0, delta, _tag("T", m))


def kernel_part(tg: StrictTwoGroup, a) -> np.ndarray:
    """``a i(s a)^-1`` as an index into ``ker s``."""
    g1 = tg.g1
    kp = g1.table[a, g1.inverse[tg.i.images[tg.s.images[a]]]]
    _, incl = tg.kernel_of_source
    lookup = np.full(g1.order, -1, dtype=np.int64)
    lookup[incl.images] = np.arange(len(incl.images))
    return lookup[kp]


def t2(th: TwoGroupTwoMorphism) -> XMod2Morphism:
    """``eta(g) = theta(g) i'(s' theta g)^-1``, the first component of ``phi' theta``."""
    eta = kernel_part(th.dst, th.theta.images)
    return xmm.make_xmod_2morphism(t1(th.src_mor), t1(th.dst_mor), eta, _tag("T", th))


# ---------------------------------------------------------------- S


@_memo
def s0(xm: CrossedModule) -> StrictTwoGroup:
    """``(G, H ⋊ G, (h,g) -> g, (h,g) -> tau(h) g, g -> (e,g))`` with
    ``(j, tau(h) g) ∘ (h, g) = (j h, g)``."""
    g, h = xm.g, xm.h
    g1, (_, inj_g), proj = gp.semidirect_product(h, g, xm.alpha)
    m = g.order
    xh, xg = np.divmod(np.arange(g1.order), m)
    s = proj
    t = gp.make_hom(g1, g, g.table[xm.tau.images[xh], xg])
    i = inj_g
    pa, pb = gp.pullback_pairs(s, t)
    comp = h.table[xh[pa], xh[pb]] * m + xg[pb]
    return tgm.make_two_group(g, g1, s, t, i, comp, _tag("S", xm))


@_memo
def s1(m: XModMorphism) -> TwoGroupMorphism:
    """``(gamma, (h, g) -> (delta h, gamma g))``."""
    src, dst = s0(m.src), s0(m.dst)
    mg = m.src.g.order
    xh, xg = np.divmod(np.arange(src.g1.order), mg)
    f1 = m.delta.images[xh] * m.dst.g.order + m.gamma.images[xg]
    return tgm.make_morphism(src, dst, m.gamma, f1, _tag("S", m))


def s2(e: XMod2Morphism) -> TwoGroupTwoMorphism:
    """``g -> (eta g, gamma g)``."""
    theta = e.eta * e.dst.g.order + e.src_mor.gamma.images
    return tgm.make_two_morphism(s1(e.src_mor), s1(e.dst_mor), theta, _tag("S", e))


# ---------------------------------------------------------------- witnesses


@_memo
def _xi(tg: StrictTwoGroup):
    st = s0(t0(tg))
    phi = tgm.phi_iso(tg)
    # ST(tg).g1 and the codomain of phi are the same semidirect product
    back = gp.make_hom(st.g1, tg.g1, phi.backward.images)
    fwd = gp.make_hom(tg.g1, st.g1, phi.forward.images)
    mor = tgm.make_morphism(st, tg, gp.identity_hom(tg.g0), back, _tag("xi", tg))
    return mor, GroupIso(back, fwd)


def xi(tg: StrictTwoGroup) -> tuple[TwoGroupMorphism, GroupIso]:
    """``(id, phi^-1): ST(tg) -> tg`` and the isomorphism on arrows."""
    return _xi(tg)


@_memo
def _zeta(xm: CrossedModule):
    ts = t0(s0(xm))
    m = xm.g.order
    _, incl = s0(xm).kernel_of_source
    h_of = incl.images // m
    if not np.array_equal(incl.images % m, np.zeros_like(incl.images)):
        raise AssertionError("ker of the projection is not {(h, e)}")
    proj = gp.make_hom(ts.h, xm.h, h_of)
    back = np.empty(xm.h.order, dtype=np.int64)
    back[h_of] = np.arange(ts.h.order)
    iso = GroupIso(proj, gp.make_hom(xm.h, ts.h, back))
    mor = xmm.make_xmod_morphism(ts, xm, gp.identity_hom(xm.g), proj, _tag("zeta", xm))
    return mor, iso


def zeta(xm: CrossedModule) -> tuple[XModMorphism, GroupIso]:
    """``(id, pi_1 restricted to ker pi_2): TS(xm) -> xm`` and the iso on ``H``."""
    return _zeta(xm)


def st(x):
    """``S ∘ T`` on an object, morphism or 2-morphism of 2-Grp."""
    if isinstance(x, StrictTwoGroup):
        return s0(t0(x))
    if isinstance(x, TwoGroupMorphism):
        return s1(t1(x))
    return s2(t2(x))


def ts(x):
    """``T ∘ S`` on an object, morphism or 2-morphism of X-Mod."""
    if isinstance(x, CrossedModule):
        return t0(s0(x))
    if isinstance(x, XModMorphism):
        return t1(s1(x))
    return t2(s2(x))


# ---------------------------------------------------------------- round trip


@dataclass
class RoundTripReport:
    subject: str
    witnesses: Report = field(default_factory=Report)
    naturality: Report = field(default_factory=Report)
    functoriality: Report = field(default_factory=Report)

    @property
    def ok(self) -> bool:
        return self.witnesses.ok and self.naturality.ok and self.functoriality.ok

    def checks(self) -> list[Check]:
        return self.witnesses.checks + self.naturality.checks + self.functoriality.checks

    def lines(self) -> list[str]:
        return [c.line() for c in self.checks()]

    def text(self) -> str:
        return "".join(line + "\n" for line in self.lines())


@dataclass(frozen=True)
class _Side:
    ops: Ops
    other: Ops
    f0: Callable
    f1: Callable
    f2: Callable
    g0: Callable
    g1: Callable
    g2: Callable
    witness: Callable
    round_trip: Callable
    wname: str
    fname: str
    gname: str


_TWOGROUP_SIDE = _Side(TWOGROUP_OPS, XMOD_OPS, t0, t1, t2, s0, s1, s2, xi, st, "xi", "T", "S")
_XMOD_SIDE = _Side(XMOD_OPS, TWOGROUP_OPS, s0, s1, s2, t0, t1, t2, zeta, ts, "zeta", "S", "T")


def _functoriality(rep: Report, fname: str, ops: Ops, other: Ops, f0, f1, f2, objs, mors, twos, names):
    for x in objs:
        rep.add(f"{fname}-identity[{names(x)}]", lambda x=x: f1(ops.identity(x)) == other.identity(f0(x)))
    for g in mors:
        for f in mors:
            if f.dst is g.src:
                rep.add(f"{fname}-compose[{names(g)},{names(f)}]",
                        lambda g=g, f=f: f1(ops.compose(g, f)) == other.compose(f1(g), f1(f)))
    for f in mors:
        rep.add(f"{fname}-unit[{names(f)}]", lambda f=f: f2(ops.unit(f)) == other.unit(f1(f)))
    for up in twos:
        for lo in twos:
            if lo.dst_mor == up.src_mor:
                rep.add(f"{fname}-vertical[{names(up)},{names(lo)}]",
                        lambda up=up, lo=lo: f2(ops.vcompose(up, lo)) == other.vcompose(f2(up), f2(lo)))
    for out in twos:
        for inn in twos:
            if inn.dst is out.src:
                rep.add(f"{fname}-horizontal[{names(out)},{names(inn)}]",
                        lambda out=out, inn=inn: f2(ops.hcompose(out, inn)) == other.hcompose(f2(out), f2(inn)))


def verify_round_trip(subjects: Iterable, morphisms: Iterable = (), two_morphisms: Iterable = (),
                      *, subject: str = "collection",
                      mutate: Callable | None = None) -> RoundTripReport:
    """Check the equivalence on a collection from one side.

    For each object: the witness (``xi`` or ``zeta``) is a valid morphism
    whose components are group isomorphisms. For each morphism ``F: A -> B``:
    ``w(B) ∘ RT(F) == F ∘ w(A)``. For each 2-morphism ``th``:
    ``1_{w(B)} ∘ RT(th) == th ∘ 1_{w(A)}`` (whiskering as horizontal
    composition with identity 2-morphisms). Then functoriality of the first
    functor on the collection and of the second on its image.

    ``mutate(x, image)`` may replace the round-trip image of a morphism or
    2-morphism before its naturality square is checked (mutation testing).
    """
    objs, mors, twos = list(subjects), list(morphisms), list(two_morphisms)
    if not objs:
        raise ValueError("need at least one subject")
    side = _TWOGROUP_SIDE if isinstance(objs[0], StrictTwoGroup) else _XMOD_SIDE
    ops = side.ops
    rep = RoundTripReport(subject)
    nm: dict[int, str] = {}
    for k, x in enumerate(objs):
        nm[id(x)] = label(x, k, "obj")
    for k, x in enumerate(mors):
        nm[id(x)] = label(x, k, "mor")
    for k, x in enumerate(twos):
        nm[id(x)] = label(x, k, "two")

    def names(x) -> str:
        return nm.get(id(x)) or getattr(x, "name", None) or "?"

    w = side.wname
    for x in objs:
        def witness_ok(x=x):
            mor, iso = side.witness(x)
            comps = (mor.f0, mor.f1) if side is _TWOGROUP_SIDE else (mor.gamma, mor.delta)
            return all(c.is_injective and c.is_surjective for c in comps) and iso is not None
        rep.witnesses.add(f"{w}-iso[{names(x)}]", witness_ok)

    def rt(x):
        image = side.round_trip(x)
        return mutate(x, image) if mutate is not None else image

    for f in mors:
        rep.naturality.add(
            f"{w}-natural[{names(f)}]",
            lambda f=f: ops.compose(side.witness(f.dst)[0], rt(f)) == ops.compose(f, side.witness(f.src)[0]))
    for th in twos:
        rep.naturality.add(
            f"{w}-natural-2[{names(th)}]",
            lambda th=th: (ops.hcompose(ops.unit(side.witness(th.dst)[0]), rt(th))
                           == ops.hcompose(th, ops.unit(side.witness(th.src)[0]))))

    _functoriality(rep.functoriality, side.fname, ops, side.other, side.f0, side.f1, side.f2,
                   objs, mors, twos, names)

    # the second functor, on the image of the first
    img_objs = [side.f0(x) for x in objs]
    img_mors = [side.f1(f) for f in mors]
    img_twos = [side.f2(e) for e in twos]
    for x, y in zip(objs + mors + twos, img_objs + img_mors + img_twos):
        nm[id(y)] = f"{side.fname}({names(x)})"
    _functoriality(rep.functoriality, side.gname, side.other, ops, side.g0, side.g1, side.g2,
                   img_objs, img_mors, img_twos, names)
    return rep
