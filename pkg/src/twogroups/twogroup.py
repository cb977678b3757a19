"""Strict 2-groups: internal categories in the category of groups.

A 2-group is ``(g0, g1, s, t, i, comp)``. Composable pairs ``(a, b)`` are
those with ``s(a) == t(b)`` (``a`` after ``b``), listed lexicographically;
``comp`` is stored as one entry per composable pair.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Mapping

import numpy as np

from . import groups as gp
from .errors import (
    AxiomViolation,
    BoundaryOfCompositeViolation,
    BoundaryViolation,
    CompositionAssociativityViolation,
    CompositionDomainViolation,
    DerivedCompositionViolation,
    FunctorViolation,
    IdentitySectionViolation,
    InterchangeViolation,
    NaturalityViolation,
    NotComposable,
    NotParallel,
    TypingError,
    UnitLawViolation,
)
from .groups import FiniteGroup, GroupHom, GroupIso

_CHUNK = 1 << 22


@dataclass(frozen=True, eq=False)
class StrictTwoGroup:
    g0: FiniteGroup
    g1: FiniteGroup
    s: GroupHom
    t: GroupHom
    i: GroupHom
    comp: np.ndarray
    name: str | None = field(default=None)

    def __repr__(self) -> str:
        tag = f" {self.name}" if self.name else ""
        return f"<StrictTwoGroup{tag} |G0|={self.g0.order} |G1|={self.g1.order}>"

    @cached_property
    def pairs(self) -> tuple[np.ndarray, np.ndarray]:
        return gp.pullback_pairs(self.s, self.t)

    @cached_property
    def pair_index(self) -> np.ndarray:
        a, b = self.pairs
        index = np.full((self.g1.order, self.g1.order), -1, dtype=np.int64)
        index[a, b] = np.arange(len(a))
        return index

    def compose(self, a, b):
        """``a ∘ b``; requires ``s(a) == t(b)``."""
        p = self.pair_index[a, b]
        if np.any(p < 0):
            raise NotComposable(f"s(a) != t(b) for a={a}, b={b}")
        return self.comp[p]

    def cat_inverse(self, a):
        """Inverse of the arrow ``a`` under composition: ``i(t a) a^-1 i(s a)``."""
        g1 = self.g1
        return g1.table[g1.table[self.i(self.t(a)), g1.inverse[a]], self.i(self.s(a))]

    @cached_property
    def kernel_of_source(self) -> tuple[FiniteGroup, GroupHom]:
        return gp.kernel(self.s)

    @cached_property
    def kernel_action(self) -> gp.GroupAction:
        """``g0`` acting on ``ker s`` by conjugation with ``i(g)``."""
        k, incl = self.kernel_of_source
        conj = gp.conjugation_table(self.g1)[self.i.images]
        return gp.restricted_action(gp.GroupAction(self.g0, self.g1, gp._frozen(conj)), incl)

    def composable_group(self):
        """The pullback ``g1 ×_{s,t} g1`` with its projections."""
        return gp.pullback(self.s, self.t)


def derived_composition(g1: FiniteGroup, s: GroupHom, i: GroupHom, a, b):
    """``a · i(s a)^-1 · b``."""
    return g1.table[g1.table[a, g1.inverse[i.images[s.images[a]]]], b]


def _check_typing(g0, g1, s, t, i) -> None:
    for name, h, src, dst in (("s", s, g1, g0), ("t", t, g1, g0), ("i", i, g0, g1)):
        if h.src != src or h.dst != dst:
            raise TypingError(f"structure map {name} has the wrong domain or codomain")


def _comp_array(g1, s, t, comp) -> np.ndarray:
    a, b = gp.pullback_pairs(s, t)
    if isinstance(comp, Mapping):
        expected = set(zip(a.tolist(), b.tolist()))
        keys = set(comp)
        stray = sorted(keys ^ expected)
        if stray:
            x, y = stray[0]
            raise CompositionDomainViolation(a=x, b=y)
        comp = [comp[p] for p in zip(a.tolist(), b.tolist())]
    comp = np.asarray(comp)
    if comp.shape != (len(a),):
        raise ValueError(f"composition needs {len(a)} entries, one per composable pair")
    if ((comp < 0) | (comp >= g1.order)).any():
        raise ValueError("composition entry out of range")
    return gp._frozen(comp)


def _identity_section_failure(g0, s, t, i):
    ar = np.arange(g0.order)
    bad = (s.images[i.images] != ar) | (t.images[i.images] != ar)
    if bad.any():
        return IdentitySectionViolation(g=int(np.argmax(bad)))
    return None


def _first_pair(mask, pa, pb):
    if not mask.any():
        return None
    k = int(np.argmax(mask))
    return int(pa[k]), int(pb[k])


def interchange_failure(tg: StrictTwoGroup):
    """First ``((a, b), (a', b'))`` with ``comp(aa', bb') != comp(a,b) comp(a',b')``."""
    pa, pb = tg.pairs
    t1 = tg.g1.table
    index = tg.pair_index
    n = len(pa)
    step = max(1, _CHUNK // max(n, 1))
    for lo in range(0, n, step):
        hi = min(n, lo + step)
        prod = index[t1[pa[lo:hi, None], pa[None, :]], t1[pb[lo:hi, None], pb[None, :]]]
        if (prod < 0).any():
            # s, t are homomorphisms, so products of composable pairs are composable
            raise AssertionError("pullback not closed under multiplication")
        lhs = tg.comp[prod]
        rhs = t1[tg.comp[lo:hi, None], tg.comp[None, :]]
        hit = gp._first(lhs != rhs)
        if hit is not None:
            p, q = hit[0] + lo, hit[1]
            return InterchangeViolation(a=int(pa[p]), b=int(pb[p]), ap=int(pa[q]), bp=int(pb[q]))
    return None


def _associativity_failure(tg: StrictTwoGroup):
    pa, pb = tg.pairs
    index = tg.pair_index
    comp = tg.comp
    worst = None
    starts = {}
    for k, (x, y) in enumerate(zip(pa.tolist(), pb.tolist())):
        starts.setdefault(x, []).append(k)
    ends = {}
    for k, y in enumerate(pb.tolist()):
        ends.setdefault(y, []).append(k)
    for b, left in ends.items():
        right = starts.get(b)
        if not right:
            continue
        left = np.array(left)
        right = np.array(right)
        a = pa[left]
        c = pb[right]
        ab = comp[left]
        bc = comp[right]
        lhs = comp[index[ab[:, None], c[None, :]]]
        rhs = comp[index[a[:, None], bc[None, :]]]
        bad = np.argwhere(lhs != rhs)
        for u, v in bad:
            cand = (int(a[u]), b, int(c[v]))
            if worst is None or cand < worst:
                worst = cand
    if worst is None:
        return None
    return CompositionAssociativityViolation(a=worst[0], b=worst[1], c=worst[2])


def two_group_violations(tg: StrictTwoGroup, *, stop_early: bool = False) -> list[AxiomViolation]:
    """Every failing axiom family with its first witness.

    Families, in order: identity section (``s i = t i = id``), unit laws,
    source/target of composites, associativity of composition, interchange
    (composition is a homomorphism). The derived-composition identity is a
    consequence of these and is checked by :func:`derived_composition_failure`.
    """
    out: list[AxiomViolation] = []
    g1, s, t, i = tg.g1, tg.s, tg.t, tg.i
    err = _identity_section_failure(tg.g0, s, t, i)
    if err is not None:
        out.append(err)
        if stop_early:
            return out
    pa, pb = tg.pairs
    index = tg.pair_index
    ar = np.arange(g1.order)
    right = index[ar, i.images[s.images]]
    left = index[i.images[t.images], ar]
    bad_r = (right < 0) | (tg.comp[np.maximum(right, 0)] != ar)
    bad_l = (left < 0) | (tg.comp[np.maximum(left, 0)] != ar)
    if bad_r.any() or bad_l.any():
        # right unit a ∘ i(s a) = a, left unit i(t b) ∘ b = b
        if bad_r.any() and (not bad_l.any() or np.argmax(bad_r) <= np.argmax(bad_l)):
            out.append(UnitLawViolation(a=int(np.argmax(bad_r))))
        else:
            out.append(UnitLawViolation(b=int(np.argmax(bad_l))))
        if stop_early:
            return out
    bad = (s.images[tg.comp] != s.images[pb]) | (t.images[tg.comp] != t.images[pa])
    hit = _first_pair(bad, pa, pb)
    if hit is not None:
        out.append(BoundaryOfCompositeViolation(a=hit[0], b=hit[1]))
        if stop_early:
            return out
    else:
        err = _associativity_failure(tg)
        if err is not None:
            out.append(err)
            if stop_early:
                return out
    err = interchange_failure(tg)
    if err is not None:
        out.append(err)
    return out


def derived_composition_failure(tg: StrictTwoGroup):
    pa, pb = tg.pairs
    expected = derived_composition(tg.g1, tg.s, tg.i, pa, pb)
    hit = _first_pair(tg.comp != expected, pa, pb)
    if hit is not None:
        return DerivedCompositionViolation(a=hit[0], b=hit[1])
    return None


def make_two_group(g0, g1, s, t, i, comp, name: str | None = None) -> StrictTwoGroup:
    """Validate the data of a strict 2-group exhaustively.

    ``comp`` is either an array with one entry per composable pair (in the
    lexicographic order of :func:`groups.pullback_pairs`) or a mapping
    ``{(a, b): a ∘ b}`` defined exactly on the composable pairs.
    """
    _check_typing(g0, g1, s, t, i)
    comp = _comp_array(g1, s, t, comp)
    tg = StrictTwoGroup(g0, g1, s, t, i, comp, name)
    errs = two_group_violations(tg, stop_early=True)
    if errs:
        raise errs[0]
    return tg


def derive_composition(g0, g1, s, t, i, name: str | None = None) -> StrictTwoGroup:
    """Build ``a ∘ b = a i(s a)^-1 b`` and validate the result.

    If validation fails, no strict 2-group structure exists on this data.
    """
    _check_typing(g0, g1, s, t, i)
    err = _identity_section_failure(g0, s, t, i)
    if err is not None:
        raise err
    pa, pb = gp.pullback_pairs(s, t)
    return make_two_group(g0, g1, s, t, i, derived_composition(g1, s, i, pa, pb), name)


def phi_iso(tg: StrictTwoGroup) -> GroupIso:
    """``g1 ≅ ker s ⋊ g0`` via ``a -> (a i(s a)^-1, s a)``, inverse ``(h, g) -> h i(g)``."""
    k, incl = tg.kernel_of_source
    # |ker s| |g0| == |g1|, already in memory, so the carrier bound is moot
    sd, _, _ = gp.semidirect_product(k, tg.g0, tg.kernel_action, bound=tg.g1.order)
    g1 = tg.g1
    m = tg.g0.order
    a = np.arange(g1.order)
    sa = tg.s.images
    kpart = g1.table[a, g1.inverse[tg.i.images[sa]]]
    lookup = np.full(g1.order, -1, dtype=np.int64)
    lookup[incl.images] = np.arange(k.order)
    forward = lookup[kpart] * m + sa
    h, g = np.divmod(np.arange(sd.order), m)
    backward = g1.table[incl.images[h], tg.i.images[g]]
    return GroupIso(gp.make_hom(g1, sd, forward), gp.make_hom(sd, g1, backward))


# ---------------------------------------------------------------- morphisms


@dataclass(frozen=True, eq=False)
class TwoGroupMorphism:
    src: StrictTwoGroup
    dst: StrictTwoGroup
    f0: GroupHom
    f1: GroupHom
    name: str | None = None

    def __eq__(self, other) -> bool:
        if not isinstance(other, TwoGroupMorphism):
            return NotImplemented
        return (self.src is other.src and self.dst is other.dst
                and np.array_equal(self.f0.images, other.f0.images)
                and np.array_equal(self.f1.images, other.f1.images))

    def __hash__(self) -> int:
        return hash((id(self.src), id(self.dst), self.f0.images.tobytes(), self.f1.images.tobytes()))

    def __repr__(self) -> str:
        return f"<TwoGroupMorphism {self.name or ''} {self.src.name}->{self.dst.name}>"


def morphism_violations(m: TwoGroupMorphism) -> list[AxiomViolation]:
    src, dst, f0, f1 = m.src, m.dst, m.f0, m.f1
    out = []
    bad = dst.s.images[f1.images] != f0.images[src.s.images]
    if bad.any():
        out.append(FunctorViolation("functor-source", a=int(np.argmax(bad))))
    bad = dst.t.images[f1.images] != f0.images[src.t.images]
    if bad.any():
        out.append(FunctorViolation("functor-target", a=int(np.argmax(bad))))
    bad = f1.images[src.i.images] != dst.i.images[f0.images]
    if bad.any():
        out.append(FunctorViolation("functor-identity", g=int(np.argmax(bad))))
    if not out:
        pa, pb = src.pairs
        lhs = f1.images[src.comp]
        rhs = dst.compose(f1.images[pa], f1.images[pb])
        hit = _first_pair(lhs != rhs, pa, pb)
        if hit is not None:
            out.append(FunctorViolation("functor-composition", a=hit[0], b=hit[1]))
    return out


def make_morphism(src: StrictTwoGroup, dst: StrictTwoGroup, f0, f1, name: str | None = None) -> TwoGroupMorphism:
    if not isinstance(f0, GroupHom):
        f0 = gp.make_hom(src.g0, dst.g0, f0)
    if not isinstance(f1, GroupHom):
        f1 = gp.make_hom(src.g1, dst.g1, f1)
    if f0.src != src.g0 or f0.dst != dst.g0 or f1.src != src.g1 or f1.dst != dst.g1:
        raise TypingError("morphism components have the wrong domain or codomain")
    m = TwoGroupMorphism(src, dst, f0, f1, name)
    errs = morphism_violations(m)
    if errs:
        raise errs[0]
    return m


def identity_morphism(tg: StrictTwoGroup) -> TwoGroupMorphism:
    return TwoGroupMorphism(tg, tg, gp.identity_hom(tg.g0), gp.identity_hom(tg.g1), f"id[{tg.name}]")


def compose_morphisms(after: TwoGroupMorphism, before: TwoGroupMorphism) -> TwoGroupMorphism:
    if before.dst is not after.src:
        raise NotComposable("morphisms do not share the middle 2-group")
    return make_morphism(before.src, after.dst,
                         gp.compose_homs(after.f0, before.f0), gp.compose_homs(after.f1, before.f1))


# ---------------------------------------------------------------- 2-morphisms


@dataclass(frozen=True, eq=False)
class TwoGroupTwoMorphism:
    src_mor: TwoGroupMorphism
    dst_mor: TwoGroupMorphism
    theta: GroupHom
    name: str | None = None

    def __eq__(self, other) -> bool:
        if not isinstance(other, TwoGroupTwoMorphism):
            return NotImplemented
        return (self.src_mor == other.src_mor and self.dst_mor == other.dst_mor
                and np.array_equal(self.theta.images, other.theta.images))

    def __hash__(self) -> int:
        return hash((hash(self.src_mor), hash(self.dst_mor), self.theta.images.tobytes()))

    @property
    def src(self) -> StrictTwoGroup:
        return self.src_mor.src

    @property
    def dst(self) -> StrictTwoGroup:
        return self.src_mor.dst


def two_morphism_violations(th: TwoGroupTwoMorphism) -> list[AxiomViolation]:
    f, e, theta = th.src_mor, th.dst_mor, th.theta.images
    tgt = f.dst
    out = []
    bad = tgt.s.images[theta] != f.f0.images
    if bad.any():
        out.append(BoundaryViolation("boundary-source", g=int(np.argmax(bad))))
    bad = tgt.t.images[theta] != e.f0.images
    if bad.any():
        out.append(BoundaryViolation("boundary-target", g=int(np.argmax(bad))))
    if out:
        return out
    # θ(t b) ∘ f1(b) == e1(b) ∘ θ(s b)
    src = f.src
    lhs = tgt.compose(theta[src.t.images], f.f1.images)
    rhs = tgt.compose(e.f1.images, theta[src.s.images])
    bad = lhs != rhs
    if bad.any():
        out.append(NaturalityViolation(b=int(np.argmax(bad))))
    return out


def make_two_morphism(f: TwoGroupMorphism, e: TwoGroupMorphism, theta, name: str | None = None) -> TwoGroupTwoMorphism:
    if f.src is not e.src or f.dst is not e.dst:
        raise NotParallel("2-morphism boundaries must be parallel morphisms")
    if not isinstance(theta, GroupHom):
        theta = gp.make_hom(f.src.g0, f.dst.g1, theta)
    if theta.src != f.src.g0 or theta.dst != f.dst.g1:
        raise TypingError("2-morphism component must map g0 into the target's g1")
    th = TwoGroupTwoMorphism(f, e, theta, name)
    errs = two_morphism_violations(th)
    if errs:
        raise errs[0]
    return th


def identity_two_morphism(f: TwoGroupMorphism) -> TwoGroupTwoMorphism:
    """``g -> i'(f0 g)``."""
    theta = gp.GroupHom(f.src.g0, f.dst.g1, gp._frozen(f.dst.i.images[f.f0.images]))
    return TwoGroupTwoMorphism(f, f, theta, f"1[{f.name}]" if f.name else None)


def vcompose_2morphisms(upper: TwoGroupTwoMorphism, lower: TwoGroupTwoMorphism) -> TwoGroupTwoMorphism:
    """``upper • lower``: ``g -> upper(g) ∘ lower(g)``."""
    if lower.dst_mor != upper.src_mor:
        raise NotComposable("lower 2-morphism does not end where the upper one starts")
    tgt = lower.dst
    theta = tgt.compose(upper.theta.images, lower.theta.images)
    return make_two_morphism(lower.src_mor, upper.dst_mor, theta)


def hcompose_2morphisms(outer: TwoGroupTwoMorphism, inner: TwoGroupTwoMorphism) -> TwoGroupTwoMorphism:
    """``outer ∘ inner``: ``g -> outer(e0 g) ∘ f1'(inner(g))``."""
    if inner.dst is not outer.src:
        raise NotComposable("2-morphisms do not share the middle 2-group")
    f, e = inner.src_mor, inner.dst_mor
    fp = outer.src_mor
    theta = outer.dst.compose(outer.theta.images[e.f0.images], fp.f1.images[inner.theta.images])
    return make_two_morphism(compose_morphisms(fp, f), compose_morphisms(outer.dst_mor, e), theta)


def hcompose_alternative(outer: TwoGroupTwoMorphism, inner: TwoGroupTwoMorphism) -> np.ndarray:
    """The other diagonal of the naturality square: ``g -> e1'(inner g) ∘ outer(f0 g)``."""
    ep = outer.dst_mor
    return outer.dst.compose(ep.f1.images[inner.theta.images], outer.theta.images[inner.src_mor.f0.images])
