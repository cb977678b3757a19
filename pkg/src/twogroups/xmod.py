"""Crossed modules ``(G, H, tau, alpha)``, their morphisms and 2-morphisms."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from . import groups as gp
from .errors import (
    AxiomViolation,
    ChainHomotopy1Violation,
    ChainHomotopy2Violation,
    CrossedLawViolation,
    EquivarianceViolation,
    InducedHomViolation,
    NotComposable,
    NotParallel,
    PeifferViolation,
    TypingError,
    XModMorphismViolation,
)
from .groups import FiniteGroup, GroupAction, GroupHom


@dataclass(frozen=True, eq=False)
class CrossedModule:
    g: FiniteGroup
    h: FiniteGroup
    tau: GroupHom
    alpha: GroupAction
    name: str | None = None

    def __repr__(self) -> str:
        tag = f" {self.name}" if self.name else ""
        return f"<CrossedModule{tag} |G|={self.g.order} |H|={self.h.order}>"

    def same_as(self, other: "CrossedModule") -> bool:
        """Table equality of all four components."""
        return (self.g == other.g and self.h == other.h
                and np.array_equal(self.tau.images, other.tau.images)
                and np.array_equal(self.alpha.map, other.alpha.map))


def xmod_violations(xm: CrossedModule) -> list[AxiomViolation]:
    g, h, tau, alpha = xm.g, xm.h, xm.tau.images, xm.alpha.map
    out: list[AxiomViolation] = []
    # tau(alpha(g, h)) == g tau(h) g^-1
    lhs = tau[alpha]
    rhs = gp.conjugation_table(g)[:, tau]
    hit = gp._first(lhs != rhs)
    if hit is not None:
        out.append(EquivarianceViolation(g=hit[0], h=hit[1]))
    # alpha(tau h, h') == h h' h^-1
    hit = gp._first(alpha[tau] != gp.conjugation_table(h))
    if hit is not None:
        out.append(PeifferViolation(**{"h": hit[0], "h'": hit[1]}))
    return out


def make_crossed_module(g: FiniteGroup, h: FiniteGroup, tau, alpha, name: str | None = None) -> CrossedModule:
    if not isinstance(tau, GroupHom):
        tau = gp.make_hom(h, g, tau)
    if not isinstance(alpha, GroupAction):
        alpha = gp.make_action(g, h, alpha)
    if tau.src != h or tau.dst != g or alpha.actor != g or alpha.space != h:
        raise TypingError("tau must map H to G and alpha must be an action of G on H")
    xm = CrossedModule(g, h, tau, alpha, name)
    errs = xmod_violations(xm)
    if errs:
        raise errs[0]
    return xm


# ---------------------------------------------------------------- morphisms


@dataclass(frozen=True, eq=False)
class XModMorphism:
    src: CrossedModule
    dst: CrossedModule
    gamma: GroupHom
    delta: GroupHom
    name: str | None = None

    def __eq__(self, other) -> bool:
        if not isinstance(other, XModMorphism):
            return NotImplemented
        return (self.src is other.src and self.dst is other.dst
                and np.array_equal(self.gamma.images, other.gamma.images)
                and np.array_equal(self.delta.images, other.delta.images))

    def __hash__(self) -> int:
        return hash((id(self.src), id(self.dst), self.gamma.images.tobytes(), self.delta.images.tobytes()))

    def __repr__(self) -> str:
        return f"<XModMorphism {self.name or ''} {self.src.name}->{self.dst.name}>"


def xmod_morphism_violations(m: XModMorphism) -> list[AxiomViolation]:
    src, dst = m.src, m.dst
    gamma, delta = m.gamma.images, m.delta.images
    out = []
    bad = dst.tau.images[delta] != gamma[src.tau.images]
    if bad.any():
        out.append(XModMorphismViolation("xmod-morphism-tau", h=int(np.argmax(bad))))
    lhs = delta[src.alpha.map]
    rhs = dst.alpha.map[gamma[:, None], delta[None, :]]
    hit = gp._first(lhs != rhs)
    if hit is not None:
        out.append(XModMorphismViolation("xmod-morphism-action", g=hit[0], h=hit[1]))
    return out


def make_xmod_morphism(src: CrossedModule, dst: CrossedModule, gamma, delta, name: str | None = None) -> XModMorphism:
    if not isinstance(gamma, GroupHom):
        gamma = gp.make_hom(src.g, dst.g, gamma)
    if not isinstance(delta, GroupHom):
        delta = gp.make_hom(src.h, dst.h, delta)
    if gamma.src != src.g or gamma.dst != dst.g or delta.src != src.h or delta.dst != dst.h:
        raise TypingError("morphism components have the wrong domain or codomain")
    m = XModMorphism(src, dst, gamma, delta, name)
    errs = xmod_morphism_violations(m)
    if errs:
        raise errs[0]
    return m


def identity_xmod_morphism(xm: CrossedModule) -> XModMorphism:
    return XModMorphism(xm, xm, gp.identity_hom(xm.g), gp.identity_hom(xm.h), f"id[{xm.name}]")


def compose_xmod_morphisms(after: XModMorphism, before: XModMorphism) -> XModMorphism:
    if before.dst is not after.src:
        raise NotComposable("morphisms do not share the middle crossed module")
    return make_xmod_morphism(before.src, after.dst,
                              gp.compose_homs(after.gamma, before.gamma),
                              gp.compose_homs(after.delta, before.delta))


# ---------------------------------------------------------------- 2-morphisms


@dataclass(frozen=True, eq=False)
class XMod2Morphism:
    """``eta: G -> H'`` from ``(gamma, delta)`` to ``(Gamma, Delta)``.

    ``eta`` is a plain index array; it is a crossed homomorphism, not in
    general a group homomorphism.
    """

    src_mor: XModMorphism
    dst_mor: XModMorphism
    eta: np.ndarray
    name: str | None = None

    def __eq__(self, other) -> bool:
        if not isinstance(other, XMod2Morphism):
            return NotImplemented
        return (self.src_mor == other.src_mor and self.dst_mor == other.dst_mor
                and np.array_equal(self.eta, other.eta))

    def __hash__(self) -> int:
        return hash((hash(self.src_mor), hash(self.dst_mor), self.eta.tobytes()))

    @property
    def src(self) -> CrossedModule:
        return self.src_mor.src

    @property
    def dst(self) -> CrossedModule:
        return self.src_mor.dst


def xmod_2morphism_violations(e: XMod2Morphism) -> list[AxiomViolation]:
    f, big = e.src_mor, e.dst_mor
    src, dst = f.src, f.dst
    eta = e.eta
    hp = dst.h
    out = []
    # eta(g g~) == eta(g) alpha'(gamma g, eta g~)
    lhs = eta[src.g.table]
    rhs = hp.table[eta[:, None], dst.alpha.map[f.gamma.images[:, None], eta[None, :]]]
    hit = gp._first(lhs != rhs)
    if hit is not None:
        out.append(CrossedLawViolation(g=hit[0], gt=hit[1]))
    # tau'(eta g) == Gamma(g) gamma(g)^-1
    gp_ = dst.g
    bad = dst.tau.images[eta] != gp_.table[big.gamma.images, gp_.inverse[f.gamma.images]]
    if bad.any():
        out.append(ChainHomotopy1Violation(g=int(np.argmax(bad))))
    # eta(tau h) == Delta(h) delta(h)^-1
    bad = eta[src.tau.images] != hp.table[big.delta.images, hp.inverse[f.delta.images]]
    if bad.any():
        out.append(ChainHomotopy2Violation(h=int(np.argmax(bad))))
    return out


def make_xmod_2morphism(f: XModMorphism, e: XModMorphism, eta, name: str | None = None) -> XMod2Morphism:
    if f.src is not e.src or f.dst is not e.dst:
        raise NotParallel("2-morphism boundaries must be parallel morphisms")
    eta = np.asarray(eta)
    if eta.shape != (f.src.g.order,):
        raise ValueError(f"eta needs {f.src.g.order} entries")
    if ((eta < 0) | (eta >= f.dst.h.order)).any():
        raise ValueError("eta entry out of range")
    e2 = XMod2Morphism(f, e, gp._frozen(eta), name)
    errs = xmod_2morphism_violations(e2)
    if errs:
        raise errs[0]
    return e2


def unit_2morphism(f: XModMorphism) -> XMod2Morphism:
    """The constant map to the identity of ``H'``."""
    return XMod2Morphism(f, f, gp._frozen(np.zeros(f.src.g.order)), f"1[{f.name}]" if f.name else None)


def induced_hom(e: XMod2Morphism) -> GroupHom:
    """``g -> (eta g, gamma g)`` into ``H' ⋊ G'``, verified multiplicative."""
    dst = e.dst
    sd, _, _ = gp.semidirect_product(dst.h, dst.g, dst.alpha, bound=dst.h.order * dst.g.order)
    images = e.eta * dst.g.order + e.src_mor.gamma.images
    try:
        return gp.make_hom(e.src.g, sd, images)
    except AxiomViolation as err:
        raise InducedHomViolation(**err.witness) from err


def vcompose_xmod_2morphisms(eta_bar: XMod2Morphism, eta: XMod2Morphism) -> XMod2Morphism:
    """``eta_bar • eta``: pointwise product ``eta_bar(g) eta(g)`` in ``H'``."""
    if eta.dst_mor != eta_bar.src_mor:
        raise NotComposable("eta does not end where eta_bar starts")
    hp = eta.dst.h
    return make_xmod_2morphism(eta.src_mor, eta_bar.dst_mor, hp.table[eta_bar.eta, eta.eta])


def hcompose_xmod_2morphisms(eta_p: XMod2Morphism, eta: XMod2Morphism) -> XMod2Morphism:
    """``eta' ∘ eta``: ``g -> Delta'(eta g) · eta'(gamma g)``."""
    if eta.dst is not eta_p.src:
        raise NotComposable("2-morphisms do not share the middle crossed module")
    hpp = eta_p.dst.h
    values = hpp.table[eta_p.dst_mor.delta.images[eta.eta], eta_p.eta[eta.src_mor.gamma.images]]
    return make_xmod_2morphism(compose_xmod_morphisms(eta_p.src_mor, eta.src_mor),
                               compose_xmod_morphisms(eta_p.dst_mor, eta.dst_mor), values)


def hcompose_xmod_alternative(eta_p: XMod2Morphism, eta: XMod2Morphism) -> np.ndarray:
    """``g -> eta'(Gamma g) · delta'(eta g)``."""
    hpp = eta_p.dst.h
    return hpp.table[eta_p.eta[eta.dst_mor.gamma.images], eta_p.src_mor.delta.images[eta.eta]]


def check_2category_laws(morphisms, two_morphisms):
    """Unit, associativity, formula-agreement and interchange laws of X-Mod
    over a collection; see :func:`twocat.check_laws`."""
    from .twocat import XMOD_OPS, check_laws
    return check_laws(XMOD_OPS, morphisms, two_morphisms)
