"""Named example families, extension constructors and the group catalog.

Catalog element orderings (pinned; golden files depend on them):

- ``Zn``: residues ``0..n-1``.
- ``AxB``: pairs ``(a, b)`` at index ``a * |B| + b``.
- ``S3``, ``A4``: permutations in one-line notation, lexicographic order,
  multiplied as maps, ``(p q)(x) = p(q(x))``.
- ``D4``: ``Z4 ⋊ Z2`` with inversion, ``r^k f^j`` at index ``2k + j``.
- ``Q8``: ``1, -1, i, -i, j, -j, k, -k``.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations

import numpy as np

from . import groups as gp
from . import twogroup as tgm
from . import xmod as xmm
from .errors import KernelNotCentral, NotAbelian, NotASection, NotInjective, NotNormal, NotSurjective
from .groups import FiniteGroup, GroupHom

# ---------------------------------------------------------------- catalog


def permutation_group(perms, name: str | None = None) -> FiniteGroup:
    perms = [tuple(p) for p in perms]
    index = {p: k for k, p in enumerate(perms)}
    table = [[index[tuple(p[x] for x in q)] for q in perms] for p in perms]
    return gp.make_group(table, ["".join(map(str, p)) for p in perms], name)


def _parity(p) -> int:
    return sum(1 for a in range(len(p)) for b in range(a + 1, len(p)) if p[a] > p[b]) % 2


def _quaternions() -> FiniteGroup:
    # unit quaternions as (sign, axis) with axis 0=1, 1=i, 2=j, 3=k
    names = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
    elems = [(1, 0), (-1, 0), (1, 1), (-1, 1), (1, 2), (-1, 2), (1, 3), (-1, 3)]
    unit = {(0, 0): (1, 0), (0, 1): (1, 1), (0, 2): (1, 2), (0, 3): (1, 3),
            (1, 0): (1, 1), (1, 1): (-1, 0), (1, 2): (1, 3), (1, 3): (-1, 2),
            (2, 0): (1, 2), (2, 1): (-1, 3), (2, 2): (-1, 0), (2, 3): (1, 1),
            (3, 0): (1, 3), (3, 1): (1, 2), (3, 2): (-1, 1), (3, 3): (-1, 0)}
    index = {e: k for k, e in enumerate(elems)}
    table = []
    for sa, xa in elems:
        row = []
        for sb, xb in elems:
            s, x = unit[(xa, xb)]
            row.append(index[(sa * sb * s, x)])
        table.append(row)
    return gp.make_group(table, names, "Q8")


def _dihedral4() -> FiniteGroup:
    z4, z2 = gp.cyclic_group(4), gp.cyclic_group(2)
    inversion = gp.make_action(z2, z4, [[0, 1, 2, 3], [0, 3, 2, 1]])
    d4, _, _ = gp.semidirect_product(z4, z2, inversion)
    labels = [f"r{k}" + ("f" if j else "") for k in range(4) for j in range(2)]
    return FiniteGroup(d4.table, d4.inverse, tuple(labels), "D4")


def _named_product(a: FiniteGroup, b: FiniteGroup) -> FiniteGroup:
    p, _, _ = gp.direct_product(a, b)
    return FiniteGroup(p.table, p.inverse, p.labels, f"{a.name}x{b.name}")


@lru_cache(maxsize=None)
def _catalog() -> tuple[FiniteGroup, ...]:
    z2, z3, z4 = gp.cyclic_group(2), gp.cyclic_group(3), gp.cyclic_group(4)
    s3 = permutation_group(permutations(range(3)), "S3")
    a4 = permutation_group([p for p in permutations(range(4)) if _parity(p) == 0], "A4")
    return (
        gp.trivial_group(),
        z2,
        z3,
        z4,
        _named_product(z2, z2),
        gp.cyclic_group(6),
        gp.cyclic_group(8),
        s3,
        _dihedral4(),
        _quaternions(),
        _named_product(z2, z4),
        a4,
    )


def catalog(max_order: int | None = None) -> list[FiniteGroup]:
    """The fixed list of small groups, optionally restricted by order.

    The same objects are returned on every call.
    """
    return [g for g in _catalog() if max_order is None or g.order <= max_order]


def catalog_group(name: str) -> FiniteGroup:
    for g in _catalog():
        if g.name == name:
            return g
    raise KeyError(name)


# ---------------------------------------------------------------- 2-groups


def discrete_two_group(g: FiniteGroup) -> tgm.StrictTwoGroup:
    """Objects ``g``, only identity arrows."""
    idg = gp.identity_hom(g)
    return tgm.make_two_group(g, g, idg, idg, idg, np.arange(g.order), f"disc({g.name})")


def abelian_failure(g: FiniteGroup):
    hit = gp._first(g.table != g.table.T)
    return None if hit is None else NotAbelian(a=hit[0], b=hit[1])


def delooping_two_group(g: FiniteGroup) -> tgm.StrictTwoGroup:
    """One object, arrows ``g``, composition the group law (``g`` abelian)."""
    err = abelian_failure(g)
    if err is not None:
        raise err
    return _delooping_data(g)


def _delooping_data(g: FiniteGroup) -> tgm.StrictTwoGroup:
    one = gp.trivial_group()
    z = gp.trivial_hom(g, one)
    i = gp.trivial_hom(one, g)
    return tgm.make_two_group(one, g, z, z, i, g.table.ravel(), f"deloop({g.name})")


def unchecked_delooping(g: FiniteGroup) -> tgm.StrictTwoGroup:
    """The delooping data without the abelian precondition, unvalidated.

    For nonabelian ``g`` this fails exactly the interchange law.
    """
    one = gp.trivial_group()
    z = gp.trivial_hom(g, one)
    i = gp.trivial_hom(one, g)
    return tgm.StrictTwoGroup(one, g, z, z, i, gp._frozen(g.table.ravel()), f"deloop({g.name})")


@lru_cache(maxsize=None)
def _automorphisms(g: FiniteGroup):
    aut, taut = gp.automorphism_group(g)
    ad = gp.adjoint_hom(g, taut)
    return aut, taut, ad


def automorphisms(g: FiniteGroup):
    """``(Aut(g), tautological action, Ad: g -> Aut(g))``, cached per group."""
    return _automorphisms(g)


def automorphism_two_group(g: FiniteGroup) -> tgm.StrictTwoGroup:
    """``G0 = Aut(g)``, ``G1 = g ⋊ Aut(g)``, ``s(x, F) = F``,
    ``t(x, F) = Ad_x ∘ F``, ``i(F) = (e, F)``; composition derived."""
    aut, taut, ad = automorphisms(g)
    g1, (_, inj), proj = gp.semidirect_product(g, aut, taut)
    xg, xf = np.divmod(np.arange(g1.order), aut.order)
    t = gp.make_hom(g1, aut, aut.table[ad.images[xg], xf])
    return tgm.derive_composition(aut, g1, proj, t, inj, f"aut2({g.name})")


# ---------------------------------------------------------------- crossed modules


def trivial_xmod(g: FiniteGroup) -> xmm.CrossedModule:
    """``(g, {e}, inclusion, trivial)``."""
    one = gp.trivial_group()
    return xmm.make_crossed_module(g, one, gp.trivial_hom(one, g), gp.trivial_action(g, one), f"triv({g.name})")


def delooping_xmod(g: FiniteGroup) -> xmm.CrossedModule:
    """``({e}, g, e, trivial)`` for abelian ``g``."""
    err = abelian_failure(g)
    if err is not None:
        raise err
    one = gp.trivial_group()
    return xmm.make_crossed_module(one, g, gp.trivial_hom(g, one), gp.trivial_action(one, g), f"deloop({g.name})")


def automorphism_xmod(g: FiniteGroup) -> xmm.CrossedModule:
    """``(Aut g, g, Ad, application)``."""
    aut, taut, ad = automorphisms(g)
    return xmm.make_crossed_module(aut, g, ad, taut, f"aut({g.name})")


def conjugation_xmod(g: FiniteGroup) -> xmm.CrossedModule:
    """``(g, g, id, Ad)``."""
    return xmm.make_crossed_module(g, g, gp.identity_hom(g), gp.conjugation_action(g), f"conj({g.name})")


def central_extension_failure(tau: GroupHom):
    """First reason ``tau`` is not a central extension, or None."""
    if not tau.is_surjective:
        missing = np.setdiff1d(np.arange(tau.dst.order), tau.images)
        return NotSurjective(g=int(missing[0]))
    h = tau.src
    ker = np.flatnonzero(tau.images == 0)
    bad = h.table[ker] != h.table[:, ker].T
    hit = gp._first(bad)
    if hit is not None:
        return KernelNotCentral(k=int(ker[hit[0]]), h=hit[1])
    return None


def is_central_extension(tau: GroupHom) -> tuple[bool, object]:
    """``(True, None)`` or ``(False, violation)`` with its witness."""
    err = central_extension_failure(tau)
    return err is None, err


def default_section(tau: GroupHom) -> np.ndarray:
    """Smallest preimage index in each fiber."""
    section = np.full(tau.dst.order, -1, dtype=np.int64)
    for h in range(tau.src.order - 1, -1, -1):
        section[tau.images[h]] = h
    return section


def xmod_from_central_extension(tau: GroupHom, section=None, name: str | None = None) -> xmm.CrossedModule:
    """``(G, H, tau, (g, h) -> s(g) h s(g)^-1)`` for a section ``s`` of ``tau``.

    The action does not depend on the section chosen.
    """
    err = central_extension_failure(tau)
    if err is not None:
        raise err
    section = default_section(tau) if section is None else np.asarray(section)
    if section.shape != (tau.dst.order,) or ((section < 0) | (section >= tau.src.order)).any():
        raise ValueError("section must map every element of G into H")
    bad = tau.images[section] != np.arange(tau.dst.order)
    if bad.any():
        raise NotASection(g=int(np.argmax(bad)))
    alpha = gp.make_action(tau.dst, tau.src, gp.conjugation_table(tau.src)[section])
    return xmm.make_crossed_module(tau.dst, tau.src, tau, alpha, name)


def xmod_from_normal_subgroup(g: FiniteGroup, inclusion: GroupHom, name: str | None = None) -> xmm.CrossedModule:
    """``(g, N, inclusion, conjugation)`` for a normal subgroup ``N``."""
    if inclusion.dst != g:
        raise ValueError("inclusion must land in g")
    imgs = inclusion.images
    for a in range(len(imgs)):
        dup = np.flatnonzero(imgs[a + 1:] == imgs[a])
        if len(dup):
            raise NotInjective(a=a, b=a + 1 + int(dup[0]))
    lookup = np.full(g.order, -1, dtype=np.int64)
    lookup[imgs] = np.arange(len(imgs))
    conj = lookup[gp.conjugation_table(g)[:, imgs]]
    hit = gp._first(conj < 0)
    if hit is not None:
        raise NotNormal(g=hit[0], n=hit[1])
    return xmm.make_crossed_module(g, inclusion.src, inclusion, conj, name)


def normal_subgroup_xmod(g: FiniteGroup, elements, name: str | None = None) -> xmm.CrossedModule:
    n, incl = gp.subgroup(g, elements)
    return xmod_from_normal_subgroup(g, incl, name)
