"""Finite groups as multiplication tables.

Elements are the indices ``0..n-1`` and the identity is pinned at index 0.
Every structure map (homomorphism, action) is an index array, so all the
axiom checks downstream are exhaustive table scans.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    NoIdentity,
    NoInverse,
    NotAssociative,
    NotAutomorphism,
    NotClosed,
    NotMultiplicative,
    NotMultiplicativeInActor,
    NotUnital,
    OrderBoundExceeded,
    TypingError,
)

DEFAULT_MAX_ORDER = 512
INDEX = np.int32


def max_order() -> int:
    """Carrier bound; ``TG_MAX_ORDER`` overrides the default of 512."""
    return int(os.environ.get("TG_MAX_ORDER", DEFAULT_MAX_ORDER))


def check_order(n: int, bound: int | None = None) -> None:
    bound = max_order() if bound is None else bound
    if n > bound:
        raise OrderBoundExceeded(n, bound)


def _frozen(a) -> np.ndarray:
    arr = np.array(a, dtype=INDEX)
    arr.setflags(write=False)
    return arr


def _first(mask: np.ndarray) -> tuple[int, ...] | None:
    """Lexicographically first index where ``mask`` holds, or None."""
    hits = np.argwhere(mask)
    if len(hits) == 0:
        return None
    return tuple(int(v) for v in hits[0])


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    table: np.ndarray
    inverse: np.ndarray
    labels: tuple[str, ...] | None = None
    name: str | None = field(default=None, compare=False)

    identity = 0

    @property
    def order(self) -> int:
        return len(self.table)

    def __len__(self) -> int:
        return self.order

    def __eq__(self, other) -> bool:
        if self is other:
            return True
        if not isinstance(other, FiniteGroup):
            return NotImplemented
        return self.order == other.order and bool(np.array_equal(self.table, other.table))

    def __hash__(self) -> int:
        return hash((self.order, self.table.tobytes()))

    def __repr__(self) -> str:
        tag = f" {self.name}" if self.name else ""
        return f"<FiniteGroup{tag} order={self.order}>"

    def mul(self, a, b):
        return self.table[a, b]

    def inv(self, a):
        return self.inverse[a]

    def label(self, a: int) -> str:
        return self.labels[a] if self.labels else str(a)

    def elements(self) -> range:
        return range(self.order)

    @cached_property
    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.table, self.table.T))

    @cached_property
    def element_orders(self) -> np.ndarray:
        orders = np.ones(self.order, dtype=np.int64)
        power = np.arange(self.order)
        live = power != 0
        k = 1
        while live.any():
            power = np.where(live, self.table[power, np.arange(self.order)], power)
            k += 1
            done = live & (power == 0)
            orders[done] = k
            live &= ~done
        orders[0] = 1
        return orders

    def commutes(self, a: int, b: int) -> bool:
        return self.table[a, b] == self.table[b, a]


def _relabel_identity(table: np.ndarray, e: int, labels):
    perm = np.arange(len(table))
    perm[[0, e]] = perm[[e, 0]]
    new = np.empty_like(table)
    new[np.ix_(perm, perm)] = perm[table]
    if labels is not None:
        labels = list(labels)
        labels[0], labels[e] = labels[e], labels[0]
    return new, labels


def generated_mask(table: np.ndarray, gens: Iterable[int]) -> np.ndarray:
    """Elements reachable from 0 by right multiplication with ``gens``."""
    gens = list(gens)
    seen = np.zeros(len(table), dtype=bool)
    seen[0] = True
    frontier = np.array([0])
    while len(frontier) and gens:
        nxt = np.unique(table[np.ix_(frontier, gens)])
        nxt = nxt[~seen[nxt]]
        seen[nxt] = True
        frontier = nxt
    return seen


def greedy_generators(table: np.ndarray) -> list[int]:
    """Repeatedly add the smallest element not yet generated."""
    gens: list[int] = []
    seen = generated_mask(table, gens)
    while not seen.all():
        gens.append(int(np.argmin(seen)))
        seen = generated_mask(table, gens)
    return gens


def _first_associativity_failure(table: np.ndarray) -> tuple[int, int, int] | None:
    n = len(table)
    for a in range(n):
        lhs = table[table[a]]            # (a b) c, indexed [b, c]
        rhs = table[a][table]            # a (b c)
        hit = _first(lhs != rhs)
        if hit is not None:
            return a, hit[0], hit[1]
    return None


def _associative(table: np.ndarray) -> bool:
    # Light's test: the elements y with (x y) z = x (y z) for all x, z form a
    # submagma, so checking a generating set suffices.
    for y in greedy_generators(table):
        lhs = table[table[:, y]]         # (x y) z, indexed [x, z]
        rhs = table[:, table[y]]         # x (y z)
        if not np.array_equal(lhs, rhs):
            return False
    return True


def validate_table(table, labels=None) -> tuple[np.ndarray, np.ndarray, list | None]:
    table = np.asarray(table)
    if table.ndim != 2 or table.shape[0] != table.shape[1] or table.shape[0] < 1:
        raise ValueError("multiplication table must be square with side >= 1")
    n = len(table)
    hit = _first((table < 0) | (table >= n))
    if hit is not None:
        raise NotClosed(a=hit[0], b=hit[1])
    table = table.astype(INDEX)
    ar = np.arange(n)
    is_id = (table == ar[None, :]).all(axis=1) & (table == ar[:, None]).all(axis=0)
    if not is_id.any():
        raise NoIdentity()
    e = int(np.argmax(is_id))
    if e != 0:
        table, labels = _relabel_identity(table, e, labels)
    two_sided = (table == 0) & (table.T == 0)
    has_inv = two_sided.any(axis=1)
    if not has_inv.all():
        raise NoInverse(x=int(np.argmin(has_inv)))
    inverse = np.argmax(two_sided, axis=1)
    if not _associative(table):
        a, b, c = _first_associativity_failure(table)
        raise NotAssociative(a=a, b=b, c=c)
    return table, inverse, labels


def make_group(table, labels: Sequence[str] | None = None, name: str | None = None,
               *, bound: int | None = None) -> FiniteGroup:
    """Validate a multiplication table and wrap it as a group.

    Raises the first violated axiom in the order closure, identity, inverse,
    associativity, each with its lexicographically first witness. If the
    identity sits at some index ``e != 0`` it is swapped with 0.
    """
    table = np.asarray(table)
    if table.ndim == 2:
        check_order(len(table), bound)
    table, inverse, labels = validate_table(table, labels)
    if labels is not None:
        labels = tuple(str(x) for x in labels)
        if len(labels) != len(table):
            raise ValueError("labels must have one entry per element")
    return FiniteGroup(_frozen(table), _frozen(inverse), labels, name)


def _derived_group(table, labels=None, name=None) -> FiniteGroup:
    # Tables derived from already-verified groups (subgroups, products) still
    # go through the full scan; only the order bound is skipped.
    table, inverse, labels = validate_table(table, labels)
    return FiniteGroup(_frozen(table), _frozen(inverse),
                       tuple(labels) if labels is not None else None, name)


def trivial_group() -> FiniteGroup:
    return make_group([[0]], ["e"], "1")


def cyclic_group(n: int) -> FiniteGroup:
    ar = np.arange(n)
    return make_group((ar[:, None] + ar[None, :]) % n, [str(k) for k in ar], f"Z{n}")


# ---------------------------------------------------------------- homs


@dataclass(frozen=True, eq=False)
class GroupHom:
    src: FiniteGroup
    dst: FiniteGroup
    images: np.ndarray

    def __call__(self, x):
        return self.images[x]

    def __eq__(self, other) -> bool:
        if not isinstance(other, GroupHom):
            return NotImplemented
        return (self.src == other.src and self.dst == other.dst
                and bool(np.array_equal(self.images, other.images)))

    __hash__ = object.__hash__

    def __repr__(self) -> str:
        return f"<GroupHom {self.src.order}->{self.dst.order} {self.images.tolist()}>"

    @cached_property
    def is_injective(self) -> bool:
        return len(np.unique(self.images)) == self.src.order

    @cached_property
    def is_surjective(self) -> bool:
        return len(np.unique(self.images)) == self.dst.order


def hom_failure(src: FiniteGroup, dst: FiniteGroup, images: np.ndarray) -> tuple[int, int] | None:
    if images[0] != 0:
        return 0, 0
    lhs = images[src.table]
    rhs = dst.table[images[:, None], images[None, :]]
    return _first(lhs != rhs)


def make_hom(src: FiniteGroup, dst: FiniteGroup, images) -> GroupHom:
    images = np.asarray(images)
    if images.shape != (src.order,):
        raise ValueError(f"expected {src.order} images, got shape {images.shape}")
    if ((images < 0) | (images >= dst.order)).any():
        raise ValueError("image index out of range")
    images = _frozen(images)
    hit = hom_failure(src, dst, images)
    if hit is not None:
        raise NotMultiplicative(a=hit[0], b=hit[1])
    return GroupHom(src, dst, images)


def identity_hom(g: FiniteGroup) -> GroupHom:
    return GroupHom(g, g, _frozen(np.arange(g.order)))


def trivial_hom(src: FiniteGroup, dst: FiniteGroup) -> GroupHom:
    return GroupHom(src, dst, _frozen(np.zeros(src.order)))


def compose_homs(after: GroupHom, before: GroupHom) -> GroupHom:
    """``after ∘ before``."""
    if before.dst != after.src:
        raise TypingError("homomorphisms are not composable")
    return GroupHom(before.src, after.dst, _frozen(after.images[before.images]))


def subgroup(g: FiniteGroup, elements, name: str | None = None) -> tuple[FiniteGroup, GroupHom]:
    """The subgroup on ``elements`` (sorted by index) and its inclusion."""
    els = np.unique(np.asarray(elements, dtype=np.int64))
    if len(els) == 0 or els[0] != 0:
        raise ValueError("a subgroup must contain the identity")
    lookup = np.full(g.order, -1, dtype=np.int64)
    lookup[els] = np.arange(len(els))
    table = lookup[g.table[np.ix_(els, els)]]
    if (table < 0).any():
        raise ValueError("elements are not closed under multiplication")
    labels = [g.labels[x] for x in els] if g.labels else None
    h = _derived_group(table, labels, name)
    return h, GroupHom(h, g, _frozen(els))


def kernel(f: GroupHom) -> tuple[FiniteGroup, GroupHom]:
    return subgroup(f.src, np.flatnonzero(f.images == 0))


def image(f: GroupHom) -> tuple[FiniteGroup, GroupHom]:
    return subgroup(f.dst, np.unique(f.images))


def restrict(f: GroupHom, incl: GroupHom, into: GroupHom | None = None) -> GroupHom:
    """``f`` restricted along the inclusion ``incl`` and, optionally,
    corestricted to the subgroup included by ``into``."""
    images = f.images[incl.images]
    if into is None:
        return GroupHom(incl.src, f.dst, _frozen(images))
    lookup = np.full(into.dst.order, -1, dtype=np.int64)
    lookup[into.images] = np.arange(into.src.order)
    out = lookup[images]
    if (out < 0).any():
        x = int(np.argmax(out < 0))
        raise ValueError(f"image of element {x} leaves the target subgroup")
    return GroupHom(incl.src, into.src, _frozen(out))


@dataclass(frozen=True, eq=False)
class GroupIso:
    forward: GroupHom
    backward: GroupHom

    def __post_init__(self):
        f, b = self.forward, self.backward
        if f.src != b.dst or f.dst != b.src:
            raise TypingError("isomorphism components are not opposite")
        fb = f.images[b.images]
        bf = b.images[f.images]
        if not np.array_equal(bf, np.arange(f.src.order)):
            raise ValueError("backward ∘ forward is not the identity")
        if not np.array_equal(fb, np.arange(f.dst.order)):
            raise ValueError("forward ∘ backward is not the identity")


# ---------------------------------------------------------------- products


def direct_product(a: FiniteGroup, b: FiniteGroup, *, bound: int | None = None):
    """``a × b`` with the pair ``(x, y)`` at index ``x * |b| + y``.

    Returns ``(product, (proj_a, proj_b), (inj_a, inj_b))``.
    """
    check_order(a.order * b.order, bound)
    m = b.order
    xa, xb = np.divmod(np.arange(a.order * m), m)
    table = a.table[np.ix_(xa, xa)] * m + b.table[np.ix_(xb, xb)]
    labels = None
    if a.labels or b.labels:
        labels = [f"({a.label(x)},{b.label(y)})" for x, y in zip(xa, xb)]
    p = _derived_group(table, labels)
    projs = (GroupHom(p, a, _frozen(xa)), GroupHom(p, b, _frozen(xb)))
    injs = (GroupHom(a, p, _frozen(np.arange(a.order) * m)), GroupHom(b, p, _frozen(np.arange(m))))
    return p, projs, injs


def semidirect_product(n: FiniteGroup, q: FiniteGroup, act: "GroupAction", *, bound: int | None = None):
    """``n ⋊ q`` with ``(x, g)(x', g') = (x·act(g, x'), g g')``.

    The pair ``(x, g)`` sits at index ``x * |q| + g``. Returns
    ``(product, (inj_n, inj_q), proj_q)``.
    """
    if act.actor != q or act.space != n:
        raise TypingError("action does not match the factors")
    check_order(n.order * q.order, bound)
    m = q.order
    xn, xq = np.divmod(np.arange(n.order * m), m)
    twisted = act.map[xq[:, None], xn[None, :]]          # act(g, x')
    first = n.table[xn[:, None], twisted]
    table = first * m + q.table[np.ix_(xq, xq)]
    labels = None
    if n.labels or q.labels:
        labels = [f"({n.label(x)},{q.label(g)})" for x, g in zip(xn, xq)]
    p = _derived_group(table, labels)
    injs = (GroupHom(n, p, _frozen(np.arange(n.order) * m)), GroupHom(q, p, _frozen(np.arange(m))))
    return p, injs, GroupHom(p, q, _frozen(xq))


def pullback(sa: GroupHom, tb: GroupHom):
    """Pairs ``(x, y)`` with ``sa(x) == tb(y)`` in lexicographic order.

    Returns ``(group, proj_a, proj_b)``. Not subject to the carrier bound:
    the composable-pairs group of a 2-group is quadratic in its size.
    """
    if sa.dst != tb.dst:
        raise TypingError("pullback legs need a common codomain")
    xa, xb = pullback_pairs(sa, tb)
    a, b = sa.src, tb.src
    index = np.full((a.order, b.order), -1, dtype=np.int64)
    index[xa, xb] = np.arange(len(xa))
    table = index[a.table[np.ix_(xa, xa)], b.table[np.ix_(xb, xb)]]
    p = _derived_group(table)
    return p, GroupHom(p, a, _frozen(xa)), GroupHom(p, b, _frozen(xb))


def pullback_pairs(sa: GroupHom, tb: GroupHom) -> tuple[np.ndarray, np.ndarray]:
    match = sa.images[:, None] == tb.images[None, :]
    xa, xb = np.nonzero(match)
    return xa, xb


# ---------------------------------------------------------------- actions


@dataclass(frozen=True, eq=False)
class GroupAction:
    actor: FiniteGroup
    space: FiniteGroup
    map: np.ndarray

    def __call__(self, g, h):
        return self.map[g, h]

    def __eq__(self, other) -> bool:
        if not isinstance(other, GroupAction):
            return NotImplemented
        return (self.actor == other.actor and self.space == other.space
                and bool(np.array_equal(self.map, other.map)))

    __hash__ = object.__hash__

    @cached_property
    def row_index(self) -> dict[bytes, int]:
        return {row.tobytes(): g for g, row in enumerate(self.map)}

    def index_of(self, images) -> int:
        """Actor element acting as the given permutation (faithful actions)."""
        return self.row_index[np.asarray(images, dtype=INDEX).tobytes()]

    @cached_property
    def is_trivial(self) -> bool:
        return bool((self.map == np.arange(self.space.order)[None, :]).all())


def action_failure(actor: FiniteGroup, space: FiniteGroup, table: np.ndarray):
    for g in range(actor.order):
        row = table[g]
        if len(np.unique(row)) != space.order or hom_failure(space, space, row) is not None:
            return NotAutomorphism(g=g)
    hit = _first(table[0] != np.arange(space.order))
    if hit is not None:
        return NotUnital(h=hit[0])
    # map[g g'][h] == map[g][map[g'][h]]
    lhs = table[actor.table]                                     # [g, g', h]
    rhs = table[np.arange(actor.order)[:, None, None], table[None, :, :]]
    hit = _first((lhs != rhs).any(axis=2))
    if hit is not None:
        return NotMultiplicativeInActor(g=hit[0], gp=hit[1])
    return None


def make_action(actor: FiniteGroup, space: FiniteGroup, table) -> GroupAction:
    table = np.asarray(table)
    if table.shape != (actor.order, space.order):
        raise ValueError(f"action table must be {actor.order}x{space.order}")
    if ((table < 0) | (table >= space.order)).any():
        raise ValueError("action entry out of range")
    table = _frozen(table)
    err = action_failure(actor, space, table)
    if err is not None:
        raise err
    return GroupAction(actor, space, table)


def trivial_action(actor: FiniteGroup, space: FiniteGroup) -> GroupAction:
    return GroupAction(actor, space, _frozen(np.broadcast_to(np.arange(space.order), (actor.order, space.order))))


def conjugation_table(g: FiniteGroup) -> np.ndarray:
    """``[x, h] -> x h x^-1``."""
    ar = np.arange(g.order)
    return g.table[g.table[ar[:, None], ar[None, :]], g.inverse[ar][:, None]]


def conjugation_action(g: FiniteGroup) -> GroupAction:
    return GroupAction(g, g, _frozen(conjugation_table(g)))


def inner_automorphism(g: FiniteGroup, x: int) -> GroupHom:
    return GroupHom(g, g, _frozen(conjugation_table(g)[x]))


def action_from_hom(f: GroupHom, tautological: GroupAction) -> GroupAction:
    """Pull the tautological action of an automorphism group back along ``f``."""
    if f.dst != tautological.actor:
        raise TypingError("hom must land in the acting automorphism group")
    return make_action(f.src, tautological.space, tautological.map[f.images])


def pulled_back_action(act: GroupAction, along: GroupHom) -> GroupAction:
    """``(g, h) -> act(along(g), h)``."""
    return GroupAction(along.src, act.space, _frozen(act.map[along.images]))


def restricted_action(act: GroupAction, incl: GroupHom) -> GroupAction:
    """Restrict the acted-on group to an invariant subgroup."""
    sub = incl.images
    lookup = np.full(act.space.order, -1, dtype=np.int64)
    lookup[sub] = np.arange(len(sub))
    table = lookup[act.map[:, sub]]
    if (table < 0).any():
        raise ValueError("subgroup is not invariant under the action")
    return GroupAction(act.actor, incl.src, _frozen(table))


# ---------------------------------------------------------------- automorphisms


def _extend(g: FiniteGroup, gens: list[int], imgs: list[int]) -> np.ndarray | None:
    """Extend a generator assignment over the subgroup it generates.

    Returns the partial image array (-1 outside that subgroup) or None if the
    assignment is inconsistent with the multiplication table.
    """
    images = np.full(g.order, -1, dtype=np.int64)
    images[0] = 0
    queue = [0]
    for x in queue:
        fx = images[x]
        for s, fs in zip(gens, imgs):
            y = g.table[x, s]
            fy = g.table[fx, fs]
            if images[y] < 0:
                images[y] = fy
                queue.append(y)
            elif images[y] != fy:
                return None
    return images


def enumerate_automorphisms(g: FiniteGroup) -> list[np.ndarray]:
    """All automorphisms as image arrays, sorted lexicographically."""
    gens = greedy_generators(g.table)
    orders = g.element_orders
    found: list[np.ndarray] = []

    def search(imgs: list[int]) -> None:
        k = len(imgs)
        partial = _extend(g, gens[:k], imgs)
        if partial is None:
            return
        used = partial[partial >= 0]
        if len(np.unique(used)) != len(used):
            return
        if k == len(gens):
            if hom_failure(g, g, partial) is None:
                found.append(partial)
            return
        covered = np.zeros(g.order, dtype=bool)
        covered[used] = True
        for c in np.flatnonzero((orders == orders[gens[k]]) & ~covered):
            search(imgs + [int(c)])

    search([])
    found.sort(key=lambda a: a.tolist())
    return found


def automorphism_group(g: FiniteGroup, *, bound: int | None = None):
    """``Aut(g)`` under composition, with its tautological action on ``g``.

    Automorphism ``k`` of the result is the ``k``-th image array in
    lexicographic order, so the identity automorphism is element 0. The
    product ``F·F'`` is ``F ∘ F'``.
    """
    check_order(g.order, bound)
    autos = enumerate_automorphisms(g)
    rows = np.array(autos, dtype=np.int64).reshape(len(autos), g.order)
    index = {row.tobytes(): k for k, row in enumerate(rows.astype(INDEX))}
    m = len(rows)
    table = np.empty((m, m), dtype=np.int64)
    for a in range(m):
        composed = rows[a][rows]                      # F_a ∘ F_b for every b
        table[a] = [index[r.tobytes()] for r in composed.astype(INDEX)]
    name = f"Aut({g.name})" if g.name else None
    aut = _derived_group(table, None, name)
    return aut, GroupAction(aut, g, _frozen(rows))


def adjoint_hom(g: FiniteGroup, taut: GroupAction) -> GroupHom:
    """``x -> Ad_x`` into the automorphism group acting via ``taut``."""
    conj = conjugation_table(g)
    return make_hom(g, taut.actor, [taut.index_of(row) for row in conj])
