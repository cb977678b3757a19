"""Generic 2-category bookkeeping shared by 2-Grp and X-Mod.

Both sides expose the same operations (identities, composition, units,
vertical and horizontal composition); :class:`Ops` bundles them so the law
checker and the round-trip verifier are written once.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Any, Callable

import numpy as np

from . import twogroup as tg
from . import xmod as xm
from .errors import TwoGroupError


@dataclass
class Check:
    id: str
    ok: bool
    witness: str = ""

    def line(self) -> str:
        if self.ok:
            return f"PASS {self.id}"
        return f"FAIL {self.id} {self.witness}".rstrip()


@dataclass
class Report:
    checks: list[Check] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.ok]

    def lines(self) -> list[str]:
        return [c.line() for c in self.checks]

    def text(self) -> str:
        return "".join(line + "\n" for line in self.lines())

    def add(self, check_id: str, fn: Callable[[], Any]) -> Check:
        """Run ``fn``; truthy passes, falsy or a raised package error fails."""
        try:
            result = fn()
        except TwoGroupError as err:
            c = Check(check_id, False, str(err).removeprefix("FAIL "))
        else:
            if isinstance(result, str):
                c = Check(check_id, False, result)
            else:
                c = Check(check_id, bool(result))
        self.checks.append(c)
        return c


@dataclass(frozen=True)
class Ops:
    identity: Callable
    compose: Callable
    unit: Callable
    vcompose: Callable
    hcompose: Callable
    hcompose_alt: Callable
    values: Callable


TWOGROUP_OPS = Ops(
    identity=tg.identity_morphism,
    compose=tg.compose_morphisms,
    unit=tg.identity_two_morphism,
    vcompose=tg.vcompose_2morphisms,
    hcompose=tg.hcompose_2morphisms,
    hcompose_alt=tg.hcompose_alternative,
    values=lambda th: th.theta.images,
)

XMOD_OPS = Ops(
    identity=xm.identity_xmod_morphism,
    compose=xm.compose_xmod_morphisms,
    unit=xm.unit_2morphism,
    vcompose=xm.vcompose_xmod_2morphisms,
    hcompose=xm.hcompose_xmod_2morphisms,
    hcompose_alt=xm.hcompose_xmod_alternative,
    values=lambda e: e.eta,
)


def label(x, k: int, prefix: str) -> str:
    return x.name if getattr(x, "name", None) else f"{prefix}{k}"


def vertical_pairs(two_morphisms):
    """``(upper, lower)`` with ``lower`` ending where ``upper`` starts."""
    return [(u, l) for u in two_morphisms for l in two_morphisms if l.dst_mor == u.src_mor]


def horizontal_pairs(two_morphisms):
    """``(outer, inner)`` with ``inner`` landing where ``outer`` starts."""
    return [(o, i) for o in two_morphisms for i in two_morphisms if i.dst is o.src]


def check_laws(ops: Ops, morphisms, two_morphisms) -> Report:
    """Exhaustively check the 2-category laws on every composable
    configuration drawn from the given morphisms and 2-morphisms."""
    rep = Report()
    ms = list(morphisms)
    es = list(two_morphisms)
    mname = {id(m): label(m, k, "m") for k, m in enumerate(ms)}
    ename = {id(e): label(e, k, "e") for k, e in enumerate(es)}

    def names(*xs):
        return ",".join(ename.get(id(x), mname.get(id(x), "?")) for x in xs)

    for f in ms:
        rep.add(f"morphism-unit[{names(f)}]",
                lambda f=f: ops.compose(ops.identity(f.dst), f) == f and ops.compose(f, ops.identity(f.src)) == f)
    for h, g, f in product(ms, repeat=3):
        if f.dst is g.src and g.dst is h.src:
            rep.add(f"morphism-assoc[{names(h, g, f)}]",
                    lambda h=h, g=g, f=f: ops.compose(ops.compose(h, g), f) == ops.compose(h, ops.compose(g, f)))

    for e in es:
        rep.add(f"vertical-unit[{names(e)}]",
                lambda e=e: ops.vcompose(ops.unit(e.dst_mor), e) == e and ops.vcompose(e, ops.unit(e.src_mor)) == e)
        rep.add(f"horizontal-unit[{names(e)}]",
                lambda e=e: (ops.hcompose(ops.unit(ops.identity(e.dst)), e) == e
                             and ops.hcompose(e, ops.unit(ops.identity(e.src))) == e))
    vp = vertical_pairs(es)
    for (c, b), (b2, a) in product(vp, repeat=2):
        if b2 is b:
            rep.add(f"vertical-assoc[{names(c, b, a)}]",
                    lambda a=a, b=b, c=c: ops.vcompose(ops.vcompose(c, b), a) == ops.vcompose(c, ops.vcompose(b, a)))
    hp = horizontal_pairs(es)
    for o, i in hp:
        rep.add(f"horizontal-formulas[{names(o, i)}]",
                lambda o=o, i=i: np.array_equal(ops.values(ops.hcompose(o, i)), ops.hcompose_alt(o, i)))
    for (c, b), (b2, a) in product(hp, repeat=2):
        if b2 is b:
            rep.add(f"horizontal-assoc[{names(c, b, a)}]",
                    lambda a=a, b=b, c=c: ops.hcompose(ops.hcompose(c, b), a) == ops.hcompose(c, ops.hcompose(b, a)))
    # (ū' • u') ∘ (ū • u) == (ū' ∘ ū) • (u' ∘ u)
    for (ub, u), (ubp, up) in product(vp, repeat=2):
        if u.dst is up.src:
            rep.add(f"interchange[{names(ubp, up, ub, u)}]",
                    lambda u=u, ub=ub, up=up, ubp=ubp: (
                        ops.hcompose(ops.vcompose(ubp, up), ops.vcompose(ub, u))
                        == ops.vcompose(ops.hcompose(ubp, ub), ops.hcompose(up, u))))
    return rep
