"""Exhaustive search for crossed-module data failing only equivariance.

Enumerates homomorphisms ``G -> Aut(H)`` and ``H -> G`` for a few small
pairs and prints the first quadruple whose only violated family is
equivariance (Peiffer holds). The result seeds the shipped mutant.
"""

from __future__ import annotations

import itertools

from twogroups import constructions as cons
from twogroups import groups as gp
from twogroups import xmod as xmm
from twogroups.errors import AxiomViolation

PAIRS = [("Z2", "Z2"), ("Z2", "Z2xZ2"), ("Z2xZ2", "Z2xZ2"), ("Z3", "Z2xZ2"), ("Z2", "Z4")]


def homs(src, dst):
    for images in itertools.product(range(dst.order), repeat=src.order):
        try:
            yield gp.make_hom(src, dst, images)
        except AxiomViolation:
            continue


def main() -> None:
    for gname, hname in PAIRS:
        g, h = cons.catalog_group(gname), cons.catalog_group(hname)
        aut, taut = gp.automorphism_group(h)
        for act in homs(g, aut):
            alpha = gp.GroupAction(g, h, gp._frozen(taut.map[act.images]))
            for tau in homs(h, g):
                errs = xmm.xmod_violations(xmm.CrossedModule(g, h, tau, alpha))
                if [e.check for e in errs] == ["equivariance"]:
                    print(f"G={gname} H={hname} action={act.images.tolist()} tau={tau.images.tolist()}: {errs[0]}")
                    return
    print("none found")


if __name__ == "__main__":
    main()
