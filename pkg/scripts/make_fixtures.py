"""Regenerate the shipped fixture files and golden CLI reports.

    python scripts/make_fixtures.py [--out fixtures]

Valid fixtures are produced by the library constructors. Mutated fixtures
are hand-built data that fail exactly one axiom family each; the script
asserts that before writing them.
"""

from __future__ import annotations

import argparse
from pathlib import Path

import numpy as np
from click.testing import CliRunner

from twogroups import cli
from twogroups import constructions as cons
from twogroups import fixtures as fx
from twogroups import formats as fm
from twogroups import groups as gp
from twogroups import twogroup as tgm
from twogroups import xmod as xmm
from twogroups.formats import Section

# (name, file kind for `check`, expected failing family)
MUTATIONS = (
    ("peiffer", "xmod", "peiffer"),
    ("equivariance", "xmod", "equivariance"),
    ("interchange", "2grp", "interchange"),
    ("unit-law", "2grp", "unit-law"),
    ("naturality", "2morphism", "naturality"),
    ("crossed-law", "2morphism", "crossed-law"),
    ("chain-homotopy-1", "2morphism", "chain-homotopy-1"),
    ("chain-homotopy-2", "2morphism", "chain-homotopy-2"),
)

# golden CLI invocations, relative to the fixture root
GOLDEN = {
    "roundtrip-catalog-8.txt": ["roundtrip", "--catalog", "--max-order", "8"],
    "roundtrip-q8-ext.txt": ["roundtrip", "xmod/q8-ext.txt"],
    "roundtrip-aut2-s3.txt": ["roundtrip", "2grp/aut2-s3.txt"],
    "roundtrip-inner-2morphism.txt": ["roundtrip", "morphisms/inner-conj-aut-s3.txt"],
    "check-aut2-s3.txt": ["check", "2grp", "2grp/aut2-s3.txt"],
    "ext-q8-a.txt": ["from-central-extension", "homs/q8-z2xz2.txt", "--section", "sections/q8-a.txt"],
    "ext-q8-b.txt": ["from-central-extension", "homs/q8-z2xz2.txt", "--section", "sections/q8-b.txt"],
    "ext-s3.txt": ["from-central-extension", "homs/s3-z2.txt"],
    **{f"check-mutation-{n}.txt": ["check", k, f"mutations/{n}.txt"] for n, k, _ in MUTATIONS},
}


def _mutations() -> dict[str, object]:
    s3, z2, z3 = (cons.catalog_group(n) for n in ("S3", "Z2", "Z3"))
    v4 = cons.catalog_group("Z2xZ2")
    one = gp.trivial_group()
    out = {}
    # trivial G acting trivially on nonabelian H
    out["peiffer"] = xmm.CrossedModule(one, s3, gp.trivial_hom(s3, one), gp.trivial_action(one, s3), "peiffer-mutant")
    # found by exhaustive search over small (G, H, tau, alpha)
    _, taut = gp.automorphism_group(v4)
    alpha = gp.GroupAction(v4, v4, gp._frozen(taut.map[[0, 0, 1, 1]]))
    out["equivariance"] = xmm.CrossedModule(v4, v4, gp.make_hom(v4, v4, [0, 1, 0, 1]), alpha, "equivariance-mutant")
    out["interchange"] = cons.unchecked_delooping(s3)
    # comp(a, b) = a: right unit holds, left unit fails
    d = cons.delooping_two_group(z2)
    out["unit-law"] = tgm.StrictTwoGroup(d.g0, d.g1, d.s, d.t, d.i, gp._frozen(d.pairs[0]), "unit-law-mutant")
    # theta = e between (triv, id) and (triv, 0) on deloop(Z2): boundaries fine
    f = tgm.make_morphism(d, d, gp.identity_hom(d.g0), gp.identity_hom(z2), "id")
    e = tgm.make_morphism(d, d, gp.identity_hom(d.g0), gp.trivial_hom(z2, z2), "zero")
    out["naturality"] = tgm.TwoGroupTwoMorphism(f, e, gp.trivial_hom(d.g0, z2), "naturality-mutant")
    # eta: Z2 -> Z3, 1 -> 1 is not a crossed homomorphism; chain homotopies hold
    src, dst = cons.trivial_xmod(z2), cons.delooping_xmod(z3)
    m = xmm.make_xmod_morphism(src, dst, gp.trivial_hom(z2, one), gp.trivial_hom(one, z3))
    out["crossed-law"] = xmm.XMod2Morphism(m, m, gp._frozen([0, 1]), "crossed-law-mutant")
    # eta = id: Z2 -> Z2 is crossed but tau' eta != Gamma gamma^-1
    src, dst = cons.trivial_xmod(z2), cons.conjugation_xmod(z2)
    m = xmm.make_xmod_morphism(src, dst, gp.identity_hom(z2), gp.trivial_hom(one, z2))
    out["chain-homotopy-1"] = xmm.XMod2Morphism(m, m, gp._frozen([0, 1]), "chain-homotopy-1-mutant")
    # delta = id, Delta = 0 on deloop(Z2); eta(tau h) = e != Delta h delta h^-1
    dz = cons.delooping_xmod(z2)
    lo = xmm.make_xmod_morphism(dz, dz, gp.identity_hom(dz.g), gp.identity_hom(z2))
    hi = xmm.make_xmod_morphism(dz, dz, gp.identity_hom(dz.g), gp.trivial_hom(z2, z2))
    out["chain-homotopy-2"] = xmm.XMod2Morphism(lo, hi, gp._frozen([0]), "chain-homotopy-2-mutant")
    return out


def _check_mutation(obj, family: str) -> None:
    rep, _ = cli.axiom_report(obj)
    fails = [c.id for c in rep.failures()]
    assert fails == [family], (family, rep.lines())


def build(root: Path) -> None:
    for sub in ("groups", "homs", "sections", "xmod", "2grp", "morphisms", "mutations", "golden"):
        (root / sub).mkdir(parents=True, exist_ok=True)

    for g in cons.catalog():
        fm.write(g, root / "groups" / f"{g.name}.txt")
    homs = {"z4-z2": "Z4->Z2", "q8-z2xz2": "Q8->Z2xZ2", "s3-z2": "S3->Z2", "d4-z2xz2": "D4->Z2xZ2"}
    for fname, hname in homs.items():
        fm.write(fx.catalog_hom(hname), root / "homs" / f"{fname}.txt")
    sections = {"z4-a": [0, 1], "z4-b": [0, 3], "q8-a": [0, 4, 2, 6], "q8-b": [1, 5, 3, 7]}
    for fname, imgs in sections.items():
        fm.write(Section(np.array(imgs)), root / "sections" / f"{fname}.txt")

    q8ext = cons.xmod_from_central_extension(fx.catalog_hom("Q8->Z2xZ2"), name="ext(Q8->Z2xZ2)")
    fm.write(q8ext, root / "xmod" / "q8-ext.txt")
    s3 = cons.catalog_group("S3")
    for x in (cons.conjugation_xmod(s3), cons.automorphism_xmod(s3), cons.trivial_xmod(cons.catalog_group("Z4"))):
        fm.write(x, root / "xmod" / f"{x.name.replace('(', '-').rstrip(')').lower()}.txt")

    fm.write(cons.discrete_two_group(cons.catalog_group("Z4")), root / "2grp" / "disc-z4.txt")
    # written without comp: `check 2grp` derives it
    aut2 = cons.automorphism_two_group(s3)
    text = fm.serialize(aut2)
    head, _, tail = text.partition("comp\n")
    (root / "2grp" / "aut2-s3.txt").write_text(
        "# automorphism 2-group of S3; composition omitted and derived on load\n"
        + head + "".join(ln + "\n" for ln in tail.splitlines() if ln.startswith("version")))

    col = fx.xmod_collection(8)
    inner = next(e for e in col.two_morphisms if e.name == "inn[conj(S3)->aut(S3);1]")
    fm.write(inner, root / "morphisms" / "inner-conj-aut-s3.txt")
    fm.write(inner.src_mor, root / "morphisms" / "conj-aut-s3.txt")
    tcol = fx.twogroup_collection(8)
    th = next(e for e in tcol.two_morphisms if e.name and e.name.startswith("inn[disc(S3)->aut2(S3)"))
    fm.write(th, root / "morphisms" / "inner-disc-aut2-s3.txt")

    for name, _, family in MUTATIONS:
        obj = _mutations()[name]
        _check_mutation(obj, family)
        fm.write(obj, root / "mutations" / f"{name}.txt")

    runner = CliRunner()
    for fname, args in GOLDEN.items():
        args = [a if not a.endswith(".txt") else str(root / a) for a in args]
        res = runner.invoke(cli.main, args)
        (root / "golden" / fname).write_text(res.output)
        print(f"{fname}: exit {res.exit_code}")


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", type=Path, default=Path(__file__).resolve().parent.parent / "fixtures")
    build(ap.parse_args().out)


if __name__ == "__main__":
    main()
