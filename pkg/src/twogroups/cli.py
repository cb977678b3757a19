"""Command-line interface.

Exit codes: 0 all checks pass, 1 an axiom or law fails, 2 the input could
not be read (parse error, unresolved reference, carrier bound exceeded).
"""

from __future__ import annotations

import sys
from pathlib import Path

import click

from . import constructions as cons
from . import equivalence as eq
from . import fixtures as fx
from . import formats as fm
from . import groups as gp
from . import twogroup as tgm
from . import xmod as xmm
from .errors import AxiomViolation, OrderBoundExceeded, ParseError, TwoGroupError, UnresolvedReference
from .twocat import Check, Report

INPUT_ERRORS = (ParseError, UnresolvedReference, OrderBoundExceeded)


def _fail_input(err: Exception):
    click.echo(f"ERROR {err}", err=True)
    sys.exit(2)


def _read(path, *, validate: bool = True):
    """Parse a file; on an axiom failure print its FAIL line and exit 1."""
    try:
        return fm.parse(Path(path), validate=validate)
    except INPUT_ERRORS as err:
        _fail_input(err)
    except AxiomViolation as err:
        click.echo(err.report_line())
        sys.exit(1)
    except (TwoGroupError, ValueError) as err:
        click.echo(f"ERROR {err}", err=True)
        sys.exit(2)


def _emit(rep: Report) -> None:
    for line in rep.lines():
        click.echo(line)


# ---------------------------------------------------------------- check


def _families(rep: Report, families, failures) -> None:
    """PASS/FAIL line per family; families after a skipped one are omitted."""
    found = {f.check: f for f in failures}
    for fam in families:
        if fam is None:
            break
        err = found.get(fam)
        rep.checks.append(Check(fam, err is None, err.witness_text() if err is not None else ""))


GROUP_FAMILIES = ("closure", "identity", "inverse", "associativity")
TWOGROUP_FAMILIES = ("identity-section", "unit-law", "composite-boundary", "composition-associativity", "interchange")


def axiom_report(obj) -> tuple[Report, list[str]]:
    """Per-family report for an unvalidated structure, plus informational lines."""
    rep, notes = Report(), []
    if isinstance(obj, fm.RawGroup):
        try:
            gp.validate_table(obj.table, obj.labels)
        except AxiomViolation as err:
            k = GROUP_FAMILIES.index(err.check)
            _families(rep, GROUP_FAMILIES[:k + 1], [err])
        else:
            _families(rep, GROUP_FAMILIES, [])
    elif isinstance(obj, fm.DerivedTwoGroup):
        notes.append("derived-composition: PASS")
        _families(rep, TWOGROUP_FAMILIES, [])
    elif isinstance(obj, tgm.StrictTwoGroup):
        errs = tgm.two_group_violations(obj)
        fams = list(TWOGROUP_FAMILIES)
        if any(e.check == "composite-boundary" for e in errs):
            fams.remove("composition-associativity")
        _families(rep, fams, errs)
        if not errs:
            err = tgm.derived_composition_failure(obj)
            _families(rep, ["derived-composition"], [err] if err else [])
    elif isinstance(obj, xmm.CrossedModule):
        _families(rep, ("equivariance", "peiffer"), xmm.xmod_violations(obj))
    elif isinstance(obj, xmm.XModMorphism):
        _families(rep, ("xmod-morphism-tau", "xmod-morphism-action"), xmm.xmod_morphism_violations(obj))
    elif isinstance(obj, tgm.TwoGroupMorphism):
        errs = tgm.morphism_violations(obj)
        fams = ["functor-source", "functor-target", "functor-identity"]
        if not errs or errs[-1].check == "functor-composition":
            fams.append("functor-composition")
        _families(rep, fams, errs)
    elif isinstance(obj, xmm.XMod2Morphism):
        _families(rep, ("crossed-law", "chain-homotopy-1", "chain-homotopy-2"), xmm.xmod_2morphism_violations(obj))
    elif isinstance(obj, tgm.TwoGroupTwoMorphism):
        errs = tgm.two_morphism_violations(obj)
        fams = ["boundary-source", "boundary-target"]
        if not any(e.check.startswith("boundary") for e in errs):
            fams.append("naturality")
        _families(rep, fams, errs)
    else:
        raise TypeError(type(obj).__name__)
    return rep, notes


CHECK_KINDS = {
    "group": (fm.RawGroup,),
    "2grp": (tgm.StrictTwoGroup, fm.DerivedTwoGroup),
    "xmod": (xmm.CrossedModule,),
    "morphism": (xmm.XModMorphism, tgm.TwoGroupMorphism),
    "2morphism": (xmm.XMod2Morphism, tgm.TwoGroupTwoMorphism),
}


@click.group()
def main():
    """Finite strict 2-groups and crossed modules."""


@main.command()
@click.argument("kind", type=click.Choice(list(CHECK_KINDS)))
@click.argument("path", type=click.Path(dir_okay=False))
def check(kind, path):
    """Validate a structure file, one PASS/FAIL line per axiom family."""
    obj = _read(path, validate=False)
    if not isinstance(obj, CHECK_KINDS[kind]):
        _fail_input(ParseError(1, f"file does not hold a {kind}", path))
    rep, notes = axiom_report(obj)
    for line in notes:
        click.echo(line)
    _emit(rep)
    sys.exit(0 if rep.ok else 1)


# ---------------------------------------------------------------- convert


def _out(text: str, out) -> None:
    if out:
        Path(out).write_text(text)
    else:
        click.echo(text, nl=False)


@main.command()
@click.argument("direction", type=click.Choice(["to-xmod", "to-2grp"]))
@click.argument("path", type=click.Path(dir_okay=False))
@click.option("-o", "--out", type=click.Path(dir_okay=False), help="Write here instead of stdout.")
def convert(direction, path, out):
    """Apply T (to-xmod) or S (to-2grp) to an object file."""
    obj = _read(path)
    if isinstance(obj, fm.DerivedTwoGroup):
        obj = obj.two_group
    echo = (lambda s: click.echo(s)) if out else (lambda s: click.echo(s, err=True))
    try:
        if direction == "to-xmod":
            if not isinstance(obj, tgm.StrictTwoGroup):
                _fail_input(ParseError(1, "to-xmod needs a twogroup file", path))
            x = eq.t0(obj)
            mor, _ = eq.xi(obj)
            echo(f"2-group |G0|={obj.g0.order} |G1|={obj.g1.order} -> crossed module |G|={x.g.order} |H|={x.h.order}")
            echo(f"witness xi: |ker s x G0|={mor.src.g1.order} -> |G1|={obj.g1.order}")
        else:
            if not isinstance(obj, xmm.CrossedModule):
                _fail_input(ParseError(1, "to-2grp needs an xmod file", path))
            x = eq.s0(obj)
            mor, _ = eq.zeta(obj)
            echo(f"crossed module |G|={obj.g.order} |H|={obj.h.order} -> 2-group |G0|={x.g0.order} |G1|={x.g1.order}")
            echo(f"witness zeta: |ker pi2|={mor.src.h.order} -> |H|={obj.h.order}")
    except OrderBoundExceeded as err:
        _fail_input(err)
    _out(fm.serialize(x), out)


# ---------------------------------------------------------------- roundtrip


def _collection_of(obj):
    if isinstance(obj, fm.DerivedTwoGroup):
        obj = obj.two_group
    if isinstance(obj, (tgm.StrictTwoGroup, xmm.CrossedModule)):
        return [obj], [], []
    if isinstance(obj, (tgm.TwoGroupMorphism, xmm.XModMorphism)):
        return _ends(obj), [obj], []
    if isinstance(obj, (tgm.TwoGroupTwoMorphism, xmm.XMod2Morphism)):
        return _ends(obj), [obj.src_mor, obj.dst_mor], [obj]
    raise ParseError(1, "roundtrip needs a 2-group, crossed module, morphism or 2-morphism")


def _ends(x) -> list:
    return [x.src] if x.src is x.dst else [x.src, x.dst]


@main.command()
@click.argument("path", required=False, type=click.Path(dir_okay=False))
@click.option("--catalog", "use_catalog", is_flag=True, help="Run over the catalog collections.")
@click.option("--max-order", type=int, default=8, show_default=True, help="Carrier-order cap for --catalog.")
def roundtrip(path, use_catalog, max_order):
    """Verify the xi/zeta witnesses, naturality and functoriality."""
    if use_catalog == (path is not None):
        raise click.UsageError("give exactly one of PATH or --catalog")
    reports = []
    try:
        if use_catalog:
            for title, col in (("xmod", fx.xmod_collection(max_order)), ("2grp", fx.twogroup_collection(max_order))):
                rep = eq.verify_round_trip(col.objects, col.morphisms, col.two_morphisms,
                                           subject=f"{title} catalog <= {max_order}")
                reports.append((f"{title} catalog, carrier order <= {max_order}: {len(col.objects)} objects, "
                                f"{len(col.morphisms)} morphisms, {len(col.two_morphisms)} 2-morphisms", rep))
        else:
            objs, mors, twos = _collection_of(_read(path))
            reports.append((None, eq.verify_round_trip(objs, mors, twos, subject=str(path))))
    except INPUT_ERRORS as err:
        _fail_input(err)
    ok = True
    total = fails = 0
    for title, rep in reports:
        if title:
            click.echo(f"# {title}")
        for line in rep.lines():
            click.echo(line)
        ok &= rep.ok
        total += len(rep.checks())
        fails += sum(1 for c in rep.checks() if not c.ok)
    if use_catalog:
        click.echo(f"# {total} checks, {fails} failed")
    sys.exit(0 if ok else 1)


# ---------------------------------------------------------------- central extensions


@main.command("from-central-extension")
@click.argument("tau_path", type=click.Path(dir_okay=False))
@click.option("--section", "section_path", type=click.Path(dir_okay=False), help="Section file (default: smallest preimage).")
@click.option("-o", "--out", type=click.Path(dir_okay=False), help="Write here instead of stdout.")
def from_central_extension(tau_path, section_path, out):
    """Build the crossed module of a central extension tau: H -> G."""
    tau = _read(tau_path)
    if not isinstance(tau, gp.GroupHom):
        _fail_input(ParseError(1, "expected a hom file", tau_path))
    ok, err = cons.is_central_extension(tau)
    if not ok:
        click.echo(err.report_line())
        sys.exit(1)
    section = None
    if section_path:
        sec = _read(section_path)
        if not isinstance(sec, fm.Section):
            _fail_input(ParseError(1, "expected a section file", section_path))
        section = sec.images
    try:
        x = cons.xmod_from_central_extension(tau, section, name=f"ext({tau.src.name}->{tau.dst.name})")
    except AxiomViolation as err:
        click.echo(err.report_line())
        sys.exit(1)
    except ValueError as err:
        _fail_input(ParseError(1, str(err), section_path))
    _out(fm.serialize(x), out)


# ---------------------------------------------------------------- catalog


@main.group()
def catalog():
    """The built-in catalog of small groups."""


@catalog.command("list")
def catalog_list():
    for g in cons.catalog():
        kind = "abelian" if g.is_abelian else "nonabelian"
        click.echo(f"{g.name} {g.order} {kind}")


@catalog.command("get")
@click.argument("name")
@click.option("-o", "--out", type=click.Path(dir_okay=False), help="Write here instead of stdout.")
def catalog_get(name, out):
    """Print a catalog group in the group file format."""
    try:
        g = cons.catalog_group(name)
    except KeyError:
        _fail_input(UnresolvedReference(f"catalog:{name}"))
    _out(fm.serialize(g), out)


if __name__ == "__main__":
    main()
