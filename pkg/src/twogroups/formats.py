"""Line-oriented text formats for every structure in the package.

A document is a sequence of lines; ``#`` starts a comment. The first
entry names the kind (``group``, ``hom``, ``action``, ``twogroup``,
``xmod``, ``xmod-morphism``, ``xmod-2morphism``, ``twogroup-morphism``,
``twogroup-2morphism``, ``section``). Lines that start with an integer are
data rows belonging to the entry above them. A field holding a structure
is either a reference on one line::

    g0 catalog:Z4
    g1 @other-file.txt

or an inline block::

    g1 {
      group 2
      0 1
      1 0
    }

Top-level documents end with ``version v1``; a missing version line is
read as ``v1``.

Example (the cyclic group of order 3)::

    group 3
    0 1 2
    1 2 0
    2 0 1
    name Z3
    version v1
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from . import constructions as cons
from . import groups as gp
from . import twogroup as tgm
from . import xmod as xmm
from .errors import ParseError, UnresolvedReference
from .groups import FiniteGroup, GroupAction, GroupHom

VERSION = "v1"
KINDS = ("group", "hom", "action", "section", "twogroup", "xmod", "xmod-morphism", "xmod-2morphism",
         "twogroup-morphism", "twogroup-2morphism")


@dataclass
class Entry:
    key: str
    args: list[str]
    line: int
    rows: list[tuple[int, list[str]]] = field(default_factory=list)
    block: list["Entry"] | None = None


@dataclass
class Section:
    """A set-theoretic section ``G -> H`` of a surjection, as an index array."""

    images: np.ndarray


# ---------------------------------------------------------------- tokenizing


def _tokens(text: str):
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].split()
        if line:
            yield no, line


def _is_int(tok: str) -> bool:
    return tok.lstrip("-").isdigit()


def tokenize(text: str, path: str | None = None) -> list[Entry]:
    stack: list[list[Entry]] = [[]]
    opened: list[int] = []
    for no, toks in _tokens(text):
        cur = stack[-1]
        if toks == ["}"]:
            if len(stack) == 1:
                raise ParseError(no, "unmatched '}'", path)
            stack.pop()
            opened.pop()
            continue
        if _is_int(toks[0]):
            if not cur:
                raise ParseError(no, "data row before any header", path)
            cur[-1].rows.append((no, toks))
            continue
        if toks[-1] == "{":
            e = Entry(toks[0], toks[1:-1], no, block=[])
            cur.append(e)
            stack.append(e.block)
            opened.append(no)
            continue
        cur.append(Entry(toks[0], toks[1:], no))
    if len(stack) > 1:
        raise ParseError(opened[-1], "unclosed '{'", path)
    return stack[0]


# ---------------------------------------------------------------- reading


def _ints(tokens, line: int, path, n: int | None = None, what: str = "row") -> np.ndarray:
    try:
        out = np.array([int(t) for t in tokens], dtype=np.int64)
    except ValueError:
        raise ParseError(line, f"non-integer entry in {what}", path) from None
    if n is not None and len(out) != n:
        raise ParseError(line, f"{what} has {len(out)} entries, expected {n}", path)
    return out


class Reader:
    """Parses documents, caching referenced files by resolved path so that
    two references to one file yield the same object."""

    def __init__(self, validate: bool = True):
        self.validate = validate
        self.cache: dict[Path, object] = {}

    # -- public

    def read_path(self, path) -> object:
        path = Path(path).resolve()
        if path in self.cache:
            return self.cache[path]
        try:
            text = path.read_text()
        except OSError as err:
            raise UnresolvedReference(str(path)) from err
        obj = self.read_text(text, path)
        self.cache[path] = obj
        return obj

    def read_text(self, text: str, path: Path | None = None) -> object:
        entries = tokenize(text, _show(path))
        if not entries:
            raise ParseError(1, "empty document", _show(path))
        if entries[-1].key == "version":
            ver = entries.pop()
            if ver.args != [VERSION]:
                raise ParseError(ver.line, f"unsupported version {' '.join(ver.args)!r}", _show(path))
        return self.build(entries, path, top=True)

    # -- structure building

    def build(self, entries: list[Entry], path, top: bool = False) -> object:
        where = _show(path)
        if not entries:
            raise ParseError(0, "empty block", where)
        head = entries[0]
        if head.key not in KINDS:
            raise ParseError(head.line, f"unknown kind {head.key!r}", where)
        fields: dict[str, Entry] = {}
        for e in entries[1:]:
            if e.key in KINDS:
                raise ParseError(e.line, f"second header {e.key!r} in one document", where)
            if e.key in fields:
                raise ParseError(e.line, f"duplicate field {e.key!r}", where)
            fields[e.key] = e
        builder = getattr(self, "_" + head.key.replace("-", "_"))
        return builder(head, _Fields(fields, head, where), path, top)

    def ref(self, e: Entry, path, kind: type, where) -> object:
        if e.block is not None:
            sub = Reader(True)
            sub.cache = self.cache
            obj = sub.build(e.block, path)
        else:
            if len(e.args) != 1:
                raise ParseError(e.line, f"field {e.key!r} needs one reference", where)
            target = e.args[0]
            if target.startswith("catalog:"):
                try:
                    obj = cons.catalog_group(target[len("catalog:"):])
                except KeyError:
                    raise UnresolvedReference(target) from None
            else:
                base = Path(path).parent if path is not None else Path.cwd()
                sub = Reader(True)
                sub.cache = self.cache
                obj = sub.read_path(base / target.removeprefix("@"))
        if not isinstance(obj, kind):
            raise ParseError(e.line, f"field {e.key!r} must hold a {kind.__name__}", where)
        return obj

    def _group(self, head: Entry, f: "_Fields", path, top):
        if len(head.args) != 1 or not _is_int(head.args[0]):
            raise ParseError(head.line, "expected 'group <order>'", f.where)
        n = int(head.args[0])
        if len(head.rows) != n:
            raise ParseError(head.line, f"group {n} needs {n} rows, found {len(head.rows)}", f.where)
        table = np.array([_ints(r, no, f.where, n) for no, r in head.rows]).reshape(n, n)
        labels = f.opt("labels")
        if labels is not None and len(labels.args) != n:
            raise ParseError(labels.line, f"labels needs {n} entries", f.where)
        name = f.name()
        f.done()
        labs = labels.args if labels is not None else None
        if not self.validate and top:
            return RawGroup(table, labs, name)
        return gp.make_group(table, labs, name)

    def _hom(self, head, f, path, top):
        src = self.ref(f.req("src"), path, FiniteGroup, f.where)
        dst = self.ref(f.req("dst"), path, FiniteGroup, f.where)
        images = f.ints("images", src.order)
        f.done()
        _range(images, dst.order, f.get("images"), f.where)
        return gp.make_hom(src, dst, images)

    def _section(self, head, f, path, top):
        images = f.ints("images")
        f.done()
        return Section(images)

    def _action(self, head, f, path, top):
        actor = self.ref(f.req("actor"), path, FiniteGroup, f.where)
        space = self.ref(f.req("space"), path, FiniteGroup, f.where)
        table = f.table("map", actor.order, space.order)
        f.done()
        _range(table, space.order, f.get("map"), f.where)
        return gp.make_action(actor, space, table)

    def _twogroup(self, head, f, path, top):
        g0 = self.ref(f.req("g0"), path, FiniteGroup, f.where)
        g1 = self.ref(f.req("g1"), path, FiniteGroup, f.where)
        maps = {}
        for key, src, dst in (("s", g1, g0), ("t", g1, g0), ("i", g0, g1)):
            imgs = f.ints(key, src.order)
            _range(imgs, dst.order, f.get(key), f.where)
            maps[key] = gp.make_hom(src, dst, imgs)
        name = f.name()
        comp_entry = f.opt("comp")
        comp = None
        if comp_entry is not None:
            comp = {}
            for no, r in comp_entry.rows:
                a, b, c = _ints(r, no, f.where, 3, "comp triple")
                if (a, b) in comp:
                    raise ParseError(no, f"composition of ({a}, {b}) given twice", f.where)
                if not (0 <= a < g1.order and 0 <= b < g1.order and 0 <= c < g1.order):
                    raise ParseError(no, "composition entry out of range", f.where)
                comp[(int(a), int(b))] = int(c)
        f.done()
        s, t, i = maps["s"], maps["t"], maps["i"]
        if comp is None:
            tg = tgm.derive_composition(g0, g1, s, t, i, name)
            return DerivedTwoGroup(tg) if top and not self.validate else tg
        if top and not self.validate:
            tgm._check_typing(g0, g1, s, t, i)
            return tgm.StrictTwoGroup(g0, g1, s, t, i, tgm._comp_array(g1, s, t, comp), name)
        return tgm.make_two_group(g0, g1, s, t, i, comp, name)

    def _xmod(self, head, f, path, top):
        g = self.ref(f.req("G"), path, FiniteGroup, f.where)
        h = self.ref(f.req("H"), path, FiniteGroup, f.where)
        tau = f.ints("tau", h.order)
        _range(tau, g.order, f.get("tau"), f.where)
        alpha = f.table("alpha", g.order, h.order)
        _range(alpha, h.order, f.get("alpha"), f.where)
        name = f.name()
        f.done()
        if top and not self.validate:
            return xmm.CrossedModule(g, h, gp.make_hom(h, g, tau), gp.make_action(g, h, alpha), name)
        return xmm.make_crossed_module(g, h, tau, alpha, name)

    def _mor_ends(self, f, path, kind):
        src = self.ref(f.req("src"), path, kind, f.where)
        dst = self.ref(f.req("dst"), path, kind, f.where)
        return src, dst

    def _xmod_morphism(self, head, f, path, top):
        src, dst = self._mor_ends(f, path, xmm.CrossedModule)
        gamma = self._hom_field(f, "gamma", src.g, dst.g)
        delta = self._hom_field(f, "delta", src.h, dst.h)
        name = f.name()
        f.done()
        if top and not self.validate:
            return xmm.XModMorphism(src, dst, gamma, delta, name)
        return xmm.make_xmod_morphism(src, dst, gamma, delta, name)

    def _xmod_2morphism(self, head, f, path, top):
        src, dst = self._mor_ends(f, path, xmm.CrossedModule)
        lo = xmm.make_xmod_morphism(src, dst, self._hom_field(f, "gamma", src.g, dst.g),
                                    self._hom_field(f, "delta", src.h, dst.h))
        hi = xmm.make_xmod_morphism(src, dst, self._hom_field(f, "Gamma", src.g, dst.g),
                                    self._hom_field(f, "Delta", src.h, dst.h))
        eta = f.ints("eta", src.g.order)
        _range(eta, dst.h.order, f.get("eta"), f.where)
        name = f.name()
        f.done()
        if top and not self.validate:
            return xmm.XMod2Morphism(lo, hi, gp._frozen(eta), name)
        return xmm.make_xmod_2morphism(lo, hi, eta, name)

    def _twogroup_morphism(self, head, f, path, top):
        src, dst = self._mor_ends(f, path, tgm.StrictTwoGroup)
        f0 = self._hom_field(f, "f0", src.g0, dst.g0)
        f1 = self._hom_field(f, "f1", src.g1, dst.g1)
        name = f.name()
        f.done()
        if top and not self.validate:
            return tgm.TwoGroupMorphism(src, dst, f0, f1, name)
        return tgm.make_morphism(src, dst, f0, f1, name)

    def _twogroup_2morphism(self, head, f, path, top):
        src, dst = self._mor_ends(f, path, tgm.StrictTwoGroup)
        lo = tgm.make_morphism(src, dst, self._hom_field(f, "f0", src.g0, dst.g0),
                               self._hom_field(f, "f1", src.g1, dst.g1))
        hi = tgm.make_morphism(src, dst, self._hom_field(f, "e0", src.g0, dst.g0),
                               self._hom_field(f, "e1", src.g1, dst.g1))
        theta = self._hom_field(f, "theta", src.g0, dst.g1)
        name = f.name()
        f.done()
        if top and not self.validate:
            return tgm.TwoGroupTwoMorphism(lo, hi, theta, name)
        return tgm.make_two_morphism(lo, hi, theta, name)

    def _hom_field(self, f, key, src: FiniteGroup, dst: FiniteGroup) -> GroupHom:
        imgs = f.ints(key, src.order)
        _range(imgs, dst.order, f.get(key), f.where)
        return gp.make_hom(src, dst, imgs)


@dataclass
class RawGroup:
    """An unvalidated group table, returned by non-validating reads."""

    table: np.ndarray
    labels: list[str] | None
    name: str | None


@dataclass
class DerivedTwoGroup:
    """A 2-group read from a file without ``comp``; composition was derived."""

    two_group: tgm.StrictTwoGroup


class _Fields:
    def __init__(self, fields: dict[str, Entry], head: Entry, where):
        self.fields, self.head, self.where = fields, head, where
        self.used: set[str] = set()

    def get(self, key) -> Entry:
        return self.fields[key]

    def opt(self, key) -> Entry | None:
        self.used.add(key)
        return self.fields.get(key)

    def req(self, key) -> Entry:
        e = self.opt(key)
        if e is None:
            raise ParseError(self.head.line, f"missing field {key!r}", self.where)
        return e

    def name(self) -> str | None:
        e = self.opt("name")
        return " ".join(e.args) if e is not None and e.args else None

    def ints(self, key, n: int | None = None) -> np.ndarray:
        e = self.req(key)
        if e.rows or e.block is not None:
            raise ParseError(e.line, f"field {key!r} takes one line of integers", self.where)
        return _ints(e.args, e.line, self.where, n, key)

    def table(self, key, rows: int, cols: int) -> np.ndarray:
        e = self.req(key)
        if e.args or e.block is not None:
            raise ParseError(e.line, f"field {key!r} takes integer rows on the following lines", self.where)
        if len(e.rows) != rows:
            raise ParseError(e.line, f"{key} needs {rows} rows, found {len(e.rows)}", self.where)
        return np.array([_ints(r, no, self.where, cols) for no, r in e.rows]).reshape(rows, cols)

    def done(self) -> None:
        extra = sorted(set(self.fields) - self.used, key=lambda k: self.fields[k].line)
        if extra:
            e = self.fields[extra[0]]
            raise ParseError(e.line, f"unknown field {e.key!r} for {self.head.key}", self.where)
        if self.head.rows and self.head.key != "group":
            raise ParseError(self.head.rows[0][0], "unexpected data row", self.where)


def _range(arr, n: int, e: Entry, where) -> None:
    if ((arr < 0) | (arr >= n)).any():
        raise ParseError(e.line, f"entry out of range 0..{n - 1} in {e.key}", where)


def _show(path) -> str | None:
    return None if path is None else str(path)


def parse(source, *, validate: bool = True) -> object:
    """Read a structure from a path or from text (text if it contains a newline)."""
    reader = Reader(validate)
    if isinstance(source, Path) or (isinstance(source, str) and "\n" not in source):
        return reader.read_path(source)
    return reader.read_text(source)


def parse_text(text: str, *, validate: bool = True, base: Path | None = None) -> object:
    """Read from text; relative references resolve against ``base``."""
    return Reader(validate).read_text(text, None if base is None else Path(base) / "<text>")


# ---------------------------------------------------------------- writing


def _row(arr) -> str:
    return " ".join(str(int(x)) for x in np.asarray(arr).ravel())


def _is_catalog(g: FiniteGroup) -> bool:
    if not g.name:
        return False
    try:
        c = cons.catalog_group(g.name)
    except KeyError:
        return False
    return c == g and c.labels == g.labels


class Writer:
    def __init__(self, indent: str = "  "):
        self.indent = indent

    def lines(self, x) -> list[str]:
        if isinstance(x, FiniteGroup):
            return self._group(x)
        if isinstance(x, GroupHom):
            return ["hom", *self._field("src", x.src), *self._field("dst", x.dst), f"images {_row(x.images)}"]
        if isinstance(x, GroupAction):
            return ["action", *self._field("actor", x.actor), *self._field("space", x.space), "map",
                    *(_row(r) for r in x.map)]
        if isinstance(x, Section):
            return ["section", f"images {_row(x.images)}"]
        if isinstance(x, tgm.StrictTwoGroup):
            return self._twogroup(x)
        if isinstance(x, xmm.CrossedModule):
            return self._xmod(x)
        if isinstance(x, xmm.XModMorphism):
            return ["xmod-morphism", *self._name(x), *self._field("src", x.src), *self._field("dst", x.dst),
                    f"gamma {_row(x.gamma.images)}", f"delta {_row(x.delta.images)}"]
        if isinstance(x, xmm.XMod2Morphism):
            f, e = x.src_mor, x.dst_mor
            return ["xmod-2morphism", *self._name(x), *self._field("src", x.src), *self._field("dst", x.dst),
                    f"gamma {_row(f.gamma.images)}", f"delta {_row(f.delta.images)}",
                    f"Gamma {_row(e.gamma.images)}", f"Delta {_row(e.delta.images)}",
                    f"eta {_row(x.eta)}"]
        if isinstance(x, tgm.TwoGroupMorphism):
            return ["twogroup-morphism", *self._name(x), *self._field("src", x.src), *self._field("dst", x.dst),
                    f"f0 {_row(x.f0.images)}", f"f1 {_row(x.f1.images)}"]
        if isinstance(x, tgm.TwoGroupTwoMorphism):
            f, e = x.src_mor, x.dst_mor
            return ["twogroup-2morphism", *self._name(x), *self._field("src", x.src), *self._field("dst", x.dst),
                    f"f0 {_row(f.f0.images)}", f"f1 {_row(f.f1.images)}",
                    f"e0 {_row(e.f0.images)}", f"e1 {_row(e.f1.images)}",
                    f"theta {_row(x.theta.images)}"]
        raise TypeError(f"cannot serialize {type(x).__name__}")

    def _name(self, x) -> list[str]:
        return [f"name {x.name}"] if getattr(x, "name", None) else []

    def _field(self, key: str, x) -> list[str]:
        if isinstance(x, FiniteGroup) and _is_catalog(x):
            return [f"{key} catalog:{x.name}"]
        return [f"{key} {{", *(self.indent + line for line in self.lines(x)), "}"]

    def _group(self, g: FiniteGroup) -> list[str]:
        out = [f"group {g.order}", *(_row(r) for r in g.table)]
        out += self._name(g)
        if g.labels and list(g.labels) != [str(k) for k in range(g.order)]:
            out.append("labels " + " ".join(g.labels))
        return out

    def _twogroup(self, tg: tgm.StrictTwoGroup) -> list[str]:
        pa, pb = tg.pairs
        return ["twogroup", *self._name(tg), *self._field("g0", tg.g0), *self._field("g1", tg.g1),
                f"s {_row(tg.s.images)}", f"t {_row(tg.t.images)}", f"i {_row(tg.i.images)}",
                "comp", *(f"{a} {b} {c}" for a, b, c in zip(pa, pb, tg.comp))]

    def _xmod(self, x: xmm.CrossedModule) -> list[str]:
        return ["xmod", *self._name(x), *self._field("G", x.g), *self._field("H", x.h),
                f"tau {_row(x.tau.images)}", "alpha", *(_row(r) for r in x.alpha.map)]


def serialize(x) -> str:
    """Text form of ``x``; ``parse(serialize(x))`` is structurally equal to ``x``."""
    return "".join(line + "\n" for line in Writer().lines(x)) + f"version {VERSION}\n"


def write(x, path) -> None:
    Path(path).write_text(serialize(x))
