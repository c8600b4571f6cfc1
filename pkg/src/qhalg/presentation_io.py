"""Presentation files.

A presentation file is a JSON object with the keys

``field``       ``"rationals"`` or ``{"prime": p}``
``vertices``    list of vertex labels (these are also the weight labels)
``arrows``      list of ``{"name", "from", "to"}``
``relations``   list of relations, each a list of terms
                ``{"coeff": "-2/3", "path": ["a", "b"]}`` (first-traversed first);
                a relation is the statement that the sum of its terms is zero
``order``       list of covering pairs ``[smaller, larger]``
``duality``     optional map arrow -> arrow (an involution reversing arrows)
``name``        optional string
``notes``       optional string, ignored by the pipeline

Any other key is rejected.  Coefficients are strings (or integers) and are
parsed exactly.
"""

from __future__ import annotations

import json
from importlib import resources

from .exactlin import GF, QQ, FieldSpec
from .quiver import Presentation, PresentationError, QArrow, Quiver

KEYS = {"field", "vertices", "arrows", "relations", "order", "duality", "name", "notes"}
REQUIRED = ("field", "vertices", "arrows", "relations", "order")
ARROW_KEYS = {"name", "from", "to"}
TERM_KEYS = {"coeff", "path"}


def _fail(code, msg, ctx):
    raise PresentationError(code, msg, ctx)


def _expect(cond, ctx, msg):
    if not cond:
        _fail("bad-value", msg, ctx)


def _parse_field(raw) -> FieldSpec:
    if raw == "rationals":
        return QQ
    if isinstance(raw, dict) and set(raw) == {"prime"}:
        p = raw["prime"]
        _expect(isinstance(p, int) and not isinstance(p, bool), "field.prime", "prime must be an integer")
        try:
            return GF(p)
        except ValueError as exc:
            _fail("bad-field", str(exc), "field")
    _fail("bad-field", 'field must be "rationals" or {"prime": p}', "field")


def _coeff(raw, ctx):
    if isinstance(raw, bool) or not isinstance(raw, (str, int)):
        _fail("bad-coefficient", "coefficients are strings such as \"-2/3\" or integers", ctx)
    return str(raw)


def presentation_from_dict(data, source: str = "") -> Presentation:
    if not isinstance(data, dict):
        _fail("bad-document", "a presentation file must hold a JSON object", source)
    unknown = sorted(set(data) - KEYS)
    if unknown:
        _fail("unknown-key", f"unknown top-level key(s) {unknown}", unknown[0])
    for k in REQUIRED:
        if k not in data:
            _fail("missing-key", f"missing required key {k!r}", k)
    field = _parse_field(data["field"])

    verts = data["vertices"]
    _expect(isinstance(verts, list) and all(isinstance(v, str) for v in verts), "vertices",
            "vertices must be a list of strings")
    _expect(len(verts) > 0, "vertices", "at least one vertex is needed")

    arrows = []
    _expect(isinstance(data["arrows"], list), "arrows", "arrows must be a list")
    for i, a in enumerate(data["arrows"]):
        ctx = f"arrows[{i}]"
        _expect(isinstance(a, dict), ctx, "an arrow is an object {name, from, to}")
        extra = sorted(set(a) - ARROW_KEYS)
        if extra:
            _fail("unknown-key", f"unknown arrow key(s) {extra}", ctx)
        if set(a) != ARROW_KEYS:
            _fail("missing-key", "an arrow needs name, from and to", ctx)
        _expect(all(isinstance(a[k], str) for k in ARROW_KEYS), ctx, "arrow fields are strings")
        arrows.append(QArrow(a["name"], a["from"], a["to"]))

    rels = []
    _expect(isinstance(data["relations"], list), "relations", "relations must be a list")
    for i, rel in enumerate(data["relations"]):
        ctx = f"relations[{i}]"
        _expect(isinstance(rel, list), ctx, "a relation is a list of terms")
        terms = []
        for j, t in enumerate(rel):
            tctx = f"{ctx}[{j}]"
            _expect(isinstance(t, dict), tctx, "a term is an object {coeff, path}")
            extra = sorted(set(t) - TERM_KEYS)
            if extra:
                _fail("unknown-key", f"unknown term key(s) {extra}", tctx)
            if set(t) != TERM_KEYS:
                _fail("missing-key", "a term needs coeff and path", tctx)
            path = t["path"]
            _expect(isinstance(path, list) and all(isinstance(x, str) for x in path), tctx + ".path",
                    "a path is a list of arrow names")
            c = _coeff(t["coeff"], tctx + ".coeff")
            try:
                field(c)
            except (ValueError, ZeroDivisionError) as exc:
                _fail("bad-coefficient", f"coefficient {c!r}: {exc}", tctx + ".coeff")
            terms.append((c, tuple(path)))
        rels.append(terms)

    order = data["order"]
    _expect(isinstance(order, list), "order", "order must be a list of pairs")
    for i, pair in enumerate(order):
        _expect(isinstance(pair, list) and len(pair) == 2 and all(isinstance(x, str) for x in pair),
                f"order[{i}]", "an order entry is a pair [smaller, larger]")

    duality = data.get("duality")
    if duality is not None:
        _expect(isinstance(duality, dict) and all(isinstance(v, str) for v in duality.values()),
                "duality", "duality must map arrow names to arrow names")
        duality = dict(duality)
    name = data.get("name", "")
    _expect(isinstance(name, str), "name", "name must be a string")
    meta = {"notes": data["notes"]} if "notes" in data else {}

    q = Quiver(list(verts), arrows)
    return Presentation(q, rels, [tuple(p) for p in order], duality, field, name, meta)


def parse(text: str, source: str = "") -> Presentation:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        _fail("syntax", f"invalid JSON: {exc.msg}", f"{source or 'input'} line {exc.lineno} column {exc.colno}")
    return presentation_from_dict(data, source)


def load(path) -> Presentation:
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read(), str(path))


def to_dict(pres: Presentation) -> dict:
    out = {}
    if pres.name:
        out["name"] = pres.name
    if "notes" in pres.meta:
        out["notes"] = pres.meta["notes"]
    out["field"] = pres.field.to_json()
    out["vertices"] = list(pres.quiver.vertices)
    out["arrows"] = [{"name": a.name, "from": a.source, "to": a.target} for a in pres.quiver.arrows]
    out["relations"] = [[{"coeff": str(c), "path": list(path)} for c, path in rel] for rel in pres.relations]
    out["order"] = [list(p) for p in pres.order]
    if pres.duality is not None:
        out["duality"] = dict(pres.duality)
    return out


def serialize(pres: Presentation) -> str:
    return json.dumps(to_dict(pres), indent=2) + "\n"


# -- the bundled corpus --------------------------------------------------------------

CORPUS = ("example_5_3_2", "example_5_3_3", "a1_s1_witness", "semisimple_4")


def corpus_path(name: str):
    return resources.files("qhalg") / "corpus" / f"{name}.json"


def corpus_names():
    return list(CORPUS)


def load_corpus(name: str) -> Presentation:
    return parse(corpus_path(name).read_text(encoding="utf-8"), name)


def corpus():
    return [load_corpus(n) for n in CORPUS]


def resolve(spec: str) -> Presentation:
    """A file path, or the name of a bundled corpus file."""
    import os
    if os.path.exists(spec):
        return load(spec)
    stem = spec[:-5] if spec.endswith(".json") else spec
    if stem in CORPUS:
        return load_corpus(stem)
    _fail("no-such-file", f"{spec!r} is neither a file nor a corpus name ({', '.join(CORPUS)})", spec)
