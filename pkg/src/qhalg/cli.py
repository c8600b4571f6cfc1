"""Command line interface: ``qha <command> FILE [options]``.

Exit codes: 0 success, 1 input error, 2 a requested property or a checked identity was
found to fail, 3 internal cross-check failure.
"""

from __future__ import annotations

import argparse
import re
import sys

from .highest_weight import CrossCheckError, HighestWeightError, PROPERTIES
from .homological import DimensionBound, ext_dims
from .modules import IsomorphismUndecided, injective, projective
from .presentation_io import resolve
from .quiver import PresentationError
from .report import (AnalysisConfig, Session, analyze, dumps, header, section_algebra,
                     section_audits, section_certificate, section_dimensions, section_properties,
                     section_ringel, section_truncations)
from .schur import Partition, d_lambda, is_regular

EXIT_OK, EXIT_INPUT, EXIT_VIOLATION, EXIT_INTERNAL = 0, 1, 2, 3

EXPR = re.compile(r"^\s*(L|Delta|Nabla|P|I|T)\s*\(\s*([^()\s]+)\s*\)\s*$")


class InputError(ValueError):
    pass


def parse_expr(text: str):
    m = EXPR.match(text)
    if not m:
        raise InputError(f"bad module expression {text!r}; expected L(x), Delta(x), Nabla(x), P(x), I(x) or T(x)")
    return m.group(1), m.group(2)


def module_of(session: Session, kind: str, lam: str):
    hw = session.hw
    if lam not in hw.algebra.widx:
        raise InputError(f"unknown weight {lam!r}")
    if kind == "L":
        return hw.simple(lam)
    if kind == "P":
        return projective(hw.algebra, hw.idx(lam))
    if kind == "I":
        return injective(hw.algebra, hw.idx(lam))
    if not hw.certified:
        raise InputError("standard, costandard and tilting modules need a quasi-hereditary order")
    if kind == "Delta":
        return hw.standard[lam]
    if kind == "Nabla":
        return hw.costandard[lam]
    from .tilting import indecomposable_tilting
    return indecomposable_tilting(hw, lam).module


def _weights(text, session):
    out = [t.strip() for t in text.split(",") if t.strip()]
    for w in out:
        if w not in session.algebra.widx:
            raise InputError(f"unknown weight {w!r}")
    return out


def _properties(text):
    names = {p.lower(): p for p in PROPERTIES}
    out = []
    for t in text.split(","):
        t = t.strip()
        if t.lower() not in names:
            raise InputError(f"unknown property {t!r}; choose from {', '.join(PROPERTIES)}")
        out.append(names[t.lower()])
    return tuple(out)


# -- human-readable output --------------------------------------------------------------

def _table(rows, header_row):
    cols = [header_row] + rows
    widths = [max(len(str(r[i])) for r in cols) for i in range(len(header_row))]
    lines = ["  ".join(str(x).rjust(w) for x, w in zip(r, widths)) for r in cols]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines)


def _mark(b):
    return "yes" if b else "no"


def show_algebra(rep, out):
    a = rep["algebra"]
    out.write(f"algebra {a['name'] or '(unnamed)'} over {a['field']}: dim {a['dim']}, "
              f"basis by path length {a['basis_count_by_length']}\n")
    c = rep["certificate"]
    out.write(f"quasi-hereditary for the order {c['order_covers']}: {_mark(c['certified'])}\n")


def show_tables(rep, out):
    for key, title in (("Delta_L", "[Delta(row):L(col)]"), ("nabla_L", "[nabla(row):L(col)]"),
                       ("P_Delta", "(P(row):Delta(col))"), ("cartan", "Cartan")):
        t = rep["tables"][key]
        out.write(f"\n{title}\n")
        out.write(_table([[r] + v for r, v in zip(t["rows"], t["values"])], [""] + t["cols"]) + "\n")


DIM_KEYS = ("gfd_L", "wfd_L", "gfd_Delta", "wfd_Delta", "gfd_nabla", "wfd_nabla",
            "proj_Delta", "inj_Delta", "proj_nabla", "inj_nabla")


def show_dimensions(rep, out):
    d = rep["dimensions"]
    rows = [[lam] + [v[k] for k in DIM_KEYS] for lam, v in d["per_weight"].items()]
    out.write("\n" + _table(rows, ["weight"] + list(DIM_KEYS)) + "\n")
    out.write(f"glob = {d['glob']}, gfd(S) = {d['gfd_S']}, wfd(S) = {d['wfd_S']}\n")


def show_properties(rep, out):
    p = rep["properties"]
    out.write(f"\nproperties (order {p['evaluated_order_covers']}):\n")
    for k, v in p["verdicts"].items():
        out.write(f"  {k}: {_mark(v['holds'])}\n")
    if "verdicts_given_order" in p:
        out.write("  on the given order: " + ", ".join(
            f"{k}: {_mark(v['holds'])}" for k, v in p["verdicts_given_order"].items()) + "\n")


def show_ringel(rep, out):
    r = rep["ringel"]
    out.write(f"\nRingel dual: dim {r['dual_dim']}, quasi-hereditary for the reversed order: "
              f"{_mark(r['dual_certified'])}\n")
    rows = []
    for lam, v in r["identities"].items():
        rows.append([lam] + [f"{a}={b}" if a == b else f"{a}!={b}" for a, b in
                             (v["i"], v["ii"], v["iii"], v["iv"])])
    out.write(_table(rows, ["weight", "(i)", "(ii)", "(iii)", "(iv)"]) + "\n")
    c = r["corollary"]
    dual_w, dual_g = c["wfd_S'"], c["gfd_S'"]
    out.write(f"gfd(S)={c['gfd_S']} wfd(S')={dual_w} wfd(S)={c['wfd_S']} gfd(S')={dual_g}\n")
    out.write(f"all identities hold: {_mark(r['ok'])}\n")


def show_truncations(rep, out):
    t = rep["truncations"]
    for x in t["saturated"]:
        out.write(f"\nS/S e S keeping {x['Pi']}: dim {x['dim']}, Delta/nabla transported\n")
    for x in t["corner"]:
        out.write(f"\ne S e for Gamma = {x['Gamma']}: dim {x['dim']}, "
                  f"Ringel fingerprints match: {_mark(x['ringel_fingerprints']['match'])}\n")


def show_audits(rep, out):
    a = rep["audits"]
    if not a.get("applies", True):
        out.write(f"\naudit skipped: {a['reason']}\n")
        return
    out.write("\naudit:\n")
    for k in ("global_dimension_theorem", "implications", "bgg_reciprocity", "four_simples"):
        out.write(f"  {k}: {'ok' if a[k]['ok'] else 'VIOLATED'}\n")
    lem = a["even_ext_condition"]
    if lem["applies"]:
        out.write(f"  even_ext_condition (observation): {'holds' if lem['ok'] else 'fails'} on the sample\n")


# -- commands -------------------------------------------------------------------------

def _session(args):
    pres = resolve(args.file)
    return Session.from_presentation(pres, args.max_path_len)


def _require_qh(s, rep, out):
    if not s.certified:
        show_algebra(rep, out)
        ev = s.hw.evidence
        out.write(f"not quasi-hereditary: {ev}\n")
        return False
    return True


def cmd_analyze(args, out):
    s = _session(args)
    rep = analyze(s, AnalysisConfig(max_path_len=args.max_path_len))
    if not _require_qh(s, rep, out):
        return rep, EXIT_INPUT
    show_algebra(rep, out)
    show_tables(rep, out)
    show_dimensions(rep, out)
    show_properties(rep, out)
    show_ringel(rep, out)
    show_truncations(rep, out)
    show_audits(rep, out)
    v = rep["findings"]["violations"]
    out.write("\nviolations: " + (", ".join(v) if v else "none") + "\n")
    return rep, EXIT_VIOLATION if v else EXIT_OK


def _base(s, command):
    rep = header(s, command)
    rep["algebra"] = section_algebra(s)
    rep["certificate"] = section_certificate(s)
    return rep


def cmd_dims(args, out):
    s = _session(args)
    rep = _base(s, "dims")
    if not _require_qh(s, rep, out):
        return rep, EXIT_INPUT
    rep["dimensions"] = section_dimensions(s)
    show_algebra(rep, out)
    show_dimensions(rep, out)
    return rep, EXIT_OK


def cmd_ext(args, out):
    s = _session(args)
    rep = _base(s, "ext")
    if args.max_degree < 0:
        raise InputError("--max-degree must be non-negative")
    a, b = parse_expr(args.from_), parse_expr(args.to)
    M, N = module_of(s, *a), module_of(s, *b)
    dims = ext_dims(M, N, args.max_degree)
    rep["ext"] = {"from": f"{a[0]}({a[1]})", "to": f"{b[0]}({b[1]})", "dims": dims}
    out.write(f"dim Ext^i({a[0]}({a[1]}), {b[0]}({b[1]})) for i = 0..{args.max_degree}: {dims}\n")
    return rep, EXIT_OK


def cmd_ringel(args, out):
    s = _session(args)
    rep = _base(s, "ringel")
    if not _require_qh(s, rep, out):
        return rep, EXIT_INPUT
    rep["ringel"] = section_ringel(s)
    show_ringel(rep, out)
    return rep, EXIT_OK if rep["ringel"]["ok"] else EXIT_VIOLATION


def cmd_truncate(args, out):
    s = _session(args)
    rep = _base(s, "truncate")
    if not _require_qh(s, rep, out):
        return rep, EXIT_INPUT
    if bool(args.keep) == bool(args.corner):
        raise InputError("give exactly one of --keep and --corner")
    keep = _weights(args.keep, s) if args.keep else None
    corner = _weights(args.corner, s) if args.corner else None
    rep["truncations"] = section_truncations(s, keep=keep, corner=corner)
    show_truncations(rep, out)
    for x in rep["truncations"]["saturated"] + rep["truncations"]["corner"]:
        rows = [[lam] + [v[k] for k in DIM_KEYS] for lam, v in x["dimensions"].items()]
        out.write(_table(rows, ["weight"] + list(DIM_KEYS)) + "\n")
    return rep, EXIT_OK if rep["truncations"]["ok"] else EXIT_VIOLATION


def cmd_check(args, out):
    s = _session(args)
    rep = _base(s, "check")
    if not _require_qh(s, rep, out):
        return rep, EXIT_INPUT
    which = _properties(args.properties)
    rep["properties"] = section_properties(s, which)
    show_properties(rep, out)
    ok = all(v["holds"] for v in rep["properties"]["verdicts"].values())
    return rep, EXIT_OK if ok else EXIT_VIOLATION


def cmd_audit(args, out):
    s = _session(args)
    rep = _base(s, "audit")
    if not _require_qh(s, rep, out):
        return rep, EXIT_INPUT
    rep["properties"] = section_properties(s)
    rep["audits"] = section_audits(s)
    show_audits(rep, out)
    return rep, EXIT_OK if rep["audits"]["ok"] else EXIT_VIOLATION


def cmd_schur_d(args, out):
    try:
        lam = Partition.parse(args.lam)
        d, reg = d_lambda(lam, args.p), is_regular(lam, args.p)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    out.write(f"{d}\n")
    out.write(f"regular: {_mark(reg)}\n")
    from . import __version__
    from .report import SCHEMA_VERSION
    rep = {"schema_version": SCHEMA_VERSION, "tool_version": __version__, "command": "schur-d",
           "schur": {"lambda": list(lam.parts), "p": args.p, "d": d, "regular": reg}}
    return rep, EXIT_OK


COMMANDS = {
    "analyze": cmd_analyze, "dims": cmd_dims, "ext": cmd_ext, "ringel": cmd_ringel,
    "truncate": cmd_truncate, "check": cmd_check, "audit": cmd_audit, "schur-d": cmd_schur_d,
}


def build_parser():
    ap = argparse.ArgumentParser(prog="qha", description="Homological dimensions of quasi-hereditary algebras")
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, help_, with_file=True):
        p = sub.add_parser(name, help=help_)
        if with_file:
            p.add_argument("file", help="presentation file or bundled corpus name")
            p.add_argument("--max-path-len", type=int, default=None,
                           help="path length cap (default: $QHA_MAX_PATH_LEN or 64)")
        p.add_argument("--json", metavar="PATH", help="write the machine-readable report here")
        return p

    add("analyze", "full pipeline")
    add("dims", "dimension tables")
    p = add("ext", "dimensions of Ext groups")
    p.add_argument("--from", dest="from_", required=True, metavar="EXPR")
    p.add_argument("--to", required=True, metavar="EXPR")
    p.add_argument("--max-degree", type=int, default=3)
    add("ringel", "Ringel dual and its dimension identities")
    p = add("truncate", "saturated (--keep) or corner (--corner) truncation")
    p.add_argument("--keep", metavar="W,...")
    p.add_argument("--corner", metavar="W,...")
    p = add("check", "monotonicity properties")
    p.add_argument("--properties", default=",".join(PROPERTIES))
    add("audit", "instance checks of the theorems")
    p = add("schur-d", "d(lambda) and regularity of a partition", with_file=False)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--lambda", dest="lam", required=True, metavar="a,b,...")
    return ap


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        rep, code = COMMANDS[args.command](args, out)
    except (PresentationError, HighestWeightError, InputError) as exc:
        sys.stderr.write(f"input error: {exc}\n")
        return EXIT_INPUT
    except (CrossCheckError, DimensionBound, IsomorphismUndecided) as exc:
        sys.stderr.write(f"internal cross-check failure: {exc}\n")
        return EXIT_INTERNAL
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            fh.write(dumps(rep))
    return code


if __name__ == "__main__":
    sys.exit(main())
