"""Command-line front end.

Exit codes: 0 on success, 1 on usage or input errors, 2 when ``--assert`` is
given and the verdict is negative (and always for failed rechecks and repro
mismatches).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .. import datasets
from ..algebra.monomial_ideal import MonomialIdeal
from ..algebra.polynomial import PolynomialSyntaxError
from ..decomposability import is_vertex_decomposable, is_weakly_vertex_decomposable
from ..graphs import Graph, circulant, independence_complex
from ..homology import cm_failure, resolve_field
from ..liaison.bdl import BDLWitness, verify_bdl, vertex_bdl
from ..liaison.biliaison import BiliaisonWitness, check_linked, verify_biliaison
from ..liaison.certificate import RefutationCertificate, replay
from ..liaison.edge_search import search_edge_bdl
from ..liaison.refute import GENERAL, MODES, refute_deg1, refute_deg2
from ..simplicial import SimplicialComplex, stanley_reisner
from . import repro

OK, USAGE, NEGATIVE = 0, 1, 2


class InputError(Exception):
    """Bad input file or argument; reported with exit code 1."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(USAGE, f"{self.prog}: error: {message}\n")


# input ---------------------------------------------------------------------


def read_json(name):
    """Parse a JSON file; bare names fall back to the bundled data files."""
    if os.path.exists(name):
        with open(name) as fh:
            text = fh.read()
        where = name
    else:
        try:
            text = datasets.path(name).read_text()
        except FileNotFoundError:
            raise InputError(f"{name}: no such file (and no bundled data of that name)") from None
        where = f"bundled:{name}"
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{where}:{exc.lineno}:{exc.colno}: {exc.msg}") from None


def _wrap(name, build):
    try:
        return build(read_json(name))
    except InputError:
        raise
    except (PolynomialSyntaxError, ValueError, KeyError, TypeError) as exc:
        raise InputError(f"{name}: {exc}") from None


def load_complex(name):
    """A complex JSON, or a graph JSON (its independence complex)."""

    def build(d):
        if "facets" not in d and ("edges" in d or "circulant" in d):
            return independence_complex(Graph.from_dict(d))
        return SimplicialComplex.from_dict(d)

    return _wrap(name, build)


def load_cubic_ideal(name):
    """An ideal JSON {"n", "gens"} of monomials, or a complex (its Stanley-Reisner ideal)."""

    def build(d):
        if "facets" in d:
            return stanley_reisner(SimplicialComplex.from_dict(d))
        return MonomialIdeal.parse(int(d["n"]), d["gens"])

    return _wrap(name, build)


def load_graph(args):
    if args.circulant:
        n, conn = args.circulant
        try:
            return circulant(int(n), [int(s) for s in conn.split(",")])
        except ValueError as exc:
            raise InputError(f"--circulant: {exc}") from None
    if not args.input:
        raise InputError("search-edge needs a graph file or --circulant N S")
    return _wrap(args.input, Graph.from_dict)


def _vertex(args):
    if args.vertex is None:
        raise InputError(f"{args.action} needs a vertex (-k)")
    return args.vertex


# output --------------------------------------------------------------------


def _emit(args, lines, payload):
    if args.json:
        print(json.dumps(payload, indent=1))
    else:
        print("\n".join(lines))


def _verdict(args, positive):
    return NEGATIVE if args.assert_ and not positive else OK


def _save_certificate(args, cert):
    if getattr(args, "certificate", None):
        cert.save(args.certificate)
        if not args.json:
            print(f"certificate written to {args.certificate}")


def _tf(b):
    return str(bool(b)).lower()


# complex -------------------------------------------------------------------


def cmd_complex(args):
    cx = load_complex(args.input)
    fld = resolve_field(args.field)
    act = args.action
    if act in ("link", "deletion", "cone"):
        k = _vertex(args)
        try:
            out = getattr(cx, act)(k)
        except (ValueError, IndexError) as exc:
            raise InputError(str(exc)) from None
        _emit(args, [json.dumps(out.to_dict())], out.to_dict())
        return OK
    if act == "info":
        info = {
            "n": cx.n,
            "dimension": cx.dim if not cx.is_void else None,
            "pure": cx.is_pure,
            "facets": len(cx.facets),
            "f-vector": cx.f_vector(),
            "stanley-reisner": stanley_reisner(cx).strings(),
        }
        lines = [
            f"dimension: {info['dimension']}",
            f"pure: {_tf(cx.is_pure)}",
            f"facets: {info['facets']}",
            f"f-vector: {info['f-vector']}",
            f"Stanley-Reisner ideal: {stanley_reisner(cx)}",
        ]
        _emit(args, lines, info)
        return OK
    if act == "cm":
        why = cm_failure(cx, fld)
        lines = [f"Cohen-Macaulay: {_tf(why is None)}"]
        if why is not None:
            lines.append(f"reason: {why}")
        _emit(args, lines, {"cohen_macaulay": why is None, "field": fld.name, "reason": why})
        return _verdict(args, why is None)
    if act in ("vd", "wvd"):
        if act == "vd":
            trace, label = is_vertex_decomposable(cx), "vertex decomposable"
        else:
            trace, label = is_weakly_vertex_decomposable(cx, fld), "weakly vertex decomposable"
        lines = [f"{label}: {_tf(trace.verdict)}"]
        if args.trace:
            lines.extend(trace.lines())
        _emit(args, lines, {label.replace(" ", "_"): trace.verdict, "reason": trace.reason})
        return _verdict(args, trace.verdict)
    raise InputError(f"unknown complex action {act!r}")


# bdl -----------------------------------------------------------------------


def cmd_bdl(args):
    act = args.action
    jobs = args.jobs
    if act == "verify":
        w = _wrap(args.input, BDLWitness.from_dict)
        v = verify_bdl(w, args.field)
        _emit(args, v.lines(), v.to_dict())
        return _verdict(args, v.valid)
    if act == "vertex":
        cx = load_complex(args.input)
        try:
            res = vertex_bdl(cx, _vertex(args), args.field)
        except (ValueError, IndexError) as exc:
            raise InputError(str(exc)) from None
        lines = [f"f = x{res.k}", f"B = {res.B}", f"A = {res.A}"]
        lines.extend(res.verdict.lines())
        lines.append(f"vertex construction: {'accepted' if res.accepted else 'refused'} ({res.reason})")
        payload = {
            "k": res.k,
            "B": res.B.strings(),
            "A": res.A.strings(),
            "accepted": res.accepted,
            "reason": res.reason,
            "verdict": res.verdict.to_dict(),
        }
        _emit(args, lines, payload)
        return _verdict(args, res.accepted)
    if act == "search-edge":
        g = load_graph(args)
        sym = args.symmetry
        if sym in (None, "none", "auto"):
            sym = None
        elif sym != "rotation":
            raise InputError("search-edge --symmetry must be rotation or none")
        if sym == "rotation" and not g.circulant_data:
            raise InputError("--symmetry rotation needs a circulant graph")
        res = search_edge_bdl(g, args.field, symmetry=sym, jobs=jobs)
        _emit(args, res.lines(), {"refuted": res.refuted, "counts": res.counts, "candidates": res.candidates})
        _save_certificate(args, res.certificate)
        return _verdict(args, res.refuted)
    if act in ("refute-deg1", "refute-deg2"):
        C = load_cubic_ideal(args.input)
        try:
            if act == "refute-deg1":
                res = refute_deg1(C, args.field, mode=args.mode, jobs=jobs)
            else:
                use = args.symmetry not in ("none",)
                res = refute_deg2(C, args.field, mode=args.mode, symmetry=use, jobs=jobs)
        except ValueError as exc:
            raise InputError(str(exc)) from None
        _emit(args, res.lines(), {"refuted": res.refuted, "counts": res.counts, "open": res.candidates})
        _save_certificate(args, res.certificate)
        return _verdict(args, res.refuted)
    if act == "recheck":
        try:
            cert = _wrap(args.input, RefutationCertificate.from_dict)
            rep = replay(cert, jobs)
        except KeyError as exc:
            raise InputError(f"{args.input}: malformed certificate ({exc})") from None
        lines = [str(rep)] + [f"  {m}" for m in rep.mismatches]
        if rep.ok:
            lines.append(f"claim: {cert.claim}")
            lines.append(f"refuted: {_tf(cert.refuted)}")
        _emit(args, lines, {"ok": rep.ok, "checked": rep.checked, "mismatches": rep.mismatches})
        return OK if rep.ok else NEGATIVE
    raise InputError(f"unknown bdl action {act!r}")


# biliaison -----------------------------------------------------------------


def cmd_biliaison(args):
    w = _wrap(args.input, BiliaisonWitness.from_dict)
    v = verify_biliaison(w, args.field)
    lines = v.lines()
    payload = v.to_dict()
    if args.linked and v.valid:
        linked = check_linked(w, args.field)
        payload["linked"] = {}
        for name, verdict in linked.items():
            lines.append(f"{name}: {verdict.overall}")
            payload["linked"][name] = verdict.to_dict()
    _emit(args, lines, payload)
    return _verdict(args, v.valid)


# repro ---------------------------------------------------------------------


def cmd_repro(args):
    if args.target == "list":
        print("\n".join(repro.TARGETS))
        return OK
    targets = list(repro.TARGETS) if args.target == "all" else [args.target]
    if any(t not in repro.TARGETS for t in targets):
        raise InputError(f"unknown repro target {args.target!r}; known: {', '.join(repro.TARGETS)}, all")
    reports = [repro.run(t, args.jobs) for t in targets]
    if args.json:
        print(json.dumps([r.to_dict() for r in reports], indent=1))
    else:
        for r in reports:
            print("\n".join(r.lines()))
    if args.certificate and len(reports) == 1:
        certs = {k: c.to_dict() for k, c in reports[0].certificates.items()}
        with open(args.certificate, "w") as fh:
            json.dump(certs, fh, indent=1)
            fh.write("\n")
    return OK if all(r.ok for r in reports) else NEGATIVE


# parser --------------------------------------------------------------------


def _common(p):
    p.add_argument("--field", default="Q", help="coefficient field: Q or GF2 (default Q)")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument("--assert", dest="assert_", action="store_true", help="exit 2 on a negative verdict")
    p.add_argument("--jobs", type=int, default=None, help="worker processes (default: all cores)")


def build_parser():
    parser = _Parser(prog="srlink", description="Stanley-Reisner theory and basic double G-links.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("complex", help="simplicial complex operations and verdicts")
    p.add_argument("action", choices=["info", "link", "deletion", "cone", "cm", "vd", "wvd"])
    p.add_argument("input", help="complex JSON file or bundled name")
    p.add_argument("-k", "--vertex", type=int, help="vertex for link, deletion and cone")
    p.add_argument("--trace", action="store_true", help="print the decomposition trace")
    _common(p)
    p.set_defaults(run=cmd_complex)

    p = sub.add_parser("bdl", help="basic double G-link verification, search and refutation")
    p.add_argument("action", choices=["verify", "vertex", "search-edge", "refute-deg1", "refute-deg2", "recheck"])
    p.add_argument("input", nargs="?", help="witness, complex, ideal, graph or certificate file")
    p.add_argument("-k", "--vertex", type=int, help="vertex for the vertex construction")
    p.add_argument("--circulant", nargs=2, metavar=("N", "S"), help="circulant graph C_N(S), S comma separated")
    p.add_argument("--symmetry", default=None, help="rotation|none for search-edge, auto|none for refute-deg2")
    p.add_argument("--mode", choices=MODES, default=GENERAL, help="shape of A in the refutations")
    p.add_argument("--certificate", help="write the replayable certificate here")
    _common(p)
    p.set_defaults(run=cmd_bdl)

    p = sub.add_parser("biliaison", help="verify an elementary G-biliaison given by (a, x)")
    p.add_argument("input", help="biliaison witness JSON")
    p.add_argument("--linked", action="store_true", help="also verify the basic double G-links through L")
    _common(p)
    p.set_defaults(run=cmd_biliaison)

    p = sub.add_parser("repro", help="reproduce a computer check against its expected values")
    p.add_argument("target", help="target name, 'all' or 'list'")
    p.add_argument("--certificate", help="write the target's certificates here")
    _common(p)
    p.set_defaults(run=cmd_repro)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if getattr(args, "input", None) is None and args.command == "bdl" and args.action != "search-edge":
            raise InputError(f"bdl {args.action} needs an input file")
        if args.jobs is not None and args.jobs < 1:
            raise InputError("--jobs must be at least 1")
        try:
            resolve_field(args.field)
        except ValueError as exc:
            raise InputError(str(exc)) from None
        return args.run(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
