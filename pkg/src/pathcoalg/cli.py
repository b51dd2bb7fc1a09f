"""Command-line front end.

Exit codes: 0 success, 1 usage, 2 parse error, 3 unsupported
representation, 4 internal cross-check failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path as FsPath

from . import checks, fixtures
from .coalg import (CrossCheckFailure, FiniteDim, NotASubcoalgebra, Subcoalgebra, closure, coradical,
                    is_coidempotent, wedge, wedge_dual_oracle)
from .document import Document, DocumentError, format_element, parse_document
from .prime import PrimeVerdict, brute_force_prime, enumerate_subcoalgebras, is_prime
from .quiver import InfiniteCondensation, QuiverError
from .reduce import local_prime_profile, reduce_subcoalgebra
from .scalars import PrimeField, parse_field

OK, USAGE, PARSE, UNSUPPORTED, CROSSCHECK = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


class Unsupported(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(USAGE, f"{self.prog}: error: {message}\n")


# reports


class Report:
    """Ordered key/value report rendered as text or JSON."""

    def __init__(self, title: str):
        self.title = title
        self.data: dict = {}
        self.exit_code = OK

    def __setitem__(self, key, value):
        self.data[key] = value

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return json.dumps({"report": self.title, **self.data}, indent=2, ensure_ascii=False)
        lines = [self.title]
        for k, v in self.data.items():
            lines.extend(_text_lines(k, v, 1))
        return "\n".join(lines)


def _text_lines(key, value, depth):
    pad = "  " * depth
    if isinstance(value, dict):
        out = [f"{pad}{key}:"]
        for k, v in value.items():
            out.extend(_text_lines(k, v, depth + 1))
        return out
    if isinstance(value, list) and value and isinstance(value[0], (dict, list)):
        out = [f"{pad}{key}:"]
        for i, v in enumerate(value):
            out.extend(_text_lines(f"[{i}]", v, depth + 1))
        return out
    if isinstance(value, list):
        return [f"{pad}{key}: " + (", ".join(map(str, value)) if value else "(none)")]
    if isinstance(value, bool):
        value = "yes" if value else "no"
    return [f"{pad}{key}: {value}"]


def _elements(D: FiniteDim) -> list[str]:
    return [format_element(r, D.quiver, D.field) for r in D.rows]


def _quiver_dict(G) -> dict:
    return {"vertices": list(G.vertices), "arrows": [f"{a.name}: {a.source} -> {a.tail}" for a in G.arrows]}


def _describe_rep(D: Subcoalgebra, bound: int) -> dict:
    out = {"representation": D.describe()}
    if D.finite:
        F = D.to_finite()
        out["dim"] = F.dim
        out["basis"] = _elements(F)
    else:
        out["dim"] = "infinite"
        out["paths up to bound"] = [str(p) for p in D.paths(bound)]
    return out


def _plain(val):
    if isinstance(val, (int, str)):
        return val
    return ["{" + ", ".join(x) + "}" if isinstance(x, (list, tuple)) else str(x) for x in val]


def _verdict_dict(v: PrimeVerdict) -> dict:
    out = {"verdict": v.status.value, "reason": v.reason}
    if v.criterion:
        out["theorem"] = v.criterion
    cert = {k: val for k, val in v.certificate.items()}
    if cert:
        out["certificate"] = {k: _plain(val) for k, val in cert.items()}
    if v.witness is not None:
        out["witness"] = {name: _describe_rep(X, 0) for name, X in zip("AB", v.witness)}
    return out


# commands


def _load(args) -> Document:
    field = args.field
    if args.file is None:
        raise UsageError("an input file is required")
    try:
        if args.file.startswith("corpus:"):
            return fixtures.load(args.file[len("corpus:"):], field)
        text = FsPath(args.file).read_text(encoding="utf-8")
    except (OSError, KeyError) as e:
        raise UsageError(f"cannot read {args.file}: {e}") from e
    return parse_document(text, field)


def _pick(doc: Document, name: str | None) -> tuple[str, Subcoalgebra]:
    try:
        D = doc.get(name)
    except KeyError as e:
        raise UsageError(e.args[0]) from e
    if name is None:
        name = list(doc.subcoalgebras)[-1]
    return name, D


def cmd_info(args) -> Report:
    doc = _load(args)
    name, D = _pick(doc, args.name)
    rep = Report(f"info {name}")
    for k, v in _describe_rep(D, args.bound).items():
        rep[k] = v
    ps = D.paths(None if D.finite else args.bound)
    rep["|P(D)|" if D.finite else "|P(D)| up to bound"] = len(ps)
    if D.finite:
        rep["P(D)"] = [str(p) for p in ps]
    rep["V(D)"] = D.vertices()
    rep["E(D)"] = D.arrows()
    rep["G(D)"] = _quiver_dict(D.associated_quiver())
    rep["coradical"] = _elements(coradical(D))
    return rep


def cmd_closure(args) -> Report:
    doc = _load(args)
    names = args.elements or list(doc.elements)
    gens = []
    for n in names:
        if n not in doc.elements:
            raise UsageError(f"no element named {n!r}")
        gens.append(doc.elements[n])
    D = closure(gens, doc.quiver, doc.field)
    rep = Report(f"closure of {', '.join(names)}")
    rep["dim"] = D.dim
    rep["basis"] = _elements(D)
    rep["|P(D)|"] = len(D.paths())
    return rep


def _finite(D: Subcoalgebra, what: str) -> FiniteDim:
    if not D.finite:
        raise Unsupported(f"{what} is infinite-dimensional; wedges need finite-dimensional inputs")
    return D.to_finite()


def cmd_wedge(args) -> Report:
    doc = _load(args)
    _, A = _pick(doc, args.A)
    _, B = _pick(doc, args.B)
    A, B = _finite(A, args.A), _finite(B, args.B)
    W = wedge(A, B, reverse=args.reverse, truncation=args.truncation)
    agrees = wedge_dual_oracle(A, B, reverse=args.reverse, truncation=args.truncation) == W
    rep = Report(f"wedge {args.B} ^ {args.A}" if args.reverse else f"wedge {args.A} ^ {args.B}")
    rep["dim"] = W.dim
    rep["basis"] = _elements(W)
    rep["V"] = W.vertices()
    rep["E"] = W.arrows()
    rep["dual oracle agrees"] = agrees
    if not agrees:
        rep.exit_code = CROSSCHECK
    return rep


def cmd_prime(args) -> Report:
    doc = _load(args)
    name, D = _pick(doc, args.name)
    v = is_prime(D)
    rep = Report(f"prime {name}")
    for k, val in _verdict_dict(v).items():
        rep[k] = val
    if args.brute:
        if not D.finite or not isinstance(doc.field, PrimeField) or doc.field.p != 2:
            raise Unsupported("the brute-force cross-check needs a finite representation over f2")
        F = D.to_finite()
        try:
            b = brute_force_prime(F, F)
        except ValueError as e:
            raise Unsupported(str(e)) from e
        rep["brute force"] = b.status.value
        if b.status != v.status:
            rep.exit_code = CROSSCHECK
    if v.unsupported:
        rep.exit_code = UNSUPPORTED
    return rep


def cmd_coidempotent(args) -> Report:
    doc = _load(args)
    name, D = _pick(doc, args.name)
    d = is_coidempotent(D)
    rep = Report(f"coidempotent {name}")
    rep["coidempotent"] = bool(d)
    rep["reason"] = d.reason
    if d.witness is not None:
        w = d.witness
        rep["witness"] = format_element(w, D.quiver, D.field) if hasattr(w, "items") else str(w)
    return rep


def cmd_reduce(args) -> Report:
    doc = _load(args)
    name, D = _pick(doc, args.name)
    if args.set:
        S = [s.strip() for s in args.set.split(",") if s.strip()]
        red = reduce_subcoalgebra(D, S)
        rep = Report(f"reduce {name} over {{{', '.join(S)}}}")
        rep["condensed quiver"] = _quiver_dict(red.condensed.quiver)
        if red.zero:
            rep["reduction"] = "zero"
            return rep
        rep["reduction"] = _describe_rep(red.rep, args.bound)
        if red.rep.finite:
            rep["in the original quiver"] = [format_element(r, D.quiver, D.field)
                                             for r in red.ambient_space().rows]
        rep["prime"] = _verdict_dict(is_prime(red.rep))
        return rep
    prof = local_prime_profile(D)
    rep = Report(f"local prime profile of {name}")
    rep["entries"] = [e.to_dict() for e in prof.entries]
    rep["aggregate"] = prof.aggregate.value
    rep["global"] = is_prime(D).status.value
    return rep


def cmd_enumerate(args) -> Report:
    doc = _load(args)
    name, D = _pick(doc, args.name)
    if not isinstance(doc.field, PrimeField):
        raise UsageError("enumeration needs a finite field, e.g. --field f2")
    F = _finite(D, name)
    subs = enumerate_subcoalgebras(F)
    rep = Report(f"subcoalgebras of {name} over {doc.field!r}")
    rep["count"] = len(subs)
    items = []
    for X in subs:
        entry = {"dim": X.dim, "basis": _elements(X)}
        if X.dim and doc.field.p == 2 and X.dim <= 5 and F.dim <= 12:
            v = brute_force_prime(X, F, subs)
            entry["prime"] = v.status.value
            if v.status != is_prime(X).status:
                rep.exit_code = CROSSCHECK
        items.append(entry)
    rep["subcoalgebras"] = items
    return rep


def cmd_check(args) -> Report:
    corpus = []
    problems = []
    if args.file is None:
        docs = [(n, fixtures.text(n)) for n in fixtures.names()]
    else:
        root = FsPath(args.file)
        files = sorted(root.glob("*.pc")) if root.is_dir() else [root]
        if not files:
            raise UsageError(f"no .pc files in {root}")
        docs = [(f.name, f.read_text(encoding="utf-8")) for f in files]
    for fname, text in docs:
        try:
            doc = parse_document(text, args.field)
        except (DocumentError, NotASubcoalgebra, QuiverError) as e:
            problems.append(f"{fname}: {e}")
            continue
        corpus.extend(doc.subcoalgebras.values())
    results = checks.run_all(corpus, seed=args.seed, only=args.suite or None)
    rep = Report("check")
    rep["files"] = len(docs)
    rep["instances"] = len(corpus)
    rep["suites"] = [{"name": r.name, "cases": r.cases, "failures": len(r.failures), "ok": r.ok}
                     for r in results]
    fails = [f for r in results for f in r.failures]
    if problems:
        rep["parse errors"] = problems
    if fails:
        rep["failures"] = fails[:50]
    rep["ok"] = not fails and not problems
    if problems:
        rep.exit_code = PARSE
    if fails:
        rep.exit_code = CROSSCHECK
    return rep


COMMANDS = {
    "info": cmd_info,
    "closure": cmd_closure,
    "wedge": cmd_wedge,
    "prime": cmd_prime,
    "coidempotent": cmd_coidempotent,
    "reduce": cmd_reduce,
    "enumerate": cmd_enumerate,
    "check": cmd_check,
}


def _field(text):
    try:
        return parse_field(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e)) from e


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--field", type=_field, default=parse_field("q"),
                        help="scalar field: q (rationals) or f<p> for a prime p")
    common.add_argument("--bound", type=int, default=6, help="length bound for listing infinite P(D)")
    common.add_argument("--truncation", type=int, default=None, help="override the wedge truncation")
    common.add_argument("--format", choices=["text", "json"], default="text")
    common.add_argument("--seed", type=int, default=0, help="seed for the property suites")

    p = _Parser(prog="pathcoalg", description="Exact computations with subcoalgebras of path coalgebras.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    sp = sub.add_parser("info", parents=[common], help="dimensions, P(D), V(D), E(D), G(D), coradical")
    sp.add_argument("file")
    sp.add_argument("name", nargs="?")
    sp = sub.add_parser("closure", parents=[common], help="subcoalgebra generated by named elements")
    sp.add_argument("file")
    sp.add_argument("elements", nargs="*")
    sp = sub.add_parser("wedge", parents=[common], help="wedge of two subcoalgebras")
    sp.add_argument("file")
    sp.add_argument("A")
    sp.add_argument("B")
    sp.add_argument("--reverse", action="store_true", help="compute B ^ A instead")
    sp = sub.add_parser("prime", parents=[common], help="primeness verdict")
    sp.add_argument("file")
    sp.add_argument("name", nargs="?")
    sp.add_argument("--brute", action="store_true", help="cross-check by exhaustive search (f2)")
    sp = sub.add_parser("coidempotent", parents=[common], help="decide D ^ D = D")
    sp.add_argument("file")
    sp.add_argument("name", nargs="?")
    sp = sub.add_parser("reduce", parents=[common], help="reduce by a vertex idempotent, or the local profile")
    sp.add_argument("file")
    sp.add_argument("name", nargs="?")
    sp.add_argument("--set", help="comma-separated vertex set; omit for the profile over vertex pairs")
    sp = sub.add_parser("enumerate", parents=[common], help="all subcoalgebras over a small prime field")
    sp.add_argument("file")
    sp.add_argument("name", nargs="?")
    sp = sub.add_parser("check", parents=[common], help="run the property suites over a corpus")
    sp.add_argument("file", nargs="?", help="a .pc file or a directory of them (default: shipped corpus)")
    sp.add_argument("--suite", action="append", choices=list(checks.SUITES))
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        rep = COMMANDS[args.command](args)
    except UsageError as e:
        print(f"pathcoalg: {e}", file=sys.stderr)
        return USAGE
    except DocumentError as e:
        print(f"pathcoalg: {args.file}: {e}", file=sys.stderr)
        return PARSE
    except (Unsupported, InfiniteCondensation) as e:
        print(f"pathcoalg: unsupported: {e}", file=sys.stderr)
        return UNSUPPORTED
    except CrossCheckFailure as e:
        print(f"pathcoalg: cross-check failed: {e}", file=sys.stderr)
        return CROSSCHECK
    except (ValueError, QuiverError) as e:
        print(f"pathcoalg: {e}", file=sys.stderr)
        return USAGE
    print(rep.render(args.format))
    return rep.exit_code


if __name__ == "__main__":
    sys.exit(main())
