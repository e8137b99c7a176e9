"""Command-line front end and the JSON certificate format.

A certificate document looks like::

    {"schema_version": "splitkit/1", "group": [6], "kind": "complete",
     "K": [], "M": [1, 2], "S": [[1], [3], [5]], "provenance": "..."}

Elements are always coordinate arrays, even in rank 1.  A certificate whose
ambient is a subgroup carries an extra ``"subgroup"`` list of generators.

Exit codes: 0 success or valid, 1 a well-formed run with a negative answer,
2 usage, I/O or schema errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional, Sequence

from .arith import mul_order
from .construct import construct_pq, nonexistence_criterion
from .errors import (
    InapplicableError,
    ObstructionError,
    PreconditionError,
    SearchInconclusive,
    ValidationError,
)
from .group import Group, Subgroup, make_group, subgroup_closure
from .search import SearchConfig, enumerate_complete_splittings, split_exists
from .splitting import (
    Certificate,
    analyze_structure,
    derive_partial_from_splitting,
    induce_subgroup,
    verify,
)

SCHEMA = "splitkit/1"
EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE = 0, 1, 2


class DocumentError(ValueError):
    """A certificate document that cannot be read or does not fit the schema."""


# --- serialization -----------------------------------------------------------


def _generators(H: Subgroup) -> list:
    if H.generators:
        return [list(g) for g in H.generators]
    gens: list = []
    span = {H.zero}
    for e in H.elements():
        if e not in span:
            gens.append(e)
            span = subgroup_closure(gens, H.parent).elements_set
    return [list(g) for g in gens]


def certificate_to_doc(cert: Certificate, provenance: str = "") -> dict:
    G = cert.group
    doc = {
        "schema_version": SCHEMA,
        "group": list(G.group.invariant_factors),
        "kind": cert.kind,
        "K": [list(k) for k in sorted(cert.K)],
        "M": list(cert.M),
        "S": [list(s) for s in cert.S],
        "provenance": provenance,
    }
    if isinstance(G, Subgroup):
        doc["subgroup"] = _generators(G)
    return doc


def doc_to_certificate(doc) -> Certificate:
    if not isinstance(doc, dict):
        raise DocumentError("certificate document must be a JSON object")
    if doc.get("schema_version") != SCHEMA:
        raise DocumentError(f"schema_version must be {SCHEMA!r}, got {doc.get('schema_version')!r}")
    for key in ("group", "kind", "M", "S"):
        if key not in doc:
            raise DocumentError(f"missing field {key!r}")
    try:
        G = make_group(doc["group"])
        ambient = G
        if doc.get("subgroup") is not None:
            ambient = subgroup_closure([tuple(g) for g in doc["subgroup"]], G)
        return Certificate(
            ambient,
            tuple(doc["M"]),
            tuple(tuple(s) for s in doc["S"]),
            doc["kind"],
            None if doc.get("K") is None else [tuple(k) for k in doc["K"]],
        )
    except (TypeError, ValidationError) as exc:
        raise DocumentError(f"invalid certificate: {exc}") from exc


def dumps(doc) -> str:
    return json.dumps(doc, sort_keys=True) + "\n"


def load_document(path: str) -> dict:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise DocumentError(f"cannot read {path}: {exc.strerror}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(
            f"{path}: malformed JSON at line {exc.lineno} column {exc.colno} "
            f"(char {exc.pos}): {exc.msg}"
        ) from exc


def load_certificate(path: str) -> Certificate:
    return doc_to_certificate(load_document(path))


# --- argument parsing --------------------------------------------------------


def _ints(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise ValidationError(f"expected a comma list of integers, got {text!r}") from None


def parse_group(text: str) -> Group:
    return make_group(_ints(text))


def parse_elements(text: Optional[str], G: Group) -> list:
    """``"0;3"`` is two rank-1 elements, ``"0,1;1,1"`` two rank-2 elements."""
    if not text:
        return []
    return [G.element(_ints(part)) for part in text.split(";") if part.strip()]


def _kind_for(K, G: Group) -> str:
    if not K:
        return "complete"
    if set(K) == {G.zero}:
        return "splitting"
    return "packing" if G.zero in K else "partial"


# --- output ------------------------------------------------------------------


def _emit(cert: Certificate, provenance: str, args, lenient_K: bool = False) -> dict:
    """Verify, then write the document to --out and/or stdout under --json."""
    rep = verify(cert, lenient_K=lenient_K)
    if not rep.valid:
        # never persist something we could not verify
        raise PreconditionError(f"refusing to write an unverified certificate: {rep.summary()}")
    doc = certificate_to_doc(cert, provenance)
    if getattr(args, "out", None):
        Path(args.out).write_text(dumps(doc))
        if not args.json:
            print(f"wrote {args.out}")
    if args.json:
        sys.stdout.write(dumps(doc))
    return doc


def _describe(cert: Certificate) -> str:
    S = " ".join(str(list(s)) for s in cert.S)
    return f"{cert.kind} over {cert.group}: M={list(cert.M)} S={S}"


def _say(args, text: str) -> None:
    if not args.json:
        print(text)


# --- subcommands -------------------------------------------------------------


def cmd_verify(args) -> int:
    cert = load_certificate(args.path)
    rep = verify(cert, lenient_K=args.lenient_K)
    out = {"valid": rep.valid, "covered": rep.covered,
           "collisions": [[list(g), [m1, list(s1)], [m2, list(s2)]]
                          for g, (m1, s1), (m2, s2) in rep.collisions],
           "missed": [list(g) for g in rep.missed],
           "forbidden_hits": [list(g) for g in rep.forbidden_hits]}
    structure = None
    if rep.valid and cert.kind == "complete" and isinstance(cert.group, Group):
        structure = analyze_structure(cert)
        out["structure"] = {"m0": structure.m0, "g0": list(structure.g0), **structure.checks}
    if args.json:
        sys.stdout.write(dumps(out))
    else:
        print(rep.summary())
        for g, a, b in rep.collisions[:20]:
            print(f"  collision at {list(g)}: {a[0]}*{list(a[1])} = {b[0]}*{list(b[1])}")
        for g in rep.missed[:20]:
            print(f"  missed {list(g)}")
        for g in rep.forbidden_hits[:20]:
            print(f"  forbidden hit {list(g)}")
        if structure is not None:
            print(f"structure: m0={structure.m0} g0={list(structure.g0)} ord(g0)={structure.order_g0}")
            for name, ok in structure.checks.items():
                print(f"  {name}: {ok}")
    return EXIT_OK if rep.valid else EXIT_NEGATIVE


def _config(args, **extra) -> SearchConfig:
    return SearchConfig(time_budget=args.budget, ceiling=args.ceiling, **extra)


def cmd_search(args) -> int:
    G = parse_group(args.group)
    if args.all:
        if args.M:
            raise ValidationError("--all and --M are mutually exclusive")
        certs = list(enumerate_complete_splittings(G, _config(args, max_solutions=args.max)))
        docs = [certificate_to_doc(c, f"search --all group={args.group}") for c in certs]
        for c in certs:
            _say(args, _describe(c))
        _say(args, f"{len(certs)} complete splitting(s) of {G}")
        if args.out:
            Path(args.out).write_text(dumps(docs))
        if args.json:
            sys.stdout.write(dumps(docs))
        return EXIT_OK
    if not args.M:
        raise ValidationError("give --M or --all")
    M = _ints(args.M)
    K = parse_elements(args.K, G)
    S = split_exists(M, G, K, _config(args))
    if S is None:
        _say(args, "none")
        if args.json:
            sys.stdout.write(dumps({"result": "none"}))
        return EXIT_NEGATIVE
    cert = Certificate(G, M, S, _kind_for(K, G), K)
    _say(args, _describe(cert))
    _emit(cert, f"search group={args.group} M={args.M}", args)
    return EXIT_OK


def cmd_construct_pq(args) -> int:
    pin = None
    if (args.pin_x is None) != (args.pin_g is None):
        raise ValidationError("--pin-x and --pin-g must be given together")
    if args.pin_x is not None:
        pin = (args.pin_x, args.pin_g)
    split = tuple(_ints(args.pin_split)) if args.pin_split else None
    if split is not None and len(split) != 2:
        raise ValidationError("--pin-split takes two integers d',d''")
    cert, plan = construct_pq(args.p, args.q, pin, split, args.case)
    dec = plan.decomp
    _say(args, f"x={dec.x} g={dec.g} d={dec.d} d1={dec.d1} d2={dec.d2} "
               f"d'={plan.d_prime} d''={plan.d_dprime} case={plan.case_tag}")
    _say(args, f"|M|={len(cert.M)} |S|={len(cert.S)} verified")
    _emit(cert, f"construct-pq p={args.p} q={args.q} x={dec.x} g={dec.g} "
                f"split={plan.d_prime},{plan.d_dprime} case={plan.case_tag}", args)
    return EXIT_OK


def cmd_induce(args) -> int:
    cert = load_certificate(args.cert)
    G = cert.group
    if not isinstance(G, Group):
        raise ValidationError("induce needs a certificate over a full group")
    H = subgroup_closure(parse_elements(args.subgroup, G), G)
    T = parse_elements(args.witness, G) if args.witness else None
    out = induce_subgroup(cert, H, T, _config(args))
    _say(args, f"|H|={H.order} |S∩H|={len(out.S)}")
    _say(args, _describe(out))
    _emit(out, f"induce from {args.cert} subgroup={args.subgroup}", args)
    return EXIT_OK


def cmd_nonexist(args) -> int:
    verdict = nonexistence_criterion(_ints(args.M), args.n)
    if args.json:
        sys.stdout.write(dumps({"applies": verdict.applies, "k": verdict.k,
                                "lcm": verdict.lcm_value, "clause": verdict.witness,
                                "multipliers": list(verdict.multipliers)}))
    else:
        print(verdict.message(args.n))
    return EXIT_OK if verdict.applies else EXIT_NEGATIVE


def cmd_partial(args) -> int:
    cert = load_certificate(args.cert)
    out = derive_partial_from_splitting(cert, args.p)
    _say(args, _describe(out))
    _emit(out, f"partial from {args.cert} p={args.p}", args)
    return EXIT_OK


EXAMPLE_P, EXAMPLE_Q, EXAMPLE_X, EXAMPLE_G = 31, 43, 6, 45


def example_orders() -> list[tuple[str, int]]:
    n = EXAMPLE_P * EXAMPLE_Q
    return [
        (f"ord_{n}({EXAMPLE_X})", mul_order(EXAMPLE_X, n)),
        (f"ord_{n}({EXAMPLE_G})", mul_order(EXAMPLE_G, n)),
        (f"ord_{EXAMPLE_P}({EXAMPLE_G})", mul_order(EXAMPLE_G, EXAMPLE_P)),
        (f"ord_{EXAMPLE_Q}({EXAMPLE_G})", mul_order(EXAMPLE_G, EXAMPLE_Q)),
        (f"ord_{EXAMPLE_Q}({EXAMPLE_X})", mul_order(EXAMPLE_X, EXAMPLE_Q)),
    ]


def cmd_example(args) -> int:
    cert, plan = construct_pq(EXAMPLE_P, EXAMPLE_Q, (EXAMPLE_X, EXAMPLE_G), (2, 3))
    if not args.json:
        for label, value in example_orders():
            print(f"{label} = {value}")
        print(f"case={plan.case_tag} |M|={len(cert.M)} |S|={len(cert.S)} "
              f"verify: {verify(cert).summary()}")
    _emit(cert, f"construct-pq p={EXAMPLE_P} q={EXAMPLE_Q} x={EXAMPLE_X} g={EXAMPLE_G}", args)
    return EXIT_OK


# --- argument parsing --------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output on stdout")
    writer = argparse.ArgumentParser(add_help=False)
    writer.add_argument("--out", help="write the certificate document here")
    searcher = argparse.ArgumentParser(add_help=False)
    searcher.add_argument("--budget", type=float, default=None, help="search time budget in seconds")
    searcher.add_argument("--ceiling", type=int, default=64, help="largest |G| to enumerate")

    parser = argparse.ArgumentParser(
        prog="splitkit", description="Complete splittings of finite abelian groups."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", parents=[common], help="check a certificate file")
    p.add_argument("path")
    p.add_argument("--lenient-K", dest="lenient_K", action="store_true",
                   help="ignore representations landing in K")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", parents=[common, writer, searcher], help="find S for a given M")
    p.add_argument("--group", required=True, help="invariant factors, e.g. 12 or 2,4")
    p.add_argument("--M", help="comma list of multipliers")
    p.add_argument("--K", help="excluded elements, ';'-separated, coordinates ','-separated")
    p.add_argument("--all", action="store_true", help="enumerate every complete splitting")
    p.add_argument("--max", type=int, default=None, help="stop after this many certificates")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("construct-pq", parents=[common, writer], help="build a splitting of Z_pq")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--pin-x", dest="pin_x", type=int)
    p.add_argument("--pin-g", dest="pin_g", type=int)
    p.add_argument("--pin-split", dest="pin_split", help="d',d''")
    p.add_argument("--case", default=None, help="force one construction case")
    p.set_defaults(func=cmd_construct_pq)

    p = sub.add_parser("induce", parents=[common, writer, searcher],
                       help="restrict a complete splitting to a subgroup")
    p.add_argument("--cert", required=True)
    p.add_argument("--subgroup", required=True, help="generators, ';'-separated")
    p.add_argument("--witness", help="splitting set of the quotient, ';'-separated")
    p.set_defaults(func=cmd_induce)

    p = sub.add_parser("nonexist", parents=[common], help="run the nonexistence criterion")
    p.add_argument("--M", required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_nonexist)

    p = sub.add_parser("partial", parents=[common, writer],
                       help="derive a partial splitting from a splitting of Z_n")
    p.add_argument("--cert", required=True)
    p.add_argument("--p", type=int, required=True)
    p.set_defaults(func=cmd_partial)

    p = sub.add_parser("example", parents=[common, writer], help="the Z_1333 worked example")
    p.set_defaults(func=cmd_example)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return args.func(args)
    except (InapplicableError, ObstructionError, PreconditionError) as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_NEGATIVE
    except SearchInconclusive as exc:
        print(f"inconclusive: {exc}", file=sys.stderr)
        return EXIT_NEGATIVE
    except (DocumentError, ValidationError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
