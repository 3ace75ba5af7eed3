"""Command line front end.

One executable, ``ps``, with verb subcommands.  Exit codes are part of the
interface: 0 success (stable / certified / member / computed), 1 a
successful negative finding (unstable, non-member, obstruction found, no
certificate), 2 usage or input errors, 3 budget exhausted.  Output is
deterministic for identical argv: fixed templates in text mode, fixed key
order in json mode.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from .corpus import REGISTRY, corpus
from .errors import AlgebraError, BudgetExceededError, ParseError
from .groebner import Budget, groebner_basis
from .ideals import Ideal, RingMap
from .orders import parse_order
from .polynomials import Polynomial, format_poly, parse_poly
from .rings import RingSpec
from .stability import (
    certify_stable,
    check_power_stable,
    contract_power,
    graded_criterion,
    primary_obstruction,
)


@dataclass(frozen=True)
class OutputDocument:
    format: str
    body: str


def _texts(polys) -> list[str]:
    return [format_poly(p) for p in polys]


def _paren(texts: Sequence[str]) -> str:
    return "(" + ", ".join(texts) + ")" if texts else "(0)"


def _split_items(blob: str) -> list[str]:
    out = []
    for chunk in blob.replace("\n", ",").split(","):
        chunk = chunk.strip()
        if chunk:
            out.append(chunk)
    return out


def _budget(args) -> Budget:
    return Budget(max_pairs=args.max_pairs, max_degree=args.max_degree)


def _load_ideal(args, ring: RingSpec) -> Ideal:
    if args.gens is not None:
        blob = sys.stdin.read() if args.gens == "-" else args.gens
    elif args.gens_file is not None:
        blob = Path(args.gens_file).read_text()
    else:
        raise ParseError("no generators given: use --gens, --gens -, or --gens-file")
    texts = _split_items(blob)
    if not texts:
        raise ParseError("empty generator list")
    return Ideal(ring, [parse_poly(t, ring) for t in texts])


def _witness_text(w) -> str | None:
    if w is None:
        return None
    return format_poly(w) if isinstance(w, Polynomial) else str(w)


def _certificate_doc(cert) -> dict:
    if cert.kind == "monic":
        return {
            "kind": "monic",
            "monic": format_poly(cert.monic),
            "base_gens": _texts(cert.base_gens),
        }
    if cert.kind == "regular_image":
        return {
            "kind": "regular_image",
            "modulus": cert.modulus,
            "image": format_poly(cert.image),
            "lcm": cert.lcm_value,
        }
    return {
        "kind": cert.kind,
        "t": cert.t,
        "witness": format_poly(cert.witness),
        "cofactor": format_poly(cert.cofactor),
    }


def _certificate_text(cert) -> str:
    if cert.kind == "monic":
        base = _paren(_texts(cert.base_gens))
        return f"certificate: monic; f = {format_poly(cert.monic)}; base ideal {base}"
    if cert.kind == "regular_image":
        return (
            f"certificate: regular_image; modulus {cert.modulus}; "
            f"image {format_poly(cert.image)}"
        )
    return (
        f"certificate: {cert.kind}; t = {cert.t}; "
        f"witness {format_poly(cert.witness)}; cofactor {format_poly(cert.cofactor)}"
    )


# -- verb handlers --------------------------------------------------------------


def _cmd_gb(args):
    ring = RingSpec.parse(args.ring)
    ideal = _load_ideal(args, ring)
    order = parse_order(args.order, ring)
    gb = groebner_basis(ideal.generators, order, _budget(args))
    doc = {
        "ring": ring.to_json(),
        "generators": _texts(ideal.generators),
        "order": args.order,
        "basis": _texts(gb.elements),
        "reduced": gb.reduced,
        "strong": gb.strong,
    }
    return 0, doc, [_paren(_texts(gb.elements))]


def _cmd_contract(args):
    ring = RingSpec.parse(args.ring)
    ideal = _load_ideal(args, ring)
    res = contract_power(ideal, args.power, _budget(args))
    doc = {
        "ring": ring.to_json(),
        "generators": _texts(ideal.generators),
        "power": args.power,
        "contraction": list(res.base.texts()),
    }
    return 0, doc, [_paren(res.base.texts())]


def _cmd_check_stable(args):
    ring = RingSpec.parse(args.ring)
    ideal = _load_ideal(args, ring)
    budget = _budget(args)
    report = check_power_stable(ideal, args.max_power, budget)
    cert = None
    if report.is_stable():
        cert = certify_stable(ideal, budget)
    records = [
        {
            "t": r.t,
            "contraction": list(r.contraction.texts()),
            "base_power": list(r.expected.texts()),
            "equal": r.equal,
        }
        for r in report.records
    ]
    doc = {
        "ring": ring.to_json(),
        "generators": _texts(ideal.generators),
        "bound": args.max_power,
        "verdict": {"kind": report.verdict.kind, "t": report.verdict.t},
        "records": records,
        "witness": _witness_text(report.witness),
        "certificate": None if cert is None else cert.kind,
        "certificates": [] if cert is None else [_certificate_doc(cert)],
    }
    lines = []
    if not report.is_stable():
        lines.append(f"unstable at t={report.verdict.t}")
        lines.append(f"witness: {_witness_text(report.witness)}")
    elif cert is not None:
        lines.append(f"certified stable (all t): {cert.kind} certificate")
        lines.append(_certificate_text(cert))
    else:
        lines.append(f"stable up to t={args.max_power} (not certified for all t)")
    for r in report.records:
        lines.append(
            f"t={r.t}: contraction {_paren(r.contraction.texts())}, "
            f"base power {_paren(r.expected.texts())}, equal {'yes' if r.equal else 'no'}"
        )
    return (0 if report.is_stable() else 1), doc, lines


def _cmd_criterion(args):
    ring = RingSpec.parse(args.ring)
    ideal = _load_ideal(args, ring)
    rep = graded_criterion(ideal, args.max_level, _budget(args))
    records = [
        {
            "n": r.n,
            "meet": list(r.meet.texts()),
            "target": list(r.target.texts()),
            "holds": r.holds,
        }
        for r in rep.records
    ]
    doc = {
        "ring": ring.to_json(),
        "generators": _texts(ideal.generators),
        "bound": args.max_level,
        "holds": rep.holds,
        "failure_n": rep.failure_n,
        "records": records,
        "witness": _witness_text(rep.witness),
    }
    lines = []
    if rep.holds:
        lines.append(f"criterion holds for all n <= {args.max_level}")
    else:
        lines.append(f"criterion fails at n={rep.failure_n}")
        lines.append(f"witness: {_witness_text(rep.witness)}")
    for r in rep.records:
        lines.append(
            f"n={r.n}: meet {_paren(r.meet.texts())}, "
            f"target {_paren(r.target.texts())}, holds {'yes' if r.holds else 'no'}"
        )
    return (0 if rep.holds else 1), doc, lines


def _cmd_eliminate(args):
    ring = RingSpec.parse(args.ring)
    ideal = _load_ideal(args, ring)
    names = tuple(_split_items(args.vars))
    out = ideal.eliminate(names, _budget(args))
    doc = {
        "ring": ring.to_json(),
        "generators": _texts(ideal.generators),
        "vars": list(names),
        "result": _texts(out.generators),
    }
    return 0, doc, [_paren(_texts(out.generators))]


def _cmd_quotient(args):
    ring = RingSpec.parse(args.ring)
    ideal = _load_ideal(args, ring)
    f = parse_poly(args.by, ring)
    out = ideal.quotient(f, _budget(args))
    doc = {
        "ring": ring.to_json(),
        "generators": _texts(ideal.generators),
        "by": format_poly(f),
        "result": _texts(out.generators),
    }
    return 0, doc, [_paren(_texts(out.generators))]


def _cmd_saturate(args):
    ring = RingSpec.parse(args.ring)
    ideal = _load_ideal(args, ring)
    f = parse_poly(args.by, ring)
    out = ideal.saturate(f, _budget(args))
    doc = {
        "ring": ring.to_json(),
        "generators": _texts(ideal.generators),
        "by": format_poly(f),
        "result": _texts(out.generators),
    }
    return 0, doc, [_paren(_texts(out.generators))]


def _cmd_member(args):
    ring = RingSpec.parse(args.ring)
    ideal = _load_ideal(args, ring)
    f = parse_poly(args.poly, ring)
    val = ideal.contains(f, _budget(args))
    doc = {
        "ring": ring.to_json(),
        "generators": _texts(ideal.generators),
        "poly": format_poly(f),
        "member": val,
    }
    return (0 if val else 1), doc, ["true" if val else "false"]


def _cmd_radical_member(args):
    ring = RingSpec.parse(args.ring)
    ideal = _load_ideal(args, ring)
    f = parse_poly(args.poly, ring)
    rm = ideal.radical_contains(f, _budget(args))
    doc = {
        "ring": ring.to_json(),
        "generators": _texts(ideal.generators),
        "poly": format_poly(f),
        "member": rm.value,
        "capped": rm.capped,
        "power": rm.power,
    }
    if rm.value:
        line = "true" if rm.power is None else f"true (power {rm.power})"
    elif rm.capped:
        line = "false (bounded search, no power up to k=12)"
    else:
        line = "false"
    return (0 if rm.value else 1), doc, [line]


def _cmd_kernel(args):
    source = RingSpec.parse(args.source)
    target = RingSpec.parse(args.target)
    images: dict[str, Polynomial] = {}
    for piece in _split_items(args.map):
        var, sep, expr = piece.partition("=")
        if not sep or not var.strip() or not expr.strip():
            raise ParseError(f"map entries look like VAR=POLY, got {piece!r}")
        images[var.strip()] = parse_poly(expr.strip(), target)
    ring_map = RingMap(source, target, images)
    out = ring_map.kernel(_budget(args))
    doc = {
        "source": source.to_json(),
        "target": target.to_json(),
        "map": {v: format_poly(images[v]) for v in source.variables},
        "kernel": _texts(out.generators),
    }
    return 0, doc, [_paren(_texts(out.generators))]


def _cmd_certify(args):
    ring = RingSpec.parse(args.ring)
    ideal = _load_ideal(args, ring)
    cert = certify_stable(ideal, _budget(args))
    doc = {
        "ring": ring.to_json(),
        "generators": _texts(ideal.generators),
        "certificate": None if cert is None else cert.kind,
        "certificates": [] if cert is None else [_certificate_doc(cert)],
    }
    if cert is None:
        return 1, doc, ["no certificate found (not a refutation)"]
    return 0, doc, [_certificate_text(cert), "stable for all t"]


def _cmd_obstruct(args):
    ring = RingSpec.parse(args.ring)
    ideal = _load_ideal(args, ring)
    wits = None
    if args.witnesses is not None:
        wits = [parse_poly(t, ring) for t in _split_items(args.witnesses)]
        if not wits:
            raise ParseError("empty witness list")
    cert = primary_obstruction(ideal, args.power, wits, _budget(args))
    doc = {
        "ring": ring.to_json(),
        "generators": _texts(ideal.generators),
        "power": args.power,
        "found": cert is not None,
        "witness": None if cert is None else format_poly(cert.witness),
        "cofactor": None if cert is None else format_poly(cert.cofactor),
    }
    if cert is None:
        return 0, doc, ["no obstruction found (not a primality proof)"]
    lines = [
        f"obstruction at t={args.power}: "
        f"witness {format_poly(cert.witness)}, cofactor {format_poly(cert.cofactor)}"
    ]
    return 1, doc, lines


def _ideal_doc(ideal: Ideal) -> dict:
    return {"ring": ideal.ring.to_json(), "generators": _texts(ideal.generators)}


def _cmd_corpus(args):
    if args.list:
        entries = [
            {"name": e.name, "params": e.params, "description": e.description}
            for e in REGISTRY
        ]
        lines = [f"{e.name}  [{e.params}]  {e.description}" for e in REGISTRY]
        return 0, {"entries": entries}, lines
    if not args.name:
        raise ParseError("corpus needs --list or --name")
    params: dict = {}
    if args.name in ("principal", "extension_JX", "comaximal_pair"):
        params["seed"] = args.seed
    elif args.name == "example_3_12":
        params["p"] = args.p
    elif args.name == "radical_zx":
        if not args.pairs:
            raise ParseError("radical_zx needs --pairs like \"2:X^2+X+1;3:X+1\"")
        pairs = []
        for piece in args.pairs.split(";"):
            p_str, sep, f_str = piece.partition(":")
            if not sep:
                raise ParseError(f"pair entries look like p:POLY, got {piece!r}")
            try:
                p = int(p_str.strip())
            except ValueError:
                raise ParseError(f"modulus {p_str.strip()!r} is not an integer") from None
            pairs.append((p, f_str.strip()))
        params["pairs"] = pairs
    result = corpus(args.name, params)
    if isinstance(result, Ideal):
        doc = {"name": args.name, **_ideal_doc(result)}
        lines = [str(result.ring), _paren(_texts(result.generators))]
        return 0, doc, lines
    if isinstance(result, RingMap):
        images = {v: format_poly(result.images[v]) for v in result.source.variables}
        doc = {
            "name": args.name,
            "source": result.source.to_json(),
            "target": result.target.to_json(),
            "images": images,
        }
        arrows = ", ".join(f"{v} = {img}" for v, img in images.items())
        return 0, doc, [f"{result.source} -> {result.target}: {arrows}"]
    left, right = result
    doc = {"name": args.name, "left": _ideal_doc(left), "right": _ideal_doc(right)}
    lines = [
        f"left: {left.ring} {_paren(_texts(left.generators))}",
        f"right: {right.ring} {_paren(_texts(right.generators))}",
    ]
    return 0, doc, lines


_HANDLERS = {
    "gb": _cmd_gb,
    "contract": _cmd_contract,
    "check-stable": _cmd_check_stable,
    "criterion": _cmd_criterion,
    "eliminate": _cmd_eliminate,
    "quotient": _cmd_quotient,
    "saturate": _cmd_saturate,
    "member": _cmd_member,
    "radical-member": _cmd_radical_member,
    "kernel": _cmd_kernel,
    "certify": _cmd_certify,
    "obstruct": _cmd_obstruct,
    "corpus": _cmd_corpus,
}


# -- parser ---------------------------------------------------------------------


def _add_common(sp, ring: bool = True, gens: bool = True) -> None:
    if ring:
        sp.add_argument("--ring", required=True, help="ring notation, e.g. ZZ[X] or QQ[Y][X]")
    if gens:
        sp.add_argument("--gens", help="comma-separated generators; '-' reads stdin")
        sp.add_argument("--gens-file", help="file with comma- or newline-separated generators")
    sp.add_argument("--format", choices=("text", "json"), default="text")
    sp.add_argument("--max-pairs", type=int, default=100_000, help="S-pair budget")
    sp.add_argument("--max-degree", type=int, default=60, help="total degree budget")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ps",
        description="Exact ideal arithmetic in R[X] and power-stability checking.",
        exit_on_error=False,
    )
    sub = parser.add_subparsers(dest="verb")

    sp = sub.add_parser("gb", help="reduced Groebner basis (strong over ZZ)", exit_on_error=False)
    _add_common(sp)
    sp.add_argument("--order", default="grevlex", help="lex | grevlex | lex:X,Y | elim:X,Y")

    sp = sub.add_parser("contract", help="generators of I^t intersected with R", exit_on_error=False)
    _add_common(sp)
    sp.add_argument("--power", type=int, default=1)

    sp = sub.add_parser("check-stable", help="bounded power-stability verdict", exit_on_error=False)
    _add_common(sp)
    sp.add_argument("--max-power", type=int, default=4)

    sp = sub.add_parser("criterion", help="graded criterion levels n = 0..N", exit_on_error=False)
    _add_common(sp)
    sp.add_argument("--max-level", type=int, default=3)

    sp = sub.add_parser("eliminate", help="drop variables from the ideal", exit_on_error=False)
    _add_common(sp)
    sp.add_argument("--vars", required=True, help="comma-separated variables to eliminate")

    sp = sub.add_parser("quotient", help="colon ideal (I : f)", exit_on_error=False)
    _add_common(sp)
    sp.add_argument("--by", required=True, help="the divisor polynomial f")

    sp = sub.add_parser("saturate", help="saturation (I : f^infinity)", exit_on_error=False)
    _add_common(sp)
    sp.add_argument("--by", required=True, help="the divisor polynomial f")

    sp = sub.add_parser("member", help="ideal membership test", exit_on_error=False)
    _add_common(sp)
    sp.add_argument("--poly", required=True)

    sp = sub.add_parser("radical-member", help="radical membership test", exit_on_error=False)
    _add_common(sp)
    sp.add_argument("--poly", required=True)

    sp = sub.add_parser("kernel", help="kernel of a variable-image ring map", exit_on_error=False)
    _add_common(sp, ring=False, gens=False)
    sp.add_argument("--source", required=True)
    sp.add_argument("--target", required=True)
    sp.add_argument("--map", required=True, help='images like "W=T^3,Y=T^4,Z=T^5"')

    sp = sub.add_parser("certify", help="search for an all-t stability certificate", exit_on_error=False)
    _add_common(sp)

    sp = sub.add_parser("obstruct", help="search for a primary obstruction of P^t", exit_on_error=False)
    _add_common(sp)
    sp.add_argument("--power", type=int, default=2)
    sp.add_argument("--witnesses", help="comma-separated candidate witnesses (default: variables)")

    sp = sub.add_parser("corpus", help="built-in example ideals", exit_on_error=False)
    sp.add_argument("--list", action="store_true")
    sp.add_argument("--name")
    sp.add_argument("--p", type=int, default=2, help="prime for example_3_12")
    sp.add_argument("--seed", type=int, default=0, help="seed for the seeded builders")
    sp.add_argument("--pairs", help='radical_zx pairs like "2:X^2+X+1;3:X+1"')
    sp.add_argument("--format", choices=("text", "json"), default="text")
    sp.add_argument("--max-pairs", type=int, default=100_000)
    sp.add_argument("--max-degree", type=int, default=60)

    return parser


def run_command(argv: Sequence[str]) -> tuple[int, OutputDocument]:
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
    except argparse.ArgumentError as err:
        return 2, OutputDocument("text", f"usage error: {err}")
    except SystemExit as err:  # argparse printed its own message (e.g. --help)
        code = err.code if isinstance(err.code, int) else 2
        return (0 if code == 0 else 2), OutputDocument("text", "")
    if args.verb is None:
        return 2, OutputDocument("text", "usage error: a command verb is required (see ps --help)")
    fmt = getattr(args, "format", "text")
    try:
        code, doc, lines = _HANDLERS[args.verb](args)
    except BudgetExceededError as err:
        return 3, _render(fmt, {"error": str(err), "budget_exceeded": True}, [f"budget exceeded: {err}"])
    except (AlgebraError, OSError) as err:
        return 2, _render(fmt, {"error": str(err)}, [f"error: {err}"])
    return code, _render(fmt, doc, lines)


def _render(fmt: str, doc: dict, lines: list[str]) -> OutputDocument:
    if fmt == "json":
        return OutputDocument("json", json.dumps(doc, indent=2))
    return OutputDocument("text", "\n".join(lines))


def main(argv: Sequence[str] | None = None) -> int:
    code, doc = run_command(sys.argv[1:] if argv is None else argv)
    if doc.body:
        print(doc.body)
    return code


if __name__ == "__main__":
    sys.exit(main())
