"""Command line entry point.

Exit codes: 0 success, 1 input or parse error, 2 computation guard tripped
(crossing limit, search ceiling), 3 internal invariant failure.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from .knotio import (
    KnotInputError,
    Pretzel,
    Twist,
    component_count,
    format_presentation,
    parse_presentation,
    to_pd,
)
from .obstruct import (
    NotGenusOne,
    NotKnotP0,
    SearchSpaceTooLarge,
    decomposition_search,
    genus_one_guard,
    gordian_one_test,
    refined_bound,
    theorem_bound,
)
from .poly import LaurentPoly, PolySyntaxError, parse_laurent
from .sequences import pretzel_sequence, twist_sequence, verify_sequence
from .skein import (
    CrossingLimitExceeded,
    MalformedHomfly,
    NormalizationError,
    a2_of,
    coefficient_polys,
    conway,
    homfly,
    pretzel_p0,
    twist_p0,
)

EXIT_OK, EXIT_INPUT, EXIT_GUARD, EXIT_INTERNAL = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _add_input(p: argparse.ArgumentParser, suffix: str = "", required: bool = True):
    g = p.add_mutually_exclusive_group(required=required)
    g.add_argument(f"--pd{suffix}", metavar="TEXT", help='PD code, e.g. "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]"')
    g.add_argument(f"--braid{suffix}", metavar="TEXT", help='braid word, e.g. "2: 1 1 1"')
    g.add_argument(f"--pretzel{suffix}", metavar="A,B,C", help="odd band crossing counts, e.g. 3,3,3")
    g.add_argument(f"--twist{suffix}", metavar="2M", help="even twist count 2m")
    return g


def _common(p: argparse.ArgumentParser):
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--max-crossings", type=int, default=16)


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="knotbound", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("homfly", help="print the HOMFLY polynomial")
    _add_input(p)
    _common(p)

    p = sub.add_parser("p0", help="print the coefficient polynomials p^i")
    _add_input(p)
    _common(p)

    for name, hlp in (("bound", "lower bounds for u^g_{++}"), ("decompose", "bounded certificate search")):
        p = sub.add_parser(name, help=hlp)
        g = _add_input(p)
        g.add_argument("--p0", metavar="POLY", help='zeroth coefficient polynomial, e.g. "2v^2 - v^4"')
        _common(p)
        p.add_argument("--n-max", type=int, default=32)
        p.add_argument("--assert-genus-one", action="store_true")
        p.add_argument("--from-diagram", action="store_true", help="compute family p0 from the diagram")
        if name == "decompose":
            p.add_argument("--n", type=int, default=1)
            p.add_argument("--shift-lo", type=int, default=-4)
            p.add_argument("--shift-hi", type=int, default=4)
            p.add_argument("--deg-span", type=int, default=2)
            p.add_argument("--coeff-bound", type=int, default=2)
            p.add_argument("--ceiling", type=int, default=2_000_000)

    p = sub.add_parser("gordian", help="Gordian distance one test between two knots")
    _add_input(p)
    _add_input(p, suffix="2")
    _common(p)
    p.add_argument("--eps", type=int, choices=(1, -1), default=1)
    p.add_argument("--assert-genus-one", action="store_true")

    p = sub.add_parser("sequence", help="emit and verify a family unknotting sequence")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--pretzel", metavar="A,B,C")
    g.add_argument("--twist", metavar="2M")
    _common(p)
    p.set_defaults(max_crossings=24)

    p = sub.add_parser("selftest", help="run the acceptance criteria")
    p.add_argument("--format", choices=("text", "json"), default="text")
    return ap


def _presentation(args, suffix: str = ""):
    for kind in ("pd", "braid", "pretzel", "twist"):
        text = getattr(args, kind + suffix, None)
        if text is not None:
            return parse_presentation(text, kind)
    return None


def _is_family(pres) -> bool:
    return isinstance(pres, (Pretzel, Twist))


def _knot_data(pres, args):
    d = to_pd(pres)
    h = homfly(d, max_crossings=args.max_crossings)
    n = component_count(d)
    return d, h, n


def _p0_for(args):
    """(p0, source description, presentation or None)."""
    if getattr(args, "p0", None) is not None:
        if not args.assert_genus_one:
            raise UsageError("--p0 input needs --assert-genus-one")
        return parse_laurent(args.p0), "given", None
    pres = _presentation(args)
    if _is_family(pres) and not args.from_diagram:
        if isinstance(pres, Twist):
            if pres.m == 0:
                return LaurentPoly.constant(1), "unknot", pres
            return twist_p0(pres.m), "closed form", pres
        if min(pres.params) >= 0:
            return pretzel_p0(*pres.params), "closed form", pres
    if not _is_family(pres) and not args.assert_genus_one:
        raise UsageError("bounds on raw diagrams need --assert-genus-one")
    d, h, n = _knot_data(pres, args)
    if n != 1:
        raise KnotInputError(f"input has {n} components; bounds need a knot")
    genus_one_guard(h)
    return coefficient_polys(h, 1).p0, "diagram", pres


def _emit(args, payload: dict, text: str):
    if args.format == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text)


def cmd_homfly(args) -> int:
    pres = _presentation(args)
    d, h, n = _knot_data(pres, args)
    _emit(
        args,
        {"input": format_presentation(pres), "components": n, "homfly": h.to_json(), "homfly_text": h.format()},
        h.format(),
    )
    return EXIT_OK


def cmd_p0(args) -> int:
    pres = _presentation(args)
    d, h, n = _knot_data(pres, args)
    dec = coefficient_polys(h, n)
    lines = [f"components: {n}"]
    lines += [f"p{i}: {p}" for i, p in enumerate(dec.coeffs)]
    payload = {"input": format_presentation(pres), **dec.to_json(), "coeffs_text": [str(p) for p in dec.coeffs]}
    if n == 1:
        c = conway(h)
        payload["conway"] = c.to_json()
        payload["a2"] = a2_of(h)
        lines.append(f"conway: {c.format('z')}")
        lines.append(f"a2: {a2_of(h)}")
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def cmd_bound(args) -> int:
    p0, source, pres = _p0_for(args)
    th = theorem_bound(p0)
    rf = refined_bound(p0, args.n_max)
    combined = max(th.bound, rf.bound)
    payload = {
        "input": format_presentation(pres) if pres is not None else {"kind": "p0", "text": str(p0)},
        "p0": p0.to_json(),
        "p0_text": str(p0),
        "p0_source": source,
        "bound": "inf" if combined == float("inf") else combined,
        "rules": list(th.rules_fired),
        "genus_assumption": True,
        "exhausted": rf.exhausted and combined == rf.bound,
        "theorem": th.to_json(),
        "refined": rf.to_json(),
    }
    text = "\n".join(
        [
            f"p0 ({source}): {p0}",
            f"theorem bound: {th.format()}",
            f"refined bound: {rf.format()}",
            f"bound: {payload['bound']}  rules: {', '.join(th.rules_fired) or 'none'}",
            "(valid under the asserted genus-one hypothesis)",
        ]
    )
    _emit(args, payload, text)
    return EXIT_OK


def cmd_decompose(args) -> int:
    p0, source, pres = _p0_for(args)
    cert = decomposition_search(
        p0, args.n, args.shift_lo, args.shift_hi, args.deg_span, args.coeff_bound, args.ceiling
    )
    rb = refined_bound(p0, max(args.n_max, args.n))
    payload = {"p0": p0.to_json(), "p0_text": str(p0), "n": args.n, "refined_bound": rb.to_json()}
    if cert is None:
        payload["certificate"] = None
        _emit(args, payload, f"no certificate with n = {args.n} inside the search box (not a proof of absence)")
        return EXIT_OK
    if not cert.verify(p0) or cert.n < rb.bound:
        raise AssertionError("certificate contradicts reassembly or the refined lower bound")
    payload["certificate"] = cert.to_json()
    lines = [f"p0 = v^{2 * cert.n} + (1 - v^2) * ("]
    lines += [f"    v^{2 * k} * ({f})^2" for k, f in zip(cert.shifts, cert.factors)]
    lines.append(")")
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def cmd_gordian(args) -> int:
    a, b = _presentation(args), _presentation(args, "2")
    if not (_is_family(a) and _is_family(b)) and not args.assert_genus_one:
        raise UsageError("raw diagram inputs need --assert-genus-one")
    data = []
    for pres in (a, b):
        d, h, n = _knot_data(pres, args)
        if n != 1:
            raise KnotInputError(f"{format_presentation(pres)['text']} is not a knot")
        genus_one_guard(h)
        data.append((coefficient_polys(h, 1).p0, a2_of(h)))
    res = gordian_one_test(data[0][0], data[1][0], data[0][1], data[1][1], args.eps)
    payload = {
        "first": format_presentation(a),
        "second": format_presentation(b),
        "eps": args.eps,
        "p0": [str(x[0]) for x in data],
        "a2": [x[1] for x in data],
        **res.to_json(),
    }
    text = ("pass" if res.passed else "fail") + (f"  f = {res.f}" if res.f is not None else "") + f"  ({res.reason})"
    _emit(args, payload, text)
    return EXIT_OK


def cmd_sequence(args) -> int:
    pres = _presentation(args)
    if isinstance(pres, Pretzel):
        cert = pretzel_sequence(*pres.params)
    else:
        cert = twist_sequence(pres.m)
    report = verify_sequence(cert, max_crossings=args.max_crossings)
    payload = {"certificate": cert.to_json(), "verification": report.to_json()}
    lines = [" -> ".join(s.format() for s in cert.steps), f"length: {cert.claimed_length}"]
    for c in report.checks:
        where = "cert" if c.step is None else f"step {c.step}"
        lines.append(f"  [{'ok' if c.ok else 'FAIL'}] {where}: {c.name}  {c.detail}")
    lines.append("valid" if report.valid else f"INVALID at step {report.failing_step}")
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK if report.valid else EXIT_INTERNAL


def cmd_selftest(args) -> int:
    from .acceptance import run_all

    results = run_all()
    if args.format == "json":
        print(json.dumps([r.to_json() for r in results], indent=2))
    else:
        for r in results:
            print(r.line())
    return EXIT_OK if all(r.passed for r in results) else EXIT_INTERNAL


COMMANDS = {
    "homfly": cmd_homfly,
    "p0": cmd_p0,
    "bound": cmd_bound,
    "decompose": cmd_decompose,
    "gordian": cmd_gordian,
    "sequence": cmd_sequence,
    "selftest": cmd_selftest,
}


def run(argv: Optional[list[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return COMMANDS[args.command](args)
    except (UsageError, KnotInputError, PolySyntaxError, NotKnotP0, NotGenusOne) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except (CrossingLimitExceeded, SearchSpaceTooLarge) as e:
        print(f"guard: {e}", file=sys.stderr)
        return EXIT_GUARD
    except (MalformedHomfly, NormalizationError, AssertionError) as e:
        print(f"internal error: {e}", file=sys.stderr)
        return EXIT_INTERNAL


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
