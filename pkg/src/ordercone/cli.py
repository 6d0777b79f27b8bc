"""Command line interface.

Usage::

    ordercone --cone CONE.json SUBCOMMAND [ARGS]

Vectors are comma separated rationals (``1,-1/2,0``).  Every subcommand
prints one JSON report on stdout.  Exit codes: 0 verdict computed, 2 input
rejected, 3 a certificate failed re-verification.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from typing import Optional, Sequence

from .cone import (
    ARCHIMEDEAN_REASON,
    PRE_RIESZ_REASON,
    build_space,
    load_cone_document,
)
from .discrete import (
    find_atom_below,
    is_atom,
    is_d_discrete,
    is_discrete,
    off_ray_vertex,
)
from .disjoint import d_disjoint, make_d_disjoint_pair, perp, sym_interval_disjoint
from .errors import CertificateError, InputError
from .lp import enumerate_vertices
from .order import is_maximal_lower_bound, leq, maximal_lower_bound, order_interval
from .rational import ParseError, dot, format_rational, format_vector, parse_vector, sub, zeros

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_INTERNAL = 3

CITE_D = "D-disjoint: [0,x] ∩ [0,y] = {0}"
CITE_D_MAX = "D-disjoint ⇔ 0 is a maximal element of {x,y}^L"
CITE_PERP = "disjoint: {x+y,-(x+y)} and {x-y,y-x} have the same nonempty upper bounds"
CITE_SYM = "symmetric-interval condition: [-x,x] ∩ [-y,y] = {0}"
CITE_CHAIN = "x ⊥ y ⇒ [-x,x] ∩ [-y,y] = {0} ⇒ x ⊥* y for x, y ≥ 0"
CITE_MAX = "a maximizer of a strictly positive functional over {x,y}^L is maximal"
CITE_PAIR = "z maximal in {x,y}^L ⇒ (x-z) ⊥* (y-z)"
CITE_ATOM = "atom: 0 ≤ a ≤ x implies a = αx"
CITE_ATOM_D = "Archimedean space with an M-cone: atom ⇔ D-discrete"
CITE_ATOM_IS_D = "every atom is D-discrete"
CITE_D_IS_DISC = "D-discrete ⇒ discrete (since ⊥ ⇒ ⊥* on positive pairs)"
CITE_DESCENT = (
    "finite-dimensional Archimedean M-cone: every nonzero x ≥ 0 lies above a "
    "D-discrete element, found by descending through proper faces"
)


def _vec(text: str):
    return parse_vector(text)


def _vstr(v) -> str:
    return format_vector(v)


def _bool(b: bool) -> str:
    return "true" if b else "false"


def _report(command, inputs, verdict, certificate=None, trace=None, citations=()):
    return {
        "command": command,
        "inputs": inputs,
        "verdict": verdict,
        "certificate": certificate if certificate is not None else {},
        "trace": trace,
        "theorem_citations": list(citations),
    }


def cmd_info(s, args):
    cert = {
        "dim": s.dim,
        "generators": [_vstr(g) for g in s.generators],
        "inequalities": [_vstr(a) for a in s.inequalities],
        "strict_functional": _vstr(s.strict_functional),
        "flags": {
            "pointed": s.pointed,
            "generating": s.generating,
            "archimedean": s.archimedean,
            "pre_riesz": s.pre_riesz,
        },
        "justification": {
            "generating": "generators span the space ⇔ directed",
            "archimedean": ARCHIMEDEAN_REASON,
            "pre_riesz": PRE_RIESZ_REASON,
        },
    }
    for g in s.generators:
        if dot(s.strict_functional, g) <= 0:
            raise CertificateError("strict functional not positive on a generator")
    return _report("info", {}, "admitted", cert, citations=[PRE_RIESZ_REASON, ARCHIMEDEAN_REASON])


def cmd_leq(s, args):
    x, y = _vec(args.x), _vec(args.y)
    s.check_dim(x, y)
    d = sub(y, x)
    slacks = [dot(a, d) for a in s.inequalities]
    result = leq(s, x, y)
    if result != all(v >= 0 for v in slacks):
        raise CertificateError("leq verdict disagrees with the inequality slacks")
    cert = {
        "difference": _vstr(d),
        "slacks": [format_rational(v) for v in slacks],
        "violated": [i for i, v in enumerate(slacks) if v < 0],
    }
    return _report("leq", {"x": _vstr(x), "y": _vstr(y)}, _bool(result), cert,
                   citations=["x ≤ y ⇔ y - x ∈ V_p"])


_KINDS = {
    "d": (d_disjoint, [CITE_D, CITE_D_MAX]),
    "sym": (sym_interval_disjoint, [CITE_SYM, CITE_CHAIN]),
    "perp": (perp, [CITE_PERP, CITE_CHAIN]),
}


def cmd_disjoint(s, args):
    x, y = _vec(args.x), _vec(args.y)
    fn, cites = _KINDS[args.kind]
    v = fn(s, x, y)
    cert = {
        "kind": v.kind,
        "witness": _vstr(v.witness) if v.witness is not None else None,
        "witness_side": v.witness_side,
        "optima": [[label, format_rational(val)] for label, val in v.optima],
    }
    inputs = {"kind": args.kind, "x": _vstr(x), "y": _vstr(y)}
    return _report("disjoint", inputs, _bool(v.result), cert, citations=cites)


def cmd_mlb(s, args):
    x, y = _vec(args.x), _vec(args.y)
    above = _vec(args.above) if args.above else None
    z = maximal_lower_bound(s, x, y, above=above)
    if not is_maximal_lower_bound(s, x, y, z):
        raise CertificateError("returned lower bound is not maximal")
    inputs = {"x": _vstr(x), "y": _vstr(y), "above": _vstr(above) if above else None}
    cert = {"z": _vstr(z), "functional": _vstr(s.strict_functional), "maximal": True}
    return _report("mlb", inputs, "computed", cert, citations=[CITE_MAX])


def cmd_atom(s, args):
    x = _vec(args.x)
    result = is_atom(s, x)
    w = off_ray_vertex(s, x)
    if result != (w is None):
        raise CertificateError("atom LP test and vertex enumeration disagree")
    cert = {"off_ray_point": _vstr(w) if w is not None else None}
    return _report("atom", {"x": _vstr(x)}, _bool(result), cert, citations=[CITE_ATOM])


def _pair(p):
    return None if p is None else [_vstr(p[0]), _vstr(p[1])]


def cmd_d_discrete(s, args):
    x = _vec(args.x)
    v = is_d_discrete(s, x)
    return _report("d-discrete", {"x": _vstr(x)}, v.status.value, {"witness": _pair(v.witness)},
                   citations=[CITE_ATOM_D, CITE_ATOM_IS_D])


def cmd_discrete(s, args):
    x = _vec(args.x)
    v = is_discrete(s, x)
    if v.witness is not None and not perp(s, *v.witness).result:
        raise CertificateError("not_discrete witness is not a disjoint pair")
    note = None
    if v.status.value == "discrete_unknown":
        note = "no disjoint pair among the searched candidates; the search is not complete"
    return _report("discrete", {"x": _vstr(x)}, v.status.value,
                   {"witness": _pair(v.witness), "note": note},
                   citations=[CITE_D_IS_DISC, CITE_ATOM_IS_D])


def cmd_find_atom_below(s, args):
    x = _vec(args.x)
    z, trace = find_atom_below(s, x)
    if not is_atom(s, z) or not leq(s, z, x):
        raise CertificateError("descent result is not an atom below x")
    steps = [{"x": _vstr(v), "active_set": sorted(f.active_set)} for v, f in trace]
    return _report("find-atom-below", {"x": _vstr(x)}, "computed", {"atom": _vstr(z)},
                   trace=steps, citations=[CITE_DESCENT, CITE_ATOM_D])


def cmd_make_pair(s, args):
    x, y = _vec(args.x), _vec(args.y)
    u, v = make_d_disjoint_pair(s, x, y)
    z = sub(x, u)
    cert = {"u": _vstr(u), "v": _vstr(v), "z": _vstr(z)}
    return _report("make-pair", {"x": _vstr(x), "y": _vstr(y)}, "computed", cert,
                   citations=[CITE_PAIR, CITE_D_MAX])


def cmd_interval_vertices(s, args):
    x = _vec(args.x)
    s.check_dim(x)
    verts = enumerate_vertices(order_interval(s, zeros(s.dim), x).body)
    return _report("interval-vertices", {"x": _vstr(x)}, str(len(verts)),
                   {"vertices": [_vstr(w) for w in verts]})


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ordercone",
        description="Exact order-theoretic predicates for polyhedral cones.",
    )
    parser.add_argument("-c", "--cone", required=True,
                        help="cone document: a JSON file path or inline JSON text")
    sub_ = parser.add_subparsers(dest="command", required=True)

    sub_.add_parser("info", help="validated cone data and space flags").set_defaults(fn=cmd_info)

    def two(name, fn, help_):
        p = sub_.add_parser(name, help=help_)
        p.add_argument("x")
        p.add_argument("y")
        p.set_defaults(fn=fn)
        return p

    def one(name, fn, help_):
        p = sub_.add_parser(name, help=help_)
        p.add_argument("x")
        p.set_defaults(fn=fn)
        return p

    two("leq", cmd_leq, "is x <= y")
    p = two("disjoint", cmd_disjoint, "disjointness predicates")
    p.add_argument("--kind", choices=sorted(_KINDS), default="d")
    p = two("mlb", cmd_mlb, "a maximal lower bound of {x, y}")
    p.add_argument("--above", help="return a maximal lower bound above this lower bound")
    two("make-pair", cmd_make_pair, "D-disjoint pair (x - z, y - z)")
    one("atom", cmd_atom, "is x an atom")
    one("d-discrete", cmd_d_discrete, "is x D-discrete")
    one("discrete", cmd_discrete, "is x discrete (three-valued)")
    one("find-atom-below", cmd_find_atom_below, "an atom below x by face descent")
    one("interval-vertices", cmd_interval_vertices, "vertices of [0, x]")
    return parser


_NEGATIVE_VECTOR = re.compile(r"^-\d")


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    # argparse would read "-1,0,1" as an option; a leading space keeps it positional
    argv = [" " + a if _NEGATIVE_VECTOR.match(a) else a for a in argv]
    args = build_parser().parse_args(argv)
    try:
        s = build_space(load_cone_document(args.cone))
        report = args.fn(s, args)
    except (InputError, ParseError, OSError) as exc:
        print(f"ordercone: input rejected: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except CertificateError as exc:
        print(f"ordercone: internal invariant violated: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    source = args.cone if not args.cone.lstrip().startswith("{") else "inline"
    report["inputs"] = {"cone": source, **report["inputs"]}
    print(json.dumps(report, indent=2, ensure_ascii=False))
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
