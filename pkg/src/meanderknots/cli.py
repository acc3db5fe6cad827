"""Command-line entry point.

Exit status: 0 on success, 1 on domain errors (parity, realizability,
inputs outside an operation's domain), 2 on usage errors and malformed
input.
"""
import argparse
import re
import sys

from . import catalog
from .algebra import (meander_sum, ogc_product_knots, ogc_product_links,
                      search_meander_diagram, search_ogc_diagram)
from .arch import dyck_encode, enumerate_arch_configurations
from .classify import (census_meander_knots, census_meander_links, census_multicomponent,
                       default_jobs, lookup_name)
from .diagram import (DTCode, GaussCode, analyze, close_open_meander, find_ordered_form,
                      from_dt_code, is_ordered, realize_gauss_code, to_dt_code)
from .errors import MalformedInputError, MeanderKnotsError
from .invariants import (alexander_polynomial, determinant, fingerprint, format_jones,
                         jones_polynomial, unknot_fingerprint)
from .meander import (enumerate_meandric_systems, enumerate_open_meanders,
                      open_meander, parse_permutation, validate_meander_permutation)
from .render import STYLES, RenderSpec, render

# censuses at or above these orders need --slow
SLOW_FROM = {"knots": 13, "links": 14, "multi": 14}
# where product factors given by name take their ordered code from, in order
FACTOR_TABLES = ("examples", "ogc_alternating", "ogc_nonalternating")


class UsageError(Exception):
    pass


# ------------------------------------------------------------------ inputs


def _is_permutation_text(text):
    return re.fullmatch(r"\(\s*\d+(\s*,\s*\d+)*\s*\)", text) is not None


def _looks_like_dt(text):
    nums = [int(x) for x in re.findall(r"-?\d+", text)]
    groups = text.count("{") - 1 if text.count("{") > 1 else 0
    body = nums[groups:] if groups else nums
    return bool(body) and all(x % 2 == 0 for x in body)


def _named(name):
    hits = catalog.lookup(name)
    if not hits:
        raise UsageError(f"unknown name or code: {name!r}")
    return hits


def resolve(text):
    """Diagram for a catalog name, a meander permutation, a DT code or a
    Gauss code; 'dt:', 'gauss:' and 'perm:' prefixes force the reading."""
    text = text.strip()
    kind, _, body = text.partition(":")
    if kind in ("dt", "gauss", "perm") and body:
        text = body.strip()
    else:
        kind = None
    if kind == "perm" or (kind is None and _is_permutation_text(text)):
        p = parse_permutation(text)
        if not validate_meander_permutation(p):
            raise MalformedInputError(f"{text} is not a meander permutation")
        return close_open_meander(open_meander(p))
    if kind == "dt" or (kind is None and "{" in text and _looks_like_dt(text)):
        return from_dt_code(DTCode.parse(text))
    if kind == "gauss" or (kind is None and re.search(r"\d", text) and re.search(r"[-{(\[,]", text)):
        return realize_gauss_code(GaussCode.parse(text))
    for e in _named(text):
        try:
            return e.diagram()
        except MeanderKnotsError:
            continue
    raise MalformedInputError(f"no usable code for {text!r}")


def resolve_ordered(text):
    """Ordered Gauss code for a product factor: a printed ordered code
    when the catalog has one, else the ordered form of the diagram."""
    if not re.search(r"\d", text) or re.fullmatch(r"\d+_\d+(\^\d+)?|K\d+[an]\d+", text.strip()):
        rows = [e for e in _named(text.strip()) if e.verified and e.gauss is not None
                and (is_ordered(e.gauss) or e.gauss.n_components == 2)]
        rows.sort(key=lambda e: (FACTOR_TABLES.index(e.table) if e.table in FACTOR_TABLES
                                 else len(FACTOR_TABLES), e.gauss.n_crossings))
        if rows:
            return rows[0].gauss
    d = resolve(text)
    if d.n_components == 2:
        return d.gauss
    g = find_ordered_form(d.gauss)
    if g is None:
        raise MeanderKnotsError(f"{text} has no ordered Gauss code")
    return g


def resolve_meander_closure(text):
    """Meander closure for a sum operand.  Names use the catalog's short
    code, whose absolute values are the meander permutation."""
    text = text.strip()
    if _is_permutation_text(text) or text.startswith("perm:"):
        return resolve(text)
    if not re.search(r"[{(\[]", text):
        for e in _named(text):
            short = e.short_gauss
            if short is None or e.gauss is None:
                continue
            p = tuple(abs(x) for x in short)
            if validate_meander_permutation(p):
                return realize_gauss_code(e.gauss, meander=p)
        raise MeanderKnotsError(f"{text} has no meander code in the catalog")
    d = resolve(text)
    if d.meander is None:
        raise MeanderKnotsError(f"{text} is not given as a meander diagram")
    return d


def type_name(d):
    fp = fingerprint(d)
    if fp == unknot_fingerprint(d.n_components):
        return "0_1" if d.n_components == 1 else f"0_1^{d.n_components}"
    return lookup_name(d)


# ---------------------------------------------------------------- commands


def _out(line=""):
    sys.stdout.write(line + "\n")


def cmd_enumerate(args):
    if args.what == "meanders":
        _need(args.n, "--n")
        if args.count:
            _out(str(sum(1 for _ in enumerate_open_meanders(args.n))))
            return 0
        for m in enumerate_open_meanders(args.n):
            _out("(" + ",".join(map(str, m.permutation)) + ")")
    elif args.what == "systems":
        _need(args.n, "--n")
        _need(args.k, "--k")
        systems = sorted(str(s) for s in enumerate_meandric_systems(args.n, args.k))
        if args.count:
            _out(str(len(systems)))
            return 0
        for s in systems:
            _out(s)
    else:
        _need(args.arcs, "--arcs")
        confs = sorted(dyck_encode(a) for a in
                       enumerate_arch_configurations(args.arcs, args.loose, args.exposed))
        if args.count:
            _out(str(len(confs)))
            return 0
        for w in confs:
            _out(w)
    return 0


def _need(value, flag):
    if value is None:
        raise UsageError(f"{flag} is required")


def cmd_census(args):
    _need(args.n, "--n")
    if args.n >= SLOW_FROM[args.what] and not args.slow:
        raise UsageError(f"{args.what} census at n={args.n} is slow; pass --slow")
    jobs = args.jobs or default_jobs()
    if args.what == "knots":
        row = census_meander_knots(args.n, jobs=jobs)
    elif args.what == "links":
        row = census_meander_links(args.n, jobs=jobs)
    else:
        _need(args.c, "--c")
        row = census_multicomponent(args.n, args.c, jobs=jobs)
    sys.stdout.write(catalog.export_census([row], args.format).decode())
    return 0


def cmd_invariants(args):
    d = resolve(args.code)
    flags = analyze(d)
    _out(f"name: {type_name(d) or '-'}")
    _out(f"gauss: {d.gauss}")
    _out(f"dt: {to_dt_code(d)}")
    _out(f"crossings: {d.n_crossings}")
    _out(f"components: {d.n_components}")
    _out(f"writhe: {d.writhe()}")
    _out(f"reduced: {str(flags.reduced).lower()}")
    _out(f"prime: {str(flags.prime).lower()}")
    _out(f"split: {str(flags.split).lower()}")
    _out(f"jones: {format_jones(jones_polynomial(d))}")
    _out(f"determinant: {determinant(d)}")
    if d.n_components == 1:
        _out(f"alexander: {alexander_polynomial(d)}")
    return 0


def cmd_product(args):
    g1, g2 = resolve_ordered(args.first), resolve_ordered(args.second)
    n = g1.n_crossings
    as_link = args.as_link or (not args.as_knot and n % 2 == 0)
    d = ogc_product_links(g1, g2) if as_link else ogc_product_knots(g1, g2)
    _out(type_name(d) or "-")
    _out(str(d.gauss))
    return 0


def cmd_sum(args):
    d = meander_sum(resolve_meander_closure(args.first), resolve_meander_closure(args.second))
    _out(type_name(d) or "-")
    _out("(" + ",".join(map(str, d.meander)) + ")")
    _out(str(d.gauss))
    return 0


def cmd_search(args):
    target = resolve(args.code)
    hit = (search_ogc_diagram if args.ogc else search_meander_diagram)(target, args.max_n)
    if hit is None:
        _out(f"not found up to {args.max_n} crossings")
        return 0
    d, n = hit
    _out(str(n))
    if d.meander is not None:
        _out("(" + ",".join(map(str, d.meander)) + ")")
    _out(str(d.gauss))
    return 0


def cmd_render(args):
    text = args.code.strip()
    if _is_permutation_text(text):
        p = parse_permutation(text)
        if not validate_meander_permutation(p):
            raise MalformedInputError(f"{text} is not a meander permutation")
        x = open_meander(p)
    else:
        x = resolve_meander_closure(text)
    svg = render(x, RenderSpec(args.style))
    if args.output and args.output != "-":
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(svg)
    else:
        sys.stdout.write(svg)
    return 0


def cmd_verify(args):
    from .acceptance import run_all
    ok = True
    for number, title, passed, detail in run_all(slow=args.slow):
        ok &= passed
        _out(f"[{'PASS' if passed else 'FAIL'}] {number}. {title}: {detail}")
    return 0 if ok else 1


# ------------------------------------------------------------------ parser


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser():
    p = _Parser(prog="meanderknots", description="Meander knots and links toolkit.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    e = sub.add_parser("enumerate", help="list open meanders, meandric systems or arch configurations")
    e.add_argument("what", choices=("meanders", "systems", "arches"))
    e.add_argument("--n", type=int, help="order (number of feet)")
    e.add_argument("--k", type=int, help="number of loops, for systems")
    e.add_argument("--arcs", type=int, help="number of arcs, for arches")
    e.add_argument("--loose", type=int, default=0, help="number of free ends, for arches")
    e.add_argument("--exposed", action="store_true", help="free ends must be exposed")
    e.add_argument("--count", action="store_true", help="print only the count")
    e.set_defaults(func=cmd_enumerate)

    c = sub.add_parser("census", help="count knot or link types realized by meander diagrams")
    c.add_argument("what", choices=("knots", "links", "multi"))
    c.add_argument("--n", type=int, help="crossing number")
    c.add_argument("--c", type=int, help="number of components, for multi")
    c.add_argument("--format", choices=("csv", "json"), default="csv")
    c.add_argument("--jobs", type=int, default=None, help="worker processes")
    c.add_argument("--slow", action="store_true", help="allow long censuses")
    c.set_defaults(func=cmd_census)

    i = sub.add_parser("invariants", help="print invariants of a diagram")
    i.add_argument("code")
    i.set_defaults(func=cmd_invariants)

    pr = sub.add_parser("product", help="product of two ordered Gauss codes")
    pr.add_argument("first")
    pr.add_argument("second")
    pr.add_argument("--ogc", action="store_true", help="splice ordered Gauss codes (the default)")
    mode = pr.add_mutually_exclusive_group()
    mode.add_argument("--as-knot", action="store_true")
    mode.add_argument("--as-link", action="store_true")
    pr.set_defaults(func=cmd_product)

    s = sub.add_parser("sum", help="sum of two meander closures")
    s.add_argument("first")
    s.add_argument("second")
    s.set_defaults(func=cmd_sum)

    se = sub.add_parser("search", help="smallest meander or ordered-code diagram of a type")
    se.add_argument("code")
    se.add_argument("--max-n", type=int, default=13)
    se.add_argument("--ogc", action="store_true", help="search ordered Gauss code shadows")
    se.set_defaults(func=cmd_search)

    r = sub.add_parser("render", help="draw a meander diagram as SVG")
    r.add_argument("code")
    r.add_argument("--style", choices=STYLES, default="shadow")
    r.add_argument("-o", "--output", default=None)
    r.set_defaults(func=cmd_render)

    v = sub.add_parser("verify", help="replay the acceptance checks")
    v.add_argument("--slow", action="store_true")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv=None):
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except (UsageError, MalformedInputError) as exc:
        sys.stderr.write(f"usage error: {exc}\n")
        return 2
    except MeanderKnotsError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
