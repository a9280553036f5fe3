"""Command line interface.

Subcommands: order, classes, kstar, eorders, gamma, verify.
``verify`` exits nonzero iff any check fails (skips are allowed).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .constants import DEFAULT_CAP
from .errors import KclassError


def _load_sections(path):
    from .corpus import parse_group_file
    from .permcore import FiniteGroup

    gf = parse_group_file(Path(path).read_text(encoding="utf-8"))
    groups = {}
    for tag, gens in gf.sections:
        groups[tag] = FiniteGroup(gf.degree, gens)
    return gf, groups


def _cmd_order(args):
    gf, groups = _load_sections(args.file)
    for tag, G in groups.items():
        print(f"{gf.name} [{tag}]  order = {G.order(args.cap)}")
    return 0


def _cmd_classes(args):
    gf, groups = _load_sections(args.file)
    for tag, G in groups.items():
        decomp = G.conjugacy_classes(args.cap)
        sizes = ",".join(str(s) for s in sorted(decomp.sizes))
        print(f"{gf.name} [{tag}]  k = {decomp.k}  sizes = {sizes}")
    return 0


def _cmd_kstar(args):
    from .autorbits import k_star, validate_pair

    gf, groups = _load_sections(args.file)
    ambient = groups["ambient"]
    socle_gens = (groups["socle"] if "socle" in groups else ambient).generators
    pair = validate_pair(ambient, socle_gens, args.cap)
    print(f"{gf.name}  orbits of ambient on socle = {k_star(pair, args.cap)}")
    return 0


def _cmd_eorders(args):
    from .autorbits import element_order_spectrum

    gf, groups = _load_sections(args.file)
    G = groups.get("socle", groups["ambient"])
    spectrum = element_order_spectrum(G, args.cap)
    print(f"{gf.name}  element orders = {{{', '.join(map(str, spectrum))}}}  "
          f"e = {len(spectrum)}")
    return 0


def _cmd_gamma(args):
    from .bounds import gamma

    value = gamma(args.log2aut, args.k)
    print(f"gamma(log2|Aut| = {value.log2_aut:.6f}, k = {value.k}) = "
          f"{value.gamma:.6f}")
    return 0


def _cmd_verify(args):
    from .report import reports_to_json
    from .verifier import run_suite

    reports = run_suite(args.suite, cap=args.cap, manifest_path=args.catalog)
    for rep in reports:
        print(rep.one_line())
    failed = sum(1 for r in reports if r.verdict == "fail")
    skipped = sum(1 for r in reports if r.verdict == "skipped")
    print(f"-- {len(reports)} checks: {len(reports) - failed - skipped} passed, "
          f"{failed} failed, {skipped} skipped")
    if args.json:
        Path(args.json).write_text(reports_to_json(reports), encoding="utf-8")
        print(f"-- wrote {args.json}")
    return 1 if failed else 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="kclass",
        description="Conjugacy-class counts and verification for finite "
                    "permutation groups")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_cap(p):
        p.add_argument("--cap", type=int, default=DEFAULT_CAP,
                       help=f"element enumeration limit (default {DEFAULT_CAP})")

    for name, fn, help_text in (
        ("order", _cmd_order, "order of each group section in a file"),
        ("classes", _cmd_classes, "conjugacy class count and sizes"),
        ("kstar", _cmd_kstar, "ambient-conjugation orbit count on the socle"),
        ("eorders", _cmd_eorders, "element order spectrum of the socle"),
    ):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("file", help="group definition file")
        add_cap(p)
        p.set_defaults(fn=fn)

    p = sub.add_parser("gamma", help="the gamma statistic for given inputs")
    p.add_argument("--log2aut", type=float, required=True,
                   help="log2 of the automorphism group order")
    p.add_argument("--k", type=int, required=True, help="orbit count (>= 3)")
    p.set_defaults(fn=_cmd_gamma)

    p = sub.add_parser("verify", help="run a verification suite")
    from .verifier import SUITES

    p.add_argument("suite", choices=SUITES)
    add_cap(p)
    p.add_argument("--catalog", default=None,
                   help="catalog manifest path (default: bundled; "
                        "KCLASS_CATALOG overrides)")
    p.add_argument("--json", default=None, help="write reports as JSON")
    p.set_defaults(fn=_cmd_verify)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (KclassError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
