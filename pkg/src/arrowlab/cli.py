"""Command-line entry point: ``arrowlab run | list | show``."""
from __future__ import annotations

import argparse
import json
import sys

from .errors import ArrowlabError, UnknownNameError
from .finset import decode, enum_hom
from .functors import functor_names, library_functor
from .monoids import library_monoid, monoid_names
from .profunctors import CayleyProf, HomProf, KleisliMaybeHand, KleisliProf, library_profunctor, profunctor_names
from .suites import FAULTS, Config, run, suite_names


def _shape(F, n, x) -> str:
    sid, args = F.decompose(n, x)
    label = F.constructors[sid][0] if hasattr(F, "constructors") else f"s{sid}"
    return f"{label}({', '.join(map(str, args))})" if args else label


def show_functor(F, size: int) -> str:
    lines = [f"{F.name}: on objects"]
    for n in range(size + 1):
        elems = ", ".join(f"{x}={_shape(F, n, x)}" for x in range(F.card(n))) if F.polynomial else ""
        lines.append(f"  |F {n}| = {F.card(n)}" + (f"   {elems}" if elems else ""))
    lines.append(f"{F.name}: on morphisms")
    for a in range(size + 1):
        for b in range(size + 1):
            for f in enum_hom(a, b):
                lines.append(f"  F({list(f.table)}: {a}->{b}) = {list(F.on_morphism(f).table)}")
    return "\n".join(lines)


def _kleisli_maybe_element(X, Y, p) -> str:
    vals = decode(p, X, Y + 1)
    return "[" + ", ".join("Nothing" if v == Y else f"Just {v}" for v in vals) + "]"


def _describe(P, X, Y, p) -> str:
    if isinstance(P, KleisliMaybeHand):
        return _kleisli_maybe_element(X, Y, p)
    if isinstance(P, KleisliProf):
        vals = decode(p, X, P.F.card(Y))
        return "x |-> [" + ", ".join(_shape(P.F, Y, v) for v in vals) + "]"
    if isinstance(P, CayleyProf):
        sid, args = P.F.decompose(Y**X, p)
        label = P.F.constructors[sid][0] if hasattr(P.F, "constructors") else f"s{sid}"
        return label + "".join(f" {list(decode(a, X, Y))}" for a in args)
    if isinstance(P, HomProf):
        return str(list(decode(p, X, Y)))
    row = P.row(X)
    if row.polynomial:
        sid, args = row.decompose(Y, p)
        return f"shape {sid} {list(args)}"
    return ""


def show_profunctor(P, X: int, Y: int) -> str:
    n = P.card(X, Y)
    lines = [f"{P.name}({X},{Y}): {n} elements"]
    lines += [f"  {p}: {_describe(P, X, Y, p)}".rstrip() for p in range(n)]
    return "\n".join(lines)


def show(name: str, sizes) -> str:
    sizes = list(sizes)
    if name in functor_names():
        return show_functor(library_functor(name), sizes[0] if sizes else 2)
    if name in profunctor_names():
        X, Y = (sizes + [2, 2])[:2] if len(sizes) != 1 else (sizes[0], sizes[0])
        return show_profunctor(library_profunctor(name), X, Y)
    if name in monoid_names():
        M = library_monoid(name)
        point = tuple(sizes[:2]) if M.tag.value == "benabou" else (sizes[0] if sizes else 2)
        if M.tag.value == "benabou" and len(point) < 2:
            point = (point + (2, 2))[:2]
        unit = M.unit_map.component(point)
        return f"{M.name} ({M.tag.value}) at {point}: carrier {unit.cod.card}, unit {list(unit.table)}"
    raise UnknownNameError(f"unknown instance {name!r}; try 'arrowlab list'")


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="arrowlab", description="Exhaustive checks for monoids of computation on finite sets.")
    sub = p.add_subparsers(dest="command", required=True)

    r = sub.add_parser("run", help="run a verification suite")
    r.add_argument("suite_arg", nargs="?", metavar="SUITE", help="suite name (same as --suite)")
    r.add_argument("--suite", default=None, help=f"one of: {', '.join(suite_names())}")
    r.add_argument("--max-obj", type=int, default=2, help="largest object size probed (default 2)")
    r.add_argument("--coend-bound", type=int, default=3, help="truncation bound K for coends (default 3)")
    r.add_argument("--json", metavar="PATH", help="write the report as JSON")
    r.add_argument("--fail-fast", action="store_true", help="skip remaining checks after the first failure")
    r.add_argument("--inject-fault", choices=FAULTS, help="corrupt library instances to exercise the checkers")
    r.add_argument("-q", "--quiet", action="store_true", help="print only the final tally")

    sub.add_parser("list", help="list suites and instances")

    s = sub.add_parser("show", help="print the tables of a library instance")
    s.add_argument("instance")
    s.add_argument("sizes", nargs="*", type=int, help="object size(s), e.g. '2' or '2 2'")
    return p


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    if args.command == "list":
        print("suites:      " + " ".join(suite_names()))
        print("functors:    " + " ".join(functor_names()))
        print("profunctors: " + " ".join(profunctor_names()))
        print("monoids:     " + " ".join(monoid_names()))
        return 0
    if args.command == "show":
        try:
            print(show(args.instance, args.sizes))
        except ArrowlabError as e:
            print(f"error: {e.args[0] if e.args else e}", file=sys.stderr)
            return 2
        return 0

    suite = args.suite or args.suite_arg or "all"
    if suite not in suite_names():
        print(f"error: unknown suite {suite!r}; choose from {', '.join(suite_names())}", file=sys.stderr)
        return 2
    cfg = Config(args.max_obj, args.coend_bound, args.fail_fast, args.inject_fault)
    report = run(suite, cfg)
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(report.as_dict(), fh, indent=2, sort_keys=True)
            fh.write("\n")
    text = report.summary()
    print(text.splitlines()[-1] if args.quiet else text)
    return 0 if report.ok else 1


if __name__ == "__main__":
    sys.exit(main())
