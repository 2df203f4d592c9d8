"""Command-line front end.

Exit codes: 0 ok, 1 a check or query answered negatively, 2 usage or
argument error, 3 parse error, 4 pseudo-transitivity violation, 5 size
guard exceeded, 6 internal invariant failure.
"""

from __future__ import annotations

import argparse
import itertools
import sys
from collections.abc import Iterator

from . import adversary, bench, oracle, predicates
from .engine import SmartReorienter
from .errors import InvariantError, ParseError, PseudoTransitivityError, ResourceGuardError
from .formats import ODELTA_HEADER, OGRAPH_HEADER, format_odelta, format_ograph, iter_odelta, parse_ograph
from .generators import FIXTURE_NAMES, fixture, random_pseudo_transitive
from .ograph import Ght, OGraph, check_ght, is_pseudo_transitive

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_PARSE = 3
EXIT_PSEUDO_TRANSITIVITY = 4
EXIT_RESOURCE = 5
EXIT_INTERNAL = 6


class UsageError(Exception):
    pass


def _open(path: str):
    return sys.stdin if path == "-" else open(path)


def _read_graph(path: str, order_path: str | None = None, need_order: bool = False):
    with _open(path) as f:
        g, order = parse_ograph(f.read())
    if order_path is not None:
        with _open(order_path) as f:
            og, order = parse_ograph(f.read())
        if og.n != g.n:
            raise UsageError(f"order file has n={og.n}, graph has n={g.n}")
        if order is None:
            order = OGraph(g.n)
    if need_order and order is None:
        raise UsageError("an order is required: add 'o' lines or pass an order file")
    return g, order


def _deltas(stream) -> Iterator:
    """Delta stream from either format; an ograph document is replayed in id order."""
    lines = iter(stream)
    pending = []
    for line in lines:
        s = line.strip()
        if not s or s.startswith("#"):
            pending.append(line)
            continue
        pending.append(line)
        if s == OGRAPH_HEADER:
            g, _ = parse_ograph(pending + list(lines))
            yield from g.deltas()
            return
        break
    if not pending:
        return
    yield from iter_odelta(itertools.chain(pending, lines))


def cmd_reorient(args, out) -> int:
    eng = SmartReorienter(paranoid=args.paranoid)
    with _open(args.input) as f:
        for d in _deltas(f):
            res = eng.extend(d)
            if not args.quiet:
                for u, v in res.pairs():
                    print(f"o {u} {v}", file=out)
            if args.ack:
                print(f"ok {d.x}", file=out)
            out.flush()
    if args.verify:
        v = check_ght(eng.ght())
        if v is not None:
            raise InvariantError(v, f"final order is not a transitive reorientation: {v}")
        print("GHT ok", file=sys.stderr)
    return EXIT_OK


_ORDER_CHECKS = {"ght", "phi", "psi", "theta", "sigma", "lazy"}


def _verdict(which: str, g, order) -> str:
    if which == "pt":
        v = is_pseudo_transitive(g)
    elif which == "ght":
        v = check_ght(Ght(g, order))
        if v is not None:
            return f"GHT fail {v}"
    else:
        v = predicates.CHECKS[which](Ght(g, order))
    tag = which.upper()
    return f"{tag} ok" if v is None else f"{tag} fail " + " ".join(map(str, v.witnesses))


def cmd_check(args, out) -> int:
    names = ["pt", "ght", "phi", "psi", "theta", "sigma", "lazy"] if args.which == "all" else [args.which]
    need = any(n in _ORDER_CHECKS for n in names)
    g, order = _read_graph(args.file, args.order, need_order=need)
    failed = False
    for name in names:
        line = _verdict(name, g, order)
        failed |= " fail" in line
        print(line, file=out)
    return EXIT_FAIL if failed else EXIT_OK


def cmd_witness(args, out) -> int:
    g, _ = _read_graph(args.file)
    arity = 3 if args.kind in ("phi", "psi") else 4
    if len(args.vertices) != arity:
        raise UsageError(f"{args.kind} takes {arity} vertices")
    fn = getattr(predicates, f"{args.kind}_witness")
    w = fn(g, *args.vertices)
    if w is None:
        print("chain none", file=out)
        return EXIT_FAIL
    print("chain " + " ".join(map(str, w.chain)), file=out)
    return EXIT_OK


def cmd_gen(args, out) -> int:
    if args.fixture:
        g, order = fixture(args.fixture)
        out.write(format_ograph(g, order))
        return EXIT_OK
    if args.n is None:
        raise UsageError("gen needs --n or --fixture")
    out.write(format_ograph(random_pseudo_transitive(args.n, args.density, args.flips, args.seed)))
    return EXIT_OK


_BREAKERS = {
    "break-phi": (adversary.break_phi, 3),
    "break-psi": (adversary.break_psi, 3),
    "break-theta": (adversary.break_theta, 4),
    "break-sigma": (adversary.break_sigma, 4),
}


def cmd_adversary(args, out) -> int:
    fn, arity = _BREAKERS[args.action]
    if len(args.vertices) != arity:
        raise UsageError(f"{args.action} takes {arity} vertices")
    g, order = _read_graph(args.file, args.order, need_order=True)
    d = fn(Ght(g, order), *args.vertices)
    print(ODELTA_HEADER, file=out)
    print(format_odelta(d), file=out)
    return EXIT_OK


def cmd_oracle(args, out) -> int:
    if args.action == "extendible":
        g, order = _read_graph(args.file, args.order_file, need_order=True)
        ok, d = oracle.is_extendible(Ght(g, order))
        if ok:
            print("EXTENDIBLE yes", file=out)
            return EXIT_OK
        print("EXTENDIBLE no", file=out)
        print(format_odelta(d), file=out)
        return EXIT_FAIL
    graphs = oracle.exhaustive_pseudo_transitive(args.n)
    count = 0
    for g in graphs:
        count += 1
        if args.emit:
            out.write(format_ograph(g) + "\n")
    print(f"count {count}", file=out)
    return EXIT_OK


def cmd_bench(args, out) -> int:
    rows = bench.bench(args.n, args.density, args.flips, args.seed, reps=args.reps)
    bench.write_csv(rows, out)
    for small, large, step, total in bench.doubling_ratios(rows):
        print(f"# {small}->{large}: step x{step:.2f}, total x{total:.2f}", file=sys.stderr)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="smartorient", description="On-line transitive reorientation of pseudo-transitive ographs.")
    sub = p.add_subparsers(dest="command", required=True)

    r = sub.add_parser("reorient", help="stream deltas (or an ograph file) through the smart engine")
    r.add_argument("input", nargs="?", default="-")
    r.add_argument("--paranoid", action="store_true", help="re-check laziness and Phi/Psi/Theta after every step")
    r.add_argument("--verify", action="store_true", help="check the final order is a transitive reorientation")
    r.add_argument("--quiet", action="store_true", help="suppress 'o' lines")
    r.add_argument("--ack", action="store_true", help="print 'ok <x>' after each step")
    r.set_defaults(func=cmd_reorient)

    c = sub.add_parser("check", help="run one checker and print a verdict line")
    c.add_argument("which", choices=["pt", "ght", "phi", "psi", "theta", "sigma", "lazy", "all"])
    c.add_argument("file")
    c.add_argument("order", nargs="?", help="order file, if the graph file has no 'o' lines")
    c.set_defaults(func=cmd_check)

    w = sub.add_parser("witness", help="search a witness chain")
    w.add_argument("kind", choices=["phi", "psi", "theta", "sigma"])
    w.add_argument("file")
    w.add_argument("vertices", nargs="+", type=int)
    w.set_defaults(func=cmd_witness)

    gen = sub.add_parser("gen", help="emit a random pseudo-transitive ograph or a fixture")
    gen.add_argument("--n", type=int)
    gen.add_argument("--density", type=float, default=0.3)
    gen.add_argument("--flips", type=float, default=0.3)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--fixture", choices=FIXTURE_NAMES)
    gen.set_defaults(func=cmd_gen)

    a = sub.add_parser("adversary", help="build a one-vertex extension that defeats the given order")
    a.add_argument("action", choices=sorted(_BREAKERS))
    a.add_argument("file")
    a.add_argument("vertices", nargs="+", type=int)
    a.add_argument("--order", help="order file, if the graph file has no 'o' lines")
    a.set_defaults(func=cmd_adversary)

    o = sub.add_parser("oracle", help="brute-force queries")
    osub = o.add_subparsers(dest="action", required=True)
    oe = osub.add_parser("extendible")
    oe.add_argument("file")
    oe.add_argument("order_file", nargs="?")
    oe.set_defaults(func=cmd_oracle)
    on = osub.add_parser("enumerate")
    on.add_argument("n", type=int)
    on.add_argument("--emit", action="store_true", help="print every graph, not just the count")
    on.set_defaults(func=cmd_oracle)

    b = sub.add_parser("bench", help="time the engine; CSV on stdout")
    b.add_argument("--n", type=int, nargs="+", default=[250, 500, 1000])
    b.add_argument("--density", type=float, default=0.5)
    b.add_argument("--flips", type=float, default=0.3)
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--reps", type=int, default=3)
    b.set_defaults(func=cmd_bench)
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except ParseError as e:
        print(f"error: parse: {e}", file=sys.stderr)
        return EXIT_PARSE
    except PseudoTransitivityError as e:
        print(f"error: {e.violation}", file=sys.stderr)
        return EXIT_PSEUDO_TRANSITIVITY
    except ResourceGuardError as e:
        print(f"error: resource guard: {e}", file=sys.stderr)
        return EXIT_RESOURCE
    except InvariantError as e:
        print(f"error: internal: {e}", file=sys.stderr)
        return EXIT_INTERNAL
    except (UsageError, ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
