"""Command-line front end.

Exit codes: 0 ok, 1 verification failure, 2 parse error, 3 unsupported input.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import brane, spaces, verify
from .abelian_coulomb import (
    RankTooHighError,
    TorusTheory,
    present_rank1,
    structure_constant_table,
)
from .partitions import (
    Partition,
    centralizer_dim,
    chain_to_orbit,
    orbit_dim,
    transpose,
)

UNSUPPORTED = (
    RankTooHighError,
    brane.UnsupportedDiagramError,
    brane.NonAdmissibleMoveError,
    spaces.NoKnownDualError,
    spaces.UnknownCoulombDimensionError,
    IndexError,
)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sdualkit",
        description="Exact Coulomb-branch presentations, brane-diagram calculus, and S-dual pairs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("coulomb", help="present the Coulomb branch of a torus theory")
    p.add_argument("--table", action="store_true", help="print the structure-constant table")
    p.add_argument("--cutoff", type=int, default=1, help="cocharacter cutoff for --table")
    p.add_argument("--json", action="store_true")
    p.add_argument("input", help="theory JSON file, or - for stdin")

    p = sub.add_parser("diagram", help="operate on a brane diagram")
    p.add_argument("action", choices=("sdual", "hw", "linking"))
    p.add_argument("--json", action="store_true")
    p.add_argument("args", nargs="+", help="[index] diagram-text")

    p = sub.add_parser("orbit", help="nilpotent-orbit combinatorics")
    p.add_argument("action", choices=("chain", "dual", "dims"))
    p.add_argument("--json", action="store_true")
    p.add_argument("args", nargs="+", help="dimension chain or partition")

    p = sub.add_parser("dual", help="S-dual of a space descriptor")
    p.add_argument("--json", action="store_true")
    p.add_argument("input", help="descriptor JSON file, or - for stdin")

    p = sub.add_parser("verify", help="run the verification suite")
    p.add_argument("--filter", default=None, help="run only checks whose name contains this")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("repl", help="interactive diagram manipulation")
    p.add_argument("diagram", help="initial diagram text")

    return parser


def _read_document(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as handle:
        return handle.read()


def _cmd_coulomb(args) -> int:
    theory = TorusTheory.from_json(json.loads(_read_document(args.input)))
    if args.table:
        table = structure_constant_table(theory, cutoff=args.cutoff)
        if args.json:
            payload = [
                {"lam": list(lam), "mu": list(mu), "coefficient": str(poly)}
                for lam, mu, poly in table
            ]
            print(json.dumps({"table": payload, "rank": theory.rank}, sort_keys=True))
        else:
            for lam, mu, poly in table:
                total = tuple(a + b for a, b in zip(lam, mu))
                left = f"r[{','.join(map(str, lam))}] * r[{','.join(map(str, mu))}]"
                right = f"r[{','.join(map(str, total))}]"
                if poly == 1:
                    print(f"{left} = {right}")
                else:
                    print(f"{left} = {poly} {right}")
        return 0
    try:
        presentation = present_rank1(theory)
    except RankTooHighError as exc:
        print(f"error: {exc}; use --table for the structure-constant table", file=sys.stderr)
        return 3
    if args.json:
        print(json.dumps(presentation.to_json(), sort_keys=True))
    else:
        print(str(presentation))
    return 0


def _cmd_diagram(args) -> int:
    if args.action == "hw":
        if len(args.args) != 2:
            raise ValueError("usage: diagram hw <index> <diagram>")
        index = int(args.args[0])
        diagram = brane.BraneDiagram.parse(args.args[1])
        result = brane.hw_move(diagram, index)
        print(json.dumps(result.to_json(), sort_keys=True) if args.json else result.render())
        return 0
    if len(args.args) != 1:
        raise ValueError(f"usage: diagram {args.action} <diagram>")
    diagram = brane.BraneDiagram.parse(args.args[0])
    if args.action == "sdual":
        result = brane.sdual(diagram)
        print(json.dumps(result.to_json(), sort_keys=True) if args.json else result.render())
    else:
        linking = brane.linking_numbers(diagram)
        print(json.dumps(linking.to_json(), sort_keys=True) if args.json else str(linking))
    return 0


def _cmd_orbit(args) -> int:
    if args.action == "chain":
        text = ",".join(args.args)
        dims = [int(tok) for tok in text.replace(",", " ").split()]
        orbit = chain_to_orbit(dims)
        if args.json:
            payload = {
                "n": orbit.n,
                "jordan_type": list(orbit.jordan_type.parts),
                "kind": orbit.kind,
                "dim": orbit.dim,
            }
            print(json.dumps(payload, sort_keys=True))
        else:
            print(str(orbit))
        return 0
    if len(args.args) != 1:
        raise ValueError(f"usage: orbit {args.action} <partition>")
    lam = Partition.parse(args.args[0])
    if args.action == "dual":
        result = transpose(lam)
        print(json.dumps({"partition": list(result.parts)}, sort_keys=True) if args.json else str(result))
    else:
        payload = {
            "partition": list(lam.parts),
            "orbit_dim": orbit_dim(lam),
            "centralizer_dim": centralizer_dim(lam),
        }
        if args.json:
            print(json.dumps(payload, sort_keys=True))
        else:
            print(f"orbit_dim {payload['orbit_dim']}  centralizer_dim {payload['centralizer_dim']}")
    return 0


def _cmd_dual(args) -> int:
    data = json.loads(_read_document(args.input))
    if isinstance(data, dict) and "rank" in data and "kind" not in data:
        descriptor = spaces.SpaceDescriptor.cotangent_of_rep(theory=TorusTheory.from_json(data))
    else:
        descriptor = spaces.SpaceDescriptor.from_json(data)
    dual = spaces.sdual_pair(descriptor)
    print(json.dumps(dual.to_json(), sort_keys=True) if args.json else str(dual))
    return 0


def _cmd_verify(args) -> int:
    results = verify.run_checks(name_filter=args.filter, seed=args.seed)
    ok = all(r.passed for r in results)
    if args.json:
        payload = {
            "seed": verify.resolve_seed(args.seed),
            "checks": [{"name": r.name, "passed": r.passed, "detail": r.detail} for r in results],
            "passed": ok,
        }
        print(json.dumps(payload, sort_keys=True))
    else:
        for r in results:
            print(f"{'PASS' if r.passed else 'FAIL'} {r.name}: {r.detail}")
        print(f"{sum(r.passed for r in results)}/{len(results)} checks passed")
    return 0 if ok and results else 1


def run_repl(initial: brane.BraneDiagram, in_stream, out) -> int:
    """Line-command loop over a move history: hw <i>, sdual, linking, dims, undo, quit."""
    history = [initial]

    def show() -> None:
        out.write(history[-1].render() + "\n")
        out.write(str(brane.linking_numbers(history[-1])) + "\n")

    show()
    for line in in_stream:
        tokens = line.split()
        if not tokens:
            continue
        op = tokens[0]
        if op == "quit":
            break
        try:
            if op == "hw":
                if len(tokens) != 2:
                    raise ValueError("usage: hw <index>")
                history.append(brane.hw_move(history[-1], int(tokens[1])))
            elif op == "sdual":
                history.append(brane.sdual(history[-1]))
            elif op == "undo":
                if len(history) == 1:
                    raise ValueError("nothing to undo")
                history.pop()
            elif op == "dims":
                out.write(" ".join(str(d) for d in history[-1].dims) + "\n")
            elif op == "linking":
                pass
            else:
                raise ValueError(f"unknown command {op!r}")
        except (ValueError, IndexError) as exc:
            out.write(f"error: {exc}\n")
            continue
        show()
    return 0


def _cmd_repl(args) -> int:
    diagram = brane.BraneDiagram.parse(args.diagram)
    return run_repl(diagram, sys.stdin, sys.stdout)


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    handlers = {
        "coulomb": _cmd_coulomb,
        "diagram": _cmd_diagram,
        "orbit": _cmd_orbit,
        "dual": _cmd_dual,
        "verify": _cmd_verify,
        "repl": _cmd_repl,
    }
    try:
        return handlers[args.command](args)
    except UNSUPPORTED as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (json.JSONDecodeError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
