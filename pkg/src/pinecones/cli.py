"""Command-line interface.

    pinecones count -i 6 -j 2 -k 5 -l 3 -n 25          -> 167741
    pinecones sequence --preset aztec -N 5             -> 1 1 2 8 64 1024
    pinecones build --preset somos4 -n 12 --vax
    pinecones verify --condensation --width-max 7
    pinecones vax decode tests/data/p25_6253.vax
    pinecones sample --preset somos4 -n 20 --seed 7 --svg out.svg

Exit status: 0 success, 1 verification failure, 2 usage error,
3 guardrail exceeded.  Output depends only on arguments and input files.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from .condensation import (
    DEFAULT_WORK_BUDGET,
    bivariate_q,
    verify_condensation_full,
    verify_condensation_interleaved,
    verify_kuo,
)
from .errors import GuardrailExceeded, PineconeError, VaxParseError
from .galerobinson import (
    GRParams,
    build_direct,
    check_interleaving,
    check_sub_pinecone_identities,
    normalize_params,
    shift_identity_failures,
)
from .grid import GridGraph
from .matching import count_matchings, enumerate_matchings
from .pinecone import Pinecone, closed_pinecones, is_interleaved, to_grid_graph
from .sampler import MatchingSampler, SamplerConfig, render_tiling
from .sequences import cross_check_combinatorial, gr_poly_sequence, gr_sequence
from .vax import read_vax, vax_encode, write_vax

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_GUARDRAIL = 0, 1, 2, 3

PRESETS = {
    "somos4": (3, 1, 2, 2),
    "somos5": (4, 1, 3, 2),
    "aztec": (1, 1, 1, 1),
}

# Parameter sets swept by `verify --shift` / `--interleaving` without -i/-j/-k/-l.
DEFAULT_SWEEP = (
    (1, 1, 1, 1), (2, 1, 2, 1), (2, 1, 1, 2), (3, 1, 2, 2), (4, 1, 3, 2),
    (5, 2, 3, 4), (6, 2, 5, 3), (5, 1, 3, 3), (7, 2, 5, 4), (8, 3, 6, 5),
)


class UsageError(Exception):
    pass


def load_config(path: str | Path) -> dict[str, tuple[int, int, int, int]]:
    """Named parameter sets from ``name = i,j,k,l`` lines; ``#`` starts a comment."""
    out = {}
    for lineno, raw in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        name, sep, value = line.partition("=")
        try:
            if not sep:
                raise ValueError
            vals = tuple(int(v) for v in value.replace(",", " ").split())
            if len(vals) != 4:
                raise ValueError
        except ValueError:
            raise UsageError(f"{path}:{lineno}: expected 'name = i,j,k,l'") from None
        out[name.strip()] = vals
    return out


def _params(args, required: bool = True) -> GRParams | None:
    presets = dict(PRESETS)
    if args.config:
        presets.update(load_config(args.config))
    explicit = [args.i, args.j, args.k, args.l]
    if args.preset is not None:
        if any(v is not None for v in explicit):
            raise UsageError("give either --preset or -i/-j/-k/-l, not both")
        if args.preset not in presets:
            raise UsageError(f"unknown preset {args.preset!r}; known: {', '.join(sorted(presets))}")
        return normalize_params(*presets[args.preset])
    if all(v is None for v in explicit):
        if required:
            raise UsageError("parameters -i -j -k -l (or --preset) are required")
        return None
    if any(v is None for v in explicit):
        raise UsageError("all four of -i -j -k -l are required")
    return normalize_params(*explicit)


def _need(value, flag: str):
    if value is None:
        raise UsageError(f"{flag} is required")
    return value


def _pinecone(args) -> Pinecone:
    return build_direct(_params(args), _need(args.n, "-n"))


def _graph(args) -> GridGraph:
    if getattr(args, "input", None):
        return read_vax(args.input)
    return to_grid_graph(_pinecone(args))


def _emit(args, text: str, data) -> None:
    if args.json:
        print(json.dumps(data, sort_keys=False))
    else:
        print(text)


def _edge_json(e) -> list[list[int]]:
    return [[e.a.x, e.a.y], [e.b.x, e.b.y]]


# -- verbs ----------------------------------------------------------------------


def cmd_build(args) -> int:
    params = _params(args)
    n = _need(args.n, "-n")
    p = build_direct(params, n)
    g = to_grid_graph(p)
    if args.vax:
        _emit(args, vax_encode(g).text, {"vax": list(vax_encode(g).lines)})
        return EXIT_OK
    data = {
        "params": list(params.astuple()),
        "n": n,
        "root": list(p.root),
        "width": p.width,
        "lengths": {str(h): length for h, length in p.lengths},
        "odd_edges": sorted([list(v) for v in p.odd_edges]),
        "vertices": len(g.vertices),
        "edges": len(g.edges),
    }
    _emit(args, str(p), data)
    return EXIT_OK


def cmd_count(args) -> int:
    g = _graph(args)
    total = count_matchings(g)
    _emit(args, str(total), {"count": total})
    return EXIT_OK


def cmd_enumerate(args) -> int:
    g = _graph(args)
    matchings = enumerate_matchings(g, limit=args.limit)
    if args.json:
        print(json.dumps({"count": len(matchings),
                          "matchings": [[_edge_json(e) for e in m] for m in matchings]}))
    else:
        for m in matchings:
            print(" ".join(str(e) for e in m))
    return EXIT_OK


def cmd_sequence(args) -> int:
    seq = gr_sequence(_params(args), _need(args.N, "-N"))
    _emit(args, " ".join(map(str, seq.terms)), {"params": list(seq.params.astuple()), "terms": list(seq.terms)})
    return EXIT_OK


def cmd_polys(args) -> int:
    params = _params(args)
    N = _need(args.N, "-N")
    if args.refined:
        polys = [bivariate_q(build_direct(params, n)) for n in range(N + 1)]
        label = "q"
    else:
        polys = list(gr_poly_sequence(params, N).terms)
        label = "p"
    lines = [f"{label}({n}) = {poly}" for n, poly in enumerate(polys)]
    _emit(args, "\n".join(lines), {"params": list(params.astuple()), "polynomials": [q.to_json() for q in polys]})
    return EXIT_OK


def _report(results: list[tuple[str, bool, str]], args) -> int:
    ok = all(r[1] for r in results)
    if args.json:
        print(json.dumps({"ok": ok, "checks": [{"name": n, "ok": v, "detail": d} for n, v, d in results]}))
    else:
        for name, passed, detail in results:
            print(f"{'PASS' if passed else 'FAIL'} {name}" + (f": {detail}" if detail else ""))
    return EXIT_OK if ok else EXIT_FAILED


def cmd_verify(args) -> int:
    chosen = {
        "kuo": args.kuo, "condensation": args.condensation, "shift": args.shift,
        "interleaving": args.interleaving, "sub_pinecones": args.sub_pinecones,
        "cross_check": args.cross_check,
    }
    if not any(chosen.values()):
        chosen = dict.fromkeys(chosen, True)
    params = _params(args, required=False)
    budget = None if args.budget == 0 else args.budget
    results: list[tuple[str, bool, str]] = []

    if chosen["kuo"]:
        for w in range(5, max(args.width_max, 5) + 1, 2):
            results.append((f"kuo width {w}", verify_kuo(w), ""))

    if chosen["condensation"]:
        if params is not None and args.n is not None:
            p = build_direct(params, args.n)
            results.append((f"condensation P({args.n};{params})", verify_condensation_full(p, budget), ""))
            if is_interleaved(p):
                results.append((f"interleaved condensation P({args.n};{params})",
                                verify_condensation_interleaved(p, budget), ""))
        else:
            checked, failed = 0, []
            for p in closed_pinecones(args.width_max):
                if p.is_empty:
                    continue
                checked += 1
                if not verify_condensation_full(p, budget):
                    failed.append(str(p))
            detail = f"{checked} pinecones" + (f", first failure {failed[0]}" if failed else "")
            results.append((f"condensation width <= {args.width_max}", not failed, detail))

    sweep = [params] if params is not None else [normalize_params(*s) for s in DEFAULT_SWEEP]
    n_max = args.n if args.n is not None else 60

    if chosen["shift"]:
        for s in sweep:
            bad = next(shift_identity_failures(s, range(n_max + 1)), None)
            results.append((f"shift identities {s} n <= {n_max}", bad is None, "" if bad is None else str(bad)))

    if chosen["interleaving"]:
        for s in sweep:
            bad = next((n for n in range(n_max + 1) if not check_interleaving(s, n)), None)
            results.append((f"interleaving {s} n <= {n_max}", bad is None, "" if bad is None else f"n = {bad}"))

    if chosen["sub_pinecones"]:
        for s in sweep:
            top = min(n_max, s.m + 8)
            bad = next((n for n in range(s.m, top + 1) if not check_sub_pinecone_identities(s, n)), None)
            results.append((f"sub-pinecone identities {s} n <= {top}", bad is None, "" if bad is None else f"n = {bad}"))

    if chosen["cross_check"]:
        for s in sweep:
            top = min(n_max, s.m + 8)
            cc = cross_check_combinatorial(s, top)
            results.append((f"counts and polynomials {s} n <= {top}", cc.ok, cc.detail))

    return _report(results, args)


def cmd_vax(args) -> int:
    if args.action == "decode":
        g = read_vax(args.file)
        total = count_matchings(g)
        data = {"vertices": len(g.vertices), "edges": len(g.edges), "count": total}
        _emit(args, f"vertices {len(g.vertices)}\nedges {len(g.edges)}\nmatchings {total}", data)
        return EXIT_OK
    g = to_grid_graph(_pinecone(args))
    if args.output:
        write_vax(g, args.output)
    else:
        print(vax_encode(g).text)
    return EXIT_OK


def _sample(args):
    g = _graph(args)
    sampler = MatchingSampler(g)
    m = sampler.sample(SamplerConfig(seed=args.seed))
    return g, sampler, m


def cmd_sample(args) -> int:
    g, sampler, m = _sample(args)
    if args.svg:
        render_tiling(g, m, scale=args.scale).save(args.svg)
    prob = sampler.probability(m)
    if args.json:
        print(json.dumps({"seed": args.seed, "probability": str(prob),
                          "edges": [_edge_json(e) for e in m]}))
    else:
        print(f"probability {prob}")
        for e in m:
            print(e)
    return EXIT_OK


def cmd_render(args) -> int:
    g, _, m = _sample(args)
    image = render_tiling(g, m, scale=args.scale)
    image.save(args.svg)
    _emit(args, f"wrote {args.svg} ({image.width}x{image.height})",
          {"svg": str(args.svg), "width": image.width, "height": image.height})
    return EXIT_OK


# -- parser ---------------------------------------------------------------------


def _seed(text: str) -> int:
    value = int(text, 0)
    if not 0 <= value < 2**64:
        raise argparse.ArgumentTypeError("seed must be in [0, 2^64)")
    return value


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    g = common.add_argument_group("parameters")
    for flag in "ijkl":
        g.add_argument(f"-{flag}", type=int, dest=flag)
    g.add_argument("-n", type=int, help="pinecone index")
    g.add_argument("-N", type=int, help="last sequence index")
    g.add_argument("--preset", help="named parameter set: somos4, somos5, aztec or one from --config")
    g.add_argument("--config", help="file of 'name = i,j,k,l' lines")
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--threads", type=_positive, default=1,
                        help="worker threads; results do not depend on this")

    parser = argparse.ArgumentParser(prog="pinecones", description="Pinecones and Gale-Robinson sequences.")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("build", parents=[common], help="describe P(n;i,j,k,l)")
    p.add_argument("--vax", action="store_true", help="print the VAX document")
    p.set_defaults(func=cmd_build)

    for name, func, helptext in (("count", cmd_count, "number of perfect matchings"),
                                 ("enumerate", cmd_enumerate, "list perfect matchings")):
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("--input", help="read the graph from a VAX file instead")
        p.set_defaults(func=func)
        if name == "enumerate":
            p.add_argument("--limit", type=_positive, default=10**6)

    p = sub.add_parser("sequence", parents=[common], help="a(0..N)")
    p.set_defaults(func=cmd_sequence)

    p = sub.add_parser("polys", parents=[common], help="p(0..N; w, z)")
    p.add_argument("--refined", action="store_true",
                   help="print q(n; u, v) counted on the pinecones instead")
    p.set_defaults(func=cmd_polys)

    p = sub.add_parser("verify", parents=[common], help="check identities; all when no check is named")
    p.add_argument("--kuo", action="store_true")
    p.add_argument("--condensation", action="store_true")
    p.add_argument("--shift", action="store_true")
    p.add_argument("--interleaving", action="store_true")
    p.add_argument("--sub-pinecones", action="store_true", dest="sub_pinecones")
    p.add_argument("--cross-check", action="store_true", dest="cross_check")
    p.add_argument("--width-max", type=int, default=7, dest="width_max")
    p.add_argument("--budget", type=int, default=DEFAULT_WORK_BUDGET,
                   help="largest polynomial expansion per identity; 0 for no limit")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("vax", help="VAX files")
    actions = p.add_subparsers(dest="action", required=True)
    q = actions.add_parser("encode", parents=[common], help="write the VAX document of P(n)")
    q.add_argument("-o", "--output", help="file to write; standard output if omitted")
    q.set_defaults(func=cmd_vax)
    q = actions.add_parser("decode", parents=[common], help="read a VAX file and count its matchings")
    q.add_argument("file")
    q.set_defaults(func=cmd_vax)

    for name, func in (("sample", cmd_sample), ("render", cmd_render)):
        p = sub.add_parser(name, parents=[common], help="uniform random matching" if name == "sample"
                           else "draw a random tiling as SVG")
        p.add_argument("--input", help="read the graph from a VAX file instead")
        p.add_argument("--seed", type=_seed, default=0)
        p.add_argument("--svg", required=name == "render", help="write the tiling here")
        p.add_argument("--scale", type=_positive, default=12)
        p.set_defaults(func=func)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"pinecones: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except GuardrailExceeded as exc:
        print(f"pinecones: guardrail exceeded: {exc}", file=sys.stderr)
        return EXIT_GUARDRAIL
    except VaxParseError as exc:
        print(f"pinecones: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, OSError) as exc:
        # InvalidArgument and friends are ValueErrors: bad input, not a failed check.
        print(f"pinecones: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except PineconeError as exc:
        print(f"pinecones: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAILED


if __name__ == "__main__":
    sys.exit(main())
