"""Command line front end.

Exit codes are uniform across verbs: 0 means YES/PASS, 1 means NO/FAIL,
2 means a usage or input error, 3 means the solver stopped before reaching
a decision.  Output is line-oriented so runs can be scripted.
"""

from __future__ import annotations

import argparse
import sys

from .cuts import STRUCTURE, SUBSTRUCTURE, is_structure_cut, is_substructure_cut
from .formats import (
    ParseError,
    parse_3dm,
    parse_cut,
    parse_graph,
    write_3dm,
    write_cut,
    write_graph,
    write_roles,
)
from .generate import gen_random_3dm, gen_random_graph
from .npsolve import VertexCoverInstance, solve_3dm, solve_vertex_cover
from .reduce import extract_cover, extract_matching, reduce_3dm, reduce_vertex_cover
from .solver import (
    ORACLE_SIZE_CAP,
    SearchOptions,
    oracle_connectivity,
    structure_connectivity,
    substructure_connectivity,
)

EXIT_YES = 0
EXIT_NO = 1
EXIT_ERROR = 2
EXIT_INCONCLUSIVE = 3


def _read(path: str) -> str:
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _write(path: str, text: str):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def _options(args) -> SearchOptions:
    return SearchOptions(
        strict_trivial=getattr(args, "strict_trivial", False),
        induced=getattr(args, "induced", False),
        workers=getattr(args, "threads", 1),
        time_limit=getattr(args, "time_limit", None),
    )


def _print_result(kind: str, m: int, res) -> int:
    value = "none" if res.value is None else str(res.value)
    print(f"kappa {kind} {m} = {value}")
    if res.certificate is not None:
        sys.stdout.write(write_cut(res.certificate))
        return EXIT_YES
    return EXIT_NO if res.complete else EXIT_INCONCLUSIVE


def _cmd_solve(args) -> int:
    g = parse_graph(_read(args.graph))
    if args.sub:
        res = substructure_connectivity(g, args.M, args.tmax, _options(args))
        return _print_result(SUBSTRUCTURE, args.M, res)
    res = structure_connectivity(g, args.M, args.tmax, _options(args))
    return _print_result(STRUCTURE, args.M, res)


def _cmd_verify(args) -> int:
    g = parse_graph(_read(args.graph))
    family = parse_cut(_read(args.cut))
    for star in family.elements:
        for v in star.vertices():
            if v >= g.n:
                raise ValueError(
                    f"cut references vertex {v + 1} but the graph has {g.n} vertices"
                )
    check = is_structure_cut if family.kind == STRUCTURE else is_substructure_cut
    ok = check(
        g, family, family.m, strict_trivial=args.strict_trivial, induced=args.induced
    )
    print("YES" if ok else "NO")
    return EXIT_YES if ok else EXIT_NO


def _cmd_reduce_3dm(args) -> int:
    inst = parse_3dm(_read(args.infile))
    red = reduce_3dm(
        inst,
        args.M,
        allow_small_m=args.allow_small_m,
        allow_unrestricted=args.allow_unrestricted,
    )
    _write(args.out_prefix + ".graph", write_graph(red.graph))
    _write(args.out_prefix + ".roles", write_roles(red.roles))
    print(
        f"wrote {args.out_prefix}.graph {args.out_prefix}.roles"
        f" ({red.graph.n} vertices, {red.graph.edge_count} edges, target {red.parameter})"
    )
    return EXIT_YES


def _cmd_reduce_vc(args) -> int:
    g = parse_graph(_read(args.graph))
    inst = VertexCoverInstance(g, args.k)
    red = reduce_vertex_cover(inst, args.M)
    _write(args.out_prefix + ".graph", write_graph(red.graph))
    _write(args.out_prefix + ".roles", write_roles(red.roles))
    print(
        f"wrote {args.out_prefix}.graph {args.out_prefix}.roles"
        f" ({red.graph.n} vertices, {red.graph.edge_count} edges, target {red.parameter})"
    )
    return EXIT_YES


def _cmd_oracle_3dm(args) -> int:
    inst = parse_3dm(_read(args.infile))
    found = solve_3dm(inst)
    if found is None:
        print("matching none")
        return EXIT_NO
    print("matching " + " ".join(str(i + 1) for i in found))
    return EXIT_YES


def _cmd_oracle_vc(args) -> int:
    g = parse_graph(_read(args.graph))
    found = solve_vertex_cover(VertexCoverInstance(g, args.k))
    if found is None:
        print("cover none")
        return EXIT_NO
    print("cover " + " ".join(str(v + 1) for v in found))
    return EXIT_YES


def _cmd_oracle_kappa(args) -> int:
    g = parse_graph(_read(args.graph))
    kind = SUBSTRUCTURE if args.sub else STRUCTURE
    res = oracle_connectivity(
        g,
        args.M,
        kind,
        args.tmax,
        strict_trivial=args.strict_trivial,
        induced=args.induced,
        size_cap=args.size_cap,
    )
    return _print_result(kind, args.M, res)


def _gadget_decision(res) -> str:
    if res.value is not None:
        return "YES"
    return "NO" if res.complete else "INCONCLUSIVE"


def _report(source_yes: bool, gadget: str, out_prefix, red) -> int:
    source = "YES" if source_yes else "NO"
    if gadget == "INCONCLUSIVE":
        verdict = "INCONCLUSIVE"
    elif (gadget == "YES") == source_yes:
        verdict = "PASS"
    else:
        verdict = "FAIL"
    lines = [f"decision-source {source}", f"decision-gadget {gadget}", f"verdict {verdict}"]
    for line in lines:
        print(line)
    if out_prefix:
        _write(out_prefix + ".graph", write_graph(red.graph))
        _write(out_prefix + ".roles", write_roles(red.roles))
        _write(out_prefix + ".report", "\n".join(lines) + "\n")
    if verdict == "PASS":
        return EXIT_YES
    return EXIT_NO if verdict == "FAIL" else EXIT_INCONCLUSIVE


def _cmd_roundtrip_3dm(args) -> int:
    inst = parse_3dm(_read(args.infile))
    red = reduce_3dm(
        inst,
        args.M,
        allow_small_m=args.allow_small_m,
        allow_unrestricted=args.allow_unrestricted,
    )
    source = solve_3dm(inst)
    res = structure_connectivity(red.graph, red.m, inst.n, _options(args))
    if res.certificate is not None:
        decoded = extract_matching(red, res.certificate)
        if decoded is None:
            print("decode none")
        else:
            print("decode " + " ".join(str(i + 1) for i in decoded))
    return _report(source is not None, _gadget_decision(res), args.out_prefix, red)


def _cmd_roundtrip_vc(args) -> int:
    g = parse_graph(_read(args.graph))
    inst = VertexCoverInstance(g, args.k)
    red = reduce_vertex_cover(inst, args.M)
    source = solve_vertex_cover(inst)
    res = substructure_connectivity(red.graph, red.m, args.k, _options(args))
    if res.certificate is not None:
        decoded = extract_cover(red, res.certificate)
        if decoded is None:
            print("decode none")
        else:
            print("decode " + " ".join(str(v + 1) for v in decoded))
    return _report(source is not None, _gadget_decision(res), args.out_prefix, red)


def _emit(text: str, out) -> int:
    if out:
        _write(out, text)
    else:
        sys.stdout.write(text)
    return EXIT_YES


def _cmd_gen_graph(args) -> int:
    g = gen_random_graph(args.n, args.p, args.seed)
    return _emit(write_graph(g), args.out)


def _cmd_gen_3dm(args) -> int:
    inst = gen_random_3dm(args.n, args.extra, not args.unsolvable, args.seed)
    return _emit(write_3dm(inst), args.out)


def _add_solver_flags(p, with_threads=True):
    p.add_argument("--strict-trivial", action="store_true",
                   help="only a 1-vertex remainder counts as trivial")
    p.add_argument("--induced", action="store_true",
                   help="require star leaves to be pairwise non-adjacent")
    if with_threads:
        p.add_argument("--threads", type=int, default=1,
                       help="worker processes for the search (default 1)")
        p.add_argument("--time-limit", type=float, default=None, metavar="SECONDS",
                       help="give up and report inconclusive after this long")


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="starcut",
        description="star-based structure connectivity: exact solver, verifiers, "
        "hardness gadgets, brute-force oracles",
    )
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="exact connectivity value plus certificate")
    p.add_argument("--graph", required=True, help="graph file")
    p.add_argument("--M", type=int, required=True, help="leaves per star")
    p.add_argument("--sub", action="store_true",
                   help="substructure variant (stars may have fewer leaves)")
    p.add_argument("--tmax", type=int, required=True, help="largest family size to try")
    _add_solver_flags(p)
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("verify", help="check a cut file against a graph")
    p.add_argument("--graph", required=True)
    p.add_argument("--cut", required=True)
    p.add_argument("--strict-trivial", action="store_true")
    p.add_argument("--induced", action="store_true")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("reduce-3dm", help="matching instance -> structure gadget")
    p.add_argument("--in", dest="infile", required=True, help="3dm instance file")
    p.add_argument("--M", type=int, default=5, help="leaves per star (default 5)")
    p.add_argument("--out-prefix", required=True)
    p.add_argument("--allow-unrestricted", action="store_true",
                   help="skip the occurrence-count restriction check")
    p.add_argument("--allow-small-m", action="store_true",
                   help="permit M = 4 (default insists on M >= 5)")
    p.set_defaults(func=_cmd_reduce_3dm)

    p = sub.add_parser("reduce-vc", help="cover instance -> substructure gadget")
    p.add_argument("--graph", required=True)
    p.add_argument("--k", type=int, required=True, help="cover budget")
    p.add_argument("--M", type=int, default=None,
                   help="leaves per star; must equal the max degree (the default)")
    p.add_argument("--out-prefix", required=True)
    p.set_defaults(func=_cmd_reduce_vc)

    p = sub.add_parser("oracle", help="independent brute-force references")
    osub = p.add_subparsers(dest="mode", required=True)

    q = osub.add_parser("3dm", help="exhaustive matching search")
    q.add_argument("--in", dest="infile", required=True)
    q.set_defaults(func=_cmd_oracle_3dm)

    q = osub.add_parser("vc", help="exhaustive cover search")
    q.add_argument("--graph", required=True)
    q.add_argument("--k", type=int, required=True)
    q.set_defaults(func=_cmd_oracle_vc)

    q = osub.add_parser("kappa", help="connectivity by subset enumeration")
    q.add_argument("--graph", required=True)
    q.add_argument("--M", type=int, required=True)
    q.add_argument("--sub", action="store_true")
    q.add_argument("--tmax", type=int, required=True)
    q.add_argument("--size-cap", type=int, default=ORACLE_SIZE_CAP,
                   help=f"largest removal set to enumerate (default {ORACLE_SIZE_CAP})")
    q.add_argument("--strict-trivial", action="store_true")
    q.add_argument("--induced", action="store_true")
    q.set_defaults(func=_cmd_oracle_kappa)

    p = sub.add_parser("roundtrip",
                       help="source decision vs gadget decision, with decode")
    rsub = p.add_subparsers(dest="mode", required=True)

    q = rsub.add_parser("3dm")
    q.add_argument("--in", dest="infile", required=True)
    q.add_argument("--M", type=int, default=5)
    q.add_argument("--allow-unrestricted", action="store_true")
    q.add_argument("--allow-small-m", action="store_true")
    q.add_argument("--out-prefix", default=None)
    _add_solver_flags(q)
    q.set_defaults(func=_cmd_roundtrip_3dm)

    q = rsub.add_parser("vc")
    q.add_argument("--graph", required=True)
    q.add_argument("--k", type=int, required=True)
    q.add_argument("--M", type=int, default=None)
    q.add_argument("--out-prefix", default=None)
    _add_solver_flags(q)
    q.set_defaults(func=_cmd_roundtrip_vc)

    p = sub.add_parser("gen", help="seeded random inputs")
    gsub = p.add_subparsers(dest="mode", required=True)

    q = gsub.add_parser("graph")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--p", type=float, required=True)
    q.add_argument("--seed", type=int, required=True)
    q.add_argument("--out", default=None, help="output file (default stdout)")
    q.set_defaults(func=_cmd_gen_graph)

    q = gsub.add_parser("3dm")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--extra", type=int, default=0)
    q.add_argument("--unsolvable", action="store_true",
                   help="resample until no perfect matching exists")
    q.add_argument("--seed", type=int, required=True)
    q.add_argument("--out", default=None)
    q.set_defaults(func=_cmd_gen_3dm)

    return top


def run(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(run())
