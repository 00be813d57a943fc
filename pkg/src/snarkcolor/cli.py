"""Command-line surface: generate, superpose, color, verify, classify, check.

Artifacts go to standard output or to --out (written atomically); progress
and summaries go to standard error.  Exit codes: 0 success, 1 verification
failure, 2 usage error, 3 budget exhausted.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import random
import sys
import tempfile
from typing import Sequence

from .assembler import (
    AssembleError,
    assemble_dock_right,
    assemble_even_subgraph,
    assemble_general,
    base_coloring,
)
from .builder import (
    SpecError,
    SuperedgeSlot,
    SuperpositionSpec,
    build,
    resolve_snark,
    spec_from_json,
)
from .coloring import ColoringError, SearchTimeout
from .coloring import verify as verify_coloring
from .multipole import MultipoleError, is_isomorphic, to_dot, to_graph6
from .multipole import to_json_obj as graph_to_json_obj
from .schemes import classify_superedge, right_js_via_search
from .snarks import find_K_in_flower, flower, k_reduce, petersen
from .tablecheck import (
    TableError,
    check_tables,
    load_rows,
    regenerate_T3,
    rows_to_tsv,
)


def _log(msg: str) -> None:
    print(msg, file=sys.stderr)


def _emit(text: str, path: str | None) -> None:
    """Write an artifact to stdout, or atomically to a file."""
    if path in (None, "-"):
        sys.stdout.write(text)
        return
    target = os.path.abspath(path)
    fd, tmp = tempfile.mkstemp(dir=os.path.dirname(target), prefix=".tmp-")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, target)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _graph_text(g, fmt: str) -> str:
    if fmt == "graph6":
        return to_graph6(g) + "\n"
    if fmt == "dot":
        return to_dot(g)
    return _dumps(graph_to_json_obj(g))


def _load_spec(path: str) -> SuperpositionSpec:
    with open(path) as fh:
        return spec_from_json(fh.read())


# -- seeded demo specs ------------------------------------------------------

_CYCLE5 = ("0", "1", "2", "3", "4")
_CYCLE6 = ("0", "1", "6", "9", "7", "5")
_CYCLE8 = ("0", "1", "6", "8", "5", "7", "9", "4")

# (x, y, orientation, right exits): every entry is doubly-right and
# doubly-left; the exit sets are rechecked against the classifier in tests
_SLOTS_J5 = (
    ("y2", "x0", "xy", (1, 2, 3)),
    ("y2", "x0", "yx", (1, 3)),
    ("y0", "y1", "xy", (1, 2, 3)),
    ("y0", "y1", "yx", (1, 2, 3)),
    ("y0", "z2", "xy", (1, 2, 3)),
    ("y0", "z2", "yx", (1, 2)),
    ("y0", "w2", "xy", (1, 2, 3)),
    ("y0", "w2", "yx", (1, 2)),
    ("x0", "z2", "xy", (2, 3)),
    ("x0", "z2", "yx", (1, 3)),
)
_SLOTS_J7 = (
    ("x0", "x3", "xy", (1, 3)),
    ("z0", "z3", "xy", (1, 2)),
    ("z0", "z3", "yx", (1, 2)),
    ("z3", "z0", "xy", (1, 2)),
    ("z3", "z0", "yx", (1, 2)),
)


def random_dock_spec(seed: int) -> SuperpositionSpec:
    """Pentagon of fully-right 20-vertex slots; seeded p, dock, and kind."""
    rng = random.Random(seed)
    slots, kinds = [], []
    for _ in _CYCLE5:
        p = [1, 2, 3]
        rng.shuffle(p)
        slots.append(
            SuperedgeSlot("J5", "y2", "x0", "xy", tuple(p), rng.choice((1, 2, 3)))
        )
        kinds.append(rng.choice(("A", "A'")))
    return SuperpositionSpec(petersen(), (_CYCLE5,), kinds, slots, (), "petersen")


def random_general_spec(seed: int) -> SuperpositionSpec:
    """Seeded mix of slot families, orientations, docks, and gadget kinds.

    Roughly a fifth of the seeds park every dock outside its slot's right
    exits, exercising the schedules that cannot lean on any single slot.
    """
    rng = random.Random(seed)
    cycle = rng.choice((_CYCLE5, _CYCLE6, _CYCLE8))
    g = len(cycle)
    avoid_docks = rng.random() < 0.2
    slots = []
    for _ in range(g):
        family = _SLOTS_J5 if rng.random() < 0.7 else _SLOTS_J7
        snark = "J5" if family is _SLOTS_J5 else "J7"
        if avoid_docks:
            family = tuple(e for e in family if len(e[3]) < 3)
        x, y, orientation, right_js = rng.choice(family)
        if avoid_docks:
            d = rng.choice(tuple(sorted({1, 2, 3} - set(right_js))))
        else:
            d = rng.choice((1, 2, 3))
        p = [1, 2, 3]
        rng.shuffle(p)
        slots.append(SuperedgeSlot(snark, x, y, orientation, tuple(p), d))
    kinds = ["A"] * g
    for i in rng.sample(range(g), rng.randint(0, 3)):
        kinds[i] = "A'"
    twists = rng.sample(range(g), rng.randint(0, 2))
    return SuperpositionSpec(petersen(), (cycle,), kinds, slots, twists, "petersen")


# -- subcommands ------------------------------------------------------------


def _cmd_gen(args) -> int:
    if args.what == "spec":
        if args.seed is None:
            raise SpecError("gen spec needs --seed")
        make = {"dock": random_dock_spec, "general": random_general_spec}[args.profile]
        spec = make(args.seed)
        if (args.format or "json") != "json":
            raise SpecError("spec artifacts are json only")
        _emit(spec.to_json() + "\n", args.out)
        _log(f"spec: {spec.total} positions, profile {args.profile}, seed {args.seed}")
        return 0
    if args.what == "petersen":
        g, label = petersen(), "petersen"
    else:
        g, label = flower(args.r), f"J{args.r}"
    _emit(_graph_text(g, args.format or "graph6"), args.out)
    _log(f"{label}: {len(g.vertices)} vertices, {len(g.edges)} edges")
    return 0


def _cmd_superpose(args) -> int:
    built = build(_load_spec(args.spec))
    fmt = args.format or "graph6"
    if fmt == "json":
        text = _dumps(
            {
                "graph6": to_graph6(built.graph),
                "vertices": len(built.graph.vertices),
                "edges": len(built.graph.edges),
                "roles": built.to_roles_json_obj(),
            }
        )
    else:
        text = _graph_text(built.graph, fmt)
    _emit(text, args.out)
    _log(
        f"built: {len(built.graph.vertices)} vertices, "
        f"{len(built.graph.edges)} edges"
    )
    return 0


def _cmd_color(args) -> int:
    spec = _load_spec(args.spec)
    built = build(spec)
    sigma = base_coloring(spec.base, budget_ms=args.budget_ms)
    assemble = {
        "auto": assemble_even_subgraph,
        "dock": assemble_dock_right,
        "general": assemble_general,
    }[args.strategy]
    cert = assemble(built, sigma, budget_ms=args.budget_ms)
    _emit(cert.to_json() + "\n", args.out)
    _log(
        f"certificate: normal, poor={cert.report.poor_count}, "
        f"rich={cert.report.rich_count}"
    )
    return 0


def _cmd_verify(args) -> int:
    built = build(_load_spec(args.spec))
    with open(args.cert) as fh:
        obj = json.load(fh)
    want = hashlib.sha256(to_graph6(built.graph).encode()).hexdigest()
    if obj.get("graph_hash") != want:
        _log("graph hash mismatch: certificate is for a different construction")
        return 1
    colors = {e: int(c) for e, c in obj.get("colors", {}).items()}
    missing = [e for e in built.graph.edges if e not in colors]
    if missing:
        _log(f"certificate leaves {len(missing)} edges uncolored")
        return 1
    try:
        rep = verify_coloring(built.graph, colors)
    except ColoringError as exc:
        _log(f"unusable certificate: {exc}")
        return 1
    stored = obj.get("report", {})
    drift = stored.get("poor_count") != rep.poor_count or stored.get(
        "rich_count"
    ) != rep.rich_count
    if not rep.normal:
        _log(f"coloring is not normal: {rep!r}")
        return 1
    if drift:
        _log("stored report disagrees with recount")
        return 1
    _log(f"verified: normal, poor={rep.poor_count}, rich={rep.rich_count}")
    return 0


def _cmd_classify(args) -> int:
    h = resolve_snark(args.snark)
    rp, lp = classify_superedge(h, args.x, args.y, budget_ms=args.budget_ms)
    _emit(
        _dumps(
            {
                "snark": args.snark,
                "x": args.x,
                "y": args.y,
                "right_js": list(rp.right_js),
                "doubly_right": rp.doubly_right,
                "fully_right": rp.fully_right,
                "left_ks": {str(j): list(lp.ks_for(j)) for j in (1, 2, 3)},
                "doubly_left": lp.doubly_left,
            }
        ),
        args.out,
    )
    _log(f"right_js={list(rp.right_js)} doubly_left={lp.doubly_left}")
    return 0


def _cmd_check_tables(args) -> int:
    summary = check_tables(args.table)
    for t, (p, f) in summary.by_table().items():
        _log(f"{t}: {p} passed, {f} failed")
    if args.regen_t3:
        rows = regenerate_T3()
        _emit(rows_to_tsv(rows), args.regen_t3)
        _log(f"T3: {len(rows)} regenerated rows -> {args.regen_t3}")
    if (args.format or "json") == "tsv":
        keys = {"1": ("T1",), "2": ("T2",), "4": ("T4",)}.get(
            args.table, ("T1", "T2", "T4")
        )
        rows = tuple(r for t in keys for r in load_rows(t))
        _emit(rows_to_tsv(rows), args.out)
    else:
        _emit(_dumps(summary.to_json_obj()), args.out)
    return 0 if summary.ok else 1


def _cmd_reduce_k(args) -> int:
    g = resolve_snark(args.snark)
    reduced = k_reduce(g, find_K_in_flower(g, args.section))
    code = 0
    if args.check:
        r = len(g.vertices) // 4
        ok = is_isomorphic(reduced, flower(r - 2))
        _log(f"isomorphic to J{r - 2}: {ok}")
        if not ok:
            code = 1
    _emit(_graph_text(reduced, args.format or "graph6"), args.out)
    _log(f"reduced: {len(reduced.vertices)} vertices, {len(reduced.edges)} edges")
    return code


def _cmd_oracle(args) -> int:
    h = resolve_snark(args.snark)
    rp, _ = classify_superedge(h, args.x, args.y, budget_ms=args.budget_ms)
    alt = right_js_via_search(h, args.x, args.y, budget_ms=args.budget_ms)
    agree = set(rp.right_js) == set(alt)
    _emit(
        _dumps({"sweep": list(rp.right_js), "search": list(alt), "agree": agree}),
        args.out,
    )
    _log(f"sweep={list(rp.right_js)} search={list(alt)} agree={agree}")
    return 0 if agree else 1


# -- parser -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="snarkcolor",
        description="superpositioned snarks and their normal 5-edge-colorings",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def out_flag(p):
        p.add_argument("-o", "--out", help="artifact file (default: stdout)")

    p = sub.add_parser("gen", help="emit a named graph or a seeded demo spec")
    p.add_argument("what", choices=("petersen", "flower", "spec"))
    p.add_argument("--r", type=int, default=5, help="flower sections (odd, >= 5)")
    p.add_argument("--profile", choices=("dock", "general"), default="dock")
    p.add_argument("--seed", type=int, help="seed for spec generation")
    p.add_argument("--format", choices=("graph6", "dot", "json"))
    out_flag(p)
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("superpose", help="build the graph a spec describes")
    p.add_argument("--spec", required=True, help="spec json file")
    p.add_argument("--format", choices=("graph6", "dot", "json"))
    out_flag(p)
    p.set_defaults(func=_cmd_superpose)

    p = sub.add_parser("color", help="build and color, emitting a certificate")
    p.add_argument("--spec", required=True, help="spec json file")
    p.add_argument(
        "--strategy", choices=("auto", "dock", "general"), default="auto"
    )
    p.add_argument("--budget-ms", type=int, default=300000)
    out_flag(p)
    p.set_defaults(func=_cmd_color)

    p = sub.add_parser("verify", help="recheck a certificate against its spec")
    p.add_argument("--spec", required=True, help="spec json file")
    p.add_argument("--cert", required=True, help="certificate json file")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser(
        "classify-superedge", help="right/left witness profile of a slot"
    )
    p.add_argument("--snark", required=True, help="petersen, J5, J7, ... or graph6")
    p.add_argument("--x", required=True)
    p.add_argument("--y", required=True)
    p.add_argument("--budget-ms", type=int, default=300000)
    out_flag(p)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("check-tables", help="validate the embedded witness tables")
    p.add_argument("--table", choices=("1", "2", "4", "all"), default="all")
    p.add_argument("--regen-t3", metavar="PATH", help="write regenerated T3 rows")
    p.add_argument("--format", choices=("json", "tsv"))
    out_flag(p)
    p.set_defaults(func=_cmd_check_tables)

    p = sub.add_parser("reduce-k", help="contract a flower to the next smaller one")
    p.add_argument("--snark", required=True)
    p.add_argument("--section", type=int, help="first of the three sections")
    p.add_argument("--check", action="store_true", help="verify the reduced graph")
    p.add_argument("--format", choices=("graph6", "dot", "json"))
    out_flag(p)
    p.set_defaults(func=_cmd_reduce_k)

    p = sub.add_parser("oracle", help="cross-check sweep and search classifiers")
    p.add_argument("--snark", required=True)
    p.add_argument("--x", required=True)
    p.add_argument("--y", required=True)
    p.add_argument("--budget-ms", type=int, default=300000)
    out_flag(p)
    p.set_defaults(func=_cmd_oracle)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        return args.func(args)
    except SearchTimeout as exc:
        _log(f"timeout: {exc}")
        return 3
    except AssembleError as exc:
        _log(f"assembly failed: {exc}")
        return 1
    except (
        SpecError,
        TableError,
        MultipoleError,
        ColoringError,
        ValueError,
        KeyError,
        OSError,
    ) as exc:
        _log(f"error: {exc}")
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
