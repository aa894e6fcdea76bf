"""Command-line interface.

Exit status: 0 success / property holds, 1 property violated, 2 input error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import dataclass, field
from pathlib import Path

from . import generate
from .coding import CodingConsistencyError, code_graph, coded_matchings, well_order_faces
from .equivalence import (
    benzenoid_to_phenylene,
    canonical_form,
    find_nonbenzenoid_witness,
    is_normal,
    resonantly_equivalent,
    to_benzenoid,
)
from .matching import check_link_property, edges_of, enumerate_perfect_matchings
from .model import CersError, CersSpec, realize, validate_spec
from .resonance import (
    MAX_MEDIAN_VERTICES,
    basic_shape_ok,
    benzenoid_condition,
    build_resonance_graph,
    graph_isomorphic,
    is_median_graph,
    verify_isometric_embedding,
)

EXIT_OK, EXIT_VIOLATED, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    inputs: list[str] = field(default_factory=list)
    fmt: str | None = None
    root: str | None = None
    order: str = "bfs"
    seed: int = 0
    count: int = 1
    max_faces: int = 8
    max_face_length: int = 10
    reflection: bool = True
    normal: str = "no"

    def __post_init__(self):
        if self.max_faces < 1 or self.max_face_length < 4 or self.count < 1:
            raise InputError("bounds must be positive (face length at least 4)")


def _load(path: str) -> CersSpec:
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(str(exc)) from exc
    try:
        return CersSpec.from_json(text)
    except CersError as exc:
        raise InputError(str(exc)) from exc


def _load_valid(path: str) -> CersSpec:
    spec = _load(path)
    report = validate_spec(spec)
    if not report.ok:
        raise InputError("invalid spec: " + "; ".join(map(str, report.violations)))
    return spec


def _dump(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _coded(spec: CersSpec, cfg: RunConfig):
    plane = realize(spec)
    try:
        ordering = well_order_faces(spec, cfg.root, cfg.order)
    except CersError as exc:
        raise InputError(str(exc)) from exc
    return plane, ordering, coded_matchings(plane, ordering)


def cmd_validate(cfg: RunConfig) -> tuple[int, str]:
    report = validate_spec(_load(cfg.inputs[0]))
    if cfg.fmt == "json":
        out = _dump({"ok": report.ok, "violations": [str(v) for v in report.violations]})
    else:
        out = "ok\n" if report.ok else "".join(f"{v}\n" for v in report.violations)
    return (EXIT_OK if report.ok else EXIT_VIOLATED), out


def cmd_matchings(cfg: RunConfig) -> tuple[int, str]:
    plane = realize(_load_valid(cfg.inputs[0]))
    ms = [edges_of(m) for m in enumerate_perfect_matchings(plane)]
    if cfg.fmt == "text":
        return EXIT_OK, "".join(" ".join(map(str, m)) + "\n" for m in ms)
    return EXIT_OK, json.dumps(ms) + "\n"


def cmd_codes(cfg: RunConfig) -> tuple[int, str]:
    _, ordering, coded = _coded(_load_valid(cfg.inputs[0]), cfg)
    if cfg.fmt == "json":
        return EXIT_OK, _dump(
            {
                "root": ordering.root,
                "strategy": ordering.strategy,
                "ordering": list(ordering.faces),
                "codes": list(coded.codes),
                "matchings": [edges_of(m) for m in coded.matchings],
            }
        )
    return EXIT_OK, coded.code_set().to_text()


def cmd_resonance(cfg: RunConfig) -> tuple[int, str]:
    spec = _load_valid(cfg.inputs[0])
    plane, _, coded = _coded(spec, cfg)
    ms = enumerate_perfect_matchings(plane)
    code_of = dict(zip(coded.matchings, coded.codes))
    r = build_resonance_graph(plane, ms).with_codes([code_of[m] for m in ms])
    if cfg.fmt == "json":
        return EXIT_OK, _dump(r.to_dict())
    return EXIT_OK, r.to_dot()


def cmd_check(cfg: RunConfig) -> tuple[int, str]:
    spec = _load_valid(cfg.inputs[0])
    plane = realize(spec)
    ms = enumerate_perfect_matchings(plane)
    r = build_resonance_graph(plane, ms)
    g = r.graph()
    results: dict[str, bool] = {}
    results["link_property"] = all(check_link_property(plane, m) for m in ms)
    results["connected_bipartite"] = basic_shape_ok(g)
    if g.n <= MAX_MEDIAN_VERTICES:
        results["median"] = is_median_graph(g)
    try:
        _, _, coded = _coded(spec, cfg)
        results["coding_consistent"] = True
    except CodingConsistencyError:
        coded = None
        results["coding_consistent"] = False
    if coded is not None:
        idx = {m: i for i, m in enumerate(ms)}
        results["code_count"] = len(coded.codes) == len(ms)
        results["bijection"] = sorted(coded.matchings) == sorted(ms)
        if results["bijection"]:
            assign = {c: idx[m] for c, m in zip(coded.codes, coded.matchings)}
            results["isometric_embedding"] = verify_isometric_embedding(g, coded.codes, assign)
        results["code_graph_isomorphic"] = graph_isomorphic(code_graph(coded.codes), g)[0]
    info = {"normal": is_normal(plane), "matchings": len(ms)}
    cond = benzenoid_condition(g)
    info["benzenoid_condition"] = cond.holds
    if all(f.length == 6 for f in spec.faces):
        results["benzenoid_condition"] = cond.holds
    ok = all(results.values())
    if cfg.fmt == "json":
        out = _dump({"ok": ok, "checks": results, "info": info})
    else:
        lines = [f"{k}: {'PASS' if v else 'FAIL'}" for k, v in results.items()]
        lines += [f"{k}: {v}" for k, v in info.items()]
        out = "\n".join(lines) + "\n"
    return (EXIT_OK if ok else EXIT_VIOLATED), out


def cmd_equivalent(cfg: RunConfig) -> tuple[int, str]:
    if len(cfg.inputs) != 2:
        raise InputError("equivalent needs two spec files")
    s1, s2 = (_load_valid(p) for p in cfg.inputs)
    eq = resonantly_equivalent(s1, s2, reflection=cfg.reflection)
    if cfg.fmt == "text":
        out = f"{'equivalent' if eq else 'not equivalent'}\n"
    else:
        out = _dump(
            {
                "equivalent": eq,
                "canonical": [canonical_form(s1).to_dict(), canonical_form(s2).to_dict()],
            }
        )
    return (EXIT_OK if eq else EXIT_VIOLATED), out


def cmd_normalize(cfg: RunConfig) -> tuple[int, str]:
    spec = _load_valid(cfg.inputs[0])
    try:
        return EXIT_OK, to_benzenoid(spec).to_json() + "\n"
    except CersError as exc:
        raise InputError(str(exc)) from exc


def cmd_phenylene(cfg: RunConfig) -> tuple[int, str]:
    spec = _load_valid(cfg.inputs[0])
    try:
        return EXIT_OK, benzenoid_to_phenylene(spec).to_json() + "\n"
    except CersError as exc:
        raise InputError(str(exc)) from exc


def cmd_generate(cfg: RunConfig) -> tuple[int, str]:
    rng = random.Random(cfg.seed)
    specs = [generate.random_spec(rng, cfg.max_faces, cfg.max_face_length) for _ in range(cfg.count)]
    if cfg.count == 1:
        return EXIT_OK, specs[0].to_json() + "\n"
    return EXIT_OK, _dump([s.to_dict() for s in specs])


def cmd_witness(cfg: RunConfig) -> tuple[int, str]:
    normal = {"yes": True, "no": False, "any": None}[cfg.normal]
    spec = find_nonbenzenoid_witness(cfg.max_faces, cfg.max_face_length, normal)
    if spec is None:
        return EXIT_VIOLATED, "no witness within bounds\n"
    return EXIT_OK, spec.to_json() + "\n"


COMMANDS = {
    "validate": (cmd_validate, 1),
    "matchings": (cmd_matchings, 1),
    "codes": (cmd_codes, 1),
    "resonance": (cmd_resonance, 1),
    "check": (cmd_check, 1),
    "equivalent": (cmd_equivalent, 2),
    "normalize": (cmd_normalize, 1),
    "phenylene": (cmd_phenylene, 1),
    "generate": (cmd_generate, 0),
    "witness": (cmd_witness, 0),
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="cerscode",
        description="Perfect matchings, binary codes and resonance graphs of catacondensed even ring systems.",
    )
    p.add_argument("command", choices=list(COMMANDS))
    p.add_argument("inputs", nargs="*", help="spec JSON file(s); '-' reads stdin")
    p.add_argument("--format", dest="fmt", choices=["json", "dot", "text"])
    p.add_argument("--root", help="terminal face to number first (default: smallest terminal id)")
    p.add_argument("--order", choices=["bfs", "dfs"], default="bfs")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--max-faces", type=int, default=8)
    p.add_argument("--max-face-length", type=int, default=10)
    p.add_argument("--no-reflection", dest="reflection", action="store_false")
    p.add_argument("--normal", choices=["yes", "no", "any"], default="no",
                   help="witness search: restrict to normal / non-normal specs")
    return p


def run(argv: list[str] | None = None) -> tuple[int, str, str]:
    """Run one command; returns ``(exit status, stdout text, stderr text)``."""
    args = build_parser().parse_args(argv)
    func, n_inputs = COMMANDS[args.command]
    if len(args.inputs) != n_inputs:
        return EXIT_INPUT, "", f"{args.command} takes {n_inputs} input file(s)\n"
    try:
        cfg = RunConfig(
            command=args.command,
            inputs=args.inputs,
            fmt=args.fmt,
            root=args.root,
            order=args.order,
            seed=args.seed,
            count=args.count,
            max_faces=args.max_faces,
            max_face_length=args.max_face_length,
            reflection=args.reflection,
            normal=args.normal,
        )
        status, out = func(cfg)
    except (InputError, CersError) as exc:
        return EXIT_INPUT, "", f"error: {exc}\n"
    return status, out, ""


def main(argv: list[str] | None = None) -> int:
    status, out, err = run(argv)
    sys.stdout.write(out)
    sys.stderr.write(err)
    return status


if __name__ == "__main__":
    sys.exit(main())
