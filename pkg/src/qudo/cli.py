"""Command-line interface: energy evaluation, exact solving, QAOA runs.

Every command reads a graph file (edge-list or JSON), prints one JSON
run record to stdout, and reports problems as one-line diagnostics on
stderr with a nonzero exit code.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time

import numpy as np

from .exact import DEFAULT_CAP, GROUND_TOL, solve_exact
from .graph import Graph, parse_graph, to_dot
from .model import Assignment, EnergyModel, cut_value, hamiltonian_diagonal
from .qaoa import OptimizerConfig, QaoaParams, expectation, optimize, run_ansatz, sample

SCHEMA_VERSION = 1


class CliError(Exception):
    """User-facing command failure, printed as a one-line diagnostic."""


def _read_graph(path: str) -> tuple[Graph, str]:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}") from None
    graph = parse_graph(text)
    if graph.has_nonpositive_weight():
        print(
            "warning: graph has non-positive edge weights; "
            "clustering semantics assume w > 0",
            file=sys.stderr,
        )
    return graph, text


def _record(command: str, text: str, d: int, seed: int | None,
            parameters: dict, results: dict, started: float) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "graph_sha256": hashlib.sha256(text.encode("utf-8")).hexdigest(),
        "d": d,
        "seed": seed,
        "parameters": parameters,
        "results": results,
        "wall_time_s": time.perf_counter() - started,
    }


def _decomposition_results(report) -> dict:
    return {
        "independent_vertex_set": (
            sorted(report.independent_vertex_set)
            if report.independent_vertex_set is not None
            else None
        ),
        "component_count": report.component_count,
        "pairwise_supports": (
            [sorted(s) for s in report.pairwise_supports]
            if report.pairwise_supports is not None
            else None
        ),
    }


def cmd_energy(args: argparse.Namespace) -> dict:
    started = time.perf_counter()
    graph, text = _read_graph(args.graph)
    model = EnergyModel(graph, args.d)
    assignment = Assignment.from_string(args.assignment, args.d)
    results = {
        "energy": model.energy(assignment),
        "cut_value": cut_value(graph, assignment),
    }
    parameters = {"assignment": str(assignment)}
    return _record("energy", text, args.d, None, parameters, results, started)


def cmd_solve(args: argparse.Namespace) -> dict:
    started = time.perf_counter()
    graph, text = _read_graph(args.graph)
    model = EnergyModel(graph, args.d)
    if args.decompose:
        if args.d != 2:
            raise CliError(
                "subgraph decomposition is binary-only (the XOR procedure "
                f"works on bitstrings); got d={args.d}"
            )
        if not graph.zero_field:
            raise CliError(
                "subgraph decomposition relies on the zero-field dual "
                "symmetry; this graph has field weights"
            )
    report = solve_exact(model, cap=args.cap)
    results = {
        "ground_energy": report.ground_energy,
        "num_ground_states": report.num_ground_states,
        "ground_states": [str(s) for s in report.ground_states],
        "reduced_states": [str(s) for s in report.reduced_states],
        **_decomposition_results(report),
    }
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as handle:
            handle.write(to_dot(graph, report.ground_states[0]))
        results["dot_path"] = args.dot
    parameters = {"cap": args.cap, "decompose": bool(args.decompose)}
    return _record("solve", text, args.d, None, parameters, results, started)


def _parse_angles(text: str, name: str) -> tuple[float, ...]:
    try:
        return tuple(float(part) for part in text.split(",") if part.strip() != "")
    except ValueError:
        raise CliError(f"malformed --{name} list {text!r}") from None


def cmd_qaoa(args: argparse.Namespace) -> dict:
    started = time.perf_counter()
    graph, text = _read_graph(args.graph)
    model = EnergyModel(graph, args.d)

    optimizer_summary = None
    if (args.gamma is None) != (args.beta is None):
        raise CliError("--gamma and --beta must be given together")
    if args.gamma is not None:
        gammas = _parse_angles(args.gamma, "gamma")
        betas = _parse_angles(args.beta, "beta")
        if len(gammas) != len(betas) or not gammas:
            raise CliError("--gamma and --beta need the same nonzero length")
        params = QaoaParams(len(gammas), gammas, betas)
    else:
        config = OptimizerConfig()
        result = optimize(
            model, p=args.p, config=config, seed=args.seed, gate_path=args.gate_path
        )
        params = result.best_params
        optimizer_summary = {
            "evaluations": result.evaluations,
            "best_expectation": result.best_expectation,
        }

    state = run_ansatz(model, params, gate_path=args.gate_path)
    value = expectation(state, model)

    diagonal = hamiltonian_diagonal(model)
    ground_energy = float(diagonal.min())
    tolerance = GROUND_TOL * max(1.0, abs(ground_energy))
    ground_indices = np.flatnonzero(diagonal <= ground_energy + tolerance)
    ground_probability = float(state.probabilities()[ground_indices].sum())

    results = {
        "gammas": list(params.gammas),
        "betas": list(params.betas),
        "expectation": value,
        "counts": sample(state, args.shots, seed=args.seed),
        "ground_energy": ground_energy,
        "ground_state_probability": ground_probability,
        "optimizer": optimizer_summary,
    }
    parameters = {
        "p": params.p,
        "shots": args.shots,
        "gate_path": bool(args.gate_path),
    }
    return _record("qaoa", text, args.d, args.seed, parameters, results, started)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qudo",
        description=(
            "Max d-cut graph clustering: exact ground states of clock-matrix "
            "energy models and a qudit QAOA simulator."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    energy = sub.add_parser("energy", help="evaluate one assignment")
    energy.add_argument("graph", help="graph file (edge list or JSON)")
    energy.add_argument("assignment", help="base-d label string, vertex 0 first")
    energy.add_argument("-d", type=int, default=2, help="number of clusters (default 2)")
    energy.set_defaults(func=cmd_energy)

    solve = sub.add_parser("solve", help="exact ground states by enumeration")
    solve.add_argument("graph")
    solve.add_argument("-d", type=int, default=2)
    solve.add_argument("--cap", type=int, default=DEFAULT_CAP,
                       help="max ground states to store (total count stays exact)")
    solve.add_argument("--decompose", action="store_true",
                       help="extract independent subgraphs (d=2, zero field)")
    solve.add_argument("--dot", metavar="PATH",
                       help="write a DOT file colored by the first ground state")
    solve.set_defaults(func=cmd_solve)

    decompose = sub.add_parser("decompose", help="alias for solve --decompose")
    decompose.add_argument("graph")
    decompose.add_argument("-d", type=int, default=2)
    decompose.add_argument("--cap", type=int, default=DEFAULT_CAP)
    decompose.add_argument("--dot", metavar="PATH")
    decompose.set_defaults(func=cmd_solve, decompose=True)

    qaoa = sub.add_parser("qaoa", help="optimize and simulate the QAOA circuit")
    qaoa.add_argument("graph")
    qaoa.add_argument("-d", type=int, default=2)
    qaoa.add_argument("--p", type=int, default=1, help="ansatz layer count")
    qaoa.add_argument("--shots", type=int, default=1024)
    qaoa.add_argument("--seed", type=int, default=0)
    qaoa.add_argument("--gate-path", action="store_true",
                      help="use the gate-level cost layer instead of the diagonal")
    qaoa.add_argument("--gamma", help="comma-separated angles; skips optimization")
    qaoa.add_argument("--beta", help="comma-separated angles; skips optimization")
    qaoa.set_defaults(func=cmd_qaoa)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        record = args.func(args)
    except (CliError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(json.dumps(record, indent=2, sort_keys=True))
    return 0


if __name__ == "__main__":
    sys.exit(main())
