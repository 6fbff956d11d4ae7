"""Command-line front end: edge-list files in, deterministic text reports out.

Exit codes: 0 success, 1 I/O or parse errors, 2 theorem-hypothesis
violations (the message names the failed precondition), so scripted sweeps
can bin outcomes.  All floating-point output is fixed at 12 significant
digits and every run echoes its tolerances (and seed, where one is used).
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field

import numpy as np

from . import consensus, definiteness, resistance, spectra
from .errors import (
    DisconnectedError,
    GraphParseError,
    HypothesisViolatedError,
    NodesDisconnectedError,
    SiglapError,
    SingularCutGramError,
)
from .graph_core import SignedGraph
from .graphfile import read_graph_file
from .laplacians import laplacian_matrix

_HYPOTHESIS_ERRORS = (
    HypothesisViolatedError,
    DisconnectedError,
    NodesDisconnectedError,
    SingularCutGramError,
)


@dataclass(frozen=True)
class RunConfig:
    command: str
    input_path: str
    out_path: str | None = None
    tol: float | None = None
    t_final: float = consensus.DEFAULT_T_FINAL
    step: float = consensus.DEFAULT_STEP
    cluster_tol: float = consensus.DEFAULT_CLUSTER_TOL
    seed: int = 0
    x0_path: str | None = None
    clusters_out: str | None = None
    pairs: tuple[tuple[int, int], ...] = field(default=())


def _fmt(x: float) -> str:
    return format(float(x), ".12g")


def _sigma_str(sig: spectra.Signature) -> str:
    return f"({sig.n_plus},{sig.n_minus},{sig.n_zero})"


def _write(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _header(config: RunConfig, extra: list[str] | None = None) -> list[str]:
    lines = [f"# siglap {config.command}", f"# input: {config.input_path}"]
    lines.append(f"# tol: {'default' if config.tol is None else _fmt(config.tol)}")
    if extra:
        lines.extend(extra)
    return lines


def _load_x0(config: RunConfig, g: SignedGraph) -> tuple[np.ndarray, list[str]]:
    if config.x0_path is not None:
        values = []
        with open(config.x0_path, "r", encoding="utf-8") as fh:
            for lineno, raw in enumerate(fh, start=1):
                line = raw.split("#", 1)[0].strip()
                if not line:
                    continue
                try:
                    values.append(float(line))
                except ValueError:
                    raise GraphParseError(lineno, f"bad x0 value: {line!r}") from None
        x0 = np.array(values)
        if x0.shape != (g.node_count,):
            raise SiglapError(
                f"x0 file has {x0.size} values, graph has {g.node_count} nodes"
            )
        return x0, [f"# x0: {config.x0_path}"]
    rng = np.random.default_rng(config.seed)
    return rng.uniform(0.0, 1.0, g.node_count), [f"# seed: {config.seed}"]


def _cmd_signature(config: RunConfig, g: SignedGraph) -> list[str]:
    sig = spectra.signature(laplacian_matrix(g), config.tol)
    lines = _header(config)
    lines.append(f"sigma = {_sigma_str(sig)}")
    lines.append(f"tolerance_used = {_fmt(sig.tolerance_used)}")
    lines.append(f"near_singular = {'true' if sig.near_singular else 'false'}")
    return lines

def _cmd_resistance(config: RunConfig, g: SignedGraph) -> list[str]:
    lines = _header(config)
    if config.pairs:
        if g.negative_edge_indices():
            lines.append("# note: graph has negative weights; resistance values "
                         "fall outside the threshold theorems")
        for u, v in config.pairs:
            lines.append(f"R({u},{v}) = {_fmt(resistance.effective_resistance(g, u, v))}")
        return lines
    report = resistance.negative_edge_report(g)
    for u, v, r in report.pairs:
        lines.append(f"edge ({u},{v}): R+ = {_fmt(r)}")
    lines.append(f"R_tot = {_fmt(report.r_tot)}")
    return lines


def _cmd_threshold(config: RunConfig, g: SignedGraph) -> list[str]:
    report = resistance.negative_edge_report(g)
    if not report.pairs:
        raise HypothesisViolatedError(["at least one negative edge required"])
    lines = _header(config)
    for u, v, r in report.pairs:
        lines.append(f"edge ({u},{v}): max |w-| = {_fmt(1.0 / r)}")
    return lines


def _cmd_check_psd(config: RunConfig, g: SignedGraph) -> list[str]:
    neg = g.negative_edge_indices()
    lines = _header(config)
    if not neg:
        sig = spectra.signature(laplacian_matrix(g), config.tol)
        lines.append(f"PSD (strict interior), sigma={_sigma_str(sig)}")
        lines.append("# all weights positive; Laplacian is PSD by construction")
        return lines
    verdict = definiteness.multi_edge_verdict(g, config.tol)
    label = {
        definiteness.Classification.STRICT_INTERIOR: "PSD (strict interior)",
        definiteness.Classification.BOUNDARY: "PSD (boundary)",
        definiteness.Classification.INDEFINITE: "indefinite",
    }[verdict.classification]
    lines.append(f"{label}, sigma={_sigma_str(verdict.sigma)}")
    for item in verdict.per_edge:
        u, v = item.edge
        lines.append(
            f"edge ({u},{v}): |w-| = {_fmt(item.magnitude)}  "
            f"threshold = {_fmt(item.threshold)}  margin = {_fmt(item.margin)}"
        )
    lines.append(
        "disjoint_paths = "
        + ("true" if verdict.disjointness_hypothesis_holds else "false")
    )
    lines.append(
        "corollary6_satisfied = " + ("true" if verdict.corollary6_satisfied else "false")
    )
    if verdict.sigma.near_singular:
        lines.append("near_singular = true")
    return lines


def _cmd_simulate(config: RunConfig, g: SignedGraph) -> tuple[list[str], list[str]]:
    x0, source_lines = _load_x0(config, g)
    traj = consensus.simulate(
        g, x0, t_final=config.t_final, step=config.step, cluster_tol=config.cluster_tol
    )
    head = _header(config, source_lines)
    head.append(
        f"# t_final: {_fmt(config.t_final)}  step: {_fmt(config.step)}  "
        f"cluster_tol: {_fmt(config.cluster_tol)}"
    )
    if traj.diverged:
        head.append("# diverged: true")
    else:
        head.append(f"# clusters: {traj.final_clusters.cluster_count}")
    csv_lines = head + ["t," + ",".join(f"x{i}" for i in range(g.node_count))]
    for t, row in zip(traj.times, traj.states):
        csv_lines.append(_fmt(t) + "," + ",".join(_fmt(x) for x in row))

    cluster_lines = list(head)
    cluster_lines.append("node,cluster,value")
    if traj.final_clusters is not None:
        fc = traj.final_clusters
        for node in range(g.node_count):
            cid = fc.labels[node]
            cluster_lines.append(f"{node},{cid},{_fmt(fc.values[cid])}")
    return csv_lines, cluster_lines


def _cmd_predict_clusters(config: RunConfig, g: SignedGraph) -> list[str]:
    prediction = consensus.predict_clusters(g)
    lines = _header(config)
    lines.append(f"q = {prediction.q}")
    lines.append("node,cluster,null_vector")
    for node in range(g.node_count):
        lines.append(
            f"{node},{prediction.component_map[node]},{_fmt(prediction.null_vector[node])}"
        )
    return lines


def run(config: RunConfig) -> int:
    """Execute one command; returns the process exit status."""
    try:
        g = read_graph_file(config.input_path)
        if config.command == "signature":
            report = _cmd_signature(config, g)
        elif config.command == "resistance":
            report = _cmd_resistance(config, g)
        elif config.command == "threshold":
            report = _cmd_threshold(config, g)
        elif config.command == "check-psd":
            report = _cmd_check_psd(config, g)
        elif config.command == "simulate":
            csv_lines, cluster_lines = _cmd_simulate(config, g)
            _write("\n".join(csv_lines) + "\n", config.out_path)
            if config.clusters_out is not None:
                _write("\n".join(cluster_lines) + "\n", config.clusters_out)
            return 0
        elif config.command == "predict-clusters":
            report = _cmd_predict_clusters(config, g)
        else:
            raise ValueError(f"unknown command: {config.command}")
    except _HYPOTHESIS_ERRORS as exc:
        sys.stderr.write(f"siglap {config.command}: hypothesis violated: {exc}\n")
        return 2
    except (GraphParseError, OSError) as exc:
        sys.stderr.write(f"siglap {config.command}: {exc}\n")
        return 1
    except SiglapError as exc:
        sys.stderr.write(f"siglap {config.command}: {exc}\n")
        return 1
    _write("\n".join(report) + "\n", config.out_path)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="siglap",
        description="Definiteness analysis of weighted graph Laplacians "
                    "with negative edge weights",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser) -> None:
        p.add_argument("graph", help="edge-list graph file")
        p.add_argument("--out", default=None, help="write the report here instead of stdout")
        p.add_argument("--tol", type=float, default=None,
                       help="zero tolerance override for eigenvalue counts")

    add_common(sub.add_parser("signature", help="signature of the weighted Laplacian"))

    p = sub.add_parser("resistance", help="effective resistances over the positive subgraph")
    add_common(p)
    p.add_argument("--pair", nargs=2, type=int, action="append", metavar=("U", "V"),
                   default=None, help="resistance for this node pair (repeatable)")

    add_common(sub.add_parser("threshold", help="admissible negative magnitude per edge"))
    add_common(sub.add_parser("check-psd", help="semidefiniteness verdict"))

    p = sub.add_parser("simulate", help="integrate the consensus protocol")
    add_common(p)
    p.add_argument("--t-final", type=float, default=consensus.DEFAULT_T_FINAL)
    p.add_argument("--step", type=float, default=consensus.DEFAULT_STEP)
    p.add_argument("--cluster-tol", type=float, default=consensus.DEFAULT_CLUSTER_TOL)
    p.add_argument("--seed", type=int, default=0,
                   help="seed for the random initial state (ignored with --x0)")
    p.add_argument("--x0", default=None, help="file with one initial value per line")
    p.add_argument("--clusters-out", default=None,
                   help="also write the detected-cluster report here")

    add_common(sub.add_parser("predict-clusters",
                              help="predicted boundary clustering (single-cycle case)"))
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    pairs = tuple((u, v) for u, v in (getattr(args, "pair", None) or ()))
    return RunConfig(
        command=args.command,
        input_path=args.graph,
        out_path=args.out,
        tol=args.tol,
        t_final=getattr(args, "t_final", consensus.DEFAULT_T_FINAL),
        step=getattr(args, "step", consensus.DEFAULT_STEP),
        cluster_tol=getattr(args, "cluster_tol", consensus.DEFAULT_CLUSTER_TOL),
        seed=getattr(args, "seed", 0),
        x0_path=getattr(args, "x0", None),
        clusters_out=getattr(args, "clusters_out", None),
        pairs=pairs,
    )


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    return run(config_from_args(args))


if __name__ == "__main__":
    sys.exit(main())
