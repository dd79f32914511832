"""Command-line front end: one subcommand per capability, JSON in and out.

Exit codes:
  0  all assertions / prevalence bars met
  1  a mathematical assertion failed
  2  configuration or parse error
  3  excessive inconclusive rate
"""

from __future__ import annotations

import functools
import json
import sys
from dataclasses import replace

import click
import numpy as np

from . import _linalg, experiments, kempfness, reps, subalgebra
from .errors import OrbitLabError, ConfigurationError
from .groups import (GroupSpec, LieAlgebraBasis, cartan_decomposition_for,
                     lie_algebra_basis)
from .kempfness import FlowConfig

EXIT_OK = 0
EXIT_MATH = 1
EXIT_CONFIG = 2
EXIT_INCONCLUSIVE = 3


def _fail_config(message: str):
    json.dump({"error": "configuration", "message": message}, sys.stderr)
    sys.stderr.write("\n")
    sys.exit(EXIT_CONFIG)


def _load_json(path: str) -> dict:
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        _fail_config(f"cannot read JSON input: {exc}")


def _emit(payload: dict, out: str | None):
    text = json.dumps(payload, indent=2, sort_keys=True)
    if out:
        with open(out, "w") as fh:
            fh.write(text + "\n")
    else:
        click.echo(text)


def _problem_from_json(data: dict):
    try:
        rep = reps.Representation.from_json(data["representation"])
        vector = reps.vector_from_json(rep, data["vector"])
    except (KeyError, OrbitLabError, ValueError, TypeError) as exc:
        _fail_config(f"bad problem input: {exc}")
    return rep, vector


def _flow_config(moment_tol: float | None, max_iters: int | None) -> FlowConfig:
    config = FlowConfig()
    if moment_tol is not None:
        config = replace(config, moment_tolerance=moment_tol)
    if max_iters is not None:
        config = replace(config, max_iterations=max_iters)
    return config


def _domain_errors_exit_2(fn):
    """Domain errors (bad groups, shapes, non-theta-stable algebras) are
    configuration errors from the CLI's point of view."""
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except OrbitLabError as exc:
            _fail_config(str(exc))
    return wrapper


def _apply_rank_tol(rank_tol: float | None):
    if rank_tol is not None:
        if rank_tol <= 0:
            _fail_config("--rank-tol must be positive")
        _linalg.RANK_RTOL = rank_tol


input_option = click.option("--in", "input_path", default="-", show_default=True,
                            help="JSON input file ('-' for stdin)")
out_option = click.option("--out", default=None, help="output path (default stdout)")
moment_tol_option = click.option("--moment-tol", type=float, default=None,
                                 help="override the flow's moment tolerance")
max_iters_option = click.option("--max-iters", type=int, default=None,
                                help="override the flow's iteration budget")
rank_tol_option = click.option("--rank-tol", type=float, default=None,
                               help="override the relative singular-value "
                                    "threshold for rank decisions")


@click.group()
def main():
    """Numerical laboratory for orbit closedness on reductive group actions."""


@main.command()
@input_option
@out_option
@moment_tol_option
@max_iters_option
@rank_tol_option
@_domain_errors_exit_2
def closedness(input_path, out, moment_tol, max_iters, rank_tol):
    """Decide closedness of the orbit of a vector.

    Input: {"representation": {...}, "vector": ...}
    """
    _apply_rank_tol(rank_tol)
    rep, vector = _problem_from_json(_load_json(input_path))
    config = _flow_config(moment_tol, max_iters)
    verdict = kempfness.closedness_verdict(rep, rep.group, vector, config)
    _emit(verdict.to_json(rep), out)
    sys.exit(EXIT_OK if verdict.status != kempfness.INCONCLUSIVE
             else EXIT_INCONCLUSIVE)


@main.command()
@input_option
@out_option
@click.option("--tolerance", type=float, default=1e-8, show_default=True,
              help="scale-invariant minimality tolerance")
@_domain_errors_exit_2
def minimal(input_path, out, tolerance):
    """Test whether a vector is a minimal vector of its orbit."""
    rep, vector = _problem_from_json(_load_json(input_path))
    decomposition = cartan_decomposition_for(rep.group)
    norm2 = reps.inner_product(rep, vector, vector)
    mom = float(np.linalg.norm(
        kempfness.moment_vector(rep, decomposition.p_basis, vector)))
    is_min = kempfness.is_minimal(rep, decomposition.p_basis, vector, tolerance)
    _emit({
        "minimal": is_min,
        "relative_moment_norm": mom / norm2 if norm2 else 0.0,
        "tolerance": tolerance,
    }, out)
    sys.exit(EXIT_OK)


@main.command()
@input_option
@out_option
@rank_tol_option
@_domain_errors_exit_2
def stabilizer(input_path, out, rank_tol):
    """Stabilizer subalgebra of a vector; optionally under a subgroup.

    Input: {"representation": {...}, "vector": ..., "subgroup": {...}?}
    """
    _apply_rank_tol(rank_tol)
    data = _load_json(input_path)
    rep, vector = _problem_from_json(data)
    group = rep.group
    if "subgroup" in data:
        try:
            group = GroupSpec.from_json(data["subgroup"])
        except (OrbitLabError, KeyError) as exc:
            _fail_config(f"bad subgroup: {exc}")
    algebra = lie_algebra_basis(group)
    stab = reps.stabilizer_subalgebra(rep, algebra, vector)
    _emit({"dimension": stab.dim, "basis": stab.to_json()}, out)
    sys.exit(EXIT_OK)


@main.command()
@input_option
@out_option
@rank_tol_option
@_domain_errors_exit_2
def reductive(input_path, out, rank_tol):
    """Reductivity verdict for a bracket-closed matrix Lie algebra.

    Input: {"algebra": {"field": ..., "size": n, "matrices": [...]}}
    """
    _apply_rank_tol(rank_tol)
    data = _load_json(input_path)
    try:
        basis = LieAlgebraBasis.from_json(data["algebra"])
        report = subalgebra.reductivity_verdict(basis)
    except (OrbitLabError, KeyError, ValueError) as exc:
        _fail_config(f"bad algebra input: {exc}")
    _emit(report.to_json(), out)
    if report.verdict == subalgebra.INCONCLUSIVE:
        sys.exit(EXIT_INCONCLUSIVE)
    sys.exit(EXIT_OK)


@main.command(name="orbit-dim")
@input_option
@out_option
@rank_tol_option
@_domain_errors_exit_2
def orbit_dim(input_path, out, rank_tol):
    """Orbit dimension of a vector (over the group's field)."""
    _apply_rank_tol(rank_tol)
    data = _load_json(input_path)
    rep, vector = _problem_from_json(data)
    group = rep.group
    if "subgroup" in data:
        try:
            group = GroupSpec.from_json(data["subgroup"])
        except (OrbitLabError, KeyError) as exc:
            _fail_config(f"bad subgroup: {exc}")
    algebra = lie_algebra_basis(group)
    dim, ambiguous = reps.orbit_dimension_info(rep, algebra, vector)
    _emit({"orbit_dim": dim, "rank_ambiguous": ambiguous,
           "field": group.field}, out)
    sys.exit(EXIT_INCONCLUSIVE if ambiguous else EXIT_OK)


@main.command()
@click.option("--scenario", required=True, help="scenario name (see catalog)")
@click.option("--kind", default=None,
              help="experiment kind (defaults to the scenario's natural kind)")
@click.option("--trials", type=int, default=None, help="number of trials")
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--spread", type=float, default=0.5, show_default=True,
              help="std-dev of the Gaussian Lie-algebra coefficients")
@click.option("--workers", type=int, default=1, show_default=True,
              help="concurrent trial workers (result is identical for any N)")
@click.option("--format", "fmt", type=click.Choice(["json", "csv"]),
              default="json", show_default=True)
@out_option
@moment_tol_option
@max_iters_option
@rank_tol_option
@_domain_errors_exit_2
def experiment(scenario, kind, trials, seed, spread, workers, fmt, out,
               moment_tol, max_iters, rank_tol):
    """Run a named experiment and report per-trial records plus a summary."""
    _apply_rank_tol(rank_tol)
    try:
        sc = experiments.get_scenario(scenario)
        config = experiments.ExperimentConfig(
            kind=kind or sc.default_kind,
            scenario=scenario,
            trials=trials if trials is not None else 100,
            seed=seed,
            spread=spread,
            flow=_flow_config(moment_tol, max_iters),
        )
    except (ConfigurationError, OrbitLabError) as exc:
        _fail_config(str(exc))
    report = experiments.run_experiment(config, workers=workers)
    if fmt == "csv":
        text = report.to_csv_str()
        if out:
            with open(out, "w") as fh:
                fh.write(text)
        else:
            click.echo(text, nl=False)
    else:
        if out:
            with open(out, "w") as fh:
                fh.write(report.to_json_str() + "\n")
        else:
            click.echo(report.to_json_str())
    if report.passed:
        sys.exit(EXIT_OK)
    sys.exit(EXIT_INCONCLUSIVE if report.failure == "inconclusive" else EXIT_MATH)


@main.command()
@out_option
def catalog(out):
    """List the built-in scenarios."""
    _emit({"scenarios": experiments.scenario_catalog()}, out)
    sys.exit(EXIT_OK)


if __name__ == "__main__":
    main()
