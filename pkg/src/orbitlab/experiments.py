"""Randomized and golden-path experiment suites.

Each experiment kind turns one statement about reductive group actions
into a reproducible statistical (or deterministic) check:

* ``theorem1``                generic subgroup orbits on a closed orbit
                              are closed,
* ``cor2-normal``             a normal subgroup has *all* orbits closed
                              on closed orbits,
* ``cor3-intersection``       generic stabilizer intersections are
                              reductive,
* ``cor5-direct-sum``         direct sums of good representations are
                              good,
* ``example1``                the deterministic counterexample pipeline
                              (non-reductive stabilizer, non-closed
                              orbit),
* ``real-complex-agreement``  closedness verdicts agree between a real
                              group and its complexification on real
                              starting points.

Genericity is operationalized as prevalence under Gaussian sampling in
Lie-algebra coordinates: a dense Zariski-open set has full measure under
any absolutely continuous law, so 100 trials with a >= 99% success rate
is the acceptance bar.  Inconclusive trials are excluded from prevalence
denominators but hard-capped at 5% so numerical failure cannot
masquerade as genericity.

Per-trial seeds derive from (config.seed, trial index), so reports are
pure functions of their config, independent of worker count.
"""

from __future__ import annotations

import csv
import io
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import _linalg, groups, kempfness, reps, subalgebra
from .errors import ConfigurationError
from .groups import GroupSpec, lie_algebra_basis, random_group_element
from .kempfness import (CLOSED, INCONCLUSIVE, NON_CLOSED, FlowConfig,
                        closedness_verdict, moment_vector)
from .serialize import matrix_to_json

THEOREM1 = "theorem1"
COR2_NORMAL = "cor2-normal"
COR3_INTERSECTION = "cor3-intersection"
COR5_DIRECT_SUM = "cor5-direct-sum"
EXAMPLE1 = "example1"
REAL_COMPLEX = "real-complex-agreement"

ALL_KINDS = (THEOREM1, COR2_NORMAL, COR3_INTERSECTION, COR5_DIRECT_SUM,
             EXAMPLE1, REAL_COMPLEX)

# Acceptance bars for the statistical experiments.
PREVALENCE_BAR = 0.99
INCONCLUSIVE_CAP = 0.05


def counterexample_unipotent() -> np.ndarray:
    """The explicit unipotent 6x6 element of the counterexample: identity
    plus a single 1 in the (1, 3) slot (1-based), bit-exact integers."""
    g = np.eye(6, dtype=complex)
    g[0, 2] = 1.0
    return g


@dataclass(frozen=True, eq=False)
class Scenario:
    """A named cast of characters: ambient group, subgroup, action, base point."""

    name: str
    description: str
    default_kind: str
    kinds: tuple[str, ...]
    group: GroupSpec
    representation: reps.Representation
    subgroup: GroupSpec | None = None
    base_point: object | None = None
    fixed_element: np.ndarray | None = None
    counterexample_subgroup: GroupSpec | None = None
    real_group: GroupSpec | None = None
    real_representation: reps.Representation | None = None


def _example1_scenario() -> Scenario:
    g = groups.special_linear(6, groups.COMPLEX)
    h = groups.block_embedding(groups.special_linear(2, groups.COMPLEX), 6, 0)
    rep = reps.alt_bilinear(g)
    v0 = groups.standard_symplectic_form(6, groups.COMPLEX)
    return Scenario(
        name="example1",
        description="SL(6, C) on antisymmetric 6x6 matrices by g M g^t; "
                    "base point diag(J, J, J); subgroup SL(2) in the upper-left "
                    "block. Carries the explicit unipotent element whose "
                    "translate has a non-reductive block stabilizer.",
        default_kind=EXAMPLE1,
        kinds=(EXAMPLE1, THEOREM1, COR3_INTERSECTION),
        group=g,
        representation=rep,
        subgroup=h,
        base_point=v0,
        fixed_element=counterexample_unipotent(),
        counterexample_subgroup=h,
    )


def _sl4_block_scenario() -> Scenario:
    g = groups.special_linear(6, groups.COMPLEX)
    h = groups.block_embedding(groups.special_linear(4, groups.COMPLEX), 6, 0)
    h_counter = groups.block_embedding(groups.special_linear(2, groups.COMPLEX), 6, 0)
    rep = reps.alt_bilinear(g)
    v0 = groups.standard_symplectic_form(6, groups.COMPLEX)
    return Scenario(
        name="sl4-block",
        description="Same ambient action as example1 with SL(4) in the "
                    "upper-left block: positive-dimensional generic stabilizer "
                    "intersections (a symplectic reduction of rank one).",
        default_kind=COR3_INTERSECTION,
        kinds=(COR3_INTERSECTION, THEOREM1),
        group=g,
        representation=rep,
        subgroup=h,
        base_point=v0,
        fixed_element=counterexample_unipotent(),
        counterexample_subgroup=h_counter,
    )


def _normal_factor_scenario() -> Scenario:
    sl2 = groups.special_linear(2, groups.COMPLEX)
    g = groups.product(sl2, sl2)
    h = groups.block_embedding(sl2, 4, 0)
    rep = reps.external_tensor(g)
    base = np.eye(2, dtype=complex)
    return Scenario(
        name="normal-factor",
        description="SL(2) x SL(2) on 2x2 matrices by (A, B) . M = A M B^t; "
                    "the first factor is normal, and base points g . I sit on "
                    "closed ambient orbits (determinant level sets).",
        default_kind=COR2_NORMAL,
        kinds=(COR2_NORMAL, THEOREM1),
        group=g,
        representation=rep,
        subgroup=h,
        base_point=base,
    )


def _sym2_sum_scenario() -> Scenario:
    g = groups.special_linear(2, groups.COMPLEX)
    rep = reps.direct_sum(reps.sym2(g), reps.sym2(g))
    return Scenario(
        name="sym2-sum",
        description="SL(2, C) acting diagonally on two copies of the symmetric "
                    "2x2 matrices; each summand has generically closed orbits "
                    "(nonzero discriminant), and so should the sum.",
        default_kind=COR5_DIRECT_SUM,
        kinds=(COR5_DIRECT_SUM,),
        group=g,
        representation=rep,
        subgroup=g,
    )


def _sl2_real_complex_scenario() -> Scenario:
    gc = groups.special_linear(2, groups.COMPLEX)
    gr = groups.special_linear(2, groups.REAL)
    return Scenario(
        name="sl2-real-complex",
        description="Symmetric 2x2 matrices under SL(2), run once over the "
                    "reals and once over the complex field on the same real "
                    "starting points; closedness verdicts must agree.",
        default_kind=REAL_COMPLEX,
        kinds=(REAL_COMPLEX,),
        group=gc,
        representation=reps.sym2(gc),
        subgroup=gc,
        real_group=gr,
        real_representation=reps.sym2(gr),
    )


_SCENARIO_BUILDERS = {
    "example1": _example1_scenario,
    "sl4-block": _sl4_block_scenario,
    "normal-factor": _normal_factor_scenario,
    "sym2-sum": _sym2_sum_scenario,
    "sl2-real-complex": _sl2_real_complex_scenario,
}

_SCENARIO_CACHE: dict[str, Scenario] = {}


def get_scenario(name: str) -> Scenario:
    if name not in _SCENARIO_BUILDERS:
        raise ConfigurationError(f"unknown scenario {name!r}; "
                                 f"known: {sorted(_SCENARIO_BUILDERS)}")
    if name not in _SCENARIO_CACHE:
        _SCENARIO_CACHE[name] = _SCENARIO_BUILDERS[name]()
    return _SCENARIO_CACHE[name]


def scenario_catalog() -> list[dict]:
    """Names and descriptions of the built-in scenarios."""
    out = []
    for name in sorted(_SCENARIO_BUILDERS):
        sc = get_scenario(name)
        out.append({
            "name": sc.name,
            "description": sc.description,
            "default_kind": sc.default_kind,
            "kinds": list(sc.kinds),
        })
    return out


@dataclass(frozen=True)
class ExperimentConfig:
    kind: str
    scenario: str
    trials: int = 100
    seed: int = 0
    spread: float = 0.5
    flow: FlowConfig = field(default_factory=FlowConfig)

    def __post_init__(self):
        if self.kind not in ALL_KINDS:
            raise ConfigurationError(f"unknown experiment kind {self.kind!r}")
        if self.trials < 1:
            raise ConfigurationError("trials must be >= 1")
        if self.spread <= 0:
            raise ConfigurationError("spread must be positive")
        sc = get_scenario(self.scenario)
        if self.kind not in sc.kinds:
            raise ConfigurationError(
                f"scenario {self.scenario!r} does not support kind {self.kind!r}")

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "scenario": self.scenario,
            "trials": self.trials,
            "seed": self.seed,
            "spread": self.spread,
            "flow": self.flow.to_json(),
        }

    @staticmethod
    def from_json(data: dict) -> "ExperimentConfig":
        flow = FlowConfig.from_json(data.get("flow", {}))
        return ExperimentConfig(
            kind=data["kind"], scenario=data["scenario"],
            trials=int(data.get("trials", 100)), seed=int(data.get("seed", 0)),
            spread=float(data.get("spread", 0.5)), flow=flow)


@dataclass(frozen=True, eq=False)
class ExperimentReport:
    config: ExperimentConfig
    trials: list
    summary: dict
    passed: bool
    failure: str | None
    wall_time_ms: float

    def to_json(self, include_wall_time: bool = True) -> dict:
        out = {
            "kind": self.config.kind,
            "scenario": self.config.scenario,
            "config": self.config.to_json(),
            "tolerances": tolerance_echo(self.config.flow),
            "trials": _jsonable(self.trials),
            "summary": _jsonable(self.summary),
            "passed": self.passed,
            "failure": self.failure,
        }
        if include_wall_time:
            out["wall_time_ms"] = self.wall_time_ms
        return out

    def to_json_str(self, include_wall_time: bool = True) -> str:
        return json.dumps(self.to_json(include_wall_time), indent=2,
                          sort_keys=True)

    def to_csv_str(self) -> str:
        """One row per trial, scalar fields only."""
        buf = io.StringIO()
        keys: list[str] = []
        for record in self.trials:
            for key, value in record.items():
                if key not in keys and not isinstance(value, (dict, list)):
                    keys.append(key)
        writer = csv.DictWriter(buf, fieldnames=keys, extrasaction="ignore")
        writer.writeheader()
        for record in self.trials:
            writer.writerow({k: record.get(k) for k in keys})
        return buf.getvalue()


def _jsonable(value):
    """Recursively convert numpy scalars/arrays to plain Python values."""
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, np.floating):
        return float(value)
    if isinstance(value, np.bool_):
        return bool(value)
    if isinstance(value, np.ndarray):
        return matrix_to_json(value)
    return value


def tolerance_echo(flow: FlowConfig) -> dict:
    return {
        "rank_rtol": _linalg.RANK_RTOL,
        "bracket_closure_tol": groups.BRACKET_CLOSURE_TOL,
        "moment_tolerance": flow.moment_tolerance,
        "limit_rank_floor_factor": kempfness.LIMIT_RANK_FLOOR,
        "eigen_merge_rtol": subalgebra.EIGEN_MERGE_RTOL,
        "nilpotent_tol": subalgebra.NILPOTENT_TOL,
        "prevalence_bar": PREVALENCE_BAR,
        "inconclusive_cap": INCONCLUSIVE_CAP,
    }


def trial_seed(base_seed: int, index: int) -> int:
    """Stable per-trial seed; aggregation order never affects results."""
    ss = np.random.SeedSequence(entropy=base_seed, spawn_key=(index,))
    return int(ss.generate_state(1, np.uint64)[0])


def _stabilizer_verdict(rep, algebra, v) -> tuple[int, str]:
    stab = reps.stabilizer_subalgebra(rep, algebra, v)
    report = subalgebra.reductivity_verdict(stab)
    return stab.dim, report.verdict


def _flow_trial(scenario: Scenario, config: ExperimentConfig, index: int) -> dict:
    """One closedness trial at a random ambient translate of the base point."""
    seed = trial_seed(config.seed, index)
    g = random_group_element(scenario.group, seed, config.spread)
    x = reps.act(scenario.representation, g, scenario.base_point)
    h_algebra = lie_algebra_basis(scenario.subgroup)
    verdict = closedness_verdict(scenario.representation, scenario.subgroup,
                                 x, config.flow)
    stab_dim, stab_verdict = _stabilizer_verdict(scenario.representation,
                                                 h_algebra, x)
    return {
        "index": index,
        "seed": seed,
        "status": verdict.status,
        "start_orbit_dim": verdict.start_orbit_dim,
        "limit_orbit_dim": verdict.limit_orbit_dim,
        "start_norm": verdict.start_norm,
        "limit_norm": verdict.limit_norm,
        "iterations": verdict.trace.iterations_used,
        "flow_reason": verdict.trace.reason,
        "relative_moment_norm": float(verdict.trace.moment_norms[-1]),
        "stabilizer_dim": stab_dim,
        "stabilizer_verdict": stab_verdict,
    }


def _cor5_trial(scenario: Scenario, config: ExperimentConfig, index: int) -> dict:
    """One closedness trial at a Gaussian random point of the direct sum."""
    seed = trial_seed(config.seed, index)
    rng = np.random.default_rng(seed)
    v = reps.random_vector(scenario.representation, rng, config.spread)
    h_algebra = lie_algebra_basis(scenario.subgroup)
    verdict = closedness_verdict(scenario.representation, scenario.subgroup,
                                 v, config.flow)
    stab_dim, stab_verdict = _stabilizer_verdict(scenario.representation,
                                                 h_algebra, v)
    return {
        "index": index,
        "seed": seed,
        "status": verdict.status,
        "start_orbit_dim": verdict.start_orbit_dim,
        "limit_orbit_dim": verdict.limit_orbit_dim,
        "start_norm": verdict.start_norm,
        "limit_norm": verdict.limit_norm,
        "iterations": verdict.trace.iterations_used,
        "flow_reason": verdict.trace.reason,
        "relative_moment_norm": float(verdict.trace.moment_norms[-1]),
        "stabilizer_dim": stab_dim,
        "stabilizer_verdict": stab_verdict,
    }


def _cor3_trial(scenario: Scenario, config: ExperimentConfig, index: int) -> dict:
    """One stabilizer-reductivity trial at a random ambient translate."""
    seed = trial_seed(config.seed, index)
    g = random_group_element(scenario.group, seed, config.spread)
    x = reps.act(scenario.representation, g, scenario.base_point)
    h_algebra = lie_algebra_basis(scenario.subgroup)
    stab = reps.stabilizer_subalgebra(scenario.representation, h_algebra, x)
    report = subalgebra.reductivity_verdict(stab)
    generator_type = None
    if stab.dim == 1:
        generator_type = subalgebra.element_type(stab.matrices[0])
    return {
        "index": index,
        "seed": seed,
        "intersection_dim": stab.dim,
        "verdict": report.verdict,
        "generator_type": generator_type,
        "derived_dim": report.derived_dim,
        "center_dim": report.center_dim,
        "killing_rank": report.killing_rank_on_derived,
    }


def _real_complex_trial(scenario: Scenario, config: ExperimentConfig,
                        index: int) -> dict:
    """The same real starting point flowed over R and over C."""
    seed = trial_seed(config.seed, index)
    rng = np.random.default_rng(seed)
    m_real = reps.random_vector(scenario.real_representation, rng, config.spread)
    real_verdict = closedness_verdict(scenario.real_representation,
                                      scenario.real_group, m_real, config.flow)
    complex_verdict = closedness_verdict(scenario.representation,
                                         scenario.group,
                                         m_real.astype(complex), config.flow)
    agree = None
    if INCONCLUSIVE not in (real_verdict.status, complex_verdict.status):
        agree = real_verdict.status == complex_verdict.status
    return {
        "index": index,
        "seed": seed,
        "real_status": real_verdict.status,
        "complex_status": complex_verdict.status,
        "real_orbit_dim": real_verdict.start_orbit_dim,
        # complex dimension plus its real count, so the two fields compare
        "complex_orbit_dim": complex_verdict.start_orbit_dim,
        "complex_orbit_dim_over_r": 2 * complex_verdict.start_orbit_dim,
        "agree": agree,
    }


def run_example1_pipeline(config: ExperimentConfig) -> tuple[list, dict]:
    """The deterministic counterexample, one assertion at a time."""
    scenario = get_scenario(config.scenario)
    rep = scenario.representation
    g_algebra = lie_algebra_basis(scenario.group)
    h_algebra = lie_algebra_basis(scenario.subgroup)
    v0 = scenario.base_point
    cartan = groups.cartan_decomposition_for(scenario.group)

    assertions = []

    def check(name: str, passed: bool, detail):
        assertions.append({"name": name, "passed": bool(passed),
                           "detail": detail})

    mom = np.linalg.norm(moment_vector(rep, cartan.p_basis, v0))
    rel = float(mom) / reps.inner_product(rep, v0, v0)
    check("base_point_minimal", rel <= 1e-8, {"relative_moment_norm": rel})

    dim_orbit = reps.orbit_dimension(rep, g_algebra, v0)
    check("ambient_orbit_dim_14", dim_orbit == 14, {"orbit_dim": dim_orbit})

    stab_g = reps.stabilizer_subalgebra(rep, g_algebra, v0)
    check("base_stabilizer_dim_21", stab_g.dim == 21, {"dim": stab_g.dim})

    x = reps.act(rep, scenario.fixed_element, v0)
    stab_h = reps.stabilizer_subalgebra(rep, h_algebra, x)
    check("block_stabilizer_dim_1", stab_h.dim == 1, {"dim": stab_h.dim})

    generator_type = (subalgebra.element_type(stab_h.matrices[0])
                      if stab_h.dim else "absent")
    check("block_stabilizer_nilpotent", generator_type == subalgebra.NILPOTENT,
          {"generator_type": generator_type})

    report = subalgebra.reductivity_verdict(stab_h)
    check("block_stabilizer_not_reductive",
          report.verdict == subalgebra.NOT_REDUCTIVE,
          {"verdict": report.verdict})

    h_verdict = closedness_verdict(rep, scenario.subgroup, x, config.flow)
    check("block_orbit_non_closed", h_verdict.status == NON_CLOSED,
          {"status": h_verdict.status,
           "start_orbit_dim": h_verdict.start_orbit_dim,
           "limit_orbit_dim": h_verdict.limit_orbit_dim})

    g_verdict = closedness_verdict(rep, scenario.group, x, config.flow)
    check("ambient_orbit_closed", g_verdict.status == CLOSED,
          {"status": g_verdict.status,
           "start_orbit_dim": g_verdict.start_orbit_dim,
           "limit_orbit_dim": g_verdict.limit_orbit_dim})

    summary = {
        "all_passed": all(a["passed"] for a in assertions),
        "assertions_passed": sum(a["passed"] for a in assertions),
        "assertions_total": len(assertions),
        "base_orbit_dim": dim_orbit,
        "base_stabilizer_dim": stab_g.dim,
        "base_relative_moment_norm": rel,
        "stabilizer_dim": stab_h.dim,
        "stabilizer_generator_type": generator_type,
        "stabilizer_verdict": report.verdict,
        "h_orbit_status": h_verdict.status,
        "g_orbit_status": g_verdict.status,
    }
    return assertions, summary


def run_counterexample_trial(scenario: Scenario, config: ExperimentConfig) -> dict:
    """Deterministic stabilizer trial at the scenario's fixed element,
    using the counterexample subgroup (the block SL(2))."""
    rep = scenario.representation
    h_algebra = lie_algebra_basis(scenario.counterexample_subgroup)
    x = reps.act(rep, scenario.fixed_element, scenario.base_point)
    stab = reps.stabilizer_subalgebra(rep, h_algebra, x)
    report = subalgebra.reductivity_verdict(stab)
    generator_type = (subalgebra.element_type(stab.matrices[0])
                      if stab.dim == 1 else None)
    return {
        "intersection_dim": stab.dim,
        "verdict": report.verdict,
        "generator_type": generator_type,
    }


_TRIAL_RUNNERS = {
    THEOREM1: _flow_trial,
    COR2_NORMAL: _flow_trial,
    COR3_INTERSECTION: _cor3_trial,
    COR5_DIRECT_SUM: _cor5_trial,
    REAL_COMPLEX: _real_complex_trial,
}


def _run_one(config_json: str, index: int) -> dict:
    """Top-level trial entry point (picklable for process pools)."""
    config = ExperimentConfig.from_json(json.loads(config_json))
    scenario = get_scenario(config.scenario)
    return _TRIAL_RUNNERS[config.kind](scenario, config, index)


def _summarize_flow(records: list, require_all_closed: bool) -> tuple[dict, bool, str | None]:
    counts = {CLOSED: 0, NON_CLOSED: 0, INCONCLUSIVE: 0}
    for r in records:
        counts[r["status"]] += 1
    converged = counts[CLOSED] + counts[NON_CLOSED]
    prevalence = counts[CLOSED] / converged if converged else 0.0
    inconclusive_rate = counts[INCONCLUSIVE] / len(records)
    summary = {
        "closed": counts[CLOSED],
        "non_closed": counts[NON_CLOSED],
        "inconclusive": counts[INCONCLUSIVE],
        "converged": converged,
        "closed_prevalence": prevalence,
        "inconclusive_rate": inconclusive_rate,
        "max_iterations_used": max(r["iterations"] for r in records),
    }
    if inconclusive_rate > INCONCLUSIVE_CAP:
        return summary, False, "inconclusive"
    if require_all_closed:
        ok = counts[NON_CLOSED] == 0
    else:
        ok = converged > 0 and prevalence >= PREVALENCE_BAR
    return summary, ok, None if ok else "math"


def run_experiment(config: ExperimentConfig, workers: int = 1) -> ExperimentReport:
    """Run all trials of an experiment and aggregate the report.

    The report is a pure function of the config; ``workers`` only
    parallelizes independent trials.
    """
    start = time.perf_counter()
    scenario = get_scenario(config.scenario)  # validates the scenario exists

    if config.kind == EXAMPLE1:
        assertions, summary = run_example1_pipeline(config)
        passed = summary["all_passed"]
        wall = (time.perf_counter() - start) * 1000.0
        return ExperimentReport(config, assertions, summary, passed,
                                None if passed else "math", wall)

    config_json = json.dumps(config.to_json(), sort_keys=True)
    indices = list(range(config.trials))
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            records = list(pool.map(_run_one, [config_json] * len(indices),
                                    indices))
    else:
        records = [_run_one(config_json, i) for i in indices]
    records.sort(key=lambda r: r["index"])

    failure: str | None = None
    if config.kind in (THEOREM1, COR2_NORMAL, COR5_DIRECT_SUM):
        summary, passed, failure = _summarize_flow(
            records, require_all_closed=config.kind == COR2_NORMAL)
    elif config.kind == COR3_INTERSECTION:
        summary, passed, failure = _summarize_cor3(scenario, config, records)
    elif config.kind == REAL_COMPLEX:
        summary, passed, failure = _summarize_real_complex(records)
    else:  # pragma: no cover
        raise ConfigurationError(f"unhandled kind {config.kind!r}")

    wall = (time.perf_counter() - start) * 1000.0
    return ExperimentReport(config, records, summary, passed, failure, wall)


def _summarize_cor3(scenario: Scenario, config: ExperimentConfig,
                    records: list) -> tuple[dict, bool, str | None]:
    counts = {subalgebra.REDUCTIVE: 0, subalgebra.NOT_REDUCTIVE: 0,
              subalgebra.INCONCLUSIVE: 0}
    for r in records:
        counts[r["verdict"]] += 1
    decided = counts[subalgebra.REDUCTIVE] + counts[subalgebra.NOT_REDUCTIVE]
    prevalence = counts[subalgebra.REDUCTIVE] / decided if decided else 0.0
    inconclusive_rate = counts[subalgebra.INCONCLUSIVE] / len(records)
    dim1_semisimple = all(
        r["generator_type"] == subalgebra.SEMISIMPLE
        for r in records
        if r["intersection_dim"] == 1 and r["verdict"] == subalgebra.REDUCTIVE)
    summary = {
        "reductive": counts[subalgebra.REDUCTIVE],
        "not_reductive": counts[subalgebra.NOT_REDUCTIVE],
        "inconclusive": counts[subalgebra.INCONCLUSIVE],
        "decided": decided,
        "reductive_prevalence": prevalence,
        "inconclusive_rate": inconclusive_rate,
        "dimension_histogram": _dim_histogram(records),
        "dim1_generators_semisimple": dim1_semisimple,
    }
    if scenario.fixed_element is not None and scenario.counterexample_subgroup is not None:
        summary["counterexample"] = run_counterexample_trial(scenario, config)
    if inconclusive_rate > INCONCLUSIVE_CAP:
        return summary, False, "inconclusive"
    ok = (decided > 0 and prevalence >= PREVALENCE_BAR and dim1_semisimple)
    if "counterexample" in summary:
        ok = ok and summary["counterexample"]["verdict"] == subalgebra.NOT_REDUCTIVE
    return summary, ok, None if ok else "math"


def _dim_histogram(records: list) -> dict:
    hist: dict[str, int] = {}
    for r in records:
        key = str(r["intersection_dim"])
        hist[key] = hist.get(key, 0) + 1
    return hist


def _summarize_real_complex(records: list) -> tuple[dict, bool, str | None]:
    agreements = sum(1 for r in records if r["agree"] is True)
    disagreements = sum(1 for r in records if r["agree"] is False)
    inconclusive_pairs = sum(1 for r in records if r["agree"] is None)
    inconclusive_rate = inconclusive_pairs / len(records)
    summary = {
        "agreements": agreements,
        "disagreements": disagreements,
        "inconclusive_pairs": inconclusive_pairs,
        "inconclusive_rate": inconclusive_rate,
    }
    if inconclusive_rate > INCONCLUSIVE_CAP:
        return summary, False, "inconclusive"
    ok = disagreements == 0 and agreements > 0
    return summary, ok, None if ok else "math"
