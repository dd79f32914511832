"""Orbit closedness via minimal vectors and a norm-minimizing flow.

The norm functional g -> |g . v|^2 on a reductive matrix group attains
its infimum exactly when the orbit is closed, and its critical points
are the minimal vectors: points where <X . v, v> = 0 for every Hermitian
algebra direction X.  The flow implemented here descends the norm along
the Hermitian part of the algebra,

    v_{k+1} = act(exp(-eps mu(v_k)), v_k),

with a backtracking line search (halving, warm-started at twice the
previously accepted step).  Every iterate stays exactly on the starting
orbit, so the limit of the flow lies in the unique closed orbit inside
the orbit closure.

The closedness verdict compares orbit dimensions at the start and at the
flow limit.  A subtlety: the final iterate is only within about
sqrt(residual) of the true limit, so singular values of that size at the
limit are artifacts of finite convergence.  The limit-side rank test
therefore uses an absolute floor of LIMIT_RANK_FLOOR *
sqrt(relative moment norm) * |limit| on top of the package rank policy.
Inconclusive is a first-class outcome, never an exception.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _linalg, reps
from .errors import InvalidArgumentError
from .groups import (COMPLEX, CartanDecomposition, GroupSpec, LieAlgebraBasis,
                     cartan_decompose, cartan_decomposition_for,
                     lie_algebra_basis, matrix_exp)

CLOSED = "closed"
NON_CLOSED = "non_closed"
INCONCLUSIVE = "inconclusive"

# Orthonormality bar on the p-basis fed to the moment map.
GRAM_TOL = 1e-8

# Multiplier on sqrt(moment residual) * |limit| for the limit-side rank
# floor; calibrated so the residual cluster sits one order below it.
LIMIT_RANK_FLOOR = 10.0

# |v_k|^2 below this fraction of the starting norm^2 counts as collapse
# onto the zero vector (the flow then certifies 0 in the orbit closure).
# Must sit well above the rounding floor: after the iterate has shrunk by
# ~1e-8, accumulated arithmetic noise pushes it off the nullcone onto a
# nearby orbit with a genuine (tiny) minimal vector, which would then
# pass the moment test and fake a closed verdict.
COLLAPSE_REL_NORM2 = 1e-12

# Armijo sufficient-decrease coefficient for the line search.
SUFFICIENT_DECREASE = 1e-4


@dataclass(frozen=True)
class FlowConfig:
    initial_step: float = 0.1
    moment_tolerance: float = 1e-8
    max_iterations: int = 20000
    step_shrink: float = 0.5
    min_step: float = 1e-14

    def __post_init__(self):
        if min(self.initial_step, self.moment_tolerance, self.min_step) <= 0:
            raise InvalidArgumentError("flow parameters must be positive")
        if not 0 < self.step_shrink < 1:
            raise InvalidArgumentError("step_shrink must lie in (0, 1)")
        if self.max_iterations < 1:
            raise InvalidArgumentError("max_iterations must be positive")

    def to_json(self) -> dict:
        return {
            "initial_step": self.initial_step,
            "moment_tolerance": self.moment_tolerance,
            "max_iterations": self.max_iterations,
            "step_shrink": self.step_shrink,
            "min_step": self.min_step,
        }

    @staticmethod
    def from_json(data: dict) -> "FlowConfig":
        return FlowConfig(**{k: data[k] for k in (
            "initial_step", "moment_tolerance", "max_iterations",
            "step_shrink", "min_step") if k in data})


@dataclass(frozen=True, eq=False)
class FlowTrace:
    norms: np.ndarray          # |v_k|, nonincreasing
    moment_norms: np.ndarray   # relative moment norm at each iterate
    iterations_used: int
    limit_point: object
    converged: bool
    collapsed: bool            # limit certified to be the zero vector
    reason: str                # "moment", "collapse", "budget", "stalled"

    def to_json(self, rep: reps.Representation | None = None) -> dict:
        out = {
            "norms": [float(x) for x in self.norms],
            "moment_norms": [float(x) for x in self.moment_norms],
            "iterations_used": self.iterations_used,
            "converged": self.converged,
            "collapsed": self.collapsed,
            "reason": self.reason,
        }
        if rep is not None:
            out["limit_point"] = reps.vector_to_json(rep, self.limit_point)
        return out


@dataclass(frozen=True, eq=False)
class ClosednessVerdict:
    status: str
    start_orbit_dim: int
    limit_orbit_dim: int
    start_norm: float
    limit_norm: float
    trace: FlowTrace

    def to_json(self, rep: reps.Representation | None = None,
                include_trace_arrays: bool = True) -> dict:
        trace = self.trace.to_json(rep)
        if not include_trace_arrays:
            trace.pop("norms", None)
            trace.pop("moment_norms", None)
            trace.pop("limit_point", None)
        return {
            "status": self.status,
            "start_orbit_dim": self.start_orbit_dim,
            "limit_orbit_dim": self.limit_orbit_dim,
            "start_norm": self.start_norm,
            "limit_norm": self.limit_norm,
            "trace": trace,
        }


def _check_orthonormal(p_basis: LieAlgebraBasis):
    if p_basis.dim == 0:
        return
    flat = _linalg.realify_flat(p_basis.matrices)
    gram = flat @ flat.T
    if np.linalg.norm(gram - np.eye(p_basis.dim)) > GRAM_TOL:
        raise InvalidArgumentError(
            "p-basis must be orthonormal for the real trace pairing")


def moment_vector(rep: reps.Representation, p_basis: LieAlgebraBasis, v,
                  check: bool = True) -> np.ndarray:
    """Coefficients <X_i . v, v> over the orthonormal Hermitian basis.

    This is the gradient of t -> |exp(tX) . v|^2 / 2 at t = 0 in the
    direction X; it vanishes exactly at minimal vectors.
    """
    if check:
        _check_orthonormal(p_basis)
    if p_basis.dim == 0:
        return np.zeros(0)
    return np.array([reps.inner_product(rep, reps.differential_act(rep, x, v), v)
                     for x in p_basis.matrices])


def relative_moment_norm(rep: reps.Representation, p_basis: LieAlgebraBasis,
                         v) -> float:
    norm2 = reps.inner_product(rep, v, v)
    if norm2 == 0.0:
        return 0.0
    return float(np.linalg.norm(moment_vector(rep, p_basis, v))) / norm2


def is_minimal(rep: reps.Representation, p_basis: LieAlgebraBasis, v,
               tol: float = 1e-8) -> bool:
    """True when the moment vector vanishes to scale-invariant tolerance."""
    norm2 = reps.inner_product(rep, v, v)
    if norm2 == 0.0:
        return True
    mom = np.linalg.norm(moment_vector(rep, p_basis, v))
    return bool(mom <= tol * norm2)


def _resolve_algebra(group) -> tuple[LieAlgebraBasis, CartanDecomposition]:
    """Accept a GroupSpec or a theta-stable algebra basis directly."""
    if isinstance(group, LieAlgebraBasis):
        return group, cartan_decompose(group)
    return lie_algebra_basis(group), cartan_decomposition_for(group)


def norm_flow(rep: reps.Representation, group, v,
              config: FlowConfig = FlowConfig()) -> FlowTrace:
    """Run the norm-minimizing flow from v; returns the full trace.

    ``group`` may be a GroupSpec or a theta-stable LieAlgebraBasis.  The
    flow is run on v / |v| and rescaled afterwards (it commutes with
    scaling), which keeps the step-size heuristics scale-free.  Budget
    exhaustion is reported on the trace, not raised.
    """
    _, cartan = _resolve_algebra(group)
    p_basis = cartan.p_basis
    _check_orthonormal(p_basis)

    start_norm = reps.norm(rep, v)
    if start_norm == 0.0 or p_basis.dim == 0:
        return FlowTrace(np.array([start_norm]), np.array([0.0]), 0, v,
                         True, False, "moment")

    w = reps.scale(rep, 1.0 / start_norm, v)
    norm2 = reps.inner_product(rep, w, w)
    norms = [np.sqrt(norm2)]
    moment_norms = []
    eps = config.initial_step
    converged = False
    collapsed = False
    reason = "budget"
    iterations = config.max_iterations

    for it in range(config.max_iterations):
        coeff = moment_vector(rep, p_basis, w, check=False)
        mom = float(np.linalg.norm(coeff))
        rel = mom / norm2
        moment_norms.append(rel)
        if rel <= config.moment_tolerance:
            converged = True
            reason = "moment"
            iterations = it
            break
        mu = np.einsum("i,ijk->jk", coeff, p_basis.matrices)
        step = eps
        accepted = False
        while step >= config.min_step:
            candidate = reps.act(rep, matrix_exp(-step * mu), w)
            cand2 = reps.inner_product(rep, candidate, candidate)
            if cand2 <= norm2 - SUFFICIENT_DECREASE * step * mom * mom:
                accepted = True
                break
            step *= config.step_shrink
        if not accepted:
            reason = "stalled"
            iterations = it
            break
        w = candidate
        norm2 = cand2
        norms.append(np.sqrt(norm2))
        eps = step / config.step_shrink  # warm start: try a larger step next
        if norm2 <= COLLAPSE_REL_NORM2:
            converged = True
            collapsed = True
            reason = "collapse"
            iterations = it + 1
            break
    else:
        moment_norms.append(relative_moment_norm(rep, p_basis, w))

    limit = reps.zero_vector(rep) if collapsed else reps.scale(rep, start_norm, w)
    return FlowTrace(start_norm * np.array(norms),
                     np.array(moment_norms if moment_norms else [0.0]),
                     iterations, limit, converged, collapsed, reason)


def _limit_orbit_dimension(rep: reps.Representation, algebra: LieAlgebraBasis,
                           limit, achieved_rel_moment: float) -> tuple[int, bool]:
    """Orbit dimension at the flow limit, resolved to the flow's accuracy.

    Directions whose singular value is below the position uncertainty of
    the limit point (about sqrt(residual) * |limit|) are the ones dying
    in the true limit; they are floored to zero.  Only singular values
    just *above* the floor make the decision ambiguous.
    """
    if algebra.field == COMPLEX:
        onb = _linalg.orthonormal_complex_span(algebra.matrices)
    else:
        onb = _linalg.orthonormal_real_span(algebra.matrices)
    onb_basis = LieAlgebraBasis(onb, algebra.field, algebra.ambient_size)
    a = reps._differential_matrix(rep, onb_basis, limit)
    s = np.linalg.svd(a, compute_uv=False) if min(a.shape) else np.zeros(0)
    floor = (LIMIT_RANK_FLOOR * np.sqrt(max(achieved_rel_moment, 1e-15))
             * reps.norm(rep, limit))
    decision = _linalg.rank_from_singular_values(s, floor=floor, one_sided=True)
    return decision.rank, decision.ambiguous


def closedness_verdict(rep: reps.Representation, group, v,
                       config: FlowConfig = FlowConfig()) -> ClosednessVerdict:
    """Decide closedness of the orbit of v by the dimension-drop criterion.

    Closed: the flow converged and the limit has the same orbit
    dimension.  NonClosed: the flow converged onto a strictly smaller
    orbit (or onto zero from a nonzero start).  Inconclusive: budget or
    stall, or any rank decision too close to its threshold.
    """
    algebra, _ = _resolve_algebra(group)
    start_norm = reps.norm(rep, v)
    if start_norm == 0.0:
        trace = FlowTrace(np.array([0.0]), np.array([0.0]), 0, v, True, False,
                          "moment")
        return ClosednessVerdict(CLOSED, 0, 0, 0.0, 0.0, trace)

    start_dim, start_ambiguous = reps.orbit_dimension_info(rep, algebra, v)
    trace = norm_flow(rep, group, v, config)
    limit_norm = reps.norm(rep, trace.limit_point)

    if trace.collapsed:
        return ClosednessVerdict(NON_CLOSED, start_dim, 0, start_norm,
                                 0.0, trace)
    if not trace.converged:
        limit_dim, _ = _limit_orbit_dimension(rep, algebra, trace.limit_point,
                                              trace.moment_norms[-1])
        return ClosednessVerdict(INCONCLUSIVE, start_dim, limit_dim,
                                 start_norm, limit_norm, trace)

    achieved = float(trace.moment_norms[-1]) if trace.moment_norms.size else 0.0
    limit_dim, limit_ambiguous = _limit_orbit_dimension(
        rep, algebra, trace.limit_point, achieved)

    if start_ambiguous or limit_ambiguous:
        status = INCONCLUSIVE
    elif limit_dim == start_dim:
        status = CLOSED
    elif limit_dim < start_dim:
        status = NON_CLOSED
    else:
        # A limit dimension above the start dimension is numerically
        # impossible for an in-orbit iterate; refuse to guess.
        status = INCONCLUSIVE
    return ClosednessVerdict(status, start_dim, limit_dim, start_norm,
                             limit_norm, trace)
