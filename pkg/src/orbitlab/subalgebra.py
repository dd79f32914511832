"""Structural analysis of matrix Lie subalgebras.

The reductivity test is the algebraic one for an algebraic subalgebra:
the algebra must split as center + derived algebra, the Killing form
tr(ad X ad Y) must be nondegenerate on the derived part (Cartan's
criterion for semisimplicity), and every center element must be a
semisimple matrix.  Example witnesses are attached whenever a check
definitively fails; decisions too close to a threshold degrade to an
inconclusive verdict instead of guessing.

Everything here is decided at the Lie-algebra level, i.e. for the
identity component of the corresponding group.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import _linalg
from .errors import InvalidArgumentError
from .groups import (BRACKET_CLOSURE_TOL, COMPLEX, LieAlgebraBasis, bracket,
                     bracket_closure_residual)
from .serialize import matrix_to_json

REDUCTIVE = "reductive"
NOT_REDUCTIVE = "not_reductive"
INCONCLUSIVE = "inconclusive"

SEMISIMPLE = "semisimple"
NILPOTENT = "nilpotent"
MIXED = "mixed"
AMBIGUOUS = "ambiguous"

# Eigenvalues closer than this (relative to the operator norm) merge
# into one cluster; clusters closer than 10x the radius are ambiguous.
EIGEN_MERGE_RTOL = 1e-6
NILPOTENT_TOL = 1e-10


@dataclass(frozen=True, eq=False)
class StructureData:
    """Derived algebra, center and Killing Gram matrix of a subalgebra."""

    basis: LieAlgebraBasis
    derived: LieAlgebraBasis
    center: LieAlgebraBasis
    killing_on_derived: np.ndarray


@dataclass(frozen=True, eq=False)
class SubalgebraReport:
    dim: int
    derived_dim: int
    center_dim: int
    killing_rank_on_derived: int
    center_all_semisimple: bool | None
    decomposition_ok: bool
    verdict: str
    witnesses: list = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "dim": self.dim,
            "derived_dim": self.derived_dim,
            "center_dim": self.center_dim,
            "killing_rank_on_derived": self.killing_rank_on_derived,
            "center_all_semisimple": self.center_all_semisimple,
            "decomposition_ok": self.decomposition_ok,
            "verdict": self.verdict,
            "witnesses": [
                {"kind": kind, "matrix": matrix_to_json(mat)}
                for kind, mat in self.witnesses
            ],
        }


def _coordinates(basis: LieAlgebraBasis, targets: np.ndarray) -> np.ndarray:
    """Least-squares coordinates of target matrices in the basis."""
    flat_basis = _linalg.stack_flat(basis.matrices).T
    flat_targets = _linalg.stack_flat(targets).T
    coords, *_ = np.linalg.lstsq(flat_basis, flat_targets, rcond=None)
    return coords


def adjoint_matrices(basis: LieAlgebraBasis) -> np.ndarray:
    """ad X_i as a matrix in basis coordinates, stacked over i."""
    k = basis.dim
    if k == 0:
        return np.zeros((0, 0, 0))
    brackets = np.array([[bracket(basis.matrices[i], basis.matrices[j])
                          for j in range(k)] for i in range(k)])
    # coordinates of [X_i, X_j] for all pairs at once
    coords = _coordinates(basis, brackets.reshape(k * k, *basis.matrices.shape[1:]))
    return coords.T.reshape(k, k, k).transpose(0, 2, 1)


def structure_report(basis: LieAlgebraBasis) -> StructureData:
    """Derived algebra, center and Killing form of a bracket-closed basis."""
    residual = bracket_closure_residual(basis)
    if residual > BRACKET_CLOSURE_TOL:
        raise InvalidArgumentError(
            f"basis is not bracket-closed (residual {residual:.2e})")
    k = basis.dim
    n = basis.ambient_size
    dtype = basis.matrices.dtype if k else np.float64
    if k == 0:
        return StructureData(basis, basis, basis, np.zeros((0, 0)))

    all_brackets = np.array([bracket(basis.matrices[i], basis.matrices[j])
                             for i in range(k) for j in range(i + 1, k)])
    if all_brackets.size == 0:
        all_brackets = np.zeros((0, n, n), dtype=dtype)
    if basis.field == COMPLEX:
        derived_mats = _linalg.orthonormal_complex_span(all_brackets)
    else:
        derived_mats = _linalg.orthonormal_real_span(all_brackets)
    derived = LieAlgebraBasis(derived_mats, basis.field, n)

    # Center: coefficient vectors c with [sum_i c_i X_i, X_j] = 0 for all j.
    columns = []
    for i in range(k):
        images = np.array([bracket(basis.matrices[i], basis.matrices[j]).ravel()
                           for j in range(k)]).ravel()
        columns.append(images)
    center_kernel = _linalg.null_space(np.array(columns).T)
    if center_kernel.shape[1]:
        center_mats = np.einsum("ik,ijl->kjl", center_kernel, basis.matrices)
    else:
        center_mats = np.zeros((0, n, n), dtype=dtype)
    center = LieAlgebraBasis(center_mats, basis.field, n)

    # Killing form on the derived algebra, via ad of the full algebra.
    d = derived.dim
    if d:
        ad = adjoint_matrices(basis)
        derived_coords = _coordinates(basis, derived.matrices)  # (k, d)
        ad_derived = np.einsum("ikl,id->dkl", ad, derived_coords)
        killing = np.einsum("akl,blk->ab", ad_derived, ad_derived)
    else:
        killing = np.zeros((0, 0))
    return StructureData(basis, derived, center, killing)


def _cluster_eigenvalues(eigs: np.ndarray, radius: float):
    """Greedy merge of eigenvalues into clusters of the given radius."""
    order = np.argsort(eigs.real + 1e-12 * eigs.imag)
    clusters: list[list[complex]] = []
    for idx in order:
        lam = eigs[idx]
        placed = False
        for cluster in clusters:
            if abs(np.mean(cluster) - lam) <= radius:
                cluster.append(lam)
                placed = True
                break
        if not placed:
            clusters.append([lam])
    return clusters


def element_type(x: np.ndarray, tol: float = NILPOTENT_TOL) -> str:
    """Classify a matrix as semisimple, nilpotent, mixed or ambiguous.

    Nilpotency is tested by powering the operator-norm-normalized
    matrix; semisimplicity by comparing geometric and algebraic
    multiplicities per eigenvalue cluster.  Cluster separations within
    10x of the merge radius make the call ambiguous.
    """
    x = np.asarray(x)
    n = x.shape[0]
    opnorm = np.linalg.norm(x, 2)
    if opnorm == 0.0:
        return NILPOTENT
    xn = x / opnorm
    power = np.linalg.matrix_power(xn, n)
    if np.linalg.norm(power, 2) <= tol:
        return NILPOTENT

    eigs = np.linalg.eigvals(x)
    radius = EIGEN_MERGE_RTOL * opnorm
    clusters = _cluster_eigenvalues(eigs, radius)
    centers = [np.mean(c) for c in clusters]
    for i in range(len(centers)):
        for j in range(i + 1, len(centers)):
            if abs(centers[i] - centers[j]) <= 10.0 * radius:
                return AMBIGUOUS
    for center, cluster in zip(centers, clusters):
        mult = len(cluster)
        shifted = x - center * np.eye(n, dtype=x.dtype)
        s = np.linalg.svd(shifted, compute_uv=False)
        geometric = int((s <= 10.0 * radius).sum())
        if geometric != mult:
            return MIXED
    return SEMISIMPLE


def reductivity_verdict(basis: LieAlgebraBasis,
                        tol: float = NILPOTENT_TOL) -> SubalgebraReport:
    """Algebraic reductivity: center + derived split, Cartan criterion,
    semisimple center.  The zero algebra is reductive."""
    data = structure_report(basis)
    k = basis.dim
    if k == 0:
        return SubalgebraReport(0, 0, 0, 0, True, True, REDUCTIVE, [])

    witnesses = []
    ambiguous = False

    d = data.derived.dim
    z = data.center.dim
    dims_ok = d + z == k
    if dims_ok and d and z:
        stacked = np.concatenate([data.derived.matrices, data.center.matrices])
        decision = _linalg.matrix_rank(_linalg.stack_flat(stacked))
        ambiguous |= decision.ambiguous
        dims_ok = decision.rank == d + z
    decomposition_ok = bool(dims_ok)
    if not decomposition_ok:
        witnesses.append(("failed_decomposition", basis.matrices[0]))

    killing_degenerate = False
    killing_rank = 0
    if d:
        killing_decision = _linalg.matrix_rank(data.killing_on_derived)
        killing_rank = killing_decision.rank
        ambiguous |= killing_decision.ambiguous
        if killing_rank < d and not killing_decision.ambiguous:
            killing_degenerate = True
            # a derived direction on which the Killing form degenerates
            kernel = _linalg.null_space(data.killing_on_derived)
            direction = np.einsum("i,ijl->jl", kernel[:, 0], data.derived.matrices)
            witnesses.append(("degenerate_killing_direction", direction))

    center_semisimple: bool | None = True
    for zmat in data.center.matrices:
        kind = element_type(zmat, tol)
        if kind == AMBIGUOUS:
            center_semisimple = None
            ambiguous = True
        elif kind != SEMISIMPLE:
            center_semisimple = False
            witnesses.append(("non_semisimple_center_element", zmat))
            break

    definite_failure = (not decomposition_ok or killing_degenerate
                        or center_semisimple is False)
    all_good = (decomposition_ok and killing_rank == d
                and center_semisimple is True)

    if definite_failure:
        verdict = NOT_REDUCTIVE
    elif ambiguous or not all_good:
        verdict = INCONCLUSIVE
    else:
        verdict = REDUCTIVE
    return SubalgebraReport(k, d, z, killing_rank, center_semisimple,
                            decomposition_ok, verdict, witnesses)
