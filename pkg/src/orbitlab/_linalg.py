"""Shared numerical linear algebra: the package-wide rank policy.

Every rank / span / null-space decision in the package funnels through
this module so that a single singular-value threshold (relative
``RANK_RTOL``) governs all of them.  Decisions that land too close to
the cutoff are flagged ambiguous instead of silently guessed; callers
turn that flag into an "inconclusive" outcome.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

# Relative singular-value threshold used for every rank decision.
RANK_RTOL = 1e-9

# A singular value within this factor of the cutoff (on either side)
# makes the rank decision ambiguous.
AMBIGUITY_BAND = 10.0


@dataclass(frozen=True)
class RankDecision:
    rank: int
    ambiguous: bool


def resolve_rtol(rtol: float | None) -> float:
    """None means the package-wide policy (a CLI flag may override it)."""
    return RANK_RTOL if rtol is None else rtol


def rank_from_singular_values(s: np.ndarray, rtol: float | None = None,
                              floor: float = 0.0,
                              one_sided: bool = False) -> RankDecision:
    """Count singular values above the cutoff.

    The cutoff is ``max(rtol * s.max(), floor)``.  The decision is
    ambiguous when some singular value falls inside the band
    ``[cutoff / AMBIGUITY_BAND, cutoff * AMBIGUITY_BAND]``.  With
    ``one_sided=True`` only the upper half of the band counts: values
    just below the cutoff are expected there (they are the residual of
    a converging flow) and do not taint the decision.
    """
    rtol = resolve_rtol(rtol)
    s = np.asarray(s, dtype=float)
    if s.size == 0 or s.max() == 0.0:
        return RankDecision(0, False)
    cutoff = max(rtol * float(s.max()), floor)
    rank = int((s > cutoff).sum())
    lo = cutoff if one_sided else cutoff / AMBIGUITY_BAND
    hi = cutoff * AMBIGUITY_BAND
    ambiguous = bool(np.any((s > lo) & (s <= hi)))
    return RankDecision(rank, ambiguous)


def matrix_rank(a: np.ndarray, rtol: float | None = None) -> RankDecision:
    s = np.linalg.svd(a, compute_uv=False) if min(a.shape) else np.zeros(0)
    return rank_from_singular_values(s, rtol)


def null_space(a: np.ndarray, rtol: float | None = None) -> np.ndarray:
    """Orthonormal basis of the (right) null space, columns of the result."""
    rtol = resolve_rtol(rtol)
    m, k = a.shape
    if k == 0:
        return np.zeros((0, 0), dtype=a.dtype)
    if m == 0:
        return np.eye(k, dtype=a.dtype)
    u, s, vh = np.linalg.svd(a, full_matrices=True)
    cutoff = rtol * s.max() if s.size and s.max() > 0 else 0.0
    rank = int((s > cutoff).sum())
    return vh[rank:].conj().T


def stack_flat(mats: np.ndarray) -> np.ndarray:
    """Flatten a (k, n, m) stack to a (k, n*m) coefficient matrix."""
    mats = np.asarray(mats)
    return mats.reshape(mats.shape[0], -1)


def realify_flat(mats: np.ndarray) -> np.ndarray:
    """Flatten matrices to real row vectors; complex parts become extra coordinates.

    The Euclidean inner product of these rows equals Re tr(A B*), so
    orthonormality here is orthonormality for the real trace pairing.
    """
    flat = stack_flat(mats)
    if np.iscomplexobj(flat):
        return np.concatenate([flat.real, flat.imag], axis=1)
    return flat


def unrealify(rows: np.ndarray, shape: tuple[int, ...], complex_field: bool) -> np.ndarray:
    """Inverse of :func:`realify_flat` for a (k, ...) stack of rows."""
    k = rows.shape[0]
    if complex_field:
        half = rows.shape[1] // 2
        return (rows[:, :half] + 1j * rows[:, half:]).reshape((k,) + shape)
    return rows.reshape((k,) + shape)


def orthonormal_real_span(mats: np.ndarray, rtol: float | None = None) -> np.ndarray:
    """Extract an Re-tr-orthonormal basis of the real span of a matrix stack."""
    rtol = resolve_rtol(rtol)
    mats = np.asarray(mats)
    if mats.shape[0] == 0:
        return mats
    rows = realify_flat(mats)
    u, s, vh = np.linalg.svd(rows, full_matrices=False)
    keep = s > rtol * s.max() if s.size and s.max() > 0 else np.zeros(0, bool)
    return unrealify(vh[keep], mats.shape[1:], np.iscomplexobj(mats))


def orthonormal_complex_span(mats: np.ndarray, rtol: float | None = None) -> np.ndarray:
    """Extract a tr(AB*)-orthonormal basis of the complex span of a matrix stack."""
    rtol = resolve_rtol(rtol)
    mats = np.asarray(mats)
    if mats.shape[0] == 0:
        return mats
    flat = stack_flat(mats)
    u, s, vh = np.linalg.svd(flat, full_matrices=False)
    keep = s > rtol * s.max() if s.size and s.max() > 0 else np.zeros(0, bool)
    return vh[keep].reshape((-1,) + mats.shape[1:])


def span_projection_residual(targets: np.ndarray, span: np.ndarray,
                             real_span: bool = False) -> float:
    """Largest relative residual of projecting each target onto the span.

    ``real_span`` restricts coefficients to the reals (projection in
    realified coordinates); otherwise coefficients live in the matrices'
    own field.
    """
    targets = np.asarray(targets)
    if targets.shape[0] == 0:
        return 0.0
    if real_span:
        t = realify_flat(targets)
        sp = realify_flat(span)
    else:
        t = stack_flat(targets)
        sp = stack_flat(span)
    if span.shape[0] == 0:
        norms = np.linalg.norm(t, axis=1)
        scale = norms.max()
        return 1.0 if scale > 0 else 0.0
    q = np.linalg.qr(sp.conj().T)[0] if not real_span else np.linalg.qr(sp.T)[0]
    proj = (q @ (q.conj().T @ t.conj().T)).conj().T if not real_span else (q @ (q.T @ t.T)).T
    res = np.linalg.norm(t - proj, axis=1)
    norms = np.linalg.norm(t, axis=1)
    scale = max(norms.max(), 1e-300)
    return float(res.max() / scale)


def _orth_columns(rows: np.ndarray, rtol: float | None = None) -> np.ndarray:
    rtol = resolve_rtol(rtol)
    u, s, vh = np.linalg.svd(rows.conj().T, full_matrices=False)
    keep = s > rtol * s.max() if s.size and s.max() > 0 else np.zeros(0, bool)
    return u[:, keep]


def subspace_distance(a: np.ndarray, b: np.ndarray, real_span: bool = False) -> float:
    """Distance between the spans of two matrix stacks (0 = equal spans).

    The operator norm of the difference of orthogonal projectors, i.e.
    the sine of the largest principal angle; symmetric in the arguments
    and exactly 1.0 when one span has a direction orthogonal to all of
    the other.
    """
    fa = realify_flat(a) if real_span else stack_flat(a)
    fb = realify_flat(b) if real_span else stack_flat(b)
    if fa.shape[0] == 0 and fb.shape[0] == 0:
        return 0.0
    if fa.shape[0] == 0 or fb.shape[0] == 0:
        return 1.0
    qa = _orth_columns(fa)
    qb = _orth_columns(fb)
    pa = qa @ qa.conj().T
    pb = qb @ qb.conj().T
    return float(np.linalg.norm(pa - pb, 2))
