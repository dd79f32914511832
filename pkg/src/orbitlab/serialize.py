"""JSON encoding of matrices and vectors.

Matrices travel as row-major nested lists.  Complex entries are encoded
as two-element ``[re, im]`` lists, real entries as plain numbers, so a
reader can reconstruct the dtype from the leaf shape alone.
"""

from __future__ import annotations

import numpy as np

from .errors import InvalidArgumentError


def matrix_to_json(a: np.ndarray):
    a = np.asarray(a)
    if np.iscomplexobj(a):
        return np.stack([a.real, a.imag], axis=-1).tolist()
    return a.tolist()


def matrix_from_json(data, complex_field: bool | None = None) -> np.ndarray:
    """Decode a nested-list matrix; ``[re, im]`` leaves mean complex entries.

    When ``complex_field`` is given it forces the dtype; otherwise the
    leaf shape decides (pairs at the deepest level = complex).
    """
    try:
        arr = np.asarray(data, dtype=float)
    except (TypeError, ValueError) as exc:
        raise InvalidArgumentError(f"malformed matrix payload: {exc}") from exc
    pairs = arr.ndim >= 1 and arr.shape[-1] == 2
    if complex_field is False:
        return arr
    if pairs and (complex_field or arr.ndim >= 3):
        return arr[..., 0] + 1j * arr[..., 1]
    if complex_field:
        return arr.astype(complex)
    return arr
