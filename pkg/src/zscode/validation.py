"""Input checks for bit matrices handed to the estimator API."""

from __future__ import annotations

import numpy as np
from sklearn.utils.validation import check_array

from .bits import MAX_DATA_BITS


def check_bit_matrix(X, n_bits=None, *, max_bits=MAX_DATA_BITS, name="X"):
    """Validate a 2-D array of 0/1 values and return it as ``uint8``.

    Raises ``ValueError`` for non-binary entries, odd or over-long widths, or
    a width different from ``n_bits`` when that is given.
    """
    X = check_array(X, dtype=None, ensure_min_samples=0, input_name=name)
    if not np.issubdtype(X.dtype, np.integer) and not np.issubdtype(X.dtype, np.bool_):
        if not np.all(np.isin(X, (0, 1))):
            raise ValueError(f"{name} must contain only 0 and 1")
    elif X.size and (X.min() < 0 or X.max() > 1):
        raise ValueError(f"{name} must contain only 0 and 1")
    width = X.shape[1]
    if n_bits is not None and width != n_bits:
        raise ValueError(f"{name} has {width} columns, expected {n_bits}")
    if width % 2 or width < 2 or (max_bits is not None and width > max_bits):
        raise ValueError(f"{name} needs an even number of columns in [2, {max_bits}], got {width}")
    return X.astype(np.uint8)


def check_scheme(scheme):
    if not isinstance(scheme, str) or scheme.lower() not in ("sp", "op"):
        raise ValueError(f"scheme must be 'sp' or 'op', got {scheme!r}")
    return scheme.lower()
