"""Input checks for symbolic feature matrices."""
from __future__ import annotations

import numpy as np
from sklearn.utils.validation import check_array, column_or_1d


def check_symbols(X, n_features=None) -> list:
    """Validate a 2-D matrix of symbolic features and return it as row tuples."""
    if isinstance(X, np.ndarray) and X.ndim == 2 and X.dtype.kind in "OU":
        arr = X
    else:
        rows = [tuple(row) for row in X]
        if rows and len({len(r) for r in rows}) != 1:
            raise ValueError("all feature vectors must have the same length")
        arr = np.empty((len(rows), len(rows[0]) if rows else 0), dtype=object)
        for r, row in enumerate(rows):
            arr[r, :] = row
    arr = check_array(arr, dtype=None, ensure_all_finite=False, ensure_min_samples=0,
                      ensure_min_features=0)
    if n_features is not None and arr.shape[1] != n_features:
        raise ValueError(f"X has {arr.shape[1]} features, but the model expects {n_features}")
    return [tuple(str(s) for s in row) for row in arr.tolist()]


def check_targets(y, n_samples: int) -> list:
    y = column_or_1d(np.asarray(y, dtype=object), warn=True)
    if len(y) != n_samples:
        raise ValueError(f"X has {n_samples} rows but y has {len(y)} labels")
    return [str(v) for v in y]
