"""scikit-learn style wrapper for batch classification of matrices.

``fit`` learns the equivalence classes present in a stack of zero-diagonal
matrices, ``transform`` maps each matrix to its criteria flags and
``predict`` returns the index of its class among those seen in ``fit``.
"""
from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from . import matrix_fps
from .errors import NonZeroDiagonal
from .matrix_fps import ZeroDiagMatrix

FLAG_NAMES = ("is_bott", "is_perfect", "is_strong", "is_manifold", "is_orientable")


def check_matrix_stack(X) -> list[ZeroDiagMatrix]:
    """Validate an array-like of shape (n_samples, n, n) with 0/1 entries and zero diagonal."""
    arr = np.asarray(X)
    if arr.ndim == 2:
        arr = arr[None, :, :]
    if arr.ndim != 3 or arr.shape[1] != arr.shape[2]:
        raise ValueError(f"expected shape (n_samples, n, n), got {arr.shape}")
    if arr.shape[0] == 0 or arr.shape[1] == 0:
        raise ValueError("need at least one nonempty matrix")
    if not np.isin(arr, (0, 1)).all():
        raise ValueError("entries must be 0 or 1")
    out = []
    for k, m in enumerate(arr.astype(np.uint8)):
        try:
            out.append(ZeroDiagMatrix.of(m.tolist()))
        except NonZeroDiagonal as exc:
            raise ValueError(f"sample {k}: {exc}") from None
    return out


class StructureClassifier(TransformerMixin, BaseEstimator):
    """Classify zero-diagonal matrices up to simultaneous row/column permutation.

    Parameters
    ----------
    flags : tuple of str
        Which criteria ``transform`` reports, as columns in this order.
    """

    def __init__(self, flags=FLAG_NAMES):
        self.flags = flags

    def fit(self, X, y=None):
        mats = check_matrix_stack(X)
        unknown = set(self.flags) - set(FLAG_NAMES)
        if unknown:
            raise ValueError(f"unknown flags {sorted(unknown)}")
        self.n_ = mats[0].n
        if any(m.n != self.n_ for m in mats):
            raise ValueError("all matrices must have the same size")
        forms = sorted({matrix_fps.canonical_form(m) for m in mats}, key=lambda m: m.row_strings())
        self.classes_ = [m.row_strings() for m in forms]
        self._index = {m: i for i, m in enumerate(forms)}
        return self

    def _checked(self, X):
        check_is_fitted(self, "classes_")
        mats = check_matrix_stack(X)
        if any(m.n != self.n_ for m in mats):
            raise ValueError(f"estimator was fitted on {self.n_}x{self.n_} matrices")
        return mats

    def transform(self, X):
        mats = self._checked(X)
        funcs = [getattr(matrix_fps, name) for name in self.flags]
        return np.array([[int(f(m)) for f in funcs] for m in mats], dtype=np.int8).reshape(len(mats), len(funcs))

    def predict(self, X):
        """Class index from ``classes_``, or -1 for a class not seen during fit."""
        mats = self._checked(X)
        return np.array([self._index.get(matrix_fps.canonical_form(m), -1) for m in mats], dtype=int)
