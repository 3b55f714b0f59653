"""Dense float64 tensor: the value type flowing through the math core.

A Tensor is an immutable view over a C-ordered float64 numpy array. Every
construction path checks finiteness, so any NaN/Inf produced by a public
operation surfaces immediately instead of corrupting downstream state.
"""

from __future__ import annotations

import numpy as np

from ..errors import NumericalError, ShapeError


class Tensor:
    """Row-major float64 array with guaranteed-finite entries."""

    __slots__ = ("_a",)

    def __init__(self, data) -> None:
        arr = np.array(data, dtype=np.float64, order="C", copy=True)
        _require_finite(arr)
        arr.flags.writeable = False
        self._a = arr

    @classmethod
    def _wrap(cls, arr: np.ndarray) -> "Tensor":
        # Internal fast path: takes ownership of a freshly computed array.
        t = object.__new__(cls)
        a = np.ascontiguousarray(arr, dtype=np.float64)
        _require_finite(a)
        a.flags.writeable = False
        t._a = a
        return t

    @classmethod
    def zeros(cls, shape) -> "Tensor":
        return cls._wrap(np.zeros(shape, dtype=np.float64))

    @classmethod
    def full(cls, shape, value: float) -> "Tensor":
        return cls._wrap(np.full(shape, float(value), dtype=np.float64))

    @property
    def data(self) -> np.ndarray:
        """The underlying read-only float64 array."""
        return self._a

    @property
    def shape(self) -> tuple[int, ...]:
        return self._a.shape

    @property
    def ndim(self) -> int:
        return self._a.ndim

    @property
    def size(self) -> int:
        return self._a.size

    def item(self) -> float:
        if self._a.size != 1:
            raise ShapeError(f"item() needs a single-element tensor, got shape {self.shape}")
        return float(self._a.reshape(-1)[0])

    def tolist(self):
        return self._a.tolist()

    def copy(self) -> "Tensor":
        return Tensor._wrap(self._a.copy())

    def __repr__(self) -> str:
        return f"Tensor(shape={self.shape})"


def _require_finite(arr: np.ndarray) -> None:
    if not np.all(np.isfinite(arr)):
        raise NumericalError("tensor contains non-finite entries (NaN or Inf)")


def as_array(x) -> np.ndarray:
    """Coerce a Tensor or array-like to a float64 ndarray (no finiteness check)."""
    if isinstance(x, Tensor):
        return x.data
    return np.asarray(x, dtype=np.float64)
