"""Forward-pass FLOP accounting shared by the ops and the analytic estimator.

Convention: one multiply-accumulate = 2 FLOPs; bias additions ride along
inside the multiply-add budget and are not counted separately. Structural
ops (concat, transpose) are free. The same cost helpers drive both the
runtime instrumentation and the closed-form estimate, so the two routes
can only disagree if the executed op sequence differs from the documented
one.
"""

from __future__ import annotations

import threading
from contextlib import contextmanager

_state = threading.local()


class FlopCounter:
    """Accumulates forward FLOPs while active on the current thread."""

    def __init__(self) -> None:
        self.total = 0


@contextmanager
def count_flops():
    """Context manager yielding a FlopCounter fed by every op executed inside."""
    counter = FlopCounter()
    prev = getattr(_state, "counter", None)
    _state.counter = counter
    try:
        yield counter
    finally:
        _state.counter = prev


def record(n: int) -> None:
    counter = getattr(_state, "counter", None)
    if counter is not None:
        counter.total += int(n)


# Per-op cost formulas (forward only).

def cost_affine(n: int, p: int, q: int) -> int:
    return 2 * n * p * q


def cost_conv1d(t: int, d: int, k: int, co: int) -> int:
    return 2 * t * k * d * co


def cost_relu(size: int) -> int:
    return size


def cost_mean(in_size: int) -> int:
    return in_size


def cost_add(size: int) -> int:
    return size


def cost_l2norm(rows: int, cols: int) -> int:
    return rows * (3 * cols + 1)


def cost_scale(size: int) -> int:
    return size + 1


def cost_cross_entropy(n: int, m: int) -> int:
    return n * (3 * m + 3)


def cost_mse(size: int) -> int:
    return 3 * size
