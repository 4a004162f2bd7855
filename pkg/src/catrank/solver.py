"""Categoriser valuation by synchronous fixed-point iteration.

Every strength satisfies ``v_i = 1 / (1 + sum of attacker strengths)``. The map
``F`` behind that equation is non-increasing, so iterating it from the zero vector
yields an increasing even subsequence and a decreasing odd subsequence that squeeze
the unique fixed point. :func:`solve_certified` exposes that pair as per-argument
bounds.

Floating-point ``F`` is itself monotone (sums of non-negative terms, ``1 + s`` and
``1 / x`` all round monotonically), so the bracketing chain also holds for the
computed iterates. The bounds do not account for the gap between the rounded map
and the exact one.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels
from .framework import ArgumentationFramework, AttackMatrix

DEFAULT_TOLERANCE = 1e-9
DEFAULT_MAX_ITERATIONS = 10_000
NORMS = {"max": 0, "l2": 1, "l1": 2}


@dataclass(frozen=True)
class SolveConfig:
    """Stopping rule and start vector for :func:`solve`.

    ``norm`` measures the step ``v(k) - v(k-1)``; the Euclidean default is never
    smaller than the max-norm, so the max-norm step is also within tolerance at exit.
    """

    tolerance: float = DEFAULT_TOLERANCE
    max_iterations: int = DEFAULT_MAX_ITERATIONS
    init: np.ndarray | None = None
    norm: str = "l2"

    def __post_init__(self):
        if self.norm not in NORMS:
            raise ValueError(f"norm must be one of {', '.join(NORMS)}")
        if not self.tolerance > 0:
            raise ValueError("tolerance must be positive")
        if self.max_iterations < 1:
            raise ValueError("max_iterations must be at least 1")


@dataclass(frozen=True, eq=False)
class StrengthVector:
    """Solved strengths plus how they were obtained.

    ``converged`` is False when the iteration budget ran out; ``values`` then hold
    the last iterate.
    """

    values: np.ndarray
    iterations: int
    residual: float
    converged: bool = True

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, i):
        return self.values[i]


@dataclass(frozen=True, eq=False)
class CertifiedBounds:
    lower: np.ndarray
    upper: np.ndarray
    iterations: int
    widths: np.ndarray
    converged: bool = True
    history_lower: np.ndarray | None = None
    history_upper: np.ndarray | None = None

    @property
    def width(self) -> float:
        return float(np.max(self.upper - self.lower)) if len(self.lower) else 0.0


def _matrix(m: AttackMatrix | ArgumentationFramework) -> AttackMatrix:
    return m.attack_matrix() if isinstance(m, ArgumentationFramework) else m


def _vector(matrix: AttackMatrix, v, *, check_range: bool = True) -> np.ndarray:
    v = np.ascontiguousarray(v, dtype=np.float64)
    if v.shape != (matrix.n,):
        raise ValueError(f"vector has shape {v.shape}, expected ({matrix.n},)")
    if check_range and matrix.n and (np.min(v) < 0.0 or np.max(v) > 1.0):
        raise ValueError("vector entries must lie in [0, 1]")
    return v


def apply_f(matrix: AttackMatrix | ArgumentationFramework, v) -> np.ndarray:
    """One synchronous update: ``1 / (1 + D v)``."""
    matrix = _matrix(matrix)
    return kernels.apply_f(matrix.indptr, matrix.indices, _vector(matrix, v))


def residual(matrix: AttackMatrix | ArgumentationFramework, v) -> float:
    """Max-norm of ``v - F(v)``."""
    matrix = _matrix(matrix)
    v = _vector(matrix, v, check_range=False)
    if matrix.n == 0:
        return 0.0
    fv = kernels.apply_f(matrix.indptr, matrix.indices, v)
    return float(np.max(np.abs(v - fv)))


def solve(matrix: AttackMatrix | ArgumentationFramework, config: SolveConfig | None = None) -> StrengthVector:
    """Iterate ``v <- F(v)`` from ``config.init`` (default all ones) until the step is within tolerance."""
    matrix = _matrix(matrix)
    config = config or SolveConfig()
    init = np.ones(matrix.n) if config.init is None else _vector(matrix, config.init)
    v, k, _, converged = kernels.fixed_point(
        matrix.indptr, matrix.indices, init, float(config.tolerance), int(config.max_iterations), NORMS[config.norm]
    )
    return StrengthVector(v, int(k), residual(matrix, v), bool(converged))


def solve_certified(
    matrix: AttackMatrix | ArgumentationFramework,
    config: SolveConfig | None = None,
    *,
    record: bool = False,
) -> tuple[StrengthVector, CertifiedBounds]:
    """Bracket the fixed point between the even and odd iterates started at zero.

    Stops once ``max(upper - lower) <= tolerance``; ``config.init`` is ignored since
    the bracketing sequence must start at the zero vector. The returned strengths are
    the interval midpoints. With ``record=True`` every intermediate bracket is kept.
    """
    matrix = _matrix(matrix)
    config = config or SolveConfig()
    lower, upper, k, widths, hist_lo, hist_up, converged = kernels.sandwich(
        matrix.indptr, matrix.indices, matrix.n, float(config.tolerance), int(config.max_iterations), bool(record)
    )
    mid = lower + 0.5 * (upper - lower)
    bounds = CertifiedBounds(lower, upper, int(k), widths, bool(converged), hist_lo, hist_up)
    return StrengthVector(mid, int(k), residual(matrix, mid), bool(converged)), bounds
