"""Rankings induced by categoriser strengths, and comparison of argument groups."""

from __future__ import annotations

import enum
import itertools
from collections.abc import Iterable
from dataclasses import dataclass, field

import numpy as np

from .framework import ArgumentationFramework
from .solver import CertifiedBounds, SolveConfig, StrengthVector, solve, solve_certified

BRUTEFORCE_CAP = 8


class Relation(str, enum.Enum):
    ABOVE = "strictly_above"
    EQUIVALENT = "equivalent"
    BELOW = "strictly_below"
    UNRESOLVED = "unresolved"


@dataclass(frozen=True, eq=False)
class Ranking:
    """A total preorder stored as ordered equivalence classes, most acceptable first.

    ``lower``/``upper`` are optional certified bounds on the strengths; when present
    :func:`certified_compare` refuses to assert orderings the bounds cannot support.
    """

    classes: tuple[tuple[int, ...], ...]
    strength_of: np.ndarray
    tie_epsilon: float = 0.0
    lower: np.ndarray | None = None
    upper: np.ndarray | None = None
    level: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        level = np.empty(len(self.strength_of), dtype=np.int64)
        for pos, cls in enumerate(self.classes):
            level[list(cls)] = pos
        object.__setattr__(self, "level", level)

    @property
    def n(self) -> int:
        return len(self.strength_of)

    @property
    def certified(self) -> bool:
        return self.lower is not None

    def class_of(self, x: int) -> tuple[int, ...]:
        return self.classes[self.level[x]]


def rank_from_strengths(
    v: StrengthVector | np.ndarray,
    tie_epsilon: float = 0.0,
    bounds: CertifiedBounds | None = None,
) -> Ranking:
    """Sort descending by strength and merge neighbours closer than ``tie_epsilon``.

    Merging runs along the sorted chain, so a class may span more than
    ``tie_epsilon`` overall; that keeps the relation transitive.
    """
    if tie_epsilon < 0:
        raise ValueError("tie_epsilon must be non-negative")
    values = np.asarray(v.values if isinstance(v, StrengthVector) else v, dtype=np.float64)
    order = sorted(range(len(values)), key=lambda i: (-values[i], i))
    classes: list[list[int]] = []
    prev = None
    for i in order:
        if prev is not None and values[prev] - values[i] <= tie_epsilon:
            classes[-1].append(i)
        else:
            classes.append([i])
        prev = i
    return Ranking(
        tuple(tuple(sorted(c)) for c in classes),
        values,
        float(tie_epsilon),
        None if bounds is None else bounds.lower,
        None if bounds is None else bounds.upper,
    )


def categoriser_ranking(
    af: ArgumentationFramework,
    tolerance: float = 1e-9,
    *,
    certify: bool = False,
    tie_epsilon: float | None = None,
    max_iterations: int = 10_000,
) -> Ranking:
    """Solve ``af`` and rank it. ``tie_epsilon`` defaults to ten times the tolerance."""
    config = SolveConfig(tolerance, max_iterations)
    eps = 10 * tolerance if tie_epsilon is None else tie_epsilon
    if certify:
        strengths, bounds = solve_certified(af, config)
        return rank_from_strengths(strengths, eps, bounds)
    return rank_from_strengths(solve(af, config), eps)


def _check_index(r: Ranking, x: int) -> None:
    if not 0 <= x < r.n:
        raise IndexError(f"argument index {x} out of range 0..{r.n - 1}")


def compare(r: Ranking, x: int, y: int) -> Relation:
    _check_index(r, x)
    _check_index(r, y)
    lx, ly = r.level[x], r.level[y]
    if lx < ly:
        return Relation.ABOVE
    if lx > ly:
        return Relation.BELOW
    return Relation.EQUIVALENT


def certified_compare(r: Ranking, x: int, y: int) -> Relation:
    """Like :func:`compare`, but backed by the ranking's bounds when it has them.

    A strict order is reported only if the intervals are disjoint in the right
    direction; equivalence only if the intervals overlap. Anything else is
    ``UNRESOLVED``.
    """
    rel = compare(r, x, y)
    if not r.certified:
        return rel
    lo, up = r.lower, r.upper
    if rel is Relation.ABOVE:
        return rel if lo[x] > up[y] else Relation.UNRESOLVED
    if rel is Relation.BELOW:
        return rel if up[x] < lo[y] else Relation.UNRESOLVED
    overlap = lo[x] <= up[y] and lo[y] <= up[x]
    return rel if overlap else Relation.UNRESOLVED


@dataclass(frozen=True)
class GroupComparisonResult:
    geq: bool
    strict: bool


def group_compare(r: Ranking, s1: Iterable[int], s2: Iterable[int]) -> GroupComparisonResult:
    """Decide ``S1 >= S2`` (an injection from S2 into S1 that never maps downwards).

    Matching both sets best-first position by position is optimal: any valid
    injection can be exchanged into it without breaking a position.
    """
    a = sorted(int(r.level[x]) for x in s1)
    b = sorted(int(r.level[x]) for x in s2)
    if len(a) < len(b):
        return GroupComparisonResult(False, False)
    pairs = list(zip(a, b))
    if any(la > lb for la, lb in pairs):
        return GroupComparisonResult(False, False)
    strict = len(b) < len(a) or any(la < lb for la, lb in pairs)
    return GroupComparisonResult(True, strict)


def group_compare_bruteforce(r: Ranking, s1: Iterable[int], s2: Iterable[int]) -> GroupComparisonResult:
    """Reference version of :func:`group_compare` that enumerates every injection."""
    s1, s2 = list(s1), list(s2)
    if len(s1) > BRUTEFORCE_CAP or len(s2) > BRUTEFORCE_CAP:
        raise ValueError(f"brute-force group comparison is capped at {BRUTEFORCE_CAP} elements per set")
    geq = strict = False
    for image in itertools.permutations(s1, len(s2)):
        rels = [compare(r, d, x) for d, x in zip(image, s2)]
        if any(rel is Relation.BELOW for rel in rels):
            continue
        geq = True
        if len(s2) < len(s1) or any(rel is Relation.ABOVE for rel in rels):
            strict = True
            break
    return GroupComparisonResult(geq, strict)
