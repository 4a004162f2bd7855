"""Categoriser strength valuation, ranking semantics and axiom checks for abstract argumentation."""

from .framework import ArgumentationFramework, AttackMatrix, FrameworkError, new_af
from .kernels import BACKEND
from .ranking import Ranking, Relation, categoriser_ranking, compare, group_compare, rank_from_strengths
from .solver import CertifiedBounds, SolveConfig, StrengthVector, apply_f, residual, solve, solve_certified

__all__ = [
    "ArgumentationFramework",
    "AttackMatrix",
    "BACKEND",
    "CertifiedBounds",
    "FrameworkError",
    "Ranking",
    "Relation",
    "SolveConfig",
    "StrengthVector",
    "apply_f",
    "categoriser_ranking",
    "compare",
    "group_compare",
    "new_af",
    "rank_from_strengths",
    "residual",
    "solve",
    "solve_certified",
]
