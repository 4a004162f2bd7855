"""Instance-level checks of the ranking axioms and a seeded random falsifier.

Each checker scans ordered pairs ``(x, y)`` of a framework, evaluates the axiom's
guard on the ranking, and judges the required conclusion with
:func:`~catrank.ranking.certified_compare`. A failed conclusion that the bounds
cannot back is filed under ``unresolved`` and never counted as a violation.
"""

from __future__ import annotations

import enum
import itertools
from collections.abc import Callable, Sequence
from dataclasses import dataclass, field

from .framework import ArgumentationFramework
from .generator import STREAM_SUBSETS, STREAM_TRIAL, GenSpec, Stream, derive_seed, random_af, random_permutation
from .ranking import Ranking, Relation, categoriser_ranking, certified_compare, group_compare

CHECK_TOLERANCE = 1e-13
MAX_ALL_SUBSETS_COMPONENTS = 8


class AxiomId(str, enum.Enum):
    AB = "Ab"
    IN = "In"
    VP = "VP"
    DP = "DP"
    CT = "CT"
    SCT = "SCT"
    CP = "CP"
    QP = "QP"
    DDP = "DDP"

    @classmethod
    def parse(cls, text: str) -> AxiomId:
        for a in cls:
            if a.value.lower() == text.strip().lower():
                return a
        raise ValueError(f"unknown axiom {text!r}; expected one of {', '.join(a.value for a in cls)}")


@dataclass
class Witness:
    x: int
    y: int
    detail: dict = field(default_factory=dict)


@dataclass
class AxiomVerdict:
    axiom: AxiomId
    witnesses: list[Witness] = field(default_factory=list)
    unresolved: list[Witness] = field(default_factory=list)
    observations: dict = field(default_factory=dict)

    @property
    def holds(self) -> bool:
        return not self.witnesses

    def merge(self, other: AxiomVerdict) -> None:
        self.witnesses += other.witnesses
        self.unresolved += other.unresolved
        for key, value in other.observations.items():
            if isinstance(value, bool):
                self.observations[key] = self.observations.get(key, True) and value
            elif isinstance(value, int):
                self.observations[key] = self.observations.get(key, 0) + value


def default_solve(af: ArgumentationFramework) -> Ranking:
    return categoriser_ranking(af, CHECK_TOLERANCE, certify=True)


def _require(verdict: AxiomVerdict, r: Ranking, x: int, y: int, strict: bool, **detail) -> None:
    rel = certified_compare(r, x, y)
    if rel is Relation.UNRESOLVED:
        verdict.unresolved.append(Witness(x, y, detail))
    elif rel is Relation.BELOW or (strict and rel is Relation.EQUIVALENT):
        verdict.witnesses.append(Witness(x, y, {**detail, "observed": rel.value}))


def _pairs(af: ArgumentationFramework):
    return ((x, y) for x in range(af.n) for y in range(af.n) if x != y)


def check_vp(af: ArgumentationFramework, r: Ranking) -> AxiomVerdict:
    """Unattacked ``x`` must rank at least as high as attacked ``y``."""
    v = AxiomVerdict(AxiomId.VP)
    strict_held = True
    for x, y in _pairs(af):
        if not af.attackers(x) and af.attackers(y):
            _require(v, r, x, y, strict=False)
            strict_held &= certified_compare(r, x, y) is Relation.ABOVE
    v.observations["strict_form_held"] = strict_held
    return v


def check_dp(af: ArgumentationFramework, r: Ranking) -> AxiomVerdict:
    v = AxiomVerdict(AxiomId.DP)
    for x, y in _pairs(af):
        if len(af.attackers(x)) == len(af.attackers(y)) and af.defenders(x) and not af.defenders(y):
            _require(v, r, x, y, strict=False)
    return v


def _counter_transitivity(af: ArgumentationFramework, r: Ranking, strict: bool) -> AxiomVerdict:
    v = AxiomVerdict(AxiomId.SCT if strict else AxiomId.CT)
    for x, y in _pairs(af):
        g = group_compare(r, af.attackers(y), af.attackers(x))
        if g.strict if strict else g.geq:
            _require(v, r, x, y, strict=strict)
    return v


def check_ct(af: ArgumentationFramework, r: Ranking) -> AxiomVerdict:
    """If ``y``'s attackers dominate ``x``'s as a group, ``x`` must rank at least as high."""
    return _counter_transitivity(af, r, strict=False)


def check_sct(af: ArgumentationFramework, r: Ranking) -> AxiomVerdict:
    return _counter_transitivity(af, r, strict=True)


def check_cp(af: ArgumentationFramework, r: Ranking) -> AxiomVerdict:
    v = AxiomVerdict(AxiomId.CP)
    for x, y in _pairs(af):
        if len(af.attackers(x)) < len(af.attackers(y)):
            _require(v, r, x, y, strict=True)
    return v


def check_qp(af: ArgumentationFramework, r: Ranking) -> AxiomVerdict:
    """Some attacker of ``y`` beating every attacker of ``x`` demands ``x`` strictly above ``y``.

    With no attackers on ``x`` the inner quantifier is vacuous; such instantiations
    are counted in ``observations["vacuous_guard_pairs"]`` and marked in witnesses.
    """
    v = AxiomVerdict(AxiomId.QP)
    vacuous = 0
    for x, y in _pairs(af):
        ax = af.attackers(x)
        champion = next(
            (yp for yp in sorted(af.attackers(y)) if all(r.level[yp] < r.level[xp] for xp in ax)),
            None,
        )
        if champion is None:
            continue
        vacuous += not ax
        _require(v, r, x, y, strict=True, y_prime=champion, vacuous=not ax)
    v.observations["vacuous_guard_pairs"] = vacuous
    return v


def is_simple_defense(af: ArgumentationFramework, x: int) -> bool:
    """Every defender of ``x`` attacks exactly one attacker of ``x``."""
    ax = af.attackers(x)
    return all(len(af.attacked_by(d) & ax) == 1 for d in af.defenders(x))


def is_distributed_defense(af: ArgumentationFramework, x: int) -> bool:
    """Every attacker of ``x`` is itself attacked."""
    return all(af.attackers(a) for a in af.attackers(x))


def check_ddp(af: ArgumentationFramework, r: Ranking) -> AxiomVerdict:
    v = AxiomVerdict(AxiomId.DDP)
    simple = [is_simple_defense(af, x) for x in range(af.n)]
    distributed = [is_distributed_defense(af, x) for x in range(af.n)]
    for x, y in _pairs(af):
        if not (simple[x] and distributed[x] and simple[y] and not distributed[y]):
            continue
        if len(af.attackers(x)) == len(af.attackers(y)) and len(af.defenders(x)) == len(af.defenders(y)):
            _require(v, r, x, y, strict=True)
    return v


def _agreement(
    verdict: AxiomVerdict, r1: Ranking, r2: Ranking, pairs, mapped: Callable[[int], int], detail: dict
) -> None:
    for x, y in pairs:
        a = certified_compare(r1, x, y)
        b = certified_compare(r2, mapped(x), mapped(y))
        if Relation.UNRESOLVED in (a, b):
            verdict.unresolved.append(Witness(x, y, dict(detail)))
        elif a is not b:
            verdict.witnesses.append(Witness(x, y, {**detail, "original": a.value, "transformed": b.value}))


def check_ab(
    af: ArgumentationFramework, perm: Sequence[int], solve_fn: Callable[[ArgumentationFramework], Ranking] = default_solve
) -> AxiomVerdict:
    """Rankings of ``af`` and its relabelling under ``perm`` must agree pairwise."""
    perm = list(perm)
    image = af.apply_isomorphism(perm)
    v = AxiomVerdict(AxiomId.AB)
    _agreement(v, solve_fn(af), solve_fn(image), _pairs(af), perm.__getitem__, {"permutation": perm})
    return v


def check_in(
    af: ArgumentationFramework, component_union, solve_fn: Callable[[ArgumentationFramework], Ranking] = default_solve
) -> AxiomVerdict:
    """Comparisons inside a union of components must not change when the rest is dropped."""
    keep = sorted(set(component_union))
    sub = af.restrict(keep)
    remap = {old: new for new, old in enumerate(keep)}
    v = AxiomVerdict(AxiomId.IN)
    pairs = [(x, y) for x in keep for y in keep if x != y]
    _agreement(v, solve_fn(af), solve_fn(sub), pairs, remap.__getitem__, {"kept": keep})
    return v


def check_ab_sampled(
    af: ArgumentationFramework, samples: int = 10, seed: int = 0, solve_fn=default_solve
) -> AxiomVerdict:
    v = AxiomVerdict(AxiomId.AB)
    for s in range(samples):
        v.merge(check_ab(af, random_permutation(af.n, seed, s), solve_fn))
    v.observations["samples"] = samples
    return v


def component_unions(af: ArgumentationFramework, seed: int = 0, max_all: int = MAX_ALL_SUBSETS_COMPONENTS):
    """All non-empty unions of components, or a seeded sample of ``2**max_all - 1`` when there are more."""
    comps = af.weakly_connected_components()
    c = len(comps)
    if c <= max_all:
        masks = range(1, 2**c)
    else:
        stream = Stream(seed, STREAM_SUBSETS)
        masks = [1 + stream.below(2**c - 1) for _ in range(2**max_all - 1)]
    for mask in masks:
        yield frozenset().union(*(comps[i] for i in range(c) if mask >> i & 1))


def check_in_all(af: ArgumentationFramework, seed: int = 0, solve_fn=default_solve) -> AxiomVerdict:
    v = AxiomVerdict(AxiomId.IN)
    full = solve_fn(af)
    count = 0
    for keep in component_unions(af, seed):
        count += 1
        v.merge(check_in(af, keep, lambda g, _full=full: _full if g is af else solve_fn(g)))
    v.observations["subsets"] = count
    return v


PAIR_CHECKS = {
    AxiomId.VP: check_vp,
    AxiomId.DP: check_dp,
    AxiomId.CT: check_ct,
    AxiomId.SCT: check_sct,
    AxiomId.CP: check_cp,
    AxiomId.QP: check_qp,
    AxiomId.DDP: check_ddp,
}


def check_axiom(
    axiom: AxiomId,
    af: ArgumentationFramework,
    ranking: Ranking | None = None,
    *,
    seed: int = 0,
    samples: int = 10,
    solve_fn=default_solve,
) -> AxiomVerdict:
    """Run one axiom check; Ab and In sample permutations / component unions from ``seed``."""
    if axiom is AxiomId.AB:
        return check_ab_sampled(af, samples, seed, solve_fn)
    if axiom is AxiomId.IN:
        return check_in_all(af, seed, solve_fn)
    return PAIR_CHECKS[axiom](af, ranking if ranking is not None else solve_fn(af))


@dataclass
class FalsifierReport:
    axiom: AxiomId
    trials: int
    seed: int
    witness: tuple[ArgumentationFramework, AxiomVerdict] | None = None
    trial_index: int | None = None


def trial_framework(seed: int, trial: int, n_max: int, edge_prob_range: tuple[float, float]) -> ArgumentationFramework:
    """The framework examined at ``trial``: n uniform in [3, n_max], edge probability uniform in range."""
    lo, hi = edge_prob_range
    stream = Stream(seed, STREAM_TRIAL, trial)
    n = 3 + stream.below(max(n_max, 3) - 2)
    p = lo + (hi - lo) * stream.uniform()
    return random_af(GenSpec(n, p, True, derive_seed(seed, STREAM_TRIAL, trial)))


def falsify(
    axiom: AxiomId,
    n_max: int = 9,
    edge_prob_range: tuple[float, float] = (0.0, 0.5),
    trials: int = 1000,
    seed: int = 0,
    solve_fn=default_solve,
) -> FalsifierReport:
    """Search random frameworks for a violation; the first (lowest trial index) one is reported."""
    if trials < 1:
        raise ValueError("trials must be at least 1")
    lo, hi = edge_prob_range
    if not 0.0 <= lo <= hi <= 1.0:
        raise ValueError("edge_prob_range must satisfy 0 <= lo <= hi <= 1")
    for t in range(trials):
        af = trial_framework(seed, t, n_max, edge_prob_range)
        verdict = check_axiom(axiom, af, seed=derive_seed(seed, STREAM_TRIAL, t, 1), solve_fn=solve_fn)
        if not verdict.holds:
            return FalsifierReport(axiom, t + 1, seed, (af, verdict), t)
    return FalsifierReport(axiom, trials, seed)
