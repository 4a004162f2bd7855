"""Abstract argumentation frameworks: arguments, attacks and the set machinery built on them."""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass

import numpy as np

ArgumentSet = frozenset  # frozenset[int] of argument indices

DENSE_LIMIT = 64


class FrameworkError(ValueError):
    """Raised for structurally invalid frameworks or arguments to framework operations."""


@dataclass(frozen=True, eq=False)
class AttackMatrix:
    """Row-oriented attack matrix: row ``i`` lists the attackers of argument ``i``.

    ``indptr``/``indices`` follow the CSR convention, with attacker indices sorted
    ascending inside each row. Summation order over a row is therefore fixed, which
    is what makes identical rows produce bit-identical strengths.
    """

    n: int
    indptr: np.ndarray
    indices: np.ndarray

    def row(self, i: int) -> np.ndarray:
        return self.indices[self.indptr[i] : self.indptr[i + 1]]

    def row_sums(self) -> np.ndarray:
        return np.diff(self.indptr)

    def dense(self) -> np.ndarray:
        d = np.zeros((self.n, self.n), dtype=np.uint8)
        rows = np.repeat(np.arange(self.n), self.row_sums())
        d[rows, self.indices] = 1
        return d

    def __repr__(self) -> str:
        if self.n <= DENSE_LIMIT:
            return f"AttackMatrix(n={self.n},\n{self.dense()})"
        return f"AttackMatrix(n={self.n}, nnz={len(self.indices)})"


class ArgumentationFramework:
    """A finite set of named arguments with a binary attack relation.

    Arguments are addressed by dense indices ``0..n-1``; ``attacks`` holds
    ``(attacker, target)`` index pairs. Instances are immutable.
    """

    __slots__ = ("_names", "_index", "_attacks", "_minus", "_plus", "_matrix")

    def __init__(self, names: Sequence[str], attacks: Iterable[tuple[int, int]] = ()):
        names = tuple(names)
        index: dict[str, int] = {}
        for i, name in enumerate(names):
            if not isinstance(name, str) or not name:
                raise FrameworkError(f"argument name at position {i} must be a non-empty string")
            if name in index:
                raise FrameworkError(f"duplicate argument name {name!r}")
            index[name] = i
        n = len(names)
        pairs = set()
        for a, b in attacks:
            a, b = int(a), int(b)
            if not (0 <= a < n and 0 <= b < n):
                raise FrameworkError(f"attack ({a}, {b}) references an index outside 0..{n - 1}")
            pairs.add((a, b))
        minus: list[list[int]] = [[] for _ in range(n)]
        plus: list[list[int]] = [[] for _ in range(n)]
        for a, b in sorted(pairs):
            plus[a].append(b)
            minus[b].append(a)
        for row in minus:
            row.sort()
        self._names = names
        self._index = index
        self._attacks = frozenset(pairs)
        self._minus = tuple(frozenset(r) for r in minus)
        self._plus = tuple(frozenset(r) for r in plus)
        indptr = np.zeros(n + 1, dtype=np.int64)
        indptr[1:] = np.cumsum([len(r) for r in minus]) if n else []
        indices = np.fromiter((j for r in minus for j in r), dtype=np.int64, count=int(indptr[-1]))
        self._matrix = AttackMatrix(n, indptr, indices)

    @property
    def n(self) -> int:
        return len(self._names)

    def __len__(self) -> int:
        return len(self._names)

    @property
    def names(self) -> tuple[str, ...]:
        return self._names

    @property
    def attacks(self) -> frozenset[tuple[int, int]]:
        return self._attacks

    def index_of(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise FrameworkError(f"unknown argument {name!r}") from None

    def named_attacks(self) -> list[tuple[str, str]]:
        return [(self._names[a], self._names[b]) for a, b in sorted(self._attacks)]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ArgumentationFramework):
            return NotImplemented
        return self._names == other._names and self._attacks == other._attacks

    def __hash__(self) -> int:
        return hash((self._names, self._attacks))

    def __repr__(self) -> str:
        return f"ArgumentationFramework(n={self.n}, attacks={len(self._attacks)})"

    def _check(self, x: int) -> int:
        if not 0 <= x < self.n:
            raise FrameworkError(f"argument index {x} out of range 0..{self.n - 1}")
        return x

    # -- neighbourhoods ---------------------------------------------------

    def attackers(self, x: int) -> frozenset[int]:
        """Arguments attacking ``x``."""
        return self._minus[self._check(x)]

    def attacked_by(self, x: int) -> frozenset[int]:
        """Arguments that ``x`` attacks."""
        return self._plus[self._check(x)]

    def defenders(self, x: int) -> frozenset[int]:
        """Attackers of the attackers of ``x``."""
        return self.attackers_of_set(self.attackers(x))

    def attackers_of_set(self, s: Iterable[int]) -> frozenset[int]:
        out: set[int] = set()
        for y in s:
            out |= self._minus[self._check(y)]
        return frozenset(out)

    def attacked_by_set(self, s: Iterable[int]) -> frozenset[int]:
        out: set[int] = set()
        for y in s:
            out |= self._plus[self._check(y)]
        return frozenset(out)

    def attack_matrix(self) -> AttackMatrix:
        return self._matrix

    # -- structure --------------------------------------------------------

    def weakly_connected_components(self) -> list[frozenset[int]]:
        """Components of the attack graph with edge direction ignored.

        Returned in order of their smallest member.
        """
        seen = [False] * self.n
        comps = []
        for start in range(self.n):
            if seen[start]:
                continue
            seen[start] = True
            stack, comp = [start], [start]
            while stack:
                u = stack.pop()
                for w in self._minus[u] | self._plus[u]:
                    if not seen[w]:
                        seen[w] = True
                        stack.append(w)
                        comp.append(w)
            comps.append(frozenset(comp))
        return comps

    def restrict(self, keep: Iterable[int]) -> ArgumentationFramework:
        """Induced sub-framework on ``keep``, which must be a union of whole components."""
        keep = frozenset(self._check(i) for i in keep)
        for comp in self.weakly_connected_components():
            if comp & keep and not comp <= keep:
                raise FrameworkError("restriction set splits a weakly connected component")
        order = sorted(keep)
        remap = {old: new for new, old in enumerate(order)}
        attacks = [(remap[a], remap[b]) for a, b in self._attacks if a in keep]
        return ArgumentationFramework([self._names[i] for i in order], attacks)

    def apply_isomorphism(self, perm: Sequence[int]) -> ArgumentationFramework:
        """Relabel so that argument ``i`` becomes argument ``perm[i]``, carrying its name."""
        perm = [int(p) for p in perm]
        if sorted(perm) != list(range(self.n)):
            raise FrameworkError("permutation is not a bijection on the argument indices")
        names = [""] * self.n
        for i, p in enumerate(perm):
            names[p] = self._names[i]
        return ArgumentationFramework(names, [(perm[a], perm[b]) for a, b in self._attacks])

    # -- set-theoretic semantics machinery --------------------------------

    def is_conflict_free(self, s: Iterable[int]) -> bool:
        s = frozenset(s)
        return not (s & self.attackers_of_set(s))

    def characteristic_function(self, s: Iterable[int]) -> frozenset[int]:
        """Arguments all of whose attackers are attacked by ``s``."""
        hit = self.attacked_by_set(s)
        return frozenset(x for x in range(self.n) if self._minus[x] <= hit)


def new_af(names: Sequence[str], attacks: Iterable[tuple[str, str]] = ()) -> ArgumentationFramework:
    """Build a framework from argument names and ``(attacker, target)`` name pairs."""
    index: dict[str, int] = {}
    for i, name in enumerate(names):
        if name in index:
            raise FrameworkError(f"duplicate argument name {name!r}")
        index[name] = i
    pairs = []
    for a, b in attacks:
        for name in (a, b):
            if name not in index:
                raise FrameworkError(f"attack ({a}, {b}) references unknown argument {name!r}")
        pairs.append((index[a], index[b]))
    return ArgumentationFramework(names, pairs)
