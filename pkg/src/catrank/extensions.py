"""Grounded, complete, preferred and stable extensions by exhaustive enumeration."""

from __future__ import annotations

from dataclasses import dataclass

from .framework import ArgumentationFramework

ENUMERATION_CAP = 20
SEMANTICS = ("grounded", "complete", "preferred", "stable")


class EnumerationCapError(ValueError):
    pass


@dataclass(frozen=True)
class ExtensionSet:
    semantics: str
    extensions: tuple[frozenset[int], ...]

    def __len__(self) -> int:
        return len(self.extensions)

    def __iter__(self):
        return iter(self.extensions)


def _normalise(sets) -> tuple[frozenset[int], ...]:
    return tuple(sorted(sets, key=lambda s: (len(s), sorted(s))))


def grounded(af: ArgumentationFramework) -> frozenset[int]:
    """Least fixed point of the characteristic function, iterated up from the empty set."""
    s: frozenset[int] = frozenset()
    while True:
        nxt = af.characteristic_function(s)
        if nxt == s:
            return s
        s = nxt


def is_admissible(af: ArgumentationFramework, s) -> bool:
    s = frozenset(s)
    return af.is_conflict_free(s) and s <= af.characteristic_function(s)


def is_stable(af: ArgumentationFramework, s) -> bool:
    s = frozenset(s)
    return af.is_conflict_free(s) and af.attacked_by_set(s) == frozenset(range(af.n)) - s


class _Masks:
    def __init__(self, af: ArgumentationFramework):
        self.n = af.n
        self.full = (1 << af.n) - 1
        self.minus = [sum(1 << j for j in af.attackers(i)) for i in range(af.n)]
        self.plus = [sum(1 << j for j in af.attacked_by(i)) for i in range(af.n)]

    def hit(self, s: int) -> int:
        out, i = 0, 0
        while s:
            if s & 1:
                out |= self.plus[i]
            s >>= 1
            i += 1
        return out

    def char(self, s: int) -> int:
        hit = self.hit(s)
        out = 0
        for x in range(self.n):
            if self.minus[x] & ~hit == 0:
                out |= 1 << x
        return out

    def conflict_free(self):
        """Yield every conflict-free set as a bitmask, by include/exclude backtracking."""
        n, minus, plus = self.n, self.minus, self.plus

        def rec(i: int, cur: int):
            if i == n:
                yield cur
                return
            bit = 1 << i
            if not (minus[i] & (cur | bit)) and not (plus[i] & cur):
                yield from rec(i + 1, cur | bit)
            yield from rec(i + 1, cur)

        yield from rec(0, 0)


def _to_set(mask: int) -> frozenset[int]:
    return frozenset(i for i in range(mask.bit_length()) if mask >> i & 1)


def _guard(af: ArgumentationFramework, cap: int) -> _Masks:
    if af.n > cap:
        raise EnumerationCapError(f"framework has {af.n} arguments; enumeration is capped at {cap}")
    return _Masks(af)


def complete_extensions(af: ArgumentationFramework, cap: int = ENUMERATION_CAP) -> ExtensionSet:
    m = _guard(af, cap)
    return ExtensionSet("complete", _normalise(_to_set(s) for s in m.conflict_free() if m.char(s) == s))


def admissible_sets(af: ArgumentationFramework, cap: int = ENUMERATION_CAP) -> list[frozenset[int]]:
    m = _guard(af, cap)
    return list(_normalise(_to_set(s) for s in m.conflict_free() if s & ~m.char(s) == 0))


def preferred_extensions(af: ArgumentationFramework, cap: int = ENUMERATION_CAP) -> ExtensionSet:
    m = _guard(af, cap)
    admissible = [s for s in m.conflict_free() if s & ~m.char(s) == 0]
    admissible.sort(key=lambda s: -s.bit_count())
    maximal: list[int] = []
    for s in admissible:
        if not any(s & t == s for t in maximal):
            maximal.append(s)
    return ExtensionSet("preferred", _normalise(_to_set(s) for s in maximal))


def stable_extensions(af: ArgumentationFramework, cap: int = ENUMERATION_CAP) -> ExtensionSet:
    m = _guard(af, cap)
    return ExtensionSet("stable", _normalise(_to_set(s) for s in m.conflict_free() if m.hit(s) == m.full & ~s))


def extensions(af: ArgumentationFramework, semantics: str, cap: int = ENUMERATION_CAP) -> ExtensionSet:
    if semantics == "grounded":
        return ExtensionSet("grounded", (grounded(af),))
    try:
        fn = {"complete": complete_extensions, "preferred": preferred_extensions, "stable": stable_extensions}[semantics]
    except KeyError:
        raise ValueError(f"unknown semantics {semantics!r}; expected one of {', '.join(SEMANTICS)}") from None
    return fn(af, cap)
