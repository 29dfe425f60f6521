"""Relations below the natural order, closures, and multitilde equivalence.

A multitilde of arity ``k`` is the same thing as a reflexive relation on
``{1, ..., k+1}`` contained in ``<=``: the pair ``(x, y)`` becomes
``(x, y+1)``.  Under that correspondence the transitive closure of the
relation gives the pseudotransitive closure of the multitilde, and two
multitildes act identically on every tuple of languages exactly when their
pseudotransitive closures agree.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Tuple

from .errors import CompositionIndexError, InputError
from .tilde import Multitilde, Pair, compose_partial, dec_set


@dataclass(frozen=True)
class Relation:
    """Reflexive relation on ``{1..size}`` contained in ``<=``.

    ``pairs`` includes the diagonal and is kept sorted.
    """

    size: int
    pairs: Tuple[Pair, ...]

    def __post_init__(self):
        if not isinstance(self.size, int) or self.size < 1:
            raise InputError(f"size must be a positive integer, got {self.size!r}", "size")
        ps = set()
        for p in self.pairs:
            try:
                x, y = p
            except (TypeError, ValueError):
                raise InputError(f"pair {p!r} is not a 2-element sequence", "pairs") from None
            if not 1 <= x <= y <= self.size:
                raise InputError(f"pair ({x},{y}) is not in the order on 1..{self.size}", "pairs")
            ps.add((x, y))
        missing = [x for x in range(1, self.size + 1) if (x, x) not in ps]
        if missing:
            raise InputError(f"relation is not reflexive at {missing}", "pairs")
        object.__setattr__(self, "pairs", tuple(sorted(ps)))

    @classmethod
    def from_strict(cls, size: int, pairs: Iterable[Pair]) -> "Relation":
        """Build from off-diagonal pairs, adding the diagonal."""
        return cls(size, tuple(pairs) + tuple((x, x) for x in range(1, size + 1)))

    @property
    def pair_set(self) -> frozenset:
        return frozenset(self.pairs)

    def is_transitive(self) -> bool:
        ps = self.pair_set
        return all((a, d) in ps for a, b in ps for c, d in ps if b == c)

    def to_json(self) -> dict:
        return {"size": self.size, "pairs": [[x, y] for x, y in self.pairs]}

    @classmethod
    def from_json(cls, obj) -> "Relation":
        if not isinstance(obj, dict) or "size" not in obj:
            raise InputError("relation must be an object with 'size'", "size")
        pairs = obj.get("pairs", [])
        if not isinstance(pairs, list):
            raise InputError("'pairs' must be a list", "pairs")
        return cls(obj["size"], tuple(tuple(p) if isinstance(p, list) else p for p in pairs))


def phi(t: Multitilde) -> Relation:
    return Relation.from_strict(t.arity + 1, [(x, y + 1) for x, y in t.pairs])


def phi_inv(r: Relation) -> Multitilde:
    return Multitilde(r.size - 1, tuple((x, y - 1) for x, y in r.pairs if x != y))


def shift_diamond(n: int, k: int, p: Pair) -> Pair:
    """Relabel every point after ``k`` by ``+ (n - 1)``."""
    x, y = p
    if y <= k:
        return (x, y)
    if x <= k:
        return (x, y + n - 1)
    return (x + n - 1, y + n - 1)


def diamond(r1: Relation, k: int, r2: Relation) -> Relation:
    """Composition of relations matching multitilde composition under ``phi``."""
    m = r1.size - 1
    n = r2.size - 1
    if not 1 <= k <= m:
        raise CompositionIndexError(f"slot {k} outside 1..{m}")
    pairs = {shift_diamond(n, k, p) for p in r1.pairs} | dec_set(k - 1, r2.pairs)
    return Relation(m + n, tuple(pairs))


def transitive_closure(r: Relation) -> Relation:
    """Saturate under ``(a,b), (b,c) -> (a,c)`` until nothing changes."""
    succ = {x: set() for x in range(1, r.size + 1)}
    for x, y in r.pairs:
        succ[x].add(y)
    changed = True
    while changed:
        changed = False
        for x in succ:
            reach = set()
            for y in succ[x]:
                reach |= succ[y]
            if not reach <= succ[x]:
                succ[x] |= reach
                changed = True
    return Relation(r.size, tuple((x, y) for x in succ for y in succ[x]))


def pseudo_closure(t: Multitilde) -> Multitilde:
    """Smallest superset closed under ``(i,k), (k+1,j) -> (i,j)``."""
    pairs = set(t.pairs)
    by_start = {}
    for x, y in pairs:
        by_start.setdefault(x, set()).add(y)
    stack = list(pairs)
    while stack:
        i, k = stack.pop()
        # (i,k) followed by (k+1,j)
        for j in list(by_start.get(k + 1, ())):
            if (i, j) not in pairs:
                pairs.add((i, j))
                by_start.setdefault(i, set()).add(j)
                stack.append((i, j))
        # (h,i-1) followed by (i,k)
        for h, ends in list(by_start.items()):
            if i - 1 in ends and (h, k) not in pairs:
                pairs.add((h, k))
                ends.add(k)
                stack.append((h, k))
    return Multitilde._trusted(t.arity, pairs)


def pseudo_closure_via_relation(t: Multitilde) -> Multitilde:
    """Same result as :func:`pseudo_closure`, routed through ``phi``."""
    return phi_inv(transitive_closure(phi(t)))


def is_ptt(t: Multitilde) -> bool:
    """True when ``t`` is already pseudotransitively closed."""
    return pseudo_closure(t) == t


def equivalent(t1: Multitilde, t2: Multitilde) -> bool:
    """Whether ``t1`` and ``t2`` act identically on every tuple of languages."""
    return t1.arity == t2.arity and pseudo_closure(t1) == pseudo_closure(t2)


def odot(t1: Multitilde, k: int, t2: Multitilde) -> Multitilde:
    """Composition of pseudotransitive multitildes: compose, then close."""
    return pseudo_closure(compose_partial(t1, k, t2))
