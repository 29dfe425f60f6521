"""Multitilde operators and their operadic composition.

A multitilde of arity ``n`` is a set of pairs ``(x, y)`` with
``1 <= x <= y <= n``.  Partial composition ``t1 o_k t2`` substitutes ``t2``
into slot ``k`` of ``t1``: pairs of ``t1`` are stretched or moved to make room
for the ``n`` new slots and pairs of ``t2`` are translated by ``k - 1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence, Tuple

from .errors import ArityError, CompositionIndexError, InputError

Pair = Tuple[int, int]


def dec(k: int, p: Pair) -> Pair:
    """Translate both coordinates of ``p`` by ``k``."""
    x, y = p
    return (x + k, y + k)


def shift(k: int, n: int, p: Pair) -> Pair:
    """Insert ``n - 1`` extra positions after position ``k``.

    A coordinate moves by ``n - 1`` when it lies strictly after the
    insertion point; the right end of an interval containing ``k`` is moved
    as well, so such intervals are stretched over the inserted block.
    """
    x, y = p
    return (x + (n - 1 if x >= k + 1 else 0), y + (n - 1 if y >= k else 0))


def dec_set(k: int, pairs: Iterable[Pair]) -> frozenset:
    return frozenset((x + k, y + k) for x, y in pairs)


def shift_set(k: int, n: int, pairs: Iterable[Pair]) -> frozenset:
    return frozenset(shift(k, n, p) for p in pairs)


@dataclass(frozen=True)
class Multitilde:
    """An ``arity``-ary multitilde.

    ``pairs`` is always stored sorted and without duplicates, so two
    multitildes compare equal exactly when they denote the same operator
    syntactically.
    """

    arity: int
    pairs: Tuple[Pair, ...] = ()

    def __post_init__(self):
        if not isinstance(self.arity, int) or isinstance(self.arity, bool):
            raise InputError(f"arity must be an integer, got {self.arity!r}", "arity")
        if self.arity < 1:
            raise InputError(f"arity must be >= 1, got {self.arity}", "arity")
        normalized = []
        for p in self.pairs:
            try:
                x, y = p
            except (TypeError, ValueError):
                raise InputError(f"pair {p!r} is not a 2-element sequence", "pairs") from None
            if not all(isinstance(c, int) and not isinstance(c, bool) for c in (x, y)):
                raise InputError(f"pair {p!r} has non-integer coordinates", "pairs")
            if not 1 <= x <= y <= self.arity:
                raise InputError(
                    f"pair ({x},{y}) violates 1 <= x <= y <= {self.arity}", "pairs"
                )
            normalized.append((x, y))
        object.__setattr__(self, "pairs", tuple(sorted(set(normalized))))

    @classmethod
    def _trusted(cls, arity: int, pairs: Iterable[Pair]) -> "Multitilde":
        # Skips validation; callers guarantee 1 <= x <= y <= arity.
        obj = object.__new__(cls)
        object.__setattr__(obj, "arity", arity)
        object.__setattr__(obj, "pairs", tuple(sorted(set(pairs))))
        return obj

    @property
    def pair_set(self) -> frozenset:
        return frozenset(self.pairs)

    def __contains__(self, pair) -> bool:
        return tuple(pair) in self.pair_set

    def __len__(self) -> int:
        return len(self.pairs)

    def __repr__(self) -> str:
        body = ",".join(f"({x},{y})" for x, y in self.pairs)
        return f"Multitilde({self.arity}, {{{body}}})"

    def to_json(self) -> dict:
        return {"arity": self.arity, "pairs": [[x, y] for x, y in self.pairs]}

    @classmethod
    def from_json(cls, obj) -> "Multitilde":
        if not isinstance(obj, dict):
            raise InputError("multitilde must be a JSON object", "multitilde")
        if "arity" not in obj:
            raise InputError("required field is missing", "arity")
        pairs = obj.get("pairs", [])
        if not isinstance(pairs, list):
            raise InputError("'pairs' must be a list", "pairs")
        return cls(obj["arity"], tuple(tuple(p) if isinstance(p, list) else p for p in pairs))


def identity() -> Multitilde:
    """The unit of the operad: the unary multitilde with no pairs."""
    return Multitilde._trusted(1, ())


def all_pairs(n: int) -> list:
    """Every pair ``(x, y)`` with ``1 <= x <= y <= n``, in lexicographic order."""
    return [(x, y) for x in range(1, n + 1) for y in range(x, n + 1)]


def union_tilde(t1: Multitilde, t2: Multitilde) -> Multitilde:
    """Union of the pair sets of two multitildes of equal arity."""
    if t1.arity != t2.arity:
        raise ArityError(f"cannot union arities {t1.arity} and {t2.arity}")
    return Multitilde._trusted(t1.arity, t1.pairs + t2.pairs)


def compose_partial(t1: Multitilde, k: int, t2: Multitilde) -> Multitilde:
    """Graft ``t2`` into slot ``k`` of ``t1``."""
    m, n = t1.arity, t2.arity
    if not 1 <= k <= m:
        raise CompositionIndexError(f"slot {k} outside 1..{m}")
    d = n - 1
    off = k - 1
    pairs = [
        (x + d if x > k else x, y + d if y >= k else y) for x, y in t1.pairs
    ]
    pairs.extend((x + off, y + off) for x, y in t2.pairs)
    return Multitilde._trusted(m + n - 1, pairs)


def compose_full(t: Multitilde, args: Sequence[Multitilde]) -> Multitilde:
    """Simultaneous composition ``t o (args[0], ..., args[m-1])``.

    Slots are filled from the right so earlier slot numbers stay valid.
    """
    if len(args) != t.arity:
        raise ArityError(f"expected {t.arity} arguments, got {len(args)}")
    result = t
    for k in range(t.arity, 0, -1):
        result = compose_partial(result, k, args[k - 1])
    return result
