"""Exhaustive generation of pseudotransitive multitildes.

Pseudotransitive multitildes of arity ``k`` correspond to partial orders on
``{1..k+1}`` contained in the natural order, so their number is the sequence
2, 7, 40, 357, 4824, 96428, 2800472, ...

The generator walks pair sets in lexicographic order of their sorted pair
lists (a set is visited before its extensions, extensions by smaller pairs
first).  Work happens on the relation side: the strict pairs ``a < b`` of
``{0..k}`` are numbered in lexicographic order and a pair set is a bitmask
over those numbers.  A prefix ``S`` with last pair ``p`` can be extended to a
closed set using only pairs after ``p`` iff its transitive closure adds no
pair before ``p``; that test prunes every dead branch, so each visited node
leads to at least one output.
"""

from __future__ import annotations

import os
import string
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterator, List, Optional, Sequence, Tuple

from .boolvec import vectorize
from .errors import UnsupportedArity
from .lang import FiniteLanguage, act_tilde, letter
from .tilde import Multitilde

MAX_ARITY = 7
MAX_ACTION_ARITY = 4


@dataclass(frozen=True)
class CountReport:
    arity: int
    ptt_count: int
    method: str
    elapsed: float

    def to_json(self) -> dict:
        return {
            "arity": self.arity,
            "ptt_count": self.ptt_count,
            "method": self.method,
            "elapsed": self.elapsed,
        }


class _Space:
    """Pair numbering and lookup tables for one arity."""

    def __init__(self, k: int):
        n = k + 1
        self.k = k
        self.n = n
        self.pairs: List[Tuple[int, int]] = [(a, b) for a in range(n) for b in range(a + 1, n)]
        self.index = {p: i for i, p in enumerate(self.pairs)}
        # row_bits[x][mask]: pair-number bitmask of {(x, y) : y in mask}
        self.row_bits = []
        for x in range(n):
            table = [0] * (1 << n)
            for mask in range(1 << n):
                bits = 0
                for y in range(x + 1, n):
                    if mask >> y & 1:
                        bits |= 1 << self.index[(x, y)]
                table[mask] = bits
            self.row_bits.append(table)

    def to_tilde(self, mask: int) -> Multitilde:
        # relation (a, b) on 0-based points is the multitilde pair (a+1, b)
        pairs = [(a + 1, b) for i, (a, b) in enumerate(self.pairs) if mask >> i & 1]
        return Multitilde._trusted(self.k, pairs)

    def add(self, up: Tuple[int, ...], closed: int, a: int, b: int):
        """Insert ``a < b`` into a transitively closed relation."""
        up = list(up)
        above = up[b] | (1 << b)
        row_bits = self.row_bits
        for x in range(a + 1):
            if x == a or up[x] >> a & 1:
                new = above & ~up[x]
                if new:
                    up[x] |= new
                    closed |= row_bits[x][new]
        return tuple(up), closed


def _walk(space: _Space, up, closed: int, chosen: int, last: int, emit) -> None:
    if closed == chosen:
        emit(chosen)
    forced = closed & ~chosen
    limit = (forced & -forced).bit_length() - 1 if forced else len(space.pairs) - 1
    pairs = space.pairs
    for p in range(last + 1, limit + 1):
        bit = 1 << p
        if closed & bit:
            _walk(space, up, closed, chosen | bit, p, emit)
            continue
        a, b = pairs[p]
        new_up, new_closed = space.add(up, closed, a, b)
        new_chosen = chosen | bit
        if new_closed & ~new_chosen & (bit - 1):
            continue
        _walk(space, new_up, new_closed, new_chosen, p, emit)


def _branch_masks(k: int, first: int) -> List[int]:
    """Masks of every closed set whose smallest pair has number ``first``."""
    space = _Space(k)
    a, b = space.pairs[first]
    up, closed = space.add((0,) * space.n, 0, a, b)
    out: List[int] = []
    if closed & ((1 << first) - 1):
        return out
    _walk(space, up, closed, 1 << first, first, out.append)
    return out


def _branch_count(k: int, first: int) -> int:
    space = _Space(k)
    a, b = space.pairs[first]
    up, closed = space.add((0,) * space.n, 0, a, b)
    if closed & ((1 << first) - 1):
        return 0
    counter = [0]

    def emit(_mask):
        counter[0] += 1

    _walk(space, up, closed, 1 << first, first, emit)
    return counter[0]


def _check_arity(k: int, upper: int) -> None:
    if not isinstance(k, int) or not 1 <= k <= upper:
        raise UnsupportedArity(f"arity must be in 1..{upper}, got {k!r}")


def default_workers() -> int:
    try:
        return max(1, int(os.environ.get("TILDE_WORKERS", "1")))
    except ValueError:
        return 1


def _branches(k: int) -> range:
    n = k + 1
    return range(n * (n - 1) // 2)


def enumerate_ptt(k: int, workers: Optional[int] = None) -> Iterator[Multitilde]:
    """Yield every pseudotransitive multitilde of arity ``k`` once.

    Output is in lexicographic order of the sorted pair lists, whatever the
    worker count.
    """
    _check_arity(k, MAX_ARITY)
    workers = workers or default_workers()
    space = _Space(k)
    yield space.to_tilde(0)
    branches = _branches(k)
    if workers <= 1:
        for first in branches:
            for mask in _branch_masks(k, first):
                yield space.to_tilde(mask)
        return
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for masks in pool.map(_branch_masks, [k] * len(branches), branches):
            for mask in masks:
                yield space.to_tilde(mask)


def count_ptt(k: int, workers: Optional[int] = None) -> CountReport:
    """Number of pseudotransitive multitildes of arity ``k``."""
    _check_arity(k, MAX_ARITY)
    workers = workers or default_workers()
    start = time.perf_counter()
    branches = _branches(k)
    if workers <= 1:
        total = 1 + sum(_branch_count(k, first) for first in branches)
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            total = 1 + sum(pool.map(_branch_count, [k] * len(branches), branches))
    return CountReport(k, total, "lex-extension", time.perf_counter() - start)


def letters(k: int) -> List[FiniteLanguage]:
    """``[{a}, {b}, ...]``: ``k`` distinct one-letter languages."""
    return [letter(c) for c in string.ascii_lowercase[:k]]


def ptt_actions(k: int, langs: Optional[Sequence[FiniteLanguage]] = None):
    """Pairs ``(ptt, language)`` for every PTT of arity ``k``."""
    _check_arity(k, MAX_ACTION_ARITY)
    langs = letters(k) if langs is None else list(langs)
    return [(t, act_tilde(t, langs)) for t in enumerate_ptt(k, workers=1)]


def verify_distinct_actions(k: int) -> bool:
    """Whether distinct PTTs of arity ``k`` act distinctly on distinct letters.

    Checked twice, on the languages produced and on the vector sets; the two
    answers must agree.
    """
    table = ptt_actions(k)
    by_language = len({lang for _, lang in table}) == len(table)
    by_vectors = len({vectorize(t) for t, _ in table}) == len(table)
    if by_language != by_vectors:
        raise AssertionError(
            f"language and vector injectivity disagree at arity {k}: "
            f"{by_language} vs {by_vectors}"
        )
    return by_language


def count_distinct_languages(langs: Sequence[FiniteLanguage]) -> int:
    """How many languages PTTs produce on the tuple ``langs``."""
    _check_arity(len(langs), MAX_ACTION_ARITY)
    return len({lang for _, lang in ptt_actions(len(langs), langs)})
