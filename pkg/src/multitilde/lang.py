"""Finite languages and the action of vector sets and multitildes on them.

Words are tuples of symbols; a symbol is any non-empty string without
whitespace, so ``("a1", "a2")`` is a two-letter word.  The empty tuple is the
empty word.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import FrozenSet, Sequence, Tuple

from .boolvec import BoolVectorSet, vectorize
from .errors import ArityError, InputError
from .tilde import Multitilde, union_tilde  # noqa: F401  (re-exported)

Word = Tuple[str, ...]


def _check_symbol(s) -> str:
    if not isinstance(s, str) or not s or any(c.isspace() for c in s):
        raise InputError(f"invalid symbol {s!r}", "words")
    return s


@dataclass(frozen=True)
class FiniteLanguage:
    words: FrozenSet[Word] = frozenset()

    def __post_init__(self):
        words = frozenset(tuple(w) for w in self.words)
        for w in words:
            for s in w:
                _check_symbol(s)
        object.__setattr__(self, "words", words)

    @classmethod
    def of(cls, *words: str) -> "FiniteLanguage":
        """Build from strings whose characters are single-letter symbols.

        ``FiniteLanguage.of("ab", "")`` is ``{ab, ε}``.
        """
        return cls(frozenset(tuple(w) for w in words))

    def sorted_words(self):
        return sorted(self.words, key=lambda w: (len(w), w))

    def __iter__(self):
        return iter(self.sorted_words())

    def __len__(self) -> int:
        return len(self.words)

    def __contains__(self, word) -> bool:
        return tuple(word) in self.words

    def __bool__(self) -> bool:
        return bool(self.words)

    def __repr__(self) -> str:
        if not self.words:
            return "FiniteLanguage(∅)"
        shown = ", ".join("".join(w) if w else "ε" for w in self.sorted_words())
        return f"FiniteLanguage({{{shown}}})"

    @classmethod
    def _trusted(cls, words: FrozenSet[Word]) -> "FiniteLanguage":
        obj = object.__new__(cls)
        object.__setattr__(obj, "words", words)
        return obj

    def truncate(self, max_len: int) -> "FiniteLanguage":
        return FiniteLanguage._trusted(frozenset(w for w in self.words if len(w) <= max_len))

    def __or__(self, other: "FiniteLanguage") -> "FiniteLanguage":
        return FiniteLanguage._trusted(self.words | other.words)

    def to_json(self) -> dict:
        return {"words": [list(w) for w in self.sorted_words()]}

    @classmethod
    def from_json(cls, obj) -> "FiniteLanguage":
        if not isinstance(obj, dict) or "words" not in obj:
            raise InputError("language must be an object with 'words'", "words")
        words = obj["words"]
        if not isinstance(words, list) or not all(isinstance(w, list) for w in words):
            raise InputError("'words' must be a list of symbol lists", "words")
        return cls(frozenset(tuple(_check_symbol(s) for s in w) for w in words))


EMPTY = FiniteLanguage()
EPSILON = FiniteLanguage(frozenset({()}))


def letter(symbol: str) -> FiniteLanguage:
    return FiniteLanguage(frozenset({(symbol,)}))


def catenate(l1: FiniteLanguage, l2: FiniteLanguage) -> FiniteLanguage:
    return FiniteLanguage._trusted(frozenset(u + v for u in l1.words for v in l2.words))


def _check_arity(arity: int, langs: Sequence[FiniteLanguage]) -> None:
    if len(langs) != arity:
        raise ArityError(f"operator of arity {arity} applied to {len(langs)} languages")


def act_bool(e: BoolVectorSet, langs: Sequence[FiniteLanguage]) -> FiniteLanguage:
    """Union over the vectors of ``e`` of ``L1^e1 ... Ln^en``.

    An exponent 0 replaces the language by ``{ε}``.
    """
    n = e.arity
    _check_arity(n, langs)
    word_sets = [lang.words for lang in langs]
    if all(len(ws) <= 1 for ws in word_sets):
        return _act_on_singletons(e, word_sets)
    result = set()
    for mask in e.masks:
        products = {()}
        for i in range(n):
            if (mask >> (n - 1 - i)) & 1:
                ws = word_sets[i]
                if not ws:
                    products = None
                    break
                products = {u + v for u in products for v in ws}
        if products:
            result |= products
    return FiniteLanguage._trusted(frozenset(result))


def _act_on_singletons(e: BoolVectorSet, word_sets) -> FiniteLanguage:
    # Each product is a single word, or nothing when a kept slot is empty.
    n = e.arity
    blocked = 0
    words = []
    for i, ws in enumerate(word_sets):
        if ws:
            words.append(next(iter(ws)))
        else:
            words.append(())
            blocked |= 1 << (n - 1 - i)
    result = set()
    for mask in e.masks:
        if mask & blocked:
            continue
        w = ()
        for i in range(n):
            if mask >> (n - 1 - i) & 1:
                w += words[i]
        result.add(w)
    return FiniteLanguage._trusted(frozenset(result))


def act_tilde(t: Multitilde, langs: Sequence[FiniteLanguage]) -> FiniteLanguage:
    _check_arity(t.arity, langs)
    return act_bool(vectorize(t), langs)


def prefix_tilde(k: int) -> Multitilde:
    """Pairs ``(i, k)`` for every ``i``: erases any suffix of the operands."""
    _check_k(k)
    return Multitilde._trusted(k, [(i, k) for i in range(1, k + 1)])


def suffix_tilde(k: int) -> Multitilde:
    _check_k(k)
    return Multitilde._trusted(k, [(1, i) for i in range(1, k + 1)])


def factor_tilde(k: int) -> Multitilde:
    _check_k(k)
    return Multitilde._trusted(k, prefix_tilde(k).pairs + suffix_tilde(k).pairs)


def subword_tilde(k: int) -> Multitilde:
    _check_k(k)
    return Multitilde._trusted(k, [(i, i) for i in range(1, k + 1)])


def _check_k(k: int) -> None:
    if k < 1:
        raise ArityError(f"arity must be >= 1, got {k}")


def prefixes(lang: FiniteLanguage) -> FiniteLanguage:
    return FiniteLanguage._trusted(frozenset(w[:i] for w in lang.words for i in range(len(w) + 1)))


def suffixes(lang: FiniteLanguage) -> FiniteLanguage:
    return FiniteLanguage._trusted(frozenset(w[i:] for w in lang.words for i in range(len(w) + 1)))


def factors(lang: FiniteLanguage) -> FiniteLanguage:
    return FiniteLanguage._trusted(
        frozenset(
            w[i:j]
            for w in lang.words
            for i in range(len(w) + 1)
            for j in range(i, len(w) + 1)
        )
    )


def languages_from_json(obj) -> list:
    """Decode a JSON list of language objects (the CLI's ``langs`` file)."""
    if isinstance(obj, dict) and "languages" in obj:
        obj = obj["languages"]
    if not isinstance(obj, list):
        raise InputError("expected a list of languages", "languages")
    return [FiniteLanguage.from_json(item) for item in obj]
