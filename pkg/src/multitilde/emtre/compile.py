"""Star-free expressions to one multitilde, and bounded evaluation."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

from ..errors import InputError, StarNotSupported
from ..lang import EMPTY, EPSILON, FiniteLanguage, act_tilde, catenate, letter
from ..tilde import Multitilde, compose_full, identity
from .syntax import Cat, Emtre, Empty, Epsilon, Letter, Star, Sum, Tilde

SUM_TILDE = Multitilde(3, ((1, 2), (2, 3)))
CAT_TILDE = Multitilde(2, ())
EPSILON_TILDE = Multitilde(1, ((1, 1),))


@dataclass(frozen=True)
class CompiledTilde:
    """A multitilde with one leaf per slot; ``None`` stands for the empty language."""

    tilde: Multitilde
    leaves: Tuple[Optional[str], ...]

    def __post_init__(self):
        object.__setattr__(self, "leaves", tuple(self.leaves))
        if len(self.leaves) != self.tilde.arity:
            raise InputError(
                f"{len(self.leaves)} leaves for a multitilde of arity {self.tilde.arity}", "leaves"
            )

    @property
    def leaf_languages(self) -> Tuple[FiniteLanguage, ...]:
        return tuple(EMPTY if s is None else letter(s) for s in self.leaves)

    def language(self) -> FiniteLanguage:
        return act_tilde(self.tilde, self.leaf_languages)

    def to_json(self) -> dict:
        return {"tilde": self.tilde.to_json(), "leaves": list(self.leaves)}

    @classmethod
    def from_json(cls, obj) -> "CompiledTilde":
        if not isinstance(obj, dict) or "tilde" not in obj or "leaves" not in obj:
            raise InputError("compiled tilde needs 'tilde' and 'leaves'", "tilde")
        leaves = obj["leaves"]
        if not isinstance(leaves, list) or not all(s is None or isinstance(s, str) for s in leaves):
            raise InputError("'leaves' must be a list of symbols or null", "leaves")
        return cls(Multitilde.from_json(obj["tilde"]), tuple(leaves))


def _graft(outer: Multitilde, parts: Sequence[CompiledTilde]) -> CompiledTilde:
    tilde = compose_full(outer, [p.tilde for p in parts])
    leaves = tuple(s for p in parts for s in p.leaves)
    return CompiledTilde(tilde, leaves)


_EMPTY_LEAF = CompiledTilde(identity(), (None,))


def compile_star_free(e: Emtre) -> CompiledTilde:
    """One multitilde over letters and empty placeholders denoting ``e``.

    Sums use the three-slot form ``{(1,2),(2,3)}(E1, 0, E2)`` and products the
    pairless binary tilde; nested tildes are composed in.
    """
    if isinstance(e, Empty):
        return _EMPTY_LEAF
    if isinstance(e, Epsilon):
        return CompiledTilde(EPSILON_TILDE, (None,))
    if isinstance(e, Letter):
        return CompiledTilde(identity(), (e.symbol,))
    if isinstance(e, Sum):
        return _graft(SUM_TILDE, [compile_star_free(e.left), _EMPTY_LEAF, compile_star_free(e.right)])
    if isinstance(e, Cat):
        return _graft(CAT_TILDE, [compile_star_free(e.left), compile_star_free(e.right)])
    if isinstance(e, Tilde):
        return _graft(e.tilde, [compile_star_free(c) for c in e.children])
    if isinstance(e, Star):
        raise StarNotSupported("star cannot be compiled into a single multitilde")
    raise TypeError(f"not an expression node: {e!r}")


def leaf_count(e: Emtre) -> int:
    """Slots a compiled ``e`` will have: one per atom, plus one per ``+``."""
    if isinstance(e, (Empty, Epsilon, Letter)):
        return 1
    if isinstance(e, Sum):
        return leaf_count(e.left) + 1 + leaf_count(e.right)
    if isinstance(e, Cat):
        return leaf_count(e.left) + leaf_count(e.right)
    if isinstance(e, Tilde):
        return sum(leaf_count(c) for c in e.children)
    raise StarNotSupported("star expressions have no compiled leaf count")


def bounded_star(lang: FiniteLanguage, max_len: int) -> FiniteLanguage:
    """Words of ``lang*`` with length at most ``max_len``."""
    pieces = [w for w in lang.words if 0 < len(w) <= max_len]
    result = {()}
    frontier = {()}
    while frontier:
        grown = set()
        for u in frontier:
            for v in pieces:
                w = u + v
                if len(w) <= max_len and w not in result:
                    grown.add(w)
        result |= grown
        frontier = grown
    return FiniteLanguage._trusted(frozenset(result))


def eval_emtre(e: Emtre, max_len: int) -> FiniteLanguage:
    """Words of the language of ``e`` whose length is at most ``max_len``."""
    if max_len < 0:
        raise ValueError("max_len must be non-negative")
    if isinstance(e, Empty):
        return EMPTY
    if isinstance(e, Epsilon):
        return EPSILON
    if isinstance(e, Letter):
        return letter(e.symbol) if max_len >= 1 else EMPTY
    if isinstance(e, Sum):
        return eval_emtre(e.left, max_len) | eval_emtre(e.right, max_len)
    if isinstance(e, Cat):
        return catenate(eval_emtre(e.left, max_len), eval_emtre(e.right, max_len)).truncate(max_len)
    if isinstance(e, Star):
        return bounded_star(eval_emtre(e.child, max_len), max_len)
    if isinstance(e, Tilde):
        args = [eval_emtre(c, max_len) for c in e.children]
        return act_tilde(e.tilde, args).truncate(max_len)
    raise TypeError(f"not an expression node: {e!r}")
