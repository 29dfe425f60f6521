"""Trees built from multitildes and a unary star, acting on leaf languages.

A tree's leaves are numbered; ``Leaf(i)`` reads the ``i``-th language
(1-based) of the tuple passed to :func:`eval_star_tree`.  Normalization
collapses repeated stars and grafts directly nested multitildes into one
multitilde, which leaves the denoted language unchanged.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Tuple, Union

from ..errors import ArityError, InputError
from ..lang import FiniteLanguage, act_tilde
from ..tilde import Multitilde, compose_partial
from .compile import bounded_star


@dataclass(frozen=True)
class Leaf:
    index: int

    def __post_init__(self):
        if self.index < 1:
            raise InputError(f"leaf index must be positive, got {self.index}", "index")


@dataclass(frozen=True)
class Star:
    child: "StarTree"


@dataclass(frozen=True)
class Tilde:
    tilde: Multitilde
    children: Tuple["StarTree", ...]

    def __post_init__(self):
        object.__setattr__(self, "children", tuple(self.children))
        if len(self.children) != self.tilde.arity:
            raise ArityError(
                f"multitilde of arity {self.tilde.arity} given {len(self.children)} children"
            )


StarTree = Union[Leaf, Star, Tilde]


def leaves(s: StarTree) -> list:
    """Leaf indices in left-to-right order."""
    if isinstance(s, Leaf):
        return [s.index]
    if isinstance(s, Star):
        return leaves(s.child)
    return [i for c in s.children for i in leaves(c)]


def star_tree_normalize(s: StarTree) -> StarTree:
    if isinstance(s, Leaf):
        return s
    if isinstance(s, Star):
        child = star_tree_normalize(s.child)
        return child if isinstance(child, Star) else Star(child)
    tilde = s.tilde
    children = [star_tree_normalize(c) for c in s.children]
    # right to left so slot numbers of unprocessed children stay put
    for k in range(len(children), 0, -1):
        child = children[k - 1]
        if isinstance(child, Tilde):
            tilde = compose_partial(tilde, k, child.tilde)
            children[k - 1 : k] = list(child.children)
    return Tilde(tilde, tuple(children))


def is_normal(s: StarTree) -> bool:
    if isinstance(s, Leaf):
        return True
    if isinstance(s, Star):
        return not isinstance(s.child, Star) and is_normal(s.child)
    return all(not isinstance(c, Tilde) and is_normal(c) for c in s.children)


def eval_star_tree(s: StarTree, langs: Sequence[FiniteLanguage], max_len: int) -> FiniteLanguage:
    """Words of length at most ``max_len`` of the language ``s`` builds from ``langs``."""
    indices = leaves(s)
    if len(indices) != len(langs):
        raise ArityError(f"tree has {len(indices)} leaves but {len(langs)} languages were given")
    bad = [i for i in indices if i > len(langs)]
    if bad:
        raise InputError(f"leaf indices {bad} exceed {len(langs)}", "index")
    cut = [lang.truncate(max_len) for lang in langs]
    return _eval(s, cut, max_len)


def _eval(s: StarTree, langs, max_len: int) -> FiniteLanguage:
    if isinstance(s, Leaf):
        return langs[s.index - 1]
    if isinstance(s, Star):
        return bounded_star(_eval(s.child, langs, max_len), max_len)
    args = [_eval(c, langs, max_len) for c in s.children]
    return act_tilde(s.tilde, args).truncate(max_len)
