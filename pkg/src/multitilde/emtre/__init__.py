"""Regular expressions with multitilde nodes: parsing, compilation, evaluation."""

from .compile import (
    CompiledTilde,
    bounded_star,
    compile_star_free,
    eval_emtre,
    leaf_count,
)
from .startree import eval_star_tree, is_normal, star_tree_normalize
from .syntax import Cat, Emtre, Empty, Epsilon, Letter, Star, Sum, Tilde, depth, has_star, parse

__all__ = [
    "Cat",
    "CompiledTilde",
    "Emtre",
    "Empty",
    "Epsilon",
    "Letter",
    "Star",
    "Sum",
    "Tilde",
    "bounded_star",
    "compile_star_free",
    "depth",
    "eval_emtre",
    "eval_star_tree",
    "has_star",
    "is_normal",
    "leaf_count",
    "parse",
    "star_tree_normalize",
]
