"""Published worked examples, each as a named zero-argument check.

``run_all`` evaluates every check and reports which ones hold.  The CLI's
``paper-examples`` subcommand is a thin wrapper around it.
"""

from __future__ import annotations

from typing import Callable, List, Tuple

from .boolvec import BoolVectorSet, bool_compose_partial, free_subsets, unit, vectorize
from .emtre.compile import compile_star_free
from .emtre.startree import Leaf, Star, eval_star_tree, star_tree_normalize
from .emtre.syntax import parse
from .enumeration import count_ptt, enumerate_ptt, ptt_actions, verify_distinct_actions
from .lang import (
    EMPTY,
    FiniteLanguage,
    act_bool,
    act_tilde,
    factor_tilde,
    letter,
    prefix_tilde,
    prefixes,
    subword_tilde,
    union_tilde,
)
from .poset import equivalent, phi, phi_inv
from .tilde import Multitilde, compose_partial, dec, identity, shift, shift_set

L = FiniteLanguage.of
T = Multitilde
a, b, c, d = (letter(s) for s in "abcd")

F3 = T(3, ((1, 1), (1, 2), (1, 3), (2, 3), (3, 3)))

SEVEN_LANGUAGES = {
    (): L("ab"),
    ((1, 1),): L("ab", "b"),
    ((1, 1), (1, 2)): L("ab", "b", ""),
    ((2, 2),): L("ab", "a"),
    ((1, 2), (2, 2)): L("ab", "a", ""),
    ((1, 1), (1, 2), (2, 2)): L("ab", "a", "b", ""),
    ((1, 2),): L("ab", ""),
}


def _dec_commutes():
    return dec(5, dec(2, (1, 1))) == (8, 8) == dec(2, dec(5, (1, 1)))


def _shift_example():
    return [shift(5, 6, p) for p in [(1, 3), (3, 7), (7, 8)]] == [(1, 3), (3, 12), (12, 13)]


def _shift_set_example():
    return shift_set(5, 6, {(1, 3), (3, 7), (7, 8)}) == {(1, 3), (3, 12), (12, 13)}


def _identity_image():
    return identity() == T(1, ()) and vectorize(identity()) == unit()


def _vectorize_example():
    t = T(4, ((1, 2), (2, 3), (3, 4), (4, 4)))
    expected = BoolVectorSet.from_vectors(
        4,
        [(0, 0, 0, 0), (0, 0, 1, 0), (1, 0, 0, 0), (0, 0, 1, 1),
         (1, 0, 0, 1), (1, 1, 0, 0), (1, 1, 1, 0), (1, 1, 1, 1)],
    )
    return vectorize(t) == expected


def _f3_free_subsets():
    expected = {frozenset()} | {frozenset({p}) for p in F3.pairs} | {
        frozenset({(1, 1), (2, 3)}),
        frozenset({(1, 2), (3, 3)}),
        frozenset({(1, 1), (3, 3)}),
    }
    got = [frozenset(s) for s in free_subsets(F3)]
    return len(got) == len(expected) and set(got) == expected


def _f3_vectors():
    expected = BoolVectorSet.from_vectors(
        3, [(1, 1, 1), (0, 1, 1), (0, 0, 1), (0, 0, 0), (1, 0, 0), (1, 1, 0), (0, 1, 0)]
    )
    return vectorize(F3) == expected


def _f3_languages():
    return act_tilde(F3, [a, b, c]) == L("abc", "bc", "c", "", "a", "ab", "b")


def _bool_unit_laws():
    f = BoolVectorSet.from_vectors(2, [(1, 1), (0, 1)])
    e = BoolVectorSet.from_vectors(3, [(1, 0, 1), (0, 0, 1), (1, 1, 1)])
    return bool_compose_partial(unit(), 1, f) == f and all(
        bool_compose_partial(e, k, unit()) == e for k in (1, 2, 3)
    )


def _act_bool_row():
    e = BoolVectorSet.from_vectors(2, [(1, 1), (0, 0)])
    return act_bool(e, [a, b]) == L("ab", "")


def _union_encoding():
    return act_tilde(T(3, ((1, 2), (2, 3))), [a, EMPTY, b]) == L("a", "b")


def _catenation_encoding():
    return act_tilde(T(2, ()), [a, b]) == L("ab")


def _epsilon_encoding():
    return act_tilde(T(1, ((1, 1),)), [EMPTY]) == L("")


def _factor_tilde():
    return factor_tilde(3) == F3


def _subword_table_row():
    return act_tilde(subword_tilde(2), [a, b]) == L("ab", "a", "b", "")


def _prefixes_example():
    return prefixes(L("ab", "cd")) == L("", "a", "ab", "c", "cd")


def _distinguished_singletons():
    t1, t2 = T(2, ((1, 1),)), T(2, ((2, 2),))
    return (
        not equivalent(t1, t2)
        and act_tilde(t1, [a, b]) == L("ab", "b")
        and act_tilde(t2, [a, b]) == L("ab", "a")
    )


def _seven_languages():
    table = ptt_actions(2)
    got = {t.pairs: lang for t, lang in table}
    return got == SEVEN_LANGUAGES and len(set(got.values())) == 7


def _arity_one_ptts():
    return list(enumerate_ptt(1)) == [T(1, ()), T(1, ((1, 1),))]


def _counts():
    return [count_ptt(k).ptt_count for k in range(1, 7)] == [2, 7, 40, 357, 4824, 96428]


def _distinct_actions():
    return all(verify_distinct_actions(k) for k in (1, 2, 3))


def _strictness_witness():
    langs = [a, b, c, EMPTY]
    empty4 = T(4, ())
    return act_tilde(empty4, langs) == EMPTY and act_tilde(
        union_tilde(empty4, prefix_tilde(4)), langs
    ) == L("", "a", "ab", "abc")


def _non_necessity_witness():
    t = T(5, ((1, 3), (3, 5)))
    langs = [a, b, EMPTY, c, d]
    plain = act_tilde(t, langs)
    return plain == L("ab", "cd") and act_tilde(
        union_tilde(t, prefix_tilde(5)), langs
    ) == prefixes(plain)


def _compile_sum():
    ct = compile_star_free(parse("a+b"))
    return (
        ct.tilde == T(3, ((1, 2), (2, 3)))
        and ct.leaves == ("a", None, "b")
        and ct.language() == L("a", "b")
    )


def _compile_epsilon():
    ct = compile_star_free(parse("1"))
    return ct.tilde == T(1, ((1, 1),)) and ct.leaves == (None,) and ct.language() == L("")


def _star_collapse():
    s = Star(Star(Leaf(1)))
    return star_tree_normalize(s) == Star(Leaf(1)) and eval_star_tree(
        s, [a], 4
    ) == eval_star_tree(Star(Leaf(1)), [a], 4)


def _phi_round_trip():
    return all(phi_inv(phi(t)) == t for t in enumerate_ptt(3)) and phi(
        T(2, ((1, 2),))
    ).pairs == ((1, 1), (1, 3), (2, 2), (3, 3))


def _operad_commutation_sample():
    t1, t2, t3 = T(3, ((1, 2), (3, 3))), T(2, ((1, 1),)), T(2, ((2, 2), (1, 2)))
    p = t3.arity
    return compose_partial(compose_partial(t1, 2, t2), 1, t3) == compose_partial(
        compose_partial(t1, 1, t3), 2 + p - 1, t2
    )


CHECKS: List[Tuple[str, Callable[[], bool]]] = [
    ("dec commutes", _dec_commutes),
    ("shift(5,6) example", _shift_example),
    ("shift(5,6) on a set", _shift_set_example),
    ("identity tilde maps to {[1]}", _identity_image),
    ("operad commutation sample", _operad_commutation_sample),
    ("V of {(1,2),(2,3),(3,4),(4,4)}", _vectorize_example),
    ("F3 free subsets", _f3_free_subsets),
    ("F3 boolean vectors", _f3_vectors),
    ("F3 languages on (a,b,c)", _f3_languages),
    ("{[1]} unit laws", _bool_unit_laws),
    ("{[1,1],[0,0]} on (a,b)", _act_bool_row),
    ("union encoding", _union_encoding),
    ("catenation encoding", _catenation_encoding),
    ("epsilon encoding", _epsilon_encoding),
    ("F3 = P3 u S3", _factor_tilde),
    ("subwords of ab", _subword_table_row),
    ("Pref({ab,cd})", _prefixes_example),
    ("(1,1) vs (2,2) act differently", _distinguished_singletons),
    ("seven languages on (a,b)", _seven_languages),
    ("arity-1 PTTs", _arity_one_ptts),
    ("PTT counts 2..96428", _counts),
    ("distinct actions k=1..3", _distinct_actions),
    ("prefix strictness witness", _strictness_witness),
    ("prefix non-necessity witness", _non_necessity_witness),
    ("compile a+b", _compile_sum),
    ("compile 1", _compile_epsilon),
    ("star collapse", _star_collapse),
    ("phi round trip", _phi_round_trip),
]


def run_all():
    """List of ``(name, passed, error)``; ``error`` is set when a check raised."""
    results = []
    for name, check in CHECKS:
        try:
            results.append((name, bool(check()), None))
        except Exception as exc:  # reported, not propagated
            results.append((name, False, f"{type(exc).__name__}: {exc}"))
    return results
