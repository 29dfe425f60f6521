import itertools

import pytest
from hypothesis import given, settings, strategies as st

from conftest import tildes
from oracles import act_by_definition, tildes_upto
from multitilde.boolvec import BoolVectorSet
from multitilde.errors import ArityError, InputError
from multitilde.lang import (
    EMPTY,
    EPSILON,
    FiniteLanguage,
    act_bool,
    act_tilde,
    catenate,
    factor_tilde,
    factors,
    languages_from_json,
    letter,
    prefix_tilde,
    prefixes,
    subword_tilde,
    suffix_tilde,
    suffixes,
)
from multitilde.tilde import Multitilde, compose_partial, union_tilde

L = FiniteLanguage.of
T = Multitilde
a, b, c, d = (letter(s) for s in "abcd")


def test_language_basics():
    lang = L("ab", "", "b")
    assert len(lang) == 3 and ("a", "b") in lang and () in lang
    assert list(lang) == [(), ("b",), ("a", "b")]
    assert repr(lang) == "FiniteLanguage({ε, b, ab})"
    assert repr(EMPTY) == "FiniteLanguage(∅)"
    assert not EMPTY and EPSILON
    assert lang.truncate(1) == L("", "b")
    assert catenate(L("a", ""), L("b")) == L("ab", "b")


def test_multi_character_symbols():
    lang = FiniteLanguage(frozenset({("a1", "a2")}))
    assert lang.to_json() == {"words": [["a1", "a2"]]}
    assert FiniteLanguage.from_json(lang.to_json()) == lang


@pytest.mark.parametrize("obj", [{"words": [["a b"]]}, {"words": [[""]]}, {"words": "ab"}, {}])
def test_language_rejects(obj):
    with pytest.raises(InputError):
        FiniteLanguage.from_json(obj)


def test_languages_from_json():
    assert languages_from_json([{"words": [["a"]]}, {"words": []}]) == [a, EMPTY]
    assert languages_from_json({"languages": [{"words": [[]]}]}) == [EPSILON]
    with pytest.raises(InputError):
        languages_from_json({"words": []})


def test_act_bool_examples():
    assert act_bool(BoolVectorSet.from_vectors(2, [(1, 1), (0, 0)]), [a, b]) == L("ab", "")
    assert act_bool(BoolVectorSet(2, ()), [a, b]) == EMPTY
    assert act_bool(BoolVectorSet.from_vectors(2, [(0, 1)]), [EMPTY, b]) == L("b")
    assert act_bool(BoolVectorSet.from_vectors(2, [(1, 1)]), [L("a", "aa"), L("", "b")]) == L(
        "a", "aa", "ab", "aab"
    )
    with pytest.raises(ArityError):
        act_bool(BoolVectorSet.from_vectors(2, [(1, 1)]), [a])


def test_act_tilde_examples():
    assert act_tilde(T(3, ((1, 2), (2, 3))), [a, EMPTY, b]) == L("a", "b")
    assert act_tilde(T(2, ()), [a, b]) == L("ab")
    assert act_tilde(T(1, ((1, 1),)), [EMPTY]) == EPSILON
    assert act_tilde(subword_tilde(2), [a, b]) == L("ab", "a", "b", "")
    assert act_tilde(subword_tilde(1), [a]) == L("a", "")
    assert act_tilde(T(2, ((1, 1),)), [a, b]) == L("ab", "b")
    assert act_tilde(T(2, ((2, 2),)), [a, b]) == L("ab", "a")


POOL = (EMPTY, EPSILON, a, b, L("a", "bb"), L("", "ab"))


def test_act_matches_definition_exhaustive():
    for t in tildes_upto(3):
        for ls in itertools.product(POOL[:4], repeat=t.arity):
            assert act_tilde(t, ls) == act_by_definition(t, ls)


@settings(max_examples=300)
@given(tildes(max_arity=4), st.data())
def test_act_matches_definition_random(t, data):
    ls = [data.draw(st.sampled_from(POOL)) for _ in range(t.arity)]
    assert act_tilde(t, ls) == act_by_definition(t, ls)


@settings(max_examples=300)
@given(tildes(max_arity=3), tildes(max_arity=3), st.data())
def test_module_law_sampled(t1, t2, data):
    i = data.draw(st.integers(1, t1.arity))
    n = t2.arity
    ls = [data.draw(st.sampled_from(POOL)) for _ in range(t1.arity + n - 1)]
    inner = act_tilde(t2, ls[i - 1:i - 1 + n])
    lhs = act_tilde(t1, ls[:i - 1] + [inner] + ls[i - 1 + n:])
    assert lhs == act_tilde(compose_partial(t1, i, t2), ls)


def test_special_tildes():
    assert prefix_tilde(3) == T(3, ((1, 3), (2, 3), (3, 3)))
    assert suffix_tilde(3) == T(3, ((1, 1), (1, 2), (1, 3)))
    assert factor_tilde(3) == T(3, ((1, 1), (1, 2), (1, 3), (2, 3), (3, 3)))
    assert subword_tilde(2) == T(2, ((1, 1), (2, 2)))
    for build in (prefix_tilde, suffix_tilde, factor_tilde, subword_tilde):
        with pytest.raises(ArityError):
            build(0)


def test_language_closures():
    assert prefixes(L("ab", "cd")) == L("", "a", "ab", "c", "cd")
    assert prefixes(EMPTY) == EMPTY
    assert suffixes(L("ab")) == L("", "b", "ab")
    assert factors(L("ab")) == L("", "a", "b", "ab")
    assert factors(L("abc")) == L("", "a", "b", "c", "ab", "bc", "abc")


SIGMA0 = (EMPTY, a, b, c)
CLOSURES = ((prefixes, prefix_tilde), (suffixes, suffix_tilde), (factors, factor_tilde))


def test_closure_inclusion_on_letter_tuples():
    for t in tildes_upto(3):
        for ls in itertools.product(SIGMA0, repeat=t.arity):
            plain = act_tilde(t, ls)
            for close, special in CLOSURES:
                widened = act_tilde(union_tilde(t, special(t.arity)), ls)
                assert close(plain).words <= widened.words


def test_closure_equality_for_nonempty_letters():
    for t in tildes_upto(3):
        for ls in itertools.product((a, b, c), repeat=t.arity):
            plain = act_tilde(t, ls)
            for close, special in CLOSURES:
                assert close(plain) == act_tilde(union_tilde(t, special(t.arity)), ls)


def test_strictness_witness():
    langs = [a, b, c, EMPTY]
    assert act_tilde(T(4, ()), langs) == EMPTY
    assert act_tilde(union_tilde(T(4, ()), prefix_tilde(4)), langs) == L("", "a", "ab", "abc")


def test_non_necessity_witness():
    t = T(5, ((1, 3), (3, 5)))
    langs = [a, b, EMPTY, c, d]
    plain = act_tilde(t, langs)
    assert plain == L("ab", "cd")
    assert act_tilde(union_tilde(t, prefix_tilde(5)), langs) == prefixes(plain)
