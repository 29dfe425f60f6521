import random

import pytest
from hypothesis import given, settings, strategies as st

from laws import compile_violations, random_deep_exprs, star_free_exprs
from oracles import language_by_regex
from multitilde.emtre import (
    CompiledTilde,
    compile_star_free,
    eval_emtre,
    eval_star_tree,
    is_normal,
    leaf_count,
    parse,
    star_tree_normalize,
)
from multitilde.emtre import startree as stt
from multitilde.emtre.compile import bounded_star
from multitilde.emtre.syntax import Cat, Empty, Epsilon, Letter, Star, Sum, Tilde, depth, has_star
from multitilde.errors import ArityError, InputError, ParseError, StarNotSupported
from multitilde.lang import EMPTY, FiniteLanguage, letter
from multitilde.tilde import Multitilde, compose_partial

L = FiniteLanguage.of
T = Multitilde
a, b = Letter("a"), Letter("b")


def test_parse_precedence():
    assert parse("a+b") == Sum(a, b)
    assert parse("ab") == Cat(a, b)
    assert parse("a+bc*") == Sum(a, Cat(b, Star(Letter("c"))))
    assert parse("(a+b)*") == Star(Sum(a, b))
    assert parse(" 0 + 1 ") == Sum(Empty(), Epsilon())
    assert parse("a**") == Star(Star(a))


def test_parse_tilde():
    e = parse("~{[(1,2)]}(a, b+1)")
    assert e == Tilde(T(2, ((1, 2),)), (a, Sum(b, Epsilon())))
    assert parse("~{[]}(a)") == Tilde(T(1, ()), (a,))
    assert parse(str(e)) == e


@pytest.mark.parametrize(
    "text, offset",
    [("a+", 2), ("(a", 2), ("a)", 1), ("~{[(1,3)]}(a,b)", 0), ("~{[(1,x)]}(a)", 6), ("", 0), ("a$", 1)],
)
def test_parse_errors(text, offset):
    with pytest.raises(ParseError) as exc:
        parse(text)
    assert exc.value.offset == offset
    assert f"offset {offset}" in str(exc.value)


def test_syntax_helpers():
    e = parse("a(b+1)*")
    assert has_star(e) and not has_star(parse("ab+1"))
    assert depth(parse("a")) == 0 and depth(e) == 3
    with pytest.raises(ArityError):
        Tilde(T(2, ()), (a,))


def test_compile_examples():
    ct = compile_star_free(parse("a+b"))
    assert ct.tilde == T(3, ((1, 2), (2, 3)))
    assert ct.leaves == ("a", None, "b")
    assert ct.language() == L("a", "b")
    one = compile_star_free(parse("1"))
    assert one.tilde == T(1, ((1, 1),)) and one.leaves == (None,) and one.language() == L("")
    assert compile_star_free(parse("ab")) == CompiledTilde(T(2, ()), ("a", "b"))
    assert compile_star_free(parse("0")).language() == EMPTY


def test_compile_rejects_star():
    with pytest.raises(StarNotSupported):
        compile_star_free(parse("a*"))
    with pytest.raises(StarNotSupported):
        leaf_count(parse("~{[]}(a*)"))


def test_compiled_json_round_trip():
    ct = compile_star_free(parse("a+~{[(1,1)]}(b)"))
    assert CompiledTilde.from_json(ct.to_json()) == ct
    with pytest.raises(InputError):
        CompiledTilde.from_json({"tilde": {"arity": 2}, "leaves": ["a"]})


def test_leaf_count():
    assert leaf_count(parse("a+b")) == 3
    assert leaf_count(parse("(a+b)(a+1)")) == 6
    assert leaf_count(parse("~{[]}(a,b,0)")) == 3


def test_compile_exhaustive_depth_one():
    exprs = star_free_exprs(1)
    assert len(exprs) == 172
    assert compile_violations(exprs) == []


def test_compile_random_deeper():
    assert compile_violations(random_deep_exprs(300, seed=11)) == []


def test_eval_examples():
    assert eval_emtre(parse("(a+b)a"), 5) == L("aa", "ba")
    assert eval_emtre(parse("a*"), 3) == L("", "a", "aa", "aaa")
    assert eval_emtre(parse("(ab)*"), 5) == L("", "ab", "abab")
    assert eval_emtre(parse("~{[(1,1)]}(a*)b"), 2) == L("b", "ab")
    assert eval_emtre(parse("ab"), 1) == EMPTY
    with pytest.raises(ValueError):
        eval_emtre(parse("a"), -1)


def test_bounded_star():
    assert bounded_star(EMPTY, 3) == L("")
    assert bounded_star(L("ab", "b"), 3) == L("", "b", "bb", "bbb", "ab", "abb", "bab")


@st.composite
def regexes(draw, max_depth=4):
    if max_depth == 0 or draw(st.booleans()):
        return draw(st.sampled_from([Empty(), Epsilon(), a, b]))
    kind = draw(st.sampled_from(["sum", "cat", "star"]))
    if kind == "star":
        return Star(draw(regexes(max_depth - 1)))
    left, right = draw(regexes(max_depth - 1)), draw(regexes(max_depth - 1))
    return Sum(left, right) if kind == "sum" else Cat(left, right)


@settings(max_examples=300)
@given(regexes(), st.integers(0, 5))
def test_eval_matches_regex_engine(e, n):
    assert eval_emtre(e, n) == language_by_regex(e, "ab", n)


@settings(max_examples=200)
@given(regexes(), st.integers(0, 4), st.integers(0, 3))
def test_eval_truncation_is_coherent(e, n, extra):
    assert eval_emtre(e, n + extra).truncate(n) == eval_emtre(e, n)


def test_star_tree_collapse():
    s = stt.Star(stt.Star(stt.Leaf(1)))
    assert star_tree_normalize(s) == stt.Star(stt.Leaf(1))
    assert eval_star_tree(s, [letter("a")], 4) == eval_star_tree(stt.Star(stt.Leaf(1)), [letter("a")], 4)


def test_star_tree_grafts_nested_tildes():
    inner = stt.Tilde(T(2, ((1, 1),)), (stt.Leaf(2), stt.Leaf(3)))
    s = stt.Tilde(T(2, ((2, 2),)), (stt.Leaf(1), inner))
    n = star_tree_normalize(s)
    assert n == stt.Tilde(compose_partial(T(2, ((2, 2),)), 2, T(2, ((1, 1),))), (stt.Leaf(1), stt.Leaf(2), stt.Leaf(3)))
    assert is_normal(n) and not is_normal(s)
    langs = [letter("a"), letter("b"), letter("c")]
    assert eval_star_tree(n, langs, 5) == eval_star_tree(s, langs, 5)


def test_star_tree_errors():
    with pytest.raises(InputError):
        stt.Leaf(0)
    with pytest.raises(ArityError):
        stt.Tilde(T(2, ()), (stt.Leaf(1),))
    with pytest.raises(ArityError):
        eval_star_tree(stt.Leaf(1), [], 3)
    with pytest.raises(InputError):
        eval_star_tree(stt.Leaf(2), [letter("a")], 3)


def random_star_tree(rng, depth, counter):
    roll = rng.random()
    if depth == 0 or roll < 0.25:
        counter[0] += 1
        return stt.Leaf(counter[0])
    if roll < 0.5:
        return stt.Star(random_star_tree(rng, depth - 1, counter))
    n = rng.randint(1, 3)
    pairs = [(x, y) for x in range(1, n + 1) for y in range(x, n + 1) if rng.random() < 0.35]
    return stt.Tilde(T(n, tuple(pairs)), tuple(random_star_tree(rng, depth - 1, counter) for _ in range(n)))


def test_star_tree_normalization_preserves_language():
    rng = random.Random(3)
    pool = [EMPTY, FiniteLanguage.of(""), letter("a"), letter("b"), FiniteLanguage.of("ab", "b")]
    for _ in range(300):
        counter = [0]
        s = random_star_tree(rng, 4, counter)
        langs = [rng.choice(pool) for _ in range(counter[0])]
        n = star_tree_normalize(s)
        assert is_normal(n)
        assert star_tree_normalize(n) == n
        assert eval_star_tree(n, langs, 4) == eval_star_tree(s, langs, 4)
