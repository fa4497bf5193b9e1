"""Word order, Lyndon words, factorization, and exact counting.

Expected values come from definitional oracles implemented here: rotation
checks for Lyndon-ness, filtering all q^l words, and exhaustive cut search
for factorization uniqueness.
"""

import itertools
import random

import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from qnary.words import (
    BudgetExceededError,
    LyndonFactorization,
    Word,
    count_lyndon,
    count_strictly_decreasing,
    count_strictly_decreasing_bruteforce,
    duval_factorize,
    is_lyndon,
    is_strictly_decreasing,
    lex_compare,
    lyndon_count_table,
    lyndon_subset_series,
    lyndon_words,
    verify_lyndon_count_identity,
)


def w(text, q=2):
    return Word.from_string(text, q)


# --- definitional oracles ---------------------------------------------------


def rotations(t):
    return [t[i:] + t[:i] for i in range(len(t))]


def is_lyndon_by_rotations(t):
    """Strictly smaller than every nontrivial rotation (tuple comparison)."""
    return len(t) > 0 and all(t < r for r in rotations(t)[1:])


def lyndon_filter(q, l):
    return [t for t in itertools.product(range(q), repeat=l) if is_lyndon_by_rotations(t)]


def nonincreasing_cut_factorizations(t, bound=None):
    """All ways to cut t into Lyndon factors in non-increasing order."""
    if not t:
        return [[]]
    out = []
    for cut in range(1, len(t) + 1):
        head = t[:cut]
        if is_lyndon_by_rotations(head) and (bound is None or head <= bound):
            for rest in nonincreasing_cut_factorizations(t[cut:], head):
                out.append([head] + rest)
    return out


# --- lexicographic order ----------------------------------------------------


def test_lex_compare_examples():
    assert lex_compare(w("0"), w("001")) == -1
    assert lex_compare(w("01"), w("01")) == 0
    assert lex_compare(w("011"), w("01")) == 1


def test_lex_order_chain_of_short_lyndon_words():
    chain = [w(s) for s in ["0", "0001", "001", "0011", "01", "011", "0111", "1"]]
    for a, b in zip(chain, chain[1:]):
        assert lex_compare(a, b) == -1
        assert a < b


def test_lex_compare_alphabet_mismatch():
    with pytest.raises(ValueError):
        lex_compare(w("01", q=2), w("01", q=3))
    with pytest.raises(ValueError):
        _ = w("01", q=2) < w("01", q=3)


@st.composite
def same_alphabet_words(draw, count):
    q = draw(st.integers(2, 4))
    return [
        Word(tuple(draw(st.lists(st.integers(0, q - 1), max_size=12))), q)
        for _ in range(count)
    ]


@given(same_alphabet_words(count=2))
def test_lex_compare_antisymmetry(pair):
    u, v = pair
    assert lex_compare(u, v) == -lex_compare(v, u)
    if lex_compare(u, v) == 0:
        assert u.letters == v.letters


@given(same_alphabet_words(count=3))
def test_lex_compare_transitivity(triple):
    u, v, x = triple
    if lex_compare(u, v) <= 0 and lex_compare(v, x) <= 0:
        assert lex_compare(u, x) <= 0


@given(same_alphabet_words(count=2))
def test_prefix_sorts_before_extension(pair):
    u, v = pair
    if len(v) > 0:
        extended = Word(u.letters + v.letters, u.q)
        assert lex_compare(u, extended) == -1


# --- Lyndon test ------------------------------------------------------------


def test_is_lyndon_examples():
    assert is_lyndon(w("001"))
    assert not is_lyndon(w("10"))
    assert not is_lyndon(w("0101"))


def test_is_lyndon_rejects_empty():
    with pytest.raises(ValueError):
        is_lyndon(Word((), 2))


@pytest.mark.parametrize("q,max_len", [(2, 10), (3, 6)])
def test_is_lyndon_matches_rotation_definition(q, max_len):
    for l in range(1, max_len + 1):
        for t in itertools.product(range(q), repeat=l):
            assert is_lyndon(Word(t, q)) == is_lyndon_by_rotations(t)


# --- factorization ----------------------------------------------------------


def test_duval_examples():
    assert str(duval_factorize(w("101"))) == "(1)(01)"
    assert str(duval_factorize(w("110"))) == "(1)(1)(0)"


def test_duval_latin_alphabet():
    # LYNDON over a-z as 0..25 splits as (LYN)(DON)
    letters = tuple(ord(c) - ord("A") for c in "LYNDON")
    factors = duval_factorize(Word(letters, 26)).factors
    assert [f.letters for f in factors] == [
        tuple(ord(c) - ord("A") for c in "LYN"),
        tuple(ord(c) - ord("A") for c in "DON"),
    ]


def test_duval_rejects_empty():
    with pytest.raises(ValueError):
        duval_factorize(Word((), 2))


def _check_roundtrip(word):
    factorization = duval_factorize(word)
    assert factorization.concatenated() == word
    for f in factorization.factors:
        assert is_lyndon(f)
    for a, b in zip(factorization.factors, factorization.factors[1:]):
        assert lex_compare(a, b) >= 0


@pytest.mark.parametrize("q,max_len", [(2, 14), (3, 9)])
def test_factorization_roundtrip_exhaustive(q, max_len):
    for l in range(1, max_len + 1):
        for t in itertools.product(range(q), repeat=l):
            _check_roundtrip(Word(t, q))


@pytest.mark.parametrize("q", [2, 3])
def test_factorization_roundtrip_long_random_word(q):
    rng = random.Random(12345 + q)
    letters = tuple(rng.randrange(q) for _ in range(10**5))
    _check_roundtrip(Word(letters, q))


def test_factorization_unique_among_all_cuts():
    for l in range(1, 11):
        for t in itertools.product(range(2), repeat=l):
            cuts = nonincreasing_cut_factorizations(t)
            assert len(cuts) == 1
            assert cuts[0] == [f.letters for f in duval_factorize(Word(t, 2)).factors]


def test_is_strictly_decreasing_examples():
    assert is_strictly_decreasing(LyndonFactorization((w("1"), w("01"))))
    assert not is_strictly_decreasing(LyndonFactorization((w("1"), w("1"), w("0"))))
    assert is_strictly_decreasing(LyndonFactorization((w("0011"),)))


def test_factorization_validates_factors():
    with pytest.raises(ValueError):
        LyndonFactorization((w("10"),))  # not Lyndon
    with pytest.raises(ValueError):
        LyndonFactorization((w("0"), w("1")))  # increasing


# --- Lyndon word enumeration and counting ------------------------------------


def test_lyndon_words_examples():
    assert [str(x) for x in lyndon_words(2, 4)] == ["0001", "0011", "0111"]
    assert [str(x) for x in lyndon_words(2, 1)] == ["0", "1"]
    assert [str(x) for x in lyndon_words(3, 2)] == ["01", "02", "12"]
    # derived: the filter oracle gives the same list
    assert [x.letters for x in lyndon_words(3, 2)] == lyndon_filter(3, 2)


def test_lyndon_words_emitted_in_lex_order():
    for q, l in [(2, 7), (3, 5)]:
        words = lyndon_words(q, l)
        assert words == sorted(words, key=lambda x: x.letters)
        assert [x.letters for x in words] == lyndon_filter(q, l)


def test_lyndon_words_rejects_bad_length():
    with pytest.raises(ValueError):
        lyndon_words(2, 0)


def test_lyndon_words_one_letter_alphabet():
    assert [x.letters for x in lyndon_words(1, 1)] == [(0,)]
    assert lyndon_words(1, 3) == []


def test_count_lyndon_examples():
    assert count_lyndon(2, 4) == 3
    assert count_lyndon(2, 1) == 2
    # derived: enumerate all 4096 binary words of length 12
    assert len(lyndon_filter(2, 12)) == 335
    assert count_lyndon(2, 12) == 335


@pytest.mark.parametrize("q", [2, 3, 4])
def test_count_matches_enumeration(q):
    for l in range(1, 13):
        assert len(lyndon_words(q, l)) == count_lyndon(q, l)


def test_lyndon_count_table():
    table = lyndon_count_table(2, 6)
    assert table.counts == {1: 2, 2: 1, 3: 2, 4: 3, 5: 6, 6: 9}


def test_count_identity_examples():
    # q=2, m=4: 1*2 + 2*1 + 4*3 = 16
    assert verify_lyndon_count_identity(2, 4)
    assert 1 * count_lyndon(2, 1) + 2 * count_lyndon(2, 2) + 4 * count_lyndon(2, 4) == 2**4
    assert verify_lyndon_count_identity(1, 5)
    assert verify_lyndon_count_identity(3, 6)


@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_count_identity_holds_up_to_length_12(q):
    for m in range(1, 13):
        assert verify_lyndon_count_identity(q, m)


# --- strictly decreasing decompositions --------------------------------------


def test_bruteforce_count_examples():
    assert count_strictly_decreasing_bruteforce(2, 3) == 4
    assert count_strictly_decreasing_bruteforce(2, 4) == 8
    assert count_strictly_decreasing_bruteforce(3, 2) == 6


def test_bruteforce_budget_guard():
    with pytest.raises(BudgetExceededError):
        count_strictly_decreasing_bruteforce(2, 40)
    # override allows small cases through
    assert count_strictly_decreasing_bruteforce(2, 3, budget=8) == 4
    with pytest.raises(BudgetExceededError):
        count_strictly_decreasing_bruteforce(2, 3, budget=7)


def test_closed_form_examples():
    assert count_strictly_decreasing(2, 4) == 8
    assert count_strictly_decreasing(5, 1) == 5
    assert count_strictly_decreasing(2, 0) == 1
    # derived: brute force over all 243 ternary words of length 5
    assert count_strictly_decreasing_bruteforce(3, 5) == 162
    assert count_strictly_decreasing(3, 5) == 162


@pytest.mark.parametrize("q,max_n", [(2, 12), (3, 7)])
def test_closed_form_matches_bruteforce(q, max_n):
    for n in range(0, max_n + 1):
        assert count_strictly_decreasing(q, n) == count_strictly_decreasing_bruteforce(q, n)


def test_series_examples():
    assert lyndon_subset_series(2, 4).coeffs == (1, 2, 2, 4, 8)
    assert lyndon_subset_series(1, 3).coeffs == (1, 1, 0, 0)
    # derived: brute force for q=3 up to degree 3
    brute = [count_strictly_decreasing_bruteforce(3, n) for n in range(4)]
    assert brute == [1, 3, 6, 18]
    assert lyndon_subset_series(3, 3).coeffs == (1, 3, 6, 18)


@pytest.mark.parametrize("q", [2, 3])
def test_series_matches_closed_form_to_degree_12(q):
    series = lyndon_subset_series(q, 12)
    for n in range(13):
        assert series.coeffs[n] == count_strictly_decreasing(q, n)


# --- Word basics --------------------------------------------------------------


def test_word_validation():
    with pytest.raises(ValueError):
        Word((2,), 2)
    with pytest.raises(ValueError):
        Word((0,), 0)


def test_word_string_roundtrip_large_alphabet():
    word = Word((3, 11, 0), 12)
    assert str(word) == "3,11,0"
    assert Word.from_string("3,11,0", 12) == word


@settings(max_examples=60)
@given(same_alphabet_words(count=1))
def test_factorization_roundtrip_random(single):
    (word,) = single
    if len(word) > 0:
        _check_roundtrip(word)
