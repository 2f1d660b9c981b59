import itertools
from math import comb

import pytest
from hypothesis import given, strategies as st

from conftest import brute_contains, brute_standardize
from mposet.errors import InvalidInput
from mposet.perm_core import (
    Permutation,
    all_permutations,
    avoids_all,
    c_between,
    contains_pattern,
    decode_lehmer,
    find_pattern,
    format_code,
    format_permutation,
    inversion_set,
    lehmer_code,
    parse_permutation,
    standardize,
)

P = parse_permutation


@st.composite
def permutations_st(draw, max_n=9):
    n = draw(st.integers(1, max_n))
    return Permutation(tuple(draw(st.permutations(range(1, n + 1)))))


def test_permutation_rejects_non_bijection():
    with pytest.raises(InvalidInput):
        Permutation((1, 1, 2))
    with pytest.raises(InvalidInput):
        Permutation(())


def test_parse_digits_and_commas():
    assert P("35142").word == (3, 5, 1, 4, 2)
    w = P("10,3,1,2,4,5,6,7,8,9")
    assert w.n == 10 and w(1) == 10
    assert format_permutation(w) == "10,3,1,2,4,5,6,7,8,9"
    assert format_permutation(P("35142")) == "35142"


@pytest.mark.parametrize("text, token", [("3a12", "a"), ("1,2,x", "x"), ("1,5,2", "5"), ("1,1", "1")])
def test_parse_names_bad_token(text, token):
    with pytest.raises(InvalidInput, match=repr(token)):
        P(text)


@pytest.mark.parametrize("seq, expected", [
    ((1, 2, 3), (1, 2, 3)),
    ((3, 5, 1, 2), (3, 4, 1, 2)),
    ((9,), (1,)),
])
def test_standardize(seq, expected):
    assert standardize(seq).word == expected
    assert brute_standardize(seq) == expected


def test_standardize_rejects_duplicates():
    with pytest.raises(InvalidInput):
        standardize((2, 2))


def test_inversion_set_examples():
    assert inversion_set(P("321")) == {(1, 2), (1, 3), (2, 3)}
    assert inversion_set(Permutation.identity(4)) == frozenset()
    assert inversion_set(P("3412")) == {(1, 3), (1, 4), (2, 3), (2, 4)}


def test_lehmer_code_examples():
    assert lehmer_code(Permutation.identity(5)) == (0, 0, 0, 0, 0)
    assert lehmer_code(P("3412")) == (2, 2, 0, 0)
    assert lehmer_code(P("321")) == (2, 1, 0)
    assert format_code((2, 2, 0, 0)) == "2 2 0 0"


def test_decode_lehmer_examples():
    assert decode_lehmer((0, 0, 0)) == Permutation.identity(3)
    assert decode_lehmer((2, 2, 0, 0)) == P("3412")
    assert decode_lehmer((2, 1, 0)) == P("321")


@pytest.mark.parametrize("code", [(3, 0, 0), (0, 0, 1), (-1, 0)])
def test_decode_lehmer_rejects_out_of_range(code):
    with pytest.raises(InvalidInput):
        decode_lehmer(code)


def test_c_between_examples():
    assert c_between(P("3412"), 1, 2) == 0
    assert c_between(P("3412"), 1, 4) == 1
    assert c_between(P("321"), 1, 3) == 1
    with pytest.raises(InvalidInput):
        c_between(P("321"), 2, 2)


def test_contains_pattern_examples():
    assert contains_pattern(P("3412"), P("3412"))
    assert not contains_pattern(P("1234"), P("21"))
    assert find_pattern(P("35142"), P("3412")) == (1, 2, 3, 5)
    assert not contains_pattern(P("21"), P("321"))


def test_avoids_all_examples():
    pair = [P("3412"), P("3421")]
    assert not avoids_all(P("3412"), pair)
    assert avoids_all(P("321"), pair)
    # the only length-4 subsequence of 4321 is itself
    assert brute_contains((4, 3, 2, 1), (3, 4, 1, 2)) is None
    assert brute_contains((4, 3, 2, 1), (3, 4, 2, 1)) is None
    assert avoids_all(P("4321"), pair)


def test_all_permutations_order_and_count():
    assert [w.word for w in all_permutations(1)] == [(1,)]
    s3 = [format_permutation(w) for w in all_permutations(3)]
    assert len(s3) == 6 and s3[0] == "123" and s3[-1] == "321"
    assert s3 == sorted(s3)
    assert sum(1 for _ in all_permutations(8)) == 40320
    with pytest.raises(InvalidInput):
        next(all_permutations(0))


def test_lehmer_round_trip_exhaustive():
    for n in range(1, 8):
        for w in all_permutations(n):
            assert decode_lehmer(lehmer_code(w)) == w


@pytest.mark.parametrize("n", range(1, 9))
def test_contains_pattern_matches_brute_force(n):
    patterns = [P("21"), P("231"), P("3412"), P("3421"), P("132"), P("2143")]
    words = list(itertools.permutations(range(1, n + 1)))
    if n == 8:
        words = words[::37]
    for word in words:
        w = Permutation(word)
        for p in patterns:
            assert find_pattern(w, p) == brute_contains(word, p.word)


@given(permutations_st())
def test_code_sums_to_inversion_count(w):
    code = lehmer_code(w)
    assert sum(code) == len(inversion_set(w))
    assert all(0 <= c <= w.n - i for i, c in enumerate(code, 1))


@given(permutations_st())
def test_c_between_plus_tail_is_code_entry(w):
    code = lehmer_code(w)
    for i in range(1, w.n + 1):
        for j in range(i + 1, w.n + 1):
            tail = sum(1 for k in range(j, w.n + 1) if w(i) > w(k))
            assert c_between(w, i, j) + tail == code[i - 1]


@given(permutations_st(max_n=10))
def test_round_trip_random(w):
    assert decode_lehmer(lehmer_code(w)) == w


@pytest.mark.parametrize("n", range(1, 10))
def test_231_avoiders_are_catalan(n):
    count = sum(1 for w in all_permutations(n) if avoids_all(w, [P("231")]))
    assert count == comb(2 * n, n) // (n + 1)
