import itertools

import pytest

from conftest import perms
from mposet.errors import InvalidInput
from mposet.join_irr import build_M, chain, leq_closed_form, leq_product, m_vector
from mposet.perm_core import Permutation, inversion_set, lehmer_code, parse_permutation

P = parse_permutation


def clause_vector(word, i, x):
    """Coordinates of m(i, x) written out clause by clause (1-based i)."""
    n = len(word)
    inv = {(a, b) for a in range(1, n + 1) for b in range(a + 1, n + 1)
           if word[a - 1] > word[b - 1]}
    vec = []
    for j in range(1, n + 1):
        if j < i or (i, j) in inv:
            vec.append(0)
        elif j == i:
            vec.append(x)
        else:
            between = len([k for k in range(i + 1, j) if word[i - 1] > word[k - 1]])
            vec.append(max(0, x - between))
    return tuple(vec)


@pytest.mark.parametrize("w, i, x, vec", [
    ("3412", 1, 1, (1, 1, 0, 0)),
    ("3412", 2, 2, (0, 2, 0, 0)),
    ("321", 1, 2, (2, 0, 0)),
])
def test_m_vector_examples(w, i, x, vec):
    assert clause_vector(P(w).word, i, x) == vec
    e = m_vector(P(w), i, x)
    assert (e.i, e.x, e.vec) == (i, x, vec)


@pytest.mark.parametrize("i, x", [(3, 1), (1, 3), (1, 0), (5, 1)])
def test_m_vector_rejects_bad_labels(i, x):
    with pytest.raises(InvalidInput):
        m_vector(P("3412"), i, x)


def test_build_M_matches_clauses_exhaustive():
    for n in range(1, 7):
        for w in perms(n):
            M = build_M(w)
            code = lehmer_code(w)
            labels = [(i, x) for i in range(1, n + 1) for x in range(1, code[i - 1] + 1)]
            assert M.labels == labels
            assert M.vectors == [clause_vector(w.word, i, x) for i, x in labels]


def test_build_M_examples():
    assert build_M(Permutation.identity(4)).size == 0
    M = build_M(P("321"))
    assert M.vectors == [(1, 0, 0), (2, 0, 0), (0, 1, 0)]
    assert M.lt(0, 1) and M.incomparable(0, 2) and M.incomparable(1, 2)
    M = build_M(P("3412"))
    assert M.vectors == [(1, 1, 0, 0), (2, 2, 0, 0), (0, 1, 0, 0), (0, 2, 0, 0)]
    top, bottom = 1, 2
    assert all(M.le(k, top) and M.le(bottom, k) for k in range(4))
    assert M.incomparable(0, 3)


def test_M_size_is_inversion_count_s7():
    for w in perms(7):
        assert build_M(w).size == len(inversion_set(w))


def test_M_order_is_product_order():
    for w in perms(5):
        M = build_M(w)
        for a, b in itertools.product(range(M.size), repeat=2):
            assert M.le(a, b) == leq_product(M.elements[a], M.elements[b])


def test_leq_product_examples():
    M = build_M(P("3412"))
    e11, e12, e21, e22 = M.elements
    assert leq_product(e11, e11)
    assert leq_product(e21, e11)
    assert not leq_product(e11, e22) and not leq_product(e22, e11)


def test_leq_closed_form_examples():
    w = P("321")
    assert not leq_closed_form(w, (1, 2), (2, 1))
    assert not leq_closed_form(w, (2, 1), (1, 2))
    w = P("3412")
    assert leq_closed_form(w, (1, 2), (2, 2))
    assert not leq_closed_form(w, (1, 1), (2, 2))
    assert leq_closed_form(w, (1, 2), (1, 1))
    assert not leq_closed_form(w, (1, 1), (1, 1))
    with pytest.raises(InvalidInput):
        leq_closed_form(w, (3, 1), (1, 1))


def test_leq_closed_form_agrees_with_vectors_s6():
    for w in perms(6):
        M = build_M(w)
        for ka, a in enumerate(M.labels):
            for kb, b in enumerate(M.labels):
                assert leq_closed_form(w, a, b) == M.lt(kb, ka), (w, a, b)


def test_chain_examples_and_errors():
    assert [e.vec for e in chain(P("3412"), 1)] == [(1, 1, 0, 0), (2, 2, 0, 0)]
    assert [e.vec for e in chain(P("321"), 2)] == [(0, 1, 0)]
    with pytest.raises(InvalidInput):
        chain(P("321"), 3)


def test_chains_are_strictly_increasing_and_inversion_chains_incomparable():
    for w in perms(6):
        M = build_M(w)
        code = lehmer_code(w)
        for i in range(1, w.n + 1):
            if not code[i - 1]:
                continue
            c = chain(w, i)
            assert len(c) == code[i - 1]
            assert all(leq_product(a, b) and a != b for a, b in zip(c, c[1:]))
        for i, j in inversion_set(w):
            for x in range(1, code[i - 1] + 1):
                for y in range(1, code[j - 1] + 1):
                    assert M.incomparable(M.index[(i, x)], M.index[(j, y)])
