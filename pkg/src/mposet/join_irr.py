"""Denoncourt's join-irreducibles m(i, x) of the Lehmer-code lattice of [e, w].

For a position ``i`` with ``c_i(w) > 0`` and a level ``1 <= x <= c_i(w)`` the
vector m(i, x) is zero left of ``i``, equals ``x`` at ``i``, is zero at every
``j`` with ``(i, j)`` an inversion, and elsewhere right of ``i`` equals
``max(0, x - c_between(w, i, j))``.  M_w is the set of all of them under the
product order on N^n.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from mposet.errors import InvalidInput
from mposet.perm_core import Permutation, _as_perm, c_between, lehmer_code
from mposet.poset_patterns import FinitePoset, _row_masks

Label = tuple[int, int]


@dataclass(frozen=True)
class MElement:
    i: int
    x: int
    vec: tuple[int, ...]

    @property
    def label(self) -> Label:
        return (self.i, self.x)

    def __str__(self) -> str:
        return f"m[{self.i},{self.x}]=({','.join(map(str, self.vec))})"


def _chain_vectors(word: tuple[int, ...], i: int, levels: int) -> list[tuple[int, ...]]:
    # i is 0-based here
    n = len(word)
    vi = word[i]
    gaps = [0] * n  # c_between(w, i, j) for j > i, or -1 marking an inversion
    smaller = 0
    for j in range(i + 1, n):
        if word[j] < vi:
            gaps[j] = -1
            smaller += 1
        else:
            gaps[j] = smaller
    vectors = []
    for x in range(1, levels + 1):
        vec = [0] * n
        vec[i] = x
        for j in range(i + 1, n):
            g = gaps[j]
            if g >= 0 and x > g:
                vec[j] = x - g
        vectors.append(tuple(vec))
    return vectors


def m_vector(w: Permutation, i: int, x: int) -> MElement:
    w = _as_perm(w)
    if not 1 <= i <= w.n:
        raise InvalidInput(f"position {i} outside 1..{w.n}")
    ci = lehmer_code(w)[i - 1]
    if ci == 0:
        raise InvalidInput(f"c_{i}(w) = 0, no join-irreducibles on position {i}")
    if not 1 <= x <= ci:
        raise InvalidInput(f"level {x} outside 1..{ci} for position {i}")
    return MElement(i, x, _chain_vectors(w.word, i - 1, x)[-1])


def chain(w: Permutation, i: int) -> list[MElement]:
    """The chain m(i, 1) < ... < m(i, c_i(w))."""
    w = _as_perm(w)
    if not 1 <= i <= w.n:
        raise InvalidInput(f"position {i} outside 1..{w.n}")
    ci = lehmer_code(w)[i - 1]
    if ci == 0:
        raise InvalidInput(f"empty chain: c_{i}(w) = 0")
    return [MElement(i, x, v) for x, v in enumerate(_chain_vectors(w.word, i - 1, ci), 1)]


def leq_product(u: MElement, v: MElement) -> bool:
    if len(u.vec) != len(v.vec):
        raise InvalidInput("vectors of different lengths")
    return all(a <= b for a, b in zip(u.vec, v.vec))


class MPoset(FinitePoset):
    """M_w: elements sorted by label (i, x), ordered componentwise."""

    def __init__(self, omega: Permutation, elements: list[MElement]):
        self.omega = omega
        self.elements = elements
        self.labels = [e.label for e in elements]
        self.index = {lab: k for k, lab in enumerate(self.labels)}
        if elements:
            vecs = np.array([e.vec for e in elements], dtype=np.int8)
            strict = (vecs[:, None, :] >= vecs[None, :, :]).all(axis=2)
            np.fill_diagonal(strict, False)
            below = _row_masks(strict)
        else:
            below = []
        # componentwise order on distinct vectors is a partial order already
        self._init_masks(len(elements), below, validate=False)

    @property
    def vectors(self) -> list[tuple[int, ...]]:
        return [e.vec for e in self.elements]

    def chain_lengths(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for i, x in self.labels:
            out[i] = max(out.get(i, 0), x)
        return out

    def __repr__(self) -> str:
        return f"MPoset(omega={self.omega}, size={self.size})"


def build_M(w: Permutation) -> MPoset:
    w = _as_perm(w)
    elements = []
    for i, ci in enumerate(lehmer_code(w)):
        if ci:
            for x, vec in enumerate(_chain_vectors(w.word, i, ci), 1):
                elements.append(MElement(i + 1, x, vec))
    return MPoset(w, elements)


def leq_closed_form(w: Permutation, a: Label, b: Label) -> bool:
    """Whether m(b) < m(a), decided from ``w`` alone without building vectors.

    For i < j: chains on an inversion (i, j) are incomparable, otherwise
    m(i, x) > m(j, y) exactly when y <= x - c_between(w, i, j).  On one chain
    the level decides; for i > j the answer is always no, since m(i, x) is
    zero at coordinate j.
    """
    w = _as_perm(w)
    code = lehmer_code(w)
    for i, x in (a, b):
        if not 1 <= i <= w.n or not 1 <= x <= code[i - 1]:
            raise InvalidInput(f"label ({i}, {x}) is not a join-irreducible of {w}")
    (i, x), (j, y) = a, b
    if i == j:
        return y < x
    if i > j:
        return False
    if w(i) > w(j):
        return False
    return y <= x - c_between(w, i, j)
