"""The interval [e, w] of the weak order, its Lehmer-code lattice, and Birkhoff's
reconstruction of a distributive lattice from its join-irreducibles."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from mposet.errors import InvalidInput, ResourceLimitExceeded
from mposet.perm_core import (
    LehmerCode,
    Permutation,
    _as_perm,
    all_permutations,
    inversion_set,
    lehmer_code,
)
from mposet.poset_patterns import FinitePoset, _bits, _row_masks

DEFAULT_IDEAL_CAP = 10**6
DEFAULT_MAX_POSET = 28


def lambda_interval(w: Permutation) -> set[Permutation]:
    """All sigma with Inv(sigma) contained in Inv(w).

    Breadth-first from the identity.  Swapping the values v and v + 1 of sigma,
    when v sits left of v + 1, adds exactly one inversion (the pair of their
    positions) and leaves the others alone; the move is taken only if that
    pair is an inversion of ``w``.
    """
    w = _as_perm(w)
    target = inversion_set(w)
    n = w.n
    start = tuple(range(1, n + 1))
    seen = {start}
    queue = deque([start])
    while queue:
        word = queue.popleft()
        pos = [0] * (n + 2)
        for p, v in enumerate(word, 1):
            pos[v] = p
        for v in range(1, n):
            p, q = pos[v], pos[v + 1]
            if p < q and (p, q) in target:
                nxt = list(word)
                nxt[p - 1], nxt[q - 1] = v + 1, v
                nxt = tuple(nxt)
                if nxt not in seen:
                    seen.add(nxt)
                    queue.append(nxt)
    return {Permutation(word) for word in seen}


def lambda_interval_bruteforce(w: Permutation) -> set[Permutation]:
    """Filter all of S_n; the cross-check for :func:`lambda_interval`."""
    w = _as_perm(w)
    target = inversion_set(w)
    return {s for s in all_permutations(w.n) if inversion_set(s) <= target}


def join(a: Sequence[int], b: Sequence[int]) -> LehmerCode:
    if len(a) != len(b):
        raise InvalidInput(f"length mismatch: {len(a)} vs {len(b)}")
    return tuple(max(x, y) for x, y in zip(a, b))


def meet(a: Sequence[int], b: Sequence[int]) -> LehmerCode:
    if len(a) != len(b):
        raise InvalidInput(f"length mismatch: {len(a)} vs {len(b)}")
    return tuple(min(x, y) for x, y in zip(a, b))


def _product_poset(vectors: np.ndarray) -> FinitePoset:
    # row k of strict marks the vectors strictly below vector k
    strict = (vectors[:, None, :] >= vectors[None, :, :]).all(axis=2)
    np.fill_diagonal(strict, False)
    return FinitePoset.from_below(_row_masks(strict), validate=False)


class CodeLattice:
    """A finite set of equal-length codes under the product order on N^n."""

    def __init__(self, codes, n: int | None = None):
        self.codes: list[LehmerCode] = sorted(set(tuple(c) for c in codes))
        if not self.codes and n is None:
            raise InvalidInput("empty code set needs an explicit n")
        self.n = n if n is not None else len(self.codes[0])
        if any(len(c) != self.n for c in self.codes):
            raise InvalidInput("codes of different lengths")
        self.array = np.array(self.codes, dtype=np.int16).reshape(len(self.codes), self.n)
        self._poset: FinitePoset | None = None

    def __len__(self) -> int:
        return len(self.codes)

    def __contains__(self, code) -> bool:
        return tuple(code) in self._code_set

    @property
    def _code_set(self) -> set[LehmerCode]:
        return set(self.codes)

    @property
    def poset(self) -> FinitePoset:
        if self._poset is None:
            self._poset = _product_poset(self.array)
        return self._poset

    def _keys(self, vectors: np.ndarray) -> np.ndarray:
        # mixed-radix encoding; codes are bounded by n - 1 in every entry
        radix = max(self.n, int(self.array.max(initial=0)) + 1)
        weights = radix ** np.arange(self.n, dtype=np.int64)
        return vectors.astype(np.int64) @ weights

    def operation_tables(self) -> tuple[np.ndarray, np.ndarray] | None:
        """Index tables of componentwise max and min, or None if ``L`` is not closed."""
        a = self.array
        keys = self._keys(a)
        order = np.argsort(keys)
        sorted_keys = keys[order]
        tables = []
        for op in (np.maximum, np.minimum):
            k = self._keys(op(a[:, None, :], a[None, :, :]))
            pos = np.searchsorted(sorted_keys, k).clip(max=len(a) - 1)
            if not (sorted_keys[pos] == k).all():
                return None
            tables.append(order[pos])
        return tables[0], tables[1]

    def is_closed(self) -> bool:
        """Closed under componentwise max and min."""
        return not len(self.array) or self.operation_tables() is not None


def code_lattice(w: Permutation) -> CodeLattice:
    w = _as_perm(w)
    return CodeLattice((lehmer_code(s) for s in lambda_interval(w)), n=w.n)


def is_distributive(L: CodeLattice) -> bool:
    """Closure under join/meet, then a ^ (b v c) == (a ^ b) v (a ^ c) for every triple."""
    if len(L) <= 1:
        return True
    tables = L.operation_tables()
    if tables is None:
        return False
    join_t, meet_t = tables
    for a in range(len(L)):
        row = meet_t[a]
        if not np.array_equal(row[join_t], join_t[row[:, None], row[None, :]]):
            return False
    return True


def lattice_join_irreducibles(L: CodeLattice) -> set[LehmerCode]:
    """Elements covering exactly one element of ``L``."""
    P = L.poset
    out = set()
    for v in range(P.size):
        strictly_below = P.below[v]
        if not strictly_below:
            continue
        shadowed = 0
        for u in _bits(strictly_below):
            shadowed |= P.below[u]
        covers = strictly_below & ~shadowed
        if covers & (covers - 1) == 0:
            out.add(L.codes[v])
    return out


@dataclass
class IdealLattice:
    """Down-closed subsets of ``poset`` as bitmasks, sorted by (size, mask)."""

    poset: FinitePoset
    ideals: list[int]

    def __len__(self) -> int:
        return len(self.ideals)

    def as_sets(self) -> list[frozenset[int]]:
        return [frozenset(_bits(I)) for I in self.ideals]


def ideal_lattice(P: FinitePoset, cap: int = DEFAULT_IDEAL_CAP,
                  max_elements: int = DEFAULT_MAX_POSET) -> IdealLattice:
    """All order ideals of ``P``.

    Elements are added in a linear extension; an element may join an ideal
    only once its whole down-set is in, so every partial set stays an ideal.
    """
    if P.size > max_elements:
        raise ResourceLimitExceeded(
            f"poset has {P.size} elements, cap is {max_elements}", max_elements)
    order = sorted(range(P.size), key=lambda k: bin(P.below[k]).count("1"))
    ideals = [0]
    for k in order:
        need = P.below[k]
        bit = 1 << k
        grown = [I | bit for I in ideals if I & need == need]
        if len(ideals) + len(grown) > cap:
            raise ResourceLimitExceeded(
                f"more than {cap} order ideals (ideal cap)", cap)
        ideals.extend(grown)
    ideals.sort(key=lambda I: (bin(I).count("1"), I))
    return IdealLattice(P, ideals)


def birkhoff_map(P, ideals: IdealLattice) -> np.ndarray:
    """Componentwise max of each ideal's vectors; the empty ideal goes to zero."""
    vecs = np.array(P.vectors, dtype=np.int16).reshape(P.size, len(P.omega))
    out = np.zeros((len(ideals), len(P.omega)), dtype=np.int16)
    for r, I in enumerate(ideals.ideals):
        idx = list(_bits(I))
        if idx:
            out[r] = vecs[idx].max(axis=0)
    return out


def birkhoff_isomorphic(P, L: CodeLattice, cap: int = DEFAULT_IDEAL_CAP) -> bool:
    """Whether ideal -> join of its elements is an order isomorphism J(P) -> L."""
    J = ideal_lattice(P, cap=cap)
    if len(J) != len(L):
        return False
    images = birkhoff_map(P, J)
    if {tuple(r) for r in images.tolist()} != set(L.codes):
        return False
    masks = np.array(
        [[I >> k & 1 for k in range(P.size)] for I in J.ideals], dtype=bool
    ).reshape(len(J), P.size)
    subset = ~(masks[:, None, :] & ~masks[None, :, :]).any(axis=2)
    below = (images[:, None, :] <= images[None, :, :]).all(axis=2)
    return bool(np.array_equal(subset, below))
