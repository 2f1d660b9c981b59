"""Finite posets and detectors for the diamond (B2) and parallelogram patterns.

Posets are stored as bitmasks: ``below[k]`` has bit ``j`` set when ``j < k``.
Every detector scans in a fixed order so the witness it reports is stable.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterator, Sequence

import numpy as np

from mposet.errors import InvalidInput, ResourceLimitExceeded

B2 = "B2"
PARALLELOGRAM = "PARALLELOGRAM"
C4_PARALLELOGRAM = "C4_PARALLELOGRAM"

MAX_PATTERN_SIZE = 5


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _row_masks(matrix: np.ndarray) -> list[int]:
    packed = np.packbits(matrix, axis=1, bitorder="little")
    return [int.from_bytes(row.tobytes(), "little") for row in packed]


class FinitePoset:
    """A finite partial order on ``range(size)``.

    Build one from a boolean matrix with ``leq[a, b]`` meaning ``a <= b``, or
    with :meth:`from_below` when the strict down-sets are already known as
    bitmasks.
    """

    def __init__(self, leq, validate: bool = True):
        leq = np.asarray(leq, dtype=bool)
        if leq.ndim != 2 or leq.shape[0] != leq.shape[1]:
            raise InvalidInput(f"relation matrix must be square, got shape {leq.shape}")
        size = leq.shape[0]
        if validate and size and not leq.diagonal().all():
            raise InvalidInput("relation is not reflexive")
        strict = leq.copy()
        np.fill_diagonal(strict, False)
        # below[k] collects column k, i.e. rows of the transpose
        self._init_masks(size, _row_masks(strict.T) if size else [], validate)

    @classmethod
    def from_below(cls, below: Sequence[int], validate: bool = True) -> FinitePoset:
        obj = cls.__new__(cls)
        obj._init_masks(len(below), list(below), validate)
        return obj

    @classmethod
    def from_relation(cls, items: Sequence, leq: Callable[[object, object], bool],
                      validate: bool = True) -> FinitePoset:
        below = [
            sum(1 << a for a, x in enumerate(items) if a != b and leq(x, y))
            for b, y in enumerate(items)
        ]
        return cls.from_below(below, validate)

    def _init_masks(self, size: int, below: list[int], validate: bool) -> None:
        self.size = size
        self.below = below
        above = [0] * size
        for b, mask in enumerate(below):
            for a in _bits(mask):
                above[a] |= 1 << b
        self.above = above
        self.comparable = [below[k] | above[k] for k in range(size)]
        if validate:
            self._check_order()

    def _check_order(self) -> None:
        for k in range(self.size):
            if self.below[k] >> k & 1:
                raise InvalidInput(f"element {k} is strictly below itself")
            if self.below[k] & self.above[k]:
                raise InvalidInput(f"relation is not antisymmetric at element {k}")
            for j in _bits(self.below[k]):
                if self.below[j] & ~self.below[k]:
                    raise InvalidInput(f"relation is not transitive through {j} < {k}")

    # -- queries -------------------------------------------------------------

    def __len__(self) -> int:
        return self.size

    def le(self, a: int, b: int) -> bool:
        return a == b or bool(self.below[b] >> a & 1)

    def lt(self, a: int, b: int) -> bool:
        return bool(self.below[b] >> a & 1)

    def incomparable(self, a: int, b: int) -> bool:
        return a != b and not self.comparable[a] >> b & 1

    @property
    def leq(self) -> np.ndarray:
        m = np.eye(self.size, dtype=bool)
        for b, mask in enumerate(self.below):
            for a in _bits(mask):
                m[a, b] = True
        return m

    def induced(self, idx: Sequence[int]) -> FinitePoset:
        idx = list(idx)
        return FinitePoset(self.leq[np.ix_(idx, idx)], validate=False)

    def __eq__(self, other) -> bool:
        return isinstance(other, FinitePoset) and self.below == other.below

    def __repr__(self) -> str:
        return f"{type(self).__name__}(size={self.size})"

    # -- small standard posets ----------------------------------------------

    @classmethod
    def chain(cls, k: int) -> FinitePoset:
        return cls.from_below([(1 << j) - 1 for j in range(k)])

    @classmethod
    def antichain(cls, k: int) -> FinitePoset:
        return cls.from_below([0] * k)

    @classmethod
    def diamond(cls) -> FinitePoset:
        """B2: bottom 0, incomparable middles 1 and 2, top 3."""
        return cls.from_below([0b0000, 0b0001, 0b0001, 0b0111])


@dataclass(frozen=True)
class PatternWitness:
    """Four elements realising a pattern.

    For ``B2`` the elements are ordered (top, middle, middle, bottom).  For the
    parallelogram kinds they are the elements labelled (i,a), (i,b), (j,c),
    (j,d), matching ``labels``.
    """

    kind: str
    elements: tuple[int, ...]
    labels: tuple[tuple[int, int], ...] | None = field(default=None)


def _labels_of(P, idx):
    labels = getattr(P, "labels", None)
    if labels is None:
        return None
    return tuple(labels[k] for k in idx)


def find_B2(P: FinitePoset) -> PatternWitness | None:
    """First diamond s < u, v < t with u, v incomparable, or ``None``.

    Scans bottoms, then tops above them, then the open interval between.
    """
    below, above, comparable = P.below, P.above, P.comparable
    for s in range(P.size):
        ups = above[s]
        if ups & (ups - 1) == 0:
            continue
        for t in _bits(ups):
            interval = ups & below[t]
            if interval & (interval - 1) == 0:
                continue
            for u in _bits(interval):
                rivals = interval & ~comparable[u] & ~((2 << u) - 1)
                if rivals:
                    v = (rivals & -rivals).bit_length() - 1
                    idx = (t, u, v, s)
                    return PatternWitness(B2, idx, _labels_of(P, idx))
    return None


def _two_chain_search(M, comparable_middles: bool) -> PatternWitness | None:
    index = M.index
    lt = M.lt
    chains = sorted({i for i, _ in M.labels})
    length = {i: max(x for k, x in M.labels if k == i) for i in chains}
    kind = C4_PARALLELOGRAM if comparable_middles else PARALLELOGRAM
    for pi, i in enumerate(chains):
        for j in chains[pi + 1:]:
            for a in range(2, length[i] + 1):
                top = index[(i, a)]
                for d in range(2, length[j] + 1):
                    right = index[(j, d)]
                    if not lt(right, top):
                        continue
                    # c = b + d - a must satisfy 1 <= c < d
                    for b in range(max(1, a - d + 1), a):
                        c = b + d - a
                        left, low = index[(i, b)], index[(j, c)]
                        if not lt(low, left):
                            continue
                        middles_comparable = lt(right, left)
                        if middles_comparable == comparable_middles:
                            idx = (top, left, low, right)
                            return PatternWitness(
                                kind, idx, ((i, a), (i, b), (j, c), (j, d)))
    return None


def find_parallelogram(M) -> PatternWitness | None:
    """Parallelogram inside an M-poset: two chains i < j, levels b < a and
    c < d with a + c = b + d, m(i,a) > m(j,d), m(i,b) > m(j,c), and m(i,b)
    incomparable to m(j,d).  Witnesses are ordered by (i, j, a, d, b)."""
    return _two_chain_search(M, comparable_middles=False)


def find_c4_parallelogram(M) -> PatternWitness | None:
    """Same quadruples as :func:`find_parallelogram` but forming a 4-chain."""
    return _two_chain_search(M, comparable_middles=True)


def is_disjoint_union_of_chains(P: FinitePoset) -> bool:
    """Every connected component of the comparability graph is a chain."""
    seen = 0
    for start in range(P.size):
        if seen >> start & 1:
            continue
        component = 1 << start
        frontier = component
        while frontier:
            nxt = 0
            for k in _bits(frontier):
                nxt |= P.comparable[k]
            frontier = nxt & ~component
            component |= frontier
        seen |= component
        for k in _bits(component):
            if (P.comparable[k] | 1 << k) != component:
                return False
    return True


def hasse_edges(P: FinitePoset) -> list[tuple[int, int]]:
    """Cover pairs ``(lower, upper)``, sorted."""
    edges = []
    for v in range(P.size):
        strictly_below = P.below[v]
        shadowed = 0
        for w in _bits(strictly_below):
            shadowed |= P.below[w]
        for u in _bits(strictly_below & ~shadowed):
            edges.append((u, v))
    edges.sort()
    return edges


def transitive_closure(size: int, edges: Sequence[tuple[int, int]]) -> np.ndarray:
    """Reflexive-transitive closure of a DAG given by ``(lower, upper)`` edges."""
    reach = np.eye(size, dtype=bool)
    for u, v in edges:
        reach[u, v] = True
    for k in range(size):
        reach |= reach[:, k:k + 1] & reach[k:k + 1, :]
    return reach


def find_poset_pattern(P: FinitePoset, Q: FinitePoset,
                       max_size: int = MAX_PATTERN_SIZE) -> tuple[int, ...] | None:
    """Embedding of ``Q`` as an induced subposet of ``P`` (images of Q's elements)."""
    if Q.size > max_size:
        raise ResourceLimitExceeded(
            f"pattern has {Q.size} elements, cap is {max_size}", max_size)
    if Q.size > P.size:
        return None
    image: list[int] = []

    def consistent(k: int, p: int) -> bool:
        for t, pt in enumerate(image):
            if pt == p:
                return False
            if Q.lt(t, k) != P.lt(pt, p) or Q.lt(k, t) != P.lt(p, pt):
                return False
        return True

    def extend() -> bool:
        k = len(image)
        if k == Q.size:
            return True
        for p in range(P.size):
            if consistent(k, p):
                image.append(p)
                if extend():
                    return True
                image.pop()
        return False

    return tuple(image) if extend() else None


def contains_poset_pattern(P: FinitePoset, Q: FinitePoset,
                           max_size: int = MAX_PATTERN_SIZE) -> bool:
    return find_poset_pattern(P, Q, max_size) is not None
