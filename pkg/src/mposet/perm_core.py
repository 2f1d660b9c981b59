"""Permutations in one-line notation, inversions, Lehmer codes and classical patterns.

Positions and values are 1-based at every public boundary, so ``w(1)`` is the
first letter of the word.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Iterable, Iterator, Sequence

from mposet.errors import InvalidInput

LehmerCode = tuple[int, ...]
InversionSet = frozenset[tuple[int, int]]


@dataclass(frozen=True, order=True)
class Permutation:
    """A permutation of ``{1, ..., n}`` stored as its one-line word."""

    word: tuple[int, ...]

    def __post_init__(self):
        word = tuple(int(v) for v in self.word)
        object.__setattr__(self, "word", word)
        if not word:
            raise InvalidInput("a permutation needs at least one letter")
        if sorted(word) != list(range(1, len(word) + 1)):
            raise InvalidInput(f"{word!r} is not a permutation of 1..{len(word)}")

    @classmethod
    def _trusted(cls, word: tuple[int, ...]) -> Permutation:
        # skips validation; only for words produced by itertools.permutations
        obj = object.__new__(cls)
        object.__setattr__(obj, "word", word)
        return obj

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @property
    def n(self) -> int:
        return len(self.word)

    def __len__(self) -> int:
        return len(self.word)

    def __call__(self, i: int) -> int:
        """Value at 1-based position ``i``."""
        return self.word[i - 1]

    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for pos, v in enumerate(self.word, 1):
            inv[v - 1] = pos
        return Permutation(tuple(inv))

    def __str__(self) -> str:
        return format_permutation(self)


def parse_permutation(text: str) -> Permutation:
    """Read ``"35142"`` (n <= 9) or ``"10,3,1,..."`` (comma separated)."""
    text = text.strip()
    if not text:
        raise InvalidInput("empty permutation text")
    if "," in text:
        tokens = [t.strip() for t in text.split(",")]
    else:
        tokens = list(text)
    values = []
    for tok in tokens:
        if not tok.isdigit():
            raise InvalidInput(f"bad token {tok!r} in permutation {text!r}")
        values.append(int(tok))
    try:
        return Permutation(tuple(values))
    except InvalidInput:
        seen = set()
        for tok, v in zip(tokens, values):
            if v < 1 or v > len(values) or v in seen:
                raise InvalidInput(
                    f"bad token {tok!r} in permutation {text!r}") from None
            seen.add(v)
        raise


def format_permutation(w: Permutation) -> str:
    if w.n <= 9:
        return "".join(str(v) for v in w.word)
    return ",".join(str(v) for v in w.word)


def format_code(c: Sequence[int]) -> str:
    return " ".join(str(v) for v in c)


def _as_perm(w) -> Permutation:
    if isinstance(w, Permutation):
        return w
    if isinstance(w, str):
        return parse_permutation(w)
    return Permutation(tuple(w))


def standardize(seq: Sequence[int]) -> Permutation:
    """The permutation order-isomorphic to a sequence of distinct integers."""
    seq = tuple(seq)
    if not seq:
        raise InvalidInput("cannot standardize an empty sequence")
    if len(set(seq)) != len(seq):
        raise InvalidInput(f"duplicate entries in {seq!r}")
    rank = {v: r for r, v in enumerate(sorted(seq), 1)}
    return Permutation(tuple(rank[v] for v in seq))


def inversion_set(w: Permutation) -> InversionSet:
    word = _as_perm(w).word
    n = len(word)
    return frozenset(
        (i + 1, j + 1)
        for i in range(n)
        for j in range(i + 1, n)
        if word[i] > word[j]
    )


def lehmer_code(w: Permutation) -> LehmerCode:
    """``c_i`` counts the later letters smaller than ``w(i)``."""
    word = _as_perm(w).word
    return tuple(
        sum(1 for later in word[i + 1:] if later < v) for i, v in enumerate(word)
    )


def decode_lehmer(c: Sequence[int]) -> Permutation:
    c = tuple(int(v) for v in c)
    n = len(c)
    if n == 0:
        raise InvalidInput("empty Lehmer code")
    for i, ci in enumerate(c):
        if not 0 <= ci <= n - 1 - i:
            raise InvalidInput(
                f"code entry {i + 1} is {ci}, must lie in [0, {n - 1 - i}]")
    remaining = list(range(1, n + 1))
    return Permutation(tuple(remaining.pop(ci) for ci in c))


def c_between(w: Permutation, i: int, j: int) -> int:
    """Number of ``k`` with ``i < k < j`` and ``w(i) > w(k)``."""
    word = _as_perm(w).word
    if not 1 <= i < j <= len(word):
        raise InvalidInput(f"need 1 <= i < j <= {len(word)}, got i={i}, j={j}")
    vi = word[i - 1]
    return sum(1 for k in range(i, j - 1) if word[k] < vi)


def find_pattern(w: Permutation, p: Permutation) -> tuple[int, ...] | None:
    """Lexicographically first occurrence of ``p`` in ``w`` as 1-based positions.

    Depth-first search that extends a partial occurrence only with letters
    keeping its relative order consistent with ``p``; positions too far right
    to leave room for the rest of the pattern are never tried.
    """
    return _find_in_word(_as_perm(w).word, _as_perm(p).word)


def _find_in_word(word: Sequence[int], pat: Sequence[int],
                  anchor_last: bool = False) -> tuple[int, ...] | None:
    # word only needs distinct letters, so prefixes of permutations work too;
    # anchor_last restricts to occurrences ending at the final letter
    n, k = len(word), len(pat)
    if k > n:
        return None
    # for each depth, the earlier depths whose letters must be smaller
    smaller = [[pat[t] < pat[d] for t in range(d)] for d in range(k)]
    chosen = [0] * k
    values = [0] * k
    depth, pos = 0, 0
    while True:
        limit = n - k + depth
        placed = False
        while pos <= limit:
            v = word[pos]
            rel = smaller[depth]
            for t in range(depth):
                if (values[t] < v) != rel[t]:
                    break
            else:
                chosen[depth], values[depth] = pos, v
                placed = True
                break
            pos += 1
        if placed:
            depth += 1
            if depth == k:
                return tuple(q + 1 for q in chosen)
            pos = chosen[depth - 1] + 1
            if anchor_last and depth == k - 1:
                pos = n - 1
        else:
            if depth == 0:
                return None
            depth -= 1
            pos = chosen[depth] + 1


def contains_pattern(w: Permutation, p: Permutation) -> bool:
    return find_pattern(w, p) is not None


def avoids_all(w: Permutation, ps: Iterable[Permutation]) -> bool:
    w = _as_perm(w)
    return not any(find_pattern(w, p) is not None for p in ps)


def all_permutations(n: int) -> Iterator[Permutation]:
    """Every permutation of size ``n``, lexicographically, generated lazily."""
    if n < 1:
        raise InvalidInput(f"n must be positive, got {n}")
    for word in permutations(range(1, n + 1)):
        yield Permutation._trusted(word)


def permutations_with_prefix(n: int, prefix: Sequence[int]) -> Iterator[Permutation]:
    """The lexicographically contiguous block of S_n starting with ``prefix``."""
    prefix = tuple(prefix)
    rest = [v for v in range(1, n + 1) if v not in prefix]
    for tail in permutations(rest):
        yield Permutation._trusted(prefix + tail)
