"""Exhaustive sweeps over S_n checking the main theorem and its supporting lemmas.

Each claim is a predicate on a single permutation that returns the offending
data, or nothing.  Sweeps are sharded into lexicographically contiguous blocks
(all permutations sharing a prefix) and merged back in rank order, so a report
does not depend on the number of workers.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from itertools import permutations
from math import comb, factorial
from typing import Callable, Iterable

from mposet.errors import InvalidInput, ResourceLimitExceeded
from mposet.join_irr import build_M, leq_closed_form
from mposet.perm_core import (
    Permutation,
    _as_perm,
    _find_in_word,
    avoids_all,
    find_pattern,
    format_permutation,
    lehmer_code,
    permutations_with_prefix,
)
from mposet.poset_patterns import (
    find_B2,
    find_c4_parallelogram,
    find_parallelogram,
    is_disjoint_union_of_chains,
)
from mposet.weak_order import (
    birkhoff_isomorphic,
    code_lattice,
    is_distributive,
    lattice_join_irreducibles,
)

P3412 = Permutation((3, 4, 1, 2))
P3421 = Permutation((3, 4, 2, 1))
P231 = Permutation((2, 3, 1))
MAIN_PATTERNS = (P3412, P3421)

DEFAULT_MAX_WITNESSES = 100

LATTICE_CAP = 5
COMPARABILITY_CAP = 7
MAIN_CAP = 8


@dataclass
class VerificationReport:
    claim: str
    n: int
    checked: int
    counterexamples: list[dict] = field(default_factory=list)
    total_counterexamples: int = 0
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return self.total_counterexamples == 0

    def to_dict(self) -> dict:
        d = asdict(self)
        d["passed"] = self.passed
        return d

    def summary(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        return (f"{self.claim} n={self.n}: {verdict} checked={self.checked} "
                f"counterexamples={self.total_counterexamples} "
                f"elapsed={self.elapsed:.2f}s")


@dataclass(frozen=True)
class CountRow:
    n: int
    predicate: str
    count: int


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


# -- per-permutation predicates ------------------------------------------------
# Each returns None when the claim holds for w, else a dict describing why not.

def _labels(wit):
    return None if wit is None else [list(lab) for lab in wit.labels]


def _main_theorem(w: Permutation):
    b2 = find_B2(build_M(w))
    occ = find_pattern(w, P3412) or find_pattern(w, P3421)
    if (b2 is None) == (occ is None):
        return None
    return {"b2_witness": _labels(b2), "pattern_positions": occ and list(occ)}


def _theorem_2_1(w: Permutation):
    L = code_lattice(w)
    if not L.is_closed():
        return {"reason": "not closed under componentwise join/meet"}
    if not is_distributive(L):
        return {"reason": "distributive law fails"}
    return None


def _theorem_2_3(w: Permutation):
    jis = lattice_join_irreducibles(code_lattice(w))
    mvecs = set(build_M(w).vectors)
    if jis == mvecs:
        return None
    return {"only_in_lattice": sorted(map(list, jis - mvecs)),
            "only_in_M": sorted(map(list, mvecs - jis))}


def _birkhoff(w: Permutation):
    if birkhoff_isomorphic(build_M(w), code_lattice(w)):
        return None
    return {"reason": "ideal -> join map is not an order isomorphism"}


def _lemma_2_4(w: Permutation):
    M = build_M(w)
    bad = []
    for ka, a in enumerate(M.labels):
        for kb, b in enumerate(M.labels):
            if leq_closed_form(w, a, b) != M.lt(kb, ka):
                bad.append([list(a), list(b)])
    return {"disagreeing_pairs": bad} if bad else None


def _above_pairs(M):
    """Label pairs ((i, p), (j, q)) with i < j and m(i,p) > m(j,q)."""
    for ka, (i, p) in enumerate(M.labels):
        for kb in range(M.size):
            j, q = M.labels[kb]
            if i < j and M.lt(kb, ka):
                yield (i, p), (j, q)


def _lemma_3_4(w: Permutation):
    M = build_M(w)
    length = M.chain_lengths()
    idx = M.index
    for (i, a), (j, b) in _above_pairs(M):
        if a >= 2 and b >= 2 and not M.lt(idx[(j, b - 1)], idx[(i, a - 1)]):
            return {"pair": [[i, a], [j, b]], "part": "shift down"}
        if a < length[i] and b < length[j] and not M.lt(idx[(j, b + 1)], idx[(i, a + 1)]):
            return {"pair": [[i, a], [j, b]], "part": "shift up"}
    return None


def _lemma_3_5(w: Permutation):
    M = build_M(w)
    word = w.word
    n = w.n
    for (i, p), (j, q) in _above_pairs(M):
        left = {k for k in range(j + 1, n + 1) if word[i - 1] > word[k - 1]}
        right = {k for k in range(j + 1, n + 1) if word[j - 1] > word[k - 1]}
        if not left <= right:
            return {"pair": [[i, p], [j, q]]}
    return None


def _lemma_3_6(w: Permutation):
    M = build_M(w)
    code = lehmer_code(w)
    for (i, p), (j, q) in _above_pairs(M):
        if code[j - 1] < code[i - 1] + q - p:
            return {"pair": [[i, p], [j, q]]}
    return None


def _lemma_3_7(w: Permutation):
    M = build_M(w)
    c4 = find_c4_parallelogram(M)
    if c4 is not None and find_parallelogram(M) is None:
        return {"c4_witness": _labels(c4)}
    return None


def _lemma_3_8(w: Permutation):
    M = build_M(w)
    b2, par = find_B2(M), find_parallelogram(M)
    if (b2 is None) == (par is None):
        return None
    return {"b2_witness": _labels(b2), "parallelogram_witness": _labels(par)}


def _lemma_3_9(w: Permutation):
    par = find_parallelogram(build_M(w))
    occ = find_pattern(w, P3412) or find_pattern(w, P3421)
    if par is not None and occ is None:
        return {"direction": "parallelogram without 3412/3421",
                "parallelogram_witness": _labels(par)}
    if par is None and occ is not None:
        return {"direction": "3412/3421 without parallelogram",
                "pattern_positions": list(occ)}
    return None


def _corollary_2_5(w: Permutation):
    if avoids_all(w, (P231,)) and not is_disjoint_union_of_chains(build_M(w)):
        return {"reason": "231-avoiding but M is not a disjoint union of chains"}
    return None


CLAIMS: dict[str, tuple[Callable[[Permutation], dict | None], int]] = {
    "MAIN_THEOREM": (_main_theorem, MAIN_CAP),
    "THEOREM_2_1": (_theorem_2_1, LATTICE_CAP),
    "THEOREM_2_3": (_theorem_2_3, LATTICE_CAP),
    "BIRKHOFF": (_birkhoff, LATTICE_CAP),
    "LEMMA_2_4": (_lemma_2_4, COMPARABILITY_CAP),
    "COROLLARY_2_5": (_corollary_2_5, COMPARABILITY_CAP),
    "LEMMA_3_4": (_lemma_3_4, COMPARABILITY_CAP),
    "LEMMA_3_5": (_lemma_3_5, COMPARABILITY_CAP),
    "LEMMA_3_6": (_lemma_3_6, COMPARABILITY_CAP),
    "LEMMA_3_7": (_lemma_3_7, COMPARABILITY_CAP),
    "LEMMA_3_8": (_lemma_3_8, COMPARABILITY_CAP),
    "LEMMA_3_9": (_lemma_3_9, COMPARABILITY_CAP),
}


def claim_cap(claim: str) -> int:
    return _lookup(claim)[1]


def _lookup(claim: str):
    try:
        return CLAIMS[claim]
    except KeyError:
        raise InvalidInput(
            f"unknown claim {claim!r}; choose from {', '.join(CLAIMS)}") from None


# -- sharded sweeping ----------------------------------------------------------

def shard_prefixes(n: int) -> list[tuple[int, ...]]:
    """Lexicographically ordered prefixes splitting S_n into contiguous blocks."""
    depth = 0 if n <= 4 else 1 if n <= 6 else 2
    return list(permutations(range(1, n + 1), depth))


def _run_shard(args) -> tuple[int, list[dict], int]:
    claim, n, prefix, max_witnesses = args
    predicate = CLAIMS[claim][0]
    checked = 0
    found: list[dict] = []
    total = 0
    for w in permutations_with_prefix(n, prefix):
        checked += 1
        bad = predicate(w)
        if bad is not None:
            total += 1
            if len(found) < max_witnesses:
                found.append({"omega": format_permutation(w), **bad})
    return checked, found, total


def _sweep(claim: str, n: int, workers: int, max_witnesses: int) -> VerificationReport:
    start = time.perf_counter()
    jobs = [(claim, n, prefix, max_witnesses) for prefix in shard_prefixes(n)]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_run_shard, jobs))
    else:
        parts = [_run_shard(job) for job in jobs]
    report = VerificationReport(claim, n, 0)
    for checked, found, total in parts:
        report.checked += checked
        report.total_counterexamples += total
        room = max_witnesses - len(report.counterexamples)
        report.counterexamples.extend(found[:max(room, 0)])
    report.elapsed = time.perf_counter() - start
    return report


def verify_claim(claim: str, n: int, workers: int = 1,
                 max_witnesses: int = DEFAULT_MAX_WITNESSES,
                 override_cap: bool = False) -> VerificationReport:
    _, cap = _lookup(claim)
    if n < 1:
        raise InvalidInput(f"n must be positive, got {n}")
    if n > cap and not override_cap:
        raise ResourceLimitExceeded(
            f"{claim} is capped at n={cap}; pass --override-cap to run n={n}", cap)
    return _sweep(claim, n, workers, max_witnesses)


def verify_main_theorem(n: int, workers: int = 1,
                        max_witnesses: int = DEFAULT_MAX_WITNESSES,
                        override_cap: bool = False) -> VerificationReport:
    return verify_claim("MAIN_THEOREM", n, workers, max_witnesses, override_cap)


# -- counting ------------------------------------------------------------------

def _pattern_name(ps: Iterable[Permutation]) -> str:
    return "avoid:" + ",".join(format_permutation(_as_perm(p)) for p in ps)


def count_avoiders(n: int, ps) -> CountRow:
    """Size of Av_n(ps).

    Grows words letter by letter and abandons a prefix as soon as it contains
    a pattern, since every completion would contain it as well.  The prefix
    before the new letter is already clean, so only occurrences ending at the
    new letter are searched.
    """
    ps = [_as_perm(p) for p in ps]
    if n < 1:
        raise InvalidInput(f"n must be positive, got {n}")
    pats = [p.word for p in ps]
    prefix: list[int] = []
    unused = set(range(1, n + 1))

    def grow() -> int:
        if len(prefix) == n:
            return 1
        total = 0
        for v in sorted(unused):
            prefix.append(v)
            if not any(_find_in_word(prefix, pat, anchor_last=True) for pat in pats):
                unused.remove(v)
                total += grow()
                unused.add(v)
            prefix.pop()
        return total

    return CountRow(n, _pattern_name(ps), grow())


def count_b2_free(n: int) -> CountRow:
    if n < 1:
        raise InvalidInput(f"n must be positive, got {n}")
    count = sum(
        1 for word in permutations(range(1, n + 1))
        if find_B2(build_M(Permutation(word))) is None
    )
    return CountRow(n, "b2_free", count)


def expected_checked(n: int) -> int:
    return factorial(n)
