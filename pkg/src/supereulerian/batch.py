"""Vectorised evaluation of strongness and pair hypotheses over digraph batches.

A batch is an ``(count, n)`` integer array of out-row bitmasks.  These kernels
mirror the scalar code in :mod:`.digraph` and :mod:`.conditions`; the test
suite checks the two against each other on every digraph with n <= 4.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import combinations, permutations

import numpy as np

from .conditions import Hypothesis

ROW_DTYPE = np.int64


@lru_cache(maxsize=None)
def pair_list(n: int) -> tuple[tuple[int, int], ...]:
    """Unordered pairs in the order of the base-4 pair-state code."""
    return tuple(combinations(range(n), 2))


def codes_to_rows(codes: np.ndarray, n: int) -> np.ndarray:
    """Decode pair-state codes: digit ``p`` is 0 none, 1 i->j, 2 j->i, 3 both."""
    codes = np.asarray(codes, dtype=np.int64)
    rows = np.zeros((len(codes), n), dtype=ROW_DTYPE)
    for p, (i, j) in enumerate(pair_list(n)):
        state = (codes >> (2 * p)) & 3
        rows[:, i] |= (state & 1) << j
        rows[:, j] |= ((state >> 1) & 1) << i
    return rows


def rows_to_codes(rows: np.ndarray, n: int) -> np.ndarray:
    if n * (n - 1) > 62:
        raise ValueError(f"pair-state codes for n={n} do not fit in int64")
    codes = np.zeros(len(rows), dtype=np.int64)
    for p, (i, j) in enumerate(pair_list(n)):
        state = ((rows[:, i] >> j) & 1) | (((rows[:, j] >> i) & 1) << 1)
        codes |= state << (2 * p)
    return codes


def in_rows(rows: np.ndarray, n: int) -> np.ndarray:
    out = np.zeros_like(rows)
    for i in range(n):
        for j in range(n):
            if i != j:
                out[:, j] |= ((rows[:, i] >> j) & 1) << i
    return out


def _closure_from_zero(rows: np.ndarray, n: int) -> np.ndarray:
    reach = np.ones(len(rows), dtype=ROW_DTYPE)
    for _ in range(n - 1):
        nxt = reach.copy()
        for v in range(n):
            nxt |= np.where((reach >> v) & 1, rows[:, v], 0)
        reach = nxt
    return reach


def strong_flags(rows: np.ndarray, n: int, inrows: np.ndarray | None = None) -> np.ndarray:
    if inrows is None:
        inrows = in_rows(rows, n)
    full = (1 << n) - 1
    return (_closure_from_zero(rows, n) == full) & (_closure_from_zero(inrows, n) == full)


def multipartite_flags(rows: np.ndarray, n: int, inrows: np.ndarray | None = None) -> np.ndarray:
    """True where "equal or nonadjacent" is transitive."""
    if inrows is None:
        inrows = in_rows(rows, n)
    adj = rows | inrows
    ok = np.ones(len(rows), dtype=bool)
    for a, b in pair_list(n):
        ab = ((adj[:, a] >> b) & 1).astype(bool)
        for c in range(n):
            if c in (a, b):
                continue
            nac = ((adj[:, a] >> c) & 1) == 0
            nbc = ((adj[:, b] >> c) & 1) == 0
            ok &= ~(ab & nac & nbc)
    return ok


def evaluate(rows: np.ndarray, n: int, hypotheses=tuple(Hypothesis)) -> dict:
    """Flags ``strong``, ``smd`` and one boolean array per hypothesis.

    A hypothesis flag is true only where the digraph is strong, the hypothesis
    applies, and every in-scope nonadjacent pair meets the bound.
    """
    inr = in_rows(rows, n)
    strong = strong_flags(rows, n, inr)
    smd = multipartite_flags(rows, n, inr)
    outdeg = np.bitwise_count(rows).astype(np.int64)
    indeg = np.bitwise_count(inr).astype(np.int64)
    flags = {h: strong.copy() for h in hypotheses}
    if Hypothesis.T24_SMD in flags:
        flags[Hypothesis.T24_SMD] &= smd
    if Hypothesis.T26_5N2 in flags and n < 2:
        flags[Hypothesis.T26_5N2][:] = False
    for u, v in pair_list(n):
        nonadj = (((rows[:, u] | inr[:, u]) >> v) & 1) == 0
        dominated = (inr[:, u] & inr[:, v]) != 0
        dominating = (rows[:, u] & rows[:, v]) != 0
        dsum = outdeg[:, u] + indeg[:, u] + outdeg[:, v] + indeg[:, v]
        mixed = np.minimum(indeg[:, u] + outdeg[:, v], outdeg[:, u] + indeg[:, v])
        either = dominated | dominating
        for h in flags:
            if h is Hypothesis.BJM_2N3:
                scope = nonadj
            elif h in (Hypothesis.C12_DOMINATED, Hypothesis.T24_SMD):
                scope = nonadj & dominated
            else:
                scope = nonadj & either
            if h is Hypothesis.T26_5N2:
                sat = 2 * dsum >= 5 * n - 11
            else:
                sat = dsum >= 2 * n - 3
                if h is Hypothesis.T25_MIN:
                    sat &= mixed >= n - 2
            flags[h] &= ~scope | sat
    return {"strong": strong, "smd": smd, **flags}


@lru_cache(maxsize=None)
def _perms(n: int) -> tuple[tuple[int, ...], ...]:
    return tuple(permutations(range(n)))


def canonical_codes(rows: np.ndarray, n: int) -> np.ndarray:
    """Minimum pair-state code over all relabellings (practical for n <= 6)."""
    best = None
    for perm in _perms(n):
        permuted = np.zeros_like(rows)
        for i in range(n):
            r = rows[:, i]
            img = np.zeros(len(rows), dtype=ROW_DTYPE)
            for j in range(n):
                img |= ((r >> j) & 1) << perm[j]
            permuted[:, perm[i]] = img
        codes = rows_to_codes(permuted, n)
        best = codes if best is None else np.minimum(best, codes)
    return best
