"""Brute-force oracles for the test suite.

Everything here avoids the package's character and plethysm machinery:
Schur functions come from tableau enumeration and Jacobi-Trudi
determinants, the geometric-alphabet substitution from explicit
truncated integer power series in t, and Schur coefficients from
triangular elimination against monomial expansions.  Only the partition
enumeration order is shared with the package.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations

from wreathmac.combinatorics import partitions_of


def series_mul(a: list, b: list, tmax: int) -> list:
    out = [0] * (tmax + 1)
    for i, ca in enumerate(a):
        if ca:
            top = min(len(b), tmax + 1 - i)
            for j in range(top):
                if b[j]:
                    out[i + j] += ca * b[j]
    return out


def series_trim(a: list) -> list:
    out = list(a)
    while out and out[-1] == 0:
        out.pop()
    return out


def hook_poly_coeffs(lam) -> list:
    """Dense integer coefficients of prod over cells of (1 - t^hook)."""
    if not lam:
        return [1]
    conj = [0] * lam[0]
    for p in lam:
        for j in range(p):
            conj[j] += 1
    out = [1]
    for i in range(len(lam)):
        for j in range(lam[i]):
            h = lam[i] - j + conj[j] - i - 1
            nxt = [0] * (len(out) + h)
            for k, c in enumerate(out):
                nxt[k] += c
                nxt[k + h] -= c
            out = nxt
    return series_trim(out)


@lru_cache(maxsize=None)
def _multiset_series(count: int, tmax: int) -> tuple:
    """Generating series for multisets of `count` nonnegative integers by
    their sum: prod_{j=1..count} 1/(1 - t^j), truncated."""
    out = [0] * (tmax + 1)
    out[0] = 1
    for j in range(1, count + 1):
        for i in range(j, tmax + 1):
            out[i] += out[i - j]
    return tuple(out)


def _compositions(total: int, slots: int):
    if slots == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, slots - 1):
            yield (first,) + rest


@lru_cache(maxsize=None)
def complete_homogeneous_on_geometric(m: int, nvars: int, tmax: int) -> tuple:
    """h_m evaluated on the alphabet {x_i t^k : i <= nvars, k >= 0},
    as a tuple of (exponent-vector, t-series) pairs."""
    out = []
    for alpha in _compositions(m, nvars):
        series = [1] + [0] * tmax
        for a in alpha:
            if a:
                series = series_mul(series, list(_multiset_series(a, tmax)), tmax)
        out.append((alpha, tuple(series)))
    return tuple(out)


def _poly_mul(A: dict, B, tmax: int) -> dict:
    out: dict = {}
    for ea, ca in A.items():
        for eb, cb in B:
            key = tuple(x + y for x, y in zip(ea, eb))
            prod = series_mul(ca, list(cb), tmax)
            if key in out:
                prev = out[key]
                out[key] = [a + b for a, b in zip(prev, prod)]
            else:
                out[key] = prod
    return out


def _perm_sign(sigma) -> int:
    sign = 1
    seen = [False] * len(sigma)
    for i in range(len(sigma)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = sigma[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def schur_on_geometric(lam: tuple, nvars: int, tmax: int) -> dict:
    """s_lam on {x_i t^k}, via the Jacobi-Trudi determinant in the h's."""
    length = len(lam)
    if length == 0:
        return {(0,) * nvars: [1] + [0] * tmax}
    total: dict = {}
    for sigma in permutations(range(length)):
        degrees = [lam[i] - i + sigma[i] for i in range(length)]
        if any(d < 0 for d in degrees):
            continue
        sign = _perm_sign(sigma)
        poly = {(0,) * nvars: [sign] + [0] * tmax}
        for d in degrees:
            if d > 0:
                poly = _poly_mul(poly, complete_homogeneous_on_geometric(d, nvars, tmax), tmax)
        for key, series in poly.items():
            if key in total:
                total[key] = [a + b for a, b in zip(total[key], series)]
            else:
                total[key] = series
    return {k: v for k, v in total.items() if any(v)}


@lru_cache(maxsize=None)
def ssyt_monomials(shape: tuple, nvars: int) -> tuple:
    """Monomial expansion of s_shape in nvars variables, by enumerating
    semistandard tableaux; returns (exponent-vector, count) pairs."""
    cells = [(r, c) for r in range(len(shape)) for c in range(shape[r])]
    counts: dict = {}

    def fill(pos: int, board: dict, weight: tuple):
        if pos == len(cells):
            counts[weight] = counts.get(weight, 0) + 1
            return
        r, c = cells[pos]
        lo = 1
        if c > 0:
            lo = max(lo, board[(r, c - 1)])
        if r > 0:
            lo = max(lo, board[(r - 1, c)] + 1)
        for v in range(lo, nvars + 1):
            board[(r, c)] = v
            w = list(weight)
            w[v - 1] += 1
            fill(pos + 1, board, tuple(w))
        board.pop((r, c), None)

    fill(0, {}, (0,) * nvars)
    return tuple(sorted(counts.items()))


def monomials_to_schur(F: dict, n: int, nvars: int, tmax: int) -> dict:
    """Triangular elimination: peel off Schur expansions in reverse
    lexicographic order of partitions and return {mu: t-series}."""
    work = {k: list(v) for k, v in F.items()}
    out = {}
    for mu in partitions_of(n):
        key = tuple(mu) + (0,) * (nvars - len(mu))
        series = work.get(key)
        if series is None or not any(series):
            continue
        out[mu] = series_trim(series)
        for exp, count in ssyt_monomials(mu, nvars):
            scaled = [c * count for c in series]
            prev = work.get(exp, [0] * (tmax + 1))
            work[exp] = [a - b for a, b in zip(prev, scaled)]
    leftovers = {k: v for k, v in work.items() if any(v)}
    if leftovers:
        raise AssertionError(f"elimination left residue: {leftovers}")
    return out


def kostka_tt_oracle(n: int) -> dict:
    """The q=t Kostka matrix for S_n: {(mu, lam): integer coefficient list},
    from hook_poly(lam) * s_lam[X/(1-t)] expanded in monomials truncated at
    degree 2n^2 + n and eliminated to Schur coefficients."""
    tmax = 2 * n * n + n
    nvars = max(n, 1)
    out = {}
    for lam in partitions_of(n):
        F = schur_on_geometric(lam, nvars, tmax)
        hook = hook_poly_coeffs(lam)
        F = {k: series_mul(v, hook, tmax) for k, v in F.items()}
        cols = monomials_to_schur(F, n, nvars, tmax)
        for mu in partitions_of(n):
            out[(mu, lam)] = cols.get(mu, [])
    return out
