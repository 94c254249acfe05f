"""Partitions, multipartitions, and their combinatorial statistics.

A partition is a weakly decreasing tuple of positive ints; an
ell-multipartition is a tuple of exactly ell partitions.  Enumeration
orders are deterministic and part of the public contract, so printed
matrices are reproducible:

* ``partitions_of(n)`` is reverse lexicographic, ``(n)`` first;
* ``multipartitions_of(ell, n)`` runs through the size of slot 0 in
  decreasing order, then recursively through the remaining slots, with
  each slot in ``partitions_of`` order.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial

from .scalars import LaurentPoly


def check_partition(lam) -> tuple:
    lam = tuple(int(p) for p in lam)
    if any(p <= 0 for p in lam):
        raise ValueError(f"partition parts must be positive: {lam}")
    if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
        raise ValueError(f"parts must be weakly decreasing: {lam}")
    return lam


def check_multipartition(mlam) -> tuple:
    return tuple(check_partition(lam) for lam in mlam)


@lru_cache(maxsize=None)
def _parts_bounded(n: int, maxpart: int) -> tuple:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, maxpart), 0, -1):
        for rest in _parts_bounded(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


@lru_cache(maxsize=None)
def partitions_of(n: int) -> tuple:
    """All partitions of n, in reverse lexicographic order.

    >>> partitions_of(4)
    ((4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1))
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    return _parts_bounded(n, n)


@lru_cache(maxsize=None)
def multipartitions_of(ell: int, n: int) -> tuple:
    """All ell-multipartitions of n, in the documented deterministic order."""
    if ell < 1:
        raise ValueError("ell must be a positive integer")
    if n < 0:
        raise ValueError("n must be nonnegative")
    if ell == 1:
        return tuple((lam,) for lam in partitions_of(n))
    out = []
    for k in range(n, -1, -1):
        for head in partitions_of(k):
            for tail in multipartitions_of(ell - 1, n - k):
                out.append((head,) + tail)
    return tuple(out)


def size(lam) -> int:
    return sum(lam)


def msize(mlam) -> int:
    return sum(sum(lam) for lam in mlam)


def conjugate_partition(lam) -> tuple:
    if not lam:
        return ()
    out = [0] * lam[0]
    for p in lam:
        for j in range(p):
            out[j] += 1
    return tuple(out)


def hook_lengths(lam) -> dict:
    """Hook length of each cell, keyed by 0-based (row, column)."""
    conj = conjugate_partition(lam)
    return {
        (i, j): lam[i] - j + conj[j] - i - 1
        for i in range(len(lam))
        for j in range(lam[i])
    }


def hook_polynomial(lam, m: int = 1, ell: int = 1) -> LaurentPoly:
    """Product of (1 - t^(m*h)) over the cells of lam."""
    out = LaurentPoly.one(ell)
    for h in hook_lengths(lam).values():
        out = out * LaurentPoly.one_minus_t(ell, m * h)
    return out


def sn_dimension(lam) -> int:
    """Number of standard Young tableaux, by the hook length formula."""
    n = sum(lam)
    d = factorial(n)
    for h in hook_lengths(lam).values():
        d //= h
    return d


def dominance_leq(lam, mu) -> bool:
    """True when every partial sum of lam is at most the one of mu."""
    if sum(lam) != sum(mu):
        raise ValueError(f"dominance needs equal sizes: {lam} vs {mu}")
    total_l = total_m = 0
    for k in range(max(len(lam), len(mu))):
        total_l += lam[k] if k < len(lam) else 0
        total_m += mu[k] if k < len(mu) else 0
        if total_l > total_m:
            return False
    return True


def b_invariant(alpha) -> int:
    """sum of (i-1) * alpha_i over 1-indexed entries of any vector in N^k."""
    if any(a < 0 for a in alpha):
        raise ValueError("entries must be nonnegative")
    return sum(i * a for i, a in enumerate(alpha))


def alpha_vector(mlam) -> tuple:
    return tuple(sum(lam) for lam in mlam)


def b_invariant_multi(mlam) -> int:
    ell = len(mlam)
    return b_invariant(alpha_vector(mlam)) + ell * sum(b_invariant(lam) for lam in mlam)


def centralizer_order(lam) -> int:
    """Order of the centralizer of a permutation of cycle type lam."""
    mult: dict[int, int] = {}
    for p in lam:
        mult[p] = mult.get(p, 0) + 1
    out = 1
    for p, a in mult.items():
        out *= p**a * factorial(a)
    return out


def centralizer_order_wreath(mrho) -> int:
    """Centralizer order of the class labelled mrho in C_ell wr S_n."""
    ell = len(mrho)
    out = 1
    for rho in mrho:
        out *= centralizer_order(rho) * ell ** len(rho)
    return out


def dual_multipartition(mlam) -> tuple:
    """Slot 0 fixed, slots 1..ell-1 reversed; each partition unchanged."""
    return (mlam[0],) + tuple(reversed(mlam[1:]))


def trivial_multipartition(ell: int, n: int) -> tuple:
    """The label of the trivial representation: ((n), (), ..., ())."""
    head = (n,) if n else ()
    return (head,) + ((),) * (ell - 1)


def identity_class(ell: int, n: int) -> tuple:
    """The class label of the identity element: ((1^n), (), ..., ())."""
    return ((1,) * n,) + ((),) * (ell - 1)


def wreath_dimension(mlam) -> int:
    """Dimension of the irreducible labelled mlam: a multinomial times the
    product of the per-slot standard-tableau counts."""
    n = msize(mlam)
    d = factorial(n)
    for lam in mlam:
        d //= factorial(sum(lam))
    for lam in mlam:
        d *= sn_dimension(lam)
    return d


# ---------------------------------------------------------------------------
# textual syntax: "[3,1,1]" for partitions, "([2],[],[1])" for multipartitions


def format_partition(lam) -> str:
    return "[" + ",".join(str(p) for p in lam) + "]"


def format_multipartition(mlam) -> str:
    return "(" + ",".join(format_partition(lam) for lam in mlam) + ")"


def parse_partition(text: str) -> tuple:
    s = "".join(text.split())
    if not (s.startswith("[") and s.endswith("]")):
        raise ValueError(f"expected a partition like [3,1,1], got {text!r}")
    body = s[1:-1]
    if not body:
        return ()
    try:
        parts = tuple(int(p) for p in body.split(","))
    except ValueError:
        raise ValueError(f"malformed partition {text!r}") from None
    return check_partition(parts)


def parse_multipartition(text: str) -> tuple:
    s = "".join(text.split())
    if not (s.startswith("(") and s.endswith(")")):
        raise ValueError(f"expected a multipartition like ([2],[],[1]), got {text!r}")
    body = s[1:-1]
    if not body:
        raise ValueError("a multipartition needs at least one component")
    pieces = []
    depth = 0
    start = 0
    for i, ch in enumerate(body):
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
        elif ch == "," and depth == 0:
            pieces.append(body[start:i])
            start = i + 1
    pieces.append(body[start:])
    return tuple(parse_partition(p) for p in pieces)
