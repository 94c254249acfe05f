"""Symmetric functions with rational-function coefficients.

Two bases are supported, tagged "p" (power sums) and "s" (Schur); indices
are partitions and mixed degrees are allowed, so a whole graded character
fits in one value.  Variables are never instantiated: substitutions such
as s_lam applied to the alphabet X/(1-t) become coefficient transforms on
the power-sum basis, which is exact in every degree.

Plethysm follows the usual computational convention: p_r applied to g
multiplies every index of g by r and substitutes t -> t^r in g's
coefficients, while scalar coefficients of the outer function pass
through untouched (the operation is only a morphism of C-algebras, not of
C(t)-algebras).
"""

from __future__ import annotations

import threading
from fractions import Fraction
from functools import lru_cache

from .combinatorics import (
    centralizer_order,
    check_partition,
    b_invariant,
    hook_polynomial,
    partitions_of,
    sn_dimension,
)
from .scalars import LaurentPoly, RatFunc


# ---------------------------------------------------------------------------
# symmetric group characters (Murnaghan-Nakayama recursion on beta-sets)


@lru_cache(maxsize=None)
def _mn_char(lam: tuple, mu: tuple) -> int:
    if not mu:
        return 1 if not lam else 0
    m, rest = mu[0], mu[1:]
    length = len(lam)
    beta = tuple(lam[i] + (length - 1 - i) for i in range(length))
    bset = set(beta)
    total = 0
    for b in beta:
        nb = b - m
        if nb < 0 or nb in bset:
            continue
        height = sum(1 for c in beta if nb < c < b)
        newbeta = sorted((bset - {b}) | {nb}, reverse=True)
        newlam = tuple(
            v - (length - 1 - i) for i, v in enumerate(newbeta) if v - (length - 1 - i) > 0
        )
        total += (-1) ** height * _mn_char(newlam, rest)
    return total


def sn_character(lam, mu) -> int:
    """Value of the irreducible character of S_n labelled lam at cycle type mu."""
    lam = check_partition(lam)
    mu = check_partition(mu)
    if sum(lam) != sum(mu):
        raise ValueError(f"character of size {sum(lam)} evaluated at size {sum(mu)}")
    return _mn_char(lam, mu)


_table_lock = threading.Lock()
_sn_tables: dict[int, dict] = {}


def sn_character_table(n: int) -> dict:
    """Full character table of S_n as {(lam, mu): value}; memoized."""
    with _table_lock:
        table = _sn_tables.get(n)
    if table is None:
        parts = partitions_of(n)
        table = {(lam, mu): _mn_char(lam, mu) for lam in parts for mu in parts}
        with _table_lock:
            table = _sn_tables.setdefault(n, table)
    return table


# ---------------------------------------------------------------------------


class SymFunc:
    """Sparse symmetric function: mapping partition -> RatFunc on a basis tag."""

    __slots__ = ("ell", "basis", "coeffs")

    def __init__(self, ell: int, basis: str, coeffs=None):
        if basis not in ("p", "s"):
            raise ValueError(f"unknown basis {basis!r}")
        data = {}
        for idx, c in (coeffs or {}).items():
            if not isinstance(c, RatFunc):
                c = RatFunc.of(ell, c)
            if not c.is_zero():
                data[tuple(idx)] = c
        self.ell = ell
        self.basis = basis
        self.coeffs = data

    @staticmethod
    def zero(ell: int, basis: str = "p") -> "SymFunc":
        return SymFunc(ell, basis)

    @staticmethod
    def one(ell: int) -> "SymFunc":
        return SymFunc(ell, "p", {(): RatFunc.one(ell)})

    @staticmethod
    def powersum(lam, ell: int = 1) -> "SymFunc":
        return SymFunc(ell, "p", {check_partition(lam): RatFunc.one(ell)})

    @staticmethod
    def schur(lam, ell: int = 1) -> "SymFunc":
        return SymFunc(ell, "s", {check_partition(lam): RatFunc.one(ell)})

    def coefficient(self, lam) -> RatFunc:
        return self.coeffs.get(tuple(lam), RatFunc.zero(self.ell))

    def support(self):
        return sorted(self.coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other):
        if not isinstance(other, SymFunc):
            return NotImplemented
        if self.basis != other.basis:
            raise ValueError("cannot add values in different bases")
        data = dict(self.coeffs)
        for idx, c in other.coeffs.items():
            s = data.get(idx)
            s = c if s is None else s + c
            if s.is_zero():
                data.pop(idx, None)
            else:
                data[idx] = s
        out = SymFunc.__new__(SymFunc)
        out.ell, out.basis, out.coeffs = self.ell, self.basis, data
        return out

    def __neg__(self):
        out = SymFunc.__new__(SymFunc)
        out.ell, out.basis = self.ell, self.basis
        out.coeffs = {idx: -c for idx, c in self.coeffs.items()}
        return out

    def __sub__(self, other):
        if not isinstance(other, SymFunc):
            return NotImplemented
        return self + (-other)

    def scale(self, scalar) -> "SymFunc":
        out = {}
        for idx, c in self.coeffs.items():
            v = c * scalar
            if not v.is_zero():
                out[idx] = v
        return SymFunc(self.ell, self.basis, out)

    def __eq__(self, other):
        if not isinstance(other, SymFunc):
            return NotImplemented
        return self.basis == other.basis and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.basis, frozenset(self.coeffs.items())))

    def to_powersum(self) -> "SymFunc":
        if self.basis == "p":
            return self
        out = SymFunc.zero(self.ell, "p")
        for lam, c in self.coeffs.items():
            out = out + schur_to_powersum(lam, self.ell).scale(c)
        return out

    def to_schur(self) -> "SymFunc":
        if self.basis == "s":
            return self
        return powersum_to_schur(self)

    def __repr__(self):
        body = ", ".join(f"{idx}: {c}" for idx, c in sorted(self.coeffs.items()))
        return f"SymFunc({self.ell}, {self.basis!r}, {{{body}}})"


def _require_p(f: SymFunc):
    if f.basis != "p":
        raise ValueError("operation requires the power-sum basis")


def schur_to_powersum(lam, ell: int = 1) -> SymFunc:
    """Expansion s_lam = sum over mu of chi(lam, mu)/z_mu * p_mu."""
    lam = check_partition(lam)
    coeffs = {}
    for mu in partitions_of(sum(lam)):
        chi = _mn_char(lam, mu)
        if chi:
            coeffs[mu] = RatFunc.of(ell, Fraction(chi, centralizer_order(mu)))
    return SymFunc(ell, "p", coeffs)


def powersum_to_schur(f: SymFunc) -> SymFunc:
    """Schur expansion, using <p_lam, p_mu> = z_lam * delta."""
    _require_p(f)
    out: dict[tuple, RatFunc] = {}
    for nu, c in f.coeffs.items():
        for lam in partitions_of(sum(nu)):
            chi = _mn_char(lam, nu)
            if chi:
                prev = out.get(lam)
                term = c.scale(chi)
                out[lam] = term if prev is None else prev + term
    return SymFunc(f.ell, "s", out)


def multiply(f: SymFunc, g: SymFunc) -> SymFunc:
    """Product in the power-sum basis: indices concatenate and sort."""
    _require_p(f)
    _require_p(g)
    out: dict[tuple, RatFunc] = {}
    for a, ca in f.coeffs.items():
        for b, cb in g.coeffs.items():
            idx = tuple(sorted(a + b, reverse=True))
            term = ca * cb
            prev = out.get(idx)
            out[idx] = term if prev is None else prev + term
    return SymFunc(f.ell, "p", out)


def _adams_image(g: SymFunc, r: int) -> SymFunc:
    """p_r applied to g: multiply indices by r, substitute t -> t^r."""
    out = {}
    for mu, c in g.coeffs.items():
        out[tuple(r * m for m in mu)] = c.subst_t_power(r)
    return SymFunc(g.ell, "p", out)


def plethysm(f: SymFunc, g: SymFunc) -> SymFunc:
    """Plethystic substitution f[g]; both arguments in the power-sum basis."""
    _require_p(f)
    _require_p(g)
    result = SymFunc.zero(f.ell, "p")
    for lam, c in f.coeffs.items():
        term = SymFunc(f.ell, "p", {(): c})
        for r in lam:
            term = multiply(term, _adams_image(g, r))
        result = result + term
    return result


def scalar_product(f: SymFunc, g: SymFunc) -> RatFunc:
    """Bilinear form with <p_lam, p_mu> = z_lam * delta(lam, mu)."""
    fp = f.to_powersum()
    gp = g.to_powersum()
    total = RatFunc.zero(fp.ell)
    for lam, c in fp.coeffs.items():
        d = gp.coeffs.get(lam)
        if d is not None:
            total = total + (c * d).scale(centralizer_order(lam))
    return total


def littlewood_richardson(rhos, nu) -> int:
    """Coefficient of s_nu in the product of the s_rho over the tuple rhos.

    A size mismatch forces the coefficient to vanish, so 0 is returned.
    """
    rhos = tuple(check_partition(r) for r in rhos)
    nu = check_partition(nu)
    if sum(sum(r) for r in rhos) != sum(nu):
        return 0
    prod = SymFunc.one(1)
    for rho in rhos:
        prod = multiply(prod, schur_to_powersum(rho))
    c = powersum_to_schur(prod).coefficient(nu)
    return c.as_scalar().as_int()


def macdonald_tt(lam, m: int = 1, ell: int = 1) -> SymFunc:
    """The graded-character symmetric function
    hook_polynomial(lam, m) * s_lam[X / (1 - t^m)], in the power-sum basis.

    Its Schur coefficients are the q=t Kostka-Macdonald polynomials (with
    both parameters read in t^m).
    """
    lam = check_partition(lam)
    alphabet = SymFunc(
        ell,
        "p",
        {(1,): RatFunc(LaurentPoly.one(ell), LaurentPoly.one_minus_t(ell, m))},
    )
    g = plethysm(schur_to_powersum(lam, ell), alphabet)
    return g.scale(hook_polynomial(lam, m, ell))


def fake_degree(lam, ell: int = 1) -> LaurentPoly:
    """Graded multiplicity of the S_n-irreducible lam in the coinvariant
    algebra: t^b(lam) * prod_{i<=n} (1 - t^i) / hook_polynomial(lam)."""
    lam = check_partition(lam)
    n = sum(lam)
    num = LaurentPoly.t(ell, b_invariant(lam))
    for i in range(1, n + 1):
        num = num * LaurentPoly.one_minus_t(ell, i)
    return RatFunc(num, hook_polynomial(lam, 1, ell)).to_laurent()


def sn_dimension_check(lam) -> bool:
    """fake degree at t=1 equals the number of standard tableaux."""
    return fake_degree(lam).evaluate(1).as_int() == sn_dimension(lam)
