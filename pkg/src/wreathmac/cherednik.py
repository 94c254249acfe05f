"""Graded decomposition matrices at generic parameters.

Rows are labelled by the standard/simple module, columns by the
W-irreducible.  The standard-module matrix is assembled from fake degrees
and tensor-product multiplicities; the standard-to-simple matrix is
diagonal with the reduced fake degrees; their exact quotient gives the
decomposition of simples into W-irreducibles.  Everything is exact; an
entry that fails to divide or to land in N[t] raises
InternalConsistencyError because the theory guarantees both.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .combinatorics import (
    b_invariant_multi,
    check_multipartition,
    msize,
    multipartitions_of,
)
from .errors import InternalConsistencyError
from .matrices import GradedMatrix
from .scalars import LaurentPoly, RatFunc
from .wreath import (
    MultiSymFunc,
    basis_convert,
    fake_degree,
    get_char_table,
    kostka_tt,
    reduced_fake_degree,
    wreath_macdonald_tt,
)


def kronecker(mu, lam, nu) -> int:
    """Multiplicity of nu inside mu tensor lam, as the character inner
    product sum_rho z_rho^{-1} chi^mu chi^lam conj(chi^nu)."""
    mu = check_multipartition(mu)
    lam = check_multipartition(lam)
    nu = check_multipartition(nu)
    if not (len(mu) == len(lam) == len(nu)) or not (msize(mu) == msize(lam) == msize(nu)):
        raise ValueError("tensor multiplicities need labels of equal shape")
    table = get_char_table(len(mu), msize(mu))
    total = None
    for rho, z in zip(table.classes, table.z):
        term = (
            table.value(mu, rho)
            * table.value(lam, rho)
            * table.value(nu, rho).conjugate()
            * Fraction(1, z)
        )
        total = term if total is None else total + term
    value = total.as_int()
    if value < 0:
        raise InternalConsistencyError(f"negative tensor multiplicity for {mu}, {lam}, {nu}")
    return value


@lru_cache(maxsize=None)
def _graded_regular_by_class(ell: int, n: int) -> tuple:
    """Per class, sum over mu of fake_degree(mu) * chi^mu(class): the class
    function of the coinvariant algebra."""
    table = get_char_table(ell, n)
    labels = multipartitions_of(ell, n)
    degrees = [fake_degree(mu) for mu in labels]
    out = []
    for k in range(len(table.classes)):
        acc = LaurentPoly.zero(ell)
        for i, mu in enumerate(labels):
            acc = acc + degrees[i].scale(table.row(mu)[k])
        out.append(acc)
    return tuple(out)


def c_delta(ell: int, n: int) -> GradedMatrix:
    """Standard modules in W-irreducibles: entry (lam, nu) is
    sum over mu of fake_degree(mu) * kronecker(mu, lam, nu)."""
    table = get_char_table(ell, n)
    labels = multipartitions_of(ell, n)
    regular = _graded_regular_by_class(ell, n)
    entries = []
    for lam in labels:
        row = []
        chi_lam = table.row(lam)
        for nu in labels:
            chi_nu = table.row(nu)
            acc = LaurentPoly.zero(ell)
            for k, z in enumerate(table.z):
                w = chi_lam[k] * chi_nu[k].conjugate() * Fraction(1, z)
                if not w.is_zero():
                    acc = acc + regular[k].scale(w)
            if not acc.is_rational_coeffs():
                raise InternalConsistencyError(f"entry ({lam}, {nu}) is not rational")
            row.append(acc)
        entries.append(tuple(row))
    return GradedMatrix("cdelta", ell, n, labels, labels, tuple(entries))


def d_delta(ell: int, n: int) -> GradedMatrix:
    """Diagonal matrix of reduced fake degrees (generic parameters)."""
    labels = multipartitions_of(ell, n)
    zero = LaurentPoly.zero(ell)
    entries = tuple(
        tuple(reduced_fake_degree(lam) if i == j else zero for j in range(len(labels)))
        for i, lam in enumerate(labels)
    )
    return GradedMatrix("ddelta", ell, n, labels, labels, entries)


def c_l(ell: int, n: int) -> GradedMatrix:
    """Simple modules in W-irreducibles: each row of the standard-module
    matrix divided exactly by the matching reduced fake degree."""
    cd = c_delta(ell, n)
    labels = cd.rows
    entries = []
    for i, lam in enumerate(labels):
        divisor = reduced_fake_degree(lam)
        row = []
        for j, entry in enumerate(cd.entries[i]):
            try:
                q = entry.divexact(divisor)
            except ValueError:
                raise InternalConsistencyError(
                    f"entry ({lam}, {labels[j]}) is not divisible by the reduced fake degree"
                ) from None
            _require_nonneg_int_poly(q, f"simple-decomposition entry ({lam}, {labels[j]})")
            row.append(q)
        entries.append(tuple(row))
    return GradedMatrix("cl", ell, n, labels, labels, tuple(entries))


def _require_nonneg_int_poly(p: LaurentPoly, context: str):
    for e, c in p.coeffs.items():
        if not c.is_rational():
            raise InternalConsistencyError(f"{context}: irrational coefficient at t^{e}")
        f = c.as_fraction()
        if f.denominator != 1 or f < 0 or e < 0:
            raise InternalConsistencyError(f"{context}: coefficient {f} at t^{e} not in N[t]")


@dataclass(frozen=True)
class GradedCharacter:
    """Graded character of a simple module: W-irreducible multiplicities,
    plus the same data as a multisymmetric function (the specialized wreath
    Macdonald polynomial shifted by t^b of the dual label)."""

    label: tuple
    multiplicities: dict = field(compare=False)
    symmetric_function: MultiSymFunc = field(compare=False)

    def dimension(self) -> int:
        """Total dimension at t = 1."""
        table = get_char_table(len(self.label), msize(self.label))
        total = 0
        for mu, poly in self.multiplicities.items():
            total += poly.evaluate(1).as_int() * table.dimension(mu)
        return total


def graded_character_simple(mlam) -> GradedCharacter:
    mlam = check_multipartition(mlam)
    ell, n = len(mlam), msize(mlam)
    mult = {mu: kostka_tt(mu, mlam) for mu in multipartitions_of(ell, n)}
    return GradedCharacter(mlam, mult, basis_convert(wreath_macdonald_tt(mlam), "s"))


def coinvariant_hilbert(ell: int, n: int) -> LaurentPoly:
    """Graded dimension of the coinvariant algebra:
    prod_{k=1..n} (1 - t^(k ell)) / (1 - t)."""
    out = RatFunc.one(1)
    for k in range(1, n + 1):
        out = out * RatFunc(LaurentPoly.one_minus_t(1, k * ell), LaurentPoly.one_minus_t(1, 1))
    return out.to_laurent()


def group_order(ell: int, n: int) -> int:
    return ell**n * factorial(n)


def verify_cd_factorization(ell: int, n: int) -> bool:
    """Exact check that the standard matrix equals the diagonal of reduced
    fake degrees times the simple matrix."""
    cd = c_delta(ell, n)
    dd = d_delta(ell, n)
    cl = c_l(ell, n)
    for i in range(len(cd.rows)):
        diag = dd.entries[i][i]
        for j in range(len(cd.cols)):
            if cd.entries[i][j] != diag * cl.entries[i][j]:
                return False
    return True


def check_b_is_trailing_degree(mlam) -> bool:
    """The fake degree's lowest exponent equals the combinatorial b-invariant."""
    return fake_degree(mlam).valuation() == b_invariant_multi(mlam)
