"""Multisymmetric functions for C_ell wr S_n: character tables, the
Frobenius characteristic, twisted power sums, graded simple characters,
and the t,t-Kostka coefficients by two independent routes.

The algebra is the ell-fold tensor power of the symmetric functions;
indices are ell-multipartitions.  Three bases are used:

* "p"  -- products of per-slot power sums (slot j of the index holds the
  degrees placed in tensor factor j);
* "tw" -- twisted power sums: for degree r and twist j the generator is
  the discrete-Fourier combination
      w_r^(j) = sum_i conj(zeta)^(i*j) * p_r^(i),
  which diagonalizes the cyclic-group action; the index collects degrees
  by twist;
* "s"  -- products of per-slot Schur functions (orthonormal, Hermitian).

A class function chi has Frobenius characteristic
sum_rho chi(rho)/z_rho * tw_rho, and the characteristic of the
irreducible labelled by a multipartition is exactly the matching "s"
basis element; the character table is computed from that statement by
basis conversion.  The scalar product conjugates cyclotomic scalars in
its second argument (t is untouched), so the characteristic map is an
isometry for the usual Hermitian inner product of characters.

Two routes to the Kostka coefficients are kept deliberately separate:
`wreath_macdonald_tt` expands the graded character plethystically through
the twisted alphabets Z^(p) = sum_i t^((i-p) mod ell) X^(i) and never
touches the wreath character table, while `kostka_tt_charsum` is a pure
character sum.  Their agreement is a strong end-to-end check, exposed via
``kostka_tt_matrix(..., verify=True)``.
"""

from __future__ import annotations

import itertools
import json
import threading
from fractions import Fraction
from pathlib import Path

from .combinatorics import (
    alpha_vector,
    b_invariant,
    centralizer_order,
    centralizer_order_wreath,
    check_multipartition,
    hook_polynomial,
    identity_class,
    msize,
    multipartitions_of,
    partitions_of,
)
from .errors import InternalConsistencyError
from .matrices import GradedMatrix
from .scalars import Cyclotomic, LaurentPoly, RatFunc
from .symfunc import _mn_char

_BASES = ("p", "tw", "s")


class MultiSymFunc:
    """Sparse multisymmetric function: multipartition -> RatFunc on a basis tag."""

    __slots__ = ("ell", "basis", "coeffs")

    def __init__(self, ell: int, basis: str, coeffs=None):
        if basis not in _BASES:
            raise ValueError(f"unknown basis {basis!r}")
        data = {}
        for idx, c in (coeffs or {}).items():
            if not isinstance(c, RatFunc):
                c = RatFunc.of(ell, c)
            if not c.is_zero():
                data[tuple(tuple(p) for p in idx)] = c
        self.ell = ell
        self.basis = basis
        self.coeffs = data

    @staticmethod
    def zero(ell: int, basis: str = "p") -> "MultiSymFunc":
        return MultiSymFunc(ell, basis)

    @staticmethod
    def one(ell: int, basis: str = "p") -> "MultiSymFunc":
        return MultiSymFunc(ell, basis, {((),) * ell: RatFunc.one(ell)})

    @staticmethod
    def basis_element(mlam, basis: str) -> "MultiSymFunc":
        mlam = check_multipartition(mlam)
        return MultiSymFunc(len(mlam), basis, {mlam: RatFunc.one(len(mlam))})

    def coefficient(self, mlam) -> RatFunc:
        return self.coeffs.get(tuple(tuple(p) for p in mlam), RatFunc.zero(self.ell))

    def support(self):
        return sorted(self.coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other):
        if not isinstance(other, MultiSymFunc):
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
        out = MultiSymFunc.__new__(MultiSymFunc)
        out.ell, out.basis, out.coeffs = self.ell, self.basis, data
        return out

    def __neg__(self):
        out = MultiSymFunc.__new__(MultiSymFunc)
        out.ell, out.basis = self.ell, self.basis
        out.coeffs = {idx: -c for idx, c in self.coeffs.items()}
        return out

    def __sub__(self, other):
        if not isinstance(other, MultiSymFunc):
            return NotImplemented
        return self + (-other)

    def scale(self, scalar) -> "MultiSymFunc":
        out = {}
        for idx, c in self.coeffs.items():
            v = c * scalar
            if not v.is_zero():
                out[idx] = v
        return MultiSymFunc(self.ell, self.basis, out)

    def __mul__(self, other):
        """Product; both factors must be in the "p" basis."""
        if not isinstance(other, MultiSymFunc):
            return NotImplemented
        if self.basis != "p" or other.basis != "p":
            raise ValueError("products require the per-slot power-sum basis")
        out: dict[tuple, RatFunc] = {}
        for a, ca in self.coeffs.items():
            for b, cb in other.coeffs.items():
                idx = tuple(
                    tuple(sorted(a[j] + b[j], reverse=True)) for j in range(self.ell)
                )
                term = ca * cb
                prev = out.get(idx)
                out[idx] = term if prev is None else prev + term
        return MultiSymFunc(self.ell, "p", out)

    def __eq__(self, other):
        if not isinstance(other, MultiSymFunc):
            return NotImplemented
        return self.basis == other.basis and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.basis, frozenset(self.coeffs.items())))

    def __repr__(self):
        body = ", ".join(f"{idx}: {c}" for idx, c in sorted(self.coeffs.items()))
        return f"MultiSymFunc({self.ell}, {self.basis!r}, {{{body}}})"


# ---------------------------------------------------------------------------
# basis conversions


def _empty_index(ell: int) -> tuple:
    return ((),) * ell


def _index_with_part(idx: tuple, slot: int, part: int) -> tuple:
    return tuple(
        tuple(sorted(component + (part,), reverse=True)) if j == slot else component
        for j, component in enumerate(idx)
    )


def _remap_slots(f: MultiSymFunc, weights, target_basis: str) -> MultiSymFunc:
    """Rewrite every generator: gen_r at slot a -> sum_b weights[a][b] gen_r at b."""
    ell = f.ell
    out: dict[tuple, RatFunc] = {}
    for idx, coeff in f.coeffs.items():
        gens = [(r, a) for a, component in enumerate(idx) for r in component]
        acc: dict[tuple, Cyclotomic] = {_empty_index(ell): Cyclotomic.of(ell, 1)}
        for r, a in gens:
            nxt: dict[tuple, Cyclotomic] = {}
            for partial, c in acc.items():
                for b in range(ell):
                    w = weights[a][b]
                    if w.is_zero():
                        continue
                    key = _index_with_part(partial, b, r)
                    prev = nxt.get(key)
                    term = c * w
                    nxt[key] = term if prev is None else prev + term
            acc = nxt
        for key, c in acc.items():
            if c.is_zero():
                continue
            term = coeff * c
            prev = out.get(key)
            total = term if prev is None else prev + term
            if total.is_zero():
                out.pop(key, None)
            else:
                out[key] = total
    return MultiSymFunc(ell, target_basis, out)


def _p_to_tw_weights(ell: int):
    inv = Fraction(1, ell)
    return [
        [Cyclotomic.zeta(ell, i * j) * inv for j in range(ell)] for i in range(ell)
    ]


def _tw_to_p_weights(ell: int):
    return [
        [Cyclotomic.zeta(ell, (-i * j) % ell) for i in range(ell)] for j in range(ell)
    ]


def _p_to_s(f: MultiSymFunc) -> MultiSymFunc:
    out: dict[tuple, RatFunc] = {}
    for idx, coeff in f.coeffs.items():
        options = []
        for nu in idx:
            opts = []
            for lam in partitions_of(sum(nu)):
                chi = _mn_char(lam, nu)
                if chi:
                    opts.append((lam, chi))
            options.append(opts)
        for combo in itertools.product(*options):
            weight = 1
            for _, chi in combo:
                weight *= chi
            key = tuple(lam for lam, _ in combo)
            term = coeff.scale(weight)
            prev = out.get(key)
            total = term if prev is None else prev + term
            if total.is_zero():
                out.pop(key, None)
            else:
                out[key] = total
    return MultiSymFunc(f.ell, "s", out)


def _s_to_p(f: MultiSymFunc) -> MultiSymFunc:
    out: dict[tuple, RatFunc] = {}
    for idx, coeff in f.coeffs.items():
        options = []
        for lam in idx:
            opts = []
            for nu in partitions_of(sum(lam)):
                chi = _mn_char(lam, nu)
                if chi:
                    opts.append((nu, Fraction(chi, centralizer_order(nu))))
            options.append(opts)
        for combo in itertools.product(*options):
            weight = Fraction(1)
            for _, w in combo:
                weight *= w
            key = tuple(nu for nu, _ in combo)
            term = coeff.scale(weight)
            prev = out.get(key)
            total = term if prev is None else prev + term
            if total.is_zero():
                out.pop(key, None)
            else:
                out[key] = total
    return MultiSymFunc(f.ell, "p", out)


def basis_convert(f: MultiSymFunc, target: str) -> MultiSymFunc:
    """Exact conversion among the "p", "tw", and "s" bases."""
    if target not in _BASES:
        raise ValueError(f"unknown basis {target!r}")
    if f.basis == target:
        return f
    if f.basis == "s":
        f = _s_to_p(f)
    elif f.basis == "tw":
        f = _remap_slots(f, _tw_to_p_weights(f.ell), "p")
    if target == "p":
        return f
    if target == "tw":
        return _remap_slots(f, _p_to_tw_weights(f.ell), "tw")
    return _p_to_s(f)


def scalar_product(f: MultiSymFunc, g: MultiSymFunc) -> RatFunc:
    """Hermitian product with the multi-Schur basis orthonormal; cyclotomic
    scalars of the second argument are conjugated, t is untouched."""
    fs = basis_convert(f, "s")
    gs = basis_convert(g, "s")
    total = RatFunc.zero(fs.ell)
    for idx, c in fs.coeffs.items():
        d = gs.coeffs.get(idx)
        if d is None:
            continue
        dbar = RatFunc(d.num.conjugate_coeffs(), d.den.conjugate_coeffs())
        total = total + c * dbar
    return total


# ---------------------------------------------------------------------------
# character tables


class WreathCharTable:
    """Character table of C_ell wr S_n.

    Rows are irreducible labels, columns are class labels; both run through
    ``multipartitions_of(ell, n)`` in order.  Values are cyclotomic
    integers; `z` holds the centralizer order of each class.
    """

    __slots__ = ("ell", "n", "classes", "z", "irreducibles", "values", "_index")

    def __init__(self, ell, n, classes, z, irreducibles, values):
        self.ell = ell
        self.n = n
        self.classes = tuple(classes)
        self.z = tuple(z)
        self.irreducibles = tuple(irreducibles)
        self.values = tuple(tuple(row) for row in values)
        self._index = {mp: i for i, mp in enumerate(self.classes)}

    def value(self, lam, rho) -> Cyclotomic:
        lam = tuple(tuple(p) for p in lam)
        rho = tuple(tuple(p) for p in rho)
        if msize(lam) != msize(rho):
            raise ValueError("character and class have different sizes")
        return self.values[self._index[lam]][self._index[rho]]

    def row(self, lam) -> tuple:
        return self.values[self._index[tuple(tuple(p) for p in lam)]]

    def dimension(self, lam) -> int:
        return self.value(lam, identity_class(self.ell, self.n)).as_int()

    # -- serialization (documented cache layout) ------------------------------

    def to_json_dict(self) -> dict:
        return {
            "ell": self.ell,
            "n": self.n,
            "classes": [
                {"multipartition": [list(p) for p in mp], "z": z}
                for mp, z in zip(self.classes, self.z)
            ],
            "irreducibles": [[list(p) for p in mp] for mp in self.irreducibles],
            "values": [
                [[str(c) for c in value.coeffs] for value in row]
                for row in self.values
            ],
        }

    @staticmethod
    def from_json_dict(data: dict) -> "WreathCharTable":
        ell = int(data["ell"])
        n = int(data["n"])
        classes = tuple(
            tuple(tuple(int(x) for x in p) for p in entry["multipartition"])
            for entry in data["classes"]
        )
        z = tuple(int(entry["z"]) for entry in data["classes"])
        irreducibles = tuple(
            tuple(tuple(int(x) for x in p) for p in mp) for mp in data["irreducibles"]
        )
        values = tuple(
            tuple(Cyclotomic(ell, tuple(Fraction(c) for c in vec)) for vec in row)
            for row in data["values"]
        )
        return WreathCharTable(ell, n, classes, z, irreducibles, values)


def build_char_table(ell: int, n: int) -> WreathCharTable:
    """Compute the table by expanding each multi-Schur basis element in the
    twisted power-sum basis; the value at a class is z times the twisted
    coefficient there."""
    classes = multipartitions_of(ell, n)
    z = tuple(centralizer_order_wreath(rho) for rho in classes)
    values = []
    for lam in classes:
        tw = basis_convert(MultiSymFunc.basis_element(lam, "s"), "tw")
        row = []
        for rho, zr in zip(classes, z):
            val = tw.coefficient(rho).scale(zr).as_scalar()
            if not _is_cyclotomic_integer(val):
                raise InternalConsistencyError(
                    f"character value at {lam}, {rho} is not a cyclotomic integer: {val}"
                )
            row.append(val)
        values.append(tuple(row))
    return WreathCharTable(ell, n, classes, z, classes, values)


def _is_cyclotomic_integer(value: Cyclotomic) -> bool:
    return all(c.denominator == 1 for c in value.coeffs)


_tables_lock = threading.Lock()
_tables: dict[tuple, WreathCharTable] = {}


def cache_file_name(ell: int, n: int) -> str:
    return f"char_table_ell{ell}_n{n}.json"


def get_char_table(ell: int, n: int, cache_dir=None) -> WreathCharTable:
    """Memoized character table; `cache_dir` adds a JSON disk cache that is
    an optimization only and never changes results."""
    key = (ell, n)
    with _tables_lock:
        table = _tables.get(key)
    if table is not None:
        return table
    path = None
    if cache_dir is not None:
        path = Path(cache_dir) / cache_file_name(ell, n)
        if path.is_file():
            table = WreathCharTable.from_json_dict(json.loads(path.read_text()))
    if table is None:
        table = build_char_table(ell, n)
        if path is not None:
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(json.dumps(table.to_json_dict(), indent=1))
    with _tables_lock:
        table = _tables.setdefault(key, table)
    return table


def wreath_character(lam, rho) -> Cyclotomic:
    """Irreducible character value of C_ell wr S_n at the class rho."""
    lam = check_multipartition(lam)
    rho = check_multipartition(rho)
    if len(lam) != len(rho):
        raise ValueError("labels have different numbers of components")
    if msize(lam) != msize(rho):
        raise ValueError("character and class have different sizes")
    return get_char_table(len(lam), msize(lam)).value(lam, rho)


def wreath_frobenius(chi, ell: int, n: int) -> MultiSymFunc:
    """Frobenius characteristic of a class function, in the twisted basis.

    `chi` maps every class multipartition to a value (Cyclotomic, Fraction,
    or int)."""
    coeffs = {}
    for rho in multipartitions_of(ell, n):
        try:
            v = chi[rho]
        except KeyError:
            raise ValueError(f"class function undefined at class {rho}") from None
        c = RatFunc.of(ell, Cyclotomic.of(ell, v)).scale(
            Fraction(1, centralizer_order_wreath(rho))
        )
        if not c.is_zero():
            coeffs[rho] = c
    return MultiSymFunc(ell, "tw", coeffs)


def wreath_dimension_from_table(mlam) -> int:
    mlam = check_multipartition(mlam)
    return get_char_table(len(mlam), msize(mlam)).dimension(mlam)


# ---------------------------------------------------------------------------
# twist matrices and their formal identity


class TwistMatrices:
    """T = (zeta^(i j)) and D = diag((1 - t^ell)/(1 - zeta^j t))."""

    __slots__ = ("ell", "T", "D")

    def __init__(self, ell: int):
        self.ell = ell
        self.T = tuple(
            tuple(Cyclotomic.zeta(ell, i * j) for j in range(ell)) for i in range(ell)
        )
        one_minus_tl = LaurentPoly.one_minus_t(ell, ell)
        self.D = tuple(
            RatFunc(
                one_minus_tl,
                LaurentPoly(ell, {0: 1, 1: -Cyclotomic.zeta(ell, j)}),
            )
            for j in range(ell)
        )

    def t_times_conj_t_is_scalar(self) -> bool:
        """T * conj(T) = ell * identity (row orthogonality for C_ell)."""
        ell = self.ell
        for i in range(ell):
            for k in range(ell):
                total = Cyclotomic.of(ell, 0)
                for j in range(ell):
                    total = total + self.T[i][j] * self.T[j][k].conjugate()
                expected = Cyclotomic.of(ell, ell if i == k else 0)
                if total != expected:
                    return False
        return True


def twist_matrices(ell: int) -> TwistMatrices:
    return TwistMatrices(ell)


def lemma_z_identity(ell: int, max_degree: int = 3) -> bool:
    """Formal check, per generator degree r, that conjugate-twisting the
    substituted alphabets Z^(p) = sum_i t^((i-p) mod ell) X^(i) equals
    applying D to the conjugate-twisted plain alphabets.

    Reduces to the scalar identity, for all slots i, j:
        sum_p conj(zeta)^(j p) t^(r((i-p) mod ell))
            = conj(zeta)^(i j) (1 - t^(r ell)) / (1 - zeta^j t^r).
    """
    tm = TwistMatrices(ell)
    for r in range(1, max_degree + 1):
        for i in range(ell):
            for j in range(ell):
                lhs = RatFunc.zero(ell)
                for p in range(ell):
                    coeff = Cyclotomic.zeta(ell, (-j * p) % ell)
                    expo = r * ((i - p) % ell)
                    lhs = lhs + RatFunc.of(ell, LaurentPoly.term(ell, expo, coeff))
                rhs = tm.D[j].subst_t_power(r).scale(Cyclotomic.zeta(ell, (-i * j) % ell))
                if lhs != rhs:
                    return False
    return True


# ---------------------------------------------------------------------------
# graded simple characters (specialized wreath Macdonald polynomials)


_mac_lock = threading.Lock()
_mac_cache: dict[tuple, MultiSymFunc] = {}


def wreath_macdonald_tt(mlam) -> MultiSymFunc:
    """Graded character of the simple module labelled mlam, as a
    multisymmetric function in the "p" basis.

    Computed plethystically: the product over slots j of
    hook_polynomial(lam^(j))(t^ell) * s_{lam^(j)}[Z^(j) / (1 - t^ell)],
    where p_r[Z^(j)] = sum_i t^(r((i-j) mod ell)) p_r^(i).  Equals
    t^(b of the dual label) times the wreath Macdonald polynomial at
    (q, t) -> (t, 1/t).
    """
    mlam = check_multipartition(mlam)
    with _mac_lock:
        cached = _mac_cache.get(mlam)
    if cached is not None:
        return cached
    ell = len(mlam)
    result = MultiSymFunc.one(ell, "p")
    for j, lamj in enumerate(mlam):
        result = result * _slot_factor(ell, j, lamj)
    with _mac_lock:
        result = _mac_cache.setdefault(mlam, result)
    return result


def _slot_factor(ell: int, j: int, lamj: tuple) -> MultiSymFunc:
    k = sum(lamj)
    hook = hook_polynomial(lamj, ell, ell)
    out: dict[tuple, RatFunc] = {}
    for nu in partitions_of(k):
        chi = _mn_char(lamj, nu)
        if not chi:
            continue
        den = LaurentPoly.one(ell)
        for d in nu:
            den = den * LaurentPoly.one_minus_t(ell, ell * d)
        base = RatFunc(hook.scale(Fraction(chi, centralizer_order(nu))), den)
        for assignment in itertools.product(range(ell), repeat=len(nu)):
            shift = sum(d * ((i - j) % ell) for d, i in zip(nu, assignment))
            idx = _empty_index(ell)
            for d, i in zip(nu, assignment):
                idx = _index_with_part(idx, i, d)
            term = base * LaurentPoly.t(ell, shift) if shift else base
            prev = out.get(idx)
            total = term if prev is None else prev + term
            if total.is_zero():
                out.pop(idx, None)
            else:
                out[idx] = total
    return MultiSymFunc(ell, "p", out)


# ---------------------------------------------------------------------------
# Kostka coefficients


def _ratfunc_to_poly(c: RatFunc, context: str) -> LaurentPoly:
    if not c.is_polynomial():
        raise InternalConsistencyError(f"{context}: {c} did not normalize to a polynomial")
    p = c.to_laurent()
    if not p.is_rational_coeffs():
        raise InternalConsistencyError(f"{context}: {p} has irrational coefficients")
    return p


_kostka_lock = threading.Lock()
_kostka_cache: dict[tuple, dict] = {}


def _kostka_column(mlam) -> dict:
    ell, n = len(mlam), msize(mlam)
    schur = basis_convert(wreath_macdonald_tt(mlam), "s")
    labels = set(multipartitions_of(ell, n))
    if not set(schur.coeffs) <= labels:
        raise InternalConsistencyError(
            f"graded character of {mlam} has Schur support outside degree {n}"
        )
    return {
        mu: _ratfunc_to_poly(schur.coefficient(mu), f"K[{mu}, {mlam}]")
        for mu in multipartitions_of(ell, n)
    }


def _kostka_columns(ell: int, n: int, parallel: bool = False) -> dict:
    key = (ell, n)
    with _kostka_lock:
        cols = _kostka_cache.get(key)
    if cols is not None:
        return cols
    labels = multipartitions_of(ell, n)
    if parallel:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor() as pool:
            computed = list(pool.map(_kostka_column, labels))
        cols = dict(zip(labels, computed))
    else:
        cols = {lam: _kostka_column(lam) for lam in labels}
    with _kostka_lock:
        cols = _kostka_cache.setdefault(key, cols)
    return cols


def kostka_tt(mu, lam) -> LaurentPoly:
    """t,t-Kostka coefficient: the multi-Schur coefficient of mu in the
    graded character of the simple module labelled lam."""
    mu = check_multipartition(mu)
    lam = check_multipartition(lam)
    if len(mu) != len(lam) or msize(mu) != msize(lam):
        raise ValueError(f"incompatible labels {mu} and {lam}")
    return _kostka_columns(len(lam), msize(lam))[lam][mu]


# -- second, independent route: the closed character sum ----------------------


_class_lock = threading.Lock()
_class_cache: dict[tuple, tuple] = {}


def _class_data(ell: int, n: int):
    """Per class rho, the polynomial
    prod_k (1 - t^(k ell)) / prod_{j,i} (1 - zeta^j t^(rho^(j)_i)),
    which is exact by matching each factor to a distinct k."""
    key = (ell, n)
    with _class_lock:
        data = _class_cache.get(key)
    if data is not None:
        return data
    full = LaurentPoly.one(ell)
    for k in range(1, n + 1):
        full = full * LaurentPoly.one_minus_t(ell, k * ell)
    polys = []
    for rho in multipartitions_of(ell, n):
        p = full
        for j, component in enumerate(rho):
            for m in component:
                factor = LaurentPoly(ell, {0: 1, m: -Cyclotomic.zeta(ell, j)})
                p = p.divexact(factor)
        polys.append(p)
    data = (full, tuple(polys))
    with _class_lock:
        data = _class_cache.setdefault(key, data)
    return data


def kostka_tt_charsum(mu, lam) -> LaurentPoly:
    """The same coefficient as `kostka_tt`, by the closed character sum
    sum_rho z_rho^{-1} * prod_j (H_{lam^(j)}(t^ell)
        * prod_i (1 - zeta^j t^(rho^(j)_i))^{-1}) * chi^lam_rho
        * conj(chi^mu_rho).

    Shares no symmetric-function code with the plethystic route."""
    mu = check_multipartition(mu)
    lam = check_multipartition(lam)
    if len(mu) != len(lam) or msize(mu) != msize(lam):
        raise ValueError(f"incompatible labels {mu} and {lam}")
    ell, n = len(lam), msize(lam)
    table = get_char_table(ell, n)
    full, polys = _class_data(ell, n)
    acc = LaurentPoly.zero(ell)
    for rho, z, e_rho in zip(table.classes, table.z, polys):
        w = table.value(lam, rho) * table.value(mu, rho).conjugate()
        if w.is_zero():
            continue
        acc = acc + e_rho.scale(w * Fraction(1, z))
    hooks = LaurentPoly.one(ell)
    for lamj in lam:
        hooks = hooks * hook_polynomial(lamj, ell, ell)
    result = (acc * hooks).divexact(full)
    if not result.is_rational_coeffs():
        raise InternalConsistencyError(
            f"character-sum Kostka K[{mu}, {lam}] has irrational coefficients"
        )
    return result


def kostka_tt_matrix(
    ell: int, n: int, verify: bool = False, parallel: bool = False
) -> GradedMatrix:
    """Full Kostka matrix; rows are simple labels, columns W-irreducible
    labels, entry (lam, mu) = K(mu, lam).

    With ``verify=True`` every entry is recomputed through the character
    sum and a mismatch raises InternalConsistencyError.
    """
    labels = multipartitions_of(ell, n)
    cols = _kostka_columns(ell, n, parallel=parallel)
    if verify:
        for lam in labels:
            for mu in labels:
                other = kostka_tt_charsum(mu, lam)
                if cols[lam][mu] != other:
                    raise InternalConsistencyError(
                        f"Kostka routes disagree at K[{mu}, {lam}]: "
                        f"{cols[lam][mu]} vs {other}"
                    )
    entries = tuple(tuple(cols[lam][mu] for mu in labels) for lam in labels)
    return GradedMatrix("kostka", ell, n, labels, labels, entries)


# ---------------------------------------------------------------------------
# fake degrees


def fake_degree(mlam) -> LaurentPoly:
    """Graded multiplicity of the irreducible mlam in the coinvariant
    algebra of C_ell wr S_n:
    t^b(alpha) * prod_k (1 - t^(k ell)) * prod_j t^(ell b(lam^(j)))
        / H_{lam^(j)}(t^ell)."""
    mlam = check_multipartition(mlam)
    ell, n = len(mlam), msize(mlam)
    num = LaurentPoly.t(ell, b_invariant(alpha_vector(mlam)))
    for k in range(1, n + 1):
        num = num * LaurentPoly.one_minus_t(ell, k * ell)
    den = LaurentPoly.one(ell)
    for lamj in mlam:
        num = num.shift(ell * b_invariant(lamj))
        den = den * hook_polynomial(lamj, ell, ell)
    return RatFunc(num, den).to_laurent()


def reduced_fake_degree(mlam) -> LaurentPoly:
    """fake_degree shifted so its trailing term is the constant 1."""
    f = fake_degree(mlam)
    return f.shift(-f.valuation())
