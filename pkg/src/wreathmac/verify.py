"""Identity-verification suites, shared by the CLI and the test suite.

Each suite returns a list of CheckResult; a failed result carries
counterexample data in `detail`.  Random inputs use a fixed seed so
repeated runs are byte-identical.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources

from .cherednik import (
    c_delta,
    c_l,
    coinvariant_hilbert,
    d_delta,
    group_order,
    verify_cd_factorization,
)
from .combinatorics import (
    b_invariant_multi,
    dual_multipartition,
    multipartitions_of,
    partitions_of,
    trivial_multipartition,
)
from .errors import InternalConsistencyError
from .matrices import GradedMatrix
from .render import matrix_from_json_dict, poly_from_json
from .scalars import LaurentPoly, RatFunc
from .symfunc import SymFunc, multiply, plethysm
from .wreath import (
    MultiSymFunc,
    basis_convert,
    fake_degree,
    get_char_table,
    hook_polynomial,
    kostka_tt_charsum,
    kostka_tt_matrix,
    lemma_z_identity,
    reduced_fake_degree,
    scalar_product,
)
from .scalars import Cyclotomic

SUITE_NAMES = (
    "b2",
    "plethysm",
    "isometry",
    "prop12",
    "kostka-dual-route",
    "dimensions",
    "hilbert",
    "lemma-z",
    "all",
)

_RNG_SEED = 248017


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


def _ok(name: str) -> CheckResult:
    return CheckResult(name, True)


def _fail(name: str, detail: str) -> CheckResult:
    return CheckResult(name, False, detail)


def _range_pairs(ell_max: int, n_max: int):
    for ell in range(1, ell_max + 1):
        for n in range(1, n_max + 1):
            yield ell, n


# ---------------------------------------------------------------------------


def load_b2_golden() -> dict:
    raw = json.loads(
        resources.files("wreathmac.data").joinpath("b2_golden.json").read_text()
    )
    order = tuple(tuple(tuple(p) for p in mp) for mp in raw["order"])
    tables = {}
    for kind in ("cdelta", "cl"):
        entries = tuple(
            tuple(poly_from_json(2, e) for e in row) for row in raw[kind]
        )
        tables[kind] = GradedMatrix(kind, 2, 2, order, order, entries)
    diag = [poly_from_json(2, e) for e in raw["ddelta"]]
    zero = LaurentPoly.zero(2)
    tables["ddelta"] = GradedMatrix(
        "ddelta",
        2,
        2,
        order,
        order,
        tuple(
            tuple(diag[i] if i == j else zero for j in range(len(order)))
            for i in range(len(order))
        ),
    )
    tables["kostka"] = GradedMatrix("kostka", 2, 2, order, order, tables["cl"].entries)
    return tables


def suite_b2(ell_max=None, n_max=None) -> list:
    golden = load_b2_golden()
    results = []
    computed = {
        "kostka": kostka_tt_matrix(2, 2, verify=True),
        "cdelta": c_delta(2, 2),
        "ddelta": d_delta(2, 2),
        "cl": c_l(2, 2),
    }
    for kind, matrix in computed.items():
        ref = golden[kind]
        if matrix.rows != ref.rows or matrix.cols != ref.cols:
            results.append(_fail(f"b2 {kind} ordering", f"{matrix.rows} vs {ref.rows}"))
        elif matrix.entries != ref.entries:
            bad = [
                (r, c)
                for r in range(len(ref.rows))
                for c in range(len(ref.cols))
                if matrix.entries[r][c] != ref.entries[r][c]
            ]
            results.append(_fail(f"b2 {kind} entries", f"mismatches at {bad}"))
        else:
            results.append(_ok(f"b2 {kind} matches the reference table"))
    if verify_cd_factorization(2, 2):
        results.append(_ok("b2 standard = diagonal * simple factorization"))
    else:
        results.append(_fail("b2 factorization", "C_Delta != D_Delta * C_L"))
    return results


# ---------------------------------------------------------------------------


def _random_symfunc(rng: random.Random, max_terms: int, max_deg: int) -> SymFunc:
    coeffs = {}
    pool = [lam for d in range(0, max_deg + 1) for lam in partitions_of(d)]
    for _ in range(rng.randint(1, max_terms)):
        lam = rng.choice(pool)
        num = Fraction(rng.randint(-3, 3))
        if num == 0:
            num = Fraction(1)
        shift = rng.randint(0, 2)
        coeffs[lam] = RatFunc.of(1, LaurentPoly.term(1, shift, num))
    return SymFunc(1, "p", coeffs)


def suite_plethysm(ell_max=None, n_max=None, rounds: int = 8) -> list:
    rng = random.Random(_RNG_SEED)
    results = []
    p = lambda lam: SymFunc.powersum(lam)
    # fixed sanity identities
    if plethysm(p((2,)), p((3,))) == p((6,)):
        results.append(_ok("p_2[p_3] = p_6"))
    else:
        results.append(_fail("p_2[p_3]", "composition of power sums failed"))
    zero = SymFunc.zero(1)
    one = SymFunc.one(1)
    if plethysm(p((4,)), zero) == zero and plethysm(p((4,)), one) == one:
        results.append(_ok("p_r[0] = 0 and p_r[1] = 1"))
    else:
        results.append(_fail("p_r on constants", "0/1 rules failed"))
    # monomial coefficient rule: p_r[c t^2 p_1 - (1/(1-t)) p_s]
    c = Fraction(5, 7)
    for r, s in ((2, 3), (3, 2)):
        inner = SymFunc(
            1,
            "p",
            {
                (1,): RatFunc.of(1, LaurentPoly.term(1, 2, c)),
                (s,): -RatFunc(LaurentPoly.one(1), LaurentPoly.one_minus_t(1, 1)),
            },
        )
        expected = SymFunc(
            1,
            "p",
            {
                (r,): RatFunc.of(1, LaurentPoly.term(1, 2 * r, c)),
                (s * r,): -RatFunc(LaurentPoly.one(1), LaurentPoly.one_minus_t(1, r)),
            },
        )
        if plethysm(p((r,)), inner) == expected:
            results.append(_ok(f"parameter monomials transform under p_{r}"))
        else:
            results.append(_fail(f"parameter rule r={r}", "t^k -> t^(rk) failed"))
    # randomized axioms
    for i in range(rounds):
        f = _random_symfunc(rng, 2, 2)
        g = _random_symfunc(rng, 2, 2)
        h = _random_symfunc(rng, 2, 2)
        if plethysm(plethysm(f, g), h) != plethysm(f, plethysm(g, h)):
            results.append(_fail("plethysm associativity", f"round {i}: {f!r}, {g!r}, {h!r}"))
            break
        p1 = p((1,))
        if plethysm(p1, f) != f or plethysm(f, p1) != f:
            results.append(_fail("plethysm identity", f"round {i}: {f!r}"))
            break
        r = rng.randint(1, 3)
        lhs = plethysm(p((r,)), multiply(f, g))
        rhs = multiply(plethysm(p((r,)), f), plethysm(p((r,)), g))
        if lhs != rhs:
            results.append(_fail("p_r multiplicativity", f"round {i}"))
            break
    else:
        results.append(_ok(f"plethysm axioms on {rounds} random inputs"))
    return results


# ---------------------------------------------------------------------------


def suite_isometry(ell_max: int = 3, n_max: int = 3) -> list:
    results = []
    for ell, n in _range_pairs(ell_max, n_max):
        table = get_char_table(ell, n)
        labels = multipartitions_of(ell, n)
        chars = {
            lam: basis_convert(
                MultiSymFunc(
                    ell,
                    "tw",
                    {
                        rho: RatFunc.of(ell, table.value(lam, rho)).scale(Fraction(1, z))
                        for rho, z in zip(table.classes, table.z)
                    },
                ),
                "s",
            )
            for lam in labels
        }
        for lam in labels:
            for mu in labels:
                got = scalar_product(chars[lam], chars[mu])
                want = RatFunc.one(ell) if lam == mu else RatFunc.zero(ell)
                if got != want:
                    results.append(
                        _fail(
                            f"isometry ell={ell} n={n}",
                            f"<ch {lam}, ch {mu}> = {got}",
                        )
                    )
                    return results
        results.append(_ok(f"characteristic map is an isometry at ell={ell}, n={n}"))
    return results


# ---------------------------------------------------------------------------


def suite_prop12(ell_max: int = 3, n_max: int = 3) -> list:
    results = []
    for ell, n in _range_pairs(ell_max, n_max):
        table = get_char_table(ell, n)
        labels = multipartitions_of(ell, n)
        kmatrix = kostka_tt_matrix(ell, n)
        for li, lam in enumerate(labels):
            hook_part = RatFunc.one(ell)
            for lamj in lam:
                hook_part = hook_part * RatFunc.of(ell, hook_polynomial(lamj, ell, ell))
            for rho in labels:
                lhs = RatFunc.zero(ell)
                for mj, mu in enumerate(labels):
                    lhs = lhs + RatFunc.of(ell, kmatrix.entries[li][mj]).scale(
                        table.value(mu, rho)
                    )
                rhs = hook_part
                for j, component in enumerate(rho):
                    for m in component:
                        rhs = rhs / RatFunc.of(
                            ell,
                            LaurentPoly(ell, {0: 1, m: -Cyclotomic.zeta(ell, j)}),
                        )
                rhs = rhs.scale(table.value(lam, rho))
                if lhs != rhs:
                    results.append(
                        _fail(
                            f"hook identity ell={ell} n={n}",
                            f"lam={lam}, rho={rho}: {lhs} vs {rhs}",
                        )
                    )
                    return results
        results.append(_ok(f"hook/character identity holds at ell={ell}, n={n}"))
        one = trivial_multipartition(ell, n)
        oi = labels.index(one)
        for mj, mu in enumerate(labels):
            if kmatrix.entries[oi][mj] != fake_degree(mu):
                results.append(
                    _fail(
                        f"trivial column ell={ell} n={n}",
                        f"K[{mu}, trivial] != fake degree",
                    )
                )
                return results
        results.append(_ok(f"K(mu, trivial) equals the fake degrees at ell={ell}, n={n}"))
    return results


# ---------------------------------------------------------------------------


def suite_dual_route(ell_max: int = 3, n_max: int = 3) -> list:
    results = []
    for ell, n in _range_pairs(ell_max, n_max):
        try:
            kostka_tt_matrix(ell, n, verify=True)
        except InternalConsistencyError as exc:
            results.append(_fail(f"dual route ell={ell} n={n}", str(exc)))
            return results
        results.append(_ok(f"plethystic and character-sum routes agree at ell={ell}, n={n}"))
    return results


# ---------------------------------------------------------------------------


def suite_dimensions(ell_max: int = 3, n_max: int = 3) -> list:
    results = []
    for ell, n in _range_pairs(ell_max, n_max):
        table = get_char_table(ell, n)
        labels = multipartitions_of(ell, n)
        kmatrix = kostka_tt_matrix(ell, n)
        order = group_order(ell, n)
        for li, lam in enumerate(labels):
            total = 0
            for mj, mu in enumerate(labels):
                total += kmatrix.entries[li][mj].evaluate(1).as_int() * table.dimension(mu)
            if total != order:
                results.append(
                    _fail(
                        f"dimension law ell={ell} n={n}",
                        f"simple {lam} has graded dimension {total}, expected {order}",
                    )
                )
                return results
        results.append(_ok(f"every simple has dimension {order} at ell={ell}, n={n}"))
    return results


# ---------------------------------------------------------------------------


def suite_hilbert(ell_max: int = 3, n_max: int = 4) -> list:
    results = []
    for ell, n in _range_pairs(ell_max, n_max):
        table = get_char_table(ell, n)
        total = LaurentPoly.zero(1)
        for lam in multipartitions_of(ell, n):
            total = total + fake_degree(lam).scale(table.dimension(lam))
        expected = coinvariant_hilbert(ell, n)
        if total != expected:
            results.append(
                _fail(
                    f"coinvariant series ell={ell} n={n}",
                    f"{total} vs {expected}",
                )
            )
            return results
        results.append(_ok(f"coinvariant Hilbert series matches at ell={ell}, n={n}"))
    return results


# ---------------------------------------------------------------------------


def suite_lemma_z(ell_max: int = 6, n_max=None) -> list:
    results = []
    for ell in range(1, ell_max + 1):
        if lemma_z_identity(ell):
            results.append(_ok(f"twisted-alphabet identity holds at ell={ell}"))
        else:
            results.append(_fail(f"twisted-alphabet identity ell={ell}", "formal check failed"))
            return results
    return results


# ---------------------------------------------------------------------------


_SUITES = {
    "b2": suite_b2,
    "plethysm": suite_plethysm,
    "isometry": suite_isometry,
    "prop12": suite_prop12,
    "kostka-dual-route": suite_dual_route,
    "dimensions": suite_dimensions,
    "hilbert": suite_hilbert,
    "lemma-z": suite_lemma_z,
}


def run_suite(name: str, ell_max=None, n_max=None) -> list:
    """Run one named suite (or "all"); unknown names raise KeyError."""
    if name == "all":
        out = []
        for key in _SUITES:
            out.extend(run_suite(key, ell_max, n_max))
        return out
    suite = _SUITES[name]
    kwargs = {}
    if ell_max is not None:
        kwargs["ell_max"] = ell_max
    if n_max is not None:
        kwargs["n_max"] = n_max
    return suite(**kwargs)
