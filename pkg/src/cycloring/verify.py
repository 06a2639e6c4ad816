"""Named property suites over one modulus, for the CLI verify command.

Each check pairs a computed quantity with an independent route to the same
value (closed form vs direct reduction, construction vs Bezout oracle,
matrix recurrence vs long division) and reports pass/fail with witness data
on failure. Checks are wrapped so an exception inside one check fails that
check by name instead of aborting the run. Randomized checks draw from one
seeded generator, so a report is reproducible given (seed, trials).
"""
from __future__ import annotations

import json
import time
from dataclasses import dataclass

import numpy as np

from . import cyclotomic, expansion, scaled_inverse, structure
from .cyclotomic import PrimePower, TwoPrime, make_modulus
from .poly import IntPoly

DEFAULT_SEED = 1729
DEFAULT_TRIALS = 1000
SUITE_NAMES = ("lemmas", "theorems", "matrix", "expansion")


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    witness: str | None = None


@dataclass(frozen=True)
class SuiteResult:
    name: str
    checks: tuple[CheckResult, ...]
    seconds: float


@dataclass(frozen=True)
class VerifyReport:
    M: int
    seed: int
    trials: int
    suites: tuple[SuiteResult, ...]

    @property
    def passed(self) -> int:
        return sum(c.passed for s in self.suites for c in s.checks)

    @property
    def failed(self) -> int:
        return sum(not c.passed for s in self.suites for c in s.checks)

    @property
    def all_passed(self) -> bool:
        return self.failed == 0

    def to_json_obj(self) -> dict:
        return {
            "M": self.M,
            "seed": self.seed,
            "trials": self.trials,
            "suites": [
                {
                    "name": s.name,
                    "seconds": round(s.seconds, 6),
                    "checks": [
                        {"name": c.name,
                         "status": "pass" if c.passed else "fail",
                         **({"witness": c.witness} if c.witness else {})}
                        for c in s.checks
                    ],
                }
                for s in self.suites
            ],
            "totals": {"passed": self.passed, "failed": self.failed},
            "ok": self.all_passed,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), indent=2)


class _Collector:
    def __init__(self):
        self.results = []

    def run(self, name, fn):
        try:
            witness = fn()
        except Exception as exc:  # a failed check, not a crashed run
            self.results.append(CheckResult(name, False, f"{type(exc).__name__}: {exc}"))
            return
        if witness is None or witness is True:
            self.results.append(CheckResult(name, True))
        elif witness is False:
            self.results.append(CheckResult(name, False, "predicate returned false"))
        else:
            self.results.append(CheckResult(name, False, str(witness)))


def _expected_case(m, i, j):
    sh = m.shape
    if isinstance(sh, PrimePower):
        return scaled_inverse.InverseCase.PRIME_POWER, sh.p, sh.p - 1
    k = i - j
    if k % sh.p ** sh.s == 0:
        return scaled_inverse.InverseCase.P_DIVIDES_SHIFT, sh.q, sh.q - 1
    if k % sh.q ** sh.t == 0:
        return scaled_inverse.InverseCase.Q_DIVIDES_SHIFT, sh.p, sh.p - 1
    return scaled_inverse.InverseCase.COPRIME, 1, sh.p - 1


# ---------------------------------------------------------------- lemmas


def _suite_lemmas(m, rng, trials):
    col = _Collector()
    sh = m.shape

    if isinstance(sh, PrimePower):
        p, s = sh.p, sh.s
        col.run("value_at_one",
                lambda: m.poly.evaluate(1) == p)
        col.run("inflation_form",
                lambda: m.poly == IntPoly((1,) * p).inflate(p ** (s - 1)))
        if s > 1:
            col.run("kronecker_factorization",
                    lambda: cyclotomic.kron_check(m))
        return col.results

    p, q = sh.p, sh.q
    rad = make_modulus(p * q)
    phi = rad.phi

    col.run("value_at_one",
            lambda: rad.poly.evaluate(1) == 1 and m.poly.evaluate(1) == 1)
    col.run("palindrome",
            lambda: rad.poly.rev() == rad.poly and m.poly.rev() == m.poly)

    def quotient_bits():
        structure.diff_quotient_coeffs(p, q)
        return True

    col.run("quotient_bits_match_diophantine", quotient_bits)
    col.run("quotient_bits_multiples_of_p",
            lambda: all(structure.diff_quotient_coeffs(p, q)[0][t * p] == 0
                        for t in range(phi // p + 1) if t * p < phi))
    col.run("quotient_bits_below_q",
            lambda: all((structure.diff_quotient_coeffs(p, q)[0][i] == 0)
                        == (i % p == 0) for i in range(min(q, phi))))
    col.run("solvable_above_phi",
            lambda: all(structure.solvable_table(p, q).solvable[i]
                        for i in range(phi, p * q)))
    col.run("quotient_bits_complement",
            lambda: all(structure.diff_quotient_coeffs(p, q)[0][i]
                        + structure.diff_quotient_coeffs(p, q)[0][phi - 1 - i] == 1
                        for i in range(phi)))

    def tail_forms():
        for k in range(q):
            structure.high_monomial_form(k, p, q)
        return True

    col.run("tail_columns_closed_form", tail_forms)
    col.run("tail_columns_norm_one",
            lambda: all(cyclotomic.monomial_reduce(phi + k, rad).max_norm() == 1
                        for k in range(p)))
    col.run("tail_row_signs",
            lambda: all(cyclotomic.monomial_reduce(phi + k, rad).coeffs[0] == -1
                        and cyclotomic.monomial_reduce(phi + k, rad).coeffs[phi - 1] == 1
                        for k in range(p - 1)))
    col.run("rev_rotation_columns",
            lambda: structure.rev_symmetry_check(p, q))
    col.run("stride_sum_zero",
            lambda: all(structure.column_family_sum(j, rad).is_zero()
                        for j in range(p)))

    def patterns():
        for j in range(p):
            structure.residue_class_pattern(j, rad)
        return True

    col.run("stride_pattern_classes", patterns)
    col.run("stride_subset_norm",
            lambda: all(structure.random_subset_norm_check(j, rad, trials, rng)
                        for j in range(p)))
    if m.inflation > 1:
        col.run("inflated_subset_norm",
                lambda: structure.inflated_pattern_check(
                    m, max(10, trials // 10), rng))
        col.run("kronecker_factorization",
                lambda: cyclotomic.kron_check(m))
    return col.results


# ---------------------------------------------------------------- matrix


def _suite_matrix(m, rng, trials):
    col = _Collector()
    R = cyclotomic.reduction_matrix(m)

    def long_division_agrees():
        for k in range(m.M):
            direct = cyclotomic.reduce(IntPoly.monomial(k), m)
            if cyclotomic.monomial_reduce(k, m) != direct:
                return f"column {k} disagrees with long division"
        return True

    col.run("columns_match_long_division", long_division_agrees)
    col.run("identity_block",
            lambda: all(R.column(j) == tuple(1 if i == j else 0
                                             for i in range(m.phi))
                        for j in range(m.phi)))
    col.run("entry_range",
            lambda: int(np.abs(np.asarray(R.entries, dtype=np.int64)).max()) <= 1)
    col.run("negative_exponent_wraparound",
            lambda: cyclotomic.monomial_reduce(-1, m)
            == cyclotomic.monomial_reduce(m.M - 1, m)
            and cyclotomic.monomial_reduce(m.M, m)
            == cyclotomic.monomial_reduce(0, m))

    sh = m.shape
    if R.blocks is not None:
        p, q = sh.p, sh.q

        def band_columns():
            lo, hi = R.blocks.b2
            for c in range(lo, hi):
                k = c - m.phi
                want = structure.band_form(k, p, q)
                got = cyclotomic.monomial_reduce(c, m).to_poly()
                if want != got:
                    return f"band column {c} mismatch"
            return True

        col.run("block_band_columns", band_columns)

        def rotation_blocks():
            lo1, _ = R.blocks.b1
            lo3, hi3 = R.blocks.b3
            for k in range(hi3 - lo3):
                left = R.column(lo1 + k)
                right = R.column(m.M - 1 - k)
                if tuple(reversed(left)) != right:
                    return f"b3 column {m.M - 1 - k} is not the rotation of b1"
            return True

        col.run("block_rotation", rotation_blocks)

    def json_roundtrip():
        obj = json.loads(R.to_json())
        back = np.array(obj["entries"], dtype=np.int64)
        return (obj["M"] == m.M and obj["phi"] == m.phi
                and np.array_equal(back, np.asarray(R.entries, dtype=np.int64)))

    col.run("json_roundtrip", json_roundtrip)

    def csv_roundtrip():
        rows = [[int(v) for v in line.split(",")]
                for line in R.to_csv().splitlines()]
        return np.array_equal(np.array(rows, dtype=np.int64),
                              np.asarray(R.entries, dtype=np.int64))

    col.run("csv_roundtrip", csv_roundtrip)
    return col.results


# ---------------------------------------------------------------- theorems


def _suite_theorems(m, rng, trials):
    col = _Collector()
    sh = m.shape

    def exhaustive():
        for i in range(1, m.M):
            for j in range(i):
                si = scaled_inverse.construct_scaled_inverse(i, j, m)
                case, scale, bound = _expected_case(m, i, j)
                if si.case != case or si.scale != scale:
                    return f"(i,j)=({i},{j}): case {si.case} scale {si.scale}"
                if si.norm > bound:
                    return f"(i,j)=({i},{j}): norm {si.norm} > bound {bound}"
        return True

    col.run("construction_exhaustive", exhaustive)

    if isinstance(sh, PrimePower):
        def tightness():
            si = scaled_inverse.scaled_inverse_prime_power(1, 0, m)
            return si.norm == sh.p - 1 and si.u.coeffs[0] == -(sh.p - 1)

        col.run("tightness_at_unit_gap", tightness)
    else:
        def near_tight():
            p = sh.p
            i = m.inflation * (p - 1)
            j = m.inflation * (p - 2)
            si = scaled_inverse.scaled_inverse_two_prime(i, j, m)
            alt = scaled_inverse.alternative_coprime_form(m)
            alt_vec = list(alt.coeffs) + [0] * (m.phi - len(alt.coeffs))
            const = alt.coeffs[0] if alt.coeffs else 0
            if const != -(p - 2):
                return f"alternative form constant {const} != -(p-2)"
            if si.norm < p - 2:
                return f"norm {si.norm} below p-2"
            if tuple(alt_vec) != si.u.coeffs:
                return "alternative form differs from constructed inverse"
            return True

        col.run("near_tight_witness", near_tight)

    def minimality():
        profile = scaled_inverse.norm_profile(m)
        for row in profile.flagged:
            gen = scaled_inverse.generic_scaled_inverse(
                cyclotomic.monomial_diff(row.i, row.j, m))
            if gen.scale == row.scale:
                return (f"(i,j)=({row.i},{row.j}) flagged non-minimal but "
                        f"generic scale agrees")
        return True

    col.run("scale_minimality", minimality)

    def bezout_sampled():
        pairs = [(i, j) for i in range(1, m.M) for j in range(i)]
        count = min(len(pairs), max(8, trials // 100))
        idx = rng.choice(len(pairs), size=count, replace=False)
        for n in idx:
            i, j = pairs[int(n)]
            con = scaled_inverse.construct_scaled_inverse(i, j, m)
            gen = scaled_inverse.generic_scaled_inverse(
                cyclotomic.monomial_diff(i, j, m))
            if con.scale % gen.scale:
                return f"(i,j)=({i},{j}): scales {con.scale} vs {gen.scale}"
            ratio = con.scale // gen.scale
            if con.u != ratio * gen.u:
                return f"(i,j)=({i},{j}): residues not proportional"
        return True

    col.run("bezout_agreement_sampled", bezout_sampled)
    return col.results


# ---------------------------------------------------------------- expansion


def _suite_expansion(m, rng, trials):
    col = _Collector()

    def closed_form():
        report = expansion.max_expansion_factor(m)
        sh = m.shape
        if isinstance(sh, TwoPrime) and report.max_factor > 2 * sh.p:
            return f"max factor {report.max_factor} above the 2p row bound"
        return True

    col.run("factor_closed_form", closed_form)

    def witness_attains():
        report = expansion.max_expansion_factor(m)
        factor, _ = expansion.monomial_expansion_factor(report.witness_k, m)
        return factor == report.max_factor

    col.run("witness_attains_max", witness_attains)

    def randomized():
        ks = {int(k) for k in rng.integers(0, m.M, size=7)}
        ks.add(expansion.max_expansion_factor(m).witness_k)
        per_k = max(1, trials // len(ks))
        seed = int(rng.integers(0, 2 ** 31))
        return all(expansion.randomized_expansion_check(k, m, per_k, seed)
                   for k in ks)

    col.run("randomized_never_exceeds", randomized)

    if m.inflation > 1:
        def inflation_consistency():
            rad = make_modulus(m.radical)
            for k in range(rad.M):
                fr, _ = expansion.monomial_expansion_factor(k, rad)
                fm, _ = expansion.monomial_expansion_factor(k * m.inflation, m)
                if fr != fm:
                    return f"factor mismatch at k={k}"
            return True

        col.run("inflation_consistency", inflation_consistency)
    return col.results


_SUITES = {
    "lemmas": _suite_lemmas,
    "theorems": _suite_theorems,
    "matrix": _suite_matrix,
    "expansion": _suite_expansion,
}


def run_verify(M: int, suite: str = "all", trials: int = DEFAULT_TRIALS,
               seed: int = DEFAULT_SEED) -> VerifyReport:
    """Run the requested suites against M and collect a report."""
    m = make_modulus(M)
    names = SUITE_NAMES if suite == "all" else (suite,)
    rng = np.random.default_rng(seed)
    suites = []
    for name in names:
        t0 = time.perf_counter()
        checks = _SUITES[name](m, rng, trials)
        suites.append(SuiteResult(name, tuple(checks), time.perf_counter() - t0))
    return VerifyReport(M, seed, trials, tuple(suites))
