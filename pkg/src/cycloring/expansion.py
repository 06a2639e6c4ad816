"""Expansion factors of the monomials x^k in Z[x]/Phi_M(x).

The expansion factor of x^k is the maximum of ||x^k g||_inf / ||g||_inf over
nonzero g. Multiplying by x^k maps the basis monomial x^l to reduction-matrix
column (k + l) mod M, so the factor is the max-row-L1 norm of that windowed
column selection, and a row-sign-matched +-1 vector attains it. Every factor
reported by the closed computation is re-verified through an actual ring
multiplication, and a seeded randomized oracle provides an independent
never-exceeds check.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .cyclotomic import (CycloModulus, PrimePower, RingElement,
                         monomial_reduce, ring_mul)

DEFAULT_SEED = 1729


def _window(m: CycloModulus, k: int) -> np.ndarray:
    entries = np.array(m._columns, dtype=np.int64).T
    idx = [(k + l) % m.M for l in range(m.phi)]
    return entries[:, idx]


def monomial_expansion_factor(k: int, m: CycloModulus) -> tuple[int, RingElement]:
    """Exact expansion factor of x^k together with a witness attaining it.

    The witness has coefficients in {-1, 0, 1}, sign-matched against a row
    of maximal L1 norm in the windowed column matrix; the claimed factor is
    re-verified by one ring multiplication.
    """
    k %= m.M
    win = _window(m, k)
    row_l1 = np.abs(win).sum(axis=1)
    row = int(row_l1.argmax())
    factor = int(row_l1[row])
    witness = RingElement(m, tuple(int(np.sign(c)) for c in win[row]))
    prod = ring_mul(monomial_reduce(k, m), witness)
    if witness.max_norm() != 1 or prod.max_norm() != factor:
        raise AssertionError(
            f"expansion witness for k={k}, M={m.M} failed re-verification")
    return factor, witness


@dataclass(frozen=True)
class ExpansionReport:
    """Per-k expansion factors of one modulus, with the maximum and witness."""

    modulus: CycloModulus
    per_k: tuple[int, ...]
    max_factor: int
    witness_k: int
    witness_g: RingElement


def closed_form_max(m: CycloModulus) -> int | None:
    """The provable max-over-k expansion factor, where one exists.

    2^s rings rotate coefficients, so the max is 1. Odd prime powers reach
    exactly 2. Two-prime moduli with odd p reach exactly 2p; for p = 2 the
    generic 2p row bound still holds but the witness construction needs
    q + p - 1 < phi(pq), which fails, and the true maximum is smaller
    (M = 6 gives 2), so no closed value is claimed.
    """
    sh = m.shape
    if isinstance(sh, PrimePower):
        return 1 if sh.p == 2 else 2
    if sh.p > 2:
        return 2 * sh.p
    return None


def witness_exponent(m: CycloModulus) -> int | None:
    """The exponent with a guaranteed maximal factor: (p-1)p^(s-1) for odd
    prime powers, (phi(pq)-1) * M/(pq) for two-prime moduli with odd p."""
    sh = m.shape
    if isinstance(sh, PrimePower):
        return None if sh.p == 2 else (sh.p - 1) * sh.p ** (sh.s - 1)
    if sh.p > 2:
        return ((sh.p - 1) * (sh.q - 1) - 1) * m.inflation
    return None


def max_expansion_factor(m: CycloModulus) -> ExpansionReport:
    """Sweep all k in [0, M) and report the maximal expansion factor.

    For shapes with a provable closed-form maximum the sweep result is
    asserted against it, and the distinguished witness exponent must attain
    the maximum.
    """
    entries = np.abs(np.array(m._columns, dtype=np.int64).T)
    doubled = np.concatenate([entries, entries], axis=1)
    csum = np.concatenate([np.zeros((m.phi, 1), dtype=np.int64),
                           doubled.cumsum(axis=1)], axis=1)
    window_sums = csum[:, m.phi:m.phi + m.M] - csum[:, :m.M]
    per_k = tuple(int(v) for v in window_sums.max(axis=0))
    max_factor = max(per_k)

    expected = closed_form_max(m)
    if expected is not None and max_factor != expected:
        raise AssertionError(
            f"max expansion factor for M={m.M} is {max_factor}, expected "
            f"{expected}")
    wk = witness_exponent(m)
    if wk is not None and per_k[wk] != max_factor:
        raise AssertionError(
            f"witness exponent {wk} does not attain the maximum for M={m.M}")
    if wk is None:
        wk = int(np.argmax(per_k))
    factor, witness = monomial_expansion_factor(wk, m)
    assert factor == max_factor
    return ExpansionReport(m, per_k, max_factor, wk, witness)


def randomized_expansion_check(k: int, m: CycloModulus, trials: int,
                               seed: int = DEFAULT_SEED) -> bool:
    """Independent oracle for one factor: random g (ternary and bounded
    integer coefficients) never exceed factor * ||g||_inf, and the
    constructed witness attains equality."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    k %= m.M
    factor, witness = monomial_expansion_factor(k, m)
    win = _window(m, k)
    rng = np.random.default_rng(seed)
    half = trials // 2
    gs = rng.integers(-1, 2, size=(trials, m.phi))
    gs[half:] = rng.integers(-10, 11, size=(trials - half, m.phi))
    norms = np.abs(gs).max(axis=1)
    keep = norms > 0
    gs, norms = gs[keep], norms[keep]
    prods = win @ gs.T
    out_norms = np.abs(prods).max(axis=0)
    if np.any(out_norms > factor * norms):
        return False
    attained = ring_mul(monomial_reduce(k, m), witness).max_norm()
    return attained == factor * witness.max_norm()
