"""Seeded verification suite for every quantitative claim of the library.

Each claim builds its own corpus from an independent, deterministic RNG
stream (``default_rng([seed, stream])``) so claims can run in any order and
still see identical data.  Claims that share a corpus by construction (the
closed-form oracle comparisons and the maximizer check) use the same stream
ids on purpose.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .decompose import split_qubit, reassemble, standard_bases
from .families import dicke, ghz, trig_cos, trig_sin, werner
from .measure import (closest_product_state, concurrence_two_qubit,
                      entanglement_closed_form, entanglement_from_concurrence,
                      entanglement_profile, geometric_entanglement)
from .oracle import eigen_oracle, grid_oracle, random_state
from .statevector import StateVector, inner_product, make_state, tensor

DEFAULT_SEED = 42
DEFAULT_MAX_N = 12

# rng stream ids; 1xx = corpora shared across claims
_STREAM_WERNER_COEFFS = 101
_STREAM_RANDOM_STATES = 102
_STREAM_SUM_RULE = 103
_STREAM_MAJORIZATION = 104
_STREAM_TWO_QUBIT = 109
_STREAM_PRODUCT = 110
_STREAM_BASES = 111


@dataclass(frozen=True)
class Check:
    label: str
    deviation: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return self.deviation <= self.tolerance

    @property
    def severity(self) -> float:
        if self.tolerance == 0.0:
            return math.inf if self.deviation > 0.0 else 0.0
        return self.deviation / self.tolerance


@dataclass(frozen=True)
class ClaimResult:
    number: int
    name: str
    checks: tuple[Check, ...]
    n_evaluations: int

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def worst(self) -> Check:
        return max(self.checks, key=lambda c: c.severity)


def _qubits(psi: StateVector) -> range:
    return range(1, psi.n + 1)


def _family_corpus(max_n: int, seed: int) -> list[StateVector]:
    rng = np.random.default_rng([seed, _STREAM_WERNER_COEFFS])
    states: list[StateVector] = []
    for n in range(2, max_n + 1):
        states.append(werner([1.0 / math.sqrt(n)] * n))
        for _ in range(3):
            c = rng.standard_normal(n) + 1j * rng.standard_normal(n)
            states.append(werner(c / np.linalg.norm(c)))
        for k in range(n + 1):
            states.append(dicke(n, k))
        for p in np.linspace(0.0, 1.0, 21):
            states.append(ghz(n, math.sqrt(p), math.sqrt(1.0 - p)))
        states.append(trig_sin(n))
        states.append(trig_cos(n))
    return states


def _random_corpus(count: int, max_n: int, seed: int, stream: int) -> list[StateVector]:
    ns = list(range(2, min(8, max_n) + 1))
    rng = np.random.default_rng([seed, stream])
    return [random_state(ns[j % len(ns)], rng) for j in range(count)]


def _oracle_corpus(max_n: int, seed: int) -> list[StateVector]:
    return (_family_corpus(max_n, seed)
            + _random_corpus(1000, max_n, seed, _STREAM_RANDOM_STATES))


def claim_closed_vs_eigen(max_n: int = DEFAULT_MAX_N, seed: int = DEFAULT_SEED) -> ClaimResult:
    """Closed form against the reduced-density eigenvalue route."""
    dev, cnt = 0.0, 0
    for psi in _oracle_corpus(max_n, seed):
        for q in _qubits(psi):
            dev = max(dev, abs(geometric_entanglement(psi, q).E - eigen_oracle(psi, q)))
            cnt += 1
    return ClaimResult(1, "closed form vs eigenvalue oracle",
                       (Check("|E_closed - E_eigen|", dev, 1e-10),), cnt)


def claim_closed_vs_grid(max_n: int = DEFAULT_MAX_N, seed: int = DEFAULT_SEED) -> ClaimResult:
    """Closed form against the grid search, on the corpus restricted to n <= 8."""
    dev, cnt = 0.0, 0
    for psi in _oracle_corpus(min(8, max_n), seed):
        for q in _qubits(psi):
            est = grid_oracle(psi, q, coarse_points=64, refinement_rounds=8).E_est
            dev = max(dev, abs(geometric_entanglement(psi, q).E - est))
            cnt += 1
    return ClaimResult(2, "closed form vs grid oracle",
                       (Check("|E_closed - E_grid|", dev, 1e-6),), cnt)


def claim_werner_sum_rule(max_n: int = DEFAULT_MAX_N, seed: int = DEFAULT_SEED) -> ClaimResult:
    """Sum of per-qubit measures is 1 when every |c_i|^2 <= 1/2."""
    rng = np.random.default_rng([seed, _STREAM_SUM_RULE])
    ns = list(range(3, min(10, max_n) + 1))
    dev, cnt = 0.0, 0
    for j in range(200 if ns else 0):
        n = ns[j % len(ns)]
        while True:
            c = rng.standard_normal(n) + 1j * rng.standard_normal(n)
            c /= np.linalg.norm(c)
            if np.max(np.abs(c) ** 2) <= 0.5:
                break
        dev = max(dev, abs(entanglement_profile(werner(c)).total - 1.0))
        cnt += 1
    return ClaimResult(3, "werner sum rule", (Check("|sum E_i - 1|", dev, 1e-9),), cnt)


def claim_werner_majorization(max_n: int = DEFAULT_MAX_N, seed: int = DEFAULT_SEED) -> ClaimResult:
    """With one dominant |c_m|^2 > 1/2 the total drops to 2(1 - |c_m|^2) < 1."""
    rng = np.random.default_rng([seed, _STREAM_MAJORIZATION])
    ns = list(range(3, min(10, max_n) + 1))
    dev, worst_total, cnt = 0.0, 0.0, 0
    for j in range(200 if ns else 0):
        n = ns[j % len(ns)]
        p = float(rng.uniform(0.51, 0.99))
        m = int(rng.integers(0, n))
        rest = rng.standard_normal(n - 1) + 1j * rng.standard_normal(n - 1)
        rest *= math.sqrt(1.0 - p) / np.linalg.norm(rest)
        c = np.insert(rest, m, math.sqrt(p))
        total = entanglement_profile(werner(c)).total
        dev = max(dev, abs(total - 2.0 * (1.0 - p)))
        worst_total = max(worst_total, total)
        cnt += 1
    return ClaimResult(4, "werner majorization",
                       (Check("|sum E_i - 2(1 - |c_m|^2)|", dev, 1e-9),
                        Check("sum E_i stays below 1", max(0.0, worst_total - 1.0), 0.0)), cnt)


def claim_proper_werner(max_n: int = DEFAULT_MAX_N, seed: int = DEFAULT_SEED) -> ClaimResult:
    """Proper W state: E_i = 1/n for every qubit."""
    dev, cnt = 0.0, 0
    for n in range(2, max_n + 1):
        profile = entanglement_profile(werner([1.0 / math.sqrt(n)] * n))
        dev = max(dev, max(abs(e - 1.0 / n) for e in profile.per_qubit))
        cnt += n
    return ClaimResult(5, "proper werner E_i = 1/n", (Check("|E_i - 1/n|", dev, 1e-12),), cnt)


def claim_dicke(max_n: int = DEFAULT_MAX_N, seed: int = DEFAULT_SEED) -> ClaimResult:
    """Dicke measure (1 - |1 - 2k/n|)/2, its maximum at k = n/2, and duality."""
    dev_formula = dev_dual = dev_half = 0.0
    argmax_ok = True
    cnt = 0
    for n in range(2, max_n + 1):
        per_k = []
        for k in range(n + 1):
            psi = dicke(n, k)
            pred = 0.5 * (1.0 - abs(1.0 - 2.0 * k / n))
            es = [geometric_entanglement(psi, q).E for q in _qubits(psi)]
            dev_formula = max(dev_formula, max(abs(e - pred) for e in es))
            per_k.append(es[0])
            cnt += n
        for k in range(n + 1):
            dev_dual = max(dev_dual, abs(per_k[k] - per_k[n - k]))
        if n % 2 == 0:
            dev_half = max(dev_half, abs(per_k[n // 2] - 0.5))
            argmax_ok &= all(per_k[k] < per_k[n // 2] for k in range(n + 1) if k != n // 2)
    return ClaimResult(6, "dicke formula, maximum and duality",
                       (Check("|E - (1 - |1 - 2k/n|)/2|", dev_formula, 1e-12),
                        Check("|E(n, n/2) - 1/2| for even n", dev_half, 1e-12),
                        Check("k = n/2 is the argmax", 0.0 if argmax_ok else math.inf, 0.5),
                        Check("|E(n,k) - E(n,n-k)|", dev_dual, 1e-12)), cnt)


def claim_ghz_tent_map(max_n: int = DEFAULT_MAX_N, seed: int = DEFAULT_SEED) -> ClaimResult:
    """GHZ measure (1 - |1 - 2|c1|^2|)/2 over a 21-point sweep, every qubit."""
    dev, dev_proper, cnt = 0.0, 0.0, 0
    h = 1.0 / math.sqrt(2.0)
    for n in range(2, max_n + 1):
        for p in np.linspace(0.0, 1.0, 21):
            psi = ghz(n, math.sqrt(p), math.sqrt(1.0 - p))
            pred = 0.5 * (1.0 - abs(1.0 - 2.0 * p))
            for q in _qubits(psi):
                dev = max(dev, abs(geometric_entanglement(psi, q).E - pred))
                cnt += 1
        proper = ghz(n, h, h)
        dev_proper = max(dev_proper, max(abs(geometric_entanglement(proper, q).E - 0.5)
                                         for q in _qubits(proper)))
        cnt += n
    return ClaimResult(7, "ghz tent map",
                       (Check("|E - (1 - |1 - 2p|)/2|", dev, 1e-12),
                        Check("proper GHZ gives 1/2", dev_proper, 1e-12)), cnt)


def claim_trig(max_n: int = DEFAULT_MAX_N, seed: int = DEFAULT_SEED) -> ClaimResult:
    """Sine/cosine states: E = 1/2 for every n and qubit, plus the recursion."""
    dev_e, dev_rec, cnt = 0.0, 0.0, 0
    ket0 = make_state(1, [1, 0])
    ket1 = make_state(1, [0, 1])
    h = 1.0 / math.sqrt(2.0)
    for n in range(2, max_n + 1):
        for psi in (trig_sin(n), trig_cos(n)):
            dev_e = max(dev_e, max(abs(geometric_entanglement(psi, q).E - 0.5)
                                   for q in _qubits(psi)))
            cnt += psi.n
        if n >= 3:
            s_prev, c_prev = trig_sin(n - 1), trig_cos(n - 1)
            sin_expect = h * (tensor(ket0, s_prev).amps + tensor(ket1, c_prev).amps)
            cos_expect = h * (tensor(ket0, c_prev).amps - tensor(ket1, s_prev).amps)
            dev_rec = max(dev_rec,
                          float(np.max(np.abs(trig_sin(n).amps - sin_expect))),
                          float(np.max(np.abs(trig_cos(n).amps - cos_expect))))
    return ClaimResult(8, "trigonometric states",
                       (Check("|E - 1/2|", dev_e, 1e-9),
                        Check("sum-of-angles recursion per amplitude", dev_rec, 1e-12)), cnt)


def claim_two_qubit_consistency(max_n: int = DEFAULT_MAX_N, seed: int = DEFAULT_SEED) -> ClaimResult:
    """Measure agrees with the concurrence relation on two qubits."""
    rng = np.random.default_rng([seed, _STREAM_TWO_QUBIT])
    dev = 0.0
    for _ in range(500):
        psi = random_state(2, rng)
        via_c = entanglement_from_concurrence(concurrence_two_qubit(psi))
        dev = max(dev, abs(geometric_entanglement(psi, 1).E - via_c))
    worked = abs(entanglement_from_concurrence(0.8) - 0.2)
    return ClaimResult(9, "two-qubit concurrence consistency",
                       (Check("|E - E(C)|", dev, 1e-9),
                        Check("C = 0.8 gives E = 0.2", worked, 1e-12)), 501)


def claim_separable_detection(max_n: int = DEFAULT_MAX_N, seed: int = DEFAULT_SEED) -> ClaimResult:
    """Product states across the first-qubit cut measure as unentangled."""
    rng = np.random.default_rng([seed, _STREAM_PRODUCT])
    ns = list(range(2, min(8, max_n) + 1))
    dev = 0.0
    for j in range(200):
        n = ns[j % len(ns)]
        psi = tensor(random_state(1, rng), random_state(n - 1, rng))
        dev = max(dev, geometric_entanglement(psi, 1).E)
    return ClaimResult(10, "separable product detection", (Check("E at product cut", dev, 1e-10),), 200)


def claim_basis_invariance(max_n: int = DEFAULT_MAX_N, seed: int = DEFAULT_SEED) -> ClaimResult:
    """E from splits in the computational, flipped and X bases agrees."""
    bases = standard_bases()
    dev, cnt = 0.0, 0
    for psi in _random_corpus(200, max_n, seed, _STREAM_BASES):
        for q in _qubits(psi):
            es = []
            for basis in bases:
                s = split_qubit(psi, q, basis)
                es.append(entanglement_closed_form(s.a, s.b, min(abs(s.overlap), 1.0)))
            dev = max(dev, max(es) - min(es))
            cnt += 1
    return ClaimResult(11, "basis invariance", (Check("pairwise E deviation", dev, 1e-9),), cnt)


def claim_maximizer_validity(max_n: int = DEFAULT_MAX_N, seed: int = DEFAULT_SEED) -> ClaimResult:
    """The returned product state really attains the maximal overlap 1 - E."""
    dev, cnt = 0.0, 0
    for psi in _oracle_corpus(max_n, seed):
        for q in _qubits(psi):
            res = geometric_entanglement(psi, q)
            attained = abs(inner_product(psi, closest_product_state(res, q))) ** 2
            dev = max(dev, abs(attained - (1.0 - res.E)))
            cnt += 1
    return ClaimResult(12, "maximizer validity",
                       (Check("| |<psi|chi x phi>|^2 - (1 - E) |", dev, 1e-9),), cnt)


def claim_round_trip(max_n: int = DEFAULT_MAX_N, seed: int = DEFAULT_SEED) -> ClaimResult:
    """Splitting then reassembling reproduces the state amplitude-wise."""
    bases = standard_bases()
    dev, cnt = 0.0, 0
    for psi in _random_corpus(200, max_n, seed, _STREAM_BASES):
        for q in _qubits(psi):
            for basis in bases:
                back = reassemble(split_qubit(psi, q, basis), psi.n)
                dev = max(dev, float(np.max(np.abs(back.amps - psi.amps))))
                cnt += 1
    return ClaimResult(13, "split round trip", (Check("per-amplitude deviation", dev, 1e-12),), cnt)


ALL_CLAIMS = (
    claim_closed_vs_eigen,
    claim_closed_vs_grid,
    claim_werner_sum_rule,
    claim_werner_majorization,
    claim_proper_werner,
    claim_dicke,
    claim_ghz_tent_map,
    claim_trig,
    claim_two_qubit_consistency,
    claim_separable_detection,
    claim_basis_invariance,
    claim_maximizer_validity,
    claim_round_trip,
)


def run_all(max_n: int = DEFAULT_MAX_N, seed: int = DEFAULT_SEED) -> list[ClaimResult]:
    return [claim(max_n=max_n, seed=seed) for claim in ALL_CLAIMS]
