"""Closed-form geometric measure of entanglement of one qubit with the rest.

For a state split as a|chi1>|phi1> + b|chi2>|phi2> the maximal squared
overlap with product states |chi>|phi> is

    1/2 + 1/2 * sqrt((a^2 - b^2)^2 + 4 a^2 b^2 |<phi1|phi2>|^2)

and the measure is E = 1 minus that maximum, which always lies in [0, 1/2].
Besides E itself this module reconstructs the maximizing product state and
provides the two-qubit concurrence relation E = (1 - sqrt(1 - C^2)) / 2.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .decompose import COMPUTATIONAL, split_qubit
from .statevector import StateVector, make_state

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True, eq=False)
class EntanglementResult:
    """Measure E plus the separable-state parameters that attain 1 - E.

    The optimal qubit direction is chi(theta, alpha) = cos(theta/2)|0> +
    sin(theta/2) e^{i alpha}|1>; phi_tilde is the matching state of the
    remaining qubits.
    """

    E: float
    theta_opt: float
    alpha_opt: float
    phi_tilde: StateVector | None
    max_overlap_sq: float


@dataclass(frozen=True, eq=False)
class EntanglementProfile:
    per_qubit: tuple[float, ...]
    total: float


def entanglement_closed_form(a: float, b: float, overlap_abs: float) -> float:
    """Closed-form E from split weights and the companion-overlap modulus."""
    if a < 0.0 or b < 0.0:
        raise ValueError("weights a and b must be nonnegative")
    if abs(a * a + b * b - 1.0) > 1e-9:
        raise ValueError(f"weights not normalized: a^2 + b^2 = {a * a + b * b!r}")
    if not 0.0 <= overlap_abs <= 1.0 + 1e-12:
        raise ValueError(f"overlap modulus {overlap_abs!r} outside [0, 1]")
    s = min(overlap_abs, 1.0)
    d = a * a - b * b
    # clamp the radicand into [0, 1] to absorb 1e-15-scale drift
    disc = min(max(d * d + 4.0 * (a * a) * (b * b) * (s * s), 0.0), 1.0)
    return min(max(0.5 * (1.0 - math.sqrt(disc)), 0.0), 0.5)


def geometric_entanglement(psi: StateVector, qubit_index: int) -> EntanglementResult:
    """Measure of entanglement between ``qubit_index`` and the other qubits.

    Splits the state in the computational basis and evaluates the closed
    form, then rebuilds the maximizer: alpha is the phase of <phi1|phi2>,
    theta = atan2(2ab|<phi1|phi2>|, a^2 - b^2) picks the arctangent branch
    on which the overlap amplitude is maximal, and phi_tilde is the
    normalized combination a cos(theta/2) phi1 + b sin(theta/2) e^{-i alpha}
    phi2.  A split with one weight below threshold is separable along this
    cut: E = 0 with theta at the matching pole.
    """
    split = split_qubit(psi, qubit_index, COMPUTATIONAL)
    if split.phi1 is None or split.phi2 is None:
        theta = math.pi if split.phi1 is None else 0.0
        phi = split.phi2 if split.phi1 is None else split.phi1
        return EntanglementResult(E=0.0, theta_opt=theta, alpha_opt=0.0,
                                  phi_tilde=phi, max_overlap_sq=1.0)
    a, b = split.a, split.b
    s = min(abs(split.overlap), 1.0)
    E = entanglement_closed_form(a, b, s)
    alpha = cmath.phase(split.overlap) % TWO_PI if s > 0.0 else 0.0
    if alpha >= TWO_PI:
        alpha = 0.0
    y = 2.0 * a * b * s
    x = a * a - b * b
    # with a vanishing gradient every direction maximizes; pick the equator
    theta = math.pi / 2.0 if (y == 0.0 and x == 0.0) else math.atan2(y, x)
    w = (a * math.cos(theta / 2.0) * split.phi1.amps
         + b * math.sin(theta / 2.0) * cmath.exp(-1j * alpha) * split.phi2.amps)
    w = w / np.linalg.norm(w)
    phi_tilde = make_state(psi.n - 1, w, normalize=False)
    return EntanglementResult(E=E, theta_opt=theta, alpha_opt=alpha,
                              phi_tilde=phi_tilde, max_overlap_sq=1.0 - E)


def closest_product_state(result: EntanglementResult, qubit_index: int) -> StateVector:
    """Product state chi(theta, alpha) x phi_tilde with chi at ``qubit_index``."""
    if result.phi_tilde is None:
        raise ValueError("result carries no companion state")
    chi = np.array([math.cos(result.theta_opt / 2.0),
                    math.sin(result.theta_opt / 2.0) * cmath.exp(1j * result.alpha_opt)])
    n = result.phi_tilde.n + 1
    if not 1 <= qubit_index <= n:
        raise ValueError(f"qubit index {qubit_index} out of range 1..{n}")
    arr = np.outer(chi, result.phi_tilde.amps).reshape((2,) * n)
    arr = np.moveaxis(arr, 0, qubit_index - 1)
    return make_state(n, arr.ravel(), normalize=False)


def entanglement_profile(psi: StateVector) -> EntanglementProfile:
    """Per-qubit measures E_1..E_n and their sum."""
    per_qubit = tuple(geometric_entanglement(psi, q).E for q in range(1, psi.n + 1))
    return EntanglementProfile(per_qubit=per_qubit, total=sum(per_qubit))


def concurrence_two_qubit(psi: StateVector) -> float:
    """Concurrence C = 2 sqrt(l+ l-) of a two-qubit pure state.

    l+- are the eigenvalues of the one-qubit reduced density matrix, whose
    product equals |a00 a11 - a01 a10|^2.
    """
    if psi.n != 2:
        raise ValueError("concurrence requires a two-qubit state")
    a00, a01, a10, a11 = psi.amps
    return min(2.0 * abs(a00 * a11 - a01 * a10), 1.0)


def entanglement_from_concurrence(c: float) -> float:
    """E = (1 - sqrt(1 - C^2)) / 2 for two qubits."""
    if not 0.0 <= c <= 1.0:
        raise ValueError(f"concurrence {c!r} outside [0, 1]")
    return 0.5 * (1.0 - math.sqrt(max(1.0 - c * c, 0.0)))
