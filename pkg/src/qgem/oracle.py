"""Two independent numerical ground truths for the single-qubit measure.

The eigenvalue route traces out everything but the distinguished qubit and
takes the smaller eigenvalue of the resulting 2x2 density matrix.  The grid
route maximizes the squared overlap with product states directly: for a
fixed qubit direction chi(theta, alpha) the best companion state is known
in closed form and contributes the projection norm

    f(theta, alpha) = || (<chi(theta, alpha)| x 1) |psi> ||^2,

so the search space is the (theta, alpha) torus, scanned on a coarse grid
that is then shrunk around the incumbent best cell.  Both routes avoid the
closed-form expression they are meant to validate.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .statevector import StateVector, make_state

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True, eq=False)
class ReducedDensity:
    """2x2 density matrix of one qubit; r10 is the conjugate of r01."""

    r00: float
    r11: float
    r01: complex

    @property
    def matrix(self) -> np.ndarray:
        return np.array([[self.r00, self.r01], [np.conj(self.r01), self.r11]])


@dataclass(frozen=True)
class GridSearchReport:
    E_est: float
    theta_best: float
    alpha_best: float
    grid_points: int
    refinement_rounds: int


def _qubit_slices(psi: StateVector, qubit_index: int) -> tuple[np.ndarray, np.ndarray]:
    if psi.n < 2:
        raise ValueError("state must have at least 2 qubits")
    if not isinstance(qubit_index, int) or not 1 <= qubit_index <= psi.n:
        raise ValueError(f"qubit index {qubit_index!r} out of range 1..{psi.n}")
    arr = psi.amps.reshape((2,) * psi.n)
    arr = np.moveaxis(arr, qubit_index - 1, 0)
    return arr[0].ravel(), arr[1].ravel()


def reduced_density(psi: StateVector, qubit_index: int) -> ReducedDensity:
    """Trace out all qubits except ``qubit_index``."""
    s0, s1 = _qubit_slices(psi, qubit_index)
    r00 = float(np.vdot(s0, s0).real)
    r11 = float(np.vdot(s1, s1).real)
    r01 = complex(np.vdot(s1, s0))  # sum psi(0,rest) conj(psi(1,rest))
    if abs(r00 + r11 - 1.0) > 1e-12 or r00 < -1e-12 or r11 < -1e-12 \
            or r00 * r11 - abs(r01) ** 2 < -1e-12:
        raise ValueError("reduced matrix violates trace or positivity bounds")
    return ReducedDensity(r00=r00, r11=r11, r01=r01)


def eigen_oracle(psi: StateVector, qubit_index: int) -> float:
    """Smaller eigenvalue of the reduced density matrix, clamped to [0, 1/2].

    Equals 1 minus the maximal squared overlap with product states.
    """
    rho = reduced_density(psi, qubit_index)
    lam = float(np.linalg.eigvalsh(rho.matrix)[0])
    return min(max(lam, 0.0), 0.5)


def grid_oracle(psi: StateVector, qubit_index: int,
                coarse_points: int = 64, refinement_rounds: int = 8) -> GridSearchReport:
    """Deterministic grid maximization of the product-state overlap.

    Scans f(theta, alpha) on a coarse_points x coarse_points grid over
    [0, pi] x [0, 2 pi), then shrinks the search box around the best point
    by a factor 4 per refinement round, never discarding the incumbent.
    Ties are broken toward the smallest (theta, alpha).
    """
    if coarse_points < 16:
        raise ValueError(f"need at least a 16-point grid, got {coarse_points}")
    if refinement_rounds < 0:
        raise ValueError(f"refinement rounds must be nonnegative, got {refinement_rounds}")
    s0, s1 = _qubit_slices(psi, qubit_index)
    p0 = float(np.vdot(s0, s0).real)
    p1 = float(np.vdot(s1, s1).real)
    kappa = complex(np.vdot(s0, s1))
    m = coarse_points

    best_f = -math.inf
    best_t = best_a = 0.0
    t_lo, t_hi = 0.0, math.pi
    a_lo, a_hi = 0.0, TWO_PI
    for rnd in range(refinement_rounds + 1):
        thetas = np.linspace(t_lo, t_hi, m)
        alphas = np.linspace(a_lo, a_hi, m, endpoint=rnd > 0)
        c = np.cos(thetas / 2.0)
        s = np.sin(thetas / 2.0)
        ridge = kappa.real * np.cos(alphas) + kappa.imag * np.sin(alphas)
        f = (c * c)[:, None] * p0 + (s * s)[:, None] * p1 + (2.0 * c * s)[:, None] * ridge
        i, j = divmod(int(np.argmax(f)), m)
        if f[i, j] > best_f:
            best_f = float(f[i, j])
            best_t = float(thetas[i])
            best_a = float(alphas[j])
        # alpha is unidentifiable along pole rows where the cross term
        # vanishes, and every row shares the same alpha maximizer, so center
        # the alpha box on the argmax of the row with the largest contrast
        row = int(np.argmax(np.ptp(f, axis=1)))
        a_center = float(alphas[int(np.argmax(f[row]))])
        tw = (t_hi - t_lo) / 4.0
        aw = (a_hi - a_lo) / 4.0
        t_lo = max(0.0, best_t - tw / 2.0)
        t_hi = min(math.pi, best_t + tw / 2.0)
        # f is 2 pi periodic in alpha, so the box may cross 0 or 2 pi freely
        a_lo = a_center - aw / 2.0
        a_hi = a_center + aw / 2.0
    best_a %= TWO_PI
    return GridSearchReport(E_est=1.0 - best_f, theta_best=best_t, alpha_best=best_a,
                            grid_points=coarse_points, refinement_rounds=refinement_rounds)


def random_state(n: int, rng: np.random.Generator) -> StateVector:
    """Haar-uniform pure state: normal real and imaginary parts, normalized."""
    z = rng.standard_normal(1 << n) + 1j * rng.standard_normal(1 << n)
    return make_state(n, z, normalize=True)
