"""Decomposition of a pure state with respect to one distinguished qubit.

Any n-qubit state can be written as a|chi1>|phi1> + b|chi2>|phi2> where
(chi1, chi2) is an orthonormal basis of the distinguished qubit, a and b are
nonnegative weights with a^2 + b^2 = 1, and phi1, phi2 are normalized states
of the remaining n-1 qubits.  All phase information lives in phi1/phi2, which
in general are not orthogonal; their scalar product is kept as ``overlap``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .statevector import StateVector, make_state

ORTHO_TOL = 1e-12

# below this weight the companion state is treated as absent and the cut
# declared separable on that side
WEIGHT_EPS = 1e-12


@dataclass(frozen=True, eq=False)
class QubitBasis:
    """Orthonormal basis pair (chi1, chi2) of a single qubit."""

    chi1: np.ndarray
    chi2: np.ndarray

    def __post_init__(self):
        for name in ("chi1", "chi2"):
            v = np.array(getattr(self, name), dtype=np.complex128).ravel()
            if v.shape != (2,):
                raise ValueError("invalid basis: vectors must have two components")
            v.setflags(write=False)
            object.__setattr__(self, name, v)
        if (abs(np.vdot(self.chi1, self.chi1).real - 1.0) > ORTHO_TOL
                or abs(np.vdot(self.chi2, self.chi2).real - 1.0) > ORTHO_TOL):
            raise ValueError("invalid basis: vectors must be normalized")
        if abs(np.vdot(self.chi1, self.chi2)) > ORTHO_TOL:
            raise ValueError("invalid basis: vectors must be orthogonal")


_H = 1.0 / math.sqrt(2.0)

COMPUTATIONAL = QubitBasis((1, 0), (0, 1))
FLIPPED = QubitBasis((0, 1), (1, 0))
X_BASIS = QubitBasis((_H, _H), (_H, -_H))


def standard_bases() -> list[QubitBasis]:
    """Computational (|0>,|1>), flipped (|1>,|0>) and X ((|0>±|1>)/sqrt 2)."""
    return [COMPUTATIONAL, FLIPPED, X_BASIS]


@dataclass(frozen=True, eq=False)
class QubitSplit:
    """Result of splitting a state at one qubit in a given basis.

    ``phi1``/``phi2`` are None exactly when the matching weight is below
    WEIGHT_EPS; ``overlap`` is <phi1|phi2> (0 when either side is absent).
    """

    qubit_index: int
    basis: QubitBasis
    a: float
    b: float
    phi1: StateVector | None
    phi2: StateVector | None
    overlap: complex


def _qubit_slices(psi: StateVector, qubit_index: int) -> tuple[np.ndarray, np.ndarray]:
    """Amplitude blocks with the distinguished qubit fixed to 0 and to 1."""
    arr = psi.amps.reshape((2,) * psi.n)
    arr = np.moveaxis(arr, qubit_index - 1, 0)
    return arr[0].ravel(), arr[1].ravel()


def split_qubit(psi: StateVector, qubit_index: int, basis: QubitBasis) -> QubitSplit:
    """Split ``psi`` at ``qubit_index`` over the given single-qubit basis.

    The weights are the norms of the projections of the distinguished qubit
    onto chi1 and chi2, so they are real and nonnegative by construction.
    """
    if psi.n < 2:
        raise ValueError("cannot split a single-qubit state")
    if not isinstance(qubit_index, int) or not 1 <= qubit_index <= psi.n:
        raise ValueError(f"qubit index {qubit_index!r} out of range 1..{psi.n}")
    s0, s1 = _qubit_slices(psi, qubit_index)
    parts: list[tuple[float, StateVector | None]] = []
    for chi in (basis.chi1, basis.chi2):
        v = np.conj(chi[0]) * s0 + np.conj(chi[1]) * s1
        w = float(np.linalg.norm(v))
        phi = make_state(psi.n - 1, v / w, normalize=False) if w >= WEIGHT_EPS else None
        parts.append((w, phi))
    (a, phi1), (b, phi2) = parts
    if phi1 is not None and phi2 is not None:
        overlap = complex(np.vdot(phi1.amps, phi2.amps))
    else:
        overlap = 0j
    return QubitSplit(qubit_index, basis, a, b, phi1, phi2, overlap)


def reassemble(split: QubitSplit, n: int) -> StateVector:
    """Rebuild a|chi1>|phi1> + b|chi2>|phi2> as an n-qubit state."""
    present = [phi for phi in (split.phi1, split.phi2) if phi is not None]
    if not present:
        raise ValueError("inconsistent split: both companion states are absent")
    if any(phi.n != n - 1 for phi in present):
        raise ValueError(f"inconsistent split: companion states do not have {n - 1} qubits")
    if not 1 <= split.qubit_index <= n:
        raise ValueError(f"inconsistent split: qubit index {split.qubit_index} out of range 1..{n}")
    acc = np.zeros((2, 1 << (n - 1)), dtype=np.complex128)
    if split.phi1 is not None:
        acc += split.a * np.outer(split.basis.chi1, split.phi1.amps)
    if split.phi2 is not None:
        acc += split.b * np.outer(split.basis.chi2, split.phi2.amps)
    arr = np.moveaxis(acc.reshape((2,) * n), 0, split.qubit_index - 1)
    return make_state(n, arr.ravel(), normalize=False)
