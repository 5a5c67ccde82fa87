"""Constructors for four n-qubit state families and their analytic measures.

Werner-like (generalized W) states put arbitrary coefficients on the
Hamming-weight-one kets; Dicke states D(n, k) superpose all weight-k kets
with equal amplitude; GHZ-like states live on the all-zeros and all-ones
kets; the trigonometric sine/cosine states occupy the odd/even weight
sectors with alternating signs.  Each family has a closed-form single-qubit
entanglement, exposed by :func:`predicted_entanglement` for cross-checking.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .statevector import StateVector, make_state

COEFF_TOL = 1e-12

FAMILY_KINDS = ("werner", "dicke", "ghz", "sin", "cos")


@dataclass(frozen=True)
class FamilySpec:
    """Parsed family tag plus parameters (see :func:`parse_family_spec`)."""

    kind: str
    n: int
    coeffs: tuple[complex, ...] = ()
    k: int = 0


def werner(coefficients: Sequence[complex]) -> StateVector:
    """Generalized W state with coefficient c_i on the single-1-at-qubit-i ket."""
    c = np.asarray(coefficients, dtype=np.complex128).ravel()
    n = c.size
    if n < 2:
        raise ValueError("a Werner-like state needs at least 2 qubits")
    sumsq = float(np.sum(np.abs(c) ** 2))
    if abs(sumsq - 1.0) > COEFF_TOL:
        raise ValueError(f"bad normalization: sum of |c_i|^2 is {sumsq!r}")
    amps = np.zeros(1 << n, dtype=np.complex128)
    for i in range(n):
        amps[1 << (n - 1 - i)] = c[i]
    return make_state(n, amps, normalize=False)


def dicke(n: int, k: int) -> StateVector:
    """Dicke state: equal amplitude 1/sqrt(C(n,k)) on every weight-k ket."""
    if not 0 <= k <= n:
        raise ValueError(f"excitation count k={k} out of range 0..{n}")
    amp = 1.0 / math.sqrt(math.comb(n, k))
    amps = np.zeros(1 << n, dtype=np.complex128)
    for idx in range(1 << n):
        if idx.bit_count() == k:
            amps[idx] = amp
    return make_state(n, amps, normalize=False)


def ghz(n: int, c1: complex, c2: complex) -> StateVector:
    """GHZ-like state c1|00...0> + c2|11...1>."""
    if n < 2:
        raise ValueError("a GHZ-like state needs at least 2 qubits")
    sumsq = abs(c1) ** 2 + abs(c2) ** 2
    if abs(sumsq - 1.0) > COEFF_TOL:
        raise ValueError(f"bad normalization: |c1|^2 + |c2|^2 is {sumsq!r}")
    amps = np.zeros(1 << n, dtype=np.complex128)
    amps[0] = c1
    amps[-1] = c2
    return make_state(n, amps, normalize=False)


def _trig(n: int, parity: int, sign_shift: int) -> StateVector:
    norm = math.sqrt(0.5 ** (n - 1))
    amps = np.zeros(1 << n, dtype=np.complex128)
    for idx in range(1 << n):
        w = idx.bit_count()
        if w % 2 == parity:
            amps[idx] = norm if ((w - sign_shift) // 2) % 2 == 0 else -norm
    return make_state(n, amps, normalize=False)


def trig_sin(n: int) -> StateVector:
    """Sine state: amplitude (-1)^((w-1)/2) / 2^((n-1)/2) on odd weights w."""
    if n < 2:
        raise ValueError("trigonometric states need at least 2 qubits")
    return _trig(n, parity=1, sign_shift=1)


def trig_cos(n: int) -> StateVector:
    """Cosine state: amplitude (-1)^(w/2) / 2^((n-1)/2) on even weights w."""
    if n < 2:
        raise ValueError("trigonometric states need at least 2 qubits")
    return _trig(n, parity=0, sign_shift=0)


def _tent(p: float) -> float:
    return 0.5 * (1.0 - abs(1.0 - 2.0 * p))


def predicted_entanglement(spec: FamilySpec, qubit_index: int) -> float:
    """Analytic single-qubit measure for the family, used for verification."""
    if not 1 <= qubit_index <= spec.n:
        raise ValueError(f"qubit index {qubit_index} out of range 1..{spec.n}")
    if spec.kind == "werner":
        return _tent(abs(spec.coeffs[qubit_index - 1]) ** 2)
    if spec.kind == "dicke":
        return _tent(spec.k / spec.n)
    if spec.kind == "ghz":
        return _tent(abs(spec.coeffs[0]) ** 2)
    if spec.kind in ("sin", "cos"):
        return 0.5
    raise ValueError(f"unknown family {spec.kind!r}")


def build_state(spec: FamilySpec) -> StateVector:
    """Construct the state a FamilySpec describes."""
    if spec.kind == "werner":
        return werner(spec.coeffs)
    if spec.kind == "dicke":
        return dicke(spec.n, spec.k)
    if spec.kind == "ghz":
        return ghz(spec.n, spec.coeffs[0], spec.coeffs[1])
    if spec.kind == "sin":
        return trig_sin(spec.n)
    if spec.kind == "cos":
        return trig_cos(spec.n)
    raise ValueError(f"unknown family {spec.kind!r}")


def _parse_complex(token: str) -> complex:
    text = token.strip().replace(" ", "").replace("i", "j")
    try:
        return complex(text)
    except ValueError as exc:
        raise ValueError(f"cannot parse coefficient {token!r}") from exc


def _parse_int(token: str, what: str) -> int:
    try:
        return int(token.strip())
    except ValueError as exc:
        raise ValueError(f"cannot parse {what} {token!r}") from exc


def parse_family_spec(text: str) -> FamilySpec:
    """Parse the family grammar used by the command line.

    Accepted forms: ``werner:c1,c2,...``, ``dicke:n,k``, ``ghz:n,c1``,
    ``sin:n``, ``cos:n``.  Complex coefficients are written like ``0.6+0.8i``
    (bare reals accepted); for ``ghz`` the second coefficient is filled in
    as sqrt(1 - |c1|^2).
    """
    kind, sep, rest = text.partition(":")
    kind = kind.strip().lower()
    if not sep or kind not in FAMILY_KINDS:
        raise ValueError(f"cannot parse family spec {text!r}: expected tag:params with "
                         f"tag in {'/'.join(FAMILY_KINDS)}")
    parts = rest.split(",")
    if kind == "werner":
        coeffs = tuple(_parse_complex(p) for p in parts)
        if len(coeffs) < 2:
            raise ValueError("werner spec needs at least 2 coefficients")
        return FamilySpec(kind="werner", n=len(coeffs), coeffs=coeffs)
    if kind == "dicke":
        if len(parts) != 2:
            raise ValueError(f"dicke spec needs n,k, got {rest!r}")
        return FamilySpec(kind="dicke", n=_parse_int(parts[0], "n"), k=_parse_int(parts[1], "k"))
    if kind == "ghz":
        if len(parts) != 2:
            raise ValueError(f"ghz spec needs n,c1, got {rest!r}")
        n = _parse_int(parts[0], "n")
        c1 = _parse_complex(parts[1])
        rem = 1.0 - abs(c1) ** 2
        if rem < -COEFF_TOL:
            raise ValueError(f"|c1| = {abs(c1)!r} exceeds 1")
        return FamilySpec(kind="ghz", n=n, coeffs=(c1, complex(math.sqrt(max(rem, 0.0)))))
    # sin / cos
    if len(parts) != 1:
        raise ValueError(f"{kind} spec takes a single qubit count, got {rest!r}")
    return FamilySpec(kind=kind, n=_parse_int(parts[0], "n"))
