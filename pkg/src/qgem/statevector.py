"""Dense complex state vectors for systems of up to 24 qubits.

Amplitudes are indexed by the computational basis with qubit 1 as the most
significant bit, so the index of the ket string |b1 b2 ... bn> is
sum_i b_i * 2**(n - 1 - i) and ket strings read left to right.  State vectors
are immutable after construction and every operation here is a pure function.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

MAX_QUBITS = 24
NORM_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class StateVector:
    """A pure state of ``n`` qubits held as 2**n complex amplitudes.

    Construct through :func:`make_state`, which enforces the length and
    normalization invariants; the raw constructor only freezes the array.
    """

    n: int
    amps: np.ndarray

    def __post_init__(self):
        a = np.array(self.amps, dtype=np.complex128)
        a.setflags(write=False)
        object.__setattr__(self, "amps", a)

    @property
    def dim(self) -> int:
        return 1 << self.n


def make_state(n: int, amps: Sequence[complex] | np.ndarray, normalize: bool = False) -> StateVector:
    """Build a validated StateVector from raw amplitudes.

    With ``normalize=True`` the amplitudes are divided by their Euclidean
    norm (the zero vector is rejected); otherwise the squared norm must
    already be 1 within 1e-12.
    """
    if not isinstance(n, int) or n < 1 or n > MAX_QUBITS:
        raise ValueError(f"qubit count must be an integer in 1..{MAX_QUBITS}, got {n!r}")
    a = np.asarray(amps, dtype=np.complex128).ravel()
    if a.size != 1 << n:
        raise ValueError(f"length mismatch: expected {1 << n} amplitudes for n={n}, got {a.size}")
    if not np.isfinite(a).all():
        raise ValueError("amplitudes must be finite (no NaN or infinity)")
    norm = float(np.linalg.norm(a))
    if normalize:
        if norm <= 1e-15:
            raise ValueError("cannot normalize the zero vector")
        a = a / norm
    elif abs(norm * norm - 1.0) > NORM_TOL:
        raise ValueError(f"state not normalized: sum of squared moduli is {norm * norm!r}")
    return StateVector(n, a)


def basis_index(bits: Iterable[int]) -> int:
    """Index of the basis ket whose bit string is ``bits`` (qubit 1 first)."""
    idx = 0
    for b in bits:
        if b not in (0, 1):
            raise ValueError(f"basis bits must be 0 or 1, got {b!r}")
        idx = (idx << 1) | b
    return idx


def basis_bits(index: int, n: int) -> tuple[int, ...]:
    """Bit string of basis ket ``index`` for ``n`` qubits, qubit 1 first."""
    if not 0 <= index < (1 << n):
        raise ValueError(f"basis index {index} out of range for n={n}")
    return tuple((index >> (n - 1 - i)) & 1 for i in range(n))


def ket_label(index: int, n: int) -> str:
    """Ket string such as '100' for the given basis index."""
    if not 0 <= index < (1 << n):
        raise ValueError(f"basis index {index} out of range for n={n}")
    return format(index, f"0{n}b")


def inner_product(bra: StateVector, ket: StateVector) -> complex:
    """Scalar product <bra|ket>, conjugate-linear in the first argument."""
    if bra.n != ket.n:
        raise ValueError(f"dimension mismatch: {bra.n} vs {ket.n} qubits")
    return complex(np.vdot(bra.amps, ket.amps))


def tensor(left: StateVector, right: StateVector) -> StateVector:
    """Tensor product; ``left`` occupies the more significant bits."""
    if left.n + right.n > MAX_QUBITS:
        raise ValueError(f"tensor product exceeds {MAX_QUBITS} qubits")
    return StateVector(left.n + right.n, np.kron(left.amps, right.amps))


def dumps_state(psi: StateVector) -> str:
    """Serialize to the JSON state-file format (17 significant digits)."""
    rows = ",\n    ".join(f"[{a.real:.17g}, {a.imag:.17g}]" for a in psi.amps)
    return '{\n  "n": %d,\n  "amps": [\n    %s\n  ]\n}\n' % (psi.n, rows)


def loads_state(text: str) -> StateVector:
    """Parse the JSON state-file format produced by :func:`dumps_state`."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"invalid state file: {exc}") from exc
    if not isinstance(doc, dict) or "n" not in doc or "amps" not in doc:
        raise ValueError("state file must be an object with fields 'n' and 'amps'")
    n = doc["n"]
    if not isinstance(n, int):
        raise ValueError(f"field 'n' must be an integer, got {n!r}")
    pairs = doc["amps"]
    if not isinstance(pairs, list):
        raise ValueError("field 'amps' must be an array of [re, im] pairs")
    amps = np.empty(len(pairs), dtype=np.complex128)
    for j, pair in enumerate(pairs):
        if not (isinstance(pair, list) and len(pair) == 2
                and all(isinstance(x, (int, float)) for x in pair)):
            raise ValueError(f"amplitude {j} is not a [re, im] pair: {pair!r}")
        amps[j] = complex(pair[0], pair[1])
    return make_state(n, amps, normalize=False)


def save_state(psi: StateVector, path: str | Path) -> None:
    Path(path).write_text(dumps_state(psi), encoding="utf-8")


def load_state(path: str | Path) -> StateVector:
    return loads_state(Path(path).read_text(encoding="utf-8"))
