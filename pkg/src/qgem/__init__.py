"""Geometric measure of entanglement of one qubit with the rest of a pure state.

The measure E = 1 - max |<psi|psi_s>|^2 over product states psi_s has a
closed form for a qubit-versus-rest cut; this package computes it, builds
the classic highly entangled n-qubit families, and checks everything
against two independent numerical oracles.
"""
from .statevector import (StateVector, make_state, inner_product, tensor, basis_index,
                          basis_bits, ket_label, dumps_state, loads_state, save_state,
                          load_state, MAX_QUBITS)
from .decompose import (QubitBasis, QubitSplit, split_qubit, reassemble, standard_bases,
                        COMPUTATIONAL, FLIPPED, X_BASIS)
from .measure import (EntanglementResult, EntanglementProfile, entanglement_closed_form,
                      geometric_entanglement, entanglement_profile, closest_product_state,
                      concurrence_two_qubit, entanglement_from_concurrence)
from .families import (FamilySpec, werner, dicke, ghz, trig_sin, trig_cos,
                       predicted_entanglement, build_state, parse_family_spec)
from .oracle import (ReducedDensity, GridSearchReport, reduced_density, eigen_oracle,
                     grid_oracle, random_state)

__version__ = "0.1.0"

__all__ = [
    "StateVector", "make_state", "inner_product", "tensor", "basis_index", "basis_bits",
    "ket_label", "dumps_state", "loads_state", "save_state", "load_state", "MAX_QUBITS",
    "QubitBasis", "QubitSplit", "split_qubit", "reassemble", "standard_bases",
    "COMPUTATIONAL", "FLIPPED", "X_BASIS",
    "EntanglementResult", "EntanglementProfile", "entanglement_closed_form",
    "geometric_entanglement", "entanglement_profile", "closest_product_state",
    "concurrence_two_qubit", "entanglement_from_concurrence",
    "FamilySpec", "werner", "dicke", "ghz", "trig_sin", "trig_cos",
    "predicted_entanglement", "build_state", "parse_family_spec",
    "ReducedDensity", "GridSearchReport", "reduced_density", "eigen_oracle",
    "grid_oracle", "random_state",
]
