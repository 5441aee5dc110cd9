"""Shared test utilities: random inputs and dense-matrix composition."""

from __future__ import annotations

import random

import numpy as np

from paulialg import Circuit, PauliOperator, PauliString, dense


def all_strings(num_qubits: int) -> list[PauliString]:
    """Every Pauli word on num_qubits, in (x, y) scan order."""
    size = 1 << num_qubits
    return [PauliString(num_qubits, x, y) for x in range(size) for y in range(size)]


def random_string(rng: random.Random, num_qubits: int) -> PauliString:
    return PauliString(num_qubits, rng.getrandbits(num_qubits), rng.getrandbits(num_qubits))


def random_operator(
    rng: random.Random,
    num_qubits: int,
    max_terms: int,
    complex_coeffs: bool = True,
) -> PauliOperator:
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        key = (rng.getrandbits(num_qubits), rng.getrandbits(num_qubits))
        c = rng.uniform(-1, 1) + (1j * rng.uniform(-1, 1) if complex_coeffs else 0)
        terms[key] = terms.get(key, 0j) + c
    return PauliOperator(num_qubits, terms)


def circuit_matrix(circuit: Circuit) -> np.ndarray:
    """Full unitary of a circuit, leftmost gate applied first."""
    dim = 2 ** circuit.num_qubits
    u = np.eye(dim, dtype=complex)
    for gate in circuit.gates:
        u = dense.rotation_matrix(gate) @ u
    return u
