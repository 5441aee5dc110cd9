"""Dense-matrix reference implementations for small-system verification.

Everything here is deliberately brute force: Kronecker products, full
2^N x 2^N matrices, and a rank-based Lie-closure count. These are the
oracles the bitwise algebra is checked against in the test suite, so
they share no code with the fast paths.

Convention: qubit 0 is the leftmost tensor factor, so the matrix of a
word on qubits (0, 1) is kron(M(qubit 0), M(qubit 1)).
"""

from __future__ import annotations

import numbers

import numpy as np

from . import coeff as cf
from .pauli import PauliString

__all__ = [
    "PAULI_1Q",
    "MAX_QUBITS",
    "to_matrix",
    "op_to_matrix",
    "rotation_matrix",
    "matrix_closure",
]

PAULI_1Q = {
    "I": np.eye(2, dtype=complex),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
}

MAX_QUBITS = 12
_CLOSURE_MAX_QUBITS = 5


def to_matrix(p: PauliString) -> np.ndarray:
    """2^N x 2^N matrix of a Pauli word (entries in {0, +-1, +-i})."""
    if p.num_qubits > MAX_QUBITS:
        raise ValueError(f"dense matrices limited to {MAX_QUBITS} qubits, got {p.num_qubits}")
    letters = dict(p.decode())
    m = np.ones((1, 1), dtype=complex)
    for i in range(p.num_qubits):
        m = np.kron(m, PAULI_1Q[letters.get(i, "I")])
    return m


def op_to_matrix(h) -> np.ndarray:
    """Matrix of a numeric PauliOperator (symbolic coefficients are an error)."""
    if h.num_qubits > MAX_QUBITS:
        raise ValueError(f"dense matrices limited to {MAX_QUBITS} qubits, got {h.num_qubits}")
    dim = 2 ** h.num_qubits
    out = np.zeros((dim, dim), dtype=complex)
    for key, c in h.terms.items():
        if not cf.is_number(c):
            raise TypeError("op_to_matrix requires numeric coefficients")
        out += complex(c) * to_matrix(PauliString(h.num_qubits, *key))
    return out


def rotation_matrix(gate) -> np.ndarray:
    """U = cos(theta/2) I - i sin(theta/2) M(P) for a numeric-angle gate."""
    angle = gate.angle
    if isinstance(angle, numbers.Complex):
        if abs(complex(angle).imag) > 0:
            raise ValueError(f"rotation angle must be real, got {angle!r}")
        theta = complex(angle).real
    else:
        raise TypeError("rotation_matrix requires a numeric angle")
    p = gate.generator
    dim = 2 ** p.num_qubits
    return np.cos(theta / 2) * np.eye(dim, dtype=complex) - 1j * np.sin(theta / 2) * to_matrix(p)


def matrix_closure(generators, tol: float = 1e-9) -> int:
    """Dimension of the real Lie algebra generated by {i*G} under commutators.

    Works on explicit matrices with repeated rank (orthogonalization)
    checks, exactly the expensive baseline the bitwise closure avoids.
    Only usable at desk scale (up to 5 qubits).
    """
    mats_in = [np.asarray(g, dtype=complex) for g in generators]
    if not mats_in:
        raise ValueError("empty generator list")
    dim = mats_in[0].shape[0]
    if dim > 2 ** _CLOSURE_MAX_QUBITS:
        raise ValueError(f"matrix closure limited to {_CLOSURE_MAX_QUBITS} qubits")

    basis_vecs: list[np.ndarray] = []
    mats: list[np.ndarray] = []

    def vec(m: np.ndarray) -> np.ndarray:
        return np.concatenate([m.real.ravel(), m.imag.ravel()])

    def try_add(m: np.ndarray) -> bool:
        v = vec(m)
        norm = float(np.linalg.norm(v))
        if norm <= tol:
            return False
        v = v / norm
        for _ in range(2):  # re-orthogonalize for numerical safety
            for b in basis_vecs:
                v = v - (b @ v) * b
        resid = float(np.linalg.norm(v))
        if resid <= tol:
            return False
        basis_vecs.append(v / resid)
        mats.append(m / norm)
        return True

    for g in mats_in:
        try_add(1j * g)
    i = 1
    while i < len(mats):
        for j in range(i):
            try_add(mats[i] @ mats[j] - mats[j] @ mats[i])
        i += 1
    return len(mats)
