"""The dense oracle itself: reference matrices, rotations, matrix closure."""

import math

import numpy as np
import pytest

from paulialg import Gate, PauliOperator, PauliString, build_so2n_generators, dense
from paulialg.coeff import Param

X_REF = np.array([[0, 1], [1, 0]], dtype=complex)
Y_REF = np.array([[0, -1j], [1j, 0]], dtype=complex)
Z_REF = np.array([[1, 0], [0, -1]], dtype=complex)


def test_single_qubit_matrices():
    assert np.array_equal(dense.to_matrix(PauliString.from_word("X0", 1)), X_REF)
    assert np.array_equal(dense.to_matrix(PauliString.from_word("Y0", 1)), Y_REF)
    assert np.array_equal(dense.to_matrix(PauliString.from_word("Z0", 1)), Z_REF)


def test_identity_two_qubits():
    assert np.array_equal(dense.to_matrix(PauliString(2)), np.eye(4))


def test_qubit_zero_is_leftmost_factor():
    zi = dense.to_matrix(PauliString.from_word("Z0", 2))
    assert np.array_equal(zi, np.kron(Z_REF, np.eye(2)))
    iz = dense.to_matrix(PauliString.from_word("Z1", 2))
    assert np.array_equal(iz, np.kron(np.eye(2), Z_REF))


def test_to_matrix_size_limit():
    with pytest.raises(ValueError):
        dense.to_matrix(PauliString(13))


def test_op_to_matrix():
    assert np.array_equal(dense.op_to_matrix(PauliOperator.identity(1, 2.0)), 2 * np.eye(2))
    m = dense.op_to_matrix(PauliOperator(1, {"X0": 1.0, "Z0": 1.0}))
    assert np.array_equal(m, np.array([[1, 1], [1, -1]], dtype=complex))


def test_op_to_matrix_linear():
    a = PauliOperator(2, {"X0 Z1": 0.5 - 1j, "Y1": 2.0})
    b = PauliOperator(2, {"Y1": 1j, "I": 0.25})
    lhs = dense.op_to_matrix(a + b)
    rhs = dense.op_to_matrix(a) + dense.op_to_matrix(b)
    assert np.abs(lhs - rhs).max() <= 1e-15


def test_op_to_matrix_rejects_symbolic():
    with pytest.raises(TypeError):
        dense.op_to_matrix(PauliOperator(1, {"X0": Param("a")}))


def test_rotation_matrix_pi_about_x():
    g = Gate(PauliString.from_word("X0", 1), math.pi)
    assert np.allclose(dense.rotation_matrix(g), -1j * X_REF, atol=1e-15)


def test_rotation_matrix_unitary():
    for theta in (0.0, 0.3, -1.7, math.pi / 2, 2.9):
        g = Gate(PauliString.from_word("X0 Y2", 3), theta)
        u = dense.rotation_matrix(g)
        assert np.abs(u @ u.conj().T - np.eye(8)).max() <= 1e-12


def test_rotation_matrix_rejects_symbolic():
    with pytest.raises(TypeError):
        dense.rotation_matrix(Gate(PauliString.from_word("X0", 1), Param("a")))


def test_matrix_closure_examples():
    assert dense.matrix_closure([X_REF]) == 1
    assert dense.matrix_closure([X_REF, Z_REF]) == 3
    mats = [dense.to_matrix(p) for p in build_so2n_generators(2)]
    assert dense.matrix_closure(mats) == 6


def test_matrix_closure_size_limit():
    big = np.eye(64, dtype=complex)
    with pytest.raises(ValueError):
        dense.matrix_closure([big])


def test_dense_module_loads_lazily():
    # importing the package must not pull in numpy; attribute access does
    import subprocess
    import sys

    code = (
        "import sys, paulialg\n"
        "assert 'numpy' not in sys.modules\n"
        "paulialg.dense\n"
        "assert 'numpy' in sys.modules\n"
    )
    proc = subprocess.run([sys.executable, "-c", code], capture_output=True, text=True)
    assert proc.returncode == 0, proc.stderr
