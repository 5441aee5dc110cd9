"""The pauli-tool file-format CLI used by foreign wrappers."""

import random
import subprocess
import sys

from paulialg import Circuit, Gate, PauliOperator, PauliString, fold_circuit, lie_closure
from paulialg import structure_constants as struct_const
from paulialg.coeff import Param

from helpers import random_operator


def run_tool(*args):
    return subprocess.run(
        [sys.executable, "-m", "paulialg.cli", *args],
        capture_output=True, text=True,
    )


def test_mul_matches_library(tmp_path):
    rng = random.Random(5)
    a = random_operator(rng, 4, 10)
    b = random_operator(rng, 4, 10)
    a.save(tmp_path / "a.txt")
    b.save(tmp_path / "b.txt")
    proc = run_tool("mul", str(tmp_path / "a.txt"), str(tmp_path / "b.txt"))
    assert proc.returncode == 0, proc.stderr
    assert PauliOperator.loads(proc.stdout) == a * b


def test_add_commutator_dagger(tmp_path):
    rng = random.Random(6)
    a = random_operator(rng, 3, 8)
    b = random_operator(rng, 3, 8)
    a.save(tmp_path / "a.txt")
    b.save(tmp_path / "b.txt")
    out = run_tool("add", str(tmp_path / "a.txt"), str(tmp_path / "b.txt"))
    assert PauliOperator.loads(out.stdout) == a + b
    out = run_tool("commutator", str(tmp_path / "a.txt"), str(tmp_path / "b.txt"))
    assert PauliOperator.loads(out.stdout) == a.commutator(b)
    out = run_tool("dagger", str(tmp_path / "a.txt"))
    assert PauliOperator.loads(out.stdout) == a.dagger()


def test_scalar_mul_and_out_file(tmp_path):
    a = PauliOperator(1, {"X0": 2.0})
    a.save(tmp_path / "a.txt")
    proc = run_tool(
        "scalar-mul", str(tmp_path / "a.txt"),
        "--coeff", "(0.0,1.0)", "-o", str(tmp_path / "r.txt"),
    )
    assert proc.returncode == 0, proc.stderr
    assert PauliOperator.load(tmp_path / "r.txt") == a.scalar_mul(1j)


def test_substitute_and_differentiate(tmp_path):
    h = PauliOperator(1, {"Z0": Param("a")})
    h.save(tmp_path / "h.txt")
    proc = run_tool("substitute", str(tmp_path / "h.txt"), "--bind", "a=0.5")
    assert PauliOperator.loads(proc.stdout) == PauliOperator(1, {"Z0": 0.5})
    proc = run_tool("differentiate", str(tmp_path / "h.txt"), "--param", "a")
    assert PauliOperator.loads(proc.stdout) == PauliOperator(1, {"Z0": 1.0})


def test_fold(tmp_path):
    h = PauliOperator(2, {"Z0": 1.0})
    c = Circuit(2, (Gate(PauliString.from_word("X0", 2), 0.3),))
    h.save(tmp_path / "h.txt")
    c.save(tmp_path / "c.txt")
    proc = run_tool(
        "fold", str(tmp_path / "h.txt"), str(tmp_path / "c.txt"),
        "--split-at", "0", "--remainder", str(tmp_path / "rest.txt"),
    )
    assert proc.returncode == 0, proc.stderr
    folded, rest = fold_circuit(h, c, 0)
    assert PauliOperator.loads(proc.stdout) == folded
    assert Circuit.load(tmp_path / "rest.txt") == rest


def test_lie_closure_and_struct_const(tmp_path):
    words = tmp_path / "gens.txt"
    words.write_text("X0 X1\nZ0\nZ1\n")
    proc = run_tool("lie-closure", str(words), "--qubits", "2")
    assert proc.returncode == 0, proc.stderr
    basis = lie_closure([PauliString.from_word(w, 2) for w in ["X0 X1", "Z0", "Z1"]])
    assert proc.stdout == basis.dumps()
    proc = run_tool("struct-const", str(words), "--qubits", "2")
    assert proc.stdout == struct_const(basis).dumps_csv()


def test_cliques(tmp_path):
    h = PauliOperator(2, {"X0": 1.0, "Z0": 1.0, "X1": 1.0})
    h.save(tmp_path / "h.txt")
    proc = run_tool("cliques", str(tmp_path / "h.txt"))
    assert proc.stdout == "X0;X1\nZ0\n"


def test_normalize_merges_and_orders(tmp_path):
    (tmp_path / "raw.txt").write_text(
        "pauli-op v1 qubits=1\n(1.0,0.0) ; Z0\n(2.0,0.0) ; X0\n(0.5,0.0) ; X0\n"
    )
    proc = run_tool("normalize", str(tmp_path / "raw.txt"))
    assert proc.returncode == 0, proc.stderr
    assert proc.stdout == "pauli-op v1 qubits=1\n(2.5,0.0) ; X0\n(1.0,0.0) ; Z0\n"


def test_runtime_error_exits_1(tmp_path):
    (tmp_path / "bad.txt").write_text("not an operator\n")
    proc = run_tool("dagger", str(tmp_path / "bad.txt"))
    assert proc.returncode == 1
    assert "header" in proc.stderr


def test_mismatched_operands_exit_1(tmp_path):
    PauliOperator(2, {"X0": 1.0}).save(tmp_path / "a.txt")
    PauliOperator(3, {"X0": 1.0}).save(tmp_path / "b.txt")
    proc = run_tool("mul", str(tmp_path / "a.txt"), str(tmp_path / "b.txt"))
    assert proc.returncode == 1
    assert "mismatch" in proc.stderr


def test_usage_error_exits_2():
    proc = run_tool("definitely-not-a-command")
    assert proc.returncode == 2
