"""Structural transformations: rotations, circuit folding, controlled
generators, and generator gradients.

A Gate is a rotation exp(-i theta/2 P) described by its generator word P
and the angle theta (numeric radians or a symbolic expression). A
Circuit lists gates in application order, leftmost applied first.

Conjugating a word Q through a rotation with generator P leaves Q alone
when [P, Q] = 0 and otherwise splits it into cos(theta) Q plus
i sin(theta) P Q; folding a circuit into an operator applies that gate
by gate from the tail, so fold(H, [U1..UL], k) returns the conjugation
of H through UL..U(k+1) together with the untouched prefix [U1..Uk].

Circuit file format:

    circuit v1 qubits=<N>
    rot ; <word> ; <coeff>
"""

from __future__ import annotations

import math
import numbers
import re as _re
from dataclasses import dataclass

from . import coeff as cf
from .operator import PauliOperator, _pruned
from .pauli import PHASES, PauliString

__all__ = [
    "Gate",
    "Circuit",
    "rotate_conjugate",
    "clifford_fold",
    "fold_circuit",
    "controlled_generator",
    "gradient_operator",
]

CLIFFORD_ANGLE_TOL = 1e-9


@dataclass(frozen=True)
class Gate:
    """A Pauli rotation: generator word plus angle coefficient."""

    generator: PauliString
    angle: cf.Coefficient


@dataclass(frozen=True)
class Circuit:
    """Ordered Pauli rotations, leftmost applied first."""

    num_qubits: int
    gates: tuple[Gate, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "gates", tuple(self.gates))
        for g in self.gates:
            if g.generator.num_qubits != self.num_qubits:
                raise ValueError(
                    f"gate on {g.generator.num_qubits} qubits in a {self.num_qubits}-qubit circuit"
                )

    def __len__(self) -> int:
        return len(self.gates)

    def __iter__(self):
        return iter(self.gates)

    def dumps(self) -> str:
        lines = [f"circuit v1 qubits={self.num_qubits}"]
        for g in self.gates:
            lines.append(f"rot ; {g.generator.word()} ; {cf.format_coefficient(g.angle)}")
        return "\n".join(lines) + "\n"

    def save(self, path) -> None:
        with open(path, "w", encoding="utf-8") as f:
            f.write(self.dumps())

    @classmethod
    def loads(cls, text: str) -> "Circuit":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if not lines:
            raise ValueError("empty circuit file")
        m = _HEADER_RE.match(lines[0].strip())
        if not m:
            raise ValueError(f"bad circuit header: {lines[0]!r}")
        n = int(m.group(1))
        gates = []
        for ln in lines[1:]:
            fields = [f.strip() for f in ln.split(";")]
            if len(fields) != 3 or fields[0] != "rot":
                raise ValueError(f"bad gate line: {ln!r}")
            word = PauliString.from_word(fields[1], n)
            angle = cf.parse_coefficient(fields[2])
            gates.append(Gate(word, angle))
        return cls(n, tuple(gates))

    @classmethod
    def load(cls, path) -> "Circuit":
        with open(path, "r", encoding="utf-8") as f:
            return cls.loads(f.read())


_HEADER_RE = _re.compile(r"circuit v1 qubits=(\d+)\Z")


def _check_gate(h: PauliOperator, gate: Gate) -> None:
    if gate.generator.num_qubits != h.num_qubits:
        raise ValueError(
            f"qubit-count mismatch: gate on {gate.generator.num_qubits}, operator on {h.num_qubits}"
        )


def _acc_add(acc: dict, key, c) -> None:
    prev = acc.get(key)
    acc[key] = c if prev is None else cf.add(prev, c)


def rotate_conjugate(h: PauliOperator, gate: Gate) -> PauliOperator:
    """Conjugate h through the rotation: returns U(theta)^dag h U(theta).

    Commuting terms pass through; an anticommuting term (c, Q) becomes
    cos(theta) (c, Q) + i sin(theta) (c i^e, R) with (e, R) = P*Q.
    Symbolic angles produce Cos/Sin expression coefficients.
    """
    _check_gate(h, gate)
    n = h.num_qubits
    mask = (1 << n) - 1
    xp, yp = gate.generator.key
    nxp = xp ^ mask
    nyp = yp ^ mask
    cos_t = cf.cos(gate.angle)
    i_sin_t = cf.mul(1j, cf.sin(gate.angle))
    acc: dict = {}
    for (xq, yq), c in h.terms.items():
        nxq = xq ^ mask
        nyq = yq ^ mask
        f_plus = (nxp & xq & yp & yq) ^ (xp & nxq & nyp & yq) ^ (xp & xq & yp & nyq)
        f_minus = (nxp & xq & yp & nyq) ^ (xp & nxq & yp & yq) ^ (xp & xq & nyp & yq)
        tau = f_plus.bit_count() - f_minus.bit_count()
        if not (tau & 1):
            _acc_add(acc, (xq, yq), c)
            continue
        _acc_add(acc, (xq, yq), cf.mul(c, cos_t))
        phase = PHASES[tau & 3]
        _acc_add(acc, (xp ^ xq, yp ^ yq), cf.mul(cf.mul(c, phase), i_sin_t))
    return _pruned(n, acc)


def clifford_fold(h: PauliOperator, gate: Gate) -> PauliOperator:
    """Conjugation through a Clifford rotation (angle a multiple of pi/2).

    cos/sin collapse to exact 0/+-1, so every term maps to exactly one
    term and the term count is preserved.
    """
    _check_gate(h, gate)
    angle = gate.angle
    if not isinstance(angle, numbers.Complex):
        raise TypeError("clifford_fold requires a numeric angle")
    theta = complex(angle)
    if abs(theta.imag) > 0:
        raise ValueError(f"rotation angle must be real, got {angle!r}")
    k = round(theta.real / (math.pi / 2))
    if abs(theta.real - k * (math.pi / 2)) > CLIFFORD_ANGLE_TOL:
        raise ValueError(
            f"angle {theta.real!r} is not a multiple of pi/2 (within {CLIFFORD_ANGLE_TOL})"
        )
    k &= 3
    cos_t = (1, 0, -1, 0)[k]
    sin_t = (0, 1, 0, -1)[k]
    n = h.num_qubits
    mask = (1 << n) - 1
    xp, yp = gate.generator.key
    nxp = xp ^ mask
    nyp = yp ^ mask
    acc: dict = {}
    for (xq, yq), c in h.terms.items():
        nxq = xq ^ mask
        nyq = yq ^ mask
        f_plus = (nxp & xq & yp & yq) ^ (xp & nxq & nyp & yq) ^ (xp & xq & yp & nyq)
        f_minus = (nxp & xq & yp & nyq) ^ (xp & nxq & yp & yq) ^ (xp & xq & nyp & yq)
        tau = f_plus.bit_count() - f_minus.bit_count()
        if not (tau & 1):
            _acc_add(acc, (xq, yq), c)
        elif sin_t == 0:
            _acc_add(acc, (xq, yq), cf.mul(c, float(cos_t)))
        else:
            # i * i^e * sin with sin = +-1: an exact unit phase
            unit = PHASES[(tau + 1) & 3] * sin_t
            _acc_add(acc, (xp ^ xq, yp ^ yq), cf.mul(c, unit))
    return _pruned(n, acc)


def fold_circuit(h: PauliOperator, circuit: Circuit, split_at: int = 0) -> tuple[PauliOperator, Circuit]:
    """Fold the circuit tail [split_at:] into h; keep the prefix as remainder.

    Gates are consumed from the end (the gate applied last is conjugated
    first), so fold_circuit(h, c, 0) is the full Heisenberg-picture
    operator and fold_circuit(h, c, len(c)) returns h unchanged.
    """
    if h.num_qubits != circuit.num_qubits:
        raise ValueError(
            f"qubit-count mismatch: operator on {h.num_qubits}, circuit on {circuit.num_qubits}"
        )
    if not 0 <= split_at <= len(circuit.gates):
        raise IndexError(f"split_at {split_at} out of range [0, {len(circuit.gates)}]")
    folded = h
    for gate in reversed(circuit.gates[split_at:]):
        folded = rotate_conjugate(folded, gate)
    return folded, Circuit(circuit.num_qubits, circuit.gates[:split_at])


def controlled_generator(g: PauliOperator, control: int) -> PauliOperator:
    """Generator of the controlled version: (1 - Z_control) * g / 2.

    Every term of g must act as identity on the control qubit; the term
    count exactly doubles.
    """
    if not 0 <= control < g.num_qubits:
        raise IndexError(f"control qubit {control} out of range for {g.num_qubits} qubits")
    bit = 1 << control
    for (x, y) in g.terms:
        if (x | y) & bit:
            raise ValueError(f"generator acts non-trivially on control qubit {control}")
    acc: dict = {}
    for (x, y), c in g.terms.items():
        half = cf.mul(c, 0.5)
        acc[(x, y)] = half
        acc[(x | bit, y | bit)] = cf.neg(half)
    return _pruned(g.num_qubits, acc)


def gradient_operator(h: PauliOperator, g: PauliOperator) -> PauliOperator:
    """Operator whose expectation is the angle derivative of <h> at zero
    angle of a trailing gate generated by g: (1/4) [h, g]."""
    return h.commutator(g).scalar_mul(0.25)
