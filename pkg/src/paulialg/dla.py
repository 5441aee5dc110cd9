"""Lie closure of Pauli-word generator sets and sparse structure constants.

The closure works entirely on symplectic keys: a worklist pairs every
element with every earlier one, and each nonzero commutator is a single
new Pauli word whose membership is one dictionary lookup. No matrices,
no linear algebra, no rank checks.

Basis convention: elements are stored as Hermitian Pauli words P (the
anti-Hermitian algebra element is understood as iP), and the structure
constants of [h_a, h_b] = sum_g f_ab^g h_g come out in {+2i, -2i}. The
equivalent anti-Hermitian convention (h = iP) has real constants
f_real = -i * f_stored; only the Hermitian-basis values are stored so
signs cannot drift. Since basis words are unit Pauli words, the
Hilbert-Schmidt normalization cancels and no inner product is evaluated.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .pauli import PHASES, PauliString

__all__ = [
    "DlaBasis",
    "StructureConstants",
    "lie_closure",
    "structure_constants",
    "build_so2n_generators",
]


@dataclass
class DlaBasis:
    """Ordered closure basis: generators first, then discovery order."""

    num_qubits: int
    elements: list[PauliString]
    index: dict[tuple[int, int], int] = field(repr=False)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def dumps(self) -> str:
        """Basis export: one word per line in basis order."""
        return "\n".join(p.word() for p in self.elements) + "\n"

    def save(self, path) -> None:
        with open(path, "w", encoding="utf-8") as f:
            f.write(self.dumps())


@dataclass
class StructureConstants:
    """Sparse tensor entries (alpha, beta, gamma, value), (alpha, beta) ascending.

    At most one gamma exists per (alpha, beta) because the commutator of
    two Pauli words is a single word; values are +-2i.
    """

    dim: int
    entries: list[tuple[int, int, int, complex]]

    def as_dict(self) -> dict[tuple[int, int], tuple[int, complex]]:
        return {(a, b): (g, v) for a, b, g, v in self.entries}

    def dumps_csv(self) -> str:
        lines = ["alpha,beta,gamma,re,im"]
        for a, b, g, v in self.entries:
            lines.append(f"{a},{b},{g},{v.real!r},{v.imag!r}")
        return "\n".join(lines) + "\n"

    def save_csv(self, path) -> None:
        with open(path, "w", encoding="utf-8") as f:
            f.write(self.dumps_csv())


def lie_closure(generators: Sequence[PauliString]) -> DlaBasis:
    """Smallest set of Pauli words containing the generators and closed
    under (nonzero) commutators.

    Generators must be single Pauli words: closures of sum-valued
    generators would need linear-independence machinery that the
    dictionary-based approach deliberately avoids. The identity word is
    rejected (it is central and never a basis member).
    """
    if not generators:
        raise ValueError("empty generator list")
    for g in generators:
        if not isinstance(g, PauliString):
            raise TypeError(
                "generators must be single Pauli strings (PauliString); "
                "operator sums are not supported by the dictionary-based closure"
            )
    n = generators[0].num_qubits
    for g in generators:
        if g.num_qubits != n:
            raise ValueError(f"qubit-count mismatch: {g.num_qubits} vs {n}")
        if g.is_identity():
            raise ValueError("the identity word cannot be a generator")

    elements: list[PauliString] = []
    keys: list[tuple[int, int]] = []
    index: dict[tuple[int, int], int] = {}
    for g in generators:
        if g.key not in index:
            index[g.key] = len(elements)
            elements.append(g)
            keys.append(g.key)

    mask = (1 << n) - 1
    i = 1
    while i < len(keys):
        xa, ya = keys[i]
        nxa = xa ^ mask
        nya = ya ^ mask
        for j in range(i):
            xb, yb = keys[j]
            nxb = xb ^ mask
            nyb = yb ^ mask
            f_plus = (nxa & xb & ya & yb) ^ (xa & nxb & nya & yb) ^ (xa & xb & ya & nyb)
            f_minus = (nxa & xb & ya & nyb) ^ (xa & nxb & ya & yb) ^ (xa & xb & nya & yb)
            if not ((f_plus ^ f_minus).bit_count() & 1):
                continue
            key = (xa ^ xb, ya ^ yb)
            if key not in index:
                index[key] = len(keys)
                keys.append(key)
                elements.append(PauliString(n, *key))
        i += 1
    return DlaBasis(n, elements, index)


def structure_constants(basis: DlaBasis) -> StructureConstants:
    """Adjoint-representation tensor of a closed basis.

    For each anticommuting pair (alpha < beta) there is exactly one
    gamma with [h_alpha, h_beta] = 2 i^e h_gamma; both orientations are
    emitted with opposite sign. Raises if a commutator leaves the basis.
    """
    n = basis.num_qubits
    mask = (1 << n) - 1
    keys = [p.key for p in basis.elements]
    d = len(keys)
    entries: list[tuple[int, int, int, complex]] = []
    for a in range(d):
        xa, ya = keys[a]
        nxa = xa ^ mask
        nya = ya ^ mask
        for b in range(a + 1, d):
            xb, yb = keys[b]
            nxb = xb ^ mask
            nyb = yb ^ mask
            f_plus = (nxa & xb & ya & yb) ^ (xa & nxb & nya & yb) ^ (xa & xb & ya & nyb)
            f_minus = (nxa & xb & ya & nyb) ^ (xa & nxb & ya & yb) ^ (xa & xb & nya & yb)
            tau = f_plus.bit_count() - f_minus.bit_count()
            if not (tau & 1):
                continue
            key = (xa ^ xb, ya ^ yb)
            g = basis.index.get(key)
            if g is None:
                word = PauliString(n, *key).word()
                raise ValueError(
                    f"basis is not closed: [{basis.elements[a].word()}, "
                    f"{basis.elements[b].word()}] lands on {word}"
                )
            v = 2.0 * PHASES[tau & 3]
            entries.append((a, b, g, v))
            entries.append((b, a, g, -v))
    entries.sort(key=lambda r: (r[0], r[1]))
    return StructureConstants(d, entries)


def build_so2n_generators(n: int) -> list[PauliString]:
    """Transverse-field-Ising generator set {X_i X_(i+1)} + {Z_i} on n qubits.

    2n - 1 words whose closure has dimension n(2n - 1).
    """
    if n < 2:
        raise ValueError("need at least 2 qubits")
    gens = [
        PauliString.encode([(i, "X"), (i + 1, "X")], n) for i in range(n - 1)
    ]
    gens += [PauliString.encode([(i, "Z")], n) for i in range(n)]
    return gens
