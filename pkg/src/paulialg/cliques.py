"""Partition an operator's Pauli words into mutually commuting cliques.

Greedy first-fit over the anticommutation structure: terms are visited
in descending coefficient magnitude (canonical key order on ties, and
symbolic coefficients count as magnitude 1), and each joins the first
clique whose every member commutes with it, opening a new clique
otherwise. This is a validity baseline, not a minimum clique cover;
general (full) commutation is used, not qubit-wise commutation.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import coeff as cf
from .operator import PauliOperator, _word_tuple
from .pauli import PauliString

__all__ = ["CliquePartition", "partition_commuting", "verify_partition", "format_partition"]


@dataclass
class CliquePartition:
    """Disjoint commuting cliques of symplectic keys covering an operator."""

    num_qubits: int
    term_count: int
    cliques: list[list[tuple[int, int]]]

    def __len__(self) -> int:
        return len(self.cliques)


def _keys_commute(ka: tuple[int, int], kb: tuple[int, int], mask: int) -> bool:
    xa, ya = ka
    xb, yb = kb
    nxa = xa ^ mask
    nya = ya ^ mask
    nxb = xb ^ mask
    nyb = yb ^ mask
    f_plus = (nxa & xb & ya & yb) ^ (xa & nxb & nya & yb) ^ (xa & xb & ya & nyb)
    f_minus = (nxa & xb & ya & nyb) ^ (xa & nxb & ya & yb) ^ (xa & xb & nya & yb)
    return not ((f_plus ^ f_minus).bit_count() & 1)


def partition_commuting(h: PauliOperator) -> CliquePartition:
    """Deterministic greedy partition of h's words into commuting cliques."""
    n = h.num_qubits
    mask = (1 << n) - 1
    n_words = (n + 63) // 64

    def order(item):
        key, c = item
        mag = abs(complex(c)) if cf.is_number(c) else 1.0
        return (-mag, _word_tuple(key[0], n_words), _word_tuple(key[1], n_words))

    cliques: list[list[tuple[int, int]]] = []
    for key, _ in sorted(h.terms.items(), key=order):
        for clique in cliques:
            if all(_keys_commute(key, member, mask) for member in clique):
                clique.append(key)
                break
        else:
            cliques.append([key])
    return CliquePartition(n, len(h.terms), cliques)


def verify_partition(partition: CliquePartition, h: PauliOperator) -> bool:
    """Check every partition invariant using only the bitwise commute test:
    cliques are disjoint, cover exactly h's key set, agree with h's shape,
    and are pairwise commuting inside."""
    if partition.num_qubits != h.num_qubits or partition.term_count != len(h.terms):
        return False
    seen: set[tuple[int, int]] = set()
    total = 0
    for clique in partition.cliques:
        total += len(clique)
        seen.update(clique)
    if total != len(seen) or seen != set(h.terms):
        return False
    mask = (1 << h.num_qubits) - 1
    for clique in partition.cliques:
        for i in range(len(clique)):
            for j in range(i + 1, len(clique)):
                if not _keys_commute(clique[i], clique[j], mask):
                    return False
    return True


def format_partition(partition: CliquePartition) -> str:
    """One clique per line, words separated by ';'."""
    lines = []
    for clique in partition.cliques:
        lines.append(";".join(PauliString(partition.num_qubits, *k).word() for k in clique))
    return "\n".join(lines) + "\n"
