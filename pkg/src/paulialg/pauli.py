"""Bit-packed symplectic Pauli strings and their bitwise algebra.

An N-qubit Pauli word is stored as two little-endian bit vectors held in
arbitrary-precision Python integers:

    x bit i = 1  iff qubit i carries X or Z
    y bit i = 1  iff qubit i carries Y or Z

so per qubit (x_i, y_i) decodes as (0,0)=I, (1,0)=X, (0,1)=Y, (1,1)=Z.
Qubit i lives at bit (i % 64) of 64-bit word (i // 64); the ``x_words`` /
``y_words`` properties expose exactly that packing. Bits at positions
>= num_qubits are always zero (constructors mask them off), so the
(x_bits, y_bits) pair is a canonical hashable key.

The product of two words is the XOR of their bit vectors. The global
phase is i**e, where e is recovered from two popcounts over the masks of
qubits whose local product contributes +i or -i. Two words commute iff
the +i and -i contributions cancel mod 2, which makes the commutator a
single XOR, two popcounts, and a parity check.

Qubit indices are 0-based everywhere in this package.
"""

from __future__ import annotations

from typing import Iterable, Optional

__all__ = [
    "PauliString",
    "PHASES",
    "phase_masks",
    "multiply",
    "commutes",
    "commutator",
    "parse_word",
    "format_word",
]

_M64 = (1 << 64) - 1

#: i**e for phase exponents e = 0, 1, 2, 3.
PHASES = (1 + 0j, 1j, -1 + 0j, -1j)

_LETTER_TO_BITS = {"X": (1, 0), "Y": (0, 1), "Z": (1, 1)}
_BITS_TO_LETTER = {(1, 0): "X", (0, 1): "Y", (1, 1): "Z"}


class PauliString:
    """An N-qubit Pauli word in symplectic (x, y) bit-vector form.

    Instances are immutable value objects: two strings are equal iff they
    have the same qubit count and identical bit vectors. They hash on the
    same triple and are safe to share across threads.
    """

    __slots__ = ("num_qubits", "x_bits", "y_bits")

    def __init__(self, num_qubits: int, x_bits: int = 0, y_bits: int = 0):
        if num_qubits < 0:
            raise ValueError("num_qubits must be non-negative")
        if x_bits < 0 or y_bits < 0:
            raise ValueError("bit vectors must be non-negative integers")
        mask = (1 << num_qubits) - 1
        self.num_qubits = num_qubits
        self.x_bits = x_bits & mask
        self.y_bits = y_bits & mask

    # ---- constructors ----

    @classmethod
    def identity(cls, num_qubits: int) -> "PauliString":
        return cls(num_qubits)

    @classmethod
    def encode(cls, letters: Iterable[tuple[int, str]], num_qubits: int) -> "PauliString":
        """Build a word from (qubit_index, letter) pairs; unlisted qubits are I.

        Raises IndexError for an index outside [0, num_qubits) and
        ValueError for a duplicate index or an unknown letter.
        """
        x = 0
        y = 0
        seen = 0
        for idx, letter in letters:
            if not 0 <= idx < num_qubits:
                raise IndexError(f"qubit index {idx} out of range for {num_qubits} qubits")
            bit = 1 << idx
            if seen & bit:
                raise ValueError(f"duplicate qubit index {idx}")
            seen |= bit
            try:
                xb, yb = _LETTER_TO_BITS[letter]
            except KeyError:
                raise ValueError(f"unknown Pauli letter {letter!r} (expected X, Y, or Z)") from None
            if xb:
                x |= bit
            if yb:
                y |= bit
        return cls(num_qubits, x, y)

    @classmethod
    def from_word(cls, text: str, num_qubits: Optional[int] = None) -> "PauliString":
        """Parse the word grammar: "I" or ascending letter-index tokens like "X0 Z3".

        If num_qubits is omitted it is inferred as (max index + 1), or 0
        for the bare identity word.
        """
        tokens = text.split()
        if not tokens:
            raise ValueError("empty Pauli word (use 'I' for the identity)")
        if tokens == ["I"]:
            return cls(num_qubits if num_qubits is not None else 0)
        letters = []
        last = -1
        for tok in tokens:
            letter, idx_text = tok[:1], tok[1:]
            if letter not in _LETTER_TO_BITS or not idx_text.isdigit():
                raise ValueError(f"malformed Pauli token {tok!r}")
            idx = int(idx_text)
            if idx <= last:
                raise ValueError(f"qubit indices must be strictly ascending (token {tok!r})")
            last = idx
            letters.append((idx, letter))
        if num_qubits is None:
            num_qubits = last + 1
        return cls.encode(letters, num_qubits)

    # ---- views ----

    def decode(self) -> list[tuple[int, str]]:
        """(qubit_index, letter) pairs for non-identity sites, ascending."""
        out = []
        x = self.x_bits
        y = self.y_bits
        rest = x | y
        while rest:
            low = rest & -rest
            i = low.bit_length() - 1
            out.append((i, _BITS_TO_LETTER[(x >> i) & 1, (y >> i) & 1]))
            rest ^= low
        return out

    def word(self) -> str:
        """Canonical text form: "I" or ascending tokens like "X0 Z3"."""
        if not (self.x_bits | self.y_bits):
            return "I"
        return " ".join(f"{letter}{i}" for i, letter in self.decode())

    def bit_string(self) -> str:
        """Bit-vector view "x|y" with qubit 0 printed leftmost in each block."""
        x = "".join("1" if (self.x_bits >> i) & 1 else "0" for i in range(self.num_qubits))
        y = "".join("1" if (self.y_bits >> i) & 1 else "0" for i in range(self.num_qubits))
        return f"{x}|{y}"

    def weight(self) -> int:
        """Number of non-identity sites."""
        return (self.x_bits | self.y_bits).bit_count()

    def is_identity(self) -> bool:
        return not (self.x_bits | self.y_bits)

    def pad_to(self, num_qubits: int) -> "PauliString":
        """Extend with identity qubits up to num_qubits."""
        if num_qubits < self.num_qubits:
            raise ValueError(f"cannot shrink a {self.num_qubits}-qubit string to {num_qubits}")
        return PauliString(num_qubits, self.x_bits, self.y_bits)

    @property
    def key(self) -> tuple[int, int]:
        """Hashable (x_bits, y_bits) pair identifying this word among equals."""
        return (self.x_bits, self.y_bits)

    @property
    def word_count(self) -> int:
        return (self.num_qubits + 63) // 64

    @property
    def x_words(self) -> tuple[int, ...]:
        """x bit vector as 64-bit words, word 0 holding qubits 0..63."""
        return tuple((self.x_bits >> (64 * w)) & _M64 for w in range(self.word_count))

    @property
    def y_words(self) -> tuple[int, ...]:
        return tuple((self.y_bits >> (64 * w)) & _M64 for w in range(self.word_count))

    # ---- value semantics ----

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PauliString):
            return NotImplemented
        return (
            self.num_qubits == other.num_qubits
            and self.x_bits == other.x_bits
            and self.y_bits == other.y_bits
        )

    def __hash__(self) -> int:
        return hash((self.num_qubits, self.x_bits, self.y_bits))

    def __repr__(self) -> str:
        return f"PauliString({self.num_qubits}, {self.word()!r})"


def _check_same_qubits(p: PauliString, q: PauliString) -> None:
    if p.num_qubits != q.num_qubits:
        raise ValueError(f"qubit-count mismatch: {p.num_qubits} vs {q.num_qubits}")


def phase_masks(p: PauliString, q: PauliString) -> tuple[int, int]:
    """Masks (F_plus, F_minus) of qubits whose local product contributes +i / -i.

    The two masks are disjoint by construction: each of the three
    conjunctive terms selects a distinct (x, x') pattern.
    """
    _check_same_qubits(p, q)
    mask = (1 << p.num_qubits) - 1
    xa, ya = p.x_bits, p.y_bits
    xb, yb = q.x_bits, q.y_bits
    nxa = xa ^ mask
    nya = ya ^ mask
    nxb = xb ^ mask
    nyb = yb ^ mask
    f_plus = (nxa & xb & ya & yb) ^ (xa & nxb & nya & yb) ^ (xa & xb & ya & nyb)
    f_minus = (nxa & xb & ya & nyb) ^ (xa & nxb & ya & yb) ^ (xa & xb & nya & yb)
    return f_plus, f_minus


def multiply(p: PauliString, q: PauliString) -> tuple[int, PauliString]:
    """Product p*q as (phase_exponent, word): M(p) @ M(q) == i**e * M(word).

    The word is the XOR of the bit vectors; e is the popcount difference
    of the +i/-i masks reduced into {0, 1, 2, 3}.
    """
    f_plus, f_minus = phase_masks(p, q)
    e = (f_plus.bit_count() - f_minus.bit_count()) & 3
    return e, PauliString(p.num_qubits, p.x_bits ^ q.x_bits, p.y_bits ^ q.y_bits)


def commutes(p: PauliString, q: PauliString) -> bool:
    """True iff p and q commute (the +i/-i contribution count is even)."""
    f_plus, f_minus = phase_masks(p, q)
    return not ((f_plus ^ f_minus).bit_count() & 1)


def commutator(p: PauliString, q: PauliString) -> Optional[tuple[complex, PauliString]]:
    """[p, q] as (2 * i**e, word), or None when p and q commute.

    Uses a single multiplication: when the words anticommute,
    p*q - q*p == 2 * (p*q), so no second product is formed.
    """
    f_plus, f_minus = phase_masks(p, q)
    tau = f_plus.bit_count() - f_minus.bit_count()
    if not (tau & 1):
        return None
    coeff = 2.0 * PHASES[tau & 3]
    return coeff, PauliString(p.num_qubits, p.x_bits ^ q.x_bits, p.y_bits ^ q.y_bits)


def parse_word(text: str, num_qubits: Optional[int] = None) -> PauliString:
    """Alias for PauliString.from_word."""
    return PauliString.from_word(text, num_qubits)


def format_word(p: PauliString) -> str:
    """Alias for PauliString.word()."""
    return p.word()
