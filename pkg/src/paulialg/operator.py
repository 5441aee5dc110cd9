"""Linear combinations of Pauli words keyed by their symplectic bit pairs.

A PauliOperator maps (x_bits, y_bits) keys to coefficients (plain complex
numbers or expression trees from ``coeff``). Stored terms are never zero:
every constructor and arithmetic result drops coefficients with magnitude
at most the prune tolerance (structural zero for symbolic ones).

Serialization iterates terms in canonical key order: lexicographic over
the 64-bit words of the x vector, then of the y vector, word 0 (qubits
0..63) first. Accumulation order inside products is therefore irrelevant
to the output.

Operator file format (UTF-8 text, round-trip exact for numeric terms):

    pauli-op v1 qubits=<N>
    <coeff> ; <word>

with one term per line in canonical order, coeff as "(<re>,<im>)" or an
expression in prefix form, word in the "X0 Z3" grammar.
"""

from __future__ import annotations

import cmath as _cmath
import re as _re
from concurrent.futures import ThreadPoolExecutor
from typing import Iterable, Iterator, Mapping, Union

from . import coeff as cf
from .pauli import PHASES, PauliString

__all__ = [
    "PauliOperator",
    "DEFAULT_PRUNE_TOL",
    "multiply_with_stats",
    "max_abs_diff",
]

DEFAULT_PRUNE_TOL = 1e-12

_M64 = (1 << 64) - 1

Key = tuple  # (x_bits, y_bits)
TermsLike = Union[Mapping, Iterable, None]


def _word_tuple(bits: int, n_words: int) -> tuple[int, ...]:
    return tuple((bits >> (64 * w)) & _M64 for w in range(n_words))


class PauliOperator:
    """A weighted sum of Pauli words on a fixed qubit count.

    Treat instances as immutable: all arithmetic returns new operators.
    ``terms`` maps (x_bits, y_bits) to a coefficient.
    """

    __slots__ = ("num_qubits", "terms")

    def __init__(self, num_qubits: int, terms: TermsLike = None, prune_tol: float = DEFAULT_PRUNE_TOL):
        """Build from a mapping or iterable of (key-or-PauliString-or-word, coeff).

        Duplicate words accumulate; near-zero coefficients are dropped.
        """
        if num_qubits < 0:
            raise ValueError("num_qubits must be non-negative")
        self.num_qubits = num_qubits
        acc: dict = {}
        if terms is not None:
            items = terms.items() if isinstance(terms, Mapping) else terms
            mask = (1 << num_qubits) - 1
            for label, c in items:
                key = self._as_key(label, mask)
                if cf.is_number(c):
                    v = complex(c)
                    if not _cmath.isfinite(v):
                        raise ValueError(f"coefficient must be finite, got {v!r}")
                    c = v
                elif not isinstance(c, cf.EXPR_TYPES):
                    raise TypeError(f"bad coefficient {c!r}")
                prev = acc.get(key)
                acc[key] = c if prev is None else cf.add(prev, c)
        self.terms = {k: c for k, c in acc.items() if not cf.is_zero(c, prune_tol)}

    def _as_key(self, label, mask: int) -> tuple[int, int]:
        if isinstance(label, PauliString):
            if label.num_qubits != self.num_qubits:
                raise ValueError(f"qubit-count mismatch: {label.num_qubits} vs {self.num_qubits}")
            return label.key
        if isinstance(label, str):
            return PauliString.from_word(label, self.num_qubits).key
        x, y = label
        if x < 0 or y < 0 or (x | y) & ~mask:
            raise ValueError(f"key {label!r} has bits outside {self.num_qubits} qubits")
        return (x, y)

    @classmethod
    def _raw(cls, num_qubits: int, terms: dict) -> "PauliOperator":
        op = object.__new__(cls)
        op.num_qubits = num_qubits
        op.terms = terms
        return op

    # ---- constructors ----

    @classmethod
    def zero(cls, num_qubits: int) -> "PauliOperator":
        return cls._raw(num_qubits, {})

    @classmethod
    def identity(cls, num_qubits: int, coefficient: cf.Coefficient = 1.0) -> "PauliOperator":
        return cls(num_qubits, {(0, 0): coefficient})

    # ---- views ----

    def __len__(self) -> int:
        return len(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    @property
    def is_numeric(self) -> bool:
        return all(cf.is_number(c) for c in self.terms.values())

    def coefficient(self, label) -> cf.Coefficient:
        """Coefficient of a word (PauliString or word text); 0 if absent."""
        mask = (1 << self.num_qubits) - 1
        return self.terms.get(self._as_key(label, mask), 0j)

    def _sort_key(self, key: tuple[int, int]):
        w = (self.num_qubits + 63) // 64
        return (_word_tuple(key[0], w), _word_tuple(key[1], w))

    def sorted_keys(self) -> list[tuple[int, int]]:
        return sorted(self.terms, key=self._sort_key)

    def items(self) -> Iterator[tuple[PauliString, cf.Coefficient]]:
        """(PauliString, coefficient) pairs in canonical key order."""
        for key in self.sorted_keys():
            yield PauliString(self.num_qubits, *key), self.terms[key]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PauliOperator):
            return NotImplemented
        return self.num_qubits == other.num_qubits and self.terms == other.terms

    def __repr__(self) -> str:
        if not self.terms:
            return f"PauliOperator({self.num_qubits}, 0)"
        parts = ", ".join(
            f"{p.word()}: {cf.format_coefficient(c)}" for p, c in self.items()
        )
        return f"PauliOperator({self.num_qubits}, {{{parts}}})"

    # ---- arithmetic ----

    def __add__(self, other: "PauliOperator") -> "PauliOperator":
        if not isinstance(other, PauliOperator):
            return NotImplemented
        _check_same(self, other)
        acc = dict(self.terms)
        for k, c in other.terms.items():
            prev = acc.get(k)
            acc[k] = c if prev is None else cf.add(prev, c)
        return _pruned(self.num_qubits, acc)

    def __sub__(self, other: "PauliOperator") -> "PauliOperator":
        if not isinstance(other, PauliOperator):
            return NotImplemented
        return self + other.scalar_mul(-1.0)

    def __neg__(self) -> "PauliOperator":
        return self.scalar_mul(-1.0)

    def scalar_mul(self, s: cf.Coefficient) -> "PauliOperator":
        if cf.is_number(s):
            v = complex(s)
            if v == 0:
                return PauliOperator.zero(self.num_qubits)
            if self.is_numeric:
                return _pruned(self.num_qubits, {k: v * c for k, c in self.terms.items()})
        return _pruned(self.num_qubits, {k: cf.mul(s, c) for k, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, PauliOperator):
            op, _ = multiply_with_stats(self, other)
            return op
        return self.scalar_mul(other)

    def __rmul__(self, other):
        return self.scalar_mul(other)

    def dagger(self) -> "PauliOperator":
        """Hermitian conjugate: words are invariant, coefficients conjugate."""
        return PauliOperator._raw(
            self.num_qubits, {k: cf.conjugate(c) for k, c in self.terms.items()}
        )

    def commutator(self, other: "PauliOperator") -> "PauliOperator":
        """[self, other], skipping commuting word pairs entirely."""
        _check_same(self, other)
        n = self.num_qubits
        mask = (1 << n) - 1
        numeric = self.is_numeric and other.is_numeric
        b_items = [(xb, yb, xb ^ mask, yb ^ mask, cb) for (xb, yb), cb in other.terms.items()]
        acc: dict = {}
        for (xa, ya), ca in self.terms.items():
            nxa = xa ^ mask
            nya = ya ^ mask
            for xb, yb, nxb, nyb, cb in b_items:
                f_plus = (nxa & xb & ya & yb) ^ (xa & nxb & nya & yb) ^ (xa & xb & ya & nyb)
                f_minus = (nxa & xb & ya & nyb) ^ (xa & nxb & ya & yb) ^ (xa & xb & nya & yb)
                tau = f_plus.bit_count() - f_minus.bit_count()
                if not (tau & 1):
                    continue
                key = (xa ^ xb, ya ^ yb)
                if numeric:
                    c = ca * cb * (2.0 * PHASES[tau & 3])
                    prev = acc.get(key)
                    acc[key] = c if prev is None else prev + c
                else:
                    c = cf.mul(cf.mul(ca, cb), 2.0 * PHASES[tau & 3])
                    prev = acc.get(key)
                    acc[key] = c if prev is None else cf.add(prev, c)
        return _pruned(n, acc)

    # ---- predicates and termwise maps ----

    def is_hermitian(self, tol: float = DEFAULT_PRUNE_TOL) -> bool:
        """True iff every coefficient is real to within tol. Numeric only."""
        return all(abs(c.imag) <= tol for c in self._numeric_values("is_hermitian"))

    def is_anti_hermitian(self, tol: float = DEFAULT_PRUNE_TOL) -> bool:
        """True iff every coefficient is purely imaginary to within tol."""
        return all(abs(c.real) <= tol for c in self._numeric_values("is_anti_hermitian"))

    def _numeric_values(self, what: str) -> list[complex]:
        vals = []
        for c in self.terms.values():
            if not cf.is_number(c):
                raise TypeError(f"{what} requires numeric coefficients; found symbolic term")
            vals.append(complex(c))
        return vals

    def prune(self, tol: float = DEFAULT_PRUNE_TOL) -> "PauliOperator":
        return _pruned(self.num_qubits, dict(self.terms), tol)

    def substitute(self, bindings: Mapping[str, complex]) -> "PauliOperator":
        return _pruned(self.num_qubits, {k: cf.substitute(c, bindings) for k, c in self.terms.items()})

    def differentiate(self, name: str) -> "PauliOperator":
        return _pruned(self.num_qubits, {k: cf.differentiate(c, name) for k, c in self.terms.items()})

    # ---- serialization ----

    def dumps(self) -> str:
        lines = [f"pauli-op v1 qubits={self.num_qubits}"]
        for p, c in self.items():
            lines.append(f"{cf.format_coefficient(c)} ; {p.word()}")
        return "\n".join(lines) + "\n"

    def save(self, path) -> None:
        with open(path, "w", encoding="utf-8") as f:
            f.write(self.dumps())

    @classmethod
    def loads(cls, text: str) -> "PauliOperator":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if not lines:
            raise ValueError("empty operator file")
        m = _HEADER_RE.match(lines[0].strip())
        if not m:
            raise ValueError(f"bad operator header: {lines[0]!r}")
        n = int(m.group(1))
        pairs = []
        for ln in lines[1:]:
            coeff_text, sep, word_text = ln.partition(";")
            if not sep:
                raise ValueError(f"bad term line (missing ';'): {ln!r}")
            c = cf.parse_coefficient(coeff_text.strip())
            pairs.append((word_text.strip(), c))
        return cls(n, pairs)

    @classmethod
    def load(cls, path) -> "PauliOperator":
        with open(path, "r", encoding="utf-8") as f:
            return cls.loads(f.read())


_HEADER_RE = _re.compile(r"pauli-op v1 qubits=(\d+)\Z")


def _check_same(a: PauliOperator, b: PauliOperator) -> None:
    if a.num_qubits != b.num_qubits:
        raise ValueError(f"qubit-count mismatch: {a.num_qubits} vs {b.num_qubits}")


def _pruned(num_qubits: int, acc: dict, tol: float = DEFAULT_PRUNE_TOL) -> PauliOperator:
    return PauliOperator._raw(
        num_qubits, {k: c for k, c in acc.items() if not cf.is_zero(c, tol)}
    )


def _mul_chunk_numeric(a_items, b_items, mask: int, acc: dict) -> None:
    """Accumulate all pairwise products of numeric terms into acc."""
    get = acc.get
    phases = PHASES
    for (xa, ya), ca in a_items:
        nxa = xa ^ mask
        nya = ya ^ mask
        for xb, yb, nxb, nyb, cb in b_items:
            f_plus = (nxa & xb & ya & yb) ^ (xa & nxb & nya & yb) ^ (xa & xb & ya & nyb)
            f_minus = (nxa & xb & ya & nyb) ^ (xa & nxb & ya & yb) ^ (xa & xb & nya & yb)
            key = (xa ^ xb, ya ^ yb)
            c = ca * cb * phases[(f_plus.bit_count() - f_minus.bit_count()) & 3]
            prev = get(key)
            acc[key] = c if prev is None else prev + c


def multiply_with_stats(a: PauliOperator, b: PauliOperator, threads: int = 1) -> tuple[PauliOperator, int]:
    """Operator product plus the peak size of the accumulation map.

    The peak is measured before pruning, so it bounds the transient
    memory of the term map. With threads > 1 the pair loop is split over
    contiguous chunks of ``a`` and merged in chunk order, which keeps the
    key set identical to the sequential result (values agree up to
    floating-point reassociation).
    """
    _check_same(a, b)
    n = a.num_qubits
    mask = (1 << n) - 1
    numeric = a.is_numeric and b.is_numeric
    b_items = [(xb, yb, xb ^ mask, yb ^ mask, cb) for (xb, yb), cb in b.terms.items()]
    if numeric:
        a_items = list(a.terms.items())
        if threads > 1 and len(a_items) > 1:
            n_chunks = min(threads, len(a_items))
            step = (len(a_items) + n_chunks - 1) // n_chunks
            chunks = [a_items[i : i + step] for i in range(0, len(a_items), step)]
            partials = []
            with ThreadPoolExecutor(max_workers=n_chunks) as pool:
                futures = [pool.submit(_mul_part, chunk, b_items, mask) for chunk in chunks]
                partials = [f.result() for f in futures]
            acc = partials[0]
            for part in partials[1:]:
                get = acc.get
                for k, v in part.items():
                    prev = get(k)
                    acc[k] = v if prev is None else prev + v
        else:
            acc = {}
            _mul_chunk_numeric(a_items, b_items, mask, acc)
    else:
        acc = {}
        for (xa, ya), ca in a.terms.items():
            nxa = xa ^ mask
            nya = ya ^ mask
            for xb, yb, nxb, nyb, cb in b_items:
                f_plus = (nxa & xb & ya & yb) ^ (xa & nxb & nya & yb) ^ (xa & xb & ya & nyb)
                f_minus = (nxa & xb & ya & nyb) ^ (xa & nxb & ya & yb) ^ (xa & xb & nya & yb)
                e = (f_plus.bit_count() - f_minus.bit_count()) & 3
                key = (xa ^ xb, ya ^ yb)
                c = cf.mul(cf.mul(ca, cb), PHASES[e])
                prev = acc.get(key)
                acc[key] = c if prev is None else cf.add(prev, c)
    peak = len(acc)
    return _pruned(n, acc), peak


def _mul_part(a_items, b_items, mask: int) -> dict:
    acc: dict = {}
    _mul_chunk_numeric(a_items, b_items, mask, acc)
    return acc


def max_abs_diff(a: PauliOperator, b: PauliOperator) -> float:
    """Largest |coefficient difference| over the union of keys (numeric only)."""
    _check_same(a, b)
    worst = 0.0
    for k in a.terms.keys() | b.terms.keys():
        ca = complex(a.terms.get(k, 0j))
        cb = complex(b.terms.get(k, 0j))
        worst = max(worst, abs(ca - cb))
    return worst
