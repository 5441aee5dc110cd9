"""Numeric and symbolic coefficients for weighted Pauli words.

A coefficient is either a plain number (the numeric fast path, held as a
Python complex) or an immutable expression tree over real-valued
parameters with node kinds Const, Param, Neg, Add, Mul, Sin, Cos.

Trees are kept in a small normal form by the smart constructors:
constants fold, additive/multiplicative identities collapse, like terms
in sums merge, Add/Mul are flattened and carry at most one leading Const
child, and Neg never wraps Neg or Const. A tree that folds all the way
down to a constant is returned as a plain complex, so a symbolic
coefficient never wraps a pure constant. Anything beyond that (trig
identities, factoring) is deliberately out of scope.

Parameters are real-valued by convention (they stand for rotation
angles), which is what makes ``conjugate`` well-defined on trees.

Text form, round-trip exact for trees produced here:

    (+ e1 e2 ...)  (* e1 e2 ...)  (neg e)  (sin e)  (cos e)
    (const <re> <im>)  (param <name>)

and for numeric coefficients the pair form ``(<re>,<im>)``.
"""

from __future__ import annotations

import cmath
import math
import re as _re
from dataclasses import dataclass
from typing import Mapping, Union

__all__ = [
    "Const",
    "Param",
    "Neg",
    "Add",
    "Mul",
    "Sin",
    "Cos",
    "Expr",
    "Coefficient",
    "add",
    "mul",
    "neg",
    "sin",
    "cos",
    "conjugate",
    "differentiate",
    "substitute",
    "evaluate",
    "is_zero",
    "is_number",
    "simplify",
    "parameters",
    "format_expr",
    "parse_expr",
    "format_coefficient",
    "parse_coefficient",
]

_NAME_RE = _re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


@dataclass(frozen=True, slots=True)
class Const:
    value: complex

    def __post_init__(self):
        v = complex(self.value)
        if not (math.isfinite(v.real) and math.isfinite(v.imag)):
            raise ValueError(f"constant must be finite, got {v!r}")
        object.__setattr__(self, "value", v)


@dataclass(frozen=True, slots=True)
class Param:
    """A named real-valued parameter (rotation angle)."""

    name: str

    def __post_init__(self):
        if not _NAME_RE.match(self.name):
            raise ValueError(f"invalid parameter name {self.name!r}")


@dataclass(frozen=True, slots=True)
class Neg:
    child: "Expr"


@dataclass(frozen=True, slots=True)
class Add:
    children: tuple["Expr", ...]


@dataclass(frozen=True, slots=True)
class Mul:
    children: tuple["Expr", ...]


@dataclass(frozen=True, slots=True)
class Sin:
    child: "Expr"


@dataclass(frozen=True, slots=True)
class Cos:
    child: "Expr"


Expr = Union[Const, Param, Neg, Add, Mul, Sin, Cos]
Coefficient = Union[complex, Expr]

EXPR_TYPES = (Const, Param, Neg, Add, Mul, Sin, Cos)
_NUMBER_TYPES = (int, float, complex)


def is_number(c: Coefficient) -> bool:
    return isinstance(c, _NUMBER_TYPES)


def _to_expr(c: Coefficient) -> Expr:
    return Const(complex(c)) if isinstance(c, _NUMBER_TYPES) else c


def _from_expr(e: Expr) -> Coefficient:
    return e.value if isinstance(e, Const) else e


# ---- smart constructors (normal-form preserving) ----


def _split_factor(e: Expr) -> tuple[complex, Union[Expr, None]]:
    """Split e as factor * core; core is None for pure constants."""
    if isinstance(e, Const):
        return e.value, None
    if isinstance(e, Neg):
        f, core = _split_factor(e.child)
        return -f, core
    if isinstance(e, Mul) and isinstance(e.children[0], Const):
        rest = e.children[1:]
        core = rest[0] if len(rest) == 1 else Mul(rest)
        return e.children[0].value, core
    return 1 + 0j, e


def _scaled(core: Expr, factor: complex) -> Expr:
    if factor == 1:
        return core
    if factor == -1:
        return Neg(core)
    return mul_expr(Const(factor), core)


def add_expr(*children: Expr) -> Expr:
    """Flattened, constant-folded, like-term-merged sum."""
    flat: list[Expr] = []
    for c in children:
        if isinstance(c, Add):
            flat.extend(c.children)
        else:
            flat.append(c)
    const = 0j
    factors: dict[Expr, complex] = {}
    order: list[Expr] = []
    for c in flat:
        f, core = _split_factor(c)
        if core is None:
            const += f
        else:
            if core not in factors:
                order.append(core)
                factors[core] = f
            else:
                factors[core] += f
    terms = [_scaled(core, factors[core]) for core in order if factors[core] != 0]
    if not terms:
        return Const(const)
    if const != 0:
        terms.insert(0, Const(const))
    if len(terms) == 1:
        return terms[0]
    return Add(tuple(terms))


def mul_expr(*children: Expr) -> Expr:
    """Flattened product with at most one leading Const; 0 annihilates."""
    const = 1 + 0j
    rest: list[Expr] = []
    stack = list(reversed(children))
    while stack:
        c = stack.pop()
        if isinstance(c, Mul):
            stack.extend(reversed(c.children))
        elif isinstance(c, Neg):
            const = -const
            stack.append(c.child)
        elif isinstance(c, Const):
            const *= c.value
        else:
            rest.append(c)
    if const == 0 or not rest:
        return Const(const)
    core = rest[0] if len(rest) == 1 else Mul(tuple(rest))
    if const == 1:
        return core
    if const == -1:
        return Neg(core)
    return Mul((Const(const), *rest))


def neg_expr(e: Expr) -> Expr:
    if isinstance(e, Const):
        return Const(-e.value)
    if isinstance(e, Neg):
        return e.child
    return Neg(e)


def sin_expr(e: Expr) -> Expr:
    if isinstance(e, Const):
        return Const(cmath.sin(e.value))
    return Sin(e)


def cos_expr(e: Expr) -> Expr:
    if isinstance(e, Const):
        return Const(cmath.cos(e.value))
    return Cos(e)


def simplify(e: Expr) -> Expr:
    """Rebuild a tree bottom-up through the smart constructors."""
    if isinstance(e, (Const, Param)):
        return e
    if isinstance(e, Neg):
        return neg_expr(simplify(e.child))
    if isinstance(e, Add):
        return add_expr(*(simplify(c) for c in e.children))
    if isinstance(e, Mul):
        return mul_expr(*(simplify(c) for c in e.children))
    if isinstance(e, Sin):
        return sin_expr(simplify(e.child))
    if isinstance(e, Cos):
        return cos_expr(simplify(e.child))
    raise TypeError(f"not an expression node: {e!r}")


# ---- coefficient-level operations ----


def add(a: Coefficient, b: Coefficient) -> Coefficient:
    if isinstance(a, _NUMBER_TYPES) and isinstance(b, _NUMBER_TYPES):
        return complex(a) + complex(b)
    return _from_expr(add_expr(_to_expr(a), _to_expr(b)))


def mul(a: Coefficient, b: Coefficient) -> Coefficient:
    if isinstance(a, _NUMBER_TYPES) and isinstance(b, _NUMBER_TYPES):
        return complex(a) * complex(b)
    return _from_expr(mul_expr(_to_expr(a), _to_expr(b)))


def neg(a: Coefficient) -> Coefficient:
    if isinstance(a, _NUMBER_TYPES):
        return -complex(a)
    return _from_expr(neg_expr(a))


def sin(a: Coefficient) -> Coefficient:
    if isinstance(a, _NUMBER_TYPES):
        return cmath.sin(complex(a))
    return _from_expr(sin_expr(a))


def cos(a: Coefficient) -> Coefficient:
    if isinstance(a, _NUMBER_TYPES):
        return cmath.cos(complex(a))
    return _from_expr(cos_expr(a))


def conjugate(a: Coefficient) -> Coefficient:
    """Complex conjugate; parameters are real so trees conjugate nodewise."""
    if isinstance(a, _NUMBER_TYPES):
        return complex(a).conjugate()
    return _from_expr(_conjugate_expr(a))


def _conjugate_expr(e: Expr) -> Expr:
    if isinstance(e, Const):
        return Const(e.value.conjugate())
    if isinstance(e, Param):
        return e
    if isinstance(e, Neg):
        return neg_expr(_conjugate_expr(e.child))
    if isinstance(e, Add):
        return add_expr(*(_conjugate_expr(c) for c in e.children))
    if isinstance(e, Mul):
        return mul_expr(*(_conjugate_expr(c) for c in e.children))
    if isinstance(e, Sin):
        return sin_expr(_conjugate_expr(e.child))
    if isinstance(e, Cos):
        return cos_expr(_conjugate_expr(e.child))
    raise TypeError(f"not an expression node: {e!r}")


def differentiate(a: Coefficient, name: str) -> Coefficient:
    """Partial derivative with respect to the named parameter."""
    if isinstance(a, _NUMBER_TYPES):
        return 0j
    return _from_expr(_diff_expr(a, name))


def _diff_expr(e: Expr, name: str) -> Expr:
    if isinstance(e, Const):
        return Const(0j)
    if isinstance(e, Param):
        return Const(1 + 0j) if e.name == name else Const(0j)
    if isinstance(e, Neg):
        return neg_expr(_diff_expr(e.child, name))
    if isinstance(e, Add):
        return add_expr(*(_diff_expr(c, name) for c in e.children))
    if isinstance(e, Mul):
        parts = []
        ch = e.children
        for i in range(len(ch)):
            parts.append(mul_expr(*ch[:i], _diff_expr(ch[i], name), *ch[i + 1 :]))
        return add_expr(*parts)
    if isinstance(e, Sin):
        return mul_expr(cos_expr(e.child), _diff_expr(e.child, name))
    if isinstance(e, Cos):
        return mul_expr(neg_expr(sin_expr(e.child)), _diff_expr(e.child, name))
    raise TypeError(f"not an expression node: {e!r}")


def substitute(a: Coefficient, bindings: Mapping[str, complex]) -> Coefficient:
    """Replace bound parameters by constants; folds as far as possible."""
    if isinstance(a, _NUMBER_TYPES):
        return complex(a)
    return _from_expr(_subst_expr(a, bindings))


def _subst_expr(e: Expr, bindings: Mapping[str, complex]) -> Expr:
    if isinstance(e, Const):
        return e
    if isinstance(e, Param):
        if e.name in bindings:
            return Const(complex(bindings[e.name]))
        return e
    if isinstance(e, Neg):
        return neg_expr(_subst_expr(e.child, bindings))
    if isinstance(e, Add):
        return add_expr(*(_subst_expr(c, bindings) for c in e.children))
    if isinstance(e, Mul):
        return mul_expr(*(_subst_expr(c, bindings) for c in e.children))
    if isinstance(e, Sin):
        return sin_expr(_subst_expr(e.child, bindings))
    if isinstance(e, Cos):
        return cos_expr(_subst_expr(e.child, bindings))
    raise TypeError(f"not an expression node: {e!r}")


def evaluate(a: Coefficient, bindings: Mapping[str, complex] | None = None) -> complex:
    """Numeric value under a full binding; unbound parameters raise KeyError."""
    if isinstance(a, _NUMBER_TYPES):
        return complex(a)
    return _eval_expr(a, bindings or {})


def _eval_expr(e: Expr, bindings: Mapping[str, complex]) -> complex:
    if isinstance(e, Const):
        return e.value
    if isinstance(e, Param):
        try:
            return complex(bindings[e.name])
        except KeyError:
            raise KeyError(f"unbound parameter {e.name!r}") from None
    if isinstance(e, Neg):
        return -_eval_expr(e.child, bindings)
    if isinstance(e, Add):
        return sum(_eval_expr(c, bindings) for c in e.children)
    if isinstance(e, Mul):
        out = 1 + 0j
        for c in e.children:
            out *= _eval_expr(c, bindings)
        return out
    if isinstance(e, Sin):
        return cmath.sin(_eval_expr(e.child, bindings))
    if isinstance(e, Cos):
        return cmath.cos(_eval_expr(e.child, bindings))
    raise TypeError(f"not an expression node: {e!r}")


def parameters(a: Coefficient) -> set[str]:
    """Names of all parameters appearing in the coefficient."""
    if isinstance(a, _NUMBER_TYPES):
        return set()
    out: set[str] = set()
    stack = [a]
    while stack:
        e = stack.pop()
        if isinstance(e, Param):
            out.add(e.name)
        elif isinstance(e, (Neg, Sin, Cos)):
            stack.append(e.child)
        elif isinstance(e, (Add, Mul)):
            stack.extend(e.children)
    return out


def is_zero(a: Coefficient, tol: float = 0.0) -> bool:
    """Numeric: |a| <= tol. Symbolic: structural zero only.

    Normal-form trees never reduce to a bare constant, so a symbolic
    coefficient is reported nonzero; deciding symbolic zero in general is
    out of scope.
    """
    if tol < 0:
        raise ValueError("tolerance must be non-negative")
    if isinstance(a, _NUMBER_TYPES):
        return abs(complex(a)) <= tol
    return isinstance(a, Const) and abs(a.value) <= tol


# ---- text form ----


def format_expr(e: Expr) -> str:
    """Prefix text form, round-trip exact through parse_expr."""
    if isinstance(e, Const):
        return f"(const {e.value.real!r} {e.value.imag!r})"
    if isinstance(e, Param):
        return f"(param {e.name})"
    if isinstance(e, Neg):
        return f"(neg {format_expr(e.child)})"
    if isinstance(e, Add):
        return "(+ " + " ".join(format_expr(c) for c in e.children) + ")"
    if isinstance(e, Mul):
        return "(* " + " ".join(format_expr(c) for c in e.children) + ")"
    if isinstance(e, Sin):
        return f"(sin {format_expr(e.child)})"
    if isinstance(e, Cos):
        return f"(cos {format_expr(e.child)})"
    raise TypeError(f"not an expression node: {e!r}")


def parse_expr(text: str) -> Expr:
    """Parse the prefix text form; normalizes through the smart constructors."""
    tokens = text.replace("(", " ( ").replace(")", " ) ").split()
    expr, pos = _parse_tokens(tokens, 0)
    if pos != len(tokens):
        raise ValueError(f"trailing tokens after expression: {' '.join(tokens[pos:])!r}")
    return expr


def _parse_float(tok: str) -> float:
    try:
        v = float(tok)
    except ValueError:
        raise ValueError(f"expected a number, got {tok!r}") from None
    if not math.isfinite(v):
        raise ValueError(f"number must be finite, got {tok!r}")
    return v


def _parse_tokens(tokens: list[str], pos: int) -> tuple[Expr, int]:
    if pos >= len(tokens):
        raise ValueError("unexpected end of expression")
    if tokens[pos] != "(":
        raise ValueError(f"expected '(', got {tokens[pos]!r}")
    pos += 1
    if pos >= len(tokens):
        raise ValueError("unexpected end of expression")
    head = tokens[pos]
    pos += 1
    if head == "const":
        re_v = _parse_float(tokens[pos])
        im_v = _parse_float(tokens[pos + 1])
        pos += 2
        node: Expr = Const(complex(re_v, im_v))
    elif head == "param":
        node = Param(tokens[pos])
        pos += 1
    elif head in ("neg", "sin", "cos"):
        child, pos = _parse_tokens(tokens, pos)
        node = {"neg": neg_expr, "sin": sin_expr, "cos": cos_expr}[head](child)
    elif head in ("+", "*"):
        children = []
        while pos < len(tokens) and tokens[pos] != ")":
            child, pos = _parse_tokens(tokens, pos)
            children.append(child)
        if len(children) < 2:
            raise ValueError(f"'{head}' needs at least two operands")
        node = add_expr(*children) if head == "+" else mul_expr(*children)
    else:
        raise ValueError(f"unknown expression head {head!r}")
    if pos >= len(tokens) or tokens[pos] != ")":
        raise ValueError("expected ')'")
    return node, pos + 1


_NUM_PAIR_RE = _re.compile(r"\(\s*([^\s,()]+)\s*,\s*([^\s,()]+)\s*\)\Z")


def format_coefficient(c: Coefficient) -> str:
    """Numeric -> "(<re>,<im>)" with shortest round-trip floats; else expr text."""
    if isinstance(c, _NUMBER_TYPES):
        v = complex(c)
        return f"({v.real!r},{v.imag!r})"
    return format_expr(c)


def parse_coefficient(text: str) -> Coefficient:
    text = text.strip()
    m = _NUM_PAIR_RE.match(text)
    if m:
        return complex(_parse_float(m.group(1)), _parse_float(m.group(2)))
    return _from_expr(parse_expr(text))
