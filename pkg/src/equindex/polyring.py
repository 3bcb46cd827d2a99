"""Exact multivariate polynomials over Q.

Polynomials are sparse maps from dense exponent tuples to nonzero
``Fraction`` coefficients.  Two monomial orders are provided: the global
degree reverse lexicographic order and its local counterpart, negative
degree reverse lexicographic, in which 1 is the largest monomial.
"""

from __future__ import annotations

import enum
import itertools
import re
from fractions import Fraction
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence, Union

Monomial = tuple  # dense exponent vector
Scalar = Union[int, Fraction]


class MonomialOrder(enum.Enum):
    GLOBAL_DEGREVLEX = "global"
    LOCAL_NEGDEGREVLEX = "local"

    @property
    def is_local(self) -> bool:
        return self is MonomialOrder.LOCAL_NEGDEGREVLEX

    def key(self, m: Monomial):
        """Sort key; a larger key means a larger monomial."""
        rev = tuple(-e for e in reversed(m))
        if self is MonomialOrder.GLOBAL_DEGREVLEX:
            return (sum(m), rev)
        return (-sum(m), rev)

    def compare(self, a: Monomial, b: Monomial) -> int:
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)


GLOBAL = MonomialOrder.GLOBAL_DEGREVLEX
LOCAL = MonomialOrder.LOCAL_NEGDEGREVLEX


def monomial_divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def monomial_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


class Polynomial:
    """Immutable polynomial in ``nvars`` variables with rational coefficients."""

    __slots__ = ("nvars", "_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, Scalar] | None = None, nvars: int = 0):
        clean = {}
        for m, c in (terms or {}).items():
            m = tuple(int(e) for e in m)
            if len(m) != nvars:
                raise ValueError(f"exponent vector {m} does not have length {nvars}")
            if any(e < 0 for e in m):
                raise ValueError(f"negative exponent in {m}")
            c = Fraction(c)
            if c:
                clean[m] = clean.get(m, 0) + c
                if not clean[m]:
                    del clean[m]
        self.nvars = nvars
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict, nvars: int) -> Polynomial:
        # trusted constructor: terms already canonical
        p = cls.__new__(cls)
        p.nvars = nvars
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def zero(cls, nvars: int) -> Polynomial:
        return cls._raw({}, nvars)

    @classmethod
    def constant(cls, c: Scalar, nvars: int) -> Polynomial:
        c = Fraction(c)
        return cls._raw({(0,) * nvars: c} if c else {}, nvars)

    @classmethod
    def variable(cls, i: int, nvars: int) -> Polynomial:
        m = [0] * nvars
        m[i] = 1
        return cls._raw({tuple(m): Fraction(1)}, nvars)

    @classmethod
    def monomial(cls, exponents: Sequence[int], coeff: Scalar = 1) -> Polynomial:
        return cls({tuple(exponents): coeff}, len(exponents))

    @property
    def terms(self) -> Mapping[Monomial, Fraction]:
        return MappingProxyType(self._terms)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and not any(next(iter(self._terms))))

    def constant_term(self) -> Fraction:
        return self._terms.get((0,) * self.nvars, Fraction(0))

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(m) for m in self._terms), default=-1)

    def order(self) -> int:
        """Lowest total degree of a term (the order of vanishing at 0)."""
        return min((sum(m) for m in self._terms), default=-1)

    # ring operations

    def _coerce(self, other) -> Polynomial:
        if isinstance(other, Polynomial):
            if other.nvars != self.nvars:
                raise ValueError(f"ring mismatch: {self.nvars} vs {other.nvars} variables")
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(other, self.nvars)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for m, c in other._terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Polynomial._raw(out, self.nvars)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw({m: -c for m, c in self._terms.items()}, self.nvars)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                s = out.get(m, 0) + c1 * c2
                if s:
                    out[m] = s
                else:
                    del out[m]
        return Polynomial._raw(out, self.nvars)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not polynomials")
        result = Polynomial.constant(1, self.nvars)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, c: Scalar) -> Polynomial:
        c = Fraction(c)
        if not c:
            return Polynomial.zero(self.nvars)
        return Polynomial._raw({m: c * v for m, v in self._terms.items()}, self.nvars)

    def mul_term(self, m: Monomial, c: Fraction) -> Polynomial:
        """Multiply by the single term ``c * x^m``."""
        return Polynomial._raw(
            {tuple(a + b for a, b in zip(k, m)): c * v for k, v in self._terms.items()}, self.nvars
        )

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.nvars == other.nvars and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == Polynomial.constant(other, self.nvars)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self._terms.items())))
        return self._hash

    # order-dependent data

    def leading_monomial(self, order: MonomialOrder) -> Monomial:
        if not self._terms:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self._terms, key=order.key)

    def leading_term(self, order: MonomialOrder) -> tuple[Monomial, Fraction]:
        m = self.leading_monomial(order)
        return m, self._terms[m]

    def monic(self, order: MonomialOrder) -> Polynomial:
        if not self._terms:
            return self
        _, c = self.leading_term(order)
        return self if c == 1 else self.scale(1 / c)

    def sorted_terms(self, order: MonomialOrder = GLOBAL) -> list[tuple[Monomial, Fraction]]:
        return sorted(self._terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    # calculus and substitution

    def partial_derivative(self, s: int) -> Polynomial:
        return partial_derivative(self, s)

    def substitute_zero(self, coordinates: Iterable[int]) -> Polynomial:
        return substitute_zero(self, coordinates)

    def evaluate(self, point: Sequence[Scalar]) -> Fraction:
        total = Fraction(0)
        for m, c in self._terms.items():
            v = c
            for x, e in zip(point, m):
                if e:
                    v *= Fraction(x) ** e
            total += v
        return total

    def to_string(self, names: Sequence[str] | None = None) -> str:
        return format_polynomial(self, names)

    def __str__(self):
        return format_polynomial(self)

    def __repr__(self):
        return f"Polynomial({format_polynomial(self)!r}, nvars={self.nvars})"


def partial_derivative(p: Polynomial, s: int) -> Polynomial:
    if not 0 <= s < p.nvars:
        raise IndexError(f"coordinate {s} out of range for {p.nvars} variables")
    out = {}
    for m, c in p.terms.items():
        e = m[s]
        if e:
            d = list(m)
            d[s] = e - 1
            out[tuple(d)] = c * e
    return Polynomial._raw(out, p.nvars)


def substitute_zero(p: Polynomial, coordinates: Iterable[int]) -> Polynomial:
    """Set the listed coordinates to zero and drop them from the ring."""
    dropped = set(coordinates)
    for s in dropped:
        if not 0 <= s < p.nvars:
            raise IndexError(f"coordinate {s} out of range for {p.nvars} variables")
    keep = [s for s in range(p.nvars) if s not in dropped]
    out = {}
    for m, c in p.terms.items():
        if all(m[s] == 0 for s in dropped):
            out[tuple(m[s] for s in keep)] = c
    return Polynomial._raw(out, len(keep))


def determinant(matrix: Sequence[Sequence[Polynomial]]) -> Polynomial:
    """Exact determinant by cofactor expansion along rows.

    Minors of the trailing rows are memoized by column subset, so the cost is
    ``O(n 2^n)`` polynomial products instead of ``n!``.
    """
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        raise ValueError("empty matrix: ring unknown")
    nvars = matrix[0][0].nvars
    memo: dict = {}

    def minor(r: int, cols: tuple) -> Polynomial:
        if r == n:
            return Polynomial.constant(1, nvars)
        if cols in memo:
            return memo[cols]
        total = Polynomial.zero(nvars)
        for pos, c in enumerate(cols):
            entry = matrix[r][c]
            if entry.is_zero():
                continue
            sub = minor(r + 1, cols[:pos] + cols[pos + 1:])
            if sub.is_zero():
                continue
            term = entry * sub
            total = total - term if pos % 2 else total + term
        memo[cols] = total
        return total

    return minor(0, tuple(range(n)))


def maximal_minors(matrix: Sequence[Sequence[Polynomial]]) -> list[Polynomial]:
    """All q x q minors of a p x q matrix (p >= q), row subsets in lex order."""
    p = len(matrix)
    q = len(matrix[0]) if p else 0
    if q > p:
        raise ValueError(f"matrix is {p} x {q}; need at least as many rows as columns")
    return [determinant([matrix[r] for r in rows]) for rows in itertools.combinations(range(p), q)]


# text form

def default_names(nvars: int) -> list[str]:
    return [f"x{i + 1}" for i in range(nvars)]


def _format_coefficient(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_polynomial(p: Polynomial, names: Sequence[str] | None = None) -> str:
    """Render in the parser's grammar, terms in descending degrevlex order."""
    if names is None:
        names = default_names(p.nvars)
    if p.is_zero():
        return "0"
    pieces = []
    for m, c in p.sorted_terms(GLOBAL):
        factors = [n if e == 1 else f"{n}^{e}" for n, e in zip(names, m) if e]
        mag = abs(c)
        if not factors:
            body = _format_coefficient(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = _format_coefficient(mag) + "*" + "*".join(factors)
        if not pieces:
            pieces.append(("-" if c < 0 else "") + body)
        else:
            pieces.append(("- " if c < 0 else "+ ") + body)
    return " ".join(pieces)


class ParseError(ValueError):
    def __init__(self, message: str, position: int, text: str = ""):
        super().__init__(f"{message} at position {position}")
        self.position = position
        self.text = text


class UnknownVariableError(ParseError):
    pass


_TOKEN = re.compile(
    r"\s*(?:(?P<number>\d+(?:/\d+)?)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*^()]))"
)


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            bad = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[bad]!r}", bad, text)
        kind = m.lastgroup
        start = m.start(kind)
        tokens.append((kind, m.group(kind), start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    """Recursive descent over the grammar

        expr   := term (('+' | '-') term)*
        term   := unary ('*' unary)*
        unary  := ('-' | '+') unary | power
        power  := atom ('^' INTEGER)?
        atom   := NUMBER | NAME | '(' expr ')'
    """

    def __init__(self, text: str, variables: Sequence[str]):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0
        self.index = {name: k for k, name in enumerate(variables)}
        self.nvars = len(variables)

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def fail(self, message: str, tok=None):
        tok = tok or self.peek()
        raise ParseError(message, tok[2], self.text)

    def parse(self) -> Polynomial:
        if self.peek()[0] == "end":
            self.fail("empty expression")
        result = self.expr()
        if self.peek()[0] != "end":
            self.fail(f"unexpected token {self.peek()[1]!r}")
        return result

    def expr(self) -> Polynomial:
        result = self.term()
        while self.peek()[1] in ("+", "-") and self.peek()[0] == "op":
            op = self.take()[1]
            rhs = self.term()
            result = result + rhs if op == "+" else result - rhs
        return result

    def term(self) -> Polynomial:
        result = self.unary()
        while self.peek()[0] == "op" and self.peek()[1] == "*":
            self.take()
            result = result * self.unary()
        return result

    def unary(self) -> Polynomial:
        tok = self.peek()
        if tok[0] == "op" and tok[1] in ("-", "+"):
            self.take()
            inner = self.unary()
            return -inner if tok[1] == "-" else inner
        return self.power()

    def power(self) -> Polynomial:
        base = self.atom()
        tok = self.peek()
        if tok[0] == "op" and tok[1] == "^":
            self.take()
            exp = self.take()
            if exp[0] != "number" or "/" in exp[1]:
                self.fail("exponent must be a non-negative integer", exp)
            return base ** int(exp[1])
        return base

    def atom(self) -> Polynomial:
        tok = self.take()
        kind, value, pos = tok
        if kind == "number":
            num, _, den = value.partition("/")
            if den and int(den) == 0:
                raise ParseError("division by zero in rational literal", pos, self.text)
            return Polynomial.constant(Fraction(int(num), int(den or 1)), self.nvars)
        if kind == "name":
            if value not in self.index:
                raise UnknownVariableError(f"unknown variable {value!r}", pos, self.text)
            return Polynomial.variable(self.index[value], self.nvars)
        if kind == "op" and value == "(":
            inner = self.expr()
            close = self.take()
            if close[0] != "op" or close[1] != ")":
                self.fail("expected ')'", close)
            return inner
        if kind == "end":
            self.fail("unexpected end of input", tok)
        self.fail(f"unexpected token {value!r}", tok)


def parse(text: str, variables: Sequence[str]) -> Polynomial:
    """Parse a polynomial expression over the named variables.

    >>> parse("-3/2*x*y + y^3", ["x", "y"]).to_string(["x", "y"])
    'y^3 - 3/2*x*y'
    """
    return _Parser(text, list(variables)).parse()
