"""Sparse multivariate polynomials with exact rational coefficients.

A polynomial stores a dict mapping exponent tuples to nonzero ``Fraction``
coefficients; the zero polynomial has an empty term map, so equality is
structural.  The module also provides the graded lexicographic monomial
order, single-divisor normal forms, an expression parser, and a matching
pretty-printer.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

Monomial = tuple[int, ...]

_SCALAR_TYPES = (int, Fraction)


def monomial_degree(m: Monomial) -> int:
    return sum(m)


def monomial_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def monomial_divides(a: Monomial, b: Monomial) -> bool:
    """Whether ``x^a`` divides ``x^b``."""
    return all(x <= y for x, y in zip(a, b))


def monomial_div(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x - y for x, y in zip(a, b))


class GradedLexOrder:
    """Graded lexicographic order with a chosen variable priority.

    Monomials compare first by total degree, then lexicographically reading
    exponents of the priority variables from most to least significant.
    The default priority makes the last variable the most significant, so
    for an algebra on (x, y, z) the pure power z^k leads its degree.
    """

    def __init__(self, priority: Sequence[int]):
        pr = tuple(priority)
        if sorted(pr) != list(range(len(pr))):
            raise ValueError("priority must be a permutation of the variable indices")
        self.priority = pr

    @classmethod
    def default(cls, nvars: int) -> "GradedLexOrder":
        return cls(tuple(range(nvars - 1, -1, -1)))

    def key(self, m: Monomial):
        return (sum(m), tuple(m[i] for i in self.priority))

    def sort(self, monomials: Iterable[Monomial], reverse: bool = True) -> list[Monomial]:
        return sorted(monomials, key=self.key, reverse=reverse)

    def __eq__(self, other) -> bool:
        return isinstance(other, GradedLexOrder) and self.priority == other.priority

    def __repr__(self) -> str:
        return f"GradedLexOrder(priority={self.priority})"


class Polynomial:
    """A sparse polynomial in ``nvars`` variables over the rationals."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[Monomial, Fraction | int] | None = None):
        self.nvars = nvars
        clean: dict[Monomial, Fraction] = {}
        if terms:
            for m, c in terms.items():
                if len(m) != nvars:
                    raise ValueError(f"monomial {m} does not have {nvars} exponents")
                if any(e < 0 for e in m):
                    raise ValueError(f"negative exponent in monomial {m}")
                c = Fraction(c)
                if c:
                    clean[tuple(m)] = c
        self.terms = clean

    @classmethod
    def zero(cls, nvars: int) -> "Polynomial":
        return cls(nvars)

    @classmethod
    def constant(cls, nvars: int, value: Fraction | int) -> "Polynomial":
        return cls(nvars, {(0,) * nvars: Fraction(value)})

    @classmethod
    def variable(cls, nvars: int, index: int) -> "Polynomial":
        if not 0 <= index < nvars:
            raise ValueError(f"variable index {index} out of range for {nvars} variables")
        exps = [0] * nvars
        exps[index] = 1
        return cls(nvars, {tuple(exps): Fraction(1)})

    @classmethod
    def monomial(cls, nvars: int, m: Monomial, coeff: Fraction | int = 1) -> "Polynomial":
        return cls(nvars, {m: Fraction(coeff)})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, _SCALAR_TYPES):
            other = Polynomial.constant(self.nvars, other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    __hash__ = None  # mutable term map; polynomials are not hashable

    def _coerce(self, other) -> "Polynomial | None":
        if isinstance(other, Polynomial):
            if other.nvars != self.nvars:
                raise ValueError("polynomials have different variable counts")
            return other
        if isinstance(other, _SCALAR_TYPES):
            return Polynomial.constant(self.nvars, other)
        return None

    def __add__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, Fraction(0)) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        p = Polynomial.__new__(Polynomial)
        p.nvars = self.nvars
        p.terms = out
        return p

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        p = Polynomial.__new__(Polynomial)
        p.nvars = self.nvars
        p.terms = {m: -c for m, c in self.terms.items()}
        return p

    def __sub__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, _SCALAR_TYPES):
            c = Fraction(other)
            p = Polynomial.__new__(Polynomial)
            p.nvars = self.nvars
            p.terms = {m: a * c for m, a in self.terms.items()} if c else {}
            return p
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out: dict[Monomial, Fraction] = {}
        for ma, ca in self.terms.items():
            for mb, cb in other.terms.items():
                m = monomial_mul(ma, mb)
                s = out.get(m, Fraction(0)) + ca * cb
                if s:
                    out[m] = s
                else:
                    del out[m]
        p = Polynomial.__new__(Polynomial)
        p.nvars = self.nvars
        p.terms = out
        return p

    __rmul__ = __mul__

    def __truediv__(self, scalar) -> "Polynomial":
        if not isinstance(scalar, _SCALAR_TYPES):
            return NotImplemented
        return self * (Fraction(1) / Fraction(scalar))

    def __pow__(self, k: int) -> "Polynomial":
        if not isinstance(k, int) or k < 0:
            raise ValueError("polynomial powers must be non-negative integers")
        out = Polynomial.constant(self.nvars, 1)
        for _ in range(k):
            out = out * self
        return out

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(monomial_degree(m) for m in self.terms)

    def is_homogeneous(self) -> bool:
        degs = {monomial_degree(m) for m in self.terms}
        return len(degs) <= 1

    def coefficient(self, m: Monomial) -> Fraction:
        return self.terms.get(tuple(m), Fraction(0))

    def constant_term(self) -> Fraction:
        return self.terms.get((0,) * self.nvars, Fraction(0))

    def graded_component(self, n: int) -> "Polynomial":
        """Sum of the terms of total degree exactly ``n``."""
        if n < 0:
            raise ValueError("degree must be non-negative")
        p = Polynomial.__new__(Polynomial)
        p.nvars = self.nvars
        p.terms = {m: c for m, c in self.terms.items() if monomial_degree(m) == n}
        return p

    def differentiate(self, index: int) -> "Polynomial":
        """Partial derivative with respect to variable ``index``."""
        out: dict[Monomial, Fraction] = {}
        for m, c in self.terms.items():
            e = m[index]
            if e:
                dm = list(m)
                dm[index] = e - 1
                out[tuple(dm)] = c * e
        p = Polynomial.__new__(Polynomial)
        p.nvars = self.nvars
        p.terms = out
        return p

    def sorted_terms(self, order: GradedLexOrder | None = None) -> list[tuple[Monomial, Fraction]]:
        """Terms in descending monomial order (canonical enumeration)."""
        if order is None:
            order = GradedLexOrder.default(self.nvars)
        return [(m, self.terms[m]) for m in order.sort(self.terms)]

    def leading_term(self, order: GradedLexOrder) -> tuple[Monomial, Fraction]:
        if not self.terms:
            raise ValueError("the zero polynomial has no leading term")
        m = max(self.terms, key=order.key)
        return m, self.terms[m]

    def __repr__(self) -> str:
        names = tuple(f"x{i}" for i in range(self.nvars))
        return f"Polynomial({format_polynomial(self, names)!r})"


def normal_form(f: Polynomial, divisor: Polynomial, order: GradedLexOrder) -> Polynomial:
    """Unique remainder of ``f`` under division by a single divisor.

    Repeatedly eliminates the order-largest monomial of ``f`` divisible by
    the leading monomial of the divisor; the result contains no monomial
    divisible by that leading monomial, and for a single divisor it is the
    canonical representative of ``f`` modulo the generated ideal.
    """
    if not divisor:
        raise ValueError("cannot reduce modulo the zero polynomial")
    if f.nvars != divisor.nvars:
        raise ValueError("polynomials have different variable counts")
    lm, lc = divisor.leading_term(order)
    tail = divisor - Polynomial.monomial(divisor.nvars, lm, lc)
    work = f
    while True:
        reducible = [m for m in work.terms if monomial_divides(lm, m)]
        if not reducible:
            return work
        m = max(reducible, key=order.key)
        c = work.terms[m]
        u = monomial_div(m, lm)
        # m maps to -(c/lc) * x^u * tail, which is strictly smaller in the order
        work = work - Polynomial.monomial(work.nvars, m, c) \
                    - Polynomial.monomial(work.nvars, u, c / lc) * tail


def monomials_of_degree(nvars: int, degree: int, order: GradedLexOrder | None = None) -> list[Monomial]:
    """All exponent tuples of total degree ``degree``, descending in the order."""
    if degree < 0:
        raise ValueError("degree must be non-negative")
    if order is None:
        order = GradedLexOrder.default(nvars)

    out: list[Monomial] = []

    def rec(prefix: list[int], remaining: int, slot: int) -> None:
        if slot == nvars - 1:
            out.append(tuple(prefix + [remaining]))
            return
        for e in range(remaining + 1):
            rec(prefix + [e], remaining - e, slot + 1)

    if nvars == 0:
        return [()] if degree == 0 else []
    rec([], degree, 0)
    return order.sort(out)


def monomials_up_to(nvars: int, degree: int, order: GradedLexOrder | None = None) -> list[Monomial]:
    """All exponent tuples of total degree at most ``degree``, descending."""
    if order is None:
        order = GradedLexOrder.default(nvars)
    out: list[Monomial] = []
    for d in range(degree + 1):
        out.extend(monomials_of_degree(nvars, d, order))
    return order.sort(out)


class PolynomialSyntaxError(ValueError):
    """Raised on malformed polynomial text; carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class _Parser:
    """Recursive-descent parser for the polynomial expression grammar.

    poly   := [sign] term (sign term)*
    term   := factor ('*' factor)*
    factor := integer ['/' integer] | name ['^' integer]

    Whitespace is insignificant; exponents are non-negative integers.
    """

    def __init__(self, text: str, names: Sequence[str]):
        self.text = text
        self.pos = 0
        self.names = list(names)
        self.index = {name: i for i, name in enumerate(names)}

    def error(self, message: str, pos: int | None = None) -> PolynomialSyntaxError:
        return PolynomialSyntaxError(message, self.pos if pos is None else pos)

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take_integer(self) -> int:
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise self.error("expected an integer", start)
        return int(self.text[start:self.pos])

    def take_name(self) -> str:
        start = self.pos
        ch = self.peek()
        if not (ch.isalpha() or ch == "_"):
            raise self.error("expected a variable name", start)
        while self.pos < len(self.text) and (self.text[self.pos].isalnum() or self.text[self.pos] == "_"):
            self.pos += 1
        return self.text[start:self.pos]

    def parse_factor(self) -> tuple[Fraction, list[int]]:
        ch = self.peek()
        if ch.isdigit():
            num = self.take_integer()
            self.skip_ws()
            if self.peek() == "/":
                self.pos += 1
                self.skip_ws()
                den_pos = self.pos
                den = self.take_integer()
                if den == 0:
                    raise self.error("zero denominator", den_pos)
                return Fraction(num, den), [0] * len(self.names)
            return Fraction(num), [0] * len(self.names)
        if ch.isalpha() or ch == "_":
            name_pos = self.pos
            name = self.take_name()
            if name not in self.index:
                raise self.error(f"unknown variable '{name}'", name_pos)
            exp = 1
            self.skip_ws()
            if self.peek() == "^":
                self.pos += 1
                self.skip_ws()
                exp = self.take_integer()
            exps = [0] * len(self.names)
            exps[self.index[name]] = exp
            return Fraction(1), exps
        raise self.error("expected a number or a variable")

    def parse_term(self) -> tuple[Fraction, Monomial]:
        coeff, exps = self.parse_factor()
        self.skip_ws()
        while self.peek() == "*":
            self.pos += 1
            self.skip_ws()
            c, e = self.parse_factor()
            coeff *= c
            exps = [a + b for a, b in zip(exps, e)]
            self.skip_ws()
        return coeff, tuple(exps)

    def parse(self) -> Polynomial:
        nvars = len(self.names)
        acc = Polynomial.zero(nvars)
        self.skip_ws()
        if self.pos == len(self.text):
            raise self.error("empty expression")
        sign = Fraction(1)
        if self.peek() in "+-":
            if self.peek() == "-":
                sign = Fraction(-1)
            self.pos += 1
            self.skip_ws()
        while True:
            coeff, m = self.parse_term()
            acc = acc + Polynomial.monomial(nvars, m, sign * coeff)
            self.skip_ws()
            if self.pos == len(self.text):
                return acc
            ch = self.peek()
            if ch == "+":
                sign = Fraction(1)
            elif ch == "-":
                sign = Fraction(-1)
            else:
                raise self.error(f"unexpected character '{ch}'")
            self.pos += 1
            self.skip_ws()


def parse_polynomial(text: str, names: Sequence[str]) -> Polynomial:
    """Parse polynomial text over the given variable names."""
    if len(set(names)) != len(names):
        raise ValueError("variable names must be distinct")
    return _Parser(text, names).parse()


def format_polynomial(p: Polynomial, names: Sequence[str], order: GradedLexOrder | None = None) -> str:
    """Render a polynomial with terms in descending graded-lex order.

    Re-parsing the output over the same names recovers the polynomial.
    """
    if len(names) != p.nvars:
        raise ValueError(f"expected {p.nvars} names, got {len(names)}")
    if not p.terms:
        return "0"
    parts: list[str] = []
    for k, (m, c) in enumerate(p.sorted_terms(order)):
        factors = [
            name if e == 1 else f"{name}^{e}"
            for name, e in zip(names, m)
            if e
        ]
        mag = abs(c)
        if not factors:
            body = str(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = "*".join([str(mag)] + factors)
        if k == 0:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts)
