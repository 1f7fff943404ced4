"""Exact polynomial arithmetic.

``BracketPoly`` lives in Z[A, B, d] and carries bracket values and vertex
weights.  ``LaurentA`` lives in Z[A, A^-1] and carries reduced brackets and
Jones polynomials.  Coefficients are Python ints, so nothing overflows.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterator, Mapping

from .errors import DivisibilityError, ParseError

Exps = tuple[int, int, int]

_VARS = ("A", "B", "d")


class BracketPoly:
    """Sparse polynomial in A, B, d with integer coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Exps, int] | None = None):
        clean = {}
        if terms:
            for exps, c in terms.items():
                if c:
                    if len(exps) != 3 or min(exps) < 0:
                        raise ValueError(f"bad exponent triple {exps!r}")
                    clean[tuple(exps)] = int(c)
        self._terms = clean
        self._hash = None

    @classmethod
    def constant(cls, c: int) -> BracketPoly:
        return cls({(0, 0, 0): c})

    @classmethod
    def monomial(cls, a: int = 0, b: int = 0, d: int = 0, coeff: int = 1) -> BracketPoly:
        return cls({(a, b, d): coeff})

    @classmethod
    def coerce(cls, other) -> BracketPoly:
        if isinstance(other, BracketPoly):
            return other
        if isinstance(other, int):
            return cls.constant(other)
        raise TypeError(f"cannot use {type(other).__name__} as a bracket polynomial")

    # -- ring structure -------------------------------------------------

    def __add__(self, other):
        try:
            other = BracketPoly.coerce(other)
        except TypeError:
            return NotImplemented
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, 0) + c
        return BracketPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return BracketPoly({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        try:
            other = BracketPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return BracketPoly.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            return BracketPoly({k: c * other for k, c in self._terms.items()})
        if not isinstance(other, BracketPoly):
            return NotImplemented
        out: dict[Exps, int] = {}
        for (a1, b1, d1), c1 in self._terms.items():
            for (a2, b2, d2), c2 in other._terms.items():
                k = (a1 + a2, b1 + b2, d1 + d2)
                out[k] = out.get(k, 0) + c1 * c2
        return BracketPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not in Z[A, B, d]")
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = BracketPoly.constant(other)
        if not isinstance(other, BracketPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    # -- inspection -----------------------------------------------------

    def terms(self) -> Iterator[tuple[Exps, int]]:
        """Terms in canonical order: exponent triples in descending lex order."""
        for k in sorted(self._terms, reverse=True):
            yield k, self._terms[k]

    def coefficient(self, a: int, b: int, d: int) -> int:
        return self._terms.get((a, b, d), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def leading(self) -> tuple[Exps, int]:
        k = max(self._terms)
        return k, self._terms[k]

    def substitute(self, A=None, B=None, d=None):
        """Evaluate with any ring elements (ints, BracketPoly, LaurentA...) for A, B, d."""
        vals = [A if A is not None else A_, B if B is not None else B_, d if d is not None else D_]
        total = 0
        for (ea, eb, ed), c in self._terms.items():
            term = c
            for v, e in zip(vals, (ea, eb, ed)):
                if e:
                    term = term * (v ** e)
            total = total + term
        return total

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for exps, c in self.terms():
            factors = []
            for name, e in zip(_VARS, exps):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = f"{mag}*" + "*".join(factors)
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append((" - " if c < 0 else " + ") + body)
        return "".join(parts)

    def __repr__(self):
        return f"BracketPoly({str(self)!r})"

    @classmethod
    def parse(cls, text: str, line: int | None = None) -> BracketPoly:
        return parse_poly(text, line=line)


ZERO = BracketPoly()
ONE = BracketPoly.constant(1)
A_ = BracketPoly.monomial(a=1)
B_ = BracketPoly.monomial(b=1)
D_ = BracketPoly.monomial(d=1)

# public names matching the variables
A, B, d = A_, B_, D_


_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<var>[ABd])|(?P<op>[-+*^]))")


def parse_poly(text: str, line: int | None = None) -> BracketPoly:
    """Parse ``A^2*d + 2*A*B + B^2*d``-style literals.

    Columns in errors are 1-based offsets into ``text``.
    """
    tokens = []
    pos = 0
    stripped_end = len(text.rstrip())
    while pos < stripped_end:
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos]!r} in polynomial", line, pos + 1)
        kind = m.lastgroup
        tokens.append((kind, m.group(kind), m.start(kind) + 1))
        pos = m.end()
    if not tokens:
        raise ParseError("empty polynomial", line, 1)

    i = 0

    def peek():
        return tokens[i] if i < len(tokens) else (None, None, len(text) + 1)

    total = ZERO
    first = True
    while i < len(tokens):
        sign = 1
        kind, val, col = peek()
        if kind == "op" and val in "+-":
            sign = -1 if val == "-" else 1
            i += 1
        elif not first:
            raise ParseError("expected '+' or '-' between terms", line, col)
        first = False
        coeff = 1
        exps = [0, 0, 0]
        seen_any = False
        kind, val, col = peek()
        if kind == "int":
            coeff = int(val)
            i += 1
            seen_any = True
            kind, val, col = peek()
            if kind == "op" and val == "*":
                i += 1
                kind, val, col = peek()
                if kind != "var":
                    raise ParseError("expected a variable after '*'", line, col)
        while True:
            kind, val, col = peek()
            if kind != "var":
                break
            i += 1
            seen_any = True
            e = 1
            k2, v2, c2 = peek()
            if k2 == "op" and v2 == "^":
                i += 1
                k3, v3, c3 = peek()
                if k3 != "int":
                    raise ParseError("expected a nonnegative integer exponent", line, c3)
                e = int(v3)
                i += 1
            exps[_VARS.index(val)] += e
            k2, v2, c2 = peek()
            if k2 == "op" and v2 == "*":
                i += 1
                k3, v3, c3 = peek()
                if k3 != "var":
                    raise ParseError("expected a variable after '*'", line, c3)
        if not seen_any:
            raise ParseError("expected a term", line, col)
        total = total + BracketPoly({tuple(exps): sign * coeff})
    return total


def exact_divide(p: BracketPoly, q: BracketPoly) -> BracketPoly:
    """Quotient ``r`` with ``r * q == p``; raises DivisibilityError otherwise.

    Multivariate long division in lex order A > B > d.
    """
    if q.is_zero():
        raise DivisibilityError("division by zero polynomial")
    (qa, qb, qd), qc = q.leading()
    rest = dict(p._terms)
    quotient: dict[Exps, int] = {}
    while rest:
        lead = max(rest)
        c = rest[lead]
        la, lb, ld = lead
        if la < qa or lb < qb or ld < qd or c % qc:
            raise DivisibilityError(f"{q} does not divide {p}")
        m = (la - qa, lb - qb, ld - qd)
        k = c // qc
        quotient[m] = quotient.get(m, 0) + k
        for (ea, eb, ed), cc in q._terms.items():
            key = (ea + m[0], eb + m[1], ed + m[2])
            v = rest.get(key, 0) - k * cc
            if v:
                rest[key] = v
            else:
                rest.pop(key, None)
    return BracketPoly(quotient)


class LaurentA:
    """Sparse Laurent polynomial in A with integer coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, int] | None = None):
        self._terms = {int(e): int(c) for e, c in (terms or {}).items() if c}

    @classmethod
    def monomial(cls, e: int, coeff: int = 1) -> LaurentA:
        return cls({e: coeff})

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentA({0: other})
        if not isinstance(other, LaurentA):
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentA(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentA({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentA({e: c * other for e, c in self._terms.items()})
        if not isinstance(other, LaurentA):
            return NotImplemented
        out: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentA(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if len(self._terms) != 1:
                raise ValueError("only monomials are invertible")
            (e, c), = self._terms.items()
            if abs(c) != 1:
                raise ValueError("only unit monomials are invertible")
            return LaurentA({-e * (-k): c ** (-k)})
        result = LaurentA({0: 1})
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentA({0: other})
        if not isinstance(other, LaurentA):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def terms(self) -> Iterator[tuple[int, int]]:
        """Terms by ascending A-exponent."""
        for e in sorted(self._terms):
            yield e, self._terms[e]

    def coefficient(self, e: int) -> int:
        return self._terms.get(e, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def __str__(self):
        return _render(((e, c) for e, c in self.terms()), _a_power)

    def __repr__(self):
        return f"LaurentA({str(self)!r})"


def _a_power(e: int) -> str:
    if e == 0:
        return ""
    if e == 1:
        return "A"
    return f"A^{e}"


def _t_power(e: Fraction) -> str:
    if e == 0:
        return ""
    if e == 1:
        return "t"
    if e.denominator == 1 and e > 0:
        return f"t^{e.numerator}"
    return "t^{" + str(e) + "}"


def _render(terms, power) -> str:
    parts = []
    for e, c in terms:
        p = power(e)
        mag = abs(c)
        if not p:
            body = str(mag)
        elif mag == 1:
            body = p
        else:
            body = f"{mag}*{p}"
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append((" - " if c < 0 else " + ") + body)
    return "".join(parts) if parts else "0"


_D_IMAGE = LaurentA({-2: -1, 2: -1})


def reduce_to_laurent(p: BracketPoly) -> LaurentA:
    """Substitute B -> A^-1 and d -> -A^-2 - A^2."""
    d_powers = [LaurentA({0: 1})]
    total = LaurentA()
    for (ea, eb, ed), c in p.terms():
        while len(d_powers) <= ed:
            d_powers.append(d_powers[-1] * _D_IMAGE)
        total = total + d_powers[ed] * LaurentA({ea - eb: c})
    return total


def render_t(L: LaurentA, n: int = 0, ell: int = 0) -> str:
    """Render in the variable t with A = t^(-1/4).

    With ``n`` and ``ell`` the Jones normalisation (-1)^n t^((3n - 6 ell)/4) is
    applied first; the defaults render ``L`` as it stands.  Terms come out in
    ascending t-exponent.
    """
    if n or ell:
        L = L * LaurentA({6 * ell - 3 * n: (-1) ** n})
    terms = sorted((Fraction(-e, 4), c) for e, c in L.terms())
    return _render(terms, _t_power)
