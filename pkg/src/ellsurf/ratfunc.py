"""Exact arithmetic in Q[t]: polynomials, places of the projective line,
valuations, and gcd-free factor bases.

Polynomials are dense coefficient tuples of ``fractions.Fraction``, lowest
degree first, with no trailing zero (the empty tuple is the zero
polynomial).  Everything here is immutable and exact; no floating point is
used anywhere except ``math.inf`` as the valuation of the zero polynomial.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

#: Valuation of the zero polynomial (absorbing under + and min).
INF = math.inf


class PolyParseError(ValueError):
    """Raised on malformed polynomial text; carries the offending position."""

    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} at position {pos}")
        self.pos = pos


class Poly:
    """A univariate polynomial over Q in the variable ``t``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Fraction | int] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @staticmethod
    def constant(value: Fraction | int) -> "Poly":
        return Poly((Fraction(value),))

    @staticmethod
    def variable() -> "Poly":
        """The polynomial ``t``."""
        return Poly((0, 1))

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self) -> int:
        """Degree of a nonzero polynomial.

        The zero polynomial has no well-defined integer degree; asking for
        it raises rather than returning a sentinel that could leak into
        arithmetic.
        """
        if not self.coeffs:
            raise ValueError("the zero polynomial has no degree")
        return len(self.coeffs) - 1

    def leading_coefficient(self) -> Fraction:
        if not self.coeffs:
            raise ValueError("the zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def monic(self) -> "Poly":
        if self.is_zero:
            raise ValueError("cannot normalize the zero polynomial")
        lc = self.coeffs[-1]
        if lc == 1:
            return self
        return Poly(c / lc for c in self.coeffs)

    def __eq__(self, other) -> bool:
        return isinstance(other, Poly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __add__(self, other: "Poly") -> "Poly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    def __neg__(self) -> "Poly":
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        if self.is_zero or other.is_zero:
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(out)

    def scale(self, value: Fraction | int) -> "Poly":
        v = Fraction(value)
        return Poly(c * v for c in self.coeffs)

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative polynomial power")
        result = Poly.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other: "Poly") -> tuple["Poly", "Poly"]:
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        if self.is_zero:
            return Poly(), Poly()
        rem = list(self.coeffs)
        d = other.degree()
        lc = other.coeffs[-1]
        if len(rem) - 1 < d:
            return Poly(), self
        quot = [Fraction(0)] * (len(rem) - d)
        for i in range(len(rem) - 1, d - 1, -1):
            if rem[i] == 0:
                continue
            q = rem[i] / lc
            quot[i - d] = q
            for j, c in enumerate(other.coeffs):
                rem[i - d + j] -= q * c
        return Poly(quot), Poly(rem)

    def __floordiv__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[1]

    def __call__(self, value: Fraction | int) -> Fraction:
        """Evaluate at a rational point (Horner)."""
        x = Fraction(value)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose(self, inner: "Poly") -> "Poly":
        """Substitute ``inner`` for the variable."""
        acc = Poly()
        for c in reversed(self.coeffs):
            acc = acc * inner + Poly.constant(c)
        return acc

    def derivative(self) -> "Poly":
        return Poly(i * c for i, c in enumerate(self.coeffs) if i > 0)

    def __repr__(self) -> str:
        return f"Poly({format_poly(self)!r})"

    def __str__(self) -> str:
        return format_poly(self)


def exact_div(p: Poly, q: Poly) -> Poly:
    """Divide ``p`` by a known divisor ``q``; a nonzero remainder is a bug."""
    quot, rem = divmod(p, q)
    if not rem.is_zero:
        raise ArithmeticError("exact_div called with a non-divisor")
    return quot


def poly_gcd(p: Poly, q: Poly) -> Poly:
    """Monic greatest common divisor; gcd(p, 0) is the monic part of p."""
    if p.is_zero and q.is_zero:
        raise ValueError("gcd of two zero polynomials is undefined")
    a, b = p, q
    while not b.is_zero:
        a, b = b, a % b
        # renormalizing each remainder keeps coefficient growth in check
        if not b.is_zero:
            b = b.monic()
    return a.monic()


def squarefree_decomposition(p: Poly) -> list[tuple[Poly, int]]:
    """Yun decomposition of a nonzero polynomial.

    Returns monic, squarefree, pairwise-coprime factors with their
    multiplicities, in increasing multiplicity order.  The product of
    ``factor**multiplicity`` over the result times the leading coefficient
    of ``p`` reconstructs ``p``.
    """
    if p.is_zero:
        raise ValueError("cannot decompose the zero polynomial")
    p = p.monic()
    if p.degree() == 0:
        return []
    dp = p.derivative()
    g = poly_gcd(p, dp)
    c = exact_div(p, g)
    d = exact_div(dp, g) - c.derivative()
    out: list[tuple[Poly, int]] = []
    i = 1
    while c.degree() > 0:
        a = poly_gcd(c, d)
        if a.degree() > 0:
            out.append((a, i))
        c = exact_div(c, a)
        d = exact_div(d, a) - c.derivative()
        i += 1
    return out


def squarefree_part(p: Poly) -> Poly:
    """Monic product of the distinct factors of a nonzero polynomial."""
    result = Poly.constant(1)
    for factor, _ in squarefree_decomposition(p):
        result = result * factor
    return result


def is_squarefree(p: Poly) -> bool:
    if p.is_zero:
        return False
    if p.degree() == 0:
        return True
    return poly_gcd(p, p.derivative()).degree() == 0


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def rational_roots(p: Poly) -> list[Fraction]:
    """Distinct rational roots of a nonzero polynomial, in increasing order
    (rational root theorem on the denominator-cleared coefficients)."""
    if p.is_zero:
        raise ValueError("the zero polynomial has every root")
    if p.degree() == 0:
        return []
    den = 1
    for c in p.coeffs:
        den = den * c.denominator // math.gcd(den, c.denominator)
    ints = [int(c * den) for c in p.coeffs]
    roots: set[Fraction] = set()
    k = 0
    while ints[k] == 0:
        roots.add(Fraction(0))
        k += 1
    ints = ints[k:]
    if len(ints) > 1:
        for num in _divisors(ints[0]):
            for d in _divisors(ints[-1]):
                for cand in (Fraction(num, d), Fraction(-num, d)):
                    if cand not in roots and p(cand) == 0:
                        roots.add(cand)
    return sorted(roots)


def _split_rational_roots(factors: Iterable[Poly]) -> list[Poly]:
    """Split every rational root off each factor; what has no rational root
    stays whole (conjugate points never need to be told apart)."""
    out: list[Poly] = []
    for factor in factors:
        if factor.degree() == 1:
            out.append(factor)
            continue
        rest = factor
        for root in rational_roots(factor):
            linear = Poly((-root, Fraction(1)))
            out.append(linear)
            rest = exact_div(rest, linear)
        if rest.degree() > 0:
            out.append(rest.monic())
    return out


def _sort_key(p: Poly):
    # degree first, then coefficient sequence; coefficients are negated so
    # that monic linear factors t - r come out in increasing root order
    return (p.degree(), tuple(-c for c in p.coeffs))


def _refine_coprime(parts: Iterable[Poly]) -> list[Poly]:
    """Split monic squarefree polynomials into a pairwise-coprime basis."""
    basis: list[Poly] = []
    work = [q.monic() for q in parts if not q.is_zero and q.degree() > 0]
    while work:
        q = work.pop()
        if q.degree() == 0:
            continue
        for i, b in enumerate(basis):
            g = poly_gcd(q, b)
            if g.degree() == 0:
                continue
            if g != b:
                basis[i] = g
                work.append(exact_div(b, g))
            leftover = exact_div(q, g)
            if leftover.degree() > 0:
                work.append(leftover)
            break
        else:
            basis.append(q)
    return sorted(basis, key=_sort_key)


@dataclass(frozen=True)
class FactorBasis:
    """Pairwise-coprime monic factors refining a family of polynomials.

    ``exponents[i][j]`` is the (well-defined) multiplicity of ``factors[i]``
    in ``inputs[j]``; every input equals its leading coefficient times the
    product of the basis factors raised to these exponents.
    """

    inputs: tuple[Poly, ...]
    factors: tuple[Poly, ...]
    exponents: tuple[tuple[int, ...], ...]

    def exponent(self, factor_index: int, input_index: int) -> int:
        return self.exponents[factor_index][input_index]

    def reconstruct(self, input_index: int) -> Poly:
        result = Poly.constant(self.inputs[input_index].leading_coefficient())
        for i, factor in enumerate(self.factors):
            result = result * factor ** self.exponents[i][input_index]
        return result


def gcdfree_refine(polys: Sequence[Poly]) -> FactorBasis:
    """Common gcd-free factor basis for nonzero polynomials.

    No factorization into irreducibles happens: factors are merely split
    far enough that each one has a single well-defined exponent in every
    input.  That is exactly the granularity at which per-place valuations
    make sense.
    """
    inputs = tuple(polys)
    decompositions = []
    for p in inputs:
        if p.is_zero:
            raise ValueError("gcd-free refinement of the zero polynomial")
        decompositions.append(squarefree_decomposition(p))
    parts = [factor for dec in decompositions for factor, _ in dec]
    basis = sorted(_split_rational_roots(_refine_coprime(parts)), key=_sort_key)
    exponents = []
    for factor in basis:
        row = []
        for dec in decompositions:
            e = 0
            for part, mult in dec:
                # parts of one Yun decomposition are coprime, so the factor
                # divides at most one of them
                if (part % factor).is_zero:
                    e = mult
                    break
            row.append(e)
        exponents.append(tuple(row))
    return FactorBasis(inputs, tuple(basis), tuple(exponents))


@dataclass(frozen=True)
class Place:
    """A place of the projective line over Q.

    A finite place is a monic squarefree polynomial of positive degree (a
    Galois orbit of points); ``poly`` is ``None`` for the place at
    infinity.
    """

    poly: Poly | None

    def __post_init__(self):
        q = self.poly
        if q is None:
            return
        if q.is_zero or q.degree() == 0:
            raise ValueError("a finite place needs a non-constant polynomial")
        if q.leading_coefficient() != 1:
            raise ValueError("a finite place must be monic")
        if not is_squarefree(q):
            raise ValueError("a finite place must be squarefree")

    @staticmethod
    def finite(q: Poly) -> "Place":
        return Place(q)

    @staticmethod
    def at_root(r: Fraction | int) -> "Place":
        return Place(Poly((-Fraction(r), Fraction(1))))

    @staticmethod
    def infinity() -> "Place":
        return Place(None)

    @property
    def is_infinite(self) -> bool:
        return self.poly is None

    def label(self) -> str:
        """Display label: the root for a linear place, ``inf`` at infinity."""
        if self.poly is None:
            return "inf"
        if self.poly.degree() == 1:
            return str(-self.poly.coeffs[0])
        return format_poly(self.poly)

    def __str__(self) -> str:
        return self.label()


def valuation(p: Poly, place: Place) -> int | float:
    """Order of vanishing of ``p`` at a finite place; INF for ``p = 0``.

    The place at infinity is deliberately not handled here: its valuation
    depends on a model-level homogenization convention that the caller
    owns.
    """
    if place.is_infinite:
        raise ValueError("valuation at infinity is a model-level convention")
    if p.is_zero:
        return INF
    q = place.poly
    assert q is not None
    v = 0
    while True:
        quot, rem = divmod(p, q)
        if not rem.is_zero:
            return v
        v += 1
        p = quot


# --------------------------------------------------------------------------
# text grammar:  rational coefficients, variable t, operators + - * / ^,
# parentheses; '/' only by nonzero constants; juxtaposition multiplies.

_SYMBOLS = set("t+-*/^()")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(("int", text[i:j], i))
            i = j
            continue
        if ch in _SYMBOLS:
            tokens.append((ch, ch, i))
            i += 1
            continue
        raise PolyParseError(f"unexpected character {ch!r}", i)
    tokens.append(("end", "", len(text)))
    return tokens


class _PolyParser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self) -> str:
        return self.tokens[self.pos][0]

    def next(self) -> tuple[str, str, int]:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind: str) -> tuple[str, str, int]:
        tok = self.next()
        if tok[0] != kind:
            raise PolyParseError(f"expected {kind!r}, found {tok[1]!r}", tok[2])
        return tok

    def parse(self) -> Poly:
        p = self.expr()
        tok = self.tokens[self.pos]
        if tok[0] != "end":
            raise PolyParseError(f"unexpected {tok[1]!r}", tok[2])
        return p

    def expr(self) -> Poly:
        node = self.term()
        while self.peek() in ("+", "-"):
            op = self.next()[0]
            rhs = self.term()
            node = node + rhs if op == "+" else node - rhs
        return node

    def term(self) -> Poly:
        node = self.factor()
        while True:
            kind = self.peek()
            if kind == "*":
                self.next()
                node = node * self.factor()
            elif kind == "/":
                _, _, pos = self.next()
                rhs = self.factor()
                if rhs.is_zero:
                    raise PolyParseError("division by zero", pos)
                if rhs.degree() > 0:
                    raise PolyParseError("can only divide by a nonzero constant", pos)
                node = node.scale(1 / rhs.coeffs[0])
            elif kind in ("int", "t", "("):
                node = node * self.factor()
            else:
                return node

    def factor(self) -> Poly:
        kind = self.peek()
        if kind == "-":
            self.next()
            return -self.factor()
        if kind == "+":
            self.next()
            return self.factor()
        return self.power()

    def power(self) -> Poly:
        base = self.atom()
        if self.peek() == "^":
            self.next()
            tok = self.expect("int")
            base = base ** int(tok[1])
        return base

    def atom(self) -> Poly:
        kind, value, pos = self.next()
        if kind == "int":
            return Poly.constant(Fraction(int(value)))
        if kind == "t":
            return Poly.variable()
        if kind == "(":
            node = self.expr()
            self.expect(")")
            return node
        raise PolyParseError(f"unexpected {value or 'end of input'!r}", pos)


def parse_poly(text: str) -> Poly:
    """Parse the polynomial grammar exactly (no floating point anywhere)."""
    return _PolyParser(text).parse()


def format_poly(p: Poly) -> str:
    """Canonical text form; re-parsing it yields the identical polynomial."""
    if p.is_zero:
        return "0"
    pieces = []
    for d in range(p.degree(), -1, -1):
        c = p.coeffs[d]
        if c == 0:
            continue
        mag = abs(c)
        if d == 0:
            body = str(mag)
        elif d == 1:
            body = "t" if mag == 1 else f"{mag}*t"
        else:
            body = f"t^{d}" if mag == 1 else f"{mag}*t^{d}"
        if not pieces:
            pieces.append(body if c > 0 else f"-{body}")
        else:
            pieces.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(pieces)
