"""Sparse multivariate polynomials with exact coefficients.

Terms map trimmed exponent tuples to nonzero coefficients.  Coefficients are
Python ints whenever the value is an integer and ``Fraction`` otherwise, so
group-level data stays in fast integer arithmetic while scratch values (the
factorial divisions of the Taylor expansion) remain exact.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Dict, Iterable, List, Sequence, Tuple, Union

Coeff = Union[int, Fraction]
Expo = Tuple[int, ...]


def _norm_coeff(c: Coeff) -> Coeff:
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


def _trim(e: Sequence[int]) -> Expo:
    e = tuple(int(v) for v in e)
    while e and e[-1] == 0:
        e = e[:-1]
    return e


class Poly:
    """Immutable sparse polynomial in variables x1, x2, ..."""

    __slots__ = ("terms",)

    def __init__(self, terms: Union[Dict[Expo, Coeff], Iterable[Tuple[Expo, Coeff]], None] = None):
        data: Dict[Expo, Coeff] = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for e, c in items:
                e = _trim(e)
                if any(v < 0 for v in e):
                    raise ValueError("exponents must be non-negative")
                c = data.get(e, 0) + c
                if c == 0:
                    data.pop(e, None)
                else:
                    data[e] = _norm_coeff(c)
        object.__setattr__(self, "terms", data)

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "Poly":
        return cls()

    @classmethod
    def constant(cls, c: Coeff) -> "Poly":
        return cls({(): c} if c else None)

    @classmethod
    def variable(cls, j: int) -> "Poly":
        """The variable x_j (1-indexed)."""
        if j < 1:
            raise ValueError("variable index must be >= 1")
        return cls({(0,) * (j - 1) + (1,): 1})

    @classmethod
    def monomial(cls, coeff: Coeff, exponents: Sequence[int]) -> "Poly":
        return cls({_trim(exponents): coeff} if coeff else None)

    # -- inspection ---------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def nvars(self) -> int:
        return max((len(e) for e in self.terms), default=0)

    @property
    def is_constant(self) -> bool:
        return all(not e for e in self.terms)

    @property
    def constant_term(self) -> Coeff:
        return self.terms.get((), 0)

    @property
    def is_integral(self) -> bool:
        """True when every coefficient is an integer."""
        return all(isinstance(c, int) for c in self.terms.values())

    @property
    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def deg_in(self, j: int) -> int:
        """Degree in the variable x_j."""
        return max((e[j - 1] if len(e) >= j else 0 for e in self.terms), default=0)

    # -- ring operations ----------------------------------------------------

    def __add__(self, other: Union["Poly", Coeff]) -> "Poly":
        if not isinstance(other, Poly):
            other = Poly.constant(other)
        data = dict(self.terms)
        for e, c in other.terms.items():
            s = data.get(e, 0) + c
            if s == 0:
                data.pop(e, None)
            else:
                data[e] = _norm_coeff(s)
        out = Poly.__new__(Poly)
        object.__setattr__(out, "terms", data)
        return out

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        out = Poly.__new__(Poly)
        object.__setattr__(out, "terms", {e: -c for e, c in self.terms.items()})
        return out

    def __sub__(self, other: Union["Poly", Coeff]) -> "Poly":
        if not isinstance(other, Poly):
            other = Poly.constant(other)
        return self + (-other)

    def __rsub__(self, other: Coeff) -> "Poly":
        return Poly.constant(other) - self

    def __mul__(self, other: Union["Poly", Coeff]) -> "Poly":
        if not isinstance(other, Poly):
            if other == 0:
                return Poly.zero()
            out = Poly.__new__(Poly)
            object.__setattr__(
                out, "terms", {e: _norm_coeff(c * other) for e, c in self.terms.items()}
            )
            return out
        data: Dict[Expo, Coeff] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                if len(e1) < len(e2):
                    e1p, e2p = e2, e1
                else:
                    e1p, e2p = e1, e2
                e = tuple(
                    v + (e2p[i] if i < len(e2p) else 0) for i, v in enumerate(e1p)
                )
                s = data.get(e, 0) + c1 * c2
                if s == 0:
                    data.pop(e, None)
                else:
                    data[e] = _norm_coeff(s)
        out = Poly.__new__(Poly)
        object.__setattr__(out, "terms", data)
        return out

    __rmul__ = __mul__

    def __pow__(self, power: int) -> "Poly":
        if power < 0:
            raise ValueError("negative powers are not polynomials")
        result = Poly.constant(1)
        base = self
        while power:
            if power & 1:
                result = result * base
            power >>= 1
            if power:
                base = base * base
        return result

    # -- calculus and composition -------------------------------------------

    def partial_derivative(self, j: int) -> "Poly":
        """Formal partial derivative with respect to x_j."""
        if j < 1:
            raise ValueError("variable index must be >= 1")
        data: Dict[Expo, Coeff] = {}
        for e, c in self.terms.items():
            if len(e) < j or e[j - 1] == 0:
                continue
            ne = list(e)
            ne[j - 1] -= 1
            data[_trim(ne)] = _norm_coeff(c * e[j - 1])
        return Poly(data)

    def substitute(self, subs: Sequence[Union["Poly", Coeff]]) -> "Poly":
        """Exact composition: replace x_j by subs[j-1] for every variable of self."""
        nv = self.nvars
        if len(subs) < nv:
            raise ValueError(f"need {nv} substitutions, got {len(subs)}")
        images: List[Poly] = [
            s if isinstance(s, Poly) else Poly.constant(s) for s in subs[:nv]
        ]
        # cache powers of each image up to the largest exponent used
        pow_cache: List[List[Poly]] = []
        for j in range(nv):
            top = self.deg_in(j + 1)
            powers = [Poly.constant(1)]
            for _ in range(top):
                powers.append(powers[-1] * images[j])
            pow_cache.append(powers)
        acc = Poly.zero()
        for e, c in self.terms.items():
            term = Poly.constant(c)
            for j, exp in enumerate(e):
                if exp:
                    term = term * pow_cache[j][exp]
            acc = acc + term
        return acc

    def difference(self, j: int, h: Union["Poly", Coeff]) -> "Poly":
        """Finite difference along x_j with increment ``h``: p(x + h e_j) - p(x).

        The increment must live strictly below layer ``j``: it may use only
        x_1..x_{j-1}.  Anything else breaks the triangular layering and is
        rejected.
        """
        if j < 1:
            raise ValueError("variable index must be >= 1")
        hp = h if isinstance(h, Poly) else Poly.constant(h)
        if hp.nvars >= j:
            raise ValueError(
                f"increment for variable x{j} may only use x1..x{j - 1}"
            )
        shifted_var = Poly.variable(j) + hp
        top = self.deg_in(j)
        powers = [Poly.constant(1)]
        for _ in range(top):
            powers.append(powers[-1] * shifted_var)
        acc = Poly.zero()
        for e, c in self.terms.items():
            ej = e[j - 1] if len(e) >= j else 0
            rest = list(e)
            if len(rest) >= j:
                rest[j - 1] = 0
            base = Poly.monomial(c, rest)
            acc = acc + (base * powers[ej] if ej else base)
        return acc - self

    def evaluate(self, point: Sequence[Coeff]) -> Coeff:
        """Exact value at an integer or rational point."""
        if len(point) < self.nvars:
            raise ValueError(f"need {self.nvars} coordinates, got {len(point)}")
        total: Coeff = 0
        for e, c in self.terms.items():
            v = c
            for j, exp in enumerate(e):
                if exp:
                    v *= point[j] ** exp
            total += v
        return _norm_coeff(total)

    # -- hashing, equality, rendering ----------------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, Poly) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def sorted_terms(self) -> List[Tuple[Expo, Coeff]]:
        """Terms in graded-lex descending order (the canonical print order)."""
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)

    def render(self) -> str:
        if not self.terms:
            return "0"
        pieces: List[str] = []
        for e, c in self.sorted_terms():
            factors = [
                f"x{j + 1}" if exp == 1 else f"x{j + 1}^{exp}"
                for j, exp in enumerate(e)
                if exp
            ]
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            if not pieces:
                pieces.append(body if c > 0 else f"-{body}")
            else:
                pieces.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(pieces)

    def __repr__(self) -> str:
        return f"Poly({self.render()!r})"

    def __str__(self) -> str:
        return self.render()


_POLY_TOKEN = re.compile(r"\s*(x\d+|\d+|[+\-*/^])")


def parse_poly(text: str) -> Poly:
    """Parse the canonical polynomial text form; inverse of ``Poly.render``."""
    tokens: List[Tuple[str, int]] = []
    pos = 0
    while pos < len(text):
        m = _POLY_TOKEN.match(text, pos)
        if not m:
            if text[pos:].strip() == "":
                break
            raise ValueError(f"bad character in polynomial at position {pos}: {text[pos:]!r}")
        tokens.append((m.group(1), m.start(1)))
        pos = m.end()

    idx = 0

    def peek() -> str:
        return tokens[idx][0] if idx < len(tokens) else ""

    def take() -> str:
        nonlocal idx
        tok = tokens[idx][0]
        idx += 1
        return tok

    def parse_factor() -> Poly:
        tok = peek()
        if tok.startswith("x"):
            take()
            j = int(tok[1:])
            exp = 1
            if peek() == "^":
                take()
                exp = int(take())
            return Poly.variable(j) ** exp
        if tok.isdigit():
            take()
            num = int(tok)
            if peek() == "/":
                take()
                den = int(take())
                return Poly.constant(Fraction(num, den))
            if peek() == "^":
                take()
                return Poly.constant(num ** int(take()))
            return Poly.constant(num)
        raise ValueError(f"unexpected token {tok!r} in polynomial {text!r}")

    def parse_term() -> Poly:
        acc = parse_factor()
        while peek() == "*":
            take()
            acc = acc * parse_factor()
        return acc

    if not tokens:
        raise ValueError("empty polynomial text")
    sign = 1
    if peek() in ("+", "-"):
        sign = -1 if take() == "-" else 1
    acc = parse_term() * sign
    while idx < len(tokens):
        op = take()
        if op not in ("+", "-"):
            raise ValueError(f"expected + or - in polynomial, got {op!r}")
        term = parse_term()
        acc = acc + (term if op == "+" else -term)
    return acc
