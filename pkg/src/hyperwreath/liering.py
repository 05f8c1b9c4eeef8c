"""The Lie ring of partitions: basis x^lam d_k, derivation-style bracket,
and the leading-term correspondence from the wreath product.
"""

from __future__ import annotations

import re
from typing import Dict, FrozenSet, Iterable, List, Tuple

from .ordinals import OrdinalCNF, tdeg_of_monomial
from .partitions import Partition
from .polyring import parse_poly
from .wreath import GroupElement, MonomialElement

LieKey = Tuple[Partition, int]  # (exponent partition, layer of the derivation)


def _check_key(lam: Partition, k: int, n: int) -> None:
    if not 1 <= k <= n:
        raise ValueError(f"derivation layer {k} out of range for n={n}")
    if lam.max_part > k - 1:
        raise ValueError(f"partition with part {lam.max_part} invalid for d{k}")


class LieElement:
    """Finite integer combination of basis elements x^lam d_k."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Dict[LieKey, int] = None):
        data: Dict[LieKey, int] = {}
        for (lam, k), c in (terms or {}).items():
            if c == 0:
                continue
            _check_key(lam, k, n)
            data[(lam, k)] = c
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "terms", data)

    def __setattr__(self, name, value):
        raise AttributeError("LieElement is immutable")

    @classmethod
    def zero(cls, n: int) -> "LieElement":
        return cls(n)

    @classmethod
    def basis(cls, lam: Partition, k: int, n: int, coeff: int = 1) -> "LieElement":
        return cls(n, {(lam, k): coeff})

    @classmethod
    def from_monomial(cls, m: MonomialElement) -> "LieElement":
        return cls(m.n, {(m.lam, m.layer): m.coeff})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "LieElement") -> "LieElement":
        if self.n != other.n:
            raise ValueError("mismatched n")
        data = dict(self.terms)
        for key, c in other.terms.items():
            s = data.get(key, 0) + c
            if s == 0:
                data.pop(key, None)
            else:
                data[key] = s
        return LieElement(self.n, data)

    def __neg__(self) -> "LieElement":
        return LieElement(self.n, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "LieElement") -> "LieElement":
        return self + (-other)

    def scale(self, d: int) -> "LieElement":
        return LieElement(self.n, {k: c * d for k, c in self.terms.items()})

    def tdeg(self) -> OrdinalCNF:
        best = OrdinalCNF()
        for lam, k in self.terms:
            t = tdeg_of_monomial(lam, k, self.n)
            if t > best:
                best = t
        return best

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LieElement)
            and self.n == other.n
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self.terms.items())))

    def sorted_terms(self) -> List[Tuple[LieKey, int]]:
        return sorted(
            self.terms.items(),
            key=lambda t: tdeg_of_monomial(t[0][0], t[0][1], self.n),
            reverse=True,
        )

    def render(self) -> str:
        """Canonical text, e.g. ``2*x1^2 d3 + x2 d4``; zero renders as ``0``."""
        if not self.terms:
            return "0"
        pieces: List[str] = []
        for (lam, k), c in self.sorted_terms():
            factors = [
                f"x{j + 1}" if e == 1 else f"x{j + 1}^{e}"
                for j, e in enumerate(lam.mults)
                if e
            ]
            mag = abs(c)
            if not factors:
                head = "" if mag == 1 else str(mag)
            elif mag == 1:
                head = "*".join(factors)
            else:
                head = "*".join([str(mag)] + factors)
            body = f"{head} d{k}" if head else f"d{k}"
            if not pieces:
                pieces.append(body if c > 0 else f"-{body}")
            else:
                pieces.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(pieces)

    def __repr__(self) -> str:
        return f"LieElement({self.render()!r}, n={self.n})"

    def __str__(self) -> str:
        return self.render()


def bracket_keys(a: LieKey, b: LieKey) -> Tuple[int, LieKey]:
    """Bracket of two basis elements; returns (coefficient, key), coefficient 0 for zero.

    [x^lam d_k, x^theta d_j] is the derivative of one side applied to the
    other: d_j(x^lam) x^theta d_k when j < k, the mirrored expression with a
    minus sign when j > k, and zero on equal layers.
    """
    (lam, k), (theta, j) = a, b
    if j == k:
        return 0, a
    if j < k:
        mult = lam.multiplicity(j)
        if mult == 0:
            return 0, a
        return mult, (lam.remove_part(j).combine(theta), k)
    mult = theta.multiplicity(k)
    if mult == 0:
        return 0, a
    return -mult, (theta.remove_part(k).combine(lam), j)


def bracket(a: LieElement, b: LieElement) -> LieElement:
    """Bilinear extension of the basis bracket."""
    if a.n != b.n:
        raise ValueError("mismatched n")
    data: Dict[LieKey, int] = {}
    for ka, ca in a.terms.items():
        for kb, cb in b.terms.items():
            coeff, key = bracket_keys(ka, kb)
            if coeff == 0:
                continue
            s = data.get(key, 0) + ca * cb * coeff
            if s == 0:
                data.pop(key, None)
            else:
                data[key] = s
    return LieElement(a.n, data)


def phi(g: GroupElement) -> LieElement:
    """Leading-term correspondence into the Lie ring; the identity maps to zero.

    Defined through the leading constituent only: no additivity beyond that
    is claimed, just compatibility with commutators.
    """
    if g.is_identity:
        return LieElement.zero(g.n)
    return LieElement.from_monomial(g.leading_term())


def phi_set(monomials: Iterable[MonomialElement]) -> FrozenSet[LieKey]:
    """Elementwise image of a set of monic monomials as Lie basis keys."""
    return frozenset(m.lie_key() for m in monomials)


def tdeg_lie(lam: Partition, k: int, n: int) -> OrdinalCNF:
    """Transfinite degree of a basis element; same grading as on the group side."""
    return tdeg_of_monomial(lam, k, n)


_LIE_TERM_RE = re.compile(r"^\s*(.*?)\s*d(\d+)\s*$")


def parse_lie(text: str, n: int) -> LieElement:
    """Parse the canonical Lie element text form."""
    text = text.strip()
    if text == "0":
        return LieElement.zero(n)
    sign = 1
    if text.startswith("-"):
        sign = -1
        text = text[1:].strip()
    pieces = re.split(r"\s+([+-])\s+", text)
    chunks: List[Tuple[int, str]] = [(sign, pieces[0])]
    for op, term in zip(pieces[1::2], pieces[2::2]):
        chunks.append((-1 if op == "-" else 1, term))
    acc = LieElement.zero(n)
    for sgn, chunk in chunks:
        m = _LIE_TERM_RE.match(chunk)
        if not m:
            raise ValueError(f"bad Lie term: {chunk!r}")
        k = int(m.group(2))
        head = m.group(1).strip()
        if head:
            poly = parse_poly(head)
        else:
            poly = parse_poly("1")
        if len(poly.terms) != 1:
            raise ValueError(f"Lie term must be a single monomial: {chunk!r}")
        (exps, coeff), = poly.terms.items()
        if not isinstance(coeff, int):
            raise ValueError(f"Lie coefficients are integers: {chunk!r}")
        acc = acc + LieElement.basis(Partition(exps), k, n, coeff=sgn * coeff)
    return acc
