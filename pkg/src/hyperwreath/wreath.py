"""The iterated wreath product of n copies of the integers, polynomial base.

Elements are layer tuples ``(f_0, ..., f_{n-1})`` where ``f_{k-1}`` is an
integral polynomial in x_1..x_{k-1} (``f_0`` a constant).  The group acts on
integer n-tuples on the right:

    x . g = (x_1 - f_0, x_2 - f_1(x_1), ..., x_n - f_{n-1}(x_1, ..., x_{n-1}))

with every layer evaluated at the original coordinates.  The product is fixed
by the right-action contract ``act(g * h, x) == act(h, act(g, x))`` (g applied
first); the layer formula below is derived from it, not assumed.

Commutators follow [a, b] = a^-1 b^-1 a b throughout.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import factorial
from typing import List, Optional, Sequence, Tuple

from .ordinals import OrdinalCNF, tdeg_of_monomial
from .partitions import Partition
from .polyring import Poly, parse_poly


class MonomialElement:
    """A single-term base-layer element ``coeff * x^lam Delta_layer``."""

    __slots__ = ("coeff", "lam", "layer", "n")

    def __init__(self, coeff: int, lam: Partition, layer: int, n: int):
        if coeff == 0:
            raise ValueError("monomial elements have nonzero coefficient")
        if not isinstance(coeff, int):
            raise ValueError("monomial coefficients are integers")
        if not 1 <= layer <= n:
            raise ValueError(f"layer {layer} out of range for n={n}")
        if lam.max_part > layer - 1:
            raise ValueError(
                f"partition with part {lam.max_part} cannot sit in layer {layer}"
            )
        object.__setattr__(self, "coeff", coeff)
        object.__setattr__(self, "lam", lam)
        object.__setattr__(self, "layer", layer)
        object.__setattr__(self, "n", n)

    def __setattr__(self, name, value):
        raise AttributeError("MonomialElement is immutable")

    @property
    def wt(self) -> int:
        return self.lam.weight

    @property
    def deg(self) -> int:
        return self.lam.degree

    @property
    def is_monic(self) -> bool:
        return self.coeff == 1

    def monic_part(self) -> "MonomialElement":
        return self if self.coeff == 1 else MonomialElement(1, self.lam, self.layer, self.n)

    def tdeg(self) -> OrdinalCNF:
        return tdeg_of_monomial(self.lam, self.layer, self.n)

    def lie_key(self) -> Tuple[Partition, int]:
        return (self.lam, self.layer)

    def to_group(self) -> "GroupElement":
        return GroupElement.from_layer_poly(
            Poly.monomial(self.coeff, self.lam.mults), self.layer, self.n
        )

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, MonomialElement)
            and self.coeff == other.coeff
            and self.lam == other.lam
            and self.layer == other.layer
            and self.n == other.n
        )

    def __hash__(self) -> int:
        return hash((self.coeff, self.lam, self.layer, self.n))

    def render(self) -> str:
        return f"[{Poly.monomial(self.coeff, self.lam.mults).render()}]D{self.layer}"

    def __repr__(self) -> str:
        return f"MonomialElement({self.render()!r}, n={self.n})"


class GroupElement:
    """An element of the wreath product, stored as its layer tuple."""

    __slots__ = ("n", "layers")

    def __init__(self, n: int, layers: Sequence[Poly]):
        if n < 1:
            raise ValueError("n must be >= 1")
        layers = tuple(layers)
        if len(layers) != n:
            raise ValueError(f"expected {n} layers, got {len(layers)}")
        for k, f in enumerate(layers, start=1):
            if not f.is_integral:
                raise ValueError(f"layer {k} is not integral: {f}")
            if f.nvars > k - 1:
                raise ValueError(
                    f"layer {k} may only use x1..x{k - 1}, got {f.nvars} variables"
                )
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "layers", layers)

    def __setattr__(self, name, value):
        raise AttributeError("GroupElement is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def identity(cls, n: int) -> "GroupElement":
        return cls(n, [Poly.zero()] * n)

    @classmethod
    def from_layer_poly(cls, f: Poly, k: int, n: int) -> "GroupElement":
        layers = [Poly.zero()] * n
        layers[k - 1] = f
        return cls(n, layers)

    @classmethod
    def delta(cls, k: int, n: int) -> "GroupElement":
        """The unit constant element in layer k."""
        return cls.from_layer_poly(Poly.constant(1), k, n)

    @classmethod
    def monomial(cls, coeff: int, lam: Partition, k: int, n: int) -> "GroupElement":
        return MonomialElement(coeff, lam, k, n).to_group()

    @property
    def is_identity(self) -> bool:
        return all(f.is_zero for f in self.layers)

    # -- the permutation action --------------------------------------------

    def act(self, x: Sequence[int]) -> Tuple[int, ...]:
        """Image of the point ``x`` under this element."""
        if len(x) < self.n:
            raise ValueError(f"need {self.n} coordinates")
        return tuple(
            x[k] - self.layers[k].evaluate(x[:k]) for k in range(self.n)
        )

    # -- group operations ----------------------------------------------------

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        """Product with ``self`` acting first: act(self*other, x) = act(other, act(self, x))."""
        if not isinstance(other, GroupElement):
            return NotImplemented
        if self.n != other.n:
            raise ValueError("elements live in different groups")
        shifted: List[Poly] = []  # x_i - f_{i-1}, the action of self on coordinates
        out: List[Poly] = []
        for k in range(self.n):
            g = other.layers[k]
            out.append(self.layers[k] + (g.substitute(shifted) if not g.is_constant else g))
            shifted.append(Poly.variable(k + 1) - self.layers[k])
        return GroupElement(self.n, out)

    def inverse(self) -> "GroupElement":
        """Triangular back-substitution: recover original coordinates layer by layer."""
        original: List[Poly] = []  # x_i expressed in the moved coordinates
        out: List[Poly] = []
        for k in range(self.n):
            f = self.layers[k]
            moved = f.substitute(original) if not f.is_constant else f
            out.append(-moved)
            original.append(Poly.variable(k + 1) + moved)
        return GroupElement(self.n, out)

    def __pow__(self, power: int) -> "GroupElement":
        if power < 0:
            return self.inverse() ** (-power)
        result = GroupElement.identity(self.n)
        base = self
        while power:
            if power & 1:
                result = result * base
            power >>= 1
            if power:
                base = base * base
        return result

    def scalar_mul(self, d: int) -> "GroupElement":
        """Module action of the coefficient ring: multiply every layer by d."""
        return GroupElement(self.n, [f * d for f in self.layers])

    # -- monomial decomposition and grading ----------------------------------

    def decompose(self) -> List[MonomialElement]:
        """All monomial constituents, sorted by strictly descending transfinite degree.

        Reassembling the constituents layer by layer (descending-layer
        product) reproduces the element exactly.
        """
        out: List[MonomialElement] = []
        for k in range(1, self.n + 1):
            for e, c in self.layers[k - 1].terms.items():
                out.append(MonomialElement(c, Partition(e), k, self.n))
        out.sort(key=lambda m: m.tdeg(), reverse=True)
        return out

    def tdeg(self) -> OrdinalCNF:
        """Transfinite degree: zero for the identity, else the leading constituent's."""
        best: Optional[OrdinalCNF] = None
        for k in range(1, self.n + 1):
            for e in self.layers[k - 1].terms:
                t = tdeg_of_monomial(Partition(e), k, self.n)
                if best is None or t > best:
                    best = t
        return best if best is not None else OrdinalCNF()

    def leading_term(self) -> MonomialElement:
        """The unique constituent of maximal transfinite degree."""
        if self.is_identity:
            raise ValueError("the identity has no leading term")
        return self.decompose()[0]

    # -- equality, rendering ---------------------------------------------------

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GroupElement)
            and self.n == other.n
            and self.layers == other.layers
        )

    def __hash__(self) -> int:
        return hash((self.n, self.layers))

    def render(self) -> str:
        """Canonical text: descending layers, e.g. ``[x1]D2 * [3]D1``; identity is ``1``."""
        chunks = [
            f"[{self.layers[k - 1].render()}]D{k}"
            for k in range(self.n, 0, -1)
            if not self.layers[k - 1].is_zero
        ]
        return " * ".join(chunks) if chunks else "1"

    def __repr__(self) -> str:
        return f"GroupElement({self.render()!r}, n={self.n})"

    def __str__(self) -> str:
        return self.render()


def mul(g: GroupElement, h: GroupElement) -> GroupElement:
    return g * h


def inv(g: GroupElement) -> GroupElement:
    return g.inverse()


def act(g: GroupElement, x: Sequence[int]) -> Tuple[int, ...]:
    return g.act(x)


def scalar_mul(d: int, g: GroupElement) -> GroupElement:
    return g.scalar_mul(d)


def comm(g: GroupElement, h: GroupElement) -> GroupElement:
    """Commutator g^-1 h^-1 g h."""
    return g.inverse() * h.inverse() * g * h


def conjugate(g: GroupElement, by: GroupElement) -> GroupElement:
    """Conjugate ``by * g * by^-1``."""
    return by * g * by.inverse()


def comm_formula(f: Poly, k: int, g: Poly, u: int, n: int) -> GroupElement:
    """Closed form of the commutator of two base-layer elements.

    For k > u the result is the difference of ``f`` along x_u with increment
    ``g``, placed back in layer k; for u > k the mirrored expression with a
    sign flip; equal layers commute.
    """
    if k == u:
        return GroupElement.identity(n)
    if k > u:
        return GroupElement.from_layer_poly(f.difference(u, g), k, n)
    return GroupElement.from_layer_poly(-(g.difference(k, f)), u, n)


def taylor_comm(f: Poly, k: int, g: Poly, u: int, n: int) -> GroupElement:
    """Commutator via the exact Taylor expansion, for u < k.

    Sums ``(1/s!) d^s f / dx_u^s * g^s`` over s >= 1 with rational scratch
    arithmetic; the result must come out integral and is validated by the
    element constructor.
    """
    if not u < k:
        raise ValueError("taylor_comm requires u < k")
    acc = Poly.zero()
    deriv = f
    g_pow = Poly.constant(1)
    s = 0
    while True:
        deriv = deriv.partial_derivative(u)
        if deriv.is_zero:
            break
        s += 1
        g_pow = g_pow * g
        acc = acc + deriv * g_pow * Fraction(1, factorial(s))
    return GroupElement.from_layer_poly(acc, k, n)


def leading_of_monomial_comm(
    lam: Partition, k: int, theta: Partition, u: int, n: int
) -> Optional[MonomialElement]:
    """Leading term of the commutator of two monic monomials with k > u.

    Equals ``lam_u * x^(lam - e_u) x^theta Delta_k``; when the partition has
    no part equal to u the commutator is the identity and None is returned.
    """
    if not k > u:
        raise ValueError("requires k > u")
    mult = lam.multiplicity(u)
    if mult == 0:
        return None
    return MonomialElement(mult, lam.remove_part(u).combine(theta), k, n)


_FACTOR_RE = re.compile(r"\s*\[([^\]]*)\]D(\d+)\s*")


def parse_element(text: str, n: int) -> GroupElement:
    """Parse the canonical element text as a product of base-layer factors.

    Factors multiply left to right with the group product, so the canonical
    descending-layer rendering round-trips exactly.
    """
    text = text.strip()
    if text in ("1", ""):
        return GroupElement.identity(n)
    acc = GroupElement.identity(n)
    pos = 0
    first = True
    while pos < len(text):
        if not first:
            m = re.match(r"\s*\*\s*", text[pos:])
            if not m:
                raise ValueError(f"expected '*' at position {pos} in element {text!r}")
            pos += m.end()
        m = _FACTOR_RE.match(text, pos)
        if not m:
            raise ValueError(f"expected '[poly]Dk' at position {pos} in element {text!r}")
        poly = parse_poly(m.group(1))
        k = int(m.group(2))
        if not 1 <= k <= n:
            raise ValueError(f"layer {k} out of range for n={n}")
        acc = acc * GroupElement.from_layer_poly(poly, k, n)
        pos = m.end()
        first = False
    return acc
