"""The triangular derivation delta, its opposite, and the group actions.

delta sends x_i -> 0 and y_i -> x_i and extends by the Leibniz rule; its
kernel (the algebra of constants) is what the rest of the package
measures.  delta_star is the opposite lowering map x_i -> y_i, y_i -> 0;
together they form an sl2 pair whose commutator acts on a bi-homogeneous
polynomial of bi-weight (p, q) as the scalar p - q.  That structure is
what makes weight-vector ladders work.

Both derivations act monomial-by-monomial (each image has at most d
terms), not by substitute-and-subtract.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce

from .poly import Monomial, Polynomial

__all__ = [
    "delta",
    "delta_star",
    "is_constant",
    "exp_action",
    "GL2Element",
    "gl2_action",
    "proportionality",
    "WeightVectorChain",
    "build_chain",
]


def _replace(exponents: tuple[int, ...], i: int, value: int) -> tuple[int, ...]:
    return exponents[:i] + (value,) + exponents[i + 1 :]


def delta(f: Polynomial) -> Polynomial:
    """Map each y_i to x_i, one position at a time, weighted by its exponent."""
    terms: dict[Monomial, Fraction] = {}
    for m, c in f.terms():
        for i, bi in enumerate(m.b):
            if bi == 0:
                continue
            image = Monomial(_replace(m.a, i, m.a[i] + 1), _replace(m.b, i, bi - 1))
            s = terms.get(image, Fraction(0)) + c * bi
            if s:
                terms[image] = s
            else:
                terms.pop(image, None)
    return Polynomial(f.d, terms)


def delta_star(f: Polynomial) -> Polynomial:
    """The opposite derivation: x_i -> y_i, y_i -> 0."""
    terms: dict[Monomial, Fraction] = {}
    for m, c in f.terms():
        for i, ai in enumerate(m.a):
            if ai == 0:
                continue
            image = Monomial(_replace(m.a, i, ai - 1), _replace(m.b, i, m.b[i] + 1))
            s = terms.get(image, Fraction(0)) + c * ai
            if s:
                terms[image] = s
            else:
                terms.pop(image, None)
    return Polynomial(f.d, terms)


def is_constant(f: Polynomial) -> bool:
    return delta(f).is_zero


@dataclass(frozen=True)
class GL2Element:
    """An invertible 2x2 rational matrix ((g11, g12), (g21, g22))."""

    g11: Fraction
    g12: Fraction
    g21: Fraction
    g22: Fraction

    def __post_init__(self):
        for name in ("g11", "g12", "g21", "g22"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if self.det == 0:
            raise ValueError("singular matrix rejected")

    @property
    def det(self) -> Fraction:
        return self.g11 * self.g22 - self.g12 * self.g21

    @classmethod
    def identity(cls) -> "GL2Element":
        return cls(Fraction(1), Fraction(0), Fraction(0), Fraction(1))

    @classmethod
    def unitriangular(cls, t) -> "GL2Element":
        return cls(Fraction(1), Fraction(t), Fraction(0), Fraction(1))

    def __matmul__(self, other: "GL2Element") -> "GL2Element":
        return GL2Element(
            self.g11 * other.g11 + self.g12 * other.g21,
            self.g11 * other.g12 + self.g12 * other.g22,
            self.g21 * other.g11 + self.g22 * other.g21,
            self.g21 * other.g12 + self.g22 * other.g22,
        )


def gl2_action(g: GL2Element, f: Polynomial) -> Polynomial:
    """Substitute x_i -> g11*x_i + g21*y_i and y_i -> g12*x_i + g22*y_i.

    The same matrix acts on every index pair, so multidegree components
    are preserved.  This is a left action: acting by g @ h equals acting
    by h first, then by g.
    """
    d = f.d
    out = Polynomial.zero(d)
    for m, c in f.terms():
        factors = []
        for i in range(1, d + 1):
            ai, bi = m.a[i - 1], m.b[i - 1]
            if ai:
                gx = Polynomial.x(i, d) * g.g11 + Polynomial.y(i, d) * g.g21
                factors.append(gx**ai)
            if bi:
                gy = Polynomial.x(i, d) * g.g12 + Polynomial.y(i, d) * g.g22
                factors.append(gy**bi)
        image = reduce(lambda p, q: p * q, factors, Polynomial.one(d))
        out = out + image * c
    return out


def exp_action(f: Polynomial, t) -> Polynomial:
    """The unipotent flow exp(t*delta): y_i -> y_i + t*x_i, x_i fixed.

    Equals the finite sum of t^k delta^k(f) / k! and is a ring
    automorphism; constants of delta are exactly its fixed points.
    """
    return gl2_action(GL2Element.unitriangular(t), f)


def proportionality(f: Polynomial, g: Polynomial) -> Fraction | None:
    """The scalar c with f = c*g, or None if f is not a multiple of g != 0."""
    if g.is_zero:
        raise ValueError("g must be nonzero")
    if f.is_zero:
        return Fraction(0)
    lead = g.leading_monomial()
    c = f.coefficient(lead) / g.leading_coefficient()
    return c if f == g * c else None


@dataclass(frozen=True)
class WeightVectorChain:
    """A lowering ladder grown from one bi-homogeneous constant.

    ladder[i] is the i-th delta_star image of base; its bi-weight is
    (p - i, q + i) when base has bi-weight (p, q), and the ladder has
    exactly p - q + 1 nonzero rungs.  raising_scalars[i-1] is the nonzero
    c_i with delta(ladder[i]) = c_i * ladder[i-1].
    """

    base: Polynomial
    ladder: tuple[Polynomial, ...]
    weight: tuple[int, int]
    raising_scalars: tuple[Fraction, ...]

    def __len__(self) -> int:
        return len(self.ladder)


def build_chain(w0: Polynomial) -> WeightVectorChain:
    """Apply delta_star repeatedly to a bi-homogeneous constant.

    Validates the sl2 ladder shape as it goes: p - q + 1 nonzero rungs,
    zero immediately after, and delta stepping each rung back to a
    nonzero multiple of the one before.
    """
    if w0.is_zero:
        raise ValueError("chain base must be nonzero")
    if not is_constant(w0):
        raise ValueError("chain base must be a constant of delta")
    weight = w0.biweight()
    if weight is None:
        raise ValueError("chain base must be bi-homogeneous")
    p, q = weight
    if p < q:
        raise ValueError(f"bi-weight ({p}, {q}) cannot head a ladder")
    length = p - q
    ladder = [w0]
    for _ in range(length):
        ladder.append(delta_star(ladder[-1]))
    for i, w in enumerate(ladder):
        if w.is_zero:
            raise ValueError(f"ladder rung {i} vanished early")
    beyond = delta_star(ladder[-1])
    if not beyond.is_zero:
        raise ValueError("ladder failed to terminate after p - q steps")
    scalars = []
    for i in range(1, length + 1):
        c = proportionality(delta(ladder[i]), ladder[i - 1])
        if c is None or c == 0:
            raise ValueError(f"delta does not step rung {i} onto rung {i - 1}")
        scalars.append(c)
    return WeightVectorChain(w0, tuple(ladder), (p, q), tuple(scalars))
