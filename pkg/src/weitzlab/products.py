"""The conjectured generators and the per-component verification engine.

The candidate generating set is X_d = {x_1..x_d} together with the 2x2
determinants u_ij = x_i*y_j - x_j*y_i (i < j).  A ProductTerm names one
monomial x^p * prod u_ij^q_ij in those generators; enumerate_products
lists every ProductTerm of a given multidegree.  The products span each
component's kernel but are not independent: the Plucker identity
u_ij*u_kl - u_ik*u_jl + u_il*u_jk = 0 (and its x-degree shadows) makes
the span collapse, which is why ranks are measured by elimination rather
than by counting.

verify_component is the whole point: for one multidegree it computes the
kernel dimension, the product-span dimension, and the independent tableau
count, and reports whether all three agree.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from .derivation import delta, is_constant
from .kernel import kernel_basis
from .linalg import ExactMatrix, LinearSolver
from .poly import Polynomial, component_basis, format_poly
from .tableaux import kostka, two_row_partitions

__all__ = [
    "make_u",
    "pair_order",
    "ProductTerm",
    "enumerate_products",
    "expand",
    "span_dimension",
    "pluecker",
    "decompose",
    "NotInKernel",
    "NotHomogeneous",
    "ConjectureViolation",
    "ComponentReport",
    "verify_component",
]


def make_u(d: int, i: int, j: int) -> Polynomial:
    """The determinant x_i*y_j - x_j*y_i; antisymmetric in (i, j)."""
    if not (1 <= i <= d and 1 <= j <= d):
        raise ValueError(f"indices must lie in 1..{d}")
    if i == j:
        raise ValueError("u_ii is identically zero and rejected")
    if i > j:
        return -make_u(d, j, i)
    x_i, y_i = Polynomial.x(i, d), Polynomial.y(i, d)
    x_j, y_j = Polynomial.x(j, d), Polynomial.y(j, d)
    return x_i * y_j - x_j * y_i


def pair_order(d: int) -> tuple[tuple[int, int], ...]:
    """All index pairs (i, j) with i < j, lexicographically."""
    return tuple(combinations(range(1, d + 1), 2))


@dataclass(frozen=True)
class ProductTerm:
    """Exponent data for one product x^p * prod u_ij^q_ij.

    q is stored flat over pair_order(d).  x_i^p_i contributes p_i to
    component i of the multidegree; u_ij^q contributes q to components i
    and j.
    """

    p: tuple[int, ...]
    q: tuple[int, ...]

    @property
    def d(self) -> int:
        return len(self.p)

    def multidegree(self) -> tuple[int, ...]:
        n = list(self.p)
        for (i, j), e in zip(pair_order(self.d), self.q):
            n[i - 1] += e
            n[j - 1] += e
        return tuple(n)

    def label(self) -> str:
        parts = []
        for i, e in enumerate(self.p, start=1):
            if e == 1:
                parts.append(f"x{i}")
            elif e >= 2:
                parts.append(f"x{i}^{e}")
        for (i, j), e in zip(pair_order(self.d), self.q):
            if e == 0:
                continue
            name = f"u{i}{j}" if j <= 9 else f"u{i}_{j}"
            parts.append(name if e == 1 else f"{name}^{e}")
        return "*".join(parts) if parts else "1"


@lru_cache(maxsize=None)
def enumerate_products(d: int, n: tuple[int, ...]) -> tuple[ProductTerm, ...]:
    """Every ProductTerm of multidegree n, exactly once, in a fixed order.

    Recursion assigns u exponents pair by pair (lexicographic pairs,
    exponent ascending); whatever degree remains is forced onto p.  The
    all-x product therefore always comes first.
    """
    if len(n) != d or any(k < 0 for k in n):
        raise ValueError("invalid multidegree")
    pairs = pair_order(d)
    found: list[ProductTerm] = []

    def assign(k: int, remaining: list[int], q: list[int]) -> None:
        if k == len(pairs):
            found.append(ProductTerm(tuple(remaining), tuple(q)))
            return
        i, j = pairs[k]
        cap = min(remaining[i - 1], remaining[j - 1])
        for e in range(cap + 1):
            remaining[i - 1] -= e
            remaining[j - 1] -= e
            q.append(e)
            assign(k + 1, remaining, q)
            q.pop()
            remaining[i - 1] += e
            remaining[j - 1] += e

    assign(0, list(n), [])
    return tuple(found)


@lru_cache(maxsize=None)
def expand(t: ProductTerm) -> Polynomial:
    """Multiply the product out; the result is always a constant of delta."""
    d = t.d
    poly = Polynomial.one(d)
    for i, e in enumerate(t.p, start=1):
        if e:
            poly = poly * Polynomial.x(i, d) ** e
    for (i, j), e in zip(pair_order(d), t.q):
        if e:
            poly = poly * make_u(d, i, j) ** e
    return poly


class NotInKernel(ValueError):
    """Raised for inputs with a nonzero delta image; carries that image."""

    def __init__(self, image: Polynomial):
        super().__init__(f"not in the kernel: delta(f) = {format_poly(image)}")
        self.image = image


class NotHomogeneous(ValueError):
    pass


class ConjectureViolation(Exception):
    """A kernel element outside the product span; must never be swallowed."""


@lru_cache(maxsize=None)
def _component_solver(d: int, n: tuple[int, ...]) -> LinearSolver:
    """Solver for the expansion matrix of one component, built once.

    Columns are the expanded products in enumeration order, rows the
    component basis monomials; its rank is the span dimension and its
    solve() decomposes kernel elements.
    """
    basis = component_basis(d, n)
    index = {m: i for i, m in enumerate(basis)}
    entries: dict[tuple[int, int], Fraction] = {}
    for col, term in enumerate(enumerate_products(d, n)):
        for m, c in expand(term).terms():
            entries[(index[m], col)] = c
    matrix = ExactMatrix(len(basis), len(enumerate_products(d, n)), entries)
    return LinearSolver(matrix)


def span_dimension(d: int, n: tuple[int, ...]) -> int:
    """Exact rank of the products of multidegree n inside their component."""
    return _component_solver(d, n).rank


def pluecker(d: int, i: int, j: int, k: int, l: int) -> Polynomial:
    """Expand u_ij*u_kl - u_ik*u_jl + u_il*u_jk; identically zero."""
    if not i < j < k < l:
        raise ValueError("indices must be strictly increasing")
    if l > d:
        raise ValueError(f"index {l} out of range 1..{d}")
    return (
        make_u(d, i, j) * make_u(d, k, l)
        - make_u(d, i, k) * make_u(d, j, l)
        + make_u(d, i, l) * make_u(d, j, k)
    )


def decompose(f: Polynomial) -> dict[ProductTerm, Fraction]:
    """Write a homogeneous constant as a combination of products.

    Among the affine solution set the certificate supported on the
    earliest products in enumeration order is returned (free coordinates
    of the echelon parametrization are pinned to zero).  Re-expanding the
    certificate reproduces f exactly; a constant with no certificate
    would contradict the spanning theorem and raises ConjectureViolation.
    """
    if f.is_zero:
        return {}
    image = delta(f)
    if not image.is_zero:
        raise NotInKernel(image)
    n = f.multidegree()
    if n is None:
        raise NotHomogeneous(
            "input mixes multidegrees; decompose each component separately"
        )
    d = f.d
    solver = _component_solver(d, n)
    rhs = [Fraction(0)] * len(component_basis(d, n))
    index = {m: i for i, m in enumerate(component_basis(d, n))}
    for m, c in f.terms():
        rhs[index[m]] = c
    solution = solver.solve(rhs)
    if solution is None:
        raise ConjectureViolation(
            f"kernel element of multidegree {n} lies outside the product span: "
            f"{format_poly(f)}"
        )
    products = enumerate_products(d, n)
    return {products[k]: c for k, c in enumerate(solution) if c}


@dataclass(frozen=True)
class ComponentReport:
    """Verification record for one multidegree component."""

    n: tuple[int, ...]
    dim_kernel: int
    dim_span: int
    dim_tableau_oracle: int
    product_count: int
    verdict: bool
    seconds: float

    def to_dict(self) -> dict:
        return {
            "n": list(self.n),
            "dim_kernel": self.dim_kernel,
            "dim_span": self.dim_span,
            "dim_tableau_oracle": self.dim_tableau_oracle,
            "product_count": self.product_count,
            "verdict": self.verdict,
            "seconds": self.seconds,
        }


def verify_component(d: int, n: tuple[int, ...]) -> ComponentReport:
    """Compare the three dimension routes for one component.

    dim_kernel comes from exact elimination, dim_span from the rank of the
    expanded products, and the oracle from summing Kostka numbers over
    two-row shapes.  As a side check every expanded product is confirmed
    to be a constant.
    """
    start = time.perf_counter()
    n = tuple(n)
    dim_kernel = kernel_basis(d, n).dimension
    products = enumerate_products(d, n)
    for t in products:
        if not is_constant(expand(t)):
            raise AssertionError(f"product {t.label()} is not a constant")
    dim_span = span_dimension(d, n)
    oracle = sum(kostka(shape, n) for shape in two_row_partitions(sum(n)))
    verdict = dim_kernel == dim_span == oracle
    return ComponentReport(
        n=n,
        dim_kernel=dim_kernel,
        dim_span=dim_span,
        dim_tableau_oracle=oracle,
        product_count=len(products),
        verdict=verdict,
        seconds=time.perf_counter() - start,
    )
