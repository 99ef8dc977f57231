"""Exact kernels of delta, one multidegree component at a time.

delta preserves every multidegree component, so its kernel is computed
component by component.  Within a component delta only connects adjacent
bi-weight blocks, (p, q) -> (p + 1, q - 1); the kernel therefore splits as
the direct sum of per-block kernels and each block gives a much smaller
elimination than the whole component.  The test suite cross-checks the
block route against whole-component elimination.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .derivation import delta, is_constant
from .linalg import ExactMatrix, primitive_integer_vector
from .poly import Monomial, Polynomial, component_basis

__all__ = ["delta_matrix", "KernelBasis", "kernel_basis"]


def delta_matrix(d: int, n: tuple[int, ...]) -> ExactMatrix:
    """Matrix of delta on the multidegree-n component.

    Rows and columns are both indexed by component_basis(d, n) in
    canonical order; column j holds the image of the j-th basis monomial.
    """
    basis = component_basis(d, n)
    index = {m: i for i, m in enumerate(basis)}
    entries: dict[tuple[int, int], Fraction] = {}
    for j, m in enumerate(basis):
        image = delta(Polynomial.from_monomial(m))
        for mi, c in image.terms():
            entries[(index[mi], j)] = c
    return ExactMatrix(len(basis), len(basis), entries)


@dataclass(frozen=True)
class KernelBasis:
    """Basis of the constants of one multidegree component.

    vectors are bi-homogeneous polynomials, normalized to coprime integer
    coefficients with positive leading term, listed by increasing y-weight
    and then by nullspace order.  dims_by_biweight records the dimension
    of each nonzero bi-weight block.
    """

    d: int
    n: tuple[int, ...]
    vectors: tuple[Polynomial, ...]
    dims_by_biweight: tuple[tuple[tuple[int, int], int], ...]

    @property
    def dimension(self) -> int:
        return len(self.vectors)


def _biweight_blocks(d: int, n: tuple[int, ...]) -> list[tuple[int, list[Monomial]]]:
    blocks: dict[int, list[Monomial]] = {}
    for m in component_basis(d, n):
        blocks.setdefault(m.biweight()[1], []).append(m)
    return sorted(blocks.items())


@lru_cache(maxsize=None)
def kernel_basis(d: int, n: tuple[int, ...]) -> KernelBasis:
    """Solve delta = 0 block by block and rebuild polynomials."""
    total = sum(n)
    blocks = dict(_biweight_blocks(d, n))
    vectors: list[Polynomial] = []
    dims: list[tuple[tuple[int, int], int]] = []
    for q in sorted(blocks):
        source = blocks[q]
        target = blocks.get(q - 1, [])
        target_index = {m: i for i, m in enumerate(target)}
        entries: dict[tuple[int, int], Fraction] = {}
        for j, m in enumerate(source):
            image = delta(Polynomial.from_monomial(m))
            for mi, c in image.terms():
                entries[(target_index[mi], j)] = c
        matrix = ExactMatrix(len(target), len(source), entries)
        block_vectors = []
        for coeffs in matrix.nullspace():
            ints = primitive_integer_vector(coeffs)
            poly = Polynomial(
                d, {m: Fraction(c) for m, c in zip(source, ints) if c}
            )
            block_vectors.append(poly)
        if block_vectors:
            dims.append(((total - q, q), len(block_vectors)))
            vectors.extend(block_vectors)
    basis = KernelBasis(d, n, tuple(vectors), tuple(dims))
    for v in basis.vectors:
        if not is_constant(v):
            raise AssertionError("kernel vector failed the constancy check")
    return basis
