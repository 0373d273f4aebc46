"""Tensor products of finite abelian groups and of homomorphisms.

For ``A = (+) Z_{a_i}`` and ``B = (+) Z_{b_j}`` the product is
``(+) Z_{gcd(a_i, b_j)}`` over the cells ``(i, j)`` in row-major order, and
the canonical map sends ``(x, y)`` to ``(x_i y_j mod gcd(a_i, b_j))``.
Cells with ``gcd == 1`` contribute nothing and are left out.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd
from types import MappingProxyType
from typing import Mapping

from .bilinear import BilinearMap
from .groups import Element, FinAbGroup, Homomorphism, normalize

__all__ = [
    "TensorResult",
    "tensor_cyclic",
    "tensor_product",
    "canonical_map",
    "primary_tensor_formula",
    "tensor_of_homs",
    "induced_bilinear_from_homs",
    "factor_through_tensor",
]


@dataclass(frozen=True)
class TensorResult:
    left: FinAbGroup
    right: FinAbGroup
    product: FinAbGroup
    index_map: Mapping[tuple[int, int], int]
    canonical: BilinearMap

    def generator(self, i: int, j: int) -> Element:
        """``e_i (x) e'_j`` in ``product`` (zero for dropped cells)."""
        pos = self.index_map.get((i, j))
        return self.product.zero if pos is None else self.product.basis(pos)


def tensor_cyclic(a: int, b: int) -> int:
    """Order of ``Z_a (x) Z_b``."""
    if a < 1 or b < 1:
        raise ValueError("cyclic orders must be >= 1")
    return gcd(a, b)


@lru_cache(maxsize=4096)
def tensor_product(A: FinAbGroup, B: FinAbGroup) -> TensorResult:
    factors = []
    index: dict[tuple[int, int], int] = {}
    for i, a in enumerate(A.factors):
        for j, b in enumerate(B.factors):
            g = gcd(a, b)
            if g > 1:
                index[(i, j)] = len(factors)
                factors.append(g)
    T = FinAbGroup(tuple(factors))
    grid = tuple(
        tuple(T.basis(index[(i, j)]) if (i, j) in index else T.zero for j in range(B.rank))
        for i in range(A.rank)
    )
    return TensorResult(A, B, T, MappingProxyType(index), BilinearMap(A, B, T, grid))


def canonical_map(A: FinAbGroup, B: FinAbGroup) -> BilinearMap:
    return tensor_product(A, B).canonical


def primary_tensor_formula(A: FinAbGroup, B: FinAbGroup) -> FinAbGroup:
    """``(+)_p (+)_{i in A_p} (+)_{j in B_p} Z_{p^min(i, j)}`` from primary decompositions."""
    pa, pb = normalize(A).primary, normalize(B).primary
    factors = []
    for p in sorted(set(pa) & set(pb)):
        for i in pa[p]:
            for j in pb[p]:
                factors.append(p ** min(i, j))
    return FinAbGroup(tuple(factors))


def _cross_images(f: Homomorphism, g: Homomorphism) -> tuple[TensorResult, list[list[Element]]]:
    T2 = tensor_product(f.codomain, g.codomain)
    cells = [[T2.canonical(fa, gb) for gb in g.images] for fa in f.images]
    return T2, cells


def tensor_of_homs(f: Homomorphism, g: Homomorphism) -> Homomorphism:
    """``f (x) g: dom f (x) dom g -> cod f (x) cod g``, ``a (x) b -> f(a) (x) g(b)``."""
    T1 = tensor_product(f.domain, g.domain)
    T2, cells = _cross_images(f, g)
    images = [None] * T1.product.rank
    for (i, j), pos in T1.index_map.items():
        images[pos] = cells[i][j]
    return Homomorphism(T1.product, T2.product, tuple(images))


def induced_bilinear_from_homs(f: Homomorphism, g: Homomorphism) -> BilinearMap:
    """``h(a, b) = f(a) (x) g(b)`` in ``Bil(A1 x B1, A2 (x) B2)``."""
    T2, cells = _cross_images(f, g)
    return BilinearMap(f.domain, g.domain, T2.product, tuple(tuple(row) for row in cells))


def factor_through_tensor(f: BilinearMap) -> Homomorphism:
    """The homomorphism ``h: A (x) B -> C`` with ``h o (x) = f``.

    ``h`` sends the generator of cell ``(i, j)`` to ``f(e_i, e'_j)``.
    """
    T = tensor_product(f.left, f.right)
    images = [None] * T.product.rank
    for (i, j), pos in T.index_map.items():
        images[pos] = f.grid[i][j]
    return Homomorphism(T.product, f.target, tuple(images))
