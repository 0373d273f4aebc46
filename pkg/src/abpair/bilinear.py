"""Bilinear maps between finite abelian groups.

A map ``f: A x B -> C`` with ``A = (+) Z_{a_i}`` and ``B = (+) Z_{b_j}`` is
stored by its values on generator pairs, ``grid[i][j] = f(e_i, e'_j)``.
Any grid whose cells satisfy ``gcd(a_i, b_j) * grid[i][j] == 0`` defines a
unique bilinear map, and every bilinear map arises this way, so the grid is
the same data as a homomorphism ``A (x) B -> C``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from math import gcd, prod
from typing import Iterable, Iterator, Sequence

import numpy as np

from .groups import Element, FinAbGroup, Homomorphism, normalize, structure_from_census
from .limits import EnumerationLimitError, check_size
from .numtheory import factorize, totient

__all__ = [
    "BilinearMap",
    "KernelPair",
    "Quotient",
    "QuotientPairing",
    "NondegVerdict",
    "evaluate",
    "compose_with_hom",
    "product",
    "inverse",
    "power",
    "cellwise_product",
    "cellwise_inverse",
    "left_kernel",
    "right_kernel",
    "kernels",
    "nondegeneracy",
    "is_left_nondegenerate",
    "is_right_nondegenerate",
    "is_pairing",
    "canonical_nondeg_fastpath",
    "pairing_exists",
    "quotient",
    "quotient_pairing",
    "direct_product_combine",
    "count_pairings_cyclic",
    "cyclic_pairings",
    "bilinear_candidates",
    "count_bilinear",
    "enumerate_bilinear",
]

Grid = tuple[tuple[Element, ...], ...]


@dataclass(frozen=True)
class BilinearMap:
    left: FinAbGroup
    right: FinAbGroup
    target: FinAbGroup
    grid: Grid

    def __post_init__(self):
        m, n = self.left.rank, self.right.rank
        if len(self.grid) != m or any(len(row) != n for row in self.grid):
            raise ValueError(f"grid must be {m} x {n} for {self.left} x {self.right}")
        C = self.target
        grid = tuple(tuple(C.check(cell) for cell in row) for row in self.grid)
        for i, a in enumerate(self.left.factors):
            for j, b in enumerate(self.right.factors):
                g = gcd(a, b)
                if not C.kills(g, grid[i][j]):
                    raise ValueError(
                        f"cell ({i},{j}) = {grid[i][j]} is not killed by gcd({a},{b}) = {g}"
                    )
        object.__setattr__(self, "grid", grid)

    @classmethod
    def _trusted(cls, A: FinAbGroup, B: FinAbGroup, C: FinAbGroup, grid: Grid) -> BilinearMap:
        # grid already reduced and admissible; skip validation
        f = object.__new__(cls)
        for name, value in (("left", A), ("right", B), ("target", C), ("grid", grid)):
            object.__setattr__(f, name, value)
        return f

    @classmethod
    def zero(cls, A: FinAbGroup, B: FinAbGroup, C: FinAbGroup) -> BilinearMap:
        return cls(A, B, C, tuple((C.zero,) * B.rank for _ in range(A.rank)))

    @classmethod
    def from_array(cls, A: FinAbGroup, B: FinAbGroup, C: FinAbGroup, arr) -> BilinearMap:
        arr = np.asarray(arr, dtype=np.int64).reshape(A.rank, B.rank, C.rank)
        return cls(A, B, C, tuple(tuple(tuple(map(int, cell)) for cell in row) for row in arr))

    def __call__(self, x: Sequence[int], y: Sequence[int]) -> Element:
        x, y = self.left.check(x), self.right.check(y)
        out = [0] * self.target.rank
        for xi, row in zip(x, self.grid):
            if not xi:
                continue
            for yj, cell in zip(y, row):
                if yj:
                    c = xi * yj
                    for k, v in enumerate(cell):
                        out[k] += c * v
        return self.target.check(out)

    @property
    def signature(self) -> tuple[FinAbGroup, FinAbGroup, FinAbGroup]:
        return self.left, self.right, self.target

    def grid_array(self) -> np.ndarray:
        """Grid as an ``(m, n, r)`` integer array."""
        return np.array(self.grid, dtype=np.int64).reshape(
            self.left.rank, self.right.rank, self.target.rank
        )

    def transpose(self) -> BilinearMap:
        """``(y, x) -> f(x, y)`` on ``B x A``."""
        m, n = self.left.rank, self.right.rank
        grid = tuple(tuple(self.grid[i][j] for i in range(m)) for j in range(n))
        return BilinearMap(self.right, self.left, self.target, grid)

    def is_zero(self) -> bool:
        return not any(any(cell) for row in self.grid for cell in row)

    def to_dict(self) -> dict:
        return {
            "left": list(self.left.factors),
            "right": list(self.right.factors),
            "target": list(self.target.factors),
            "grid": [[list(cell) for cell in row] for row in self.grid],
        }

    @classmethod
    def from_dict(cls, data: dict) -> BilinearMap:
        try:
            A = FinAbGroup(tuple(data["left"]))
            B = FinAbGroup(tuple(data["right"]))
            C = FinAbGroup(tuple(data["target"]))
            grid = tuple(tuple(tuple(cell) for cell in row) for row in data["grid"])
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed bilinear map: {exc}") from None
        for row in grid:
            for cell in row:
                if len(cell) != C.rank:
                    raise ValueError(f"grid cell {list(cell)} does not belong to {C}")
                if any(not isinstance(v, int) or v < 0 or v >= c for v, c in zip(cell, C.factors)):
                    raise ValueError(f"grid cell {list(cell)} is not reduced in {C}")
        return cls(A, B, C, grid)


def evaluate(f: BilinearMap, x: Sequence[int], y: Sequence[int]) -> Element:
    return f(x, y)


def compose_with_hom(f: BilinearMap, h: Homomorphism) -> BilinearMap:
    """``h o f``."""
    if h.domain != f.target:
        raise ValueError(f"homomorphism domain {h.domain} is not the target {f.target}")
    return BilinearMap(f.left, f.right, h.codomain, tuple(tuple(h(c) for c in row) for row in f.grid))


def _same_signature(f: BilinearMap, g: BilinearMap) -> None:
    if f.signature != g.signature:
        raise ValueError("bilinear maps have different signatures")


def product(f: BilinearMap, g: BilinearMap) -> BilinearMap:
    """Pointwise group law ``(fg)(a, b) = f(a, b) g(a, b)`` (additive target)."""
    _same_signature(f, g)
    C = f.target
    return BilinearMap(
        f.left, f.right, C,
        tuple(tuple(C.add(u, v) for u, v in zip(ru, rv)) for ru, rv in zip(f.grid, g.grid)),
    )


def inverse(f: BilinearMap) -> BilinearMap:
    C = f.target
    return BilinearMap(f.left, f.right, C, tuple(tuple(C.neg(u) for u in row) for row in f.grid))


def power(f: BilinearMap, n: int) -> BilinearMap:
    C = f.target
    return BilinearMap(f.left, f.right, C, tuple(tuple(C.scale(n, u) for u in row) for row in f.grid))


def cellwise_product(f: BilinearMap, g: BilinearMap) -> BilinearMap:
    """Multiply grids cell by cell in the ring ``(+) Z_{c_k}``.

    On ``Bil(Z_a x Z_a, Z_a) = End(Z_a)`` this is the ring product, under which
    the pairings form the unit group.
    """
    _same_signature(f, g)
    c = f.target.factors
    return BilinearMap(
        f.left, f.right, f.target,
        tuple(tuple(tuple(u * v % n for u, v, n in zip(cu, cv, c)) for cu, cv in zip(ru, rv))
              for ru, rv in zip(f.grid, g.grid)),
    )


def cellwise_inverse(f: BilinearMap) -> BilinearMap:
    """Inverse for :func:`cellwise_product`; every coordinate must be a unit."""
    c = f.target.factors
    try:
        grid = tuple(tuple(tuple(pow(u, -1, n) if n > 1 else 0 for u, n in zip(cell, c)) for cell in row)
                     for row in f.grid)
    except ValueError:
        raise ValueError("map has a non-unit cell and no cellwise inverse") from None
    return BilinearMap(f.left, f.right, f.target, grid)


# -- kernels -----------------------------------------------------------------


@dataclass(frozen=True)
class KernelPair:
    left_kernel: tuple[Element, ...]
    right_kernel: tuple[Element, ...]


def _annihilated(X: np.ndarray, G: np.ndarray, target: FinAbGroup) -> np.ndarray:
    """Rows ``x`` of ``X`` with ``sum_i x_i G[i, j] == 0`` for every ``j``."""
    m, n, r = G.shape
    if n == 0 or r == 0:
        return np.ones(X.shape[0], dtype=bool)
    vals = X @ G.reshape(m, n * r)
    vals %= np.tile(np.array(target.factors, dtype=np.int64), n)
    return ~vals.any(axis=1)


def left_kernel(f: BilinearMap, limit: int | None = None) -> tuple[Element, ...]:
    """``L_f = {a : f(a, b) = 0 for all b}``.

    Scans ``A``; testing against the generators of ``B`` suffices because
    ``f(a, .)`` is a homomorphism.
    """
    X = f.left.element_array(limit)
    mask = _annihilated(X, f.grid_array(), f.target)
    return tuple(tuple(map(int, row)) for row in X[mask])


def right_kernel(f: BilinearMap, limit: int | None = None) -> tuple[Element, ...]:
    Y = f.right.element_array(limit)
    mask = _annihilated(Y, f.grid_array().transpose(1, 0, 2), f.target)
    return tuple(tuple(map(int, row)) for row in Y[mask])


def kernels(f: BilinearMap, limit: int | None = None) -> KernelPair:
    return KernelPair(left_kernel(f, limit), right_kernel(f, limit))


# -- non-degeneracy ----------------------------------------------------------


@dataclass(frozen=True)
class NondegVerdict:
    """Left/right non-degeneracy; ``None`` where undecided."""

    left: bool | None
    right: bool | None
    method: str

    @property
    def pairing(self) -> bool | None:
        if self.left is False or self.right is False:
            return False
        if self.left and self.right:
            return True
        return None


def _fastpath(A: FinAbGroup, B: FinAbGroup) -> tuple[bool | None, str, bool | None, bool | None]:
    """Structural verdict on the canonical map ``A x B -> A (x) B``.

    Returns ``(verdict, rule, left, right)``; ``left``/``right`` are only
    filled in where a rule pins that side down.
    """
    sa, sb = normalize(A), normalize(B)
    primes = sorted(set(sa.primary) | set(sb.primary))
    left: bool | None = None
    right: bool | None = None
    mismatched, undecided = [], []
    for p in primes:
        ea, eb = sa.primary.get(p, ()), sb.primary.get(p, ())
        top_a = ea[0] if ea else 0
        top_b = eb[0] if eb else 0
        if top_a != top_b:
            # p^min(top) times a generator of the larger exponent kills the other side.
            mismatched.append(p)
            if top_a > top_b:
                left = False
            else:
                right = False
        elif ea != eb:
            undecided.append(p)
    if mismatched:
        return False, f"exponent mismatch at p={','.join(map(str, mismatched))}", left, right
    if undecided:
        return None, f"non-isomorphic p-parts at p={','.join(map(str, undecided))}", None, None
    if not primes:
        return True, "trivial groups", True, True
    return True, "isomorphic p-parts", True, True


def canonical_nondeg_fastpath(A: FinAbGroup, B: FinAbGroup) -> bool | None:
    """Decide non-degeneracy of the canonical map without enumeration, if possible.

    Splits by primes.  A prime whose parts have different exponents makes
    the map degenerate; isomorphic parts are non-degenerate.  Any other
    prime leaves the answer open (``None``).
    """
    return _fastpath(A, B)[0]


def _is_canonical(f: BilinearMap) -> bool:
    from .tensor import canonical_map

    return f == canonical_map(f.left, f.right)


def nondegeneracy(f: BilinearMap, limit: int | None = None) -> NondegVerdict:
    """Left/right non-degeneracy of ``f`` with the method used.

    Canonical maps go through the structural fast path first; everything
    else is decided by exhaustive kernel scans.
    """
    method = "enumeration"
    left: bool | None = None
    right: bool | None = None
    if _is_canonical(f):
        verdict, rule, left, right = _fastpath(f.left, f.right)
        if verdict is True:
            return NondegVerdict(True, True, f"fastpath: {rule}")
        if verdict is False:
            method = f"fastpath: {rule}"
            try:
                if left is None:
                    left = len(left_kernel(f, limit)) == 1
                if right is None:
                    right = len(right_kernel(f, limit)) == 1
                method += " + enumeration"
            except EnumerationLimitError:
                pass
            return NondegVerdict(left, right, method)
    left = len(left_kernel(f, limit)) == 1
    right = len(right_kernel(f, limit)) == 1
    return NondegVerdict(left, right, method)


def is_left_nondegenerate(f: BilinearMap, limit: int | None = None) -> bool:
    if _is_canonical(f) and canonical_nondeg_fastpath(f.left, f.right):
        return True
    return len(left_kernel(f, limit)) == 1


def is_right_nondegenerate(f: BilinearMap, limit: int | None = None) -> bool:
    if _is_canonical(f) and canonical_nondeg_fastpath(f.left, f.right):
        return True
    return len(right_kernel(f, limit)) == 1


def is_pairing(f: BilinearMap, limit: int | None = None) -> bool:
    if _is_canonical(f):
        fp = canonical_nondeg_fastpath(f.left, f.right)
        if fp is not None:
            return fp
    return len(left_kernel(f, limit)) == 1 and len(right_kernel(f, limit)) == 1


def pairing_exists(A: FinAbGroup, B: FinAbGroup, limit: int | None = None) -> bool:
    """Whether some pairing ``A x B -> C`` exists for some finite ``C``.

    A pairing exists iff the canonical map into ``A (x) B`` is one: any
    pairing factors through it, and when it is non-degenerate it is itself
    a pairing.
    """
    from .tensor import canonical_map

    fp = canonical_nondeg_fastpath(A, B)
    if fp is not None:
        return fp
    return is_pairing(canonical_map(A, B), limit)


# -- quotients ---------------------------------------------------------------


@dataclass(frozen=True)
class Quotient:
    """``ambient / subgroup`` with an explicit cyclic presentation.

    ``generators[i]`` is the smallest representative of the coset that
    generates the ``i``-th factor of ``group``.
    """

    ambient: FinAbGroup
    subgroup: tuple[Element, ...]
    group: FinAbGroup
    generators: tuple[Element, ...]
    representatives: tuple[Element, ...]
    _projection: dict = field(repr=False, compare=False)

    def project(self, x: Sequence[int]) -> Element:
        return self._projection[self.ambient.check(x)]

    def lift(self, q: Sequence[int]) -> Element:
        """Smallest representative of the coset with quotient coordinates ``q``."""
        return self.representatives[self.group.index_of(q)]

    def as_homomorphism(self) -> Homomorphism:
        A = self.ambient
        return Homomorphism(A, self.group, tuple(self.project(A.basis(i)) for i in range(A.rank)))


def _coset_order(G: FinAbGroup, x: Element, K: frozenset) -> int:
    n = G.exponent
    for p in factorize(n):
        while n % p == 0 and G.scale(n // p, x) in K:
            n //= p
    return n


def _find_basis(G: FinAbGroup, reps: list[Element], rep_of: dict, orders: dict,
                chain: tuple[int, ...]) -> list[Element] | None:
    """Coset representatives generating ``(+) Z_{chain[i]}`` inside the quotient.

    Chooses the largest invariant factor first and backtracks whenever the
    span stops growing by the full factor order.
    """
    zero = rep_of[G.zero]
    by_order: dict[int, list[Element]] = {}
    for r in reps:
        by_order.setdefault(orders[r], []).append(r)

    def extend(level: int, span: frozenset) -> list[Element] | None:
        if level < 0:
            return []
        d = chain[level]
        for g in by_order.get(d, ()):
            if g in span:
                continue
            multiples = [G.zero]
            for _ in range(d - 1):
                multiples.append(G.add(multiples[-1], g))
            new = {rep_of[G.add(s, k)] for s in span for k in multiples}
            if len(new) != len(span) * d:
                continue
            rest = extend(level - 1, frozenset(new))
            if rest is not None:
                return rest + [g]
        return None

    return extend(len(chain) - 1, frozenset([zero]))


def quotient(G: FinAbGroup, subgroup: Iterable[Sequence[int]], limit: int | None = None) -> Quotient:
    """Quotient of ``G`` by a subgroup given as its full element list.

    The structure is recovered from the order census of the cosets.  A
    trivial subgroup returns ``G`` with its own presentation.
    """
    check_size(f"quotient of {G}", G.order, limit)
    return _quotient(G, frozenset(G.check(k) for k in subgroup))


def _is_subgroup(G: FinAbGroup, K: frozenset) -> bool:
    """Grow the span of ``K`` one cyclic piece at a time; it must end up equal to ``K``."""
    span = {G.zero}
    for k in sorted(K):
        if k in span:
            continue
        multiples = [G.zero]
        x = k
        while x != G.zero:
            multiples.append(x)
            x = G.add(x, k)
        span = {G.add(s, m) for s in span for m in multiples}
        if len(span) > len(K):
            return False
    return span == K


@lru_cache(maxsize=8192)
def _quotient(G: FinAbGroup, K: frozenset) -> Quotient:
    if G.zero not in K:
        raise ValueError("subgroup must contain zero")
    if G.order % len(K) or not _is_subgroup(G, K):
        raise ValueError(f"the given {len(K)} elements do not form a subgroup of {G}")
    elements = list(G.elements())
    if len(K) == 1:
        proj = {x: x for x in elements}
        gens = tuple(G.basis(i) for i in range(G.rank))
        return Quotient(G, tuple(sorted(K)), G, gens, tuple(elements), proj)

    rep_of: dict[Element, Element] = {}
    reps: list[Element] = []
    for x in elements:
        if x in rep_of:
            continue
        reps.append(x)
        for k in K:
            y = G.add(x, k)
            if y in rep_of:
                raise ValueError("element list is not a subgroup (cosets overlap)")
            rep_of[y] = x
    if len(reps) * len(K) != G.order:
        raise ValueError("element list is not a subgroup")
    orders = {r: _coset_order(G, r, K) for r in reps}
    chain = structure_from_census(list(orders.values())).invariant_factors
    basis = _find_basis(G, reps, rep_of, orders, chain)
    if basis is None:
        raise ValueError("element list is not a subgroup (no basis for the quotient)")
    Q = FinAbGroup(chain)
    coords_of_rep: dict[Element, Element] = {}
    reps_by_q: list[Element] = []
    for q in Q.elements():
        s = G.zero
        for qi, g in zip(q, basis):
            s = G.add(s, G.scale(qi, g))
        r = rep_of[s]
        coords_of_rep[r] = q
        reps_by_q.append(r)
    proj = {x: coords_of_rep[rep_of[x]] for x in elements}
    return Quotient(G, tuple(sorted(K)), Q, tuple(basis), tuple(reps_by_q), proj)


@dataclass(frozen=True)
class QuotientPairing:
    """``f`` pushed down to ``A / L_f x B / R_f``."""

    base: BilinearMap
    quotient_left: Quotient
    quotient_right: Quotient
    induced: BilinearMap

    def __call__(self, a: Sequence[int], b: Sequence[int]) -> Element:
        """``induced(a mod L_f, b mod R_f)`` for representatives ``a``, ``b``."""
        return self.induced(self.quotient_left.project(a), self.quotient_right.project(b))


def quotient_pairing(f: BilinearMap, limit: int | None = None) -> QuotientPairing:
    kp = kernels(f, limit)
    ql = quotient(f.left, kp.left_kernel, limit)
    qr = quotient(f.right, kp.right_kernel, limit)
    grid = tuple(tuple(f(g, h) for h in qr.generators) for g in ql.generators)
    induced = BilinearMap(ql.group, qr.group, f.target, grid)
    return QuotientPairing(f, ql, qr, induced)


# -- constructions and counts --------------------------------------------------


def direct_product_combine(fs: Sequence[BilinearMap]) -> BilinearMap:
    """``(a, b) -> (f_1(a, b), ..., f_n(a, b))`` into the direct sum of targets."""
    if not fs:
        raise ValueError("need at least one bilinear map")
    A, B = fs[0].left, fs[0].right
    for f in fs[1:]:
        if f.left != A or f.right != B:
            raise ValueError("all maps must share left and right groups")
    C = FinAbGroup(tuple(c for f in fs for c in f.target.factors))
    grid = tuple(
        tuple(tuple(v for f in fs for v in f.grid[i][j]) for j in range(B.rank))
        for i in range(A.rank)
    )
    return BilinearMap(A, B, C, grid)


def count_pairings_cyclic(a: int) -> int:
    """Number of pairings ``Z_a x Z_a -> Z_a``, namely Euler's phi of ``a``."""
    if a < 1:
        raise ValueError("a must be >= 1")
    return totient(a)


def cyclic_pairings(a: int) -> list[tuple[int, BilinearMap]]:
    """All pairings ``Z_a x Z_a -> Z_a`` as ``(k, (x, y) -> k x y)`` with ``k`` a unit mod ``a``."""
    Z = FinAbGroup((a,))
    return [(k, BilinearMap(Z, Z, Z, (((k % a,),),))) for k in range(a) if gcd(k, a) == 1]


def bilinear_candidates(A: FinAbGroup, B: FinAbGroup, C: FinAbGroup,
                        limit: int | None = None) -> list[list[Element]]:
    """Admissible values of each grid cell (row-major), found by scanning ``C``."""
    Z = C.element_array(limit)
    c = np.array(C.factors, dtype=np.int64)
    by_gcd: dict[int, list[Element]] = {}
    cells = []
    for a in A.factors:
        for b in B.factors:
            g = gcd(a, b)
            if g not in by_gcd:
                if C.rank == 0:
                    by_gcd[g] = [C.zero]
                else:
                    mask = ~((g * Z) % c).any(axis=1)
                    by_gcd[g] = [tuple(map(int, row)) for row in Z[mask]]
            cells.append(by_gcd[g])
    return cells


def count_bilinear(A: FinAbGroup, B: FinAbGroup, C: FinAbGroup, limit: int | None = None) -> int:
    return prod(len(c) for c in bilinear_candidates(A, B, C, limit))


def enumerate_bilinear(A: FinAbGroup, B: FinAbGroup, C: FinAbGroup,
                       limit: int | None = None) -> Iterator[BilinearMap]:
    """Every bilinear map ``A x B -> C`` exactly once, lexicographic in grid cells."""
    cells = bilinear_candidates(A, B, C, limit)
    check_size(f"Bil({A} x {B}, {C})", prod(len(c) for c in cells), limit)
    m, n = A.rank, B.rank
    for flat in itertools.product(*cells):
        yield BilinearMap._trusted(A, B, C, tuple(tuple(flat[i * n:(i + 1) * n]) for i in range(m)))
