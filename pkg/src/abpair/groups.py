"""Finite abelian groups presented as direct sums of cyclic groups.

A group is an ordered tuple of cyclic orders ``(a_1, ..., a_m)``, i.e.
``Z_{a_1} + ... + Z_{a_m}``.  The presentation itself is data: the canonical
tensor map depends on it, so two isomorphic presentations are different
values.  Isomorphism is the separate query :func:`is_isomorphic`.

Elements are plain tuples of residues, one per cyclic factor.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from math import lcm, prod
from typing import Iterator, Mapping, Sequence

import numpy as np

from .limits import check_size
from .numtheory import factorize

Element = tuple[int, ...]

__all__ = [
    "Element",
    "FinAbGroup",
    "GroupStructure",
    "Homomorphism",
    "CensusError",
    "normalize",
    "exponent",
    "is_isomorphic",
    "census",
    "structure_from_census",
    "hom_eval",
    "hom_kernel",
    "homomorphism_candidates",
    "enumerate_homomorphisms",
    "count_homomorphisms",
    "p_component",
]


@lru_cache(maxsize=512)
def _element_array(factors: tuple[int, ...]) -> np.ndarray:
    if not factors:
        arr = np.zeros((1, 0), dtype=np.int64)
    else:
        grids = np.indices(factors, dtype=np.int64)
        arr = grids.reshape(len(factors), -1).T.copy()
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True)
class FinAbGroup:
    factors: tuple[int, ...]

    def __post_init__(self):
        facs = tuple(int(a) for a in self.factors)
        for a in facs:
            if a < 1:
                raise ValueError(f"cyclic factor orders must be >= 1, got {a}")
        object.__setattr__(self, "factors", facs)

    @classmethod
    def of(cls, *factors: int) -> FinAbGroup:
        return cls(tuple(factors))

    @classmethod
    def trivial(cls) -> FinAbGroup:
        return cls(())

    def __str__(self) -> str:
        if not self.factors:
            return "Z1"
        return "x".join(f"Z{a}" for a in self.factors)

    @property
    def rank(self) -> int:
        return len(self.factors)

    @property
    def order(self) -> int:
        return prod(self.factors)

    @property
    def exponent(self) -> int:
        return lcm(*self.factors) if self.factors else 1

    def is_trivial(self) -> bool:
        return self.order == 1

    def direct_sum(self, other: FinAbGroup) -> FinAbGroup:
        return FinAbGroup(self.factors + other.factors)

    # -- elements ---------------------------------------------------------

    def check(self, x: Sequence[int]) -> Element:
        """Validate arity and reduce ``x`` into canonical residues."""
        if len(x) != len(self.factors):
            raise ValueError(
                f"element of length {len(x)} does not belong to {self} (rank {self.rank})"
            )
        return tuple(int(c) % a for c, a in zip(x, self.factors))

    def element(self, *coords: int) -> Element:
        return self.check(coords)

    @property
    def zero(self) -> Element:
        return (0,) * len(self.factors)

    def basis(self, i: int) -> Element:
        """The generator ``e_i`` of the ``i``-th cyclic factor."""
        coords = [0] * len(self.factors)
        coords[i] = 1
        return self.check(coords)

    def add(self, x: Sequence[int], y: Sequence[int]) -> Element:
        x, y = self.check(x), self.check(y)
        return tuple((u + v) % a for u, v, a in zip(x, y, self.factors))

    def neg(self, x: Sequence[int]) -> Element:
        return tuple(-u % a for u, a in zip(self.check(x), self.factors))

    def sub(self, x: Sequence[int], y: Sequence[int]) -> Element:
        return self.add(x, self.neg(y))

    def scale(self, n: int, x: Sequence[int]) -> Element:
        return tuple(n * u % a for u, a in zip(self.check(x), self.factors))

    def is_zero(self, x: Sequence[int]) -> bool:
        return not any(self.check(x))

    def kills(self, n: int, x: Element) -> bool:
        """``n x == 0`` for an already reduced element ``x``."""
        return all(n * u % a == 0 for u, a in zip(x, self.factors))

    def order_of(self, x: Sequence[int]) -> int:
        """Order of ``x``, found by stripping primes off the group exponent."""
        x = self.check(x)
        n = self.exponent
        for p in factorize(n):
            while n % p == 0 and self.is_zero(self.scale(n // p, x)):
                n //= p
        return n

    def elements(self) -> Iterator[Element]:
        """All elements, each exactly once, in lexicographic coordinate order."""
        return itertools.product(*(range(a) for a in self.factors))

    def element_array(self, limit: int | None = None) -> np.ndarray:
        """Read-only ``(order, rank)`` integer array of :meth:`elements`."""
        check_size(f"enumerating {self}", self.order, limit)
        return _element_array(self.factors)

    def index_of(self, x: Sequence[int]) -> int:
        """Position of ``x`` in :meth:`elements`."""
        idx = 0
        for c, a in zip(self.check(x), self.factors):
            idx = idx * a + c
        return idx


@dataclass(frozen=True)
class GroupStructure:
    """Isomorphism invariants of a finite abelian group.

    ``invariant_factors`` is the chain ``d_1 | d_2 | ... | d_r`` (all ``>= 2``);
    ``primary`` maps each prime to its exponents in descending order.
    """

    invariant_factors: tuple[int, ...]
    primary: Mapping[int, tuple[int, ...]] = field(default_factory=dict)

    def group(self) -> FinAbGroup:
        return FinAbGroup(self.invariant_factors)

    def primary_factors(self) -> tuple[int, ...]:
        return tuple(p**e for p in sorted(self.primary) for e in self.primary[p])

    @property
    def order(self) -> int:
        return prod(self.invariant_factors)


def _structure_from_primary(primary: dict[int, list[int]]) -> GroupStructure:
    primary = {p: tuple(sorted(es, reverse=True)) for p, es in primary.items() if es}
    r = max((len(es) for es in primary.values()), default=0)
    # CRT recombination: the k-th largest invariant factor takes the k-th
    # largest exponent of every prime.
    chain = [prod(p**es[k] for p, es in primary.items() if len(es) > k) for k in range(r)]
    return GroupStructure(tuple(reversed(chain)), dict(sorted(primary.items())))


def normalize(G: FinAbGroup) -> GroupStructure:
    primary: dict[int, list[int]] = {}
    for a in G.factors:
        for p, e in factorize(a).items():
            primary.setdefault(p, []).append(e)
    return _structure_from_primary(primary)


def exponent(G: FinAbGroup) -> int:
    return G.exponent


def is_isomorphic(G: FinAbGroup, H: FinAbGroup) -> bool:
    return normalize(G).invariant_factors == normalize(H).invariant_factors


def p_component(G: FinAbGroup, p: int) -> FinAbGroup:
    """The ``p``-primary part of ``G`` presented as ``Z_{p^e}`` factors, descending."""
    return FinAbGroup(tuple(p**e for e in normalize(G).primary.get(p, ())))


def census(G: FinAbGroup, limit: int | None = None) -> dict[int, int]:
    """Element-order census ``{order: count}`` of ``G``."""
    if G.rank == 0:
        return {1: 1}
    X = G.element_array(limit)
    a = np.array(G.factors, dtype=np.int64)
    orders = np.lcm.reduce(a // np.gcd(a, X), axis=1)
    values, counts = np.unique(orders, return_counts=True)
    return {int(v): int(c) for v, c in zip(values, counts)}


class CensusError(ValueError):
    """An order census that no finite abelian group has."""


def structure_from_census(orders: Mapping[int, int] | Sequence[int]) -> GroupStructure:
    """Recover the group structure from its element-order census.

    ``orders`` is either a ``{order: count}`` mapping or the raw multiset of
    element orders.  For each prime ``p`` the number of elements killed by
    ``p**k`` is ``p**(sum_i min(k, e_i))``, which pins down the exponents
    ``e_i`` of the ``p``-primary part.
    """
    if isinstance(orders, Mapping):
        counts = Counter({int(o): int(c) for o, c in orders.items() if c})
    else:
        counts = Counter(int(o) for o in orders)
    total = sum(counts.values())
    if total < 1 or counts.get(1) != 1 or any(o < 1 for o in counts):
        raise CensusError("census must contain exactly one element of order 1")
    primes = sorted({p for o in counts for p in factorize(o)})
    primary: dict[int, list[int]] = {}
    for p in primes:
        top = max(factorize(o).get(p, 0) for o in counts)
        ranks = []  # ranks[k-1] = log_p #{x : p^k x = 0}
        for k in range(1, top + 1):
            n = sum(c for o, c in counts.items() if (p**k) % o == 0)
            s, m = 0, n
            while m % p == 0:
                m //= p
                s += 1
            if m != 1:
                raise CensusError(f"{n} elements of order dividing {p}^{k}: not a power of {p}")
            ranks.append(s)
        jumps = [ranks[0]] + [ranks[k] - ranks[k - 1] for k in range(1, top)]
        if any(j < 0 for j in jumps) or any(jumps[k] < jumps[k + 1] for k in range(top - 1)):
            raise CensusError(f"inconsistent {p}-torsion counts {ranks}")
        # jumps[k] = number of cyclic p-factors of exponent > k
        exps = [sum(1 for j in jumps if j > t) for t in range(jumps[0])] if jumps else []
        primary[p] = exps
    structure = _structure_from_primary(primary)
    if structure.order != total:
        raise CensusError(f"census of {total} elements does not match a group of order {structure.order}")
    if census(structure.group()) != dict(counts):
        raise CensusError("census does not match the recovered group")
    return structure


# -- homomorphisms -----------------------------------------------------------


@dataclass(frozen=True)
class Homomorphism:
    """``domain -> codomain`` given by the images of the domain generators.

    Well-defined iff ``a_i * images[i] == 0`` for each domain factor ``a_i``.
    """

    domain: FinAbGroup
    codomain: FinAbGroup
    images: tuple[Element, ...]

    def __post_init__(self):
        if len(self.images) != self.domain.rank:
            raise ValueError(
                f"need {self.domain.rank} generator images, got {len(self.images)}"
            )
        imgs = tuple(self.codomain.check(y) for y in self.images)
        for a, y in zip(self.domain.factors, imgs):
            if not self.codomain.kills(a, y):
                raise ValueError(f"image {y} of a generator of order {a} is not killed by {a}")
        object.__setattr__(self, "images", imgs)

    @classmethod
    def _trusted(cls, domain: FinAbGroup, codomain: FinAbGroup, images: tuple) -> Homomorphism:
        # images already reduced and admissible; skip validation
        h = object.__new__(cls)
        object.__setattr__(h, "domain", domain)
        object.__setattr__(h, "codomain", codomain)
        object.__setattr__(h, "images", images)
        return h

    @classmethod
    def identity(cls, G: FinAbGroup) -> Homomorphism:
        return cls(G, G, tuple(G.basis(i) for i in range(G.rank)))

    @classmethod
    def zero_map(cls, G: FinAbGroup, H: FinAbGroup) -> Homomorphism:
        return cls(G, H, (H.zero,) * G.rank)

    def __call__(self, x: Sequence[int]) -> Element:
        x = self.domain.check(x)
        out = [0] * self.codomain.rank
        for xi, y in zip(x, self.images):
            for k, yk in enumerate(y):
                out[k] += xi * yk
        return self.codomain.check(out)

    def image_matrix(self) -> np.ndarray:
        return np.array(self.images, dtype=np.int64).reshape(self.domain.rank, self.codomain.rank)

    def kernel(self, limit: int | None = None) -> list[Element]:
        return hom_kernel(self, limit)

    def is_injective(self, limit: int | None = None) -> bool:
        return len(self.kernel(limit)) == 1

    def is_surjective(self, limit: int | None = None) -> bool:
        return self.domain.order // len(self.kernel(limit)) == self.codomain.order

    def compose(self, other: Homomorphism) -> Homomorphism:
        """``self o other``."""
        if other.codomain != self.domain:
            raise ValueError("cannot compose: codomain/domain mismatch")
        return Homomorphism(other.domain, self.codomain, tuple(self(y) for y in other.images))


def hom_eval(h: Homomorphism, x: Sequence[int]) -> Element:
    return h(x)


def hom_kernel(h: Homomorphism, limit: int | None = None) -> list[Element]:
    X = h.domain.element_array(limit)
    if h.codomain.rank == 0:
        return [tuple(map(int, row)) for row in X]
    vals = (X @ h.image_matrix()) % np.array(h.codomain.factors, dtype=np.int64)
    mask = ~vals.any(axis=1)
    return [tuple(map(int, row)) for row in X[mask]]


def homomorphism_candidates(A: FinAbGroup, B: FinAbGroup, limit: int | None = None) -> list[list[Element]]:
    """For each generator of ``A``, the elements of ``B`` it may map to (found by scanning ``B``)."""
    Y = B.element_array(limit)
    cands = []
    for a in A.factors:
        if B.rank == 0:
            cands.append([B.zero])
            continue
        mask = ~((a * Y) % np.array(B.factors, dtype=np.int64)).any(axis=1)
        cands.append([tuple(map(int, row)) for row in Y[mask]])
    return cands


def count_homomorphisms(A: FinAbGroup, B: FinAbGroup, limit: int | None = None) -> int:
    return prod(len(c) for c in homomorphism_candidates(A, B, limit))


def enumerate_homomorphisms(A: FinAbGroup, B: FinAbGroup, limit: int | None = None) -> Iterator[Homomorphism]:
    cands = homomorphism_candidates(A, B, limit)
    check_size(f"Hom({A}, {B})", prod(len(c) for c in cands), limit)
    for images in itertools.product(*cands):
        yield Homomorphism._trusted(A, B, images)
