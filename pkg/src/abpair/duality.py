"""Characters into a cyclic group and the duality pairing.

The cyclic group ``C_N`` is kept in exponent form: an element ``gamma^e`` is
the residue ``e mod N``.  A character of ``(+) Z_{d_i}`` (every ``d_i | N``)
is fixed by one coefficient per factor, ``chi(x) = sum_i (N/d_i) c_i x_i``.
Prime fields are the only concrete realization: ``e -> gamma^((p-1)/N e)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .bilinear import BilinearMap
from .groups import Element, FinAbGroup, Homomorphism
from .numtheory import factorize, is_prime

__all__ = [
    "CyclicTarget",
    "Character",
    "DualGroup",
    "PrimeFieldRealization",
    "RealizedTable",
    "character_eval",
    "dual_group",
    "duality_pairing",
    "find_primitive_root",
    "realize_in_prime_field",
]

MAX_PRIME = 1 << 31


class DivisibilityError(ValueError):
    pass


@dataclass(frozen=True)
class CyclicTarget:
    order: int

    def __post_init__(self):
        if self.order < 1:
            raise ValueError("cyclic target order must be >= 1")

    @property
    def group(self) -> FinAbGroup:
        return FinAbGroup((self.order,))


def _require_divides(A: FinAbGroup, N: int) -> None:
    if N < 1:
        raise ValueError("N must be >= 1")
    bad = [d for d in A.factors if N % d]
    if bad:
        raise DivisibilityError(f"factor orders {bad} of {A} do not divide N = {N}")


@dataclass(frozen=True)
class Character:
    domain: FinAbGroup
    target: CyclicTarget
    coeffs: tuple[int, ...]

    def __post_init__(self):
        _require_divides(self.domain, self.target.order)
        object.__setattr__(self, "coeffs", self.domain.check(self.coeffs))

    def __call__(self, x: Sequence[int]) -> int:
        N = self.target.order
        x = self.domain.check(x)
        return sum((N // d) * c * xi for d, c, xi in zip(self.domain.factors, self.coeffs, x)) % N

    def as_homomorphism(self) -> Homomorphism:
        N = self.target.order
        return Homomorphism(
            self.domain, self.target.group,
            tuple(((N // d) * c % N,) for d, c in zip(self.domain.factors, self.coeffs)),
        )


def character_eval(chi: Character, x: Sequence[int]) -> int:
    return chi(x)


@dataclass(frozen=True)
class DualGroup:
    """``Hom(A, C_N)``, presented by the factor list of ``A`` itself."""

    base: FinAbGroup
    N: int

    @property
    def group(self) -> FinAbGroup:
        return self.base

    def character(self, coeffs: Sequence[int]) -> Character:
        return Character(self.base, CyclicTarget(self.N), tuple(coeffs))

    def characters(self) -> Iterator[Character]:
        for coeffs in self.base.elements():
            yield self.character(coeffs)


def dual_group(A: FinAbGroup, N: int | None = None) -> DualGroup:
    N = A.exponent if N is None else N
    _require_divides(A, N)
    return DualGroup(A, N)


def duality_pairing(A: FinAbGroup, N: int | None = None) -> BilinearMap:
    """``<x|y> = sum_i (N/d_i) x_i y_i mod N`` on ``A x A``; defaults to ``N = exp(A)``."""
    N = A.exponent if N is None else N
    _require_divides(A, N)
    T = FinAbGroup((N,))
    m = A.rank
    grid = tuple(
        tuple(((N // A.factors[i]) % N,) if i == j else (0,) for j in range(m)) for i in range(m)
    )
    return BilinearMap(A, A, T, grid)


@dataclass(frozen=True)
class PrimeFieldRealization:
    p: int
    generator: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")
        if _mult_order(self.generator, self.p) != self.p - 1:
            raise ValueError(f"{self.generator} is not a primitive root mod {self.p}")

    @classmethod
    def for_prime(cls, p: int) -> PrimeFieldRealization:
        return cls(p, find_primitive_root(p))


def _mult_order(g: int, p: int) -> int:
    g %= p
    if p == 2:
        return 1 if g == 1 else 0
    if g == 0:
        return 0
    n = p - 1
    for q in factorize(n):
        while n % q == 0 and pow(g, n // q, p) == 1:
            n //= q
    return n


def find_primitive_root(p: int, max_prime: int = MAX_PRIME) -> int:
    """Smallest generator of ``F_p^*`` (``1`` for ``p = 2``)."""
    if p > max_prime:
        raise ValueError(f"p = {p} exceeds the configured bound {max_prime}")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p == 2:
        return 1
    for g in range(2, p):
        if _mult_order(g, p) == p - 1:
            return g
    raise AssertionError("unreachable: F_p^* is cyclic")


@dataclass(frozen=True)
class RealizedTable:
    """Value table of a bilinear map into ``F_p^*``, rows over ``left``, columns over ``right``."""

    left: FinAbGroup
    right: FinAbGroup
    p: int
    values: tuple[tuple[int, ...], ...]

    def __call__(self, x: Sequence[int], y: Sequence[int]) -> int:
        return self.values[self.left.index_of(x)][self.right.index_of(y)]

    def left_kernel(self) -> list[Element]:
        return [x for x, row in zip(self.left.elements(), self.values) if all(v == 1 for v in row)]

    def right_kernel(self) -> list[Element]:
        cols = list(zip(*self.values)) if self.values else []
        return [y for y, col in zip(self.right.elements(), cols) if all(v == 1 for v in col)]


def realize_in_prime_field(f: BilinearMap, real: PrimeFieldRealization) -> RealizedTable:
    """Compose exponent-form values with ``e -> gamma^((p-1)/N e) mod p``."""
    if f.target.rank != 1:
        raise ValueError(f"target {f.target} is not presented as a single cyclic group")
    N = f.target.factors[0]
    p, gamma = real.p, real.generator
    if (p - 1) % N:
        raise DivisibilityError(f"N = {N} does not divide p - 1 = {p - 1}")
    step = (p - 1) // N
    rows = []
    right = list(f.right.elements())
    for x in f.left.elements():
        rows.append(tuple(pow(gamma, step * f(x, y)[0], p) for y in right))
    return RealizedTable(f.left, f.right, p, tuple(rows))
