"""Small integer helpers: factorization, totient, primality.

Orders handled by this package are desk-scale, so plain trial division is used.
"""

from math import gcd, lcm
from functools import lru_cache

__all__ = ["gcd", "lcm", "factorize", "totient", "is_prime", "divisors", "prime_power_exponent"]


@lru_cache(maxsize=4096)
def _factorize(n: int) -> tuple[tuple[int, int], ...]:
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        p += 1 if p == 2 else 2
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def factorize(n: int) -> dict[int, int]:
    """Return ``{prime: exponent}`` for ``n >= 1`` (empty for ``n == 1``)."""
    if n < 1:
        raise ValueError(f"cannot factorize {n}")
    return dict(_factorize(n))


def totient(n: int) -> int:
    """Euler's phi, from the factorization of ``n``."""
    result = n
    for p in factorize(n):
        result = result // p * (p - 1)
    return result


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    return _factorize(n) == ((n, 1),)


def divisors(n: int) -> list[int]:
    divs = [1]
    for p, e in factorize(n).items():
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def prime_power_exponent(n: int, p: int) -> int:
    """Largest ``e`` with ``p**e`` dividing ``n``."""
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e
