"""Elementary number theory on cyclotomic indices.

Everything here runs on trial division, so inputs are capped by a
configurable bound (``CYCLOBEZ_MAX_INDEX``, default 10**6).
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from math import prod

from .errors import BoundError, InputError

ENV_BOUND = "CYCLOBEZ_MAX_INDEX"
DEFAULT_BOUND = 10**6


def index_bound() -> int:
    raw = os.environ.get(ENV_BOUND)
    if raw is None or raw == "":
        return DEFAULT_BOUND
    try:
        bound = int(raw)
    except ValueError:
        raise InputError(f"{ENV_BOUND} must be an integer, got {raw!r}") from None
    if bound < 1:
        raise InputError(f"{ENV_BOUND} must be positive, got {bound}")
    return bound


def check_index(n, bound: int | None = None) -> int:
    """Validate ``n`` as a positive integer within the bound and return it."""
    if isinstance(n, bool) or not isinstance(n, int):
        raise InputError(f"index must be an integer, got {n!r}")
    if n < 1:
        raise InputError(f"index must be >= 1, got {n}")
    bound = index_bound() if bound is None else bound
    if n > bound:
        raise BoundError(f"index {n} exceeds the bound {bound} (set {ENV_BOUND} to raise it)")
    return n


@dataclass(frozen=True)
class Factorization:
    pairs: tuple[tuple[int, int], ...]

    @property
    def value(self) -> int:
        return prod(p**e for p, e in self.pairs)

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.pairs)

    def __iter__(self):
        return iter(self.pairs)

    def __len__(self):
        return len(self.pairs)


def factorize(n: int, bound: int | None = None) -> Factorization:
    n = check_index(n, bound)
    pairs = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            pairs.append((d, e))
        d += 1 if d == 2 else 2
    if n > 1:
        pairs.append((n, 1))
    return Factorization(tuple(pairs))


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def divisors(n: int) -> list[int]:
    divs = [1]
    for p, e in factorize(n):
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def moebius(n: int) -> int:
    fac = factorize(n)
    if any(e > 1 for _, e in fac):
        return 0
    return -1 if len(fac) % 2 else 1


def totient(n: int) -> int:
    result = n
    for p, _ in factorize(n):
        result = result // p * (p - 1)
    return result


def radical(n: int) -> int:
    return prod(factorize(n).primes)


def as_prime_power(n: int) -> tuple[int, int] | None:
    """Return ``(p, t)`` with n = p**t and t >= 1, or None.

    1 is not a prime power here.
    """
    fac = factorize(n)
    if len(fac) != 1:
        return None
    return fac.pairs[0]
