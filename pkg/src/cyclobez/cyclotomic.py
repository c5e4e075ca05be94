"""Cyclotomic polynomials, built three independent ways.

``phi_inductive`` divides x^n - 1 by the cyclotomic factors of the proper
divisors of n and is the reference constructor; ``phi`` is its memoized
facade.  ``phi_radical`` (squarefree kernel, then substitution) and
``phi_moebius`` (Moebius product of x^d - 1) never touch the cache, so they
stay usable as cross-checks.
"""

from __future__ import annotations

import threading

from . import arith
from .intpoly import IntPoly, compose_power, exact_div, x_pow_minus_one

__all__ = [
    "PhiCache",
    "phi",
    "phi_inductive",
    "phi_radical",
    "phi_moebius",
    "phi_at_one",
    "METHODS",
]

PHI_1 = IntPoly((-1, 1))


class PhiCache:
    """Index -> polynomial memo table.

    Only finished, immutable values are ever inserted, and insertion goes
    through a lock with ``setdefault`` semantics, so a concurrent reader
    either misses or sees a complete entry.
    """

    def __init__(self):
        self._data: dict[int, IntPoly] = {}
        self._lock = threading.Lock()

    def get(self, n: int) -> IntPoly | None:
        return self._data.get(n)

    def put(self, n: int, value: IntPoly) -> IntPoly:
        with self._lock:
            return self._data.setdefault(n, value)

    def clear(self):
        with self._lock:
            self._data.clear()

    def __contains__(self, n):
        return n in self._data

    def __len__(self):
        return len(self._data)


_default_cache = PhiCache()


def default_cache() -> PhiCache:
    return _default_cache


def phi_inductive(n: int, cache: PhiCache | None = None) -> IntPoly:
    n = arith.check_index(n)
    cache = _default_cache if cache is None else cache
    hit = cache.get(n)
    if hit is not None:
        return hit
    rest = x_pow_minus_one(n)
    for d in arith.divisors(n)[:-1]:
        rest = exact_div(rest, phi_inductive(d, cache))
    return cache.put(n, rest)


def phi(n: int) -> IntPoly:
    """The n-th cyclotomic polynomial (memoized)."""
    return phi_inductive(n)


def phi_radical(n: int) -> IntPoly:
    """Phi_n from the squarefree kernel.

    Builds Phi_{p1...ps} from Phi_1 with Phi_{pk}(x) = Phi_k(x^p) / Phi_k(x)
    one prime at a time, then substitutes x -> x^(n / rad n).
    """
    n = arith.check_index(n)
    fac = arith.factorize(n)
    base = PHI_1
    for p in fac.primes:
        base = exact_div(compose_power(base, p), base)
    return compose_power(base, n // arith.radical(n))


def phi_moebius(n: int) -> IntPoly:
    n = arith.check_index(n)
    num = IntPoly((1,))
    den = []
    for d in arith.divisors(n):
        mu = arith.moebius(n // d)
        if mu == 1:
            num = num * x_pow_minus_one(d)
        elif mu == -1:
            den.append(d)
    for d in den:
        num = exact_div(num, x_pow_minus_one(d))
    return num


METHODS = {
    "inductive": phi,
    "moebius": phi_moebius,
    "radical": phi_radical,
}


def phi_at_one(n: int) -> int:
    """Phi_n(1) in closed form: 0 for n = 1, p for n = p^t, else 1."""
    n = arith.check_index(n)
    if n == 1:
        return 0
    pp = arith.as_prime_power(n)
    return pp[0] if pp else 1
