"""Smallest constant k = a*Phi_m + b*Phi_n over Z[x], with certificates.

For m > n:

* n does not divide m: k = 1.
* n | m and m/n is not a prime power: k = 1.
* m/n = p^t: k = p, and nothing smaller works because Phi_m and Phi_n
  share a root modulo p.

``certificate_constructive`` follows the divisibility argument
(Phi_m | Phi_{m/n}(x^n), then division by Phi_n), ``certificate_lattice``
gets the answer from the Smith-form oracle without using the theorem, and
``minimality_witness`` produces the shared factor mod p.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from . import arith
from .cyclotomic import phi, phi_at_one
from .errors import InputError, InvariantBreach
from .intpoly import IntPoly, compose_power, div_rem_monic, exact_div
from .lattice import minimal_constant
from .modpoly import ModPoly, mod_gcd, mod_pow, reduce_mod


@dataclass(frozen=True)
class NeitherDivides:
    label = "non-divisor"


@dataclass(frozen=True)
class DivisorQuotientNotPrimePower:
    q: int
    label = "divisor-composite"


@dataclass(frozen=True)
class DivisorQuotientPrimePower:
    p: int
    t: int
    label = "divisor-prime-power"

    @property
    def q(self) -> int:
        return self.p**self.t


PairClass = Union[NeitherDivides, DivisorQuotientNotPrimePower, DivisorQuotientPrimePower]


@dataclass(frozen=True)
class Certificate:
    """Claims ``k == a*Phi_m + b*Phi_n``."""

    m: int
    n: int
    k: int
    a: IntPoly
    b: IntPoly


def normalize_pair(m: int, n: int) -> tuple[int, int]:
    """Validate both indices and order them so the first is the larger."""
    m, n = arith.check_index(m), arith.check_index(n)
    if m == n:
        raise InputError("indices must differ")
    return (m, n) if m > n else (n, m)


def classify_pair(m: int, n: int) -> PairClass:
    m, n = normalize_pair(m, n)
    if m % n:
        return NeitherDivides()
    q = m // n
    pp = arith.as_prime_power(q)
    if pp is None:
        return DivisorQuotientNotPrimePower(q)
    return DivisorQuotientPrimePower(*pp)


def minimal_k(m: int, n: int) -> int:
    cls = classify_pair(m, n)
    if isinstance(cls, DivisorQuotientPrimePower):
        return cls.p
    return 1


def _check_degrees(c: Certificate, fm: IntPoly, fn: IntPoly):
    # zero polynomials have degree -inf and pass trivially
    return c.a.degree < fn.degree and c.b.degree < fm.degree


def is_normalized(c: Certificate) -> bool:
    """deg a < deg Phi_n and deg b < deg Phi_m."""
    return _check_degrees(c, phi(c.m), phi(c.n))


def certificate_constructive(m: int, n: int) -> Certificate:
    """Certificate from Phi_m | Phi_{m/n}(x^n), for n | m.

    With Phi_{m/n}(x^n) = A*Phi_m and Phi_{m/n}(x^n) = q*Phi_n + r, the
    remainder r must be the constant k.  Then A is reduced modulo Phi_n so
    the result meets the degree bounds.
    """
    m, n = normalize_pair(m, n)
    if m % n:
        raise InputError(f"{n} does not divide {m}; constructive path needs n | m")
    fm, fn = phi(m), phi(n)
    lifted = compose_power(phi(m // n), n)
    try:
        A = exact_div(lifted, fm)
    except ArithmeticError as exc:
        raise InvariantBreach(f"Phi_{m} does not divide Phi_{m // n}(x^{n})") from exc
    q, r = div_rem_monic(lifted, fn)
    k = minimal_k(m, n)
    if r != IntPoly((k,)):
        raise InvariantBreach(f"remainder {r} is not the constant {k}")
    # k = A*Phi_m - q*Phi_n; shrink A below deg Phi_n, moving s*Phi_m into b
    s, a = div_rem_monic(A, fn)
    b = s * fm - q
    cert = Certificate(m, n, k, a, b)
    if not _check_degrees(cert, fm, fn) or a * fm + b * fn != IntPoly((k,)):
        raise InvariantBreach(f"constructive certificate for ({m}, {n}) does not verify")
    return cert


def certificate_lattice(m: int, n: int) -> Certificate:
    m, n = normalize_pair(m, n)
    k, a, b = minimal_constant(phi(m), phi(n))
    return Certificate(m, n, k, a, b)


def certificate(m: int, n: int, method: str = "auto") -> Certificate:
    m, n = normalize_pair(m, n)
    if method == "auto":
        method = "constructive" if m % n == 0 else "lattice"
    if method == "constructive":
        cert = certificate_constructive(m, n)
    elif method == "lattice":
        cert = certificate_lattice(m, n)
    else:
        raise InputError(f"unknown certificate method {method!r}")
    if not (verify(cert) and is_normalized(cert)):
        raise InvariantBreach(f"certificate for ({m}, {n}) failed verification")
    return cert


def verify(c: Certificate) -> bool:
    """Recheck ``k == a*Phi_m + b*Phi_n`` from scratch.

    Only the identity is checked; degree normalization is ``is_normalized``.
    """
    try:
        normalize_pair(c.m, c.n)
    except InputError:
        return False
    if isinstance(c.k, bool) or not isinstance(c.k, int) or c.k < 1:
        return False
    return c.a * phi(c.m) + c.b * phi(c.n) == IntPoly((c.k,))


def minimality_witness(m: int, n: int) -> tuple[int, ModPoly] | None:
    """``(p, gcd(Phi_m, Phi_n) mod p)`` for prime-power quotients, else None.

    A nonconstant gcd means a common root in characteristic p, where any
    combination a*Phi_m + b*Phi_n vanishes; so no 0 < k < p is reachable.
    """
    cls = classify_pair(m, n)
    if not isinstance(cls, DivisorQuotientPrimePower):
        return None
    m, n = normalize_pair(m, n)
    p = cls.p
    g = mod_gcd(reduce_mod(phi(m), p), reduce_mod(phi(n), p))
    if g.degree < 1:
        raise InvariantBreach(f"Phi_{m} and Phi_{n} are coprime mod {p}")
    return p, g


def charp_identity_check(n: int, p: int, r: int) -> bool:
    """Whether Phi_{n p^r} == Phi_n ** (p^(r-1) (p-1)) modulo p, for p not dividing n."""
    n = arith.check_index(n)
    if not arith.is_prime(p):
        raise InputError(f"{p} is not prime")
    if r < 1:
        raise InputError(f"r must be >= 1, got {r}")
    if n % p == 0:
        raise InputError(f"{p} divides {n}; identity needs p not dividing n")
    h = arith.check_index(n * p**r)
    lhs = reduce_mod(phi(h), p)
    rhs = mod_pow(reduce_mod(phi(n), p), arith.totient(p**r))
    return lhs == rhs


def k_from_phi_at_one(m: int, n: int) -> int:
    """For n | m, Phi_{m/n}(1); the value the constructive remainder must hit."""
    m, n = normalize_pair(m, n)
    if m % n:
        raise InputError(f"{n} does not divide {m}")
    return phi_at_one(m // n)
