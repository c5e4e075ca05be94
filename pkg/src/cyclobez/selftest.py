"""Sweeps behind ``cyclobez selftest``.

Each suite yields ``(label, check)`` pairs where ``check()`` returns a bool;
``run_all`` tallies them.  A check that raises counts as a failure.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import partial
from typing import Callable, Iterator

from . import arith, bezout, cyclotomic
from .cyclotomic import phi, phi_at_one, phi_moebius, phi_radical
from .intpoly import IntPoly, compose_power, eval_at, x_pow_minus_one
from .modpoly import reduce_mod


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def _product_ok(n):
    prod = IntPoly((1,))
    for d in arith.divisors(n):
        prod = prod * phi(d)
    return prod == x_pow_minus_one(n)


def _agreement_ok(n):
    f = phi(n)
    return f == phi_moebius(n) == phi_radical(n) and f.degree == arith.totient(n) and f.is_monic()


def _oracle_ok(m, n):
    return bezout.minimal_k(m, n) == bezout.certificate_lattice(m, n).k


def _certificate_ok(m, n):
    return bezout.verify(bezout.certificate(m, n))


def _identity_i_ok(p, n):
    return phi(p * n) * phi(n) == compose_power(phi(n), p)


def _identity_ii_ok(n):
    r = arith.radical(n)
    return phi(n) == compose_power(phi(r), n // r)


def _witness_ok(m, n):
    p, g = bezout.minimality_witness(m, n)
    return g.degree >= 1 and g == reduce_mod(phi(n), p)


def _phi_at_one_ok(n):
    pp = arith.as_prime_power(n)
    expected = 0 if n == 1 else (pp[0] if pp else 1)
    return phi_at_one(n) == eval_at(phi(n), 1) == expected


def _pairs(bound: int):
    for m in range(2, bound + 1):
        for n in range(1, m):
            yield m, n


def _primes_upto(bound: int):
    return [p for p in range(2, bound + 1) if arith.is_prime(p)]


def product_identity(bound):
    for n in range(1, bound + 1):
        yield f"n={n}", partial(_product_ok, n)


def constructor_agreement(bound):
    for n in range(1, bound + 1):
        yield f"n={n}", partial(_agreement_ok, n)


def theorem_vs_oracle(bound):
    for m, n in _pairs(bound):
        yield f"({m},{n})", partial(_oracle_ok, m, n)


def certificates(bound):
    for m, n in _pairs(bound):
        yield f"({m},{n})", partial(_certificate_ok, m, n)


def note_identities(bound):
    primes = _primes_upto(bound)
    for p in primes:
        for n in range(1, bound // p + 1):
            if n % p:
                yield f"i p={p} n={n}", partial(_identity_i_ok, p, n)
    for n in range(1, bound + 1):
        yield f"ii n={n}", partial(_identity_ii_ok, n)
    for p in primes:
        for n in range(1, bound // p + 1):
            if n % p == 0:
                continue
            r = 1
            while n * p**r <= bound:
                yield f"charp n={n} p={p} r={r}", partial(bezout.charp_identity_check, n, p, r)
                r += 1


def minimality_witness(bound):
    for m, n in _pairs(bound):
        if m % n == 0 and arith.as_prime_power(m // n):
            yield f"({m},{n})", partial(_witness_ok, m, n)


def phi_at_one_rule(bound):
    for n in range(1, bound + 1):
        yield f"n={n}", partial(_phi_at_one_ok, n)


def coefficient_landmark(bound):
    # fixed index, independent of the bound
    for name, ctor in (("inductive", cyclotomic.phi_inductive), ("moebius", phi_moebius),
                       ("radical", phi_radical)):
        yield f"Phi_105[x^7] {name}", partial(lambda c: c(105)[7] == -2, ctor)


SUITES: dict[str, Callable[[int], Iterator[tuple[str, Callable[[], bool]]]]] = {
    "product-identity": product_identity,
    "constructor-agreement": constructor_agreement,
    "theorem-vs-oracle": theorem_vs_oracle,
    "certificates": certificates,
    "note-identities": note_identities,
    "minimality-witness": minimality_witness,
    "phi-at-one": phi_at_one_rule,
    "coefficient-landmark": coefficient_landmark,
}


def run_suite(name: str, bound: int) -> SuiteResult:
    res = SuiteResult(name)
    for label, check in SUITES[name](bound):
        res.checked += 1
        try:
            ok = check()
        except Exception as exc:  # noqa: BLE001 - a crash is a failed check
            res.failures.append(f"{label}: raised {type(exc).__name__}: {exc}")
            continue
        if ok is not True:
            res.failures.append(label)
    return res


def run_all(bound: int, names=None) -> list[SuiteResult]:
    return [run_suite(name, bound) for name in (names or SUITES)]
