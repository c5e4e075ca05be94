"""Polynomials over the prime field Z/p.

Used to exhibit shared roots in characteristic p: two polynomials have a
common root in some extension of Z/p exactly when their gcd over Z/p is
nonconstant, so ``mod_gcd`` stands in for an explicit root.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arith import is_prime
from .errors import InputError, ModulusMismatchError
from .intpoly import IntPoly


@dataclass(frozen=True)
class ModPoly:
    modulus: int
    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        p = self.modulus
        c = [int(v) % p for v in self.coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else float("-inf")

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return self.coeffs == (1,)

    def lift(self) -> IntPoly:
        """Representatives in [0, p) as an integer polynomial."""
        return IntPoly(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __mul__(self, other):
        return mod_mul(self, other)

    def __add__(self, other):
        return mod_add(self, other)

    def __sub__(self, other):
        return mod_sub(self, other)

    def __pow__(self, e):
        return mod_pow(self, e)

    def __repr__(self):
        return f"ModPoly({self.modulus}, {list(self.coeffs)!r})"


def _check_prime(p: int):
    if not is_prime(p):
        raise InputError(f"modulus {p} is not prime")


def _same_modulus(f: ModPoly, g: ModPoly) -> int:
    if f.modulus != g.modulus:
        raise ModulusMismatchError(f"moduli differ: {f.modulus} vs {g.modulus}")
    return f.modulus


def reduce_mod(f: IntPoly, p: int) -> ModPoly:
    _check_prime(p)
    return ModPoly(p, f.coeffs)


def mod_add(f: ModPoly, g: ModPoly) -> ModPoly:
    p = _same_modulus(f, g)
    a, b = f.coeffs, g.coeffs
    if len(a) < len(b):
        a, b = b, a
    return ModPoly(p, tuple(x + y for x, y in zip(a, b)) + a[len(b):])


def mod_sub(f: ModPoly, g: ModPoly) -> ModPoly:
    return mod_add(f, ModPoly(g.modulus, tuple(-c for c in g.coeffs)))


def mod_mul(f: ModPoly, g: ModPoly) -> ModPoly:
    p = _same_modulus(f, g)
    a, b = f.coeffs, g.coeffs
    if not a or not b:
        return ModPoly(p)
    out = [0] * (len(a) + len(b) - 1)
    for j, bj in enumerate(b):
        if bj:
            for i, ai in enumerate(a):
                out[i + j] += ai * bj
    return ModPoly(p, out)


def mod_pow(f: ModPoly, e: int) -> ModPoly:
    if e < 0:
        raise InputError("negative exponent")
    result, base = ModPoly(f.modulus, (1,)), f
    while e:
        if e & 1:
            result = mod_mul(result, base)
        base = mod_mul(base, base)
        e >>= 1
    return result


def mod_compose_power(f: ModPoly, e: int) -> ModPoly:
    """f(x^e)."""
    if e < 1:
        raise InputError(f"exponent must be >= 1, got {e}")
    if not f.coeffs:
        return f
    out = [0] * ((len(f.coeffs) - 1) * e + 1)
    out[::e] = f.coeffs
    return ModPoly(f.modulus, out)


def mod_divmod(f: ModPoly, g: ModPoly) -> tuple[ModPoly, ModPoly]:
    p = _same_modulus(f, g)
    if g.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    inv = pow(g.lead, -1, p)
    dg = len(g.coeffs) - 1
    rem = list(f.coeffs)
    if len(rem) <= dg:
        return ModPoly(p), f
    q = [0] * (len(rem) - dg)
    for i in range(len(rem) - 1, dg - 1, -1):
        c = rem[i] % p
        if not c:
            continue
        t = c * inv % p
        q[i - dg] = t
        shift = i - dg
        for j, gj in enumerate(g.coeffs):
            rem[shift + j] -= t * gj
    return ModPoly(p, q), ModPoly(p, rem[:dg])


def monic(f: ModPoly) -> ModPoly:
    if f.is_zero():
        return f
    inv = pow(f.lead, -1, f.modulus)
    return ModPoly(f.modulus, tuple(c * inv for c in f.coeffs))


def mod_gcd(f: ModPoly, g: ModPoly) -> ModPoly:
    """Monic gcd over Z/p by the Euclidean algorithm."""
    _same_modulus(f, g)
    if f.is_zero() and g.is_zero():
        raise InputError("gcd of two zero polynomials is undefined")
    while g:
        f, g = g, mod_divmod(f, g)[1]
    return monic(f)
