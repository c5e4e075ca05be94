"""Dense univariate polynomials over the integers.

Coefficients are stored ascending by degree as Python ints, so there is no
precision ceiling. Values are immutable and always canonical: the zero
polynomial is the empty tuple and a nonzero polynomial never ends in a zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import InputError, NotExactDivisorError, NotMonicError

#: Degree of the zero polynomial.  A float on purpose: ``range(NEG_INF)``
#: and list indexing fail loudly, while comparisons and ``+`` behave.
NEG_INF = float("-inf")


def _strip(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class IntPoly:
    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        c = _strip(int(v) for v in self.coeffs)
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def x(cls) -> IntPoly:
        return cls((0, 1))

    @classmethod
    def const(cls, c: int) -> IntPoly:
        return cls((c,))

    @classmethod
    def monomial(cls, deg: int, c: int = 1) -> IntPoly:
        return cls((0,) * deg + (c,))

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return self.lead == 1

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def __getitem__(self, i: int) -> int:
        """Coefficient of x^i (zero beyond the degree)."""
        if i < 0:
            raise IndexError(i)
        return self.coeffs[i] if i < len(self.coeffs) else 0

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __add__(self, other):
        o = _coerce(other)
        return o if o is NotImplemented else add(self, o)

    __radd__ = __add__

    def __sub__(self, other):
        o = _coerce(other)
        return o if o is NotImplemented else sub(self, o)

    def __rsub__(self, other):
        o = _coerce(other)
        return o if o is NotImplemented else sub(o, self)

    def __neg__(self):
        return neg(self)

    def __mul__(self, other):
        o = _coerce(other)
        return o if o is NotImplemented else mul(self, o)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise InputError("negative exponent")
        result, base = IntPoly((1,)), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __call__(self, v: int) -> int:
        return eval_at(self, v)

    def __str__(self):
        return to_text(self)

    def __repr__(self):
        return f"IntPoly({list(self.coeffs)!r})"


def _coerce(v) -> IntPoly:
    if isinstance(v, IntPoly):
        return v
    if isinstance(v, int):
        return IntPoly((v,))
    return NotImplemented


def add(f: IntPoly, g: IntPoly) -> IntPoly:
    a, b = f.coeffs, g.coeffs
    if len(a) < len(b):
        a, b = b, a
    return IntPoly(tuple(x + y for x, y in zip(a, b)) + a[len(b):])


def neg(f: IntPoly) -> IntPoly:
    return IntPoly(tuple(-c for c in f.coeffs))


def sub(f: IntPoly, g: IntPoly) -> IntPoly:
    return add(f, neg(g))


def mul(f: IntPoly, g: IntPoly) -> IntPoly:
    a, b = f.coeffs, g.coeffs
    if not a or not b:
        return IntPoly()
    if len(a) < len(b):
        a, b = b, a
    out = [0] * (len(a) + len(b) - 1)
    # iterate over the shorter factor; skip zero coefficients (cyclotomics are sparse-ish)
    for j, bj in enumerate(b):
        if bj:
            for i, ai in enumerate(a):
                out[i + j] += ai * bj
    return IntPoly(out)


def _long_divide(f: IntPoly, g: IntPoly):
    # a non-unit leading coefficient must divide every trial coefficient
    lc = g.lead
    dg = len(g.coeffs) - 1
    rem = list(f.coeffs)
    if len(rem) <= dg:
        return IntPoly(), f
    q = [0] * (len(rem) - dg)
    gc = g.coeffs[:-1]
    for i in range(len(rem) - 1, dg - 1, -1):
        c = rem[i]
        if not c:
            continue
        if lc == 1:
            t = c
        else:
            t, r = divmod(c, lc)
            if r:
                raise NotExactDivisorError("not an exact divisor (non-integral quotient coefficient)")
        q[i - dg] = t
        rem[i] = 0
        shift = i - dg
        for j, gj in enumerate(gc):
            if gj:
                rem[shift + j] -= t * gj
    return IntPoly(q), IntPoly(rem[:dg])


def div_rem_monic(f: IntPoly, g: IntPoly) -> tuple[IntPoly, IntPoly]:
    """Divide ``f`` by the monic ``g``, returning ``(q, r)`` with f = q*g + r.

    ``deg r < deg g``.  Non-monic divisors are refused rather than
    pseudo-divided, since the quotient would leave Z[x].
    """
    if g.is_zero():
        raise NotMonicError("division by the zero polynomial")
    if not g.is_monic():
        raise NotMonicError(f"divisor is not monic (leading coefficient {g.lead})")
    return _long_divide(f, g)


def exact_div(f: IntPoly, g: IntPoly) -> IntPoly:
    """Return ``q`` with ``f == q * g`` exactly, or raise NotExactDivisorError."""
    if g.is_zero():
        raise InputError("division by the zero polynomial")
    q, r = _long_divide(f, g)
    if r:
        raise NotExactDivisorError("not an exact divisor (nonzero remainder)")
    return q


def compose_power(f: IntPoly, e: int) -> IntPoly:
    """Return f(x^e)."""
    if e < 1:
        raise InputError(f"exponent must be >= 1, got {e}")
    if e == 1 or len(f.coeffs) <= 1:
        return f
    out = [0] * ((len(f.coeffs) - 1) * e + 1)
    out[::e] = f.coeffs
    return IntPoly(out)


def eval_at(f: IntPoly, v: int) -> int:
    acc = 0
    for c in reversed(f.coeffs):
        acc = acc * v + c
    return acc


def to_text(f: IntPoly, var: str = "x") -> str:
    """Render descending, e.g. ``x^4 - x^2 + 1``."""
    if f.is_zero():
        return "0"
    parts = []
    for i in range(len(f.coeffs) - 1, -1, -1):
        c = f.coeffs[i]
        if not c:
            continue
        mag = abs(c)
        if i == 0:
            body = str(mag)
        else:
            mono = var if i == 1 else f"{var}^{i}"
            body = mono if mag == 1 else f"{mag}*{mono}"
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts)


def x_pow_minus_one(n: int) -> IntPoly:
    """x^n - 1."""
    return IntPoly((-1,) + (0,) * (n - 1) + (1,))
