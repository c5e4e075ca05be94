"""Exception hierarchy shared by every module."""


class CyclobezError(Exception):
    """Base class for all library errors."""


class InputError(CyclobezError, ValueError):
    """Caller passed an argument outside an operation's domain."""


class BoundError(InputError):
    """An index exceeds the configured factorization bound."""


class NotMonicError(InputError):
    pass


class NotExactDivisorError(CyclobezError, ArithmeticError):
    pass


class ModulusMismatchError(InputError):
    pass


class CommonFactorError(CyclobezError, ArithmeticError):
    """The two polynomials share a factor, so no constant combination exists."""


class InvariantBreach(CyclobezError, AssertionError):
    """An internal consistency check failed.

    Raised where a mathematical guarantee (exact division, constant
    remainder, nontrivial gcd mod p, ...) did not hold. Seeing one means a
    bug, never bad input.
    """
