"""Cyclotomic polynomials and minimal integer Bezout constants.

>>> from cyclobez import phi, minimal_k, certificate
>>> str(phi(12))
'x^4 - x^2 + 1'
>>> minimal_k(6, 3)
2
"""

from .arith import divisors, factorize, moebius, radical, totient
from .bezout import (
    Certificate,
    certificate,
    certificate_constructive,
    certificate_lattice,
    charp_identity_check,
    classify_pair,
    minimal_k,
    minimality_witness,
    is_normalized,
    verify,
)
from .cyclotomic import phi, phi_at_one, phi_inductive, phi_moebius, phi_radical
from .errors import CyclobezError, InputError, InvariantBreach
from .intpoly import IntPoly
from .lattice import IntMatrix, minimal_constant, smith_normal_form
from .modpoly import ModPoly, mod_gcd, reduce_mod

__version__ = "0.1.0"
