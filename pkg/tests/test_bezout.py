import dataclasses

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cyclobez.bezout import (
    Certificate,
    DivisorQuotientNotPrimePower,
    DivisorQuotientPrimePower,
    NeitherDivides,
    certificate,
    certificate_constructive,
    certificate_lattice,
    charp_identity_check,
    classify_pair,
    is_normalized,
    k_from_phi_at_one,
    minimal_k,
    minimality_witness,
    verify,
)
from cyclobez.cyclotomic import phi
from cyclobez.errors import InputError
from cyclobez.intpoly import IntPoly
from cyclobez.modpoly import ModPoly, reduce_mod

X = IntPoly.x()
pairs = st.tuples(st.integers(1, 60), st.integers(1, 60)).filter(lambda t: t[0] != t[1])


def test_classify_examples():
    assert classify_pair(6, 3) == DivisorQuotientPrimePower(2, 1)
    assert classify_pair(12, 2) == DivisorQuotientNotPrimePower(6)
    assert classify_pair(3, 2) == NeitherDivides()
    assert classify_pair(3, 6) == DivisorQuotientPrimePower(2, 1)
    assert classify_pair(24, 3) == DivisorQuotientPrimePower(2, 3)


def test_equal_indices_rejected():
    with pytest.raises(InputError, match="indices must differ"):
        classify_pair(5, 5)
    with pytest.raises(InputError):
        minimal_k(4, 4)
    with pytest.raises(InputError):
        certificate(7, 7)


def test_minimal_k_examples():
    assert minimal_k(6, 3) == 2
    assert minimal_k(9, 3) == 3
    assert minimal_k(12, 2) == 1
    assert minimal_k(5, 3) == 1


def test_constructive_examples():
    c = certificate_constructive(6, 3)
    assert (c.k, c.a, c.b) == (2, X + 1, 1 - X)
    assert (X + 1) * phi(6) - (X - 1) * phi(3) == IntPoly([2])

    c = certificate_constructive(12, 2)
    assert (c.k, c.a, c.b) == (1, IntPoly([1]), X**2 - X**3)

    c = certificate_constructive(9, 3)
    assert c.k == 3 and c.a == IntPoly([1])
    assert phi(9) + c.b * phi(3) == IntPoly([3])


def test_constructive_requires_divisor():
    with pytest.raises(InputError):
        certificate_constructive(5, 3)


def test_lattice_examples():
    c = certificate_lattice(3, 2)
    assert c.k == 1 and c.a * phi(3) + c.b * phi(2) == IntPoly([1])
    assert certificate_lattice(6, 3).k == 2
    assert certificate_lattice(5, 3).k == 1


def test_dispatch_examples():
    c = certificate(4, 2)
    assert c.k == 2 and (c.a, c.b) == (IntPoly([1]), 1 - X)
    c = certificate(2, 1)
    assert (c.k, c.a, c.b) == (2, IntPoly([1]), IntPoly([-1]))
    c = certificate(12, 4)
    assert c.k == 3 and verify(c)
    assert certificate(3, 12) == certificate(12, 3)


def test_unknown_method():
    with pytest.raises(InputError):
        certificate(6, 3, method="magic")


def test_verify_rejects_tampering():
    c = certificate(6, 3)
    assert verify(c)
    assert not verify(dataclasses.replace(c, k=3))
    assert not verify(Certificate(6, 3, 1, IntPoly(), IntPoly()))
    assert not verify(dataclasses.replace(c, m=3, n=6))
    assert not verify(dataclasses.replace(c, m=0))
    assert not verify(dataclasses.replace(c, n=6))
    assert not verify(dataclasses.replace(c, k=-2, a=-c.a, b=-c.b))


def test_verify_accepts_unnormalized_identity():
    c = certificate(6, 3)
    assert is_normalized(c)
    shifted = dataclasses.replace(c, a=c.a + phi(3), b=c.b - phi(6))
    assert verify(shifted)
    assert not is_normalized(shifted)


def test_witness_examples():
    assert minimality_witness(6, 3) == (2, ModPoly(2, [1, 1, 1]))
    assert minimality_witness(4, 2) == (2, ModPoly(2, [1, 1]))
    assert minimality_witness(3, 2) is None
    assert minimality_witness(12, 2) is None


def test_charp_examples():
    assert charp_identity_check(3, 2, 1)
    assert charp_identity_check(1, 3, 2)
    assert charp_identity_check(5, 2, 2)


def test_charp_rejects_outside_hypothesis():
    with pytest.raises(InputError):
        charp_identity_check(6, 2, 1)
    with pytest.raises(InputError):
        charp_identity_check(5, 4, 1)
    with pytest.raises(InputError):
        charp_identity_check(5, 2, 0)


def test_charp_detects_wrong_exponent():
    # Phi_12 vs Phi_3 mod 2: exponent phi(4) = 2, so a bare Phi_3 must differ
    assert reduce_mod(phi(12), 2) != reduce_mod(phi(3), 2)
    assert charp_identity_check(3, 2, 2)


@settings(max_examples=80, deadline=None)
@given(pairs)
def test_theorem_matches_oracle_and_is_symmetric(mn):
    m, n = mn
    k = minimal_k(m, n)
    assert k == minimal_k(n, m)
    assert k == certificate_lattice(m, n).k
    hi, lo = max(mn), min(mn)
    if hi % lo == 0:
        assert k == k_from_phi_at_one(hi, lo) == certificate_constructive(m, n).k


@settings(max_examples=80, deadline=None)
@given(pairs)
def test_every_certificate_verifies(mn):
    c = certificate(*mn)
    assert verify(c) and is_normalized(c)
    assert c.a.degree < phi(c.n).degree and c.b.degree < phi(c.m).degree


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 30), st.sampled_from([2, 3, 5, 7]), st.integers(1, 3))
def test_witness_is_phi_n_mod_p(n, p, t):
    m = n * p**t
    if m > 500:
        return
    wp, g = minimality_witness(m, n)
    assert wp == p and g.degree >= 1
    assert g == reduce_mod(phi(n), p)


@pytest.mark.parametrize("m, n", [(4, 2), (3, 1), (2, 1)])
def test_brute_force_minimum_in_box(m, n):
    import itertools

    f, g = phi(m), phi(n)
    found = set()
    box = range(-4, 5)
    for a in itertools.product(box, repeat=g.degree):
        for b in itertools.product(box, repeat=f.degree):
            v = IntPoly(a) * f + IntPoly(b) * g
            if v.is_constant() and v:
                found.add(abs(v[0]))
    assert min(found) == minimal_k(m, n)
