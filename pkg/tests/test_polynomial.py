"""Unit and property tests for the exact polynomial ring."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lambdafact.enumeration import permutations_with_fix
from lambdafact.polynomial import Polynomial, variables
from lambdafact.symbols import LAM, MU

lam, mu = variables(LAM, MU)


def enum_f(n):
    """Fixed-point generating polynomial by direct permutation enumeration."""
    acc = Polynomial.zero()
    for _, fix in permutations_with_fix(n):
        acc = acc + lam ** fix
    return acc


def test_difference_of_squares():
    assert (lam + 1) * (lam - 1) == lam ** 2 - 1


def test_additive_identity():
    p = lam ** 2 * 3 - mu + Fraction(1, 2)
    assert p + Polynomial.zero() == p
    assert p + 0 == p


def test_binomial_expansion_cancels():
    assert ((lam + mu) ** 2 - (lam ** 2 + lam * mu * 2 + mu ** 2)).is_zero


def test_pow_conventions():
    assert lam ** 0 == Polynomial.one()
    assert Polynomial.zero() ** 0 == Polynomial.one()
    assert (lam + 1) ** 2 == lam ** 2 + 2 * lam + 1
    with pytest.raises(ValueError):
        lam ** -1


def test_substitute():
    assert (lam ** 2 + 1).substitute(LAM, mu + 1) == mu ** 2 + 2 * mu + 2
    assert lam.substitute(LAM, 0).is_zero


def test_substitute_matches_shift_expansion():
    # f_2 with λ := λ+μ equals the binomial-shift expansion, f by enumeration.
    f = [enum_f(k) for k in range(3)]
    lhs = f[2].substitute(LAM, lam + mu)
    from math import comb

    rhs = sum(
        (f[k] * mu ** (2 - k) * comb(2, k) for k in range(3)), Polynomial.zero()
    )
    assert lhs == rhs


def test_derivative():
    f2, f3 = enum_f(2), enum_f(3)
    assert f3.derivative(LAM) == f2 * 3
    assert Polynomial.constant(7).derivative(LAM).is_zero
    assert (lam * mu).derivative(MU) == lam


def test_evaluate():
    f3 = enum_f(3)
    assert f3.evaluate({LAM: 0}) == 2
    assert f3.evaluate({LAM: 1}) == 6
    assert (lam * mu).evaluate({LAM: 2, MU: 3}) == 6


def test_evaluate_names_unbound_symbol():
    with pytest.raises(ValueError, match="μ"):
        (lam * mu).evaluate({LAM: 1})


def test_rendering_is_canonical():
    assert str(enum_f(3)) == "λ^3 + 3λ + 2"
    assert str(Polynomial.zero()) == "0"
    assert str(lam * mu + lam ** 2 + 1) == "λμ + λ^2 + 1"
    assert str(lam * Fraction(3, 2) - 1) == "3/2 λ - 1"


def test_equality_and_hash():
    assert Polynomial.constant(3) == 3
    assert lam != mu
    assert hash(lam + 1 - 1) == hash(lam)


SYMS = (LAM, MU, "u")

coeffs = st.fractions(min_value=-4, max_value=4, max_denominator=3)
monomials = st.dictionaries(st.sampled_from(SYMS), st.integers(1, 3), max_size=2)
polys = st.lists(st.tuples(monomials, coeffs), max_size=4).map(
    lambda items: Polynomial({tuple(sorted(m.items())): c for m, c in items})
)


@settings(max_examples=80)
@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a + b == b + a
    assert a * (b + c) == a * b + a * c


@settings(max_examples=80)
@given(polys, polys)
def test_product_rule(a, b):
    lhs = (a * b).derivative(LAM)
    rhs = a * b.derivative(LAM) + a.derivative(LAM) * b
    assert lhs == rhs


@settings(max_examples=60)
@given(polys)
def test_substitute_identity(p):
    assert p.substitute(LAM, lam) == p


@settings(max_examples=40)
@given(polys, st.integers(0, 4))
def test_pow_matches_repeated_multiplication(p, k):
    expected = Polynomial.one()
    for _ in range(k):
        expected = expected * p
    assert p ** k == expected
