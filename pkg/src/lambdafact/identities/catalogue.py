"""The catalogue of verifiable identities.

Every entry computes both sides of one identity exactly, at one parameter
point, and returns the residual (left minus right).  Identities polynomial
in the parameters are checked with those parameters as genuine
indeterminates, never by sampling, so one check per n covers all values.
Series identities are checked to an explicit truncation order.

Sums over k on the right-hand sides are truncated at the series order; this
is exact because term k never contributes below the k-th coefficient, and
that valuation property is asserted programmatically for every term.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Iterator

from ..polynomial import Polynomial
from ..series import (
    TruncatedSeries,
    abel_rhs,
    binomial_power,
    exp_series,
    exp_truncated,
    geometric,
    geometric_truncated,
    mul_truncated,
    substitute_series,
    tree_function,
    truncate_total_degree,
)
from ..sequences import (
    bell_number,
    bell_poly,
    binomial,
    charlier,
    derangement,
    factorial,
    hermite_poly,
    involution_number,
    lambda_factorial,
    matching_number,
    q_poly,
    rising_factorial,
    stirling2,
)
from ..symbols import ALPHA, BETA, LAM, MU, T, U, UMBRA, V, X
from .report import IdentityReport, Residual
from .umbral import umbral_eval

_lam = Polynomial.variable(LAM)
_mu = Polynomial.variable(MU)
_alpha = Polynomial.variable(ALPHA)
_beta = Polynomial.variable(BETA)
_u = Polynomial.variable(U)
_v = Polynomial.variable(V)
_D = Polynomial.variable(UMBRA)

_ZERO = Polynomial.zero()


def _f(n: int) -> Polynomial:
    return lambda_factorial(n)


def _f_at(n: int, value: Polynomial | int) -> Polynomial:
    return _f(n).substitute(LAM, value)


def _const(x) -> Polynomial:
    return Polynomial.constant(x)


def _sum_k_terms(
    term: Callable[[int], TruncatedSeries], order: int, var: str = X
) -> TruncatedSeries:
    """Sum term(k) for k = 0..order, asserting term k starts at var**k."""
    total = TruncatedSeries.zero(var, order)
    for k in range(order + 1):
        t = term(k)
        if not t.valuation_at_least(k):
            raise RuntimeError(
                f"summand {k} contributes below {var}^{k}; truncation would be wrong"
            )
        total = total + t
    return total


def _first_nonzero(residuals: Iterable[Polynomial]) -> Polynomial:
    for r in residuals:
        if not r.is_zero:
            return r
    return _ZERO


# ---------------------------------------------------------------------------
# fixed-point polynomial basics
# ---------------------------------------------------------------------------


def _check_1_0a(n: int) -> Polynomial:
    lhs = _f_at(n, _lam + _mu)
    rhs = sum(
        (_f(k) * _mu ** (n - k) * binomial(n, k) for k in range(n + 1)), _ZERO
    )
    return lhs - rhs


def _check_1_0b(n: int) -> Polynomial:
    return lambda_factorial(n, "recurrence-1.0c") - lambda_factorial(n, "binomial-1.0b")


def _check_1_0c(n: int) -> Polynomial:
    return _f(n) - (_f(n - 1) * n + (_lam - 1) ** n)


def _check_1_0d(n: int) -> Polynomial:
    return _f(n).derivative(LAM) - _f(n - 1) * n


def _check_1_0e(n: int) -> Polynomial:
    return lambda_factorial(n, "recurrence-1.0c") - lambda_factorial(n, "derangement-1.0e")


def _check_charlier_spec(n: int) -> Polynomial:
    rhs = charlier(n).substitute(ALPHA, 1).substitute(U, _lam - 1)
    return _f(n) - rhs


def _check_charlier_recurrence(n: int) -> Polynomial:
    lhs = charlier(n + 1)
    rhs = _alpha * charlier(n).substitute(ALPHA, _alpha + 1) + _u * charlier(n)
    return lhs - rhs


def _check_riordan(n: int) -> Polynomial:
    lhs = sum(
        binomial(n, k) * factorial(k + 1) * (n + 1) ** (n - k) for k in range(n + 1)
    )
    return _const(lhs - (n + 1) ** (n + 1))


def _check_sunxu(n: int) -> Polynomial:
    lhs = sum(
        binomial(n, k) * derangement(k + 1) * (n + 1) ** (n - k) for k in range(n + 1)
    )
    return _const(lhs - n ** (n + 1))


def _check_thm11(n: int) -> Polynomial:
    lhs = sum(
        (_f(k + 1) * (binomial(n, k) * (n + 1) ** (n - k)) for k in range(n + 1)),
        _ZERO,
    )
    return lhs - (_lam + n) ** (n + 1)


# ---------------------------------------------------------------------------
# tree series and the exponential generating function of f
# ---------------------------------------------------------------------------


def _check_2_1(n: int) -> Polynomial:
    y = tree_function(n)
    residuals = []
    power = TruncatedSeries.one(X, n)
    for k in range(1, n + 1):
        power = power * y
        lhs = power.coefficient(n).as_fraction() * Fraction(
            factorial(n), factorial(k)
        )
        rhs = binomial(n - 1, k - 1) * n ** (n - k)
        residuals.append(_const(lhs - rhs))
    return _first_nonzero(residuals)


def _check_2_2(n: int) -> Polynomial:
    y = tree_function(n)
    ser = (y * _lam).exp() * (1 - y).reciprocal()
    return ser.egf_coefficient(n) - (_lam + n) ** n


def _check_2_3(n: int) -> Polynomial:
    ser = exp_series(_lam - 1, T, n) * geometric(T, n)
    return ser.egf_coefficient(n) - lambda_factorial(n, "binomial-1.0b")


def _check_2_3a(n: int) -> Polynomial:
    lhs = sum(
        (_f(k) * (binomial(n - 1, k - 1) * n ** (n - k)) for k in range(1, n + 1)),
        _ZERO,
    )
    return lhs - (_lam + (n - 1)) ** n


def _check_2_4(n: int) -> Polynomial:
    return umbral_eval((_D + _lam) ** n) - _f(n)


# ---------------------------------------------------------------------------
# the one-parameter binomial extension and the shifted-derivative transform
# ---------------------------------------------------------------------------


def _check_3_1(n: int) -> Polynomial:
    a = Polynomial.variable("a")
    b = Polynomial.variable("b")
    t = Polynomial.variable(T)
    rhs = b ** n  # the k = 0 factor a(a - k t)^(k-1) is 1 by convention
    for k in range(1, n + 1):
        rhs = rhs + a * (a - t * k) ** (k - 1) * (b + t * k) ** (n - k) * binomial(n, k)
    return (a + b) ** n - rhs


def _series_bivariate_exp(order: int) -> Polynomial:
    # Taylor terms of exp to combined degree `order` in x and t.
    return sum(
        (Polynomial.variable(X) ** j / math.factorial(j) for j in range(order + 1)),
        _ZERO,
    )


def _check_3_2(a_kind: str, order: int) -> Polynomial:
    """The derivative-resummation form, in the ring truncated by total degree."""
    x = Polynomial.variable(X)
    t = Polynomial.variable(T)
    syms = (X, T)

    if a_kind == "exp":
        lhs = _series_bivariate_exp(order)

        def deriv_at_kt(k: int) -> Polynomial:
            # k-th derivative of exp evaluated at k*t.
            return exp_truncated(t * k, syms, order) if k else Polynomial.one()

        def weight(k: int) -> Fraction:
            return Fraction(1, math.factorial(k))

    elif a_kind == "geometric":
        lhs = sum((x ** j for j in range(order + 1)), _ZERO)

        def deriv_at_kt(k: int) -> Polynomial:
            # k-th derivative of 1/(1-x) at k*t is k!/(1-kt)^(k+1).
            return sum(
                (
                    t ** j * (binomial(k + j, j) * factorial(k) * k ** j)
                    for j in range(order + 1)
                ),
                _ZERO,
            )

        def weight(k: int) -> Fraction:
            return Fraction(1, math.factorial(k))

    else:
        raise ValueError(f"unknown series kind {a_kind!r}")

    rhs = Polynomial.one() * deriv_at_kt(0)  # k = 0 term: the value at 0
    rhs = truncate_total_degree(rhs, syms, 0)
    for k in range(1, order + 1):
        head = x * (x - t * k) ** (k - 1)
        term = mul_truncated(head, deriv_at_kt(k), syms, order) * weight(k)
        if not truncate_total_degree(term, syms, k - 1).is_zero:
            raise RuntimeError(f"summand {k} contributes below total degree {k}")
        rhs = rhs + term
    return truncate_total_degree(lhs - rhs, syms, order)


def _check_3_3(n: int) -> Polynomial:
    lhs = umbral_eval((_D + _lam) * (_D + _lam + (n + 1)) ** n)
    return lhs - (_lam + n) ** (n + 1)


_A_FAMILIES: dict[str, Callable[[int], Polynomial]] = {
    "ones": lambda n: Polynomial.one(),
    "factorial": lambda n: _const(factorial(n)),
    "derangement": lambda n: _const(derangement(n)),
    "bell": bell_poly,
    "hermite": hermite_poly,
    "charlier": charlier,
}


def _check_thm12(family: str, order: int, variant: str = "egf") -> TruncatedSeries:
    a = _A_FAMILIES[family]
    if variant == "egf":
        lhs = TruncatedSeries.egf(lambda n: a(n) * _f(n), X, order)
        return lhs - abel_rhs(a, _lam, order)
    if variant == "ogf-lambda-1":
        lhs = TruncatedSeries.ogf(a, X, order)
        return lhs - abel_rhs(a, 1, order)
    raise ValueError(f"unknown variant {variant!r}")


def _charlier_egf(order: int, extra_exponent: Polynomial | int = 0) -> TruncatedSeries:
    return exp_series(_u, X, order) * binomial_power(-1, -(_alpha + extra_exponent), order)


def _check_charlier_deriv(k: int, order: int) -> TruncatedSeries:
    base = _charlier_egf(order + k)
    route1 = base
    for _ in range(k):
        route1 = route1.derivative()
    shrunk = substitute_series(
        charlier(k), U, TruncatedSeries(X, [_u, -_u], order)
    )  # second argument u(1-x)
    route2 = shrunk * _charlier_egf(order, extra_exponent=k)
    return route1 - route2


def _check_3_4(order: int, m: int = 0) -> TruncatedSeries:
    lhs = TruncatedSeries.egf(lambda n: charlier(m + n) * _f(n), X, order)

    def term(k: int) -> TruncatedSeries:
        pre = (_lam + (k - 1)) ** k / math.factorial(k)
        csub = substitute_series(
            charlier(m + k), U, TruncatedSeries(X, [_u, _u * k], order)
        )  # second argument u(1+kx)
        damp = exp_series(-_u * k, X, order)
        tail = binomial_power(k, -(_alpha + (m + k)), order)
        return (csub * damp * tail).shift(k) * pre

    return lhs - _sum_k_terms(term, order)


def _check_3_6(m: int, order: int) -> TruncatedSeries:
    lhs = TruncatedSeries.egf(
        lambda n: _const(derangement(m + n) * derangement(n)), X, order
    )

    def term(k: int) -> TruncatedSeries:
        pre = Fraction((k - 1) ** k, math.factorial(k))
        fsub = substitute_series(
            lambda_factorial(m + k), LAM, TruncatedSeries(X, [0, -k], order)
        )
        grow = exp_series(k, X, order)
        tail = binomial_power(k, -(m + k + 1), order)
        return (fsub * grow * tail).shift(k) * pre

    return lhs - _sum_k_terms(term, order)


def _check_3_7(m: int, variant: str, order: int) -> TruncatedSeries:
    if variant == "f-ogf":
        lhs = TruncatedSeries.ogf(
            lambda n: lambda_factorial(m + n).substitute(LAM, _mu), X, order
        )

        def term(k: int) -> TruncatedSeries:
            pre = Fraction(k ** k, math.factorial(k))
            inner = TruncatedSeries(X, [_mu, (_mu - 1) * k], order)  # 1+(μ-1)(1+kx)
            fsub = substitute_series(lambda_factorial(m + k), LAM, inner)
            damp = exp_series(-(_mu - 1) * k, X, order)
            tail = binomial_power(k, -(m + k + 1), order)
            return (fsub * damp * tail).shift(k) * pre

        return lhs - _sum_k_terms(term, order)

    if variant == "derangement-ogf":
        lhs = TruncatedSeries.ogf(lambda n: _const(derangement(m + n)), X, order)

        def term(k: int) -> TruncatedSeries:
            pre = Fraction(k ** k, math.factorial(k))
            fsub = substitute_series(
                lambda_factorial(m + k), LAM, TruncatedSeries(X, [0, -k], order)
            )
            grow = exp_series(k, X, order)
            tail = binomial_power(k, -(m + k + 1), order)
            return (fsub * grow * tail).shift(k) * pre

        return lhs - _sum_k_terms(term, order)

    raise ValueError(f"unknown variant {variant!r}")


def _check_3_7_1(variant: str, order: int, m: int = 0) -> TruncatedSeries:
    if variant == "shifted-factorial":
        lhs = TruncatedSeries.ogf(lambda n: _const(factorial(m + n)), X, order)

        def term(k: int) -> TruncatedSeries:
            pre = Fraction(factorial(m + k) * k ** k, factorial(k))
            return binomial_power(k, -(m + k + 1), order).shift(k) * pre

        return lhs - _sum_k_terms(term, order)

    if variant == "f-ogf":
        lhs = TruncatedSeries.ogf(_f, X, order)

        def term(k: int) -> TruncatedSeries:
            pre = (_lam + (k - 1)) ** k
            return binomial_power(k, -(k + 1), order).shift(k) * pre

        return lhs - _sum_k_terms(term, order)

    raise ValueError(f"unknown variant {variant!r}")


def _check_gessel(variant: str, order: int) -> TruncatedSeries:
    if variant == "bilinear":
        def pair(n: int) -> Polynomial:
            second = charlier(n).substitute(ALPHA, _beta).substitute(U, _v)
            return charlier(n) * second

        lhs = TruncatedSeries.egf(pair, X, order)

        def term(k: int) -> TruncatedSeries:
            pre = rising_factorial(_alpha, k) * rising_factorial(_beta, k) / math.factorial(k)
            left = binomial_power(-_v, -(_alpha + k), order)
            right = binomial_power(-_u, -(_beta + k), order)
            return (left * right).shift(k) * pre

        rhs = exp_series(_u * _v, X, order) * _sum_k_terms(term, order)
        return lhs - rhs

    if variant == "derangement":
        lhs = TruncatedSeries.egf(lambda n: _const(derangement(n) ** 2), X, order)

        def term(k: int) -> TruncatedSeries:
            return binomial_power(1, -(2 * k + 2), order).shift(k) * factorial(k)

        rhs = exp_series(1, X, order) * _sum_k_terms(term, order)
        return lhs - rhs

    raise ValueError(f"unknown variant {variant!r}")


def _check_chz(order: int) -> TruncatedSeries:
    lhs = TruncatedSeries.ogf(lambda n: _f(n).substitute(LAM, _mu), X, order)

    def term(k: int) -> TruncatedSeries:
        return binomial_power(-(_mu - 1), -(k + 1), order).shift(k) * factorial(k)

    return lhs - _sum_k_terms(term, order)


def _check_bell_transform(m: int, order: int) -> TruncatedSeries:
    lhs = TruncatedSeries.egf(lambda n: bell_poly(m + n) * _f(n), X, order)

    def term(k: int) -> TruncatedSeries:
        pre = (_lam + (k - 1)) ** k / math.factorial(k)
        decay = exp_series(-k, X, order)
        bsub = substitute_series(bell_poly(m + k), U, decay * _u)
        blow = ((decay - 1) * _u).exp()
        return (bsub * blow).shift(k) * pre

    return lhs - _sum_k_terms(term, order)


def _check_3_8(m: int, order: int) -> TruncatedSeries:
    lhs = TruncatedSeries.ogf(lambda n: _const(bell_number(m + n)), X, order)

    def term(k: int) -> TruncatedSeries:
        pre = Fraction(k ** k, math.factorial(k))
        decay = exp_series(-k, X, order)
        bsub = substitute_series(bell_poly(m + k), U, decay)
        blow = (decay - 1).exp()
        return (bsub * blow).shift(k) * pre

    return lhs - _sum_k_terms(term, order)


def _check_3_9(m: int, variant: str, order: int) -> TruncatedSeries:
    if variant == "bilinear":
        lhs = TruncatedSeries.egf(lambda n: hermite_poly(m + n) * _f(n), X, order)

        def term(k: int) -> TruncatedSeries:
            pre = (_lam + (k - 1)) ** k / math.factorial(k)
            hsub = substitute_series(
                hermite_poly(m + k), U, TruncatedSeries(X, [_u, -k], order)
            )
            gauss = TruncatedSeries(X, [0, -_u * k, Fraction(k * k, 2)], order).exp()
            return (hsub * gauss).shift(k) * pre

        return lhs - _sum_k_terms(term, order)

    if variant in ("involution-ogf", "matching-ogf"):
        point = 1 if variant == "involution-ogf" else 0
        count = involution_number if variant == "involution-ogf" else matching_number
        lhs = TruncatedSeries.ogf(lambda n: _const(count(m + n)), X, order)

        def term(k: int) -> TruncatedSeries:
            pre = Fraction(k ** k, math.factorial(k))
            hsub = substitute_series(
                hermite_poly(m + k), U, TruncatedSeries(X, [point, -k], order)
            )
            gauss = TruncatedSeries(
                X, [0, -point * k, Fraction(k * k, 2)], order
            ).exp()
            return (hsub * gauss).shift(k) * pre

        return lhs - _sum_k_terms(term, order)

    raise ValueError(f"unknown variant {variant!r}")


# ---------------------------------------------------------------------------
# two-parameter convolution identities
# ---------------------------------------------------------------------------


def _check_4_1(n: int) -> Polynomial:
    lhs = sum(
        (
            _f(k) * (_mu + (k - n)) * _mu ** (n - k) * binomial(n, k)
            for k in range(n + 1)
        ),
        _ZERO,
    )
    return lhs - _mu * (_lam + _mu - 1) ** n


def _check_4_2(n: int) -> Polynomial:
    lhs = sum(
        (
            _f(k) * _f_at(n - k, _mu + 1) * binomial(n, k)
            for k in range(n + 1)
        ),
        _ZERO,
    )
    rhs = (_lam + _mu - 1) ** (n + 1) + (_const(n + 2) - _lam - _mu) * _f_at(
        n, _lam + _mu
    )
    return lhs - rhs


def _check_cor_selfdual(n: int) -> Polynomial:
    lhs = sum(
        (
            _f(k) * _f_at(n - k, _const(n + 3) - _lam) * binomial(n, k)
            for k in range(n + 1)
        ),
        _ZERO,
    )
    return lhs - (n + 1) ** (n + 1)


def _check_4_3(n: int) -> Polynomial:
    rhs = sum(
        (
            (_lam + k) ** k * (_mu - (k + 1)) ** (n - k) * binomial(n, k)
            for k in range(n + 1)
        ),
        _ZERO,
    )
    return _f_at(n, _lam + _mu) - rhs


def _check_difference(n: int) -> Polynomial:
    lhs = sum(
        (
            (_lam + k) ** n * ((-1) ** (n - k) * binomial(n, k))
            for k in range(n + 1)
        ),
        _ZERO,
    )
    return lhs - factorial(n)


def _check_4_3a(n: int, at: int | None = None) -> Polynomial:
    rhs = sum(
        (
            (_lam + k) ** k
            * (_lam + (k + 1)) ** (n - k)
            * ((-1) ** (n - k) * binomial(n, k))
            for k in range(n + 1)
        ),
        _ZERO,
    )
    residual = _const(derangement(n)) - rhs
    if at is not None:
        return _const(residual.substitute(LAM, at).as_fraction())
    return residual


def _rhs_4_4(n: int) -> Polynomial:
    # The k = n factor (μ-(n+1))(μ-k-1)^(n-k-1) is 1 by convention.
    rhs = (_lam + n) ** (n + 1)
    for k in range(n):
        rhs = rhs + (
            (_lam + k) ** (k + 1)
            * (_mu - (n + 1))
            * (_mu - (k + 1)) ** (n - k - 1)
            * binomial(n, k)
        )
    return rhs


def _check_4_4(n: int) -> Polynomial:
    lhs = sum(
        (_f(k + 1) * _mu ** (n - k) * binomial(n, k) for k in range(n + 1)), _ZERO
    )
    return lhs - _rhs_4_4(n)


def _check_4_5(n: int) -> Polynomial:
    lhs = sum(
        (
            _f(k + 1) * _f_at(n - k, _mu + 1) * binomial(n, k)
            for k in range(n + 1)
        ),
        _ZERO,
    )
    rhs = sum(
        (
            (_lam + k) ** (k + 1) * (_mu - (k + 1)) ** (n - k) * binomial(n, k)
            for k in range(n + 1)
        ),
        _ZERO,
    )
    return lhs - rhs


def _check_remark_mu(n: int) -> Polynomial:
    # At μ = n+1 the right side collapses to the tree-count convolution value.
    return _rhs_4_4(n).substitute(MU, n + 1) - (_lam + n) ** (n + 1)


def _check_stirling_difference(n: int, m_max: int) -> Polynomial:
    def residual(m: int) -> Polynomial:
        lhs = sum(
            (
                (_lam + k) ** m * ((-1) ** (n - k) * binomial(n, k))
                for k in range(n + 1)
            ),
            _ZERO,
        )
        rhs = _ZERO
        for k in range(n, m + 1):
            coeff = (-1) ** k * stirling2(m, k)
            rhs = rhs + rising_factorial(-k, n) * rising_factorial(-_lam, k - n) * coeff
        return lhs - rhs

    return _first_nonzero(residual(m) for m in range(m_max + 1))


def _check_cor_n_factorial(n: int, variant: str) -> Polynomial:
    if variant == "plain":
        lhs = sum(
            (
                _f(k + 1) * (1 - _lam) ** (n - k) * binomial(n, k)
                for k in range(n + 1)
            ),
            _ZERO,
        )
        return lhs - (_lam + n) * factorial(n)
    if variant == "convolved":
        lhs = sum(
            (
                _f(k + 1) * _f_at(n - k, 2 - _lam) * binomial(n, k)
                for k in range(n + 1)
            ),
            _ZERO,
        )
        return lhs - (_lam + Fraction(n, 2)) * factorial(n + 1)
    raise ValueError(f"unknown variant {variant!r}")


# ---------------------------------------------------------------------------
# the bivariate family
# ---------------------------------------------------------------------------


def _check_5_1(n: int, m_hi: int) -> Polynomial:
    def residual(m: int) -> Polynomial:
        lhs = q_poly(n, m)
        rhs = (_lam - 1) ** m * (_lam + _mu - 1) ** n
        if n:
            rhs = rhs + q_poly(n - 1, m) * n
        if m:
            rhs = rhs + q_poly(n, m - 1) * m
        return lhs - rhs

    return _first_nonzero(residual(m) for m in range(m_hi + 1))


def _check_5_2(total_degree: int) -> Polynomial:
    t = Polynomial.variable(T)
    x = Polynomial.variable(X)
    syms = (T, X)
    lhs = _ZERO
    for n in range(total_degree + 1):
        for m in range(total_degree + 1 - n):
            lhs = lhs + q_poly(n, m) * t ** n * x ** m / (
                factorial(n) * factorial(m)
            )
    rhs = exp_truncated((_lam + _mu - 1) * t, syms, total_degree)
    rhs = mul_truncated(rhs, exp_truncated((_lam - 1) * x, syms, total_degree), syms, total_degree)
    rhs = mul_truncated(rhs, geometric_truncated(t + x, syms, total_degree), syms, total_degree)
    return lhs - rhs


def _check_q_second(n: int, m_hi: int) -> Polynomial:
    def residual(m: int) -> Polynomial:
        return q_poly(n + 1, m) - q_poly(n, m + 1) - _mu * q_poly(n, m)

    return _first_nonzero(residual(m) for m in range(m_hi + 1))


def _check_q_diag(big_n: int) -> Polynomial:
    t = Polynomial.variable(T)
    lhs = sum(
        (
            q_poly(big_n - n, n) * t ** (big_n - n) * binomial(big_n, n)
            for n in range(big_n + 1)
        ),
        _ZERO,
    )
    # (t+1)^N f_N(λ + μt/(t+1)) via homogenization: f_N(a/b) b^N.
    a = _lam * (t + 1) + _mu * t
    b = t + 1
    coeffs = _f(big_n).coefficients_in(LAM)
    rhs = _ZERO
    for i, c in enumerate(coeffs):
        rhs = rhs + c * a ** i * b ** (big_n - i)
    return lhs - rhs


def _check_q_explicit(n: int, m_hi: int) -> Polynomial:
    return _first_nonzero(
        q_poly(n, m, "definition-sum") - q_poly(n, m, "explicit-double-sum")
        for m in range(m_hi + 1)
    )


def _check_5_3(n: int, m_hi: int) -> Polynomial:
    def residual(m: int) -> Polynomial:
        lhs = q_poly(n, m)
        rhs = (_lam - 1) ** m * _f_at(n, _lam + _mu)
        if m:
            shifted = q_poly(n, m - 1).substitute(MU, _D + _mu + 1)
            rhs = rhs + umbral_eval(shifted) * m
        return lhs - rhs

    return _first_nonzero(residual(m) for m in range(m_hi + 1))


def _check_5_4(n: int, m_hi: int) -> Polynomial:
    return _first_nonzero(
        q_poly(n, m, "definition-sum") - q_poly(n, m, "lemma-5.4")
        for m in range(m_hi + 1)
    )


def _check_thm_5_2(n: int) -> Polynomial:
    lhs = sum(
        (_f(k + 2) * _mu ** (n - k) * binomial(n, k) for k in range(n + 1)), _ZERO
    )
    rhs = sum(
        (
            (_lam ** 2 + (2 * k + 1))
            * (_lam + k) ** k
            * (_mu - (k + 1)) ** (n - k)
            * binomial(n, k)
            for k in range(n + 1)
        ),
        _ZERO,
    )
    return lhs - rhs


# ---------------------------------------------------------------------------
# registry
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Identity:
    id: str
    summary: str
    points: Callable[[int | None, int | None, int | None], list[dict]]
    check: Callable[..., Residual]


def _n_points(default_hi: int, lo: int = 0):
    def points(n_max, m_max, order):
        hi = default_hi if n_max is None else n_max
        return [{"n": n} for n in range(lo, hi + 1)]

    return points


def _n_points_with_m(default_n: int, total: int):
    # One point per n; the check loops m with n+m <= total.
    def points(n_max, m_max, order):
        hi = default_n if n_max is None else n_max
        return [{"n": n, "m_hi": (total if m_max is None else m_max + n) - n}
                for n in range(hi + 1)]

    return points


def _order_points(default_order: int, **fixed):
    def points(n_max, m_max, order):
        o = default_order if order is None else order
        return [dict(fixed, order=o)]

    return points


def _m_points(default_m: int, default_order: int, variants: tuple[str, ...] | None = None, m_lo: int = 0):
    def points(n_max, m_max, order):
        mm = default_m if m_max is None else m_max
        oo = default_order if order is None else order
        if variants is None:
            return [{"m": m, "order": oo} for m in range(m_lo, mm + 1)]
        return [
            {"m": m, "variant": v, "order": oo}
            for m in range(m_lo, mm + 1)
            for v in variants
        ]

    return points


CATALOGUE: dict[str, Identity] = {}


def _register(id_: str, summary: str, points, check) -> None:
    CATALOGUE[id_] = Identity(id_, summary, points, check)


_register("1.0a", "binomial shift of the argument of f", _n_points(15), _check_1_0a)
_register("1.0b", "f as a factorial-kernel binomial sum", _n_points(20), _check_1_0b)
_register("1.0c", "first-order recurrence for f", _n_points(20, lo=1), _check_1_0c)
_register("1.0d", "derivative of f lowers the index", _n_points(12, lo=1), _check_1_0d)
_register("1.0e", "f as a derangement-kernel binomial sum", _n_points(15), _check_1_0e)
_register(
    "charlier-spec",
    "f is a Charlier polynomial at unit first argument",
    _n_points(10),
    _check_charlier_spec,
)
_register(
    "charlier-recurrence",
    "three-term contiguous recurrence for Charlier polynomials",
    _n_points(10),
    _check_charlier_recurrence,
)
_register("riordan", "factorial convolution with tree counts", _n_points(12), _check_riordan)
_register("sunxu", "derangement convolution with tree counts", _n_points(12), _check_sunxu)
_register(
    "thm1.1",
    "unified convolution of shifted f with tree counts",
    _n_points(15),
    _check_thm11,
)
_register("2.1", "coefficients of powers of the tree series", _n_points(8, lo=1), _check_2_1)
_register(
    "2.2",
    "exponential of the tree series over its complement",
    _n_points(8),
    _check_2_2,
)
_register("2.3", "exponential generating function of f", _n_points(10), _check_2_3)
_register(
    "2.3a",
    "tree-count convolution equivalent to thm1.1",
    _n_points(12, lo=1),
    _check_2_3a,
)
_register("2.4", "umbral closed form of f", _n_points(10), _check_2_4)
_register("3.1", "one-parameter extension of the binomial theorem", _n_points(8), _check_3_1)
_register(
    "3.2",
    "resummation of a generating function by shifted derivatives",
    lambda n_max, m_max, order: [
        {"a_kind": kind, "order": 8 if order is None else order}
        for kind in ("exp", "geometric")
    ],
    _check_3_2,
)
_register("3.3", "umbral form of the tree-count convolution", _n_points(10), _check_3_3)
_register(
    "thm1.2",
    "series transform pairing f with shifted derivatives",
    lambda n_max, m_max, order: [
        {"family": fam, "order": 8 if order is None else order}
        for fam in _A_FAMILIES
    ]
    + [
        {
            "family": "factorial",
            "variant": "ogf-lambda-1",
            "order": 10 if order is None else order,
        }
    ],
    _check_thm12,
)
_register(
    "charlier-deriv",
    "closed form for derivatives of the Charlier generating function",
    lambda n_max, m_max, order: [
        {"k": k, "order": 6 if order is None else order} for k in range(6)
    ],
    _check_charlier_deriv,
)
_register(
    "3.4",
    "Charlier transform of f",
    _order_points(6),
    _check_3_4,
)
_register(
    "3.5",
    "shifted Charlier transform of f",
    _m_points(3, 6),
    lambda m, order: _check_3_4(order, m=m),
)
_register("3.6", "bilinear derangement series", _m_points(3, 6), _check_3_6)
_register(
    "3.7",
    "ordinary generating functions for shifted f and derangements",
    _m_points(3, 6, variants=("f-ogf", "derangement-ogf")),
    _check_3_7,
)
_register(
    "3.7.1",
    "ordinary generating functions for shifted factorials and for f",
    lambda n_max, m_max, order: [
        {"variant": "shifted-factorial", "m": m, "order": 8 if order is None else order}
        for m in range(0, (3 if m_max is None else m_max) + 1)
    ]
    + [{"variant": "f-ogf", "m": 0, "order": 8 if order is None else order}],
    _check_3_7_1,
)
_register(
    "gessel",
    "bilinear Charlier generating function and its derangement case",
    lambda n_max, m_max, order: [
        {"variant": "bilinear", "order": 5 if order is None else order},
        {"variant": "derangement", "order": 8 if order is None else order},
    ],
    _check_gessel,
)
_register(
    "chz",
    "ordinary generating function of f by a rational kernel",
    _order_points(8),
    _check_chz,
)
_register("bell-transform", "Bell-polynomial transform of f", _m_points(3, 6), _check_bell_transform)
_register("3.8", "ordinary generating function for shifted Bell numbers", _m_points(3, 6), _check_3_8)
_register(
    "3.9",
    "Hermite transform of f and involution/matching generating functions",
    _m_points(3, 6, variants=("bilinear", "involution-ogf", "matching-ogf")),
    _check_3_9,
)
_register("4.1", "weighted binomial convolution of f collapses", _n_points(12), _check_4_1)
_register("4.2", "convolution of f with shifted f", _n_points(12), _check_4_2)
_register(
    "cor-selfdual",
    "self-dual convolution of f summing to (n+1)^(n+1)",
    _n_points(10),
    _check_cor_selfdual,
)
_register("4.3", "explicit two-parameter expansion of f", _n_points(12), _check_4_3)
_register(
    "difference",
    "n-th finite difference of the n-th power",
    _n_points(12),
    _check_difference,
)
_register(
    "4.3a",
    "alternating closed form for derangement numbers",
    lambda n_max, m_max, order: [
        {"n": n} for n in range(0, (12 if n_max is None else n_max) + 1)
    ]
    + [
        {"n": n, "at": -1}
        for n in range(0, (12 if n_max is None else n_max) + 1)
    ],
    _check_4_3a,
)
_register("4.4", "shifted convolution against a free parameter", _n_points(10), _check_4_4)
_register("4.5", "doubly shifted convolution of f", _n_points(10), _check_4_5)
_register(
    "remark-mu",
    "specialization of the free parameter recovers thm1.1",
    _n_points(10),
    _check_remark_mu,
)
_register(
    "stirling-difference",
    "general finite difference via Stirling numbers",
    lambda n_max, m_max, order: [
        {"n": n, "m_max": 8 if m_max is None else m_max}
        for n in range(0, (6 if n_max is None else n_max) + 1)
    ],
    _check_stirling_difference,
)
_register(
    "cor-n-factorial",
    "convolutions of shifted f collapsing to factorials",
    lambda n_max, m_max, order: [
        {"n": n, "variant": v}
        for n in range(0, (12 if n_max is None else n_max) + 1)
        for v in ("plain", "convolved")
    ],
    _check_cor_n_factorial,
)
_register("5.1", "two-index recurrence for Q", _n_points_with_m(10, 10), _check_5_1)
_register(
    "5.2",
    "bivariate exponential generating function of Q",
    lambda n_max, m_max, order: [{"total_degree": 10 if order is None else order}],
    _check_5_2,
)
_register(
    "q-second",
    "index-trading recurrence for Q",
    _n_points_with_m(9, 9),
    _check_q_second,
)
_register(
    "q-diag",
    "diagonal substitution identity for Q",
    lambda n_max, m_max, order: [
        {"big_n": n} for n in range(0, (8 if n_max is None else n_max) + 1)
    ],
    _check_q_diag,
)
_register(
    "q-explicit",
    "explicit double-sum formula for Q",
    _n_points_with_m(10, 10),
    _check_q_explicit,
)
_register("5.3", "umbral reduction of Q in its second index", _n_points_with_m(10, 10), _check_5_3)
_register("5.4", "convolution reduction of Q in its second index", _n_points_with_m(10, 10), _check_5_4)
_register(
    "thm5.2",
    "doubly shifted convolution expanded explicitly",
    _n_points(10),
    _check_thm_5_2,
)


_PARAM_CAPS = {"n": 40, "m": 12, "m_hi": 12, "m_max": 12, "order": 20,
               "total_degree": 16, "big_n": 16, "k": 12}


def catalogue_ids() -> tuple[str, ...]:
    return tuple(CATALOGUE)


def describe(identity_id: str) -> str:
    return _lookup(identity_id).summary


def _lookup(identity_id: str) -> Identity:
    entry = CATALOGUE.get(identity_id)
    if entry is None:
        raise KeyError(f"unknown identity {identity_id!r}")
    return entry


def verify(identity_id: str, **params) -> IdentityReport:
    """Check one identity at one parameter point; exact, zero tolerance."""
    entry = _lookup(identity_id)
    for key, value in params.items():
        cap = _PARAM_CAPS.get(key)
        if cap is not None and isinstance(value, int) and value > cap:
            raise ValueError(f"{key}={value} beyond the supported cap {cap}")
    start = time.perf_counter()
    residual = entry.check(**params)
    elapsed_ms = (time.perf_counter() - start) * 1000.0
    return IdentityReport(
        identity=identity_id,
        params=params,
        order=params.get("order"),
        residual=residual,
        elapsed_ms=elapsed_ms,
    )


def verify_default(
    identity_id: str,
    n_max: int | None = None,
    m_max: int | None = None,
    order: int | None = None,
) -> Iterator[IdentityReport]:
    """Run one identity over its default (or overridden) parameter points."""
    entry = _lookup(identity_id)
    for point in entry.points(n_max, m_max, order):
        yield verify(identity_id, **point)


def verify_many(
    ids: Iterable[str] | None = None,
    n_max: int | None = None,
    m_max: int | None = None,
    order: int | None = None,
) -> Iterator[IdentityReport]:
    """Run several identities (default: the whole catalogue, in id order)."""
    for identity_id in ids if ids is not None else catalogue_ids():
        yield from verify_default(identity_id, n_max=n_max, m_max=m_max, order=order)
