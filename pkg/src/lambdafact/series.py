"""Truncated formal power series with polynomial coefficients.

A TruncatedSeries holds the coefficients c_0..c_N of a series in one
distinguished variable, meaning sum(c_i * var**i) + O(var**(N+1)).  The
coefficients are Polynomials that must not mention the series variable.
Coefficients are stored plain (c_n itself, not c_n * n!), so the same type
carries both exponential and ordinary generating functions; the egf/ogf
constructors divide or not at the boundary.

All operations are exact; order bookkeeping follows the rule that a binary
operation is valid to the smaller of the two truncation orders.

Also here: the rooted-tree series y = x*exp(y), symbolic-exponent binomial
series, the shifted-derivative transform used by the Abel-type expansion,
and total-degree-truncated arithmetic on bivariate polynomials.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Callable, Sequence, Union

from .polynomial import Polynomial

PolyLike = Union[Polynomial, int, Fraction]


def _as_poly(x: PolyLike) -> Polynomial:
    if isinstance(x, Polynomial):
        return x
    return Polynomial.constant(x)


class TruncatedSeries:
    """Immutable series truncated at a fixed order in one variable."""

    __slots__ = ("var", "order", "coeffs")

    def __init__(self, var: str, coeffs: Sequence[PolyLike], order: int | None = None):
        if order is None:
            if not coeffs:
                raise ValueError("need an explicit order for an empty coefficient list")
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError("truncation order must be >= 0")
        cs = [_as_poly(c) for c in coeffs[: order + 1]]
        cs.extend([Polynomial.zero()] * (order + 1 - len(cs)))
        for i, c in enumerate(cs):
            if var in c.symbols():
                raise ValueError(
                    f"coefficient of {var}^{i} mentions the series variable: {c}"
                )
        object.__setattr__(self, "var", var)
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, *_):
        raise AttributeError("TruncatedSeries is immutable")

    @classmethod
    def _raw(cls, var: str, coeffs: tuple[Polynomial, ...]) -> TruncatedSeries:
        s = object.__new__(cls)
        object.__setattr__(s, "var", var)
        object.__setattr__(s, "order", len(coeffs) - 1)
        object.__setattr__(s, "coeffs", coeffs)
        return s

    # ---- constructors ----

    @classmethod
    def zero(cls, var: str, order: int) -> TruncatedSeries:
        return cls._raw(var, (Polynomial.zero(),) * (order + 1))

    @classmethod
    def one(cls, var: str, order: int) -> TruncatedSeries:
        return cls.constant(1, var, order)

    @classmethod
    def constant(cls, c: PolyLike, var: str, order: int) -> TruncatedSeries:
        return cls(var, [c], order)

    @classmethod
    def identity(cls, var: str, order: int) -> TruncatedSeries:
        """The series var itself."""
        return cls(var, [0, 1], order)

    @classmethod
    def from_function(
        cls, fn: Callable[[int], PolyLike], var: str, order: int
    ) -> TruncatedSeries:
        return cls(var, [fn(n) for n in range(order + 1)], order)

    @classmethod
    def egf(
        cls, a: Callable[[int], PolyLike], var: str, order: int
    ) -> TruncatedSeries:
        """Series with c_n = a(n)/n!."""
        return cls(
            var,
            [_as_poly(a(n)) / math.factorial(n) for n in range(order + 1)],
            order,
        )

    @classmethod
    def ogf(
        cls, a: Callable[[int], PolyLike], var: str, order: int
    ) -> TruncatedSeries:
        """Series with c_n = a(n)."""
        return cls(var, [a(n) for n in range(order + 1)], order)

    @classmethod
    def from_polynomial(cls, p: Polynomial, var: str, order: int) -> TruncatedSeries:
        """Reinterpret a polynomial as a series in var (exact if deg <= order)."""
        cs = p.coefficients_in(var)
        if len(cs) - 1 > order:
            cs = cs[: order + 1]
        return cls(var, cs, order)

    # ---- inspection ----

    def coefficient(self, n: int) -> Polynomial:
        if n < 0 or n > self.order:
            raise IndexError(f"coefficient {n} beyond truncation order {self.order}")
        return self.coeffs[n]

    def egf_coefficient(self, n: int) -> Polynomial:
        """n! * c_n, the sequence entry when the series is an EGF."""
        return self.coeffs[n] * math.factorial(n)

    @property
    def is_zero(self) -> bool:
        return all(c.is_zero for c in self.coeffs)

    def valuation_at_least(self, k: int) -> bool:
        return all(c.is_zero for c in self.coeffs[: min(k, self.order + 1)])

    # ---- order management ----

    def truncate(self, order: int) -> TruncatedSeries:
        if order >= self.order:
            return self
        return TruncatedSeries._raw(self.var, self.coeffs[: order + 1])

    def _common(self, other: TruncatedSeries) -> int:
        if self.var != other.var:
            raise ValueError(
                f"series variable mismatch: {self.var!r} vs {other.var!r}"
            )
        return min(self.order, other.order)

    # ---- arithmetic ----

    def __add__(self, other: TruncatedSeries | PolyLike) -> TruncatedSeries:
        if isinstance(other, (Polynomial, int, Fraction)):
            other = TruncatedSeries.constant(other, self.var, self.order)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        n = self._common(other)
        return TruncatedSeries._raw(
            self.var, tuple(a + b for a, b in zip(self.coeffs, other.coeffs))[: n + 1]
        )

    __radd__ = __add__

    def __neg__(self) -> TruncatedSeries:
        return TruncatedSeries._raw(self.var, tuple(-c for c in self.coeffs))

    def __sub__(self, other: TruncatedSeries | PolyLike) -> TruncatedSeries:
        if isinstance(other, (Polynomial, int, Fraction)):
            other = TruncatedSeries.constant(other, self.var, self.order)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: PolyLike) -> TruncatedSeries:
        return TruncatedSeries.constant(other, self.var, self.order) - self

    def __mul__(self, other: TruncatedSeries | PolyLike) -> TruncatedSeries:
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            return TruncatedSeries._raw(self.var, tuple(a * c for a in self.coeffs))
        if isinstance(other, Polynomial):
            if self.var in other.symbols():
                other = TruncatedSeries.from_polynomial(other, self.var, self.order)
            else:
                return TruncatedSeries._raw(
                    self.var, tuple(a * other for a in self.coeffs)
                )
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        n = self._common(other)
        out = [Polynomial.zero()] * (n + 1)
        for i, a in enumerate(self.coeffs[: n + 1]):
            if a.is_zero:
                continue
            for j in range(n + 1 - i):
                b = other.coeffs[j]
                if not b.is_zero:
                    out[i + j] = out[i + j] + a * b
        return TruncatedSeries._raw(self.var, tuple(out))

    __rmul__ = __mul__

    def __truediv__(self, other: TruncatedSeries | PolyLike) -> TruncatedSeries:
        if isinstance(other, (int, Fraction)):
            return self * (Fraction(1) / Fraction(other))
        if isinstance(other, Polynomial):
            if self.var in other.symbols():
                other = TruncatedSeries.from_polynomial(other, self.var, self.order)
            else:
                return self * (Fraction(1) / other.as_fraction())
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self * other.reciprocal()

    def __eq__(self, other: object) -> bool:
        # Compares up to the smaller truncation order.
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        n = self._common(other)
        return self.coeffs[: n + 1] == other.coeffs[: n + 1]

    __hash__ = None  # type: ignore[assignment]

    # ---- structural operations ----

    def shift(self, k: int) -> TruncatedSeries:
        """Multiply by var**k, keeping the truncation order."""
        if k < 0:
            raise ValueError("shift must be nonnegative")
        if k == 0:
            return self
        if k > self.order:
            return TruncatedSeries.zero(self.var, self.order)
        zero = Polynomial.zero()
        coeffs = (zero,) * k + self.coeffs[: self.order + 1 - k]
        return TruncatedSeries._raw(self.var, coeffs)

    def rescale(self, c: PolyLike) -> TruncatedSeries:
        """Substitute var := c*var for a coefficient-like c."""
        c = _as_poly(c)
        if self.var in c.symbols():
            raise ValueError("rescale factor must not contain the series variable")
        out = []
        power = Polynomial.one()
        for a in self.coeffs:
            out.append(a * power)
            power = power * c
        return TruncatedSeries._raw(self.var, tuple(out))

    def derivative(self) -> TruncatedSeries:
        """Termwise d/dvar; exact one order lower."""
        if self.order == 0:
            return TruncatedSeries.zero(self.var, 0)
        return TruncatedSeries._raw(
            self.var,
            tuple(self.coeffs[i] * i for i in range(1, self.order + 1)),
        )

    def exp(self) -> TruncatedSeries:
        """exp of a series with zero constant term."""
        if not self.coeffs[0].is_zero:
            raise ValueError("series exp needs a zero constant term")
        n = self.order
        out = [Polynomial.one()] + [Polynomial.zero()] * n
        # From h' = g'·h: n·h_n = sum_{j=1..n} j·g_j·h_{n-j}.
        for i in range(1, n + 1):
            acc = Polynomial.zero()
            for j in range(1, i + 1):
                g = self.coeffs[j]
                if not g.is_zero:
                    acc = acc + g * j * out[i - j]
            out[i] = acc / i
        return TruncatedSeries._raw(self.var, tuple(out))

    def reciprocal(self) -> TruncatedSeries:
        """Multiplicative inverse, by Newton iteration.

        The constant term must be a nonzero rational; a zero constant term
        has no inverse and raises.
        """
        c0 = self.coeffs[0]
        if c0.is_zero:
            raise ValueError("cannot invert a series with zero constant term")
        c0val = c0.as_fraction()  # raises if the constant term is not scalar
        r = TruncatedSeries.constant(Fraction(1) / c0val, self.var, self.order)
        # Each pass doubles the number of correct coefficients.
        correct = 1
        while correct <= self.order:
            r = r * (2 - self * r)
            correct *= 2
        return r

    def compose(self, inner: TruncatedSeries) -> TruncatedSeries:
        """self(inner); inner must have zero constant term.

        The inner series may live in a different variable, in which case the
        result is a series in that variable (the outer variable is
        substituted away entirely).
        """
        if not inner.coeffs[0].is_zero:
            raise ValueError("series composition needs a zero inner constant term")
        n = min(self.order, inner.order)
        if self.var != inner.var:
            for i, c in enumerate(self.coeffs[: n + 1]):
                if inner.var in c.symbols():
                    raise ValueError(
                        f"outer coefficient of {self.var}^{i} already mentions {inner.var!r}"
                    )
        inner = inner.truncate(n)
        # Horner from the top coefficient down.
        result = TruncatedSeries.constant(self.coeffs[n], inner.var, n)
        for i in range(n - 1, -1, -1):
            result = result * inner + self.coeffs[i]
        return result

    # ---- rendering ----

    def __str__(self) -> str:
        parts = []
        for i, c in enumerate(self.coeffs):
            if c.is_zero:
                continue
            body = self.var if i == 1 else f"{self.var}^{i}"
            if i == 0:
                parts.append(str(c))
                continue
            if c.symbols():
                piece = f"({c}) {body}"
            else:
                val = c.as_fraction()
                if val == 1:
                    piece = body
                elif val == -1:
                    piece = f"-{body}"
                elif val.denominator == 1:
                    piece = f"{val}{body}"
                else:
                    piece = f"{val} {body}"
            parts.append(piece)
        joined: list[str] = []
        for p in parts:
            if not joined:
                joined.append(p)
            elif p.startswith("-"):
                joined.append(f"- {p[1:]}")
            else:
                joined.append(f"+ {p}")
        if not joined:
            joined.append("0")
        joined.append(f"+ O({self.var}^{self.order + 1})")
        return " ".join(joined)

    def __repr__(self) -> str:
        return f"TruncatedSeries({str(self)})"

    def coefficient_strings(self) -> list[str]:
        return [str(c) for c in self.coeffs]


# ---- named series and transforms ----


def geometric(var: str, order: int) -> TruncatedSeries:
    """1/(1 - var)."""
    return TruncatedSeries(var, [1] * (order + 1), order)


def exp_series(coefficient: PolyLike, var: str, order: int) -> TruncatedSeries:
    """exp(coefficient * var)."""
    return TruncatedSeries(var, [0, coefficient], order).exp()


def binomial_power(
    c: PolyLike, e: PolyLike, order: int, var: str = "x"
) -> TruncatedSeries:
    """(1 + c*var)**e for a symbolic exponent e.

    Coefficient of var**j is e(e-1)...(e-j+1)/j! * c**j.  Both c and e may
    be polynomials in parameters, but neither may contain var.
    """
    c = _as_poly(c)
    e = _as_poly(e)
    for p in (c, e):
        if var in p.symbols():
            raise ValueError("binomial_power arguments must not contain the series variable")
    coeffs = [Polynomial.one()]
    falling = Polynomial.one()
    cpow = Polynomial.one()
    for j in range(1, order + 1):
        falling = falling * (e - (j - 1))
        cpow = cpow * c
        coeffs.append(falling * cpow / math.factorial(j))
    return TruncatedSeries(var, coeffs, order)


def egf_shift(
    a: Callable[[int], PolyLike], k: int, order: int, var: str = "x"
) -> TruncatedSeries:
    """EGF of the shifted sequence n -> a(n+k); the k-th derivative of the EGF of a."""
    if k < 0:
        raise ValueError("shift must be nonnegative")
    return TruncatedSeries.egf(lambda n: a(n + k), var, order)


def tree_function(order: int, var: str = "x") -> TruncatedSeries:
    """The rooted-labeled-tree series y with y = var*exp(y).

    Computed by fixed-point iteration (each pass fixes one more
    coefficient) and cross-checked against the closed form n^(n-1)/n!;
    a mismatch is a hard error.
    """
    if order < 0:
        raise ValueError("order must be >= 0")
    y = TruncatedSeries.zero(var, order)
    for _ in range(order + 1):
        y = y.exp().shift(1)
    for n in range(1, order + 1):
        expected = Fraction(n ** (n - 1), math.factorial(n))
        if y.coeffs[n] != Polynomial.constant(expected):
            raise RuntimeError(
                f"tree series fixed point disagrees with n^(n-1)/n! at n={n}"
            )
    return y


def abel_rhs(
    a: Callable[[int], PolyLike],
    lam: PolyLike,
    order: int,
    var: str = "x",
) -> TruncatedSeries:
    """sum over k of (k+lam-1)**k * var**k * A_k(-k*var) / k!.

    A_k denotes the k-th derivative of the EGF of the sequence a.  Term k
    starts at var**k, so truncating the k-sum at the series order is exact;
    this valuation property is asserted for every term.
    """
    lam = _as_poly(lam)
    total = TruncatedSeries.zero(var, order)
    for k in range(order + 1):
        prefactor = (lam + (k - 1)) ** k / math.factorial(k)
        term = egf_shift(a, k, order, var).rescale(-k).shift(k) * prefactor
        if not term.valuation_at_least(k):
            raise RuntimeError(f"term {k} has coefficients below {var}^{k}")
        total = total + term
    return total


def substitute_series(
    p: Polynomial, sym: str, value: TruncatedSeries
) -> TruncatedSeries:
    """Evaluate p with sym replaced by a series; other symbols ride along.

    Every coefficient of p in sym must be free of the series variable.
    """
    var = value.var
    coeffs = p.coefficients_in(sym)
    for c in coeffs:
        if var in c.symbols():
            raise ValueError(
                f"coefficient {c} of {sym} already contains the series variable {var}"
            )
    result = TruncatedSeries.constant(coeffs[0], var, value.order)
    power = TruncatedSeries.one(var, value.order)
    for j in range(1, len(coeffs)):
        power = power * value
        if not coeffs[j].is_zero:
            result = result + power * coeffs[j]
    return result


# ---- total-degree-truncated polynomial arithmetic (bivariate layer) ----


def truncate_total_degree(
    p: Polynomial, syms: tuple[str, ...], total_degree: int
) -> Polynomial:
    """Drop monomials whose combined degree in syms exceeds total_degree."""
    keep = {}
    symset = set(syms)
    for mono, c in p.terms():
        d = sum(e for s, e in mono if s in symset)
        if d <= total_degree:
            keep[mono] = c
    return Polynomial(keep)


def mul_truncated(
    p: Polynomial, q: Polynomial, syms: tuple[str, ...], total_degree: int
) -> Polynomial:
    return truncate_total_degree(p * q, syms, total_degree)


def bivariate_truncated_product(
    p: Polynomial, q: Polynomial, syms: tuple[str, str], total_degree: int
) -> Polynomial:
    """Product with all monomials of combined syms-degree > total_degree dropped."""
    return mul_truncated(p, q, syms, total_degree)


def exp_truncated(
    p: Polynomial, syms: tuple[str, ...], total_degree: int
) -> Polynomial:
    """exp(p) to a total degree, for p with no syms-free part.

    Requires every monomial of p to have positive degree in syms, so the
    exponential is a finite sum of p**j/j! with j <= total_degree.
    """
    if not truncate_total_degree(p, syms, 0).is_zero:
        raise ValueError("exp_truncated needs every term to involve the truncation symbols")
    result = Polynomial.one()
    power = Polynomial.one()
    for j in range(1, total_degree + 1):
        power = mul_truncated(power, p, syms, total_degree)
        result = result + power / math.factorial(j)
    return result


def geometric_truncated(
    p: Polynomial, syms: tuple[str, ...], total_degree: int
) -> Polynomial:
    """1/(1-p) = sum p**j to a total degree; same valuation requirement as exp."""
    if not truncate_total_degree(p, syms, 0).is_zero:
        raise ValueError("geometric_truncated needs every term to involve the truncation symbols")
    result = Polynomial.one()
    power = Polynomial.one()
    for _ in range(total_degree):
        power = mul_truncated(power, p, syms, total_degree)
        result = result + power
    return result
