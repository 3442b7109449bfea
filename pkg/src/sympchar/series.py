"""Exact truncated power series and the tilting/dimension generating functions.

Two integer power series drive the dimension formulas:

* ``d_series(d, p, K)`` -- coefficient n is the multiplicity of the
  indecomposable tilting SL(2)-module T(d*rho) as a direct summand of the
  n-th tensor power of T(rho), following Erdmann's closed form as a quotient
  of Chebyshev polynomials of the second kind evaluated at 1/(2z),
* ``chi_series(d, p, K)`` -- coefficient n is dim L_{d+n}(omega_n), the
  dimension of the simple rank-(d+n) symplectic module with fundamental
  highest weight omega_n; the same Chebyshev quotient evaluated at 1/(2z)-1.

Both are computed exactly: U_k(1/(2z)) and U_k(1/(2z)-1) are cleared of
denominators by the substitutions Q_k(z) = z^k U_k(1/(2z)) and
R_k(z) = z^k U_k(1/(2z)-1), which satisfy integer three-term recurrences,
and the remaining quotient is a long division of integer power series whose
denominator has constant term 1.  The z-power bookkeeping cancels to a
nonnegative shift, so the result is a genuine power series with integer
coefficients; this is asserted rather than assumed.

The binomial product A*B (coefficients sum_k C(n,k) a_k b_{n-k}) links the
two series: chi_d equals z^{-d} times (1/(1-2z)) * D_d.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .errors import ConsistencyError
from .padic import digits_of

Rational = Fraction | int


@dataclass(frozen=True)
class TruncatedSeries:
    """Exact power series known through z^order (inclusive)."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if not self.coeffs:
            raise ValueError("a truncated series needs at least the constant term")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, n: int) -> Fraction:
        if not 0 <= n <= self.order:
            raise ValueError(f"coefficient {n} outside truncation order {self.order}")
        return self.coeffs[n]

    def integer_coeffs(self) -> list[int]:
        """Coefficients as ints; raises ConsistencyError if any is fractional."""
        out = []
        for n, c in enumerate(self.coeffs):
            if c.denominator != 1:
                raise ConsistencyError(f"coefficient of z^{n} is non-integral: {c}")
            out.append(c.numerator)
        return out

    @staticmethod
    def from_coeffs(values, order: int | None = None) -> "TruncatedSeries":
        coeffs = [Fraction(v) for v in values]
        if order is not None:
            coeffs = coeffs[: order + 1]
            coeffs += [Fraction(0)] * (order + 1 - len(coeffs))
        return TruncatedSeries(tuple(coeffs))


def geometric_series(a: Rational, order: int) -> TruncatedSeries:
    """1 / (1 - a z) truncated: coefficients a^n."""
    a = Fraction(a)
    coeffs = [Fraction(1)]
    for _ in range(order):
        coeffs.append(coeffs[-1] * a)
    return TruncatedSeries(tuple(coeffs))


def binomial_product(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Binomial convolution: coefficient n is sum_k C(n,k) a_k b_{n-k}.

    The result is truncated to the smaller of the two orders.
    """
    order = min(a.order, b.order)
    coeffs = []
    for n in range(order + 1):
        coeffs.append(sum((comb(n, k) * a.coeffs[k] * b.coeffs[n - k]
                           for k in range(n + 1)), Fraction(0)))
    return TruncatedSeries(tuple(coeffs))


def substitute_scaled(s: TruncatedSeries, a: Rational, order: int) -> TruncatedSeries:
    """(1/(1-az)) * S(z/(1-az)) truncated at ``order``.

    Computed by honest composition (Horner over truncated series), not via
    the binomial product, so that the identity
    binomial_product(1/(1-az), S) == substitute_scaled(S, a, ...) remains a
    meaningful two-route check.
    """
    a = Fraction(a)
    geo = geometric_series(a, order)
    # t = z / (1 - a z); constant term 0, so composition truncates cleanly.
    t = _mul_trunc([Fraction(0)] + list(geo.coeffs), order)
    # Horner: result = s_0 + t (s_1 + t (s_2 + ...)).
    acc = [Fraction(0)] * (order + 1)
    for c in reversed(s.coeffs):
        acc = _series_mul(acc, t, order)
        acc[0] += c
    out = _series_mul(acc, list(geo.coeffs), order)
    return TruncatedSeries(tuple(out))


def _mul_trunc(coeffs: list[Fraction], order: int) -> list[Fraction]:
    coeffs = coeffs[: order + 1]
    return coeffs + [Fraction(0)] * (order + 1 - len(coeffs))


def _series_mul(a: list[Fraction], b: list[Fraction], order: int) -> list[Fraction]:
    out = [Fraction(0)] * (order + 1)
    for i, ai in enumerate(a):
        if not ai or i > order:
            continue
        for j, bj in enumerate(b):
            if i + j > order:
                break
            if bj:
                out[i + j] += ai * bj
    return out


# Integer polynomials as dense coefficient lists, constant term first.

def poly_mul(a: list[int], b: list[int], trunc: int | None = None) -> list[int]:
    """Product of integer polynomials, optionally truncated past degree ``trunc``."""
    top = len(a) + len(b) - 2
    if trunc is not None:
        top = min(top, trunc)
    out = [0] * (top + 1)
    for i, ai in enumerate(a):
        if not ai or i > top:
            continue
        for j, bj in enumerate(b):
            if i + j > top:
                break
            out[i + j] += ai * bj
    return out


def poly_divmod(a: list[Fraction | int], b: list[Fraction | int]):
    """Exact division with remainder over the rationals; b nonzero."""
    r = [Fraction(x) for x in a]
    b = [Fraction(x) for x in b]
    while b and b[-1] == 0:
        b.pop()
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(len(r) - len(b) + 1, 1)
    while len(r) >= len(b) and any(r):
        while r and r[-1] == 0:
            r.pop()
        if len(r) < len(b):
            break
        shift = len(r) - len(b)
        factor = r[-1] / b[-1]
        q[shift] = factor
        for i, bi in enumerate(b):
            r[shift + i] -= factor * bi
        r.pop()
    return q, r


@dataclass(frozen=True)
class ChebyshevPolynomial:
    """Chebyshev polynomial in the variable x, dense integer coefficients."""

    kind: str  # "T" (cos(k t) = T_k(cos t)) or "U" (sin((k+1)t) = U_k(cos t) sin t)
    index: int
    coeffs: tuple[int, ...]


def chebyshev_u(k: int) -> ChebyshevPolynomial:
    """Second-kind Chebyshev polynomial U_k via U_{k+1} = 2x U_k - U_{k-1}."""
    if k < 0:
        raise ValueError("index must be >= 0")
    prev, cur = [1], [0, 2]
    if k == 0:
        return ChebyshevPolynomial("U", 0, (1,))
    for _ in range(k - 1):
        nxt = [0] + [2 * c for c in cur]
        for i, c in enumerate(prev):
            nxt[i] -= c
        prev, cur = cur, nxt
    return ChebyshevPolynomial("U", k, tuple(cur))


def chebyshev_t(k: int) -> ChebyshevPolynomial:
    """First-kind Chebyshev polynomial T_k via the same recurrence from 1, x."""
    if k < 0:
        raise ValueError("index must be >= 0")
    prev, cur = [1], [0, 1]
    if k == 0:
        return ChebyshevPolynomial("T", 0, (1,))
    for _ in range(k - 1):
        nxt = [0] + [2 * c for c in cur]
        for i, c in enumerate(prev):
            nxt[i] -= c
        prev, cur = cur, nxt
    return ChebyshevPolynomial("T", k, tuple(cur))


def q_poly(k: int, trunc: int | None = None) -> list[int]:
    """Q_k(z) = z^k U_k(1/(2z)): Q_0 = Q_1 = 1, Q_{k+1} = Q_k - z^2 Q_{k-1}."""
    if k < 0:
        raise ValueError("index must be >= 0")
    if k == 0:
        return [1]
    prev, cur = [1], [1]
    for _ in range(k - 1):
        nxt = list(cur)
        nxt += [0] * (len(prev) + 2 - len(nxt))
        for i, c in enumerate(prev):
            if trunc is not None and i + 2 > trunc:
                break
            nxt[i + 2] -= c
        if trunc is not None:
            nxt = nxt[: trunc + 1]
        prev, cur = cur, nxt
    return cur


def r_poly(k: int, trunc: int | None = None) -> list[int]:
    """R_k(z) = z^k U_k(1/(2z) - 1): R_0 = 1, R_1 = 1-2z, R_{k+1} = (1-2z) R_k - z^2 R_{k-1}."""
    if k < 0:
        raise ValueError("index must be >= 0")
    prev, cur = [1], [1, -2]
    if k == 0:
        return [1]
    for _ in range(k - 1):
        nxt = poly_mul([1, -2], cur, trunc)
        nxt += [0] * (len(prev) + 2 - len(nxt))
        for i, c in enumerate(prev):
            if trunc is not None and i + 2 > trunc:
                break
            nxt[i + 2] -= c
        if trunc is not None:
            nxt = nxt[: trunc + 1]
        prev, cur = cur, nxt
    return cur


def _series_div_int(num: list[int], den: list[int], order: int) -> list[int]:
    """Long division of integer power series; den must have constant term 1."""
    if not den or den[0] != 1:
        raise ConsistencyError("series division needs denominator constant term 1")
    out = [0] * (order + 1)
    for n in range(order + 1):
        c = num[n] if n < len(num) else 0
        for k in range(1, min(n, len(den) - 1) + 1):
            c -= den[k] * out[n - k]
        out[n] = c
    return out


def _chebyshev_quotient(d: int, p: int, order: int, poly) -> list[int]:
    """Shared core: z-cleared product over the nonzero digits of d+1.

    ``poly`` is q_poly or r_poly.  Digits d_i = 0 between the extreme
    nonzero digits contribute a factor U_{p^{i+1}-1}/U_{p^{i+1}-1} = 1 and
    are skipped.  Returns the quotient series (constant term 1) to ``order``.
    """
    digits = digits_of(d + 1, p)
    num = [1]
    den = [1]
    for i, di in enumerate(digits):
        if di == 0:
            continue
        num = poly_mul(num, poly((p - di) * p**i - 1, order), order)
        den = poly_mul(den, poly(p**(i + 1) - 1, order), order)
    return _series_div_int(num, den, order)


def d_series(d: int, p: int, order: int) -> TruncatedSeries:
    """Tilting multiplicity series: coefficient n is [T(rho)^(x n) : T(d rho)].

    Evaluated as z^d times an exact quotient of Q-polynomials; the z-power
    prefactors cancel to exactly +d, so coefficients below n = d vanish,
    the coefficient at n = d is 1, and parity forces zeros at n != d mod 2.
    """
    if d < 0:
        raise ValueError("d must be >= 0")
    if order < 0:
        raise ValueError("order must be >= 0")
    body = _chebyshev_quotient(d, p, max(order - d, 0), q_poly)
    coeffs = [0] * (order + 1)
    for n, c in enumerate(body):
        if d + n <= order:
            coeffs[d + n] = c
    series = TruncatedSeries.from_coeffs(coeffs)
    _check_multiplicities(series, "tilting multiplicity")
    return series


def chi_series(d: int, p: int, order: int) -> TruncatedSeries:
    """Dimension series: coefficient n is dim L_{d+n}(omega_n).

    Same quotient construction with the R-polynomials; here the z-power
    prefactors cancel completely, so the quotient is the series itself.
    """
    if d < 0:
        raise ValueError("d must be >= 0")
    if order < 0:
        raise ValueError("order must be >= 0")
    body = _chebyshev_quotient(d, p, order, r_poly)
    series = TruncatedSeries.from_coeffs(body)
    _check_multiplicities(series, "simple module dimension")
    return series


def _check_multiplicities(series: TruncatedSeries, what: str) -> None:
    for n, c in enumerate(series.coeffs):
        if c.denominator != 1 or c < 0:
            raise ConsistencyError(
                f"{what} series has invalid coefficient {c} at z^{n}")
