"""Characters and dimensions of the simple Sp(2m)-modules L(omega_r) in characteristic p.

Conventions.  omega_0 is the zero weight and omega_1..omega_m are the
fundamental weights of Sp(2m).  Delta(omega_r) is the Weyl module, whose
dimension C(2m, r) - C(2m, r-2) does not depend on p; L(omega_r) is its
simple head.  Throughout, R = m + 1 - r with base-p digits R_f..R_k
(R_f != 0 the lowest nonzero digit) and delta = (p - R_f) p^f.

The character of L(omega_r) is the alternating Weyl-basis sum

    ch L(omega_r) = sum_{a >= 0, a prec_1 R} ch Delta(omega_{r-2a})
                  - sum_{a >= 0, a prec_-1 R} ch Delta(omega_{r-2a}),

equivalently sum_{j in J} (Delta(omega_{r-2j}) - Delta(omega_{r-2j-2delta}))
where J = {j : j prec_1 R}; modules with negative subscript are zero.  The
inverse expansion (Weyl in terms of simples) is the Premet-Suprunenko rule
ch Delta(omega_r) = sum over j = r mod 2 with (r-j)/2 subset m+1-j of
ch L(omega_j).

Four independent routes to dim L(omega_r) are provided and cross-checked:

* ``theorem``  -- the alternating sum above with exact Weyl dimensions,
* ``series``   -- coefficient of X^r in
  (1-X)(1+X)^{2m+1} prod_i (X^{2(p-R_i)p^i}-1)/(X^{2 p^{i+1}}-1),
* ``binomial`` -- sum over the digit set A and n in Z of
  C(2m, r-2a+2n p^{k+1}) - C(2m, r-2-2a+2n p^{k+1}),
* ``trig``     -- the closed trigonometric form evaluated in high-precision
  floating point and rounded, with an explicit residual bound.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product as iter_product
from math import comb, factorial

from .errors import ConsistencyError
from .padic import PREC_1, digits_of, prec_rel, subset_rel
from .series import d_series


@dataclass(frozen=True)
class CharacterVector:
    """Integer coefficient vector over a labeled basis of the Grothendieck group.

    ``coeffs`` maps the weight subscript j (meaning Delta(omega_j) for the
    Weyl basis, L(omega_j) for the simple basis) to its coefficient.
    """

    m: int
    basis: str  # "weyl" or "simple"
    coeffs: dict[int, int]

    def __post_init__(self):
        if self.basis not in ("weyl", "simple"):
            raise ValueError(f"basis must be 'weyl' or 'simple', got {self.basis!r}")
        for j in self.coeffs:
            if not 0 <= j <= self.m:
                raise ValueError(f"index {j} outside 0..{self.m}")

    def signed_lists(self) -> tuple[list[int], list[int]]:
        """Indices with +1 and -1 coefficients, each sorted descending."""
        plus = sorted((j for j, c in self.coeffs.items() if c > 0), reverse=True)
        minus = sorted((j for j, c in self.coeffs.items() if c < 0), reverse=True)
        return plus, minus


@dataclass(frozen=True)
class DimensionReport:
    """dim L(omega_r) by each requested method, with an agreement flag."""

    m: int
    p: int
    r: int
    values: dict[str, int]
    agree: bool | None = None
    trig_residual: float | None = None

    @property
    def value(self) -> int:
        return next(iter(self.values.values()))


def _expansion(value: int, p: int) -> tuple[list[int], int, int]:
    """Digits of a positive integer plus the indices f, k of its extreme nonzero digits."""
    digits = digits_of(value, p)
    f = next(i for i, d in enumerate(digits) if d)
    return digits, f, len(digits) - 1


def _check_args(r: int, m: int, p: int, lowest: int = 0) -> None:
    if p < 2:
        raise ValueError(f"p must be >= 2, got {p}")
    if m < 1:
        raise ValueError(f"rank m must be >= 1, got {m}")
    if not lowest <= r <= m:
        raise ValueError(f"r must satisfy {lowest} <= r <= m = {m}, got {r}")


def j_set(r: int, m: int, p: int) -> tuple[list[int], int]:
    """The digit set J (clipped to 2j <= r) and the shift delta = (p - R_f) p^f.

    J consists of the j whose digits vanish up to position f and satisfy
    j_i + R_i < p above it, i.e. exactly the j with j prec_1 R.  Larger j
    only hit Weyl modules of negative subscript, which are zero.
    """
    _check_args(r, m, p, lowest=1)
    big_r = m + 1 - r
    digits, f, _ = _expansion(big_r, p)
    delta = (p - digits[f]) * p**f
    members = [j for j in range(r // 2 + 1) if prec_rel(j, big_r, p) == PREC_1]
    return members, delta


def decompose_simple(r: int, m: int, p: int) -> CharacterVector:
    """ch L(omega_r) as a signed vector in the Weyl basis.

    The coefficient of Delta(omega_{r-2a}) is the sign of the prec relation
    of a against R; the +1 and -1 index families never collide because
    members of J have digit 0 at position f while the shifted family has
    digit p - R_f there.
    """
    _check_args(r, m, p)
    if r == 0:
        return CharacterVector(m=m, basis="weyl", coeffs={0: 1})
    big_r = m + 1 - r
    coeffs: dict[int, int] = {}
    for a in range(r // 2 + 1):
        sign = prec_rel(a, big_r, p)
        if sign:
            coeffs[r - 2 * a] = sign
    return CharacterVector(m=m, basis="weyl", coeffs=coeffs)


def decompose_weyl(r: int, m: int, p: int) -> CharacterVector:
    """ch Delta(omega_r) as a 0/1 vector in the simple basis (Premet-Suprunenko)."""
    _check_args(r, m, p)
    coeffs = {j: 1 for j in range(r % 2, r + 1, 2)
              if subset_rel((r - j) // 2, m + 1 - j, p)}
    return CharacterVector(m=m, basis="simple", coeffs=coeffs)


def weyl_dim(k: int, m: int) -> int:
    """dim Delta(omega_k) = C(2m, k) - C(2m, k-2), independent of p."""
    _check_args(k, m, 2)
    return comb(2 * m, k) - (comb(2 * m, k - 2) if k >= 2 else 0)


def _dim_theorem(r: int, m: int, p: int) -> int:
    if r == 0:
        return 1
    return sum(c * weyl_dim(j, m) for j, c in decompose_simple(r, m, p).coeffs.items())


def _dim_series(r: int, m: int, p: int) -> int:
    """Coefficient X^r of (1-X)(1+X)^{2m+1} prod (X^{2(p-R_i)p^i}-1)/(X^{2p^{i+1}}-1).

    Digits R_i = 0 give the factor (X^{2p^{i+1}}-1)/(X^{2p^{i+1}}-1) = 1 and
    are skipped.  Everything is exact integer polynomial arithmetic mod X^{r+1}.
    """
    digits, _, _ = _expansion(m + 1 - r, p)
    series = [0] * (r + 1)
    series[0] = 1
    for i, ri in enumerate(digits):
        if ri == 0:
            continue
        a = 2 * (p - ri) * p**i
        if a <= r:  # multiply by (1 - X^a)
            for t in range(r, a - 1, -1):
                series[t] -= series[t - a]
        b = 2 * p**(i + 1)  # multiply by 1/(1 - X^b)
        for t in range(b, r + 1):
            series[t] += series[t - b]
    # Multiply by (1-X)(1+X)^{2m+1} and read off the X^r coefficient.
    return sum(series[t] * (comb(2 * m + 1, r - t) - comb(2 * m + 1, r - t - 1))
               for t in range(r + 1))


def a_set(r: int, m: int, p: int) -> tuple[list[int], int]:
    """The digit set A of the binomial/trig formulas, plus the period p^{k+1}.

    A collects the sums over positions f+1..k of digits a_i <= p-1-R_i
    (so A = {0} when f = k), and J = A + p^{k+1} N.
    """
    _check_args(r, m, p)
    digits, f, k = _expansion(m + 1 - r, p)
    ranges = [range(p - digits[i]) for i in range(f + 1, k + 1)]
    members = sorted(sum(d * p**(f + 1 + i) for i, d in enumerate(choice))
                     for choice in iter_product(*ranges))
    return members, p**(k + 1)


def periodic_binomial_sum(q: int, r: int, s: int, verify_trig: bool = False) -> int:
    """sum over n in Z of C(q, r + n s), by direct finite summation.

    With ``verify_trig`` the closed form
    (1/s) sum_{j=1}^{s} cos(j pi (q-2r)/s) (2 cos(j pi / s))^q
    is evaluated in high precision and must round to the same integer.
    """
    if s <= 0:
        raise ValueError(f"period s must be >= 1, got {s}")
    if q < 0:
        raise ValueError(f"q must be >= 0, got {q}")
    total = sum(comb(q, j) for j in range(r % s, q + 1, s))
    if verify_trig:
        import mpmath

        prec = q + s.bit_length() + 64
        with mpmath.workprec(prec):
            acc = mpmath.mpf(0)
            for j in range(1, s + 1):
                angle = mpmath.mpf((j * (q - 2 * r)) % (2 * s)) / s
                acc += mpmath.cospi(angle) * (2 * mpmath.cospi(mpmath.mpf(j) / s))**q
            acc /= s
            rounded = int(mpmath.nint(acc))
            if rounded != total or abs(acc - rounded) >= mpmath.mpf("0.25"):
                raise ConsistencyError(
                    f"trigonometric binomial sum disagrees: exact {total}, got {acc}")
    return total


def _dim_binomial(r: int, m: int, p: int) -> int:
    members, period = a_set(r, m, p)
    return sum(periodic_binomial_sum(2 * m, (r - 2 * a) % (2 * period), 2 * period)
               - periodic_binomial_sum(2 * m, (r - 2 - 2 * a) % (2 * period), 2 * period)
               for a in members)


def trig_precision_bits(m: int, period: int) -> int:
    """Working precision for the trigonometric formula.

    The dominant term is of size 4^m, so 4m bits absorb it, the period adds
    log2(p^{k+1}) for the summation, and 64 guard bits keep the final
    rounding residual far below the 0.25 acceptance threshold.
    """
    return 4 * m + period.bit_length() + 64


@lru_cache(maxsize=64)
def _sinpi_table(period: int, prec: int):
    import mpmath

    with mpmath.workprec(prec):
        return tuple(mpmath.sinpi(mpmath.mpf(j) / period) for j in range(2 * period))


@lru_cache(maxsize=64)
def _cos_power_table(period: int, exponent: int, prec: int):
    import mpmath

    with mpmath.workprec(prec):
        return tuple((2 * mpmath.cospi(mpmath.mpf(i) / (2 * period)))**exponent
                     for i in range(1, period))


def dim_trig(r: int, m: int, p: int, precision_bits: int | None = None) -> tuple[int, float]:
    """dim L(omega_r) by the trigonometric closed form.

    Returns the rounded integer and the rounding residual.  A residual of
    0.25 or more aborts: the formula is exact in exact arithmetic, so a
    large residual can only mean the precision budget was violated.
    """
    import mpmath

    _check_args(r, m, p)
    big_r = m + 1 - r
    members, period = a_set(r, m, p)
    prec = precision_bits or trig_precision_bits(m, period)
    with mpmath.workprec(prec):
        sins = _sinpi_table(period, prec)
        pows = _cos_power_table(period, 2 * m, prec)
        total = mpmath.mpf(0)
        for i in range(1, period):
            wave = mpmath.mpf(0)
            for a in members:
                wave += sins[(i * (big_r + 2 * a)) % (2 * period)]
            total += wave * sins[i % (2 * period)] * pows[i - 1]
        total = total * 2 / period
        rounded = int(mpmath.nint(total))
        residual = abs(total - rounded)
        if residual >= mpmath.mpf("0.25"):
            raise ConsistencyError(
                f"trig rounding residual {mpmath.nstr(residual)} >= 0.25 "
                f"at r={r}, m={m}, p={p} (precision {prec} bits)")
        return rounded, float(residual)


_METHODS = ("theorem", "series", "binomial", "trig")


def dim_simple(r: int, m: int, p: int, method: str = "theorem") -> DimensionReport:
    """dim L(omega_r) by one method or by all four with an agreement check."""
    _check_args(r, m, p)
    if method not in _METHODS + ("all",):
        raise ValueError(f"method must be one of {_METHODS + ('all',)}, got {method!r}")
    wanted = _METHODS if method == "all" else (method,)
    values: dict[str, int] = {}
    residual = None
    for name in wanted:
        if name == "theorem":
            values[name] = _dim_theorem(r, m, p)
        elif name == "series":
            values[name] = _dim_series(r, m, p)
        elif name == "binomial":
            values[name] = _dim_binomial(r, m, p)
        else:
            values[name], residual = dim_trig(r, m, p)
    agree = len(set(values.values())) == 1 if len(values) > 1 else None
    return DimensionReport(m=m, p=p, r=r, values=values, agree=agree,
                           trig_residual=residual)


def weight_multiplicity(r: int, m: int, p: int, i: int) -> int:
    """Multiplicity of the weight omega_{r-2i} in L(omega_r).

    Equals the coefficient of z^{m-r+2i} in the tilting multiplicity series
    of d = m - r, via the symplectic/SL(2) dual pair.
    """
    _check_args(r, m, p)
    if not 0 <= 2 * i <= r:
        raise ValueError(f"need 0 <= 2i <= r, got i={i}, r={r}")
    d = m - r
    order = d + 2 * i
    return d_series(d, p, order).integer_coeffs()[order]


@dataclass(frozen=True)
class AsymptoticConstant:
    """Growth data of dim L_{d+n}(omega_n) for n -> infinity at fixed d, p.

    The dimension grows like c * growth_base^n with
    growth_base = 4 cos^2(pi / (2 p^{k+1})) (k the top digit index of d+1),
    and smallest_pole = 1/growth_base is the dominant singularity of the
    generating function.
    """

    d: int
    p: int
    k: int
    precision_bits: int
    c: object
    growth_base: object
    smallest_pole: object


def asymptotic_constant(d: int, p: int, precision_bits: int = 128) -> AsymptoticConstant:
    """The constant c with dim L_{d+n}(omega_n) ~ c (4 cos^2(pi/(2 p^{k+1})))^n."""
    import mpmath

    if d < 0:
        raise ValueError("d must be >= 0")
    if p < 2:
        raise ValueError("p must be >= 2")
    big_r = d + 1
    digits, f, k = _expansion(big_r, p)
    ranges = [range(p - digits[i]) for i in range(f + 1, k + 1)]
    members = [sum(dg * p**(f + 1 + i) for i, dg in enumerate(choice))
               for choice in iter_product(*ranges)]
    period = p**(k + 1)
    with mpmath.workprec(precision_bits):
        cos_half = mpmath.cospi(mpmath.mpf(1) / (2 * period))
        base = 4 * cos_half**2
        wave = sum(mpmath.sinpi(mpmath.mpf(big_r + 2 * a) / period) for a in members)
        c = (2 * cos_half)**(2 * d) * 2 / period * mpmath.sinpi(mpmath.mpf(1) / period) * wave
        return AsymptoticConstant(d=d, p=p, k=k, precision_bits=precision_bits,
                                  c=c, growth_base=base, smallest_pole=1 / base)


def fixed_r_asymptotic_check(r: int, p: int, m_values) -> list[tuple[int, Fraction]]:
    """Exact ratios dim L_m(omega_r) / ((2^r / r!) m^r) over a range of ranks.

    The ratio tends to 1 as m grows; returned as exact rationals so callers
    can assert convergence at whatever tolerance they need.
    """
    if r < 1:
        raise ValueError("r must be >= 1")
    rows = []
    for m in m_values:
        dim = _dim_theorem(r, m, p)
        rows.append((m, Fraction(dim * factorial(r), 2**r * m**r)))
    return rows
