"""Base-p digit arithmetic and the digit relations it supports.

Everything downstream (decomposition matrices, character formulas, the
simplicity census) reduces to three comparisons between the base-p digit
vectors of two nonnegative integers a and b, where s denotes the position
of the lowest nonzero digit of b:

* ``a subset b``      -- every digit of a is 0 or equals the digit of b,
* ``a prec_1 b``      -- digits of a vanish up to position s and
                         a_i + b_i < p strictly above s,
* ``a prec_-1 b``     -- digits of a vanish below s, a_s + b_s = p, and
                         a_i + b_i < p strictly above s.

The two prec variants are mutually exclusive, so :func:`prec_rel` returns
a sign in {+1, -1, 0}.  All functions treat missing digits as 0, which
matches the unbounded quantifiers in the definitions above.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

PREC_1 = 1
PREC_MINUS_1 = -1
PREC_NONE = 0


@dataclass(frozen=True)
class PadicExpansion:
    """Canonical base-p digit vector, least-significant digit first.

    ``digits`` is empty exactly when ``value`` is 0; there is never a
    trailing zero digit.  ``f`` and ``k`` (lowest/highest nonzero digit
    index) are None for the zero expansion.
    """

    p: int
    digits: tuple[int, ...]
    value: int

    @property
    def f(self) -> int | None:
        for i, d in enumerate(self.digits):
            if d:
                return i
        return None

    @property
    def k(self) -> int | None:
        return len(self.digits) - 1 if self.digits else None

    def digit(self, i: int) -> int:
        return self.digits[i] if 0 <= i < len(self.digits) else 0


def expand(n: int, p: int) -> PadicExpansion:
    """Base-p expansion of a nonnegative integer."""
    if p < 2:
        raise ValueError(f"base must be >= 2, got {p}")
    if n < 0:
        raise ValueError(f"cannot expand negative value {n}")
    digits = []
    v = n
    while v:
        v, d = divmod(v, p)
        digits.append(d)
    return PadicExpansion(p=p, digits=tuple(digits), value=n)


def digits_of(n: int, p: int) -> list[int]:
    """Digit list of n in base p, least-significant first ([] for 0)."""
    digits = []
    while n:
        n, d = divmod(n, p)
        digits.append(d)
    return digits


def valuation(n: int, p: int) -> int:
    """Largest e with p^e dividing n (n > 0)."""
    if n <= 0:
        raise ValueError("valuation needs a positive argument")
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e


def subset_rel(a: int, b: int, p: int) -> bool:
    """True iff every base-p digit of a is 0 or equals the digit of b."""
    if b <= 0:
        raise ValueError(f"subset relation needs b > 0, got b={b}")
    if a < 0:
        raise ValueError(f"subset relation needs a >= 0, got a={a}")
    while a:
        if a % p not in (0, b % p):
            return False
        a //= p
        b //= p
    return True


def prec_rel(a: int, b: int, p: int) -> int:
    """Evaluate the prec relations of a against b.

    Returns +1 for prec_1, -1 for prec_-1, 0 for neither.  The two cases
    cannot overlap: with s the lowest nonzero digit position of b, prec_1
    forces a_s = 0 while prec_-1 forces a_s = p - b_s != 0.
    """
    if b <= 0:
        raise ValueError(f"prec relation needs b > 0, got b={b}")
    if a < 0:
        raise ValueError(f"prec relation needs a >= 0, got a={a}")
    # Strip the p^s factor of b; a must vanish on those positions.
    while b % p == 0:
        if a % p:
            return PREC_NONE
        a //= p
        b //= p
    a_s, b_s = a % p, b % p
    if a_s == 0:
        kind = PREC_1
    elif a_s + b_s == p:
        kind = PREC_MINUS_1
    else:
        return PREC_NONE
    a //= p
    b //= p
    while a or b:
        if a % p + b % p >= p:
            return PREC_NONE
        a //= p
        b //= p
    return kind


def lucas_divides(n: int, k: int, p: int) -> bool:
    """True iff p divides binomial(n, k).

    Out-of-range k gives a zero binomial, which every prime divides.
    By Lucas' theorem p does not divide binomial(n, k) exactly when each
    base-p digit of k is at most the corresponding digit of n.
    """
    if k < 0 or k > n:
        return True
    while n or k:
        if k % p > n % p:
            return True
        n //= p
        k //= p
    return False


# Vectorized digit tables.  The scalar relations above are the reference
# implementation; these produce the same answers for whole index ranges at
# once and back the matrix constructions, where millions of pairs are needed.

def _digit_matrix(top: int, p: int, width: int) -> np.ndarray:
    vals = np.arange(top + 1, dtype=np.int64)
    digs = np.empty((top + 1, width), dtype=np.int16)
    for i in range(width):
        digs[:, i] = vals % p
        vals //= p
    return digs


def _digit_width(top: int, p: int) -> int:
    width = 1
    v = top
    while v >= p:
        v //= p
        width += 1
    return width


def subset_table(amax: int, bmax: int, p: int) -> np.ndarray:
    """Boolean table T with T[a, b] = subset_rel(a, b, p); column b=0 is False."""
    width = _digit_width(max(amax, bmax, 1), p)
    da = _digit_matrix(amax, p, width)
    db = _digit_matrix(bmax, p, width)
    table = ((da[:, None, :] == 0) | (da[:, None, :] == db[None, :, :])).all(axis=2)
    table[:, 0] = False
    return table


def prec_table(amax: int, bmax: int, p: int) -> np.ndarray:
    """Signed table T with T[a, b] = prec_rel(a, b, p) in {+1, -1, 0}; column b=0 is 0."""
    width = _digit_width(max(amax, bmax, 1), p)
    da = _digit_matrix(amax, p, width)
    db = _digit_matrix(bmax, p, width)

    # Position of the lowest nonzero digit of each b (b = 0 handled at the end).
    s = np.zeros(bmax + 1, dtype=np.int64)
    v = np.arange(bmax + 1, dtype=np.int64)
    while True:
        mask = (v > 0) & (v % p == 0)
        if not mask.any():
            break
        v[mask] //= p
        s[mask] += 1

    idx = np.arange(width)
    above = idx[None, :] > s[:, None]          # (b, i): position strictly above s
    at_or_below = idx[None, :] <= s[:, None]
    below = idx[None, :] < s[:, None]

    sums_ok = ((da[:, None, :] + db[None, :, :]) < p) | ~above[None, :, :]
    sums_ok = sums_ok.all(axis=2)
    zero_through_s = ((da[:, None, :] == 0) | ~at_or_below[None, :, :]).all(axis=2)
    zero_below_s = ((da[:, None, :] == 0) | ~below[None, :, :]).all(axis=2)

    a_at_s = da[:, s]                           # (a, b)
    b_at_s = db[np.arange(bmax + 1), s]         # (b,)
    complement = (a_at_s + b_at_s[None, :]) == p

    table = np.zeros((amax + 1, bmax + 1), dtype=np.int8)
    table[sums_ok & zero_through_s] = PREC_1
    table[sums_ok & zero_below_s & complement & ~zero_through_s] = PREC_MINUS_1
    table[:, 0] = PREC_NONE
    return table
