"""The unitriangular decomposition matrices A(n), B(n) and their block recursions.

With 1-based indices k, l (rows express row objects in the column basis):

* ``B(n)[k, l] = 1`` iff ``(k-l)/2 subset n+1-l`` -- the 0/1 matrix whose
  row k lists the simple constituents of the k-th Weyl object,
* ``A(n)[k, l] = +-1`` iff ``(k-l)/2 prec_{+-1} n+1-k`` -- the signed
  matrix expressing simples back in the Weyl basis.

``ATilde``/``BTilde`` are the index reversals M[n+1-k, n+1-l]; their entries
depend only on (u, v), not on n, so all sizes nest as leading submatrices.

For prime-power sizes both matrices also arise from a p x p block recursion
seeded with the identity at size p, driven by two shift matrices:

* ``E_n[i, j] = 1`` iff i + j = n + 2 (the antidiagonal on rows 2..n, first
  row and column zero), which satisfies E^3 = E,
* ``F_n[i, j] = 1`` iff i + j = n (the antidiagonal on rows 1..n-1, last
  row and column zero), which satisfies F^3 = F; left multiplication by F
  reverses rows 1..n-1 and zeroes row n.

The printed forms of E and F are fixed here by two executable constraints:
E^3 = E (resp. F^3 = F) and agreement of the recursion with the direct
digit-relation construction at size p^2; both are enforced in the tests.

Entries live in {-1, 0, 1}, so products of two such n x n matrices have
entries bounded by n; for n < 2^26 the float64 BLAS product is exact on
these integers, which keeps verification fast at large sizes.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .padic import prec_table, subset_table

KINDS = ("A", "B", "ATilde", "BTilde")


@dataclass(frozen=True, eq=False)
class DecompMatrix:
    """Square integer matrix with entries in {-1, 0, 1}.

    Storage is 0-based; paper-style accessors take 1-based indices.
    """

    n: int
    p: int
    kind: str
    entries: np.ndarray

    def entry(self, k: int, l: int) -> int:
        """Entry at 1-based position (k, l)."""
        if not (1 <= k <= self.n and 1 <= l <= self.n):
            raise ValueError(f"indices ({k}, {l}) outside 1..{self.n}")
        return int(self.entries[k - 1, l - 1])

    def same_entries(self, other: "DecompMatrix") -> bool:
        return self.n == other.n and np.array_equal(self.entries, other.entries)


@lru_cache(maxsize=16)
def _cached_subset(amax: int, bmax: int, p: int) -> np.ndarray:
    table = subset_table(amax, bmax, p)
    table.setflags(write=False)
    return table


@lru_cache(maxsize=16)
def _cached_prec(amax: int, bmax: int, p: int) -> np.ndarray:
    table = prec_table(amax, bmax, p)
    table.setflags(write=False)
    return table


def _bucket(x: int) -> int:
    # Round table sizes up to powers of two so nearby matrix sizes share caches.
    b = 1
    while b < x:
        b *= 2
    return b


def build_direct(n: int, p: int, kind: str = "B") -> DecompMatrix:
    """Build A(n), B(n) or a reversed variant straight from the digit relations."""
    if n < 1:
        raise ValueError(f"matrix size must be >= 1, got {n}")
    if kind not in KINDS:
        raise ValueError(f"kind must be one of {KINDS}, got {kind!r}")

    amax = max((n - 1) // 2, 1)
    k = np.arange(1, n + 1)[:, None]
    l = np.arange(1, n + 1)[None, :]
    diff = k - l
    even = (diff >= 0) & (diff % 2 == 0)
    a = np.where(even, diff // 2, 0)

    base = kind[0]
    if base == "B":
        table = _cached_subset(_bucket(amax), _bucket(n), p)
        b = np.broadcast_to(n + 1 - l, a.shape)
        entries = np.where(even, table[a, b], False).astype(np.int8)
    else:
        table = _cached_prec(_bucket(amax), _bucket(n), p)
        b = np.broadcast_to(n + 1 - k, a.shape)
        entries = np.where(even, table[a, b], 0).astype(np.int8)

    if kind.endswith("Tilde"):
        entries = entries[::-1, ::-1].copy()
    return DecompMatrix(n=n, p=p, kind=kind, entries=entries)


def shift_matrix(n: int, variant: str) -> np.ndarray:
    """The 0/1 shift matrices E_n and F_n (1-based definitions above)."""
    m = np.zeros((n, n), dtype=np.int8)
    if variant == "E":
        for i in range(2, n + 1):
            m[i - 1, n + 2 - i - 1] = 1
    elif variant == "F":
        for i in range(1, n):
            m[i - 1, n - i - 1] = 1
    else:
        raise ValueError(f"variant must be 'E' or 'F', got {variant!r}")
    return m


def _assemble_blocks(p: int, block_at) -> np.ndarray:
    size = block_at(0, 0).shape[0] * p
    out = np.zeros((size, size), dtype=np.int8)
    step = size // p
    for i in range(p):
        for j in range(p):
            blk = block_at(i, j)
            if blk is not None:
                out[i * step:(i + 1) * step, j * step:(j + 1) * step] = blk
    return out


def build_recursive(n_power: int, p: int, kind: str) -> DecompMatrix:
    """Assemble A(p^n_power) or B(p^n_power) by the p x p block recursion.

    Base case: identity at size p.  One level up, with M the previous matrix
    and E the shift of matching size:

    * A: diagonal blocks M, block (i, j) below is -M E for odd i-j and
      M E^2 for even i-j >= 2 (E^3 = E collapses all higher powers),
    * B: diagonal blocks M, first subdiagonal E M, zero elsewhere.
    """
    if n_power < 1:
        raise ValueError("n_power must be >= 1")
    if kind not in ("A", "B"):
        raise ValueError("recursive construction is defined for kinds 'A' and 'B'")
    m = np.eye(p, dtype=np.int8)
    for level in range(1, n_power):
        size = p**level
        e = shift_matrix(size, "E")
        if kind == "B":
            sub = (e.astype(np.int64) @ m.astype(np.int64)).astype(np.int8)
            m = _assemble_blocks(p, lambda i, j: m if i == j else (sub if i - j == 1 else None))
        else:
            me = (m.astype(np.int64) @ e.astype(np.int64)).astype(np.int8)
            me2 = (me.astype(np.int64) @ e.astype(np.int64)).astype(np.int8)

            def block(i, j, diag=m, odd=-me, evn=me2):
                if i == j:
                    return diag
                if i < j:
                    return None
                return odd if (i - j) % 2 else evn

            m = _assemble_blocks(p, block)
    return DecompMatrix(n=p**n_power, p=p, kind=kind, entries=m)


def build_recursive_tilde(n_power: int, p: int, kind: str) -> DecompMatrix:
    """Assemble the reversed matrices by their own block recursion.

    Base case: identity at size p.  With M the previous matrix and F the
    shift of matching size:

    * BTilde: diagonal blocks M, first superdiagonal F M, zero elsewhere,
    * ATilde: diagonal blocks M, block (i, j) above is -M F for odd j-i
      and M F^2 for even j-i >= 2.
    """
    if n_power < 1:
        raise ValueError("n_power must be >= 1")
    if kind not in ("ATilde", "BTilde"):
        raise ValueError("tilde construction is defined for 'ATilde' and 'BTilde'")
    m = np.eye(p, dtype=np.int8)
    for level in range(1, n_power):
        size = p**level
        f = shift_matrix(size, "F")
        if kind == "BTilde":
            sup = (f.astype(np.int64) @ m.astype(np.int64)).astype(np.int8)
            m = _assemble_blocks(p, lambda i, j: m if i == j else (sup if j - i == 1 else None))
        else:
            mf = (m.astype(np.int64) @ f.astype(np.int64)).astype(np.int8)
            mf2 = (mf.astype(np.int64) @ f.astype(np.int64)).astype(np.int8)

            def block(i, j, diag=m, odd=-mf, evn=mf2):
                if i == j:
                    return diag
                if i > j:
                    return None
                return odd if (j - i) % 2 else evn

            m = _assemble_blocks(p, block)
    return DecompMatrix(n=p**n_power, p=p, kind=kind, entries=m)


def exact_int_product(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """Exact product of integer matrices with entries in {-1, 0, 1}.

    Every partial sum is an integer of magnitude at most n, so the float64
    BLAS product is exact as long as n < 2^26.
    """
    n = x.shape[0]
    if n >= 1 << 26:
        raise ValueError("matrix too large for the exact float64 product")
    if abs(int(x.min())) > 1 or abs(int(x.max())) > 1 or abs(int(y.min())) > 1 or abs(int(y.max())) > 1:
        raise ValueError("exact product expects entries in {-1, 0, 1}")
    z = x.astype(np.float64) @ y.astype(np.float64)
    return np.rint(z).astype(np.int64)


def verify_inverse(n: int, p: int) -> tuple[bool, tuple[int, int] | None]:
    """Check A(n) B(n) = identity exactly; on failure report the first bad cell (1-based)."""
    a = build_direct(n, p, "A")
    b = build_direct(n, p, "B")
    prod = exact_int_product(a.entries, b.entries)
    expect = np.eye(n, dtype=np.int64)
    if np.array_equal(prod, expect):
        return True, None
    bad = np.argwhere(prod != expect)[0]
    return False, (int(bad[0]) + 1, int(bad[1]) + 1)


def to_csv(matrix: DecompMatrix) -> str:
    """Dense CSV, one row per line."""
    return "\n".join(",".join(str(int(v)) for v in row) for row in matrix.entries)


def to_triplets(matrix: DecompMatrix) -> list[tuple[int, int, int]]:
    """Sparse (row, col, value) triplets with 1-based indices, row-major order."""
    rows, cols = np.nonzero(matrix.entries)
    return [(int(r) + 1, int(c) + 1, int(matrix.entries[r, c])) for r, c in zip(rows, cols)]


def to_grid(matrix: DecompMatrix) -> str:
    """Text grid: '.' for 0, '+' for 1, '-' for -1."""
    symbols = {0: ".", 1: "+", -1: "-"}
    return "\n".join("".join(symbols[int(v)] for v in row) for row in matrix.entries)
