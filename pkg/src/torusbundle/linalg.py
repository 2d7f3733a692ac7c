"""Exact integer linear algebra.

Exact results use Python ints, so entries never overflow; exterior powers
and Smith transforms grow entries quickly. The one fixed-width path is the
mod-q compound computation behind :func:`fixed_space_dims`, whose answer is
still exact because it only feeds a rank argument valid for finite-order
matrices.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np
from flint import nmod_mat

from .errors import DomainError, is_prime

__all__ = [
    "IntMatrix",
    "IntPolynomial",
    "SnfDecomposition",
    "smith_normal_form",
    "cokernel",
    "exterior_power",
    "determinant",
    "rank",
    "rational_kernel_rank",
    "char_poly",
    "cyclotomic",
    "poly_pow_coefficient",
    "inverse_unimodular",
    "compound_matrices_mod",
    "fixed_space_dims",
]


@dataclass(frozen=True)
class IntMatrix:
    """Immutable integer matrix stored row-major."""

    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"expected {self.rows * self.cols} entries, got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> IntMatrix:
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != cols:
                raise ValueError("ragged rows")
        entries = []
        for r in rows:
            for x in r:
                if isinstance(x, bool) or not isinstance(x, int):
                    raise TypeError(f"matrix entries must be integers, got {x!r}")
                entries.append(int(x))
        return cls(len(rows), cols, tuple(entries))

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls(n, n, tuple(1 if i == j else 0 for i in range(n) for j in range(n)))

    @classmethod
    def zero(cls, rows: int, cols: int | None = None) -> IntMatrix:
        cols = rows if cols is None else cols
        return cls(rows, cols, (0,) * (rows * cols))

    @classmethod
    def diagonal_matrix(cls, diag: Sequence[int], rows: int | None = None,
                        cols: int | None = None) -> IntMatrix:
        rows = len(diag) if rows is None else rows
        cols = rows if cols is None else cols
        out = [[0] * cols for _ in range(rows)]
        for i, d in enumerate(diag):
            out[i][i] = d
        return cls.from_rows(out, cols)

    @classmethod
    def block_diagonal(cls, *blocks: IntMatrix) -> IntMatrix:
        rows = sum(b.rows for b in blocks)
        cols = sum(b.cols for b in blocks)
        out = [[0] * cols for _ in range(rows)]
        r0 = c0 = 0
        for b in blocks:
            for i in range(b.rows):
                for j in range(b.cols):
                    out[r0 + i][c0 + j] = b[i, j]
            r0 += b.rows
            c0 += b.cols
        return cls.from_rows(out, cols)

    @classmethod
    def companion(cls, poly: IntPolynomial) -> IntMatrix:
        """Companion matrix of a monic polynomial: ones below the diagonal,
        negated low coefficients in the last column."""
        c = poly.coefficients
        n = poly.degree
        if n < 1 or c[-1] != 1:
            raise DomainError("companion matrix needs a monic polynomial of degree >= 1")
        out = [[0] * n for _ in range(n)]
        for i in range(1, n):
            out[i][i - 1] = 1
        for i in range(n):
            out[i][n - 1] = -c[i]
        return cls.from_rows(out, n)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i * self.cols + j]

    def tolist(self) -> list[list[int]]:
        c = self.cols
        return [list(self.entries[i * c:(i + 1) * c]) for i in range(self.rows)]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> tuple[int, ...]:
        return self.entries[j::self.cols] if self.cols else ()

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def transpose(self) -> IntMatrix:
        return IntMatrix.from_rows([self.column(j) for j in range(self.cols)], self.rows)

    def submatrix(self, rows: Iterable[int], cols: Iterable[int]) -> IntMatrix:
        rows, cols = list(rows), list(cols)
        return IntMatrix.from_rows([[self[i, j] for j in cols] for i in rows], len(cols))

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        b_cols = [other.column(j) for j in range(other.cols)]
        out = []
        for i in range(self.rows):
            r = self.row(i)
            out.append([sum(x * y for x, y in zip(r, bc) if x) for bc in b_cols])
        return IntMatrix.from_rows(out, other.cols)

    def _same_shape(self, other: IntMatrix) -> None:
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")

    def __add__(self, other: IntMatrix) -> IntMatrix:
        self._same_shape(other)
        return IntMatrix(self.rows, self.cols,
                         tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: IntMatrix) -> IntMatrix:
        self._same_shape(other)
        return IntMatrix(self.rows, self.cols,
                         tuple(a - b for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> IntMatrix:
        return IntMatrix(self.rows, self.cols, tuple(-a for a in self.entries))

    def scale(self, c: int) -> IntMatrix:
        return IntMatrix(self.rows, self.cols, tuple(c * a for a in self.entries))

    def __pow__(self, e: int) -> IntMatrix:
        if not self.is_square:
            raise ValueError("matrix power needs a square matrix")
        if e < 0:
            raise ValueError("negative powers are not supported")
        result = IntMatrix.identity(self.rows)
        base = self
        while e:
            if e & 1:
                result = result @ base
            base = base @ base
            e >>= 1
        return result

    def is_identity(self) -> bool:
        return self == IntMatrix.identity(self.rows) if self.is_square else False

    def apply(self, vec: Sequence) -> list:
        """Matrix-vector product; works for int or Fraction vectors."""
        if len(vec) != self.cols:
            raise ValueError("vector length mismatch")
        return [sum(a * x for a, x in zip(self.row(i), vec)) for i in range(self.rows)]

    def __repr__(self) -> str:
        return f"IntMatrix({self.tolist()})"


@dataclass(frozen=True)
class IntPolynomial:
    """Integer polynomial, coefficients lowest degree first."""

    coefficients: tuple[int, ...]

    def __post_init__(self) -> None:
        c = list(self.coefficients)
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coefficients", tuple(c))

    @classmethod
    def from_coefficients(cls, coeffs: Iterable[int]) -> IntPolynomial:
        return cls(tuple(int(c) for c in coeffs))

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coefficients) - 1

    def coefficient(self, i: int) -> int:
        return self.coefficients[i] if 0 <= i < len(self.coefficients) else 0

    def __add__(self, other: IntPolynomial) -> IntPolynomial:
        n = max(len(self.coefficients), len(other.coefficients))
        return IntPolynomial(tuple(self.coefficient(i) + other.coefficient(i) for i in range(n)))

    def __mul__(self, other: IntPolynomial) -> IntPolynomial:
        a, b = self.coefficients, other.coefficients
        if not a or not b:
            return IntPolynomial(())
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPolynomial(tuple(out))

    def __pow__(self, k: int) -> IntPolynomial:
        if k < 0:
            raise ValueError("negative exponent")
        result = IntPolynomial((1,))
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def __str__(self) -> str:
        if not self.coefficients:
            return "0"
        terms = []
        for i in range(len(self.coefficients) - 1, -1, -1):
            c = self.coefficients[i]
            if c == 0:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            mag = abs(c)
            body = str(mag) if (mag != 1 or i == 0) else ""
            if body and mono:
                body += "*"
            sign = "-" if c < 0 else "+"
            terms.append((sign, body + mono))
        s = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        for sign, t in terms[1:]:
            s += f" {sign} {t}"
        return s


@dataclass(frozen=True)
class SnfDecomposition:
    """``u @ a @ v == d`` with ``u``, ``v`` unimodular and ``d`` in Smith form."""

    u: IntMatrix
    d: IntMatrix
    v: IntMatrix
    diagonal: tuple[int, ...]

    @property
    def invariant_factors(self) -> tuple[int, ...]:
        """Nonzero diagonal entries (including units)."""
        return tuple(x for x in self.diagonal if x)

    @property
    def rank(self) -> int:
        return sum(1 for x in self.diagonal if x)


def _swap_rows(m: list[list[int]], i: int, j: int) -> None:
    m[i], m[j] = m[j], m[i]


def _swap_cols(m: list[list[int]], i: int, j: int) -> None:
    for r in m:
        r[i], r[j] = r[j], r[i]


def _add_row(m: list[list[int]], src: int, dst: int, c: int) -> None:
    """row[dst] += c * row[src]"""
    rs, rd = m[src], m[dst]
    for t, x in enumerate(rs):
        if x:
            rd[t] += c * x


def _add_col(m: list[list[int]], src: int, dst: int, c: int) -> None:
    """col[dst] += c * col[src]"""
    for r in m:
        if r[src]:
            r[dst] += c * r[src]


def smith_normal_form(a: IntMatrix) -> SnfDecomposition:
    """Smith normal form with transforms.

    Row and column reduction around a pivot of minimal absolute value,
    repeated until the pivot divides the whole remaining block. Row
    operations are mirrored on ``u`` and column operations on ``v``.
    """
    m, n = a.rows, a.cols
    w = a.tolist()
    u = IntMatrix.identity(m).tolist()
    v = IntMatrix.identity(n).tolist()

    for t in range(min(m, n)):
        while True:
            best = None
            for i in range(t, m):
                row = w[i]
                for j in range(t, n):
                    x = row[j]
                    if x and (best is None or abs(x) < best[0]):
                        best = (abs(x), i, j)
                        if best[0] == 1:
                            break
                if best is not None and best[0] == 1:
                    break
            if best is None:
                break
            _, pi, pj = best
            if pi != t:
                _swap_rows(w, t, pi)
                _swap_rows(u, t, pi)
            if pj != t:
                _swap_cols(w, t, pj)
                _swap_cols(v, t, pj)

            piv = w[t][t]
            dirty = False
            for i in range(t + 1, m):
                x = w[i][t]
                if x:
                    q = x // piv
                    _add_row(w, t, i, -q)
                    _add_row(u, t, i, -q)
                    if w[i][t]:
                        dirty = True
            for j in range(t + 1, n):
                x = w[t][j]
                if x:
                    q = x // piv
                    _add_col(w, t, j, -q)
                    _add_col(v, t, j, -q)
                    if w[t][j]:
                        dirty = True
            if dirty:
                continue

            # pivot row/column are clear; enforce divisibility on the block
            bad = None
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if w[i][j] % piv:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            _add_row(w, bad, t, 1)
            _add_row(u, bad, t, 1)

        if t < m and t < n and w[t][t] < 0:
            w[t] = [-x for x in w[t]]
            u[t] = [-x for x in u[t]]

    diag = tuple(w[i][i] for i in range(min(m, n)))
    return SnfDecomposition(
        u=IntMatrix.from_rows(u, m),
        d=IntMatrix.from_rows(w, n),
        v=IntMatrix.from_rows(v, n),
        diagonal=diag,
    )


def cokernel(a: IntMatrix):
    """The abelian group Z^rows / image(a)."""
    from .abelian import FgAbGroup

    snf = smith_normal_form(a)
    return FgAbGroup.from_orders(a.rows - snf.rank, [d for d in snf.diagonal if d > 1])


def _bareiss_rank_det(rows: list[list[int]]) -> tuple[int, int]:
    """Fraction-free elimination. Returns (rank, det); det is only meaningful
    for square full-rank input and is 0 otherwise."""
    m = [list(r) for r in rows]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    sign = 1
    prev = 1
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if m[i][c]), None)
        if piv is None:
            continue
        if piv != r:
            m[r], m[piv] = m[piv], m[r]
            sign = -sign
        pr = m[r]
        p = pr[c]
        for i in range(r + 1, nrows):
            ri = m[i]
            f = ri[c]
            if f:
                for j in range(c + 1, ncols):
                    ri[j] = (p * ri[j] - f * pr[j]) // prev
            else:
                for j in range(c + 1, ncols):
                    ri[j] = (p * ri[j]) // prev
            ri[c] = 0
        prev = p
        r += 1
    det = 0
    if nrows == ncols and r == nrows:
        det = sign * (m[-1][-1] if nrows else 1)
    return r, det


def determinant(a: IntMatrix) -> int:
    if not a.is_square:
        raise DomainError("determinant needs a square matrix")
    if a.rows == 0:
        return 1
    return _bareiss_rank_det(a.tolist())[1]


def rank(a: IntMatrix) -> int:
    if a.rows == 0 or a.cols == 0:
        return 0
    return _bareiss_rank_det(a.tolist())[0]


def rational_kernel_rank(a: IntMatrix) -> int:
    """Dimension of the rational null space {x : a x = 0}."""
    return a.cols - rank(a)


def _compound_levels(n: int, upto: int):
    """Index data for Laplace expansion along the first selected row.

    Yields, for each j = 1..upto, the lexicographic j-subsets together with
    the position of each subset minus its first element (rows) and minus
    its t-th element (columns) in the list of (j-1)-subsets.
    """
    prev_idx = {(): 0}
    for j in range(1, upto + 1):
        subs = list(combinations(range(n), j))
        rest = [prev_idx[s[1:]] for s in subs]
        drop = [[prev_idx[s[:t] + s[t + 1:]] for t in range(j)] for s in subs]
        yield j, subs, rest, drop
        prev_idx = {s: i for i, s in enumerate(subs)}


def exterior_power(a: IntMatrix, j: int) -> IntMatrix:
    """j-th compound matrix: entry (I, J) is the minor on row subset I and
    column subset J, subsets in lexicographic order.

    Minors of size j are expanded along their first row from the minors of
    size j - 1, so each level costs C(n, j)^2 * j products.
    """
    if not a.is_square:
        raise DomainError("exterior power needs a square matrix")
    n = a.rows
    if not 0 <= j <= n:
        raise DomainError(f"exterior degree {j} out of range 0..{n}")
    rows = a.tolist()
    prev = [[1]]
    for _, subs, rest, drop in _compound_levels(n, j):
        cur = []
        for s, ri in zip(subs, rest):
            ar = rows[s[0]]
            pr = prev[ri]
            line = []
            for cs, dc in zip(subs, drop):
                acc = 0
                for t, c in enumerate(cs):
                    x = ar[c]
                    if x:
                        y = pr[dc[t]]
                        if y:
                            acc += -x * y if t & 1 else x * y
                line.append(acc)
            cur.append(line)
        prev = cur
    return IntMatrix.from_rows(prev, len(prev[0]))


# Largest prime below 2^31: products of two residues fit in int64.
MODULUS = 2147483647


def compound_matrices_mod(a: IntMatrix, q: int = MODULUS) -> list[np.ndarray]:
    """All compound matrices Lambda^0(a), ..., Lambda^n(a) reduced mod q.

    Same expansion as :func:`exterior_power`, vectorized over int64 arrays.
    """
    if not a.is_square:
        raise DomainError("exterior power needs a square matrix")
    if q >= 2 ** 31:
        raise DomainError("modulus must be below 2^31")
    n = a.rows
    am = np.array(a.tolist(), dtype=np.int64).reshape(n, n) % q
    prev = np.ones((1, 1), dtype=np.int64)
    out = [prev]
    for j, subs, rest, drop in _compound_levels(n, n):
        first = np.array([s[0] for s in subs])
        picked = prev[np.array(rest)]
        drop = np.array(drop)
        cols = np.array(subs)
        cur = np.zeros((len(subs), len(subs)), dtype=np.int64)
        for t in range(j):
            term = (am[np.ix_(first, cols[:, t])] * picked[:, drop[:, t]]) % q
            cur = (cur - term) % q if t & 1 else (cur + term) % q
        out.append(cur)
        prev = cur
    return out


def rank_mod(m: np.ndarray, q: int = MODULUS) -> int:
    """Rank over F_q of an integer array."""
    if m.size == 0:
        return 0
    return nmod_mat(np.asarray(m % q).tolist(), q).rank()


def fixed_space_dims(a: IntMatrix, order: int, q: int = MODULUS) -> list[int]:
    """dim_Q ker(Lambda^j(a) - I) for j = 0..n, given a^order = I.

    Each Lambda^j(a) also has finite order. When q does not divide the
    order, averaging over the cyclic group splits F_q^N into the fixed space
    and the image of Lambda^j(a) - I, exactly as over Q. Reduction mod q can
    only lower ranks, and the two ranks sum to N in both settings, so the
    modular kernel dimension equals the rational one.
    """
    if not (a ** order).is_identity():
        raise DomainError(f"matrix does not satisfy a^{order} = I")
    if order % q == 0:
        raise DomainError("modulus must not divide the order")
    dims = []
    for w in compound_matrices_mod(a, q):
        shifted = w.copy()
        shifted[np.diag_indices_from(shifted)] -= 1
        dims.append(w.shape[0] - rank_mod(shifted, q))
    return dims


def char_poly(a: IntMatrix) -> IntPolynomial:
    """det(xI - a) by Faddeev-LeVerrier; every division is exact over Z."""
    if not a.is_square:
        raise DomainError("characteristic polynomial needs a square matrix")
    n = a.rows
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    ident = IntMatrix.identity(n)
    mk = IntMatrix.zero(n)
    for k in range(1, n + 1):
        mk = a @ mk + ident.scale(coeffs[n - k + 1])
        amk = a @ mk
        tr = sum(amk[i, i] for i in range(n))
        q, r = divmod(-tr, k)
        assert r == 0, "Faddeev-LeVerrier division must be exact"
        coeffs[n - k] = q
    return IntPolynomial(tuple(coeffs))


def cyclotomic(p: int) -> IntPolynomial:
    """p-th cyclotomic polynomial for prime p."""
    if not is_prime(p):
        raise DomainError(f"cyclotomic polynomial is only provided for prime p, got {p}")
    return IntPolynomial((1,) * p)


def poly_pow_coefficient(f: IntPolynomial, k: int, degree: int) -> int:
    """Coefficient of x**degree in f(x)**k."""
    if k < 0:
        raise DomainError("exponent must be nonnegative")
    if degree < 0:
        return 0
    return (f ** k).coefficient(degree)


def inverse_unimodular(a: IntMatrix) -> IntMatrix:
    """Inverse of an integer matrix with determinant +-1 (Gauss-Jordan over Q)."""
    if not a.is_square:
        raise DomainError("inverse needs a square matrix")
    n = a.rows
    aug = [[Fraction(x) for x in a.row(i)] + [Fraction(int(i == j)) for j in range(n)]
           for i in range(n)]
    for c in range(n):
        piv = next((i for i in range(c, n) if aug[i][c] != 0), None)
        if piv is None:
            raise DomainError("matrix is singular")
        aug[c], aug[piv] = aug[piv], aug[c]
        pv = aug[c][c]
        aug[c] = [x / pv for x in aug[c]]
        for i in range(n):
            if i != c and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[c])]
    out = []
    for i in range(n):
        row = aug[i][n:]
        if any(x.denominator != 1 for x in row):
            raise DomainError("matrix is not unimodular")
        out.append([int(x) for x in row])
    return IntMatrix.from_rows(out, n)
