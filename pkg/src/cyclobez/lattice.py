"""Integer-lattice oracle for the smallest constant in the ideal (f, g) of Z[x].

The map (a, b) -> a*f + b*g restricted to deg a < deg g, deg b < deg f is a
square integer matrix (a transposed Sylvester matrix).  Its Smith normal form
A = U*D*V decides which multiples of the constant polynomial 1 are in the
column lattice, and the transforms hand back explicit a, b.

The degree restriction loses nothing for monic f: reduce b modulo f, push the
quotient into a, and the bound on deg a follows by comparing degrees.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, lcm

from .errors import CommonFactorError, InputError, InvariantBreach
from .intpoly import IntPoly


@dataclass(frozen=True)
class IntMatrix:
    """Immutable integer matrix, stored as a tuple of row tuples."""

    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in r) for r in self.entries)
        if not rows or not rows[0]:
            raise InputError("matrix dimensions must be >= 1")
        if any(len(r) != len(rows[0]) for r in rows):
            raise InputError("matrix is not rectangular")
        object.__setattr__(self, "entries", rows)

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @classmethod
    def diag(cls, values, rows: int | None = None, cols: int | None = None) -> IntMatrix:
        values = list(values)
        rows = len(values) if rows is None else rows
        cols = len(values) if cols is None else cols
        return cls(
            tuple(
                tuple(values[i] if i == j and i < len(values) else 0 for j in range(cols))
                for i in range(rows)
            )
        )

    @classmethod
    def from_columns(cls, columns) -> IntMatrix:
        return cls(tuple(zip(*columns)))

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0])

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(r[j] for r in self.entries)

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.entries]

    def transpose(self) -> IntMatrix:
        return IntMatrix(tuple(zip(*self.entries)))

    def __matmul__(self, other):
        if isinstance(other, IntMatrix):
            if self.cols != other.rows:
                raise InputError(f"shape mismatch {self.shape} @ {other.shape}")
            cols = list(zip(*other.entries))
            return IntMatrix(
                tuple(tuple(sum(a * b for a, b in zip(r, c)) for c in cols) for r in self.entries)
            )
        vec = list(other)
        if len(vec) != self.cols:
            raise InputError("vector length mismatch")
        return [sum(a * b for a, b in zip(r, vec)) for r in self.entries]

    def diagonal(self) -> list[int]:
        return [self.entries[i][i] for i in range(min(self.shape))]

    def is_diagonal(self) -> bool:
        return all(v == 0 for i, r in enumerate(self.entries) for j, v in enumerate(r) if i != j)

    def det(self) -> int:
        """Determinant by fraction-free (Bareiss) elimination."""
        if self.rows != self.cols:
            raise InputError("determinant of a non-square matrix")
        m = self.tolist()
        n = len(m)
        sign, prev = 1, 1
        for k in range(n - 1):
            if m[k][k] == 0:
                swap = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
                if swap is None:
                    return 0
                m[k], m[swap] = m[swap], m[k]
                sign = -sign
            pk = m[k][k]
            for i in range(k + 1, n):
                mik = m[i][k]
                row_i, row_k = m[i], m[k]
                for j in range(k + 1, n):
                    row_i[j] = (row_i[j] * pk - mik * row_k[j]) // prev
                row_i[k] = 0
            prev = pk
        return sign * m[n - 1][n - 1]


@dataclass(frozen=True)
class SmithDecomposition:
    """``A == U @ D @ V`` with U, V unimodular and D in Smith form.

    ``U_inv`` and ``V_inv`` are carried along since the oracle needs them and
    they fall out of the elimination for free (``D == U_inv @ A @ V_inv``).
    """

    U: IntMatrix
    D: IntMatrix
    V: IntMatrix
    U_inv: IntMatrix
    V_inv: IntMatrix

    @property
    def invariant_factors(self) -> list[int]:
        return self.D.diagonal()


def stack_matrix(f: IntPoly, g: IntPoly) -> IntMatrix:
    """Matrix of (a, b) -> a*f + b*g on deg a < deg g, deg b < deg f.

    Columns are x^i * f (0 <= i < deg g) then x^j * g (0 <= j < deg f); row r
    holds the coefficient of x^r.  Row 0 is the constant term.
    """
    df, dg = f.degree, g.degree
    if df < 1 or dg < 1:
        raise InputError("stack_matrix needs both polynomials of degree >= 1")
    size = df + dg
    columns = []
    for shift in range(dg):
        columns.append((0,) * shift + f.coeffs + (0,) * (size - shift - df - 1))
    for shift in range(df):
        columns.append((0,) * shift + g.coeffs + (0,) * (size - shift - dg - 1))
    return IntMatrix.from_columns(columns)


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, s, t) with s*a + t*b == g == gcd(a, b) >= 0."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if a < 0:
        return -a, -s0, -t0
    return a, s0, t0


def _rows_op(M, i, j, a, b, c, d):
    # (row_i, row_j) <- (a*row_i + b*row_j, c*row_i + d*row_j)
    ri, rj = M[i], M[j]
    M[i] = [a * x + b * y for x, y in zip(ri, rj)]
    M[j] = [c * x + d * y for x, y in zip(ri, rj)]


def _rows_axpy(M, dst, src, q):
    # row_dst += q * row_src
    rs = M[src]
    M[dst] = [x + q * y for x, y in zip(M[dst], rs)]


class _Elimination:
    """Working state of a Smith reduction: D = P*A*Q, A = U*D*V throughout.

    P and V are stored as-is (they only ever see row operations); U and Q are
    stored transposed so their column operations become row operations too.
    """

    def __init__(self, A: IntMatrix):
        m, n = A.shape
        self.A = A.tolist()
        self.m, self.n = m, n
        self.P = IntMatrix.identity(m).tolist()
        self.Ut = IntMatrix.identity(m).tolist()
        self.Qt = IntMatrix.identity(n).tolist()
        self.V = IntMatrix.identity(n).tolist()

    # E = [[a, b], [c, d]] with det +-1 applied to rows i, j of A
    def row_op(self, i, j, a, b, c, d):
        det = a * d - b * c
        _rows_op(self.A, i, j, a, b, c, d)
        _rows_op(self.P, i, j, a, b, c, d)
        # U <- U E^-1, i.e. Ut <- (E^-1)^T Ut
        _rows_op(self.Ut, i, j, d * det, -c * det, -b * det, a * det)

    def row_sub(self, dst, src, q):
        # row_dst -= q * row_src
        _rows_axpy(self.A, dst, src, -q)
        _rows_axpy(self.P, dst, src, -q)
        _rows_axpy(self.Ut, src, dst, q)

    # A <- A E^T, i.e. the same 2x2 acting on columns i, j
    def col_op(self, i, j, a, b, c, d):
        det = a * d - b * c
        for r in self.A:
            x, y = r[i], r[j]
            r[i], r[j] = a * x + b * y, c * x + d * y
        _rows_op(self.Qt, i, j, a, b, c, d)
        _rows_op(self.V, i, j, d * det, -c * det, -b * det, a * det)

    def col_sub(self, dst, src, q):
        for r in self.A:
            r[dst] -= q * r[src]
        _rows_axpy(self.Qt, dst, src, -q)
        _rows_axpy(self.V, src, dst, q)

    def negate_row(self, i):
        self.A[i] = [-x for x in self.A[i]]
        self.P[i] = [-x for x in self.P[i]]
        self.Ut[i] = [-x for x in self.Ut[i]]

    def pivot_search(self, t):
        best = None
        best_ij = None
        for i in range(t, self.m):
            row = self.A[i]
            for j in range(t, self.n):
                v = row[j]
                if v:
                    av = abs(v)
                    if best is None or av < best:
                        best, best_ij = av, (i, j)
                        if av == 1:
                            return best_ij
        return best_ij

    def clear_column(self, t):
        A = self.A
        for i in range(t + 1, self.m):
            b = A[i][t]
            if not b:
                continue
            a = A[t][t]
            if b % a == 0:
                self.row_sub(i, t, b // a)
            else:
                g, s, u = xgcd(a, b)
                self.row_op(t, i, s, u, -b // g, a // g)

    def clear_row(self, t):
        A = self.A
        for j in range(t + 1, self.n):
            b = A[t][j]
            if not b:
                continue
            a = A[t][t]
            if b % a == 0:
                self.col_sub(j, t, b // a)
            else:
                g, s, u = xgcd(a, b)
                self.col_op(t, j, s, u, -b // g, a // g)

    def run(self):
        A = self.A
        for t in range(min(self.m, self.n)):
            ij = self.pivot_search(t)
            if ij is None:
                break
            i, j = ij
            if i != t:
                self.row_op(t, i, 0, 1, 1, 0)
            if j != t:
                self.col_op(t, j, 0, 1, 1, 0)
            while True:
                self.clear_column(t)
                self.clear_row(t)
                if any(A[i][t] for i in range(t + 1, self.m)):
                    continue
                piv = A[t][t]
                if abs(piv) != 1:
                    bad = next(
                        (i for i in range(t + 1, self.m) if any(v % piv for v in A[i][t + 1:])),
                        None,
                    )
                    if bad is not None:
                        # pull the offending row into the pivot row; the next
                        # pass then shrinks the pivot to a proper gcd
                        _rows_axpy(A, t, bad, 1)
                        _rows_axpy(self.P, t, bad, 1)
                        _rows_axpy(self.Ut, bad, t, -1)
                        continue
                break
            if A[t][t] < 0:
                self.negate_row(t)

    def result(self) -> SmithDecomposition:
        return SmithDecomposition(
            U=IntMatrix(self.Ut).transpose(),
            D=IntMatrix(self.A),
            V=IntMatrix(self.V),
            U_inv=IntMatrix(self.P),
            V_inv=IntMatrix(self.Qt).transpose(),
        )


def smith_normal_form(A: IntMatrix) -> SmithDecomposition:
    """Smith normal form by exact extended-gcd row and column operations.

    Pivot choice: smallest nonzero absolute value in the trailing block,
    first by row then by column, which makes the transforms reproducible.
    """
    elim = _Elimination(A)
    elim.run()
    return elim.result()


def minimal_constant(f: IntPoly, g: IntPoly) -> tuple[int, IntPoly, IntPoly]:
    """Smallest k > 0 with k == a*f + b*g for integer polynomials a, b.

    Returns ``(k, a, b)`` with deg a < deg g and deg b < deg f.  Raises
    CommonFactorError when f and g share a factor (a zero invariant factor).
    """
    M = stack_matrix(f, g)
    snf = smith_normal_form(M)
    w = snf.U_inv.column(0)
    d = snf.invariant_factors
    if any(v == 0 for v in d):
        raise CommonFactorError("polynomials share a common factor; no constant combination")
    k = 1
    for di, wi in zip(d, w):
        k = lcm(k, di // gcd(di, wi))
    y = [k * wi // di for di, wi in zip(d, w)]
    c = snf.V_inv @ y
    dg = g.degree
    a, b = IntPoly(c[:dg]), IntPoly(c[dg:])
    if a * f + b * g != IntPoly((k,)):
        raise InvariantBreach(f"lattice certificate failed to reproduce k={k}")
    return k, a, b
