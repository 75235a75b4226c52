"""Block matrices over Gaussian rationals or Grassmann coefficients.

A :class:`SuperMatrix` of shape ``(m|n)`` is an ``(m+n) x (m+n)`` matrix
split into blocks ``a`` (even-even), ``b`` (even-odd), ``c`` (odd-even)
and ``d`` (odd-odd).  Entries are either all Gaussian rationals (scalar
level) or all elements of one Grassmann algebra (coefficient level).
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from .scalars import GaussianRational as QI
from .grassmann import GrassmannAlgebraSpec, GrassmannElement
from . import linalg


class SuperMatrix:
    """A square ``(m|n)`` block matrix with exact entries."""

    __slots__ = ("m", "n", "rows", "spec")

    def __init__(self, m: int, n: int, rows):
        self.m = m
        self.n = n
        size = m + n
        if len(rows) != size or any(len(r) != size for r in rows):
            raise ValueError("row shape does not match (m|n)")
        spec = None
        for row in rows:
            for x in row:
                if isinstance(x, GrassmannElement):
                    if spec is None:
                        spec = x.spec
                    elif spec != x.spec:
                        raise ValueError("mixed Grassmann algebras")
                elif not isinstance(x, QI):
                    raise TypeError("entries must be GaussianRational or GrassmannElement")
        if spec is not None:
            for row in rows:
                for x in row:
                    if not isinstance(x, GrassmannElement):
                        raise TypeError("cannot mix scalar and Grassmann entries")
        self.rows = [list(r) for r in rows]
        self.spec = spec

    # -- construction -------------------------------------------------

    @staticmethod
    def zeros(m: int, n: int, spec: GrassmannAlgebraSpec | None = None) -> "SuperMatrix":
        z = spec.zero() if spec else QI(0)
        mat = SuperMatrix.__new__(SuperMatrix)
        mat.m, mat.n = m, n
        mat.rows = [[z for _ in range(m + n)] for _ in range(m + n)]
        mat.spec = spec
        return mat

    @staticmethod
    def identity(m: int, n: int, spec: GrassmannAlgebraSpec | None = None) -> "SuperMatrix":
        out = SuperMatrix.zeros(m, n, spec)
        one = spec.one() if spec else QI(1)
        for i in range(m + n):
            out.rows[i][i] = one
        return out

    @staticmethod
    def from_blocks(m: int, n: int, a, b, c, d) -> "SuperMatrix":
        rows = []
        for i in range(m):
            rows.append(list(a[i]) + list(b[i]))
        for i in range(n):
            rows.append(list(c[i]) + list(d[i]))
        return SuperMatrix(m, n, rows)

    def copy(self) -> "SuperMatrix":
        return SuperMatrix(self.m, self.n, self.rows)

    def _zero_entry(self):
        return self.spec.zero() if self.spec else QI(0)

    def pos_parity(self, i: int, j: int) -> int:
        """Parity of position ``(i, j)``: 0 on diagonal blocks, 1 off."""
        return (i >= self.m) ^ (j >= self.m)

    # -- blocks -------------------------------------------------------

    def block_a(self):
        return [row[: self.m] for row in self.rows[: self.m]]

    def block_b(self):
        return [row[self.m :] for row in self.rows[: self.m]]

    def block_c(self):
        return [row[: self.m] for row in self.rows[self.m :]]

    def block_d(self):
        return [row[self.m :] for row in self.rows[self.m :]]

    def diag_part(self) -> "SuperMatrix":
        out = SuperMatrix.zeros(self.m, self.n, self.spec)
        for i in range(self.m + self.n):
            for j in range(self.m + self.n):
                if not self.pos_parity(i, j):
                    out.rows[i][j] = self.rows[i][j]
        return out

    def offdiag_part(self) -> "SuperMatrix":
        out = SuperMatrix.zeros(self.m, self.n, self.spec)
        for i in range(self.m + self.n):
            for j in range(self.m + self.n):
                if self.pos_parity(i, j):
                    out.rows[i][j] = self.rows[i][j]
        return out

    def parity(self):
        """Block-support parity of a scalar matrix: 0, 1 or None."""
        has_diag = any(
            not self.rows[i][j].is_zero()
            for i in range(self.m + self.n)
            for j in range(self.m + self.n)
            if not self.pos_parity(i, j)
        )
        has_off = any(
            not self.rows[i][j].is_zero()
            for i in range(self.m + self.n)
            for j in range(self.m + self.n)
            if self.pos_parity(i, j)
        )
        if has_diag and has_off:
            return None
        if has_off:
            return 1
        if has_diag:
            return 0
        return None

    # -- arithmetic ---------------------------------------------------

    def _check(self, other: "SuperMatrix"):
        if self.m != other.m or self.n != other.n:
            raise ValueError("shape mismatch")
        if self.spec != other.spec:
            raise ValueError("entry ring mismatch")

    def __add__(self, other):
        self._check(other)
        return SuperMatrix(
            self.m, self.n,
            [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)],
        )

    def __sub__(self, other):
        self._check(other)
        return SuperMatrix(
            self.m, self.n,
            [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)],
        )

    def __neg__(self):
        return SuperMatrix(self.m, self.n, [[-x for x in row] for row in self.rows])

    def __mul__(self, other):
        if isinstance(other, SuperMatrix):
            self._check(other)
            size = self.m + self.n
            z = self._zero_entry()
            rows = []
            for i in range(size):
                row = []
                for j in range(size):
                    s = z
                    for k in range(size):
                        x = self.rows[i][k]
                        y = other.rows[k][j]
                        if x.is_zero() or y.is_zero():
                            continue
                        s = s + x * y
                    row.append(s)
                rows.append(row)
            return SuperMatrix(self.m, self.n, rows)
        return self.scale(other)

    def scale(self, c) -> "SuperMatrix":
        """Multiply every entry by a central (even) coefficient."""
        if self.spec and isinstance(c, GrassmannElement):
            if c.parity() not in (0, None) and not c.is_zero():
                raise ValueError("scale factor must be even")
            return SuperMatrix(
                self.m, self.n, [[c * x for x in row] for row in self.rows]
            )
        c = QI.coerce(c)
        return SuperMatrix(self.m, self.n, [[x * c for x in row] for row in self.rows])

    def __eq__(self, other):
        if not isinstance(other, SuperMatrix):
            return NotImplemented
        return (
            self.m == other.m
            and self.n == other.n
            and self.spec == other.spec
            and all(
                x == y for ra, rb in zip(self.rows, other.rows) for x, y in zip(ra, rb)
            )
        )

    def __hash__(self):
        return hash((self.m, self.n, tuple(tuple(r) for r in self.rows)))

    def is_zero(self) -> bool:
        return all(x.is_zero() for row in self.rows for x in row)

    def __repr__(self):
        return f"SuperMatrix({self.m}|{self.n}, {self.rows!r})"

    # -- entrywise maps -----------------------------------------------

    def map_entries(self, f) -> "SuperMatrix":
        return SuperMatrix(self.m, self.n, [[f(x) for x in row] for row in self.rows])

    def conj(self) -> "SuperMatrix":
        """Entrywise complex conjugation of a scalar matrix."""
        if self.spec:
            raise ValueError("conj is for scalar matrices; use tilde")
        return self.map_entries(lambda x: x.conjugate())

    def tilde(self) -> "SuperMatrix":
        """Entrywise Grassmann conjugation."""
        return self.map_entries(lambda x: x.tilde())

    def transpose(self) -> "SuperMatrix":
        size = self.m + self.n
        return SuperMatrix(
            self.m, self.n,
            [[self.rows[j][i] for j in range(size)] for i in range(size)],
        )

    def body(self) -> "SuperMatrix":
        """Scalar matrix of the entries' scalar parts."""
        if not self.spec:
            return self.copy()
        out = SuperMatrix.zeros(self.m, self.n)
        for i in range(self.m + self.n):
            for j in range(self.m + self.n):
                out.rows[i][j] = self.rows[i][j].scalar_part()
        return out

    def embed(self, spec: GrassmannAlgebraSpec) -> "SuperMatrix":
        """Lift a scalar matrix to constants of a Grassmann algebra."""
        if self.spec:
            if self.spec == spec:
                return self.copy()
            raise ValueError("matrix already has Grassmann entries")
        return SuperMatrix(
            self.m, self.n, [[spec.scalar(x) for x in row] for row in self.rows]
        )

    def point_split(self):
        """Split a coefficient-level matrix into its two point classes.

        Class 0 is even Grassmann content on the diagonal blocks, class 1
        odd content on the off-diagonal blocks.  Returns
        ``(class0, class1, remainder_is_zero)``; content outside the two
        classes lies outside the algebra of points.
        """
        if not self.spec:
            raise ValueError("point_split requires Grassmann entries")
        c0 = SuperMatrix.zeros(self.m, self.n, self.spec)
        c1 = SuperMatrix.zeros(self.m, self.n, self.spec)
        clean = True
        for i in range(self.m + self.n):
            for j in range(self.m + self.n):
                p = self.pos_parity(i, j)
                e = self.rows[i][j]
                good = e.parity_part(p)
                if p == 0:
                    c0.rows[i][j] = good
                else:
                    c1.rows[i][j] = good
                if not e.parity_part(1 - p).is_zero():
                    clean = False
        return c0, c1, clean

    def is_point(self) -> bool:
        """True when the matrix is an even point: even content on
        diagonal blocks and odd content off them."""
        return self.point_split()[2]

    # -- inversion, exp, log ------------------------------------------

    def inverse(self) -> "SuperMatrix":
        if not self.spec:
            inv = linalg.inverse(self.rows)
            return SuperMatrix(self.m, self.n, inv)
        b = self.body()
        b_inv_g = SuperMatrix(self.m, self.n, linalg.inverse(b.rows)).embed(self.spec)
        # (B + S)^-1 = (1 + B^-1 S)^-1 B^-1 with B^-1 S nilpotent.
        ident = SuperMatrix.identity(self.m, self.n, self.spec)
        nil = b_inv_g * (self - b.embed(self.spec))
        acc = ident
        term = ident
        sign = 1
        for _ in range(self.spec.n_generators + 1):
            term = term * nil
            if term.is_zero():
                break
            sign = -sign
            acc = acc + term.scale(QI(sign))
        out = acc * b_inv_g
        assert (out * self) == ident
        return out


def supertranspose(x: SuperMatrix) -> SuperMatrix:
    """Blockwise ``(a, b; c, d) -> (a^t, c^t; -b^t, d^t)``."""
    size = x.m + x.n
    out = SuperMatrix.zeros(x.m, x.n, x.spec)
    for i in range(size):
        for j in range(size):
            e = x.rows[j][i]
            if i >= x.m and j < x.m:
                e = -e
            out.rows[i][j] = e
    return out


def supertrace(x: SuperMatrix):
    """``tr(a) - tr(d)``."""
    s = x._zero_entry()
    for i in range(x.m):
        s = s + x.rows[i][i]
    for i in range(x.m, x.m + x.n):
        s = s - x.rows[i][i]
    return s


def sbracket(x: SuperMatrix, y: SuperMatrix, px: int, py: int) -> SuperMatrix:
    """Scalar-level super commutator ``xy - (-1)^{px py} yx``."""
    xy = x * y
    yx = y * x
    if px and py:
        return xy + yx
    return xy - yx


def commutator(x: SuperMatrix, y: SuperMatrix) -> SuperMatrix:
    """Plain commutator; this is the bracket on even coefficient points."""
    return x * y - y * x


def _nilpotency_bound(x: SuperMatrix) -> int:
    size = x.m + x.n
    gens = x.spec.n_generators if x.spec else 0
    return (size + 1) * (gens + 1) + 1


def exp_nilpotent(x: SuperMatrix) -> SuperMatrix:
    """Exact exponential of a nilpotent matrix."""
    ident = SuperMatrix.identity(x.m, x.n, x.spec)
    acc = ident
    term = ident
    bound = _nilpotency_bound(x)
    for k in range(1, bound + 1):
        term = term * x
        if term.is_zero():
            return acc
        acc = acc + term.scale(QI(Fraction(1, factorial(k))))
    raise ValueError("matrix is not nilpotent")


def log_unipotent(u: SuperMatrix) -> SuperMatrix:
    """Exact logarithm of ``1 + N`` with ``N`` nilpotent."""
    ident = SuperMatrix.identity(u.m, u.n, u.spec)
    nil = u - ident
    acc = SuperMatrix.zeros(u.m, u.n, u.spec)
    term = ident
    bound = _nilpotency_bound(u)
    for k in range(1, bound + 1):
        term = term * nil
        if term.is_zero():
            return acc
        acc = acc + term.scale(QI(Fraction(1 if k % 2 else -1, k)))
    raise ValueError("matrix is not unipotent")
