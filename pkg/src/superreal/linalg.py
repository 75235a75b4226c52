"""Exact linear algebra over the Gaussian rationals.

Matrices are lists of rows of :class:`GaussianRational`.  Rational
problems embed as Gaussian-rational ones with zero imaginary parts.
"""

from __future__ import annotations

from .scalars import GaussianRational as QI


def zeros(r: int, c: int) -> list[list[QI]]:
    return [[QI(0) for _ in range(c)] for _ in range(r)]


def identity(n: int) -> list[list[QI]]:
    m = zeros(n, n)
    for i in range(n):
        m[i][i] = QI(1)
    return m


def mat_copy(a):
    return [row[:] for row in a]


def mat_add(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]

def mat_sub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_neg(a):
    return [[-x for x in row] for row in a]


def mat_scale(a, c: QI):
    return [[x * c for x in row] for row in a]


def mat_mul(a, b):
    rb = len(b)
    cb = len(b[0]) if rb else 0
    out = zeros(len(a), cb)
    for i, row in enumerate(a):
        orow = out[i]
        for k, x in enumerate(row):
            if x.is_zero():
                continue
            brow = b[k]
            for j in range(cb):
                y = brow[j]
                if not y.is_zero():
                    orow[j] = orow[j] + x * y
    return out


def mat_vec(a, v):
    out = []
    for row in a:
        s = QI(0)
        for x, y in zip(row, v):
            if not x.is_zero() and not y.is_zero():
                s = s + x * y
        out.append(s)
    return out


def transpose(a):
    return [list(col) for col in zip(*a)] if a else []


def conj(a):
    return [[x.conjugate() for x in row] for row in a]


def mat_eq(a, b) -> bool:
    if len(a) != len(b):
        return False
    return all(
        len(ra) == len(rb) and all(x == y for x, y in zip(ra, rb))
        for ra, rb in zip(a, b)
    )


def is_zero_matrix(a) -> bool:
    return all(x.is_zero() for row in a for x in row)


def rref(a) -> tuple[list[list[QI]], list[tuple[int, int]]]:
    """Reduced row echelon form and the list of ``(row, col)`` pivots."""
    m = mat_copy(a)
    rows = len(m)
    cols = len(m[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(cols):
        piv = None
        for i in range(r, rows):
            if not m[i][c].is_zero():
                piv = i
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = m[r][c].inverse()
        m[r] = [x * inv for x in m[r]]
        for i in range(rows):
            if i != r and not m[i][c].is_zero():
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append((r, c))
        r += 1
        if r == rows:
            break
    return m, pivots


def rank(a) -> int:
    return len(rref(a)[1])


def nullspace(a) -> list[list[QI]]:
    """Basis vectors of the right nullspace."""
    rows = len(a)
    cols = len(a[0]) if rows else 0
    if rows == 0:
        return [ [QI(1) if i == j else QI(0) for i in range(cols)] for j in range(cols) ]
    r, pivots = rref(a)
    pivot_cols = {c: i for i, c in pivots}
    free = [c for c in range(cols) if c not in pivot_cols]
    basis = []
    for f in free:
        v = [QI(0)] * cols
        v[f] = QI(1)
        for c, i in pivot_cols.items():
            v[c] = -r[i][f]
        basis.append(v)
    return basis


def solve(a, b):
    """One solution of ``a x = b`` (free variables zero), or None."""
    rows = len(a)
    cols = len(a[0]) if rows else 0
    aug = [a[i][:] + [b[i]] for i in range(rows)]
    r, pivots = rref(aug)
    x = [QI(0)] * cols
    for i, c in pivots:
        if c == cols:
            return None
        x[c] = r[i][cols]
    return x


def det(a) -> QI:
    m = mat_copy(a)
    n = len(m)
    d = QI(1)
    for c in range(n):
        piv = None
        for i in range(c, n):
            if not m[i][c].is_zero():
                piv = i
                break
        if piv is None:
            return QI(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            d = -d
        d = d * m[c][c]
        inv = m[c][c].inverse()
        for i in range(c + 1, n):
            if not m[i][c].is_zero():
                f = m[i][c] * inv
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return d


def inverse(a):
    n = len(a)
    aug = [a[i][:] + identity(n)[i] for i in range(n)]
    r, pivots = rref(aug)
    if len(pivots) != n or any(c != i for i, (ri, c) in enumerate(pivots)):
        raise ValueError("matrix is singular")
    return [row[n:] for row in r]


class Solver:
    """Precomputed elimination for repeated solves against a fixed matrix."""

    def __init__(self, a):
        self.rows = len(a)
        self.cols = len(a[0]) if self.rows else 0
        aug = [a[i][:] + identity(self.rows)[i] for i in range(self.rows)]
        r, pivots = rref(aug)
        # Pivots in the identity block would mean a zero row of `a`
        # followed by elimination bookkeeping; keep only pivots of `a`.
        self.red = [row[: self.cols] for row in r]
        self.ops = [row[self.cols :] for row in r]
        self.pivots = [(i, c) for i, c in pivots if c < self.cols]
        self.rank = len(self.pivots)

    def solve(self, b):
        """One solution of ``a x = b`` (free variables zero), or None."""
        y = mat_vec(self.ops, b)
        pivot_rows = {i for i, _ in self.pivots}
        for i in range(self.rows):
            if i not in pivot_rows and not y[i].is_zero():
                return None
        x = [QI(0)] * self.cols
        for i, c in self.pivots:
            x[c] = y[i]
        # With free columns present the canonical solution above is only
        # valid if the residual vanishes; check exactly.
        if self.rank < self.cols:
            for i, c in self.pivots:
                s = QI(0)
                row = self.red[i]
                for j in range(self.cols):
                    if not row[j].is_zero() and not x[j].is_zero():
                        s = s + row[j] * x[j]
                if s != y[i]:
                    return None
        return x

    def in_span(self, b) -> bool:
        return self.solve(b) is not None


def column_solver(columns: list[list[QI]]) -> Solver:
    """Solver whose unknowns are coordinates in the given column vectors."""
    return Solver(transpose(columns))


def principal_minors(a) -> list[QI]:
    """Leading principal minors of a square matrix."""
    return [det([row[: k + 1] for row in a[: k + 1]]) for k in range(len(a))]


def symmetric_inertia(a) -> tuple[int, int, int]:
    """Inertia ``(positive, negative, zero)`` of a real symmetric matrix.

    Uses exact congruence elimination; off-diagonal pivots are folded onto
    the diagonal by a row/column addition first.
    """
    n = len(a)
    for row in a:
        for x in row:
            if not x.is_real():
                raise ValueError("inertia requires a real matrix")
    m = mat_copy(a)
    pos = neg = zero = 0
    idx = list(range(n))

    def sym_entry(i, j):
        return m[i][j]

    remaining = idx[:]
    while remaining:
        # Find a usable pivot among the remaining indices.
        p = None
        for i in remaining:
            if not m[i][i].is_zero():
                p = i
                break
        if p is None:
            # All remaining diagonal entries vanish; find an off-diagonal
            # coupling and fold it in, or conclude the block is zero.
            found = None
            for ii, i in enumerate(remaining):
                for j in remaining[ii + 1 :]:
                    if not m[i][j].is_zero():
                        found = (i, j)
                        break
                if found:
                    break
            if found is None:
                zero += len(remaining)
                break
            i, j = found
            for k in range(n):
                m[i][k] = m[i][k] + m[j][k]
            for k in range(n):
                m[k][i] = m[k][i] + m[k][j]
            p = i
        d = m[p][p]
        if d.re > 0:
            pos += 1
        else:
            neg += 1
        remaining.remove(p)
        inv = d.inverse()
        for i in remaining:
            if m[i][p].is_zero():
                continue
            f = m[i][p] * inv
            for k in range(n):
                m[i][k] = m[i][k] - f * m[p][k]
            for k in range(n):
                m[k][i] = m[k][i] - f.conjugate() * m[k][p]
    return pos, neg, zero
