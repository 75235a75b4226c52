"""Matrix Lie superalgebras over exact complex scalars.

Families: ``gl(m|n)``, ``sl(m|n)`` with ``m != n``, and the
orthosymplectic ``osp(m|2t)`` preserving the block Gram matrix
``diag(S, J)`` with ``S`` symmetric on the even part and ``J`` the
standard symplectic form on the odd part.
"""

from __future__ import annotations

from .scalars import GaussianRational as QI
from .supermatrix import SuperMatrix, supertrace, sbracket
from . import linalg


class LieSuperAlgebra:
    """A Lie superalgebra given by a scalar matrix basis.

    Basis elements are parity homogeneous.  Coordinates of arbitrary
    members are obtained by an exact precomputed solve.
    """

    def __init__(self, label: str, m: int, n: int, basis, parities, regular_diag=None):
        self.label = label
        self.m = m
        self.n = n
        self.basis = list(basis)
        self.parities = list(parities)
        self.regular_diag = regular_diag
        self.dim = len(self.basis)
        cols = [flatten(b) for b in self.basis]
        self._solver = linalg.Solver(linalg.transpose(cols))
        if self._solver.rank != self.dim:
            raise ValueError("basis is linearly dependent")
        self._killing_gram = None

    @property
    def size(self) -> int:
        return self.m + self.n

    def even_indices(self):
        return [i for i, p in enumerate(self.parities) if p == 0]

    def odd_indices(self):
        return [i for i, p in enumerate(self.parities) if p == 1]

    def coords(self, mat: SuperMatrix):
        """Coordinates of a scalar matrix in the basis, or None."""
        return self._solver.solve(flatten(mat))

    def contains(self, mat: SuperMatrix) -> bool:
        return self.coords(mat) is not None

    def from_coords(self, c) -> SuperMatrix:
        out = SuperMatrix.zeros(self.m, self.n)
        for x, b in zip(c, self.basis):
            if not x.is_zero():
                out = out + b.scale(x)
        return out

    def bracket(self, x: SuperMatrix, y: SuperMatrix) -> SuperMatrix:
        """Super commutator of two scalar members (split by parity)."""
        x0, x1 = self._parity_split(x)
        y0, y1 = self._parity_split(y)
        out = SuperMatrix.zeros(self.m, self.n)
        for xp, ppx in ((x0, 0), (x1, 1)):
            if xp.is_zero():
                continue
            for yp, ppy in ((y0, 0), (y1, 1)):
                if yp.is_zero():
                    continue
                out = out + sbracket(xp, yp, ppx, ppy)
        return out

    @staticmethod
    def _parity_split(x: SuperMatrix):
        return x.diag_part(), x.offdiag_part()

    def ad_matrix(self, x: SuperMatrix):
        """Matrix of ``ad x`` in the basis (columns are bracket images)."""
        cols = []
        for b in self.basis:
            c = self.coords(self.bracket(x, b))
            if c is None:
                raise ValueError("algebra is not closed under ad of the argument")
            cols.append(c)
        return linalg.transpose(cols)

    def killing_gram(self):
        """Gram matrix of the Killing form on the basis."""
        if self._killing_gram is None:
            ads = [self.ad_matrix(b) for b in self.basis]
            gram = []
            for i in range(self.dim):
                row = []
                for j in range(self.dim):
                    prod = linalg.mat_mul(ads[i], ads[j])
                    s = QI(0)
                    for k in range(self.dim):
                        sgn = -1 if self.parities[k] else 1
                        s = s + prod[k][k] * sgn
                    row.append(s)
                gram.append(row)
            self._killing_gram = gram
        return self._killing_gram


def flatten(mat: SuperMatrix):
    return [x for row in mat.rows for x in row]


def killing_form(g: LieSuperAlgebra, x: SuperMatrix, y: SuperMatrix) -> QI:
    """Supertrace of ``ad x . ad y``."""
    cx = g.coords(x)
    cy = g.coords(y)
    if cx is None or cy is None:
        raise ValueError("arguments must lie in the algebra")
    gram = g.killing_gram()
    s = QI(0)
    for i, a in enumerate(cx):
        if a.is_zero():
            continue
        for j, b in enumerate(cy):
            if not b.is_zero():
                s = s + a * gram[i][j] * b
    return s


def _elementary(m: int, n: int, i: int, j: int) -> SuperMatrix:
    out = SuperMatrix.zeros(m, n)
    out.rows[i][j] = QI(1)
    return out


def build_gl(m: int, n: int) -> LieSuperAlgebra:
    """The full matrix superalgebra ``gl(m|n)``."""
    basis = []
    parities = []
    size = m + n
    for i in range(size):
        for j in range(size):
            basis.append(_elementary(m, n, i, j))
            parities.append((i >= m) ^ (j >= m))
    rho = [QI(size - k) for k in range(size)]
    return LieSuperAlgebra(f"gl({m}|{n})", m, n, basis, parities, rho)


def build_sl(m: int, n: int) -> LieSuperAlgebra:
    """The supertraceless subalgebra ``sl(m|n)``; requires ``m != n``.

    For ``m == n`` the supertrace-zero matrices contain the identity and
    the quotient construction is out of scope, so the call is rejected.
    """
    if m == n:
        raise ValueError("sl(m|m) is not simple as a matrix algebra; rejected")
    basis = []
    parities = []
    size = m + n
    for i in range(size):
        for j in range(size):
            if i != j:
                basis.append(_elementary(m, n, i, j))
                parities.append((i >= m) ^ (j >= m))
    for i in range(size - 1):
        h = SuperMatrix.zeros(m, n)
        h.rows[i][i] = QI(1)
        sign = QI(-1) if ((i < m) == (i + 1 < m)) else QI(1)
        h.rows[i + 1][i + 1] = sign
        basis.append(h)
        parities.append(0)
    assert all(supertrace(b).is_zero() for b in basis)
    # Shift the regular element to have zero supertrace; only the entry
    # differences matter for root evaluation.
    raw = [QI(size - k) for k in range(size)]
    st = sum((x for x in raw[:m]), QI(0)) - sum((x for x in raw[m:]), QI(0))
    shift = st / (m - n)
    rho = [x - shift for x in raw]
    return LieSuperAlgebra(f"sl({m}|{n})", m, n, basis, parities, rho)


def osp_gram(m: int, t: int):
    """Gram blocks ``(S, J)`` of the preserved form on ``(m|2t)``.

    ``S`` is the identity for odd ``m`` and the antidiagonal for
    ``m == 2`` (which makes the diagonal a Cartan subalgebra); ``J`` is
    the standard symplectic matrix.
    """
    if m == 2:
        s = linalg.zeros(2, 2)
        s[0][1] = QI(1)
        s[1][0] = QI(1)
    else:
        s = linalg.identity(m)
    j = linalg.zeros(2 * t, 2 * t)
    for k in range(t):
        j[k][t + k] = QI(-1)
        j[t + k][k] = QI(1)
    return s, j


def build_osp(m: int, t: int) -> LieSuperAlgebra:
    """The orthosymplectic algebra ``osp(m|2t)``."""
    if m not in (1, 2) and m % 2 == 0:
        raise ValueError("only m odd or m == 2 are supported")
    n = 2 * t
    size = m + n
    s, j = osp_gram(m, t)
    gram = linalg.zeros(size, size)
    for i in range(m):
        for k in range(m):
            gram[i][k] = s[i][k]
    for i in range(n):
        for k in range(n):
            gram[m + i][m + k] = j[i][k]

    def slot_parity(i):
        return 0 if i < m else 1

    basis = []
    parities = []
    for par in (0, 1):
        positions = [
            (p, q)
            for p in range(size)
            for q in range(size)
            if (slot_parity(p) ^ slot_parity(q)) == par
        ]
        pos_index = {pq: k for k, pq in enumerate(positions)}
        rows = []
        # Invariance of the form: B(Xu, v) + (-1)^{|X||u|} B(u, Xv) = 0
        # on basis vectors u = e_i, v = e_j.
        for i in range(size):
            for k_j in range(size):
                row = [QI(0)] * len(positions)
                for k in range(size):
                    if (k, i) in pos_index and not gram[k][k_j].is_zero():
                        row[pos_index[(k, i)]] = row[pos_index[(k, i)]] + gram[k][k_j]
                    if (k, k_j) in pos_index and not gram[i][k].is_zero():
                        sgn = -1 if (par and slot_parity(i)) else 1
                        row[pos_index[(k, k_j)]] = row[pos_index[(k, k_j)]] + gram[i][k] * sgn
                rows.append(row)
        for v in linalg.nullspace(rows):
            mat = SuperMatrix.zeros(m, n)
            for k, (p, q) in enumerate(positions):
                mat.rows[p][q] = v[k]
            basis.append(mat)
            parities.append(par)

    if m == 2:
        rho = [QI(t + 1), QI(-(t + 1))]
    else:
        rho = [QI(0)] * m
    rho += [QI(t - k) for k in range(t)] + [QI(-(t - k)) for k in range(t)]
    g = LieSuperAlgebra(f"osp({m}|{2 * t})", m, n, basis, parities, rho)
    return g


class RootSpace:
    """One root: its functional on the Cartan, parity and matrix basis."""

    __slots__ = ("functional", "positions", "basis", "parity", "height")

    def __init__(self, functional, positions, basis, parity, height):
        self.functional = functional
        self.positions = positions
        self.basis = basis
        self.parity = parity
        self.height = height  # value on the fixed regular element

    def is_positive(self) -> bool:
        return self.height.re > 0


class RootDecomposition:
    """Cartan subalgebra (diagonal), roots, positives and simples."""

    def __init__(self, g: LieSuperAlgebra):
        self.g = g
        size = g.size
        # Cartan: members of g that are diagonal.
        rows = []
        for i in range(size):
            for j in range(size):
                if i != j:
                    rows.append([b.rows[i][j] for b in g.basis])
        self.cartan = [g.from_coords(v) for v in linalg.nullspace(rows)]
        if not self.cartan:
            raise ValueError("no diagonal Cartan subalgebra")
        rho = SuperMatrix.zeros(g.m, g.n)
        for i in range(size):
            rho.rows[i][i] = g.regular_diag[i]
        if not g.contains(rho):
            raise ValueError("regular diagonal element does not lie in the algebra")
        self.rho = rho

        # Group off-diagonal positions by their root functional.
        groups: dict = {}
        for i in range(size):
            for j in range(size):
                if i == j:
                    continue
                f = tuple(
                    (h.rows[i][i] - h.rows[j][j]).to_pair() for h in self.cartan
                )
                groups.setdefault(f, []).append((i, j))
        self.roots: list[RootSpace] = []
        zero_f = tuple((QI(0)).to_pair() for _ in self.cartan)
        for f, positions in groups.items():
            pos_set = set(positions)
            rows = []
            for i in range(size):
                for j in range(size):
                    if i != j and (i, j) not in pos_set:
                        rows.append([b.rows[i][j] for b in g.basis])
            # Also exclude the diagonal to separate from the Cartan.
            for i in range(size):
                rows.append([b.rows[i][i] for b in g.basis])
            space = [g.from_coords(v) for v in linalg.nullspace(rows)]
            if not space:
                continue
            if f == zero_f:
                raise ValueError("nonzero off-diagonal content with zero functional")
            pars = set()
            for mat in space:
                p = mat.parity()
                pars.add(p)
            if len(pars) != 1 or None in pars:
                raise ValueError("root space is not parity homogeneous")
            i0, j0 = positions[0]
            height = self.rho.rows[i0][i0] - self.rho.rows[j0][j0]
            for i, j in positions[1:]:
                if self.rho.rows[i][i] - self.rho.rows[j][j] != height:
                    raise ValueError("regular element not constant on a root")
            if height.is_zero():
                raise ValueError("regular element vanishes on a root")
            self.roots.append(RootSpace(f, positions, space, pars.pop(), height))

        total = len(self.cartan) + sum(len(r.basis) for r in self.roots)
        if total != g.dim:
            raise ValueError("root decomposition does not fill the algebra")

        self.positive = [r for r in self.roots if r.is_positive()]
        pos_funcs = {r.functional for r in self.positive}
        self.simple = []
        for r in self.positive:
            if not _is_sum_of_two(r.functional, pos_funcs):
                self.simple.append(r)
        self.simple.sort(key=lambda r: min(r.positions))
        self._by_functional = {r.functional: r for r in self.roots}

    def opposite(self, r: RootSpace) -> RootSpace:
        neg = tuple((-QI.from_pair(*p)).to_pair() for p in r.functional)
        return self._by_functional[neg]

    def verify_weights(self) -> bool:
        """Check ``[h, x] = alpha(h) x`` on every root space."""
        for r in self.roots:
            i0, j0 = r.positions[0]
            for h in self.cartan:
                val = h.rows[i0][i0] - h.rows[j0][j0]
                for x in r.basis:
                    if not (self.g.bracket(h, x) - x.scale(val)).is_zero():
                        return False
        return True


def _is_sum_of_two(f, pos_funcs) -> bool:
    target = [QI.from_pair(*p) for p in f]
    funcs = [[QI.from_pair(*p) for p in g] for g in pos_funcs]
    raw = list(pos_funcs)
    for a_idx, a in enumerate(funcs):
        rem = [x - y for x, y in zip(target, a)]
        key = tuple(x.to_pair() for x in rem)
        if key in pos_funcs and not all(x.is_zero() for x in rem):
            return True
    return False


def root_decomposition(g: LieSuperAlgebra) -> RootDecomposition:
    return RootDecomposition(g)


class ChevalleyGenerators:
    """Simple-root raising/lowering pairs and their coroots."""

    __slots__ = ("g", "x_plus", "x_minus", "h", "odd_set", "cartan")

    def __init__(self, g, x_plus, x_minus, h, odd_set, cartan):
        self.g = g
        self.x_plus = x_plus
        self.x_minus = x_minus
        self.h = h
        self.odd_set = odd_set
        self.cartan = cartan


def _normalize_first_entry(mat: SuperMatrix) -> SuperMatrix:
    for row in mat.rows:
        for x in row:
            if not x.is_zero():
                return mat.scale(x.inverse())
    raise ValueError("zero root vector")


def chevalley_generators(g: LieSuperAlgebra, rd: RootDecomposition | None = None) -> ChevalleyGenerators:
    """Generators from the simple roots, normalized exactly.

    Each raising/lowering vector is scaled so its first nonzero entry is
    one; the coroot is their bracket.
    """
    if rd is None:
        rd = root_decomposition(g)
    xp, xm, hh = [], [], []
    odd = set()
    for k, r in enumerate(rd.simple):
        if len(r.basis) != 1:
            raise ValueError("simple root space is not one dimensional")
        neg = rd.opposite(r)
        if len(neg.basis) != 1:
            raise ValueError("negative simple root space is not one dimensional")
        plus = _normalize_first_entry(r.basis[0])
        minus = _normalize_first_entry(neg.basis[0])
        xp.append(plus)
        xm.append(minus)
        hh.append(g.bracket(plus, minus))
        if r.parity == 1:
            odd.add(k)
    return ChevalleyGenerators(g, xp, xm, hh, odd, rd.cartan)


def generated_span(g: LieSuperAlgebra, seeds) -> list:
    """Coordinates of the subalgebra generated by the seed matrices.

    Returns an independent spanning list (as coordinate vectors) of the
    closure of the seeds under the bracket.
    """
    vecs = []

    def reduce_add(c):
        # Incremental echelon insert; returns True if independent.
        c = c[:]
        for pivot_col, v in vecs:
            if not c[pivot_col].is_zero():
                f = c[pivot_col]
                c = [x - f * y for x, y in zip(c, v)]
        for k, x in enumerate(c):
            if not x.is_zero():
                inv = x.inverse()
                vecs.append((k, [y * inv for y in c]))
                return True
        return False

    mats = []
    for s in seeds:
        c = g.coords(s)
        if c is None:
            raise ValueError("seed outside the algebra")
        if reduce_add(c):
            mats.append(s)
    frontier = list(mats)
    while frontier and len(vecs) < g.dim:
        new = []
        for x in list(mats):
            for y in frontier:
                br = g.bracket(x, y)
                c = g.coords(br)
                if c is None:
                    raise ValueError("bracket left the algebra")
                if reduce_add(c):
                    mats.append(br)
                    new.append(br)
        frontier = new
    return [v for _, v in vecs]


def grassmann_coords(g: LieSuperAlgebra, mat: SuperMatrix):
    """Coordinates of a coefficient-level matrix in the basis of ``g``,
    solved exactly one monomial layer at a time."""
    spec = mat.spec
    if spec is None:
        raise ValueError("expected Grassmann entries")
    coords = [spec.zero() for _ in range(g.dim)]
    from .grassmann import GrassmannElement

    for mono in spec.monomials():
        flat = [e.terms.get(mono, QI(0)) for row in mat.rows for e in row]
        if all(x.is_zero() for x in flat):
            continue
        c = g._solver.solve(flat)
        if c is None:
            raise ValueError("matrix outside the coefficient points of the algebra")
        for i, x in enumerate(c):
            if not x.is_zero():
                coords[i] = coords[i] + GrassmannElement(spec, {mono: x})
    return coords


def matrix_from_grassmann_coords(g: LieSuperAlgebra, coords) -> SuperMatrix:
    spec = coords[0].spec
    out = SuperMatrix.zeros(g.m, g.n, spec)
    size = g.size
    for c, b in zip(coords, g.basis):
        if c.is_zero():
            continue
        for i in range(size):
            for j in range(size):
                e = b.rows[i][j]
                if not e.is_zero():
                    out.rows[i][j] = out.rows[i][j] + c * e
    return out


def inner_automorphism(g: LieSuperAlgebra, u: SuperMatrix):
    """Matrix (in the basis of ``g``) of conjugation ``x -> u x u^-1``."""
    u_inv = u.inverse()
    cols = []
    for b in g.basis:
        img = u * b * u_inv
        c = g.coords(img)
        if c is None:
            raise ValueError("conjugation does not preserve the algebra")
        cols.append(c)
    return linalg.transpose(cols)
