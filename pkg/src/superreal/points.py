"""Points of super vector spaces over Grassmann coefficients, and the
vector-level antilinear structures acting on them.

A point of a ``(p|q)``-dimensional space ``V`` over a coefficient algebra
``A`` is a coordinate vector whose even slots carry even coefficients and
whose odd slots carry odd coefficients.  An antilinear structure ``phi``
on ``V`` extends to points by ``a (x) v  ->  tilde(a) (x) phi(v)``.
"""

from __future__ import annotations

from .scalars import GaussianRational as QI
from .grassmann import GrassmannAlgebraSpec, GrassmannElement
from . import linalg


class VectorRealStructure:
    """An antilinear map ``v -> M conj(v)`` on a ``(p|q)`` space.

    ``kind`` is ``"standard"`` (squares to the identity) or ``"graded"``
    (squares to the identity on the even part and to minus the identity
    on the odd part).  The matrix must preserve parity.
    """

    __slots__ = ("p", "q", "matrix", "kind")

    def __init__(self, p: int, q: int, matrix, kind: str):
        if kind not in ("standard", "graded"):
            raise ValueError("kind must be standard or graded")
        n = p + q
        if len(matrix) != n or any(len(r) != n for r in matrix):
            raise ValueError("matrix shape mismatch")
        self.p = p
        self.q = q
        self.matrix = [row[:] for row in matrix]
        self.kind = kind

    def slot_parity(self, i: int) -> int:
        return 0 if i < self.p else 1

    def apply_scalar(self, v):
        """Image of a scalar coordinate vector."""
        return linalg.mat_vec(self.matrix, [x.conjugate() for x in v])

    def preserves_parity(self) -> bool:
        n = self.p + self.q
        return all(
            self.matrix[i][j].is_zero()
            for i in range(n)
            for j in range(n)
            if self.slot_parity(i) != self.slot_parity(j)
        )

    def square_matrix(self):
        """Matrix of the composite map applied twice: ``M conj(M)``."""
        return linalg.mat_mul(self.matrix, linalg.conj(self.matrix))

    def satisfies_square_law(self) -> bool:
        sq = self.square_matrix()
        n = self.p + self.q
        want = linalg.identity(n)
        if self.kind == "graded":
            for i in range(self.p, n):
                want[i][i] = QI(-1)
        return linalg.mat_eq(sq, want)


def phi_standard(p: int, q: int) -> VectorRealStructure:
    """Entrywise conjugation on a ``(p|q)`` space."""
    return VectorRealStructure(p, q, linalg.identity(p + q), "standard")


def phi_graded(p: int, t: int) -> VectorRealStructure:
    """The graded structure on a ``(p|2t)`` space.

    Odd coordinates split in halves ``(z_+, z_-)``; the map sends
    ``(x, z_+, z_-)`` to ``(conj x, conj z_-, -conj z_+)``.
    """
    n = p + 2 * t
    m = linalg.zeros(n, n)
    for i in range(p):
        m[i][i] = QI(1)
    for k in range(t):
        m[p + k][p + t + k] = QI(1)
        m[p + t + k][p + k] = QI(-1)
    return VectorRealStructure(p, 2 * t, m, "graded")


class APoint:
    """A point of a ``(p|q)`` space over a Grassmann algebra.

    Coordinates are Grassmann elements; slot ``i`` must carry content of
    the slot's parity (this is checked).
    """

    __slots__ = ("p", "q", "spec", "coords")

    def __init__(self, p: int, q: int, coords, check: bool = True):
        if len(coords) != p + q:
            raise ValueError("coordinate count mismatch")
        spec = None
        for c in coords:
            if not isinstance(c, GrassmannElement):
                raise TypeError("coordinates must be Grassmann elements")
            if spec is None:
                spec = c.spec
            elif spec != c.spec:
                raise ValueError("mixed Grassmann algebras")
        self.p = p
        self.q = q
        self.spec = spec
        self.coords = list(coords)
        if check:
            for i, c in enumerate(coords):
                bad = c.parity_part(1 - (0 if i < p else 1))
                if not bad.is_zero():
                    raise ValueError(f"slot {i} carries wrong-parity content")

    def __eq__(self, other):
        if not isinstance(other, APoint):
            return NotImplemented
        return (
            self.p == other.p
            and self.q == other.q
            and all(a == b for a, b in zip(self.coords, other.coords))
        )

    def __add__(self, other):
        return APoint(self.p, self.q, [a + b for a, b in zip(self.coords, other.coords)])

    def __sub__(self, other):
        return APoint(self.p, self.q, [a - b for a, b in zip(self.coords, other.coords)])

    def scale(self, c) -> "APoint":
        """Multiply by an even coefficient."""
        return APoint(self.p, self.q, [c * x for x in self.coords], check=False)

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coords)

    def __repr__(self):
        return f"APoint({self.p}|{self.q}, {self.coords!r})"


def apply_real_structure(phi: VectorRealStructure, point: APoint) -> APoint:
    """Extension of ``phi`` to points: ``a (x) v -> tilde(a) (x) phi(v)``."""
    if point.spec.kind != phi.kind:
        raise ValueError("coefficient algebra kind does not match the structure")
    n = phi.p + phi.q
    tcoords = [c.tilde() for c in point.coords]
    out = []
    for i in range(n):
        s = point.spec.zero()
        for j in range(n):
            e = phi.matrix[i][j]
            if not e.is_zero() and not tcoords[j].is_zero():
                s = s + tcoords[j] * e
        out.append(s)
    return APoint(phi.p, phi.q, out)


def _slots(spec: GrassmannAlgebraSpec, p: int, q: int):
    """Parity-matched (monomial, coordinate-slot) pairs, in fixed order."""
    slots = []
    for i in range(p + q):
        par = 0 if i < p else 1
        for mono in spec.monomials():
            if len(mono) % 2 == par:
                slots.append((mono, i))
    return slots


def point_to_real_vector(point: APoint, slots) -> list[QI]:
    """Flatten a point into real coordinates (re, im per slot)."""
    out = []
    for mono, i in slots:
        c = point.coords[i].terms.get(mono, QI(0))
        out.append(QI(c.re))
        out.append(QI(c.im))
    return out


def real_vector_to_point(vec, slots, spec: GrassmannAlgebraSpec, p: int, q: int) -> APoint:
    coords = [spec.zero() for _ in range(p + q)]
    for k, (mono, i) in enumerate(slots):
        re = vec[2 * k].re
        im = vec[2 * k + 1].re
        if re == 0 and im == 0:
            continue
        coords[i] = coords[i] + GrassmannElement(spec, {mono: QI(re, im)})
    return APoint(p, q, coords)


def fixed_points_basis(
    phi: VectorRealStructure, spec: GrassmannAlgebraSpec
) -> list[APoint]:
    """A real basis of the points fixed by the extension of ``phi``.

    The fixed set is a real subspace of the points; the basis is found by
    an exact rational nullspace computation on the realified coordinates.
    """
    if spec.kind != phi.kind:
        raise ValueError("coefficient algebra kind does not match the structure")
    p, q = phi.p, phi.q
    slots = _slots(spec, p, q)
    dim = 2 * len(slots)
    # Columns: image minus identity on each real basis direction.
    cols = []
    for k in range(len(slots)):
        mono, i = slots[k]
        for part in (QI(1), QI(0, 1)):
            coords = [spec.zero() for _ in range(p + q)]
            coords[i] = GrassmannElement(spec, {mono: part})
            pt = APoint(p, q, coords)
            img = apply_real_structure(phi, pt)
            col = point_to_real_vector(img - pt, slots)
            cols.append(col)
    matrix = linalg.transpose(cols)
    basis = []
    for v in linalg.nullspace(matrix):
        basis.append(real_vector_to_point(v, slots, spec, p, q))
    return basis
