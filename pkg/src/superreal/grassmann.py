"""Finite Grassmann coefficient algebras over Gaussian rationals.

A :class:`GrassmannAlgebraSpec` fixes ``pairs`` anticommuting generator
pairs ``xi_k^+, xi_k^-`` (flat index ``2k`` for ``xi_{k+1}^+`` and
``2k+1`` for ``xi_{k+1}^-``) and a conjugation kind:

* ``"plain"``: no conjugation,
* ``"standard"``: antilinear with ``xi^+ <-> xi^-``,
* ``"graded"``: antilinear with ``xi^+ -> +xi^-``, ``xi^- -> -xi^+``.

Elements are kept in canonical form: a map from strictly increasing
generator index tuples to nonzero Gaussian-rational coefficients.
"""

from __future__ import annotations

import itertools

from .scalars import GaussianRational as QI

_KINDS = ("plain", "standard", "graded")


def _sort_with_sign(word: list[int]) -> tuple[int, tuple[int, ...] | None]:
    """Sort a generator word, tracking the anticommutation sign.

    Returns ``(sign, tuple)`` or ``(0, None)`` if a generator repeats.
    """
    w = list(word)
    sign = 1
    for i in range(1, len(w)):
        j = i
        while j > 0 and w[j - 1] > w[j]:
            w[j - 1], w[j] = w[j], w[j - 1]
            sign = -sign
            j -= 1
        if j > 0 and w[j - 1] == w[j]:
            return 0, None
    return sign, tuple(w)


class GrassmannAlgebraSpec:
    """Shape and conjugation kind of a finite Grassmann algebra."""

    __slots__ = ("pairs", "kind", "n_generators", "_monomials")

    def __init__(self, pairs: int, kind: str = "plain"):
        if pairs < 0:
            raise ValueError("pairs must be >= 0")
        if kind not in _KINDS:
            raise ValueError(f"kind must be one of {_KINDS}")
        self.pairs = pairs
        self.kind = kind
        self.n_generators = 2 * pairs
        self._monomials = None

    def __eq__(self, other):
        return (
            isinstance(other, GrassmannAlgebraSpec)
            and self.pairs == other.pairs
            and self.kind == other.kind
        )

    def __hash__(self):
        return hash((self.pairs, self.kind))

    def __repr__(self):
        return f"GrassmannAlgebraSpec(pairs={self.pairs}, kind={self.kind!r})"

    def monomials(self) -> list[tuple[int, ...]]:
        """All monomial index tuples, ordered by degree then lexicographically."""
        if self._monomials is None:
            out = []
            for r in range(self.n_generators + 1):
                out.extend(itertools.combinations(range(self.n_generators), r))
            self._monomials = out
        return self._monomials

    def zero(self) -> "GrassmannElement":
        return GrassmannElement(self, {})

    def one(self) -> "GrassmannElement":
        return self.scalar(QI(1))

    def scalar(self, c) -> "GrassmannElement":
        c = QI.coerce(c)
        if c.is_zero():
            return self.zero()
        return GrassmannElement(self, {(): c})

    def generator(self, i: int) -> "GrassmannElement":
        if not 0 <= i < self.n_generators:
            raise ValueError(f"generator index {i} out of range")
        return GrassmannElement(self, {(i,): QI(1)})

    def xi_plus(self, k: int) -> "GrassmannElement":
        """Generator ``xi_{k+1}^+`` (zero-based pair index)."""
        return self.generator(2 * k)

    def xi_minus(self, k: int) -> "GrassmannElement":
        """Generator ``xi_{k+1}^-`` (zero-based pair index)."""
        return self.generator(2 * k + 1)

    def monomial(self, idx, coeff=1) -> "GrassmannElement":
        sign, key = _sort_with_sign(list(idx))
        if sign == 0:
            return self.zero()
        c = QI.coerce(coeff) * sign
        if c.is_zero():
            return self.zero()
        return GrassmannElement(self, {key: c})


class GrassmannElement:
    """An element of a finite Grassmann algebra, in canonical form."""

    __slots__ = ("spec", "terms")

    def __init__(self, spec: GrassmannAlgebraSpec, terms: dict):
        self.spec = spec
        self.terms = {k: v for k, v in terms.items() if not v.is_zero()}

    def _check(self, other):
        if self.spec != other.spec:
            raise ValueError("Grassmann algebra mismatch")

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, GrassmannElement):
            return NotImplemented
        return self.spec == other.spec and self.terms == other.terms

    def __hash__(self):
        return hash((self.spec, tuple(sorted(self.terms.items(), key=lambda kv: kv[0]))))

    def __add__(self, other):
        if not isinstance(other, GrassmannElement):
            return NotImplemented
        self._check(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, QI(0)) + v
        return GrassmannElement(self.spec, out)

    def __sub__(self, other):
        if not isinstance(other, GrassmannElement):
            return NotImplemented
        self._check(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, QI(0)) - v
        return GrassmannElement(self.spec, out)

    def __neg__(self):
        return GrassmannElement(self.spec, {k: -v for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, QI)):
            c = QI.coerce(other)
            return GrassmannElement(self.spec, {k: v * c for k, v in self.terms.items()})
        if not isinstance(other, GrassmannElement):
            return NotImplemented
        return gr_mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, QI)):
            return self.__mul__(other)
        return NotImplemented

    def scalar_part(self) -> QI:
        """The coefficient of the empty monomial."""
        return self.terms.get((), QI(0))

    body = scalar_part

    def soul(self) -> "GrassmannElement":
        """The element minus its scalar part."""
        return GrassmannElement(
            self.spec, {k: v for k, v in self.terms.items() if k}
        )

    def parity_part(self, p: int) -> "GrassmannElement":
        """Content whose monomial degree is congruent to ``p`` mod 2."""
        return GrassmannElement(
            self.spec, {k: v for k, v in self.terms.items() if len(k) % 2 == p % 2}
        )

    def even_part(self) -> "GrassmannElement":
        return self.parity_part(0)

    def odd_part(self) -> "GrassmannElement":
        return self.parity_part(1)

    def parity(self):
        """0 or 1 for homogeneous nonzero elements, None otherwise."""
        ps = {len(k) % 2 for k in self.terms}
        if len(ps) == 1:
            return ps.pop()
        return None

    def coefficient(self, idx) -> QI:
        sign, key = _sort_with_sign(list(idx))
        if sign == 0:
            raise ValueError("repeated generator in monomial")
        return self.terms.get(key, QI(0)) * sign

    def conjugate_scalars(self) -> "GrassmannElement":
        """Conjugate every coefficient, fixing the generators."""
        return GrassmannElement(
            self.spec, {k: v.conjugate() for k, v in self.terms.items()}
        )

    def tilde(self) -> "GrassmannElement":
        return gr_conjugate(self)

    def tilde_inverse(self) -> "GrassmannElement":
        """Inverse of the conjugation; differs from it only on graded odd content."""
        if self.spec.kind == "graded":
            x = self.even_part().tilde() - self.odd_part().tilde()
            return x
        return gr_conjugate(self)

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for k in sorted(self.terms, key=lambda t: (len(t), t)):
            mono = "*".join(f"g{i}" for i in k) or "1"
            bits.append(f"({self.terms[k]!r})*{mono}")
        return " + ".join(bits)


def gr_mul(x: GrassmannElement, y: GrassmannElement) -> GrassmannElement:
    """Product in the Grassmann algebra."""
    x._check(y)
    out: dict = {}
    for kx, vx in x.terms.items():
        for ky, vy in y.terms.items():
            sign, key = _sort_with_sign(list(kx) + list(ky))
            if sign == 0:
                continue
            c = vx * vy * sign
            if key in out:
                out[key] = out[key] + c
            else:
                out[key] = c
    return GrassmannElement(x.spec, out)


def _conjugate_monomial(spec: GrassmannAlgebraSpec, idx) -> tuple[int, tuple[int, ...]]:
    """Image of a monomial under the conjugation, as ``(sign, sorted tuple)``.

    Generator images are applied in place (left to right) and the word is
    re-sorted; this makes the conjugation multiplicative without an extra
    reversal sign.
    """
    sign = 1
    imgs = []
    for g in idx:
        pair, pm = divmod(g, 2)
        if pm == 0:
            imgs.append(2 * pair + 1)
        else:
            imgs.append(2 * pair)
            if spec.kind == "graded":
                sign = -sign
    s2, key = _sort_with_sign(imgs)
    return sign * s2, key


def gr_conjugate(x: GrassmannElement) -> GrassmannElement:
    """The conjugation of the algebra: antilinear, multiplicative.

    Standard kind squares to the identity; graded kind squares to the
    identity on even content and to minus the identity on odd content.
    """
    spec = x.spec
    if spec.kind == "plain":
        raise ValueError("plain Grassmann algebra has no conjugation")
    out: dict = {}
    for k, v in x.terms.items():
        sign, key = _conjugate_monomial(spec, k)
        c = v.conjugate() * sign
        if key in out:
            out[key] = out[key] + c
        else:
            out[key] = c
    return GrassmannElement(spec, out)


def gr_real_part_basis(spec: GrassmannAlgebraSpec) -> list[GrassmannElement]:
    """A rational basis of the real points of a standard-kind algebra.

    The fixed set of the standard conjugation is a real form whose real
    dimension equals the number of monomials.  The basis is built from
    monomial orbits: a monomial ``m`` with image ``s*m'`` contributes
    ``m`` or ``i*m`` when ``m' == m``, and the pair ``m + s*m'``,
    ``i*(m - s*m')`` when ``m' != m``.
    """
    if spec.kind != "standard":
        raise ValueError("real part basis requires the standard kind")
    from .scalars import I

    seen = set()
    basis = []
    for mono in spec.monomials():
        if mono in seen:
            continue
        seen.add(mono)
        sign, img = _conjugate_monomial(spec, mono)
        x = GrassmannElement(spec, {mono: QI(1)})
        if img == mono:
            if sign == 1:
                basis.append(x)
            else:
                basis.append(x * I)
        else:
            seen.add(img)
            y = GrassmannElement(spec, {img: QI(sign)})
            basis.append(x + y)
            basis.append((x - y) * I)
    return basis


def gr_nilpotency_index(x: GrassmannElement) -> int:
    """Least ``k`` with ``x**(k+1) == 0``, for ``x`` with zero scalar part."""
    if not x.scalar_part().is_zero():
        raise ValueError("nilpotency index requires zero scalar part")
    if x.is_zero():
        return 0
    k = 1
    p = x
    bound = x.spec.n_generators + 1
    while True:
        p = gr_mul(p, x)
        if p.is_zero():
            return k
        k += 1
        if k > bound:
            raise AssertionError("nilpotency bound exceeded")
