"""Sparse mixed polynomials f(z, conj(z)) in n complex variables.

A mixed polynomial is a finite sum

    f(z, zbar) = sum_{nu, mu} c_{nu, mu} * z^nu * zbar^mu

viewed as a real-analytic map C^n -> C.  Terms are stored sparsely,
keyed by the exponent pair (nu, mu), and kept in a fixed lexicographic
order so that evaluation, printing and iteration are deterministic.
Values are immutable after construction; every operation returns a new
polynomial.
"""

from __future__ import annotations

from typing import Iterable, Mapping, Sequence, Union

import numpy as np

from .errors import DimensionMismatch, NotPolarHomogeneous, ZeroPolynomial

Exponents = tuple[int, ...]
TermKey = tuple[Exponents, Exponents]
TermMap = Mapping[TermKey, complex]


def _clean(c: complex) -> complex:
    # normalize -0.0 components so equal coefficients are bit-identical
    c = complex(c)
    return complex(c.real + 0.0, c.imag + 0.0)


def _as_exponents(e: Iterable[int], n: int, what: str) -> Exponents:
    t = tuple(int(x) for x in e)
    if len(t) != n:
        raise DimensionMismatch(f"{what} has length {len(t)}, expected {n}")
    if any(x < 0 for x in t):
        raise ValueError(f"{what} must be non-negative, got {t}")
    return t


class MixedPolynomial:
    """Immutable sparse polynomial in z_0..z_{n-1} and their conjugates.

    ``terms`` is a tuple of ``((nu, mu), coeff)`` pairs sorted by the
    concatenated exponent tuple ``nu + mu``; zero coefficients are never
    stored.  Variable indices are 0-based throughout the API (the text
    grammar's ``z1`` is variable 0).
    """

    __slots__ = ("n", "terms", "_univar")

    def __init__(self, n: int, terms: Union[TermMap, Iterable[tuple[TermKey, complex]]]):
        if n < 1:
            raise ValueError("need at least one variable")
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[TermKey, complex] = {}
        for (nu, mu), c in items:
            key = (_as_exponents(nu, n, "nu"), _as_exponents(mu, n, "mu"))
            acc[key] = acc.get(key, 0j) + complex(c)
        self.n = n
        self.terms = tuple(
            sorted(((k, _clean(v)) for k, v in acc.items() if v != 0),
                   key=lambda kv: kv[0][0] + kv[0][1]))
        self._univar = None

    # -- constructors ------------------------------------------------

    @classmethod
    def zero(cls, n: int) -> "MixedPolynomial":
        return cls(n, {})

    @classmethod
    def constant(cls, n: int, c: complex) -> "MixedPolynomial":
        return cls(n, {((0,) * n, (0,) * n): c})

    @classmethod
    def variable(cls, n: int, j: int) -> "MixedPolynomial":
        return cls.monomial(n, 1.0, {j: 1}, {})

    @classmethod
    def conj_variable(cls, n: int, j: int) -> "MixedPolynomial":
        return cls.monomial(n, 1.0, {}, {j: 1})

    @classmethod
    def monomial(cls, n: int, c: complex, nu: Union[Mapping[int, int], Sequence[int]],
                 mu: Union[Mapping[int, int], Sequence[int]]) -> "MixedPolynomial":
        """Single term c * z^nu * zbar^mu; nu/mu as sequences or {index: exp}."""
        def expand(e):
            if isinstance(e, Mapping):
                out = [0] * n
                for j, k in e.items():
                    out[j] = k
                return tuple(out)
            return tuple(e)
        return cls(n, {(expand(nu), expand(mu)): c})

    # -- basic queries -----------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, nu: Sequence[int], mu: Sequence[int]) -> complex:
        key = (tuple(nu), tuple(mu))
        for k, c in self.terms:
            if k == key:
                return c
        return 0j

    def radial_degree(self) -> int:
        """Max of |nu| + |mu| over the support."""
        if not self.terms:
            raise ZeroPolynomial("zero polynomial has no degree")
        return max(sum(nu) + sum(mu) for (nu, mu), _ in self.terms)

    def coefficient_scale(self) -> float:
        """Largest coefficient magnitude (0.0 for the zero polynomial)."""
        return max((abs(c) for _, c in self.terms), default=0.0)

    def unit_degrees(self) -> Union[tuple[int, int], None]:
        """(radial, polar) degrees for all-ones weights, or None.

        Returns the pair (d_r, d_p) when every monomial satisfies
        |nu|+|mu| = d_r and |nu|-|mu| = d_p, i.e. the polynomial is
        strongly polar homogeneous; otherwise None.
        """
        if not self.terms:
            return None
        rad = {sum(nu) + sum(mu) for (nu, mu), _ in self.terms}
        pol = {sum(nu) - sum(mu) for (nu, mu), _ in self.terms}
        if len(rad) == 1 and len(pol) == 1:
            return rad.pop(), pol.pop()
        return None

    # -- arithmetic ---------------------------------------------------

    def _coerce(self, other) -> "MixedPolynomial":
        if isinstance(other, MixedPolynomial):
            if other.n != self.n:
                raise DimensionMismatch(
                    f"operands have {self.n} and {other.n} variables")
            return other
        return MixedPolynomial.constant(self.n, other)

    def __add__(self, other) -> "MixedPolynomial":
        other = self._coerce(other)
        acc = dict(self.terms)
        for k, c in other.terms:
            acc[k] = acc.get(k, 0j) + c
        return MixedPolynomial(self.n, acc)

    __radd__ = __add__

    def __neg__(self) -> "MixedPolynomial":
        return MixedPolynomial(self.n, {k: -c for k, c in self.terms})

    def __sub__(self, other) -> "MixedPolynomial":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "MixedPolynomial":
        return self._coerce(other) + (-self)

    def __mul__(self, other) -> "MixedPolynomial":
        if not isinstance(other, MixedPolynomial):
            return MixedPolynomial(
                self.n, {k: c * complex(other) for k, c in self.terms})
        other = self._coerce(other)
        acc: dict[TermKey, complex] = {}
        for (nu1, mu1), c1 in self.terms:
            for (nu2, mu2), c2 in other.terms:
                key = (tuple(a + b for a, b in zip(nu1, nu2)),
                       tuple(a + b for a, b in zip(mu1, mu2)))
                acc[key] = acc.get(key, 0j) + c1 * c2
        return MixedPolynomial(self.n, acc)

    def __rmul__(self, other) -> "MixedPolynomial":
        return self * other

    def __pow__(self, k: int) -> "MixedPolynomial":
        if k < 0:
            raise ValueError("negative exponents are not supported")
        out = MixedPolynomial.constant(self.n, 1.0)
        for _ in range(k):
            out = out * self
        return out

    def conjugate(self) -> "MixedPolynomial":
        """Swap nu <-> mu and conjugate every coefficient."""
        return MixedPolynomial(
            self.n, {(mu, nu): c.conjugate() for (nu, mu), c in self.terms})

    def wirtinger(self, j: int, conjugate_var: bool = False) -> "MixedPolynomial":
        """Formal Wirtinger derivative d/dz_j (or d/dzbar_j)."""
        if not 0 <= j < self.n:
            raise DimensionMismatch(f"variable index {j} out of range")
        acc: dict[TermKey, complex] = {}
        for (nu, mu), c in self.terms:
            e = mu[j] if conjugate_var else nu[j]
            if e == 0:
                continue
            if conjugate_var:
                mu2 = mu[:j] + (e - 1,) + mu[j + 1:]
                key = (nu, mu2)
            else:
                nu2 = nu[:j] + (e - 1,) + nu[j + 1:]
                key = (nu2, mu)
            acc[key] = acc.get(key, 0j) + c * e
        return MixedPolynomial(self.n, acc)

    # -- evaluation ---------------------------------------------------

    def evaluate(self, point: Sequence[complex]) -> complex:
        """Value at a point given as a length-n sequence of complex numbers."""
        pt = tuple(complex(p) for p in point)
        if len(pt) != self.n:
            raise DimensionMismatch(
                f"point has {len(pt)} coordinates, expected {self.n}")
        total = 0j
        for (nu, mu), c in self.terms:
            v = c
            for p, e in zip(pt, nu):
                if e:
                    v *= p ** e
            for p, e in zip(pt, mu):
                if e:
                    v *= p.conjugate() ** e
            total += v
        return total

    def _univar_arrays(self):
        if self._univar is None:
            a = np.array([nu[0] for (nu, _), _ in self.terms], dtype=np.int64)
            b = np.array([mu[0] for (_, mu), _ in self.terms], dtype=np.int64)
            c = np.array([c for _, c in self.terms], dtype=np.complex128)
            self._univar = (a, b, c)
        return self._univar

    def evaluate_array(self, w) -> np.ndarray:
        """Vectorized evaluation for one-variable polynomials."""
        if self.n != 1:
            raise DimensionMismatch("evaluate_array needs a one-variable polynomial")
        w = np.asarray(w, dtype=np.complex128)
        out = np.zeros(w.shape, dtype=np.complex128)
        wb = np.conj(w)
        for a, b, c in zip(*self._univar_arrays()):
            out += c * w ** a * wb ** b
        return out

    # -- chart and line operations -------------------------------------

    def dehomogenize(self, chart: int) -> "MixedPolynomial":
        """Affine-chart representative: set z_chart = 1 and drop it.

        Requires a strongly polar homogeneous polynomial (all radial and
        polar weights 1); then f = g(u) * z_chart^(q+r) * zbar_chart^r on
        the chart, where u_i = z_i / z_chart.
        """
        if self.n < 2:
            raise DimensionMismatch("dehomogenize needs at least two variables")
        if not 0 <= chart < self.n:
            raise DimensionMismatch(f"chart index {chart} out of range")
        if self.unit_degrees() is None:
            raise NotPolarHomogeneous(
                "dehomogenize requires a strongly polar homogeneous polynomial")
        acc: dict[TermKey, complex] = {}
        for (nu, mu), c in self.terms:
            nu2 = nu[:chart] + nu[chart + 1:]
            mu2 = mu[:chart] + mu[chart + 1:]
            acc[(nu2, mu2)] = acc.get((nu2, mu2), 0j) + c
        return MixedPolynomial(self.n - 1, acc)

    def restrict_to_line(self, coeffs) -> "MixedPolynomial":
        """Restrict to the line z_j = a_j0 * z_0 + a_j1 * z_1, j = 2..n-1.

        ``coeffs`` holds one row (a_j0, a_j1) per eliminated variable, in
        order.  Conjugate variables substitute the conjugated row.  The
        result is a two-variable polynomial; products are expanded
        eagerly.
        """
        if self.n < 3:
            raise DimensionMismatch("restrict_to_line needs at least 3 variables")
        rows = [tuple(complex(x) for x in row) for row in coeffs]
        if len(rows) != self.n - 2 or any(len(r) != 2 for r in rows):
            raise DimensionMismatch(
                f"need {self.n - 2} rows of 2 coefficients, got {rows!r}")
        w0 = MixedPolynomial.variable(2, 0)
        w1 = MixedPolynomial.variable(2, 1)
        subs = [a0 * w0 + a1 * w1 for a0, a1 in rows]
        csubs = [s.conjugate() for s in subs]
        # cache powers of each substituted line form
        pcache: dict[tuple[int, bool, int], MixedPolynomial] = {}

        def power(j: int, conj: bool, e: int) -> MixedPolynomial:
            key = (j, conj, e)
            if key not in pcache:
                base = csubs[j] if conj else subs[j]
                pcache[key] = base ** e
            return pcache[key]

        out = MixedPolynomial.zero(2)
        for (nu, mu), c in self.terms:
            t = MixedPolynomial.monomial(2, c, nu[:2], mu[:2])
            for j in range(2, self.n):
                if nu[j]:
                    t = t * power(j - 2, False, nu[j])
                if mu[j]:
                    t = t * power(j - 2, True, mu[j])
            out = out + t
        return out

    # -- protocol -----------------------------------------------------

    def __eq__(self, other) -> bool:
        return (isinstance(other, MixedPolynomial)
                and self.n == other.n and self.terms == other.terms)

    def __hash__(self) -> int:
        return hash((self.n, self.terms))

    def __repr__(self) -> str:
        return f"MixedPolynomial(n={self.n}, terms={len(self.terms)})"

    def __str__(self) -> str:
        from .grammar import format_poly
        return format_poly(self)
