"""Certified winding numbers of one-variable mixed polynomials on circles.

The winding of g along a circle is the mapping degree of the normalized
map g/|g| from the circle to the unit circle.  It is computed by
sampling, accumulating principal-branch argument increments, and
adaptively doubling the sample count until every increment is smaller
than pi/2 (a stricter threshold than the pi needed for correctness,
leaving margin for rounding).  A contour hitting a zero is an error,
never a guess.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import (NotMonic, RefinementExhausted, ZeroOnContour,
                     ZeroPolynomial)
from .poly import MixedPolynomial

_INITIAL_SAMPLES = 64
_MAX_SAMPLES = 2 ** 20
_ZERO_EPS = 1e-9
_INTEGER_TOL = 1e-6


@dataclass(frozen=True)
class Contour:
    """Circle |w - center| = radius, traversed counterclockwise."""

    center: complex
    radius: float

    def __post_init__(self):
        if not self.radius > 0:
            raise ValueError("contour radius must be positive")


@dataclass(frozen=True)
class WindingReport:
    """Certified winding of a contour.

    ``certified`` records that every consecutive argument step stayed
    below pi/2 and the minimum sampled modulus was positive; the winding
    is the accumulated argument divided by 2*pi, rounded only after it
    is within 1e-6 of an integer.
    """

    winding: int
    min_modulus: float
    samples: int
    certified: bool


def contour_winding(g: MixedPolynomial, contour: Contour) -> WindingReport:
    """Winding number of g along the contour, with certification.

    Raises ZeroOnContour when a sampled value falls below
    1e-9 * (max coefficient magnitude) * radius^(radial degree), and
    RefinementExhausted when 2^20 samples do not certify.
    """
    if g.n != 1:
        raise ZeroPolynomial("contour_winding needs a one-variable polynomial")
    if g.is_zero():
        raise ZeroPolynomial("cannot wind the zero polynomial")
    scale = g.coefficient_scale() * contour.radius ** g.radial_degree()
    n_samples = _INITIAL_SAMPLES
    while True:
        theta = 2.0 * np.pi * np.arange(n_samples) / n_samples
        w = contour.center + contour.radius * np.exp(1j * theta)
        vals = g.evaluate_array(w)
        mods = np.abs(vals)
        min_mod = float(mods.min())
        if min_mod < _ZERO_EPS * scale:
            raise ZeroOnContour(
                f"|g| = {min_mod:.3e} on contour around {contour.center:.6g} "
                f"(radius {contour.radius:.3e})")
        steps = np.angle(np.roll(vals, -1) / vals)
        if np.abs(steps).max() < math.pi / 2:
            total = float(steps.sum()) / (2.0 * math.pi)
            nearest = round(total)
            if abs(total - nearest) <= _INTEGER_TOL:
                return WindingReport(winding=int(nearest), min_modulus=min_mod,
                                     samples=n_samples, certified=True)
        n_samples *= 2
        if n_samples > _MAX_SAMPLES:
            raise RefinementExhausted(
                f"no certification at {_MAX_SAMPLES} samples on contour "
                f"around {contour.center:.6g} (radius {contour.radius:.3e})")


def top_monomial(g: MixedPolynomial) -> tuple[tuple[int, int], complex]:
    """The unique monomial of maximal radial degree, as ((a, b), coeff).

    Raises NotMonic when the maximum is attained twice.
    """
    if g.n != 1:
        raise ZeroPolynomial("top_monomial needs a one-variable polynomial")
    if g.is_zero():
        raise ZeroPolynomial("the zero polynomial has no top monomial")
    d = g.radial_degree()
    tops = [((nu[0], mu[0]), c) for (nu, mu), c in g.terms if nu[0] + mu[0] == d]
    if len(tops) > 1:
        raise NotMonic(
            f"{len(tops)} monomials share the maximal radial degree {d}")
    return tops[0]


def dominance_radius(g: MixedPolynomial) -> tuple[float, tuple[int, int]]:
    """Radius beyond which the top monomial dominates all lower terms.

    Doubles R from 1 until |c_top| R^d exceeds the sum of the lower
    terms' magnitudes at radius R; every zero of g then lies strictly
    inside |w| < R, and the winding on any circle |w| = R' >= R equals
    the top monomial's a - b.
    """
    (a, b), c_top = top_monomial(g)
    d = a + b
    lower = [(nu[0] + mu[0], abs(c)) for (nu, mu), c in g.terms
             if nu[0] + mu[0] < d]
    radius = 1.0
    while True:
        bound = sum(mag * radius ** deg for deg, mag in lower)
        if abs(c_top) * radius ** d > bound:
            return radius, (a, b)
        radius *= 2.0
        if radius > 1e12:
            raise RefinementExhausted("dominance radius search diverged")


def degree_at_infinity(g: MixedPolynomial) -> int:
    """Winding of g along a circle outside all of its zeros.

    For a monic polynomial with top term c * w^(q+r) * wbar^r this
    equals q = (q+r) - r.
    """
    radius, _ = dominance_radius(g)
    return contour_winding(g, Contour(0j, radius)).winding


def local_index(g: MixedPolynomial, root: complex, eps: float) -> int:
    """Local intersection index: winding on |w - root| = eps.

    The caller is responsible for eps isolating the root; a contour
    touching another zero raises ZeroOnContour.
    """
    return contour_winding(g, Contour(complex(root), float(eps))).winding
