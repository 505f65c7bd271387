"""Projective-geometry drivers built on the root isolator.

``verify_degree`` checks that the total signed intersection index of a
strongly polar homogeneous hypersurface with random projective lines
equals its polar degree; ``lkn`` counts the points of a two-variable
curve on the projective line; ``scan_point_counts`` samples coefficient
space and histograms the observed point counts.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import (GenericityFailure, MixedPolyError, NotPolarHomogeneous)
from .homogeneity import analyze
from .poly import MixedPolynomial
from .roots import (RootInventory, SolverOptions, count_projective_points,
                    solve)

_MAX_RESAMPLES = 20
_TOP_COEFF_REL = 1e-9


@dataclass(frozen=True)
class LineSection:
    """One random line: its coefficients, restriction and solved roots."""

    coeffs: tuple[tuple[complex, complex], ...]
    restricted: MixedPolynomial
    inventory: RootInventory
    total_index: int


@dataclass(frozen=True)
class DegreeVerdict:
    """Outcome of the line-section degree check."""

    polar_degree: int
    sections: tuple[LineSection, ...]
    agree: bool
    rejections: int


def _annulus_sample(rng: np.random.Generator) -> complex:
    # uniform over the area of the annulus 0.5 <= |a| <= 1.5
    r = math.sqrt(rng.uniform(0.25, 2.25))
    theta = rng.uniform(0.0, 2.0 * math.pi)
    return complex(r * math.cos(theta), r * math.sin(theta))


def verify_degree(f: MixedPolynomial, trials: int, seed: int,
                  opts: Optional[SolverOptions] = None) -> DegreeVerdict:
    """Intersect f = 0 with seeded random lines and compare index sums.

    Each line z_j = a_j0 z_0 + a_j1 z_1 is accepted only a posteriori:
    the restriction must dehomogenize (chart z_1) to a monic polynomial
    whose top monomial is w^(q+r) * wbar^r with a clearly nonzero
    coefficient, and the solver must succeed.  Rejected lines are
    resampled up to a cap and counted.
    """
    wa = analyze(f)
    if not wa.strongly_polar_homogeneous or f.n < 3:
        raise NotPolarHomogeneous(
            "verify_degree needs a strongly polar homogeneous polynomial "
            "in at least 3 variables")
    q, r = wa.class_q, wa.class_r
    rng = np.random.default_rng(seed)
    sections = []
    rejections = 0
    for _ in range(trials):
        for _attempt in range(_MAX_RESAMPLES):
            coeffs = tuple(
                (_annulus_sample(rng), _annulus_sample(rng))
                for _ in range(f.n - 2))
            restricted = f.restrict_to_line(coeffs)
            g = restricted.dehomogenize(1)
            top = g.coefficient((q + r,), (r,))
            if abs(top) <= _TOP_COEFF_REL * g.coefficient_scale():
                rejections += 1
                continue
            try:
                inventory = solve(g, opts)
            except MixedPolyError:
                rejections += 1
                continue
            sections.append(LineSection(coeffs, restricted, inventory,
                                        inventory.index_sum))
            break
        else:
            raise GenericityFailure(
                f"{_MAX_RESAMPLES} consecutive line samples rejected")
    agree = all(s.total_index == q for s in sections)
    return DegreeVerdict(polar_degree=q, sections=tuple(sections),
                         agree=agree, rejections=rejections)


def lkn(f: MixedPolynomial, opts: Optional[SolverOptions] = None) -> int:
    """Number of points of {f = 0} on the projective line.

    Equals the number of link components of the affine zero set cut by
    the unit 3-sphere.
    """
    return count_projective_points(f, opts)


@dataclass(frozen=True)
class ScanResult:
    """Histogram of observed point counts over random coefficients."""

    q: int
    r: int
    trials: int
    seed: int
    histogram: dict[int, int]
    failures: dict[str, int]
    out_of_range: dict[int, int]

    def conjectured_range(self) -> tuple[int, ...]:
        return tuple(range(self.q, self.q + 2 * self.r + 1, 2))


def scan_point_counts(q: int, r: int, trials: int, seed: int,
                      opts: Optional[SolverOptions] = None) -> ScanResult:
    """Sample the full-support coefficient space of class (q, r) curves.

    Coefficients are drawn uniformly from the unit disk for every
    monomial with |nu| = q + r and |mu| = r.  Instances the solver
    cannot certify are tallied by error type, never silently dropped.
    Observed counts outside {q, q+2, ..., q+2r} are collected in
    ``out_of_range``; such a count would be a finding to report, not a
    statistic to hide.
    """
    if q < 1 or r < 0:
        raise ValueError("need q >= 1 and r >= 0")
    support = [((n1, q + r - n1), (m1, r - m1))
               for n1 in range(q + r + 1) for m1 in range(r + 1)]
    rng = np.random.default_rng(seed)
    histogram: Counter = Counter()
    failures: Counter = Counter()
    for _ in range(trials):
        coeffs = {}
        for key in support:
            rad = math.sqrt(rng.uniform(0.0, 1.0))
            theta = rng.uniform(0.0, 2.0 * math.pi)
            coeffs[key] = complex(rad * math.cos(theta),
                                  rad * math.sin(theta))
        f = MixedPolynomial(2, coeffs)
        try:
            histogram[count_projective_points(f, opts)] += 1
        except MixedPolyError as err:
            failures[type(err).__name__] += 1
    allowed = set(range(q, q + 2 * r + 1, 2))
    out = {k: v for k, v in sorted(histogram.items()) if k not in allowed}
    return ScanResult(q=q, r=r, trials=trials, seed=seed,
                      histogram=dict(sorted(histogram.items())),
                      failures=dict(sorted(failures.items())),
                      out_of_range=out)
