"""Certified isolation of the zeros of a one-variable mixed polynomial.

The solver covers a disk that provably contains every zero with a grid
of squares, discards squares on which a term-wise Lipschitz bound
certifies the polynomial cannot vanish, groups the survivors into
connected clusters, and certifies each cluster with the winding number
of a circumscribed circle.  Winding +-1 clusters are polished with a
damped real Newton iteration; clusters with any other winding are
driven down to a minimal width before being reported, so honest failure
(IndeterminateCluster) beats a silently wrong count.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import (DegenerateAtInfinity, DimensionMismatch,
                     IndeterminateCluster, NotPolarHomogeneous,
                     RefinementExhausted, SolverInconsistency, ZeroOnContour,
                     ZeroPolynomial)
from .poly import MixedPolynomial
from .winding import Contour, contour_winding, dominance_radius

_SQRT2 = math.sqrt(2.0)
# two chart points closer than this are the same projective point
_POINT_MERGE_TOL = 1e-6
_RESIDUAL_REL = 1e-8


@dataclass(frozen=True)
class Box:
    """Axis-aligned square in the w-plane."""

    center: complex
    half_width: float


@dataclass(frozen=True)
class CertifiedRoot:
    """Isolated zero cluster: certified winding index plus refined data."""

    box: Box
    estimate: complex
    index: int
    residual: float


@dataclass(frozen=True)
class RootInventory:
    """All root clusters of a solve, sorted by estimate."""

    roots: tuple[CertifiedRoot, ...]
    index_sum: int
    search_radius: float


@dataclass(frozen=True)
class SolverOptions:
    coarse_scale: float = 2.0 ** -10     # first clustering width / radius
    isolation_scale: float = 2.5e-7      # width below which clusters certify
    floor_scale: float = 1e-7            # minimal half-width before giving up
    max_cells: int = 3_000_000           # total cell budget per solve
    circle_factor: float = 1.25          # certification circle inflation
    clash_factor: float = 1.10           # clearance demanded from other clusters
    newton_iterations: int = 60


_DEFAULT_OPTIONS = SolverOptions()


class _Cluster:
    __slots__ = ("cells", "hw")

    def __init__(self, cells: set, hw: float):
        self.cells = cells
        self.hw = hw

    def rect(self, radius: float) -> tuple[float, float, float, float]:
        """(x0, x1, y0, y1) of the covered area."""
        hw = self.hw
        xs = [ix for ix, _ in self.cells]
        ys = [iy for _, iy in self.cells]
        return (-radius + 2 * min(xs) * hw, -radius + 2 * (max(xs) + 1) * hw,
                -radius + 2 * min(ys) * hw, -radius + 2 * (max(ys) + 1) * hw)


def _centers(cells, hw: float, radius: float) -> np.ndarray:
    arr = np.array(sorted(cells), dtype=np.int64)
    return ((-radius + (2 * arr[:, 0] + 1) * hw)
            + 1j * (-radius + (2 * arr[:, 1] + 1) * hw))


class _Problem:
    """Solve context: the polynomial, its derivatives and shared budget."""

    __slots__ = ("g", "gw", "gwb", "radius", "budget")

    def __init__(self, g: MixedPolynomial, radius: float, max_cells: int):
        self.g = g
        self.gw = g.wirtinger(0)
        self.gwb = g.wirtinger(0, conjugate_var=True)
        self.radius = radius
        self.budget = max_cells

    def _lipschitz(self, mods: np.ndarray) -> np.ndarray:
        """Term-wise bound on the gradient magnitude at modulus <= mods."""
        out = np.zeros_like(mods)
        for (nu, mu), c in self.g.terms:
            d = nu[0] + mu[0]
            if d:
                out += abs(c) * d * mods ** (d - 1)
        return out

    def _hessian_bound(self, mods: np.ndarray) -> np.ndarray:
        """Term-wise bound on all second derivatives at modulus <= mods."""
        out = np.zeros_like(mods)
        for (nu, mu), c in self.g.terms:
            d = nu[0] + mu[0]
            if d >= 2:
                out += abs(c) * d * (d - 1) * mods ** (d - 2)
        return out

    def may_vanish(self, cs: np.ndarray, rho: float) -> np.ndarray:
        """False only where a Taylor bound proves |g| > 0 on the cell.

        Two certificates are tried: the plain mean-value bound
        |g(c)| > L * rho, and the sharper first-order bound
        |g(c)| > (|dg/dw| + |dg/dwbar|)(c) * rho + H * rho^2 / 2
        with H bounding the second derivatives over the cell.
        """
        mods = np.abs(cs) + rho
        vals = np.abs(self.g.evaluate_array(cs))
        order0 = vals > self._lipschitz(mods) * rho
        grad = (np.abs(self.gw.evaluate_array(cs))
                + np.abs(self.gwb.evaluate_array(cs)))
        order1 = vals > grad * rho + 0.5 * self._hessian_bound(mods) * rho ** 2
        return ~(order0 | order1)


def _refine(prob: _Problem, cells: set, hw: float) -> tuple[set, float]:
    """Split every cell in four; keep only children that may contain zeros."""
    hw2 = hw / 2.0
    children = []
    for ix, iy in cells:
        children.extend(((2 * ix, 2 * iy), (2 * ix + 1, 2 * iy),
                         (2 * ix, 2 * iy + 1), (2 * ix + 1, 2 * iy + 1)))
    prob.budget -= len(children)
    if prob.budget < 0:
        raise IndeterminateCluster(
            "cell budget exhausted; zero set too large or too degenerate")
    arr = np.array(children, dtype=np.int64)
    cs = ((-prob.radius + (2 * arr[:, 0] + 1) * hw2)
          + 1j * (-prob.radius + (2 * arr[:, 1] + 1) * hw2))
    rho = hw2 * _SQRT2
    keep = prob.may_vanish(cs, rho) & (np.abs(cs) - rho <= prob.radius)
    return {children[i] for i in np.nonzero(keep)[0]}, hw2


def _connect(cells: set) -> list[set]:
    """Connected components under 8-neighborhood adjacency."""
    remaining = set(cells)
    comps = []
    while remaining:
        seed = remaining.pop()
        comp = {seed}
        frontier = [seed]
        while frontier:
            ix, iy = frontier.pop()
            for dx in (-1, 0, 1):
                for dy in (-1, 0, 1):
                    nb = (ix + dx, iy + dy)
                    if nb in remaining:
                        remaining.discard(nb)
                        comp.add(nb)
                        frontier.append(nb)
        comps.append(comp)
    return comps


def _rect_distance(p: complex, rect: tuple[float, float, float, float]) -> float:
    x0, x1, y0, y1 = rect
    dx = max(x0 - p.real, 0.0, p.real - x1)
    dy = max(y0 - p.imag, 0.0, p.imag - y1)
    return math.hypot(dx, dy)


def _certification_circle(cl: _Cluster, radius: float,
                          opts: SolverOptions) -> tuple[complex, float]:
    x0, x1, y0, y1 = cl.rect(radius)
    center = complex((x0 + x1) / 2.0, (y0 + y1) / 2.0)
    half_diag = math.hypot(x1 - x0, y1 - y0) / 2.0
    return center, opts.circle_factor * half_diag + 0.5 * cl.hw


def _argmin_center(g: MixedPolynomial, cl: _Cluster,
                   radius: float) -> tuple[complex, float]:
    cs = _centers(cl.cells, cl.hw, radius)
    vals = np.abs(g.evaluate_array(cs))
    i = int(vals.argmin())
    return complex(cs[i]), float(vals[i])


def _newton_polish(g: MixedPolynomial, gw: MixedPolynomial,
                   gwb: MixedPolynomial, start: complex, center: complex,
                   radius: float, cscale: float,
                   iterations: int) -> tuple[complex, float]:
    """Damped Newton on the real 2-system (Re g, Im g).

    The step solves A*u + B*conj(u) = -g via the conjugate-pair trick;
    steps are accepted only while they contract |g| and stay inside the
    certification circle.  Used for refinement only, never existence.
    """
    w = start
    res = abs(g.evaluate((w,)))
    for _ in range(iterations):
        if res <= 1e-13 * cscale:
            break
        a = gw.evaluate((w,))
        b = gwb.evaluate((w,))
        det = abs(a) ** 2 - abs(b) ** 2
        if abs(det) < 1e-30:
            break
        fw = g.evaluate((w,))
        step = (-fw * a.conjugate() + fw.conjugate() * b) / det
        w2 = w + step
        if abs(w2 - center) > radius:
            break
        res2 = abs(g.evaluate((w2,)))
        if res2 >= res:
            break
        w, res = w2, res2
    return w, res


def _deep_estimate(prob: _Problem, cl: _Cluster,
                   floor_hw: float) -> tuple[complex, float]:
    """Refine without re-winding, tracking the smallest |g| cell center."""
    cells, hw = cl.cells, cl.hw
    best = _argmin_center(prob.g, _Cluster(cells, hw), prob.radius)
    while hw > floor_hw and cells:
        cells, hw = _refine(prob, cells, hw)
        if cells:
            cand = _argmin_center(prob.g, _Cluster(cells, hw), prob.radius)
            if cand[1] < best[1]:
                best = cand
    return best


def solve(g: MixedPolynomial, opts: Optional[SolverOptions] = None) -> RootInventory:
    """Isolate every zero of a monic one-variable mixed polynomial.

    Monic means a unique monomial of maximal radial degree, which bounds
    the zero set inside the dominance radius.  Clusters are only
    certified after descending to the isolation width: a winding of +-1
    on a wide cluster proves nothing about the number of zeros inside
    (three zeros with indices +1, +1, -1 look like one simple zero), so
    indices are computed, and roots reported, only for clusters whose
    cells have shrunk to isolation scale.  Zeros closer together than a
    few isolation widths are reported as one cluster carrying their
    index sum.  The total index sum is checked against the top
    monomial's a - b; any discrepancy raises SolverInconsistency.
    """
    if g.n != 1:
        raise DimensionMismatch("solve needs a one-variable polynomial")
    if g.is_zero():
        raise ZeroPolynomial("cannot solve the zero polynomial")
    opts = opts or _DEFAULT_OPTIONS
    radius, (top_a, top_b) = dominance_radius(g)
    expected_sum = top_a - top_b
    cscale = g.coefficient_scale()
    prob = _Problem(g, radius, opts.max_cells)
    floor_hw = radius * opts.floor_scale
    iso_hw = radius * opts.isolation_scale
    target_hw = radius * opts.coarse_scale

    cells: set = {(0, 0)}
    hw = radius
    while hw > target_hw and cells:
        cells, hw = _refine(prob, cells, hw)

    finished: list[tuple[CertifiedRoot, tuple[float, float, float, float]]] = []
    work = deque(_Cluster(c, hw) for c in _connect(cells))

    def refine_into_work(cl: _Cluster):
        sub, hw2 = _refine(prob, cl.cells, cl.hw)
        work.extend(_Cluster(c, hw2) for c in _connect(sub))
        return sub

    while work:
        cl = work.popleft()
        if cl.hw > iso_hw:
            # descend by exclusion alone; dropped cells are proof, not guess
            refine_into_work(cl)
            continue

        center, circ_r = _certification_circle(cl, radius, opts)
        clearance = circ_r * opts.clash_factor
        clashing = [o for o in work
                    if _rect_distance(center, o.rect(radius)) <= clearance]
        if any(o.hw > cl.hw for o in clashing):
            work.append(cl)  # let coarser neighbours descend first
            continue
        clash = bool(clashing) or any(
            _rect_distance(center, rect) <= clearance for _, rect in finished)

        report = None
        if not clash:
            try:
                report = contour_winding(g, Contour(center, circ_r))
            except (ZeroOnContour, RefinementExhausted):
                report = None

        can_refine = cl.hw > floor_hw
        if report is None:
            if not can_refine:
                raise IndeterminateCluster(
                    f"cluster near {center:.6g} not certifiable at "
                    f"half-width {cl.hw:.3e}")
            refine_into_work(cl)
            continue

        index = report.winding
        box = Box(center, circ_r / _SQRT2)
        if index in (1, -1):
            start, _ = _argmin_center(g, cl, radius)
            est, res = _newton_polish(g, prob.gw, prob.gwb, start, center,
                                      circ_r, cscale, opts.newton_iterations)
            if res > _RESIDUAL_REL * cscale:
                est, res = _deep_estimate(prob, cl, floor_hw)
            finished.append((CertifiedRoot(box, est, index, res),
                             cl.rect(radius)))
        elif can_refine:
            sub = refine_into_work(cl)
            if not sub and index != 0:
                raise SolverInconsistency(
                    f"cluster of certified index {index} near "
                    f"{center:.6g} was excluded on refinement")
            # empty sub with index 0 is a near-miss; drop it
        else:
            est, res = _argmin_center(g, cl, radius)
            finished.append((CertifiedRoot(box, est, index, res),
                             cl.rect(radius)))

    roots = tuple(sorted((r for r, _ in finished),
                         key=lambda r: (r.estimate.real, r.estimate.imag)))
    index_sum = sum(r.index for r in roots)
    if index_sum != expected_sum:
        raise SolverInconsistency(
            f"index sum {index_sum} differs from the degree at infinity "
            f"{expected_sum}")
    return RootInventory(roots=roots, index_sum=index_sum,
                         search_radius=radius)


# -- points of a two-variable curve on the projective line -------------


@dataclass(frozen=True)
class ProjectiveCount:
    """Point count of {f = 0} on the projective line, with provenance."""

    count: int
    chart_inventory: RootInventory
    infinity_is_point: bool
    warnings: tuple[str, ...]


def count_projective_points_detailed(
        f: MixedPolynomial,
        opts: Optional[SolverOptions] = None) -> ProjectiveCount:
    """Count distinct solution points of f = 0 on the projective line.

    Solves the chart z1 = 1 (variable w = z0/z1) and separately tests
    the remaining point [1:0] through the other chart's value at 0.
    Index-0 clusters with a residual below the certification threshold
    are counted but flagged, since the winding test cannot decide them.
    """
    if f.n != 2:
        raise DimensionMismatch("projective point counting needs 2 variables")
    if f.unit_degrees() is None:
        raise NotPolarHomogeneous(
            "point counting requires a strongly polar homogeneous polynomial")
    g = f.dehomogenize(1)
    inventory = solve(g, opts)
    gscale = g.coefficient_scale()
    warnings = []
    points: list[complex] = []
    for root in inventory.roots:
        if root.index != 0:
            points.append(root.estimate)
        elif root.residual <= _RESIDUAL_REL * gscale:
            points.append(root.estimate)
            warnings.append(
                f"index-0 cluster at {root.estimate:.6g} counted as a point "
                f"(winding-uncertified, residual {root.residual:.2e})")
        else:
            warnings.append(
                f"index-0 cluster at {root.estimate:.6g} not counted "
                f"(residual {root.residual:.2e})")
    distinct: list[complex] = []
    for p in points:
        if all(abs(p - q) >= _POINT_MERGE_TOL for q in distinct):
            distinct.append(p)

    # the point [1:0] lies on the curve iff the other chart's
    # representative vanishes at its origin
    g_inf = f.dehomogenize(0)
    value_at_zero = g_inf.coefficient((0,), (0,))
    inf_scale = g_inf.coefficient_scale()
    if abs(value_at_zero) <= 1e-12 * inf_scale:
        infinity = True
    elif abs(value_at_zero) >= 1e-6 * inf_scale:
        infinity = False
    else:
        inv_inf = solve(g_inf, opts)
        origin = [r for r in inv_inf.roots
                  if abs(r.estimate) <= 2 * r.box.half_width]
        if origin and origin[0].index != 0:
            infinity = True
        elif origin:
            raise DegenerateAtInfinity(
                "index-0 cluster at the origin of the infinity chart")
        else:
            infinity = False

    return ProjectiveCount(
        count=len(distinct) + (1 if infinity else 0),
        chart_inventory=inventory,
        infinity_is_point=infinity,
        warnings=tuple(warnings))


def count_projective_points(f: MixedPolynomial,
                            opts: Optional[SolverOptions] = None) -> int:
    return count_projective_points_detailed(f, opts).count
