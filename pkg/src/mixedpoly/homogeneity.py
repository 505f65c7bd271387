"""Detection of radial and polar weighted homogeneity.

A polynomial is radially weighted homogeneous when there are positive
integer weights q_1..q_n and a degree d_r with

    sum_j q_j * (nu_j + mu_j) = d_r        for every stored monomial,

and polar weighted homogeneous when integer weights p_1..p_n give

    sum_j p_j * (nu_j - mu_j) = d_p        for every stored monomial.

Both conditions are integer linear systems over the monomial support.
``analyze`` solves them exactly and classifies the polynomial; the
strongly polar homogeneous case (all weights 1) gets the (q, r) class
with d_r = q + 2r and d_p = q.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np

from .errors import ZeroPolynomial
from .poly import MixedPolynomial

# search bound for rank-deficient supports; weights above this are not
# meaningful at the scales this package targets
_LEX_BOUND = 12


@dataclass(frozen=True)
class WeightAnalysis:
    """Weight systems of a mixed polynomial, or None where absent."""

    radial_weights: Optional[tuple[int, ...]]
    radial_degree: Optional[int]
    polar_weights: Optional[tuple[int, ...]]
    polar_degree: Optional[int]
    strongly_polar_weighted: bool
    strongly_polar_homogeneous: bool
    class_q: Optional[int]
    class_r: Optional[int]
    weights_unique: bool


def _nullspace_basis(rows: list[tuple[int, ...]], n: int) -> list[tuple[int, ...]]:
    """Primitive integer basis of the rational kernel of the row matrix.

    Each basis vector is scaled to integers with gcd 1 and its first
    nonzero entry positive.
    """
    mat = [[Fraction(x) for x in row] for row in rows]
    pivots: list[int] = []
    r = 0
    for col in range(n):
        pivot = None
        for i in range(r, len(mat)):
            if mat[i][col] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        inv = mat[r][col]
        mat[r] = [x / inv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][col] != 0:
                f = mat[i][col]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        pivots.append(col)
        r += 1
        if r == len(mat):
            break
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * n
        vec[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            vec[pc] = -mat[i][fc]
        lcm = 1
        for x in vec:
            lcm = lcm * x.denominator // math.gcd(lcm, x.denominator)
        ints = [int(x * lcm) for x in vec]
        g = 0
        for x in ints:
            g = math.gcd(g, abs(x))
        ints = [x // g for x in ints]
        first = next(x for x in ints if x != 0)
        if first < 0:
            ints = [-x for x in ints]
        basis.append(tuple(ints))
    return basis


def _lex_smallest_positive(rows: list[tuple[int, ...]], n: int) -> Optional[tuple[int, ...]]:
    """Lexicographically smallest all-positive integer kernel vector.

    Bounded enumeration; the first consistent vector found in lex order
    is automatically primitive (any common factor would shrink its first
    component).  Returns None when nothing exists within the bound.
    """
    if n > 6:
        return None
    for cand in itertools.product(range(1, _LEX_BOUND + 1), repeat=n):
        if all(sum(w * x for w, x in zip(cand, row)) == 0 for row in rows):
            return cand
    return None


def _diff_rows(rows: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    r0 = rows[0]
    return [tuple(a - b for a, b in zip(r, r0)) for r in rows[1:]]


def analyze(f: MixedPolynomial) -> WeightAnalysis:
    """Solve the radial and polar weight systems over the support of f.

    Radial weights must be strictly positive with positive degree; polar
    weights may be arbitrary integers (all-positive preferred, then the
    sign making d_p > 0).  Rank-deficient supports admit several
    primitive weight vectors; the lexicographically smallest positive
    one is returned and ``weights_unique`` is set to False.
    """
    if f.is_zero():
        raise ZeroPolynomial("cannot analyze the zero polynomial")
    support = [key for key, _ in f.terms]
    s_rows = [tuple(nu[j] + mu[j] for j in range(f.n)) for nu, mu in support]
    a_rows = [tuple(nu[j] - mu[j] for j in range(f.n)) for nu, mu in support]
    unique = True

    def solve_system(rows, require_positive):
        nonlocal unique
        diffs = _diff_rows(rows)
        basis = _nullspace_basis(diffs, f.n)
        if not basis:
            return None
        if len(basis) == 1:
            v = basis[0]
            if all(x > 0 for x in v):
                return v
            return v if not require_positive else None
        unique = False
        v = _lex_smallest_positive(diffs, f.n)
        if v is not None or require_positive:
            return v
        return basis[0]

    radial_weights = solve_system(s_rows, require_positive=True)
    radial_degree = None
    if radial_weights is not None:
        radial_degree = sum(w * x for w, x in zip(radial_weights, s_rows[0]))
        if radial_degree < 1:
            # constant-only support: no positive degree exists
            radial_weights, radial_degree = None, None

    polar_weights = solve_system(a_rows, require_positive=False)
    polar_degree = None
    if polar_weights is not None:
        polar_degree = sum(w * x for w, x in zip(polar_weights, a_rows[0]))
        if not all(x > 0 for x in polar_weights) and polar_degree < 0:
            polar_weights = tuple(-x for x in polar_weights)
            polar_degree = -polar_degree

    spw = (radial_weights is not None and polar_weights is not None
           and radial_weights == polar_weights)
    sph = spw and all(x == 1 for x in radial_weights)
    class_q = class_r = None
    if sph:
        class_q = polar_degree
        class_r = (radial_degree - polar_degree) // 2

    return WeightAnalysis(
        radial_weights=radial_weights,
        radial_degree=radial_degree,
        polar_weights=polar_weights,
        polar_degree=polar_degree,
        strongly_polar_weighted=spw,
        strongly_polar_homogeneous=sph,
        class_q=class_q,
        class_r=class_r,
        weights_unique=unique,
    )


def is_mixed_singular(f: MixedPolynomial, point: Sequence[complex],
                      tol: float = 1e-8) -> bool:
    """Whether f fails to be a submersion (as a real map) at the point.

    The criterion is the unimodular proportionality of the conjugated
    holomorphic gradient v_j = conj(df/dz_j) and the anti-holomorphic
    gradient w_j = df/dzbar_j: the point is singular when both vanish or
    when v = alpha * w with |alpha| = 1, tested through cross products
    and norm equality.
    """
    pt = tuple(complex(p) for p in point)
    v = np.array([f.wirtinger(j).evaluate(pt).conjugate() for j in range(f.n)])
    w = np.array([f.wirtinger(j, conjugate_var=True).evaluate(pt) for j in range(f.n)])
    nv = float(np.linalg.norm(v))
    nw = float(np.linalg.norm(w))
    scale = max(nv, nw, 1.0)
    if nv <= tol * scale and nw <= tol * scale:
        return True
    cross = 0.0
    for j in range(f.n):
        for k in range(j + 1, f.n):
            cross = max(cross, abs(v[j] * w[k] - v[k] * w[j]))
    return cross <= tol * scale and abs(nv - nw) <= tol * scale
