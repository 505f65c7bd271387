"""Closed-form invariants and the named polynomial families.

The calculators are pure integer arithmetic: Euler characteristics of
Milnor fibers of join and simplicial polynomials, Milnor numbers, the
genus of the associated projective curve, Euler characteristics of the
curve and its complement, the monodromy zeta function, and homology
rank patterns.  ``build_family`` constructs the concrete polynomials
the tables refer to.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Optional, Union

from .errors import (AmbientDimensionError, InvalidFamilyParams,
                     NonIntegralGenus)
from .poly import MixedPolynomial

FAMILY_KINDS = (
    "join_f1", "simplicial_f2", "simplicial_f2p", "simplicial_f3",
    "simplicial_f3p", "s1", "s2", "s3", "s4", "s5", "h_join", "f_qj",
    "k_ell",
)

# default generic constants for the product and join families
_DEFAULT_ALPHA = 1 + 1j
_DEFAULT_BETA = 2 - 1j


@dataclass(frozen=True)
class FamilySpec:
    """A family kind plus its named parameters."""

    kind: str
    params: Mapping[str, Union[int, float, complex]] = field(default_factory=dict)


@dataclass(frozen=True)
class CurveInvariants:
    """Integer invariants of a degree-q mixed projective curve."""

    q: int
    r: int
    chi_F: int
    milnor: int
    genus: int
    chi_V: int
    chi_complement: int
    zeta_exponent: int
    homology: tuple[int, ...]


def _int_param(params, name, minimum) -> int:
    if name not in params:
        raise InvalidFamilyParams(f"missing parameter {name!r}")
    v = params[name]
    if isinstance(v, float) and v.is_integer():
        v = int(v)
    if not isinstance(v, int):
        raise InvalidFamilyParams(f"parameter {name!r} must be an integer")
    if v < minimum:
        raise InvalidFamilyParams(f"parameter {name!r} must be >= {minimum}")
    return v


def _complex_param(params, name, default) -> complex:
    v = complex(params.get(name, default))
    if v == 0:
        raise InvalidFamilyParams(f"parameter {name!r} must be nonzero")
    return v


def _axis_power(n: int, j: int, a: int, b: int) -> MixedPolynomial:
    # z_j^(a+b) * zbar_j^b
    return MixedPolynomial.monomial(n, 1.0, {j: a + b}, {j: b})


def build_f_qj(q: int, j: int, n: int = 2) -> MixedPolynomial:
    """z0^(q+j) zbar0^j + z1^(q+j) zbar1^j, of class (q, j)."""
    return _axis_power(n, 0, q, j) + _axis_power(n, 1, q, j)


def build_k_ell(ell: int, beta: complex = _DEFAULT_ALPHA,
                gamma: complex = _DEFAULT_BETA, n: int = 2) -> MixedPolynomial:
    """(z0^l - beta z1^l)(zbar0^l - gamma zbar1^l), of class (0, l)."""
    hol = (MixedPolynomial.monomial(n, 1.0, {0: ell}, {})
           - beta * MixedPolynomial.monomial(n, 1.0, {1: ell}, {}))
    anti = (MixedPolynomial.monomial(n, 1.0, {}, {0: ell})
            - gamma * MixedPolynomial.monomial(n, 1.0, {}, {1: ell}))
    return hol * anti


def join_family_inner(q: int, r: int, j: int,
                      alpha: complex = _DEFAULT_ALPHA,
                      beta: complex = _DEFAULT_BETA) -> MixedPolynomial:
    """Two-variable factor of the join family: f_qj times a k-type factor.

    Its zero set has q + 2(r - j) points on the projective line when
    alpha, beta are generic.
    """
    return build_f_qj(q, j) * build_k_ell(r - j, alpha, beta)


def _expand_to(f: MixedPolynomial, n: int) -> MixedPolynomial:
    pad = n - f.n
    return MixedPolynomial(
        n, {(nu + (0,) * pad, mu + (0,) * pad): c for (nu, mu), c in f.terms})


def build_family(spec: Union[FamilySpec, str], **kwargs) -> MixedPolynomial:
    """Construct a family polynomial from a spec or kind name + params."""
    if isinstance(spec, str):
        spec = FamilySpec(spec, kwargs)
    kind, params = spec.kind, spec.params
    if kind not in FAMILY_KINDS:
        raise InvalidFamilyParams(f"unknown family kind {kind!r}")

    if kind == "f_qj":
        q = _int_param(params, "q", 1)
        j = _int_param(params, "j", 0)
        return build_f_qj(q, j)

    if kind == "k_ell":
        ell = _int_param(params, "ell", 0)
        return build_k_ell(ell, _complex_param(params, "beta", _DEFAULT_ALPHA),
                           _complex_param(params, "gamma", _DEFAULT_BETA))

    if kind == "h_join":
        q = _int_param(params, "q", 1)
        r = _int_param(params, "r", 0)
        j = _int_param(params, "j", 0)
        if j > r:
            raise InvalidFamilyParams("need j <= r")
        inner = join_family_inner(
            q, r, j, _complex_param(params, "alpha", _DEFAULT_ALPHA),
            _complex_param(params, "beta", _DEFAULT_BETA))
        return _expand_to(inner, 3) + _axis_power(3, 2, q, r)

    if kind == "join_f1":
        # join of a two-variable f_qj factor with an axis power
        q = _int_param(params, "q", 1)
        j = _int_param(params, "j", 0)
        a3 = _int_param(params, "a3", 1)
        b3 = _int_param(params, "b3", 1)
        return _expand_to(build_f_qj(q, j), 3) + _axis_power(3, 2, a3, b3)

    if kind.startswith("simplicial_"):
        a = [_int_param(params, f"a{i}", 1) for i in (1, 2, 3)]
        b = [_int_param(params, f"b{i}", 1) for i in (1, 2, 3)]
        z = [MixedPolynomial.variable(3, i) for i in range(3)]
        zb = [MixedPolynomial.conj_variable(3, i) for i in range(3)]
        t = [MixedPolynomial.monomial(3, 1.0, {i: a[i] + b[i]}, {i: b[i]})
             for i in range(3)]
        if kind == "simplicial_f2":
            return t[0] * z[1] + t[1] * z[2] + t[2]
        if kind == "simplicial_f2p":
            return t[0] * zb[1] + t[1] * zb[2] + t[2]
        if kind == "simplicial_f3":
            return t[0] * z[1] + t[1] * z[2] + t[2] * z[0]
        return t[0] * zb[1] + t[1] * zb[2] + t[2] * zb[0]

    # the five curve families, all of polar degree q
    q = _int_param(params, "q", 1)
    r = _int_param(params, "r", 0)
    if kind == "s1":
        return sum((_axis_power(3, i, q, r) for i in range(3)),
                   MixedPolynomial.zero(3))
    if kind in ("s2", "s3") and q + r < 2:
        raise InvalidFamilyParams("s2/s3 need q + r >= 2")
    z = [MixedPolynomial.variable(3, i) for i in range(3)]
    zb = [MixedPolynomial.conj_variable(3, i) for i in range(3)]
    if kind == "s2":
        lead = [MixedPolynomial.monomial(3, 1.0, {i: q + r - 1}, {i: r})
                for i in range(3)]
        return lead[0] * z[1] + lead[1] * z[2] + _axis_power(3, 2, q, r)
    if kind == "s3":
        lead = [MixedPolynomial.monomial(3, 1.0, {i: q + r - 1}, {i: r})
                for i in range(3)]
        return lead[0] * z[1] + lead[1] * z[2] + lead[2] * z[0]
    if kind == "s4":
        lead = [MixedPolynomial.monomial(3, 1.0, {i: q + r + 1}, {i: r})
                for i in range(3)]
        return lead[0] * zb[1] + lead[1] * zb[2] + _axis_power(3, 2, q, r)
    # s5
    lead = [MixedPolynomial.monomial(3, 1.0, {i: q + r + 1}, {i: r})
            for i in range(3)]
    return lead[0] * zb[1] + lead[1] * zb[2] + lead[2] * zb[0]


# -- closed-form calculators -------------------------------------------


def euler_join(mu_g: int, a3: int) -> int:
    """chi of the Milnor fiber of g(z0, z1) + z2^(a3+b3) zbar2^b3.

    ``mu_g`` is the Milnor number of the two-variable factor; the fiber
    is homotopic to a join with the a3 roots of unity, giving
    chi = (a3 - 1) * mu_g + 1.
    """
    if mu_g < 0 or a3 < 1:
        raise InvalidFamilyParams("need mu_g >= 0 and a3 >= 1")
    return (a3 - 1) * mu_g + 1


def milnor_join(mu_g: int, a3: int) -> int:
    """Middle Betti number companion of euler_join."""
    return euler_join(mu_g, a3) - 1


def euler_simplicial(kind: str, a1: int, a2: int, a3: int) -> tuple[int, int]:
    """(chi, milnor) of the Milnor fiber of a simplicial polynomial.

    ``kind`` is one of f2, f2p, f3, f3p; the b-exponents do not enter
    the closed forms.
    """
    if min(a1, a2, a3) < 1:
        raise InvalidFamilyParams("exponent parameters must be >= 1")
    if kind in ("f2", "f2p"):
        chi = a1 * a2 * a3 - a2 * a3 + a3
    elif kind == "f3":
        chi = a1 * a2 * a3 + 1
    elif kind == "f3p":
        chi = a1 * a2 * a3 - 1
    else:
        raise InvalidFamilyParams(f"unknown simplicial kind {kind!r}")
    return chi, chi - 1


def genus_from_chi(chi_F: int, q: int) -> int:
    """Genus g of the degree-q curve with fiber Euler characteristic chi_F.

    Solves 2 - 2g = 3 - chi_F / q; raises NonIntegralGenus when q does
    not divide chi_F or g is not a non-negative integer.
    """
    if q < 1:
        raise NonIntegralGenus("polar degree must be positive")
    if chi_F % q:
        raise NonIntegralGenus(f"{q} does not divide chi_F = {chi_F}")
    twice = chi_F // q - 1
    if twice % 2 or twice < 0:
        raise NonIntegralGenus(
            f"chi_F = {chi_F}, q = {q} give no non-negative integer genus")
    return twice // 2


def chi_relations(chi_F: int, d_p: int, n: int) -> tuple[int, int]:
    """(chi of the complement, chi of V) from the cyclic covering.

    The fiber covers the complement of V with d_p sheets, so
    chi_complement = chi_F / d_p and chi_V = n - chi_F / d_p.
    """
    if d_p < 1 or chi_F % d_p:
        raise NonIntegralGenus(f"{d_p} does not divide chi_F = {chi_F}")
    cc = chi_F // d_p
    return cc, n - cc


def zeta_factors(chi_F: int, d_p: int) -> dict[int, int]:
    """Monodromy zeta function as {cycle length: exponent}.

    zeta(t) = (1 - t^d_p)^(-chi_F / d_p); the zero exponent case is the
    empty product.
    """
    if d_p < 1 or chi_F % d_p:
        raise NonIntegralGenus(f"{d_p} does not divide chi_F = {chi_F}")
    if chi_F == 0:
        return {}
    return {d_p: -chi_F // d_p}


def zeta_string(chi_F: int, d_p: int) -> str:
    factors = zeta_factors(chi_F, d_p)
    if not factors:
        return "1"
    return " * ".join(f"(1 - t^{k})^({e})" for k, e in sorted(factors.items()))


def homology_pattern(n: int, chi_F: int, d_p: int) -> tuple[int, ...]:
    """Ranks of H_j(V), j = 0..2(n-2), under the bouquet hypothesis.

    Off-middle ranks are 1 for even j and 0 for odd j; the middle rank
    is solved from the alternating sum chi(V) = n - chi_F / d_p.
    Torsion is not computed.
    """
    if n < 3:
        raise AmbientDimensionError(
            "homology pattern needs n >= 3; use point counts for n = 2")
    _, chi_v = chi_relations(chi_F, d_p, n)
    middle = n - 2
    ranks = [1 if j % 2 == 0 else 0 for j in range(2 * (n - 2) + 1)]
    partial = sum((-1) ** j * rk for j, rk in enumerate(ranks) if j != middle)
    # chi_v = partial + (-1)^middle * rank_middle
    rank_middle = (chi_v - partial) * (1 if middle % 2 == 0 else -1)
    if rank_middle < 0:
        raise NonIntegralGenus(
            f"inconsistent inputs: middle rank {rank_middle} < 0")
    ranks[middle] = rank_middle
    return tuple(ranks)


# -- family tables ------------------------------------------------------


def family_chi(kind: str, q: int, r: int = 0, j: int = 0) -> int:
    """Fiber Euler characteristic of a named curve family."""
    if kind in ("s1", "s2", "s3"):
        return q ** 3 - 3 * q ** 2 + 3 * q
    if kind == "s4":
        return q * (q ** 2 + q + 1)
    if kind == "s5":
        return q * (q ** 2 + 3 * q + 3)
    if kind == "h_join":
        return q * (1 + (q - 1) * (q - 2 + 2 * (r - j)))
    raise InvalidFamilyParams(f"no closed form for kind {kind!r}")


def attainable_genera(q: int, r: int) -> tuple[int, ...]:
    """Genera realized by the join family at degree q: g0 + k(q-1), k=0..r."""
    g0 = (q - 1) * (q - 2) // 2
    return tuple(g0 + k * (q - 1) for k in range(r + 1))


def genus_table(kind: str, q_values: Iterable[int], r: int = 0) -> list[dict]:
    """Rows of (q, chi_F, genus) for a named family.

    For h_join the table runs over j = r..0 at each q, sweeping the
    attainable genera in steps of q - 1.
    """
    rows = []
    for q in q_values:
        if kind == "h_join":
            for j in range(r, -1, -1):
                chi = family_chi(kind, q, r, j)
                rows.append({"q": q, "j": j, "chi_F": chi,
                             "genus": genus_from_chi(chi, q)})
        else:
            chi = family_chi(kind, q, r)
            rows.append({"q": q, "chi_F": chi,
                         "genus": genus_from_chi(chi, q)})
    return rows


def curve_invariants(kind: str, q: int, r: int = 0, j: int = 0) -> CurveInvariants:
    """Assembled invariant record for a named curve family (n = 3)."""
    chi = family_chi(kind, q, r, j)
    genus = genus_from_chi(chi, q)
    cc, chi_v = chi_relations(chi, q, 3)
    return CurveInvariants(
        q=q, r=r, chi_F=chi, milnor=chi - 1, genus=genus, chi_V=chi_v,
        chi_complement=cc, zeta_exponent=-chi // q,
        homology=homology_pattern(3, chi, q))
