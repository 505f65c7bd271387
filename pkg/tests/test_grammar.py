"""Parser and canonical formatter, including the exact round trip."""

import numpy as np
import pytest

from mixedpoly import MixedPolynomial, format_poly, parse
from mixedpoly.errors import ParseError

P = MixedPolynomial


class TestParse:
    def test_two_cusp_curve(self):
        f = parse("z1^3*conj(z1) + z2^3*conj(z2)")
        assert f == P(2, {((3, 0), (1, 0)): 1.0, ((0, 3), (0, 1)): 1.0})

    def test_coefficient_polynomial(self):
        f = parse("-2*z1^2*conj(z1) + 3*z1^2 + 1")
        assert f == P(1, {((2,), (1,)): -2.0, ((2,), (0,)): 3.0,
                          ((0,), (0,)): 1.0})

    def test_complex_literal(self):
        f = parse("(1+2i)*z1")
        assert f == P(1, {((1,), (0,)): 1 + 2j})

    def test_imaginary_forms(self):
        assert parse("i") == P.constant(1, 1j)
        assert parse("2.5i") == P.constant(1, 2.5j)
        assert parse("1e-3i") == P.constant(1, 1e-3j)

    def test_conj_exponent_binds_to_variable(self):
        assert parse("conj(z1)^2") == P(1, {((0,), (2,)): 1.0})

    def test_parenthesized_expressions(self):
        f = parse("(z1 - z2)*(conj(z1) + conj(z2))")
        assert f == P(2, {((1, 0), (1, 0)): 1.0, ((1, 0), (0, 1)): 1.0,
                          ((0, 1), (1, 0)): -1.0, ((0, 1), (0, 1)): -1.0})

    def test_variable_count_from_max_index(self):
        assert parse("z3 + 1").n == 3
        assert parse("42").n == 1

    def test_explicit_variable_count(self):
        assert parse("z1 + 1", n=3).n == 3
        with pytest.raises(ParseError):
            parse("z3", n=2)

    def test_power_of_parenthesized(self):
        assert parse("(z1 + 1)^2") == P(1, {((2,), (0,)): 1.0,
                                            ((1,), (0,)): 2.0,
                                            ((0,), (0,)): 1.0})

    def test_errors_carry_position(self):
        for text, pos in (("z1 +", 4), ("z1 ** z2", 4), ("conj(3)", 5),
                          ("2 @ z1", 2), ("z1^-2", 3), ("z1 z2", 3)):
            with pytest.raises(ParseError) as err:
                parse(text)
            assert err.value.position == pos

    def test_juxtaposition_forbidden(self):
        with pytest.raises(ParseError):
            parse("2z1")


class TestFormat:
    def test_zero(self):
        assert format_poly(P.zero(2)) == "0"

    def test_abs_square(self):
        assert format_poly(parse("z1*conj(z1)")) == "z1*conj(z1)"

    def test_leading_minus(self):
        assert format_poly(parse("-2*z1^2*conj(z1) + 3*z1^2 + 1")) == \
            "1 + 3*z1^2 - 2*z1^2*conj(z1)"

    def test_unit_coefficients_dropped(self):
        # terms print in ascending lexicographic exponent order
        assert format_poly(parse("1*z1 - 1*z2")) == "-z2 + z1"

    def test_complex_coefficients_parenthesized(self):
        text = format_poly(parse("(1+2i)*z1 + (0.5-1i)*z2"))
        assert text == "(0.5-1i)*z2 + (1+2i)*z1"

    def test_canonicalization_idempotent(self):
        text = "z2*z1 + z1*z2 + 3"
        once = format_poly(parse(text))
        assert format_poly(parse(once)) == once
        assert once == "3 + 2*z1*z2"


def random_poly(rng):
    n = int(rng.integers(1, 4))
    terms = {}
    for i in range(int(rng.integers(1, 8))):
        nu = [int(x) for x in rng.integers(0, 5, n)]
        mu = tuple(int(x) for x in rng.integers(0, 5, n))
        if i == 0:
            nu[-1] = max(nu[-1], 1)  # text cannot express unused variables
        kind = rng.integers(0, 4)
        if kind == 0:
            c = complex(int(rng.integers(-9, 10)), 0)
        elif kind == 1:
            c = complex(rng.normal(), 0)
        elif kind == 2:
            c = complex(0, rng.normal())
        else:
            c = complex(rng.normal(), rng.normal())
        if c != 0:
            terms[(tuple(nu), mu)] = c
    return P(n, terms) if terms else P.constant(n, 1.0)


class TestRoundTrip:
    def test_five_hundred_random(self):
        rng = np.random.default_rng(71)
        for _ in range(500):
            f = random_poly(rng)
            back = parse(format_poly(f))
            assert back.n == f.n
            assert back.terms == f.terms  # exact coefficient equality

    def test_bit_identical_components(self):
        import struct
        rng = np.random.default_rng(73)
        for _ in range(100):
            f = random_poly(rng)
            back = parse(format_poly(f))
            for (k1, c1), (k2, c2) in zip(f.terms, back.terms):
                assert k1 == k2
                assert struct.pack("d", c1.real) == struct.pack("d", c2.real)
                assert struct.pack("d", c1.imag) == struct.pack("d", c2.imag)
