import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from kbound.exact import (
    EuclidSplit,
    Poly,
    binom,
    euclid_split,
    parse_rat,
    rat_str,
    sign_certificate,
)

rationals = st.fractions(
    min_value=Fraction(-1000), max_value=Fraction(1000), max_denominator=50
)


# euclid_split ---------------------------------------------------------------

def test_euclid_split_examples():
    assert euclid_split(17, 4) == EuclidSplit(17, 4, 4, 1)
    assert euclid_split(35, 5) == EuclidSplit(35, 5, 7, 0)
    # the d = 18 split d - 1 = 3m + eps
    assert euclid_split(17, 3) == EuclidSplit(17, 3, 5, 2)


def test_euclid_split_rejects_bad_modulus():
    with pytest.raises(ValueError):
        euclid_split(5, 0)
    with pytest.raises(ValueError):
        euclid_split(5, -3)


@given(st.integers(-10**12, 10**12), st.integers(1, 10**6))
def test_euclid_split_reconstruction(dividend, modulus):
    s = euclid_split(dividend, modulus)
    assert s.dividend == s.quotient * s.modulus + s.remainder
    assert 0 <= s.remainder <= s.modulus - 1


# binom ----------------------------------------------------------------------

def test_binom_examples():
    assert binom(9, 3) == 84
    assert binom(2, 3) == 0
    assert binom(5, 2) == 10


@given(st.integers(0, 60), st.integers(0, 60))
def test_binom_pascal(n, k):
    assert binom(n + 1, k + 1) == binom(n, k) + binom(n, k + 1)


def test_binom_rejects_negative():
    with pytest.raises(ValueError):
        binom(-1, 2)


# rationals ------------------------------------------------------------------

def test_rat_serialization():
    assert rat_str(Fraction(3, 4)) == "3/4"
    assert rat_str(Fraction(-3, 4)) == "-3/4"
    assert rat_str(Fraction(8, 4)) == "2"
    assert rat_str(5) == "5"
    assert parse_rat("22/7") == Fraction(22, 7)
    assert parse_rat("-9") == Fraction(-9)


@given(rationals, rationals, rationals)
def test_rat_field_laws(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a + b == b + a
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c


@given(rationals)
def test_rat_normalization_idempotent(a):
    again = Fraction(a.numerator, a.denominator)
    assert again.numerator == a.numerator and again.denominator == a.denominator
    assert a.denominator > 0
    assert parse_rat(rat_str(a)) == a


# Poly -----------------------------------------------------------------------

def test_poly_basics():
    p = Poly.of(1, 0, -2)  # 1 - 2x^2
    assert p.degree == 2
    assert p.leading == -2
    assert p(3) == 1 - 18
    assert Poly.of(0, 0, 0).is_zero
    assert Poly.of(1, 2, 0).degree == 1  # trailing zeros trimmed


def test_poly_text():
    assert Poly.of(0, -28, Fraction(4, 5)).text() == "4/5*d^2 - 28*d"
    assert Poly.zero().text() == "0"
    assert Poly.of(-23, 27, -10, 1).text("r") == "r^3 - 10*r^2 + 27*r - 23"


polys = st.lists(rationals, min_size=0, max_size=6).map(Poly.from_coeffs)


@given(polys, polys, st.integers(-50, 50))
def test_poly_eval_is_ring_homomorphism(p, q, x):
    assert (p + q)(x) == p(x) + q(x)
    assert (p * q)(x) == p(x) * q(x)
    assert (p - q)(x) == p(x) - q(x)


@given(polys, polys, st.integers(-20, 20))
def test_poly_compose_matches_eval(p, q, x):
    assert p.compose(q)(x) == p(q(x))


@given(polys, polys, st.integers(-20, 20))
def test_poly_derivative_product_rule(p, q, x):
    lhs = (p * q).derivative()
    rhs = p.derivative() * q + p * q.derivative()
    assert lhs(x) == rhs(x)


@given(st.lists(st.integers(-30, 30), min_size=1, max_size=5))
def test_cauchy_bound_dominates_integer_roots(roots):
    # p = prod (x - r): every root must lie within the computed tail bound.
    p = Poly.of(1)
    for r in roots:
        p = p * Poly.of(-r, 1)
    n = p.cauchy_tail_bound()
    assert n >= max(abs(r) for r in roots)
    # beyond the bound the sign is the leading coefficient's
    assert p(n + 1) > 0


# sign certificates ----------------------------------------------------------

def test_sign_certificate_simple_positive():
    cert = sign_certificate(Poly.of(-1, 0, 1), 2, "positive")  # d^2 - 1
    assert cert.ok
    assert cert.counterexample is None


def test_sign_certificate_cubic_in_r():
    p = Poly.of(-23, 27, -10, 1)  # r^3 - 10r^2 + 27r - 23
    assert p(7) == 19
    cert = sign_certificate(p, 7, "positive", variable="r")
    assert cert.ok
    assert cert.tail_bound >= 1 + 27  # Cauchy bound honours max |c_i/c_lead|


def test_sign_certificate_reduction_quadratic():
    # 3d^2 - 17d - 22(g - 1) with g = d^2/10 + d/2 + 1 is (4/5)d^2 - 28d
    g = Poly.of(1, Fraction(1, 2), Fraction(1, 10))
    p = Poly.of(0, -17, 3) - 22 * (g - 1)
    assert p == Poly.of(0, -28, Fraction(4, 5))
    # oracle: direct evaluation at every d in 36..100
    assert all(p(d) > 0 for d in range(36, 101))
    cert = sign_certificate(p, 36, "positive")
    assert cert.ok
    assert cert.scan_to >= 36


def test_sign_certificate_least_counterexample():
    cert = sign_certificate(Poly.of(-100, 0, 1), 0, "positive")  # d^2 - 100
    assert cert.counterexample == 0  # least violation in the scan
    cert = sign_certificate(Poly.of(-100, 0, 1), 5, "nonnegative")
    assert cert.counterexample == 5


def test_sign_certificate_tail_mismatch_yields_witness():
    cert = sign_certificate(Poly.of(3, -1), 0, "positive")  # 3 - d
    assert not cert.ok
    assert cert.polynomial(cert.counterexample) <= 0


def test_sign_certificate_rejects_zero_poly_and_bad_sign():
    with pytest.raises(ValueError):
        sign_certificate(Poly.zero(), 0, "positive")
    with pytest.raises(ValueError):
        sign_certificate(Poly.of(1), 0, "sometimes-positive")


def test_sign_certificate_constant_polys():
    assert sign_certificate(Poly.of(5), -3, "positive").ok
    assert not sign_certificate(Poly.of(-5), 0, "nonnegative").ok


@pytest.mark.parametrize(
    "coeffs,start,sign",
    [
        ((0, -28, Fraction(4, 5)), 36, "positive"),
        ((-23, 27, -10, 1), 7, "positive"),
        ((174, -125, 24, -1), 25, "negative"),
        ((35, -22, 3), 6, "positive"),
    ],
)
def test_certified_claims_survive_random_sampling(coeffs, start, sign):
    # A certificate with no counterexample must survive brute-force
    # evaluation at 1000 random integers far beyond the scanned range.
    p = Poly.from_coeffs(coeffs)
    cert = sign_certificate(p, start, sign)
    assert cert.ok
    holds = {
        "positive": lambda v: v > 0,
        "nonnegative": lambda v: v >= 0,
        "negative": lambda v: v < 0,
        "nonpositive": lambda v: v <= 0,
    }[sign]
    rng = random.Random(20240 + start)
    for _ in range(1000):
        x = rng.randint(start, start + 10**6)
        assert holds(p(x))


def test_sign_certificate_json_shape():
    cert = sign_certificate(Poly.of(-1, 0, 1), 2, "positive")
    payload = cert.to_json_dict()
    assert payload["from"] == 2
    assert payload["scanned_range"][0] == 2
    assert payload["asserted_sign"] == "positive"
    assert payload["counterexample"] is None
    assert payload["polynomial"] == ["-1", "0", "1"]
