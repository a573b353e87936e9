from fractions import Fraction

import pytest

from dyckfact.errors import DomainError, NonSplittingError
from dyckfact.polyring import (
    MonicPoly,
    SolutionPair,
    divide_exact,
    expand,
    from_coeffs,
    mul,
    poly_from_json,
    product,
    shift_poly,
    taylor_shift,
)


def P(*roots):
    return MonicPoly(tuple(Fraction(r) for r in roots))


def test_shift_poly_examples():
    assert shift_poly(P(-3, -4), -3) == P(0, -1)
    assert shift_poly(P(), 7) == P()
    assert shift_poly(P(0), 5) == P(-5)


def test_mul_examples():
    assert mul(P(-3, -4), P(0, -1, -2)) == P(-4, -3, -2, -1, 0)
    assert mul(P(1, 2), P()) == P(1, 2)
    assert mul(P(0), P(0)).roots == (0, 0)


def test_divide_exact_examples():
    assert divide_exact(P(-4, -3, -2, -1, 0), P(-3, -4)) == P(0, -1, -2)
    assert divide_exact(P(1, 2), P(1, 2)) == P()
    assert divide_exact(P(0), P(1)) is None
    assert divide_exact(P(0), P(0, 0)) is None


def test_from_coeffs_examples():
    assert from_coeffs([1, -3, 2]) == P(1, 2)
    assert from_coeffs([1, 3, 2, 0]) == P(0, -1, -2)
    with pytest.raises(NonSplittingError) as err:
        from_coeffs([1, 0, 1])
    assert err.value.residual == ["1", "0", "1"]


def test_from_coeffs_rational_and_repeated_roots():
    p = P(Fraction(1, 2), Fraction(1, 2), -3, Fraction(-2, 7))
    assert from_coeffs(p.coeffs) == p


def test_from_coeffs_partial_split_reports_residual():
    # (u - 1)(u^2 - 2): the rational root comes out, the quadratic is left over
    with pytest.raises(NonSplittingError) as err:
        from_coeffs([1, -1, -2, 2])
    assert err.value.residual == ["1", "0", "-2"]


def test_from_coeffs_requires_monic():
    with pytest.raises(DomainError):
        from_coeffs([2, 1])


def test_coeffs_and_evaluation():
    p = P(-3, -4)
    assert list(p.coeffs) == [1, 7, 12]
    assert p(1) == 20
    assert expand([]) == [1]


def test_taylor_shift_matches_root_shift():
    p = P(1, Fraction(-2, 3), 5)
    for c in (Fraction(0), Fraction(3), Fraction(-7, 2)):
        assert taylor_shift(list(p.coeffs), c) == list(p.shift(c).coeffs)


def test_poly_json():
    p = P(-3, -4)
    assert p.to_json() == {"roots": ["-4", "-3"]}
    assert poly_from_json({"coeffs": ["1", "7", "12"]}) == p
    assert poly_from_json(p.to_json()) == p
    with pytest.raises(DomainError):
        poly_from_json({})


def test_str():
    assert str(P(-3, -4)) == "(u+4)(u+3)"
    assert str(P(0, 0, Fraction(1, 2))) == "u^2(u-1/2)"
    assert str(P()) == "1"


def test_solution_pair_algebra():
    a = SolutionPair.from_roots([1], [2])
    b = SolutionPair.from_roots([3], [])
    assert (a * b).divide_exact(b) == a
    assert a.divide_exact(b) is None
    assert product([a, b, SolutionPair()]) == a * b
    assert SolutionPair().is_trivial and (a * b).degree == 3
    assert SolutionPair.from_json(a.to_json()) == a
    with pytest.raises(DomainError):
        SolutionPair.from_json({"p1": {"roots": []}})
