from fractions import Fraction

import pytest

from dyckfact.errors import DomainError
from dyckfact.exactnum import (
    LatticeCoord,
    ShiftPair,
    as_rat,
    coset_base,
    decompose,
    derive_mn,
    format_rat,
    lattice_member,
    recompose,
    root_key,
    same_coset,
    xi,
)


def test_as_rat_accepts_exact_forms():
    assert as_rat("-3/6") == Fraction(-1, 2)
    assert as_rat(4) == 4
    assert as_rat(Fraction(2, 3)) == Fraction(2, 3)


@pytest.mark.parametrize("bad", ["0.5", "1e3", "", "x", "1/0"])
def test_as_rat_rejects_inexact_or_garbage(bad):
    with pytest.raises(DomainError):
        as_rat(bad)


def test_as_rat_refuses_floats():
    with pytest.raises(TypeError):
        as_rat(0.5)


def test_format_rat():
    assert format_rat(Fraction(-6, 4)) == "-3/2"
    assert format_rat(Fraction(8, 4)) == "2"


@pytest.mark.parametrize(
    "a1,a2,mn",
    [(2, -3, (3, 2)), (5, -3, (3, 5)), (-5, 3, (3, 5)), (1, 1, None), ("1/2", "-1/3", (2, 3))],
)
def test_derive_mn(a1, a2, mn):
    assert derive_mn(a1, a2) == mn
    if mn:
        m, n = mn
        assert m * as_rat(a1) + n * as_rat(a2) == 0


def test_shift_pair_rejects_zero():
    with pytest.raises(DomainError):
        ShiftPair(0, 3)


def test_gamma_generates_both_shifts():
    sp = ShiftPair(2, -3)
    assert sp.gamma == -1
    assert sp.alpha1 == -sp.n * sp.gamma and sp.alpha2 == sp.m * sp.gamma


def test_lattice_member():
    sp = ShiftPair(2, -3)
    assert lattice_member(sp, 1)
    assert not lattice_member(sp, Fraction(1, 2))
    assert lattice_member(ShiftPair(-5, 3), 0)


def test_decompose_examples():
    sp = ShiftPair(-5, 3)
    assert decompose(sp, -10) == LatticeCoord(2, 0)
    assert decompose(sp, -17) == LatticeCoord(1, -4)
    assert decompose(sp, 0) == LatticeCoord(0, 0)
    with pytest.raises(DomainError):
        decompose(ShiftPair(2, -3), Fraction(1, 2))


def test_xi_examples():
    sp = ShiftPair(-5, 3)
    assert xi(sp, LatticeCoord(2, 0)) == 2
    assert xi(sp, LatticeCoord(1, -4)) == -11
    assert xi(sp, LatticeCoord(0, 0)) == 0


@pytest.mark.parametrize("shifts", [(2, -3), (-5, 3), (5, -3), ("3/2", "-1/2"), (-4, 6)])
def test_decompose_round_trip_and_xi_bijective(shifts):
    sp = ShiftPair(*shifts)
    values = [k * sp.gamma for k in range(-40, 41)]
    xis = set()
    for v in values:
        c = decompose(sp, v)
        assert 0 <= c.r < sp.m
        assert recompose(sp, c) == v
        xis.add(xi(sp, c))
    assert len(xis) == len(values)


def test_coset_base_and_root_key():
    sp = ShiftPair(-4, 6)  # gamma = 2
    assert coset_base(sp, -5) == 1
    assert coset_base(sp, Fraction(7, 2)) == Fraction(3, 2)
    assert same_coset(sp, -5, 3) and not same_coset(sp, 0, 1)
    # total order: distinct values get distinct keys
    vals = [Fraction(k, 2) for k in range(-30, 30)]
    assert len({root_key(sp, v) for v in vals}) == len(vals)
