from math import gcd

import pytest

from dyckfact.errors import BoundExceededError, InvalidPathError
from dyckfact.exactnum import LatticeCoord, ShiftPair
from dyckfact.paths import (
    CylPath,
    DyckPath,
    area,
    canonical_orbit_rep,
    cyl_leq,
    cyl_path,
    enumerate_dyck,
    is_dyck,
    max_size_bound,
    path_to_word,
    render_path,
    word_to_path,
    zero_area_path,
)

from oracles import area_shapely, dyck_words_bruteforce, south_east_of

COPRIME = [(m, n) for m in range(1, 8) for n in range(1, 8) if gcd(m, n) == 1 and m + n <= 9]


def test_word_path_examples():
    pts = ((0, 0), (0, 1), (1, 1), (1, 2), (2, 2), (3, 2))
    assert word_to_path("21211") == pts
    assert path_to_word(pts) == "21211"
    assert word_to_path("") == ((0, 0),)
    assert path_to_word(((0, 0),)) == ""
    assert word_to_path("12") == ((0, 0), (1, 0), (1, 1))


def test_path_to_word_rejects_diagonal_steps():
    with pytest.raises(InvalidPathError):
        path_to_word([(0, 0), (1, 1)])


def test_is_dyck_figure_paths():
    # endpoint (4, 5): one path stays above 4y = 5x, the other crosses it
    assert is_dyck(word_to_path("222112121"))
    assert not is_dyck(word_to_path("122112212"))
    assert is_dyck(word_to_path("21211"))


def test_dyck_path_validates():
    with pytest.raises(InvalidPathError):
        DyckPath("12")
    with pytest.raises(InvalidPathError):
        DyckPath("")
    assert DyckPath("21").to_json() == {"word": "21"}


def test_enumerate_examples():
    assert [d.word for d in enumerate_dyck(1, 1)] == ["21"]
    assert [d.word for d in enumerate_dyck(3, 2)] == ["21211", "22111"]
    assert len(enumerate_dyck(3, 5)) == 7


@pytest.mark.parametrize("m,n", COPRIME)
def test_enumerate_matches_bruteforce(m, n):
    assert [d.word for d in enumerate_dyck(m, n)] == dyck_words_bruteforce(m, n)


def test_enumeration_bound(monkeypatch):
    with pytest.raises(BoundExceededError):
        enumerate_dyck(3, 2, max_size=4)
    monkeypatch.setenv("DYCKFACT_MAX_SIZE", "4")
    assert max_size_bound() == 4
    with pytest.raises(BoundExceededError):
        enumerate_dyck(3, 2)
    assert max_size_bound(10) == 10


def test_canonical_orbit_rep_examples():
    sp = ShiftPair(2, -3)
    assert canonical_orbit_rep(sp, "12112") == (4, DyckPath("21211"))
    assert canonical_orbit_rep(sp, "21211") == (0, DyckPath("21211"))
    assert canonical_orbit_rep(ShiftPair(-1, 1), "12") == (1, DyckPath("21"))
    with pytest.raises(InvalidPathError):
        canonical_orbit_rep(sp, "2121121211")


def test_area_examples():
    assert area("21211") == 0
    assert area("22111") == 1
    assert area("21") == 0


@pytest.mark.parametrize("m,n", COPRIME)
def test_area_matches_geometry(m, n):
    for d in enumerate_dyck(m, n):
        assert area(d) == area_shapely(d.word)


@pytest.mark.parametrize("m,n,word", [(3, 2, "21211"), (1, 1, "21"), (2, 1, "211")])
def test_zero_area_examples(m, n, word):
    assert zero_area_path(m, n).word == word


def test_cyl_path_base():
    sp = ShiftPair(-5, 3)
    assert cyl_path(sp, "22212211", -10, 0).base == LatticeCoord(2, 0)
    with pytest.raises(InvalidPathError):
        CylPath(DyckPath("21211"), (3, 0))


def test_partial_order_example():
    sp = ShiftPair(-5, 3)
    for z0 in (0, -17):
        p1 = cyl_path(sp, "22212211", -10, z0)
        p2 = cyl_path(sp, "22222111", -17, z0)
        p3 = cyl_path(sp, "22221211", -16, z0)
        assert cyl_leq(p3, p1)
        assert not cyl_leq(p1, p3)
        for other in (p1, p3):
            assert not cyl_leq(p2, other) and not cyl_leq(other, p2)
        assert all(cyl_leq(p, p) for p in (p1, p2, p3))


@pytest.mark.parametrize("m,n", [(3, 2), (2, 3), (3, 5), (4, 3), (1, 1), (2, 1)])
def test_cyl_leq_matches_column_oracle(m, n):
    paths = enumerate_dyck(m, n)
    bases = [(k, l) for k in range(m) for l in range(-2, 3)]
    for a in paths:
        for b in paths:
            for ba in bases:
                for bb in bases:
                    ca, cb = CylPath(a, ba), CylPath(b, bb)
                    assert cyl_leq(ca, cb) == south_east_of(a.word, ba, b.word, bb, m, n)


def test_render_marks_every_path_point():
    d = DyckPath("22111")
    pic = render_path(d).splitlines()
    assert len(pic) == 2 * d.n + 1
    rows = list(reversed(pic))
    for x, y in d.points:
        assert rows[2 * y][2 * x] == "o"
