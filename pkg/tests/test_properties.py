"""Randomized property suites, 500 examples each."""

from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from dyckfact.exactnum import ShiftPair
from dyckfact.paths import enumerate_dyck, path_to_word, word_to_path
from dyckfact.polyring import SolutionPair, product
from dyckfact.solutions import fundamental, fundamental_from_word, partial_sums, rescale, verify
from dyckfact.words import shift

from oracles import satisfies_multiset

PROPS = settings(max_examples=500, deadline=None, derandomize=True)

MN = [(1, 1), (2, 1), (1, 2), (3, 2), (2, 3), (3, 5), (4, 3), (5, 2)]
rationals = st.fractions(min_value=-6, max_value=6, max_denominator=4)
nonzero = rationals.filter(lambda q: q != 0)


@st.composite
def shift_pairs(draw):
    m, n = draw(st.sampled_from(MN))
    gamma = draw(nonzero)
    return ShiftPair(-n * gamma, m * gamma)


@st.composite
def fundamentals(draw, sp):
    d = draw(st.sampled_from(enumerate_dyck(sp.m, sp.n)))
    # mostly in the lattice, sometimes in another coset
    lam = draw(st.one_of(st.integers(-4, 4).map(lambda k: k * sp.gamma), rationals))
    return fundamental(sp, d, lam).pair


@st.composite
def solutions(draw, sp, max_factors=3):
    k = draw(st.integers(0, max_factors))
    return product(draw(fundamentals(sp)) for _ in range(k))


@st.composite
def sp_and_two_solutions(draw):
    sp = draw(shift_pairs())
    return sp, draw(solutions(sp)), draw(solutions(sp))


@PROPS
@given(sp_and_two_solutions())
def test_monoid_closure(data):
    sp, s, t = data
    assert verify(sp, s) and verify(sp, t)
    assert verify(sp, s * t)
    assert verify(sp, SolutionPair() * s)


@st.composite
def divisibility_case(draw):
    sp = draw(shift_pairs())
    s = draw(solutions(sp))
    if draw(st.booleans()):
        q = draw(solutions(sp))
    else:
        q = SolutionPair.from_roots(draw(st.lists(rationals, max_size=3)), draw(st.lists(rationals, max_size=3)))
    return sp, s, q


@PROPS
@given(divisibility_case())
def test_divisibility(data):
    sp, s, q = data
    if verify(sp, s * q):
        assert verify(sp, q)
    # independent check of the same equation on root multisets
    sq = s * q
    assert verify(sp, sq) == satisfies_multiset(sp.alpha1, sp.alpha2, sq.p1.roots, sq.p2.roots)


@st.composite
def rescale_case(draw):
    sp = draw(shift_pairs())
    if draw(st.booleans()):
        s = draw(solutions(sp))
    else:
        s = SolutionPair.from_roots(draw(st.lists(rationals, max_size=3)), draw(st.lists(rationals, max_size=3)))
    return sp, s, draw(nonzero)


@PROPS
@given(rescale_case())
def test_rescaling_bijection(data):
    sp, s, g = data
    sp2, s2 = rescale(sp, s, g)
    assert verify(sp2, s2) == verify(sp, s)
    assert rescale(sp2, s2, 1 / g) == (sp, s)
    # γ^{-d} p(γu) evaluated pointwise agrees with the rescaled polynomial
    for x in (Fraction(0), Fraction(1), Fraction(-2, 3)):
        assert s2.p1(x) == s.p1(g * x) / g ** s.p1.degree
        assert s2.p2(x) == s.p2(g * x) / g ** s.p2.degree


@st.composite
def word_in_M(draw):
    sp = draw(shift_pairs())
    blocks = draw(st.lists(st.sampled_from(enumerate_dyck(sp.m, sp.n)), min_size=1, max_size=3))
    letters = list("".join(d.word for d in blocks))
    letters = draw(st.permutations(letters))
    return sp, "".join(letters)


@PROPS
@given(word_in_M(), st.integers(0, 40))
def test_shift_law(data, k):
    sp, w = data
    k %= len(w)
    eta = partial_sums(sp, w)[k - 1] if k else 0
    assert fundamental_from_word(sp, shift(w, k)) == fundamental_from_word(sp, w).shift(eta)


@PROPS
@given(st.text(alphabet="12", max_size=30))
def test_word_path_bijection(w):
    pts = word_to_path(w)
    assert path_to_word(pts) == w
    assert word_to_path(path_to_word(pts)) == pts
    assert pts[-1] == (w.count("1"), w.count("2"))


@st.composite
def irreducible(draw):
    sp = draw(shift_pairs())
    return sp, draw(fundamentals(sp))


@PROPS
@given(irreducible())
def test_irreducible_fundamentals_are_squarefree(data):
    sp, s = data
    assert len(set(s.all_roots())) == sp.m + sp.n == s.degree
