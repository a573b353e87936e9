"""Fundamental solutions and checks of p1(u)p2(u) = p1(u+α2)p2(u+α1)."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from .errors import DomainError, InvalidPathError
from .exactnum import RatLike, ShiftPair, as_rat, format_rat
from .paths import DyckPath, PathLike, as_dyck, canonical_orbit_rep
from .polyring import MonicPoly, SolutionPair, mul_coeffs, taylor_shift
from .words import WordLike, as_word, in_M


def partial_sums(sp: ShiftPair, w: str) -> Tuple[Fraction, ...]:
    """η_k = α_{i1} + ... + α_{ik} for k = 1..N."""
    total = Fraction(0)
    out = []
    for c in w:
        total += sp.alpha(int(c))
        out.append(total)
    return tuple(out)


def fundamental_from_word(sp: ShiftPair, w: WordLike) -> SolutionPair:
    """P^w: the root η_k goes to component 3 - i_k."""
    w = as_word(w)
    if not in_M(sp, w):
        raise DomainError(f"word {w!r} does not sum to zero under the shifts")
    roots = {1: [], 2: []}
    for c, eta in zip(w, partial_sums(sp, w)):
        roots[3 - int(c)].append(eta)
    return SolutionPair.from_roots(roots[1], roots[2])


def _from_path_points(sp: ShiftPair, d: DyckPath, lam: Fraction) -> SolutionPair:
    # root λ + x_i·α1 + y_i·α2 lands in p1 after an up step and in p2 after a right step
    roots = {1: [], 2: []}
    for (x0, _), (x1, y1) in zip(d.points, d.points[1:]):
        roots[1 if x1 == x0 else 2].append(lam + x1 * sp.alpha1 + y1 * sp.alpha2)
    return SolutionPair.from_roots(roots[1], roots[2])


@dataclass(frozen=True)
class FundamentalSolution:
    path: DyckPath
    lam: Fraction
    pair: SolutionPair

    def to_json(self) -> dict:
        return {"word": self.path.word, "lambda": format_rat(self.lam), **self.pair.to_json()}


def fundamental(sp: ShiftPair, d: PathLike, lam: RatLike = 0) -> FundamentalSolution:
    """P^{d,λ} = P^{word(d)}(u - λ), an irreducible solution."""
    d = as_dyck(d)
    m, n = sp.require_mn()
    if (d.m, d.n) != (m, n):
        raise InvalidPathError(f"path {d.word!r} ends at ({d.m}, {d.n}), expected ({m}, {n})")
    lam = as_rat(lam)
    pair = fundamental_from_word(sp, d.word).shift(-lam)
    assert pair == _from_path_points(sp, d, lam)
    return FundamentalSolution(d, lam, pair)


def satisfies(alpha1: RatLike, alpha2: RatLike, s: SolutionPair) -> bool:
    """Expand both sides of the functional equation and compare coefficients.

    Works for any shifts, zero included.
    """
    p1, p2 = list(s.p1.coeffs), list(s.p2.coeffs)
    lhs = mul_coeffs(p1, p2)
    rhs = mul_coeffs(taylor_shift(p1, as_rat(alpha2)), taylor_shift(p2, as_rat(alpha1)))
    return lhs == rhs


def verify(sp: ShiftPair, s: SolutionPair) -> bool:
    return satisfies(sp.alpha1, sp.alpha2, s)


def equivalent(a: SolutionPair, b: SolutionPair) -> Optional[Fraction]:
    """The b with a_i(u) = b_i(u - b) for both i, or None.

    Equivalently every root of a is the matching root of b plus the shift.
    """
    if (a.p1.degree, a.p2.degree) != (b.p1.degree, b.p2.degree):
        return None
    if a.p1.degree:
        c = a.p1.roots[0] - b.p1.roots[0]
    elif a.p2.degree:
        c = a.p2.roots[0] - b.p2.roots[0]
    else:
        return Fraction(0)
    return c if b.shift(-c) == a else None


def dyck_label(sp: ShiftPair, s: SolutionPair) -> Optional[Tuple[DyckPath, Fraction]]:
    """The unique (d, λ) with fundamental(d, λ) = s, or None if s is not of that form.

    Every root of an irreducible solution is a candidate start; the walk from
    it must retrace the solution root by root.
    """
    m, n = sp.require_mn()
    if s.degree != m + n:
        return None
    for start in s.all_roots():
        word = _trace(sp, s, start, m + n)
        if word is None or not in_M(sp, word):
            continue
        k, d = canonical_orbit_rep(sp, word)
        lam = start + sum((sp.alpha(int(c)) for c in word[:k]), Fraction(0))
        if fundamental(sp, d, lam).pair == s:
            return d, lam
    return None


def _trace(sp: ShiftPair, s: SolutionPair, start: Fraction, length: int) -> Optional[str]:
    p1, p2 = set(s.p1.roots), set(s.p2.roots)
    v = start
    letters = []
    for _ in range(length):
        # step 1 lands on a root of p2, step 2 on a root of p1
        if v + sp.alpha1 in p2:
            letters.append("1")
            v += sp.alpha1
        elif v + sp.alpha2 in p1:
            letters.append("2")
            v += sp.alpha2
        else:
            return None
    return "".join(letters) if v == start else None


class Degenerate(enum.Enum):
    ALL_PAIRS = "R1 x R1"
    FIRST_TRIVIAL = "{1} x R1"
    SECOND_TRIVIAL = "R1 x {1}"


def classify_degenerate(alpha1: RatLike, alpha2: RatLike) -> Degenerate:
    """Solution set when at least one shift vanishes."""
    a1, a2 = as_rat(alpha1), as_rat(alpha2)
    if a1 == 0 and a2 == 0:
        return Degenerate.ALL_PAIRS
    if a1 == 0:
        return Degenerate.FIRST_TRIVIAL
    if a2 == 0:
        return Degenerate.SECOND_TRIVIAL
    raise DomainError("both shifts are nonzero; use the main pipeline")


def rescale(sp: ShiftPair, s: SolutionPair, gamma: RatLike) -> Tuple[ShiftPair, SolutionPair]:
    """(p1(u), p2(u)) -> (γ^-d1 p1(γu), γ^-d2 p2(γu)) with shifts divided by γ."""
    g = as_rat(gamma)
    if g == 0:
        raise DomainError("rescaling factor must be nonzero")
    scaled = SolutionPair(
        MonicPoly(tuple(r / g for r in s.p1.roots)),
        MonicPoly(tuple(r / g for r in s.p2.roots)),
    )
    return ShiftPair(sp.alpha1 / g, sp.alpha2 / g), scaled
