"""Splitting solutions into irreducible fundamentals.

Pipeline: triviality test, coset split modulo Γ, then per coset a greedy walk
that peels off the south-east-most cylindrical Dyck path until nothing is
left.  The resulting per-coset lists are ≼-nondecreasing and unique.
"""

from __future__ import annotations

import enum
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Dict, List, Tuple

from .errors import DomainError, NotASolutionError
from .exactnum import ShiftPair, as_rat, coset_base, format_rat, root_key
from .paths import DyckPath, canonical_orbit_rep, cyl_leq, cyl_path, zero_area_path
from .polyring import SolutionPair, product
from .solutions import fundamental, fundamental_from_word, partial_sums, verify
from .words import in_M


class Triviality(enum.Enum):
    TRIVIAL = "trivial"
    NONTRIVIAL_IMPOSSIBLE = "nontrivial-impossible"
    NOT_A_SOLUTION = "not-a-solution"
    ELIGIBLE = "eligible"


def triviality_check(sp: ShiftPair, s: SolutionPair) -> Triviality:
    if s.is_trivial:
        return Triviality.TRIVIAL
    if not sp.resonant:
        # no positive relation between the shifts: (1, 1) is the only solution
        assert not verify(sp, s)
        return Triviality.NONTRIVIAL_IMPOSSIBLE
    if not verify(sp, s):
        return Triviality.NOT_A_SOLUTION
    return Triviality.ELIGIBLE


def _require_solution(sp: ShiftPair, s: SolutionPair) -> None:
    sp.require_mn()
    if not verify(sp, s):
        raise NotASolutionError(f"{s} does not satisfy the functional equation")


def find_fundamental_divisor(sp: ShiftPair, s: SolutionPair) -> Tuple[str, Fraction]:
    """Chase roots until the walk repeats; the loop is a dividing fundamental.

    Starts at the root of p1·p2 that is least under ``root_key`` and prefers
    the step labelled 1 whenever both steps are available.
    """
    _require_solution(sp, s)
    if s.is_trivial:
        raise DomainError("the trivial solution has no fundamental divisor")
    q1, q2 = set(s.p1.roots), set(s.p2.roots)
    lam = min(s.all_roots(), key=lambda r: root_key(sp, r))
    steps: List[str] = []
    seen = {lam: 0}
    while True:
        # λ_k is a root of q1(u+α2)·q2(u+α1): either λ_k+α1 ∈ Z(q2) or λ_k+α2 ∈ Z(q1)
        if lam + sp.alpha1 in q2:
            steps.append("1")
            lam += sp.alpha1
        elif lam + sp.alpha2 in q1:
            steps.append("2")
            lam += sp.alpha2
        else:
            raise AssertionError("root chase stalled on a verified solution")
        if lam in seen:
            r = seen[lam]
            word = "".join(steps[r:])
            assert in_M(sp, word)
            return word, lam
        seen[lam] = len(steps)


def factor_completely(sp: ShiftPair, s: SolutionPair) -> List[Tuple[str, Fraction]]:
    """Some factorization into irreducible fundamentals, by repeated root chasing."""
    _require_solution(sp, s)
    out = []
    rest = s
    while not rest.is_trivial:
        word, lam = find_fundamental_divisor(sp, rest)
        quotient = rest.divide_exact(fundamental_from_word(sp, word).shift(-lam))
        assert quotient is not None and quotient.degree < rest.degree
        out.append((word, lam))
        rest = quotient
    return out


def c_integral_split(sp: ShiftPair, s: SolutionPair) -> Dict[Fraction, SolutionPair]:
    """Group roots by coset of Γ; keys are each part's least root under ``root_key``.

    Entries are ordered by the canonical point of the coset.
    """
    sp.require_mn()
    groups: Dict[Fraction, Tuple[list, list]] = defaultdict(lambda: ([], []))
    for idx, poly in ((0, s.p1), (1, s.p2)):
        for r in poly.roots:
            groups[coset_base(sp, r)][idx].append(r)
    out: Dict[Fraction, SolutionPair] = {}
    for base in sorted(groups):
        roots1, roots2 = groups[base]
        part = SolutionPair.from_roots(roots1, roots2)
        out[min(part.all_roots(), key=lambda r: root_key(sp, r))] = part
    return out


@dataclass
class Factorization:
    """Per-coset ≼-ordered lists of (Dyck path, λ)."""

    sp: ShiftPair
    cosets: List[Tuple[Fraction, List[Tuple[DyckPath, Fraction]]]] = field(default_factory=list)

    def factors(self) -> List[Tuple[DyckPath, Fraction]]:
        return [f for _, fs in self.cosets for f in fs]

    def product(self) -> SolutionPair:
        return product(fundamental(self.sp, d, lam).pair for d, lam in self.factors())

    def to_json(self) -> dict:
        return {
            "cosets": [
                {
                    "representative": format_rat(rep),
                    "factors": [{"word": d.word, "lambda": format_rat(lam)} for d, lam in fs],
                }
                for rep, fs in self.cosets
            ]
        }

    @classmethod
    def from_json(cls, sp: ShiftPair, obj: dict) -> "Factorization":
        try:
            cosets = [
                (
                    as_rat(entry["representative"]),
                    [(DyckPath(f["word"]), as_rat(f["lambda"])) for f in entry["factors"]],
                )
                for entry in obj["cosets"]
            ]
        except (KeyError, TypeError) as exc:
            raise DomainError(f"malformed factorization JSON: {exc}") from exc
        return cls(sp, cosets)


def _peel_minimal(sp: ShiftPair, part: SolutionPair) -> Tuple[DyckPath, Fraction]:
    # The least root under root_key sits on the south-east envelope of the part's
    # lifted support, and going right whenever the support allows traces that envelope.
    m, n = sp.require_mn()
    support = set(part.all_roots())
    start = min(support, key=lambda r: root_key(sp, r))
    v = start
    letters = []
    for _ in range(m + n):
        if v + sp.alpha1 in support:
            letters.append("1")
            v += sp.alpha1
        else:
            letters.append("2")
            v += sp.alpha2
    if v != start or not in_M(sp, "".join(letters)):
        raise DomainError("greedy walk did not close up; input is not a solution")
    word = "".join(letters)
    k, d = canonical_orbit_rep(sp, word)
    lam = start + (partial_sums(sp, word)[k - 1] if k else 0)
    return d, lam


def _factor_part(sp: ShiftPair, part: SolutionPair) -> List[Tuple[DyckPath, Fraction]]:
    out = []
    rest = part
    while not rest.is_trivial:
        d, lam = _peel_minimal(sp, rest)
        quotient = rest.divide_exact(fundamental(sp, d, lam).pair)
        if quotient is None:
            raise DomainError(f"fundamental ({d.word}, {format_rat(lam)}) does not divide {rest}")
        out.append((d, lam))
        rest = quotient
    return out


def canonical_factorization(sp: ShiftPair, s: SolutionPair) -> Factorization:
    _require_solution(sp, s)
    fact = Factorization(sp)
    for rep, part in c_integral_split(sp, s).items():
        factors = _factor_part(sp, part)
        origin = rep
        for (d0, l0), (d1, l1) in zip(factors, factors[1:]):
            assert cyl_leq(cyl_path(sp, d0, l0, origin), cyl_path(sp, d1, l1, origin))
        fact.cosets.append((rep, factors))
    return fact


def _check_opposite_integers(alpha1: int, alpha2: int) -> None:
    if int(alpha1) != alpha1 or int(alpha2) != alpha2:
        raise DomainError("multiquiver shifts must be integers")
    if alpha1 == 0 or alpha2 == 0 or (alpha1 > 0) == (alpha2 > 0):
        raise DomainError("multiquiver shifts must be nonzero integers of opposite sign")


def multiquiver_solution(alpha1: int, alpha2: int) -> SolutionPair:
    """t_i = u(u+1)...(u+α_i-1) for α_i > 0 and (u-1)...(u-|α_i|) for α_i < 0."""
    _check_opposite_integers(alpha1, alpha2)

    def t(a: int) -> List[int]:
        return [-j for j in range(a)] if a > 0 else list(range(1, -a + 1))

    return SolutionPair.from_roots(t(int(alpha1)), t(int(alpha2)))


def multiquiver_shifts(alpha1: int, alpha2: int) -> List[Fraction]:
    """λ of the gcd(α1, α2) zero-area factors of the multiquiver solution.

    For α1 < 0 < α2 these are -(α2 - j), j = 1..gcd; mirrored, for
    α2 < 0 < α1 they are 1 - j - α2.
    """
    _check_opposite_integers(alpha1, alpha2)
    alpha1, alpha2 = int(alpha1), int(alpha2)
    g = gcd(alpha1, alpha2)
    if alpha1 < 0:
        return [Fraction(j - alpha2) for j in range(1, g + 1)]
    return [Fraction(1 - j - alpha2) for j in range(1, g + 1)]


def multiquiver_factorization(alpha1: int, alpha2: int) -> Factorization:
    """Canonical factorization of the multiquiver solution, checked against the zero-area form."""
    _check_opposite_integers(alpha1, alpha2)
    alpha1, alpha2 = int(alpha1), int(alpha2)
    sp = ShiftPair(alpha1, alpha2)
    fact = canonical_factorization(sp, multiquiver_solution(alpha1, alpha2))
    pi0 = zero_area_path(sp.m, sp.n)
    expected = Counter((pi0, lam) for lam in multiquiver_shifts(alpha1, alpha2))
    got = Counter(fact.factors())
    if got != expected or any(len(fs) != 1 for _, fs in fact.cosets):
        raise AssertionError(f"multiquiver factorization {fact.to_json()} is not the zero-area form")
    return fact


def reconstruct(sp: ShiftPair, factors: List[Tuple[DyckPath, Fraction]]) -> SolutionPair:
    return product(fundamental(sp, d, lam).pair for d, lam in factors)
