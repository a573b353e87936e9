"""Monic polynomials over Q that split into linear factors.

The root multiset is the source of truth; the coefficient vector (descending
degree, leading 1) is derived on demand for verification and I/O.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import lcm, isqrt
from typing import Iterable, List, Optional, Sequence, Tuple

from .errors import DomainError, NonSplittingError
from .exactnum import RatLike, as_rat, format_rat


def expand(roots: Iterable[Fraction]) -> List[Fraction]:
    """Coefficients of prod (u - r), highest degree first."""
    coeffs = [Fraction(1)]
    for r in roots:
        coeffs = [a - r * b for a, b in zip(coeffs + [Fraction(0)], [Fraction(0)] + coeffs)]
    return coeffs


def mul_coeffs(a: Sequence[Fraction], b: Sequence[Fraction]) -> List[Fraction]:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def taylor_shift(coeffs: Sequence[Fraction], c: Fraction) -> List[Fraction]:
    """Coefficients of p(u + c) by Horner composition."""
    out = [Fraction(0)]
    for a in coeffs:
        # out <- out·(u + c) + a
        out = [x + c * y for x, y in zip(out + [Fraction(0)], [Fraction(0)] + out)]
        out[-1] += a
    return out[1:] if len(out) > 1 else out


def horner(coeffs: Sequence[Fraction], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for a in coeffs:
        acc = acc * x + a
    return acc


@dataclass(frozen=True)
class MonicPoly:
    roots: Tuple[Fraction, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "roots", tuple(sorted(as_rat(r) for r in self.roots)))

    @classmethod
    def one(cls) -> "MonicPoly":
        return cls(())

    @cached_property
    def coeffs(self) -> Tuple[Fraction, ...]:
        return tuple(expand(self.roots))

    @property
    def degree(self) -> int:
        return len(self.roots)

    def __call__(self, x: RatLike) -> Fraction:
        x = as_rat(x)
        value = Fraction(1)
        for r in self.roots:
            value *= x - r
        return value

    def __mul__(self, other: "MonicPoly") -> "MonicPoly":
        return mul(self, other)

    def shift(self, c: RatLike) -> "MonicPoly":
        return shift_poly(self, c)

    def to_json(self) -> dict:
        return {"roots": [format_rat(r) for r in self.roots]}

    def __str__(self) -> str:
        if not self.roots:
            return "1"
        parts = []
        for r, k in sorted(Counter(self.roots).items()):
            if r == 0:
                base = "u"
            elif r > 0:
                base = f"(u-{format_rat(r)})"
            else:
                base = f"(u+{format_rat(-r)})"
            parts.append(base if k == 1 else f"{base}^{k}")
        return "".join(parts)


def shift_poly(p: MonicPoly, c: RatLike) -> MonicPoly:
    """u -> p(u + c); each root r becomes r - c."""
    c = as_rat(c)
    return MonicPoly(tuple(r - c for r in p.roots))


def mul(a: MonicPoly, b: MonicPoly) -> MonicPoly:
    return MonicPoly(a.roots + b.roots)


def divide_exact(a: MonicPoly, b: MonicPoly) -> Optional[MonicPoly]:
    rest = Counter(a.roots)
    rest.subtract(Counter(b.roots))
    if any(k < 0 for k in rest.values()):
        return None
    return MonicPoly(tuple(rest.elements()))


def _divisors(k: int) -> List[int]:
    k = abs(k)
    small, large = [], []
    for d in range(1, isqrt(k) + 1):
        if k % d == 0:
            small.append(d)
            if d * d != k:
                large.append(k // d)
    return small + large[::-1]


def _deflate(coeffs: List[Fraction], r: Fraction) -> List[Fraction]:
    out = [coeffs[0]]
    for a in coeffs[1:-1]:
        out.append(a + r * out[-1])
    return out


def from_coeffs(coeffs: Sequence[RatLike]) -> MonicPoly:
    """Recover the roots of a monic polynomial by the rational root theorem.

    Raises NonSplittingError carrying the leftover factor when some root is
    not rational.
    """
    poly = [as_rat(c) for c in coeffs]
    while len(poly) > 1 and poly[0] == 0:
        poly.pop(0)
    if not poly or poly[0] != 1:
        raise DomainError("polynomial must be monic (leading coefficient 1)")
    roots: List[Fraction] = []
    while len(poly) > 1:
        if poly[-1] == 0:
            roots.append(Fraction(0))
            poly = poly[:-1]
            continue
        scale = lcm(*(c.denominator for c in poly))
        ints = [int(c * scale) for c in poly]
        found = None
        for p in _divisors(ints[-1]):
            for q in _divisors(ints[0]):
                for cand in (Fraction(p, q), Fraction(-p, q)):
                    if horner(poly, cand) == 0:
                        found = cand
                        break
                if found is not None:
                    break
            if found is not None:
                break
        if found is None:
            raise NonSplittingError(format_rat(c) for c in poly)
        roots.append(found)
        poly = _deflate(poly, found)
    return MonicPoly(tuple(roots))


def poly_from_json(obj: dict) -> MonicPoly:
    """Accept {"roots": [...]} or {"coeffs": [...]} (descending, monic)."""
    if "roots" in obj:
        return MonicPoly(tuple(as_rat(r) for r in obj["roots"]))
    if "coeffs" in obj:
        return from_coeffs(obj["coeffs"])
    raise DomainError("polynomial JSON needs a 'roots' or 'coeffs' field")


@dataclass(frozen=True)
class SolutionPair:
    """A pair (p1, p2) of monic polynomials."""

    p1: MonicPoly = MonicPoly()
    p2: MonicPoly = MonicPoly()

    @classmethod
    def from_roots(cls, roots1: Iterable[RatLike], roots2: Iterable[RatLike]) -> "SolutionPair":
        return cls(MonicPoly(tuple(roots1)), MonicPoly(tuple(roots2)))

    def __mul__(self, other: "SolutionPair") -> "SolutionPair":
        return SolutionPair(self.p1 * other.p1, self.p2 * other.p2)

    def divide_exact(self, other: "SolutionPair") -> Optional["SolutionPair"]:
        q1 = divide_exact(self.p1, other.p1)
        q2 = divide_exact(self.p2, other.p2)
        if q1 is None or q2 is None:
            return None
        return SolutionPair(q1, q2)

    def shift(self, c: RatLike) -> "SolutionPair":
        """Componentwise u -> p(u + c)."""
        return SolutionPair(self.p1.shift(c), self.p2.shift(c))

    @property
    def degree(self) -> int:
        return self.p1.degree + self.p2.degree

    @property
    def is_trivial(self) -> bool:
        return self.degree == 0

    def all_roots(self) -> Tuple[Fraction, ...]:
        return tuple(sorted(self.p1.roots + self.p2.roots))

    def to_json(self) -> dict:
        return {"p1": self.p1.to_json(), "p2": self.p2.to_json()}

    @classmethod
    def from_json(cls, obj: dict) -> "SolutionPair":
        try:
            return cls(poly_from_json(obj["p1"]), poly_from_json(obj["p2"]))
        except KeyError as exc:
            raise DomainError(f"solution JSON is missing {exc.args[0]!r}") from exc

    def __str__(self) -> str:
        return f"({self.p1}, {self.p2})"


def product(pairs: Iterable[SolutionPair]) -> SolutionPair:
    out = SolutionPair()
    for s in pairs:
        out = out * s
    return out
