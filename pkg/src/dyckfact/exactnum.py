"""Exact rational scalars and the shift lattice Γ = Z·α1 + Z·α2.

Scalars are :class:`fractions.Fraction` throughout.  When α1, α2 admit a
relation m·α1 + n·α2 = 0 with coprime positive (m, n), the lattice Γ is
cyclic with generator γ = α2/m, so α1 = -n·γ and α2 = m·γ.  Every element of
Γ then has a unique coordinate r·α1 + s·α2 with 0 <= r < m, and
ξ(r·α1 + s·α2) = r + s·m is a bijection Γ -> Z.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import floor, gcd
from typing import Optional, Tuple, Union

from .errors import DomainError

RatLike = Union[Fraction, int, str]


def as_rat(value: RatLike) -> Fraction:
    """Coerce an int, Fraction or "a/b" string to a Fraction.

    Floats are refused: they would smuggle rounding into exact data.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool) or isinstance(value, float):
        raise TypeError(f"refusing inexact scalar {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if not text or "." in text or "e" in text.lower():
            raise DomainError(f"not an exact rational: {value!r}")
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise DomainError(f"not an exact rational: {value!r}") from exc
    raise TypeError(f"cannot interpret {value!r} as a rational")


def format_rat(value: Fraction) -> str:
    """Serialize as "a/b", or "a" when the denominator is 1."""
    value = as_rat(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def derive_mn(alpha1: RatLike, alpha2: RatLike) -> Optional[Tuple[int, int]]:
    """Coprime positive (m, n) with m·alpha1 + n·alpha2 = 0, or None."""
    a1, a2 = as_rat(alpha1), as_rat(alpha2)
    if a1 == 0 or a2 == 0:
        raise DomainError("derive_mn needs nonzero shifts")
    if (a1 > 0) == (a2 > 0):
        return None
    ratio = -a1 / a2  # = n/m in lowest terms
    return ratio.denominator, ratio.numerator


@dataclass(frozen=True)
class ShiftPair:
    """The shift parameters (α1, α2) together with their lattice invariants."""

    alpha1: Fraction
    alpha2: Fraction
    m: Optional[int] = field(init=False)
    n: Optional[int] = field(init=False)
    gamma: Optional[Fraction] = field(init=False)

    def __post_init__(self):
        a1, a2 = as_rat(self.alpha1), as_rat(self.alpha2)
        if a1 == 0 or a2 == 0:
            raise DomainError("both shifts must be nonzero; use classify_degenerate for zero shifts")
        object.__setattr__(self, "alpha1", a1)
        object.__setattr__(self, "alpha2", a2)
        mn = derive_mn(a1, a2)
        m, n = mn if mn is not None else (None, None)
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "gamma", a2 / m if m is not None else None)

    @property
    def resonant(self) -> bool:
        """True when some positive combination of the shifts vanishes."""
        return self.m is not None

    def alpha(self, step: int) -> Fraction:
        return self.alpha1 if step == 1 else self.alpha2

    def require_mn(self) -> Tuple[int, int]:
        if self.m is None:
            raise DomainError(
                f"shifts ({format_rat(self.alpha1)}, {format_rat(self.alpha2)}) have the same sign; "
                "the lattice they generate is not handled"
            )
        return self.m, self.n


@dataclass(frozen=True)
class LatticeCoord:
    """The unique (r, s), 0 <= r < m, with delta = r·α1 + s·α2."""

    r: int
    s: int


def lattice_member(sp: ShiftPair, delta: RatLike) -> bool:
    sp.require_mn()
    return (as_rat(delta) / sp.gamma).denominator == 1


def decompose(sp: ShiftPair, delta: RatLike) -> LatticeCoord:
    m, n = sp.require_mn()
    t = as_rat(delta) / sp.gamma
    if t.denominator != 1:
        raise DomainError(f"{format_rat(as_rat(delta))} is not in the lattice generated by the shifts")
    t = t.numerator
    # delta/gamma = -r·n + s·m
    r = (-t * pow(n, -1, m)) % m if m > 1 else 0
    s, rem = divmod(t + r * n, m)
    assert rem == 0
    return LatticeCoord(r, s)


def recompose(sp: ShiftPair, coord: LatticeCoord) -> Fraction:
    return coord.r * sp.alpha1 + coord.s * sp.alpha2


def xi(sp: ShiftPair, coord: LatticeCoord) -> int:
    m, _ = sp.require_mn()
    return coord.r + coord.s * m


def coset_base(sp: ShiftPair, value: RatLike) -> Fraction:
    """Canonical point of value + Γ: the unique element in [0, |γ|)."""
    sp.require_mn()
    g = abs(sp.gamma)
    v = as_rat(value)
    return v - g * floor(v / g)


def same_coset(sp: ShiftPair, a: RatLike, b: RatLike) -> bool:
    return lattice_member(sp, as_rat(a) - as_rat(b))


def root_key(sp: ShiftPair, value: RatLike) -> Tuple[Fraction, int]:
    """Total order on Q: by canonical coset point, then by ξ within the coset."""
    v = as_rat(value)
    base = coset_base(sp, v)
    return base, xi(sp, decompose(sp, v - base))


def check_coprime(m: int, n: int) -> None:
    if m < 1 or n < 1 or gcd(m, n) != 1:
        raise DomainError(f"(m, n) = ({m}, {n}) must be coprime positive integers")
