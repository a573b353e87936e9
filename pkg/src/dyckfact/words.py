"""Words over {1, 2}: the free monoid, its zero-sum submonoid and rotations.

A word is stored as a ``str`` of the characters ``'1'`` and ``'2'``; this is
also its JSON form.  Step ``1`` carries the shift α1 and step ``2`` carries α2.
"""

from __future__ import annotations

from math import comb, gcd
from typing import Iterable, Optional, Tuple, Union

from .errors import DomainError, InvalidPathError
from .exactnum import ShiftPair, check_coprime

WordLike = Union[str, Iterable[int]]


def as_word(w: WordLike) -> str:
    if isinstance(w, str):
        word = w.strip()
    else:
        word = "".join(str(int(c)) for c in w)
    if any(c not in "12" for c in word):
        raise InvalidPathError(f"word {word!r} has letters outside {{1, 2}}")
    return word


def ell(w: str, letter: int) -> int:
    return w.count(str(letter))


def in_M(sp: ShiftPair, w: WordLike) -> bool:
    w = as_word(w)
    return ell(w, 1) * sp.alpha1 + ell(w, 2) * sp.alpha2 == 0


def shift(w: WordLike, k: int) -> str:
    """Rotate left by k: 1·(i1 i2 ... iN) = (i2 ... iN i1)."""
    w = as_word(w)
    if not w:
        return w
    k %= len(w)
    return w[k:] + w[:k]


def _require_in_M(sp: ShiftPair, w: str) -> None:
    if not in_M(sp, w):
        raise DomainError(f"word {w!r} is not in the zero-sum submonoid for these shifts")


def is_cyclically_irreducible(sp: ShiftPair, w: WordLike) -> bool:
    w = as_word(w)
    _require_in_M(sp, w)
    m, n = sp.require_mn()
    return len(w) == m + n


def balanced_window(w: WordLike) -> int:
    """Smallest rotation whose prefix of length s1+s2 holds exactly s1 ones.

    Here s_i = l_i / gcd(l1, l2) with l_i the letter counts of w.
    """
    w = as_word(w)
    if not w:
        raise InvalidPathError("balanced_window needs a nonempty word")
    l1, l2 = ell(w, 1), ell(w, 2)
    d = gcd(l1, l2)
    s1, s2 = l1 // d, l2 // d
    width = s1 + s2
    for r in range(len(w)):
        if ell(shift(w, r)[:width], 1) == s1:
            return r
    raise AssertionError("no balanced window; counting argument violated")


def cyclic_split(sp: ShiftPair, w: WordLike) -> Optional[Tuple[int, str, str]]:
    w = as_word(w)
    _require_in_M(sp, w)
    if not w:
        raise InvalidPathError("cyclic_split needs a nonempty word")
    m, n = sp.require_mn()
    if len(w) == m + n:
        return None
    k = balanced_window(w)
    rotated = shift(w, k)
    return k, rotated[: m + n], rotated[m + n:]


def count_irr_orbits(m: int, n: int) -> int:
    check_coprime(m, n)
    count, rem = divmod(comb(m + n, m), m + n)
    assert rem == 0
    return count

