"""Lattice paths, generalized Dyck paths and their cylindrical versions.

Step ``1`` of a word is a unit step right, step ``2`` a unit step up.  A
generalized Dyck path with endpoint (m, n) stays weakly above the line
m·y = n·x.  On the cylinder Y = Z^2 / Z(m, n) a Dyck path is placed at a base
point (k, l) with 0 <= k < m.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, List, Optional, Sequence, Tuple, Union

from .errors import BoundExceededError, InvalidPathError
from .exactnum import LatticeCoord, RatLike, ShiftPair, as_rat, check_coprime, decompose
from .words import WordLike, as_word, is_cyclically_irreducible, shift

Point = Tuple[int, int]
LatticePath = Tuple[Point, ...]

DEFAULT_MAX_SIZE = 30
MAX_SIZE_ENV = "DYCKFACT_MAX_SIZE"


def max_size_bound(override: Optional[int] = None) -> int:
    """Enumeration bound on m+n: explicit override, else $DYCKFACT_MAX_SIZE, else 30."""
    if override is not None:
        return int(override)
    env = os.environ.get(MAX_SIZE_ENV)
    if env:
        return int(env)
    return DEFAULT_MAX_SIZE


def word_to_path(w: WordLike) -> LatticePath:
    x = y = 0
    points = [(0, 0)]
    for c in as_word(w):
        if c == "1":
            x += 1
        else:
            y += 1
        points.append((x, y))
    return tuple(points)


def path_to_word(points: Sequence[Point]) -> str:
    if not points or tuple(points[0]) != (0, 0):
        raise InvalidPathError("lattice paths start at the origin")
    letters = []
    for (x0, y0), (x1, y1) in zip(points, points[1:]):
        if (x1 - x0, y1 - y0) == (1, 0):
            letters.append("1")
        elif (x1 - x0, y1 - y0) == (0, 1):
            letters.append("2")
        else:
            raise InvalidPathError(f"step ({x0},{y0}) -> ({x1},{y1}) is not a unit right/up step")
    return "".join(letters)


def is_dyck(points: Sequence[Point]) -> bool:
    m, n = points[-1]
    return all(m * y >= n * x for x, y in points)


@dataclass(frozen=True, order=True)
class DyckPath:
    """A generalized Dyck path, identified by its word."""

    word: str

    def __post_init__(self):
        word = as_word(self.word)
        object.__setattr__(self, "word", word)
        if not word:
            raise InvalidPathError("the empty path is not a Dyck path")
        if not is_dyck(word_to_path(word)):
            raise InvalidPathError(f"word {word!r} dips below the diagonal of its endpoint")

    @cached_property
    def points(self) -> LatticePath:
        return word_to_path(self.word)

    @property
    def m(self) -> int:
        return self.points[-1][0]

    @property
    def n(self) -> int:
        return self.points[-1][1]

    def to_json(self) -> dict:
        return {"word": self.word}


PathLike = Union[DyckPath, str]


def as_dyck(d: PathLike) -> DyckPath:
    return d if isinstance(d, DyckPath) else DyckPath(d)


def _dyck_words(m: int, n: int) -> Iterator[str]:
    # right-before-up keeps the output in lexicographic word order
    letters: List[str] = []

    def walk(x: int, y: int) -> Iterator[str]:
        if x == m and y == n:
            yield "".join(letters)
            return
        if x < m and m * y >= n * (x + 1):
            letters.append("1")
            yield from walk(x + 1, y)
            letters.pop()
        if y < n:
            letters.append("2")
            yield from walk(x, y + 1)
            letters.pop()

    yield from walk(0, 0)


def enumerate_dyck(m: int, n: int, max_size: Optional[int] = None) -> List[DyckPath]:
    """All of D(m, n), sorted by word."""
    check_coprime(m, n)
    bound = max_size_bound(max_size)
    if m + n > bound:
        raise BoundExceededError(f"m+n = {m + n} exceeds the enumeration bound {bound}")
    return [DyckPath(w) for w in _dyck_words(m, n)]


def canonical_orbit_rep(sp: ShiftPair, w: WordLike) -> Tuple[int, DyckPath]:
    """The unique rotation k of a cyclically irreducible word whose path is Dyck."""
    w = as_word(w)
    if not is_cyclically_irreducible(sp, w):
        raise InvalidPathError(f"word {w!r} is not cyclically irreducible")
    hits = [k for k in range(len(w)) if is_dyck(word_to_path(shift(w, k)))]
    assert len(hits) == 1, hits
    k = hits[0]
    return k, DyckPath(shift(w, k))


def area(d: PathLike) -> int:
    """Number of whole unit cells between the path and the line m·y = n·x.

    Scans rows of cells: in row y the cells right of the path's up step and
    with bottom-right corner on or above the line are counted.
    """
    d = as_dyck(d)
    m, n = d.m, d.n
    total = 0
    for (x0, y0), (x1, y1) in zip(d.points, d.points[1:]):
        if y1 == y0:
            continue
        # up step at column x0 bounds row y0 on the left
        last = (m * y0) // n - 1  # largest x with n·(x+1) <= m·y0
        if last >= x0:
            total += last - x0 + 1
    return total


def zero_area_path(m: int, n: int) -> DyckPath:
    """Greedy construction keeping partial sums of the shifts (-n, m) in [0, m+n-1]."""
    check_coprime(m, n)
    a1, a2 = -n, m
    total = m + n
    partial = 0
    letters = []
    for _ in range(total):
        if n <= partial <= total - 1:
            letters.append("1")
            partial += a1
        else:
            letters.append("2")
            partial += a2
        assert 0 <= partial <= total - 1
    return DyckPath("".join(letters))


@dataclass(frozen=True)
class CylPath:
    """A Dyck path placed on the cylinder Z^2 / Z(m, n) at base point (k, l)."""

    path: DyckPath
    base: LatticeCoord

    def __post_init__(self):
        object.__setattr__(self, "path", as_dyck(self.path))
        base = self.base
        if not isinstance(base, LatticeCoord):
            base = LatticeCoord(*base)
            object.__setattr__(self, "base", base)
        if not 0 <= base.r < self.path.m:
            raise InvalidPathError(f"base point column {base.r} outside [0, {self.path.m - 1}]")

    @property
    def mn(self) -> Tuple[int, int]:
        return self.path.m, self.path.n

    def height(self, d: int) -> int:
        """y - x of the lifted periodic staircase on the anti-diagonal x + y = d."""
        m, n = self.mn
        k, l = self.base.r, self.base.s
        period, start = m + n, k + l
        wraps, i = divmod(d - start, period)
        x, y = self.path.points[i]
        return (y + l + wraps * n) - (x + k + wraps * m)

    def to_json(self) -> dict:
        return {"word": self.path.word, "base": [self.base.r, self.base.s]}


def cyl_path(sp: ShiftPair, d: PathLike, lam: RatLike, origin: RatLike) -> CylPath:
    """Image of (d, lam) on the cylinder for the chosen origin in lam's coset."""
    return CylPath(as_dyck(d), decompose(sp, as_rat(lam) - as_rat(origin)))


def cyl_leq(a: CylPath, b: CylPath) -> bool:
    """a ≼ b: a lies weakly south-east of b on every anti-diagonal."""
    if a.mn != b.mn:
        raise InvalidPathError(f"paths live on different cylinders {a.mn} and {b.mn}")
    m, n = a.mn
    start = min(a.base.r + a.base.s, b.base.r + b.base.s)
    return all(a.height(d) <= b.height(d) for d in range(start, start + m + n))


def render_path(d: PathLike) -> str:
    """ASCII picture: '.' lattice points, 'o' path points, '|'/'_' steps, '/' the diagonal."""
    d = as_dyck(d)
    m, n = d.m, d.n
    width, height = 2 * m + 1, 2 * n + 1
    grid = [[" "] * width for _ in range(height)]
    for y in range(n + 1):
        for x in range(m + 1):
            grid[2 * y][2 * x] = "."
    for x in range(m):
        for y in range(n):
            # the line crosses the interior of cell (x, y)
            if n * x < m * (y + 1) and n * (x + 1) > m * y:
                grid[2 * y + 1][2 * x + 1] = "/"
    for (x0, y0), (x1, y1) in zip(d.points, d.points[1:]):
        grid[y0 + y1][x0 + x1] = "_" if y0 == y1 else "|"
    for x, y in d.points:
        grid[2 * y][2 * x] = "o"
    rows = ["".join(row).rstrip() for row in reversed(grid)]
    return "\n".join(rows)
