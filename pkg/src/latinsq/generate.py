"""Table sources: fixed example tables, algebraic constructions, exhaustive
enumeration and random sampling of Latin squares."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Callable, Iterator, Sequence

from .table import CayleyTable

__all__ = [
    "ENUMERATION_FORCE_LIMIT",
    "ENUMERATION_LIMIT",
    "EnumPrefix",
    "GuardError",
    "SampleConfig",
    "cyclic_table",
    "direct_product",
    "enumerate_latin",
    "fixture",
    "fixture_intro_square",
    "fixture_remark_loop",
    "random_latin",
    "split_prefix",
    "symmetric_table",
]

# Full enumeration sizes: 161,280 at n=5 (seconds), 812,851,200 at n=6 (hours).
ENUMERATION_LIMIT = 5
ENUMERATION_FORCE_LIMIT = 6

_INTRO_ROWS = [
    [2, 3, 1, 4],
    [1, 4, 2, 3],
    [3, 1, 4, 2],
    [4, 2, 3, 1],
]

# As printed; row 4 repeats 6 in columns 2 and 3.
_REMARK_ROWS = [
    [1, 2, 3, 4, 5, 6],
    [2, 3, 1, 5, 6, 4],
    [3, 1, 2, 6, 4, 5],
    [4, 6, 6, 1, 2, 3],
    [5, 4, 6, 2, 3, 1],
    [6, 5, 4, 3, 1, 2],
]


class GuardError(ValueError):
    """Requested enumeration is too large without an explicit override."""


def _from_one_based(rows: Sequence[Sequence[int]]) -> CayleyTable:
    return CayleyTable.from_rows([[x - 1 for x in row] for row in rows])


def fixture_intro_square() -> CayleyTable:
    """The 4×4 introductory example; Latin, but with no identity."""
    return _from_one_based(_INTRO_ROWS)


def fixture_remark_loop(corrected: bool = True) -> CayleyTable:
    """The non-associative loop of order 6.

    The printed version is not Latin. ``corrected=True`` changes cell (4, 3)
    (1-based) from 6 to 5, the only single-cell edit that makes it Latin; it
    keeps ``(4·2)·4 = 3 != 2 = 4·(2·4)``.
    """
    rows = [list(r) for r in _REMARK_ROWS]
    if corrected:
        rows[3][2] = 5
    return _from_one_based(rows)


FIXTURES: dict[str, Callable[[], CayleyTable]] = {
    "intro": fixture_intro_square,
    "remark": lambda: fixture_remark_loop(corrected=False),
    "remark-corrected": lambda: fixture_remark_loop(corrected=True),
}


def fixture(name: str) -> CayleyTable:
    try:
        return FIXTURES[name]()
    except KeyError:
        raise ValueError(f"unknown fixture {name!r}; choose from {', '.join(FIXTURES)}") from None


def cyclic_table(n: int) -> CayleyTable:
    """Addition mod n."""
    if n < 1:
        raise ValueError("order must be at least 1")
    return CayleyTable._trusted(n, tuple((i + j) % n for i in range(n) for j in range(n)))


def direct_product(s: CayleyTable, t: CayleyTable) -> CayleyTable:
    """Componentwise product; the pair (a, b) is symbol ``a * t.n + b``."""
    m, k = s.n, t.n
    n = m * k
    entries = [0] * (n * n)
    for a1, b1 in itertools.product(range(m), range(k)):
        x = a1 * k + b1
        for a2, b2 in itertools.product(range(m), range(k)):
            y = a2 * k + b2
            entries[x * n + y] = s.entries[a1 * m + a2] * k + t.entries[b1 * k + b2]
    return CayleyTable._trusted(n, tuple(entries))


def symmetric_table(k: int) -> CayleyTable:
    """Cayley table of the symmetric group on k points (order k!).

    Symbols index permutations in lexicographic order, so symbol 0 is the
    identity; ``p·q`` applies q first, then p.
    """
    perms = list(itertools.permutations(range(k)))
    index = {p: i for i, p in enumerate(perms)}
    entries = tuple(index[tuple(p[q[x]] for x in range(k))] for p in perms for q in perms)
    return CayleyTable._trusted(len(perms), entries)


# -- enumeration ---------------------------------------------------------------

@dataclass(frozen=True)
class EnumPrefix:
    """The first ``filled`` cells of a square in row-major order."""

    n: int
    cells: tuple[int, ...] = ()

    @property
    def filled(self) -> int:
        return len(self.cells)

    def is_consistent(self) -> bool:
        n = self.n
        if len(self.cells) > n * n:
            return False
        rows = [0] * n
        cols = [0] * n
        for k, s in enumerate(self.cells):
            if not 0 <= s < n:
                return False
            bit = 1 << s
            r, c = divmod(k, n)
            if rows[r] & bit or cols[c] & bit:
                return False
            rows[r] |= bit
            cols[c] |= bit
        return True

    def extensions(self) -> list["EnumPrefix"]:
        """Consistent one-cell extensions, in ascending symbol order."""
        if self.filled == self.n * self.n:
            return []
        out = [EnumPrefix(self.n, self.cells + (s,)) for s in range(self.n)]
        return [p for p in out if p.is_consistent()]


def split_prefix(prefix: EnumPrefix, min_parts: int) -> list[EnumPrefix]:
    """Refine a prefix cell by cell into at least ``min_parts`` disjoint
    prefixes (fewer if the square fills up first), in enumeration order."""
    parts = [prefix]
    while len(parts) < min_parts:
        refined = [q for p in parts for q in p.extensions()]
        if not refined or all(p.filled == p.n * p.n for p in parts):
            break
        parts = refined
    return parts


def check_guard(n: int, force: bool = False) -> None:
    if n < 1:
        raise ValueError("order must be at least 1")
    limit = ENUMERATION_FORCE_LIMIT if force else ENUMERATION_LIMIT
    if n > limit:
        if not force and n <= ENUMERATION_FORCE_LIMIT:
            raise GuardError(f"exhaustive enumeration of order {n} needs an explicit override")
        raise GuardError(f"exhaustive enumeration is limited to order {ENUMERATION_FORCE_LIMIT}")


def enumerate_latin(
    n: int,
    prefix: EnumPrefix | None = None,
    visitor: Callable[[CayleyTable], None] | None = None,
    *,
    force: bool = False,
) -> int:
    """Visit every Latin square of order n extending ``prefix``, once each,
    in row-major lexicographic order. Returns the number visited.
    """
    check_guard(n, force)
    if prefix is None:
        prefix = EnumPrefix(n)
    elif prefix.n != n:
        raise ValueError(f"prefix is for order {prefix.n}, not {n}")
    if not prefix.is_consistent():
        raise ValueError("prefix violates the Latin property")

    size = n * n
    full = (1 << n) - 1
    cells = list(prefix.cells) + [0] * (size - prefix.filled)
    row_used = [0] * n
    col_used = [0] * n
    for k in range(prefix.filled):
        r, c = divmod(k, n)
        row_used[r] |= 1 << cells[k]
        col_used[c] |= 1 << cells[k]
    count = 0

    def place(k: int) -> None:
        nonlocal count
        if k == size:
            count += 1
            if visitor is not None:
                visitor(CayleyTable._trusted(n, tuple(cells)))
            return
        r, c = divmod(k, n)
        free = full & ~(row_used[r] | col_used[c])
        while free:
            bit = free & -free
            free ^= bit
            cells[k] = bit.bit_length() - 1
            row_used[r] |= bit
            col_used[c] |= bit
            place(k + 1)
            row_used[r] ^= bit
            col_used[c] ^= bit

    place(prefix.filled)
    return count


def iter_latin(n: int, prefix: EnumPrefix | None = None, *, force: bool = False) -> Iterator[CayleyTable]:
    """Eager iterator over :func:`enumerate_latin`; holds every square in memory."""
    out: list[CayleyTable] = []
    enumerate_latin(n, prefix, out.append, force=force)
    return iter(out)


# -- Jacobson–Matthews sampler -------------------------------------------------

@dataclass(frozen=True)
class SampleConfig:
    n: int
    seed: int = 0
    steps: int | None = field(default=None)

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("order must be at least 1")
        if self.steps is None:
            object.__setattr__(self, "steps", self.n ** 3)
        elif self.steps < 1:
            raise ValueError("steps must be at least 1")


class _IncidenceCube:
    """0/1 incidence cube of a Latin square, allowing one -1 cell.

    Each line of the cube (fix two coordinates) keeps the set of positions
    holding +1: one position normally, two on lines through the -1 cell.
    """

    def __init__(self, square: CayleyTable):
        n = self.n = square.n
        self.value = [0] * (n * n * n)  # index (r * n + c) * n + s
        self.rc = [set() for _ in range(n * n)]  # r * n + c -> symbols
        self.rs = [set() for _ in range(n * n)]  # r * n + s -> columns
        self.cs = [set() for _ in range(n * n)]  # c * n + s -> rows
        self.improper: tuple[int, int, int] | None = None
        for r in range(n):
            for c in range(n):
                self._add(r, c, square.entries[r * n + c], +1)

    def _add(self, r: int, c: int, s: int, delta: int) -> None:
        n = self.n
        key = (r * n + c) * n + s
        old = self.value[key]
        new = self.value[key] = old + delta
        if old == 1:
            self.rc[r * n + c].discard(s)
            self.rs[r * n + s].discard(c)
            self.cs[c * n + s].discard(r)
        elif new == 1:
            self.rc[r * n + c].add(s)
            self.rs[r * n + s].add(c)
            self.cs[c * n + s].add(r)
        if new == -1:
            self.improper = (r, c, s)
        elif old == -1:
            self.improper = None

    def move(self, rng: random.Random) -> None:
        n = self.n
        if self.improper is None:
            while True:
                r, c, s = rng.randrange(n), rng.randrange(n), rng.randrange(n)
                if not self.value[(r * n + c) * n + s]:
                    break
            (s1,) = self.rc[r * n + c]
            (c1,) = self.rs[r * n + s]
            (r1,) = self.cs[c * n + s]
        else:
            r, c, s = self.improper
            s1 = rng.choice(sorted(self.rc[r * n + c]))
            c1 = rng.choice(sorted(self.rs[r * n + s]))
            r1 = rng.choice(sorted(self.cs[c * n + s]))
        add = self._add
        add(r, c, s, +1)
        add(r, c, s1, -1)
        add(r, c1, s, -1)
        add(r1, c, s, -1)
        add(r, c1, s1, +1)
        add(r1, c, s1, +1)
        add(r1, c1, s, +1)
        add(r1, c1, s1, -1)

    def square(self) -> CayleyTable:
        assert self.improper is None
        entries = tuple(next(iter(cell)) for cell in self.rc)
        return CayleyTable._trusted(self.n, entries)


def random_latin(cfg: SampleConfig) -> CayleyTable:
    """Random Latin square by a Jacobson–Matthews walk from the cyclic table.

    Runs ``cfg.steps`` moves, then keeps moving until the cube is proper.
    The result depends only on (n, seed, steps).
    """
    start = cyclic_table(cfg.n)
    if cfg.n < 2:
        return start
    rng = random.Random(cfg.seed)
    cube = _IncidenceCube(start)
    for _ in range(cfg.steps):
        cube.move(rng)
    while cube.improper is not None:
        cube.move(rng)
    return cube.square()
