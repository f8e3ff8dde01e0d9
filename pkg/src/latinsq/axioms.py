"""Individual axiom checks on a Cayley table.

Everything here except :func:`inverse_map` works on arbitrary tables, Latin
or not, so fuzzed inputs can go through the same code.
"""

from __future__ import annotations

from dataclasses import dataclass

from .table import CayleyTable

__all__ = [
    "AssocWitness",
    "InverseMap",
    "associativity_light",
    "associativity_naive",
    "check_triple",
    "find_identity",
    "generating_set",
    "idempotents",
    "inverse_map",
    "is_commutative",
]


@dataclass(frozen=True)
class AssocWitness:
    """A triple with ``(a·b)·c = left_value != right_value = a·(b·c)``."""

    a: int
    b: int
    c: int
    left_value: int
    right_value: int

    def revalidates(self, table: CayleyTable) -> bool:
        return check_triple(table, self.a, self.b, self.c) == self

    def equation(self, table: CayleyTable) -> str:
        """Human form, e.g. ``3 = 6·4 = (4·2)·4 ≠ 4·(2·4) = 4·5 = 2``."""
        lab = table.label
        ab = table.entry(self.a, self.b)
        bc = table.entry(self.b, self.c)
        a, b, c = lab(self.a), lab(self.b), lab(self.c)
        return (f"{lab(self.left_value)} = {lab(ab)}·{c} = ({a}·{b})·{c} ≠ "
                f"{a}·({b}·{c}) = {a}·{lab(bc)} = {lab(self.right_value)}")

    def to_dict(self) -> dict:
        return {"a": self.a, "b": self.b, "c": self.c,
                "left_value": self.left_value, "right_value": self.right_value}


@dataclass(frozen=True)
class InverseMap:
    identity: int
    pairs: tuple[int, ...]  # pairs[i] is the inverse of i

    def __getitem__(self, i: int) -> int:
        return self.pairs[i]

    def to_dict(self) -> dict:
        return {"identity": self.identity, "pairs": list(self.pairs)}


def check_triple(table: CayleyTable, a: int, b: int, c: int) -> AssocWitness | None:
    """Witness for the triple (a, b, c) if it breaks associativity, else None."""
    left = table.entry(table.entry(a, b), c)
    right = table.entry(a, table.entry(b, c))
    if left != right:
        return AssocWitness(a, b, c, left, right)
    return None


def idempotents(table: CayleyTable) -> list[int]:
    n, e = table.n, table.entries
    return [a for a in range(n) if e[a * n + a] == a]


def find_identity(table: CayleyTable) -> int | None:
    """The two-sided identity, if any. There is at most one."""
    n, e = table.n, table.entries
    natural = tuple(range(n))
    for k in range(n):
        if e[k * n:(k + 1) * n] == natural and e[k::n] == natural:
            return k
    return None


def associativity_naive(table: CayleyTable) -> AssocWitness | None:
    """Scan all n³ triples in lexicographic order; return the first failure."""
    n, e = table.n, table.entries
    for a in range(n):
        row_a = a * n
        for b in range(n):
            ab_row = e[row_a + b] * n
            b_row = b * n
            for c in range(n):
                left = e[ab_row + c]
                right = e[row_a + e[b_row + c]]
                if left != right:
                    return AssocWitness(a, b, c, left, right)
    return None


def generating_set(table: CayleyTable) -> list[int]:
    """Greedy generating set: repeatedly adjoin the smallest element not yet
    generated and close under the operation until everything is reached."""
    n, e = table.n, table.entries
    closure: list[int] = []
    inside = [False] * n
    gens: list[int] = []
    for g in range(n):
        if inside[g]:
            continue
        gens.append(g)
        inside[g] = True
        closure.append(g)
        pending = [g]
        while pending:
            x = pending.pop()
            for y in list(closure):
                for z in (e[x * n + y], e[y * n + x]):
                    if not inside[z]:
                        inside[z] = True
                        closure.append(z)
                        pending.append(z)
    return gens


def associativity_light(table: CayleyTable) -> AssocWitness | None:
    """Light's test: check ``(x·g)·y = x·(g·y)`` only for g in a generating set.

    The elements g satisfying that identity for every x, y are closed under
    the operation, so covering a generating set covers the whole table.
    """
    n, e = table.n, table.entries
    for g in generating_set(table):
        g_row = g * n
        for x in range(n):
            xg_row = e[x * n + g] * n
            x_row = x * n
            for y in range(n):
                left = e[xg_row + y]
                right = e[x_row + e[g_row + y]]
                if left != right:
                    return AssocWitness(x, g, y, left, right)
    return None


def inverse_map(table: CayleyTable, e: int) -> InverseMap | None:
    """Two-sided inverses with respect to the identity ``e``.

    Returns None when some element's right inverse differs from its left
    inverse. Raises ValueError if ``e`` is not an identity, or if a row or
    column lacks ``e`` (possible only for non-Latin tables).
    """
    if find_identity(table) != e:
        raise ValueError(f"symbol {e} is not a two-sided identity")
    n, t = table.n, table.entries
    pairs = []
    for i in range(n):
        row = t[i * n:(i + 1) * n]
        col = t[i::n]
        if e not in row:
            raise ValueError(f"row {i} does not contain the identity")
        if e not in col:
            raise ValueError(f"column {i} does not contain the identity")
        right = row.index(e)  # i·right = e
        left = col.index(e)   # left·i = e
        if right != left:
            return None
        pairs.append(right)
    return InverseMap(e, tuple(pairs))


def is_commutative(table: CayleyTable) -> tuple[int, int] | None:
    """None if commutative, else the lexicographically first (a, b) with a·b != b·a."""
    n, e = table.n, table.entries
    for a in range(n):
        for b in range(a + 1, n):
            if e[a * n + b] != e[b * n + a]:
                return (a, b)
    return None
