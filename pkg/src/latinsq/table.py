"""Cayley tables: the data model, text/JSON formats and the Latin-property check.

Symbols are stored as 0-based indices. Anything shown to a person is 1-based
(or uses the table's symbol names), so ``entry(0, 0) == 1`` displays as ``2``
for a table whose top-left cell reads "2".
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

__all__ = [
    "CayleyTable",
    "LatinReport",
    "LatinViolation",
    "ParseError",
    "latin_check",
    "parse",
    "parse_json",
    "parse_text",
    "product",
    "serialize",
]

_FORBIDDEN_NAME = re.compile(r"[\s#=]")


class ParseError(ValueError):
    """Malformed table input. ``line`` and ``column`` are 1-based when known."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)


@dataclass(frozen=True, eq=True)
class CayleyTable:
    """An n×n operation table; ``entries[a * n + b]`` is the product ``a·b``.

    Rows are left operands, columns right operands.
    """

    n: int
    entries: tuple[int, ...]
    names: tuple[str, ...] | None = None

    def __post_init__(self):
        n = self.n
        if not isinstance(n, int) or isinstance(n, bool) or n < 1:
            raise ValueError(f"order must be a positive integer, got {n!r}")
        entries = tuple(int(x) for x in self.entries)
        if len(entries) != n * n:
            raise ValueError(f"expected {n * n} entries for order {n}, got {len(entries)}")
        for k, x in enumerate(entries):
            if not 0 <= x < n:
                raise ValueError(f"entry {x} at ({k // n}, {k % n}) is outside [0, {n})")
        object.__setattr__(self, "entries", entries)
        if self.names is not None:
            names = tuple(str(s) for s in self.names)
            if len(names) != n:
                raise ValueError(f"expected {n} symbol names, got {len(names)}")
            if len(set(names)) != n:
                raise ValueError("symbol names must be distinct")
            for s in names:
                if not s or _FORBIDDEN_NAME.search(s):
                    raise ValueError(f"invalid symbol name {s!r}")
            object.__setattr__(self, "names", names)

    @classmethod
    def _trusted(cls, n: int, entries: tuple[int, ...]) -> "CayleyTable":
        # Skips validation; only for callers that construct entries in range.
        obj = object.__new__(cls)
        object.__setattr__(obj, "n", n)
        object.__setattr__(obj, "entries", entries)
        object.__setattr__(obj, "names", None)
        return obj

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], names: Sequence[str] | None = None) -> "CayleyTable":
        """Build from 0-based rows. Raises ValueError on ragged input."""
        n = len(rows)
        for i, row in enumerate(rows):
            if len(row) != n:
                raise ValueError(f"row {i} has {len(row)} entries, expected {n}")
        return cls(n, tuple(x for row in rows for x in row), None if names is None else tuple(names))

    def __repr__(self) -> str:
        return f"CayleyTable(n={self.n}, rows={self.rows()!r})"

    def entry(self, a: int, b: int) -> int:
        return self.entries[a * self.n + b]

    def rows(self) -> list[list[int]]:
        n = self.n
        return [list(self.entries[i * n:(i + 1) * n]) for i in range(n)]

    def label(self, symbol: int) -> str:
        """Display form of a symbol: its name, or the 1-based numeral."""
        if self.names is not None:
            return self.names[symbol]
        return str(symbol + 1)

    def relabel(self, perm: Sequence[int]) -> "CayleyTable":
        """Conjugate by a symbol permutation: ``perm[a]·perm[b] = perm[a·b]``."""
        n = self.n
        if sorted(perm) != list(range(n)):
            raise ValueError("perm must be a permutation of range(n)")
        out = [0] * (n * n)
        for a in range(n):
            for b in range(n):
                out[perm[a] * n + perm[b]] = perm[self.entries[a * n + b]]
        names = None
        if self.names is not None:
            names = [""] * n
            for a in range(n):
                names[perm[a]] = self.names[a]
        return CayleyTable(n, tuple(out), None if names is None else tuple(names))

    def with_entry(self, a: int, b: int, value: int) -> "CayleyTable":
        """Copy with the single cell (a, b) replaced."""
        entries = list(self.entries)
        entries[a * self.n + b] = value
        return CayleyTable(self.n, tuple(entries), self.names)


def product(table: CayleyTable, a: int, b: int) -> int:
    n = table.n
    if not (0 <= a < n and 0 <= b < n):
        raise IndexError(f"operands ({a}, {b}) out of range for order {n}")
    return table.entries[a * n + b]


@dataclass(frozen=True)
class LatinViolation:
    """Symbol seen twice in one line. Indices are 0-based; ``first < second``."""

    axis: str  # "row" or "column"
    line: int
    symbol: int
    first: int
    second: int

    def to_dict(self) -> dict:
        return {"axis": self.axis, "line": self.line, "symbol": self.symbol,
                "first": self.first, "second": self.second}

    def describe(self, table: CayleyTable) -> str:
        other = "columns" if self.axis == "row" else "rows"
        return (f"{self.axis} {self.line + 1}: symbol {table.label(self.symbol)} "
                f"repeated in {other} {self.first + 1} and {self.second + 1}")


@dataclass(frozen=True)
class LatinReport:
    violations: tuple[LatinViolation, ...] = field(default_factory=tuple)

    @property
    def is_latin(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {"is_latin": self.is_latin, "violations": [v.to_dict() for v in self.violations]}


def _line_violations(axis: str, index: int, values: Iterable[int]) -> Iterator[LatinViolation]:
    first_seen: dict[int, int] = {}
    reported: set[int] = set()
    for pos, s in enumerate(values):
        if s in first_seen:
            if s not in reported:
                reported.add(s)
                yield LatinViolation(axis, index, s, first_seen[s], pos)
        else:
            first_seen[s] = pos


def latin_check(table: CayleyTable) -> LatinReport:
    """Report every (axis, line, symbol) duplication, with its two earliest positions.

    A line of length n over n symbols is a permutation iff it has no
    duplicates, so scanning for repeats is sufficient.
    """
    n, e = table.n, table.entries
    violations: list[LatinViolation] = []
    for i in range(n):
        violations.extend(_line_violations("row", i, e[i * n:(i + 1) * n]))
    for j in range(n):
        violations.extend(_line_violations("column", j, e[j::n]))
    return LatinReport(tuple(violations))


# -- text format -------------------------------------------------------------

def _data_lines(text: str) -> Iterator[tuple[int, str]]:
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        yield lineno, raw


def parse_text(text: str) -> CayleyTable:
    """Parse whitespace-separated rows.

    Optional header lines ``n=<int>`` and ``symbols=<name> ...`` may precede
    the rows. Tokens are either all numerals 1..n or symbol strings; without
    a ``symbols=`` header, symbol strings are indexed in order of first
    appearance. The Latin property is not checked here.
    """
    declared_n: int | None = None
    declared_names: list[str] | None = None
    rows: list[tuple[int, list[tuple[int, str]]]] = []

    for lineno, raw in _data_lines(text):
        stripped = raw.strip()
        if not rows and stripped.startswith("n=") and declared_n is None:
            value = stripped[2:].strip()
            try:
                declared_n = int(value)
            except ValueError:
                raise ParseError(f"bad order declaration {stripped!r}", lineno) from None
            if declared_n < 1:
                raise ParseError("order must be at least 1", lineno)
            continue
        if not rows and stripped.startswith("symbols=") and declared_names is None:
            declared_names = stripped[len("symbols="):].split()
            continue
        tokens = [(m.start() + 1, m.group()) for m in re.finditer(r"\S+", raw)]
        rows.append((lineno, tokens))

    if not rows:
        raise ParseError("no table rows found")
    n = len(rows[0][1])
    if declared_n is not None and declared_n != n:
        lineno, tokens = rows[0]
        raise ParseError(f"declared n={declared_n} but first row has {n} tokens", lineno)
    for lineno, tokens in rows:
        if len(tokens) != n:
            col = tokens[n][0] if len(tokens) > n else None
            raise ParseError(f"ragged row: {len(tokens)} tokens, expected {n}", lineno, col)
    if len(rows) != n:
        raise ParseError(f"expected {n} rows for a {n}x{n} table, got {len(rows)}", rows[-1][0])

    cells = [(lineno, col, tok) for lineno, tokens in rows for col, tok in tokens]

    if declared_names is not None:
        if len(declared_names) != n:
            raise ParseError(f"symbols= lists {len(declared_names)} names, expected {n}")
        index = {s: i for i, s in enumerate(declared_names)}
        if len(index) != n:
            raise ParseError("duplicate names in symbols= header")
        entries = []
        for lineno, col, tok in cells:
            if tok not in index:
                raise ParseError(f"unknown symbol {tok!r}", lineno, col)
            entries.append(index[tok])
        return _build(n, entries, declared_names)

    if all(tok.isdigit() for _, _, tok in cells):
        entries = []
        for lineno, col, tok in cells:
            value = int(tok)
            if not 1 <= value <= n:
                raise ParseError(f"numeral {tok} out of range 1..{n}", lineno, col)
            entries.append(value - 1)
        return _build(n, entries, None)

    names: dict[str, int] = {}
    entries = []
    for lineno, col, tok in cells:
        if tok not in names:
            if len(names) == n:
                raise ParseError(f"symbol {tok!r} exceeds the {n} symbols of an order-{n} table", lineno, col)
            names[tok] = len(names)
        entries.append(names[tok])
    if len(names) != n:
        raise ParseError(f"found {len(names)} distinct symbols, need {n}; add a symbols= header")
    return _build(n, entries, list(names))


def _build(n: int, entries: list[int], names: Sequence[str] | None) -> CayleyTable:
    try:
        return CayleyTable(n, tuple(entries), None if names is None else tuple(names))
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def parse_json(text: str) -> CayleyTable:
    """Parse ``{"n": int, "symbols": [...]?, "table": [[0-based ints]]}``.

    An ``"indexing"`` field, if present, must be ``"0-based"``.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None
    if not isinstance(doc, dict) or "table" not in doc:
        raise ParseError('JSON table must be an object with a "table" field')
    if doc.get("indexing", "0-based") != "0-based":
        raise ParseError(f'unsupported indexing {doc["indexing"]!r}; tables are 0-based')
    rows = doc["table"]
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise ParseError('"table" must be a list of rows')
    n = doc.get("n", len(rows))
    if not isinstance(n, int) or n < 1:
        raise ParseError(f'"n" must be a positive integer, got {n!r}')
    if len(rows) != n:
        raise ParseError(f"expected {n} rows, got {len(rows)}")
    entries = []
    for i, row in enumerate(rows):
        if len(row) != n:
            raise ParseError(f"ragged row {i}: {len(row)} entries, expected {n}")
        for x in row:
            if not isinstance(x, int) or isinstance(x, bool):
                raise ParseError(f"non-integer entry {x!r} in row {i}")
            if not 0 <= x < n:
                raise ParseError(f"entry {x} in row {i} out of range 0..{n - 1}")
            entries.append(x)
    names = doc.get("symbols")
    if names is not None and (not isinstance(names, list) or not all(isinstance(s, str) for s in names)):
        raise ParseError('"symbols" must be a list of strings')
    return _build(n, entries, names)


def parse(text: str, fmt: str = "text") -> CayleyTable:
    if fmt == "json":
        return parse_json(text)
    if fmt == "text":
        return parse_text(text)
    raise ValueError(f"unknown format {fmt!r}")


def serialize(table: CayleyTable, fmt: str = "text") -> str:
    """Render a table; ``parse(serialize(t, fmt), fmt) == t`` for both formats."""
    if fmt == "json":
        doc: dict = {"indexing": "0-based", "n": table.n}
        if table.names is not None:
            doc["symbols"] = list(table.names)
        doc["table"] = table.rows()
        return json.dumps(doc) + "\n"
    if fmt != "text":
        raise ValueError(f"unknown format {fmt!r}")
    lines = []
    if table.names is not None:
        lines.append("symbols=" + " ".join(table.names))
    width = max(len(table.label(s)) for s in range(table.n))
    for row in table.rows():
        lines.append(" ".join(table.label(s).rjust(width) for s in row).rstrip())
    return "\n".join(lines) + "\n"
