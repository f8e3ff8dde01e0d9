"""Structure classification and the per-table theorem check."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Callable

from .axioms import (
    AssocWitness,
    InverseMap,
    associativity_light,
    associativity_naive,
    find_identity,
    idempotents,
    inverse_map,
    is_commutative,
)
from .table import CayleyTable, LatinReport, latin_check

__all__ = [
    "ClassificationReport",
    "LIGHT_THRESHOLD",
    "StructureClass",
    "TheoremVerdict",
    "classify",
    "element_orders",
    "theorem_check",
]

# Orders above this use Light's test unless an algorithm is requested.
LIGHT_THRESHOLD = 64

ASSOCIATIVITY_ALGORITHMS: dict[str, Callable[[CayleyTable], AssocWitness | None]] = {
    "naive": associativity_naive,
    "light": associativity_light,
}


class StructureClass(str, enum.Enum):
    NOT_LATIN = "NotLatin"
    QUASIGROUP = "Quasigroup"
    LOOP = "Loop"
    GROUP = "Group"
    ABELIAN_GROUP = "AbelianGroup"

    def __str__(self) -> str:
        return self.value

    @property
    def is_group(self) -> bool:
        return self in (StructureClass.GROUP, StructureClass.ABELIAN_GROUP)


@dataclass(frozen=True)
class ClassificationReport:
    structure: StructureClass
    latin: LatinReport
    identity: int | None
    associative: bool
    assoc_witness: AssocWitness | None
    inverses: InverseMap | None
    commutative: bool
    commutative_witness: tuple[int, int] | None
    order_profile: tuple[int, ...] | None
    algorithm: str

    def to_dict(self) -> dict:
        return {
            "class": self.structure.value,
            "latin": self.latin.to_dict(),
            "identity": self.identity,
            "associative": self.associative,
            "assoc_witness": None if self.assoc_witness is None else self.assoc_witness.to_dict(),
            "inverses": None if self.inverses is None else self.inverses.to_dict(),
            "commutative": self.commutative,
            "order_profile": None if self.order_profile is None else list(self.order_profile),
            "algorithm": self.algorithm,
        }


def element_orders(table: CayleyTable, e: int) -> tuple[int, ...]:
    """Ascending multiset of element orders: least k >= 1 with x^k = e.

    Raises ValueError if some power sequence misses ``e`` within n steps,
    which cannot happen in a group.
    """
    n = table.n
    orders = []
    for x in range(n):
        power, k = x, 1
        while power != e:
            if k >= n:
                raise ValueError(f"powers of {x} do not reach the identity; not a group table")
            power = table.entry(power, x)
            k += 1
        orders.append(k)
    return tuple(sorted(orders))


def classify(table: CayleyTable, algorithm: str | None = None) -> ClassificationReport:
    """Evaluate every axiom and assign the most specific structure class.

    ``algorithm`` is "naive" or "light"; by default naive is used up to
    order ``LIGHT_THRESHOLD`` and Light's test above it.
    """
    if algorithm is None:
        algorithm = "naive" if table.n <= LIGHT_THRESHOLD else "light"
    try:
        check_assoc = ASSOCIATIVITY_ALGORITHMS[algorithm]
    except KeyError:
        raise ValueError(f"unknown associativity algorithm {algorithm!r}") from None

    latin = latin_check(table)
    identity = find_identity(table)
    witness = check_assoc(table)
    associative = witness is None
    inverses = None
    if identity is not None:
        try:
            inverses = inverse_map(table, identity)
        except ValueError:
            inverses = None
    comm_witness = is_commutative(table)

    if not latin.is_latin:
        structure = StructureClass.NOT_LATIN
    elif identity is None:
        structure = StructureClass.QUASIGROUP
    elif not associative:
        structure = StructureClass.LOOP
    elif comm_witness is None:
        structure = StructureClass.ABELIAN_GROUP
    else:
        structure = StructureClass.GROUP

    profile = element_orders(table, identity) if structure.is_group else None
    return ClassificationReport(
        structure=structure,
        latin=latin,
        identity=identity,
        associative=associative,
        assoc_witness=witness,
        inverses=inverses,
        commutative=comm_witness is None,
        commutative_witness=comm_witness,
        order_profile=profile,
        algorithm=algorithm,
    )


@dataclass(frozen=True)
class TheoremVerdict:
    """Outcome of running the proof's three steps on one table.

    ``failed_step`` is one of "idempotent", "identity", "inverse" when
    ``holds`` is false.
    """

    applicable: bool
    holds: bool
    details: str
    failed_step: str | None = None
    identity: int | None = None

    def to_dict(self) -> dict:
        return {"applicable": self.applicable, "holds": self.holds, "details": self.details,
                "failed_step": self.failed_step, "identity": self.identity}


def theorem_check(table: CayleyTable, *, assume_latin: bool = False) -> TheoremVerdict:
    """Check that an associative Latin table is a group, step by step.

    The steps follow the classical argument: find an idempotent, show it is
    a two-sided identity, then show left and right inverses coincide.
    ``assume_latin`` skips the Latin scan for callers that enumerate Latin
    squares directly.
    """
    if not assume_latin and not latin_check(table).is_latin:
        return TheoremVerdict(False, True, "not a Latin square")
    witness = associativity_naive(table)
    if witness is not None:
        w = witness.equation(table)
        return TheoremVerdict(False, True, f"not associative: {w}")

    idem = idempotents(table)
    if not idem:
        return TheoremVerdict(True, False, "no idempotent", "idempotent")
    k = idem[0]
    if find_identity(table) != k:
        return TheoremVerdict(True, False, f"idempotent {table.label(k)} is not an identity", "identity", None)
    try:
        inverses = inverse_map(table, k)
    except ValueError as exc:
        return TheoremVerdict(True, False, str(exc), "inverse", k)
    if inverses is None:
        return TheoremVerdict(True, False, "left and right inverses differ", "inverse", k)
    return TheoremVerdict(True, True, f"group with identity {table.label(k)}", None, k)
