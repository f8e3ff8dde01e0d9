"""Latin squares as Cayley tables: axiom checks, classification, enumeration
and exhaustive verification that associative Latin squares are groups."""

__version__ = "0.1.0"

from .axioms import (
    AssocWitness,
    InverseMap,
    associativity_light,
    associativity_naive,
    check_triple,
    find_identity,
    generating_set,
    idempotents,
    inverse_map,
    is_commutative,
)
from .classify import ClassificationReport, StructureClass, TheoremVerdict, classify, element_orders, theorem_check
from .generate import (
    EnumPrefix,
    GuardError,
    SampleConfig,
    cyclic_table,
    direct_product,
    enumerate_latin,
    fixture_intro_square,
    fixture_remark_loop,
    random_latin,
    symmetric_table,
)
from .table import (
    CayleyTable,
    LatinReport,
    LatinViolation,
    ParseError,
    latin_check,
    parse,
    parse_json,
    parse_text,
    product,
    serialize,
)
from .verify import VerificationReport, associative_census, verify_exhaustive, verify_sampled
