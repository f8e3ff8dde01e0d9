"""Exit criteria. Each test carries an ``acceptance`` marker; a PASS/FAIL line
per criterion is printed in the terminal summary."""

import itertools
import json
import random

import pytest

from latinsq import (
    CayleyTable,
    SampleConfig,
    StructureClass,
    associativity_light,
    associativity_naive,
    check_triple,
    classify,
    cyclic_table,
    direct_product,
    find_identity,
    fixture_intro_square,
    fixture_remark_loop,
    idempotents,
    inverse_map,
    latin_check,
    parse,
    random_latin,
    serialize,
    verify_exhaustive,
)
from latinsq.cli import main

TOTAL_LATIN = {1: 1, 2: 2, 3: 12, 4: 576, 5: 161280}
ASSOCIATIVE = {1: 1, 2: 2, 3: 3, 4: 16, 5: 30}

# every group of order n <= 5, up to isomorphism
GROUPS = {
    1: [cyclic_table(1)],
    2: [cyclic_table(2)],
    3: [cyclic_table(3)],
    4: [cyclic_table(4), direct_product(cyclic_table(2), cyclic_table(2))],
    5: [cyclic_table(5)],
}


@pytest.fixture(scope="module")
def exhaustive_reports():
    return {n: verify_exhaustive(n) for n in range(1, 6)}


@pytest.mark.acceptance("fixture fidelity")
def test_fixture_fidelity():
    intro = fixture_intro_square()
    assert latin_check(intro).is_latin
    r = classify(intro)
    assert r.structure is StructureClass.QUASIGROUP
    assert r.identity is None and not r.associative

    verbatim = latin_check(fixture_remark_loop(corrected=False))
    assert not verbatim.is_latin
    assert any(v.axis == "row" and v.line == 3 for v in verbatim.violations)

    loop = fixture_remark_loop(corrected=True)
    r = classify(loop)
    assert r.structure is StructureClass.LOOP
    assert loop.label(r.identity) == "1"
    inv = {loop.label(i): loop.label(j) for i, j in enumerate(r.inverses.pairs)}
    assert inv == {"1": "1", "2": "3", "3": "2", "4": "4", "5": "6", "6": "5"}
    assert inverse_map(loop, r.identity) == r.inverses

    # (4·2)·4 = 3 != 2 = 4·(2·4), symbols 1-based
    w = check_triple(loop, 3, 1, 3)
    assert (w.left_value + 1, w.right_value + 1) == (3, 2)


@pytest.mark.acceptance("theorem holds exhaustively for n = 1..5")
def test_theorem_exhaustive(exhaustive_reports):
    for n, report in exhaustive_reports.items():
        assert report.violations == [], n
        assert report.associative_count > 0
    assert exhaustive_reports[5].elapsed < 60.0


@pytest.mark.acceptance("census counts exact")
def test_census_exact(exhaustive_reports):
    for n, report in exhaustive_reports.items():
        assert report.total_latin == TOTAL_LATIN[n]
        assert report.associative_count == ASSOCIATIVE[n]
        # sum over groups of n!/|Aut(G)|, counted as distinct relabelings
        labelled = sum(
            len({g.relabel(p).entries for p in itertools.permutations(range(n))}) for g in GROUPS[n]
        )
        assert labelled == ASSOCIATIVE[n]
    assert 24 // 2 + 24 // 6 == ASSOCIATIVE[4]


@pytest.mark.acceptance("Light's test agrees with the naive scan")
def test_oracle_equivalence():
    rng = random.Random(2024)
    squares = [random_latin(SampleConfig(4 + i % 13, rng.getrandbits(64))) for i in range(1000)]
    mutants = []
    for sq in squares:
        r, c = rng.randrange(sq.n), rng.randrange(sq.n)
        value = (sq.entry(r, c) + rng.randrange(1, sq.n)) % sq.n
        mutants.append(sq.with_entry(r, c, value))

    disagreements = 0
    for table in squares + mutants:
        naive = associativity_naive(table)
        light = associativity_light(table)
        if (naive is None) != (light is None):
            disagreements += 1
        for w in (naive, light):
            if w is not None:
                assert w.revalidates(table)
    assert all(not latin_check(m).is_latin for m in mutants)
    assert disagreements == 0


@pytest.mark.acceptance("proof steps hold on 10,000 sampled squares")
def test_paper_step_properties():
    rng = random.Random(7)
    samples = 10_000
    associative = failures = 0
    for i in range(samples):
        n = 2 + i % 5
        table = random_latin(SampleConfig(n, rng.getrandbits(64)))
        witness = associativity_naive(table)
        if witness is None:
            associative += 1
            idem = idempotents(table)
            e = find_identity(table)
            if len(idem) != 1 or idem[0] != e:
                failures += 1
            elif inverse_map(table, e) is None:
                failures += 1
        elif not witness.revalidates(table):
            failures += 1
    assert associative > 0
    assert failures == 0


def _stdout(capsys, *argv):
    code = main(list(argv))
    out, _ = capsys.readouterr()
    return code, out


@pytest.mark.acceptance("determinism and parallel consistency")
def test_determinism_and_parallel(capsys):
    outputs = {}
    for p in (1, 2, 4):
        code, out = _stdout(capsys, "verify", "5", "--parallel", str(p), "--json")
        assert code == 0
        outputs[p] = out
    doc = json.loads(outputs[1])
    assert (doc["total_latin"], doc["associative_count"]) == (161280, 30)
    assert outputs[1] == outputs[2] == outputs[4]

    for n, seed in [(5, 42), (6, 7), (9, 123)]:
        runs = {_stdout(capsys, "gen", "random", str(n), "--seed", str(seed))[1] for _ in range(3)}
        assert len(runs) == 1
        runs = {_stdout(capsys, "gen", "random", str(n), "--seed", str(seed), "--json")[1] for _ in range(3)}
        assert len(runs) == 1


@pytest.mark.acceptance("parse/serialize round trip")
def test_round_trip():
    rng = random.Random(11)
    tables = [
        fixture_intro_square(),
        fixture_remark_loop(corrected=False),
        fixture_remark_loop(corrected=True),
    ]
    for i in range(1000):
        n = rng.randint(1, 10)
        if i % 3 == 0:
            t = CayleyTable(n, tuple(rng.randrange(n) for _ in range(n * n)))
        else:
            t = random_latin(SampleConfig(n, rng.getrandbits(64), rng.randint(1, n**3)))
        if i % 4 == 0:
            t = CayleyTable(t.n, t.entries, tuple(f"s{k}" for k in rng.sample(range(100), n)))
        tables.append(t)
    for t in tables:
        for fmt in ("text", "json"):
            assert parse(serialize(t, fmt), fmt) == t
