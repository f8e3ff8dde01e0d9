import json
import subprocess
import sys

import pytest

from latinsq import cyclic_table, fixture_intro_square, fixture_remark_loop, latin_check, parse_text, serialize
from latinsq.cli import main


@pytest.fixture
def write(tmp_path):
    def _write(name, text):
        path = tmp_path / name
        path.write_text(text)
        return str(path)
    return _write


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_validate_intro(capsys, write):
    path = write("intro.txt", serialize(fixture_intro_square()))
    code, out, _ = run(capsys, "validate", path)
    assert code == 0
    assert "Latin square" in out


def test_validate_verbatim_remark(capsys, write):
    path = write("remark.txt", serialize(fixture_remark_loop(corrected=False)))
    code, out, _ = run(capsys, "validate", path)
    assert code == 1
    assert "row 4: symbol 6 repeated in columns 2 and 3" in out
    code, out, _ = run(capsys, "validate", path, "--json")
    doc = json.loads(out)
    assert code == 1 and doc["indexing"] == "0-based" and not doc["is_latin"]
    assert doc["violations"][0] == {"axis": "row", "line": 3, "symbol": 5, "first": 1, "second": 2}


def test_validate_ragged_file(capsys, write):
    path = write("ragged.txt", "1 2\n2\n")
    code, _, err = run(capsys, "validate", path)
    assert code == 2
    assert "line 2" in err


def test_validate_missing_file(capsys, tmp_path):
    code, _, err = run(capsys, "validate", str(tmp_path / "absent.txt"))
    assert code == 2 and "cannot read" in err


def test_validate_json_format_sniffing(capsys, write):
    path = write("t.json", serialize(cyclic_table(3), "json"))
    assert run(capsys, "validate", path)[0] == 0
    text_path = write("t.dat", serialize(cyclic_table(3), "json"))
    assert run(capsys, "validate", text_path)[0] == 2
    assert run(capsys, "validate", text_path, "--format", "json")[0] == 0


def test_classify_remark_corrected(capsys, write):
    path = write("loop.txt", serialize(fixture_remark_loop(corrected=True)))
    code, out, _ = run(capsys, "classify", path)
    assert code == 0
    assert "class: Loop" in out
    assert "identity: 1" in out
    assert "witness: 3 = 6·4 = (4·2)·4 ≠ 4·(2·4) = 4·5 = 2" in out
    assert "inverses: 1<->1, 2<->3, 4<->4, 5<->6" in out


def test_classify_cyclic_and_intro(capsys, write):
    code, out, _ = run(capsys, "classify", write("c6.txt", serialize(cyclic_table(6))))
    assert code == 0 and "class: AbelianGroup" in out
    code, out, _ = run(capsys, "classify", write("intro.txt", serialize(fixture_intro_square())))
    assert code == 0 and "class: Quasigroup" in out


def test_classify_json_and_algo(capsys, write):
    path = write("loop.txt", serialize(fixture_remark_loop(corrected=True)))
    code, out, _ = run(capsys, "classify", path, "--json", "--algo", "light")
    doc = json.loads(out)
    assert doc["class"] == "Loop" and doc["algorithm"] == "light"
    assert doc["indexing"] == "0-based" and doc["identity"] == 0


def test_classify_non_latin_exits_zero(capsys, write):
    path = write("remark.txt", serialize(fixture_remark_loop(corrected=False)))
    code, out, _ = run(capsys, "classify", path)
    assert code == 0 and "class: NotLatin" in out


def test_gen_fixture_intro(capsys):
    code, out, _ = run(capsys, "gen", "fixture", "intro")
    assert code == 0
    assert out == "2 3 1 4\n1 4 2 3\n3 1 4 2\n4 2 3 1\n"


def test_gen_cyclic_and_product(capsys):
    code, out, _ = run(capsys, "gen", "cyclic", "5")
    assert parse_text(out) == cyclic_table(5)
    code, out, _ = run(capsys, "gen", "product", "2", "2")
    assert code == 0 and parse_text(out).n == 4


def test_gen_product_from_files(capsys, write):
    a = write("a.txt", serialize(cyclic_table(2)))
    code, out, _ = run(capsys, "gen", "product", a, "3", "--json")
    doc = json.loads(out)
    assert code == 0 and doc["n"] == 6 and doc["indexing"] == "0-based"


def test_gen_random_is_deterministic_and_latin(capsys):
    _, first, _ = run(capsys, "gen", "random", "6", "--seed", "7")
    _, second, _ = run(capsys, "gen", "random", "6", "--seed", "7")
    assert first == second
    assert latin_check(parse_text(first)).is_latin


def test_gen_out_file(capsys, tmp_path):
    out_path = tmp_path / "z.json"
    code, out, _ = run(capsys, "gen", "cyclic", "3", "--format", "json", "--out", str(out_path))
    assert code == 0 and out == ""
    assert json.loads(out_path.read_text())["table"] == cyclic_table(3).rows()


@pytest.mark.parametrize(
    "argv",
    [
        ["gen", "cyclic"],
        ["gen", "cyclic", "0"],
        ["gen", "cyclic", "x"],
        ["gen", "fixture", "nope"],
        ["gen", "random", "4", "--steps", "0"],
        ["gen", "product", "2"],
    ],
)
def test_gen_bad_params(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "4")
    assert code == 0 and out == "576 Latin squares of order 4\n"
    code, out, _ = run(capsys, "enumerate", "4", "--fixed-first-row", "--json")
    assert json.loads(out)["count"] == 24
    code, out, _ = run(capsys, "enumerate", "2", "--print")
    assert out == "1 2\n2 1\n\n2 1\n1 2\n\n2 Latin squares of order 2\n"
    assert run(capsys, "enumerate", "6")[0] == 2


def test_verify(capsys):
    code, out, err = run(capsys, "verify", "4")
    assert code == 0
    assert "576 Latin squares, 16 associative, 0 violations" in out
    assert "elapsed" in err and "elapsed" not in out


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "3", "--json")
    doc = json.loads(out)
    assert code == 0 and doc["total_latin"] == 12 and doc["indexing"] == "0-based"


def test_verify_sampled(capsys):
    code, out, _ = run(capsys, "verify", "2", "--sampled", "50", "--seed", "3")
    assert code == 0 and "50 Latin squares, 50 associative, 0 violations" in out


def test_verify_guard(capsys):
    code, _, err = run(capsys, "verify", "6")
    assert code == 2 and "override" in err
    assert run(capsys, "verify", "3", "--parallel", "0")[0] == 2


def test_usage_errors_exit_two(capsys):
    with pytest.raises(SystemExit) as info:
        main(["frobnicate"])
    assert info.value.code == 2


def test_module_entry_point_stdin():
    proc = subprocess.run(
        [sys.executable, "-m", "latinsq", "classify", "-"],
        input=serialize(cyclic_table(4)), capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert "class: AbelianGroup" in proc.stdout
