import json
import os
import tempfile

import pytest

from ncposet import cli


def run(capsys, command):
    code = cli.main(command)
    return code, capsys.readouterr().out


def test_count_with_brute_force(capsys):
    code, out = run(capsys, "count --d 2 --k 2 --brute")
    assert code == 0
    assert out == "formula=7 brute=7 OK\n"


def test_count_kinds(capsys):
    code, out = run(capsys, "count --d 2 --k 2 --kind small_blocks --format json")
    assert code == 0
    assert json.loads(out) == {"kind": "small_blocks", "d": 2, "formula": 5}

    code, out = run(capsys, "count --d 1 --kind rank_count --i 1 --j 2 --brute")
    assert code == 0
    assert out == "formula=6 brute=6 OK\n"


def test_count_from_n(capsys):
    code, out = run(capsys, "count --d 3 --n 7")
    assert code == 0
    assert out == "formula=9\n"


def test_count_mismatch_exits_one(capsys, mocker):
    mocker.patch("ncposet.cli.commands.brute_force_count", return_value=8)
    code, out = run(capsys, "count --d 2 --k 2 --brute")
    assert code == 1
    assert out == "formula=7 brute=8 MISMATCH\n"


def test_mobius(capsys):
    assert run(capsys, "mobius --d 1 --k 3") == (0, "-5\n")
    code, out = run(capsys, "mobius --d 2 --n 5 --format json")
    assert code == 0
    assert json.loads(out) == {"mobius": 4, "formula": 4}


def test_table(capsys):
    code, out = run(capsys, "table --d 1 --k 3 --format json --brute")
    assert code == 0
    assert json.loads(out) == [[1], [1, 1], [1, 3, 1], [1, 6, 6, 1]]

    code, out = run(capsys, "table --d 2 --k 2 --format csv")
    assert code == 0
    assert out.splitlines()[-1] == "2,1,5,1"


def test_poset(capsys):
    code, out = run(capsys, "poset --d 2 --k 2 --format json")
    assert code == 0
    payload = json.loads(out)
    assert len(payload["elements"]) == 7
    assert len(payload["covers"]) == 10

    code, out = run(capsys, "poset --d 2 --k 2 --generator filter --format csv")
    assert code == 0
    assert len(out.splitlines()) == 8


def test_chains(capsys):
    assert run(capsys, "chains --d 1 --k 3 --emit count") == (0, "16\n")
    code, out = run(capsys, "chains --d 2 --k 2")
    assert code == 0
    assert sorted(out.splitlines()) == ["1,1", "1,2", "1,3", "2,1", "3,1"]


def test_parking_chain(capsys):
    code, out = run(capsys, "parking --d 2 --values 2,1,3,1,3 --format json")
    assert code == 0
    chain = json.loads(out)
    assert len(chain) == 6
    assert chain[1]["blocks"] == [[1], [2, 3, 8], [4], [5], [6], [7], [9], [10], [11]]

    code, out = run(capsys, "parking --d 2 --values 2,1,3,1,3")
    assert out.splitlines()[2] == "1,10,11|2,3,8|4|5|6|7|9"


def test_parking_tree_and_expansion(capsys):
    code, out = run(capsys, "parking --d 2 --values 2,1,3,1,3 --emit tree")
    assert code == 0
    assert out == "inf(4_1(1_1(5_1, 5_2, 3_1, 3_2), 1_2), 4_2, 2_1, 2_2)\n"
    assert run(capsys, "parking --d 2 --values 2,1,3,1,3 --emit expansion") == (
        0,
        "(2,2,1,1,3,3,1,1,3,3)\n",
    )


def test_parking_listing(capsys):
    assert run(capsys, "parking --d 1 --k 3 --emit count") == (0, "16\n")
    code, out = run(capsys, "parking --d 2 --k 2 --emit count --format json")
    assert code == 0
    assert json.loads(out) == {"count": 5}
    code, out = run(capsys, "parking --d 2 --k 2 --format json")
    assert code == 0
    assert sorted(json.loads(out)) == [[1, 1], [1, 2], [1, 3], [2, 1], [3, 1]]


def test_trees(capsys):
    assert run(capsys, "trees --d 2 --k 2") == (0, "7\n")
    assert run(capsys, "trees --d 2 --n 4 --constraint d_ary") == (0, "2\n")
    assert run(capsys, "trees --d 1 --n 3 --constraint all") == (0, "5\n")
    code, out = run(capsys, "trees --d 2 --k 1 --emit partitions")
    assert code == 0
    assert sorted(out.splitlines()) == ["1,2,3", "1|2|3"]


def test_antipode(capsys):
    assert run(capsys, "antipode --d 1 --k 2") == (0, "-[3] + 3*[2,2]\n")
    code, out = run(capsys, "antipode --d 2 --k 2 --method hypertree --format json")
    assert code == 0
    assert json.loads(out) == {"hypertree": [{"sizes": [5], "coeff": -1}, {"sizes": [3, 3], "coeff": 5}]}


def test_verify(capsys):
    code, out = run(capsys, "verify --d 2 --k 2 --seed 3")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 18
    assert all(": OK" in line for line in lines)


def test_verify_json(capsys):
    code, out = run(capsys, "verify --d 2 --k 2 --format json")
    assert code == 0
    results = json.loads(out)
    assert len(results) == 18
    assert {result["status"] for result in results} == {"OK"}
    assert set(results[0]) == {"name", "status", "detail"}


def test_verify_with_skipped_checks_exits_one(capsys, monkeypatch):
    monkeypatch.setenv("NCPOSET_CHAIN_BUDGET", "3")
    code, out = run(capsys, "verify --d 1 --k 3")
    assert code == 1
    assert "chains: SKIP over budget, 16 > 3" in out.splitlines()
    assert "FAIL" not in out


def test_verify_error_in_a_check_exits_one(capsys, mocker):
    mocker.patch("ncposet.verify.el_check", side_effect=ValueError("not a cover"))
    code, out = run(capsys, "verify --d 2 --k 2")
    assert code == 1
    assert "el_labeling: FAIL ValueError: not a cover" in out.splitlines()


def test_series(capsys):
    code, out = run(capsys, "series --d 2 --k 2 --format csv")
    assert code == 0
    assert out.splitlines()[-1] == "2,1,5,1"
    code, out = run(capsys, "series --d 1 --k 1 --format json")
    assert json.loads(out)["order"] == 1


def test_render_to_file(capsys):
    _, file_path = tempfile.mkstemp(suffix=".svg")
    code, out = run(capsys, f"render --what circle --partition 1|2,9,10|3|4,5,6,7,8|11 --out {file_path}")
    assert code == 0
    assert out == ""
    with open(file_path) as handle:
        assert "<svg" in handle.read()
    os.remove(file_path)


def test_render_needs_input(capsys):
    assert run(capsys, "render --what parking-tree --d 2")[0] == 2
    assert run(capsys, "render --what tree")[0] == 2
    assert run(capsys, "render --partition 1|2 --format json")[0] == 2


@pytest.mark.parametrize(
    "command",
    [
        "mobius --d 2 --n 4",
        "mobius --d 0 --k 2",
        "mobius --d 1",
        "count --d 1 --k -1",
        "count --d 1 --kind rank_count",
        "parking --d 1 --values 2,2",
        "poset --d 1 --k 7 --budget 10",
        "poset --d 1 --k 2 --budget 0",
        "chains --d 1 --k 2 --format csv",
    ],
)
def test_usage_errors(capsys, command):
    assert run(capsys, command) == (2, "")


def test_chain_budget_from_environment(capsys, monkeypatch):
    monkeypatch.setenv("NCPOSET_CHAIN_BUDGET", "3")
    assert run(capsys, "chains --d 1 --k 3 --emit count")[0] == 2


def test_config_file(capsys):
    _, file_path = tempfile.mkstemp(suffix=".yaml")
    with open(file_path, "w") as handle:
        handle.write("default_format: json\n")
    code, out = run(capsys, f"mobius --d 1 --k 2 --config {file_path}")
    os.remove(file_path)
    assert code == 0
    assert json.loads(out)["mobius"] == 2


def test_unknown_command():
    with pytest.raises(SystemExit) as error:
        cli.main("shuffle --d 2")
    assert error.value.code == 2
