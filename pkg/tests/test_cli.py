import json
import subprocess
import sys

import pytest

from golden import TABLE1_CELLS
from lierep import __version__
from lierep.cli import main, render_table1
from lierep.enumeration import EnumerationResult, irreps_up_to
from lierep.euler import theta_chi_cubic
from lierep.reps import Irrep, dual
from lierep.rootsys import build
from lierep.search import report, run_search
from lierep.tensor import decompose


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--json")
    assert code == 0
    return json.loads(out)


def test_dim(capsys):
    assert run(capsys, "dim", "E6", "w1") == (0, "27\n", "")
    assert run(capsys, "dim", "A2", "2w1+2w2")[1] == "27\n"


def test_tensor_matches_library(capsys):
    v = Irrep(build("E6"), (1, 0, 0, 0, 0, 0))
    code, out, _ = run(capsys, "tensor", "E6", "w1", "--dual")
    assert code == 0
    assert out.strip() == decompose(v, dual(v)).render() == "27 (x) 27* = 1 + 78 + 650"
    assert run(capsys, "tensor", "A2", "w1+w2")[1].strip() == "8 (x) 8 = 1 + 2x8 + 10 + 10 + 27"


def test_search_matches_library(capsys):
    code, out, _ = run(capsys, "search", "--dimv", "27", "--dimw", "78")
    assert code == 0
    assert out.strip() == report(run_search(27, 78))


def test_euler_and_monodromy(capsys):
    assert run(capsys, "euler", "theta-cubic")[1].strip() == str(theta_chi_cubic())
    assert run(capsys, "euler", "blowup", "--g", "5", "--deg", "120", "--mult", "3")[1] == "81\n"
    assert run(capsys, "euler", "cc", "--stratum", "1:72", "--stratum", "6:1")[1] == "78\n"
    assert run(capsys, "euler", "coeff", "--num", "1,-4,5,0,-5,4,-1", "--den", "1,-3", "--k", "4")[1] == "13\n"
    assert run(capsys, "euler", "coeff", "--num", "1", "--den", "3", "--k", "0")[1] == "1/3\n"
    assert "index [W : M] = 2" in run(capsys, "monodromy", "--case", "ppav", "--g", "4")[1]
    assert "51840" in run(capsys, "monodromy", "--weyl", "E6", "--bruteforce")[1]


def test_json_envelope(capsys):
    env = run_json(capsys, "dim", "E6", "w2")
    assert set(env) == {"command", "inputs", "result", "version"}
    assert env["command"] == "dim" and env["version"] == __version__
    assert env["inputs"] == {"type": "E6", "weight": "w2"}
    assert env["result"] == {"dim": 78}
    # flag accepted before the subcommand as well
    code, out, _ = run(capsys, "--json", "euler", "point-mult", "--chi", "78", "--main", "72")
    assert json.loads(out)["result"] == {"value": 6}


def test_json_tensor_and_search(capsys):
    res = run_json(capsys, "tensor", "E6", "w1", "--dual")["result"]
    assert [s["dim"] for s in res["summands"]] == [1, 78, 650]
    res = run_json(capsys, "search", "--dimv", "27", "--dimw", "78")["result"]
    assert res["results"][0]["images"] == ["E6/Z"]
    res = run_json(capsys, "monodromy", "--case", "jacobian", "--g", "3", "--hyperelliptic")["result"]
    assert res["monodromy"]["order"] == 8 and res["index"] == 1


def test_enumerate_json_round_trip(capsys):
    res = run_json(capsys, "enumerate", "--max", "30", "--preset", "table1", "--no-defining")["result"]
    assert EnumerationResult.from_dict(res) == irreps_up_to(30, "table1", exclude_defining=True)
    res = run_json(capsys, "enumerate", "--dim", "27")["result"]
    assert len(res["entries"]) == 8


def test_enumerate_table_output(capsys):
    code, out, _ = run(capsys, "enumerate", "--max", "30", "--preset", "table1", "--no-defining")
    assert code == 0
    assert out.rstrip("\n") == render_table1()
    lines = out.splitlines()
    assert lines[0].split(" | ")[1].strip() == "A2"
    rows = {int(line.split("|")[0]): line for line in lines[2:]}
    assert sorted(rows) == list(range(2, 31))
    for d in range(2, 31):
        cells = [c.strip() for c in rows[d].split("|")[1:]]
        filled = sum(1 for c in cells if c != "-")
        assert filled == len(TABLE1_CELLS.get(d, {}))


def test_enumerate_list(capsys):
    code, out, _ = run(capsys, "enumerate", "--dim", "3")
    assert code == 0
    assert [line.split()[1:3] for line in out.splitlines()] == [["A1", "2w1"], ["A2", "w1"]]
    code, out, _ = run(capsys, "enumerate", "--max", "8", "--types", "A2,G2", "--list")
    assert "G2  w1" in out


@pytest.mark.parametrize(
    "argv",
    [
        ["enumerate"],
        ["enumerate", "--dim", "3", "--max", "4"],
        ["enumerate", "--dim", "3", "--preset", "table1"],
        ["enumerate", "--max", "4", "--preset", "table1", "--types", "A2"],
        ["search", "--dimv", "27"],
        ["nonsense"],
        ["monodromy"],
        ["euler", "cc", "--stratum", "3"],
        ["dim", "E6"],
    ],
)
def test_usage_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 2


@pytest.mark.parametrize(
    "argv",
    [
        ["dim", "E5", "w1"],
        ["dim", "A2", "w3"],
        ["dim", "A2", "w2-w1"],
        ["search", "--dimv", "1", "--dimw", "1"],
        ["euler", "point-mult", "--chi", "70", "--main", "72"],
        ["monodromy", "--case", "jacobian", "--g", "2"],
        ["char", "E8", "10w1", "--budget", "10"],
        ["tensor", "A2", "w1", "w2", "--dual"],
    ],
)
def test_domain_errors(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 1 and out == "" and err.startswith("lierep:")


def test_char(capsys):
    env = run_json(capsys, "char", "A2", "w1+w2")["result"]
    assert env["dim"] == 8
    assert sum(w["mult"] * w["orbit"] for w in env["weights"]) == 8


def test_module_entry_point():
    out = subprocess.run(
        [sys.executable, "-m", "lierep", "dim", "G2", "w2"], capture_output=True, text=True, check=True
    )
    assert out.stdout == "14\n"
