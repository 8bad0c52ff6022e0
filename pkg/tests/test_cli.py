import csv
import io
import json
import subprocess
import sys
from fractions import Fraction as F

import pytest

from drgresist import FamilySpec, family_array, resistance_table, spectral_data
from drgresist import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_resist_biggs_smith_json(capsys):
    code, out, _ = run(capsys, "resist", "--family", "biggs_smith", "--format", "json", "--exact")
    assert code == 0
    obj = json.loads(out)
    assert obj["R"][-1] == {"m": 7, "num": "65", "den": "51"}
    recomputed = resistance_table(family_array(FamilySpec("biggs_smith")))
    assert tuple(F(int(e["num"]), int(e["den"])) for e in obj["R"]) == recomputed.R


def test_resist_raw_array(capsys):
    code, out, _ = run(capsys, "resist", "--array", '{"b":[1],"c":[1]}', "--format", "json", "--exact")
    assert code == 0
    assert json.loads(out)["R"] == [{"m": 1, "num": "1", "den": "1"}]


def test_verify_hypercube(capsys):
    code, out, _ = run(capsys, "verify", "--family", "hypercube", "--param", "d=4", "--format", "json")
    assert code == 0
    report = json.loads(out)
    assert report["oracle_vs_recursion"] == "exact-match"
    assert report["strata_sizes"] == [1, 4, 6, 4, 1]
    assert report["family"] == {"family": "hypercube", "params": {"d": 4}}


def test_verify_spectral_route(capsys):
    code, out, _ = run(capsys, "verify", "--family", "foster")
    assert code == 0 and "spectral-match" in out


def test_verify_mismatch_exit_code(capsys, monkeypatch):
    real = cli.resistance_table

    def skewed(arr):
        t = real(arr)
        return type(t)(t.arr, (t.R[0] + 1,) + t.R[1:], t.increments, t.commute)

    monkeypatch.setattr(cli, "resistance_table", skewed)
    code, out, _ = run(capsys, "verify", "--family", "cycle", "--param", "N=6")
    assert code == 2 and "MISMATCH" in out


def test_spectral_json_round_trip(capsys):
    code, out, _ = run(capsys, "spectral", "--family", "hypercube", "--param", "d=3", "--format", "json")
    assert code == 0
    obj = json.loads(out)
    sd = spectral_data(family_array(FamilySpec("hypercube", {"d": 3})))
    assert obj["eigenvalues"] == list(sd.eigenvalues)
    assert obj["masses"] == list(sd.masses)
    assert obj["eigenvalues"] == pytest.approx([3, 1, -1, -3], abs=1e-12)


def test_csv_output(capsys):
    code, out, _ = run(capsys, "resist", "--family", "cycle", "--param", "N=6", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0
    assert [(r["R_num"], r["R_den"]) for r in rows] == [("5", "6"), ("4", "3"), ("3", "2")]


def test_float_rendering(capsys):
    _, out, _ = run(capsys, "resist", "--family", "m22", "--format", "json")
    assert json.loads(out)["R"][0]["value"] == float(f"{47 / 165:.15g}")


@pytest.mark.parametrize(
    "argv",
    [
        ["resist", "--family", "cycle", "--param", "N=6", "--format", "table", "--exact"],
        ["spectral", "--family", "johnson", "--param", "n=6", "--param", "d=3"],
        ["walk", "--family", "cycle", "--param", "N=6", "--walks", "500", "--seed", "9", "--format", "json"],
        ["families", "--format", "json"],
    ],
)
def test_byte_identical(capsys, argv):
    first = run(capsys, *argv)
    assert first[0] == 0
    assert run(capsys, *argv) == first


def test_walk_json(capsys):
    code, out, _ = run(capsys, "walk", "--family", "hypercube", "--param", "d=3", "--walks", "20000",
                       "--seed", "5", "--source", "0/7", "--format", "json")
    obj = json.loads(out)
    assert code == 0 and obj["stratum"] == 3
    assert obj["analytic"] == {"num": "20", "den": "1", "value": 20.0}
    assert abs(obj["mean"] - 20) <= 4 * obj["stderr"]


def test_families_listing(capsys):
    code, out, _ = run(capsys, "families", "--format", "json")
    names = {f["name"]: f for f in json.loads(out)}
    assert code == 0 and names["biggs_smith"]["N"] == 102
    assert {"cycle", "hypercube", "johnson", "complete", "foster"} <= set(names)


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["bogus"],
        ["resist"],
        ["resist", "--family", "cycle", "--param", "N=6", "--array", '{"b":[1],"c":[1]}'],
        ["resist", "--family", "cycle", "--param", "N"],
        ["resist", "--family", "cycle", "--param", "N=six"],
        ["resist", "--family", "cycle", "--param", "N=2"],
        ["resist", "--family", "nope"],
        ["resist", "--array", "{not json"],
        ["resist", "--array", '{"b":[3,2],"c":[2,3]}'],
        ["resist", "--array", '{"b":[1],"c":[1]}', "--param", "d=3"],
        ["resist", "--family", "m22", "--format", "xml"],
        ["walk", "--family", "foster"],
        ["walk", "--array", '{"b":[1],"c":[1]}'],
        ["walk", "--family", "cycle", "--param", "N=6", "--source", "0/0"],
        ["walk", "--family", "cycle", "--param", "N=6", "--source", "0-1"],
        ["walk", "--family", "cycle", "--param", "N=6", "--walks", "0"],
        ["spectral", "--array", '{"b":[0],"c":[1]}'],
        ["verify", "--array", '[1, 2]'],
    ],
)
def test_bad_input_exit_1(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 1
    assert out == ""
    assert err.startswith("drgresist:") and "Traceback" not in err


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "drgresist.cli", "resist", "--array", '{"b":[1],"c":[1]}'],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "1" in proc.stdout
    proc = subprocess.run([sys.executable, "-m", "drgresist.cli", "resist", "--family", "nope"],
                          capture_output=True, text=True)
    assert proc.returncode == 1 and "Traceback" not in proc.stderr
