import json
import subprocess
import sys

import pytest

from shortchords import tableaux
from shortchords.cli import RunConfig, main, run_single, run_verify_all


@pytest.fixture(autouse=True)
def _reset_cache():
    yield
    tableaux.set_cache_dir(None)
    tableaux._shape_counts.cache_clear()


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_core_command(capsys):
    code, out, _ = run(capsys, "core", "{(1,2),(3,5),(4)}")
    data = json.loads(out)
    assert code == 0
    assert data["core"] == "{(1,3),(2)}" and data["stable"] == [3, 4, 5]


def test_bessel_command(capsys):
    code, out, _ = run(capsys, "bessel", "3")
    data = json.loads(out)
    assert data["theta"] == "x^3 + 6x^2 + 15x + 15"
    assert data["h"] == [5, 6, 3, 1] == data["h_brute_force"]


def test_expand_command(capsys):
    code, out, _ = run(capsys, "expand", "--set", "matchings", "--N", "6", "--f", "0")
    data = json.loads(out)
    assert {tuple(c["shape"]): c["c"] for c in data["coeffs"]} == {(6,): 5, (5, 1): 1, (3, 3): 1}
    assert data["sparse_criterion"] == {"holds": True, "coefficients": [5, 1, 0, 1]}
    code, out, _ = run(capsys, "expand", "--set", "matchings", "--N", "6", "--f", "0", "--format", "csv")
    assert out.splitlines() == ["shape,coefficient", "6,5", '"5,1",1', '"3,3",1']
    code, out, _ = run(capsys, "expand", "--set", "shape", "--shape", "3,2", "--format", "text")
    assert out.strip() == "s[3,2]"


def test_expand_complement(capsys):
    code, out, _ = run(capsys, "expand", "--N", "4", "--f", "0", "--complement", "--format", "text")
    assert out.strip() == "s[2,2] + s[1,1,1,1]"


def test_enumerate_csv(capsys):
    code, out, _ = run(capsys, "--format", "csv", "enumerate", "4", "0")
    assert out.splitlines() == ["index,matching,short", "0,\"{(1,2),(3,4)}\",1 3",
                                "1,\"{(1,3),(2,4)}\",", "2,\"{(1,4),(2,3)}\",2"]


def test_short_and_forward(capsys):
    _, out, _ = run(capsys, "short", "{(1,3),(2,6),(4,5)}")
    assert json.loads(out)["short"] == [4]
    _, out, _ = run(capsys, "forward", "{(1,7),(2,10),(3,6),(4,5),(8,9)}")
    data = json.loads(out)
    assert data["tableau"] == "1,2,3,4,7,8,10/5,6,9" and data["descents"] == [4, 8]


def test_inverse_command(capsys):
    _, out, _ = run(capsys, "inverse", "{(1,3),(2,4)}", "--row2", "5,6,9", "--N", "10", "--format", "text")
    assert out.strip() == "{(1,7),(2,10),(3,6),(4,5),(8,9)}"
    _, out, _ = run(capsys, "inverse", "{(1,3),(2)}", "1,3,4,5/2", "--format", "text")
    assert out.strip() == "{(1,2),(3,5),(4)}"
    code, _, err = run(capsys, "inverse", "{(1,2)}", "1,2")
    assert code == 2 and "short chord" in err


def test_classes_command(capsys):
    _, out, _ = run(capsys, "classes", "4", "0")
    data = json.loads(out)
    assert sorted(c["size"] for c in data["classes"]) == [1, 2]
    assert {c["generating_function"] for c in data["classes"]} == {"s[4]", "s[2,2]"}


def test_avoid_and_refine(capsys):
    _, out, _ = run(capsys, "avoid", "4", "0", "--pattern", "{(1,3),(2,4)}")
    data = json.loads(out)
    assert data["count"] == 2 and data["schur_positive"]
    _, out, _ = run(capsys, "avoid", "3", "1", "--pattern", "{(1,2),(3)}")
    assert json.loads(out)["symmetric"] is False
    _, out, _ = run(capsys, "refine", "4", "0", "--key", "crossing")
    cells = json.loads(out)["cells"]
    assert [(c["value"], c["size"], c["expansion"]) for c in cells] == [("1", 2, "s[2,2]"), ("2", 1, "s[4]")]


def test_schreier_and_conjecture(capsys):
    _, out, _ = run(capsys, "schreier", "8")
    data = json.loads(out)
    assert data["vertices"] == 105 and data["bipartite_ignoring_loops"] and data["graded"]
    _, out, _ = run(capsys, "schreier", "4", "--export", "dot")
    assert out.startswith("graph schreier_4 {")
    _, out, _ = run(capsys, "conjecture", "6")
    data = json.loads(out)
    assert data["equidistributed"] and data["des"]["expansion"] == "s[6] + s[4,2] + s[2,2,2]"


def test_verify_small_bound(capsys):
    code, out, _ = run(capsys, "verify", "--max-n", "4", "--max-2n", "6")
    data = json.loads(out)
    assert code == 0 and data["passed"]
    two_row = next(c for c in data["checks"] if c["name"] == "two_row")
    cell = next(e for e in two_row["expansions"] if (e["N"], e["f"]) == (4, 0))
    assert cell["expansion"] == "s[4] + s[2,2]"
    assert two_row["provenance"]["bounds"] == {"N": 4}
    assert all("seconds" not in c for c in data["checks"])


def test_verify_is_deterministic(capsys):
    args = ("verify", "--max-n", "5", "--max-2n", "6", "--check", "bijection", "--check", "hook", "--seed", "7")
    _, first, _ = run(capsys, *args)
    _, second, _ = run(capsys, *args)
    _, threaded, _ = run(capsys, *args, "--threads", "2")
    assert first == second == threaded


def test_verify_timings_opt_in(capsys):
    _, out, _ = run(capsys, "verify", "--max-n", "3", "--max-2n", "4", "--check", "hook", "--timings")
    assert "seconds" in json.loads(out)["checks"][0]


def test_invalid_cache_dir(capsys, tmp_path):
    blocker = tmp_path / "file"
    blocker.write_text("x")
    code, out, err = run(capsys, "verify", "--max-n", "3", "--cache-dir", str(blocker / "sub"))
    assert code == 2 and out == "" and "cache directory" in err


def test_cache_dir_from_env(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv(tableaux.CACHE_ENV, str(tmp_path))
    tableaux._shape_counts.cache_clear()
    code, _, _ = run(capsys, "expand", "--set", "shape", "--shape", "4,2")
    assert code == 0
    assert (tmp_path / "N6" / "shape_4_2.txt").exists()


def test_parse_error_reports_position(capsys):
    code, out, err = run(capsys, "core", "{(1,2),(3")
    assert code == 2 and "position 7" in err


def test_bounds_fail_fast(capsys):
    code, _, err = run(capsys, "enumerate", "18", "0")
    assert code == 2 and "34459425" in err
    code, _, err = run(capsys, "--max-n", "5", "classes", "6", "0")
    assert code == 2 and "exceeds the bound 5" in err
    code, _, err = run(capsys, "verify", "--max-n", "17")
    assert code == 2 and "hard limit" in err
    code, _, err = run(capsys, "conjecture", "16")
    assert code == 2 and "2027025" in err


def test_run_single_api():
    report = run_single(RunConfig("bessel", {"n": 2}))
    assert report.data["h"] == [1, 1, 1]
    report = run_verify_all(RunConfig("verify", {"check": ["hook"]}, max_n=4))
    assert report.exit_code == 0


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "shortchords", "bessel", "2", "--format", "text"],
                          capture_output=True, text=True, check=True)
    assert "x^2 + 3x + 3" in proc.stdout
