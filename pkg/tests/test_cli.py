import csv
import io
import json
import math
import subprocess
import sys

import pytest

from fwchain.chain import build_chain
from fwchain.cli import EXIT_NUMERIC, EXIT_OK, EXIT_USAGE, main, read_points
from fwchain.geometry import Point2

from reference_tables import CHAIN4, CHAIN5


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def write_points(path, pts):
    path.write_text("# x,y\n" + "\n".join(f"{p.x!r}, {p.y!r}" for p in pts) + "\n")
    return str(path)


def test_chain_command(capsys):
    code, out, _ = run(capsys, "chain", "--n", "10", "--k", "5")
    assert code == EXIT_OK
    data = json.loads(out)
    assert data["psi_star"] == pytest.approx(3.51502, abs=1e-5)
    assert data["x_star"] == pytest.approx(0.82332, abs=1e-5)
    assert data["at_root"] is False


def test_chain_full_square(capsys):
    data = json.loads(run(capsys, "chain", "--n", "4", "--k", "4")[1])
    assert data["psi_star"] == 4.0 and data["x_star"] == 0.0


def test_chain_invalid(capsys):
    code, out, err = run(capsys, "chain", "--n", "2", "--k", "5")
    assert code == EXIT_NUMERIC and out == "" and "k" in err


def test_usage_errors(capsys):
    assert run(capsys, "chain", "--n", "ten", "--k", "5")[0] == EXIT_USAGE
    assert run(capsys, "bogus")[0] == EXIT_USAGE
    assert run(capsys)[0] == EXIT_USAGE


@pytest.mark.parametrize("k,nmax,table", [(4, 18, CHAIN4), (5, 19, CHAIN5)])
def test_table_command(capsys, k, nmax, table):
    code, out, _ = run(capsys, "table", "--k", str(k), "--n-max", str(nmax))
    assert code == EXIT_OK
    rows = list(csv.DictReader(io.StringIO(out)))
    assert list(rows[0]) == ["n", "psi", "x"]
    assert len(rows) == 15
    for row in rows:
        psi, x = table[int(row["n"])]
        assert float(row["psi"]) == pytest.approx(psi, abs=1e-4)
        assert float(row["x"]) == pytest.approx(x, abs=1e-4)


def test_table_triangle(capsys):
    rows = list(csv.reader(io.StringIO(run(capsys, "table", "--k", "3", "--n-max", "3")[1])))
    assert rows[0] == ["n", "psi", "x"] and len(rows) == 2
    assert float(rows[1][1]) == pytest.approx(3.0, abs=1e-5)


def test_table_bad_range(capsys):
    assert run(capsys, "table", "--k", "6", "--n-max", "5")[0] == EXIT_NUMERIC


@pytest.mark.parametrize("k,n", [(13, 132), (151, 17907)])
def test_nk_command(capsys, k, n):
    data = json.loads(run(capsys, "nk", "--k", str(k))[1])
    assert data["N"] == n
    assert data["certificate_low"] > 0 >= data["certificate_high"]


def test_nk_even(capsys):
    code, out, err = run(capsys, "nk", "--k", "4")
    assert code == EXIT_NUMERIC and "undefined" in err and "even" in err


def test_solve_square(capsys, tmp_path):
    f = write_points(tmp_path / "sq.csv", [Point2(0, 0), Point2(2, 0), Point2(2, 2), Point2(0, 2)])
    data = json.loads(run(capsys, "solve", f)[1])
    assert data["location"] == pytest.approx([1.0, 1.0], abs=1e-6)
    assert data["objective"] == pytest.approx(2 * 2 * math.sqrt(8) / 2, abs=1e-5)
    assert data["converged"] is True


def test_solve_obtuse_triangle(capsys, tmp_path):
    f = write_points(tmp_path / "tri.csv", [Point2(-2, -0.1), Point2(0, 0), Point2(2, -0.2)])
    data = json.loads(run(capsys, "solve", f)[1])
    assert data["at_fixed_point_index"] == 1
    assert data["location"] == [0.0, 0.0]


def test_solve_chain_json(capsys, tmp_path):
    f = tmp_path / "c19.json"
    f.write_text(json.dumps([list(p) for p in build_chain(19, 5).vertices]))
    data = json.loads(run(capsys, "--precise", "solve", str(f))[1])
    assert data["location"] == [1.0, 0.0]
    assert data["at_fixed_point_index"] == 2


@pytest.mark.parametrize("content,name", [("", "e.csv"), ("1,2,3\n", "bad.csv"), ("x,y\n", "bad2.csv"), ("{", "bad.json")])
def test_solve_parse_errors(capsys, tmp_path, content, name):
    f = tmp_path / name
    f.write_text(content)
    assert run(capsys, "solve", str(f))[0] == EXIT_NUMERIC


def test_solve_missing_file(capsys, tmp_path):
    assert run(capsys, "solve", str(tmp_path / "nope.csv"))[0] == EXIT_USAGE


def test_detect_chain(capsys, tmp_path):
    f = write_points(tmp_path / "c12.csv", build_chain(12, 5).vertices)
    data = json.loads(run(capsys, "detect", f)[1])
    assert data["is_extension_member"] is True and data["weber_at_pivot"] is False
    assert data["pivot"] == [1.0, 0.0]


def test_detect_slid_chain(capsys, tmp_path, rng):
    ch = build_chain(25, 5)
    root = Point2(1.0, 0.0)
    pts = [p if p == root else root + (p - root) * rng.uniform(0.2, 2.5) for p in ch.vertices]
    data = json.loads(run(capsys, "detect", write_points(tmp_path / "t.csv", pts))[1])
    assert data["is_extension_member"] is True and data["weber_at_pivot"] is True


def test_detect_random(capsys, tmp_path, rng):
    pts = [Point2(rng.uniform(-1, 1), rng.uniform(-1, 1)) for _ in range(7)]
    data = json.loads(run(capsys, "detect", write_points(tmp_path / "r.csv", pts))[1])
    assert data["is_extension_member"] is False and data["pivot"] is None


def test_detect_even(capsys, tmp_path):
    f = write_points(tmp_path / "e.csv", build_chain(8, 4).vertices)
    code, _, err = run(capsys, "detect", f)
    assert code == EXIT_NUMERIC and "odd" in err


def test_precise_round_trip(capsys):
    data = json.loads(run(capsys, "--precise", "chain", "--n", "18", "--k", "5")[1])
    from fwchain.chain import minimize_on_axis
    res = minimize_on_axis(build_chain(18, 5))
    assert data["x_star"] == res.x_star and data["psi_star"] == res.psi_star
    short = json.loads(run(capsys, "chain", "--n", "18", "--k", "5")[1])
    assert short["x_star"] == float(f"{res.x_star:.6g}")


def test_read_points_comments_and_whitespace(tmp_path):
    f = tmp_path / "p.txt"
    f.write_text("# header\n 1.5 , -2\n\n3,4  # trailing\n")
    assert read_points(f) == [Point2(1.5, -2.0), Point2(3.0, 4.0)]


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "fwchain", "nk", "--k", "5"], capture_output=True, text=True)
    assert proc.returncode == 0 and json.loads(proc.stdout)["N"] == 19
