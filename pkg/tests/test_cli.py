import csv
import io

import pytest

from ogc.cli import (EXIT_CHECK, EXIT_IO, EXIT_OK, EXIT_PARSE, EXIT_USAGE, SWEEP_HEADER, RunConfig,
                     main, parse_int_range, run_duel, sweep_csv)
from ogc.game import Transcript


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def fields(line):
    return dict(tok.split("=", 1) for tok in line.split())


def test_duel_bipartite_first_fit(capsys, tmp_path):
    path = tmp_path / "t.txt"
    code, out, _ = run(capsys, "duel", "--presenter", "bipartite", "--algorithm", "first-fit",
                       "-c", "4", "--out", str(path))
    assert code == EXIT_OK
    f = fields(out)
    assert (f["n"], f["colors"], f["bound_ok"], f["class_ok"]) == ("6", "4", "1", "1")
    assert Transcript.from_text(path.read_text()).c == 4


def test_duel_examples(capsys):
    code, out, _ = run(capsys, "duel", "--presenter", "triangle-free", "--algorithm", "first-fit", "-c", "3")
    assert code == EXIT_OK and fields(out)["n"] == "6" and fields(out)["class_ok"] == "1"
    code, out, _ = run(capsys, "duel", "--presenter", "bipartite", "--algorithm", "fresh", "-c", "3")
    assert code == EXIT_OK and fields(out)["n"] == "3"


def test_unknown_strategy_is_a_usage_error(capsys):
    code, _, err = run(capsys, "duel", "--presenter", "nope", "--algorithm", "first-fit", "-c", "3")
    assert code == EXIT_USAGE and "nope" in err
    code, _, _ = run(capsys, "sweep", "--presenter", "bipartite", "--algorithm", "first-fit,zz", "-c", "2")
    assert code == EXIT_USAGE
    with pytest.raises(SystemExit) as e:
        main(["duel", "--presenter", "bipartite"])
    assert e.value.code == EXIT_USAGE


def test_verify_and_replay(capsys, tmp_path):
    path = tmp_path / "og7.txt"
    assert run(capsys, "duel", "--presenter", "odd-girth-7", "--algorithm", "first-fit", "-c", "3",
               "--out", str(path))[0] == EXIT_OK
    code, out, _ = run(capsys, "verify", str(path))
    assert code == EXIT_OK
    girth = fields(out)["odd_girth"]
    assert girth == "INFINITE" or (int(girth) >= 7 and int(girth) % 2 == 1)
    code, out, _ = run(capsys, "replay", str(path))
    assert code == EXIT_OK and fields(out)["n"] == "541" and fields(out)["reason"] == "TargetReached"

    bip = tmp_path / "bip.txt"
    run(capsys, "duel", "--presenter", "bipartite", "--algorithm", "cbip", "-c", "5", "--out", str(bip))
    code, out, _ = run(capsys, "verify", str(bip))
    assert code == EXIT_OK and fields(out)["odd_girth"] == "INFINITE"


def test_verify_rejects_an_edge_inside_a_column(capsys, tmp_path):
    path = tmp_path / "tf.txt"
    run(capsys, "duel", "--presenter", "triangle-free", "--algorithm", "first-fit", "-c", "3", "--out", str(path))
    text = path.read_text()
    # vertices 2 and 5 share column 2; joining them closes the triangle 2-5-6
    bad = text.replace("\n5;3;2;", "\n5;2,3;2;")
    assert bad != text
    path.write_text(bad)
    code, out, err = run(capsys, "verify", str(path))
    assert code == EXIT_CHECK
    assert fields(out)["class_ok"] == "0" and "outside the promised class" in err
    assert run(capsys, "verify", str(path), "--expect", "bipartite")[0] == EXIT_CHECK


def test_verify_reports_improper_coloring(capsys, tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("ogc-transcript v1 presenter=bipartite algorithm=x c=2 seed=0\n1;;1;\n2;1;1;\n")
    code, _, err = run(capsys, "verify", str(path))
    assert code == EXIT_CHECK and "round 2" in err


def test_parse_and_io_errors(capsys, tmp_path):
    path = tmp_path / "garbage.txt"
    path.write_text("not a transcript\n")
    assert run(capsys, "verify", str(path))[0] == EXIT_PARSE
    assert run(capsys, "replay", str(tmp_path / "missing.txt"))[0] == EXIT_IO


def test_sweep_csv_is_deterministic(capsys, tmp_path):
    argv = ["sweep", "--presenter", "bipartite,triangle-free", "--algorithm", "first-fit,random",
            "-c", "2..5", "--seeds", "0..1", "--no-timing"]
    code, first, _ = run(capsys, *argv)
    assert code == EXIT_OK
    _, second, _ = run(capsys, *argv)
    assert first == second
    rows = list(csv.reader(io.StringIO(first)))
    assert rows[0] == SWEEP_HEADER
    assert len(rows) == 1 + 2 * 2 * 4 * 2
    assert all(r[9] == "1" and r[10] == "1" and r[11] == "0.000" for r in rows[1:])


def test_sweep_parallel_matches_serial():
    configs = [RunConfig("odd-girth-7", "first-fit", c) for c in range(1, 4)]
    assert sweep_csv(configs, jobs=2, timing=False) == sweep_csv(configs, jobs=1, timing=False)


def test_parse_int_range():
    assert parse_int_range("2..5") == [2, 3, 4, 5]
    assert parse_int_range("1,4,7") == [1, 4, 7]
    assert parse_int_range("1..2,9") == [1, 2, 9]


def test_bound_ok_needs_the_target():
    res = run_duel(RunConfig("bipartite", "first-fit", 6, round_cap=5))
    assert not res.bound_ok and not res.ok
