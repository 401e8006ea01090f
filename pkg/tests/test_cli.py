import json

import pytest

from knodel.cli import main


def run(capsysbinary, *argv):
    code = main(list(argv))
    out, err = capsysbinary.readouterr()
    return code, out.decode(), err.decode()


def test_gen(capsysbinary):
    code, out, _ = run(capsysbinary, "gen", "--delta", "3", "--n", "8", "--format", "dimacs")
    assert code == 0 and out.splitlines()[0] == "p edge 8 12"
    code, out, _ = run(capsysbinary, "gen", "--delta", "3", "--n", "16", "--format", "edgelist")
    assert code == 0 and len(out.splitlines()) == 25
    code, _, err = run(capsysbinary, "gen", "--delta", "4", "--n", "14")
    assert code == 2 and "exceeds" in err


def test_gen_to_file(tmp_path, capsysbinary):
    path = tmp_path / "g.dot"
    assert run(capsysbinary, "gen", "--delta", "3", "--n", "10", "--format", "dot", "--out", str(path))[0] == 0
    assert path.read_text().startswith("graph ")
    code, _, _ = run(capsysbinary, "gen", "--delta", "3", "--n", "10", "--out", str(tmp_path / "no" / "x"))
    assert code == 3


def test_dist(capsysbinary):
    code, out, _ = run(capsysbinary, "dist", "--delta", "3", "--n", "40", "--from", "u:0", "--to", "u:6")
    assert code == 0 and out.strip() == "distance=4 method=closed"
    _, out, _ = run(capsysbinary, "dist", "--delta", "3", "--n", "24", "--from", "u:0", "--to", "v:7")
    assert out.startswith("distance=5")
    _, out, _ = run(capsysbinary, "dist", "--delta", "3", "--n", "16", "--from", "u:5", "--to", "u:5")
    assert out.startswith("distance=0")


def test_dist_witness_round_trips(capsysbinary):
    code, out, _ = run(capsysbinary, "dist", "--delta", "4", "--n", "60", "--from", "v:3", "--to", "u:20", "--witness")
    first, walk = out.splitlines()
    d = int(first.split()[0].split("=")[1])
    specs = walk.split()
    assert len(specs) == d + 1 and specs[0] == "v:3" and specs[-1] == "u:20"


def test_dist_forced_closed_out_of_regime(capsysbinary):
    code, _, _ = run(capsysbinary, "dist", "--delta", "5", "--n", "200", "--from", "u:0", "--to", "u:20", "--method", "closed")
    assert code == 4
    code, out, _ = run(capsysbinary, "dist", "--delta", "5", "--n", "200", "--from", "u:0", "--to", "u:20")
    assert code == 0 and "method=bfs" in out


def test_dist_bad_vertex_spec(capsysbinary):
    with pytest.raises(SystemExit) as exc:
        main(["dist", "--delta", "3", "--n", "8", "--from", "w:1", "--to", "u:0"])
    assert exc.value.code == 2


def test_diam(capsysbinary):
    assert run(capsysbinary, "diam", "--delta", "3", "--n", "40")[1].strip() == "diameter=8 method=formula"
    assert run(capsysbinary, "diam", "--delta", "3", "--n", "8")[1].strip() == "diameter=3 method=bfs"
    assert run(capsysbinary, "diam", "--delta", "4", "--n", "48", "--method", "bfs")[1].strip() == "diameter=5 method=bfs"
    assert run(capsysbinary, "diam", "--delta", "3", "--n", "8", "--method", "formula")[0] == 4


def test_verify_delta3(capsysbinary):
    code, out, _ = run(capsysbinary, "verify", "--delta-range", "3..3", "--n-range", "10..200")
    lines = out.splitlines()
    assert code == 0 and len(lines) == 1 + 96
    assert all(line.split(",")[7] == "true" for line in lines[1:])


def test_verify_delta4_parallel(capsysbinary, tmp_path):
    path = tmp_path / "r.json"
    code, _, _ = run(capsysbinary, "verify", "--delta-range", "4..4", "--n-range", "46..400",
                     "--report", "json", "--out", str(path), "--jobs", "2")
    rows = json.loads(path.read_text())
    assert code == 0 and [r["n"] for r in rows] == list(range(46, 401, 2))
    assert all(r["match"] for r in rows)


def test_verify_small_case(capsysbinary):
    code, out, _ = run(capsysbinary, "verify", "--delta-range", "3..3", "--n-range", "8..8")
    assert code == 0
    assert out.splitlines()[1].startswith("3,8,,3,1,3,false,false,")


def test_verify_skips_and_mismatch_exit(capsysbinary):
    # odd n and 2^delta > n are skipped; W(5,36) breaks the upper bound
    code, out, err = run(capsysbinary, "verify", "--delta-range", "1..5", "--n-range", "33..36", "--step", "1")
    rows = [line.split(",")[:2] for line in out.splitlines()[1:]]
    assert rows == [["2", "34"], ["2", "36"], ["3", "34"], ["3", "36"], ["4", "34"], ["4", "36"], ["5", "34"], ["5", "36"]]
    assert code == 1 and "W(5,36)" in err


def test_table1(capsysbinary):
    code, out, _ = run(capsysbinary, "table1", "--max-delta", "8")
    assert code == 0
    statuses = [line.rsplit(",", 1)[1] for line in out.splitlines()[1:]]
    assert set(statuses) == {"ok"}
    code, out, _ = run(capsysbinary, "table1", "--max-delta", "9", "--feasible-delta", "7")
    assert code == 0 and out.count(",skipped") == 12
    assert run(capsysbinary, "table1", "--max-delta", "2")[0] == 2
