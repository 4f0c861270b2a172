"""End-to-end runs of the command line interface."""

import json

import pytest

from growthdiagrams.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_demo_all_figures(capsys):
    code, out, _ = run(capsys, "demo")
    assert code == 0
    assert "MISMATCH" not in out
    assert out.count("OK") >= 10


@pytest.mark.parametrize("figure",
                         ["0", "2", "3", "4", "5", "6", "6a", "7", "8", "9"])
def test_demo_single_figure(capsys, figure):
    code, out, _ = run(capsys, "demo", "--figure", figure)
    assert code == 0
    assert "MISMATCH" not in out


def test_map_text_output(capsys):
    code, out, _ = run(capsys, "map", "--shape", "RDRDDRDDRRD",
                       "--cells", "2,2 1,4 5,1")
    assert code == 0
    assert out.strip().splitlines()[-1].endswith(
        "e,1,1,11,11,1,1,1,e,e,1,e")


def test_map_json_and_inverse_round_trip(capsys):
    code, out, _ = run(capsys, "map", "--shape", "RDRDDRDDRRD",
                       "--cells", "2,2 1,4 5,1", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    compact = ",".join("e" if not p else "".join(str(x) for x in p)
                       for p in doc["seq"])
    code, out, _ = run(capsys, "inverse", "--word", doc["word"],
                       "--tableau", compact, "--format", "json")
    assert code == 0
    back = json.loads(out)
    cells = {(c, r): v for c, r, v in back["filling"]["entries"]}
    assert cells == {(2, 2): 1, (1, 4): 1, (5, 1): 1}
    assert all(p == [] for p in back["bottom"] + back["left"])


def test_map_rejects_filling_outside_class(capsys):
    code, _, err = run(capsys, "map", "--shape", "2,2",
                       "--cells", "1,1,2", "--variant", "standard")
    assert code == 2
    assert "error" in err


def test_inverse_rejects_bad_tableau(capsys):
    code, _, err = run(capsys, "inverse", "--word", "RD",
                       "--tableau", "e,3,e")
    assert code == 2


def test_usage_error_exits_2():
    with pytest.raises(SystemExit) as exc:
        main(["verify"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["no-such-command"])
    assert exc.value.code == 2


def test_verify_theorem(capsys):
    code, out, _ = run(capsys, "verify", "--theorem", "T4", "--max-n", "4")
    assert code == 0
    assert "PASS" in out


def test_verify_jonsson(capsys):
    code, out, _ = run(capsys, "verify", "--jonsson", "1,3,2", "--s", "1")
    assert code == 0
    assert "PASS" in out


def test_count_csv(capsys):
    code, out, _ = run(capsys, "count", "--shape", "2,2", "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "shape,class,n,s,t,count"
    assert len(lines) > 1


def test_count_json_symmetric(capsys):
    code, out, _ = run(capsys, "count", "--shape", "2,2",
                       "--format", "json")
    assert code == 0
    doc = json.loads(out)
    for tab in doc["counts"].values():
        for key, cnt in tab.items():
            s, t = key.split(",")
            assert tab.get(f"{t},{s}", 0) == cnt


def test_greene_subcommand(capsys):
    code, out, _ = run(capsys, "greene", "--shape", "3,2,1",
                       "--cells", "1,3 2,2 3,1")
    assert code == 0
    assert "PASS" in out


def test_explore_is_evidence_only(capsys):
    code, out, _ = run(capsys, "explore", "--stack", "1,2,1", "--max-n", "2")
    assert code == 0
    assert "EVIDENCE" in out
    assert "PASS" not in out and "FAIL" not in out
