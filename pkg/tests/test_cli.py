import csv
import io
import json
from importlib import resources

import jsonschema
import pytest

from elliptic_weyl.cayley import bfs_lengths
from elliptic_weyl.cli import main
from elliptic_weyl.group import elements_in_box, reduce_word
from elliptic_weyl.words import GroupKind, WordParseError, format_word, parse_word

STAR, A11 = GroupKind.A11STAR, GroupKind.A11
SCHEMA = json.loads(resources.files("elliptic_weyl").joinpath("reduce_schema.json").read_text())


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_parse_word():
    assert parse_word(STAR, "0 1 1'") == ("0", "1", "1'")
    assert parse_word(A11, "0,0',1,1'") == A11.coxeter_word
    assert parse_word("a11", "0 ,  0′") == ("0", "0'")
    assert parse_word(STAR, "") == ()


def test_parse_word_errors():
    with pytest.raises(WordParseError) as exc:
        parse_word(STAR, "0'")
    assert exc.value.position == 0 and exc.value.token == "0'"
    with pytest.raises(WordParseError, match="position 2"):
        parse_word(A11, "0 1 x 1")


@pytest.mark.parametrize("group, word, nf, length", [
    ("a11", "0 0' 1 1'", (0, 0, 0), 0),
    ("a11star", "0", (1, 0, 0), 1),
    ("a11star", "1 1'", (0, -1, 1), 2),
])
def test_reduce_json(capsys, group, word, nf, length):
    code, out, _ = run(capsys, "reduce", "--group", group, "--word", word, "--format", "json", "--matrix")
    assert code == 0
    report = json.loads(out)
    jsonschema.validate(report, SCHEMA)
    assert tuple(report["normal_form"][k] for k in "imn") == nf
    assert report["length"] == length
    assert len(report["matrix"]) == (5 if group == "a11star" else 6)


def test_reduce_json_without_matrix(capsys):
    _, out, _ = run(capsys, "reduce", "--word", "0 1", "--format", "json")
    report = json.loads(out)
    jsonschema.validate(report, SCHEMA)
    assert "matrix" not in report


def test_reduce_text_and_csv(capsys):
    _, out, _ = run(capsys, "reduce", "--group", "a11star", "--word", "1 1'")
    assert "normal form  (0,-1,1)" in out
    _, out, _ = run(capsys, "reduce", "--group", "a11star", "--word", "1,1'", "--format", "csv")
    assert out == "group,word,i,m,n,length\na11star,1 1',0,-1,1,2\n"


def test_reduce_parse_error_exit(capsys):
    code, out, err = run(capsys, "reduce", "--group", "a11star", "--word", "0 0'")
    assert code != 0
    assert "0'" in err and "position 1" in err
    assert out == ""


def test_series_csv(capsys):
    code, out, _ = run(capsys, "series", "--group", "a11star", "--format", "csv", "--max-len", "12")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "n,closed_form,enumerated,match"
    assert len(lines) == 1 + 13
    assert lines[1] == "0,1,1,true"
    assert lines[6] == "5,15,15,true"
    _, out, _ = run(capsys, "series", "--group", "a11", "--format", "csv", "--max-len", "3")
    assert out.splitlines()[2] == "1,4,4,true"
    assert "\r" not in out


def test_series_default_and_json(capsys):
    code, out, _ = run(capsys, "series", "--group", "a11", "--format", "json")
    data = json.loads(out)
    assert code == 0
    assert data["max_len"] == 200
    assert len(data["rows"]) == 201
    assert all(r["match"] for r in data["rows"])


@pytest.mark.parametrize("group", ["a11star", "a11"])
def test_verify(capsys, group):
    code, out, _ = run(capsys, "verify", "--group", group, "--max-len", "12")
    assert code == 0
    assert "FAIL" not in out
    assert out.count("PASS") == (6 if group == "a11star" else 5)


def test_verify_zero(capsys):
    code, out, _ = run(capsys, "verify", "--group", "a11", "--max-len", "0")
    assert code == 0


def test_verify_reports_failure(capsys, monkeypatch):
    import elliptic_weyl.verify as verify

    monkeypatch.setattr(verify, "expected_sphere_size", lambda kind, n: 99)
    code, out, _ = run(capsys, "verify", "--group", "a11", "--max-len", "2")
    assert code == 1
    assert "FAIL  sphere-counts" in out
    assert "first counterexample: n=0" in out


def test_classical(capsys):
    assert run(capsys, "classical", "--type", "finite", "--exponents", "1,2")[1] == "1,2,2,1\n"
    assert run(capsys, "classical", "--type", "affine", "--exponents", "1", "--max-len", "5")[1] == "1,2,2,2,2,2\n"
    assert run(capsys, "classical", "--type", "finite", "--exponents", "1")[1] == "1,1\n"
    _, out, _ = run(capsys, "classical", "--type", "finite", "--exponents", "1,2", "--format", "csv")
    assert list(csv.reader(io.StringIO(out)))[1:] == [["0", "1"], ["1", "2"], ["2", "2"], ["3", "1"]]
    code, _, err = run(capsys, "classical", "--type", "finite", "--exponents", "0,2")
    assert code == 2 and "exponents" in err


def test_dump_cayley(capsys, tmp_path):
    path = tmp_path / "edges.tsv"
    code, out, _ = run(capsys, "dump-cayley", "--group", "a11", "--max-len", "1", "--out", str(path))
    assert code == 0 and out == ""
    lines = path.read_text().splitlines()
    assert len(lines) == 4
    assert lines[0] == "0,0,0\t0\t1,0,0"


def test_output_deterministic(capsys):
    outs = {run(capsys, "dump-cayley", "--max-len", "4")[1] for _ in range(3)}
    assert len(outs) == 1
    outs = {run(capsys, "verify", "--group", "a11", "--format", "json")[1] for _ in range(2)}
    assert len(outs) == 1


def test_bad_out_path(capsys, tmp_path):
    code, _, err = run(capsys, "series", "--max-len", "2", "--out", str(tmp_path / "nope" / "x.csv"))
    assert code == 2 and "cannot write" in err


def test_negative_max_len(capsys):
    code, _, err = run(capsys, "verify", "--max-len", "-1")
    assert code == 2


def test_state_cap_exit(capsys, monkeypatch):
    monkeypatch.setenv("ELLIPTIC_WEYL_MAX_STATES", "10")
    code, _, err = run(capsys, "series", "--group", "a11", "--max-len", "20")
    assert code == 2 and "ELLIPTIC_WEYL_MAX_STATES" in err


@pytest.mark.parametrize("kind", [STAR, A11])
def test_geodesic_roundtrip(kind):
    report = bfs_lengths(kind, 17)
    for x in elements_in_box(kind, 4):
        text = format_word(report.geodesic(x))
        assert reduce_word(kind, parse_word(kind, text)) == x
