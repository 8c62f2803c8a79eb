import json

import pytest

from splitword.cli import main
from splitword.families import generate
from splitword.graph import is_isomorphic, parse_graph
from splitword.words import parse_word, represents

from .test_families import ALL_SPECS


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def f15(tmp_path):
    path = tmp_path / "f15.txt"
    path.write_text(generate("F1", 5)[0].to_edge_list())
    return path


@pytest.mark.parametrize("spec", ALL_SPECS, ids=str)
def test_generate_round_trips(spec, capsys, tmp_path):
    args = [spec.name] + ([spec.k] if spec.k is not None else [])
    code, out, _ = run(capsys, "generate", *args)
    assert code == 0
    g = parse_graph(out)
    assert is_isomorphic(g, generate(spec)[0])
    path = tmp_path / "g.txt"
    path.write_text(out)
    code, out, _ = run(capsys, "recognize", path)
    assert code == 0
    verdict = json.loads(out)
    assert verdict["is_split"]
    in_c3 = spec.name in ("F0", "even_sun", "F1", "F2")
    if spec.name in ("B1", "B2", "B3", "B4"):
        assert verdict["permutation_graph"] is False
    else:
        assert verdict["word_representable"] == in_c3
        assert (verdict["rep_number"] == 3) == in_c3


def test_generate_bad_parameter(capsys):
    code, _, err = run(capsys, "generate", "F1", 4)
    assert code == 1 and "F1" in err


def test_recognize_plain(capsys, f15):
    code, out, _ = run(capsys, "recognize", "--plain", f15)
    assert code == 0
    assert out.startswith("split, word-representable, R = 3, contains F1(5) on ")


def test_recognize_several_files(capsys, f15, tmp_path):
    c4 = tmp_path / "c4.txt"
    c4.write_text("a b\nb c\nc d\nd a\n")
    code, out, _ = run(capsys, "recognize", "--plain", f15, c4)
    assert code == 2
    lines = out.splitlines()
    assert lines[1] == f"{c4}: not a split graph"


def test_not_split_exit_code(capsys, tmp_path):
    c4 = tmp_path / "c4.txt"
    c4.write_text("a b\nb c\nc d\nd a\n")
    assert run(capsys, "recognize", c4)[0] == 2
    assert run(capsys, "represent", c4)[0] == 2


def test_malformed_input(capsys, tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("a b\nc c\n")
    code, _, err = run(capsys, "recognize", bad)
    assert code == 1 and "line 2" in err
    code, _, err = run(capsys, "represent", tmp_path / "missing.txt")
    assert code == 1


def test_represent_and_verify(capsys, f15, tmp_path):
    code, out, _ = run(capsys, "represent", f15)
    assert code == 0
    g = parse_graph(f15.read_text())
    w = parse_word(out, g)
    assert len(w) == 3 * g.n and represents(w, g)
    wf = tmp_path / "w.txt"
    wf.write_text(out)
    code, text, _ = run(capsys, "verify", "--plain", f15, wf)
    assert code == 0 and text.strip() == "represents"
    # a doubled leading c1 breaks alternation with every neighbour of c1
    wf.write_text("c1 c1 " + out)
    code, text, _ = run(capsys, "verify", f15, wf)
    assert code == 3
    report = json.loads(text)
    assert not report["represents"]
    assert all("c1" in f["pair"] for f in report["failures"])


def test_represent_trace(capsys, f15):
    code, out, _ = run(capsys, "represent", "--trace", f15)
    assert code == 0
    trace = json.loads(out)
    assert set(trace) >= {"labelling", "p1", "p2", "p3", "d", "w", "A", "B"}
    assert not set(trace["p3"]) & set(trace["B"])


def test_represent_non_representable(capsys, tmp_path):
    path = tmp_path / "m4.txt"
    path.write_text(generate("M4")[0].to_edge_list())
    code, _, err = run(capsys, "represent", path)
    assert code == 3 and "not word-representable" in err


def test_label(capsys, f15):
    code, out, _ = run(capsys, "label", f15)
    assert code == 0
    lab = json.loads(out)
    assert sorted(lab.values()) == [1, 2, 3, 4]
    code, out, _ = run(capsys, "label", "--comparability", "--plain", f15)
    assert code == 0 and "c1=" in out


def test_oracle(capsys, tmp_path):
    path = tmp_path / "p3.txt"
    path.write_text("a b\nb c\n")
    code, out, _ = run(capsys, "oracle", path)
    assert code == 0 and json.loads(out)["k"] == 2
    code, out, _ = run(capsys, "oracle", "--kmax", 1, path)
    assert code == 3
    code, _, _ = run(capsys, "oracle", "--kmax", 9, path)
    assert code == 1


def test_verify_requires_every_vertex(capsys, f15, tmp_path):
    wf = tmp_path / "w.txt"
    wf.write_text("c1 c2\n")
    code, _, err = run(capsys, "verify", f15, wf)
    assert code == 1 and "missing" in err

