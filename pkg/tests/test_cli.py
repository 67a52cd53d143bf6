import json
import os
import subprocess
import sys
from fractions import Fraction
from pathlib import Path

import pytest

from sharpbounds import (
    Hypothesis,
    SharpBoundingFunction,
    Conjecture,
    complete,
    cycle,
    petersen,
    star,
    write_export,
    write_graph6_file,
)
from sharpbounds.cli import main

ROOT = Path(__file__).resolve().parent.parent


def run_cli(*argv):
    env = dict(os.environ, PYTHONPATH=str(ROOT / "src"))
    return subprocess.run([sys.executable, "-m", "sharpbounds", *argv],
                          capture_output=True, text=True, env=env)


@pytest.fixture()
def petersen_file(tmp_path):
    target = tmp_path / "petersen.g6"
    write_graph6_file([petersen()], target)
    return target


def conjecture_record(target="independence_number", other="min_degree",
                      hypothesis=("connected",), slope=1, intercept=0,
                      direction="upper"):
    return Conjecture(
        target=target, other=other, direction=direction,
        hypothesis=Hypothesis(hypothesis),
        bound=SharpBoundingFunction(Fraction(slope), Fraction(intercept),
                                    direction),
        touch_set=frozenset({"x"}), touch_number=1, support_size=1)


# ---------------------------------------------------------------------------
# invariants
# ---------------------------------------------------------------------------

def test_invariants_row(petersen_file, capsys):
    code = main(["invariants", str(petersen_file), "--columns", "alpha,mu"])
    out = capsys.readouterr().out.splitlines()
    assert code == 0
    assert out[0] == "label independence_number matching_number"
    assert out[1] == "petersen 4 5"


def test_invariants_missing_cell(tmp_path, capsys):
    target = tmp_path / "one.g6"
    write_graph6_file([complete(1)], target)
    code = main(["invariants", str(target), "--columns", "gamma_t,connected"])
    out = capsys.readouterr().out.splitlines()
    assert code == 0
    assert out[1] == "one - true"


def test_invariants_empty_corpus(tmp_path, capsys):
    target = tmp_path / "empty.g6"
    target.write_text("\n")
    code = main(["invariants", str(target)])
    assert code == 2
    assert "empty corpus" in capsys.readouterr().err


def test_invariants_malformed_line(tmp_path, capsys):
    target = tmp_path / "bad.g6"
    target.write_text("A_\n!!\n")
    code = main(["invariants", str(target)])
    assert code == 2
    assert "bad.g6:2" in capsys.readouterr().err


def test_invariants_unknown_column(petersen_file, capsys):
    code = main(["invariants", str(petersen_file), "--columns", "girth"])
    assert code == 2
    assert "girth" in capsys.readouterr().err


# ---------------------------------------------------------------------------
# conjecture
# ---------------------------------------------------------------------------

def test_conjecture_run_and_export(tmp_path, capsys):
    corpus = ROOT / "data" / "cubic_connected_4_10.g6"
    export = tmp_path / "out.jsonl"
    code = main(["conjecture", "--corpus", str(corpus),
                 "--targets", "alpha", "--directions", "upper",
                 "--filters", "generality", "--top-k", "5",
                 "--export", str(export)])
    out = capsys.readouterr().out
    assert code == 0
    assert "α(G) ≤ μ(G)" in out
    lines = export.read_text().splitlines()
    assert len(lines) == 5
    records = [json.loads(line) for line in lines]
    assert any(r["target"] == "independence_number"
               and r["other"] == "matching_number"
               and r["slope"] == [1, 1] and r["intercept"] == [0, 1]
               for r in records)


def test_conjecture_unknown_target_before_compute(tmp_path, capsys):
    corpus = tmp_path / "c.g6"
    write_graph6_file([complete(4), cycle(5)], corpus)
    code = main(["conjecture", "--corpus", str(corpus),
                 "--targets", "girth"])
    assert code == 2
    assert "girth" in capsys.readouterr().err


def test_conjecture_requires_corpus_and_targets(capsys):
    assert main(["conjecture", "--targets", "alpha"]) == 2
    assert main(["conjecture", "--corpus", "x.g6"]) == 2


def test_conjecture_config_file_with_flag_override(tmp_path, capsys):
    corpus = ROOT / "data" / "cubic_connected_4_10.g6"
    cfg = tmp_path / "run.cfg"
    cfg.write_text(
        f"corpus = {corpus}\n"
        "targets = alpha\n"
        "directions = upper\n"
        "# comment lines are skipped\n"
        "filters = generality\n"
        "top_k = 3\n")
    code = main(["conjecture", "--config", str(cfg)])
    first = capsys.readouterr().out
    assert code == 0
    assert first.splitlines()[0].startswith("# 3 conjectures")

    code = main(["conjecture", "--config", str(cfg), "--top-k", "1"])
    second = capsys.readouterr().out
    assert code == 0
    assert second.splitlines()[0].startswith("# 1 conjectures")


def test_conjecture_structured_output(tmp_path, capsys):
    corpus = tmp_path / "c.g6"
    write_graph6_file([complete(4), cycle(5), cycle(6), petersen(),
                       complete(5)], corpus)
    code = main(["conjecture", "--corpus", str(corpus), "--targets", "alpha",
                 "--directions", "upper", "--format", "structured",
                 "--min-support", "3"])
    out = capsys.readouterr().out
    assert code == 0
    for line in out.splitlines():
        record = json.loads(line)
        assert record["direction"] == "upper"
        assert record["touch_number"] >= 1


def test_conjecture_filters_none_is_superset(tmp_path, capsys):
    corpus = ROOT / "data" / "cubic_connected_4_10.g6"
    base = ["conjecture", "--corpus", str(corpus), "--targets", "alpha",
            "--directions", "upper", "--top-k", "100000"]
    assert main(base + ["--filters", "none"]) == 0
    raw = {line for line in capsys.readouterr().out.splitlines()[1:]}
    assert main(base + ["--filters", "both"]) == 0
    filtered = capsys.readouterr().out.splitlines()[1:]
    # every surviving statement already appears in the raw listing
    raw_statements = {line.split(") ", 1)[1] for line in raw}
    for line in filtered:
        assert line.split(") ", 1)[1] in raw_statements
    assert len(filtered) <= len(raw)


def test_conjecture_per_group_truncation(tmp_path, capsys):
    corpus = tmp_path / "c.g6"
    write_graph6_file([complete(4), cycle(5), cycle(6), petersen(),
                       complete(5), complete(6)], corpus)
    code = main(["conjecture", "--corpus", str(corpus),
                 "--targets", "alpha,mu", "--min-support", "3",
                 "--top-k", "1", "--format", "structured"])
    out = capsys.readouterr().out
    assert code == 0
    seen = set()
    for line in out.splitlines():
        record = json.loads(line)
        key = (record["target"], record["direction"])
        assert key not in seen
        seen.add(key)
    assert len(seen) == 4  # two targets, both directions


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

def test_verify_holds(tmp_path, capsys):
    corpus = ROOT / "data" / "cubic_connected_4_10.g6"
    export = tmp_path / "records.jsonl"
    write_export([conjecture_record(other="matching_number",
                                    hypothesis=("connected", "cubic"))], export)
    code = main(["verify", str(export), str(corpus)])
    out = capsys.readouterr().out
    assert code == 0
    assert out.startswith("HOLDS touch=4 ")


def test_verify_counterexample(tmp_path, capsys):
    corpus = tmp_path / "c.g6"
    write_graph6_file([complete(4), star(3)], corpus)
    export = tmp_path / "records.jsonl"
    write_export([conjecture_record()], export)  # claims alpha <= min degree
    code = main(["verify", str(export), str(corpus)])
    out = capsys.readouterr().out
    assert code == 1
    assert out.startswith("COUNTEREXAMPLE c#2 lhs=3 rhs=1")


def test_verify_empty_export(tmp_path, capsys):
    corpus = tmp_path / "c.g6"
    write_graph6_file([complete(4)], corpus)
    export = tmp_path / "records.jsonl"
    export.write_text("")
    code = main(["verify", str(export), str(corpus)])
    assert code == 0
    assert capsys.readouterr().out == ""


def test_verify_unknown_property_continues(tmp_path, capsys):
    corpus = tmp_path / "c.g6"
    write_graph6_file([complete(4), cycle(5)], corpus)
    export = tmp_path / "records.jsonl"
    good = conjecture_record(other="matching_number")
    bad = conjecture_record(other="girth")
    write_export([bad, good], export)
    code = main(["verify", str(export), str(corpus)])
    out = capsys.readouterr().out.splitlines()
    assert code == 0
    assert out[0].startswith("ERROR")
    assert out[1].startswith("HOLDS")


# ---------------------------------------------------------------------------
# reproducibility (subprocess level)
# ---------------------------------------------------------------------------

def test_byte_identical_runs(tmp_path):
    corpus = ROOT / "data" / "cubic_connected_4_10.g6"
    cache = tmp_path / "cache"
    args = ["conjecture", "--corpus", str(corpus), "--targets", "alpha,Z",
            "--directions", "upper", "--filters", "both",
            "--cache", str(cache), "--export", str(tmp_path / "e.jsonl")]
    first = run_cli(*args)
    export_first = (tmp_path / "e.jsonl").read_bytes()
    second = run_cli(*args)  # second run hits the table cache
    export_second = (tmp_path / "e.jsonl").read_bytes()
    assert first.returncode == second.returncode == 0
    assert first.stdout == second.stdout
    assert export_first == export_second
