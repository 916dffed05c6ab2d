"""Command-line front end: exit codes, formats, and example outputs."""

import json

import pytest

from weylcoh.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_kostant_table(capsys):
    code, out, _ = run(
        capsys,
        "kostant",
        "--type",
        "C",
        "--rank",
        "2",
        "--levi",
        "a1",
        "--lambda",
        "0,0",
    )
    assert code == 0
    # preamble, header, and the four classes of the C2 rank-1 Levi
    rows = [l for l in out.splitlines() if l]
    assert len(rows) == 6
    assert "4 classes" in rows[0]


def test_simplex_rank2(capsys):
    code, out, _ = run(
        capsys, "simplex", "--rank", "2", "--cut", "a1,a2"
    )
    assert code == 0
    assert "degree 1: rank 1" in out


def test_simplex_rejects_open_face(capsys):
    code, _, err = run(
        capsys, "simplex", "--rank", "2", "--cut", "a1a2"
    )
    assert code == 2
    assert "error" in err


def test_verify_pass_and_fail_codes(capsys):
    code, out, _ = run(capsys, "verify", "rank2-table")
    assert code == 0
    assert "rank2-table" in out


def test_verify_unknown_suite(capsys):
    code, _, err = run(capsys, "verify", "nosuch")
    assert code == 2
    assert "rank2-table" in err  # rejection lists the registered suites


def test_verify_list(capsys):
    code, out, _ = run(capsys, "verify", "--list")
    assert code == 0
    names = [l.split("\t")[0] for l in out.splitlines()]
    assert "rank2-table" in names and "footnote-sp20-exhaustive" in names


def test_inconsistent_options(capsys):
    code, _, err = run(
        capsys,
        "microsupport",
        "--type",
        "C",
        "--rank",
        "2",
        "--family",
        "pushforward",
        "--perversity",
        "m",
        "--lambda",
        "0,0",
    )
    assert code == 2
    assert "error" in err


def test_json_output_is_deterministic(capsys):
    args = (
        "kostant",
        "--type",
        "C",
        "--rank",
        "2",
        "--levi",
        "1",
        "--lambda",
        "1,1",
        "--format",
        "json",
    )
    _, out1, _ = run(capsys, *args)
    _, out2, _ = run(capsys, *args)
    assert out1 == out2
    doc = json.loads(out1)
    assert doc


def test_tsv_output(capsys):
    code, out, _ = run(
        capsys,
        "roots",
        "--type",
        "C",
        "--rank",
        "3",
        "--format",
        "tsv",
    )
    assert code == 0
    lines = out.splitlines()
    assert len(lines) > 1
    width = len(lines[0].split("\t"))
    assert all(len(l.split("\t")) == width for l in lines)


def test_satake_table(capsys):
    code, out, _ = run(
        capsys, "satake", "--type", "C", "--rank", "3"
    )
    assert code == 0
    assert "saturated" in out.lower() or "levi" in out.lower()


def test_bad_rank_rejected(capsys):
    code, _, err = run(
        capsys, "roots", "--type", "Z", "--rank", "2"
    )
    assert code == 2
    assert "error" in err
