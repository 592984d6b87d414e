"""Command-line interface: golden outputs, round trips, exit codes."""

import pytest

from z2z4q8.cli import (
    EXIT_INFEASIBLE,
    EXIT_NOT_ALLOWABLE,
    EXIT_OK,
    EXIT_PARSE,
    EXIT_VERIFY,
    main,
)

TABLE_M4 = (
    "k=2 r=7 shape=2 sigma=2 tau=2\n"
    "k=3 r=6 shape=1 sigma=3 tau=2\n"
    "k=5 r=5 shape=1 sigma=5 tau=0\n"
)

TABLE_M5 = (
    "k=2 r=8 shape=5 sigma=2 tau=2\n"
    "k=3 r=8 shape=2 sigma=3 tau=2\n"
    "k=3 r=9 shape=3 sigma=3 tau=2\n"
    "k=4 r=7 shape=1 sigma=4 tau=2\n"
    "k=6 r=6 shape=1 sigma=6 tau=0\n"
)


def test_table_golden(capsys):
    assert main(["table", "--m", "4"]) == EXIT_OK
    assert capsys.readouterr().out == TABLE_M4
    assert main(["table", "--m", "5"]) == EXIT_OK
    assert capsys.readouterr().out == TABLE_M5


def test_construct_writes_file_and_report(tmp_path, capsys):
    out = tmp_path / "code.gens"
    rc = main(["construct", "--m", "5", "--k", "3", "--r", "8",
               "--out", str(out)])
    assert rc == EXIT_OK
    report = capsys.readouterr().out
    assert "k=3" in report and "r=8" in report
    assert "shape=2" in report  # preference scan lands on shape 2 for (3, 8)
    header = out.read_text().splitlines()[0]
    assert header.startswith("space ")


def test_construct_then_measure_roundtrip(tmp_path, capsys):
    out = tmp_path / "code.gens"
    assert main(["construct", "--m", "5", "--k", "3", "--r", "9",
                 "--out", str(out)]) == EXIT_OK
    capsys.readouterr()
    assert main(["measure", "--in", str(out)]) == EXIT_OK
    assert capsys.readouterr().out == "k=3\nr=9\ncase=4c\n"


def test_construct_then_classify_roundtrip(tmp_path, capsys):
    out = tmp_path / "code.gens"
    assert main(["construct", "--m", "4", "--k", "2", "--r", "7",
                 "--out", str(out)]) == EXIT_OK
    capsys.readouterr()
    assert main(["classify", "--in", str(out)]) == EXIT_OK
    text = capsys.readouterr().out
    assert "shape=2\n" in text and "m=4\n" in text


def test_construct_forced_shape(tmp_path, capsys):
    out = tmp_path / "code.gens"
    rc = main(["construct", "--m", "5", "--k", "4", "--r", "7",
               "--shape", "3", "--out", str(out)])
    assert rc == EXIT_OK
    assert "shape=3" in capsys.readouterr().out
    # The maximal-kernel target routes through an empty dial, so passing
    # an explicit empty dial reproduces the same build.
    a, b = tmp_path / "a.gens", tmp_path / "b.gens"
    for path, extra in [(a, []), (b, ["--dial", ""])]:
        assert main(["construct", "--m", "5", "--k", "6", "--r", "6",
                     "--shape", "2", "--out", str(path)] + extra) == EXIT_OK
        capsys.readouterr()
    assert a.read_text() == b.read_text()


def test_construct_dial_override_matches_planner(tmp_path, capsys):
    from z2z4q8.construct import make_plan

    plan = make_plan(5, "2", 3, 2, 3, 8)
    assert plan.dial
    dial_csv = ",".join(str(i) for i in plan.dial)
    a, b = tmp_path / "a.gens", tmp_path / "b.gens"
    assert main(["construct", "--m", "5", "--k", "3", "--r", "8",
                 "--shape", "2", "--out", str(a)]) == EXIT_OK
    assert main(["construct", "--m", "5", "--k", "3", "--r", "8",
                 "--shape", "2", "--dial", dial_csv, "--out", str(b)]) == EXIT_OK
    capsys.readouterr()
    assert a.read_text() == b.read_text()


def test_construct_dial_override_can_break_the_plan(capsys):
    # (4, 7) forced through shape 3 needs a rank-raising dial; an empty
    # override builds different parameters and is reported as infeasible.
    rc = main(["construct", "--m", "5", "--k", "4", "--r", "7",
               "--shape", "3", "--dial", ""])
    assert rc == EXIT_INFEASIBLE
    capsys.readouterr()


def test_construct_deterministic(tmp_path):
    paths = []
    for name in ("a.gens", "b.gens"):
        p = tmp_path / name
        assert main(["construct", "--m", "6", "--k", "3", "--r", "10",
                     "--out", str(p)]) == EXIT_OK
        paths.append(p)
    assert paths[0].read_bytes() == paths[1].read_bytes()


def test_verify_passes_on_constructed_code(tmp_path, capsys):
    out = tmp_path / "code.gens"
    assert main(["construct", "--m", "5", "--k", "2", "--r", "8",
                 "--out", str(out)]) == EXIT_OK
    capsys.readouterr()
    assert main(["verify", "--in", str(out)]) == EXIT_OK
    text = capsys.readouterr().out
    for line in ("hadamard=pass", "table3=pass", "duplication=pass",
                 "kernel_oracles=pass", "rank_oracles=pass", "verdict=pass"):
        assert line in text


def test_verify_fails_on_non_hadamard(tmp_path, capsys):
    bad = tmp_path / "bad.gens"
    bad.write_text("space 2 0 0\n1 0 |  | \n")  # too small to be Hadamard
    assert main(["verify", "--in", str(bad)]) == EXIT_VERIFY
    text = capsys.readouterr().out
    assert "hadamard=fail" in text and "verdict=fail" in text
    assert "diagnosis:" in text


def test_export_binary_row_count(tmp_path, capsys):
    out = tmp_path / "code.gens"
    assert main(["construct", "--m", "4", "--k", "3", "--r", "6",
                 "--out", str(out)]) == EXIT_OK
    capsys.readouterr()
    assert main(["export", "--in", str(out), "--format", "binary"]) == EXIT_OK
    rows = capsys.readouterr().out.splitlines()
    assert len(rows) == 2 ** 5
    assert all(len(row) == 2 ** 4 and set(row) <= {"0", "1"} for row in rows)
    assert rows == sorted(rows)


def test_export_gens_identity(tmp_path, capsys):
    src = tmp_path / "code.gens"
    assert main(["construct", "--m", "5", "--k", "4", "--r", "7",
                 "--out", str(src)]) == EXIT_OK
    capsys.readouterr()
    dst = tmp_path / "copy.gens"
    assert main(["export", "--in", str(src), "--format", "gens",
                 "--out", str(dst)]) == EXIT_OK
    assert dst.read_text() == src.read_text()


def test_seed_corpus_and_measure_reference(tmp_path, capsys):
    corpus = tmp_path / "corpus"
    assert main(["seed-corpus", "--out", str(corpus)]) == EXIT_OK
    capsys.readouterr()
    gens = sorted(p.name for p in corpus.glob("*.gens"))
    assert len(gens) == 9
    manifest = (corpus / "manifest.txt").read_text()
    assert "name=len128-k4-r10" in manifest
    assert "name=len32-k4-r7" in manifest
    assert main(["measure", "--in", str(corpus / "len128-k4-r10.gens")]) == EXIT_OK
    assert capsys.readouterr().out == "k=4\nr=10\ncase=4c\n"


def test_exit_not_allowable(capsys):
    assert main(["construct", "--m", "4", "--k", "4", "--r", "6"]) == EXIT_NOT_ALLOWABLE
    err = capsys.readouterr().err
    assert "error:" in err and "nearest" in err


def test_exit_not_allowable_for_forced_shape(capsys):
    # (2, 7) exists at m=4, but only through shape 2 - not shape 1.
    assert main(["construct", "--m", "4", "--k", "2", "--r", "7",
                 "--shape", "1"]) == EXIT_NOT_ALLOWABLE
    capsys.readouterr()


def test_exit_infeasible_on_bad_dial(capsys):
    rc = main(["construct", "--m", "5", "--k", "3", "--r", "8",
               "--shape", "2", "--dial", "99"])
    assert rc == EXIT_INFEASIBLE
    capsys.readouterr()


def test_exit_parse_on_missing_file(tmp_path, capsys):
    rc = main(["measure", "--in", str(tmp_path / "absent.gens")])
    assert rc == EXIT_PARSE
    capsys.readouterr()


def test_exit_parse_on_malformed_file(tmp_path, capsys):
    bad = tmp_path / "bad.gens"
    bad.write_text("not a generator file\n")
    assert main(["classify", "--in", str(bad)]) == EXIT_PARSE
    capsys.readouterr()


def test_exit_verify_on_non_hadamard_classify(tmp_path, capsys):
    bad = tmp_path / "bad.gens"
    bad.write_text("space 2 0 0\n1 0 |  | \n")
    assert main(["classify", "--in", str(bad)]) == EXIT_VERIFY
    capsys.readouterr()


def test_dial_requires_shape(capsys):
    with pytest.raises(SystemExit):
        main(["construct", "--m", "5", "--k", "3", "--r", "8", "--dial", "1"])
    capsys.readouterr()
