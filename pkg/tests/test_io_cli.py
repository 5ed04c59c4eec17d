"""File round-trips, parse diagnostics, and the command-line surface."""

import hashlib
import json
import subprocess
import sys

import pytest

from hlra import cli
from hlra.fileio import ParseError, dumps_algebra, loads_algebra


def run(capsys, *argv):
    code = cli.main(list(argv))
    cap = capsys.readouterr()
    return code, cap.out, cap.err


def path(data_dir, name):
    return str(data_dir / f"{name}.json")


# -- files ------------------------------------------------------------------


def test_every_bundled_file_round_trips_byte_identically(data_dir):
    files = sorted(data_dir.glob("*.json"))
    assert len(files) == 15
    for f in files:
        text = f.read_text()
        assert dumps_algebra(loads_algebra(text)) == text, f.name


def test_dump_is_a_fixed_point(bundled):
    d1 = dumps_algebra(bundled["fix_s"])
    assert dumps_algebra(loads_algebra(d1)) == d1
    assert d1.endswith("\n")


def test_zero_denominator_is_located(data_dir):
    text = (data_dir / "fix_b.json").read_text()
    bad = text.replace('[[0, 1, 1, "1"]', '[[0, 1, 1, "1/0"]', 1)
    with pytest.raises(ParseError) as exc:
        loads_algebra(bad)
    assert (
        str(exc.value)
        == "line 4, column 25: bracket[0]: zero denominator in rational literal: '1/0'"
    )


def test_json_syntax_error_is_a_parse_error():
    with pytest.raises(ParseError):
        loads_algebra("{")


# -- validate ---------------------------------------------------------------


def test_validate_lists_checks_and_passes(capsys, data_dir):
    code, out, err = run(capsys, "validate", path(data_dir, "fix_b"))
    assert code == 0
    assert "[pass] A.unital: unit [1]" in out
    assert "result: valid" in out
    assert err.startswith("elapsed:")


def test_validate_strict_vs_relaxed(capsys, data_dir):
    code, out, _ = run(capsys, "validate", "--strict", path(data_dir, "fix_e"))
    assert code == 1
    assert "[fail] rep.bracket: at (e,f,t): lhs=[0, 1] rhs=[0, 0]" in out
    code, out, _ = run(capsys, "validate", path(data_dir, "fix_e"))
    assert code == 0
    assert "[warn] rep.bracket" in out


def test_missing_file_is_an_input_error(capsys):
    code, out, err = run(capsys, "validate", "/no/such/file.json")
    assert code == 2
    assert err.startswith("error:")
    assert out == ""


def test_cli_reports_parse_position(capsys, data_dir, tmp_path):
    text = (data_dir / "fix_b.json").read_text()
    bad = tmp_path / "bad.json"
    bad.write_text(text.replace('[[0, 1, 1, "1"]', '[[0, 1, 1, "1/0"]', 1))
    code, _, err = run(capsys, "validate", str(bad))
    assert code == 2
    assert (
        err.splitlines()[0]
        == "error: line 4, column 25: bracket[0]: zero denominator in rational literal: '1/0'"
    )


# -- twist ------------------------------------------------------------------


def test_twist_reproduces_the_doubling_fixture(capsys, data_dir):
    code, out, _ = run(
        capsys, "twist", path(data_dir, "fix_b"), "--psi", "[[1,0],[0,2]]", "--phi", "[[1]]"
    )
    assert code == 0
    assert out == (data_dir / "fix_d.json").read_text()


def test_identity_twist_reproduces_the_input(capsys, data_dir):
    code, out, _ = run(
        capsys, "twist", path(data_dir, "fix_b"), "--psi", "[[1,0],[0,1]]", "--phi", "[[1]]"
    )
    assert code == 0
    assert out == (data_dir / "fix_b.json").read_text()


def test_twist_rejects_a_non_endomorphism(capsys, data_dir):
    code, out, err = run(
        capsys, "twist", path(data_dir, "fix_b"), "--psi", "[[0,1],[1,0]]", "--phi", "[[1]]"
    )
    assert code == 1
    assert err.startswith("error:")
    assert out == ""


# -- decompose / analyze ----------------------------------------------------


def test_decompose_degenerate_cartan(capsys, data_dir):
    code, out, _ = run(capsys, "decompose", path(data_dir, "fix_a"))
    assert code == 0
    assert "no roots; L = U = H" in out


def test_decompose_reports_a_rational_obstruction(capsys, data_dir):
    code, out, _ = run(capsys, "decompose", path(data_dir, "fix_b"), "--cartan", "[[0,1]]")
    assert code == 1
    assert "split: no (bracket side)" in out
    assert "remainder has dimension 1" in out


def test_malformed_cartan_flag(capsys, data_dir):
    code, _, err = run(capsys, "decompose", path(data_dir, "fix_b"), "--cartan", "nope")
    assert code == 2
    assert err.startswith("error:")


def test_analyze_descriptive_failures_do_not_flip_the_exit_code(capsys, data_dir):
    code, out, _ = run(capsys, "analyze", path(data_dir, "fix_e"))
    assert code == 0
    assert "result: pass (descriptive clauses failing: tight.6)" in out
    for name in ("fix_t", "fix_a", "fix_zero"):
        code, out, _ = run(capsys, "analyze", path(data_dir, name))
        assert code == 0, name


# -- j / fiber / morphism / connect -----------------------------------------


def test_j_annihilation_witness(capsys, data_dir):
    code, out, _ = run(capsys, "j", path(data_dir, "fix_c_split"))
    assert code == 1
    assert "[[1, 0, 0], [0, 0, 1]] = [0, 0, 2]" in out
    code, out, _ = run(capsys, "j", path(data_dir, "fix_b"))
    assert code == 0


def test_fiber_emits_a_loadable_valid_file(capsys, data_dir):
    code, out, _ = run(capsys, "fiber", path(data_dir, "fix_b"), path(data_dir, "fix_b"))
    assert code == 0
    assert loads_algebra(out).dimL == 4


def test_fiber_closure_failure(capsys, data_dir):
    code, out, err = run(capsys, "fiber", path(data_dir, "fix_e"), path(data_dir, "fix_e"))
    assert code == 1
    assert "error: fiber carrier not closed under bracket at (1, 2)" in err
    assert out == ""


def test_morphism_identity_endomorphism(capsys, data_dir):
    code, out, _ = run(
        capsys,
        "morphism",
        path(data_dir, "fix_b"),
        path(data_dir, "fix_b"),
        "--g",
        "[[1]]",
        "--f",
        "[[1,0],[0,1]]",
    )
    assert code == 0
    assert "result: morphism" in out


def test_morphism_detects_a_bracket_mismatch(capsys, data_dir):
    code, out, _ = run(
        capsys,
        "morphism",
        path(data_dir, "fix_b"),
        path(data_dir, "fix_c"),
        "--g",
        "[[1]]",
        "--f",
        "[[1,0],[0,1]]",
    )
    assert code == 1
    assert "morphism.2" in out
    assert "result: not a morphism" in out


def test_connect_lists_classes_and_witnesses(capsys, data_dir):
    code, out, _ = run(capsys, "connect", path(data_dir, "fix_s"))
    assert code == 0
    assert "root class {(-2), (-1), (1), (2)}" in out
    assert "(-2) ~ (2): direct epsilon=-1 z=0" in out
    assert "raw relation symmetric: yes" in out


def test_zero_algebra_passes_every_report_command(capsys, data_dir):
    for cmd in ("validate", "decompose", "analyze", "connect", "j"):
        code, _, _ = run(capsys, cmd, path(data_dir, "fix_zero"))
        assert code == 0, cmd


# -- determinism ------------------------------------------------------------


def test_reports_are_byte_deterministic(capsys, data_dir):
    for argv in (
        ("analyze", path(data_dir, "fix_s"), "--format", "json"),
        ("decompose", path(data_dir, "fix_s")),
        ("connect", path(data_dir, "fix_e2"), "--format", "json"),
    ):
        _, out1, _ = run(capsys, *argv)
        _, out2, _ = run(capsys, *argv)
        assert out1 == out2, argv


def test_json_report_carries_the_input_digest(capsys, data_dir):
    p = data_dir / "fix_b.json"
    code, out, _ = run(capsys, "validate", str(p), "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["sha256"] == hashlib.sha256(p.read_text().encode("utf-8")).hexdigest()
    assert doc["input"] == str(p)


def test_module_entry_point(data_dir):
    r = subprocess.run(
        [sys.executable, "-m", "hlra", "validate", path(data_dir, "fix_b")],
        capture_output=True,
        text=True,
    )
    assert r.returncode == 0
    assert "result: valid" in r.stdout
