import json
import os
import stat

import pytest

from tpsqubits.cli import EXIT_FAILED, EXIT_OK, EXIT_USAGE, main
from tpsqubits.tps import ALL_LABELS


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def _strip_timestamp(text):
    doc = json.loads(text)
    doc.pop("timestamp")
    return doc


def test_verify_json_exit_zero(capsys):
    code, out, _ = run(capsys, "verify", "--seed", "0")
    assert code == EXIT_OK
    doc = json.loads(out)
    assert doc["seed"] == 0
    assert doc["summary"]["failed"] == 0
    assert out.endswith("\n")
    for c in doc["checks"]:
        assert c["passed"] is True
        assert c["refs"]


def test_verify_writes_file_and_is_reproducible(tmp_path, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert run(capsys, "verify", "--seed", "3", "-o", str(a))[0] == EXIT_OK
    assert run(capsys, "verify", "--seed", "3", "-o", str(b))[0] == EXIT_OK
    assert _strip_timestamp(a.read_text()) == _strip_timestamp(b.read_text())
    assert sorted(p.name for p in tmp_path.iterdir()) == ["a.json", "b.json"]


@pytest.mark.skipif(os.geteuid() == 0, reason="root ignores directory permissions")
def test_verify_unwritable_directory_leaves_nothing(tmp_path, capsys):
    locked = tmp_path / "locked"
    locked.mkdir()
    locked.chmod(stat.S_IRUSR | stat.S_IXUSR)
    try:
        code, _, err = run(capsys, "verify", "--seed", "0", "-o", str(locked / "r.json"))
    finally:
        locked.chmod(stat.S_IRWXU)
    assert code != EXIT_OK
    assert "error" in err
    assert list(locked.iterdir()) == []


def test_verify_failed_rename_cleans_temp_file(tmp_path, capsys):
    target = tmp_path / "report.json"
    target.mkdir()
    code, _, err = run(capsys, "verify", "--seed", "0", "-o", str(target))
    assert code == EXIT_USAGE
    assert "error" in err
    assert [p.name for p in tmp_path.iterdir()] == ["report.json"]
    assert list(target.iterdir()) == []


def test_verify_missing_directory(tmp_path, capsys):
    code, _, err = run(capsys, "verify", "--seed", "0", "-o", str(tmp_path / "nope" / "r.json"))
    assert code == EXIT_USAGE
    assert "error" in err
    assert not (tmp_path / "nope").exists()


def test_verify_failure_exit_code(monkeypatch, capsys):
    import tpsqubits.verify as verify
    from tpsqubits.tps import Side, subsystem_projector

    def broken(label, side, bit):
        return subsystem_projector(label, Side.RIGHT if side is Side.LEFT else Side.LEFT, bit)

    checks = (("projector-algebra", lambda rng: verify.check_projector_algebra(broken)),)
    monkeypatch.setattr(verify, "DEFAULT_CHECKS", checks)
    real = verify.run_all
    monkeypatch.setattr(verify, "run_all", lambda seed: real(seed, checks=checks))
    code, out, _ = run(capsys, "verify", "--seed", "0")
    assert code == EXIT_FAILED
    assert json.loads(out)["summary"]["failed"] == 1


def test_verify_text_format(capsys):
    code, out, _ = run(capsys, "verify", "--seed", "0", "--format", "text")
    assert code == EXIT_OK
    assert "8/8 checks passed" in out


def test_classify_singlet_json(capsys):
    code, out, _ = run(capsys, "classify", "--state", "singlet", "--format", "json")
    assert code == EXIT_OK
    doc = json.loads(out)
    v = doc["labels"]
    assert v["123"]["separability"] == "Entangled"
    assert v["321"]["separability"] == "Product"
    assert set(v) == {l.code for l in ALL_LABELS}


def test_classify_from_file(tmp_path, capsys):
    f = tmp_path / "s.json"
    f.write_text(json.dumps({"amplitudes": [[1, 0], [0, 0], [0, 0], [0, 0]]}))
    code, out, _ = run(capsys, "classify", "--file", str(f), "--label", "213")
    assert code == EXIT_OK
    assert "213" in out and "Product" in out


def test_classify_normalize_flag(tmp_path, capsys):
    f = tmp_path / "s.json"
    f.write_text(json.dumps({"amplitudes": [[2, 0], [0, 0], [0, 0], [0, 0]]}))
    assert run(capsys, "classify", "--file", str(f))[0] == EXIT_USAGE
    f.write_text(json.dumps({"amplitudes": [[2, 0], [0, 0], [0, 0], [0, 0]], "normalize": True}))
    assert run(capsys, "classify", "--file", str(f))[0] == EXIT_OK


@pytest.mark.parametrize(
    "doc, needle",
    [
        ({"amplitudes": [[1, 0], [0, 0], [0, 0]]}, "expected 4 amplitudes, got 3"),
        ({"amplitudes": [[0, 0]] * 4}, "zero"),
        ({"amplitudes": [[1, 0], [0], [0, 0], [0, 0]]}, "amplitudes[1]"),
        ({"amps": []}, "amplitudes: missing"),
        ({"amplitudes": [[1, 0]] * 4, "normalize": "yes"}, "normalize"),
        ([1, 2, 3], "JSON object"),
    ],
)
def test_classify_bad_state_file(tmp_path, capsys, doc, needle):
    f = tmp_path / "s.json"
    f.write_text(json.dumps(doc))
    code, _, err = run(capsys, "classify", "--file", str(f))
    assert code == EXIT_USAGE
    assert needle in err


def test_classify_malformed_json(tmp_path, capsys):
    f = tmp_path / "s.json"
    f.write_text("{not json")
    code, _, err = run(capsys, "classify", "--file", str(f))
    assert code == EXIT_USAGE
    assert "malformed JSON" in err


def test_classify_missing_file(tmp_path, capsys):
    code, _, err = run(capsys, "classify", "--file", str(tmp_path / "absent.json"))
    assert code == EXIT_USAGE
    assert "cannot read" in err


def test_unknown_builtin_state(capsys):
    assert run(capsys, "classify", "--state", "bogus")[0] == EXIT_USAGE


def test_invalid_label_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["classify", "--state", "singlet", "--label", "124"])
    assert exc.value.code == EXIT_USAGE
    assert "invalid TPS label" in capsys.readouterr().err


@pytest.mark.parametrize("shots", ["0", "-5", "ten"])
def test_bad_shots_is_usage_error(capsys, shots):
    with pytest.raises(SystemExit) as exc:
        main(["simulate", "--state", "singlet", "--label", "123", "--shots", shots, "--seed", "1"])
    assert exc.value.code == EXIT_USAGE


def test_simulate_singlet_321(capsys):
    code, out, _ = run(
        capsys, "simulate", "--state", "singlet", "--label", "321", "--shots", "20000", "--seed", "5", "--format", "json"
    )
    assert code == EXIT_OK
    doc = json.loads(out)
    joint = doc["joint_counts"]
    assert joint["00"] == joint["01"] == 0
    assert joint["10"] + joint["11"] == 20000
    assert doc["analytic_probs"]["10"] == pytest.approx(0.5)


def test_simulate_deterministic(capsys):
    argv = ("simulate", "--state", "uniform", "--label", "231", "--shots", "5000", "--seed", "11")
    first = run(capsys, *argv)[1]
    second = run(capsys, *argv)[1]
    assert first == second
    assert run(capsys, *argv[:-1], "12")[1] != first


def test_table_text(capsys):
    code, out, _ = run(capsys, "table")
    assert code == EXIT_OK
    lines = out.splitlines()
    assert len(lines) == 24 == len(set(lines))
    assert any("P_0⊗_321 I" in line and "P_C + P_G" in line and "Alice IFF Bob" in line for line in lines)


def test_table_json_colors(capsys):
    code, out, _ = run(capsys, "table", "--format", "json")
    assert code == EXIT_OK
    rows = json.loads(out)
    for l in ALL_LABELS:
        mine = [r for r in rows if r["label"] == l.code]
        assert len(mine) == 4
        colors = [c for r in mine for c in r["colors"]]
        assert sorted(colors) == sorted("CMYG" * 2)


def test_table_single_label(capsys):
    code, out, _ = run(capsys, "table", "--label", "123")
    assert code == EXIT_OK
    assert len(out.splitlines()) == 4
    assert "0 of Alice" in out
