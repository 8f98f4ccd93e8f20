"""Command-line entry points, exercised through main(argv)."""

import random

import pytest

from ecsim.cli import main


def run_cli(args, capsys):
    code = main(args)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_no_command_is_a_usage_error(capsys):
    with pytest.raises(SystemExit) as err:
        main([])
    assert err.value.code == 2


def test_unknown_battery_name_is_a_usage_error(capsys):
    with pytest.raises(SystemExit) as err:
        main(["battery", "bogus"])
    assert err.value.code == 2


def test_simulate_writes_reports(tmp_path, capsys):
    out = tmp_path / "run"
    code, stdout, _ = run_cli(
        ["simulate", "--policy", "replica2", "--seed", "3",
         "--duration-min", "10", "--out", str(out)],
        capsys,
    )
    assert code == 0
    assert stdout.startswith("replica2,")
    for name in ("transfers.csv", "caches.csv", "vm_counts.csv", "summary.csv"):
        assert (out / name).exists()


def test_simulate_rejects_bad_override(capsys):
    code, _, stderr = run_cli(
        ["simulate", "--policy", "replica2", "--set", "bogus=1"], capsys
    )
    assert code == 2
    assert stderr.startswith("ecsim:")
    assert "bogus" in stderr


def test_simulate_rejects_bad_policy(capsys):
    code, _, stderr = run_cli(["simulate", "--policy", "raid5"], capsys)
    assert code == 2
    assert "policy" in stderr


def test_simulate_missing_config_file_is_io_error(tmp_path, capsys):
    code, _, stderr = run_cli(
        ["simulate", "--config", str(tmp_path / "absent.cfg")], capsys
    )
    assert code == 1
    assert stderr.startswith("ecsim:")


def test_seed_falls_back_to_environment(tmp_path, capsys, monkeypatch):
    args = ["simulate", "--policy", "replica2", "--duration-min", "10"]
    monkeypatch.setenv("ECSIM_SEED", "7")
    _, from_env, _ = run_cli(args, capsys)
    monkeypatch.delenv("ECSIM_SEED")
    _, explicit, _ = run_cli(args + ["--seed", "7"], capsys)
    assert from_env == explicit


def test_explicit_seed_beats_environment(capsys, monkeypatch):
    args = ["simulate", "--policy", "replica2", "--duration-min", "10"]
    _, baseline, _ = run_cli(args + ["--seed", "3"], capsys)
    monkeypatch.setenv("ECSIM_SEED", "7")
    _, overridden, _ = run_cli(args + ["--seed", "3"], capsys)
    assert overridden == baseline


def test_config_file_with_overrides(tmp_path, capsys):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("policy = replica2\nseed = 3\nduration_min = 10\n")
    _, from_file, _ = run_cli(
        ["simulate", "--config", str(cfg), "--seed", "5"], capsys
    )
    _, direct, _ = run_cli(
        ["simulate", "--policy", "replica2", "--seed", "5", "--duration-min", "10"],
        capsys,
    )
    assert from_file == direct


def test_mttdl_curve_row_count(tmp_path, capsys):
    out = tmp_path / "curve.csv"
    code, _, _ = run_cli(["mttdl-curve", "--out", str(out)], capsys)
    assert code == 0
    lines = out.read_text().strip().splitlines()
    assert lines[0] == "age_min,policy,lambda,mttdl,data_loss_rate"
    assert len(lines) == 1 + 151 * 4  # ages 0..150 for four policies
    policies = {line.split(",")[1] for line in lines[1:]}
    assert policies == {"replica2", "replica3", "ec3+1", "ec3+2"}


def test_mttdl_curve_single_policy_to_stdout(capsys):
    code, stdout, _ = run_cli(
        ["mttdl-curve", "--policy", "ec3+1", "--max-age-min", "10"], capsys
    )
    assert code == 0
    lines = stdout.strip().splitlines()
    assert len(lines) == 1 + 11
    assert all(line.split(",")[1] == "ec3+1" for line in lines[1:])


def test_battery_cli_writes_csv(tmp_path, capsys):
    out = tmp_path / "bat"
    code, stdout, _ = run_cli(["battery", "storage", "--out", str(out)], capsys)
    assert code == 0
    assert (out / "storage.csv").exists()
    assert stdout.count("\n") == 5  # one summary row per policy


def test_codec_round_trip(tmp_path, capsys):
    payload = random.Random(17).randbytes(50_000)
    source = tmp_path / "payload.bin"
    source.write_bytes(payload)
    base = str(tmp_path / "stripe")

    code, _, _ = run_cli(
        ["codec", "encode", str(source), "--policy", "ec3+1", "--out-base", base],
        capsys,
    )
    assert code == 0
    # survive the loss of any single unit
    (tmp_path / "stripe.unit2").unlink()
    restored = tmp_path / "restored.bin"
    code, stdout, _ = run_cli(
        ["codec", "decode", base, "--out", str(restored)], capsys
    )
    assert code == 0
    assert restored.read_bytes() == payload
    assert "50000 bytes" in stdout


def test_codec_encode_rejects_bad_policy(tmp_path, capsys):
    source = tmp_path / "payload.bin"
    source.write_bytes(b"data")
    code, _, stderr = run_cli(
        ["codec", "encode", str(source), "--policy", "raid5", "--out-base",
         str(tmp_path / "x")],
        capsys,
    )
    assert code == 2
    assert stderr.startswith("ecsim:")
