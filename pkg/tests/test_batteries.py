"""Canned experiment batteries: structure and cheap sanity checks."""

import filecmp

import pytest

from ecsim.batteries import run_battery, storage_battery


def test_unknown_battery_name():
    with pytest.raises(ValueError):
        run_battery("bogus")


def test_storage_battery_redundancy(tmp_path):
    result = storage_battery(str(tmp_path))
    rows = result["rows"]
    assert [row[0] for row in rows] == ["replica1", "replica2", "ec2+1", "ec3+1", "ec3+2"]
    redundancy = {row[0]: float(row[4]) for row in rows}
    assert redundancy["replica1"] == pytest.approx(1.0, abs=1e-4)
    assert redundancy["replica2"] == pytest.approx(2.0, abs=1e-4)
    assert redundancy["ec2+1"] == pytest.approx(1.5, abs=1e-4)
    assert redundancy["ec3+1"] == pytest.approx(4 / 3, abs=1e-4)
    assert redundancy["ec3+2"] == pytest.approx(5 / 3, abs=1e-4)
    assert (tmp_path / "storage.csv").exists()


def test_storage_battery_reruns_identically(tmp_path):
    a = tmp_path / "a"
    b = tmp_path / "b"
    storage_battery(str(a))
    storage_battery(str(b))
    assert filecmp.cmp(a / "storage.csv", b / "storage.csv", shallow=False)
