from __future__ import annotations

import json
from fractions import Fraction as F

import pytest

from quasiortho.cli import _decimal_str, _parse_n_range, _parse_width, main


def run(tmp_path, *argv):
    return main([*argv, "--out", str(tmp_path)])


def load(tmp_path):
    return json.loads((tmp_path / "report.json").read_text())


def test_width_parser():
    assert _parse_width("1e-12") == F(1, 10**12)
    assert _parse_width("2^-40") == F(1, 2**40)
    with pytest.raises(Exception):
        _parse_width("0.5")


def test_n_range_parser():
    assert _parse_n_range("3..7") == (3, 7)
    assert _parse_n_range("5") == (5, 5)


def test_decimal_str():
    assert _decimal_str(F(1, 3), 5) == "0.33333"
    assert _decimal_str(F(-1, 2), 3) == "-0.500"
    assert _decimal_str(F(2), 2) == "2.00"


def test_verify_single_entry(tmp_path):
    code = run(tmp_path, "verify", "--entry", "eq1lqj", "--n", "2..5")
    assert code == 0
    report = load(tmp_path)
    assert report["summary"]["all_hold"] is True
    assert len(report["results"]) == 4
    assert all(r["discovery_agrees"] for r in report["results"])
    assert any(e["id"] == "eq1lqj" for e in report["catalog"])


def test_verify_family_config(tmp_path):
    cfg = tmp_path / "ref.cfg"
    cfg.write_text(
        "family=big-q-jacobi\nq=2/5\nalpha=2\nbeta=2\ngamma=-1\n", encoding="utf-8"
    )
    code = run(tmp_path, "verify", "--spec", str(cfg), "--n", "2..4")
    assert code == 0
    report = load(tmp_path)
    assert {r["entry"] for r in report["results"]} == {
        "eq1bqj", "eq3bqj", "eq5bqj", "eq6bqj",
    }


def test_discover_positive_and_negative(tmp_path):
    code = run(
        tmp_path, "discover", "--family", "little-q-jacobi",
        "--shift", "alpha/q", "--n", "5", "--depth", "1",
    )
    assert code == 0
    assert load(tmp_path)["outcome"] == "Coefficients"
    code = run(
        tmp_path, "discover", "--family", "q-meixner",
        "--shift", "beta/q", "--n", "5", "--depth", "3", "--expect-negative",
    )
    assert code == 0
    report = load(tmp_path)
    assert report["outcome"] == "NoConstantCombination"
    assert report["first_offending_index"] == 1
    # without the flag the missing combination is a nonzero exit
    code = run(
        tmp_path, "discover", "--family", "q-meixner",
        "--shift", "beta/q", "--n", "5", "--depth", "3",
    )
    assert code == 1


def test_order_command(tmp_path):
    code = run(
        tmp_path, "order", "--family", "big-q-jacobi",
        "--shift", "alpha/q^2", "--n", "6",
    )
    assert code == 0
    report = load(tmp_path)
    assert report["order"] == 2
    assert report["coefficients"][0] == "1"


def test_zeros_command(tmp_path):
    code = run(
        tmp_path, "zeros", "--family", "little-q-laguerre", "--n", "2..4",
        "--width", "1e-10",
    )
    assert code == 0
    lines = (tmp_path / "zeros.csv").read_text().strip().splitlines()
    assert lines[0] == "family,n,index,lo,hi,width,midpoint_approx"
    assert len(lines) == 1 + 2 + 3 + 4
    sweep = (tmp_path / "sweep-little-q-laguerre.dat").read_text().splitlines()
    assert sweep[0].startswith("#")
    assert len(sweep) == 1 + 9


def test_suite_command_and_parallel_determinism(tmp_path):
    one = tmp_path / "one"
    many = tmp_path / "many"
    assert main(
        ["suite", "--family", "little-q-laguerre", "--n", "4", "--out", str(one)]
    ) == 0
    assert main(
        [
            "suite", "--family", "little-q-laguerre", "--n", "4",
            "--jobs", "3", "--out", str(many),
        ]
    ) == 0
    assert (one / "report.json").read_bytes() == (many / "report.json").read_bytes()


def test_verify_parallel_determinism(tmp_path):
    one = tmp_path / "v1"
    many = tmp_path / "v2"
    args = ["verify", "--family", "al-salam-carlitz-i", "--n", "2..6"]
    assert main([*args, "--out", str(one)]) == 0
    assert main([*args, "--jobs", "4", "--out", str(many)]) == 0
    assert (one / "report.json").read_bytes() == (many / "report.json").read_bytes()


def test_moments_discrete(tmp_path):
    code = run(
        tmp_path, "moments", "--family", "q-hahn", "--n", "4",
        "--shift", "alpha/q", "--m-max", "4",
    )
    assert code == 0
    report = load(tmp_path)
    values = {row["m"]: row["value"] for row in report["moments"]}
    assert values[0] == "0" and values[1] == "0" and values[2] == "0"
    assert values[3] != "0"
    assert all(row["exact"] for row in report["moments"])


def test_moments_continuous(tmp_path):
    code = run(
        tmp_path, "moments", "--family", "askey-wilson", "--n", "3",
        "--shift", "a/q", "--m-max", "2", "--width", "1e-20",
    )
    assert code == 0
    report = load(tmp_path)
    values = {row["m"]: F(row["value"]) for row in report["moments"]}
    assert all(not row["exact"] for row in report["moments"])
    # order-1 quasi moments vanish through m = n-2 and not at m = n-1
    assert abs(values[0]) < F(1, 10**10) and abs(values[1]) < F(1, 10**10)
    assert abs(values[2]) > F(1, 10**6)


def test_reports_carry_tags(tmp_path):
    run(tmp_path, "suite", "--family", "q-laguerre", "--n", "4")
    report = load(tmp_path)
    assert all("tag" in claim for claim in report["claims"])
    tagged = [c for c in report["claims"] if c["tag"] == "eq1ql"]
    assert tagged


def test_bad_usage_is_usage_exit():
    assert main(["verify", "--n", "oops"]) != 0
