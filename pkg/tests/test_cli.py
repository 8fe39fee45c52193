"""End-to-end CLI behavior: formats, determinism, and exit codes."""

import json
import os

import numpy as np
import pytest

from conftest import run_cli

CR_45 = 8.97232140725922e-09
FE_45 = 2.1128703931021166e-08
V_45 = 1.9480116532842068e-09

GOLDEN_45_ROW = (
    "4.50000000e+00,8.97232141e-09,2.11287039e-08,1.94801165e-09,3.20490370e-08"
)
GOLDEN_GD_ROW = (
    "Gd,3.07000000e+02,9.76522664e+02,3.02400000e+01,1.08128045e-02,1.03984636e-01"
)


def _clean_env(**extra):
    env = dict(os.environ)
    env.pop("PARAMAG_LOSS_DB", None)
    env.update(extra)
    return env


def _parse_csv(text):
    lines = text.strip().split("\n")
    header = lines[0].split(",")
    rows = [line.split(",") for line in lines[1:]]
    return header, rows


def _column(header, rows, name):
    i = header.index(name)
    return np.array([float(row[i]) for row in rows])


def test_sweep_default_grid(tmp_path):
    out = tmp_path / "sweep.csv"
    code, _, _ = run_cli(["sweep", "--output", str(out)], env=_clean_env())
    assert code == 0
    header, rows = _parse_csv(out.read_text())
    assert header == ["freq_ghz", "Cr", "Fe", "V", "total"]
    assert len(rows) == 1401
    row_45 = next(row for row in rows if row[0] == "4.50000000e+00")
    assert ",".join(row_45) == GOLDEN_45_ROW
    cr = _column(header, rows, "Cr")
    freqs = _column(header, rows, "freq_ghz")
    assert cr[np.argmin(np.abs(freqs - 4.5))] == pytest.approx(9.0e-9, rel=0.05)
    peak = int(np.argmax(cr))
    assert freqs[peak] == pytest.approx(11.45, abs=1e-9)
    assert cr[peak] == pytest.approx(2.4e-3, rel=0.10)


def test_sweep_rejects_single_point():
    code, _, err = run_cli(["sweep", "--points", "1"], env=_clean_env())
    assert code == 2
    assert "points" in err


def test_sweep_rejects_huge_grid():
    code, _, err = run_cli(["sweep", "--points", "10000001"], env=_clean_env())
    assert code == 2
    assert "points" in err


def test_point_values_and_metadata():
    code, out, _ = run_cli(["point", "--freq-ghz", "4.5"], env=_clean_env())
    assert code == 0
    header, rows = _parse_csv(out)
    assert header == ["key", "value"]
    values = {row[0]: row[1] for row in rows}
    assert float(values["Cr"]) == pytest.approx(CR_45, rel=1e-8)
    assert float(values["Fe"]) == pytest.approx(FE_45, rel=1e-8)
    assert float(values["V"]) == pytest.approx(V_45, rel=1e-8)
    assert float(values["total"]) == pytest.approx(CR_45 + FE_45 + V_45, rel=1e-8)
    assert values["Cr.linewidth_convention"] == "cyclic_times_2pi"
    assert float(values["Cr.gamma_rad_per_s"]) == pytest.approx(2 * np.pi * 27e6, rel=1e-8)
    assert values["V.weights"].count(";") == 7
    assert float(values["n_r"]) == 1.0


def test_point_resonance_dominance():
    code, out, _ = run_cli(["point", "--freq-ghz", "11.45"], env=_clean_env())
    assert code == 0
    _, rows = _parse_csv(out)
    values = {row[0]: float(row[1]) for row in rows if row[0] in ("Cr", "total")}
    others = values["total"] - values["Cr"]
    assert values["Cr"] > 100.0 * others


def test_point_rejects_bad_frequency():
    code, _, _ = run_cli(["point", "--freq-ghz", "0"], env=_clean_env())
    assert code == 2
    code, _, _ = run_cli(["point", "--freq-ghz", "-3"], env=_clean_env())
    assert code == 2


def test_emission_default_table():
    code, out, _ = run_cli(["emission"], env=_clean_env())
    assert code == 0
    header, rows = _parse_csv(out)
    assert header == ["label", "lambda_nm", "freq_thz", "a_md_hz", "m_sq", "m_abs"]
    assert [row[0] for row in rows] == ["Gd", "Sm", "Eu", "Er", "Dy"]
    assert ",".join(rows[0]) == GOLDEN_GD_ROW
    published = {"Gd": 0.0108, "Sm": 0.0096, "Eu": 0.1044, "Er": 0.3135, "Dy": 0.2858}
    m_sq = _column(header, rows, "m_sq")
    for row, value in zip(rows, m_sq):
        assert value == pytest.approx(published[row[0]], rel=0.02)


def test_emission_empty_table(tmp_path):
    table = tmp_path / "empty.json"
    table.write_text("[]")
    code, out, _ = run_cli(["emission", "--table", str(table)])
    assert code == 0
    assert out == "label,lambda_nm,freq_thz,a_md_hz,m_sq,m_abs\n"


def test_emission_malformed_table(tmp_path):
    table = tmp_path / "bad.json"
    table.write_text(json.dumps([{"label": "Xx", "lambda_nm": 500.0}]))
    code, _, err = run_cli(["emission", "--table", str(table)])
    assert code == 2
    assert "Xx" in err


def test_tempcurve_limits():
    code, out, _ = run_cli(
        ["tempcurve", "--freq-ghz", "11.45", "--tmin-k", "0.01", "--tmax-k", "10"],
        env=_clean_env(),
    )
    assert code == 0
    header, rows = _parse_csv(out)
    assert header == ["temp_k", "w_factor", "tanh_factor"]
    w = _column(header, rows, "w_factor")
    th = _column(header, rows, "tanh_factor")
    assert w[0] == pytest.approx(1.0, abs=1e-9)
    assert 0.25 < w[-1] < 0.28
    assert np.all(np.diff(w) <= 0.0)
    assert th[0] == pytest.approx(1.0, abs=1e-9)
    assert th[-1] < 0.05
    assert np.all(np.diff(th) < 0.0)


def test_tempcurve_rejects_bad_range():
    code, _, _ = run_cli(
        ["tempcurve", "--freq-ghz", "11.45", "--tmin-k", "5", "--tmax-k", "1"]
    )
    assert code == 2


def test_powercurve_monotonicity():
    # 11.72 GHz sits ten (unbroadened) linewidths above the Cr resonance.
    code, out, _ = run_cli(
        ["powercurve", "--freq-ghz", "11.72", "--points", "20"], env=_clean_env()
    )
    assert code == 0
    header, rows = _parse_csv(out)
    assert header == ["p_over_pc", "loss_on_resonance", "loss_detuned"]
    assert len(rows) == 20
    peak = _column(header, rows, "loss_on_resonance")
    wing = _column(header, rows, "loss_detuned")
    assert np.all(np.diff(peak) < 0.0)
    assert np.all(np.diff(wing) > 0.0)


def test_powercurve_species_selection():
    code, out, _ = run_cli(
        ["powercurve", "--freq-ghz", "12.30", "--species", "Fe", "--format", "json"],
        env=_clean_env(),
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["species"] == "Fe"
    assert payload["resonance_ghz"] == pytest.approx(12.03, rel=1e-9)
    code, _, err = run_cli(
        ["powercurve", "--freq-ghz", "12.30", "--species", "Nb"], env=_clean_env()
    )
    assert code == 2
    assert "Nb" in err


def test_repeat_runs_byte_identical(tmp_path):
    env = _clean_env()
    for args in (
        ["sweep", "--fmin-ghz", "4", "--fmax-ghz", "13", "--points", "301"],
        ["point", "--freq-ghz", "4.5"],
        ["emission"],
    ):
        first = tmp_path / "a.out"
        second = tmp_path / "b.out"
        code1, _, _ = run_cli(args + ["--output", str(first)], env=env)
        code2, _, _ = run_cli(args + ["--output", str(second)], env=env)
        assert code1 == 0 and code2 == 0
        assert first.read_bytes() == second.read_bytes()


def test_csv_and_json_encode_same_values(tmp_path):
    env = _clean_env()
    base = ["sweep", "--fmin-ghz", "4", "--fmax-ghz", "5", "--points", "51"]
    csv_path = tmp_path / "s.csv"
    json_path = tmp_path / "s.json"
    assert run_cli(base + ["--output", str(csv_path)], env=env)[0] == 0
    assert (
        run_cli(base + ["--format", "json", "--output", str(json_path)], env=env)[0] == 0
    )
    header, rows = _parse_csv(csv_path.read_text())
    payload = json.loads(json_path.read_text())
    for i, row in enumerate(rows):
        assert float(row[0]) == payload["freqs_ghz"][i]
        for name in ("Cr", "Fe", "V"):
            csv_value = float(row[header.index(name)])
            json_value = payload["species"][name][i]
            assert abs(csv_value - json_value) <= 1e-12 * max(abs(csv_value), 1e-300)
        assert float(row[header.index("total")]) == payload["total"][i]
    assert payload["metadata"]["species"][2]["weights"] == [0.125] * 8


def test_unwritable_output_exit_code(tmp_path):
    missing_dir = tmp_path / "no" / "such" / "dir" / "out.csv"
    code, _, err = run_cli(
        ["sweep", "--points", "11", "--output", str(missing_dir)], env=_clean_env()
    )
    assert code == 3
    assert "cannot write" in err


def test_malformed_database_names_species(tmp_path):
    entry = {
        "name": "Fe",
        "two_s": 5,
        "concentration_per_cm3": 1.0e17,
        "transition": [0.5, 1.5],
        "lines": [{"g": 2.02, "freq_ghz": 12.03, "weight": 1.0}],
    }
    db = tmp_path / "bad.json"
    db.write_text(json.dumps([entry]))
    code, _, err = run_cli(["point", "--db", str(db), "--freq-ghz", "4.5"])
    assert code == 2
    assert "Fe" in err and "linewidth_mhz" in err


def test_database_env_var(tmp_path):
    entry = {
        "name": "Cr",
        "two_s": 3,
        "concentration_per_cm3": 2.0e17,
        "linewidth_mhz": 27.0,
        "linewidth_convention": "cyclic_times_2pi",
        "transition": [1.5, 0.5],
        "lines": [{"g": 1.984, "freq_ghz": 11.45, "weight": 1.0}],
    }
    db = tmp_path / "doubled.json"
    db.write_text(json.dumps([entry]))
    env = _clean_env(PARAMAG_LOSS_DB=str(db))
    code, out, _ = run_cli(["point", "--freq-ghz", "4.5"], env=env)
    assert code == 0
    _, rows = _parse_csv(out)
    values = {row[0]: row[1] for row in rows}
    assert float(values["Cr"]) == pytest.approx(2.0 * CR_45, rel=1e-8)
    assert "Fe" not in values


def test_db_flag_overrides_env(tmp_path):
    good = tmp_path / "good.json"
    good.write_text(
        json.dumps(
            [
                {
                    "name": "Cr",
                    "two_s": 3,
                    "concentration_per_cm3": 1.0e17,
                    "linewidth_mhz": 27.0,
                    "transition": [1.5, 0.5],
                    "lines": [{"g": 1.984, "freq_ghz": 11.45, "weight": 1.0}],
                }
            ]
        )
    )
    env = _clean_env(PARAMAG_LOSS_DB=str(tmp_path / "missing.json"))
    code, out, _ = run_cli(
        ["point", "--db", str(good), "--freq-ghz", "4.5"], env=env
    )
    assert code == 0
    _, rows = _parse_csv(out)
    values = {row[0]: row[1] for row in rows}
    assert float(values["Cr"]) == pytest.approx(CR_45, rel=1e-8)


def test_usage_errors():
    code, _, _ = run_cli([])
    assert code == 2
    code, _, _ = run_cli(["warp"])
    assert code == 2
    code, _, _ = run_cli(["sweep", "--no-such-flag"])
    assert code == 2
