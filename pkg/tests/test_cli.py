import json

import numpy as np
import pytest

from oamix.catalog import czitrom_d_oofa, component_amount_projection_design
from oamix.cli import main
from oamix.serialize import parse_design_csv, write_design_csv


def run_cli(*args):
    return main(list(args))


def catalog_file(tmp_path, name, *extra):
    out = tmp_path / f"{name}.csv"
    assert run_cli("catalog", name, "-o", str(out), *extra) == 0
    return out


def test_catalog_round_trip(tmp_path):
    out = catalog_file(tmp_path, "czitrom-d-oofa")
    text = out.read_text()
    design = parse_design_csv(text)
    assert design.n == 24
    assert write_design_csv(design) == text
    tabulated = czitrom_d_oofa()
    for got, want in zip(design.runs, tabulated.runs):
        assert got.values == pytest.approx(want.values, abs=1e-12)
        assert got.pwo == want.pwo and got.block == want.block


def test_catalog_amount_round_trip(tmp_path):
    out = catalog_file(tmp_path, "ca-projection", "--a-max", "100")
    design = parse_design_csv(out.read_text())
    want = component_amount_projection_design(100.0)
    assert design.kind == "amount"
    for got, ref in zip(design.runs, want.runs):
        assert got.values == pytest.approx(ref.values, abs=1e-9)
        assert got.amount == pytest.approx(ref.amount, abs=1e-9)
    assert write_design_csv(design) == out.read_text()


def test_catalog_rejects_a_max_elsewhere(tmp_path, capsys):
    code = run_cli("catalog", "czitrom-d", "--a-max", "50",
                   "-o", str(tmp_path / "x.csv"))
    assert code == 2


def test_unknown_subcommand_is_usage_error():
    assert run_cli("frobnicate") == 2


def test_expand_matches_tabulated_blocks(tmp_path):
    base = catalog_file(tmp_path, "czitrom-d")
    out = tmp_path / "expanded.csv"
    assert run_cli("expand", "-i", str(base), "-o", str(out)) == 0
    expanded = parse_design_csv(out.read_text())
    tabulated = czitrom_d_oofa()
    assert expanded.n == 24
    key = lambda d, b: sorted((r.values, r.pwo) for r in d.runs
                              if r.block == b)
    for b in (1, 2):
        assert key(expanded, b) == key(tabulated, b)


def test_check_blocks_pass_and_fail(tmp_path, capsys):
    t3 = catalog_file(tmp_path, "czitrom-d-oofa")
    assert run_cli("check-blocks", "-i", str(t3), "--model", "scheffe-q") == 0
    capsys.readouterr()

    # swap two runs across blocks to break the balance
    lines = t3.read_text().splitlines()
    r1, r13 = lines[1].split(","), lines[13].split(",")
    r1[-1], r13[-1] = "2", "1"
    lines[1], lines[13] = ",".join(r1), ",".join(r13)
    bad = tmp_path / "bad.csv"
    bad.write_text("\n".join(lines) + "\n")
    assert run_cli("check-blocks", "-i", str(bad),
                   "--model", "scheffe-q") == 3
    out = capsys.readouterr().out
    assert "FAIL" in out


def test_check_blocks_json(tmp_path, capsys):
    t3 = catalog_file(tmp_path, "czitrom-d-oofa")
    capsys.readouterr()
    assert run_cli("check-blocks", "-i", str(t3), "--model", "scheffe-q",
                   "--json") == 0
    obj = json.loads(capsys.readouterr().out)
    assert obj["passed"] is True
    assert {c["condition"] for c in obj["conditions"]} >= {"pwo_sum"}


def test_eval_json_reports_published_metrics(tmp_path, capsys):
    t3 = catalog_file(tmp_path, "czitrom-d-oofa")
    capsys.readouterr()
    assert run_cli("eval", "-i", str(t3), "--model", "scheffe-q",
                   "--json") == 0
    obj = json.loads(capsys.readouterr().out)
    assert obj["n"] == 24 and obj["p"] == 13
    assert obj["avg_pv"] == pytest.approx(13 / 24, abs=1e-10)
    assert obj["max_pv"] == pytest.approx(0.922, abs=0.02)
    assert obj["g_efficiency"] == pytest.approx(58.8, abs=1.0)
    assert {"det_xtx", "d_criterion", "a_criterion", "notes"} <= obj.keys()
    assert len(obj["columns"]) == 13
    assert {"name", "se", "r_squared", "power_2sd"} <= obj["columns"][0].keys()


def test_eval_rank_deficient_exits_4(tmp_path, capsys):
    t3 = catalog_file(tmp_path, "czitrom-d-oofa")
    # eight runs cannot support a thirteen-term model
    lines = t3.read_text().splitlines()
    short = tmp_path / "short.csv"
    short.write_text("\n".join(lines[:9]) + "\n")
    code = run_cli("eval", "-i", str(short), "--model", "scheffe-q",
                   "--no-block")
    assert code == 4
    assert "numerical error" in capsys.readouterr().err


def test_eval_points_flag(tmp_path, capsys):
    t3 = catalog_file(tmp_path, "czitrom-d-oofa")
    capsys.readouterr()
    assert run_cli("eval", "-i", str(t3), "--model", "scheffe-q",
                   "--eval-points", str(t3), "--json") == 0
    obj = json.loads(capsys.readouterr().out)
    assert obj["avg_pv"] == pytest.approx(13 / 24, abs=1e-10)


def test_power_json_matches_published_table(tmp_path, capsys):
    t8 = catalog_file(tmp_path, "ca-projection", "--a-max", "100")
    capsys.readouterr()
    assert run_cli("power", "-i", str(t8), "--model", "ca-q", "--json") == 0
    obj = json.loads(capsys.readouterr().out)
    by_name = {c["name"]: c for c in obj["columns"]}
    assert by_name["a1"]["se"] == pytest.approx(1.09, abs=0.02)
    assert by_name["z12"]["se"] == pytest.approx(0.28, abs=0.02)
    assert by_name["a1"]["r_squared"] == pytest.approx(0.9484, abs=0.01)
    assert obj["basis"] == "coded"
    assert obj["notes"]


def test_fds_outputs_are_deterministic(tmp_path, capsys):
    t3 = catalog_file(tmp_path, "czitrom-d-oofa")
    b1, b2 = tmp_path / "c1", tmp_path / "c2"
    for b in (b1, b2):
        assert run_cli("fds", "-i", str(t3), "--model", "scheffe-q",
                       "--samples", "100", "--seed", "7", "-o", str(b)) == 0
    assert (tmp_path / "c1.csv").read_bytes() == (tmp_path / "c2.csv").read_bytes()
    assert (tmp_path / "c1.svg").read_text().startswith("<svg")


def test_fds_seed_env_fallback(tmp_path, monkeypatch, capsys):
    t3 = catalog_file(tmp_path, "czitrom-d-oofa")
    explicit = tmp_path / "explicit"
    env = tmp_path / "env"
    assert run_cli("fds", "-i", str(t3), "--model", "scheffe-q",
                   "--samples", "50", "--seed", "99", "-o", str(explicit)) == 0
    monkeypatch.setenv("OAMIX_SEED", "99")
    assert run_cli("fds", "-i", str(t3), "--model", "scheffe-q",
                   "--samples", "50", "-o", str(env)) == 0
    assert (tmp_path / "explicit.csv").read_bytes() == \
        (tmp_path / "env.csv").read_bytes()


def test_fit_recovers_synthetic_coefficients(tmp_path, capsys):
    t3 = catalog_file(tmp_path, "czitrom-d-oofa")
    from oamix.core import ModelSpec
    from oamix.modelmat import build_model_matrix, default_interaction_subset
    spec = ModelSpec("scheffe_quadratic", include_pwo=True,
                     interaction_terms=default_interaction_subset(3),
                     include_block=True)
    X = build_model_matrix(czitrom_d_oofa(), spec)
    y = X.data @ np.ones(X.p)
    resp = tmp_path / "y.csv"
    resp.write_text("y\n" + "\n".join(repr(float(v)) for v in y) + "\n")
    out = tmp_path / "coef.csv"
    assert run_cli("fit", "-i", str(t3), "--model", "scheffe-q",
                   "--response", str(resp), "-o", str(out)) == 0
    rows = out.read_text().splitlines()
    assert rows[0] == "term,estimate,se"
    for line in rows[1:]:
        _, est, _ = line.split(",")
        assert float(est) == pytest.approx(1.0, abs=1e-6)


def test_missing_input_is_data_error(tmp_path, capsys):
    assert run_cli("eval", "-i", str(tmp_path / "nope.csv"),
                   "--model", "scheffe-q") == 3


def test_bad_model_name_is_usage_error(tmp_path, capsys):
    t3 = catalog_file(tmp_path, "czitrom-d-oofa")
    assert run_cli("eval", "-i", str(t3), "--model", "cubic") == 2


def test_amount_columns_need_amount_header(tmp_path, capsys):
    text = "run,a1,a2,a3,z12,z13,z23,block\n1,1,2,3,0,0,0,1\n"
    f = tmp_path / "bad.csv"
    f.write_text(text)
    assert run_cli("eval", "-i", str(f), "--model", "ca-q") == 3


def test_kind_model_mismatch_is_data_error(tmp_path, capsys):
    t3 = catalog_file(tmp_path, "czitrom-d-oofa")
    assert run_cli("eval", "-i", str(t3), "--model", "ca-q") == 3
