import json

import pytest

from oddbalanced import cli


def run_cli(args, capsys=None):
    code = cli.main(args)
    if capsys is not None:
        return code, capsys.readouterr()
    return code, None


def test_expand_csv(tmp_path):
    out = tmp_path / "table.csv"
    code, _ = run_cli(["expand", "--n-max", "10", "--output", str(out)])
    assert code == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "n,m,count"
    assert len(lines) - 1 >= 42
    assert "2,-1,1" in lines and "2,0,3" in lines and "2,1,1" in lines


def test_expand_json(tmp_path):
    out = tmp_path / "table.json"
    code, _ = run_cli(["expand", "--n-max", "4", "--format", "json",
                       "--output", str(out)])
    assert code == 0
    payload = json.loads(out.read_text())
    assert {"n": "0", "m": "0", "count": "1"} in payload


def test_enumerate_contains_known_sequences(capsys):
    code, captured = run_cli(["enumerate", "--n", "5"], capsys)
    assert code == 0
    seqs = [json.loads(line)["sequence"] for line in captured.out.splitlines()]
    for known in ([1, 1, 2, 4, 2, 1, 1], [1, 3, 4, 3, 1], [12], [1, 8, 2, 1]):
        assert known in seqs


def test_byte_stable_outputs(tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    run_cli(["expand", "--n-max", "8", "--output", str(a)])
    run_cli(["expand", "--n-max", "8", "--output", str(b)])
    assert a.read_bytes() == b.read_bytes()
    a, b = tmp_path / "a2.csv", tmp_path / "b2.csv"
    run_cli(["verify-transforms", "--output", str(a)])
    run_cli(["verify-transforms", "--output", str(b)])
    assert a.read_bytes() == b.read_bytes()


def test_verify_transforms_passes(tmp_path):
    out = tmp_path / "laws.csv"
    code, _ = run_cli(["verify-transforms", "--output", str(out)])
    assert code == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "law,point,residual"
    assert any(line.startswith("mordell_value_at_origin") for line in lines)


def test_verify_transforms_tampered_threshold(tmp_path, capsys):
    out = tmp_path / "laws.csv"
    code, captured = run_cli(
        ["verify-transforms", "--max-residual", "1e-30", "--output", str(out)], capsys)
    assert code == 1
    record = json.loads(captured.err.strip())
    assert record["status"] == "fail"
    assert record["check"] == "verify-transforms"


def test_verify_decomposition_single_point(tmp_path):
    grid = tmp_path / "grid.json"
    grid.write_text(json.dumps([
        {"z_re": 0.2, "z_im": 0.0, "tau_re": 0.0, "tau_im": 0.9, "order": 250}]))
    out = tmp_path / "dec.csv"
    code, _ = run_cli(["verify-decomposition", "--grid", str(grid),
                       "--output", str(out)])
    assert code == 0
    header = out.read_text().splitlines()[0]
    assert header.startswith("z,tau,order,lhs,rhs,residual")


def test_verify_decomposition_default_grid(tmp_path):
    out = tmp_path / "dec.csv"
    code, _ = run_cli(["verify-decomposition", "--grid", "default",
                       "--output", str(out)])
    assert code == 0
    lines = out.read_text().splitlines()
    assert len(lines) == 13  # header + 12 grid points


def test_verify_decomposition_tampered(tmp_path, capsys):
    grid = tmp_path / "grid.json"
    grid.write_text(json.dumps([
        {"z_re": 0.2, "z_im": 0.0, "tau_re": 0.0, "tau_im": 0.9, "order": 250}]))
    code, captured = run_cli(
        ["verify-decomposition", "--grid", str(grid), "--max-residual", "1e-30"],
        capsys)
    assert code == 1
    assert json.loads(captured.err.strip())["check"] == "verify-decomposition"


def test_asym_report_c1(tmp_path):
    out = tmp_path / "rep.csv"
    code, _ = run_cli(["asym-report", "--c", "1", "--checkpoints", "2,10",
                       "--output", str(out)])
    assert code == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "n,exact,main_term,ratio"
    assert lines[1].startswith("2,5,")


def test_asym_report_precision_floor():
    with pytest.raises(SystemExit):
        cli.main(["asym-report", "--c", "1", "--checkpoints", "2",
                  "--precision", "10"])


def test_equidistribution_small(tmp_path):
    out = tmp_path / "eq.csv"
    code, _ = run_cli(["equidistribution", "--moduli", "3", "--checkpoints",
                       "20,60", "--output", str(out)])
    assert code == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "c,n,stat"
    assert len(lines) == 3


def test_logconcavity_scan_small(tmp_path):
    out = tmp_path / "lc.csv"
    code, _ = run_cli(["logconcavity-scan", "--c", "3", "--a", "1",
                       "--n-max", "60", "--output", str(out)])
    assert code == 0
    header, row = out.read_text().splitlines()
    assert "square_threshold" in header


def test_lemma_ratios_small(tmp_path):
    out = tmp_path / "lr.csv"
    code, _ = run_cli(["lemma-ratios", "--moduli", "3", "--t-values", "0.1,0.05",
                       "--output", str(out)])
    assert code == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "c,j,t,series_value,main_term,deviation"
    assert len(lines) == 5


def test_usage_errors_exit_2():
    with pytest.raises(SystemExit) as exc:
        cli.main(["expand", "--bogus-flag"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        cli.main(["no-such-command"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        cli.main(["asym-report", "--c", "3", "--a", "5"])
    assert exc.value.code == 2
