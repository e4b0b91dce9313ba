import csv
import io
import json
import subprocess
import sys

import pytest

from quillenkit import __version__, cli
from quillenkit.comparison import make_report
from quillenkit.io import validate_report


def run_cli(args, capsys):
    code = cli.main(args)
    out = capsys.readouterr()
    return code, [json.loads(l) for l in out.out.splitlines() if l.strip()], out.err


def test_banner_and_compute(capsys):
    code, lines, _ = run_cli(["compute", "group-homology", "--group", "builtin:S3",
                              "--max-degree", "3"], capsys)
    assert code == 0
    assert lines[0] == {"tool": "quillenkit", "version": __version__}
    assert lines[1]["result"] == ["Z", "Z/2", "0", "Z/6"]


@pytest.mark.parametrize("args,expect", [
    (["compute", "abelianize", "--group", "builtin:D4"], ["Z/2 + Z/2"]),
    (["compute", "group-homology", "--group", "builtin:C3", "--coeffs", "augmentation",
      "--max-degree", "2"], ["Z/3", "0", "Z/3"]),
    (["compute", "group-cohomology", "--group", "builtin:C2", "--max-degree", "2"],
     ["Z", "0", "Z/2"]),
    (["compute", "hochschild", "--algebra", "builtin:dual-numbers-F2", "--max-degree", "2"],
     [2, 2, 2]),
    (["compute", "hochschild", "--algebra", "builtin:dual-numbers-Q", "--coeffs", "kernel",
      "--max-degree", "1"], [1, 1]),
    (["compute", "hypersurface", "--algebra", "builtin:Q[x]/(x^3)"], {"D_0": 2, "D_1": 2}),
])
def test_compute_verbs(args, expect, capsys):
    code, lines, _ = run_cli(args + ["--no-banner"], capsys)
    assert code == 0 and lines[0]["result"] == expect


def test_kaehler_verb(capsys):
    code, lines, _ = run_cli(["compute", "kaehler", "--algebra", "builtin:dual-numbers-F2",
                              "--no-banner"], capsys)
    assert code == 0 and lines[0]["result"]["k_dimension"] == 2


@pytest.mark.parametrize("args", [
    ["verify", "coinvariants-shift", "--group", "builtin:C4", "--max-degree", "2"],
    ["verify", "hochschild-shift", "--algebra", "builtin:QxQ", "--max-degree", "2"],
    ["verify", "comparison-map", "--algebra", "builtin:dual-numbers-F2"],
    ["verify", "commutativization", "--fixture", "S3 = C2 x| C3"],
    ["verify", "quillen-pair", "--instance", "gp-ab"],
    ["verify", "nonexact"],
    ["verify", "torsionfree-beck", "--rank", "2", "--module", "Z + Z/4"],
    ["verify", "module-adjunction"],
    ["verify", "factorization"],
    ["verify", "central-quotient", "--algebra", "builtin:M2(Q)"],
])
def test_verify_verbs_pass(args, capsys):
    code, lines, _ = run_cli(args + ["--no-banner"], capsys)
    assert code == 0
    for line in lines:
        assert line["verdict"] == "equal"
        validate_report(line)


def test_comparison_map_needs_presentation(capsys):
    code, lines, _ = run_cli(["verify", "comparison-map", "--algebra", "builtin:M2(Q)",
                              "--no-banner"], capsys)
    assert code == 2 and lines[0]["field"] == "algebra"


def test_schema_error_exit_2(tmp_path, capsys):
    p = tmp_path / "g.json"
    p.write_text(json.dumps({"kind": "cyclic"}))
    code, lines, err = run_cli(["compute", "group-homology", "--group", str(p),
                                "--no-banner"], capsys)
    assert code == 2 and lines[0]["field"] == "n" and "error" in err


def test_corrupted_table_battery_exit_2(tmp_path, capsys):
    p = tmp_path / "bad.json"
    p.write_text(json.dumps({"kind": "table",
                             "table": [[0, 1, 2], [1, 2, 0], [2, 1, 0]]}))
    code, lines, _ = run_cli(["battery", "--group", str(p), "--no-banner"], capsys)
    assert code == 2
    assert lines[0]["error"] == "validation" and lines[0]["witness"]


def test_entry_cap_exit_3(capsys):
    code, lines, _ = run_cli(["verify", "coinvariants-shift", "--group", "builtin:S3",
                              "--entry-cap", "10", "--no-banner"], capsys)
    assert code == 3 and lines[0]["error"] == "size-cap"


def test_entry_cap_env(monkeypatch, capsys):
    monkeypatch.setenv("QK_ENTRY_CAP", "10")
    code, _, _ = run_cli(["compute", "group-homology", "--group", "builtin:C3",
                          "--no-banner"], capsys)
    assert code == 3


def test_battery_entry_cap_exit_3(capsys):
    code, lines, _ = run_cli(["battery", "--entry-cap", "10", "--no-banner"], capsys)
    assert code == 3
    summary = lines[-1]
    assert summary["name"] == "battery-summary" and summary["size_cap"] > 0


def test_failed_verification_exit_1(monkeypatch, capsys):
    bad = make_report("commutativization", {"fixture": "x"}, ["Z/2"], ["Z/4"])
    monkeypatch.setattr(cli.cmp, "verify_commutativization", lambda e, label: bad)
    code, lines, err = run_cli(["verify", "commutativization", "--fixture",
                                "S3 = C2 x| C3", "--no-banner"], capsys)
    assert code == 1
    assert lines[0]["witness"] == {"index": 0, "left": "Z/2", "right": "Z/4"}
    assert "witness" in err


def test_bad_flags_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["compute", "group-homology", "--max-degree", "-1"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        cli.main(["verify", "nonsense"])
    assert exc.value.code == 2


def test_output_file_and_csv(tmp_path):
    out = tmp_path / "r.csv"
    code = cli.main(["verify", "factorization", "--format", "csv", "--output", str(out)])
    assert code == 0
    text = out.read_text().splitlines()
    assert text[0] == f"# quillenkit {__version__}"
    rows = list(csv.reader(text[1:]))
    assert rows[0] == list(cli._Writer.COLUMNS)
    assert all(r[1] == "equal" for r in rows[1:]) and len(rows) == 8


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "quillenkit", "compute", "abelianize",
                          "--group", "builtin:Q8", "--no-banner"],
                         capture_output=True, text=True, check=False)
    assert res.returncode == 0
    assert json.loads(res.stdout)["result"] == ["Z/2 + Z/2"]


def test_parallel_matches_serial_and_is_deterministic():
    cfg = cli.RunConfig(command="verify", target="nonexact", banner=False)
    runs = []
    for jobs in (1, 2, 1):
        cfg.jobs = jobs
        buf = io.StringIO()
        assert cli.run(cfg, buf, io.StringIO()) == 0
        runs.append(buf.getvalue())
    assert runs[0] == runs[1] == runs[2]


def test_battery_item_order():
    items = cli.battery_items(["extra.json"])
    kinds = [k for k, *_ in items]
    # declaration order: shift checks first, extra fixtures right after builtins
    assert kinds[0] == "coinvariants-shift" and items[7] == ("coinvariants-shift", "extra.json")
    assert kinds[-1] == "central-quotient"


def test_run_config_validation():
    with pytest.raises(ValueError):
        cli.RunConfig(command="battery", entry_cap=0)


def test_default_battery_passes(capsys):
    code, lines, err = run_cli(["battery", "--no-banner"], capsys)
    assert code == 0, err
    summary = lines[-1]
    assert summary["passed"] == summary["total"] == len(cli.battery_items())
    for line in lines[:-1]:
        validate_report(line)
