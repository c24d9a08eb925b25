import csv
import io
import json
import math
import subprocess
import sys


from qextend.cli import build_parser, main, resolve_config


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def parse_csv(text):
    lines = text.splitlines()
    assert lines[0] == "schema=1"
    body = [ln for ln in lines[1:] if not ln.startswith("#")]
    return list(csv.DictReader(io.StringIO("\n".join(body))))


def test_sums_kloosterman_q5(capsys):
    code, out = run(capsys, "sums", "--q", "5", "--kinds", "kloosterman")
    rows = parse_csv(out)
    assert code == 0
    assert len(rows) == 25
    assert {(r["a"], r["b"]) for r in rows} == {(str(a), str(b)) for a in range(5) for b in range(5)}
    assert all(float(r["ratio"]) <= 1 for r in rows)
    assert list(rows[0])[:9] == ["q", "kind", "a", "b", "value_re", "value_im", "magnitude", "bound", "ratio"]


def test_sums_gauss_q7(capsys):
    code, out = run(capsys, "sums", "--q", "7", "--kinds", "gauss")
    rows = parse_csv(out)
    assert code == 0 and len(rows) == 6
    assert all(abs(float(r["magnitude"]) - math.sqrt(7)) < 1e-12 for r in rows)


def test_float_format_has_17_digits(capsys):
    _, out = run(capsys, "sums", "--q", "7", "--kinds", "gauss")
    mag = parse_csv(out)[0]["magnitude"]
    assert mag == format(math.sqrt(7), ".17g")


def test_config_errors_exit_2(capsys, tmp_path):
    assert main(["sums", "--q", ""]) == 2
    assert main(["sums", "--q", "9"]) == 2
    assert main(["sums", "--q", "5", "--threshold", "bogus=1"]) == 2
    assert main(["sums", "--q", "5", "--threshold", "weil"]) == 2
    assert main(["surface-ft", "--q", "101", "--d", "5"]) == 2
    assert main(["sums", "--config", str(tmp_path / "missing.ini")]) == 2
    bad = tmp_path / "bad.ini"
    bad.write_text("[sweep]\nwhatever = 3\n")
    assert main(["sums", "--config", str(bad)]) == 2
    assert "ConfigError" in capsys.readouterr().err


def test_failing_threshold_gives_exit_1(capsys):
    code, out = run(capsys, "sums", "--q", "11", "--kinds", "kloosterman", "--threshold", "weil=0.5")
    assert code == 1
    assert any(r["passed"] == "false" for r in parse_csv(out))


def test_surface_ft_rows(capsys):
    code, out = run(capsys, "surface-ft", "--q", "5,7", "--d", "2", "--forms", "diag;random:2", "--j", "all")
    rows = parse_csv(out)
    assert code == 0
    assert len(rows) == 3 * (4 + 6)
    for r in rows:
        q = int(r["q"])
        assert float(r["max_abs_gap"]) <= 1e-9
        assert int(r["cardinality"]) in (q - 1, q + 1)
        assert int(r["count_gap"]) == int(r["cardinality"]) - q


def test_surface_ft_zero_level(capsys):
    code, out = run(capsys, "surface-ft", "--q", "5", "--d", "2", "--forms", "diag", "--j", "0")
    rows = parse_csv(out)
    assert code == 1
    assert rows[0]["note"] == "ZeroLevel" and rows[0]["passed"] == "false"


def test_extension_d3(capsys):
    code, out = run(capsys, "extension", "--q", "5", "--d", "3", "--forms", "diag", "--j", "classes", "--functions", "10")
    rows = parse_csv(out)
    assert code == 0
    st = [r for r in rows if r["check"] == "stein_tomas"]
    assert st and all(r["family"] == "p=2,r=4" for r in st)
    exact = [r for r in rows if r["check"] == "rstar_2_2_exact"]
    assert all(abs(float(r["ratio"]) - 1) <= 1e-9 for r in exact)
    assert any(r["check"] == "stein_tomas_trend" for r in rows)


def test_extension_d2_l4(capsys):
    code, out = run(capsys, "extension", "--q", "7", "--d", "2", "--forms", "diag", "--functions", "5")
    rows = parse_csv(out)
    assert code == 0
    l4 = [r for r in rows if r["check"] == "rstar_2_4"]
    assert len(l4) == 6 and all(r["passed"] == "true" for r in l4)
    assert {r["family"] for r in rows if r["check"] == "stein_tomas"} == {"p=2,r=6"}


def test_incidence_d2(capsys):
    code, out = run(capsys, "incidence", "--q", "7", "--d", "2", "--forms", "diag", "--j", "1,3", "--subsets", "3")
    rows = parse_csv(out)
    assert code == 0
    pair = [r for r in rows if r["check"] == "pairsum"]
    assert len(pair) == 2 and all(int(r["value"]) <= 2 for r in pair)
    ident = [r for r in rows if r["check"] == "energy_l4_identity"]
    assert ident and all(abs(float(r["ratio"]) - 1) <= 1e-8 for r in ident)


def test_exponents_and_regions(capsys, tmp_path):
    out_path = tmp_path / "exp.csv"
    code = main(["exponents", "--d", "2,3", "--p0", "2,4", "--out", str(out_path)])
    assert code == 0
    rows = parse_csv(out_path.read_text())
    boot = [r for r in rows if r["check"] == "bootstrap"]
    assert [r["r"] for r in boot] == ["6", "4"]
    degenerate = [r for r in rows if r["note"].startswith("DegenerateDenominator")]
    assert degenerate and all(r["passed"] == "" for r in degenerate)
    d3 = [r for r in rows if r["d"] == "3" and r["p0"] == "2" and r["check"] == "restricted_exponents"]
    assert {(r["p"], r["r"]) for r in d3} == {("2", "4")}
    regions = (tmp_path / "exp.csv.regions.txt").read_text().splitlines()
    ts3 = [ln for ln in regions if ln.startswith("tomas_stein")][1]
    assert "1/2,1/4" in ts3.split()
    assert any(ln.startswith("restricted_small_p0=2") and "1/2,1/4" in ln.split() for ln in regions)
    assert "necessary_d2_boundary 0,1/4 1/2,1/4 1,0" in regions


def test_config_file_and_flag_override(capsys, tmp_path):
    ini = tmp_path / "run.ini"
    ini.write_text("[sweep]\nq = 5, 7\nkinds = gauss\nseed = 3\n\n[thresholds]\nweil = 2.5\n")
    code, out = run(capsys, "sums", "--config", str(ini), "--q", "7")
    assert code == 0
    assert len(parse_csv(out)) == 6
    assert "# config: q_list = 7" in out
    assert "# config: seed = 3" in out
    assert "weil=2.5" in out


def test_json_mirrors_csv(capsys):
    _, text_csv = run(capsys, "sums", "--q", "5", "--kinds", "salie")
    _, text_json = run(capsys, "sums", "--q", "5", "--kinds", "salie", "--format", "json")
    doc = json.loads(text_json)
    rows = parse_csv(text_csv)
    assert doc["schema"] == 1 and doc["columns"] == list(rows[0])
    assert len(doc["rows"]) == len(rows)
    for jr, cr in zip(doc["rows"], rows):
        assert format(jr["magnitude"], ".17g") == cr["magnitude"]
    assert doc["summary"][0]["rows"] == 25


def test_threads_from_env(monkeypatch):
    parser = build_parser()
    monkeypatch.setenv("QEXTEND_THREADS", "3")
    assert resolve_config(parser.parse_args(["sums"])).threads == 3
    assert resolve_config(parser.parse_args(["sums", "--threads", "2"])).threads == 2


def test_threads_do_not_change_output(capsys):
    argv = ["incidence", "--q", "5,7", "--d", "2", "--forms", "diag;random:1", "--subsets", "2"]
    _, serial = run(capsys, *argv, "--threads", "1")
    _, pooled = run(capsys, *argv, "--threads", "2")
    assert serial == pooled


def test_suite_writes_every_report(tmp_path, capsys):
    code = main(["suite", "--q", "3,5", "--d", "2", "--forms", "diag", "--functions", "5", "--subsets", "2",
                 "--out", str(tmp_path / "s")])
    assert code == 0
    names = sorted(p.name for p in (tmp_path / "s").iterdir())
    assert names == ["exponents.csv", "exponents.regions.txt", "extension.csv", "incidence.csv", "sums.csv", "surface-ft.csv"]


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "qextend", "sums", "--q", "3", "--kinds", "gauss"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert proc.stdout.startswith("schema=1\n")
    assert "2/2 rows passed" in proc.stderr


def test_header_documents_checks(capsys):
    _, out = run(capsys, "incidence", "--q", "3", "--d", "2", "--forms", "diag", "--subsets", "1")
    header = [ln for ln in out.splitlines() if ln.startswith("# check: ")]
    names = {ln.split(":")[1].strip() for ln in header}
    rows = parse_csv(out)
    used = {r["check"].rsplit("_", 1)[0] if r["check"].startswith("small_set_l4") else r["check"] for r in rows}
    used = {"small_set_l4" if u.startswith("small_set_l4") else u for u in used}
    assert used <= names
