import io
import json
import subprocess
import sys

import pytest

from lsbounds.cli import main
from lsbounds.document import ReportDocument
from lsbounds.presentation import fcpn_presentation

KEYS = ["schema_version", "space", "n", "betti", "cup", "zcl", "cat", "tc", "ganea", "witnesses", "timing_ms"]


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_fcpn_table():
    code, out, _ = run("fcpn", "--n", "3")
    assert code == 0
    lines = dict(line.split(None, 1) for line in out.splitlines() if not line.startswith(("cup w", "zcl w")))
    assert lines["cup"].startswith("5")
    assert lines["cat"].startswith("6")
    assert lines["zcl"].startswith("10")
    assert lines["TC"].startswith("11")
    assert lines["ganea"] == "true"


def test_fcpn_json():
    code, out, _ = run("fcpn", "--n", "1", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert list(data) == KEYS
    assert data["tc"]["exact"] == 3
    assert data["witnesses"] == {"cup": "a2", "zcl": "a1*a2"}


@pytest.mark.parametrize("argv", [
    ("fcpn", "--n", "0"),
    ("fcpn", "--n", "65"),
    ("fcpn",),
    ("fcpn", "--n", "x"),
    ("sweep", "--from", "3", "--to", "1"),
    ("compare", "--n", "0"),
    ("nonsense",),
    (),
])
def test_usage_errors_exit_2(argv):
    code, _, err = run(*argv)
    assert code == 2
    assert "error" in err


def test_allow_large_override_is_accepted_by_parser():
    code, _, _ = run("sweep", "--from", "65", "--to", "65", "--allow-large", "--format", "json")
    assert code == 0


def test_ring_matches_fcpn(tmp_path):
    path = tmp_path / "fcpn2.txt"
    path.write_text(fcpn_presentation(2).to_text())
    code, out, _ = run("ring", str(path), "--cw-dim", "6", "--connectivity", "1", "--format", "json")
    assert code == 0
    ring_doc = ReportDocument.from_json(out)
    _, out2, _ = run("fcpn", "--n", "2", "--format", "json")
    fcpn_doc = ReportDocument.from_json(out2)
    assert ring_doc.math_fields() == fcpn_doc.math_fields()


def test_ring_unbounded_exit_1(tmp_path):
    path = tmp_path / "free.txt"
    path.write_text("gen x 2\ngen y 2\n")
    code, _, err = run("ring", str(path))
    assert code == 1
    assert "UnboundedAlgebra" in err


def test_ring_truncated(tmp_path):
    path = tmp_path / "free.txt"
    path.write_text("gen x 2\ngen y 2\n")
    code, out, _ = run("ring", str(path), "--max-degree", "6", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["space"]["mode"] == "algebra-only"
    assert data["cup"]["qualifier"] == "lower bound (truncated)"
    assert data["zcl"]["qualifier"] == "lower bound (truncated)"
    assert data["cat"] is None and data["tc"] is None
    code, out, _ = run("ring", str(path), "--max-degree", "6")
    assert "lower bound (truncated)" in out


def test_ring_parse_error_reports_position(tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("gen a 2\nrel a^2 + a\n")
    code, _, err = run("ring", str(path))
    assert code == 1
    assert f"{path}:2:5: InhomogeneousRelation" in err


def test_ring_missing_file(tmp_path):
    code, _, err = run("ring", str(tmp_path / "nope.txt"))
    assert code == 1


def test_ring_half_cw_data_is_usage_error(tmp_path):
    path = tmp_path / "r.txt"
    path.write_text("gen a 2\nrel a^3\n")
    assert run("ring", str(path), "--cw-dim", "4")[0] == 2


def test_sweep_rows():
    code, out, _ = run("sweep", "--from", "1", "--to", "4", "--format", "json")
    assert code == 0
    rows = [(r["n"], r["cup"], r["cat"], r["zcl"], r["tc"]) for r in json.loads(out)["rows"]]
    assert rows == [(1, 1, 2, 2, 3), (2, 3, 4, 6, 7), (3, 5, 6, 10, 11), (4, 7, 8, 14, 15)]


def test_sweep_single_row_matches_fcpn():
    _, out, _ = run("sweep", "--from", "2", "--to", "2", "--format", "json")
    row = json.loads(out)["rows"][0]
    _, out2, _ = run("fcpn", "--n", "2", "--format", "json")
    doc = json.loads(out2)
    assert (row["cup"], row["cat"], row["zcl"], row["tc"]) == (
        doc["cup"]["value"], doc["cat"]["exact"], doc["zcl"]["lower"], doc["tc"]["exact"])


def test_sweep_table_has_no_deviation():
    code, out, _ = run("sweep", "--from", "1", "--to", "3")
    assert code == 0 and "DEVIATION" not in out


@pytest.mark.parametrize("n, conf, prod", [(1, 3, 5), (2, 7, 9), (4, 15, 17)])
def test_compare(n, conf, prod):
    code, out, _ = run("compare", "--n", str(n), "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["configuration"]["tc"]["exact"] == conf
    assert data["product"]["tc"]["exact"] == prod
    assert data["tc_difference"] == 2
    _, table, _ = run("compare", "--n", str(n))
    assert f"= {conf}" in table and f"= {prod}" in table and "difference = 2" in table


@pytest.mark.parametrize("argv", [("fcpn", "--n", "3"), ("compare", "--n", "2"),
                                  ("sweep", "--from", "1", "--to", "3")])
def test_verify_passes(argv):
    code, _, err = run(*argv, "--verify")
    assert code == 0
    assert "FAILED" not in err and "ok" in err


def test_verify_ring(tmp_path):
    path = tmp_path / "r.txt"
    path.write_text("gen x 2\ngen y 4\nrel x^3\nrel y^2\n")
    code, _, err = run("ring", str(path), "--cw-dim", "8", "--connectivity", "1", "--verify")
    assert code == 0 and "FAILED" not in err


def _strip_timing(text):
    data = json.loads(text)
    data.pop("timing_ms")
    return json.dumps(data)


def test_json_deterministic_modulo_timing():
    a = run("fcpn", "--n", "3", "--format", "json")[1]
    b = run("fcpn", "--n", "3", "--format", "json")[1]
    assert _strip_timing(a) == _strip_timing(b)
    a_lines = [l for l in a.splitlines() if "timing_ms" not in l]
    b_lines = [l for l in b.splitlines() if "timing_ms" not in l]
    assert a_lines == b_lines


def test_json_round_trip():
    out = run("fcpn", "--n", "2", "--format", "json")[1]
    doc = ReportDocument.from_json(out)
    assert doc.to_json() == out.rstrip("\n")
    assert ReportDocument.from_json(doc.to_json()) == doc


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "lsbounds", "fcpn", "--n", "0"],
                          capture_output=True, text=True)
    assert proc.returncode == 2
