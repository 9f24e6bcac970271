import json
import subprocess
import sys
from concurrent.futures import ThreadPoolExecutor

import pytest

from horospherical import roots
from horospherical.cli import cmd_classify, main
from horospherical.classify import enumerate_special
from horospherical.report import (
    TABLE_COLUMNS,
    build_report,
    render_json,
    report_from_dict,
    report_to_dict,
)
from horospherical.horo import HoroPair
from horospherical.roots import SimpleType
from horospherical.selftest import SUITES


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_classify_counts(capsys):
    code, out, _ = run(["classify", "--max-rank", "3"], capsys)
    assert code == 0
    assert len(out.strip().splitlines()) == 2 + 9
    code, out, _ = run(["classify", "--max-rank", "2", "--json"], capsys)
    doc = json.loads(out)
    assert code == 0 and doc["max_rank"] == 2 and len(doc["records"]) == 3


@pytest.mark.parametrize("argv", [["classify", "--max-rank", "0"], ["classify", "--max-rank", "13"],
                                  ["inspect", "A", "4", "1", "9"], ["inspect", "D", "3", "1", "2"],
                                  ["inspect", "A", "4", "2", "2"], ["bogus"], []])
def test_invalid_input_exits_1(argv, capsys):
    code, _, err = run(argv, capsys)
    assert code == 1 and "error" in err


def test_inspect_g2(capsys):
    code, out, _ = run(["inspect", "G", "2", "2", "1", "--json"], capsys)
    d = json.loads(out)
    assert code == 0
    assert d["special"] and d["dimension"] == 7
    assert sorted(row["rho"] for row in d["picard"]) == [1, 2, 2, 3]
    assert [row["rho"] for row in d["picard"]] == [3, 2, 2, 1]
    assert d["homogeneous"] is False and d["aut"]["dim"] == 22


def test_inspect_not_special(capsys):
    code, out, _ = run(["inspect", "A", "4", "1", "3", "--json"], capsys)
    d = json.loads(out)
    assert code == 0 and d["special"] is False
    assert "picard" not in d and "aut" not in d
    code, out, _ = run(["inspect", "A", "4", "1", "3"], capsys)
    assert "special     no" in out


def test_inspect_spinor(capsys):
    code, out, _ = run(["inspect", "D", "5", "4", "5"], capsys)
    assert code == 0
    assert "homogeneous yes" in out and "spinor variety" in out and "dimension   15" in out


@pytest.mark.parametrize("rec", enumerate_special(8), ids=lambda r: str(r.pair))
def test_json_round_trip(rec):
    report = build_report(rec.pair)
    d = report_to_dict(report)
    assert report_from_dict(json.loads(render_json(d))) == report


def test_json_round_trip_non_special():
    report = build_report(HoroPair(SimpleType("B", 5), 1, 2))
    assert report_from_dict(json.loads(render_json(report_to_dict(report)))) == report


def test_table_and_json_agree():
    table = cmd_classify(8, False).splitlines()
    records = json.loads(cmd_classify(8, True))["records"]
    assert table[0].split() == list(TABLE_COLUMNS)
    rows = table[2:]
    assert len(rows) == len(records)
    for row, rec in zip(rows, records):
        cells = row.split()
        k = len(rec["families"])
        kind, alpha, beta, dim, homog, aut, amb = cells[k : k + 7]
        assert kind == f"{rec['type']}{rec['rank']}"
        assert (int(alpha), int(beta), int(dim)) == (rec["alpha"], rec["beta"], rec["dimension"])
        assert (homog == "yes") == rec["homogeneous"]
        assert int(aut) == rec["aut"]["dim"] and int(amb) == rec["ambient_dim"]
        assert [int(c.split("(")[0]) for c in cells[:k]] == [f["id"] for f in rec["families"]]


def test_output_is_reproducible():
    first = cmd_classify(8, True)
    assert cmd_classify(8, True) == first
    with ThreadPoolExecutor(max_workers=4) as pool:
        outs = list(pool.map(lambda _: cmd_classify(8, True), range(4)))
    assert all(o == first for o in outs)


def test_selftest_passes(capsys):
    code, out, _ = run(["selftest"], capsys)
    lines = out.strip().splitlines()
    assert code == 0
    assert len(SUITES) >= 6
    assert sum(line.startswith("PASS") for line in lines) == len(SUITES)


def test_selftest_detects_corrupted_cartan(monkeypatch, fresh_root_systems, capsys):
    original = roots.cartan_matrix

    def corrupted(t):
        c = original(t)
        if t.family in "BC":  # transpose: silently swaps B and C
            return tuple(zip(*c))
        return c

    monkeypatch.setattr(roots, "cartan_matrix", corrupted)
    code, out, _ = run(["selftest"], capsys)
    assert code == 2
    assert "FAIL  classification" in out


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "horospherical", "inspect", "B", "3", "1", "3"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0 and "dim Aut^0   30" in proc.stdout
