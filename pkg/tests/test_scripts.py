import subprocess
import sys
from pathlib import Path

import pytest

SCRIPTS = Path(__file__).resolve().parent.parent / "scripts"


def run_script(name, *args):
    return subprocess.run([sys.executable, str(SCRIPTS / name), *args], capture_output=True, text=True)


def test_run_sweep_script():
    res = run_script("run_sweep.py", "--orders", "3", "4", "--machine")
    assert res.returncode == 0, res.stderr
    assert "record=summary graphs=8 ok=1" in res.stdout


def test_probe_script():
    res = run_script("edge_vs_vertex_probe.py", "--orders", "3", "4")
    assert res.returncode == 0, res.stderr
    assert "FINDING" not in res.stdout
    assert "difference histogram" in res.stdout


def test_multipartite_table_script():
    res = run_script("multipartite_table.py", "--max-total", "5")
    assert res.returncode == 0, res.stderr
    assert "MISMATCH" not in res.stdout
    assert len(res.stdout.splitlines()) > 5


def test_export_order7_corpus(tmp_path):
    pytest.importorskip("networkx")
    out = tmp_path / "o7.g6"
    res = run_script("export_order7_corpus.py", str(out))
    assert res.returncode == 0, res.stderr
    lines = [x for x in out.read_text().splitlines() if not x.startswith("#")]
    assert len(lines) == 853 and len(set(lines)) == 853
