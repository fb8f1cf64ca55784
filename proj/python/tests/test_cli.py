import json
import os
import subprocess

import pytest

CLI = os.environ.get("CUBECAT_CLI")
pytestmark = pytest.mark.skipif(not CLI, reason="CUBECAT_CLI not set")


def run(*args, stdin=None):
    return subprocess.run([CLI, *args], input=stdin, capture_output=True, text=True)


def test_build_round_trip():
    built = run("build", "--kind", "twisted", "--n", "3")
    assert built.returncode == 0
    again = run("export", "--in", "-", "--out", "json", stdin=built.stdout)
    assert again.returncode == 0
    assert again.stdout == built.stdout
    assert json.loads(built.stdout)["dimension"] == 3


def test_output_is_stable():
    first = run("check", "--suite", "twisted", "--max-dim", "2").stdout
    second = run("check", "--suite", "twisted", "--max-dim", "2").stdout
    assert first == second
    assert run("homs", "--cat", "twgraphdim", "2", "2").stdout == run("homs", "--cat", "twgraphdim", "2", "2").stdout


def test_dot_export():
    out = run("build", "--kind", "twisted", "--n", "2", "--out", "dot").stdout
    for edge in ('"00" -> "10"', '"01" -> "11"', '"01" -> "00"', '"10" -> "11"'):
        assert edge in out
    assert '"00" -> "00"' not in out


def test_exit_codes():
    assert run("check", "--suite", "iso", "--max-dim", "3").returncode == 0
    assert run("build", "--kind", "standard", "--n", "9").returncode == 2
    assert run("build", "--kind", "cubical", "--n", "1").returncode == 2
    assert run("frobnicate").returncode == 2
    assert run("homs", "--cat", "graphcube", "4", "1").returncode == 3
    bad = run("compose", "--cat", "ternary", "0*x", "1*")
    assert bad.returncode == 2
    assert "^" in bad.stderr


def test_compose_and_tables():
    assert run("compose", "--cat", "ternary", "0**", "1*").stdout == "00*\n"
    assert run("compose", "--cat", "untwisted", "0**", "1*").stdout == "01*\n"
    table = run("table", "--cat", "ternary", "--max-dim", "2", "--out", "json")
    assert json.loads(table.stdout)["rows"][1] == [1, 3, 8]
    assert len(run("homs", "--cat", "bchop", "1", "1").stdout.splitlines()) == 3
