import io
import subprocess
import sys
from importlib import resources
from pathlib import Path

import pytest

from cyclicdna.cli import main
from cyclicdna.tables import table3_strands

GOLDEN = Path(__file__).parent / "golden"
DATA = resources.files("cyclicdna.data")


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out)
    return code, out.getvalue()


def spec_path(name):
    return str(DATA.joinpath(f"{name}.code"))


def test_factor():
    assert run("factor", "--n", "3") == (0, "(x+1)(x^2+x+1)\n")
    assert run("factor", "--n", "8") == (0, "(x+1)^8\n")
    assert run("factor", "--n", "0")[0] == 2


@pytest.mark.parametrize("argv", [
    [],
    ["nonsense"],
    ["factor"],
    ["factor", "--n", "3", "--bogus"],
    ["tables", "--which", "5"],
    ["dna", "-f", "x.code", "--layout", "zigzag"],
    ["enumerate", "-f", "/nonexistent/file.code"],
])
def test_usage_errors_exit_2(argv, capsys):
    assert main(argv, io.StringIO()) == 2
    assert capsys.readouterr().err


def test_cap_needs_acknowledgement():
    f = spec_path("table3")
    assert run("enumerate", "-f", f, "--cap", "21")[0] == 2
    assert run("enumerate", "-f", f, "--cap", "21", "--allow-large-cap")[0] == 0
    assert run("enumerate", "-f", f, "--cap", "3")[0] == 2


def test_enumerate_zero_code():
    code, out = run("enumerate", "-f", spec_path("zero"), "--no-header")
    assert code == 0 and out == "00\t00\t00\n"


def test_strict_build_rejects_and_lenient_accepts():
    f = spec_path("ex_n6_r1")
    assert run("build", "-f", f, "-o", "-")[0] == 2
    code, out = run("build", "-f", f, "-o", "-", "--lenient")
    assert code == 0 and "# lenient=1" in out
    code, out = run("enumerate", "-f", f, "--lenient")
    assert code == 0 and "words=64" in out


def test_tables_three_matches_printed_strands():
    code, out = run("tables", "--which", "3", "--no-header")
    lines = out.splitlines()
    assert code == 0 and lines[0] == "strand"
    assert lines[1:] == table3_strands()


def test_tables_are_deterministic():
    for k in ("1", "2", "3", "4"):
        assert run("tables", "--which", k) == run("tables", "--which", k)


def test_tables_header_names_the_table():
    _, out = run("tables", "--which", "1")
    assert out.startswith("# Table 1")
    _, out = run("tables", "--which", "1", "--no-header")
    assert not out.startswith("#")


def test_build_enumerate_check_round_trip(tmp_path, monkeypatch):
    monkeypatch.setenv("CYCLICDNA_OUTDIR", str(tmp_path))
    code, out = run("build", "-f", spec_path("table3"))
    handle = tmp_path / "table3.handle"
    assert code == 0 and out.strip() == str(handle)
    assert handle.read_text() == (GOLDEN / "table3.handle").read_text()
    _, out = run("enumerate", "-f", str(handle))
    assert out == (GOLDEN / "table3.enumerate.tsv").read_text()
    _, out = run("dna", "-f", str(handle))
    assert out == (GOLDEN / "table3.dna.txt").read_text()
    code, out = run("check", "-f", str(handle), "--d", "3")
    assert code == 1
    assert out == (GOLDEN / "table3.check.tsv").read_text()
    _, out = run("tables", "--which", "3")
    assert out == (GOLDEN / "table3.tables.tsv").read_text()


def test_check_strand_file(tmp_path):
    p = tmp_path / "s.txt"
    p.write_text("AAA\nAAT\n")
    code, out = run("check", "--strands", str(p), "--d", "3", "--constraints", "hamming", "--no-header")
    assert code == 1 and out == "hamming\tfail\tAAA\tAAT\n"
    p.write_text("AAA\nTTT\n")
    code, out = run("check", "--strands", str(p), "--d", "3", "--constraints", "hamming")
    assert code == 0
    assert run("check", "--strands", str(p), "--d", "3", "--constraints", "hamming,bogus")[0] == 2
    assert run("check", "--d", "3")[0] == 2
    p.write_text("AAA\nTT\n")
    assert run("check", "--strands", str(p), "--d", "1")[0] == 2


def test_image_and_dna_layouts():
    code, out = run("image", "-f", spec_path("table3"), "--no-header")
    lines = out.splitlines()
    assert code == 0 and len(lines) == 64 and lines[0] == "000000 000000 000000"
    _, out = run("dna", "-f", spec_path("table3"), "--layout", "codon", "--no-header")
    assert len(out.splitlines()) == 64
    assert run("image", "-f", spec_path("zero"))[0] == 2


def test_verify_exit_codes_and_formats():
    code, out = run("verify", "--scope", "crt", "--format", "tsv")
    assert code == 0
    assert out.splitlines()[0] == "tag\texpected\tcomputed\tverdict\tnote"
    assert "crt/inverse-printed" in out
    code, out = run("verify", "--split-table")
    assert code == 0 and len(out.splitlines()) == 65


def test_verify_reports_unlisted_mismatch(monkeypatch):
    import cyclicdna.verify as v

    monkeypatch.setattr(v, "load_allowlist", lambda: frozenset())
    assert run("verify", "--scope", "crt")[0] == 1


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "cyclicdna", "factor", "--n", "6"],
                         capture_output=True, text=True, check=False)
    assert res.returncode == 0 and res.stdout == "(x+1)^2(x^2+x+1)^2\n"
