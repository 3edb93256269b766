import io
import subprocess
import sys

import pytest

from finspace.cli import dispatch
from finspace.fixtures import FIG3_X
from finspace.qc import is_qc_reducible
from finspace.textio import parse_complex, parse_space, serialize_space

from conftest import QC_VARIANT


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = dispatch(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def variant_file(tmp_path):
    path = tmp_path / "variant.txt"
    path.write_text(serialize_space(QC_VARIANT))
    return str(path)


def test_homology_after_removal():
    code, out, _ = run("homology", "--fixture", "FIG4_X", "--remove", "a,d")
    assert code == 0
    assert out.splitlines()[0] == "H: Z, 0, Z"


def test_qc_without_candidates():
    code, out, _ = run("qc", "--fixture", "FIG3_X")
    assert code == 0
    assert "no candidates" in out
    assert "t1 t2:" in out and "F/F/F" in out


def test_qc_pair(variant_file):
    code, out, _ = run("qc", variant_file, "--pair", "a", "b")
    assert code == 0
    assert "reduced: a b -> rel(a,b)" in out


def test_qc_bad_pair():
    code, _, err = run("qc", "--fixture", "FIG3_X", "--pair", "t1", "t2")
    assert code == 1 and err.startswith("error:")


def test_whitehead_variant(variant_file):
    code, out, _ = run("whitehead", variant_file, "--remove", "a")
    assert code == 0
    assert "conclusion: CONFIRMED" in out
    assert "ASPHERICAL" in out


def test_whitehead_fig2_x():
    code, out, _ = run("whitehead", "--fixture", "FIG2_X", "--remove", "a")
    assert code == 0
    assert "X homotopically trivial: NO" in out
    assert "conclusion: NOT_APPLICABLE" in out


def test_whitehead_needs_a_point():
    code, _, err = run("whitehead", "--fixture", "FIG2_X")
    assert code == 1 and "--remove" in err


def test_aspherical_fixtures():
    assert "verdict: NON_ASPHERICAL" in run("aspherical", "--fixture", "FIG4_X")[1]
    assert "verdict: ASPHERICAL" in run("aspherical", "--fixture", "FIG5_X")[1]


def test_strong_aspherical():
    code, out, _ = run("strong-aspherical", "--fixture", "FIG4_X")
    assert code == 0 and "NOT_SA_EXHAUSTED" in out
    code, out, _ = run("strong-aspherical", "--fixture", "FIG5_X")
    assert code == 0 and "found" in out


def test_strong_aspherical_complex(tmp_path):
    path = tmp_path / "k.txt"
    path.write_text("a b c\nb c d\n")
    code, out, _ = run("strong-aspherical", str(path), "--complex")
    assert code == 0 and "verdict: STRONG_ASPHERICAL" in out


def test_collapse():
    code, out, _ = run("collapse", "--fixture", "FIG3_X")
    assert code == 0 and out.startswith("collapsible: found")
    code, out, _ = run("collapse", "--fixture", "S1_MIN")
    assert code == 0 and "NOT_COLLAPSIBLE_EXHAUSTED" in out


def test_collapse_complex(tmp_path):
    path = tmp_path / "k.txt"
    path.write_text("a b c\n")
    code, out, _ = run("collapse", str(path), "--complex", "--dim", "0")
    assert code == 0 and "collapse to dimension 0" in out


def test_budget_exhaustion_gives_exit_two():
    code, out, _ = run("collapse", "--fixture", "FIG3_X", "--budget", "1")
    assert code == 2 and "UNKNOWN" in out


def test_core_and_info():
    code, out, _ = run("core", "--fixture", "FIG1_X")
    assert code == 0 and "contractible: yes" in out
    code, out, _ = run("info", "--fixture", "FIG2_X")
    assert code == 0 and "points: 10" in out and "height: 2" in out


def test_pi1():
    code, out, _ = run("pi1", "--fixture", "FIG4_X", "--remove", "a,d")
    assert code == 0 and "trivial: proved" in out
    code, out, _ = run("pi1", "--fixture", "S1_MIN")
    assert code == 0 and "free of rank 1" in out


def test_order_complex_and_back():
    code, out, _ = run("order-complex", "--fixture", "FIG1_X")
    assert code == 0
    assert len(parse_complex(out).facets) == 6


def test_face_poset_and_barycentric(tmp_path):
    path = tmp_path / "k.txt"
    path.write_text("a b c\n")
    code, out, _ = run("face-poset", str(path))
    assert code == 0 and len(parse_space(out)) == 7
    code, out, _ = run("barycentric", str(path))
    assert code == 0 and len(parse_complex(out).facets) == 6


def test_replay(tmp_path, variant_file):
    trace, _ = is_qc_reducible(QC_VARIANT)
    tpath = tmp_path / "trace.txt"
    tpath.write_text(trace.to_text())
    code, out, _ = run("replay", variant_file, "--trace", str(tpath))
    assert code == 0 and "replayed 2 moves: 8 -> 6 points" in out


def test_replay_invalid(tmp_path):
    tpath = tmp_path / "trace.txt"
    tpath.write_text("BEAT_DOWN t1 @10\n")
    code, _, err = run("replay", "--fixture", "FIG3_X", "--trace", str(tpath))
    assert code == 1 and err


def test_export_dot():
    code, out, _ = run("export-dot", "--fixture", "FIG3_X")
    assert code == 0 and out.count("->") == len(FIG3_X.covers)


def test_fixture_listing_and_print():
    code, out, _ = run("fixture")
    assert code == 0 and "FIG2_X" in out.split()
    code, out, _ = run("fixture", "FIG3_X")
    assert code == 0 and parse_space(out) == FIG3_X


def test_errors():
    assert run("info")[0] == 1
    assert run("info", "--fixture", "NOPE")[0] == 1
    assert run("info", "/does/not/exist")[0] == 1
    assert run("bogus")[0] == 1


def test_parse_error_exit(tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("a > b\nb > a\n")
    code, _, err = run("info", str(path))
    assert code == 1 and "error" in err


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "finspace", "homology", "--fixture", "S2_MIN"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[0] == "H: Z, 0, Z"
