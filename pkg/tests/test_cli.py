import io
import json
import subprocess
import sys


from cubicspan.cli import run

FERMAT7 = "q=7^1; F=1,0,0,0,0,0,0,0,0,0,1,0,0,0,0,0,1,0,0,1"
CONE = "q=3^1; F=0,0,0,0,0,0,0,0,0,0,1,0,0,0,0,0,1,0,0,1"


def call(*argv):
    out = io.StringIO()
    code = run(list(argv), out)
    return code, out.getvalue()


def test_smooth_fermat():
    code, text = call("smooth", "--surface", FERMAT7)
    assert code == 0
    assert json.loads(text)["smooth"] is True


def test_strict_smooth_flag():
    code, text = call("smooth", "--surface", FERMAT7, "--strict-smooth")
    assert code == 0
    assert json.loads(text)["strict_smooth"] is True


def test_span_two_points():
    code, text = call("span", "--surface", FERMAT7, "--point", "1:6:0:0", "--point", "0:1:0:6")
    assert code == 0
    d = json.loads(text)
    assert d["size"] == 3
    assert "1:0:0:6" in d["members"]
    assert d["n_points"] == 99 and d["generates"] is False


def test_span_single_eckardt_point():
    code, text = call("span", "--surface", FERMAT7, "--point", "1:6:0:0")
    assert code == 0
    assert json.loads(text)["members"] == ["1:6:0:0"]


def test_lines_and_generators():
    code, text = call("lines", "--surface", FERMAT7)
    assert code == 0 and json.loads(text)["count"] == 27
    code, text = call("generators", "--surface", FERMAT7)
    assert code == 0 and json.loads(text)["min_size"] == 1


def test_classify_point():
    code, text = call("classify", "--surface", FERMAT7, "--point", "1:6:0:0")
    assert code == 0
    assert json.loads(text)["points"][0]["kind"] == "Eckardt"


def test_usage_errors():
    assert call("frobnicate")[0] == 2
    assert call("smooth", "--surface", "q=7; F=1,2")[0] == 2
    assert call("smooth")[0] == 2
    assert call("span", "--surface", FERMAT7, "--point", "1:0:0:0")[0] == 2
    assert call("span", "--surface", CONE, "--point", "0:0:0:1")[0] == 2
    assert call("verify-theorem")[0] == 2
    assert call("verify-theorem", "--q", "13")[0] == 2


def test_surface_file(tmp_path):
    f = tmp_path / "s.txt"
    f.write_text(f"# two surfaces\n{FERMAT7}\n{CONE}\n")
    code, text = call("smooth", "--in", str(f))
    assert code == 0
    assert [d["smooth"] for d in json.loads(text)] == [True, False]


def test_census_f3_table():
    code, text = call("census-f3", "--interpretation", "printed", "--format", "table")
    assert code == 0
    assert "total: 2187" in text
    assert "counterexamples: []" in text


def test_verify_theorem_json():
    code, text = call("verify-theorem", "--q", "4", "--samples", "5", "--seed", "1")
    assert code == 0
    d = json.loads(text)
    assert d["eligible"] == 5 and d["counterexamples"] == []


def test_module_entry_point():
    res = subprocess.run(
        [sys.executable, "-m", "cubicspan", "smooth", "--surface", FERMAT7],
        capture_output=True,
        text=True,
    )
    assert res.returncode == 0
    assert json.loads(res.stdout)["smooth"] is True
