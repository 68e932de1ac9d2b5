import contextlib
import io
import json
import subprocess
import sys

import pytest

from polyradon.cli import main


def run(*args):
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        code = main(list(args))
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def doc(corpus_dir):
    return lambda name: str(corpus_dir / f"{name}.json")


def test_check_exit_codes(doc):
    code, out, _ = run("check", doc("hexagon_a1_v2"))
    assert code == 0 and out.startswith("Radon")
    code, out, _ = run("check", doc("square"))
    assert code == 1 and "x = (1, 1)" in out and "y = (0, 1)" in out
    code, _, err = run("check", doc("invalid_five"))
    assert code == 2 and "OddVertexCount" in err
    assert run("check", "/nonexistent/file.json")[0] == 2


def test_check_json(doc):
    code, out, _ = run("--json", "check", "--oracle", doc("square"))
    rep = json.loads(out)
    assert code == 1 and rep["method"] == "oracle" and rep["witness"]["x"] == [1, 1]
    # global flags are also accepted after the subcommand
    code, out, _ = run("check", doc("regular_10"), "--json", "--eps", "1e-8")
    rep = json.loads(out)
    assert code == 0 and rep["eps_rel"] == 1e-8 and rep["mode"] == "float"


def test_ortho(doc):
    code, out, _ = run("--json", "ortho", doc("hexagon_a1_v2"), "--point", "0,2")
    rep = json.loads(out)
    assert code == 0 and not rep["degenerate"]
    rays = {tuple(p) for pair in rep["rays"] for p in pair}
    assert rays == {(1, -1), (-1, 1), (1, 1), (-1, -1)}
    code, out, _ = run("--json", "ortho", doc("hexagon_a1_v2"), "--point", "1,0")
    rep = json.loads(out)
    assert rep["degenerate"] and {tuple(p) for p in rep["rays"][0]} == {(0, 2), (0, -2)}
    code, out, _ = run("ortho", doc("hexagon_a1_v2"), "--point", "1,0")
    assert "degenerate" in out
    assert run("ortho", doc("square"), "--point", "0,0")[0] == 2
    assert run("ortho", doc("square"), "--point", "1")[0] == 2


def test_gen():
    code, out, _ = run("gen", "regular", "--vertices", "10")
    d = json.loads(out)
    assert code == 0 and d["mode"] == "float" and len(d["vertices"]) == 10
    code, out, _ = run("gen", "hexagon", "--alpha", "1/2", "--apex", "vertical")
    d = json.loads(out)
    assert d["mode"] == "exact"
    assert {tuple(v) for v in d["vertices"]} == {
        (1, "1/2"), (1, "-1/2"), (-1, "1/2"), (-1, "-1/2"), (0, 1), (0, -1)}
    assert run("gen", "regular", "--vertices", "7")[0] == 2
    assert run("gen", "hexagon", "--alpha", "1", "--apex-scale", "1")[0] == 2


def test_gen_then_check(tmp_path):
    code, out, _ = run("gen", "hexagon", "--alpha", "3", "--apex", "horizontal")
    path = tmp_path / "h.json"
    path.write_text(out)
    assert run("check", str(path))[0] == 0


def test_search(tmp_path):
    assert run("search", "--vertices", "8")[0] == 2
    code, out, _ = run("--json", "search", "--vertices", "10", "--budget", "0")
    assert code == 0 and json.loads(out)["found"] == []
    code, out, _ = run("--json", "search", "--vertices", "6", "--seed", "7", "--budget", "2",
                       "--workers", "1", "--out", str(tmp_path))
    res = json.loads(out)
    assert code == 0 and res["found"]
    for item in res["found"]:
        assert abs(item["apex_scale"] - 2) < 1e-6
        assert run("check", item["file"])[0] == 0


def test_render(doc, tmp_path):
    code, svg, _ = run("render", doc("hexagon_a1_v2"), "--show-kernels")
    assert code == 0 and svg.startswith("<?xml")
    # the kernel of the edge x = 1 is the y-axis, drawn at x = 240
    assert 'data-tvp="true" stroke="#228833" x1="240"' in svg
    code, svg, _ = run("render", doc("square"), "--show-kernels")
    assert svg.count("<circle") == 4
    assert 'data-tvp="true"' not in svg
    assert run("render", doc("invalid_five"))[0] == 2
    assert run("render", doc("square"), "-o", str(tmp_path / "missing" / "x.svg"))[0] == 2
    out = tmp_path / "c.svg"
    assert run("render", doc("hexagon_a1_v2"), "--show-cones", "-o", str(out))[0] == 0
    assert out.read_text().count("data-vertex") == 12


def test_module_entry_point(doc):
    proc = subprocess.run([sys.executable, "-m", "polyradon.cli", "check", doc("square")],
                          capture_output=True, text=True)
    assert proc.returncode == 1 and "NotRadon" in proc.stdout
