import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from cevians.cli import JobConfig, main, run

GOLDEN = Path(__file__).parent / "golden"


def call(*argv):
    out = io.StringIO()
    status = main(list(argv), stdout=out)
    return status, out.getvalue()


@pytest.mark.parametrize("argv, golden", [
    (["routh", "--lambda", "2", "--mu", "2", "--nu", "2"], "routh_2_2_2.json"),
    (["hexagon", "--lambda", "1"], "hexagon_1.json"),
    (["parallelogram", "--kappa", "1", "--lambda", "1", "--mu", "1", "--nu", "1"], "parallelogram_1_1_1_1.json"),
    (["faces", "--sides", "1,1", "1,1", "1,1"], "faces_medians.json"),
])
def test_golden(argv, golden):
    status, text = call(*argv)
    assert status == 0
    assert text == (GOLDEN / golden).read_text()


def test_golden_values():
    assert json.loads((GOLDEN / "routh_2_2_2.json").read_text()) == {"ratio": "1/7"}
    assert json.loads((GOLDEN / "hexagon_1.json").read_text()) == {"ratio": "1/10"}
    par = json.loads((GOLDEN / "parallelogram_1_1_1_1.json").read_text())
    assert par == {"ratio": "1/5", "r1": "1/5", "r2": "1/5"}


def test_module_entry_point_is_byte_identical():
    cmd = [sys.executable, "-m", "cevians", "routh", "--lambda", "2", "--mu", "2", "--nu", "2"]
    runs = [subprocess.run(cmd, capture_output=True, check=True).stdout for _ in range(2)]
    assert runs[0] == runs[1] == (GOLDEN / "routh_2_2_2.json").read_bytes()


def test_out_option(tmp_path):
    target = tmp_path / "r.json"
    status, text = call("--out", str(target), "hexagon", "--lambda", "1")
    assert status == 0 and text == ""
    assert target.read_text() == (GOLDEN / "hexagon_1.json").read_text()


@pytest.mark.parametrize("argv, error, code", [
    (["routh", "--lambda", "2/0", "--mu", "1", "--nu", "1"], "ZeroDenominator", 12),
    (["routh", "--lambda", "1.5", "--mu", "1", "--nu", "1"], "MalformedNumber", 11),
    (["routh", "--lambda", "1"], "ConfigParseError", 2),
    (["routh", "--lambda", "-1", "--mu", "1", "--nu", "1"], "InvalidConfig", 23),
    (["bogus"], "ConfigParseError", 2),
    ([], "ConfigParseError", 2),
    (["hexagon", "--lambda", "0"], "InvalidConfig", 23),
    (["formula", "morgan", "--n", "4"], "BadParity", 20),
    (["faces", "--sides", "1,x", "1", "1"], "MalformedNumber", 11),
    (["polygon", "--sides", "1,1", "1,1", "1,1", "--pair", "1:2 x 2:1",
      "--pair", "1:1 x 3:1", "--pair", "2:1 x 3:1"], "IndexOutOfRange", 18),
    (["polygon", "--sides", "1,1", "1,1", "1,1", "--pair", "1-1 2-1"], "ConfigParseError", 2),
    (["polygon", "--sides", "1,1", "1,1", "1,1", "--pair", "1:1 x 2:1"], "TooFewVertices", 17),
    (["polygon", "--sides", "1,1", "1,1", "1,1", "--pair", "1:1 x 1:1",
      "--pair", "1:1 x 2:1", "--pair", "2:1 x 3:1"], "CoincidentLines", 15),
    (["run", "--config", "/nonexistent/job.json"], "ConfigParseError", 2),
    (["verify", "--figure", "routh", "--lambda", "1", "--mu", "1", "--nu", "1", "--count", "0"],
     "ConfigParseError", 2),
])
def test_errors_are_reported_not_raised(argv, error, code):
    status, text = call(*argv)
    assert status == code
    obj = json.loads(text)
    assert obj["error"] == error
    assert "Traceback" not in text


def test_error_codes_are_distinct():
    from cevians import errors
    codes = [cls.exit_code for cls in vars(errors).values()
             if isinstance(cls, type) and issubclass(cls, errors.GeometryError) and cls is not errors.GeometryError]
    assert len(codes) == len(set(codes))


def test_bad_config_files(tmp_path):
    for content, error in [("{", "ConfigParseError"),
                           ('{"figure": "hexagon", "divisions": []}', "ConfigParseError"),
                           ('{"figure": "triangle", "divisions": [[1.5], [1], [1]]}', "ConfigParseError"),
                           ('{"figure": "triangle", "divisions": [["1"], ["1"]]}', "ConfigParseError"),
                           ('{"figure": "parallelogram", "divisions": {"kappa": "1"}}', "ConfigParseError")]:
        path = tmp_path / "job.json"
        path.write_text(content)
        status, text = call("run", "--config", str(path))
        assert status != 0
        assert json.loads(text)["error"] == error


def test_polygon_hexagon():
    pairs = ["1:1 x 3:2", "2:1 x 3:2", "2:1 × 1:2", "3:1 x 1:2", "2:2 x 3:1", "1:1 x 2:2"]
    argv = ["polygon", "--sides", "1,1,1", "1,1,1", "1,1,1"]
    for p in pairs:
        argv += ["--pair", p]
    status, text = call(*argv)
    assert status == 0
    assert json.loads(text)["ratio"] == "1/10"


def test_formula_command():
    assert json.loads(call("formula", "morgan", "--n", "5")[1]) == {"name": "morgan", "ratio": "1/28"}
    assert json.loads(call("formula", "de_villiers", "--p", "3")[1])["ratio"] == "2/5"
    assert json.loads(call("formula", "eq1", "--kappa", "1", "--lambda", "2", "--mu", "3", "--nu", "4")[1])["ratio"] == \
        json.loads(call("parallelogram", "--kappa", "1", "--lambda", "2", "--mu", "3", "--nu", "4")[1])["ratio"]


def test_verify_command():
    status, text = call("verify", "--figure", "routh", "--lambda", "2", "--mu", "2", "--nu", "2",
                        "--count", "3", "--seed", "4")
    assert status == 0
    report = json.loads(text)
    assert report["ok"] and report["engine"] == "1/7"
    assert [e["value"] for e in report["embeddings"]] == ["1/7"] * 3
    assert text == call("verify", "--figure", "routh", "--lambda", "2", "--mu", "2", "--nu", "2",
                        "--count", "3", "--seed", "4")[1]


def test_run_jobs(tmp_path):
    jobs = {
        "faces": ({"figure": "triangle", "divisions": [["1", "1", "1"]] * 3, "query": "faces"}, None),
        "closed_routh": ({"figure": "triangle", "divisions": [["2", "1"]] * 3,
                          "query": {"type": "closed_form", "name": "routh"}}, "1/7"),
        "closed_hex": ({"figure": "triangle", "divisions": [["1", "1", "1"]] * 3,
                        "query": {"type": "closed_form", "name": "hexagon"}}, "1/10"),
        "eq1": ({"figure": "parallelogram", "divisions": {"kappa": "1", "lambda": "1", "mu": "1", "nu": "1"},
                 "query": {"type": "closed_form", "name": "eq1"}}, "1/5"),
        "ratio": ({"figure": "parallelogram", "divisions": ["2", "2", "2", "2"], "query": "ratio"}, "1/13"),
        "morgan": ({"figure": "triangle", "divisions": [["1"]] * 3,
                    "query": {"type": "closed_form", "name": "morgan", "n": 7}}, "1/55"),
    }
    for name, (data, expected) in jobs.items():
        out = io.StringIO()
        assert run(JobConfig.from_json(data), out) == 0, name
        result = json.loads(out.getvalue())
        if expected:
            assert result["ratio"] == expected, name
    out = io.StringIO()
    run(JobConfig.from_json(jobs["faces"][0]), out)
    faces = json.loads(out.getvalue())
    assert faces["total"] == "1"
    assert sorted(f["ratio"] for f in faces["faces"]).count("1/10") == 1


def test_run_verify_job():
    job = JobConfig.from_json({"figure": "triangle", "divisions": [["1", "2"], ["3", "1"], ["1", "1", "1"]],
                               "query": {"type": "verify", "count": 2, "seed": 9}})
    out = io.StringIO()
    assert run(job, out) == 0
    assert json.loads(out.getvalue())["ok"]


def svg_call(tmp_path, name, *argv):
    path = tmp_path / name
    status, text = call("svg", *argv, "--svg-out", str(path))
    assert status == 0, text
    return path.read_bytes()


def test_svg_hexagon(tmp_path):
    data = svg_call(tmp_path, "h.svg", "--figure", "hexagon", "--lambda", "1").decode()
    assert data.count('class="cevian"') == 6
    assert data.count('class="highlight"') == 1
    hexagon = data.split('class="highlight" points="')[1].split('"')[0]
    assert len(hexagon.split()) == 6
    assert data.startswith("<?xml") and "<svg" in data and data.rstrip().endswith("</svg>")


def test_svg_routh(tmp_path):
    data = svg_call(tmp_path, "r.svg", "--figure", "routh", "--lambda", "2", "--mu", "2", "--nu", "2").decode()
    assert data.count('class="cevian"') == 3
    tri = data.split('class="highlight" points="')[1].split('"')[0]
    assert len(tri.split()) == 3


def test_svg_parallelogram_and_triangle(tmp_path):
    data = svg_call(tmp_path, "p.svg", "--figure", "parallelogram",
                    "--kappa", "1", "--lambda", "2", "--mu", "3", "--nu", "4").decode()
    assert data.count('class="cevian"') == 4
    data = svg_call(tmp_path, "t.svg", "--figure", "triangle", "--sides", "1,1,1,1", "1,2", "3",
                    "--pair", "1:1 x 2:1", "--pair", "2:1 x 1:3", "--pair", "1:3 x 1:1").decode()
    assert data.count('class="cevian"') == 4


def test_svg_is_byte_identical(tmp_path):
    a = svg_call(tmp_path, "a.svg", "--figure", "hexagon", "--lambda", "1")
    b = svg_call(tmp_path, "b.svg", "--figure", "hexagon", "--lambda", "1")
    assert a == b


def test_svg_unwritable(tmp_path):
    status, text = call("svg", "--figure", "hexagon", "--lambda", "1",
                        "--svg-out", str(tmp_path / "missing" / "h.svg"))
    assert status == 24
    assert json.loads(text)["error"] == "IoError"
