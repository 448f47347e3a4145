import json
import os
import re
import subprocess
import sys
from pathlib import Path

import pytest

jsonschema = pytest.importorskip("jsonschema")

SCHEMA_DIR = Path(__file__).resolve().parents[1] / "src" / "quadspec" / "schemas"

C4_EDGES = "4 4\n0 1\n1 2\n2 3\n3 0\n"


def run_cli(args, stdin=None, env_extra=None):
    env = dict(os.environ)
    if env_extra:
        env.update(env_extra)
    return subprocess.run(
        [sys.executable, "-m", "quadspec", *args],
        input=stdin, capture_output=True, text=True, env=env)


def load_schema(name):
    with open(SCHEMA_DIR / f"{name}.schema.json") as fh:
        return json.load(fh)


def validate(report, payload_schema):
    jsonschema.validate(report, load_schema("envelope"))
    jsonschema.validate(report["payload"], load_schema(payload_schema))


def strip_elapsed(text):
    return re.sub(r'"elapsed_ms": \d+', '"elapsed_ms": 0', text)


@pytest.fixture
def c4_file(tmp_path):
    p = tmp_path / "c4.edges"
    p.write_text(C4_EDGES)
    return str(p)


def test_count_c4(c4_file):
    res = run_cli(["count", "--in", c4_file])
    assert res.returncode == 0
    report = json.loads(res.stdout)
    validate(report, "count")
    payload = report["payload"]
    assert payload["count_codegree"] == 1
    assert payload["count_walks"] == 1
    assert payload["count_enumeration"] == 1
    assert abs(payload["count_spectral"] - 1) < 1e-6
    assert payload["agreement"]


def test_construct_pipe_count():
    g6 = run_cli(["construct", "clique_plus_pendants", "16"]).stdout
    res = run_cli(["count"], stdin=g6)
    assert res.returncode == 0
    assert json.loads(res.stdout)["payload"]["count_codegree"] == 15


def test_construct_edgelist_emit():
    res = run_cli(["construct", "complete_bipartite", "2", "3",
                   "--emit", "edgelist"])
    assert res.returncode == 0
    assert res.stdout.splitlines()[0] == "5 6"


def test_spectrum(c4_file):
    res = run_cli(["spectrum", "--in", c4_file, "--vector"])
    report = json.loads(res.stdout)
    validate(report, "spectrum")
    assert abs(report["payload"]["lambda"] - 2.0) < 1e-9
    vals = report["payload"]["eigenvalues"]
    assert len(vals) == 4 and abs(vals[0] - 2) < 1e-9 and abs(vals[-1] + 2) < 1e-9
    assert len(report["payload"]["vector"]) == 4


def test_verify_star_equality(tmp_path):
    star = run_cli(["construct", "star", "7", "--emit", "edgelist"]).stdout
    p = tmp_path / "star7.edges"
    p.write_text(star)
    res = run_cli(["verify", "degree_square_bound", "--in", str(p)])
    assert res.returncode == 0
    report = json.loads(res.stdout)
    validate(report, "verify")
    assert report["payload"]["pass"]
    assert report["payload"]["slack"] == 0.0
    assert report["payload"]["equality_case"] is True


def test_verify_out_of_hypothesis_is_input_error(c4_file):
    res = run_cli(["verify", "thm11_c4_existence", "--in", c4_file])
    assert res.returncode == 2
    assert "m >= 10" in res.stderr


def test_verify_interlacing_subset(c4_file):
    res = run_cli(["verify", "interlacing", "--in", c4_file,
                   "--subset", "0,1,2"])
    assert res.returncode == 0
    assert json.loads(res.stdout)["payload"]["pass"]


def test_dsee_trace_csv(c4_file, tmp_path):
    csv_path = tmp_path / "trace.csv"
    res = run_cli(["dsee", "--in", c4_file, "--trace-csv", str(csv_path)])
    assert res.returncode == 0
    report = json.loads(res.stdout)
    validate(report, "dsee")
    assert report["payload"]["k"] == 0
    assert report["payload"]["stop_reason"] == "no_small_edge"
    header = csv_path.read_text().splitlines()[0]
    assert header == "i,u,v,product,threshold,lambda_before,lambda_after,claim8_bound"


def test_sweep_small(c4_file):
    res = run_cli(["sweep", "--n-max", "4"])
    assert res.returncode == 0
    report = json.loads(res.stdout)
    validate(report, "sweep")
    assert report["payload"]["universe_size"] == 11
    assert report["payload"]["failures"] == []


def test_sweep_stream_stdin():
    stream = "C~\nDto\n"
    res = run_cli(["sweep", "--stdin", "--claims", "degree_square_bound"],
                  stdin=stream)
    assert res.returncode == 0
    payload = json.loads(res.stdout)["payload"]
    assert payload["source"] == "stream"
    assert payload["universe_size"] == 2


def test_fmin_exhaustive():
    res = run_cli(["fmin", "--m", "6", "--method", "exhaustive"])
    assert res.returncode == 0
    report = json.loads(res.stdout)
    validate(report, "fmin")
    assert report["payload"]["method"] == "exhaustive"
    assert report["payload"]["f_min"] == 0


def test_fmin_local_determinism_and_workers():
    args = ["fmin", "--m", "16", "--method", "local",
            "--iterations", "60", "--restarts", "2", "--seed", "5"]
    a = run_cli(args + ["--workers", "1"])
    b = run_cli(args + ["--workers", "2"])
    c = run_cli(args + ["--workers", "1"])
    assert a.returncode == b.returncode == c.returncode == 0
    assert strip_elapsed(a.stdout) == strip_elapsed(b.stdout) == strip_elapsed(c.stdout)
    validate(json.loads(a.stdout), "fmin")


def test_bounds_csv():
    res = run_cli(["bounds", "--m-values", "16,25",
                   "--iterations", "60", "--restarts", "2"])
    assert res.returncode == 0
    lines = res.stdout.strip().splitlines()
    assert lines[0].startswith("m,method,f_est,m_over_32")
    row16 = lines[1].split(",")
    assert row16[0] == "16" and row16[3] == "1/2" and row16[5] == "15/1"


def test_usage_errors():
    assert run_cli(["verify", "nonsense_claim", "--in", "x"]).returncode == 2
    assert run_cli(["count", "--in", "/nonexistent/file"]).returncode == 2
    res = run_cli(["count"], stdin="not a graph\n")
    assert res.returncode == 2
    res = run_cli(["sweep", "--n-max", "9"])
    assert res.returncode == 2


def test_nonconvergence_exit_code(tmp_path):
    p = tmp_path / "p4.edges"
    p.write_text("4 3\n0 1\n1 2\n2 3\n")
    res = run_cli(["spectrum", "--in", str(p), "--max-iter", "1"])
    assert res.returncode == 3
    assert "residual" in res.stderr


def test_epsilon_env_override(c4_file):
    res = run_cli(["count", "--in", c4_file], env_extra={"QS_EPSILON": "1e-7"})
    assert json.loads(res.stdout)["config"]["epsilon"] == 1e-7
    res = run_cli(["count", "--in", c4_file, "--epsilon", "1e-6"],
                  env_extra={"QS_EPSILON": "1e-7"})
    assert json.loads(res.stdout)["config"]["epsilon"] == 1e-6


def test_verify_mode_flag_reaches_fm_claims():
    # K_{2,3} has spectral radius exactly sqrt(6): qualifies non-strictly,
    # out of hypothesis strictly
    g6 = run_cli(["construct", "complete_bipartite", "2", "3"]).stdout
    res = run_cli(["verify", "fm_lower_m32"], stdin=g6)
    assert res.returncode == 0
    res = run_cli(["verify", "fm_lower_m32", "--mode", "strict"], stdin=g6)
    assert res.returncode == 2
    assert "strict" in res.stderr


def test_graph6_input_autodetect(c4_file):
    res = run_cli(["count"], stdin="C~\n")
    assert json.loads(res.stdout)["payload"]["count_codegree"] == 3
    res = run_cli(["count", "--format", "graph6"], stdin="C~\n")
    assert json.loads(res.stdout)["payload"]["count_codegree"] == 3


def test_json_numbers_finite(c4_file):
    # allow_nan=False in the serializer; a successful parse plus a scan
    # of the raw text guards against NaN/Infinity leaking into reports
    res = run_cli(["spectrum", "--in", c4_file])
    assert res.returncode == 0
    assert "NaN" not in res.stdout and "Infinity" not in res.stdout
    json.loads(res.stdout)
