import io
import json
import subprocess
import sys

import pytest

from kcritical.cli import main
from kcritical.families import build_parts
from kcritical.graph import complete
from kcritical.graph6 import graph6_str

HUB = graph6_str(build_parts(2, [3, 1, 1]))
K2 = graph6_str(complete(2))


def run(*argv, stdin=""):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), stdout=out, stderr=err, stdin=io.StringIO(stdin))
    return code, out.getvalue(), err.getvalue()


def records(text):
    return [json.loads(ln) for ln in text.splitlines()]


def test_factor_check():
    code, out, _ = run("factor", "check", "-g", K2, "-b", "1")
    assert code == 0 and records(out)[0]["hasFactor"] is True
    code, out, _ = run("factor", "check", "-g", graph6_str(complete(3)), "-b", "1")
    assert code == 0 and records(out)[0]["hasFactor"] is False


def test_critical_both_on_hub_graph():
    code, out, _ = run("critical", "check", "-g", HUB, "-b", "1", "-k", "1", "--method", "both")
    rec = records(out)[0]
    assert code == 0
    assert rec["criterion"] is False and rec["direct"] is False and rec["agree"] is True
    assert rec["certificate"]["witness"] == [0, 1]


def test_stdin_and_file(tmp_path):
    code, out, _ = run("critical", "check", "-g", "-", "-b", "1", "-k", "1", stdin=f"{HUB}\n{K2}4\n")
    assert code == 2  # the second line is malformed
    path = tmp_path / "in.g6"
    path.write_text(f"{HUB}\n{graph6_str(complete(5))}\n")
    code, out, _ = run("critical", "check", "--file", str(path), "-b", "1", "-k", "1")
    assert code == 0 and [r["criterion"] for r in records(out)] == [False, True]


def test_sources_conflict():
    code, _, err = run("critical", "check", "-g", HUB, "--family", "star", "-b", "1", "-k", "1")
    assert code == 2 and "exactly one" in err
    code, _, _ = run("critical", "check", "-b", "1", "-k", "1")
    assert code == 2


def test_usage_and_parameter_errors():
    assert run()[0] == 2
    assert run("bogus")[0] == 2
    assert run("critical", "check", "-g", HUB, "-b", "2", "-k", "1")[0] == 2
    assert run("verify", "thm11", "--b", "1", "--k", "1", "--delta", "2", "--n", "13")[0] == 2


def test_capacity_error_and_override(monkeypatch):
    big = graph6_str(complete(22))
    assert run("critical", "check", "-g", big, "-b", "1", "-k", "1")[0] == 3
    monkeypatch.setenv("OVERRIDE_CAPS", "13")
    code, out, err = run("factor", "check", "-g", graph6_str(complete(13)), "-b", "1")
    assert code == 0 and "warning" in err and records(out)[0]["hasFactor"] is False


def test_extremal_build_families():
    code, out, _ = run("extremal", "build", "--family", "star", "--n", "13", "--b", "1", "--k", "1", "--delta", "2")
    assert code == 0 and records(out)[0]["e"] == 59
    code, out, _ = run("extremal", "build", "--family", "G3", "--n", "13", "-b", "1", "-k", "1", "--s", "2", "--delta", "3")
    assert records(out)[0]["graph6"] == graph6_str(build_parts(2, [7, 2, 2]))
    code, out, _ = run("extremal", "build", "--family", "cluster", "--n", "10", "--s", "2", "--t", "3", "--p", "2")
    assert records(out)[0]["e"] == 25
    code, out, _ = run("extremal", "build", "--family", "parts", "--s", "2", "--parts", "3,1,1")
    assert records(out)[0]["graph6"] == HUB
    assert run("extremal", "build", "--family", "star", "--n", "13")[0] == 2


def test_spectral_commands():
    code, out, _ = run("spectral", "radius", "-g", graph6_str(complete(5)))
    assert code == 0 and abs(records(out)[0]["rho"] - 4) < 1e-10
    code, out, _ = run("spectral", "quotient", "--cubic", "Bstar", "--n", "13", "--b", "1", "--k", "1", "--delta", "2")
    rec = records(out)[0]
    assert code == 0 and rec["coeffs"] == [1, -9, -14, 32] and rec["matchesGraph"]
    code, out, _ = run("spectral", "quotient", "-g", HUB, "--partition", "0,1/2,3,4/5,6")
    assert records(out)[0]["equitable"] is True


def test_graph6_roundtrip(tmp_path):
    path = tmp_path / "c.g6"
    path.write_text("D?{\nA_\n@\n")
    code, out, _ = run("graph6", "roundtrip", "--file", str(path))
    assert code == 0 and records(out)[0] == {"byteExact": 3, "lines": 3}


def test_verify_sweep_and_csv(tmp_path):
    out_file = tmp_path / "v.jsonl"
    code, out, _ = run("verify", "thm11", "--b", "1", "--k", "1", "--delta", "2", "--n", "13",
                       "--samples", "15", "--seed", "42", "--jsonl", str(out_file))
    rec = records(out)[0]
    assert code == 0 and rec["COUNTEREXAMPLE"] == 0 and rec["tightness"] == "extremal-equality"
    assert len(out_file.read_text().splitlines()) == 15
    code, out, _ = run("verify", "thm12", "--b", "1", "--k", "1", "--delta", "2", "--n", "11",
                       "--samples", "5", "--seed", "1", "--format", "csv")
    assert code == 0 and out.splitlines()[1].startswith("spectral,1,1,2,11,5,")


def test_verify_below_threshold_is_parameter_error():
    code, _, _ = run("verify", "thm11", "--b", "1", "--k", "1", "--delta", "2", "--n", "11",
                     "--samples", "5", "--seed", "1")
    assert code == 2


def test_plain_format():
    code, out, _ = run("--format", "plain", "factor", "check", "-g", K2)
    assert code == 0 and "hasFactor=True" in out


@pytest.mark.slow
def test_console_script_entry_point():
    proc = subprocess.run([sys.executable, "-m", "kcritical.cli", "graph6", "roundtrip", "-g", "D?{"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and json.loads(proc.stdout)["byteExact"] == 1


def test_method_both_disagreement_reports_reproducer(monkeypatch):
    from kcritical import factors

    monkeypatch.setattr(factors, "is_k_critical_direct", lambda g, p, cap=12: (True, None))
    code, out, err = run("critical", "check", "-g", HUB, "-b", "1", "-k", "1", "--method", "both")
    assert code == 1
    assert json.loads(err)["reproducer"] == {"graph6": HUB, "b": 1, "k": 1}
    assert records(out)[0]["agree"] is False
