"""Tests for the command-line interface."""
import json
import subprocess
import sys

import pytest

from pagelab import paging
from pagelab.cli import main
from pagelab.paging import FifoQueue

CLASSICAL = "1,2,3,4,1,2,5,1,2,3,4,5"
V7 = ",".join(map(str, list(range(1, 8)) * 3))


def run(capsys, *args):
    code = main(list(args))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *args):
    code, out, _ = run(capsys, *args, "--json")
    assert code == 0
    return json.loads(out)


def test_simulate_classical(capsys):
    code, out, _ = run(capsys, "simulate", "--refs", CLASSICAL, "--frames", "3")
    assert code == 0
    assert "faults: 9" in out and "(5, 3, 4)" in out


def test_simulate_state_trace(capsys):
    doc = run_json(capsys, "simulate", "--refs", CLASSICAL, "--frames", "3", "--show-states")
    assert doc["states"][0] == [] and doc["states"][4] == [2, 3, 4] and doc["states"][12] == [5, 3, 4]
    _, out, _ = run(capsys, "simulate", "--refs", CLASSICAL, "--frames", "3", "--show-states")
    assert "q_7 = (1, 2, 5)" in out


def test_simulate_empty_trace(tmp_path, capsys):
    path = tmp_path / "empty.trace"
    path.write_text("# nothing here\n\n")
    doc = run_json(capsys, "simulate", str(path), "--frames", "3")
    assert doc["fault_count"] == 0


def test_simulate_warm_start(capsys):
    doc = run_json(capsys, "simulate", "--refs", V7, "--frames", "5", "--warm", "7,3,6,2,5")
    assert doc["fault_count"] == 7 and doc["final_state"] == [7, 3, 6, 2, 5]


def test_simulate_other_policies(capsys):
    assert run_json(capsys, "simulate", "--refs", CLASSICAL, "--frames", "3", "--policy", "lru")["fault_count"] == 10
    assert run_json(capsys, "simulate", "--refs", CLASSICAL, "--frames", "3", "--policy", "min")["fault_count"] == 7


def test_simulate_reads_stdin(monkeypatch, capsys):
    import io
    monkeypatch.setattr(sys, "stdin", io.StringIO("1 2 3\n# c\n4 1\n"))
    assert run_json(capsys, "simulate", "-", "--frames", "3")["fault_count"] == 5


def test_ratio_classical(capsys):
    code, out, _ = run(capsys, "ratio", "--refs", CLASSICAL, "--frames", "3", "--frames-large", "4")
    assert code == 0 and out.splitlines()[0] == "10/9 ANOMALY"


def test_ratio_equal_frames(capsys):
    code, out, _ = run(capsys, "ratio", "--refs", CLASSICAL, "--frames", "3", "--frames-large", "3")
    assert out.splitlines()[0] == "1/1"


def test_ratio_disproof_string(tmp_path, capsys):
    from pagelab.construct import anomaly_prefix, cycle_block
    path = tmp_path / "uv7.trace"
    path.write_text(" ".join(map(str, anomaly_prefix(5, 6, (7, 3, 6, 2, 5)) + cycle_block(7) * 7)))
    code, out, _ = run(capsys, "ratio", str(path), "--frames", "5", "--frames-large", "6")
    assert out.splitlines()[0] == "161/78 ANOMALY"
    doc = run_json(capsys, "ratio", str(path), "--frames", "5", "--frames-large", "6")
    assert (doc["ratio"]["numerator"], doc["ratio"]["denominator"]) == (161, 78)


def test_family_round_trip(tmp_path, capsys):
    trace = tmp_path / "fam.trace"
    doc = run_json(capsys, "family", "7", "7", "--trace-out", str(trace))
    assert (doc["ratio"]["numerator"], doc["ratio"]["denominator"]) == (161, 78)
    saved = json.loads(trace.with_suffix(".report.json").read_text())
    assert saved["small_faults"] == 78 and saved["large_faults"] == 161
    small = run_json(capsys, "simulate", str(trace), "--frames", "5")
    large = run_json(capsys, "simulate", str(trace), "--frames", "6")
    assert (small["fault_count"], large["fault_count"]) == (saved["small_faults"], saved["large_faults"])


@pytest.mark.parametrize("L, n", [("2", 7), ("10", 23), ("5/2", 7)])
def test_ratio_target(capsys, tmp_path, L, n):
    trace = tmp_path / "t.trace"
    doc = run_json(capsys, "ratio-target", L, "--trace-out", str(trace))
    assert doc["n"] == n and doc["exceeds_target"]
    ratio = run_json(capsys, "ratio", str(trace), "--frames", str(n - 2), "--frames-large", str(n - 1))
    assert ratio["ratio"] == doc["ratio"]


def test_construct_prefix(capsys):
    doc = run_json(capsys, "construct-prefix", "7,3,6,2,5", "--frames", "5", "--frames-large", "6")
    assert len(doc["refs"]) == 29
    assert doc["small_faults"] == 29 and doc["small_final_state"] == [7, 3, 6, 2, 5]
    assert doc["large_faults"] == 14 and doc["large_final_state"] == [2, 3, 4, 5, 6, 7]


def test_search_exhaustive(capsys):
    doc = run_json(capsys, "search", "--frames", "2", "--frames-large", "3", "--max-len", "6")
    assert doc["method"] == "exhaustive" and doc["exhausted"] and doc["pages"] == 4
    assert doc["best_ratio"]["numerator"] == doc["best_ratio"]["denominator"] == 1


def test_search_randomized(capsys):
    a = run_json(capsys, "search", "--frames", "3", "--frames-large", "4", "--max-len", "15",
                 "--budget", "500", "--seed", "9")
    b = run_json(capsys, "search", "--frames", "3", "--frames-large", "4", "--max-len", "15",
                 "--budget", "500", "--seed", "9")
    assert a == b and a["method"] == "randomized" and a["strings_examined"] == 500


def test_rate(capsys):
    doc = run_json(capsys, "rate", "--policy", "min", "--frames", "3", "--cycle", "5", "--cycles", "100")
    assert (doc["rate"]["numerator"], doc["rate"]["denominator"]) == (63, 125)
    doc = run_json(capsys, "rate", "--refs", CLASSICAL, "--frames", "3")
    assert (doc["rate"]["numerator"], doc["rate"]["denominator"]) == (3, 4)


def test_reports_are_deterministic(capsys):
    args = ("family", "9", "4", "--json")
    assert run(capsys, *args)[1] == run(capsys, *args)[1]


@pytest.mark.parametrize("args, code", [
    (("simulate", "--refs", "1,x", "--frames", "2"), 2),
    (("simulate", "--refs", "1,0", "--frames", "2"), 2),
    (("simulate", "--frames", "2"), 2),
    (("simulate", "/no/such/trace", "--frames", "2"), 3),
    (("simulate", "--refs", "1,2", "--frames", "2", "--warm", "1,1"), 4),
    (("simulate", "--refs", "1,2", "--frames", "0"), 4),
    (("family", "8", "2"), 4),
    (("ratio-target", "1/2"), 4),
    (("ratio", "--refs", "", "--frames", "1", "--frames-large", "2"), 2),
    (("search", "--frames", "3", "--frames-large", "4", "--pages", "9", "--max-len", "14", "--no-canonical"), 2),
])
def test_exit_codes(capsys, args, code):
    assert run(capsys, *args)[0] == code


def test_usage_error_exit_code(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["simulate"])
    assert exc.value.code == 2


def test_verify_paper_passes(capsys):
    code, out, _ = run(capsys, "verify-paper")
    assert code == 0
    assert "(161, 78)" in out
    assert "FAIL" not in out


def test_verify_paper_catches_broken_fifo(monkeypatch, capsys):
    def evict_newest(state, page):
        if page in state.entries:
            return state, False, None
        if len(state.entries) < state.capacity:
            return FifoQueue(state.entries + (page,), state.capacity), True, None
        return FifoQueue(state.entries[:-1] + (page,), state.capacity), True, state.entries[-1]

    monkeypatch.setattr(paging, "fifo_step", evict_newest)
    code, out, _ = run(capsys, "verify-paper")
    assert code == 1
    assert "FAIL  classical m=3 faults/final" in out


def test_module_entry_point():
    result = subprocess.run([sys.executable, "-m", "pagelab", "verify-paper", "--json"],
                            capture_output=True, text=True)
    assert result.returncode == 0
    assert json.loads(result.stdout)["passed"] is True
