import json
import subprocess
import sys

import pytest

from ordercone.cli import main
from ordercone.rational import format_vector, parse_vector

EX = '{"dim": 3, "generators": [["1","0","1"], ["0","1","1"], ["-1","0","1"], ["0","-1","1"]]}'
ORTH = '{"dim": 2, "inequalities": [["1","0"], ["0","1"]]}'


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, (json.loads(out) if out else None), err


def vectors(obj):
    """Every comma-vector string found in a report."""
    if isinstance(obj, dict):
        for v in obj.values():
            yield from vectors(v)
    elif isinstance(obj, list):
        for v in obj:
            yield from vectors(v)
    elif isinstance(obj, str) and "," in obj and all(c in "0123456789,-/" for c in obj):
        yield obj


def test_disjoint_example(capsys):
    code, rep, _ = run(capsys, "-c", EX, "disjoint", "--kind", "d", "1,0,1", "0,1,1")
    assert code == 0 and rep["verdict"] == "true"
    assert list(rep) == ["command", "inputs", "verdict", "certificate", "trace", "theorem_citations"]


def test_perp_example(capsys):
    code, rep, _ = run(capsys, "-c", EX, "disjoint", "--kind", "perp", "1,0,1", "0,1,1")
    assert code == 0 and rep["verdict"] == "false" and rep["certificate"]["witness"]


def test_atom_example(capsys):
    code, rep, _ = run(capsys, "-c", EX, "atom", "1,1,2")
    assert code == 0 and rep["verdict"] == "false"


def test_leq_orthant(capsys):
    code, rep, _ = run(capsys, "-c", ORTH, "leq", "0,0", "1,2")
    assert code == 0 and rep["verdict"] == "true"


def test_info(capsys):
    code, rep, _ = run(capsys, "-c", EX, "info")
    assert code == 0
    flags = rep["certificate"]["flags"]
    assert flags["archimedean"] and flags["pre_riesz"]
    assert "directed Archimedean ⇒ pre-Riesz" in rep["theorem_citations"]


@pytest.mark.parametrize("argv,verdict", [
    (["mlb", "-1,0,1", "0,1,1"], "computed"),
    (["make-pair", "1,0,1", "0,1,1"], "computed"),
    (["d-discrete", "1,1,2"], "not_d_discrete"),
    (["discrete", "1,1,2"], "discrete_unknown"),
    (["discrete", "0,1,1"], "discrete"),
    (["find-atom-below", "1,1,2"], "computed"),
    (["interval-vertices", "1,1,2"], "4"),
    (["disjoint", "--kind", "sym", "1,0,1", "0,1,1"], "true"),
])
def test_subcommands(capsys, argv, verdict):
    code, rep, _ = run(capsys, "-c", EX, *argv)
    assert code == 0 and rep["verdict"] == verdict
    for text in vectors(rep):
        assert format_vector(parse_vector(text)) == text


def test_report_vectors_round_trip(capsys):
    code, rep, _ = run(capsys, "-c", EX, "find-atom-below", "3/2,1/2,2")
    assert code == 0
    found = list(vectors(rep))
    assert found
    for text in found:
        assert format_vector(parse_vector(text)) == text


@pytest.mark.parametrize("argv", [
    ["-c", '{"dim": 2, "generators": [["1","0"], ["-1","0"], ["0","1"]]}', "info"],
    ["-c", '{"dim": 3, "generators": [["1","0","0"], ["0","1","0"]]}', "info"],
    ["-c", EX, "leq", "1,0", "1,1"],
    ["-c", EX, "atom", "1,x,2"],
    ["-c", EX, "atom", "1,1,1"],
    ["-c", '{"dim": 2, "strict": [["1","0"]]}', "info"],
    ["-c", "/nonexistent/cone.json", "info"],
])
def test_input_errors(capsys, argv):
    code, rep, err = run(capsys, *argv)
    assert code == 2 and rep is None and err


def test_closed_cone_diagnostic(capsys):
    code, _, err = run(capsys, "-c", '{"dim": 2, "strict_inequalities": [["1","0"]]}', "info")
    assert code == 2 and "closed" in err


def test_certificate_failure_exit_code(capsys, monkeypatch):
    import ordercone.cli as cli
    monkeypatch.setattr(cli, "is_maximal_lower_bound", lambda *a: False)
    code, _, err = run(capsys, "-c", EX, "mlb", "1,0,1", "0,1,1")
    assert code == 3 and "invariant" in err


def test_bad_usage_exit_code():
    with pytest.raises(SystemExit) as e:
        main(["-c", EX, "nosuch"])
    assert e.value.code == 2


def test_module_entry_point(tmp_path):
    doc = tmp_path / "orth.json"
    doc.write_text(ORTH)
    out = subprocess.run([sys.executable, "-m", "ordercone", "-c", str(doc), "leq", "1,0", "0,1"],
                         capture_output=True, text=True)
    assert out.returncode == 0
    assert json.loads(out.stdout)["verdict"] == "false"
