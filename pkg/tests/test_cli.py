import json

import pytest

from bivarieg.cli import run
from bivarieg.graph import cycle
from bivarieg.io import to_edge_list_text, to_graph6


def invoke(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_check_biv_exit_codes(capsys):
    code, out, _ = invoke(capsys, "check", "biv", "--family", "cycle(8)")
    assert code == 0 and "2-variegated" in out
    code, out, _ = invoke(capsys, "check", "biv", "--family", "cycle(6)")
    assert code == 1 and "not 2-variegated" in out


def test_check_biv_json_schema(capsys):
    code, out, _ = invoke(capsys, "check", "biv", "--family", "cycle(8)", "--json")
    assert code == 0
    j = json.loads(out)
    assert j["bivariegated"] is True
    assert set(j["certificate"]) == {"special_edges", "side_u", "side_w"}
    assert len(j["certificate"]["special_edges"]) == 4


def test_check_line(capsys):
    code, out, _ = invoke(capsys, "check", "line", "--family",
                          "complete_bipartite(1,3)")
    assert code == 1
    code, out, _ = invoke(capsys, "check", "line", "--family", "cycle(5)", "--json")
    assert code == 0
    j = json.loads(out)
    assert j["line_graph"] is True
    assert j["root"]["order"] == 5
    assert len(j["edge_map"]) == 5


def test_graph6_and_file_and_stdin_inputs(tmp_path, capsys, monkeypatch):
    g6 = to_graph6(cycle(8))
    code, _, _ = invoke(capsys, "check", "biv", "--graph6", g6)
    assert code == 0
    f = tmp_path / "c8.txt"
    f.write_text(to_edge_list_text(cycle(8)))
    code, _, _ = invoke(capsys, "check", "biv", str(f))
    assert code == 0
    import io as _io
    monkeypatch.setattr("sys.stdin", _io.StringIO(g6 + "\n"))
    code, _, _ = invoke(capsys, "check", "biv", "-")
    assert code == 0


def test_input_errors_exit_2(capsys):
    code, _, err = invoke(capsys, "check", "biv", "missing-file")
    assert code == 2 and "input error" in err
    code, _, err = invoke(capsys, "check", "biv", "--family", "cycle(2)")
    assert code == 2
    code, _, err = invoke(capsys, "check", "biv", "--family", "cycle(8)",
                          "--graph6", "Bw")
    assert code == 2  # two input sources
    code, _, err = invoke(capsys, "check", "biv")
    assert code == 2  # no input source


def test_resource_cap_exit_3(capsys, monkeypatch):
    monkeypatch.setenv("BIVARIEG_CYCLE_CAP", "2")
    code, _, err = invoke(capsys, "solve", "lg", "--family", "complete(8)")
    assert code == 3 and "resource cap" in err


def test_linegraph_command(capsys):
    code, out, _ = invoke(capsys, "linegraph", "--family", "path(4)")
    assert code == 0 and out.splitlines()[0] == "3 2"
    code, out, _ = invoke(capsys, "linegraph", "--iterate", "2",
                          "--family", "path(5)", "--json")
    assert code == 0 and json.loads(out)["graph"]["order"] == 3


def test_solvers_and_fixed_point(capsys):
    assert invoke(capsys, "solve", "lg", "--family", "cycle(8)")[0] == 0
    assert invoke(capsys, "solve", "lg", "--family", "complete(4)")[0] == 1
    code, out, _ = invoke(capsys, "solve", "nested", "--family", "cycle(8)", "--json")
    assert code == 0
    w = json.loads(out)["nested_witness"]
    assert set(w) == {"paths", "special_edges"}
    assert invoke(capsys, "solve", "nested", "--family", "cycle(6)")[0] == 1
    assert invoke(capsys, "fixed-point", "--family", "cycle(4)")[0] == 0
    assert invoke(capsys, "fixed-point", "--family", "petersen")[0] == 1


def test_degseq_commands(capsys):
    code, out, _ = invoke(capsys, "degseq", "check", "3^3,1^3", "--json")
    assert code == 0
    j = json.loads(out)
    assert j["potentially"] is True
    assert set(j["partition"]) == {"n", "sides"}
    assert invoke(capsys, "degseq", "check", "3 3 1 1")[0] == 1
    code, out, _ = invoke(capsys, "degseq", "realize", "2^4", "--json")
    assert code == 0 and json.loads(out)["graph"]["order"] == 4
    code, out, _ = invoke(capsys, "degseq", "partitions", "3", "--json")
    assert code == 0 and json.loads(out)["count"] == 6
    assert invoke(capsys, "degseq", "forcibly", "1^6")[0] == 0
    assert invoke(capsys, "degseq", "forcibly", "2^8")[0] == 1
    assert invoke(capsys, "degseq", "check", "junk^^")[0] == 2


def test_spectra_command(capsys):
    code, out, _ = invoke(capsys, "spectra", "--n", "5", "--json")
    assert code == 0
    j = json.loads(out)
    assert j["eigenvalues"] == {"5": 1, "3": 1, "0": 4, "-2": 4}
    assert j["polynomial_identity"] is True and j["verified"] is True
    assert invoke(capsys, "spectra", "--n", "0")[0] == 2


def test_scan_command_and_determinism(capsys):
    code, out, _ = invoke(capsys, "scan", "lemma1", "--max-order", "5", "--json")
    assert code == 0
    first = out
    code, out, _ = invoke(capsys, "scan", "lemma1", "--max-order", "5",
                          "--jobs", "2", "--json")
    assert code == 0 and out == first
    code, out, _ = invoke(capsys, "scan", "cor13", "--max-order", "8",
                          "--include-disconnected")
    assert code == 1 and "Gr?GOK" in out


def test_version(capsys):
    with pytest.raises(SystemExit) as exc:
        run(["--version"])
    assert exc.value.code == 0
