import io
import json
import subprocess
import sys

import pytest

from mixedclique import cli
from mixedclique.graph import named_graph, parse_mng, serialize_mng, to_graph6
from mixedclique.search import wagner_03

P3_MONO = "mng 0 1 3\ne 0 1 1\ne 1 2 1\n"
P3_TWO = "mng 0 2 3\ne 0 1 1\ne 1 2 2\n"


@pytest.fixture
def files(tmp_path):
    def write(name, text):
        path = tmp_path / name
        path.write_text(text)
        return str(path)
    return write


def payload(argv):
    result, code, _ = cli.run(argv)
    return result, code


class TestEnvelope:
    def test_shape_and_determinism(self, files):
        path = files("w.mng", serialize_mng(wagner_03()))
        a, code = payload(["omega-r", path])
        b, _ = payload(["omega-r", path])
        assert code == 0
        assert set(a) == {"command", "status", "payload", "timing"}
        assert a["status"] == "ok" and a["payload"]["value"] == 8
        assert a["payload"] == b["payload"]

    def test_unknown_subcommand(self):
        result, code = payload(["frobnicate"])
        assert code == 4 and result["status"] == "error"

    def test_no_subcommand(self):
        assert payload([])[1] == 4

    def test_malformed_input(self, files):
        result, code = payload(["omega-r", files("bad.mng", "mng 0 1 3\ne 0 9 1\n")])
        assert code == 4 and "out of range" in result["payload"]["error"]

    def test_main_writes_json_and_summary(self, files, capsys):
        code = cli.main(["is-clique", files("p3.mng", P3_MONO)])
        out, err = capsys.readouterr()
        assert code == 1
        assert json.loads(out)["status"] == "violation"
        assert err.startswith("[violation]")

    def test_json_only(self, files, capsys):
        cli.main(["is-clique", files("p3.mng", P3_TWO), "--json-only"])
        out, err = capsys.readouterr()
        assert json.loads(out)["status"] == "ok" and err == ""

    def test_stdin(self, monkeypatch):
        monkeypatch.setattr(sys, "stdin", io.StringIO(P3_TWO))
        result, code = payload(["omega-r", "-"])
        assert code == 0 and result["payload"]["value"] == 3

    def test_graph6_input(self, files):
        result, _ = payload(["omega-r", files("k4.g6", to_graph6(named_graph("complete(4)")) + "\n")])
        assert result["payload"]["value"] == 4


class TestCommands:
    def test_gen(self):
        result, code = payload(["gen", "petersen"])
        assert code == 0 and result["payload"]["graph6"] == to_graph6(named_graph("petersen"))
        result, _ = payload(["gen", "wagner03"])
        assert parse_mng(result["payload"]["mng"]) == wagner_03()
        assert payload(["gen", "heawood"])[1] == 4

    def test_convert_round_trip(self, files):
        g6 = to_graph6(named_graph("cubical"))
        result, _ = payload(["convert", files("c.g6", g6)])
        mng = result["payload"]["data"]
        back, _ = payload(["convert", files("c.mng", mng)])
        assert back["payload"]["data"] == g6

    def test_validate(self, files):
        result, code = payload(["validate", files("v.mng", "mng 0 1 3\ne 1 1 1\ne 0 1 2\n")])
        assert code == 1
        msgs = [v["message"] for v in result["payload"]["violations"]]
        assert "loop" in msgs and "edge color out of range" in msgs
        assert payload(["validate", files("ok.mng", P3_TWO)])[1] == 0

    def test_see_graph(self, files):
        result, _ = payload(["see-graph", files("p.mng", P3_TWO)])
        assert {"u": 0, "v": 2, "witness": {"via": 1}} in result["payload"]["edges"]

    def test_chi_and_hom(self, files):
        src = files("s.mng", "mng 1 0 3\na 0 1 1\na 1 2 1\n")
        result, _ = payload(["chi", src])
        assert result["payload"]["value"] == 3
        tgt = files("t.mng", "mng 1 0 2\na 0 1 1\n")
        result, code = payload(["hom", src, tgt])
        assert code == 2 and result["payload"]["value"] is False
        assert payload(["hom", tgt, src])[1] == 0

    def test_quotient(self, files):
        path = files("q.mng", P3_MONO)
        result, code = payload(["quotient", path, "0", "2"])
        assert code == 0 and result["payload"]["mapping"] == [0, 1, 0]
        result, code = payload(["quotient", files("q2.mng", P3_TWO), "0", "2"])
        assert code == 1 and result["payload"]["conflict"] == "type clash"
        assert payload(["quotient", path, "0", "1"])[0]["payload"]["conflict"] == "loop"

    def test_omega_a(self, files):
        result, _ = payload(["omega-a", files("p.mng", P3_TWO)])
        assert result["payload"]["value"] == 3

    def test_bounds(self):
        result, _ = payload(["bounds", "--p", "2", "--delta", "3"])
        doc = result["payload"]
        assert doc["planar"] == {"lower": 15, "upper": 176}
        assert doc["max_degree_relative"] == 8 and doc["outerplanar"] == 7
        result, _ = payload(["bounds", "--p", "3", "--m", "1", "--n", "1"])
        assert result["payload"]["path"] == 4
        assert payload(["bounds", "--p", "3", "--m", "1", "--n", "0"])[1] == 4
        assert payload(["bounds", "--p", "1"])[1] == 4

    def test_see_degeneracy_command(self, files):
        result, code = payload(["verify-lemma32", files("w.mng", serialize_mng(wagner_03()))])
        assert code == 0 and result["payload"]["holds"]

    def test_detect(self, files):
        path = files("p.mng", P3_TWO)
        assert payload(["detect", "f1", path, "--set", "0,1,2"])[1] == 2
        assert payload(["detect", "f2", files("m.mng", P3_MONO), "--set", "0,2"])[1] == 1

    def test_search(self):
        result, code = payload(["search", "--underlying", "path(3)", "--m", "0", "--n", "2"])
        assert code == 0 and result["payload"]["value"] == 3 and result["payload"]["exhaustive"]
        result, code = payload(["search", "--underlying", "wagner", "--m", "0", "--n", "2",
                                "--floor", "7", "--budget", "5"])
        assert code == 3 and not result["payload"]["exhaustive"]

    def test_edge_color(self):
        assert payload(["edge-color", "petersen", "--k", "3"])[1] == 2
        result, code = payload(["edge-color", "petersen", "--k", "4"])
        assert code == 0 and len(result["payload"]["value"]) == 15

    def test_subcubic_case_command(self):
        result, code = payload(["verify-thm41", "--case", "d"])
        assert code == 0 and result["payload"]["lower"]["value"] == 10
        result, code = payload(["verify-thm41", "--case", "a", "--sweep-order", "7"])
        assert code == 0 and result["payload"]["lower"]["confirmed"]


def test_module_entry_point(tmp_path):
    path = tmp_path / "p3.mng"
    path.write_text(P3_MONO)
    proc = subprocess.run([sys.executable, "-m", "mixedclique", "is-clique", str(path)],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 1
    assert json.loads(proc.stdout)["status"] == "violation"
