import json
import random
import subprocess
import sys
from itertools import combinations

import pytest

from bergecycles import Hypergraph, parse_hypergraph, serialize_hypergraph
from bergecycles.cli import run
from bergecycles.graphs import exceptional_g3_instance, random_class_member
from bergecycles.hypercore import mask_of


def _out(capsys):
    return capsys.readouterr().out


def test_bounds(capsys):
    assert run(["bounds", "--n", "16", "--d", "6"]) == 0
    assert _out(capsys).split() == ["h(16,6)=81", "e(16,6)=85", "rhs(16,6)=128"]
    assert run(["bounds", "--n", "16", "--d", "6", "--thm2-rhs"]) == 0
    assert "rhs(16,6)=64-21+85=128" in _out(capsys)
    assert run(["bounds", "--n", "6", "--k", "4", "--r", "3", "--json"]) == 0
    assert json.loads(_out(capsys)) == {"eg_hypergraph": 17, "eg_graph": "15/2", "cliques": "5/2"}
    assert run(["bounds", "--n", "16"]) == 2
    assert run(["bounds", "--n", "7", "--d", "4"]) == 2


def test_gen_then_oracle(tmp_path, capsys):
    h = str(tmp_path / "h.bhg")
    assert run(["gen", "eg-sharp", "--n", "5", "--k", "4", "-o", h]) == 0
    side = json.loads(open(h + ".json").read())
    assert side["claims"] == {"edges": 14, "bound": 14, "max_cycle_length": 3}
    assert run(["oracle", "cycle", h]) == 0
    assert "longest Berge cycle length 3" in _out(capsys)
    assert run(["oracle", "cycle", h, "--at-least", "4"]) == 3
    assert run(["oracle", "ham", h]) == 3
    assert run(["oracle", "path", h]) == 0
    assert "(5 base vertices)" in _out(capsys)
    cert = str(tmp_path / "c.json")
    assert run(["oracle", "best-path", h, "--json", "--cert-out", cert]) == 0
    assert run(["check-cert", h, cert]) == 0
    assert "valid Berge path" in _out(capsys)


@pytest.mark.parametrize("argv", [
    ["gen", "dirac-sharp", "--n", "9", "--variant", "3"],
    ["gen", "path-sharp", "--n", "6", "--k", "4"],
    ["gen", "cycle-sharp", "--n", "7", "--k", "3", "--variant", "2"],
    ["gen", "fnk", "--n", "7", "--k", "4", "--shape", "star"],
])
def test_gen_families(argv, capsys):
    assert run(argv) == 0
    H = parse_hypergraph(_out(capsys))
    assert H.n == int(argv[argv.index("--n") + 1])


def test_gen_errors():
    assert run(["gen", "eg-sharp", "--n", "5"]) == 2
    assert run(["gen", "eg-sharp", "--n", "6", "--k", "4"]) == 2


def test_shadow(tmp_path, capsys):
    h = tmp_path / "h.bhg"
    h.write_text("3 1\n3 0 1 2\n")
    assert run(["shadow", str(h)]) == 0
    assert parse_hypergraph(_out(capsys)).edge_sets() == [[0, 1], [0, 2], [1, 2]]


def test_pipeline_and_check_cert(tmp_path, capsys):
    H = Hypergraph(15, tuple(mask_of(c) for r in range(2, 16) for c in combinations(range(15), r)))
    h = tmp_path / "h15.bhg"
    h.write_text(serialize_hypergraph(H))
    assert run(["pipeline", str(h), "--json", "--trace-out", str(tmp_path / "t.json")]) == 0
    cert = tmp_path / "cert.json"
    cert.write_text(_out(capsys))
    assert run(["check-cert", str(h), str(cert)]) == 0
    assert "valid Berge cycle of length 15" in _out(capsys)
    assert run(["check-cert", str(h), str(tmp_path / "t.json")]) == 0
    obj = json.loads(cert.read_text())
    obj["vertices"][0], obj["vertices"][1] = obj["vertices"][1], obj["vertices"][1]
    cert.write_text(json.dumps(obj))
    assert run(["check-cert", str(h), str(cert)]) == 3


def test_pipeline_precondition(tmp_path):
    h = tmp_path / "d.bhg"
    assert run(["gen", "dirac-sharp", "--n", "15", "--variant", "1", "-o", str(h)]) == 0
    assert run(["pipeline", str(h)]) == 2


def test_classify_and_swap(tmp_path, capsys):
    G, w = random_class_member("G4", 6, random.Random(2))
    g = tmp_path / "g.bhg"
    g.write_text(serialize_hypergraph(G))
    assert run(["classify", str(g), "--k", "6"]) == 0
    wit = tmp_path / "w.json"
    wit.write_text(_out(capsys))
    assert json.loads(wit.read_text())["class"] == "G4"
    plan = tmp_path / "p.json"
    plan.write_text(json.dumps({"removed": [], "added": [list(w.V2[:2])]}))
    assert run(["swap", str(g), str(wit), str(plan)]) == 0
    assert json.loads(_out(capsys)) == {"guarantee": "hamiltonian", "hamiltonian": True}

    G, w, p = exceptional_g3_instance()
    g.write_text(serialize_hypergraph(G))
    wit.write_text(json.dumps(w.to_json()))
    plan.write_text(json.dumps(p.to_json()))
    assert run(["swap", str(g), str(wit), str(plan)]) == 0
    assert json.loads(_out(capsys)) == {"guarantee": "exceptional", "hamiltonian": False}

    g.write_text("7 0\n")
    assert run(["classify", str(g), "--k", "3"]) == 2


def test_verify(capsys):
    assert run(["verify", "thm5", "--n", "4", "--k", "3"]) == 0
    rep = json.loads(_out(capsys))
    assert rep["instances_checked"] == 2 ** 15 and rep["counterexample"] is None
    assert run(["verify", "dirac", "--n", "9"]) == 2


def test_input_errors(tmp_path, capsys):
    bad = tmp_path / "bad.bhg"
    bad.write_text("3 2\n2 0 1\n")
    assert run(["oracle", "cycle", str(bad)]) == 2
    assert run(["oracle", "cycle", str(tmp_path / "missing.bhg")]) == 2
    with pytest.raises(SystemExit) as exc:
        run(["oracle", "cycle", str(bad), "--bogus"])
    assert exc.value.code == 2


def test_console_script_version():
    out = subprocess.run([sys.executable, "-m", "bergecycles.cli", "--version"],
                         capture_output=True, text=True, check=True).stdout
    assert out.startswith("berge 0.1.0")
