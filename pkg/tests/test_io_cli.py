import io
import json

import pytest

from halg.algebra import Quiver
from halg.cli import run
from halg.corpus import a2, corpus, dual_numbers, swap_action, swap_algebra
from halg.errors import InputError
from halg.io import (
    action_from_json, action_to_json, algebra_from_json, algebra_to_json, dumps_report,
    module_from_json, module_to_json, quiver_from_json, quiver_to_json, read_json,
)
from halg.modules import simples


def cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def write(path, obj):
    path.write_text(json.dumps(obj))
    return str(path)


def test_algebra_round_trip():
    for a in (dual_numbers(), swap_algebra(), corpus("dual-numbers-gf7").algebra):
        b = algebra_from_json(json.loads(json.dumps(algebra_to_json(a))))
        assert b.same_table(a) and b.field == a.field


def test_action_and_module_round_trip():
    lam = swap_algebra()
    g = swap_action(lam)
    h = action_from_json(json.loads(json.dumps(action_to_json(g))), lam)
    assert all(h.image(s) == g.image(s) for s in range(g.order))
    s = simples(lam)[1]
    m = module_from_json(json.loads(json.dumps(module_to_json(s, inline_algebra=False))), lam)
    assert m.same_action(s)


def test_quiver_file(tmp_path):
    q = quiver_from_json(read_json(write(tmp_path / "q.json", quiver_to_json(a2().quiver))))
    assert isinstance(q, Quiver) and len(q.arrows) == 1


def test_float_coefficient_rejected():
    obj = algebra_to_json(dual_numbers())
    obj["unit"] = [[1.0, 0]]
    with pytest.raises(InputError):
        algebra_from_json(obj)
    obj["unit"] = [["0.5", 0]]
    with pytest.raises(InputError):
        algebra_from_json(obj)


def test_bad_mul_table_location():
    k = dual_numbers()
    obj = action_to_json(corpus("dual-numbers").action)
    obj["mul_table"] = [[0, 1], [1, 1]]
    with pytest.raises(InputError) as exc:
        action_from_json(obj, k)
    assert exc.value.path == "/mul_table"
    assert "NotAGroup" in str(exc.value) or "group" in str(exc.value).lower()


def test_malformed_json_location(tmp_path):
    p = tmp_path / "bad.json"
    p.write_text('{"field": {"kind": "rational"},\n "labels": [1, }')
    with pytest.raises(InputError) as exc:
        read_json(str(p))
    assert "line 2" in str(exc.value)
    code, _, err = cli("check", "nc", "--algebra", str(p))
    assert code == 2 and "line 2" in err


def test_missing_file_exit_code(tmp_path):
    code, out, err = cli("check", "nc", "--algebra", str(tmp_path / "missing.json"))
    assert code == 2 and out == ""


def test_exit_codes():
    assert cli("check", "nc", "--corpus", "dual-numbers")[0] == 0
    assert cli("check", "nc", "--corpus", "a2")[0] == 1
    assert cli("verify", "prop35", "--corpus", "swap-quiver", "--target", "simple:1",
               "--n-target", "simple:2", "--i-max", "2")[0] == 3
    assert cli("check", "nc", "--corpus", "no-such-thing")[0] == 2
    assert cli("bogus-verb")[0] == 2


def test_injective_dimension_verb():
    code, out, _ = cli("verify", "lemma31", "--corpus", "swap-quiver", "--cutoff", "10", "--seed", "1")
    rep = json.loads(out)
    assert code == 0 and rep["claim"] == "lemma3.1" and rep["verdict"] == "holds"
    ev = rep["evidence"]
    assert ev["id_base"] == ev["id_extension"]
    assert rep["seed"] == 1 and rep["command"][:3] == ["halg", "verify", "lemma31"]


def test_gabriel_quiver_cli():
    code, out, _ = cli("gabriel-quiver", "--corpus", "swap-quiver-skew")
    ev = json.loads(out)["evidence"]
    assert code == 0 and len(ev["vertices"]) == 3 and ev["n_arrows"] == 2
    assert len({a["to"] for a in ev["arrows"]}) == 1


def test_text_format():
    code, out, _ = cli("check", "gsc", "--corpus", "a2", "--format", "text")
    assert code == 0 and "verdict: HOLDS" in out


def test_report_file_and_determinism(tmp_path):
    p1, p2 = tmp_path / "r1.json", tmp_path / "r2.json"
    for p in (p1, p2):
        assert cli("verify", "prop27", "--corpus", "swap-quiver", "--target", "simple:2",
                   "--seed", "3", "-o", str(p))[0] == 0
    assert p1.read_bytes() == p2.read_bytes()
    rep = json.loads(p1.read_text())
    kinds = {c["kind"] for c in rep["certificates"]}
    assert "iso" in kinds
    iso = next(c for c in rep["certificates"] if c["kind"] == "iso")
    assert len(iso["matrix"]) == 2 and len(iso["matrix"][0]) == 2


def test_build_and_reload(tmp_path):
    q = write(tmp_path / "q.json", quiver_to_json(swap_algebra().quiver))
    out_path = tmp_path / "alg.json"
    assert cli("build-path-algebra", q, "-o", str(out_path))[0] == 0
    code, out, _ = cli("check", "gsc", "--algebra", str(out_path))
    assert code == 0
    cyc = write(tmp_path / "cyc.json", {"vertices": ["1", "2"], "arrows": [
        {"name": "a", "from": "1", "to": "2"}, {"name": "b", "from": "2", "to": "1"}]})
    assert cli("build-path-algebra", cyc)[0] == 2


def test_files_with_action(tmp_path):
    lam = swap_algebra()
    alg = write(tmp_path / "lam.json", algebra_to_json(lam))
    act = write(tmp_path / "g.json", action_to_json(swap_action(lam)))
    code, out, _ = cli("skew", "--algebra", alg, "--action", act)
    assert code == 0 and json.loads(out)["evidence"]["dim"] == 10
    bad = action_to_json(swap_action(lam))
    bad["mul_table"] = [[0, 0], [1, 1]]
    code, _, err = cli("skew", "--algebra", alg, "--action", write(tmp_path / "bad.json", bad))
    assert code == 2 and "/mul_table" in err


def test_dimension_cap_cli(monkeypatch):
    monkeypatch.setenv("HALG_MAX_DIM", "12")
    code, _, err = cli("matrix-ext", "--corpus", "swap-quiver", "-n", "3")
    assert code == 2 and "DimensionCapExceeded" in err


def test_dumps_report_is_canonical():
    rep = {"verdict": "holds", "claim": "x", "cutoff": 1, "seed": 0, "evidence": {"b": 1, "a": 2},
           "certificates": []}
    s = dumps_report(rep)
    assert s.endswith("\n") and s.index('"a"') < s.index('"b"')
    assert dumps_report(rep) == s


def test_list_corpus():
    code, out, _ = cli("--list-corpus")
    names = out.split()
    assert code == 0 and "swap-quiver" in names and "dual-numbers" in names


def test_corpus_alias_resolves_to_same_instance():
    a = cli("gabriel-quiver", "--corpus", "example2.8-skew")[1]
    b = cli("gabriel-quiver", "--corpus", "swap-quiver-skew")[1]
    assert json.loads(a)["evidence"] == json.loads(b)["evidence"]
