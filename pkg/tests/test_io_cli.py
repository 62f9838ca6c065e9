import json

import pytest
from conftest import hopf

from hopfq import corpus, io
from hopfq.cli import main
from hopfq.comodules import regular
from hopfq.exactlin import FieldSpec, from_rows
from hopfq.loops import LoopTable


@pytest.mark.parametrize("name", sorted(corpus.BUNDLED))
def test_round_trip(tmp_path, name):
    obj = corpus.BUNDLED[name]()
    path = tmp_path / f"{name}.json"
    io.save(obj, path)
    back = io.load(path)
    assert back == obj
    assert io.dumps(back) == path.read_text(encoding="utf-8")


def test_round_trip_morphism_and_loop(tmp_path):
    m = from_rows(FieldSpec(7), [[1, 2], [3, 6]])
    io.save(m, tmp_path / "m.json")
    assert io.load(tmp_path / "m.json") == m
    loop = corpus.nonassociative_loops()[0]
    io.save(loop, tmp_path / "l.json")
    back = io.load(tmp_path / "l.json")
    assert isinstance(back, LoopTable) and back == loop


def test_bundled_files_match_constructors():
    for name, make in corpus.BUNDLED.items():
        assert io.load(name) == make(), name
    assert io.load("fpz3") == io.load("f7z3")


def test_tensor_layout(tmp_path):
    d = io.to_dict(hopf("qz3"))
    # mu[i][j][k]: coefficient of e_k in e_i e_j; g * g = g^2
    assert d["mu"][1][1] == ["0", "0", "1"]
    # delta[i][j][k]: coefficient of e_j (x) e_k in delta(e_i)
    assert d["delta"][2][2][2] == "1" and d["delta"][2][0][0] == "0"
    assert d["eta"] == ["1", "0", "0"]
    assert d["lambda"][1] == ["0", "0", "1"]


def test_field_override(tmp_path):
    h = io.load_hopf("qz3", FieldSpec(5))
    assert h.field == FieldSpec(5)
    assert io.load_comodule("qz2") == regular(hopf("qz2"))


@pytest.mark.parametrize(
    "mutate,fragment",
    [
        (lambda d: d["mu"][0].pop(), "mu"),
        (lambda d: d["eta"].__setitem__(0, "x"), "eta[0]"),
        (lambda d: d.__setitem__("kind", "banana"), "kind"),
        (lambda d: d.__setitem__("field", "Fp:9"), "field"),
    ],
)
def test_format_errors(tmp_path, mutate, fragment):
    d = io.to_dict(hopf("qz2"))
    mutate(d)
    p = tmp_path / "bad.json"
    p.write_text(json.dumps(d), encoding="utf-8")
    with pytest.raises(io.FormatError) as err:
        io.load(p)
    assert fragment in str(err.value)


def test_invalid_json(tmp_path):
    p = tmp_path / "broken.json"
    p.write_text("{", encoding="utf-8")
    with pytest.raises(io.FormatError):
        io.load(p)


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr()


def test_cli_check(capsys):
    code, out = run(capsys, "check", "qz2")
    assert code == 0 and "PASS" in out.out


def test_cli_check_fails_with_witness(tmp_path, capsys):
    d = io.to_dict(hopf("qz2"))
    d["lambda"] = [["-1", "0"], ["0", "-1"]]
    p = tmp_path / "bad.json"
    p.write_text(json.dumps(d), encoding="utf-8")
    code, out = run(capsys, "check", str(p), "--json")
    assert code == 1
    rep = json.loads(out.out)
    failing = [c for c in rep["checks"] if c["status"] == "fail"]
    assert failing and all("witness" in c for c in failing)


def test_cli_check_bad_loop(tmp_path, capsys):
    p = tmp_path / "loop.json"
    p.write_text(json.dumps({"kind": "loop_table", "table": [[0, 1], [1, 1]]}), encoding="utf-8")
    code, _ = run(capsys, "check", str(p))
    assert code == 1


def test_cli_usage_errors(tmp_path, capsys):
    assert run(capsys, "check", str(tmp_path / "missing.json"))[0] == 2
    assert run(capsys, "check", "qz2", "--field", "Fp:4")[0] == 2
    assert run(capsys, "frobnicate")[0] == 2
    assert run(capsys)[0] == 2


def test_cli_grouplikes(capsys):
    code, out = run(capsys, "grouplikes", "f7z3", "--json")
    assert code == 0
    d = json.loads(out.out)
    assert len(d["grouplikes"]) == 3
    t = d["table"]
    assert sorted(map(sorted, t)) == [[0, 1, 2]] * 3
    assert all(t[a][b] == t[b][a] for a in range(3) for b in range(3))


def test_cli_product(tmp_path, capsys):
    code, out = run(capsys, "product", "qz2", "qz2", "--out", str(tmp_path))
    assert code == 0
    prod = io.load(tmp_path / "product.json")
    assert prod.dim == 2
    inc = io.load(tmp_path / "inclusion.json")
    assert inc.shape == (4, 2)


def test_cli_galois_and_inverse_class(tmp_path, capsys):
    code, out = run(capsys, "galois", "skewz3", "--out", str(tmp_path))
    assert code == 0 and "strong: False" in out.out
    assert (tmp_path / "gamma_inv.json").exists()
    code, _ = run(capsys, "inverse_class", "quaternions", "--out", str(tmp_path))
    assert code == 0
    for name in ("h.json", "h_inv.json", "opposite.json", "report.json"):
        assert (tmp_path / name).exists()


def test_cli_normal_basis_and_gnb(capsys):
    assert run(capsys, "normal_basis", "qsqrt2")[0] == 0
    assert run(capsys, "gnb", "qz2", "qz2")[0] == 0


def test_cli_enumerate(tmp_path, capsys):
    code, out = run(capsys, "enumerate_loops", "5", "--out", str(tmp_path), "--json")
    assert code == 0
    assert json.loads(out.out)["count"] == 6
    assert len(list(tmp_path.glob("loop5_*.json"))) == 6


def test_seed_env_overrides(monkeypatch):
    from hopfq.galois import default_seed

    monkeypatch.setenv("HOPFQ_SEED", "11")
    assert default_seed(3) == 11
    monkeypatch.delenv("HOPFQ_SEED")
    assert default_seed(3) == 3
