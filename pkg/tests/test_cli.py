import json

import pytest

from modp_gl2 import FieldParams, RingElement, reduce_symm
from modp_gl2.cli import main, parse_element, parse_factors


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_parse_element(p3):
    v = parse_element(p3, "2*[L_1(0)] + [S_2(1)]")
    assert v == 2 * RingElement.L(p3, 1, 0) + RingElement.L(p3, 2, 1)
    w = parse_element(p3, "[L_1] - [L_0(1)]")
    assert w == RingElement.L(p3, 1, 0) - RingElement.L(p3, 0, 1)
    as_json = json.dumps(RingElement.L(p3, 2, 1).to_json_dict())
    assert parse_element(p3, as_json) == RingElement.L(p3, 2, 1)
    with pytest.raises(ValueError):
        parse_element(p3, "[X_1]")


def test_parse_factors():
    assert [tuple(f) for f in parse_factors("3:1:0,5")] \
        == [(3, 1, 0), (5, 0, 0)]
    with pytest.raises(ValueError):
        parse_factors("1:2:3:4")


def test_decompose_json(capsys):
    code, out, _ = run(capsys, "--p", "3", "--f", "1", "decompose", "--symm", "4")
    assert code == 0
    terms = {(t["n"], t["m"]): t["coeff"] for t in json.loads(out)["terms"]}
    assert terms == {(0, 0): "1/1", (0, 1): "1/1", (2, 0): "1/1"}


def test_decompose_frobenius_slot(capsys):
    code, out, _ = run(capsys, "--p", "3", "--f", "2",
                       "decompose", "--symm", "1", "--frob", "1")
    assert code == 0
    terms = json.loads(out)["terms"]
    assert [(t["n"], t["m"]) for t in terms] == [(3, 0)]


def test_decompose_validation(capsys):
    code, out, err = run(capsys, "--p", "3", "--f", "1",
                         "decompose", "--symm", "-1")
    assert code == 2
    assert out == ""
    assert err.strip()


def test_omega_all_csv(capsys):
    code, out, _ = run(capsys, "--p", "3", "--f", "2", "--format", "csv",
                       "omega", "--all")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "n,omega"
    assert len(lines) == 10
    table = dict(tuple(int(x) for x in line.split(",")) for line in lines[1:])
    assert table == {0: 3, 1: 4, 2: 2, 3: 4, 4: 4, 5: 2, 6: 2, 7: 2, 8: 1}


def test_principal_series_explain(capsys):
    code, out, _ = run(capsys, "--p", "3", "--f", "2", "--format", "pretty",
                       "principal-series", "--n", "1", "--explain")
    assert code == 0
    assert "TL,TL" in out
    assert "lambda=" in out


def test_s_alpha(capsys, p3):
    code, out, _ = run(capsys, "--p", "3", "--f", "1", "s-alpha", "--i", "1")
    assert code == 0
    elem = RingElement.from_json_dict(json.loads(out))
    from modp_gl2 import s_alpha

    assert elem == s_alpha(p3, 1).element


def test_constants_json(capsys):
    code, out, _ = run(capsys, "--p", "3", "--f", "1", "constants")
    assert code == 0
    data = json.loads(out)
    assert {"A", "M_upper", "C", "C_r"} <= set(data)


def test_verify_bound_ok(capsys):
    code, out, _ = run(capsys, "--p", "3", "--f", "1", "verify-bound",
                       "--w", "[L_1(0)]", "--factors", "50:0")
    assert code == 0
    data = json.loads(out)
    assert data["satisfied_theorem"] is True
    assert data["satisfied_corollary"] is True


def test_verify_bound_violation_exit_code(capsys):
    # an enormous W coefficient cannot violate the bound (it scales both
    # sides), but a mixed-character W is a validation error
    code, _, err = run(capsys, "--p", "3", "--f", "1", "verify-bound",
                       "--w", "[L_0(0)] + [L_1(0)]", "--factors", "10")
    assert code == 2
    assert err.strip()


def test_oracle_check(capsys):
    code, out, _ = run(capsys, "--p", "3", "--f", "1",
                       "oracle-check", "--factors", "7:1,4:0")
    assert code == 0
    assert json.loads(out)["agree"] is True


def test_oracle_failure_exit_code(capsys, monkeypatch):
    from modp_gl2 import brauer

    monkeypatch.setattr(brauer, "ROUNDING_TOLERANCE", 1e-18)
    brauer._TABLE_CACHE.clear()
    code, _, err = run(capsys, "--p", "3", "--f", "1",
                       "oracle-check", "--factors", "40:1,17:0")
    brauer._TABLE_CACHE.clear()
    assert code == 3
    assert "oracle" in err


def test_bm_qp_sweep(capsys):
    code, out, _ = run(capsys, "--p", "5", "--f", "1", "--format", "csv",
                       "bm", "qp", "--rho-n", "1", "--rho-m", "0",
                       "--type", "trivial", "--a-max", "20")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "a,b,gate,mu_exact,mu_asymptotic,abs_error"
    assert len(lines) == 22
    for line in lines[1:]:
        a, b, gate, mu_exact, mu_asym, abs_error = line.split(",")
        if gate == "False":
            assert mu_exact == "0"


def test_bm_general(capsys, tmp_path):
    from modp_gl2 import bm

    type_path = tmp_path / "type.json"
    weights_path = tmp_path / "weights.json"
    type_path.write_text(json.dumps(bm.type_to_json(bm.preset_type_crystalline_trivial_qp(3))))
    weights_path.write_text(json.dumps(bm.intrinsics_to_json({(0, 0): 1, (2, 0): 1})))
    code, out, _ = run(capsys, "--p", "3", "--f", "1", "bm", "general",
                       "--type-json", str(type_path),
                       "--weights-json", str(weights_path),
                       "--factors", "4:0:0")
    assert code == 0
    data = json.loads(out)
    assert data["mu_aut"] == 2
    assert data["dim"] == 5


def test_determinism(capsys):
    argv = ["--p", "3", "--f", "2", "decompose", "--factors", "11:1:0,6:0:1"]
    _, first, _ = run(capsys, *argv)
    _, second, _ = run(capsys, *argv)
    assert first == second


def test_jobs_flag_preserves_order(capsys):
    argv = ["--p", "5", "--f", "1", "--format", "csv", "bm", "qp",
            "--rho-n", "1", "--a-max", "15"]
    _, serial, _ = run(capsys, *argv)
    _, parallel, _ = run(capsys, "--jobs", "4", *argv[:])
    assert serial == parallel


def test_cache_roundtrip(capsys, tmp_path):
    cache_file = tmp_path / "cache.json"
    argv = ["--p", "3", "--f", "1", "--cache-path", str(cache_file),
            "decompose", "--symm", "19"]
    _, cold, _ = run(capsys, *argv)
    assert cache_file.exists()
    import modp_gl2.ring as ring

    ring._SC_CACHE.pop((3, 1), None)
    _, warm, _ = run(capsys, *argv)
    assert cold == warm


def test_corrupt_cache_warns(capsys, tmp_path):
    cache_file = tmp_path / "cache.json"
    cache_file.write_text("{not json")
    code, out, err = run(capsys, "--p", "3", "--f", "1",
                         "--cache-path", str(cache_file),
                         "decompose", "--symm", "4")
    assert code == 0
    assert "cache" in err
    terms = {(t["n"], t["m"]) for t in json.loads(out)["terms"]}
    assert terms == {(0, 0), (0, 1), (2, 0)}
