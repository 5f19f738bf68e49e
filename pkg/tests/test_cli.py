"""End-to-end CLI coverage (parsing, rendering, exit codes)."""

import json

from addcyc.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_factor_reference(capsys):
    code, out, _ = run(capsys, "factor", "-n", "7", "-q", "3", "--paper-fields")
    assert code == 0
    assert "m[0] = 2,1" in out
    assert "m[1] = 1,1,1,1,1,1,1" in out
    code, out, _ = run(capsys, "factor", "-n", "7", "-q", "9", "--paper-fields")
    assert "2,w^7,w,1" in out and "2,w^5,w^3,1" in out


def test_factor_json(capsys):
    code, out, _ = run(capsys, "factor", "-n", "7", "-q", "9", "--paper-fields", "--json")
    data = json.loads(out)
    assert [f["coset"] for f in data] == [[0], [1, 2, 4], [3, 5, 6]]


def test_cosets(capsys):
    code, out, _ = run(capsys, "cosets", "-n", "7", "-q", "9")
    assert out.splitlines() == ["C[0] = [0]", "C[1] = [1, 2, 4]", "C[3] = [3, 5, 6]"]


def test_atlas_json(capsys):
    code, out, _ = run(capsys, "atlas", "-n", "7", "-q", "3", "--paper-fields", "--json")
    data = json.loads(out)
    assert data["idempotents"]["1,0"] == "0,w^7,w^7,w^5,w^7,w^5,w^5"
    assert data["mu"] == [0, 1]
    assert data["tau_orientation"] == [None, "swaps"]


def test_count_and_enumerate(capsys):
    code, out, _ = run(capsys, "count", "-n", "7", "-q", "3", "--mode", "so")
    assert out.strip() == "58"
    code, out, _ = run(capsys, "count", "-n", "7", "-q", "3", "--mode", "sd")
    assert out.strip() == "28"
    code, out, _ = run(capsys, "count", "-n", "7", "-q", "3", "--mode", "so", "--complete")
    assert out.strip() == "87"
    code, out, _ = run(capsys, "enumerate", "-n", "7", "-q", "3", "--mode", "sd",
                       "--limit", "5", "--json")
    data = json.loads(out)
    assert len(data) == 5 and all(r["self_dual"] for r in data)


def test_form_and_mindist(capsys):
    gen = "0,w^7,w^7,w^5,w^7,w^5,w^5"
    code, out, _ = run(capsys, "form", "-n", "7", "-q", "3", "--paper-fields",
                       "--a", gen, "--b", gen)
    assert "(a,b)   = 0" in out
    code, out, _ = run(capsys, "mindist", "-n", "7", "-q", "3", "--paper-fields",
                       "--gen", gen)
    assert code == 0 and "d = 5 (exact)" in out


def test_dual(capsys):
    gen = "0,w^7,w^7,w^5,w^7,w^5,w^5"
    code, out, _ = run(capsys, "dual", "-n", "7", "-q", "3", "--paper-fields",
                       "--gen", gen, "--json")
    data = json.loads(out)
    assert data["code"]["k_fq"] == 6 and data["dual"]["k_fq"] == 8


def test_goodcodes(capsys):
    code, out, _ = run(capsys, "goodcodes", "-n", "11", "-q", "2", "--json")
    data = json.loads(out)
    assert len(data) == 68
    assert any(r["k_fq"] == 10 and r["d"] == 6 and r["d_exact"] for r in data)


def test_error_exit_code(capsys):
    code, _, err = run(capsys, "factor", "-n", "6", "-q", "3")
    assert code == 2
    assert "gcd(n, base) = 1" in err
    code, _, err = run(capsys, "count", "-n", "6", "-q", "3")
    assert code == 2
    code, _, err = run(capsys, "mindist", "-n", "7", "-q", "3")
    assert code == 2  # neither --gen nor --row


def test_deterministic_json(capsys):
    args = ("enumerate", "-n", "7", "-q", "3", "--mode", "so", "--json")
    _, out1, _ = run(capsys, *args)
    _, out2, _ = run(capsys, *args)
    assert out1 == out2


def test_verify_paper_small_budget(capsys):
    code, out, _ = run(capsys, "verify-paper", "--budget", "small",
                       "--samples", "1000", "--json")
    data = json.loads(out)
    by_name = {r["name"]: r["status"] for r in data}
    assert by_name["factorisation of X^7 - 1"] == "PASS"
    assert by_name["primitive idempotents"] == "PASS"
    assert by_name["published counts (58 / 28)"] == "PASS"
    assert by_name["showcase (7, 9^3, 5) code"] == "PASS"
    assert by_name["derived cross-check at (3, 2)"] == "PASS"
    # the oracle finds the verified totals 87/56, so this check fails honestly
    assert by_name["oracle agreement with published counts"] == "FAIL"
    assert code == 1
    skipped = [r for r in data if r["status"] == "SKIP"]
    assert skipped  # the bound-only rows are skipped under the small budget
