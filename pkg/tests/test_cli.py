import json

from monopart.cli import main


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_gen_solve_verify_pipeline(tmp_path, capsys):
    col = tmp_path / "c.h3"
    cert = tmp_path / "cert.json"
    assert main(["gen", "--kind", "h3", "--n", "6", "--seed", "1", "--out", str(col)]) == 0
    assert main(["solve", str(col), "--out", str(cert)]) == 0
    code, out, _ = run(["verify", str(col), str(cert)], capsys)
    assert code == 0 and out.strip() == "ok"


def test_split_exit_code(tmp_path, capsys):
    col = tmp_path / "s.bnn"
    assert main(["gen", "--kind", "bnn", "--n", "4", "--split", "1,2", "--out", str(col)]) == 0
    code, _, err = run(["solve", str(col)], capsys)
    assert code == 2
    assert "SplitStructure" in err


def test_split_fallback_certificate(tmp_path, capsys):
    col = tmp_path / "s.bnn"
    cert = tmp_path / "fallback.json"
    main(["gen", "--kind", "bnn", "--n", "4", "--split", "1,2", "--out", str(col)])
    assert main(["solve", str(col), "--out", str(cert)]) == 2
    code, out, _ = run(["verify", str(col), str(cert)], capsys)
    assert code == 0


def test_verify_rejects_tampered_cert(tmp_path, capsys):
    col = tmp_path / "c.bnn"
    cert = tmp_path / "cert.json"
    main(["gen", "--kind", "bnn", "--n", "3", "--seed", "2", "--out", str(col)])
    assert main(["solve", str(col), "--out", str(cert)]) == 0
    obj = json.loads(cert.read_text())
    for piece in obj["pieces"]:
        if piece["vertices"]:
            piece["vertices"] = piece["vertices"][:-1]
            break
    cert.write_text(json.dumps(obj))
    code, out, _ = run(["verify", str(col), str(cert)], capsys)
    assert code == 3 and out.startswith("violation")


def test_two_paths_flag(tmp_path, capsys):
    col = tmp_path / "c.bnn"
    cert = tmp_path / "two.json"
    main(["gen", "--kind", "bnn", "--n", "5", "--seed", "3", "--out", str(col)])
    assert main(["solve", str(col), "--two-paths", "--out", str(cert)]) == 0
    obj = json.loads(cert.read_text())
    assert all(p["kind"] == "path" for p in obj["pieces"])
    assert main(["verify", str(col), str(cert)]) == 0


def test_three_colour_solves(tmp_path):
    for kind in ("kn", "bnn"):
        col = tmp_path / f"c3.{kind}"
        cert = tmp_path / f"c3.{kind}.json"
        assert main(["gen", "--kind", kind, "--n", "6", "--palette", "3", "--seed", "2",
                     "--out", str(col)]) == 0
        assert main(["solve", str(col), "--out", str(cert)]) == 0
        assert main(["verify", str(col), str(cert)]) == 0


def test_rxn_report(tmp_path, capsys):
    col = tmp_path / "q.rxn"
    main(["gen", "--kind", "rxn", "--n", "4", "--r", "2", "--split", "1,2", "--out", str(col)])
    code, out, _ = run(["solve", str(col), "--samples", "50"], capsys)
    assert code == 0
    assert "min-cover: 2 pieces" in out
    assert "side-consistency: 50/50" in out


def test_enumerate_command(capsys):
    code, out, _ = run(["enumerate", "--suite", "near-mono-equiv", "--n", "3"], capsys)
    assert code == 0
    assert "512 checked, 0 failures" in out


def test_gen_deterministic(tmp_path):
    a = tmp_path / "a"
    b = tmp_path / "b"
    main(["gen", "--kind", "bnn", "--n", "5", "--seed", "9", "--out", str(a)])
    main(["gen", "--kind", "bnn", "--n", "5", "--seed", "9", "--out", str(b)])
    assert a.read_text() == b.read_text()


def test_bench_runs(capsys):
    code, out, _ = run(["bench", "--kind", "bnn", "--n", "8", "--count", "3"], capsys)
    assert code == 0 and "solves in" in out


def test_usage_error_on_missing_file(capsys):
    code, _, err = run(["solve", "/nonexistent/file"], capsys)
    assert code == 1
