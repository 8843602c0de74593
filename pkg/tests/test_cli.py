from __future__ import annotations

import json


from prismham.certificate import lemma_Z_query
from prismham.cli import EXIT_DATA, EXIT_FAILED, EXIT_INCONCLUSIVE, EXIT_OK, EXIT_USAGE, main
from prismham.generators import cycle_graph, named_graphs
from prismham.textio import format_graph, format_query, parse_graph, parse_names, parse_rotation


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_build_writes_three_files(tmp_path, capsys):
    prefix = tmp_path / "g1"
    code, out, _ = run(capsys, "build", "--n", "1", "--out", str(prefix))
    assert code == EXIT_OK
    assert json.loads(out)["vertices"] == 41
    g = parse_graph((tmp_path / "g1.graph").read_text())
    assert g.n == 41
    parse_rotation((tmp_path / "g1.rot").read_text())
    assert parse_names((tmp_path / "g1.names").read_text())["apex-x"].role == "x"


def test_build_rejects_bad_n(tmp_path, capsys):
    code, _, err = run(capsys, "build", "--n", "0", "--out", str(tmp_path / "g"))
    assert code == EXIT_USAGE and "--n" in err


def test_build_unwritable(tmp_path, capsys):
    code, _, err = run(capsys, "build", "--n", "1", "--out", str(tmp_path / "missing" / "g"))
    assert code == EXIT_DATA and "missing" in err


def test_unknown_flag_is_usage_error(capsys):
    assert run(capsys, "verify", "lemma-4", "--frobnicate")[0] == EXIT_USAGE
    assert run(capsys, "verify", "lemma-9")[0] == EXIT_USAGE
    assert run(capsys, "verify", "lemma-4", "--node-cap", "0")[0] == EXIT_USAGE


def test_verify_pair_cover_claim(capsys, tmp_path):
    path = tmp_path / "r.json"
    code, out, _ = run(capsys, "verify", "lemma-4", "--json", str(path))
    assert code == EXIT_OK
    assert json.loads(out)["status"] == "verified"
    assert json.loads(path.read_text()) == json.loads(out)


def test_verify_inconclusive_exit_code(capsys):
    code, out, _ = run(capsys, "verify", "lemma-2", "--engine", "backtracking", "--node-cap", "10")
    assert code == EXIT_INCONCLUSIVE
    assert json.loads(out)["status"] == "inconclusive"


def test_verify_failed_exit_code(capsys):
    code, out, _ = run(capsys, "verify", "lemma-1", "--mutation", "c1-hexagon")
    assert code == EXIT_FAILED


def test_verify_all_small(capsys):
    code, out, _ = run(capsys, "verify", "all", "--n", "2", "--no-timing")
    d = json.loads(out)
    assert code == EXIT_OK and d["overall"] is True and len(d["claims"]) == 7
    code2, out2, _ = run(capsys, "verify", "all", "--n", "2", "--no-timing")
    assert out2 == out


def test_classify(tmp_path, capsys):
    for name in ("petersen", "c6"):
        (tmp_path / f"{name}.graph").write_text(format_graph(named_graphs()[name]))
    code, out, _ = run(capsys, "classify", str(tmp_path / "petersen.graph"))
    verdicts = [r["verdict"] for r in json.loads(out)["hierarchy"].values()]
    assert code == EXIT_OK
    assert json.loads(out)["hierarchy"]["hamiltonian"]["verdict"] == "no"
    assert sorted(verdicts) == ["no", "yes", "yes", "yes", "yes"]
    code, out, _ = run(capsys, "classify", str(tmp_path / "c6.graph"))
    assert all(r["verdict"] == "yes" for r in json.loads(out)["hierarchy"].values())
    assert json.loads(out)["cactus"]["is_even"] is True


def test_classify_malformed_cites_line(tmp_path, capsys):
    p = tmp_path / "bad.graph"
    p.write_text("g 2 1\nv a\nv b\ne a\n")
    code, _, err = run(capsys, "classify", str(p))
    assert code == EXIT_DATA and "line 4" in err
    code, _, err = run(capsys, "classify", str(tmp_path / "nope.graph"))
    assert code == EXIT_DATA


def test_query_z_prism_file(tmp_path, capsys):
    q = lemma_Z_query()
    (tmp_path / "pz.graph").write_text(format_graph(q.graph))
    (tmp_path / "l1.q").write_text(format_query(q))
    code, out, _ = run(capsys, "query", str(tmp_path / "pz.graph"), str(tmp_path / "l1.q"))
    assert code == EXIT_OK and json.loads(out)["verdict"] == "proven-absent"


def test_query_c4(tmp_path, capsys):
    (tmp_path / "c4.graph").write_text(format_graph(cycle_graph(4)))
    (tmp_path / "adj.q").write_text("q path\nstart v1\nend v2\ncover ALL\n")
    (tmp_path / "anti.q").write_text("q path\nstart v1\nend v3\ncover ALL\n")
    (tmp_path / "hc.q").write_text("q hc\n")
    (tmp_path / "bad.q").write_text("q path\nstart v1\nend v7\n")
    g = str(tmp_path / "c4.graph")
    assert json.loads(run(capsys, "query", g, str(tmp_path / "adj.q"))[1])["verdict"] == "found"
    # antipodal vertices of C4 are not joined by a Hamilton path
    assert json.loads(run(capsys, "query", g, str(tmp_path / "anti.q"))[1])["verdict"] == "proven-absent"
    assert json.loads(run(capsys, "query", g, str(tmp_path / "hc.q"))[1])["verdict"] == "found"
    code, _, err = run(capsys, "query", g, str(tmp_path / "bad.q"))
    assert code == EXIT_DATA and "v7" in err


def test_query_budget(tmp_path, capsys):
    q = lemma_Z_query()
    (tmp_path / "pz.graph").write_text(format_graph(q.graph))
    (tmp_path / "l1.q").write_text(format_query(q))
    code, out, _ = run(
        capsys, "query", str(tmp_path / "pz.graph"), str(tmp_path / "l1.q"), "--engine", "backtracking", "--node-cap", "3"
    )
    assert code == EXIT_INCONCLUSIVE and json.loads(out)["verdict"] == "inconclusive"


def test_corpus(tmp_path, capsys):
    code, _, _ = run(capsys, "corpus", "--seed", "4", "--count", "12", "--out", str(tmp_path / "c"))
    files = sorted((tmp_path / "c").iterdir())
    assert code == EXIT_OK and len(files) == 12
    first = files[0].read_text()
    run(capsys, "corpus", "--seed", "4", "--count", "12", "--out", str(tmp_path / "d"))
    assert (tmp_path / "d" / files[0].name).read_text() == first


def test_module_entry_point():
    import subprocess
    import sys

    res = subprocess.run([sys.executable, "-m", "prismham", "verify", "lemma-4"], capture_output=True, text=True)
    assert res.returncode == 0 and '"verified"' in res.stdout
