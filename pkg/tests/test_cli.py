import io

import pytest

from eisrel.cli import run
from eisrel.qseries import dump_series, eisenstein, parse_series, product_P


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run([str(a) for a in argv], out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def test_relation_worked_example():
    code, out, _ = call("relation", 1, 2, 2, "--verify", "--prec", 50)
    assert code == 0
    assert out == "k=4\nE: -5\nP 2 2: 1\nVERIFIED (prec=50)\n"


def test_relation_normalized_and_record():
    code, out, _ = call("relation", 1, 2, 2, "--normalize")
    assert out == "k=4\nE: 1\nP 2 2: -1/5\n"
    code, out, _ = call("--format", "record", "relation", 3, 3, 3)
    assert out == "63 0 -27\n"


def test_relation_odd_weight():
    code, out, _ = call("relation", 1, 1, 2, "--verify")
    assert code == 0
    assert out == "k=3\nE: 0\nTRIVIAL (odd weight)\n"


def test_relation_golden(datadir):
    code, out, _ = call("relation", 3, 3, 3)
    assert code == 0 and out == (datadir / "relation_3_3_3.txt").read_text()


def test_dim_and_basis():
    assert call("dim", 12) == (0, "2\n", "")
    assert call("basis", 24)[1] == "E24\nE10*E14\nE12*E12\n"


@pytest.mark.parametrize("argv", [
    ("dim", 7),
    ("dim", 2),
    ("relation", 0, 1, 1),
    ("relation", 1, 1, 1),
    ("relations", 9),
    ("reduce", 9, 12),
    ("corollary-triple", 1, 12),
    ("nosuch",),
    ("eis", "x"),
    ("lattice", 2, "--tau", 0, 1, "--trunc", 5),
    ("decompose", 12, "--input", "/nonexistent/file"),
])
def test_usage_errors_exit_2(argv):
    code, out, err = call(*argv)
    assert code == 2
    assert err.strip() and len(err.strip().splitlines()) == 1


def test_eis_and_prod_emit_series():
    code, out, _ = call("eis", 4, "--prec", 3)
    assert out == "prec=3 weight=4\n0: 1/720\n1: 1/3\n2: 3\n"
    code, out, _ = call("prod", 2, 2, "--prec", 2)
    assert parse_series(out) == product_P(2, 2, 2)
    code, out, _ = call("eis", 6)
    assert parse_series(out).precision == 30


def test_bernoulli():
    assert call("bernoulli", 12)[1] == "-691/2730\n"
    assert call("bernoulli", 1)[1] == "-1/2\n"


def test_eis_decompose_round_trip(tmp_path):
    for k in (4, 12, 24):
        path = tmp_path / f"e{k}.txt"
        code, out, _ = call("eis", k, "--prec", 20)
        path.write_text(out)
        code, out, _ = call("--format", "record", "decompose", k, "--input", path)
        assert code == 0
        assert out.split() == ["1"] + ["0"] * (len(out.split()) - 1)


def test_decompose_not_in_span(tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text(dump_series(eisenstein(2, 20) * eisenstein(10, 20)))
    code, out, err = call("decompose", 12, "--input", path)
    assert code == 1
    assert "not in span" in err and "q^" in err


def test_decompose_prec_truncates(tmp_path):
    path = tmp_path / "p.txt"
    path.write_text(dump_series(product_P(2, 10, 30)))
    code, out, _ = call("decompose", 12, "--input", path, "--prec", 5)
    assert code == 0 and out.startswith("E12 : ")


def test_reduce():
    code, out, _ = call("reduce", 2, 12)
    assert out == "E12 : 143/42\nE6*E6 : -25/42\n"


def test_relations_rank():
    code, out, _ = call("relations", 12, "--rank")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "E12\tP2_10\tP4_8\tP6_6"
    assert lines[-1] == "rank: 2 (expected 2)"
    assert len(lines) == 1 + 66 + 1


def test_symbolic_commands():
    assert call("verify-lemma3", 3, 4, 2) == (0, "ZERO\n", "")
    code, out, _ = call("verify-lemma3", 1, 1, 1, "--dump")
    assert out.endswith("ZERO\n") and "-1 -1 0: 1" in out
    assert call("verify-pfd", 5, 5) == (0, "ZERO\n", "")
    assert call("check-d", 5, 2, 3) == (0, "true true true\n", "")


def test_corollary_triple():
    assert call("corollary-triple", 3, 20)[1] == "5 5 11\n"


def test_lattice():
    code, out, _ = call("lattice", 6, "--tau", 0, 1, "--trunc", 100)
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("lattice: ") and lines[-1].startswith("PASS")
    code, out, _ = call("lattice", 4, "--tau", 0, 1, "--trunc", 10, "--tol", 1e-12)
    assert code == 1 and out.splitlines()[-1].startswith("FAIL")
    code, out, _ = call("lattice", 2, "--tau", 0, 1, "--trunc", 5, "--inner", 50000,
                        "--eisenstein-summation", "--tol", 1e-3)
    assert code == 0


def test_output_deterministic():
    for argv in (("relations", 10), ("verify-lemma3", 2, 2, 2, "--dump"), ("eis", 8),
                 ("reduce", 2, 24), ("lattice", 4, "--tau", 0.5, 1, "--trunc", 50)):
        assert call(*argv) == call(*argv)


def test_main_module_entry_point():
    import subprocess
    import sys
    proc = subprocess.run([sys.executable, "-m", "eisrel", "dim", "26"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "2\n"
    proc = subprocess.run([sys.executable, "-m", "eisrel", "dim", "3"],
                          capture_output=True, text=True)
    assert proc.returncode == 2
