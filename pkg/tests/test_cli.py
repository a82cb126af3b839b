"""Command-line behavior: verbs, exit codes, deterministic output."""

import pytest

from plexalg import cli, lawcheck, parsing


@pytest.fixture()
def spec_file(tmp_path):
    def write(text, name="spec.alg"):
        p = tmp_path / name
        p.write_text(text + "\n", encoding="utf-8")
        return str(p)

    return write


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_build_prints_canonical_form(capsys, spec_file):
    path = spec_file("  II( Z ,   Q )")
    code, out, _ = run(capsys, "build", "-f", path)
    assert code == 0
    assert out == "II(Z, Q)\n"


def test_build_parse_error_exits_1(capsys, spec_file):
    code, _, err = run(capsys, "build", "-f", spec_file("II(Z"))
    assert code == 1
    assert "error" in err


def test_build_precondition_exits_2(capsys, spec_file):
    code, _, err = run(capsys, "build", "-f", spec_file("II(Q, Q)"))
    assert code == 2
    assert "DiscretenessViolated" in err


def test_missing_file_exits_1(capsys):
    code, _, err = run(capsys, "build", "-f", "/nonexistent/x.alg")
    assert code == 1 and err


def test_bad_usage_exits_1(capsys, spec_file):
    code, _, err = run(capsys, "check", "-f", spec_file("Z"), "--format", "xml")
    assert code == 1
    assert "usage error" in err


def test_eval_values(capsys, spec_file):
    a_path = spec_file("II(Z, Q)")
    b_path = spec_file("I(Q, idx 1, Q)", "b.alg")
    for argv, want in [
        (("eval", "-f", a_path, "-e", "comp (0, T)"), "(-1, T)\n"),
        (("eval", "-f", b_path, "-e", "mul (0,B) (0,B)"), "(0, B)\n"),
        (("eval", "-f", a_path, "-e", "tau unit"), "(0, 0)\n"),
        (("eval", "-f", a_path, "-e", "le (0, 1/2) (0, T)"), "true\n"),
        (("eval", "-f", a_path, "-e", "idems"), "(0, 0)\n(0, T)\n"),
        (("eval", "-f", a_path, "-e", "down (0, T)"), "(0, T)\n"),
    ]:
        code, out, _ = run(capsys, *argv)
        assert code == 0
        assert out == want


def test_eval_invalid_element_exits_2(capsys, spec_file):
    path = spec_file("II(Z, Q)")
    code, _, err = run(capsys, "eval", "-f", path, "-e", "comp (1/2, T)")
    assert code == 2
    assert "InvalidElement" in err


def test_eval_bad_expression_exits_1(capsys, spec_file):
    path = spec_file("II(Z, Q)")
    code, _, _ = run(capsys, "eval", "-f", path, "-e", "mul (0, T)")
    assert code == 1


def test_check_single_law(capsys, spec_file):
    path = spec_file("II(Z, Q)")
    code, out, _ = run(capsys, "check", "-f", path, "--laws", "eq2.2",
                       "--budget", "50", "--seed", "1")
    assert code == 0
    assert out == "LAW eq2.2 PASS samples=50 vacuous=none\n"


def test_check_all_skips_wrong_branch(capsys, spec_file):
    path = spec_file("I(Q, idx 1, Q)")
    code, out, _ = run(capsys, "check", "-f", path, "--laws", "all",
                       "--budget", "60", "--seed", "1")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("LAW fle PASS")
    assert "LAW prop10.1.3 SKIP wrong branch" in lines
    assert [l.split()[1] for l in lines] == \
        ["fle"] + list(lawcheck.named_law_ids())


def test_check_explicit_wrong_branch_exits_2(capsys, spec_file):
    path = spec_file("II(Z, Q)")
    code, _, err = run(capsys, "check", "-f", path, "--laws", "table1")
    assert code == 2
    assert "WrongBranch" in err


def test_check_unknown_law_exits_1(capsys, spec_file):
    code, _, _ = run(capsys, "check", "-f", spec_file("Z"), "--laws", "nope")
    assert code == 1


def test_check_law_failure_exits_3(capsys, spec_file, monkeypatch):
    bad = lawcheck.check_fle_laws(
        lawcheck.Mutant(parsing.parse_algebra("II(Z, Q)"), "mul"),
        budget=100, seed=1)
    assert not bad.passed
    monkeypatch.setattr(lawcheck, "check_fle_laws",
                        lambda a, budget, seed: bad)
    path = spec_file("II(Z, Q)")
    code, out, _ = run(capsys, "check", "-f", path, "--laws", "fle")
    assert code == 3
    assert "FAIL" in out


def test_check_tsv_format(capsys, spec_file):
    path = spec_file("II(Z, Q)")
    code, out, _ = run(capsys, "check", "-f", path, "--laws", "table2",
                       "--budget", "30", "--seed", "2", "--format", "tsv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "law\tstatus\tsamples\tcell\tcount"
    assert all(len(l.split("\t")) == 5 for l in lines[1:])
    assert lines[1].startswith("table2\tPASS\t")


def test_check_output_is_byte_identical(capsys, spec_file):
    path = spec_file("SLII(Z, Q, graphH(1/2))")
    argv = ("check", "-f", path, "--laws", "all", "--budget", "80",
            "--seed", "9")
    _, out1, _ = run(capsys, *argv)
    _, out2, _ = run(capsys, *argv)
    assert out1 == out2


def test_decompose_reports_branch(capsys, spec_file):
    code, out, _ = run(capsys, "decompose", "-f", spec_file("II(Z, Q)"))
    assert code == 0
    assert out.splitlines() == [
        "u: (0, T)",
        "branch: NonIdemBranch",
        "child: local-unit restriction of II(Z, Q)",
    ]


def test_decompose_group_chain_exits_2(capsys, spec_file):
    code, _, err = run(capsys, "decompose", "-f", spec_file("Z"))
    assert code == 2
    assert "OnlyUnitIdempotent" in err


def test_represent_rebuild_round_trip(capsys, spec_file, tmp_path):
    path = spec_file("I(II(Z, Q), full, Q)")
    code, out, _ = run(capsys, "represent", "-f", path)
    assert code == 0
    tree_path = tmp_path / "tree.txt"
    tree_path.write_text(out, encoding="utf-8")
    code, out2, _ = run(capsys, "rebuild", "-f", str(tree_path))
    assert code == 0
    assert out2 == "SLI(SLII(Z, Q, fullH), full, Q, fullH)\n"


def test_embed_lex_reports_target(capsys, spec_file):
    path = spec_file("II(Z, Q)")
    code, out, _ = run(capsys, "embed-lex", "-f", path, "--budget", "200",
                       "--seed", "3")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "target: Z lex Q^TB"
    assert lines[1].startswith("LAW embed-lex PASS")
