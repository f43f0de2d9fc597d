import shutil

import pytest

from centering.cli import main

JA_CONFIG = """\
ORDER TOPIC EMPATHY SUBJ OBJ2 OBJ ADJ
ZERO_TOPIC on
LEXICON yaru SUBJ
LEXICON iku SUBJ
LEXICON kureru OBJ2_ELSE_OBJ
LEXICON kuru OBJ2_ELSE_OBJ
"""


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_resolve_records_for_introduce_example(capsys, corpus_dir):
    code, out, err = run(
        capsys, "resolve", str(corpus_dir / "ex08.disc"), "--lang", "ja", "--format", "records"
    )
    assert code == 0
    assert err == ""
    lines = out.splitlines()
    assert len([l for l in lines if l.startswith("2\t")]) == 3


def test_resolve_trace_default(capsys, corpus_dir):
    code, out, _ = run(capsys, "resolve", str(corpus_dir / "ex09.disc"))
    assert code == 0
    assert out.startswith("# ")
    assert "[zero topic: z1]" in out


def test_resolve_verbose_includes_rejected(capsys, corpus_dir):
    code, out, _ = run(capsys, "resolve", str(corpus_dir / "ex05.disc"), "-v")
    assert code == 0
    assert "rejected [DOMINATED]" in out


def test_missing_file_exits_2(capsys, tmp_path):
    code, _, err = run(capsys, "resolve", str(tmp_path / "nope.disc"))
    assert code == 2
    assert "missing file" in err


def test_parse_error_exits_2(capsys, tmp_path):
    empty = tmp_path / "empty.disc"
    empty.write_text("", encoding="utf-8")
    code, _, err = run(capsys, "resolve", str(empty))
    assert code == 2
    assert "no utterances" in err


def test_resolution_error_exits_3(capsys, tmp_path):
    bad = tmp_path / "bad.disc"
    bad.write_text(
        "DISCOURSE bad\n"
        "CONTEXT CB=A CF=A,B\n"
        "U 1\n"
        "  PRED miru\n"
        "  ARG SUBJ - A\n"
        "  ARG OBJ ZERO z1\n",
        encoding="utf-8",
    )
    code, _, err = run(capsys, "resolve", str(bad))
    assert code == 3
    assert "no admissible interpretation" in err


def test_unknown_flag_exits_64(capsys, corpus_dir):
    code, _, err = run(capsys, "resolve", str(corpus_dir / "ex08.disc"), "--frobnicate")
    assert code == 64
    assert "error" in err


def test_unknown_subcommand_exits_64(capsys):
    code, _, _ = run(capsys, "explain")
    assert code == 64


def test_check_corpus_all_pass(capsys, corpus_dir):
    code, out, _ = run(capsys, "check", str(corpus_dir))
    assert code == 0
    lines = out.splitlines()
    table = [l for l in lines if l.split()[-1] in ("PASS", "FAIL")]
    assert len(table) == 7
    assert all(l.endswith("PASS") for l in table)
    assert lines[-1] == "7/7 fixtures match"


def test_check_detects_mismatch(capsys, corpus_dir, tmp_path):
    for path in corpus_dir.glob("ex05.*"):
        shutil.copy(path, tmp_path / path.name)
    expected = tmp_path / "ex05.expected"
    expected.write_text(
        expected.read_text(encoding="utf-8").replace("CONTINUE", "RETAIN"),
        encoding="utf-8",
    )
    code, out, _ = run(capsys, "check", str(tmp_path))
    assert code == 1
    assert "FAIL" in out
    assert "records differ" in out


def test_check_missing_directory_exits_2(capsys, tmp_path):
    code, _, err = run(capsys, "check", str(tmp_path / "nowhere"))
    assert code == 2
    assert "missing directory" in err


def test_custom_config_matches_builtin(capsys, corpus_dir, tmp_path):
    config = tmp_path / "ja.cfg"
    config.write_text(JA_CONFIG, encoding="utf-8")
    outputs = []
    for lang in ("ja", str(config)):
        code, out, _ = run(
            capsys,
            "resolve",
            *(str(p) for p in sorted(corpus_dir.glob("*.disc"))),
            "--lang",
            lang,
            "--format",
            "records",
        )
        assert code == 0
        outputs.append(out)
    assert outputs[0] == outputs[1]


def test_missing_custom_config_exits_2(capsys, tmp_path):
    code, _, err = run(capsys, "resolve", "x.disc", "--lang", str(tmp_path / "no.cfg"))
    assert code == 2
    assert "language config not found" in err


def test_lexicon_extension_changes_ranking(capsys, tmp_path):
    disc = tmp_path / "t.disc"
    disc.write_text(
        "DISCOURSE t\n"
        "U 1\n"
        "  PRED morau\n"
        "  ARG SUBJ ga A\n"
        "  ARG OBJ o B\n",
        encoding="utf-8",
    )
    code, base_out, _ = run(capsys, "resolve", str(disc), "--format", "records")
    assert code == 0
    assert base_out.splitlines()[0].split("\t")[2] == "A,B"

    lexicon = tmp_path / "extra.lex"
    lexicon.write_text("morau\tOBJ2_ELSE_OBJ\n", encoding="utf-8")
    code, out, _ = run(
        capsys, "resolve", str(disc), "--format", "records", "--lexicon", str(lexicon)
    )
    assert code == 0
    assert out.splitlines()[0].split("\t")[2] == "B,A"


def test_bad_lexicon_path_exits_2(capsys, corpus_dir, tmp_path):
    code, _, err = run(
        capsys,
        "resolve",
        str(corpus_dir / "ex08.disc"),
        "--lexicon",
        str(tmp_path / "no.lex"),
    )
    assert code == 2
    assert "lexicon not found" in err


def test_records_output_stable_across_runs(capsys, corpus_dir):
    args = ("resolve", str(corpus_dir / "ex09.disc"), "--format", "records")
    _, first, _ = run(capsys, *args)
    _, second, _ = run(capsys, *args)
    assert first == second


def test_help_exits_0(capsys):
    code, out, _ = run(capsys, "--help")
    assert code == 0
