import json
import subprocess
import sys

import pytest

from cuemark.cli import main
from cuemark.corpus import bundled_corpus_dir, bundled_prompts_dir
from cuemark.cue_list import load as load_cue_list_file

KEY_HEX = "00112233aabb"


@pytest.fixture(scope="module")
def corpus_dir():
    return str(bundled_corpus_dir("train"))


@pytest.fixture(scope="module")
def prompt_file():
    return str(sorted(bundled_prompts_dir().glob("*.txt"))[0])


@pytest.fixture()
def cue_file(tmp_path, corpus_dir):
    out = tmp_path / "cues.txt"
    rc = main(["build-cue-list", "--corpus", corpus_dir, "--out", str(out)])
    assert rc == 0
    return str(out)


def test_build_cue_list_round_trip_and_stability(tmp_path, corpus_dir, capsys):
    out1 = tmp_path / "a.txt"
    out2 = tmp_path / "b.txt"
    assert main(["build-cue-list", "--corpus", corpus_dir, "--out", str(out1)]) == 0
    assert main(["build-cue-list", "--corpus", corpus_dir, "--out", str(out2)]) == 0
    assert out1.read_bytes() == out2.read_bytes()
    cues = load_cue_list_file(out1)
    assert len(cues.members) > 10
    assert "cue list:" in capsys.readouterr().out


def test_build_cue_list_percentile_100_nearly_empty(tmp_path, corpus_dir):
    out = tmp_path / "tight.txt"
    assert main([
        "build-cue-list", "--corpus", corpus_dir, "--out", str(out),
        "--beta-percentile", "100",
    ]) == 0
    assert len(load_cue_list_file(out).members) <= 5


def test_build_cue_list_empty_corpus_fails(tmp_path, capsys):
    empty = tmp_path / "empty"
    empty.mkdir()
    rc = main(["build-cue-list", "--corpus", str(empty), "--out", str(tmp_path / "x")])
    assert rc == 2
    assert "error" in capsys.readouterr().err


def test_generate_requires_key(tmp_path, corpus_dir, prompt_file, capsys):
    rc = main([
        "generate", "--prompt-file", prompt_file, "--model", corpus_dir,
        "--out", str(tmp_path / "out.py"),
    ])
    assert rc == 2
    assert "no key" in capsys.readouterr().err


def test_generate_cue_scheme_requires_cue_list(tmp_path, corpus_dir, prompt_file, capsys):
    rc = main([
        "generate", "--prompt-file", prompt_file, "--model", corpus_dir,
        "--scheme", "cue", "--key", KEY_HEX, "--out", str(tmp_path / "out.py"),
    ])
    assert rc == 2
    assert "cue list required" in capsys.readouterr().err


def test_generate_delta_zero_matches_across_schemes(tmp_path, corpus_dir, prompt_file, cue_file):
    outputs = []
    for scheme in ("kgw", "cue"):
        out = tmp_path / f"{scheme}.py"
        rc = main([
            "generate", "--prompt-file", prompt_file, "--model", corpus_dir,
            "--scheme", scheme, "--cue-list", cue_file, "--key", KEY_HEX,
            "--delta", "0", "--seed", "7", "--max-tokens", "80",
            "--out", str(out),
        ])
        assert rc == 0
        outputs.append(out.read_bytes())
    assert outputs[0] == outputs[1]


def test_generate_detect_round_trip(tmp_path, corpus_dir, prompt_file, cue_file, capsys, monkeypatch):
    marked = tmp_path / "marked.py"
    monkeypatch.setenv("CUEMARK_KEY", KEY_HEX)
    rc = main([
        "generate", "--prompt-file", prompt_file, "--model", corpus_dir,
        "--scheme", "cue", "--cue-list", cue_file, "--key-env", "CUEMARK_KEY",
        "--delta", "6", "--seed", "4", "--max-tokens", "250", "--out", str(marked),
    ])
    assert rc == 0
    capsys.readouterr()

    rc = main([
        "detect", "--input", str(marked), "--scheme", "cue",
        "--cue-list", cue_file, "--key", KEY_HEX,
    ])
    report = json.loads(capsys.readouterr().out)
    assert rc == 0
    assert report["verdict"] is True
    assert report["z"] > 2.0

    rc = main([
        "detect", "--input", str(marked), "--scheme", "cue",
        "--cue-list", cue_file, "--key", "deadbeef",
    ])
    wrong = json.loads(capsys.readouterr().out)
    assert rc == 1
    assert abs(wrong["z"]) < 2.0


def test_detect_env_key_overrides_flag(tmp_path, corpus_dir, prompt_file, cue_file, capsys, monkeypatch):
    marked = tmp_path / "marked.py"
    assert main([
        "generate", "--prompt-file", prompt_file, "--model", corpus_dir,
        "--scheme", "kgw", "--key", KEY_HEX, "--delta", "6", "--seed", "5",
        "--max-tokens", "200", "--out", str(marked),
    ]) == 0
    capsys.readouterr()
    monkeypatch.setenv("K", KEY_HEX)
    # wrong --key flag is ignored because --key-env wins
    rc = main([
        "detect", "--input", str(marked), "--scheme", "kgw",
        "--key", "deadbeef", "--key-env", "K",
    ])
    assert rc == 0
    capsys.readouterr()


def test_detect_empty_file_is_insufficient(tmp_path, capsys):
    empty = tmp_path / "empty.py"
    empty.write_text("")
    rc = main(["detect", "--input", str(empty), "--scheme", "kgw", "--key", KEY_HEX])
    captured = capsys.readouterr()
    assert rc == 2
    assert "insufficient scope" in captured.err


def test_detect_code_only_scope(tmp_path, capsys):
    comments_only = tmp_path / "c.py"
    comments_only.write_text("# one\n# two\n# three\n")
    rc = main([
        "detect", "--input", str(comments_only), "--scheme", "kgw",
        "--key", KEY_HEX, "--scope", "code-only",
    ])
    captured = capsys.readouterr()
    assert rc == 2  # nothing scoreable once comments are out of scope
    assert "insufficient scope" in captured.err
    rc = main(["detect", "--input", str(comments_only), "--scheme", "kgw", "--key", KEY_HEX])
    assert rc in (0, 1)  # full scope still scores the comment tokens
    capsys.readouterr()


def test_detect_sweet_requires_model(tmp_path, capsys):
    f = tmp_path / "f.py"
    f.write_text("x = 1\n")
    rc = main(["detect", "--input", str(f), "--scheme", "sweet", "--key", KEY_HEX])
    assert rc == 2
    assert "--model is required" in capsys.readouterr().err


def test_attack_identity_on_comment_free_file(tmp_path, capsys):
    src = tmp_path / "in.py"
    src.write_text("x = 1\ny = x + 2\n")
    out = tmp_path / "out.py"
    rc = main(["attack", "--kind", "comment-removal", "--input", str(src), "--output", str(out)])
    assert rc == 0
    assert out.read_text() == src.read_text()
    assert "removed 0 tokens" in capsys.readouterr().out


def test_attack_strips_comments(tmp_path, capsys):
    src = tmp_path / "in.py"
    src.write_text("x = 1  # note\n# banner\ny = 2\n")
    out = tmp_path / "out.py"
    assert main(["attack", "--input", str(src), "--output", str(out)]) == 0
    assert "#" not in out.read_text()
    manifest = json.loads((tmp_path / "out.py.manifest.json").read_text())
    assert manifest["subcommand"] == "attack"


def test_evaluate_deterministic_and_shaped(tmp_path, corpus_dir, capsys):
    args = [
        "evaluate", "--corpus", corpus_dir, "--key", KEY_HEX,
        "--schemes", "kgw,cue", "--deltas", "0,4,8",
        "--conditions", "clean", "--n-docs", "2", "--max-tokens", "50",
        "--seed", "11", "--format", "csv",
    ]
    out1 = tmp_path / "r1.csv"
    out2 = tmp_path / "r2.csv"
    assert main(args + ["--out", str(out1)]) == 0
    assert main(args + ["--out", str(out2)]) == 0
    assert out1.read_bytes() == out2.read_bytes()
    lines = out1.read_text().strip().splitlines()
    assert len(lines) == 1 + 2 * 3  # header + schemes x deltas


def test_evaluate_json_report_and_manifest_hide_key(tmp_path, corpus_dir):
    out = tmp_path / "report.json"
    assert main([
        "evaluate", "--corpus", corpus_dir, "--key", KEY_HEX,
        "--schemes", "kgw", "--deltas", "4", "--conditions", "clean,code-only",
        "--n-docs", "2", "--max-tokens", "50", "--out", str(out),
    ]) == 0
    text = out.read_text() + (tmp_path / "report.json.manifest.json").read_text()
    assert KEY_HEX not in text
    report = json.loads(out.read_text())
    assert report["report_version"] == 1
    assert {r["condition"] for r in report["rows"]} == {"clean", "code-only"}


def test_unknown_condition_rejected(tmp_path, corpus_dir, capsys):
    rc = main([
        "evaluate", "--corpus", corpus_dir, "--key", KEY_HEX,
        "--conditions", "clean,bogus", "--n-docs", "1",
        "--out", str(tmp_path / "x.json"),
    ])
    assert rc == 2
    assert "unknown condition" in capsys.readouterr().err


def test_adapter_generation_matches_in_process(tmp_path, corpus_dir, prompt_file):
    direct = tmp_path / "direct.py"
    assert main([
        "generate", "--prompt-file", prompt_file, "--model", corpus_dir,
        "--scheme", "kgw", "--key", KEY_HEX, "--seed", "9",
        "--max-tokens", "60", "--out", str(direct),
    ]) == 0
    via_adapter = tmp_path / "adapter.py"
    adapter_cmd = (
        f"{sys.executable} -m cuemark serve-adapter --model {corpus_dir}"
    )
    assert main([
        "generate", "--prompt-file", prompt_file, "--adapter-cmd", adapter_cmd,
        "--scheme", "kgw", "--key", KEY_HEX, "--seed", "9",
        "--max-tokens", "60", "--out", str(via_adapter),
    ]) == 0
    assert direct.read_bytes() == via_adapter.read_bytes()


def test_module_entry_point_smoke():
    proc = subprocess.run(
        [sys.executable, "-m", "cuemark", "--version"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert "cuemark" in proc.stdout
