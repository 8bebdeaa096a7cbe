import json
import subprocess
import sys

import pytest

from extsq.cli import build_parser, main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def matrix_file(tmp_path):
    path = tmp_path / "m.json"
    path.write_text(
        json.dumps(
            {
                "rows": 3,
                "cols": 3,
                "entries": [["1", "2", "0"], ["3", "4", "1"], ["1", "1", "2"]],
            }
        )
    )
    return str(path)


@pytest.fixture
def singular_file(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(
        json.dumps({"rows": 2, "cols": 2, "entries": [["1", "2"], ["0", "0"]]})
    )
    return str(path)


@pytest.fixture
def repr_file(tmp_path):
    path = tmp_path / "r.json"
    path.write_text(
        json.dumps(
            {
                "n": 2,
                "eta": 0,
                "sign_blocks": [
                    {"eps": 0, "s": "-2/5"},
                    {"eps": 0, "s": "-1/4"},
                    {"eps": 0, "s": "1/4"},
                    {"eps": 0, "s": "2/5"},
                ],
                "ds_blocks": [],
            }
        )
    )
    return str(path)


@pytest.fixture
def satake_file(tmp_path):
    path = tmp_path / "s.json"
    path.write_text(
        json.dumps(
            [
                {"p": 2, "alpha": ["3/5+4/5i", "3/5-4/5i"], "chi": "1"},
                {"p": 5, "alpha": ["1", "-1"], "chi": "1"},
            ]
        )
    )
    return str(path)


def _parse_kv(text):
    out = {}
    for line in text.splitlines():
        if line.startswith("#") or "\t" not in line:
            continue
        key, rest = line.split("\t", 1)
        out[key] = rest
    return out


def test_decompose_text_output(capsys, matrix_file):
    code, out, err = run_cli(capsys, "decompose", matrix_file)
    assert code == 0
    kv = _parse_kv(out)
    assert kv["a"].split(" | ")[0] == "-21 0 0"
    assert kv["reconstruction"].startswith("PASS")
    assert kv["normalized-match"].startswith("PASS")


def test_decompose_json_output(capsys, matrix_file):
    code, out, err = run_cli(capsys, "decompose", matrix_file, "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["command"] == "decompose"
    assert set(doc["output"]) >= {"b_plus", "a", "b_minus", "n_upper", "h", "n_lower"}
    assert all(c["passed"] for c in doc["checks"])
    assert doc["output"]["a"]["entries"][0][0] == "-21"


def test_decompose_singular_input_fails_cleanly(capsys, singular_file):
    code, out, err = run_cli(capsys, "decompose", singular_file)
    assert code == 2
    assert "trailing principal minor d_1" in err


def test_decompose_missing_file(capsys, tmp_path):
    code, out, err = run_cli(capsys, "decompose", str(tmp_path / "nope.json"))
    assert code == 2
    assert err.startswith("error:")


def test_gamma_oracle_check(capsys):
    code, out, err = run_cli(capsys, "gamma", "--delta", "0", "--s", "0.7+0.2i", "--oracle")
    assert code == 0
    kv = _parse_kv(out)
    assert kv["oracle-agreement"].startswith("PASS")
    assert complex(kv["closed"].replace("i", "j")) == pytest.approx(
        complex(kv["quadrature"].replace("i", "j")), abs=1e-5
    )


def test_gamma_closed_form_only(capsys):
    code, out, err = run_cli(capsys, "gamma", "--delta", "1", "--s", "0.5")
    assert code == 0
    assert "closed" in _parse_kv(out)


def test_gamma_rejects_bad_s(capsys):
    code, out, err = run_cli(capsys, "gamma", "--delta", "0", "--s", "zzz")
    assert code == 2


def test_lfactor_command(capsys, repr_file):
    code, out, err = run_cli(capsys, "lfactor", repr_file, "--s", "0.8")
    assert code == 0
    kv = _parse_kv(out)
    assert "Gamma_R(s-13/20)" in kv["factors"]
    assert kv["omega"] == "1.0+0.0i"
    assert float(kv["value"].split("+")[0]) == pytest.approx(26.143444407541367)


def test_poles_command(capsys, repr_file):
    code, out, err = run_cli(capsys, "poles", repr_file)
    assert code == 0
    kv = _parse_kv(out)
    assert kv["count"] == "1"
    assert kv["pole-0"] == "13/20\torder 1\tsign-pair[1,2]"


def test_fe_check_command(capsys, repr_file):
    code, out, err = run_cli(capsys, "fe-check", repr_file, "--samples", "5")
    assert code == 0
    kv = _parse_kv(out)
    assert kv["identity"].startswith("PASS")
    assert kv["fourth-root"].startswith("PASS")


def test_euler_command(capsys, satake_file):
    code, out, err = run_cli(capsys, "euler", satake_file, "--s", "2")
    assert code == 0
    kv = _parse_kv(out)
    assert float(kv["factor-2"].split("+")[0]) == pytest.approx(4.0 / 3.0)
    assert float(kv["factor-5"].split("+")[0]) == pytest.approx(25.0 / 26.0)
    assert float(kv["partial-product"].split("+")[0]) == pytest.approx(
        (4.0 / 3.0) * (25.0 / 26.0)
    )


def test_euler_standard_kind(capsys, satake_file):
    code, out, err = run_cli(capsys, "euler", satake_file, "--s", "2", "--kind", "standard")
    assert code == 0
    assert _parse_kv(out)["kind"] == "standard"


def test_euler_guard_failure_is_an_input_error(capsys, satake_file):
    code, out, err = run_cli(capsys, "euler", satake_file, "--s", "0.01")
    assert code == 2
    assert "error:" in err


def test_shuffle_verify(capsys):
    code, out, err = run_cli(capsys, "shuffle-verify", "--n", "2", "--trials", "5")
    assert code == 0
    kv = _parse_kv(out)
    for name in ("superdiag", "altsum", "recursion", "whittaker", "kappa"):
        assert kv[name].startswith("PASS")


def test_suite_subset(capsys):
    code, out, err = run_cli(capsys, "suite", "--check", "euler", "--check", "kappa")
    assert code == 0
    kv = _parse_kv(out)
    assert set(k for k in kv if not k.startswith("#")) >= {"euler", "kappa"}
    assert kv["euler"].startswith("PASS")


def test_suite_rejects_unknown_check():
    with pytest.raises(SystemExit):
        build_parser().parse_args(["suite", "--check", "nonsense"])


def test_suite_json_deterministic_across_processes():
    cmd = [
        sys.executable,
        "-m",
        "extsq.cli",
        "suite",
        "--seed",
        "7",
        "--check",
        "euler",
        "--check",
        "anchors-gdelta",
        "--json",
    ]
    a = subprocess.run(cmd, capture_output=True, text=True, timeout=120)
    b = subprocess.run(cmd, capture_output=True, text=True, timeout=120)
    assert a.returncode == 0 and b.returncode == 0
    assert a.stdout == b.stdout
    doc = json.loads(a.stdout)
    assert doc["seed"] == 7
    assert "wall_time_ms" not in json.dumps(doc)


def test_parser_covers_all_subcommands():
    parser = build_parser()
    sub = {
        a.dest: a
        for a in parser._subparsers._group_actions
    }
    choices = next(iter(sub.values())).choices
    assert set(choices) == {
        "decompose",
        "shuffle-verify",
        "gamma",
        "lfactor",
        "poles",
        "fe-check",
        "euler",
        "suite",
    }
