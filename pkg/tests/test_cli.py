"""Command line interface: subcommands, formats, exit codes."""

import json
import subprocess
import sys

import pytest

import helpers as z
from chevalley_chow import cli
from chevalley_chow.formats import parse_descriptor


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def fixture_path(name):
    return str(z.FIXTURE_DIR / f"{name}.json")


SL2 = None
SEMIAB = None


def setup_module():
    global SL2, SEMIAB
    SL2 = fixture_path("product_sl2")
    SEMIAB = fixture_path("semiabelian")


COMMANDS = [
    ("validate",),
    ("picard",),
    ("ns",),
    ("chow", "--max-degree", "2"),
    ("chow", "--max-degree", "2", "--rational"),
    ("hchow", "borel", "--max-degree", "2"),
    ("hpic", "borel"),
    ("hpic", "borel", "--integral"),
    ("complete", "borel"),
    ("structure",),
    ("cover",),
]


@pytest.mark.parametrize("fmt", ["json", "text"])
@pytest.mark.parametrize("cmd", COMMANDS, ids=lambda c: "-".join(c))
def test_every_subcommand_succeeds(capsys, cmd, fmt):
    head, tail = cmd[0], list(cmd[1:])
    sub = []
    if head in ("hchow", "hpic", "complete"):
        sub = [tail.pop(0)]
    code, out, err = run_cli(capsys, head, *sub, SL2, *tail, "--format", fmt)
    assert code == 0, err
    assert out
    if fmt == "json":
        data = json.loads(out)
        assert data.get("schema", "chevalley-chow/1") == "chevalley-chow/1"


def test_validate_reports_all_subgroups(capsys):
    code, out, _ = run_cli(capsys, "validate", SL2, "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["type"] == "validation_batch" and data["ok"] is True
    names = {r["subject"] for r in data["reports"]}
    assert "product_sl2" in names and "nlt" in names


def test_picard_json_values(capsys):
    code, out, _ = run_cli(capsys, "picard", fixture_path("product_pgl2"),
                           "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["ns"] == {"rank": 1, "torsion": [2]}
    assert data["sequence"]["pic_gaff"] == {"rank": 0, "torsion": [2]}


def test_nlt_example_through_cli(capsys):
    code, out, _ = run_cli(capsys, "hchow", "nlt", SL2, "--max-degree", "1",
                           "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["concrete_factor"]["dims"] == [1, 0]
    assert data["j_rank"] == 0
    code, out, _ = run_cli(capsys, "hpic", "nlt", SL2, "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["picard"]["mode"] == "rational"
    assert data["picard"]["ns"] == {"rank": 1, "torsion": []}
    assert data["picard"]["x_part"] == {"rank": 0, "torsion": []}


def test_complete_text_contains_witness(capsys):
    code, out, _ = run_cli(capsys, "complete", "neg_borel", SL2)
    assert code == 0
    assert "weyl_word" in out and "[0]" in out
    code, out, _ = run_cli(capsys, "complete", "torus", SL2)
    assert code == 0
    assert "answer: no" in out


def test_structure_batch(capsys):
    code, out, _ = run_cli(capsys, "structure", SEMIAB, "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["albanese_split"]["answer"] == "no"
    assert data["affinization"]["trivial"]["answer"] == "yes"
    assert "gaff" in data["subgroups"]
    assert data["subgroups"]["gaff"]["fibration"]["translation_index_bound"] == 1


def test_cover_output_reparses(tmp_path, capsys):
    code, out, _ = run_cli(capsys, "cover", fixture_path("product_pgl2"),
                           "--format", "json")
    assert code == 0
    doc = parse_descriptor(out)
    assert doc.group.rd.simple_roots.rows == ((2,),)
    p = tmp_path / "cover.json"
    p.write_text(out)
    code, _, _ = run_cli(capsys, "validate", str(p))
    assert code == 0


def test_deterministic_output(capsys):
    _, out1, _ = run_cli(capsys, "chow", SL2, "--max-degree", "3", "--format", "json")
    _, out2, _ = run_cli(capsys, "chow", SL2, "--max-degree", "3", "--format", "json")
    assert out1 == out2


def test_missing_file_exits_3(capsys):
    code, _, err = run_cli(capsys, "picard", "/no/such/file.json")
    assert code == 3
    assert "error" in err


def test_empty_file_exits_3(tmp_path, capsys):
    p = tmp_path / "empty.json"
    p.write_bytes(b"")
    code, _, err = run_cli(capsys, "validate", str(p))
    assert code == 3
    assert "line 1, column 1" in err


def test_schema_error_exits_3(tmp_path, capsys):
    p = tmp_path / "bad.json"
    p.write_bytes(b'{"group": {"root_datum": {"rank": 1}}}')
    code, _, err = run_cli(capsys, "validate", str(p))
    assert code == 3
    assert "abelian" in err


def test_invalid_group_exits_2(tmp_path, capsys):
    bad = {
        "group": {
            "root_datum": {"rank": 1, "simple_roots": [[1]],
                           "simple_coroots": [[1]]},
            "abelian": {"g": 0, "ns_rank": 0},
            "gluing": {"xd_rank": 0, "v": []},
        }
    }
    p = tmp_path / "invalid.json"
    p.write_text(json.dumps(bad))
    for cmd in (("validate",), ("picard",)):
        code, out, err = run_cli(capsys, *cmd, str(p))
        assert code == 2
        assert "cartan" in (out + err).lower()


def test_unknown_subgroup_exits_2(capsys):
    code, _, err = run_cli(capsys, "hpic", "nosuch", SL2)
    assert code == 2
    assert "no subgroup named" in err


def test_integral_mode_refusal_exits_2(capsys):
    code, _, err = run_cli(capsys, "hpic", "nlt", SL2, "--integral")
    assert code == 2
    assert "integral" in err


def test_cap_exceeded_exits_2(capsys):
    code, _, err = run_cli(capsys, "chow", SL2, "--max-degree", "1", "--cap", "1")
    assert code == 2
    assert "cap" in err or "large" in err


def test_console_script_end_to_end():
    proc = subprocess.run(
        [sys.executable, "-m", "chevalley_chow.cli", "ns", SL2, "--format", "json"],
        capture_output=True, text=True)
    assert proc.returncode == 0
    data = json.loads(proc.stdout)
    assert data["ns"] == {"rank": 1, "torsion": []}
