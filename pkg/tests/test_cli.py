import csv
import io
import json
import subprocess
import sys

import pytest

from unipiso.cli import SweepConfig, main
from unipiso.errors import NotOddPrime, NotOddPrimePower


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--deterministic")
    return code, json.loads(out)


class TestSimpleCommands:
    def test_blocks(self, capsys):
        code, doc = run_json(capsys, "blocks", "--n", "3", "--q", "3", "--l", "7", "--kind", "U")
        assert code == 0 and doc["schema"] == 1 and doc["command"] == "blocks"
        [rec] = doc["records"]
        assert rec["core"] == "[]" and rec["weight"] == 1 and rec["defect_lpart"] == "7"
        assert rec["flavor"] == "unitary" and rec["e"] == 3

    def test_blocks_defect_zero(self, capsys):
        code, doc = run_json(capsys, "blocks", "--n", "1", "--q", "3", "--l", "7", "--kind", "U")
        assert code == 0
        assert [(r["core"], r["weight"], r["defect_lpart"]) for r in doc["records"]] == [("[1]", 0, "1")]

    def test_blocks_even_q(self, capsys):
        code, out, err = run(capsys, "blocks", "--n", "3", "--q", "4", "--l", "7")
        assert code == 3
        assert json.loads(out)["error"] == "NotOddPrimePower"
        assert "NotOddPrimePower" in err

    def test_degrees(self, capsys):
        code, doc = run_json(capsys, "degrees", "--partition", "[2,1]", "--q", "3", "--l", "7")
        assert code == 0
        gl, u = doc["records"]
        assert (gl["degree"], u["degree"]) == ("90", "6")
        assert gl["residue"] == u["residue"] == 1

    def test_map(self, capsys):
        code, doc = run_json(capsys, "map", "--partition", "[1,1]", "--q", "3")
        assert code == 0 and doc["records"][0]["image"] == "((1,1), -1)"

    def test_polys_orbits(self, capsys):
        code, doc = run_json(capsys, "polys", "--q", "3", "--l", "7", "--a", "1")
        assert code == 0
        assert [r["class"] for r in doc["records"]] == ["L1", "L1"]

    def test_polys_degree(self, capsys):
        code, doc = run_json(capsys, "polys", "--q", "3", "--d", "2")
        assert code == 0 and len(doc["records"]) == 36
        assert doc["field"]["modulus"]

    def test_core_and_hooks(self, capsys):
        code, doc = run_json(capsys, "core", "--partition", "[4,1]", "--e", "3")
        assert code == 0 and doc["records"][0]["core"] == "[1,1]"
        code, doc = run_json(capsys, "hooks", "--partition", "[1,1]", "--e", "3")
        rec = doc["records"][0]
        assert rec["hooks"] == [1, 2] and rec["d"] == 1
        assert {a["mu"] for a in rec["rim_hook_additions"]} == {"[4,1]", "[3,2]", "[1,1,1,1,1]"}

    def test_pieri(self, capsys):
        code, doc = run_json(capsys, "pieri", "--partition", "[1]", "--q", "3")
        assert code == 0 and doc["report"]["overall"] is True
        assert doc["records"][0]["gl_terms"] == {"[2,1]": 2, "[3]": 1, "[1,1,1]": 1}

    def test_bad_partition_is_usage_error(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["degrees", "--partition", "4,1", "--q", "3"])
        assert exc.value.code == 2

    def test_missing_argument(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["blocks", "--n", "3"])
        assert exc.value.code == 2


class TestCheck:
    def test_thm4(self, capsys):
        code, doc = run_json(capsys, "check", "thm4", "--n-max", "8", "--q", "3", "--l", "7")
        assert code == 0 and doc["overall"] is True and doc["failures"] == []
        names = {s["check"] for s in doc["summary"]}
        assert {"straight_hook_d_delta", "deformation_d_delta", "hook_step_ratio",
                "ratio_constant_on_core", "lpart_equality"} <= names

    def test_thm4_trivial(self, capsys):
        code, doc = run_json(capsys, "check", "thm4", "--n-max", "1", "--q", "3", "--l", "7")
        assert code == 0 and doc["overall"] is True

    def test_thm3_linear(self, capsys):
        code, out, err = run(capsys, "check", "thm3", "--n-max", "4", "--q", "3", "--l", "5")
        assert code == 3 and json.loads(out)["error"] == "NotUnitaryFlavor"

    def test_thm3_skip_linear(self, capsys):
        code, doc = run_json(capsys, "check", "thm3", "--n-max", "4", "--q", "3",
                             "--l", "5", "7", "--skip-linear")
        assert code == 0 and doc["config"]["pairs"] == [[3, 7]]

    def test_thm3_parallel_matches_serial(self, capsys):
        argv = ["check", "thm3", "--n-max", "4", "--q", "3", "5", "--l", "7", "--full"]
        code1, serial = run_json(capsys, *argv)
        code2, parallel = run_json(capsys, *argv, "--jobs", "3")
        assert code1 == code2 == 0
        assert serial == parallel

    def test_sweep_config_validation(self):
        with pytest.raises(ValueError):
            SweepConfig(n_max=0)
        with pytest.raises(NotOddPrimePower):
            SweepConfig(q_list=[6])
        with pytest.raises(NotOddPrime):
            SweepConfig(l_list=[9])


class TestOutput:
    def test_deterministic_bytes(self, capsys):
        argv = ["blocks", "--n", "5", "--q", "5", "--l", "3", "--deterministic"]
        _, a, _ = run(capsys, *argv)
        _, b, _ = run(capsys, *argv)
        assert a == b and "generated_at" not in a

    def test_timestamp_without_flag(self, capsys):
        _, out, _ = run(capsys, "map", "--partition", "[2]", "--q", "3")
        assert "generated_at" in json.loads(out)

    def test_csv_matches_json(self, capsys):
        base = ["blocks", "--n", "6", "--q", "3", "--l", "7", "--kind", "GL", "--deterministic"]
        _, doc = run_json(capsys, *base[:-1])
        _, text, _ = run(capsys, *base, "--format", "csv")
        rows = list(csv.DictReader(io.StringIO(text)))
        assert [{k: str(v) for k, v in r.items()} for r in doc["records"]] == rows

    def test_table(self, capsys):
        code, text, _ = run(capsys, "degrees", "--partition", "[2,1]", "--q", "3", "--format", "table")
        assert code == 0
        header, rule, *rows = text.splitlines()
        assert header.split()[:3] == ["partition", "q", "group"] and len(rows) == 2

    def test_output_file(self, capsys, tmp_path):
        path = tmp_path / "out.json"
        code, out, _ = run(capsys, "map", "--partition", "[3]", "--q", "3", "--output", str(path))
        assert code == 0 and out == ""
        assert json.loads(path.read_text())["records"][0]["sign"] == 1

    def test_global_flags_before_subcommand(self, capsys):
        code, out, _ = run(capsys, "--deterministic", "--format", "csv", "map",
                           "--partition", "[1,1]", "--q", "3")
        assert code == 0 and out.startswith("partition,")


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "unipiso", "map", "--partition", "[1,1]",
                           "--q", "3", "--deterministic"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["records"][0]["sign"] == -1
