"""CLI subcommands: outputs, round trips, exit codes."""

import json

from ksforge.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, err = run_cli(capsys, *argv)
    assert code == 0, err
    return json.loads(out)


class TestGenerate:
    def test_full_atlas(self, capsys):
        obj = run_json(capsys, "generate", "--seeds", "1-9")
        assert len(obj["rays"]) == 165
        assert obj["dimension"] == 3
        assert obj["rays"][0]["color_first_claim"] is not None

    def test_seed_subsets(self, capsys):
        assert len(run_json(capsys, "generate", "--seeds", "1,2,3")["rays"]) == 69
        assert len(run_json(capsys, "generate", "--seeds", "4")["rays"]) == 25

    def test_deterministic(self, capsys):
        a = run_json(capsys, "generate", "--seeds", "1-9")
        b = run_json(capsys, "generate", "--seeds", "1-9")
        assert a == b


class TestBases:
    def test_counts(self, capsys):
        assert len(run_json(capsys, "bases", "--seeds", "1-9")["edges"]) == 130
        assert len(run_json(capsys, "bases", "--seeds", "1")["edges"]) == 16

    def test_atlas_file_round_trip(self, capsys, tmp_path):
        path = tmp_path / "atlas.json"
        code, _, _ = run_cli(capsys, "generate", "--seeds", "1", "--out", str(path))
        assert code == 0
        obj = run_json(capsys, "bases", "--in", str(path))
        assert len(obj["edges"]) == 16


class TestClassify:
    def test_both_policies(self, capsys):
        obj = run_json(capsys, "classify", "--policy", "both")
        assert obj["first_claim"] == {"Red": 40, "Green": 4, "Blue": 4, "Mixed": 82}
        assert obj["strict"]["Mixed"] == 118

    def test_partial_atlas_rejected(self, capsys):
        code, _, err = run_cli(capsys, "classify", "--seeds", "1,2")
        assert code == 2
        assert "nine-seed" in err


class TestStates:
    def test_yo_pipeline(self, capsys, tmp_path):
        path = tmp_path / "yo.json"
        run_cli(capsys, "bases", "--seeds", "1", "--out", str(path))
        obj = run_json(capsys, "states", "--in", str(path))
        assert obj["count"] == 24
        assert obj["separating"] and obj["unital"] and not obj["ks"]
        assert len(obj["states"]) == 24

    def test_fixture_and_no_states(self, capsys):
        obj = run_json(capsys, "states", "--fixture", "b10", "--no-states")
        assert obj["count"] == 36
        assert "states" not in obj
        assert [2, 18] in obj["tifs"]

    def test_brute_flag(self, capsys):
        obj = run_json(capsys, "states", "--fixture", "yo", "--brute", "--no-states")
        assert obj["count"] == 24

    def test_ks_fixture(self, capsys):
        obj = run_json(capsys, "states", "--fixture", "cabello18", "--no-states")
        assert obj["ks"] is True and obj["count"] == 0

    def test_missing_input(self, capsys):
        code, _, err = run_cli(capsys, "states")
        assert code == 2


class TestTifs:
    def test_b10(self, capsys):
        obj = run_json(capsys, "tifs", "--fixture", "b10")
        assert obj["tifs"] == [
            [2, 18], [3, 18], [3, 19], [5, 9], [5, 16],
            [6, 7], [6, 13], [12, 16], [13, 14],
        ]


class TestGadget:
    def test_dim4_default_center(self, capsys):
        obj = run_json(capsys, "gadget", "--dim", "4")
        assert len(obj["vectors"]) == 20
        assert len(obj["blocks"]) == 13
        assert obj["forcing"]["nullspace"] == [["1", "1", "1", "1"]]
        assert obj["all_cliques"] == 17

    def test_dim5(self, capsys):
        obj = run_json(capsys, "gadget", "--dim", "5")
        assert len(obj["blocks"]) == 14

    def test_custom_center(self, capsys):
        obj = run_json(capsys, "gadget", "--dim", "4", "--center", '["1","i","-1","-i"]')
        assert len(obj["blocks"]) == 13

    def test_unequal_moduli_exit_2(self, capsys):
        code, _, err = run_cli(capsys, "gadget", "--dim", "4", "--center", "[1,1,2,2]")
        assert code == 2
        assert "moduli" in err or "|x" in err


class TestFixedSets:
    def test_peres(self, capsys):
        obj = run_json(capsys, "peres24")
        assert len(obj["vertices"]) == 24 and len(obj["edges"]) == 24

    def test_cabello(self, capsys):
        obj = run_json(capsys, "cabello18")
        assert len(obj["vertices"]) == 18 and len(obj["edges"]) == 9


class TestMub:
    def test_dim3(self, capsys):
        obj = run_json(capsys, "mub", "--dim", "3")
        assert obj["verification"]["all_unbiased"] is True

    def test_dim4(self, capsys):
        obj = run_json(capsys, "mub", "--dim", "4")
        assert obj["verification"]["all_unbiased"] is False
        assert obj["verification"]["pairs"]["B1|B4"] is False


class TestExport:
    def test_json_round_trip(self, capsys, tmp_path):
        path = tmp_path / "h.json"
        run_cli(capsys, "bases", "--seeds", "1", "--out", str(path))
        obj = run_json(capsys, "export", "--in", str(path), "--format", "json")
        assert obj == json.load(open(path))

    def test_dot(self, capsys):
        code, out, _ = run_cli(
            capsys, "export", "--fixture", "yo", "--format", "dot"
        )
        assert code == 0
        assert out.count("[label=") == 25
        assert out.count("--") == 48

    def test_dot_chain(self, capsys):
        code, out, _ = run_cli(
            capsys, "export", "--fixture", "yo", "--format", "dot",
            "--dot-style", "chain",
        )
        assert code == 0
        assert out.count("--") == 32

    def test_malformed_json_exit_2(self, capsys, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text("{nope")
        code, _, err = run_cli(capsys, "export", "--in", str(path))
        assert code == 2

    def test_unknown_flag_exit_2(self, capsys):
        # argparse SystemExit(2) is converted into a plain exit code
        assert main(["export", "--wat"]) == 2
