import json

import pytest

from mazur.cli import main
from mazur.commands.interactive import cmd_interactive
from mazur.geometry.space import to_scalar
from mazur.utils.config import load_config
from mazur.utils.io import read_json


@pytest.mark.parametrize(
    "argv, code",
    [
        (["oracle", "--grid", "5"], 0),
        (["oracle", "--grid", "20"], 2),
        (["oracle", "--grid", "5", "--inject-fault", "metric"], 1),
        (["oracle", "--grid", "5", "--inject-fault", "open-threshold"], 2),
        (["play", "--rounds", "0"], 2),
        (["play", "--p1", "nope"], 2),
        (["play", "--space", "sphere"], 2),
    ],
)
def test_exit_codes(argv, code):
    assert main(argv + ["--no-color"]) == code


@pytest.mark.parametrize("direction", ["fig1", "fig2", "product", "increasing"])
def test_transfer_passes_in_both_directions(direction):
    assert main(["transfer", "--direction", direction, "--rounds", "5", "--no-color"]) == 0


@pytest.mark.parametrize("fault", ["skip-dummy-bucket", "open-threshold", "rtilde-equals-r"])
def test_transfer_catches_every_fault(fault, capsys):
    assert main(["transfer", "--rounds", "3", "--inject-fault", fault, "--no-color"]) == 1
    assert "FAIL" in capsys.readouterr().out


@pytest.mark.parametrize("direction", ["product", "increasing"])
def test_transfer_with_a_random_inner_strategy(direction):
    argv = ["transfer", "--direction", direction, "--inner", "random", "--games", "2", "--rounds", "6"]
    assert main(argv + ["--no-color"]) == 0


def test_transfer_batch(tmp_path):
    out = tmp_path / "batch.json"
    argv = ["transfer", "--games", "3", "--rounds", "4", "--decay", "1/2", "--out", str(out), "--no-color"]
    assert main(argv) == 0
    report = read_json(out)
    assert report["games"] == 3 and report["first_failure"] is None
    assert all(count == 3 for count in report["passes"].values())


def test_equal_seeds_write_identical_transcripts(tmp_path):
    paths = [tmp_path / "a.json", tmp_path / "b.json"]
    for path in paths:
        assert main(["play", "--seed", "11", "--rounds", "4", "--out", str(path), "--no-color"]) == 0
    assert paths[0].read_bytes() == paths[1].read_bytes()


def test_config_file_and_flags(tmp_path, capsys):
    config = tmp_path / "run.json"
    config.write_text(json.dumps({"rounds": 2, "p1": "worked", "out": str(tmp_path / "play.json")}))
    assert main(["play", "--config", str(config), "--p2", "shrink:factor=1/4", "--no-color"]) == 0
    document = read_json(tmp_path / "play.json")
    assert document["rounds"] == 2 and document["outcome"] == "complete"
    assert document["stages"][0]["player2"]["radius"] == "1/40"
    assert "game complete after 2 stages" in capsys.readouterr().out

    assert main(["play", "--config", str(tmp_path / "missing.json")]) == 2
    config.write_text(json.dumps({"colour": "red"}))
    assert main(["play", "--config", str(config)]) == 2


def test_null_demo(tmp_path, capsys):
    out = tmp_path / "null.json"
    assert main(["null-demo", "--rounds", "4", "--epsilon", "1/50", "--out", str(out), "--no-color"]) == 0
    document = read_json(out)
    assert document["checks"]["certificates"]
    assert "cumulative measure" in capsys.readouterr().out


def test_null_demo_against_a_growing_player(tmp_path):
    out = tmp_path / "null.json"
    argv = ["null-demo", "--rounds", "10", "--epsilon", "1/100", "--p1", "random:growth=extend-by-2", "--out", str(out)]
    assert main(argv + ["--no-color"]) == 0
    document = read_json(out)
    assert document["outcome"] == "complete"
    assert to_scalar(document["cumulative_measure"]) <= to_scalar("1/100")


def test_interactive_session(tmp_path, capsys):
    out = tmp_path / "session.json"
    cfg = load_config(overrides={"rounds": 1, "out": str(out), "color": False})
    moves = iter(["[{0},{0}] 2 1/10", "[{0},{1/2}] 2 1/10"])
    assert cmd_interactive(cfg, input_fn=lambda prompt: next(moves)) == 0
    printed = capsys.readouterr().out
    assert "rejected:" in printed
    assert "reply: [{0/1},{1/2},{}] 3 1/80" in printed
    assert read_json(out)["stages"][0]["shadow1"]["radius"] == "1/20"
