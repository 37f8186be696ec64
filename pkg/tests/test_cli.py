import json
import subprocess
import sys
import xml.etree.ElementTree as ET

import pytest

from halfcover.cli import cli_main
from halfcover.generators import KINDS, generate
from halfcover.instances import (dumps_canonical, parse_instance,
                                 serialize_instance)

WORKED = {
    "kind": "points",
    "points": [[0, 0], [1, 2], [2, 0], [3, 2], [4, 0]],
    "halfplanes": [{"a": 0, "b": 1, "c": 1}, {"a": -1, "b": 1, "c": 0},
                   {"a": 1, "b": 1, "c": 4}],
}


@pytest.fixture
def worked_file(tmp_path):
    p = tmp_path / "worked.json"
    p.write_text(dumps_canonical(WORKED))
    return str(p)


def test_roundtrip_all_kinds():
    for kind in KINDS:
        n = 8
        inst = generate(kind, n, 11)
        doc = serialize_instance(inst)
        again = parse_instance(json.loads(dumps_canonical(doc)))
        assert serialize_instance(again) == doc


def test_solve_lower_worked(worked_file, tmp_path):
    out = tmp_path / "out.json"
    rc = cli_main(["solve-lower", "--input", worked_file, "--output", str(out)])
    assert rc == 0
    doc = json.loads(out.read_text())
    assert doc == {"status": "optimal", "size": 2, "chosen": [1, 2]}


def test_solve_general_infeasible_exit(tmp_path):
    p = tmp_path / "inf.json"
    p.write_text(dumps_canonical({
        "kind": "points", "points": [[0, 0], [50, 50]],
        "halfplanes": [{"a": 0, "b": 1, "c": 1}]}))
    out = tmp_path / "o.json"
    rc = cli_main(["solve-general", "--input", str(p), "--output", str(out)])
    assert rc == 1
    doc = json.loads(out.read_text())
    assert doc["status"] == "infeasible" and doc["witness"] == 1


def test_plot_svg(worked_file, tmp_path):
    out = tmp_path / "p.svg"
    rc = cli_main(["plot", "--input", worked_file, "--output", str(out)])
    assert rc == 0
    tree = ET.parse(out)
    paths = [e for e in tree.iter() if e.tag.endswith("path")]
    assert len(paths) == len(WORKED["halfplanes"])


def test_usage_errors(tmp_path):
    assert cli_main(["nope"]) == 2
    assert cli_main(["solve-lower"]) == 2  # missing --input
    bad = tmp_path / "bad.json"
    bad.write_text("{broken")
    assert cli_main(["solve-lower", "--input", str(bad)]) == 2
    assert cli_main(["plot", "--input", str(bad), "--format", "json"]) == 2


def test_gen_determinism(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for kind in KINDS:
        n = 8
        assert cli_main(["gen", "--kind", kind, "--n", str(n), "--seed", "9",
                         "--output", str(a)]) == 0
        assert cli_main(["gen", "--kind", kind, "--n", str(n), "--seed", "9",
                         "--output", str(b)]) == 0
        assert a.read_bytes() == b.read_bytes()


def test_oracle_subcommand(worked_file, tmp_path):
    out = tmp_path / "o.json"
    rc = cli_main(["oracle", "--input", worked_file, "--output", str(out)])
    assert rc == 0
    assert json.loads(out.read_text())["size"] == 2


def test_kernel_subcommands(tmp_path):
    p = tmp_path / "k.json"
    p.write_text(dumps_canonical({
        "kind": "points",
        "points": [[0, 0], [1, 0], [1, 1], [0, 1], ["1/2", "1/2"]],
        "halfplanes": [],
        "epsilon": "1/10",
        "subset": [0, 1, 2],
    }))
    out = tmp_path / "o.json"
    rc = cli_main(["kernel-check", "--input", str(p), "--output", str(out)])
    assert rc == 1
    doc = json.loads(out.read_text())
    assert doc["status"] == "false" and "violating_direction" in doc
    rc = cli_main(["kernel-opt", "--input", str(p), "--output", str(out)])
    assert rc == 0
    assert json.loads(out.read_text())["size"] == 4


def test_console_entrypoint(worked_file):
    proc = subprocess.run(
        [sys.executable, "-m", "halfcover.cli", "solve-lower", "--input", worked_file],
        capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout) == {"status": "optimal", "size": 2,
                                       "chosen": [1, 2]}


def test_solve_star_and_polyline_cli(tmp_path):
    star = tmp_path / "s.json"
    star.write_text(dumps_canonical({
        "kind": "star",
        "center": [0, 0],
        "vertices": [[1, -1], [1, 1], [-1, 1], [-1, -1]],
        "halfplanes": [{"a": -1, "b": 0, "c": -1}, {"a": 1, "b": 0, "c": -1},
                       {"a": 0, "b": -1, "c": -1}, {"a": 0, "b": 1, "c": -1}],
    }))
    out = tmp_path / "o.json"
    assert cli_main(["solve-star", "--input", str(star), "--output", str(out)]) == 0
    assert json.loads(out.read_text())["size"] == 4

    poly = tmp_path / "pl.json"
    poly.write_text(dumps_canonical({
        "kind": "polyline",
        "vertices": [[0, 0], [1, 2], [2, 0], [3, 2], [4, 0]],
        "halfplanes": WORKED["halfplanes"],
    }))
    assert cli_main(["solve-polyline", "--input", str(poly), "--output", str(out)]) == 0
    assert json.loads(out.read_text())["chosen"] == [1, 2]
