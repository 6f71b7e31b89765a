#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
End-to-end tests of the tree-ramsey command line.
"""

import json
import os

import pytest

from tree_ramsey import cli
from tree_ramsey.config import CONFIG_ENV_VAR, set_settings
from tree_ramsey.formats import parse_set_file, read_witness, save_markov_file
from tree_ramsey.markov import FiniteMarkovSystem, product_pair
from tree_ramsey.structures import verify_arithmetic_subtree

TEST_CONFIG = os.path.join(os.path.dirname(os.path.abspath(__file__)), "test_config.json")

FULL_1D = "treeset v1 k=2 n=4 dim=1 repr=levellift\n0\n1\n2\n3\n"
DIAGONAL = "treeset v1 k=2 n=3 dim=2 repr=levellift\n0 0\n1 1\n2 2\n"
FULL_2D = "treeset v1 k=2 n=3 dim=2 repr=levellift\n0 0\n0 1\n0 2\n1 0\n1 1\n1 2\n2 0\n2 1\n2 2\n"


@pytest.fixture(autouse=True)
def test_settings(monkeypatch):
    monkeypatch.setenv(CONFIG_ENV_VAR, TEST_CONFIG)
    yield
    set_settings(None)


def write(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text, encoding="utf-8")
    return str(path)


def run(*argv):
    return cli.main(list(argv) + ["--quiet"])


def test_search_tree_emits_verifiable_witness(tmp_path):
    S = write(tmp_path, "full.txt", FULL_1D)
    out = str(tmp_path / "tree.json")
    assert run("search", "tree", "--input", S, "--r", "2", "--out", out) == cli.EXIT_OK
    witness = read_witness(out)
    assert witness.r == 2
    assert verify_arithmetic_subtree(witness, parse_set_file(S))
    assert run("verify", out, "--input", S) == cli.EXIT_OK


def test_verify_tampered_witness(tmp_path):
    S = write(tmp_path, "full.txt", FULL_1D)
    out = str(tmp_path / "tree.json")
    assert run("search", "tree", "--input", S, "--r", "1", "--out", out) == cli.EXIT_OK
    data = json.loads(open(out, encoding="utf-8").read())
    data["map"]["1"] = data["map"]["0"]
    tampered = write(tmp_path, "tampered.json", json.dumps(data))
    report = str(tmp_path / "verdict.txt")
    assert run("verify", tampered, "--input", S, "--out", report) == cli.EXIT_NONE
    text = open(report, encoding="utf-8").read()
    assert 'FAIL descent at "1"' in text


def test_search_none_and_budget(tmp_path):
    S = write(tmp_path, "full.txt", FULL_1D)
    assert run("search", "tree", "--input", S, "--r", "2", "--budget", "1") == cli.EXIT_BUDGET
    A = write(tmp_path, "diag.txt", DIAGONAL)
    report = str(tmp_path / "none.txt")
    assert run("search", "cartesian", "--input", A, "--r", "1", "--out", report) == cli.EXIT_NONE
    assert "exhausted" in open(report, encoding="utf-8").read()


def test_search_product_and_array(tmp_path):
    A = write(tmp_path, "full2.txt", FULL_2D)
    for kind in ("product", "array", "cartesian"):
        out = str(tmp_path / f"{kind}.json")
        assert run("search", kind, "--input", A, "--r", "1", "--out", out) == cli.EXIT_OK
        assert run("verify", out, "--input", A) == cli.EXIT_OK


def test_wrong_dimension_is_an_input_error(tmp_path):
    A = write(tmp_path, "full2.txt", FULL_2D)
    assert run("search", "tree", "--input", A) == cli.EXIT_INPUT


def test_density_report(tmp_path):
    S = write(tmp_path, "mask.txt", "treeset v1 k=2 n=4 dim=1 repr=levellift\n0\n2\n")
    report = str(tmp_path / "density.txt")
    assert run("density", "--input", S, "--out", report) == cli.EXIT_OK
    lines = open(report, encoding="utf-8").read().splitlines()
    assert lines[0] == "density mask.txt k=2 n=4 dim=1"
    assert lines[1:] == ["d_1 = 1", "d_2 = 1/2", "d_3 = 2/3", "d_4 = 1/2"]


def test_markov_mu_matches_density(tmp_path):
    A = str(tmp_path / "A.txt")
    assert run("random", "--depth", "3", "--seed", "5", "--out", A) == cli.EXIT_OK
    mu_report = str(tmp_path / "mu.txt")
    density_report = str(tmp_path / "density.txt")
    assert run("markov", "mu", "--input", A, "--samples", "500", "--out", mu_report) == cli.EXIT_OK
    assert run("density", "--input", A, "--out", density_report) == cli.EXIT_OK
    exact = [line for line in open(mu_report, encoding="utf-8").read().splitlines()
             if line.startswith("exact ")][0].split(" ", 1)[1]
    last = open(density_report, encoding="utf-8").read().splitlines()[-1]
    assert last == f"d_3 = {exact}"


def test_random_is_reproducible(tmp_path):
    first, second = str(tmp_path / "a.txt"), str(tmp_path / "b.txt")
    assert run("random", "--depth", "4", "--seed", "9", "--delta", "1/3", "--out", first) == cli.EXIT_OK
    assert run("random", "--depth", "4", "--seed", "9", "--delta", "1/3", "--out", second) == cli.EXIT_OK
    assert open(first, "rb").read() == open(second, "rb").read()


def test_markov_validate_pair_files(tmp_path):
    split = FiniteMarkovSystem.with_constant_probabilities([[0, 0], [1, 1]])
    pair = product_pair(split, split)
    first, second = str(tmp_path / "first.txt"), str(tmp_path / "second.txt")
    save_markov_file(pair.first, first)
    save_markov_file(pair.second, second)
    report = str(tmp_path / "validate.txt")
    assert run("markov", "validate", "--input", first, "--input", second, "--out", report) == cli.EXIT_OK
    assert open(report, encoding="utf-8").read().splitlines()[-1] == "valid"
    assert run("markov", "phi", "--input", first, "--input", second, "--states", "0,1,2,3",
               "--n-range", "1..2", "--r", "2") == cli.EXIT_OK
    assert run("markov", "phi", "--input", first, "--input", second) == cli.EXIT_INPUT

    swap = FiniteMarkovSystem.with_constant_probabilities([[1, 0, 2]])
    other = FiniteMarkovSystem.with_constant_probabilities([[0, 2, 1]])
    save_markov_file(swap, first)
    save_markov_file(other, second)
    assert run("markov", "validate", "--input", first, "--input", second) == cli.EXIT_NONE


def test_markov_roots_of_labelled_tree_pair(tmp_path):
    A = write(tmp_path, "diag.txt", DIAGONAL)
    report = str(tmp_path / "roots.txt")
    assert run("markov", "roots", "--input", A, "--r", "1", "--out", report) == cli.EXIT_OK
    lines = open(report, encoding="utf-8").read().splitlines()
    assert lines[0] == "markov roots diag.txt r=1 u=1,1 v=1,1"
    assert "n=1 root 0 at -,- product tree PASS" in lines
    assert not any(line.endswith("FAIL") for line in lines)
    assert run("markov", "validate", "--input", A) == cli.EXIT_OK


def test_reports_go_to_console_in_debug_mode(tmp_path, capsys):
    S = write(tmp_path, "mask.txt", "treeset v1 k=2 n=4 dim=1 repr=levellift\n0\n2\n")
    assert cli.main(["density", "--input", S, "--debug", "--no-color"]) == cli.EXIT_OK
    assert "density mask.txt k=2 n=4 dim=1" in capsys.readouterr().out
    assert run("density", "--input", S) == cli.EXIT_OK
    assert "density mask.txt" not in capsys.readouterr().out


def test_ap_grid(tmp_path):
    A = write(tmp_path, "full2.txt", FULL_2D)
    report = str(tmp_path / "grid.txt")
    assert run("ap-grid", "--input", A, "--r", "2", "--out", report) == cli.EXIT_OK
    assert "found a=(0,0) q=1" in open(report, encoding="utf-8").read()
    assert run("ap-grid", "--input", A, "--r", "4") == cli.EXIT_NONE


def test_input_errors(tmp_path):
    assert run("density", "--input", str(tmp_path / "missing.txt")) == cli.EXIT_INPUT
    bad = write(tmp_path, "bad.txt", "treeset v1 k=2 n=3 dim=2 repr=levellift\n1 1\n0 0\n")
    assert run("density", "--input", bad) == cli.EXIT_INPUT
    S = write(tmp_path, "full.txt", FULL_1D)
    assert run("density", "--input", S, "--k", "3") == cli.EXIT_INPUT


def test_usage_errors_exit_with_input_status():
    with pytest.raises(SystemExit) as excinfo:
        cli.main(["search"])
    assert excinfo.value.code == cli.EXIT_INPUT
    with pytest.raises(SystemExit) as excinfo:
        cli.main(["search", "tree", "--u", "1"])
    assert excinfo.value.code == cli.EXIT_INPUT


def test_run_config_from_args():
    args = cli.build_parser().parse_args(["search", "product", "-i", "A.txt", "--u", "1,2",
                                          "--n-range", "2..3", "--no-deterministic"])
    cfg = cli.RunConfig.from_args(args)
    assert cfg.command == "search product"
    assert cfg.u == (1, 2)
    assert cfg.n_range == (2, 3)
    assert cfg.deterministic is False
    assert cfg.source == "A.txt"
