import json
import os
import pathlib
import subprocess

import pytest

import walkmat

GOLDEN = pathlib.Path(__file__).resolve().parent.parent / "golden" / "f6_members.jsonl"
SEED = "E\\Q?"


def test_graph6_round_trip():
    n, edges = walkmat.decode("Ch")
    assert n == 4
    assert edges == [(1, 2), (2, 3), (3, 4)]
    assert walkmat.encode(4, edges) == "Ch"
    with pytest.raises(ValueError):
        walkmat.decode("C!")


def test_determinants():
    assert walkmat.det([[0, 1], [1, 0]]) == -1
    assert walkmat.det([[2, 0], [0, 10**30]]) == 2 * 10**30
    assert walkmat.walk_det("Ch") == 0
    assert walkmat.adjacency_det("C~") == -3
    assert walkmat.walk_matrix("Ch")[0] == [1, 1, 2, 3]


def test_polynomials():
    assert walkmat.s_poly(3) == [0, -2, 0, 1]
    assert walkmat.charpoly("Ch") == walkmat.s_poly(4)
    assert walkmat.resultant([-3, 1], [-5, 1]) == -2


def test_main_identity():
    report = walkmat.verify_main(SEED, 3, 1)
    assert report["status"] == "pass"
    assert report["rhs"] == "512"
    zero = walkmat.verify_main("C~", 3, 2)
    assert zero["status"] == "pass" and zero["lhs"] == "0"
    assert walkmat.verify_charpoly("A_", 2, 1)["lhs"] == "x^4 - 3*x^2 + 1"
    assert walkmat.verify_simple_spectrum("A_", 4, 2)["status"] == "pass"
    assert walkmat.verify_res1(4, 2)["status"] == "pass"
    assert walkmat.verify_res2(4, 2)["rhs"] == "4096*t^2"


def test_family():
    cert = walkmat.f_member(SEED)
    assert cert == {"graph6": SEED, "n": 6, "detA": -1, "detW": -8, "member": True}
    levels = walkmat.build_family(SEED, [(3, 1), (4, 2)])
    assert [lvl["n"] for lvl in levels] == [6, 18, 72]
    assert abs(levels[-1]["detW"]) == 2**36
    assert walkmat.rooted_product("A_", 2, 1) == walkmat.encode(4, [(1, 2), (1, 3), (2, 4)])


def test_search_matches_golden():
    golden = [json.loads(line) for line in GOLDEN.read_text().splitlines() if line]
    found = walkmat.search_f(6, 2)
    assert len(found) == len(golden) == 3600
    assert found[0]["graph6"] == golden[0]["graph6"]
    assert all(int(g["detW"]) == f["detW"] for f, g in zip(found, golden))


@pytest.mark.skipif("WALKMAT_CLI" not in os.environ, reason="CLI path not provided")
def test_cli_walkdet():
    out = subprocess.run([os.environ["WALKMAT_CLI"], "walkdet", "--graph", SEED],
                         capture_output=True, text=True, check=True).stdout
    record = json.loads(out)
    assert record["detW"] == "-8"
    assert record["v2_detW"] == 3
