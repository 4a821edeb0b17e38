import io
import json
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from etpoly import codec
from etpoly.cli import run
from etpoly.constructions.generators import cube, simplex
from etpoly.constructions.stacking import build_truncatable_stacked
from etpoly.errors import NotGraded, ParseError
from etpoly.et import et
from etpoly.isomorphism import are_isomorphic
from etpoly.poset import boolean_lattice
from etpoly.subdivision import ChainPoint


@given(st.fractions())
def test_rational_round_trip(x):
    assert codec.parse_rat(codec.rat_to_str(x)) == x


def test_malformed_rationals():
    for bad in ("1/0", "1.5", 0.5, "abc", "", None, True):
        with pytest.raises(ParseError):
            codec.parse_rat(bad)
    assert codec.parse_rat(" -3 / 4 ") == Fraction(-3, 4)


def test_lattice_round_trip():
    for L in (boolean_lattice(3), cube(3).lattice, et(simplex(4).lattice, 1)):
        M = codec.lattice_from_doc(codec.loads(codec.dumps(codec.lattice_to_doc(L))))
        assert are_isomorphic(L, M)
        assert M.labels == L.labels
    E = codec.lattice_from_doc(codec.lattice_to_doc(et(cube(3).lattice, 1)))
    assert E.t == 1 and are_isomorphic(E.base, cube(3).lattice)


def test_rank_gap_rejected():
    doc = {"elements": [{"id": 0, "rank": 0, "covers": []}, {"id": 1, "rank": 2, "covers": [0]}]}
    with pytest.raises(NotGraded):
        codec.lattice_from_doc(doc)
    with pytest.raises(ParseError):
        codec.lattice_from_doc({"elements": [{"id": 5, "rank": 0, "covers": []}]})
    with pytest.raises(ParseError):
        codec.loads("[1, 2]")


def test_polytope_and_cuts_round_trip():
    fam = build_truncatable_stacked(4, [0])
    doc = codec.loads(codec.dumps(codec.polytope_to_doc(fam.polytope, fam.cuts)))
    P = codec.polytope_from_doc(doc)
    assert P.vertices == fam.polytope.vertices
    cs = codec.cuts_from_doc(doc["cuts"], P)
    assert cs.cuts == fam.cuts.cuts and cs.edge_points == fam.cuts.edge_points


def test_chainpoint_round_trip():
    L = boolean_lattice(3)
    q = ChainPoint(L, (1, 3), (Fraction(1, 3), Fraction(2, 3)))
    assert codec.chainpoint_from_doc(codec.chainpoint_to_doc(q), L) == q


# -- command line --------------------------------------------------------


def cli(capsys, monkeypatch, argv, stdin=None):
    if stdin is not None:
        monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    code = run(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_pipeline_simplex_e1_flags(capsys, monkeypatch):
    _, P, _ = cli(capsys, monkeypatch, ["generate", "simplex", "-d", "4"])
    _, E, _ = cli(capsys, monkeypatch, ["et", "-t", "1"], P)
    code, out, _ = cli(capsys, monkeypatch, ["flags"], E)
    assert code == 0 and out.strip() == "10 30 30 10 ; f03=50"


def test_realize_and_check(capsys, monkeypatch):
    _, P, _ = cli(capsys, monkeypatch, ["generate", "cube", "-d", "4"])
    _, Q, _ = cli(capsys, monkeypatch, ["realize", "--t", "2", "--r2", "2"], P)
    code, out, _ = cli(capsys, monkeypatch, ["check", "--2s2s", "--eulerian", "--lattice"], Q)
    assert code == 0 and json.loads(out)["passed"]
    code, out, _ = cli(capsys, monkeypatch, ["check", "--simplicial", "3"], P)
    assert code == 1


def test_truncate_strategies(capsys, monkeypatch):
    _, P, _ = cli(capsys, monkeypatch, ["generate", "stacked", "-n", "2"])
    _, D, _ = cli(capsys, monkeypatch, ["truncate", "--strategy", "inductive"], P)
    code, out, _ = cli(capsys, monkeypatch, ["flags"], D)
    assert out.strip() == "18 66 66 18 ; f03=102"
    _, X, _ = cli(capsys, monkeypatch, ["generate", "cross", "-d", "4"])
    _, D, _ = cli(capsys, monkeypatch, ["truncate", "--strategy", "edge-tangent", "--r2", "1/2"], X)
    assert cli(capsys, monkeypatch, ["flags"], D)[1].strip() == "24 96 96 24 ; f03=144"


def test_iso_and_dk(tmp_path, capsys, monkeypatch):
    _, P, _ = cli(capsys, monkeypatch, ["generate", "simplex", "-d", "4"])
    _, D, _ = cli(capsys, monkeypatch, ["dk", "-k", "1"], P)
    _, K, _ = cli(capsys, monkeypatch, ["generate", "hypersimplex", "-d", "4", "-k", "2"])
    (tmp_path / "d.json").write_text(D)
    (tmp_path / "k.json").write_text(K)
    code, out, _ = cli(capsys, monkeypatch, ["iso", str(tmp_path / "d.json"), str(tmp_path / "k.json"), "--witness"])
    assert code == 0 and len(json.loads(out)["witness"]) == 1 + 10 + 30 + 30 + 10 + 1


def test_subdivide(tmp_path, capsys, monkeypatch):
    _, P, _ = cli(capsys, monkeypatch, ["generate", "cube", "-d", "3"])
    (tmp_path / "p.json").write_text(P)
    monkeypatch.setenv("ET_SEED", "11")
    code, out, _ = cli(capsys, monkeypatch, ["subdivide", str(tmp_path / "p.json"), "--t", "1", "--random", "50"])
    doc = json.loads(out)
    assert code == 0 and doc["failures"] == 0 and doc["seed"] == 11


def test_tables(capsys, monkeypatch):
    code, out, _ = cli(capsys, monkeypatch, ["tables", "--format", "json", "--n", "1,42"])
    doc = json.loads(out)
    assert code == 0
    row = next(r for r in doc["rows"] if r["family"] == "D1C" and r["n"] == 42)
    assert row["values"][:4] == [762, 3540, 3540, 762]


def test_errors_are_reported(capsys, monkeypatch):
    bad = json.dumps({"elements": [{"id": 0, "rank": 0, "covers": []}, {"id": 1, "rank": 2, "covers": [0]}]})
    code, _, err = cli(capsys, monkeypatch, ["flags"], bad)
    doc = json.loads(err)
    assert code == 2 and doc["error"] == "RankSkip" and "NotGraded" in doc["kinds"]
    code, _, err = cli(capsys, monkeypatch, ["flags"], "{not json")
    assert code == 2 and json.loads(err)["error"] == "ParseError"
    _, P, _ = cli(capsys, monkeypatch, ["generate", "cube", "-d", "4"])
    code, _, err = cli(capsys, monkeypatch, ["realize", "--t", "1", "--r2", "2"], P)
    assert code == 2 and json.loads(err)["error"] == "NotTangent"
