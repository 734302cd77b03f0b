"""CLI: parsing round-trips, subcommands, exit codes."""
import json

import pytest
from hypothesis import given, settings, strategies as st

from stanleydepth.cli import main, parse_ideal, print_ideal
from stanleydepth.errors import ParseError
from stanleydepth.ideal import MonomialIdeal


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_parse_examples():
    assert parse_ideal("x1^3, x1^2*x2").gens == ((2, 1), (3, 0))
    assert parse_ideal("x1*x2, x2*x3^2").gens == ((0, 1, 2), (1, 1, 0))
    assert parse_ideal("x1, x1^2").gens == ((1,),)
    assert parse_ideal("1", nvars=2).is_unit
    assert parse_ideal("0", nvars=2).is_zero


def test_parse_errors():
    with pytest.raises(ParseError):
        parse_ideal("x1 + x2")
    with pytest.raises(ParseError):
        parse_ideal("")
    with pytest.raises(ParseError):
        parse_ideal("x0^2")
    with pytest.raises(ParseError):
        parse_ideal("x3", nvars=2)
    with pytest.raises(ParseError):
        parse_ideal("0")  # needs explicit n
    err = pytest.raises(ParseError, parse_ideal, "x1, y2").value
    assert err.position is not None


@given(st.lists(
    st.tuples(*[st.integers(0, 4)] * 3).filter(lambda g: any(g)),
    min_size=1, max_size=4,
))
@settings(max_examples=80, deadline=None)
def test_round_trip(gens):
    I = MonomialIdeal.from_gens(3, gens)
    assert parse_ideal(print_ideal(I), nvars=3) == I


def test_round_trip_trivial():
    assert parse_ideal(print_ideal(MonomialIdeal.unit(2)), nvars=2).is_unit
    assert parse_ideal(print_ideal(MonomialIdeal.zero(2)), nvars=2).is_zero


def test_cmd_sdepth(capsys):
    code, out = run(capsys, "sdepth", "--module", "quotient",
                    "--ideal", "x1^3, x1^2*x2")
    assert code == 0
    doc = json.loads(out)
    assert doc["sdepth"] == 0 and doc["exact"] is True
    assert doc["witness"]


def test_cmd_shreg(capsys):
    code, out = run(capsys, "shreg", "--ideal", "x1, x2^2",
                    "--box", "1,2", "--module", "quotient")
    assert code == 0
    assert json.loads(out)["shreg"] == 0


def test_cmd_info_dual_slide_irr(capsys):
    code, out = run(capsys, "info", "--ideal", "x1^2, x1*x2")
    assert code == 0
    doc = json.loads(out)
    assert doc["quotient"]["depth"] == 0 and doc["ideal"]["dim"] == 2

    code, out = run(capsys, "dual", "--ideal", "x1^3, x1^2*x2", "--box", "3,1")
    assert code == 0
    assert json.loads(out)["dual"]["gens"] == [[1, 1], [2, 0]]

    code, out = run(capsys, "slide", "--ideal", "x1^2*x2, x2^3", "--by", "1,1")
    assert code == 0
    assert json.loads(out)["slid"]["gens"] == [[0, 4], [3, 2]]

    code, out = run(capsys, "irr-decomp", "--ideal", "x1^3, x1^2*x2")
    assert code == 0
    assert json.loads(out)["components"] == [[2, 0], [3, 1]]


def test_cmd_betti_and_skeleton(capsys):
    code, out = run(capsys, "betti", "--ideal", "x1^2, x2^2")
    assert code == 0
    doc = json.loads(out)
    assert doc["projdim"] == 2 and doc["depth"] == 0

    code, out = run(capsys, "skeleton", "--ideal", "x1^2, x1*x2", "--level", "1")
    assert code == 0
    assert json.loads(out)["zero"] is False


def test_cmd_decomp(capsys):
    code, out = run(capsys, "decomp", "--ideal", "x1^3, x1^2*x2")
    assert code == 0
    doc = json.loads(out)
    assert doc["partition_sdepth"] == doc["sdepth"] == 0
    assert doc["stanley_spaces"]


def test_cmd_check_and_jsonl(capsys):
    code, out = run(capsys, "check", "--suite", "duality", "--n", "2",
                    "--max-exp", "1", "--max-gens", "2")
    assert code == 0
    doc = json.loads(out)
    assert doc["counts"]["fail"] == 0 and doc["counts"]["pass"] > 0

    code, out = run(capsys, "--format", "jsonl", "check", "--suite", "duality",
                    "--n", "2", "--max-exp", "1", "--max-gens", "2", "--verbose")
    assert code == 0
    lines = [json.loads(line) for line in out.strip().splitlines()]
    assert all("status" in rec for rec in lines[:-1])
    assert "summary" in lines[-1]


def test_cmd_check_workers(capsys):
    code1, out1 = run(capsys, "check", "--suite", "skeletons", "--n", "2",
                      "--max-exp", "1", "--max-gens", "2", "--verbose")
    code2, out2 = run(capsys, "check", "--suite", "skeletons", "--n", "2",
                      "--max-exp", "1", "--max-gens", "2", "--verbose",
                      "--workers", "2")
    assert code1 == code2 == 0
    d1, d2 = json.loads(out1), json.loads(out2)
    assert d1["reports"] == d2["reports"]


def test_cmd_survey(capsys):
    code, out = run(capsys, "survey", "--n", "2", "--max-exp", "1",
                    "--max-gens", "2")
    assert code == 0
    doc = json.loads(out)
    assert doc["rows"] and all("gap" in r for r in doc["rows"])


def test_exit_codes(capsys):
    code, out = run(capsys, "sdepth", "--ideal", "x1 + bogus")
    assert code == 2 and json.loads(out)["error"] == "syntax"

    code, out = run(capsys, "dual", "--ideal", "x1^3", "--box", "1")
    assert code == 3 and json.loads(out)["error"] == "domain"

    code, out = run(capsys, "sdepth", "--ideal", "x1^2, x2^2, x3^2",
                    "--module", "ideal", "--max-nodes", "3")
    assert code == 4
    doc = json.loads(out)
    assert doc["error"] == "resource" and "sdepth_lower" in doc["bounds"]

    assert main(["no-such-command"]) == 2
