import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from catrank.framework import new_af
from catrank.generator import GenSpec, random_af
from catrank.io import (
    ParseError,
    emit_apx,
    emit_csv,
    emit_dot,
    emit_report,
    emit_tgf,
    parse_apx,
    parse_tgf,
)
from catrank.ranking import rank_from_strengths
from catrank.solver import SolveConfig, solve, solve_certified

from conftest import FIXTURES


def test_example1_fixture(example1):
    af = parse_apx((FIXTURES / "example1.apx").read_text())
    assert af.names == example1.names
    assert af.attacks == example1.attacks


def test_apx_comments_and_whitespace():
    af = parse_apx("% header\narg(a).  % trailing\n\n arg( b ).\natt(a , b).\natt(a,b).\n")
    assert af.names == ("a", "b")
    assert af.attacks == frozenset({(0, 1)})


def test_att_may_precede_arg():
    assert parse_apx("att(a,b).\narg(a).\narg(b).\n").attacks == frozenset({(0, 1)})


@pytest.mark.parametrize(
    "text, line, fragment",
    [
        ("arg(a).\narg(a).\n", 2, "declared twice"),
        ("arg(a).\natt(a,b).\n", 2, "undeclared"),
        ("arg(a).\n\narg(b)\n", 3, "malformed"),
        ("arg(a-b).\n", 1, "malformed"),
        ("arg(a,b).\n", 1, "exactly one"),
        ("att(a).\n", 1, "attacker and a target"),
    ],
)
def test_apx_errors(text, line, fragment):
    with pytest.raises(ParseError) as info:
        parse_apx(text)
    assert info.value.diagnostic.line == line
    assert fragment in str(info.value)


def test_tgf_parse():
    af = parse_tgf("1 a\n2 b\n3\n#\n1 2\n2 3\n")
    assert af.names == ("a", "b", "3")
    assert af.attacks == frozenset({(0, 1), (1, 2)})


@pytest.mark.parametrize(
    "text, line",
    [
        ("1 a\n1 b\n#\n", 2),
        ("1 a\n#\n1 2\n", 3),
        ("1 a\n2 b\n", 2),
        ("1 a b\n#\n", 1),
        ("1 a\n#\n1\n", 3),
    ],
)
def test_tgf_errors(text, line):
    with pytest.raises(ParseError) as info:
        parse_tgf(text)
    assert info.value.diagnostic.line == line


def test_emit_apx_is_canonical(example1):
    text = emit_apx(example1)
    assert text.splitlines()[:5] == [f"arg(x{i})." for i in range(1, 6)]
    atts = text.splitlines()[5:]
    assert atts == sorted(atts) and len(atts) == 8
    assert emit_apx(parse_apx(text)) == text


def test_emit_rejects_unwritable_names():
    with pytest.raises(ValueError):
        emit_apx(new_af(["a b"]))


def test_emit_tgf(example1):
    text = emit_tgf(example1)
    assert text.startswith("1 x1\n2 x2\n")
    assert "\n#\n" in text


def test_emit_dot(example1):
    s = solve(example1, SolveConfig(1e-9))
    text = emit_dot(example1, s)
    assert text.startswith("digraph af {\n") and text.endswith("}\n")
    assert r'"x3" [label="x3\n1.00"];' in text
    assert r'"x1" [label="x1\n0.72"];' in text
    assert text.count("->") == 8
    assert emit_dot(new_af([])) == "digraph af {\n}\n"
    with pytest.raises(ValueError):
        emit_dot(example1, [0.5])


def test_report(example1):
    s, b = solve_certified(example1, SolveConfig(1e-12))
    doc = json.loads(emit_report(example1, s, rank_from_strengths(s, 1e-11, b), b))
    assert doc["arguments"] == ["x1", "x2", "x3", "x4", "x5"]
    assert len(doc["strengths"]) == 5 and len(doc["bounds"]["lower"]) == 5
    assert doc["strengths"] == [float(x) for x in s.values]
    assert doc["ranking"] == [["x3"], ["x1"], ["x5"], ["x2"], ["x4"]]
    assert doc["converged"] is True


def test_csv(example1):
    s = solve(example1)
    rows = emit_csv(example1, s).splitlines()
    assert rows[0] == "argument,strength"
    assert rows[3] == "x3,1.0"
    assert float(rows[1].split(",")[1]) == s.values[0]


def _same(a, b):
    return a.names == b.names and a.attacks == b.attacks


@settings(max_examples=60, deadline=None)
@given(n=st.integers(0, 15), p=st.floats(0, 1), seed=st.integers(0, 2**64 - 1), self_attacks=st.booleans())
def test_round_trips(n, p, seed, self_attacks):
    af = random_af(GenSpec(n, p, self_attacks, seed))
    assert _same(parse_apx(emit_apx(af)), af)
    assert _same(parse_tgf(emit_tgf(af)), af)
    assert emit_apx(parse_tgf(emit_tgf(af))) == emit_apx(af)
