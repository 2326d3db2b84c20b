import json

import pytest
from hypothesis import given, settings, strategies as st

from quivergrass.cli import UsageError, main, parse_quiver, parse_rep, parse_vec
from quivergrass.quiver import Interval, RepClass, TypeAQuiver


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_parse_quiver_examples():
    q = parse_quiver("A2:F")
    assert (q.n, q.orient) == (2, "F")
    q = parse_quiver("A3:FB")
    assert q.edges() == ((1, 2), (3, 2))
    assert parse_quiver("A1").n == 1
    assert parse_quiver("A1:").n == 1
    with pytest.raises(UsageError, match="position"):
        parse_quiver("A3:FFF")
    with pytest.raises(UsageError):
        parse_quiver("B2:F")
    with pytest.raises(UsageError):
        parse_quiver("A2:FX")


def test_parse_rep_examples():
    q = parse_quiver("A2:F")
    m = parse_rep("[1,2]x2,[1,1]", q)
    assert m == RepClass.from_pairs([(Interval(1, 2), 2), (Interval(1, 1), 1)])
    assert parse_rep("", q) == RepClass.empty()
    assert parse_rep("  ", q) == RepClass.empty()
    q3 = parse_quiver("A3:FF")
    with pytest.raises(UsageError, match="out of range"):
        parse_rep("[1,4]", q3)
    with pytest.raises(UsageError):
        parse_rep("[1,2]x0", q)
    with pytest.raises(UsageError):
        parse_rep("[1,2];[1,1]", q)


def test_parse_vec():
    assert parse_vec("1,2,3", 3) == (1, 2, 3)
    with pytest.raises(UsageError):
        parse_vec("1,2", 3)
    with pytest.raises(UsageError):
        parse_vec("1,x", 2)
    with pytest.raises(UsageError):
        parse_vec("1,-2", 2)


@given(st.data())
@settings(max_examples=50, deadline=None)
def test_parse_print_round_trip(data):
    n = data.draw(st.integers(min_value=1, max_value=5))
    q = TypeAQuiver(n, "F" * (n - 1))
    intervals = [Interval(a, b) for a in range(1, n + 1) for b in range(a, n + 1)]
    pairs = data.draw(
        st.lists(
            st.tuples(st.sampled_from(intervals), st.integers(min_value=1, max_value=3)),
            min_size=0,
            max_size=4,
        )
    )
    m = RepClass.from_pairs(pairs)
    assert parse_rep(m.text(), q) == m


def test_cli_poset(capsys):
    code, out, _ = run_cli(capsys, "poset", "--quiver", "A3:FF", "--dim", "1,1,1")
    assert code == 0
    payload = json.loads(out)
    assert len(payload["nodes"]) == 4
    assert len(payload["covers"]) == 4
    assert payload["dot"].startswith("digraph")
    assert '"[1,3]" -> ' in payload["dot"]


def test_cli_betti_pinned(capsys):
    code, out, _ = run_cli(
        capsys, "betti", "--quiver", "A2:F", "--rep", "[1,2]x3", "--sub", "1,2", "--method", "both"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["pretty"] == "1 + 2q + 2q^2 + q^3"
    assert payload["coefficients"] == [1, 2, 2, 1]
    assert payload["match"] is True


def test_cli_betti_single_method(capsys):
    code, out, _ = run_cli(
        capsys, "betti", "--quiver", "A2:F", "--rep", "[1,1],[2,2]", "--sub", "1,1",
        "--method", "count",
    )
    assert code == 0
    assert json.loads(out)["pretty"] == "1"


def test_cli_strata(capsys):
    code, out, _ = run_cli(
        capsys, "strata", "--quiver", "A2:F", "--m", "[1,2]", "--n", "[1,1],[2,2]",
        "--sub", "1,0",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["kernel"]["pretty"] == "1"
    nonzero = [r for r in payload["records"] if r["base"]["coefficients"]]
    assert nonzero == [
        {"f": [0, 0], "g": [1, 0], "i": 1, "shift": 0, "base": {"coefficients": [1], "pretty": "1"}}
    ]


def test_cli_verify_schema(capsys):
    code, out, _ = run_cli(capsys, "verify", "--quiver", "A2:F", "--dim", "1,1", "--jobs", "1")
    assert code == 0
    payload = json.loads(out)
    for field in ("quiver", "dim", "sub", "covers", "checks", "failures"):
        assert field in payload
    assert payload["failures"] == []
    assert payload["counts"]["covers"] == 1
    assert len(payload["checks"]) == 4


def test_cli_pbw_pinned(capsys):
    code, out, _ = run_cli(capsys, "pbw", "--n", "2", "--i", "1")
    assert code == 0
    payload = json.loads(out)
    assert payload["kernel"]["pretty"] == "q^2"
    assert payload["monotone"] and payload["identity_ok"]


def test_cli_usage_errors(capsys):
    code, _, err = run_cli(capsys, "poset", "--quiver", "A3:FFF", "--dim", "1,1,1")
    assert code == 2
    assert json.loads(err)["error"]["type"] == "usage"
    code, _, err = run_cli(capsys, "betti", "--quiver", "A2:F", "--rep", "[1,4]", "--sub", "1,1")
    assert code == 2
    code, _, err = run_cli(capsys, "strata", "--quiver", "A3:FF", "--m", "[1,3]",
                           "--n", "[1,1],[2,2],[3,3]", "--sub", "1,0,0")
    assert code == 2  # not a cover: chain has two links


def test_cli_writes_files(tmp_path, capsys):
    dot = tmp_path / "poset.dot"
    out_json = tmp_path / "poset.json"
    code, out, _ = run_cli(
        capsys, "poset", "--quiver", "A2:F", "--dim", "1,1",
        "--dot", str(dot), "--json", str(out_json),
    )
    assert code == 0
    assert out == ""
    assert dot.read_text().startswith("digraph")
    assert json.loads(out_json.read_text())["quiver"] == "A2:F"
