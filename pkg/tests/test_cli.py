import io
import json
import random

import pytest

from conftest import random_a
from seifert_contact.cli import main
from seifert_contact.errors import NotCoprime, ParseError
from seifert_contact.notation import SpecText, format_spec, parse_multilink, parse_spec
from seifert_contact.seifert import solve_b


def _run(*argv, stdin=""):
    out = io.StringIO()
    code = main(list(argv), stdin=io.StringIO(stdin), stdout=out)
    return code, out.getvalue()


def test_parse_examples():
    ml = parse_multilink("sigma(1,2,3) m=[1]")
    assert ml.data.a == (1, 2, 3) and ml.m == (1,)
    ml = parse_multilink(" SIGMA ( 2 , 3 )  m = [ 1 , +1 ]  b=[-1, 2]")
    assert ml.data.b == (-1, 2) and ml.m == (1, 1)
    with pytest.raises(NotCoprime):
        parse_multilink("sigma(2,4) m=[1]")


@pytest.mark.parametrize(
    "text,pos",
    [("sigmoid(1,2)", 0), ("sigma(1,2", 9), ("sigma(1,x)", 8), ("sigma(1,2) q=[1]", 11), ("sigma(1) m=[1] m=[1]", 15)],
)
def test_parse_error_positions(text, pos):
    with pytest.raises(ParseError) as info:
        parse_spec(text)
    assert info.value.position == pos


def test_round_trip_corpus():
    rng = random.Random(7)
    for _ in range(1000):
        a = random_a(rng, rng.randint(1, 6), 40)
        b = solve_b(a) if rng.random() < 0.5 else None
        m = tuple(rng.choice((-1, 1)) * rng.randint(1, 5) for _ in range(rng.randint(1, len(a)))) if rng.random() < 0.8 else None
        spec = SpecText(a, b, m)
        text = format_spec(spec)
        assert parse_spec(text) == spec
        assert format_spec(parse_spec(text)) == text


def test_classify_negative_trefoil_json():
    code, out = _run("classify", "sigma(1,2,-3) m=[-1]", "--json")
    assert code == 0
    rep = json.loads(out)
    assert set(rep) == {"input", "invariants", "verdict", "witness", "trace", "warnings"}
    assert rep["verdict"] == "Overtwisted"
    assert rep["witness"] == {"kind": "Lemma55", "indices": [1, 2, 3]}


def test_json_is_byte_stable():
    args = ("classify", "sigma(1,3,-7,2) m=[2,-1]", "--json")
    assert _run(*args) == _run(*args)
    _, out = _run(*args)
    assert out == json.dumps(json.loads(out), indent=2, sort_keys=True) + "\n"


def test_invariants_text():
    code, out = _run("invariants", "sigma(2,3)")
    assert code == 0 and "A: 6" in out and "e: -1/6" in out


def test_b_override():
    code, out = _run("invariants", "sigma(2,3)", "--b=1,-1", "--json")
    rep = json.loads(out)
    assert code == 0 and rep["invariants"]["b"] == [1, -1] and rep["invariants"]["e"] == "-1/6"


def test_invalid_input_exit_codes():
    assert _run("classify", "sigma(2,4) m=[1]")[0] == 2
    assert _run("classify", "sigma(1,2")[0] == 2
    code, out = _run("classify", "sigma(2,4) m=[1]", "--json")
    assert code == 2 and json.loads(out)["warnings"]


def test_unknown_report_has_trace():
    code, out = _run("cable", "5 2", "--u", "1", "--v", "2", "--json")
    rep = json.loads(out)
    assert code == 0 and rep["verdict"] == "Unknown" and rep["trace"]


def test_cable_command():
    code, out = _run("cable", "3 -2", "--json")
    rep = json.loads(out)
    assert code == 0 and rep["verdict"] == "Overtwisted"
    code, out = _run("cable", "3 2", "--parent", "overtwisted", "--json")
    assert json.loads(out)["verdict"] == "Overtwisted"
    code, out = _run("cable", "3 2", "--parent", "sigma(1,2,3) m=[1]", "--json")
    assert json.loads(out)["verdict"] == "Tight"


def test_sqp_command():
    code, out = _run("sqp", "sigma(1,1,1,2) m=[1,-1]", "--json")
    assert code == 0 and json.loads(out)["verdict"] == "false"


def test_curve_svg(tmp_path):
    path = tmp_path / "out.svg"
    code, out = _run("curve", "sigma(1,2,3) m=[1,-1]", "--svg", str(path), "--json")
    assert code == 0
    svg = path.read_text()
    assert svg.startswith("<?xml") and 'version="1.1"' in svg
    assert svg.count('class="lutz"') == 1
    assert json.loads(out)["invariants"]["lutz_census"] == [2]


def test_curve_svg_io_error(tmp_path):
    code, _ = _run("curve", "sigma(1,2,3) m=[1]", "--svg", str(tmp_path / "missing" / "x.svg"))
    assert code == 3


def test_batch_mode():
    lines = "sigma(1,2,3) m=[1]\n# comment\n\nsigma(1,2,-3) m=[-1]\nsigma(2,4) m=[1]\n"
    code, out = _run("classify", "--json", stdin=lines)
    reps = [json.loads(line) for line in out.splitlines()]
    assert code == 2
    assert [r["verdict"] for r in reps[:2]] == ["SteinFillableTight", "Overtwisted"]
    assert len(reps) == 3
