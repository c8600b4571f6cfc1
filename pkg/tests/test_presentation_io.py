import json

import pytest

from qhalg.presentation_io import (corpus, corpus_names, load, load_corpus, parse, resolve,
                                   serialize, to_dict)
from qhalg.quiver import PresentationError


def test_corpus_contents():
    assert set(corpus_names()) >= {"example_5_3_2", "example_5_3_3", "a1_s1_witness",
                                   "semisimple_4"}
    assert len(corpus()) == len(corpus_names())


def test_example_5_3_2_file():
    p = load_corpus("example_5_3_2")
    assert len(p.quiver.vertices) == 4
    assert len(p.quiver.arrows) == 6
    assert len(p.relations) == 5
    assert sorted(p.order) == [("0", "1"), ("1", "2"), ("2", "3")]
    assert p.duality["alpha0"] == "alpha1"


def test_example_5_3_3_file():
    p = load_corpus("example_5_3_3")
    assert len(p.quiver.arrows) == 10
    mixed = [r for r in p.relations if len(r) > 1]
    assert len(mixed) == 2
    paths = {tuple(path) for r in mixed for _, path in r}
    assert ("beta1", "epsilon1") in paths and ("gamma0", "delta0") in paths


@pytest.mark.parametrize("name", corpus_names())
def test_round_trip(name):
    p = load_corpus(name)
    text = serialize(p)
    q = parse(text)
    assert serialize(q) == text
    assert to_dict(q) == to_dict(p)


def base_doc():
    return json.loads(serialize(load_corpus("example_5_3_2")))


def error_code(doc):
    with pytest.raises(PresentationError) as err:
        parse(json.dumps(doc) if not isinstance(doc, str) else doc)
    return err.value


def test_unknown_and_missing_keys():
    d = base_doc()
    d["colour"] = "red"
    assert error_code(d).code == "unknown-key"
    d = base_doc()
    del d["arrows"]
    assert error_code(d).code == "missing-key"


def test_non_composable_path():
    d = base_doc()
    d["relations"].append([{"coeff": "1", "path": ["alpha0", "gamma0"]}])
    assert error_code(d).code == "non-composable-path"


def test_bad_field_and_coefficient():
    d = base_doc()
    d["field"] = {"prime": 6}
    assert error_code(d).code == "bad-field"
    d = base_doc()
    d["field"] = "reals"
    assert error_code(d).code == "bad-field"
    d = base_doc()
    d["relations"][0][0]["coeff"] = 1.5
    assert error_code(d).code == "bad-coefficient"


def test_syntax_error_reports_line():
    err = error_code('{\n  "field": "rationals",\n  "vertices": [\n}')
    assert err.code == "syntax"
    assert "line 4" in err.context
    assert error_code("[1, 2]").code == "bad-document"


def test_prime_field_and_exact_coefficients():
    d = base_doc()
    d["field"] = {"prime": 3}
    d["relations"][0][0]["coeff"] = "2/5"
    p = parse(json.dumps(d))
    assert p.field.characteristic == 3


def test_resolve(tmp_path):
    path = tmp_path / "a.json"
    path.write_text(serialize(load_corpus("a1_s1_witness")))
    assert len(resolve(str(path)).quiver.arrows) == 2
    assert len(load(path).quiver.vertices) == 2
    assert resolve("semisimple_4.json").quiver.arrows == []
    with pytest.raises(PresentationError) as err:
        resolve("no_such_thing")
    assert err.value.code == "no-such-file"
