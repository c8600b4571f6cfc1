"""Quiver presentations: validation errors and the path-algebra dimensions,
checked against two independent oracles."""

import os
from collections import defaultdict

import pytest
from sympy import QQ as SQQ
from sympy.polys.matrices import DomainMatrix

from qhalg.exactlin import GF, QQ
from qhalg.presentation_io import load_corpus
from qhalg.quiver import (Presentation, PresentationError, QArrow, Quiver, build_algebra,
                          induced_duality)


def paths_by_length(quiver, max_len):
    out = {v: [x for x in quiver.arrows if x.source == v] for v in quiver.vertices}
    layers = [[(v,) for v in quiver.vertices]]  # trivial paths are tagged by their vertex
    cur = [(a.name,) for a in quiver.arrows]
    for _ in range(1, max_len + 1):
        layers.append(cur)
        cur = [p + (b.name,) for p in cur for b in out[quiver.by_name[p[-1]].target]]
    return layers


def monomial_oracle(pres, max_len):
    """Paths containing no relation path as a contiguous piece, by length."""
    bad = {rel[0][1] for rel in pres.relations}
    assert all(len(rel) == 1 for rel in pres.relations)
    counts = [len(pres.quiver.vertices)]
    for layer in paths_by_length(pres.quiver, max_len)[1:]:
        ok = [p for p in layer if not any(p[i:i + len(b)] == b for b in bad for i in range(len(p)))]
        counts.append(len(ok))
    return counts


def graded_oracle(pres, max_len):
    """dim of the degree-L part of kQ/I for homogeneous relations, via sympy ranks."""
    q = pres.quiver
    rel_len = {len(p) for rel in pres.relations for _, p in rel}
    assert len(rel_len) == 1
    r = rel_len.pop()
    layers = paths_by_length(q, max_len)
    counts = [len(q.vertices)]
    for L in range(1, max_len + 1):
        cols = {p: i for i, p in enumerate(layers[L])}
        if L < r:
            counts.append(len(cols))
            continue
        rows = set()
        for a in range(L - r + 1):
            b = L - r - a
            lefts = layers[a] if a else [None]
            rights = layers[b] if b else [None]
            for rel in pres.relations:
                for u in lefts:
                    for v in rights:
                        row = {}
                        for c, path in rel:
                            full = (u or ()) + path + (v or ())
                            if full in cols:
                                row[cols[full]] = row.get(cols[full], 0) + int(c)
                        row = tuple(sorted((k, x) for k, x in row.items() if x))
                        if row:
                            rows.add(row)
        # block by the column support's (source, target); rows never mix blocks
        blocks = defaultdict(list)
        for row in rows:
            p = layers[L][row[0][0]]
            key = (q.by_name[p[0]].source, q.by_name[p[-1]].target)
            blocks[key].append(row)
        rank = 0
        for key, brows in blocks.items():
            idx = sorted({k for row in brows for k, _ in row})
            pos = {k: i for i, k in enumerate(idx)}
            dense = [[SQQ(0)] * len(idx) for _ in brows]
            for i, row in enumerate(brows):
                for k, x in row:
                    dense[i][pos[k]] = SQQ(x)
            rank += DomainMatrix(dense, (len(brows), len(idx)), SQQ).rank()
        counts.append(len(cols) - rank)
    return counts


def test_example_5_3_2_dimension_oracle():
    pres = load_corpus("example_5_3_2")
    alg = build_algebra(pres)
    oracle = monomial_oracle(pres, 6)
    assert sum(oracle) == 18 == alg.dim
    assert alg.quiver_data.layer_counts == [c for c in oracle if c]


def test_example_5_3_3_dimension_oracle():
    pres = load_corpus("example_5_3_3")
    alg = build_algebra(pres)
    oracle = graded_oracle(pres, 7)
    assert oracle[7] == 0  # every path of length 7 lies in I, hence so does every longer one
    assert sum(oracle) == 44 == alg.dim
    assert alg.quiver_data.layer_counts == oracle[:7]


def test_example_5_3_3_shape():
    pres = load_corpus("example_5_3_3")
    assert len(pres.quiver.vertices) == 4
    assert len(pres.quiver.arrows) == 10
    assert sum(len(r) > 1 for r in pres.relations) == 2


def test_a1_and_semisimple():
    a1 = build_algebra(load_corpus("a1_s1_witness"))
    assert a1.dim == 5
    ss = build_algebra(load_corpus("semisimple_4"))
    assert ss.dim == 4 and ss.is_semisimple()


def test_normal_form_uses_relations():
    pres = load_corpus("example_5_3_3")
    alg = build_algebra(pres)
    qd = alg.quiver_data
    # beta1 epsilon1 = gamma0 delta0 in the algebra
    assert qd.normal_form(("beta1", "epsilon1")) == qd.normal_form(("gamma0", "delta0"))
    assert qd.normal_form(("alpha1", "alpha0")) == {}


def test_duality_is_anti_automorphism():
    for name in ("example_5_3_2", "example_5_3_3", "a1_s1_witness"):
        pres = load_corpus(name)
        sigma = induced_duality(pres, build_algebra(pres))
        assert sigma is not None


A = QArrow


def test_validation_errors():
    q = Quiver(["0", "1"], [A("a", "0", "1"), A("b", "1", "0")])
    cases = [
        (lambda: Quiver(["0", "0"], []), "duplicate-vertex"),
        (lambda: Quiver(["0"], [A("a", "0", "0"), A("a", "0", "0")]), "duplicate-arrow"),
        (lambda: Quiver(["0"], [A("a", "0", "9")]), "unknown-vertex"),
        (lambda: Presentation(q, [[(1, ("a", "c"))]], []), "unknown-arrow"),
        (lambda: Presentation(q, [[(1, ("a", "a"))]], []), "non-composable-path"),
        (lambda: Presentation(q, [[(1, ("a",))]], []), "non-admissible"),
        (lambda: Presentation(q, [[(1, ("a", "b")), (1, ("b", "a"))]], []), "relation-endpoints"),
        (lambda: Presentation(q, [[]], []), "empty-relation"),
        (lambda: Presentation(q, [], [("0", "1"), ("1", "0")]), "order-cycle"),
        (lambda: Presentation(q, [], [], {"a": "b", "b": "b"}), "non-involutive-duality"),
        (lambda: Presentation(q, [], [], {"a": "b"}), "non-involutive-duality"),
    ]
    for make, code in cases:
        with pytest.raises(PresentationError) as err:
            make()
        assert err.value.code == code


def test_duality_must_reverse_arrows():
    q = Quiver(["0", "1"], [A("a", "0", "1"), A("c", "0", "1")])
    with pytest.raises(PresentationError) as err:
        Presentation(q, [], [], {"a": "c", "c": "a"})
    assert err.value.code == "duality-not-reversing"


def test_infinite_dimensional_rejected():
    q = Quiver(["0"], [A("x", "0", "0")])
    pres = Presentation(q, [], [])
    with pytest.raises(PresentationError) as err:
        build_algebra(pres, max_path_len=6)
    assert err.value.code == "not-finite-dimensional"


def test_path_cap_from_environment(monkeypatch):
    q = Quiver(["0"], [A("x", "0", "0")])
    pres = Presentation(q, [[(1, ("x", "x", "x", "x", "x"))]], [])
    monkeypatch.setenv("QHA_MAX_PATH_LEN", "3")
    with pytest.raises(PresentationError):
        build_algebra(pres)
    monkeypatch.setenv("QHA_MAX_PATH_LEN", "10")
    assert build_algebra(pres).dim == 5


def test_loop_with_relation_over_gf2():
    q = Quiver(["0"], [A("x", "0", "0")])
    pres = Presentation(q, [[(1, ("x", "x"))]], [], field=GF(2))
    alg = build_algebra(pres)
    assert alg.dim == 2
    assert alg.field == GF(2)


def test_non_homogeneous_relation():
    # x^2 = x^3 forces x^2 = 0 in a finite-dimensional quotient: x^2 = x^3 = x^4 = ... = 0
    q = Quiver(["0"], [A("x", "0", "0")])
    pres = Presentation(q, [[(1, ("x", "x")), (-1, ("x", "x", "x"))]], [], field=QQ)
    assert build_algebra(pres).dim == 2
