import random

import pytest

from qhalg.modules import (dualize, injective, projective, quotient, radical, socle,
                           submodule_generated)
from qhalg.presentation_io import corpus_names, load_corpus
from qhalg.report import Session

_SESSIONS = {}


def session(name):
    """One analysed session per corpus file, shared by the whole run."""
    if name not in _SESSIONS:
        _SESSIONS[name] = Session.from_presentation(load_corpus(name))
    return _SESSIONS[name]


@pytest.fixture(scope="session")
def s532():
    return session("example_5_3_2")


@pytest.fixture(scope="session")
def s533():
    return session("example_5_3_3")


@pytest.fixture(scope="session")
def sa1():
    return session("a1_s1_witness")


@pytest.fixture(scope="session")
def sss():
    return session("semisimple_4")


@pytest.fixture(scope="session")
def all_sessions():
    return {n: session(n) for n in corpus_names()}


def random_vector(field, n, rng):
    return [field(rng.randint(-2, 2)) for _ in range(n)]


def sample_modules(s, count, seed=0):
    """Named modules over a corpus algebra: the structural ones, then random
    cyclic submodules and quotients of projectives."""
    hw = s.hw
    alg = s.algebra
    out = []
    for lam in hw.weights:
        i = hw.idx(lam)
        out += [(f"L({lam})", hw.simple(lam)), (f"Delta({lam})", hw.standard[lam]),
                (f"nabla({lam})", hw.costandard[lam]), (f"P({lam})", projective(alg, i)),
                (f"I({lam})", injective(alg, i))]
        out.append((f"rad P({lam})", radical(projective(alg, i)).as_module()))
        out.append((f"soc I({lam})", socle(injective(alg, i)).as_module()))
    rng = random.Random(seed)
    while len(out) < count:
        lam = rng.choice(hw.weights)
        P = projective(alg, hw.idx(lam))
        mu = rng.randrange(alg.n)
        if P.dims[mu] == 0:
            continue
        v = random_vector(alg.field, P.dims[mu], rng)
        if not any(v):
            continue
        sub = submodule_generated(P, [(mu, v)])
        if rng.random() < 0.5:
            out.append((f"<v> in P({lam}) #{len(out)}", sub.as_module()))
        else:
            out.append((f"P({lam})/<v> #{len(out)}", quotient(P, sub)[0]))
        out = [(n, m) for n, m in out if m.dim > 0]
    return out[:count]


def pytest_terminal_summary(terminalreporter):
    """One line per acceptance criterion, when that file was part of the run."""
    import sys
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[n])
