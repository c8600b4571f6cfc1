"""Recompute the corpus over small prime fields and compare with the rationals.

The examples are defined over an unspecified field k; their relations have
integer coefficients +-1, so they make sense in every characteristic.  This
prints, per field, the algebra dimension, the dimension table and the
property verdicts, and flags any difference from the rational computation.
"""

import sys

from qhalg.exactlin import GF, QQ
from qhalg.presentation_io import corpus_names, load_corpus
from qhalg.quiver import Presentation
from qhalg.report import Session, section_dimensions, section_properties


def over(pres, field):
    rels = [[(str(c), path) for c, path in rel] for rel in pres.relations]
    return Presentation(pres.quiver, rels, pres.order, pres.duality, field, pres.name, dict(pres.meta))


def summary(pres):
    s = Session.from_presentation(pres)
    if not s.certified:
        return {"dim": s.algebra.dim, "certified": False}
    dims = section_dimensions(s)
    props = section_properties(s)
    return {"dim": s.algebra.dim, "certified": True, "dimensions": dims,
            "verdicts": {k: v["holds"] for k, v in props["verdicts"].items()}}


def main(primes=(2, 3, 5)):
    differences = 0
    for name in corpus_names():
        base = load_corpus(name)
        ref = summary(over(base, QQ))
        print(f"{name}: over QQ dim {ref['dim']}, verdicts {ref.get('verdicts')}")
        for p in primes:
            got = summary(over(base, GF(p)))
            same = got == ref
            differences += not same
            print(f"  GF({p}): dim {got['dim']}, {'same as QQ' if same else 'DIFFERS'}")
            if not same:
                print(f"    verdicts {got.get('verdicts')}")
    return differences


if __name__ == "__main__":
    primes = tuple(int(x) for x in sys.argv[1:]) or (2, 3, 5)
    sys.exit(1 if main(primes) else 0)
