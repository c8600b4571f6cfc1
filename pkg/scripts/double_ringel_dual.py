"""Ringel dual of the Ringel dual, compared with the original by fingerprint.

S and S'' are Morita equivalent as quasi-hereditary algebras; the check
compares the number of simples, the dimension vectors of the standard
modules, the decomposition matrix and the Cartan matrix.
"""

from qhalg.presentation_io import corpus_names, load_corpus
from qhalg.report import Session
from qhalg.tilting import fingerprint, fingerprints_match, ringel_dual


def main():
    bad = 0
    for name in corpus_names():
        s = Session.from_presentation(load_corpus(name))
        first = ringel_dual(s.hw)
        second = ringel_dual(first.hw)
        ok = fingerprints_match(fingerprint(s.hw), fingerprint(second.hw))
        bad += not ok
        print(f"{name}: dim S = {s.algebra.dim}, dim S' = {first.algebra.dim}, "
              f"dim S'' = {second.algebra.dim}, fingerprints match: {ok}")
    return bad


if __name__ == "__main__":
    raise SystemExit(1 if main() else 0)
