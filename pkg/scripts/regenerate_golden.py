"""Rewrite the golden reports of the bundled corpus.

Run after an intentional change to the report layout or the pipeline, then
review the diff before committing.
"""

import os
import sys

from qhalg.presentation_io import corpus_names, load_corpus
from qhalg.report import Session, analyze, dumps


def main(out_dir=None):
    here = os.path.dirname(os.path.abspath(__file__))
    out_dir = out_dir or os.path.join(here, "..", "src", "qhalg", "corpus", "golden")
    os.makedirs(out_dir, exist_ok=True)
    for name in corpus_names():
        rep = analyze(Session.from_presentation(load_corpus(name)))
        path = os.path.join(out_dir, f"{name}.json")
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(dumps(rep))
        print(f"{name}: dim {rep['algebra']['dim']}, violations {rep['findings']['violations']} -> {path}")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else None)
