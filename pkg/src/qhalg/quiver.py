"""Quiver presentations and their realisation as structure-constant algebras.

Paths compose on the right: the path ``(p, q)`` traverses ``p`` first and then
``q``, and the algebra product of two paths is their concatenation in that
order.  So an arrow ``a: s -> t`` lies in the Peirce cell ``e_s A e_t``.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field as dc_field

from .algebra import Algebra, AntiAutomorphism, check_anti_automorphism, DualityError
from .exactlin import FieldSpec, Matrix, QQ, SparseEchelon

DEFAULT_MAX_PATH_LEN = 64


class PresentationError(ValueError):
    """Invalid presentation; ``code`` is a stable machine-readable tag."""

    def __init__(self, code: str, message: str, context: str = ""):
        super().__init__(f"[{code}] {message}" + (f" (at {context})" if context else ""))
        self.code = code
        self.context = context


@dataclass(frozen=True)
class QArrow:
    name: str
    source: str
    target: str


@dataclass
class Quiver:
    vertices: list
    arrows: list

    def __post_init__(self):
        if len(set(self.vertices)) != len(self.vertices):
            raise PresentationError("duplicate-vertex", "vertex labels must be unique")
        names = [a.name for a in self.arrows]
        if len(set(names)) != len(names):
            raise PresentationError("duplicate-arrow", "arrow names must be unique")
        vs = set(self.vertices)
        for a in self.arrows:
            if a.source not in vs or a.target not in vs:
                raise PresentationError("unknown-vertex",
                                        f"arrow {a.name} has an undeclared endpoint", f"arrows.{a.name}")
        self.by_name = {a.name: a for a in self.arrows}

    def check_path(self, path, context=""):
        if not path:
            raise PresentationError("empty-path", "relation paths must be nonempty", context)
        for nm in path:
            if nm not in self.by_name:
                raise PresentationError("unknown-arrow", f"unknown arrow {nm!r} in path", context)
        for x, y in zip(path, path[1:]):
            if self.by_name[x].target != self.by_name[y].source:
                raise PresentationError("non-composable-path",
                                        f"non-composable path: {x} ends at {self.by_name[x].target}, "
                                        f"{y} starts at {self.by_name[y].source}", context)

    def endpoints(self, path):
        return self.by_name[path[0]].source, self.by_name[path[-1]].target


@dataclass
class Presentation:
    """Quiver, admissible relations, covering order pairs and optional duality.

    ``relations`` is a list of relations, each a list of ``(coeff, path)``
    with ``path`` a tuple of arrow names, first-traversed first.  ``order``
    lists covering pairs ``(smaller, larger)``.
    """

    quiver: Quiver
    relations: list
    order: list
    duality: dict | None = None
    field: FieldSpec = QQ
    name: str = ""
    meta: dict = dc_field(default_factory=dict)

    def __post_init__(self):
        self.relations = [[(self.field(c), tuple(path)) for c, path in rel] for rel in self.relations]
        self.order = [tuple(pair) for pair in self.order]
        self.validate()

    def validate(self):
        q = self.quiver
        for n, rel in enumerate(self.relations):
            ctx = f"relations[{n}]"
            if not rel:
                raise PresentationError("empty-relation", "relation has no terms", ctx)
            ends = set()
            for c, path in rel:
                q.check_path(path, ctx)
                if len(path) < 2:
                    raise PresentationError("non-admissible",
                                            f"relation term {'*'.join(path)} has length < 2", ctx)
                ends.add(q.endpoints(path))
            if len(ends) != 1:
                raise PresentationError("relation-endpoints",
                                        "paths in one relation must share source and target", ctx)
        vs = set(q.vertices)
        for n, pair in enumerate(self.order):
            if len(pair) != 2 or pair[0] not in vs or pair[1] not in vs:
                raise PresentationError("unknown-vertex", f"bad order pair {pair}", f"order[{n}]")
            if pair[0] == pair[1]:
                raise PresentationError("order-cycle", f"reflexive order pair {pair}", f"order[{n}]")
        closure = transitive_closure(self.order)
        for a, b in closure:
            if a == b:
                raise PresentationError("order-cycle", f"cycle in order through {a}", "order")
        if self.duality is not None:
            d = self.duality
            for a, b in d.items():
                if a not in q.by_name or b not in q.by_name:
                    raise PresentationError("unknown-arrow", f"duality maps {a} -> {b}", f"duality.{a}")
            if set(d) != set(q.by_name):
                missing = sorted(set(q.by_name) - set(d))
                raise PresentationError("non-involutive-duality",
                                        f"duality must be defined on every arrow; missing {missing}",
                                        "duality")
            for a, b in d.items():
                if d[b] != a:
                    raise PresentationError("non-involutive-duality",
                                            f"duality is not an involution: {a} -> {b} -> {d[b]}",
                                            f"duality.{a}")
                A, B = q.by_name[a], q.by_name[b]
                if A.source != B.target or A.target != B.source:
                    raise PresentationError("duality-not-reversing",
                                            f"duality must reverse arrows: {a} vs {b}", f"duality.{a}")

    @property
    def strict_order(self):
        return transitive_closure(self.order)


def transitive_closure(pairs):
    rel = set(pairs)
    changed = True
    while changed:
        changed = False
        for a, b in list(rel):
            for c, d in list(rel):
                if b == c and (a, d) not in rel:
                    rel.add((a, d))
                    changed = True
    return rel


@dataclass
class QuiverAlgebraData:
    presentation: Presentation
    basis_paths: list          # per basis index: ('e', vertex) or tuple of arrow names
    layer_counts: list         # number of basis paths of each length
    reducer: SparseEchelon
    cutoff: int                # paths of length >= cutoff vanish

    def normal_form(self, path):
        """Reduce a path (tuple of arrow names) to ``{basis index: coeff}``."""
        if len(path) >= self.cutoff:
            return {}
        key = self._key(path)
        row = self.reducer.reduce({key: self.presentation.field.one})
        out = {}
        for k, v in row.items():
            out[self._index[k]] = v
        return out

    def _key(self, path):
        return _path_key(path, self._rank)


def _path_key(path, rank):
    # smaller key = larger path, so sparse pivots land on the largest paths
    return (-len(path), tuple(-rank[a] for a in path))


def _max_len_from_env():
    raw = os.environ.get("QHA_MAX_PATH_LEN")
    return int(raw) if raw else DEFAULT_MAX_PATH_LEN


def _concat_trunc(elem, arrow, left, cap):
    out = {}
    for path, c in elem.items():
        new = (arrow,) + path if left else path + (arrow,)
        if len(new) < cap:
            out[new] = c
    return out


def build_algebra(pres: Presentation, max_path_len: int | None = None) -> Algebra:
    """Realise ``kQ/I`` as an :class:`Algebra` whose basis is a set of paths.

    The ideal is handled through its truncations ``I + J^L``; once every path
    of length ``L-1`` lies in ``I + J^L`` the radical power ``J^(L-1)`` is in
    ``I`` and the truncated quotient is the algebra itself.
    """
    cap = max_path_len if max_path_len is not None else _max_len_from_env()
    q = pres.quiver
    fld = pres.field
    names = sorted(a.name for a in q.arrows)
    rank = {nm: i for i, nm in enumerate(names)}
    out_of = {v: [a.name for a in q.arrows if a.source == v] for v in q.vertices}
    into = {v: [a.name for a in q.arrows if a.target == v] for v in q.vertices}

    def key(path):
        return _path_key(path, rank)

    rels = [{key(path): c for c, path in rel} for rel in pres.relations]
    rels = [{k: v for k, v in r.items() if v} for r in rels]
    unkey = {}

    def remember(path):
        unkey[key(path)] = path

    for rel in pres.relations:
        for _, path in rel:
            remember(path)

    # paths by exact length, built lazily
    paths_by_len = {0: [], 1: [(a.name,) for a in q.arrows]}
    for p1 in paths_by_len[1]:
        remember(p1)

    def paths_of_len(n):
        while n not in paths_by_len:
            m = max(paths_by_len)
            nxt = []
            for path in paths_by_len[m]:
                for nm in out_of[q.by_name[path[-1]].target]:
                    new = path + (nm,)
                    nxt.append(new)
                    remember(new)
            paths_by_len[m + 1] = nxt
        return paths_by_len[n]

    prev = SparseEchelon(fld)  # R_{L-1}
    L = 1
    while True:
        L += 1
        if L - 1 > cap:
            raise PresentationError("not-finite-dimensional",
                                    f"presentation not finite-dimensional below path length {cap}")
        cur = SparseEchelon(fld)
        for r in rels:
            cur.add({k: v for k, v in r.items() if -k[0] < L})
        for row in list(prev.rows.values()):
            elem = {unkey[k]: v for k, v in row.items()}
            some = next(iter(elem))
            s = q.by_name[some[0]].source
            t = q.by_name[some[-1]].target
            for nm in into[s]:
                new = _concat_trunc(elem, nm, True, L)
                for pth in new:
                    remember(pth)
                cur.add({key(pth): c for pth, c in new.items()})
            for nm in out_of[t]:
                new = _concat_trunc(elem, nm, False, L)
                for pth in new:
                    remember(pth)
                cur.add({key(pth): c for pth, c in new.items()})
        top = paths_of_len(L - 1)
        if all(cur.contains({key(pth): fld.one}) for pth in top):
            break
        prev = cur
    cutoff = L - 1
    reducer = prev

    # basis: trivial paths, then surviving paths ordered by (length, names)
    basis_paths = [("e", v) for v in q.vertices]
    layer_counts = [len(q.vertices)]
    for n in range(1, cutoff):
        layer = [pth for pth in paths_of_len(n) if key(pth) not in reducer.rows]
        layer.sort(key=lambda pth: [rank[a] for a in pth])
        basis_paths.extend(layer)
        layer_counts.append(len(layer))
    while layer_counts and layer_counts[-1] == 0 and len(layer_counts) > 1:
        layer_counts.pop()
    nv = len(q.vertices)
    vpos = {v: i for i, v in enumerate(q.vertices)}
    data = QuiverAlgebraData(pres, basis_paths, layer_counts, reducer, cutoff)
    data._rank = rank
    data._index = {key(bp): i for i, bp in enumerate(basis_paths) if i >= nv}

    # basis indices below nv are the trivial paths
    def src(i):
        return basis_paths[i][1] if i < nv else q.by_name[basis_paths[i][0]].source

    def tgt(i):
        return basis_paths[i][1] if i < nv else q.by_name[basis_paths[i][-1]].target

    table = {}
    one = fld.one
    for i, bi in enumerate(basis_paths):
        for j, bj in enumerate(basis_paths):
            if tgt(i) != src(j):
                continue
            if i < nv:
                table[(i, j)] = {j: one}
            elif j < nv:
                table[(i, j)] = {i: one}
            else:
                nf = data.normal_form(tuple(bi) + tuple(bj))
                if nf:
                    table[(i, j)] = nf
    labels = [f"e{bp[1]}" if i < nv else "*".join(bp) for i, bp in enumerate(basis_paths)]
    gens = []
    for a in q.arrows:
        nf = data.normal_form((a.name,))
        gens.append((a.name, nf))
    alg = Algebra(fld, labels, table, {v: vpos[v] for v in q.vertices}, list(q.vertices),
                  generators=gens, name=pres.name)
    alg.quiver_data = data
    return alg


def induced_duality(pres: Presentation, alg: Algebra) -> AntiAutomorphism:
    """Extend the arrow involution to paths by reverse-and-swap and validate it."""
    if pres.duality is None:
        raise PresentationError("no-duality", "presentation has no duality")
    data = alg.quiver_data
    d = pres.duality
    for n, rel in enumerate(pres.relations):
        img = {}
        for c, path in rel:
            swapped = tuple(d[a] for a in reversed(path))
            for k, v in data.normal_form(swapped).items():
                img[k] = img.get(k, 0) + c * v
        p = pres.field.characteristic
        if any((v % p if p else v) for v in img.values()):
            raise DualityError("relation ideal not stable", (n,),
                               f"relation {n} is not mapped into the relation ideal")
    nv = len(pres.quiver.vertices)
    cols = []
    for i, bp in enumerate(data.basis_paths):
        if i < nv:
            cols.append({i: pres.field.one})
        else:
            cols.append(data.normal_form(tuple(d[a] for a in reversed(bp))))
    z = pres.field.zero
    rows = [[cols[j].get(i, z) for j in range(alg.dim)] for i in range(alg.dim)]
    return check_anti_automorphism(alg, Matrix(pres.field, rows))
