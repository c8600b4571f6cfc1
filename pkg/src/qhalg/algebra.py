"""Finite-dimensional split basic algebras given by structure constants.

An :class:`Algebra` is a basis, a sparse multiplication table and a complete
set of orthogonal primitive idempotents ``e_w`` which are themselves basis
elements.  Every basis element must lie in a single Peirce cell
``e_r A e_c``; all the module theory downstream relies on that grading.

On construction the radical ``J`` is computed from the local characters of
the diagonal cells, and a generating set of ``J`` (a basis of ``J/J^2``
lifted cell by cell) is fixed.  Each basis element is expanded as a linear
combination of words in those generators, which is how modules evaluate the
action of an arbitrary element.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exactlin import Echelon, FieldSpec, Matrix, _matmul_lists, _rref_lists


class AlgebraError(ValueError):
    pass


class DualityError(ValueError):
    """An anti-automorphism candidate violates one of its defining identities."""

    def __init__(self, identity: str, indices, message: str):
        super().__init__(message)
        self.identity = identity
        self.indices = tuple(indices)


@dataclass(frozen=True)
class Arrow:
    """A generator of the radical lying in the Peirce cell ``e_row A e_col``.

    On a left module it maps ``e_col M`` into ``e_row M``.
    """

    name: str
    row: int
    col: int
    vector: tuple  # dense over the cell (row, col)


@dataclass(frozen=True)
class WordNode:
    arrow: int | None  # None for the root e_col
    parent: int | None
    row: int


def _sparse_add(acc, vec, c, p):
    for k, v in vec.items():
        nv = acc.get(k, 0) + c * v
        if p:
            nv %= p
        if nv:
            acc[k] = nv
        else:
            acc.pop(k, None)


def _is_nilpotent(mat, p):
    d = len(mat)
    if d == 0:
        return True
    power = mat
    for _ in range(d):
        if not any(x for r in power for x in r):
            return True
        power = _matmul_lists(power, mat, p)
    return not any(x for r in power for x in r)


class Algebra:
    """Associative unital algebra with a Peirce-graded basis.

    Parameters
    ----------
    field : FieldSpec
    labels : list of str, one per basis element
    table : dict mapping ``(i, j)`` to a sparse vector ``{k: coeff}`` giving
        ``b_i * b_j``; missing pairs multiply to zero
    idempotents : dict weight label -> basis index of ``e_w``
    weights : ordered list of weight labels
    generators : optional list of ``(name, sparse vector)`` preferred as
        generators of the radical (arrows of a quiver, for instance)
    """

    def __init__(self, field: FieldSpec, labels, table, idempotents, weights,
                 generators=None, name: str = "", check: bool = True):
        self.field = field
        self.labels = list(labels)
        self.dim = len(self.labels)
        p = field.characteristic
        self.table = {}
        for key, vec in table.items():
            clean = {k: field(v) for k, v in vec.items()}
            clean = {k: v for k, v in clean.items() if v}
            if clean:
                self.table[key] = clean
        self.weights = list(weights)
        self.n = len(self.weights)
        self.widx = {w: i for i, w in enumerate(self.weights)}
        if set(idempotents) != set(self.weights):
            raise AlgebraError("idempotents must be indexed by the weights")
        self.idem = [idempotents[w] for w in self.weights]
        self.name = name
        self._opposite = None
        self._p = p

        self._grade()
        if check:
            self.check_associative()
        self._radical()
        self._choose_generators(generators or [])
        self._build_words()

    # -- basic arithmetic -------------------------------------------------

    def basis_vector(self, i):
        return {i: self.field.one}

    def product_of_basis(self, i, j):
        return self.table.get((i, j), {})

    def mul(self, x, y):
        """Product of two sparse element vectors."""
        p = self._p
        out = {}
        for i, a in x.items():
            for j, b in y.items():
                prod = self.table.get((i, j))
                if prod:
                    _sparse_add(out, prod, a * b, p)
        return out

    def element(self, spec):
        """Sparse vector for a basis label, basis index, or ``{label: coeff}``."""
        if isinstance(spec, int):
            return {spec: self.field.one}
        if isinstance(spec, str):
            return {self.labels.index(spec): self.field.one}
        out = {}
        for k, v in spec.items():
            idx = self.labels.index(k) if isinstance(k, str) else k
            v = self.field(v)
            if v:
                out[idx] = v
        return out

    def one(self):
        return {e: self.field.one for e in self.idem}

    # -- Peirce grading -----------------------------------------------------

    def _grade(self):
        one = self.field.one
        for a, ea in enumerate(self.idem):
            for b, eb in enumerate(self.idem):
                expect = {ea: one} if a == b else {}
                if self.product_of_basis(ea, eb) != expect:
                    raise AlgebraError(
                        f"idempotents {self.labels[ea]}, {self.labels[eb]} are not orthogonal idempotents")
        self.cell_of = []
        for b in range(self.dim):
            rows = [r for r, e in enumerate(self.idem) if self.product_of_basis(e, b) == {b: one}]
            cols = [c for c, e in enumerate(self.idem) if self.product_of_basis(b, e) == {b: one}]
            if len(rows) != 1 or len(cols) != 1:
                raise AlgebraError(
                    f"basis element {self.labels[b]} does not lie in a single Peirce cell")
            for r, e in enumerate(self.idem):
                if r != rows[0] and self.product_of_basis(e, b):
                    raise AlgebraError(f"e_{self.weights[r]} * {self.labels[b]} should vanish")
                if r != cols[0] and self.product_of_basis(b, e):
                    raise AlgebraError(f"{self.labels[b]} * e_{self.weights[r]} should vanish")
            self.cell_of.append((rows[0], cols[0]))
        self.cells = {(r, c): [] for r in range(self.n) for c in range(self.n)}
        for b, rc in enumerate(self.cell_of):
            self.cells[rc].append(b)
        self.pos = {}
        for rc, lst in self.cells.items():
            for t, b in enumerate(lst):
                self.pos[b] = t
        for (i, j), vec in self.table.items():
            r, m = self.cell_of[i]
            m2, c = self.cell_of[j]
            if m != m2:
                raise AlgebraError(f"{self.labels[i]}*{self.labels[j]} should vanish by grading")
            if any(self.cell_of[k] != (r, c) for k in vec):
                raise AlgebraError(f"{self.labels[i]}*{self.labels[j]} leaves its Peirce cell")

    def cell_dim(self, r, c):
        return len(self.cells[(r, c)])

    def to_cell(self, vec, r, c):
        z = self.field.zero
        out = [z] * len(self.cells[(r, c)])
        for k, v in vec.items():
            if self.cell_of[k] != (r, c):
                raise AlgebraError("vector leaves its Peirce cell")
            out[self.pos[k]] = v
        return out

    def from_cell(self, dense, r, c):
        lst = self.cells[(r, c)]
        return {lst[t]: v for t, v in enumerate(dense) if v}

    def cell_mul(self, x, rx, y, ry):
        """Multiply dense cell vectors x in cell rx=(r,m), y in cell ry=(m,c)."""
        r, m = rx
        m2, c = ry
        if m != m2:
            return None
        xs = self.from_cell(x, r, m)
        ys = self.from_cell(y, m, c)
        return self.to_cell(self.mul(xs, ys), r, c)

    def check_associative(self):
        """Check (b_i b_j) b_k = b_i (b_j b_k) on every composable basis triple."""
        for i in range(self.dim):
            ri, mi = self.cell_of[i]
            for j in self.cells_starting(mi):
                mj = self.cell_of[j][1]
                left_ij = self.product_of_basis(i, j)
                for k in self.cells_starting(mj):
                    lhs = self.mul(left_ij, {k: self.field.one})
                    rhs = self.mul({i: self.field.one}, self.product_of_basis(j, k))
                    if lhs != rhs:
                        raise AlgebraError(
                            f"associativity fails on ({self.labels[i]}, {self.labels[j]}, {self.labels[k]})")

    def check_associative_sampled(self, trials=2000, seed=0):
        """Associativity on ``trials`` random composable basis triples."""
        import random
        rng = random.Random(seed)
        one = self.field.one
        for _ in range(trials):
            i = rng.randrange(self.dim)
            js = self.cells_starting(self.cell_of[i][1])
            j = rng.choice(js)
            ks = self.cells_starting(self.cell_of[j][1])
            k = rng.choice(ks)
            lhs = self.mul(self.product_of_basis(i, j), {k: one})
            rhs = self.mul({i: one}, self.product_of_basis(j, k))
            if lhs != rhs:
                raise AlgebraError(
                    f"associativity fails on ({self.labels[i]}, {self.labels[j]}, {self.labels[k]})")

    def cells_starting(self, r):
        out = []
        for c in range(self.n):
            out.extend(self.cells[(r, c)])
        return out

    # -- radical -------------------------------------------------------------

    def _left_mult_on_cell(self, b, lam):
        lst = self.cells[(lam, lam)]
        cols = []
        for d in lst:
            cols.append(self.to_cell(self.product_of_basis(b, d), lam, lam))
        return [list(r) for r in zip(*cols)] if cols else []

    def _character_value(self, b, lam):
        """The unique eigenvalue of left multiplication by b on e A e."""
        mat = self._left_mult_on_cell(b, lam)
        d = len(mat)
        p = self._p
        trace = sum((mat[i][i] for i in range(d)), self.field.zero)
        if p:
            trace %= p
        if p == 0 or d % p:
            candidates = [trace * self.field.inv(self.field(d)) % p if p else trace / d]
        else:
            candidates = list(range(p))
        for c in candidates:
            shifted = [list(row) for row in mat]
            for i in range(d):
                shifted[i][i] = (shifted[i][i] - c) % p if p else shifted[i][i] - c
            if _is_nilpotent(shifted, p):
                return c
        raise AlgebraError(
            f"e_{self.weights[lam]} A e_{self.weights[lam]} is not split local "
            f"({self.labels[b]} has several eigenvalues); idempotent not primitive")

    def _radical(self):
        p = self._p
        one = self.field.one
        self.character = {}  # basis index on diagonal -> scalar
        self.jbasis = {}     # cell -> list of dense vectors spanning J in the cell
        for (r, c), lst in self.cells.items():
            d = len(lst)
            if r != c:
                vecs = []
                for t in range(d):
                    v = [self.field.zero] * d
                    v[t] = one
                    vecs.append(v)
                self.jbasis[(r, c)] = vecs
                continue
            e = self.idem[r]
            vecs = []
            for b in lst:
                if b == e:
                    self.character[b] = one
                    continue
                cv = self._character_value(b, r)
                self.character[b] = cv
                v = [self.field.zero] * d
                v[self.pos[b]] = one
                if cv:
                    v[self.pos[e]] = (-cv) % p if p else -cv
                vecs.append(v)
            self.jbasis[(r, c)] = vecs
        # the characters must assemble to an algebra map A -> k^n
        for lam in range(self.n):
            for mu in range(self.n):
                for b1 in self.cells[(lam, mu)]:
                    for b2 in self.cells[(mu, lam)]:
                        prod = self.product_of_basis(b1, b2)
                        val = sum((v * self.character[k] for k, v in prod.items()), self.field.zero)
                        if p:
                            val %= p
                        expect = self.character[b1] * self.character[b2] if lam == mu else 0
                        if p:
                            expect %= p
                        if val != expect:
                            raise AlgebraError(
                                f"radical is not an ideal: {self.labels[b1]}*{self.labels[b2]}; "
                                "idempotents are not primitive or the algebra is not basic")
        # powers of J
        powers = [self.jbasis]
        sjb = {rc: [self.from_cell(v, *rc) for v in vs] for rc, vs in self.jbasis.items()}
        while any(powers[-1][rc] for rc in powers[-1]):
            if len(powers) > self.dim + 1:
                raise AlgebraError("radical candidate is not nilpotent")
            nxt = {}
            prev = powers[-1]
            sprev = {rc: [self.from_cell(v, *rc) for v in vs] for rc, vs in prev.items()}
            for (r, c) in self.cells:
                ech = Echelon(self.field, self.cell_dim(r, c))
                cap = len(prev[(r, c)])  # J^(k+2) lies inside J^(k+1)
                for m in range(self.n):
                    if len(ech.rows) == cap:
                        break
                    for x in sprev[(r, m)]:
                        if len(ech.rows) == cap:
                            break
                        for y in sjb[(m, c)]:
                            ech.add(self.to_cell(self.mul(x, y), r, c))
                            if len(ech.rows) == cap:
                                break
                nxt[(r, c)] = ech.basis()
            powers.append(nxt)
        self.jpowers = powers  # powers[k] spans J^(k+1)
        self.loewy_length = len(powers)

    def radical_basis(self):
        """Sparse vectors spanning the Jacobson radical."""
        out = []
        for (r, c), vecs in self.jbasis.items():
            out.extend(self.from_cell(v, r, c) for v in vecs)
        return out

    # -- generators and words ---------------------------------------------

    def _choose_generators(self, preferred):
        arrows = []
        j2 = self.jpowers[1] if len(self.jpowers) > 1 else {rc: [] for rc in self.cells}
        by_cell = {}
        for name, vec in preferred:
            vec = {k: self.field(v) for k, v in vec.items()}
            vec = {k: v for k, v in vec.items() if v}
            if not vec:
                continue
            cells = {self.cell_of[k] for k in vec}
            if len(cells) != 1:
                raise AlgebraError(f"generator {name} is not Peirce homogeneous")
            by_cell.setdefault(cells.pop(), []).append((name, vec))
        counter = 0
        for (r, c) in sorted(self.cells):
            jdim = len(self.jbasis[(r, c)])
            ech = Echelon(self.field, self.cell_dim(r, c), j2[(r, c)])
            need = jdim - ech.dim
            jspan = Echelon(self.field, self.cell_dim(r, c), self.jbasis[(r, c)])
            cands = [(nm, self.to_cell(v, r, c)) for nm, v in by_cell.get((r, c), [])]
            for v in self.jbasis[(r, c)]:
                cands.append((None, v))
            got = 0
            for nm, v in cands:
                if got == need:
                    break
                if not jspan.contains(v):
                    raise AlgebraError(f"generator {nm} is not in the radical")
                if ech.add(v):
                    if nm is None:
                        sp = self.from_cell(v, r, c)
                        if len(sp) == 1 and list(sp.values())[0] == self.field.one:
                            nm = self.labels[next(iter(sp))]
                        else:
                            nm = f"g{counter}"
                            counter += 1
                    arrows.append(Arrow(nm, r, c, tuple(v)))
                    got += 1
        self.arrows = arrows
        self.arrows_into = {c: [k for k, a in enumerate(arrows) if a.col == c] for c in range(self.n)}

    def _build_words(self):
        """For each column weight c, a spanning tree of words for A e_c."""
        self.word_nodes = {}
        self.word_vecs = {}
        self.expansion = {}
        p = self._p
        for c in range(self.n):
            nodes = [WordNode(None, None, c)]
            root = [self.field.zero] * self.cell_dim(c, c)
            root[self.pos[self.idem[c]]] = self.field.one
            vecs = [root]
            echs = {r: Echelon(self.field, self.cell_dim(r, c)) for r in range(self.n)}
            echs[c].add(root)
            frontier = [0]
            while frontier:
                new_frontier = []
                for idx in frontier:
                    node = nodes[idx]
                    for k, a in enumerate(self.arrows):
                        if a.col != node.row:
                            continue
                        v = self.cell_mul(list(a.vector), (a.row, a.col), vecs[idx], (node.row, c))
                        if echs[a.row].add(v):
                            nodes.append(WordNode(k, idx, a.row))
                            vecs.append(v)
                            new_frontier.append(len(nodes) - 1)
                frontier = new_frontier
            for r in range(self.n):
                if echs[r].dim != self.cell_dim(r, c):
                    raise AlgebraError("generators do not generate the algebra")
            self.word_nodes[c] = nodes
            self.word_vecs[c] = vecs
            # express every basis element of the column via the words
            for r in range(self.n):
                ids = [i for i, nd in enumerate(nodes) if nd.row == r]
                d = len(ids)
                if d == 0:
                    continue
                wmat = [[vecs[i][t] for i in ids] for t in range(d)]  # columns = words
                aug = [row + [self.field.one if s == t else self.field.zero for s in range(d)]
                       for t, row in enumerate(wmat)]
                red, piv = _rref_lists(aug, 2 * d, p)
                inv = [row[d:] for row in red]
                for t, b in enumerate(self.cells[(r, c)]):
                    self.expansion[b] = [(ids[i], inv[i][t]) for i in range(d) if inv[i][t]]

    def word_of(self, c, node_idx):
        """The arrow names of a word node, leftmost factor first."""
        names = []
        nodes = self.word_nodes[c]
        while nodes[node_idx].arrow is not None:
            names.append(self.arrows[nodes[node_idx].arrow].name)
            node_idx = nodes[node_idx].parent
        return names

    # -- derived algebras -------------------------------------------------

    def opposite(self) -> "Algebra":
        """The opposite algebra: same basis and idempotents, c'[i][j] = c[j][i]."""
        if self._opposite is None:
            table = {(j, i): v for (i, j), v in self.table.items()}
            gens = [(a.name, self.from_cell(list(a.vector), a.row, a.col)) for a in self.arrows]
            op = Algebra(self.field, self.labels, table,
                         {w: self.idem[i] for i, w in enumerate(self.weights)},
                         self.weights, generators=gens, name=f"{self.name}^op", check=False)
            op._opposite = self
            self._opposite = op
        return self._opposite

    def is_semisimple(self):
        return self.dim == self.n

    def cartan_matrix(self):
        """``C[l][m] = dim Hom(P(l), P(m)) = dim e_l A e_m``."""
        return [[self.cell_dim(l, m) for m in range(self.n)] for l in range(self.n)]

    def __repr__(self):
        return f"Algebra({self.name or '?'}, dim={self.dim}, weights={self.weights}, field={self.field})"


def _span_cells(alg: Algebra, gamma_idx):
    """Per-cell echelon spans of the two-sided ideal A e_Gamma A."""
    spans = {}
    for (r, c) in alg.cells:
        ech = Echelon(alg.field, alg.cell_dim(r, c))
        for g in gamma_idx:
            for x in alg.cells[(r, g)]:
                for y in alg.cells[(g, c)]:
                    ech.add(alg.to_cell(alg.product_of_basis(x, y), r, c))
        spans[(r, c)] = ech
    return spans


def ideal_dimension(alg: Algebra, gamma) -> int:
    gidx = [alg.widx[g] for g in gamma]
    return sum(e.dim for e in _span_cells(alg, gidx).values())


def quotient_by_idempotent_ideal(alg: Algebra, gamma) -> Algebra:
    """``A / A e_Gamma A`` with basis a subset of the original basis."""
    gamma = set(gamma)
    unknown = gamma - set(alg.weights)
    if unknown:
        raise ValueError(f"unknown weights {sorted(unknown)}")
    gidx = [alg.widx[g] for g in gamma]
    spans = _span_cells(alg, gidx)
    p = alg._p
    kept_idx = {}
    proj = {}
    for (r, c), ech in spans.items():
        d = alg.cell_dim(r, c)
        lst = alg.cells[(r, c)]
        order = list(range(d))
        if r == c:
            t0 = alg.pos[alg.idem[r]]
            order.remove(t0)
            order.insert(0, t0)
        grow = Echelon(alg.field, d, ech.basis())
        kept = []
        for t in order:
            u = [alg.field.zero] * d
            u[t] = alg.field.one
            if grow.add(u):
                kept.append(t)
        kept.sort()
        kept_idx[(r, c)] = kept
        if not kept:
            continue
        # columns: kept unit vectors then ideal basis; invert to read kept coordinates
        ib = ech.basis()
        cols = []
        for t in kept:
            u = [alg.field.zero] * d
            u[t] = alg.field.one
            cols.append(u)
        cols.extend(ib)
        mat = [[cols[j][i] for j in range(d)] for i in range(d)]
        aug = [row + [alg.field.one if s == i else alg.field.zero for s in range(d)]
               for i, row in enumerate(mat)]
        red, _ = _rref_lists(aug, 2 * d, p)
        inv = [row[d:] for row in red]
        proj[(r, c)] = inv[:len(kept)]  # rows giving kept coordinates
    keep_w = [w for w in alg.weights if w not in gamma]
    new_index = {}
    labels = []
    for b in range(alg.dim):
        r, c = alg.cell_of[b]
        if alg.weights[r] in gamma or alg.weights[c] in gamma:
            continue
        if alg.pos[b] in kept_idx[(r, c)]:
            new_index[b] = len(labels)
            labels.append(alg.labels[b])

    def project(vec, r, c):
        dense = alg.to_cell(vec, r, c)
        rows = proj.get((r, c))
        out = {}
        if not rows:
            return out
        for i, t in enumerate(kept_idx[(r, c)]):
            s = sum((x * y for x, y in zip(rows[i], dense) if y), alg.field.zero)
            if p:
                s %= p
            if s:
                out[new_index[alg.cells[(r, c)][t]]] = s
        return out

    table = {}
    inv_index = {v: k for k, v in new_index.items()}
    for i2, i in inv_index.items():
        for j2, j in inv_index.items():
            prod = alg.product_of_basis(i, j)
            if prod:
                r = alg.cell_of[i][0]
                c = alg.cell_of[j][1]
                v = project(prod, r, c)
                if v:
                    table[(i2, j2)] = v
    idem = {w: new_index[alg.idem[alg.widx[w]]] for w in keep_w}
    gens = []
    for a in alg.arrows:
        if alg.weights[a.row] in gamma or alg.weights[a.col] in gamma:
            continue
        v = project(alg.from_cell(list(a.vector), a.row, a.col), a.row, a.col)
        if v:
            gens.append((a.name, v))
    q = Algebra(alg.field, labels, table, idem, keep_w, generators=gens,
                name=f"{alg.name}/<e{sorted(gamma)}>", check=False)
    # link back so modules can be inflated and restricted
    q.parent = alg
    q.parent_kind = "quotient"
    q.lift_index = inv_index
    q.project_from_parent = project
    return q


def corner_algebra(alg: Algebra, gamma) -> Algebra:
    """``e A e`` for ``e`` the sum of the idempotents indexed by ``gamma``."""
    gamma = set(gamma)
    if not gamma:
        raise ValueError("corner algebra needs a nonempty weight set")
    unknown = gamma - set(alg.weights)
    if unknown:
        raise ValueError(f"unknown weights {sorted(unknown)}")
    keep_w = [w for w in alg.weights if w in gamma]
    keep = {alg.widx[w] for w in keep_w}
    new_index = {}
    labels = []
    for b in range(alg.dim):
        r, c = alg.cell_of[b]
        if r in keep and c in keep:
            new_index[b] = len(labels)
            labels.append(alg.labels[b])
    table = {}
    for (i, j), vec in alg.table.items():
        if i in new_index and j in new_index:
            table[(new_index[i], new_index[j])] = {new_index[k]: v for k, v in vec.items()}
    idem = {w: new_index[alg.idem[alg.widx[w]]] for w in keep_w}
    gens = []
    for a in alg.arrows:
        if a.row in keep and a.col in keep:
            v = alg.from_cell(list(a.vector), a.row, a.col)
            gens.append((a.name, {new_index[k]: x for k, x in v.items()}))
    c = Algebra(alg.field, labels, table, idem, keep_w, generators=gens,
                name=f"e{sorted(gamma)}{alg.name}e", check=False)
    c.parent = alg
    c.parent_kind = "corner"
    c.lift_index = {v: k for k, v in new_index.items()}
    return c


class AntiAutomorphism:
    """A validated anti-automorphism fixing every idempotent ``e_w``.

    ``matrix`` has the coordinates of ``sigma(b_j)`` in column ``j``.
    """

    def __init__(self, algebra: Algebra, matrix: Matrix):
        self.algebra = algebra
        self.matrix = matrix
        cols = matrix.T.tolist()
        self._images = [{k: v for k, v in enumerate(col) if v} for col in cols]

    def apply(self, vec):
        p = self.algebra._p
        out = {}
        for k, v in vec.items():
            _sparse_add(out, self._images[k], v, p)
        return out

    def __call__(self, vec):
        return self.apply(vec)


def check_anti_automorphism(alg: Algebra, sigma: Matrix) -> AntiAutomorphism:
    """Validate ``sigma``; raise :class:`DualityError` naming the broken identity."""
    if sigma.shape != (alg.dim, alg.dim):
        raise DualityError("shape", (), f"sigma must be {alg.dim}x{alg.dim}")
    if sigma.field != alg.field:
        raise DualityError("field", (), "sigma is over a different field")
    cand = AntiAutomorphism(alg, sigma)
    for w, e in zip(alg.weights, alg.idem):
        if cand.apply({e: alg.field.one}) != {e: alg.field.one}:
            raise DualityError("idempotent not fixed", (e,),
                               f"idempotent not fixed: sigma(e_{w}) != e_{w}")
    ident = Matrix.identity(alg.field, alg.dim)
    if sigma @ sigma != ident:
        bad = next(j for j in range(alg.dim) if (sigma @ sigma).col(j) != ident.col(j))
        raise DualityError("involution", (bad,),
                           f"sigma is not an involution on {alg.labels[bad]}")
    for i in range(alg.dim):
        si = cand._images[i]
        for j in alg.cells_starting(alg.cell_of[i][1]):
            lhs = cand.apply(alg.product_of_basis(i, j))
            rhs = alg.mul(cand._images[j], si)
            if lhs != rhs:
                raise DualityError("anti-multiplicative", (i, j),
                                   f"sigma({alg.labels[i]}*{alg.labels[j]}) != "
                                   f"sigma({alg.labels[j]})*sigma({alg.labels[i]})")
    # pairs that multiply to zero must still anti-multiply to zero
    for i in range(alg.dim):
        for j in range(alg.dim):
            if alg.cell_of[i][1] != alg.cell_of[j][0]:
                if alg.mul(cand._images[j], cand._images[i]):
                    raise DualityError("anti-multiplicative", (i, j),
                                       f"sigma({alg.labels[j]})*sigma({alg.labels[i]}) should vanish")
    return cand


def semisimple_algebra(field: FieldSpec, weights, name="semisimple") -> Algebra:
    labels = [f"e{w}" for w in weights]
    table = {(i, i): {i: 1} for i in range(len(weights))}
    return Algebra(field, labels, table, {w: i for i, w in enumerate(weights)}, weights, name=name)


def direct_product(a: Algebra, b: Algebra, name="") -> Algebra:
    """Block product ``a x b``; weights of ``b`` must be disjoint from those of ``a``."""
    if set(a.weights) & set(b.weights):
        raise ValueError("weights must be disjoint")
    off = a.dim
    labels = list(a.labels) + list(b.labels)
    table = dict(a.table)
    for (i, j), v in b.table.items():
        table[(i + off, j + off)] = {k + off: x for k, x in v.items()}
    idem = {w: a.idem[i] for i, w in enumerate(a.weights)}
    idem.update({w: b.idem[i] + off for i, w in enumerate(b.weights)})
    gens = [(x.name, a.from_cell(list(x.vector), x.row, x.col)) for x in a.arrows]
    gens += [(x.name, {k + off: v for k, v in b.from_cell(list(x.vector), x.row, x.col).items()})
             for x in b.arrows]
    return Algebra(a.field, labels, table, idem, list(a.weights) + list(b.weights),
                   generators=gens, name=name or f"{a.name}x{b.name}")
