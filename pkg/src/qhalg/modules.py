"""Finite-dimensional left modules over an :class:`~qhalg.algebra.Algebra`.

A module is stored by its weight spaces ``e_l M`` (dimension ``dims[l]``) and
one matrix per radical generator ("arrow") ``a`` in Peirce cell ``(r, c)``:
``mats[k]`` maps ``e_c M`` to ``e_r M`` and has shape ``dims[r] x dims[c]``.
The action of any other basis element is recovered from the word expansions
kept by the algebra.

Vectors of a weight space are plain lists of field elements; a vector of the
whole module is the concatenation of its weight components in weight order.
"""

from __future__ import annotations

import random

from .algebra import Algebra, AntiAutomorphism
from .exactlin import Echelon, Matrix, _rref_lists, sparse_nullspace, sparse_rank


class ModuleError(ValueError):
    pass


class IsomorphismUndecided(RuntimeError):
    """Raised when the isomorphism test cannot give a reliable answer."""


# -- list helpers -------------------------------------------------------------

def _zeros(r, c, zero):
    return [[zero] * c for _ in range(r)]


def _ident(n, field):
    z, o = field.zero, field.one
    return [[o if i == j else z for j in range(n)] for i in range(n)]


def _mm(a, b, ncols, p, zero):
    """Product of an ``len(a) x k`` and a ``k x ncols`` list matrix."""
    out = []
    for row in a:
        nz = [(k, x) for k, x in enumerate(row) if x]
        new = [zero] * ncols
        for k, x in nz:
            bk = b[k]
            for j in range(ncols):
                y = bk[j]
                if y:
                    new[j] += x * y
        if p:
            new = [v % p for v in new]
        out.append(new)
    return out


def _mv(a, v, p, zero):
    nz = [(k, x) for k, x in enumerate(v) if x]
    out = []
    for row in a:
        s = zero
        for k, x in nz:
            y = row[k]
            if y:
                s += x * y
        out.append(s % p if p else s)
    return out


def _addto(acc, m, c, p):
    for i, row in enumerate(m):
        arow = acc[i]
        for j, x in enumerate(row):
            if x:
                v = arow[j] + c * x
                arow[j] = v % p if p else v


def _transpose(m, nrows, ncols):
    return [[m[i][j] for i in range(nrows)] for j in range(ncols)]


def _rank(m, ncols, p):
    if not m or not ncols:
        return 0
    return len(_rref_lists(m, ncols, p)[1])


# -- modules ------------------------------------------------------------------

class Module:
    def __init__(self, algebra: Algebra, dims, mats, name: str = "", check: bool = True):
        self.algebra = algebra
        self.field = algebra.field
        self.dims = list(dims)
        self.mats = [[list(r) for r in m] for m in mats]
        self.name = name
        self.dim = sum(self.dims)
        self.offsets = []
        t = 0
        for d in self.dims:
            self.offsets.append(t)
            t += d
        self._words = {}
        self.cache = {}
        if len(self.dims) != algebra.n or len(self.mats) != len(algebra.arrows):
            raise ModuleError("module data does not match the algebra")
        for a, m in zip(algebra.arrows, self.mats):
            if len(m) != self.dims[a.row] or any(len(r) != self.dims[a.col] for r in m):
                raise ModuleError(f"matrix for {a.name} has the wrong shape")
        if check:
            self.validate()

    def __repr__(self):
        return f"Module({self.name or '?'}, dims={self.dims})"

    # actions
    def word_actions(self, c):
        """Matrices ``dims[row] x dims[c]`` of every word node of column ``c``."""
        got = self._words.get(c)
        if got is None:
            alg = self.algebra
            p, z = alg._p, self.field.zero
            got = []
            for node in alg.word_nodes[c]:
                if node.arrow is None:
                    got.append(_ident(self.dims[c], self.field))
                else:
                    a = alg.arrows[node.arrow]
                    got.append(_mm(self.mats[node.arrow], got[node.parent], self.dims[c], p, z))
            self._words[c] = got
        return got

    def basis_action(self, b):
        """Action of basis element ``b`` (Peirce cell ``(r, c)``) as a ``dims[r] x dims[c]`` matrix."""
        alg = self.algebra
        r, c = alg.cell_of[b]
        out = _zeros(self.dims[r], self.dims[c], self.field.zero)
        words = self.word_actions(c)
        for node, coeff in alg.expansion[b]:
            _addto(out, words[node], coeff, alg._p)
        return out

    def cell_action(self, vec, r, c):
        """Action of a sparse element lying in Peirce cell ``(r, c)``."""
        out = _zeros(self.dims[r], self.dims[c], self.field.zero)
        for b, coeff in vec.items():
            if self.algebra.cell_of[b] != (r, c):
                raise ModuleError("element is not in the requested Peirce cell")
            _addto(out, self.basis_action(b), coeff, self.algebra._p)
        return out

    def action(self, vec):
        """Full ``dim x dim`` matrix of a sparse algebra element."""
        alg = self.algebra
        out = _zeros(self.dim, self.dim, self.field.zero)
        p = alg._p
        for b, coeff in vec.items():
            r, c = alg.cell_of[b]
            m = self.basis_action(b)
            for i in range(self.dims[r]):
                row = out[self.offsets[r] + i]
                for j in range(self.dims[c]):
                    x = m[i][j]
                    if x:
                        v = row[self.offsets[c] + j] + coeff * x
                        row[self.offsets[c] + j] = v % p if p else v
        return out

    def act_arrow(self, k, v):
        return _mv(self.mats[k], v, self.algebra._p, self.field.zero)

    def validate(self):
        """Check that the arrow matrices define a representation of the algebra.

        It suffices that ``rho(a) rho(w) = rho(a w)`` for every arrow ``a`` and
        every word ``w`` of the spanning trees, the right hand side being read
        through the expansion of ``a w`` in the basis.
        """
        alg = self.algebra
        p, z = alg._p, self.field.zero
        for c in range(alg.n):
            words = self.word_actions(c)
            for i, node in enumerate(alg.word_nodes[c]):
                wv = alg.word_vecs[c][i]
                for k, a in enumerate(alg.arrows):
                    if a.col != node.row:
                        continue
                    lhs = _mm(self.mats[k], words[i], self.dims[c], p, z)
                    prod = alg.cell_mul(list(a.vector), (a.row, a.col), wv, (node.row, c))
                    rhs = self.cell_action(alg.from_cell(prod, a.row, c), a.row, c)
                    if lhs != rhs:
                        raise ModuleError(
                            f"action of {a.name} on word {alg.word_of(c, i)} is inconsistent")
        return True

    # vectors
    def component(self, v, lam):
        o = self.offsets[lam]
        return v[o:o + self.dims[lam]]

    def embed(self, lam, w):
        z = self.field.zero
        v = [z] * self.dim
        o = self.offsets[lam]
        v[o:o + self.dims[lam]] = list(w)
        return v

    def dim_vector(self):
        return list(self.dims)

    def is_zero(self):
        return self.dim == 0


# -- maps ---------------------------------------------------------------------

class ModuleMap:
    """Homomorphism given by one block ``target.dims[l] x source.dims[l]`` per weight."""

    def __init__(self, source: Module, target: Module, blocks):
        self.source = source
        self.target = target
        self.blocks = [[list(r) for r in b] for b in blocks]

    @property
    def field(self):
        return self.source.field

    def apply(self, lam, v):
        return _mv(self.blocks[lam], v, self.source.algebra._p, self.field.zero)

    def matrix(self) -> Matrix:
        """The full map as a block-diagonal :class:`Matrix`."""
        s, t = self.source, self.target
        rows = _zeros(t.dim, s.dim, self.field.zero)
        for lam, b in enumerate(self.blocks):
            for i, row in enumerate(b):
                for j, x in enumerate(row):
                    rows[t.offsets[lam] + i][s.offsets[lam] + j] = x
        return Matrix(self.field, rows, s.dim)

    def is_homomorphism(self):
        s, t = self.source, self.target
        alg = s.algebra
        p, z = alg._p, self.field.zero
        for k, a in enumerate(alg.arrows):
            lhs = _mm(t.mats[k], self.blocks[a.col], s.dims[a.col], p, z)
            rhs = _mm(self.blocks[a.row], s.mats[k], s.dims[a.col], p, z)
            if lhs != rhs:
                return False
        return True

    def compose(self, first: "ModuleMap") -> "ModuleMap":
        """``self o first``."""
        p, z = self.source.algebra._p, self.field.zero
        blocks = [_mm(self.blocks[l], first.blocks[l], first.source.dims[l], p, z)
                  for l in range(len(self.blocks))]
        return ModuleMap(first.source, self.target, blocks)

    def rank(self):
        p = self.source.algebra._p
        return sum(_rank(b, self.source.dims[l], p) for l, b in enumerate(self.blocks))

    def is_isomorphism(self):
        return (self.source.dims == self.target.dims
                and self.rank() == self.source.dim)

    def kernel(self) -> "Submodule":
        s = self.source
        echs = []
        for lam, b in enumerate(self.blocks):
            m = Matrix(self.field, b, s.dims[lam]) if b else Matrix.zeros(self.field, 0, s.dims[lam])
            echs.append(Echelon(self.field, s.dims[lam], m.kernel_basis()))
        return Submodule(s, echs)

    def image(self) -> "Submodule":
        t = self.target
        echs = []
        for lam, b in enumerate(self.blocks):
            cols = _transpose(b, t.dims[lam], self.source.dims[lam])
            echs.append(Echelon(self.field, t.dims[lam], cols))
        return Submodule(t, echs)


def zero_map(source: Module, target: Module) -> ModuleMap:
    z = source.field.zero
    return ModuleMap(source, target, [_zeros(target.dims[l], source.dims[l], z)
                                      for l in range(source.algebra.n)])


def identity_map(m: Module) -> ModuleMap:
    return ModuleMap(m, m, [_ident(d, m.field) for d in m.dims])


# -- submodules ---------------------------------------------------------------

class Submodule:
    """A submodule, stored as one echelonised subspace of ``e_l M`` per weight."""

    def __init__(self, ambient: Module, echs):
        self.ambient = ambient
        self.echs = echs

    @property
    def dims(self):
        return [e.dim for e in self.echs]

    @property
    def dim(self):
        return sum(self.dims)

    def contains(self, lam, v):
        return self.echs[lam].contains(v)

    def is_submodule(self):
        m = self.ambient
        for k, a in enumerate(m.algebra.arrows):
            for v in self.echs[a.col].basis():
                if not self.echs[a.row].contains(m.act_arrow(k, v)):
                    return False
        return True

    def as_module(self, name="") -> Module:
        m = self.ambient
        mats = []
        for k, a in enumerate(m.algebra.arrows):
            src = self.echs[a.col].basis()
            cols = [self.echs[a.row].coordinates(m.act_arrow(k, v)) for v in src]
            mats.append(_transpose(cols, len(src), self.echs[a.row].dim) if src
                        else _zeros(self.echs[a.row].dim, 0, m.field.zero))
        return Module(m.algebra, self.dims, mats, name=name, check=False)

    def inclusion(self, sub_module: Module | None = None) -> ModuleMap:
        sub = sub_module or self.as_module()
        blocks = []
        for lam, e in enumerate(self.echs):
            basis = e.basis()
            blocks.append(_transpose(basis, len(basis), self.ambient.dims[lam]) if basis
                          else _zeros(self.ambient.dims[lam], 0, self.ambient.field.zero))
        return ModuleMap(sub, self.ambient, blocks)

    def __add__(self, other: "Submodule") -> "Submodule":
        echs = []
        for a, b in zip(self.echs, other.echs):
            e = Echelon(a.field, a.n, a.basis())
            for v in b.basis():
                e.add(v)
            echs.append(e)
        return Submodule(self.ambient, echs)


def submodule_generated(m: Module, vectors) -> Submodule:
    """Smallest submodule containing the given vectors.

    ``vectors`` holds either full-length vectors of ``m`` or pairs
    ``(weight index, vector of e_l M)``.
    """
    echs = [Echelon(m.field, d) for d in m.dims]
    todo = []
    for v in vectors:
        if isinstance(v, tuple):
            todo.append(v)
        else:
            for lam in range(m.algebra.n):
                w = m.component(v, lam)
                if any(w):
                    todo.append((lam, w))
    queue = []
    for lam, w in todo:
        if echs[lam].add(w):
            queue.append((lam, w))
    arrows = m.algebra.arrows
    while queue:
        lam, w = queue.pop()
        for k, a in enumerate(arrows):
            if a.col != lam:
                continue
            u = m.act_arrow(k, w)
            if any(u) and echs[a.row].add(u):
                queue.append((a.row, u))
    return Submodule(m, echs)


def zero_submodule(m: Module) -> Submodule:
    return Submodule(m, [Echelon(m.field, d) for d in m.dims])


def whole_submodule(m: Module) -> Submodule:
    return Submodule(m, [Echelon(m.field, d, _ident(d, m.field)) for d in m.dims])


def quotient(m: Module, sub: Submodule, name="") -> tuple[Module, ModuleMap]:
    """``m / sub`` with its projection; quotient coordinates are the non-pivot positions."""
    p, z = m.algebra._p, m.field.zero
    comp = [e.complement_positions() for e in sub.echs]
    dims = [len(c) for c in comp]
    mats = []
    for k, a in enumerate(m.algebra.arrows):
        cols = []
        for pos in comp[a.col]:
            v = [z] * m.dims[a.col]
            v[pos] = m.field.one
            u = sub.echs[a.row].reduce(m.act_arrow(k, v))
            cols.append([u[q] for q in comp[a.row]])
        mats.append(_transpose(cols, len(cols), dims[a.row]) if cols else _zeros(dims[a.row], 0, z))
    q = Module(m.algebra, dims, mats, name=name, check=False)
    blocks = []
    for lam in range(m.algebra.n):
        e = sub.echs[lam]
        rows = []
        for pos in comp[lam]:
            # coordinate pos of reduce(v) is v[pos] - sum_c v[c] row_c[pos]
            row = [z] * m.dims[lam]
            row[pos] = m.field.one
            for c, prow in e.rows.items():
                x = prow[pos]
                if x:
                    row[c] = (-x) % p if p else -x
            rows.append(row)
        blocks.append(rows)
    return q, ModuleMap(m, q, blocks)


def direct_sum(mods, name="") -> Module:
    """Direct sum; weight spaces are concatenated in the order given."""
    if not mods:
        raise ModuleError("direct sum of an empty list")
    alg = mods[0].algebra
    z = alg.field.zero
    dims = [sum(m.dims[l] for m in mods) for l in range(alg.n)]
    mats = []
    for k, a in enumerate(alg.arrows):
        big = _zeros(dims[a.row], dims[a.col], z)
        ro = co = 0
        for m in mods:
            blk = m.mats[k]
            for i, row in enumerate(blk):
                big[ro + i][co:co + len(row)] = row
            ro += m.dims[a.row]
            co += m.dims[a.col]
        mats.append(big)
    out = Module(alg, dims, mats, name=name, check=False)
    out.summands = list(mods)
    return out


def summand_offsets(mods):
    """``offsets[i][l]``: start of summand ``i`` inside weight ``l`` of the direct sum."""
    n = mods[0].algebra.n
    out = []
    run = [0] * n
    for m in mods:
        out.append(list(run))
        for l in range(n):
            run[l] += m.dims[l]
    return out


# -- standard constructions ------------------------------------------------

def _weight_index(alg: Algebra, lam):
    if isinstance(lam, int) and lam not in alg.widx and 0 <= lam < alg.n:
        return lam
    if lam in alg.widx:
        return alg.widx[lam]
    if str(lam) in alg.widx:
        return alg.widx[str(lam)]
    raise ModuleError(f"unknown weight {lam!r}")


def simple(alg: Algebra, lam) -> Module:
    i = _weight_index(alg, lam)
    dims = [1 if l == i else 0 for l in range(alg.n)]
    mats = [_zeros(dims[a.row], dims[a.col], alg.field.zero) for a in alg.arrows]
    return Module(alg, dims, mats, name=f"L({alg.weights[i]})", check=False)


def projective(alg: Algebra, lam) -> Module:
    """``P(l) = A e_l`` with basis the algebra basis of the cells ``(r, l)``."""
    c = _weight_index(alg, lam)
    key = ("proj", c)
    if key in alg.__dict__.setdefault("_module_cache", {}):
        return alg._module_cache[key]
    dims = [alg.cell_dim(r, c) for r in range(alg.n)]
    mats = []
    for a in alg.arrows:
        cols = [alg.cell_mul(list(a.vector), (a.row, a.col), alg.to_cell({b: alg.field.one}, a.col, c),
                             (a.col, c)) for b in alg.cells[(a.col, c)]]
        mats.append(_transpose(cols, len(cols), dims[a.row]) if cols
                    else _zeros(dims[a.row], 0, alg.field.zero))
    m = Module(alg, dims, mats, name=f"P({alg.weights[c]})", check=False)
    alg._module_cache[key] = m
    return m


def dual_module(m: Module, name="") -> Module:
    """The vector space dual ``D m`` as a left module over the opposite algebra."""
    alg = m.algebra
    op = alg.opposite()
    by_name = {a.name: k for k, a in enumerate(alg.arrows)}
    mats = []
    for a in op.arrows:
        k = by_name.get(a.name)
        if k is None or alg.arrows[k].row != a.col or alg.arrows[k].col != a.row:
            raise ModuleError("opposite algebra generators do not match")
        mats.append(_transpose(m.mats[k], m.dims[a.col], m.dims[a.row]))
    return Module(op, m.dims, mats, name=name or f"D({m.name})", check=False)


def injective(alg: Algebra, lam) -> Module:
    """``I(l) = D(e_l A)``, computed as the dual of a projective over the opposite algebra."""
    i = _weight_index(alg, lam)
    m = dual_module(projective(alg.opposite(), i), name=f"I({alg.weights[i]})")
    return m


def dualize(m: Module, sigma: AntiAutomorphism, name="") -> Module:
    """The contravariant duality ``M -> M°``: ``b`` acts by the transpose of ``sigma(b)``."""
    alg = m.algebra
    mats = []
    for a in alg.arrows:
        img = sigma.apply(alg.from_cell(list(a.vector), a.row, a.col))
        act = m.cell_action(img, a.col, a.row)  # dims[a.col] x dims[a.row]
        mats.append(_transpose(act, m.dims[a.col], m.dims[a.row]))
    return Module(alg, m.dims, mats, name=name or f"({m.name})°", check=False)


# -- radical, socle, top --------------------------------------------------------

def radical(m: Module) -> Submodule:
    """``J M``: the span of all arrow images, closed under the action."""
    vecs = []
    for k, a in enumerate(m.algebra.arrows):
        mat = m.mats[k]
        for j in range(m.dims[a.col]):
            col = [mat[i][j] for i in range(m.dims[a.row])]
            if any(col):
                vecs.append((a.row, col))
    return submodule_generated(m, vecs)


def socle(m: Module) -> Submodule:
    """Vectors killed by every arrow."""
    echs = []
    for lam in range(m.algebra.n):
        rows = []
        for k, a in enumerate(m.algebra.arrows):
            if a.col == lam:
                rows.extend(m.mats[k])
        d = m.dims[lam]
        if rows:
            ker = Matrix(m.field, rows, d).kernel_basis()
        else:
            ker = _ident(d, m.field)
        echs.append(Echelon(m.field, d, ker))
    return Submodule(m, echs)


def top(m: Module) -> Module:
    return quotient(m, radical(m), name=f"top({m.name})")[0]


def top_dims(m: Module):
    r = radical(m)
    return [d - e for d, e in zip(m.dims, r.dims)]


def radical_layers(m: Module):
    """Dimension vectors of ``J^i M / J^(i+1) M`` until the radical series reaches zero."""
    layers = []
    cur = m
    while cur.dim:
        r = radical(cur)
        layers.append([d - e for d, e in zip(cur.dims, r.dims)])
        cur = r.as_module()
    return layers


def composition_multiplicities(m: Module) -> dict:
    """``[M : L(l)] = dim e_l M`` for a split basic algebra."""
    return {w: m.dims[i] for i, w in enumerate(m.algebra.weights)}


# -- homomorphisms ------------------------------------------------------------

def _hom_system(m: Module, n: Module):
    alg = m.algebra
    var = []
    start = 0
    for l in range(alg.n):
        var.append(start)
        start += n.dims[l] * m.dims[l]
    nvars = start
    eqs = []
    p = alg._p
    for k, a in enumerate(alg.arrows):
        r, c = a.row, a.col
        Na, Ma = n.mats[k], m.mats[k]
        # (N(a) f_c - f_r M(a))[i][j] = 0 ; f_l[i][j] is variable var[l] + i*m.dims[l] + j
        for i in range(n.dims[r]):
            for j in range(m.dims[c]):
                eq = {}
                for t in range(n.dims[c]):
                    x = Na[i][t]
                    if x:
                        key = var[c] + t * m.dims[c] + j
                        eq[key] = eq.get(key, 0) + x
                for t in range(m.dims[r]):
                    x = Ma[t][j]
                    if x:
                        key = var[r] + i * m.dims[r] + t
                        eq[key] = eq.get(key, 0) - x
                if p:
                    eq = {kk: v % p for kk, v in eq.items()}
                eq = {kk: v for kk, v in eq.items() if v}
                if eq:
                    eqs.append(eq)
    return eqs, nvars, var


def hom_space(m: Module, n: Module) -> list:
    """A basis of ``Hom_A(m, n)``."""
    if m.algebra is not n.algebra:
        raise ModuleError("modules over different algebras")
    eqs, nvars, var = _hom_system(m, n)
    basis, _ = sparse_nullspace(eqs, nvars, m.field)
    out = []
    for v in basis:
        blocks = []
        for l in range(m.algebra.n):
            rws, cls = n.dims[l], m.dims[l]
            o = var[l]
            blocks.append([v[o + i * cls: o + (i + 1) * cls] for i in range(rws)])
        out.append(ModuleMap(m, n, blocks))
    return out


def hom_dim(m: Module, n: Module) -> int:
    if m.algebra is not n.algebra:
        raise ModuleError("modules over different algebras")
    if m.dim == 0 or n.dim == 0:
        return 0
    eqs, nvars, _ = _hom_system(m, n)
    return nvars - sparse_rank(eqs, m.field)


def map_from_projective(alg: Algebra, lam: int, m: Module, v) -> ModuleMap:
    """The homomorphism ``P(l) -> m`` sending ``e_l`` to ``v`` in ``e_l m``."""
    P = projective(alg, lam)
    blocks = []
    for r in range(alg.n):
        cols = []
        for b in alg.cells[(r, lam)]:
            cols.append(_mv(m.basis_action(b), v, alg._p, alg.field.zero))
        blocks.append(_transpose(cols, len(cols), m.dims[r]) if cols else _zeros(m.dims[r], 0, alg.field.zero))
    return ModuleMap(P, m, blocks)


def map_from_sum(source: Module, m: Module, maps) -> ModuleMap:
    """Assemble maps out of the summands of ``source`` (a :func:`direct_sum`)."""
    n = m.algebra.n
    z = m.field.zero
    blocks = []
    for l in range(n):
        rows = _zeros(m.dims[l], source.dims[l], z)
        col = 0
        for f in maps:
            b = f.blocks[l]
            w = f.source.dims[l]
            for i in range(m.dims[l]):
                rows[i][col:col + w] = b[i]
            col += w
        blocks.append(rows)
    return ModuleMap(source, m, blocks)


def projective_cover(m: Module):
    """``(P, epi, tops)``: ``P`` is a direct sum of ``P(l)`` with multiplicities ``tops``.

    The generators are the standard basis vectors at the non-pivot positions of
    the echelonised radical, so the construction is deterministic.
    """
    alg = m.algebra
    rad = radical(m)
    summands, maps, tops = [], [], []
    for lam in range(alg.n):
        pos = rad.echs[lam].complement_positions()
        tops.append(len(pos))
        for q in pos:
            v = [alg.field.zero] * m.dims[lam]
            v[q] = alg.field.one
            f = map_from_projective(alg, lam, m, v)
            summands.append(f.source)
            maps.append(f)
    if not summands:
        P = Module(alg, [0] * alg.n, [_zeros(0, 0, alg.field.zero) for _ in alg.arrows], check=False)
        return P, zero_map(P, m), tops
    P = direct_sum(summands, name=f"cover({m.name})")
    return P, map_from_sum(P, m, maps), tops


def syzygy(m: Module):
    """``(Omega m, tops of the cover)``."""
    P, epi, tops = projective_cover(m)
    if P.dim == 0:
        return P, tops
    return epi.kernel().as_module(name=f"Omega({m.name})"), tops


# -- isomorphism ----------------------------------------------------------------

ENUMERATION_LIMIT = 5000
RANDOM_TRIALS = 12


def _combine(maps, coeffs, field):
    p = field.characteristic
    src, tgt = maps[0].source, maps[0].target
    blocks = [_zeros(tgt.dims[l], src.dims[l], field.zero) for l in range(src.algebra.n)]
    for f, c in zip(maps, coeffs):
        if c:
            for l in range(src.algebra.n):
                _addto(blocks[l], f.blocks[l], c, p)
    return ModuleMap(src, tgt, blocks)


def find_isomorphism(m: Module, n: Module, seed: int = 0):
    """An isomorphism ``m -> n`` or ``None``.

    Over the rationals random combinations of a Hom basis with coefficients
    drawn from a large range are tried; a singular result for every trial is
    reported as non-isomorphic (the failure probability is below
    ``(dim / 10**6) ** RANDOM_TRIALS``).  Over ``F_p`` the whole Hom space is
    enumerated when it has at most ``ENUMERATION_LIMIT`` elements; otherwise
    :class:`IsomorphismUndecided` is raised unless a random trial succeeds.
    """
    if m.dims != n.dims:
        return None
    if m.dim == 0:
        return zero_map(m, n)
    H = hom_space(m, n)
    if not H:
        return None
    field = m.field
    p = field.characteristic
    rng = random.Random(seed)
    if p and p ** len(H) <= ENUMERATION_LIMIT:
        import itertools
        for coeffs in itertools.product(range(p), repeat=len(H)):
            f = _combine(H, coeffs, field)
            if f.is_isomorphism():
                return f
        return None
    for _ in range(RANDOM_TRIALS):
        if p:
            coeffs = [rng.randrange(p) for _ in H]
        else:
            coeffs = [field(rng.randint(-10 ** 6, 10 ** 6)) for _ in H]
        f = _combine(H, coeffs, field)
        if f.is_isomorphism():
            return f
    if p:
        raise IsomorphismUndecided(
            f"Hom space of size {p}^{len(H)} too large to enumerate over F_{p}")
    return None


def is_isomorphic(m: Module, n: Module, seed: int = 0) -> bool:
    return find_isomorphism(m, n, seed) is not None


def is_indecomposable(m: Module) -> bool:
    """True when ``End(m)`` is local (split case).

    Every endomorphism must have a single eigenvalue, and the endomorphisms
    whose eigenvalue is zero must form a nilpotent subspace.
    """
    if m.dim == 0:
        return False
    E = hom_space(m, m)
    field = m.field
    p = field.characteristic
    nil = []
    ident = identity_map(m)
    for f in E:
        ev = _single_eigenvalue(f, m)
        if ev is None:
            return False
        g = _combine([f, ident], [field.one, (-ev) % p if p else -ev], field)
        nil.append(g)
    # the nilpotent parts span an ideal; it is nilpotent iff products of length dim vanish
    ech_rows = _span_of_maps(nil, m)
    power = ech_rows
    for _ in range(m.dim):
        if not power:
            return True
        nxt = []
        for f in power:
            for g in ech_rows:
                nxt.append(f.compose(g))
        power = _span_of_maps(nxt, m)
    return not power


def _flatten(f: ModuleMap):
    out = []
    for b in f.blocks:
        for r in b:
            out.extend(r)
    return out


def _span_of_maps(maps, m):
    if not maps:
        return []
    n = len(_flatten(maps[0]))
    e = Echelon(m.field, n)
    keep = []
    for f in maps:
        if e.add(_flatten(f)):
            keep.append(f)
    return keep


def _single_eigenvalue(f: ModuleMap, m: Module):
    """The unique eigenvalue of ``f`` or ``None`` if there are several."""
    field = m.field
    p = field.characteristic
    M = f.matrix().tolist()
    n = len(M)
    tr = sum(M[i][i] for i in range(n))
    if p == 0 or n % p:
        cands = [tr * field.inv(field(n)) % p if p else tr / n]
    else:
        cands = list(range(p))
    for c in cands:
        shifted = [[M[i][j] - (c if i == j else 0) for j in range(n)] for i in range(n)]
        if p:
            shifted = [[x % p for x in r] for r in shifted]
        if _is_nilpotent_list(shifted, p, field.zero):
            return c
    return None


def _is_nilpotent_list(mat, p, zero):
    n = len(mat)
    cur = mat
    k = 1
    while k < n:
        cur = _mm(cur, cur, n, p, zero)
        k *= 2
    return not any(any(r) for r in cur)


# -- change of algebra ----------------------------------------------------------

def restrict_to(m: Module, sub_alg: Algebra, name="") -> Module:
    """Move ``m`` to an algebra built from ``m.algebra`` by a quotient or a corner.

    For a corner ``eAe`` this is ``e m``.  For a quotient ``A/AeA`` the module
    must be annihilated by the ideal; this is checked by validation.
    """
    A = m.algebra
    if getattr(sub_alg, "parent", None) is not A:
        raise ModuleError("algebra is not a quotient or corner of the module's algebra")
    widx = [A.widx[w] for w in sub_alg.weights]
    dims = [m.dims[i] for i in widx]
    mats = []
    for a in sub_alg.arrows:
        vec = sub_alg.from_cell(list(a.vector), a.row, a.col)
        lifted = {sub_alg.lift_index[k]: v for k, v in vec.items()}
        mats.append(m.cell_action(lifted, widx[a.row], widx[a.col]))
    if sub_alg.parent_kind == "quotient":
        for w in A.weights:
            if w not in sub_alg.widx and m.dims[A.widx[w]]:
                raise ModuleError(f"module is not annihilated by e_{w}")
    out = Module(sub_alg, dims, mats, name=name or m.name, check=sub_alg.parent_kind == "quotient")
    return out


def inflate(n: Module, parent: Algebra, name="") -> Module:
    """View a module over ``parent / parent e parent`` as a ``parent``-module."""
    Q = n.algebra
    if getattr(Q, "parent", None) is not parent or Q.parent_kind != "quotient":
        raise ModuleError("inflation needs a quotient algebra of the target")
    dims = [n.dims[Q.widx[w]] if w in Q.widx else 0 for w in parent.weights]
    z = parent.field.zero
    mats = []
    for a in parent.arrows:
        rw, cw = parent.weights[a.row], parent.weights[a.col]
        if rw not in Q.widx or cw not in Q.widx:
            mats.append(_zeros(dims[a.row], dims[a.col], z))
            continue
        r, c = Q.widx[rw], Q.widx[cw]
        v = Q.project_from_parent(parent.from_cell(list(a.vector), a.row, a.col), a.row, a.col)
        mats.append(n.cell_action(v, r, c))
    return Module(parent, dims, mats, name=name or n.name, check=True)
