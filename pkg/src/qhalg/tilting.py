"""Tilting modules, the Ringel dual ``End(T)^op`` and the functor ``Hom(T, -)``."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .algebra import Algebra
from .exactlin import Echelon, _rref_lists
from .highest_weight import (CrossCheckError, HighestWeightData, HighestWeightError, Poset,
                             _dual_of, _pd_cached, gfd, gfd_algebra, quotient_by_idempotent_ideal,
                             corner_algebra, require_certified, verify_quasi_hereditary, wfd,
                             wfd_algebra, has_delta_filtration, has_nabla_filtration)
from .homological import ext_dims, injective_dimension
from .modules import (Module, ModuleMap, Submodule, _flatten, _mm, _transpose, _zeros, direct_sum,
                      dual_module, find_isomorphism, hom_space, identity_map, injective,
                      is_indecomposable, map_from_sum, projective, projective_cover, quotient,
                      summand_offsets)

MAX_EXTENSION_STEPS = 64


class Coordinates:
    """Coordinates with respect to a fixed list of independent vectors."""

    def __init__(self, field, vectors, n):
        self.field = field
        self.k = len(vectors)
        self.n = n
        p = field.characteristic
        if not vectors:
            self.rows, self.piv = [], []
            return
        aug = [list(v) + [field.one if i == j else field.zero for j in range(self.k)]
               for i, v in enumerate(vectors)]
        red, piv = _rref_lists(aug, n + self.k, p)
        if len(piv) != self.k or any(c >= n for c in piv):
            raise ValueError("vectors are not independent")
        self.piv = piv
        self.rows = [r[n:] for r in red]

    def __call__(self, v):
        p = self.field.characteristic
        out = [self.field.zero] * self.k
        for c, t in zip(self.piv, self.rows):
            x = v[c]
            if x:
                for j in range(self.k):
                    if t[j]:
                        out[j] += x * t[j]
        return [y % p for y in out] if p else out


def _map_space_basis(maps):
    return [_flatten(f) for f in maps]


# -- tilting modules -----------------------------------------------------------

@dataclass
class TiltingSummand:
    weight: str
    module: Module
    delta_multiplicities: dict
    steps: list = dc_field(default_factory=list)


def universal_extension(hw: HighestWeightData, X: Module, mu):
    """``0 -> X -> X' -> Delta(mu)^d -> 0`` with ``d = dim Ext^1(Delta(mu), X)``.

    With ``0 -> W -> P(mu) -> Delta(mu) -> 0``, ``Ext^1(Delta(mu), X)`` is
    ``Hom(W, X)`` modulo maps that extend over ``P(mu)``; for representatives
    ``f_1..f_d`` of a basis, ``X' = (X + P(mu)^d) / {(sum f_k(w_k), -w_1, ..., -w_d)}``.
    """
    alg = hw.algebra
    D = hw.standard[mu]
    # W is the kernel of P(mu) -> Delta(mu)
    cover, epi, tops = projective_cover(D)
    if tops != [1 if i == alg.widx[mu] else 0 for i in range(alg.n)]:
        raise CrossCheckError(f"Delta({mu}) does not have simple top L({mu})")
    Wsub = epi.kernel()
    W = Wsub.as_module()
    iota = Wsub.inclusion(W)
    # cover is the one-summand direct sum of P(mu); identify it with P
    homs = hom_space(W, X)
    ext_from_P = [g.compose(iota) for g in hom_space(cover, X)]
    n = len(_flatten(homs[0])) if homs else 0
    ech = Echelon(alg.field, n, _map_space_basis(ext_from_P))
    reps = []
    for f in homs:
        if ech.add(_flatten(f)):
            reps.append(f)
    d = len(reps)
    if d == 0:
        return X, 0
    big = direct_sum([X] + [cover] * d)
    offs = summand_offsets([X] + [cover] * d)
    z = alg.field.zero
    p = alg._p
    echs = []
    for lam in range(alg.n):
        e = Echelon(alg.field, big.dims[lam])
        for k, f in enumerate(reps):
            for t in range(W.dims[lam]):
                w = [z] * W.dims[lam]
                w[t] = alg.field.one
                v = [z] * big.dims[lam]
                fx = f.apply(lam, w)
                for i, x in enumerate(fx):
                    v[offs[0][lam] + i] = x
                iw = iota.apply(lam, w)
                for i, x in enumerate(iw):
                    v[offs[k + 1][lam] + i] = (-x) % p if p else -x
                e.add(v)
        echs.append(e)
    sub = Submodule(big, echs)
    if not sub.is_submodule():
        raise CrossCheckError("universal extension relations do not form a submodule")
    Xp, _ = quotient(big, sub)
    return Xp, d


def indecomposable_tilting(hw: HighestWeightData, lam) -> TiltingSummand:
    """``T(lam)`` from ``Delta(lam)`` by universal extensions.

    Offenders are processed from the largest weight down (the reverse of a
    linear extension); since ``Ext^1(Delta(nu), Delta(mu)) != 0`` forces
    ``nu < mu``, each weight needs one pass.
    """
    require_certified(hw)
    key = ("tilting", hw.poset.less, lam)
    cache = hw.algebra.__dict__.setdefault("_module_cache", {})
    if key in cache:
        return cache[key]
    X = hw.standard[lam]
    mult = {mu: 0 for mu in hw.weights}
    mult[lam] = 1
    steps = []
    order = [mu for mu in reversed(hw.poset.linear_extension()) if hw.poset.lt(mu, lam)]
    for _ in range(2):
        changed = False
        for mu in order:
            d = ext_dims(hw.standard[mu], X, 1)[1]
            if d:
                X, got = universal_extension(hw, X, mu)
                if got != d:
                    raise CrossCheckError("extension dimension mismatch")
                mult[mu] += d
                steps.append((mu, d))
                changed = True
        if not changed:
            break
    else:
        raise CrossCheckError(f"tilting construction for {lam} did not stabilise")
    X.name = f"T({lam})"
    if not has_nabla_filtration(hw, X) or not has_delta_filtration(hw, X):
        raise CrossCheckError(f"T({lam}) is not tilting")
    if not is_indecomposable(X):
        raise CrossCheckError(f"T({lam}) is decomposable")
    ts = TiltingSummand(lam, X, mult, steps)
    cache[key] = ts
    return ts


def rad_endomorphisms(T: Module):
    """A basis of the radical of the local ring ``End(T)``: endomorphisms minus their eigenvalue."""
    from .modules import _single_eigenvalue, _combine, _span_of_maps
    field = T.field
    p = field.characteristic
    ident = identity_map(T)
    nil = []
    for f in hom_space(T, T):
        ev = _single_eigenvalue(f, T)
        if ev is None:
            raise CrossCheckError("endomorphism ring is not local")
        nil.append(_combine([f, ident], [field.one, (-ev) % p if p else -ev], field))
    return _span_of_maps(nil, T)


# -- the Ringel dual -------------------------------------------------------------

@dataclass
class RingelDual:
    source: HighestWeightData
    tilting: dict
    algebra: Algebra
    hw: HighestWeightData
    hom_basis: dict      # (lam, mu) -> list of maps T(lam) -> T(mu), S' basis order
    hom_coords: dict     # (lam, mu) -> Coordinates
    basis_maps: list     # S' basis index -> (lam, mu, map)


def _end_basis_with_identity(T: Module):
    ident = identity_map(T)
    maps = [ident]
    n = len(_flatten(ident))
    ech = Echelon(T.field, n, [_flatten(ident)])
    for f in rad_endomorphisms(T):
        if ech.add(_flatten(f)):
            maps.append(f)
    if len(maps) != len(hom_space(T, T)):
        raise CrossCheckError("identity plus radical does not span End(T)")
    return maps


def ringel_dual(hw: HighestWeightData) -> RingelDual:
    """``S' = End(T)^op`` for ``T`` the sum of the ``T(lam)``; order reversed."""
    require_certified(hw)
    cached = hw.__dict__.get("_ringel")
    if cached is not None:
        return cached
    alg = hw.algebra
    W = alg.weights
    T = {lam: indecomposable_tilting(hw, lam).module for lam in W}
    field = alg.field
    p = alg._p
    hom_basis = {}
    coords = {}
    labels, basis_maps = [], []
    index = {}
    for lam in W:
        for mu in W:
            if lam == mu:
                maps = _end_basis_with_identity(T[lam])
            else:
                maps = hom_space(T[lam], T[mu])
            hom_basis[(lam, mu)] = maps
            n = len(_flatten(maps[0])) if maps else 0
            coords[(lam, mu)] = Coordinates(field, [_flatten(f) for f in maps], n)
            for k, f in enumerate(maps):
                index[(lam, mu, k)] = len(labels)
                labels.append(f"{lam}>{mu}:{k}")
                basis_maps.append((lam, mu, f))
    idem = {lam: index[(lam, lam, 0)] for lam in W}
    # f in cell (lam, mu) times g in cell (mu, nu) is g o f in cell (lam, nu)
    table = {}
    for i, (lam, mu, f) in enumerate(basis_maps):
        for j, (mu2, nu, g) in enumerate(basis_maps):
            if mu2 != mu:
                continue
            h = g.compose(f)
            c = coords[(lam, nu)](_flatten(h))
            vec = {index[(lam, nu, k)]: x for k, x in enumerate(c) if x}
            if vec:
                table[(i, j)] = vec
    # composition of maps is associative, so a sampled check suffices here
    S = Algebra(field, labels, table, idem, list(W), name=f"R({alg.name})", check=False)
    S.check_associative_sampled()
    dual_hw = verify_quasi_hereditary(S, hw.poset.opposite())
    if not dual_hw.certified:
        raise CrossCheckError("Ringel dual is not quasi-hereditary for the reversed order")
    rd = RingelDual(hw, {lam: indecomposable_tilting(hw, lam) for lam in W}, S, dual_hw,
                    hom_basis, coords, basis_maps)
    hw._ringel = rd
    return rd


def f_functor(rd: RingelDual, m: Module, name="") -> Module:
    """``F m = Hom(T, m)`` with ``f`` acting by ``phi -> phi o f``."""
    S = rd.algebra
    W = S.weights
    T = {lam: rd.tilting[lam].module for lam in W}
    field = S.field
    spaces = {lam: hom_space(T[lam], m) for lam in W}
    crd = {}
    for lam in W:
        maps = spaces[lam]
        n = len(_flatten(maps[0])) if maps else 0
        crd[lam] = Coordinates(field, [_flatten(f) for f in maps], n)
    dims = [len(spaces[lam]) for lam in W]
    mats = []
    for a in S.arrows:
        r, c = W[a.row], W[a.col]
        vec = S.from_cell(list(a.vector), a.row, a.col)
        cols = []
        for phi in spaces[c]:
            acc = None
            for b, x in vec.items():
                lam, mu, f = rd.basis_maps[b]
                comp = _flatten(phi.compose(f))
                if acc is None:
                    acc = [field.zero] * len(comp)
                p = field.characteristic
                acc = [(u + x * v) % p if p else u + x * v for u, v in zip(acc, comp)]
            cols.append(crd[r](acc) if acc is not None else [field.zero] * dims[a.row])
        mats.append(_transpose(cols, len(cols), dims[a.row]) if cols else _zeros(dims[a.row], 0, field.zero))
    return Module(S, dims, mats, name=name or f"F({m.name})", check=True)


# -- tilting resolutions ---------------------------------------------------------

def _approximation(hw, tilts, rads, K: Module):
    """Minimal right add(T)-approximation of ``K``: returns ``(source, map)`` or ``None``."""
    field = K.field
    summands, maps = [], []
    homs = {lam: hom_space(tilts[lam], K) for lam in hw.weights}
    for lam in hw.weights:
        H = homs[lam]
        if not H:
            continue
        n = len(_flatten(H[0]))
        rad = Echelon(field, n)
        for mu in hw.weights:
            if mu == lam:
                fs = rads[lam]
            else:
                fs = hom_space(tilts[lam], tilts[mu])
            for psi in homs[mu]:
                for f in fs:
                    rad.add(_flatten(psi.compose(f)))
        for phi in H:
            if rad.add(_flatten(phi)):
                summands.append(tilts[lam])
                maps.append(phi)
    if not summands:
        return None
    src = direct_sum(summands)
    return src, map_from_sum(src, K, maps)


def tilting_resolution_length(hw: HighestWeightData, m: Module, coresolution=False,
                              max_steps=None) -> int:
    """Length of a minimal tilting resolution (``m`` nabla-filtered) or coresolution
    (``m`` Delta-filtered, handled through the opposite algebra)."""
    require_certified(hw)
    if coresolution:
        if not has_delta_filtration(hw, m):
            raise HighestWeightError("coresolution needs a Delta-filtered module")
        return tilting_resolution_length(hw.opposite(), _dual_of(m), max_steps=max_steps)
    if not has_nabla_filtration(hw, m):
        raise HighestWeightError("tilting resolution needs a nabla-filtered module")
    tilts = {lam: indecomposable_tilting(hw, lam).module for lam in hw.weights}
    rads = {lam: rad_endomorphisms(tilts[lam]) for lam in hw.weights}
    bound = max_steps if max_steps is not None else 2 * len(hw.weights) + 2
    K = m
    for j in range(bound + 1):
        if K.dim == 0:
            return max(j - 1, 0)
        if has_delta_filtration(hw, K):
            return j
        got = _approximation(hw, tilts, rads, K)
        if got is None:
            raise CrossCheckError("nonzero module with no maps from T")
        src, phi = got
        if phi.image().dim != K.dim:
            raise CrossCheckError("tilting approximation is not surjective")
        K = phi.kernel().as_module()
    raise CrossCheckError("tilting resolution did not terminate")


# -- identities -------------------------------------------------------------------

def prop_identities(rd: RingelDual) -> dict:
    """Both sides of the four Ringel duality identities for every weight."""
    hw, dhw = rd.source, rd.hw
    rows = {}
    ok = True
    for lam in hw.weights:
        D, N = hw.standard[lam], hw.costandard[lam]
        Dp, Np = dhw.standard[lam], dhw.costandard[lam]
        r = {
            "i": (wfd(hw, N), _pd_cached(Dp)),
            "ii": (injective_dimension(N), gfd(dhw, Dp)),
            "iii": (_pd_cached(D), wfd(dhw, Np)),
            "iv": (gfd(hw, D), injective_dimension(Np)),
        }
        rows[lam] = r
        ok = ok and all(a == b for a, b in r.values())
    cor = {
        "gfd_S": gfd_algebra(hw), "wfd_S'": wfd_algebra(dhw),
        "wfd_S": wfd_algebra(hw), "gfd_S'": gfd_algebra(dhw),
    }
    cor["i"] = cor["gfd_S"] == cor["wfd_S'"]
    cor["ii"] = cor["wfd_S"] == cor["gfd_S'"]
    out = {"per_weight": rows, "corollary": cor, "ok": ok and cor["i"] and cor["ii"]}
    if hw.duality is not None:
        chain = [cor["gfd_S"], cor["wfd_S"], cor["wfd_S'"], cor["gfd_S'"]]
        out["duality_chain"] = {"values": chain, "ok": len(set(chain)) == 1}
        out["ok"] = out["ok"] and out["duality_chain"]["ok"]
    return out


def functor_checks(rd: RingelDual) -> dict:
    """``F nabla = Delta'``, ``F T = P'`` and ``F I = T'`` up to isomorphism."""
    hw, dhw = rd.source, rd.hw
    S = rd.algebra
    res = {}
    for lam in hw.weights:
        i = S.widx[lam]
        a = find_isomorphism(f_functor(rd, hw.costandard[lam]), dhw.standard[lam]) is not None
        b = find_isomorphism(f_functor(rd, rd.tilting[lam].module), projective(S, i)) is not None
        c = find_isomorphism(f_functor(rd, injective(hw.algebra, hw.idx(lam))),
                             indecomposable_tilting(dhw, lam).module) is not None
        res[lam] = {"F_nabla_is_Delta'": a, "F_T_is_P'": b, "F_I_is_T'": c}
    return {"per_weight": res, "ok": all(all(v.values()) for v in res.values())}


def verify_ringel_identities(rd: RingelDual) -> dict:
    out = prop_identities(rd)
    out["functor"] = functor_checks(rd)
    out["ok"] = out["ok"] and out["functor"]["ok"]
    return out


# -- fingerprints and the truncation duality -------------------------------------------

def fingerprint(hw: HighestWeightData) -> dict:
    W = hw.weights
    alg = hw.algebra
    return {
        "simples": len(W),
        "delta_dims": {l: hw.standard[l].dims for l in W},
        "decomposition": [[hw.dec_delta[l][m] for m in W] for l in W],
        "cartan": alg.cartan_matrix(),
        "weights": list(W),
    }


def fingerprints_match(a: dict, b: dict) -> bool:
    """Label-preserving comparison, then any simultaneous permutation of weights."""
    import itertools
    if a["simples"] != b["simples"]:
        return False
    wa, wb = a["weights"], b["weights"]
    if set(wa) == set(wb):
        pos = [wb.index(w) for w in wa]
        if _fp_equal(a, b, pos):
            return True
    if a["simples"] > 7:
        return False
    for perm in itertools.permutations(range(len(wb))):
        if _fp_equal(a, b, list(perm)):
            return True
    return False


def _fp_equal(a, b, pos):
    n = len(pos)
    for i in range(n):
        for j in range(n):
            if a["decomposition"][i][j] != b["decomposition"][pos[i]][pos[j]]:
                return False
            if a["cartan"][i][j] != b["cartan"][pos[i]][pos[j]]:
                return False
    return True


def verify_truncation_duality(hw: HighestWeightData, gamma) -> dict:
    """Compare ``e S e`` with the Ringel dual of ``S'/S' eps S'``, where ``eps`` is
    the idempotent of the weights outside ``Gamma`` (``Gamma`` is saturated for
    the reversed order, and the quotient keeps it)."""
    from .highest_weight import truncate_corner, truncate_saturated
    gamma = set(gamma)
    corner = truncate_corner(hw, gamma)
    rd = ringel_dual(hw)
    quo = truncate_saturated(rd.hw, gamma)
    other = ringel_dual(quo)
    fa, fb = fingerprint(corner), fingerprint(other.hw)
    return {"gamma": sorted(gamma), "corner": fa, "dual_of_quotient": fb,
            "ok": fingerprints_match(fa, fb)}
