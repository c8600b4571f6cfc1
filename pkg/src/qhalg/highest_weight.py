"""Standard and costandard modules, quasi-heredity, filtration dimensions,
truncations and the monotonicity properties A-E.

Weights are referred to by their labels in the public functions; internally
the weight index of the algebra is used.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .algebra import Algebra, AntiAutomorphism, corner_algebra, quotient_by_idempotent_ideal
from .homological import (DimensionBound, default_depth, ext_dims, global_dimension,
                          injective_dimension, projective_dimension, simple_cached)
from .modules import (Module, dual_module, dualize, find_isomorphism, inflate, projective,
                      quotient, restrict_to, submodule_generated, Submodule)
from .exactlin import Echelon


class CrossCheckError(RuntimeError):
    """Two independent computations of the same quantity disagree."""


class HighestWeightError(ValueError):
    pass


# -- posets -------------------------------------------------------------------

class Poset:
    """A strict partial order on weight labels, stored transitively closed."""

    def __init__(self, elements, pairs=()):
        self.elements = list(elements)
        rel = set()
        for a, b in pairs:
            if a not in self.elements or b not in self.elements:
                raise HighestWeightError(f"order pair {(a, b)} uses an unknown weight")
            rel.add((a, b))
        changed = True
        while changed:
            changed = False
            for a, b in list(rel):
                for c, d in list(rel):
                    if b == c and (a, d) not in rel:
                        rel.add((a, d))
                        changed = True
        for a, b in rel:
            if a == b:
                raise HighestWeightError(f"order has a cycle through {a}")
        self.less = frozenset(rel)

    def lt(self, a, b):
        return (a, b) in self.less

    def le(self, a, b):
        return a == b or (a, b) in self.less

    def opposite(self):
        return Poset(self.elements, [(b, a) for a, b in self.less])

    def restrict(self, subset):
        subset = [x for x in self.elements if x in set(subset)]
        return Poset(subset, [(a, b) for a, b in self.less if a in subset and b in subset])

    def covers(self):
        out = []
        for a, b in sorted(self.less):
            if not any((a, c) in self.less and (c, b) in self.less for c in self.elements):
                out.append((a, b))
        return out

    def linear_extension(self):
        """Smallest first; ties broken by the order of ``elements``."""
        out, left = [], list(self.elements)
        while left:
            for x in left:
                if not any((y, x) in self.less for y in left if y != x):
                    out.append(x)
                    left.remove(x)
                    break
        return out

    def is_saturated(self, subset):
        """Downward closed.  Returns ``(True, None)`` or ``(False, violating pair)``."""
        s = set(subset)
        for a, b in sorted(self.less):
            if b in s and a not in s:
                return False, (a, b)
        return True, None

    def comparable_pairs(self):
        return sorted(self.less)

    def __eq__(self, other):
        return isinstance(other, Poset) and set(self.elements) == set(other.elements) \
            and self.less == other.less

    def __repr__(self):
        return f"Poset({self.covers()})"


# -- standard modules -----------------------------------------------------------

def _module_cache(alg):
    return alg.__dict__.setdefault("_module_cache", {})


def standard_module(alg: Algebra, poset: Poset, lam) -> Module:
    """``Delta(lam) = P(lam) / (trace of all P(mu), mu not <= lam)``."""
    key = ("delta", poset.less, lam)
    cache = _module_cache(alg)
    if key in cache:
        return cache[key]
    i = alg.widx[lam]
    P = projective(alg, i)
    gens = []
    for mu in alg.weights:
        if not poset.le(mu, lam):
            j = alg.widx[mu]
            for t in range(P.dims[j]):
                v = [alg.field.zero] * P.dims[j]
                v[t] = alg.field.one
                gens.append((j, v))
    sub = submodule_generated(P, gens)
    D, _ = quotient(P, sub, name=f"Delta({lam})")
    cache[key] = D
    return D


def costandard_module(alg: Algebra, poset: Poset, lam) -> Module:
    """``nabla(lam)``: the dual of the standard module of the opposite algebra."""
    key = ("nabla", poset.less, lam)
    cache = _module_cache(alg)
    if key not in cache:
        cache[key] = dual_module(standard_module(alg.opposite(), poset, lam), name=f"nabla({lam})")
    return cache[key]


# -- filtrations ----------------------------------------------------------------

def delta_filtration(m: Module, alg: Algebra, poset: Poset):
    """Constructive Delta-filtration test.

    Weights are processed from the top of a linear extension down.  At each
    step the trace of ``P(lam)`` must be ``Delta(lam)^k``; it is split off and
    the quotient is treated next.  Returns ``{lam: k}`` or ``None``.
    """
    cur = m
    mult = {}
    for lam in reversed(poset.linear_extension()):
        i = alg.widx[lam]
        if cur.dims[i] == 0:
            mult[lam] = 0
            continue
        gens = []
        for t in range(cur.dims[i]):
            v = [alg.field.zero] * cur.dims[i]
            v[t] = alg.field.one
            gens.append((i, v))
        U = submodule_generated(cur, gens)
        for mu in alg.weights:
            if not poset.le(mu, lam) and U.dims[alg.widx[mu]]:
                return None
        D = standard_module(alg, poset, lam)
        k = U.dims[i]  # top of U is concentrated in weight lam and has this dimension
        if U.dim != k * D.dim:
            return None
        mult[lam] = k
        cur, _ = quotient(cur, U)
    if cur.dim:
        return None
    return mult


# -- the certificate ------------------------------------------------------------

@dataclass
class HighestWeightData:
    algebra: Algebra
    poset: Poset
    standard: dict = dc_field(default_factory=dict)
    costandard: dict = dc_field(default_factory=dict)
    dec_delta: dict = dc_field(default_factory=dict)   # [lam][mu] = [Delta(lam):L(mu)]
    dec_nabla: dict = dc_field(default_factory=dict)
    p_delta: dict = dc_field(default_factory=dict)     # [lam][mu] = (P(lam):Delta(mu))
    evidence: dict = dc_field(default_factory=dict)
    certified: bool = False
    duality: AntiAutomorphism | None = None

    @property
    def weights(self):
        return self.algebra.weights

    def idx(self, lam):
        return self.algebra.widx[lam]

    def simple(self, lam):
        return simple_cached(self.algebra, self.idx(lam))

    def projective(self, lam):
        return projective(self.algebra, self.idx(lam))

    def opposite(self) -> "HighestWeightData":
        op = self.__dict__.get("_op")
        if op is None:
            op = verify_quasi_hereditary(self.algebra.opposite(), self.poset)
            self._op = op
        return op


def verify_quasi_hereditary(alg: Algebra, poset: Poset, duality=None) -> HighestWeightData:
    """Certify quasi-heredity by three redundant tests (see module notes)."""
    if set(poset.elements) != set(alg.weights):
        raise HighestWeightError("poset and algebra weights differ")
    hw = HighestWeightData(alg, poset, duality=duality)
    for lam in alg.weights:
        hw.standard[lam] = standard_module(alg, poset, lam)
        hw.costandard[lam] = costandard_module(alg, poset, lam)
        hw.dec_delta[lam] = {mu: hw.standard[lam].dims[alg.widx[mu]] for mu in alg.weights}
        hw.dec_nabla[lam] = {mu: hw.costandard[lam].dims[alg.widx[mu]] for mu in alg.weights}
    mult_one = all(hw.dec_delta[l][l] == 1 for l in alg.weights)
    below = all(poset.le(mu, l) for l in alg.weights for mu in alg.weights if hw.dec_delta[l][mu])
    dim_sum = sum(hw.standard[l].dim * hw.costandard[l].dim for l in alg.weights)
    filtr_ok = True
    bad = []
    for lam in alg.weights:
        f = delta_filtration(projective(alg, alg.widx[lam]), alg, poset)
        hw.p_delta[lam] = f
        if f is None or f.get(lam) != 1 or any(k and not poset.le(lam, mu) for mu, k in f.items()):
            filtr_ok = False
            bad.append(lam)
    hw.evidence = {
        "multiplicity_one": mult_one,
        "factors_below": below,
        "dimension_identity": dim_sum == alg.dim,
        "dimension_sum": dim_sum,
        "algebra_dim": alg.dim,
        "projectives_delta_filtered": filtr_ok,
        "unfiltered_projectives": bad,
    }
    hw.certified = mult_one and below and dim_sum == alg.dim and filtr_ok
    return hw


def require_certified(hw):
    if not hw.certified:
        raise HighestWeightError("algebra is not quasi-hereditary for the given order")


# -- filtration dimensions ---------------------------------------------------------

def _pd_cached(m: Module):
    if "pd" not in m.cache:
        m.cache["pd"] = projective_dimension(m)
    return m.cache["pd"]


def gfd_profile(hw: HighestWeightData, m: Module):
    """``{lam: [dim Ext^i(Delta(lam), m) for i <= proj Delta(lam)]}``."""
    out = {}
    for lam in hw.weights:
        D = hw.standard[lam]
        out[lam] = ext_dims(D, m, _pd_cached(D))
    return out


def gfd(hw: HighestWeightData, m: Module) -> int:
    """Largest ``i`` with ``Ext^i(Delta(lam), m) != 0`` for some ``lam`` (0 if none)."""
    key = ("gfd", hw.poset.less)
    if key in m.cache:
        return m.cache[key]
    best = 0
    for lam, dims in gfd_profile(hw, m).items():
        for i, d in enumerate(dims):
            if d:
                best = max(best, i)
    m.cache[key] = best
    return best


def has_nabla_filtration(hw, m) -> bool:
    require_certified(hw)
    return all(not any(d[1:]) for d in gfd_profile(hw, m).values())


def _dual_of(m: Module) -> Module:
    d = m.cache.get("dual")
    if d is None:
        d = dual_module(m)
        m.cache["dual"] = d
    return d


def wfd(hw: HighestWeightData, m: Module) -> int:
    """Largest ``i`` with ``Ext^i(m, nabla(lam)) != 0``.

    Computed as ``gfd`` of ``D m`` over the opposite algebra, using
    ``Ext^i_A(m, nabla) = Ext^i_{A^op}(D nabla, D m)``.
    """
    return gfd(hw.opposite(), _dual_of(m))


def wfd_direct(hw: HighestWeightData, m: Module) -> int:
    """``wfd`` straight from the definition, resolving ``m`` itself."""
    best = 0
    pd = projective_dimension(m)
    for lam in hw.weights:
        for i, d in enumerate(ext_dims(m, hw.costandard[lam], pd)):
            if d:
                best = max(best, i)
    return best


def has_delta_filtration(hw, m) -> bool:
    require_certified(hw)
    return all(not any(d[1:]) for d in gfd_profile(hw.opposite(), _dual_of(m)).values())


def gfd_algebra(hw: HighestWeightData) -> int:
    """``max gfd(L(lam))``, cross-checked against ``max proj(Delta(lam))``."""
    require_certified(hw)
    a = max((gfd(hw, hw.simple(l)) for l in hw.weights), default=0)
    b = max((_pd_cached(hw.standard[l]) for l in hw.weights), default=0)
    if a != b:
        raise CrossCheckError(f"gfd(S): max gfd(L) = {a} but max proj(Delta) = {b}")
    return a


def wfd_algebra(hw: HighestWeightData) -> int:
    """``max wfd(L(lam))``, cross-checked against ``max inj(nabla(lam))``."""
    require_certified(hw)
    a = max((wfd(hw, hw.simple(l)) for l in hw.weights), default=0)
    b = max((injective_dimension(hw.costandard[l]) for l in hw.weights), default=0)
    if a != b:
        raise CrossCheckError(f"wfd(S): max wfd(L) = {a} but max inj(nabla) = {b}")
    return a


# -- order minimisation -----------------------------------------------------------

def minimize_order(hw: HighestWeightData) -> Poset:
    require_certified(hw)
    pairs = set()
    for lam in hw.weights:
        for mu in hw.weights:
            if mu != lam and (hw.dec_delta[lam][mu] or hw.dec_nabla[lam][mu]):
                pairs.add((mu, lam))
    new = Poset(hw.weights, pairs)
    if not new.less <= hw.poset.less:
        raise CrossCheckError("minimised order is not contained in the original order")
    check = verify_quasi_hereditary(hw.algebra, new, hw.duality)
    if not check.certified:
        raise CrossCheckError("minimised order fails re-certification")
    for lam in hw.weights:
        for table in ("standard", "costandard"):
            a, b = getattr(hw, table)[lam], getattr(check, table)[lam]
            if find_isomorphism(a, b) is None:
                raise CrossCheckError(f"{table} module of {lam} changed under minimisation")
    return new


def with_order(hw: HighestWeightData, poset: Poset) -> HighestWeightData:
    return verify_quasi_hereditary(hw.algebra, poset, hw.duality)


# -- truncations ------------------------------------------------------------------

def truncate_saturated(hw: HighestWeightData, pi, sample_pairs=None) -> HighestWeightData:
    """``S(Pi) = S / S e_Gamma S`` for a saturated ``Pi``, with transport checks."""
    require_certified(hw)
    pi = set(pi)
    ok, bad = hw.poset.is_saturated(pi)
    if not ok:
        raise HighestWeightError(f"Pi is not saturated: {bad[0]} < {bad[1]} but {bad[0]} not in Pi")
    alg = hw.algebra
    gamma = [w for w in alg.weights if w not in pi]
    Q = quotient_by_idempotent_ideal(alg, gamma)
    sub = verify_quasi_hereditary(Q, hw.poset.restrict(pi))
    if not sub.certified:
        raise CrossCheckError("saturated truncation is not quasi-hereditary")
    checks = []
    for lam in Q.weights:
        for table in ("standard", "costandard"):
            big = getattr(hw, table)[lam]
            small = inflate(getattr(sub, table)[lam], alg)
            iso = find_isomorphism(small, big) is not None
            checks.append({"weight": lam, "module": table, "isomorphic": iso})
            if not iso:
                raise CrossCheckError(f"{table}({lam}) changes under saturated truncation")
    # Ext between S(Pi)-modules is the same over S(Pi) and over S
    if sample_pairs is None:
        sample_pairs = [(a, b) for a in Q.weights for b in Q.weights]
    depth = default_depth(alg)
    ext_checks = []
    for a, b in sample_pairs:
        small = ext_dims(sub.simple(a), sub.simple(b), depth)
        big = ext_dims(hw.simple(a), hw.simple(b), depth)
        ext_checks.append({"from": f"L({a})", "to": f"L({b})", "ext_S_Pi": small, "ext_S": big})
        if small != big:
            raise CrossCheckError(f"Ext(L({a}), L({b})) changes under saturated truncation")
    sub.evidence["transport"] = checks
    sub.evidence["ext_transport"] = ext_checks
    sub.parent_hw = hw
    return sub


def truncate_corner(hw: HighestWeightData, gamma) -> HighestWeightData:
    """``e S e`` for ``e = sum of e_g, g in Gamma``.

    ``Gamma`` must be upward closed (its complement saturated); see the
    project notes for why this restriction is imposed.
    """
    require_certified(hw)
    gamma = set(gamma)
    if not gamma:
        raise HighestWeightError("Gamma must be nonempty")
    ok, bad = hw.poset.is_saturated(set(hw.weights) - gamma)
    if not ok:
        raise HighestWeightError(
            f"Gamma is not upward closed: {bad[0]} < {bad[1]} with {bad[0]} in Gamma, {bad[1]} not")
    alg = hw.algebra
    C = corner_algebra(alg, gamma)
    sub = verify_quasi_hereditary(C, hw.poset.restrict(gamma))
    if not sub.certified:
        raise CrossCheckError("corner truncation is not quasi-hereditary")
    checks = []
    for mu in alg.weights:
        eD = restrict_to(hw.standard[mu], C)
        if (eD.dim != 0) != (mu in gamma):
            raise CrossCheckError(f"e Delta({mu}) != 0 should hold iff {mu} in Gamma")
        if mu in gamma:
            if find_isomorphism(eD, sub.standard[mu]) is None:
                raise CrossCheckError(f"e Delta({mu}) is not the standard module of eSe")
            big = _pd_cached(hw.standard[mu])
            small = _pd_cached(sub.standard[mu])
            checks.append({"weight": mu, "proj_S": big, "proj_eSe": small})
            if big != small:
                raise CrossCheckError(f"proj Delta({mu}) changes under corner truncation")
    sub.evidence["transport"] = checks
    sub.parent_hw = hw
    return sub


# -- blocks and properties ---------------------------------------------------------

def blocks(alg: Algebra):
    """Connected components of the Ext^1-quiver (the arrows) on the weights."""
    parent = {w: w for w in alg.weights}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a in alg.arrows:
        x, y = find(alg.weights[a.row]), find(alg.weights[a.col])
        if x != y:
            parent[y] = x
    groups = {}
    for w in alg.weights:
        groups.setdefault(find(w), []).append(w)
    return sorted(groups.values(), key=lambda g: alg.widx[g[0]])


@dataclass
class PropertyVerdict:
    prop: str
    holds: bool
    witnesses: list
    table: dict
    per_block: list | None = None


PROPERTIES = ("A", "B", "C", "D", "E", "StrongA")


def dimension_table(hw: HighestWeightData) -> dict:
    """Per-weight homological dimensions used by the property checks."""
    require_certified(hw)
    out = {}
    for lam in hw.weights:
        L = hw.simple(lam)
        D = hw.standard[lam]
        N = hw.costandard[lam]
        out[lam] = {
            "gfd_L": gfd(hw, L), "wfd_L": wfd(hw, L),
            "gfd_Delta": gfd(hw, D), "wfd_Delta": wfd(hw, D),
            "gfd_nabla": gfd(hw, N), "wfd_nabla": wfd(hw, N),
            "proj_Delta": _pd_cached(D), "inj_Delta": injective_dimension(D),
            "proj_nabla": _pd_cached(N), "inj_nabla": injective_dimension(N),
            "proj_L": _pd_cached(L), "inj_L": injective_dimension(L),
        }
    return out


def check_property(hw: HighestWeightData, which: str, table=None) -> PropertyVerdict:
    """Evaluate one of A-E or StrongA on ``hw.poset`` (callers minimise first)."""
    require_certified(hw)
    t = table or dimension_table(hw)
    pairs = hw.poset.comparable_pairs()
    wit = []
    if which in ("A", "StrongA", "B", "E"):
        key = {"A": "gfd_L", "StrongA": "gfd_L", "B": "wfd_nabla", "E": "inj_nabla"}[which]
        for mu, lam in pairs:
            x, y = t[mu][key], t[lam][key]
            ok = {"A": x <= y, "StrongA": x < y, "B": x <= y, "E": x >= y}[which]
            if not ok:
                wit.append({"mu": mu, "lam": lam, key + "_mu": x, key + "_lam": y})
        rel = {lam: t[lam][key] for lam in hw.weights}
        return PropertyVerdict(which, not wit, wit, {key: rel})
    if which == "D":
        for lam in hw.weights:
            if t[lam]["wfd_nabla"] != t[lam]["wfd_L"]:
                wit.append({"lam": lam, "wfd_nabla": t[lam]["wfd_nabla"], "wfd_L": t[lam]["wfd_L"]})
        return PropertyVerdict("D", not wit, wit,
                               {"wfd_nabla": {l: t[l]["wfd_nabla"] for l in hw.weights},
                                "wfd_L": {l: t[l]["wfd_L"] for l in hw.weights}})
    if which == "C":
        per = []
        for blk in blocks(hw.algebra):
            g = max(t[l]["gfd_L"] for l in blk)
            bw = []
            for lam in blk:
                if t[lam]["wfd_nabla"] != g - t[lam]["inj_nabla"]:
                    bw.append({"lam": lam, "wfd_nabla": t[lam]["wfd_nabla"], "gfd_block": g,
                               "inj_nabla": t[lam]["inj_nabla"]})
            per.append({"block": blk, "gfd_block": g, "holds": not bw, "witnesses": bw})
            wit.extend(bw)
        return PropertyVerdict("C", not wit, wit,
                               {"wfd_nabla": {l: t[l]["wfd_nabla"] for l in hw.weights},
                                "inj_nabla": {l: t[l]["inj_nabla"] for l in hw.weights}},
                               per_block=per)
    raise HighestWeightError(f"unknown property {which!r}")


def check_properties(hw: HighestWeightData, which=PROPERTIES, minimize=True):
    """Verdicts on the minimised order, plus verdicts on the given order if they differ."""
    base = hw
    if minimize:
        mp = minimize_order(hw)
        if mp != hw.poset:
            base = with_order(hw, mp)
    table = dimension_table(base)
    verdicts = {w: check_property(base, w, table) for w in which}
    original = None
    if base is not hw:
        t2 = dimension_table(hw)
        orig = {w: check_property(hw, w, t2) for w in which}
        if any(orig[w].holds != verdicts[w].holds for w in which):
            original = orig
    return verdicts, original, base


# -- theorem audit -------------------------------------------------------------------

def nabla_quotient(hw: HighestWeightData, lam) -> Module:
    """``nabla(lam) / L(lam)``; the socle of a costandard module is ``L(lam)``."""
    N = hw.costandard[lam]
    i = hw.idx(lam)
    from .modules import socle
    soc = socle(N)
    if soc.dims != [1 if j == i else 0 for j in range(hw.algebra.n)]:
        raise CrossCheckError(f"socle of nabla({lam}) is not L({lam})")
    return quotient(N, soc, name=f"nabla({lam})/L({lam})")[0]


def audit_theorems(hw: HighestWeightData, sigma: AntiAutomorphism, verdicts=None) -> dict:
    """Instance checks of the global dimension theorem and related statements.

    Returns a dictionary of named checks; each has ``ok`` and supporting data.
    The sampled family for the "every module Q" statements is: the simple
    modules and the quotients ``nabla(lam)/L(lam)``.
    """
    require_certified(hw)
    if verdicts is None:
        verdicts, _, base = check_properties(hw)
    else:
        base = hw
    alg = hw.algebra
    out = {"sampled_family": "simples L(lam) and nabla(lam)/L(lam)"}
    n = gfd_algebra(hw)
    glob = global_dimension(alg)
    out["gfd_S"] = n
    out["glob"] = glob
    family = []
    for lam in hw.weights:
        family.append((f"L({lam})", hw.simple(lam)))
    for lam in hw.weights:
        Q = nabla_quotient(hw, lam)
        if Q.dim:
            family.append((f"nabla({lam})/L({lam})", Q))
    duals = {name: dualize(M, sigma) for name, M in family}

    # (1) the global dimension theorem when strong A holds
    thm = {"applies": verdicts["StrongA"].holds}
    if thm["applies"]:
        witness = None
        for lam in hw.weights:
            L = hw.simple(lam)
            if gfd(hw, L) == n and ext_dims(L, L, 2 * n)[2 * n]:
                witness = lam
                break
        qs = []
        for name, M in family:
            g = gfd(hw, M)
            if g == n:
                val = ext_dims(duals[name], M, 2 * n)[2 * n]
                qs.append({"Q": name, "gfd": g, "ext_2n": val, "ok": val != 0})
        # Ext^{2n}(L, L) = Ext^{2(n-1)}(Q°, Q) for Q = nabla(lam)/L(lam), gfd(L(lam)) = n
        shift = []
        for lam in hw.weights:
            L = hw.simple(lam)
            if n == 0 or gfd(hw, L) != n:
                continue
            Q = nabla_quotient(hw, lam)
            left = ext_dims(L, L, 2 * n)[2 * n]
            right = ext_dims(dualize(Q, sigma), Q, 2 * n - 2)[2 * n - 2] if Q.dim else 0
            shift.append({"lam": lam, "ext_2n_L_L": left, "ext_2n_minus_2_Q": right,
                          "ok": left == right and left != 0})
        thm.update({"n": n, "glob_equals_2n": glob == 2 * n, "witness_lambda": witness,
                    "sampled_Q": qs, "dimension_shift": shift,
                    "ok": glob == 2 * n and witness is not None and all(q["ok"] for q in qs)
                    and all(r["ok"] for r in shift)})
    else:
        thm["ok"] = True
    out["global_dimension_theorem"] = thm

    # (2) the condition Ext^{2i}(M°, M) != 0 for i <= gfd(M), sampled.  This is
    # only conjectured, so it is reported as an observation and never fails the audit.
    lem = {"applies": verdicts["StrongA"].holds, "status": "observation", "checks": []}
    if lem["applies"]:
        for name, M in family:
            g = gfd(hw, M)
            vals = ext_dims(duals[name], M, 2 * g)
            row = {"M": name, "gfd": g, "ext_even": [vals[2 * i] for i in range(g + 1)]}
            row["ok"] = all(row["ext_even"])
            lem["checks"].append(row)
        lem["ok"] = all(r["ok"] for r in lem["checks"])
    else:
        lem["ok"] = True
    out["even_ext_condition"] = lem

    # (3) implications between properties
    h = {k: v.holds for k, v in verdicts.items()}
    imp = {
        "A implies D": (not h["A"]) or h["D"],
        "D and B iff D and A": (h["D"] and h["B"]) == (h["D"] and h["A"]),
        "A and C imply E": (not (h["A"] and h["C"])) or h["E"],
        "C implies (B iff E)": (not h["C"]) or (h["B"] == h["E"]),
    }
    out["implications"] = {"checks": imp, "ok": all(imp.values())}

    # (4) BGG reciprocity
    out["bgg_reciprocity"] = bgg_reciprocity(hw)

    # (5) four simples with property A
    four = {"applies": h["A"] and alg.n <= 4}
    if four["applies"]:
        four["ok"] = glob == 2 * n
        four["glob"], four["two_gfd"] = glob, 2 * n
    else:
        four["ok"] = True
    out["four_simples"] = four
    out["ok"] = all(out[k]["ok"] for k in ("global_dimension_theorem", "implications",
                                         "bgg_reciprocity", "four_simples"))
    return out


def bgg_reciprocity(hw: HighestWeightData) -> dict:
    """Compare ``(P(lam):Delta(mu))`` with ``[nabla(mu):L(lam)]``."""
    bad = []
    for lam in hw.weights:
        for mu in hw.weights:
            a = hw.p_delta[lam].get(mu, 0)
            b = hw.dec_nabla[mu][lam]
            if a != b:
                bad.append({"lam": lam, "mu": mu, "P_Delta": a, "nabla_L": b})
    return {"ok": not bad, "violations": bad}
