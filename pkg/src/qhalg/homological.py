"""Minimal projective resolutions, Ext dimensions and homological dimensions.

Ext is computed by dimension shifting along the minimal resolution.  From
``0 -> Omega^j -> P_{j-1} -> Omega^{j-1} -> 0`` one gets, for ``j >= 1``,

    dim Ext^j(M, N) = dim Hom(Omega^j M, N) - dim Hom(P_{j-1}, N)
                      + dim Hom(Omega^{j-1} M, N),

and ``dim Hom(P(l), N) = dim e_l N``.  This is the homology of
``Hom(P_*, N)`` written in terms of ranks.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .modules import Module, dual_module, hom_dim, simple, syzygy


class DimensionBound(RuntimeError):
    """A resolution did not terminate within the configured depth."""

    def __init__(self, what: str, bound: int):
        super().__init__(f"{what}: dimension >= {bound} (resolution did not terminate)")
        self.bound = bound


def default_depth(alg) -> int:
    return 2 * (alg.n - 1) + 2


@dataclass
class Resolution:
    """Minimal projective resolution ``... -> P_1 -> P_0 -> target``.

    ``tops[j][l]`` is the multiplicity of ``P(l)`` in ``P_j`` and
    ``syzygies[j]`` is ``Omega^j target`` (``syzygies[0]`` is the target).
    """

    target: Module
    tops: list = dc_field(default_factory=list)
    syzygies: list = dc_field(default_factory=list)
    complete: bool = False
    minimal: bool = True

    @property
    def length(self):
        return len(self.tops) - 1 if self.complete else None

    def term_dims(self, j):
        alg = self.target.algebra
        return [sum(self.tops[j][l] * alg.cell_dim(r, l) for l in range(alg.n)) for r in range(alg.n)]


def min_projective_resolution(m: Module, max_deg: int | None = None) -> Resolution:
    """Resolve up to ``P_{max_deg}`` (or until the syzygy vanishes); cached on ``m``."""
    if max_deg is None:
        max_deg = default_depth(m.algebra)
    res = m.cache.get("resolution")
    if res is None:
        res = Resolution(m, [], [m])
        m.cache["resolution"] = res
    while not res.complete and len(res.tops) <= max_deg:
        cur = res.syzygies[-1]
        if cur.dim == 0:
            res.complete = True
            break
        omega, tops = syzygy(cur)
        res.tops.append(tops)
        res.syzygies.append(omega)
        if omega.dim == 0:
            res.complete = True
    return res


def _hom_proj(tops, n: Module) -> int:
    return sum(t * d for t, d in zip(tops, n.dims))


def ext_dims(m: Module, n: Module, max_deg: int) -> list:
    """``[dim Ext^0(m,n), ..., dim Ext^max_deg(m,n)]``."""
    if n.dim == 0 or m.dim == 0:
        return [0] * (max_deg + 1)
    res = min_projective_resolution(m, max_deg)
    homs = []

    def hom_omega(j):
        while len(homs) <= j:
            k = len(homs)
            om = res.syzygies[k] if k < len(res.syzygies) else None
            homs.append(0 if om is None or om.dim == 0 else hom_dim(om, n))
        return homs[j]

    out = [hom_omega(0)]
    for j in range(1, max_deg + 1):
        if j - 1 >= len(res.tops):
            out.append(0)
            continue
        out.append(hom_omega(j) - _hom_proj(res.tops[j - 1], n) + hom_omega(j - 1))
    return out


def ext_dim(m: Module, n: Module, i: int) -> int:
    return ext_dims(m, n, i)[i]


def projective_dimension(m: Module, max_deg: int | None = None) -> int:
    """Length of the minimal projective resolution (0 for the zero module)."""
    if max_deg is None:
        max_deg = default_depth(m.algebra)
    res = min_projective_resolution(m, max_deg)
    if not res.complete:
        raise DimensionBound(f"proj({m.name})", max_deg + 1)
    return max(len(res.tops) - 1, 0)


def injective_dimension(m: Module, max_deg: int | None = None) -> int:
    """Projective dimension of ``D m`` over the opposite algebra."""
    d = m.cache.get("dual")
    if d is None:
        d = dual_module(m)
        m.cache["dual"] = d
    return projective_dimension(d, max_deg)


def global_dimension(alg, max_deg: int | None = None) -> int:
    return max((projective_dimension(simple_cached(alg, l), max_deg) for l in range(alg.n)), default=0)


def simple_cached(alg, l):
    cache = alg.__dict__.setdefault("_module_cache", {})
    key = ("simple", l)
    if key not in cache:
        cache[key] = simple(alg, l)
    return cache[key]
