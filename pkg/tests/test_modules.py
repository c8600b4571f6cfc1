import pytest

from qhalg.exactlin import GF
from qhalg.modules import (Module, ModuleError, composition_multiplicities, direct_sum, dual_module,
                           dualize, find_isomorphism, hom_dim, hom_space, identity_map, injective,
                           is_indecomposable, projective, projective_cover, quotient, radical,
                           radical_layers, simple, socle, submodule_generated, syzygy, top_dims)
from qhalg.presentation_io import load_corpus
from qhalg.quiver import Presentation, build_algebra


def test_projective_dims_are_cartan_columns(s532):
    alg = s532.algebra
    for l in range(alg.n):
        P = projective(alg, l)
        assert P.dims == [alg.cell_dim(r, l) for r in range(alg.n)]
        assert top_dims(P) == [1 if i == l else 0 for i in range(alg.n)]


def test_hom_from_projective_is_weight_space(s533):
    alg = s533.algebra
    N = s533.hw.standard["3"]
    for l in range(alg.n):
        assert hom_dim(projective(alg, l), N) == N.dims[l]


def test_double_dual(s533):
    alg = s533.algebra
    for l in range(alg.n):
        P = projective(alg, l)
        DD = dual_module(dual_module(P))
        assert DD.algebra is alg
        assert find_isomorphism(DD, P) is not None


def test_standard_module_structure_5_3_3(s533):
    """rad Delta(1) = Delta(0)^2, rad Delta(2) uniserial (L1 over L0), rad Delta(3) = Delta(0) + Delta(2)."""
    hw = s533.hw
    D = hw.standard
    r1 = radical(D["1"]).as_module()
    assert find_isomorphism(r1, direct_sum([D["0"], D["0"]])) is not None
    r2 = radical(D["2"]).as_module()
    assert radical_layers(r2) == [[0, 1, 0, 0], [1, 0, 0, 0]]
    r3 = radical(D["3"]).as_module()
    assert find_isomorphism(r3, direct_sum([D["0"], D["2"]])) is not None


def test_projective_cover_of_delta1_5_3_3(s533):
    """0 -> P(2) -> P(1) -> Delta(1) -> 0."""
    alg = s533.algebra
    omega, tops = syzygy(s533.hw.standard["1"])
    assert tops == [0, 1, 0, 0]
    assert find_isomorphism(omega, projective(alg, alg.widx["2"])) is not None


def test_radical_socle_top(s532):
    alg = s532.algebra
    for l in range(alg.n):
        P = projective(alg, l)
        rad = radical(P)
        assert P.dim - rad.dim == 1
        I = injective(alg, l)
        assert socle(I).dims == [1 if i == l else 0 for i in range(alg.n)]
        layers = radical_layers(P)
        assert [sum(x) for x in zip(*layers)] == P.dims
        assert composition_multiplicities(P) == {alg.weights[i]: d for i, d in enumerate(P.dims)}


def test_submodule_quotient_additivity(s533):
    alg = s533.algebra
    P = projective(alg, 0)
    v = [alg.field(1)] + [alg.field(0)] * (P.dims[1] - 1)
    sub = submodule_generated(P, [(1, v)])
    Q, pi = quotient(P, sub)
    assert [a + b for a, b in zip(sub.dims, Q.dims)] == P.dims
    assert pi.is_homomorphism()
    assert pi.kernel().dims == sub.dims


def test_indecomposability(s532):
    alg = s532.algebra
    P = projective(alg, 1)
    assert is_indecomposable(P)
    assert not is_indecomposable(direct_sum([P, simple(alg, 0)]))


def test_hom_space_maps_are_homomorphisms(s532):
    alg = s532.algebra
    M, N = projective(alg, 1), projective(alg, 2)
    H = hom_space(M, N)
    assert len(H) == alg.cell_dim(1, 2)
    assert all(f.is_homomorphism() for f in H)
    assert identity_map(M).is_isomorphism()


def test_projective_cover_is_surjective(s533):
    D = s533.hw.standard["3"]
    P, epi, tops = projective_cover(D)
    assert epi.image().dims == D.dims
    assert tops == [0, 0, 0, 1]


def test_invalid_module_rejected(s532):
    """alpha0 and alpha1 acting by 1 on k + k violates alpha1 alpha0 = 0."""
    alg = s532.algebra
    dims = [1, 1, 0, 0]
    one = alg.field(1)
    mats = []
    for a in alg.arrows:
        if a.name in ("alpha0", "alpha1"):
            mats.append([[one]])
        else:
            mats.append([[alg.field(0)] * dims[a.col] for _ in range(dims[a.row])])
    with pytest.raises(ModuleError):
        Module(alg, dims, mats)
    with pytest.raises(ModuleError):
        Module(alg, [1, 1, 0], mats)


def test_isomorphism_over_small_field():
    pres = load_corpus("example_5_3_2")
    rels = [[(str(c), p) for c, p in r] for r in pres.relations]
    p2 = Presentation(pres.quiver, rels, pres.order, pres.duality, GF(2))
    alg = build_algebra(p2)
    P = projective(alg, 1)
    assert find_isomorphism(P, P) is not None
    assert find_isomorphism(P, projective(alg, 2)) is None


def test_dualize_fixes_simples(s533):
    hw = s533.hw
    for lam in hw.weights:
        L = hw.simple(lam)
        assert find_isomorphism(dualize(L, s533.sigma), L) is not None
        # the duality exchanges standard and costandard modules
        assert find_isomorphism(dualize(hw.standard[lam], s533.sigma), hw.costandard[lam]) is not None
