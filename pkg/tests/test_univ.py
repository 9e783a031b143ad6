import itertools

import pytest

from hyperkit.axioms import Tag, analyze
from hyperkit.core import (
    Morphism,
    compose,
    find_isomorphism,
    identity_morphism,
    iter_bits,
    mask_of,
)
from hyperkit.errors import NotParallel, NotUnitalTag, UnsupportedCategory
from hyperkit.hom import (
    check_kind,
    enumerate_morphisms,
    is_coshort,
    is_short,
    is_strict,
)
from hyperkit.univ import (
    check_coequalizer_universal,
    check_coproduct_universal,
    check_equalizer_universal,
    check_product_universal,
    coequalizer,
    cofree,
    coproduct,
    equalizer,
    free,
    is_normal_epi,
    is_normal_mono,
    one_empty,
    product,
    pullback,
    regular_image_factorization,
    terminal,
    unitize,
)
from hyperkit.zoo import gf9_frobenius, gf9_quotient, krasner

from util import d_example, f_mosaic, klein, mixed3, z2


SMALL = None


def probes():
    global SMALL
    if SMALL is None:
        SMALL = [terminal(), z2(), krasner(), f_mosaic()]
    return SMALL


def test_free_objects():
    F = free(Tag.HMAG, ("a", "b"))
    assert all(F.table[i][j] == 0 for i in range(2) for j in range(2))
    FF = free(Tag.CMSC, ("1",))
    assert FF.labels == ("0", "1", "-1")
    assert FF.table[1][1] == 0 and FF.table[2][2] == 0
    assert FF.table[1][2] == 0b001
    Z = free(Tag.MSC, ())
    assert Z.n == 1 and Z.identity == 0


def test_cofree_and_adjunction_counts():
    D = cofree(("a", "b"))
    assert all(D.table[i][j] == 0b11 for i in range(2) for j in range(2))
    assert cofree(("a",)).n == 1
    for M in (krasner(), z2(), mixed3()):
        assert len(enumerate_morphisms(M, D, Tag.HMAG)) == 2 ** M.n
        F2 = free(Tag.HMAG, ("a", "b"))
        assert len(enumerate_morphisms(F2, M, Tag.HMAG)) == M.n ** 2
    for M in (krasner(), z2()):
        Fu = free(Tag.UHMAG, ("a", "b"))
        assert len(enumerate_morphisms(Fu, M, Tag.UHMAG)) == M.n ** 2
        Fm = free(Tag.CMSC, ("a", "b"))
        assert len(enumerate_morphisms(Fm, M, Tag.MSC)) == M.n ** 2


def test_product_krasner_squared():
    cone = product([krasner(), krasner()])
    P = cone.apex
    i11 = P.index("1|1")
    # componentwise oracle: (1+1) x (1+1) = {0,1} x {0,1}
    assert P.label_set(P.table[i11][i11]) == ("0|0", "0|1", "1|0", "1|1")
    for leg in cone.legs:
        assert is_strict(leg) and is_short(leg)
    assert check_product_universal(cone, [krasner(), krasner()], Tag.UHMAG, probes())


def test_empty_product_is_terminal():
    cone = product([])
    assert cone.apex == terminal()


def test_product_of_groups():
    cone = product([z2(), z2()])
    assert analyze(cone.apex).classification == "AbelianGroup"
    assert find_isomorphism(cone.apex, klein()) is not None


def test_coproduct_wedge():
    coc = coproduct([z2(), z2()], Tag.UHMAG)
    W = coc.apex
    assert W.n == 3
    x, y = 1, 2
    assert W.table[x][x] == 0b001 and W.table[y][y] == 0b001
    assert W.table[x][y] == 0
    assert check_coproduct_universal(coc, [z2(), z2()], Tag.UHMAG, probes())
    rep = analyze(W)
    assert rep.is_mosaic


def test_coproduct_hmag_free():
    Fa = free(Tag.HMAG, ("a",))
    Fb = free(Tag.HMAG, ("b",))
    coc = coproduct([Fa, Fb], Tag.HMAG)
    assert find_isomorphism(coc.apex, free(Tag.HMAG, ("a", "b"))) is not None
    assert check_coproduct_universal(coc, [Fa, Fb], Tag.HMAG, [one_empty(), krasner(), mixed3()])


def test_coproduct_f_wedge_f():
    coc = coproduct([f_mosaic(), f_mosaic()], Tag.MSC)
    assert coc.apex.n == 5
    assert analyze(coc.apex).is_mosaic


def test_coproduct_unsupported_for_hypergroups():
    with pytest.raises(UnsupportedCategory):
        coproduct([z2(), z2()], Tag.CAN)
    t = Morphism(z2(), krasner(), (0, 1))
    with pytest.raises(UnsupportedCategory):
        equalizer(t, t, Tag.CAN)


def test_hypergroup_coequalizers_delegate():
    # products and coequalizers for the hypergroup tags coincide with the
    # unital ones, which are closed on hypergroups
    t = Morphism(z2(), krasner(), (0, 1))
    zero = Morphism(z2(), krasner(), (0, 0))
    qc = coequalizer(t, zero, Tag.CAN)
    qu = coequalizer(t, zero, Tag.UHMAG)
    assert qc.cod == qu.cod
    assert analyze(qc.cod).is_hypergroup


def test_equalizer_identity_pair():
    K = krasner()
    E, inc = equalizer(identity_morphism(K), identity_morphism(K))
    assert E == K


def test_equalizer_frobenius():
    H = gf9_quotient().additive
    F = gf9_frobenius(H)
    E, inc = equalizer(identity_morphism(H), F)
    assert E.labels == ("0", "i", "1")
    assert E.table[E.index("1")][E.index("i")] == 0
    rep = analyze(E)
    assert rep.is_mosaic and rep.commutative and not rep.total
    assert is_coshort(inc)
    assert check_equalizer_universal(
        identity_morphism(H), F, E, inc, Tag.UHMAG, probes()
    )


def test_equalizer_tau_zero():
    t = Morphism(z2(), krasner(), (0, 1))
    zero = Morphism(z2(), krasner(), (0, 0))
    E, _ = equalizer(t, zero)
    assert E.labels == ("0",)
    with pytest.raises(NotParallel):
        equalizer(t, identity_morphism(krasner()))


def test_coequalizer_paper_example():
    D = d_example()
    FX = free(Tag.UHMAG, ("0", "1", "2"), point="0")
    f = Morphism(FX, D, (0, 1, 2))
    g = Morphism(FX, D, (0, 0, 2))
    qh = coequalizer(f, g, Tag.HMAG)
    assert qh.cod.labels == ("0", "2")
    assert qh.cod.table[0][0] == 0b11
    assert qh.short
    qu = coequalizer(f, g, Tag.UHMAG)
    assert qu.cod.n == 1
    assert check_coequalizer_universal(f, g, qu, Tag.UHMAG, probes())
    assert check_coequalizer_universal(f, g, qh, Tag.HMAG, [one_empty(), krasner(), mixed3()])


def test_coequalizer_of_equal_pair():
    t = Morphism(z2(), krasner(), (0, 1))
    q = coequalizer(t, t, Tag.UHMAG)
    assert q.cod.n == 2 and q.short
    assert find_isomorphism(q.cod, krasner()) is not None


def test_unitize_adjoins_unit():
    q = unitize(free(Tag.HMAG, ("a", "b")), 0)
    assert q.cod.n == 3 and q.cod.identity is not None
    assert q.cod.labels == ("a", "b", "e")


def test_unitize_collapse_and_fixed_point():
    q = unitize(krasner(), 0b10)
    assert q.cod.n == 1
    qz = unitize(z2(), 0b01)
    assert qz.cod.n == 2 and qz.short
    assert find_isomorphism(qz.cod, z2()) is not None


def test_unitize_shortness_criterion():
    # pi_E is short whenever x*E and E*x are nonempty for every x
    from hyperkit.core import product_of_subsets

    for M in (krasner(), d_example(), klein()):
        for E in range(1, 1 << M.n):
            q = unitize(M, E)
            sat = all(
                product_of_subsets(M, 1 << x, E) != 0
                and product_of_subsets(M, E, 1 << x) != 0
                for x in range(M.n)
            )
            if sat:
                assert q.short


def test_pullback_diagonal():
    K = krasner()
    cone = pullback(identity_morphism(K), identity_morphism(K))
    assert find_isomorphism(cone.apex, K) is not None


def test_product_as_pullback_over_terminal():
    K = krasner()
    t = Morphism(K, terminal(), (0, 0))
    cone = pullback(t, t)
    prod = product([K, K])
    assert find_isomorphism(cone.apex, prod.apex) is not None


def test_kernel_pair_recovers_image():
    t = Morphism(z2(), krasner(), (0, 1))
    kp = pullback(t, t)
    q = coequalizer(kp.legs[0], kp.legs[1], Tag.UHMAG)
    assert find_isomorphism(q.cod, z2()) is not None


def test_regular_image_factorization():
    t = Morphism(z2(), krasner(), (0, 1))
    q, m = regular_image_factorization(t, Tag.UHMAG)
    assert q.cod.n == 2 and compose(m, q.morphism) == t
    const = Morphism(krasner(), z2(), (0, 0))
    q2, m2 = regular_image_factorization(const, Tag.UHMAG)
    assert q2.cod.n == 1
    # sum of coordinates V -> K factors through a 2-element middle object
    V = klein()
    vmap = []
    for lbl in V.labels:
        vmap.append(0 if lbl in ("0", "a1") else 1)
    # order: 0, a1, a2, a3 with a1 = (1,1) summing to 0 under tau
    f = Morphism(V, krasner(), (0, 1, 1, 0))
    assert check_kind(f).colax
    q3, m3 = regular_image_factorization(f, Tag.UHMAG)
    assert q3.cod.n == 2
    assert compose(m3, q3.morphism) == f
    assert check_kind(m3).injective


def test_normal_mono():
    K = krasner()
    one_inc = Morphism(terminal(), K, (0,))
    assert is_normal_mono(one_inc, Tag.UHMAG)
    weak = Morphism(z2(), K, (0, 1))
    assert not is_normal_mono(weak, Tag.UHMAG)
    with pytest.raises(NotUnitalTag):
        is_normal_mono(one_inc, Tag.HMAG)


def test_normal_epi():
    for M in (krasner(), d_example()):
        for E in range(1, 1 << M.n):
            q = unitize(M, E)
            assert is_normal_epi(q.morphism, Tag.UHMAG)
    # group quotients are unitizations
    from hyperkit.zoo import cyclic_group, group_to_hypermagma

    z4 = group_to_hypermagma(cyclic_group(4))
    to_z2 = Morphism(z4, z2(), (0, 1, 0, 1))
    assert is_short(to_z2)
    assert is_normal_epi(to_z2, Tag.UHMAG)
    # tau is a surjection with trivial kernel but is not strict, hence not
    # isomorphic over Z2 to the trivial unitization
    t = Morphism(z2(), krasner(), (0, 1))
    assert not is_normal_epi(t, Tag.UHMAG)


def test_pullback_stability_of_shortness():
    t = Morphism(z2(), terminal(), (0, 0))
    for L in probes():
        for g in enumerate_morphisms(L, terminal(), Tag.UHMAG):
            cone = pullback(g, t)
            assert is_short(cone.legs[0])


def test_universal_properties_against_every_small_object():
    # the probe battery here is every unital hypermagma with at most three
    # elements, one per isomorphism class
    from hyperkit.zoo import enumerate_unital_hypermagmas

    small = list(enumerate_unital_hypermagmas(2)) + list(enumerate_unital_hypermagmas(3))
    assert len(enumerate_unital_hypermagmas(2)) == 4
    # Burnside over the swap of the two non-unit elements: (4096 + 64) / 2
    assert len(enumerate_unital_hypermagmas(3)) == 2080
    A, B = krasner(), z2()
    cone = product([A, B])
    assert check_product_universal(cone, [A, B], Tag.UHMAG, small)
    coc = coproduct([A, B], Tag.UHMAG)
    assert check_coproduct_universal(coc, [A, B], Tag.UHMAG, small)
    t = Morphism(B, A, (0, 1))
    zero = Morphism(B, A, (0, 0))
    E, inc = equalizer(t, zero)
    assert check_equalizer_universal(t, zero, E, inc, Tag.UHMAG, small)
    q = coequalizer(t, zero, Tag.UHMAG)
    assert check_coequalizer_universal(t, zero, q, Tag.UHMAG, small)


def test_mosaic_universal_properties_against_small_mosaics():
    from hyperkit.zoo import enumerate_small_mosaics

    small = [M for n in (1, 2, 3) for M in enumerate_small_mosaics(n)]
    assert len(enumerate_small_mosaics(2)) == 2  # Z2 and K
    for M in small:
        rep = analyze(M)
        assert rep.is_mosaic and rep.commutative
    A, B = krasner(), f_mosaic()
    cone = product([A, B])
    assert check_product_universal(cone, [A, B], Tag.MSC, small)
    coc = coproduct([A, B], Tag.MSC)
    assert check_coproduct_universal(coc, [A, B], Tag.MSC, small)
