import pytest
from hypothesis import given, settings, strategies as st

from hyperkit.axioms import Tag, analyze
from hyperkit.core import (
    absorptive_closure,
    find_isomorphism,
    from_masks,
    initial,
    make_hypermagma,
    mask_of,
    opposite,
    permute,
    product_of_subsets,
    strict_sub_closure,
    terminal,
    weak_sub,
)
from hyperkit.errors import (
    DimensionMismatch,
    DuplicateLabel,
    IdentityAxiomViolated,
    IdentityMissing,
)
from hyperkit.hom import is_coshort, inclusion_morphism, representing_object
from hyperkit.univ import cofree, free
from hyperkit.zoo import gf9_frobenius, gf9_quotient, krasner

from util import d_example, f_mosaic, small_battery, z2


def test_make_hypermagma_krasner():
    K = make_hypermagma(
        ["0", "1"],
        [[["0"], ["1"]], [["1"], ["0", "1"]]],
        identity="0",
    )
    assert analyze(K).classification == "CanonicalHypergroup"
    assert K == krasner()


def test_make_hypermagma_terminal_and_initial():
    one = make_hypermagma(["e"], [[["e"]]], identity="e")
    assert one == terminal()
    empty = make_hypermagma([], [])
    assert empty == initial()
    assert analyze(empty).classification == "Hypermagma"


def test_constructor_errors():
    with pytest.raises(DuplicateLabel):
        make_hypermagma(["a", "a"], [[[], []], [[], []]])
    with pytest.raises(DimensionMismatch):
        make_hypermagma(["a", "b"], [[["a"]]])
    with pytest.raises(IdentityAxiomViolated):
        make_hypermagma(["a", "b"], [[["a"], []], [[], []]], identity="a")


def test_identity_autodetected_without_argument():
    K = make_hypermagma(["0", "1"], [[["0"], ["1"]], [["1"], ["0", "1"]]])
    assert K.identity == 0
    assert K.inverse == (0, 1)


def test_product_of_subsets():
    K = krasner()
    assert product_of_subsets(K, 0b10, 0b10) == 0b11
    assert product_of_subsets(K, 0b11, 0) == 0
    assert product_of_subsets(K, 0, 0b11) == 0
    D = cofree(("a", "b"))
    assert product_of_subsets(D, 0b01, 0b10) == 0b11


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_union_distributivity(data):
    M = data.draw(st.sampled_from(small_battery()))
    full = M.full_mask()
    X = data.draw(st.integers(min_value=0, max_value=full))
    Y = data.draw(st.integers(min_value=0, max_value=full))
    Z = data.draw(st.integers(min_value=0, max_value=full))
    assert product_of_subsets(M, X | Y, Z) == (
        product_of_subsets(M, X, Z) | product_of_subsets(M, Y, Z)
    )
    assert product_of_subsets(M, Z, X | Y) == (
        product_of_subsets(M, Z, X) | product_of_subsets(M, Z, Y)
    )


def test_opposite():
    K = krasner()
    assert opposite(K) == K  # commutative
    E = representing_object(Tag.MSC).obj
    a, b, c = E.index("a"), E.index("b"), E.index("c")
    assert (opposite(E).table[b][a] >> c) & 1
    for M in small_battery():
        assert opposite(opposite(M)) == M


def test_weak_sub_inclusions_are_coshort():
    for M in small_battery():
        for S in {0, 1, M.full_mask(), M.full_mask() >> 1}:
            L = weak_sub(M, S & M.full_mask())
            if L.n == 0:
                continue
            assert is_coshort(inclusion_morphism(L, M))


def test_weak_sub_whole_carrier_and_point():
    K = krasner()
    assert weak_sub(K, K.full_mask()) == K
    e_only = weak_sub(K, ["0"], unital=True)
    assert e_only.n == 1 and e_only.identity == 0
    with pytest.raises(IdentityMissing):
        weak_sub(K, ["1"], unital=True)


def test_weak_sub_frobenius_fixed_points():
    H = gf9_quotient().additive
    F = gf9_frobenius(H)
    fixed = mask_of(x for x in range(H.n) if F.map[x] == x)
    assert H.label_set(fixed) == ("0", "i", "1")
    L = weak_sub(H, fixed)
    # [1] + [a^2] = {[a],[a^3]} in H misses the fixed points entirely
    assert L.table[L.index("1")][L.index("i")] == 0
    rep = analyze(L)
    assert rep.is_mosaic and not rep.total
    inc = inclusion_morphism(L, H)
    assert is_coshort(inc)


def test_strict_sub_closure():
    K = krasner()
    assert strict_sub_closure(K, ["1"]) == 0b11
    assert strict_sub_closure(K, []) == 0b01  # the identity alone
    Z = z2()
    assert strict_sub_closure(Z, ["0"]) == 0b01


def test_absorptive_closure():
    K = krasner()
    assert absorptive_closure(K, ["1"]) == 0b11
    Z = z2()
    assert absorptive_closure(Z, ["0"]) == 0b01
    # the section 3.1 coequalizer object: [0]+[0] = {[0],[2]} absorbs [2]
    L = from_masks(("0", "2"), ((0b11, 0b11), (0b11, 0b11)))
    assert absorptive_closure(L, ("0",)) == 0b11


def test_closures_monotone_idempotent():
    for M in small_battery():
        full = M.full_mask()
        for S in range(min(full + 1, 64)):
            c1 = strict_sub_closure(M, S)
            assert S & ~c1 == 0
            assert strict_sub_closure(M, c1) == c1
            a1 = absorptive_closure(M, S)
            assert c1 & ~a1 == 0
            assert absorptive_closure(M, a1) == a1
        for S in (0, 1, full):
            for T in (S, full):
                assert strict_sub_closure(M, S) & ~strict_sub_closure(M, S | T) == 0


def test_find_isomorphism_self_and_free_cofree():
    for M in small_battery():
        iso = find_isomorphism(M, M)
        assert iso is not None and iso.map == tuple(range(M.n))
    F1 = free(Tag.HMAG, ("a",))
    D1 = cofree(("a",))
    assert find_isomorphism(F1, D1) is None


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_find_isomorphism_relabelings(data):
    M = data.draw(st.sampled_from([m for m in small_battery() if m.n > 0]))
    perm = data.draw(st.permutations(range(M.n)))
    N = permute(M, list(perm))
    iso = find_isomorphism(M, N)
    assert iso is not None
