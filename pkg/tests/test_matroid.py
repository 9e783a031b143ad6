import itertools
import random

import pytest

from hyperkit.axioms import Tag, analyze
from hyperkit.core import Morphism, find_isomorphism, iter_bits, mask_of, strict_sub_closure
from hyperkit.errors import (
    ExchangeFails,
    FlatsNotIntersectionClosed,
    NotSimplePointed,
)
from hyperkit.hom import check_kind, enumerate_morphisms
from hyperkit.matroid import (
    FANO_LINES,
    Matroid,
    adjoin_point,
    fano_matroid,
    graphic_matroid,
    is_simple,
    is_strong_map,
    make_matroid,
    matroid_to_mosaic,
    projective_checks,
    projective_law_holds,
    simplify,
    uniform_matroid,
)
from hyperkit.monoidal import enumerate_strict_submosaics


def test_make_uniform():
    M = uniform_matroid(2, 3)
    assert is_simple(M)
    assert M.closure(0) == 0
    assert M.closure(0b011) == 0b111


def test_make_fano():
    F = fano_matroid()
    assert len(F.flats) == 1 + 7 + 7 + 1
    for line in FANO_LINES:
        p, q = line[0] - 1, line[1] - 1
        assert F.closure((1 << p) | (1 << q)) == mask_of(x - 1 for x in line)


def test_free_matroid():
    ground = ["a", "b", "c"]
    M = make_matroid(ground, flats=[S for S in range(8)])
    assert all(M.closure(S) == S for S in range(8))


def test_flats_validation():
    with pytest.raises(FlatsNotIntersectionClosed):
        make_matroid(["a", "b", "c"], flats=[0b011, 0b101, 0b111])
    with pytest.raises(FlatsNotIntersectionClosed):
        make_matroid(["a", "b"], flats=[0])  # ground missing


def test_exchange_failure_detected():
    # {a,b} and {c,d} closed but singleton closures break exchange
    with pytest.raises(ExchangeFails):
        make_matroid(
            ["a", "b", "c", "d"],
            flats=[0, 0b0001, 0b0010, 0b0100, 0b1000, 0b0011, 0b1100, 0b1111],
        )


def test_closure_operator_laws():
    for M in (uniform_matroid(2, 4), fano_matroid(), graphic_matroid([("u", "v"), ("v", "w"), ("u", "w")])):
        full = (1 << M.n) - 1
        for S in range(full + 1):
            C = M.closure(S)
            assert S & ~C == 0
            assert M.closure(C) == C
        rng = random.Random(7)
        for _ in range(50):
            S = rng.randrange(full + 1)
            T = S | rng.randrange(full + 1)
            assert M.closure(S) & ~M.closure(T) == 0


def test_rank_and_independent_input():
    tri = graphic_matroid([("u", "v"), ("v", "w"), ("u", "w")])
    uni = uniform_matroid(2, 3)
    assert sorted(tri.flats) == sorted(uni.flats)
    ind = make_matroid(
        ["a", "b", "c"],
        independent=[[], ["a"], ["b"], ["c"], ["a", "b"], ["a", "c"], ["b", "c"]],
    )
    assert sorted(ind.flats) == sorted(uni.flats)


def test_simplify_identity_on_simple():
    M = uniform_matroid(2, 3)
    S, unit = simplify(M)
    assert sorted(S.flats) == sorted(M.flats)
    assert unit == (0, 1, 2)


def test_simplify_merges_parallel():
    M = make_matroid(["a", "b", "c"], flats=[0, 0b011, 0b100, 0b111])
    S, unit = simplify(M)
    assert S.ground == ("a", "c")
    assert unit == (0, 0, 1)
    SP, unitp = simplify(M, pointed=True)
    assert SP.ground == ("0", "a", "c")
    assert SP.pointed == 0
    assert unitp == (1, 1, 2)


def test_simplify_loopy_pointed():
    g = graphic_matroid([("u", "v"), ("v", "w"), ("u", "w"), ("u", "u")])
    assert g.loops() == 0b1000
    S, unit = simplify(g, pointed=True)
    assert S.pointed == 0 and is_simple(S)
    assert unit[3] == 0
    # unpointed simplification of a loopy matroid has no strong unit map
    S2, unit2 = simplify(g)
    assert unit2 is None


def test_mosaic_u23():
    M = adjoin_point(uniform_matroid(2, 3))
    H = matroid_to_mosaic(M)
    a, b, c = H.index("a"), H.index("b"), H.index("c")
    assert H.table[a][b] == 1 << c
    assert H.table[a][a] == (1 << a) | (1 << H.identity)
    rep = analyze(H)
    assert rep.classification == "CommutativeMosaic"
    assert all(H.inverse[x] == x for x in range(H.n))
    # x + y stays inside C(x, y)
    for x in range(H.n):
        for y in range(H.n):
            assert H.table[x][y] & ~M.closure((1 << x) | (1 << y)) == 0


def test_mosaic_fano_witness_shape():
    H = matroid_to_mosaic(adjoin_point(fano_matroid()))
    rep = analyze(H)
    assert rep.classification == "CommutativeMosaic"
    x, y, z = rep.witness("associative")
    assert x == y and z not in (x, H.identity)


def test_mosaic_u24_hypergroup():
    H = matroid_to_mosaic(adjoin_point(uniform_matroid(2, 4)))
    assert analyze(H).classification == "CanonicalHypergroup"


def test_mosaic_requires_simple_pointed():
    with pytest.raises(NotSimplePointed):
        matroid_to_mosaic(uniform_matroid(2, 3))
    par = make_matroid(["a", "b", "c"], flats=[0, 0b011, 0b100, 0b111])
    with pytest.raises(NotSimplePointed):
        matroid_to_mosaic(adjoin_point(par))


def test_strong_maps_to_mosaic_morphisms():
    u23 = adjoin_point(uniform_matroid(2, 3))
    u24 = adjoin_point(uniform_matroid(2, 4))
    H23, H24 = matroid_to_mosaic(u23), matroid_to_mosaic(u24)
    assert is_strong_map(u23, u23, tuple(range(u23.n)))
    count = 0
    for f in itertools.product(range(u24.n), repeat=u23.n):
        if f[u23.pointed] != u24.pointed:
            continue
        if is_strong_map(u23, u24, f):
            count += 1
            m = Morphism(H23, H24, f)
            k = check_kind(m)
            assert k.colax and k.unital
    assert count > 0


def test_strong_map_functoriality():
    u23 = adjoin_point(uniform_matroid(2, 3))
    strong = [
        f
        for f in itertools.product(range(u23.n), repeat=u23.n)
        if f[0] == 0 and is_strong_map(u23, u23, f)
    ]
    for f in strong[:6]:
        for g in strong[:6]:
            comp = tuple(g[f[x]] for x in range(u23.n))
            assert is_strong_map(u23, u23, comp)


def test_fano_line_collapse_is_not_strong():
    # sending a line complement to the point is not a strong map: the
    # preimage of {0} is the complement plus 0, which is not closed
    fano = adjoin_point(fano_matroid())
    u23 = adjoin_point(uniform_matroid(2, 3))
    line = FANO_LINES[0]
    f = [0] * fano.n
    for tgt, p in enumerate(line):
        f[fano.index(str(p))] = tgt + 1
    assert not is_strong_map(fano, u23, tuple(f))


def test_line_inclusion_is_strong():
    u23 = adjoin_point(uniform_matroid(2, 3))
    fano = adjoin_point(fano_matroid())
    line = FANO_LINES[0]
    f = [0, fano.index(str(line[0])), fano.index(str(line[1])), fano.index(str(line[2]))]
    assert is_strong_map(u23, fano, tuple(f))


def test_projective_checks_fano_u24():
    fano = adjoin_point(fano_matroid())
    u24 = adjoin_point(uniform_matroid(2, 4))
    pc = projective_checks(fano, others=[u24])
    assert pc["projective_law"] and pc["closure_eq_generated"] and pc["fullness"]
    pc24 = projective_checks(u24, others=[fano, u24])
    assert pc24["projective_law"] and pc24["closure_eq_generated"] and pc24["fullness"]


def test_projective_law_fails_u34():
    u34 = adjoin_point(uniform_matroid(3, 4))
    ok, witness = projective_law_holds(u34)
    assert not ok and witness is not None
    S, T = witness
    union = 0
    for x in iter_bits(S):
        for y in iter_bits(T):
            union |= u34.closure((1 << x) | (1 << y))
    assert union != u34.closure(S | T)


def test_closed_sets_are_strict_submosaics_for_projective():
    fano = adjoin_point(fano_matroid())
    H = matroid_to_mosaic(fano)
    subs = set(enumerate_strict_submosaics(H))
    assert subs == set(fano.flats)
    # and closure agrees with the generated strict submosaic
    for S in range(0, 1 << fano.n, 7):
        assert fano.closure(S) == strict_sub_closure(H, S)
