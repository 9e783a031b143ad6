"""The three closed monoidal products (boxdot, wedge-smash, boxtimes), the
internal homs, bimorphism machinery, the Krasner strict-sub classifier, and
the monoid-object packaging of multirings.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .axioms import Tag, UNITAL_TAGS, analyze
from .core import (
    Hypermagma,
    Morphism,
    compose,
    from_masks,
    iter_bits,
    mask_of,
    product_of_subsets,
)
from .errors import (
    NotCommutativeMosaic,
    NotMosaic,
    NotUnital,
)
from .hom import (
    _Budget,
    constant_morphism,
    enumerate_morphisms,
    is_colax,
    is_short,
    is_unital,
    morphism_in_tag,
)
from .univ import QuotientMap, coequalizer, free, terminal, unitize


def boxdot(M: Hypermagma, N: Hypermagma) -> Hypermagma:
    """Product carrier with the minimal slicewise-distributive hyperoperation."""
    nm, nn = M.n, N.n
    labels = [f"{a}|{b}" for a in M.labels for b in N.labels]

    def idx(x: int, y: int) -> int:
        return x * nn + y

    n = nm * nn
    rows = [[0] * n for _ in range(n)]
    for x in range(nm):
        for y in range(nn):
            a = idx(x, y)
            for x2 in range(nm):
                for y2 in range(nn):
                    if x == x2 and y != y2:
                        m = mask_of(idx(x, t) for t in iter_bits(N.table[y][y2]))
                    elif x != x2 and y == y2:
                        m = mask_of(idx(t, y) for t in iter_bits(M.table[x][x2]))
                    elif x == x2 and y == y2:
                        m = mask_of(idx(t, y) for t in iter_bits(M.table[x][x]))
                        m |= mask_of(idx(x, t) for t in iter_bits(N.table[y][y]))
                    else:
                        m = 0
                    rows[a][idx(x2, y2)] = m
    return from_masks(labels, rows)


def wedge_smash(M: Hypermagma, N: Hypermagma) -> QuotientMap:
    """Unitization of boxdot at E = M x e  union  e x N (smash carrier)."""
    if M.identity is None or N.identity is None:
        raise NotUnital("wedge-smash needs unital factors")
    B = boxdot(M, N)
    E = mask_of(x * N.n + N.identity for x in range(M.n))
    E |= mask_of(M.identity * N.n + y for y in range(N.n))
    q = unitize(B, E)
    assert q.cod.n == (M.n - 1) * (N.n - 1) + 1
    return q


def wedge_unit() -> Hypermagma:
    """The monoidal unit of the wedge-smash product: the free unital
    hypermagma on one generator (the terminal object is not a unit)."""
    return free(Tag.UHMAG, ("g",))


def _require_cmsc(M: Hypermagma) -> None:
    rep = analyze(M)
    if not (rep.is_mosaic and rep.commutative):
        raise NotCommutativeMosaic(f"{M!r} is not a commutative mosaic")


def negation_endomorphism(M: Hypermagma) -> Morphism:
    _require_cmsc(M)
    assert M.inverse is not None
    return Morphism(M, M, M.inverse)


def boxtimes(M: Hypermagma, N: Hypermagma) -> QuotientMap:
    """Coequalizer in uHMag of the identity and (-1) wedge (-1) on the smash;
    the returned quotient map goes all the way from boxdot(M, N)."""
    _require_cmsc(M)
    _require_cmsc(N)
    q1 = wedge_smash(M, N)
    W = q1.cod
    pair_to_w = q1.morphism.map
    neg = [0] * W.n
    for x in range(M.n):
        for y in range(N.n):
            src = pair_to_w[x * N.n + y]
            tgt = pair_to_w[M.inverse[x] * N.n + N.inverse[y]]
            neg[src] = tgt
    i_minus = Morphism(W, W, tuple(neg))
    assert is_colax(i_minus) and is_unital(i_minus)
    q2 = coequalizer(Morphism(W, W, tuple(range(W.n))), i_minus, Tag.UHMAG)
    pi = compose(q2.morphism, q1.morphism)
    part: dict[int, list[int]] = {}
    for p in range(len(pi.map)):
        part.setdefault(pi.map[p], []).append(p)
    partition = tuple(tuple(part[i]) for i in sorted(part))
    rep = analyze(pi.cod)
    assert rep.is_mosaic and rep.commutative
    return QuotientMap(pi, partition, short=is_short(pi), unital=is_unital(pi))


@dataclass(frozen=True)
class Bimorphism:
    """A two-variable map whose row and column slices are tag-morphisms."""

    dom1: Hypermagma
    dom2: Hypermagma
    cod: Hypermagma
    table: tuple[tuple[int, ...], ...]

    def __call__(self, x: int, y: int) -> int:
        return self.table[x][y]


def is_bimorphism(b: Bimorphism, tag: Tag) -> bool:
    for x in range(b.dom1.n):
        row = Morphism(b.dom2, b.cod, b.table[x])
        if not morphism_in_tag(row, tag):
            return False
    for y in range(b.dom2.n):
        col = Morphism(b.dom1, b.cod, tuple(b.table[x][y] for x in range(b.dom1.n)))
        if not morphism_in_tag(col, tag):
            return False
    return True


def enumerate_bimorphisms(
    M: Hypermagma,
    N: Hypermagma,
    L: Hypermagma,
    tag: Tag,
    cap: int | None = None,
) -> list[Bimorphism]:
    """All bimorphisms M x N -> L, ordered by the flattened table.

    Rows are drawn from Hom(N, L); columns are pruned incrementally on every
    fully determined triple.
    """
    rows_pool = enumerate_morphisms(N, L, tag)
    unital_tag = tag in UNITAL_TAGS
    budget = _Budget(cap)
    chosen: list[Morphism] = []
    out: list[Bimorphism] = []

    def cols_ok(k: int) -> bool:
        # column maps x -> B(x, y) must be colax on triples inside 0..k
        for i in range(k + 1):
            for j in range(k + 1):
                if i != k and j != k:
                    src = M.table[i][j]
                    if not (src >> k) & 1:
                        continue
                    for y in range(N.n):
                        if not (L.table[chosen[i].map[y]][chosen[j].map[y]] >> chosen[k].map[y]) & 1:
                            return False
                    continue
                src = M.table[i][j]
                for z in iter_bits(src):
                    if z > k:
                        break
                    for y in range(N.n):
                        if not (L.table[chosen[i].map[y]][chosen[j].map[y]] >> chosen[z].map[y]) & 1:
                            return False
        return True

    def rec(k: int) -> None:
        if k == M.n:
            table = tuple(r.map for r in chosen)
            out.append(Bimorphism(M, N, L, table))
            return
        if unital_tag and k == M.identity:
            cands = [constant_morphism(N, L, L.identity)]
        else:
            cands = rows_pool
        for r in cands:
            budget.spend()
            chosen.append(r)
            if cols_ok(k):
                rec(k + 1)
            chosen.pop()

    if M.n == 0:
        return [Bimorphism(M, N, L, ())]
    rec(0)
    out.sort(key=lambda b: b.table)
    return out


def tensor(M: Hypermagma, N: Hypermagma, tag: Tag) -> tuple[Hypermagma, Bimorphism]:
    """The tag's monoidal product with its canonical bimorphism."""
    if tag is Tag.HMAG:
        T = boxdot(M, N)
        table = tuple(
            tuple(x * N.n + y for y in range(N.n)) for x in range(M.n)
        )
        u = Bimorphism(M, N, T, table)
    elif tag is Tag.UHMAG:
        q = wedge_smash(M, N)
        T = q.cod
        table = tuple(
            tuple(q.morphism.map[x * N.n + y] for y in range(N.n)) for x in range(M.n)
        )
        u = Bimorphism(M, N, T, table)
    elif tag is Tag.CMSC:
        q = boxtimes(M, N)
        T = q.cod
        table = tuple(
            tuple(q.morphism.map[x * N.n + y] for y in range(N.n)) for x in range(M.n)
        )
        u = Bimorphism(M, N, T, table)
    else:
        raise NotCommutativeMosaic(f"no tensor product for tag {tag}")
    assert is_bimorphism(u, tag)
    return T, u


@lru_cache(maxsize=None)
def _hom_elements(M: Hypermagma, N: Hypermagma, tag: Tag) -> tuple[Morphism, ...]:
    return tuple(enumerate_morphisms(M, N, tag))


@lru_cache(maxsize=None)
def hom_object(M: Hypermagma, N: Hypermagma, tag: Tag) -> Hypermagma:
    """The hom-set under f*g = {h | h(x) in f(x)*g(x) for all x}."""
    homs = _hom_elements(M, N, tag)
    H = len(homs)
    labels = ["(" + ",".join(N.labels[v] for v in h.map) + ")" for h in homs]
    by_value = [
        [mask_of(i for i, h in enumerate(homs) if h.map[x] == v) for v in range(N.n)]
        for x in range(M.n)
    ]
    rows = [[0] * H for _ in range(H)]
    for a, f in enumerate(homs):
        for b, g in enumerate(homs):
            m = (1 << H) - 1
            for x in range(M.n):
                allowed = N.table[f.map[x]][g.map[x]]
                combined = 0
                for v in iter_bits(allowed):
                    combined |= by_value[x][v]
                m &= combined
                if not m:
                    break
            rows[a][b] = m
    return from_masks(labels, rows)


def hom_index(M: Hypermagma, N: Hypermagma, tag: Tag, map_tuple: tuple[int, ...]) -> int:
    homs = _hom_elements(M, N, tag)
    for i, h in enumerate(homs):
        if h.map == map_tuple:
            return i
    raise KeyError(map_tuple)


def curry(phi: Morphism, M: Hypermagma, N: Hypermagma, tag: Tag) -> Morphism:
    """Hom(M (x) N, L) -> Hom(M, [N, L])."""
    T, u = tensor(M, N, tag)
    assert phi.dom == T
    L = phi.cod
    Hobj = hom_object(N, L, tag)
    images = []
    for x in range(M.n):
        slice_map = tuple(phi.map[u(x, y)] for y in range(N.n))
        images.append(hom_index(N, L, tag, slice_map))
    psi = Morphism(M, Hobj, tuple(images))
    assert morphism_in_tag(psi, tag)
    return psi


def uncurry(psi: Morphism, M: Hypermagma, N: Hypermagma, L: Hypermagma, tag: Tag) -> Morphism:
    """Hom(M, [N, L]) -> Hom(M (x) N, L)."""
    T, u = tensor(M, N, tag)
    homs = _hom_elements(N, L, tag)
    assert psi.dom == M and psi.cod == hom_object(N, L, tag)
    values: dict[int, int] = {}
    for x in range(M.n):
        h = homs[psi.map[x]]
        for y in range(N.n):
            t = u(x, y)
            v = h.map[y]
            if t in values:
                assert values[t] == v
            else:
                values[t] = v
    phi = Morphism(T, L, tuple(values[t] for t in range(T.n)))
    assert morphism_in_tag(phi, tag)
    return phi


def represents_bimorphisms(
    T: Hypermagma,
    u: Bimorphism,
    battery: Sequence[Hypermagma],
    tag: Tag,
) -> tuple[bool, str | None]:
    """Whether composing with u is a bijection Hom(T, L) -> Bim(dom1, dom2; L)
    for every battery object L; returns the first failure as a witness."""
    assert u.cod == T
    M, N = u.dom1, u.dom2
    for L in battery:
        bims = {b.table for b in enumerate_bimorphisms(M, N, L, tag)}
        homs = enumerate_morphisms(T, L, tag)
        if len(homs) != len(bims):
            return False, (
                f"|Hom(T,{'|'.join(L.labels)})| = {len(homs)} but "
                f"|Bim| = {len(bims)}"
            )
        mapped = set()
        for phi in homs:
            tbl = tuple(
                tuple(phi.map[u(x, y)] for y in range(N.n)) for x in range(M.n)
            )
            if tbl in mapped:
                return False, f"pairing not injective at {L.labels}"
            mapped.add(tbl)
        if mapped != bims:
            return False, f"pairing not surjective at {L.labels}"
    return True, None


def enumerate_strict_submosaics(M: Hypermagma) -> list[int]:
    """All subsets containing the unit, closed under products and inverses."""
    rep = analyze(M)
    if not rep.is_mosaic:
        raise NotMosaic(f"{M!r} is not a mosaic")
    e = M.identity
    inv = M.inverse
    out = []
    for K in range(1 << M.n):
        if not (K >> e) & 1:
            continue
        if any(not (K >> inv[x]) & 1 for x in iter_bits(K)):
            continue
        if product_of_subsets(M, K, K) & ~K:
            continue
        out.append(K)
    return out


def strict_classifier_check(M: Hypermagma) -> bool:
    """Kernel map Msc(M, K) -> strict submosaics is a bijection."""
    from .zoo import krasner

    K = krasner()
    subs = set(enumerate_strict_submosaics(M))
    homs = enumerate_morphisms(M, K, Tag.MSC)
    kernels = [
        mask_of(x for x in range(M.n) if f.map[x] == K.identity) for f in homs
    ]
    return len(set(kernels)) == len(kernels) and set(kernels) == subs


@dataclass(frozen=True)
class MonoidObject:
    """A commutative mosaic with a bimorphism multiplication and a unit map."""

    mosaic: Hypermagma
    multiplication: Bimorphism
    unit: Morphism
    left_strict: bool
    right_strict: bool

    @property
    def hyperring_flavor(self) -> bool:
        return self.left_strict and self.right_strict


def to_monoid_object(R) -> MonoidObject:
    """Package a multiring as a monoid object of the boxtimes structure.

    Laws are verified at the trilinear level: (ab)c = a(bc) as subsets and
    1a = a = a1; the unit is the unique mosaic map from the free object on
    one generator.
    """
    from .errors import NotMultiring
    from .zoo import Multiring

    if not isinstance(R, Multiring):
        raise NotMultiring("expected a Multiring")
    if not R.multiring:
        raise NotMultiring("subdistributivity fails")
    A = R.additive
    mul = R.mul
    table = tuple(tuple(mul[x][y] for y in range(A.n)) for x in range(A.n))
    B = Bimorphism(A, A, A, table)
    assert is_bimorphism(B, Tag.CMSC)
    F = free(Tag.CMSC, ("1",))
    one = R.one
    unit = Morphism(F, A, (A.identity, one, A.inverse[one]))
    assert morphism_in_tag(unit, Tag.CMSC)
    for a in range(A.n):
        for b in range(A.n):
            for c in range(A.n):
                assert mul[mul[a][b]][c] == mul[a][mul[b][c]]
        assert mul[one][a] == a and mul[a][one] == a
    left = all(
        mask_of(mul[a][t] for t in iter_bits(A.table[b][c]))
        == A.table[mul[a][b]][mul[a][c]]
        for a in range(A.n)
        for b in range(A.n)
        for c in range(A.n)
    )
    right = all(
        mask_of(mul[t][a] for t in iter_bits(A.table[b][c]))
        == A.table[mul[b][a]][mul[c][a]]
        for a in range(A.n)
        for b in range(A.n)
        for c in range(A.n)
    )
    return MonoidObject(A, B, unit, left, right)
