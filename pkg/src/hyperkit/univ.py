"""Free and cofree objects, (co)limits, unitization, and the regular-image
machinery, together with enumeration-based universal-property verifiers.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .axioms import Tag, UNITAL_TAGS
from .core import (
    Hypermagma,
    Morphism,
    absorptive_closure,
    compose,
    fresh_label,
    from_masks,
    iter_bits,
    mask_of,
    product_of_subsets,
    terminal,
)
from .errors import (
    NoCommonCodomain,
    NotParallel,
    NotUnital,
    NotUnitalTag,
    UnsupportedCategory,
)
from .hom import (
    enumerate_morphisms,
    is_colax,
    is_injective,
    is_short,
    is_strict,
    is_surjective,
    is_unital,
    kernel,
)


@dataclass(frozen=True)
class Cone:
    apex: Hypermagma
    legs: tuple[Morphism, ...]


@dataclass(frozen=True)
class Cocone:
    apex: Hypermagma
    legs: tuple[Morphism, ...]


@dataclass(frozen=True)
class QuotientMap:
    """A surjection-by-construction with its domain partition."""

    morphism: Morphism
    partition: tuple[tuple[int, ...], ...]
    short: bool
    unital: bool

    @property
    def cod(self) -> Hypermagma:
        return self.morphism.cod


def free(tag: Tag, generators: Sequence[str], point: str | None = None) -> Hypermagma:
    """Free object on the given generators.

    HMag: empty products.  uHMag: a unit is adjoined (or `point` names the
    basepoint among the generators) and all other products are empty.
    Msc/cMsc: carrier 0, X, -X with x + (-x) = 0 and every other sum empty.
    """
    generators = [str(g) for g in generators]
    if tag is Tag.HMAG:
        n = len(generators)
        return from_masks(generators, [[0] * n for _ in range(n)])
    if tag is Tag.UHMAG:
        if point is None:
            labels = [fresh_label("e", generators)] + generators
            e = 0
        else:
            labels = generators
            e = generators.index(point)
        n = len(labels)
        rows = [[0] * n for _ in range(n)]
        for x in range(n):
            rows[e][x] = 1 << x
            rows[x][e] = 1 << x
        return from_masks(labels, rows)
    if tag in (Tag.MSC, Tag.CMSC):
        labels = ["0"] + generators + ["-" + g for g in generators]
        k = len(generators)
        n = 1 + 2 * k
        rows = [[0] * n for _ in range(n)]
        for x in range(n):
            rows[0][x] = 1 << x
            rows[x][0] = 1 << x
        for i in range(k):
            g, gneg = 1 + i, 1 + k + i
            rows[g][gneg] = 1
            rows[gneg][g] = 1
        return from_masks(labels, rows)
    raise UnsupportedCategory(f"no free objects built for tag {tag}")


def cofree(generators: Sequence[str]) -> Hypermagma:
    """Full-table hypermagma; right adjoint to the forgetful functor."""
    labels = [str(g) for g in generators]
    n = len(labels)
    full = (1 << n) - 1
    return from_masks(labels, [[full] * n for _ in range(n)])


def one_empty() -> Hypermagma:
    """The free hypermagma on one element 1 with 1*1 empty."""
    return free(Tag.HMAG, ("1",))


def product(Ms: Sequence[Hypermagma]) -> Cone:
    if not Ms:
        T = terminal()
        return Cone(T, ())
    sizes = [M.n for M in Ms]
    tuples = list(itertools.product(*(range(s) for s in sizes)))
    index = {t: i for i, t in enumerate(tuples)}
    labels = ["|".join(M.labels[c] for M, c in zip(Ms, t)) for t in tuples]
    n = len(tuples)
    rows = [[0] * n for _ in range(n)]
    for ia, a in enumerate(tuples):
        for ib, b in enumerate(tuples):
            comps = [M.table[x][y] for M, x, y in zip(Ms, a, b)]
            if any(c == 0 for c in comps):
                continue
            m = 0
            for combo in itertools.product(*(list(iter_bits(c)) for c in comps)):
                m |= 1 << index[combo]
            rows[ia][ib] = m
    P = from_masks(labels, rows)
    projections = tuple(
        Morphism(P, M, tuple(t[k] for t in tuples)) for k, M in enumerate(Ms)
    )
    return Cone(P, projections)


def coproduct(Ms: Sequence[Hypermagma], tag: Tag) -> Cocone:
    if tag in (Tag.HGRP, Tag.CAN):
        raise UnsupportedCategory(
            "binary coproducts can fail to exist for hypergroups; use a mosaic tag"
        )
    if tag is Tag.HMAG:
        labels: list[str] = []
        offsets = []
        for i, M in enumerate(Ms):
            offsets.append(len(labels))
            labels.extend(f"{l}@{i}" for l in M.labels)
        n = len(labels)
        rows = [[0] * n for _ in range(n)]
        for i, M in enumerate(Ms):
            off = offsets[i]
            for x in range(M.n):
                for y in range(M.n):
                    rows[off + x][off + y] = M.table[x][y] << off
        C = from_masks(labels, rows)
        legs = tuple(
            Morphism(M, C, tuple(range(off, off + M.n)))
            for M, off in zip(Ms, offsets)
        )
        return Cocone(C, legs)
    if tag in (Tag.UHMAG, Tag.MSC, Tag.CMSC):
        if any(M.identity is None for M in Ms):
            raise NotUnital("wedge coproduct needs unital summands")
        labels = ["e"]
        slot: list[list[int]] = []
        for i, M in enumerate(Ms):
            slots = []
            for x in range(M.n):
                if x == M.identity:
                    slots.append(0)
                else:
                    slots.append(len(labels))
                    labels.append(fresh_label(f"{M.labels[x]}@{i}", labels))
            slot.append(slots)
        n = len(labels)
        rows = [[0] * n for _ in range(n)]
        for x in range(n):
            rows[0][x] = 1 << x
            rows[x][0] = 1 << x
        for i, M in enumerate(Ms):
            for x in range(M.n):
                if x == M.identity:
                    continue
                for y in range(M.n):
                    if y == M.identity:
                        continue
                    rows[slot[i][x]][slot[i][y]] = mask_of(
                        slot[i][z] for z in iter_bits(M.table[x][y])
                    )
        W = from_masks(labels, rows)
        assert W.identity == 0
        legs = tuple(
            Morphism(M, W, tuple(slot[i])) for i, M in enumerate(Ms)
        )
        return Cocone(W, legs)
    raise UnsupportedCategory(str(tag))


def equalizer(
    f: Morphism, g: Morphism, tag: Tag | None = None
) -> tuple[Hypermagma, Morphism]:
    """Weak sub on the set equalizer; the inclusion is coshort.

    Refused for the hypergroup tags, where equalizers can fail to exist."""
    if tag in (Tag.HGRP, Tag.CAN):
        raise UnsupportedCategory(
            "equalizers can fail to exist for hypergroups; use a mosaic tag"
        )
    if f.dom != g.dom or f.cod != g.cod:
        raise NotParallel("equalizer needs a parallel pair")
    M = f.dom
    E = mask_of(x for x in range(M.n) if f.map[x] == g.map[x])
    keep = list(iter_bits(E))
    reindex = {old: new for new, old in enumerate(keep)}
    labels = tuple(M.labels[i] for i in keep)
    rows = [
        [mask_of(reindex[z] for z in iter_bits(M.table[i][j] & E)) for j in keep]
        for i in keep
    ]
    sub = from_masks(labels, rows)
    inc = Morphism(sub, M, tuple(keep))
    return sub, inc


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            if rb < ra:
                ra, rb = rb, ra
            self.parent[rb] = ra


def _quotient_by_blocks(
    M: Hypermagma, uf: _UnionFind
) -> tuple[Hypermagma, Morphism, tuple[tuple[int, ...], ...]]:
    """HMag quotient with x * y = pi(pi^-1(x) * pi^-1(y)); least-rep labels."""
    roots = sorted({uf.find(x) for x in range(M.n)})
    cls = {r: i for i, r in enumerate(roots)}
    proj = tuple(cls[uf.find(x)] for x in range(M.n))
    blocks = tuple(
        tuple(x for x in range(M.n) if proj[x] == i) for i in range(len(roots))
    )
    labels = tuple(M.labels[b[0]] for b in blocks)
    fibers = [mask_of(b) for b in blocks]
    k = len(blocks)
    rows = [
        [
            mask_of(proj[z] for z in iter_bits(product_of_subsets(M, fibers[i], fibers[j])))
            for j in range(k)
        ]
        for i in range(k)
    ]
    Q = from_masks(labels, rows)
    return Q, Morphism(M, Q, proj), blocks


def unitize(M: Hypermagma, E: int) -> QuotientMap:
    """Universal unital quotient collapsing E to the unit.

    E empty freely adjoins a unit.  Otherwise the kernel is the absorptive
    strict closure K of E, classes are the components of the chain relation
    y in x*K or K*x (K one block), and products with the unit class are
    forced to be scalar.
    """
    if E == 0:
        lbl = fresh_label("e", M.labels)
        labels = M.labels + (lbl,)
        n = M.n
        rows = [[M.table[i][j] for j in range(n)] + [0] for i in range(n)]
        rows.append([0] * (n + 1))
        for x in range(n + 1):
            rows[n][x] = 1 << x
            rows[x][n] = 1 << x
        Me = from_masks(labels, rows)
        pi = Morphism(M, Me, tuple(range(n)))
        part = tuple((x,) for x in range(n))
        return QuotientMap(pi, part, short=is_short(pi), unital=is_unital(pi))

    K = absorptive_closure(M, E)
    uf = _UnionFind(M.n)
    kbits = list(iter_bits(K))
    for other in kbits[1:]:
        uf.union(kbits[0], other)
    for x in range(M.n):
        xb = 1 << x
        reach = product_of_subsets(M, xb, K) | product_of_subsets(M, K, xb)
        for y in iter_bits(reach):
            uf.union(x, y)

    roots = sorted({uf.find(x) for x in range(M.n)})
    cls = {r: i for i, r in enumerate(roots)}
    proj = tuple(cls[uf.find(x)] for x in range(M.n))
    blocks = tuple(
        tuple(x for x in range(M.n) if proj[x] == i) for i in range(len(roots))
    )
    unit_class = proj[kbits[0]]
    base = [M.labels[b[0]] for b in blocks]
    others = [l for i, l in enumerate(base) if i != unit_class]
    labels = [
        fresh_label("e", others) if i == unit_class else base[i]
        for i in range(len(blocks))
    ]
    fibers = [mask_of(b) for b in blocks]
    k = len(blocks)
    rows = [[0] * k for _ in range(k)]
    for i in range(k):
        for j in range(k):
            if i == unit_class:
                rows[i][j] = 1 << j
            elif j == unit_class:
                rows[i][j] = 1 << i
            else:
                rows[i][j] = mask_of(
                    proj[z]
                    for z in iter_bits(product_of_subsets(M, fibers[i], fibers[j]))
                )
    Q = from_masks(labels, rows)
    assert Q.identity == unit_class
    pi = Morphism(M, Q, proj)
    assert is_colax(pi)
    return QuotientMap(pi, blocks, short=is_short(pi), unital=is_unital(pi))


def coequalizer(f: Morphism, g: Morphism, tag: Tag) -> QuotientMap:
    """Set-coequalizer quotient; unital tags unitize at the unit class."""
    if f.dom != g.dom or f.cod != g.cod:
        raise NotParallel("coequalizer needs a parallel pair")
    if tag in (Tag.HGRP, Tag.CAN):
        tag = Tag.UHMAG
    N = f.cod
    uf = _UnionFind(N.n)
    for x in range(f.dom.n):
        uf.union(f.map[x], g.map[x])
    L, piL, blocks = _quotient_by_blocks(N, uf)
    if tag is Tag.HMAG:
        return QuotientMap(piL, blocks, short=is_short(piL), unital=is_unital(piL))
    if N.identity is None:
        raise NotUnital("unital coequalizer needs a unital codomain")
    inner = unitize(L, 1 << piL.map[N.identity])
    pi = compose(inner.morphism, piL)
    part: dict[int, list[int]] = {}
    for x in range(N.n):
        part.setdefault(pi.map[x], []).append(x)
    partition = tuple(tuple(part[i]) for i in sorted(part))
    return QuotientMap(pi, partition, short=is_short(pi), unital=is_unital(pi))


def pullback(f: Morphism, g: Morphism) -> Cone:
    """Fiber product with intersected componentwise products."""
    if f.cod != g.cod:
        raise NoCommonCodomain("pullback needs a common codomain")
    L, M = f.dom, g.dom
    pairs = [(x, y) for x in range(L.n) for y in range(M.n) if f.map[x] == g.map[y]]
    index = {p: i for i, p in enumerate(pairs)}
    labels = [f"{L.labels[x]}|{M.labels[y]}" for x, y in pairs]
    n = len(pairs)
    rows = [[0] * n for _ in range(n)]
    for ia, (x, x2) in enumerate(pairs):
        for ib, (y, y2) in enumerate(pairs):
            left = L.table[x][y]
            right = M.table[x2][y2]
            m = 0
            for z in iter_bits(left):
                for z2 in iter_bits(right):
                    idx = index.get((z, z2))
                    if idx is not None:
                        m |= 1 << idx
            rows[ia][ib] = m
    P = from_masks(labels, rows)
    p1 = Morphism(P, L, tuple(x for x, _ in pairs))
    p2 = Morphism(P, M, tuple(y for _, y in pairs))
    return Cone(P, (p1, p2))


def regular_image_factorization(f: Morphism, tag: Tag) -> tuple[QuotientMap, Morphism]:
    """Coequalizer of the kernel pair followed by the induced injection."""
    kp = pullback(f, f)
    q = coequalizer(kp.legs[0], kp.legs[1], tag)
    Q = q.cod
    image_map = [0] * Q.n
    for x in range(f.dom.n):
        image_map[q.morphism.map[x]] = f.map[x]
    m = Morphism(Q, f.cod, tuple(image_map))
    assert compose(m, q.morphism) == f
    assert is_colax(m) and is_injective(m)
    return q, m


def is_normal_mono(i: Morphism, tag: Tag) -> bool:
    """Injective strict unital morphism onto an absorptive image."""
    if tag not in UNITAL_TAGS:
        raise NotUnitalTag("normal monomorphisms live in the unital tags")
    from .core import is_absorptive

    return (
        is_injective(i)
        and is_unital(i)
        and is_strict(i)
        and is_absorptive(i.cod, i.image())
    )


def is_normal_epi(p: Morphism, tag: Tag) -> bool:
    """True when p is isomorphic over its domain to unitize(M, ker p)."""
    if tag not in UNITAL_TAGS:
        raise NotUnitalTag("normal epimorphisms live in the unital tags")
    if not is_surjective(p) or p.cod.identity is None:
        return False
    q = unitize(p.dom, kernel(p))
    if len(q.partition) != p.cod.n:
        return False
    phi = [0] * q.cod.n
    for x in range(p.dom.n):
        phi[q.morphism.map[x]] = p.map[x]
    if tuple(p.map) != tuple(phi[q.morphism.map[x]] for x in range(p.dom.n)):
        return False
    cand = Morphism(q.cod, p.cod, tuple(phi))
    if not (is_injective(cand) and is_surjective(cand)):
        return False
    inv = [0] * p.cod.n
    for x, v in enumerate(cand.map):
        inv[v] = x
    return is_strict(cand) and is_strict(Morphism(p.cod, q.cod, tuple(inv)))


# ---------------------------------------------------------------------------
# Universal-property verification by enumeration


def check_product_universal(
    cone: Cone, factors: Sequence[Hypermagma], tag: Tag, battery: Sequence[Hypermagma]
) -> bool:
    for T in battery:
        legsets = [
            {h.map: h for h in enumerate_morphisms(T, M, tag)} for M in factors
        ]
        mediators = enumerate_morphisms(T, cone.apex, tag)
        seen = {}
        for m in mediators:
            key = tuple(compose(p, m).map for p in cone.legs)
            if key in seen:
                return False
            seen[key] = m
        expected = set(itertools.product(*(ls.keys() for ls in legsets)))
        if set(seen.keys()) != expected:
            return False
    return True


def check_coproduct_universal(
    cocone: Cocone, summands: Sequence[Hypermagma], tag: Tag, battery: Sequence[Hypermagma]
) -> bool:
    for T in battery:
        legsets = [
            {h.map for h in enumerate_morphisms(M, T, tag)} for M in summands
        ]
        mediators = enumerate_morphisms(cocone.apex, T, tag)
        seen = set()
        for m in mediators:
            key = tuple(compose(m, inj).map for inj in cocone.legs)
            if key in seen:
                return False
            seen.add(key)
        if seen != set(itertools.product(*legsets)):
            return False
    return True


def check_equalizer_universal(
    f: Morphism,
    g: Morphism,
    obj: Hypermagma,
    inc: Morphism,
    tag: Tag,
    battery: Sequence[Hypermagma],
) -> bool:
    for T in battery:
        cones = {
            q.map
            for q in enumerate_morphisms(T, f.dom, tag)
            if compose(f, q) == compose(g, q)
        }
        mediated = [compose(inc, h).map for h in enumerate_morphisms(T, obj, tag)]
        if len(set(mediated)) != len(mediated) or set(mediated) != cones:
            return False
    return True


def check_coequalizer_universal(
    f: Morphism,
    g: Morphism,
    q: QuotientMap,
    tag: Tag,
    battery: Sequence[Hypermagma],
) -> bool:
    for T in battery:
        cocones = {
            h.map
            for h in enumerate_morphisms(f.cod, T, tag)
            if compose(h, f) == compose(h, g)
        }
        mediated = [
            compose(h, q.morphism).map
            for h in enumerate_morphisms(q.cod, T, tag)
        ]
        if len(set(mediated)) != len(mediated) or set(mediated) != cocones:
            return False
    return True
