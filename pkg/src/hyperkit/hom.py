"""Morphism kind checks, exhaustive hom-set enumeration, and the
representing-object lifting criteria for strict/short/reversible.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache

from .axioms import Tag, UNITAL_TAGS, analyze
from .core import (
    Hypermagma,
    Morphism,
    compose,
    from_masks,
    is_absorptive,
    iter_bits,
    mask_of,
    product_of_subsets,
)
from .errors import (
    CodomainNotUnital,
    NotUnital,
    SearchCapExceeded,
)

DEFAULT_SEARCH_CAP = 10**8


def search_cap() -> int:
    """Node budget for every enumerator; HYPERKIT_SEARCH_CAP overrides."""
    raw = os.environ.get("HYPERKIT_SEARCH_CAP")
    return int(raw) if raw else DEFAULT_SEARCH_CAP


def is_colax(f: Morphism) -> bool:
    M, N = f.dom, f.cod
    for i in range(M.n):
        for j in range(M.n):
            img = f.image_mask(M.table[i][j])
            if img & ~N.table[f.map[i]][f.map[j]]:
                return False
    return True


def is_lax(f: Morphism) -> bool:
    M, N = f.dom, f.cod
    for i in range(M.n):
        for j in range(M.n):
            img = f.image_mask(M.table[i][j])
            if N.table[f.map[i]][f.map[j]] & ~img:
                return False
    return True


def is_strict(f: Morphism) -> bool:
    M, N = f.dom, f.cod
    for i in range(M.n):
        for j in range(M.n):
            if f.image_mask(M.table[i][j]) != N.table[f.map[i]][f.map[j]]:
                return False
    return True


def is_unital(f: Morphism) -> bool:
    return (
        f.dom.identity is not None
        and f.cod.identity is not None
        and f.map[f.dom.identity] == f.cod.identity
    )


def is_injective(f: Morphism) -> bool:
    return len(set(f.map)) == f.dom.n


def is_surjective(f: Morphism) -> bool:
    return set(f.map) == set(range(f.cod.n))


@dataclass(frozen=True)
class MorphismKinds:
    colax: bool
    lax: bool
    strict: bool
    unital: bool
    injective: bool
    surjective: bool


@lru_cache(maxsize=None)
def check_kind(f: Morphism) -> MorphismKinds:
    colax = is_colax(f)
    lax = is_lax(f)
    return MorphismKinds(
        colax=colax,
        lax=lax,
        strict=colax and lax,
        unital=is_unital(f),
        injective=is_injective(f),
        surjective=is_surjective(f),
    )


def is_short(p: Morphism) -> bool:
    """Surjective with x*y = p(p^-1(x) * p^-1(y)); surjectivity is checked,
    never assumed."""
    if not is_surjective(p):
        return False
    M, N = p.dom, p.cod
    fibers = [p.preimage_mask(1 << x) for x in range(N.n)]
    for x in range(N.n):
        for y in range(N.n):
            if N.table[x][y] != p.image_mask(product_of_subsets(M, fibers[x], fibers[y])):
                return False
    return True


def is_coshort(i: Morphism) -> bool:
    """Injective with i^-1(i(x) * i(y)) = x * y."""
    if not is_injective(i):
        return False
    L, M = i.dom, i.cod
    for x in range(L.n):
        for y in range(L.n):
            if i.preimage_mask(M.table[i.map[x]][i.map[y]]) != L.table[x][y]:
                return False
    return True


def kernel(f: Morphism) -> int:
    """Preimage of the codomain identity; always an absorptive subset."""
    if f.cod.identity is None:
        raise CodomainNotUnital("kernel needs a unital codomain")
    K = f.preimage_mask(1 << f.cod.identity)
    assert is_absorptive(f.dom, K)
    return K


def morphism_in_tag(f: Morphism, tag: Tag) -> bool:
    if not is_colax(f):
        return False
    if tag in UNITAL_TAGS:
        return is_unital(f)
    return True


class _Budget:
    __slots__ = ("left",)

    def __init__(self, cap: int | None):
        self.left = search_cap() if cap is None else cap

    def spend(self) -> None:
        self.left -= 1
        if self.left < 0:
            raise SearchCapExceeded("enumeration node cap exceeded")


def enumerate_morphisms(
    M: Hypermagma,
    N: Hypermagma,
    tag: Tag = Tag.HMAG,
    strict_only: bool = False,
    cap: int | None = None,
) -> list[Morphism]:
    """All tag-morphisms M -> N, ordered by the map array.

    Depth-first over element images in carrier order, pruning as soon as a
    fully determined pair violates colaxity.  Mosaic tags additionally prune
    with inverse preservation, which unital morphisms of mosaics satisfy
    automatically.
    """
    key = (M, N, tag, strict_only)
    cached = _HOM_CACHE.get(key)
    if cached is not None:
        return list(cached)

    unital_tag = tag in UNITAL_TAGS
    if unital_tag and (M.identity is None or N.identity is None):
        raise NotUnital(f"tag {tag.value} needs unital objects")
    n, m = M.n, N.n
    budget = _Budget(cap)
    out: list[Morphism] = []
    if n == 0:
        out = [Morphism(M, N, ())]
        _HOM_CACHE[key] = tuple(out)
        return out

    use_inverse_prune = (
        tag in (Tag.MSC, Tag.CMSC, Tag.HGRP, Tag.CAN)
        and M.inverse is not None
        and N.inverse is not None
    )
    f = [0] * n

    def ok(k: int) -> bool:
        fk = f[k]
        if use_inverse_prune:
            xinv = M.inverse[k]
            if xinv <= k and f[xinv] != N.inverse[fk]:
                return False
        for i in range(k + 1):
            for (a, b) in ((i, k), (k, i)):
                tgt = N.table[f[a]][f[b]]
                src = M.table[a][b]
                for z in iter_bits(src):
                    if z > k:
                        break
                    if not (tgt >> f[z]) & 1:
                        return False
        for i in range(k):
            for j in range(k):
                if (M.table[i][j] >> k) & 1 and not (N.table[f[i]][f[j]] >> fk) & 1:
                    return False
        return True

    def rec(k: int) -> None:
        if k == n:
            g = Morphism(M, N, tuple(f))
            if not strict_only or is_strict(g):
                out.append(g)
            return
        if unital_tag and k == M.identity:
            cands = (N.identity,)
        else:
            cands = range(m)
        for v in cands:
            budget.spend()
            f[k] = v
            if ok(k):
                rec(k + 1)

    rec(0)
    _HOM_CACHE[key] = tuple(out)
    return out


_HOM_CACHE: dict = {}


def hom_count(M: Hypermagma, N: Hypermagma, tag: Tag) -> int:
    return len(enumerate_morphisms(M, N, tag))


def inclusion_morphism(L: Hypermagma, M: Hypermagma) -> Morphism:
    """Inclusion matched by labels (for weak subs and equalizer objects)."""
    return Morphism(L, M, tuple(M.index(l) for l in L.labels))


def constant_morphism(M: Hypermagma, N: Hypermagma, target: int) -> Morphism:
    return Morphism(M, N, tuple(target for _ in range(M.n)))


# ---------------------------------------------------------------------------
# Representing objects


@dataclass(frozen=True)
class RepresentingObject:
    tag: Tag
    obj: Hypermagma
    a: int
    b: int
    c: int
    free_pair: Hypermagma
    iota: Morphism


def _free_pair(tag: Tag) -> Hypermagma:
    """The free object on two generators a, b in the given tag."""
    from .univ import free  # deferred: univ imports hom

    if tag is Tag.HMAG:
        return free(Tag.HMAG, ("a", "b"))
    if tag is Tag.UHMAG:
        return free(Tag.UHMAG, ("a", "b"))
    return free(tag, ("a", "b"))


def _sets_table(labels, entries):
    """entries: {(x_label, y_label): iterable of labels}; missing means empty."""
    pos = {l: i for i, l in enumerate(labels)}
    n = len(labels)
    rows = [[0] * n for _ in range(n)]
    for (x, y), val in entries.items():
        rows[pos[x]][pos[y]] = mask_of(pos[v] for v in val)
    return rows


@lru_cache(maxsize=None)
def representing_object(tag: Tag) -> RepresentingObject:
    if tag is Tag.HMAG:
        labels = ("a", "b", "c")
        rows = _sets_table(labels, {("a", "b"): ("c",)})
        E = from_masks(labels, rows)
    elif tag is Tag.UHMAG:
        labels = ("e", "a", "b", "c")
        entries = {("a", "b"): ("c",)}
        for x in labels:
            entries[("e", x)] = (x,)
            entries[(x, "e")] = (x,)
        E = from_masks(labels, _sets_table(labels, entries))
    elif tag is Tag.MSC:
        labels = ("e", "a", "a'", "b", "b'", "c", "c'")
        entries = {
            ("a", "a'"): ("e",),
            ("a", "b"): ("c",),
            ("a'", "a"): ("e",),
            ("a'", "c"): ("b",),
            ("b", "b'"): ("e",),
            ("b", "c'"): ("a'",),
            ("b'", "a'"): ("c'",),
            ("b'", "b"): ("e",),
            ("c", "b'"): ("a",),
            ("c", "c'"): ("e",),
            ("c'", "a"): ("b'",),
            ("c'", "c"): ("e",),
        }
        for x in labels:
            entries[("e", x)] = (x,)
            entries[(x, "e")] = (x,)
        E = from_masks(labels, _sets_table(labels, entries))
    elif tag is Tag.CMSC:
        labels = ("0", "a", "-a", "b", "-b", "c", "-c")
        # symmetrized table of nonzero sums
        sums = {
            ("a", "-a"): ("0",),
            ("a", "b"): ("c",),
            ("a", "-c"): ("-b",),
            ("-a", "-b"): ("-c",),
            ("-a", "c"): ("b",),
            ("b", "-b"): ("0",),
            ("b", "-c"): ("-a",),
            ("-b", "c"): ("a",),
            ("c", "-c"): ("0",),
        }
        entries = {}
        for (x, y), val in sums.items():
            entries[(x, y)] = val
            entries[(y, x)] = val
        for x in labels:
            entries[("0", x)] = (x,)
            entries[(x, "0")] = (x,)
        E = from_masks(labels, _sets_table(labels, entries))
    else:
        raise ValueError(f"no representing object for tag {tag}")

    rep = analyze(E)
    if tag in (Tag.MSC, Tag.CMSC):
        assert rep.is_mosaic
    F2 = _free_pair(tag)
    iota = Morphism(F2, E, tuple(_iota_image(tag, E, l) for l in F2.labels))
    assert morphism_in_tag(iota, tag) and is_injective(iota)
    a, b, c = (E.index(x) for x in _generator_labels(tag))
    assert (E.table[a][b] >> c) & 1
    return RepresentingObject(tag, E, a, b, c, F2, iota)


def _generator_labels(tag: Tag) -> tuple[str, str, str]:
    return ("a", "b", "c")


def _iota_image(tag: Tag, E: Hypermagma, label: str) -> int:
    if tag is Tag.HMAG:
        return E.index(label)
    if tag is Tag.UHMAG:
        return E.index(label)
    if tag is Tag.MSC:
        table = {"0": "e", "a": "a", "-a": "a'", "b": "b", "-b": "b'"}
        return E.index(table[label])
    table = {"0": "0", "a": "a", "-a": "-a", "b": "b", "-b": "-b"}
    return E.index(table[label])


def triples(M: Hypermagma) -> list[tuple[int, int, int]]:
    """All (x, y, z) with z in x*y; the set Hom(E_C, M) is in bijection with."""
    return [
        (x, y, z)
        for x in range(M.n)
        for y in range(M.n)
        for z in iter_bits(M.table[x][y])
    ]


def is_strict_via_lifting(f: Morphism, tag: Tag) -> bool:
    """Diagonal-lifting criterion against iota: F2 -> E_C.

    Enumerates every square (alpha, beta) with f . alpha = beta . iota and
    searches a filler g with g . iota = alpha and f . g = beta.
    """
    ro = representing_object(tag)
    alphas = enumerate_morphisms(ro.free_pair, f.dom, tag)
    betas = enumerate_morphisms(ro.obj, f.cod, tag)
    gs = enumerate_morphisms(ro.obj, f.dom, tag)
    for alpha in alphas:
        fa = compose(f, alpha)
        for beta in betas:
            if compose(beta, ro.iota) != fa:
                continue
            if not any(
                compose(g, ro.iota) == alpha and compose(f, g) == beta for g in gs
            ):
                return False
    return True


def is_short_via_lifting(p: Morphism, tag: Tag) -> bool:
    """Surjectivity of post-composition on Hom(E_C, -); for the non-unital
    tag this is conjoined with surjectivity of p itself."""
    ro = representing_object(tag)
    if tag is Tag.HMAG and not is_surjective(p):
        return False
    dom_homs = enumerate_morphisms(ro.obj, p.dom, tag)
    cod_homs = enumerate_morphisms(ro.obj, p.cod, tag)
    pushed = {compose(p, g).map for g in dom_homs}
    return all(h.map in pushed for h in cod_homs)


def is_reversible_via_lifting(M: Hypermagma) -> bool:
    """Bijectivity of restriction along iota: E_uHMag -> E_Msc on Hom(-, M)."""
    if M.identity is None:
        raise NotUnital("reversibility criterion needs a unital object")
    Eu = representing_object(Tag.UHMAG).obj
    Er = representing_object(Tag.MSC).obj
    iota = Morphism(Eu, Er, tuple(Er.index(l) for l in ("e", "a", "b", "c")))
    assert is_colax(iota) and is_unital(iota)
    big = enumerate_morphisms(Er, M, Tag.UHMAG)
    small = enumerate_morphisms(Eu, M, Tag.UHMAG)
    restricted = [compose(g, iota).map for g in big]
    return len(set(restricted)) == len(restricted) and set(restricted) == {
        h.map for h in small
    }
