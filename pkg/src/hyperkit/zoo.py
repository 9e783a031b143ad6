"""Named example generators (group and ring quotients, lattice mosaics,
Krasner-style quotient multirings), enumeration of canonical hypergroups up
to isomorphism, and the counterexample refuters.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .axioms import Tag, analyze
from .core import (
    Hypermagma,
    Morphism,
    find_isomorphism,
    from_masks,
    iter_bits,
    mask_of,
)
from .errors import (
    AdditiveNotCanonical,
    CandidateDoesNotEqualize,
    NotAbelian,
    NotAnAutomorphismGroup,
    NotASemilattice,
    NotASubgroup,
    NotMultiring,
    NotUnitSubgroup,
    ZeroNotAbsorbing,
)
from .hom import enumerate_morphisms, is_strict

# ---------------------------------------------------------------------------
# Groups


@dataclass(frozen=True)
class FiniteGroup:
    labels: tuple[str, ...]
    table: tuple[tuple[int, ...], ...]
    identity: int
    inverse: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.labels)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def index(self, label: str) -> int:
        return self.labels.index(label)


def make_finite_group(labels: Sequence[str], table: Sequence[Sequence[int]]) -> FiniteGroup:
    labels = tuple(str(l) for l in labels)
    n = len(labels)
    assert len(table) == n and all(len(r) == n for r in table)
    tbl = tuple(tuple(r) for r in table)
    e = None
    for cand in range(n):
        if all(tbl[cand][x] == x == tbl[x][cand] for x in range(n)):
            e = cand
            break
    if e is None:
        raise NotASubgroup("no identity element")
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if tbl[tbl[a][b]][c] != tbl[a][tbl[b][c]]:
                    raise NotASubgroup(f"not associative at {a},{b},{c}")
    inv = []
    for a in range(n):
        cands = [b for b in range(n) if tbl[a][b] == e and tbl[b][a] == e]
        if len(cands) != 1:
            raise NotASubgroup(f"element {labels[a]} lacks a unique inverse")
        inv.append(cands[0])
    return FiniteGroup(labels, tbl, e, tuple(inv))


def cyclic_group(n: int) -> FiniteGroup:
    labels = [str(i) for i in range(n)]
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    return make_finite_group(labels, table)


def klein_four_group() -> FiniteGroup:
    labels = ["0", "a1", "a2", "a3"]
    add = [[0, 1, 2, 3], [1, 0, 3, 2], [2, 3, 0, 1], [3, 2, 1, 0]]
    return make_finite_group(labels, add)


def _perm_label(p: tuple[int, ...]) -> str:
    n = len(p)
    seen = [False] * n
    cycles = []
    for i in range(n):
        if seen[i] or p[i] == i:
            seen[i] = True
            continue
        cyc = [i]
        seen[i] = True
        j = p[i]
        while j != i:
            cyc.append(j)
            seen[j] = True
            j = p[j]
        cycles.append("(" + " ".join(str(v) for v in cyc) + ")")
    return "".join(cycles) if cycles else "e"


def symmetric_group(n: int) -> FiniteGroup:
    perms = sorted(itertools.permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}
    labels = [_perm_label(p) for p in perms]
    table = [
        [index[tuple(p[q[i]] for i in range(n))] for q in perms] for p in perms
    ]
    return make_finite_group(labels, table)


def group_to_hypermagma(G: FiniteGroup) -> Hypermagma:
    rows = [[1 << G.table[i][j] for j in range(G.n)] for i in range(G.n)]
    return from_masks(G.labels, rows)


def is_subgroup(G: FiniteGroup, K: int) -> bool:
    if not (K >> G.identity) & 1:
        return False
    for a in iter_bits(K):
        if not (K >> G.inverse[a]) & 1:
            return False
        for b in iter_bits(K):
            if not (K >> G.table[a][b]) & 1:
                return False
    return True


# ---------------------------------------------------------------------------
# Group-derived hypergroups


def _quotient_by_classes(G: FiniteGroup, classes: list[int]) -> Hypermagma:
    """Hyperoperation [a]*[b] = {[c] | c in [a][b]} with least-rep labels."""
    cls_of = [None] * G.n
    for i, c in enumerate(classes):
        for x in iter_bits(c):
            cls_of[x] = i
    labels = [G.labels[next(iter_bits(c))] for c in classes]
    k = len(classes)
    rows = [[0] * k for _ in range(k)]
    for i in range(k):
        for j in range(k):
            prods = 0
            for a in iter_bits(classes[i]):
                for b in iter_bits(classes[j]):
                    prods |= 1 << G.table[a][b]
            rows[i][j] = mask_of(cls_of[c] for c in iter_bits(prods))
    return from_masks(labels, rows)


def double_coset_hypergroup(G: FiniteGroup, K: int | Iterable[str]) -> Hypermagma:
    if not isinstance(K, int):
        K = mask_of(G.index(l) for l in K)
    if not is_subgroup(G, K):
        raise NotASubgroup("K is not a subgroup")
    seen = 0
    classes = []
    for a in range(G.n):
        if (seen >> a) & 1:
            continue
        coset = 0
        for k1 in iter_bits(K):
            for k2 in iter_bits(K):
                coset |= 1 << G.table[G.table[k1][a]][k2]
        classes.append(coset)
        seen |= coset
    return _quotient_by_classes(G, classes)


def conjugacy_hypergroup(G: FiniteGroup) -> Hypermagma:
    seen = 0
    classes = []
    for a in range(G.n):
        if (seen >> a) & 1:
            continue
        cls = 0
        for g in range(G.n):
            cls |= 1 << G.table[G.table[g][a]][G.inverse[g]]
        classes.append(cls)
        seen |= cls
    return _quotient_by_classes(G, classes)


def _is_automorphism(G: FiniteGroup, p: Sequence[int]) -> bool:
    if sorted(p) != list(range(G.n)):
        return False
    return all(
        p[G.table[a][b]] == G.table[p[a]][p[b]] for a in range(G.n) for b in range(G.n)
    )


def orbit_hypergroup(A: FiniteGroup, action: Sequence[Sequence[int]]) -> Hypermagma:
    """Quotient of an abelian group by a group of automorphisms."""
    if any(A.table[a][b] != A.table[b][a] for a in range(A.n) for b in range(A.n)):
        raise NotAbelian("orbit quotient needs an abelian group")
    perms = [tuple(p) for p in action]
    for p in perms:
        if not _is_automorphism(A, p):
            raise NotAnAutomorphismGroup(f"{p} is not an automorphism")
    pset = set(perms)
    ident = tuple(range(A.n))
    if ident not in pset:
        raise NotAnAutomorphismGroup("action does not contain the identity")
    for p in perms:
        for q in perms:
            if tuple(p[q[i]] for i in range(A.n)) not in pset:
                raise NotAnAutomorphismGroup("action is not closed under composition")
    seen = 0
    classes = []
    for a in range(A.n):
        if (seen >> a) & 1:
            continue
        orb = mask_of(p[a] for p in perms)
        classes.append(orb)
        seen |= orb
    return _quotient_by_classes(A, classes)


# ---------------------------------------------------------------------------
# Lattices


def lattice_mosaic(labels: Sequence[str], meet: Sequence[Sequence[int]]) -> Hypermagma:
    """Nakano's hyperoperation a*b = {c | a^c = b^c = a^b} on a
    meet-semilattice with top; always a commutative mosaic."""
    labels = tuple(str(l) for l in labels)
    n = len(labels)
    m = [list(r) for r in meet]
    for a in range(n):
        if m[a][a] != a:
            raise NotASemilattice("meet not idempotent")
        for b in range(n):
            if m[a][b] != m[b][a]:
                raise NotASemilattice("meet not commutative")
            for c in range(n):
                if m[m[a][b]][c] != m[a][m[b][c]]:
                    raise NotASemilattice("meet not associative")
    top = None
    for t in range(n):
        if all(m[t][x] == x for x in range(n)):
            top = t
            break
    if top is None:
        raise NotASemilattice("no top element")
    rows = [
        [
            mask_of(c for c in range(n) if m[a][c] == m[b][c] == m[a][b])
            for b in range(n)
        ]
        for a in range(n)
    ]
    M = from_masks(labels, rows)
    assert M.identity == top
    rep = analyze(M)
    assert rep.is_mosaic and rep.commutative
    return M


def lattice_join_table(meet: Sequence[Sequence[int]]) -> list[list[int]] | None:
    """Join table from a meet table via least upper bounds, or None."""
    n = len(meet)
    le = [[meet[a][b] == a for b in range(n)] for a in range(n)]
    join = [[0] * n for _ in range(n)]
    for a in range(n):
        for b in range(n):
            ubs = [c for c in range(n) if le[a][c] and le[b][c]]
            least = [c for c in ubs if all(le[c][d] for d in ubs)]
            if len(least) != 1:
                return None
            join[a][b] = least[0]
    return join


def is_modular_lattice(meet: Sequence[Sequence[int]]) -> bool:
    n = len(meet)
    join = lattice_join_table(meet)
    assert join is not None, "not a lattice"
    le = [[meet[a][b] == a for b in range(n)] for a in range(n)]
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if le[a][c] and join[a][meet[b][c]] != meet[join[a][b]][c]:
                    return False
    return True


def enumerate_lattices(n: int) -> list[list[list[int]]]:
    """All bounded lattices on n elements up to isomorphism, as meet tables.

    Element 0 is the bottom and n-1 the top; only the order on the middle
    n-2 elements varies, so the scan is tiny for n <= 6.
    """
    if n <= 0:
        return []
    if n == 1:
        return [[[0]]]
    mid = list(range(1, n - 1))
    pairs = [(i, j) for i in mid for j in mid if i < j]
    results: list[list[list[int]]] = []
    seen: set[tuple] = set()
    for bitsel in range(1 << len(pairs)):
        le = [[False] * n for _ in range(n)]
        for i in range(n):
            le[i][i] = True
            le[0][i] = True
            le[i][n - 1] = True
        ok = True
        for p, (i, j) in enumerate(pairs):
            if (bitsel >> p) & 1:
                le[i][j] = True
        # transitivity (middle chains only, length limited by n)
        for _ in range(n):
            changed = False
            for a in mid:
                for b in mid:
                    if le[a][b] and a != b:
                        for c in mid:
                            if le[b][c] and not le[a][c]:
                                le[a][c] = True
                                changed = True
            if not changed:
                break
        for a in mid:
            for b in mid:
                if a != b and le[a][b] and le[b][a]:
                    ok = False
        if not ok:
            continue
        meet = [[0] * n for _ in range(n)]
        is_lattice = True
        for a in range(n):
            for b in range(n):
                lbs = [c for c in range(n) if le[c][a] and le[c][b]]
                greatest = [c for c in lbs if all(le[d][c] for d in lbs)]
                if len(greatest) != 1:
                    is_lattice = False
                    break
                meet[a][b] = greatest[0]
            if not is_lattice:
                break
        if not is_lattice or lattice_join_table(meet) is None:
            continue
        canon = min(
            tuple(
                tuple(_apply_perm_meet(meet, perm, n))
            )
            for perm in _mid_perms(n)
        )
        if canon in seen:
            continue
        seen.add(canon)
        results.append(meet)
    return results


def _mid_perms(n: int):
    mid = list(range(1, n - 1))
    for p in itertools.permutations(mid):
        full = list(range(n))
        for old, new in zip(mid, p):
            full[old] = new
        yield full


def _apply_perm_meet(meet, perm, n):
    out = [[0] * n for _ in range(n)]
    for a in range(n):
        for b in range(n):
            out[perm[a]][perm[b]] = perm[meet[a][b]]
    return tuple(tuple(r) for r in out)


# ---------------------------------------------------------------------------
# Rings and multirings


@dataclass(frozen=True)
class FiniteRing:
    labels: tuple[str, ...]
    add: tuple[tuple[int, ...], ...]
    mul: tuple[tuple[int, ...], ...]
    zero: int
    one: int

    @property
    def n(self) -> int:
        return len(self.labels)

    def index(self, label: str) -> int:
        return self.labels.index(label)

    def units(self) -> int:
        out = 0
        for a in range(self.n):
            if any(
                self.mul[a][b] == self.one and self.mul[b][a] == self.one
                for b in range(self.n)
            ):
                out |= 1 << a
        return out


def make_finite_ring(
    labels: Sequence[str], add: Sequence[Sequence[int]], mul: Sequence[Sequence[int]]
) -> FiniteRing:
    G = make_finite_group(labels, add)
    if any(add[a][b] != add[b][a] for a in range(G.n) for b in range(G.n)):
        raise NotMultiring("addition must be abelian")
    n = G.n
    one = None
    for cand in range(n):
        if all(mul[cand][x] == x == mul[x][cand] for x in range(n)):
            one = cand
            break
    if one is None:
        raise NotMultiring("no multiplicative identity")
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if mul[mul[a][b]][c] != mul[a][mul[b][c]]:
                    raise NotMultiring("multiplication not associative")
                if mul[a][add[b][c]] != add[mul[a][b]][mul[a][c]]:
                    raise NotMultiring("left distributivity fails")
                if mul[add[b][c]][a] != add[mul[b][a]][mul[c][a]]:
                    raise NotMultiring("right distributivity fails")
    return FiniteRing(
        tuple(str(l) for l in labels),
        tuple(tuple(r) for r in add),
        tuple(tuple(r) for r in mul),
        G.identity,
        one,
    )


def zmod_ring(n: int) -> FiniteRing:
    labels = [str(i) for i in range(n)]
    add = [[(i + j) % n for j in range(n)] for i in range(n)]
    mul = [[(i * j) % n for j in range(n)] for i in range(n)]
    return make_finite_ring(labels, add, mul)


def _poly_field(p: int, reduce_sq: tuple[int, int]) -> FiniteRing:
    """GF(p^2) as Z_p[w] with w^2 = reduce_sq[0] + reduce_sq[1] w."""
    els = [(a, b) for a in range(p) for b in range(p)]

    def lbl(e):
        a, b = e
        if b == 0:
            return str(a)
        w = "i" if reduce_sq == (p - 1, 0) else "w"
        part = w if b == 1 else f"{b}{w}"
        return part if a == 0 else f"{a}+{part}"

    def add(e, f):
        return ((e[0] + f[0]) % p, (e[1] + f[1]) % p)

    def mul(e, f):
        a, b = e
        c, d = f
        # (a + bw)(c + dw) = ac + (ad + bc) w + bd w^2
        r0, r1 = reduce_sq
        return ((a * c + b * d * r0) % p, (a * d + b * c + b * d * r1) % p)

    index = {e: i for i, e in enumerate(els)}
    labels = [lbl(e) for e in els]
    addt = [[index[add(e, f)] for f in els] for e in els]
    mult = [[index[mul(e, f)] for f in els] for e in els]
    return make_finite_ring(labels, addt, mult)


def make_gf9() -> FiniteRing:
    """The nine-element field as Z_3[i] with i^2 = -1."""
    return _poly_field(3, (2, 0))


def make_gf4() -> FiniteRing:
    """The four-element field as Z_2[w] with w^2 = 1 + w."""
    return _poly_field(2, (1, 1))


def multiplicative_generator(R: FiniteRing) -> int:
    """Least-index generator of the unit group of a finite field."""
    units = list(iter_bits(R.units()))
    target = len(units)
    for a in units:
        x = a
        order = 1
        while x != R.one:
            x = R.mul[x][a]
            order += 1
        if order == target:
            return a
    raise NotMultiring("no multiplicative generator")


@dataclass(frozen=True)
class Multiring:
    """Canonical hypergroup plus a monoid with subdistributive multiplication."""

    additive: Hypermagma
    mul: tuple[tuple[int, ...], ...]
    one: int
    multiring: bool
    hyperring: bool


def check_multiring(additive: Hypermagma, mul: Sequence[Sequence[int]], one: int) -> dict:
    rep = analyze(additive)
    if rep.classification not in ("CanonicalHypergroup", "AbelianGroup"):
        raise AdditiveNotCanonical(
            f"additive part classifies as {rep.classification}"
        )
    zero = additive.identity
    n = additive.n
    if any(mul[zero][x] != zero or mul[x][zero] != zero for x in range(n)):
        raise ZeroNotAbsorbing("0 * R = 0 = R * 0 fails")
    if any(mul[one][x] != x or mul[x][one] != x for x in range(n)):
        raise NotMultiring("1 is not a multiplicative identity")
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if mul[mul[a][b]][c] != mul[a][mul[b][c]]:
                    raise NotMultiring("multiplication not associative")
    sub = True
    strict = True
    for a in range(n):
        for b in range(n):
            for c in range(n):
                lhs = mask_of(mul[a][t] for t in iter_bits(additive.table[b][c]))
                rhs = additive.table[mul[a][b]][mul[a][c]]
                if lhs & ~rhs:
                    sub = False
                if lhs != rhs:
                    strict = False
                lhs = mask_of(mul[t][a] for t in iter_bits(additive.table[b][c]))
                rhs = additive.table[mul[b][a]][mul[c][a]]
                if lhs & ~rhs:
                    sub = False
                if lhs != rhs:
                    strict = False
    return {"multiring": sub, "hyperring": sub and strict}


def make_multiring(additive: Hypermagma, mul: Sequence[Sequence[int]], one: int) -> Multiring:
    flags = check_multiring(additive, mul, one)
    return Multiring(
        additive,
        tuple(tuple(r) for r in mul),
        one,
        flags["multiring"],
        flags["hyperring"],
    )


def krasner_quotient(R: FiniteRing, G: int | Iterable[str]) -> Multiring:
    """Quotient multiring R/G by a subgroup of the unit group."""
    if not isinstance(G, int):
        G = mask_of(R.index(l) for l in G)
    units = R.units()
    if G & ~units or not (G >> R.one) & 1:
        raise NotUnitSubgroup("G must be a subgroup of the unit group")
    for a in iter_bits(G):
        inv = [b for b in iter_bits(units) if R.mul[a][b] == R.one]
        if not inv or not (G >> inv[0]) & 1:
            raise NotUnitSubgroup("G not closed under inversion")
        for b in iter_bits(G):
            if not (G >> R.mul[a][b]) & 1:
                raise NotUnitSubgroup("G not closed under multiplication")
    seen = 0
    classes = []
    for a in range(R.n):
        if (seen >> a) & 1:
            continue
        orb = mask_of(R.mul[a][g] for g in iter_bits(G))
        classes.append(orb)
        seen |= orb
    cls_of = [None] * R.n
    for i, c in enumerate(classes):
        for x in iter_bits(c):
            cls_of[x] = i
    labels = [R.labels[next(iter_bits(c))] for c in classes]
    k = len(classes)
    addt = [[0] * k for _ in range(k)]
    for i in range(k):
        for j in range(k):
            sums = 0
            for a in iter_bits(classes[i]):
                for b in iter_bits(classes[j]):
                    sums |= 1 << R.add[a][b]
            addt[i][j] = mask_of(cls_of[c] for c in iter_bits(sums))
    mult = [[0] * k for _ in range(k)]
    for i in range(k):
        for j in range(k):
            prods = {cls_of[R.mul[a][b]] for a in iter_bits(classes[i]) for b in iter_bits(classes[j])}
            if len(prods) != 1:
                raise NotUnitSubgroup("multiplication not well-defined on classes")
            mult[i][j] = prods.pop()
    additive = from_masks(labels, addt)
    return make_multiring(additive, mult, cls_of[R.one])


def krasner() -> Hypermagma:
    """Additive hypergroup of the Krasner hyperfield {0, 1}, 1+1 = {0,1}."""
    return from_masks(("0", "1"), ((0b01, 0b10), (0b10, 0b11)))


def krasner_multiring() -> Multiring:
    return make_multiring(krasner(), ((0, 0), (0, 1)), 1)


def gf9_quotient() -> Multiring:
    R = make_gf9()
    minus_one = R.add[R.one].index(R.zero)
    G = (1 << R.one) | (1 << minus_one)
    return krasner_quotient(R, G)


def gf9_frobenius(H: Hypermagma | None = None) -> Morphism:
    """Frobenius-induced automorphism on the gf9 quotient hypergroup."""
    R = make_gf9()
    Q = gf9_quotient() if H is None else None
    target = Q.additive if H is None else H
    minus_one = R.add[R.one].index(R.zero)
    G = (1 << R.one) | (1 << minus_one)
    classes = []
    seen = 0
    for a in range(R.n):
        if (seen >> a) & 1:
            continue
        orb = mask_of(R.mul[a][g] for g in iter_bits(G))
        classes.append(orb)
        seen |= orb
    cls_of = [None] * R.n
    for i, c in enumerate(classes):
        for x in iter_bits(c):
            cls_of[x] = i
    cube = [R.mul[R.mul[x][x]][x] for x in range(R.n)]
    fmap = tuple(cls_of[cube[next(iter_bits(classes[i]))]] for i in range(len(classes)))
    return Morphism(target, target, fmap)


# ---------------------------------------------------------------------------
# Enumeration of canonical hypergroups up to isomorphism


def _involutions(k: int) -> list[tuple[int, ...]]:
    """Involutions of {0..k-1} as canonical representatives per cycle type:
    (0 1)(2 3)... with the tail fixed."""
    out = []
    for swaps in range(k // 2 + 1):
        sigma = list(range(k))
        for s in range(swaps):
            sigma[2 * s], sigma[2 * s + 1] = 2 * s + 1, 2 * s
        out.append(tuple(sigma))
    return out


def _triple_orbits(nz: int, sigma: Sequence[int]) -> list[list[tuple[int, int, int]]]:
    """Orbits of nonzero triples under commutativity and reversibility moves."""
    seen = set()
    orbits = []
    for t in itertools.product(range(nz), repeat=3):
        if t in seen:
            continue
        stack = [t]
        orb = set()
        while stack:
            cur = stack.pop()
            if cur in orb:
                continue
            orb.add(cur)
            x, y, z = cur
            stack.append((y, x, z))
            stack.append((z, sigma[y], x))
        orbits.append(sorted(orb))
        seen |= orb
    return orbits


def _assoc_ok_flat(tab: list[int], n: int) -> bool:
    """Associativity over a flat mask table with early exit.

    Triples with a zero coordinate hold automatically (0 is scalar), and by
    commutativity the (i,j,k) condition equals (k,j,i), so only nonzero
    triples with i <= k are scanned.
    """
    for i in range(1, n):
        ri = i * n
        for j in range(1, n):
            ij = tab[ri + j]
            rj = j * n
            for k in range(i, n):
                left = 0
                m = ij
                while m:
                    low = m & -m
                    left |= tab[(low.bit_length() - 1) * n + k]
                    m ^= low
                right = 0
                m = tab[rj + k]
                while m:
                    low = m & -m
                    right |= tab[ri + low.bit_length() - 1]
                    m ^= low
                if left != right:
                    return False
    return True


def _canonical_signature(M: Hypermagma) -> tuple:
    """Iso-invariant key: sorted element invariants plus the least serialized
    table over relabelings that keep 0 fixed and respect invariant classes."""
    n = M.n
    tbl = M.table

    def esig(x: int) -> tuple:
        return (
            tuple(
                sorted(
                    (
                        tbl[x][y].bit_count(),
                        (tbl[x][y] >> x) & 1,
                        (tbl[x][y] >> y) & 1,
                        (tbl[x][y] >> 0) & 1,
                    )
                    for y in range(n)
                )
            ),
            tbl[x][x].bit_count(),
        )

    classes: dict[tuple, list[int]] = {}
    for x in range(1, n):
        classes.setdefault(esig(x), []).append(x)
    keys = sorted(classes)
    blocks = [tuple(classes[kk]) for kk in keys]
    best = None
    for arrangement in itertools.product(*(itertools.permutations(b) for b in blocks)):
        seq = [0]
        for block in arrangement:
            seq.extend(block)
        pos = [0] * n
        for newp, old in enumerate(seq):
            pos[old] = newp
        cur = []
        for a in seq:
            row_a = tbl[a]
            for b in seq:
                m = row_a[b]
                mm = 0
                while m:
                    low = m & -m
                    mm |= 1 << pos[low.bit_length() - 1]
                    m ^= low
                cur.append(mm)
        cur_t = tuple(cur)
        if best is None or cur_t < best:
            best = cur_t
    return (tuple(keys), best)


def enumerate_reversible_tables(
    n: int,
    require_total: bool = True,
    require_assoc: bool = True,
    forced_out: Sequence[tuple[int, int, int]] = (),
    forced_pair_subset: dict | None = None,
    sigma_filter=None,
    cap: int | None = None,
):
    """Yield commutative unital reversible tables on n elements (0 is the
    unit), optionally filtered to total and associative ones.

    The free choices are orbits of nonzero triples under the commutativity
    and reversibility moves, so every emitted table is reversible by
    construction.  `forced_out` lists nonzero triples (x-1, y-1, z-1) that
    must not hold; `forced_pair_subset` maps a nonzero pair (x-1, y-1) to a
    mask of allowed nonzero sum members.  Iterates over one involution per
    cycle type (every table is isomorphic to one with a canonical
    involution).
    """
    from .hom import _Budget

    budget = _Budget(cap)
    nz = n - 1
    labels = [str(v) for v in range(n)]
    for sigma in _involutions(nz):
        if sigma_filter is not None and not sigma_filter(sigma):
            continue
        orbits = _triple_orbits(nz, sigma)
        banned = set(forced_out)
        orb_banned = []
        for orb in orbits:
            bad = any(t in banned for t in orb)
            if not bad and forced_pair_subset:
                for (x, y, z) in orb:
                    allowed = forced_pair_subset.get((x, y))
                    if allowed is not None and not (allowed >> z) & 1:
                        bad = True
                        break
            orb_banned.append(bad)

        # coverage bitmask per orbit over the pairs whose entry must be hit
        pairs_needing = [
            (x, y) for x in range(nz) for y in range(nz) if sigma[x] != y
        ]
        pair_idx = {p: i for i, p in enumerate(pairs_needing)}
        full_cover = (1 << len(pairs_needing)) - 1
        cover = []
        for orb in orbits:
            c = 0
            for (x, y, _z) in orb:
                pi = pair_idx.get((x, y))
                if pi is not None:
                    c |= 1 << pi
            cover.append(c)
        k = len(orbits)
        suffix = [0] * (k + 1)
        for i in range(k - 1, -1, -1):
            suffix[i] = suffix[i + 1] | (0 if orb_banned[i] else cover[i])

        # flat table maintained incrementally; orbits own disjoint bits
        tab = [0] * (n * n)
        for x in range(n):
            tab[x] |= 1 << x
            tab[x * n] |= 1 << x
        for x in range(1, n):
            tab[x * n + sigma[x - 1] + 1] |= 1
        deltas = []
        for orb in orbits:
            d: dict[int, int] = {}
            for (x, y, z) in orb:
                j = (x + 1) * n + (y + 1)
                d[j] = d.get(j, 0) | 1 << (z + 1)
            deltas.append(tuple(d.items()))

        def rec(i: int, got: int):
            budget.spend()
            if require_total and (got | suffix[i]) != full_cover:
                return
            if i == k:
                if require_assoc and not _assoc_ok_flat(tab, n):
                    return
                rows = [tuple(tab[r * n : (r + 1) * n]) for r in range(n)]
                yield from_masks(labels, rows)
                return
            if not orb_banned[i]:
                for (j, m) in deltas[i]:
                    tab[j] |= m
                yield from rec(i + 1, got | cover[i])
                for (j, m) in deltas[i]:
                    tab[j] ^= m
            yield from rec(i + 1, got)

        yield from rec(0, 0)


@lru_cache(maxsize=None)
def enumerate_unital_hypermagmas(n: int) -> tuple[Hypermagma, ...]:
    """Every unital hypermagma on n elements up to isomorphism, identity
    first.  Raw scan over the free table entries; usable for n <= 3."""
    if n == 0:
        return ()
    if n == 1:
        return (from_masks(("e",), ((1,),)),)
    assert n <= 3, "raw scan is exponential in (n-1)^2 entries"
    labels = tuple(["e"] + [str(i) for i in range(1, n)])
    k = n - 1
    seen = set()
    out = []
    nonunit = list(range(1, n))
    perms = list(itertools.permutations(nonunit))
    for combo in itertools.product(range(1 << n), repeat=k * k):
        rows = [[0] * n for _ in range(n)]
        for x in range(n):
            rows[0][x] = 1 << x
            rows[x][0] = 1 << x
        it = iter(combo)
        for i in nonunit:
            for j in nonunit:
                rows[i][j] = next(it)
        sig = None
        for p in perms:
            full = [0] + list(p)
            pos = [0] * n
            for newp, old in enumerate(full):
                pos[old] = newp
            cur = tuple(
                mask_of(pos[z] for z in iter_bits(rows[a][b]))
                for a in full
                for b in full
            )
            if sig is None or cur < sig:
                sig = cur
        if sig in seen:
            continue
        seen.add(sig)
        out.append(from_masks(labels, rows))
    return tuple(out)


@lru_cache(maxsize=None)
def _canonical_hypergroups_cached(n: int) -> tuple[Hypermagma, ...]:
    out = []
    seen = set()
    for M in enumerate_reversible_tables(n):
        sig = _canonical_signature(M)
        if sig in seen:
            continue
        seen.add(sig)
        out.append(M)
        assert analyze(M).classification in ("CanonicalHypergroup", "AbelianGroup")
    return tuple(out)


@lru_cache(maxsize=None)
def enumerate_small_mosaics(n: int) -> tuple[Hypermagma, ...]:
    """Every commutative mosaic on n elements up to isomorphism."""
    if n == 0:
        return ()
    if n == 1:
        return (from_masks(("0",), ((1,),)),)
    out = []
    seen = set()
    for M in enumerate_reversible_tables(n, require_total=False, require_assoc=False):
        sig = _canonical_signature(M)
        if sig not in seen:
            seen.add(sig)
            out.append(M)
    return tuple(out)


def enumerate_canonical_hypergroups(n: int, cap: int | None = None) -> list[Hypermagma]:
    """Canonical hypergroups on n elements, one per isomorphism class."""
    if n == 0:
        return []
    if n == 1:
        return [from_masks(("0",), ((1,),))]
    if cap is not None:
        out = []
        seen = set()
        for M in enumerate_reversible_tables(n, cap=cap):
            sig = _canonical_signature(M)
            if sig not in seen:
                seen.add(sig)
                out.append(M)
        return out
    return list(_canonical_hypergroups_cached(n))


# ---------------------------------------------------------------------------
# Refuters


@dataclass(frozen=True)
class Refutation:
    refuted: bool
    subject: str
    steps: tuple[str, ...]
    witness: tuple | None = None


def refute_coproduct_candidate(
    Gc: Hypermagma, i1: Morphism, i2: Morphism, battery: Sequence[Hypermagma] | None = None
) -> Refutation:
    """Replay the finite steps showing (Gc, i1, i2) is not a coproduct of
    Z2 with itself among canonical hypergroups."""
    steps = []
    rep = analyze(Gc)
    if rep.classification not in ("CanonicalHypergroup", "AbelianGroup"):
        return Refutation(True, "candidate", ("candidate is not a canonical hypergroup",))
    z2 = group_to_hypermagma(cyclic_group(2))
    K = krasner()
    can_z2_K = enumerate_morphisms(z2, K, Tag.CAN)
    steps.append(f"|Can(Z2,K)| = {len(can_z2_K)}")
    assert len(can_z2_K) == 2
    if battery is None:
        battery = [K, z2, Gc]
    for T in battery:
        homs = enumerate_morphisms(Gc, T, Tag.CMSC)
        legs = enumerate_morphisms(z2, T, Tag.CMSC)
        seen = {}
        for phi in homs:
            key = (
                tuple(phi.map[i1.map[x]] for x in range(2)),
                tuple(phi.map[i2.map[x]] for x in range(2)),
            )
            if key in seen:
                return Refutation(
                    True,
                    "candidate",
                    tuple(steps + [f"mediating morphism not unique for legs {key}"]),
                    witness=key,
                )
            seen[key] = phi
        for f1 in legs:
            for f2 in legs:
                if (f1.map, f2.map) not in seen:
                    return Refutation(
                        True,
                        "candidate",
                        tuple(
                            steps
                            + [
                                "no mediating morphism for legs "
                                f"({f1.map}, {f2.map}) into {'|'.join(T.labels)}"
                            ]
                        ),
                        witness=(f1.map, f2.map),
                    )
    return Refutation(False, "candidate", tuple(steps + ["battery passed"]))


def _gf9_classifier_targets(H: Hypermagma) -> tuple[int, int]:
    """Classes of 1 and of the square of the least multiplicative generator."""
    R = make_gf9()
    alpha = multiplicative_generator(R)
    alpha2 = R.mul[alpha][alpha]
    by_member = {}
    minus_one = R.add[R.one].index(R.zero)
    G = (1 << R.one) | (1 << minus_one)
    seen = 0
    cls = 0
    for a in range(R.n):
        if (seen >> a) & 1:
            continue
        orb = mask_of(R.mul[a][g] for g in iter_bits(G))
        for x in iter_bits(orb):
            by_member[x] = cls
        seen |= orb
        cls += 1
    return by_member[R.one], by_member[alpha2]


def refute_equalizer_candidate(E: Hypermagma, e: Morphism) -> Refutation:
    """Replay the proof that id/Frobenius on the gf9 quotient has no
    equalizer against a concrete candidate (E, e)."""
    H = gf9_quotient().additive
    F = gf9_frobenius(H)
    if e.cod != H:
        raise CandidateDoesNotEqualize("candidate does not land in the gf9 quotient")
    if any(F.map[e.map[x]] != e.map[x] for x in range(E.n)):
        raise CandidateDoesNotEqualize("candidate morphism does not equalize id and F")
    steps = []
    rep = analyze(E)
    if rep.classification not in ("CanonicalHypergroup", "AbelianGroup"):
        return Refutation(True, "candidate", ("not a canonical hypergroup (not a candidate)",))
    K = krasner()
    # the two K -> H morphisms from the proof, f(1) = [1] and g(1) = [a^2]
    one, alpha2 = _gf9_classifier_targets(H)
    steps.append(f"H carrier {list(H.labels)}")
    targets = []
    for target, name in ((one, "f"), (alpha2, "g")):
        cand = Morphism(K, H, (H.identity, target))
        assert all(F.map[cand.map[x]] == cand.map[x] for x in range(2))
        # a K -> E factor lands 1 at x with {0, x} inside x + x
        lifts = [
            x
            for x in range(E.n)
            if e.map[x] == target
            and (E.table[x][x] >> E.identity) & 1
            and (E.table[x][x] >> x) & 1
        ]
        if not lifts:
            return Refutation(
                True,
                "candidate",
                tuple(steps + [f"{name} does not factor through the candidate"]),
                witness=(name, target),
            )
        targets.append(lifts[0])
        steps.append(f"{name} factors via element {E.labels[lifts[0]]}")
    x, y = targets
    sums = E.table[x][y]
    if not sums:
        return Refutation(
            True,
            "candidate",
            tuple(steps + ["x + y is empty, so E is not total"]),
            witness=(x, y),
        )
    z = next(iter_bits(sums))
    image = e.map[z]
    fixed = F.map[image] == image
    steps.append(
        f"z = {E.labels[z]} in x+y maps to {H.labels[image]}, F-fixed: {fixed}"
    )
    if not fixed:
        return Refutation(True, "candidate", tuple(steps), witness=(x, y, z))
    return Refutation(False, "candidate", tuple(steps + ["replay found no violation"]))


# ---------------------------------------------------------------------------
# Empty-sum search


@dataclass(frozen=True)
class EmptySumOutcome:
    witness: tuple[Hypermagma, int, int] | None
    max_size: int
    steps: tuple[str, ...]

    @property
    def exhausted(self) -> bool:
        return self.witness is None


def empty_sum_search(max_size: int, cap: int | None = None) -> EmptySumOutcome:
    """Search canonical hypergroups |H| <= max_size for involutions x, y with
    no self-inverse element in x + y, i.e. f + g empty in Can(Z2, H).

    The self-inverse set S is {t | 0 in t+t} = fixed points of the inversion
    plus 0, so a witness needs two distinct nonzero fixed points and at least
    one non-fixed pair; involution types failing that are excluded outright.
    """
    steps = []
    for n in range(2, max_size + 1):
        nz = n - 1
        for swaps in range(nz // 2 + 1):
            fixed = nz - 2 * swaps
            if swaps == 0:
                steps.append(
                    f"n={n}, identity involution: every element is self-inverse, "
                    "any z in x+y lies in S; excluded"
                )
                continue
            if fixed < 2:
                steps.append(
                    f"n={n}, {swaps} swaps: fewer than two nonzero self-inverse "
                    "elements; excluded"
                )
                continue
            sigma = list(range(nz))
            for s in range(swaps):
                sigma[2 * s], sigma[2 * s + 1] = 2 * s + 1, 2 * s
            sigma = tuple(sigma)
            x, y = 2 * swaps, 2 * swaps + 1  # two least fixed points
            nonfixed_mask = mask_of(range(2 * swaps))
            found = None
            for M in enumerate_reversible_tables(
                n,
                require_total=True,
                require_assoc=True,
                forced_pair_subset={(x, y): nonfixed_mask},
                sigma_filter=lambda s, sigma=sigma: s == sigma,
                cap=cap,
            ):
                found = M
                break
            if found is not None:
                xe, ye = x + 1, y + 1
                assert _verify_empty_sum(found, xe, ye)
                steps.append(f"n={n}, {swaps} swaps: witness found")
                return EmptySumOutcome((found, xe, ye), max_size, tuple(steps))
            steps.append(f"n={n}, {swaps} swaps: exhausted, no witness")
    return EmptySumOutcome(None, max_size, tuple(steps))


def _verify_empty_sum(H: Hypermagma, x: int, y: int) -> bool:
    """Both routes: the representable description and the literal hom object."""
    zero = H.identity
    s_mask = mask_of(t for t in range(H.n) if (H.table[t][t] >> zero) & 1)
    route1 = H.table[x][y] != 0 and H.table[x][y] & s_mask == 0
    from .monoidal import hom_object

    z2 = group_to_hypermagma(cyclic_group(2))
    Hm = hom_object(z2, H, Tag.CMSC)
    fi = Hm.index(f"({H.labels[zero]},{H.labels[x]})")
    gi = Hm.index(f"({H.labels[zero]},{H.labels[y]})")
    route2 = Hm.table[fi][gi] == 0
    return route1 and route2
