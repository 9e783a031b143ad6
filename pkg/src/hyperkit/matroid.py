"""Finite closure spaces and matroids via intersection-closed flat families,
simplification, the matroid-to-mosaic functor, and projective-law checks.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Sequence

from .axioms import Tag, analyze
from .core import (
    Hypermagma,
    from_masks,
    iter_bits,
    mask_of,
    strict_sub_closure,
)
from .errors import (
    DuplicateLabel,
    ExchangeFails,
    FlatsNotIntersectionClosed,
    NotSimplePointed,
    SearchCapExceeded,
)
from .hom import enumerate_morphisms

FLATS_CAP = 14
CONVERT_CAP = 10


@dataclass(frozen=True)
class Matroid:
    """Ground labels plus the intersection-closed family of flats (masks).

    Ground sets are finite, so the finitary condition holds vacuously.
    """

    ground: tuple[str, ...]
    flats: tuple[int, ...]
    pointed: int | None = None

    @property
    def n(self) -> int:
        return len(self.ground)

    def index(self, label: str) -> int:
        return self.ground.index(label)

    def subset(self, labels: Iterable[str]) -> int:
        return mask_of(self.index(l) for l in labels)

    def closure(self, S: int | Iterable[str]) -> int:
        if not isinstance(S, int):
            S = self.subset(S)
        out = (1 << self.n) - 1
        for F in self.flats:
            if S & ~F == 0:
                out &= F
        return out

    def loops(self) -> int:
        return self.closure(0)

    def label_set(self, mask: int) -> tuple[str, ...]:
        return tuple(self.ground[i] for i in iter_bits(mask))


def _check_exchange(M: Matroid, spot_checks: int = 32) -> None:
    """Exchange over flat S (closures of arbitrary S reduce to flats), plus a
    seeded random spot check over arbitrary subsets."""
    n = M.n
    for S in M.flats:
        for x in range(n):
            if (S >> x) & 1:
                continue
            for y in range(n):
                if (S >> y) & 1 or y == x:
                    continue
                if (M.closure(S | (1 << y)) >> x) & 1:
                    if not (M.closure(S | (1 << x)) >> y) & 1:
                        raise ExchangeFails(
                            f"exchange fails at S={M.label_set(S)}, "
                            f"x={M.ground[x]}, y={M.ground[y]}"
                        )
    rng = random.Random(0xC105)
    for _ in range(spot_checks):
        S = rng.randrange(1 << n) if n else 0
        C = M.closure(S)
        for x in range(n):
            if (C >> x) & 1:
                continue
            for y in range(n):
                if (C >> y) & 1 or y == x:
                    continue
                if (M.closure(S | (1 << y)) >> x) & 1:
                    assert (M.closure(S | (1 << x)) >> y) & 1


def make_matroid(
    ground: Sequence[str],
    flats: Sequence[int | Iterable[str]] | None = None,
    rank=None,
    independent: Sequence[Iterable[str]] | None = None,
    pointed: str | None = None,
) -> Matroid:
    """Validated matroid from flats (primary), a rank oracle, or the list of
    independent sets (the latter two converted by exhaustive closure)."""
    ground = tuple(str(g) for g in ground)
    n = len(ground)
    if len(set(ground)) != n:
        raise DuplicateLabel(f"ground labels not distinct: {ground}")
    pos = {g: i for i, g in enumerate(ground)}
    if flats is not None:
        if n > FLATS_CAP:
            raise SearchCapExceeded(f"flats input capped at {FLATS_CAP} elements")
        fl = set()
        for F in flats:
            fl.add(F if isinstance(F, int) else mask_of(pos[x] for x in F))
        full = (1 << n) - 1
        if full not in fl:
            raise FlatsNotIntersectionClosed("the ground set must be a flat")
        for A in list(fl):
            for B in list(fl):
                if A & B not in fl:
                    raise FlatsNotIntersectionClosed(
                        f"intersection of flats {A:b} and {B:b} missing"
                    )
        flats_t = tuple(sorted(fl))
    else:
        if n > CONVERT_CAP:
            raise SearchCapExceeded(f"conversion input capped at {CONVERT_CAP} elements")
        if rank is None:
            assert independent is not None
            indep = {mask_of(pos[x] for x in I) for I in independent}

            def rank_fn(S: int) -> int:
                return max(
                    (I.bit_count() for I in indep if I & ~S == 0), default=0
                )

        else:
            def rank_fn(S: int) -> int:
                return rank(S)

        fl = set()
        for S in range(1 << n):
            r = rank_fn(S)
            C = mask_of(
                x for x in range(n) if rank_fn(S | (1 << x)) == r
            )
            fl.add(C)
        flats_t = tuple(sorted(fl))
    M = Matroid(ground, flats_t, pos[pointed] if pointed is not None else None)
    if M.pointed is not None and not (M.loops() >> M.pointed) & 1:
        raise NotSimplePointed("the distinguished point must be a loop")
    _check_exchange(M)
    return M


def is_simple(M: Matroid) -> bool:
    if M.pointed is None:
        if M.loops():
            return False
        return all(M.closure(1 << x) == 1 << x for x in range(M.n))
    zero = 1 << M.pointed
    if M.loops() != zero:
        return False
    return all(
        M.closure(1 << x) == (1 << x) | zero
        for x in range(M.n)
        if x != M.pointed
    )


def adjoin_point(M: Matroid, label: str = "0") -> Matroid:
    """Freely adjoin a distinguished loop."""
    assert label not in M.ground
    ground = (label,) + M.ground
    flats = tuple(sorted(1 | (F << 1) for F in M.flats))
    return Matroid(ground, flats, 0)


def simplify(M: Matroid, pointed: bool = False) -> tuple[Matroid, tuple[int, ...] | None]:
    """Simple (pointed) matroid on the atoms of the flat lattice.

    The second component is the unit map on ground indices (non-loops to
    their atom, loops to the new point), or None for the unpointed
    simplification of a loopy matroid, where no strong unit map exists.
    """
    loops = M.loops()
    atoms = sorted({M.closure(1 << x) for x in range(M.n) if not (loops >> x) & 1})
    labels = [M.ground[next(iter_bits(F & ~loops))] for F in atoms]
    if pointed:
        zl = M.ground[M.pointed] if M.pointed is not None else "0"
        labels = [zl + "'" if zl in labels else zl] + labels
        offset = 1
    else:
        offset = 0

    def project(F: int) -> int:
        m = mask_of(offset + i for i, A in enumerate(atoms) if not (A & ~loops & ~F))
        if pointed:
            m |= 1
        return m

    new_flats = sorted({project(F) for F in M.flats})
    out = Matroid(tuple(labels), tuple(new_flats), 0 if pointed else None)
    assert is_simple(out)
    atom_of = {}
    for i, A in enumerate(atoms):
        for x in iter_bits(A & ~loops):
            atom_of[x] = offset + i
    if pointed:
        unit = tuple(atom_of.get(x, 0) for x in range(M.n))
    elif not loops:
        unit = tuple(atom_of[x] for x in range(M.n))
    else:
        unit = None
    return out, unit


def is_strong_map(M: Matroid, N: Matroid, f: Sequence[int]) -> bool:
    """Preimage of every flat is a flat; pointed maps must preserve the loop."""
    if M.pointed is not None and N.pointed is not None:
        if f[M.pointed] != N.pointed:
            return False
    flset = set(M.flats)
    for F in N.flats:
        pre = mask_of(x for x in range(M.n) if (F >> f[x]) & 1)
        if pre not in flset:
            return False
    return True


def matroid_to_mosaic(M: Matroid) -> Hypermagma:
    """x + y = C(x,y) minus {x, y, 0} for distinct nonzero points, x + x =
    {x, 0}; a commutative mosaic with every element self-inverse."""
    if M.pointed is None or not is_simple(M):
        raise NotSimplePointed("the functor needs a pointed simple matroid")
    n = M.n
    zero = M.pointed
    rows = [[0] * n for _ in range(n)]
    for x in range(n):
        rows[zero][x] = 1 << x
        rows[x][zero] = 1 << x
    for x in range(n):
        if x == zero:
            continue
        rows[x][x] = (1 << x) | (1 << zero)
        for y in range(n):
            if y in (x, zero):
                continue
            C = M.closure((1 << x) | (1 << y))
            rows[x][y] = C & ~((1 << x) | (1 << y) | (1 << zero))
    H = from_masks(M.ground, rows)
    rep = analyze(H)
    assert rep.is_mosaic and rep.commutative
    assert all(H.inverse[x] == x for x in range(n))
    return H


def uniform_matroid(r: int, n: int) -> Matroid:
    """U_{r,n}: every set of fewer than r elements is closed."""
    ground = [chr(ord("a") + i) for i in range(n)]
    flats = [S for S in range(1 << n) if S.bit_count() < r]
    flats.append((1 << n) - 1)
    return make_matroid(ground, flats=sorted(set(flats)))


FANO_LINES = ((1, 2, 4), (2, 3, 5), (3, 4, 6), (4, 5, 7), (5, 6, 1), (6, 7, 2), (7, 1, 3))


def fano_matroid() -> Matroid:
    ground = [str(i) for i in range(1, 8)]
    flats = {0, (1 << 7) - 1}
    for i in range(7):
        flats.add(1 << i)
    for line in FANO_LINES:
        flats.add(mask_of(p - 1 for p in line))
    return make_matroid(ground, flats=sorted(flats))


def graphic_matroid(edges: Sequence[tuple[str, str]], labels: Sequence[str] | None = None) -> Matroid:
    """Cycle matroid of a multigraph, built through its rank oracle."""
    verts = sorted({v for e in edges for v in e})
    vidx = {v: i for i, v in enumerate(verts)}
    if labels is None:
        labels = []
        for u, v in edges:
            base = f"{u}{v}"
            while base in labels:
                base += "'"
            labels.append(base)

    def rank(S: int) -> int:
        parent = list(range(len(verts)))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        r = 0
        for i in iter_bits(S):
            u, v = edges[i]
            ru, rv = find(vidx[u]), find(vidx[v])
            if ru != rv:
                parent[ru] = rv
                r += 1
        return r

    return make_matroid(labels, rank=rank)


def projective_law_holds(M: Matroid) -> tuple[bool, tuple | None]:
    """C(S u T) = union of C(x,y) over x in C(S), y in C(T).

    Quantified over flat pairs only: C(S u T) = C(C(S) u C(T)) reduces the
    general case.  All flats of a pointed matroid are nonempty.
    """
    for S in M.flats:
        for T in M.flats:
            target = M.closure(S | T)
            union = 0
            for x in iter_bits(S):
                for y in iter_bits(T):
                    union |= M.closure((1 << x) | (1 << y))
            if union != target:
                return False, (S, T)
    return True, None


def projective_checks(M: Matroid, others: Sequence[Matroid] = ()) -> dict:
    """Projective law, closure = generated strict submosaic, and fullness of
    the mosaic functor against each supplied projective matroid."""
    if M.pointed is None or not is_simple(M):
        raise NotSimplePointed("projective checks need a pointed simple matroid")
    law, witness = projective_law_holds(M)
    H = matroid_to_mosaic(M)
    closure_eq = True
    if M.n <= 10:
        subsets = range(1 << M.n)
    else:
        rng = random.Random(0xA11)
        subsets = [rng.randrange(1 << M.n) for _ in range(256)]
    for S in subsets:
        if M.closure(S) != strict_sub_closure(H, S):
            closure_eq = False
            break
    fullness = True
    for N in others:
        HN = matroid_to_mosaic(N)
        for f in enumerate_morphisms(H, HN, Tag.CMSC):
            if not is_strong_map(M, N, f.map):
                fullness = False
                break
    return {
        "projective_law": law,
        "projective_witness": witness,
        "closure_eq_generated": closure_eq,
        "fullness": fullness,
    }
