"""Finite hypermagmas over bit-mask subsets.

A carrier is an ordered tuple of distinct labels; a subset of the carrier is
an int bit mask over carrier indices.  The hyperoperation is stored as an
n x n table of masks.  Values are immutable and hashable, so they can be
cached and shared freely.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import (
    DimensionMismatch,
    DuplicateLabel,
    IdentityAxiomViolated,
    IdentityMissing,
)

Subset = int


def iter_bits(mask: int) -> Iterator[int]:
    """Indices of the set bits, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


def _detect_identity(table: Sequence[Sequence[int]]) -> int | None:
    n = len(table)
    found = None
    for e in range(n):
        if all(table[e][x] == 1 << x and table[x][e] == 1 << x for x in range(n)):
            # a scalar identity is unique: e = e*e' = e'
            assert found is None
            found = e
    return found


def _detect_inverse(table: Sequence[Sequence[int]], e: int | None) -> tuple[int, ...] | None:
    if e is None:
        return None
    n = len(table)
    ebit = 1 << e
    inv = []
    for x in range(n):
        cands = [y for y in range(n) if table[x][y] & ebit and table[y][x] & ebit]
        if len(cands) != 1:
            return None
        inv.append(cands[0])
    # uniqueness for every element forces an involution fixing e
    assert all(inv[inv[x]] == x for x in range(n)) and inv[e] == e
    return tuple(inv)


@dataclass(frozen=True)
class Hypermagma:
    """Carrier labels, n x n table of subset masks, optional identity/inverse."""

    labels: tuple[str, ...]
    table: tuple[tuple[int, ...], ...]
    identity: int | None = None
    inverse: tuple[int, ...] | None = None

    @property
    def n(self) -> int:
        return len(self.labels)

    def index(self, label: str) -> int:
        return self.labels.index(label)

    def subset(self, labels: Iterable[str]) -> int:
        return mask_of(self.index(l) for l in labels)

    def label_set(self, mask: int) -> tuple[str, ...]:
        return tuple(self.labels[i] for i in iter_bits(mask))

    def prod(self, i: int, j: int) -> int:
        return self.table[i][j]

    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def is_unital(self) -> bool:
        return self.identity is not None

    def __repr__(self) -> str:
        return f"Hypermagma({list(self.labels)!r}, n={self.n})"


def from_masks(
    labels: Sequence[str],
    table: Sequence[Sequence[int]],
    identity: int | None = None,
) -> Hypermagma:
    """Build and validate a hypermagma whose table entries are masks.

    The identity, when present, is always auto-detected; passing `identity`
    asserts that the given element really is one.
    """
    labels = tuple(str(l) for l in labels)
    n = len(labels)
    if len(set(labels)) != n:
        raise DuplicateLabel(f"carrier labels not distinct: {labels}")
    if len(table) != n or any(len(row) != n for row in table):
        raise DimensionMismatch(f"table is not {n}x{n}")
    full = (1 << n) - 1
    rows = []
    for row in table:
        for m in row:
            if m < 0 or m & ~full:
                raise DimensionMismatch(f"subset mask {m} out of range for n={n}")
        rows.append(tuple(int(m) for m in row))
    tbl = tuple(rows)
    e = _detect_identity(tbl)
    if identity is not None and e != identity:
        raise IdentityAxiomViolated(
            f"element {labels[identity]!r} is not a two-sided scalar identity"
        )
    return Hypermagma(labels, tbl, e, _detect_inverse(tbl, e))


def make_hypermagma(
    labels: Sequence[str],
    table: Sequence[Sequence[Iterable[str]]],
    identity: str | None = None,
) -> Hypermagma:
    """Constructor over label-level table entries (each entry a set of labels)."""
    labels = tuple(str(l) for l in labels)
    n = len(labels)
    if len(set(labels)) != n:
        raise DuplicateLabel(f"carrier labels not distinct: {labels}")
    if len(table) != n or any(len(row) != n for row in table):
        raise DimensionMismatch(f"table is not {n}x{n}")
    pos = {l: i for i, l in enumerate(labels)}
    rows = []
    for row in table:
        out = []
        for entry in row:
            m = 0
            for l in entry:
                if l not in pos:
                    raise DimensionMismatch(f"unknown element {l!r} in table entry")
                m |= 1 << pos[l]
            out.append(m)
        rows.append(out)
    e = pos[identity] if identity is not None else None
    return from_masks(labels, rows, e)


def product_of_subsets(M: Hypermagma, X: int, Y: int) -> int:
    """X * Y = union of x * y over x in X, y in Y; empty factors give empty."""
    out = 0
    tbl = M.table
    for i in iter_bits(X):
        row = tbl[i]
        for j in iter_bits(Y):
            out |= row[j]
    return out


def opposite(M: Hypermagma) -> Hypermagma:
    n = M.n
    rows = tuple(tuple(M.table[j][i] for j in range(n)) for i in range(n))
    return Hypermagma(M.labels, rows, M.identity, M.inverse)


def as_mask(M: Hypermagma, subset: int | Iterable[str]) -> int:
    if isinstance(subset, int):
        return subset
    return M.subset(subset)


def weak_sub(M: Hypermagma, L: int | Iterable[str], unital: bool = False) -> Hypermagma:
    """Weak subhypermagma on L with intersected products."""
    Lm = as_mask(M, L)
    if unital and (M.identity is None or not (Lm >> M.identity) & 1):
        raise IdentityMissing("unital weak sub requires the identity to lie in L")
    keep = list(iter_bits(Lm))
    reindex = {old: new for new, old in enumerate(keep)}
    labels = tuple(M.labels[i] for i in keep)
    rows = []
    for i in keep:
        rows.append([mask_of(reindex[z] for z in iter_bits(M.table[i][j] & Lm)) for j in keep])
    return from_masks(labels, rows)


def strict_sub_closure(M: Hypermagma, S: int | Iterable[str]) -> int:
    """Least subset containing S closed under products (and identity and
    inverses, whenever M carries them)."""
    K = as_mask(M, S)
    if M.identity is not None:
        K |= 1 << M.identity
    if M.inverse is not None:
        K |= mask_of(M.inverse[i] for i in iter_bits(K))
    while True:
        new = K | product_of_subsets(M, K, K)
        if M.inverse is not None:
            new |= mask_of(M.inverse[i] for i in iter_bits(new))
        if new == K:
            return K
        K = new


def is_strict_sub(M: Hypermagma, K: int) -> bool:
    return product_of_subsets(M, K, K) & ~K == 0


def is_absorptive(M: Hypermagma, K: int) -> bool:
    for x in range(M.n):
        if (K >> x) & 1:
            continue
        xb = 1 << x
        if (product_of_subsets(M, xb, K) | product_of_subsets(M, K, xb)) & K:
            return False
    return True


def absorptive_closure(M: Hypermagma, S: int | Iterable[str]) -> int:
    """Least set containing S that is both a strict sub and absorptive."""
    K = strict_sub_closure(M, as_mask(M, S))
    while True:
        added = 0
        for x in range(M.n):
            if (K >> x) & 1:
                continue
            xb = 1 << x
            if (product_of_subsets(M, xb, K) | product_of_subsets(M, K, xb)) & K:
                added |= xb
        if not added:
            return K
        K = strict_sub_closure(M, K | added)


@dataclass(frozen=True)
class Morphism:
    """A function between carriers, stored as an index array."""

    dom: Hypermagma
    cod: Hypermagma
    map: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.map) != self.dom.n:
            raise DimensionMismatch("map length does not match the domain carrier")
        if any(v < 0 or v >= self.cod.n for v in self.map):
            raise DimensionMismatch("map image index out of range")

    def __call__(self, i: int) -> int:
        return self.map[i]

    def image_mask(self, mask: int) -> int:
        return mask_of(self.map[i] for i in iter_bits(mask))

    def preimage_mask(self, mask: int) -> int:
        return mask_of(i for i, v in enumerate(self.map) if (mask >> v) & 1)

    def image(self) -> int:
        return mask_of(self.map)

    def __repr__(self) -> str:
        pairs = ", ".join(
            f"{a}->{self.cod.labels[v]}" for a, v in zip(self.dom.labels, self.map)
        )
        return f"Morphism({pairs})"


def identity_morphism(M: Hypermagma) -> Morphism:
    return Morphism(M, M, tuple(range(M.n)))


def compose(g: Morphism, f: Morphism) -> Morphism:
    """g after f."""
    if f.cod != g.dom:
        raise DimensionMismatch("composition mismatch: cod(f) != dom(g)")
    return Morphism(f.dom, g.cod, tuple(g.map[v] for v in f.map))


def _signature(M: Hypermagma, x: int) -> tuple:
    row = tuple(sorted(M.table[x][y].bit_count() for y in range(M.n)))
    col = tuple(sorted(M.table[y][x].bit_count() for y in range(M.n)))
    return (
        M.identity == x,
        (M.table[x][x] >> x) & 1,
        M.table[x][x].bit_count(),
        row,
        col,
    )


def find_isomorphism(M: Hypermagma, N: Hypermagma) -> Morphism | None:
    """First strict bijective match in lexicographic backtracking order."""
    n = M.n
    if n != N.n:
        return None
    if (M.identity is None) != (N.identity is None):
        return None
    sigM = [_signature(M, x) for x in range(n)]
    sigN = [_signature(N, x) for x in range(n)]
    if sorted(sigM) != sorted(sigN):
        return None
    assigned = [-1] * n
    used = [False] * n

    def consistent(k: int) -> bool:
        fk = assigned[k]
        for i in range(k + 1):
            for (a, b) in ((i, k), (k, i)):
                src = M.table[a][b]
                tgt = N.table[assigned[a]][assigned[b]]
                if src.bit_count() != tgt.bit_count():
                    return False
                for z in iter_bits(src):
                    if z <= k and not (tgt >> assigned[z]) & 1:
                        return False
        # the newly assigned element may appear inside earlier products
        for i in range(k):
            for j in range(k):
                if (M.table[i][j] >> k) & 1:
                    if not (N.table[assigned[i]][assigned[j]] >> fk) & 1:
                        return False
        return True

    def rec(k: int) -> bool:
        if k == n:
            return True
        for cand in range(n):
            if used[cand] or sigM[k] != sigN[cand]:
                continue
            if M.identity == k and N.identity != cand:
                continue
            assigned[k] = cand
            used[cand] = True
            if consistent(k) and rec(k + 1):
                return True
            used[cand] = False
            assigned[k] = -1
        return False

    if rec(0):
        return Morphism(M, N, tuple(assigned))
    return None


def relabel(M: Hypermagma, labels: Sequence[str]) -> Hypermagma:
    """Same structure with new labels in carrier order."""
    if len(labels) != M.n:
        raise DimensionMismatch("label count mismatch")
    return from_masks(labels, M.table)


def permute(M: Hypermagma, perm: Sequence[int]) -> Hypermagma:
    """Transport the structure along a carrier permutation (new[perm[i]] = old[i])."""
    n = M.n
    inv = [0] * n
    for i, p in enumerate(perm):
        inv[p] = i
    labels = tuple(M.labels[inv[i]] for i in range(n))
    rows = []
    for i in range(n):
        rows.append(
            [mask_of(perm[z] for z in iter_bits(M.table[inv[i]][inv[j]])) for j in range(n)]
        )
    return from_masks(labels, rows)


def fresh_label(base: str, used: Iterable[str]) -> str:
    used = set(used)
    lbl = base
    while lbl in used:
        lbl += "'"
    return lbl


def terminal() -> Hypermagma:
    return from_masks(("e",), ((1,),))


def initial() -> Hypermagma:
    return from_masks((), ())


def cartesian_labels(parts: Sequence[Sequence[str]]) -> list[str]:
    return ["|".join(p) for p in itertools.product(*parts)]
