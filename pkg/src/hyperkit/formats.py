"""Object files: a structured JSON notation for hypermagmas, groups, rings,
matroids, lattices and morphisms.

Serialization is canonical: constructing the same object twice yields
byte-identical files.  Missing table entries are illegal; empty products are
explicit empty arrays.
"""
from __future__ import annotations

import json
from typing import Any

from .core import Hypermagma, Morphism, from_masks, iter_bits, mask_of
from .errors import FormatError
from .matroid import Matroid, make_matroid
from .zoo import (
    FiniteGroup,
    FiniteRing,
    make_finite_group,
    make_finite_ring,
)


def hypermagma_to_dict(M: Hypermagma) -> dict:
    d: dict[str, Any] = {"kind": "hypermagma", "carrier": list(M.labels)}
    if M.identity is not None:
        d["identity"] = M.labels[M.identity]
    d["table"] = [
        [[M.labels[z] for z in iter_bits(M.table[i][j])] for j in range(M.n)]
        for i in range(M.n)
    ]
    return d


def morphism_to_dict(f: Morphism) -> dict:
    return {
        "kind": "morphism",
        "dom": hypermagma_to_dict(f.dom),
        "cod": hypermagma_to_dict(f.cod),
        "map": {a: f.cod.labels[v] for a, v in zip(f.dom.labels, f.map)},
    }


def group_to_dict(G: FiniteGroup) -> dict:
    return {
        "kind": "group",
        "carrier": list(G.labels),
        "table": [[G.labels[G.table[i][j]] for j in range(G.n)] for i in range(G.n)],
    }


def ring_to_dict(R: FiniteRing) -> dict:
    return {
        "kind": "ring",
        "carrier": list(R.labels),
        "add": [[R.labels[R.add[i][j]] for j in range(R.n)] for i in range(R.n)],
        "mul": [[R.labels[R.mul[i][j]] for j in range(R.n)] for i in range(R.n)],
    }


def matroid_to_dict(M: Matroid) -> dict:
    d: dict[str, Any] = {
        "kind": "matroid",
        "ground": list(M.ground),
        "flats": [list(M.label_set(F)) for F in M.flats],
    }
    if M.pointed is not None:
        d["pointed"] = M.ground[M.pointed]
    return d


def dumps(obj: dict) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _need(d: dict, key: str):
    if key not in d:
        raise FormatError(f"missing field {key!r}")
    return d[key]


def _parse_square(d: dict, key: str, carrier: list[str]):
    table = _need(d, key)
    n = len(carrier)
    if not isinstance(table, list) or len(table) != n:
        raise FormatError(f"{key} must be a {n}x{n} array")
    for row in table:
        if not isinstance(row, list) or len(row) != n:
            raise FormatError(f"{key} must be a {n}x{n} array")
    return table


def parse_hypermagma(d: dict) -> Hypermagma:
    carrier = _need(d, "carrier")
    table = _parse_square(d, "table", carrier)
    pos = {l: i for i, l in enumerate(carrier)}
    rows = []
    for row in table:
        out = []
        for entry in row:
            if not isinstance(entry, list):
                raise FormatError("table entries must be arrays of labels")
            m = 0
            for l in entry:
                if l not in pos:
                    raise FormatError(f"unknown element {l!r} in table")
                m |= 1 << pos[l]
            out.append(m)
        rows.append(out)
    identity = d.get("identity")
    try:
        return from_masks(carrier, rows, pos[identity] if identity is not None else None)
    except KeyError:
        raise FormatError(f"identity {identity!r} not in carrier") from None


def parse_group(d: dict) -> FiniteGroup:
    carrier = _need(d, "carrier")
    table = _parse_square(d, "table", carrier)
    pos = {l: i for i, l in enumerate(carrier)}
    try:
        idx = [[pos[v] for v in row] for row in table]
    except KeyError as exc:
        raise FormatError(f"unknown element {exc.args[0]!r} in table") from None
    return make_finite_group(carrier, idx)


def parse_ring(d: dict) -> FiniteRing:
    carrier = _need(d, "carrier")
    pos = {l: i for i, l in enumerate(carrier)}
    try:
        add = [[pos[v] for v in row] for row in _parse_square(d, "add", carrier)]
        mul = [[pos[v] for v in row] for row in _parse_square(d, "mul", carrier)]
    except KeyError as exc:
        raise FormatError(f"unknown element {exc.args[0]!r} in table") from None
    return make_finite_ring(carrier, add, mul)


def parse_matroid(d: dict) -> Matroid:
    ground = _need(d, "ground")
    pointed = d.get("pointed")
    if "flats" in d:
        return make_matroid(ground, flats=d["flats"], pointed=pointed)
    if "independent" in d:
        return make_matroid(ground, independent=d["independent"], pointed=pointed)
    if "rank" in d:
        pos = {l: i for i, l in enumerate(ground)}
        pairs = {}
        for entry in d["rank"]:
            subset, r = entry
            pairs[mask_of(pos[x] for x in subset)] = int(r)
        if len(pairs) != 1 << len(ground):
            raise FormatError("rank oracle must list every subset")
        return make_matroid(ground, rank=lambda S: pairs[S], pointed=pointed)
    raise FormatError("matroid needs flats, independent, or rank")


def parse_lattice(d: dict) -> tuple[list[str], list[list[int]]]:
    carrier = _need(d, "carrier")
    pos = {l: i for i, l in enumerate(carrier)}
    try:
        meet = [[pos[v] for v in row] for row in _parse_square(d, "meet", carrier)]
    except KeyError as exc:
        raise FormatError(f"unknown element {exc.args[0]!r} in meet table") from None
    top = d.get("top")
    if top is not None and top not in pos:
        raise FormatError(f"top {top!r} not in carrier")
    return carrier, meet


def parse_morphism(d: dict) -> Morphism:
    dom = parse_hypermagma(_need(d, "dom"))
    cod = parse_hypermagma(_need(d, "cod"))
    mp = _need(d, "map")
    if set(mp.keys()) != set(dom.labels):
        raise FormatError("map must cover the whole domain carrier")
    try:
        return Morphism(dom, cod, tuple(cod.index(mp[l]) for l in dom.labels))
    except ValueError:
        raise FormatError("map image not in the codomain carrier") from None


PARSERS = {
    "hypermagma": parse_hypermagma,
    "group": parse_group,
    "ring": parse_ring,
    "matroid": parse_matroid,
    "lattice": parse_lattice,
    "morphism": parse_morphism,
}


def load(path: str):
    from .errors import HyperkitError

    try:
        with open(path) as fh:
            d = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise FormatError(f"cannot read {path}: {exc}") from None
    if not isinstance(d, dict):
        raise FormatError("object file must be a JSON object")
    kind = _need(d, "kind")
    parser = PARSERS.get(kind)
    if parser is None:
        raise FormatError(f"unknown kind {kind!r}")
    try:
        return kind, parser(d)
    except FormatError:
        raise
    except HyperkitError as exc:
        # invalid file content is a parse failure, not a module error
        raise FormatError(f"{path}: {exc}") from None


def save(path: str, obj: dict) -> None:
    with open(path, "w") as fh:
        fh.write(dumps(obj))
