"""Text and JSON forms of families, trees, and codes used at the tool boundary.

Family document (JSON object):
    {"n": 4, "bipartitions": [[[1, 2], [3, 4]], [[1, 3], [2, 4]]]}
each bipartition being its list of one or two blocks. Compact one-line form
joins blocks with "|" and bipartitions with ";": "1,2|3,4;1,3|2,4".
Edge lists read "1-2,2-3,3-4" and codes "2,3".

External labels may be arbitrary distinct positive integers; parsing
normalizes them to 1..n in increasing order and reports the mapping.
Repeated bipartitions are dropped silently (families are sets).
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .core import Bipartition, BipartitionFamily
from .tree import LabeledGraph


@dataclass(frozen=True)
class ParsedFamily:
    """A parsed family plus the label normalization that produced it."""

    family: BipartitionFamily
    label_map: dict[int, int]  # original -> canonical; empty when no relabeling happened

    @property
    def relabeled(self) -> bool:
        return bool(self.label_map)


def bipartition_blocks(b: Bipartition) -> list[list[int]]:
    return [list(block) for block in b.blocks()]


def family_to_doc(f: BipartitionFamily) -> dict:
    return {"n": f.n, "bipartitions": [bipartition_blocks(b) for b in f]}


def family_to_compact(f: BipartitionFamily) -> str:
    return ";".join(
        "|".join(",".join(str(x) for x in block) for block in b.blocks()) for b in f
    )


def _family_from_blocklists(biparts: list, n: int | None) -> ParsedFamily:
    universe: list[int]
    if biparts:
        seen_universes = set()
        for bp in biparts:
            if not isinstance(bp, list) or not 1 <= len(bp) <= 2:
                raise ValueError("each bipartition must be a list of one or two blocks")
            flat = []
            for block in bp:
                if not isinstance(block, list) or not block:
                    raise ValueError("each block must be a nonempty list")
                for x in block:
                    if not isinstance(x, int) or isinstance(x, bool) or x < 1:
                        raise ValueError(f"labels must be positive integers, got {x!r}")
                    flat.append(x)
            if len(set(flat)) != len(flat):
                raise ValueError("blocks overlap or repeat an element")
            seen_universes.add(frozenset(flat))
        if len(seen_universes) != 1:
            raise ValueError("bipartitions cover different element sets")
        universe = sorted(next(iter(seen_universes)))
    else:
        if n is None:
            raise ValueError('an empty family needs an explicit "n"')
        universe = list(range(1, n + 1))
    if n is not None and n != len(universe):
        raise ValueError(f"n={n} but {len(universe)} distinct labels are present")
    label_map = {lab: pos for pos, lab in enumerate(universe, start=1)}
    m = len(universe)
    members = tuple(
        Bipartition.from_blocks(m, [[label_map[x] for x in block] for block in bp])
        for bp in biparts
    )
    identity = all(k == v for k, v in label_map.items())
    return ParsedFamily(BipartitionFamily(m, members), {} if identity else label_map)


def family_from_doc(obj: object) -> ParsedFamily:
    """Parse the JSON-object form."""
    if not isinstance(obj, dict):
        raise ValueError("family document must be a JSON object")
    n = obj.get("n")
    if n is not None and (not isinstance(n, int) or isinstance(n, bool) or n < 1):
        raise ValueError(f'"n" must be a positive integer, got {n!r}')
    biparts = obj.get("bipartitions")
    if not isinstance(biparts, list):
        raise ValueError('family document needs a "bipartitions" list')
    return _family_from_blocklists(biparts, n)


def family_from_compact(text: str, n: int | None = None) -> ParsedFamily:
    """Parse the compact one-line form."""
    body = text.strip()
    if not body:
        raise ValueError("empty family text")
    biparts = []
    for part in body.split(";"):
        part = part.strip()
        if not part:
            raise ValueError("empty bipartition entry")
        blocks = []
        for chunk in part.split("|"):
            items = []
            for tok in chunk.split(","):
                tok = tok.strip()
                try:
                    items.append(int(tok))
                except ValueError:
                    raise ValueError(f"bad label {tok!r}") from None
            blocks.append(items)
        biparts.append(blocks)
    return _family_from_blocklists(biparts, n)


def family_from_text(text: str, n: int | None = None) -> ParsedFamily:
    """Accept either a JSON document or the compact one-line form."""
    body = text.strip()
    if body.startswith("{"):
        return family_from_doc(json.loads(body))
    return family_from_compact(body, n)


def edges_to_text(g: LabeledGraph) -> str:
    return ",".join(f"{i}-{j}" for i, j in g.sorted_edges())


def graph_from_edge_text(text: str) -> LabeledGraph:
    """Parse "i-j,i-j,..." into a graph on {1..max label}."""
    body = text.strip()
    if not body:
        raise ValueError("empty edge list")
    pairs = []
    for tok in body.split(","):
        tok = tok.strip()
        a, sep, b = tok.partition("-")
        if not sep:
            raise ValueError(f"bad edge token {tok!r}; expected i-j")
        try:
            i, j = int(a), int(b)
        except ValueError:
            raise ValueError(f"bad edge token {tok!r}") from None
        if i < 1 or j < 1:
            raise ValueError("vertex labels are 1-based")
        pairs.append((i, j))
    n = max(max(i, j) for i, j in pairs)
    return LabeledGraph.from_edges(n, pairs)


def code_to_text(seq: tuple[int, ...]) -> str:
    return ",".join(str(s) for s in seq)
