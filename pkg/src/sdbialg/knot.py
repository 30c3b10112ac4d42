"""PD codes and quandle coloring counts.

Each crossing ``(a, b, c, d)`` lists its edges counterclockwise starting from the
incoming under-edge ``a``; ``c`` is the outgoing under-edge and ``b``, ``d`` are
the two halves of the over-strand.  A coloring assigns a quandle element to every
edge so that, at each crossing::

    color(b) == color(d)
    color(c) == color(a) * color(b)

Only the direction of the under-strand is used, so no orientation of the
over-strand or crossing sign is needed.  The trefoil::

    [[1, 4, 2, 5], [3, 6, 4, 1], [5, 2, 6, 3]]

has under-strands 1->2, 3->4, 5->6 passing under the arcs {4,5}, {6,1}, {2,3}.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .quandle import CayleyTable, is_quandle


class PDError(ValueError):
    pass


@dataclass(frozen=True)
class PDCode:
    crossings: tuple

    @property
    def edges(self):
        return 2 * len(self.crossings)


class _DisjointSets:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


@dataclass(frozen=True)
class Diagram:
    pd: PDCode
    components: int

    @property
    def crossings(self):
        return self.pd.crossings

    @property
    def edges(self):
        return self.pd.edges

    @classmethod
    def from_pd(cls, pd):
        if not pd.crossings:
            return cls(pd, 1)
        sets = _DisjointSets(range(1, pd.edges + 1))
        for a, b, c, d in pd.crossings:
            sets.union(a, c)
            sets.union(b, d)
        return cls(pd, len({sets.find(e) for e in range(1, pd.edges + 1)}))


def validate_pd(crossings):
    out = []
    for x in crossings:
        if not isinstance(x, (list, tuple)) or len(x) != 4:
            raise PDError(f"crossing {x!r} is not a 4-tuple")
        if not all(isinstance(e, int) and not isinstance(e, bool) and e >= 1 for e in x):
            raise PDError(f"crossing {x!r} has a non-positive or non-integer label")
        out.append(tuple(x))
    counts = {}
    for x in out:
        for e in x:
            counts[e] = counts.get(e, 0) + 1
    for e, k in sorted(counts.items()):
        if k != 2:
            raise PDError(f"edge {e} occurs {k} times, expected 2")
    if sorted(counts) != list(range(1, 2 * len(out) + 1)):
        raise PDError(f"edge labels must be 1..{2 * len(out)}")
    return PDCode(tuple(out))


def parse_pd(text):
    """Parse ``{"pd": [[a, b, c, d], ...]}`` into a validated :class:`PDCode`."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise PDError(f"malformed JSON: {exc}") from exc
    if not isinstance(obj, dict) or not isinstance(obj.get("pd"), list):
        raise PDError('expected an object with a "pd" list')
    return validate_pd(obj["pd"])


def diagram(pd):
    if isinstance(pd, str):
        pd = parse_pd(pd)
    elif not isinstance(pd, PDCode):
        pd = validate_pd(pd)
    return Diagram.from_pd(pd)


def count_colorings(D: Diagram, Q: CayleyTable) -> int:
    """Number of quandle colorings, by depth-first search over over-arc classes."""
    if not is_quandle(Q, limit=1):
        raise ValueError("coloring needs a quandle")
    if not D.crossings:
        return Q.n
    edges = range(1, D.edges + 1)
    sets = _DisjointSets(edges)
    for a, b, c, d in D.crossings:
        sets.union(b, d)
    classes = sorted({sets.find(e) for e in edges})
    slot = {r: i for i, r in enumerate(classes)}
    rel = [(slot[sets.find(a)], slot[sets.find(b)], slot[sets.find(c)]) for a, b, c, _ in D.crossings]
    # each relation is checked once all three of its classes have a color
    ready = [[] for _ in classes]
    for r in rel:
        ready[max(r)].append(r)
    table = Q.table
    colors = [0] * len(classes)

    def search(pos):
        if pos == len(classes):
            return 1
        total = 0
        for col in range(Q.n):
            colors[pos] = col
            if all(table[colors[a]][colors[b]] == colors[c] for a, b, c in ready[pos]):
                total += search(pos + 1)
        return total

    return search(0)

