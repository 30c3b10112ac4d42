"""Finite quandles and racks, quandle rings, and quandles found inside algebras."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .axioms import CheckReport, carrier_elements, element_index, find_idempotents
from .tensor import Algebra, Element, basis_names


@dataclass(frozen=True)
class CayleyTable:
    table: tuple

    def __init__(self, table):
        rows = tuple(tuple(int(x) for x in row) for row in table)
        n = len(rows)
        if n < 1:
            raise ValueError("a magma needs at least one element")
        for row in rows:
            if len(row) != n:
                raise ValueError("Cayley table must be square")
            for x in row:
                if not 0 <= x < n:
                    raise ValueError(f"entry {x} out of range for order {n}")
        object.__setattr__(self, "table", rows)

    @property
    def n(self):
        return len(self.table)

    order = n

    def op(self, x, y):
        return self.table[x][y]

    def to_json(self):
        return {"order": self.n, "table": [list(r) for r in self.table]}

    @classmethod
    def from_json(cls, obj):
        if not isinstance(obj, dict) or "table" not in obj:
            raise ValueError("quandle JSON needs a 'table'")
        t = cls(obj["table"])
        if "order" in obj and obj["order"] != t.n:
            raise ValueError(f"order {obj['order']} does not match table size {t.n}")
        return t


def self_distributivity_failures(table):
    """Yield ``(x, y, z, (x*y)*z, (x*z)*(y*z))`` for every violated triple."""
    n = len(table)
    for z in range(n):
        col = [table[x][z] for x in range(n)]
        for x in range(n):
            row = table[x]
            xz = col[x]
            trow = table[xz]
            for y in range(n):
                lhs = table[row[y]][z]
                rhs = trow[col[y]]
                if lhs != rhs:
                    yield x, y, z, lhs, rhs


def _q2_failures(T):
    n = T.n
    for y in range(n):
        column = [T.table[x][y] for x in range(n)]
        if len(set(column)) != n:
            missing = sorted(set(range(n)) - set(column))
            yield {"axiom": "Q2", "tuple": [y], "detail": f"right translation by {y} misses {missing}"}


def _q3_failures(T, limit):
    for count, (x, y, z, l, r) in enumerate(self_distributivity_failures(T.table)):
        if limit is not None and count >= limit:
            break
        yield {"axiom": "Q3", "tuple": [x, y, z], "detail": f"(x*y)*z = {l}, (x*z)*(y*z) = {r}"}


def is_rack(T: CayleyTable, limit=10) -> CheckReport:
    bad = list(_q2_failures(T))[:limit] + list(_q3_failures(T, limit))
    return CheckReport.from_witnesses(bad)


def is_quandle(T: CayleyTable, limit=10) -> CheckReport:
    bad = [
        {"axiom": "Q1", "tuple": [x], "detail": f"x*x = {T.table[x][x]}"}
        for x in range(T.n)
        if T.table[x][x] != x
    ][:limit]
    bad += list(_q2_failures(T))[:limit] + list(_q3_failures(T, limit))
    return CheckReport.from_witnesses(bad)


def trivial_quandle(n):
    return CayleyTable([[x] * n for x in range(n)])


def dihedral_quandle(n):
    return CayleyTable([[(2 * y - x) % n for y in range(n)] for x in range(n)])


def all_quandles(n):
    """Every quandle structure on ``range(n)`` (labelled, not up to isomorphism)."""
    out = []
    for flat in product(range(n), repeat=n * n):
        T = CayleyTable([flat[i * n:(i + 1) * n] for i in range(n)])
        if is_quandle(T, limit=1):
            out.append(T)
    return out


def quandle_ring(T: CayleyTable, field) -> Algebra:
    n = T.n
    return Algebra(
        field,
        [[[1 if T.table[i][j] == k else 0 for k in range(n)] for j in range(n)] for i in range(n)],
    )


def augmentation(u: Element):
    total = u.field.zero
    for c in u.coeffs:
        total = total + c
    return total


def augmentation_ideal_basis(field, n, basepoint=0):
    base = Element.basis(field, n, basepoint)
    return [Element.basis(field, n, i) - base for i in range(n) if i != basepoint]


def subset_magma(A: Algebra, S, use_opposite=False):
    """Cayley table of ``S`` under the (possibly opposite) product.

    Returns ``(table, None)`` if ``S`` is closed and ``(None, (a, b))`` with the
    first offending pair of positions otherwise.
    """
    index = {u: i for i, u in enumerate(S)}
    if len(index) != len(S):
        raise ValueError("subset elements must be distinct")
    rows = []
    for a, u in enumerate(S):
        row = []
        for b, v in enumerate(S):
            w = A.multiply(v, u) if use_opposite else A.multiply(u, v)
            if w not in index:
                return None, (a, b)
            row.append(index[w])
        rows.append(row)
    return CayleyTable(rows), None


def _orientation_report(A, S, use_opposite, names):
    table, offending = subset_magma(A, S, use_opposite)
    if table is None:
        a, b = offending
        return {
            "closed": False,
            "offending_pair": [S[a].render(names), S[b].render(names)],
        }
    return {
        "closed": True,
        "table": [list(r) for r in table.table],
        "is_quandle": is_quandle(table).verdict,
        "is_rack": is_rack(table).verdict,
        "trivial": table == trivial_quandle(table.n),
    }


def idempotent_quandle_report(A: Algebra):
    names = basis_names(A.dim)
    idem = find_idempotents(A)
    nonzero = [u for u in idem if u]
    report = {
        "field": A.field.to_json(),
        "idempotents": [u.render(names) for u in idem],
        "nonzero_idempotents": [u.render(names) for u in nonzero],
    }
    if nonzero:
        report["direct"] = _orientation_report(A, nonzero, False, names)
        report["opposite"] = _orientation_report(A, nonzero, True, names)
    return report


__all__ = [
    "CayleyTable",
    "all_quandles",
    "augmentation",
    "augmentation_ideal_basis",
    "carrier_elements",
    "dihedral_quandle",
    "element_index",
    "idempotent_quandle_report",
    "is_quandle",
    "is_rack",
    "quandle_ring",
    "self_distributivity_failures",
    "subset_magma",
    "trivial_quandle",
]
