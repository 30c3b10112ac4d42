"""Axiom checks for algebras, coalgebras and bialgebras.

Multilinear identities (associativity, coassociativity, consistency,
bialgebra self-distributivity, ``A^2 A = 0``) are checked on basis vectors only.
The pointwise identity ``(uv)w = (uw)(vw)`` is quadratic in ``w``, so it is
checked by enumerating the whole carrier and is only available over GF(p).

Products are written by juxtaposition: ``e_i e_j`` means ``A.multiply(e_i, e_j)``.
The self-distributivity identity is ``(a b) c = sum (a c1)(b c2)`` where
``Delta(c) = sum c1 (x) c2``.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from itertools import product

from . import linalg
from .scalars import Field
from .tensor import Algebra, Bialgebra, Coalgebra, Element, SweedlerTerms, basis_names

MAX_CARRIER = 4096


@dataclass
class CheckReport:
    verdict: bool
    witnesses: list = dc_field(default_factory=list)

    def __post_init__(self):
        if self.verdict == bool(self.witnesses):
            raise ValueError("verdict must be False exactly when witnesses are present")

    def __bool__(self):
        return self.verdict

    @classmethod
    def from_witnesses(cls, witnesses):
        return cls(not witnesses, list(witnesses))

    def to_json(self):
        return {"verdict": self.verdict, "witnesses": self.witnesses}


class NotEnumerableError(ValueError):
    pass


def _names(X):
    return basis_names(X.dim)


def _witness(identity, at, lhs, rhs):
    return {"identity": identity, "at": at, "lhs": lhs, "rhs": rhs}


def _sweedler_mul(A, s, t):
    """Componentwise product of two elements of ``A (x) A``."""
    acc = {}
    F = A.field
    for c1, l1, r1 in s:
        for c2, l2, r2 in t:
            left = A.product_of_basis(l1, l2)
            right = A.product_of_basis(r1, r2)
            c = c1 * c2
            for p, a in enumerate(left.coeffs):
                if not a:
                    continue
                for q, b in enumerate(right.coeffs):
                    if b:
                        acc[(p, q)] = acc.get((p, q), F.zero) + c * a * b
    return SweedlerTerms(acc)


# algebra / coalgebra axioms

def check_associativity(A: Algebra) -> CheckReport:
    names = _names(A)
    bad = []
    for i, j, k in product(range(A.dim), repeat=3):
        ei, ej, ek = A.basis(i), A.basis(j), A.basis(k)
        lhs = A.multiply(A.multiply(ei, ej), ek)
        rhs = A.multiply(ei, A.multiply(ej, ek))
        if lhs != rhs:
            at = f"({names[i]}{names[j]}){names[k]} vs {names[i]}({names[j]}{names[k]})"
            bad.append(_witness("associativity", at, lhs.render(names), rhs.render(names)))
    return CheckReport.from_witnesses(bad)


def _triple(C, i):
    """(Delta (x) id) Delta(e_i) and (id (x) Delta) Delta(e_i) as coefficient dicts."""
    F = C.field
    left, right = {}, {}
    for c, j, k in C.comultiply(C.basis(i)):
        for c2, a, b in C.comultiply(C.basis(j)):
            left[(a, b, k)] = left.get((a, b, k), F.zero) + c * c2
        for c2, a, b in C.comultiply(C.basis(k)):
            right[(j, a, b)] = right.get((j, a, b), F.zero) + c * c2
    return {k: v for k, v in left.items() if v}, {k: v for k, v in right.items() if v}


def _render_triple(d, names):
    if not d:
        return "0"
    return " + ".join(
        f"({c})*{names[a]}(x){names[b]}(x){names[k]}" for (a, b, k), c in sorted(d.items())
    )


def check_coassociativity(C: Coalgebra) -> CheckReport:
    names = _names(C)
    bad = []
    for i in range(C.dim):
        left, right = _triple(C, i)
        if left != right:
            bad.append(
                _witness("coassociativity", names[i], _render_triple(left, names), _render_triple(right, names))
            )
    return CheckReport.from_witnesses(bad)


def check_cocommutativity(C: Coalgebra) -> CheckReport:
    names = _names(C)
    bad = []
    for i in range(C.dim):
        d = C.comultiply(C.basis(i))
        flipped = SweedlerTerms({(r, l): c for c, l, r in d})
        if flipped != d:
            bad.append(_witness("cocommutativity", names[i], d.render(names), flipped.render(names)))
    return CheckReport.from_witnesses(bad)


def find_counit(C: Coalgebra):
    """A functional ``eps`` with ``(eps (x) id) Delta = id = (id (x) eps) Delta``, or None."""
    n = C.dim
    d = C.comul
    rows, rhs = [], []
    for i, k in product(range(n), repeat=2):
        # (eps (x) id) Delta(e_i), coefficient of e_k
        rows.append([d[i][j][k] for j in range(n)])
        rhs.append(1 if i == k else 0)
        # (id (x) eps) Delta(e_i), coefficient of e_k
        rows.append([d[i][k][j] for j in range(n)])
        rhs.append(1 if i == k else 0)
    return linalg.solve(C.field, rows, rhs)


def find_unit(A: Algebra):
    """A two-sided unit ``u`` (``u e_i = e_i u = e_i`` for all i), or None."""
    n = A.dim
    m = A.mul
    rows, rhs = [], []
    for i, k in product(range(n), repeat=2):
        rows.append([m[j][i][k] for j in range(n)])
        rhs.append(1 if i == k else 0)
        rows.append([m[i][j][k] for j in range(n)])
        rhs.append(1 if i == k else 0)
    x = linalg.solve(A.field, rows, rhs)
    return None if x is None else Element(A.field, tuple(x))


# bialgebra axioms

def check_consistency(B: Bialgebra) -> CheckReport:
    """``Delta(e_i e_j) = Delta(e_i) Delta(e_j)`` with the componentwise product on A (x) A."""
    A, C = B.algebra, B.coalgebra
    names = _names(A)
    bad = []
    for i, j in product(range(A.dim), repeat=2):
        lhs = C.comultiply(A.multiply(A.basis(i), A.basis(j)))
        rhs = _sweedler_mul(A, C.comultiply(A.basis(i)), C.comultiply(A.basis(j)))
        if lhs != rhs:
            bad.append(
                _witness("consistency", f"{names[i]}{names[j]}", lhs.render(names), rhs.render(names))
            )
    return CheckReport.from_witnesses(bad)


def check_sd_bialgebra(B: Bialgebra) -> CheckReport:
    A, C = B.algebra, B.coalgebra
    names = _names(A)
    F = A.field
    bad = []
    for i, j, k in product(range(A.dim), repeat=3):
        ei, ej = A.basis(i), A.basis(j)
        lhs = A.multiply(A.multiply(ei, ej), A.basis(k))
        rhs = Element.zero(F, A.dim)
        for c, p, q in C.comultiply(A.basis(k)):
            rhs = rhs + c * A.multiply(A.multiply(ei, A.basis(p)), A.multiply(ej, A.basis(q)))
        if lhs != rhs:
            at = f"a={names[i]}, b={names[j]}, c={names[k]}"
            bad.append(_witness("self-distributivity", at, lhs.render(names), rhs.render(names)))
    return CheckReport.from_witnesses(bad)


def check_cube_zero(A: Algebra) -> CheckReport:
    names = _names(A)
    bad = []
    for i, j, k in product(range(A.dim), repeat=3):
        v = A.multiply(A.multiply(A.basis(i), A.basis(j)), A.basis(k))
        if v:
            bad.append(_witness("A^2 A = 0", f"({names[i]}{names[j]}){names[k]}", v.render(names), "0"))
    return CheckReport.from_witnesses(bad)


# carrier enumeration over GF(p)

def _require_prime(A, what):
    if A.field.kind != "prime":
        raise NotEnumerableError(f"{what} needs a prime field, got {A.field}")
    size = A.field.p ** A.dim
    if size > MAX_CARRIER:
        raise NotEnumerableError(f"{what}: carrier of {size} elements is too large to enumerate")


def carrier_elements(A):
    """All elements of A over GF(p), ordered by index ``sum c_i p^i``."""
    F = A.field
    p, n = F.p, A.dim
    out = []
    for idx in range(p ** n):
        coeffs, r = [], idx
        for _ in range(n):
            coeffs.append(F(r % p))
            r //= p
        out.append(Element(F, tuple(coeffs)))
    return out


def element_index(u):
    p = u.field.p
    return sum(c.value * p ** i for i, c in enumerate(u.coeffs))


def carrier_table(A):
    """The algebra product on the full carrier as an integer Cayley table."""
    _require_prime(A, "carrier_table")
    elems = carrier_elements(A)
    p, n = A.field.p, A.dim
    m = [[c.value for c in col] for row in A.mul for col in row]
    table = []
    for u in elems:
        uc = [c.value for c in u.coeffs]
        row = []
        for v in elems:
            vc = [c.value for c in v.coeffs]
            out = [0] * n
            for i in range(n):
                if not uc[i]:
                    continue
                for j in range(n):
                    if not vc[j]:
                        continue
                    ab = uc[i] * vc[j]
                    mij = m[i * n + j]
                    for k in range(n):
                        out[k] += ab * mij[k]
            row.append(sum((o % p) * p ** k for k, o in enumerate(out)))
        table.append(row)
    return elems, table


def check_sd_algebra_pointwise(A: Algebra) -> CheckReport:
    """``(uv)w = (uw)(vw)`` for every triple of elements (GF(p) only)."""
    _require_prime(A, "pointwise self-distributivity")
    from .quandle import self_distributivity_failures

    elems, table = carrier_table(A)
    bad = [
        _witness("(uv)w = (uw)(vw)", f"u={elems[u]}, v={elems[v]}, w={elems[w]}", str(elems[l]), str(elems[r]))
        for u, v, w, l, r in self_distributivity_failures(table)
    ]
    return CheckReport.from_witnesses(bad)


def find_idempotents(A: Algebra):
    """Every ``u`` with ``u u = u``, zero included, by scanning the carrier."""
    _require_prime(A, "find_idempotents")
    elems, table = carrier_table(A)
    return [elems[i] for i in range(len(elems)) if table[i][i] == i]


def is_rack_carrier(A: Algebra) -> CheckReport:
    """Treat the whole carrier with the algebra product as a magma and test Q2 and Q3."""
    _require_prime(A, "is_rack_carrier")
    from .quandle import CayleyTable, is_rack

    elems, table = carrier_table(A)
    report = is_rack(CayleyTable(table))
    for w in report.witnesses:
        w["elements"] = [str(elems[i]) for i in w["tuple"]]
    return report


def verify_idempotent_family(A: Algebra, family: Element) -> CheckReport:
    """Check ``u u = u`` identically for a parametrised element ``u``.

    The algebra is read in the family's field, so its constants must embed there.
    """
    F = family.field
    A = A.over(F) if A.field != F else A
    sq = A.multiply(family, family)
    residual = sq - family
    if not residual:
        return CheckReport(True)
    names = _names(A)
    return CheckReport(
        False,
        [
            {
                "identity": "u u = u",
                "at": family.render(names),
                "lhs": sq.render(names),
                "rhs": family.render(names),
                "residual": [c.render() for c in residual.coeffs],
            }
        ],
    )
