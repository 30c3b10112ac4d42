"""Algebras and coalgebras given by structure constants.

``Algebra.mul[i][j][k]`` is the coefficient of ``e_k`` in ``e_i e_j`` and
``Coalgebra.comul[i][j][k]`` the coefficient of ``e_j (x) e_k`` in ``Delta(e_i)``.

Basis changes follow one convention throughout: the rows of ``g`` are the new
basis vectors written in the old basis.  For the ring of the two-element trivial
quandle (``t_i t_j = t_i``), ``g = [[1, 0], [1, -1]]`` gives the basis
``t = t1, tau = t1 - t2`` with ``t t = t, t tau = 0, tau t = tau, tau tau = 0``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from . import linalg
from .scalars import Field, FieldMismatchError, Scalar


def _coerce_tensor(field, raw, n):
    if len(raw) != n or any(len(row) != n or any(len(c) != n for c in row) for row in raw):
        raise ValueError(f"structure tensor must be {n}x{n}x{n}")
    return tuple(tuple(tuple(field(x) for x in col) for col in row) for row in raw)


def basis_names(n):
    return ["x", "y"] if n == 2 else [f"e{i + 1}" for i in range(n)]


def _is_atom(text):
    return not any(ch in text for ch in "+-/ ")


def _join_terms(pairs):
    """``a*u + b*v - w`` with parentheses around compound coefficients."""
    out = []
    for c, label in pairs:
        if not c:
            continue
        sign, mag = "+", c
        if _is_atom((-c).render()) and not _is_atom(c.render()):
            sign, mag = "-", -c
        text = mag.render()
        term = label if mag == 1 else (f"{text}*{label}" if _is_atom(text) else f"({text})*{label}")
        out.append((sign, term))
    if not out:
        return "0"
    first = ("-" if out[0][0] == "-" else "") + out[0][1]
    return first + "".join(f" {s} {t}" for s, t in out[1:])


@dataclass(frozen=True)
class Element:
    field: Field
    coeffs: tuple

    @classmethod
    def of(cls, field, coeffs):
        return cls(field, tuple(field(c) for c in coeffs))

    @classmethod
    def zero(cls, field, n):
        return cls(field, (field.zero,) * n)

    @classmethod
    def basis(cls, field, n, i):
        return cls(field, tuple(field.one if k == i else field.zero for k in range(n)))

    @property
    def dim(self):
        return len(self.coeffs)

    def _check(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        if other.field != self.field:
            raise FieldMismatchError(f"{self.field} vs {other.field}")
        if other.dim != self.dim:
            raise ValueError(f"dimension mismatch {self.dim} vs {other.dim}")
        return other

    def __add__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return Element(self.field, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return Element(self.field, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return Element(self.field, tuple(-a for a in self.coeffs))

    def __rmul__(self, scalar):
        s = self.field(scalar) if not isinstance(scalar, Scalar) else scalar
        if s.field != self.field:
            raise FieldMismatchError(f"{s.field} vs {self.field}")
        return Element(self.field, tuple(s * a for a in self.coeffs))

    def __bool__(self):
        return any(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i]

    def render(self, names=None):
        names = names or basis_names(self.dim)
        return _join_terms((c, name) for c, name in zip(self.coeffs, names))

    def __str__(self):
        return self.render()


class SweedlerTerms:
    """An element of ``A (x) A`` as ``sum coef * e_left (x) e_right``."""

    __slots__ = ("terms",)

    def __init__(self, coeffs):
        self.terms = tuple(
            (c, l, r) for (l, r), c in sorted(coeffs.items()) if c
        )

    def __iter__(self):
        return iter(self.terms)

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if not isinstance(other, SweedlerTerms):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(self.terms)

    def as_dict(self):
        return {(l, r): c for c, l, r in self.terms}

    def render(self, names):
        return _join_terms((c, f"{names[l]}(x){names[r]}") for c, l, r in self.terms)

    def __repr__(self):
        return f"SweedlerTerms({self.terms!r})"


class _Structure:
    __slots__ = ("field", "dim", "tensor")

    def __init__(self, field, tensor):
        n = len(tensor)
        if n < 1:
            raise ValueError("dimension must be at least 1")
        self.field = field
        self.dim = n
        self.tensor = _coerce_tensor(field, tensor, n)

    @classmethod
    def zero(cls, field, n):
        return cls(field, [[[0] * n for _ in range(n)] for _ in range(n)])

    def __eq__(self, other):
        return type(self) is type(other) and self.field == other.field and self.tensor == other.tensor

    def __hash__(self):
        return hash((type(self).__name__, self.field, self.tensor))

    def over(self, field):
        """The same structure constants read in another field."""
        return type(self)(field, self.tensor)

    def flat(self):
        """Row-major list of the n^3 entries."""
        return tuple(x for row in self.tensor for col in row for x in col)

    def int_flat(self):
        if self.field.kind != "prime":
            raise ValueError("int_flat needs a prime field")
        return tuple(x.value for x in self.flat())

    def rendered(self):
        return [[[x.render() for x in col] for col in row] for row in self.tensor]

    def basis(self, i):
        return Element.basis(self.field, self.dim, i)

    def element(self, coeffs):
        return Element.of(self.field, coeffs)

    def _check_element(self, u):
        if u.field != self.field:
            raise FieldMismatchError(f"{u.field} vs {self.field}")
        if u.dim != self.dim:
            raise ValueError(f"element of dimension {u.dim} in a {self.dim}-dimensional structure")


class Algebra(_Structure):
    @property
    def mul(self):
        return self.tensor

    @classmethod
    def from_products(cls, field, products):
        """Build a 2-dimensional algebra from ``{"xx": (a, b), "xy": ..., ...}``."""
        idx = {"x": 0, "y": 1}
        raw = [[[0, 0], [0, 0]], [[0, 0], [0, 0]]]
        for key, coeffs in products.items():
            raw[idx[key[0]]][idx[key[1]]] = list(coeffs)
        return cls(field, raw)

    def multiply(self, u, v):
        self._check_element(u)
        self._check_element(v)
        n = self.dim
        out = [self.field.zero] * n
        for i in range(n):
            if not u.coeffs[i]:
                continue
            for j in range(n):
                if not v.coeffs[j]:
                    continue
                ab = u.coeffs[i] * v.coeffs[j]
                row = self.tensor[i][j]
                for k in range(n):
                    if row[k]:
                        out[k] = out[k] + ab * row[k]
        return Element(self.field, tuple(out))

    def product_of_basis(self, i, j):
        return Element(self.field, self.tensor[i][j])

    def table(self, names=None):
        names = names or basis_names(self.dim)
        return {
            f"{names[i]}{names[j]}": self.product_of_basis(i, j).render(names)
            for i in range(self.dim)
            for j in range(self.dim)
        }

    def __repr__(self):
        return f"Algebra({self.field}, {self.table()})"


class Coalgebra(_Structure):
    @property
    def comul(self):
        return self.tensor

    def comultiply(self, u):
        self._check_element(u)
        n = self.dim
        acc = {}
        for i in range(n):
            a = u.coeffs[i]
            if not a:
                continue
            for j in range(n):
                for k in range(n):
                    c = self.tensor[i][j][k]
                    if c:
                        acc[(j, k)] = acc.get((j, k), self.field.zero) + a * c
        return SweedlerTerms(acc)

    def table(self, names=None):
        names = names or basis_names(self.dim)
        return {
            names[i]: self.comultiply(self.basis(i)).render(names) for i in range(self.dim)
        }

    def __repr__(self):
        return f"Coalgebra({self.field}, {self.table()})"


@dataclass(frozen=True)
class Bialgebra:
    algebra: Algebra
    coalgebra: Coalgebra

    def __post_init__(self):
        if self.algebra.field != self.coalgebra.field:
            raise FieldMismatchError("algebra and coalgebra over different fields")
        if self.algebra.dim != self.coalgebra.dim:
            raise ValueError("algebra and coalgebra of different dimensions")

    @property
    def field(self):
        return self.algebra.field

    @property
    def dim(self):
        return self.algebra.dim

    def over(self, field):
        return Bialgebra(self.algebra.over(field), self.coalgebra.over(field))


def multiply(A, u, v):
    return A.multiply(u, v)


def comultiply(C, u):
    return C.comultiply(u)


def dualize(A):
    """Coalgebra on the dual basis: ``Delta f_k (e_i, e_j) = f_k(e_i e_j)``."""
    n = A.dim
    return Coalgebra(
        A.field,
        [[[A.mul[i][j][k] for j in range(n)] for i in range(n)] for k in range(n)],
    )


def codualize(C):
    """Inverse of :func:`dualize`: the algebra structure on the dual of ``C``."""
    n = C.dim
    return Algebra(
        C.field,
        [[[C.comul[k][i][j] for k in range(n)] for j in range(n)] for i in range(n)],
    )


def opposite(A):
    n = A.dim
    return Algebra(A.field, [[A.mul[j][i] for j in range(n)] for i in range(n)])


def change_basis(X, g):
    """Rewrite ``X`` in the basis whose vectors are the rows of ``g``."""
    n = X.dim
    F = X.field
    g = [[F(a) for a in row] for row in g]
    if len(g) != n or any(len(row) != n for row in g):
        raise ValueError(f"basis change must be {n}x{n}")
    h = linalg.inverse(F, g)
    t = X.tensor
    out = [[[F.zero] * n for _ in range(n)] for _ in range(n)]
    rng = range(n)
    if isinstance(X, Algebra):
        for a, b, c in product(rng, rng, rng):
            s = F.zero
            for i, j, k in product(rng, rng, rng):
                if g[a][i] and g[b][j] and t[i][j][k] and h[k][c]:
                    s = s + g[a][i] * g[b][j] * t[i][j][k] * h[k][c]
            out[a][b][c] = s
        return Algebra(F, out)
    for a, b, c in product(rng, rng, rng):
        s = F.zero
        for i, j, k in product(rng, rng, rng):
            if g[a][i] and t[i][j][k] and h[j][b] and h[k][c]:
                s = s + g[a][i] * t[i][j][k] * h[j][b] * h[k][c]
        out[a][b][c] = s
    return Coalgebra(F, out)


def group_like_coalgebra(field, dim):
    return Coalgebra(
        field,
        [[[1 if i == j == k else 0 for k in range(dim)] for j in range(dim)] for i in range(dim)],
    )


# JSON

def structure_from_json(obj):
    """Parse the bialgebra JSON form; returns an Algebra, or a Bialgebra when "comul" is present."""
    if not isinstance(obj, dict):
        raise ValueError("expected a JSON object")
    for key in ("field", "dim", "mul"):
        if key not in obj:
            raise ValueError(f"missing key {key!r}")
    field = Field.from_json(obj["field"])
    n = obj["dim"]
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"bad dimension {n!r}")

    def tensor(key):
        raw = obj[key]
        if not isinstance(raw, list):
            raise ValueError(f"{key!r} must be a nested list")
        for row in raw:
            for col in row:
                for s in col:
                    if not isinstance(s, (str, int)):
                        raise ValueError(f"{key!r} entries must be scalar strings")
        return _coerce_tensor(field, [[[str(s) for s in col] for col in row] for row in raw], n)

    algebra = Algebra(field, tensor("mul"))
    if "comul" in obj and obj["comul"] is not None:
        return Bialgebra(algebra, Coalgebra(field, tensor("comul")))
    return algebra


def structure_to_json(X):
    if isinstance(X, Bialgebra):
        out = structure_to_json(X.algebra)
        out["comul"] = X.coalgebra.rendered()
        return out
    out = {"field": X.field.to_json(), "dim": X.dim}
    out["mul" if isinstance(X, Algebra) else "comul"] = X.rendered()
    return out
