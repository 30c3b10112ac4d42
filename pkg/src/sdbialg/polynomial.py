"""Sparse multivariate polynomials over the rationals.

A polynomial in ``n`` variables is a mapping from exponent tuples of length
``n`` to nonzero :class:`fractions.Fraction` coefficients.  Variable order is
the order the caller declared; monomial comparisons use graded lex order
(total degree first, then exponents compared left to right).

The gcd is computed by recursion on variables with a primitive
pseudo-remainder sequence, which is plenty for the low-degree coefficients
that show up in structure tensors.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as igcd, lcm as ilcm


def _grlex_key(exp):
    return (sum(exp), exp)


class Poly:
    __slots__ = ("nvars", "terms", "_hash")

    def __init__(self, nvars, terms=None):
        self.nvars = nvars
        clean = {}
        if terms:
            for exp, c in terms.items():
                if c:
                    clean[tuple(exp)] = Fraction(c)
        self.terms = clean
        self._hash = None

    # construction helpers

    @classmethod
    def const(cls, nvars, c):
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def var(cls, nvars, index, power=1):
        exp = [0] * nvars
        exp[index] = power
        return cls(nvars, {tuple(exp): 1})

    def zero_like(self):
        return Poly(self.nvars)

    def one_like(self):
        return Poly.const(self.nvars, 1)

    # predicates

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return all(not any(e) for e in self.terms)

    def constant_value(self):
        return self.terms.get((0,) * self.nvars, Fraction(0))

    def variables(self):
        """Indices of the variables that actually occur."""
        used = set()
        for exp in self.terms:
            used.update(i for i, e in enumerate(exp) if e)
        return used

    # arithmetic

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for exp, c in other.terms.items():
            out[exp] = out.get(exp, 0) + c
        return Poly(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return Poly(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = self.one_like()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, c):
        c = Fraction(c)
        return Poly(self.nvars, {e: v * c for e, v in self.terms.items()})

    def _coerce(self, other):
        if isinstance(other, Poly):
            if other.nvars != self.nvars:
                raise ValueError("polynomials over different variable sets")
            return other
        return Poly.const(self.nvars, other)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.nvars == other.nvars and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == Poly.const(self.nvars, other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self.terms.items())))
        return self._hash

    # orderings and leading data

    def leading_exp(self):
        return max(self.terms, key=_grlex_key)

    def leading_coeff(self):
        return self.terms[self.leading_exp()]

    def monic(self):
        if self.is_zero():
            return self
        return self.scale(1 / self.leading_coeff())

    def degree_in(self, v):
        if not self.terms:
            return -1
        return max(e[v] for e in self.terms)

    def total_degree(self):
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def coeffs_in(self, v):
        """Split as sum over k of ``coef_k * x_v^k`` with ``coef_k`` free of ``x_v``."""
        out = {}
        for exp, c in self.terms.items():
            k = exp[v]
            rest = exp[:v] + (0,) + exp[v + 1:]
            out.setdefault(k, {})[rest] = c
        return {k: Poly(self.nvars, t) for k, t in out.items()}

    def lc_in(self, v):
        return self.coeffs_in(v)[self.degree_in(v)]

    # division

    def divexact(self, other):
        """Exact quotient; raises ValueError when ``other`` does not divide ``self``."""
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if other.is_constant():
            return self.scale(1 / other.constant_value())
        lex_b = max(other.terms)
        cb = other.terms[lex_b]
        q = {}
        r = self
        while not r.is_zero():
            lex_r = max(r.terms)
            if any(a < b for a, b in zip(lex_r, lex_b)):
                raise ValueError("polynomial division is not exact")
            e = tuple(a - b for a, b in zip(lex_r, lex_b))
            c = r.terms[lex_r] / cb
            q[e] = c
            r = r - Poly(self.nvars, {e: c}) * other
        return Poly(self.nvars, q)

    # evaluation

    def integer_form(self):
        """Return ``(scale, P)`` with ``self == scale * P`` and P a primitive integer polynomial."""
        if self.is_zero():
            return Fraction(0), self
        den = 1
        for c in self.terms.values():
            den = ilcm(den, c.denominator)
        ints = {e: int(c * den) for e, c in self.terms.items()}
        g = 0
        for c in ints.values():
            g = igcd(g, c)
        return Fraction(g, den), Poly(self.nvars, {e: c // g for e, c in ints.items()})

    def evaluate(self, values, zero, one):
        """Evaluate with ``values[i]`` substituted for variable i.

        ``zero``/``one`` are the additive/multiplicative identities of the target
        ring, and every coefficient must already be representable there (the caller
        passes an integer polynomial when the target is a prime field).
        """
        total = zero
        for exp, c in self.terms.items():
            term = one * c
            for v, e in zip(values, exp):
                if e:
                    term = term * v ** e
            total = total + term
        return total

    # printing

    def render(self, names):
        """Render in the scalar-expression grammar.

        A leading unary minus binds tighter than ``^`` in that grammar, so negative
        leading terms are written as ``-k*m`` rather than ``-m``.
        """
        if self.is_zero():
            return "0"
        pieces = []
        for exp in sorted(self.terms, key=_grlex_key, reverse=True):
            c = self.terms[exp]
            mono = "*".join(
                n if e == 1 else f"{n}^{e}" for n, e in zip(names, exp) if e
            )
            pieces.append((c, mono))
        out = []
        for idx, (c, mono) in enumerate(pieces):
            neg = c < 0
            a = -c if neg else c
            if not mono:
                body = str(a)
            elif a == 1:
                body = mono
            else:
                body = f"{a}*{mono}"
            if idx == 0:
                if neg:
                    if mono and a == 1 and "^" in mono.split("*")[0]:
                        body = f"1*{mono}"
                    out.append("-" + body)
                else:
                    out.append(body)
            else:
                out.append((" - " if neg else " + ") + body)
        return "".join(out)

    def __repr__(self):
        names = [f"v{i}" for i in range(self.nvars)]
        return f"Poly({self.render(names)})"


def content_in(p, v):
    """Gcd of the coefficients of ``p`` viewed as a polynomial in ``x_v``."""
    g = None
    for coef in p.coeffs_in(v).values():
        g = coef.monic() if g is None else poly_gcd(g, coef)
    return g if g is not None else p.zero_like()


def pseudo_rem(a, b, v):
    db = b.degree_in(v)
    lb = b.lc_in(v)
    r = a
    while not r.is_zero() and r.degree_in(v) >= db:
        k = r.degree_in(v) - db
        lr = r.lc_in(v)
        r = r * lb - lr * b * Poly.var(a.nvars, v, k)
    return r


def primitive_part(p, v):
    if p.is_zero():
        return p
    return p.divexact(content_in(p, v)).monic()


def poly_gcd(a, b):
    """Monic (grlex) gcd of two polynomials over Q."""
    if a.is_zero():
        return b.monic()
    if b.is_zero():
        return a.monic()
    if a.is_constant() or b.is_constant():
        return a.one_like()
    v = min(a.variables() | b.variables())
    ca, cb = content_in(a, v), content_in(b, v)
    g = poly_gcd(ca, cb)
    pa, pb = a.divexact(ca), b.divexact(cb)
    if pa.degree_in(v) < pb.degree_in(v):
        pa, pb = pb, pa
    while not pb.is_zero():
        r = pseudo_rem(pa, pb, v)
        pa, pb = pb, primitive_part(r, v)
    if pa.degree_in(v) <= 0:
        pa = pa.one_like()
    else:
        pa = primitive_part(pa, v)
    return (g * pa).monic()
