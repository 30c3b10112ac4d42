"""Exact scalars: rationals, prime fields and rational functions in named parameters.

Every :class:`Scalar` carries its :class:`Field`.  Arithmetic between scalars of
different fields raises :class:`FieldMismatchError`; plain ``int`` and
``Fraction`` operands are lifted into the field of the other operand.

>>> Q = Field.rational()
>>> Q("1/2") + Q("1/3")
Scalar(rational, 5/6)
>>> F5 = Field.prime(5)
>>> F5(3) * F5(4)
Scalar(GF(5), 2)
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .polynomial import Poly, poly_gcd

_VAR_RE = re.compile(r"[a-z][a-z0-9]*\Z")


class FieldMismatchError(ValueError):
    pass


class ScalarSyntaxError(ValueError):
    def __init__(self, message, position):
        super().__init__(f"{message} at position {position}")
        self.position = position


class PoleError(ZeroDivisionError):
    """Evaluation hit a zero denominator (an excluded parameter value)."""


def _is_prime(p):
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


@dataclass(frozen=True)
class Field:
    kind: str
    p: int | None = None
    vars: tuple[str, ...] = ()

    def __post_init__(self):
        if self.kind == "rational":
            if self.p is not None or self.vars:
                raise ValueError("rational field takes no arguments")
        elif self.kind == "prime":
            if not isinstance(self.p, int) or not _is_prime(self.p):
                raise ValueError(f"GF(p) needs p prime, got {self.p!r}")
        elif self.kind == "params":
            if not self.vars:
                raise ValueError("params field needs at least one variable")
            if len(set(self.vars)) != len(self.vars):
                raise ValueError(f"duplicate parameter names in {self.vars}")
            for v in self.vars:
                if not _VAR_RE.match(v):
                    raise ValueError(f"bad parameter name {v!r}")
        else:
            raise ValueError(f"unknown field kind {self.kind!r}")

    @classmethod
    def rational(cls):
        return cls("rational")

    @classmethod
    def prime(cls, p):
        return cls("prime", p=p)

    @classmethod
    def params(cls, *names):
        if len(names) == 1 and not isinstance(names[0], str):
            names = tuple(names[0])
        return cls("params", vars=tuple(names))

    def __str__(self):
        if self.kind == "rational":
            return "rational"
        if self.kind == "prime":
            return f"GF({self.p})"
        return "Q(" + ",".join(self.vars) + ")"

    # element construction

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    @property
    def enumerable(self):
        return self.kind == "prime"

    def elements(self):
        if self.kind != "prime":
            raise ValueError(f"{self} is not finite")
        return [Scalar(self, i) for i in range(self.p)]

    def var(self, name):
        if self.kind != "params" or name not in self.vars:
            raise ValueError(f"{name!r} is not a parameter of {self}")
        n = len(self.vars)
        return Scalar(self, (Poly.var(n, self.vars.index(name)), Poly.const(n, 1)))

    def __call__(self, value):
        if isinstance(value, Scalar):
            return self._convert(value)
        if isinstance(value, str):
            return parse_scalar(value, self)
        if isinstance(value, bool):
            value = int(value)
        if isinstance(value, (int, Fraction)):
            return self._from_rational(Fraction(value))
        raise TypeError(f"cannot make a scalar of {self} from {value!r}")

    def _from_rational(self, q):
        if self.kind == "rational":
            return Scalar(self, q)
        if self.kind == "prime":
            if q.denominator % self.p == 0:
                raise ZeroDivisionError(f"{q} has no image in {self}")
            return Scalar(self, q.numerator * pow(q.denominator, -1, self.p) % self.p)
        n = len(self.vars)
        return Scalar(self, (Poly.const(n, q), Poly.const(n, 1)))

    def _convert(self, s):
        if s.field == self:
            return s
        if s.field.kind == "rational":
            return self._from_rational(s.value)
        if s.field.kind == "prime" and self.kind == "prime" and s.field.p == self.p:
            return s
        if s.field.kind == "params" and self.kind == "params":
            if not set(s.field.vars) <= set(self.vars):
                raise FieldMismatchError(f"cannot embed {s.field} into {self}")
            gens = [self.var(v) for v in s.field.vars]
            return evaluate(s, dict(zip(s.field.vars, gens)))
        raise FieldMismatchError(f"cannot convert {s.field} scalar into {self}")

    def to_json(self):
        if self.kind == "rational":
            return {"kind": "rational"}
        if self.kind == "prime":
            return {"kind": "prime", "p": self.p}
        return {"kind": "params", "vars": list(self.vars)}

    @classmethod
    def from_json(cls, obj):
        if not isinstance(obj, dict) or "kind" not in obj:
            raise ValueError(f"bad field descriptor {obj!r}")
        kind = obj["kind"]
        if kind == "rational":
            return cls.rational()
        if kind == "prime":
            return cls.prime(obj.get("p"))
        if kind == "params":
            return cls.params(*obj.get("vars", []))
        raise ValueError(f"unknown field kind {kind!r}")


def _normalize_ratfunc(num, den):
    if den.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if num.is_zero():
        return num, den.one_like()
    if not den.is_constant():
        g = poly_gcd(num, den)
        if not g.is_constant():
            num, den = num.divexact(g), den.divexact(g)
    lc = den.leading_coeff()
    if lc != 1:
        num, den = num.scale(1 / lc), den.scale(1 / lc)
    return num, den


class Scalar:
    """An immutable field element.

    ``value`` is a Fraction (rational), an int in ``range(p)`` (prime), or a reduced
    ``(numerator, denominator)`` pair of :class:`Poly` (params).
    """

    __slots__ = ("field", "value")

    def __init__(self, field, value):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "value", value)

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    # lifting

    def _other(self, other):
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise FieldMismatchError(f"{self.field} vs {other.field}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field(other)
        return NotImplemented

    def _new(self, value):
        return Scalar(self.field, value)

    # arithmetic

    def __add__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        k = self.field.kind
        if k == "rational":
            return self._new(self.value + o.value)
        if k == "prime":
            return self._new((self.value + o.value) % self.field.p)
        (a, b), (c, d) = self.value, o.value
        if b == d:
            return self._new(_normalize_ratfunc(a + c, b))
        return self._new(_normalize_ratfunc(a * d + c * b, b * d))

    __radd__ = __add__

    def __neg__(self):
        k = self.field.kind
        if k == "rational":
            return self._new(-self.value)
        if k == "prime":
            return self._new(-self.value % self.field.p)
        a, b = self.value
        return self._new((-a, b))

    def __sub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return o + (-self)

    def __mul__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        k = self.field.kind
        if k == "rational":
            return self._new(self.value * o.value)
        if k == "prime":
            return self._new(self.value * o.value % self.field.p)
        (a, b), (c, d) = self.value, o.value
        if a.is_zero() or c.is_zero():
            return self.field.zero
        return self._new(_normalize_ratfunc(a * c, b * d))

    __rmul__ = __mul__

    def inverse(self):
        if not self:
            raise ZeroDivisionError(f"division by zero in {self.field}")
        k = self.field.kind
        if k == "rational":
            return self._new(1 / self.value)
        if k == "prime":
            return self._new(pow(self.value, -1, self.field.p))
        a, b = self.value
        return self._new(_normalize_ratfunc(b, a))

    def __truediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        result = self.field.one
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # comparison

    def __bool__(self):
        k = self.field.kind
        if k == "params":
            return not self.value[0].is_zero()
        return self.value != 0

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.field == other.field and self.value == other.value
        if isinstance(other, (int, Fraction)):
            try:
                return self == self.field(other)
            except ZeroDivisionError:
                return False
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.value))

    def __lt__(self, other):
        # natural residue order; only meaningful for prime fields and rationals
        o = self._other(other)
        if self.field.kind == "params":
            raise TypeError("rational functions are unordered")
        return self.value < o.value

    # printing

    def render(self):
        k = self.field.kind
        if k == "rational":
            return str(self.value)
        if k == "prime":
            return str(self.value)
        num, den = self.value
        names = self.field.vars
        n = num.render(names)
        if den.is_constant() and den.constant_value() == 1:
            return n
        return f"({n})/({den.render(names)})"

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"Scalar({self.field}, {self.render()})"


def arith(a, b, op):
    """Apply ``op`` in {"add", "sub", "mul", "div"} to two scalars of one field."""
    if not isinstance(a, Scalar) or not isinstance(b, Scalar):
        raise TypeError("arith expects two Scalars")
    if a.field != b.field:
        raise FieldMismatchError(f"{a.field} vs {b.field}")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


# parsing

_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([a-z][a-z0-9]*)|(.))")


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            break
        start = m.start(m.lastindex) if m.lastindex else m.end()
        if m.group(1) is not None:
            tokens.append(("int", m.group(1), start))
        elif m.group(2) is not None:
            tokens.append(("var", m.group(2), start))
        elif m.group(3) is not None:
            ch = m.group(3)
            if ch.isspace():
                pos = m.end()
                continue
            if ch not in "+-*/^()":
                raise ScalarSyntaxError(f"unexpected character {ch!r}", start)
            tokens.append((ch, ch, start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    # expr := term (('+'|'-') term)* ; term := factor (('*'|'/') factor)*
    # factor := atom ('^' int)? ; atom := int | var | '(' expr ')' | '-' atom

    def __init__(self, text, field):
        self.tokens = _tokenize(text)
        self.i = 0
        self.field = field

    def peek(self):
        return self.tokens[self.i]

    def take(self, kind=None):
        tok = self.tokens[self.i]
        if kind is not None and tok[0] != kind:
            what = tok[1] or "end of input"
            raise ScalarSyntaxError(f"expected {kind!r}, found {what!r}", tok[2])
        self.i += 1
        return tok

    def parse(self):
        value = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise ScalarSyntaxError(f"unexpected {tok[1]!r}", tok[2])
        return value

    def expr(self):
        value = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self):
        value = self.factor()
        while self.peek()[0] in ("*", "/"):
            op, _, pos = self.take()
            rhs = self.factor()
            if op == "*":
                value = value * rhs
            else:
                if not rhs:
                    raise ScalarSyntaxError("division by zero", pos)
                value = value / rhs
        return value

    def factor(self):
        value = self.atom()
        if self.peek()[0] == "^":
            self.take()
            tok = self.take("int")
            value = value ** int(tok[1])
        return value

    def atom(self):
        kind, text, pos = self.peek()
        if kind == "int":
            self.take()
            return self.field(int(text))
        if kind == "var":
            self.take()
            if self.field.kind != "params" or text not in self.field.vars:
                raise ScalarSyntaxError(f"unknown variable {text!r}", pos)
            return self.field.var(text)
        if kind == "(":
            self.take()
            value = self.expr()
            self.take(")")
            return value
        if kind == "-":
            self.take()
            return -self.atom()
        raise ScalarSyntaxError(f"unexpected {text or 'end of input'!r}", pos)


def parse_scalar(text, field):
    """Parse a scalar expression into ``field``."""
    if not isinstance(text, str):
        raise ScalarSyntaxError(f"expected a string, got {type(text).__name__}", 0)
    return _Parser(text, field).parse()


def evaluate(s, assignment):
    """Substitute parameter values into a params-field scalar.

    ``assignment`` maps every parameter name to a Scalar (or int/Fraction) of a
    common target field.  Raises :class:`PoleError` when the denominator vanishes.
    """
    if s.field.kind != "params":
        raise ValueError("evaluate needs a params-field scalar")
    missing = [v for v in s.field.vars if v not in assignment]
    if missing:
        raise KeyError(f"unassigned parameters: {missing}")
    vals = [assignment[v] for v in s.field.vars]
    target = next((v.field for v in vals if isinstance(v, Scalar)), Field.rational())
    vals = [target(v) for v in vals]
    num, den = s.value
    if target.kind == "prime":
        # reduce mod p through primitive integer forms so a p in a coefficient
        # denominator shows up as a pole instead of a silent wrong value
        p = target.p
        sn, pn = num.integer_form()
        sd, pd = den.integer_form()
        ratio = sn / sd
        if ratio.denominator % p == 0:
            raise PoleError(f"{s.render()} is undefined in {target}")
        n_val = pn.evaluate(vals, target.zero, target.one)
        d_val = pd.evaluate(vals, target.zero, target.one)
        if not d_val:
            raise PoleError(f"denominator of {s.render()} vanishes")
        return target(ratio) * n_val / d_val
    d_val = den.evaluate(vals, target.zero, target.one)
    if not d_val:
        raise PoleError(f"denominator of {s.render()} vanishes")
    return num.evaluate(vals, target.zero, target.one) / d_val
