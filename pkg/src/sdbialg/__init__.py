"""Self-distributive bialgebras from structure constants: axiom checks,
classification in dimension 2, quandles inside algebras, and knot colorings."""

from .scalars import Field, Scalar, parse_scalar, evaluate, arith, PoleError, FieldMismatchError, ScalarSyntaxError
from .tensor import (
    Algebra,
    Bialgebra,
    Coalgebra,
    Element,
    SweedlerTerms,
    change_basis,
    codualize,
    comultiply,
    dualize,
    group_like_coalgebra,
    multiply,
    opposite,
)
from .axioms import CheckReport

__version__ = "0.1.0"
