"""Classification of 2-dimensional non-counital self-distributive bialgebras.

Exhaustive scans over GF(p) use :mod:`sdbialg.kernels`; the catalog of
comultiplication types and multiplication families comes from
:mod:`sdbialg.catalog` and is checked here both symbolically and pointwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

import numpy as np

from . import axioms, kernels
from .catalog import ASSOCIATIVE_NONUNITAL, COMULTIPLICATIONS, DUAL_TYPE, FAMILIES
from .scalars import Field, PoleError, evaluate
from .tensor import Algebra, Bialgebra, Coalgebra, dualize

SMALL_PRIMES = (2, 3, 5)


def check_small_prime(p):
    if p not in SMALL_PRIMES:
        cost = p ** 8 * (p * p - 1) * (p * p - p)
        raise ValueError(
            f"p={p} is outside {SMALL_PRIMES}: {p ** 8} tensors, "
            f"about {cost:.2e} tensor-orbit operations"
        )


def nested(flat, n=2):
    flat = list(flat)
    return [[[int(flat[(i * n + j) * n + k]) for k in range(n)] for j in range(n)] for i in range(n)]


def tensor_of(X):
    """Integer tensor of a structure over GF(p) as a ``(2, 2, 2)`` array."""
    return np.array(X.int_flat(), dtype=np.int64).reshape(2, 2, 2)


# catalog data

def associative_table(case, field=None):
    return Algebra.from_products(field or Field.rational(), ASSOCIATIVE_NONUNITAL[case])


def comultiplication_tensor(type_id):
    raw = [[[0, 0], [0, 0]], [[0, 0], [0, 0]]]
    for i, terms in COMULTIPLICATIONS[type_id].items():
        for c, l, r in terms:
            raw[i][l][r] = c
    return raw


@dataclass(frozen=True)
class ComultiplicationType:
    id: int
    coalgebra: Coalgebra

    def over(self, field):
        return ComultiplicationType(self.id, self.coalgebra.over(field))


def comultiplication_catalog(field=None):
    field = field or Field.rational()
    return [ComultiplicationType(t, Coalgebra(field, comultiplication_tensor(t))) for t in sorted(COMULTIPLICATIONS)]


# canonical forms

@dataclass(frozen=True)
class CanonicalClass:
    canonical: tuple
    orbit_size: int
    representative: tuple


def canonical_form(X):
    """Lexicographically least structure tensor over the GL2(GF(p)) orbit of ``X``."""
    if X.dim != 2 or X.field.kind != "prime":
        raise ValueError("canonical_form needs a 2-dimensional structure over GF(p)")
    p = X.field.p
    codes, _ = kernels.canonical_codes(tensor_of(X)[None], p, coalgebra=isinstance(X, Coalgebra))
    return tuple(int(v) for v in kernels.decode(codes, p)[0].reshape(-1))


def orbit_equivalent(X, Y):
    return type(X) is type(Y) and canonical_form(X) == canonical_form(Y)


def enumerate_associative_nonunital(p):
    check_small_prime(p)
    T = kernels.all_tensors(p)
    keep = kernels.associative(T, p) & ~kernels.has_unit(T, p)
    T = T[keep]
    codes = kernels.encode(T, p)
    canon, sizes = kernels.canonical_codes(T, p)
    classes = []
    for c in np.unique(canon):
        members = codes[canon == c]
        size = int(sizes[canon == c][0])
        if size != len(members):
            raise AssertionError("orbit is not contained in the associative unit-free set")
        classes.append(
            CanonicalClass(
                tuple(int(v) for v in kernels.decode([c], p)[0].reshape(-1)),
                size,
                tuple(int(v) for v in kernels.decode([members.min()], p)[0].reshape(-1)),
            )
        )
    return classes


def match_associative_tables(p):
    """For each class over GF(p), the associative table cases with the same canonical form."""
    F = Field.prime(p)
    table_forms = {case: canonical_form(associative_table(case, F)) for case in ASSOCIATIVE_NONUNITAL}
    out = []
    for cls in enumerate_associative_nonunital(p):
        cases = [case for case, form in table_forms.items() if form == cls.canonical]
        out.append((cls, cases))
    return out


def dual_type_report(p=3):
    """Dualise each associative table and locate it among the comultiplication types."""
    F = Field.prime(p)
    catalog = {t.id: canonical_form(t.coalgebra) for t in comultiplication_catalog(F)}
    rows = []
    for case in sorted(ASSOCIATIVE_NONUNITAL):
        C = dualize(associative_table(case, F))
        form = canonical_form(C)
        matches = [t for t, f in catalog.items() if f == form]
        rows.append(
            {
                "case": case,
                "dual": C.table(),
                "claimed_type": DUAL_TYPE[case],
                "equivalent_types": matches,
                "matches_claim": DUAL_TYPE[case] in matches,
                "coassociative": axioms.check_coassociativity(C).verdict,
                "counit": axioms.find_counit(C) is not None,
            }
        )
    return rows


# families

@dataclass(frozen=True)
class FamilyDescriptor:
    comul_type: int
    label: str
    params: tuple
    products: dict
    excluded: tuple = ()

    @property
    def field(self):
        return Field.params(*self.params) if self.params else Field.rational()

    @property
    def algebra(self):
        return Algebra.from_products(self.field, self.products)

    @property
    def bialgebra(self):
        C = Coalgebra(self.field, comultiplication_tensor(self.comul_type))
        return Bialgebra(self.algebra, C)

    def excluded_polys(self):
        return [self.field(e) for e in self.excluded]

    def to_json(self):
        return {
            "type": self.comul_type,
            "label": self.label,
            "params": list(self.params),
            "mul": self.algebra.rendered(),
            "excluded": list(self.excluded),
        }


def family_catalog(t):
    return [FamilyDescriptor(t, label, params, products, excl) for label, params, products, excl in FAMILIES[t]]


def all_families():
    return [f for t in sorted(FAMILIES) for f in family_catalog(t)]


def instantiate_family(f, assignment, field=None):
    """Concrete bialgebra at ``assignment``; raises PoleError on the excluded locus."""
    if not f.params:
        target = field or Field.rational()
        return f.bialgebra.over(target)
    missing = [v for v in f.params if v not in assignment]
    if missing:
        raise KeyError(f"unassigned parameters {missing}")
    if field is None:
        field = next((v.field for v in assignment.values() if hasattr(v, "field")), Field.rational())
    point = {v: field(assignment[v]) for v in f.params}
    for poly, text in zip(f.excluded_polys(), f.excluded):
        if not evaluate(poly, point):
            raise PoleError(f"{f.label}: excluded locus {text} = 0")
    raw = [[[evaluate(c, point) for c in col] for col in row] for row in f.algebra.tensor]
    return Bialgebra(Algebra(field, raw), Coalgebra(field, comultiplication_tensor(f.comul_type)))


def family_points(f, p):
    """Admissible GF(p) instances as ``(assignment, bialgebra)``; poles are skipped."""
    F = Field.prime(p)
    if not f.params:
        yield {}, instantiate_family(f, {}, F)
        return
    for values in product(range(p), repeat=len(f.params)):
        assignment = dict(zip(f.params, (F(v) for v in values)))
        try:
            yield assignment, instantiate_family(f, assignment, F)
        except PoleError:
            continue


def symbolic_soundness(f):
    """Consistency, self-distributivity and absence of counit over the parameter field."""
    B = f.bialgebra
    cons = axioms.check_consistency(B)
    sd = axioms.check_sd_bialgebra(B)
    counit = axioms.find_counit(B.coalgebra)
    return {
        "label": f.label,
        "consistency": cons.to_json(),
        "sd": sd.to_json(),
        "non_counital": counit is None,
        "sound": cons.verdict and sd.verdict and counit is None,
    }


def pointwise_soundness(f, p):
    """Check every admissible GF(p) instance; returns (points checked, failures)."""
    checked, failures = 0, []
    for assignment, B in family_points(f, p):
        checked += 1
        ok_c = axioms.check_consistency(B).verdict
        ok_s = axioms.check_sd_bialgebra(B).verdict
        ok_e = axioms.find_counit(B.coalgebra) is None
        if not (ok_c and ok_s and ok_e):
            failures.append(
                {
                    "label": f.label,
                    "at": {k: v.value for k, v in assignment.items()},
                    "consistency": ok_c,
                    "sd": ok_s,
                    "non_counital": ok_e,
                }
            )
    return checked, failures


# exhaustive scans

def enumerate_sd_multiplications(t, p):
    """Sorted flat tensors ``mul`` making (mul, type t) consistent and self-distributive."""
    check_small_prime(p)
    D = np.array(comultiplication_tensor(t), dtype=np.int64)
    T = kernels.all_tensors(p)
    keep = kernels.consistent(T, D, p)
    keep[keep] = kernels.sd_bialgebra(T[keep], D, p)
    return [tuple(int(v) for v in row.reshape(-1)) for row in T[keep]]


def family_instances(t, p):
    """Map each distinct instance tensor to the labels producing it."""
    out = {}
    for f in family_catalog(t):
        for _, B in family_points(f, p):
            out.setdefault(B.algebra.int_flat(), []).append(f.label)
    return {k: sorted(set(v)) for k, v in out.items()}


def verify_family_completeness(t, p):
    check_small_prime(p)
    solutions = set(enumerate_sd_multiplications(t, p))
    instances = family_instances(t, p)
    unsound = sorted(set(instances) - solutions)
    missing = sorted(solutions - set(instances))
    return {
        "type": t,
        "p": p,
        "sound": not unsound,
        "missing_from_families": [nested(m) for m in missing],
        "family_instances": len(instances),
        "solutions": len(solutions),
        "unsound_instances": [{"mul": nested(u), "families": instances[u]} for u in unsound],
    }
