"""Literal transcriptions of the 2-dimensional tables.

Basis ``x = e1 = f1`` (index 0) and ``y = e2 = f2`` (index 1).  Products are given as
``"xy": (coef of x, coef of y)``.  Family coefficients are scalar-expression strings
transcribed verbatim, including entries that turn out not to satisfy the axioms;
checking them is the classifier's job, not the catalog's.
"""

from __future__ import annotations

# five associative algebras without unit
ASSOCIATIVE_NONUNITAL = {
    1: {"xx": (1, 0), "xy": (0, 0), "yx": (0, 1), "yy": (0, 0)},
    2: {"xx": (1, 0), "xy": (0, 1), "yx": (0, 0), "yy": (0, 0)},
    3: {"xx": (1, 0), "xy": (0, 0), "yx": (0, 0), "yy": (0, 0)},
    4: {"xx": (0, 1), "xy": (0, 0), "yx": (0, 0), "yy": (0, 0)},
    5: {"xx": (0, 0), "xy": (0, 0), "yx": (0, 0), "yy": (0, 0)},
}

# comultiplications as {basis vector: [(coef, left, right), ...]}
COMULTIPLICATIONS = {
    1: {0: [(1, 0, 0)], 1: [(1, 0, 1)]},
    2: {0: [(1, 0, 0)], 1: [(1, 1, 0)]},
    3: {0: [(1, 0, 0)], 1: []},
    4: {0: [], 1: [(1, 1, 1)]},
    5: {0: [], 1: []},
}

# the type each associative algebra's dual is claimed to be
DUAL_TYPE = {1: 2, 2: 1, 3: 3, 4: 4, 5: 5}

_Z = ("0", "0")

# (label, parameters, products, excluded locus)
FAMILIES = {
    1: [
        ("3.3-a", (), {"xx": _Z, "xy": _Z, "yx": _Z, "yy": _Z}, ()),
        ("3.3-b", ("c",), {"xx": ("1", "0"), "xy": _Z, "yx": ("0", "c"), "yy": _Z}, ()),
        ("3.3-c", (), {"xx": ("1", "0"), "xy": ("0", "1"), "yx": _Z, "yy": _Z}, ()),
        ("3.3-d", ("c",), {"xx": ("1", "0"), "xy": ("0", "1"), "yx": ("c", "0"), "yy": ("0", "c")}, ()),
        ("3.3-e", ("c", "d"), {"xx": ("1", "0"), "xy": ("0", "1"), "yx": ("c", "-1"), "yy": ("d", "0")}, ()),
        ("3.3-f", ("d",), {"xx": ("1", "0"), "xy": ("0", "1"), "yx": ("0", "-1"), "yy": ("d", "0")}, ()),
        ("3.3-g", ("c",), {"xx": ("1", "0"), "xy": ("0", "1"), "yx": ("0", "c"), "yy": _Z}, ()),
        # only c occurs in the products
        ("3.3-h", ("c",), {"xx": ("1", "0"), "xy": ("c", "0"), "yx": ("c", "0"), "yy": ("c^2", "0")}, ()),
        ("3.3-k", ("c",), {"xx": ("1", "0"), "xy": ("c/2", "0"), "yx": ("c", "-1"), "yy": ("c^2/2", "-c/2")}, ()),
        (
            "3.3-l",
            ("c1", "c2"),
            {
                "xx": ("1", "0"),
                "xy": ("0", "1"),
                "yx": ("c1", "c2"),
                "yy": ("-(c1^2*c2)/(1-c2)^2", "c1*(c2+1)/(1-c2)"),
            },
            ("1-c2",),
        ),
    ],
    2: [
        ("3.4-a", (), {"xx": _Z, "xy": _Z, "yx": _Z, "yy": _Z}, ()),
        ("3.4-b", ("c",), {"xx": ("1", "0"), "xy": _Z, "yx": ("0", "c"), "yy": _Z}, ()),
        ("3.4-c", ("c",), {"xx": ("1", "0"), "xy": ("c", "0"), "yx": ("c", "0"), "yy": ("c^2", "0")}, ()),
        ("3.4-d", ("b", "c"), {"xx": ("1", "0"), "xy": ("0", "b"), "yx": ("0", "c"), "yy": _Z}, ()),
        (
            "3.4-e",
            ("c1", "c2"),
            {
                "xx": ("1", "0"),
                "xy": ("c1/(1-c2)", "0"),
                "yx": ("c1", "c2"),
                "yy": ("c1^2/(1-c2)", "c1*c2/(1-c2)"),
            },
            ("1-c2",),
        ),
    ],
    3: [
        ("3.5-a", ("b2",), {"xx": _Z, "xy": ("0", "b2"), "yx": _Z, "yy": _Z}, ()),
        ("3.5-b", ("c2",), {"xx": ("1", "0"), "xy": _Z, "yx": ("0", "c2"), "yy": _Z}, ()),
    ],
    4: [
        ("3.6-a", ("b",), {"xx": _Z, "xy": _Z, "yx": ("b", "0"), "yy": _Z}, ()),
        # the product uses c
        ("3.6-b", ("c",), {"xx": _Z, "xy": ("c", "0"), "yx": _Z, "yy": ("0", "1")}, ()),
    ],
    5: [
        ("3.7-a", ("c",), {"xx": _Z, "xy": _Z, "yx": ("c", "0"), "yy": _Z}, ()),
        ("3.7-b", ("b",), {"xx": _Z, "xy": ("0", "b"), "yx": _Z, "yy": _Z}, ()),
        ("3.7-c", ("c", "d"), {"xx": _Z, "xy": _Z, "yx": ("c", "0"), "yy": ("d", "0")}, ("d",)),
        (
            "3.7-d",
            ("d1", "d2"),
            {"xx": _Z, "xy": ("-d2", "-(d2^2)/d1"), "yx": _Z, "yy": ("d1", "d2")},
            ("d1",),
        ),
        ("3.7-e", ("a", "b1", "b2"), {"xx": ("a", "0"), "xy": ("b1", "b2"), "yx": _Z, "yy": _Z}, ("a",)),
        (
            "3.7-f",
            ("a1", "a2"),
            {"xx": ("a1", "a2"), "xy": _Z, "yx": ("-a1*(a1/a2)", "-a1"), "yy": _Z},
            ("a2",),
        ),
        (
            "3.7-g",
            ("a1", "d1", "d2"),
            {
                "xx": ("a1", "a1*(d2/d1)"),
                "xy": ("-d2", "-d2*(d2/d1)"),
                "yx": ("-(a1*d1)/d2", "-(a1*d1)/d2*(d2/d1)"),
                "yy": ("d1", "d2"),
            },
            ("d1",),
        ),
    ],
}
