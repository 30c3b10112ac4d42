"""Vectorised axiom checks for batches of 2-dimensional structure tensors over GF(p).

A batch is an int64 array of shape ``(N, 2, 2, 2)`` with entries in ``range(p)``.
Tensors are identified by their *code*: the row-major flattening read as a base-p
number with ``t[0][0][0]`` most significant, so code order is lexicographic order.
These kernels are the fast path for exhaustive scans; ``sdbialg.axioms`` is the
reference implementation they are tested against.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product

import numpy as np

DIM = 2
ENTRIES = DIM ** 3
CHUNK = 1 << 14


def all_tensors(p):
    """Every tensor over GF(p), in code order."""
    codes = np.arange(p ** ENTRIES, dtype=np.int64)
    return decode(codes, p)


def decode(codes, p):
    codes = np.asarray(codes, dtype=np.int64)
    digits = np.empty((codes.size, ENTRIES), dtype=np.int64)
    rest = codes.copy()
    for pos in range(ENTRIES - 1, -1, -1):
        digits[:, pos] = rest % p
        rest //= p
    return digits.reshape(-1, DIM, DIM, DIM)


def encode(T, p):
    flat = np.asarray(T, dtype=np.int64).reshape(-1, ENTRIES)
    weights = p ** np.arange(ENTRIES - 1, -1, -1, dtype=np.int64)
    return flat @ weights


def _chunked(fn):
    def wrapper(T, *args):
        T = np.asarray(T, dtype=np.int64)
        if len(T) <= CHUNK:
            return fn(T, *args)
        return np.concatenate([fn(T[i:i + CHUNK], *args) for i in range(0, len(T), CHUNK)])

    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


@_chunked
def associative(T, p):
    lhs = np.einsum("nijr,nrkt->nijkt", T, T) % p
    rhs = np.einsum("njkr,nirt->nijkt", T, T) % p
    return (lhs == rhs).all(axis=(1, 2, 3, 4))


@lru_cache(maxsize=None)
def _vectors(p):
    # index u = c0 + p*c1, matching sdbialg.axioms.carrier_elements
    return np.array([(u % p, u // p) for u in range(p * p)], dtype=np.int64)


@_chunked
def has_unit(T, p):
    U = _vectors(p)
    eye = np.eye(DIM, dtype=np.int64)
    left = np.einsum("uj,njik->nuik", U, T) % p
    right = np.einsum("uj,nijk->nuik", U, T) % p
    ok = (left == eye).all(axis=(2, 3)) & (right == eye).all(axis=(2, 3))
    return ok.any(axis=1)


@_chunked
def consistent(T, D, p):
    D = np.asarray(D, dtype=np.int64)
    lhs = np.einsum("nijk,kpq->nijpq", T, D) % p
    rhs = np.einsum("ace,bdf,ncdp,nefq->nabpq", D, D, T, T, optimize=True) % p
    return (lhs == rhs).all(axis=(1, 2, 3, 4))


@_chunked
def sd_bialgebra(T, D, p):
    D = np.asarray(D, dtype=np.int64)
    lhs = np.einsum("nijr,nrkt->nijkt", T, T) % p
    inner = np.einsum("nipr,njqs,nrst->nipjqt", T, T, T, optimize=True) % p
    rhs = np.einsum("kpq,nipjqt->nijkt", D, inner) % p
    return (lhs == rhs).all(axis=(1, 2, 3, 4))


@_chunked
def cube_zero(T, p):
    return (np.einsum("nijr,nrkt->nijkt", T, T) % p == 0).all(axis=(1, 2, 3, 4))


def carrier_tables(T, p):
    """Cayley tables ``M[n, u, v]`` of the product on all p^2 elements."""
    U = _vectors(p)
    prod = np.einsum("ui,vj,nijk->nuvk", U, U, T, optimize=True) % p
    return prod[..., 0] + p * prod[..., 1]


def _sd_on(M, idx):
    """``(uv)w == (uw)(vw)`` for u, v, w ranging over the element indices ``idx``."""
    n, m = M.shape[0], M.shape[1]
    flat = M.reshape(n, m * m)
    sub = M[:, idx][:, :, idx]
    w = np.asarray(idx)
    lhs_idx = sub[:, :, :, None] * m + w[None, None, None, :]
    rhs_idx = sub[:, :, None, :] * m + sub[:, None, :, :]
    lhs = np.take_along_axis(flat, lhs_idx.reshape(n, -1), axis=1)
    rhs = np.take_along_axis(flat, rhs_idx.reshape(n, -1), axis=1)
    return (lhs == rhs).all(axis=1)


@_chunked
def sd_pointwise(T, p, prefilter=True):
    """``(uv)w == (uw)(vw)`` for every element triple."""
    M = carrier_tables(T, p)
    m = p * p
    if not prefilter:
        return _sd_on(M, list(range(m)))
    # elements with 0/1 coordinates catch almost every failure cheaply
    ok = _sd_on(M, [0, 1, p, p + 1])
    if ok.any():
        ok[ok] = _sd_on(M[ok], list(range(m)))
    return ok


# basis changes

@lru_cache(maxsize=None)
def general_linear(p):
    """All invertible 2x2 matrices over GF(p) and their inverses."""
    gs, invs = [], []
    for a, b, c, d in product(range(p), repeat=4):
        det = (a * d - b * c) % p
        if det == 0:
            continue
        di = pow(det, -1, p)
        gs.append(((a, b), (c, d)))
        invs.append(((d * di % p, -b * di % p), (-c * di % p, a * di % p)))
    return np.array(gs, dtype=np.int64), np.array(invs, dtype=np.int64)


def orbit_images(T, p, coalgebra=False):
    """``images[n, g]`` = tensor n rewritten in the basis given by the rows of g."""
    G, H = general_linear(p)
    T = np.asarray(T, dtype=np.int64).reshape(-1, DIM, DIM, DIM)
    if coalgebra:
        return np.einsum("gai,nijk,gjb,gkc->ngabc", G, T, H, H, optimize=True) % p
    return np.einsum("gai,gbj,nijk,gkc->ngabc", G, G, T, H, optimize=True) % p


def canonical_codes(T, p, coalgebra=False):
    """Minimal code over each tensor's orbit, and the orbit size."""
    T = np.asarray(T, dtype=np.int64).reshape(-1, DIM, DIM, DIM)
    G = len(general_linear(p)[0])
    step = max(1, CHUNK // G)
    mins, sizes = [], []
    for i in range(0, len(T), step):
        imgs = orbit_images(T[i:i + step], p, coalgebra)
        codes = encode(imgs.reshape(-1, DIM, DIM, DIM), p).reshape(len(imgs), G)
        mins.append(codes.min(axis=1))
        codes.sort(axis=1)
        sizes.append(1 + (np.diff(codes, axis=1) != 0).sum(axis=1))
    if not mins:
        return np.zeros(0, dtype=np.int64), np.zeros(0, dtype=np.int64)
    return np.concatenate(mins), np.concatenate(sizes)
