"""Matrix representations on tensor powers of V and on quantum symmetric
powers W = S_q^k(V).

The Hecke algebra acts on V^(tensor m) through the standard R-matrix at each
pair of adjacent slots; W is carried by the (unnormalised) symmetriser images
of the nondecreasing basis tensors, and the braiding operators on W tensor W
are extracted by an exact change-of-basis solve.  All matrices are numpy
object arrays over exact rationals.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

import numpy as np

from . import linalg
from .errors import DomainError, ParameterError, ResourceError
from .fused import (
    VerifyResult,
    baxter_coefficients,
    braiding_word,
    classical_coefficients,
)
from .hecke import HeckeElement
from .permutations import all_permutations, length, reduced_word
from .qnumbers import as_fraction, format_rational, q_factorial

MAX_TENSOR_DIM = 6561
MAX_YBE_DIM = 4096


# -- sparse vectors on V^(tensor m) -------------------------------------------

# a vector is a dict {multi-index tuple: Fraction}; letters run 1..N


def _apply_gen(vec: dict, pos: int, q) -> dict:
    """Apply the standard R-matrix at tensor slots (pos, pos+1)."""
    lam = q - 1 / q
    p0 = pos - 1
    out = {}

    def add(key, val):
        cur = out.get(key)
        s = val if cur is None else cur + val
        if s:
            out[key] = s
        elif cur is not None:
            del out[key]

    for idx, c in vec.items():
        a, b = idx[p0], idx[p0 + 1]
        if a == b:
            add(idx, q * c)
        else:
            swapped = idx[:p0] + (b, a) + idx[p0 + 2 :]
            add(swapped, c)
            if a < b:
                add(idx, lam * c)
    return out


def _apply_word(vec: dict, word, q) -> dict:
    """Apply the operator sigma_{word} (word read left to right)."""
    for a in reversed(word):
        vec = _apply_gen(vec, a, q)
    return vec


def _apply_symmetriser(vec: dict, i: int, j: int, q) -> dict:
    """Apply the q-symmetriser on slots i..j (sum formula)."""
    r = j - i + 1
    if r == 1:
        return vec
    pref = q ** (-(r * (r - 1)) // 2) / q_factorial(r, q)
    out = {}
    for wp in all_permutations(r):
        word = tuple(a + i - 1 for a in reduced_word(wp))
        coeff = pref * q ** length(wp)
        img = _apply_word(vec, word, q)
        for key, val in img.items():
            cur = out.get(key)
            s = coeff * val if cur is None else cur + coeff * val
            if s:
                out[key] = s
            elif cur is not None:
                del out[key]
    return out


def _apply_element(vec: dict, x: HeckeElement) -> dict:
    """Apply a Hecke algebra element (acting on m = x.m tensor slots)."""
    out = {}
    for w, c in x.terms.items():
        img = _apply_word(vec, reduced_word(w), x.q)
        for key, val in img.items():
            cur = out.get(key)
            s = c * val if cur is None else cur + c * val
            if s:
                out[key] = s
            elif cur is not None:
                del out[key]
    return out


def _multi_indices(N: int, m: int):
    return list(itertools.product(range(1, N + 1), repeat=m))


def _vec_to_column(vec: dict, index_of: dict) -> list:
    col = [Fraction(0)] * len(index_of)
    for key, val in vec.items():
        col[index_of[key]] = val
    return col


# -- representations -----------------------------------------------------------


def hecke_rmatrix(N: int, q) -> np.ndarray:
    """The standard R-matrix on V tensor V, basis e_i tensor e_j ordered
    lexicographically, acting on column vectors."""
    q = as_fraction(q)
    if N < 2:
        raise ParameterError("need N >= 2")
    if q == 0:
        raise ParameterError("q must be nonzero")
    idxs = _multi_indices(N, 2)
    index_of = {t: r for r, t in enumerate(idxs)}
    mat = linalg.zeros(N * N, N * N)
    for c, idx in enumerate(idxs):
        img = _apply_gen({idx: Fraction(1)}, 1, q)
        for key, val in img.items():
            mat[index_of[key], c] = val
    return mat


def represent(x: HeckeElement, N: int) -> np.ndarray:
    """Matrix of x on V^(tensor m) with the local R-matrix action."""
    dim = N**x.m
    if dim > MAX_TENSOR_DIM:
        raise ResourceError(f"V^(tensor {x.m}) has dimension {dim} > {MAX_TENSOR_DIM}")
    idxs = _multi_indices(N, x.m)
    index_of = {t: r for r, t in enumerate(idxs)}
    mat = linalg.zeros(dim, dim)
    for c, idx in enumerate(idxs):
        img = _apply_element({idx: Fraction(1)}, x)
        for key, val in img.items():
            mat[index_of[key], c] = val
    return mat


@dataclass(frozen=True)
class WBasis:
    """Basis of the quantum symmetric power W = S_q^k(V): the symmetriser
    images of the nondecreasing basis tensors, in lexicographic order and
    without further normalisation."""

    k: int
    N: int
    q: Fraction
    indices: tuple
    columns: tuple  # sparse dicts over multi-indices, one per basis vector

    @property
    def dim(self) -> int:
        return len(self.indices)

    def matrix(self) -> np.ndarray:
        idxs = _multi_indices(self.N, self.k)
        index_of = {t: r for r, t in enumerate(idxs)}
        mat = linalg.zeros(len(idxs), self.dim)
        for c, vec in enumerate(self.columns):
            for key, val in vec.items():
                mat[index_of[key], c] = val
        return mat


@lru_cache(maxsize=None)
def w_basis(k: int, N: int, q) -> WBasis:
    q = as_fraction(q)
    if N**k > MAX_TENSOR_DIM:
        raise ResourceError("symmetric power exceeds the tensor bound")
    indices = [
        t for t in _multi_indices(N, k) if all(t[a] <= t[a + 1] for a in range(k - 1))
    ]
    columns = []
    for t in indices:
        columns.append(_apply_symmetriser({t: Fraction(1)}, 1, k, q))
    wb = WBasis(k, N, q, tuple(indices), tuple(columns))
    expected = comb(k + N - 1, k)
    if wb.dim != expected or linalg.rank(wb.matrix()) != expected:
        raise RuntimeError(
            f"symmetric power basis degenerate for k={k}, N={N}, q={q}"
        )
    return wb


@lru_cache(maxsize=None)
def _pair_basis(k: int, N: int, q):
    """Basis matrix of W tensor W inside V^(tensor 2k), plus the pair list."""
    wb = w_basis(k, N, q)
    pairs = [(a, b) for a in range(wb.dim) for b in range(wb.dim)]
    idxs = _multi_indices(N, 2 * k)
    index_of = {t: r for r, t in enumerate(idxs)}
    mat = linalg.zeros(len(idxs), len(pairs))
    cols = []
    for (a, b) in pairs:
        vec = {}
        for ka, va in wb.columns[a].items():
            for kb, vb in wb.columns[b].items():
                vec[ka + kb] = va * vb
        cols.append(vec)
        for key, val in vec.items():
            mat[index_of[key], len(cols) - 1] = val
    return wb, pairs, index_of, mat, cols


@lru_cache(maxsize=None)
def sigma_matrix(k: int, p: int, N: int, q) -> np.ndarray:
    """Matrix of the order-p partial braiding on W tensor W, in the basis
    w_a tensor w_b ordered lexicographically.

    Computed by applying the sandwiched operator (symmetrisers, braiding
    word, symmetrisers) on V^(tensor 2k) and solving exactly for the
    coordinates in the W tensor W basis; raises if an image ever leaves the
    span, which no admissible parameter can trigger.
    """
    q = as_fraction(q)
    if not 0 <= p <= k:
        raise DomainError(f"braiding order p={p} out of range 0..{k}")
    if N ** (2 * k) > MAX_TENSOR_DIM:
        raise ResourceError("V^(tensor 2k) exceeds the tensor bound")
    wb, pairs, index_of, basis_mat, cols = _pair_basis(k, N, q)
    word = braiding_word(k, k, p)
    images = linalg.zeros(N ** (2 * k), len(pairs))
    for c, vec in enumerate(cols):
        img = _apply_symmetriser(vec, 1, k, q)
        img = _apply_symmetriser(img, k + 1, 2 * k, q)
        img = _apply_word(img, word, q)
        img = _apply_symmetriser(img, 1, k, q)
        img = _apply_symmetriser(img, k + 1, 2 * k, q)
        for key, val in img.items():
            images[index_of[key], c] = val
    return linalg.solve_exact(basis_mat, images)


def fused_R_matrix(k: int, N: int, u, q) -> np.ndarray:
    """The baxterised solution on W tensor W: sum_p a_p(u) sigma_matrix(p)."""
    q = as_fraction(q)
    u = as_fraction(u)
    coeffs = baxter_coefficients(k, k, u, q)
    d = comb(k + N - 1, k) ** 2
    out = linalg.zeros(d, d)
    for p, a in enumerate(coeffs.values):
        out = out + sigma_matrix(k, p, N, q) * a
    return out


def classical_fused_R_matrix(k: int, N: int, mu) -> np.ndarray:
    """The additive-parameter solution at q = 1 with the classical
    coefficients over the same partial-braiding matrices."""
    coeffs = classical_coefficients(k, mu)
    d = comb(k + N - 1, k) ** 2
    out = linalg.zeros(d, d)
    for p, c in enumerate(coeffs):
        out = out + sigma_matrix(k, p, N, Fraction(1)) * c
    return out


def classical_sigma_direct(k: int, p: int, N: int) -> np.ndarray:
    """Independent q = 1 route to the partial braiding matrix: symmetrise,
    exchange the letter blocks (k-p+1..k) and (k+1..k+p) as a plain position
    permutation, symmetrise again."""
    one = Fraction(1)
    wb, pairs, index_of, basis_mat, cols = _pair_basis(k, N, one)
    perm = list(range(2 * k))
    for s in range(p):
        perm[k - p + s], perm[k + s] = perm[k + s], perm[k - p + s]
    images = linalg.zeros(N ** (2 * k), len(pairs))
    for c, vec in enumerate(cols):
        img = _apply_symmetriser(vec, 1, k, one)
        img = _apply_symmetriser(img, k + 1, 2 * k, one)
        img = { tuple(key[perm[t]] for t in range(2 * k)): val
                for key, val in img.items() }
        img = _apply_symmetriser(img, 1, k, one)
        img = _apply_symmetriser(img, k + 1, 2 * k, one)
        for key, val in img.items():
            images[index_of[key], c] = val
    return linalg.solve_exact(basis_mat, images)


def verify_matrix_ybe(k: int, N: int, u, v, q) -> VerifyResult:
    """Exact check of the braided relation on W^(tensor 3):

        (R(u) x I)(I x R(uv))(R(v) x I) = (I x R(v))(R(uv) x I)(I x R(u)).
    """
    q = as_fraction(q)
    u, v = as_fraction(u), as_fraction(v)
    d = comb(k + N - 1, k)
    if d**3 > MAX_YBE_DIM:
        raise ResourceError(f"W^(tensor 3) has dimension {d**3} > {MAX_YBE_DIM}")
    eye = linalg.identity(d)
    uv = u * v
    r_u = fused_R_matrix(k, N, u, q)
    r_uv = fused_R_matrix(k, N, uv, q)
    r_v = fused_R_matrix(k, N, v, q)
    lhs = linalg.matmul(
        linalg.matmul(linalg.kron(r_u, eye), linalg.kron(eye, r_uv)),
        linalg.kron(r_v, eye),
    )
    rhs = linalg.matmul(
        linalg.matmul(linalg.kron(eye, r_v), linalg.kron(r_uv, eye)),
        linalg.kron(eye, r_u),
    )
    diff = linalg.first_matrix_diff(lhs, rhs)
    return VerifyResult(diff is None, diff)


# -- serialization ---------------------------------------------------------------


def matrix_to_obj(mat: np.ndarray, k: int, N: int, q, u=None) -> dict:
    obj = {
        "k": k,
        "N": N,
        "q": format_rational(as_fraction(q)),
        "dim": int(mat.shape[0]),
        "matrix": [
            [format_rational(Fraction(v)) for v in row] for row in mat
        ],
    }
    if u is not None:
        obj["u"] = format_rational(as_fraction(u))
    return obj


def matrix_from_obj(obj: dict) -> np.ndarray:
    return linalg.fmat([[Fraction(v) for v in row] for row in obj["matrix"]])


def matrix_to_csv(mat: np.ndarray) -> str:
    lines = [",".join(format_rational(Fraction(v)) for v in row) for row in mat]
    return "\n".join(lines) + "\n"
