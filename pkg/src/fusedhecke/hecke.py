"""The Hecke algebra H_m(q) at a specialised rational q.

Elements are finitely supported maps from permutations (standard basis
indices) to exact rationals.  Multiplication decomposes the left factor into
canonical reduced words and applies the straightening rule

    sigma_i * sigma_w = sigma_{s_i w}                     if the length goes up,
    sigma_i * sigma_w = sigma_{s_i w} + (q - 1/q) sigma_w otherwise,

term by term, so no multiplication table is ever stored.  Zero coefficients
are pruned eagerly and equality of elements is structural.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .errors import DomainError, ParameterError, PoleError, ResourceError
from .permutations import (
    Perm,
    all_permutations,
    identity,
    length,
    max_strands,
    perm_from_str,
    reduced_word,
    simple_transposition,
)
from .qnumbers import as_fraction, format_rational, q_factorial, q_int


def _check_strands(m: int):
    if m < 1:
        raise DomainError("strand count must be positive")
    bound = max_strands()
    if m > bound:
        raise ResourceError(
            f"{m} strands exceeds the bound {bound} "
            "(override with FUSED_HECKE_MAX_STRANDS)"
        )


class HeckeElement:
    """A sparse element of H_m(q) in the standard basis."""

    __slots__ = ("m", "q", "terms")

    def __init__(self, m: int, q, terms=None):
        _check_strands(m)
        self.m = m
        self.q = as_fraction(q)
        if self.q == 0:
            raise ParameterError("q must be nonzero")
        clean = {}
        for w, c in (terms or {}).items():
            c = as_fraction(c)
            if c:
                if len(w) != m:
                    raise DomainError(f"term {w} has wrong strand count")
                clean[w] = c
        self.terms = clean

    # -- linear structure ---------------------------------------------------

    def _compat(self, other: "HeckeElement"):
        if self.m != other.m or self.q != other.q:
            raise DomainError("elements live in different algebras")

    def __add__(self, other):
        self._compat(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            v = out.get(w)
            s = c if v is None else v + c
            if s:
                out[w] = s
            elif v is not None:
                del out[w]
        return _raw(self.m, self.q, out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return _raw(self.m, self.q, {w: -c for w, c in self.terms.items()})

    def scale(self, c) -> "HeckeElement":
        c = as_fraction(c)
        if not c:
            return _raw(self.m, self.q, {})
        return _raw(self.m, self.q, {w: c * x for w, x in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, HeckeElement):
            return multiply(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __truediv__(self, other):
        return self.scale(1 / as_fraction(other))

    def __eq__(self, other):
        return (
            isinstance(other, HeckeElement)
            and self.m == other.m
            and self.q == other.q
            and self.terms == other.terms
        )

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return f"HeckeElement(m={self.m}, q={self.q}, {len(self.terms)} terms)"

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, w: Perm) -> Fraction:
        return self.terms.get(tuple(w), Fraction(0))

    def sorted_terms(self):
        return sorted(self.terms.items())


def _raw(m, q, terms) -> HeckeElement:
    """Internal constructor: terms already pruned and validated."""
    x = HeckeElement.__new__(HeckeElement)
    x.m = m
    x.q = q
    x.terms = terms
    return x


# -- basis constructors -----------------------------------------------------


def zero(m: int, q) -> HeckeElement:
    return HeckeElement(m, q, {})


def unit(m: int, q) -> HeckeElement:
    """The basis element at the identity permutation."""
    return HeckeElement(m, q, {identity(m): Fraction(1)})


def generator(i: int, m: int, q) -> HeckeElement:
    """The standard generator sigma_{s_i}."""
    return HeckeElement(m, q, {simple_transposition(i, m): Fraction(1)})


def basis_element(w: Perm, m: int, q) -> HeckeElement:
    return HeckeElement(m, q, {tuple(w): Fraction(1)})


# -- multiplication ---------------------------------------------------------


def left_mul_generator(i: int, x: HeckeElement) -> HeckeElement:
    """sigma_i * x expanded in the standard basis."""
    if not 1 <= i <= x.m - 1:
        raise DomainError(f"generator index {i} out of range for m={x.m}")
    lam = x.q - 1 / x.q
    j = i + 1
    if not lam:
        return _raw(
            x.m,
            x.q,
            {
                tuple(j if v == i else i if v == j else v for v in w): c
                for w, c in x.terms.items()
            },
        )
    out = {}
    for w, c in x.terms.items():
        # s_i * w swaps the values i, i+1; length goes up iff i occurs first
        pi = w.index(i)
        pj = w.index(j)
        lst = list(w)
        lst[pi], lst[pj] = j, i
        sw = tuple(lst)
        v = out.get(sw)
        s = c if v is None else v + c
        if s:
            out[sw] = s
        elif v is not None:
            del out[sw]
        if lam and pi > pj:
            v = out.get(w)
            s = lam * c if v is None else v + lam * c
            if s:
                out[w] = s
            elif v is not None:
                del out[w]
    return _raw(x.m, x.q, out)


def right_mul_generator(x: HeckeElement, i: int) -> HeckeElement:
    """x * sigma_i expanded in the standard basis."""
    if not 1 <= i <= x.m - 1:
        raise DomainError(f"generator index {i} out of range for m={x.m}")
    lam = x.q - 1 / x.q
    i0 = i - 1
    if not lam:
        # q**2 == 1: the product is a bijective re-keying of the support
        return _raw(
            x.m,
            x.q,
            {w[:i0] + (w[i0 + 1], w[i0]) + w[i0 + 2 :]: c for w, c in x.terms.items()},
        )
    out = {}
    for w, c in x.terms.items():
        # w * s_i swaps the entries at positions i, i+1
        ws = w[:i0] + (w[i0 + 1], w[i0]) + w[i0 + 2 :]
        v = out.get(ws)
        s = c if v is None else v + c
        if s:
            out[ws] = s
        elif v is not None:
            del out[ws]
        if lam and w[i0] > w[i0 + 1]:
            v = out.get(w)
            s = lam * c if v is None else v + lam * c
            if s:
                out[w] = s
            elif v is not None:
                del out[w]
    return _raw(x.m, x.q, out)


def multiply(a: HeckeElement, b: HeckeElement) -> HeckeElement:
    """Product a * b: fold the canonical reduced words of a over b."""
    a._compat(b)
    total: dict = {}
    classical = a.q == 1 or a.q == -1
    for w, c in a.terms.items():
        if classical:
            y = _raw(b.m, b.q, {tuple(w[t - 1] for t in v): cv
                                for v, cv in b.terms.items()})
        else:
            y = b
            for idx in reversed(reduced_word(w)):
                y = left_mul_generator(idx, y)
        for wy, cy in y.terms.items():
            v = total.get(wy)
            s = c * cy if v is None else v + c * cy
            if s:
                total[wy] = s
            elif v is not None:
                del total[wy]
    return _raw(a.m, a.q, total)


def mul_basis_right(x: HeckeElement, w: Perm) -> HeckeElement:
    """x * sigma_w via the reduced word of w."""
    w = tuple(w)
    if x.q == 1 or x.q == -1:
        # basis products are group multiplications when q**2 == 1
        return _raw(
            x.m, x.q, {tuple(v[t - 1] for t in w): c for v, c in x.terms.items()}
        )
    for idx in reduced_word(w):
        x = right_mul_generator(x, idx)
    return x


def mul_element_right(x: HeckeElement, y: HeckeElement) -> HeckeElement:
    """x * y decomposing the right factor; used on structured right factors."""
    x._compat(y)
    total: dict = {}
    for w, c in y.terms.items():
        z = mul_basis_right(x, w)
        for wz, cz in z.terms.items():
            v = total.get(wz)
            s = c * cz if v is None else v + c * cz
            if s:
                total[wz] = s
            elif v is not None:
                del total[wz]
    return _raw(x.m, x.q, total)


# -- embeddings and baxterised generators ------------------------------------


def embed_shift(x: HeckeElement, offset: int, new_m: int) -> HeckeElement:
    """Image of x under sigma_i -> sigma_{i+offset} into H_{new_m}(q)."""
    if offset < 0 or x.m + offset > new_m:
        raise DomainError(
            f"cannot embed {x.m} strands with offset {offset} into {new_m}"
        )
    _check_strands(new_m)
    head = tuple(range(1, offset + 1))
    tail = tuple(range(offset + x.m + 1, new_m + 1))
    out = {}
    for w, c in x.terms.items():
        out[head + tuple(v + offset for v in w) + tail] = c
    return _raw(new_m, x.q, out)


def r_check_generator(i: int, u, m: int, q) -> HeckeElement:
    """The baxterised generator sigma_i - (q - 1/q)/(1 - u)."""
    q = as_fraction(q)
    u = as_fraction(u)
    if u == 1:
        raise PoleError("baxterised generator has a pole at u = 1")
    x = generator(i, m, q)
    c = (q - 1 / q) / (1 - u)
    return x - unit(m, q).scale(c)


def mul_r_check_right(x: HeckeElement, i: int, u) -> HeckeElement:
    """x * (sigma_i - (q - 1/q)/(1 - u)); the workhorse of fusion products."""
    u = as_fraction(u)
    if u == 1:
        raise PoleError(f"baxterised factor at strand {i}: spectral argument 1")
    c = (x.q - 1 / x.q) / (1 - u)
    y = right_mul_generator(x, i)
    return y - x.scale(c) if c else y


# -- q-symmetrisers ----------------------------------------------------------


@lru_cache(maxsize=None)
def symmetriser_sum(i: int, j: int, m: int, q) -> HeckeElement:
    """Partial q-symmetriser on strands i..j by the weighted sum formula:

        S_[i,j] = q^{-r(r-1)/2} / [r]_q!  *  sum_w q^{length(w)} sigma_w,

    with r = j - i + 1 and w ranging over the permutations of {i, ..., j}.
    The degenerate interval i == j gives the unit.
    """
    q = as_fraction(q)
    if not 1 <= i <= j <= m:
        raise DomainError(f"invalid symmetriser interval [{i},{j}] in H_{m}")
    r = j - i + 1
    if r == 1:
        return unit(m, q)
    fact = q_factorial(r, q)
    if fact == 0:
        raise ParameterError(f"[{r}]_q! vanishes at q={q}")
    pref = q ** (-(r * (r - 1)) // 2) / fact
    head = tuple(range(1, i))
    tail = tuple(range(j + 1, m + 1))
    terms = {}
    for wp in all_permutations(r):
        w = head + tuple(v + i - 1 for v in wp) + tail
        terms[w] = pref * q ** length(wp)
    return _raw(m, q, terms)


def mul_symmetriser_right(x: HeckeElement, i: int, j: int) -> HeckeElement:
    """x * S_[i,j], applied term by term from the sum formula.

    Total wherever the algebra is defined (works at q**2 == 1, where the
    factorised formula has poles).
    """
    s = symmetriser_sum(i, j, x.m, x.q)
    return mul_element_right(x, s)


def mul_symmetriser_left(x: HeckeElement, i: int, j: int) -> HeckeElement:
    """S_[i,j] * x, applied term by term from the sum formula."""
    s = symmetriser_sum(i, j, x.m, x.q)
    return multiply(s, x)


def symmetriser_product(i: int, j: int, m: int, q) -> HeckeElement:
    """Partial q-symmetriser by the ordered product of baxterised generators:

        S_[i,j] = 1/[r]_q! * prod_{a=i..j-1} R_a(q^{2(a-i+1)}) ... R_i(q^2),

    the factors within each group running down to index i.  Fails with a
    pole error at q**2 == 1 (all spectral arguments degenerate to 1).
    """
    q = as_fraction(q)
    if not 1 <= i <= j <= m:
        raise DomainError(f"invalid symmetriser interval [{i},{j}] in H_{m}")
    x = unit(m, q)
    for a in range(i, j):
        for t in range(a - i + 1):
            x = mul_r_check_right(x, a - t, q ** (2 * (a - i + 1 - t)))
    return x / q_factorial(j - i + 1, q)


def symmetriser_recursion_check(i: int, j: int, m: int, q) -> bool:
    """Exact check of the one-step symmetriser recursion

        S_[i,j+1] = 1/[j-i+2]_q * sum_{a=i..j+1} q^{i-a}
                        sigma_a sigma_{a+1} ... sigma_j S_[i,j],

    where the word is empty for a = j+1.  The denominator is the q-integer
    of the grown interval size (j - i + 2), and the summand exponents count
    down from 0; both were pinned down by exact comparison against the sum
    formula.
    """
    q = as_fraction(q)
    if not 1 <= i <= j < m:
        raise DomainError(f"recursion needs 1 <= i <= j < m, got [{i},{j}]")
    lhs = symmetriser_sum(i, j + 1, m, q)
    s = symmetriser_sum(i, j, m, q)
    rhs = zero(m, q)
    for a in range(i, j + 2):
        y = s
        for idx in range(j, a - 1, -1):
            y = left_mul_generator(idx, y)
        rhs = rhs + y.scale(q ** (i - a))
    rhs = rhs / q_int(j - i + 2, q)
    return lhs == rhs


# -- serialization -----------------------------------------------------------


def element_to_obj(x: HeckeElement) -> dict:
    """JSON-ready form: terms sorted by lexicographic permutation order."""
    return {
        "strands": x.m,
        "q": format_rational(x.q),
        "terms": [
            {"perm": list(w), "coeff": format_rational(c)}
            for w, c in x.sorted_terms()
        ],
    }


def element_from_obj(obj: dict) -> HeckeElement:
    m = int(obj["strands"])
    q = as_fraction(obj["q"])
    terms = {}
    for entry in obj["terms"]:
        w = perm_from_str("[" + ",".join(str(v) for v in entry["perm"]) + "]")
        terms[w] = as_fraction(entry["coeff"])
    return HeckeElement(m, q, terms)
