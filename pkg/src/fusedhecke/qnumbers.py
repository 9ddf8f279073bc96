"""Exact q-combinatorial scalars over arbitrary-precision rationals.

All coefficients in this package live in the field of rationals, represented
by `fractions.Fraction` (always in lowest terms, positive denominator).  The
deformation parameter q and the spectral parameters u, v are specialised to
nonzero rationals, which makes every identity downstream an exact boolean
question.

The classical point q**2 == 1 is handled as a genuine special case: the
q-numbers take their continuous limit values there instead of failing on
0/0.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import ParameterError

_RATIONAL_RE = re.compile(r"^[+-]?\d+(?:/[1-9]\d*)?$")


def as_fraction(x) -> Fraction:
    """Coerce an int, string or Fraction into a Fraction.

    Strings must match the serialization grammar "p" or "p/q" with the sign
    on the numerator only.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return parse_rational(x)
    raise ParameterError(f"cannot interpret {x!r} as an exact rational")


def parse_rational(text: str) -> Fraction:
    """Parse "p" or "p/q" (decimal digits, sign on the numerator only).

    >>> parse_rational("-3/7")
    Fraction(-3, 7)
    >>> parse_rational("12")
    Fraction(12, 1)
    """
    if not _RATIONAL_RE.match(text.strip()):
        raise ParameterError(f"not a rational in p/q form: {text!r}")
    return Fraction(text.strip())


def format_rational(x: Fraction) -> str:
    """Serialize a Fraction as "p" or "p/q" (sign on the numerator)."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def q_int(L: int, q) -> Fraction:
    """The q-number [L]_q = (q**L - q**-L) / (q - q**-1).

    At q**2 == 1 this returns the limit value L * q**(L-1).

    >>> q_int(3, Fraction(2))
    Fraction(21, 4)
    >>> q_int(4, 1), q_int(4, -1)
    (Fraction(4, 1), Fraction(-4, 1))
    """
    q = as_fraction(q)
    if q == 0:
        raise ParameterError("q must be nonzero")
    if L < 0:
        raise ParameterError("q_int needs L >= 0")
    if q * q == 1:
        return L * q ** (L - 1) if L else Fraction(0)
    return (q**L - q**-L) / (q - 1 / q)


def q_factorial(L: int, q) -> Fraction:
    """[L]_q! = [1]_q [2]_q ... [L]_q, with [0]_q! = 1."""
    q = as_fraction(q)
    out = Fraction(1)
    for r in range(1, L + 1):
        out *= q_int(r, q)
    return out


def q_binomial(L: int, p: int, q) -> Fraction:
    """The q-binomial [L]_q! / ([L-p]_q! [p]_q!).

    >>> q_binomial(2, 1, Fraction(2))
    Fraction(5, 2)
    >>> q_binomial(4, 2, 1)
    Fraction(6, 1)
    """
    q = as_fraction(q)
    if not 0 <= p <= L:
        raise ParameterError(f"q_binomial needs 0 <= p <= L, got L={L}, p={p}")
    denom = q_factorial(L - p, q) * q_factorial(p, q)
    if denom == 0:
        # unreachable for rational q != 0 (q-integers only vanish at other
        # roots of unity), kept as a guard for the stated precondition
        raise ParameterError("vanishing q-factorial in q_binomial denominator")
    return q_factorial(L, q) / denom


def q_pochhammer(a, q, p: int) -> Fraction:
    """(a; q)_p = prod_{r=0}^{p-1} (1 - a q**r), with (a; q)_0 = 1."""
    a = as_fraction(a)
    q = as_fraction(q)
    out = Fraction(1)
    for r in range(p):
        out *= 1 - a * q**r
    return out


def brace_int(L: int, q) -> Fraction:
    """The two-parameter count 1 + q**2 + ... + q**(2(L-1)).

    Equals (q**(2L) - 1)/(q**2 - 1) away from q**2 == 1, and L there.

    >>> brace_int(3, Fraction(2))
    Fraction(21, 1)
    """
    q = as_fraction(q)
    if q == 0:
        raise ParameterError("q must be nonzero")
    if q * q == 1:
        return Fraction(L)
    return (q ** (2 * L) - 1) / (q * q - 1)


@dataclass(frozen=True)
class ParamPoint:
    """A specialization (q, u[, v]) together with the largest fusion level
    k_bound it must support.

    Validation enforces q != 0, the non-degeneracy of 1 + q**2 + ... +
    q**(2(l-1)) for l = 2..k_bound (automatic over the rationals, checked
    anyway), and the pole-avoidance u, v != q**(2m) for |m| < k_bound.
    """

    q: Fraction
    u: Fraction | None = None
    v: Fraction | None = None
    k_bound: int = 1

    def __post_init__(self):
        object.__setattr__(self, "q", as_fraction(self.q))
        if self.u is not None:
            object.__setattr__(self, "u", as_fraction(self.u))
        if self.v is not None:
            object.__setattr__(self, "v", as_fraction(self.v))
        if self.k_bound < 1:
            raise ParameterError("k_bound must be a positive integer")
        if self.q == 0:
            raise ParameterError("q must be nonzero")
        for ell in range(2, self.k_bound + 1):
            if brace_int(ell, self.q) == 0:
                raise ParameterError(
                    f"degenerate q: 1 + q^2 + ... + q^(2({ell}-1)) vanishes"
                )
        for name in ("u", "v"):
            w = getattr(self, name)
            if w is None:
                continue
            for m in range(1 - self.k_bound, self.k_bound):
                if w == self.q ** (2 * m):
                    raise ParameterError(
                        f"spectral parameter {name} = q^(2*{m}) hits a pole"
                    )

    @property
    def is_classical(self) -> bool:
        return self.q * self.q == 1
