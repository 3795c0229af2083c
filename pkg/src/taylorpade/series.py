"""Truncated multivariate polynomial arithmetic over a prime field.

A TruncatedPoly keeps every coefficient of total degree <= bound as a dense
int64 vector aligned with monomials(n, 0, bound) (degree-ascending order).
Products drop all terms beyond the bound; reciprocals are computed by exact
degree-by-degree recursion, so 1/Q truncated at order m is the honest
Taylor expansion.
"""

from __future__ import annotations

import re
from functools import lru_cache

import numpy as np

from . import monomials as mono
from .linalg import DEFAULT_PRIME


class TruncatedPoly:
    """Polynomial of total degree <= bound with coefficients in Z/p."""

    __slots__ = ("n", "bound", "p", "coeffs")

    def __init__(self, n: int, bound: int, p: int = DEFAULT_PRIME, coeffs=None):
        self.n = int(n)
        self.bound = int(bound)
        self.p = int(p)
        if self.n < 1 or self.bound < 0:
            raise ValueError("need n >= 1 and bound >= 0")
        size = mono.count_monomials(self.n, 0, self.bound)
        if coeffs is None:
            self.coeffs = np.zeros(size, dtype=np.int64)
        else:
            arr = np.asarray(coeffs, dtype=np.int64) % self.p
            if arr.shape != (size,):
                raise ValueError(f"coefficient vector must have length {size}")
            self.coeffs = arr

    @classmethod
    def one(cls, n, bound, p=DEFAULT_PRIME):
        out = cls(n, bound, p)
        out.coeffs[0] = 1
        return out

    @classmethod
    def from_terms(cls, n, bound, p, terms: dict) -> "TruncatedPoly":
        out = cls(n, bound, p)
        pos = mono.position_map(n, 0, bound)
        for g, c in terms.items():
            g = tuple(int(x) for x in g)
            if g not in pos:
                raise ValueError(f"exponent {g} outside degree bound {bound}")
            out.coeffs[pos[g]] = (out.coeffs[pos[g]] + int(c)) % p
        return out

    # -- accessors ---------------------------------------------------------

    @property
    def constant_term(self) -> int:
        return int(self.coeffs[0])

    def coeff(self, exponent) -> int:
        pos = mono.position_map(self.n, 0, self.bound)
        g = tuple(int(x) for x in exponent)
        if g not in pos:
            return 0
        return int(self.coeffs[pos[g]])

    def as_dict(self) -> dict:
        mons = mono.monomials(self.n, 0, self.bound)
        return {g: int(c) for g, c in zip(mons, self.coeffs) if c}

    def degree_slice(self, k: int) -> slice:
        offs = mono.degree_offsets(self.n, self.bound)
        return slice(offs[k], offs[k + 1])

    def graded_component(self, k: int, bound: int | None = None) -> "TruncatedPoly":
        """The homogeneous degree-k part, as a polynomial of the given bound."""
        if bound is None:
            bound = self.bound
        out = TruncatedPoly(self.n, bound, self.p)
        if 0 <= k <= min(self.bound, bound):
            out.coeffs[out.degree_slice(k)] = self.coeffs[self.degree_slice(k)]
        return out

    def resized(self, bound: int) -> "TruncatedPoly":
        """Same series with the degree bound padded or cut (terms beyond drop)."""
        size = mono.count_monomials(self.n, 0, bound)
        out = TruncatedPoly(self.n, bound, self.p)
        keep = min(size, self.coeffs.shape[0])
        out.coeffs[:keep] = self.coeffs[:keep]
        return out

    def is_zero(self) -> bool:
        return not self.coeffs.any()

    def copy(self) -> "TruncatedPoly":
        return TruncatedPoly(self.n, self.bound, self.p, self.coeffs.copy())

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedPoly):
            return NotImplemented
        return (
            self.n == other.n
            and self.bound == other.bound
            and self.p == other.p
            and bool(np.array_equal(self.coeffs, other.coeffs))
        )

    def __hash__(self):
        return hash((self.n, self.bound, self.p, self.coeffs.tobytes()))

    def __repr__(self):
        return f"TruncatedPoly(n={self.n}, bound={self.bound}, {format_poly(self)!r})"


@lru_cache(maxsize=None)
def _mul_table(n: int, bound: int):
    """Index triples (i, j, k) with mons[i] + mons[j] = mons[k], degree <= bound."""
    offs = mono.degree_offsets(n, bound)
    mons = mono.monomials(n, 0, bound)
    pos = mono.position_map(n, 0, bound)
    left, right, target = [], [], []
    for da in range(bound + 1):
        for db in range(bound + 1 - da):
            for i in range(offs[da], offs[da + 1]):
                a = mons[i]
                for j in range(offs[db], offs[db + 1]):
                    b = mons[j]
                    left.append(i)
                    right.append(j)
                    target.append(pos[tuple(x + y for x, y in zip(a, b))])
    out = (
        np.array(left, dtype=np.int64),
        np.array(right, dtype=np.int64),
        np.array(target, dtype=np.int64),
    )
    for arr in out:
        arr.setflags(write=False)
    return out


def _check_compatible(a: TruncatedPoly, b: TruncatedPoly):
    if a.n != b.n:
        raise ValueError("variable count mismatch")
    if a.p != b.p:
        raise ValueError("coefficient field mismatch")


def multiply_truncated(a: TruncatedPoly, b: TruncatedPoly, bound: int | None = None) -> TruncatedPoly:
    """Coefficients of a*b through total degree `bound`; higher terms dropped."""
    _check_compatible(a, b)
    if bound is None:
        bound = max(a.bound, b.bound)
    aa = a.resized(bound)
    bb = b.resized(bound)
    left, right, target = _mul_table(a.n, bound)
    prods = aa.coeffs[left] * bb.coeffs[right] % a.p
    out = np.zeros(mono.count_monomials(a.n, 0, bound), dtype=np.int64)
    # each target bucket collects < (bound+1)^n products already reduced below p,
    # so the int64 accumulator cannot overflow
    np.add.at(out, target, prods)
    out %= a.p
    return TruncatedPoly(a.n, bound, a.p, out)


def reciprocal_truncated(a: TruncatedPoly, bound: int | None = None) -> TruncatedPoly:
    """R with a*R = 1 through total degree `bound`; requires a(0) = 1."""
    if bound is None:
        bound = a.bound
    if a.constant_term != 1:
        raise ValueError("reciprocal requires constant term 1")
    aa = a.resized(bound)
    out = TruncatedPoly.one(a.n, bound, a.p)
    offs = mono.degree_offsets(a.n, bound)
    for k in range(1, bound + 1):
        t = multiply_truncated(aa, out, bound)
        s = slice(offs[k], offs[k + 1])
        out.coeffs[s] = (-t.coeffs[s]) % a.p
    return out


def taylor_quotient(num: TruncatedPoly, den: TruncatedPoly, m: int) -> TruncatedPoly:
    """Order-m truncation of num/den; requires den(0) = 1."""
    _check_compatible(num, den)
    return multiply_truncated(num, reciprocal_truncated(den, m), m)


def random_unit_poly(n: int, deg: int, rng, p: int = DEFAULT_PRIME) -> TruncatedPoly:
    """Constant term 1, every other coefficient of degree <= deg uniform in Z/p."""
    out = TruncatedPoly(n, deg, p)
    out.coeffs[:] = rng.integers(0, p, size=out.coeffs.shape[0], dtype=np.int64)
    out.coeffs[0] = 1
    return out


def random_form(n: int, deg: int, rng, p: int = DEFAULT_PRIME) -> TruncatedPoly:
    """Homogeneous of degree exactly deg with uniform coefficients; deg >= 1."""
    if deg < 1:
        raise ValueError("a form must have degree >= 1")
    out = TruncatedPoly(n, deg, p)
    s = out.degree_slice(deg)
    out.coeffs[s] = rng.integers(0, p, size=s.stop - s.start, dtype=np.int64)
    return out


# -- text format ------------------------------------------------------------

_FACTOR = re.compile(r"^x(\d+)(?:\^(\d+))?$")


def parse_poly(text: str, n: int, bound: int, p: int = DEFAULT_PRIME) -> TruncatedPoly:
    """Parse `coeff*x1^a1*...*xn^an` terms joined by `+`.

    `^1` and unit coefficients may be omitted; a term may carry a leading
    minus sign.  Variables are x1..xn.
    """
    terms: dict = {}
    for raw in text.split("+"):
        raw = raw.strip()
        if not raw:
            raise ValueError("empty term")
        sign = 1
        if raw.startswith("-"):
            sign = -1
            raw = raw[1:].strip()
        coeff = 1
        exp = [0] * n
        for factor in raw.split("*"):
            factor = factor.strip()
            if not factor:
                raise ValueError(f"malformed term {raw!r}")
            hit = _FACTOR.match(factor)
            if hit:
                i = int(hit.group(1))
                if not 1 <= i <= n:
                    raise ValueError(f"variable x{i} out of range 1..{n}")
                exp[i - 1] += int(hit.group(2) or 1)
            else:
                try:
                    coeff *= int(factor)
                except ValueError:
                    raise ValueError(f"bad factor {factor!r}") from None
        if sum(exp) > bound:
            raise ValueError(f"term {raw!r} exceeds degree bound {bound}")
        key = tuple(exp)
        terms[key] = terms.get(key, 0) + sign * coeff
    return TruncatedPoly.from_terms(n, bound, p, terms)


def format_poly(poly: TruncatedPoly) -> str:
    mons = mono.monomials(poly.n, 0, poly.bound)
    parts = []
    for g, c in zip(mons, poly.coeffs):
        c = int(c)
        if c == 0:
            continue
        if not any(g):
            parts.append(str(c))
            continue
        factors = "*".join(
            f"x{i + 1}" + (f"^{e}" if e > 1 else "") for i, e in enumerate(g) if e
        )
        parts.append(factors if c == 1 else f"{c}*{factors}")
    return " + ".join(parts) if parts else "0"
