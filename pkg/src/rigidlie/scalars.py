"""Exact scalars over Q and Q(i), univariate polynomials, real-root counting.

Scalars are Gaussian rationals ``re + im*i`` with a field tag.  The tag is
``Q`` for values known to live in the rationals and ``QI`` once anything has
been extended to Q(i); arithmetic propagates the larger tag.
"""
from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import reduce
from typing import Iterable, Sequence

import numpy as np

from .errors import FieldError, NotSplitError, StructureError

Q = "Q"
QI = "Q(i)"
FIELDS = (Q, QI)


def join_fields(*fields: str) -> str:
    return QI if QI in fields else Q


def _format_rational(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


class Scalar:
    """Immutable Gaussian rational with a field tag."""

    __slots__ = ("re", "im", "field")

    def __init__(self, re=0, im=0, field=None):
        re = re if type(re) is Fraction else Fraction(re)
        im = im if type(im) is Fraction else Fraction(im)
        if field is None:
            field = Q if im == 0 else QI
        elif field not in FIELDS:
            raise FieldError(f"unknown field {field!r}")
        elif field == Q and im != 0:
            raise FieldError("a scalar tagged Q must have zero imaginary part")
        object.__setattr__(self, "re", re)
        object.__setattr__(self, "im", im)
        object.__setattr__(self, "field", field)

    @classmethod
    def _raw(cls, re: Fraction, im: Fraction, field: str) -> "Scalar":
        s = object.__new__(cls)
        object.__setattr__(s, "re", re)
        object.__setattr__(s, "im", im)
        object.__setattr__(s, "field", field)
        return s

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    # -- coercion ---------------------------------------------------------
    @staticmethod
    def coerce(x) -> "Scalar":
        if isinstance(x, Scalar):
            return x
        if isinstance(x, (int, Fraction)):
            return Scalar._raw(Fraction(x), Fraction(0), Q)
        if isinstance(x, str):
            return parse_scalar(x)
        raise TypeError(f"cannot interpret {x!r} as an exact scalar")

    def in_field(self, field: str) -> "Scalar":
        """Same value retagged; only widening Q -> Q(i) or lossless narrowing."""
        if field == self.field:
            return self
        if field == Q and self.im != 0:
            raise FieldError(f"{self} is not rational")
        return Scalar._raw(self.re, self.im, field)

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other):
        try:
            o = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        return Scalar._raw(self.re + o.re, self.im + o.im, join_fields(self.field, o.field))

    __radd__ = __add__

    def __neg__(self):
        return Scalar._raw(-self.re, -self.im, self.field)

    def __sub__(self, other):
        try:
            o = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        return Scalar._raw(self.re - o.re, self.im - o.im, join_fields(self.field, o.field))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            o = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        field = join_fields(self.field, o.field)
        if not self.im and not o.im:
            return Scalar._raw(self.re * o.re, Fraction(0), field)
        return Scalar._raw(
            self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re, field
        )

    __rmul__ = __mul__

    def norm(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def conjugate(self) -> "Scalar":
        return Scalar._raw(self.re, -self.im, self.field)

    def inverse(self) -> "Scalar":
        if not self:
            raise ZeroDivisionError("inverse of zero scalar")
        if not self.im:
            return Scalar._raw(1 / self.re, Fraction(0), self.field)
        n = self.norm()
        return Scalar._raw(self.re / n, -self.im / n, self.field)

    def __truediv__(self, other):
        try:
            o = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return Scalar.coerce(other) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = Scalar._raw(Fraction(1), Fraction(0), self.field)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- comparison -------------------------------------------------------
    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    @property
    def is_real(self) -> bool:
        return self.im == 0

    def sort_key(self):
        return (self.re, self.im)

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    # -- text -------------------------------------------------------------
    def __str__(self):
        if self.im == 0:
            return _format_rational(self.re)
        mag = abs(self.im)
        imag = "i" if mag == 1 else f"{_format_rational(mag)}*i"
        if self.re == 0:
            return imag if self.im > 0 else "-" + imag
        sign = "+" if self.im > 0 else "-"
        return f"{_format_rational(self.re)}{sign}{imag}"

    def __repr__(self):
        return f"Scalar('{self}', field='{self.field}')"


ZERO = Scalar(0)
ONE = Scalar(1)
I_UNIT = Scalar(0, 1)

_RAT = r"\d+(?:/\d+)?"
_SCALAR_RE = re.compile(
    rf"^(?P<re>[+-]?{_RAT})?"
    rf"(?:(?P<sign>[+-])?(?:(?P<im>{_RAT})\*)?i)?$"
)


def parse_scalar(text: str, field: str | None = None) -> Scalar:
    """Parse ``"p/q"`` or ``"a/b+c/d*i"`` forms (also ``"i"``, ``"-3*i"``)."""
    s = text.replace(" ", "")
    m = _SCALAR_RE.match(s)
    if not s or m is None or (m.group("re") is None and not s.endswith("i")):
        raise StructureError(f"cannot parse scalar {text!r}")
    re_part = Fraction(m.group("re")) if m.group("re") else Fraction(0)
    im_part = Fraction(0)
    if s.endswith("i"):
        if m.group("re") is not None and m.group("sign") is None:
            raise StructureError(f"cannot parse scalar {text!r}")
        im_part = Fraction(m.group("im")) if m.group("im") else Fraction(1)
        if m.group("sign") == "-":
            im_part = -im_part
    if field is None:
        field = Q if im_part == 0 else QI
    return Scalar(re_part, im_part, field)


def as_scalar(x, field: str | None = None) -> Scalar:
    s = Scalar.coerce(x)
    return s.in_field(field) if field is not None else s


# ---------------------------------------------------------------------------
# Polynomials
# ---------------------------------------------------------------------------


class Polynomial:
    """Dense univariate polynomial in T, coefficients lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [Scalar.coerce(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @classmethod
    def T(cls) -> "Polynomial":
        return cls([0, 1])

    @classmethod
    def constant(cls, c) -> "Polynomial":
        return cls([c])

    @classmethod
    def from_roots(cls, roots: Iterable) -> "Polynomial":
        p = cls([1])
        for r in roots:
            p = p * cls([-Scalar.coerce(r), 1])
        return p

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def field(self) -> str:
        return join_fields(*(c.field for c in self.coeffs)) if self.coeffs else Q

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def lc(self) -> Scalar:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction, Scalar)):
            return self == Polynomial([other])
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        other = _as_poly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (ZERO,) * (n - len(self.coeffs))
        b = other.coeffs + (ZERO,) * (n - len(other.coeffs))
        return Polynomial(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-_as_poly(other))

    def __rsub__(self, other):
        return _as_poly(other) - self

    def __mul__(self, other):
        other = _as_poly(other)
        if not self.coeffs or not other.coeffs:
            return Polynomial()
        out = [ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] = out[i + j] + a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = Polynomial([1])
        for _ in range(k):
            out = out * self
        return out

    def __divmod__(self, other):
        other = _as_poly(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        inv_lc = other.lc().inverse()
        quot = [ZERO] * max(len(rem) - dq, 0)
        for k in range(len(rem) - 1, dq - 1, -1):
            c = rem[k]
            if not c:
                continue
            f = c * inv_lc
            quot[k - dq] = f
            for j, b in enumerate(other.coeffs):
                rem[k - dq + j] = rem[k - dq + j] - f * b
        return Polynomial(quot), Polynomial(rem[:dq] if dq > 0 else [])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def derivative(self) -> "Polynomial":
        return Polynomial(c * k for k, c in enumerate(self.coeffs) if k)

    def monic(self) -> "Polynomial":
        if self.is_zero():
            return self
        inv = self.lc().inverse()
        return Polynomial(c * inv for c in self.coeffs)

    def __call__(self, x):
        x = Scalar.coerce(x)
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def in_field(self, field: str) -> "Polynomial":
        return Polynomial(c.in_field(field) for c in self.coeffs)

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            mono = "" if k == 0 else ("T" if k == 1 else f"T^{k}")
            cs = str(c)
            if c.re != 0 and c.im != 0:
                cs = f"({cs})"
            if mono:
                if c == 1:
                    cs = ""
                elif c == -1:
                    cs = "-"
                else:
                    cs = cs + "*"
            terms.append(cs + mono)
        out = "+".join(terms)
        return out.replace("+-", "-")

    def __repr__(self):
        return f"Polynomial('{self}')"


def _as_poly(x) -> Polynomial:
    return x if isinstance(x, Polynomial) else Polynomial([x])


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic gcd; gcd(0, 0) is the zero polynomial."""
    while b:
        a, b = b, a % b
    return a.monic()


def poly_lcm(a: Polynomial, b: Polynomial) -> Polynomial:
    if a.is_zero() or b.is_zero():
        return Polynomial()
    return (a * b // poly_gcd(a, b)).monic()


def squarefree_part(p: Polynomial) -> Polynomial:
    """Monic ``p / gcd(p, p')``: same roots, all simple."""
    if p.is_zero():
        raise ValueError("squarefree part of the zero polynomial is undefined")
    q, r = divmod(p, poly_gcd(p, p.derivative()))
    assert r.is_zero()
    return q.monic()


def is_squarefree(p: Polynomial) -> bool:
    return poly_gcd(p, p.derivative()).degree == 0


# ---------------------------------------------------------------------------
# Sturm sequences over the integers
# ---------------------------------------------------------------------------


def _integer_coeffs(p: Polynomial) -> list[int]:
    den = reduce(math.lcm, (c.re.denominator for c in p.coeffs), 1)
    ints = [int(c.re * den) for c in p.coeffs]
    g = reduce(math.gcd, ints, 0)
    return [c // g for c in ints]


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _prem(a: list[int], b: list[int]) -> list[int]:
    """Pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b."""
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    delta = len(a) - len(b) + 1
    for _ in range(delta):
        if len(r) - 1 < db:
            r = [c * lb for c in r]
            continue
        lr = r[-1]
        shift = len(r) - 1 - db
        r = [c * lb for c in r]
        for j, bc in enumerate(b):
            r[shift + j] -= lr * bc
        r.pop()
        _trim(r)
    return _trim(r)


def _sign(x: int) -> int:
    return (x > 0) - (x < 0)


def sturm_chain(p: Polynomial) -> list[list[int]]:
    """Sturm chain of ``p`` as primitive integer coefficient lists."""
    p0 = _trim(_integer_coeffs(p))
    p1 = _trim([k * c for k, c in enumerate(p0)][1:])
    chain = [p0]
    if p1:
        g = reduce(math.gcd, p1, 0)
        chain.append([c // g for c in p1])
    while len(chain) >= 2 and len(chain[-1]) > 1:
        a, b = chain[-2], chain[-1]
        r = _prem(a, b)
        if not r:
            break
        delta = len(a) - len(b)
        s = -(_sign(b[-1]) ** (delta + 1))
        g = reduce(math.gcd, r, 0)
        chain.append([s * c // g for c in r])
    return chain


def _variations(signs: Sequence[int]) -> int:
    nz = [s for s in signs if s]
    return sum(1 for x, y in zip(nz, nz[1:]) if x != y)


def sturm_real_root_count(p: Polynomial) -> int:
    """Number of distinct real roots of a rational polynomial."""
    if p.is_zero():
        raise ValueError("indeterminate root count: zero polynomial")
    if any(c.field != Q or c.im for c in p.coeffs):
        raise FieldError("real-root counting requires rational coefficients")
    chain = sturm_chain(p)
    at_pos = [_sign(c[-1]) for c in chain]
    at_neg = [_sign(c[-1]) * (-1) ** (len(c) - 1) for c in chain]
    return _variations(at_neg) - _variations(at_pos)


# ---------------------------------------------------------------------------
# Roots in Q or Q(i)
# ---------------------------------------------------------------------------


def _gaussian_lead_norm(p: Polynomial) -> int:
    den = reduce(
        math.lcm, (d for c in p.coeffs for d in (c.re.denominator, c.im.denominator)), 1
    )
    lead = p.lc() * den
    return int(lead.norm())


def split_roots(p: Polynomial, field: str | None = None):
    """Roots of ``p`` lying in ``field`` with multiplicities.

    Returns ``(roots, cofactor)`` where ``roots`` is a list of
    ``(Scalar, multiplicity)`` sorted by (re, im) and ``cofactor`` is the
    monic part of ``p`` without roots in the field (1 when ``p`` splits).

    Candidates come from floating-point roots of the squarefree part, snapped
    to the lattice that any Gaussian-rational root must lie on, and are then
    verified exactly.
    """
    if p.is_zero():
        raise ValueError("roots of the zero polynomial are undefined")
    field = field or p.field
    rest = p.monic()
    s = squarefree_part(rest)
    found = []
    if s.degree >= 1:
        n = max(_gaussian_lead_norm(s), 1)
        approx = np.roots([complex(c) for c in reversed(s.coeffs)])
        candidates = set()
        for z in approx:
            re_part = Fraction(round(z.real * n), n)
            im_part = Fraction(round(z.imag * n), n)
            if field == Q:
                im_part = Fraction(0)
            candidates.add(Scalar(re_part, im_part, join_fields(field, p.field)))
        for r in sorted(candidates, key=Scalar.sort_key):
            if s(r):
                continue
            lin = Polynomial([-r, 1])
            mult = 0
            while rest.degree >= 1:
                q, rem = divmod(rest, lin)
                if rem:
                    break
                rest = q
                mult += 1
            found.append((r.in_field(join_fields(field, r.field)), mult))
    return found, rest.monic()


def roots_in_field(p: Polynomial, field: str | None = None, element: str | None = None):
    """Like :func:`split_roots` but raises :class:`NotSplitError` if p does not split."""
    roots, cof = split_roots(p, field)
    if cof.degree >= 1:
        sq = squarefree_part(cof)
        what = "irreducible factor" if sq.degree <= 3 else "factor without roots in the field"
        where = f" of {element}" if element else ""
        raise NotSplitError(
            f"characteristic polynomial{where} does not split over {field or p.field}: "
            f"{what} {sq}",
            factor=sq,
            element=element,
        )
    return roots
