"""Exact arithmetic in the cyclotomic field Q(zeta_N).

Elements are stored as coefficient tuples of length phi(N) in the power basis
1, z, ..., z^(phi(N)-1), reduced modulo the N-th cyclotomic polynomial.  N = 1
and N = 2 both collapse to plain rationals.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from numbers import Rational as _RationalABC
from typing import Union

__all__ = [
    "Cyc",
    "ScalarOrderError",
    "cyclotomic_poly",
    "euler_phi",
    "cyc_add",
    "cyc_mul",
    "cyc_inv",
    "root_of_unity",
    "parse_scalar",
]

Number = Union[int, Fraction]


class ScalarOrderError(ValueError):
    """Raised when scalars from different cyclotomic fields are combined."""


def _poly_divmod(num: list, den: list) -> tuple[list, list]:
    # Coefficients low -> high; den has nonzero leading coefficient.
    num = list(num)
    lead = den[-1]
    dd = len(den) - 1
    if len(num) - 1 < dd:
        return [0], num
    quot = [0] * (len(num) - dd)
    for shift in range(len(num) - 1 - dd, -1, -1):
        c = num[shift + dd]
        if c:
            if isinstance(c, int) and isinstance(lead, int) and c % lead == 0:
                c = c // lead
            else:
                c = Fraction(c) / lead
            quot[shift] = c
            for i, d in enumerate(den):
                num[shift + i] -= c * d
    rem = num[:dd] or [0]
    return quot, rem


def _trim(p: list) -> list:
    while len(p) > 1 and not p[-1]:
        p.pop()
    return p


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Integer coefficients (low -> high) of the n-th cyclotomic polynomial."""
    if n < 1:
        raise ValueError(f"cyclotomic order must be positive, got {n}")
    p: list = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            p, rem = _poly_divmod(p, list(cyclotomic_poly(d)))
            assert not any(rem)
    return tuple(int(c) for c in _trim(p))


def euler_phi(n: int) -> int:
    return len(cyclotomic_poly(n)) - 1


def _reduce(order: int, coeffs) -> tuple[Fraction, ...]:
    phi_poly = cyclotomic_poly(order)
    deg = len(phi_poly) - 1
    c = [Fraction(x) for x in coeffs]
    # Phi_N is monic, so plain integer elimination from the top works.
    for top in range(len(c) - 1, deg - 1, -1):
        lead = c[top]
        if lead:
            base = top - deg
            for i, p in enumerate(phi_poly):
                if p:
                    c[base + i] -= lead * p
    c = c[:deg]
    c.extend([Fraction(0)] * (deg - len(c)))
    return tuple(c)


class Cyc:
    """An element of Q(zeta_N).  Immutable and hashable."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs=(0,)):
        if order < 1:
            raise ValueError(f"cyclotomic order must be positive, got {order}")
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", _reduce(order, coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("Cyc is immutable")

    @classmethod
    def _raw(cls, order: int, coeffs: tuple[Fraction, ...]) -> Cyc:
        obj = object.__new__(cls)
        object.__setattr__(obj, "order", order)
        object.__setattr__(obj, "coeffs", coeffs)
        return obj

    @classmethod
    def zero(cls, order: int) -> Cyc:
        return cls._raw(order, (Fraction(0),) * euler_phi(order))

    @classmethod
    def one(cls, order: int) -> Cyc:
        return cls.rational(order, 1)

    @classmethod
    def rational(cls, order: int, value: Number) -> Cyc:
        n = euler_phi(order)
        return cls._raw(order, (Fraction(value),) + (Fraction(0),) * (n - 1))

    # -- coercion ---------------------------------------------------------

    def _coerce(self, other) -> Cyc | None:
        if isinstance(other, Cyc):
            if other.order != self.order:
                raise ScalarOrderError(
                    f"cannot combine Q(zeta_{self.order}) with Q(zeta_{other.order})"
                )
            return other
        if isinstance(other, (int, _RationalABC)):
            return Cyc.rational(self.order, Fraction(other))
        return None

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other) -> Cyc:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Cyc._raw(self.order, tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> Cyc:
        return Cyc._raw(self.order, tuple(-a for a in self.coeffs))

    def __sub__(self, other) -> Cyc:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Cyc._raw(self.order, tuple(a - b for a, b in zip(self.coeffs, o.coeffs)))

    def __rsub__(self, other) -> Cyc:
        return (-self) + other

    def __mul__(self, other) -> Cyc:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) == 1:
            return Cyc._raw(self.order, (a[0] * b[0],))
        prod = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        return Cyc._raw(self.order, _reduce(self.order, prod))

    __rmul__ = __mul__

    def inverse(self) -> Cyc:
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(zeta_N)")
        if len(self.coeffs) == 1:
            return Cyc._raw(self.order, (1 / self.coeffs[0],))
        # Extended Euclid: find s with s*self = 1 mod Phi_N.
        r0 = [Fraction(c) for c in cyclotomic_poly(self.order)]
        r1 = _trim(list(self.coeffs))
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while any(r1):
            q, r = _poly_divmod(r0, r1)
            r0, r1 = r1, _trim(r)
            s0, s1 = s1, _trim(_poly_sub(s0, _poly_mul(q, s1)))
        # r0 is a nonzero constant since Phi_N is irreducible.
        assert len(r0) == 1 and r0[0]
        return Cyc(self.order, [c / r0[0] for c in s0])

    def __truediv__(self, other) -> Cyc:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other) -> Cyc:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int) -> Cyc:
        if k < 0:
            return self.inverse() ** (-k)
        result = Cyc.one(self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- predicates -------------------------------------------------------

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def __eq__(self, other) -> bool:
        if isinstance(other, Cyc):
            return self.order == other.order and self.coeffs == other.coeffs
        if isinstance(other, (int, _RationalABC)):
            return self.is_rational() and self.coeffs[0] == other
        return NotImplemented

    def __hash__(self) -> int:
        if self.is_rational():
            return hash(self.coeffs[0])
        return hash((self.order, self.coeffs))

    def to_complex(self) -> complex:
        import cmath

        z = cmath.exp(2j * cmath.pi / self.order)
        return sum(float(c) * z**i for i, c in enumerate(self.coeffs))

    # -- text -------------------------------------------------------------

    def __str__(self) -> str:
        terms = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            if k == 0:
                terms.append(str(c))
            else:
                mono = "z" if k == 1 else f"z^{k}"
                if c == 1:
                    terms.append(mono)
                elif c == -1:
                    terms.append(f"-{mono}")
                else:
                    terms.append(f"{c}*{mono}")
        if not terms:
            return "0"
        out = terms[0]
        for t in terms[1:]:
            out += f" - {t[1:]}" if t.startswith("-") else f" + {t}"
        return out

    def __repr__(self) -> str:
        return f"Cyc({self.order}, {str(self)!r})"


def _poly_mul(a: list, b: list) -> list:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _poly_sub(a: list, b: list) -> list:
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return [Fraction(x) - y for x, y in zip(a, b)]


def cyc_add(a: Cyc, b: Cyc) -> Cyc:
    return a + b


def cyc_mul(a: Cyc, b: Cyc) -> Cyc:
    return a * b


def cyc_inv(a: Cyc) -> Cyc:
    return a.inverse()


def root_of_unity(order: int, k: int) -> Cyc:
    """zeta_order ** k, reduced."""
    k %= order
    coeffs = [0] * (k + 1)
    coeffs[k] = 1
    return Cyc(order, coeffs)


_TERM = re.compile(
    r"""^(?P<sign>[+-]?)
        (?:
            (?P<num>\d+)(?:/(?P<den>\d+))?(?:\*(?P<zc>z(?:\^(?P<ec>\d+))?))?
          | (?P<zb>z(?:\^(?P<eb>\d+))?)
        )$""",
    re.VERBOSE,
)


def parse_scalar(text: str | int | Fraction | Cyc, order: int) -> Cyc:
    """Parse a literal such as ``-1/2 + 3*z^2`` (``z`` is zeta_order).

    Integers, Fractions and Cyc values of the right order pass straight through.
    """
    if isinstance(text, Cyc):
        if text.order != order:
            raise ScalarOrderError(f"scalar of order {text.order}, expected {order}")
        return text
    if isinstance(text, (int, Fraction)) and not isinstance(text, bool):
        return Cyc.rational(order, text)
    if not isinstance(text, str):
        raise ValueError(f"not a scalar literal: {text!r}")
    s = re.sub(r"\s+", "", text)
    if not s:
        raise ValueError("empty scalar literal")
    # split into signed terms
    pieces = re.findall(r"[+-]?[^+-]+", s)
    if "".join(pieces) != s:
        raise ValueError(f"malformed scalar literal: {text!r}")
    coeffs: dict[int, Fraction] = {}
    for piece in pieces:
        m = _TERM.match(piece)
        if not m:
            raise ValueError(f"malformed scalar term {piece!r} in {text!r}")
        sign = -1 if m["sign"] == "-" else 1
        if m["num"] is not None:
            if m["den"] is not None and int(m["den"]) == 0:
                raise ValueError(f"zero denominator in {text!r}")
            c = Fraction(int(m["num"]), int(m["den"] or 1))
            if m["zc"]:
                exp = int(m["ec"]) if m["ec"] else 1
            else:
                exp = 0
        else:
            c = Fraction(1)
            exp = int(m["eb"]) if m["eb"] else 1
        exp %= order
        coeffs[exp] = coeffs.get(exp, Fraction(0)) + sign * c
    dense = [Fraction(0)] * (max(coeffs) + 1)
    for k, c in coeffs.items():
        dense[k] += c
    return Cyc(order, dense)
