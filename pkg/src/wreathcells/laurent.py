"""Exact coefficient arithmetic.

Rationals are `fractions.Fraction` (re-exported as `Rational`).  Laurent
polynomials in q carry arbitrary-precision integer coefficients, stored
sparsely with no zero entries; all operations return fresh values and never
mutate their arguments.
"""

from __future__ import annotations

import re
from fractions import Fraction

Rational = Fraction


def parse_rational(text: str) -> Fraction:
    """Parse an integer literal or "p/q" into an exact rational."""
    return Fraction(text.strip())


class NotDivisible(ArithmeticError):
    """Exact Laurent division left a remainder."""


class LaurentPoly:
    """Sparse integer Laurent polynomial in q.

    >>> (q() * q(-1)).text()
    '1'
    >>> (q(1) + q(-1)).text()
    'q^-1+q'
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        trimmed = {}
        if coeffs:
            for e, c in coeffs.items():
                if c:
                    trimmed[int(e)] = c
        self.coeffs = trimmed

    @classmethod
    def from_int(cls, n: int) -> "LaurentPoly":
        return cls({0: n})

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> "LaurentPoly":
        return cls({exp: coeff})

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, exp: int) -> int:
        return self.coeffs.get(exp, 0)

    def constant_term(self) -> int:
        return self.coeffs.get(0, 0)

    def min_exp(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no minimal exponent")
        return min(self.coeffs)

    def max_exp(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no maximal exponent")
        return max(self.coeffs)

    def __add__(self, other):
        other = _coerce(other)
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        out: dict[int, int] = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not defined for polynomials")
        out = LaurentPoly({0: 1})
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, (LaurentPoly, int)):
            return NotImplemented
        return self.coeffs == _coerce(other).coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def bar(self) -> "LaurentPoly":
        """The involution q -> q^-1 (negate every exponent)."""
        return LaurentPoly({-e: c for e, c in self.coeffs.items()})

    def in_q_zq(self) -> bool:
        """True iff every exponent is >= 1, i.e. the polynomial lies in qZ[q]."""
        return all(e >= 1 for e in self.coeffs)

    def eval_at_one(self) -> int:
        return sum(self.coeffs.values())

    def exact_div(self, other: "LaurentPoly") -> "LaurentPoly":
        """Quotient self/other when the division is exact, else NotDivisible."""
        other = _coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return LaurentPoly()
        shift = self.min_exp() - other.min_exp()
        a = _dense(self)
        b = _dense(other)
        quot = [0] * (len(a) - len(b) + 1) if len(a) >= len(b) else []
        if len(a) < len(b):
            raise NotDivisible(f"{self.text()} is not divisible by {other.text()}")
        for k in range(len(a) - len(b), -1, -1):
            lead = a[k + len(b) - 1]
            if lead % b[-1] != 0:
                raise NotDivisible(f"{self.text()} is not divisible by {other.text()}")
            f = lead // b[-1]
            quot[k] = f
            if f:
                for i, bc in enumerate(b):
                    a[k + i] -= f * bc
        if any(a):
            raise NotDivisible(f"{self.text()} is not divisible by {other.text()}")
        return LaurentPoly({shift + i: c for i, c in enumerate(quot)})

    def text(self) -> str:
        """Canonical text form, terms in increasing exponent, e.g. "q^-1+2+q^3"."""
        if not self.coeffs:
            return "0"
        out = []
        for e in sorted(self.coeffs):
            c = self.coeffs[e]
            sign = "-" if c < 0 else ("+" if out else "")
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                var = "q" if e == 1 else f"q^{e}"
                body = var if mag == 1 else f"{mag}{var}"
            out.append(sign + body)
        return "".join(out)

    def __repr__(self):
        return f"LaurentPoly({self.text()})"


def _coerce(x) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly({0: x})
    raise TypeError(f"cannot treat {x!r} as a Laurent polynomial")


def _dense(p: LaurentPoly) -> list[int]:
    lo, hi = p.min_exp(), p.max_exp()
    out = [0] * (hi - lo + 1)
    for e, c in p.coeffs.items():
        out[e - lo] = c
    return out


_TERM_RE = re.compile(r"^(\d*)(q(\^(-?\d+))?)?$")


def parse_laurent(text: str) -> LaurentPoly:
    """Parse the canonical text form back into a polynomial."""
    s = text.strip().replace(" ", "")
    if s == "0":
        return LaurentPoly()
    terms = []
    start = 0
    for idx in range(1, len(s)):
        if s[idx] in "+-" and s[idx - 1] != "^":
            terms.append(s[start:idx])
            start = idx
    terms.append(s[start:])
    coeffs: dict[int, int] = {}
    for signed in terms:
        sign = -1 if signed.startswith("-") else 1
        body = signed.lstrip("+-")
        m = _TERM_RE.match(body)
        if not m or not body:
            raise ValueError(f"cannot parse Laurent term {signed!r}")
        mag = int(m.group(1)) if m.group(1) else 1
        if m.group(2) is None:
            exp = 0
        elif m.group(4) is None:
            exp = 1
        else:
            exp = int(m.group(4))
        coeffs[exp] = coeffs.get(exp, 0) + sign * mag
    return LaurentPoly(coeffs)


def zero() -> LaurentPoly:
    return LaurentPoly()


def one() -> LaurentPoly:
    return LaurentPoly({0: 1})


def q(exp: int = 1) -> LaurentPoly:
    return LaurentPoly({exp: 1})


def q_integer(m: int) -> LaurentPoly:
    """[m] = q^(m-1) + q^(m-3) + ... + q^(1-m)."""
    if m < 0:
        raise ValueError("q-integers are defined for m >= 0")
    return LaurentPoly({m - 1 - 2 * t: 1 for t in range(m)})


def q_factorial(m: int) -> LaurentPoly:
    """[m]! = [1][2]...[m]."""
    out = one()
    for k in range(2, m + 1):
        out = out * q_integer(k)
    return out


def bar_symmetric_head(p: LaurentPoly) -> LaurentPoly:
    """The unique bar-symmetric polynomial congruent to p modulo qZ[q].

    Takes the constant term and every negative-exponent term c*q^e of p and
    returns c0 + sum c_e (q^e + q^-e) over e < 0.
    """
    out: dict[int, int] = {}
    for e, c in p.coeffs.items():
        if e == 0:
            out[0] = out.get(0, 0) + c
        elif e < 0:
            out[e] = out.get(e, 0) + c
            out[-e] = out.get(-e, 0) + c
    return LaurentPoly(out)
