"""Exact sparse Laurent polynomials with half-integer exponents.

Exponents are stored doubled (as integers), so z^{-15/2} is key -15 and
z^3 is key 6.  Coefficients are Python ints; there is no floating point
anywhere.  Two-variable polynomials key on (doubled a-exponent, doubled
z-exponent).
"""

from __future__ import annotations

import re
from fractions import Fraction

__all__ = ["LaurentPoly", "LaurentPoly2"]


class LaurentPoly:
    """Integer-coefficient Laurent polynomial in one variable, exact."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        self.coeffs: dict[int, int] = {}
        if coeffs:
            for e, c in (coeffs.items() if isinstance(coeffs, dict) else coeffs):
                if c:
                    self.coeffs[e] = self.coeffs.get(e, 0) + c
            self.coeffs = {e: c for e, c in self.coeffs.items() if c}

    @staticmethod
    def zero() -> "LaurentPoly":
        return LaurentPoly()

    @staticmethod
    def one() -> "LaurentPoly":
        return LaurentPoly({0: 1})

    @staticmethod
    def term(coeff: int, exp_doubled: int) -> "LaurentPoly":
        return LaurentPoly({exp_doubled: coeff})

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        return isinstance(other, LaurentPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __add__(self, other):
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPoly({e: c * other for e, c in self.coeffs.items()})
        out: dict[int, int] = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                k = e1 + e2
                out[k] = out.get(k, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if len(self.coeffs) != 1:
                raise ValueError("negative power of a non-monomial")
            ((e, c),) = self.coeffs.items()
            if c not in (1, -1):
                raise ValueError("negative power with non-unit coefficient")
            return LaurentPoly({e * n: 1 if (c == 1 or n % 2 == 0) else -1})
        out = LaurentPoly.one()
        base = self
        k = n
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def substitute_inverse(self) -> "LaurentPoly":
        """The polynomial with the variable replaced by its inverse."""
        return LaurentPoly({-e: c for e, c in self.coeffs.items()})

    def shift(self, exp_doubled: int) -> "LaurentPoly":
        return LaurentPoly({e + exp_doubled: c for e, c in self.coeffs.items()})

    def min_exp(self) -> int:
        return min(self.coeffs) if self.coeffs else 0

    def max_exp(self) -> int:
        return max(self.coeffs) if self.coeffs else 0

    def to_json(self):
        return [[e, c] for e, c in sorted(self.coeffs.items())]

    @staticmethod
    def from_json(data) -> "LaurentPoly":
        return LaurentPoly({int(e): int(c) for e, c in data})

    def pretty(self, var: str = "z") -> str:
        """Render like the tables do: 'z^{-15/2} - z^{-13/2} + 3'."""
        if not self.coeffs:
            return "0"
        parts = []
        for e, c in sorted(self.coeffs.items(), reverse=True):
            if e == 0:
                body = str(abs(c))
            else:
                frac = Fraction(e, 2)
                expo = str(frac) if frac.denominator == 1 else f"{frac.numerator}/2"
                mag = "" if abs(c) == 1 else str(abs(c))
                body = f"{mag}{var}^{{{expo}}}" if expo != "1" else f"{mag}{var}"
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(("- " if c < 0 else "+ ") + body)
        return " ".join(parts)

    _TERM_RE = re.compile(
        r"""\s*(?P<sign>[+-]?)\s*
            (?P<num>\d+)?\s*\*?\s*
            (?:(?P<var>[A-Za-z])
               (?:\^(?:\{(?P<be>-?\d+(?:/2)?)\}|(?P<pe>-?\d+(?:/2)?)))?
            )?""",
        re.VERBOSE,
    )

    @staticmethod
    def parse(text: str, var: str | None = None) -> "LaurentPoly":
        """Parse '+/- c v^{k} ...' term syntax, with k an integer or n/2."""
        pos = 0
        out: dict[int, int] = {}
        text = text.strip()
        while pos < len(text):
            m = LaurentPoly._TERM_RE.match(text, pos)
            if not m or m.end() == pos:
                raise ValueError(f"cannot parse term at: {text[pos:pos+20]!r}")
            sign = -1 if m.group("sign") == "-" else 1
            num = int(m.group("num")) if m.group("num") else 1
            if m.group("var"):
                if var is None:
                    var = m.group("var")
                elif m.group("var") != var:
                    raise ValueError(f"unexpected variable {m.group('var')!r}")
                es = m.group("be") or m.group("pe")
                if es is None:
                    e = 2
                elif es.endswith("/2"):
                    e = int(es[:-2])
                else:
                    e = 2 * int(es)
            else:
                e = 0
            out[e] = out.get(e, 0) + sign * num
            pos = m.end()
        return LaurentPoly(out)

    def __repr__(self):
        return f"LaurentPoly({self.pretty()})"


def _divide_exact(num: LaurentPoly, den: LaurentPoly) -> LaurentPoly:
    """Exact Laurent division; raises if the division leaves a remainder."""
    if not den:
        raise ZeroDivisionError
    rem = LaurentPoly(dict(num.coeffs))
    etop = den.max_exp()
    ctop = den.coeffs[etop]
    q: dict[int, int] = {}
    while rem:
        e = rem.max_exp()
        c = rem.coeffs[e]
        if c % ctop:
            raise ValueError("inexact polynomial division")
        qc = c // ctop
        q[e - etop] = q.get(e - etop, 0) + qc
        rem = rem - LaurentPoly.term(qc, e - etop) * den
    return LaurentPoly(q)


class LaurentPoly2:
    """Integer-coefficient Laurent polynomial in two variables (a, z)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        self.coeffs: dict[tuple[int, int], int] = {}
        if coeffs:
            for k, c in (coeffs.items() if isinstance(coeffs, dict) else coeffs):
                if c:
                    k = (k[0], k[1])
                    self.coeffs[k] = self.coeffs.get(k, 0) + c
            self.coeffs = {k: c for k, c in self.coeffs.items() if c}

    @staticmethod
    def zero() -> "LaurentPoly2":
        return LaurentPoly2()

    @staticmethod
    def one() -> "LaurentPoly2":
        return LaurentPoly2({(0, 0): 1})

    @staticmethod
    def term(coeff: int, ea_doubled: int, ez_doubled: int) -> "LaurentPoly2":
        return LaurentPoly2({(ea_doubled, ez_doubled): coeff})

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        return isinstance(other, LaurentPoly2) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __add__(self, other):
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out.get(k, 0) + c
        return LaurentPoly2(out)

    def __neg__(self):
        return LaurentPoly2({k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPoly2({k: c * other for k, c in self.coeffs.items()})
        out: dict[tuple[int, int], int] = {}
        for (a1, z1), c1 in self.coeffs.items():
            for (a2, z2), c2 in other.coeffs.items():
                k = (a1 + a2, z1 + z2)
                out[k] = out.get(k, 0) + c1 * c2
        return LaurentPoly2(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers unsupported for two variables")
        out = LaurentPoly2.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def shift(self, ea_doubled: int, ez_doubled: int) -> "LaurentPoly2":
        return LaurentPoly2({(a + ea_doubled, z + ez_doubled): c for (a, z), c in self.coeffs.items()})

    def mirror(self) -> "LaurentPoly2":
        """Image under a -> 1/a, z -> -z (the mirror rule for the skein pair)."""
        return LaurentPoly2({(-a, z): (-c if (z // 2) % 2 else c) for (a, z), c in self.coeffs.items()})

    def substitute_a_one(self) -> LaurentPoly:
        """Set a = 1: the single-variable specialization in z."""
        out: dict[int, int] = {}
        for (_, z), c in self.coeffs.items():
            out[z] = out.get(z, 0) + c
        return LaurentPoly(out)

    def jones_specialization(self) -> LaurentPoly:
        """Set a = t^{-1}, z = t^{1/2} - t^{-1/2}; returns a polynomial in t.

        Negative powers of z are cleared first and divided out exactly at the
        end (they always divide for genuine skein values).
        """
        root = LaurentPoly({1: 1, -1: -1})
        if not self.coeffs:
            return LaurentPoly.zero()
        shift = max(0, -min(z for _, z in self.coeffs) // 2)
        powers = [LaurentPoly.one()]
        out = LaurentPoly.zero()
        for (a, z), c in self.coeffs.items():
            if z % 2 or a % 2:
                raise ValueError("half-integer exponents in a two-variable skein value")
            n = z // 2 + shift
            while len(powers) <= n:
                powers.append(powers[-1] * root)
            out = out + c * powers[n].shift(-a)
        for _ in range(shift):
            out = _divide_exact(out, root)
        return out

    def to_json(self):
        return [[a, z, c] for (a, z), c in sorted(self.coeffs.items())]

    @staticmethod
    def from_json(data) -> "LaurentPoly2":
        return LaurentPoly2({(int(a), int(z)): int(c) for a, z, c in data})

    def pretty(self, vara: str = "a", varz: str = "z") -> str:
        if not self.coeffs:
            return "0"

        def varpow(v, e):
            if e == 0:
                return ""
            frac = Fraction(e, 2)
            expo = str(frac) if frac.denominator == 1 else f"{frac.numerator}/2"
            return v if expo == "1" else f"{v}^{{{expo}}}"

        parts = []
        for (a, z), c in sorted(self.coeffs.items(), key=lambda kv: (-kv[0][0], -kv[0][1])):
            body = " ".join(x for x in (varpow(vara, a), varpow(varz, z)) if x)
            if not body:
                body = str(abs(c))
            elif abs(c) != 1:
                body = f"{abs(c)} {body}"
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(("- " if c < 0 else "+ ") + body)
        return " ".join(parts)

    def __repr__(self):
        return f"LaurentPoly2({self.pretty()})"
