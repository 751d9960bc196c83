"""Exact integer Laurent polynomials in a single variable v.

Coefficients are arbitrary-precision Python integers; the support is a
sparse map from integer exponents to coefficients.  Values are immutable
and hashable, so they can be used as dictionary entries everywhere else
in the package.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping


@dataclass(frozen=True, slots=True)
class LaurentPoly:
    """An element of Z[v, v^-1].

    ``terms`` is a tuple of (exponent, coefficient) pairs, sorted by
    exponent, with no zero coefficients stored.

    >>> v = LaurentPoly.gen()
    >>> (v + v.bar()) ** 2
    LaurentPoly('v^-2 + 2 + v^2')
    >>> ((v + v.bar()) ** 2).eval_at_one()
    4
    """

    terms: tuple[tuple[int, int], ...] = ()

    # -- constructors ---------------------------------------------------

    @staticmethod
    def from_dict(coeffs: Mapping[int, int]) -> "LaurentPoly":
        return LaurentPoly(tuple(sorted((e, c) for e, c in coeffs.items() if c)))

    @staticmethod
    def zero() -> "LaurentPoly":
        return _ZERO

    @staticmethod
    def one() -> "LaurentPoly":
        return _ONE

    @staticmethod
    def gen(exponent: int = 1, coeff: int = 1) -> "LaurentPoly":
        """The monomial ``coeff * v**exponent``."""
        if coeff == 0:
            return _ZERO
        return LaurentPoly(((exponent, coeff),))

    @staticmethod
    def const(c: int) -> "LaurentPoly":
        return LaurentPoly.gen(0, c)

    # -- ring structure --------------------------------------------------

    def __add__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        other = _coerce(other)
        acc = dict(self.terms)
        for e, c in other.terms:
            s = acc.get(e, 0) + c
            if s:
                acc[e] = s
            else:
                acc.pop(e, None)
        return LaurentPoly.from_dict(acc)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(tuple((e, -c) for e, c in self.terms))

    def __sub__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        return self + (-_coerce(other))

    def __rsub__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        return _coerce(other) + (-self)

    def __mul__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        other = _coerce(other)
        acc: dict[int, int] = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                e = e1 + e2
                s = acc.get(e, 0) + c1 * c2
                if s:
                    acc[e] = s
                else:
                    del acc[e]
        return LaurentPoly.from_dict(acc)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            raise ValueError("negative powers are not defined in Z[v, v^-1]")
        out = _ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __bool__(self) -> bool:
        return bool(self.terms)

    # -- involution and extraction ---------------------------------------

    def bar(self) -> "LaurentPoly":
        """The bar involution v -> v^-1."""
        return LaurentPoly(tuple(sorted((-e, c) for e, c in self.terms)))

    def coeff(self, exponent: int) -> int:
        for e, c in self.terms:
            if e == exponent:
                return c
        return 0

    def eval_at_one(self) -> int:
        return sum(c for _, c in self.terms)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def min_exp(self) -> int:
        if not self.terms:
            raise ValueError("the zero polynomial has no support")
        return self.terms[0][0]

    def max_exp(self) -> int:
        if not self.terms:
            raise ValueError("the zero polynomial has no support")
        return self.terms[-1][0]

    def in_positive_v(self) -> bool:
        """True if the polynomial lies in v * Z[v] (zero allowed)."""
        return all(e >= 1 for e, _ in self.terms)

    def has_nonneg_coeffs(self) -> bool:
        return all(c >= 0 for _, c in self.terms)

    # -- serialization ----------------------------------------------------

    def to_json(self) -> dict[str, int]:
        return {str(e): c for e, c in self.terms}

    @staticmethod
    def from_json(d: Mapping[str, int]) -> "LaurentPoly":
        return LaurentPoly.from_dict({int(e): int(c) for e, c in d.items()})

    # -- display -----------------------------------------------------------

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for e, c in self.terms:
            if e == 0:
                body = str(c)
            else:
                var = "v" if e == 1 else f"v^{e}"
                if c == 1:
                    body = var
                elif c == -1:
                    body = f"-{var}"
                else:
                    body = f"{c}*{var}"
            pieces.append(body)
        out = pieces[0]
        for p in pieces[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out

    def __repr__(self) -> str:
        return f"LaurentPoly('{self}')"


_ZERO = LaurentPoly()
_ONE = LaurentPoly(((0, 1),))


def _coerce(x: "LaurentPoly | int") -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly.const(x)
    raise TypeError(f"cannot coerce {type(x).__name__} to LaurentPoly")


def lsum(polys: Iterable[LaurentPoly]) -> LaurentPoly:
    acc: dict[int, int] = {}
    for p in polys:
        for e, c in p.terms:
            s = acc.get(e, 0) + c
            if s:
                acc[e] = s
            else:
                del acc[e]
    return LaurentPoly.from_dict(acc)
