"""Hecke algebra of the affine Weyl group and its canonical bases.

Normalization: the standard basis (H_w) satisfies

    H_s^2 = H_e + (v^-1 - v) H_s,      Hb_s = H_s + v,

so the canonical basis element Hb_w = sum_y h_{y,w} H_y has h_{y,w} in
v Z[v] off the diagonal.  Two independent computations of h_{y,w} are
provided: the usual recursion on a reduced word with mu-corrections, and
direct triangular solving of the bar-self-duality equations.

The spherical module is the induction of the one-dimensional module of
the finite Hecke algebra where every finite generator acts by v^-1; its
natural basis is indexed by the elements maximal in their W-coset, with
generator action

    M_x Hb_s = M_{xs} + v   M_x   (xs maximal, xs > x)
    M_x Hb_s = M_{xs} + v^-1 M_x  (xs maximal, xs < x)
    M_x Hb_s = (v + v^-1) M_x     (xs not maximal).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Mapping

from .errors import ConsistencyError, DomainError, ResourceError
from .laurent import LaurentPoly
from .rootsys import RootSystem
from .weylext import (
    ExtWeylElt,
    elt_key,
    gen_indices,
    identity_elt,
    in_waff,
    length,
    reduced_word,
    right_descents,
    simple_reflection,
    w0_elt,
)

_V = LaurentPoly.gen()
_VINV = LaurentPoly.gen(-1)
_ONE = LaurentPoly.one()


@dataclass(frozen=True)
class HeckeElt:
    """A finitely supported Z[v,v^-1]-combination of standard basis vectors."""

    support: tuple[tuple[ExtWeylElt, LaurentPoly], ...]

    @staticmethod
    def from_dict(sys: RootSystem, d: Mapping[ExtWeylElt, LaurentPoly]) -> "HeckeElt":
        items = [(x, p) for x, p in d.items() if p]
        items.sort(key=lambda t: elt_key(sys, t[0]))
        return HeckeElt(tuple(items))

    def as_dict(self) -> dict[ExtWeylElt, LaurentPoly]:
        return dict(self.support)

    def coeff(self, x: ExtWeylElt) -> LaurentPoly:
        for y, p in self.support:
            if y == x:
                return p
        return LaurentPoly.zero()


def unit(sys: RootSystem) -> HeckeElt:
    return HeckeElt(((identity_elt(sys), _ONE),))


def std_elt(sys: RootSystem, x: ExtWeylElt) -> HeckeElt:
    if not in_waff(sys, x):
        raise DomainError("Hecke basis elements are indexed by W_aff")
    return HeckeElt(((x, _ONE),))


def mul_gen(sys: RootSystem, h: HeckeElt, i: int) -> HeckeElt:
    """Right multiplication by the standard generator H_s."""
    s = simple_reflection(sys, i)
    acc: dict[ExtWeylElt, LaurentPoly] = {}
    for x, p in h.support:
        xs = x * s
        if length(sys, xs) > length(sys, x):
            acc[xs] = acc.get(xs, LaurentPoly.zero()) + p
        else:
            acc[xs] = acc.get(xs, LaurentPoly.zero()) + p
            acc[x] = acc.get(x, LaurentPoly.zero()) + (_VINV - _V) * p
    return HeckeElt.from_dict(sys, acc)


def mul_kl_gen(sys: RootSystem, h: HeckeElt, i: int) -> HeckeElt:
    """Right multiplication by Hb_s = H_s + v."""
    s = simple_reflection(sys, i)
    acc: dict[ExtWeylElt, LaurentPoly] = {}
    for x, p in h.support:
        xs = x * s
        up = length(sys, xs) > length(sys, x)
        acc[xs] = acc.get(xs, LaurentPoly.zero()) + p
        stay = (_V if up else _VINV) * p
        acc[x] = acc.get(x, LaurentPoly.zero()) + stay
    return HeckeElt.from_dict(sys, acc)


def std_product(sys: RootSystem, x: ExtWeylElt, y: ExtWeylElt) -> HeckeElt:
    """H_x H_y, multiplying out a reduced word of y."""
    out = std_elt(sys, x)
    for i in reduced_word(sys, y):
        out = mul_gen(sys, out, i)
    return out


# -- the canonical basis (mu-recursion) ---------------------------------------


class KLComputer:
    """Canonical-basis coefficients for one affine Weyl group.

    Rows are cached per element; ``length_bound`` guards runaway
    recursions.
    """

    def __init__(self, sys: RootSystem, length_bound: int = 64):
        self.sys = sys
        self.length_bound = length_bound
        self._rows: dict[ExtWeylElt, dict[ExtWeylElt, LaurentPoly]] = {}

    def kl_basis(self, w: ExtWeylElt) -> dict[ExtWeylElt, LaurentPoly]:
        """The map y -> h_{y,w}."""
        sys = self.sys
        if not in_waff(sys, w):
            raise DomainError("canonical basis elements are indexed by W_aff")
        if length(sys, w) > self.length_bound:
            raise ResourceError(
                f"length {length(sys, w)} exceeds the configured bound "
                f"{self.length_bound}"
            )
        cached = self._rows.get(w)
        if cached is not None:
            return dict(cached)
        if length(sys, w) == 0:
            row = {w: _ONE}
        else:
            i = min(right_descents(sys, w))
            s = simple_reflection(sys, i)
            u = w * s  # shorter; w = u s with us > u
            base = self.kl_basis(u)
            acc: dict[ExtWeylElt, LaurentPoly] = {}
            for y, p in base.items():
                ys = y * s
                up = length(sys, ys) > length(sys, y)
                acc[ys] = acc.get(ys, LaurentPoly.zero()) + p
                acc[y] = acc.get(y, LaurentPoly.zero()) + (_V if up else _VINV) * p
            for y, p in base.items():
                if y == u:
                    continue
                mu = p.coeff(1)
                if mu and length(sys, y * s) < length(sys, y):
                    for z, q in self.kl_basis(y).items():
                        acc[z] = acc.get(z, LaurentPoly.zero()) - mu * q
            row = {y: p for y, p in acc.items() if p}
            if row.get(w) != _ONE:
                raise ConsistencyError("canonical basis row is not monic")
            for y, p in row.items():
                if y != w and not p.in_positive_v():
                    raise ConsistencyError(
                        f"coefficient {p} at a lower term is not in vZ[v]"
                    )
        self._rows[w] = row
        return dict(row)

    def mu(self, y: ExtWeylElt, w: ExtWeylElt) -> int:
        return self.kl_basis(w).get(y, LaurentPoly.zero()).coeff(1)

    def kl_element(self, w: ExtWeylElt) -> HeckeElt:
        return HeckeElt.from_dict(self.sys, self.kl_basis(w))


@lru_cache(maxsize=None)
def kl_computer(sys: RootSystem, length_bound: int = 64) -> KLComputer:
    return KLComputer(sys, length_bound)


def kl_basis(sys: RootSystem, w: ExtWeylElt) -> dict[ExtWeylElt, LaurentPoly]:
    return kl_computer(sys).kl_basis(w)


# -- the bar involution and the self-duality oracle -----------------------------


class BarComputer:
    """Expansion of bar(H_y) in the standard basis, built along reduced words."""

    def __init__(self, sys: RootSystem):
        self.sys = sys
        self._bars: dict[ExtWeylElt, dict[ExtWeylElt, LaurentPoly]] = {
            identity_elt(sys): {identity_elt(sys): _ONE}
        }

    def bar_std(self, y: ExtWeylElt) -> dict[ExtWeylElt, LaurentPoly]:
        cached = self._bars.get(y)
        if cached is not None:
            return cached
        sys = self.sys
        i = min(right_descents(sys, y))
        s = simple_reflection(sys, i)
        prev = self.bar_std(y * s)
        # bar(H_{y's}) = bar(H_{y'}) (H_s + (v - v^-1)); in the descending
        # case the stay terms of H_s and of (v - v^-1) cancel.
        acc: dict[ExtWeylElt, LaurentPoly] = {}
        for z, p in prev.items():
            zs = z * s
            acc[zs] = acc.get(zs, LaurentPoly.zero()) + p
            if length(sys, zs) > length(sys, z):
                acc[z] = acc.get(z, LaurentPoly.zero()) + (_V - _VINV) * p
        out = {z: p for z, p in acc.items() if p}
        self._bars[y] = out
        return out


@lru_cache(maxsize=None)
def bar_computer(sys: RootSystem) -> BarComputer:
    return BarComputer(sys)


def bruhat_interval_below(sys: RootSystem, w: ExtWeylElt) -> list[ExtWeylElt]:
    """All y <= w, generated from subwords of one reduced word."""
    word = reduced_word(sys, w)
    out = {identity_elt(sys)}
    for i in word:
        s = simple_reflection(sys, i)
        out |= {x * s for x in out}
    return sorted(out, key=lambda x: elt_key(sys, x))


def kl_basis_by_duality(sys: RootSystem, w: ExtWeylElt) -> dict[ExtWeylElt, LaurentPoly]:
    """Independent computation of h_{.,w}: solve bar-invariance triangularly.

    Writing Hb_w = sum h_y H_y and bar(H_y) = sum_z r_{z,y} H_z, the
    self-duality forces h_z - bar(h_z) = sum_{y > z} bar(h_y) r_{z,y},
    which determines h_z in v Z[v] by taking the positive part.
    """
    bars = bar_computer(sys)
    below = bruhat_interval_below(sys, w)
    order = sorted(below, key=lambda x: -length(sys, x))
    h: dict[ExtWeylElt, LaurentPoly] = {w: _ONE}
    for z in order:
        if z == w:
            continue
        g = LaurentPoly.zero()
        for y, hy in h.items():
            r = bars.bar_std(y).get(z)
            if r is not None:
                g = g + hy.bar() * r
        # g must be antisymmetric under bar with zero constant term
        if g.coeff(0) != 0 or (g + g.bar()):
            raise ConsistencyError("self-duality system is inconsistent")
        h[z] = LaurentPoly(tuple((e, c) for e, c in g.terms if e > 0))
    return {y: p for y, p in h.items() if p}


# -- the spherical module ---------------------------------------------------------


@dataclass(frozen=True)
class SphericalElt:
    """A combination of natural basis vectors indexed by coset-maximal elements."""

    support: tuple[tuple[ExtWeylElt, LaurentPoly], ...]

    @staticmethod
    def from_dict(sys: RootSystem, d: Mapping[ExtWeylElt, LaurentPoly]) -> "SphericalElt":
        items = [(x, p) for x, p in d.items() if p]
        items.sort(key=lambda t: elt_key(sys, t[0]))
        return SphericalElt(tuple(items))

    def as_dict(self) -> dict[ExtWeylElt, LaurentPoly]:
        return dict(self.support)

    def coeff(self, x: ExtWeylElt) -> LaurentPoly:
        for y, p in self.support:
            if y == x:
                return p
        return LaurentPoly.zero()


def is_coset_maximal(sys: RootSystem, x: ExtWeylElt) -> bool:
    """Maximal in Wx: every finite simple reflection is a left descent."""
    lx = length(sys, x)
    for i in range(1, sys.rank + 1):
        if length(sys, simple_reflection(sys, i) * x) > lx:
            return False
    return True


def coset_maximal_rep(sys: RootSystem, x: ExtWeylElt) -> ExtWeylElt:
    """The maximal element of Wx."""
    moved = True
    while moved:
        moved = False
        for i in range(1, sys.rank + 1):
            y = simple_reflection(sys, i) * x
            if length(sys, y) > length(sys, x):
                x = y
                moved = True
                break
    return x


def spherical_project(sys: RootSystem, h: HeckeElt) -> SphericalElt:
    """Quotient map H -> spherical module: H_z maps to
    v^{l(max) - l(z)} M_{max(Wz)}."""
    acc: dict[ExtWeylElt, LaurentPoly] = {}
    for z, p in h.support:
        m = coset_maximal_rep(sys, z)
        scale = LaurentPoly.gen(length(sys, m) - length(sys, z))
        acc[m] = acc.get(m, LaurentPoly.zero()) + scale * p
    return SphericalElt.from_dict(sys, acc)


def spherical_act_kl_gen(sys: RootSystem, e: SphericalElt, i: int) -> SphericalElt:
    """Right action of Hb_s on the spherical module."""
    s = simple_reflection(sys, i)
    acc: dict[ExtWeylElt, LaurentPoly] = {}
    for x, p in e.support:
        xs = x * s
        if not is_coset_maximal(sys, xs):
            acc[x] = acc.get(x, LaurentPoly.zero()) + (_V + _VINV) * p
        elif length(sys, xs) > length(sys, x):
            acc[xs] = acc.get(xs, LaurentPoly.zero()) + p
            acc[x] = acc.get(x, LaurentPoly.zero()) + _V * p
        else:
            acc[xs] = acc.get(xs, LaurentPoly.zero()) + p
            acc[x] = acc.get(x, LaurentPoly.zero()) + _VINV * p
    return SphericalElt.from_dict(sys, acc)


def coset_minimal_rep(sys: RootSystem, x: ExtWeylElt) -> ExtWeylElt:
    """The minimal element of Wx."""
    moved = True
    while moved:
        moved = False
        for i in range(1, sys.rank + 1):
            y = simple_reflection(sys, i) * x
            if length(sys, y) < length(sys, x):
                x = y
                moved = True
                break
    return x


def ideal_basis_elt(sys: RootSystem, y: ExtWeylElt) -> HeckeElt:
    """Hb_{w0} H_{y0} for y coset-maximal with minimal representative y0.

    These span the right ideal Hb_{w0} H, which realizes the spherical
    module inside the Hecke algebra; the basis vector has unitriangular
    leading term H_y.
    """
    if not is_coset_maximal(sys, y):
        raise DomainError("ideal basis vectors are indexed by coset-maximal elements")
    out = kl_computer(sys).kl_element(w0_elt(sys))
    for i in reduced_word(sys, coset_minimal_rep(sys, y)):
        out = mul_gen(sys, out, i)
    return out


def spherical_from_kl_row(sys: RootSystem, w: ExtWeylElt) -> dict[ExtWeylElt, LaurentPoly]:
    """Expand Hb_w (w coset-maximal) in the ideal basis Hb_{w0} H_{y0}.

    The expansion coefficients provide an independent route to the
    spherical canonical coefficients m_{y,w}; a nonzero remainder means
    the two computations disagree.
    """
    if not is_coset_maximal(sys, w):
        raise DomainError("expansion applies to coset-maximal elements")
    rest = kl_computer(sys).kl_basis(w)
    out: dict[ExtWeylElt, LaurentPoly] = {}
    while rest:
        y = max(rest, key=lambda x: (length(sys, x), elt_key(sys, x)))
        if not is_coset_maximal(sys, y):
            raise ConsistencyError(
                "leading term of an ideal element is not coset-maximal"
            )
        c = rest[y]
        out[y] = c
        for z, p in ideal_basis_elt(sys, y).support:
            q = rest.get(z, LaurentPoly.zero()) - c * p
            if q:
                rest[z] = q
            else:
                rest.pop(z, None)
    return out


class SphericalKLComputer:
    """Canonical basis of the spherical module by the descent recursion."""

    def __init__(self, sys: RootSystem, length_bound: int = 64):
        self.sys = sys
        self.length_bound = length_bound
        self._rows: dict[ExtWeylElt, dict[ExtWeylElt, LaurentPoly]] = {}

    def spherical_kl(self, w: ExtWeylElt) -> dict[ExtWeylElt, LaurentPoly]:
        """The map y -> m_{y,w} for w maximal in its coset."""
        sys = self.sys
        if not in_waff(sys, w):
            raise DomainError("spherical basis elements are indexed by W_aff")
        if not is_coset_maximal(sys, w):
            raise DomainError("spherical basis elements are indexed by coset-maximal elements")
        if length(sys, w) > self.length_bound:
            raise ResourceError("length exceeds the configured bound")
        cached = self._rows.get(w)
        if cached is not None:
            return dict(cached)
        w0 = w0_elt(sys)
        if w == w0:
            row = {w: _ONE}
        else:
            i = next(
                j
                for j in gen_indices(sys)
                if length(sys, w * simple_reflection(sys, j)) < length(sys, w)
                and is_coset_maximal(sys, w * simple_reflection(sys, j))
            )
            s = simple_reflection(sys, i)
            u = w * s
            base = self.spherical_kl(u)
            carrier = spherical_act_kl_gen(
                sys, SphericalElt.from_dict(sys, base), i
            ).as_dict()
            for y, p in base.items():
                if y == u:
                    continue
                ys = y * s
                descending = (not is_coset_maximal(sys, ys)) or length(
                    sys, ys
                ) < length(sys, y)
                mu = p.coeff(1)
                if mu and descending:
                    for z, q in self.spherical_kl(y).items():
                        carrier[z] = carrier.get(z, LaurentPoly.zero()) - mu * q
            row = {y: p for y, p in carrier.items() if p}
            if row.get(w) != _ONE:
                raise ConsistencyError("spherical canonical row is not monic")
            for y, p in row.items():
                if y != w and not p.in_positive_v():
                    raise ConsistencyError("spherical coefficient not in vZ[v]")
        self._rows[w] = row
        return dict(row)


@lru_cache(maxsize=None)
def spherical_computer(sys: RootSystem, length_bound: int = 64) -> SphericalKLComputer:
    return SphericalKLComputer(sys, length_bound)


def spherical_kl(sys: RootSystem, w: ExtWeylElt) -> dict[ExtWeylElt, LaurentPoly]:
    return spherical_computer(sys).spherical_kl(w)
