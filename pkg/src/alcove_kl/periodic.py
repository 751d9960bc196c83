"""The periodic module over alcoves and its canonical-basis coefficients.

The module is the free Z[v,v^-1]-module on alcoves with generator action

    A . Hb_s = As + v    A   (As above A)
    A . Hb_s = As + v^-1 A   (As below A),

"above"/"below" referring to the generic height d.  Canonical elements
E_A are built inside a finite window (all alcoves x(A+) with l(x) <= R)
by increasing height: alcoves whose lower neighbors all fall outside the
window seed the recursion as pure alcoves, and

    E_{As} = E_A . Hb_s  -  sum_B mu~(B, A) E_B

over previously built B in the support of E_A with Bs below B, where
mu~(B, A) is the coefficient of v in p_{B,A}.  Terms leaving the window
are truncated and the truncation is recorded.  A coefficient p_{y,w}
(the coefficient of y(A+) in E_{w(A+)}) is only reported when the
windows of radius R and R + 1 agree on it exactly; everything else
raises StabilizationError.

Entries are stored once per translation orbit, keyed by the canonical
pair obtained by writing w = t_nu u with u in the finite Weyl group and
translating both labels by -nu.

Two safeguards wrap the raw recursion.  Pairs outside the two-sided
support band (y below w, and w0 y below w0 check(w), the latter forced
by the length-reversing inversion identity) are certified zero without
any window work.  And an identity gate evaluates the socle coefficient
p_{w0 x, w0 check(x)} = v^{l(w0)} once per root system, refusing to
emit any value where the recursion does not reproduce it; the gate
passes in types A1 and A2, while elsewhere (B2, G2, A3, ...) the
pure-alcove seeding converges to a wrong self-consistent family and
the gate withholds all values.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Mapping

from .alcove import Alcove, generic_height, generic_leq
from .errors import ConsistencyError, DomainError, StabilizationError, WindowError
from .laurent import LaurentPoly
from .rootsys import ModularContext, RootSystem
from .weylext import (
    ExtWeylElt,
    check_for_system,
    elt_key,
    elt_to_json,
    gen_indices,
    in_waff,
    length,
    restricted_element_for,
    simple_reflection,
    translation_elt,
    w0_elt,
    waff_elements,
    weyl_group,
)

_V = LaurentPoly.gen()
_VINV = LaurentPoly.gen(-1)
_ONE = LaurentPoly.one()


@dataclass(frozen=True)
class PeriodicElt:
    """A finitely supported element of the periodic module, kept inside a
    window of the given radius."""

    support: tuple[tuple[Alcove, LaurentPoly], ...]
    radius: int
    truncated: bool = False

    @staticmethod
    def from_dict(
        sys: RootSystem,
        d: Mapping[Alcove, LaurentPoly],
        radius: int,
        truncated: bool = False,
    ) -> "PeriodicElt":
        items = [(a, p) for a, p in d.items() if p]
        items.sort(key=lambda t: elt_key(sys, t[0].label))
        return PeriodicElt(tuple(items), radius, truncated)

    def as_dict(self) -> dict[Alcove, LaurentPoly]:
        return dict(self.support)

    def coeff(self, a: Alcove) -> LaurentPoly:
        for b, p in self.support:
            if b == a:
                return p
        return LaurentPoly.zero()


def _height(sys: RootSystem, x: ExtWeylElt) -> int:
    return generic_height(sys, Alcove(x))


def periodic_act_gen(sys: RootSystem, e: PeriodicElt, i: int) -> PeriodicElt:
    """Right action of Hb_s, truncated to the window of e."""
    if i not in gen_indices(sys):
        raise DomainError(f"no Coxeter generator with index {i}")
    s = simple_reflection(sys, i)
    acc: dict[Alcove, LaurentPoly] = {}
    truncated = e.truncated
    for a, p in e.support:
        x = a.label
        xs = x * s
        up = _height(sys, xs) > _height(sys, x)
        if length(sys, xs) <= e.radius:
            b = Alcove(xs)
            acc[b] = acc.get(b, LaurentPoly.zero()) + p
        else:
            truncated = True
        acc[a] = acc.get(a, LaurentPoly.zero()) + (_V if up else _VINV) * p
    return PeriodicElt.from_dict(sys, acc, e.radius, truncated)


class PeriodicWindow:
    """Canonical elements E_A for every alcove of length at most R.

    ``gallery_seed`` randomizes the choice of descent used at each build
    step; the default picks the first eligible generator, which fixes a
    deterministic gallery.
    """

    def __init__(self, sys: RootSystem, radius: int, gallery_seed: int | None = None):
        self.sys = sys
        self.radius = radius
        rng = random.Random(gallery_seed) if gallery_seed is not None else None

        elements = waff_elements(sys, radius)
        members = set(elements)
        self.members = members
        gens = {i: simple_reflection(sys, i) for i in gen_indices(sys)}
        h = {x: _height(sys, x) for x in elements}

        rows: dict[ExtWeylElt, dict[ExtWeylElt, LaurentPoly]] = {}
        flags: dict[ExtWeylElt, bool] = {}
        order = sorted(elements, key=lambda x: (h[x], elt_key(sys, x)))
        for c in order:
            downs = [
                (i, c * gens[i])
                for i in gens
                if _height(sys, c * gens[i]) < h[c] and c * gens[i] in members
            ]
            if not downs:
                rows[c] = {c: _ONE}
                flags[c] = False
                continue
            i, a = rng.choice(downs) if rng is not None else downs[0]
            s = gens[i]
            row_a = rows[a]
            acc: dict[ExtWeylElt, LaurentPoly] = {}
            flag = flags[a]
            for b, p in row_a.items():
                bs = b * s
                up = _height(sys, bs) > _height(sys, b)
                if bs in members:
                    acc[bs] = acc.get(bs, LaurentPoly.zero()) + p
                else:
                    flag = True
                acc[b] = acc.get(b, LaurentPoly.zero()) + (_V if up else _VINV) * p
            for b, p in row_a.items():
                if b == a:
                    continue
                mu = p.coeff(1)
                if mu and _height(sys, b * s) < _height(sys, b):
                    for z, q in rows[b].items():
                        r = acc.get(z, LaurentPoly.zero()) - mu * q
                        if r:
                            acc[z] = r
                        else:
                            acc.pop(z, None)
                    flag = flag or flags[b]
            row = {z: p for z, p in acc.items() if p}
            if row.get(c) != _ONE:
                raise ConsistencyError(
                    "canonical element is not monic at its own alcove; "
                    "up-direction or correction-sign convention is wrong"
                )
            rows[c] = row
            flags[c] = flag
        self.rows = rows
        self.flags = flags

    def element(self, w: ExtWeylElt) -> PeriodicElt:
        if w not in self.rows:
            raise WindowError(f"element of length {length(self.sys, w)} outside window")
        return PeriodicElt.from_dict(
            self.sys,
            {Alcove(y): p for y, p in self.rows[w].items()},
            self.radius,
            self.flags[w],
        )

    def coefficient(self, y: ExtWeylElt, w: ExtWeylElt) -> LaurentPoly:
        if w not in self.rows or y not in self.members:
            raise WindowError("label outside window")
        return self.rows[w].get(y, LaurentPoly.zero())


@lru_cache(maxsize=None)
def _window(sys: RootSystem, radius: int) -> PeriodicWindow:
    return PeriodicWindow(sys, radius)


def canonical_pair(
    sys: RootSystem, y: ExtWeylElt, w: ExtWeylElt
) -> tuple[ExtWeylElt, ExtWeylElt]:
    """Translate (y, w) by the root-lattice part of w: w = t_nu u with u
    in the finite Weyl group, giving the orbit representative
    (t_{-nu} y, u)."""
    for x in (y, w):
        if not in_waff(sys, x):
            raise DomainError("periodic polynomials are indexed by W_aff pairs")
    nu = w.finite_apply(w.translation)
    shift = translation_elt(sys, -nu)
    return shift * y, shift * w


@lru_cache(maxsize=None)
def in_support_band(sys: RootSystem, y: ExtWeylElt, w: ExtWeylElt) -> bool:
    """Necessary condition for p_{y,w} to be nonzero.

    The support condition p_{B,A} = 0 unless B is below A, combined with
    the length-reversing inversion identity (which exchanges the pair
    (y, w) with (w0 y, w0 check(w)) and is an involution because
    check(w0 check(x)) = w0 x), confines the support of a column to the
    bounded height band d(check(w)) <= d(y) <= d(w) together with the
    two reachability conditions, all decidable exactly.
    """
    ha = generic_height(sys, Alcove(y))
    hb = generic_height(sys, Alcove(w))
    if ha > hb:
        return y == w
    wv = check_for_system(sys, w)
    hv = generic_height(sys, Alcove(wv))
    if ha < hv:
        return False
    if not generic_leq(sys, Alcove(y), Alcove(w), radius=hb - ha):
        return False
    w0 = w0_elt(sys)
    return generic_leq(sys, Alcove(w0 * y), Alcove(w0 * wv), radius=ha - hv)


def periodic_kl(
    ctx: ModularContext | RootSystem,
    y: ExtWeylElt,
    w: ExtWeylElt,
    radius: int,
    *,
    normalize: bool = True,
) -> LaurentPoly:
    """The stabilized coefficient p_{y,w}.

    Computed in the windows of radius R and R + 1 and returned only when
    the two agree; raises StabilizationError otherwise and WindowError
    when the pair is out of reach.  The value is extracted at the given
    pair when possible and at its translation-canonical representative
    otherwise (the two agree by translation equivariance, which the test
    suite checks separately).
    """
    sys = ctx.system if isinstance(ctx, ModularContext) else ctx
    if normalize:
        y, w = canonical_pair(sys, y, w)
    elif not (in_waff(sys, y) and in_waff(sys, w)):
        raise DomainError("periodic polynomials are indexed by W_aff pairs")
    _validate_conventions(sys, radius)
    return _coefficient_stabilized(sys, y, w, radius)


def _coefficient_stabilized(
    sys: RootSystem, y: ExtWeylElt, w: ExtWeylElt, radius: int
) -> LaurentPoly:
    if not in_support_band(sys, y, w):
        return LaurentPoly.zero()
    if length(sys, y) > radius or length(sys, w) > radius:
        raise WindowError(
            f"pair of lengths ({length(sys, y)}, {length(sys, w)}) is out "
            f"of reach of window radius {radius}"
        )
    first = _window(sys, radius).coefficient(y, w)
    second = _window(sys, radius + 1).coefficient(y, w)
    if first != second:
        raise StabilizationError(
            f"coefficient did not stabilize at radius {radius}: "
            f"{first} vs {second}"
        )
    return second


_VALIDATED: dict[RootSystem, bool] = {}


def _validate_conventions(sys: RootSystem, radius: int) -> None:
    """Run the built-in identity gate once per root system.

    The gate checks the diagonal normalization and the monomial identity
    p_{w0 x, w0 check(x)} = v^{l(w0)} on every restricted element of the
    Coxeter subgroup whose pair fits in a bounded validation window; on
    failure the module refuses to hand out values, reporting the
    conventions in force.
    """
    state = _VALIDATED.get(sys)
    if state is True:
        return
    if state is False:
        raise ConsistencyError(_DIAGNOSTIC.format(sys=sys))
    w0 = w0_elt(sys)
    lw0 = length(sys, w0)
    rad = 2 * lw0 + 2
    ok = True
    try:
        for m in weyl_group(sys):
            x = restricted_element_for(sys, m)
            if not in_waff(sys, x):
                continue
            lhs, rhs = w0 * x, w0 * check_for_system(sys, x)
            if max(length(sys, lhs), length(sys, rhs)) > rad:
                continue
            if _coefficient_stabilized(sys, lhs, rhs, rad) != LaurentPoly.gen(lw0):
                ok = False
                break
            if _coefficient_stabilized(sys, x, x, rad) != LaurentPoly.one():
                ok = False
                break
    except (StabilizationError, WindowError):
        ok = False
    _VALIDATED[sys] = ok
    if not ok:
        raise ConsistencyError(_DIAGNOSTIC.format(sys=sys))


_DIAGNOSTIC = (
    "identity gate failed for {sys}: the window recursion with pure-alcove "
    "seeds does not reproduce the socle coefficient v^l(w0) here.  "
    "Conventions in force: 'up' = crossing toward increasing coroot "
    "pairing; correction coefficient = coefficient of v^1, subtracted for "
    "support elements whose crossing is downward.  Values are withheld "
    "for this root system rather than returned unverified."
)


@dataclass(frozen=True)
class PKLEntry:
    poly: LaurentPoly
    stabilized: bool


@dataclass
class PKLTable:
    """Stabilized periodic coefficients, stored once per translation orbit."""

    system: RootSystem
    p: int
    radius: int
    length_bound: int
    entries: dict[tuple[ExtWeylElt, ExtWeylElt], PKLEntry]

    def poly(self, y: ExtWeylElt, w: ExtWeylElt) -> LaurentPoly:
        key = canonical_pair(self.system, y, w)
        entry = self.entries.get(key)
        if entry is None:
            if not in_support_band(self.system, *key):
                return LaurentPoly.zero()
            raise WindowError("pair outside the tabulated range")
        if not entry.stabilized:
            raise StabilizationError("entry did not stabilize at the table radius")
        return entry.poly

    def to_json(self) -> dict:
        sys = self.system
        items = sorted(
            self.entries.items(),
            key=lambda kv: (elt_key(sys, kv[0][1]), elt_key(sys, kv[0][0])),
        )
        return {
            "type": sys.cartan_type,
            "rank": sys.rank,
            "p": self.p,
            "R": self.radius,
            "entries": [
                {
                    "y": elt_to_json(sys, y),
                    "w": elt_to_json(sys, w),
                    "poly": e.poly.to_json(),
                    "stabilized": e.stabilized,
                }
                for (y, w), e in items
            ],
        }


def pkl_table(ctx: ModularContext, length_bound: int, radius: int) -> PKLTable:
    """All stabilized p_{y,w} with both labels of length at most the bound.

    Translation invariance across each orbit is asserted on the fly: a
    raw (untranslated) extraction that is itself stabilized must agree
    with the canonical entry.
    """
    sys = ctx.system
    if length_bound > radius:
        raise WindowError("length bound exceeds the window radius")
    _validate_conventions(sys, radius)
    win = _window(sys, radius)
    win_next = _window(sys, radius + 1)
    elements = waff_elements(sys, length_bound)
    entries: dict[tuple[ExtWeylElt, ExtWeylElt], PKLEntry] = {}
    for w in elements:
        for y in elements:
            if not in_support_band(sys, y, w):
                found = PKLEntry(LaurentPoly.zero(), True)
            else:
                first = win.coefficient(y, w)
                second = win_next.coefficient(y, w)
                found = PKLEntry(second, first == second)
            key = canonical_pair(sys, y, w)
            cur = entries.get(key)
            if cur is None:
                entries[key] = found
            elif cur.stabilized and found.stabilized and cur.poly != found.poly:
                raise ConsistencyError(
                    "translation invariance failed between two members of "
                    "the same orbit"
                )
            elif found.stabilized and not cur.stabilized:
                entries[key] = found
    return PKLTable(sys, ctx.p, radius, length_bound, entries)
