"""The identity-verification harness.

Each check exercises one of the structural identities that tie the
periodic coefficients, the canonical bases, and the Weyl-group
combinatorics together; together they are the package's acceptance gate.
All randomized checks take an explicit seed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .alcove import Alcove, generic_height
from .errors import ConsistencyError, StabilizationError, WindowError
from .hecke import kl_basis, kl_basis_by_duality
from .laurent import LaurentPoly
from .periodic import PeriodicWindow, in_support_band, periodic_kl, pkl_table
from .repcalc import (
    StdLabel,
    baby_verma_total_dim,
    loewy_layers,
    nabla_weight_dim,
    verma_weight_dim,
)
from .rootsys import ModularContext, Weight
from .weylext import (
    check,
    in_waff,
    is_restricted_elt,
    length,
    restricted_element_for,
    rho_check_involution,
    translation_elt,
    w0_elt,
    waff_elements,
    weyl_group,
)


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str


def _result(name: str, passed: bool, detail: str = "") -> CheckResult:
    return CheckResult(name, passed, detail)


def check_monomial_identity(ctx: ModularContext, bound: int, radius: int) -> CheckResult:
    """p_{w0 x, w0 check(x)} = v^{l(w0)} on restricted Coxeter elements."""
    sys = ctx.system
    w0 = w0_elt(sys)
    expected = LaurentPoly.gen(length(sys, w0))
    tested = 0
    try:
        for m in weyl_group(sys):
            x = restricted_element_for(sys, m)
            if not in_waff(sys, x) or length(sys, x) > bound:
                continue
            tested += 1
            got = periodic_kl(ctx, w0 * x, w0 * check(ctx, x), radius)
            if got != expected:
                return _result(
                    "monomial identity",
                    False,
                    f"value {got} at length {length(sys, x)}, expected {expected}",
                )
    except (ConsistencyError, StabilizationError, WindowError) as exc:
        return _result("monomial identity", False, str(exc))
    return _result("monomial identity", True, f"{tested} restricted elements")


def check_inversion_identity(ctx: ModularContext, bound: int, radius: int) -> CheckResult:
    """v^{l(w0)} p_{w0 y, w0 check(w)}(v^-1) = p_{y,w} on all pairs in range."""
    sys = ctx.system
    w0 = w0_elt(sys)
    shift = LaurentPoly.gen(length(sys, w0))
    pairs = fails = 0
    try:
        elements = waff_elements(sys, bound)
        for w in elements:
            wv = check(ctx, w)
            for y in elements:
                pairs += 1
                lhs = shift * periodic_kl(ctx, w0 * y, w0 * wv, radius).bar()
                if lhs != periodic_kl(ctx, y, w, radius):
                    fails += 1
    except (ConsistencyError, StabilizationError, WindowError) as exc:
        return _result("inversion identity", False, str(exc))
    return _result(
        "inversion identity", fails == 0, f"{pairs} pairs, {fails} failures"
    )


def check_rank_one_oracle(ctx: ModularContext, bound: int, radius: int) -> CheckResult:
    """In the infinite dihedral case every coefficient lies in {0, 1, v} and
    every baby Verma has exactly a head and a one-step socle."""
    sys = ctx.system
    if sys.rank != 1:
        return _result("rank-one oracle", True, "skipped (rank > 1)")
    allowed = {LaurentPoly.zero(), LaurentPoly.one(), LaurentPoly.gen()}
    elements = waff_elements(sys, bound)
    for w in elements:
        for y in elements:
            if periodic_kl(ctx, y, w, radius) not in allowed:
                return _result("rank-one oracle", False, f"value outside {{0,1,v}}")
        table = loewy_layers(ctx, w, bound=bound + 2, radius=radius)
        expected = {
            (StdLabel.make(ctx, "L", w), 0): 1,
            (StdLabel.make(ctx, "L", check(ctx, w)), 1): 1,
        }
        if table.entries != expected:
            return _result("rank-one oracle", False, f"unexpected layers for {w}")
    return _result("rank-one oracle", True, f"{len(elements)} columns")


def check_kl_oracle(ctx: ModularContext, bound: int) -> CheckResult:
    """Canonical-basis recursion against bar-self-duality solving."""
    sys = ctx.system
    n = 0
    for w in waff_elements(sys, bound):
        n += 1
        if kl_basis(sys, w) != kl_basis_by_duality(sys, w):
            return _result("canonical basis oracle", False, f"mismatch at {w}")
    return _result("canonical basis oracle", True, f"{n} elements")


def check_bijections(ctx: ModularContext) -> CheckResult:
    """Restricted elements biject with the finite Weyl group; the rho-check
    map is a length-reversing involution on them."""
    sys = ctx.system
    res = [restricted_element_for(sys, m) for m in weyl_group(sys)]
    if len(set(res)) != sys.weyl_order:
        return _result("restricted bijection", False, "wrong count")
    top = length(sys, translation_elt(sys, sys.rho) * w0_elt(sys))
    for x in res:
        if not is_restricted_elt(ctx, x):
            return _result("restricted bijection", False, "non-restricted image")
        y = rho_check_involution(ctx, x)
        if rho_check_involution(ctx, y) != x:
            return _result("restricted bijection", False, "not an involution")
        if length(sys, y) != top - length(sys, x):
            return _result("restricted bijection", False, "length reversal fails")
    return _result("restricted bijection", True, f"{len(res)} elements")


def check_characters(ctx: ModularContext, seed: int, window: int = 200) -> CheckResult:
    """Truncated character total p^{|positive roots|} and the agreement of
    standard and costandard weight multiplicities."""
    sys = ctx.system
    total = baby_verma_total_dim(ctx, Weight.zero(sys.rank))
    expected = ctx.p ** sys.num_positive_roots
    if total != expected:
        return _result("character totals", False, f"{total} != {expected}")
    rng = random.Random(seed)
    for _ in range(window):
        lam = Weight(tuple(rng.randint(-3, 3) for _ in range(sys.rank)))
        mu = Weight(tuple(rng.randint(-6, 6) for _ in range(sys.rank)))
        if nabla_weight_dim(ctx, lam, mu) != verma_weight_dim(ctx, lam, mu):
            return _result("character totals", False, "weight table mismatch")
    return _result("character totals", True, f"total {total}")


def check_stabilization(ctx: ModularContext, bound: int, radius: int) -> CheckResult:
    """Tables at radius R and R + 2 agree on entries both report stabilized."""
    try:
        t1 = pkl_table(ctx, bound, radius)
        t2 = pkl_table(ctx, bound, radius + 2)
    except (ConsistencyError, StabilizationError, WindowError) as exc:
        return _result("stabilization", False, str(exc))
    compared = 0
    for key, entry in t1.entries.items():
        other = t2.entries.get(key)
        if other is None or not (entry.stabilized and other.stabilized):
            continue
        compared += 1
        if entry.poly != other.poly:
            return _result("stabilization", False, f"disagreement at {key}")
    return _result("stabilization", True, f"{compared} entries compared")


def check_galleries(
    ctx: ModularContext, bound: int, radius: int, seed: int, targets: int
) -> CheckResult:
    """Two random build galleries give identical reported coefficients.

    Pairs outside the support band are certified zero independently of
    the gallery, so the comparison runs over the in-band pairs that the
    engine actually reads off the windows.
    """
    sys = ctx.system
    rng = random.Random(seed)
    windows = [
        (PeriodicWindow(sys, radius), PeriodicWindow(sys, radius + 1)),
        (
            PeriodicWindow(sys, radius, gallery_seed=rng.randint(0, 10**9)),
            PeriodicWindow(sys, radius + 1, gallery_seed=rng.randint(0, 10**9)),
        ),
    ]
    elements = waff_elements(sys, bound)
    pairs = [
        (y, w)
        for w in elements
        for y in elements
        if in_support_band(sys, y, w)
    ]
    rng.shuffle(pairs)
    checked = 0
    for y, w in pairs[:targets]:
        vals = set()
        for lo, hi in windows:
            first = lo.coefficient(y, w)
            if first == hi.coefficient(y, w):
                vals.add(first)
        if len(vals) > 1:
            return _result("gallery independence", False, f"values {vals}")
        checked += 1
    return _result("gallery independence", True, f"{checked} in-band targets")


def check_translation_invariance(
    ctx: ModularContext, bound: int, radius: int, seed: int, triples: int
) -> CheckResult:
    """p_{t_nu y, t_nu w} = p_{y,w} for random root-lattice translations."""
    sys = ctx.system
    rng = random.Random(seed)
    elements = waff_elements(sys, bound)
    roots = [r.as_weight() for r in sys.positive_roots]
    done = 0
    try:
        for _ in range(triples):
            y, w = rng.choice(elements), rng.choice(elements)
            nu = rng.choice(roots) * rng.choice((1, -1))
            t = translation_elt(sys, nu)
            base = periodic_kl(ctx, y, w, radius, normalize=False)
            moved = periodic_kl(ctx, t * y, t * w, radius, normalize=False)
            if base != moved:
                return _result("translation invariance", False, f"at {nu}")
            done += 1
    except (ConsistencyError, StabilizationError, WindowError) as exc:
        return _result("translation invariance", False, str(exc))
    return _result("translation invariance", True, f"{done} triples")


def check_flipped_convention_fails(ctx: ModularContext) -> CheckResult:
    """Negative control: reversing the up-direction must break the suite.

    The probes are the support convention (nothing may sit strictly above
    the column label), the monomial normalization, and the inversion
    identity at the identity pair; a correctly oriented engine passes all
    three and the mirrored one cannot.
    """
    sys = ctx.system
    w0 = w0_elt(sys)
    top = LaurentPoly.gen(length(sys, w0))
    e = waff_elements(sys, 0)[0]
    try:
        win_lo = _FlippedWindow(sys, 8)
        win_hi = _FlippedWindow(sys, 9)

        def flipped(y, w):
            first = win_lo.rows[w].get(y, LaurentPoly.zero())
            if first != win_hi.rows[w].get(y, LaurentPoly.zero()):
                raise StabilizationError("flipped value did not stabilize")
            return first

        ev = check(ctx, e)
        support_ok = all(
            y == e or generic_height(sys, Alcove(y)) < 0
            for y in win_lo.rows[e]
        )
        monomial_ok = flipped(w0 * e, w0 * ev) == top
        inversion_ok = top * flipped(w0 * e, w0 * ev).bar() == flipped(e, e)
        good = support_ok and monomial_ok and inversion_ok
    except (ConsistencyError, StabilizationError):
        good = False
    return _result(
        "negative control",
        not good,
        "flipped up-direction breaks the identity suite as expected"
        if not good
        else "flipped convention unexpectedly satisfied the identity suite",
    )


class _FlippedWindow(PeriodicWindow):
    """The window recursion run with the opposite crossing orientation."""

    def __init__(self, sys, radius):
        import alcove_kl.periodic as periodic_mod

        original = periodic_mod._height
        periodic_mod._height = lambda s, x: -original(s, x)
        try:
            super().__init__(sys, radius)
        finally:
            periodic_mod._height = original


DEFAULT_BOUNDS = {1: (6, 8), 2: (4, 12)}


def run_suite(
    ctx: ModularContext,
    bound: int | None = None,
    radius: int | None = None,
    seed: int = 0,
) -> list[CheckResult]:
    """Run every check at the given bounds (defaults depend on the rank)."""
    rank_default = DEFAULT_BOUNDS.get(ctx.system.rank, (3, 14))
    bound = bound if bound is not None else rank_default[0]
    radius = radius if radius is not None else rank_default[1]
    return [
        check_monomial_identity(ctx, bound + 2, radius),
        check_inversion_identity(ctx, bound, radius),
        check_rank_one_oracle(ctx, bound + 2, radius),
        check_kl_oracle(ctx, bound + 2 if ctx.system.rank == 1 else bound + 1),
        check_bijections(ctx),
        check_characters(ctx, seed),
        check_stabilization(ctx, min(bound, radius - 2), radius),
        check_galleries(ctx, bound, radius, seed, targets=50),
        check_translation_invariance(ctx, bound, radius, seed, triples=25),
        check_flipped_convention_fails(ctx),
    ]
