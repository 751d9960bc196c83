"""Alcove model of the affine Weyl group.

An alcove is a connected component of the complement of the affine
hyperplanes where a positive coroot pairs to an integer; alcoves
correspond bijectively to W_aff elements via A = x(A+) with A+ the
fundamental alcove.  This module provides the wall-crossing moves, the
generic height d (the signed count of up-crossings from A+, normalized
by d(A+) = 0), the partial order generated by up-crossings, and the
alcove form of the check operation.

Convention: a crossing is "up" when it moves toward the side where the
pairing with the crossed coroot increases.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import floor

from .errors import DomainError, IndeterminateError
from .rootsys import ModularContext, RootSystem
from .weylext import (
    ExtWeylElt,
    check,
    crossed_wall,
    fundamental_center,
    gen_indices,
    identity_elt,
    in_waff,
    pairing_frac,
    simple_reflection,
)

UP = "up"
DOWN = "down"


@dataclass(frozen=True, slots=True)
class Alcove:
    """An alcove labeled by the W_aff element carrying A+ onto it."""

    label: ExtWeylElt


def fundamental_alcove(sys: RootSystem) -> Alcove:
    return Alcove(identity_elt(sys))


def alcove_of(sys: RootSystem, x: ExtWeylElt) -> Alcove:
    if not in_waff(sys, x):
        raise DomainError("alcoves are labeled by W_aff elements")
    return Alcove(x)


@lru_cache(maxsize=None)
def _center(sys: RootSystem, x: ExtWeylElt):
    return x.act_affine(fundamental_center(sys))


def wall_cross(sys: RootSystem, a: Alcove, i: int) -> tuple[Alcove, str]:
    """Cross the wall of type i: returns (As, direction)."""
    if i not in gen_indices(sys):
        raise DomainError(f"no Coxeter generator with index {i}")
    target = a.label * simple_reflection(sys, i)
    c, c2 = _center(sys, a.label), _center(sys, target)
    wall = crossed_wall(sys, c, c2)
    assert wall is not None
    root, _ = wall
    direction = UP if pairing_frac(c2, root) > pairing_frac(c, root) else DOWN
    return Alcove(target), direction


@lru_cache(maxsize=None)
def generic_height(sys: RootSystem, a: Alcove) -> int:
    """d(A) = sum over positive coroots of the integer part of the pairing
    at an interior point; each up-crossing raises it by exactly one."""
    c = _center(sys, a.label)
    return sum(floor(pairing_frac(c, r)) for r in sys.positive_roots)


def generic_leq(sys: RootSystem, a: Alcove, b: Alcove, radius: int) -> bool:
    """Whether b is reachable from a by up-crossings.

    The search explores at most ``radius`` crossing steps; since d
    increases by one per step the query is conclusive whenever
    d(b) - d(a) <= radius, and raises IndeterminateError otherwise.
    """
    if a == b:
        return True
    gap = generic_height(sys, b) - generic_height(sys, a)
    if gap <= 0:
        return False
    if gap > radius:
        raise IndeterminateError(
            f"height gap {gap} exceeds search radius {radius}"
        )
    frontier = {a}
    for _ in range(gap):
        nxt = set()
        for cur in frontier:
            for i in gen_indices(sys):
                neighbor, direction = wall_cross(sys, cur, i)
                if direction == UP:
                    nxt.add(neighbor)
        if b in nxt:
            return True
        frontier = nxt
    return False


def alcove_check(ctx: ModularContext, a: Alcove) -> Alcove:
    """The alcove form of the check operation on W_aff labels."""
    return Alcove(check(ctx, a.label))


def up_neighbors(sys: RootSystem, a: Alcove) -> list[Alcove]:
    out = []
    for i in gen_indices(sys):
        neighbor, direction = wall_cross(sys, a, i)
        if direction == UP:
            out.append(neighbor)
    return out


def gallery_heights(sys: RootSystem, word) -> list[int]:
    """Heights along the gallery from A+ determined by a generator word."""
    a = fundamental_alcove(sys)
    out = [generic_height(sys, a)]
    for i in word:
        a, _ = wall_cross(sys, a, i)
        out.append(generic_height(sys, a))
    return out
