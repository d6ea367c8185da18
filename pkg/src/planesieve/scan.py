"""Feasibility sieve over square plane orders.

A row per u applies the necessary conditions in a fixed order: the two
halves of u^4+u^2+1 are coprime, the value is admissible, u^2+u+1 is
not a forbidden proper prime power, any repeated-prime part satisfies
the cofactor inequality, and optionally each candidate group passes
the involution counting gate.  Survival means "not yet eliminated",
never that a plane or an action exists.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .catalog import classes_for, involution_class_size
from .exactmath import Factorization, factorize, merge_factorizations
from .groups import GroupSpec, min_proper_index
from .plane import (LjunggrenClass, PlaneOrder, admissible_index,
                    ljunggren_classify, plane_order, quadratic_ratio_root)

U_CAP = 10**6


@dataclass(frozen=True)
class GateVerdict:
    """Outcome of the counting gate for one plane order and one group.

    class_modes records, per catalog involution class, either "pass"
    (some divisor r of the class size has class_size/r = u^2-u+1, so
    the counting identity lands exactly on v) or the failure mode.
    floor_ok reports the optional index-floor comparison v > floor;
    None means no floor is available for the family.
    """

    spec: str
    outcome: str  # "pass" | "fail" | "uncovered"
    class_modes: tuple[tuple[str, str], ...]
    witness_r: int | None = None
    floor: int | None = None
    floor_ok: bool | None = None


@dataclass(frozen=True)
class SieveRow:
    u: int
    v: int
    v_factors: Factorization
    filter_trace: tuple[tuple[str, bool], ...]
    survived: bool


def candidate_gate(plane: PlaneOrder, spec: GroupSpec, *,
                   apply_index_floor: bool = True) -> GateVerdict:
    """Test whether any catalog involution class of spec admits the
    counting identity v = (n_g/r_g)(u^2+u+1) at this plane order."""
    entries = classes_for(spec)
    if not entries:
        return GateVerdict(spec=str(spec), outcome="uncovered", class_modes=())

    ratio = plane.factor_minus
    modes = []
    witness_r = None
    for entry in entries:
        n_g = involution_class_size(entry)
        if n_g % ratio != 0:
            modes.append((entry.label, "non-divisor"))
            continue
        root = quadratic_ratio_root(ratio)
        if root is None:
            modes.append((entry.label, "wrong-quadratic-form"))
            continue
        if ratio * (root * root + root + 1) != plane.v:
            modes.append((entry.label, "v-mismatch"))
            continue
        modes.append((entry.label, "pass"))
        if witness_r is None:
            witness_r = n_g // ratio

    floor = floor_ok = None
    if apply_index_floor:
        floor = min_proper_index(spec)
        if floor is not None:
            floor_ok = plane.v > floor

    passed = witness_r is not None and floor_ok is not False
    return GateVerdict(spec=str(spec), outcome="pass" if passed else "fail",
                       class_modes=tuple(modes), witness_r=witness_r,
                       floor=floor, floor_ok=floor_ok)


def _row(u: int, candidates: tuple[GroupSpec, ...]) -> SieveRow:
    plane = plane_order(u)
    factors = merge_factorizations(factorize(plane.factor_plus),
                                   factorize(plane.factor_minus))
    trace = [("coprime-halves", gcd(plane.factor_plus, plane.factor_minus) == 1),
             ("admissible-value", admissible_index(plane.v))]

    cls = ljunggren_classify(u)
    trace.append((f"ljunggren-{cls.value}", cls is not LjunggrenClass.OTHER_PRIME_POWER))

    repeated = [(p, e) for p, e in factors.factors if e >= 2]
    if not repeated:
        trace.append(("kantor-not-applicable", True))
    else:
        holds = all(plane.v // p**e > 8 * p**e or p**e == 343 for p, e in repeated)
        trace.append(("kantor", holds))

    for spec in candidates:
        verdict = candidate_gate(plane, spec)
        trace.append((f"candidate-{verdict.spec}", verdict.outcome != "fail"))

    return SieveRow(u=u, v=plane.v, v_factors=factors,
                    filter_trace=tuple(trace),
                    survived=all(ok for _, ok in trace))


def sieve_orders(u_min: int, u_max: int,
                 group_candidates: list[GroupSpec] | None = None) -> list[SieveRow]:
    """One SieveRow per u in [u_min, u_max], in order."""
    if u_min < 2:
        raise ValueError(f"u_min must be >= 2, got {u_min}")
    if u_max < u_min:
        raise ValueError(f"inverted range [{u_min}, {u_max}]")
    if u_max > U_CAP:
        raise ValueError(f"u_max {u_max} exceeds the cap {U_CAP}")
    candidates = tuple(group_candidates or ())
    return [_row(u, candidates) for u in range(u_min, u_max + 1)]
