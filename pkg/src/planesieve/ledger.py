"""Replayable elimination ledger.

Each registered case is a finite, deterministic search or inequality
scan whose outcome is a verdict: Eliminated when the full default
domain is confirmed, Violated when a check fails somewhere (with
witnesses), and Inconclusive when a caller-supplied bound truncated
the scan below its registered default.  Witnesses carry the concrete
numbers a verdict rests on, so a report is auditable without rerunning
anything.

Anchors are self-contained statements of the claim each case certifies;
they are duplicated in a bundled manifest (anchors.json) so the claim
text can be audited as data, and the test suite checks the two copies
agree.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from enum import Enum
from importlib import resources
from typing import Any, Callable, Sequence


class Verdict(Enum):
    ELIMINATED = "eliminated"
    VIOLATED = "violated"
    INCONCLUSIVE = "inconclusive"


CheckFn = Callable[[int | None], tuple[bool, list]]


@dataclass(frozen=True)
class CaseCheck:
    """One registered case: a check callable plus reporting metadata.

    bound_kind names the scan variable a caller may cap ("u", "n", "q"
    or "a"); None marks a fixed-domain case that accepts no bound.  The
    check receives the effective bound (or None) and returns (ok,
    witnesses).
    """

    id: str
    section: str
    anchor: str
    parameters: str
    check: CheckFn
    default_bound: int | None = None
    bound_kind: str | None = None


@dataclass(frozen=True)
class CaseResult:
    id: str
    verdict: Verdict
    witnesses: tuple
    elapsed_ms: float
    bound: int | None = None


def _default_registry() -> Sequence[CaseCheck]:
    from .cases import REGISTRY
    return REGISTRY


def get_case(case_id: str, registry: Sequence[CaseCheck] | None = None) -> CaseCheck:
    reg = _default_registry() if registry is None else registry
    for case in reg:
        if case.id == case_id:
            return case
    raise KeyError(f"unknown case id {case_id!r}")


def replay(case_id: str, bound: int | None = None,
           registry: Sequence[CaseCheck] | None = None) -> CaseResult:
    """Run one case.  A bound may only tighten the registered default."""
    case = get_case(case_id, registry)
    if bound is not None:
        if case.bound_kind is None:
            raise ValueError(f"case {case.id} has a fixed domain and takes no bound")
        if bound < 1:
            raise ValueError(f"bound must be positive, got {bound}")
    effective = case.default_bound
    if bound is not None and case.default_bound is not None:
        effective = min(bound, case.default_bound)
    start = time.perf_counter()
    ok, witnesses = case.check(effective)
    elapsed_ms = (time.perf_counter() - start) * 1000.0
    truncated = (effective is not None and case.default_bound is not None
                 and effective < case.default_bound)
    if not ok:
        verdict = Verdict.VIOLATED
    elif truncated:
        verdict = Verdict.INCONCLUSIVE
    else:
        verdict = Verdict.ELIMINATED
    return CaseResult(id=case.id, verdict=verdict, witnesses=tuple(witnesses),
                      elapsed_ms=elapsed_ms,
                      bound=effective if truncated else None)


def verify_all(jobs: int = 1, u_max: int | None = None, q_max: int | None = None,
               registry: Sequence[CaseCheck] | None = None) -> list[CaseResult]:
    """Replay every registered case in registry order.

    u_max and q_max tighten the scan caps of cases whose bound kind
    matches; other cases run their full default domain.  Results come
    back in registry order regardless of the worker count.
    """
    reg = _default_registry() if registry is None else registry
    if jobs < 1:
        raise ValueError(f"jobs must be >= 1, got {jobs}")

    def run(case: CaseCheck) -> CaseResult:
        bound = None
        if case.bound_kind == "u":
            bound = u_max
        elif case.bound_kind == "q":
            bound = q_max
        return replay(case.id, bound=bound, registry=reg)

    if jobs == 1:
        return [run(case) for case in reg]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(run, reg))


def all_eliminated(results: Sequence[CaseResult]) -> bool:
    return all(r.verdict is Verdict.ELIMINATED for r in results)


def report_record(result: CaseResult,
                  registry: Sequence[CaseCheck] | None = None) -> dict[str, Any]:
    """One serializable report record per case result."""
    case = get_case(result.id, registry)
    record: dict[str, Any] = {
        "id": result.id,
        "section": case.section,
        "anchor": case.anchor,
        "verdict": result.verdict.value,
        "witness_count": len(result.witnesses),
        "witnesses": [_plain(w) for w in result.witnesses[:10]],
        "elapsed_ms": round(result.elapsed_ms, 3),
    }
    if result.bound is not None:
        record["bound"] = result.bound
    return record


def _plain(value: Any) -> Any:
    if isinstance(value, (list, tuple)):
        return [_plain(x) for x in value]
    if isinstance(value, Enum):
        return value.value
    return value


def anchor_manifest() -> dict[str, dict[str, str]]:
    """The bundled id -> {section, anchor} manifest."""
    text = resources.files("planesieve").joinpath("anchors.json").read_text("utf-8")
    return json.loads(text)


def manifest_mismatches(registry: Sequence[CaseCheck] | None = None) -> list[str]:
    """Differences between the registry metadata and the bundled manifest."""
    reg = _default_registry() if registry is None else registry
    manifest = anchor_manifest()
    problems = []
    seen = set()
    for case in reg:
        seen.add(case.id)
        entry = manifest.get(case.id)
        if entry is None:
            problems.append(f"{case.id}: missing from manifest")
            continue
        if entry.get("section") != case.section:
            problems.append(f"{case.id}: section differs")
        if entry.get("anchor") != case.anchor:
            problems.append(f"{case.id}: anchor differs")
    for extra in sorted(set(manifest) - seen):
        problems.append(f"{extra}: in manifest but not registered")
    return problems
