"""Executable verification of the combinatorial identities.

Every check compares two quantities produced by deliberately disjoint code
paths (enumeration against series algebra, forward map against membership
predicates) and reports the outcome with a minimal witness on failure.  All
comparisons are exact; there are no tolerances anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .bijection import RiggedPartition, e0, e1, iota, kappa
from .characters import (
    RestrictedSet,
    chi_closed,
    config_sum,
    enumerate_rigged,
    floor_for,
    initial_columns_set,
    member,
    member_floor_difference,
    rigged_sum,
    satisfies_boundary,
    weighted_config_sum,
)
from .configuration import Configuration, check_level, enumerate_configurations, weight
from .moves import pass_particle, passing_history, right_move
from .phases import phase
from .qseries import QPolynomial, gordon_quadratic_form, inv_pochhammer, quadratic_form_Q


@dataclass(frozen=True)
class VerifyReport:
    """Outcome of one identity or property check."""

    name: str
    parameters: dict
    passed: bool
    lhs: str | None = None
    rhs: str | None = None
    first_mismatch: str | None = None

    def __post_init__(self) -> None:
        if self.passed != (self.first_mismatch is None):
            raise ValueError("a report passes exactly when it carries no mismatch witness")

    def to_json_dict(self) -> dict:
        return {
            "name": self.name,
            "parameters": dict(self.parameters),
            "passed": self.passed,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "first_mismatch": self.first_mismatch,
        }

    def __str__(self) -> str:
        params = " ".join(f"{key}={val}" for key, val in self.parameters.items())
        status = "PASS" if self.passed else f"FAIL ({self.first_mismatch})"
        return f"{self.name} {params}: {status}"


@lru_cache(maxsize=None)
def _iota(a: Configuration, k: int) -> RiggedPartition:
    return iota(a, k)


def _poly_mismatch(lhs: QPolynomial, rhs: QPolynomial) -> str | None:
    """Smallest degree where two polynomials disagree, or None."""
    degrees = sorted({d for d, _ in lhs.terms} | {d for d, _ in rhs.terms})
    for d in degrees:
        if lhs.coefficient(d) != rhs.coefficient(d):
            return f"q^{d}: {lhs.coefficient(d)} vs {rhs.coefficient(d)}"
    if lhs.order != rhs.order:
        return f"truncation orders differ: {lhs.order} vs {rhs.order}"
    return None


def _poly_report(name: str, parameters: dict, lhs: QPolynomial, rhs: QPolynomial) -> VerifyReport:
    witness = _poly_mismatch(lhs, rhs)
    return VerifyReport(name, parameters, witness is None, str(lhs), str(rhs), witness)


def _set_mismatch(lhs: set, rhs: set) -> str | None:
    diff = lhs.symmetric_difference(rhs)
    if not diff:
        return None
    witness = min(diff, key=lambda rp: rp.sort_key())
    side = "enumeration only" if witness in lhs else "predicate only"
    return f"{witness} in {side}"


def verify_roundtrip(k: int, N: int) -> VerifyReport:
    """Forward and inverse maps invert each other on every boundary-N configuration.

    Also checks degree and length preservation, non-negative riggings,
    injectivity, and that the image is exactly the boundary-restricted family
    of rigged partitions.
    """
    check_level(k)
    count = 0
    image: set[RiggedPartition] = set()
    witness = None
    for a in enumerate_configurations(k, 3, N):
        count += 1
        rp = _iota(a, k)
        if kappa(rp, k) != a:
            witness = f"{a}: inverse map returns {kappa(rp, k)}"
            break
        if any(r < 0 for r in rp.riggings):
            witness = f"{a}: negative rigging in {rp}"
            break
        if a.energy() != e0(rp.weights, k) + e1(rp.riggings):
            witness = f"{a}: energy {a.energy()} != E0+E1 of {rp}"
            break
        if a.length() != sum(rp.weights):
            witness = f"{a}: length {a.length()} != |{rp}|"
            break
        if rp in image:
            witness = f"{a}: image {rp} duplicated"
            break
        image.add(rp)
    if witness is None:
        predicate = set(enumerate_rigged(k, k, N))
        witness = _set_mismatch(image, predicate)
    return VerifyReport(
        "roundtrip", {"k": k, "N": N, "configurations": count}, witness is None, None, None, witness
    )


def _gordon_rhs(k: int, max_degree: int, window: int) -> QPolynomial:
    """Series side: sum over multiplicity vectors of q^ground / Pochhammer factors."""
    total = QPolynomial.zero(order=max_degree)

    def ground(m: tuple[int, ...]) -> int:
        return quadratic_form_Q(m, k) if window == 3 else gordon_quadratic_form(m)

    def rec(prefix: tuple[int, ...]) -> Iterable[tuple[int, ...]]:
        if len(prefix) == k:
            yield prefix
            return
        value = 0
        while True:
            m = prefix + (value,) + (0,) * (k - len(prefix) - 1)
            if ground(m) > max_degree:
                break
            yield from rec(prefix + (value,))
            value += 1

    for m in rec(()):
        g = ground(m)
        term = QPolynomial.q_power(g, order=max_degree)
        for ml in m:
            term = term * inv_pochhammer(ml, max_degree)
        total = total + term
    return total


def verify_gordon(k: int, max_degree: int) -> VerifyReport:
    """Window-3 character identity: enumeration equals the fermionic series."""
    lhs = config_sum(k, 3, max_degree=max_degree)
    rhs = _gordon_rhs(k, max_degree, window=3)
    return _poly_report("gordon", {"k": k, "max_degree": max_degree}, lhs, rhs)


def verify_gordon_r2(k: int, max_degree: int) -> VerifyReport:
    """Window-2 (classical Gordon) identity; columns start at 1 on the sum side."""
    lhs = config_sum(k, 2, a0=0, max_degree=max_degree)
    rhs = _gordon_rhs(k, max_degree, window=2)
    return _poly_report("gordon-r2", {"k": k, "max_degree": max_degree}, lhs, rhs)


def _chi_combination(k: int, l: int, a: int, b: int, N: int) -> QPolynomial:
    if b > 0:
        return (
            chi_closed(k, l, a, b, N)
            - chi_closed(k, l, a - 1, b + 2, N)
            - chi_closed(k, l, a, b - 1, N)
            + chi_closed(k, l, a - 1, b + 1, N)
        )
    return chi_closed(k, l, a, 0, N) - chi_closed(k, l, a - 1, 2, N)


def _chi_combination_cases(k: int, l: int, a: int, b: int, N: int) -> QPolynomial:
    """The same combination written as an explicit four-way case split."""
    if a > 0 and b > 0:
        return (
            chi_closed(k, l, a, b, N)
            - chi_closed(k, l, a - 1, b + 2, N)
            - chi_closed(k, l, a, b - 1, N)
            + chi_closed(k, l, a - 1, b + 1, N)
        )
    if a > 0:
        return chi_closed(k, l, a, 0, N) - chi_closed(k, l, a - 1, 2, N)
    if b > 0:
        return chi_closed(k, l, 0, b, N) - chi_closed(k, l, 0, b - 1, N)
    return chi_closed(k, l, 0, 0, N)


def verify_polynomial_identity(k: int, l: int, a: int, b: int, N: int) -> VerifyReport:
    """Finite character identity for fixed initial columns and boundary."""
    check_level(k, l)
    if l < 1 or a < 0 or b < 0 or a + b > l or N < 0:
        raise ValueError(f"need 1 <= l <= k, 0 <= a, 0 <= b, a + b <= l, N >= 0; got {(k, l, a, b, N)}")
    lhs, _ = weighted_config_sum(k, l, a, b, N)
    rhs = _chi_combination(k, l, a, b, N)
    params = {"k": k, "l": l, "a": a, "b": b, "N": N}
    alt = _chi_combination_cases(k, l, a, b, N)
    if _poly_mismatch(rhs, alt) is not None:
        params["case_split_agrees"] = False
    return _poly_report("polynomial", params, lhs, rhs)


def _image_by_columns(k: int, l: int, N: int) -> dict[tuple[int, int], set[RiggedPartition]]:
    """Forward-map images of the boundary-N families, grouped by (a_0, a_1)."""
    images: dict[tuple[int, int], set[RiggedPartition]] = {}
    for cfg in enumerate_configurations(k, 3, N):
        if weight(cfg, k) > l:
            continue
        key = (cfg.get(0), cfg.get(1))
        images.setdefault(key, set()).add(_iota(cfg, k))
    return images


def verify_init(k: int, l: int, a: int, b: int, N: int) -> VerifyReport:
    """The forward image of the (a_0, a_1) = (a, b) family equals its predicate set."""
    check_level(k, l)
    image = {
        _iota(cfg, k)
        for cfg in enumerate_configurations(k, 3, N, a0=a, a1=b)
        if weight(cfg, k) <= l
    }
    rset = initial_columns_set(a, b, l, k, boundary=N)
    predicate = {rp for rp in enumerate_rigged(k, l, N) if member(rp, rset, k)}
    witness = _set_mismatch(image, predicate)
    params = {"k": k, "l": l, "a": a, "b": b, "N": N, "size": len(image)}
    if witness is None and l == k:
        for rp in enumerate_rigged(k, l, N):
            if member_floor_difference(rp, a, b, k, N) != (rp in image):
                witness = f"{rp}: difference form disagrees with the image"
                break
    return VerifyReport("init-image", params, witness is None, None, None, witness)


def verify_init_cover(k: int, l: int, N: int) -> VerifyReport:
    """The column families partition the whole boundary-restricted family."""
    check_level(k, l)
    pairs = [(a, b) for a in range(l + 1) for b in range(l + 1 - a)]
    sets = {(a, b): initial_columns_set(a, b, l, k, boundary=N) for a, b in pairs}
    images = _image_by_columns(k, l, N)
    witness = None
    for rp in enumerate_rigged(k, l, N):
        hits = [(a, b) for a, b in pairs if member(rp, sets[(a, b)], k)]
        if len(hits) != 1:
            witness = f"{rp} lies in {len(hits)} families: {hits}"
            break
        if rp not in images.get(hits[0], set()):
            witness = f"{rp} claimed by {hits[0]} but not in that image"
            break
    return VerifyReport(
        "init-cover", {"k": k, "l": l, "N": N, "pairs": len(pairs)}, witness is None, None, None, witness
    )


def verify_boundary(k: int, l: int, N: int) -> VerifyReport:
    """Boundary confinement corresponds exactly to the rigging ceilings."""
    check_level(k, l)
    witness = None
    checked = 0
    for cfg in enumerate_configurations(k, 3, N + 3):
        if weight(cfg, k) > l:
            continue
        checked += 1
        inside = cfg.support_max is None or cfg.support_max <= N
        fits = satisfies_boundary(_iota(cfg, k), k, N)
        if inside != fits:
            witness = f"{cfg}: support inside boundary {inside} but ceilings {fits}"
            break
    return VerifyReport(
        "boundary", {"k": k, "l": l, "N": N, "configurations": checked}, witness is None, None, None, witness
    )


def _locate_initial_columns(rp: RiggedPartition, l: int, k: int) -> list[tuple[int, int]]:
    """All column pairs whose family contains ``rp`` (exactly one for valid input)."""
    pairs = [(a, b) for a in range(l + 1) for b in range(l + 1 - a)]
    return [
        (a, b) for a, b in pairs if member(rp, initial_columns_set(a, b, l, k), k)
    ]


def verify_recursion(l: int, k: int, N: int) -> VerifyReport:
    """Level-l column families decompose through the level-(l-1) families.

    For a + b < l the family splits off the members whose lowest weight-l
    rigging floats above 2l - 2a - b from those pinned exactly there with a
    smaller second column; for a + b = l every smaller-or-equal first column
    contributes, pinned at l - a.
    """
    check_level(k, l)
    if l < 1:
        raise ValueError("recursion needs l >= 1")
    witness = None
    level_sets = {
        (a, b): initial_columns_set(a, b, l, k, boundary=N)
        for a in range(l + 1)
        for b in range(l + 1 - a)
    }
    sub_sets = {
        (a, b): initial_columns_set(a, b, l - 1, k)
        for a in range(l)
        for b in range(l - a)
    }
    universe = list(enumerate_rigged(k, l, N))
    for rp in universe:
        if witness:
            break
        bar = rp.drop_weight(l)
        m_l = rp.multiplicity(l)
        low = rp.min_rigging(l)
        for (a, b), rset in level_sets.items():
            lhs = member(rp, rset, k)
            if a + b < l:
                pin = 2 * l - 2 * a - b
                hits = 0
                if member(bar, sub_sets[(a, b)], k) and (m_l == 0 or (low is not None and low >= pin)):
                    hits += 1
                for c in range(b):
                    if member(bar, sub_sets[(a, c)], k) and m_l >= 1 and low == pin:
                        hits += 1
            else:
                pin = l - a
                hits = 0
                for c in range(a + 1):
                    for d in range(l - c):
                        if member(bar, sub_sets[(c, d)], k) and m_l >= 1 and low == pin:
                            hits += 1
            if hits > 1:
                witness = f"{rp}: recursion terms overlap at (a,b)=({a},{b})"
                break
            if lhs != (hits == 1):
                witness = f"{rp}: recursion disagrees at (a,b)=({a},{b})"
                break
    return VerifyReport(
        "recursion", {"l": l, "k": k, "N": N, "universe": len(universe)}, witness is None, None, None, witness
    )


def verify_shift(k: int, l: int, samples: Iterable[Configuration]) -> VerifyReport:
    """Passing a weight-l probe shifts every rigging by its phase and commutes with the right move."""
    check_level(k, l)
    witness = None
    checked = 0
    for a in samples:
        checked += 1
        w = weight(a, k)
        if w >= l:
            raise ValueError(f"shift samples must have weight below l={l}, got {a} of weight {w}")
        rp = _iota(a, k)
        passed = pass_particle(a, k, l)
        expected = RiggedPartition(tuple((wi, ri + phase(k, l, wi)) for wi, ri in rp.parts))
        actual = _iota(passed, k)
        if actual != expected:
            witness = f"{a}: riggings shift to {actual.riggings}, expected {expected.riggings}"
            break
        if a.positively_supported and not passed.is_zero and passed.support_min < 2:
            witness = f"{a}: passed result {passed} dips below column 2"
            break
        if not a.is_zero:
            lhs = pass_particle(right_move(a, k, w), k, l)
            rhs = right_move(passed, k, w)
            if lhs != rhs:
                witness = f"{a}: passing does not commute with the right move"
                break
    return VerifyReport(
        "shift", {"k": k, "l": l, "samples": checked}, witness is None, None, None, witness
    )


def verify_fermionic_floor(k: int, l: int, N: int) -> VerifyReport:
    """Closed-form floor characters match brute-force enumeration."""
    check_level(k, l)
    witness = None
    for a in range(k + 1):
        if witness:
            break
        for b in range(k + 1 - a):
            closed = chi_closed(k, l, a, b, N)
            brute = rigged_sum(k, RestrictedSet(floor_for(a, b, k, k), (), l, N))
            mismatch = _poly_mismatch(closed, brute)
            if mismatch is not None:
                witness = f"(a,b)=({a},{b}): {mismatch}"
                break
    return VerifyReport("fermionic-floor", {"k": k, "l": l, "N": N}, witness is None, None, None, witness)


def shift_sample_space(k: int, l: int, width: int) -> list[Configuration]:
    """All positively supported admissible configurations of weight < l within the width."""
    return [
        cfg
        for cfg in enumerate_configurations(k, 3, width - 1)
        if weight(cfg, k) < l
    ]


#: The seven-step right-move chain of the weight-3 showcase configuration.
GOLDEN_CHAIN = tuple(
    Configuration(0, counts)
    for counts in [
        (3, 0, 0, 1),
        (2, 1, 0, 1),
        (1, 2, 0, 1),
        (1, 1, 1, 1),
        (1, 0, 2, 1),
        (1, 0, 1, 2),
        (1, 0, 0, 3),
    ]
)

#: The five nodes a weight-3 probe visits while passing (1,1,1) at level 4.
GOLDEN_PASS_NODES = (
    ("S", 3, Configuration(0, (1, 1, 1, 0, 3))),
    ("L", 2, Configuration(0, (1, 1, 1, 1, 2))),
    ("S", 1, Configuration(0, (1, 1, 2, 0, 2))),
    ("S", 0, Configuration(0, (1, 2, 1, 0, 2))),
    ("S", -1, Configuration(0, (3, 0, 1, 0, 2))),
)


def verify_golden() -> VerifyReport:
    """Fixed worked values: the showcase move chain, its image, and a passing history."""
    witness = None
    start = GOLDEN_CHAIN[0]
    chain = [start]
    for _ in range(6):
        chain.append(right_move(chain[-1], 3, 3))
    if tuple(chain) != GOLDEN_CHAIN:
        witness = f"move chain diverges: {[str(c) for c in chain]}"
    if witness is None and _iota(start, 3) != RiggedPartition.of((3, 1), (0, 0)):
        witness = f"image of {start} is {_iota(start, 3)}"
    if witness is None:
        nodes, result = passing_history(Configuration(0, (1, 1, 1)), 4, 3)
        shown = tuple((kind, pos, cfg) for kind, pos, cfg in nodes if pos <= 3)
        if shown != GOLDEN_PASS_NODES:
            witness = f"passing nodes diverge: {[(kd, p, str(c)) for kd, p, c in shown]}"
        elif result != Configuration(2, (1, 0, 2)):
            witness = f"passing result is {result}"
    return VerifyReport("golden", {}, witness is None, None, None, witness)


def verify_all(k_max: int = 3, n_max: int = 6, max_degree: int = 20) -> list[VerifyReport]:
    """The full verification grid; defaults match the acceptance grid."""
    reports: list[VerifyReport] = []
    for k in range(1, min(k_max, 3) + 1):
        reports.append(verify_roundtrip(k, 8))
    for k in range(1, min(k_max + 1, 4) + 1):
        reports.append(verify_gordon(k, max_degree))
    for k in range(1, min(k_max, 3) + 1):
        reports.append(verify_gordon_r2(k, max_degree))
    for k in range(1, min(k_max, 3) + 1):
        for l in range(1, k + 1):
            for N in range(n_max + 1):
                for a in range(l + 1):
                    for b in range(l + 1 - a):
                        reports.append(verify_polynomial_identity(k, l, a, b, N))
    for k in range(1, min(k_max, 3) + 1):
        for l in range(1, k + 1):
            for a in range(l + 1):
                for b in range(l + 1 - a):
                    reports.append(verify_init(k, l, a, b, n_max))
            reports.append(verify_init_cover(k, l, n_max))
            reports.append(verify_boundary(k, l, n_max))
            reports.append(verify_recursion(l, k, min(n_max, 4)))
            reports.append(verify_fermionic_floor(k, l, min(n_max, 4)))
    for k in range(2, min(k_max + 1, 4) + 1):
        for l in range(2, k + 1):
            reports.append(verify_shift(k, l, shift_sample_space(k, l, 6)))
    reports.append(verify_golden())
    return reports
