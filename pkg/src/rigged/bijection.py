"""Degree-preserving bijection between configurations and rigged partitions.

A rigged partition is a weakly decreasing list of particle weights with an
integer energy label (rigging) per particle, weakly decreasing across equal
weights.  The forward map reads a configuration particle by particle:
float the heaviest remaining particle free by right moves, record its surplus
energy, drop it, and recurse; riggings are the surpluses minus the phase
shifts owed to the lighter particles still below.  The inverse map replays
that story backwards with left moves.

Total energy splits as E = E0 + E1, where E0 is the pairwise phase
interaction of the particle content and E1 the sum of riggings; length equals
the sum of weights.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from .configuration import (
    ZERO,
    AdmissibilityError,
    Configuration,
    check_level,
    is_admissible,
    weight,
)
from .moves import (
    InternalCheckError,
    build_free_configuration,
    left_sweeps,
    separate_highest,
)
from .phases import PhaseTable, gordon_phase, phase  # re-exported  # noqa: F401


class RiggingError(ValueError):
    """A rigged partition violates its ordering constraints."""


@dataclass(frozen=True)
class RiggedPartition:
    """Particle content with riggings: ((weight, rigging), ...) sorted as stored.

    Weights are weakly decreasing and positive; riggings are weakly decreasing
    wherever weights tie.  Riggings may be negative (they go negative exactly
    when the matching configuration dips below column zero).
    """

    parts: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        parts = tuple((int(w), int(r)) for w, r in self.parts)
        object.__setattr__(self, "parts", parts)
        for (w1, r1), (w2, r2) in zip(parts, parts[1:]):
            if w1 < w2:
                raise RiggingError(f"weights must be weakly decreasing, got {parts}")
            if w1 == w2 and r1 < r2:
                raise RiggingError(f"riggings must be weakly decreasing on equal weights, got {parts}")
        if parts and parts[-1][0] < 1:
            raise RiggingError(f"weights must be positive, got {parts}")

    @classmethod
    def of(cls, weights: tuple[int, ...], riggings: tuple[int, ...]) -> "RiggedPartition":
        if len(weights) != len(riggings):
            raise RiggingError("weights and riggings must have equal length")
        return cls(tuple(zip(weights, riggings)))

    @property
    def weights(self) -> tuple[int, ...]:
        return tuple(w for w, _ in self.parts)

    @property
    def riggings(self) -> tuple[int, ...]:
        return tuple(r for _, r in self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    @property
    def is_empty(self) -> bool:
        return not self.parts

    def multiplicity(self, w: int) -> int:
        return sum(1 for wi, _ in self.parts if wi == w)

    def min_rigging(self, w: int) -> int | None:
        """Smallest rigging among weight-w parts, or None when there are none."""
        matching = [r for wi, r in self.parts if wi == w]
        return min(matching) if matching else None

    def drop_weight(self, w: int) -> "RiggedPartition":
        """The partition with every weight-w part removed."""
        return RiggedPartition(tuple(p for p in self.parts if p[0] != w))

    def to_json_dict(self) -> dict:
        return {"parts": [{"weight": w, "rigging": r} for w, r in self.parts]}

    @classmethod
    def from_json_dict(cls, data: dict) -> "RiggedPartition":
        return cls(tuple((int(p["weight"]), int(p["rigging"])) for p in data.get("parts", ())))

    def sort_key(self) -> tuple:
        return (self.weights, self.riggings)

    def __str__(self) -> str:
        if not self.parts:
            return "()"
        ws = ",".join(str(w) for w in self.weights)
        rs = ",".join(str(r) for r in self.riggings)
        return f"(({ws}),({rs}))"


EMPTY = RiggedPartition()


def multiplicities(weights: tuple[int, ...], k: int) -> tuple[int, ...]:
    """Vector (m_1, ..., m_k) counting parts of each weight."""
    check_level(k)
    m = [0] * k
    for w in weights:
        if not 1 <= w <= k:
            raise RiggingError(f"weight {w} outside 1..{k}")
        m[w - 1] += 1
    return tuple(m)


def e0(weights: tuple[int, ...], k: int) -> int:
    """Pairwise interaction energy of the particle content."""
    check_level(k)
    ws = tuple(weights)
    return sum(phase(k, ws[i], ws[j]) for i in range(len(ws)) for j in range(i + 1, len(ws)))


def e1(riggings: tuple[int, ...]) -> int:
    """Free part of the energy: the sum of riggings."""
    return sum(riggings)


def iota(a: Configuration, k: int) -> RiggedPartition:
    """Particle content and riggings of an admissible configuration.

    Repeatedly floats the heaviest remaining particle free, records its
    surplus energy, and discards it; the i-th rigging is that surplus minus
    the phase shifts against every later (lighter or equal) particle.
    """
    if not is_admissible(a, k, 3):
        raise AdmissibilityError(f"{a} is not (k={k}, 3)-admissible")
    extracted: list[tuple[int, int]] = []  # (weight, surplus)
    cur = a
    while not cur.is_zero:
        l = weight(cur, k)
        sep = separate_highest(cur, k, l)
        extracted.append((l, sep.surplus))
        cur = sep.remainder
    ws = [w for w, _ in extracted]
    parts = []
    for i, (w, s) in enumerate(extracted):
        rho = s - sum(phase(k, w, wj) for wj in ws[i + 1 :])
        parts.append((w, rho))
    return RiggedPartition(tuple(parts))


def _kappa(rp: RiggedPartition, k: int, extra: int) -> Configuration:
    """Recursive inverse map, with ``extra`` additional settling sweeps per level."""
    if rp.is_empty:
        return ZERO
    l = rp.weights[0]
    m = rp.multiplicity(l)
    tail = RiggedPartition(rp.parts[m:])
    abar = _kappa(tail, k, extra)
    ws = rp.weights
    surpluses = [rp.riggings[i] + sum(phase(k, l, ws[j]) for j in range(i + 1, len(ws))) for i in range(m)]
    s_min = surpluses[-1]
    if abar.is_zero:
        t = max(0, -s_min)
    else:
        top = abar.support_max
        assert top is not None
        # Free particles must start strictly above everything already built,
        # with a clear three-column gap below the lowest of them.
        t = max(0, l * (top + 3) - s_min)
    t += extra
    energies = [s + t for s in surpluses]
    b = abar.superposed(build_free_configuration(l, energies, k))
    return left_sweeps(b, k, l, t, expected=m)


def kappa(rp: RiggedPartition, k: int) -> Configuration:
    """Configuration whose particle content and riggings are ``rp``.

    Builds the lighter particles first, drops the weight-l particles in as
    free particles far above, and settles everything with full left sweeps.
    The result does not depend on how far above they start; RIGGED_DEBUG=1
    recomputes with a higher start and asserts agreement.
    """
    check_level(k)
    if not rp.is_empty and rp.weights[0] > k:
        raise RiggingError(f"largest weight {rp.weights[0]} exceeds the level k={k}")
    result = _kappa(rp, k, 0)
    if os.environ.get("RIGGED_DEBUG", "") == "1":
        alt = _kappa(rp, k, rp.weights[0] if rp.parts else 1)
        if alt != result:
            raise InternalCheckError(f"inverse map depends on the settling count: {result} vs {alt}")
    return result
