"""Quasi-particle moves on admissible configurations.

A configuration of weight exactly l carries weight-l particles at the columns
where S hits l or L hits k + l.  The elementary right move transfers one unit
from the highest such column to its right neighbour (energy +1); the left
move mirrors it at the lowest such column (energy -1).  Cutting the sequence
off just below (or above) a located particle and repeating locates all of
them, which is what makes "move the c-th particle" well defined.

The two long-running procedures live here as well: separating the highest
particle by right moves until it floats free above everything else, and
passing a heavy probe particle down through a lighter configuration from far
above.  Both are plain simulations of the elementary moves; their
termination caps are generous over-estimates and only trip on internal bugs,
never on valid input.
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
from .phases import phase


class MoveError(ValueError):
    """A move was requested that the configuration cannot perform."""


class InternalCheckError(RuntimeError):
    """An internal invariant failed; indicates a bug, not bad input."""


def _debug_enabled() -> bool:
    return os.environ.get("RIGGED_DEBUG", "") == "1"


@dataclass(frozen=True)
class ParticleSighting:
    """Column where a weight-l particle is detected, and by which functional."""

    position: int
    kind: str  # "S" or "L"; "S" preferred when both bounds are attained
    weight: int


@dataclass(frozen=True)
class FreeParticle:
    """A weight-l particle occupying two adjacent columns with nothing above."""

    position: int
    upper_count: int
    weight: int

    def __post_init__(self) -> None:
        if not 1 <= self.upper_count <= self.weight:
            raise ValueError(f"free particle needs 1 <= c <= l, got c={self.upper_count}, l={self.weight}")

    @property
    def energy(self) -> int:
        j, c, l = self.position, self.upper_count, self.weight
        return j * c + (j + 1) * (l - c)


@dataclass(frozen=True)
class Separation:
    """Outcome of floating the highest particle free by right moves."""

    steps: int
    free: FreeParticle
    surplus: int  # free.energy - steps; stable once the particle is free
    remainder: Configuration


def _require_weight_at_most(a: Configuration, k: int, l: int) -> int:
    check_level(k, l)
    w = weight(a, k)
    if w > l:
        raise AdmissibilityError(f"{a} has weight {w}, above the cap l={l}")
    return w


def _require_weight_exact(a: Configuration, k: int, l: int) -> None:
    w = _require_weight_at_most(a, k, l)
    if w < l:
        raise MoveError(f"{a} has weight {w} < l={l}; no weight-{l} particle to move")


def _scan_sighting(a: Configuration, k: int, l: int, from_top: bool) -> ParticleSighting | None:
    """Extreme column where S = l or L = k + l, or None if the weight is below l."""
    if a.is_zero or l == 0:
        return None
    ext = (0, 0, 0) + a.counts + (0, 0, 0)
    base = a.offset - 3  # column of ext[0]
    kl = k + l
    n = len(a.counts)
    rng = range(n + 3, 0, -1) if from_top else range(1, n + 4)
    for d in rng:
        if ext[d] + ext[d + 1] == l:
            return ParticleSighting(base + d, "S", l)
        if ext[d - 1] + 2 * ext[d] + 2 * ext[d + 1] + ext[d + 2] == kl:
            return ParticleSighting(base + d, "L", l)
    return None


def highest_particle(a: Configuration, k: int, l: int) -> ParticleSighting | None:
    """Largest column carrying a weight-l particle, or None if the weight is < l."""
    _require_weight_at_most(a, k, l)
    return _scan_sighting(a, k, l, from_top=True)


def lowest_particle(a: Configuration, k: int, l: int) -> ParticleSighting | None:
    """Smallest column carrying a weight-l particle, or None if the weight is < l."""
    _require_weight_at_most(a, k, l)
    return _scan_sighting(a, k, l, from_top=False)


def right_move(a: Configuration, k: int, l: int) -> Configuration:
    """Move the highest weight-l particle one step right; energy +1, length fixed."""
    _require_weight_exact(a, k, l)
    sight = _scan_sighting(a, k, l, from_top=True)
    assert sight is not None
    i = sight.position
    return a.with_delta((i, -1), (i + 1, +1))


def left_move(a: Configuration, k: int, l: int) -> Configuration:
    """Move the lowest weight-l particle one step left; energy -1, length fixed."""
    _require_weight_exact(a, k, l)
    sight = _scan_sighting(a, k, l, from_top=False)
    assert sight is not None
    j = sight.position
    return a.with_delta((j, +1), (j + 1, -1))


def particle_positions(a: Configuration, k: int, l: int, side: str = "right") -> list[int]:
    """Columns of all weight-l particles, located by repeated cut-off.

    ``side="right"`` cuts everything at or above each sighting and returns
    descending positions; ``side="left"`` cuts at or below (plus one column)
    and returns ascending positions.  Both procedures find the same number of
    particles.
    """
    _require_weight_at_most(a, k, l)
    if side not in ("right", "left"):
        raise ValueError(f"side must be 'right' or 'left', got {side!r}")
    positions: list[int] = []
    cur = a
    from_top = side == "right"
    while True:
        sight = _scan_sighting(cur, k, l, from_top=from_top)
        if sight is None:
            return positions
        positions.append(sight.position)
        if from_top:
            cur = cur.restricted(hi=sight.position - 1)
        else:
            cur = cur.restricted(lo=sight.position + 2)


def move_cth(a: Configuration, k: int, l: int, c: int, side: str = "right") -> Configuration:
    """Apply the raw unit transfer at the c-th weight-l particle.

    Only safe inside the composite orders that the move calculus permits; the
    result is checked and an out-of-order call surfaces as a MoveError.
    """
    if c < 1:
        raise MoveError(f"particle index must be positive, got {c}")
    positions = particle_positions(a, k, l, side)
    if len(positions) < c:
        raise MoveError(f"{a} holds {len(positions)} weight-{l} particles, no particle #{c}")
    p = positions[c - 1]
    try:
        if side == "right":
            moved = a.with_delta((p, -1), (p + 1, +1))
        else:
            moved = a.with_delta((p, +1), (p + 1, -1))
    except ValueError as exc:
        raise MoveError(f"particle #{c} of {a} cannot move {side}: {exc}") from None
    if not is_admissible(moved, k, 3) or weight(moved, k) > l:
        raise MoveError(
            f"moving particle #{c} of {a} {side} leaves the admissible class; "
            "composite move order violated"
        )
    return moved


def move_all(a: Configuration, k: int, l: int, side: str = "right", times: int = 1) -> Configuration:
    """Move every weight-l particle once (bottom-up composite), ``times`` times.

    One sweep applies the unit transfer at each located particle; the
    positions of the not-yet-moved particles are unaffected by the earlier
    transfers in the same sweep, so they are computed once per sweep.
    """
    cur = a
    for _ in range(times):
        positions = particle_positions(cur, k, l, side)
        if not positions:
            return cur
        if side == "right":
            changes = [d for p in positions for d in ((p, -1), (p + 1, +1))]
        else:
            changes = [d for p in positions for d in ((p, +1), (p + 1, -1))]
        cur = cur.with_delta(*changes)
        if not is_admissible(cur, k, 3) or weight(cur, k) > l:
            raise InternalCheckError(f"sweep left the admissible class at {cur}")
    return cur


def free_particle(a: Configuration, k: int, l: int) -> FreeParticle | None:
    """The highest particle as a free particle, or None if it is not free.

    Free means: located by S with a nonzero upper column and nothing anywhere
    above its two columns.
    """
    sight = _scan_sighting(a, k, l, from_top=True)
    if sight is None or sight.kind != "S":
        return None
    i = sight.position
    c = a.get(i)
    if c == 0:
        return None
    top = a.support_max
    if top is not None and top > i + 1:
        return None
    return FreeParticle(i, c, l)


def separate_highest(a: Configuration, k: int, l: int) -> Separation:
    """Right-move until the highest weight-l particle floats free, then detach it.

    Returns the move count t, the free particle, the surplus d - t (already
    stable at the first free moment), and the remainder with the particle's
    two columns and everything above them dropped.
    """
    if a.is_zero:
        raise MoveError("the zero configuration holds no particle to separate")
    _require_weight_exact(a, k, l)
    top = a.support_max
    assert top is not None
    # Energy rises by one per move but stays below length * (top + 2) while the
    # support cannot outgrow the free position, so this cap is unreachable
    # except through a bug.
    cap = a.length() * (top + 2) - a.energy() + 2
    cur = a
    for t in range(cap + 1):
        fp = free_particle(cur, k, l)
        if fp is not None:
            remainder = cur.restricted(hi=fp.position - 1)
            return Separation(t, fp, fp.energy - t, remainder)
        cur = right_move(cur, k, l)
    raise InternalCheckError(f"no free particle after {cap} right moves from {a}")


def build_free_configuration(l: int, energies: list[int], k: int) -> Configuration:
    """Superpose free weight-l particles at the given energies.

    Each energy d determines a unique column j = d // l and upper count
    c = l - (d mod l) in 1..l.  Energies must descend by at least the
    self-phase A(l, l) so the particles neither collide nor interact.
    """
    check_level(k, l)
    if l < 1:
        raise ValueError("free particles need positive weight")
    gap = phase(k, l, l)
    for d, d_next in zip(energies, energies[1:]):
        if d - d_next < gap:
            raise ValueError(
                f"free-particle energies must descend by at least {gap}, got {d} then {d_next}"
            )
    result = ZERO
    for d in energies:
        j, rem = divmod(d, l)
        c = l - rem
        result = result.superposed(Configuration(j, (c, l - c) if c < l else (l,)))
    return result


# -- passing a heavy probe ---------------------------------------------------


class _Scratch:
    """Mutable column buffer for long move loops.  Internal only.

    Keeps at least three zero columns of margin on both sides so window reads
    never go out of range.
    """

    __slots__ = ("lo", "vals")

    def __init__(self, a: Configuration, margin: int = 4):
        if a.is_zero:
            self.lo = -margin
            self.vals = [0] * (2 * margin)
        else:
            self.lo = a.offset - margin
            self.vals = [0] * margin + list(a.counts) + [0] * margin

    def get(self, col: int) -> int:
        j = col - self.lo
        if 0 <= j < len(self.vals):
            return self.vals[j]
        return 0

    def bump(self, col: int, delta: int) -> None:
        j = col - self.lo
        if j < 4:
            pad = 4 - j + 8
            self.vals[:0] = [0] * pad
            self.lo -= pad
            j += pad
        while j >= len(self.vals) - 4:
            self.vals.extend([0] * 8)
        self.vals[j] += delta
        if self.vals[j] < 0:
            raise InternalCheckError(f"column {col} driven negative")

    def to_configuration(self) -> Configuration:
        return Configuration(self.lo, tuple(self.vals))


def _left_positions_scratch(sc: _Scratch, k: int, l: int) -> list[int]:
    """Ascending columns of all weight-l particles, by left cut-off on a buffer."""
    vals = sc.vals[:]
    n = len(vals)
    kl = k + l
    positions: list[int] = []
    j = 0
    while j < n and vals[j] == 0:
        j += 1
    if j == n:
        return positions
    j -= 2
    zeroed_upto = 0
    while j <= n - 3:
        if vals[j] + vals[j + 1] == l or (
            vals[j - 1] + 2 * vals[j] + 2 * vals[j + 1] + vals[j + 2] == kl
        ):
            positions.append(sc.lo + j)
            # Cut off this particle and everything below it.
            for t in range(zeroed_upto, j + 2):
                vals[t] = 0
            zeroed_upto = j + 2
        j += 1
    return positions


def _lowest_sighting_scratch(sc: _Scratch, k: int, l: int, start_col: int | None) -> tuple[int, str] | None:
    """Lowest sighting on the buffer, scanning upward from ``start_col``."""
    vals = sc.vals
    n = len(vals)
    kl = k + l
    if start_col is None:
        j = 0
        while j < n and vals[j] == 0:
            j += 1
        if j == n:
            return None
        j -= 2
    else:
        j = max(2, start_col - sc.lo)
    while j <= n - 3:
        if vals[j] + vals[j + 1] == l:
            return sc.lo + j, "S"
        if vals[j - 1] + 2 * vals[j] + 2 * vals[j + 1] + vals[j + 2] == kl:
            return sc.lo + j, "L"
        j += 1
    return None


def left_sweeps(b: Configuration, k: int, l: int, times: int, expected: int | None = None) -> Configuration:
    """Apply ``times`` full bottom-up left sweeps to the weight-l particles of ``b``."""
    if times == 0:
        return b
    sc = _Scratch(b)
    for _ in range(times):
        positions = _left_positions_scratch(sc, k, l)
        if expected is not None and len(positions) != expected:
            raise InternalCheckError(
                f"expected {expected} weight-{l} particles during sweep, found {len(positions)}"
            )
        for p in positions:
            sc.bump(p, +1)
            sc.bump(p + 1, -1)
    return sc.to_configuration()


def _descend(a: Configuration, k: int, l: int, probe_column: int) -> tuple[list[tuple[str, int, Configuration]], Configuration]:
    """Drop a weight-l probe from ``probe_column`` through ``a`` by left moves.

    Records a node the first time the probe's position reaches each column,
    and stops as soon as the probe sits fully below the rest with a two-column
    gap; what lies above it then is the passed configuration.
    """
    sc = _Scratch(a)
    sc.bump(probe_column, l)
    nodes: list[tuple[str, int, Configuration]] = []
    last_pos: int | None = None
    min0 = min(0, a.support_min if not a.is_zero else 0)
    cap = l * (probe_column - min0 + 3 * (a.length() + 2) + 10) + 10
    for _ in range(cap + 1):
        found = _lowest_sighting_scratch(sc, k, l, None if last_pos is None else last_pos - 2)
        if found is None:
            raise InternalCheckError("probe vanished during descent")
        pos, kind = found
        if pos != last_pos:
            last_pos = pos
            # Stop once the probe is isolated: nothing below it, a two-column
            # gap above it, and everything above too light to interact.  The
            # isolated state is not part of the recorded history.
            below_clear = all(sc.get(i) == 0 for i in range(sc.lo, pos))
            if below_clear and sc.get(pos + 2) == 0 and sc.get(pos + 3) == 0:
                rest = sc.to_configuration().restricted(lo=pos + 2)
                if weight(rest, k) < l:
                    return nodes, rest
            nodes.append((kind, pos, sc.to_configuration()))
        sc.bump(pos, +1)
        sc.bump(pos + 1, -1)
    raise InternalCheckError(f"probe failed to pass {a} within {cap} moves")


def passing_history(a: Configuration, k: int, l: int) -> tuple[list[tuple[str, int, Configuration]], Configuration]:
    """Pass a weight-l probe through ``a`` and return (nodes, result).

    Nodes are (kind, position, configuration) triples, one per position the
    probe visits on its way down, starting from the placement column.  The
    result is independent of where the probe was dropped from; with
    RIGGED_DEBUG=1 that independence is rechecked from one column higher.
    """
    check_level(k, l)
    if l < 1:
        raise ValueError("the probe needs positive weight")
    w = weight(a, k)
    if w >= l:
        raise AdmissibilityError(f"passing needs weight below l={l}, but {a} has weight {w}")
    if a.is_zero:
        return [], ZERO
    top = a.support_max
    assert top is not None
    probe_column = max(3, top + 4)
    nodes, result = _descend(a, k, l, probe_column)
    if _debug_enabled():
        nodes2, result2 = _descend(a, k, l, probe_column + 1)
        if result2 != result:
            raise InternalCheckError(
                f"passing result depends on the placement column: {result} vs {result2}"
            )
        trimmed = [(kd, p, cfg) for kd, p, cfg in nodes2 if p <= top + 1]
        if [(kd, p, cfg) for kd, p, cfg in nodes if p <= top + 1] != trimmed:
            raise InternalCheckError("passing history depends on the placement column")
    return nodes, result


def pass_particle(a: Configuration, k: int, l: int) -> Configuration:
    """What a configuration of weight below l becomes after a weight-l probe passes it."""
    _, result = passing_history(a, k, l)
    return result
