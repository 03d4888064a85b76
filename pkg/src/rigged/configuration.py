"""Finitely supported occupancy sequences with sliding-window constraints.

The basic object is a map from integer columns to non-negative occupation
numbers, zero outside a finite window.  A sequence is (k, r)-admissible when
every r consecutive columns hold at most k units in total.  For r = 3 two
window functionals refine this: S[j] = a_j + a_{j+1} and
L[j] = a_{j-1} + 2 a_j + 2 a_{j+1} + a_{j+2}.  A configuration has weight at
most l when S stays <= l and L stays <= k + l everywhere; the columns where
either bound is attained locate the quasi-particles that the rest of the
library moves around.

Everything is exact integer arithmetic on immutable values.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

#: Occupation numbers are bounded by k, and k itself is capped so that all
#: window sums stay far inside machine-word range.
MAX_LEVEL = 64


class AdmissibilityError(ValueError):
    """A configuration violates a window or weight bound it was required to satisfy."""


@dataclass(frozen=True)
class Level:
    """Admissibility level ``k`` with an optional weight cap ``l``."""

    k: int
    l: int | None = None

    def __post_init__(self) -> None:
        if not 1 <= self.k <= MAX_LEVEL:
            raise ValueError(f"level k must be in 1..{MAX_LEVEL}, got {self.k}")
        if self.l is not None and not 0 <= self.l <= self.k:
            raise ValueError(f"weight cap must satisfy 0 <= l <= k, got l={self.l} at k={self.k}")


def check_level(k: int, l: int | None = None) -> None:
    """Validate a (k, l) pair, raising ValueError on nonsense."""
    Level(k, l)


@dataclass(frozen=True)
class Configuration:
    """A finitely supported column-occupancy sequence.

    ``counts[j]`` is the occupation of column ``offset + j``; columns outside
    the stored window are zero.  Instances are canonical: the window never
    starts or ends with a zero column, and the unique empty value is the zero
    sequence.  Canonical form makes structural equality meaningful.
    """

    offset: int = 0
    counts: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        counts = tuple(int(c) for c in self.counts)
        if any(c < 0 for c in counts):
            raise ValueError(f"negative occupation number in {counts!r}")
        lo, hi = 0, len(counts)
        while lo < hi and counts[lo] == 0:
            lo += 1
        while hi > lo and counts[hi - 1] == 0:
            hi -= 1
        if lo == hi:
            object.__setattr__(self, "offset", 0)
            object.__setattr__(self, "counts", ())
        else:
            object.__setattr__(self, "offset", int(self.offset) + lo)
            object.__setattr__(self, "counts", counts[lo:hi])

    # -- basic queries ----------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.counts

    @property
    def support_min(self) -> int | None:
        return self.offset if self.counts else None

    @property
    def support_max(self) -> int | None:
        return self.offset + len(self.counts) - 1 if self.counts else None

    def get(self, column: int) -> int:
        j = column - self.offset
        if 0 <= j < len(self.counts):
            return self.counts[j]
        return 0

    __getitem__ = get

    def support(self) -> Iterator[tuple[int, int]]:
        """Yield (column, count) for every occupied column, ascending."""
        for j, c in enumerate(self.counts):
            if c:
                yield self.offset + j, c

    def energy(self) -> int:
        """Sum of column * occupation over the support."""
        return sum(i * c for i, c in self.support())

    def length(self) -> int:
        """Total number of units."""
        return sum(self.counts)

    @property
    def positively_supported(self) -> bool:
        return self.is_zero or self.offset >= 0

    # -- derived values ---------------------------------------------------

    def with_delta(self, *changes: tuple[int, int]) -> "Configuration":
        """Return a copy with ``delta`` added at each given column."""
        if not changes:
            return self
        lo = min(self.offset, *(col for col, _ in changes))
        hi = max(self.offset + len(self.counts) - 1, *(col for col, _ in changes))
        vals = [0] * (hi - lo + 1)
        for j, c in enumerate(self.counts):
            vals[self.offset + j - lo] = c
        for col, delta in changes:
            vals[col - lo] += delta
        return Configuration(lo, tuple(vals))

    def shifted(self, delta: int) -> "Configuration":
        """Translate every column by ``delta``."""
        if self.is_zero:
            return self
        return Configuration(self.offset + delta, self.counts)

    def reflected(self) -> "Configuration":
        """Mirror image: column i holds what column -i held."""
        if self.is_zero:
            return self
        hi = self.offset + len(self.counts) - 1
        return Configuration(-hi, tuple(reversed(self.counts)))

    def restricted(self, lo: int | None = None, hi: int | None = None) -> "Configuration":
        """Keep only columns in [lo, hi], zeroing the rest."""
        counts = tuple(
            c if (lo is None or i >= lo) and (hi is None or i <= hi) else 0
            for i, c in zip(range(self.offset, self.offset + len(self.counts)), self.counts)
        )
        return Configuration(self.offset, counts)

    def superposed(self, other: "Configuration") -> "Configuration":
        """Column-wise sum of two sequences."""
        if other.is_zero:
            return self
        if self.is_zero:
            return other
        lo = min(self.offset, other.offset)
        hi = max(self.offset + len(self.counts), other.offset + len(other.counts)) - 1
        vals = [0] * (hi - lo + 1)
        for i, c in self.support():
            vals[i - lo] += c
        for i, c in other.support():
            vals[i - lo] += c
        return Configuration(lo, tuple(vals))

    # -- serialization ----------------------------------------------------

    def to_text(self) -> str:
        """Render as ``offset:c0,c1,...``; the zero sequence is ``0:``."""
        return f"{self.offset}:" + ",".join(str(c) for c in self.counts)

    @classmethod
    def from_text(cls, text: str) -> "Configuration":
        """Parse ``offset:c0,c1,...``; a missing ``offset:`` prefix means offset 0."""
        text = text.strip()
        if ":" in text:
            head, _, tail = text.partition(":")
            offset = int(head) if head else 0
        else:
            offset, tail = 0, text
        tail = tail.strip()
        counts = tuple(int(p) for p in tail.split(",")) if tail else ()
        return cls(offset, counts)

    def to_json_dict(self) -> dict:
        return {"offset": self.offset, "counts": list(self.counts)}

    @classmethod
    def from_json_dict(cls, data: dict) -> "Configuration":
        return cls(int(data.get("offset", 0)), tuple(int(c) for c in data.get("counts", ())))

    def __str__(self) -> str:
        return self.to_text()


ZERO = Configuration()


def s_functional(a: Configuration, j: int) -> int:
    """Two-column window sum a_j + a_{j+1}."""
    return a.get(j) + a.get(j + 1)


def l_functional(a: Configuration, j: int) -> int:
    """Four-column weighted window sum a_{j-1} + 2 a_j + 2 a_{j+1} + a_{j+2}."""
    return a.get(j - 1) + 2 * a.get(j) + 2 * a.get(j + 1) + a.get(j + 2)


def is_admissible(a: Configuration, k: int, r: int = 3) -> bool:
    """True iff every window of ``r`` consecutive columns sums to at most ``k``."""
    check_level(k)
    if r not in (2, 3):
        raise ValueError(f"window size r must be 2 or 3, got {r}")
    if a.is_zero:
        return True
    cnt = a.counts
    window = 0
    for j in range(len(cnt) + r - 1):
        window += cnt[j] if j < len(cnt) else 0
        if j >= r:
            window -= cnt[j - r] if j - r < len(cnt) else 0
        if window > k:
            return False
    return True


def weight(a: Configuration, k: int) -> int:
    """Smallest l with S <= l and L <= k + l everywhere.

    Computed in closed form as max(max_j S[j], max_j L[j] - k, 0); zero exactly
    for the zero sequence.
    """
    if not is_admissible(a, k, 3):
        raise AdmissibilityError(f"{a} is not (k={k}, 3)-admissible")
    if a.is_zero:
        return 0
    # Pad so every window touching the support is covered.
    ext = (0, 0) + a.counts + (0, 0)
    best = 0
    for j in range(len(ext) - 1):
        s = ext[j] + ext[j + 1]
        if s > best:
            best = s
    for j in range(1, len(ext) - 2):
        l_val = ext[j - 1] + 2 * ext[j] + 2 * ext[j + 1] + ext[j + 2] - k
        if l_val > best:
            best = l_val
    return best


def enumerate_configurations(
    k: int,
    r: int,
    N: int | None,
    a0: int | None = None,
    a1: int | None = None,
    max_energy: int | None = None,
) -> Iterator[Configuration]:
    """Yield every positively supported (k, r)-admissible configuration once.

    The support is confined to columns 0..N; when ``max_energy`` is given the
    energy is additionally capped (and may replace N as the finiteness bound,
    since a unit at column i > max_energy already costs more than the cap).
    Unsatisfiable a0/a1 constraints simply produce an empty stream.
    """
    check_level(k)
    if r not in (2, 3):
        raise ValueError(f"window size r must be 2 or 3, got {r}")
    if N is None and max_energy is None:
        raise ValueError("need a boundary N or an energy cap to enumerate finitely")
    if max_energy is not None and max_energy < 0:
        return
    limit = N if N is not None else max_energy
    if max_energy is not None and N is not None:
        limit = min(N, max_energy)
    if limit < 0:
        return
    # Columns beyond the limit are identically zero, so a constraint out there
    # is either vacuous or unsatisfiable.
    if a1 is not None and limit < 1 and a1 != 0:
        return

    tail_len = r - 1

    def rec(i: int, tail: tuple[int, ...], budget: int | None) -> Iterator[tuple[int, ...]]:
        if i > limit:
            yield ()
            return
        cap = k - sum(tail)
        if budget is not None and i > 0:
            cap = min(cap, budget // i)
        if i == 0 and a0 is not None:
            choices: range | tuple[int, ...] = (a0,) if 0 <= a0 <= cap else ()
        elif i == 1 and a1 is not None:
            choices = (a1,) if 0 <= a1 <= cap else ()
        else:
            choices = range(cap + 1)
        for v in choices:
            rest = budget - i * v if budget is not None else None
            new_tail = (tail + (v,))[-tail_len:]
            for suffix in rec(i + 1, new_tail, rest):
                yield (v,) + suffix

    for counts in rec(0, (0,) * tail_len, max_energy):
        yield Configuration(0, counts)
