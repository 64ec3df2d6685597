"""Closed-form size Ramsey bounds for ``(tK2, H)`` as data.

Each formula carries its own applicability predicate.  Formulas for the
connected number also bound the ordinary one from above, and exact values of
the ordinary number bound the connected one from below (every connected
arrowing graph is an arrowing graph).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import ceil
from typing import Callable

from .patterns import Cycle, Path, PathUnion, Pattern, normalize

UPPER, LOWER, EXACT = "upper", "lower", "exact"


@dataclass(frozen=True)
class Bound:
    value: int
    kind: str
    source: str
    conditions: str
    connected: bool
    note: str = ""


@dataclass
class BoundsRecord:
    t: int
    pattern: Pattern
    connected: bool
    bounds: list[Bound] = field(default_factory=list)
    omitted: list[tuple[str, str]] = field(default_factory=list)

    @property
    def best_upper(self) -> Bound | None:
        ups = [b for b in self.bounds if b.kind in (UPPER, EXACT)]
        return min(ups, key=lambda b: b.value, default=None)

    @property
    def best_lower(self) -> Bound | None:
        lows = [b for b in self.bounds if b.kind in (LOWER, EXACT)]
        return max(lows, key=lambda b: b.value, default=None)

    def interval(self) -> tuple[int | None, int | None]:
        lo, up = self.best_lower, self.best_upper
        return (lo.value if lo else None, up.value if up else None)

    def violations(self, value: int) -> list[Bound]:
        """Bounds that ``value`` (a computed exact number) would contradict."""
        bad = []
        for b in self.bounds:
            if b.kind in (UPPER, EXACT) and value > b.value:
                bad.append(b)
            if b.kind in (LOWER, EXACT) and value < b.value:
                bad.append(b)
        return bad

    def to_dict(self) -> dict:
        best = self.best_upper
        return {
            "query": {"t": self.t, "pattern": str(self.pattern), "connected": self.connected},
            "bounds": [
                {"value": b.value, "kind": b.kind, "source": b.source, "conditions": b.conditions,
                 "connected_formula": b.connected, "note": b.note,
                 "best": best is not None and b is best}
                for b in self.bounds],
            "omitted": [{"source": s, "reason": r} for s, r in self.omitted],
        }


@dataclass(frozen=True)
class Formula:
    source: str
    connected: bool      # formula is about the connected number
    kind: str
    conditions: str
    applies: Callable[[int, int, int], bool]
    value: Callable[[int, int, int], int]
    shape: str           # "path", "pathunion" or "cycle"


def _odd(x):
    return x % 2 == 1


def _even(x):
    return x % 2 == 0


# (t, n, m): t = matching size, n = number of paths (1 for a single path) or
# cycle length, m = path order
FORMULAS: list[Formula] = [
    Formula("2K2-vs-path-exact", False, EXACT, "t=2, m>=3",
            lambda t, n, m: t == 2 and n == 1 and m >= 3, lambda t, n, m: m + 1, "path"),
    Formula("2K2-vs-path-exact", True, EXACT, "t=2, m>=3",
            lambda t, n, m: t == 2 and n == 1 and m >= 3, lambda t, n, m: m + 1, "path"),
    Formula("tK2-vs-P4-exact", False, EXACT, "m=4, t>=1",
            lambda t, n, m: n == 1 and m == 4 and t >= 1, lambda t, n, m: ceil(5 * t / 2), "path"),
    Formula("tK2-vs-P5-exact", False, EXACT, "m=5, t>=1",
            lambda t, n, m: n == 1 and m == 5 and t >= 1,
            lambda t, n, m: 3 * t if _even(t) else 3 * t + 1, "path"),
    Formula("connected-tK2-vs-P4-upper", True, UPPER, "m=4, t>=1",
            lambda t, n, m: n == 1 and m == 4 and t >= 1,
            lambda t, n, m: 3 * t - 1 if _even(t) else 3 * t, "path"),
    Formula("tK2-vs-path-general-even", False, UPPER, "t even, m>=3",
            lambda t, n, m: n == 1 and m >= 3 and t >= 1 and _even(t),
            lambda t, n, m: t * (m + 1) // 2, "path"),
    Formula("tK2-vs-path-general-odd", False, UPPER, "t odd, m>=3",
            lambda t, n, m: n == 1 and m >= 3 and _odd(t),
            lambda t, n, m: (t + 1) * (m + 1) // 2 - 2, "path"),
    Formula("tK2-vs-path-general-even", True, UPPER, "t even, m>=3",
            lambda t, n, m: n == 1 and m >= 3 and t >= 1 and _even(t),
            lambda t, n, m: t * (m + 2) // 2 - 1, "path"),
    Formula("tK2-vs-path-general-odd", True, UPPER, "t odd, m>=3",
            lambda t, n, m: n == 1 and m >= 3 and _odd(t),
            lambda t, n, m: (t + 1) * (m + 2) // 2 - 3, "path"),
    Formula("path-union-cycle-or-forest", False, UPPER, "t=2, n>=1, m>=3",
            lambda t, n, m: t == 2 and n >= 1 and m >= 3,
            lambda t, n, m: min(n * m + 1, (n + 1) * (m - 1)), "pathunion"),
    Formula("connected-path-union-exact", True, EXACT, "t=2, n>=1, m>=3",
            lambda t, n, m: t == 2 and n >= 1 and m >= 3, lambda t, n, m: n * m + 1, "pathunion"),
    Formula("2K2-vs-2P_m-exact", False, EXACT, "t=2, n=2, m>=3",
            lambda t, n, m: t == 2 and n == 2 and m >= 3, lambda t, n, m: min(2 * m + 1, 3 * m - 3),
            "pathunion"),
    Formula("2K2-vs-3P_m-exact", False, EXACT, "t=2, n=3, m>=3",
            lambda t, n, m: t == 2 and n == 3 and m >= 3, lambda t, n, m: min(3 * m + 1, 4 * m - 4),
            "pathunion"),
    Formula("2K2-vs-4P_m-exact", False, EXACT, "t=2, n=4, m>=3",
            lambda t, n, m: t == 2 and n == 4 and m >= 3, lambda t, n, m: min(4 * m + 1, 5 * m - 5),
            "pathunion"),
    Formula("connected-3K2-vs-path-upper", True, UPPER, "t=3, m>=9",
            lambda t, n, m: t == 3 and n == 1 and m >= 9, lambda t, n, m: ceil((3 * m + 7) / 2), "path"),
    Formula("odd-t-composition-upper", False, UPPER, "t odd >=3, m>=9",
            lambda t, n, m: n == 1 and t >= 3 and _odd(t) and m >= 9,
            lambda t, n, m: ceil((3 * m + 7) / 2) + (t - 3) * (m + 1) // 2, "path"),
    Formula("odd-t-composition-upper", True, UPPER, "t odd >=3, m>=9",
            lambda t, n, m: n == 1 and t >= 3 and _odd(t) and m >= 9,
            lambda t, n, m: ceil((3 * m + 7) / 2) + (t - 3) * (m + 2) // 2, "path"),
    Formula("connected-2K2-vs-cycle-even", True, UPPER, "t=2, n even >=6",
            lambda t, n, m: t == 2 and n >= 6 and _even(n), lambda t, n, m: (3 * n + 4) // 2, "cycle"),
    Formula("connected-2K2-vs-cycle-odd", True, UPPER, "t=2, n odd >=7",
            lambda t, n, m: t == 2 and n >= 7 and _odd(n), lambda t, n, m: (3 * n + 7) // 2, "cycle"),
]


def _shape_args(p: Pattern):
    match p:
        case Path(m):
            return {"path", "pathunion"}, 1, m
        case PathUnion(n, m):
            return {"pathunion"}, n, m
        case Cycle(n):
            return {"cycle"}, n, 0
    return set(), 0, 0


def closed_form_bounds(t: int, h: Pattern, connected: bool) -> BoundsRecord:
    h = normalize(h)
    rec = BoundsRecord(t, h, connected)
    shapes, n, m = _shape_args(h)
    for f in FORMULAS:
        if f.shape not in shapes:
            continue
        if not f.applies(t, n, m):
            rec.omitted.append((f.source, f"conditions not met: {f.conditions}"))
            continue
        value = f.value(t, n, m)
        if f.connected == connected:
            kinds = [EXACT, LOWER, UPPER] if f.kind == EXACT else [f.kind]
            for kind in kinds:
                rec.bounds.append(Bound(value, kind, f.source, f.conditions, f.connected))
        elif connected:
            # ordinary number <= connected number
            if f.kind in (EXACT, LOWER):
                rec.bounds.append(Bound(value, LOWER, f.source, f.conditions, False,
                                        "ordinary value bounds the connected one from below"))
        else:
            if f.kind in (EXACT, UPPER):
                rec.bounds.append(Bound(value, UPPER, f.source, f.conditions, True,
                                        "connected value bounds the ordinary one from above"))
    return rec
