"""Exhaustive listing of irreducible representations by dimension, up to duality."""

from __future__ import annotations

from dataclasses import dataclass

from lierep.reps import weyl_dimension
from lierep.rootsys import SimpleType, Weight, build, dual_weight, format_weight, parse_weight

TABLE1_TYPES = tuple(
    SimpleType.parse(s)
    for s in "A2 A3 A4 A5 A6 A7 B3 B4 C2 C3 C4 D4 D5 E6 F4 G2".split()
)
PRESETS = {"table1": TABLE1_TYPES}

EXCEPTIONAL_TYPES = tuple(
    SimpleType.parse(s) for s in "E6 E7 E8 F4 G2".split()
)


def defining_dimension(t: SimpleType) -> int | None:
    n = t.rank
    return {"A": n + 1, "B": 2 * n + 1, "C": 2 * n, "D": 2 * n}.get(t.letter)


def min_nontrivial_dimension(t: SimpleType) -> int:
    """Smallest dimension of a nontrivial irrep of a classical type."""
    n = t.rank
    if t.letter == "A":
        return n + 1
    if t.letter == "B":
        return min(2 * n + 1, 2**n)
    if t.letter == "C":
        return 2 * n
    if t.letter == "D":
        return min(2 * n, 2 ** (n - 1))
    raise ValueError(f"{t} is not classical")


# B2 = C2 and D3 = A3 are listed once, under C2 and A3
_FIRST_RANK = {"A": 1, "B": 3, "C": 2, "D": 4}


def all_types_up_to(d: int) -> list[SimpleType]:
    """Every simple type that can carry a nontrivial irrep of dimension <= d."""
    out = []
    for letter, first in _FIRST_RANK.items():
        n = first
        while min_nontrivial_dimension(SimpleType(letter, n)) <= d:
            out.append(SimpleType(letter, n))
            n += 1
    out.extend(EXCEPTIONAL_TYPES)
    return out


def canonical_weight(rs, w) -> Weight:
    """Representative of ``{w, dual(w)}``: the larger coordinate tuple (A2 keeps w1, not w2)."""
    return max(tuple(w), dual_weight(rs, w))


def dominant_weights_up_to(rs, bound: int) -> list[tuple[Weight, int]]:
    """All dominant weights of dimension <= bound, by depth-first search from 0.

    Children raise one coordinate at index >= the last one raised, so each
    weight is generated once; a branch stops as soon as its dimension exceeds
    the bound, which is safe because dimension grows in every coordinate.
    For the same reason a coordinate whose fundamental weight alone is too
    big is never raised.
    """
    n = rs.rank
    dim = rs.kernel.weyl_dimension
    unit = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    viable = [i for i in range(n) if dim(unit[i]) <= bound]
    found = []
    stack = [((0,) * n, 0)]
    while stack:
        w, start = stack.pop()
        d = dim(w)
        if d > bound:
            continue
        found.append((w, d))
        for i in viable:
            if i < start:
                continue
            child = w[:i] + (w[i] + 1,) + w[i + 1:]
            stack.append((child, i))
    return found


@dataclass(frozen=True)
class Entry:
    simple_type: SimpleType | None  # None marks the single trivial representation
    weight: Weight
    dimension: int
    is_defining: bool = False
    is_self_dual: bool = True

    def sort_key(self):
        t = self.simple_type
        return (
            self.dimension,
            t.letter if t else "",
            t.rank if t else 0,
            tuple(-c for c in self.weight),
        )

    def label(self) -> str:
        if self.simple_type is None:
            return "trivial"
        return f"{self.simple_type}:{format_weight(self.weight)}"

    def to_dict(self) -> dict:
        return {
            "type": str(self.simple_type) if self.simple_type else None,
            "weight": format_weight(self.weight) if self.simple_type else "0",
            "dim": self.dimension,
            "is_defining": self.is_defining,
            "is_self_dual": self.is_self_dual,
        }

    @classmethod
    def from_dict(cls, data: dict) -> Entry:
        if data["type"] is None:
            return cls(None, (), data["dim"], data["is_defining"], data["is_self_dual"])
        t = SimpleType.parse(data["type"])
        return cls(
            t,
            parse_weight(data["weight"], t.rank),
            data["dim"],
            data["is_defining"],
            data["is_self_dual"],
        )


TRIVIAL = Entry(None, (), 1)


@dataclass(frozen=True)
class EnumerationResult:
    mode: str  # "exact" or "bound"
    n: int
    entries: tuple[Entry, ...]
    types: tuple[SimpleType, ...] | None = None
    exclude_defining: bool = False

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    def labels(self) -> list[str]:
        return [e.label() for e in self.entries]

    def rows(self) -> dict[int, list[Entry]]:
        out: dict[int, list[Entry]] = {}
        for e in self.entries:
            out.setdefault(e.dimension, []).append(e)
        return out

    def grid(self, types=None, dims=None) -> dict[int, dict[SimpleType, list[Weight]]]:
        """Cells ``grid[d][type]`` holding the listed highest weights, in entry order."""
        types = list(types or self.types or sorted({e.simple_type for e in self.entries if e.simple_type}))
        dims = list(dims or range(2 if self.mode == "bound" else self.n, self.n + 1))
        cells = {d: {t: [] for t in types} for d in dims}
        for e in self.entries:
            if e.dimension in cells and e.simple_type in cells[e.dimension]:
                cells[e.dimension][e.simple_type].append(e.weight)
        return cells

    def to_dict(self) -> dict:
        return {
            "mode": self.mode,
            "n": self.n,
            "types": [str(t) for t in self.types] if self.types is not None else None,
            "exclude_defining": self.exclude_defining,
            "entries": [e.to_dict() for e in self.entries],
        }

    @classmethod
    def from_dict(cls, data: dict) -> EnumerationResult:
        types = data.get("types")
        return cls(
            data["mode"],
            data["n"],
            tuple(Entry.from_dict(e) for e in data["entries"]),
            tuple(SimpleType.parse(t) for t in types) if types is not None else None,
            data.get("exclude_defining", False),
        )


def _entries_for(t: SimpleType, lo: int, hi: int, exclude_defining: bool) -> list[Entry]:
    rs = build(t)
    defining = defining_dimension(t)
    out = []
    for w, d in dominant_weights_up_to(rs, hi):
        if d < lo:
            continue
        dw = dual_weight(rs, w)
        if w != canonical_weight(rs, w):
            continue
        is_defining = (
            defining is not None and d == defining and w == (1,) + (0,) * (t.rank - 1)
        )
        if exclude_defining and is_defining:
            continue
        out.append(Entry(t, w, d, is_defining, dw == w))
    return out


def _resolve_types(rank_window) -> tuple[SimpleType, ...] | None:
    if rank_window is None:
        return None
    if isinstance(rank_window, str):
        if rank_window not in PRESETS:
            raise ValueError(f"unknown preset {rank_window!r}; known: {', '.join(PRESETS)}")
        return PRESETS[rank_window]
    return tuple(SimpleType.parse(t) if isinstance(t, str) else t for t in rank_window)


def irreps_of_dim(d: int) -> EnumerationResult:
    """Every irrep of a simple Lie algebra of dimension exactly ``d``, up to duality."""
    if d < 1:
        raise ValueError(f"dimension must be >= 1, got {d}")
    if d == 1:
        return EnumerationResult("exact", 1, (TRIVIAL,))
    entries = []
    for t in all_types_up_to(d):
        entries.extend(_entries_for(t, d, d, exclude_defining=False))
    entries.sort(key=Entry.sort_key)
    return EnumerationResult("exact", d, tuple(entries))


def irreps_up_to(n: int, rank_window=None, exclude_defining: bool = False) -> EnumerationResult:
    """All nontrivial irreps of dimension <= n, up to duality.

    ``rank_window`` restricts the search to a list of simple types or a named
    preset such as ``"table1"``.
    """
    if n < 1:
        raise ValueError(f"bound must be >= 1, got {n}")
    types = _resolve_types(rank_window)
    entries = []
    for t in types if types is not None else all_types_up_to(n):
        entries.extend(_entries_for(t, 2, n, exclude_defining))
    entries.sort(key=Entry.sort_key)
    return EnumerationResult("bound", n, tuple(entries), types, exclude_defining)
