"""Irreducible highest-weight representations: dimensions and dominant characters."""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from functools import cached_property

from lierep._backend import BudgetExceeded
from lierep.rootsys import RootSystem, Weight, build, dual_weight, format_weight, is_dominant

BUDGET_ENV = "LIEREP_CHAR_BUDGET"
DEFAULT_BUDGET = 100_000


class NotDominant(ValueError):
    pass


def default_budget() -> int:
    raw = os.environ.get(BUDGET_ENV)
    if raw is None:
        return DEFAULT_BUDGET
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{BUDGET_ENV} must be an integer, got {raw!r}") from None
    if value < 1:
        raise ValueError(f"{BUDGET_ENV} must be positive, got {value}")
    return value


def _dominant(rs: RootSystem, hw) -> Weight:
    hw = rs.check_weight(hw)
    if not is_dominant(hw):
        raise NotDominant(f"highest weight {format_weight(hw)} of {rs.simple_type} is not dominant")
    return hw


def weyl_dimension(rs: RootSystem, hw) -> int:
    """Exact dimension of the irreducible representation with highest weight ``hw``."""
    return rs.kernel.weyl_dimension(_dominant(rs, hw))


@dataclass(frozen=True)
class Irrep:
    rs: RootSystem
    highest_weight: Weight

    def __post_init__(self):
        if isinstance(self.rs, str):
            object.__setattr__(self, "rs", build(self.rs))
        object.__setattr__(self, "highest_weight", _dominant(self.rs, self.highest_weight))

    @classmethod
    def parse(cls, type_text: str, weight_text: str) -> Irrep:
        from lierep.rootsys import parse_weight

        rs = build(type_text)
        return cls(rs, parse_weight(weight_text, rs.rank))

    @cached_property
    def dimension(self) -> int:
        return weyl_dimension(self.rs, self.highest_weight)

    @property
    def simple_type(self):
        return self.rs.simple_type

    def is_trivial(self) -> bool:
        return not any(self.highest_weight)

    def label(self) -> str:
        return f"{self.rs.simple_type}:{format_weight(self.highest_weight)}"

    def __repr__(self):
        return f"Irrep({self.label()}, dim={self.dimension})"


def dual(irrep: Irrep) -> Irrep:
    return Irrep(irrep.rs, dual_weight(irrep.rs, irrep.highest_weight))


@dataclass(frozen=True)
class DominantCharacter:
    """Multiplicities of the dominant weights of one irrep."""

    irrep: Irrep
    multiplicities: dict = field(compare=False)

    def __getitem__(self, mu) -> int:
        return self.multiplicities.get(tuple(mu), 0)

    def __len__(self):
        return len(self.multiplicities)

    def items(self):
        return self.multiplicities.items()

    def orbit_sizes(self) -> dict:
        kernel = self.irrep.rs.kernel
        return {mu: len(kernel.orbit(mu)) for mu in self.multiplicities}

    def total_dimension(self) -> int:
        sizes = self.orbit_sizes()
        return sum(m * sizes[mu] for mu, m in self.multiplicities.items())


_CHAR_CACHE: dict = {}


def freudenthal_multiplicities(irrep: Irrep, budget: int | None = None) -> DominantCharacter:
    """Dominant character of ``irrep`` by Freudenthal's recursion.

    Dominant weights are processed by increasing depth below the highest
    weight. Raises :class:`BudgetExceeded` if the representation has more
    than ``budget`` dominant weights.
    """
    if budget is None:
        budget = default_budget()
    rs = irrep.rs
    key = (rs.simple_type, irrep.highest_weight)
    cached = _CHAR_CACHE.get(key)
    if cached is not None:
        if len(cached) > budget:
            raise BudgetExceeded(
                f"{irrep.label()} has {len(cached)} dominant weights, budget is {budget}"
            )
        return cached
    heights = [sum(r) for r in rs.positive_roots]
    ordered = [mu for mu, _ in rs.kernel.dominant_weights(irrep.highest_weight, heights, budget)]
    mults = rs.kernel.freudenthal(ordered)
    char = DominantCharacter(irrep, dict(mults))
    _CHAR_CACHE[key] = char
    return char


__all__ = [
    "BUDGET_ENV",
    "BudgetExceeded",
    "DEFAULT_BUDGET",
    "DominantCharacter",
    "Irrep",
    "NotDominant",
    "dual",
    "freudenthal_multiplicities",
    "weyl_dimension",
]
