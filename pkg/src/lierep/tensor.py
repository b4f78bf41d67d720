"""Tensor product decomposition by Klimyk's formula."""

from __future__ import annotations

from dataclasses import dataclass

from lierep.reps import Irrep, dual, freudenthal_multiplicities
from lierep.rootsys import format_weight


class MismatchedRootSystems(ValueError):
    pass


@dataclass(frozen=True)
class TensorDecomposition:
    factors: tuple[Irrep, Irrep]
    summands: tuple[tuple[Irrep, int], ...]

    def dimensions(self) -> list[int]:
        return [irrep.dimension for irrep, _ in self.summands]

    def total_dimension(self) -> int:
        return sum(irrep.dimension * m for irrep, m in self.summands)

    def multiplicity(self, hw) -> int:
        hw = tuple(hw)
        for irrep, m in self.summands:
            if irrep.highest_weight == hw:
                return m
        return 0

    def rhs(self) -> str:
        parts = []
        for irrep, m in self.summands:
            parts.append(str(irrep.dimension) if m == 1 else f"{m}x{irrep.dimension}")
        return " + ".join(parts)

    def lhs(self, tensor_sign: str = "(x)") -> str:
        v, w = self.factors
        right = str(w.dimension)
        if w != v and w == dual(v):
            right += "*"
        return f"{v.dimension} {tensor_sign} {right}"

    def render(self, tensor_sign: str = "(x)") -> str:
        return f"{self.lhs(tensor_sign)} = {self.rhs()}"

    def to_json(self) -> list[dict]:
        return [
            {"weight": format_weight(irrep.highest_weight), "dim": irrep.dimension, "mult": m}
            for irrep, m in self.summands
        ]


def _sort_key(item):
    irrep, _ = item
    return irrep.dimension, irrep.highest_weight


def decompose(v: Irrep, w: Irrep, budget: int | None = None) -> TensorDecomposition:
    """Decompose ``v (x) w`` into irreducibles.

    Weights of the smaller factor are translated by the other highest weight
    plus rho and reflected into the dominant chamber; wall terms drop out and
    the rest contribute the sign of the reflection.
    """
    if v.rs is not w.rs:
        raise MismatchedRootSystems(f"cannot tensor {v.rs.simple_type} with {w.rs.simple_type}")
    rs = v.rs
    small, large = (v, w) if v.dimension <= w.dimension else (w, v)
    char = freudenthal_multiplicities(small, budget)
    shifted = tuple(c + 1 for c in large.highest_weight)
    acc = rs.kernel.klimyk(list(char.items()), shifted)
    negative = {hw: m for hw, m in acc.items() if m < 0}
    if negative:
        raise ArithmeticError(f"negative multiplicities in Klimyk sum: {negative}")
    summands = sorted(((Irrep(rs, hw), m) for hw, m in acc.items()), key=_sort_key)
    out = TensorDecomposition((v, w), tuple(summands))
    expected = v.dimension * w.dimension
    if out.total_dimension() != expected:
        raise ArithmeticError(
            f"dimension bookkeeping failed for {v.label()} x {w.label()}: "
            f"{out.total_dimension()} != {expected}"
        )
    return out


def contains_summand_of_dim(v: Irrep, d: int, budget: int | None = None) -> list[tuple[Irrep, int]]:
    """Irreducible summands of ``v (x) v^dual`` of dimension exactly ``d``."""
    return [(irrep, m) for irrep, m in decompose(v, dual(v), budget).summands if irrep.dimension == d]
