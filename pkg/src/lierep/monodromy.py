"""Orders of Gauss-map monodromy groups and Weyl groups of Tannaka groups."""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial

from lierep.rootsys import RootSystem, SimpleType, build

_EXCEPTIONAL_ORDERS = {
    ("E", 6): 51840,
    ("E", 7): 2903040,
    ("E", 8): 696729600,
    ("F", 4): 1152,
    ("G", 2): 12,
}


def weyl_group_order(rs: RootSystem | SimpleType | str) -> int:
    t = _as_type(rs)
    n = t.rank
    if t.letter == "A":
        return factorial(n + 1)
    if t.letter in "BC":
        return 2**n * factorial(n)
    if t.letter == "D":
        return 2 ** (n - 1) * factorial(n)
    return _EXCEPTIONAL_ORDERS[(t.letter, n)]


def reflection_group_order_bruteforce(rs: RootSystem | SimpleType | str, limit: int = 1_000_000) -> int:
    """Count the matrices generated by the simple reflections on the weight lattice.

    Raises ``BudgetExceeded`` once more than ``limit`` elements have been found.
    """
    if not isinstance(rs, RootSystem):
        rs = build(_as_type(rs))
    return rs.kernel.closure_order(limit)


def _as_type(x) -> SimpleType:
    if isinstance(x, RootSystem):
        return x.simple_type
    if isinstance(x, str):
        return SimpleType.parse(x)
    return x


@dataclass(frozen=True)
class GroupDescriptor:
    kind: str  # symmetric, hyperoctahedral, even_hyperoctahedral, weyl, trivial
    param: object = None

    @property
    def order(self) -> int:
        if self.kind == "symmetric":
            return factorial(self.param)
        if self.kind == "hyperoctahedral":
            return 2**self.param * factorial(self.param)
        if self.kind == "even_hyperoctahedral":
            return 2 ** (self.param - 1) * factorial(self.param)
        if self.kind == "weyl":
            return weyl_group_order(self.param)
        if self.kind == "trivial":
            return 1
        raise ValueError(f"unknown group kind {self.kind!r}")

    def name(self) -> str:
        k = self.param
        if self.kind == "symmetric":
            return f"S_{k}"
        if self.kind == "hyperoctahedral":
            return f"(±1)^{k} ⋊ S_{k}"
        if self.kind == "even_hyperoctahedral":
            return f"(±1)^{k}_0 ⋊ S_{k}"
        if self.kind == "weyl":
            return f"W({k})"
        return "1"

    def to_dict(self) -> dict:
        return {"kind": self.kind, "param": str(self.param) if self.param is not None else None,
                "name": self.name(), "order": self.order}


def symmetric(n: int) -> GroupDescriptor:
    return GroupDescriptor("symmetric", n)


def hyperoctahedral(k: int) -> GroupDescriptor:
    return GroupDescriptor("hyperoctahedral", k)


def even_hyperoctahedral(k: int) -> GroupDescriptor:
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    return GroupDescriptor("even_hyperoctahedral", k)


def weyl(t: SimpleType | str) -> GroupDescriptor:
    return GroupDescriptor("weyl", _as_type(t))


@dataclass(frozen=True)
class GroupPair:
    case: str
    monodromy: GroupDescriptor
    weyl: GroupDescriptor
    r: int | None = None

    @property
    def index(self) -> int:
        q, rem = divmod(self.weyl.order, self.monodromy.order)
        if rem:
            raise ArithmeticError(f"{self.monodromy.name()} order does not divide {self.weyl.name()}")
        return q

    def to_dict(self) -> dict:
        out = {
            "case": self.case,
            "monodromy": self.monodromy.to_dict(),
            "weyl": self.weyl.to_dict(),
            "index": self.index,
        }
        if self.r is not None:
            out["r"] = self.r
        return out


CASES = ("jacobian", "fano", "ppav")


def theorem_groups(case: str, g: int | None = None, hyperelliptic: bool = False) -> GroupPair:
    """Monodromy group M and Weyl group W for the three known families.

    * ``jacobian``: a curve of genus g in its Jacobian.
    * ``fano``: the Fano surface of a cubic threefold.
    * ``ppav``: the theta divisor of a general ppav of dimension g > 2,
      with r = g!/2.
    """
    if case in ("jacobian", "curve"):
        if g is None or g < 2:
            raise ValueError(f"jacobian case needs genus g >= 2, got {g}")
        if hyperelliptic:
            grp = hyperoctahedral(g - 1)
        else:
            if g == 2:
                raise ValueError("every genus 2 curve is hyperelliptic; pass hyperelliptic=True")
            grp = symmetric(2 * g - 2)
        return GroupPair("jacobian", grp, grp)
    if case in ("fano", "fano_surface"):
        grp = weyl("E6")
        return GroupPair("fano", grp, grp)
    if case in ("ppav", "general_ppav"):
        if g is None or g <= 2:
            raise ValueError(f"general ppav case needs g > 2, got {g}")
        r = factorial(g) // 2
        m = even_hyperoctahedral(r)
        w = hyperoctahedral(r) if g % 2 == 0 else even_hyperoctahedral(r)
        return GroupPair("ppav", m, w, r)
    raise ValueError(f"unknown case {case!r}; expected one of {', '.join(CASES)}")
