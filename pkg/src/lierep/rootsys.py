"""Simple root systems in Bourbaki numbering.

Weights are tuples of integers in the fundamental-weight basis. The Cartan
matrix entry ``cartan[i][j]`` is <alpha_i^vee, alpha_j>, so column j holds
the simple root alpha_j in fundamental-weight coordinates. Long roots have
squared length 2.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from math import lcm

from lierep._backend import make_kernel

Weight = tuple[int, ...]

_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 3}
_EXCEPTIONAL_RANKS = {"E": (6, 7, 8), "F": (4,), "G": (2,)}


class InvalidType(ValueError):
    pass


@dataclass(frozen=True, order=True)
class SimpleType:
    letter: str
    rank: int

    def __post_init__(self):
        letter = self.letter.upper()
        object.__setattr__(self, "letter", letter)
        if not isinstance(self.rank, int) or isinstance(self.rank, bool):
            raise InvalidType(f"rank must be an integer, got {self.rank!r}")
        if letter in _MIN_RANK:
            if self.rank < _MIN_RANK[letter]:
                raise InvalidType(
                    f"type {letter} needs rank >= {_MIN_RANK[letter]}, got {self.rank}"
                )
        elif letter in _EXCEPTIONAL_RANKS:
            if self.rank not in _EXCEPTIONAL_RANKS[letter]:
                allowed = ", ".join(str(r) for r in _EXCEPTIONAL_RANKS[letter])
                raise InvalidType(f"type {letter} exists only in rank {allowed}, got {self.rank}")
        else:
            raise InvalidType(f"unknown type letter {self.letter!r}; expected one of A-G")

    @classmethod
    def parse(cls, text: str) -> SimpleType:
        m = re.fullmatch(r"\s*([A-Ga-g])\s*(\d+)\s*", text)
        if not m:
            raise InvalidType(f"cannot parse simple type {text!r}; expected e.g. 'E6'")
        return cls(m.group(1), int(m.group(2)))

    @property
    def is_classical(self) -> bool:
        return self.letter in "ABCD"

    def __str__(self):
        return f"{self.letter}{self.rank}"


def _chain(n: int) -> list[list[int]]:
    a = [[0] * n for _ in range(n)]
    for i in range(n):
        a[i][i] = 2
        if i + 1 < n:
            a[i][i + 1] = a[i + 1][i] = -1
    return a


_E8 = [
    [2, 0, -1, 0, 0, 0, 0, 0],
    [0, 2, 0, -1, 0, 0, 0, 0],
    [-1, 0, 2, -1, 0, 0, 0, 0],
    [0, -1, -1, 2, -1, 0, 0, 0],
    [0, 0, 0, -1, 2, -1, 0, 0],
    [0, 0, 0, 0, -1, 2, -1, 0],
    [0, 0, 0, 0, 0, -1, 2, -1],
    [0, 0, 0, 0, 0, 0, -1, 2],
]

_F4 = [
    [2, -1, 0, 0],
    [-1, 2, -1, 0],
    [0, -2, 2, -1],
    [0, 0, -1, 2],
]

# alpha_1 short, alpha_2 long
_G2 = [
    [2, -3],
    [-1, 2],
]


def cartan_matrix(t: SimpleType) -> list[list[int]]:
    n = t.rank
    if t.letter == "A":
        return _chain(n)
    if t.letter == "B":
        a = _chain(n)
        a[n - 1][n - 2] = -2
        return a
    if t.letter == "C":
        a = _chain(n)
        a[n - 2][n - 1] = -2
        return a
    if t.letter == "D":
        a = _chain(n)
        a[n - 2][n - 1] = a[n - 1][n - 2] = 0
        a[n - 3][n - 1] = a[n - 1][n - 3] = -1
        return a
    if t.letter == "E":
        return [row[:n] for row in _E8[:n]]
    if t.letter == "F":
        return [row[:] for row in _F4]
    return [row[:] for row in _G2]


def _half_lengths(cartan) -> list[Fraction]:
    """(alpha_i, alpha_i)/2 for each simple root, longest normalised to 1."""
    n = len(cartan)
    d: list[Fraction | None] = [None] * n
    d[0] = Fraction(1)
    stack = [0]
    while stack:
        i = stack.pop()
        for j in range(n):
            if j != i and cartan[i][j] and d[j] is None:
                # a_ij d_i = a_ji d_j
                d[j] = d[i] * cartan[i][j] / cartan[j][i]
                stack.append(j)
    top = max(d)
    return [x / top for x in d]


def _inverse(m) -> list[list[Fraction]]:
    """Exact inverse by fraction-free Gauss-Jordan elimination.

    No pivoting: every leading minor of a Cartan matrix is positive.
    """
    n = len(m)
    a = [list(row) + [int(i == j) for j in range(n)] for i, row in enumerate(m)]
    prev = 1
    for k in range(n):
        pk = a[k]
        piv = pk[k]
        for r in range(n):
            if r == k:
                continue
            row = a[r]
            f = row[k]
            # exact by Sylvester's identity
            a[r] = [(piv * x - f * y) // prev for x, y in zip(row, pk)]
        prev = piv
    det = prev
    return [[Fraction(x, det) for x in a[i][n:]] for i in range(n)]


def _neighbours(cartan) -> list[list[tuple[int, int]]]:
    n = len(cartan)
    return [[(j, cartan[i][j]) for j in range(n) if cartan[i][j]] for i in range(n)]


def _positive_roots(cartan) -> list[tuple[int, ...]]:
    """Positive roots in the simple-root basis, by root-string closure."""
    n = len(cartan)
    nbrs = _neighbours(cartan)
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    roots = list(simple)
    known = set(roots)
    layer = list(simple)
    while layer:
        nxt = []
        for beta in layer:
            for i in range(n):
                # p = how far beta - k*alpha_i stays a root
                p = 0
                if beta[i]:
                    down = list(beta)
                    while True:
                        down[i] -= 1
                        if tuple(down) in known:
                            p += 1
                        else:
                            break
                pairing = sum(a * beta[j] for j, a in nbrs[i])
                if p - pairing > 0:
                    up = beta[:i] + (beta[i] + 1,) + beta[i + 1:]
                    if up not in known:
                        known.add(up)
                        nxt.append(up)
        roots.extend(nxt)
        layer = nxt
    return sorted(roots, key=lambda r: (sum(r), tuple(-x for x in r)))


class RootSystem:
    """Immutable root-system data; build instances with :func:`build`."""

    def __init__(self, simple_type: SimpleType):
        self.simple_type = simple_type
        self.rank = n = simple_type.rank
        cartan = cartan_matrix(simple_type)
        self.cartan = tuple(tuple(row) for row in cartan)
        self.half_lengths = tuple(_half_lengths(cartan))
        self.inverse_cartan = tuple(tuple(row) for row in _inverse(cartan))
        self.pairing = tuple(
            tuple(self.inverse_cartan[i][j] * self.half_lengths[i] for j in range(n))
            for i in range(n)
        )
        self.positive_roots = tuple(_positive_roots(cartan))
        self.rho: Weight = (1,) * n

    def __repr__(self):
        return f"RootSystem({self.simple_type})"

    def __reduce__(self):
        return build, (self.simple_type,)

    @property
    def type(self) -> SimpleType:
        return self.simple_type

    def to_weight(self, root) -> Weight:
        """Express a root given in the simple-root basis in weight coordinates."""
        return tuple(sum(a * root[j] for j, a in nb) for nb in self._neighbours)

    @cached_property
    def _neighbours(self):
        return _neighbours(self.cartan)

    @cached_property
    def root_weights(self) -> tuple[Weight, ...]:
        return tuple(self.to_weight(r) for r in self.positive_roots)

    @cached_property
    def positive_coroots(self) -> tuple[tuple[int, ...], ...]:
        """Coroots of the positive roots, in the simple-coroot basis."""
        n = self.rank
        scale = lcm(*(x.denominator for x in self.half_lengths))
        d = [int(x * scale) for x in self.half_lengths]
        out = []
        for r, wt in zip(self.positive_roots, self.root_weights):
            # (alpha, alpha) = sum_i c_i (alpha_i, alpha_i)/2 <alpha, alpha_i^vee>, scaled
            norm = sum(r[i] * d[i] * wt[i] for i in range(n))
            coefs = []
            for i in range(n):
                q, rem = divmod(2 * r[i] * d[i], norm)
                assert rem == 0
                coefs.append(q)
            out.append(tuple(coefs))
        return tuple(out)

    @cached_property
    def kernel(self):
        scale = lcm(*(x.denominator for row in self.pairing for x in row))
        gram = [[int(x * scale) for x in row] for row in self.pairing]
        return make_kernel(self.cartan, self.root_weights, self.positive_coroots, gram, scale)

    def check_weight(self, w) -> Weight:
        w = tuple(w)
        if len(w) != self.rank:
            raise ValueError(f"{self.simple_type} weights have {self.rank} coordinates, got {len(w)}")
        if not all(isinstance(c, int) for c in w):
            raise ValueError(f"weight coordinates must be integers, got {w}")
        return w

    def in_root_lattice(self, w) -> bool:
        w = self.check_weight(w)
        n = self.rank
        return all(
            sum(self.inverse_cartan[k][i] * w[i] for i in range(n)).denominator == 1
            for k in range(n)
        )

    @property
    def highest_root(self) -> Weight:
        return self.to_weight(self.positive_roots[-1])


@lru_cache(maxsize=None)
def _build(simple_type: SimpleType) -> RootSystem:
    return RootSystem(simple_type)


def build(simple_type: SimpleType | str) -> RootSystem:
    if isinstance(simple_type, str):
        simple_type = SimpleType.parse(simple_type)
    return _build(simple_type)


def weight_pairing(rs: RootSystem, a, b) -> Fraction:
    a = rs.check_weight(a)
    b = rs.check_weight(b)
    n = rs.rank
    return sum(
        (a[i] * rs.pairing[i][j] * b[j] for i in range(n) if a[i] for j in range(n) if b[j]),
        Fraction(0),
    )


def is_dominant(w) -> bool:
    return all(c >= 0 for c in w)


def dominant_conjugate(rs: RootSystem, w) -> tuple[Weight, int, bool]:
    """Move ``w + rho`` into the dominant chamber.

    Returns the conjugate minus rho, the sign of the Weyl element used, and
    whether ``w + rho`` lies on a wall.
    """
    w = rs.check_weight(w)
    v, sign = rs.kernel.reflect_to_dominant([c + 1 for c in w])
    return tuple(c - 1 for c in v), sign, 0 in v


def weyl_orbit(rs: RootSystem, w) -> list[Weight]:
    return rs.kernel.orbit(rs.check_weight(w))


def _involution(t: SimpleType) -> list[int]:
    n = t.rank
    perm = list(range(n))
    if t.letter == "A":
        perm.reverse()
    elif t.letter == "D" and n % 2 == 1:
        perm[n - 2], perm[n - 1] = n - 1, n - 2
    elif t.letter == "E" and n == 6:
        perm = [5, 1, 4, 3, 2, 0]
    return perm


def dual_weight(rs: RootSystem, w) -> Weight:
    """Highest weight of the dual representation, -w0(w)."""
    w = rs.check_weight(w)
    if not is_dominant(w):
        raise ValueError(f"dual_weight needs a dominant weight, got {w}")
    return tuple(w[k] for k in _involution(rs.simple_type))


def parse_weight(text: str, rank: int | None = None) -> Weight:
    """Parse ``"2w1+2w2"``, ``"w3"``, ``"0"`` or a comma list ``"2,0,1"``."""
    s = text.replace(" ", "").lower()
    if "," in s or (s.lstrip("-").isdigit() and s != "0"):
        coords = tuple(int(x) for x in s.strip("()[]").split(","))
        if rank is not None and len(coords) != rank:
            raise ValueError(f"weight {text!r} has {len(coords)} coordinates, expected {rank}")
        return coords
    if s == "0":
        if rank is None:
            raise ValueError("rank needed to parse the zero weight")
        return (0,) * rank
    terms = {}
    for term in re.split(r"\+|(?=-)", s):
        if not term:
            continue
        m = re.fullmatch(r"(-?\d*)\*?(?:w|ω|omega)_?(\d+)", term)
        if not m:
            raise ValueError(f"cannot parse weight term {term!r} in {text!r}")
        coef = int(m.group(1)) if m.group(1) not in ("", "-") else int(m.group(1) + "1")
        idx = int(m.group(2))
        if idx < 1:
            raise ValueError(f"fundamental weights are numbered from 1, got w{idx}")
        terms[idx] = terms.get(idx, 0) + coef
    size = rank if rank is not None else max(terms)
    if max(terms) > size:
        raise ValueError(f"weight {text!r} refers to w{max(terms)} but rank is {size}")
    return tuple(terms.get(i + 1, 0) for i in range(size))


def format_weight(w) -> str:
    parts = []
    for i, c in enumerate(w, start=1):
        if c == 0:
            continue
        if c == 1:
            parts.append(f"w{i}")
        else:
            parts.append(f"{c}w{i}")
    return "+".join(parts) if parts else "0"
