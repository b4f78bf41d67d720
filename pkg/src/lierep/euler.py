"""Euler characteristics of blown-up divisors and characteristic-cycle bookkeeping.

For a divisor D on a g-dimensional abelian variety whose singular locus is
finitely many points of multiplicities m_i, the strict transform after
blowing up those points satisfies

    (-1)^(g-1) chi(D~) = deg [D]^g - sum_i m_i [ (1+t)(1-t)^g / (1 - m_i t) ]_{t^(g-1)}

provided D~ is smooth (not checked here).

The theta divisor of a cubic threefold's intermediate Jacobian needs one
more input: a skyscraper correction at the origin, passed in rather than
derived.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial


class InconsistentData(ValueError):
    pass


def poly_mul(a, b) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def poly_pow(a, k: int) -> list[int]:
    out = [1]
    for _ in range(k):
        out = poly_mul(out, a)
    return out


@dataclass(frozen=True)
class RationalSeries:
    """numerator/denominator as dense coefficient lists, constant term first."""

    numerator: tuple[int, ...]
    denominator: tuple[int, ...] = (1,)

    def __post_init__(self):
        object.__setattr__(self, "numerator", tuple(self.numerator))
        object.__setattr__(self, "denominator", tuple(self.denominator))
        if not self.denominator or self.denominator[0] == 0:
            raise ValueError("denominator needs a nonzero constant term")

    def coefficients(self, k: int) -> list:
        """Coefficients of t^0 .. t^k of the power-series expansion."""
        if k < 0:
            raise ValueError(f"order must be >= 0, got {k}")
        num, den = self.numerator, self.denominator
        c0 = den[0]
        out = []
        for j in range(k + 1):
            acc = num[j] if j < len(num) else 0
            for i in range(1, min(j, len(den) - 1) + 1):
                acc -= den[i] * out[j - i]
            q = Fraction(acc, c0)
            out.append(int(q) if q.denominator == 1 else q)
        return out


def series_coeff(s: RationalSeries, k: int):
    """Exact coefficient of t^k; an int whenever it is integral."""
    return s.coefficients(k)[k]


def blowup_series(g: int, m: int) -> RationalSeries:
    """(1+t)(1-t)^g / (1 - m t)."""
    return RationalSeries(poly_mul([1, 1], poly_pow([1, -1], g)), (1, -m))


@dataclass(frozen=True)
class DivisorData:
    g: int
    self_intersection: int
    singular_multiplicities: tuple[int, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "singular_multiplicities", tuple(self.singular_multiplicities))
        if self.g < 1:
            raise ValueError(f"g must be positive, got {self.g}")

    @classmethod
    def principal(cls, g: int, multiplicities=()) -> DivisorData:
        """A principal polarization: deg Theta^g = g!."""
        return cls(g, factorial(g), tuple(multiplicities))


def blowup_chi(d: DivisorData) -> int:
    """Signed Euler characteristic (-1)^(g-1) chi(D~) of the blown-up divisor."""
    total = d.self_intersection
    for m in d.singular_multiplicities:
        total -= m * series_coeff(blowup_series(d.g, m), d.g - 1)
    return total


CUBIC_THREEFOLD_SKYSCRAPER = 3  # delta_0[2] + delta_0 + delta_0[-2]


def theta_chi(blowup_value: int, correction: int = CUBIC_THREEFOLD_SKYSCRAPER) -> int:
    return blowup_value - correction


def theta_chi_cubic() -> int:
    """chi(delta_Theta) for the theta divisor of a cubic threefold's intermediate Jacobian.

    g = 5, deg Theta^5 = 5!, one singular point of multiplicity 3 at the origin.
    """
    return theta_chi(blowup_chi(DivisorData.principal(5, [3])), CUBIC_THREEFOLD_SKYSCRAPER)


@dataclass(frozen=True)
class Stratum:
    label: str
    multiplicity: int
    gauss_degree: int

    def __post_init__(self):
        if self.multiplicity < 0 or self.gauss_degree < 0:
            raise ValueError(f"stratum {self.label!r}: multiplicity and degree must be >= 0")


@dataclass(frozen=True)
class CharacteristicCycle:
    strata: tuple[Stratum, ...] = ()

    def __post_init__(self):
        object.__setattr__(
            self, "strata", tuple(s if isinstance(s, Stratum) else Stratum(*s) for s in self.strata)
        )

    def __add__(self, other: CharacteristicCycle) -> CharacteristicCycle:
        return CharacteristicCycle(self.strata + other.strata)


def cc_chi(cc: CharacteristicCycle) -> int:
    """Euler characteristic as sum of multiplicity times Gauss-map degree."""
    return sum(s.multiplicity * s.gauss_degree for s in cc.strata)


def solve_point_multiplicity(chi: int, main_gauss_degree: int) -> int:
    """Multiplicity of a point stratum (Gauss degree 1) given chi and the main stratum."""
    m = chi - main_gauss_degree
    if m < 0:
        raise InconsistentData(
            f"chi = {chi} is smaller than the main Gauss degree {main_gauss_degree}"
        )
    return m


def gauss_degree_from_counts(total_pairs: int, fiber_degree: int) -> int:
    if fiber_degree <= 0:
        raise InconsistentData(f"fiber degree must be positive, got {fiber_degree}")
    q, r = divmod(total_pairs, fiber_degree)
    if r:
        raise InconsistentData(f"{fiber_degree} does not divide {total_pairs}")
    return q


def skew_line_pairs() -> int:
    """Ordered pairs of skew lines on a smooth cubic surface.

    The 27 lines are the weights of the minuscule E6 representation; two
    distinct lines are skew exactly when their weights pair to 1/3.
    """
    from lierep.rootsys import build, weight_pairing, weyl_orbit

    rs = build("E6")
    lines = weyl_orbit(rs, (1, 0, 0, 0, 0, 0))
    third = Fraction(1, 3)
    return sum(
        1
        for a in lines
        for b in lines
        if a != b and weight_pairing(rs, a, b) == third
    )
