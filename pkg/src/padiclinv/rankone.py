"""Cohomology dimension tables for rank-one modules over local fields.

Continuous characters of L^x (L unramified over Q_p of degree d) are
encoded by their value at the uniformizer, one integer exponent per
embedding for the action on units, and a flag for an extra norm
absolute-value twist.  Since L is unramified every embedding sends the
uniformizer p to p, so the algebraic value at the uniformizer is an
exact p-power and classification is decidable by exact comparison.

The three classes drive the dimension tables:

  NonPositiveAlgebraic   del(z) = prod tau(z)^m,  all m <= 0  (H^0 = E)
  PositiveNormTwist      del(z) = |N(z)| prod tau(z)^k, k >= 1 (H^2 = E)
  Generic                everything else

together with h0 - h1 + h2 = -d (local Euler characteristic) and
h1f = h0 + #{embeddings with exponent >= 1}.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .padic import PadicScalar
from .jets import WeightJet

NON_POSITIVE_ALGEBRAIC = "NonPositiveAlgebraic"
POSITIVE_NORM_TWIST = "PositiveNormTwist"
GENERIC = "Generic"


@dataclass(frozen=True)
class LocalCharacter:
    """Character of L^x: uniformizer value, unit exponents, norm twist.

    degree is d = [L:Q_p] (= the inertia degree here: L unramified).
    weight_exponents has one entry per embedding; entries may be exact
    Fractions for the triangulation characters, but classification
    requires integers.
    """

    degree: int
    uniformizer_value: object
    weight_exponents: tuple
    norm_twist: bool = False

    def __post_init__(self):
        if self.degree < 1:
            raise ValueError("degree must be >= 1")
        if len(self.weight_exponents) != self.degree:
            raise ValueError(
                f"need {self.degree} exponents, got {len(self.weight_exponents)}"
            )

    @property
    def is_jet_valued(self):
        return isinstance(self.uniformizer_value, WeightJet)

    def restriction_exponent(self):
        """Exponent of the restriction to Q_p^x on units: sum of m_tau."""
        return sum(self.weight_exponents)

    def algebraic_uniformizer_value(self, precision=None):
        """Exact p-power that a purely algebraic character would take at p.

        With the norm twist the expected value picks up |N(p)|_p = p^(-d).
        """
        total = self.restriction_exponent()
        if total != int(total):
            raise ValueError("half-integral exponents have no algebraic value")
        total = int(total)
        if self.norm_twist:
            total -= self.degree
        p = self._prime()
        n = precision or getattr(self.uniformizer_value, "N", 20)
        return PadicScalar.p_power(p, total, n)

    def _prime(self):
        val = self.uniformizer_value
        if isinstance(val, WeightJet):
            return val.value.p
        return val.p

    def tate_dual(self):
        """The character del^-1 * chi with chi(z) = N(z) |N(z)|_p.

        chi has all unit exponents 1, carries the norm twist, and takes
        the value 1 at the uniformizer; dimension-wise this realizes
        the cup-product duality pairing partner.
        """
        if self.is_jet_valued:
            raise ValueError("Tate dual needs a scalar-valued character")
        return LocalCharacter(
            degree=self.degree,
            uniformizer_value=self.uniformizer_value.inverse(),
            weight_exponents=tuple(1 - m for m in self.weight_exponents),
            norm_twist=not self.norm_twist,
        )


@dataclass(frozen=True)
class CohomologyProfile:
    h0: int
    h1: int
    h2: int
    h1f: int
    char_class: str

    def euler_characteristic(self):
        return self.h0 - self.h1 + self.h2

    def as_tuple(self):
        return (self.h0, self.h1, self.h2)


@dataclass(frozen=True)
class CocycleCoordinates:
    """Coordinates (a, b) in the two-dimensional induced-from-Q_p slot.

    The basis is (crystalline direction, complementary direction); the
    crystalline line is exactly b = 0.
    """

    a: object
    b: object


def _integral_exponents(delta):
    out = []
    for m in delta.weight_exponents:
        if isinstance(m, Fraction):
            if m.denominator != 1:
                raise ValueError(
                    "classification requires integer weight exponents"
                )
            m = int(m)
        out.append(m)
    return out


def classify_character(delta):
    """Decide which of the three dimension-table classes del falls in."""
    if delta.is_jet_valued:
        raise ValueError("classification needs a scalar uniformizer value")
    exps = _integral_exponents(delta)
    value = delta.uniformizer_value
    if not delta.norm_twist and all(m <= 0 for m in exps):
        if value == delta.algebraic_uniformizer_value():
            return NON_POSITIVE_ALGEBRAIC
    if delta.norm_twist and all(m >= 1 for m in exps):
        if value == delta.algebraic_uniformizer_value():
            return POSITIVE_NORM_TWIST
    return GENERIC


def cohomology_profile(delta):
    """Dimensions (h0, h1, h2, h1f) of the rank-one module of del.

    h1f = h0 + dim of the tangent space, the latter counting embeddings
    whose exponent is at least 1.
    """
    d = delta.degree
    cls = classify_character(delta)
    exps = _integral_exponents(delta)
    t_dim = sum(1 for m in exps if m >= 1)
    if cls == NON_POSITIVE_ALGEBRAIC:
        h0, h1, h2 = 1, d + 1, 0
    elif cls == POSITIVE_NORM_TWIST:
        h0, h1, h2 = 0, d + 1, 1
    else:
        h0, h1, h2 = 0, d, 0
    return CohomologyProfile(h0, h1, h2, h0 + t_dim, cls)


def induction_profile(delta):
    """Rank and cohomology of the induction down to Q_p.

    Shapiro's lemma identifies the cohomology of the induced module
    with that of del; the returned record carries the rank over the
    base ([L:Q_p] times 1) and re-checks the Euler characteristic
    -(rank) on the transported profile.
    """
    profile = cohomology_profile(delta)
    rank_over_base = delta.degree
    preserved = profile.euler_characteristic() == -rank_over_base
    return {
        "rank_over_base": rank_over_base,
        "profile": profile,
        "h_i_preserved": preserved,
    }


def is_crystalline_line(coords):
    """True when the cocycle sits on the crystalline axis (b = 0)."""
    return coords.b.is_zero()


def nonsplit_block_dims(r, d):
    """Dimension bookkeeping for a non-split extension of r twisted
    positive characters by r non-positive algebraic ones (not of the
    exceptional crystalline-image type): h1 = 2dr, h0 = h2 = 0,
    h1f = rd."""
    if r < 0 or d < 1:
        raise ValueError("need r >= 0 and d >= 1")
    return {"h0": 0, "h1": 2 * d * r, "h2": 0, "h1f": r * d}
