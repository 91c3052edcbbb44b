"""The three-parameter family of minimal tori and Klein bottles in S^5.

A surface of the family is the image of the doubly periodic map

    F(x, y) = (sin(a x) f1(y), cos(a x) f1(y),
               sin(b x) f2(y), cos(b x) f2(y),
               sin(c x) f3(y), cos(c x) f3(y)),

    f1 = c1 sin(y),  f2 = c2 cos(y),  f3 = c3 sqrt(1 - k^2 sin^2 y),

with integer frequencies.  Two regimes are admissible: the generalized
case c^2 > a^2 + b^2, and the boundary case c^2 = a^2 + b^2 (the
classical tau-surfaces of Lawson, where f3 vanishes identically and the
image lies in an equatorial S^3).

The squared amplitudes c1^2, c2^2, c3^2 and the modulus k^2 are fixed
rational functions of (a^2, b^2, c^2); they are computed here in exact
integer arithmetic with a single final division, so quantities such as
c2^2 = 5/8 are bit-reproducible.

The induced metric is diagonal,

    g = P(y) dx^2 + 2 P(y) / (Q + 2 P(y)) dy^2,
    P(y) = (c^2 + (b^2 - a^2) cos 2y) / 2,   Q = c^2 - a^2 - b^2,

and the total area of the 2 pi-periodic parameter torus has the closed
form

    S = 4 pi / sqrt(c^2 - a^2) * (2 (c^2 - a^2) E(k) - Q K(k)),
    k^2 = (b^2 - a^2) / (c^2 - a^2),

(Lawson boundary: S = 8 pi a E(sqrt(a^2 - b^2) / a) for a >= b).  The
surface area is S divided by the covering degree of the parameter torus
over the image, which is 2 exactly when a half-period deck
transformation survives (subcases I and II below, and every Lawson
surface) and 1 otherwise.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from math import gcd

import numpy as np

from .elliptic import Modulus, complete_E, complete_K
from .errors import DegenerateTripleError, InvalidTripleError, NotInFamilyError

__all__ = [
    "Case",
    "Coefficients",
    "Functional",
    "Phi",
    "Subcase",
    "SurfaceClass",
    "Topology",
    "Triple",
    "area_closed",
    "area_quadrature",
    "canonicalize",
    "classify",
    "coefficients",
    "expected_symmetry",
    "extremal_index",
    "immersion",
    "injectivity_scan",
    "metric",
    "symmetry_residual",
    "validate",
]


class Case(enum.Enum):
    GENERALIZED = "generalized"
    LAWSON = "lawson"


class Topology(enum.Enum):
    TORUS = "torus"
    KLEIN_BOTTLE = "klein-bottle"


class Subcase(enum.Enum):
    LAWSON = "lawson"
    I = "I"
    II = "II"
    III = "III"


class Functional(enum.Enum):
    TORUS = "torus-functional"
    KLEIN = "klein-functional"


class Phi(enum.Enum):
    """The three candidate half-period identifications of the parameter plane."""

    PHI1 = "phi1"  # (x, y) -> (x + pi, pi - y)
    PHI2 = "phi2"  # (x, y) -> (x + pi, -y)
    PHI3 = "phi3"  # (x, y) -> (x + pi, y + pi)

    def apply(self, x, y):
        if self is Phi.PHI1:
            return x + math.pi, math.pi - y
        if self is Phi.PHI2:
            return x + math.pi, -y
        return x + math.pi, y + math.pi


@dataclass(frozen=True)
class Triple:
    """Admissible frequency triple.

    Direct construction accepts any admissible ordering (the coefficient
    formulas are order-sensitive, and the non-canonical orderings are
    legitimate descriptions of the same surface).  ``validate`` and
    ``canonicalize`` produce the canonical representative: gcd-reduced,
    generalized case ordered a <= b, Lawson case ordered a >= b.

    In the Lawson case c is determined by c^2 = a^2 + b^2 and is not
    stored (it is an integer only for Pythagorean pairs).
    """

    case: Case
    a: int
    b: int
    c: int | None = None

    def __post_init__(self) -> None:
        for name in ("a", "b"):
            v = getattr(self, name)
            if not isinstance(v, int) or isinstance(v, bool):
                raise InvalidTripleError(f"{name} must be an integer, got {v!r}")
            if v < 0:
                raise InvalidTripleError(
                    f"{name} must be non-negative (use validate() to fold signs), got {v}"
                )
        if self.case is Case.GENERALIZED:
            if not isinstance(self.c, int) or isinstance(self.c, bool):
                raise InvalidTripleError(f"c must be an integer, got {self.c!r}")
            if self.c < 0:
                raise InvalidTripleError(
                    f"c must be non-negative (use validate() to fold signs), got {self.c}"
                )
            if self.a == 0 and self.b == 0 and self.c == 0:
                raise DegenerateTripleError("degenerate: (0, 0, 0) is not a surface")
            if self.c * self.c <= self.a * self.a + self.b * self.b:
                raise NotInFamilyError(
                    "not in family: c^2 must exceed a^2 + b^2 "
                    f"(got c^2 = {self.c * self.c}, a^2 + b^2 = {self.a**2 + self.b**2}; "
                    "the boundary c^2 = a^2 + b^2 must be requested as the Lawson case)"
                )
        elif self.case is Case.LAWSON:
            if self.c is not None:
                raise InvalidTripleError("Lawson case determines c; do not pass it")
            if self.a == 0 or self.b == 0:
                raise DegenerateTripleError(
                    "degenerate: Lawson surfaces require nonzero a and b"
                )
        else:
            raise InvalidTripleError(f"unknown case {self.case!r}")

    @property
    def c_squared(self) -> int:
        return self.a * self.a + self.b * self.b if self.case is Case.LAWSON else self.c * self.c

    @property
    def c_real(self) -> float:
        """The third frequency as a real number (sqrt(a^2 + b^2) on the boundary)."""
        return math.sqrt(self.c_squared) if self.case is Case.LAWSON else float(self.c)

    @property
    def is_canonical(self) -> bool:
        vals = [v for v in (self.a, self.b, self.c) if v is not None]
        if math.gcd(*vals) != 1:
            return False
        return self.a >= self.b if self.case is Case.LAWSON else self.a <= self.b

    def swapped(self) -> "Triple":
        """The same surface described with a and b interchanged."""
        return Triple(self.case, self.b, self.a, self.c)

    def label(self) -> str:
        if self.case is Case.LAWSON:
            return f"tau_({self.a},{self.b})"
        return f"T_({self.a},{self.b},{self.c})"


def validate(case: Case | str, a: int, b: int, c: int | None = None) -> Triple:
    """Validate raw integers and return the canonical Triple.

    Signs are folded (each sign flip is an ambient isometry), the gcd is
    divided out, and the canonical ordering is applied.  Inadmissible
    parameters raise :class:`NotInFamilyError` or
    :class:`DegenerateTripleError`.
    """
    if isinstance(case, str):
        case = Case(case.lower())
    for name, v in (("a", a), ("b", b)) + ((("c", c),) if c is not None else ()):
        if not isinstance(v, int) or isinstance(v, bool):
            raise InvalidTripleError(f"{name} must be an integer, got {v!r}")
    if case is Case.LAWSON:
        if c is not None:
            raise InvalidTripleError("Lawson case determines c; do not pass it")
        return canonicalize(Triple(case, abs(a), abs(b)))
    if c is None:
        raise InvalidTripleError("generalized case requires c")
    return canonicalize(Triple(case, abs(a), abs(b), abs(c)))


def canonicalize(t: Triple) -> Triple:
    """Gcd-reduce and order the triple canonically.  Idempotent.

    The ordering uses the a <-> b isometry of the family: generalized
    triples are ordered a <= b (so the area modulus k^2 >= 0), Lawson
    pairs a >= b (so the functional-value modulus sqrt(a^2 - b^2)/a is
    real).
    """
    if t.case is Case.LAWSON:
        d = gcd(t.a, t.b)
        a, b = t.a // d, t.b // d
        if a < b:
            a, b = b, a
        return Triple(Case.LAWSON, a, b)
    d = gcd(t.a, gcd(t.b, t.c))
    a, b, c = t.a // d, t.b // d, t.c // d
    if a > b:
        a, b = b, a
    return Triple(Case.GENERALIZED, a, b, c)


@dataclass(frozen=True)
class Coefficients:
    """Squared immersion amplitudes and metric data of a triple.

    All four rationals are exact to the last bit: numerators and
    denominators are formed in integer arithmetic and divided once.
    ``q`` is the integer Q = c^2 - a^2 - b^2 (zero exactly on the Lawson
    boundary) and ``P`` evaluates the metric coefficient
    (c^2 + (b^2 - a^2) cos 2y) / 2.
    """

    c1_sq: float
    c2_sq: float
    c3_sq: float
    k2: float
    q: int
    a_sq: int
    b_sq: int
    c_sq: int

    @property
    def c1(self) -> float:
        return math.sqrt(self.c1_sq)

    @property
    def c2(self) -> float:
        return math.sqrt(self.c2_sq)

    @property
    def c3(self) -> float:
        return math.sqrt(self.c3_sq)

    def P(self, y):
        return 0.5 * (self.c_sq + (self.b_sq - self.a_sq) * np.cos(2.0 * np.asarray(y)))

    def P_prime(self, y):
        return -(self.b_sq - self.a_sq) * np.sin(2.0 * np.asarray(y))


def coefficients(t: Triple) -> Coefficients:
    """Amplitudes (c1^2, c2^2, c3^2) and modulus k^2 of the triple.

    The formulas are applied to the triple in its stored order; for
    a > b the modulus k^2 comes out negative, which is admissible
    everywhere downstream.  Denominators cannot vanish: the family
    condition gives c^2 - a^2 > b^2 >= 0 and c^2 - b^2 > a^2 >= 0 in the
    generalized case, and equal b^2, a^2 > 0 on the Lawson boundary.
    """
    a2, b2, c2 = t.a * t.a, t.b * t.b, t.c_squared
    if t.case is Case.LAWSON:
        # c1^2 = c2^2 = 1 and c3^2 = 0 exactly; the third solution drops out.
        return Coefficients(
            c1_sq=1.0,
            c2_sq=1.0,
            c3_sq=0.0,
            k2=(b2 - a2) / b2,
            q=0,
            a_sq=a2,
            b_sq=b2,
            c_sq=c2,
        )
    assert c2 - a2 > 0 and c2 - b2 > 0
    return Coefficients(
        c1_sq=(b2 + c2 - a2) / (2 * (c2 - a2)),
        c2_sq=(a2 + c2 - b2) / (2 * (c2 - b2)),
        c3_sq=(a2 + b2 - c2) / (2 * (b2 - c2)),
        k2=(b2 - a2) / (c2 - a2),
        q=c2 - a2 - b2,
        a_sq=a2,
        b_sq=b2,
        c_sq=c2,
    )


def immersion(t: Triple, x, y) -> np.ndarray:
    """Evaluate the immersion; output shape is (6,) + broadcast(x, y).

    Image points lie on the unit sphere to machine accuracy: the
    amplitude normalization makes |F|^2 - 1 an exact trigonometric
    identity, leaving only rounding.
    """
    co = coefficients(t)
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    shape = np.broadcast_shapes(x.shape, y.shape)
    f1 = co.c1 * np.sin(y)
    f2 = co.c2 * np.cos(y)
    f3 = co.c3 * np.sqrt(1.0 - co.k2 * np.sin(y) ** 2)
    a, b, c = t.a, t.b, t.c_real
    return np.stack(
        [
            np.broadcast_to(np.sin(a * x) * f1, shape),
            np.broadcast_to(np.cos(a * x) * f1, shape),
            np.broadcast_to(np.sin(b * x) * f2, shape),
            np.broadcast_to(np.cos(b * x) * f2, shape),
            np.broadcast_to(np.sin(c * x) * f3, shape),
            np.broadcast_to(np.cos(c * x) * f3, shape),
        ]
    )


def metric(t: Triple, y):
    """Diagonal metric components (g_xx, g_yy) at y; both strictly positive.

    Positivity needs no runtime branch: with a <= b the admissibility
    condition gives min P = (c^2 + a^2 - b^2)/2 > 0 and
    min (Q + 2P) = 2(c^2 - b^2) > 0.
    """
    co = coefficients(t)
    p = co.P(y)
    return p, 2.0 * p / (co.q + 2.0 * p)


def _covering_degree(t: Triple) -> int:
    return 1 if _subcase(t) is Subcase.III else 2


def _subcase(t: Triple) -> Subcase:
    if t.case is Case.LAWSON:
        return Subcase.LAWSON
    if t.c % 2 == 0:
        if t.a % 2 == 1 and t.b % 2 == 1:
            return Subcase.II
        if (t.a + t.b) % 2 == 1:
            return Subcase.I
    return Subcase.III


def _topology(t: Triple) -> Topology:
    sub = _subcase(t)
    if sub is Subcase.I:
        return Topology.KLEIN_BOTTLE
    if sub is Subcase.LAWSON and (t.a % 2 == 0) != (t.b % 2 == 0):
        return Topology.KLEIN_BOTTLE
    return Topology.TORUS


def area_closed(t: Triple) -> tuple[float, float]:
    """Closed-form (S, area): the parameter-torus area and the surface area.

    Works for either a/b ordering; a non-canonical generalized ordering
    routes through the negative-k^2 continuation of K and E and returns
    the same value (S is symmetric in a and b).
    """
    a2, b2, c2 = t.a * t.a, t.b * t.b, t.c_squared
    if t.case is Case.LAWSON:
        hi, lo = max(a2, b2), min(a2, b2)
        s = 8.0 * math.pi * math.sqrt(hi) * complete_E(Modulus(k2=(hi - lo) / hi))
        return s, s / 2.0
    m = Modulus(k2=(b2 - a2) / (c2 - a2))
    s = (4.0 * math.pi / math.sqrt(c2 - a2)) * (
        2.0 * (c2 - a2) * complete_E(m) - (c2 - a2 - b2) * complete_K(m)
    )
    return s, s / _covering_degree(t)


def area_quadrature(t: Triple, n: int = 4096) -> float:
    """Quadrature oracle for the area.

    Integrates the area element sqrt(g_xx g_yy) = P sqrt(2/(Q + 2P)) over
    the periodic y-circle with an n-node rectangle rule (spectrally
    accurate for this smooth periodic integrand) and multiplies by the
    2 pi extent in x; divides by the covering degree.
    """
    if n < 64:
        raise ValueError(f"n must be >= 64, got {n}")
    co = coefficients(t)
    y = np.linspace(0.0, 2.0 * math.pi, n, endpoint=False)
    p = co.P(y)
    integrand = p * np.sqrt(2.0 / (co.q + 2.0 * p))
    cover = 2.0 * math.pi * (2.0 * math.pi / n) * float(np.sum(integrand))
    return cover / _covering_degree(t)


def extremal_index(t: Triple) -> tuple[int, Functional, float]:
    """Index j, functional type, and value Lambda_j of the induced metric.

    The induced metric is extremal for the j-th normalized eigenvalue
    functional on the torus or Klein bottle; Lambda_j = 2 * area always
    (the coordinate functions are eigenfunctions with eigenvalue 2 on the
    unit sphere).  The closed forms:

      Lawson pair (a >= b):  j = 2 floor(sqrt(a^2+b^2)/2) + a + b - 1,
                             Lambda_j = 8 pi a E(sqrt(a^2-b^2)/a) = S;
      subcase I:   j = a + b + c - 3, or b + c - 2 when one of a, b is 0;
      subcase II:  j = a + b + c - 3;
      subcase III: j = 2(a + b + c) - 3, with the zero-entry family at
                   2(b + c) - 2 and the Clifford triple (0, 0, 1) at 1.

    Lambda_j equals S in subcases I and II (and Lawson) and 2 S in
    subcase III, consistently with Lambda_j = 2 * area.
    """
    t = canonicalize(t)
    s, area = area_closed(t)
    sub = _subcase(t)
    if sub is Subcase.LAWSON:
        j = 2 * math.floor(math.sqrt(t.a * t.a + t.b * t.b) / 2.0) + t.a + t.b - 1
    elif sub is Subcase.I:
        j = (t.b + t.c - 2) if t.a == 0 else (t.a + t.b + t.c - 3)
    elif sub is Subcase.II:
        j = t.a + t.b + t.c - 3
    else:
        if (t.a, t.b, t.c) == (0, 0, 1):
            j = 1
        elif t.a == 0:
            j = 2 * (t.b + t.c) - 2
        else:
            j = 2 * (t.a + t.b + t.c) - 3
    functional = (
        Functional.KLEIN if _topology(t) is Topology.KLEIN_BOTTLE else Functional.TORUS
    )
    return j, functional, 2.0 * area


@dataclass(frozen=True)
class SurfaceClass:
    """Topological and spectral classification of one surface."""

    topology: Topology
    subcase: Subcase
    covering_degree: int
    area: float
    j: int
    functional: Functional
    lambda_value: float


def classify(t: Triple) -> SurfaceClass:
    """Full classification; canonicalizes internally."""
    t = canonicalize(t)
    _, area = area_closed(t)
    j, functional, lam = extremal_index(t)
    return SurfaceClass(
        topology=_topology(t),
        subcase=_subcase(t),
        covering_degree=_covering_degree(t),
        area=area,
        j=j,
        functional=functional,
        lambda_value=lam,
    )


def expected_symmetry(t: Triple) -> Phi | None:
    """Which half-period identification the surface carries, if any.

    Determined by the parities of the canonical triple: the a-even
    member of subcase I carries (x + pi, pi - y), the a-odd member
    (x + pi, -y); subcase II carries (x + pi, y + pi); subcase III none.
    Lawson pairs follow the same parity rules with c playing no role.
    """
    t = canonicalize(t)
    sub = _subcase(t)
    if sub is Subcase.III:
        return None
    if sub is Subcase.II:
        return Phi.PHI3
    if sub is Subcase.LAWSON and t.a % 2 == 1 and t.b % 2 == 1:
        return Phi.PHI3
    return Phi.PHI1 if t.a % 2 == 0 else Phi.PHI2


def symmetry_residual(t: Triple, phi: Phi, n: int = 32) -> float:
    """max over an n x n grid of |F(Phi(x, y)) - F(x, y)| in R^6.

    At most machine-zero when phi is the surface's identification,
    order-one otherwise.
    """
    if n < 16:
        raise ValueError(f"n must be >= 16, got {n}")
    x = np.linspace(0.0, 2.0 * math.pi, n, endpoint=False)
    y = np.linspace(0.0, 2.0 * math.pi, n, endpoint=False)
    xg, yg = np.meshgrid(x, y, indexing="ij")
    xt, yt = phi.apply(xg, yg)
    diff = immersion(t, xt, yt) - immersion(t, xg, yg)
    return float(np.max(np.sqrt(np.sum(diff * diff, axis=0))))


def injectivity_scan(t: Triple, n: int = 32) -> float:
    """Minimum pairwise distance between images of distinct grid points.

    Only meaningful on degree-1 surfaces (subcase III), where the
    parameter torus maps one-to-one; on a quotient the grid contains
    identified pairs by construction.
    """
    if n < 32:
        raise ValueError(f"n must be >= 32, got {n}")
    t = canonicalize(t)
    if _covering_degree(t) != 1:
        raise InvalidTripleError(
            "quotient surface; scan the quotient domain instead"
        )
    x = np.linspace(0.0, 2.0 * math.pi, n, endpoint=False)
    y = np.linspace(0.0, 2.0 * math.pi, n, endpoint=False)
    xg, yg = np.meshgrid(x, y, indexing="ij")
    pts = immersion(t, xg, yg).reshape(6, -1).T
    from scipy.spatial.distance import pdist

    return float(np.min(pdist(pts)))
