"""Divisor classes of surfaces on the smooth rational normal 3-fold scroll
T in P^5 (the smooth 3-dimensional variety of minimal degree 3).

Pic(T) is freely generated by the hyperplane class H and the plane W of the
ruling. The triple intersection numbers are hard-coded:

    H^3 = deg T = 3,
    H^2.W = 1   (a ruling plane meets a general codimension-2 linear
                 section of T in one point: W is a linearly embedded P^2),
    H.W^2 = 0 and W^3 = 0   (two distinct ruling planes are disjoint and
                 W moves in the ruling, so W^2 = 0 in the Chow ring).

The canonical class is K_T = -3H + W. Everything downstream of these five
constants is cross-checked against the independent cubic polynomial
``phi(d, a)`` for K^2; the agreement of the two routes guards against an
error in either.

A surface class alpha*H + beta*W of degree d = 3*alpha + beta >= 4 contains
an irreducible nonsingular nondegenerate surface iff alpha > 0,
alpha + beta >= 0 and 3*alpha + beta >= 4 (admissibility). Writing
d - 1 = 3m + eps, the admissible classes of degree d are exactly
(m + 1 + a)H + (eps + 1 - 3(a + 1))W for integers -m <= a <= (m + eps - 1)/2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .exact import (
    FrameRangeError,
    InconsistencyError,
    OutOfDomainError,
    euclid_split,
)

# Triple products on T.
H3 = 3
H2W = 1
HW2 = 0
W3 = 0


@dataclass(frozen=True)
class DivisorClass:
    """Integer class alpha*H + beta*W in Pic(T)."""

    alpha: int
    beta: int

    def degree(self) -> int:
        """deg(S) = S.H^2 = 3*alpha + beta."""
        return 3 * self.alpha + self.beta

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        return DivisorClass(self.alpha + other.alpha, self.beta + other.beta)

    def text(self) -> str:
        b = self.beta
        return f"{self.alpha}H{'+' if b >= 0 else '-'}{abs(b)}W"


HYPERPLANE = DivisorClass(1, 0)
RULING = DivisorClass(0, 1)
CANONICAL = DivisorClass(-3, 1)  # K_T = -3H + W


def triple_product(c1: DivisorClass, c2: DivisorClass, c3: DivisorClass) -> int:
    """c1.c2.c3 expanded through the four constants above."""
    a1, b1 = c1.alpha, c1.beta
    a2, b2 = c2.alpha, c2.beta
    a3, b3 = c3.alpha, c3.beta
    return (
        H3 * a1 * a2 * a3
        + H2W * (a1 * a2 * b3 + a1 * b2 * a3 + b1 * a2 * a3)
        + HW2 * (a1 * b2 * b3 + b1 * a2 * b3 + b1 * b2 * a3)
        + W3 * b1 * b2 * b3
    )


def degree(c: DivisorClass) -> int:
    return c.degree()


def is_admissible(c: DivisorClass) -> bool:
    """True iff |alpha*H + beta*W| contains an irreducible nonsingular
    nondegenerate surface: alpha > 0, alpha + beta >= 0, 3*alpha + beta >= 4."""
    return c.alpha > 0 and c.alpha + c.beta >= 0 and c.degree() >= 4


def _k2_raw(c: DivisorClass) -> int:
    """(K_T + S)^2 . S with no admissibility gate (for oracles and scans)."""
    adj = c + CANONICAL
    return triple_product(adj, adj, c)


def k2_intersection(c: DivisorClass) -> int:
    """K^2 of the smooth surface in |c| via adjunction on T:
    K_S = (K_T + S)|_S, so K^2 = (K_T + S)^2 . S."""
    if not is_admissible(c):
        raise OutOfDomainError(f"class {c.text()} is not admissible")
    return _k2_raw(c)


def sectional_genus(c: DivisorClass) -> int:
    """Genus of the general hyperplane section, from 2g - 2 = H.(H + K_S)
    computed on T as (K_T + S + H).S.H."""
    if not is_admissible(c):
        raise OutOfDomainError(f"class {c.text()} is not admissible")
    t = triple_product(c + CANONICAL + HYPERPLANE, c, HYPERPLANE)
    if t % 2 != 0:
        raise InconsistencyError(f"odd 2g - 2 = {t} for class {c.text()}")
    g = (t + 2) // 2
    if g < 0:
        raise InconsistencyError(f"negative sectional genus for class {c.text()}")
    return g


def _split3(d: int) -> tuple[int, int]:
    if d < 4:
        raise OutOfDomainError("scroll surfaces have degree d >= 4")
    sp = euclid_split(d - 1, 3)
    return sp.quotient, sp.remainder


@dataclass(frozen=True)
class ScrollFrame:
    """Parameters (d, m, eps, a) with d - 1 = 3m + eps indexing a degree-d
    class on T; valid frames have -m <= a <= floor((m + eps - 1)/2)."""

    d: int
    m: int
    eps: int
    a: int

    @staticmethod
    def for_degree(d: int, a: int) -> "ScrollFrame":
        m, eps = _split3(d)
        f = ScrollFrame(d, m, eps, a)
        if not f.in_range:
            raise FrameRangeError(
                f"a={a} outside [{-m}, {(m + eps - 1) // 2}] for d={d}"
            )
        return f

    @property
    def a_star(self) -> int:
        """Right endpoint floor((m + eps - 1)/2) of the admissible range."""
        return (self.m + self.eps - 1) // 2

    @property
    def q_parity(self) -> int:
        """m + eps - 1 = 2p + q with 0 <= q <= 1; q = 0 iff d is even."""
        return (self.m + self.eps - 1) % 2

    @property
    def in_range(self) -> bool:
        return -self.m <= self.a <= self.a_star


def class_from_frame(f: ScrollFrame) -> DivisorClass:
    return DivisorClass(f.m + 1 + f.a, f.eps + 1 - 3 * (f.a + 1))


def frame_from_class(c: DivisorClass, expect_d: int) -> ScrollFrame:
    """Unique frame of the class; errors if the degree disagrees with
    expect_d or a falls outside the admissible range."""
    d = c.degree()
    if d != expect_d:
        raise FrameRangeError(f"class {c.text()} has degree {d}, expected {expect_d}")
    m, eps = _split3(d)
    a = c.alpha - m - 1
    # beta is then forced: eps + 1 - 3(a + 1) = d - 3*alpha automatically.
    return ScrollFrame.for_degree(d, a)


def phi(d: int, a: int) -> int:
    """K^2 of the degree-d surface class indexed by a, as the exact cubic

        phi(a) = -6a^3 + a^2(-9m + 5 + 3eps) + a(2m(3eps - 4) - 6eps + 10)
                 + 3m^3 + m^2(3eps - 13) + m(10 - 6eps) + 8.

    Defined for every integer a (the admissible range is not enforced here;
    endpoint scans evaluate phi just outside it on purpose). Must agree with
    :func:`k2_intersection` on every admissible class.
    """
    m, e = _split3(d)
    return (
        -6 * a**3
        + a * a * (-9 * m + 5 + 3 * e)
        + a * (2 * m * (3 * e - 4) - 6 * e + 10)
        + 3 * m**3
        + m * m * (3 * e - 13)
        + m * (10 - 6 * e)
        + 8
    )


def phi_derivative(d: int, a: int) -> int:
    """phi'(a) = -18a^2 + 2a(-9m + 5 + 3eps) + 2m(3eps - 4) - 6eps + 10."""
    m, e = _split3(d)
    return (
        -18 * a * a
        + 2 * a * (-9 * m + 5 + 3 * e)
        + 2 * m * (3 * e - 4)
        - 6 * e
        + 10
    )


@dataclass(frozen=True)
class CriticalInterval:
    """Rational isolation of the two real roots a1 < a2 of phi'.

    Each root is pinned to an interval of width 1/36 < 1, so every integer
    is classified as inside or outside (a1, a2) exactly. ``discriminant``
    is the exact discriminant B^2 - 4AC of phi' (A = -18).
    """

    d: int
    discriminant: int
    a1: tuple[Fraction, Fraction] | None
    a2: tuple[Fraction, Fraction] | None

    @property
    def has_real_roots(self) -> bool:
        return self.a1 is not None


def critical_interval(d: int) -> CriticalInterval:
    """Isolate the roots of phi' for the degree-d frame.

    phi' = -18a^2 + Ba + C is concave, so phi increases exactly on (a1, a2).
    The discriminant is positive for every d >= 4, but a nonpositive value
    is reported rather than raised.
    """
    m, e = _split3(d)
    B = 2 * (-9 * m + 5 + 3 * e)
    C = 2 * m * (3 * e - 4) - 6 * e + 10
    disc = B * B + 72 * C  # B^2 - 4AC with A = -18
    if disc <= 0:
        return CriticalInterval(d=d, discriminant=disc, a1=None, a2=None)
    s = isqrt(disc)
    s_hi = s if s * s == disc else s + 1
    # roots of 18a^2 - Ba - C: (B -/+ sqrt(disc)) / 36
    a1 = (Fraction(B - s_hi, 36), Fraction(B - s, 36))
    a2 = (Fraction(B + s, 36), Fraction(B + s_hi, 36))
    return CriticalInterval(d=d, discriminant=disc, a1=a1, a2=a2)


@dataclass(frozen=True)
class KsqMinimum:
    """Result of the exhaustive minimization of phi over -m <= a <= a*."""

    d: int
    a_min: int
    k2_min: int
    unique: bool
    in_asserted_range: bool  # the minimization claim is asserted for d >= 18

    def to_json_dict(self) -> dict:
        return {
            "d": self.d,
            "a_min": self.a_min,
            "k2_min": self.k2_min,
            "unique": self.unique,
            "in_asserted_range": self.in_asserted_range,
        }


def minimize_k2(d: int) -> KsqMinimum:
    """Brute-force minimum of phi over every integer a in [-m, a*].

    The range has O(d) points and the arithmetic is exact, which makes this
    the trustworthy oracle against which the closed forms
    (-d(d-6) for even d, -d^2/4 + d/2 + 35/4 for odd d) are claims.
    """
    m, eps = _split3(d)
    a_star = (m + eps - 1) // 2
    best_a = -m
    best = phi(d, -m)
    count = 1
    for a in range(-m + 1, a_star + 1):
        v = phi(d, a)
        if v < best:
            best, best_a, count = v, a, 1
        elif v == best:
            count += 1
    return KsqMinimum(
        d=d,
        a_min=best_a,
        k2_min=best,
        unique=(count == 1),
        in_asserted_range=(d >= 18),
    )


def k2_min_closed_form(d: int) -> Fraction:
    """phi(a*) by parity of m + eps - 1: -d(d-6) when q = 0 (d even),
    -d^2/4 + d/2 + 35/4 when q = 1 (d odd)."""
    m, eps = _split3(d)
    if (m + eps - 1) % 2 == 0:
        return Fraction(-d * (d - 6))
    return Fraction(-d * d + 2 * d + 35, 4)


@dataclass(frozen=True)
class ExtremalSurface:
    cls: DivisorClass
    k2: int
    genus: int


def extremal_class(d: int) -> ExtremalSurface:
    """The unique minimizing class for even d: S ~ (d/2)(H - W), with
    K^2 = -d(d-6) and sectional genus d^2/8 - 3d/4 + 1.

    Both invariants are recomputed through the intersection ring and checked
    against the closed forms before returning.
    """
    if d % 2 != 0:
        raise ValueError("extremal_class is defined for even d only")
    if d < 4:
        raise OutOfDomainError("extremal_class needs even d >= 4")
    c = DivisorClass(d // 2, -d // 2)
    if not is_admissible(c):
        raise InconsistencyError(f"extremal class {c.text()} is not admissible")
    k2 = k2_intersection(c)
    g = sectional_genus(c)
    if k2 != -d * (d - 6):
        raise InconsistencyError(f"extremal K^2 {k2} != -d(d-6) at d={d}")
    if 8 * g != d * d - 6 * d + 8:
        raise InconsistencyError(f"extremal genus {g} != d^2/8 - 3d/4 + 1 at d={d}")
    f = frame_from_class(c, d)
    if f.a != f.a_star or f.q_parity != 0:
        raise InconsistencyError(f"extremal class not at a* with q=0 at d={d}")
    return ExtremalSurface(cls=c, k2=k2, genus=g)


def frame_scan(d: int) -> list[dict]:
    """One record per admissible a of degree d (for reports and the CLI)."""
    m, eps = _split3(d)
    a_star = (m + eps - 1) // 2
    ext = DivisorClass(d // 2, -d // 2) if d % 2 == 0 else None
    rows = []
    for a in range(-m, a_star + 1):
        c = class_from_frame(ScrollFrame.for_degree(d, a))
        rows.append(
            {
                "d": d,
                "a": a,
                "alpha": c.alpha,
                "beta": c.beta,
                "degree": c.degree(),
                "k2": phi(d, a),
                "genus": sectional_genus(c),
                "admissible": is_admissible(c),
                "extremal": ext is not None and c == ext,
            }
        )
    return rows
