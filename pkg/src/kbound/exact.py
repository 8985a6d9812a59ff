"""Exact arithmetic substrate: Euclidean splits, univariate polynomials over
the rationals, and tail-bounded sign certificates.

Everything in this module is exact; no floating point is ever used. Rationals
are ``fractions.Fraction`` (automatically in lowest terms with positive
denominator). A :class:`SignCertificate` proves a polynomial inequality on the
whole integer ray ``[start, +oo)`` by combining a finite exact scan with a
Cauchy root bound for the tail, so "for all d > N" claims are genuinely
quantified over an infinite range rather than sampled.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

Rat = Fraction

Scalar = Union[int, Fraction]

#: Serialized rationals are "num/den" with "/den" omitted when den == 1.


class OutOfDomainError(ValueError):
    """Input lies outside the validity range of a formula."""


class InconsistencyError(ArithmeticError):
    """Exact arithmetic produced a value violating a required invariant."""


class FrameRangeError(ValueError):
    """Divisor class or frame parameter outside the admissible range."""


def rat_str(x: Scalar) -> str:
    """Render an exact rational as ``num/den``, omitting ``/den`` when 1."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_rat(s: str) -> Fraction:
    return Fraction(s)


def as_int(x: Scalar, what: str = "value") -> int:
    """Assert integrality of an exact rational and return it as an int."""
    x = Fraction(x)
    if x.denominator != 1:
        raise InconsistencyError(f"{what} is not an integer: {rat_str(x)}")
    return x.numerator


def binom(n: int, k: int) -> int:
    """Binomial coefficient with the convention C(n, k) = 0 for k > n."""
    if n < 0 or k < 0:
        raise ValueError("binom requires nonnegative arguments")
    return math.comb(n, k)


@dataclass(frozen=True)
class EuclidSplit:
    """dividend = quotient * modulus + remainder with 0 <= remainder < modulus."""

    dividend: int
    modulus: int
    quotient: int
    remainder: int

    def __post_init__(self) -> None:
        if self.modulus < 1:
            raise ValueError("modulus must be >= 1")
        if self.dividend != self.quotient * self.modulus + self.remainder:
            raise InconsistencyError("Euclidean split does not reconstruct")
        if not 0 <= self.remainder <= self.modulus - 1:
            raise InconsistencyError("remainder outside [0, modulus-1]")


def euclid_split(dividend: int, modulus: int) -> EuclidSplit:
    """Division with the canonical least nonnegative remainder.

    This is the remainder convention used everywhere in the package: the
    split of d - 1 by 3 yields (m, eps) with 0 <= eps <= 2, by 5 yields
    (n, v) with 0 <= v <= 4, by 4 yields (p, q) with 0 <= q <= 3.
    """
    if modulus < 1:
        raise ValueError("modulus must be >= 1")
    q, r = divmod(dividend, modulus)
    return EuclidSplit(dividend, modulus, q, r)


@dataclass(frozen=True)
class Poly:
    """Univariate polynomial over Fraction; ``coeffs[i]`` multiplies ``x^i``.

    Trailing zero coefficients are trimmed; the zero polynomial has an empty
    coefficient tuple. Construct through :meth:`of` / :meth:`from_coeffs`.
    """

    coeffs: tuple[Fraction, ...]

    @staticmethod
    def of(*coeffs: Scalar) -> "Poly":
        return Poly.from_coeffs(coeffs)

    @staticmethod
    def from_coeffs(coeffs: Iterable[Scalar]) -> "Poly":
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        return Poly(tuple(cs))

    @staticmethod
    def zero() -> "Poly":
        return Poly(())

    @staticmethod
    def variable() -> "Poly":
        return Poly((Fraction(0), Fraction(1)))

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Fraction:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __add__(self, other: "Poly | Scalar") -> "Poly":
        other = _coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly.from_coeffs(
            (self.coeffs[i] if i < len(self.coeffs) else 0)
            + (other.coeffs[i] if i < len(other.coeffs) else 0)
            for i in range(n)
        )

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "Poly | Scalar") -> "Poly":
        return self + (-_coerce(other))

    def __rsub__(self, other: "Poly | Scalar") -> "Poly":
        return _coerce(other) + (-self)

    def __mul__(self, other: "Poly | Scalar") -> "Poly":
        other = _coerce(other)
        if self.is_zero or other.is_zero:
            return Poly(())
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly.from_coeffs(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Poly":
        if k < 0:
            raise ValueError("negative power")
        result = Poly.of(1)
        for _ in range(k):
            result = result * self
        return result

    def __call__(self, x: Scalar) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose(self, inner: "Poly") -> "Poly":
        """self(inner(x)), exact; used to restrict to residue classes."""
        acc = Poly(())
        for c in reversed(self.coeffs):
            acc = acc * inner + Poly.of(c)
        return acc

    def derivative(self) -> "Poly":
        return Poly.from_coeffs(i * c for i, c in enumerate(self.coeffs) if i > 0)

    def cauchy_tail_bound(self) -> int:
        """Integer N >= 1 + max |c_i / c_deg|; no real root has |x| > N.

        Beyond N the polynomial keeps the sign of its leading coefficient,
        which is what makes a finite scan plus this bound a complete proof.
        """
        if self.is_zero:
            raise ValueError("zero polynomial has no root bound")
        if self.degree == 0:
            return 0
        lead = abs(self.leading)
        bound = 1 + max(abs(c) / lead for c in self.coeffs[:-1])
        return math.ceil(bound)

    def text(self, var: str = "d") -> str:
        """Human-readable rendering like ``4/5*d^2 - 28*d``."""
        if self.is_zero:
            return "0"
        parts: list[str] = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mag = rat_str(abs(c))
            if i == 0:
                term = mag
            else:
                xi = var if i == 1 else f"{var}^{i}"
                term = xi if mag == "1" else f"{mag}*{xi}"
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(f"+ {term}" if c > 0 else f"- {term}")
        return " ".join(parts)

    def to_json(self) -> list[str]:
        return [rat_str(c) for c in self.coeffs]


def _coerce(x: "Poly | Scalar") -> Poly:
    if isinstance(x, Poly):
        return x
    return Poly.of(x)


SIGNS = ("positive", "nonnegative", "negative", "nonpositive")

_SIGN_HOLDS = {
    "positive": lambda v: v > 0,
    "nonnegative": lambda v: v >= 0,
    "negative": lambda v: v < 0,
    "nonpositive": lambda v: v <= 0,
}


@dataclass
class SignCertificate:
    """Verdict for ``sign(p(x))`` over every integer x >= start.

    If ``counterexample`` is None the assertion holds at every integer of
    ``[start, tail_bound]`` (checked exactly) and at every integer beyond
    ``tail_bound`` (leading-term dominance through the Cauchy root bound).
    Otherwise ``counterexample`` is the least violating integer found.
    """

    polynomial: Poly
    start: int
    asserted_sign: str
    tail_bound: int
    scan_from: int
    scan_to: int
    counterexample: int | None
    variable: str = "d"
    label: str = ""

    @property
    def ok(self) -> bool:
        return self.counterexample is None

    def to_json_dict(self) -> dict:
        return {
            "label": self.label,
            "variable": self.variable,
            "polynomial": self.polynomial.to_json(),
            "polynomial_text": self.polynomial.text(self.variable),
            "from": self.start,
            "asserted_sign": self.asserted_sign,
            "tail_bound": self.tail_bound,
            "scanned_range": [self.scan_from, self.scan_to],
            "counterexample": self.counterexample,
            "verified": self.ok,
        }


def sign_certificate(
    p: Poly,
    start: int,
    asserted_sign: str,
    *,
    variable: str = "d",
    label: str = "",
    max_scan: int = 2_000_000,
) -> SignCertificate:
    """Prove or refute ``p(x) <sign> 0`` for every integer x >= start.

    The scan range is [start, N] with N the Cauchy tail bound; beyond N the
    sign equals the sign of the leading coefficient, so a matching leading
    coefficient plus a clean scan proves the claim for all integers >= start.
    A mismatching leading coefficient always yields an explicit
    counterexample just past the tail bound.
    """
    if asserted_sign not in _SIGN_HOLDS:
        raise ValueError(f"unknown sign assertion: {asserted_sign!r}")
    if p.is_zero:
        raise ValueError("cannot certify the zero polynomial")
    holds = _SIGN_HOLDS[asserted_sign]
    tail = p.cauchy_tail_bound()
    scan_to = max(start, tail)
    if scan_to - start > max_scan:
        raise ValueError(
            f"scan range [{start}, {scan_to}] exceeds max_scan={max_scan}"
        )
    counterexample: int | None = None
    for x in range(start, scan_to + 1):
        if not holds(p(x)):
            counterexample = x
            break
    if counterexample is None:
        lead_ok = p.leading > 0 if asserted_sign in ("positive", "nonnegative") else p.leading < 0
        if not lead_ok:
            # Beyond the root bound the sign is the leading coefficient's,
            # so the first integer past the scan is a genuine violation.
            witness = scan_to + 1
            assert not holds(p(witness))
            counterexample = witness
    return SignCertificate(
        polynomial=p,
        start=start,
        asserted_sign=asserted_sign,
        tail_bound=scan_to,
        scan_from=start,
        scan_to=scan_to,
        counterexample=counterexample,
        variable=variable,
        label=label,
    )
