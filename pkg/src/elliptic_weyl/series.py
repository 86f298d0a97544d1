"""Integer polynomials, rational functions in q and their power-series expansions.

Polynomials are tuples of Python ints, lowest degree first.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .words import GroupKind

Poly = tuple[int, ...]


def _trim(p: Sequence[int]) -> Poly:
    p = list(p)
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return tuple(p) if p else (0,)


def poly_add(a: Sequence[int], b: Sequence[int]) -> Poly:
    n = max(len(a), len(b))
    return _trim([(a[k] if k < len(a) else 0) + (b[k] if k < len(b) else 0) for k in range(n)])


def poly_scale(a: Sequence[int], c: int) -> Poly:
    return _trim([c * x for x in a])


def poly_mul(a: Sequence[int], b: Sequence[int]) -> Poly:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def poly_pow(a: Sequence[int], k: int) -> Poly:
    out: Poly = (1,)
    for _ in range(k):
        out = poly_mul(out, a)
    return out


def monomial(k: int, c: int = 1) -> Poly:
    return (0,) * k + (c,)


def one_minus_q_pow(k: int) -> Poly:
    """``1 - q**k``."""
    return poly_add((1,), monomial(k, -1))


@dataclass(frozen=True)
class RationalFunction:
    numerator: Poly
    denominator: Poly

    def __post_init__(self):
        object.__setattr__(self, "numerator", _trim(self.numerator))
        object.__setattr__(self, "denominator", _trim(self.denominator))
        if self.denominator == (0,):
            raise ZeroDivisionError("zero denominator")

    def __add__(self, other: RationalFunction) -> RationalFunction:
        return RationalFunction(
            poly_add(poly_mul(self.numerator, other.denominator), poly_mul(other.numerator, self.denominator)),
            poly_mul(self.denominator, other.denominator),
        )

    def __mul__(self, other: RationalFunction) -> RationalFunction:
        return RationalFunction(poly_mul(self.numerator, other.numerator), poly_mul(self.denominator, other.denominator))

    def scale(self, c: int) -> RationalFunction:
        return RationalFunction(poly_scale(self.numerator, c), self.denominator)


@dataclass(frozen=True)
class TruncatedSeries:
    coeffs: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k):
        return self.coeffs[k]

    def __len__(self):
        return len(self.coeffs)

    def __add__(self, other: TruncatedSeries) -> TruncatedSeries:
        _check_order(self, other)
        return TruncatedSeries(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def truncate(self, order: int) -> TruncatedSeries:
        if order > self.order:
            raise ValueError(f"cannot extend a series of order {self.order} to {order}")
        return TruncatedSeries(self.coeffs[:order + 1])

    @classmethod
    def zero(cls, order: int) -> TruncatedSeries:
        return cls((0,) * (order + 1))


class NonIntegralSeries(ValueError):
    pass


def expand(f: RationalFunction, order: int) -> TruncatedSeries:
    """Maclaurin coefficients of ``f`` through ``q**order``; they must be integers."""
    if order < 0:
        raise ValueError("order must be non-negative")
    num, den = f.numerator, f.denominator
    d0 = den[0]
    if d0 == 0:
        raise ZeroDivisionError("denominator vanishes at q = 0; no power series expansion")
    out: list[int] = []
    for k in range(order + 1):
        acc = num[k] if k < len(num) else 0
        for j in range(1, min(k, len(den) - 1) + 1):
            acc -= den[j] * out[k - j]
        c, r = divmod(acc, d0)
        if r:
            raise NonIntegralSeries(f"coefficient of q^{k} is {Fraction(acc, d0)}, not an integer")
        out.append(c)
    return TruncatedSeries(tuple(out))


def _check_order(a: TruncatedSeries, b: TruncatedSeries):
    if a.order != b.order:
        raise ValueError(f"series order mismatch: {a.order} != {b.order}")


def series_eq(a: TruncatedSeries, b: TruncatedSeries) -> bool:
    _check_order(a, b)
    return a.coeffs == b.coeffs


def elliptic_closed_form(kind: GroupKind | str) -> RationalFunction:
    kind = GroupKind.parse(kind)
    if kind is GroupKind.A11STAR:
        # (1 - q^3) / (1 - q)^3
        return RationalFunction(one_minus_q_pow(3), poly_pow((1, -1), 3))
    # (1 + q)^2 / (1 - q)^2
    return RationalFunction(poly_pow((1, 1), 2), poly_pow((1, -1), 2))


def _check_exponents(exponents: Sequence[int]) -> tuple[int, ...]:
    exponents = tuple(exponents)
    if not exponents:
        raise ValueError("need at least one exponent")
    for e in exponents:
        if isinstance(e, bool) or not isinstance(e, int) or e < 1:
            raise ValueError(f"exponents must be positive integers, got {e!r}")
    return exponents


def finite_weyl_series(exponents: Sequence[int]) -> RationalFunction:
    """prod_i (1 - q^(m_i + 1)) / (1 - q), left unreduced."""
    exponents = _check_exponents(exponents)
    num: Poly = (1,)
    for e in exponents:
        num = poly_mul(num, one_minus_q_pow(e + 1))
    return RationalFunction(num, poly_pow((1, -1), len(exponents)))


def finite_weyl_polynomial(exponents: Sequence[int]) -> TruncatedSeries:
    """The Poincare polynomial, i.e. the expansion up to its degree sum(m_i)."""
    exponents = _check_exponents(exponents)
    return expand(finite_weyl_series(exponents), sum(exponents))


def affine_weyl_rational(exponents: Sequence[int]) -> RationalFunction:
    """(1 - q)^-r prod_i (1 - q^(m_i + 1)) / (1 - q^(m_i))."""
    exponents = _check_exponents(exponents)
    num: Poly = (1,)
    den: Poly = poly_pow((1, -1), len(exponents))
    for e in exponents:
        num = poly_mul(num, one_minus_q_pow(e + 1))
        den = poly_mul(den, one_minus_q_pow(e))
    return RationalFunction(num, den)


def affine_weyl_series(exponents: Sequence[int], order: int) -> TruncatedSeries:
    return expand(affine_weyl_rational(exponents), order)


# Six-term split of the A1(1,1)* Poincare series over the (m, n) lattice.

DECOMPOSITION_NAMES = ("A1", "A2", "B1", "B2", "B3", "B4")


class DecompositionMismatch(AssertionError):
    pass


def _term_exponent(name: str, m: int, n: int) -> int | None:
    """Exponent contributed by (m, n) to the named term, or None if excluded."""
    mx = max(abs(m), abs(n))
    if name == "A1":
        if (m >= 0 and n >= 0) or (m <= 0 and n <= 0):
            return 2 * (abs(m) + abs(n))
    elif name == "A2":
        if m * n < 0:
            return 2 * mx
    elif name == "B1":
        if m >= 0 and n >= 0 and m + n > 0:
            return 2 * (m + n) - 1
    elif name == "B2":
        if m <= 0 and n <= 0:
            return 2 * (abs(m) + abs(n)) + 1
    elif name == "B3":
        if m * n < 0 and m + n > 0:
            return 2 * mx - 1
    elif name == "B4":
        if m * n < 0 and m + n <= 0:
            return 2 * mx + 1
    else:
        raise KeyError(name)
    return None


def decomposition_direct(order: int) -> dict[str, TruncatedSeries]:
    """Each term summed directly over the lattice.

    Every exponent is at least max(|m|, |n|), so |m|, |n| <= order suffices.
    """
    if order < 0:
        raise ValueError("order must be non-negative")
    coeffs = {name: [0] * (order + 1) for name in DECOMPOSITION_NAMES}
    r = range(-order, order + 1)
    for m in r:
        for n in r:
            for name in DECOMPOSITION_NAMES:
                e = _term_exponent(name, m, n)
                if e is not None and e <= order:
                    coeffs[name][e] += 1
    return {name: TruncatedSeries(tuple(c)) for name, c in coeffs.items()}


def decomposition_closed_forms() -> dict[str, RationalFunction]:
    den = poly_pow(one_minus_q_pow(2), 2)  # (1 - q^2)^2
    return {
        "A1": RationalFunction((1, 0, 2, 0, -1), den),
        "A2": (RationalFunction(monomial(2), one_minus_q_pow(2)) + RationalFunction(monomial(4, 2), den)).scale(2),
        "B1": RationalFunction((0, 2, 0, -1), den),
        "B2": RationalFunction(monomial(1), den),
        "B3": RationalFunction(monomial(3, 2), den),
        "B4": RationalFunction(monomial(3, 2), den),
    }


def six_term_decomposition(order: int) -> list[TruncatedSeries]:
    """The six lattice sums A1, A2, B1..B4, each checked against its closed form."""
    direct = decomposition_direct(order)
    closed = decomposition_closed_forms()
    for name in DECOMPOSITION_NAMES:
        expected = expand(closed[name], order)
        if not series_eq(direct[name], expected):
            k = next(k for k in range(order + 1) if direct[name][k] != expected[k])
            raise DecompositionMismatch(
                f"{name}: lattice sum gives {direct[name][k]} at q^{k}, closed form gives {expected[k]}"
            )
    return [direct[name] for name in DECOMPOSITION_NAMES]
