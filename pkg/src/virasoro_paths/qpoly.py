"""
virasoro_paths.qpoly
~~~~~~~~~~~~~~~~~~~~
This module implements the exact q-polynomial arithmetic of virasoro_paths:
sparse Laurent polynomials in q whose exponents are multiples of 1/8, and
power series truncated at an explicit order.

Created by the virasoro-paths developers on 2026-10-17.

:copyright: (c) 2026 by the virasoro-paths developers
:license: GPLv3, see LICENSE for more details
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence, Union

from .base import ExponentDenominatorError, InvalidParametersError, NonExactDivisionError, TruncationError

DENOMINATOR = 8

Rational = Union[int, Fraction, str]


def to_eighths(value: "Rational | QExponent") -> int:
    """
    Convert an exponent given in units of q to an integer number of eighths.

    Args:
        value: An int, Fraction, "p/q" string or QExponent.

    Returns:
        The exponent multiplied by 8.

    Raises:
        ExponentDenominatorError: The exponent is not a multiple of 1/8.
    """
    if isinstance(value, QExponent):
        return value.eighths
    scaled = Fraction(value) * DENOMINATOR
    if scaled.denominator != 1:
        raise ExponentDenominatorError(f"exponent {value} is not a multiple of 1/8")
    return scaled.numerator


@dataclass(frozen=True, order=True)
class QExponent:
    """An exponent of q, stored as an integer count of eighths."""

    eighths: int

    @classmethod
    def of(cls, value: "Rational | QExponent") -> QExponent:
        return cls(to_eighths(value))

    def __add__(self, other: QExponent) -> QExponent:
        return QExponent(self.eighths + other.eighths)

    def __sub__(self, other: QExponent) -> QExponent:
        return QExponent(self.eighths - other.eighths)

    def __neg__(self) -> QExponent:
        return QExponent(-self.eighths)

    def as_fraction(self) -> Fraction:
        return Fraction(self.eighths, DENOMINATOR)

    def __str__(self):
        return str(self.as_fraction())


class QPoly:
    """
    An exact Laurent polynomial in q with exponents in (1/8)Z.

    Terms are kept as a canonical map from eighths to nonzero integer
    coefficients. Instances are immutable and hashable.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | None = None):
        self._terms = {int(e): int(c) for e, c in (terms or {}).items() if c}
        self._hash = None

    @classmethod
    def _canonical(cls, terms: dict) -> QPoly:
        poly = cls.__new__(cls)
        poly._terms = terms
        poly._hash = None
        return poly

    @classmethod
    def zero(cls) -> QPoly:
        return cls._canonical({})

    @classmethod
    def one(cls) -> QPoly:
        return cls._canonical({0: 1})

    @classmethod
    def monomial(cls, power: "Rational | QExponent" = 0, coeff: int = 1) -> QPoly:
        """Return coeff * q**power, the power given in units of q."""
        return cls({to_eighths(power): coeff})

    @classmethod
    def from_coefficients(cls, coeffs: Sequence[int], start: int = 0) -> QPoly:
        """Return sum(coeffs[k] * q**(start + k)) for integer powers."""
        return cls({DENOMINATOR * (start + k): c for k, c in enumerate(coeffs)})

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        """Sorted (eighths, coefficient) pairs."""
        return sorted(self._terms.items())

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = QPoly({0: other})
        if not isinstance(other, QPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other):
        if isinstance(other, int):
            other = QPoly({0: other})
        if not isinstance(other, QPoly):
            return NotImplemented
        terms = dict(self._terms)
        for e, c in other._terms.items():
            value = terms.get(e, 0) + c
            if value:
                terms[e] = value
            else:
                terms.pop(e, None)
        return QPoly._canonical(terms)

    __radd__ = __add__

    def __neg__(self):
        return QPoly._canonical({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = QPoly({0: other})
        if not isinstance(other, QPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return QPoly.zero()
            return QPoly._canonical({e: c * other for e, c in self._terms.items()})
        if not isinstance(other, QPoly):
            return NotImplemented
        return self.mul_truncated(other, None)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if exponent < 0:
            raise InvalidParametersError(f"power must be nonnegative, got {exponent}")
        result = QPoly.one()
        for _ in range(exponent):
            result = result * self
        return result

    def mul_truncated(self, other: QPoly, limit: int | None) -> QPoly:
        """
        Multiply, keeping only exponents of at most `limit` eighths.

        Args:
            other: The second factor.
            limit: Largest eighths exponent retained, or None for all.
        """
        terms: dict[int, int] = {}
        right = sorted(other._terms.items())
        for e1, c1 in self._terms.items():
            for e2, c2 in right:
                e = e1 + e2
                if limit is not None and e > limit:
                    break
                terms[e] = terms.get(e, 0) + c1 * c2
        return QPoly._canonical({e: c for e, c in terms.items() if c})

    def shift(self, power: "Rational | QExponent") -> QPoly:
        """Multiply by q**power."""
        return self.shift_eighths(to_eighths(power))

    def shift_eighths(self, eighths: int) -> QPoly:
        if not eighths:
            return self
        return QPoly._canonical({e + eighths: c for e, c in self._terms.items()})

    def div_exact(self, other: QPoly) -> QPoly:
        """
        Return the quotient c with c * other == self.

        Raises:
            NonExactDivisionError: `other` is zero or does not divide self.
        """
        if not other:
            raise NonExactDivisionError("division by the zero polynomial")
        if not self:
            return QPoly.zero()
        lead_e = max(other._terms)
        lead_c = other._terms[lead_e]
        low = min(self._terms) - min(other._terms)
        high = max(self._terms) - lead_e
        rest = [(e, c) for e, c in other._terms.items() if e != lead_e]
        remainder = dict(self._terms)
        quotient = {}
        for qe in range(high, low - 1, -1):
            c = remainder.pop(qe + lead_e, 0)
            if not c:
                continue
            if c % lead_c:
                raise NonExactDivisionError(f"{self} is not divisible by {other}")
            qc = c // lead_c
            quotient[qe] = qc
            for be, bc in rest:
                k = qe + be
                value = remainder.get(k, 0) - qc * bc
                if value:
                    remainder[k] = value
                else:
                    remainder.pop(k, None)
        if remainder:
            raise NonExactDivisionError(f"{self} is not divisible by {other}")
        return QPoly._canonical(quotient)

    def substitute_power(self, k: Rational) -> QPoly:
        """
        Replace q by q**k.

        Raises:
            ExponentDenominatorError: A resulting exponent leaves (1/8)Z.
        """
        k = Fraction(k)
        terms = {}
        for e, c in self._terms.items():
            scaled = e * k
            if scaled.denominator != 1:
                raise ExponentDenominatorError(
                    f"q^({Fraction(e, DENOMINATOR)}) under q -> q^({k}) leaves (1/8)Z"
                )
            terms[scaled.numerator] = c
        return QPoly._canonical(terms)

    def coefficient(self, power: "Rational | QExponent") -> int:
        return self._terms.get(to_eighths(power), 0)

    def valuation(self) -> QExponent | None:
        return QExponent(min(self._terms)) if self._terms else None

    def degree(self) -> QExponent | None:
        return QExponent(max(self._terms)) if self._terms else None

    def at_one(self) -> int:
        """Evaluate at q = 1."""
        return sum(self._terms.values())

    def truncate(self, order: "Rational | QExponent") -> TruncatedSeries:
        order = QExponent.of(order)
        kept = {e: c for e, c in self._terms.items() if e <= order.eighths}
        return TruncatedSeries(QPoly._canonical(kept), order)

    def to_json(self) -> dict:
        return {"den": DENOMINATOR, "terms": [[e, str(c)] for e, c in self.items()]}

    @classmethod
    def from_json(cls, data: dict | str) -> QPoly:
        if isinstance(data, str):
            data = json.loads(data)
        if data.get("den") != DENOMINATOR:
            raise ExponentDenominatorError(f"unsupported denominator {data.get('den')}")
        return cls({int(e): int(c) for e, c in data["terms"]})

    def __repr__(self):
        return f"QPoly('{self}')"

    def __str__(self):
        if not self._terms:
            return "0"
        pieces = []
        for e, c in self.items():
            power = Fraction(e, DENOMINATOR)
            if power == 0:
                body = str(abs(c))
            else:
                if power == 1:
                    monomial = "q"
                elif power.denominator == 1:
                    monomial = f"q^{power}"
                else:
                    monomial = f"q^({power})"
                body = monomial if abs(c) == 1 else f"{abs(c)}*{monomial}"
            sign = "-" if c < 0 else "+"
            pieces.append((sign, body))
        first_sign, first_body = pieces[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text


@dataclass(frozen=True)
class TruncatedSeries:
    """
    A power series known exactly up to and including q**order.

    Args:
        poly: The retained terms; no exponent may exceed `order`.
        order: The truncation order.
    """

    poly: QPoly
    order: QExponent

    def __post_init__(self):
        degree = self.poly.degree()
        if degree is not None and degree > self.order:
            raise TruncationError(f"term q^{degree} beyond truncation order {self.order}")

    @classmethod
    def of(cls, poly: QPoly, order: "Rational | QExponent") -> TruncatedSeries:
        return poly.truncate(order)

    def _operand(self, other) -> TruncatedSeries:
        if isinstance(other, TruncatedSeries):
            return other
        if isinstance(other, int):
            other = QPoly({0: other})
        if isinstance(other, QPoly):
            return other.truncate(self.order)
        return NotImplemented

    def __add__(self, other):
        other = self._operand(other)
        if other is NotImplemented:
            return other
        order = min(self.order, other.order)
        return (self.poly + other.poly).truncate(order)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries(-self.poly, self.order)

    def __sub__(self, other):
        other = self._operand(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __mul__(self, other):
        other = self._operand(other)
        if other is NotImplemented:
            return other
        for operand in (self, other):
            valuation = operand.poly.valuation()
            if valuation is not None and valuation.eighths < 0:
                raise TruncationError("cannot certify a product with negative powers")
        order = min(self.order, other.order)
        return TruncatedSeries(self.poly.mul_truncated(other.poly, order.eighths), order)

    __rmul__ = __mul__

    def shift(self, power: "Rational | QExponent") -> TruncatedSeries:
        """Multiply by q**power; the known range moves with it."""
        eighths = to_eighths(power)
        return TruncatedSeries(self.poly.shift_eighths(eighths), QExponent(self.order.eighths + eighths))

    def truncate(self, order: "Rational | QExponent") -> TruncatedSeries:
        order = min(QExponent.of(order), self.order)
        return self.poly.truncate(order)

    def agrees_with(self, other: TruncatedSeries) -> bool:
        """Equality on the common known range."""
        order = min(self.order, other.order)
        return self.truncate(order) == other.truncate(order)

    def coefficients(self) -> list[int]:
        """Coefficients of q**0 .. q**floor(order) for an integer-power series."""
        if any(e % DENOMINATOR for e in self.poly.terms):
            raise ExponentDenominatorError("series has non-integer powers")
        top = self.order.eighths // DENOMINATOR
        return [self.poly.coefficient(k) for k in range(0, top + 1)]

    def to_json(self) -> dict:
        return {"order": self.order.eighths, "poly": self.poly.to_json()}

    def __str__(self):
        return f"{self.poly} + O(q^{self.order})"


def poly_add(a: QPoly, b: QPoly) -> QPoly:
    return a + b


def poly_mul(a: QPoly, b: QPoly) -> QPoly:
    return a * b


def poly_div_exact(a: QPoly, b: QPoly) -> QPoly:
    return a.div_exact(b)


def substitute_power(a: QPoly, k: Rational) -> QPoly:
    return a.substitute_power(k)


def truncate(a: QPoly, order: "Rational | QExponent") -> TruncatedSeries:
    return a.truncate(order)
