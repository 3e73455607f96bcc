"""
virasoro_paths.bosonic
~~~~~~~~~~~~~~~~~~~~~~
This module implements the bosonic side of virasoro_paths: Rocha-Caridi
characters (extended to half-integer p), the ABF finitized bosonic
polynomials, the q-trinomial Y-polynomials and the half-lattice bosonic
formulas, together with the suites checking their recurrences, boundary
identities and L -> inf limits.

Created by the virasoro-paths developers on 2026-10-17.

:copyright: (c) 2026 by the virasoro-paths developers
:license: GPLv3, see LICENSE for more details
"""

import functools
import logging
from dataclasses import dataclass
from fractions import Fraction

from .base import InvalidParametersError, StabilityError, Suite, Task
from .paths import _check_band, doubled, gf_half
from .qpoly import QExponent, QPoly, TruncatedSeries, to_eighths
from .qspecial import (
    TrinomialIndex,
    _inv_pochhammer,
    _q_binomial_truncated,
    q_binomial,
    q_trinomial,
    q_trinomial_truncated,
)

logger = logging.getLogger(__name__)


def _half_integer(value, name) -> Fraction:
    value = Fraction(value)
    if (value * 2).denominator != 1:
        raise InvalidParametersError(f"{name}={value} is not a multiple of 1/2")
    return value


def _integer(value, name) -> int:
    value = Fraction(value)
    if value.denominator != 1:
        raise InvalidParametersError(f"{name}={value} is not an integer")
    return value.numerator


@dataclass(frozen=True)
class CharacterParams:
    """
    Labels of chi^{p,p'}_{r,s}; p and r may be half-integers.

    The genuine minimal-model characters have coprime p, p' with
    1 <= r < p and 1 <= s < p'; other labels give the extended values of
    the same formula.
    """

    p: Fraction
    p_prime: int
    r: Fraction
    s: int

    def __post_init__(self):
        object.__setattr__(self, "p", _half_integer(self.p, "p"))
        object.__setattr__(self, "p_prime", _integer(self.p_prime, "p'"))
        object.__setattr__(self, "r", _half_integer(self.r, "r"))
        object.__setattr__(self, "s", _integer(self.s, "s"))
        if self.p <= 0 or self.p_prime <= 0:
            raise InvalidParametersError(f"p={self.p} and p'={self.p_prime} must be positive")

    @classmethod
    def half_lattice(cls, t, b, a) -> "CharacterParams":
        """The labels of chi^{t,2t+1}_{b,2a}."""
        t = _half_integer(t, "t")
        return cls(t, 2 * t + 1, b, 2 * a)

    def to_json(self):
        return {"p": str(self.p), "p_prime": self.p_prime, "r": str(self.r), "s": self.s}


@dataclass(frozen=True)
class YParams:
    """Indices of the polynomial Y^{n;t}_{a,b}(L)."""

    n: int
    t: Fraction
    a: int
    b: int
    L: int

    def __post_init__(self):
        object.__setattr__(self, "t", _half_integer(self.t, "t"))
        if self.L < 0:
            raise InvalidParametersError(f"length L={self.L} is negative")

    @property
    def t_prime(self) -> Fraction:
        return 2 * self.t + 1


def _rocha_terms(params: CharacterParams, window: int, limit: int) -> QPoly:
    p, pp, r, s = params.p, params.p_prime, params.r, params.s
    terms = {}
    for lam in range(-window, window + 1):
        for sign, exponent in (
            (1, lam * lam * p * pp + lam * (pp * r - p * s)),
            (-1, (lam * p + r) * (lam * pp + s)),
        ):
            eighths = to_eighths(exponent)
            if eighths <= limit:
                terms[eighths] = terms.get(eighths, 0) + sign
    return QPoly(terms)


@functools.lru_cache(maxsize=None)
def _rocha_caridi(params: CharacterParams, order_eighths: int) -> TruncatedSeries:
    p, pp = params.p, params.p_prime
    slope = max(abs(pp * params.r - p * params.s), p * params.s + pp * params.r)
    order = Fraction(order_eighths, 8)
    window = 0
    while p * pp * window * window - slope * window <= order or 2 * p * pp * window < slope:
        window += 1
    inner = _rocha_terms(params, window, order_eighths)
    outer = _rocha_terms(params, window + 1, order_eighths)
    if inner != outer:
        raise StabilityError(f"lambda window {window} is not stable for {params.to_json()}")
    low = min(0, inner.valuation().eighths) if inner else 0
    partitions = _inv_pochhammer(None, order_eighths - low).poly
    return TruncatedSeries(inner.mul_truncated(partitions, order_eighths), QExponent(order_eighths))


def rocha_caridi(params: CharacterParams, order) -> TruncatedSeries:
    """
    chi^{p,p'}_{r,s} truncated at order.

    The lambda sum runs over the window past which both exponents exceed the
    order; the window enlarged by one must give the same truncation.

    Raises:
        StabilityError: The enlarged window changes the result.
    """
    order_eighths = to_eighths(order)
    if order_eighths < 0:
        raise InvalidParametersError("truncation order must be nonnegative")
    return _rocha_caridi(params, order_eighths)


def _shifted_character(params, shift, order) -> TruncatedSeries:
    """q^shift chi truncated at order, for any rational shift."""
    order = QExponent.of(order)
    shift = QExponent.of(shift)
    inner = order - shift
    if inner.eighths < 0:
        return TruncatedSeries(QPoly.zero(), order)
    return rocha_caridi(params, inner).shift(shift)


def abf_bosonic_finitized(p, a, b, e, f, L, order=None):
    """
    The bosonic form of X^{e,f}_{a,b}(L) for the ABF paths of band p.

    Args:
        p, a, b, e, f, L: Path set parameters; e does not enter the value.
        order: (optional) Truncate at this order, returning a TruncatedSeries.

    Returns:
        QPoly, or TruncatedSeries when order is given; zero when L + a + b
        is odd.
    """
    _check_band(p, a, b, e, f, L)
    limit = None if order is None else to_eighths(order)
    total = QPoly.zero()
    if (L + a - b) % 2 == 0:
        prefactor = 2 * (a - b) * (a - b - 1 + 2 * f)
        span = (L + a + b) // (p + 1) + 1
        for lam in range(-span, span + 1):
            for sign, k, exponent in (
                (1, (L + a - b) // 2 - (p + 1) * lam, lam * (p + 1) * (lam * p + b - f) - lam * p * a),
                (-1, (L - a - b) // 2 - (p + 1) * lam, (lam * p + b - f) * (lam * p + lam + a)),
            ):
                eighths = prefactor + 8 * exponent
                if limit is None:
                    value = q_binomial(k, L - k)
                else:
                    value = _q_binomial_truncated(k, L - k, limit - eighths)
                total = total + value.shift_eighths(eighths) * sign
    if limit is None:
        return total
    return total.truncate(QExponent(limit))


def _y_value(n, t, a, b, L, limit) -> QPoly:
    tp = 2 * t + 1
    total = QPoly.zero()
    span = int((L + abs(a) + abs(b)) / tp) + 1
    for lam in range(-span, span + 1):
        for sign, d, exponent in (
            (1, a - b - tp * lam, lam * lam * t * tp + lam * (tp * b - 2 * t * a)),
            (-1, -a - b - tp * lam, (lam * t + b) * (lam * tp + 2 * a)),
        ):
            d = _integer(d, "d")
            if abs(d) > L:
                continue
            eighths = to_eighths(exponent)
            idx = TrinomialIndex(n, d, L)
            if limit is None:
                value = q_trinomial(idx)
            else:
                value = q_trinomial_truncated(idx, QExponent(limit - eighths)).poly
            total = total + value.shift_eighths(eighths) * sign
    return total


def y_polynomial(params: YParams, order=None):
    """
    Y^{n;t}_{a,b}(L), the alternating lambda-sum of q-trinomials
    T(n; a-b-t'lambda, L) and T(n; -a-b-t'lambda, L) with t' = 2t + 1.

    Only the finitely many lambda with |d| <= L contribute. With an order
    the value is built from truncated q-trinomials and returned as a
    TruncatedSeries.
    """
    limit = None if order is None else to_eighths(order)
    value = _y_value(params.n, params.t, params.a, params.b, params.L, limit)
    if limit is None:
        return value
    return value.truncate(QExponent(limit))


def _normalisation(a, b) -> int:
    """Eighths of (1/2)(a-b)(a-b-1/2)."""
    x = a - b
    return 4 * x * x - 2 * x


def _scaled_y(n, t, a, b, L, eighths, limit):
    if limit is None:
        return _y_value(n, t, a, b, L, None).shift_eighths(eighths)
    return _y_value(n, t, a, b, L, limit - eighths).shift_eighths(eighths)


def _finish(value, limit):
    return value if limit is None else value.truncate(QExponent(limit))


def half_bosonic_extended(t, a, b, e, f, L, order=None):
    """
    q^{(1/2)(a-b)(a-b-1/2) + fL/2} Y^{f;t}_{a,b}(L) for any integers a, b and
    L >= 0.

    Outside the band these values are not path generating functions; they
    supply the out-of-band terms of the boundary conditions.
    """
    t = _half_integer(t, "t")
    if e not in (0, 1) or f not in (0, 1):
        raise InvalidParametersError(f"flags e={e}, f={f} must be 0 or 1")
    if L < 0:
        raise InvalidParametersError(f"length L={L} is negative")
    limit = None if order is None else to_eighths(order)
    return _finish(_scaled_y(f, t, a, b, L, _normalisation(a, b) + 4 * f * L, limit), limit)


def half_bosonic_finitized(t, a, b, e, f, L, order=None):
    """
    The bosonic form of the half-lattice generating function with integer
    start a.

    For integer b this is q^{(1/2)(a-b)(a-b-1/2) + fL/2} Y^{f;t}_{a,b}(L).
    For b = b0 + 1/2 and L = L0 + 1/2 it is
    q^{(1/2)(a-b0)(a-b0-1/2)} Y^{0;t}_{a,b0}(L0)
    + q^{L0+1+(1/2)(a-b0)(a-b0-5/2)} Y^{1;t}_{a,b0+1}(L0) when f = 1, and
    q^{L0/2+1/4+(1/2)(a-b0)(a-b0-1/2)} Y^{0;t}_{a,b0}(L0) when f = 0.

    Args:
        t: Band top, a multiple of 1/2.
        a: Integer start height, 1 <= a <= t.
        b: End height, a multiple of 1/2 with 1 <= b <= t.
        e, f: Segment flags.
        L: Length, a multiple of 1/2.
        order: (optional) Truncate at this order.

    Returns:
        QPoly, or TruncatedSeries when order is given; zero when L and b do
        not have the same fractional part.

    Raises:
        InvalidParametersError: a is not an integer or a parameter is out of range.
    """
    t2, b2, L2 = doubled(t, "t"), doubled(b, "b"), doubled(L, "L")
    a = _integer(a, "a")
    t = Fraction(t2, 2)
    if not (2 <= 2 * a <= t2 and 2 <= b2 <= t2):
        raise InvalidParametersError(f"need 1 <= a, b <= t, got a={a}, b={Fraction(b2, 2)}, t={t}")
    if e not in (0, 1) or f not in (0, 1):
        raise InvalidParametersError(f"flags e={e}, f={f} must be 0 or 1")
    if L2 < 0:
        raise InvalidParametersError(f"length L={Fraction(L2, 2)} is negative")
    limit = None if order is None else to_eighths(order)
    if (L2 + b2) % 2:
        return _finish(QPoly.zero(), limit)
    if b2 % 2 == 0:
        b, L = b2 // 2, L2 // 2
        return _finish(_scaled_y(f, t, a, b, L, _normalisation(a, b) + 4 * f * L, limit), limit)
    b0, L0 = (b2 - 1) // 2, (L2 - 1) // 2
    if f == 0:
        value = _scaled_y(0, t, a, b0, L0, 4 * L0 + 2 + _normalisation(a, b0), limit)
    else:
        x = a - b0
        value = _scaled_y(0, t, a, b0, L0, _normalisation(a, b0), limit) + _scaled_y(
            1, t, a, b0 + 1, L0, 8 * (L0 + 1) + 4 * x * x - 10 * x, limit
        )
    return _finish(value, limit)


def y_limit(n, t, a, b, order) -> TruncatedSeries:
    """
    The L -> inf limit of Y^{n;t}_{a,b}(L) truncated at order, taken at
    L = 2*order with L + 1 as the stability certificate.

    Raises:
        StabilityError: The truncations at L and L + 1 differ.
    """
    t = _half_integer(t, "t")
    limit = to_eighths(order)
    L = max(2 * (limit // 8), 1)
    first = _y_value(n, t, a, b, L, limit).truncate(QExponent(limit))
    second = _y_value(n, t, a, b, L + 1, limit).truncate(QExponent(limit))
    if first != second:
        raise StabilityError(f"Y^{n}_{a},{b} at t={t} has not stabilized by L={L}")
    return first


def _abf_limit_length(p, a, b, order):
    L = 2 * (to_eighths(order) // 8) + p + 2
    return L + (L + a + b) % 2


class BosonicRecurrences(Suite):
    """
    Checks of the half-lattice recurrences in L, their boundary and initial
    conditions, the Y-polynomial recurrences and the Y vanishing identities.

    In-band values come from path enumeration; terms outside the band come
    from `half_bosonic_extended`.
    """

    BASE_NAME = "bosonic."
    IDENTITIES = {
        "hrec0": "path_recurrence_f0",
        "hrec1": "path_recurrence_f1",
        "half_f1": "half_step_f1",
        "half_f0": "half_step_f0",
        "low": "boundary_low",
        "high_half": "boundary_high_half_integer_t",
        "high_int": "boundary_high_integer_t",
        "initial": "initial_condition",
        "yrec1": "y_recurrence_1",
        "yrec2": "y_recurrence_2",
        "y_low": "y_vanishes_at_b0",
        "y_high_half": "y_vanishes_past_band",
        "y_high_int": "y_cancels_past_band",
    }

    @staticmethod
    def _h(t2, a, b, e, f, L):
        if 1 <= b and 2 * b <= t2:
            return gf_half(Fraction(t2, 2), a, b, e, f, L)
        return half_bosonic_extended(Fraction(t2, 2), a, b, e, f, L)

    def path_recurrences(self, t, a_values, L_values):
        """The f = 0 and f = 1 recurrences for 1 <= b <= floor(t), L >= 1."""
        t2 = doubled(t, "t")
        records = []
        H = self._h
        for a in a_values:
            for e in (0, 1):
                for b in range(1, t2 // 2 + 1):
                    for L in L_values:
                        if L < 1:
                            continue
                        M = L - 1
                        indices = self._indices(t=Fraction(t2, 2), a=a, b=b, e=e, L=L)
                        rhs0 = (
                            H(t2, a, b - 1, e, 0, M).shift(Fraction(4 * L - 1, 4))
                            + H(t2, a, b, e, 0, M)
                            + H(t2, a, b + 1, e, 1, M).shift(Fraction(2 * L - 1, 4))
                        )
                        rhs1 = (
                            H(t2, a, b - 1, e, 0, M).shift(Fraction(2 * L - 1, 4))
                            + H(t2, a, b, e, 0, M).shift(Fraction(L, 2))
                            + H(t2, a, b + 1, e, 1, M).shift(Fraction(4 * L - 1, 4))
                        )
                        records.append(self._check("hrec0", indices, H(t2, a, b, e, 0, L), rhs0))
                        records.append(self._check("hrec1", indices, H(t2, a, b, e, 1, L), rhs1))
        self._set_attrs_to_values(records)
        return records

    def half_steps(self, t, a_values, L_values):
        """
        The steps from length L to L + 1/2 that end at a half-integer height:
        with f = 1 for 1 <= b < t, and with f = 0 for b + 1/2 <= t.
        """
        t2 = doubled(t, "t")
        t = Fraction(t2, 2)
        records = []
        for a in a_values:
            for e in (0, 1):
                for b in range(1, t2 // 2 + 1):
                    for L in L_values:
                        indices = self._indices(t=t, a=a, b=b, e=e, L=L)
                        length = L + Fraction(1, 2)
                        upper = b + Fraction(1, 2)
                        if b < t:
                            rhs = gf_half(t, a, b, e, 0, L) + self._h(t2, a, b + 1, e, 1, L).shift(
                                Fraction(2 * L + 1, 4)
                            )
                            records.append(self._check("half_f1", indices, gf_half(t, a, upper, e, 1, length), rhs))
                        if upper <= t:
                            rhs = gf_half(t, a, b, e, 0, L).shift(Fraction(2 * L + 1, 4))
                            records.append(self._check("half_f0", indices, gf_half(t, a, upper, e, 0, length), rhs))
        self._set_attrs_to_values(records)
        return records

    def boundaries(self, t, a_values, L_values):
        """Boundary identities past both ends of the band and the L = 0 values."""
        t2 = doubled(t, "t")
        t = Fraction(t2, 2)
        records = []
        for a in a_values:
            for e in (0, 1):
                for L in L_values:
                    indices = self._indices(t=t, a=a, e=e, L=L)
                    records.append(self._check("low", indices, half_bosonic_extended(t, a, 0, e, 0, L), QPoly.zero()))
                    if t2 % 2:
                        top = (t2 + 1) // 2
                        value = half_bosonic_extended(t, a, top, e, 1, L)
                        records.append(self._check("high_half", indices, value, QPoly.zero()))
                    else:
                        top = t2 // 2
                        value = half_bosonic_extended(t, a, top, e, 0, L) + half_bosonic_extended(
                            t, a, top + 1, e, 1, L
                        ).shift(Fraction(2 * L + 1, 4))
                        records.append(self._check("high_int", indices, value, QPoly.zero()))
                for b in range(1, t2 // 2 + 1):
                    for f in (0, 1):
                        expected = QPoly.one() if a == b else QPoly.zero()
                        indices = self._indices(t=t, a=a, b=b, e=e, f=f)
                        paths_ok = gf_half(t, a, b, e, f, 0) == expected
                        closed_ok = half_bosonic_extended(t, a, b, e, f, 0) == expected
                        records.append(
                            self._check("initial", indices, gf_half(t, a, b, e, f, 0), expected, passed=paths_ok and closed_ok)
                        )
        self._set_attrs_to_values(records)
        return records

    def y_recurrences(self, t, n_values, a_values, b_values, L_values):
        """The two recurrences of Y^{n;t}_{a,b}(L) in L, for L >= 1 and all integer a, b."""
        t = _half_integer(t, "t")
        records = []

        def Y(n, a, b, L):
            return _y_value(n, t, a, b, L, None)

        for n in n_values:
            for a in a_values:
                for b in b_values:
                    for L in L_values:
                        if L < 1:
                            continue
                        M = L - 1
                        indices = self._indices(t=t, n=n, a=a, b=b, L=L)
                        lhs = Y(n, a, b, L)
                        rhs1 = (
                            Y(n, a, b - 1, M).shift(L + a - b - n)
                            + Y(n, a, b, M)
                            + Y(n + 1, a, b + 1, M).shift(L - a + b)
                        )
                        rhs2 = (
                            Y(n - 1, a, b - 1, M).shift(a - b - n + 1)
                            + Y(n - 1, a, b, M)
                            + Y(n, a, b + 1, M).shift(L - a + b)
                        )
                        records.append(self._check("yrec1", indices, lhs, rhs1))
                        records.append(self._check("yrec2", indices, lhs, rhs2))
        self._set_attrs_to_values(records)
        return records

    def vanishing(self, t, a_values, L_values):
        """Y^{0;t}_{a,0} = 0, and past the band top the vanishing or cancelling pair."""
        t2 = doubled(t, "t")
        t = Fraction(t2, 2)
        records = []
        for a in a_values:
            for L in L_values:
                indices = self._indices(t=t, a=a, L=L)
                records.append(self._check("y_low", indices, _y_value(0, t, a, 0, L, None), QPoly.zero()))
                if t2 % 2:
                    value = _y_value(1, t, a, t + Fraction(1, 2), L, None)
                    records.append(self._check("y_high_half", indices, value, QPoly.zero()))
                else:
                    top = t2 // 2
                    value = _y_value(0, t, a, top, L, None) + _y_value(1, t, a, top + 1, L, None).shift(
                        L + 1 - a + top
                    )
                    records.append(self._check("y_high_int", indices, value, QPoly.zero()))
        self._set_attrs_to_values(records)
        return records

    def tasks(self, config):
        for t in config.t_range((2, Fraction(5, 2), 3, Fraction(7, 2))):
            t = Fraction(t)
            top = int(t)
            a_values = list(range(1, top + 1))
            L_values = list(range(0, config.length(8) + 1))
            yield Task("BosonicRecurrences", "path_recurrences", {"t": t, "a_values": a_values, "L_values": L_values})
            yield Task("BosonicRecurrences", "half_steps", {"t": t, "a_values": a_values, "L_values": L_values})
            yield Task("BosonicRecurrences", "boundaries", {"t": t, "a_values": a_values, "L_values": L_values})
            yield Task("BosonicRecurrences", "vanishing", {"t": t, "a_values": a_values, "L_values": L_values})
            yield Task(
                "BosonicRecurrences",
                "y_recurrences",
                {
                    "t": t,
                    "n_values": [0, 1],
                    "a_values": a_values,
                    "b_values": list(range(-1, top + 3)),
                    "L_values": L_values,
                },
            )


class BosonicLimits(Suite):
    """
    Checks of the L -> inf limits of the finitized bosonic forms against
    Rocha-Caridi characters, each limit certified by stability at the next
    admissible length.
    """

    BASE_NAME = "limits."
    IDENTITIES = {
        "y0": "y0_limit",
        "y1": "y1_limit",
        "abf": "abf_limit",
        "half_f0": "half_lattice_f0",
        "half_upper_f1": "half_lattice_upper_f1",
        "half_upper_f0": "half_lattice_upper_f0_scaled",
        "half_f1": "half_lattice_f1_scaled",
    }

    def y_limits(self, t, a, b, order=20):
        t = _half_integer(t, "t")
        indices = self._indices(t=t, a=a, b=b, order=order)
        records = []
        expected0 = rocha_caridi(CharacterParams.half_lattice(t, b, a), order)
        expected1 = expected0 + _shifted_character(CharacterParams.half_lattice(t, b - 1, a), a - b, order)
        for key, n, expected in (("y0", 0, expected0), ("y1", 1, expected1)):
            records.append(self._limit(key, indices, lambda n=n: y_limit(n, t, a, b, order), expected))
        self._set_attrs_to_values(records)
        return records

    def abf_limits(self, p, a, b, e, f, order=20):
        indices = self._indices(p=p, a=a, b=b, e=e, f=f, order=order)
        L = _abf_limit_length(p, a, b, order)

        def limit():
            first = abf_bosonic_finitized(p, a, b, e, f, L, order)
            if first != abf_bosonic_finitized(p, a, b, e, f, L + 2, order):
                raise StabilityError(f"ABF limit has not stabilized by L={L}")
            return first

        shift = Fraction((a - b) * (a - b - 1 + 2 * f), 4)
        expected = _shifted_character(CharacterParams(p, p + 1, b - f, a), shift, order)
        records = [self._limit("abf", indices, limit, expected)]
        self._set_attrs_to_values(records)
        return records

    def half_limits(self, t, a, b, order=20):
        """
        The four half-lattice limits for integer a, b with 1 <= a <= t and
        1 <= b < t. The scaled ones multiply by q^{-L/2}, where L is the
        integer part of the length.
        """
        t = _half_integer(t, "t")
        limit = to_eighths(order)
        L = max(2 * (limit // 8), 1)
        indices = self._indices(t=t, a=a, b=b, order=order)
        norm = Fraction(_normalisation(a, b), 8)
        chi = _shifted_character(CharacterParams.half_lattice(t, b, a), norm, order)
        upper = b + Fraction(1, 2)

        def stable(compute):
            first, second = compute(L), compute(L + 1)
            if first != second:
                raise StabilityError(f"half-lattice limit at t={t}, a={a}, b={b} has not stabilized by L={L}")
            return first

        def scaled(length, f, end, M):
            return half_bosonic_finitized(t, a, end, 0, f, length, QExponent(limit + 4 * M)).shift(Fraction(-M, 2))

        records = [
            self._limit("half_f0", indices, lambda: stable(lambda M: half_bosonic_finitized(t, a, b, 0, 0, M, order)), chi),
            self._limit(
                "half_upper_f1",
                indices,
                lambda: stable(lambda M: half_bosonic_finitized(t, a, upper, 0, 1, M + Fraction(1, 2), order)),
                chi,
            ),
            self._limit(
                "half_upper_f0",
                indices,
                lambda: stable(lambda M: scaled(M + Fraction(1, 2), 0, upper, M)),
                _shifted_character(CharacterParams.half_lattice(t, b, a), norm + Fraction(1, 4), order),
            ),
        ]
        if b > 1:
            pair = chi + _shifted_character(CharacterParams.half_lattice(t, b - 1, a), norm + a - b, order)
            records.append(self._limit("half_f1", indices, lambda: stable(lambda M: scaled(M, 1, b, M)), pair))
        self._set_attrs_to_values(records)
        return records

    def _limit(self, key, indices, compute, expected):
        try:
            value = compute()
        except StabilityError as error:
            logger.warning("%s: %s", self._get_identity(key), error)
            return self._check(key, indices, str(error), expected, passed=False)
        return self._check(key, indices, value, expected)

    def tasks(self, config):
        order = config.order
        for p in config.p_range((3, 4)):
            for a in range(1, p + 1):
                for b in range(1, p + 1):
                    for e in (0, 1):
                        for f in (0, 1):
                            if not config.accepts(a=a, b=b, e=e, f=f):
                                continue
                            kwargs = {"p": p, "a": a, "b": b, "e": e, "f": f, "order": order}
                            yield Task("BosonicLimits", "abf_limits", kwargs)
        for t in config.t_range((2, Fraction(5, 2), 3, Fraction(7, 2))):
            t = Fraction(t)
            for a in range(1, int(t) + 1):
                for b in range(1, int(t) + 1):
                    if b < t and config.accepts(a=a, b=b):
                        kwargs = {"t": t, "a": a, "b": b, "order": order}
                        yield Task("BosonicLimits", "y_limits", kwargs)
                        yield Task("BosonicLimits", "half_limits", kwargs)


def verify_bosonic_recurrences(t, a_range=None, L_range=range(0, 9), n_range=(0, 1), b_range=None) -> list:
    """
    Check the half-lattice recurrences, boundary conditions, Y-recurrences
    and Y vanishing identities at band top t.

    Args:
        t: Band top, a multiple of 1/2.
        a_range: (optional) Start heights; defaults to 1..floor(t).
        L_range: Lengths; recurrences skip L = 0.
        n_range: Superscripts of the Y-recurrences.
        b_range: (optional) End heights of the Y-recurrences; defaults to -1..floor(t)+2.

    Returns:
        A list of CheckRecord.
    """
    t = _half_integer(t, "t")
    top = int(t)
    a_values = list(a_range) if a_range is not None else list(range(1, top + 1))
    b_values = list(b_range) if b_range is not None else list(range(-1, top + 3))
    L_values = list(L_range)
    suite = BosonicRecurrences()
    suite.path_recurrences(t, a_values, L_values)
    suite.half_steps(t, a_values, L_values)
    suite.boundaries(t, a_values, L_values)
    suite.y_recurrences(t, list(n_range), a_values, b_values, L_values)
    suite.vanishing(t, a_values, L_values)
    logger.info(
        "bosonic recurrences at t=%s: %d records, %d failing",
        t,
        len(suite.records),
        sum(not r.passed for r in suite.records),
    )
    return suite.records


def y_limits_check(t, a, b, order=20) -> list:
    """lim Y^{0;t}_{a,b} and lim Y^{1;t}_{a,b} against their character forms."""
    return BosonicLimits().y_limits(t, a, b, order)


def abf_limit_check(p, a, b, e, f, order=20) -> list:
    """lim X^{e,f}_{a,b}(L) = q^{(1/4)(a-b)(a-b-1+2f)} chi^{p,p+1}_{b-f,a}, truncated at order."""
    return BosonicLimits().abf_limits(p, a, b, e, f, order)


def half_limits_check(t, a, b, order=20) -> list:
    """The four L -> inf limits of the half-lattice generating functions."""
    return BosonicLimits().half_limits(t, a, b, order)
