"""
virasoro_paths.qspecial
~~~~~~~~~~~~~~~~~~~~~~~
This module implements the special q-functions of virasoro_paths:
q-Pochhammer symbols, plain and modified q-binomials (also in base q^k),
q-trinomial coefficients in both defining forms, truncated 1/(q)_inf, and the
suite checking the q-trinomial identities.

Created by the virasoro-paths developers on 2026-10-17.

:copyright: (c) 2026 by the virasoro-paths developers
:license: GPLv3, see LICENSE for more details
"""

import functools
import logging
from dataclasses import dataclass

from .base import InvalidParametersError, Suite, Task
from .qpoly import DENOMINATOR, QExponent, QPoly, TruncatedSeries, to_eighths

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TrinomialIndex:
    """The indices n (superscript), d (middle) and L of a q-trinomial."""

    n: int
    d: int
    L: int

    def __post_init__(self):
        if self.L < 0:
            raise InvalidParametersError(f"trinomial length L={self.L} is negative")


def _one_minus_q(power: int) -> QPoly:
    return QPoly({0: 1, DENOMINATOR * power: -1})


@functools.lru_cache(maxsize=None)
def q_pochhammer(n: int) -> QPoly:
    """Return (q)_n = (1-q)(1-q^2)...(1-q^n), with (q)_0 = 1."""
    if n < 0:
        raise InvalidParametersError(f"(q)_n needs n >= 0, got {n}")
    if n == 0:
        return QPoly.one()
    return q_pochhammer(n - 1) * _one_minus_q(n)


def _series_reciprocal(series: TruncatedSeries) -> TruncatedSeries:
    # Requires a unit constant term and no negative powers.
    terms = series.poly.terms
    unit = terms.get(0)
    if unit not in (1, -1) or min(terms) < 0:
        raise InvalidParametersError("reciprocal needs constant term +-1 and no negative powers")
    top = series.order.eighths
    others = sorted((e, c) for e, c in terms.items() if e > 0)
    inverse = {0: unit}
    for k in range(1, top + 1):
        total = 0
        for e, c in others:
            if e > k:
                break
            total += c * inverse.get(k - e, 0)
        if total:
            inverse[k] = -unit * total
    return TruncatedSeries(QPoly(inverse), series.order)


@functools.lru_cache(maxsize=None)
def _inv_pochhammer(m: int | None, order_eighths: int) -> TruncatedSeries:
    top = order_eighths // DENOMINATOR
    count = top if m is None else min(m, top)
    product = QPoly.one()
    for i in range(1, count + 1):
        product = product.mul_truncated(_one_minus_q(i), order_eighths)
    return _series_reciprocal(TruncatedSeries(product, QExponent(order_eighths)))


def inv_pochhammer_truncated(order) -> TruncatedSeries:
    """
    Return 1/(q)_inf, the partition generating function, truncated at order.

    Args:
        order: Nonnegative truncation order (int, Fraction or QExponent).
    """
    order_eighths = to_eighths(order)
    if order_eighths < 0:
        raise InvalidParametersError("truncation order must be nonnegative")
    return _inv_pochhammer(None, order_eighths)


def inv_pochhammer_finite_truncated(m: int, order) -> TruncatedSeries:
    """Return 1/(q)_m truncated at order; the zero series when m < 0."""
    order_eighths = to_eighths(order)
    if m < 0 or order_eighths < 0:
        return TruncatedSeries(QPoly.zero(), QExponent(max(order_eighths, 0)))
    return _inv_pochhammer(m, order_eighths)


@functools.lru_cache(maxsize=None)
def q_binomial(n: int, m: int) -> QPoly:
    """
    Return the q-binomial (q)_{n+m} / ((q)_n (q)_m), or 0 unless n, m >= 0.

    The ratio is built one factor at a time, (1 - q^(n+m-k+i)) / (1 - q^i),
    each partial quotient being itself a q-binomial, so every division is exact.
    """
    if n < 0 or m < 0:
        return QPoly.zero()
    k = min(n, m)
    top = n + m
    result = QPoly.one()
    for i in range(1, k + 1):
        result = (result * _one_minus_q(top - k + i)).div_exact(_one_minus_q(i))
    return result


def q_binomial_modified(n: int, m: int) -> QPoly:
    """Return q_binomial(n, m), except that (n, m) = (0, -1) gives 1."""
    if n == 0 and m == -1:
        return QPoly.one()
    return q_binomial(n, m)


@functools.lru_cache(maxsize=None)
def q_binomial_base(n: int, m: int, base_power: int = 1, modified: bool = False) -> QPoly:
    """
    Return the (modified) q-binomial with q replaced by q**base_power.

    Args:
        n: Lower entry.
        m: Complementary entry, so the top entry is n + m.
        base_power: Positive integer k of the base q^k.
        modified: Use the (0, -1) -> 1 convention.
    """
    if base_power < 1:
        raise InvalidParametersError(f"base power must be positive, got {base_power}")
    value = q_binomial_modified(n, m) if modified else q_binomial(n, m)
    if base_power == 1:
        return value
    return value.substitute_power(base_power)


@functools.lru_cache(maxsize=None)
def _q_binomial_truncated(n: int, m: int, order_eighths: int) -> QPoly:
    if n < 0 or m < 0 or order_eighths < 0:
        return QPoly.zero()
    k = min(n, m)
    top = n + m
    numerator = QPoly.one()
    for i in range(1, k + 1):
        if DENOMINATOR * (top - k + i) > order_eighths:
            break
        numerator = numerator.mul_truncated(_one_minus_q(top - k + i), order_eighths)
    inverse = _inv_pochhammer(k, order_eighths)
    return numerator.mul_truncated(inverse.poly, order_eighths)


def q_binomial_truncated(n: int, m: int, order) -> TruncatedSeries:
    """Return q_binomial(n, m) truncated at order without expanding it fully."""
    order_eighths = to_eighths(order)
    return TruncatedSeries(_q_binomial_truncated(n, m, order_eighths), QExponent(order_eighths))


def _trinomial_first_form(n: int, d: int, L: int, limit: int | None) -> QPoly:
    # (q)_L / ((q)_k (q)_{k+d} (q)_{L-2k-d}) == [L; k] * [L-k; k+d]
    total = QPoly.zero()
    for k in range(max(0, -d), (L - d) // 2 + 1):
        shift = DENOMINATOR * k * (k + d - n)
        if limit is None:
            coeff = q_binomial(k, L - k) * q_binomial(k + d, L - 2 * k - d)
        else:
            budget = limit - shift
            if budget < 0:
                continue
            coeff = _q_binomial_truncated(k, L - k, budget).mul_truncated(
                _q_binomial_truncated(k + d, L - 2 * k - d, budget), budget
            )
        total = total + coeff.shift_eighths(shift)
    return total


@functools.lru_cache(maxsize=None)
def _q_trinomial(n: int, d: int, L: int) -> QPoly:
    if abs(d) > L:
        return QPoly.zero()
    return _trinomial_first_form(n, d, L, None)


def q_trinomial(idx: TrinomialIndex) -> QPoly:
    """
    Return the q-trinomial T(n; d, L) from its sum over k of
    q^{k(k+d-n)} (q)_L / ((q)_k (q)_{k+d} (q)_{L-2k-d}).
    """
    return _q_trinomial(idx.n, idx.d, idx.L)


def q_trinomial_alternative(idx: TrinomialIndex) -> QPoly:
    """
    Return T(n; d, L) from the second form,
    q^{-(d-n)^2/4} sum_r q^{(L-n-r)^2/4} (q)_L / ((q)_{(L-d-r)/2} (q)_{(L+d-r)/2} (q)_r).
    """
    n, d, L = idx.n, idx.d, idx.L
    total = QPoly.zero()
    for r in range(0, L - abs(d) + 1):
        if (L - d - r) % 2:
            continue
        # eighths of ((L-n-r)^2 - (d-n)^2) / 4
        shift = 2 * ((L - n - r) ** 2 - (d - n) ** 2)
        coeff = q_binomial(r, L - r) * q_binomial((L - d - r) // 2, (L + d - r) // 2)
        total = total + coeff.shift_eighths(shift)
    return total


def q_trinomial_truncated(idx: TrinomialIndex, order) -> TruncatedSeries:
    """Return T(n; d, L) truncated at order, using truncated q-binomials."""
    order_eighths = to_eighths(order)
    if abs(idx.d) > idx.L:
        return TruncatedSeries(QPoly.zero(), QExponent(order_eighths))
    value = _trinomial_first_form(idx.n, idx.d, idx.L, order_eighths)
    return value.truncate(QExponent(order_eighths))


def _T(n, d, L):
    return _q_trinomial(n, d, L)


def _q(power: int) -> QPoly:
    return QPoly.monomial(power)


class TrinomialIdentities(Suite):
    """
    Checks of the q-trinomial identities.

    Every method evaluates both sides exactly and records one CheckRecord per
    index triple; failures are reported, never raised.
    """

    BASE_NAME = "trinomial."
    IDENTITIES = {
        "definitions": "definitions_agree",
        "symmetry": "negated_middle_index",
        "urec1": "recurrence_1",
        "urec2": "recurrence_2",
        "urec3": "recurrence_3",
        "urec4": "recurrence_4",
        "pair1": "paired_recurrence_1",
        "pair2": "paired_recurrence_2",
        "combined": "combined_recurrence",
        "limit_n0": "limit_n0",
        "limit_step": "limit_recursion",
        "limit_n1": "limit_n1",
    }

    def definitions(self, n_values, d_values, L_values):
        """T(n;d,L) from both defining sums."""
        records = []
        for n in n_values:
            for d in d_values:
                for L in L_values:
                    idx = TrinomialIndex(n, d, L)
                    records.append(
                        self._check(
                            "definitions",
                            self._indices(n=n, d=d, L=L),
                            q_trinomial(idx),
                            q_trinomial_alternative(idx),
                        )
                    )
        self._set_attrs_to_values(records)
        return records

    def symmetry(self, n_values, d_values, L_values):
        """T(n;-d,L) = q^{-nd} T(n;d,L)."""
        records = []
        for n in n_values:
            for d in d_values:
                for L in L_values:
                    records.append(
                        self._check(
                            "symmetry",
                            self._indices(n=n, d=d, L=L),
                            _T(n, -d, L),
                            _T(n, d, L).shift(-n * d),
                        )
                    )
        self._set_attrs_to_values(records)
        return records

    def recurrences(self, n_values, d_values, L_values):
        """The four three-term recurrences in L, for L >= 1."""
        records = []
        for n in n_values:
            for d in d_values:
                for L in L_values:
                    if L < 1:
                        continue
                    indices = self._indices(n=n, d=d, L=L)
                    lhs = _T(n, d, L)
                    M = L - 1
                    rhs1 = _q(L - d) * _T(n + 1, d - 1, M) + _T(n, d, M) + _q(L + d - n) * _T(n, d + 1, M)
                    rhs2 = _q(L - d) * _T(n, d - 1, M) + _T(n - 1, d, M) + _q(d - n + 1) * _T(n - 1, d + 1, M)
                    rhs3 = _q(L - d) * _T(n, d - 1, M) + _T(n, d, M) + _q(L - n - 1) * _T(n + 1, d + 1, M)
                    rhs4 = _T(n - 1, d - 1, M) + _q(d) * _T(n - 1, d, M) + _q(L + d - n) * _T(n, d + 1, M)
                    records.append(self._check("urec1", indices, lhs, rhs1))
                    records.append(self._check("urec2", indices, lhs, rhs2))
                    records.append(self._check("urec3", indices, lhs, rhs3))
                    records.append(self._check("urec4", indices, lhs, rhs4))
        self._set_attrs_to_values(records)
        return records

    def paired(self, n_values, d_values, L_values):
        """The two four-term identities at fixed L and the combined five-term one."""
        records = []
        for n in n_values:
            for d in d_values:
                for L in L_values:
                    indices = self._indices(n=n, d=d, L=L)
                    records.append(
                        self._check(
                            "pair1",
                            indices,
                            _q(L + 1 - d) * _T(n + 1, d - 1, L) + _T(n, d, L),
                            _T(n - 1, d - 1, L) + _q(d) * _T(n - 1, d, L),
                        )
                    )
                    records.append(
                        self._check(
                            "pair2",
                            indices,
                            _q(L - n) * _T(n + 1, d + 1, L) + _T(n, d, L),
                            _q(d - n + 1) * _T(n - 1, d + 1, L) + _T(n - 1, d, L),
                        )
                    )
                    records.append(
                        self._check(
                            "combined",
                            indices,
                            _T(n, d + 1, L) + _q(L - d) * _T(n + 1, d, L),
                            _q(L) * _T(n + 1, d + 1, L)
                            + _q(n) * _T(n, d, L)
                            + (1 - _q(n)) * _T(n - 1, d, L),
                        )
                    )
        self._set_attrs_to_values(records)
        return records

    def limits(self, d_values, order=20):
        """
        The L -> inf limits, with L = 2*order as the proxy and L+1 as the
        stability certificate.
        """
        records = []
        partitions = inv_pochhammer_truncated(order)
        L = 2 * order

        def limit(n, d):
            first = q_trinomial_truncated(TrinomialIndex(n, d, L), order)
            second = q_trinomial_truncated(TrinomialIndex(n, d, L + 1), order)
            return first, first == second

        for d in d_values:
            if d < 0:
                raise InvalidParametersError("limits are checked for d >= 0")
            indices = self._indices(d=d, order=order, L=L)
            t0, stable0 = limit(0, d)
            t0_left, stable_left = limit(0, d - 1)
            t1, stable1 = limit(1, d)
            expected1 = partitions + partitions * QPoly.monomial(d)
            step = t0_left + t0 * QPoly.monomial(d)
            records.append(self._check("limit_n0", indices, t0, partitions, passed=stable0 and t0 == partitions))
            records.append(
                self._check("limit_step", indices, t1, step, passed=stable1 and stable_left and t1 == step)
            )
            records.append(self._check("limit_n1", indices, t1, expected1, passed=stable1 and t1 == expected1))
        self._set_attrs_to_values(records)
        return records

    def tasks(self, config):
        n_values = list(range(0, 4))
        d_values = list(range(-6, 7))
        for L in range(0, config.length(12) + 1):
            kwargs = {"n_values": n_values, "d_values": d_values, "L_values": [L]}
            yield Task("TrinomialIdentities", "definitions", kwargs)
            yield Task("TrinomialIdentities", "symmetry", kwargs)
            yield Task("TrinomialIdentities", "recurrences", kwargs)
            yield Task("TrinomialIdentities", "paired", kwargs)
        yield Task("TrinomialIdentities", "limits", {"d_values": list(range(0, 4)), "order": config.order})


def verify_trinomial_identities(n_range, d_range, L_range, order=20, limit_d_range=None):
    """
    Check every q-trinomial identity over the given finite ranges.

    Args:
        n_range: Iterable of superscripts n.
        d_range: Iterable of middle indices d.
        L_range: Iterable of lengths L (recurrences skip L = 0).
        order: Truncation order of the L -> inf limits.
        limit_d_range: (optional) d values for the limits; defaults to the
                       nonnegative part of d_range.

    Returns:
        A list of CheckRecord, one per identity per index triple.
    """
    n_values, d_values, L_values = list(n_range), list(d_range), list(L_range)
    suite = TrinomialIdentities()
    suite.definitions(n_values, d_values, L_values)
    suite.symmetry(n_values, d_values, L_values)
    suite.recurrences(n_values, d_values, L_values)
    suite.paired(n_values, d_values, L_values)
    if limit_d_range is None:
        limit_d_range = [d for d in d_values if d >= 0]
    suite.limits(list(limit_d_range), order)
    logger.info(
        "trinomial identities: %d records, %d failing",
        len(suite.records),
        sum(not r.passed for r in suite.records),
    )
    return suite.records
