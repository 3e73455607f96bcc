"""
virasoro_paths.suites
~~~~~~~~~~~~~~~~~~~~~
This module implements the cross-module identity suites of virasoro_paths:
path generating functions against their bosonic and fermionic forms, the
path lemmas on matched flag quadruples, the half-lattice rescaling, the
character identities and the soundness of the modified binomials. It also
holds the registry mapping sweep suite names to Suite classes.

Created by the virasoro-paths developers on 2026-10-17.

:copyright: (c) 2026 by the virasoro-paths developers
:license: GPLv3, see LICENSE for more details
"""

import logging
from fractions import Fraction

from .base import ExcludedCaseError, InconsistentSystemError, InvalidParametersError, StabilityError, Suite, Task
from .bosonic import (
    BosonicLimits,
    BosonicRecurrences,
    CharacterParams,
    _abf_limit_length,
    _shifted_character,
    abf_bosonic_finitized,
    half_bosonic_finitized,
    rocha_caridi,
)
from .fermionic import (
    ROW_FLAGS,
    ROWS,
    Family,
    FermionicCase,
    evaluate_character,
    evaluate_finitized,
    finitized_case_for,
    hl_character,
    hl_character_pair,
    melzer_character,
    melzer_finitized,
)
from .paths import (
    abf_weight,
    enumerate_abf,
    enumerate_half,
    even_valley_count,
    flag_quadruple,
    gf_abf,
    gf_abf_m,
    gf_abf_restricted,
    gf_abf_restricted_m,
    gf_half,
    gf_half_via_restricted,
    half_from_restricted,
    half_valleys_allowed,
    path_from_vertex_word,
    seed_value,
    straight_count,
    valley_heights,
    vertex_word,
    weight_from_word,
)
from .qpoly import QExponent, QPoly, TruncatedSeries
from .qspecial import TrinomialIdentities
from .transforms import TransformChecks

logger = logging.getLogger(__name__)

HALF = Fraction(1, 2)


def _halves(low, high):
    """Multiples of 1/2 from low to high inclusive."""
    return [Fraction(k, 2) for k in range(int(2 * low), int(2 * high) + 1)]


def _flags():
    return [(e, f) for e in (0, 1) for f in (0, 1)]


def _reachable(family, L, a, b):
    """Whether a path of length L can join a to b."""
    if family is Family.HL_FINITIZED:
        return Fraction(L + a + b).denominator == 1
    return (L + a + b) % 2 == 0


class AbfSuite(Suite):
    """
    Checks of the ABF path generating functions: enumeration against the
    bosonic and fermionic forms, the m-refinement, the seeds, the shift
    identities at the band edges and the path lemmas on flag quadruples.
    """

    BASE_NAME = "abf."
    IDENTITIES = {
        "bosonic": "enumeration_equals_bosonic",
        "fermionic": "enumeration_equals_fermionic",
        "cardinality": "bosonic_at_one_counts_paths",
        "flag_e": "independent_of_e",
        "m_sum": "sum_over_m",
        "m_parity": "m_parity_vanishing",
        "seed": "seed_values",
        "shift_a1": "shift_start_1",
        "shift_ap": "shift_start_p",
        "shift_b1": "shift_end_1",
        "shift_bp": "shift_end_p",
        "weight_e": "weight_independent_of_e",
        "weight_b1": "weight_end_1",
        "weight_bp": "weight_end_p",
        "m_mod": "m_congruence",
        "m_a1": "m_start_1",
        "m_ap": "m_start_p",
        "m_b1": "m_end_1",
        "m_bp": "m_end_p",
        "word": "word_round_trip",
        "valleys": "even_valleys_geometric",
    }

    @staticmethod
    def _gf(p, a, b, e, f, L):
        return gf_abf(p, a, b, e, f, L)

    @staticmethod
    def _gf_m(p, a, b, e, f, L, m):
        return gf_abf_m(p, a, b, e, f, L, m)

    restricted = False

    def finitized(self, p, a, b, L_values):
        """Enumeration against the bosonic form and the fermionic row with the same flags."""
        records = []
        for e, f in _flags():
            try:
                case = finitized_case_for(Family.ABF_FINITIZED, p, a, b, e, f)
            except ExcludedCaseError:
                case = None
            for L in L_values:
                indices = self._indices(p=p, a=a, b=b, e=e, f=f, L=L)
                paths = self._gf(p, a, b, e, f, L)
                bosonic = abf_bosonic_finitized(p, a, b, e, f, L)
                records.append(self._check("bosonic", indices, paths, bosonic))
                records.append(
                    self._check("cardinality", indices, bosonic.at_one(), len(enumerate_abf(p, a, b, e, f, L)))
                )
                if case is not None and (L + a + b) % 2 == 0:
                    records.append(self._fermionic(case, indices, paths, L))
        self._set_attrs_to_values(records)
        return records

    def _fermionic(self, case, indices, paths, L):
        try:
            value = melzer_finitized(case, L)
        except InconsistentSystemError as error:
            return self._check("fermionic", indices, str(error), paths, passed=False)
        return self._check("fermionic", indices, paths, value)

    def refinement(self, p, L_values):
        """
        The sum over m, the vanishing at the wrong m parity and, for the
        unrestricted paths only, the independence of e.
        """
        records = []
        for a in range(1, p + 1):
            for b in range(1, p + 1):
                for e, f in _flags():
                    for L in L_values:
                        indices = self._indices(p=p, a=a, b=b, e=e, f=f, L=L)
                        total = self._gf(p, a, b, e, f, L)
                        parts = [self._gf_m(p, a, b, e, f, L, m) for m in range(0, L + 2)]
                        records.append(self._check("m_sum", indices, total, sum(parts, QPoly.zero())))
                        wrong = [m for m in range(0, L + 2) if (m - L - e - f) % 2 and parts[m]]
                        records.append(self._check("m_parity", indices, wrong, []))
                        if e == 0 and not self.restricted:
                            records.append(self._check("flag_e", indices, total, self._gf(p, a, b, 1, f, L)))
        self._set_attrs_to_values(records)
        return records

    def seeds(self, p, L_values):
        """The closed values at L = 0 and at m = 0."""
        records = []
        for a in range(1, p + 1):
            for b in range(1, p + 1):
                for e, f in _flags():
                    for L in L_values:
                        for m in range(0, L + 2):
                            expected = seed_value(p, a, b, e, f, L, m, restricted=self.restricted)
                            if expected is None:
                                continue
                            indices = self._indices(p=p, a=a, b=b, e=e, f=f, L=L, m=m)
                            records.append(self._check("seed", indices, self._gf_m(p, a, b, e, f, L, m), expected))
        self._set_attrs_to_values(records)
        return records

    def shifts(self, p, L_values):
        """
        At a = 1 and a = p flipping e moves one straight vertex; at b = 1 and
        b = p flipping f also moves the weight by L/2.
        Only L >= 1 is checked: the empty corner paths a = b = 1 and a = b = p
        break both statements.
        """
        records = []
        gf_m = self._gf_m
        for L in L_values:
            if L < 1:
                continue
            for m in range(0, L + 2):
                for c in range(1, p + 1):
                    for g in (0, 1):
                        indices = self._indices(p=p, L=L, m=m, other=c, flag=g)
                        records.append(self._check("shift_a1", indices, gf_m(p, 1, c, 1, g, L, m), gf_m(p, 1, c, 0, g, L, m - 1)))
                        records.append(self._check("shift_ap", indices, gf_m(p, p, c, 0, g, L, m), gf_m(p, p, c, 1, g, L, m - 1)))
                        records.append(
                            self._check(
                                "shift_b1",
                                indices,
                                gf_m(p, c, 1, g, 1, L, m),
                                gf_m(p, c, 1, g, 0, L, m - 1).shift(Fraction(L, 2)),
                            )
                        )
                        records.append(
                            self._check(
                                "shift_bp",
                                indices,
                                gf_m(p, c, p, g, 0, L, m),
                                gf_m(p, c, p, g, 1, L, m - 1).shift(Fraction(L, 2)),
                            )
                        )
        self._set_attrs_to_values(records)
        return records

    def lemmas(self, p, L_values):
        """
        Per-path statements over every base path with e = f = 0 and its flag
        quadruple; each record counts the paths violating the statement.
        """
        records = []
        half = 4
        for a in range(1, p + 1):
            for b in range(1, p + 1):
                for L in L_values:
                    # m at the band edges only moves for L >= 1
                    edge = L > 0
                    bad = dict.fromkeys(
                        ("weight_e", "weight_b1", "weight_bp", "m_mod", "m_a1", "m_ap", "m_b1", "m_bp", "word", "valleys"),
                        0,
                    )
                    for base in enumerate_abf(p, a, b, 0, 0, L):
                        quad = flag_quadruple(base)
                        w = {key: abf_weight(h).eighths for key, h in quad.items()}
                        m = {key: straight_count(h) for key, h in quad.items()}
                        for f in (0, 1):
                            bad["weight_e"] += w[(0, f)] != w[(1, f)]
                            bad["m_a1"] += edge and a == 1 and m[(0, f)] != m[(1, f)] - 1
                            bad["m_ap"] += edge and a == p and m[(1, f)] != m[(0, f)] - 1
                        for e in (0, 1):
                            bad["weight_b1"] += b == 1 and w[(e, 1)] != w[(e, 0)] + half * L
                            bad["weight_bp"] += b == p and w[(e, 0)] != w[(e, 1)] + half * L
                            bad["m_b1"] += edge and b == 1 and m[(e, 0)] != m[(e, 1)] - 1
                            bad["m_bp"] += edge and b == p and m[(e, 1)] != m[(e, 0)] - 1
                        for (e, f), h in quad.items():
                            bad["m_mod"] += (m[(e, f)] - L - e - f) % 2 != 0
                            word = vertex_word(h)
                            rebuilt = path_from_vertex_word(word, a, e, p)
                            bad["word"] += weight_from_word(word) != abf_weight(h) or rebuilt != h
                            evens = sum(1 for height in valley_heights(h) if height % 2 == 0)
                            bad["valleys"] += evens != even_valley_count(h)
                    indices = self._indices(p=p, a=a, b=b, L=L)
                    for key, count in bad.items():
                        records.append(self._check(key, indices, int(count), 0))
        self._set_attrs_to_values(records)
        return records

    def tasks(self, config):
        name = type(self).__name__
        lengths = list(range(0, config.length(12) + 1))
        short = list(range(0, config.length(8) + 1))
        for p in config.p_range((3, 4, 5)):
            for a in range(1, p + 1):
                for b in range(1, p + 1):
                    if config.accepts(a=a, b=b):
                        yield Task(name, "finitized", {"p": p, "a": a, "b": b, "L_values": lengths})
            yield Task(name, "refinement", {"p": p, "L_values": short})
            yield Task(name, "seeds", {"p": p, "L_values": short})
            yield Task(name, "shifts", {"p": p, "L_values": short})
            if not self.restricted:
                yield Task(name, "lemmas", {"p": p, "L_values": short})
        for p in (1, 2):
            yield Task(name, "seeds", {"p": p, "L_values": short})


class RestrictedSuite(AbfSuite):
    """
    The valley-restricted counterparts: enumeration against the fermionic
    form with base-q^2 binomials, the m-refinement, seeds and shifts.
    """

    BASE_NAME = "restricted."
    restricted = True

    @staticmethod
    def _gf(p, a, b, e, f, L):
        return gf_abf_restricted(p, a, b, e, f, L)

    @staticmethod
    def _gf_m(p, a, b, e, f, L, m):
        return gf_abf_restricted_m(p, a, b, e, f, L, m)

    def finitized(self, p, a, b, L_values):
        records = []
        for e, f in _flags():
            try:
                case = finitized_case_for(Family.RABF_FINITIZED, p, a, b, e, f)
            except ExcludedCaseError:
                continue
            for L in L_values:
                if (L + a + b) % 2:
                    continue
                indices = self._indices(p=p, a=a, b=b, e=e, f=f, L=L)
                paths = self._gf(p, a, b, e, f, L)
                try:
                    value = evaluate_finitized(case, L).value
                except InconsistentSystemError as error:
                    records.append(self._check("fermionic", indices, str(error), paths, passed=False))
                    continue
                records.append(self._check("fermionic", indices, paths, value))
        self._set_attrs_to_values(records)
        return records

    def tasks(self, config):
        for task in super().tasks(config):
            if task.method == "finitized":
                task.kwargs["L_values"] = list(range(0, config.length(10) + 1))
            yield task


class HalfSuite(Suite):
    """
    Checks of the half-lattice generating functions: enumeration against the
    bosonic and fermionic forms, the rescaled valley-restricted ABF paths,
    independence of e and the integer valley heights.
    """

    BASE_NAME = "half."
    IDENTITIES = {
        "bosonic": "enumeration_equals_bosonic",
        "fermionic": "enumeration_equals_fermionic",
        "rescaling": "rescaled_restricted_abf",
        "fermionic_rescaling": "rescaled_restricted_fermionic",
        "flag_e": "independent_of_e",
        "valleys": "valleys_at_integer_heights",
    }

    def finitized(self, t, a, b, L_values):
        t = Fraction(t)
        a, b = Fraction(a), Fraction(b)
        records = []
        for e, f in _flags():
            try:
                case = finitized_case_for(Family.HL_FINITIZED, t, a, b, e, f)
            except ExcludedCaseError:
                case = None
            for L in L_values:
                L = Fraction(L)
                indices = self._indices(t=t, a=a, b=b, e=e, f=f, L=L)
                paths = gf_half(t, a, b, e, f, L)
                records.append(self._check("rescaling", indices, paths, gf_half_via_restricted(t, a, b, e, f, L)))
                bad = sum(1 for h in enumerate_half(t, a, b, e, f, L) if not half_valleys_allowed(h))
                records.append(self._check("valleys", indices, bad, 0))
                if a.denominator == 1:
                    records.append(self._check("bosonic", indices, paths, half_bosonic_finitized(t, a, b, e, f, L)))
                    if e == 0:
                        records.append(self._check("flag_e", indices, paths, gf_half(t, a, b, 1, f, L)))
                if case is None or (L + a + b).denominator != 1:
                    continue
                try:
                    value = evaluate_finitized(case, L).value
                    p, a2, b2, L2 = int(2 * t) - 1, int(2 * a) - 1, int(2 * b) - 1, int(2 * L)
                    restricted = finitized_case_for(Family.RABF_FINITIZED, p, a2, b2, e, f)
                    rescaled = half_from_restricted(evaluate_finitized(restricted, L2).value)
                except InconsistentSystemError as error:
                    records.append(self._check("fermionic", indices, str(error), paths, passed=False))
                    continue
                records.append(self._check("fermionic", indices, paths, value))
                records.append(self._check("fermionic_rescaling", indices, value, rescaled))
        self._set_attrs_to_values(records)
        return records

    def tasks(self, config):
        for t in config.t_range((2, Fraction(5, 2), 3, Fraction(7, 2))):
            t = Fraction(t)
            lengths = _halves(0, config.length(5))
            for a in _halves(1, t):
                for b in _halves(1, t):
                    if config.accepts(a=a, b=b):
                        yield Task("HalfSuite", "finitized", {"t": t, "a": a, "b": b, "L_values": lengths})


class CharacterSuite(Suite):
    """
    Checks of the character-level fermionic sums against Rocha-Caridi
    characters, of the half-lattice label switch, of the character pair and
    of the large-L limit of the finitized ABF sums.
    """

    BASE_NAME = "character."
    IDENTITIES = {
        "melzer": "abf_fermionic_equals_bosonic",
        "half": "half_lattice_fermionic_equals_bosonic",
        "switch": "half_lattice_label_switch",
        "pair": "character_pair",
        "finitized_limit": "finitized_limit_equals_character",
    }

    def melzer(self, p, r, s, order=20):
        records = []
        expected = rocha_caridi(CharacterParams(p, p + 1, r, s), order)
        for row in ROWS:
            try:
                case = FermionicCase.abf_character(p, r, s, row)
            except ExcludedCaseError:
                continue
            indices = self._indices(p=p, r=r, s=s, row=row, order=order)
            records.append(self._guarded("melzer", indices, lambda: melzer_character(case, order), expected))
        self._set_attrs_to_values(records)
        return records

    def half(self, t, r, a, order=20):
        t = Fraction(t)
        records = []
        expected = rocha_caridi(CharacterParams.half_lattice(t, r, a), order)
        indices = self._indices(t=t, r=r, a=a, order=order)
        switched = rocha_caridi(CharacterParams(t + HALF, 2 * t, a, 2 * r), order)
        records.append(self._check("switch", indices, expected, switched))
        for row in ROWS:
            try:
                case = FermionicCase.hl_character(t, r, a, row)
            except ExcludedCaseError:
                continue
            row_indices = self._indices(t=t, r=r, a=a, row=row, order=order)
            records.append(self._guarded("half", row_indices, lambda: hl_character(case, order), expected))
        self._set_attrs_to_values(records)
        return records

    def pair(self, t, a, b, order=20):
        t = Fraction(t)
        indices = self._indices(t=t, a=a, b=b, order=order)
        expected = rocha_caridi(CharacterParams.half_lattice(t, b, a), order) + _shifted_character(
            CharacterParams.half_lattice(t, b - 1, a), a - b, order
        )
        records = [self._guarded("pair", indices, lambda: hl_character_pair(t, a, b, order), expected)]
        self._set_attrs_to_values(records)
        return records

    def finitized_limit(self, p, a, b, e, f, order=10):
        """
        The finitized ABF sum at large L against the character sum of the
        same row, both scaled to the limit q^{(1/4)(a-b)(a-b-1+2f)} chi^{p,p+1}_{b-f,a}.
        """
        records = []
        row = next(row for row, flags in ROW_FLAGS.items() if flags == (e, f))
        try:
            finite = FermionicCase.abf_finitized(p, a, b, row)
            character = FermionicCase.abf_character(p, b - f, a, row)
        except InvalidParametersError:
            self._set_attrs_to_values(records)
            return records
        limit = QExponent.of(order)
        L = _abf_limit_length(p, a, b, order)
        indices = self._indices(p=p, a=a, b=b, e=e, f=f, order=order, L=L)
        shift = QExponent(2 * (a - b) * (a - b - 1 + 2 * f))
        inner = limit - shift
        if inner.eighths < 0:
            expected = TruncatedSeries(QPoly.zero(), limit)
        else:
            expected = melzer_character(character, inner).shift(shift)

        def compute():
            first = melzer_finitized(finite, L).truncate(limit)
            if first != melzer_finitized(finite, L + 2).truncate(limit):
                raise StabilityError(f"finitized sum has not stabilized by L={L}")
            return first

        records.append(self._guarded("finitized_limit", indices, compute, expected))
        self._set_attrs_to_values(records)
        return records

    def _guarded(self, key, indices, compute, expected):
        try:
            value = compute()
        except (StabilityError, InconsistentSystemError) as error:
            return self._check(key, indices, str(error), expected, passed=False)
        return self._check(key, indices, value, expected)

    def tasks(self, config):
        order = config.order
        for p in config.p_range((3, 4)):
            for r in range(1, p):
                for s in range(1, p + 1):
                    yield Task("CharacterSuite", "melzer", {"p": p, "r": r, "s": s, "order": order})
            for a in range(1, p + 1):
                for b in range(1, p + 1):
                    for e, f in _flags():
                        if config.accepts(a=a, b=b, e=e, f=f):
                            kwargs = {"p": p, "a": a, "b": b, "e": e, "f": f, "order": min(order, 10)}
                            yield Task("CharacterSuite", "finitized_limit", kwargs)
        for t in config.t_range((2, Fraction(5, 2), 3, Fraction(7, 2))):
            t = Fraction(t)
            for a in range(1, int(t) + 1):
                for r in range(1, int(t) + 1):
                    if r < t:
                        yield Task("CharacterSuite", "half", {"t": t, "r": r, "a": a, "order": order})
                for b in range(2, int(t) + 1):
                    if b < t:
                        yield Task("CharacterSuite", "pair", {"t": t, "a": a, "b": b, "order": order})


class ModifiedBinomialSuite(Suite):
    """
    Soundness of the modified binomials: every (0, -1) factor that fires in a
    nonzero term lies in the row's listed index set, and rows whose set is
    empty evaluate identically with plain binomials.
    """

    BASE_NAME = "modified."
    IDENTITIES = {
        "sound": "firings_within_listed_indices",
        "plain": "plain_binomials_suffice_elsewhere",
        "never": "half_lattice_row_a_never_requires",
    }

    def _compare(self, case, indices, evaluate):
        records = []
        try:
            modified = evaluate(case, "case")
            plain = evaluate(case, "plain")
        except InconsistentSystemError as error:
            return [self._check("sound", indices, str(error), None, passed=False)]
        allowed = case.allowed_modified_indices()
        stray = sorted({i for _, i in modified.firings} - allowed)
        witnessed = sorted({i for _, i in modified.firings})
        detail = self._indices(**indices, allowed=sorted(allowed), fired=witnessed)
        records.append(self._check("sound", detail, stray, []))
        if not allowed:
            records.append(self._check("plain", detail, modified.value, plain.value))
        if case.family is Family.HL_CHARACTER and case.case_id == "a":
            records.append(self._check("never", detail, modified.value, plain.value))
        return records

    def finitized(self, family, P_or_t, L_values):
        family = Family(family)
        records = []
        if family is Family.HL_FINITIZED:
            heights = _halves(1, Fraction(P_or_t))
        else:
            heights = list(range(1, P_or_t + 1))
        for a in heights:
            for b in heights:
                for e, f in _flags():
                    try:
                        case = finitized_case_for(family, P_or_t, a, b, e, f)
                    except ExcludedCaseError:
                        continue
                    for L in L_values:
                        if not _reachable(family, L, a, b):
                            continue
                        indices = self._indices(family=family.value, top=P_or_t, a=a, b=b, e=e, f=f, L=L)
                        records.extend(
                            self._compare(case, indices, lambda c, mode, L=L: evaluate_finitized(c, L, mode))
                        )
        self._set_attrs_to_values(records)
        return records

    def characters(self, t, order=20):
        t = Fraction(t)
        records = []
        for a in range(1, int(t) + 1):
            for r in range(1, int(t) + 1):
                if r >= t:
                    continue
                for row in ROWS:
                    try:
                        case = FermionicCase.hl_character(t, r, a, row)
                    except ExcludedCaseError:
                        continue
                    indices = self._indices(t=t, r=r, a=a, row=row, order=order)
                    records.extend(self._compare(case, indices, lambda c, mode: evaluate_character(c, order, mode)))
        self._set_attrs_to_values(records)
        return records

    def tasks(self, config):
        for p in config.p_range((3, 4, 5)):
            lengths = list(range(0, config.length(10) + 1))
            kwargs = {"family": Family.RABF_FINITIZED.value, "P_or_t": p, "L_values": lengths}
            yield Task("ModifiedBinomialSuite", "finitized", kwargs)
        for t in config.t_range((2, Fraction(5, 2), 3, Fraction(7, 2))):
            t = Fraction(t)
            kwargs = {"family": Family.HL_FINITIZED.value, "P_or_t": t, "L_values": _halves(0, config.length(5))}
            yield Task("ModifiedBinomialSuite", "finitized", kwargs)
            yield Task("ModifiedBinomialSuite", "characters", {"t": t, "order": config.order})


SUITE_CLASSES = {
    cls.__name__: cls
    for cls in (
        TrinomialIdentities,
        AbfSuite,
        HalfSuite,
        RestrictedSuite,
        TransformChecks,
        CharacterSuite,
        BosonicRecurrences,
        ModifiedBinomialSuite,
        BosonicLimits,
    )
}

SUITES = {
    "trinomial": ("TrinomialIdentities",),
    "abf": ("AbfSuite",),
    "half": ("HalfSuite",),
    "restricted": ("RestrictedSuite",),
    "bijection": ("TransformChecks",),
    "character": ("CharacterSuite",),
    "recurrence": ("BosonicRecurrences",),
    "modified": ("ModifiedBinomialSuite",),
    "limits": ("BosonicLimits",),
}
SUITES["all"] = tuple(name for names in SUITES.values() for name in names)


def suite_classes(name: str) -> list:
    """The Suite classes run for a sweep suite name."""
    return [SUITE_CLASSES[class_name] for class_name in SUITES[name]]


def run_task(task: Task) -> list:
    """Run one Task in a fresh Suite instance and return its records."""
    suite = SUITE_CLASSES[task.suite]()
    logger.debug("running %s.%s(%s)", task.suite, task.method, task.kwargs)
    return suite.run(task.method, **task.kwargs)
