"""
virasoro_paths.fermionic
~~~~~~~~~~~~~~~~~~~~~~~~
This module implements the fermionic side of virasoro_paths: parity vectors,
the four-row case tables of every fermionic family, the linear systems giving
m from n, and the multi-sums themselves, both finitized (exact polynomials)
and at the character level (truncated series).

Every family is carried by the same band form (P, A, B, row): the ABF
families use P = p directly, the half-lattice ones P = 2t - 1 with doubled
endpoints. The row fixes the flags (e, f), the linear-term index l, the
offsets Delta_i and the parity vectors T^L, T^R.

Created by the virasoro-paths developers on 2026-10-17.

:copyright: (c) 2026 by the virasoro-paths developers
:license: GPLv3, see LICENSE for more details
"""

import enum
import functools
import logging
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .base import ExcludedCaseError, InconsistentSystemError, InvalidParametersError
from .bosonic import y_limit
from .paths import doubled
from .qpoly import QExponent, QPoly, TruncatedSeries
from .qspecial import _inv_pochhammer, _q_binomial_truncated, q_binomial, q_binomial_base

logger = logging.getLogger(__name__)

ROWS = ("a", "b", "c", "d")
ROW_FLAGS = {"a": (1, 1), "b": (0, 1), "c": (0, 0), "d": (1, 0)}


def _pos(value):
    return value if value > 0 else 0


@dataclass(frozen=True)
class ParityVector:
    """A 0/1 vector (T_1, ..., T_j); `component(i)` is 1-based."""

    entries: tuple

    def component(self, i: int) -> int:
        return self.entries[i - 1]

    @property
    def tilde(self) -> "ParityVector":
        """The vector with its first component dropped."""
        return ParityVector(self.entries[1:])

    def __len__(self):
        return len(self.entries)


def _check_parity_range(c, j):
    if j < 0 or not 1 <= c <= j + 1:
        raise InvalidParametersError(f"parity vector needs 1 <= c <= j+1, got c={c}, j={j}")


def parity_q(c: int, j: int) -> ParityVector:
    """Q^(c,j) with Q_i = (c-1-i)_+ mod 2."""
    _check_parity_range(c, j)
    return ParityVector(tuple(_pos(c - 1 - i) % 2 for i in range(1, j + 1)))


def parity_r(c: int, j: int) -> ParityVector:
    """R^(c,j) with R_i = ((i+c-j-1)_+ + c + 1) mod 2."""
    _check_parity_range(c, j)
    return ParityVector(tuple((_pos(i + c - j - 1) + c + 1) % 2 for i in range(1, j + 1)))


class Family(enum.Enum):
    ABF_FINITIZED = "abf_finitized"
    HL_FINITIZED = "hl_finitized"
    RABF_FINITIZED = "rabf_finitized"
    ABF_CHARACTER = "abf_character"
    HL_CHARACTER = "hl_character"


_HALF_SCALE = {Family.HL_FINITIZED, Family.HL_CHARACTER}
_HATTED = {Family.HL_FINITIZED, Family.RABF_FINITIZED, Family.HL_CHARACTER}
_CHARACTERS = {Family.ABF_CHARACTER, Family.HL_CHARACTER}

_EXCLUDED = {
    "a": lambda P, A, B: A == 1 or B == 1,
    "b": lambda P, A, B: A == P or B == 1,
    "c": lambda P, A, B: A == P or B == P,
    "d": lambda P, A, B: A == 1 or B == P,
}


def _check_row(case_id):
    if case_id not in ROWS:
        raise InvalidParametersError(f"row must be one of {ROWS}, got {case_id!r}")


@dataclass(frozen=True)
class FermionicCase:
    """
    One row of one fermionic family, resolved to its band form.

    Build instances with the family constructors (`abf_finitized`,
    `hl_finitized`, `rabf_finitized`, `abf_character`, `hl_character`), which
    validate the ranges and reject excluded rows.

    Args:
        family: The Family.
        case_id: Row "a", "b", "c" or "d".
        P: Band height of the underlying ABF-type paths (P - 1 species).
        A: Start height in band form.
        B: End height in band form.
        labels: The parameters as the caller gave them, for reports.
    """

    family: Family
    case_id: str
    P: int
    A: int
    B: int
    labels: tuple = ()

    @classmethod
    def abf_finitized(cls, p, a, b, case_id):
        return cls._finitized(Family.ABF_FINITIZED, p, a, b, case_id, (("p", p), ("a", a), ("b", b)))

    @classmethod
    def rabf_finitized(cls, p, a, b, case_id):
        return cls._finitized(Family.RABF_FINITIZED, p, a, b, case_id, (("p", p), ("a", a), ("b", b)))

    @classmethod
    def hl_finitized(cls, t, a, b, case_id):
        t2, a2, b2 = doubled(t, "t"), doubled(a, "a"), doubled(b, "b")
        if not (2 <= a2 <= t2 and 2 <= b2 <= t2):
            raise InvalidParametersError(f"need 1 <= a, b <= t, got a={a}, b={b}, t={t}")
        labels = (("t", str(Fraction(t2, 2))), ("a", str(Fraction(a2, 2))), ("b", str(Fraction(b2, 2))))
        return cls._finitized(Family.HL_FINITIZED, t2 - 1, a2 - 1, b2 - 1, case_id, labels)

    @classmethod
    def _finitized(cls, family, P, A, B, case_id, labels):
        _check_row(case_id)
        if P < 3:
            raise InvalidParametersError(f"the band must have height at least 3, got {P}")
        if not (1 <= A <= P and 1 <= B <= P):
            raise InvalidParametersError(f"endpoints {A}, {B} outside the band [1, {P}]")
        if _EXCLUDED[case_id](P, A, B):
            raise ExcludedCaseError(f"row ({case_id}) is excluded for {dict(labels)}")
        return cls(family, case_id, P, A, B, labels)

    @classmethod
    def abf_character(cls, p, r, s, case_id):
        """The row for chi^{p,p+1}_{r,s}; the band form is A = s, B = r + f."""
        _check_row(case_id)
        if p < 3 or not (1 <= r < p and 1 <= s <= p):
            raise InvalidParametersError(f"need p >= 3, 1 <= r < p, 1 <= s <= p, got p={p}, r={r}, s={s}")
        excluded = {
            "a": r == 1 or s == 1,
            "b": r == 1 or s == p,
            "c": r == p - 1 or s == p,
            "d": r == p - 1 or s == 1,
        }
        if excluded[case_id]:
            raise ExcludedCaseError(f"row ({case_id}) is excluded for p={p}, r={r}, s={s}")
        f = ROW_FLAGS[case_id][1]
        return cls(Family.ABF_CHARACTER, case_id, p, s, r + f, (("p", p), ("r", r), ("s", s)))

    @classmethod
    def hl_character(cls, t, r, a, case_id):
        """
        The row for chi^{t,2t+1}_{r,2a}; the band form is P = 2t - 1,
        A = 2a - 1 and B = 2r (rows a, b) or 2r - 1 (rows c, d).
        """
        _check_row(case_id)
        t2 = doubled(t, "t")
        if t2 < 4 or not (1 <= 2 * a <= t2 and 1 <= 2 * r < t2):
            raise InvalidParametersError(f"need t >= 2, 1 <= a <= t, 1 <= r < t, got t={t}, a={a}, r={r}")
        excluded = {
            "a": r == 1 or a == 1,
            "b": r == 1 or 2 * a == t2,
            "c": 2 * r == t2 - 1 or 2 * a == t2,
            "d": 2 * r == t2 - 1 or a == 1,
        }
        if excluded[case_id]:
            raise ExcludedCaseError(f"row ({case_id}) is excluded for t={Fraction(t2, 2)}, a={a}, r={r}")
        f = ROW_FLAGS[case_id][1]
        labels = (("t", str(Fraction(t2, 2))), ("r", r), ("a", a))
        return cls(Family.HL_CHARACTER, case_id, t2 - 1, 2 * a - 1, 2 * r - 1 + f, labels)

    @property
    def flags(self) -> tuple:
        """The (e, f) pair of the row."""
        return ROW_FLAGS[self.case_id]

    @property
    def top(self) -> int:
        """Index of the last species, P - 1."""
        return self.P - 1

    @property
    def ell(self) -> int:
        return self.A - 1 if self.case_id in ("a", "d") else self.P - self.A

    def delta(self, i: int) -> int:
        P, A, B = self.P, self.A, self.B
        left = _pos(A - 1 - i) if self.case_id in ("a", "d") else _pos(P - A - i)
        right = _pos(B - 1 - i) if self.case_id in ("a", "b") else _pos(P - B - i)
        extra = P - 1 - i if self.case_id in ("b", "d") else 0
        return left + right + extra

    @property
    def t_left(self) -> ParityVector:
        maker = parity_q if self.case_id in ("a", "d") else parity_r
        return maker(self.A, self.top)

    @property
    def t_right(self) -> ParityVector:
        maker = parity_q if self.case_id in ("a", "b") else parity_r
        return maker(self.B, self.top)

    @property
    def hatted(self) -> bool:
        return self.family in _HATTED

    @property
    def binomial(self) -> str:
        """"plain" or "modified"."""
        if self.family in (Family.ABF_FINITIZED, Family.ABF_CHARACTER):
            return "plain"
        return "modified"

    @property
    def base_power(self) -> int:
        return 2 if self.family is Family.RABF_FINITIZED else 1

    @property
    def scale(self) -> int:
        """Eighths per unit of (1/8) mCm in the exponent."""
        return 1 if self.family in _HALF_SCALE else 2

    def allowed_modified_indices(self) -> frozenset:
        """
        The species i at which a modified binomial may take its (0, -1)
        value in a nonzero term; empty when plain binomials always suffice.
        """
        P, A, B = self.P, self.A, self.B
        indices = range(1, self.top)
        if self.family is Family.HL_CHARACTER and self.case_id == "a":
            return frozenset()
        if self.case_id == "a":
            allowed = [i for i in indices if A == B > 2 and i < A and (i - A) % 2 == 0]
        elif self.case_id == "b":
            allowed = [i for i in indices if A > 1 and B == P and i > P - A and (i - P) % 2 == 0]
        elif self.case_id == "c":
            allowed = [i for i in indices if A > 1 and B > 1 and i > max(P - A, P - B) and (i - P) % 2 == 0]
        else:
            allowed = [i for i in indices if A == P and B > 1 and i > P - B and (i - P) % 2 == 0]
        return frozenset(allowed)

    def to_json(self):
        return {"family": self.family.value, "row": self.case_id, **{k: v for k, v in self.labels}}


@dataclass(frozen=True)
class MSystem:
    """
    The vectors m_0..m_top and, for the hatted families, hat_m_1..hat_m_top
    obtained from n_1..n_top.
    """

    n: tuple
    m: tuple
    hat_m: tuple | None = None

    @classmethod
    def solve(cls, case: FermionicCase, n) -> "MSystem":
        """
        Solve m_i = 2 sum_{i<k<=top} (k-i) n_k - Delta_i for 0 <= i <= top.

        Raises:
            InconsistentSystemError: m_top != 0, or some hat_m_i is not an integer.
        """
        top = case.top
        n = tuple(n)
        if len(n) != top:
            raise InvalidParametersError(f"n must have {top} entries, got {len(n)}")
        m = tuple(
            2 * sum((k - i) * n[k - 1] for k in range(i + 1, top + 1)) - case.delta(i) for i in range(0, top + 1)
        )
        if m[top] != 0:
            raise InconsistentSystemError(f"m_top = {m[top]} for n={n} in {case.to_json()}")
        hat_m = None
        if case.hatted:
            left, right = case.t_left, case.t_right
            hat = []
            for i in range(1, top + 1):
                shifted = m[i] - left.component(i) - right.component(i)
                if shifted % 2:
                    raise InconsistentSystemError(f"hat m_{i} is not an integer for n={n} in {case.to_json()}")
                hat.append(shifted // 2)
            hat_m = tuple(hat)
        return cls(n, m, hat_m)

    def binomial_entry(self, i: int) -> int:
        """The lower-right entry paired with n_i in the i-th binomial."""
        return self.hat_m[i - 1] if self.hat_m is not None else self.m[i]

    def quadratic(self) -> int:
        """mCm over m_1..m_{top-1} with C the Cartan matrix of type A."""
        inner = self.m[1:-1]
        if not inner:
            return 0
        total = inner[0] ** 2 + inner[-1] ** 2
        total += sum((x - y) ** 2 for x, y in zip(inner, inner[1:]))
        return total


@dataclass(frozen=True)
class Evaluation:
    """
    A fermionic value together with the places where a modified binomial
    took its (0, -1) value inside a nonzero term.

    Args:
        value: QPoly (finitized) or TruncatedSeries (character).
        firings: Tuples (n, i) of the species vector and the species index.
    """

    value: object
    firings: tuple = ()


def _exponent_eighths(case: FermionicCase, system: MSystem, from_species: int) -> int:
    right = case.t_right if case.hatted else None
    linear = 0
    if right is not None:
        linear = sum(system.n[i - 1] * right.component(i) for i in range(from_species, case.top + 1))
    return case.scale * (system.quadratic() - 2 * system.m[case.ell] + 4 * linear)


def _binomial_factor(case, n_i, x, binomial, budget):
    """Return (factor, fired) for the i-th binomial; budget None means exact."""
    modified = binomial == "case" and case.binomial == "modified"
    if n_i == 0 and x == -1:
        return (QPoly.one(), True) if modified else (QPoly.zero(), False)
    if n_i < 0 or x < 0:
        return QPoly.zero(), False
    if budget is None:
        if case.base_power == 1:
            return q_binomial(n_i, x), False
        return q_binomial_base(n_i, x, case.base_power), False
    return _q_binomial_truncated(n_i, x, budget // case.base_power).substitute_power(case.base_power), False


@functools.lru_cache(maxsize=None)
def _vectors_with_weight(total: int, top: int, first: int) -> tuple:
    """All (n_first, ..., n_top) >= 0 with sum of (k - first + 1) n_k == total."""
    if top < first:
        return ((),) if total == 0 else ()
    weight = top - first + 1
    found = []
    for count in range(total // weight, -1, -1):
        for rest in _vectors_with_weight(total - count * weight, top - 1, first):
            found.append(rest + (count,))
    return tuple(found)


def evaluate_finitized(case: FermionicCase, L, binomial: str = "case") -> Evaluation:
    """
    Evaluate a finitized fermionic sum exactly.

    The constraint m_0 = L (2L for the half-lattice family) fixes
    sum_k k n_k = (m_0 + Delta_0) / 2, so the sum runs over the partitions
    of that number into parts at most P - 1.

    Args:
        case: A FermionicCase of a finitized family.
        L: Path length; a half-integer for the half-lattice family.
        binomial: "case" for the row's binomials, "plain" to force plain ones.

    Returns:
        Evaluation with a QPoly value.
    """
    if case.family in _CHARACTERS:
        raise InvalidParametersError(f"{case.family.value} is not a finitized family")
    if binomial not in ("case", "plain"):
        raise InvalidParametersError(f"binomial must be 'case' or 'plain', got {binomial!r}")
    m0 = doubled(L, "L") if case.family is Family.HL_FINITIZED else int(L)
    if m0 < 0:
        raise InvalidParametersError(f"length L={L} is negative")
    total = QPoly.zero()
    firings = []
    weight = m0 + case.delta(0)
    if weight % 2:
        return Evaluation(total, ())
    for n in _vectors_with_weight(weight // 2, case.top, 1):
        system = MSystem.solve(case, n)
        term = QPoly.one()
        fired = []
        for i in range(1, case.top):
            factor, did_fire = _binomial_factor(case, n[i - 1], system.binomial_entry(i), binomial, None)
            if not factor:
                term = None
                break
            if did_fire:
                fired.append(i)
            term = term * factor
        if term is None:
            continue
        firings.extend((n, i) for i in fired)
        total = total + term.shift_eighths(_exponent_eighths(case, system, 1))
    return Evaluation(total, tuple(firings))


def melzer_finitized(case: FermionicCase, L: int, binomial: str = "case") -> QPoly:
    """The finitized ABF sum for X^{e,f}_{a,b}(L) with (e, f) fixed by the row."""
    _expect(case, Family.ABF_FINITIZED)
    return evaluate_finitized(case, L, binomial).value


def hl_finitized(case: FermionicCase, L, binomial: str = "case") -> QPoly:
    """The finitized half-lattice sum; L is a multiple of 1/2."""
    _expect(case, Family.HL_FINITIZED)
    return evaluate_finitized(case, L, binomial).value


def rabf_finitized(case: FermionicCase, L: int, binomial: str = "case") -> QPoly:
    """The finitized valley-restricted ABF sum, with base-q^2 binomials."""
    _expect(case, Family.RABF_FINITIZED)
    return evaluate_finitized(case, L, binomial).value


def _expect(case, family):
    if case.family is not family:
        raise InvalidParametersError(f"expected a {family.value} case, got {case.family.value}")


def character_prefactor(case: FermionicCase) -> QExponent:
    """The overall power of q in front of the character sum."""
    labels = dict(case.labels)
    if case.family is Family.ABF_CHARACTER:
        shift = labels["s"] - labels["r"]
        return QExponent(-2 * shift * (shift - 1))
    shift = labels["a"] - labels["r"]
    return QExponent(-2 * shift * (2 * shift - 1))


def evaluate_character(case: FermionicCase, order, binomial: str = "case") -> Evaluation:
    """
    Evaluate a character-level fermionic sum truncated at order.

    Shells of fixed sum_{k>=2} (k-1) n_k are summed in increasing order; the
    sum stops after two consecutive shells whose lower bound on the exponent
    lies beyond the order. The bound uses mCm >= m_1^2 and
    m_l^2 <= (P-2) mCm.

    Returns:
        Evaluation with a TruncatedSeries value.
    """
    if case.family not in _CHARACTERS:
        raise InvalidParametersError(f"{case.family.value} is not a character family")
    if binomial not in ("case", "plain"):
        raise InvalidParametersError(f"binomial must be 'case' or 'plain', got {binomial!r}")
    order = QExponent.of(order)
    prefactor = character_prefactor(case)
    budget = order.eighths - prefactor.eighths
    rank = case.top - 1
    root = isqrt(rank) + 1
    total = QPoly.zero()
    firings = []
    beyond = 0
    shell = 0
    while beyond < 2:
        m1 = 2 * shell - case.delta(1)
        bound = case.scale * (m1 * m1 - 2 * abs(m1) * root)
        if m1 >= 0 and m1 * m1 >= rank and bound > budget:
            beyond += 1
            shell += 1
            continue
        beyond = 0
        if m1 >= 0:
            for tail in _vectors_with_weight(shell, case.top, 2):
                n = (0,) + tail
                system = MSystem.solve(case, n)
                exponent = _exponent_eighths(case, system, 2)
                room = budget - exponent
                if room < 0:
                    continue
                first = system.binomial_entry(1)
                if first < 0:
                    continue
                term = _inv_pochhammer(first, room).poly
                fired = []
                for i in range(2, case.top):
                    factor, did_fire = _binomial_factor(case, n[i - 1], system.binomial_entry(i), binomial, room)
                    if not factor:
                        term = None
                        break
                    if did_fire:
                        fired.append(i)
                    term = term.mul_truncated(factor, room)
                if term is None:
                    continue
                firings.extend((n, i) for i in fired)
                total = total + term.shift_eighths(exponent)
        shell += 1
    logger.debug("character sum %s stopped at shell %d", case.to_json(), shell)
    value = total.truncate(QExponent(budget)).shift(prefactor)
    return Evaluation(value, tuple(firings))


def melzer_character(case: FermionicCase, order, binomial: str = "case") -> TruncatedSeries:
    """chi^{p,p+1}_{r,s} from the row's fermionic sum, truncated at order."""
    _expect(case, Family.ABF_CHARACTER)
    return evaluate_character(case, order, binomial).value


def hl_character(case: FermionicCase, order, binomial: str = "case") -> TruncatedSeries:
    """chi^{t,2t+1}_{r,2a} from the row's fermionic sum, truncated at order."""
    _expect(case, Family.HL_CHARACTER)
    return evaluate_character(case, order, binomial).value


def finitized_case_for(family: Family, P_or_t, a, b, e: int, f: int) -> FermionicCase:
    """The row of a finitized family whose flags are (e, f)."""
    case_id = next(row for row, flags in ROW_FLAGS.items() if flags == (e, f))
    maker = {
        Family.ABF_FINITIZED: FermionicCase.abf_finitized,
        Family.RABF_FINITIZED: FermionicCase.rabf_finitized,
        Family.HL_FINITIZED: FermionicCase.hl_finitized,
    }[family]
    return maker(P_or_t, a, b, case_id)


def hl_character_pair(t, a, b, order) -> TruncatedSeries:
    """
    chi^{t,2t+1}_{b,2a} + q^{a-b} chi^{t,2t+1}_{b-1,2a}, truncated at order,
    as the limit of Y^{1;t}_{a,b}(L); the half-lattice generating function
    q^{-L/2} H^{e,1}_{a,b}(L) tends to this pair times q^{(1/2)(a-b)(a-b-1/2)}.

    Raises:
        InvalidParametersError: b <= 1, or a, b outside 1 <= a <= t, b < t.
        StabilityError: The limit has not stabilized at L = 2*order.
    """
    t2 = doubled(t, "t")
    if b <= 1:
        raise InvalidParametersError(f"the character pair needs b > 1, got b={b}")
    if not (1 <= 2 * a <= t2 and 2 * b < t2):
        raise InvalidParametersError(f"need 1 <= a <= t and b < t, got t={Fraction(t2, 2)}, a={a}, b={b}")
    return y_limit(1, Fraction(t2, 2), a, b, order)
