"""
virasoro_paths.paths
~~~~~~~~~~~~~~~~~~~~
This module implements the lattice paths of virasoro_paths: ABF paths on the
integer lattice, half-lattice paths on the half-integer lattice, their vertex
words and weights, exhaustive enumeration, and the generating functions that
serve as ground truth for every closed form.

Half-integer quantities (heights, lengths, band tops) are stored doubled.

Created by the virasoro-paths developers on 2026-10-17.

:copyright: (c) 2026 by the virasoro-paths developers
:license: GPLv3, see LICENSE for more details
"""

import functools
import logging
from dataclasses import dataclass
from fractions import Fraction

from .base import InvalidParametersError, InvalidPathError
from .qpoly import QExponent, QPoly, substitute_power

logger = logging.getLogger(__name__)

NONSTRAIGHT = "N"
STRAIGHT = "S"


def doubled(value, name="value") -> int:
    """Return 2*value for a half-integer given as int, Fraction or "p/q" string."""
    scaled = Fraction(value) * 2
    if scaled.denominator != 1:
        raise InvalidParametersError(f"{name}={value} is not a multiple of 1/2")
    return scaled.numerator


@dataclass(frozen=True)
class VertexWord:
    """A word over {N, S}: N at peaks and valleys, S at straight vertices."""

    symbols: str

    def __post_init__(self):
        if not self.symbols or set(self.symbols) - {NONSTRAIGHT, STRAIGHT}:
            raise InvalidPathError(f"'{self.symbols}' is not a nonempty word over N, S")

    @property
    def L(self) -> int:
        return len(self.symbols) - 1

    def nonstraight_positions(self) -> tuple:
        return tuple(i for i, symbol in enumerate(self.symbols) if symbol == NONSTRAIGHT)

    def straight_count(self) -> int:
        return self.symbols.count(STRAIGHT)

    def __len__(self):
        return len(self.symbols)

    def __str__(self):
        return self.symbols


@dataclass(frozen=True)
class AbfPath:
    """
    An ABF path h_{-1}, h_0, ..., h_L, h_{L+1} in the band [1, p].

    The pre-segment flag e and post-segment flag f are read off the end
    heights: h_{-1} = a + 1 - 2e and h_{L+1} = b + 1 - 2f.
    """

    heights: tuple
    p: int

    def __post_init__(self):
        heights = self.heights
        if len(heights) < 3:
            raise InvalidPathError("a path needs h_{-1}, h_0 and h_{L+1}")
        for left, right in zip(heights, heights[1:]):
            if abs(right - left) != 1:
                raise InvalidPathError(f"step {left} -> {right} is not +-1 in {heights}")

    @property
    def L(self) -> int:
        return len(self.heights) - 3

    @property
    def a(self) -> int:
        return self.heights[1]

    @property
    def b(self) -> int:
        return self.heights[-2]

    @property
    def e(self) -> int:
        return (self.a + 1 - self.heights[0]) // 2

    @property
    def f(self) -> int:
        return (self.b + 1 - self.heights[-1]) // 2

    def height(self, i: int) -> int:
        """h_i for -1 <= i <= L+1."""
        return self.heights[i + 1]

    def within_band(self) -> bool:
        return all(1 <= h <= self.p for h in self.heights[1:-1])


@dataclass(frozen=True)
class HalfLatticePath:
    """
    A half-lattice path, stored as doubled heights 2h_x for
    x = -1/2, 0, 1/2, ..., L, L+1/2 and the doubled band top 2t.
    """

    doubled_heights: tuple
    t2: int

    def __post_init__(self):
        heights = self.doubled_heights
        if len(heights) < 3:
            raise InvalidPathError("a path needs h_{-1/2}, h_0 and h_{L+1/2}")
        for left, right in zip(heights, heights[1:]):
            if abs(right - left) != 1:
                raise InvalidPathError(f"step {left}/2 -> {right}/2 is not +-1/2")

    @property
    def L2(self) -> int:
        return len(self.doubled_heights) - 3

    @property
    def a2(self) -> int:
        return self.doubled_heights[1]

    @property
    def b2(self) -> int:
        return self.doubled_heights[-2]

    @property
    def e(self) -> int:
        return (self.a2 + 1 - self.doubled_heights[0]) // 2

    @property
    def f(self) -> int:
        return (self.b2 + 1 - self.doubled_heights[-1]) // 2

    @property
    def t(self) -> Fraction:
        return Fraction(self.t2, 2)

    @property
    def L(self) -> Fraction:
        return Fraction(self.L2, 2)

    def heights(self) -> tuple:
        return tuple(Fraction(h, 2) for h in self.doubled_heights)


def _word_of(heights) -> str:
    return "".join(
        NONSTRAIGHT if heights[i - 1] == heights[i + 1] else STRAIGHT for i in range(1, len(heights) - 1)
    )


def abf_weight(h: AbfPath) -> QExponent:
    """
    Return the weight (1/4) sum_{i=1}^{L} i |h_{i+1} - h_{i-1}|, that is, half
    the sum of the positions of the straight vertices.
    """
    eighths = 0
    for i in range(1, h.L + 1):
        eighths += 2 * i * abs(h.height(i + 1) - h.height(i - 1))
    return QExponent(eighths)


def vertex_word(h: AbfPath) -> VertexWord:
    return VertexWord(_word_of(h.heights))


def path_from_vertex_word(v: VertexWord, a: int, e: int, p: int | None = None) -> AbfPath:
    """
    Rebuild the path with h_0 = a and h_{-1} = a + 1 - 2e whose vertex word is v.

    Args:
        v: The vertex word.
        a: Start height.
        e: Pre-segment flag.
        p: (optional) Band height to attach; defaults to the largest height
           visited, so the band check is left to the caller.

    Returns:
        The AbfPath; its endpoint b and post-segment flag f follow from v.
    """
    heights = [a + 1 - 2 * e, a]
    step = 2 * e - 1
    for symbol in v.symbols:
        if symbol == NONSTRAIGHT:
            step = -step
        heights.append(heights[-1] + step)
    if p is None:
        p = max(heights[1:-1])
    return AbfPath(tuple(heights), p)


def weight_from_word(v: VertexWord) -> QExponent:
    """Return L(L+1)/4 - (1/2) sum of the positions of the N symbols."""
    L = v.L
    return QExponent(2 * L * (L + 1) - 4 * sum(v.nonstraight_positions()))


def straight_count(h: AbfPath) -> int:
    """m(h), the number of S symbols in the vertex word."""
    return vertex_word(h).straight_count()


def even_valley_count(h: AbfPath) -> int:
    """
    xi(h), the number of valleys at even height.

    The N positions j_0 < j_1 < ... alternate between valleys and peaks,
    starting with a valley when e = 0; the vertex at j has height = a + j mod 2.
    """
    positions = vertex_word(h).nonstraight_positions()
    return sum(1 for i, j in enumerate(positions) if i % 2 == h.e % 2 and j % 2 == h.a % 2)


def valley_heights(h: AbfPath) -> list:
    """Heights of the valleys of h at vertices 0..L, by direct inspection."""
    return [
        h.height(i)
        for i in range(0, h.L + 1)
        if h.height(i - 1) == h.height(i + 1) and h.height(i) < h.height(i - 1)
    ]


def with_flags(h: AbfPath, e: int, f: int) -> AbfPath:
    """The path with the same heights h_0..h_L as h and segment flags e, f."""
    if e not in (0, 1) or f not in (0, 1):
        raise InvalidParametersError(f"flags e={e}, f={f} must be 0 or 1")
    body = h.heights[1:-1]
    return AbfPath((body[0] + 1 - 2 * e,) + body + (body[-1] + 1 - 2 * f,), h.p)


def flag_quadruple(h: AbfPath) -> dict:
    """Map each (e, f) to the path sharing the heights h_0..h_L of h."""
    return {(e, f): with_flags(h, e, f) for e in (0, 1) for f in (0, 1)}


def _check_band(p, a, b, e, f, L):
    if p < 1 or not (1 <= a <= p and 1 <= b <= p):
        raise InvalidParametersError(f"endpoints a={a}, b={b} not in band [1, {p}]")
    if e not in (0, 1) or f not in (0, 1):
        raise InvalidParametersError(f"flags e={e}, f={f} must be 0 or 1")
    if L < 0:
        raise InvalidParametersError(f"length L={L} is negative")


@functools.lru_cache(maxsize=None)
def enumerate_abf(p: int, a: int, b: int, e: int, f: int, L: int) -> tuple:
    """
    Return every path of the set with band p, endpoints a, b, flags e, f and
    length L, in lexicographic order of heights.
    """
    _check_band(p, a, b, e, f, L)
    found = []
    heights = [a + 1 - 2 * e, a]

    def extend(remaining):
        current = heights[-1]
        if remaining == 0:
            if current == b:
                found.append(AbfPath(tuple(heights) + (b + 1 - 2 * f,), p))
            return
        for nxt in (current - 1, current + 1):
            if 1 <= nxt <= p and abs(nxt - b) <= remaining - 1:
                heights.append(nxt)
                extend(remaining - 1)
                heights.pop()

    extend(L)
    logger.debug("enumerate_abf(p=%d, a=%d, b=%d, e=%d, f=%d, L=%d): %d paths", p, a, b, e, f, L, len(found))
    return tuple(found)


def _gf(paths, weight) -> QPoly:
    terms = {}
    for h in paths:
        w = weight(h).eighths
        terms[w] = terms.get(w, 0) + 1
    return QPoly(terms)


def gf_abf(p, a, b, e, f, L) -> QPoly:
    """Sum of q^{w(h)} over the ABF path set."""
    return _gf(enumerate_abf(p, a, b, e, f, L), abf_weight)


def gf_abf_m(p, a, b, e, f, L, m) -> QPoly:
    """As gf_abf, restricted to paths with exactly m straight vertices."""
    paths = [h for h in enumerate_abf(p, a, b, e, f, L) if straight_count(h) == m]
    return _gf(paths, abf_weight)


def enumerate_abf_restricted(p, a, b, e, f, L) -> tuple:
    return tuple(h for h in enumerate_abf(p, a, b, e, f, L) if even_valley_count(h) == 0)


def gf_abf_restricted(p, a, b, e, f, L) -> QPoly:
    """Generating function of the valley-restricted paths (no valley at even height)."""
    return _gf(enumerate_abf_restricted(p, a, b, e, f, L), abf_weight)


def gf_abf_restricted_m(p, a, b, e, f, L, m) -> QPoly:
    paths = [h for h in enumerate_abf_restricted(p, a, b, e, f, L) if straight_count(h) == m]
    return _gf(paths, abf_weight)


def seed_value(p, a, b, e, f, L, m, restricted=False) -> QPoly | None:
    """
    Closed value of the (restricted) m-refined generating function at L = 0
    or m = 0, or None when neither applies.

    A path without straight vertices is the zigzag between c = a - e and c + 1,
    which needs both heights in the band once L > 0.
    """
    if L == 0:
        if restricted and e == 0 and f == 0 and a % 2 == 0:
            return QPoly.zero()
        return QPoly.one() if a == b and m == abs(e - f) else QPoly.zero()
    if m == 0:
        c = a - e
        if restricted and (c % 2 == 0):
            return QPoly.zero()
        fits = 1 <= c and c + 1 <= p
        return QPoly.one() if fits and c == b - f and (L + e + f) % 2 == 0 else QPoly.zero()
    return None


def half_weight(h: HalfLatticePath) -> QExponent:
    """Half the sum of x over straight vertices (x, h_x); j/4 at doubled index j."""
    heights = h.doubled_heights
    eighths = 0
    for j in range(1, h.L2 + 1):
        if heights[j] != heights[j + 2]:
            eighths += 2 * j
    return QExponent(eighths)


def half_valleys_allowed(h: HalfLatticePath) -> bool:
    """True when every valley at vertices 0..L lies at an integer height."""
    heights = h.doubled_heights
    for j in range(1, len(heights) - 1):
        if heights[j - 1] == heights[j + 1] and heights[j] < heights[j - 1] and heights[j] % 2:
            return False
    return True


@functools.lru_cache(maxsize=None)
def _enumerate_half_doubled(t2, a2, b2, e, f, L2) -> tuple:
    found = []
    if (L2 + a2 + b2) % 2:
        return ()
    heights = [a2 + 1 - 2 * e, a2]
    last = b2 + 1 - 2 * f

    def valley_ok(left, middle, right):
        return not (left == right and middle < left and middle % 2)

    def extend(remaining):
        current = heights[-1]
        if remaining == 0:
            if current == b2 and valley_ok(heights[-2], current, last):
                found.append(HalfLatticePath(tuple(heights) + (last,), t2))
            return
        for nxt in (current - 1, current + 1):
            if 2 <= nxt <= t2 and abs(nxt - b2) <= remaining - 1 and valley_ok(heights[-2], current, nxt):
                heights.append(nxt)
                extend(remaining - 1)
                heights.pop()

    extend(L2)
    return tuple(found)


def _check_half(t2, a2, b2, e, f, L2):
    if not (2 <= a2 <= t2 and 2 <= b2 <= t2):
        raise InvalidParametersError(f"endpoints a={a2}/2, b={b2}/2 not in band [1, {t2}/2]")
    if e not in (0, 1) or f not in (0, 1):
        raise InvalidParametersError(f"flags e={e}, f={f} must be 0 or 1")
    if L2 < 0:
        raise InvalidParametersError(f"length L={L2}/2 is negative")


def enumerate_half(t, a, b, e, f, L) -> tuple:
    """
    Return every valley-restricted half-lattice path with band top t,
    endpoints a, b, flags e, f and length L (all in (1/2)Z).

    Unreachable endpoints (L + a + b not an integer) give the empty tuple.
    """
    t2, a2, b2, L2 = doubled(t, "t"), doubled(a, "a"), doubled(b, "b"), doubled(L, "L")
    _check_half(t2, a2, b2, e, f, L2)
    return _enumerate_half_doubled(t2, a2, b2, e, f, L2)


def gf_half(t, a, b, e, f, L) -> QPoly:
    return _gf(enumerate_half(t, a, b, e, f, L), half_weight)


def restricted_parameters(t, a, b, L) -> tuple:
    """Map (t, a, b, L) of a half-lattice set to (p, a', b', L') of the ABF set."""
    return doubled(t, "t") - 1, doubled(a, "a") - 1, doubled(b, "b") - 1, doubled(L, "L")


def half_from_restricted(p_abf_gf: QPoly) -> QPoly:
    """Apply q -> q^{1/2} to a valley-restricted ABF generating function."""
    return substitute_power(p_abf_gf, Fraction(1, 2))


def gf_half_via_restricted(t, a, b, e, f, L) -> QPoly:
    p, a_abf, b_abf, L_abf = restricted_parameters(t, a, b, L)
    return half_from_restricted(gf_abf_restricted(p, a_abf, b_abf, e, f, L_abf))


def dump_paths(paths) -> str:
    """
    Render paths one per line as "e f w_num/8 h_0 h_1 ... h_L", the weight
    given as its numerator over 8.
    """
    lines = []
    for h in paths:
        if isinstance(h, HalfLatticePath):
            weight = half_weight(h)
            body = h.heights()[1:-1]
        else:
            weight = abf_weight(h)
            body = h.heights[1:-1]
        heights = " ".join(str(value) for value in body)
        lines.append(f"{h.e} {h.f} {weight.eighths}/8 {heights}")
    return "\n".join(lines) + ("\n" if lines else "")
