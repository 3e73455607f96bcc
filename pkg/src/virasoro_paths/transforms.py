"""
virasoro_paths.transforms
~~~~~~~~~~~~~~~~~~~~~~~~~
This module implements the path transforms of virasoro_paths: the band
dilation C1, particle insertion C2(n), particle waves C3(lambda), their
composite C(n, lambda) and its inverse decomposition, together with the
checks of the bijections and weight laws they satisfy.

All transforms act on vertex words; heights are rebuilt only to validate
band membership and to hand back an AbfPath.

Created by the virasoro-paths developers on 2026-10-17.

:copyright: (c) 2026 by the virasoro-paths developers
:license: GPLv3, see LICENSE for more details
"""

import functools
import logging
import re
from dataclasses import dataclass
from fractions import Fraction

from .base import DecompositionError, InvalidParametersError, Suite, Task, TransformError, UndefinedTransformError
from .paths import (
    NONSTRAIGHT,
    STRAIGHT,
    AbfPath,
    VertexWord,
    abf_weight,
    enumerate_abf,
    enumerate_abf_restricted,
    even_valley_count,
    gf_abf_m,
    gf_abf_restricted_m,
    path_from_vertex_word,
    straight_count,
    valley_heights,
    vertex_word,
)
from .qpoly import QPoly
from .qspecial import q_binomial, q_binomial_base

logger = logging.getLogger(__name__)

_RUNS = re.compile(f"{NONSTRAIGHT}+")


@dataclass(frozen=True)
class Partition:
    """A weakly decreasing sequence of nonnegative parts; zero parts are kept."""

    parts: tuple = ()

    def __post_init__(self):
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        if any(part < 0 for part in parts):
            raise InvalidParametersError(f"partition {parts} has a negative part")
        if any(left < right for left, right in zip(parts, parts[1:])):
            raise InvalidParametersError(f"partition {parts} is not weakly decreasing")

    @classmethod
    def of(cls, parts) -> "Partition":
        """Build from parts in any order."""
        return cls(tuple(sorted(parts, reverse=True)))

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def largest(self) -> int:
        return self.parts[0] if self.parts else 0

    def nonzero(self) -> tuple:
        return tuple(part for part in self.parts if part)

    def padded(self, n: int) -> "Partition":
        """The same partition written with exactly n parts."""
        nonzero = self.nonzero()
        if len(nonzero) > n:
            raise InvalidParametersError(f"partition {self.parts} has more than {n} nonzero parts")
        return Partition(nonzero + (0,) * (n - len(nonzero)))

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def to_json(self):
        return list(self.parts)


@dataclass(frozen=True)
class CDecomposition:
    """
    The triple (base, n, lambda_) with c_transform(base, n, lambda_) equal to
    the decomposed path; lambda_ has exactly n parts.
    """

    base: AbfPath
    n: int
    lambda_: Partition

    def __post_init__(self):
        if len(self.lambda_) != self.n:
            raise DecompositionError(f"excitation partition {self.lambda_.parts} does not have {self.n} parts")
        if self.lambda_.largest > self.base.L:
            raise DecompositionError(f"excitation {self.lambda_.largest} exceeds base length {self.base.L}")


@functools.lru_cache(maxsize=None)
def _box(n: int, m: int) -> tuple:
    if n == 0:
        return ((),)
    if m < 0:
        return ()
    found = []
    for first in range(m, -1, -1):
        for rest in _box(n - 1, first):
            found.append((first,) + rest)
    return tuple(found)


def partitions_in_box(n: int, m: int) -> list:
    """
    Return P_{n,m}: partitions with n parts (zeros allowed), each at most m,
    in decreasing lexicographic order.

    P_{0,m} holds only the empty partition for every m, and P_{n,m} is empty
    when n > 0 and m < 0.
    """
    if n < 0:
        raise InvalidParametersError(f"number of parts n={n} is negative")
    return [Partition(parts) for parts in _box(n, m)]


def _to_path(word: str, a: int, e: int, p: int) -> AbfPath:
    h = path_from_vertex_word(VertexWord(word), a, e, p)
    if not h.within_band():
        raise TransformError(f"word {word} from a={a}, e={e} leaves the band [1, {p}]")
    return h


def c1_transform(h: AbfPath) -> AbfPath:
    """
    Dilate h into the band p+1: the i-th N symbol of the vertex word moves
    from position j_i to j_i + i and the start height becomes a + e.

    Args:
        h: An ABF path; the case L = 0 with e != f is undefined.

    Returns:
        The path of length 2L - m in band p+1, ending at b + f, with L
        straight vertices and weight w(h) + L(L - m)/2.

    Raises:
        UndefinedTransformError: L = 0 and e != f.
    """
    if h.L == 0 and h.e != h.f:
        raise UndefinedTransformError("C1 is not defined for a zero-length path with e != f")
    positions = vertex_word(h).nonstraight_positions()
    k = len(positions) - 1
    symbols = [STRAIGHT] * (h.L + k + 1)
    for i, j in enumerate(positions):
        symbols[j + i] = NONSTRAIGHT
    return _to_path("".join(symbols), h.a + h.e, h.e, h.p + 1)


def c2_insert(h: AbfPath, n: int) -> AbfPath:
    """Append n particles, i.e. 2n N symbols, at the right end of h."""
    if n < 0:
        raise InvalidParametersError(f"particle count n={n} is negative")
    if n == 0:
        return h
    return _to_path(vertex_word(h).symbols + NONSTRAIGHT * (2 * n), h.a, h.e, h.p)


def _split_particles(word: str) -> tuple:
    run = len(word) - len(word.rstrip(NONSTRAIGHT))
    n = run // 2
    base = word[: len(word) - 2 * n]
    return base, n


def c3_wave(h: AbfPath, lambda_: Partition) -> AbfPath:
    """
    Move the particles appended by c2_insert leftwards: the i-th particle
    ends up as an NN pair with exactly lambda_i S symbols to its right.

    Args:
        h: A path whose word is a particle-free word (no NN) followed by
           2n N symbols.
        lambda_: Partition with at most n nonzero parts and largest part at
                 most m(h).

    Returns:
        The path with the same length, endpoints and m, and weight w(h) + |lambda_|.

    Raises:
        TransformError: lambda_ is out of range, or h does not have that shape.
    """
    word = vertex_word(h).symbols
    base, n = _split_particles(word)
    if NONSTRAIGHT * 2 in base:
        raise TransformError(f"word {word} is not a particle-free word with appended particles")
    if len(lambda_.nonzero()) > n:
        raise TransformError(f"{len(lambda_.nonzero())} excitations for {n} particles")
    m = base.count(STRAIGHT)
    if lambda_.largest > m:
        raise TransformError(f"excitation {lambda_.largest} exceeds m={m}")
    if not lambda_.nonzero():
        return h
    # pairs[k]: particles with exactly k S symbols to their right
    pairs = [0] * (m + 1)
    for part in lambda_.padded(n):
        pairs[part] += 1
    pieces = []
    seen = 0
    for symbol in base:
        if symbol == STRAIGHT:
            pieces.append(NONSTRAIGHT * 2 * pairs[m - seen])
            seen += 1
        pieces.append(symbol)
    pieces.append(NONSTRAIGHT * 2 * pairs[0])
    return _to_path("".join(pieces), h.a, h.e, h.p)


def c_transform(h: AbfPath, n: int, lambda_: Partition) -> AbfPath:
    """The C(n, lambda) transform: C1, then C2(n), then C3(lambda)."""
    return c3_wave(c2_insert(c1_transform(h), n), lambda_)


def c_decompose(h_prime: AbfPath, expected_m_of_base: int | None = None) -> CDecomposition:
    """
    Invert c_transform by stripping NN pairs and undoing the dilation.

    Each maximal run of r N symbols contributes r // 2 particles, each with
    the number of S symbols to the right of the run as its excitation, and
    is reduced to r % 2 symbols. In the remaining word the i-th N moves back
    from j_i to j_i - i.

    Args:
        h_prime: A path in band p' = p + 1.
        expected_m_of_base: (optional) Required straight count of the base.

    Returns:
        CDecomposition(base, n, lambda_).

    Raises:
        DecompositionError: h_prime is not in the image of c_transform.
    """
    word = vertex_word(h_prime).symbols
    excitations = []
    pieces = []
    last = 0
    for run in _RUNS.finditer(word):
        pieces.append(word[last : run.start()])
        length = run.end() - run.start()
        right = word[run.end() :].count(STRAIGHT)
        excitations.extend([right] * (length // 2))
        pieces.append(NONSTRAIGHT * (length % 2))
        last = run.end()
    pieces.append(word[last:])
    dilated = "".join(pieces)
    n = len(excitations)
    positions = [j for j, symbol in enumerate(dilated) if symbol == NONSTRAIGHT]
    k = len(positions) - 1
    base_L = len(dilated) - 1 - k
    if base_L < 0 or (base_L == 0 and k == -1):
        raise DecompositionError(f"word {word} has no base path")
    symbols = [STRAIGHT] * (base_L + 1)
    for i, j in enumerate(positions):
        symbols[j - i] = NONSTRAIGHT
    e = h_prime.e
    base_word = VertexWord("".join(symbols))
    base = path_from_vertex_word(base_word, h_prime.a - e, e, h_prime.p - 1)
    if not base.within_band() or base.b != h_prime.b - h_prime.f:
        raise DecompositionError(f"word {word} does not come from a path in band {h_prime.p - 1}")
    if expected_m_of_base is not None and straight_count(base) != expected_m_of_base:
        raise DecompositionError(f"base m={straight_count(base)}, expected {expected_m_of_base}")
    return CDecomposition(base, n, Partition(tuple(excitations)))


def forward_move(word: VertexWord, index: int) -> VertexWord:
    """Exchange the SNN starting at index for NNS."""
    symbols = word.symbols
    if symbols[index : index + 3] != STRAIGHT + NONSTRAIGHT * 2:
        raise TransformError(f"no SNN at position {index} of {symbols}")
    return VertexWord(symbols[:index] + NONSTRAIGHT * 2 + STRAIGHT + symbols[index + 3 :])


def refined_parities(a: int, b: int) -> tuple:
    """(T^L, T^R) = ((a + 1) mod 2, (b + 1) mod 2)."""
    return (a + 1) % 2, (b + 1) % 2


def _shifted(poly: QPoly, L: int, m: int) -> QPoly:
    return poly.shift(Fraction(L * (L - m), 2))


class TransformChecks(Suite):
    """
    Checks of the transform laws, the C-transform bijections and the
    generating-function identities they imply.
    """

    BASE_NAME = "bijection."
    IDENTITIES = {
        "c1": "dilation_laws",
        "c2": "insertion_laws",
        "c3": "wave_laws",
        "move": "single_move",
        "round_trip": "decompose_after_transform",
        "refined": "refined_bijection",
        "refined_parity": "refined_excitation_parity",
        "refined_weight": "refined_weight_law",
        "gf": "dilated_generating_function",
        "gf_restricted": "restricted_dilated_generating_function",
    }

    def dilation_laws(self, p, L_values):
        """Length 2L - m, endpoint b + f, m = L and the weight shift of C1."""
        records = []
        for L in L_values:
            for a in range(1, p + 1):
                for b in range(1, p + 1):
                    for e in (0, 1):
                        for f in (0, 1):
                            if L == 0 and e != f:
                                continue
                            for h in enumerate_abf(p, a, b, e, f, L):
                                m = straight_count(h)
                                image = c1_transform(h)
                                ok = (
                                    image.L == 2 * L - m
                                    and image.b == b + f
                                    and image.f == f
                                    and straight_count(image) == L
                                    and abf_weight(image).eighths == abf_weight(h).eighths + 4 * L * (L - m)
                                )
                                indices = self._indices(p=p, L=L, heights=list(h.heights))
                                records.append(self._check("c1", indices, ok, True, passed=ok))
        self._set_attrs_to_values(records)
        return records

    def insertion_laws(self, p, L_values, n_values):
        """
        For C2(n) on C1 images: length +2n with m and weight unchanged; then
        C3(lambda) for every lambda with lambda_1 <= m keeps length and m and
        adds |lambda| to the weight.
        """
        records = []
        for L in L_values:
            for h in _all_paths(p, L):
                image = c1_transform(h)
                m = straight_count(image)
                for n in n_values:
                    inserted = c2_insert(image, n)
                    ok = (
                        inserted.L == image.L + 2 * n
                        and straight_count(inserted) == m
                        and abf_weight(inserted) == abf_weight(image)
                    )
                    indices = self._indices(p=p, L=L, n=n, heights=list(h.heights))
                    records.append(self._check("c2", indices, ok, True, passed=ok))
                    for lambda_ in partitions_in_box(n, m):
                        waved = c3_wave(inserted, lambda_)
                        ok = (
                            waved.L == inserted.L
                            and straight_count(waved) == m
                            and waved.b == inserted.b
                            and abf_weight(waved).eighths == abf_weight(image).eighths + 8 * lambda_.size
                        )
                        wave_indices = self._indices(p=p, L=L, n=n, heights=list(h.heights), lambda_=lambda_)
                        records.append(self._check("c3", wave_indices, ok, True, passed=ok))
        self._set_attrs_to_values(records)
        return records

    def moves(self, p, L_values, n_values):
        """Every single move adds 1 to the weight, keeps m and flips one valley parity."""
        records = []
        for L in L_values:
            for h in _all_paths(p, L):
                image = c1_transform(h)
                for n in n_values:
                    if n == 0:
                        continue
                    before = c2_insert(image, n)
                    word = vertex_word(before)
                    for index in range(len(word) - 2):
                        if word.symbols[index : index + 3] != STRAIGHT + NONSTRAIGHT * 2:
                            continue
                        after = path_from_vertex_word(forward_move(word, index), before.a, before.e)
                        old_valleys, new_valleys = valley_heights(before), valley_heights(after)
                        flips = sum(1 for x, y in zip(old_valleys, new_valleys) if (x - y) % 2)
                        ok = (
                            abf_weight(after).eighths == abf_weight(before).eighths + 8
                            and straight_count(after) == straight_count(before)
                            and len(old_valleys) == len(new_valleys)
                            and flips == 1
                        )
                        indices = self._indices(p=p, word=word.symbols, index=index)
                        records.append(self._check("move", indices, ok, True, passed=ok))
        self._set_attrs_to_values(records)
        return records

    def round_trip(self, p, L_values, n_values):
        """c_decompose(c_transform(h, n, lambda)) == (h, n, lambda)."""
        records = []
        for L in L_values:
            for h in _all_paths(p, L):
                for n in n_values:
                    for lambda_ in partitions_in_box(n, L):
                        image = c_transform(h, n, lambda_)
                        try:
                            triple = c_decompose(image, straight_count(h))
                            ok = triple.base == h and triple.n == n and triple.lambda_ == lambda_
                        except DecompositionError:
                            ok = False
                        indices = self._indices(p=p, L=L, n=n, heights=list(h.heights), lambda_=lambda_)
                        records.append(self._check("round_trip", indices, ok, True, passed=ok))
        self._set_attrs_to_values(records)
        return records

    def refined_bijection(self, p, a, b, e, f, L, L_prime):
        """
        Valley-restricted images in band p+1 with m = L correspond exactly to
        valley-restricted bases with m = 2L - L' + 2n together with
        mu in P_{n,(L-T^L-T^R)/2}, through lambda_i = 2 mu_i + T^R, and the
        weight grows by L(L-m)/2 + 2|mu| + n T^R.
        """
        if L == 0 and e != f:
            raise UndefinedTransformError("the C-transform is not defined for L = 0 and e != f")
        t_left, t_right = refined_parities(a, b)
        indices = self._indices(p=p, a=a, b=b, e=e, f=f, L=L, L_prime=L_prime)
        records = []
        images = [
            h for h in enumerate_abf_restricted(p + 1, a + e, b + f, e, f, L_prime) if straight_count(h) == L
        ]
        parity_ok = True
        weight_ok = True
        for image in images:
            try:
                triple = c_decompose(image)
            except DecompositionError:
                parity_ok = weight_ok = False
                continue
            m = straight_count(triple.base)
            if any((part - t_right) % 2 for part in triple.lambda_) or even_valley_count(triple.base):
                parity_ok = False
                continue
            mu_size = (triple.lambda_.size - triple.n * t_right) // 2
            box = (L - t_left - t_right) // 2
            if any((part - t_right) // 2 > box for part in triple.lambda_):
                parity_ok = False
            expected = abf_weight(triple.base).eighths + 4 * L * (L - m) + 8 * (2 * mu_size + triple.n * t_right)
            if abf_weight(image).eighths != expected:
                weight_ok = False
        records.append(self._check("refined_parity", indices, parity_ok, True, passed=parity_ok))
        records.append(self._check("refined_weight", indices, weight_ok, True, passed=weight_ok))

        produced = []
        if (L - t_left - t_right) % 2 == 0:
            box = (L - t_left - t_right) // 2
            for n, m in _particle_counts(L, L_prime):
                for h in enumerate_abf_restricted(p, a, b, e, f, L):
                    if straight_count(h) != m:
                        continue
                    for mu in partitions_in_box(n, box):
                        lambda_ = Partition(tuple(2 * part + t_right for part in mu))
                        produced.append(c_transform(h, n, lambda_))
        covered = len(produced) == len(set(produced)) and set(produced) == set(images)
        records.append(self._check("refined", indices, len(produced), len(images), passed=covered))
        self._set_attrs_to_values(records)
        return records

    def generating_functions(self, p, L_values, L_prime_values):
        """
        X^{p+1}_{a+e,b+f}(L', L) = sum_n q^{L(L-m)/2} [n+L; n] X^p_{a,b}(L, m)
        with m = 2L - L' + 2n.
        """
        records = []
        for a, b, e, f in _endpoints(p):
            for L in L_values:
                for L_prime in L_prime_values:
                    lhs = gf_abf_m(p + 1, a + e, b + f, e, f, L_prime, L)
                    rhs = QPoly.zero()
                    for n, m in _particle_counts(L, L_prime):
                        rhs = rhs + _shifted(q_binomial(n, L) * gf_abf_m(p, a, b, e, f, L, m), L, m)
                    indices = self._indices(p=p, a=a, b=b, e=e, f=f, L=L, L_prime=L_prime)
                    records.append(self._check("gf", indices, lhs, rhs))
        self._set_attrs_to_values(records)
        return records

    def restricted_generating_functions(self, p, L_values, L_prime_values):
        """
        The valley-restricted analogue, with q^{n T^R} and the modified
        base-q^2 binomial [n + (L-T^L-T^R)/2; n]'.
        """
        records = []
        for a, b, e, f in _endpoints(p):
            t_left, t_right = refined_parities(a, b)
            for L in L_values:
                for L_prime in L_prime_values:
                    lhs = gf_abf_restricted_m(p + 1, a + e, b + f, e, f, L_prime, L)
                    rhs = QPoly.zero()
                    if (L - t_left - t_right) % 2 == 0:
                        box = (L - t_left - t_right) // 2
                        for n, m in _particle_counts(L, L_prime):
                            term = q_binomial_base(n, box, 2, modified=True) * gf_abf_restricted_m(p, a, b, e, f, L, m)
                            rhs = rhs + _shifted(term, L, m).shift(n * t_right)
                    indices = self._indices(p=p, a=a, b=b, e=e, f=f, L=L, L_prime=L_prime)
                    records.append(self._check("gf_restricted", indices, lhs, rhs))
        self._set_attrs_to_values(records)
        return records

    def tasks(self, config):
        short = list(range(0, config.length(5) + 1))
        for p in config.p_range((2, 3)):
            yield Task("TransformChecks", "dilation_laws", {"p": p, "L_values": short})
            yield Task("TransformChecks", "insertion_laws", {"p": p, "L_values": short, "n_values": [0, 1, 2, 3]})
            yield Task("TransformChecks", "moves", {"p": p, "L_values": short, "n_values": [1, 2]})
            yield Task("TransformChecks", "round_trip", {"p": p, "L_values": short, "n_values": [0, 1, 2, 3]})
        lengths = list(range(0, config.length(8) + 1))
        for p in config.p_range((2, 3, 4)):
            yield Task("TransformChecks", "generating_functions", {"p": p, "L_values": lengths, "L_prime_values": lengths})
            yield Task(
                "TransformChecks",
                "restricted_generating_functions",
                {"p": p, "L_values": lengths, "L_prime_values": lengths},
            )
        for p in config.p_range((2, 3)):
            for a, b, e, f in _endpoints(p):
                if not config.accepts(a=a, b=b, e=e, f=f):
                    continue
                for L in short:
                    if L == 0 and e != f:
                        continue
                    for L_prime in range(0, 2 * L + 5):
                        kwargs = {"p": p, "a": a, "b": b, "e": e, "f": f, "L": L, "L_prime": L_prime}
                        yield Task("TransformChecks", "refined_bijection", kwargs)


def _endpoints(p):
    return [(a, b, e, f) for a in range(1, p + 1) for b in range(1, p + 1) for e in (0, 1) for f in (0, 1)]


def _all_paths(p, L):
    paths = []
    for a, b, e, f in _endpoints(p):
        if L == 0 and e != f:
            continue
        paths.extend(enumerate_abf(p, a, b, e, f, L))
    return paths


def _particle_counts(L, L_prime):
    # m = 2L - L' + 2n runs over 0..L+1
    n = max(0, -((2 * L - L_prime) // 2))
    while 2 * L - L_prime + 2 * n <= L + 1:
        m = 2 * L - L_prime + 2 * n
        if m >= 0:
            yield n, m
        n += 1


def refined_bijection_check(p, a, b, e, f, L, L_prime) -> list:
    """
    Check the valley-restricted C-transform bijection between band p+1 paths
    of length L' with L straight vertices and band p bases of length L.

    Returns:
        The CheckRecords for the excitation parity, the weight law and the
        exact correspondence of the two sets.
    """
    suite = TransformChecks()
    return suite.refined_bijection(p, a, b, e, f, L, L_prime)
