"""Directed q-nary graphs (de Bruijn graphs) and their primitive orbits.

The order-m graph over q letters has q^m vertices, the words of length m,
and q^(m+1) edges, the words of length m+1; edge a_1..a_(m+1) runs from
a_1..a_m to a_2..a_(m+1).  Vertex and edge indices are the base-q values
of their words, most significant letter first, so origin(e) = e // q and
terminus(e) = e mod q^m.

A cyclic word of length l traces a closed walk whose edges are its l
windows of m+1 consecutive letters, wrapping cyclically (also when l <= m,
e.g. the word "0" traces the loop edge 00..0).  Primitive periodic orbits,
closed walks that are not repetitions of shorter ones, correspond
one-to-one with Lyndon words.  A primitive pseudo orbit is a set of
distinct primitive orbits; concatenating its words in strictly decreasing
order puts these sets in bijection with the words whose standard
decomposition has no repeated factor.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass

from .words import (
    DEFAULT_ENUMERATION_BUDGET,
    BudgetExceededError,
    Word,
    count_strictly_decreasing,
    is_lyndon,
    lyndon_words,
)


def _decode(value: int, length: int, q: int) -> tuple[int, ...]:
    letters = [0] * length
    for pos in range(length - 1, -1, -1):
        value, letters[pos] = divmod(value, q)
    return tuple(letters)


def _encode(letters, q: int) -> int:
    value = 0
    for a in letters:
        value = value * q + a
    return value


@dataclass(frozen=True)
class QNaryGraph:
    """Directed graph on the length-m words over q letters."""

    q: int
    m: int

    def __post_init__(self):
        if self.q < 2:
            raise ValueError(f"graph alphabet size must be at least 2, got {self.q}")
        if self.m < 1:
            raise ValueError(f"graph order must be at least 1, got {self.m}")

    @property
    def num_vertices(self) -> int:
        return self.q**self.m

    @property
    def num_edges(self) -> int:
        return self.q ** (self.m + 1)

    def edge_origin(self, e: int) -> int:
        return e // self.q

    def edge_terminus(self, e: int) -> int:
        return e % self.num_vertices

    def vertex_word(self, v: int) -> Word:
        return Word(_decode(v, self.m, self.q), self.q)

    def edge_word(self, e: int) -> Word:
        return Word(_decode(e, self.m + 1, self.q), self.q)

    def vertex_index(self, w: Word) -> int:
        if w.q != self.q or len(w) != self.m:
            raise ValueError(f"expected a length-{self.m} word over {self.q} letters")
        return _encode(w.letters, self.q)

    def edge_index(self, w: Word) -> int:
        if w.q != self.q or len(w) != self.m + 1:
            raise ValueError(f"expected a length-{self.m + 1} word over {self.q} letters")
        return _encode(w.letters, self.q)

    def out_edges(self, v: int) -> tuple[int, ...]:
        return tuple(range(v * self.q, (v + 1) * self.q))

    def in_edges(self, v: int) -> tuple[int, ...]:
        return tuple(b * self.num_vertices + v for b in range(self.q))


def build_graph(q: int, m: int, budget: int = DEFAULT_ENUMERATION_BUDGET) -> QNaryGraph:
    """Construct the order-m q-nary graph, guarding the edge count."""
    if q < 2:
        raise ValueError(f"graph alphabet size must be at least 2, got {q}")
    if m < 1:
        raise ValueError(f"graph order must be at least 1, got {m}")
    edges = q ** (m + 1)
    if edges > budget:
        raise BudgetExceededError(f"{edges} edges exceed budget {budget}")
    return QNaryGraph(q, m)


@dataclass(frozen=True)
class PeriodicOrbit:
    """Primitive closed walk, canonicalized by its Lyndon representative."""

    word: Word

    def __post_init__(self):
        if len(self.word) == 0 or not is_lyndon(self.word):
            raise ValueError(f"orbit representative {self.word} is not a Lyndon word")

    @property
    def topological_length(self) -> int:
        return len(self.word)

    def _windows(self, width: int) -> tuple[int, ...]:
        letters, q = self.word.letters, self.word.q
        l = len(letters)
        out = []
        for start in range(l):
            v = 0
            for off in range(width):
                v = v * q + letters[(start + off) % l]
            out.append(v)
        return tuple(out)

    def vertex_sequence(self, m: int) -> tuple[int, ...]:
        """The l vertices visited on the order-m graph, one per edge step."""
        return self._windows(m)

    def edge_sequence(self, m: int) -> tuple[int, ...]:
        """The l edge indices of the closed walk on the order-m graph."""
        return self._windows(m + 1)

    def __str__(self):
        return str(self.word)


def orbit_from_word(w: Word, m: int) -> PeriodicOrbit:
    """Wrap a Lyndon word as the primitive orbit it traces on an order-m graph.

    The orbit itself does not depend on m; `edge_sequence(m)` realizes it on
    any order.  Non-Lyndon input is rejected, callers canonicalize first.
    """
    if m < 1:
        raise ValueError(f"graph order must be at least 1, got {m}")
    if len(w) == 0 or not is_lyndon(w):
        raise ValueError(f"{w} is not a Lyndon word; canonicalize the rotation first")
    return PeriodicOrbit(w)


def primitive_periodic_orbits(q: int, l: int) -> list[PeriodicOrbit]:
    """One orbit per Lyndon word of length l, in dictionary order."""
    return [PeriodicOrbit(w) for w in lyndon_words(q, l)]


@dataclass(frozen=True)
class PseudoOrbit:
    """A set of distinct primitive orbits, stored in strictly decreasing order."""

    orbits: tuple[PeriodicOrbit, ...]
    q: int

    def __post_init__(self):
        object.__setattr__(self, "orbits", tuple(self.orbits))
        for o in self.orbits:
            if o.word.q != self.q:
                raise ValueError("orbit alphabet size differs from pseudo orbit")
        for a, b in zip(self.orbits, self.orbits[1:]):
            if not a.word > b.word:
                raise ValueError("orbits must be distinct and strictly decreasing")

    @classmethod
    def from_orbits(cls, orbits, q: int) -> PseudoOrbit:
        ordered = sorted(orbits, key=lambda o: o.word.letters, reverse=True)
        return cls(tuple(ordered), q)

    @property
    def num_orbits(self) -> int:
        return len(self.orbits)

    @property
    def total_length(self) -> int:
        return sum(o.topological_length for o in self.orbits)

    @property
    def words(self) -> tuple[Word, ...]:
        return tuple(o.word for o in self.orbits)

    def concatenated(self) -> Word:
        letters = tuple(a for o in self.orbits for a in o.word.letters)
        return Word(letters, self.q)

    def __str__(self):
        # comma-separated words render with commas above q = 10, so switch
        # the set separator to keep the display unambiguous
        sep = "," if self.q <= 10 else ";"
        return "{" + sep.join(str(o.word) for o in self.orbits) + "}"


def primitive_pseudo_orbits(
    q: int, n: int, budget: int = DEFAULT_ENUMERATION_BUDGET
) -> list[PseudoOrbit]:
    """All primitive pseudo orbits of total topological length n.

    Emitted sorted by the dictionary order of their concatenated strictly
    decreasing word; n = 0 yields the single empty pseudo orbit.  The
    enumeration depends only on (q, n), not on the graph order.
    """
    if q < 1:
        raise ValueError(f"alphabet size must be at least 1, got {q}")
    if n < 0:
        raise ValueError(f"total length must be non-negative, got {n}")
    expected = count_strictly_decreasing(q, n)
    if expected > budget:
        raise BudgetExceededError(
            f"{expected} pseudo orbits of length {n} exceed budget {budget}"
        )
    return list(_pseudo_orbits(q, n))


@functools.lru_cache(maxsize=None)
def _pseudo_orbits(q: int, n: int) -> tuple[PseudoOrbit, ...]:
    if n == 0:
        return (PseudoOrbit((), q),)
    pools = {l: lyndon_words(q, l) for l in range(1, n + 1)}

    # Profiles: how many words of each length go into a subset. Words of equal
    # length are automatically distinct, so each profile contributes a product
    # of binomial choices.
    profiles: list[tuple[tuple[int, int], ...]] = []

    def choose(l: int, remaining: int, acc: list[tuple[int, int]]):
        if remaining == 0:
            profiles.append(tuple(acc))
            return
        if l == 0:
            return
        for j in range(min(len(pools[l]), remaining // l) + 1):
            if j:
                acc.append((l, j))
                choose(l - 1, remaining - j * l, acc)
                acc.pop()
            else:
                choose(l - 1, remaining, acc)

    choose(n, n, [])

    out = []
    for profile in profiles:
        pick_lists = [itertools.combinations(pools[l], j) for l, j in profile]
        for picks in itertools.product(*pick_lists):
            chosen = [w for group in picks for w in group]
            chosen.sort(key=lambda w: w.letters, reverse=True)
            out.append(PseudoOrbit(tuple(PeriodicOrbit(w) for w in chosen), q))
    out.sort(key=lambda po: po.concatenated().letters)
    return tuple(out)


@dataclass(frozen=True)
class EdgeMultiplicityVector:
    """Per-edge traversal counts of a pseudo orbit on one graph."""

    counts: tuple[int, ...]

    @property
    def total(self) -> int:
        return sum(self.counts)


def edge_multiplicities(po: PseudoOrbit, graph: QNaryGraph) -> EdgeMultiplicityVector:
    """How many times the pseudo orbit traverses each edge of the graph."""
    if po.q != graph.q:
        raise ValueError("pseudo orbit and graph alphabet sizes differ")
    counts = [0] * graph.num_edges
    for orbit in po.orbits:
        for e in orbit.edge_sequence(graph.m):
            counts[e] += 1
    return EdgeMultiplicityVector(tuple(counts))
