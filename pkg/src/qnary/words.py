"""Words over a finite alphabet, Lyndon words, and standard decompositions.

Letters are the integers 0..q-1 and words compare in dictionary order: the
first differing letter decides, and a proper prefix sorts before any of its
extensions (so "0" < "001" < "01").  A Lyndon word is strictly smaller than
every nontrivial rotation of itself.  Every non-empty word factors uniquely
into a non-increasing concatenation of Lyndon words, its standard
decomposition; the decomposition is *strictly decreasing* when no factor
repeats.

All counting functions use exact integer arithmetic.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

DEFAULT_ENUMERATION_BUDGET = 10**8


class BudgetExceededError(Exception):
    """An enumeration or matrix dimension exceeded its configured budget."""


@dataclass(frozen=True)
class Word:
    """Immutable word over the alphabet {0, ..., q-1}.

    Words over the same alphabet size are totally ordered in dictionary
    order; comparing words with different ``q`` raises ``ValueError``.
    """

    letters: tuple[int, ...]
    q: int

    def __post_init__(self):
        if type(self.letters) is not tuple:
            object.__setattr__(self, "letters", tuple(self.letters))
        if self.q < 1:
            raise ValueError(f"alphabet size must be at least 1, got {self.q}")
        if self.letters and not 0 <= min(self.letters) <= max(self.letters) < self.q:
            bad = next(a for a in self.letters if not 0 <= a < self.q)
            raise ValueError(f"letter {bad} outside alphabet of size {self.q}")

    @classmethod
    def from_string(cls, text: str, q: int) -> Word:
        """Parse the display form: a digit string for q <= 10 ("0110"),
        comma-separated letter indices otherwise ("3,11,0")."""
        if text == "":
            return cls((), q)
        if "," in text or q > 10:
            return cls(tuple(int(part) for part in text.split(",")), q)
        return cls(tuple(int(ch) for ch in text), q)

    def __str__(self):
        sep = "" if self.q <= 10 else ","
        return sep.join(str(a) for a in self.letters)

    def __len__(self):
        return len(self.letters)

    def __getitem__(self, i):
        return self.letters[i]

    def _require_same_alphabet(self, other: Word) -> None:
        if self.q != other.q:
            raise ValueError(
                f"cannot compare words over alphabet sizes {self.q} and {other.q}"
            )

    def __lt__(self, other: Word) -> bool:
        if not isinstance(other, Word):
            return NotImplemented
        self._require_same_alphabet(other)
        return self.letters < other.letters

    def __le__(self, other: Word) -> bool:
        if not isinstance(other, Word):
            return NotImplemented
        self._require_same_alphabet(other)
        return self.letters <= other.letters

    def __gt__(self, other: Word) -> bool:
        if not isinstance(other, Word):
            return NotImplemented
        self._require_same_alphabet(other)
        return self.letters > other.letters

    def __ge__(self, other: Word) -> bool:
        if not isinstance(other, Word):
            return NotImplemented
        self._require_same_alphabet(other)
        return self.letters >= other.letters


def lex_compare(u: Word, v: Word) -> int:
    """Three-way dictionary-order comparison: -1 if u < v, 0 if equal, +1 if u > v."""
    u._require_same_alphabet(v)
    if u.letters == v.letters:
        return 0
    return -1 if u.letters < v.letters else 1


def _duval(seq: tuple[int, ...]) -> list[tuple[int, ...]]:
    # Duval's factorization into non-increasing Lyndon factors, linear time.
    n = len(seq)
    i = 0
    factors = []
    while i < n:
        j, k = i + 1, i
        while j < n and seq[k] <= seq[j]:
            k = i if seq[k] < seq[j] else k + 1
            j += 1
        step = j - k
        while i <= k:
            factors.append(seq[i : i + step])
            i += step
    return factors


def is_lyndon(w: Word) -> bool:
    """True iff w is strictly smaller than all of its nontrivial rotations.

    Equivalent, and computed here in linear time: w is the single factor of
    its own standard decomposition.
    """
    if len(w) == 0:
        raise ValueError("the empty word is not a Lyndon word")
    return len(_duval(w.letters)) == 1


@dataclass(frozen=True)
class LyndonFactorization:
    """A standard decomposition: non-increasing Lyndon factors."""

    factors: tuple[Word, ...]

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(self.factors))
        if not self.factors:
            raise ValueError("a factorization needs at least one factor")
        q = self.factors[0].q
        for f in self.factors:
            if f.q != q:
                raise ValueError("all factors must share one alphabet size")
            if not is_lyndon(f):
                raise ValueError(f"factor {f} is not a Lyndon word")
        for a, b in zip(self.factors, self.factors[1:]):
            if a < b:
                raise ValueError("factors must be non-increasing")

    def concatenated(self) -> Word:
        letters = tuple(a for f in self.factors for a in f.letters)
        return Word(letters, self.factors[0].q)

    def __str__(self):
        return "".join(f"({f})" for f in self.factors)


def duval_factorize(w: Word) -> LyndonFactorization:
    """The unique non-increasing Lyndon factorization of a non-empty word."""
    if len(w) == 0:
        raise ValueError("cannot factorize the empty word")
    return LyndonFactorization(tuple(Word(t, w.q) for t in _duval(w.letters)))


def is_strictly_decreasing(f: LyndonFactorization) -> bool:
    """True iff adjacent factors strictly decrease (no factor repeats)."""
    return all(a > b for a, b in zip(f.factors, f.factors[1:]))


def _lyndon_tuples(q: int, max_len: int):
    # Successor-style generation of all Lyndon words of length <= max_len,
    # emitted in dictionary order as letter tuples.
    w = [0]
    yield (0,)
    top = q - 1
    while True:
        w = (w * (max_len // len(w) + 1))[:max_len]
        while w and w[-1] == top:
            w.pop()
        if not w:
            return
        w[-1] += 1
        yield tuple(w)


def lyndon_words(q: int, l: int) -> list[Word]:
    """All Lyndon words of length exactly l, in dictionary order."""
    if q < 1:
        raise ValueError(f"alphabet size must be at least 1, got {q}")
    if l < 1:
        raise ValueError(f"word length must be at least 1, got {l}")
    return [Word(t, q) for t in _lyndon_tuples(q, l) if len(t) == l]


def _mobius(n: int) -> int:
    if n == 1:
        return 1
    sign = 1
    d = 2
    while d * d <= n:
        if n % d == 0:
            n //= d
            if n % d == 0:
                return 0
            sign = -sign
        d += 1
    if n > 1:
        sign = -sign
    return sign


def _divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def count_lyndon(q: int, l: int) -> int:
    """Number of Lyndon words of length l: (1/l) sum_{d|l} mu(d) q^(l/d)."""
    if q < 1:
        raise ValueError(f"alphabet size must be at least 1, got {q}")
    if l < 1:
        raise ValueError(f"word length must be at least 1, got {l}")
    total = sum(_mobius(d) * q ** (l // d) for d in _divisors(l))
    assert total % l == 0  # necklace-counting divisibility
    return total // l


@dataclass(frozen=True)
class LyndonCountTable:
    """Lyndon word counts per length for one alphabet size."""

    q: int
    counts: dict[int, int]


def lyndon_count_table(q: int, max_len: int) -> LyndonCountTable:
    return LyndonCountTable(q, {l: count_lyndon(q, l) for l in range(1, max_len + 1)})


def verify_lyndon_count_identity(q: int, m: int) -> bool:
    """Check sum_{l|m} l * L_q(l) == q^m with exact integers."""
    if q < 1 or m < 1:
        raise ValueError("alphabet size and length must be at least 1")
    return sum(l * count_lyndon(q, l) for l in _divisors(m)) == q**m


def count_strictly_decreasing(q: int, n: int) -> int:
    """Number of length-n words with a strictly decreasing standard
    decomposition: 1 for n = 0, q for n = 1, (q-1) q^(n-1) for n >= 2."""
    if q < 1:
        raise ValueError(f"alphabet size must be at least 1, got {q}")
    if n < 0:
        raise ValueError(f"word length must be non-negative, got {n}")
    if n == 0:
        return 1
    if n == 1:
        return q
    return (q - 1) * q ** (n - 1)


def count_strictly_decreasing_bruteforce(
    q: int, n: int, budget: int = DEFAULT_ENUMERATION_BUDGET
) -> int:
    """Count strictly decreasing standard decompositions by enumerating all
    q^n words and factorizing each one.  Independent of the closed form."""
    if q < 1:
        raise ValueError(f"alphabet size must be at least 1, got {q}")
    if n < 0:
        raise ValueError(f"word length must be non-negative, got {n}")
    total_words = q**n
    if total_words > budget:
        raise BudgetExceededError(
            f"enumerating {q}^{n} = {total_words} words exceeds budget {budget}"
        )
    if n == 0:
        return 1
    count = 0
    for letters in itertools.product(range(q), repeat=n):
        factors = _duval(letters)
        if all(factors[i] > factors[i + 1] for i in range(len(factors) - 1)):
            count += 1
    return count


@dataclass(frozen=True)
class SeriesTruncation:
    """Exact integer coefficients of degrees 0..order of a truncated series."""

    q: int
    order: int
    coeffs: tuple[int, ...]


def lyndon_subset_series(q: int, order: int) -> SeriesTruncation:
    """Expand prod_{l=1}^{order} (1 + x^l)^{L_q(l)} truncated at the given
    degree, with exact integer coefficients.

    Coefficient n counts the sets of distinct Lyndon words of total length n,
    which are exactly the strictly decreasing standard decompositions.
    Factors with l > order cannot touch degrees <= order.
    """
    if q < 1:
        raise ValueError(f"alphabet size must be at least 1, got {q}")
    if order < 0:
        raise ValueError(f"truncation order must be non-negative, got {order}")
    coeffs = [0] * (order + 1)
    coeffs[0] = 1
    for l in range(1, order + 1):
        reps = count_lyndon(q, l)
        if reps == 0:
            continue
        expanded = [0] * (order + 1)
        for deg, c in enumerate(coeffs):
            if c == 0:
                continue
            for j in range((order - deg) // l + 1):
                expanded[deg + j * l] += c * math.comb(reps, j)
        coeffs = expanded
    return SeriesTruncation(q, order, tuple(coeffs))
