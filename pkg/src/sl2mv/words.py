"""Word combinatorics for tensor powers of the natural SL2 representation.

A word is a finite string over the alphabet {+,-}.  Drawn as a lattice path
(+ up, - down), a word of length n indexes a basis vector of the n-fold
tensor power of the two-dimensional representation; the combinatorics of the
path (weight, semistability, significant letters) drives everything else in
this package.

Positions are 1-based throughout, matching the indexing w(1)...w(n).  Words
are plain Python strings, so all values here are immutable and freely
shareable between threads.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterable

PLUS = "+"
MINUS = "-"

#: Exhaustive enumerations refuse to run past this length by default.
DEFAULT_ENUM_BOUND = 20

# '+' sorts before '-' in ASCII; translate so that plain string comparison
# gives lexicographic order with minus < plus.
_LEX = str.maketrans("-+", "01")


class EnumerationBoundError(ValueError):
    """A requested exhaustive enumeration exceeds the configured bound."""


def check_word(w: str) -> str:
    """Validate that ``w`` consists only of '+' and '-' letters."""
    for c in w:
        if c not in "+-":
            raise ValueError(f"invalid letter {c!r} in word {w!r}")
    return w


def word_key(w: str) -> str:
    """Sort key realizing lexicographic order with minus < plus."""
    return w.translate(_LEX)


def weight(w: str) -> int:
    """Number of '+' letters minus number of '-' letters."""
    return w.count(PLUS) - w.count(MINUS)


def prefix_weights(w: str) -> list[int]:
    """Weights d[0..n] of the prefixes of ``w``, with d[0] = 0."""
    d = [0]
    h = 0
    for c in w:
        h += 1 if c == PLUS else -1
        d.append(h)
    return d


def is_semistable(w: str) -> bool:
    """True iff ``w`` has weight zero and every prefix has weight <= 0."""
    h = 0
    for c in w:
        h += 1 if c == PLUS else -1
        if h > 0:
            return False
    return h == 0


@dataclass(frozen=True)
class PathProfile:
    """Prefix weights d and their running maxima D, both 1-based.

    d[ell-1] is the weight of w(1..ell); D[ell-1] = max(0, d_1, ..., d_ell).
    The baseline 0 is included in the running maximum so that a '+' at
    position ell is significant exactly when d_ell > D_{ell-1}.
    """

    d: tuple[int, ...]
    D: tuple[int, ...]

    def significant_plus_positions(self) -> tuple[int, ...]:
        out = []
        prev = 0
        for i, (dv, Dv) in enumerate(zip(self.d, self.D)):
            if dv > prev:
                out.append(i + 1)
            prev = Dv
        return tuple(out)


def path_profile(w: str) -> PathProfile:
    d = []
    D = []
    h = 0
    m = 0
    for c in w:
        h += 1 if c == PLUS else -1
        m = max(m, h)
        d.append(h)
        D.append(m)
    return PathProfile(tuple(d), tuple(D))


def _significant_positions(w: str) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """1-based positions of significant '+' and significant '-' letters.

    A '+' at position ell is significant iff it reaches a new maximum of the
    path (baseline 0 included); dually, a '-' at position ell is significant
    iff the height before it exceeds every later height.
    """
    n = len(w)
    d = prefix_weights(w)
    plus = []
    m = 0
    for ell in range(1, n + 1):
        if w[ell - 1] == PLUS and d[ell] > m:
            plus.append(ell)
        m = max(m, d[ell])
    minus = []
    suffix_max = [0] * (n + 2)
    suffix_max[n + 1] = min(d) - 1  # sentinel below every height
    for ell in range(n, 0, -1):
        suffix_max[ell] = max(d[ell], suffix_max[ell + 1])
    for ell in range(1, n + 1):
        if w[ell - 1] == MINUS and d[ell - 1] > suffix_max[ell]:
            minus.append(ell)
    return tuple(plus), tuple(minus)


def significant_plus_positions(w: str) -> tuple[int, ...]:
    return _significant_positions(w)[0]


@dataclass(frozen=True)
class Factorization:
    """The unique factorization w_{-r} + ... + w_0 - ... - w_s.

    ``blocks`` holds the r+s+1 semistable blocks in order; ``sig_positions``
    the sorted 1-based positions of the r significant '+' letters followed
    by the s significant '-' letters.
    """

    r: int
    s: int
    blocks: tuple[str, ...]
    sig_positions: tuple[int, ...]

    def reassemble(self) -> str:
        """Interleave blocks and significant letters back into the word."""
        letters = [PLUS] * self.r + [MINUS] * self.s
        parts = [self.blocks[0]]
        for letter, block in zip(letters, self.blocks[1:]):
            parts.append(letter)
            parts.append(block)
        return "".join(parts)

    def to_json(self) -> dict:
        return {
            "r": self.r,
            "s": self.s,
            "blocks": list(self.blocks),
            "sig_positions": list(self.sig_positions),
        }


def factorize(w: str) -> Factorization:
    plus, minus = _significant_positions(w)
    positions = list(plus) + list(minus)
    blocks = []
    prev = 0
    for p in positions:
        blocks.append(w[prev : p - 1])
        prev = p
    blocks.append(w[prev:])
    return Factorization(len(plus), len(minus), tuple(blocks), tuple(positions))


def eps(w: str) -> int:
    """Number of significant '-' letters."""
    return len(_significant_positions(w)[1])


def phi(w: str) -> int:
    """Number of significant '+' letters."""
    return len(_significant_positions(w)[0])


def ell(w: str) -> int:
    """Total number of significant letters; zero iff ``w`` is semistable."""
    plus, minus = _significant_positions(w)
    return len(plus) + len(minus)


def all_letters_significant(w: str) -> bool:
    """True iff ``w`` has shape +...+-...-, i.e. ell(w) = len(w)."""
    return "-+" not in w


def last_letter_significant(w: str) -> bool:
    """True iff the final letter of ``w`` is significant in ``w``."""
    if not w:
        return False
    plus, minus = _significant_positions(w)
    return len(w) in plus or len(w) in minus


def flip_set(w: str) -> set[str]:
    """Words obtained by flipping one significant '+' of ``w`` to '-'."""
    out = set()
    for p in _significant_positions(w)[0]:
        out.add(w[: p - 1] + MINUS + w[p:])
    return out


@dataclass(frozen=True)
class Crystal:
    """Crystal datum of a word: string lengths and the two letter flips.

    e_result flips the leftmost significant '-' to '+', f_result the
    rightmost significant '+' to '-'; None when the operation is undefined.
    These are the maps making words of length n the crystal of the n-fold
    tensor power (for the convention opposite to the usual tensor product
    of crystals; see the module documentation of :mod:`sl2mv.basis`).
    """

    eps: int
    phi: int
    ell: int
    e_result: str | None
    f_result: str | None


def crystal(w: str) -> Crystal:
    plus, minus = _significant_positions(w)
    e_result = None
    if minus:
        p = minus[0]
        e_result = w[: p - 1] + PLUS + w[p:]
    f_result = None
    if plus:
        p = plus[-1]
        f_result = w[: p - 1] + MINUS + w[p:]
    return Crystal(len(minus), len(plus), len(minus) + len(plus), e_result, f_result)


def reverse(w: str) -> str:
    """Reverse the order of the tensor factors indexed by ``w``."""
    return w[::-1]


def enumerate_words(
    n: int,
    pred: Callable[[str], bool] | None = None,
    bound: int = DEFAULT_ENUM_BOUND,
) -> list[str]:
    """All 2^n words of length n in lexicographic order (minus < plus).

    ``pred`` filters the output.  Lengths beyond ``bound`` raise
    :class:`EnumerationBoundError` to keep enumerations desk-scale.
    """
    if n < 0:
        raise ValueError("word length must be nonnegative")
    if n > bound:
        raise EnumerationBoundError(f"2^{n} words exceed the enumeration bound {bound}")
    words = ("".join(t) for t in itertools.product((MINUS, PLUS), repeat=n))
    if pred is None:
        return list(words)
    return [w for w in words if pred(w)]


def semistable_words(n: int, bound: int = DEFAULT_ENUM_BOUND) -> list[str]:
    return enumerate_words(n, is_semistable, bound)
