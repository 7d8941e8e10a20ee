"""Exact rational scalars and sparse word-indexed vectors.

Scalars are arbitrary-precision rationals; the stdlib Fraction already
guarantees lowest terms, a positive denominator and value equality, so it is
used directly.  Vectors are sparse maps from words of a fixed length to
nonzero scalars, tagged with the basis ('x' or 'y') in which the
coordinates are taken.  No floating point anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

from .words import check_word, word_key

Scalar = Fraction


def parse_scalar(s: str) -> Fraction:
    """Parse "p/q" or "p" into an exact rational."""
    return Fraction(s)


def format_scalar(c: Fraction) -> str:
    return str(c)


class BasisMismatchError(ValueError):
    """Operands disagree on length or basis tag."""


class TriangularityError(ValueError):
    """A change-of-basis map is not unitriangular for the given order."""


class TensorVector:
    """Sparse exact vector in the n-fold tensor power, in basis 'x' or 'y'.

    Instances are immutable by convention: no method mutates ``terms`` after
    construction, and arithmetic returns fresh vectors.
    """

    __slots__ = ("n", "basis", "terms")

    def __init__(self, n: int, basis: str, terms: Mapping[str, Fraction] | None = None):
        if basis not in ("x", "y"):
            raise ValueError(f"basis tag must be 'x' or 'y', got {basis!r}")
        if n < 0:
            raise ValueError("length must be nonnegative")
        clean: dict[str, Fraction] = {}
        for word, coeff in (terms or {}).items():
            check_word(word)
            if len(word) != n:
                raise ValueError(f"word {word!r} does not have length {n}")
            c = Fraction(coeff)
            if c:
                clean[word] = c
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "terms", clean)

    @classmethod
    def _raw(cls, n: int, basis: str, terms: dict[str, Fraction]) -> "TensorVector":
        """Wrap an already-clean term dict without copying or validating."""
        self = object.__new__(cls)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "terms", terms)
        return self

    def __setattr__(self, name, value):
        raise AttributeError("TensorVector is immutable")

    @classmethod
    def zero(cls, n: int, basis: str = "x") -> "TensorVector":
        return cls(n, basis)

    @classmethod
    def unit(cls, word: str, basis: str = "x") -> "TensorVector":
        return cls(len(word), basis, {word: Fraction(1)})

    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, word: str) -> Fraction:
        return self.terms.get(word, Fraction(0))

    def support(self) -> list[str]:
        return sorted(self.terms, key=word_key)

    def _require_compatible(self, other: "TensorVector") -> None:
        if self.n != other.n or self.basis != other.basis:
            raise BasisMismatchError(
                f"cannot combine ({self.n},{self.basis}) with ({other.n},{other.basis})"
            )

    def __add__(self, other: "TensorVector") -> "TensorVector":
        self._require_compatible(other)
        out = dict(self.terms)
        for word, c in other.terms.items():
            s = out.get(word, Fraction(0)) + c
            if s:
                out[word] = s
            else:
                out.pop(word, None)
        return TensorVector._raw(self.n, self.basis, out)

    def __sub__(self, other: "TensorVector") -> "TensorVector":
        return self + (-other)

    def __neg__(self) -> "TensorVector":
        return TensorVector._raw(self.n, self.basis, {w: -c for w, c in self.terms.items()})

    def scale(self, c) -> "TensorVector":
        c = Fraction(c)
        if not c:
            return TensorVector._raw(self.n, self.basis, {})
        return TensorVector._raw(self.n, self.basis, {w: c * v for w, v in self.terms.items()})

    __mul__ = scale
    __rmul__ = scale

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, TensorVector)
            and self.n == other.n
            and self.basis == other.basis
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.n, self.basis, frozenset(self.terms.items())))

    def tensor(self, other: "TensorVector") -> "TensorVector":
        """Tensor product; defined on the x basis only.

        Tensoring y-tagged coordinates is meaningless without re-expressing
        them in the monomial basis first; basis-level wrappers do that.
        """
        if self.basis != "x" or other.basis != "x":
            raise BasisMismatchError("tensor products require x-tagged operands")
        out: dict[str, Fraction] = {}
        for wa, ca in self.terms.items():
            for wb, cb in other.terms.items():
                out[wa + wb] = ca * cb
        return TensorVector._raw(self.n + other.n, "x", out)

    def sorted_terms(self) -> list[tuple[str, Fraction]]:
        return [(w, self.terms[w]) for w in self.support()]

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "basis": self.basis,
            "terms": [{"word": w, "coeff": str(c)} for w, c in self.sorted_terms()],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "TensorVector":
        terms = {t["word"]: parse_scalar(t["coeff"]) for t in data["terms"]}
        return cls(int(data["n"]), data["basis"], terms)

    def __repr__(self):
        body = " + ".join(f"{c}*{self.basis}[{w}]" for w, c in self.sorted_terms())
        return f"<TensorVector n={self.n} {body or '0'}>"


def solve_triangular(
    change: Mapping[str, TensorVector],
    target: TensorVector,
    new_basis: str | None = None,
) -> TensorVector:
    """Coordinates of ``target`` in the basis described by ``change``.

    ``change`` maps each new-basis word to its expansion in the old basis
    and must be unitriangular: the expansion of word m has coefficient 1 at
    m and is otherwise supported on words strictly greater in lexicographic
    order (minus < plus).  Solved exactly by back-substitution from the
    least remaining word.
    """
    if new_basis is None:
        new_basis = "y" if target.basis == "x" else "x"
    residual = dict(target.terms)
    out: dict[str, Fraction] = {}
    while residual:
        m = min(residual, key=word_key)
        row = change.get(m)
        if row is None:
            raise TriangularityError(f"no change-of-basis row for word {m!r}")
        if row.n != target.n or row.basis != target.basis:
            raise BasisMismatchError("change-of-basis rows must live in the target's space")
        if row.terms.get(m) != 1:
            raise TriangularityError(f"diagonal coefficient at {m!r} is not 1")
        if min(row.terms, key=word_key) != m:
            raise TriangularityError(f"row for {m!r} has support below the diagonal")
        c = residual.pop(m)
        out[m] = c
        for word, rc in row.terms.items():
            if word == m:
                continue
            s = residual.get(word, Fraction(0)) - c * rc
            if s:
                residual[word] = s
            else:
                residual.pop(word, None)
    return TensorVector._raw(target.n, new_basis, out)


def rank_of_vectors(vectors: Iterable[TensorVector]) -> int:
    """Rank of a family of vectors, by exact sparse Gaussian elimination."""
    pivots: dict[str, dict[str, Fraction]] = {}
    rank = 0
    for vec in vectors:
        row = dict(vec.terms)
        while row:
            head = min(row, key=word_key)
            pivot = pivots.get(head)
            if pivot is None:
                c = row[head]
                pivots[head] = {w: v / c for w, v in row.items()}
                rank += 1
                break
            c = row.pop(head)
            for w, v in pivot.items():
                if w == head:
                    continue
                s = row.get(w, Fraction(0)) - c * v
                if s:
                    row[w] = s
                else:
                    row.pop(w, None)
    return rank
