"""The sl2 action on tensor powers and projections onto Cartan components.

The generators act on letters by e.x- = x+, f.x+ = x-, h.x(+/-) = (+/-)x,
extended by the Leibniz rule.  The Casimir operator C = ef + fe + h^2/2
acts on the isotypical component of highest weight p by p^2/2 + p, which
makes the projection onto the top component a polynomial in C; everything
stays exact.

Tensor products of irreducibles are handled embedded in the full tensor
power: a shape (n_1, ..., n_r) groups the tensor slots into blocks, and the
blockwise Cartan projections cut out the subspace isomorphic to
V(n_1 w) (x) ... (x) V(n_r w).
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence

from .basis import expand_in_x, expand_in_y, y_in_x
from .exactalg import TensorVector, rank_of_vectors
from .words import (
    all_letters_significant,
    crystal,
    ell,
    enumerate_words,
    is_semistable,
    semistable_words,
)

GENERATORS = ("e", "f", "h")


def act(gen: str, vec: TensorVector, slots: Sequence[int] | None = None) -> TensorVector:
    """Apply a Lie algebra generator ('e', 'f' or 'h') to a vector.

    ``slots`` restricts the Leibniz sum to the given 0-based tensor
    positions (used for blockwise projections); default is all positions.
    A y-tagged input is converted to the x basis and the result converted
    back.
    """
    if gen not in GENERATORS:
        raise ValueError(f"unknown generator {gen!r}")
    if vec.basis == "y":
        return expand_in_y(act(gen, expand_in_x(vec), slots))
    positions = range(vec.n) if slots is None else slots
    out: dict[str, Fraction] = {}

    def add(word: str, c: Fraction) -> None:
        s = out.get(word, 0) + c
        if s:
            out[word] = s
        else:
            del out[word]

    for word, c in vec.terms.items():
        if gen == "h":
            wt = sum(1 if word[i] == "+" else -1 for i in positions)
            if wt:
                add(word, wt * c)
        elif gen == "e":
            for i in positions:
                if word[i] == "-":
                    add(word[:i] + "+" + word[i + 1 :], c)
        else:
            for i in positions:
                if word[i] == "+":
                    add(word[:i] + "-" + word[i + 1 :], c)
    return TensorVector._raw(vec.n, "x", out)


def casimir(vec: TensorVector, slots: Sequence[int] | None = None) -> TensorVector:
    """C.v with C = ef + fe + h^2/2, restricted to ``slots`` if given."""
    if vec.basis == "y":
        return expand_in_y(casimir(expand_in_x(vec), slots))
    ef = act("e", act("f", vec, slots), slots)
    fe = act("f", act("e", vec, slots), slots)
    hh = act("h", act("h", vec, slots), slots)
    return ef + fe + hh.scale(Fraction(1, 2))


def casimir_eigenvalue(p: int) -> Fraction:
    """Scalar by which C acts on the isotypical component of weight p."""
    return Fraction(p * p, 2) + p


def cartan_project(
    vec: TensorVector, n: int | None = None, slots: Sequence[int] | None = None
) -> TensorVector:
    """Projection onto the top isotypical component of the slot range.

    Realized as the interpolation polynomial in the Casimir operator over
    the eigenvalues of matching parity, so the kernel is exactly the sum of
    the non-top isotypical components.
    """
    if n is not None and vec.n != n:
        raise ValueError(f"vector has length {vec.n}, expected {n}")
    positions = range(vec.n) if slots is None else slots
    m = len(positions)
    top = casimir_eigenvalue(m)
    out = vec
    for p in range(m % 2, m, 2):
        c_p = casimir_eigenvalue(p)
        out = (casimir(out, slots) - out.scale(c_p)).scale(1 / (top - c_p))
    return out


def check_shape(parts: Sequence[int]) -> tuple[int, ...]:
    shape = tuple(int(p) for p in parts)
    if not shape or any(p < 1 for p in shape):
        raise ValueError("shape must be a nonempty tuple of positive integers")
    return shape


def shape_slots(shape: Sequence[int]) -> list[range]:
    """The consecutive slot ranges cut out by a shape."""
    out = []
    start = 0
    for p in shape:
        out.append(range(start, start + p))
        start += p
    return out


def shape_blocks(word: str, shape: Sequence[int]) -> tuple[str, ...]:
    return tuple(word[r.start : r.stop] for r in shape_slots(shape))


def block_project(vec: TensorVector, shape: Sequence[int]) -> TensorVector:
    """Apply the Cartan projection blockwise for the given shape."""
    out = vec
    for r in shape_slots(shape):
        out = cartan_project(out, slots=r)
    return out


def mv_basis_of_shape(shape: Sequence[int]) -> list[tuple[tuple[str, ...], TensorVector]]:
    """Basis of V(n_1 w) (x) ... (x) V(n_r w) embedded in the tensor power.

    Projects every basis vector y_w blockwise and keeps the nonzero images;
    the surviving indices are exactly the words whose blocks all have shape
    +...+-...- (every block letter significant).
    """
    shape = check_shape(shape)
    n = sum(shape)
    out = []
    for w in enumerate_words(n):
        image = block_project(y_in_x(w), shape)
        if not image.is_zero():
            out.append((shape_blocks(w, shape), image))
    return out


def check_crystal_compat(n: int) -> dict:
    """Check that e and f act as the crystal operators modulo lower layers.

    For every word w, e.y_w - eps(w) y_{e(w)} and f.y_w - phi(w) y_{f(w)}
    must expand in the y basis with support only on words v with
    ell(v) <= ell(w) - 1; for semistable w this means e and f annihilate
    y_w exactly.
    """
    failures: list[str] = []
    for w in enumerate_words(n):
        data = crystal(w)
        for gen, count, flip in (("e", data.eps, data.e_result), ("f", data.phi, data.f_result)):
            rest = act(gen, y_in_x(w))
            if count:
                rest = rest - y_in_x(flip).scale(count)
            bad = [v for v in expand_in_y(rest).terms if ell(v) > data.ell - 1]
            if bad:
                failures.append(f"{gen}.y[{w}] leaks outside layer {data.ell - 1}: {bad[:3]}")
    return {"n": n, "failures": failures, "passed": not failures}


def layer_multiplicity(n: int, p: int) -> int:
    """Multiplicity of the (p+1)-dimensional simple module in the tensor power.

    Character-theoretic formula C(n,(n-p)/2) - C(n,(n-p)/2-1); zero for
    mismatched parity.  Independent of the basis machinery.
    """
    if p < 0 or p > n or (n - p) % 2:
        return 0
    k = (n - p) // 2
    low = math.comb(n, k - 1) if k >= 1 else 0
    return math.comb(n, k) - low


def layer_counts(n: int) -> dict[int, int]:
    """Number of words of length n with exactly p significant letters."""
    counts: dict[int, int] = {}
    for w in enumerate_words(n):
        p = ell(w)
        counts[p] = counts.get(p, 0) + 1
    return counts


def casimir_isotypic_dims(n: int) -> dict[int, int]:
    """Isotypical dimensions read off from exact kernels of C - c_p.

    Works weight block by weight block (C preserves weight), so this is a
    brute-force linear-algebra oracle with no combinatorial input.
    """
    dims = {p: 0 for p in range(n % 2, n + 1, 2)}
    by_weight: dict[int, list[str]] = {}
    for w in enumerate_words(n):
        by_weight.setdefault(w.count("+"), []).append(w)
    for block in by_weight.values():
        images = {w: casimir(TensorVector.unit(w)) for w in block}
        for p in dims:
            c_p = casimir_eigenvalue(p)
            shifted = [images[w] - TensorVector.unit(w).scale(c_p) for w in block]
            dims[p] += len(block) - rank_of_vectors(shifted)
    return dims


def check_layer_dimensions(n: int, oracle_max: int = 8) -> dict:
    """Compare word counts per layer with the multiplicity formula.

    The count of words with ell(w) = p must equal (p+1) * m_{n,p}; for
    n <= oracle_max the same numbers are cross-checked against the Casimir
    kernel dimensions.
    """
    failures: list[str] = []
    counts = layer_counts(n)
    for p in range(n + 1):
        expected = (p + 1) * layer_multiplicity(n, p)
        if counts.get(p, 0) != expected:
            failures.append(f"n={n} p={p}: counted {counts.get(p, 0)}, formula {expected}")
    if n <= oracle_max:
        dims = casimir_isotypic_dims(n)
        for p, dim in dims.items():
            expected = (p + 1) * layer_multiplicity(n, p)
            if dim != expected:
                failures.append(f"n={n} p={p}: casimir kernel {dim}, formula {expected}")
    return {"n": n, "failures": failures, "passed": not failures}


def check_invariants(max_len: int) -> dict:
    """Catalan count of semistable words and exact annihilation by e and f."""
    failures: list[str] = []
    for m in range(1, max_len // 2 + 1):
        words = semistable_words(2 * m)
        catalan = math.comb(2 * m, m) // (m + 1)
        if len(words) != catalan:
            failures.append(f"2m={2*m}: {len(words)} semistable words, Catalan {catalan}")
        for w in words:
            yv = y_in_x(w)
            if not act("e", yv).is_zero() or not act("f", yv).is_zero():
                failures.append(f"y[{w}] is not annihilated by e and f")
    return {"max_len": max_len, "failures": failures, "passed": not failures}


def check_filtration_stability(n: int) -> dict:
    """e, f, h map each span(y_w : ell(w) <= p) into itself."""
    failures: list[str] = []
    for w in enumerate_words(n):
        p = ell(w)
        for gen in GENERATORS:
            image = expand_in_y(act(gen, y_in_x(w)))
            bad = [v for v in image.terms if ell(v) > p]
            if bad:
                failures.append(f"{gen}.y[{w}] leaves layer {p}: {bad[:3]}")
    return {"n": n, "failures": failures, "passed": not failures}


def check_cartan_projection(n: int) -> dict:
    """Idempotence and equivariance of the Cartan projection at length n."""
    failures: list[str] = []
    for w in enumerate_words(n):
        v = TensorVector.unit(w)
        pv = cartan_project(v)
        if cartan_project(pv) != pv:
            failures.append(f"p not idempotent on x[{w}]")
        for gen in GENERATORS:
            if cartan_project(act(gen, v)) != act(gen, pv):
                failures.append(f"p does not commute with {gen} on x[{w}]")
    top = TensorVector.unit("+" * n)
    if cartan_project(top) != top:
        failures.append("p does not fix the highest weight vector")
    for w in enumerate_words(n):
        if ell(w) < n and not cartan_project(y_in_x(w)).is_zero():
            failures.append(f"p(y[{w}]) != 0 although ell < n")
    return {"n": n, "failures": failures, "passed": not failures}


def check_shape_basis(shape: Sequence[int]) -> dict:
    """Survivor indexing, dimension and rank checks for one shape."""
    shape = check_shape(shape)
    n = sum(shape)
    failures: list[str] = []
    basis = mv_basis_of_shape(shape)
    survivors = {"".join(blocks) for blocks, _ in basis}
    expected = {
        w
        for w in enumerate_words(n)
        if all(all_letters_significant(b) for b in shape_blocks(w, shape))
    }
    if survivors != expected:
        failures.append("survivors are not exactly the block-shaped words")
    dim = 1
    for p in shape:
        dim *= p + 1
    if len(basis) != dim:
        failures.append(f"{len(basis)} vectors, expected {dim}")
    vectors = [vec for _, vec in basis]
    if rank_of_vectors(vectors) != len(basis):
        failures.append("projected vectors are not linearly independent")
    all_images = [block_project(y_in_x(w), shape) for w in enumerate_words(n)]
    if rank_of_vectors(all_images) != len(basis):
        failures.append("survivors do not span the image of the projection")
    return {"shape": list(shape), "failures": failures, "passed": not failures}
