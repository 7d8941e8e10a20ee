"""The distinguished basis (y_w) of tensor powers and its change of basis.

The basis is defined by y_empty = 1 together with

    y_{+w} = x_+ (x) y_w
    y_{-w} = x_- (x) y_w  -  sum over v in the flip set of w of x_+ (x) y_v

equivalently, read left to right,

    x_+ (x) y_w = y_{+w}
    x_- (x) y_w = y_{-w} + sum over v in the flip set of w of y_{+v}.

This is the dual canonical basis specialized at q = 1, matching the crystal
convention of :func:`sl2mv.words.crystal` (the opposite of the usual tensor
product of crystals); it also coincides with the Mirkovic-Vilonen basis,
which is what the :mod:`sl2mv.charts` module verifies combinatorially.

Both expansion directions are memoized in module-level tables.  Entries are
pure values and inserts are idempotent, so under CPython's GIL the tables
are safe for concurrent readers; clear_caches() is only needed to release
memory.
"""

from __future__ import annotations

from fractions import Fraction

from .exactalg import TensorVector, solve_triangular
from .words import (
    all_letters_significant,
    check_word,
    enumerate_words,
    flip_set,
    path_profile,
    factorize,
    semistable_words,
    weight,
    word_key,
)

_Y_IN_X: dict[str, dict[str, Fraction]] = {"": {"": Fraction(1)}}
_X_IN_Y: dict[str, dict[str, Fraction]] = {"": {"": Fraction(1)}}

_ONE = Fraction(1)


def clear_caches() -> None:
    _Y_IN_X.clear()
    _Y_IN_X[""] = {"": _ONE}
    _X_IN_Y.clear()
    _X_IN_Y[""] = {"": _ONE}


def _y_terms(w: str) -> dict[str, Fraction]:
    cached = _Y_IN_X.get(w)
    if cached is not None:
        return cached
    # Resolve iteratively from the shortest pending suffix to keep the
    # recursion depth independent of the word length.
    stack = [w]
    while stack:
        u = stack[-1]
        if u in _Y_IN_X:
            stack.pop()
            continue
        tail = u[1:]
        pending = [t for t in (tail, *flip_set(tail)) if t not in _Y_IN_X]
        if pending:
            stack.extend(pending)
            continue
        stack.pop()
        head = u[0]
        out = {head + word: c for word, c in _Y_IN_X[tail].items()}
        if head == "-":
            for v in flip_set(tail):
                for word, c in _Y_IN_X[v].items():
                    key = "+" + word
                    s = out.get(key, 0) - c
                    if s:
                        out[key] = s
                    else:
                        del out[key]
        _Y_IN_X[u] = out
    return _Y_IN_X[w]


def _x_terms(w: str) -> dict[str, Fraction]:
    cached = _X_IN_Y.get(w)
    if cached is not None:
        return cached
    stack = [w]
    while stack:
        u = stack.pop()
        if u in _X_IN_Y:
            continue
        tail = u[1:]
        if tail not in _X_IN_Y:
            stack.append(u)
            stack.append(tail)
            continue
        head = u[0]
        out: dict[str, Fraction] = {}
        for word, c in _X_IN_Y[tail].items():
            key = head + word
            s = out.get(key, 0) + c
            if s:
                out[key] = s
            else:
                del out[key]
            if head == "-":
                for v in flip_set(word):
                    key = "+" + v
                    s = out.get(key, 0) + c
                    if s:
                        out[key] = s
                    else:
                        del out[key]
        _X_IN_Y[u] = out
    return _X_IN_Y[w]


def y_in_x(w: str) -> TensorVector:
    """Expansion of y_w in the monomial basis (x_v)."""
    check_word(w)
    return TensorVector._raw(len(w), "x", _y_terms(w))


def x_in_y(w: str) -> TensorVector:
    """Expansion of x_w in the basis (y_v); same length and weight support."""
    check_word(w)
    return TensorVector._raw(len(w), "y", _x_terms(w))


def expand_in_y(vec: TensorVector) -> TensorVector:
    """Linear extension of x_in_y; inverse of the linear extension of y_in_x."""
    if vec.basis == "y":
        return vec
    out: dict[str, Fraction] = {}
    for word, c in vec.terms.items():
        for v, cv in _x_terms(word).items():
            s = out.get(v, 0) + c * cv
            if s:
                out[v] = s
            else:
                del out[v]
    return TensorVector._raw(vec.n, "y", out)


def expand_in_x(vec: TensorVector) -> TensorVector:
    """Linear extension of y_in_x."""
    if vec.basis == "x":
        return vec
    out: dict[str, Fraction] = {}
    for word, c in vec.terms.items():
        for v, cv in _y_terms(word).items():
            s = out.get(v, 0) + c * cv
            if s:
                out[v] = s
            else:
                del out[v]
    return TensorVector._raw(vec.n, "x", out)


def factor_product(w: str) -> TensorVector:
    """y_w computed as the ordered tensor product over its factorization.

    The blocks contribute their own y-expansions and the significant letters
    contribute bare monomial factors; the result must agree with y_in_x(w).
    """
    fact = factorize(w)
    letters = ["+"] * fact.r + ["-"] * fact.s
    out = y_in_x(fact.blocks[0])
    for letter, block in zip(letters, fact.blocks[1:]):
        out = out.tensor(TensorVector.unit(letter))
        out = out.tensor(y_in_x(block))
    return out


def _insert_middle(vec: TensorVector, cut: int, middle: TensorVector) -> TensorVector:
    """Map x_a (x) x_b to x_a (x) middle (x) x_b, splitting keys at ``cut``."""
    out: dict[str, Fraction] = {}
    for word, c in vec.terms.items():
        left, right = word[:cut], word[cut:]
        for mid, cm in middle.terms.items():
            key = left + mid + right
            s = out.get(key, 0) + c * cm
            if s:
                out[key] = s
            else:
                del out[key]
    return TensorVector._raw(vec.n + middle.n, "x", out)


def check_characterization(n: int, insert_max: int = 4) -> dict:
    """Verify the three conditions characterizing the basis, up to length n.

    (a) words of shape +...+-...- satisfy y_w = x_w;
    (b) y_{-+} = x_{-+} - x_{+-};
    (c) for every word w' w'' of length <= n, every semistable u of length
        <= insert_max and every split point, inserting the expansion of y_u
        between the split halves of every monomial of y_{w'w''} gives
        y_{w'uw''}.
    """
    failures: list[str] = []
    checked = 0
    for k in range(n + 1):
        for w in enumerate_words(k):
            if all_letters_significant(w):
                checked += 1
                if y_in_x(w) != TensorVector.unit(w):
                    failures.append(f"(a) y[{w}] != x[{w}]")
    if n >= 2:
        checked += 1
        expected = TensorVector(2, "x", {"-+": Fraction(1), "+-": Fraction(-1)})
        if y_in_x("-+") != expected:
            failures.append("(b) y[-+] mismatch")
    inserts = [u for m in range(0, insert_max + 1, 2) for u in semistable_words(m)]
    for k in range(n + 1):
        for w in enumerate_words(k):
            base = y_in_x(w)
            for cut in range(k + 1):
                for u in inserts:
                    checked += 1
                    got = _insert_middle(base, cut, y_in_x(u))
                    if got != y_in_x(w[:cut] + u + w[cut:]):
                        failures.append(f"(c) w'={w[:cut]} u={u} w''={w[cut:]}")
    return {"n": n, "insert_max": insert_max, "checked": checked, "failures": failures,
            "passed": not failures}


def check_truncation(w: str, split: tuple[int, int, int]) -> dict:
    """Check the truncation property of the basis for one word and split.

    Write w = w1 w2 w3 with lengths given by ``split`` and expand
    y_{w1} (x) y_{w2 w3} in the y basis of the full space.  Then every term
    v must satisfy wt(v3) < wt(w3) or v3 = w3, and the terms with v3 = w3,
    with their suffix dropped, must reproduce the expansion of
    y_{w1} (x) y_{w2} in the y basis of the length n1+n2 space.
    """
    n1, n2, n3 = split
    if len(w) != n1 + n2 + n3 or min(split) < 0:
        raise ValueError("split does not match the word length")
    w1, w2, w3 = w[:n1], w[n1 : n1 + n2], w[n1 + n2 :]
    expansion = expand_in_y(y_in_x(w1).tensor(y_in_x(w2 + w3)))
    failures: list[str] = []
    kept: dict[str, Fraction] = {}
    wt3 = weight(w3)
    for v, c in expansion.terms.items():
        v3 = v[n1 + n2 :]
        if v3 == w3:
            kept[v[: n1 + n2]] = c
        elif weight(v3) >= wt3:
            failures.append(f"term {v} has suffix {v3} with weight >= wt({w3})")
    reduced = expand_in_y(y_in_x(w1).tensor(y_in_x(w2)))
    if TensorVector._raw(n1 + n2, "y", kept) != reduced:
        failures.append("suffix-matching terms do not reproduce the short expansion")
    return {"word": w, "split": list(split), "failures": failures, "passed": not failures}


def check_unitriangularity(n: int) -> dict:
    """Assert the shape of the x -> y transition matrix at length n.

    For every word w the expansion of x_w has coefficient 1 at w, all
    coefficients nonnegative integers, and support only on words whose path
    dominates the path of w pointwise.
    """
    failures: list[str] = []
    for w in enumerate_words(n):
        dw = path_profile(w).d
        for v, c in _x_terms(w).items():
            if v == w:
                if c != 1:
                    failures.append(f"diagonal coefficient at {w} is {c}")
                continue
            if c.denominator != 1 or c <= 0:
                failures.append(f"coefficient of y[{v}] in x[{w}] is {c}")
            dv = path_profile(v).d
            if any(a < b for a, b in zip(dv, dw)):
                failures.append(f"support word {v} does not dominate {w}")
    return {"n": n, "failures": failures, "passed": not failures}


def transition_table(n: int) -> list[dict]:
    """Rows {word, y_in_x, x_in_y} for every word of length n, in lex order."""
    rows = []
    for w in enumerate_words(n):
        rows.append(
            {
                "word": w,
                "y_in_x": [{"word": v, "coeff": str(c)} for v, c in y_in_x(w).sorted_terms()],
                "x_in_y": [{"word": v, "coeff": str(c)} for v, c in x_in_y(w).sorted_terms()],
            }
        )
    return rows


def solve_in_y(target: TensorVector, n: int | None = None) -> TensorVector:
    """Express an x-tagged vector in the y basis via triangular solving.

    Independent of expand_in_y: uses only y_in_x rows and back-substitution,
    so the two routes cross-check each other.
    """
    if n is None:
        n = target.n
    change = {w: y_in_x(w) for w in enumerate_words(n)}
    return solve_triangular(change, target, new_basis="y")
