"""Exact sparse multivariate polynomial and rational function arithmetic.

Polynomials live over the rationals in a fixed ordered variable table;
terms map dense exponent tuples to nonzero coefficients.  Coefficients are
Python ints whenever the value is an integer and Fractions otherwise, which
keeps the overwhelmingly integral computations of this package on the fast
integer path without ever losing exactness (floats are rejected).

Rational functions are quotients whose denominators are kept as multisets
of primitive factors; reduction cancels factors into the numerator by trial
exact division, preceded by a modular univariate screen that refutes most
non-divisibilities cheaply.  A full gcd (content-and-primitive-part
recursion) is attempted only for directly constructed quotients of moderate
size; oversized quotients stay lazily unreduced, and equality is always
decided by cross-multiplication so it never depends on reduction strength.

Exact division is a falsifiable operation: callers treat failure as a
refutation of the identity that promised divisibility.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from fractions import Fraction
from operator import add as _add
from typing import Iterable, Mapping, Sequence

Coeff = int | Fraction


class ExactDivisionError(ArithmeticError):
    """The requested polynomial division is not exact."""


def _as_coeff(c) -> Coeff:
    if type(c) is int:
        return c
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, int):  # bool and int subclasses
        return int(c)
    raise TypeError(f"coefficients must be exact rationals, got {type(c).__name__}")


def _coeff_div(a: Coeff, b: Coeff) -> Coeff:
    """a / b, returned as an int when the quotient is integral."""
    if type(a) is int and type(b) is int:
        q, r = divmod(a, b)
        if not r:
            return q
        return Fraction(a, b)
    q = Fraction(a) / Fraction(b)
    return q.numerator if q.denominator == 1 else q


class VarTable:
    """An ordered, immutable collection of variable names."""

    __slots__ = ("names", "_index")

    def __init__(self, names: Sequence[str]):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise ValueError("variable names must be unique")
        object.__setattr__(self, "names", names)
        object.__setattr__(self, "_index", {name: i for i, name in enumerate(names)})

    def __setattr__(self, name, value):
        raise AttributeError("VarTable is immutable")

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"unknown variable {name!r}") from None

    def __contains__(self, name: str) -> bool:
        return name in self._index

    def __len__(self) -> int:
        return len(self.names)

    def __eq__(self, other) -> bool:
        return isinstance(other, VarTable) and self.names == other.names

    def __hash__(self):
        return hash(self.names)

    def __repr__(self):
        return f"VarTable{self.names}"


def _same_vars(a: "Polynomial", b: "Polynomial") -> VarTable:
    if a.vars is b.vars or a.vars.names == b.vars.names:
        return a.vars
    raise ValueError(f"variable tables differ: {a.vars} vs {b.vars}")


class Polynomial:
    """Sparse polynomial with exact rational coefficients over a VarTable."""

    __slots__ = ("vars", "terms")

    def __init__(self, vars: VarTable, terms: Mapping[tuple[int, ...], Coeff] | None = None):
        clean: dict[tuple[int, ...], Coeff] = {}
        width = len(vars)
        for exp, coeff in (terms or {}).items():
            if len(exp) != width or any(e < 0 for e in exp):
                raise ValueError(f"bad exponent vector {exp!r}")
            c = _as_coeff(coeff)
            if c:
                clean[tuple(exp)] = c
        object.__setattr__(self, "vars", vars)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @classmethod
    def _raw(cls, vars: VarTable, terms: dict[tuple[int, ...], Coeff]) -> "Polynomial":
        self = object.__new__(cls)
        object.__setattr__(self, "vars", vars)
        object.__setattr__(self, "terms", terms)
        return self

    @classmethod
    def zero(cls, vars: VarTable) -> "Polynomial":
        return cls._raw(vars, {})

    @classmethod
    def const(cls, vars: VarTable, c) -> "Polynomial":
        c = _as_coeff(c)
        if not c:
            return cls._raw(vars, {})
        return cls._raw(vars, {(0,) * len(vars): c})

    @classmethod
    def variable(cls, vars: VarTable, name: str) -> "Polynomial":
        exp = [0] * len(vars)
        exp[vars.index(name)] = 1
        return cls._raw(vars, {tuple(exp): 1})

    # -- structure ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_value(self) -> Coeff:
        if not self.terms:
            return 0
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return next(iter(self.terms.values()))

    def degree_in(self, name: str) -> int:
        i = self.vars.index(name)
        return max((e[i] for e in self.terms), default=0)

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def variables_used(self) -> set[str]:
        used: set[int] = set()
        for e in self.terms:
            for i, k in enumerate(e):
                if k:
                    used.add(i)
        return {self.vars.names[i] for i in used}

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.const(self.vars, other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        vars = _same_vars(self, other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                del out[e]
        return Polynomial._raw(vars, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.const(self.vars, other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = _as_coeff(other)
            if not c:
                return Polynomial._raw(self.vars, {})
            return Polynomial._raw(self.vars, {e: c * v for e, v in self.terms.items()})
        if not isinstance(other, Polynomial):
            return NotImplemented
        vars = _same_vars(self, other)
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        out: dict[tuple[int, ...], Coeff] = {}
        get = out.get
        for ea, ca in a.items():
            for eb, cb in b.items():
                key = tuple(map(_add, ea, eb))
                s = get(key, 0) + ca * cb
                if s:
                    out[key] = s
                else:
                    del out[key]
        return Polynomial._raw(vars, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        out = Polynomial.const(self.vars, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Polynomial.const(self.vars, other)
        return (
            isinstance(other, Polynomial)
            and self.vars.names == other.vars.names
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.vars.names, frozenset(self.terms.items())))

    # -- views and helpers ------------------------------------------------

    def by_degree(self, name: str) -> dict[int, "Polynomial"]:
        """Coefficients of the powers of one variable, as polynomials."""
        i = self.vars.index(name)
        out: dict[int, dict[tuple[int, ...], Coeff]] = {}
        for e, c in self.terms.items():
            k = e[i]
            reduced = e[:i] + (0,) + e[i + 1 :]
            out.setdefault(k, {})[reduced] = c
        return {k: Polynomial._raw(self.vars, t) for k, t in out.items()}

    def eval_zero(self, name: str) -> "Polynomial":
        """Substitute 0 for one variable (keep only its degree-0 terms)."""
        i = self.vars.index(name)
        return Polynomial._raw(self.vars, {e: c for e, c in self.terms.items() if not e[i]})

    def content(self) -> Fraction:
        """Positive rational c with self/c integer-coefficient and primitive."""
        if not self.terms:
            return Fraction(1)
        num = 0
        den = 1
        for c in self.terms.values():
            num = math.gcd(num, c.numerator)
            den = den * c.denominator // math.gcd(den, c.denominator)
        return Fraction(num, den)

    def monomial_content(self) -> tuple[int, ...]:
        """Componentwise minimum of the exponent vectors."""
        if not self.terms:
            return (0,) * len(self.vars)
        it = iter(self.terms)
        m = list(next(it))
        for e in it:
            for i, k in enumerate(e):
                if k < m[i]:
                    m[i] = k
            if not any(m):
                break
        return tuple(m)

    def shift_down(self, mono: tuple[int, ...]) -> "Polynomial":
        """Divide by the monomial with exponent vector ``mono``."""
        if not any(mono):
            return self
        return Polynomial._raw(
            self.vars, {tuple(x - y for x, y in zip(e, mono)): c for e, c in self.terms.items()}
        )

    def leading(self) -> tuple[tuple[int, ...], Coeff]:
        e = max(self.terms)
        return e, self.terms[e]

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        names = self.vars.names
        parts = []
        for e in sorted(self.terms, key=lambda t: (-sum(t),) + tuple(-k for k in t)):
            c = self.terms[e]
            mono = "*".join(f"{name}^{k}" if k > 1 else name for name, k in zip(names, e) if k)
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self):
        return f"<Polynomial {self}>"


def poly_arith(op: str, a: Polynomial, b: Polynomial) -> Polynomial:
    """Dispatch add/sub/mul by name; operands must share a variable table."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown operation {op!r}")


def exact_div(a: Polynomial, b: Polynomial, max_steps: int | None = None) -> Polynomial:
    """Exact quotient a/b in the polynomial ring.

    Lex leading-term reduction; if the leading monomial of the remainder is
    ever not divisible by the leading monomial of ``b``, or a nonzero
    remainder survives, the division is not exact and ExactDivisionError is
    raised.  ``max_steps`` bounds the number of quotient terms produced and
    turns overruns into failures (used by opportunistic reductions only).
    """
    vars = _same_vars(a, b)
    if b.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    if a.is_zero():
        return Polynomial._raw(vars, {})
    if b.is_constant():
        c = b.constant_value()
        return Polynomial._raw(vars, {e: _coeff_div(v, c) for e, v in a.terms.items()})
    rem = dict(a.terms)
    # lazy max-heap over negated exponent vectors
    heap = [tuple(-x for x in e) for e in rem]
    heapq.heapify(heap)
    quot: dict[tuple[int, ...], Coeff] = {}
    blead, blc = b.leading()
    bterms = [(e, c) for e, c in b.terms.items() if e != blead]
    steps = 0
    while rem:
        while True:
            neg = heap[0]
            rlead = tuple(-x for x in neg)
            if rlead in rem:
                break
            heapq.heappop(heap)
        diff = tuple(x - y for x, y in zip(rlead, blead))
        if any(d < 0 for d in diff):
            raise ExactDivisionError("non-exact polynomial division")
        steps += 1
        if max_steps is not None and steps > max_steps:
            raise ExactDivisionError("division effort cap exceeded")
        c = _coeff_div(rem.pop(rlead), blc)
        quot[diff] = c
        for be, bc in bterms:
            key = tuple(map(_add, be, diff))
            s = rem.get(key, 0) - c * bc
            if s:
                if key not in rem:
                    heapq.heappush(heap, tuple(-x for x in key))
                rem[key] = s
            else:
                rem.pop(key, None)
    return Polynomial._raw(vars, quot)


def divides(b: Polynomial, a: Polynomial) -> bool:
    if not _screen_divisible(a, b):
        return False
    try:
        exact_div(a, b)
        return True
    except ExactDivisionError:
        return False


# -- modular divisibility screen -------------------------------------------

_SCREEN_PRIME = 2147483629
# deterministic evaluation points; several to dodge unlucky vanishing
_SCREEN_POINTS = ((17, 5, 23, 11, 3, 29, 7, 19, 13, 31, 2, 37, 43, 41, 47, 53),
                  (5, 31, 2, 29, 17, 11, 41, 3, 23, 7, 53, 13, 19, 43, 37, 47))


def _mod_coeff(c: Coeff, p: int) -> int | None:
    if type(c) is int:
        return c % p
    d = c.denominator % p
    if d == 0:
        return None
    return c.numerator * pow(d, p - 2, p) % p


def _univar_image(poly: Polynomial, main: int, point: Sequence[int], p: int) -> list[int] | None:
    """Coefficient list of the image in GF(p)[t] after evaluating the other
    variables at ``point``; None when a coefficient denominator hits p."""
    deg = max(e[main] for e in poly.terms)
    out = [0] * (deg + 1)
    width = len(poly.vars)
    # power tables per variable
    maxdeg = [0] * width
    for e in poly.terms:
        for i, k in enumerate(e):
            if i != main and k > maxdeg[i]:
                maxdeg[i] = k
    pows: list[list[int]] = []
    for i in range(width):
        base = point[i % len(point)] % p
        row = [1] * (maxdeg[i] + 1)
        for k in range(1, maxdeg[i] + 1):
            row[k] = row[k - 1] * base % p
        pows.append(row)
    for e, c in poly.terms.items():
        m = _mod_coeff(c, p)
        if m is None:
            return None
        for i, k in enumerate(e):
            if i != main and k:
                m = m * pows[i][k] % p
        out[e[main]] = (out[e[main]] + m) % p
    while out and out[-1] == 0:
        out.pop()
    return out


def _screen_divisible(a: Polynomial, b: Polynomial) -> bool:
    """False only when b certainly does not divide a (modular refutation)."""
    if a.is_zero() or b.is_constant():
        return True
    bl = max(b.terms)
    al = max(a.terms)
    if any(x > y for x, y in zip(bl, al)):
        return False
    bm = b.monomial_content()
    am = a.monomial_content()
    if any(x > y for x, y in zip(bm, am)):
        return False
    # evaluate all but the variable of largest degree in b
    main = max(range(len(b.vars)), key=lambda i: max(e[i] for e in b.terms))
    p = _SCREEN_PRIME
    for point in _SCREEN_POINTS:
        fa = _univar_image(a, main, point, p)
        fb = _univar_image(b, main, point, p)
        if fa is None or fb is None:
            continue
        if not fb:
            if fa:
                return False
            continue
        if not fa:
            continue
        if len(fa) < len(fb):
            return False
        # synthetic division of fa by fb over GF(p)
        rem = list(fa)
        lc_inv = pow(fb[-1], p - 2, p)
        for top in range(len(rem) - 1, len(fb) - 2, -1):
            c = rem[top]
            if c == 0:
                continue
            q = c * lc_inv % p
            off = top - (len(fb) - 1)
            for i, bc in enumerate(fb):
                rem[off + i] = (rem[off + i] - q * bc) % p
        if any(rem[: len(fb) - 1]):
            return False
    return True


# -- gcd --------------------------------------------------------------------


def _primitive(p: Polynomial) -> Polynomial:
    """Scale to integer primitive form with positive lex-leading coefficient."""
    if p.is_zero():
        return p
    c = p.content()
    if p.leading()[1] < 0:
        c = -c
    if c == 1:
        return p
    return Polynomial._raw(p.vars, {e: _coeff_div(v, c) for e, v in p.terms.items()})


def _univar(p: Polynomial, i: int) -> dict[int, Polynomial]:
    out: dict[int, dict[tuple[int, ...], Coeff]] = {}
    for e, c in p.terms.items():
        k = e[i]
        out.setdefault(k, {})[e[:i] + (0,) + e[i + 1 :]] = c
    return {k: Polynomial._raw(p.vars, t) for k, t in out.items()}


def _reassemble(coeffs: dict[int, Polynomial], vars: VarTable, i: int) -> Polynomial:
    out: dict[tuple[int, ...], Coeff] = {}
    for k, poly in coeffs.items():
        for e, c in poly.terms.items():
            out[e[:i] + (k,) + e[i + 1 :]] = c
    return Polynomial._raw(vars, out)


def _uni_is_zero(f: dict[int, Polynomial]) -> bool:
    return all(p.is_zero() for p in f.values())


def _pseudo_rem(f: dict[int, Polynomial], g: dict[int, Polynomial]) -> dict[int, Polynomial]:
    """Pseudo-remainder of univariate views with polynomial coefficients."""
    dg = max(k for k, p in g.items() if not p.is_zero())
    lc_g = g[dg]
    f = {k: p for k, p in f.items() if not p.is_zero()}
    while f:
        df = max(f)
        if df < dg:
            break
        lc_f = f[df]
        new: dict[int, Polynomial] = {}
        for k, p in f.items():
            if k == df:
                continue
            new[k] = p * lc_g
        for k, p in g.items():
            if k == dg:
                continue
            shift = k + df - dg
            q = new.get(shift)
            term = p * lc_f
            new[shift] = (q - term) if q is not None else -term
        f = {k: p for k, p in new.items() if not p.is_zero()}
    return f


def _uni_content(f: dict[int, Polynomial], vars: VarTable) -> Polynomial:
    g = Polynomial.zero(vars)
    for p in f.values():
        g = poly_gcd(g, p)
        if g.is_constant() and not g.is_zero():
            break
    return g


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Greatest common divisor over the rationals, primitive and positive.

    Content-and-primitive-part recursion with a primitive pseudo-remainder
    sequence in a chosen main variable.
    """
    vars = _same_vars(a, b)
    if a.is_zero():
        return _primitive(b)
    if b.is_zero():
        return _primitive(a)
    mono_a = a.monomial_content()
    mono_b = b.monomial_content()
    mono = tuple(min(x, y) for x, y in zip(mono_a, mono_b))
    if any(mono_a):
        a = a.shift_down(mono_a)
    if any(mono_b):
        b = b.shift_down(mono_b)
    result = _poly_gcd_stripped(a, b, vars)
    if any(mono):
        result = result * Polynomial._raw(vars, {mono: 1})
    return result


def _poly_gcd_stripped(a: Polynomial, b: Polynomial, vars: VarTable) -> Polynomial:
    if a.is_constant() or b.is_constant():
        return Polynomial.const(vars, 1)
    used = a.variables_used() | b.variables_used()
    # main variable: smallest combined degree keeps the remainder sequence short
    name = min(used, key=lambda nm: (max(a.degree_in(nm), b.degree_in(nm)), nm))
    i = vars.index(name)
    fa = _univar(a, i)
    fb = _univar(b, i)
    cont_a = _uni_content(fa, vars)
    cont_b = _uni_content(fb, vars)
    cg = poly_gcd(cont_a, cont_b)
    f = {k: exact_div(p, cont_a) for k, p in fa.items()}
    g = {k: exact_div(p, cont_b) for k, p in fb.items()}
    if max(f) < max(g):
        f, g = g, f
    while True:
        if _uni_is_zero(g):
            res = f
            break
        if max(k for k, p in g.items() if not p.is_zero()) == 0:
            return _primitive(cg)
        r = _pseudo_rem(f, g)
        if not _uni_is_zero(r):
            rc = _uni_content(r, vars)
            r = {k: exact_div(p, rc) for k, p in r.items()}
        f, g = g, r
    return _primitive(cg * _reassemble(res, vars, i))


# -- rational functions ------------------------------------------------------


def _maybe_divides(f: Polynomial, num: Polynomial) -> bool:
    """Cheap necessary conditions plus the modular screen for f | num."""
    if len(f.terms) > len(num.terms):
        return False
    return _screen_divisible(num, f)


_Factors = tuple  # tuple[tuple[Polynomial, int], ...]

#: cap on quotient terms for opportunistic factor cancellation
_TRIAL_DIV_CAP = 10000


def _reduce_factored(num: Polynomial, factors: list) -> tuple[Polynomial, _Factors]:
    """Cancel denominator factors into ``num`` by repeated exact division."""
    if num.is_zero():
        return num, ()
    out = []
    for f, e in factors:
        while e > 0 and _maybe_divides(f, num):
            try:
                num = exact_div(num, f, max_steps=_TRIAL_DIV_CAP)
            except ExactDivisionError:
                break
            e -= 1
        if e > 0:
            out.append((f, e))
    return num, tuple(out)


def _merge_add(a: _Factors, b: _Factors):
    """Split two factor lists into (common, extra_a, extra_b) multisets."""
    common: list = []
    extra_a: list = []
    remaining = list(b)
    for f, e in a:
        for i, (g, k) in enumerate(remaining):
            if f == g:
                m = min(e, k)
                common.append((f, m))
                if e > m:
                    extra_a.append((f, e - m))
                if k > m:
                    remaining[i] = (g, k - m)
                else:
                    remaining.pop(i)
                break
        else:
            extra_a.append((f, e))
    return common, extra_a, remaining


def _factor_product(vars: VarTable, factors) -> Polynomial:
    out = Polynomial.const(vars, 1)
    for f, e in factors:
        out = out * f**e
    return out


#: largest num*den term-count product for which construction attempts a gcd
_GCD_REDUCTION_CAP = 4000


class RationalFunction:
    """A quotient of two polynomials over the same VarTable.

    The denominator is a multiset of integer-primitive factors with positive
    leading coefficients; the ``den`` polynomial is their product,
    materialized on demand.  See the module docstring for the reduction
    policy.
    """

    __slots__ = ("num", "factors", "_den")

    def __init__(self, num: Polynomial, den: Polynomial | None = None):
        if den is None:
            den = Polynomial.const(num.vars, 1)
        _same_vars(num, den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        num, den = self._normalize(num, den)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "factors", () if den.is_constant() else ((den, 1),))
        object.__setattr__(self, "_den", den if den.is_constant() else None)

    def __setattr__(self, name, value):
        raise AttributeError("RationalFunction is immutable")

    @staticmethod
    def _normalize(num: Polynomial, den: Polynomial) -> tuple[Polynomial, Polynomial]:
        vars = num.vars
        one = Polynomial.const(vars, 1)
        if num.is_zero():
            return num, one
        common = tuple(min(x, y) for x, y in zip(num.monomial_content(), den.monomial_content()))
        if any(common):
            num = num.shift_down(common)
            den = den.shift_down(common)
        if den.is_constant():
            c = den.constant_value()
            if c != 1:
                num = num * _coeff_div(1, c)
            return num, one
        if _screen_divisible(num, den):
            try:
                return exact_div(num, den), one
            except ExactDivisionError:
                pass
        if _screen_divisible(den, num):
            try:
                q = exact_div(den, num)
            except ExactDivisionError:
                q = None
        else:
            q = None
        if q is not None:
            # num divides den, so num/den = 1/q up to denominator scaling
            c = q.content()
            if q.leading()[1] < 0:
                c = -c
            den = Polynomial._raw(vars, {e: _coeff_div(v, c) for e, v in q.terms.items()})
            num = Polynomial.const(vars, _coeff_div(1, c))
            return num, den
        if len(num.terms) * len(den.terms) <= _GCD_REDUCTION_CAP:
            g = poly_gcd(num, den)
            if not (g.is_constant() and g.constant_value() == 1):
                num = exact_div(num, g)
                den = exact_div(den, g)
        c = den.content()
        if den.leading()[1] < 0:
            c = -c
        if c != 1:
            den = Polynomial._raw(vars, {e: _coeff_div(v, c) for e, v in den.terms.items()})
            num = num * _coeff_div(1, c)
        return num, den

    @classmethod
    def _factored(cls, num: Polynomial, factors) -> "RationalFunction":
        """Build from a numerator and a factored denominator, reducing."""
        num, factors = _reduce_factored(num, list(factors))
        self = object.__new__(cls)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "factors", factors)
        object.__setattr__(self, "_den", None if factors else Polynomial.const(num.vars, 1))
        return self

    @classmethod
    def from_poly(cls, p: Polynomial) -> "RationalFunction":
        self = object.__new__(cls)
        object.__setattr__(self, "num", p)
        object.__setattr__(self, "factors", ())
        object.__setattr__(self, "_den", Polynomial.const(p.vars, 1))
        return self

    @classmethod
    def const(cls, vars: VarTable, c) -> "RationalFunction":
        return cls.from_poly(Polynomial.const(vars, c))

    @classmethod
    def variable(cls, vars: VarTable, name: str) -> "RationalFunction":
        return cls.from_poly(Polynomial.variable(vars, name))

    @property
    def den(self) -> Polynomial:
        if self._den is None:
            object.__setattr__(self, "_den", _factor_product(self.num.vars, self.factors))
        return self._den

    @property
    def vars(self) -> VarTable:
        return self.num.vars

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_poly(self) -> bool:
        return not self.factors or self.den.is_constant()

    def as_poly(self) -> Polynomial:
        if not self.is_poly():
            raise ValueError(f"not a polynomial: {self}")
        c = self.den.constant_value()
        return self.num if c == 1 else self.num * _coeff_div(1, c)

    @staticmethod
    def _coerce(other, vars: VarTable) -> "RationalFunction":
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, Polynomial):
            return RationalFunction.from_poly(other)
        if isinstance(other, (int, Fraction)):
            return RationalFunction.const(vars, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other, self.vars)
        if other is NotImplemented:
            return NotImplemented
        if not self.factors and not other.factors:
            return RationalFunction.from_poly(self.num + other.num)
        common, extra_self, extra_other = _merge_add(self.factors, other.factors)
        num = self.num * _factor_product(self.vars, extra_other) + other.num * _factor_product(
            self.vars, extra_self
        )
        return RationalFunction._factored(num, common + extra_self + extra_other)

    __radd__ = __add__

    def __neg__(self):
        out = object.__new__(RationalFunction)
        object.__setattr__(out, "num", -self.num)
        object.__setattr__(out, "factors", self.factors)
        object.__setattr__(out, "_den", self._den)
        return out

    def __sub__(self, other):
        other = self._coerce(other, self.vars)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other, self.vars)
        if other is NotImplemented:
            return NotImplemented
        return RationalFunction._factored(
            self.num * other.num, tuple(self.factors) + tuple(other.factors)
        )

    __rmul__ = __mul__

    def _inverted_factors(self) -> tuple[Polynomial, _Factors]:
        """Return (multiplier, factors) realizing the inverse of self.num."""
        num = self.num
        if num.is_constant():
            return Polynomial.const(num.vars, _coeff_div(1, num.constant_value())), ()
        c = num.content()
        if num.leading()[1] < 0:
            c = -c
        if c == 1:
            prim = num
        else:
            prim = Polynomial._raw(num.vars, {e: _coeff_div(v, c) for e, v in num.terms.items()})
        return Polynomial.const(num.vars, _coeff_div(1, c)), ((prim, 1),)

    def __truediv__(self, other):
        other = self._coerce(other, self.vars)
        if other is NotImplemented:
            return NotImplemented
        if other.num.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        scale, inv = other._inverted_factors()
        num = self.num * _factor_product(self.vars, other.factors) * scale
        return RationalFunction._factored(num, tuple(self.factors) + inv)

    def __rtruediv__(self, other):
        other = self._coerce(other, self.vars)
        return other / self

    def __pow__(self, k: int):
        if k < 0:
            inv = RationalFunction.const(self.vars, 1) / self
            return inv ** (-k)
        return RationalFunction._factored(
            self.num**k, tuple((f, e * k) for f, e in self.factors)
        )

    def __eq__(self, other) -> bool:
        other = self._coerce(other, self.vars)
        if other is NotImplemented:
            return NotImplemented
        common, extra_self, extra_other = _merge_add(self.factors, other.factors)
        lhs = self.num * _factor_product(self.vars, extra_other)
        rhs = other.num * _factor_product(self.vars, extra_self)
        return lhs == rhs

    def __hash__(self):
        raise TypeError("RationalFunction is not hashable")

    def __str__(self):
        num = str(self.num)
        den_poly = self.den
        if den_poly.is_constant() and den_poly.constant_value() == 1:
            return num
        den = str(den_poly)
        if " " in num or "*" in num:
            num = f"({num})"
        if " " in den or "*" in den:
            den = f"({den})"
        return f"{num}/{den}"

    def __repr__(self):
        return f"<RationalFunction {self}>"


# -- substitution, truncation, matrices --------------------------------------


def eval_at(obj, name: str, value):
    """Substitute ``value`` for one variable.

    ``obj`` may be a Polynomial or RationalFunction; ``value`` a Polynomial,
    RationalFunction, Fraction or int.  Returns a Polynomial when both the
    input and the value are polynomial, otherwise a RationalFunction.
    """
    if isinstance(obj, RationalFunction):
        num = eval_at(obj.num, name, value)
        if isinstance(num, Polynomial):
            num = RationalFunction.from_poly(num)
        out = num
        for f, e in obj.factors:
            img = eval_at(f, name, value)
            if isinstance(img, Polynomial):
                img = RationalFunction.from_poly(img)
            out = out / img**e
        return out
    vars = obj.vars
    if isinstance(value, (int, Fraction)):
        value = Polynomial.const(vars, value)
    if isinstance(value, Polynomial):
        coeffs = obj.by_degree(name)
        acc = Polynomial.zero(vars)
        top = max(coeffs, default=0)
        for k in range(top, -1, -1):
            acc = acc * value
            if k in coeffs:
                acc = acc + coeffs[k]
        return acc
    if isinstance(value, RationalFunction):
        coeffs = obj.by_degree(name)
        if not coeffs:
            return RationalFunction.const(vars, 0)
        out = RationalFunction.const(vars, 0)
        power = RationalFunction.const(vars, 1)
        for k in range(max(coeffs) + 1):
            if k in coeffs:
                out = out + power * coeffs[k]
            power = power * value
        return out
    raise TypeError(f"cannot substitute value of type {type(value).__name__}")


def substitute(obj, mapping: Mapping[str, object]):
    """Substitute several variables in sequence.

    Values must not involve any of the substituted variables; under that
    contract the order of application does not matter.
    """
    out = obj
    for name, value in mapping.items():
        out = eval_at(out, name, value)
    return out


@dataclass(frozen=True)
class GradedIdealSpec:
    """Weighted-degree ideal data: weights per variable and a threshold.

    Represents the span of all monomials of weighted degree at least
    ``threshold``; unlisted variables have weight zero.
    """

    degrees: Mapping[str, int]
    threshold: int


def weighted_degree(vars: VarTable, exp: tuple[int, ...], degrees: Mapping[str, int]) -> int:
    return sum(k * degrees.get(name, 0) for name, k in zip(vars.names, exp) if k)


def truncate_graded(p: Polynomial, spec: GradedIdealSpec) -> Polynomial:
    """Reduce modulo the graded ideal: drop monomials of weighted degree >= threshold."""
    keep = {
        e: c
        for e, c in p.terms.items()
        if weighted_degree(p.vars, e, spec.degrees) < spec.threshold
    }
    return Polynomial._raw(p.vars, keep)


def reduce_mod_variables(p: Polynomial, names: Iterable[str], power: int) -> Polynomial:
    """Reduce modulo the first or second power of a variable-generated ideal.

    power 1 sets the listed variables to zero; power 2 drops every monomial
    of total degree >= 2 in the listed variables.
    """
    if power not in (1, 2):
        raise ValueError("power must be 1 or 2")
    idx = [p.vars.index(name) for name in names]
    keep = {e: c for e, c in p.terms.items() if sum(e[i] for i in idx) < power}
    return Polynomial._raw(p.vars, keep)


class PolyMatrix2:
    """A 2x2 matrix of rational functions."""

    __slots__ = ("p", "q", "r", "s")

    def __init__(
        self,
        p: RationalFunction,
        q: RationalFunction,
        r: RationalFunction,
        s: RationalFunction,
    ):
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "s", s)

    def __setattr__(self, name, value):
        raise AttributeError("PolyMatrix2 is immutable")

    @classmethod
    def identity(cls, vars: VarTable) -> "PolyMatrix2":
        one = RationalFunction.const(vars, 1)
        zero = RationalFunction.const(vars, 0)
        return cls(one, zero, zero, one)

    def __matmul__(self, other: "PolyMatrix2") -> "PolyMatrix2":
        return PolyMatrix2(
            self.p * other.p + self.q * other.r,
            self.p * other.q + self.q * other.s,
            self.r * other.p + self.s * other.r,
            self.r * other.q + self.s * other.s,
        )

    def det(self) -> RationalFunction:
        return self.p * self.s - self.q * self.r

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, PolyMatrix2)
            and self.p == other.p
            and self.q == other.q
            and self.r == other.r
            and self.s == other.s
        )

    def entries(self) -> tuple[RationalFunction, ...]:
        return (self.p, self.q, self.r, self.s)

    def __repr__(self):
        return f"[[{self.p}, {self.q}], [{self.r}, {self.s}]]"
