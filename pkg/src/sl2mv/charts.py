"""Chart transition maps between cycle coordinates and their truncations.

For a pair of words (v, w) of length n, the coordinate charts indexed by v
and w on the space of pairs (marked points; lattice data) are glued by a
rational map.  Writing phi_+(x,a) = [[z-x, a],[0,1]] and
phi_-(x,a) = [[1,0],[a, z-x]], the transition map (x; a_1..a_n) ->
(x; b_1..b_n) is produced by a step-by-step recursion that maintains a
determinant-one matrix M_ell = [[P,Q],[R,S]] over the rational function
field intertwining the two products:

    phi_{w(ell)}(x_ell, b_ell) . M_ell = M_{ell-1} . phi_{v(ell)}(x_ell, a_ell)

Every division by (z - x_ell) demanded by the recursion must be exact; a
failure would falsify the recursion and raises RecursionFalsified.

When v and w run parallel at distance two (same letters except at the two
ends), a polynomial shadow (the tilde recursion) of the transition data
exists after merging the last n-1 marked points; its divisibility, graded
congruence and order-of-vanishing properties are what the check_* functions
verify, and they culminate in the combinatorial coefficient_rule /
inclusion_predicate pair describing which basis vectors appear in
x_- (x) y_{w'} with coefficient one.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .symbolic import (
    ExactDivisionError,
    GradedIdealSpec,
    PolyMatrix2,
    Polynomial,
    RationalFunction,
    VarTable,
    eval_at,
    exact_div,
    reduce_mod_variables,
    substitute,
    truncate_graded,
)
from .words import check_word, last_letter_significant, prefix_weights, weight


class RecursionFalsified(ArithmeticError):
    """An exact division or invertibility promise of the recursion failed."""


def transition_vars(n: int, collapse_tail: bool = False) -> VarTable:
    if collapse_tail:
        return VarTable(("z", "x") + tuple(f"a{i}" for i in range(1, n + 1)))
    return VarTable(
        ("z",) + tuple(f"x{i}" for i in range(1, n + 1)) + tuple(f"a{i}" for i in range(1, n + 1))
    )


@dataclass(frozen=True)
class TransitionState:
    """Step data: the new chart coordinate b_ell, the intertwining matrix,
    and the numerator of the denominator f_ell inverted to define it (the
    element adjoined to the coordinate ring at this step)."""

    ell: int
    b: RationalFunction
    matrix: PolyMatrix2
    f_den: Polynomial


def _phi(vars: VarTable, letter: str, xv: Polynomial, av) -> PolyMatrix2:
    rf = RationalFunction.from_poly
    z = Polynomial.variable(vars, "z")
    one = rf(Polynomial.const(vars, 1))
    zero = rf(Polynomial.zero(vars))
    a = av if isinstance(av, RationalFunction) else rf(av)
    if letter == "+":
        return PolyMatrix2(rf(z - xv), a, zero, one)
    return PolyMatrix2(one, zero, a, rf(z - xv))


def _div_zx(value: RationalFunction, zmx: Polynomial, context: str) -> RationalFunction:
    # The denominator never involves z, so dividing by (z - x_ell) amounts
    # to an exact division of the numerator.
    try:
        q = exact_div(value.num, zmx)
    except ExactDivisionError:
        raise RecursionFalsified(f"division by {zmx} failed at {context}") from None
    return RationalFunction._factored(q, value.factors)


def transition_sequence(v: str, w: str, collapse_tail: bool = False) -> list[TransitionState]:
    """Replay the transition recursion for the chart pair (v, w).

    With ``collapse_tail`` the computation happens on the partial diagonal
    where the marked points 2..n coincide: x_1 becomes the single variable
    x and x_2 = ... = x_n = 0.
    """
    check_word(v)
    check_word(w)
    n = len(v)
    if len(w) != n:
        raise ValueError("words must have equal length")
    vars = transition_vars(n, collapse_tail)
    rf = RationalFunction.from_poly
    one = rf(Polynomial.const(vars, 1))
    zero_p = Polynomial.zero(vars)
    P, Q, R, S = one, rf(zero_p), rf(zero_p), one
    z = Polynomial.variable(vars, "z")
    states: list[TransitionState] = []
    for ell in range(1, n + 1):
        if collapse_tail:
            xv = Polynomial.variable(vars, "x") if ell == 1 else zero_p
        else:
            xv = Polynomial.variable(vars, f"x{ell}")
        a = rf(Polynomial.variable(vars, f"a{ell}"))
        zmx = z - xv
        pair = (v[ell - 1], w[ell - 1])
        ctx = f"(v,w)=({v},{w}) step {ell}"
        if pair == ("+", "+"):
            num = eval_at(a * P + Q, "z", xv)
            den = eval_at(a * R + S, "z", xv)
        elif pair == ("-", "+"):
            num = eval_at(P + a * Q, "z", xv)
            den = eval_at(R + a * S, "z", xv)
        elif pair == ("+", "-"):
            num = eval_at(a * R + S, "z", xv)
            den = eval_at(a * P + Q, "z", xv)
        else:
            num = eval_at(R + a * S, "z", xv)
            den = eval_at(P + a * Q, "z", xv)
        if den.is_zero():
            raise RecursionFalsified(f"vanishing denominator at {ctx}")
        b = num / den
        if pair == ("+", "+"):
            Pn = P - b * R
            Sn = a * R + S
            Rn = zmx * R
            Qn = _div_zx(a * P + Q - b * Sn, zmx, ctx)
        elif pair == ("-", "+"):
            Rn = R + a * S
            Qn = Q - b * S
            Sn = zmx * S
            Pn = _div_zx(P + a * Q - b * Rn, zmx, ctx)
        elif pair == ("+", "-"):
            Pn = zmx * P
            Qn = a * P + Q
            Rn = R - b * P
            Sn = _div_zx(a * R + S - b * Qn, zmx, ctx)
        else:
            Pn = P + a * Q
            Qn = zmx * Q
            Rn = _div_zx(R + a * S - b * Pn, zmx, ctx)
            Sn = S - b * Q
        P, Q, R, S = Pn, Qn, Rn, Sn
        states.append(TransitionState(ell, b, PolyMatrix2(P, Q, R, S), den.num))
    return states


def check_transition_invariants(v: str, w: str, collapse_tail: bool = False) -> dict:
    """Determinant-one and intertwining identities for every step of (v, w)."""
    n = len(v)
    vars = transition_vars(n, collapse_tail)
    states = transition_sequence(v, w, collapse_tail)
    failures: list[str] = []
    prev = PolyMatrix2.identity(vars)
    zero_p = Polynomial.zero(vars)
    for ell, state in enumerate(states, start=1):
        if state.matrix.det() != RationalFunction.const(vars, 1):
            failures.append(f"det != 1 at step {ell}")
        if collapse_tail:
            xv = Polynomial.variable(vars, "x") if ell == 1 else zero_p
        else:
            xv = Polynomial.variable(vars, f"x{ell}")
        av = Polynomial.variable(vars, f"a{ell}")
        lhs = _phi(vars, w[ell - 1], xv, state.b) @ state.matrix
        rhs = prev @ _phi(vars, v[ell - 1], xv, av)
        if lhs != rhs:
            failures.append(f"intertwining identity fails at step {ell}")
        prev = state.matrix
    return {"v": v, "w": w, "failures": failures, "passed": not failures}


# ---------------------------------------------------------------------------
# Parallel pairs at distance two and the polynomial (tilde) recursion
# ---------------------------------------------------------------------------


class ParallelCase:
    """A pair (v, w) with v = +u-, w = -u+ and all derived path data.

    Heights d and running maxima D refer to the path of v; positions are
    1-based.  P is the set of '+' positions of v, S the set of significant
    positions, L the last significant '+' (equivalently the first time the
    path reaches its maximum D).
    """

    def __init__(self, v: str, w: str):
        n = len(v)
        if n < 2 or len(w) != n:
            raise ValueError("parallel pairs need equal length >= 2")
        if (v[0], w[0]) != ("+", "-") or (v[-1], w[-1]) != ("-", "+"):
            raise ValueError("expected (v(1),w(1)) = (+,-) and (v(n),w(n)) = (-,+)")
        if v[1:-1] != w[1:-1]:
            raise ValueError("interior letters must agree")
        self.v = v
        self.w = w
        self.n = n
        self.d = prefix_weights(v)  # d[0..n]
        D = [0] * (n + 1)
        for i in range(1, n + 1):
            D[i] = max(D[i - 1], self.d[i])
        self.D = D
        self.plus = {i for i in range(1, n + 1) if v[i - 1] == "+"}
        sig = set()
        for i in range(1, n + 1):
            if v[i - 1] == "+" and self.d[i] > D[i - 1]:
                sig.add(i)
        self.sig_plus = sig  # P(v) & S(v)
        self.top = D[n]
        self.L = min(i for i in sig if self.d[i] == self.top)
        self.last_letter_significant = last_letter_significant(w[1:])
        self.vars = transition_vars(n, collapse_tail=True)

    def ell_minus(self, ell: int) -> int:
        """Largest significant '+' position <= ell (position 1 qualifies)."""
        return max(i for i in self.sig_plus if i <= ell)

    def a(self, i: int) -> Polynomial:
        return Polynomial.variable(self.vars, f"a{i}")

    def x(self) -> Polynomial:
        return Polynomial.variable(self.vars, "x")

    def zt(self) -> Polynomial:
        # after merging the tail points at 0, the shifted variable equals z
        return Polynomial.variable(self.vars, "z")

    def sigma(self, ell: int) -> Polynomial:
        """Sum of a_j over down-steps j <= ell taken from the maximal height."""
        out = Polynomial.zero(self.vars)
        for j in range(2, ell + 1):
            if self.v[j - 1] == "-" and self.d[j - 1] == self.top:
                out = out + self.a(j)
        return out

    def tau(self, ell: int) -> Polynomial:
        """Sum of a_j over down-steps from height d_ell when that height is the
        running maximum."""
        h = self.d[ell]
        out = Polynomial.zero(self.vars)
        for j in range(2, self.n + 1):
            if self.v[j - 1] == "-" and self.d[j - 1] == self.D[j - 1] == h:
                out = out + self.a(j)
        return out

    def r_set(self, ell: int) -> list[int]:
        """Down-steps j <= ell taken from the current running maximum."""
        return [
            j
            for j in range(2, ell + 1)
            if self.v[j - 1] == "-" and self.d[j - 1] == self.D[j - 1]
        ]

    def graded_spec(self, threshold: int) -> GradedIdealSpec:
        degrees = {"x": 1}
        for i in self.sig_plus:
            degrees[f"a{i}"] = self.top + 1 - self.d[i]
        return GradedIdealSpec(degrees, threshold)

    def __repr__(self):
        return f"ParallelCase(v={self.v!r}, w={self.w!r})"


def parallel_cases(n: int) -> Iterator[ParallelCase]:
    """All parallel-at-distance-two pairs of length n."""
    if n < 2:
        return
    for middle in itertools.product("-+", repeat=n - 2):
        m = "".join(middle)
        yield ParallelCase("+" + m + "-", "-" + m + "+")


@dataclass(frozen=True)
class TildeState:
    ell: int
    p: Polynomial
    q: Polynomial
    c: Polynomial | None  # set when ell is a '+' position of w


@dataclass(frozen=True)
class TildeData:
    states: tuple[TildeState, ...]  # steps 1..n-1
    c_final: Polynomial

    def c(self, ell: int) -> Polynomial:
        if ell == len(self.states) + 1:
            return self.c_final
        value = self.states[ell - 1].c
        if value is None:
            raise KeyError(f"no c-polynomial at step {ell}")
        return value

    def c_positions(self) -> list[int]:
        out = [s.ell for s in self.states if s.c is not None]
        out.append(len(self.states) + 1)
        return out


def tilde_sequence(case: ParallelCase) -> TildeData:
    """The polynomial shadow of the transition recursion for a parallel pair.

    Produces P~_ell, Q~_ell for ell <= n-1 and the elimination polynomials
    c~_ell for the '+' positions of w, including the final
    c~_n = (P~_{n-1} + a_n Q~_{n-1})(0).
    """
    zt = case.zt()
    x = case.x()
    p = zt - x
    q = case.a(1)
    states = [TildeState(1, p, q, None)]
    for ell in range(2, case.n):
        a = case.a(ell)
        c: Polynomial | None = None
        if case.v[ell - 1] == "+":
            if ell in case.sig_plus:
                combo = a * p + q
                c = combo.eval_zero("z")
                q = exact_div(combo - c, zt)
            else:
                c = a
                q = exact_div(q - q.eval_zero("z"), zt)
        else:
            p = p + a * q
            q = zt * q
        states.append(TildeState(ell, p, q, c))
    c_final = (p + case.a(case.n) * q).eval_zero("z")
    return TildeData(tuple(states), c_final)


def check_induc_congruences(case: ParallelCase, substitution: bool | None = None) -> dict:
    """Divisibility z^(D_ell - d_ell) | Q~_ell, plus substitution shadows.

    The substitution part enforces the relations c~_j = 0 (for '+' positions
    j of w) by solving for the significant a_j and checks that the collapsed
    transition data P_ell, Q_ell then agree with P~_ell, Q~_ell and that the
    numerators of the b_j vanish.  On by default for n <= 6.
    """
    n = case.n
    if substitution is None:
        substitution = n <= 6
    data = tilde_sequence(case)
    failures: list[str] = []
    zt = case.zt()
    for state in data.states:
        gap = case.D[state.ell] - case.d[state.ell]
        if gap and not state.q.is_zero():
            rem = state.q
            try:
                for _ in range(gap):
                    rem = exact_div(rem, zt)
            except ExactDivisionError:
                failures.append(f"z^{gap} does not divide Q~_{state.ell}")
    if substitution:
        failures.extend(_substitution_shadow(case, data))
    return {"v": case.v, "w": case.w, "failures": failures, "passed": not failures}


def _substitution_shadow(case: ParallelCase, data: TildeData) -> list[str]:
    failures: list[str] = []
    states = transition_sequence(case.v, case.w, collapse_tail=True)
    rf = RationalFunction.from_poly
    submap: dict[str, RationalFunction] = {}
    for j in sorted(p for p in case.plus if 2 <= p <= case.n - 1):
        if j in case.sig_plus:
            prev = data.states[j - 2]
            num = substitute(rf(prev.q.eval_zero("z")), submap)
            den = substitute(rf(prev.p.eval_zero("z")), submap)
            if den.is_zero():
                failures.append(f"substitution for a{j} hit a zero denominator")
                return failures
            value = -(num / den)
        else:
            value = RationalFunction.const(case.vars, 0)
        submap[f"a{j}"] = value
    for state, tstate in zip(states[: case.n - 1], data.states):
        try:
            for name, got, want in (
                ("P", state.matrix.p, tstate.p),
                ("Q", state.matrix.q, tstate.q),
            ):
                if substitute(got, submap) != substitute(rf(want), submap):
                    failures.append(f"{name}_{state.ell} != {name}~_{state.ell} after substitution")
        except ZeroDivisionError:
            failures.append(f"denominator vanished while reducing step {state.ell}")
            return failures
        if case.w[state.ell - 1] == "+" and 2 <= state.ell <= case.n - 1:
            try:
                if not substitute(state.b, submap).is_zero():
                    failures.append(f"b_{state.ell} does not vanish on the cycle locus")
            except ZeroDivisionError:
                failures.append(f"denominator vanished while reducing b_{state.ell}")
    return failures


def check_valtilde(case: ParallelCase) -> dict:
    """Graded congruences for P~, Q~ and the elimination polynomials c~."""
    data = tilde_sequence(case)
    zt = case.zt()
    x = case.x()
    D = case.top
    j2 = case.graded_spec(2)
    failures: list[str] = []
    aL = case.a(case.L)
    for state in data.states:
        ell = state.ell
        if ell <= case.L:
            if not truncate_graded(state.p - (zt - x), j2).is_zero():
                failures.append(f"P~_{ell} != z - x mod J_2")
        if ell >= case.L:
            expected = aL * case.sigma(ell) - x
            if not truncate_graded(state.p.eval_zero("z") - expected, j2).is_zero():
                failures.append(f"P~_{ell}(0) != a_L*sigma_{ell} - x mod J_2")
        lm = case.ell_minus(ell)
        gap = case.D[ell] - case.d[ell]
        spec = case.graded_spec(D + 2 - case.d[lm])
        if not truncate_graded(state.q - zt**gap * case.a(lm), spec).is_zero():
            failures.append(f"Q~_{ell} != z^{gap}*a_{lm} mod J_{D + 2 - case.d[lm]}")
    for ell in sorted(case.sig_plus):
        if ell < 2 or ell > case.n - 1:
            continue
        lm = case.ell_minus(ell - 1)
        spec = case.graded_spec(D + 3 - case.d[ell])
        got = data.c(ell)
        expected = -case.a(ell) * x + case.a(lm)
        if not truncate_graded(got - expected, spec).is_zero():
            failures.append(f"c~_{ell} != -a_{ell}*x + a_{lm} mod J_{D + 3 - case.d[ell]}")
    if case.last_letter_significant:
        expected = aL * case.sigma(case.n) - x
        if not truncate_graded(data.c_final - expected, j2).is_zero():
            failures.append("c~_n != a_L*sigma_n - x mod J_2")
    return {"v": case.v, "w": case.w, "failures": failures, "passed": not failures}


def check_prepnaka(case: ParallelCase) -> dict:
    """Order-one congruences modulo the cycle ideal and its square.

    Requires the last letter of w' to be significant.  The ideal is
    generated by x and the a_ell with v(ell) = '+'.
    """
    if not case.last_letter_significant:
        raise ValueError("the last letter of w' must be significant")
    data = tilde_sequence(case)
    pvars = ["x"] + [f"a{i}" for i in sorted(case.plus)]
    zt = case.zt()
    x = case.x()
    failures: list[str] = []
    for state in data.states:
        ell = state.ell
        if not reduce_mod_variables(state.p - zt, pvars, 1).is_zero():
            failures.append(f"P~_{ell} != z mod p")
        gap = case.D[ell] - case.d[ell]
        lm = case.ell_minus(ell)
        if not reduce_mod_variables(state.q - zt**gap * case.a(lm), pvars, 2).is_zero():
            failures.append(f"Q~_{ell} != z^{gap}*a_{lm} mod p^2")
        acc = Polynomial.zero(case.vars)
        for j in case.r_set(ell):
            acc = acc + case.a(case.ell_minus(j - 1)) * case.a(j)
        if not reduce_mod_variables(state.p.eval_zero("z") - (-x + acc), pvars, 2).is_zero():
            failures.append(f"P~_{ell}(0) != -x + sum over R({ell}) mod p^2")
    acc = Polynomial.zero(case.vars)
    for ell in sorted(case.sig_plus):
        acc = acc + case.a(ell) * case.tau(ell)
    if not reduce_mod_variables(data.c_final - (-x + acc), pvars, 2).is_zero():
        failures.append("c~_n != -x + sum a_ell*tau_ell mod p^2")
    for ell in sorted(case.plus - case.sig_plus):
        if 2 <= ell <= case.n - 1 and data.c(ell) != case.a(ell):
            failures.append(f"c~_{ell} != a_{ell} for the insignificant '+' at {ell}")
    return {"v": case.v, "w": case.w, "failures": failures, "passed": not failures}


def check_exclusion(case: ParallelCase) -> dict:
    """When the last letter of w' is not significant, Q~_{n-1}(0) must vanish."""
    data = tilde_sequence(case)
    value = data.states[case.n - 2].q.eval_zero("z")
    ok = case.last_letter_significant or value.is_zero()
    failures = [] if ok else [f"Q~_{case.n - 1}(0) = {value} != 0"]
    return {"v": case.v, "w": case.w, "failures": failures, "passed": not failures}


def elimination_demo(case: ParallelCase) -> dict:
    """Eliminate the significant interior variables from the cycle equations.

    Starting from g = c~_n x^(D-1) + sum c~_ell sigma_n x^(d_ell - 2), each
    interior significant variable a_ell is removed by the resultant-style
    substitution a_ell^s -> (-P~_{ell-1}(0))^(r-s) Q~_{ell-1}(0)^s.  The
    routine tracks an exact membership certificate g = sum u_j c~_j and the
    exponent q of the Newton-polygon congruence

        g = x^q (a_1 sigma_n - x^D)  modulo terms of weighted degree > q + D

    and verifies all of it exactly.  Demonstration-scale: intended for small
    lengths; requires the last letter of w' to be significant.
    """
    if not case.last_letter_significant:
        raise ValueError("the last letter of w' must be significant")
    data = tilde_sequence(case)
    x = case.x()
    D = case.top
    sigma_n = case.sigma(case.n)
    a1 = case.a(1)
    failures: list[str] = []
    mids = [p for p in sorted(case.sig_plus) if 2 <= p <= case.n - 1]
    cert: dict[int, Polynomial] = {case.n: x ** (D - 1)}
    g = data.c_final * cert[case.n]
    for ell in mids:
        cert[ell] = sigma_n * x ** (case.d[ell] - 2)
        g = g + data.c(ell) * cert[ell]
    q_exp = 0

    def newton_ok(poly: Polynomial, q: int) -> bool:
        spec = case.graded_spec(q + D + 1)
        return truncate_graded(poly - x**q * (a1 * sigma_n - x**D), spec).is_zero()

    if not newton_ok(g, q_exp):
        failures.append("initial combination misses the Newton congruence")
    scale_record: dict[int, int] = {}
    for ell in reversed(mids):
        name = f"a{ell}"
        coeffs = g.by_degree(name)
        r = max(coeffs)
        scale_record[ell] = r
        if r == 0:
            continue
        prev = data.states[ell - 2]
        np_val = -prev.p.eval_zero("z")
        qv = prev.q.eval_zero("z")
        a_ell = case.a(ell)
        new_g = Polynomial.zero(case.vars)
        multiplier = Polynomial.zero(case.vars)
        for s, h in coeffs.items():
            new_g = new_g + h * np_val ** (r - s) * qv**s
            if s >= 1:
                geom = Polynomial.zero(case.vars)
                for t in range(s):
                    geom = geom + qv**t * (a_ell * np_val) ** (s - 1 - t)
                multiplier = multiplier + h * np_val ** (r - s) * geom
        for j in list(cert):
            cert[j] = cert[j] * np_val**r
        cert[ell] = cert[ell] + multiplier
        g = new_g
        q_exp += r
        if g.degree_in(name) != 0:
            failures.append(f"variable a{ell} survived its elimination step")
        if not newton_ok(g, q_exp):
            failures.append(f"Newton congruence lost after eliminating a{ell}")
    allowed = {"x", "a1"} | {f"a{j}" for j in range(2, case.n + 1) if case.v[j - 1] == "-"}
    extra = g.variables_used() - allowed
    if extra:
        failures.append(f"final polynomial involves forbidden variables {sorted(extra)}")
    recombined = Polynomial.zero(case.vars)
    for j, u in cert.items():
        recombined = recombined + u * data.c(j)
    if recombined != g:
        failures.append("membership certificate does not reproduce g")
    lead = x ** (D - 1)
    for ell in mids:
        prev = data.states[ell - 2]
        lead = lead * (-prev.p.eval_zero("z")) ** scale_record.get(ell, 0)
    if cert[case.n] != lead:
        failures.append("certificate coefficient of c~_n is not the expected unit product")
    return {
        "v": case.v,
        "w": case.w,
        "q": q_exp,
        "failures": failures,
        "passed": not failures,
    }


# ---------------------------------------------------------------------------
# The final expansion rule
# ---------------------------------------------------------------------------


def coefficient_rule(v: str, w: str) -> Fraction:
    """Coefficient of y_v in the expansion of x_- (x) y_{w'}.

    Here w = -w' with wt(v) = wt(w).  The coefficient is 1 when v = w, and
    otherwise when v starts with '+', rejoins the path of w for the first
    time at position m while running parallel at distance two, matches w
    after m, and the letter of w at the rejoining block boundary is
    significant; every other case gives 0.
    """
    check_word(v)
    check_word(w)
    n = len(v)
    if len(w) != n or not n:
        raise ValueError("words must have equal positive length")
    if w[0] != "-":
        raise ValueError("w must start with '-'")
    if weight(v) != weight(w):
        raise ValueError("words must have equal weight")
    if v == w:
        return Fraction(1)
    if v[0] == "-":
        return Fraction(0)
    dv = prefix_weights(v)
    dw = prefix_weights(w)
    m = next(j for j in range(2, n + 1) if dv[j] == dw[j])
    if v[m:] != w[m:]:
        return Fraction(0)
    if v[1 : m - 1] != w[1 : m - 1]:
        return Fraction(0)
    # paths rejoin for the first time at m, so (v(m), w(m)) = (-, +) and the
    # block of w before the matching suffix is w(2..m)
    return Fraction(1) if last_letter_significant(w[1:m]) else Fraction(0)


def inclusion_predicate(v: str, w: str) -> bool:
    """Whether the cycle of v lies inside the closure attached to w.

    Preconditions: (v(1), w(1)) = (+,-), equal weights, and the path of v
    strictly above the path of w away from the endpoints.  True exactly for
    the parallel-at-distance-two configuration whose last w'-letter is
    significant.
    """
    n = len(v)
    if len(w) != n or n < 2:
        raise ValueError("words must have equal length >= 2")
    if (v[0], w[0]) != ("+", "-"):
        raise ValueError("expected (v(1),w(1)) = (+,-)")
    if weight(v) != weight(w):
        raise ValueError("words must have equal weight")
    dv = prefix_weights(v)
    dw = prefix_weights(w)
    if any(dv[j] <= dw[j] for j in range(1, n)):
        raise ValueError("the path of v must stay strictly above the path of w")
    if v[1:-1] != w[1:-1] or (v[-1], w[-1]) != ("-", "+"):
        return False
    return last_letter_significant(w[1:])


def random_word_pairs(n: int, count: int, seed: int) -> list[tuple[str, str]]:
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        v = "".join(rng.choice("-+") for _ in range(n))
        w = "".join(rng.choice("-+") for _ in range(n))
        out.append((v, w))
    return out
