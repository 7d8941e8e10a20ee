"""Named verification suites aggregating the per-module check functions.

Each suite runs a battery of exhaustive identities up to a size bound and
returns a JSON-friendly report {suite, n_max, checks: [...], passed}.  The
same reports back the command line driver and the acceptance tests.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor

from . import basis, charts, rep, words
from .exactalg import TensorVector


def _check(name: str, failures: list, detail: str = "") -> dict:
    status = "pass" if not failures else "fail"
    entry = {"name": name, "status": status, "detail": detail}
    if failures:
        entry["counterexamples"] = [str(f) for f in failures[:5]]
    return entry


def _suite(name: str, n_max: int, checks: list[dict]) -> dict:
    return {
        "suite": name,
        "n_max": n_max,
        "checks": checks,
        "passed": all(c["status"] == "pass" for c in checks),
    }


def suite_words(n_max: int) -> dict:
    checks = []
    fails: list = []
    for n in range(n_max + 1):
        for w in words.enumerate_words(n):
            data = words.crystal(w)
            if words.weight(w) != data.phi - data.eps:
                fails.append(f"wt != phi - eps for {w}")
            if data.ell != data.eps + data.phi:
                fails.append(f"ell mismatch for {w}")
            if (data.ell == 0) != words.is_semistable(w):
                fails.append(f"semistable/ell mismatch for {w}")
            if len(words.flip_set(w)) != data.phi:
                fails.append(f"flip set size != phi for {w}")
    checks.append(_check("weight_eps_phi", fails, "wt = phi - eps, ell = eps + phi, |flips| = phi"))

    fails = []
    for n in range(n_max + 1):
        for w in words.enumerate_words(n):
            fact = words.factorize(w)
            if fact.reassemble() != w:
                fails.append(f"reassembly failed for {w}")
            if fact.r - fact.s != words.weight(w):
                fails.append(f"r - s != wt for {w}")
            if not all(words.is_semistable(b) for b in fact.blocks):
                fails.append(f"non-semistable block in {w}")
            profile = words.path_profile(w)
            plus = tuple(p for p in fact.sig_positions[: fact.r])
            if profile.significant_plus_positions() != plus:
                fails.append(f"path/factorization disagreement for {w}")
    checks.append(_check("factorization", fails, "unique semistable factorization data"))

    fails = []
    for n in range(n_max + 1):
        for w in words.enumerate_words(n):
            data = words.crystal(w)
            if data.e_result is not None:
                back = words.crystal(data.e_result)
                if back.f_result != w:
                    fails.append(f"f(e({w})) != {w}")
                if words.weight(data.e_result) != words.weight(w) + 2:
                    fails.append(f"wt(e({w})) wrong")
            if data.f_result is not None:
                back = words.crystal(data.f_result)
                if back.e_result != w:
                    fails.append(f"e(f({w})) != {w}")
                if words.weight(data.f_result) != words.weight(w) - 2:
                    fails.append(f"wt(f({w})) wrong")
    checks.append(_check("crystal_axioms", fails, "letter flips are mutually inverse"))

    fails = []
    for n in range(2, n_max + 1):
        for middle in words.enumerate_words(n - 2):
            v = "+" + middle + "-"
            wprime = middle + "+"
            d = words.prefix_weights(v)
            running = 0
            for i in range(1, n):
                running = max(running, d[i])
            by_path = d[n - 1] == running
            if words.last_letter_significant(wprime) != by_path:
                fails.append(f"last-letter rule fails for middle {middle!r}")
    checks.append(_check("last_letter_rule", fails, "significance of the appended letter via d, D"))
    return _suite("words", n_max, checks)


def suite_basis(n_max: int, insert_max: int = 4) -> dict:
    checks = []
    rep_c = basis.check_characterization(min(n_max, 8), insert_max)
    checks.append(_check("characterization", rep_c["failures"], f"checked {rep_c['checked']} identities"))

    fails: list = []
    for n in range(n_max + 1):
        for w in words.enumerate_words(n):
            if basis.factor_product(w) != basis.y_in_x(w):
                fails.append(w)
    checks.append(_check("factorization_product", fails, "block tensor product reproduces the basis"))

    fails = []
    for n in range(n_max + 1):
        r = basis.check_unitriangularity(n)
        fails.extend(r["failures"])
    checks.append(_check("unitriangularity", fails, "unitriangular, nonnegative, path-dominated"))

    fails = []
    for n in range(n_max + 1):
        for w in words.enumerate_words(n):
            if basis.expand_in_y(basis.y_in_x(w)) != TensorVector.unit(w, "y"):
                fails.append(w)
            wt = words.weight(w)
            for v in basis.x_in_y(w).terms:
                if len(v) != len(w) or words.weight(v) != wt:
                    fails.append(f"{w} -> {v}")
    checks.append(_check("roundtrip_homogeneity", fails, "inverse expansions; weight preserved"))
    return _suite("basis", n_max, checks)


def suite_rep(n_max: int) -> dict:
    checks = []
    fails: list = []
    for n in range(n_max + 1):
        r = rep.check_crystal_compat(n)
        fails.extend(r["failures"])
    checks.append(_check("crystal_compatibility", fails, "e, f act by crystal flips mod lower layers"))

    r = rep.check_invariants(min(2 * (n_max // 2), 12))
    checks.append(_check("invariant_dimensions", r["failures"], "Catalan counts; exact annihilation"))

    fails = []
    for n in range(n_max + 1):
        r = rep.check_layer_dimensions(n, oracle_max=8)
        fails.extend(r["failures"])
    checks.append(_check("layer_dimensions", fails, "multiplicity formula and Casimir kernels"))

    fails = []
    for n in range(n_max + 1):
        r = rep.check_filtration_stability(n)
        fails.extend(r["failures"])
    checks.append(_check("filtration_stability", fails, "layers are subrepresentations"))

    fails = []
    for n in range(min(n_max, 6) + 1):
        r = rep.check_cartan_projection(n)
        fails.extend(r["failures"])
    checks.append(_check("cartan_projection", fails, "idempotent, equivariant, kills lower layers"))

    fails = []
    shapes = [(n,) for n in range(1, min(n_max, 6) + 1)]
    shapes += [(2, 1), (1, 2), (2, 2), (3, 2), (2, 1, 2)]
    for shape in shapes:
        if sum(shape) > max(n_max, 2):
            continue
        r = rep.check_shape_basis(shape)
        fails.extend(r["failures"])
    checks.append(_check("shape_bases", fails, "blockwise projections of the basis"))
    return _suite("rep", n_max, checks)


def suite_charts(n_max: int, seed: int = 0, random_pairs: int = 500, threads: int = 1) -> dict:
    """Transition identities for all pairs up to min(n_max, 5), random pairs
    at n = 6 when n_max allows, and the parallel-pair polynomial batteries
    up to min(n_max, 7)."""
    checks = []
    pairs: list[tuple[str, str]] = []
    for n in range(1, min(n_max, 5) + 1):
        for v in words.enumerate_words(n):
            for w in words.enumerate_words(n):
                pairs.append((v, w))
    if n_max >= 6:
        pairs.extend(charts.random_word_pairs(6, random_pairs, seed))

    def run(pair):
        v, w = pair
        return charts.check_transition_invariants(v, w)

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(run, pairs))
    else:
        results = [run(p) for p in pairs]
    fails = [f"({r['v']},{r['w']}): {r['failures'][0]}" for r in results if not r["passed"]]
    checks.append(
        _check("transition_invariants", fails, f"det = 1 and intertwining for {len(pairs)} pairs")
    )

    induc_fails: list = []
    val_fails: list = []
    naka_fails: list = []
    excl_fails: list = []
    elim_fails: list = []
    for n in range(2, min(n_max, 7) + 1):
        for case in charts.parallel_cases(n):
            r = charts.check_induc_congruences(case)
            induc_fails.extend(f"({case.v},{case.w}): {m}" for m in r["failures"])
            r = charts.check_valtilde(case)
            val_fails.extend(f"({case.v},{case.w}): {m}" for m in r["failures"])
            r = charts.check_exclusion(case)
            excl_fails.extend(f"({case.v},{case.w}): {m}" for m in r["failures"])
            if case.last_letter_significant:
                r = charts.check_prepnaka(case)
                naka_fails.extend(f"({case.v},{case.w}): {m}" for m in r["failures"])
                if n <= 5:
                    r = charts.elimination_demo(case)
                    elim_fails.extend(f"({case.v},{case.w}): {m}" for m in r["failures"])
    checks.append(_check("tilde_divisibility", induc_fails, "power-of-z divisibility and substitution shadow"))
    checks.append(_check("tilde_graded_congruences", val_fails, "graded congruences of the tilde data"))
    checks.append(_check("tilde_cycle_congruences", naka_fails, "congruences mod the cycle ideal and its square"))
    checks.append(_check("tilde_exclusion", excl_fails, "vanishing constant term for insignificant endings"))
    checks.append(_check("elimination_demo", elim_fails, "variable elimination with exact certificates"))
    return _suite("charts", n_max, checks)


def suite_theorem(n_max: int) -> dict:
    """The combinatorial expansion rule against the linear-algebra oracle.

    For every w starting with '-' and every v of equal length and weight,
    the rule value must match the coefficient of y_v in the expansion of
    x_- (x) y_{w'}, and all coefficients must be 0 or 1.
    """
    fails: list = []
    count = 0
    for n in range(1, n_max + 1):
        for w in words.enumerate_words(n):
            if w[0] != "-":
                continue
            oracle = basis.expand_in_y(TensorVector.unit("-").tensor(basis.y_in_x(w[1:])))
            if any(c not in (0, 1) for c in oracle.terms.values()):
                fails.append(f"non 0/1 coefficient in expansion for w={w}")
            target = words.weight(w)
            for v in words.enumerate_words(n):
                if words.weight(v) != target:
                    continue
                count += 1
                if charts.coefficient_rule(v, w) != oracle.coeff(v):
                    fails.append(f"rule mismatch at (v,w)=({v},{w})")
    checks = [_check("coefficient_rule_oracle", fails, f"{count} coefficients compared")]
    return _suite("theorem", n_max, checks)


SUITES = {
    "words": suite_words,
    "basis": suite_basis,
    "rep": suite_rep,
    "charts": suite_charts,
    "theorem": suite_theorem,
}


def run_suite(name: str, n_max: int, seed: int = 0, threads: int = 1) -> dict:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    if name == "charts":
        return suite_charts(n_max, seed=seed, threads=threads)
    return SUITES[name](n_max)
