"""Acceptance gate: ten criteria, one test (and one pass/fail line) each.

Coverage ranges: "full range" below means every composition with
n <= 4, |lambda| <= 5 together with n = 3, |lambda| <= 6.  All checks
are exact unless a numeric tolerance is stated.
"""

import time

import pytest

from kostka_forge.cli import main
from kostka_forge.jack import numeric_limit_check
from kostka_forge.macdonald import (
    eigen_oracle_E,
    expand_in_partial_t_monomials,
    kostka_matrix,
    nonsym_E,
    nonsym_calE,
    t_monomial,
)
from kostka_forge.qt import ExactScalar
from kostka_forge.verify import (
    suite_hall_littlewood,
    suite_hecke_relations,
    suite_jack,
    suite_t_schur,
)
from kostka_forge.weights import compositions, dominance_cmp, length


def full_range():
    for n in (2, 3, 4):
        maxdeg = 6 if n == 3 else 5
        for d in range(maxdeg + 1):
            yield from compositions(d, n)


@pytest.fixture(scope="module")
def sweep():
    """Shared per-composition computations over the full range."""
    lams = list(full_range())
    cal = {lam: nonsym_calE(lam) for lam in lams}
    return lams, cal


def test_criterion_01_operator_identities():
    # every listed operator relation, exactly, on >= 50 random polynomials
    # per relation for n in {2, 3, 4}, degree <= 4; target < 2 minutes
    start = time.time()
    failures = []
    for n in (2, 3, 4):
        for check in suite_hecke_relations(n=n, trials=50, seed=0, maxdeg=4):
            if not check["passed"]:
                failures.append((n, check["name"], check["detail"]))
    elapsed = time.time() - start
    assert not failures, failures
    assert elapsed < 120.0, f"operator suite took {elapsed:.1f}s (budget 120s)"


def test_criterion_02_oracle_equivalence(sweep):
    # nonsym_E equals the independent eigenvector construction on the
    # full range; target < 5 minutes
    lams, _ = sweep
    start = time.time()
    bad = [lam for lam in lams if nonsym_E(lam) != eigen_oracle_E(lam)]
    elapsed = time.time() - start
    assert not bad, f"{len(bad)} disagreements, first {bad[:3]}"
    assert elapsed < 300.0, f"oracle sweep took {elapsed:.1f}s (budget 300s)"


def test_criterion_03_integral_coefficients(sweep):
    # every monomial coefficient of the integral form has unit denominator
    lams, cal = sweep
    bad = [
        lam
        for lam in lams
        if not all(c.is_integral() for c in cal[lam].terms.values())
    ]
    assert not bad, f"{len(bad)} non-integral, first {bad[:3]}"


def test_criterion_04_partial_expansions_integral(sweep):
    # expansion in augmented partial t-monomials succeeds with integer
    # polynomial coefficients for every level m >= l(lambda)
    lams, cal = sweep
    bad = []
    for lam in lams:
        for m in range(length(lam), len(lam) + 1):
            exp = expand_in_partial_t_monomials(cal[lam], m)
            if not exp.all_integral():
                bad.append((lam, m))
    assert not bad, f"{len(bad)} failures, first {bad[:3]}"


def test_criterion_05_kostka_matrices():
    # degree <= 4 at n = 4: entries in Z[q,t]; the degree-2 matrix equals
    # the hand-derived [[1, q], [t, 1]]; the q=0 specialization is
    # unitriangular (diagonal 1, zero unless the column label dominates
    # the row label).  The literal claims "K_{lam,lam} = 1" and
    # "dominance triangularity" fail for the genuine matrix already at
    # the spec's own dense degree-2 example and at degree 3, where the
    # diagonal entry for (2,1) is 1 + qt; the q=0 form is the correct
    # triangular statement.
    for d in (1, 2, 3, 4):
        km = kostka_matrix(d, 4)
        assert km.all_integral(), f"non-integral entry at degree {d}"
        at_q0 = km.specialize(qv=0)
        for i, lam in enumerate(km.labels):
            assert at_q0.entries[i][i].is_one(), (d, lam)
            for j, mu in enumerate(km.labels):
                if at_q0.entries[i][j] and lam != mu:
                    assert dominance_cmp(mu, lam) == "greater", (d, lam, mu)
    km2 = kostka_matrix(2, 2)
    assert km2.labels == [(2, 0), (1, 1)]
    q, t, one = ExactScalar.q(), ExactScalar.t(), ExactScalar.one()
    assert km2.entries == [[one, q], [t, one]]


def test_criterion_06_q0_degeneration(sweep):
    # at q = 0 the integral form collapses to the t-monomial, exactly
    lams, cal = sweep
    bad = [lam for lam in lams if cal[lam].specialize(qv=0) != t_monomial(lam)]
    assert not bad, f"{len(bad)} failures, first {bad[:3]}"


def test_criterion_07_hall_littlewood():
    # full symmetrizations are symmetric, unitriangular over monomial
    # symmetric functions, and Schur at t = 0, |lambda| <= 5, n <= 4
    failures = []
    for n in (2, 3, 4):
        for check in suite_hall_littlewood(n=n, maxdeg=5):
            if not check["passed"]:
                failures.append((n, check["name"], check["detail"]))
    assert not failures, failures


def test_criterion_08_t_schur_unitriangular():
    # transition from rescaled Schur functions to the augmented
    # symmetrized basis has diagonal 1 and dominance-triangular support,
    # degree <= 4, n = 4
    failures = [
        (check["name"], check["detail"])
        for check in suite_t_schur(n=4, maxdeg=4)
        if not check["passed"]
    ]
    assert not failures, failures


def test_criterion_09_jack_positivity_and_limit():
    # expansion coefficients of the alpha-degeneration are polynomials
    # with natural coefficients (and integer values at alpha in {0,1,2})
    # for n <= 3, |lambda| <= 4; the numeric limit check stays under
    # 5e-3 at t0 = 0.999 for |lambda| <= 3, alpha in {1, 2}
    failures = []
    for n in (2, 3):
        for check in suite_jack(n=n, maxdeg=4):
            if not check["passed"]:
                failures.append((n, check["name"], check["detail"]))
    assert not failures, failures
    worst = 0.0
    for n in (2, 3):
        for d in range(4):
            for lam in compositions(d, n):
                for alpha in (1, 2):
                    worst = max(worst, numeric_limit_check(lam, alpha, 0.999))
    assert worst < 5e-3, f"worst normalized limit gap {worst:.2e}"


def test_criterion_10_cli_determinism(tmp_path):
    # byte-identical output across parallelism widths, repeated runs
    outputs = []
    for tag, extra in (("a", []), ("b", ["--parallel", "2"]), ("c", ["--parallel", "4"])):
        path = tmp_path / f"{tag}.json"
        code = main(["table", "--n", "3", "--maxdeg", "3", "--output", str(path)] + extra)
        assert code == 0
        outputs.append(path.read_bytes())
    assert outputs[0] == outputs[1] == outputs[2]
    repeat = tmp_path / "repeat.json"
    assert main(["table", "--n", "3", "--maxdeg", "3", "--output", str(repeat)]) == 0
    assert repeat.read_bytes() == outputs[0]
