"""Structure checks: graded splittings, spans, closures, and reports.

Derived expectations are recomputed here through independent routes
(plain rational elimination and the recursive product-rule bracket) before
being compared with the package's Bareiss-based results.
"""

from fractions import Fraction

import pytest

from liepoisson.liealg import builtin
from liepoisson.orbit import casimir_orbit
from liepoisson.poisson import PoissonContext
from liepoisson.poly import Polynomial, monomials_of_degree, parse_polynomial
from liepoisson.structure import (
    Membership,
    VerificationReport,
    derived_membership,
    derived_span,
    ideal_square_check,
    invariants_basis,
    nonexactness_check,
    poisson_ideal_closure,
    simplicity_probe,
    verify_heisenberg,
    verify_homogeneous_ideals,
    verify_prop1,
    verify_thm2,
)

from oracles import leibniz_bracket, rref_rank

SL2R = builtin("sl2r")
SO3 = builtin("so3")
FREE_SL2R = PoissonContext.free(SL2R)


def sl2(text):
    return parse_polynomial(text, SL2R.names)


def oracle_invariant_dimension(algebra, degree):
    """Kernel dimension of the stacked generator-bracket operators.

    Assembled with the recursive-Leibniz bracket and ranked by plain
    rational elimination, independently of the package's span machinery.
    """
    mons = monomials_of_degree(algebra.dim, degree)
    index = {m: i for i, m in enumerate(mons)}
    stacked = []
    for i in range(algebra.dim):
        gen = algebra.variable(i)
        block = [[Fraction(0)] * len(mons) for _ in mons]
        for col, m in enumerate(mons):
            image = leibniz_bracket(algebra, gen, Polynomial.monomial(algebra.dim, m))
            for mm, c in image.terms.items():
                block[index[mm]][col] = c
        stacked.extend(block)
    return len(mons) - rref_rank(stacked)


def oracle_linear_bracket_span_rank(algebra, degree):
    """Rank of the degree slice of brackets with linear generators."""
    mons = monomials_of_degree(algebra.dim, degree)
    index = {m: i for i, m in enumerate(mons)}
    rows = []
    for i in range(algebra.dim):
        gen = algebra.variable(i)
        for m in mons:
            image = leibniz_bracket(algebra, gen, Polynomial.monomial(algebra.dim, m))
            row = [Fraction(0)] * len(mons)
            for mm, c in image.terms.items():
                row[index[mm]] = c
            rows.append(row)
    return rref_rank(rows) if rows else 0


def test_invariants_of_sl2r_degree2_is_the_casimir_line():
    sub = invariants_basis(SL2R, 2)
    assert sub.rank == 1
    q = sl2("x^2 + y^2 - z^2")
    assert sub.contains(q)
    for i in range(3):
        assert FREE_SL2R.bracket(q, SL2R.variable(i)) == Polynomial.zero(3)


def test_invariants_degree3_empty_and_degree0_constants():
    assert invariants_basis(SL2R, 3).rank == 0
    assert invariants_basis(SL2R, 0).rank == 1


@pytest.mark.parametrize("algebra", [SL2R, SO3])
def test_invariant_dimensions_match_oracle(algebra):
    got = [invariants_basis(algebra, n).rank for n in range(5)]
    expected = [oracle_invariant_dimension(algebra, n) for n in range(5)]
    assert got == expected == [1, 0, 1, 0, 1]


def test_derived_span_ranks_match_oracle():
    assert derived_span(FREE_SL2R, 2, 3).rank == oracle_linear_bracket_span_rank(SL2R, 2) == 5
    assert derived_span(FREE_SL2R, 0, 1).rank == 0
    H = builtin("heisenberg", 1)
    ctx = casimir_orbit(H, 1).context
    sub = derived_span(ctx, 0, 1)
    assert sub.rank == 1
    assert sub.contains(Polynomial.constant(3, 1))


def test_derived_span_monotone_in_source_bound():
    ctx = casimir_orbit(SL2R, 1).context
    previous = None
    for bound in range(2, 6):
        sub = derived_span(ctx, 2, bound, all_pairs=True)
        if previous is not None:
            assert sub.rank >= previous.rank
            for row in previous.basis:
                p = Polynomial(3, {m: c for m, c in zip(previous.monomials, row) if c})
                assert sub.contains(p)
        previous = sub


@pytest.mark.parametrize("m,n", [(m, n) for m in range(1, 5) for n in range(m, 5) if m + n <= 6])
def test_pair_span_equals_linear_span_degreewise(m, n):
    # brackets of degree-m with degree-n elements span no more than brackets
    # of generators with degree-(m+n-1) elements, and the splitting forces equality
    degree = m + n - 1
    mons = monomials_of_degree(3, degree, FREE_SL2R.order)
    index = {mm: i for i, mm in enumerate(mons)}

    def vec(p):
        row = [Fraction(0)] * len(mons)
        for mm, c in p.terms.items():
            row[index[mm]] = c
        return row

    from liepoisson.linalg import RowBasis

    pair_rows = RowBasis(len(mons))
    for ma in monomials_of_degree(3, m):
        for mb in monomials_of_degree(3, n):
            br = FREE_SL2R.bracket(Polynomial.monomial(3, ma), Polynomial.monomial(3, mb))
            if br:
                pair_rows.insert(vec(br))
    linear_rows = RowBasis(len(mons))
    for i in range(3):
        for mb in monomials_of_degree(3, degree):
            br = FREE_SL2R.bracket(SL2R.variable(i), Polynomial.monomial(3, mb))
            if br:
                linear_rows.insert(vec(br))
    assert pair_rows.reduced_rows() == linear_rows.reduced_rows()


PROP1_SL2R_DIMS = [
    (0, 1, 1, 0),
    (1, 3, 0, 3),
    (2, 6, 1, 5),
    (3, 10, 0, 10),
    (4, 15, 1, 14),
]


@pytest.mark.parametrize("algebra", [SL2R, SO3])
def test_prop1_dimension_table(algebra):
    report = verify_prop1(algebra, 4)
    assert report.verdict == "pass"
    got = [
        (r["degree"], r["dims"]["ambient"], r["dims"]["center"], r["dims"]["derived"])
        for r in report.records
    ]
    assert got == PROP1_SL2R_DIMS
    for r in report.records:
        assert r["dims"]["union"] == r["dims"]["ambient"]


def test_prop1_fails_for_heisenberg():
    report = verify_prop1(builtin("heisenberg", 1), 2)
    assert report.verdict == "fail"
    assert report.notes
    by_degree = {r["degree"]: r for r in report.records}
    assert by_degree[0]["verdict"] == "pass"
    assert by_degree[1]["verdict"] == "fail"
    assert by_degree[1]["witness"] == "z"


def test_membership_on_the_hyperboloid():
    ctx = casimir_orbit(SL2R, 1).context
    one = Polynomial.constant(3, 1)
    for bound in range(4):
        assert derived_membership(ctx, one, bound) is Membership.NOT_IN_SPAN_AT_BOUND
    assert derived_membership(ctx, sl2("x"), 3) is Membership.IN_SPAN


def test_membership_on_the_heisenberg_orbit():
    H = builtin("heisenberg", 1)
    ctx = casimir_orbit(H, 1).context
    assert derived_membership(ctx, Polynomial.constant(3, 1), 2) is Membership.IN_SPAN


def test_pure_squares_split_off_a_constant():
    # x^2 - 1/3 is a bracket combination on the hyperboloid but x^2 is not:
    # admitting x^2 would put the constant 1/3 in the bracket span
    ctx = casimir_orbit(SL2R, 1).context
    assert derived_membership(ctx, sl2("x^2") - Fraction(1, 3), 5) is Membership.IN_SPAN
    assert derived_membership(ctx, sl2("x^2"), 5) is Membership.NOT_IN_SPAN_AT_BOUND


def test_verify_thm2_two_sided():
    report = verify_thm2(casimir_orbit(SL2R, 1), 4, monomial_degree_cap=2)
    assert report.verdict == "pass"
    kinds = {r["check"] for r in report.records}
    assert kinds == {"constants", "monomial"}


def test_verify_heisenberg_counterexample():
    report = verify_heisenberg(casimir_orbit(builtin("heisenberg", 1), 1), 2)
    assert report.verdict == "pass"


def test_closure_reaches_one_on_the_hyperboloid():
    orbit = casimir_orbit(SL2R, 1)
    closure = poisson_ideal_closure(orbit.context, [SL2R.variable(2)], 3)
    assert closure.contains_one
    assert not closure.proper_at_bound
    produced = {orbit.format(e) for _, e in closure.elements}
    assert "-y" in produced and "x" in produced  # picked up via brackets with z
    assert len(closure.elements) == closure.rank


def test_closure_on_the_cone_is_the_positive_degree_subspace():
    orbit = casimir_orbit(SL2R, 0)
    closure = poisson_ideal_closure(orbit.context, [SL2R.variable(2)], 5)
    assert not closure.contains_one
    assert closure.proper_at_bound
    assert closure.rank == closure.dimension - 1
    const_col = closure.monomials.index((0, 0, 0))
    assert all(row[const_col] == 0 for row in closure.basis)
    assert closure.is_graded()


def test_closure_of_shifted_casimir_is_its_multiples():
    q = sl2("x^2 + y^2 - z^2")
    closure = poisson_ideal_closure(FREE_SL2R, [q - 1], 4)
    # multiples m*(q-1) with deg m <= 2: exactly the 10 monomial multipliers
    assert closure.rank == 10
    assert closure.contains(q - 1)
    assert closure.contains((q - 1) * sl2("x"))
    assert not closure.contains_one
    assert closure.proper_at_bound
    assert not closure.is_graded()


def test_closure_input_validation():
    with pytest.raises(ValueError):
        poisson_ideal_closure(FREE_SL2R, [], 3)
    with pytest.raises(ValueError):
        poisson_ideal_closure(FREE_SL2R, [Polynomial.zero(3)], 3)
    orbit = casimir_orbit(SL2R, 1)
    with pytest.raises(ValueError):
        poisson_ideal_closure(orbit.context, [orbit.relation], 3)  # reduces to zero


def test_simplicity_probe_semisimple_orbit():
    orbit = casimir_orbit(SL2R, 1)
    trials = [sl2("x"), sl2("z"), sl2("x + y")]
    report = simplicity_probe(orbit, trials, 4)
    assert report.verdict == "pass"
    assert all(r["contains_one"] for r in report.records)


def test_simplicity_probe_nilpotent_orbit():
    orbit = casimir_orbit(SL2R, 0)
    report = simplicity_probe(orbit, [sl2("z")], 4)
    assert report.verdict == "pass"
    summary = report.records[-1]
    assert summary["check"] == "exists_proper_closure"
    assert summary["found"]


def test_simplicity_probe_heisenberg_orbit_reaches_one():
    H = builtin("heisenberg", 1)
    orbit = casimir_orbit(H, 1)
    report = simplicity_probe(orbit, [H.variable(0)], 3)
    assert report.verdict == "pass"
    assert report.records[0]["contains_one"]
    assert report.notes  # untagged orbit: informational only


def test_simplicity_probe_rejects_constant_generator():
    orbit = casimir_orbit(SL2R, 1)
    with pytest.raises(ValueError):
        simplicity_probe(orbit, [Polynomial.constant(3, 2)], 3)
    with pytest.raises(ValueError):
        # x^2+y^2-z^2 is the constant 1 on this orbit
        simplicity_probe(orbit, [sl2("x^2 + y^2 - z^2")], 3)


def test_homogeneous_ideals_on_the_cone():
    cone = casimir_orbit(SL2R, 0)
    report = verify_homogeneous_ideals(cone, 1, 4)
    assert report.verdict == "pass"
    grading = [r for r in report.records if r["check"] == "bracket_grading"]
    record_22 = next(r for r in grading if r["degrees"] == [2, 2])
    assert record_22["verdict"] == "pass"
    ideal = [r for r in report.records if r["check"] == "ideal"][0]
    assert ideal["proper"] and ideal["graded"] and not ideal["contains_one"]


def test_homogeneous_ideals_rejects_bad_inputs():
    cone = casimir_orbit(SL2R, 0)
    with pytest.raises(ValueError):
        verify_homogeneous_ideals(cone, 0, 4)
    hyp = casimir_orbit(SL2R, 1)
    with pytest.raises(ValueError):
        verify_homogeneous_ideals(hyp, 1, 4)


def test_nonexactness_small_bound():
    report = nonexactness_check(casimir_orbit(SL2R, 1), 2)
    assert report.verdict == "pass"
    ones = [r for r in report.records if r["check"] == "target_one"]
    assert [r["feasible"] for r in ones] == [False, False, False]
    control = [r for r in report.records if r["check"] == "target_zero_control"][0]
    assert control["feasible"]
    assert "witness" in control


def test_nonexactness_requires_the_hyperboloid():
    with pytest.raises(ValueError):
        nonexactness_check(casimir_orbit(SL2R, 0), 2)
    with pytest.raises(ValueError):
        nonexactness_check(casimir_orbit(builtin("so3"), 1), 2)


def test_ideal_square_variable_in_free_algebra():
    report = ideal_square_check(FREE_SL2R, [sl2("x")], 4)
    assert report.verdict == "pass"
    strict = [r for r in report.records if r["check"] == "strict_inclusion"][0]
    assert strict["witness"] == "x"
    closure = [r for r in report.records if r["check"] == "bracket_closure"][0]
    assert not closure["ideal_closed"]  # (x) is not a Lie ideal, so no requirement


def test_ideal_square_positive_degree_ideal_on_cone():
    cone = casimir_orbit(SL2R, 0)
    gens = [SL2R.variable(i) for i in range(3)]
    report = ideal_square_check(cone.context, gens, 4)
    assert report.verdict == "pass"
    dims = [r for r in report.records if r["check"] == "truncation_dims"][0]["dims"]
    # positive-degree and degree->=2 truncations on the cone at degree 4
    assert dims == {"ambient": 25, "ideal": 24, "square": 21}
    closure = [r for r in report.records if r["check"] == "bracket_closure"][0]
    assert closure["ideal_closed"] and closure["square_closed"]


def test_ideal_square_shifted_casimir():
    q = sl2("x^2 + y^2 - z^2")
    report = ideal_square_check(FREE_SL2R, [q - 1], 4)
    assert report.verdict == "pass"
    closure = [r for r in report.records if r["check"] == "bracket_closure"][0]
    assert closure["ideal_closed"] and closure["square_closed"]


def test_report_serialization_is_deterministic():
    r1 = verify_prop1(SL2R, 2)
    r2 = verify_prop1(SL2R, 2)
    assert r1.to_json() == r2.to_json()
    assert r1.render_text() == r2.render_text()
    assert "overall: pass" in r1.render_text()


def test_report_verdict_follows_records():
    report = VerificationReport("demo", {})
    assert report.verdict == "pass"
    report.records.append({"verdict": "pass"})
    assert report.passed
    report.records.append({"verdict": "fail"})
    assert report.verdict == "fail"
