import random
from fractions import Fraction

import pytest

from conftest import biword_combination, load_golden
from shufflealg.lincomb import LinComb
from shufflealg.biwords import (
    UNIT_BIWORD,
    biword,
    coproduct_prec_lc,
    coproduct_succ_lc,
    enumerate_biwords,
    internal_compose_lc,
)
from shufflealg.descent import (
    DendMonomial,
    GradedSeries,
    biword_count,
    convolution_inverse,
    descd_dimension,
    descd_membership,
    descd_spanning_set,
    dimension_report,
    exp_prec,
    identity_series,
    p_n,
    pi_composite,
    pi_n,
    prec_logarithm,
    prim_dend_dimension,
    rank,
    series_star,
)
from shufflealg.verify import check_idempotents, check_pi_primitive, check_pn_coproducts
from shufflealg.words import compositions


def test_p_small():
    assert p_n(0) == LinComb.single(UNIT_BIWORD)
    assert p_n(1) == LinComb.single(biword((1,), (1,)))
    assert p_n(2) == biword_combination([["1|2", 1], ["12|11", 1]])
    assert p_n(3) == biword_combination(
        [["1|3", 1], ["12|12", 1], ["12|21", 1], ["123|111", 1]]
    )


def test_p_n_term_count():
    for n in range(1, 8):
        assert len(p_n(n)) == 2 ** (n - 1)


def test_pi_routes_agree():
    for n in range(1, 7):
        closed = pi_n(n, "closed")
        assert closed == LinComb.single(biword((1,), (n,)))
        assert pi_n(n, "alternating") == closed
        assert pi_n(n, "recursive") == closed


def test_pi_alternating_n2_unrolled():
    from shufflealg.biwords import biword_prec_lc

    assert p_n(2) - biword_prec_lc(p_n(1), p_n(1)) == pi_n(2)


def test_pi_rejects_bad_input():
    with pytest.raises(ValueError):
        pi_n(0)
    with pytest.raises(ValueError):
        pi_n(3, route="sideways")


def test_pi_composite():
    assert pi_composite((3,)) == LinComb.single(biword((1,), (3,)))
    assert pi_composite((1, 1)) == LinComb.single(biword((1, 2), (1, 1)))
    # the nested idempotent is the identity biword with those degrees
    assert pi_composite((2, 1, 3)) == LinComb.single(biword((1, 2, 3), (2, 1, 3)))


def test_pi_composite_completeness():
    for n in range(1, 6):
        total = LinComb.zero()
        for comp in compositions(n):
            total = total + pi_composite(comp)
        assert total == p_n(n)


def test_pi_composite_rejects_empty():
    with pytest.raises(ValueError):
        pi_composite(())


def test_pi_family_orthogonal_idempotents():
    comps = list(compositions(4))
    values = {c: pi_composite(c) for c in comps}
    for c1 in comps:
        for c2 in comps:
            prod = internal_compose_lc(values[c1], values[c2])
            assert prod == (values[c1] if c1 == c2 else LinComb.zero())


def test_prec_logarithm_of_identity():
    q = identity_series(6)
    mu = prec_logarithm(q)
    for n in range(1, 7):
        assert mu.component(n) == pi_n(n)
    assert mu.component(0).is_zero()


def test_prec_logarithm_of_unit_is_zero():
    assert prec_logarithm(GradedSeries.unit()) == GradedSeries.zero()


def test_prec_logarithm_rejects_bad_constant_term():
    with pytest.raises(ValueError):
        prec_logarithm(GradedSeries({1: p_n(1)}))


def test_graded_series_rejects_mixed_weights():
    with pytest.raises(ValueError):
        GradedSeries({2: p_n(3)})


def _random_graded_series(seed: int, max_weight: int) -> GradedSeries:
    rng = random.Random(seed)
    comps = {0: LinComb.single(UNIT_BIWORD)}
    for n in range(1, max_weight + 1):
        pool = enumerate_biwords(n, (1, 2))
        terms = {}
        for b in rng.sample(pool, min(3, len(pool))):
            terms[b] = Fraction(rng.randint(-2, 2), rng.randint(1, 3))
        comps[n] = LinComb(terms)
    return GradedSeries(comps)


@pytest.mark.parametrize("seed", [1, 2, 3])
def test_logarithm_exponential_roundtrip(seed):
    cutoff = 4
    q = _random_graded_series(seed, cutoff)
    mu = prec_logarithm(q, cutoff)
    assert exp_prec(mu, cutoff) == q
    assert prec_logarithm(exp_prec(mu, cutoff), cutoff) == mu


def test_convolution_inverse_inverts():
    cutoff = 4
    q = _random_graded_series(7, cutoff)
    z = convolution_inverse(q, cutoff)
    assert series_star(q, z, cutoff) == GradedSeries.unit()


def test_spanning_set_small():
    n1 = descd_spanning_set(1)
    assert len(n1) == 1
    assert n1[0][1] == pi_n(1)

    golden = load_golden("descd_bases.json")
    n2 = descd_spanning_set(2)
    assert [str(m) for m, _ in n2] == golden["2"]["monomials"]
    assert [v for _, v in n2] == [biword_combination(c) for c in golden["2"]["combinations"]]


def test_spanning_set_counts():
    # compositions into k parts contribute Catalan(k-1) * 2^(k-1) trees each
    from math import comb

    def catalan(k):
        return comb(2 * k, k) // (k + 1)

    for n in range(1, 6):
        expected = sum(
            comb(n - 1, k - 1) * catalan(k - 1) * 2 ** (k - 1) for k in range(1, n + 1)
        )
        assert len(descd_spanning_set(n)) == expected


def test_spanning_set_rank_small():
    assert descd_dimension(3) == 10
    assert len(descd_spanning_set(3)) == 13


def test_monomial_rendering():
    mono = DendMonomial(("<", 1, (">", 1, 1)))
    assert str(mono) == "pi1 < (pi1 > pi1)"
    assert mono.weight == 3


def test_rank_edge_cases():
    assert rank([]) == 0
    v = biword_combination([["12|11", 1], ["21|11", 2]])
    assert rank([v, v * Fraction(3, 2)]) == 1
    with pytest.raises(ValueError):
        rank([LinComb.single(biword((1,), (1,))), LinComb.single(biword((1,), (2,)))])


def test_rank_weight_4_spanning_values():
    assert rank([v for _, v in descd_spanning_set(4)]) == 36


def test_membership():
    for n in range(1, 6):
        assert descd_membership(p_n(n), n)
    assert not descd_membership(LinComb.single(biword((2, 1, 3), (1, 1, 1))), 3)
    pair = biword_combination([["213|111", 1], ["231|111", 1]])
    assert descd_membership(pair, 3)


def test_membership_rejects_weight_mismatch():
    with pytest.raises(ValueError):
        descd_membership(p_n(2), 3)


def test_golden_basis_families_span_and_belong():
    golden = load_golden("descd_bases.json")
    for n_text, data in golden.items():
        n = int(n_text)
        vectors = [biword_combination(c) for c in data["combinations"]]
        assert rank(vectors) == descd_dimension(n) == len(vectors)
        for v in vectors:
            assert descd_membership(v, n)


def test_internal_products_leave_descd():
    # exhaustively compose the weight-3 golden basis; at least one product
    # escapes the span, e.g. the single biword 213|111
    golden = load_golden("descd_bases.json")
    vectors = [biword_combination(c) for c in golden["3"]["combinations"]]
    escaped = []
    for x in vectors:
        for y in vectors:
            prod = internal_compose_lc(x, y)
            if prod.is_zero():
                continue
            if not descd_membership(prod, 3):
                escaped.append((x, y, prod))
    assert escaped
    culprit = LinComb.single(biword((2, 1, 3), (1, 1, 1)))
    assert any(prod == culprit for _, _, prod in escaped)


def test_prim_dimensions_full_space():
    assert [prim_dend_dimension(n, "full_S") for n in range(1, 5)] == [1, 1, 2, 10]


def test_prim_dimensions_descd():
    # the idempotents span the primitives: one dimension per weight
    assert [prim_dend_dimension(n, "descd") for n in range(1, 7)] == [1] * 6


def test_prim_dimension_cutoff():
    with pytest.raises(ValueError):
        prim_dend_dimension(9, "full_S")
    with pytest.raises(ValueError):
        prim_dend_dimension(2, "everything")


def test_pn_coproduct_and_pi_primitive_suites():
    assert check_pn_coproducts(6) == []
    assert check_pi_primitive(6) == []


def test_idempotent_suite_weight_4():
    assert check_idempotents(4) == []


def test_pi_n_half_coproducts_vanish():
    for n in range(1, 7):
        assert coproduct_prec_lc(pi_n(n)).is_zero()
        assert coproduct_succ_lc(pi_n(n)).is_zero()


def test_biword_count_formula():
    for n in range(7):
        assert biword_count(n) == len(enumerate_biwords(n))


def test_dimension_report_values_and_flags():
    report = dimension_report(6, rank_cutoff=4, prim_cutoff=3)
    assert report.ok
    by_n = {row.n: row for row in report.rows}
    assert [by_n[n].descd_closed for n in range(1, 7)] == [1, 3, 10, 36, 137, 543]
    assert [by_n[n].biword_series for n in range(1, 7)] == [1, 3, 11, 49, 261, 1631]
    assert by_n[4].descd_rank == 36
    assert by_n[5].descd_rank is None
    assert by_n[3].prim_kernel == 2
    assert by_n[4].prim_kernel is None
    assert [by_n[n].prim_series for n in range(1, 6)] == [1, 1, 2, 10, 70]


def test_dimension_report_series_extension():
    report = dimension_report(9, include=("descd", "series"), rank_cutoff=3)
    by_n = {row.n: row for row in report.rows}
    assert report.ok
    for n in range(1, 10):
        assert by_n[n].descd_closed == by_n[n].descd_catalan
    # A002212 three-term recurrence: (n+1) a_n = 3(2n-1) a_{n-1} - 5(n-2) a_{n-2}
    values = {0: 1}
    values.update({n: by_n[n].descd_closed for n in range(1, 10)})
    for n in range(2, 10):
        assert (n + 1) * values[n] == 3 * (2 * n - 1) * values[n - 1] - 5 * (n - 2) * values[n - 2]


def test_dimension_report_rejects_unknown_column():
    with pytest.raises(ValueError):
        dimension_report(3, include=("rainbows",))
