from math import comb

import pytest

from conftest import biword_combination, load_golden
from shufflealg.lincomb import LinComb
from shufflealg.biwords import (
    UNIT_BIWORD,
    Biword,
    BiwordParseError,
    biword,
    biword_from_json,
    biword_prec,
    biword_prec_by_descents,
    biword_star,
    biword_succ,
    biword_succ_by_descents,
    biword_to_json,
    coproduct_prec,
    coproduct_succ,
    enumerate_biwords,
    enumerate_biwords_by_size,
    hopf_coproduct,
    internal_compose,
    parse_biword,
    render_biword,
    standardize,
    tensor_biword,
)
from shufflealg.series import biword_count_series
from shufflealg.verify import check_biword_bialgebra, check_biword_bidendriform, check_biword_dendriform


def test_standardize():
    assert standardize((3, 1)) == (2, 1)
    assert standardize(range(1, 5)) == (1, 2, 3, 4)
    assert standardize((3, 1, 4)) == (2, 1, 3)


def test_standardize_rejects_repeats():
    with pytest.raises(ValueError):
        standardize((2, 2))


def test_biword_validation():
    with pytest.raises(ValueError):
        Biword((1, 3), (1, 1))
    with pytest.raises(ValueError):
        Biword((1,), (0,))
    with pytest.raises(ValueError):
        Biword((1, 2), (1,))


def test_tensor():
    assert tensor_biword(biword((1,), (1,)), biword((1,), (2,))) == biword((1, 2), (1, 2))
    assert tensor_biword(biword((2, 1), (3, 4)), biword((1,), (5,))) == biword((2, 1, 3), (3, 4, 5))
    assert tensor_biword(biword((2, 1), (1, 1)), UNIT_BIWORD) == biword((2, 1), (1, 1))


def test_worked_products_match_golden():
    golden = load_golden("biword_products.json")
    for kind, fn in (("prec", biword_prec), ("succ", biword_succ)):
        case = golden[kind]
        lhs = parse_biword(case["lhs"])
        rhs = parse_biword(case["rhs"])
        assert fn(lhs, rhs) == biword_combination(case["expected"])


def test_star_is_union_of_halves():
    golden = load_golden("biword_products.json")
    lhs = parse_biword(golden["prec"]["lhs"])
    rhs = parse_biword(golden["prec"]["rhs"])
    expected = biword_combination(golden["prec"]["expected"]) + biword_combination(
        golden["succ"]["expected"]
    )
    assert biword_star(lhs, rhs) == expected
    assert len(biword_star(lhs, rhs)) == comb(4, 2)


def test_prec_simple_cases():
    x = biword((1,), (1,))
    y = biword((1,), (2,))
    assert biword_prec(x, y) == LinComb.single(biword((1, 2), (1, 2)))
    assert biword_succ(x, y) == LinComb.single(biword((2, 1), (2, 1)))


def test_product_unit_conventions():
    x = biword((2, 1), (1, 1))
    assert biword_prec(x, UNIT_BIWORD) == LinComb.single(x)
    assert biword_prec(UNIT_BIWORD, x).is_zero()
    assert biword_prec(UNIT_BIWORD, UNIT_BIWORD).is_zero()
    assert biword_succ(UNIT_BIWORD, x) == LinComb.single(x)
    assert biword_succ(x, UNIT_BIWORD).is_zero()
    assert biword_star(UNIT_BIWORD, x) == LinComb.single(x)
    assert biword_star(x, UNIT_BIWORD) == LinComb.single(x)
    assert biword_star(UNIT_BIWORD, UNIT_BIWORD) == LinComb.single(UNIT_BIWORD)


def test_prec_term_count():
    a = biword((1, 2), (1, 1))
    b = biword((2, 1, 3), (1, 1, 1))
    assert len(biword_prec(a, b)) == comb(4, 3)
    assert len(biword_star(a, b)) == comb(5, 2)


def test_descents_oracle_agrees():
    pool = [UNIT_BIWORD]
    for w in (1, 2, 3):
        pool.extend(enumerate_biwords(w, (1, 2)))
    for x in pool:
        for y in pool:
            if x.weight + y.weight > 4:
                continue
            assert biword_prec(x, y) == biword_prec_by_descents(x, y), (x, y)
            assert biword_succ(x, y) == biword_succ_by_descents(x, y), (x, y)


def test_worked_coproducts_match_golden():
    golden = load_golden("half_coproducts.json")
    x = parse_biword(golden["input"])
    for kind, fn in (("prec", coproduct_prec), ("succ", coproduct_succ)):
        expected = LinComb.zero()
        for left, right, coeff in golden[kind]:
            expected = expected + LinComb.single(
                (parse_biword(left), parse_biword(right)), int(coeff)
            )
        assert fn(x) == expected


def test_coproduct_small_cases():
    assert coproduct_prec(biword((1,), (1,))).is_zero()
    assert coproduct_prec(biword((1, 2), (1, 2))) == LinComb.single(
        (biword((1,), (1,)), biword((1,), (2,)))
    )
    assert coproduct_succ(biword((1, 2), (1, 1))).is_zero()
    assert coproduct_succ(biword((2, 1), (1, 2))) == LinComb.single(
        (biword((1,), (1,)), biword((1,), (2,)))
    )


def test_coproduct_rejects_unit():
    with pytest.raises(ValueError):
        coproduct_prec(UNIT_BIWORD)
    with pytest.raises(ValueError):
        coproduct_succ(UNIT_BIWORD)


def test_hopf_coproduct():
    unit = LinComb.single(UNIT_BIWORD)
    assert hopf_coproduct(unit) == LinComb.single((UNIT_BIWORD, UNIT_BIWORD))
    single = biword((1,), (1,))
    assert hopf_coproduct(LinComb.single(single)) == LinComb(
        {(single, UNIT_BIWORD): 1, (UNIT_BIWORD, single): 1}
    )
    x = biword((1, 2), (1, 2))
    assert hopf_coproduct(LinComb.single(x)) == LinComb(
        {
            (x, UNIT_BIWORD): 1,
            (UNIT_BIWORD, x): 1,
            (biword((1,), (1,)), biword((1,), (2,))): 1,
        }
    )


def test_internal_compose_worked_example():
    result = internal_compose(biword((3, 1, 2), (1, 1, 1)), biword((1, 3, 2), (1, 1, 1)))
    assert result == LinComb.single(biword((2, 1, 3), (1, 1, 1)))


def test_internal_compose_identity():
    x = biword((3, 1, 2), (2, 1, 1))
    ident = biword((1, 2, 3), x.deg)
    assert internal_compose(ident, x) == LinComb.single(x)


def test_internal_compose_annihilation():
    assert internal_compose(biword((1, 2), (1, 1)), biword((1, 2, 3), (1, 1, 1))).is_zero()
    # same size, incompatible degrees
    assert internal_compose(biword((2, 1), (1, 2)), biword((1, 2), (1, 1))).is_zero()


def test_internal_compose_associative():
    pool = []
    for k in (0, 1, 2, 3):
        pool.extend(enumerate_biwords_by_size(k, (1, 2)))
    for x in pool:
        for y in pool:
            xy = internal_compose(x, y)
            for z in pool:
                lhs = LinComb.zero()
                for k, c in xy.terms().items():
                    lhs = lhs + internal_compose(k, z) * c
                rhs = LinComb.zero()
                for k, c in internal_compose(y, z).terms().items():
                    rhs = rhs + internal_compose(x, k) * c
                assert lhs == rhs, (x, y, z)


def test_counts_match_series():
    r = biword_count_series()
    for n in range(7):
        assert len(enumerate_biwords(n)) == r[n]


def test_enumeration_has_no_duplicates():
    for n in range(5):
        pool = enumerate_biwords(n)
        assert len(set(pool)) == len(pool)


def test_dendriform_axioms_weight_5():
    assert check_biword_dendriform(5) == []


def test_bidendriform_compatibilities_weight_4():
    assert check_biword_bidendriform(4) == []


def test_bialgebra_weight_5():
    assert check_biword_bialgebra(5) == []


def test_render_and_parse():
    x = biword((3, 1, 4, 2), (1, 2, 3, 4))
    assert render_biword(x) == "3142|1234"
    assert parse_biword("3142|1234") == x
    assert parse_biword("3,1,4,2|1,2,3,4") == x
    assert parse_biword("12|ab") == biword((1, 2), (1, 2))
    assert parse_biword("") == UNIT_BIWORD
    assert parse_biword("1") == UNIT_BIWORD
    assert render_biword(UNIT_BIWORD) == "1"
    big = Biword(tuple(range(1, 11)), tuple([1] * 10))
    assert parse_biword(render_biword(big)) == big


def test_parse_errors():
    with pytest.raises(BiwordParseError):
        parse_biword("12")
    with pytest.raises(BiwordParseError) as err:
        parse_biword("12|1x")
    assert err.value.position == 4
    with pytest.raises(BiwordParseError):
        parse_biword("13|11")


def test_json_roundtrip():
    x = biword((2, 1), (5, 1))
    assert biword_from_json(biword_to_json(x)) == x


def test_matrix_rendering():
    from shufflealg.biwords import render_biword_matrix

    x = biword((3, 1, 4, 2), (1, 12, 3, 4))
    assert render_biword_matrix(x) == "( 3  1 4 2 )\n( 1 12 3 4 )"
    assert render_biword_matrix(UNIT_BIWORD) == "( )"
