import random

import pytest

from exacthom.abelian import FgAbGroup, canonical_form
from exacthom.errors import InputError, ResourceBudgetError
from exacthom.grouphom import (
    FiniteGroupTable,
    FpGroupPresentation,
    GModuleFree,
    augmentation_ideal,
    coinvariants,
    four_term_report,
    fox_derivative,
    group_homology,
    group_ring,
    h1_free,
    homology_bar,
    homology_cyclic,
    magnus_sequence,
    tensor_gmodule,
    tensor_power_gmodule,
)
from exacthom.linalg import IntMatrix, hstack, vstack
from exacthom.presets import load_preset

Z2 = FiniteGroupTable.cyclic(2)
Z3 = FiniteGroupTable.cyclic(3)
Z4 = FiniteGroupTable.cyclic(4)
V4 = FiniteGroupTable.direct_product(Z2, Z2)


def test_table_validation():
    with pytest.raises(InputError):
        FiniteGroupTable.from_mult([[0, 1], [1, 1]])  # 1 has no inverse row
    with pytest.raises(InputError):
        FiniteGroupTable.from_mult([[1, 0], [0, 1]])  # identity is not 0
    # non-associative magma on 3 points
    with pytest.raises(InputError):
        FiniteGroupTable.from_mult([[0, 1, 2], [1, 0, 0], [2, 0, 1]])
    with pytest.raises(InputError):
        FiniteGroupTable.from_mult([[0, 5], [5, 0]])  # out of range


def test_table_basics():
    assert Z4.inverse == (0, 3, 2, 1)
    assert [Z4.element_order(g) for g in range(4)] == [1, 4, 2, 4]
    assert Z4.generator() == 1
    assert Z4.is_cyclic()
    assert V4.order == 4
    assert V4.generator() is None
    assert not V4.is_cyclic()
    assert FiniteGroupTable.cyclic(1).generator() == 0


def test_presentation_validation():
    FpGroupPresentation.from_strings(("a",), ("aa",), Z2, (1,))
    with pytest.raises(InputError):
        # relator does not evaluate to the identity
        FpGroupPresentation.from_strings(("a",), ("a",), Z2, (1,))
    with pytest.raises(InputError):
        # assigned elements do not generate
        FpGroupPresentation.from_strings(("a",), ("aa",), Z4, (2,))
    with pytest.raises(InputError):
        FpGroupPresentation.from_strings(("a", "a"), (), Z2, (1, 1))
    with pytest.raises(InputError):
        FpGroupPresentation.from_strings(("a",), ("ab",), Z2, (1,))


def test_presentation_words():
    pres = FpGroupPresentation.from_strings(("a", "b"), ("aaaa", "bAA"), Z4, (1, 2))
    assert pres.parse_word("aB") == ((0, 1), (1, -1))
    assert pres.evaluate(pres.parse_word("ab")) == 3
    assert pres.evaluate(pres.parse_word("A")) == 3
    assert pres.evaluate(()) == 0


def test_gmodule_validation():
    with pytest.raises(InputError):
        GModuleFree(Z2, 1, (IntMatrix.identity(1), IntMatrix.from_rows([[2]])))
    with pytest.raises(InputError):
        GModuleFree(Z2, 1, (IntMatrix.from_rows([[2]]), IntMatrix.identity(1)))
    m = GModuleFree.trivial(Z3, 2)
    assert m.rank == 2 and all(a == IntMatrix.identity(2) for a in m.action)


def test_group_ring_and_augmentation():
    zg = group_ring(Z2)
    assert zg.action[1].entries == ((0, 1), (1, 0))
    delta = augmentation_ideal(Z2)
    assert delta.rank == 1
    assert delta.action[1].entries == ((-1,),)
    d3 = augmentation_ideal(Z3)
    # t(t-1) = t^2 - t = (t^2 - 1) - (t - 1)
    assert d3.action[1].column_tuple(0) == (-1, 1)


def test_tensor_gmodule():
    zg = group_ring(Z2)
    sq = tensor_gmodule(zg, zg)
    assert sq.rank == 4
    assert coinvariants(sq) == FgAbGroup(2)  # ZG (x) ZG = ZG^2 as a G-module
    assert tensor_power_gmodule(zg, 0).rank == 1
    with pytest.raises(InputError):
        tensor_gmodule(zg, group_ring(Z3))


def test_fox_derivative_frozen():
    pres = FpGroupPresentation.from_strings(("a",), ("aa",), Z2, (1,))
    word = pres.parse_word("aa")
    # d(aa)/da = 1 + a
    assert fox_derivative(word, 0, pres) == [1, 1]
    # d(a^-1)/da = -a^-1 = -a over Z/2
    assert fox_derivative(pres.parse_word("A"), 0, pres) == [0, -1]
    assert fox_derivative((), 0, pres) == [0, 0]
    with pytest.raises(InputError):
        fox_derivative(word, 1, pres)


def test_fox_product_rule():
    preset = load_preset("Z4")
    pres = preset.presentations[1]
    table = pres.target
    zg = group_ring(table)
    rng = random.Random("grouphom-fox")
    letters = [(g, s) for g in range(len(pres.generators)) for s in (1, -1)]
    for _ in range(25):
        u = tuple(rng.choice(letters) for _ in range(rng.randint(0, 4)))
        v = tuple(rng.choice(letters) for _ in range(rng.randint(0, 4)))
        for s in range(len(pres.generators)):
            du = fox_derivative(u, s, pres)
            dv = fox_derivative(v, s, pres)
            duv = fox_derivative(u + v, s, pres)
            shifted = zg.action[pres.evaluate(u)] @ IntMatrix.column(dv)
            assert duv == [a + b for a, b in zip(du, shifted.column_tuple(0))]


def test_magnus_frozen_z2():
    pres = load_preset("Z2").presentations[0]
    ms = magnus_sequence(pres)
    assert ms.sigma.entries == ((1, -1),)
    assert ms.inclusion.column_tuple(0) == (1, 1)
    assert ms.relation_module.rank == 1
    assert ms.relation_module.action[1] == IntMatrix.identity(1)


def test_magnus_rank_and_surjectivity():
    for name in ("Z2", "Z3", "Z4", "Z2xZ2"):
        preset = load_preset(name)
        for pres in preset.presentations:
            ms = magnus_sequence(pres)
            order, gens = preset.table.order, len(pres.generators)
            assert ms.relation_module.rank == order * gens - order + 1
            assert canonical_form(ms.sigma).is_trivial()
            # the inclusion is G-equivariant into ZG^gens
            zg = group_ring(preset.table)
            for g in range(order):
                big = vstack(
                    [
                        hstack(
                            [
                                zg.action[g]
                                if i == j
                                else IntMatrix.zeros(order, order)
                                for j in range(gens)
                            ]
                        )
                        for i in range(gens)
                    ]
                )
                assert big @ ms.inclusion == ms.inclusion @ ms.relation_module.action[g]


def test_fox_vectors_span_kernel():
    pres = load_preset("Z3").presentations[0]
    ms = magnus_sequence(pres)
    stacked = []
    for s in range(len(pres.generators)):
        stacked.extend(fox_derivative(pres.relators[0], s, pres))
    image = ms.sigma @ IntMatrix.column(stacked)
    assert image.is_zero()


def test_coinvariants():
    assert coinvariants(group_ring(Z3)) == FgAbGroup(1)
    assert coinvariants(GModuleFree.trivial(Z4, 2)) == FgAbGroup(2)
    assert coinvariants(augmentation_ideal(Z2)) == FgAbGroup(0, (2,))
    assert coinvariants(GModuleFree.trivial(FiniteGroupTable.cyclic(1), 3)) == FgAbGroup(3)


def test_h1_free():
    pres = load_preset("Z2").presentations[0]
    assert h1_free(pres, GModuleFree.trivial(Z2, 1)) == FgAbGroup(1)
    assert h1_free(pres, group_ring(Z2)) == FgAbGroup(1)
    two_gen = load_preset("Z2xZ2").presentations[0]
    assert h1_free(two_gen, GModuleFree.trivial(V4, 1)) == FgAbGroup(2)
    with pytest.raises(InputError):
        h1_free(pres, GModuleFree.trivial(Z3, 1))


def test_homology_classical_table():
    for m, table in ((2, Z2), (3, Z3), (4, Z4)):
        coeff = GModuleFree.trivial(table, 1)
        expected = [
            FgAbGroup(1),
            FgAbGroup(0, (m,)),
            FgAbGroup(0),
            FgAbGroup(0, (m,)),
            FgAbGroup(0),
        ]
        for i, want in enumerate(expected):
            assert homology_cyclic(m, coeff, i) == want
            assert homology_bar(table, coeff, i) == want


def test_homology_regular_coefficients_acyclic():
    for table in (Z2, Z3):
        zg = group_ring(table)
        assert group_homology(zg, 0, method="periodic") == FgAbGroup(1)
        for i in (1, 2, 3):
            assert group_homology(zg, i, method="periodic") == FgAbGroup(0)
            assert group_homology(zg, i, method="bar") == FgAbGroup(0)


def test_homology_klein_four():
    coeff = GModuleFree.trivial(V4, 1)
    assert group_homology(coeff, 1, method="bar") == FgAbGroup(0, (2, 2))
    assert group_homology(coeff, 2, method="bar") == FgAbGroup(0, (2,))
    with pytest.raises(InputError):
        group_homology(coeff, 1, method="periodic")
    # auto falls back to the bar complex for non-cyclic tables
    assert group_homology(coeff, 1) == FgAbGroup(0, (2, 2))


def test_homology_trivial_group():
    one = FiniteGroupTable.cyclic(1)
    coeff = GModuleFree.trivial(one, 1)
    assert group_homology(coeff, 0, method="periodic") == FgAbGroup(1)
    for i in (1, 2):
        assert group_homology(coeff, i, method="periodic") == FgAbGroup(0)
        assert group_homology(coeff, i, method="bar") == FgAbGroup(0)


def test_homology_bar_budget():
    coeff = GModuleFree.trivial(Z4, 1)
    with pytest.raises(ResourceBudgetError):
        homology_bar(Z4, coeff, 3, budget=100)
    with pytest.raises(InputError):
        group_homology(coeff, 1, method="nonsense")


def test_four_term_z2_frozen():
    preset = load_preset("Z2")
    coeff = GModuleFree.trivial(preset.table, 1)
    report = four_term_report(preset.presentations[0], coeff, 1)
    assert (report.a, report.b, report.c, report.d) == (
        FgAbGroup(0),
        FgAbGroup(1),
        FgAbGroup(1),
        FgAbGroup(0, (2,)),
    )
    assert report.rank_check and report.divisibility_check
    assert report.product_check is None  # infinite middle groups
    assert report.passed


def test_four_term_presets():
    for name in ("Z2", "Z3"):
        preset = load_preset(name)
        coeff = GModuleFree.trivial(preset.table, 1)
        for pres in preset.presentations:
            for n in (1, 2):
                assert four_term_report(pres, coeff, n).passed
    with pytest.raises(InputError):
        four_term_report(
            load_preset("Z2").presentations[0],
            GModuleFree.trivial(Z3, 1),
            1,
        )
    with pytest.raises(InputError):
        four_term_report(load_preset("Z2").presentations[0],
                         GModuleFree.trivial(Z2, 1), 0)


def test_trivial_group_presentation():
    one = FiniteGroupTable.cyclic(1)
    pres = FpGroupPresentation.from_strings(("a",), ("a",), one, (0,))
    ms = magnus_sequence(pres)
    assert ms.relation_module.rank == 1
    assert four_term_report(pres, GModuleFree.trivial(one, 1), 1).passed
