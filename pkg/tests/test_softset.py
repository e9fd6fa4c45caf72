"""Soft-set construction, subset/equality, and the combination operators."""

import numpy as np
import pytest

from phisoft import (
    PFN,
    PFParameter,
    build,
    constant_set,
    equals,
    extended_intersection,
    extended_union,
    is_subset,
    null_set,
    restricted_intersection,
    restricted_union,
    whole_set,
)
from phisoft.errors import (
    DuplicateId,
    EmptyIntersection,
    InvalidPFN,
    MissingCell,
    NotPythagorean,
    UniverseMismatch,
)
from conftest import (
    INTERSECTION_GOLDEN,
    INTERSECTION_IMPORTANCES,
    RESTRICTED_NAMES,
    TABLE1_CELLS,
    TABLE1_PARAMS,
    UNION_GOLDEN,
    UNION_IMPORTANCES,
    UNIVERSE,
)


class TestBuild:
    def test_builds_the_worked_table(self, table1):
        assert table1.universe == UNIVERSE
        assert table1.parameter_names == ("s1", "s3", "s5", "s6")
        assert table1.cell("p1", "s1") == PFN(0.7, 0.7)
        assert table1.parameter("s3").importance == PFN(0.7, 0.2)

    def test_degenerate_empty_parameter_list(self):
        s = build(["p1", "p2"], [], {})
        assert s.parameters == ()
        assert s.row("p1") == ()

    def test_duplicate_parameter_names(self):
        with pytest.raises(DuplicateId):
            build(["p1"], [("s1", (0.5, 0.4)), ("s1", (0.1, 0.2))], {
                ("p1", "s1"): (0.5, 0.5),
            })

    def test_duplicate_alternative_ids(self):
        with pytest.raises(DuplicateId):
            build(["p1", "p1"], [("s1", (0.5, 0.4))], {("p1", "s1"): (0.5, 0.5)})

    def test_missing_cell_names_coordinates(self):
        with pytest.raises(MissingCell, match=r"\(p2, s1\)"):
            build(["p1", "p2"], [("s1", (0.5, 0.4))], {("p1", "s1"): (0.5, 0.5)})

    def test_invalid_cell_names_coordinates(self):
        with pytest.raises(InvalidPFN, match=r"\(p1, s1\)"):
            build(["p1"], [("s1", (0.5, 0.4))], {("p1", "s1"): (0.9, 0.9)})

    def test_unexpected_cell_rejected(self):
        with pytest.raises(MissingCell, match="unexpected"):
            build(["p1"], [("s1", (0.5, 0.4))], {
                ("p1", "s1"): (0.5, 0.5),
                ("p9", "s1"): (0.5, 0.5),
            })

    def test_malformed_ids_rejected(self):
        with pytest.raises(ValueError):
            build(["p,1"], [("s1", (0.5, 0.4))], {("p,1", "s1"): (0.5, 0.5)})
        with pytest.raises(ValueError):
            build([""], [("s1", (0.5, 0.4))], {("", "s1"): (0.5, 0.5)})


class TestSubsetAndEquality:
    def test_subset_is_reflexive(self, table1):
        assert is_subset(table1, table1)

    def test_raising_one_cell_gives_a_superset(self, table1):
        cells = dict(TABLE1_CELLS)
        cells[("p2", "s3")] = (0.5, 0.5)  # m raised by 0.1, still valid
        bigger = build(UNIVERSE, TABLE1_PARAMS, cells)
        assert is_subset(table1, bigger)
        assert not is_subset(bigger, table1)
        # independent cell-by-cell check of the subset verdict
        for key in TABLE1_CELLS:
            a, b = table1.cells[key], bigger.cells[key]
            assert a.m <= b.m and a.n >= b.n

    def test_disjoint_parameter_sets_are_not_subsets(self, table1, table2):
        assert not is_subset(table1, table2)  # s1 absent from the other set

    def test_different_universes_are_not_subsets(self, table1):
        other = build(["q1"], TABLE1_PARAMS, {
            ("q1", name): TABLE1_CELLS[("p1", name)] for name, _ in TABLE1_PARAMS
        })
        assert not is_subset(table1, other)
        assert not equals(table1, other)

    def test_equality_ignores_ordering(self, table1):
        permuted = build(
            tuple(reversed(UNIVERSE)),
            tuple(reversed([PFParameter(n, PFN(*i)) for n, i in TABLE1_PARAMS])),
            TABLE1_CELLS,
        )
        assert equals(table1, permuted)
        assert is_subset(table1, permuted) and is_subset(permuted, table1)

    def test_single_cell_difference_breaks_equality(self, table1):
        cells = dict(TABLE1_CELLS)
        cells[("p4", "s6")] = (0.8, 0.3)
        assert not equals(table1, build(UNIVERSE, TABLE1_PARAMS, cells))


class TestCombinations:
    def test_extended_union_matches_the_worked_cells(self, table1, table2):
        got = extended_union(table1, table2)
        assert set(got.parameter_names) == {"s1", "s2", "s3", "s5", "s6"}
        for (alt, name), expected in UNION_GOLDEN.items():
            assert got.cell(alt, name) == PFN(*expected), (alt, name)
        for name, expected in UNION_IMPORTANCES.items():
            assert got.parameter(name).importance == PFN(*expected), name

    def test_extended_union_spot_values(self, table1, table2):
        got = extended_union(table1, table2)
        assert got.cell("p2", "s5") == PFN(0.8, 0.1)
        assert got.parameter("s5").importance == PFN(0.4, 0.5)

    def test_extended_intersection_matches_the_worked_cells(self, table1, table2):
        got = extended_intersection(table1, table2)
        for (alt, name), expected in INTERSECTION_GOLDEN.items():
            assert got.cell(alt, name) == PFN(*expected), (alt, name)
        for name, expected in INTERSECTION_IMPORTANCES.items():
            assert got.parameter(name).importance == PFN(*expected), name

    def test_extended_intersection_spot_values(self, table1, table2):
        got = extended_intersection(table1, table2)
        assert got.cell("p2", "s5") == PFN(0.5, 0.3)
        assert got.parameter("s5").importance == PFN(0.3, 0.6)

    def test_restricted_variants_project_the_extended_ones(self, table1, table2):
        runion = restricted_union(table1, table2)
        rinter = restricted_intersection(table1, table2)
        assert runion.parameter_names == RESTRICTED_NAMES
        assert rinter.parameter_names == RESTRICTED_NAMES
        assert runion.cell("p3", "s3") == PFN(0.9, 0.2)
        assert rinter.cell("p4", "s3") == PFN(0.5, 0.2)
        eunion = extended_union(table1, table2)
        einter = extended_intersection(table1, table2)
        for alt in UNIVERSE:
            for name in RESTRICTED_NAMES:
                assert runion.cell(alt, name) == eunion.cell(alt, name)
                assert rinter.cell(alt, name) == einter.cell(alt, name)

    def test_idempotence(self, table1):
        assert equals(extended_union(table1, table1), table1)
        assert equals(extended_intersection(table1, table1), table1)
        assert equals(restricted_union(table1, table1), table1)
        assert equals(restricted_intersection(table1, table1), table1)

    def test_commutativity(self, table1, table2):
        ops = (
            extended_union,
            extended_intersection,
            restricted_union,
            restricted_intersection,
        )
        for op in ops:
            assert equals(op(table1, table2), op(table2, table1))

    def test_union_dominates_and_intersection_is_dominated(self, table1, table2):
        union = extended_union(table1, table2)
        inter = extended_intersection(table1, table2)
        for s in (table1, table2):
            for p in s.parameters:
                for alt in UNIVERSE:
                    cell = s.cell(alt, p.name)
                    up = union.cell(alt, p.name)
                    down = inter.cell(alt, p.name)
                    assert cell.m <= up.m and cell.n >= up.n
                    assert down.m <= cell.m and down.n >= cell.n

    def test_universe_mismatch(self, table1):
        other = build(["q1"], TABLE1_PARAMS, {
            ("q1", name): (0.5, 0.5) for name, _ in TABLE1_PARAMS
        })
        with pytest.raises(UniverseMismatch):
            extended_union(table1, other)

    def test_restricted_requires_overlap(self, table1):
        disjoint = build(UNIVERSE, [("z9", (0.5, 0.4))], {
            (alt, "z9"): (0.4, 0.4) for alt in UNIVERSE
        })
        with pytest.raises(EmptyIntersection):
            restricted_union(table1, disjoint)
        with pytest.raises(EmptyIntersection):
            restricted_intersection(table1, disjoint)
        # the extended variants still work
        got = extended_union(table1, disjoint)
        assert set(got.parameter_names) == {"s1", "s3", "s5", "s6", "z9"}


class TestConstantSets:
    def test_constant_cells_and_default_importance(self):
        s = constant_set(["p1", "p2"], ["c1", "c2"], 0.6, 0.8)
        for alt in ("p1", "p2"):
            for name in ("c1", "c2"):
                assert s.cell(alt, name) == PFN(0.6, 0.8)
        assert s.parameter("c1").importance == PFN(0.6, 0.8)

    def test_constant_importance_override(self):
        s = constant_set(["p1"], ["c1"], 0.5, 0.5, importances={"c1": (0.9, 0.1)})
        assert s.parameter("c1").importance == PFN(0.9, 0.1)

    def test_constant_rejects_invalid_pairs(self):
        with pytest.raises(NotPythagorean):
            constant_set(["p1"], ["c1"], 0.8, 0.8)

    def test_null_and_whole(self):
        names = ["c1", "c2"]
        null = null_set(["p1"], names)
        whole = whole_set(["p1"], names)
        assert null.cell("p1", "c1") == PFN(0.0, 1.0)
        assert null.parameter("c2").importance == PFN(0.0, 1.0)
        assert whole.cell("p1", "c2") == PFN(1.0, 0.0)
        assert whole.parameter("c1").importance == PFN(1.0, 0.0)

    def test_absorption_identities(self):
        rng = np.random.default_rng(7)
        universe, names = ("u1", "u2", "u3"), ("c1", "c2")
        null = null_set(universe, names)
        whole = whole_set(universe, names)
        for _ in range(50):
            pool = []
            while len(pool) < 8:
                m, n = rng.random(2)
                if m * m + n * n <= 1:
                    pool.append(PFN(m, n))
            params = [PFParameter(nm, pool[i]) for i, nm in enumerate(names)]
            cells = {
                (u, nm): pool[2 + i * len(names) + j]
                for i, u in enumerate(universe)
                for j, nm in enumerate(names)
            }
            x = build(universe, params, cells)
            assert equals(extended_union(x, null), x)
            assert equals(restricted_union(x, null), x)
            assert equals(extended_intersection(x, null), null)
            assert equals(restricted_intersection(x, null), null)
            assert equals(extended_union(x, whole), whole)
            assert equals(restricted_union(x, whole), whole)
            assert equals(extended_intersection(x, whole), x)
            assert equals(restricted_intersection(x, whole), x)
