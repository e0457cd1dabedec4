from fractions import Fraction

import pytest
from hypothesis import given

from fliess_prelie.algebra import ComPrelieAlgebra
from fliess_prelie.errors import DomainError, StructureError
from fliess_prelie.lincomb import LinComb
from fliess_prelie.ptrees import (
    PTREES,
    Node,
    PartitionedTree,
    RawPartitionedTree,
    census_polynomial,
    kernel_elements,
    make_node,
    pt_canonical,
    pt_counts_by_series,
    pt_enumerate,
    pt_free_eval_lc,
    pt_graft,
    pt_multigraft,
    pt_prelie,
    pt_rigidity_coproduct,
    pt_root_forest,
    pt_shuffle,
    rigidity_coproduct_tree,
    rigidity_prelie_residual,
    rigidity_shuffle_residual,
    rigidity_symmetry_residual,
    vertex,
)
from tests.strategies import algebraic, ptrees

ONE, TWO = vertex(1), vertex(2)
PTREE_COUNTS = {
    1: [1, 2, 5, 14, 42, 134, 444, 1518, 5318, 18989],
    2: [2, 7, 32, 167, 952, 5759, 36340, 236498, 1576156, 10702333],
}


def m(t):
    return LinComb.monomial(t)


def chain(*decorations):
    """Single-root tree where each vertex has one child block holding the next."""
    node = make_node(decorations[-1])
    for d in reversed(decorations[:-1]):
        node = make_node(d, [[node]])
    return PartitionedTree((node,))


class TestCanonicalForm:
    def test_printing(self):
        assert str(chain(2, 1)) == "{2({1})}"
        assert str(pt_shuffle(ONE, ONE)) == "{1 1}"

    def test_relabelling_gives_the_same_tree(self):
        a = RawPartitionedTree([1, 2, 1], [None, 0, 0], ["r", "x", "y"])
        b = RawPartitionedTree([2, 1, 1], [1, None, 1], ["p", "root", "q"])
        assert pt_canonical(a) == pt_canonical(b)

    def test_blocks_distinguish_trees(self):
        same_block = pt_canonical(RawPartitionedTree([1, 1, 1], [None, 0, 0], [0, 1, 1]))
        two_blocks = pt_canonical(RawPartitionedTree([1, 1, 1], [None, 0, 0], [0, 1, 2]))
        assert same_block != two_blocks
        assert str(same_block) == "{1({1 1})}"
        assert str(two_blocks) == "{1({1}{1})}"

    def test_raw_round_trip(self):
        for t in pt_enumerate(4, 2):
            assert pt_canonical(t.to_raw()) == t

    def test_roots_must_share_one_block(self):
        with pytest.raises(StructureError):
            pt_canonical(RawPartitionedTree([1, 1], [None, None], [0, 1]))

    def test_block_cannot_span_two_parents(self):
        with pytest.raises(StructureError):
            pt_canonical(RawPartitionedTree([1, 1, 1, 1], [None, 0, 0, 1], [0, 1, 2, 2]))

    def test_cycles_are_rejected(self):
        with pytest.raises(StructureError):
            pt_canonical(RawPartitionedTree([1, 1, 1], [None, 2, 1], [0, 1, 2]))

    def test_decorations_must_be_positive(self):
        with pytest.raises(StructureError):
            vertex(0)

    def test_block_count(self):
        assert chain(1, 1, 1).block_count() == 3
        assert pt_shuffle(ONE, TWO).block_count() == 1


class TestProducts:
    def test_graft_on_a_vertex(self):
        assert pt_graft(ONE, 0, TWO) == chain(1, 2)
        with pytest.raises(StructureError):
            pt_graft(ONE, 1, TWO)

    def test_single_vertices(self):
        assert pt_prelie(m(ONE), m(ONE)) == m(chain(1, 1))

    def test_grafting_on_a_forest(self):
        product = pt_prelie(m(pt_shuffle(ONE, ONE)), m(ONE))
        assert product.format() == "2*{1 1({1})}"

    def test_grafting_on_a_chain(self):
        product = pt_prelie(m(chain(1, 1)), m(ONE))
        assert product.format() == "1*{1({1}{1})} + 1*{1({1({1})})}"

    def test_grafted_roots_stay_in_one_block(self):
        product = pt_prelie(m(ONE), m(pt_shuffle(ONE, TWO)))
        assert product.format() == "1*{1({1 2})}"

    def test_multigraft_sums_over_targets(self):
        base = chain(1, 1)
        assert pt_multigraft(base, [TWO, TWO]).mass() == 4
        assert pt_multigraft(base, []) == m(base)

    @algebraic
    @given(ptrees(3), ptrees(2))
    def test_prelie_mass_is_the_vertex_count(self, t1, t2):
        assert pt_prelie(m(t1), m(t2)).mass() == t1.size

    @algebraic
    @given(ptrees(2), ptrees(2))
    def test_shuffle_adds_root_blocks(self, t1, t2):
        s = pt_shuffle(t1, t2)
        assert s == pt_shuffle(t2, t1)
        assert len(s.roots) == len(t1.roots) + len(t2.roots)
        assert s.block_count() == t1.block_count() + t2.block_count() - 1

    @algebraic
    @given(ptrees(2), ptrees(2), ptrees(2))
    def test_comprelie_axioms(self, t1, t2, t3):
        x, y, z = m(t1), m(t2), m(t3)
        assert PTREES.prelie_residual(x, y, z) == 0
        assert PTREES.comprelie_residual(x, y, z) == 0
        assert PTREES.shuffle_residuals(x, y, z) == 0

    @algebraic
    @given(ptrees(2), ptrees(2), ptrees(2))
    def test_multigraft_matches_the_recursive_definition(self, t, t1, t2):
        forest = [m(t1), m(t2)]
        assert PTREES.multi_prelie(m(t), forest) == ComPrelieAlgebra.multi_prelie(PTREES, m(t), forest)

    @algebraic
    @given(ptrees(4, 3))
    def test_free_evaluation_on_vertices_is_the_identity(self, t):
        images = {d: m(vertex(d)) for d in (1, 2, 3)}
        assert pt_free_eval_lc(m(t), images, PTREES) == m(t)

    def test_free_evaluation_needs_every_decoration(self):
        with pytest.raises(DomainError):
            pt_free_eval_lc(m(TWO), {1: m(ONE)}, PTREES)


class TestEnumeration:
    @pytest.mark.parametrize("d", [1, 2])
    def test_counts_up_to_five_vertices(self, d):
        assert [len(pt_enumerate(n, d)) for n in range(1, 6)] == PTREE_COUNTS[d][:5]

    def test_two_vertex_trees(self):
        assert [str(t) for t in pt_enumerate(2, 1)] == ["{1 1}", "{1({1})}"]

    def test_enumeration_is_canonical_and_distinct(self):
        trees = pt_enumerate(4, 2)
        assert trees == sorted(trees)
        assert len(set(trees)) == len(trees)
        assert all(t.size == 4 for t in trees)

    @pytest.mark.parametrize("d", [1, 2])
    def test_series_counts(self, d):
        f, _ = pt_counts_by_series(10, d)
        assert f == PTREE_COUNTS[d]

    def test_single_root_counts(self):
        _, t = pt_counts_by_series(4, 1)
        assert t == [1, 1, 3, 8]

    @pytest.mark.parametrize("n", range(1, 6))
    @pytest.mark.parametrize("d", [1, 2, 3, 4])
    def test_closed_forms(self, n, d):
        f, _ = pt_counts_by_series(n, d)
        assert census_polynomial(n, d) == f[-1]

    def test_closed_form_range(self):
        with pytest.raises(DomainError):
            census_polynomial(6, 1)

    @pytest.mark.slow
    def test_enumeration_matches_series_up_to_eight_vertices(self):
        assert [len(pt_enumerate(n, 1)) for n in (6, 7, 8)] == PTREE_COUNTS[1][5:8]
        assert len(pt_enumerate(6, 2)) == PTREE_COUNTS[2][5]

    def test_enumeration_domain(self):
        with pytest.raises(DomainError):
            pt_enumerate(0, 1)


class TestRigidityCoproduct:
    def test_chain(self):
        assert rigidity_coproduct_tree(chain(1, 1)) == LinComb({(ONE, ONE): 1})

    def test_forest_of_vertices_is_primitive(self):
        assert rigidity_coproduct_tree(pt_shuffle(ONE, TWO)) == 0

    def test_two_blocks(self):
        t = PartitionedTree((make_node(1, [[Node(1)], [Node(2)]]),))
        assert rigidity_coproduct_tree(t) == LinComb({(chain(1, 2), ONE): 1, (chain(1, 1), TWO): 1})

    def test_roots_weight_the_terms(self):
        t = pt_shuffle(chain(1, 1), TWO)
        assert rigidity_coproduct_tree(t) == LinComb({(pt_shuffle(ONE, TWO), ONE): Fraction(1, 2)})

    @algebraic
    @given(ptrees(3), ptrees(2))
    def test_prelie_rule(self, t1, t2):
        assert rigidity_prelie_residual(m(t1), m(t2)) == 0

    @algebraic
    @given(ptrees(4))
    def test_symmetric_after_iteration(self, t):
        assert rigidity_symmetry_residual(m(t)) == 0

    @algebraic
    @given(ptrees(3), ptrees(3))
    def test_shuffle_rule(self, t1, t2):
        assert rigidity_shuffle_residual(t1, t2) == 0

    @algebraic
    @given(ptrees(2), ptrees(2), ptrees(2), ptrees(2))
    def test_kernel_elements(self, t1, t2, t3, t4):
        for name, element in kernel_elements(t1, t2, t3, t4).items():
            assert pt_rigidity_coproduct(element) == 0, name

    def test_root_forest(self):
        t = pt_root_forest([2, 1], [[ONE, ONE], []])
        assert str(t) == "{1 2({1}{1})}"
        with pytest.raises(DomainError):
            pt_root_forest([1], [])
