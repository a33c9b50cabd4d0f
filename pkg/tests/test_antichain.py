from itertools import combinations

import pytest

from permclass import Perm
from permclass.antichain import (
    AvoidanceBasis,
    ClosureOf,
    SHORT_BASIS,
    Tree,
    basis_up_to,
    closure_members,
    double_fork,
    is_antichain,
    is_tree,
    members,
    mu,
    perm_graph,
    tree_canonical,
    tree_isomorphic,
)
from permclass.errors import InvalidIndex, NotATree
from permclass.perm import (
    all_perms,
    contains,
    decreasing,
    deletions,
    restriction,
)

p = Perm.from_text


class TestMu:
    def test_displayed_members(self):
        assert mu(7) == p("4761532")
        assert mu(9).values == (6, 9, 8, 4, 7, 1, 5, 3, 2)
        assert mu(11).values == (8, 11, 10, 6, 9, 4, 7, 1, 5, 3, 2)

    def test_lengths(self):
        for i in range(7, 32, 2):
            assert len(mu(i)) == i

    def test_invalid_indices(self):
        for bad in (5, 6, 8, 0):
            with pytest.raises(InvalidIndex):
                mu(bad)


class TestPermGraph:
    def test_mu7_edges(self):
        g = perm_graph(mu(7))
        assert g.edges == frozenset(
            {(1, 2), (1, 3), (1, 5), (4, 5), (4, 6), (4, 7)}
        )

    def test_triangle(self):
        assert perm_graph(p("123")).edges == frozenset(
            {(1, 2), (1, 3), (2, 3)}
        )

    def test_decreasing_edgeless(self):
        assert perm_graph(decreasing(6)).edges == frozenset()

    def test_monotone_under_containment(self):
        # the ascent graph of a restriction is the induced subgraph on the
        # chosen positions
        for n in range(2, 7):
            for q in all_perms(n):
                g = perm_graph(q)
                for k in range(1, n):
                    for idx in combinations(range(1, n + 1), k):
                        sub = perm_graph(restriction(q, idx))
                        relabel = {pos: r for r, pos in enumerate(idx, 1)}
                        induced = frozenset(
                            (relabel[a], relabel[b])
                            for a, b in g.edges
                            if a in relabel and b in relabel
                        )
                        assert sub.edges == induced


class TestDoubleFork:
    def test_smallest(self):
        t = double_fork(6)
        assert t.n == 6
        assert len(t.edges) == 5
        degs = sorted(
            sum(1 for e in t.edges if v in e) for v in range(1, 7)
        )
        assert degs == [1, 1, 1, 1, 3, 3]

    def test_degree_sequence_7(self):
        t = double_fork(7)
        degs = sorted(
            (sum(1 for e in t.edges if v in e) for v in range(1, 8)),
            reverse=True,
        )
        assert degs == [3, 3, 2, 1, 1, 1, 1]

    def test_sizes(self):
        t = double_fork(9)
        assert t.n == 9 and len(t.edges) == 8

    def test_invalid(self):
        with pytest.raises(InvalidIndex):
            double_fork(5)


class TestTreeIsomorphism:
    def test_mu_certificates(self):
        for i in range(7, 32, 2):
            g = perm_graph(mu(i))
            assert is_tree(g)
            assert tree_isomorphic(g, double_fork(i))

    def test_different_sizes(self):
        assert not tree_isomorphic(double_fork(7), double_fork(9))

    def test_relabeling(self):
        t = double_fork(8)
        shift = {v: v % 8 + 1 for v in range(1, 9)}
        relabeled = Tree(
            8,
            frozenset(
                tuple(sorted((shift[a], shift[b]))) for a, b in t.edges
            ),
        )
        assert tree_isomorphic(t, relabeled)

    def test_path_vs_fork(self):
        path = Tree(7, frozenset((j, j + 1) for j in range(1, 7)))
        assert not tree_isomorphic(path, double_fork(7))

    def test_not_a_tree(self):
        cycle = Tree(3, frozenset({(1, 2), (2, 3), (1, 3)}))
        with pytest.raises(NotATree):
            tree_canonical(cycle)
        disconnected = Tree(4, frozenset({(1, 2), (1, 3)}))
        with pytest.raises(NotATree):
            tree_canonical(disconnected)


class TestIsAntichain:
    def test_mu_with_short_basis(self):
        family = list(SHORT_BASIS) + [mu(i) for i in range(7, 16, 2)]
        ok, witness = is_antichain(family)
        assert ok and witness is None

    def test_comparable_pair(self):
        ok, witness = is_antichain([p("12"), p("123")])
        assert not ok
        assert witness == (p("12"), p("123"))

    def test_singleton(self):
        assert is_antichain([p("2143")]) == (True, None)

    def test_agrees_with_double_loop(self):
        sets = [
            [p("123"), p("321"), p("2143")],
            [p("12"), p("21"), p("132")],
            list(SHORT_BASIS),
        ]
        for family in sets:
            ok, _ = is_antichain(family)
            direct = not any(
                a != b and contains(a, b)
                for a in family
                for b in family
            )
            assert ok == direct


class TestClosure:
    def test_single_descent(self):
        assert closure_members([p("21")], 2) == {p("21")}

    def test_patterns_of_2413(self):
        assert closure_members([p("2413")], 3) == {
            p("132"),
            p("213"),
            p("231"),
            p("312"),
        }

    def test_empty_generators(self):
        assert closure_members([], 3) == set()

    def test_downward_closed(self):
        gens = [p("2413"), p("35142")]
        for n in range(2, 5):
            level = closure_members(gens, n)
            below = closure_members(gens, n - 1)
            for q in level:
                assert deletions(q) <= below


class TestBasis:
    def test_avoidance_basis_is_fixed_point(self):
        spec = AvoidanceBasis((p("123"), p("3214")))
        assert basis_up_to(spec, 6) == {p("123"), p("3214")}

    def test_closure_of_2413(self):
        spec = ClosureOf((p("2413"),))
        assert basis_up_to(spec, 4) == {
            p("123"),
            p("321"),
            p("2143"),
            p("3142"),
            p("3412"),
        }

    def test_empty_class(self):
        assert basis_up_to(AvoidanceBasis((p("1"),)), 3) == {p("1")}

    def test_output_is_antichain(self):
        for spec in (
            ClosureOf((p("2413"), p("3142"))),
            AvoidanceBasis((p("132"), p("4321"))),
        ):
            basis = basis_up_to(spec, 5)
            ok, _ = is_antichain(basis)
            assert ok

    def test_class_agreement(self):
        # avoiding the computed basis must reproduce the class on all
        # lengths up to the cutoff
        spec = ClosureOf((p("2413"),))
        L = 6
        basis = basis_up_to(spec, L)
        for n in range(1, L + 1):
            want = members(spec, n)
            got = {
                q
                for q in all_perms(n)
                if not any(contains(b, q) for b in basis)
            }
            assert got == want
