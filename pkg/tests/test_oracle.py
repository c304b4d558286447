import pytest

from dollokit import CapExceededError, dollo_labeling
from dollokit.oracle import (brute_force_count_table, brute_force_dollo_score,
                             brute_force_node_sets, brute_force_parsimony,
                             enumerate_dollo_extensions)
from dollokit.tree import Tree, generate_caterpillar

from conftest import char, node_of


def leaf_sets(tree, sets):
    out = set()
    for s in sets:
        out.add(frozenset(tree.label(v) if tree.is_leaf(v) else v for v in s))
    return out


class TestDolloScoreOracle:
    def test_fig1(self, fig1):
        f = char(fig1, "100001")
        k, mins = brute_force_dollo_score(fig1, f)
        assert k == 3 and mins == [dollo_labeling(fig1, f).node_states]

    def test_all_zero(self, fig1):
        k, mins = brute_force_dollo_score(fig1, char(fig1, "000000"))
        assert k == 0 and mins == [(0,) * len(fig1)]

    def test_cherry(self):
        t = Tree.from_nested((1, 2))
        k, mins = brute_force_dollo_score(t, char(t, "10"))
        assert k == 0
        assert mins == [tuple(1 if v == t.leaf_id(1) else 0 for v in range(3))]

    def test_extensions_contain_only_single_gain(self, fig4):
        ext = enumerate_dollo_extensions(fig4, char(fig4, "10001"))
        for states, losses in ext.valid_extensions:
            gains = states[fig4.root] + sum(
                1 for v in range(len(fig4) - 1)
                if states[fig4.parent(v)] == 0 and states[v] == 1)
            assert gains == 1
            assert losses == sum(1 for v in range(len(fig4) - 1)
                                 if states[fig4.parent(v)] == 1 and states[v] == 0)

    def test_cap(self):
        t = generate_caterpillar(15)
        with pytest.raises(CapExceededError):
            brute_force_dollo_score(t, char(t, "1" * 15))
        with pytest.raises(CapExceededError):
            brute_force_parsimony(t, char(t, "1" * 15))


class TestCountTableOracle:
    def test_fig4(self, fig4):
        assert brute_force_count_table(fig4).counts == (10, 8, 10, 4)

    def test_cherry(self):
        assert brute_force_count_table(Tree.from_nested((1, 2))).counts == (4,)

    def test_caterpillar5(self):
        assert brute_force_count_table(generate_caterpillar(5)).counts[-1] == 2

    def test_cap(self):
        with pytest.raises(CapExceededError):
            brute_force_count_table(generate_caterpillar(17))


class TestNodeSetOracle:
    def test_fig4_independent(self, fig4):
        got = leaf_sets(fig4, brute_force_node_sets(fig4, fig4.root, 3, extended=False))
        assert got == {frozenset(s) for s in
                       [{"1", "3", "4"}, {"1", "3", "5"}, {"2", "3", "4"}, {"2", "3", "5"}]}

    def test_fig4_extended(self, fig4):
        b = node_of(fig4, 4, 5)
        got = leaf_sets(fig4, brute_force_node_sets(fig4, fig4.root, 3, extended=True))
        want = {frozenset(s) for s in
                [{"1", "3", "4"}, {"1", "3", "5"}, {"2", "3", "4"}, {"2", "3", "5"},
                 {"1", "3", b}, {"2", "3", b}]}
        assert got == want

    def test_k0(self, fig4):
        for v in range(len(fig4)):
            assert brute_force_node_sets(fig4, v, 0, extended=True) == [frozenset()]

    def test_cap(self):
        t = generate_caterpillar(11)
        with pytest.raises(CapExceededError):
            brute_force_node_sets(t, t.root, 1, extended=True)
