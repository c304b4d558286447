"""Dollo-k labelings via the 1-tree.

The unique Dollo-k labeling of a character gives state 1 exactly to the
nodes of its 1-tree (the minimal subtree spanning the state-1 leaves, rooted
at their MRCA, the B-node) and state 0 everywhere else.  The gain sits on
the edge into the B-node and the losses on the edges from 1-tree nodes into
all-zero clades.  Everything here is one or two linear passes over the
post-order node array.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .characters import CharacterVector
from .tree import RHO_PRIME, Tree, generate_caterpillar

Edge = tuple  # (parent id or RHO_PRIME, child id)


@dataclass(frozen=True)
class OneTree:
    member_nodes: frozenset[int]
    b_node: int | None
    degree2_nodes: frozenset[int]
    #: (parent, child) edges leaving the 1-tree below the B-node
    exit_edges: tuple[Edge, ...] = ()
    n_ones: int = 0
    visits: int = field(default=0, compare=False)

    @property
    def is_empty(self) -> bool:
        return self.b_node is None


@dataclass(frozen=True)
class DolloLabeling:
    node_states: tuple[int, ...]
    score_k: int
    birth_edge: Edge | None
    loss_edges: tuple[Edge, ...]
    one_tree: OneTree = field(compare=False)
    visits: int = field(default=0, compare=False)


def one_tree(tree: Tree, f: CharacterVector) -> OneTree:
    """Compute the 1-tree of ``f`` in two passes (full bottom-up, then B-subtree)."""
    state = f.leaf_states(tree)
    n_ones = sum(f.states)
    visits = 0
    if n_ones == 0:
        return OneTree(frozenset(), None, frozenset(), (), 0, visits)

    below = [0] * len(tree)
    bnode = None
    for v in range(len(tree)):
        visits += 1
        ch = tree.children(v)
        below[v] = below[ch[0]] + below[ch[1]] if ch else state[v]
        if bnode is None and below[v] == n_ones:
            bnode = v

    members, deg2, exits = [], [], []
    for v in tree.subtree(bnode):
        visits += 1
        if not below[v]:
            continue
        members.append(v)
        degree = 0 if v == bnode else 1
        for c in tree.children(v):
            if below[c]:
                degree += 1
            else:
                exits.append((v, c))
        if degree == 2:
            deg2.append(v)
    return OneTree(frozenset(members), bnode, frozenset(deg2), tuple(exits),
                   n_ones, visits)


def b_node(tree: Tree, f: CharacterVector) -> int | None:
    """MRCA of the state-1 leaves, or ``None`` for the all-zero character."""
    return one_tree(tree, f).b_node


def dollo_labeling(tree: Tree, f: CharacterVector) -> DolloLabeling:
    ot = one_tree(tree, f)
    states = [0] * len(tree)
    visits = ot.visits
    for v in ot.member_nodes:
        visits += 1
        states[v] = 1
    if ot.b_node is None:
        birth = None
    else:
        p = tree.parent(ot.b_node)
        birth = (RHO_PRIME if p is None else p, ot.b_node)
    return DolloLabeling(tuple(states), len(ot.exit_edges), birth,
                         ot.exit_edges, ot, visits)


def dollo_score(tree: Tree, f: CharacterVector) -> int:
    """Number of degree-2 nodes of the 1-tree minus one (0 for at most one 1)."""
    ot = one_tree(tree, f)
    if ot.n_ones <= 1:
        return 0
    return len(ot.degree2_nodes) - 1


def maximal_0B_nodes(tree: Tree, f: CharacterVector) -> frozenset[int]:
    """Roots of the maximal all-zero clades strictly below the B-node."""
    return frozenset(c for _, c in one_tree(tree, f).exit_edges)


def is_persistent(tree: Tree, f: CharacterVector) -> bool:
    """True for Dollo-0 and Dollo-1 characters."""
    return dollo_score(tree, f) <= 1


def fig2_instance(n: int) -> tuple[Tree, CharacterVector]:
    """Caterpillar on ``n`` leaves with a character of Dollo score ``n - 2``.

    State 1 goes to leaf 1 (the child of the root) and to leaf ``n`` (one
    side of the cherry); every other leaf is 0 and hangs off the 1-tree on
    its own loss edge.
    """
    if n < 2:
        raise ValueError("needs n >= 2")
    tree = generate_caterpillar(n)
    bits = "1" + "0" * (n - 2) + "1"
    return tree, CharacterVector(tree.leaf_labels, tuple(int(c) for c in bits))
