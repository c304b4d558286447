"""Exponential brute-force references for checking the fast algorithms.

None of these use the 1-tree or the e/i recursion; they enumerate
extensions, characters and node subsets directly from the definitions.
Each routine has a size cap and raises :class:`CapExceededError` above it.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .characters import CharacterVector, all_characters
from .counting import CountTable
from .errors import CapExceededError
from .labeling import dollo_score
from .tree import Tree

EXTENSION_CAP = 14   # leaves; 2**(n-1) extensions per character
COUNT_TABLE_CAP = 16  # leaves; 2**n characters
NODE_SET_CAP = 19     # nodes in the subtree (n <= 10)


@dataclass
class ExtensionEnumeration:
    tree: Tree
    character: CharacterVector
    #: (node states indexed by node id, number of 1->0 edges)
    valid_extensions: list[tuple[tuple[int, ...], int]]


def _all_extensions(tree: Tree, f: CharacterVector) -> np.ndarray:
    """Every extension of ``f`` as a (2**internal, |V|) 0/1 matrix."""
    leaf = f.leaf_states(tree)
    internal = [v for v in range(len(tree)) if not tree.is_leaf(v)]
    g = np.zeros((2 ** len(internal), len(tree)), dtype=np.int8)
    for v in tree.leaves():
        g[:, v] = leaf[v]
    codes = np.arange(2 ** len(internal))
    for bit, v in enumerate(internal):
        g[:, v] = (codes >> bit) & 1
    return g


def _edge_arrays(tree: Tree) -> tuple[np.ndarray, np.ndarray]:
    child = np.arange(len(tree) - 1)
    parent = np.array([tree.parent(v) for v in child], dtype=np.int64)
    return parent, child


def enumerate_dollo_extensions(tree: Tree, f: CharacterVector) -> ExtensionEnumeration:
    """All extensions whose state-1 nodes hang from a single gain edge.

    With the virtual ancestor fixed at 0, an extension has one connected
    block of state-1 nodes with a unique topmost node exactly when it has
    at most one 0->1 edge, the root edge included.  Losses are its 1->0 edges.
    """
    if tree.n > EXTENSION_CAP:
        raise CapExceededError(f"extension enumeration capped at n={EXTENSION_CAP}")
    g = _all_extensions(tree, f)
    parent, child = _edge_arrays(tree)
    gp, gc = g[:, parent], g[:, child]
    gains = ((gp == 0) & (gc == 1)).sum(axis=1) + g[:, tree.root]
    losses = ((gp == 1) & (gc == 0)).sum(axis=1)
    valid = np.nonzero(gains <= 1)[0]
    return ExtensionEnumeration(
        tree, f, [(tuple(int(x) for x in g[r]), int(losses[r])) for r in valid])


def brute_force_dollo_score(tree: Tree, f: CharacterVector):
    """Return ``(k, minimizers)``: minimum loss count over valid extensions and
    every extension attaining it."""
    ext = enumerate_dollo_extensions(tree, f).valid_extensions
    k = min(loss for _, loss in ext)
    return k, [states for states, loss in ext if loss == k]


def brute_force_parsimony(tree: Tree, f: CharacterVector) -> int:
    """Minimum number of change edges over all extensions, root edge ignored."""
    if tree.n > EXTENSION_CAP:
        raise CapExceededError(f"extension enumeration capped at n={EXTENSION_CAP}")
    g = _all_extensions(tree, f)
    parent, child = _edge_arrays(tree)
    return int((g[:, parent] != g[:, child]).sum(axis=1).min())


def brute_force_count_table(tree: Tree) -> CountTable:
    """Tally the Dollo score of every one of the ``2**n`` characters."""
    if tree.n > COUNT_TABLE_CAP:
        raise CapExceededError(f"count table oracle capped at n={COUNT_TABLE_CAP}")
    counts = [0] * max(1, tree.n - 1)
    for f in all_characters(tree):
        counts[dollo_score(tree, f)] += 1
    return CountTable(tree.n, tuple(counts))


def brute_force_node_sets(tree: Tree, node: int, k: int, extended: bool) -> list[frozenset[int]]:
    """All ``k``-subsets of the subtree at ``node`` meeting the node-set conditions.

    Conditions: no member is ``node``; no member is an ancestor of another;
    no two members are siblings; and unless ``extended``, no member is a
    child of ``node``.
    """
    sub = list(tree.subtree(node))
    if len(sub) > NODE_SET_CAP:
        raise CapExceededError(f"node-set oracle capped at {NODE_SET_CAP} nodes")
    candidates = [u for u in sub if u != node
                  and (extended or tree.parent(u) != node)]
    out = []
    for combo in itertools.combinations(candidates, k):
        ok = True
        for u, w in itertools.combinations(combo, 2):
            if (tree.is_ancestor(u, w) or tree.is_ancestor(w, u)
                    or tree.parent(u) == tree.parent(w)):
                ok = False
                break
        if ok:
            out.append(frozenset(combo))
    return out
