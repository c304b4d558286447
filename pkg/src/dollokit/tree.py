"""Immutable rooted binary phylogenetic trees.

Nodes are numbered in post-order, so every child has a smaller id than its
parent, the root carries the largest id, and the subtree below ``v`` is the
contiguous id range ``[v - size + 1, v]``.  All bottom-up algorithms in the
package are plain ``for v in range(len(tree))`` loops because of this.

The virtual ancestor of the root (the upper end of the root edge) is never
stored.  Its state is 0 by convention; code that needs to name the root edge
uses the ``RHO_PRIME`` sentinel as the parent endpoint.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import CapExceededError, ValidationError

RHO_PRIME = "rho'"

#: Largest leaf count accepted by :func:`enumerate_shapes`.
SHAPE_CAP = 16


@dataclass(frozen=True)
class Node:
    id: int
    parent: int | None
    children: tuple[int, ...]
    label: str | None
    n_below: int

    @property
    def is_leaf(self) -> bool:
        return not self.children


def label_sort_key(labels: Iterable[str]):
    """Return a sort key: numeric if every label is an integer, else lexicographic."""
    labels = list(labels)
    try:
        for lab in labels:
            int(lab)
    except ValueError:
        return lambda s: s
    return lambda s: (int(s), s)


class Tree:
    """A rooted binary phylogenetic tree with an implicit root edge.

    Construct trees with :class:`TreeBuilder`, :meth:`Tree.from_nested`,
    the generators in this module, or :func:`dollokit.newick.parse_newick`.
    """

    __slots__ = ("_parent", "_children", "_label", "_n_below", "_leaf_index",
                 "_leaf_labels", "_nodes")

    def __init__(self, children: Sequence[Sequence[int]],
                 labels: Sequence[str | None], root: int):
        total = len(children)
        if total == 0:
            raise ValidationError("empty tree")
        if len(labels) != total:
            raise ValueError("children and labels must have equal length")
        for v, ch in enumerate(children):
            if len(ch) not in (0, 2):
                raise ValidationError(
                    f"non-binary node with {len(ch)} children")
            if not ch and labels[v] is None:
                raise ValidationError("leaf without a label")

        # iterative post-order renumbering, preserving child order
        order: list[int] = []
        seen = [False] * total
        stack = [(root, False)]
        while stack:
            v, expanded = stack.pop()
            if expanded:
                order.append(v)
                continue
            if seen[v]:
                raise ValidationError("node reachable twice; not a tree")
            seen[v] = True
            stack.append((v, True))
            for c in reversed(children[v]):
                stack.append((c, False))
        if len(order) != total:
            raise ValidationError("disconnected nodes in tree")

        new_id = {old: new for new, old in enumerate(order)}
        parent: list[int | None] = [None] * total
        kids: list[tuple[int, ...]] = [()] * total
        label: list[str | None] = [None] * total
        n_below = [0] * total
        leaf_index: dict[str, int] = {}
        for new, old in enumerate(order):
            ch = tuple(new_id[c] for c in children[old])
            kids[new] = ch
            if ch:
                n_below[new] = n_below[ch[0]] + n_below[ch[1]]
                parent[ch[0]] = parent[ch[1]] = new
            else:
                lab = str(labels[old])
                if lab in leaf_index:
                    raise ValidationError(f"duplicate leaf label {lab!r}")
                leaf_index[lab] = new
                label[new] = lab
                n_below[new] = 1

        self._parent = tuple(parent)
        self._children = tuple(kids)
        self._label = tuple(label)
        self._n_below = tuple(n_below)
        self._leaf_index = leaf_index
        self._leaf_labels = tuple(sorted(leaf_index, key=label_sort_key(leaf_index)))
        self._nodes: tuple[Node, ...] | None = None

    # construction helpers

    @classmethod
    def from_nested(cls, obj) -> Tree:
        """Build a tree from nested 2-tuples/lists whose atoms are leaf labels.

        >>> Tree.from_nested(((1, 2), 3)).n
        3
        """
        b = TreeBuilder()
        # iterative to cope with very deep caterpillars
        results: list[int] = []
        stack = [(obj, False)]
        while stack:
            item, expanded = stack.pop()
            if isinstance(item, (tuple, list)):
                if expanded:
                    k = len(item)
                    ids = results[len(results) - k:]
                    del results[len(results) - k:]
                    results.append(b.join(*ids))
                else:
                    if len(item) != 2:
                        raise ValidationError(
                            f"non-binary node with {len(item)} children")
                    stack.append((item, True))
                    for sub in reversed(item):
                        stack.append((sub, False))
            else:
                results.append(b.leaf(item))
        return b.build(results[0])

    def to_nested(self):
        """Inverse of :meth:`from_nested`; leaves become their label strings."""
        out: list = [None] * len(self)
        for v in range(len(self)):
            ch = self._children[v]
            out[v] = (out[ch[0]], out[ch[1]]) if ch else self._label[v]
        return out[self.root]

    # basic queries

    def __len__(self) -> int:
        return len(self._parent)

    def __repr__(self) -> str:
        return f"Tree(n={self.n})"

    @property
    def n(self) -> int:
        """Number of leaves."""
        return self._n_below[-1]

    leaf_count = n

    @property
    def root(self) -> int:
        return len(self._parent) - 1

    @property
    def nodes(self) -> tuple[Node, ...]:
        if self._nodes is None:
            self._nodes = tuple(self.node(v) for v in range(len(self)))
        return self._nodes

    def node(self, v: int) -> Node:
        return Node(v, self._parent[v], self._children[v], self._label[v],
                    self._n_below[v])

    def parent(self, v: int) -> int | None:
        return self._parent[v]

    def children(self, v: int) -> tuple[int, ...]:
        return self._children[v]

    def label(self, v: int) -> str | None:
        return self._label[v]

    def n_below(self, v: int) -> int:
        return self._n_below[v]

    def is_leaf(self, v: int) -> bool:
        return not self._children[v]

    def subtree_size(self, v: int) -> int:
        """Number of nodes in the subtree rooted at ``v``."""
        return 2 * self._n_below[v] - 1

    def subtree(self, v: int) -> range:
        """Node ids of the subtree rooted at ``v`` (in post-order)."""
        return range(v - 2 * self._n_below[v] + 2, v + 1)

    def is_ancestor(self, u: int, v: int) -> bool:
        """True if ``u`` is an ancestor of ``v`` (every node is its own ancestor)."""
        return v in self.subtree(u)

    @property
    def leaf_labels(self) -> tuple[str, ...]:
        """Leaf labels in canonical character order."""
        return self._leaf_labels

    @property
    def leaf_index(self) -> dict[str, int]:
        return dict(self._leaf_index)

    def leaf_id(self, label) -> int:
        try:
            return self._leaf_index[str(label)]
        except KeyError:
            raise ValidationError(f"unknown leaf label {label!r}") from None

    def leaves(self) -> Iterator[int]:
        return (v for v in range(len(self)) if not self._children[v])

    def internal_nodes(self) -> Iterator[int]:
        return (v for v in range(len(self)) if self._children[v])

    def shape_key(self) -> str:
        """Canonical string of the unlabeled shape; equal iff isomorphic."""
        key: list[str] = [""] * len(self)
        for v in range(len(self)):
            ch = self._children[v]
            key[v] = "(" + ",".join(sorted((key[ch[0]], key[ch[1]]))) + ")" if ch else "*"
        return key[self.root]


class TreeBuilder:
    """Incrementally assemble a tree bottom-up.

    >>> b = TreeBuilder()
    >>> t = b.build(b.join(b.leaf(1), b.leaf(2)))
    >>> t.n
    2
    """

    def __init__(self):
        self._children: list[tuple[int, ...]] = []
        self._labels: list[str | None] = []

    def leaf(self, label) -> int:
        self._children.append(())
        self._labels.append(str(label))
        return len(self._children) - 1

    def join(self, *kids: int) -> int:
        self._children.append(tuple(kids))
        self._labels.append(None)
        return len(self._children) - 1

    def build(self, root: int) -> Tree:
        return Tree(self._children, self._labels, root)


def standard_decomposition(tree: Tree, node: int) -> tuple[int, int]:
    """Return the two children of ``node`` (roots of its maximal pending subtrees)."""
    ch = tree.children(node)
    if not ch:
        raise ValueError(f"node {node} is a leaf: not decomposable")
    return ch[0], ch[1]


def mrca(tree: Tree, leaves: Iterable) -> int:
    """Most recent common ancestor of a nonempty set of leaf labels."""
    ids = {tree.leaf_id(x) for x in leaves}
    if not ids:
        raise ValueError("mrca of an empty leaf set")
    below = [0] * len(tree)
    for v in range(len(tree)):
        ch = tree.children(v)
        below[v] = below[ch[0]] + below[ch[1]] if ch else int(v in ids)
        # post-order: the first node covering all targets is the deepest one
        if below[v] == len(ids):
            return v
    raise AssertionError("unreachable")


def sackin_index(tree: Tree) -> int:
    """Sum of descendant-leaf counts over all internal nodes (0 for one leaf)."""
    return sum(tree.n_below(v) for v in tree.internal_nodes())


def generate_caterpillar(n: int) -> Tree:
    """Caterpillar ``(1,(2,(...,(n-1,n))))``: leaf 1 hangs off the root,
    leaves ``n-1`` and ``n`` form the cherry."""
    if n < 1:
        raise ValueError("caterpillar needs n >= 1")
    b = TreeBuilder()
    if n == 1:
        return b.build(b.leaf(1))
    top = b.join(b.leaf(n - 1), b.leaf(n))
    for i in range(n - 2, 0, -1):
        top = b.join(b.leaf(i), top)
    return b.build(top)


def generate_fully_balanced(h: int) -> Tree:
    """Fully balanced tree of height ``h`` with leaves ``1..2**h`` left to right."""
    if h < 0:
        raise ValueError("height must be >= 0")
    b = TreeBuilder()
    level = [b.leaf(i) for i in range(1, 2 ** h + 1)]
    while len(level) > 1:
        level = [b.join(level[i], level[i + 1]) for i in range(0, len(level), 2)]
    return b.build(level[0])


def generate_semi_caterpillar(n_a: int, n_b: int) -> Tree:
    """``(caterpillar(n_a), caterpillar(n_b))`` with leaves relabeled ``1..n_a+n_b``."""
    if n_b < 1 or n_a < n_b:
        raise ValueError("semi-caterpillar needs n_a >= n_b >= 1")
    b = TreeBuilder()

    def cat(first: int, m: int) -> int:
        if m == 1:
            return b.leaf(first)
        top = b.join(b.leaf(first + m - 2), b.leaf(first + m - 1))
        for i in range(first + m - 3, first - 1, -1):
            top = b.join(b.leaf(i), top)
        return top

    return b.build(b.join(cat(1, n_a), cat(n_a + 1, n_b)))


def is_caterpillar(tree: Tree, node: int | None = None) -> bool:
    """True if the subtree at ``node`` (default: root) has at most one cherry."""
    node = tree.root if node is None else node
    for v in tree.subtree(node):
        ch = tree.children(v)
        if ch and not (tree.is_leaf(ch[0]) or tree.is_leaf(ch[1])):
            return False
    return True


def is_semi_caterpillar(tree: Tree) -> bool:
    if tree.n == 1:
        return True
    a, b = standard_decomposition(tree, tree.root)
    return is_caterpillar(tree, a) and is_caterpillar(tree, b)


_shape_memo: dict[int, list] = {1: [None]}


def _shapes(m: int) -> list:
    if m not in _shape_memo:
        out = []
        for a in range(m - 1, (m + 1) // 2 - 1, -1):
            sb = _shapes(m - a)
            if a == m - a:
                out.extend((x, sb[j]) for i, x in enumerate(sb) for j in range(i, len(sb)))
            else:
                out.extend((x, y) for x in _shapes(a) for y in sb)
        _shape_memo[m] = out
    return _shape_memo[m]


def _label_shape(shape) -> Tree:
    counter = iter(range(1, 10 ** 9))

    def relabel(s):
        if s is None:
            return next(counter)
        return (relabel(s[0]), relabel(s[1]))

    return Tree.from_nested(relabel(shape))


def enumerate_shapes(n: int) -> Iterator[Tree]:
    """Yield one tree per unlabeled rooted binary shape on ``n`` leaves.

    Leaves are labeled ``1..n`` from left to right.  The number of shapes
    follows the Wedderburn-Etherington numbers (1, 1, 1, 2, 3, 6, 11, 23, ...).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > SHAPE_CAP:
        raise CapExceededError(f"enumerate_shapes capped at n={SHAPE_CAP}")
    for shape in _shapes(n):
        yield _label_shape(shape)


def random_tree(n: int, seed: int | None = None) -> Tree:
    """Random tree on ``n`` leaves grown under the Yule process.

    Starting from a single leaf, a uniformly chosen leaf is split into a
    cherry until ``n`` leaves exist.  Leaves are then labeled ``1..n`` left
    to right, so equal seeds give identical trees.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    rng = random.Random(seed)
    # mutable scratch tree: children lists indexed by scratch id
    kids: list[list[int]] = [[]]
    tips = [0]
    while len(tips) < n:
        i = rng.randrange(len(tips))
        v = tips[i]
        kids.append([])
        kids.append([])
        kids[v] = [len(kids) - 2, len(kids) - 1]
        tips[i] = len(kids) - 2
        tips.append(len(kids) - 1)
    labels: list[str | None] = [None] * len(kids)
    stack, label = [0], 1
    while stack:
        v = stack.pop()
        if kids[v]:
            stack.extend(reversed(kids[v]))
        else:
            labels[v] = str(label)
            label += 1
    return Tree(kids, labels, 0)
