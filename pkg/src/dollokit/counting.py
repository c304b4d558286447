"""Exact counts of Dollo-k characters.

``e_k(T_v)`` counts extended independent node sets of size ``k`` below
``v`` (no root, no ancestor pairs, no sibling pairs) and ``i_k(T_v)`` the
independent ones (additionally no child of the root).  With ``a, b`` the
children of ``v``::

    i_k(v) = sum_j e_j(a) e_{k-j}(b)
    e_k(v) = i_k(v) + e_{k-1}(a) + e_{k-1}(b)

and ``D_k = sum_v i_k(v)`` over all nodes with at least two leaves
(``k >= 1``), ``D_0 = 2n``.  A subtree with ``m`` leaves has ``e_k = 0``
for ``k > m - 1`` and ``i_k = 0`` for ``k > m - 2``, so rows are truncated
there.  Python ints keep every count exact.
"""
from __future__ import annotations

from dataclasses import dataclass

from .tree import Tree, is_semi_caterpillar, standard_decomposition


@dataclass(frozen=True)
class CountTable:
    n: int
    counts: tuple[int, ...]
    cumulative: tuple[int, ...] | None = None

    @property
    def total(self) -> int:
        return sum(self.counts)

    def __getitem__(self, k: int) -> int:
        return self.counts[k] if 0 <= k < len(self.counts) else 0


class MemoTables:
    """Cached ``e``/``i`` rows for one tree.

    ``e[v][k]`` and ``i[v][k]`` hold computed values; the ``k = 0`` entries
    are the defined base value 1.  ``computations`` counts every cell
    computed beyond the base, so it equals :meth:`cell_count` as long as no
    cell is ever recomputed.
    """

    def __init__(self, tree: Tree):
        self.tree = tree
        self.e: list[list[int]] = [[1] for _ in range(len(tree))]
        self.i: list[list[int]] = [[1] for _ in range(len(tree))]
        self.computations = 0

    def cell_count(self) -> int:
        return sum(len(r) - 1 for r in self.e) + sum(len(r) - 1 for r in self.i)

    def _extend_e(self, v: int, upto: int) -> None:
        tree = self.tree
        row = self.e[v]
        top = min(upto, tree.n_below(v) - 1)
        if len(row) > top:
            return
        a, b = tree.children(v)
        ea, eb = self.e[a], self.e[b]
        for k in range(len(row), top + 1):
            s = _convolve_at(ea, eb, k)
            if k - 1 < len(ea):
                s += ea[k - 1]
            if k - 1 < len(eb):
                s += eb[k - 1]
            row.append(s)
            self.computations += 1

    def fill_e(self, node: int, upto: int) -> None:
        """Fill ``e`` rows for the subtree at ``node`` up to ``k = upto``, children first."""
        tree = self.tree
        if len(self.e[node]) > min(upto, tree.n_below(node) - 1):
            return
        for v in tree.subtree(node):
            if not tree.is_leaf(v):
                self._extend_e(v, upto)

    def fill_i(self, v: int, upto: int) -> None:
        tree = self.tree
        row = self.i[v]
        top = min(upto, tree.n_below(v) - 2)
        if len(row) > top:
            return
        a, b = tree.children(v)
        self.fill_e(a, top)
        self.fill_e(b, top)
        ea, eb = self.e[a], self.e[b]
        for k in range(len(row), top + 1):
            row.append(_convolve_at(ea, eb, k))
            self.computations += 1


def _convolve_at(x: list[int], y: list[int], k: int) -> int:
    lo = max(0, k - len(y) + 1)
    hi = min(k, len(x) - 1)
    return sum(x[j] * y[k - j] for j in range(lo, hi + 1))


def extended_count(tree: Tree, node: int, k: int, memo: MemoTables | None = None) -> int:
    """Number of extended independent node sets of size ``k`` for the subtree at ``node``."""
    if k == 0:
        return 1
    if k > tree.n_below(node) - 1:
        return 0
    memo = memo or MemoTables(tree)
    memo.fill_e(node, k)
    return memo.e[node][k]


def independent_count(tree: Tree, node: int, k: int, memo: MemoTables | None = None) -> int:
    """Number of independent node sets of size ``k`` for the subtree at ``node``."""
    if k == 0:
        return 1
    if k > tree.n_below(node) - 2:
        return 0
    memo = memo or MemoTables(tree)
    memo.fill_i(node, k)
    return memo.i[node][k]


def dollo_count(tree: Tree, k: int, memo: MemoTables | None = None) -> int:
    """Number of Dollo-k characters on ``tree``."""
    n = tree.n
    if k == 0:
        return 2 * n
    if k > n - 2:
        return 0
    memo = memo or MemoTables(tree)
    return sum(independent_count(tree, v, k, memo) for v in tree.internal_nodes()
               if tree.n_below(v) - 2 >= k)


def dollo_count_all(tree: Tree, cumulative: bool = False,
                    memo: MemoTables | None = None) -> CountTable:
    """``D_0 .. D_{n-2}`` from one shared memo, filled children-before-parents."""
    n = tree.n
    if n <= 2:
        counts = [2 * n]
    else:
        memo = memo or MemoTables(tree)
        kmax = n - 2
        counts = [0] * (kmax + 1)
        counts[0] = 2 * n
        for child in tree.children(tree.root):
            memo.fill_e(child, kmax)
        for v in tree.internal_nodes():
            memo.fill_i(v, kmax)
            row = memo.i[v]
            for k in range(1, len(row)):
                counts[k] += row[k]
    prefix = None
    if cumulative:
        prefix, run = [], 0
        for c in counts:
            run += c
            prefix.append(run)
        prefix = tuple(prefix)
    return CountTable(n, tuple(counts), prefix)


def dollo_count_n_minus_2(tree: Tree) -> int:
    """``D_{n-2}`` from the shape alone: 0, 2 (caterpillar) or 4 (two caterpillar sides of >= 2 leaves)."""
    if tree.n < 3:
        raise ValueError("D_{n-2} shortcut needs n >= 3")
    if not is_semi_caterpillar(tree):
        return 0
    a, b = standard_decomposition(tree, tree.root)
    return 2 if min(tree.n_below(a), tree.n_below(b)) == 1 else 4

