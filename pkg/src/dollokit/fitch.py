"""Fitch small parsimony (bottom-up and top-down phases) and Dollo comparisons."""
from __future__ import annotations

from dataclasses import dataclass, field

from .characters import CharacterVector
from .labeling import dollo_score
from .tree import Tree, generate_caterpillar

ZERO, ONE, BOTH = frozenset({0}), frozenset({1}), frozenset({0, 1})


@dataclass
class FitchResult:
    state_sets: tuple[frozenset, ...]
    union_count: int
    mp_extension: dict[int, int] = field(default_factory=dict)

    @property
    def parsimony_score(self) -> int:
        return self.union_count


def fitch_bottom_up(tree: Tree, f: CharacterVector) -> FitchResult:
    leaf = f.leaf_states(tree)
    sets: list[frozenset] = [BOTH] * len(tree)
    unions = 0
    for v in range(len(tree)):
        ch = tree.children(v)
        if not ch:
            sets[v] = ONE if leaf[v] else ZERO
            continue
        a, b = sets[ch[0]], sets[ch[1]]
        common = a & b
        if common:
            sets[v] = common
        else:
            sets[v] = a | b
            unions += 1
    return FitchResult(tuple(sets), unions)


def fitch_top_down(tree: Tree, result: FitchResult) -> dict[int, int]:
    """Resolve state sets root-first; ``{0,1}`` without guidance resolves to 0.

    Also stores the extension on ``result.mp_extension``.
    """
    sets = result.state_sets
    g = [0] * len(tree)
    for v in reversed(range(len(tree))):
        p = tree.parent(v)
        if p is not None and g[p] in sets[v]:
            g[v] = g[p]
        else:
            g[v] = min(sets[v])
    result.mp_extension = dict(enumerate(g))
    return result.mp_extension


def fitch(tree: Tree, f: CharacterVector) -> FitchResult:
    """Both phases; the returned result has ``mp_extension`` populated."""
    res = fitch_bottom_up(tree, f)
    fitch_top_down(tree, res)
    return res


def parsimony_score(tree: Tree, f: CharacterVector) -> int:
    return fitch_bottom_up(tree, f).union_count


def changing_number(tree: Tree, g, count_root_edge: bool = False) -> int:
    """Number of change edges of extension ``g`` (indexable by node id)."""
    changes = sum(g[v] != g[tree.parent(v)] for v in range(len(tree) - 1))
    if count_root_edge and g[tree.root] == 1:
        changes += 1
    return changes


@dataclass(frozen=True)
class ScoreComparison:
    l: int
    k_f: int
    k_fbar: int
    bound_ok: bool
    gap: int


def compare_scores(tree: Tree, f: CharacterVector) -> ScoreComparison:
    """Fitch score against the Dollo scores of ``f`` and its inverse."""
    l = parsimony_score(tree, f)
    k_f = dollo_score(tree, f)
    k_fbar = dollo_score(tree, f.inverted())
    return ScoreComparison(l, k_f, k_fbar, l <= min(k_f, k_fbar) + 1, k_f - l)


def fig5_instance(a: int, b: int) -> tuple[Tree, CharacterVector, CharacterVector]:
    """Tree on ``6 + a + b`` leaves with ``l = 3``, ``k(f) = b + 3``, ``k(fbar) = a + 2``.

    The tree is ``caterpillar(a + b + 6)``.  Reading leaves from the root
    downwards, ``f`` is::

        1  0^(b+2)  1^(a+1)  [0 1]      (the bracketed pair is the cherry)

    Every state-0 leaf of ``f`` sits alone next to a subtree that still holds
    a 1, so each costs one loss (``b + 3``).  For ``fbar`` the B-node is the
    child of the root, leaf 1 lies outside it, and the remaining ``a + 2``
    zeros each cost one loss.  The Fitch pass takes unions only at the
    cherry, at the single 1/0 switch along the spine and at the root.
    """
    if a < 1 or b < 1:
        raise ValueError("a and b must be >= 1")
    n = a + b + 6
    tree = generate_caterpillar(n)
    bits = "1" + "0" * (b + 2) + "1" * (a + 1) + "01"
    f = CharacterVector(tree.leaf_labels, tuple(int(c) for c in bits))
    return tree, f, f.inverted()
