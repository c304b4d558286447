"""Oracle sweep over every tree shape up to a given size."""
from __future__ import annotations

from dataclasses import dataclass, field

from .characters import all_characters
from .counting import (MemoTables, dollo_count_all, dollo_count_n_minus_2,
                       extended_count, independent_count)
from .errors import CapExceededError
from .fitch import compare_scores, fitch, changing_number
from .labeling import dollo_labeling, dollo_score
from .oracle import (brute_force_count_table, brute_force_dollo_score,
                     brute_force_node_sets, brute_force_parsimony)
from .tree import enumerate_shapes, is_semi_caterpillar, sackin_index

VERIFY_CAP = 10
LABELING_MAX_N = 8
NODE_SET_MAX_N = 7


@dataclass
class VerifyReport:
    max_n: int
    shapes: int = 0
    characters: int = 0
    node_set_queries: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def verify_tree(tree, report: VerifyReport) -> None:
    n = tree.n
    fail = report.failures.append
    name = tree.shape_key()

    table = dollo_count_all(tree)
    if table.total != 2 ** n:
        fail(f"{name}: sum of D_k is {table.total}, expected {2 ** n}")
    if table.counts != brute_force_count_table(tree).counts:
        fail(f"{name}: count table differs from brute force")
    if n >= 2 and table[0] + table[1] != 2 * sackin_index(tree) - 2 * n + 4:
        fail(f"{name}: Sackin identity fails")
    if n >= 3:
        fast = dollo_count_n_minus_2(tree)
        if fast != table[n - 2] or (fast > 0) != is_semi_caterpillar(tree):
            fail(f"{name}: D_(n-2) shortcut disagrees")

    if n <= LABELING_MAX_N:
        for f in all_characters(tree):
            report.characters += 1
            k, minimizers = brute_force_dollo_score(tree, f)
            lab = dollo_labeling(tree, f)
            if k != dollo_score(tree, f) or k != lab.score_k:
                fail(f"{name} f={f}: Dollo score {lab.score_k}, brute force {k}")
            if minimizers != [lab.node_states]:
                fail(f"{name} f={f}: labeling is not the unique minimizer")
            if k > max(n - 2, 0):
                fail(f"{name} f={f}: score above n-2")
            res = fitch(tree, f)
            if res.parsimony_score != brute_force_parsimony(tree, f):
                fail(f"{name} f={f}: Fitch score differs from brute force")
            if changing_number(tree, res.mp_extension) != res.parsimony_score:
                fail(f"{name} f={f}: Fitch extension is not most parsimonious")
            if not compare_scores(tree, f).bound_ok:
                fail(f"{name} f={f}: parsimony bound violated")

    if n <= NODE_SET_MAX_N:
        memo = MemoTables(tree)
        for v in range(len(tree)):
            for k in range(tree.subtree_size(v) + 1):
                report.node_set_queries += 1
                e = len(brute_force_node_sets(tree, v, k, extended=True))
                i = len(brute_force_node_sets(tree, v, k, extended=False))
                if e != extended_count(tree, v, k, memo) or i != independent_count(tree, v, k, memo):
                    fail(f"{name} node {v} k={k}: e/i counts differ from brute force")


def run_verification(max_n: int) -> VerifyReport:
    if max_n < 1:
        raise ValueError("max_n must be >= 1")
    if max_n > VERIFY_CAP:
        raise CapExceededError(f"verify is capped at n={VERIFY_CAP}")
    report = VerifyReport(max_n)
    for n in range(1, max_n + 1):
        for tree in enumerate_shapes(n):
            report.shapes += 1
            verify_tree(tree, report)
    return report
