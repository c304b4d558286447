import pytest

from dollokit import CharacterVector, Tree, parse_character, parse_newick

FIG1 = "(((1,2),(3,4)),(5,6));"
FIG3 = "((((1,2),3),4),(5,6));"
FIG4 = "(((1,2),3),(4,5));"


def char(tree: Tree, bits: str) -> CharacterVector:
    return parse_character(bits, tree)


def node_of(tree: Tree, *labels) -> int:
    """Node whose leaf set is exactly ``labels``."""
    want = {str(x) for x in labels}
    for v in range(len(tree)):
        below = {tree.label(u) for u in tree.subtree(v) if tree.is_leaf(u)}
        if below == want:
            return v
    raise LookupError(labels)


@pytest.fixture
def fig1():
    return parse_newick(FIG1)


@pytest.fixture
def fig3():
    return parse_newick(FIG3)


@pytest.fixture
def fig4():
    return parse_newick(FIG4)


#: (criterion, passed, detail) lines collected by the acceptance module
ACCEPTANCE_RESULTS: list[tuple[str, bool, str]] = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in ACCEPTANCE_RESULTS:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'} {name}: {detail}")
