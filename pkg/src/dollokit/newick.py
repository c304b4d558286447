"""Newick parsing/serialization and labeling report output.

Parsing and serialization are iterative so that caterpillars with tens of
thousands of leaves do not hit the recursion limit.  Branch lengths,
internal node names and bracketed comments are accepted and discarded.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field

from .characters import CharacterVector
from .errors import ParseError
from .labeling import DolloLabeling
from .tree import RHO_PRIME, Tree, TreeBuilder

_PUNCT = set("(),:;")
_NEEDS_QUOTE = set("(),:;[]' \t\n")


def _read_quoted(text: str, i: int) -> tuple[str, int]:
    out = []
    i += 1
    while i < len(text):
        if text[i] == "'":
            if i + 1 < len(text) and text[i + 1] == "'":
                out.append("'")
                i += 2
                continue
            return "".join(out), i + 1
        out.append(text[i])
        i += 1
    raise ParseError("unterminated quoted label")


def _tokens(text: str):
    i, n = 0, len(text)
    while i < n:
        c = text[i]
        if c.isspace():
            i += 1
        elif c == "[":
            j = text.find("]", i)
            if j < 0:
                raise ParseError("unterminated comment")
            i = j + 1
        elif c in _PUNCT:
            yield c, i
            i += 1
        elif c == "'":
            name, i = _read_quoted(text, i)
            yield ("name", name), i
        elif c == "]":
            raise ParseError(f"unexpected ']' at {i}")
        else:
            j = i
            while j < n and text[j] not in _PUNCT and text[j] not in "[]'" and not text[j].isspace():
                j += 1
            yield ("name", text[i:j]), i
            i = j


def parse_newick(text: str) -> Tree:
    """Parse a rooted Newick string terminated by ``;``.

    >>> parse_newick("((1,2),3);").n
    3
    """
    b = TreeBuilder()
    open_groups: list[list[int]] = []
    current: int | None = None   # last completed node awaiting ',' or ')'
    after_colon = False
    done = False
    for tok, pos in _tokens(text):
        if done:
            raise ParseError(f"trailing text after ';' at {pos}")
        if isinstance(tok, tuple):
            name = tok[1]
            if after_colon:
                try:
                    float(name)
                except ValueError:
                    raise ParseError(f"bad branch length {name!r} at {pos}") from None
                after_colon = False
            elif current is None:
                current = b.leaf(name)
            # otherwise an internal node name: ignored
            continue
        if after_colon:
            raise ParseError(f"missing branch length at {pos}")
        if tok == "(":
            if current is not None:
                raise ParseError(f"unexpected '(' at {pos}")
            open_groups.append([])
        elif tok == ",":
            if not open_groups:
                raise ParseError(f"',' outside parentheses at {pos}")
            if current is None:
                raise ParseError(f"empty node at {pos}")
            open_groups[-1].append(current)
            current = None
        elif tok == ")":
            if not open_groups:
                raise ParseError(f"unbalanced ')' at {pos}")
            if current is None:
                raise ParseError(f"empty node at {pos}")
            kids = open_groups.pop()
            kids.append(current)
            current = b.join(*kids)
        elif tok == ":":
            if current is None:
                raise ParseError(f"branch length without node at {pos}")
            after_colon = True
        elif tok == ";":
            if open_groups:
                raise ParseError("unbalanced '('")
            if current is None:
                raise ParseError("empty tree")
            done = True
    if after_colon:
        raise ParseError("missing branch length")
    if not done:
        raise ParseError("Newick string must end with ';'")
    return b.build(current)


def _quote(label: str) -> str:
    if label and not (set(label) & _NEEDS_QUOTE):
        return label
    return "'" + label.replace("'", "''") + "'"


def serialize_newick(tree: Tree, node_states=None) -> str:
    """Newick text with the tree's child order; ``node_states`` adds
    ``[&state=s]`` comments after every node."""
    out: list[str] = []
    stack: list = [tree.root]
    while stack:
        item = stack.pop()
        if isinstance(item, str):
            out.append(item)
            continue
        v = item
        note = f"[&state={node_states[v]}]" if node_states is not None else ""
        ch = tree.children(v)
        if not ch:
            out.append(_quote(tree.label(v)) + note)
            continue
        stack.append(")" + note)
        stack.append(ch[1])
        stack.append(",")
        stack.append(ch[0])
        out.append("(")
    return "".join(out) + ";"


@dataclass
class LabelingReport:
    character: CharacterVector
    score_k: int
    birth_edge: tuple | None
    loss_edges: list[tuple]
    node_states: dict[int, int]
    tree: Tree | None = field(default=None, compare=False, repr=False)

    @classmethod
    def from_labeling(cls, tree: Tree, f: CharacterVector, lab: DolloLabeling) -> LabelingReport:
        return cls(f, lab.score_k, lab.birth_edge, sorted(lab.loss_edges, key=_edge_key),
                   dict(enumerate(lab.node_states)), tree)


def _edge_key(edge):
    p, c = edge
    return (-1 if p == RHO_PRIME else p, c)


def _edge_str(edge) -> str:
    return f"{edge[0]}->{edge[1]}"


def write_labeling(report: LabelingReport, format: str = "json") -> str:
    """Serialize a report as ``json``, ``tsv`` or ``annotated-newick``."""
    tree = report.tree
    if format == "json":
        labels = {}
        if tree is not None:
            labels = {v: tree.label(v) for v in report.node_states}
        doc = {
            "character": str(report.character),
            "leaves": list(report.character.labels),
            "score_k": report.score_k,
            "birth_edge": list(report.birth_edge) if report.birth_edge else None,
            "loss_edges": [list(e) for e in report.loss_edges],
            "node_states": [{"node": v, "label": labels.get(v), "state": s}
                            for v, s in sorted(report.node_states.items())],
        }
        if tree is not None:
            doc["tree"] = serialize_newick(tree)
        return json.dumps(doc, indent=2)
    if format == "tsv":
        lines = [
            f"# character\t{report.character}",
            f"# k\t{report.score_k}",
            "# birth_edge\t" + (_edge_str(report.birth_edge) if report.birth_edge else ""),
            "# loss_edges\t" + ",".join(_edge_str(e) for e in report.loss_edges),
            "node\tlabel\tstate",
        ]
        for v, s in sorted(report.node_states.items()):
            lab = tree.label(v) if tree is not None else None
            lines.append(f"{v}\t{lab if lab is not None else '-'}\t{s}")
        return "\n".join(lines) + "\n"
    if format == "annotated-newick":
        if tree is None:
            raise ValueError("annotated-newick output needs the report's tree")
        return f"[&dollo_k={report.score_k}]" + serialize_newick(tree, report.node_states)
    raise ValueError(f"unknown labeling format {format!r}")


def read_labeling_json(text: str) -> LabelingReport:
    """Inverse of ``write_labeling(report, "json")``."""
    try:
        doc = json.loads(text)
        labels = tuple(doc["leaves"])
        character = CharacterVector(labels, tuple(int(c) for c in doc["character"]))
        birth = tuple(doc["birth_edge"]) if doc["birth_edge"] else None
        return LabelingReport(
            character,
            int(doc["score_k"]),
            birth,
            [tuple(e) for e in doc["loss_edges"]],
            {int(r["node"]): int(r["state"]) for r in doc["node_states"]},
            parse_newick(doc["tree"]) if doc.get("tree") else None,
        )
    except (KeyError, TypeError, json.JSONDecodeError) as exc:
        raise ParseError(f"malformed labeling JSON: {exc}") from exc
