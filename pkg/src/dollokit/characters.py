"""Binary characters on the leaves of a tree."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Mapping

from .errors import ParseError, ValidationError
from .tree import Tree


@dataclass(frozen=True)
class CharacterVector:
    """Binary states for a fixed, ordered leaf set.

    ``labels`` follows the tree's canonical leaf order, so ``str(f)`` gives
    the compact positional form ``f(1)f(2)...f(n)``.
    """

    labels: tuple[str, ...]
    states: tuple[int, ...]

    def __post_init__(self):
        if len(self.labels) != len(self.states):
            raise ValidationError("labels and states differ in length")
        if any(s not in (0, 1) for s in self.states):
            raise ValidationError("states must be 0 or 1")

    @classmethod
    def from_mapping(cls, tree: Tree, states: Mapping) -> CharacterVector:
        norm = {str(k): v for k, v in states.items()}
        unknown = set(norm) - set(tree.leaf_labels)
        if unknown:
            raise ValidationError(f"unknown leaves: {sorted(unknown)}")
        missing = [lab for lab in tree.leaf_labels if lab not in norm]
        if missing:
            raise ValidationError(f"missing leaves: {missing}")
        return cls(tree.leaf_labels, tuple(int(norm[lab]) for lab in tree.leaf_labels))

    @classmethod
    def from_string(cls, tree: Tree, bits: str) -> CharacterVector:
        return parse_character(bits, tree)

    @property
    def n(self) -> int:
        return len(self.states)

    def __str__(self) -> str:
        return "".join(map(str, self.states))

    def __getitem__(self, label) -> int:
        return self.states[self.labels.index(str(label))]

    def as_dict(self) -> dict[str, int]:
        return dict(zip(self.labels, self.states))

    def ones(self) -> list[str]:
        return [lab for lab, s in zip(self.labels, self.states) if s]

    def inverted(self) -> CharacterVector:
        return CharacterVector(self.labels, tuple(1 - s for s in self.states))

    def check_tree(self, tree: Tree) -> None:
        if self.labels != tree.leaf_labels:
            raise ValidationError("character is not defined on this tree's leaf set")

    def leaf_states(self, tree: Tree) -> list[int]:
        """States indexed by node id; internal nodes get -1."""
        self.check_tree(tree)
        out = [-1] * len(tree)
        for lab, s in zip(self.labels, self.states):
            out[tree.leaf_id(lab)] = s
        return out


def parse_character(text: str, tree: Tree) -> CharacterVector:
    """Parse ``"100001"`` (positional, canonical leaf order) or ``"1=1,2=0,..."``."""
    text = text.strip()
    if "=" in text:
        states: dict[str, int] = {}
        for item in text.replace(";", ",").split(","):
            item = item.strip()
            if not item:
                continue
            lab, sep, val = item.partition("=")
            lab, val = lab.strip(), val.strip()
            if not sep or val not in ("0", "1"):
                raise ParseError(f"bad label=state item {item!r}")
            if lab in states:
                raise ValidationError(f"duplicate leaf {lab!r} in character")
            states[lab] = int(val)
        return CharacterVector.from_mapping(tree, states)
    bad = set(text) - {"0", "1"}
    if bad:
        raise ParseError(f"character contains symbols outside {{0,1}}: {sorted(bad)}")
    if len(text) != tree.n:
        raise ValidationError(
            f"character has length {len(text)} but the tree has {tree.n} leaves")
    return CharacterVector(tree.leaf_labels, tuple(int(c) for c in text))


def read_characters(text: str, tree: Tree) -> list[CharacterVector]:
    """One character per line; blank lines and ``#`` comments are skipped."""
    out = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            out.append(parse_character(line, tree))
    return out


def all_characters(tree: Tree) -> Iterator[CharacterVector]:
    """All ``2**n`` characters in lexicographic order of their bit strings."""
    labels = tree.leaf_labels
    for bits in itertools.product((0, 1), repeat=tree.n):
        yield CharacterVector(labels, bits)
