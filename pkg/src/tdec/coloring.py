"""Edge colorings, TDE validation, and explicit path colorings.

A TDE-coloring is a proper edge coloring in which every edge is adjacent to
all members of at least one color class. That class can never be the edge's
own class, since an edge is not adjacent to itself.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .errors import LengthMismatch, PathTooShort, TdecError
from .graph import Graph


@dataclass(frozen=True)
class EdgeColoring:
    """``colors[e]`` is the class of edge ``e``; classes are 0..k-1, all used."""

    colors: tuple[int, ...]

    def __post_init__(self):
        colors = tuple(int(c) for c in self.colors)
        object.__setattr__(self, "colors", colors)
        if colors and (min(colors) < 0 or set(colors) != set(range(max(colors) + 1))):
            raise TdecError(
                f"coloring must use every class 0..k-1 exactly, got classes {sorted(set(colors))}"
            )

    @property
    def k(self) -> int:
        return max(self.colors) + 1 if self.colors else 0

    def __len__(self):
        return len(self.colors)

    def classes(self) -> list[list[int]]:
        out = [[] for _ in range(self.k)]
        for e, c in enumerate(self.colors):
            out[c].append(e)
        return out

    @classmethod
    def from_any(cls, colors: Sequence[int]) -> "EdgeColoring":
        """Accept arbitrary labels and relabel them in first-occurrence order."""
        relabel = {}
        return cls(tuple(relabel.setdefault(c, len(relabel)) for c in colors))

    def to_dict(self) -> dict:
        return {"k": self.k, "colors": list(self.colors)}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> "EdgeColoring":
        c = cls(tuple(data["colors"]))
        if "k" in data and int(data["k"]) != c.k:
            raise TdecError(f"declared k={data['k']} but colors use {c.k} classes")
        return c


def normalize(c: EdgeColoring) -> EdgeColoring:
    """Relabel classes in order of first appearance along edge ids."""
    return EdgeColoring.from_any(c.colors)


@dataclass(frozen=True)
class TdeReport:
    proper: bool
    conflicts: tuple[tuple[int, int], ...]
    dominator: tuple[Optional[int], ...]
    failures: tuple[int, ...]
    k: int = 0
    extra: dict = field(default_factory=dict, compare=False)

    @property
    def valid(self) -> bool:
        return self.proper and not self.failures

    def to_dict(self) -> dict:
        return {
            "valid": self.valid,
            "k": self.k,
            "proper": self.proper,
            "conflicts": [list(p) for p in self.conflicts],
            "dominator": list(self.dominator),
            "failures": list(self.failures),
        }


def validate(g: Graph, c: EdgeColoring) -> TdeReport:
    if len(c) != g.edge_count:
        raise LengthMismatch(f"coloring has {len(c)} entries, graph has {g.edge_count} edges")
    masks = g.line_masks()
    colors = c.colors
    class_mask = [0] * c.k
    for e, col in enumerate(colors):
        class_mask[col] |= 1 << e

    conflicts = []
    for e in range(g.edge_count):
        same = masks[e] & class_mask[colors[e]] & ~((1 << (e + 1)) - 1)
        f = e + 1
        same >>= e + 1
        while same:
            if same & 1:
                conflicts.append((e, f))
            same >>= 1
            f += 1

    dominator = []
    failures = []
    for e in range(g.edge_count):
        found = None
        for col, cm in enumerate(class_mask):
            if cm & ~masks[e] == 0:
                found = col
                break
        dominator.append(found)
        if found is None:
            failures.append(e)
    return TdeReport(
        proper=not conflicts,
        conflicts=tuple(conflicts),
        dominator=tuple(dominator),
        failures=tuple(failures),
        k=c.k,
    )


def is_tde_coloring(g: Graph, c: EdgeColoring) -> bool:
    return validate(g, c).valid


# Witnesses for P_3..P_8, one entry per edge in path order.
_SMALL_PATH_WITNESSES = {
    3: (0, 1),
    4: (0, 1, 0),
    5: (0, 1, 2, 0),
    6: (0, 1, 2, 3, 0),
    7: (0, 1, 0, 2, 3, 2),
    8: (0, 1, 0, 2, 3, 4, 2),
}


def _block_coloring(edges: int) -> list:
    """Repeating block 1, fresh, fresh, 2 over ``edges`` edges (a multiple of 4)."""
    out = []
    fresh = 3
    for i in range(1, edges + 1):
        if i % 4 == 1:
            out.append(1)
        elif i % 4 == 0:
            out.append(2)
        else:
            out.append(fresh)
            fresh += 1
    return out


def construct_path_tdec(n: int) -> EdgeColoring:
    """A TDE-coloring of P_n with ``bounds.path_formula(n)`` classes.

    For n >= 9 the first edges repeat the block (1, a, b, 2) with fresh a, b
    and a residue-specific tail finishes the path.
    """
    if n < 3:
        raise PathTooShort(f"P_{n} has no TDE-coloring; need n >= 3")
    if n in _SMALL_PATH_WITNESSES:
        return EdgeColoring(_SMALL_PATH_WITNESSES[n])
    r = n % 4
    if r == 1:
        k = (n - 1) // 4
        colors = _block_coloring(4 * k)
    else:
        k = (n - r) // 4 if r else n // 4 - 1
        colors = _block_coloring(4 * k - 4)
        if r == 2:
            tail = [1, 2 * k + 1, 2 * k + 2, 2 * k + 3, 2]
        elif r == 3:
            tail = [1, 2 * k + 1, 2 * k + 2, 2 * k + 3, 2 * k + 4, 2]
        else:
            tail = [1, 2 * k + 1, 2 * k + 2, 2, 2 * k + 3, 2 * k + 4, 2]
        colors += tail
    assert len(colors) == n - 1
    return EdgeColoring.from_any(colors)
