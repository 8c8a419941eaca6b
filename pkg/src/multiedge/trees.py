"""Plane multi-edge trees, pruned d-ary trees, their statistics and
exhaustive generators.

Both tree kinds are immutable. Each node stores an ordered tuple of
``(label, child)`` links. For a :class:`MultiEdgeTree` the label is the edge
multiplicity; for a :class:`DAryTree` it is the 1-based position of the
child slot.

The canonical text form nests parenthesised link lists, e.g.
``(2:(),1:())`` is a root with two leaf children attached by 2 and 1 edges.
The same syntax is used for d-ary trees, with positions as labels.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterator

__all__ = [
    "MultiEdgeTree",
    "DAryMultiEdgeTree",
    "DAryTree",
    "TreeStats",
    "OracleCeilingError",
    "ORACLE_CEILING",
    "stats",
    "parse_tree",
    "parse_dary",
    "iter_multi_edge",
    "iter_dary_multi",
    "iter_dary",
    "enumerate_multi_edge",
    "enumerate_dary_multi",
    "enumerate_dary",
]

#: Largest size (edges for multi-edge trees, vertices for d-ary trees) the
#: exhaustive generators accept unless a caller passes its own ceiling.
ORACLE_CEILING = 10


class OracleCeilingError(ValueError):
    """Raised when an exhaustive enumeration is requested above the ceiling."""


class _PlaneTree:
    __slots__ = ("children", "vertices", "height", "_text", "_hash")

    def _init_links(self, links):
        self.children = links
        self.vertices = 1 + sum(c.vertices for _, c in links)
        self.height = 1 + max(c.height for _, c in links) if links else 0
        self._text = "(" + ",".join(f"{lab}:{c._text}" for lab, c in links) + ")"
        self._hash = hash((type(self).__name__, self._text))

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self._text == other._text

    def __hash__(self):
        return self._hash

    def __str__(self):
        return self._text

    def to_text(self) -> str:
        """Canonical serialisation, usable as a dictionary key."""
        return self._text

    def nodes(self) -> Iterator["_PlaneTree"]:
        """Vertices in preorder (iterative, safe for deep trees)."""
        stack = [self]
        while stack:
            node = stack.pop()
            yield node
            stack.extend(c for _, c in reversed(node.children))

    @property
    def leaves(self) -> int:
        return sum(1 for v in self.nodes() if not v.children)


class MultiEdgeTree(_PlaneTree):
    """Rooted plane tree whose parent links carry positive multiplicities.

    ``size`` is the total number of edges (multiplicities summed) and
    ``max_outdegree`` the largest sum of outgoing multiplicities at a vertex.
    """

    __slots__ = ("size", "max_outdegree")

    def __init__(self, children=()):
        links = tuple(children)
        size = own = 0
        deg = 0
        for m, c in links:
            if not isinstance(c, MultiEdgeTree):
                raise TypeError("children must be MultiEdgeTree instances")
            if m < 1 or m != int(m):
                raise ValueError(f"edge multiplicity must be a positive integer, got {m}")
            own += m
            size += m + c.size
            if c.max_outdegree > deg:
                deg = c.max_outdegree
        self._init_links(links)
        self.size = size
        self.max_outdegree = max(own, deg)

    def __repr__(self):
        return f"MultiEdgeTree({self._text!r})"


class DAryTree(_PlaneTree):
    """Pruned d-ary tree: children sit in distinct slots ``1..d``."""

    __slots__ = ("d",)

    def __init__(self, d: int, children=()):
        if d < 1:
            raise ValueError("d must be positive")
        links = tuple((int(p), c) for p, c in children)
        prev = 0
        for p, c in links:
            if not prev < p <= d:
                raise ValueError(
                    f"positions must be strictly increasing in 1..{d}, got {[q for q, _ in links]}"
                )
            if not isinstance(c, DAryTree) or c.d != d:
                raise TypeError(f"children must be DAryTree instances with d={d}")
            prev = p
        self.d = d
        self._init_links(links)

    def __repr__(self):
        return f"DAryTree(d={self.d}, {self._text!r})"


@dataclass(frozen=True)
class DAryMultiEdgeTree:
    """A multi-edge tree together with an out-degree bound ``d``."""

    tree: MultiEdgeTree
    d: int

    def __post_init__(self):
        if self.d < 1:
            raise ValueError("d must be positive")
        if self.tree.max_outdegree > self.d:
            raise ValueError(
                f"out-degree {self.tree.max_outdegree} exceeds the bound d={self.d}"
            )

    @property
    def vertices(self) -> int:
        return self.tree.vertices

    @property
    def height(self) -> int:
        return self.tree.height

    def to_text(self) -> str:
        return self.tree.to_text()


@dataclass(frozen=True)
class TreeStats:
    height: int
    vertices: int
    leaves: int
    children_histogram: dict[int, int] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "height": self.height,
            "vertices": self.vertices,
            "leaves": self.leaves,
            "children_histogram": {str(r): c for r, c in sorted(self.children_histogram.items())},
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def stats(t) -> TreeStats:
    """Height, vertex count, leaf count and the number of vertices with
    exactly ``r`` children, for any tree kind in this module."""
    if isinstance(t, DAryMultiEdgeTree):
        t = t.tree
    hist = Counter(len(v.children) for v in t.nodes())
    return TreeStats(
        height=t.height,
        vertices=t.vertices,
        leaves=hist.get(0, 0),
        children_histogram=dict(sorted(hist.items())),
    )


# -- parsing ---------------------------------------------------------------


def _parse(text: str, make_node):
    s = "".join(text.split())
    if not s:
        raise ValueError("empty tree text")
    # Each frame holds the links collected so far for one open node and the
    # label under which that node hangs from its parent.
    stack: list[tuple[list, int | None]] = []
    i = 0
    pending_label = None
    result = None
    while i < len(s):
        ch = s[i]
        if ch == "(":
            if stack and pending_label is None:
                raise ValueError(f"missing link label at offset {i}")
            stack.append(([], pending_label))
            pending_label = None
            i += 1
        elif ch == ")":
            if not stack or pending_label is not None:
                raise ValueError(f"unexpected ')' at offset {i}")
            links, label = stack.pop()
            node = make_node(links)
            if stack:
                stack[-1][0].append((label, node))
            else:
                result = node
                i += 1
                break
            i += 1
            if i < len(s) and s[i] == ",":
                i += 1
                if i >= len(s) or not s[i].isdigit():
                    raise ValueError(f"expected a link after ',' at offset {i}")
            elif i < len(s) and s[i] != ")":
                raise ValueError(f"expected ',' or ')' at offset {i}")
        elif ch.isdigit():
            j = i
            while j < len(s) and s[j].isdigit():
                j += 1
            if j >= len(s) or s[j] != ":":
                raise ValueError(f"expected ':' after label at offset {j}")
            pending_label = int(s[i:j])
            i = j + 1
        else:
            raise ValueError(f"unexpected character {ch!r} at offset {i}")
    if result is None or i != len(s):
        raise ValueError("malformed tree text")
    return result


def parse_tree(text: str) -> MultiEdgeTree:
    """Inverse of :meth:`MultiEdgeTree.to_text`."""
    return _parse(text, MultiEdgeTree)


def parse_dary(text: str, d: int) -> DAryTree:
    """Parse a d-ary tree whose link labels are slot positions."""
    return _parse(text, lambda links: DAryTree(d, links))


# -- exhaustive generators -------------------------------------------------
#
# Results for every size are memoised as tuples; subtrees are shared between
# the trees that contain them. Generation order is lexicographic on
# (first label, first subtree, remaining links), with subtrees ordered by size
# and then by their own generation order.


def _check_ceiling(value: int, ceiling: int | None, what: str):
    limit = ORACLE_CEILING if ceiling is None else ceiling
    if value > limit:
        raise OracleCeilingError(
            f"{what}={value} exceeds the oracle ceiling {limit}; "
            "exhaustive enumeration grows exponentially"
        )


@lru_cache(maxsize=None)
def _multi_edge(n: int) -> tuple[MultiEdgeTree, ...]:
    return tuple(MultiEdgeTree(links) for links in _multi_forests(n))


@lru_cache(maxsize=None)
def _multi_forests(n: int) -> tuple[tuple, ...]:
    if n == 0:
        return ((),)
    out = []
    for m in range(1, n + 1):
        for s in range(0, n - m + 1):
            rests = _multi_forests(n - m - s)
            for child in _multi_edge(s):
                for rest in rests:
                    out.append(((m, child),) + rest)
    return tuple(out)


@lru_cache(maxsize=None)
def _dary_multi(d: int, v: int) -> tuple[MultiEdgeTree, ...]:
    return tuple(MultiEdgeTree(links) for links in _dary_multi_forests(d, v - 1, d))


@lru_cache(maxsize=None)
def _dary_multi_forests(d: int, v: int, budget: int) -> tuple[tuple, ...]:
    # forests with v vertices in total whose link multiplicities sum to <= budget
    if v == 0:
        return ((),)
    out = []
    for m in range(1, budget + 1):
        for s in range(1, v + 1):
            rests = _dary_multi_forests(d, v - s, budget - m)
            for child in _dary_multi(d, s):
                for rest in rests:
                    out.append(((m, child),) + rest)
    return tuple(out)


@lru_cache(maxsize=None)
def _dary(d: int, v: int) -> tuple[DAryTree, ...]:
    return tuple(DAryTree(d, links) for links in _dary_forests(d, v - 1, 1))


@lru_cache(maxsize=None)
def _dary_forests(d: int, v: int, first: int) -> tuple[tuple, ...]:
    # forests with v vertices using slots first..d
    if v == 0:
        return ((),)
    out = []
    for p in range(first, d + 1):
        for s in range(1, v + 1):
            rests = _dary_forests(d, v - s, p + 1)
            for child in _dary(d, s):
                for rest in rests:
                    out.append(((p, child),) + rest)
    return tuple(out)


def iter_multi_edge(n: int, ceiling: int | None = None) -> Iterator[MultiEdgeTree]:
    """All plane multi-edge trees with exactly ``n`` edges."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    _check_ceiling(n, ceiling, "n")
    return iter(_multi_edge(n))


def iter_dary_multi(d: int, n_vertices: int, ceiling: int | None = None) -> Iterator[DAryMultiEdgeTree]:
    """All d-ary multi-edge trees with ``n_vertices`` vertices."""
    if d < 1 or n_vertices < 1:
        raise ValueError("d and n_vertices must be positive")
    _check_ceiling(n_vertices, ceiling, "n_vertices")
    return (DAryMultiEdgeTree(t, d) for t in _dary_multi(d, n_vertices))


def iter_dary(d: int, n_vertices: int, ceiling: int | None = None) -> Iterator[DAryTree]:
    """All pruned d-ary trees with ``n_vertices`` vertices."""
    if d < 1 or n_vertices < 1:
        raise ValueError("d and n_vertices must be positive")
    _check_ceiling(n_vertices, ceiling, "n_vertices")
    return iter(_dary(d, n_vertices))


def _drive(it, visit: Callable | None) -> int:
    count = 0
    for t in it:
        if visit is not None:
            visit(t)
        count += 1
    return count


def enumerate_multi_edge(n: int, visit: Callable[[MultiEdgeTree], object] | None = None,
                         ceiling: int | None = None) -> int:
    """Call ``visit`` on every multi-edge tree of size ``n``; return how many."""
    return _drive(iter_multi_edge(n, ceiling), visit)


def enumerate_dary_multi(d: int, n_vertices: int, visit=None, ceiling: int | None = None) -> int:
    return _drive(iter_dary_multi(d, n_vertices, ceiling), visit)


def enumerate_dary(d: int, n_vertices: int, visit=None, ceiling: int | None = None) -> int:
    return _drive(iter_dary(d, n_vertices, ceiling), visit)
