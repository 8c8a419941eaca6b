"""Height-preserving bijection between d-ary multi-edge trees and pruned
d-ary trees.

A vertex whose children hang by ``k_1, ..., k_r`` edges is sent to a vertex
whose children occupy the slots ``k_1, k_1 + k_2, ..., k_1 + ... + k_r``.
The inverse takes successive differences of the slot positions.
"""

from __future__ import annotations

from itertools import accumulate

from .trees import DAryMultiEdgeTree, DAryTree, MultiEdgeTree

__all__ = ["to_dary", "from_dary"]


def _postorder(root):
    # (node, children-done) pairs; avoids recursion on deep chains
    stack = [(root, False)]
    while stack:
        node, done = stack.pop()
        if done:
            yield node
        else:
            stack.append((node, True))
            stack.extend((c, False) for _, c in reversed(node.children))


def to_dary(t: DAryMultiEdgeTree | MultiEdgeTree, d: int | None = None) -> DAryTree:
    """Map a d-ary multi-edge tree to its pruned d-ary tree.

    ``t`` may be a :class:`DAryMultiEdgeTree` or a bare tree plus ``d``.
    The out-degree bound is re-checked at every vertex.
    """
    if isinstance(t, DAryMultiEdgeTree):
        if d is not None and d != t.d:
            raise ValueError(f"conflicting bounds d={d} and t.d={t.d}")
        tree, d = t.tree, t.d
    else:
        if d is None:
            raise ValueError("d is required for a bare MultiEdgeTree")
        tree = t
    image: dict[int, DAryTree] = {}
    for node in _postorder(tree):
        mults = [m for m, _ in node.children]
        if sum(mults) > d:
            raise ValueError(f"vertex with out-degree {sum(mults)} violates the bound d={d}")
        positions = accumulate(mults)
        image[id(node)] = DAryTree(d, [(p, image[id(c)]) for p, (_, c) in zip(positions, node.children)])
    return image[id(tree)]


def from_dary(t: DAryTree) -> DAryMultiEdgeTree:
    """Inverse of :func:`to_dary`."""
    image: dict[int, MultiEdgeTree] = {}
    for node in _postorder(t):
        links = []
        prev = 0
        for p, c in node.children:
            links.append((p - prev, image[id(c)]))
            prev = p
        image[id(node)] = MultiEdgeTree(links)
    return DAryMultiEdgeTree(image[id(t)], t.d)
