"""Distance-based tree reconstruction (UPGMA and neighbor joining).

Both builders sort taxa by label before doing anything, and break ties on the
lowest pair of cluster positions, where clusters are ordered by their smallest
leaf label. The result therefore depends only on the labelled matrix, not on
the order rows were supplied in.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

import numpy as np

from .alphabet import SequenceInputError
from .measures import DistanceMatrix

_NEWICK_SPECIAL = set("()[]:;,'\" \t\n")


@dataclass
class Node:
    name: str | None = None
    length: float = 0.0
    children: list["Node"] = field(default_factory=list)

    @property
    def is_leaf(self) -> bool:
        return not self.children

    def leaves(self) -> Iterator["Node"]:
        if self.is_leaf:
            yield self
        for c in self.children:
            yield from c.leaves()

    def leaf_names(self) -> frozenset[str]:
        return frozenset(n.name for n in self.leaves())

    def min_label(self) -> str:
        return min(n.name for n in self.leaves())

    def walk(self) -> Iterator["Node"]:
        yield self
        for c in self.children:
            yield from c.walk()


@dataclass
class PhyloTree:
    """A tree with branch lengths.

    Unrooted (neighbor-joining) trees are stored rooted at the final
    three-way join; ``rooted`` says whether the root is meaningful.
    """

    root: Node
    rooted: bool

    @property
    def labels(self) -> frozenset[str]:
        return self.root.leaf_names()

    def internal_nodes(self) -> list[Node]:
        return [n for n in self.root.walk() if not n.is_leaf]

    def root_to_leaf_depths(self) -> dict[str, float]:
        depths = {}
        stack = [(self.root, 0.0)]
        while stack:
            node, d = stack.pop()
            if node.is_leaf:
                depths[node.name] = d
            for c in node.children:
                stack.append((c, d + c.length))
        return depths

    def splits(self) -> dict[frozenset[str], float]:
        """Edge lengths keyed by the bipartition each edge induces.

        Each side is reported as the half that excludes the smallest label, so
        the two root edges of a rooted binary tree fold into one entry.
        """
        everything = self.labels
        anchor = min(everything)
        out: dict[frozenset[str], float] = {}
        for node in self.root.walk():
            if node is self.root:
                continue
            side = node.leaf_names()
            if anchor in side:
                side = everything - side
            if side:
                out[side] = out.get(side, 0.0) + node.length
        return out

    def has_clade(self, labels) -> bool:
        """True iff some edge separates exactly ``labels`` from the other leaves.

        The full leaf set is accepted trivially.
        """
        labels = frozenset(labels)
        everything = self.labels
        unknown = labels - everything
        if unknown:
            raise SequenceInputError(f"unknown taxa: {', '.join(sorted(unknown))}")
        if not labels or labels == everything:
            return True
        side = labels if min(everything) not in labels else everything - labels
        return side in self.splits()

    def to_newick(self, include_lengths: bool = True, precision: int = 12) -> str:
        return to_newick(self, include_lengths, precision)

    def ascii(self) -> str:
        """Indented text rendering, one node per line."""
        lines: list[str] = []

        def rec(node: Node, prefix: str, last: bool, top: bool) -> None:
            label = node.name if node.is_leaf else "+"
            length = "" if top else f" ({node.length:.4g})"
            lines.append(("" if top else prefix + ("`-- " if last else "|-- ")) + label + length)
            kids = _ordered_children(node)
            ext = "" if top else prefix + ("    " if last else "|   ")
            for i, c in enumerate(kids):
                rec(c, ext, i == len(kids) - 1, False)

        rec(self.root, "", True, True)
        return "\n".join(lines) + "\n"


def _ordered_children(node: Node) -> list[Node]:
    return sorted(node.children, key=Node.min_label)


def _quote(name: str) -> str:
    if any(c in _NEWICK_SPECIAL for c in name):
        return "'" + name.replace("'", "''") + "'"
    return name


def to_newick(tree: PhyloTree, include_lengths: bool = True, precision: int = 12) -> str:
    """Newick string; children are ordered by their smallest leaf label."""

    def rec(node: Node, top: bool) -> str:
        text = _quote(node.name) if node.is_leaf else \
            "(" + ",".join(rec(c, False) for c in _ordered_children(node)) + ")"
        if include_lengths and not top:
            text += ":" + format(node.length + 0.0, f".{precision}g")
        return text

    return rec(tree.root, True) + ";"


def _as_matrix(m) -> DistanceMatrix:
    if isinstance(m, DistanceMatrix):
        dm = m
    else:
        values, labels = m
        dm = DistanceMatrix(tuple(labels), np.asarray(values, dtype=float))
    dm.validate()
    return dm.reorder(sorted(dm.labels))


def upgma(m) -> PhyloTree:
    """Rooted ultrametric tree by size-weighted average linkage.

    ``m`` is a :class:`DistanceMatrix` or a ``(values, labels)`` pair.
    """
    dm = _as_matrix(m)
    k = len(dm)
    if k < 2:
        raise SequenceInputError("UPGMA needs at least two taxa")
    d = dm.values.copy()
    # active clusters, kept in label order: (node, size, height, row in d)
    clusters = [(Node(name=l), 1, 0.0, i) for i, l in enumerate(dm.labels)]
    while len(clusters) > 1:
        best, bi, bj = np.inf, -1, -1
        for i in range(len(clusters)):
            ri = clusters[i][3]
            for j in range(i + 1, len(clusters)):
                v = d[ri, clusters[j][3]]
                if v < best:
                    best, bi, bj = v, i, j
        (ni, si, hi, ri), (nj, sj, hj, rj) = clusters[bi], clusters[bj]
        height = best / 2.0
        ni.length = max(height - hi, 0.0)
        nj.length = max(height - hj, 0.0)
        merged = Node(children=[ni, nj])
        for _, _, _, rm in clusters:
            if rm not in (ri, rj):
                d[ri, rm] = d[rm, ri] = (si * d[ri, rm] + sj * d[rj, rm]) / (si + sj)
        del clusters[bj]
        clusters[bi] = (merged, si + sj, height, ri)
        clusters.sort(key=lambda c: c[0].min_label())
    return PhyloTree(clusters[0][0], rooted=True)


def neighbor_joining(m) -> PhyloTree:
    """Unrooted tree by neighbor joining.

    A negative limb length is clamped to zero and its deficit moved to the
    sibling limb, so the pair's path length still equals their distance.
    The last three clusters are joined to one degree-3 node.
    """
    dm = _as_matrix(m)
    k = len(dm)
    if k < 3:
        raise SequenceInputError("neighbor joining needs at least three taxa")
    nodes = [Node(name=l) for l in dm.labels]
    d = dm.values.copy()
    while len(nodes) > 3:
        r = len(nodes)
        totals = d.sum(axis=1)
        q = (r - 2) * d - totals[:, None] - totals[None, :]
        best, bi, bj = np.inf, -1, -1
        for i in range(r):
            for j in range(i + 1, r):
                if q[i, j] < best:
                    best, bi, bj = q[i, j], i, j
        dij = d[bi, bj]
        li = 0.5 * dij + (totals[bi] - totals[bj]) / (2.0 * (r - 2))
        lj = dij - li
        if li < 0:
            li, lj = 0.0, dij
        elif lj < 0:
            li, lj = dij, 0.0
        nodes[bi].length, nodes[bj].length = li, lj
        merged = Node(children=[nodes[bi], nodes[bj]])
        new_row = 0.5 * (d[bi] + d[bj] - dij)
        keep = [x for x in range(r) if x not in (bi, bj)]
        nodes = [nodes[x] for x in keep] + [merged]
        row = np.append(new_row[keep], 0.0)
        d = np.vstack([np.column_stack([d[np.ix_(keep, keep)], row[:-1]]), row])
        order = sorted(range(len(nodes)), key=lambda x: nodes[x].min_label())
        nodes = [nodes[x] for x in order]
        d = d[np.ix_(order, order)]
    a, b, c = nodes
    dab, dac, dbc = d[0, 1], d[0, 2], d[1, 2]
    a.length = max(0.5 * (dab + dac - dbc), 0.0)
    b.length = max(0.5 * (dab + dbc - dac), 0.0)
    c.length = max(0.5 * (dac + dbc - dab), 0.0)
    return PhyloTree(Node(children=[a, b, c]), rooted=False)


def build_tree(m, method: str = "nj") -> PhyloTree:
    if method == "upgma":
        return upgma(m)
    if method == "nj":
        return neighbor_joining(m)
    raise SequenceInputError(f"unknown tree method {method!r}; expected 'upgma' or 'nj'")


def has_clade(tree: PhyloTree, labels) -> bool:
    return tree.has_clade(labels)
