"""Binary trees, tree pairs, and the piecewise-linear group they represent.

A tree pair (top, bottom) with equal leaf counts stands for the PL
homeomorphism of [0,1] sending the top partition's breakpoints to the
bottom's, linearly in between.  Pairs coming out of the group operations
are always reduced.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .dyadic import (
    DEPTH_CAP,
    Dyadic,
    SdInterval,
    SdPartition,
    ZERO,
    ONE,
    e_points,
    point_sign,
)
from .errors import DepthExceeded, NotARefinement, ParseError


@dataclass(frozen=True)
class Tree:
    """A full binary tree; left and right are both None (leaf) or both set."""

    left: "Tree | None" = None
    right: "Tree | None" = None

    def __post_init__(self):
        if (self.left is None) != (self.right is None):
            raise ValueError("node needs both children")

    @property
    def is_leaf(self) -> bool:
        return self.left is None

    def leaf_count(self) -> int:
        if self.is_leaf:
            return 1
        return self.left.leaf_count() + self.right.leaf_count()

    def depth(self) -> int:
        if self.is_leaf:
            return 0
        return 1 + max(self.left.depth(), self.right.depth())

    def __str__(self) -> str:
        return format_tree(self)


LEAF = Tree()


def node(left: Tree, right: Tree) -> Tree:
    return Tree(left, right)


def format_tree(t: Tree) -> str:
    if t.is_leaf:
        return "."
    return f"({format_tree(t.left)}{format_tree(t.right)})"


def parse_tree(text: str) -> Tree:
    tree, rest = _parse_tree_prefix(text)
    if rest:
        raise ParseError(f"trailing characters {rest!r} after tree")
    return tree


def _parse_tree_prefix(text: str) -> tuple[Tree, str]:
    if not text:
        raise ParseError("unexpected end of tree text")
    if text[0] == ".":
        return LEAF, text[1:]
    if text[0] != "(":
        raise ParseError(f"unexpected character {text[0]!r} in tree")
    left, rest = _parse_tree_prefix(text[1:])
    right, rest = _parse_tree_prefix(rest)
    if not rest or rest[0] != ")":
        raise ParseError("missing ')' in tree")
    return node(left, right), rest[1:]


def tree_from_partition(p: SdPartition) -> Tree:
    bps = set(p.breakpoints)

    def build(iv: SdInterval) -> Tree:
        from .dyadic import midpoint

        mid = midpoint(iv)
        if mid not in bps:
            return LEAF
        return node(
            build(SdInterval(2 * iv.k, iv.m + 1)),
            build(SdInterval(2 * iv.k + 1, iv.m + 1)),
        )

    from .dyadic import UNIT

    return build(UNIT)


def partition_from_tree(t: Tree) -> SdPartition:
    if t.depth() > DEPTH_CAP:
        raise DepthExceeded("tree too deep for dyadic breakpoints")
    points: list[Dyadic] = [ZERO]

    def walk(sub: Tree, lo: Dyadic, hi: Dyadic) -> None:
        if sub.is_leaf:
            points.append(hi)
            return
        mid = (lo + hi).mul_pow2(-1)
        walk(sub.left, lo, mid)
        walk(sub.right, mid, hi)

    walk(t, ZERO, ONE)
    return SdPartition(tuple(points))


def leaf_signs(t: Tree) -> tuple[str, ...]:
    """Sign per leaf, left to right: root +, left child inherits, right flips."""
    signs: list[str] = []

    def walk(sub: Tree, s: str) -> None:
        if sub.is_leaf:
            signs.append(s)
            return
        walk(sub.left, s)
        walk(sub.right, "-" if s == "+" else "+")

    walk(t, "+")
    out = tuple(signs)
    assert out[0] == "+" and (len(out) < 2 or out[1] == "-")
    return out


def caret_leaf_indices(t: Tree) -> set[int]:
    """Leaf indices i such that leaves i and i+1 form a caret (0-based)."""
    carets: set[int] = set()

    def walk(sub: Tree, offset: int) -> int:
        if sub.is_leaf:
            return 1
        if sub.left.is_leaf and sub.right.is_leaf:
            carets.add(offset)
            return 2
        nl = walk(sub.left, offset)
        return nl + walk(sub.right, offset + nl)

    walk(t, 0)
    return carets


def remove_caret(t: Tree, i: int) -> Tree:
    """Collapse the caret occupying leaves i, i+1 into a single leaf."""

    def walk(sub: Tree, offset: int) -> Tree:
        if sub.is_leaf:
            return sub
        if offset == i and sub.left.is_leaf and sub.right.is_leaf:
            return LEAF
        nl = sub.left.leaf_count()
        if i < offset + nl:
            return node(walk(sub.left, offset), sub.right)
        return node(sub.left, walk(sub.right, offset + nl))

    return walk(t, 0)


def graft(t: Tree, grafts: list[Tree]) -> Tree:
    """Replace leaf i with grafts[i], for all leaves left to right."""
    it = iter(grafts)

    def walk(sub: Tree) -> Tree:
        if sub.is_leaf:
            return next(it)
        return node(walk(sub.left), walk(sub.right))

    out = walk(t)
    assert next(it, None) is None
    return out


def tree_union(a: Tree, b: Tree) -> Tree:
    """Least common refinement of two trees."""
    if a.is_leaf:
        return b
    if b.is_leaf:
        return a
    return node(tree_union(a.left, b.left), tree_union(a.right, b.right))


def grafts_between(base: Tree, refined: Tree) -> list[Tree]:
    """Subtrees hanging below each leaf of base inside refined."""
    out: list[Tree] = []

    def walk(b: Tree, r: Tree) -> None:
        if b.is_leaf:
            out.append(r)
            return
        if r.is_leaf:
            raise NotARefinement("target does not refine the base tree")
        walk(b.left, r.left)
        walk(b.right, r.right)

    walk(base, refined)
    return out


@dataclass(frozen=True)
class TreePair:
    """Group element as a (top, bottom) tree pair with equal leaf counts."""

    top: Tree
    bottom: Tree
    reduced: bool = False

    def __post_init__(self):
        if self.top.leaf_count() != self.bottom.leaf_count():
            raise ValueError("tree pair needs equal leaf counts")

    @property
    def n(self) -> int:
        return self.top.leaf_count()

    def __str__(self) -> str:
        return f"{format_tree(self.top)}|{format_tree(self.bottom)}"


IDENTITY = TreePair(LEAF, LEAF, reduced=True)


def parse_pair(text: str) -> TreePair:
    top_text, sep, bottom_text = text.partition("|")
    if not sep:
        raise ParseError("tree pair needs the form '<top>|<bottom>'")
    return TreePair(parse_tree(top_text), parse_tree(bottom_text))


def reduce_pair(g: TreePair) -> TreePair:
    """Remove matching carets until none remain; the result is unique."""
    if g.reduced:
        return g
    top, bottom = g.top, g.bottom
    while True:
        common = caret_leaf_indices(top) & caret_leaf_indices(bottom)
        if not common:
            break
        i = min(common)
        top = remove_caret(top, i)
        bottom = remove_caret(bottom, i)
    return TreePair(top, bottom, reduced=True)


def refine_to(g: TreePair, target_bottom: Tree) -> TreePair:
    """Re-express g over a refined bottom tree; same group element."""
    pieces = grafts_between(g.bottom, target_bottom)
    return TreePair(graft(g.top, pieces), target_bottom)


def inverse(g: TreePair) -> TreePair:
    return TreePair(g.bottom, g.top, reduced=g.reduced)


def multiply(g: TreePair, h: TreePair) -> TreePair:
    """Composition: apply g first, then h.  Result is reduced."""
    common = tree_union(g.bottom, h.top)
    g2 = refine_to(g, common)
    h2 = inverse(refine_to(inverse(h), common))
    return reduce_pair(TreePair(g2.top, h2.bottom))


def apply_map(g: TreePair, x: Dyadic) -> Dyadic:
    """Exact image of x under the PL map of g."""
    if not ZERO <= x <= ONE:
        raise ValueError("argument outside [0,1]")
    src = partition_from_tree(g.top).subintervals()
    dst = partition_from_tree(g.bottom).subintervals()
    for a, b in zip(src, dst):
        if a.lo <= x <= a.hi:
            return b.lo + (x - a.lo).mul_pow2(a.m - b.m)
    raise AssertionError("unreachable: partitions cover [0,1]")


def is_oriented(g: TreePair) -> bool:
    """Top and bottom of the reduced form induce the same leaf signs."""
    r = reduce_pair(g)
    return leaf_signs(r.top) == leaf_signs(r.bottom)


def is_oriented_via_points(g: TreePair) -> bool:
    """Independent test: the map preserves point signs on all of E(top)."""
    for sp in e_points(partition_from_tree(g.top)):
        if point_sign(apply_map(g, sp.point)) != sp.sign:
            return False
    return True


@lru_cache(maxsize=None)
def enumerate_trees(n: int) -> tuple[Tree, ...]:
    """All binary trees with n leaves, in recursive split order (Catalan)."""
    if n < 1:
        raise ValueError("need at least one leaf")
    if n == 1:
        return (LEAF,)
    out = []
    for i in range(1, n):
        for left in enumerate_trees(i):
            for right in enumerate_trees(n - i):
                out.append(node(left, right))
    return tuple(out)


def random_tree(n: int, rng) -> Tree:
    """Uniform over split positions (not uniform Catalan; fine for fuzzing)."""
    if n == 1:
        return LEAF
    i = rng.randint(1, n - 1)
    return node(random_tree(i, rng), random_tree(n - i, rng))
