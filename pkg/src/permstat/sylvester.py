"""Binary search trees and co-sylvester classes.

Trees are nested ``Tree`` nodes; ``None`` is the empty tree.  The text form
is ``label(left,right)`` with an empty slot left blank and the parentheses
omitted on leaves, e.g. ``5(2(1,3(,4)),8(7(6,),9))``.
"""

from dataclasses import dataclass

from .core import DOWN
from .errors import InvalidInput, ParseError


@dataclass(frozen=True, slots=True)
class Tree:
    label: int
    left: "Tree | None" = None
    right: "Tree | None" = None

    def labels(self):
        """In-order traversal, which is sorted for a search tree."""
        out = []
        stack = []
        node = self
        while stack or node is not None:
            while node is not None:
                stack.append(node)
                node = node.left
            node = stack.pop()
            out.append(node.label)
            node = node.right
        return out

    def __str__(self):
        return format_tree(self)


def validate_tree(tree, n):
    """Raise unless ``tree`` is a binary search tree on exactly 1..n."""
    labels = tree.labels() if tree is not None else []
    if labels != list(range(1, n + 1)):
        raise InvalidInput(f"tree labels {labels} are not 1..{n} in search order")


def format_tree(tree):
    if tree is None:
        return ""
    if tree.left is None and tree.right is None:
        return str(tree.label)
    return f"{tree.label}({format_tree(tree.left)},{format_tree(tree.right)})"


def parse_tree(text):
    text = text.strip()
    pos = 0

    def node():
        nonlocal pos
        start = pos
        while pos < len(text) and text[pos].isdigit():
            pos += 1
        if start == pos:
            return None
        label = int(text[start:pos])
        if pos < len(text) and text[pos] == "(":
            pos += 1
            left = node()
            expect(",")
            right = node()
            expect(")")
            return Tree(label, left, right)
        return Tree(label)

    def expect(ch):
        nonlocal pos
        if pos >= len(text) or text[pos] != ch:
            raise ParseError(f"expected {ch!r} in tree text", pos + 1)
        pos += 1

    tree = node()
    if tree is None:
        raise ParseError("expected a node label", pos + 1)
    if pos != len(text):
        raise ParseError("trailing characters in tree text", pos + 1)
    return tree


def _build(lo, hi, pick):
    """Tree on the interval lo..hi whose roots are chosen by ``pick``."""
    if lo > hi:
        return None
    root = pick(lo, hi)
    return Tree(root, _build(lo, root - 1, pick), _build(root + 1, hi, pick))


def bst_from_perm(perm):
    """Root of each value interval is its first value met in the word."""
    pos = perm.positions()
    return _build(1, perm.n, lambda lo, hi: min(range(lo, hi + 1), key=pos.__getitem__))


def bst_from_wdp(x, mode="direct"):
    """Tree from a weighted path.

    Within an interval, among the indices of minimal weight, the root is the
    smallest ``i`` whose step ``2i`` goes down, else the largest such index.
    ``mode="shifted"`` first drops the first step and appends a down step;
    the resulting step sequence need not stay above the axis.
    """
    steps = x.steps
    if mode == "shifted":
        steps = steps[1:] + DOWN
    elif mode != "direct":
        raise InvalidInput(f"unknown mode {mode!r}")
    w = x.weight

    def pick(lo, hi):
        low = min(w[lo - 1 : hi])
        best = [i for i in range(lo, hi + 1) if w[i - 1] == low]
        for i in best:
            if steps[2 * i - 1] == DOWN:
                return i
        return best[-1]

    return _build(1, x.n, pick)


def same_cosylvester(sigma, tau):
    if sigma.n != tau.n:
        raise InvalidInput(f"sizes differ: {sigma.n} and {tau.n}")
    return bst_from_perm(sigma) == bst_from_perm(tau)
