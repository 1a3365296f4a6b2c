"""Psi keeps each permutation in its co-sylvester class.

Groups all permutations of size n by binary search tree and checks that
Psi never leaves a group.
"""

import sys
from collections import Counter

from permstat.bijections import big_psi
from permstat.encoding import parse_permutation
from permstat.enumeration import catalan, iterate_permutations
from permstat.sylvester import bst_from_perm, format_tree

sigma = parse_permutation("5 2 8 7 1 3 6 4 9")
print("tree of", sigma, "=", format_tree(bst_from_perm(sigma)))
print("tree of", big_psi(sigma), "=", format_tree(bst_from_perm(big_psi(sigma))))

n = int(sys.argv[1]) if len(sys.argv) > 1 else 6
classes = Counter()
moved = 0
for p in iterate_permutations(n):
    tree = bst_from_perm(p)
    classes[format_tree(tree)] += 1
    moved += bst_from_perm(big_psi(p)) != tree

print(f"n={n}: {len(classes)} classes (Catalan {catalan(n)}), "
      f"largest has {max(classes.values())} members, Psi moved {moved}")
