"""Build the three q-transition matrices and compare them cell by cell.

    python3 demos/equidistribution.py [n]

Rows are indexed by GC (or LC), columns by Rec (or DC); each cell is the
generating polynomial of tot (or inv - maj) over the objects landing there.
"""

import sys
import time

from permstat.matrices import verify_equidistribution

n = int(sys.argv[1]) if len(sys.argv) > 1 else 4

start = time.perf_counter()
report = verify_equidistribution(n)
print(report.summary(), f"({time.perf_counter() - start:.2f} s)")
print()
print(report.matrices["perm_gc"].to_text())

if n >= 3:
    # a small peek: sizes 1..6, one line each
    print()
    for k in range(1, 7):
        print(verify_equidistribution(k).summary())
