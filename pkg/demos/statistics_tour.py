"""Every statistic of a handful of small objects, as the CLI prints them."""

import json

from permstat.cli import stats_of
from permstat.encoding import parse

SAMPLES = [
    ("perm", "5 2 8 7 1 3 6 4 9"),
    ("perm", "3 1 2"),
    ("sf", "3 1 5 5 0 3 2 0 0"),
    ("wdp", "UUUDDD;0 1 0"),
    ("dwsf", "5 4 0 3 0 0 2 0 0;0 0 2 2 0 1 0 0 0"),
    ("composition", "(1,3,2,1,2)"),
]

for kind, text in SAMPLES:
    print(f"{kind} {text}")
    print("   ", json.dumps(stats_of(kind, parse(kind, text))))
