"""Run every verification suite over a batch of random maps.

    python demos/random_maps.py [count] [seed]
"""

import random
import sys
import time
from collections import Counter

from quasitorsor import verify
from quasitorsor import ribbontorsor as rt
from quasitorsor.ribbonmap import random_map

count = int(sys.argv[1]) if len(sys.argv) > 1 else 20
seed = int(sys.argv[2]) if len(sys.argv) > 2 else 1
rng = random.Random(seed)

status = Counter()
same_hand = Counter()
start = time.perf_counter()
for i in range(count):
    G = random_map(rng.randint(2, 6), rng, max_genus=3)
    genus = G.euler_data()[3]
    for name, ok, detail in verify.run_all(G, seed=i):
        status["skip" if ok is None else "pass" if ok else "fail"] += 1
        if ok is False:
            print(f"map {i}: {name} failed {detail}")
            print(G.to_rmap())
    same_hand[(genus, rt.left_right_comparison(G))] += 1

print(f"{count} maps, {dict(status)} in {time.perf_counter() - start:.1f}s")
print("right-hand and left-hand torsors coincide, by genus:")
for genus in sorted({g for g, _ in same_hand}):
    yes, no = same_hand[(genus, True)], same_hand[(genus, False)]
    print(f"    genus {genus}: {yes} equal, {no} different")
