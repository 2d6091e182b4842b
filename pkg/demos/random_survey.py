"""Run both electrical-metric detectors over random inputs and tally the answers.

Network resistance matrices should always be accepted.  Metrics of random
circular split systems are a mix; every accepted one is reconstructed and
checked through the strand round trip.

    python demos/random_survey.py [count] [seed]
"""

import random
import sys
from collections import Counter

from ohmgraph import generate, grassmann, metrics, netcore, reconstruct


def main(count=100, seed=1):
    rng = random.Random(seed)
    tally = Counter()
    for k in range(count):
        if k % 2:
            d = metrics.metric_from_splits(generate.random_split_system(rng))
            source = "split system"
        else:
            d = netcore.resistance_matrix(generate.random_network(rng, n=rng.randint(3, 5)))
            source = "network"
        a = grassmann.is_electrical_via_grassmannian(d)
        b = metrics.is_electrical_via_dual(d)
        verdict = "yes" if a else a.witness.get("reason", "no")
        tally[source, verdict, a.ok == b.ok] += 1
        if a and not reconstruct.verify_round_trip(d):
            tally[source, "round trip failed", True] += 1
    for (source, verdict, agree), count in sorted(tally.items()):
        print(f"{source:>13}  {verdict:<18} {count:>4}{'' if agree else '  (detectors disagree)'}")


if __name__ == "__main__":
    main(*(int(a) for a in sys.argv[1:3]))
