"""Walk the four-leaf unit tree through the whole pipeline.

    python demos/four_leaf_tree.py
"""

from pathlib import Path

from ohmgraph import grassmann, io, metrics, netcore, reconstruct

DATA = Path(__file__).parent / "data"


def show(title, m):
    print(title)
    for row in m:
        print("   ", "  ".join(f"{str(x):>5}" for x in row))


tree = io.load_network(DATA / "tree.json")
show("response matrix", netcore.response_matrix(tree))

d = netcore.resistance_matrix(tree)
show("effective resistances", d)
print("Kalmanson in 1,2,3,4:", bool(metrics.kalmanson_check(d)))
print("Kalmanson in 1,2,4,3:", io.to_jsonable(metrics.kalmanson_check(d, (1, 2, 4, 3)).witness))

print("circular splits:")
for split, w in metrics.split_weights(d).splits:
    print(f"    {split}  weight {w}")

show("M(D), the dual network's response", metrics.m_of_d(d))

p = grassmann.plucker(grassmann.build_omega_resistance(d))
print(f"{len(p.coords)} Plücker coordinates, sign {p.sign()}, D246 = {p[(2, 4, 6)]}")

s = reconstruct.strands_of_matrix(d)
print("g =", list(s.g), " tau =", s)

fitted = reconstruct.recover_tree(d)
print("recovered tree edges:", [(e.u, e.v, str(e.c)) for e in fitted.edges])
print("resistances reproduced:", netcore.resistance_matrix(fitted) == d)
