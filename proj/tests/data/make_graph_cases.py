"""Writes graph_cases.json: seeded random graphs with networkx reference values.

Each case records planarity, component count, vertex connectivity and, for
graphs with at most 9 vertices, the number of automorphisms.
"""
import json
import pathlib
import random

import networkx as nx
from networkx.algorithms.isomorphism import GraphMatcher

rng = random.Random(20240611)
cases = []
for k in range(300):
    n = rng.randint(1, 16)
    p = rng.choice([0.1, 0.2, 0.3, 0.5, 0.7])
    g = nx.gnp_random_graph(n, p, seed=rng.randint(0, 10**9))
    case = {
        "vertices": list(g.nodes()),
        "edges": [list(e) for e in g.edges()],
        "planar": nx.check_planarity(g)[0],
        "components": nx.number_connected_components(g),
        "connectivity": nx.node_connectivity(g) if n > 1 and nx.is_connected(g) else 0,
    }
    if n <= 9:
        case["automorphisms"] = sum(1 for _ in GraphMatcher(g, g).isomorphisms_iter())
    cases.append(case)
out = pathlib.Path(__file__).with_name("graph_cases.json")
out.write_text(json.dumps(cases) + "\n")
