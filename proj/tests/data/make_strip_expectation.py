"""Writes strip5_expected.json: the path-decomposition of C5 x P7 along its red layers.

Vertex (layer i, position j) has id 5*i + j; the red cycles are layers 1..5.
Bags are two consecutive layers; nodes are listed in ascending bag order
(the bag holding the smallest differing id first), which for these bags is
layer order.
"""
import json
import pathlib

N = 5
layers = [[5 * i + j for j in range(5)] for i in range(N + 2)]
bags = [sorted(layers[i] + layers[i + 1]) for i in range(N + 1)]
tree_edges = [[i, i + 1] for i in range(N)]
adhesion = [sorted(set(bags[a]) & set(bags[b])) for a, b in tree_edges]
assert adhesion == [layers[i] for i in range(1, N + 1)]
doc = {
    "nodes": list(range(N + 1)),
    "kind": ["block"] * (N + 1),
    "bags": bags,
    "tree_edges": tree_edges,
    "adhesion_sets": adhesion,
}
out = pathlib.Path(__file__).with_name("strip5_expected.json")
out.write_text(json.dumps(doc, indent=2) + "\n")
