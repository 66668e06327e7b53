#!/usr/bin/env python3
"""graph6 reference strings via networkx for round-trip pinning."""
import json
import networkx as nx

cases = {}

g = nx.path_graph(4)
cases["P4"] = nx.to_graph6_bytes(g, header=False).decode().strip()

g = nx.cycle_graph(6)
cases["C6"] = nx.to_graph6_bytes(g, header=False).decode().strip()

# 70-vertex graph to exercise the long-form N(n) encoding
g = nx.path_graph(70)
cases["P70"] = nx.to_graph6_bytes(g, header=False).decode().strip()

g = nx.empty_graph(0)
cases["empty0"] = nx.to_graph6_bytes(g, header=False).decode().strip()

g = nx.complete_graph(5)
cases["K5"] = nx.to_graph6_bytes(g, header=False).decode().strip()

print(json.dumps(cases, indent=1))
