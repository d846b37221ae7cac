"""Build a few small digraphs and ask whether each has a spanning closed ditrail."""
from supereulerian import Digraph, decide, decide_bruteforce, is_strong, to_dot

# a directed triangle is its own spanning circuit
c3 = Digraph.dicycle(3)
d = decide(c3)
print("C3:", d.verdict, d.circuit(c3))

# two triangles glued at vertex 0 still work: one closed trail covers both
bowtie = Digraph.from_arcs(5, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)])
d = decide(bowtie)
print("bowtie:", d.verdict, d.circuit(bowtie))

# strong, yet every closed trail misses a vertex
hub = Digraph.from_arcs(4, [(0, 2), (1, 2), (2, 3), (3, 0), (3, 1), (3, 2)])
print("strong:", is_strong(hub))
d = decide(hub)
print("hub:", d.verdict, "search nodes:", d.nodes)

# the exhaustive subset sweep agrees
print("bruteforce:", decide_bruteforce(hub).verdict)

# paste into graphviz to look at it
print(to_dot(hub))
