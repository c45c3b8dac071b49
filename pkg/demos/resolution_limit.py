"""Rings of cliques: the merge heuristic keeps every clique separate.

Modularity maximization is known to glue neighboring cliques together once
the ring is long enough. Here each ring is run through ``hamuhi`` with both
community definitions and compared against the clique ground truth, along
with the modularity of the clique partition (3/4 - 1/N for triangles).
"""

from hamuhi import hamuhi, modularity, nmi
from hamuhi.generators import ring_of_cliques


def main():
    print(f"{'cliques':>7} {'size':>4} {'def':>8} {'found':>5} {'NMI':>5} {'Q(truth)':>9}")
    for n_cliques in (10, 20, 30, 100):
        for size in (3, 4):
            lg = ring_of_cliques(n_cliques, size)
            q = modularity(lg.graph, lg.truth)
            for definition in ("weak", "weakest"):
                p = hamuhi(lg.graph, k=2, definition=definition)
                score = nmi(p, lg.truth)
                print(f"{n_cliques:>7} {size:>4} {definition:>8} {p.community_count:>5} {score:>5.3f} {q:>9.4f}")


if __name__ == "__main__":
    main()
