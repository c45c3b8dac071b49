"""Two hierarchy levels from a cliques-of-groups network.

Level 1 comes from the definition-driven merge plus a size pass with k=2.
Each further level reruns the size pass with k set one above the smallest
community of the level before.
"""

from hamuhi import nmi, size_distribution
from hamuhi.core import hierarchy
from hamuhi.generators import two_level_hierarchical


def main():
    lg = two_level_hierarchical(groups=5, cliques_per_group=5, clique_size=5)
    g = lg.graph
    print(f"graph: {g.vertex_count} vertices, {g.edge_count} edges")
    levels = hierarchy(g, definition="weakest", levels=3)
    for i, lv in enumerate(levels):
        truth = lg.truth_levels[i] if i < len(lg.truth_levels) else None
        score = f"{nmi(lv.partition, truth):.3f}" if truth is not None else "-"
        print(
            f"level {i + 1}: k={lv.k:<3} communities={lv.partition.community_count:<3} "
            f"sizes={size_distribution(lv.partition)} NMI={score}"
        )
    if len(levels) < 3:
        print("(stopped early: one community per connected component)")


if __name__ == "__main__":
    main()
