"""Random graphs have no community structure to find.

For Erdos-Renyi and Barabasi-Albert graphs of 1000 vertices the detector
should ideally report a single community. The table shows how often that
happens across seeds, and what the partition looks like when it does not.
"""

from hamuhi import hamuhi, modularity
from hamuhi.generators import barabasi_albert, erdos_renyi


def survey(name, make, seeds):
    singles = 0
    for seed in seeds:
        g = make(seed).graph
        p = hamuhi(g, k=2, definition="weak")
        singles += p.community_count == 1
        if p.community_count > 1:
            print(f"  {name} seed {seed}: {p.community_count} communities, sizes "
                  f"{sorted(p.sizes.tolist(), reverse=True)[:5]}, Q={modularity(g, p):.3f}")
    print(f"{name}: single community in {singles}/{len(seeds)} runs")


def main():
    seeds = range(20)
    survey("ER n=1000 <k>=20", lambda s: erdos_renyi(1000, 20 / 999, s), seeds)
    survey("BA n=1000 m=10", lambda s: barabasi_albert(1000, 10, s), seeds)


if __name__ == "__main__":
    main()
