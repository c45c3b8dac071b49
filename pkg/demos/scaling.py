"""Wall time of the merge loop as the edge count doubles.

Similarities are computed once per graph outside the timed region; only the
definition-driven merge is timed (best of three).
"""

from hamuhi.bench import er_case, run_bench


def main():
    rows = run_bench([er_case(e) for e in (100_000, 200_000, 400_000, 800_000)], "weak", repeats=3)
    prev = None
    for r in rows:
        ratio = f"{r.seconds / prev:.2f}x" if prev else "-"
        print(f"n={r.n:>7} m={r.m:>7} iterations={r.iterations:>2} seconds={r.seconds:.3f} vs previous {ratio}")
        prev = r.seconds


if __name__ == "__main__":
    main()
