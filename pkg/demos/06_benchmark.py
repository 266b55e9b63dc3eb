"""A small edition of the scalability benchmark: same two-pass protocol as
`csst bench` (untimed generation, then a fresh instance timed on the whole
loop), printed as CSV rows. For the real comparison run the CLI at
k=10, ell in {5000, 50000}, window 10000."""

from csst.harness import BenchConfig, CSV_HEADER, run_bench


def main():
    print(CSV_HEADER)
    for backend in ("csst-dyn", "csst-inc", "vc", "graph", "st"):
        r = run_bench(
            BenchConfig(backend=backend, k=6, ell=1500, window=400,
                        insert_factor=8, queries=20_000, seed=61)
        )
        print(r.csv().splitlines()[1])
    print("\nsame seed means same workload for every backend;")
    print("pass --no-timing (or no_timing=True) to zero the timing columns")
    print("when byte-stable output matters more than the numbers.")


if __name__ == "__main__":
    main()
