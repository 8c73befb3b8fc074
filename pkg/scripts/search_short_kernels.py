#!/usr/bin/env python3
"""Exhaustive search for short kernel elements of the composite map over a
small parameter grid.  Each hit is a freely reduced pure braid word whose
image re-verified as the identity matrix.
"""
import argparse
import time

from mnmap import search_kernel


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=4)
    parser.add_argument("--max-d", type=int, default=2)
    parser.add_argument("--max-len", type=int, default=6)
    args = parser.parse_args()

    for n in range(2, args.max_n + 1):
        for k in range(1, n + 2):
            for d in range(1, args.max_d + 1):
                start = time.perf_counter()
                try:
                    hits = search_kernel(n=n, k=k, d=d, max_len=args.max_len)
                except ValueError as err:
                    print(f"n={n} k={k} d={d}: skipped ({err})")
                    continue
                elapsed = time.perf_counter() - start
                print(f"n={n} k={k} d={d} (len<={args.max_len}, "
                      f"{elapsed:.1f}s): {len(hits)} hits")
                for result in hits:
                    print(f"  {result.word}")


if __name__ == "__main__":
    main()
