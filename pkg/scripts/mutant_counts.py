"""Mutation-class counts for both generator sets against the closed forms."""
import argparse
import time

from hypmut import pretzel
from hypmut.pretzel import GeneratorKind, MutationGenerators


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=4)
    args = ap.parse_args()
    for n in range(2, args.max_n + 1):
        t = tuple([8] + [9 + 2 * i for i in range(2 * n)])
        for kind in GeneratorKind:
            t0 = time.perf_counter()
            forms = pretzel.enumerate_mutants(t, MutationGenerators.for_n(n, kind))
            dt = time.perf_counter() - t0
            formula = pretzel.mutant_count_formula(n, kind)
            flag = "" if len(forms) == formula else "  (differs)"
            print(f"n = {n} {kind.value:13s} enumerated {len(forms):7d}  formula {formula:7d}"
                  f"  {dt:.2f} s{flag}")


if __name__ == "__main__":
    main()
