"""Run the certificate scan over a seeded random corpus and referee it with sweeps.

Prints per-kind verdict counts, oracle confirmations, and how often the
integer-power sweep stays at or below 1 while the continuous relaxation exceeds it.

    python scripts/oracle_corpus.py [--count 200] [--seed 2024]
"""
import argparse
import collections
import time

from nonnormal.oracle import confirm_exp, confirm_pow
from nonnormal.testing import corpus
from nonnormal.transient import Mode, scan


def main():
    parser = argparse.ArgumentParser(description=__doc__.split("\n\n")[0])
    parser.add_argument("--count", type=int, default=200)
    parser.add_argument("--seed", type=int, default=2024)
    args = parser.parse_args()

    start = time.perf_counter()
    verdicts = collections.Counter()
    confirmed = collections.Counter()
    integer_gaps = 0
    uncertified = 0
    for m in corpus(args.seed, args.count):
        report = scan(m)
        for c in report.certificates:
            verdicts[(c.kind.value, c.verdict)] += 1
        modes = report.certified_modes()
        if not modes:
            uncertified += 1
        if Mode.EXP in modes:
            confirmed[("exp", confirm_exp(m).confirmed)] += 1
        if Mode.POW in modes:
            c = confirm_pow(m)
            confirmed[("pow", c.confirmed)] += 1
            integer_gaps += c.integer_gap

    print(f"corpus: {args.count} matrices (seed {args.seed}), {uncertified} without any certificate")
    for (kind, verdict), n in sorted(verdicts.items()):
        print(f"  {kind:>15} verdict={verdict!s:<5} {n}")
    for (mode, ok), n in sorted(confirmed.items()):
        print(f"  oracle {mode}: confirmed={ok} {n}")
    print(f"  integer-power gap (continuous > 1, integer <= 1): {integer_gaps}")
    print(f"elapsed {time.perf_counter() - start:.1f}s")


if __name__ == "__main__":
    main()
