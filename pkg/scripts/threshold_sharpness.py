"""Probe the 2x2 eigenvector-angle threshold from both sides.

For random stable eigenvalue pairs, evaluates the numerical abscissa of the
parametrised matrix at threshold -/+ delta and counts sign agreements, for
both the exponential and the power (branch-paired logarithm) thresholds.

    python scripts/threshold_sharpness.py [--count 500] [--delta 1e-3] [--seed 3]
"""
import argparse
import math

import numpy as np

from nonnormal.linalg import log_branch_pair, matrix_log_principal
from nonnormal.numrange import matrix_from_angle, numerical_abscissa, omega_A
from nonnormal.testing import random_stable_eigenvalues
from nonnormal.transient import threshold_theta_exp, threshold_theta_pow


def probe(thr, omega_at, delta):
    if not delta < thr <= math.pi / 2 - delta:
        return None
    return omega_at(thr - delta) > 0, omega_at(thr + delta) < 0


def main():
    parser = argparse.ArgumentParser(description=__doc__.split("\n\n")[0])
    parser.add_argument("--count", type=int, default=500)
    parser.add_argument("--delta", type=float, default=1e-3)
    parser.add_argument("--seed", type=int, default=3)
    args = parser.parse_args()
    rng = np.random.default_rng(args.seed)

    tallies = {"exp": [0, 0, 0], "pow": [0, 0, 0], "pow (log matrix)": [0, 0, 0]}
    while min(t[2] for t in tallies.values()) < args.count:
        l1, l2 = random_stable_eigenvalues(rng, 2)
        if abs(l1 - l2) < 1e-6:
            continue
        log1, log2 = log_branch_pair(l1, l2)
        cases = {
            "exp": (threshold_theta_exp(l1, l2), lambda th: omega_A(l1, l2, th)),
            "pow": (threshold_theta_pow(l1, l2), lambda th: omega_A(log1, log2, th)),
            "pow (log matrix)": (
                threshold_theta_pow(l1, l2),
                lambda th: numerical_abscissa(matrix_log_principal(matrix_from_angle(l1, l2, th))),
            ),
        }
        for name, (thr, omega_at) in cases.items():
            t = tallies[name]
            if t[2] >= args.count:
                continue
            result = probe(thr, omega_at, args.delta)
            if result is None:
                continue
            t[0] += result[0]
            t[1] += result[1]
            t[2] += 1

    for name, (below, above, n) in tallies.items():
        print(f"{name:>17}: omega>0 below threshold {below}/{n}, omega<0 above threshold {above}/{n}")


if __name__ == "__main__":
    main()
