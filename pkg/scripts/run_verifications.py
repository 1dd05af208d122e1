#!/usr/bin/env python3
"""Run every exact verification sweep plus the numeric cross-checks.

One line per suite; exits nonzero if anything fails.  This is the long
version of `heatsphere verify <target>` with all targets at full size.
"""

import sys
import time

from heatsphere.asymptotics import remainder_order
from heatsphere.identities import verify_identity
from heatsphere.invariants import verify_crosscheck, verify_omega_stability, verify_sharpness
from heatsphere.legendre import verify_expansion
from heatsphere.opercalc import check_bernoulli_link, verify_lemmas


def main() -> int:
    suites = [
        ("s1", lambda: verify_identity("s1")),
        ("s1g", lambda: verify_identity("s1g")),
        ("s3", lambda: verify_identity("s3")),
        ("vychet", lambda: verify_identity("vychet")),
        ("lemmas", lambda: verify_lemmas(t_max=4, s_max=3, slack=3)),
        ("bernoulli-link", lambda: check_bernoulli_link(8)),
        ("legendre", lambda: verify_expansion(j_max=4, d_range=(2, 5))),
        ("crosscheck", lambda: verify_crosscheck((1, 8), (2, 11))),
        ("omega-stability", lambda: verify_omega_stability((1, 6), (1, 8))),
        ("sharpness", verify_sharpness),
    ]
    failures = 0
    for name, runner in suites:
        start = time.perf_counter()
        report = runner()
        elapsed = time.perf_counter() - start
        status = "PASS" if report.passed else "FAIL"
        print(f"{status} {name}: {report.points_checked} points in {elapsed:.2f}s")
        for witness in report.failures:
            params = ", ".join(f"{k}={v}" for k, v in witness.parameters.items())
            print(f"  witness {params}: computed {witness.computed}, expected {witness.expected}")
        if not report.passed:
            failures += 1

    for d in (2, 3, 5):
        for n_terms in (2, 3, 4):
            est = remainder_order(d, n_terms)
            ok = est.status == "ok" and est.relative_deviation < 0.2
            status = "PASS" if ok else "FAIL"
            print(
                f"{status} asympt d={d} n_terms={n_terms}: status={est.status} "
                f"observed={est.observed_order:.4f} expected={est.expected_order}"
            )
            if not ok:
                failures += 1

    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
