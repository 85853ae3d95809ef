#!/usr/bin/env python3
"""Build the frozen KS reference resource (tests/resources/ks_reference.json).

40 randomized sample pairs, all containing ties (values are rounded to a
coarse grid), with reference values computed by two independent oracles:

* D by brute force: |ECDF_a - ECDF_b| evaluated at every value in the
  union of the two samples, taking the maximum.
* p by the classical Stephens-adjusted Kolmogorov survival series in the
  cephes style: lambda = (sqrt(ne) + 0.12 + 0.11/sqrt(ne)) * D, terms
  accumulated until t/p <= 1.1e-16 (a different truncation rule than the
  library under test uses).

The generator also cross-checks D against scipy.stats.ks_2samp.
"""

import json
import math
from pathlib import Path

import numpy as np
from scipy import stats as scipy_stats

OUT = Path(__file__).resolve().parent.parent / "tests" / "resources" / "ks_reference.json"


def brute_force_d(a, b):
    points = sorted(set(a) | set(b))
    n1, n2 = len(a), len(b)
    d = 0.0
    for x in points:
        fa = sum(1 for v in a if v <= x) / n1
        fb = sum(1 for v in b if v <= x) / n2
        d = max(d, abs(fa - fb))
    return d


def kolmogorov_sf(y: float) -> float:
    # cephes-style alternating series for the Kolmogorov survival function
    if y < 1.1e-16:
        return 1.0
    x = -2.0 * y * y
    sign = 1.0
    p = 0.0
    r = 1.0
    while True:
        t = math.exp(x * r * r)
        p += sign * t
        if t == 0.0:
            break
        r += 1.0
        sign = -sign
        if t / p <= 1.1e-16:
            break
    return min(max(2.0 * p, 0.0), 1.0)


def reference_p(d: float, n1: int, n2: int) -> float:
    ne = n1 * n2 / (n1 + n2)
    en = math.sqrt(ne)
    return kolmogorov_sf((en + 0.12 + 0.11 / en) * d)


def main() -> None:
    rng = np.random.default_rng(987654321)
    cases = []
    while len(cases) < 40:
        n1 = int(rng.integers(5, 60))
        n2 = int(rng.integers(5, 60))
        kind = len(cases) % 4
        if kind == 0:  # same distribution, coarse grid forces ties
            a = np.round(rng.normal(0, 1, n1), 1)
            b = np.round(rng.normal(0, 1, n2), 1)
        elif kind == 1:  # shifted
            a = np.round(rng.normal(0, 1, n1), 1)
            b = np.round(rng.normal(0.8, 1, n2), 1)
        elif kind == 2:  # small integer support, heavy ties
            a = rng.integers(0, 6, n1).astype(float)
            b = rng.integers(1, 7, n2).astype(float)
        else:  # scale difference
            a = np.round(rng.normal(0, 0.5, n1), 1)
            b = np.round(rng.normal(0, 2.0, n2), 1)
        a, b = a.tolist(), b.tolist()
        if len(set(a)) == len(a) and len(set(b)) == len(b):
            continue  # must contain ties
        d = brute_force_d(a, b)
        scipy_d = float(scipy_stats.ks_2samp(a, b).statistic)
        assert abs(d - scipy_d) < 1e-13, (d, scipy_d)
        cases.append(
            {"a": a, "b": b, "d": d, "p": reference_p(d, len(a), len(b))}
        )
    OUT.write_text(json.dumps({"cases": cases}, indent=1) + "\n", encoding="utf-8")
    print(f"wrote {OUT}: {len(cases)} pairs")


if __name__ == "__main__":
    main()
