"""Machine verification of the purely arithmetic lemmas and inequalities.

Every integer inequality is decided in exact integer arithmetic; floating
point appears only where an inequality genuinely mixes reals (logarithms
against binomials), and those checks report their margins.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .constants import C2, LOG2_3
from .report import VerificationReport

_PARTITION_LIMIT = 100_000
_partition_cache = [1]


def partition_count(n):
    """p(n) by the pentagonal-number recurrence, exact integers."""
    if n < 0:
        raise ValueError("partition count needs n >= 0")
    if n > _PARTITION_LIMIT:
        raise ValueError(f"partition count limited to n <= {_PARTITION_LIMIT}")
    while len(_partition_cache) <= n:
        m = len(_partition_cache)
        total = 0
        k = 1
        while True:
            g1 = k * (3 * k - 1) // 2
            g2 = k * (3 * k + 1) // 2
            if g1 > m:
                break
            sign = 1 if k % 2 else -1
            total += sign * _partition_cache[m - g1]
            if g2 <= m:
                total += sign * _partition_cache[m - g2]
            k += 1
        _partition_cache.append(total)
    return _partition_cache[n]


def distinct_odd_partition_count(n):
    """Number of partitions of n into distinct odd parts."""
    if n < 0:
        raise ValueError("needs n >= 0")
    ways = [0] * (n + 1)
    ways[0] = 1
    for part in range(1, n + 1, 2):
        for total in range(n, part - 1, -1):
            ways[total] += ways[total - part]
    return ways[n]


def binomial(n, k):
    """Exact C(n, k); rejects arguments outside 0 <= k <= n."""
    if not 0 <= k <= n:
        raise ValueError(f"binomial needs 0 <= k <= n, got ({n}, {k})")
    return math.comb(n, k)


@dataclass(frozen=True)
class SweepRange:
    """Inclusive integer ranges, keyed by variable name."""

    ranges: tuple

    def __post_init__(self):
        for name, lo, hi in self.ranges:
            if lo > hi:
                raise ValueError(f"empty range for {name}: [{lo}, {hi}]")

    def __getitem__(self, name):
        for key, lo, hi in self.ranges:
            if key == name:
                return range(lo, hi + 1)
        raise KeyError(name)

    def describe(self):
        return ", ".join(f"{name} in [{lo}, {hi}]" for name, lo, hi in self.ranges)


PRIME_POWER_DEFAULT = SweepRange((("p", 2, 7), ("f", 1, 20), ("a", 2, 8), ("b", 2, 8)))


def verify_prime_power_inequalities(ranges=PRIME_POWER_DEFAULT):
    """Exact sweep of the four prime-power inequalities:

    (1) (q^a - 1)(q^b - 1) <= q^(a+b)      for 2 <= a <= b;
    (2) (q^a - 1)(q^b + 1) <= q^(a+b);
    (3) q >= 2f, and q >= 16 implies q >= 3f;
    (4) f != 3 implies f^2 <= 2^f  (the integer form of 2 log2 f <= f).

    Also confirms that f = 3 genuinely violates (4): 9 > 8.
    """
    primes = [p for p in ranges["p"] if all(p % d for d in range(2, p))]
    checked = 0
    failures = []
    for p in primes:
        for f in ranges["f"]:
            q = p ** f
            if q < 2 * f:
                failures.append(f"q >= 2f fails at q={q}, f={f}")
            if q >= 16 and q < 3 * f:
                failures.append(f"q >= 3f fails at q={q}, f={f}")
            for a in ranges["a"]:
                for b in ranges["b"]:
                    if a > b:
                        continue
                    qa, qb = q ** a, q ** b
                    if (qa - 1) * (qb - 1) > qa * qb:
                        failures.append(f"(1) fails at q={q}, a={a}, b={b}")
                    if (qa - 1) * (qb + 1) > qa * qb:
                        failures.append(f"(2) fails at q={q}, a={a}, b={b}")
                    checked += 2
            checked += 2
    for f in ranges["f"]:
        if f != 3 and f * f > 2 ** f:
            failures.append(f"(4) fails at f={f}")
        checked += 1
    exclusion_needed = 3 * 3 > 2 ** 3
    if not exclusion_needed:
        failures.append("(4) would hold at f=3; the exclusion should be unnecessary")
    values = {"checked": checked, "sweep": ranges.describe(),
              "f3_exclusion_necessary": exclusion_needed}
    if failures:
        values["first_failure"] = failures[0]
    return VerificationReport(
        id="prime-power-inequalities",
        subject=ranges.describe(),
        values=values,
        verdict="fail" if failures else "pass",
    )


def verify_klog_bound(k_max=1_000_000):
    """(log2 k)^2 * log2 log2 k <= k^2 / 2 for 4 <= k <= k_max."""
    if k_max < 4:
        raise ValueError("needs k_max >= 4")
    import numpy as np

    k = np.arange(4, k_max + 1, dtype=np.float64)
    lk = np.log2(k)
    lhs = lk * lk * np.log2(lk)
    rhs = k * k / 2.0
    margins = rhs - lhs
    bad = int((margins < 0).sum())
    at = int(np.argmin(margins))
    return VerificationReport(
        id="klog-square-bound",
        subject=f"4 <= k <= {k_max}",
        values={"checked": int(k.shape[0]), "min_margin_at_k": int(k[at])},
        verdict="fail" if bad else "pass",
        margin=float(margins[at]),
    )


def lemma_weight(n, k):
    """The weight attached to a factor with n copies and orbit count k:
    2.5 when n = 1 and 4 <= k < 222; 1.17 when n = 2 and 4 <= k < 9; else 1."""
    if n == 1 and 4 <= k < 222:
        return 2.5
    if n == 2 and 4 <= k < 9:
        return 1.17
    return 1.0


@dataclass(frozen=True)
class WeightedCase:
    """One (n, k, w) instance of the weighted binomial inequality."""

    n: int
    k: int
    w: float

    def __post_init__(self):
        if self.n < 1 or self.k < 4:
            raise ValueError("need n >= 1 and k >= 4")
        if self.w not in (1.0, 1.17, 2.5):
            raise ValueError("weight must be one of 1, 1.17, 2.5")


@dataclass(frozen=True)
class WeightedCheck:
    holds: bool
    lhs: float
    rhs: float

    @property
    def margin(self):
        return self.rhs - self.lhs


def check_weighted_inequality(case):
    """n log2 n + c2 n (log2 k)^2 log2 log2 k <= w log2(3) C(n+k-1, k-1).

    The binomial is exact; both sides are compared in doubles, falling back
    to a log-domain comparison when the binomial overflows a double.
    """
    n, k, w = case.n, case.k, case.w
    lk = math.log2(k)
    lhs = n * math.log2(n) + C2 * n * lk * lk * math.log2(lk) if n > 1 else (
        C2 * lk * lk * math.log2(lk))
    coeff = binomial(n + k - 1, k - 1)
    try:
        rhs = w * LOG2_3 * float(coeff)
    except OverflowError:
        # both sides positive here, so compare base-2 logs instead
        log_rhs = math.log2(w) + math.log2(LOG2_3) + math.log2(coeff)
        return WeightedCheck(math.log2(lhs) <= log_rhs, lhs, math.inf)
    return WeightedCheck(lhs <= rhs, lhs, rhs)


def _weighted_holds(n, k, w, coeff):
    lk = math.log2(k)
    lhs = n * math.log2(n) + C2 * n * lk * lk * math.log2(lk)
    try:
        return lhs <= w * LOG2_3 * float(coeff)
    except OverflowError:
        return math.log2(lhs) <= math.log2(w) + math.log2(LOG2_3) + math.log2(coeff)


def sweep_weighted_cases(n_max=200, k_max=5000):
    """Sweep the five documented regimes of the weighted inequality:

    (i)   n = 1, k >= 222, w = 1        (sharp: fails at k = 221)
    (ii)  n = 2, k >= 9,  w = 1         (sharp: fails at k = 8)
    (iii) n >= 3, any k >= 4, w = 1
    (iv)  n = 2, 4 <= k < 9, w = 1.17
    (v)   n = 1, k >= 4,  w = 2.5

    The binomial C(n+k-1, k-1) is carried incrementally in k for each n.
    """
    failures = []
    checked = 0

    def run(n, k_lo, w, want=True, k_hi=None):
        nonlocal checked
        k_hi = k_max if k_hi is None else k_hi
        coeff = binomial(n + k_lo - 1, k_lo - 1)
        for k in range(k_lo, k_hi + 1):
            checked += 1
            if _weighted_holds(n, k, w, coeff) is not want:
                failures.append(f"(n={n}, k={k}, w={w}) expected {want}")
            coeff = coeff * (n + k) // k
        return

    run(1, 222, 1.0)
    run(1, 221, 1.0, want=False, k_hi=221)
    run(2, 9, 1.0)
    run(2, 8, 1.0, want=False, k_hi=8)
    for n in range(3, n_max + 1):
        run(n, 4, 1.0)
    run(2, 4, 1.17, k_hi=8)
    run(1, 4, 2.5)

    values = {"checked": checked, "sharp_fail_at": "n=1, k=221, w=1"}
    if failures:
        values["first_failure"] = failures[0]
    return VerificationReport(
        id="weighted-binomial-inequality",
        subject=f"n <= {n_max}, k <= {k_max}, all five weight regimes",
        values=values,
        verdict="fail" if failures else "pass",
    )


def verify_sum_product(r, xs):
    """The sum-vs-product inequalities over integers >= 4 (exact, scaled by
    100 to keep the 2.5 and 1.17 coefficients integral):

    r >= 3:  2.5 * sum(xs) <= prod(xs)
    r = 2:   2.5 x1 + 1.17 x2 <= x1 x2, and when both >= 5 also
             2.5 x1 + 2.5 x2 <= x1 x2
    """
    xs = [int(x) for x in xs]
    if len(xs) != r:
        raise ValueError(f"expected {r} values, got {len(xs)}")
    if any(x < 4 for x in xs):
        raise ValueError("all values must be >= 4")
    if r < 2:
        raise ValueError("no inequality is asserted for r < 2")
    if r >= 3:
        prod = math.prod(xs)
        return 250 * sum(xs) <= 100 * prod
    x1, x2 = xs
    ok = 250 * x1 + 117 * x2 <= 100 * x1 * x2
    if min(x1, x2) >= 5:
        ok = ok and 250 * (x1 + x2) <= 100 * x1 * x2
    return ok


def _covered_count(lo, hi, remaining):
    # sorted tuples of the given length with entries in [lo, hi]
    return math.comb(hi - lo + remaining, remaining)


def _sweep_product_box(r, hi, failures):
    """Verify 2.5 sum <= prod over all sorted r-tuples from [4, hi].

    Descends only where the exact interval bound (left side maximized,
    right side minimized over the remaining sorted coordinates) is
    inconclusive, so every lattice point is covered.  Returns the number
    of points covered."""

    def rec(depth, lo, total, prod):
        remaining = r - depth
        if remaining == 0:
            if 5 * total > 2 * prod:
                failures.append(f"r={r} fails at a tuple summing to {total}")
            return 1
        lhs_max = 5 * (total + remaining * hi)
        rhs_min = 2 * prod * lo ** remaining
        if lhs_max <= rhs_min:
            return _covered_count(lo, hi, remaining)
        covered = 0
        for x in range(lo, hi + 1):
            covered += rec(depth + 1, x, total + x, prod * x)
        return covered

    return rec(0, 4, 0, 1)


def sum_product_sweep(r_max=6, x_max=64):
    """The sum-vs-product inequalities over every sorted tuple with entries
    in [4, x_max], for 2 <= r <= r_max, plus the exact induction step
    P + 2.5 x <= P x for P >= 16, x >= 4 (which extends part (i) beyond
    any finite range)."""
    failures = []
    checked = 0

    for x1 in range(4, x_max + 1):
        for x2 in range(x1, x_max + 1):
            checked += 1
            if not verify_sum_product(2, (x1, x2)):
                failures.append(f"r=2 fails at ({x1}, {x2})")
    for r in range(3, r_max + 1):
        covered = _sweep_product_box(r, x_max, failures)
        if covered != _covered_count(4, x_max, r):
            failures.append(f"r={r} sweep covered {covered} points only")
        checked += covered

    # induction step: if 2.5 S <= P then 2.5 (S + x) <= P x, given P >= 16, x >= 4
    for P in range(16, 4097):
        for x in range(4, 65):
            checked += 1
            if 2 * P + 5 * x > 2 * P * x:
                failures.append(f"induction step fails at P={P}, x={x}")

    boundary = 250 * (5 + 5) == 100 * 5 * 5
    values = {"checked": checked, "boundary_equality_at_5_5": boundary}
    if failures:
        values["first_failure"] = failures[0]
    return VerificationReport(
        id="sum-product-inequalities",
        subject=f"2 <= r <= {r_max}, 4 <= x_i <= {x_max}",
        values=values,
        verdict="fail" if failures or not boundary else "pass",
    )


def verify_partition_bound(n_min=22, n_max=2000):
    """p(n)/4 >= e^(2 sqrt n)/56 across [n_min, n_max], plus the n = 22
    consequence that the bound forces at least 250 orbits."""
    if n_min < 22:
        raise ValueError("the bound is asserted for n >= 22")
    worst = None
    failures = 0
    for n in range(n_min, n_max + 1):
        lhs = partition_count(n) / 4.0
        rhs = math.exp(2.0 * math.sqrt(n)) / 56.0
        margin = lhs - rhs
        if margin < 0:
            failures += 1
        if worst is None or margin < worst[1]:
            worst = (n, margin)
    consequence = partition_count(22) // 4
    values = {
        "p22": partition_count(22),
        "consequence_k_at_least": consequence,
        "worst_n": worst[0],
    }
    ok = failures == 0 and consequence == 250 and partition_count(22) == 1002
    return VerificationReport(
        id="partition-growth-bound",
        subject=f"{n_min} <= n <= {n_max}",
        values=values,
        verdict="pass" if ok else "fail",
        margin=worst[1],
    )
