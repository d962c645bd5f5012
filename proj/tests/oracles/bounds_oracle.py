"""High-precision reference values for the bounds tests (mpmath, 60 digits)."""
from mpmath import mp, mpf, sqrt, floor

mp.dps = 60


def pps_lower(k):
    return sqrt(2 / (k * sqrt(3)))


def pps_upper(k):
    u = mpf(1) / (k - 1)
    return u + sqrt(u * u + 2 * u / sqrt(3))


def beta(cutoff_n=21491):
    m = cutoff_n - 1
    return 1 / sqrt(m) + sqrt(2 / sqrt(3) + mpf(1) / m)


def seg(t):
    s = sqrt(t)
    return mpf(2) / 3 * t * s - mpf(3) / 2 * t + mpf(5) / 6 * s


def gamma2(t=647):
    return (t - 6) / seg(t)


def lam(b, g2):
    return (-g2 + sqrt(g2 * g2 + 16 * b * b)) / (8 * b * b)


def threshold_t(diam):
    t = 2
    while seg(t) <= diam:
        t += 1
    return t


c = mpf(3) ** (mpf(1) / 4) * mpf(2) ** (-mpf(3) / 2)
print("pps k=2", pps_lower(2), pps_upper(2))
print("pps k=4", pps_lower(4), pps_upper(4))
print("pps k=30", pps_lower(30), pps_upper(30))
print("beta", beta())
print("gamma2", gamma2(), 3846 / (2593 * sqrt(647) - 5823))
print("gamma", lam(beta(), gamma2()))
print("limit c", c)
print("seg 5", seg(5), "seg 646", seg(646), "seg 647", seg(647))
print("threshold_t(10000)", threshold_t(10000))
print("max_collinear 10001", floor(gamma2() * 10001 + 6), "20000", floor(gamma2() * 20000 + 6))
print("diam_lower 5", c * 5, "21491", c * 21491, "30000", lam(beta(), gamma2()) * 29998)
print("10000/c", 10000 / c)
for diam in [465000, 10**6, 10**8]:
    n = int(floor(diam / c))
    t = threshold_t(diam) if diam < 10**7 else None
    print("diam", diam, "n", n, "t", t)


def threshold_fast(diam):
    lo, hi = 2, 4
    while seg(hi) <= diam:
        lo, hi = hi, hi * 2
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if seg(mid) > diam:
            hi = mid
        else:
            lo = mid
    return hi


for diam in [10000, 465000, 10**6, 10**8]:
    n = int(floor(diam / c))
    t = threshold_fast(diam)
    print("cutoffs", diam, n, t, "gamma", lam(beta(n), gamma2(t)))
print("gamma (1e6 n, 465000, t)", lam(beta(10**6), gamma2(threshold_fast(465000))))
print("pps k=21491 upper", pps_upper(21491), "env", beta() / sqrt(21490))
