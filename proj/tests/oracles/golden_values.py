#!/usr/bin/env python3
# Copyright 2026 The modx Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Independent high-precision oracles for the golden values frozen into the
C++ unit tests. Nothing here shares code with the library: every value is
recomputed from first principles with mpmath / exact rationals.

Run:  python3 tests/oracles/golden_values.py
"""
from fractions import Fraction as F
from itertools import product
import math

import mpmath as mp

mp.mp.dps = 50


def po(lam, j):
    lam = mp.mpf(lam)
    return mp.e ** (-lam) * lam ** j / mp.factorial(j)


def golden_tv_poisson_shift():
    # sum_j |Po(5){j} - Po(5){j-1}| over the whole support
    total = mp.mpf(0)
    for j in range(0, 200):
        prev = po(5, j - 1) if j >= 1 else mp.mpf(0)
        total += abs(po(5, j) - prev)
    return total


def golden_tail_poisson():
    lower = sum(po(20, j) for j in range(0, 10))
    upper = 1 - sum(po(20, j) for j in range(0, 31))
    return lower + upper


def charlier_exact(l, j, lam):
    lam = F(lam)
    s = F(0)
    for k in range(l + 1):
        s += (-1) ** k * math.comb(l, k) * math.comb(j, k) * math.factorial(k) / lam ** k
    return s


def compositions(m, l):
    """All (s_1..s_l) of nonnegative integers summing to m (brute force)."""
    return [c for c in product(range(m + 1), repeat=l) if sum(c) == m]


def to_w_basis_exact(a):
    r = len(a)
    at = []
    for j in range(1, r + 1):
        # a_j = sum_{l=1}^j at_l * sum_{S_{j-l}} prod 1/(s_t+1)!
        acc = F(a[j - 1])
        for l in range(1, j):
            w = sum(
                math.prod(F(1, math.factorial(s + 1)) for s in c)
                for c in compositions(j - l, l))
            acc -= at[l - 1] * w
        at.append(acc)  # the l=j coefficient is 1
    return at


def factorial_cumulants_exact(pmf, order):
    # E(1+w)^X = sum_x p_x (1+w)^x ; log expand as exact power series
    n = order
    moments = [F(0)] * (n + 1)
    for x, px in pmf.items():
        for l in range(n + 1):
            moments[l] += px * math.comb(x, l)  # coefficient of w^l
    # log of series with b0 = 1
    c = [F(0)] * (n + 1)
    for k in range(1, n + 1):
        acc = moments[k]
        for i in range(1, k):
            acc -= F(i, k) * c[i] * moments[k - i]
        c[k] = acc
    return [c[l] * math.factorial(l) for l in range(n + 1)]


def exp_series_exact(g, n):
    e = [F(0)] * (n + 1)
    e[0] = F(1)
    for k in range(1, n + 1):
        e[k] = sum(F(i, k) * g[i] * e[k - i] for i in range(1, k + 1) if i < len(g))
    return e


def normal_abs_moment_quad(t):
    f = lambda y: abs(y) ** t * mp.e ** (-y * y / 2) / mp.sqrt(2 * mp.pi)
    return mp.quad(f, [-mp.inf, 0, mp.inf])


def alpha1(t):
    m = lambda s: 2 ** (mp.mpf(s) / 2) * mp.gamma((mp.mpf(s) + 1) / 2) / mp.sqrt(mp.pi)
    return max(mp.pi ** t / (t + 1), 2 ** (-(mp.mpf(t) + 1) / 2) * m(t) / mp.sqrt(2 * mp.pi))


def alpha2(t):
    m = lambda s: 2 ** (mp.mpf(s) / 2) * mp.gamma((mp.mpf(s) + 1) / 2) / mp.sqrt(mp.pi)
    b = mp.pi ** t / t
    if t > 1:
        b = max(b, 2 ** (-mp.mpf(t) / 2) * m(t - 1) * mp.sqrt(mp.pi / 2))
    return b


def main():
    print("tv(Po5, Po5+1)          =", mp.nstr(golden_tv_poisson_shift(), 20))
    print("tail Po(20) off [10,30] =", mp.nstr(golden_tail_poisson(), 20))
    print("Po(100){100}            =", mp.nstr(po(100, 100), 20))
    c = charlier_exact(3, 7, 5)
    print("C_3(7;5)                =", c, float(c))
    diag = {}
    for lam in (2, 10, 50):
        for k in range(0, 7):
            s = mp.mpf(0)
            for j in range(0, 400):
                ck = sum((-1) ** i * math.comb(k, i) * math.comb(j, i) * math.factorial(i)
                         * mp.mpf(lam) ** (-i) for i in range(k + 1))
                s += po(lam, j) * ck * ck
            diag[(lam, k)] = s
    for (lam, k), v in diag.items():
        print(f"diag lam={lam} k={k}: {mp.nstr(v, 18)}  k!/lam^k={mp.nstr(mp.factorial(k) / mp.mpf(lam) ** k, 18)}")
    at = to_w_basis_exact([F(1, 5), F(1, 20), F(1, 100)])
    print("to_w_basis(0.2,0.05,0.01) =", at, [float(x) for x in at])
    kap = factorial_cumulants_exact({0: F(7, 10), 1: F(3, 10)}, 4)
    print("Be(0.3) factorial cumulants k1..k4 =", kap[1:], [float(x) for x in kap[1:]])
    e = exp_series_exact([F(0), F(0), F(1, 2) / 2, F(-1, 5) / 6, F(0)], 6)
    print("exp(k2 w^2/2 + k3 w^3/6), k2=.5,k3=-.2 :", e[1:], [float(x) for x in e[1:]])
    print("m_1 (quadrature)        =", mp.nstr(normal_abs_moment_quad(1), 20))
    for t in (1, 1.5, 2, 2.5, 3, 4):
        print(f"m_{t} (quadrature) =", mp.nstr(normal_abs_moment_quad(t), 20))
    # alpha_{5t}, t=2, r=1, Abar=1.6
    t, r, B = 2, 1, mp.mpf('1.6')
    a1p = alpha1(t) * (mp.pi ** 2 / 2) ** ((t + 1) / mp.mpf(2))
    a2p = alpha2(t) * (mp.pi ** 2 / 2) ** (t / mp.mpf(2))
    a5 = a1p * (mp.sqrt(6 * (r + 1)) + r + 2) + 2 * a2p + 4 * B
    print("alpha_5t(t=2,r=1,B=1.6) =", mp.nstr(a5, 20))
    # new-pars, a=(0.2), a'=(0.1), lambda=50
    rho = 2 * mp.mpf(50) / mp.pi ** 2
    print("newpars loc1 =", mp.nstr(alpha1(1) * mp.mpf('0.1') * max(rho, 1) ** (-1), 20))
    print("newpars K1   =", mp.nstr(alpha2(1) * mp.mpf('0.1') * max(rho, 1) ** (-0.5), 20))
    # Bessel normaliser L(4)
    L4 = mp.nsum(lambda j: mp.mpf(4) ** j / (mp.factorial(j) * mp.factorial(j - 1)), [1, mp.inf])
    print("L(4) =", mp.nstr(L4, 20), " 2*I1(4) =", mp.nstr(2 * mp.besseli(1, 4), 20))
    # sum of omega(n), n <= 1e4, trial division
    tot = 0
    for n in range(2, 10001):
        m, d, w = n, 2, 0
        while d * d <= m:
            if m % d == 0:
                w += 1
                while m % d == 0:
                    m //= d
            d += 1
        if m > 1:
            w += 1
        tot += w
    print("sum_{n<=1e4} omega(n) =", tot)
    # Prime constants through the prime zeta function P(k) = sum_q q^{-k}:
    #   sum_q 1/(q(q-1)) = sum_{k>=2} P(k),  sum_q 1/(q-1)^2 = sum_{k>=2} (k-1) P(k).
    B1 = mp.mertens
    P2 = mp.primezeta(2)
    S1 = mp.nsum(lambda k: mp.primezeta(k), [2, mp.inf])
    T2 = mp.nsum(lambda k: (k - 1) * mp.primezeta(k), [2, mp.inf])
    print("B1 =", mp.nstr(B1, 20), " sum 1/q^2 =", mp.nstr(P2, 20))
    print("Phi_1 atilde_2 =", mp.nstr(B1 ** 2 / 2 - mp.pi ** 2 / 12 - P2 / 2, 20))
    print("Phi_2 atilde_1 =", mp.nstr(B1 + S1, 20))

    def translated(at1, at2):
        a1, a2 = at1, at2 + at1 / 2
        v = 2 * a2 - a1 ** 2
        x = a1 - v
        m = mp.floor(x)
        p = mp.sqrt(x - m)
        return x, int(m), p, v - p * (1 - p)

    c1 = B1
    c2 = -mp.zeta(2) / 2 + P2 * (-mp.mpf(1) / 2)
    print("omega (x, m, p, offset) =", [mp.nstr(v, 16) for v in translated(c1, c2 + c1 ** 2 / 2)])
    c1 = B1 + S1
    c2 = -mp.zeta(2) / 2 + T2 / 2
    from sympy import primerange
    N = 10 ** 7
    tot = sum(N // q for q in primerange(2, N + 1))
    print("sum_{n<=1e7} omega(n) =", tot, " mean =", mp.nstr(mp.mpf(tot) / N, 17))
    print("Omega (x, m, p, offset) =", [mp.nstr(v, 16) for v in translated(c1, c2 + c1 ** 2 / 2)])

if __name__ == "__main__":
    main()
