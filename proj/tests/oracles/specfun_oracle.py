# Copyright 2026 The maxspec Authors
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

"""High-precision reference values for the special-function unit tests.

Run with `python3 specfun_oracle.py`; the printed values are frozen into
tests/test_specfun.cpp.
"""
from fractions import Fraction
from math import factorial

import mpmath as mp

mp.mp.dps = 40


def bernoulli_series_coefficients(n_terms):
    # z coth z = sum_n 2^(2n) B_(2n) z^(2n) / (2n)!
    out = []
    for n in range(n_terms):
        b = Fraction(mp.bernfrac(2 * n)[0], mp.bernfrac(2 * n)[1])
        out.append(Fraction(2 ** (2 * n)) * b / factorial(2 * n))
    return out


def zcothz_sq(s):
    s = mp.mpc(s)
    if s == 0:
        return mp.mpf(1)
    z = mp.sqrt(s)
    return z * mp.coth(z)


def g_scaled(s, length):
    return zcothz_sq(mp.mpc(s) * length ** 2) / length


def sqrt_re(z):
    w = mp.sqrt(mp.mpc(z))
    if w.real < 0 or (w.real == 0 and w.imag < 0):
        w = -w
    return w


def main():
    for k, c in enumerate(bernoulli_series_coefficients(9)):
        print(f"series[{k}] = {c} = {mp.mpf(c.numerator) / c.denominator}")
    pi = mp.pi
    print("g(1) =", zcothz_sq(1))
    print("scaled(4, 3) =", g_scaled(4, 3))
    c = pi ** 2 / 4
    # truncated dispersion at omega = 0, X = 2: alpha = beta = pi/2, len = 1
    print("trunc(0, pi^2/4, 2) =", zcothz_sq(c) + g_scaled(c, 1))
    print("true(0, pi^2/4, +1) =", zcothz_sq(c) + sqrt_re(c))
    print("sa_sq(0, pi^2/4, 10) =", zcothz_sq(c) ** 2 - c)
    for w, cc in [(mp.mpf("1.4622"), pi ** 2 / 4), (mp.mpf("1.5643"), pi ** 2)]:
        a2 = cc - 11 * w ** 2
        b2 = cc - w ** 2
        print("sa_sq", w, "=", zcothz_sq(a2) ** 2 - b2,
              " plus-branch:", zcothz_sq(a2) + sqrt_re(b2),
              " minus-branch:", zcothz_sq(a2) - sqrt_re(b2))
    # an off-axis complex spot value for the conductive squared form
    w = mp.mpc("3.1", "-0.2")
    cc = pi ** 2
    a2 = cc - w * (w + 1j)
    b2 = cc - w * w
    print("true_sq(3.1-0.2i, pi^2) =", zcothz_sq(a2) ** 2 - b2)
    print("trunc(3.1-0.2i, pi^2, X=7) =", zcothz_sq(a2) + g_scaled(b2, 6))
    # dtn entry
    nu = mp.mpf("0.3")
    k = pi / 2
    print("dtn(0.3, pi/2) =", k * ((1 - nu) * mp.coth(k) - nu))


if __name__ == "__main__":
    main()
