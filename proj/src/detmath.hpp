/*
 Copyright 2026 The hexplace authors

 Licensed under the Apache License, Version 2.0 (the "License");
 you may not use this file except in compliance with the License.
 You may obtain a copy of the License at

      http://www.apache.org/licenses/LICENSE-2.0

 Unless required by applicable law or agreed to in writing, software
 distributed under the License is distributed on an "AS IS" BASIS,
 WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 See the License for the specific language governing permissions and
 limitations under the License.
*/
#pragma once

// Deterministic sine and cosine.
//
// Simulation trajectories must be bit-reproducible across platforms, and the
// only libm calls in the hot path that are not correctly rounded by the IEEE
// standard are sin/cos (sqrt is exact everywhere). These kernels are the
// classic fdlibm polynomial approximations evaluated with plain double
// arithmetic only, so every platform computes the same bits. Accuracy is
// within a couple of ulps on the reduced range, far below the tolerances
// that matter here.
//
// Valid for |theta| up to a few thousand radians; callers pass [0, 2*pi).

namespace hexplace {

namespace detail {

// fdlibm kernel coefficients, |x| <= pi/4.
inline double kernel_sin(double x) {
    constexpr double S1 = -1.66666666666666324348e-01;
    constexpr double S2 = 8.33333333332248946124e-03;
    constexpr double S3 = -1.98412698298579493134e-04;
    constexpr double S4 = 2.75573137070700676789e-06;
    constexpr double S5 = -2.50507602534068634195e-08;
    constexpr double S6 = 1.58969099521155010221e-10;
    const double z = x * x;
    const double r = S2 + z * (S3 + z * (S4 + z * (S5 + z * S6)));
    return x + x * z * (S1 + z * r);
}

inline double kernel_cos(double x) {
    constexpr double C1 = 4.16666666666666019037e-02;
    constexpr double C2 = -1.38888888888741095749e-03;
    constexpr double C3 = 2.48015872894767294178e-05;
    constexpr double C4 = -2.75573143513906633035e-07;
    constexpr double C5 = 2.08757232129817482790e-09;
    constexpr double C6 = -1.13596475577881948265e-11;
    const double z = x * x;
    const double r = z * (C1 + z * (C2 + z * (C3 + z * (C4 + z * (C5 + z * C6)))));
    const double hz = 0.5 * z;
    const double w = 1.0 - hz;
    return w + (((1.0 - w) - hz) + z * r);
}

}  // namespace detail

struct SinCos {
    double sin = 0.0;
    double cos = 1.0;
};

inline SinCos det_sincos(double theta) {
    constexpr double kTwoOverPi = 6.36619772367581382433e-01;
    constexpr double kPio2Hi = 1.57079632679489655800e+00;
    constexpr double kPio2Lo = 6.12323399573676603587e-17;

    if (theta > -7.85398163397448278999e-01 && theta < 7.85398163397448278999e-01) {
        return {detail::kernel_sin(theta), detail::kernel_cos(theta)};
    }
    const double fn = theta * kTwoOverPi;
    const int n = static_cast<int>(fn >= 0.0 ? fn + 0.5 : fn - 0.5);
    const double r = (theta - n * kPio2Hi) - n * kPio2Lo;
    switch (((n % 4) + 4) % 4) {
        case 0: return {detail::kernel_sin(r), detail::kernel_cos(r)};
        case 1: return {detail::kernel_cos(r), -detail::kernel_sin(r)};
        case 2: return {-detail::kernel_sin(r), -detail::kernel_cos(r)};
        default: return {-detail::kernel_cos(r), detail::kernel_sin(r)};
    }
}

inline double det_sin(double theta) { return det_sincos(theta).sin; }
inline double det_cos(double theta) { return det_sincos(theta).cos; }

}  // namespace hexplace
