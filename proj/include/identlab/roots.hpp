// Copyright 2026 The identlab Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef IDENTLAB_ROOTS_HPP_
#define IDENTLAB_ROOTS_HPP_

#include <complex>
#include <span>
#include <vector>

namespace identlab {

using Complex = std::complex<double>;

// Leading coefficients with |c| <= rel_tol * max|c| count as zero.
inline constexpr double kLeadingTrimTol = 1e-12;

// Drops negligible leading coefficients (ascending storage, so from the
// back) and returns how many were dropped.
int trim_leading(std::vector<Complex>& coeffs,
                 double rel_tol = kLeadingTrimTol);

Complex horner(std::span<const Complex> coeffs, Complex z);

// All roots, with multiplicity, of c[0] + c[1] t + ... after trimming.
// Zero roots are split off exactly; the rest come from Aberth-Ehrlich
// simultaneous iteration followed by guarded Newton polishing. Throws
// ConfigError for the zero polynomial.
std::vector<Complex> univariate_roots(std::vector<Complex> coeffs);
std::vector<Complex> univariate_roots(std::span<const double> coeffs);

// Backward error |p(z)| / (max|c| (1 + |z|)^deg).
double root_backward_error(std::span<const Complex> coeffs, Complex z);

struct RootCluster {
  Complex value;  // mean of the members
  int multiplicity = 0;
};

// Single-linkage grouping of roots closer than radius.
std::vector<RootCluster> cluster_roots(const std::vector<Complex>& roots,
                                       double radius);

}  // namespace identlab

#endif  // IDENTLAB_ROOTS_HPP_
