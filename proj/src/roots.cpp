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

#include "identlab/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "identlab/common.hpp"

namespace identlab {

namespace {

double max_abs(std::span<const Complex> c) {
  double m = 0.0;
  for (const auto& v : c) m = std::max(m, std::abs(v));
  return m;
}

// p(z) and p'(z) together.
void horner2(std::span<const Complex> c, Complex z, Complex& p, Complex& dp) {
  p = 0.0;
  dp = 0.0;
  for (std::size_t i = c.size(); i-- > 0;) {
    dp = dp * z + p;
    p = p * z + c[i];
  }
}

std::vector<Complex> aberth(const std::vector<Complex>& c) {
  const int n = static_cast<int>(c.size()) - 1;
  if (n == 1) return {-c[0] / c[1]};

  // Start on a circle whose radius is the geometric mean of the root moduli.
  const double radius =
      std::pow(std::abs(c[0]) / std::abs(c[static_cast<std::size_t>(n)]), 1.0 / n);
  std::vector<Complex> z(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const double angle = 2.0 * std::numbers::pi * k / n + 0.4;
    z[static_cast<std::size_t>(k)] = std::polar(radius, angle);
  }

  constexpr int kMaxIters = 1000;
  for (int iter = 0; iter < kMaxIters; ++iter) {
    bool done = true;
    for (int k = 0; k < n; ++k) {
      auto& zk = z[static_cast<std::size_t>(k)];
      Complex p, dp;
      horner2(c, zk, p, dp);
      if (p == 0.0) continue;
      Complex repulsion = 0.0;
      for (int j = 0; j < n; ++j) {
        if (j == k) continue;
        const Complex diff = zk - z[static_cast<std::size_t>(j)];
        if (diff != 0.0) repulsion += 1.0 / diff;
      }
      const Complex ratio = p / dp;
      Complex w = ratio / (1.0 - ratio * repulsion);
      if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) {
        w = Complex(1e-3 * (1.0 + std::abs(zk)), 1e-3);
      }
      zk -= w;
      if (std::abs(w) > 1e-15 * (1.0 + std::abs(zk))) done = false;
    }
    if (done) break;
  }

  // Newton polishing, kept only when it lowers |p|.
  for (auto& zk : z) {
    for (int step = 0; step < 3; ++step) {
      Complex p, dp;
      horner2(c, zk, p, dp);
      if (p == 0.0 || dp == 0.0) break;
      const Complex cand = zk - p / dp;
      if (std::abs(horner(c, cand)) < std::abs(p)) {
        zk = cand;
      } else {
        break;
      }
    }
  }
  return z;
}

}  // namespace

int trim_leading(std::vector<Complex>& coeffs, double rel_tol) {
  const double scale = max_abs(coeffs);
  int dropped = 0;
  while (!coeffs.empty() && std::abs(coeffs.back()) <= rel_tol * scale) {
    coeffs.pop_back();
    ++dropped;
  }
  return dropped;
}

Complex horner(std::span<const Complex> coeffs, Complex z) {
  Complex p = 0.0;
  for (std::size_t i = coeffs.size(); i-- > 0;) p = p * z + coeffs[i];
  return p;
}

std::vector<Complex> univariate_roots(std::vector<Complex> coeffs) {
  trim_leading(coeffs);
  if (coeffs.empty()) {
    throw ConfigError("univariate_roots: zero polynomial has no finite root set");
  }
  std::vector<Complex> roots;
  std::size_t low = 0;
  while (low < coeffs.size() && coeffs[low] == 0.0) {
    roots.emplace_back(0.0, 0.0);
    ++low;
  }
  std::vector<Complex> rest(coeffs.begin() + static_cast<std::ptrdiff_t>(low),
                            coeffs.end());
  if (rest.size() >= 2) {
    const auto found = aberth(rest);
    roots.insert(roots.end(), found.begin(), found.end());
  }
  std::sort(roots.begin(), roots.end(), [](const Complex& a, const Complex& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return roots;
}

std::vector<Complex> univariate_roots(std::span<const double> coeffs) {
  return univariate_roots(std::vector<Complex>(coeffs.begin(), coeffs.end()));
}

double root_backward_error(std::span<const Complex> coeffs, Complex z) {
  const double scale = max_abs(coeffs);
  if (scale == 0.0) return 0.0;
  const int deg = static_cast<int>(coeffs.size()) - 1;
  return std::abs(horner(coeffs, z)) / (scale * std::pow(1.0 + std::abs(z), deg));
}

std::vector<RootCluster> cluster_roots(const std::vector<Complex>& roots,
                                       double radius) {
  const std::size_t n = roots.size();
  std::vector<int> group(n, -1);
  int groups = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (group[i] >= 0) continue;
    group[i] = groups;
    std::vector<std::size_t> frontier{i};
    while (!frontier.empty()) {
      const std::size_t a = frontier.back();
      frontier.pop_back();
      for (std::size_t b = 0; b < n; ++b) {
        if (group[b] < 0 && std::abs(roots[a] - roots[b]) <= radius) {
          group[b] = groups;
          frontier.push_back(b);
        }
      }
    }
    ++groups;
  }
  std::vector<RootCluster> out(static_cast<std::size_t>(groups));
  for (std::size_t i = 0; i < n; ++i) {
    auto& cl = out[static_cast<std::size_t>(group[i])];
    cl.value += roots[i];
    ++cl.multiplicity;
  }
  for (auto& cl : out) cl.value /= static_cast<double>(cl.multiplicity);
  return out;
}

}  // namespace identlab
