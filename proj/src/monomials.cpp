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

#include "identlab/monomials.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "identlab/common.hpp"

namespace identlab {

std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

namespace {

// All exponent vectors of exactly total degree `deg`, lex descending.
void fill_degree(int vars, int deg, int pos, Exponent& cur,
                 std::vector<Exponent>& out) {
  if (pos == vars - 1) {
    cur[pos] = deg;
    out.push_back(cur);
    return;
  }
  for (int e = deg; e >= 0; --e) {
    cur[pos] = e;
    fill_degree(vars, deg - e, pos + 1, cur, out);
  }
}

}  // namespace

std::vector<Exponent> graded_lex_monomials(int vars, int degree, bool lifted) {
  if (vars < 1 || degree < 0) {
    throw ConfigError("graded_lex_monomials: need vars >= 1, degree >= 0");
  }
  std::vector<Exponent> out;
  Exponent cur(vars, 0);
  for (int deg = lifted ? 0 : degree; deg <= degree; ++deg) {
    fill_degree(vars, deg, 0, cur, out);
  }
  return out;
}

double monomial_value(const Exponent& e, std::span<const double> point) {
  double v = 1.0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    for (int p = 0; p < e[i]; ++p) v *= point[i];
  }
  return v;
}

double multinomial_lifted(int m, const Exponent& e) {
  const int total = std::accumulate(e.begin(), e.end(), 0);
  double r = std::tgamma(m + 1.0) / std::tgamma(m - total + 1.0);
  for (int k : e) r /= std::tgamma(k + 1.0);
  return std::round(r);
}

}  // namespace identlab
