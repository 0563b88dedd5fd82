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

#ifndef IDENTLAB_MONOMIALS_HPP_
#define IDENTLAB_MONOMIALS_HPP_

#include <cstdint>
#include <span>
#include <vector>

namespace identlab {

using Exponent = std::vector<int>;

std::int64_t binomial(int n, int k);

// Monomials in `vars` variables in graded lexicographic order: total degree
// ascending, then lexicographically descending exponent vectors, so for two
// variables and degree <= 2 the order is 1, t1, t2, t1^2, t1 t2, t2^2.
// With lifted=false only the monomials of total degree exactly `degree`.
std::vector<Exponent> graded_lex_monomials(int vars, int degree, bool lifted);

double monomial_value(const Exponent& e, std::span<const double> point);

// m! / (k_0! k_1! ... ) for k_0 = m - |e| and k_i = e[i-1].
double multinomial_lifted(int m, const Exponent& e);

}  // namespace identlab

#endif  // IDENTLAB_MONOMIALS_HPP_
