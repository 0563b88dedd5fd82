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

#include "identlab/varieties.hpp"

#include <cmath>
#include <set>

namespace identlab {

namespace {

// Degree of the variety of m x n matrices of rank <= k.
int determinantal_degree(int m, int n, int k) {
  double deg = 1.0;
  for (int i = 0; i < n - k; ++i) {
    deg *= std::tgamma(m + i + 1.0) * std::tgamma(i + 1.0) /
           (std::tgamma(k + i + 1.0) * std::tgamma(m - k + i + 1.0));
  }
  return static_cast<int>(std::lround(deg));
}

}  // namespace

ParametricVariety make_low_rank(int d1, int d2, int k) {
  if (d1 < 1 || d2 < 1 || k < 1) {
    throw ConfigError("low_rank: d1, d2, k must be positive");
  }
  if (k > std::min(d1, d2)) {
    throw ConfigError("low_rank: k exceeds min(d1, d2)");
  }
  ParametricVariety v;
  v.name = "low_rank(" + std::to_string(d1) + "," + std::to_string(d2) + "," +
           std::to_string(k) + ")";
  v.ambient_dim = d1 * d2;
  v.param_dim = (d1 + d2) * k;
  v.intrinsic_dim = (d1 + d2 - k) * k;
  v.gauge_dim = k * k;
  v.degree = determinantal_degree(d1, d2, k);

  const int w_offset = d1 * k;
  v.eval = [=](const Vector& theta) {
    Vector x = Vector::Zero(d1 * d2);
    for (int i = 0; i < d1; ++i) {
      for (int j = 0; j < d2; ++j) {
        double s = 0.0;
        for (int r = 0; r < k; ++r) {
          s += theta(i * k + r) * theta(w_offset + j * k + r);
        }
        x(i * d2 + j) = s;
      }
    }
    return x;
  };
  v.jac = [=](const Vector& theta) {
    Matrix jm = Matrix::Zero(d1 * d2, (d1 + d2) * k);
    for (int i = 0; i < d1; ++i) {
      for (int j = 0; j < d2; ++j) {
        const int row = i * d2 + j;
        for (int r = 0; r < k; ++r) {
          jm(row, i * k + r) = theta(w_offset + j * k + r);
          jm(row, w_offset + j * k + r) = theta(i * k + r);
        }
      }
    }
    return jm;
  };
  return v;
}

ParametricVariety make_parabola() {
  ParametricVariety v;
  v.name = "parabola";
  v.ambient_dim = 2;
  v.param_dim = 1;
  v.intrinsic_dim = 1;
  v.gauge_dim = 0;
  v.degree = 2;
  v.eval = [](const Vector& theta) {
    Vector x(2);
    x << theta(0), theta(0) * theta(0);
    return x;
  };
  v.jac = [](const Vector& theta) {
    Matrix jm(2, 1);
    jm << 1.0, 2.0 * theta(0);
    return jm;
  };
  return v;
}

namespace {

ParametricVariety make_full_polynomials(int vars, int degree, int dim) {
  ParametricVariety v;
  v.name = "polynomials(d=" + std::to_string(vars) +
           ",m=" + std::to_string(degree) + ")";
  v.ambient_dim = dim;
  v.param_dim = dim;
  v.intrinsic_dim = dim;
  v.gauge_dim = 0;
  v.degree = 1;
  v.eval = [](const Vector& theta) { return theta; };
  v.jac = [dim](const Vector&) { return Matrix::Identity(dim, dim); };
  return v;
}

ParametricVariety make_sparse_polynomials(int vars, int degree, int dim,
                                          std::vector<int> support) {
  if (support.empty()) throw ConfigError("sparse model: empty support");
  if (static_cast<int>(support.size()) > dim) {
    throw ConfigError("sparse model: support larger than ambient dimension");
  }
  std::set<int> seen;
  for (int idx : support) {
    if (idx < 0 || idx >= dim) {
      throw ConfigError("sparse model: support index out of range");
    }
    if (!seen.insert(idx).second) {
      throw ConfigError("sparse model: repeated support index");
    }
  }
  const int s = static_cast<int>(support.size());
  ParametricVariety v;
  v.name = "sparse(d=" + std::to_string(vars) + ",m=" +
           std::to_string(degree) + ",s=" + std::to_string(s) + ")";
  v.ambient_dim = dim;
  v.param_dim = s;
  v.intrinsic_dim = s;
  v.gauge_dim = 0;
  v.degree = 1;
  v.eval = [dim, support](const Vector& theta) {
    Vector x = Vector::Zero(dim);
    for (std::size_t q = 0; q < support.size(); ++q) {
      x(support[q]) = theta(static_cast<Eigen::Index>(q));
    }
    return x;
  };
  v.jac = [dim, support](const Vector&) {
    Matrix jm = Matrix::Zero(dim, static_cast<Eigen::Index>(support.size()));
    for (std::size_t q = 0; q < support.size(); ++q) {
      jm(support[q], static_cast<Eigen::Index>(q)) = 1.0;
    }
    return jm;
  };
  return v;
}

ParametricVariety make_waring_polynomials(int vars, int degree, int dim,
                                          int rank) {
  if (rank < 1) throw ConfigError("waring model: rank must be positive");
  if (rank > dim) {
    throw ConfigError("waring model: rank exceeds ambient dimension");
  }
  const auto monomials = graded_lex_monomials(vars, degree, true);
  std::vector<double> weights;
  weights.reserve(monomials.size());
  for (const auto& e : monomials) {
    weights.push_back(multinomial_lifted(degree, e));
  }
  // Per summand: c_j, then a_j in R^{vars + 1} acting on the lifted (1, t).
  const int block = vars + 2;

  // a^{(m - |e|, e)} as a product over the lifted coordinates.
  auto power_product = [=](const double* a, const Exponent& e, int skip) {
    int total = 0;
    for (int p : e) total += p;
    double r = 1.0;
    for (int q = 0; q <= vars; ++q) {
      int pw = q == 0 ? degree - total : e[q - 1];
      if (q == skip) {
        if (pw == 0) return 0.0;
        r *= pw;
        --pw;
      }
      for (int t = 0; t < pw; ++t) r *= a[q];
    }
    return r;
  };

  ParametricVariety v;
  v.name = "waring(d=" + std::to_string(vars) + ",m=" +
           std::to_string(degree) + ",r=" + std::to_string(rank) + ")";
  v.ambient_dim = dim;
  v.param_dim = rank * block;
  v.eval = [=](const Vector& theta) {
    Vector x = Vector::Zero(dim);
    for (int j = 0; j < rank; ++j) {
      const double c = theta(j * block);
      const double* a = theta.data() + j * block + 1;
      for (int q = 0; q < dim; ++q) {
        x(q) += c * weights[q] * power_product(a, monomials[q], -1);
      }
    }
    return x;
  };
  v.jac = [=](const Vector& theta) {
    Matrix jm = Matrix::Zero(dim, rank * block);
    for (int j = 0; j < rank; ++j) {
      const double c = theta(j * block);
      const double* a = theta.data() + j * block + 1;
      for (int q = 0; q < dim; ++q) {
        jm(q, j * block) = weights[q] * power_product(a, monomials[q], -1);
        for (int s = 0; s <= vars; ++s) {
          jm(q, j * block + 1 + s) =
              c * weights[q] * power_product(a, monomials[q], s);
        }
      }
    }
    return jm;
  };

  Rng rng(derive_seed(0x5eedULL, static_cast<std::uint64_t>(rank),
                      "waring-generic-rank"));
  const Vector theta = standard_normal(rng, v.param_dim);
  v.intrinsic_dim = numerical_rank(v.jac(theta));
  v.gauge_dim = v.param_dim - v.intrinsic_dim;
  return v;
}

}  // namespace

ParametricVariety make_veronese_model(const VeroneseModelSpec& spec) {
  if (spec.vars < 1 || spec.degree < 1) {
    throw ConfigError("veronese model: need d >= 1 and m >= 1");
  }
  const int dim = static_cast<int>(binomial(spec.degree + spec.vars, spec.vars));
  switch (spec.kind) {
    case VeroneseModelSpec::Kind::kFull:
      return make_full_polynomials(spec.vars, spec.degree, dim);
    case VeroneseModelSpec::Kind::kSparse:
      return make_sparse_polynomials(spec.vars, spec.degree, dim, spec.support);
    case VeroneseModelSpec::Kind::kWaring:
      return make_waring_polynomials(spec.vars, spec.degree, dim, spec.rank);
  }
  throw ConfigError("veronese model: unknown kind");
}

Vector evaluate(const ParametricVariety& variety, const Vector& theta) {
  if (theta.size() != variety.param_dim) {
    throw DimensionError("evaluate: expected " +
                         std::to_string(variety.param_dim) + " parameters, got " +
                         std::to_string(theta.size()));
  }
  return variety.eval(theta);
}

Matrix jacobian(const ParametricVariety& variety, const Vector& theta) {
  if (theta.size() != variety.param_dim) {
    throw DimensionError("jacobian: expected " +
                         std::to_string(variety.param_dim) + " parameters, got " +
                         std::to_string(theta.size()));
  }
  return variety.jac(theta);
}

VarietySample random_point(const ParametricVariety& variety, Rng& rng) {
  VarietySample s;
  s.theta = standard_normal(rng, variety.param_dim);
  s.x = variety.eval(s.theta);
  return s;
}

}  // namespace identlab
