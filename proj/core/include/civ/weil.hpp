// Copyright 2026 The civ authors
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

#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "civ/field.hpp"
#include "civ/report.hpp"

namespace civ {

/// Dense univariate polynomial over GF(q), low degree first.
/// The zero polynomial has an empty coefficient vector.
class Poly {
 public:
  explicit Poly(const Field& F) : F_(&F) {}
  Poly(const Field& F, std::vector<Fq> coeffs);

  const Field& field() const { return *F_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Fq coeff(int i) const {
    return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : 0;
  }
  Fq leading() const { return c_.empty() ? 0 : c_.back(); }
  const std::vector<Fq>& coeffs() const { return c_; }

  Fq eval(Fq x) const;
  Poly derivative() const;
  Poly monic() const;
  Poly scaled(Fq k) const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) {
    return a.c_ == b.c_;
  }

  /// Quotient-remainder by a nonzero divisor.
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

 private:
  const Field* F_;
  std::vector<Fq> c_;
  void trim();
};

/// Monic gcd via Euclid; gcd(f, 0) = monic(f).
Poly poly_gcd(const Poly& a, const Poly& b);

/// Number of distinct roots of f in its splitting field: the degree of the
/// squarefree part. Handles the characteristic-p derivative degeneracy
/// (f' = 0 means f is a p-th power; recurse on the p-th root).
int squarefree_part_degree(const Poly& f);

/// Exact polynomial square root, if f is a perfect square in GF(q)[x].
/// Odd characteristic.
std::optional<Poly> poly_sqrt(const Poly& f);

/// Exact data for the point count of y^2 = f(x) over GF(q).
struct WeilInstance {
  int m = 2;
  std::uint64_t k = 0;  // gcd(m, q-1)
  std::uint64_t d = 0;  // distinct roots of f in the splitting field
  std::uint64_t n_solutions = 0;
};

/// N = sum over x of (1 + chi(f(x))), chi the quadratic character with
/// chi(0) = 0. Odd q.
WeilInstance count_solutions(const Poly& f);

/// f_gamma * f_delta with f_c(w) = w^4 + c w^2 + 1, gamma = -2 - 4/tau^2,
/// delta = -2 - 4/mu^2. q = 1 mod 4; tau, mu nonzero.
Poly build_bound1_product(const Field& F, Fq tau, Fq mu);

/// Point of sigma^2 + tau^2 = -1 recovered from parameter zeta and base
/// point (sigma0, tau0). Covers all but at most one point of the conic as
/// zeta ranges over GF(q).
std::pair<Fq, Fq> parametrize_conic(const Field& F, Fq sigma0, Fq tau0,
                                    Fq zeta);

/// theta_{alpha,omega}(zeta), the poly2 discriminant pulled back through the
/// conic parametrization and cleared of denominators by (zeta^2+1)^2;
/// the alpha = 0 branch is the theta_{0,lambda} difference-of-squares form.
Poly build_theta(const Field& F, Fq alpha, Fq omega, Fq sigma0, Fq tau0);

struct WeilAudit {
  bool hypothesis_ok = true;  // false iff f is a perfect polynomial square
  bool holds = false;         // (N-q)^2 <= (k-1)^2 (d-1)^2 q, exact integers
  std::uint64_t n_solutions = 0;
  std::uint64_t k = 0, d = 0;
};

/// Audits |N - q| <= (k-1)(d-1) sqrt(q) by exact integer comparison.
/// Perfect polynomial squares are refused (hypothesis_ok = false): the
/// absolute-irreducibility hypothesis of the bound fails for them.
WeilAudit audit_weil_bound(const Poly& f);

/// Least-encoding point of sigma^2 + tau^2 = -1 over GF(q), odd q.
std::pair<Fq, Fq> conic_base_point(const Field& F);

/// Seeded audit of the congruence-appropriate family: bound1 quartic
/// products for q = 1 mod 4, theta polynomials for q = 3 mod 4. Each
/// sample must pass both the computed-d bound and (N-q)^2 <= 49q.
/// Deterministic given (q, samples, seed).
LemmaReport verify_weil_samples(const Field& F, int samples,
                                std::uint64_t seed);

}  // namespace civ
