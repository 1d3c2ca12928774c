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

#include "civ/weil.hpp"

#include <chrono>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

namespace civ {

Poly::Poly(const Field& F, std::vector<Fq> coeffs)
    : F_(&F), c_(std::move(coeffs)) {
  trim();
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Fq Poly::eval(Fq x) const {
  Fq r = 0;
  for (size_t i = c_.size(); i-- > 0;) r = F_->add(F_->mul(r, x), c_[i]);
  return r;
}

Poly Poly::derivative() const {
  std::vector<Fq> d;
  for (size_t i = 1; i < c_.size(); ++i)
    d.push_back(F_->mul(F_->from_int(static_cast<std::int64_t>(i)), c_[i]));
  return Poly(*F_, std::move(d));
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(F_->inv(leading()));
}

Poly Poly::scaled(Fq k) const {
  std::vector<Fq> s(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) s[i] = F_->mul(c_[i], k);
  return Poly(*F_, std::move(s));
}

Poly operator+(const Poly& a, const Poly& b) {
  const Field& F = *a.F_;
  std::vector<Fq> r(std::max(a.c_.size(), b.c_.size()), 0);
  for (size_t i = 0; i < r.size(); ++i) r[i] = F.add(a.coeff(i), b.coeff(i));
  return Poly(F, std::move(r));
}

Poly operator-(const Poly& a, const Poly& b) {
  const Field& F = *a.F_;
  std::vector<Fq> r(std::max(a.c_.size(), b.c_.size()), 0);
  for (size_t i = 0; i < r.size(); ++i) r[i] = F.sub(a.coeff(i), b.coeff(i));
  return Poly(F, std::move(r));
}

Poly operator*(const Poly& a, const Poly& b) {
  const Field& F = *a.F_;
  if (a.is_zero() || b.is_zero()) return Poly(F);
  std::vector<Fq> r(a.c_.size() + b.c_.size() - 1, 0);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j)
      r[i + j] = F.add(r[i + j], F.mul(a.c_[i], b.c_[j]));
  }
  return Poly(F, std::move(r));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("Poly::divmod: division by zero");
  const Field& F = *a.F_;
  std::vector<Fq> rem = a.c_;
  std::vector<Fq> quot(
      a.degree() >= b.degree() ? a.degree() - b.degree() + 1 : 0, 0);
  Fq lead_inv = F.inv(b.leading());
  for (int i = static_cast<int>(rem.size()) - 1; i >= b.degree(); --i) {
    if (rem[i] == 0) continue;
    Fq c = F.mul(rem[i], lead_inv);
    quot[i - b.degree()] = c;
    for (int j = 0; j <= b.degree(); ++j)
      rem[i - b.degree() + j] =
          F.sub(rem[i - b.degree() + j], F.mul(c, b.coeff(j)));
  }
  return {Poly(F, std::move(quot)), Poly(F, std::move(rem))};
}

Poly poly_gcd(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero())
    throw std::domain_error("poly_gcd: gcd(0, 0) undefined");
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = Poly::divmod(x, y).second;
    x = y;
    y = r;
  }
  return x.monic();
}

namespace {

// f(x) = g(x^p) -> g, taking p-th roots of coefficients in GF(q).
Poly pth_root(const Poly& f) {
  const Field& F = f.field();
  std::vector<Fq> root;
  for (int i = 0; i <= f.degree(); i += F.p())
    root.push_back(F.pow(f.coeff(i), F.q() / F.p()));
  return Poly(F, std::move(root));
}

// Product of the distinct monic irreducible factors of f.
Poly radical(Poly f) {
  const Field& F = f.field();
  f = f.monic();
  if (f.degree() <= 0) return Poly(F, {1});
  Poly d = f.derivative();
  if (d.is_zero()) return radical(pth_root(f));
  Poly g = poly_gcd(f, d);
  Poly w = Poly::divmod(f, g).first;  // factors with multiplicity != 0 mod p
  for (;;) {
    Poly h = poly_gcd(g, w);
    if (h.degree() == 0) break;
    g = Poly::divmod(g, h).first;
  }
  // what remains of g is a p-th power coprime to w
  if (g.degree() == 0) return w.monic();
  return (w * radical(pth_root(g))).monic();
}

}  // namespace

int squarefree_part_degree(const Poly& f) {
  if (f.is_zero())
    throw std::domain_error("squarefree_part_degree: zero polynomial");
  return radical(f).degree();
}

std::optional<Poly> poly_sqrt(const Poly& f) {
  const Field& F = f.field();
  if (!F.odd()) throw std::invalid_argument("poly_sqrt: odd characteristic");
  if (f.is_zero()) return Poly(F);
  if (f.degree() % 2 != 0) return std::nullopt;
  if (F.square_class(f.leading()) == SquareClass::kNonSquare)
    return std::nullopt;
  int half = f.degree() / 2;
  std::vector<Fq> g(half + 1, 0);
  g[half] = F.sqrt(f.leading());
  // determine remaining coefficients top-down from f - g^2
  Fq lead2inv = F.inv(F.mul(F.from_int(2), g[half]));
  for (int i = half - 1; i >= 0; --i) {
    // coefficient of x^(i+half) in g^2, excluding the 2*g[half]*g[i] term
    Fq acc = 0;
    for (int j = i + 1; j <= half - 1; ++j) {
      int kk = i + half - j;
      if (kk > half || kk < 0) continue;
      acc = F.add(acc, F.mul(g[j], g[kk]));
    }
    g[i] = F.mul(F.sub(f.coeff(i + half), acc), lead2inv);
  }
  Poly cand(F, std::move(g));
  if (cand * cand == f) return cand;
  return std::nullopt;
}

WeilInstance count_solutions(const Poly& f) {
  const Field& F = f.field();
  if (!F.odd()) throw std::invalid_argument("count_solutions: odd q only");
  WeilInstance inst;
  inst.m = 2;
  inst.k = std::gcd<std::uint64_t>(2, F.q() - 1);
  inst.d = f.is_zero() ? 0 : squarefree_part_degree(f);
  std::uint64_t n = 0;
  for (Fq x = 0; x < F.q(); ++x) {
    switch (F.square_class(f.eval(x))) {
      case SquareClass::kZero:
        n += 1;
        break;
      case SquareClass::kSquare:
        n += 2;
        break;
      case SquareClass::kNonSquare:
        break;
    }
  }
  inst.n_solutions = n;
  return inst;
}

Poly build_bound1_product(const Field& F, Fq tau, Fq mu) {
  if (F.q() % 4 != 1)
    throw std::invalid_argument("build_bound1_product: q = 1 mod 4 only");
  if (tau == 0 || mu == 0)
    throw std::invalid_argument("build_bound1_product: zero parameter");
  auto quartic = [&](Fq param) {
    Fq c = F.neg(F.add(F.from_int(2),
                       F.mul(F.from_int(4), F.inv(F.mul(param, param)))));
    return Poly(F, {1, 0, c, 0, 1});  // w^4 + c w^2 + 1
  };
  return quartic(tau) * quartic(mu);
}

std::pair<Fq, Fq> parametrize_conic(const Field& F, Fq sigma0, Fq tau0,
                                    Fq zeta) {
  Fq minus_one = F.neg(F.one());
  if (F.add(F.mul(sigma0, sigma0), F.mul(tau0, tau0)) != minus_one)
    throw std::invalid_argument("parametrize_conic: base point off conic");
  Fq z2 = F.mul(zeta, zeta);
  Fq denom = F.add(z2, F.one());
  if (denom == 0)
    throw std::invalid_argument("parametrize_conic: zeta^2 + 1 = 0");
  Fq di = F.inv(denom);
  Fq tau = F.mul(
      F.add(F.sub(F.neg(tau0), F.mul(F.from_int(2), F.mul(sigma0, zeta))),
            F.mul(tau0, z2)),
      di);
  Fq sigma = F.mul(
      F.sub(F.sub(sigma0, F.mul(F.from_int(2), F.mul(tau0, zeta))),
            F.mul(sigma0, z2)),
      di);
  return {sigma, tau};
}

Poly build_theta(const Field& F, Fq alpha, Fq omega, Fq sigma0, Fq tau0) {
  if (F.q() % 4 != 3)
    throw std::invalid_argument("build_theta: q = 3 mod 4 only");
  if (omega == 0 || omega == 1 || omega == F.neg(F.one()))
    throw std::invalid_argument("build_theta: omega != 0, +-1");
  Fq minus_one = F.neg(F.one());
  if (F.add(F.mul(sigma0, sigma0), F.mul(tau0, tau0)) != minus_one)
    throw std::invalid_argument("build_theta: base point off conic");
  // P = sigma0 - 2 tau0 z - sigma0 z^2, Q = tau0 + 2 sigma0 z - tau0 z^2,
  // R = 1 + z^2
  Poly P(F, {sigma0, F.neg(F.mul(F.from_int(2), tau0)), F.neg(sigma0)});
  Poly Q(F, {tau0, F.mul(F.from_int(2), sigma0), F.neg(tau0)});
  Poly R(F, {1, 0, 1});
  Fq w2 = F.mul(omega, omega);
  Fq w2i = F.inv(w2);
  Fq wsum = F.sub(F.add(w2, w2i), F.from_int(2));
  if (alpha == 0) {
    // theta_{0,lambda} = (l^2 + l^-2 - 2) Q^2 - 4 R^2
    return (Q * Q).scaled(wsum) - (R * R).scaled(F.from_int(4));
  }
  Fq a2 = F.mul(alpha, alpha);
  Fq a4 = F.mul(a2, a2);
  Fq c1 = F.neg(F.mul(F.mul(F.from_int(4), alpha),
                      F.mul(F.sub(a2, F.one()), wsum)));
  Fq c2 = F.mul(F.add(F.sub(a4, F.mul(F.from_int(6), a2)), F.one()), wsum);
  Fq c3 = F.mul(F.from_int(4),
                F.add(F.add(a4, F.mul(a2, F.add(w2, w2i))), F.one()));
  return (P * Q).scaled(c1) + (Q * Q).scaled(c2) - (R * R).scaled(c3);
}

WeilAudit audit_weil_bound(const Poly& f) {
  WeilAudit audit;
  if (poly_sqrt(f).has_value()) {
    audit.hypothesis_ok = false;
    return audit;
  }
  WeilInstance inst = count_solutions(f);
  audit.n_solutions = inst.n_solutions;
  audit.k = inst.k;
  audit.d = inst.d;
  std::uint64_t q = f.field().q();
  std::uint64_t diff = inst.n_solutions > q ? inst.n_solutions - q
                                            : q - inst.n_solutions;
  // integer-exact |N-q| <= (k-1)(d-1) sqrt(q)
  std::uint64_t rhs =
      inst.k >= 1 && inst.d >= 1 ? (inst.k - 1) * (inst.d - 1) : 0;
  audit.holds = diff * diff <= rhs * rhs * q;
  return audit;
}

std::pair<Fq, Fq> conic_base_point(const Field& F) {
  Fq minus_one = F.neg(F.one());
  for (Fq s = 0; s < F.q(); ++s) {
    Fq rest = F.sub(minus_one, F.mul(s, s));
    if (F.square_class(rest) != SquareClass::kNonSquare)
      return {s, F.sqrt(rest)};
  }
  throw std::logic_error("conic_base_point: empty conic");
}

LemmaReport verify_weil_samples(const Field& F, int samples,
                                std::uint64_t seed) {
  auto start = std::chrono::steady_clock::now();
  LemmaReport rep;
  rep.q = F.q();
  rep.details["seed"] = seed;
  rep.details["samples"] = samples;
  if (!F.odd()) {
    rep.lemma = "weil";
    rep.status = LemmaReport::Status::kError;
    rep.witnesses.push_back("odd q required");
    return rep;
  }
  bool bound1 = F.q() % 4 == 1;
  rep.lemma = bound1 ? "weil_bound1" : "weil_bound2";
  std::mt19937_64 rng(seed);
  auto draw = [&] { return static_cast<Fq>(rng() % F.q()); };
  Fq minus_one = F.neg(F.one());
  if (bound1) {
    int tau_classes = 0;
    for (Fq tau = 1; tau < F.q(); ++tau)
      if (F.mul(tau, tau) != minus_one) ++tau_classes;
    // pairs need two distinct {tau, -tau} classes
    if (tau_classes < 4) {
      rep.status = LemmaReport::Status::kOutOfStatedRange;
      rep.details["note"] = "no valid (tau, mu) pair exists at this q";
      return rep;
    }
  }
  auto [sigma0, tau0] = conic_base_point(F);
  int done = 0;
  for (int i = 0; i < samples; ++i) {
    std::optional<Poly> f;
    for (int tries = 0; tries < 10000 && !f; ++tries) {
      if (bound1) {
        Fq tau = draw(), mu = draw();
        // tau^2 = -1 makes gamma = 2 and f_gamma = (w^2+1)^2; mu = +-tau
        // makes the product f_gamma^2
        if (tau == 0 || mu == 0) continue;
        if (mu == tau || mu == F.neg(tau)) continue;
        if (F.mul(tau, tau) == minus_one || F.mul(mu, mu) == minus_one)
          continue;
        f = build_bound1_product(F, tau, mu);
      } else {
        Fq alpha = draw(), omega = draw();
        if (omega == 0 || omega == 1 || omega == minus_one) continue;
        Poly theta = build_theta(F, alpha, omega, sigma0, tau0);
        if (theta.is_zero() || squarefree_part_degree(theta) < 2) continue;
        if (poly_sqrt(theta).has_value()) continue;
        f = std::move(theta);
      }
    }
    if (!f) {
      rep.witnesses.push_back("sample " + std::to_string(i) +
                              ": no valid parameters found");
      continue;
    }
    WeilAudit audit = audit_weil_bound(*f);
    std::uint64_t q = F.q();
    std::uint64_t diff =
        audit.n_solutions > q ? audit.n_solutions - q : q - audit.n_solutions;
    if (!audit.hypothesis_ok || !audit.holds || diff * diff > 49 * q) {
      rep.witnesses.push_back(
          "sample " + std::to_string(i) + ": N=" +
          std::to_string(audit.n_solutions) + " d=" + std::to_string(audit.d) +
          (audit.hypothesis_ok ? " bound violated" : " hypothesis refused"));
      continue;
    }
    ++done;
  }
  rep.details["passed_samples"] = done;
  rep.status = done == samples ? LemmaReport::Status::kVerified
                               : LemmaReport::Status::kFailed;
  rep.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start)
                   .count();
  return rep;
}

}  // namespace civ
