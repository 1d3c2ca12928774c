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

#include "civ/field.hpp"

#include <algorithm>
#include <stdexcept>

namespace civ {

namespace {

using Polynomial = std::vector<std::uint32_t>;  // over GF(p), low degree first

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

int poly_deg(const Polynomial& a) {
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
    if (a[i] != 0) return i;
  return -1;
}

std::uint32_t mod_inv(std::uint32_t a, std::uint32_t p) {
  // p prime, a != 0
  std::uint32_t r = 1, b = a, e = p - 2;
  while (e) {
    if (e & 1) r = static_cast<std::uint64_t>(r) * b % p;
    b = static_cast<std::uint64_t>(b) * b % p;
    e >>= 1;
  }
  return r;
}

// a mod m, in place; m monic not required (leading coeff inverted)
void poly_mod(Polynomial& a, const Polynomial& m, std::uint32_t p) {
  int dm = poly_deg(m);
  std::uint32_t lead_inv = mod_inv(m[dm], p);
  for (int da = poly_deg(a); da >= dm; da = poly_deg(a)) {
    std::uint64_t c = static_cast<std::uint64_t>(a[da]) * lead_inv % p;
    for (int i = 0; i <= dm; ++i) {
      std::uint64_t v = a[da - dm + i] + p - c * m[i] % p;
      a[da - dm + i] = static_cast<std::uint32_t>(v % p);
    }
  }
}

Polynomial poly_mulmod(const Polynomial& a, const Polynomial& b,
                       const Polynomial& m, std::uint32_t p) {
  Polynomial r(a.size() + b.size(), 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      r[i + j] = static_cast<std::uint32_t>(
          (r[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
    }
  }
  poly_mod(r, m, p);
  r.resize(std::max<size_t>(1, m.size() - 1), 0);
  return r;
}

Polynomial poly_powmod(Polynomial a, std::uint64_t e, const Polynomial& m,
                       std::uint32_t p) {
  Polynomial r{1};
  r.resize(std::max<size_t>(1, m.size() - 1), 0);
  while (e) {
    if (e & 1) r = poly_mulmod(r, a, m, p);
    a = poly_mulmod(a, a, m, p);
    e >>= 1;
  }
  return r;
}

Polynomial poly_gcd_gfp(Polynomial a, Polynomial b, std::uint32_t p) {
  while (poly_deg(b) >= 0) {
    poly_mod(a, b, p);
    std::swap(a, b);
  }
  return a;
}

// Irreducibility over GF(p): m has no factor of degree <= deg(m)/2
// iff gcd(x^(p^i) - x, m) is constant for i = 1..deg(m)/2.
bool is_irreducible(const Polynomial& m, std::uint32_t p) {
  int f = poly_deg(m);
  if (f == 1) return true;
  Polynomial x{0, 1};
  Polynomial xp = x;
  for (int i = 1; i <= f / 2; ++i) {
    xp = poly_powmod(xp, p, m, p);
    Polynomial diff = xp;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = (diff[1] + p - 1) % p;
    Polynomial g = poly_gcd_gfp(m, diff, p);
    if (poly_deg(g) > 0) return false;
  }
  return true;
}

std::vector<std::uint32_t> prime_factors(std::uint32_t n) {
  std::vector<std::uint32_t> fs;
  for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= n; ++d) {
    if (n % d == 0) {
      fs.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) fs.push_back(n);
  return fs;
}

}  // namespace

Field::Field(std::uint32_t p, std::uint32_t f, std::uint32_t max_size)
    : p_(p), f_(f) {
  if (!is_prime(p)) throw std::invalid_argument("Field: p must be prime");
  if (f < 1) throw std::invalid_argument("Field: f must be >= 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < f; ++i) {
    q *= p;
    if (q > max_size) throw std::invalid_argument("Field: size limit exceeded");
  }
  q_ = static_cast<std::uint32_t>(q);

  if (f == 1) {
    modulus_ = {0, 1};  // x
  } else {
    // least monic irreducible of degree f in coefficient encoding order
    for (std::uint32_t low = 0;; ++low) {
      if (low >= q_) throw std::logic_error("Field: no irreducible found");
      Polynomial m(f + 1, 0);
      std::uint32_t v = low;
      for (std::uint32_t i = 0; i < f; ++i) {
        m[i] = v % p;
        v /= p;
      }
      m[f] = 1;
      if (is_irreducible(m, p)) {
        modulus_ = m;
        break;
      }
    }
  }
  if (q_ <= (1u << 16)) build_tables();
  if (!tabled_) {
    // primitive element for large fields, found the same way
    std::vector<std::uint32_t> fac = prime_factors(q_ - 1);
    for (Fq g = 2; g < q_; ++g) {
      bool prim = true;
      for (std::uint32_t ell : fac)
        if (pow(g, (q_ - 1) / ell) == 1) {
          prim = false;
          break;
        }
      if (prim) {
        gen_ = g;
        break;
      }
    }
  }
}

std::vector<std::uint32_t> Field::coeffs(Fq a) const {
  std::vector<std::uint32_t> c(f_);
  for (std::uint32_t i = 0; i < f_; ++i) {
    c[i] = a % p_;
    a /= p_;
  }
  return c;
}

Fq Field::from_coeffs(const std::vector<std::uint32_t>& c) const {
  Fq a = 0;
  for (size_t i = c.size(); i-- > 0;) a = a * p_ + c[i] % p_;
  return a;
}

Fq Field::from_int(std::int64_t n) const {
  std::int64_t r = n % p_;
  if (r < 0) r += p_;
  return static_cast<Fq>(r);
}

Fq Field::add(Fq a, Fq b) const {
  if (f_ == 1) return (a + b) % p_;
  Fq r = 0, mult = 1;
  for (std::uint32_t i = 0; i < f_; ++i) {
    r += (a % p_ + b % p_) % p_ * mult;
    a /= p_;
    b /= p_;
    mult *= p_;
  }
  return r;
}

Fq Field::neg(Fq a) const {
  if (p_ == 2) return a;
  if (f_ == 1) return a == 0 ? 0 : p_ - a;
  Fq r = 0, mult = 1;
  for (std::uint32_t i = 0; i < f_; ++i) {
    std::uint32_t c = a % p_;
    r += (c == 0 ? 0 : p_ - c) * mult;
    a /= p_;
    mult *= p_;
  }
  return r;
}

Fq Field::sub(Fq a, Fq b) const { return add(a, neg(b)); }

Fq Field::poly_mul(Fq a, Fq b) const {
  Polynomial ca(f_), cb(f_);
  for (std::uint32_t i = 0; i < f_; ++i) {
    ca[i] = a % p_;
    a /= p_;
    cb[i] = b % p_;
    b /= p_;
  }
  Polynomial r = poly_mulmod(ca, cb, modulus_, p_);
  Fq out = 0;
  for (size_t i = r.size(); i-- > 0;) out = out * p_ + r[i];
  return out;
}

Fq Field::mul(Fq a, Fq b) const {
  if (a == 0 || b == 0) return 0;
  if (tabled_) return exp_[log_[a] + log_[b]];
  if (f_ == 1) return static_cast<std::uint64_t>(a) * b % p_;
  return poly_mul(a, b);
}

Fq Field::inv(Fq a) const {
  if (a == 0) throw std::domain_error("Field::inv: division by zero");
  if (tabled_) return exp_[(q_ - 1) - log_[a]];
  return pow(a, q_ - 2);
}

Fq Field::pow(Fq a, std::uint64_t e) const {
  Fq r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

SquareClass Field::square_class(Fq a) const {
  if (!odd())
    throw std::domain_error(
        "Field::square_class: every element of a characteristic-2 field "
        "is a square");
  if (a == 0) return SquareClass::kZero;
  if (tabled_)
    return (log_[a] & 1) ? SquareClass::kNonSquare : SquareClass::kSquare;
  return pow(a, (q_ - 1) / 2) == 1 ? SquareClass::kSquare
                                   : SquareClass::kNonSquare;
}

Fq Field::sqrt(Fq a) const {
  if (square_class(a) != SquareClass::kSquare)
    throw std::domain_error("Field::sqrt: not a nonzero square");
  Fq r;
  if (q_ % 4 == 3) {
    r = pow(a, (q_ + 1) / 4);
  } else {
    // Tonelli-Shanks in the cyclic group GF(q)*
    std::uint32_t s = q_ - 1, e = 0;
    while (s % 2 == 0) {
      s /= 2;
      ++e;
    }
    Fq n = 2;
    while (square_class(n) != SquareClass::kNonSquare) ++n;
    Fq z = pow(n, s);
    Fq x = pow(a, (s + 1) / 2);
    Fq b = pow(a, s);
    std::uint32_t m = e;
    while (b != 1) {
      Fq t = b;
      std::uint32_t i = 0;
      while (t != 1) {
        t = mul(t, t);
        ++i;
      }
      Fq c = z;
      for (std::uint32_t j = 0; j + i + 1 < m; ++j) c = mul(c, c);
      x = mul(x, c);
      z = mul(c, c);
      b = mul(b, z);
      m = i;
    }
    r = x;
  }
  return std::min(r, neg(r));
}

void Field::build_tables() {
  std::vector<std::uint32_t> fac = prime_factors(q_ - 1);
  for (Fq g = 2; g < q_; ++g) {
    bool prim = true;
    for (std::uint32_t ell : fac) {
      // order check via repeated poly multiplication
      Fq x = 1;
      std::uint64_t e = (q_ - 1) / ell;
      Fq base = g;
      while (e) {
        if (e & 1) x = f_ == 1 ? static_cast<std::uint64_t>(x) * base % p_
                               : poly_mul(x, base);
        base = f_ == 1 ? static_cast<std::uint64_t>(base) * base % p_
                       : poly_mul(base, base);
        e >>= 1;
      }
      if (x == 1) {
        prim = false;
        break;
      }
    }
    if (!prim) continue;
    gen_ = g;
    break;
  }
  log_.assign(q_, 0);
  exp_.assign(2 * (q_ - 1), 0);
  Fq x = 1;
  for (std::uint32_t i = 0; i < q_ - 1; ++i) {
    exp_[i] = x;
    exp_[i + (q_ - 1)] = x;
    log_[x] = i;
    x = f_ == 1 ? static_cast<std::uint64_t>(x) * gen_ % p_
                : poly_mul(x, gen_);
  }
  tabled_ = true;
}

}  // namespace civ
