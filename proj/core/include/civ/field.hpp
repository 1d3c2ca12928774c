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
#include <vector>

namespace civ {

/// Element of GF(p^f), identified by its canonical integer encoding
/// enc(a) = sum coeffs[i] * p^i, so enc(0) = 0 and enc(1) = 1.
using Fq = std::uint32_t;

enum class SquareClass { kZero, kSquare, kNonSquare };

/// Exact arithmetic in GF(p^f).
///
/// The modulus is the lexicographically least monic irreducible of degree f
/// under the coefficient-tuple integer encoding, so construction is
/// deterministic across runs. Immutable after construction; all operations
/// are pure and safe for concurrent reads.
class Field {
 public:
  static constexpr std::uint32_t kDefaultMaxSize = 1u << 20;

  Field(std::uint32_t p, std::uint32_t f,
        std::uint32_t max_size = kDefaultMaxSize);

  std::uint32_t p() const { return p_; }
  std::uint32_t f() const { return f_; }
  std::uint32_t q() const { return q_; }
  bool odd() const { return p_ != 2; }

  /// Monic modulus polynomial, f+1 coefficients over GF(p), low degree first.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  Fq zero() const { return 0; }
  Fq one() const { return 1; }
  /// Embeds an integer through the prime subfield.
  Fq from_int(std::int64_t n) const;

  Fq add(Fq a, Fq b) const;
  Fq sub(Fq a, Fq b) const;
  Fq neg(Fq a) const;
  Fq mul(Fq a, Fq b) const;
  Fq inv(Fq a) const;  // throws std::domain_error on 0
  Fq div(Fq a, Fq b) const { return mul(a, inv(b)); }
  Fq pow(Fq a, std::uint64_t e) const;

  /// Frobenius a -> a^p.
  Fq frobenius(Fq a) const { return pow(a, p_); }

  /// Euler-criterion classification. Odd q only; every element of a
  /// characteristic-2 field is a square, so calling this there is a misuse.
  SquareClass square_class(Fq a) const;

  /// Square root of a nonzero square, odd q. Of the two roots {r, -r},
  /// returns the one with the smaller encoding.
  Fq sqrt(Fq a) const;

  /// Least primitive element of GF(q)* in encoding order.
  Fq generator() const { return gen_; }

  std::vector<std::uint32_t> coeffs(Fq a) const;
  Fq from_coeffs(const std::vector<std::uint32_t>& c) const;

 private:
  std::uint32_t p_, f_, q_;
  std::vector<std::uint32_t> modulus_;  // degree f, monic
  bool tabled_ = false;
  Fq gen_ = 0;
  std::vector<std::uint32_t> log_;  // log_[a] for a != 0
  std::vector<Fq> exp_;             // exp_[i] = g^i, i in [0, 2(q-1))

  Fq poly_mul(Fq a, Fq b) const;  // schoolbook fallback, any q
  void build_tables();
};

}  // namespace civ
