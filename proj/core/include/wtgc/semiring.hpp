// Copyright 2026 The wtgc Authors.
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

#ifndef WTGC_SEMIRING_HPP
#define WTGC_SEMIRING_HPP

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace wtgc {

using BigInt = boost::multiprecision::cpp_int;

class Weight;

/// Runtime descriptor of one of the shipped commutative semirings.
///
///   boolean   ({0,1}, or, and, 0, 1)
///   natural   (N, +, *, 0, 1), arbitrary precision
///   tropical  (N u {inf}, min, +, inf, 0)
///   arctic    (N u {-inf}, max, +, -inf, 0)
///   zmod m    (Z/mZ, +, *, 0, 1)
class Semiring {
 public:
  enum class Kind : std::uint8_t { boolean, natural, tropical, arctic, zmod };

  static Semiring boolean() { return Semiring(Kind::boolean, 0); }
  static Semiring natural() { return Semiring(Kind::natural, 0); }
  static Semiring tropical() { return Semiring(Kind::tropical, 0); }
  static Semiring arctic() { return Semiring(Kind::arctic, 0); }
  static Semiring zmod(std::uint64_t modulus);

  /// Parses `boolean`, `nat`, `tropical`, `arctic` or `zmod <m>`.
  static Semiring parse(std::string_view text);

  Kind kind() const noexcept { return kind_; }
  std::uint64_t modulus() const noexcept { return modulus_; }
  std::string name() const;

  Weight zero() const;
  Weight one() const;
  /// The carrier element denoted by a nonnegative integer.  Throws
  /// SemiringError when the integer is outside the carrier.
  Weight element(const BigInt& value) const;
  Weight infinity() const;

  /// Element literal syntax: `0|1`, decimal integers, `inf`, `-inf`.
  Weight parse_element(std::string_view literal) const;

  bool zero_sum_free() const noexcept;
  bool zero_divisor_free() const noexcept;
  bool finite() const noexcept;

  /// All carrier elements in increasing order; finite carriers only.
  std::vector<Weight> elements() const;

  /// Carrier elements for randomized property checks.  Always includes
  /// zero and one.
  std::vector<Weight> sample(std::mt19937_64& rng, std::size_t count) const;

  friend bool operator==(const Semiring&, const Semiring&) = default;

 private:
  Semiring(Kind kind, std::uint64_t modulus) : kind_(kind), modulus_(modulus) {}

  Kind kind_;
  std::uint64_t modulus_;
};

/// An element of a shipped semiring.  The descriptor travels with the
/// value so that mixing carriers is detected.
class Weight {
 public:
  const Semiring& semiring() const noexcept { return semiring_; }
  bool is_zero() const;
  bool is_one() const;
  /// True for the tropical/arctic infinity.
  bool is_infinite() const noexcept { return infinite_; }
  const BigInt& value() const noexcept { return value_; }

  std::string to_string() const;

  friend Weight operator+(const Weight& a, const Weight& b);
  friend Weight operator*(const Weight& a, const Weight& b);
  Weight& operator+=(const Weight& other) { return *this = *this + other; }
  Weight& operator*=(const Weight& other) { return *this = *this * other; }

  /// a^n with a^0 = 1.
  Weight pow(std::uint64_t exponent) const;

  friend bool operator==(const Weight&, const Weight&) = default;
  /// Total order used for canonical output and container keys; not an
  /// order of the semiring.
  friend bool operator<(const Weight& a, const Weight& b);

 private:
  friend class Semiring;
  Weight(Semiring semiring, BigInt value, bool infinite)
      : semiring_(semiring), value_(std::move(value)), infinite_(infinite) {}

  Semiring semiring_;
  BigInt value_;
  bool infinite_ = false;
};

std::ostream& operator<<(std::ostream& os, const Weight& w);

Weight sum(const Weight& a, const Weight& b);
Weight product(const Weight& a, const Weight& b);

struct PowerProfile {
  std::uint64_t preperiod = 0;
  std::uint64_t period = 1;

  friend bool operator==(const PowerProfile&, const PowerProfile&) = default;
};

/// Smallest (k, p) with a^(j+p) = a^j for all j >= k.  Elements of
/// infinite multiplicative order in a zero-divisor-free semiring get the
/// declared cap (0, 1).
PowerProfile power_profile(const Weight& a);

/// A semiring homomorphism between two shipped semirings.
struct SemiringHom {
  Semiring source;
  Semiring target;
  std::function<Weight(const Weight&)> map;

  Weight operator()(const Weight& w) const { return map(w); }
};

/// s -> (s != 0) into the Boolean semiring.  Requires a zero-sum-free and
/// zero-divisor-free source.
SemiringHom support_hom(const Semiring& source);

/// The identity on a semiring.
SemiringHom identity_hom(const Semiring& semiring);

/// n -> n mod m from the natural numbers into Z/mZ.
SemiringHom modular_hom(std::uint64_t modulus);

/// Checks the homomorphism laws on the given source samples (all pairs).
/// Returns an empty string on success, otherwise a description of the
/// first violation.
std::string check_hom(const SemiringHom& h, const std::vector<Weight>& samples);

}  // namespace wtgc

#endif  // WTGC_SEMIRING_HPP
