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

#include "wtgc/semiring.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <ostream>
#include <sstream>

#include "wtgc/error.hpp"

namespace wtgc {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool all_digits(std::string_view s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

void require_same(const Weight& a, const Weight& b) {
  if (!(a.semiring() == b.semiring())) {
    throw SemiringError("semiring descriptor mismatch: " + a.semiring().name() + " vs " +
                        b.semiring().name());
  }
}

}  // namespace

Semiring Semiring::zmod(std::uint64_t modulus) {
  if (modulus < 2) throw SemiringError("zmod modulus must be at least 2");
  return Semiring(Kind::zmod, modulus);
}

Semiring Semiring::parse(std::string_view text) {
  text = trim(text);
  if (text == "boolean") return boolean();
  if (text == "nat") return natural();
  if (text == "tropical") return tropical();
  if (text == "arctic") return arctic();
  if (text.substr(0, 4) == "zmod") {
    auto rest = trim(text.substr(4));
    if (all_digits(rest)) return zmod(std::stoull(std::string(rest)));
  }
  throw SemiringError("unknown semiring '" + std::string(text) + "'");
}

std::string Semiring::name() const {
  switch (kind_) {
    case Kind::boolean: return "boolean";
    case Kind::natural: return "nat";
    case Kind::tropical: return "tropical";
    case Kind::arctic: return "arctic";
    case Kind::zmod: return "zmod " + std::to_string(modulus_);
  }
  return "?";
}

Weight Semiring::zero() const {
  switch (kind_) {
    case Kind::tropical:
    case Kind::arctic: return Weight(*this, 0, true);
    default: return Weight(*this, 0, false);
  }
}

Weight Semiring::one() const {
  switch (kind_) {
    case Kind::tropical:
    case Kind::arctic: return Weight(*this, 0, false);
    default: return Weight(*this, 1, false);
  }
}

Weight Semiring::element(const BigInt& value) const {
  if (value < 0) throw SemiringError("negative value outside the carrier of " + name());
  if (kind_ == Kind::boolean && value > 1) throw SemiringError("boolean values are 0 or 1");
  if (kind_ == Kind::zmod && value >= modulus_) {
    throw SemiringError("value outside the carrier of " + name());
  }
  return Weight(*this, value, false);
}

Weight Semiring::infinity() const {
  if (kind_ != Kind::tropical && kind_ != Kind::arctic) {
    throw SemiringError(name() + " has no infinity");
  }
  return Weight(*this, 0, true);
}

Weight Semiring::parse_element(std::string_view literal) const {
  literal = trim(literal);
  if (kind_ == Kind::tropical && literal == "inf") return infinity();
  if (kind_ == Kind::arctic && literal == "-inf") return infinity();
  if (!all_digits(literal)) {
    throw SemiringError("'" + std::string(literal) + "' is not an element literal of " + name());
  }
  return element(BigInt(std::string(literal)));
}

bool Semiring::zero_sum_free() const noexcept { return kind_ != Kind::zmod; }

bool Semiring::zero_divisor_free() const noexcept {
  if (kind_ != Kind::zmod) return true;
  for (std::uint64_t d = 2; d * d <= modulus_; ++d) {
    if (modulus_ % d == 0) return false;
  }
  return true;
}

bool Semiring::finite() const noexcept { return kind_ == Kind::boolean || kind_ == Kind::zmod; }

std::vector<Weight> Semiring::elements() const {
  if (!finite()) throw SemiringError(name() + " has an infinite carrier");
  std::vector<Weight> out;
  const std::uint64_t n = kind_ == Kind::boolean ? 2 : modulus_;
  out.reserve(n);
  for (std::uint64_t v = 0; v < n; ++v) out.push_back(Weight(*this, v, false));
  return out;
}

std::vector<Weight> Semiring::sample(std::mt19937_64& rng, std::size_t count) const {
  if (finite()) {
    auto all = elements();
    if (all.size() <= count) return all;
  }
  std::vector<Weight> out{zero(), one()};
  std::uniform_int_distribution<std::uint64_t> small(0, 20);
  std::uniform_int_distribution<std::uint64_t> large(0, std::uint64_t{1} << 62);
  while (out.size() < count) {
    const bool big = !finite() && out.size() % 5 == 4;
    std::uint64_t v = big ? large(rng) : small(rng);
    if (kind_ == Kind::boolean) v %= 2;
    if (kind_ == Kind::zmod) v %= modulus_;
    out.push_back(Weight(*this, v, false));
  }
  return out;
}

bool Weight::is_zero() const { return *this == semiring_.zero(); }

bool Weight::is_one() const { return *this == semiring_.one(); }

std::string Weight::to_string() const {
  if (infinite_) return semiring_.kind() == Semiring::Kind::arctic ? "-inf" : "inf";
  return value_.str();
}

Weight operator+(const Weight& a, const Weight& b) {
  require_same(a, b);
  const Semiring& s = a.semiring_;
  switch (s.kind()) {
    case Semiring::Kind::boolean: return Weight(s, (a.value_ != 0 || b.value_ != 0) ? 1 : 0, false);
    case Semiring::Kind::natural: return Weight(s, a.value_ + b.value_, false);
    case Semiring::Kind::tropical:
      if (a.infinite_) return b;
      if (b.infinite_) return a;
      return Weight(s, std::min(a.value_, b.value_), false);
    case Semiring::Kind::arctic:
      if (a.infinite_) return b;
      if (b.infinite_) return a;
      return Weight(s, std::max(a.value_, b.value_), false);
    case Semiring::Kind::zmod: return Weight(s, (a.value_ + b.value_) % s.modulus(), false);
  }
  return a;
}

Weight operator*(const Weight& a, const Weight& b) {
  require_same(a, b);
  const Semiring& s = a.semiring_;
  switch (s.kind()) {
    case Semiring::Kind::boolean: return Weight(s, (a.value_ != 0 && b.value_ != 0) ? 1 : 0, false);
    case Semiring::Kind::natural: return Weight(s, a.value_ * b.value_, false);
    case Semiring::Kind::tropical:
    case Semiring::Kind::arctic:
      if (a.infinite_ || b.infinite_) return s.zero();
      return Weight(s, a.value_ + b.value_, false);
    case Semiring::Kind::zmod: return Weight(s, (a.value_ * b.value_) % s.modulus(), false);
  }
  return a;
}

Weight Weight::pow(std::uint64_t exponent) const {
  Weight result = semiring_.one();
  Weight base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

bool operator<(const Weight& a, const Weight& b) {
  if (a.semiring_.kind() != b.semiring_.kind()) return a.semiring_.kind() < b.semiring_.kind();
  if (a.semiring_.modulus() != b.semiring_.modulus()) {
    return a.semiring_.modulus() < b.semiring_.modulus();
  }
  if (a.infinite_ != b.infinite_) return b.infinite_;
  return a.value_ < b.value_;
}

std::ostream& operator<<(std::ostream& os, const Weight& w) { return os << w.to_string(); }

Weight sum(const Weight& a, const Weight& b) { return a + b; }

Weight product(const Weight& a, const Weight& b) { return a * b; }

PowerProfile power_profile(const Weight& a) {
  // Power sequences of the shipped carriers repeat within the carrier size
  // (finite case) or immediately (0 and 1 of the infinite carriers).
  constexpr std::uint64_t kProbe = 64;
  const Semiring& s = a.semiring();
  const std::uint64_t limit = s.finite() ? (s.kind() == Semiring::Kind::boolean ? 2 : s.modulus()) + 1 : kProbe;
  std::map<Weight, std::uint64_t> seen;
  Weight power = s.one();
  for (std::uint64_t j = 0; j <= limit; ++j) {
    auto [it, inserted] = seen.emplace(power, j);
    if (!inserted) return PowerProfile{it->second, j - it->second};
    power = power * a;
  }
  if (s.zero_divisor_free()) return PowerProfile{0, 1};
  throw SemiringError("power sequence of " + a.to_string() + " is not eventually periodic");
}

SemiringHom support_hom(const Semiring& source) {
  if (!source.zero_sum_free()) throw SemiringError(source.name() + " is not zero-sum free");
  if (!source.zero_divisor_free()) throw SemiringError(source.name() + " is not zero-divisor free");
  const Semiring target = Semiring::boolean();
  return SemiringHom{source, target, [target](const Weight& w) {
                       return w.is_zero() ? target.zero() : target.one();
                     }};
}

SemiringHom identity_hom(const Semiring& semiring) {
  return SemiringHom{semiring, semiring, [](const Weight& w) { return w; }};
}

SemiringHom modular_hom(std::uint64_t modulus) {
  const Semiring target = Semiring::zmod(modulus);
  return SemiringHom{Semiring::natural(), target, [target](const Weight& w) {
                       return target.element(w.value() % target.modulus());
                     }};
}

std::string check_hom(const SemiringHom& h, const std::vector<Weight>& samples) {
  std::ostringstream out;
  if (!(h(h.source.zero()) == h.target.zero())) return "h(0) is not the target zero";
  if (!(h(h.source.one()) == h.target.one())) return "h(1) is not the target one";
  for (const auto& a : samples) {
    for (const auto& b : samples) {
      if (!(h(a + b) == h(a) + h(b))) {
        out << "h(" << a << " + " << b << ") differs from h(" << a << ") + h(" << b << ")";
        return out.str();
      }
      if (!(h(a * b) == h(a) * h(b))) {
        out << "h(" << a << " * " << b << ") differs from h(" << a << ") * h(" << b << ")";
        return out.str();
      }
    }
  }
  return {};
}

}  // namespace wtgc
