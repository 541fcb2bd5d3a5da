// Copyright 2026 The SIA Authors.
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

#ifndef SIA_RATIONAL_HPP_
#define SIA_RATIONAL_HPP_

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace sia {

// Exact rational number in canonical form (gcd(num, den) == 1, den > 0).
//
// Values whose numerator and denominator fit in int64 are kept inline and
// combined with 128-bit intermediates; anything larger is promoted to a GMP
// rational and demoted again once it fits.
class Rational {
 public:
  Rational() = default;
  Rational(int64_t value) : num_(value) {}  // NOLINT(runtime/explicit)
  Rational(int64_t num, int64_t den);
  explicit Rational(const mpq_class& value);

  Rational(const Rational& other);
  Rational(Rational&&) noexcept = default;
  Rational& operator=(const Rational& other);
  Rational& operator=(Rational&&) noexcept = default;
  ~Rational() = default;

  // Accepts "p", "p/q" and finite decimals such as "-1.25". Returns nullopt on
  // malformed text or a zero denominator.
  static std::optional<Rational> Parse(std::string_view text);

  int sign() const;
  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_integer() const;
  bool is_small() const { return !big_; }

  Rational floor() const;
  Rational ceil() const;
  Rational abs() const { return sign() < 0 ? -*this : *this; }

  // Only meaningful when is_integer() and the value fits in int64.
  std::optional<int64_t> to_int64() const;
  double to_double() const;
  mpq_class to_mpq() const;

  // "p" for integers, "p/q" otherwise.
  std::string to_string() const;
  // Always "p/q", including "27/1".
  std::string to_fraction_string() const;
  // Exact decimal expansion, or nullopt when the denominator has a prime
  // factor other than 2 and 5.
  std::optional<std::string> to_exact_decimal() const;
  // Decimal rounded half away from zero to a fixed number of places.
  std::string to_fixed(int places) const;

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);

  friend bool operator==(const Rational& a, const Rational& b);
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b);

 private:
  void SetFromMpq(const mpq_class& value);

  int64_t num_ = 0;
  int64_t den_ = 1;
  std::unique_ptr<mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Rational& value);

}  // namespace sia

#endif  // SIA_RATIONAL_HPP_
