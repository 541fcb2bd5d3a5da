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

#include "sia/rational.hpp"

#include <cctype>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace sia {
namespace {

using i128 = __int128;
constexpr int64_t kMax = std::numeric_limits<int64_t>::max();

bool Fits(i128 v) { return v >= -static_cast<i128>(kMax) && v <= kMax; }

uint64_t Gcd(uint64_t a, uint64_t b) { return std::gcd(a, b); }

uint64_t AbsU(int64_t v) {
  return v < 0 ? static_cast<uint64_t>(-(v + 1)) + 1 : static_cast<uint64_t>(v);
}

uint64_t AbsMod(i128 v, uint64_t m) {
  i128 r = v % static_cast<i128>(m);
  return static_cast<uint64_t>(r < 0 ? -r : r);
}

// The small-path kernels return false when the canonical result does not fit.
bool AddSmall(int64_t p1, int64_t q1, int64_t p2, int64_t q2, int64_t& rp,
              int64_t& rq) {
  if (q1 == q2) {
    i128 n = static_cast<i128>(p1) + p2;
    if (q1 == 1) {
      if (!Fits(n)) return false;
      rp = static_cast<int64_t>(n);
      rq = 1;
      return true;
    }
    uint64_t g = Gcd(AbsMod(n, q1), q1);
    if (g == 0) g = q1;
    n /= g;
    if (!Fits(n)) return false;
    rp = static_cast<int64_t>(n);
    rq = q1 / static_cast<int64_t>(g);
    if (rp == 0) rq = 1;
    return true;
  }
  uint64_t g = Gcd(q1, q2);
  if (g == 1) {
    i128 n = static_cast<i128>(p1) * q2 + static_cast<i128>(p2) * q1;
    i128 d = static_cast<i128>(q1) * q2;
    if (n == 0) {
      rp = 0;
      rq = 1;
      return true;
    }
    if (!Fits(n) || !Fits(d)) return false;
    rp = static_cast<int64_t>(n);
    rq = static_cast<int64_t>(d);
    return true;
  }
  int64_t gs = static_cast<int64_t>(g);
  i128 t = static_cast<i128>(p1) * (q2 / gs) + static_cast<i128>(p2) * (q1 / gs);
  if (t == 0) {
    rp = 0;
    rq = 1;
    return true;
  }
  uint64_t g2 = Gcd(AbsMod(t, g), g);
  if (g2 == 0) g2 = g;
  i128 n = t / static_cast<i128>(g2);
  i128 d = static_cast<i128>(q1 / gs) * (q2 / static_cast<int64_t>(g2));
  if (!Fits(n) || !Fits(d)) return false;
  rp = static_cast<int64_t>(n);
  rq = static_cast<int64_t>(d);
  return true;
}

bool MulSmall(int64_t p1, int64_t q1, int64_t p2, int64_t q2, int64_t& rp,
              int64_t& rq) {
  if (p1 == 0 || p2 == 0) {
    rp = 0;
    rq = 1;
    return true;
  }
  int64_t g1 = static_cast<int64_t>(Gcd(AbsU(p1), q2));
  int64_t g2 = static_cast<int64_t>(Gcd(AbsU(p2), q1));
  i128 n = static_cast<i128>(p1 / g1) * (p2 / g2);
  i128 d = static_cast<i128>(q1 / g2) * (q2 / g1);
  if (!Fits(n) || !Fits(d)) return false;
  rp = static_cast<int64_t>(n);
  rq = static_cast<int64_t>(d);
  return true;
}

mpq_class MakeMpq(int64_t num, int64_t den) {
  mpq_class q;
  mpz_set_si(q.get_num_mpz_t(), num);
  mpz_set_si(q.get_den_mpz_t(), den);
  return q;
}

bool IsDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational::Rational(int64_t num, int64_t den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  SetFromMpq(MakeMpq(num, den));
}

Rational::Rational(const mpq_class& value) { SetFromMpq(value); }

Rational::Rational(const Rational& other)
    : num_(other.num_),
      den_(other.den_),
      big_(other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr) {}

Rational& Rational::operator=(const Rational& other) {
  if (this == &other) return *this;
  num_ = other.num_;
  den_ = other.den_;
  big_ = other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr;
  return *this;
}

void Rational::SetFromMpq(const mpq_class& value) {
  mpq_class v(value);
  v.canonicalize();
  const mpz_class& n = v.get_num();
  const mpz_class& d = v.get_den();
  if (n.fits_slong_p() && d.fits_slong_p() &&
      n.get_si() != std::numeric_limits<long>::min()) {
    num_ = n.get_si();
    den_ = d.get_si();
    big_.reset();
  } else {
    num_ = 0;
    den_ = 1;
    big_ = std::make_unique<mpq_class>(std::move(v));
  }
}

mpq_class Rational::to_mpq() const {
  return big_ ? *big_ : MakeMpq(num_, den_);
}

std::optional<Rational> Rational::Parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  if (text.empty()) return std::nullopt;
  bool negative = false;
  if (text.front() == '-' || text.front() == '+') {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  mpq_class value;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::string_view num = text.substr(0, slash);
    std::string_view den = text.substr(slash + 1);
    if (!IsDigits(num) || !IsDigits(den)) return std::nullopt;
    mpz_class d{std::string(den), 10};
    if (d == 0) return std::nullopt;
    value = mpq_class(mpz_class(std::string(num), 10), d);
  } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    if (whole.empty() && frac.empty()) return std::nullopt;
    if ((!whole.empty() && !IsDigits(whole)) ||
        (!frac.empty() && !IsDigits(frac)))
      return std::nullopt;
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    std::string digits = std::string(whole) + std::string(frac);
    value = mpq_class(mpz_class(digits, 10), scale);
  } else {
    if (!IsDigits(text)) return std::nullopt;
    value = mpq_class(mpz_class(std::string(text), 10));
  }
  value.canonicalize();
  if (negative) value = -value;
  return Rational(value);
}

int Rational::sign() const {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

bool Rational::is_integer() const {
  return big_ ? big_->get_den() == 1 : den_ == 1;
}

Rational Rational::floor() const {
  if (!big_) {
    if (den_ == 1) return *this;
    int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return Rational(q);
  }
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), big_->get_num_mpz_t(), big_->get_den_mpz_t());
  return Rational(mpq_class(q));
}

Rational Rational::ceil() const {
  if (!big_) {
    if (den_ == 1) return *this;
    int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ > 0) ++q;
    return Rational(q);
  }
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), big_->get_num_mpz_t(), big_->get_den_mpz_t());
  return Rational(mpq_class(q));
}

std::optional<int64_t> Rational::to_int64() const {
  if (big_ || den_ != 1) return std::nullopt;
  return num_;
}

double Rational::to_double() const {
  if (big_) return big_->get_d();
  return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::to_string() const {
  if (big_) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::string Rational::to_fraction_string() const {
  if (big_) {
    return big_->get_num().get_str() + "/" + big_->get_den().get_str();
  }
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::optional<std::string> Rational::to_exact_decimal() const {
  mpq_class v = to_mpq();
  mpz_class den = v.get_den();
  unsigned long twos = 0;
  unsigned long fives = 0;
  while (mpz_divisible_ui_p(den.get_mpz_t(), 2)) {
    den /= 2;
    ++twos;
  }
  while (mpz_divisible_ui_p(den.get_mpz_t(), 5)) {
    den /= 5;
    ++fives;
  }
  if (den != 1) return std::nullopt;
  unsigned long places = std::max(twos, fives);
  if (places == 0) return v.get_num().get_str();
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, places);
  mpz_class scaled = v.get_num() * scale / v.get_den();
  bool negative = scaled < 0;
  if (negative) scaled = -scaled;
  std::string digits = scaled.get_str();
  if (digits.size() <= places) digits.insert(0, places - digits.size() + 1, '0');
  std::string out = digits.substr(0, digits.size() - places) + "." +
                    digits.substr(digits.size() - places);
  while (out.back() == '0') out.pop_back();
  if (out.back() == '.') out.pop_back();
  return negative ? "-" + out : out;
}

std::string Rational::to_fixed(int places) const {
  mpq_class v = to_mpq();
  bool negative = sgn(v) < 0;
  if (negative) v = -v;
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(places));
  mpz_class twice = 2 * v.get_num() * scale + v.get_den();
  mpz_class scaled = twice / (2 * v.get_den());
  std::string digits = scaled.get_str();
  if (places > 0) {
    size_t p = static_cast<size_t>(places);
    if (digits.size() <= p) digits.insert(0, p - digits.size() + 1, '0');
    digits.insert(digits.size() - p, ".");
  }
  if (negative && scaled != 0) digits.insert(0, "-");
  return digits;
}

Rational Rational::operator-() const {
  if (big_) return Rational(mpq_class(-*big_));
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rational operator+(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    Rational r;
    if (AddSmall(a.num_, a.den_, b.num_, b.den_, r.num_, r.den_)) return r;
  }
  return Rational(mpq_class(a.to_mpq() + b.to_mpq()));
}

Rational operator-(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    Rational r;
    if (AddSmall(a.num_, a.den_, -b.num_, b.den_, r.num_, r.den_)) return r;
  }
  return Rational(mpq_class(a.to_mpq() - b.to_mpq()));
}

Rational operator*(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    Rational r;
    if (MulSmall(a.num_, a.den_, b.num_, b.den_, r.num_, r.den_)) return r;
  }
  return Rational(mpq_class(a.to_mpq() * b.to_mpq()));
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw std::domain_error("rational division by zero");
  if (!a.big_ && !b.big_) {
    int64_t inv_num = b.num_ < 0 ? -b.den_ : b.den_;
    int64_t inv_den = b.num_ < 0 ? -b.num_ : b.num_;
    Rational r;
    if (MulSmall(a.num_, a.den_, inv_num, inv_den, r.num_, r.den_)) return r;
  }
  return Rational(mpq_class(a.to_mpq() / b.to_mpq()));
}

Rational& Rational::operator+=(const Rational& rhs) {
  return *this = *this + rhs;
}
Rational& Rational::operator-=(const Rational& rhs) {
  return *this = *this - rhs;
}
Rational& Rational::operator*=(const Rational& rhs) {
  return *this = *this * rhs;
}
Rational& Rational::operator/=(const Rational& rhs) {
  return *this = *this / rhs;
}

bool operator==(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;  // canonical forms differ in representation
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.den_ == b.den_) return a.num_ <=> b.num_;
    i128 lhs = static_cast<i128>(a.num_) * b.den_;
    i128 rhs = static_cast<i128>(b.num_) * a.den_;
    return lhs < rhs   ? std::strong_ordering::less
           : lhs > rhs ? std::strong_ordering::greater
                       : std::strong_ordering::equal;
  }
  int c = cmp(a.to_mpq(), b.to_mpq());
  return c < 0   ? std::strong_ordering::less
         : c > 0 ? std::strong_ordering::greater
                 : std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& value) {
  return os << value.to_string();
}

}  // namespace sia
