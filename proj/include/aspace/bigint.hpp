#pragma once

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace aspace {

/// Arbitrary-precision signed integer: sign-magnitude over 32-bit limbs.
/// Covers what exact integer linear algebra needs — ring operations,
/// truncated division, comparisons, gcd and decimal printing. Not tuned for
/// speed; pivot entries in small Smith reductions stay tiny.
class BigInt {
public:
  BigInt() = default;

  BigInt(long long v) {  // NOLINT: implicit by design
    if (v == 0) return;
    sign_ = v < 0 ? -1 : 1;
    unsigned long long mag =
        v < 0 ? ~static_cast<unsigned long long>(v) + 1ull : static_cast<unsigned long long>(v);
    while (mag) {
      limbs_.push_back(static_cast<std::uint32_t>(mag & 0xffffffffull));
      mag >>= 32;
    }
  }

  BigInt(int v) : BigInt(static_cast<long long>(v)) {}

  bool is_zero() const { return sign_ == 0; }
  int sign() const { return sign_; }

  BigInt operator-() const {
    BigInt r = *this;
    r.sign_ = -r.sign_;
    return r;
  }

  BigInt abs() const {
    BigInt r = *this;
    if (r.sign_ < 0) r.sign_ = 1;
    return r;
  }

  friend BigInt operator+(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0) return b;
    if (b.sign_ == 0) return a;
    BigInt r;
    if (a.sign_ == b.sign_) {
      r.limbs_ = add_mag(a.limbs_, b.limbs_);
      r.sign_ = a.sign_;
      return r;
    }
    int c = cmp_mag(a.limbs_, b.limbs_);
    if (c == 0) return BigInt();
    if (c > 0) {
      r.limbs_ = sub_mag(a.limbs_, b.limbs_);
      r.sign_ = a.sign_;
    } else {
      r.limbs_ = sub_mag(b.limbs_, a.limbs_);
      r.sign_ = b.sign_;
    }
    return r;
  }

  friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

  friend BigInt operator*(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0 || b.sign_ == 0) return BigInt();
    BigInt r;
    r.limbs_ = mul_mag(a.limbs_, b.limbs_);
    r.sign_ = a.sign_ * b.sign_;
    return r;
  }

  /// Truncated quotient, like built-in integer division.
  friend BigInt operator/(const BigInt& a, const BigInt& b) { return divmod(a, b).first; }

  /// Remainder with the dividend's sign, |r| < |b|.
  friend BigInt operator%(const BigInt& a, const BigInt& b) { return divmod(a, b).second; }

  static std::pair<BigInt, BigInt> divmod(const BigInt& a, const BigInt& b) {
    if (b.sign_ == 0) throw domain_error("division by zero");
    if (a.sign_ == 0) return {BigInt(), BigInt()};
    if (cmp_mag(a.limbs_, b.limbs_) < 0) return {BigInt(), a};
    auto [qm, rm] = divmod_mag(a.limbs_, b.limbs_);
    BigInt q, r;
    q.limbs_ = std::move(qm);
    q.normalize();
    if (!q.limbs_.empty()) q.sign_ = a.sign_ * b.sign_;
    r.limbs_ = std::move(rm);
    r.normalize();
    if (!r.limbs_.empty()) r.sign_ = a.sign_;
    return {q, r};
  }

  BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
  BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
  BigInt& operator*=(const BigInt& o) { return *this = *this * o; }
  BigInt& operator/=(const BigInt& o) { return *this = *this / o; }
  BigInt& operator%=(const BigInt& o) { return *this = *this % o; }

  friend bool operator==(const BigInt& a, const BigInt& b) {
    return a.sign_ == b.sign_ && a.limbs_ == b.limbs_;
  }
  friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
  friend bool operator<(const BigInt& a, const BigInt& b) {
    if (a.sign_ != b.sign_) return a.sign_ < b.sign_;
    int c = cmp_mag(a.limbs_, b.limbs_);
    return a.sign_ >= 0 ? c < 0 : c > 0;
  }
  friend bool operator>(const BigInt& a, const BigInt& b) { return b < a; }
  friend bool operator<=(const BigInt& a, const BigInt& b) { return !(b < a); }
  friend bool operator>=(const BigInt& a, const BigInt& b) { return !(a < b); }

  std::string to_string() const {
    if (sign_ == 0) return "0";
    std::vector<std::uint32_t> mag = limbs_;
    std::string digits;
    while (!mag.empty()) {
      std::uint32_t rem = div_small(mag, 1000000000u);
      std::string chunk = std::to_string(rem);
      if (mag.empty()) {
        digits = chunk + digits;
      } else {
        digits = std::string(9 - chunk.size(), '0') + chunk + digits;
      }
    }
    return (sign_ < 0 ? "-" : "") + digits;
  }

  /// Throws when the value does not fit.
  long long to_int64() const {
    if (limbs_.size() > 2) throw domain_error("BigInt does not fit in 64 bits");
    unsigned long long mag = 0;
    for (size_t i = limbs_.size(); i-- > 0;) mag = (mag << 32) | limbs_[i];
    if (sign_ >= 0) {
      if (mag > 0x7fffffffffffffffull) throw domain_error("BigInt does not fit in 64 bits");
      return static_cast<long long>(mag);
    }
    if (mag > 0x8000000000000000ull) throw domain_error("BigInt does not fit in 64 bits");
    return static_cast<long long>(~mag + 1ull);
  }

  friend std::ostream& operator<<(std::ostream& os, const BigInt& v) {
    return os << v.to_string();
  }

private:
  void normalize() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    if (limbs_.empty()) sign_ = 0;
  }

  static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;)
      if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
  }

  static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> r;
    r.reserve(std::max(a.size(), b.size()) + 1);
    std::uint64_t carry = 0;
    for (size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
      std::uint64_t s = carry;
      if (i < a.size()) s += a[i];
      if (i < b.size()) s += b[i];
      r.push_back(static_cast<std::uint32_t>(s & 0xffffffffull));
      carry = s >> 32;
    }
    if (carry) r.push_back(static_cast<std::uint32_t>(carry));
    return r;
  }

  // requires |a| >= |b|
  static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> r = a;
    std::int64_t borrow = 0;
    for (size_t i = 0; i < r.size(); ++i) {
      std::int64_t d = static_cast<std::int64_t>(r[i]) - borrow - (i < b.size() ? b[i] : 0);
      if (d < 0) {
        d += 1ll << 32;
        borrow = 1;
      } else {
        borrow = 0;
      }
      r[i] = static_cast<std::uint32_t>(d);
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
  }

  static std::vector<std::uint32_t> mul_mag(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b) {
    std::vector<std::uint64_t> acc(a.size() + b.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
      std::uint64_t carry = 0;
      for (size_t j = 0; j < b.size(); ++j) {
        std::uint64_t cur =
            acc[i + j] + static_cast<std::uint64_t>(a[i]) * b[j] + carry;
        acc[i + j] = cur & 0xffffffffull;
        carry = cur >> 32;
      }
      size_t k = i + b.size();
      while (carry) {
        std::uint64_t cur = acc[k] + carry;
        acc[k] = cur & 0xffffffffull;
        carry = cur >> 32;
        ++k;
      }
    }
    std::vector<std::uint32_t> r(acc.size());
    for (size_t i = 0; i < acc.size(); ++i) r[i] = static_cast<std::uint32_t>(acc[i]);
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
  }

  // binary shift-and-subtract long division on magnitudes; |a| >= |b| > 0
  static std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>> divmod_mag(
      const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    int bits = static_cast<int>(a.size()) * 32;
    std::vector<std::uint32_t> q(a.size(), 0), rem;
    for (int i = bits - 1; i >= 0; --i) {
      // rem = rem*2 + bit_i(a)
      std::uint32_t carry = (a[i / 32] >> (i % 32)) & 1u;
      for (auto& limb : rem) {
        std::uint32_t next = limb >> 31;
        limb = (limb << 1) | carry;
        carry = next;
      }
      if (carry) rem.push_back(carry);
      if (cmp_mag(rem, b) >= 0) {
        rem = sub_mag(rem, b);
        q[i / 32] |= 1u << (i % 32);
      }
    }
    return {q, rem};
  }

  // in-place divide magnitude by a single limb, returning the remainder
  static std::uint32_t div_small(std::vector<std::uint32_t>& mag, std::uint32_t d) {
    std::uint64_t rem = 0;
    for (size_t i = mag.size(); i-- > 0;) {
      std::uint64_t cur = (rem << 32) | mag[i];
      mag[i] = static_cast<std::uint32_t>(cur / d);
      rem = cur % d;
    }
    while (!mag.empty() && mag.back() == 0) mag.pop_back();
    return static_cast<std::uint32_t>(rem);
  }

  int sign_ = 0;
  std::vector<std::uint32_t> limbs_;  // little-endian, no leading zeros
};

inline BigInt gcd(BigInt a, BigInt b) {
  a = a.abs();
  b = b.abs();
  while (!b.is_zero()) {
    BigInt r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

}  // namespace aspace
