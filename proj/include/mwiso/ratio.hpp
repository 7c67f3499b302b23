#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "mwiso/error.hpp"

namespace mwiso {

/// Exact nonnegative rational, always in lowest terms. Comparisons go through
/// 128-bit cross products; no floating point is involved anywhere, so strict
/// inequalities from the verification suites are decidable.
class ratio {
 public:
  ratio() = default;
  ratio(std::uint64_t num, std::uint64_t den) : num_(num), den_(den) {
    if (den_ == 0) throw error(errc::divide_by_zero, "ratio with zero denominator");
    reduce();
  }
  static ratio from_int(std::uint64_t v) { return ratio(v, 1); }

  std::uint64_t num() const { return num_; }
  std::uint64_t den() const { return den_; }
  bool is_zero() const { return num_ == 0; }

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  /// "num/den", or just "num" when the denominator is 1.
  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  friend bool operator==(const ratio& a, const ratio& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator<(const ratio& a, const ratio& b) {
    return static_cast<u128>(a.num_) * b.den_ < static_cast<u128>(b.num_) * a.den_;
  }
  friend bool operator<=(const ratio& a, const ratio& b) { return !(b < a); }
  friend bool operator>(const ratio& a, const ratio& b) { return b < a; }
  friend bool operator>=(const ratio& a, const ratio& b) { return !(a < b); }

  friend ratio operator+(const ratio& a, const ratio& b) {
    std::uint64_t g = std::gcd(a.den_, b.den_);
    u128 den = static_cast<u128>(a.den_ / g) * b.den_;
    u128 num = static_cast<u128>(a.num_) * (b.den_ / g) + static_cast<u128>(b.num_) * (a.den_ / g);
    return make_reduced(num, den);
  }

  friend ratio operator*(const ratio& a, const ratio& b) {
    std::uint64_t g1 = std::gcd(a.num_, b.den_);
    std::uint64_t g2 = std::gcd(b.num_, a.den_);
    u128 num = static_cast<u128>(a.num_ / g1) * (b.num_ / g2);
    u128 den = static_cast<u128>(a.den_ / g2) * (b.den_ / g1);
    return make_reduced(num, den);
  }

  friend ratio operator*(const ratio& a, std::uint64_t k) { return a * from_int(k); }
  friend ratio operator*(std::uint64_t k, const ratio& a) { return a * from_int(k); }

  friend ratio operator/(const ratio& a, const ratio& b) {
    if (b.num_ == 0) throw error(errc::divide_by_zero, "division by zero ratio");
    return a * ratio(b.den_, b.num_);
  }
  friend ratio operator/(const ratio& a, std::uint64_t k) {
    if (k == 0) throw error(errc::divide_by_zero, "division by zero");
    return a * ratio(1, k);
  }

  /// a - b, requiring a >= b (values stay nonnegative by construction).
  static ratio sub(const ratio& a, const ratio& b) {
    if (a < b) throw error(errc::arithmetic_overflow, "ratio::sub would be negative");
    std::uint64_t g = std::gcd(a.den_, b.den_);
    u128 den = static_cast<u128>(a.den_ / g) * b.den_;
    u128 num = static_cast<u128>(a.num_) * (b.den_ / g) - static_cast<u128>(b.num_) * (a.den_ / g);
    return make_reduced(num, den);
  }

  static ratio abs_diff(const ratio& a, const ratio& b) { return a < b ? sub(b, a) : sub(a, b); }

 private:
  using u128 = unsigned __int128;

  static std::uint64_t gcd128(u128 a, std::uint64_t b) {
    if (b == 0) return 0;
    std::uint64_t r = static_cast<std::uint64_t>(a % b);
    return std::gcd(r, b);
  }

  static ratio make_reduced(u128 num, u128 den) {
    if (num == 0) return ratio();
    // den fits in 64 bits in all uses below the desk-scale caps; reduce first,
    // then verify.
    std::uint64_t g = gcd128(num, static_cast<std::uint64_t>(den <= ~0ULL ? den : 0));
    if (g == 0) {
      // denominator exceeded 64 bits before reduction: reduce via full gcd
      u128 a = num, b = den;
      while (b) {
        u128 t = a % b;
        a = b;
        b = t;
      }
      num /= a;
      den /= a;
    } else {
      num /= g;
      den /= g;
    }
    if (num > ~0ULL || den > ~0ULL)
      throw error(errc::arithmetic_overflow, "ratio exceeds 64-bit range");
    ratio r;
    r.num_ = static_cast<std::uint64_t>(num);
    r.den_ = static_cast<std::uint64_t>(den);
    return r;
  }

  void reduce() {
    if (num_ == 0) {
      den_ = 1;
      return;
    }
    std::uint64_t g = std::gcd(num_, den_);
    num_ /= g;
    den_ /= g;
  }

  std::uint64_t num_ = 0;
  std::uint64_t den_ = 1;
};

}  // namespace mwiso
