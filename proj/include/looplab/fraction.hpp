#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace looplab {

/// Reduced rational number. Probabilities and bounds are always kept exact;
/// doubles appear only in human-readable rendering.
///
/// The numerator/denominator fit comfortably in 64 bits for every scale this
/// library targets (counts are at most n^3 and n stays at desk scale), and
/// comparisons cross-multiply in 128 bits so they never overflow.
class Fraction {
 public:
  constexpr Fraction() : num_(0), den_(1) {}
  constexpr Fraction(std::int64_t value) : num_(value), den_(1) {}
  constexpr Fraction(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
    if (den_ == 0) throw std::domain_error("Fraction: zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    const std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  constexpr std::int64_t num() const noexcept { return num_; }
  constexpr std::int64_t den() const noexcept { return den_; }

  constexpr friend Fraction operator+(const Fraction& a, const Fraction& b) {
    return Fraction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  constexpr friend Fraction operator-(const Fraction& a, const Fraction& b) {
    return Fraction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  constexpr friend Fraction operator*(const Fraction& a, const Fraction& b) {
    return Fraction(a.num_ * b.num_, a.den_ * b.den_);
  }
  constexpr friend Fraction operator/(const Fraction& a, const Fraction& b) {
    if (b.num_ == 0) throw std::domain_error("Fraction: division by zero");
    return Fraction(a.num_ * b.den_, a.den_ * b.num_);
  }

  constexpr friend bool operator==(const Fraction& a, const Fraction& b) noexcept {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  constexpr friend bool operator<(const Fraction& a, const Fraction& b) noexcept {
    return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
  }
  constexpr friend bool operator<=(const Fraction& a, const Fraction& b) noexcept {
    return a == b || a < b;
  }
  constexpr friend bool operator>(const Fraction& a, const Fraction& b) noexcept { return b < a; }
  constexpr friend bool operator>=(const Fraction& a, const Fraction& b) noexcept { return b <= a; }

  double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }

  /// Renders as "p/q" ("p" when q = 1).
  std::string to_string() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

 private:
  std::int64_t num_;
  std::int64_t den_;
};

}  // namespace looplab
