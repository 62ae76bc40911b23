#pragma once

// Exact arithmetic in the quadratic field Q[sqrt 5].

#include <cmath>
#include <compare>
#include <string>

#include "zeck/bigint.hpp"
#include "zeck/error.hpp"

namespace zeck {

/// a + b*sqrt(5) with a, b rational.
class QuadRat {
 public:
  QuadRat() = default;
  QuadRat(Rational a, Rational b = 0) : a_(std::move(a)), b_(std::move(b)) {}  // NOLINT
  QuadRat(long a) : a_(a) {}  // NOLINT

  const Rational& rational_part() const noexcept { return a_; }
  const Rational& sqrt5_part() const noexcept { return b_; }

  bool is_zero() const { return a_ == 0 && b_ == 0; }

  QuadRat conjugate() const { return QuadRat(a_, -b_); }
  /// a^2 - 5 b^2; zero only for zero since sqrt 5 is irrational.
  Rational norm() const { return a_ * a_ - 5 * b_ * b_; }

  /// Exact sign of a + b sqrt 5.
  int sign() const {
    const int sa = a_ > 0 ? 1 : (a_ < 0 ? -1 : 0);
    const int sb = b_ > 0 ? 1 : (b_ < 0 ? -1 : 0);
    if (sb == 0) return sa;
    if (sa == 0 || sa == sb) return sb;
    // Opposite signs: compare a^2 with 5 b^2.
    const Rational lhs = a_ * a_;
    const Rational rhs = 5 * b_ * b_;
    if (lhs == rhs) return 0;
    return lhs > rhs ? sa : sb;
  }

  double to_double() const {
    return zeck::to_double(a_) + zeck::to_double(b_) * std::sqrt(5.0);
  }

  std::string to_string() const {
    return "(" + zeck::to_string(a_) + ") + (" + zeck::to_string(b_) + ")*sqrt(5)";
  }

  QuadRat& operator+=(const QuadRat& y) { a_ += y.a_; b_ += y.b_; return *this; }
  QuadRat& operator-=(const QuadRat& y) { a_ -= y.a_; b_ -= y.b_; return *this; }
  QuadRat& operator*=(const QuadRat& y) {
    Rational a = a_ * y.a_ + 5 * b_ * y.b_;
    Rational b = a_ * y.b_ + b_ * y.a_;
    a_ = std::move(a);
    b_ = std::move(b);
    return *this;
  }
  QuadRat& operator/=(const QuadRat& y) {
    if (y.is_zero()) throw error(errc::division_by_zero, "division by zero in Q[sqrt 5]");
    const Rational n = y.norm();
    *this *= y.conjugate();
    a_ /= n;
    b_ /= n;
    return *this;
  }

  friend QuadRat operator+(QuadRat x, const QuadRat& y) { return x += y; }
  friend QuadRat operator-(QuadRat x, const QuadRat& y) { return x -= y; }
  friend QuadRat operator*(QuadRat x, const QuadRat& y) { return x *= y; }
  friend QuadRat operator/(QuadRat x, const QuadRat& y) { return x /= y; }
  friend QuadRat operator-(const QuadRat& x) { return QuadRat(-x.a_, -x.b_); }

  friend bool operator==(const QuadRat& x, const QuadRat& y) { return x.a_ == y.a_ && x.b_ == y.b_; }
  friend std::strong_ordering operator<=>(const QuadRat& x, const QuadRat& y) {
    const int s = (x - y).sign();
    return s < 0 ? std::strong_ordering::less
                 : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  Rational a_{0};
  Rational b_{0};
};

namespace constants {

inline QuadRat sqrt5() { return QuadRat(0, 1); }
/// (1 + sqrt 5) / 2
inline QuadRat phi() { return QuadRat(Rational(1, 2), Rational(1, 2)); }
/// 1 / (phi + 2) = 1 / (phi^2 + 1) = (5 - sqrt 5) / 10, the Zeckendorf mean slope.
inline QuadRat mean_slope() { return QuadRat(1) / (phi() + QuadRat(2)); }
/// 1 / (5 sqrt 5), the Zeckendorf variance slope.
inline QuadRat variance_slope() { return QuadRat(1) / (QuadRat(5) * sqrt5()); }
/// phi / 2, the far-difference gap E[K_n] - E[L_n].
inline QuadRat fardiff_mean_gap() { return phi() / QuadRat(2); }
/// (371 - 113 sqrt 5) / 40, the constant term of E[K_n].
inline QuadRat fardiff_mean_offset() { return QuadRat(Rational(371, 40), Rational(-113, 40)); }
/// (15 + 21 sqrt 5) / 1000, the variance slope of K_n and L_n.
inline QuadRat fardiff_variance_slope() { return QuadRat(Rational(15, 1000), Rational(21, 1000)); }
/// -(21 - 2 phi) / (29 + 2 phi), the limiting correlation of K_n and L_n.
inline QuadRat fardiff_correlation() {
  return -(QuadRat(21) - QuadRat(2) * phi()) / (QuadRat(29) + QuadRat(2) * phi());
}

}  // namespace constants

}  // namespace zeck
