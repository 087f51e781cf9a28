#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace mosaic {

/// Integer Laurent polynomial in one variable, stored densely from the lowest
/// nonzero exponent. The zero polynomial has no coefficients.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(std::int64_t constant);  // NOLINT: integers promote naturally

  static LaurentPoly monomial(std::int64_t coeff, int exponent);

  bool is_zero() const { return coef_.empty(); }
  int min_exponent() const { return low_; }
  int max_exponent() const { return low_ + static_cast<int>(coef_.size()) - 1; }
  std::int64_t coeff(int exponent) const;
  /// Nonzero (exponent, coefficient) pairs in increasing exponent order.
  std::vector<std::pair<int, std::int64_t>> terms() const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }
  LaurentPoly operator-() const;

  /// Multiplies by x^k.
  LaurentPoly shifted(int k) const;
  /// Substitutes x -> x^-1.
  LaurentPoly inverted() const;
  /// Substitutes x -> x^k for k != 0.
  LaurentPoly substituted_power(int k) const;
  LaurentPoly pow(unsigned e) const;

  /// Sorted-exponent text form, e.g. "-A^-7 + A^-3 + A^5"; "0" for zero.
  std::string to_string(char var = 'A') const;

  std::size_t hash() const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  void trim();

  int low_ = 0;
  std::vector<std::int64_t> coef_;
};

struct LaurentPolyHash {
  std::size_t operator()(const LaurentPoly& p) const { return p.hash(); }
};

}  // namespace mosaic
