#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace llt {

using BigInt = boost::multiprecision::cpp_int;

/// Univariate polynomial in q with arbitrary-precision integer coefficients.
///
/// Coefficients are stored little-endian in degree with trailing zeros
/// stripped, so the zero polynomial has an empty coefficient vector.
class QPoly {
 public:
  QPoly() = default;
  QPoly(std::initializer_list<long long> coeffs);
  explicit QPoly(std::vector<BigInt> coeffs);
  static QPoly constant(BigInt c);
  static QPoly monomial(BigInt c, int degree);
  /// q itself.
  static QPoly q();

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const BigInt& coeff(int i) const;
  const std::vector<BigInt>& coeffs() const { return coeffs_; }

  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  QPoly& operator*=(const QPoly& o);
  QPoly operator-() const;

  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend bool operator==(const QPoly&, const QPoly&) = default;

  QPoly pow(unsigned e) const;

  /// p(q + delta).
  QPoly shift(long long delta) const;

  /// Divides by (q - 1)^k; throws NonDivisible when the remainder is nonzero.
  QPoly div_qminus1(unsigned k) const;

  bool all_nonnegative() const;

  /// Human readable form, e.g. "q^2+2q+1"; "0" for zero.
  std::string to_string() const;

 private:
  void normalize();
  std::vector<BigInt> coeffs_;
};

/// (q + 1)^e - 1
QPoly binomial_tail(unsigned e);
BigInt binomial(long long n, long long k);

}  // namespace llt
