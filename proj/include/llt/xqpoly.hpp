#pragma once

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "llt/qpoly.hpp"

namespace llt {

using Exponent = std::vector<int>;

/// Polynomial in x_1..x_N whose coefficients are QPoly.
///
/// Terms are kept sorted by exponent vector, largest first, which is also
/// the order used for serialization.
class XQPoly {
 public:
  using TermMap = std::map<Exponent, QPoly, std::greater<>>;

  explicit XQPoly(int nvars = 1);
  static XQPoly constant(int nvars, const QPoly& c);
  /// x_i with i 1-based.
  static XQPoly variable(int nvars, int i);

  int nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Coefficient of x^e; zero when absent.
  QPoly coeff(const Exponent& e) const;

  void add_term(const Exponent& e, const QPoly& c);

  XQPoly& operator+=(const XQPoly& o);
  XQPoly& operator-=(const XQPoly& o);
  XQPoly& operator*=(const QPoly& c);
  friend XQPoly operator+(XQPoly a, const XQPoly& b) { return a += b; }
  friend XQPoly operator-(XQPoly a, const XQPoly& b) { return a -= b; }
  friend XQPoly operator*(XQPoly a, const QPoly& c) { return a *= c; }
  friend XQPoly operator*(const QPoly& c, XQPoly a) { return a *= c; }
  friend XQPoly operator*(const XQPoly& a, const XQPoly& b);
  friend bool operator==(const XQPoly&, const XQPoly&) = default;

  /// Applies f to every q-coefficient, dropping terms that become zero.
  XQPoly map_coeffs(const std::function<QPoly(const QPoly&)>& f) const;
  /// Substitutes q := q + delta in every coefficient.
  XQPoly shift_q(long long delta) const;

  /// Total x-degree when homogeneous; nullopt for zero or mixed degree.
  std::optional<int> homogeneous_degree() const;
  /// Invariance under every adjacent transposition of variables.
  bool is_symmetric() const;
  /// First exponent (in term order) where the two polynomials differ.
  static std::optional<Exponent> first_difference(const XQPoly& a, const XQPoly& b);

 private:
  int nvars_;
  TermMap terms_;
};

/// Divides every coefficient by (q-1)^k; throws NonDivisible otherwise.
XQPoly exact_div_qminus1(const XQPoly& p, unsigned k);

/// Fixed-width integer accumulator for enumeration loops, converted to an
/// XQPoly once the loop is done. Keys are exponent vectors, values are
/// per-q-degree counts.
class MonomialCounter {
 public:
  explicit MonomialCounter(int nvars) : nvars_(nvars) {}
  void add(const Exponent& e, int qdeg, long long count = 1);
  void merge(const MonomialCounter& o);
  XQPoly to_poly() const;

 private:
  int nvars_;
  std::map<Exponent, std::vector<long long>> counts_;
};

}  // namespace llt
