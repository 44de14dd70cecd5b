#include "llt/qpoly.hpp"

#include <algorithm>

#include "llt/errors.hpp"

namespace llt {

namespace {
const BigInt kZero{0};
}

QPoly::QPoly(std::initializer_list<long long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

QPoly::QPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

QPoly QPoly::constant(BigInt c) { return QPoly(std::vector<BigInt>{std::move(c)}); }

QPoly QPoly::monomial(BigInt c, int degree) {
  std::vector<BigInt> v(static_cast<size_t>(degree) + 1);
  v.back() = std::move(c);
  return QPoly(std::move(v));
}

QPoly QPoly::q() { return QPoly{0, 1}; }

const BigInt& QPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return kZero;
  return coeffs_[static_cast<size_t>(i)];
}

void QPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

QPoly& QPoly::operator+=(const QPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  normalize();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  normalize();
  return *this;
}

QPoly QPoly::operator-() const {
  QPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return QPoly(std::move(out));
}

QPoly& QPoly::operator*=(const QPoly& o) { return *this = *this * o; }

QPoly QPoly::pow(unsigned e) const {
  QPoly result = constant(1);
  QPoly base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e) base *= base;
  }
  return result;
}

QPoly QPoly::shift(long long delta) const {
  if (delta == 0 || is_zero()) return *this;
  // Horner in the substituted variable: p(q + delta).
  const QPoly lin{delta, 1};
  QPoly r;
  for (size_t i = coeffs_.size(); i-- > 0;) {
    r *= lin;
    r += constant(coeffs_[i]);
  }
  return r;
}

QPoly QPoly::div_qminus1(unsigned k) const {
  std::vector<BigInt> cur = coeffs_;
  for (unsigned step = 0; step < k; ++step) {
    if (cur.empty()) return {};
    // Synthetic division by (q - 1): quotient coefficients from the top down.
    std::vector<BigInt> quot(cur.size() - 1);
    BigInt carry = 0;
    for (size_t i = cur.size(); i-- > 1;) {
      carry += cur[i];
      quot[i - 1] = carry;
    }
    if (carry + cur[0] != 0) {
      throw NonDivisible("polynomial " + QPoly(cur).to_string() + " is not divisible by (q-1)");
    }
    cur = std::move(quot);
  }
  return QPoly(std::move(cur));
}

bool QPoly::all_nonnegative() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const BigInt& c) { return c >= 0; });
}

std::string QPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (size_t i = coeffs_.size(); i-- > 0;) {
    const BigInt& c = coeffs_[i];
    if (c == 0) continue;
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (c < 0) {
      out += "-";
    } else if (!out.empty()) {
      out += "+";
    }
    if (i == 0 || mag != 1) out += mag.str();
    if (i >= 1) out += "q";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

QPoly binomial_tail(unsigned e) { return QPoly{1, 1}.pow(e) - QPoly::constant(1); }

BigInt binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (long long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

}  // namespace llt
