#include "llt/xqpoly.hpp"

#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

#include "llt/errors.hpp"

namespace llt {

XQPoly::XQPoly(int nvars) : nvars_(nvars) {
  if (nvars < 1) throw Error("XQPoly needs at least one variable");
}

XQPoly XQPoly::constant(int nvars, const QPoly& c) {
  XQPoly p(nvars);
  p.add_term(Exponent(static_cast<size_t>(nvars), 0), c);
  return p;
}

XQPoly XQPoly::variable(int nvars, int i) {
  if (i < 1 || i > nvars) throw Error("variable index " + std::to_string(i) + " out of range");
  XQPoly p(nvars);
  Exponent e(static_cast<size_t>(nvars), 0);
  e.at(static_cast<size_t>(i - 1)) = 1;
  p.add_term(e, QPoly::constant(1));
  return p;
}

QPoly XQPoly::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? QPoly{} : it->second;
}

void XQPoly::add_term(const Exponent& e, const QPoly& c) {
  if (static_cast<int>(e.size()) != nvars_) throw Error("exponent length does not match nvars");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

XQPoly& XQPoly::operator+=(const XQPoly& o) {
  if (o.nvars_ != nvars_) throw Error("nvars mismatch in addition");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

XQPoly& XQPoly::operator-=(const XQPoly& o) {
  if (o.nvars_ != nvars_) throw Error("nvars mismatch in subtraction");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

XQPoly& XQPoly::operator*=(const QPoly& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

XQPoly operator*(const XQPoly& a, const XQPoly& b) {
  if (a.nvars_ != b.nvars_) throw Error("nvars mismatch in multiplication");
  XQPoly out(a.nvars_);
  Exponent e(static_cast<size_t>(a.nvars_));
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

XQPoly XQPoly::map_coeffs(const std::function<QPoly(const QPoly&)>& f) const {
  XQPoly out(nvars_);
  for (const auto& [e, c] : terms_) out.add_term(e, f(c));
  return out;
}

XQPoly XQPoly::shift_q(long long delta) const {
  return map_coeffs([delta](const QPoly& c) { return c.shift(delta); });
}

std::optional<int> XQPoly::homogeneous_degree() const {
  std::optional<int> deg;
  for (const auto& [e, c] : terms_) {
    int d = std::accumulate(e.begin(), e.end(), 0);
    if (deg && *deg != d) return std::nullopt;
    deg = d;
  }
  return deg;
}

bool XQPoly::is_symmetric() const {
  for (int i = 0; i + 1 < nvars_; ++i) {
    for (const auto& [e, c] : terms_) {
      Exponent swapped = e;
      std::swap(swapped[static_cast<size_t>(i)], swapped[static_cast<size_t>(i) + 1]);
      if (coeff(swapped) != c) return false;
    }
  }
  return true;
}

std::optional<Exponent> XQPoly::first_difference(const XQPoly& a, const XQPoly& b) {
  auto ia = a.terms_.begin();
  auto ib = b.terms_.begin();
  const std::greater<> before;
  while (ia != a.terms_.end() || ib != b.terms_.end()) {
    if (ib == b.terms_.end() || (ia != a.terms_.end() && before(ia->first, ib->first))) return ia->first;
    if (ia == a.terms_.end() || before(ib->first, ia->first)) return ib->first;
    if (ia->second != ib->second) return ia->first;
    ++ia;
    ++ib;
  }
  return std::nullopt;
}

XQPoly exact_div_qminus1(const XQPoly& p, unsigned k) {
  return p.map_coeffs([k](const QPoly& c) { return c.div_qminus1(k); });
}

void MonomialCounter::add(const Exponent& e, int qdeg, long long count) {
  auto& v = counts_[e];
  if (static_cast<int>(v.size()) <= qdeg) v.resize(static_cast<size_t>(qdeg) + 1, 0);
  v[static_cast<size_t>(qdeg)] += count;
}

void MonomialCounter::merge(const MonomialCounter& o) {
  for (const auto& [e, v] : o.counts_) {
    for (size_t d = 0; d < v.size(); ++d) {
      if (v[d] != 0) add(e, static_cast<int>(d), v[d]);
    }
  }
}

XQPoly MonomialCounter::to_poly() const {
  XQPoly out(nvars_);
  for (const auto& [e, v] : counts_) {
    std::vector<BigInt> c(v.begin(), v.end());
    out.add_term(e, QPoly(std::move(c)));
  }
  return out;
}

}  // namespace llt
