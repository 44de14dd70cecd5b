#include "llt/symmetric.hpp"

#include <algorithm>
#include <numeric>

#include "llt/errors.hpp"

namespace llt {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw Error("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw Error("partition parts must be weakly decreasing");
  }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::conjugate() const {
  std::vector<int> out;
  if (parts_.empty()) return {};
  for (int c = 1; c <= parts_.front(); ++c) {
    int len = 0;
    for (int p : parts_) len += p >= c ? 1 : 0;
    out.push_back(len);
  }
  return Partition(std::move(out));
}

std::string Partition::to_string() const {
  std::string s = "(";
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

namespace {

void partitions_rec(int rest, int maxpart, std::vector<int>& cur, std::vector<Partition>& out) {
  if (rest == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(rest, maxpart); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(rest - p, p, cur, out);
    cur.pop_back();
  }
}

Exponent padded(const Partition& la, int nvars) {
  Exponent e(static_cast<size_t>(nvars), 0);
  for (int i = 0; i < la.length(); ++i) e[static_cast<size_t>(i)] = la.parts()[static_cast<size_t>(i)];
  return e;
}

// Product of one-row/one-column generators e_k or h_k.
XQPoly product_of(const Partition& la, int nvars, const std::function<XQPoly(int, int)>& gen) {
  XQPoly out = XQPoly::constant(nvars, QPoly::constant(1));
  for (int part : la.parts()) out = out * gen(part, nvars);
  return out;
}

XQPoly elementary_single(int k, int nvars) {
  XQPoly out(nvars);
  if (k > nvars) return out;
  std::vector<int> pick(static_cast<size_t>(nvars), 0);
  std::fill(pick.end() - k, pick.end(), 1);
  do {
    out.add_term(pick, QPoly::constant(1));
  } while (std::next_permutation(pick.begin(), pick.end()));
  return out;
}

XQPoly homogeneous_single(int k, int nvars) {
  XQPoly out(nvars);
  Exponent e(static_cast<size_t>(nvars), 0);
  std::function<void(int, int)> rec = [&](int var, int rest) {
    if (var == nvars - 1) {
      e[static_cast<size_t>(var)] = rest;
      out.add_term(e, QPoly::constant(1));
      return;
    }
    for (int a = 0; a <= rest; ++a) {
      e[static_cast<size_t>(var)] = a;
      rec(var + 1, rest - a);
    }
  };
  rec(0, k);
  return out;
}

}  // namespace

std::vector<Partition> partitions_of(int d) {
  std::vector<Partition> out;
  std::vector<int> cur;
  partitions_rec(d, d, cur, out);
  return out;
}

Basis parse_basis(const std::string& s) {
  if (s == "m" || s == "monomial") return Basis::monomial;
  if (s == "e" || s == "elementary") return Basis::elementary;
  if (s == "s" || s == "schur") return Basis::schur;
  if (s == "h" || s == "homogeneous") return Basis::homogeneous;
  throw ParseError("unknown basis '" + s + "'");
}

std::string basis_symbol(Basis b) {
  switch (b) {
    case Basis::monomial: return "m";
    case Basis::elementary: return "e";
    case Basis::schur: return "s";
    case Basis::homogeneous: return "h";
  }
  return "?";
}

XQPoly monomial_symmetric(const Partition& la, int nvars) {
  XQPoly out(nvars);
  if (la.length() > nvars) return out;
  Exponent e = padded(la, nvars);
  std::sort(e.begin(), e.end());
  do {
    out.add_term(e, QPoly::constant(1));
  } while (std::next_permutation(e.begin(), e.end()));
  return out;
}

XQPoly elementary_symmetric(const Partition& la, int nvars) {
  return product_of(la, nvars, elementary_single);
}

XQPoly complete_homogeneous(const Partition& la, int nvars) {
  return product_of(la, nvars, homogeneous_single);
}

XQPoly schur_polynomial(const Partition& la, int nvars) {
  XQPoly out(nvars);
  if (la.length() > nvars) return out;
  // Cells in row-major order; rows weakly increase, columns strictly increase.
  std::vector<std::pair<int, int>> cells;
  for (int r = 0; r < la.length(); ++r) {
    for (int c = 0; c < la.parts()[static_cast<size_t>(r)]; ++c) cells.emplace_back(r, c);
  }
  std::vector<std::vector<int>> t(static_cast<size_t>(la.length()));
  for (int r = 0; r < la.length(); ++r) t[static_cast<size_t>(r)].assign(static_cast<size_t>(la.parts()[static_cast<size_t>(r)]), 0);
  Exponent e(static_cast<size_t>(nvars), 0);
  std::function<void(size_t)> rec = [&](size_t idx) {
    if (idx == cells.size()) {
      out.add_term(e, QPoly::constant(1));
      return;
    }
    auto [r, c] = cells[idx];
    int lo = 1;
    if (c > 0) lo = std::max(lo, t[static_cast<size_t>(r)][static_cast<size_t>(c) - 1]);
    if (r > 0) lo = std::max(lo, t[static_cast<size_t>(r) - 1][static_cast<size_t>(c)] + 1);
    for (int v = lo; v <= nvars; ++v) {
      t[static_cast<size_t>(r)][static_cast<size_t>(c)] = v;
      ++e[static_cast<size_t>(v) - 1];
      rec(idx + 1);
      --e[static_cast<size_t>(v) - 1];
    }
  };
  rec(0);
  return out;
}

namespace {

// Repeatedly cancels the lexicographically largest monomial against the
// basis element whose leading monomial it is.
SymExpansion eliminate(XQPoly rest, Basis basis, const std::function<Partition(const Partition&)>& index_of_lead,
                       const std::function<XQPoly(const Partition&, int)>& element) {
  SymExpansion out{basis, {}};
  const int n = rest.nvars();
  while (!rest.is_zero()) {
    const auto& [lead, c] = *rest.terms().begin();
    Partition shape(lead);
    Partition index = index_of_lead(shape);
    QPoly coeff = c;
    rest -= element(index, n) * coeff;
    out.coeffs[index] += coeff;
  }
  return out;
}

void check_expandable(const XQPoly& p) {
  if (p.is_zero()) return;
  auto deg = p.homogeneous_degree();
  if (!deg) throw Error("polynomial is not homogeneous");
  if (*deg > p.nvars()) {
    throw DegreeExceedsVars("degree " + std::to_string(*deg) + " exceeds " + std::to_string(p.nvars()) + " variables");
  }
  if (!p.is_symmetric()) throw NotSymmetric("polynomial is not symmetric under variable transpositions");
}

}  // namespace

SymExpansion expand_basis(const XQPoly& p, Basis basis) {
  check_expandable(p);
  switch (basis) {
    case Basis::monomial: {
      SymExpansion out{basis, {}};
      for (const auto& [e, c] : p.terms()) {
        if (std::is_sorted(e.begin(), e.end(), std::greater<>())) out.coeffs[Partition(e)] = c;
      }
      return out;
    }
    case Basis::schur:
      return eliminate(p, basis, [](const Partition& la) { return la; }, schur_polynomial);
    case Basis::elementary:
      return eliminate(p, basis, [](const Partition& la) { return la.conjugate(); }, elementary_symmetric);
    case Basis::homogeneous: {
      // omega swaps s_la and s_la'; the h-coefficients of p are the
      // e-coefficients of omega(p).
      SymExpansion s = expand_basis(p, Basis::schur);
      XQPoly omega(p.nvars());
      for (const auto& [la, c] : s.coeffs) omega += schur_polynomial(la.conjugate(), p.nvars()) * c;
      SymExpansion e = expand_basis(omega, Basis::elementary);
      e.basis = Basis::homogeneous;
      return e;
    }
  }
  return {};
}

XQPoly to_polynomial(const SymExpansion& e, int nvars) {
  XQPoly out(nvars);
  for (const auto& [la, c] : e.coeffs) {
    switch (e.basis) {
      case Basis::monomial: out += monomial_symmetric(la, nvars) * c; break;
      case Basis::elementary: out += elementary_symmetric(la, nvars) * c; break;
      case Basis::schur: out += schur_polynomial(la, nvars) * c; break;
      case Basis::homogeneous: out += complete_homogeneous(la, nvars) * c; break;
    }
  }
  return out;
}

PositivityReport is_positive(const SymExpansion& e) {
  for (const auto& [la, c] : e.coeffs) {
    for (int i = 0; i <= c.degree(); ++i) {
      if (c.coeff(i) < 0) return {false, la, i};
    }
  }
  return {};
}

}  // namespace llt
