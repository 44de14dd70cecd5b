#pragma once

#include <compare>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "llt/xqpoly.hpp"

namespace llt {

/// Integer partition; parts weakly decreasing and positive.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const;
  int length() const { return static_cast<int>(parts_.size()); }
  Partition conjugate() const;
  std::string to_string() const;

  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// Partitions of d in reverse lexicographic order, (d) first.
std::vector<Partition> partitions_of(int d);

enum class Basis { monomial, elementary, schur, homogeneous };

Basis parse_basis(const std::string& s);
std::string basis_symbol(Basis b);

struct SymExpansion {
  Basis basis = Basis::monomial;
  std::map<Partition, QPoly, std::greater<>> coeffs;

  friend bool operator==(const SymExpansion&, const SymExpansion&) = default;
};

XQPoly monomial_symmetric(const Partition& la, int nvars);
XQPoly elementary_symmetric(const Partition& la, int nvars);
XQPoly complete_homogeneous(const Partition& la, int nvars);
/// Schur polynomial from an explicit enumeration of semistandard tableaux.
XQPoly schur_polynomial(const Partition& la, int nvars);

/// Expands a homogeneous symmetric polynomial; throws NotSymmetric or
/// DegreeExceedsVars when the expansion would not be faithful.
SymExpansion expand_basis(const XQPoly& p, Basis basis);

/// Rebuilds the polynomial in nvars variables.
XQPoly to_polynomial(const SymExpansion& e, int nvars);

struct PositivityReport {
  bool positive = true;
  std::optional<Partition> partition;
  std::optional<int> qpower;
};

PositivityReport is_positive(const SymExpansion& e);

}  // namespace llt
