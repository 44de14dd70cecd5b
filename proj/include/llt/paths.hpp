#pragma once

#include <string>
#include <utility>
#include <vector>

namespace llt {

/// Box (i, j): the unit square whose lower-left corner is (i-1, j-1).
using Box = std::pair<int, int>;

/// Lattice path from (0,0) to (n,n) with steps N=(0,1), E=(1,0), D=(1,1),
/// never below the diagonal and with no D step starting on it.
class SchroderPath {
 public:
  SchroderPath() = default;
  /// Accepts any mix of case over {n,e,d}; throws ParseError if invalid.
  explicit SchroderPath(std::string steps);

  /// N^n E^n
  static SchroderPath full(int n);
  /// (NE)^n
  static SchroderPath staircase(int n);

  const std::string& steps() const { return steps_; }
  int length() const { return n_; }
  bool is_dyck() const { return steps_.find('D') == std::string::npos; }
  /// Lowercase step word.
  std::string word() const;

  /// Path points including both endpoints.
  std::vector<std::pair<int, int>> points() const;

  /// h(i) for columns 1..n (index 0 unused).
  std::vector<int> heights() const;
  /// j(i) = h(i+1) - h(i) for columns 1..n-1 (index 0 unused).
  std::vector<int> jumps() const;
  /// Columns containing a diagonal step, ascending.
  std::vector<int> diagonal_columns() const;
  /// Boxes (i, j) of the diagonal steps.
  std::vector<Box> diagonal_boxes() const;
  /// Boxes (i, j), i < j, strictly under the path.
  std::vector<Box> boxes_under() const;
  bool is_under(int i, int j) const;
  /// Boxes (i, j) such that (i-1, j-1) is on the path and followed by E then N.
  std::vector<Box> outer_corners() const;

  /// Splits at interior diagonal points; each piece is a path in its own right.
  std::vector<SchroderPath> components() const;
  /// Touches the diagonal only at its endpoints.
  bool is_connected() const;
  /// Connected, starts N D (or is the single-cell path NE), no outer corners.
  bool is_reduced() const;

  /// Index into steps() of the step leaving column i (the E or D at x = i-1).
  int exit_step(int column) const;

  friend auto operator<=>(const SchroderPath&, const SchroderPath&) = default;

 private:
  std::string steps_;
  int n_ = 0;
};

SchroderPath concat(const std::vector<SchroderPath>& parts);

std::vector<SchroderPath> all_schroder_paths(int n);
std::vector<SchroderPath> all_dyck_paths(int n);

}  // namespace llt
