#pragma once

#include <functional>
#include <string>
#include <vector>

#include "llt/symmetric.hpp"
#include "llt/xqpoly.hpp"

namespace llt {

/// outer / inner with inner contained in outer row by row.
class SkewShape {
 public:
  SkewShape(Partition outer, Partition inner = {});

  const Partition& outer() const { return outer_; }
  const Partition& inner() const { return inner_; }
  int cell_count() const { return outer_.size() - inner_.size(); }
  bool contains(int row, int col) const;
  std::string to_string() const;

  friend bool operator==(const SkewShape&, const SkewShape&) = default;

 private:
  Partition outer_;
  Partition inner_;
};

/// A cell of shape number `seq` (1-based); rows and columns 1-based.
struct Cell {
  int seq = 1;
  int row = 1;
  int col = 1;

  friend bool operator==(const Cell&, const Cell&) = default;
};

/// col - row. Cells with larger row index sit higher in the French drawing,
/// so the cell directly below a cell has content larger by one.
inline int content(const Cell& c) { return c.col - c.row; }
inline int shifted_content(const Cell& c, int n) { return n * content(c) + c.seq; }

class ShapeSequence {
 public:
  explicit ShapeSequence(std::vector<SkewShape> shapes);

  /// Parses "(3,2)/(1);(1,1)".
  static ShapeSequence parse(const std::string& text);
  /// Single cells with the given contents, one per shape.
  static ShapeSequence unicellular(const std::vector<int>& contents);

  const std::vector<SkewShape>& shapes() const { return shapes_; }
  int length() const { return static_cast<int>(shapes_.size()); }
  int cell_count() const { return static_cast<int>(cells_.size()); }
  /// Cells ordered by sequence index, then content descending, then row.
  const std::vector<Cell>& cells() const { return cells_; }
  /// Subsequence at the given 0-based positions, in the given order.
  ShapeSequence subsequence(const std::vector<int>& positions) const;
  std::string to_string() const;

 private:
  std::vector<SkewShape> shapes_;
  std::vector<Cell> cells_;
};

/// entries[i] fills cells()[i].
using Tableau = std::vector<int>;

/// Visits every semistandard filling with entries in [1, nvars], in
/// lexicographic order of the cell list. Rows weakly increase with column,
/// columns strictly increase with row.
void enumerate_ssyt(const ShapeSequence& s, int nvars, const std::function<void(const Tableau&)>& visit);
long long count_ssyt(const ShapeSequence& s, int nvars);

int inversions(const Tableau& t, const ShapeSequence& s);

/// Sum over semistandard fillings of q^inv x^T.
XQPoly llt_ssyt(const ShapeSequence& s, int nvars);

}  // namespace llt
