#pragma once

#include <functional>
#include <string>
#include <vector>

#include "llt/lltgraph.hpp"
#include "llt/paths.hpp"
#include "llt/tableaux.hpp"
#include "llt/xqpoly.hpp"

namespace llt {

constexpr int kMaxTreeSize = 8;

/// parent[v] for v in 1..n, 0 for a root (parent[0] unused). Every
/// component is rooted at its smallest label.
class RootedForest {
 public:
  explicit RootedForest(std::vector<int> parent);
  /// Parent array "0,1,1,5,1,5".
  static RootedForest parse(const std::string& text);
  /// Roots each component of the edge set at its minimum.
  static RootedForest from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  int size() const { return n_; }
  int parent(int v) const { return parent_[static_cast<size_t>(v)]; }
  /// Children in increasing label order.
  const std::vector<int>& children(int v) const { return children_[static_cast<size_t>(v)]; }
  std::vector<int> roots() const;
  bool is_tree() const { return roots().size() == 1; }
  int edge_count() const { return n_ - static_cast<int>(roots().size()); }
  /// Vertex sets of the components, ordered by minimum.
  std::vector<std::vector<int>> components() const;
  /// The component as a tree on 1..k, labels renumbered in increasing order.
  RootedForest component_tree(const std::vector<int>& vertices) const;
  std::string to_string() const;

  friend bool operator==(const RootedForest& a, const RootedForest& b) { return a.parent_ == b.parent_; }
  friend auto operator<=>(const RootedForest& a, const RootedForest& b) { return a.parent_ <=> b.parent_; }

 private:
  int n_ = 0;
  std::vector<int> parent_;
  std::vector<std::vector<int>> children_;
};

/// Cayley trees on [n] (rooted at 1), from Pruefer sequences.
void for_each_tree(int n, const std::function<void(const RootedForest&)>& visit);
std::vector<RootedForest> enumerate_trees(int n);
/// All acyclic edge subsets of K_n.
void for_each_forest(int n, const std::function<void(const RootedForest&)>& visit);
std::vector<RootedForest> enumerate_forests(int n);

struct Strip {
  int start_depth = 0;
  /// Top to bottom; each vertex is the parent of the next.
  std::vector<int> vertices;

  friend bool operator==(const Strip&, const Strip&) = default;
};

struct StripSequence {
  std::vector<Strip> strips;

  int vertex_count() const;
  std::string to_string() const;
  friend bool operator==(const StripSequence&, const StripSequence&) = default;
};

/// Greedy smallest-child descents; after each strip, backtracks to the most
/// recently visited vertex with unvisited children.
StripSequence nu_of_tree(const RootedForest& tree);

/// Single columns whose cell contents increase by one per depth level (so
/// vertices at equal depth share a content), shifted to start at row 1.
ShapeSequence strips_to_shapes(const StripSequence& s);

/// A Schroeder path with box (i, i) carrying labels[i-1].
struct LabeledPath {
  SchroderPath path;
  std::vector<int> labels;

  std::string to_string() const;
  friend bool operator==(const LabeledPath&, const LabeledPath&) = default;
  friend auto operator<=>(const LabeledPath&, const LabeledPath&) = default;
};

LabeledPath tree_to_path(const RootedForest& tree);
/// Inverse of tree_to_path. With no labels the diagonal is read as 1..n.
/// Throws NotReduced unless the path is reduced and the labels match a tree.
RootedForest path_to_tree(const LabeledPath& p);
RootedForest path_to_tree(const SchroderPath& p);

/// Type-I edge i -> j per diagonal step in box (i, j), double edge (i, j)
/// per box strictly under the path.
LLTGraph graph_of_path(const SchroderPath& p);

class ParkingFunction {
 public:
  /// Values f(1..m) in [1, m]; throws InvalidParkingFunction.
  explicit ParkingFunction(std::vector<int> values);
  static ParkingFunction parse(const std::string& text);

  const std::vector<int>& values() const { return values_; }
  int cars() const { return static_cast<int>(values_.size()); }
  std::string to_string() const;

  friend auto operator<=>(const ParkingFunction&, const ParkingFunction&) = default;

 private:
  std::vector<int> values_;
};

std::vector<ParkingFunction> all_parking_functions(int cars);

/// P_f: car k+1 labels a north step in column f(k); a leading cell labeled 1
/// is added and every "en" becomes "d".
LabeledPath pf_to_path(const ParkingFunction& f);
/// Inverse of pf_to_path; throws InvalidParkingFunction when the labels do
/// not increase up the columns.
ParkingFunction path_to_pf(const LabeledPath& p);
RootedForest pf_to_tree(const ParkingFunction& f);
ParkingFunction tree_to_pf(const RootedForest& tree);

/// LLT of a tree through its strip shapes; for a forest, the product over
/// components (each renumbered in increasing order).
XQPoly forest_llt(const RootedForest& f, int nvars);

}  // namespace llt
