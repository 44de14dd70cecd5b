#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "llt/paths.hpp"
#include "llt/tableaux.hpp"
#include "llt/xqpoly.hpp"

namespace llt {

using Edge = std::pair<int, int>;
using EdgeSet = std::set<Edge>;

/// Directed graph on vertices 1..nverts with type-I edges (weight
/// [f(u) > f(v)]), type-II edges ([f(u) >= f(v)]) and double edges
/// (q[f(u) > f(v)] + [f(u) <= f(v)]).
///
/// Parallel edges of different types are allowed; the relation engine
/// produces them (e.g. a type-I edge together with a reversed type-II edge).
struct LLTGraph {
  int nverts = 1;
  EdgeSet e1;
  EdgeSet e2;
  EdgeSet ed;

  LLTGraph() = default;
  explicit LLTGraph(int n, EdgeSet type1 = {}, EdgeSet type2 = {}, EdgeSet dbl = {});

  /// "n=4; e1:(1,2)(3,4); e2:; ed:(1,3)(2,4)"
  static LLTGraph parse(const std::string& text);
  std::string to_string() const;

  /// Any edge of any type between u and v, in either direction.
  bool adjacent(int u, int v) const;

  friend auto operator<=>(const LLTGraph&, const LLTGraph&) = default;
};

/// Coloring sum over f: [nverts] -> [nvars]. `threads` > 1 splits the
/// enumeration by the color of vertex 1.
XQPoly llt_graph_eval(const LLTGraph& g, int nvars, int threads = 1);

/// One vertex per cell (in ShapeSequence::cells() order). Type-I edges run
/// from a cell to the cell one row down in the same column, type-II edges
/// to the cell directly left, double edges join attacking pairs and point
/// from the smaller shifted content.
LLTGraph build_graph_from_shapes(const ShapeSequence& s);

/// Double edge (i, j) for every box under the Dyck path; nothing else.
LLTGraph unit_interval_graph(const SchroderPath& dyck);

class GraphCombo {
 public:
  using TermMap = std::map<LLTGraph, QPoly>;

  GraphCombo() = default;
  GraphCombo(const LLTGraph& g, const QPoly& c) { add(g, c); }

  void add(const LLTGraph& g, const QPoly& c);
  GraphCombo& operator+=(const GraphCombo& o);
  const TermMap& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

 private:
  TermMap terms_;
};

XQPoly combo_eval(const GraphCombo& c, int nvars, int threads = 1);

enum class GraphRule { A, B, C, D, E, F };

GraphRule parse_graph_rule(const std::string& s);

/// Rewrites one graph with a relation at an explicitly named site:
///   A (u,v): non-adjacent pair -> type-I u->v  +  type-II v->u
///   B (u,v): double u=>v -> q * type-I u->v  +  type-II v->u
///   C (u,v): double u=>v -> (q-1) * type-I u->v  +  edge removed
///   D (u,w,v): type-II u->w->v, adds type-II u->v
///   E (u,w,v): type-I u->w->v, adds type-I u->v
///   F (v1..vk): cycle of type-I/II edges with a type-I edge -> 0
/// Throws PatternMismatch when the configuration is absent.
GraphCombo apply_relation(const LLTGraph& g, GraphRule rule, const std::vector<int>& site);
/// Applies the relation to every term of the combination.
GraphCombo apply_relation(const GraphCombo& c, GraphRule rule, const std::vector<int>& site);

}  // namespace llt
