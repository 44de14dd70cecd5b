#pragma once

#include <functional>
#include <string>
#include <vector>

#include "llt/lltgraph.hpp"
#include "llt/paths.hpp"
#include "llt/tableaux.hpp"
#include "llt/xqpoly.hpp"

namespace llt {

/// Blocks of a set partition of [n]; each block sorted, blocks ordered by
/// their minimum.
using SetPartition = std::vector<std::vector<int>>;

constexpr int kMaxPartitionSize = 12;

/// Visits all Bell(n) set partitions of [n] in restricted-growth order.
void for_each_set_partition(int n, const std::function<void(const SetPartition&)>& visit);
std::vector<SetPartition> set_partitions(int n);

enum class CumulantRoute { definition, moebius, connected };

std::string route_name(CumulantRoute r);

struct CumulantResult {
  XQPoly value;
  int n = 0;
  CumulantRoute route = CumulantRoute::definition;
  /// Set by the connected-subgraph route when the unit interval graph is
  /// disconnected (the value is then zero for n > 1).
  bool disconnected = false;
};

/// Set-partition sum of block LLT products weighted by the Moebius function
/// of the partition lattice, divided by (q-1)^(n-1). Block LLTs are memoized
/// within one call.
CumulantResult cumulant_def(const ShapeSequence& s, int nvars);

/// Recombines cumulants of every block: sum over set partitions of
/// (q-1)^(n - #blocks) times the product of block cumulants.
XQPoly llt_from_cumulants(const ShapeSequence& s, int nvars);

/// Sum over connected spanning edge subsets H of the unit interval graph of
/// (q-1)^(e(H)-n+1) times the strictly valid colorings of H.
CumulantResult kappa_connected(const SchroderPath& dyck, int nvars);

/// Sum over all spanning edge subsets H of q^e(H) times the strictly valid
/// colorings of H. Equals the unit-interval LLT polynomial at q+1.
XQPoly subgraph_expansion(const SchroderPath& dyck, int nvars);

/// A sequence of single cells whose LLT graph is isomorphic to the unit
/// interval graph of the Dyck path.
ShapeSequence unicellular_shapes(const SchroderPath& dyck);

/// The subgraph of the unit interval graph whose edges (all oriented from the
/// smaller vertex) are the given double edges turned into type-I edges.
LLTGraph strict_subgraph(int n, const std::vector<Edge>& edges);

}  // namespace llt
