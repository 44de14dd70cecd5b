#pragma once

#include <map>
#include <string>
#include <vector>

#include "llt/paths.hpp"
#include "llt/qpoly.hpp"
#include "llt/xqpoly.hpp"

namespace llt {

class PathCombo {
 public:
  using TermMap = std::map<SchroderPath, QPoly>;

  PathCombo() = default;
  PathCombo(const SchroderPath& p, const QPoly& c) { add(p, c); }

  void add(const SchroderPath& p, const QPoly& c);
  PathCombo& operator+=(const PathCombo& o);
  const TermMap& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  QPoly coeff(const SchroderPath& p) const;
  friend bool operator==(const PathCombo&, const PathCombo&) = default;

 private:
  TermMap terms_;
};

/// S n e T -> (q-1) S d T + S e n T, where the n e pair turns at box (i, j).
PathCombo relation_A(const SchroderPath& p, Box box);
/// S n d R e e T -> q S d n R e e T; `box` holds the diagonal step, which
/// moves one row down. The two e steps leave columns j+1 and j+2 where S
/// ends at (i, j).
PathCombo relation_B(const SchroderPath& p, Box box);

/// Sum of c(q) LLT(P)(q) over the combination, each path through its graph.
XQPoly path_combo_eval(const PathCombo& c, int nvars);

/// (q+1)^(n-h) - 1
QPoly p_coefficient(int n, int h);

struct TraceStep {
  char rule = 'A';
  Box site;
  SchroderPath before;
  /// Coefficient of `before` in the shifted combination when the rule fired.
  QPoly weight;
  /// Unshifted relation coefficients.
  std::vector<std::pair<SchroderPath, QPoly>> after;
};

using DecompositionTrace = std::vector<TraceStep>;

struct Decomposition {
  /// Coefficients in the shifted variable: LLT_full(q+1) equals the sum of
  /// coeff(q) LLT(P)(q+1).
  PathCombo combo;
  DecompositionTrace trace;
};

constexpr int kMaxDecomposeSize = 7;

/// Column-by-column lowering of N^n E^n with relations A and B.
Decomposition decompose_full(int n, bool keep_trace = false);

/// Replays a trace from N^n E^n.
PathCombo replay_trace(int n, const DecompositionTrace& trace);

/// Every component of length >= 2 starts with N D and has no outer corner.
bool is_terminal(const SchroderPath& p);

/// Product over diagonal columns i of C(n-h(i), n-h(i+1)) q^j(i).
QPoly phi_coefficient(const SchroderPath& p);

/// Components sorted by length descending, then by step word.
SchroderPath canonical_blocks(const SchroderPath& p);

struct TheoremCheck {
  std::string name;
  bool equal = false;
  std::string detail;
};

struct TheoremReport {
  int n = 0;
  std::vector<TheoremCheck> checks;
  bool all_equal() const;
};

constexpr int kMaxTheoremSize = 6;

/// Runs every route to the cumulant and the forest identity at n variables.
TheoremReport verify_theorem(int n);

}  // namespace llt
