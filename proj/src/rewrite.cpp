#include "llt/rewrite.hpp"

#include <algorithm>

#include "llt/cumulant.hpp"
#include "llt/errors.hpp"
#include "llt/lltgraph.hpp"
#include "llt/trees.hpp"

namespace llt {

void PathCombo::add(const SchroderPath& p, const QPoly& c) {
  if (c.is_zero()) return;
  if (!terms_.empty() && terms_.begin()->first.length() != p.length()) throw Error("path combination mixes lengths");
  auto [it, inserted] = terms_.try_emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

PathCombo& PathCombo::operator+=(const PathCombo& o) {
  for (const auto& [p, c] : o.terms_) add(p, c);
  return *this;
}

QPoly PathCombo::coeff(const SchroderPath& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? QPoly() : it->second;
}

namespace {

std::string box_text(Box b) { return "(" + std::to_string(b.first) + "," + std::to_string(b.second) + ")"; }

/// Index of the step starting at (x, y), or -1.
int step_at(const SchroderPath& p, int x, int y) {
  const auto pts = p.points();
  for (size_t k = 0; k + 1 < pts.size(); ++k) {
    if (pts[k] == std::pair{x, y}) return static_cast<int>(k);
  }
  return -1;
}

}  // namespace

PathCombo relation_A(const SchroderPath& p, Box box) {
  const auto [i, j] = box;
  const std::string& s = p.steps();
  const int k = step_at(p, i - 1, j - 1);
  if (k < 0 || s[static_cast<size_t>(k)] != 'N' || static_cast<size_t>(k) + 1 >= s.size() || s[static_cast<size_t>(k) + 1] != 'E') {
    throw PatternMismatch("relation A: no n e turn at box " + box_text(box) + " of " + p.word());
  }
  if (j <= i) throw PatternMismatch("relation A: box " + box_text(box) + " touches the diagonal");
  const std::string head = s.substr(0, static_cast<size_t>(k));
  const std::string tail = s.substr(static_cast<size_t>(k) + 2);
  PathCombo out;
  out.add(SchroderPath(head + "D" + tail), QPoly{-1, 1});
  out.add(SchroderPath(head + "EN" + tail), QPoly::constant(1));
  return out;
}

PathCombo relation_B(const SchroderPath& p, Box box) {
  const auto [c, r] = box;
  const std::string& s = p.steps();
  const int k = step_at(p, c - 1, r - 1);
  if (k < 1 || s[static_cast<size_t>(k)] != 'D' || s[static_cast<size_t>(k) - 1] != 'N') {
    throw PatternMismatch("relation B: no n d at box " + box_text(box) + " of " + p.word());
  }
  const int i = c - 1, j = r - 2;
  if (j <= i) throw PatternMismatch("relation B: diagonal step at " + box_text(box) + " cannot move down");
  if (j + 2 > p.length()) throw PatternMismatch("relation B: no columns " + std::to_string(j + 1) + "," + std::to_string(j + 2));
  const int e1 = p.exit_step(j + 1), e2 = p.exit_step(j + 2);
  if (s[static_cast<size_t>(e1)] != 'E' || s[static_cast<size_t>(e2)] != 'E' || e2 != e1 + 1) {
    throw PatternMismatch("relation B: columns " + std::to_string(j + 1) + "," + std::to_string(j + 2) + " of " + p.word() +
                          " do not end in e e");
  }
  std::string t = s;
  std::swap(t[static_cast<size_t>(k) - 1], t[static_cast<size_t>(k)]);
  return PathCombo(SchroderPath(t), QPoly::q());
}

XQPoly path_combo_eval(const PathCombo& c, int nvars) {
  XQPoly out(nvars);
  for (const auto& [p, coeff] : c.terms()) out += llt_graph_eval(graph_of_path(p), nvars) * coeff;
  return out;
}

QPoly p_coefficient(int n, int h) {
  if (h < 1 || h > n) throw Error("p_coefficient needs 1 <= h <= n");
  return binomial_tail(static_cast<unsigned>(n - h));
}

namespace {

bool has_diagonal_in(const SchroderPath& p, int column) {
  const auto cols = p.diagonal_columns();
  return std::find(cols.begin(), cols.end(), column) != cols.end();
}

class Decomposer {
 public:
  Decomposer(int n, bool keep) : n_(n), keep_(keep) {}

  Decomposition run() {
    PathCombo combo(SchroderPath::full(n_), QPoly::constant(1));
    for (int col = 1; col <= n_; ++col) {
      PathCombo next;
      for (const auto& [p, coeff] : combo.terms()) {
        for (int K = 0; K <= coeff.degree(); ++K) {
          if (coeff.coeff(K) != 0) lower(p, QPoly::monomial(coeff.coeff(K), K), K, col, next);
        }
      }
      combo = std::move(next);
    }
    return Decomposition{combo, std::move(trace_)};
  }

 private:
  // Target height of column `col` for a term carrying q^K.
  int target(const SchroderPath& p, int K, int col) const {
    const int m = col - 1;
    const auto h = p.heights();
    if (m >= 1 && has_diagonal_in(p, m)) {
      int earlier = 0;
      for (int s : p.diagonal_columns()) {
        if (s < m) earlier += h[static_cast<size_t>(s) + 1] - h[static_cast<size_t>(s)];
      }
      const int k = K - earlier;
      if (k < 1 || k > n_ - h[static_cast<size_t>(m)]) {
        throw Error("decomposition: q^" + std::to_string(K) + " on " + p.word() + " gives jump " + std::to_string(k));
      }
      return h[static_cast<size_t>(m)] + k;
    }
    return std::max(m >= 1 ? h[static_cast<size_t>(m)] : 0, col);
  }

  void record(char rule, Box site, const SchroderPath& before, const QPoly& weight, const PathCombo& after) {
    if (!keep_) return;
    TraceStep st{rule, site, before, weight, {}};
    for (const auto& [q, c] : after.terms()) st.after.emplace_back(q, c);
    trace_.push_back(std::move(st));
  }

  void lower(const SchroderPath& p, const QPoly& w, int K, int col, PathCombo& out) {
    const int T = target(p, K, col);
    const int H = p.heights()[static_cast<size_t>(col)];
    if (T > H) throw Error("decomposition: column " + std::to_string(col) + " of " + p.word() + " is below its target");
    SchroderPath cur = p;
    for (int level = H; level > T; --level) {
      const PathCombo a = relation_A(cur, {col, level});
      record('A', {col, level}, cur, w, a);
      SchroderPath dpath, epath;
      for (const auto& [q, c] : a.terms()) (has_diagonal_in(q, col) ? dpath : epath) = q;
      QPoly dw = w * QPoly::q();
      for (int r = level; r > T + 1; --r) {
        const PathCombo b = relation_B(dpath, {col, r});
        record('B', {col, r}, dpath, dw, b);
        dpath = b.terms().begin()->first;
        dw = dw * QPoly{1, 1};
      }
      out.add(dpath, dw);
      cur = epath;
    }
    out.add(cur, w);
  }

  int n_;
  bool keep_;
  DecompositionTrace trace_;
};

}  // namespace

Decomposition decompose_full(int n, bool keep_trace) {
  if (n < 2 || n > kMaxDecomposeSize) {
    throw SizeGuard("decomposition supported for 2 <= n <= " + std::to_string(kMaxDecomposeSize));
  }
  return Decomposer(n, keep_trace).run();
}

PathCombo replay_trace(int n, const DecompositionTrace& trace) {
  PathCombo combo(SchroderPath::full(n), QPoly::constant(1));
  for (const auto& st : trace) {
    combo.add(st.before, -st.weight);
    for (const auto& [p, c] : st.after) combo.add(p, st.weight * c.shift(1));
  }
  return combo;
}

bool is_terminal(const SchroderPath& p) {
  const auto comps = p.components();
  return std::all_of(comps.begin(), comps.end(), [](const SchroderPath& c) { return c.is_reduced(); });
}

QPoly phi_coefficient(const SchroderPath& p) {
  const int n = p.length();
  const auto h = p.heights();
  QPoly out = QPoly::constant(1);
  for (int i : p.diagonal_columns()) {
    const int hi = h[static_cast<size_t>(i)], next = h[static_cast<size_t>(i) + 1];
    out = out * QPoly::monomial(binomial(n - hi, n - next), next - hi);
  }
  return out;
}

SchroderPath canonical_blocks(const SchroderPath& p) {
  auto comps = p.components();
  std::sort(comps.begin(), comps.end(), [](const SchroderPath& a, const SchroderPath& b) {
    if (a.length() != b.length()) return a.length() > b.length();
    return a.steps() < b.steps();
  });
  return concat(comps);
}

bool TheoremReport::all_equal() const {
  return std::all_of(checks.begin(), checks.end(), [](const TheoremCheck& c) { return c.equal; });
}

namespace {

std::string exponent_text(const Exponent& e) {
  std::string s = "[";
  for (size_t i = 0; i < e.size(); ++i) s += (i ? "," : "") + std::to_string(e[i]);
  return s + "]";
}

TheoremCheck compare(const std::string& name, const XQPoly& a, const XQPoly& b) {
  auto diff = XQPoly::first_difference(a, b);
  if (!diff) return {name, true, "equal"};
  return {name, false,
          "x^" + exponent_text(*diff) + ": " + a.coeff(*diff).to_string() + " vs " + b.coeff(*diff).to_string()};
}

using BlockMap = std::map<SchroderPath, QPoly>;

TheoremCheck compare_blocks(const std::string& name, const BlockMap& a, const BlockMap& b) {
  for (const auto& [p, c] : a) {
    auto it = b.find(p);
    const QPoly other = it == b.end() ? QPoly() : it->second;
    if (other != c) return {name, false, p.word() + ": " + c.to_string() + " vs " + other.to_string()};
  }
  for (const auto& [p, c] : b) {
    if (!a.count(p)) return {name, false, p.word() + ": 0 vs " + c.to_string()};
  }
  return {name, true, std::to_string(a.size()) + " block shapes"};
}

}  // namespace

TheoremReport verify_theorem(int n) {
  if (n < 2 || n > kMaxTheoremSize) throw SizeGuard("theorem check supported for 2 <= n <= " + std::to_string(kMaxTheoremSize));
  TheoremReport report{n, {}};
  const int N = n;

  const XQPoly kappa = cumulant_def(ShapeSequence::unicellular(std::vector<int>(static_cast<size_t>(n), 0)), N).value;

  XQPoly trees(N);
  for_each_tree(n, [&](const RootedForest& t) { trees += forest_llt(t, N); });
  report.checks.push_back(compare("trees vs cumulant", trees, kappa));

  XQPoly pfs(N);
  for (const auto& f : all_parking_functions(n - 1)) pfs += llt_graph_eval(graph_of_path(pf_to_path(f).path), N);
  report.checks.push_back(compare("parking functions vs cumulant", pfs, kappa));

  const XQPoly full = llt_graph_eval(unit_interval_graph(SchroderPath::full(n)), N).shift_q(1);
  XQPoly forests(N);
  BlockMap forest_blocks;
  for_each_forest(n, [&](const RootedForest& f) {
    const QPoly weight = QPoly::monomial(1, f.edge_count());
    forests += forest_llt(f, N).shift_q(1) * weight;
    std::vector<SchroderPath> blocks;
    for (const auto& comp : f.components()) blocks.push_back(tree_to_path(f.component_tree(comp)).path);
    BlockMap::mapped_type& slot = forest_blocks[canonical_blocks(concat(blocks))];
    slot += weight;
  });
  report.checks.push_back(compare("forests vs full path at q+1", forests, full));

  const Decomposition d = decompose_full(n);
  XQPoly dec(N);
  BlockMap path_blocks;
  bool terminal = true, phi_ok = true;
  std::string bad;
  for (const auto& [p, c] : d.combo.terms()) {
    dec += llt_graph_eval(graph_of_path(p), N).shift_q(1) * c;
    path_blocks[canonical_blocks(p)] += c;
    if (!is_terminal(p) && terminal) {
      terminal = false;
      bad = p.word();
    }
    if (phi_coefficient(p) != c && phi_ok) {
      phi_ok = false;
      if (terminal) bad = p.word() + ": " + c.to_string() + " vs " + phi_coefficient(p).to_string();
    }
  }
  report.checks.push_back(compare("decomposition vs full path at q+1", dec, full));
  report.checks.push_back({"decomposition terminal", terminal, terminal ? std::to_string(d.combo.terms().size()) + " paths" : bad});
  report.checks.push_back({"decomposition coefficients vs phi", phi_ok, phi_ok ? "equal" : bad});
  report.checks.push_back(compare_blocks("terminal blocks vs forests", path_blocks, forest_blocks));
  return report;
}

}  // namespace llt
