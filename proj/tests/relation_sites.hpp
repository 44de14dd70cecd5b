#pragma once

// Soundness sweep for the graph relations: every rule is applied at its
// pattern on vertices 1..k, with extra edges on the remaining vertex pairs,
// and both sides are evaluated by the brute-force coloring oracle.

#include <random>
#include <set>
#include <string>
#include <vector>

#include "llt/lltgraph.hpp"
#include "oracles.hpp"

namespace sites {

struct Pattern {
  llt::LLTGraph graph;
  std::vector<int> site;
  /// Pairs {min, max} that must not receive extra edges.
  std::set<llt::Edge> reserved;
};

inline llt::Edge key(int u, int v) { return {std::min(u, v), std::max(u, v)}; }

inline std::vector<Pattern> patterns(llt::GraphRule rule) {
  using llt::GraphRule;
  std::vector<Pattern> out;
  switch (rule) {
    case GraphRule::A:
      out.push_back({llt::LLTGraph(2), {1, 2}, {key(1, 2)}});
      break;
    case GraphRule::B:
    case GraphRule::C:
      out.push_back({llt::LLTGraph(2, {}, {}, {{1, 2}}), {1, 2}, {key(1, 2)}});
      out.push_back({llt::LLTGraph(2, {}, {}, {{2, 1}}), {2, 1}, {key(1, 2)}});
      break;
    case GraphRule::D:
      out.push_back({llt::LLTGraph(3, {}, {{1, 2}, {2, 3}}, {}), {1, 2, 3}, {key(1, 2), key(2, 3), key(1, 3)}});
      out.push_back({llt::LLTGraph(3, {}, {{3, 1}, {1, 2}}, {}), {3, 1, 2}, {key(1, 2), key(2, 3), key(1, 3)}});
      break;
    case GraphRule::E:
      out.push_back({llt::LLTGraph(3, {{1, 2}, {2, 3}}, {}, {}), {1, 2, 3}, {key(1, 2), key(2, 3), key(1, 3)}});
      out.push_back({llt::LLTGraph(3, {{2, 3}, {3, 1}}, {}, {}), {2, 3, 1}, {key(1, 2), key(2, 3), key(1, 3)}});
      break;
    case GraphRule::F:
      for (int k = 2; k <= 4; ++k) {
        for (int mask = 1; mask < (1 << k); ++mask) {
          Pattern p{llt::LLTGraph(k), {}, {}};
          for (int i = 0; i < k; ++i) {
            const int u = i + 1, v = (i + 1) % k + 1;
            p.site.push_back(u);
            p.reserved.insert(key(u, v));
            if (mask >> i & 1) p.graph.e1.emplace(u, v);
            else p.graph.e2.emplace(u, v);
          }
          out.push_back(p);
        }
      }
      break;
  }
  return out;
}

inline oracle::OGraph to_oracle(const llt::LLTGraph& g) {
  oracle::OGraph o;
  o.n = g.nverts;
  o.e1.assign(g.e1.begin(), g.e1.end());
  o.e2.assign(g.e2.begin(), g.e2.end());
  o.ed.assign(g.ed.begin(), g.ed.end());
  return o;
}

/// Sets the edge on pair p (u < v) to one of 7 states: none, or one of
/// three types in either direction.
inline void put_edge(llt::LLTGraph& g, llt::Edge p, int state) {
  if (state == 0) return;
  const bool fwd = state % 2 == 1;
  const llt::Edge e = fwd ? p : llt::Edge{p.second, p.first};
  switch ((state - 1) / 2) {
    case 0: g.e1.insert(e); break;
    case 1: g.e2.insert(e); break;
    default: g.ed.insert(e); break;
  }
}

struct Report {
  long long checked = 0;
  long long failed = 0;
  std::string first_failure;
};

/// combo_eval-equivalent computed entirely with the oracle.
inline oracle::Flat oracle_combo(const llt::GraphCombo& c, int nvars) {
  oracle::Flat out;
  for (const auto& [g, coeff] : c.terms()) {
    const auto val = oracle::graph(to_oracle(g), nvars);
    for (int d = 0; d <= coeff.degree(); ++d) {
      out = oracle::plus(out, oracle::qshift(val, d), coeff.coeff(d).convert_to<long long>());
    }
  }
  return out;
}

/// Exhaustive over extra edges while there are at most `exhaustive_pairs`
/// free pairs, otherwise `samples` random fillings.
inline Report sweep(llt::GraphRule rule, int max_ambient, int exhaustive_pairs, int samples, unsigned seed) {
  Report rep;
  std::mt19937 rng(seed);
  for (const Pattern& pat : patterns(rule)) {
    for (int a = 0; a <= max_ambient; ++a) {
      const int m = pat.graph.nverts + a;
      std::vector<llt::Edge> free;
      for (int u = 1; u <= m; ++u) {
        for (int v = u + 1; v <= m; ++v) {
          if (!pat.reserved.count({u, v})) free.emplace_back(u, v);
        }
      }
      auto check = [&](const std::vector<int>& states) {
        llt::LLTGraph g = pat.graph;
        g.nverts = m;
        for (size_t i = 0; i < free.size(); ++i) put_edge(g, free[i], states[i]);
        const auto after = llt::apply_relation(g, rule, pat.site);
        ++rep.checked;
        if (oracle::graph(to_oracle(g), m) != oracle_combo(after, m)) {
          if (!rep.failed++) rep.first_failure = g.to_string();
        }
      };
      std::vector<int> states(free.size(), 0);
      if (static_cast<int>(free.size()) <= exhaustive_pairs) {
        while (true) {
          check(states);
          size_t i = 0;
          while (i < states.size() && states[i] == 6) states[i++] = 0;
          if (i == states.size()) break;
          ++states[i];
        }
      } else {
        std::uniform_int_distribution<int> pick(0, 6);
        for (int s = 0; s < samples; ++s) {
          for (int& x : states) x = pick(rng);
          check(states);
        }
      }
    }
  }
  return rep;
}

}  // namespace sites
