#include "llt/errors.hpp"
#include "llt/lltgraph.hpp"

namespace llt {

namespace {

std::string site_text(const std::vector<int>& site) {
  std::string s = "[";
  for (size_t i = 0; i < site.size(); ++i) s += (i ? "," : "") + std::to_string(site[i]);
  return s + "]";
}

void require(bool ok, const char* rule, const std::vector<int>& site, const std::string& what) {
  if (!ok) throw PatternMismatch(std::string("rule ") + rule + " at " + site_text(site) + ": " + what);
}

void require_arity(const std::vector<int>& site, size_t n, const char* rule, const LLTGraph& g) {
  require(site.size() == n, rule, site, "expected " + std::to_string(n) + " vertices");
  for (int v : site) require(v >= 1 && v <= g.nverts, rule, site, "vertex out of range");
}

}  // namespace

GraphRule parse_graph_rule(const std::string& s) {
  if (s.size() == 1) {
    switch (s[0]) {
      case 'A': case 'a': return GraphRule::A;
      case 'B': case 'b': return GraphRule::B;
      case 'C': case 'c': return GraphRule::C;
      case 'D': case 'd': return GraphRule::D;
      case 'E': case 'e': return GraphRule::E;
      case 'F': case 'f': return GraphRule::F;
      default: break;
    }
  }
  throw ParseError("unknown graph relation '" + s + "'");
}

GraphCombo apply_relation(const LLTGraph& g, GraphRule rule, const std::vector<int>& site) {
  GraphCombo out;
  switch (rule) {
    case GraphRule::A: {
      require_arity(site, 2, "A", g);
      const int u = site[0], v = site[1];
      require(u != v && !g.adjacent(u, v), "A", site, "vertices must be distinct and non-adjacent");
      LLTGraph strict = g;
      strict.e1.emplace(u, v);
      LLTGraph weak = g;
      weak.e2.emplace(v, u);
      out.add(strict, QPoly::constant(1));
      out.add(weak, QPoly::constant(1));
      return out;
    }
    case GraphRule::B:
    case GraphRule::C: {
      const char* name = rule == GraphRule::B ? "B" : "C";
      require_arity(site, 2, name, g);
      const int u = site[0], v = site[1];
      require(g.ed.count({u, v}) == 1, name, site, "no double edge");
      LLTGraph base = g;
      base.ed.erase({u, v});
      LLTGraph strict = base;
      strict.e1.emplace(u, v);
      if (rule == GraphRule::B) {
        LLTGraph weak = base;
        weak.e2.emplace(v, u);
        out.add(strict, QPoly::q());
        out.add(weak, QPoly::constant(1));
      } else {
        out.add(strict, QPoly{-1, 1});
        out.add(base, QPoly::constant(1));
      }
      return out;
    }
    case GraphRule::D:
    case GraphRule::E: {
      const char* name = rule == GraphRule::D ? "D" : "E";
      require_arity(site, 3, name, g);
      const int u = site[0], w = site[1], v = site[2];
      require(u != w && w != v && u != v, name, site, "vertices must be distinct");
      LLTGraph h = g;
      EdgeSet& es = rule == GraphRule::D ? h.e2 : h.e1;
      require(es.count({u, w}) && es.count({w, v}), name, site, "missing path edges");
      require(!es.count({u, v}), name, site, "closing edge already present");
      es.emplace(u, v);
      out.add(h, QPoly::constant(1));
      return out;
    }
    case GraphRule::F: {
      require(site.size() >= 2, "F", site, "cycle needs at least two vertices");
      for (int v : site) require(v >= 1 && v <= g.nverts, "F", site, "vertex out of range");
      bool has_strict = false;
      for (size_t i = 0; i < site.size(); ++i) {
        const Edge e{site[i], site[(i + 1) % site.size()]};
        const bool strict = g.e1.count(e) > 0;
        require(strict || g.e2.count(e) > 0, "F", site, "cycle edge missing");
        has_strict = has_strict || strict;
      }
      require(has_strict, "F", site, "cycle has no type-I edge");
      return out;
    }
  }
  return out;
}

GraphCombo apply_relation(const GraphCombo& c, GraphRule rule, const std::vector<int>& site) {
  GraphCombo out;
  for (const auto& [g, coeff] : c.terms()) {
    for (const auto& [h, k] : apply_relation(g, rule, site).terms()) out.add(h, coeff * k);
  }
  return out;
}

}  // namespace llt
