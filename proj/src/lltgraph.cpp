#include "llt/lltgraph.hpp"

#include <algorithm>
#include <cctype>
#include <regex>
#include <thread>

#include "llt/errors.hpp"

namespace llt {

LLTGraph::LLTGraph(int n, EdgeSet type1, EdgeSet type2, EdgeSet dbl)
    : nverts(n), e1(std::move(type1)), e2(std::move(type2)), ed(std::move(dbl)) {
  if (n < 1) throw Error("graph needs at least one vertex");
  for (const EdgeSet* s : {&e1, &e2, &ed}) {
    for (auto [u, v] : *s) {
      if (u == v || u < 1 || v < 1 || u > n || v > n) {
        throw Error("invalid edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
      }
    }
  }
}

namespace {

EdgeSet parse_edges(const std::string& body) {
  EdgeSet out;
  static const std::regex pair_re(R"(\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\))");
  auto begin = std::sregex_iterator(body.begin(), body.end(), pair_re);
  std::string leftover = std::regex_replace(body, pair_re, "");
  if (std::any_of(leftover.begin(), leftover.end(), [](char c) { return !std::isspace(static_cast<unsigned char>(c)); })) {
    throw ParseError("unexpected text in edge list: " + body);
  }
  for (auto it = begin; it != std::sregex_iterator(); ++it) out.emplace(std::stoi((*it)[1]), std::stoi((*it)[2]));
  return out;
}

std::string edges_to_string(const EdgeSet& s) {
  std::string out;
  for (auto [u, v] : s) out += "(" + std::to_string(u) + "," + std::to_string(v) + ")";
  return out;
}

}  // namespace

LLTGraph LLTGraph::parse(const std::string& text) {
  int n = -1;
  EdgeSet sets[3];
  size_t start = 0;
  while (start <= text.size()) {
    size_t end = text.find(';', start);
    if (end == std::string::npos) end = text.size();
    std::string field = text.substr(start, end - start);
    start = end + 1;
    auto first = field.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    field = field.substr(first);
    if (field.rfind("n=", 0) == 0) {
      try {
        n = std::stoi(field.substr(2));
      } catch (const std::exception&) {
        throw ParseError("bad vertex count in graph text: " + text);
      }
      continue;
    }
    auto colon = field.find(':');
    if (colon == std::string::npos) throw ParseError("bad field '" + field + "' in graph text");
    std::string key = field.substr(0, colon);
    key.erase(std::remove_if(key.begin(), key.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); }), key.end());
    int slot = key == "e1" ? 0 : key == "e2" ? 1 : key == "ed" ? 2 : -1;
    if (slot < 0) throw ParseError("unknown edge kind '" + key + "'");
    sets[slot] = parse_edges(field.substr(colon + 1));
  }
  if (n < 1) throw ParseError("graph text must give n=<vertices>");
  try {
    return LLTGraph(n, sets[0], sets[1], sets[2]);
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

std::string LLTGraph::to_string() const {
  return "n=" + std::to_string(nverts) + "; e1:" + edges_to_string(e1) + "; e2:" + edges_to_string(e2) +
         "; ed:" + edges_to_string(ed);
}

bool LLTGraph::adjacent(int u, int v) const {
  for (const EdgeSet* s : {&e1, &e2, &ed}) {
    if (s->count({u, v}) || s->count({v, u})) return true;
  }
  return false;
}

namespace {

void eval_range(const LLTGraph& g, int nvars, int first_lo, int first_hi, MonomialCounter& acc) {
  const int n = g.nverts;
  std::vector<Edge> strict(g.e1.begin(), g.e1.end());
  std::vector<Edge> weak(g.e2.begin(), g.e2.end());
  std::vector<Edge> dbl(g.ed.begin(), g.ed.end());
  std::vector<int> f(static_cast<size_t>(n) + 1, 1);
  f[1] = first_lo;
  Exponent e(static_cast<size_t>(nvars), 0);
  auto at = [&](int v) { return f[static_cast<size_t>(v)]; };
  while (true) {
    bool ok = true;
    for (auto [u, v] : strict) {
      if (!(at(u) > at(v))) {
        ok = false;
        break;
      }
    }
    if (ok) {
      for (auto [u, v] : weak) {
        if (!(at(u) >= at(v))) {
          ok = false;
          break;
        }
      }
    }
    if (ok) {
      int qdeg = 0;
      for (auto [u, v] : dbl) qdeg += at(u) > at(v) ? 1 : 0;
      std::fill(e.begin(), e.end(), 0);
      for (int v = 1; v <= n; ++v) ++e[static_cast<size_t>(at(v)) - 1];
      acc.add(e, qdeg);
    }
    // Odometer with vertex n fastest, vertex 1 bounded by the range.
    int v = n;
    while (v >= 1) {
      const int hi = v == 1 ? first_hi : nvars;
      if (f[static_cast<size_t>(v)] < hi) {
        ++f[static_cast<size_t>(v)];
        break;
      }
      f[static_cast<size_t>(v)] = 1;
      --v;
    }
    if (v < 1) break;
  }
}

}  // namespace

XQPoly llt_graph_eval(const LLTGraph& g, int nvars, int threads) {
  threads = std::clamp(threads, 1, nvars);
  if (threads == 1) {
    MonomialCounter acc(nvars);
    eval_range(g, nvars, 1, nvars, acc);
    return acc.to_poly();
  }
  std::vector<MonomialCounter> parts(static_cast<size_t>(threads), MonomialCounter(nvars));
  {
    std::vector<std::jthread> workers;
    for (int t = 0; t < threads; ++t) {
      const int lo = 1 + t * nvars / threads;
      const int hi = (t + 1) * nvars / threads;
      if (lo > hi) continue;
      workers.emplace_back([&, t, lo, hi] { eval_range(g, nvars, lo, hi, parts[static_cast<size_t>(t)]); });
    }
  }
  for (size_t t = 1; t < parts.size(); ++t) parts[0].merge(parts[t]);
  return parts[0].to_poly();
}

LLTGraph build_graph_from_shapes(const ShapeSequence& s) {
  const auto& cells = s.cells();
  const int n = s.length();
  auto index_of = [&](int k, int r, int c) {
    for (size_t i = 0; i < cells.size(); ++i) {
      if (cells[i].seq == k && cells[i].row == r && cells[i].col == c) return static_cast<int>(i) + 1;
    }
    return 0;
  };
  EdgeSet e1, e2, ed;
  for (size_t a = 0; a < cells.size(); ++a) {
    const Cell& c = cells[a];
    const int u = static_cast<int>(a) + 1;
    if (int below = index_of(c.seq, c.row - 1, c.col)) e1.emplace(u, below);
    if (int left = index_of(c.seq, c.row, c.col - 1)) e2.emplace(u, left);
    for (size_t b = 0; b < cells.size(); ++b) {
      const int d = shifted_content(cells[b], n) - shifted_content(c, n);
      if (d > 0 && d < n) ed.emplace(u, static_cast<int>(b) + 1);
    }
  }
  return LLTGraph(s.cell_count(), e1, e2, ed);
}

LLTGraph unit_interval_graph(const SchroderPath& dyck) {
  if (!dyck.is_dyck()) throw Error("unit interval graph needs a Dyck path, got " + dyck.word());
  EdgeSet ed;
  for (auto box : dyck.boxes_under()) ed.insert(box);
  return LLTGraph(dyck.length(), {}, {}, ed);
}

void GraphCombo::add(const LLTGraph& g, const QPoly& c) {
  if (c.is_zero()) return;
  if (!terms_.empty() && terms_.begin()->first.nverts != g.nverts) throw Error("graph combination mixes vertex counts");
  auto [it, inserted] = terms_.try_emplace(g, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

GraphCombo& GraphCombo::operator+=(const GraphCombo& o) {
  for (const auto& [g, c] : o.terms_) add(g, c);
  return *this;
}

XQPoly combo_eval(const GraphCombo& c, int nvars, int threads) {
  XQPoly out(nvars);
  for (const auto& [g, coeff] : c.terms()) out += llt_graph_eval(g, nvars, threads) * coeff;
  return out;
}

}  // namespace llt
