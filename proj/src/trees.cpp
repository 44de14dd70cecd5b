#include "llt/trees.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <queue>
#include <sstream>

#include "llt/errors.hpp"

namespace llt {

namespace {

std::vector<int> parse_int_list(const std::string& text, const char* what) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto first = item.find_first_not_of(" \t");
    auto last = item.find_last_not_of(" \t");
    if (first == std::string::npos) throw ParseError(std::string("empty entry in ") + what + " '" + text + "'");
    item = item.substr(first, last - first + 1);
    size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size()) throw ParseError(std::string("bad integer in ") + what + " '" + text + "'");
    out.push_back(v);
  }
  return out;
}

std::string join(const std::vector<int>& v, size_t from = 0) {
  std::string s;
  for (size_t i = from; i < v.size(); ++i) s += (i > from ? "," : "") + std::to_string(v[i]);
  return s;
}

void check_tree_size(int n) {
  if (n < 1 || n > kMaxTreeSize) throw SizeGuard("trees supported for 1 <= n <= " + std::to_string(kMaxTreeSize));
}

}  // namespace

RootedForest::RootedForest(std::vector<int> parent) : n_(static_cast<int>(parent.size())) {
  if (n_ < 1) throw Error("forest needs at least one vertex");
  parent_.assign(1, 0);
  parent_.insert(parent_.end(), parent.begin(), parent.end());
  children_.assign(static_cast<size_t>(n_) + 1, {});
  for (int v = 1; v <= n_; ++v) {
    const int p = parent_[static_cast<size_t>(v)];
    if (p < 0 || p > n_ || p == v) throw Error("invalid parent " + std::to_string(p) + " of vertex " + std::to_string(v));
    if (p) children_[static_cast<size_t>(p)].push_back(v);
  }
  for (int v = 1; v <= n_; ++v) {
    int u = v, steps = 0, smallest = v;
    while (parent_[static_cast<size_t>(u)]) {
      u = parent_[static_cast<size_t>(u)];
      smallest = std::min(smallest, u);
      if (++steps > n_) throw Error("parent array has a cycle");
    }
    if (smallest != u) throw Error("component of " + std::to_string(v) + " is not rooted at its minimum");
  }
}

RootedForest RootedForest::parse(const std::string& text) {
  try {
    return RootedForest(parse_int_list(text, "parent array"));
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

RootedForest RootedForest::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::vector<int>> adj(static_cast<size_t>(n) + 1);
  for (auto [u, v] : edges) {
    if (u < 1 || v < 1 || u > n || v > n || u == v) throw Error("invalid edge in forest");
    adj[static_cast<size_t>(u)].push_back(v);
    adj[static_cast<size_t>(v)].push_back(u);
  }
  std::vector<int> parent(static_cast<size_t>(n) + 1, -1);
  int tree_edges = 0;
  for (int r = 1; r <= n; ++r) {
    if (parent[static_cast<size_t>(r)] != -1) continue;
    parent[static_cast<size_t>(r)] = 0;
    std::queue<int> bfs;
    bfs.push(r);
    while (!bfs.empty()) {
      const int u = bfs.front();
      bfs.pop();
      for (int w : adj[static_cast<size_t>(u)]) {
        if (parent[static_cast<size_t>(w)] == -1) {
          parent[static_cast<size_t>(w)] = u;
          ++tree_edges;
          bfs.push(w);
        }
      }
    }
  }
  if (tree_edges != static_cast<int>(edges.size())) throw Error("edge set has a cycle");
  return RootedForest(std::vector<int>(parent.begin() + 1, parent.end()));
}

std::vector<int> RootedForest::roots() const {
  std::vector<int> r;
  for (int v = 1; v <= n_; ++v) {
    if (!parent_[static_cast<size_t>(v)]) r.push_back(v);
  }
  return r;
}

std::vector<std::vector<int>> RootedForest::components() const {
  std::vector<std::vector<int>> out;
  for (int r : roots()) {
    std::vector<int> comp{r};
    for (size_t k = 0; k < comp.size(); ++k) {
      for (int c : children(comp[k])) comp.push_back(c);
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(comp);
  }
  return out;
}

RootedForest RootedForest::component_tree(const std::vector<int>& vertices) const {
  std::vector<int> sorted = vertices;
  std::sort(sorted.begin(), sorted.end());
  auto rank = [&](int v) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), v);
    if (it == sorted.end() || *it != v) throw Error("vertex set is not a union of components");
    return static_cast<int>(it - sorted.begin()) + 1;
  };
  std::vector<int> parent;
  for (int v : sorted) {
    const int p = parent_[static_cast<size_t>(v)];
    parent.push_back(p ? rank(p) : 0);
  }
  return RootedForest(parent);
}

std::string RootedForest::to_string() const { return join(parent_, 1); }

void for_each_tree(int n, const std::function<void(const RootedForest&)>& visit) {
  check_tree_size(n);
  if (n <= 2) {
    visit(RootedForest(n == 1 ? std::vector<int>{0} : std::vector<int>{0, 1}));
    return;
  }
  std::vector<int> seq(static_cast<size_t>(n) - 2, 1);
  while (true) {
    // Pruefer decoding.
    std::vector<int> degree(static_cast<size_t>(n) + 1, 1);
    for (int x : seq) ++degree[static_cast<size_t>(x)];
    std::vector<std::pair<int, int>> edges;
    for (int x : seq) {
      int leaf = 1;
      while (degree[static_cast<size_t>(leaf)] != 1) ++leaf;
      edges.emplace_back(leaf, x);
      --degree[static_cast<size_t>(leaf)];
      --degree[static_cast<size_t>(x)];
    }
    int a = 0, b = 0;
    for (int v = 1; v <= n; ++v) {
      if (degree[static_cast<size_t>(v)] == 1) (a ? b : a) = v;
    }
    edges.emplace_back(a, b);
    visit(RootedForest::from_edges(n, edges));
    size_t k = seq.size();
    while (k > 0 && seq[k - 1] == n) seq[--k] = 1;
    if (k == 0) break;
    ++seq[k - 1];
  }
}

std::vector<RootedForest> enumerate_trees(int n) {
  std::vector<RootedForest> out;
  for_each_tree(n, [&](const RootedForest& t) { out.push_back(t); });
  return out;
}

void for_each_forest(int n, const std::function<void(const RootedForest&)>& visit) {
  check_tree_size(n);
  std::vector<std::pair<int, int>> all;
  for (int u = 1; u <= n; ++u) {
    for (int v = u + 1; v <= n; ++v) all.emplace_back(u, v);
  }
  std::vector<std::pair<int, int>> chosen;
  std::function<void(size_t, std::vector<int>)> rec = [&](size_t k, std::vector<int> comp) {
    if (k == all.size()) {
      visit(RootedForest::from_edges(n, chosen));
      return;
    }
    rec(k + 1, comp);
    auto [u, v] = all[k];
    const int cu = comp[static_cast<size_t>(u)], cv = comp[static_cast<size_t>(v)];
    if (cu == cv) return;
    for (int& c : comp) {
      if (c == cv) c = cu;
    }
    chosen.push_back(all[k]);
    rec(k + 1, comp);
    chosen.pop_back();
  };
  std::vector<int> comp(static_cast<size_t>(n) + 1);
  std::iota(comp.begin(), comp.end(), 0);
  rec(0, comp);
}

std::vector<RootedForest> enumerate_forests(int n) {
  std::vector<RootedForest> out;
  for_each_forest(n, [&](const RootedForest& f) { out.push_back(f); });
  return out;
}

int StripSequence::vertex_count() const {
  int n = 0;
  for (const auto& s : strips) n += static_cast<int>(s.vertices.size());
  return n;
}

std::string StripSequence::to_string() const {
  std::string out;
  for (const auto& s : strips) {
    if (!out.empty()) out += " ";
    out += "[" + join(s.vertices) + "]@" + std::to_string(s.start_depth);
  }
  return out;
}

StripSequence nu_of_tree(const RootedForest& tree) {
  if (!tree.is_tree()) throw Error("nu needs a tree, got a forest with " + std::to_string(tree.roots().size()) + " components");
  const int n = tree.size();
  std::vector<bool> visited(static_cast<size_t>(n) + 1, false);
  std::vector<int> depth(static_cast<size_t>(n) + 1, 0);
  auto next_child = [&](int v) {
    for (int c : tree.children(v)) {
      if (!visited[static_cast<size_t>(c)]) return c;
    }
    return 0;
  };
  const int root = tree.roots().front();
  for (int v = 1; v <= n; ++v) {
    for (int u = v; tree.parent(u); u = tree.parent(u)) ++depth[static_cast<size_t>(v)];
  }
  StripSequence out;
  std::vector<int> stack;
  int start = root;
  while (start) {
    Strip strip{depth[static_cast<size_t>(start)], {}};
    for (int v = start; v; v = next_child(v)) {
      visited[static_cast<size_t>(v)] = true;
      strip.vertices.push_back(v);
      stack.push_back(v);
    }
    out.strips.push_back(strip);
    start = 0;
    while (!stack.empty() && !(start = next_child(stack.back()))) stack.pop_back();
  }
  return out;
}

ShapeSequence strips_to_shapes(const StripSequence& s) {
  int deepest = 0;
  for (const auto& st : s.strips) {
    deepest = std::max(deepest, st.start_depth + static_cast<int>(st.vertices.size()) - 1);
  }
  std::vector<SkewShape> shapes;
  for (const auto& st : s.strips) {
    // Column 1: top row R has content 1 - R = start_depth - deepest.
    const int m = static_cast<int>(st.vertices.size());
    const int top = 1 + deepest - st.start_depth;
    const int bottom = top - m + 1;
    shapes.emplace_back(Partition(std::vector<int>(static_cast<size_t>(top), 1)),
                        Partition(std::vector<int>(static_cast<size_t>(bottom) - 1, 1)));
  }
  return ShapeSequence(shapes);
}

std::string LabeledPath::to_string() const { return path.word() + " " + join(labels); }

LabeledPath tree_to_path(const RootedForest& tree) {
  const StripSequence nu = nu_of_tree(tree);
  const int n = tree.size();
  std::vector<int> sc(static_cast<size_t>(n) + 1, 0);
  for (size_t k = 0; k < nu.strips.size(); ++k) {
    const auto& st = nu.strips[k];
    for (size_t d = 0; d < st.vertices.size(); ++d) {
      sc[static_cast<size_t>(st.vertices[d])] = n * (st.start_depth + static_cast<int>(d)) + static_cast<int>(k) + 1;
    }
  }
  std::vector<int> order(static_cast<size_t>(n));
  std::iota(order.begin(), order.end(), 1);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return sc[static_cast<size_t>(a)] < sc[static_cast<size_t>(b)]; });
  std::vector<int> pos(static_cast<size_t>(n) + 1, 0);
  for (int i = 0; i < n; ++i) pos[static_cast<size_t>(order[static_cast<size_t>(i)])] = i + 1;

  // h(i) per column: one below the diagonal-step box if there is one,
  // otherwise the highest attacking partner (at least i).
  std::vector<int> diag_to(static_cast<size_t>(n) + 1, 0);
  for (const auto& st : nu.strips) {
    for (size_t d = 0; d + 1 < st.vertices.size(); ++d) {
      diag_to[static_cast<size_t>(pos[static_cast<size_t>(st.vertices[d])])] = pos[static_cast<size_t>(st.vertices[d + 1])];
    }
  }
  std::string word;
  int y = 0;
  for (int i = 1; i <= n; ++i) {
    int h = i;
    if (diag_to[static_cast<size_t>(i)]) {
      h = diag_to[static_cast<size_t>(i)] - 1;
    } else {
      const int si = sc[static_cast<size_t>(order[static_cast<size_t>(i) - 1])];
      for (int j = i + 1; j <= n; ++j) {
        const int d = sc[static_cast<size_t>(order[static_cast<size_t>(j) - 1])] - si;
        if (d > 0 && d < n) h = std::max(h, j);
      }
    }
    if (h < y) throw Error("tree shape does not give a monotone path");
    word.append(static_cast<size_t>(h - y), 'N');
    y = h;
    if (diag_to[static_cast<size_t>(i)]) {
      word += 'D';
      ++y;
    } else {
      word += 'E';
    }
  }
  word.append(static_cast<size_t>(n - y), 'N');
  return LabeledPath{SchroderPath(word), order};
}

namespace {

std::string path_key(const LabeledPath& p) { return p.path.steps() + "|" + join(p.labels); }

const std::map<std::string, std::string>& tree_table(int n) {
  static std::mutex mu;
  static std::map<int, std::map<std::string, std::string>> tables;
  std::lock_guard lock(mu);
  auto it = tables.find(n);
  if (it != tables.end()) return it->second;
  std::map<std::string, std::string> table;
  for_each_tree(n, [&](const RootedForest& t) {
    auto [pos, inserted] = table.emplace(path_key(tree_to_path(t)), t.to_string());
    if (!inserted) throw Error("trees " + pos->second + " and " + t.to_string() + " share a path");
  });
  return tables.emplace(n, std::move(table)).first->second;
}

}  // namespace

RootedForest path_to_tree(const LabeledPath& p) {
  const int n = p.path.length();
  if (!p.path.is_reduced()) throw NotReduced("path " + p.path.word() + " is not reduced");
  if (static_cast<int>(p.labels.size()) != n) throw NotReduced("expected " + std::to_string(n) + " labels");
  const auto& table = tree_table(n);
  auto it = table.find(path_key(p));
  if (it == table.end()) throw NotReduced("no tree has labeled path " + p.to_string());
  return RootedForest::parse(it->second);
}

RootedForest path_to_tree(const SchroderPath& p) {
  std::vector<int> labels(static_cast<size_t>(p.length()));
  std::iota(labels.begin(), labels.end(), 1);
  return path_to_tree(LabeledPath{p, labels});
}

LLTGraph graph_of_path(const SchroderPath& p) {
  EdgeSet e1, ed;
  for (auto box : p.diagonal_boxes()) e1.insert(box);
  for (auto box : p.boxes_under()) ed.insert(box);
  return LLTGraph(p.length(), e1, {}, ed);
}

ParkingFunction::ParkingFunction(std::vector<int> values) : values_(std::move(values)) {
  const int m = cars();
  std::vector<int> sorted = values_;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < m; ++i) {
    const int v = sorted[static_cast<size_t>(i)];
    if (v < 1 || v > m) throw InvalidParkingFunction("value " + std::to_string(v) + " outside [1," + std::to_string(m) + "]");
    if (v > i + 1) throw InvalidParkingFunction("fewer than " + std::to_string(i + 1) + " cars prefer spots <= " + std::to_string(i + 1));
  }
}

ParkingFunction ParkingFunction::parse(const std::string& text) {
  auto first = text.find_first_not_of(" \t");
  if (first == std::string::npos) return ParkingFunction({});
  return ParkingFunction(parse_int_list(text, "parking function"));
}

std::string ParkingFunction::to_string() const { return join(values_); }

std::vector<ParkingFunction> all_parking_functions(int cars) {
  check_tree_size(cars + 1);
  std::vector<ParkingFunction> out;
  std::vector<int> f(static_cast<size_t>(cars), 1);
  while (true) {
    try {
      out.emplace_back(f);
    } catch (const InvalidParkingFunction&) {
    }
    size_t k = f.size();
    while (k > 0 && f[k - 1] == cars) f[--k] = 1;
    if (k == 0) break;
    ++f[k - 1];
  }
  return out;
}

LabeledPath pf_to_path(const ParkingFunction& f) {
  const int m = f.cars();
  std::string small;
  std::vector<int> labels{1};
  for (int x = 1; x <= m; ++x) {
    for (int k = 0; k < m; ++k) {
      if (f.values()[static_cast<size_t>(k)] == x) {
        small += 'N';
        labels.push_back(k + 2);
      }
    }
    small += 'E';
  }
  const std::string full = "NE" + small;
  std::string word;
  for (size_t k = 0; k < full.size(); ++k) {
    if (full[k] == 'E' && k + 1 < full.size() && full[k + 1] == 'N') {
      word += 'D';
      ++k;
    } else {
      word += full[k];
    }
  }
  return LabeledPath{SchroderPath(word), labels};
}

ParkingFunction path_to_pf(const LabeledPath& p) {
  const int n = p.path.length();
  std::vector<int> seen = p.labels;
  std::sort(seen.begin(), seen.end());
  std::vector<int> expect(static_cast<size_t>(n));
  std::iota(expect.begin(), expect.end(), 1);
  if (seen != expect) throw InvalidParkingFunction("labels are not a permutation of 1.." + std::to_string(n));
  std::string full;
  for (char c : p.path.steps()) full += c == 'D' ? std::string("EN") : std::string(1, c);
  if (full.rfind("NE", 0) != 0 || p.labels.front() != 1) {
    throw InvalidParkingFunction("path " + p.path.word() + " does not start with the cell labeled 1");
  }
  std::vector<int> values(static_cast<size_t>(n) - 1, 0);
  int x = 1, row = 1, last = 0;
  for (size_t k = 2; k < full.size(); ++k) {
    if (full[k] == 'E') {
      ++x;
      last = 0;
      continue;
    }
    const int car = p.labels[static_cast<size_t>(row++)];
    if (car < last) throw InvalidParkingFunction("labels decrease in column " + std::to_string(x));
    last = car;
    values[static_cast<size_t>(car) - 2] = x;
  }
  return ParkingFunction(values);
}

RootedForest pf_to_tree(const ParkingFunction& f) { return path_to_tree(pf_to_path(f)); }

ParkingFunction tree_to_pf(const RootedForest& tree) { return path_to_pf(tree_to_path(tree)); }

XQPoly forest_llt(const RootedForest& f, int nvars) {
  XQPoly out = XQPoly::constant(nvars, QPoly::constant(1));
  for (const auto& comp : f.components()) {
    out = out * llt_ssyt(strips_to_shapes(nu_of_tree(f.component_tree(comp))), nvars);
  }
  return out;
}

}  // namespace llt
