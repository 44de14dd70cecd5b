#include "llt/cumulant.hpp"

#include <bit>
#include <map>
#include <numeric>
#include <optional>

#include "llt/errors.hpp"

namespace llt {

void for_each_set_partition(int n, const std::function<void(const SetPartition&)>& visit) {
  if (n < 1 || n > kMaxPartitionSize) {
    throw SizeGuard("set partitions supported for 1 <= n <= " + std::to_string(kMaxPartitionSize));
  }
  // Restricted growth strings: a[0] = 0, a[i] <= 1 + max(a[0..i-1]).
  std::vector<int> a(static_cast<size_t>(n), 0);
  std::function<void(int, int)> rec = [&](int i, int maxblock) {
    if (i == n) {
      SetPartition p(static_cast<size_t>(maxblock) + 1);
      for (int k = 0; k < n; ++k) p[static_cast<size_t>(a[static_cast<size_t>(k)])].push_back(k + 1);
      visit(p);
      return;
    }
    for (int b = 0; b <= maxblock + 1; ++b) {
      a[static_cast<size_t>(i)] = b;
      rec(i + 1, std::max(maxblock, b));
    }
  };
  rec(1, 0);
}

std::vector<SetPartition> set_partitions(int n) {
  std::vector<SetPartition> out;
  for_each_set_partition(n, [&](const SetPartition& p) { out.push_back(p); });
  return out;
}

std::string route_name(CumulantRoute r) {
  switch (r) {
    case CumulantRoute::definition: return "def";
    case CumulantRoute::moebius: return "moebius";
    case CumulantRoute::connected: return "connected";
  }
  return "?";
}

namespace {

unsigned block_mask(const std::vector<int>& block) {
  unsigned m = 0;
  for (int v : block) m |= 1u << (v - 1);
  return m;
}

std::vector<int> mask_positions(unsigned mask) {
  std::vector<int> pos;
  for (int i = 0; mask >> i; ++i) {
    if (mask >> i & 1u) pos.push_back(i);
  }
  return pos;
}

BigInt factorial(int k) {
  BigInt r = 1;
  for (int i = 2; i <= k; ++i) r *= i;
  return r;
}

class BlockLLTCache {
 public:
  BlockLLTCache(const ShapeSequence& s, int nvars) : s_(s), nvars_(nvars) {}
  const XQPoly& get(unsigned mask) {
    auto it = memo_.find(mask);
    if (it == memo_.end()) it = memo_.emplace(mask, llt_ssyt(s_.subsequence(mask_positions(mask)), nvars_)).first;
    return it->second;
  }

 private:
  const ShapeSequence& s_;
  int nvars_;
  std::map<unsigned, XQPoly> memo_;
};

XQPoly cumulant_with_cache(unsigned full_mask, int nvars, BlockLLTCache& cache) {
  auto positions = mask_positions(full_mask);
  const int n = static_cast<int>(positions.size());
  XQPoly sum(nvars);
  for_each_set_partition(n, [&](const SetPartition& p) {
    // Moebius function of the partition lattice: (-1)^(b-1) (b-1)! for b blocks.
    const int b = static_cast<int>(p.size());
    BigInt weight = factorial(b - 1);
    if ((b - 1) % 2) weight = -weight;
    XQPoly term = XQPoly::constant(nvars, QPoly::constant(weight));
    for (const auto& block : p) {
      unsigned m = 0;
      for (int v : block) m |= 1u << positions[static_cast<size_t>(v) - 1];
      term = term * cache.get(m);
    }
    sum += term;
  });
  return exact_div_qminus1(sum, static_cast<unsigned>(n - 1));
}

}  // namespace

CumulantResult cumulant_def(const ShapeSequence& s, int nvars) {
  BlockLLTCache cache(s, nvars);
  const unsigned full = (1u << s.length()) - 1u;
  return CumulantResult{cumulant_with_cache(full, nvars, cache), s.length(), CumulantRoute::definition};
}

XQPoly llt_from_cumulants(const ShapeSequence& s, int nvars) {
  BlockLLTCache cache(s, nvars);
  std::map<unsigned, XQPoly> kappa;
  auto kappa_of = [&](unsigned mask) -> const XQPoly& {
    auto it = kappa.find(mask);
    if (it == kappa.end()) it = kappa.emplace(mask, cumulant_with_cache(mask, nvars, cache)).first;
    return it->second;
  };
  const int n = s.length();
  XQPoly sum(nvars);
  const QPoly qm1{-1, 1};
  for_each_set_partition(n, [&](const SetPartition& p) {
    XQPoly term = XQPoly::constant(nvars, qm1.pow(static_cast<unsigned>(n - static_cast<int>(p.size()))));
    for (const auto& block : p) term = term * kappa_of(block_mask(block));
    sum += term;
  });
  return sum;
}

LLTGraph strict_subgraph(int n, const std::vector<Edge>& edges) {
  EdgeSet e1(edges.begin(), edges.end());
  return LLTGraph(n, e1, {}, {});
}

namespace {

bool spans_connected(int n, const std::vector<Edge>& edges) {
  std::vector<int> parent(static_cast<size_t>(n) + 1);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int v) {
    return parent[static_cast<size_t>(v)] == v ? v : parent[static_cast<size_t>(v)] = find(parent[static_cast<size_t>(v)]);
  };
  int comps = n;
  for (auto [u, v] : edges) {
    int a = find(u), b = find(v);
    if (a != b) {
      parent[static_cast<size_t>(a)] = b;
      --comps;
    }
  }
  return comps == 1;
}

void for_each_edge_subset(const std::vector<Edge>& all, const std::function<void(const std::vector<Edge>&)>& visit) {
  if (all.size() >= 31) throw SizeGuard("too many edges for subset enumeration");
  std::vector<Edge> chosen;
  for (unsigned m = 0; m < (1u << all.size()); ++m) {
    chosen.clear();
    for (size_t i = 0; i < all.size(); ++i) {
      if (m >> i & 1u) chosen.push_back(all[i]);
    }
    visit(chosen);
  }
}

}  // namespace

CumulantResult kappa_connected(const SchroderPath& dyck, int nvars) {
  const LLTGraph g = unit_interval_graph(dyck);
  const int n = g.nverts;
  const std::vector<Edge> all(g.ed.begin(), g.ed.end());
  CumulantResult out{XQPoly(nvars), n, CumulantRoute::connected};
  if (!spans_connected(n, all)) {
    out.disconnected = true;
    if (n > 1) return out;
  }
  const QPoly qm1{-1, 1};
  for_each_edge_subset(all, [&](const std::vector<Edge>& h) {
    if (!spans_connected(n, h)) return;
    const auto weight = qm1.pow(static_cast<unsigned>(static_cast<int>(h.size()) - n + 1));
    out.value += llt_graph_eval(strict_subgraph(n, h), nvars) * weight;
  });
  return out;
}

XQPoly subgraph_expansion(const SchroderPath& dyck, int nvars) {
  const LLTGraph g = unit_interval_graph(dyck);
  const std::vector<Edge> all(g.ed.begin(), g.ed.end());
  XQPoly out(nvars);
  for_each_edge_subset(all, [&](const std::vector<Edge>& h) {
    out += llt_graph_eval(strict_subgraph(g.nverts, h), nvars) * QPoly::monomial(1, static_cast<int>(h.size()));
  });
  return out;
}

ShapeSequence unicellular_shapes(const SchroderPath& dyck) {
  if (!dyck.is_dyck()) throw Error("unicellular shapes need a Dyck path");
  const int n = dyck.length();
  // Choose increasing shifted contents n*c + k (k a permutation of 1..n)
  // so that positions i < j attack exactly when box (i, j) is under the path.
  std::vector<int> sc(static_cast<size_t>(n), 0);
  std::vector<bool> used(static_cast<size_t>(n) + 1, false);
  auto residue = [n](int v) { return ((v - 1) % n + n) % n + 1; };
  std::function<bool(int)> rec = [&](int i) {
    if (i == n) return true;
    const int lo = i == 0 ? 1 : sc[static_cast<size_t>(i) - 1] + 1;
    const int hi = i == 0 ? n : sc[static_cast<size_t>(i) - 1] + n * n;
    for (int v = lo; v <= hi; ++v) {
      const int k = residue(v);
      if (used[static_cast<size_t>(k)]) continue;
      bool ok = true;
      for (int p = 0; p < i && ok; ++p) ok = (v - sc[static_cast<size_t>(p)] < n) == dyck.is_under(p + 1, i + 1);
      if (!ok) continue;
      sc[static_cast<size_t>(i)] = v;
      used[static_cast<size_t>(k)] = true;
      if (rec(i + 1)) return true;
      used[static_cast<size_t>(k)] = false;
    }
    return false;
  };
  if (!rec(0)) throw Error("no unicellular realization found for " + dyck.word());
  std::vector<int> contents(static_cast<size_t>(n), 0);
  for (int v : sc) {
    const int k = residue(v);
    contents[static_cast<size_t>(k) - 1] = (v - k) / n;
  }
  return ShapeSequence::unicellular(contents);
}

}  // namespace llt
