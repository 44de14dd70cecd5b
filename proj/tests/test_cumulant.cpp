#include <doctest.h>

#include <algorithm>

#include "corpus.hpp"
#include "llt/cumulant.hpp"
#include "llt/errors.hpp"
#include "llt/symmetric.hpp"
#include "oracles.hpp"

using namespace llt;

namespace {

XQPoly e_k(int k, int nvars) { return elementary_symmetric(Partition({k}), nvars); }

oracle::Flat times_qpoly(const oracle::Flat& f, const QPoly& c) {
  oracle::Flat out;
  for (int d = 0; d <= c.degree(); ++d) out = oracle::plus(out, oracle::qshift(f, d), c.coeff(d).convert_to<long long>());
  return out;
}

/// (q-1)^(n-1) times the cumulant, straight from brute-force block LLTs.
oracle::Flat cumulant_numerator(const std::vector<oracle::Skew>& seq, int nvars) {
  const int n = static_cast<int>(seq.size());
  oracle::Flat sum;
  for (const auto& p : oracle::set_partitions(n)) {
    const int b = static_cast<int>(p.size());
    long long w = 1;
    for (int i = 2; i < b; ++i) w *= i;
    if ((b - 1) % 2) w = -w;
    oracle::Flat term = oracle::one(nvars);
    for (const auto& block : p) {
      std::vector<oracle::Skew> sub;
      for (int i : block) sub.push_back(seq[static_cast<size_t>(i)]);
      term = oracle::times(term, oracle::llt(sub, nvars));
    }
    sum = oracle::plus(sum, term, w);
  }
  return sum;
}

}  // namespace

TEST_CASE("set partitions") {
  CHECK(set_partitions(1).size() == 1);
  CHECK(set_partitions(3).size() == 5);
  CHECK(set_partitions(4).size() == 15);
  CHECK(set_partitions(6).size() == 203);
  const auto p3 = set_partitions(3);
  CHECK(p3.front() == SetPartition{{1, 2, 3}});
  CHECK(p3.back() == SetPartition{{1}, {2}, {3}});
  CHECK_THROWS_AS(set_partitions(0), SizeGuard);
  CHECK_THROWS_AS(set_partitions(kMaxPartitionSize + 1), SizeGuard);
  CHECK(route_name(CumulantRoute::connected) == "connected");
}

TEST_CASE("cumulant examples") {
  const auto k1 = cumulant_def(ShapeSequence::parse("(1)"), 3);
  CHECK(k1.value == e_k(1, 3));
  CHECK(k1.n == 1);
  CHECK(cumulant_def(ShapeSequence::parse("(1);(1)"), 2).value == e_k(2, 2));
  CHECK(cumulant_def(ShapeSequence::parse("(1);(1)"), 3).value == e_k(2, 3));

  const auto d2 = kappa_connected(SchroderPath("NNEE"), 2);
  CHECK(d2.value == e_k(2, 2));
  CHECK(!d2.disconnected);

  const auto stair = kappa_connected(SchroderPath::staircase(3), 3);
  CHECK(stair.disconnected);
  CHECK(stair.value.is_zero());
  CHECK(cumulant_def(unicellular_shapes(SchroderPath::staircase(3)), 3).value.is_zero());

  const SchroderPath d3 = SchroderPath::full(3);
  CHECK(cumulant_def(unicellular_shapes(d3), 3).value == kappa_connected(d3, 3).value);
}

TEST_CASE("cumulants agree with brute force") {
  const auto seqs = corpus::sequences(4, 3, 9);
  const QPoly qm1{-1, 1};
  for (const auto& seq : seqs) {
    const auto s = corpus::to_llt(seq);
    CAPTURE(s.to_string());
    const int N = std::min(s.cell_count(), 3);
    const auto k = cumulant_def(s, N);
    CHECK(times_qpoly(oracle::flatten(k.value), qm1.pow(static_cast<unsigned>(s.length() - 1))) == cumulant_numerator(seq, N));
  }
}

TEST_CASE("moebius recombination") {
  const auto seqs = corpus::sequences(4, 4, 5);
  CHECK(seqs.size() >= 50);
  for (const auto& seq : seqs) {
    const auto s = corpus::to_llt(seq);
    CAPTURE(s.to_string());
    const int N = std::min(s.cell_count(), 3);
    CHECK(llt_from_cumulants(s, N) == llt_ssyt(s, N));
  }
}

TEST_CASE("unicellular realization") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& d : all_dyck_paths(n)) {
      CAPTURE(d.word());
      const auto s = unicellular_shapes(d);
      // Relabel each cell by the rank of its shifted content.
      std::vector<std::pair<int, int>> order;
      for (int v = 1; v <= n; ++v) order.emplace_back(shifted_content(s.cells()[static_cast<size_t>(v) - 1], n), v);
      std::sort(order.begin(), order.end());
      std::vector<int> rank(static_cast<size_t>(n) + 1);
      for (int r = 0; r < n; ++r) rank[static_cast<size_t>(order[static_cast<size_t>(r)].second)] = r + 1;
      const LLTGraph g = build_graph_from_shapes(s);
      CHECK(g.e1.empty());
      CHECK(g.e2.empty());
      EdgeSet relabeled;
      for (auto [u, v] : g.ed) relabeled.emplace(rank[static_cast<size_t>(u)], rank[static_cast<size_t>(v)]);
      CHECK(relabeled == unit_interval_graph(d).ed);
    }
  }
  CHECK_THROWS_AS(unicellular_shapes(SchroderPath("NDE")), Error);
}

TEST_CASE("subgraph expansion and connected route") {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& d : all_dyck_paths(n)) {
      CAPTURE(d.word());
      const XQPoly llt = llt_graph_eval(unit_interval_graph(d), n);
      CHECK(subgraph_expansion(d, n) == llt.shift_q(1));
      const auto conn = kappa_connected(d, n);
      CHECK(conn.value == cumulant_def(unicellular_shapes(d), n).value);
      CHECK(conn.disconnected == !d.is_connected());
    }
  }
}

TEST_CASE("subgraph expansion top degree") {
  for (int n = 2; n <= 4; ++n) {
    const XQPoly p = subgraph_expansion(SchroderPath::full(n), n);
    const int top = n * (n - 1) / 2;
    XQPoly lead(n);
    for (const auto& [e, c] : p.terms()) {
      CHECK(c.degree() <= top);
      if (c.degree() == top) lead.add_term(e, QPoly::constant(c.coeff(top)));
    }
    CHECK(lead == e_k(n, n));
  }
}

TEST_CASE("strict subgraph") {
  const LLTGraph g = strict_subgraph(3, {{1, 2}, {2, 3}});
  CHECK(g.e1 == EdgeSet{{1, 2}, {2, 3}});
  CHECK(g.ed.empty());
  CHECK(llt_graph_eval(g, 3) == e_k(3, 3));
}
