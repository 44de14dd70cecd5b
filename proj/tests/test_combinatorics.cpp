#include <doctest.h>

#include <set>

#include "llt/cumulant.hpp"
#include "llt/errors.hpp"
#include "llt/lltgraph.hpp"
#include "llt/paths.hpp"
#include "llt/trees.hpp"

using namespace llt;

namespace {

const char* const kSixTree = "0,5,1,5,1,1";
const char* const kSixPath = "ndnnedneee";

/// Boxes (i, j), i < j, with some path point (x, y), x <= i-1, y >= j.
EdgeSet boxes_under_by_points(const SchroderPath& p) {
  EdgeSet out;
  const int n = p.length();
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      for (auto [x, y] : p.points()) {
        if (x <= i - 1 && y >= j) {
          out.emplace(i, j);
          break;
        }
      }
    }
  }
  return out;
}

std::vector<int> vec(std::initializer_list<int> v) { return std::vector<int>(v); }

}  // namespace

TEST_CASE("path statistics") {
  const SchroderPath d3 = SchroderPath::full(3);
  CHECK(d3.heights() == vec({0, 3, 3, 3}));
  CHECK(d3.jumps() == vec({0, 0, 0}));
  CHECK(d3.outer_corners().empty());

  const SchroderPath st = SchroderPath::staircase(3);
  CHECK(st.heights() == vec({0, 1, 2, 3}));
  CHECK(st.jumps() == vec({0, 1, 1}));
  CHECK(st.outer_corners() == std::vector<Box>{{1, 2}, {2, 3}});
  CHECK(!st.is_reduced());
  CHECK(st.components().size() == 3);

  const SchroderPath six(kSixPath);
  CHECK(six.heights() == vec({0, 1, 4, 4, 6, 6, 6}));
  CHECK(six.diagonal_columns() == vec({1, 3}));
  CHECK(six.diagonal_boxes() == std::vector<Box>{{1, 2}, {3, 5}});
  CHECK(six.outer_corners().empty());
  CHECK(six.is_reduced());
  CHECK(six.word() == kSixPath);
}

TEST_CASE("path validation") {
  CHECK_THROWS_AS(SchroderPath("ne en"), ParseError);
  CHECK_THROWS_AS(SchroderPath("en"), ParseError);
  CHECK_THROWS_AS(SchroderPath("dd"), ParseError);
  CHECK_THROWS_AS(SchroderPath("nne"), ParseError);
  CHECK(SchroderPath("NdE").length() == 2);
  CHECK(all_dyck_paths(4).size() == 14);
  CHECK(all_schroder_paths(3).size() == 11);
  CHECK(all_schroder_paths(4).size() == 45);
  CHECK(concat({SchroderPath("ne"), SchroderPath("nde")}) == SchroderPath("nende"));
}

TEST_CASE("rooted forests") {
  const RootedForest t = RootedForest::parse(kSixTree);
  CHECK(t.size() == 6);
  CHECK(t.is_tree());
  CHECK(t.children(1) == vec({3, 5, 6}));
  CHECK(t.children(5) == vec({2, 4}));
  CHECK(t.to_string() == kSixTree);
  CHECK(RootedForest::from_edges(6, {{3, 1}, {5, 1}, {1, 6}, {2, 5}, {4, 5}}) == t);

  const RootedForest f = RootedForest::from_edges(4, {{2, 4}});
  CHECK(f.roots() == vec({1, 2, 3}));
  CHECK(f.edge_count() == 1);
  CHECK(f.components() == std::vector<std::vector<int>>{{1}, {2, 4}, {3}});
  CHECK(f.component_tree({2, 4}) == RootedForest::parse("0,1"));

  CHECK_THROWS_AS(RootedForest::parse("0,3,2"), Error);
  CHECK_THROWS_AS(RootedForest::parse("2,0"), Error);
  CHECK_THROWS_AS(RootedForest::parse("0,x"), ParseError);
}

TEST_CASE("tree and forest counts") {
  CHECK(enumerate_trees(1).size() == 1);
  CHECK(enumerate_trees(3).size() == 3);
  CHECK(enumerate_trees(4).size() == 16);
  CHECK(enumerate_trees(6).size() == 1296);
  CHECK(enumerate_forests(3).size() == 7);
  CHECK(enumerate_forests(4).size() == 38);
  const auto trees = enumerate_trees(5);
  CHECK(std::set<RootedForest>(trees.begin(), trees.end()).size() == 125);
  CHECK_THROWS_AS(enumerate_trees(kMaxTreeSize + 1), SizeGuard);
  CHECK_THROWS_AS(enumerate_forests(0), SizeGuard);
}

TEST_CASE("strip decomposition") {
  CHECK(nu_of_tree(RootedForest::parse("0,1")).to_string() == "[1,2]@0");
  CHECK(nu_of_tree(RootedForest::parse("0,1,1")).to_string() == "[1,2]@0 [3]@1");
  CHECK(nu_of_tree(RootedForest::parse(kSixTree)).to_string() == "[1,3]@0 [5,2]@1 [4]@2 [6]@1");
  CHECK(nu_of_tree(RootedForest::parse("0")).vertex_count() == 1);

  CHECK(strips_to_shapes(nu_of_tree(RootedForest::parse("0,1"))).to_string() == "(1,1)");
  CHECK(strips_to_shapes(nu_of_tree(RootedForest::parse("0,1,1"))).to_string() == "(1,1);(1)");
  CHECK(strips_to_shapes(nu_of_tree(RootedForest::parse(kSixTree))).to_string() == "(1,1,1)/(1);(1,1);(1);(1,1)/(1)");
}

TEST_CASE("tree to path") {
  CHECK(tree_to_path(RootedForest::parse("0,1")).to_string() == "nde 1,2");
  CHECK(tree_to_path(RootedForest::parse("0")).to_string() == "ne 1");
  const LabeledPath six = tree_to_path(RootedForest::parse(kSixTree));
  CHECK(six.path == SchroderPath(kSixPath));
  CHECK(six.labels == vec({1, 3, 5, 6, 2, 4}));
  CHECK(path_to_tree(six) == RootedForest::parse(kSixTree));
  CHECK(path_to_tree(SchroderPath("nde")) == RootedForest::parse("0,1"));
  CHECK(path_to_tree(SchroderPath("ne")) == RootedForest::parse("0"));
  CHECK_THROWS_AS(path_to_tree(SchroderPath("nenene")), NotReduced);
  CHECK_THROWS_AS(path_to_tree(LabeledPath{SchroderPath("nde"), {2, 1}}), NotReduced);
}

TEST_CASE("graph of path") {
  CHECK(graph_of_path(SchroderPath("nde")) == LLTGraph(2, {{1, 2}}, {}, {}));
  const LLTGraph k4 = graph_of_path(SchroderPath::full(4));
  CHECK(k4 == unit_interval_graph(SchroderPath::full(4)));
  const LLTGraph six = graph_of_path(SchroderPath(kSixPath));
  CHECK(six.e1 == EdgeSet{{1, 2}, {3, 5}});
  CHECK(six.ed == EdgeSet{{2, 3}, {2, 4}, {3, 4}, {4, 5}, {4, 6}, {5, 6}});
  CHECK(six.e2.empty());
  for (int n = 1; n <= 5; ++n) {
    for (const auto& d : all_dyck_paths(n)) CHECK(graph_of_path(d) == unit_interval_graph(d));
    for (const auto& p : all_schroder_paths(n)) {
      CAPTURE(p.word());
      CHECK(graph_of_path(p).ed == boxes_under_by_points(p));
    }
  }
}

TEST_CASE("tree path roundtrip and image") {
  for (int n = 1; n <= 6; ++n) {
    std::set<SchroderPath> image;
    for_each_tree(n, [&](const RootedForest& t) {
      const LabeledPath p = tree_to_path(t);
      CHECK(p.path.is_reduced());
      CHECK(path_to_tree(p) == t);
      image.insert(p.path);
    });
    if (n <= 5) {
      for (const auto& p : all_schroder_paths(n)) {
        if (p.is_reduced()) CHECK(image.count(p) == 1);
        else CHECK(image.count(p) == 0);
      }
    }
  }
}

TEST_CASE("strip shapes and path graph give the same polynomial") {
  for (int n = 1; n <= 5; ++n) {
    for_each_tree(n, [&](const RootedForest& t) {
      CAPTURE(t.to_string());
      const XQPoly via_shapes = llt_ssyt(strips_to_shapes(nu_of_tree(t)), n);
      CHECK(llt_graph_eval(graph_of_path(tree_to_path(t).path), n) == via_shapes);
      CHECK(forest_llt(t, n) == via_shapes);
    });
  }
}

TEST_CASE("forest llt is a product over components") {
  const RootedForest f = RootedForest::from_edges(4, {{1, 3}, {2, 4}});
  const XQPoly edge = forest_llt(RootedForest::parse("0,1"), 4);
  CHECK(forest_llt(f, 4) == edge * edge);
}

TEST_CASE("parking functions") {
  const ParkingFunction f = ParkingFunction::parse("3,1,3,1,1");
  CHECK(f.cars() == 5);
  CHECK(f.to_string() == "3,1,3,1,1");
  CHECK(pf_to_path(f).to_string() == "ndnnedneee 1,3,5,6,2,4");
  CHECK(pf_to_tree(f) == RootedForest::parse(kSixTree));
  CHECK(tree_to_pf(RootedForest::parse(kSixTree)) == f);
  CHECK(path_to_pf(pf_to_path(f)) == f);

  const ParkingFunction empty(std::vector<int>{});
  CHECK(pf_to_path(empty).to_string() == "ne 1");
  CHECK(pf_to_tree(ParkingFunction::parse("1")) == RootedForest::parse("0,1"));

  CHECK_THROWS_AS(ParkingFunction::parse("2,2"), InvalidParkingFunction);
  CHECK_THROWS_AS(ParkingFunction::parse("0"), InvalidParkingFunction);
  CHECK_THROWS_AS(ParkingFunction::parse("1,x"), ParseError);

  CHECK(all_parking_functions(3).size() == 16);
  for (int m = 0; m <= 5; ++m) {
    const auto pfs = all_parking_functions(m);
    long long expected = 1;
    for (int i = 0; i < m - 1; ++i) expected *= m + 1;
    CHECK(static_cast<long long>(pfs.size()) == expected);
    std::set<RootedForest> trees;
    for (const auto& g : pfs) {
      const RootedForest t = pf_to_tree(g);
      CHECK(tree_to_pf(t) == g);
      trees.insert(t);
    }
    CHECK(trees.size() == pfs.size());
  }
}
