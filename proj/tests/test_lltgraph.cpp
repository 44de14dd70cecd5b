#include <doctest.h>

#include "corpus.hpp"
#include "llt/errors.hpp"
#include "llt/lltgraph.hpp"
#include "oracles.hpp"
#include "relation_sites.hpp"

using namespace llt;

TEST_CASE("graph evaluation examples") {
  XQPoly sum3 = XQPoly::variable(3, 1) + XQPoly::variable(3, 2) + XQPoly::variable(3, 3);
  CHECK(llt_graph_eval(LLTGraph(1), 3) == sum3);

  XQPoly dbl(2);
  dbl.add_term({2, 0}, QPoly{1});
  dbl.add_term({0, 2}, QPoly{1});
  dbl.add_term({1, 1}, QPoly{1, 1});
  CHECK(llt_graph_eval(LLTGraph(2, {}, {}, {{1, 2}}), 2) == dbl);

  XQPoly strict(2);
  strict.add_term({1, 1}, QPoly{1});
  CHECK(llt_graph_eval(LLTGraph(2, {{1, 2}}, {}, {}), 2) == strict);

  const LLTGraph g(4, {{1, 2}}, {{3, 2}}, {{1, 3}, {2, 4}});
  CHECK(llt_graph_eval(g, 4, 4) == llt_graph_eval(g, 4, 1));
  CHECK(oracle::flatten(llt_graph_eval(g, 3)) == oracle::graph(sites::to_oracle(g), 3));
}

TEST_CASE("graph text format") {
  const LLTGraph g = LLTGraph::parse("n=4; e1:(1,2)(3,4); e2:; ed:(1,3)(2,4)");
  CHECK(g.nverts == 4);
  CHECK(g.e1 == EdgeSet{{1, 2}, {3, 4}});
  CHECK(g.e2.empty());
  CHECK(g.ed == EdgeSet{{1, 3}, {2, 4}});
  CHECK(g.to_string() == "n=4; e1:(1,2)(3,4); e2:; ed:(1,3)(2,4)");
  CHECK(LLTGraph::parse(g.to_string()) == g);
  CHECK(g.adjacent(3, 1));
  CHECK(!g.adjacent(1, 4));
  CHECK_THROWS_AS(LLTGraph::parse("n=2; e1:(1,3)"), Error);
  CHECK_THROWS_AS(LLTGraph::parse("e1:(1,2)"), ParseError);
  CHECK_THROWS_AS(LLTGraph::parse("n=2; e1:(1,1)"), Error);
  CHECK_THROWS_AS(LLTGraph::parse("n=2; ex:(1,2)"), ParseError);
}

TEST_CASE("graph of shapes") {
  const LLTGraph six = build_graph_from_shapes(ShapeSequence::parse("(3,2)/(1);(1,1)"));
  CHECK(six.nverts == 6);
  CHECK(six.e1.size() == 2);
  CHECK(six.e2.size() == 2);
  CHECK(six.ed.size() == 4);

  const LLTGraph two = build_graph_from_shapes(ShapeSequence::parse("(1);(1)"));
  CHECK(two == LLTGraph(2, {}, {}, {{1, 2}}));

  const LLTGraph col = build_graph_from_shapes(ShapeSequence::parse("(1,1,1,1)"));
  CHECK(col.e1.size() == 3);
  CHECK(col.e2.empty());
  CHECK(col.ed.empty());
}

TEST_CASE("graph route agrees with tableaux route") {
  const auto seqs = corpus::sequences(5, 3, 11);
  CHECK(seqs.size() > 50);
  for (const auto& seq : seqs) {
    const auto s = corpus::to_llt(seq);
    CAPTURE(s.to_string());
    const int N = std::min(s.cell_count(), 3);
    CHECK(llt_graph_eval(build_graph_from_shapes(s), N) == llt_ssyt(s, N));
  }
}

TEST_CASE("unit interval graphs") {
  CHECK(unit_interval_graph(SchroderPath("NNEE")) == LLTGraph(2, {}, {}, {{1, 2}}));
  const LLTGraph k4 = unit_interval_graph(SchroderPath::full(4));
  CHECK(k4.ed.size() == 6);
  CHECK(k4.e1.empty());
  CHECK(unit_interval_graph(SchroderPath("NENENE")).ed.empty());
  const LLTGraph g = unit_interval_graph(SchroderPath("NNENEE"));
  CHECK(g.ed == EdgeSet{{1, 2}, {2, 3}});
}

TEST_CASE("relation examples") {
  const LLTGraph one_edge(2, {}, {}, {{1, 2}});
  const GraphCombo c = apply_relation(one_edge, GraphRule::C, {1, 2});
  REQUIRE(c.terms().size() == 2);
  CHECK(c.terms().at(LLTGraph(2, {{1, 2}}, {}, {})) == QPoly{-1, 1});
  CHECK(c.terms().at(LLTGraph(2)) == QPoly{1});
  CHECK(combo_eval(c, 2) == llt_graph_eval(one_edge, 2));

  const GraphCombo a = apply_relation(LLTGraph(2), GraphRule::A, {1, 2});
  CHECK(a.terms().at(LLTGraph(2, {{1, 2}}, {}, {})) == QPoly{1});
  CHECK(a.terms().at(LLTGraph(2, {}, {{2, 1}}, {})) == QPoly{1});

  const LLTGraph cyc(2, {{1, 2}}, {{2, 1}}, {});
  CHECK(apply_relation(cyc, GraphRule::F, {1, 2}).empty());
  CHECK(llt_graph_eval(cyc, 2).is_zero());

  CHECK(combo_eval(GraphCombo(), 2).is_zero());
  CHECK(combo_eval(GraphCombo(LLTGraph(1), QPoly{1}), 1) == XQPoly::variable(1, 1));

  GraphCombo twice(LLTGraph(1), QPoly{1});
  twice += GraphCombo(LLTGraph(1), QPoly{-1});
  CHECK(twice.empty());
}

TEST_CASE("relation site mismatches") {
  const LLTGraph g(3, {{1, 2}}, {{2, 3}}, {{1, 3}});
  CHECK_THROWS_AS(apply_relation(g, GraphRule::A, {1, 2}), PatternMismatch);
  CHECK_THROWS_AS(apply_relation(g, GraphRule::B, {1, 2}), PatternMismatch);
  CHECK_THROWS_AS(apply_relation(g, GraphRule::C, {3, 1}), PatternMismatch);
  CHECK_THROWS_AS(apply_relation(g, GraphRule::D, {1, 2, 3}), PatternMismatch);
  CHECK_THROWS_AS(apply_relation(g, GraphRule::E, {1, 2}), PatternMismatch);
  CHECK_THROWS_AS(apply_relation(g, GraphRule::F, {1, 2}), PatternMismatch);
  CHECK_THROWS_AS(apply_relation(LLTGraph(2, {}, {{1, 2}, {2, 1}}, {}), GraphRule::F, {1, 2}), PatternMismatch);
  CHECK(parse_graph_rule("d") == GraphRule::D);
  CHECK_THROWS_AS(parse_graph_rule("G"), ParseError);
}

TEST_CASE("relations are sound") {
  for (GraphRule r : {GraphRule::A, GraphRule::B, GraphRule::C, GraphRule::D, GraphRule::E, GraphRule::F}) {
    const auto rep = sites::sweep(r, 1, 5, 200, 7);
    CAPTURE(static_cast<int>(r));
    CAPTURE(rep.first_failure);
    CHECK(rep.checked > 0);
    CHECK(rep.failed == 0);
  }
}
