#include <doctest.h>

#include "plumbtwist/twistsys.hpp"
#include "test_helpers.hpp"

using namespace pt;

TEST_CASE("parse word resolves generators") {
  auto g = running_example();
  auto w = parse_word("t0 s1^-1 s2^-1", g);
  REQUIRE(w.factors.size() == 3);
  CHECK(w.factors[0].sphere == "a0");
  CHECK(w.factors[0].exponent == 1);
  CHECK(w.factors[1].sphere == "b1");
  CHECK(w.factors[1].exponent == -1);
  CHECK(w.factors[2].sphere == "b2");

  CHECK(parse_word("", g).factors.empty());
  CHECK_THROWS_AS(parse_word("t9", one_point_graph()), twist_error);
  CHECK_THROWS_AS(parse_word("t0^0", g), twist_error);
  CHECK_THROWS_AS(parse_word("x1", g), twist_error);
}

TEST_CASE("generalized Penner condition") {
  auto g = running_example();
  CHECK(is_generalized_penner(parse_word("t0 s1^-1 s2^-1", g), g).ok);
  CHECK(!is_generalized_penner(parse_word("t0", g), g).ok);          // betas missing
  CHECK(!is_generalized_penner(parse_word("t0 s1 s2^-1", g), g).ok); // positive sigma power
  CHECK(!is_generalized_penner(parse_word("t0^-1 s1^-1 s2^-1", g), g).ok);
  // Opposite orientation swaps the sign requirements.
  CHECK(is_generalized_penner(parse_word("t0^-1 s1 s2", g), g, Orientation::opposite).ok);
}

TEST_CASE("apply_F sets the twisted sphere's points") {
  auto g = running_example();
  DiskChoice dc;
  dc.choice = {{"p", '-'}, {"q", '-'}};
  auto out = apply_F({"a0", 1}, dc, g);
  CHECK(out.choice.at("p") == '+');
  CHECK(out.choice.at("q") == '+');
  // idempotent
  CHECK(apply_F({"a0", 1}, out, g) == out);
  // sigma only touches its own point
  auto out2 = apply_F({"b2", -1}, out, g);
  CHECK(out2.choice.at("p") == '+');
  CHECK(out2.choice.at("q") == '-');
  CHECK_THROWS_AS(apply_F({"zz", 1}, dc, g), twist_error);
}

TEST_CASE("invariant track from the last-applied rule") {
  auto g = running_example();
  auto psi = parse_word("t0 s1^-1 s2^-1", g);
  auto dc = invariant_track(psi, g);
  CHECK(dc.choice.at("p") == '+');
  CHECK(dc.choice.at("q") == '+');

  auto psi2 = parse_word("s1^-1 t0 s2^-1", g);
  auto dc2 = invariant_track(psi2, g);
  CHECK(dc2.choice.at("p") == '-');
  CHECK(dc2.choice.at("q") == '+');

  // F_psi fixes the invariant track.
  CHECK(apply_word_F(psi, dc, g) == dc);
  CHECK(apply_word_F(psi2, dc2, g) == dc2);

  CHECK_THROWS_AS(invariant_track(parse_word("t0", g), g), twist_error);
}

TEST_CASE("constancy: F_psi maps all 2^N choices to the invariant track") {
  std::vector<PlumbingGraph> graphs = {one_point_graph(), two_point_graph(), running_example(),
                                       two_alpha_graph()};
  std::vector<std::vector<std::string>> words = {
      {"t0 s1^-1"},
      {"t0 s1^-1", "s1^-1 t0", "t0^2 s1^-1", "t0 s1^-2 t0"},
      {"t0 s1^-1 s2^-1", "s1^-1 t0 s2^-1", "s2^-1 s1^-1 t0", "t0 s2^-1 s1^-1 t0",
       "s1^-1 s2^-1 t0^3"},
      {"t0 t1 s1^-1", "t1 s1^-1 t0", "s1^-1 t0 t1"}};
  for (size_t gi = 1; gi < graphs.size(); ++gi) {
    const auto& g = graphs[gi];
    for (const auto& text : words[gi]) {
      auto w = parse_word(text, g);
      auto target = invariant_track(w, g);
      for (const auto& dc : all_disk_choices(g)) {
        CHECK(apply_word_F(w, dc, g) == target);
      }
    }
  }
}

TEST_CASE("monotone absorption: once every sphere occurred, output is frozen") {
  auto g = running_example();
  auto w = parse_word("t0 s1^-1 s2^-1 t0 s2^-1", g);
  // The prefix (leftmost three factors) covers every sphere; the composite F
  // is already constant regardless of what was applied before it.
  TwistWord prefix;
  prefix.factors = {w.factors[0], w.factors[1], w.factors[2]};
  auto target = invariant_track(w, g);
  for (const auto& dc : all_disk_choices(g)) CHECK(apply_word_F(prefix, dc, g) == target);
}

TEST_CASE("opposite orientation mirrors the choices") {
  auto g = running_example();
  auto psi = parse_word("t0^-1 s1 s2", g);
  auto dc = invariant_track(psi, g, Orientation::opposite);
  CHECK(dc.orientation == Orientation::opposite);
  CHECK(dc.choice.at("p") == '-');
  CHECK(dc.choice.at("q") == '-');
}

TEST_CASE("unit factor expansion") {
  auto g = one_point_graph();
  auto w = parse_word("t0^3 s1^-2", g);
  auto units = unit_factors(w);
  REQUIRE(units.size() == 5);
  CHECK(units[0].exponent == 1);
  CHECK(units[4].exponent == -1);
}
