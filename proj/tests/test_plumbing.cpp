#include <doctest.h>

#include "plumbtwist/jsonio.hpp"
#include "plumbtwist/plumbing.hpp"
#include "test_helpers.hpp"

using namespace pt;

TEST_CASE("two-circle plumbing with two f-points is valid") {
  auto g = two_point_graph(1);
  CHECK(validate(g).ok());
}

TEST_CASE("one sphere with no points is invalid") {
  PlumbingGraph g;
  g.dimension = 2;
  g.spheres = {{"a0", Sign::positive}};
  auto rep = validate(g);
  CHECK(!rep.ok());
  bool degenerate = false;
  for (const auto& issue : rep.issues)
    if (issue.code == "degenerate") degenerate = true;
  CHECK(degenerate);
}

TEST_CASE("same-sign plumbing point breaks the Penner condition") {
  PlumbingGraph g;
  g.dimension = 2;
  g.spheres = {{"a0", Sign::positive}, {"a1", Sign::positive}};
  g.points = {{"p", "a0", "a1", Gluing::f, 0, 0}};
  auto rep = validate(g);
  CHECK(!rep.ok());
  bool clash = false;
  for (const auto& issue : rep.issues)
    if (issue.code == "penner_sign_clash") clash = true;
  CHECK(clash);
}

TEST_CASE("single-fault mutations are each rejected") {
  auto base = running_example();
  REQUIRE(validate(base).ok());

  auto dup_sphere = base;
  dup_sphere.spheres.push_back({"a0", Sign::negative});
  CHECK(!validate(dup_sphere).ok());

  auto dup_point = base;
  dup_point.points.push_back(dup_point.points[0]);
  CHECK(!validate(dup_point).ok());

  auto disconnected = base;
  disconnected.spheres.push_back({"b9", Sign::negative});
  CHECK(!validate(disconnected).ok());

  auto unknown = base;
  unknown.points[0].sphere_b = "zz";
  CHECK(!validate(unknown).ok());
}

TEST_CASE("fixed surface keeps combinatorics and is idempotent") {
  auto g = running_example(3);
  auto fs = fixed_surface(g);
  CHECK(fs.graph.dimension == 1);
  CHECK(fs.graph.spheres.size() == g.spheres.size());
  CHECK(fs.graph.points.size() == g.points.size());
  CHECK(fs.provenance.size() == g.spheres.size());

  auto again = fixed_surface(fs.graph);
  CHECK(graph_to_json(again.graph) == graph_to_json(fs.graph));

  // Structural copy: identical incidence matrices.
  CHECK(incidence_matrix(fs.graph) == incidence_matrix(g));
}

TEST_CASE("incidence matrix counts points") {
  auto one = one_point_graph();
  CHECK(incidence_matrix(one) == std::vector<std::vector<int>>{{0, 1}, {1, 0}});

  auto two = two_point_graph();
  CHECK(incidence_matrix(two) == std::vector<std::vector<int>>{{0, 2}, {2, 0}});

  auto run = running_example();
  auto m = incidence_matrix(run);
  CHECK(m[0] == std::vector<int>{0, 1, 1});
  // symmetric, zero diagonal blocks within each sign class
  for (size_t i = 0; i < m.size(); ++i) {
    CHECK(m[i][i] == 0);
    for (size_t j = 0; j < m.size(); ++j) CHECK(m[i][j] == m[j][i]);
  }
}

TEST_CASE("graph json round trip") {
  auto g = running_example();
  g.points[1].gluing = Gluing::g;
  auto j = graph_to_json(g);
  auto back = graph_from_json(j);
  CHECK(graph_to_json(back) == j);
  CHECK(back.points[1].gluing == Gluing::g);
}
