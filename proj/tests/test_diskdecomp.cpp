#include <doctest.h>

#include <set>

#include "plumbtwist/diskdecomp.hpp"
#include "test_helpers.hpp"

using namespace pt;

namespace {
DiskChoice all_plus(const PlumbingGraph& g) {
  DiskChoice dc;
  for (const auto& p : g.points) dc.choice[p.id] = '+';
  return dc;
}
}  // namespace

TEST_CASE("decompose: part counts = spheres + 4 points") {
  auto one = one_point_graph();
  CHECK(decompose(all_plus(one), one).size() == 2 + 4);

  auto run = running_example();
  CHECK(decompose(all_plus(run), run).size() == 3 + 8);

  PlumbingGraph empty;
  empty.dimension = 2;
  empty.spheres = {{"a0", Sign::positive}};
  DiskChoice dc;
  CHECK(decompose(dc, empty).size() == 1);
}

TEST_CASE("decompose part multiset is invariant under relabeling") {
  auto g = running_example();
  auto parts = decompose(all_plus(g), g);
  // Relabel by swapping the two negative spheres and the two points.
  auto h = g;
  std::swap(h.spheres[1], h.spheres[2]);
  std::swap(h.points[0], h.points[1]);
  auto parts2 = decompose(all_plus(h), h);
  std::multiset<std::string> ids1, ids2;
  for (const auto& p : parts) ids1.insert(p.id);
  for (const auto& p : parts2) ids2.insert(p.id);
  CHECK(ids1 == ids2);
}

TEST_CASE("singular disks: three per point, S flavor carries the choice") {
  auto g = running_example();
  auto disks = singular_disks(all_plus(g), g);
  REQUIRE(disks.size() == 6);
  int s_count = 0, locus_count = 0;
  for (const auto& d : disks) {
    if (d.flavor == DiskFlavor::S) {
      ++s_count;
      CHECK(d.sign == '+');
      CHECK(d.on_branch_locus);
    } else {
      CHECK(!d.on_branch_locus);
    }
    if (d.on_branch_locus) ++locus_count;
  }
  CHECK(s_count == 2);
  CHECK(locus_count == 2);

  DiskChoice mixed;
  mixed.choice = {{"p", '-'}, {"q", '+'}};
  auto disks2 = singular_disks(mixed, g);
  for (const auto& d : disks2)
    if (d.flavor == DiskFlavor::S && d.point == "p") CHECK(d.sign == '-');

  auto two = two_point_graph();
  CHECK(singular_disks(all_plus(two), two).size() == 6);
}

TEST_CASE("regular disks: arcs plus necks, matching the shadow-graph count") {
  auto one = one_point_graph();
  auto pieces = regular_disks(all_plus(one), one);
  // two arcs of alpha', two arcs of beta', one neck piece
  CHECK(pieces.size() == 5);
  int arcs = 0, necks = 0;
  for (const auto& r : pieces) {
    if (r.id.rfind("arc:", 0) == 0) ++arcs;
    if (r.id.rfind("neckpiece:", 0) == 0) ++necks;
  }
  CHECK(arcs == 4);
  CHECK(necks == 1);

  // Independent count: each sphere contributes 2 * (#points on it) arcs and
  // each point one neck piece (cutting the shadow graph at all marked slots).
  auto oracle = [](const PlumbingGraph& g) {
    size_t total = 0;
    for (const auto& s : g.spheres) {
      size_t k = g.points_on(s.id).size();
      total += k ? 2 * k : 2;
    }
    return total + g.points.size();
  };
  for (const auto& g : {one_point_graph(), two_point_graph(), running_example(),
                        two_alpha_graph()}) {
    auto dc = all_plus(g);
    CHECK(regular_disks(dc, g).size() == oracle(g));
  }

  // 0-point graph: one piece per sphere hemisphere.
  PlumbingGraph empty;
  empty.dimension = 2;
  empty.spheres = {{"a0", Sign::positive}};
  DiskChoice dc;
  CHECK(regular_disks(dc, empty).size() == 2);
}

TEST_CASE("regular disk adjacency names the bounding singular disks") {
  auto g = one_point_graph();
  auto pieces = regular_disks(all_plus(g), g);
  // On the positive sphere the arcs end at the chosen disk and the + bar.
  bool found = false;
  for (const auto& r : pieces) {
    if (r.id == "arc:a0:0") {
      found = true;
      CHECK(r.adjacency == std::vector<std::string>{"S:p", "Sb+:p"});
    }
    if (r.id == "arc:b1:0") {
      // choice '+': the beta disk is absent, so the arc ends at a hole.
      CHECK(r.adjacency == std::vector<std::string>{"hole:p", "Sb-:p"});
    }
  }
  CHECK(found);
}

TEST_CASE("check_decomposition: canonical data passes, faults are caught") {
  auto g = running_example();
  auto dc = all_plus(g);
  auto disks = singular_disks(dc, g);
  auto pieces = regular_disks(dc, g);
  CHECK(check_decomposition(dc, g, disks, pieces).ok());

  SUBCASE("duplicate flavor fails condition 2") {
    auto bad = disks;
    bad.push_back(bad[0]);
    auto rep = check_decomposition(dc, g, bad, pieces);
    CHECK(!rep.ok());
    CHECK(!rep.conditions[1].ok);
  }
  SUBCASE("missing flavor fails condition 3") {
    auto bad = disks;
    bad.pop_back();
    auto rep = check_decomposition(dc, g, bad, pieces);
    CHECK(!rep.conditions[2].ok);
  }
  SUBCASE("singular disk with the wrong sign fails condition 1") {
    auto bad = disks;
    bad[0].sign = '-';
    auto rep = check_decomposition(dc, g, bad, pieces);
    CHECK(!rep.conditions[0].ok);
  }
  SUBCASE("piece overlapping a singular interior fails condition 5") {
    auto bad = pieces;
    bad[0].covers.push_back("disk:p");
    auto rep = check_decomposition(dc, g, disks, bad);
    CHECK(!rep.conditions[4].ok);
  }
  SUBCASE("wrong piece multiset fails condition 4") {
    auto bad = pieces;
    bad.pop_back();
    auto rep = check_decomposition(dc, g, disks, bad);
    CHECK(!rep.conditions[3].ok);
  }
}
