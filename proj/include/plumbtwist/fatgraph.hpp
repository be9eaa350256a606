#pragma once

#include <map>
#include <string>
#include <vector>

#include "plumbtwist/plumbing.hpp"
#include "plumbtwist/twistsys.hpp"

namespace pt {

// Ribbon-graph model of the n=1 plumbing surface. Vertices are plumbing
// points with four germ slots in ccw order E(0), N(1), W(2), S(3); the
// positive sphere runs E-W through each vertex, the negative sphere N-S.
// Edges are the bands between consecutive points of a sphere.
class FatGraph {
 public:
  enum Slot { E = 0, N = 1, W = 2, S = 3 };

  struct Edge {
    int from_vertex;
    int from_slot;  // forward direction leaves through this slot (E or N)
    int to_vertex;
    int to_slot;  // and arrives through this one (W or S)
    std::string sphere;
    int index_on_sphere;
  };

  explicit FatGraph(const PlumbingGraph& g);

  const PlumbingGraph& graph() const { return graph_; }
  int vertex_of(const std::string& point_id) const { return vertex_of_.at(point_id); }
  const std::string& point_of(int vertex) const { return point_of_[vertex]; }
  int num_vertices() const { return static_cast<int>(point_of_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& sphere_edges(const std::string& sphere) const {
    return sphere_edges_.at(sphere);
  }
  bool sphere_horizontal(const std::string& sphere) const;

  // Directed edges are encoded as 2*edge + (0 forward / 1 reversed).
  static int forward(int edge) { return 2 * edge; }
  static int reversed(int edge) { return 2 * edge + 1; }
  static int reverse_dir(int dir) { return dir ^ 1; }
  static int edge_of(int dir) { return dir >> 1; }
  int head_vertex(int dir) const;
  int head_slot(int dir) const;
  int tail_vertex(int dir) const;
  int tail_slot(int dir) const;

 private:
  PlumbingGraph graph_;
  std::map<std::string, int> vertex_of_;
  std::vector<std::string> point_of_;
  std::vector<Edge> edges_;
  std::map<std::string, std::vector<int>> sphere_edges_;
};

// A free-homotopy class as a cyclic edge walk.
struct Walk {
  std::vector<int> dirs;  // directed edges
  bool empty() const { return dirs.empty(); }
  size_t size() const { return dirs.size(); }
};

struct fatgraph_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The core circle of a sphere as a forward walk.
Walk core_walk(const FatGraph& fg, const std::string& sphere);

// Cyclic reduction (backtrack removal).
Walk reduce(const FatGraph& fg, Walk w);

// Geometric intersection number of two reduced primitive cyclic walks via
// maximal-alignment alternation counting on the ribbon structure.
long long walk_intersection(const FatGraph& fg, const Walk& w1, const Walk& w2);

enum class CornerConvention { standard, opposite };  // NE/SW vs NW/SE corners

// One Penner twist applied to a walk: insert the core cycle at every
// essential crossing, oriented so the created corners match the convention
// (standard = positive twists on positive spheres and negative twists on
// negative spheres; opposite mirrors this). `count` repeats the insertion.
Walk apply_twist(const FatGraph& fg, const Walk& w, const std::string& sphere, int count,
                 CornerConvention conv);

// A whole Penner word (rightmost factor applied first).
Walk apply_word(const FatGraph& fg, const Walk& w, const TwistWord& word, CornerConvention conv);

// Per-cell view of a walk: square pass counts and band crossing counts.
struct NormalCurve {
  struct SquarePasses {
    long long h = 0, v = 0, ne = 0, sw = 0, nw = 0, se = 0;
  };
  std::map<std::string, SquarePasses> squares;  // by point id
  std::map<int, long long> bands;               // by edge id
};

NormalCurve normal_curve(const FatGraph& fg, const Walk& w);

}  // namespace pt
