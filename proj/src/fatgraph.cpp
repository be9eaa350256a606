#include "plumbtwist/fatgraph.hpp"

#include <algorithm>
#include <set>

namespace pt {

FatGraph::FatGraph(const PlumbingGraph& g) : graph_(g) {
  if (g.points.empty()) throw fatgraph_error("FatGraph: graph has no plumbing points");
  for (const auto& p : g.points) {
    vertex_of_[p.id] = static_cast<int>(point_of_.size());
    point_of_.push_back(p.id);
  }
  for (const auto& s : g.spheres) {
    auto pts = g.points_on(s.id);
    if (pts.empty()) continue;
    bool horizontal = s.sign == Sign::positive;
    std::vector<int>& list = sphere_edges_[s.id];
    int k = static_cast<int>(pts.size());
    for (int i = 0; i < k; ++i) {
      Edge e;
      e.from_vertex = vertex_of_[pts[i]->id];
      e.to_vertex = vertex_of_[pts[(i + 1) % k]->id];
      e.from_slot = horizontal ? E : N;
      e.to_slot = horizontal ? W : S;
      e.sphere = s.id;
      e.index_on_sphere = i;
      list.push_back(static_cast<int>(edges_.size()));
      edges_.push_back(e);
    }
  }
}

bool FatGraph::sphere_horizontal(const std::string& sphere) const {
  return graph_.sphere_sign(sphere) == Sign::positive;
}

int FatGraph::head_vertex(int dir) const {
  const Edge& e = edges_[edge_of(dir)];
  return dir & 1 ? e.from_vertex : e.to_vertex;
}
int FatGraph::head_slot(int dir) const {
  const Edge& e = edges_[edge_of(dir)];
  return dir & 1 ? e.from_slot : e.to_slot;
}
int FatGraph::tail_vertex(int dir) const {
  const Edge& e = edges_[edge_of(dir)];
  return dir & 1 ? e.to_vertex : e.from_vertex;
}
int FatGraph::tail_slot(int dir) const {
  const Edge& e = edges_[edge_of(dir)];
  return dir & 1 ? e.to_slot : e.from_slot;
}

Walk core_walk(const FatGraph& fg, const std::string& sphere) {
  Walk w;
  for (int e : fg.sphere_edges(sphere)) w.dirs.push_back(FatGraph::forward(e));
  return w;
}

Walk reduce(const FatGraph& fg, Walk w) {
  (void)fg;
  bool changed = true;
  while (changed && w.dirs.size() >= 2) {
    changed = false;
    std::vector<int> out;
    size_t n = w.dirs.size();
    for (size_t i = 0; i < n; ++i) {
      if (!out.empty() && out.back() == FatGraph::reverse_dir(w.dirs[i])) {
        out.pop_back();
        changed = true;
      } else {
        out.push_back(w.dirs[i]);
      }
    }
    // cyclic wraparound
    while (out.size() >= 2 && out.front() == FatGraph::reverse_dir(out.back())) {
      out.erase(out.begin());
      out.pop_back();
      changed = true;
    }
    w.dirs = std::move(out);
  }
  return w;
}

namespace {

// ccw offset of slot g from slot base, in {1,2,3} (g != base).
int ccw_from(int base, int g) {
  int d = (g - base) & 3;
  return d;
}

struct Alignment {
  size_t i, j;   // start positions in w1, w2
  int sigma;     // +1 parallel, -1 antiparallel, 0 vertex-only
  size_t len;    // shared edges (0 for vertex alignments)
};

// Crossing test for a maximal alignment.
bool alignment_crosses(const FatGraph& fg, const Walk& w1, const Walk& w2, const Alignment& al) {
  size_t L1 = w1.size(), L2 = w2.size();
  auto d1 = [&](size_t t) { return w1.dirs[t % L1]; };
  auto d2 = [&](size_t t) { return w2.dirs[t % L2]; };
  auto d2b = [&](long long t) { return w2.dirs[((t % (long long)L2) + L2) % L2]; };

  if (al.sigma == 0) {
    // Vertex-only: passes (A,B) and (C,D) cross iff they interleave.
    int A = fg.head_slot(d1(al.i + L1 - 1));
    int B = fg.tail_slot(d1(al.i));
    int C = fg.head_slot(d2(al.j + L2 - 1));
    int D = fg.tail_slot(d2(al.j));
    int c = ccw_from(A, C), d = ccw_from(A, D), b = ccw_from(A, B);
    bool c_in = c < b, d_in = d < b;  // strictly between A and B going ccw
    return c_in != d_in;
  }

  // Run alignment: entering and leaving germs.
  int run_first = d1(al.i);
  int run_last = d1(al.i + al.len - 1);
  int p0 = fg.tail_slot(run_first);
  int p1 = fg.head_slot(run_last);

  int a1 = fg.head_slot(d1(al.i + L1 - 1));
  int b1 = fg.tail_slot(d1(al.i + al.len));
  int a2, b2;
  if (al.sigma > 0) {
    a2 = fg.head_slot(d2(al.j + L2 - 1));
    b2 = fg.tail_slot(d2(al.j + al.len));
  } else {
    // w2 runs antiparallel: at the start vertex its germ is the tail of the
    // next w2 edge, at the end vertex the head of the earlier one.
    a2 = fg.tail_slot(d2(al.j + 1));
    b2 = fg.head_slot(d2b(static_cast<long long>(al.j) - static_cast<long long>(al.len)));
  }
  bool left_above = ccw_from(p0, a1) < ccw_from(p0, a2);
  bool right_above = ccw_from(p1, b1) > ccw_from(p1, b2);
  return left_above != right_above;
}

std::vector<Alignment> maximal_alignments(const FatGraph& fg, const Walk& w1, const Walk& w2) {
  std::vector<Alignment> out;
  size_t L1 = w1.size(), L2 = w2.size();
  if (L1 == 0 || L2 == 0) return out;
  auto d1 = [&](size_t t) { return w1.dirs[t % L1]; };
  auto d2 = [&](size_t t) { return w2.dirs[t % L2]; };
  auto d2b = [&](long long t) { return w2.dirs[((t % (long long)L2) + L2) % L2]; };
  size_t cap = L1 + L2;

  // Parallel runs.
  for (size_t i = 0; i < L1; ++i)
    for (size_t j = 0; j < L2; ++j) {
      if (d1(i) != d2(j)) continue;
      if (d1(i + L1 - 1) == d2(j + L2 - 1)) continue;  // not a left-maximal start
      size_t len = 1;
      while (len < cap && d1(i + len) == d2(j + len)) ++len;
      if (len >= cap) throw fatgraph_error("walk_intersection: walks share a full cycle");
      out.push_back({i, j, +1, len});
    }
  // Antiparallel runs.
  for (size_t i = 0; i < L1; ++i)
    for (size_t j = 0; j < L2; ++j) {
      if (d1(i) != FatGraph::reverse_dir(d2(j))) continue;
      if (d1(i + L1 - 1) == FatGraph::reverse_dir(d2(j + 1))) continue;
      size_t len = 1;
      while (len < cap &&
             d1(i + len) == FatGraph::reverse_dir(d2b(static_cast<long long>(j) -
                                                      static_cast<long long>(len))))
        ++len;
      if (len >= cap) throw fatgraph_error("walk_intersection: walks share a full cycle");
      out.push_back({i, j, -1, len});
    }
  // Vertex-only alignments: passes through a common vertex sharing no germ.
  for (size_t i = 0; i < L1; ++i) {
    int v = fg.tail_vertex(d1(i));
    int A_dir = FatGraph::reverse_dir(d1(i + L1 - 1));
    int B_dir = d1(i);
    for (size_t j = 0; j < L2; ++j) {
      if (fg.tail_vertex(d2(j)) != v) continue;
      int C_dir = FatGraph::reverse_dir(d2(j + L2 - 1));
      int D_dir = d2(j);
      // Shared germ (same undirected edge-end) means this pair is part of a
      // run alignment; skip it here.
      auto same_germ = [&](int x, int y) { return x == y; };
      if (same_germ(A_dir, C_dir) || same_germ(A_dir, D_dir) || same_germ(B_dir, C_dir) ||
          same_germ(B_dir, D_dir))
        continue;
      // Also skip if germs coincide after reversal: a germ at a vertex is a
      // half-edge; two half-edges coincide iff the directed edges leaving the
      // vertex coincide.
      out.push_back({i, j, 0, 0});
    }
  }
  return out;
}

}  // namespace

long long walk_intersection(const FatGraph& fg, const Walk& w1_in, const Walk& w2_in) {
  Walk w1 = reduce(fg, w1_in);
  Walk w2 = reduce(fg, w2_in);
  if (w1.empty() || w2.empty()) return 0;
  long long total = 0;
  for (const auto& al : maximal_alignments(fg, w1, w2))
    if (alignment_crosses(fg, w1, w2, al)) ++total;
  return total;
}

namespace {

// Insertion direction: the inserted core loop must create corners of the
// requested convention given the slot the curve enters through.
bool insert_forward(int enter_slot, bool horizontal, CornerConvention conv) {
  if (conv == CornerConvention::standard) {
    // NE/SW corners: N->E fwd, S->W bwd, E->N fwd, W->S bwd.
    if (horizontal) return enter_slot == FatGraph::N;  // else S: backward
    return enter_slot == FatGraph::E;                  // else W: backward
  }
  // NW/SE corners.
  if (horizontal) return enter_slot == FatGraph::S;  // S->E forward
  return enter_slot == FatGraph::W;                  // W->N forward
}

}  // namespace

Walk apply_twist(const FatGraph& fg, const Walk& w_in, const std::string& sphere, int count,
                 CornerConvention conv) {
  if (count <= 0) throw fatgraph_error("apply_twist: count must be positive");
  Walk w = reduce(fg, w_in);
  Walk core = core_walk(fg, sphere);
  if (w.empty()) return w;
  bool horizontal = fg.sphere_horizontal(sphere);

  // Find crossing positions with the core and the slot the curve enters by.
  struct Insertion {
    size_t pos;      // insert before w.dirs[pos]
    int enter_slot;  // slot of the incoming germ at the insertion vertex
    int vertex;
  };
  std::vector<Insertion> ins;
  size_t L1 = w.size();
  auto d1 = [&](size_t t) { return w.dirs[t % L1]; };
  for (const auto& al : maximal_alignments(fg, w, core)) {
    if (!alignment_crosses(fg, w, core, al)) continue;
    Insertion e;
    e.pos = al.i;
    e.enter_slot = fg.head_slot(d1(al.i + L1 - 1));
    e.vertex = fg.tail_vertex(d1(al.i));
    ins.push_back(e);
  }
  std::sort(ins.begin(), ins.end(), [](const Insertion& a, const Insertion& b) {
    return a.pos < b.pos;
  });

  // The core cycle starting at a given vertex, forward or backward.
  auto loop_from = [&](int vertex, bool fwd) {
    const auto& list = fg.sphere_edges(sphere);
    int k = static_cast<int>(list.size());
    int start = -1;
    for (int t = 0; t < k; ++t)
      if (fg.edges()[list[t]].from_vertex == vertex) start = t;
    if (start < 0) throw fatgraph_error("apply_twist: crossing vertex not on the sphere");
    std::vector<int> out;
    if (fwd) {
      for (int t = 0; t < k; ++t) out.push_back(FatGraph::forward(list[(start + t) % k]));
    } else {
      for (int t = 0; t < k; ++t)
        out.push_back(FatGraph::reversed(list[((start - 1 - t) % k + k) % k]));
    }
    return out;
  };

  Walk out;
  size_t next = 0;
  for (size_t pos = 0; pos < L1; ++pos) {
    while (next < ins.size() && ins[next].pos == pos) {
      bool fwd = insert_forward(ins[next].enter_slot, horizontal, conv);
      auto loop = loop_from(ins[next].vertex, fwd);
      for (int rep = 0; rep < count; ++rep)
        out.dirs.insert(out.dirs.end(), loop.begin(), loop.end());
      ++next;
    }
    out.dirs.push_back(w.dirs[pos]);
  }
  return reduce(fg, out);
}

Walk apply_word(const FatGraph& fg, const Walk& w, const TwistWord& word, CornerConvention conv) {
  Walk cur = reduce(fg, w);
  for (auto it = word.factors.rbegin(); it != word.factors.rend(); ++it)
    cur = apply_twist(fg, cur, it->sphere, std::abs(it->exponent), conv);
  return cur;
}

NormalCurve normal_curve(const FatGraph& fg, const Walk& w_in) {
  Walk w = reduce(fg, w_in);
  NormalCurve nc;
  size_t L = w.size();
  for (size_t i = 0; i < L; ++i) {
    nc.bands[FatGraph::edge_of(w.dirs[i])] += 1;
    int in_slot = fg.head_slot(w.dirs[i]);
    int out_slot = fg.tail_slot(w.dirs[(i + 1) % L]);
    const std::string& point = fg.point_of(fg.head_vertex(w.dirs[i]));
    auto& sq = nc.squares[point];
    auto pass = std::minmax(in_slot, out_slot);
    if (pass == std::minmax<int>(FatGraph::E, FatGraph::W)) sq.h += 1;
    else if (pass == std::minmax<int>(FatGraph::N, FatGraph::S)) sq.v += 1;
    else if (pass == std::minmax<int>(FatGraph::N, FatGraph::E)) sq.ne += 1;
    else if (pass == std::minmax<int>(FatGraph::S, FatGraph::W)) sq.sw += 1;
    else if (pass == std::minmax<int>(FatGraph::N, FatGraph::W)) sq.nw += 1;
    else sq.se += 1;
  }
  return nc;
}

}  // namespace pt
