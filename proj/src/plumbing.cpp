#include "plumbtwist/plumbing.hpp"

#include <algorithm>
#include <set>

namespace pt {

const Sphere* PlumbingGraph::find_sphere(const std::string& id) const {
  for (const auto& s : spheres)
    if (s.id == id) return &s;
  return nullptr;
}

const PlumbingPoint* PlumbingGraph::find_point(const std::string& id) const {
  for (const auto& p : points)
    if (p.id == id) return &p;
  return nullptr;
}

Sign PlumbingGraph::sphere_sign(const std::string& id) const {
  const Sphere* s = find_sphere(id);
  if (!s) throw plumbing_error("unknown sphere id: " + id);
  return s->sign;
}

std::vector<const PlumbingPoint*> PlumbingGraph::points_on(const std::string& sphere_id) const {
  std::vector<const PlumbingPoint*> out;
  for (const auto& p : points)
    if (p.sphere_a == sphere_id || p.sphere_b == sphere_id) out.push_back(&p);
  std::sort(out.begin(), out.end(), [&](const PlumbingPoint* a, const PlumbingPoint* b) {
    int pa = a->sphere_a == sphere_id ? a->pos_a : a->pos_b;
    int pb = b->sphere_a == sphere_id ? b->pos_a : b->pos_b;
    if (pa != pb) return pa < pb;
    return a->id < b->id;
  });
  return out;
}

const std::string& PlumbingGraph::other_sphere(const PlumbingPoint& p, const std::string& sphere_id) const {
  if (p.sphere_a == sphere_id) return p.sphere_b;
  if (p.sphere_b == sphere_id) return p.sphere_a;
  throw plumbing_error("point " + p.id + " is not on sphere " + sphere_id);
}

bool PlumbingGraph::point_on(const PlumbingPoint& p, const std::string& sphere_id) const {
  return p.sphere_a == sphere_id || p.sphere_b == sphere_id;
}

int PlumbingGraph::position_on(const PlumbingPoint& p, const std::string& sphere_id) const {
  if (p.sphere_a == sphere_id) return p.pos_a;
  if (p.sphere_b == sphere_id) return p.pos_b;
  throw plumbing_error("point " + p.id + " is not on sphere " + sphere_id);
}

std::vector<std::string> PlumbingGraph::positive_spheres() const {
  std::vector<std::string> out;
  for (const auto& s : spheres)
    if (s.sign == Sign::positive) out.push_back(s.id);
  return out;
}

std::vector<std::string> PlumbingGraph::negative_spheres() const {
  std::vector<std::string> out;
  for (const auto& s : spheres)
    if (s.sign == Sign::negative) out.push_back(s.id);
  return out;
}

ValidationReport validate(const PlumbingGraph& g) {
  ValidationReport rep;
  auto add = [&](const std::string& code, const std::string& msg) {
    rep.issues.push_back({code, msg});
  };

  if (g.dimension < 1) add("bad_dimension", "dimension must be >= 1");

  std::set<std::string> sids;
  for (const auto& s : g.spheres) {
    if (!sids.insert(s.id).second) add("duplicate_sphere_id", "duplicate sphere id: " + s.id);
  }
  std::set<std::string> pids;
  for (const auto& p : g.points) {
    if (!pids.insert(p.id).second) add("duplicate_point_id", "duplicate point id: " + p.id);
    const Sphere* a = g.find_sphere(p.sphere_a);
    const Sphere* b = g.find_sphere(p.sphere_b);
    if (!a) add("unknown_sphere", "point " + p.id + " references unknown sphere " + p.sphere_a);
    if (!b) add("unknown_sphere", "point " + p.id + " references unknown sphere " + p.sphere_b);
    if (a && b && a->sign == b->sign)
      add("penner_sign_clash", "point " + p.id + " joins two spheres of the same sign");
  }

  // Distinct cyclic positions on each sphere.
  for (const auto& s : g.spheres) {
    std::set<int> seen;
    for (const auto* p : g.points_on(s.id)) {
      int pos = g.position_on(*p, s.id);
      if (!seen.insert(pos).second)
        add("duplicate_position", "sphere " + s.id + " has two points at position " + std::to_string(pos));
    }
  }

  // Connectivity of the incidence graph (spheres = nodes, points = edges).
  if (!g.spheres.empty()) {
    std::map<std::string, std::vector<std::string>> adj;
    for (const auto& p : g.points) {
      if (g.find_sphere(p.sphere_a) && g.find_sphere(p.sphere_b)) {
        adj[p.sphere_a].push_back(p.sphere_b);
        adj[p.sphere_b].push_back(p.sphere_a);
      }
    }
    std::set<std::string> seen;
    std::vector<std::string> stack{g.spheres.front().id};
    while (!stack.empty()) {
      std::string cur = stack.back();
      stack.pop_back();
      if (!seen.insert(cur).second) continue;
      for (const auto& nb : adj[cur]) stack.push_back(nb);
    }
    if (seen.size() != sids.size()) add("disconnected", "incidence graph is not connected");
    if (g.points.empty()) add("degenerate", "no plumbing points; no sphere meets an opposite-sign sphere");
  } else {
    add("empty", "graph has no spheres");
  }

  return rep;
}

FixedSurfaceGraph fixed_surface(const PlumbingGraph& g) {
  ValidationReport rep = validate(g);
  if (!rep.ok()) throw plumbing_error("fixed_surface: invalid input graph: " + rep.issues.front().message);
  FixedSurfaceGraph out;
  out.graph = g;
  out.graph.dimension = 1;
  for (const auto& s : g.spheres) out.provenance[s.id] = s.id;
  return out;
}

std::vector<std::vector<int>> incidence_matrix(const PlumbingGraph& g) {
  size_t n = g.spheres.size();
  std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
  std::map<std::string, size_t> index;
  for (size_t i = 0; i < n; ++i) index[g.spheres[i].id] = i;
  for (const auto& p : g.points) {
    auto ia = index.find(p.sphere_a);
    auto ib = index.find(p.sphere_b);
    if (ia == index.end() || ib == index.end()) continue;
    m[ia->second][ib->second] += 1;
    m[ib->second][ia->second] += 1;
  }
  return m;
}

}  // namespace pt
