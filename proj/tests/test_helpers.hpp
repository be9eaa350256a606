#pragma once

#include "plumbtwist/plumbing.hpp"

// Shared fixture graphs. Sphere naming: positive spheres a0, a1, ...;
// negative spheres b1, b2, ... (matching the t0/s1 generator tokens).

inline pt::PlumbingGraph one_point_graph(int n = 2) {
  pt::PlumbingGraph g;
  g.dimension = n;
  g.spheres = {{"a0", pt::Sign::positive}, {"b1", pt::Sign::negative}};
  g.points = {{"p", "a0", "b1", pt::Gluing::f, 0, 0}};
  return g;
}

// The running example P(alpha, beta1, beta2): alpha meets beta1 at p and
// beta2 at q.
inline pt::PlumbingGraph running_example(int n = 2) {
  pt::PlumbingGraph g;
  g.dimension = n;
  g.spheres = {{"a0", pt::Sign::positive},
               {"b1", pt::Sign::negative},
               {"b2", pt::Sign::negative}};
  g.points = {{"p", "a0", "b1", pt::Gluing::f, 0, 0},
              {"q", "a0", "b2", pt::Gluing::f, 1, 0}};
  return g;
}

// Two spheres joined at two points (the paper's plumbing data (2,0) figure).
inline pt::PlumbingGraph two_point_graph(int n = 2, pt::Gluing second = pt::Gluing::f) {
  pt::PlumbingGraph g;
  g.dimension = n;
  g.spheres = {{"a0", pt::Sign::positive}, {"b1", pt::Sign::negative}};
  g.points = {{"p", "a0", "b1", pt::Gluing::f, 0, 0},
              {"q", "a0", "b1", second, 1, 1}};
  return g;
}

// Two positive spheres meeting one negative sphere.
inline pt::PlumbingGraph two_alpha_graph(int n = 2) {
  pt::PlumbingGraph g;
  g.dimension = n;
  g.spheres = {{"a0", pt::Sign::positive},
               {"a1", pt::Sign::positive},
               {"b1", pt::Sign::negative}};
  g.points = {{"p", "a0", "b1", pt::Gluing::f, 0, 0},
              {"q", "a1", "b1", pt::Gluing::f, 0, 1}};
  return g;
}
