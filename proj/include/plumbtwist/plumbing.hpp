#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace pt {

enum class Sign { positive, negative };
enum class Gluing { f, g };

inline Sign opposite(Sign s) { return s == Sign::positive ? Sign::negative : Sign::positive; }

struct Sphere {
  std::string id;
  Sign sign = Sign::positive;
};

// A plumbing point joins sphere_a and sphere_b; pos_a/pos_b are the cyclic
// positions of the point along the two equators.
struct PlumbingPoint {
  std::string id;
  std::string sphere_a;
  std::string sphere_b;
  Gluing gluing = Gluing::f;
  int pos_a = 0;
  int pos_b = 0;
};

class PlumbingGraph {
 public:
  int dimension = 2;
  std::vector<Sphere> spheres;
  std::vector<PlumbingPoint> points;

  const Sphere* find_sphere(const std::string& id) const;
  const PlumbingPoint* find_point(const std::string& id) const;
  Sign sphere_sign(const std::string& id) const;

  // Points incident to a sphere, sorted by their cyclic position on it.
  std::vector<const PlumbingPoint*> points_on(const std::string& sphere_id) const;
  // The sphere a point joins that is not `sphere_id`.
  const std::string& other_sphere(const PlumbingPoint& p, const std::string& sphere_id) const;
  bool point_on(const PlumbingPoint& p, const std::string& sphere_id) const;
  int position_on(const PlumbingPoint& p, const std::string& sphere_id) const;

  std::vector<std::string> positive_spheres() const;
  std::vector<std::string> negative_spheres() const;
};

struct ValidationIssue {
  std::string code;
  std::string message;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool ok() const { return issues.empty(); }
};

ValidationReport validate(const PlumbingGraph& g);

struct FixedSurfaceGraph {
  PlumbingGraph graph;                           // dimension == 1
  std::map<std::string, std::string> provenance; // original sphere id -> circle id
};

// Replace every sphere by its equator circle; combinatorics are preserved.
FixedSurfaceGraph fixed_surface(const PlumbingGraph& g);

// spheres x spheres, entry = number of plumbing points joining the pair.
std::vector<std::vector<int>> incidence_matrix(const PlumbingGraph& g);

struct plumbing_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace pt
