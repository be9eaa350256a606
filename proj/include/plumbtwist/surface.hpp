#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>
#include <vector>

#include "plumbtwist/fatgraph.hpp"
#include "plumbtwist/plumbing.hpp"
#include "plumbtwist/twistsys.hpp"

namespace pt {

using Rat = boost::multiprecision::cpp_rational;

struct surface_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Branch coordinates of an n=1 track: per sphere the fine complement arcs
// (split at points and antipodes) and the antipodal bar intervals; per point
// the chosen through-strand (H on the positive sphere, V on the negative) and
// the two corner strands of the track's family (NE/SW on B, NW/SE on B^op).
class BranchSystem {
 public:
  BranchSystem() = default;
  BranchSystem(const DiskChoice& dc, const PlumbingGraph& g);

  const DiskChoice& track() const { return track_; }
  const std::vector<std::string>& ids() const { return ids_; }
  int index(const std::string& id) const;
  bool has(const std::string& id) const { return index_.count(id) > 0; }
  int size() const { return static_cast<int>(ids_.size()); }

  // Branch id helpers.
  static std::string arc_id(const std::string& sphere, int i);
  std::string bar_id(const std::string& point_on_sphere, const std::string& sphere) const;
  // The chosen disk branch at a point ("H:p" or "V:p") as present in this track.
  std::string disk_id(const std::string& point) const;
  // Whether the chosen disk at `point` lies on `sphere`.
  bool disk_on(const std::string& point, const std::string& sphere) const;
  // The track family's corner pair at a point: ("NE:p","SW:p") on B,
  // ("NW:p","SE:p") on B^op.
  std::pair<std::string, std::string> corner_ids(const std::string& point) const;

  const PlumbingGraph& graph() const { return *graph_; }

 private:
  DiskChoice track_;
  const PlumbingGraph* graph_ = nullptr;
  std::vector<std::string> ids_;
  std::map<std::string, int> index_;
};

struct WeightVector {
  DiskChoice track;
  std::map<std::string, Rat> w;

  Rat at(const std::string& id) const {
    auto it = w.find(id);
    return it == w.end() ? Rat(0) : it->second;
  }
};

struct SwitchReport {
  bool ok = true;
  std::vector<std::string> problems;
};
SwitchReport check_switch_conditions(const WeightVector& wv, const PlumbingGraph& g);

// Integer matrix between two branch systems (columns indexed by source
// branches, rows by target branches).
struct WeightMatrix {
  BranchSystem source, target;
  std::vector<std::vector<long long>> m;  // m[row][col]

  WeightVector apply(const WeightVector& wv) const;
  static WeightMatrix multiply(const WeightMatrix& a, const WeightMatrix& b);
};

// Lemma 1 routing as a linear map on branch weights; target track is
// apply_F(gen, dc).
WeightMatrix twist_weight_matrix(const TwistFactor& gen, const DiskChoice& dc,
                                 const PlumbingGraph& g);

// Composed matrix of a word around the track cycle ending at dc.
WeightMatrix word_weight_matrix(const TwistWord& w, const DiskChoice& dc, const PlumbingGraph& g);

// The carried routing of a core circle: weight 1 along the core where its
// disks are present, detouring around the far side of the other sphere at
// missing disks. Throws if the routing cycles (core not carried).
WeightVector core_weights(const std::string& sphere, const DiskChoice& dc,
                          const PlumbingGraph& g);

// The same routing as an explicit fatgraph walk (shared by the oracle path).
Walk route_core_walk(const FatGraph& fg, const std::string& sphere, const DiskChoice& dc);

// Pass-count weights of a reduced walk, validated against the track.
WeightVector weights_from_walk(const FatGraph& fg, const Walk& walk, const DiskChoice& dc);

struct StretchResult {
  double lambda = 0.0;
  int iterations = 0;
  bool charpoly_bracketed = false;  // exact sign change of det(M - xI) around lambda
};

// Perron-Frobenius eigenvalue of the composed weight matrix (power iteration
// to 1e-9, with an exact rational characteristic-polynomial sign bracket).
StretchResult stretch_factor(const TwistWord& w, const PlumbingGraph& g,
                             Orientation orient = Orientation::standard);

struct InvariantWeights {
  WeightVector weights;  // normalized so the largest entry is 1
  double lambda = 0.0;
  double residual = 0.0;
};
InvariantWeights invariant_weights(const TwistWord& w, const PlumbingGraph& g,
                                   Orientation orient = Orientation::standard);

// Bilinear crossing count between a B-track class and a B^op-track class:
// through-strand crossings at the squares plus order-swap pairs of band
// passes under the canonical corner-hugging perturbation.
struct IntersectionResult {
  Rat value;
  bool minimality_warning = false;  // same weight profile: classes may be isotopic
};
IntersectionResult intersection_number(const WeightVector& w0, const WeightVector& w1,
                                       const PlumbingGraph& g);

struct FloerResult {
  long long hf_sum = 0;
  long long intersection = 0;
  std::vector<std::string> assumptions;
  bool isotopy_warning = false;
};

// Thm-4 dimension count: push the two cores through their words on the two
// invariant tracks and take the bilinear intersection number.
FloerResult floer_dims(const TwistWord& word0, const std::string& core0, const TwistWord& word1,
                       const std::string& core1, const PlumbingGraph& g);

// The independent oracle route: explicit walks twisted factor by factor.
long long floer_oracle(const TwistWord& word0, const std::string& core0, const TwistWord& word1,
                       const std::string& core1, const PlumbingGraph& g);

}  // namespace pt
