#pragma once

#include <optional>
#include <string>
#include <vector>

#include "plumbtwist/transfer.hpp"

namespace pt {

// A whole word system: the per-factor matrices around the invariant-track
// cycle, the composed psi, and the staged (stage, disk, group) transition
// graph used by the reachability arguments.
class WordSystem {
 public:
  WordSystem(const TwistWord& w, const PlumbingGraph& g,
             Orientation orient = Orientation::standard, const TransferParams& params = {});

  const PlumbingGraph& graph() const { return graph_; }
  const DiskChoice& invariant() const { return invariant_; }
  int length() const { return static_cast<int>(stages_.size()); }
  const TransferMatrix& stage(int i) const { return stages_.at(i); }
  const TransferMatrix& psi() const { return psi_; }

  // Staged transition graph node: (stage, disk, group); an edge is an atom of
  // stage t whose target fiber is the node's fiber, leading to (t+1, src).
  struct Node {
    int stage;
    std::string disk;
    Group group;
    bool operator<(const Node& o) const {
      if (stage != o.stage) return stage < o.stage;
      if (disk != o.disk) return disk < o.disk;
      return group < o.group;
    }
    bool operator==(const Node& o) const {
      return stage == o.stage && disk == o.disk && group == o.group;
    }
  };

  // Diameter (in atom steps) of the staged graph over reachable pairs.
  int staged_diameter() const;
  bool has_trivial_atoms() const;

 private:
  PlumbingGraph graph_;
  DiskChoice invariant_;
  std::vector<TransferMatrix> stages_;  // stages_[i] = matrix of unit factor i (leftmost first)
  TransferMatrix psi_;
};

enum class StrandClass { disk_bounding, accumulation, undetermined };

// A finite strand prefix: psi-atom ids, outermost first.
struct StrandPrefix {
  std::vector<int> atoms;
};

struct limits_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Lemma 4 trichotomy for eventually periodic strands: disk-bounding iff a
// trivial atom occurs in the prefix or the period; an empty period leaves a
// bare prefix undetermined.
StrandClass classify_strand(const WordSystem& ws, const StrandPrefix& prefix,
                            const std::vector<int>& period);

struct ApproximationResult {
  enum class Status { found, spinning_fallback } status = Status::found;
  std::vector<int> extension;  // atoms appended after the prefix (inner side)
  int n_k = 0;                 // steps until the trivial atom (inclusive)
  int diameter_bound = 0;
};

// Extend an all-non-trivial prefix to a realizable strand that reaches a
// trivial atom within the staged-graph diameter; the one-point two-sphere
// plumbing has no trivial atoms and reports the spinning fallback.
ApproximationResult approximate_sequence(const WordSystem& ws, const StrandPrefix& prefix);

struct DecayCertificate {
  bool ok = true;
  double r_max = 0.0;
  double bound = 1.0;  // r_max^m
  int depth = 0;
  std::vector<std::string> violations;
};

// Certifies radius decay (radius <= r_max^m strand-by-strand) and nesting
// (every depth-(m+1) strand factors through a depth-m strand).
DecayCertificate decay_certificate(const TransferMatrix& psi, int depth);

}  // namespace pt
