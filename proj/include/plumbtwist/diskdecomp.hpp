#pragma once

#include <string>
#include <vector>

#include "plumbtwist/plumbing.hpp"
#include "plumbtwist/twistsys.hpp"

namespace pt {

enum class PartKind { sphere_complement, neck, disk, bar_plus, bar_minus };

struct TrackPart {
  PartKind kind;
  std::string anchor;  // sphere id for complements, point id otherwise
  char sign = 0;       // for disk parts: the chosen sign
  std::string id;      // "comp:<sphere>", "neck:<p>", "disk:<p>", "bar+:<p>", "bar-:<p>"
};

// The parts of Eq.-(5)-style tracks: one complement per sphere, and a neck,
// a chosen disk, and both antipodal disks per plumbing point.
std::vector<TrackPart> decompose(const DiskChoice& dc, const PlumbingGraph& g);

enum class DiskFlavor { S, SbarPlus, SbarMinus };

struct SingularDisk {
  std::string point;
  DiskFlavor flavor;
  char sign = 0;        // for S flavor: the track's choice at the point
  std::string center;   // "p", "tau(p)" or "sigma^-1(p)"
  bool on_branch_locus = false;  // true exactly for the S flavor
  std::string id;       // "S:<p>", "Sb+:<p>", "Sb-:<p>"
};

std::vector<SingularDisk> singular_disks(const DiskChoice& dc, const PlumbingGraph& g);

// The sphere carrying the chosen disk D_p of this track ('+' disks sit on the
// positive sphere for standard tracks; the roles swap on B^op).
std::string chosen_sphere(const DiskChoice& dc, const PlumbingGraph& g, const PlumbingPoint& p);

// The canonical marked cycle on a sphere's equator: the k points in cyclic
// order followed by their antipodes in the same order (2k slots).
struct MarkedSlot {
  std::string point;
  bool antipode = false;
};
std::vector<MarkedSlot> marked_cycle(const PlumbingGraph& g, const std::string& sphere_id);

struct RegularDisk {
  std::string id;                      // "arc:<s>:<i>", "neckpiece:<p>", "hemi:<s>:N|S"
  std::vector<std::string> covers;     // track part ids the piece lies in
  std::vector<std::string> adjacency;  // bounding singular disks / holes / smooth joins
};

// Regular pieces of the track: the complement arcs between consecutive marked
// slots on each sphere, plus one neck piece per point (hemisphere pieces for
// spheres without points).
std::vector<RegularDisk> regular_disks(const DiskChoice& dc, const PlumbingGraph& g);

struct DecompositionReport {
  struct Condition {
    int index;  // 1..5
    bool ok;
    std::string detail;
  };
  std::vector<Condition> conditions;
  bool ok() const {
    for (const auto& c : conditions)
      if (!c.ok) return false;
    return true;
  }
};

DecompositionReport check_decomposition(const DiskChoice& dc, const PlumbingGraph& g,
                                        const std::vector<SingularDisk>& disks,
                                        const std::vector<RegularDisk>& pieces);

struct decomp_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace pt
