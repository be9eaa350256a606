#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "plumbtwist/diskdecomp.hpp"
#include "plumbtwist/plumbing.hpp"
#include "plumbtwist/twistsys.hpp"

namespace pt {

enum class AtomKind { scaling, singular1, singular2, trivial };
enum class Group { tilde, bar, whole };

std::string to_string(AtomKind k);
std::string to_string(Group g);

// Geometric constants of the normal forms. Admissible when all scales lie in
// (0,1) and r1 + r2 < r0 (the tube-disjointness inequalities).
struct TransferParams {
  double r1 = 0.125;  // scaling-atom fiber scale
  double r2 = 0.125;  // singular-atom fiber scale
  double r0 = 0.5;    // singular-atom center offset
  double rt = 0.125;  // trivial-atom fiber scale
  double c1 = 0.5;    // trivial-atom center
  double c2 = 0.0;

  bool admissible(std::string* why = nullptr) const;
};

// A typed map on S^{n-1} x D^n between fibers over two singular disks.
// Normal forms (theta, w):
//   scaling   : (theta + shift, sgn * r * w)              sgn from center_phase
//   singular1 : (theta + shift, phase*r0*e(theta) + r2 w)
//   singular2 : (theta + shift, phase*r0*e(theta) + r2 R(2 theta) w)
//   trivial   : (theta, (c1,c2) + rt w)
struct MapAtom {
  AtomKind kind = AtomKind::scaling;
  std::string src_disk;
  Group src_group = Group::whole;
  std::string dst_disk;
  Group dst_group = Group::whole;
  bool half_turn = false;  // angle shift pi vs 0
  double fiber_scale = 1.0;
  double center_offset = 0.0;     // r0; zero for scaling/trivial
  char center_phase = '+';        // sign of the rotating center; sign of scaling
  int fiber_rotation_degree = 0;  // 2 only for singular2
  double c1 = 0.0, c2 = 0.0;      // trivial centers
  bool identity = false;
  std::string label;  // "f1","g3","h_t","id",...

  // Evaluate on (theta, w).
  void eval(double theta, const std::array<double, 2>& w, double& theta_out,
            std::array<double, 2>& w_out) const;
};

// An entry element of a (possibly composed) matrix: a sequence of primitive
// atoms, outermost (applied last) first.
struct AtomPath {
  std::vector<int> atoms;  // indices into TransferMatrix::atom_table
};

struct TransferMatrix {
  DiskChoice source, target;
  std::vector<MapAtom> atom_table;
  // (target disk, source disk) -> formal sum of paths
  std::map<std::pair<std::string, std::string>, std::vector<AtomPath>> entries;

  const MapAtom& outer(const AtomPath& p) const { return atom_table[p.atoms.front()]; }
  const MapAtom& inner(const AtomPath& p) const { return atom_table[p.atoms.back()]; }
  double path_radius(const AtomPath& p) const;
  bool path_identity(const AtomPath& p) const;
};

struct transfer_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Lemma 3: the matrix of a single twist generator based at track dc. The
// target track is apply_F(gen, dc).
TransferMatrix twist_matrix(const TwistFactor& gen, const DiskChoice& dc, const PlumbingGraph& g,
                            const TransferParams& params = {});

// Matrix product with domain checking: source(m2) must equal target(m1).
TransferMatrix compose(const TransferMatrix& m2, const TransferMatrix& m1);

// The composed matrix of a whole word around the invariant-track cycle
// (source = target = apply_word_F fixed point of dc).
TransferMatrix word_matrix(const TwistWord& w, const DiskChoice& dc, const PlumbingGraph& g,
                           const TransferParams& params = {});

// Counting abelianization over (disk, group) indices.
struct CountingMatrix {
  std::vector<std::pair<std::string, Group>> index;  // row/col labels
  std::vector<std::vector<long long>> counts;        // counts[dst][src]

  int find(const std::string& disk, Group g) const;
  static CountingMatrix multiply(const CountingMatrix& a, const CountingMatrix& b);
  CountingMatrix power(int m) const;
};

CountingMatrix counting_matrix(const TransferMatrix& m);

struct Strand {
  std::vector<int> atoms;  // indices into the census's psi atom table, outermost first
  std::string src_disk;
  Group src_group;
  std::string dst_disk;
  Group dst_group;
  double radius = 1.0;
  double center_theta0[2] = {0.0, 0.0};  // tube center in the fiber over theta = 0
};

struct StrandCensus {
  int depth = 0;
  int block_length = 0;  // atoms per psi block
  DiskChoice track;
  std::vector<MapAtom> atom_table;  // psi's primitive atoms
  std::vector<Strand> strands;

  std::map<std::string, long long> counts_per_disk() const;
  std::string strand_key(const Strand& s) const;  // lexicographic atom-id encoding
};

// All depth-m strands of psi (an endo-matrix).
StrandCensus strand_census(const TransferMatrix& psi, int depth);

struct GeometryCertificate {
  bool ok = true;
  double r_max = 0.0;  // max non-identity fiber scale
  std::vector<std::string> violations;
  std::vector<std::string> notes;
};

// Scale bounds, the r1 + r2 < r0 inequality, and pairwise tube disjointness
// within each matrix entry via analytic min distances of the center families.
GeometryCertificate geometry_check(const TransferMatrix& m);
GeometryCertificate geometry_check(const StrandCensus& census);

// Singular-component markers of a carried class: one per strand whose
// outermost atom is of a singular kind.
struct CarriedMarker {
  std::string disk;    // singular disk containing the marker
  std::string strand;  // strand key
  bool real_blow_up = true;
};

struct CarriedClass {
  DiskChoice carrier;
  // per (disk, group) strand counts
  std::map<std::pair<std::string, Group>, long long> counts;
  std::vector<CarriedMarker> markers;
};

CarriedClass carried_class(const StrandCensus& census);

// Switch condition at each branch-locus disk: the full-fiber count splits as
// tilde + bar, both non-negative, and markers live in singular disks.
struct CarriedCheck {
  bool ok = true;
  std::vector<std::string> problems;
};
CarriedCheck check_carried(const CarriedClass& c, const PlumbingGraph& g);

}  // namespace pt
