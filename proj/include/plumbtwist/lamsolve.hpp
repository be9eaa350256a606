#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace pt {

struct lamsolve_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A sampled section f dtheta + g dr on the boundary circle {r=1}.
struct BoundarySection {
  std::vector<double> f, g;  // K samples at theta_j = 2 pi j / K
  int resolution() const { return static_cast<int>(f.size()); }

  static BoundarySection constant(double a, double b, int K);  // a dx + b dy
};

// A sampled loop family Gamma(r, theta) in R^2 (ascending r levels, the last
// one the boundary loop, the first a round circle of radius A * r0).
struct Isotopy {
  std::vector<double> r_levels;
  std::vector<std::vector<std::array<double, 2>>> loops;  // [level][theta sample]
};

struct CurvePoint {
  double r = 0, theta = 0;
  char color = 'r';  // 'r' = horizontal local max, 'b' = local min
};

struct SignedCurve {
  std::vector<CurvePoint> points;
  int sign = 0;        // sign of the dr-component along the curve
  bool closed = false;
  bool spans_both = false;  // connects the r0 and r=1 boundary circles
};

struct SignedCurveCollection {
  std::vector<SignedCurve> curves;
  double r0 = 0.1;
};

// Mark axis crossings of the loops level by level and trace them into signed
// red/blue curves (Lemma 5's collection C).
SignedCurveCollection collection_from_isotopy(const Isotopy& gamma);

struct SolveOptions {
  int nr = 64;
  int ntheta = 256;
  double r0 = 0.1;
  double inner_amplitude = 0.25;  // A of the closed-form inner patch A*y
  double margin = 1e-4;
  int projection_sweeps = 400;
  unsigned seed = 1;  // perturbs the start (used by the uniqueness tests)
};

struct PotentialSolution {
  int nr = 0, ntheta = 0;
  std::vector<std::vector<double>> phi;  // per strand, row-major [ir*ntheta + ith]
  double boundary_residual = 0.0;        // discrete-gradient mismatch on the boundary
  double min_grad_gap = 0.0;             // min over triangles of |grad(phi_i - phi_j)|, i != j
  bool constraints_ok = true;
  std::vector<std::string> notes;

  double value(int strand, int ir, int ith) const {
    return phi[strand][static_cast<size_t>(ir) * ntheta + (ith % ntheta + ntheta) % ntheta];
  }
};

// Lemma 5 solver: Dirichlet-energy minimizing potentials whose boundary
// differentials match the sections, subject to the sign constraints encoded
// by the collection (two-strand case; one strand needs no collection).
PotentialSolution solve_potentials(const std::vector<BoundarySection>& sections,
                                   const SignedCurveCollection* collection,
                                   const SolveOptions& opts = {});

// Constraint satisfaction of an arbitrary grid pair (used by the linear
// homotopy checks): the sign pattern of d(phi1 - phi0) against the collection.
struct FeasibilityReport {
  bool ok = true;
  double min_grad_gap = 0.0;
  std::vector<std::string> problems;
};
FeasibilityReport check_feasibility(const PotentialSolution& sol,
                                    const SignedCurveCollection* collection,
                                    const SolveOptions& opts);

struct NestReport {
  bool ok = true;
  std::vector<double> successive_distance;  // sup |dphi_{m+1} - dphi_m| over the grid
  std::vector<double> bound;                // 4 r^m
  std::vector<std::string> problems;
};

// Lemma 6 tower: one solve per depth with containment and Cauchy checks for
// the contraction ratio r.
NestReport nest_disks(const std::vector<BoundarySection>& tower, double contraction,
                      const SolveOptions& opts = {});

}  // namespace pt
