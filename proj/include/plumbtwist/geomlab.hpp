#pragma once

#include <Eigen/Dense>
#include <array>
#include <functional>
#include <string>
#include <vector>

namespace pt {

// A point of T*S^n: |u| = 1, <u,v> = 0.
struct CotangentPoint {
  Eigen::VectorXd u;
  Eigen::VectorXd v;

  double mu() const { return v.norm(); }
  bool valid(double tol = 1e-12) const;
};

struct geomlab_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class ProfileVariant { plateau, sloped };

// Twist profile r: [0,inf) -> R, r(0) = pi, r(t) = 0 for t >= eps, monotone.
// plateau keeps r = pi on [0, eps/2]; sloped has r'(0) < 0.
struct TwistProfile {
  double eps = 0.5;
  ProfileVariant variant = ProfileVariant::plateau;
  int samples = 257;

  double operator()(double t) const;
  std::vector<double> sampled() const;
};

// The circle action sigma(e^{it}) on T*S^n minus the zero section.
CotangentPoint circle_action(double t, const CotangentPoint& p);

// The model Dehn twist tau: circle action reparametrized by the profile on
// v != 0, the antipodal map on the zero section.
CotangentPoint model_twist(const CotangentPoint& p, const TwistProfile& profile);

// The involution eta_0 (flips all but the first two coordinates).
CotangentPoint involution(const CotangentPoint& p);

// Spinning: psi_y embeds T*S^1 into T*S^n along the unit vector y in R^n.
CotangentPoint spin_point(double theta, double t, const Eigen::VectorXd& y);

// Max deviation of the pulled-back symplectic form from the original over
// random samples (central differences, step h).
struct SymplecticityReport {
  double max_deviation = 0.0;
  int samples = 0;
};
SymplecticityReport symplecticity_check(
    const std::function<CotangentPoint(const CotangentPoint&)>& map, int dim_n, int sample_count,
    double min_mu, double max_mu, unsigned seed = 12345, double step = 1e-5);

// The Eq.-(7)-style Hamiltonian flow on R^4: a delta-profile rotation in the
// (x1,y1)/(x2,y2)-planes, identity outside the support.
Eigen::Vector4d hamiltonian_flow(const Eigen::Vector4d& x, double t, double c1, double c2);

// Symplecticity of the R^4 flow (standard form dx1^dy1 + dx2^dy2 with
// coordinates ordered (x1, x2, y1, y2)).
double flow_symplecticity_deviation(double t, double c1, double c2, int sample_count,
                                    unsigned seed = 777, double step = 1e-5);

// Thm-5-style check: the model twist of the fiber disk at the pole equals the
// spun image of the 2-dimensional twisted slice, slice by slice.
struct SurgeryIsotopyReport {
  double max_deviation = 0.0;
  int slices = 0;
  int samples_per_slice = 0;
  bool ok(double tol = 1e-9) const { return max_deviation <= tol; }
};
SurgeryIsotopyReport surgery_isotopy_demo(int n, const TwistProfile& profile, int slices = 16,
                                          int samples_per_slice = 33);

// Whole-suite runner for the CLI: every numeric oracle with its tolerance.
struct OracleResult {
  std::string name;
  bool pass;
  double deviation;
  double tolerance;
};
std::vector<OracleResult> run_oracle_suite(unsigned seed = 2024);

}  // namespace pt
