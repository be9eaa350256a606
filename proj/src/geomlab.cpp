#include "plumbtwist/geomlab.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace pt {

namespace {
constexpr double kPi = std::numbers::pi;

Eigen::VectorXd project_off(const Eigen::VectorXd& v, const Eigen::VectorXd& u) {
  return v - u * u.dot(v);
}

CotangentPoint random_point(int n, std::mt19937& rng, double min_mu, double max_mu) {
  std::normal_distribution<double> gauss;
  std::uniform_real_distribution<double> unif(min_mu, max_mu);
  Eigen::VectorXd u(n + 1), w(n + 1);
  do {
    for (int i = 0; i <= n; ++i) u[i] = gauss(rng);
  } while (u.norm() < 1e-6);
  u.normalize();
  Eigen::VectorXd v;
  do {
    for (int i = 0; i <= n; ++i) w[i] = gauss(rng);
    v = project_off(w, u);
  } while (v.norm() < 1e-6);
  v *= unif(rng) / v.norm();
  return {u, v};
}

}  // namespace

bool CotangentPoint::valid(double tol) const {
  if (u.size() != v.size()) return false;
  if (std::abs(u.norm() - 1.0) > tol) return false;
  if (std::abs(u.dot(v)) > tol) return false;
  return true;
}

double TwistProfile::operator()(double t) const {
  if (t <= 0) return kPi;
  if (t >= eps) return 0.0;
  if (variant == ProfileVariant::plateau) {
    if (t <= eps / 2) return kPi;
    double s = (eps - t) / (eps / 2);  // 1 at eps/2, 0 at eps
    double smooth = s * s * (3 - 2 * s);
    return kPi * smooth;
  }
  // sloped: r'(0) < 0, C^1 flat at eps.
  double s = t / eps;
  return kPi * (1.0 - s * (2.0 - s));
}

std::vector<double> TwistProfile::sampled() const {
  std::vector<double> out(samples);
  for (int i = 0; i < samples; ++i) out[i] = (*this)(eps * i / (samples - 1));
  return out;
}

CotangentPoint circle_action(double t, const CotangentPoint& p) {
  double norm = p.v.norm();
  if (norm == 0.0) throw geomlab_error("circle_action: v = 0");
  double c = std::cos(t), s = std::sin(t);
  CotangentPoint out;
  out.u = c * p.u + s * p.v / norm;
  out.v = c * p.v - s * norm * p.u;
  return out;
}

CotangentPoint model_twist(const CotangentPoint& p, const TwistProfile& profile) {
  double norm = p.v.norm();
  if (norm == 0.0) return {-p.u, p.v};
  return circle_action(profile(norm), p);
}

CotangentPoint involution(const CotangentPoint& p) {
  CotangentPoint out = p;
  for (int i = 2; i < out.u.size(); ++i) {
    out.u[i] = -out.u[i];
    out.v[i] = -out.v[i];
  }
  return out;
}

CotangentPoint spin_point(double theta, double t, const Eigen::VectorXd& y) {
  int n = static_cast<int>(y.size());
  if (std::abs(y.norm() - 1.0) > 1e-12) throw geomlab_error("spin_point: |y| != 1");
  Eigen::VectorXd pole(n + 1), ydir(n + 1);
  pole.setZero();
  pole[n] = 1.0;
  ydir.setZero();
  ydir.head(n) = y;
  CotangentPoint out;
  out.u = std::cos(theta) * pole + std::sin(theta) * ydir;
  out.v = t * std::cos(theta) * ydir - t * std::sin(theta) * pole;
  return out;
}

SymplecticityReport symplecticity_check(
    const std::function<CotangentPoint(const CotangentPoint&)>& map, int dim_n, int sample_count,
    double min_mu, double max_mu, unsigned seed, double step) {
  std::mt19937 rng(seed);
  SymplecticityReport rep;
  rep.samples = sample_count;
  int n = dim_n;
  int chart_dim = 2 * n;

  for (int s = 0; s < sample_count; ++s) {
    CotangentPoint p = random_point(n, rng, min_mu, max_mu);

    // Orthonormal tangent frame of S^n at u.
    Eigen::MatrixXd frame(n + 1, n);
    {
      Eigen::MatrixXd basis = Eigen::MatrixXd::Identity(n + 1, n + 1);
      int col = 0;
      Eigen::MatrixXd acc(n + 1, n);
      for (int i = 0; i <= n && col < n; ++i) {
        Eigen::VectorXd cand = project_off(basis.col(i), p.u);
        for (int j = 0; j < col; ++j) cand -= acc.col(j) * acc.col(j).dot(cand);
        if (cand.norm() > 1e-8) {
          acc.col(col) = cand / cand.norm();
          ++col;
        }
      }
      frame = acc;
    }

    // Chart psi(a, b) around p.
    auto chart = [&](const Eigen::VectorXd& ab) {
      Eigen::VectorXd u = p.u + frame * ab.head(n);
      u.normalize();
      Eigen::VectorXd v = project_off(p.v + frame * ab.tail(n), u);
      CotangentPoint q;
      q.u = u;
      q.v = v;
      return q;
    };

    auto omega_matrix = [&](const std::function<CotangentPoint(const Eigen::VectorXd&)>& f) {
      Eigen::MatrixXd Ju(n + 1, chart_dim), Jv(n + 1, chart_dim);
      Eigen::VectorXd ab = Eigen::VectorXd::Zero(chart_dim);
      for (int k = 0; k < chart_dim; ++k) {
        Eigen::VectorXd hi = ab, lo = ab;
        hi[k] += step;
        lo[k] -= step;
        CotangentPoint a = f(hi), b = f(lo);
        Ju.col(k) = (a.u - b.u) / (2 * step);
        Jv.col(k) = (a.v - b.v) / (2 * step);
      }
      Eigen::MatrixXd m = Ju.transpose() * Jv - Jv.transpose() * Ju;
      return m;
    };

    Eigen::MatrixXd before = omega_matrix(chart);
    Eigen::MatrixXd after = omega_matrix([&](const Eigen::VectorXd& ab) { return map(chart(ab)); });
    double dev = (after - before).cwiseAbs().maxCoeff();
    rep.max_deviation = std::max(rep.max_deviation, dev);
  }
  return rep;
}

namespace {

double delta_profile(double x) {
  if (x <= 1.0) return kPi / 2;
  if (x >= 2.0) return 0.0;
  double s = 2.0 - x;  // 1 at x=1, 0 at x=2
  return kPi / 2 * s * s * (3 - 2 * s);
}

}  // namespace

Eigen::Vector4d hamiltonian_flow(const Eigen::Vector4d& x, double t, double c1, double c2) {
  // coordinates (x1, x2, y1, y2); H_t rotates (x1,y1) and (x2,y2) together.
  double arg = c1 * std::hypot(x[0], x[1]) + c2 * std::hypot(x[2], x[3]);
  double ang = t * delta_profile(arg);
  double c = std::cos(ang), s = std::sin(ang);
  Eigen::Matrix4d h;
  h << c, 0, -s, 0,
       0, c, 0, -s,
       s, 0, c, 0,
       0, s, 0, c;
  return h * x;
}

double flow_symplecticity_deviation(double t, double c1, double c2, int sample_count,
                                    unsigned seed, double step) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> unif(-2.5, 2.5);
  Eigen::Matrix4d J;
  J << 0, 0, 1, 0,
       0, 0, 0, 1,
       -1, 0, 0, 0,
       0, -1, 0, 0;
  double worst = 0.0;
  for (int s = 0; s < sample_count; ++s) {
    Eigen::Vector4d x;
    for (int i = 0; i < 4; ++i) x[i] = unif(rng);
    Eigen::Matrix4d Df;
    for (int k = 0; k < 4; ++k) {
      Eigen::Vector4d hi = x, lo = x;
      hi[k] += step;
      lo[k] -= step;
      Df.col(k) = (hamiltonian_flow(hi, t, c1, c2) - hamiltonian_flow(lo, t, c1, c2)) / (2 * step);
    }
    double dev = (Df.transpose() * J * Df - J).cwiseAbs().maxCoeff();
    worst = std::max(worst, dev);
  }
  return worst;
}

SurgeryIsotopyReport surgery_isotopy_demo(int n, const TwistProfile& profile, int slices,
                                          int samples_per_slice) {
  if (n < 1 || n > 3) throw geomlab_error("surgery_isotopy_demo: n must be 1..3");
  SurgeryIsotopyReport rep;
  rep.samples_per_slice = samples_per_slice;

  // 2-dimensional model twist on T*S^1 = {(theta, t)}: mu = |t|.
  auto twist_2d = [&](double theta, double t, double& theta_out, double& t_out) {
    if (t == 0.0) {
      theta_out = theta + kPi;
      t_out = 0.0;
      return;
    }
    double ang = profile(std::abs(t));
    // sigma(e^{is}) psi_y(theta, t) = psi_y(theta + sign(t) s, t).
    theta_out = theta + (t > 0 ? ang : -ang);
    t_out = t;
  };

  // Directions y on S^{n-1}.
  std::vector<Eigen::VectorXd> dirs;
  if (n == 1) {
    Eigen::VectorXd a(1), b(1);
    a[0] = 1;
    b[0] = -1;
    dirs = {a, b};
  } else if (n == 2) {
    for (int i = 0; i < slices; ++i) {
      Eigen::VectorXd y(2);
      double ang = 2 * kPi * i / slices;
      y << std::cos(ang), std::sin(ang);
      dirs.push_back(y);
    }
  } else {
    for (int i = 0; i < slices; ++i) {
      Eigen::VectorXd y(3);
      double a = 2 * kPi * i / slices, b = kPi * (i % 7) / 7.0;
      y << std::cos(a) * std::sin(b), std::sin(a) * std::sin(b), std::cos(b);
      if (y.norm() < 1e-9) y << 0, 0, 1;
      y.normalize();
      dirs.push_back(y);
    }
  }
  rep.slices = static_cast<int>(dirs.size());

  // The fiber disk at the pole is the spun image of the theta = 0 fiber of
  // T*S^1; compare tau on the ambient model with the spun 2-d twist.
  for (const auto& y : dirs) {
    for (int k = 0; k < samples_per_slice; ++k) {
      double t = -1.2 + 2.4 * k / (samples_per_slice - 1.0);
      CotangentPoint ambient_in = spin_point(0.0, t, y);
      CotangentPoint ambient_out = model_twist(ambient_in, profile);
      double th2, t2;
      twist_2d(0.0, t, th2, t2);
      CotangentPoint spun_out = spin_point(th2, t2, y);
      double dev = std::max((ambient_out.u - spun_out.u).cwiseAbs().maxCoeff(),
                            (ambient_out.v - spun_out.v).cwiseAbs().maxCoeff());
      rep.max_deviation = std::max(rep.max_deviation, dev);
    }
  }
  return rep;
}

std::vector<OracleResult> run_oracle_suite(unsigned seed) {
  std::vector<OracleResult> out;
  std::mt19937 rng(seed);
  TwistProfile plateau;
  TwistProfile sloped;
  sloped.variant = ProfileVariant::sloped;

  {  // mu-invariance of the circle action
    double worst = 0.0;
    std::uniform_real_distribution<double> tdist(-6.5, 6.5);
    for (int i = 0; i < 100; ++i) {
      CotangentPoint p = random_point(2, rng, 0.05, 2.0);
      CotangentPoint q = circle_action(tdist(rng), p);
      worst = std::max(worst, std::abs(q.mu() - p.mu()));
      worst = std::max(worst, std::abs(q.u.norm() - 1.0));
      worst = std::max(worst, std::abs(q.u.dot(q.v)));
    }
    out.push_back({"circle_action_mu_invariance", worst <= 1e-12, worst, 1e-12});
  }
  {  // model twist symplecticity (away from the zero section)
    auto rep = symplecticity_check([&](const CotangentPoint& p) { return model_twist(p, plateau); },
                                   2, 100, 0.05, 1.5, seed + 1);
    out.push_back({"model_twist_symplecticity", rep.max_deviation <= 1e-6, rep.max_deviation, 1e-6});
  }
  {  // zero-section branch is exactly antipodal
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
      CotangentPoint p = random_point(2, rng, 0.5, 1.0);
      p.v.setZero();
      CotangentPoint q = model_twist(p, plateau);
      worst = std::max(worst, (q.u + p.u).cwiseAbs().maxCoeff());
      worst = std::max(worst, q.v.cwiseAbs().maxCoeff());
    }
    out.push_back({"twist_zero_section_antipodal", worst == 0.0, worst, 0.0});
  }
  {  // involution is an involution and commutes with the twist
    double worst_inv = 0.0, worst_comm = 0.0;
    for (int i = 0; i < 100; ++i) {
      CotangentPoint p = random_point(2, rng, 0.05, 1.5);
      CotangentPoint q = involution(involution(p));
      worst_inv = std::max(worst_inv, (q.u - p.u).cwiseAbs().maxCoeff());
      worst_inv = std::max(worst_inv, (q.v - p.v).cwiseAbs().maxCoeff());
      CotangentPoint a = involution(model_twist(p, plateau));
      CotangentPoint b = model_twist(involution(p), plateau);
      worst_comm = std::max(worst_comm, (a.u - b.u).cwiseAbs().maxCoeff());
      worst_comm = std::max(worst_comm, (a.v - b.v).cwiseAbs().maxCoeff());
    }
    out.push_back({"involution_involutive", worst_inv <= 1e-9, worst_inv, 1e-9});
    out.push_back({"involution_twist_equivariance", worst_comm <= 1e-9, worst_comm, 1e-9});
  }
  {  // Hamiltonian flow: identity outside support, symplectic inside
    double worst_id = 0.0;
    std::uniform_real_distribution<double> unif(3.0, 6.0);
    for (int i = 0; i < 50; ++i) {
      Eigen::Vector4d x;
      for (int k = 0; k < 4; ++k) x[k] = unif(rng) * (k % 2 ? 1 : -1);
      Eigen::Vector4d y = hamiltonian_flow(x, 1.0, 1.0, 1.0);
      worst_id = std::max(worst_id, (y - x).cwiseAbs().maxCoeff());
    }
    out.push_back({"flow_identity_outside_support", worst_id == 0.0, worst_id, 0.0});
    double dev = flow_symplecticity_deviation(1.0, 1.0, 1.0, 100, seed + 2);
    out.push_back({"flow_symplecticity", dev <= 1e-6, dev, 1e-6});
  }
  {  // spinning agreement for both profiles
    auto rep1 = surgery_isotopy_demo(2, plateau);
    out.push_back({"surgery_isotopy_plateau", rep1.ok(1e-9), rep1.max_deviation, 1e-9});
    auto rep2 = surgery_isotopy_demo(2, sloped);
    out.push_back({"surgery_isotopy_sloped", rep2.ok(1e-9), rep2.max_deviation, 1e-9});
  }
  return out;
}

}  // namespace pt
