#include "plumbtwist/lamsolve.hpp"

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace pt {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTau = 2 * std::numbers::pi;
}  // namespace

BoundarySection BoundarySection::constant(double a, double b, int K) {
  BoundarySection s;
  s.f.resize(K);
  s.g.resize(K);
  for (int j = 0; j < K; ++j) {
    double th = kTau * j / K;
    // d(ax + by) = a dx + b dy; on r = 1: dx = -sin th dtheta + cos th dr, etc.
    s.f[j] = -a * std::sin(th) + b * std::cos(th);
    s.g[j] = a * std::cos(th) + b * std::sin(th);
  }
  return s;
}

SignedCurveCollection collection_from_isotopy(const Isotopy& gamma) {
  if (gamma.r_levels.size() != gamma.loops.size() || gamma.loops.size() < 2)
    throw lamsolve_error("collection_from_isotopy: need matching r levels and loops");

  struct Mark {
    double theta;
    char color;
    int sign;
    int curve = -1;
  };
  std::vector<std::vector<Mark>> marks(gamma.loops.size());

  for (size_t lev = 0; lev < gamma.loops.size(); ++lev) {
    const auto& loop = gamma.loops[lev];
    int K = static_cast<int>(loop.size());
    for (int j = 0; j < K; ++j) {
      const auto& p = loop[j];
      const auto& q = loop[(j + 1) % K];
      if (std::hypot(p[0], p[1]) < 1e-12)
        throw lamsolve_error("collection_from_isotopy: loop touches the origin");
      // Crossing of the vertical (dr) axis between consecutive samples.
      if ((p[0] > 0) == (q[0] > 0)) continue;
      double t = p[0] / (p[0] - q[0]);
      double y = p[1] + t * (q[1] - p[1]);
      double theta = kTau * (j + t) / K;
      Mark m;
      m.theta = theta;
      m.color = p[0] > 0 ? 'r' : 'b';  // right-to-left = red
      m.sign = y > 0 ? +1 : -1;
      if (std::abs(y) < 1e-9)
        throw lamsolve_error("collection_from_isotopy: crossing at the origin level");
      marks[lev].push_back(m);
    }
  }

  auto circ_dist = [](double a, double b) {
    double d = std::fmod(std::abs(a - b), kTau);
    return std::min(d, kTau - d);
  };

  // Trace curves upward through the levels.
  std::vector<SignedCurve> curves;
  std::vector<int> active;  // curve index per mark of the previous level
  for (size_t lev = 0; lev < marks.size(); ++lev) {
    std::vector<int> assigned(marks[lev].size(), -1);
    if (lev > 0) {
      // Greedy nearest matching against the previous level.
      std::vector<std::tuple<double, int, int>> cand;
      for (size_t a = 0; a < marks[lev - 1].size(); ++a)
        for (size_t b = 0; b < marks[lev].size(); ++b)
          if (marks[lev - 1][a].color == marks[lev][b].color)
            cand.push_back({circ_dist(marks[lev - 1][a].theta, marks[lev][b].theta),
                            static_cast<int>(a), static_cast<int>(b)});
      std::sort(cand.begin(), cand.end());
      std::vector<char> used_prev(marks[lev - 1].size(), 0);
      for (const auto& [d, a, b] : cand) {
        if (d > 1.0) break;  // finger moves stay local; beyond this is a new curve
        if (used_prev[a] || assigned[b] >= 0) continue;
        used_prev[a] = 1;
        assigned[b] = marks[lev - 1][a].curve;
      }
      // Unmatched marks of the previous level end their curve here (paired
      // turning points are joined below when curves are finalized).
    }
    for (size_t b = 0; b < marks[lev].size(); ++b) {
      if (assigned[b] < 0) {
        SignedCurve c;
        c.sign = marks[lev][b].sign;
        assigned[b] = static_cast<int>(curves.size());
        curves.push_back(c);
      }
      marks[lev][b].curve = assigned[b];
      SignedCurve& c = curves[assigned[b]];
      if (marks[lev][b].sign != c.sign)
        throw lamsolve_error("collection_from_isotopy: inconsistent dr-sign along a curve; "
                             "refine the sampling");
      c.points.push_back({gamma.r_levels[lev], marks[lev][b].theta, marks[lev][b].color});
    }
  }

  // Join curves that annihilate pairwise: two curves whose tops are adjacent
  // interior levels and whose endpoints are close become one arc.
  double top = gamma.r_levels.back();
  std::vector<char> dead(curves.size(), 0);
  for (size_t a = 0; a < curves.size(); ++a) {
    if (dead[a] || curves[a].points.empty()) continue;
    double ra = curves[a].points.back().r;
    if (std::abs(ra - top) < 1e-12) continue;  // reaches the boundary
    for (size_t b = a + 1; b < curves.size(); ++b) {
      if (dead[b] || curves[b].points.empty()) continue;
      double rb = curves[b].points.back().r;
      if (std::abs(rb - top) < 1e-12) continue;
      if (std::abs(ra - rb) > 1e-9) continue;
      if (curves[a].sign != curves[b].sign) continue;
      if (circ_dist(curves[a].points.back().theta, curves[b].points.back().theta) > 1.2) continue;
      // Merge b into a, reversed, forming one arc with both endpoints below.
      for (auto it = curves[b].points.rbegin(); it != curves[b].points.rend(); ++it)
        curves[a].points.push_back(*it);
      dead[b] = 1;
      break;
    }
  }

  SignedCurveCollection out;
  out.r0 = gamma.r_levels.front();
  for (size_t a = 0; a < curves.size(); ++a) {
    if (dead[a] || curves[a].points.empty()) continue;
    SignedCurve c = curves[a];
    double rfirst = c.points.front().r, rlast = c.points.back().r;
    c.spans_both = (std::abs(rfirst - out.r0) < 1e-12 &&
                    std::abs(rlast - top) < 1e-12) ||
                   (std::abs(rlast - out.r0) < 1e-12 && std::abs(rfirst - top) < 1e-12);
    out.curves.push_back(std::move(c));
  }
  return out;
}

namespace {

// Spectral antiderivative on the circle: Phi with dPhi/dtheta = f.
std::vector<double> integrate_circle(const std::vector<double>& f) {
  int K = static_cast<int>(f.size());
  double mean = 0;
  for (double x : f) mean += x;
  mean /= K;
  if (std::abs(mean) > 1e-8)
    throw lamsolve_error("boundary section has nonzero winding (mean of f != 0)");
  std::vector<double> phi(K, 0.0);
  for (int k = 1; k <= K / 2; ++k) {
    double re = 0, im = 0;
    for (int j = 0; j < K; ++j) {
      double ang = kTau * k * j / K;
      re += f[j] * std::cos(ang);
      im -= f[j] * std::sin(ang);
    }
    re *= 2.0 / K;
    im *= 2.0 / K;
    if (k == K / 2 && K % 2 == 0) {
      re /= 2;
      im /= 2;
    }
    // term (re + i im) e^{ik theta} integrates to (re + i im)/(ik) e^{ik theta}
    for (int j = 0; j < K; ++j) {
      double ang = kTau * k * j / K;
      phi[j] += (re * std::sin(ang) - im * std::cos(ang)) / k;
    }
  }
  return phi;
}

struct Grid {
  int nr, nth;
  double dr, dth;
  std::vector<double> r;  // radius per ring; ring 0 is the center point row

  int id(int ir, int ith) const { return ir * nth + ((ith % nth) + nth) % nth; }
};

// P1 stiffness assembly on a triangulated polar grid. The center is handled
// by a small ring at r = dr/4 glued by high-weight ties (keeps indexing flat).
Eigen::SparseMatrix<double> stiffness(const Grid& g) {
  typedef Eigen::Triplet<double> T;
  std::vector<T> trip;
  auto add_triangle = [&](int a, int b, int c, const std::array<double, 2>& pa,
                          const std::array<double, 2>& pb, const std::array<double, 2>& pc) {
    double x1 = pb[0] - pa[0], y1 = pb[1] - pa[1];
    double x2 = pc[0] - pa[0], y2 = pc[1] - pa[1];
    double det = x1 * y2 - x2 * y1;
    if (std::abs(det) < 1e-15) return;
    double area = std::abs(det) / 2;
    // gradients of the barycentric hats
    std::array<std::array<double, 2>, 3> grad;
    grad[1] = {y2 / det, -x2 / det};
    grad[2] = {-y1 / det, x1 / det};
    grad[0] = {-grad[1][0] - grad[2][0], -grad[1][1] - grad[2][1]};
    int ids[3] = {a, b, c};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        trip.push_back(T(ids[i], ids[j],
                         area * (grad[i][0] * grad[j][0] + grad[i][1] * grad[j][1])));
  };
  auto pos = [&](int ir, int ith) -> std::array<double, 2> {
    double th = kTau * ith / g.nth;
    return {g.r[ir] * std::cos(th), g.r[ir] * std::sin(th)};
  };
  for (int ir = 0; ir + 1 < g.nr; ++ir)
    for (int ith = 0; ith < g.nth; ++ith) {
      int a = g.id(ir, ith), b = g.id(ir, ith + 1);
      int c = g.id(ir + 1, ith), d = g.id(ir + 1, ith + 1);
      add_triangle(a, b, c, pos(ir, ith), pos(ir, ith + 1), pos(ir + 1, ith));
      add_triangle(b, d, c, pos(ir, ith + 1), pos(ir + 1, ith + 1), pos(ir + 1, ith));
    }
  Eigen::SparseMatrix<double> K(g.nr * g.nth, g.nr * g.nth);
  K.setFromTriplets(trip.begin(), trip.end());
  return K;
}

// The per-level sign of d_theta(phi1 - phi0) demanded by the collection:
// crossings alternate the sign, flipping downward (+ -> -) at red curves.
std::vector<std::vector<int>> region_signs(const SignedCurveCollection& c, const Grid& g) {
  std::vector<std::vector<int>> signs(g.nr, std::vector<int>(g.nth, 0));
  for (int ir = 0; ir < g.nr; ++ir) {
    double r = g.r[ir];
    // Crossings of the collection at this radius.
    std::vector<std::pair<double, char>> cross;
    for (const auto& curve : c.curves) {
      for (size_t t = 0; t + 1 < curve.points.size(); ++t) {
        double r1 = curve.points[t].r, r2 = curve.points[t + 1].r;
        if ((r1 <= r && r < r2) || (r2 <= r && r < r1)) {
          double s = (r - r1) / (r2 - r1);
          double th = curve.points[t].theta +
                      s * (curve.points[t + 1].theta - curve.points[t].theta);
          cross.push_back({std::fmod(th + kTau, kTau), curve.points[t].color});
        }
      }
      if (curve.spans_both && !curve.points.empty()) {
        // Extend the end segments radially.
        const auto& last = curve.points.back();
        const auto& first = curve.points.front();
        if (r > std::max(first.r, last.r) || r < std::min(first.r, last.r)) {
          const auto& end = r > std::max(first.r, last.r)
                                ? (first.r > last.r ? first : last)
                                : (first.r < last.r ? first : last);
          cross.push_back({std::fmod(end.theta + kTau, kTau), end.color});
        }
      }
    }
    if (cross.empty()) continue;
    std::sort(cross.begin(), cross.end());
    for (int ith = 0; ith < g.nth; ++ith) {
      double th = kTau * (ith + 0.5) / g.nth;
      // Sign just east of the last crossing west of th.
      const std::pair<double, char>* west = nullptr;
      for (const auto& cr : cross)
        if (cr.first <= th) west = &cr;
      if (!west) west = &cross.back();
      signs[ir][ith] = west->second == 'r' ? -1 : +1;  // decreasing east of a max
    }
  }
  return signs;
}

}  // namespace

PotentialSolution solve_potentials(const std::vector<BoundarySection>& sections,
                                   const SignedCurveCollection* collection,
                                   const SolveOptions& opts) {
  if (sections.empty()) throw lamsolve_error("solve_potentials: no sections");
  int K = opts.ntheta;
  for (const auto& s : sections)
    if (s.resolution() != K)
      throw lamsolve_error("solve_potentials: sections must be sampled at ntheta points");

  Grid g;
  g.nr = opts.nr;
  g.nth = K;
  g.r.resize(g.nr);
  for (int ir = 0; ir < g.nr; ++ir) g.r[ir] = std::max(1e-3, double(ir) / (g.nr - 1));
  g.dr = 1.0 / (g.nr - 1);
  g.dth = kTau / K;

  Eigen::SparseMatrix<double> Kmat = stiffness(g);

  PotentialSolution sol;
  sol.nr = g.nr;
  sol.ntheta = g.nth;

  int inner_ring = std::max(1, static_cast<int>(std::round(opts.r0 * (g.nr - 1))));

  for (size_t s = 0; s < sections.size(); ++s) {
    std::vector<double> boundary = integrate_circle(sections[s].f);
    // Fix mean zero for determinism, then pin two outer rings.
    std::vector<char> fixed(g.nr * g.nth, 0);
    Eigen::VectorXd x = Eigen::VectorXd::Zero(g.nr * g.nth);
    for (int ith = 0; ith < g.nth; ++ith) {
      int top = g.id(g.nr - 1, ith), sub = g.id(g.nr - 2, ith);
      x[top] = boundary[ith];
      x[sub] = boundary[ith] - g.dr * sections[s].g[ith];
      fixed[top] = fixed[sub] = 1;
    }
    bool constrained_strand = collection && s == 1;
    if (constrained_strand) {
      // Closed-form inner patch A*y up to the r0 ring.
      for (int ir = 0; ir <= inner_ring; ++ir)
        for (int ith = 0; ith < g.nth; ++ith) {
          int idx = g.id(ir, ith);
          x[idx] = opts.inner_amplitude * g.r[ir] * std::sin(kTau * ith / g.nth);
          fixed[idx] = 1;
        }
    }

    // Solve the equality-constrained minimization by eliminating pinned nodes.
    std::vector<int> free_ids, perm(g.nr * g.nth, -1);
    for (int i = 0; i < g.nr * g.nth; ++i)
      if (!fixed[i]) {
        perm[i] = static_cast<int>(free_ids.size());
        free_ids.push_back(i);
      }
    typedef Eigen::Triplet<double> T;
    std::vector<T> trip;
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(free_ids.size());
    for (int k = 0; k < Kmat.outerSize(); ++k)
      for (Eigen::SparseMatrix<double>::InnerIterator it(Kmat, k); it; ++it) {
        int i = static_cast<int>(it.row()), j = static_cast<int>(it.col());
        if (fixed[i]) continue;
        if (fixed[j])
          rhs[perm[i]] -= it.value() * x[j];
        else
          trip.push_back(T(perm[i], perm[j], it.value()));
      }
    Eigen::SparseMatrix<double> A(free_ids.size(), free_ids.size());
    A.setFromTriplets(trip.begin(), trip.end());
    Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> solver(A);
    if (solver.info() != Eigen::Success) throw lamsolve_error("solve_potentials: factorization failed");
    Eigen::VectorXd xf = solver.solve(rhs);
    for (size_t i = 0; i < free_ids.size(); ++i) x[free_ids[i]] = xf[i];

    // Deterministic seed-dependent start only matters for the projection
    // phase below; record the harmonic solution first.
    std::vector<double> phi(x.data(), x.data() + x.size());

    if (constrained_strand) {
      // Projection sweeps for the sign constraints from the collection.
      auto signs = region_signs(*collection, g);
      std::mt19937 rng(opts.seed);
      std::uniform_real_distribution<double> jitter(0.0, 1e-9);
      double m = opts.margin * g.dth;
      for (int sweep = 0; sweep < opts.projection_sweeps; ++sweep) {
        double worst = 0;
        for (int ir = inner_ring + 1; ir < g.nr - 2; ++ir)
          for (int ith = 0; ith < g.nth; ++ith) {
            int sgn = signs[ir][ith];
            if (sgn == 0) continue;
            int a = g.id(ir, ith), b = g.id(ir, ith + 1);
            double diff = phi[b] - phi[a];  // ~ d_theta
            double want = sgn * m;
            if (sgn > 0 && diff < want) {
              double fix = (want - diff) / 2 + jitter(rng);
              phi[b] += fix;
              phi[a] -= fix;
              worst = std::max(worst, want - diff);
            } else if (sgn < 0 && diff > want) {
              double fix = (diff - want) / 2 + jitter(rng);
              phi[b] -= fix;
              phi[a] += fix;
              worst = std::max(worst, diff - want);
            }
          }
        // Smooth the interior toward harmonicity while keeping pins.
        for (int ir = inner_ring + 1; ir < g.nr - 2; ++ir)
          for (int ith = 0; ith < g.nth; ++ith) {
            int idx = g.id(ir, ith);
            double avg = 0.25 * (phi[g.id(ir - 1, ith)] + phi[g.id(ir + 1, ith)] +
                                 phi[g.id(ir, ith - 1)] + phi[g.id(ir, ith + 1)]);
            phi[idx] = 0.5 * phi[idx] + 0.5 * avg;
          }
        if (sweep > 20 && worst < 1e-14) break;
      }
    }
    sol.phi.push_back(std::move(phi));
  }

  // Boundary residual under the grid's discrete operators.
  double worst = 0;
  for (size_t s = 0; s < sections.size(); ++s) {
    std::vector<double> boundary = integrate_circle(sections[s].f);
    for (int ith = 0; ith < g.nth; ++ith) {
      double dth = (sol.value(static_cast<int>(s), g.nr - 1, ith + 1) -
                    sol.value(static_cast<int>(s), g.nr - 1, ith - 1)) /
                   (2 * g.dth);
      double fref = (boundary[(ith + 1) % K] - boundary[(ith - 1 + K) % K]) / (2 * g.dth);
      worst = std::max(worst, std::abs(dth - fref));
      double drv = (sol.value(static_cast<int>(s), g.nr - 1, ith) -
                    sol.value(static_cast<int>(s), g.nr - 2, ith)) /
                   g.dr;
      worst = std::max(worst, std::abs(drv - sections[s].g[ith]));
    }
  }
  sol.boundary_residual = worst;

  // Pairwise gradient gaps.
  if (sections.size() >= 2) {
    double best = 1e300;
    for (size_t a = 0; a < sections.size(); ++a)
      for (size_t b = a + 1; b < sections.size(); ++b) {
        for (int ir = inner_ring + 1; ir < g.nr - 1; ++ir)
          for (int ith = 0; ith < g.nth; ++ith) {
            double dthA = (sol.value(static_cast<int>(a), ir, ith + 1) -
                           sol.value(static_cast<int>(a), ir, ith - 1)) /
                          (2 * g.dth * g.r[ir]);
            double dthB = (sol.value(static_cast<int>(b), ir, ith + 1) -
                           sol.value(static_cast<int>(b), ir, ith - 1)) /
                          (2 * g.dth * g.r[ir]);
            double drA = (sol.value(static_cast<int>(a), ir + 1, ith) -
                          sol.value(static_cast<int>(a), ir - 1, ith)) /
                         (2 * g.dr);
            double drB = (sol.value(static_cast<int>(b), ir + 1, ith) -
                          sol.value(static_cast<int>(b), ir - 1, ith)) /
                         (2 * g.dr);
            best = std::min(best, std::hypot(dthA - dthB, drA - drB));
          }
      }
    sol.min_grad_gap = best;
  }

  if (collection) {
    auto rep = check_feasibility(sol, collection, opts);
    sol.constraints_ok = rep.ok;
    for (const auto& p : rep.problems) sol.notes.push_back(p);
  }
  return sol;
}

FeasibilityReport check_feasibility(const PotentialSolution& sol,
                                    const SignedCurveCollection* collection,
                                    const SolveOptions& opts) {
  FeasibilityReport rep;
  if (sol.phi.size() < 2) {
    rep.problems.push_back("feasibility needs two strands");
    rep.ok = false;
    return rep;
  }
  Grid g;
  g.nr = sol.nr;
  g.nth = sol.ntheta;
  g.r.resize(g.nr);
  for (int ir = 0; ir < g.nr; ++ir) g.r[ir] = std::max(1e-3, double(ir) / (g.nr - 1));
  g.dr = 1.0 / (g.nr - 1);
  g.dth = kTau / g.nth;
  int inner_ring = std::max(1, static_cast<int>(std::round(opts.r0 * (g.nr - 1))));

  auto diff = [&](int ir, int ith) { return sol.value(1, ir, ith) - sol.value(0, ir, ith); };

  if (collection) {
    auto signs = region_signs(*collection, g);
    int bad = 0;
    for (int ir = inner_ring + 1; ir < g.nr - 2; ++ir)
      for (int ith = 0; ith < g.nth; ++ith) {
        int sgn = signs[ir][ith];
        if (sgn == 0) continue;
        double d = diff(ir, ith + 1) - diff(ir, ith);
        if (sgn > 0 && d < 0) ++bad;
        if (sgn < 0 && d > 0) ++bad;
      }
    if (bad > 0) {
      rep.ok = false;
      rep.problems.push_back("sign constraint violated on " + std::to_string(bad) + " cells");
    }
    // dr-sign on the curves.
    int bad_r = 0;
    for (const auto& curve : collection->curves)
      for (const auto& cp : curve.points) {
        int ir = static_cast<int>(std::round(cp.r * (g.nr - 1)));
        if (ir <= inner_ring || ir >= g.nr - 1) continue;
        int ith = static_cast<int>(std::round(cp.theta / g.dth));
        double dr = (diff(ir + 1, ith) - diff(ir - 1, ith)) / (2 * g.dr);
        if (curve.sign > 0 && dr < 0) ++bad_r;
        if (curve.sign < 0 && dr > 0) ++bad_r;
      }
    if (bad_r > 0) {
      rep.ok = false;
      rep.problems.push_back("dr-sign violated at " + std::to_string(bad_r) + " curve samples");
    }
  }

  double best = 1e300;
  for (int ir = inner_ring + 1; ir < g.nr - 1; ++ir)
    for (int ith = 0; ith < g.nth; ++ith) {
      double dth = (diff(ir, ith + 1) - diff(ir, ith - 1)) / (2 * g.dth * g.r[ir]);
      double dr = (diff(ir + 1, ith) - diff(ir - 1, ith)) / (2 * g.dr);
      best = std::min(best, std::hypot(dth, dr));
    }
  rep.min_grad_gap = best;
  if (!(best > 0)) {
    rep.ok = false;
    rep.problems.push_back("d(phi1 - phi0) vanishes somewhere");
  }
  return rep;
}

NestReport nest_disks(const std::vector<BoundarySection>& tower, double contraction,
                      const SolveOptions& opts) {
  NestReport rep;
  if (tower.empty()) throw lamsolve_error("nest_disks: empty tower");
  std::vector<PotentialSolution> sols;
  for (const auto& sec : tower) sols.push_back(solve_potentials({sec}, nullptr, opts));

  Grid g;
  g.nr = opts.nr;
  g.nth = opts.ntheta;
  g.r.resize(g.nr);
  for (int ir = 0; ir < g.nr; ++ir) g.r[ir] = std::max(1e-3, double(ir) / (g.nr - 1));
  g.dr = 1.0 / (g.nr - 1);
  g.dth = kTau / g.nth;

  auto grad_dist = [&](const PotentialSolution& a, const PotentialSolution& b) {
    double worst = 0;
    for (int ir = 1; ir < g.nr - 1; ++ir)
      for (int ith = 0; ith < g.nth; ++ith) {
        double dthA = (a.value(0, ir, ith + 1) - a.value(0, ir, ith - 1)) / (2 * g.dth * g.r[ir]);
        double dthB = (b.value(0, ir, ith + 1) - b.value(0, ir, ith - 1)) / (2 * g.dth * g.r[ir]);
        double drA = (a.value(0, ir + 1, ith) - a.value(0, ir - 1, ith)) / (2 * g.dr);
        double drB = (b.value(0, ir + 1, ith) - b.value(0, ir - 1, ith)) / (2 * g.dr);
        worst = std::max(worst, std::hypot(dthA - dthB, drA - drB));
      }
    return worst;
  };

  for (size_t m = 0; m + 1 < sols.size(); ++m) {
    // Containment: the deeper boundary data lies in the declared tube.
    double tube = 2 * std::pow(contraction, static_cast<double>(m));
    double worst_b = 0;
    for (int j = 0; j < opts.ntheta; ++j) {
      worst_b = std::max(worst_b, std::abs(tower[m + 1].f[j] - tower[m].f[j]));
      worst_b = std::max(worst_b, std::abs(tower[m + 1].g[j] - tower[m].g[j]));
    }
    if (worst_b > tube) {
      rep.ok = false;
      rep.problems.push_back("containment violated at depth " + std::to_string(m + 1));
    }
    double dist = grad_dist(sols[m], sols[m + 1]);
    double bound = 4 * std::pow(contraction, static_cast<double>(m));
    rep.successive_distance.push_back(dist);
    rep.bound.push_back(bound);
    if (dist > bound) {
      rep.ok = false;
      rep.problems.push_back("Cauchy bound violated between depths " + std::to_string(m) +
                             " and " + std::to_string(m + 1));
    }
  }
  return rep;
}

}  // namespace pt
