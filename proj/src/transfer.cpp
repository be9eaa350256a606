#include "plumbtwist/transfer.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

namespace pt {

std::string to_string(AtomKind k) {
  switch (k) {
    case AtomKind::scaling: return "scaling";
    case AtomKind::singular1: return "singular1";
    case AtomKind::singular2: return "singular2";
    case AtomKind::trivial: return "trivial";
  }
  return "?";
}

std::string to_string(Group g) {
  switch (g) {
    case Group::tilde: return "tilde";
    case Group::bar: return "bar";
    case Group::whole: return "whole";
  }
  return "?";
}

bool TransferParams::admissible(std::string* why) const {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (!(r1 > 0 && r1 < 1)) return fail("r1 must lie in (0,1)");
  if (!(r2 > 0 && r2 < 1)) return fail("r2 must lie in (0,1)");
  if (!(rt > 0 && rt < 1)) return fail("rt must lie in (0,1)");
  if (!(r0 > 0 && r0 < 1)) return fail("r0 must lie in (0,1)");
  if (!(r1 + r2 < r0)) return fail("r1 + r2 < r0 violated");
  if (!(std::hypot(c1, c2) + rt < 1)) return fail("trivial tube leaves the unit disk");
  return true;
}

void MapAtom::eval(double theta, const std::array<double, 2>& w, double& theta_out,
                   std::array<double, 2>& w_out) const {
  theta_out = theta + (half_turn ? std::numbers::pi : 0.0);
  double sgn = center_phase == '-' ? -1.0 : 1.0;
  switch (kind) {
    case AtomKind::scaling:
      w_out = {sgn * fiber_scale * w[0], sgn * fiber_scale * w[1]};
      break;
    case AtomKind::singular1:
      w_out = {sgn * center_offset * std::cos(theta) + fiber_scale * w[0],
               sgn * center_offset * std::sin(theta) + fiber_scale * w[1]};
      break;
    case AtomKind::singular2: {
      double c = std::cos(2 * theta), s = std::sin(2 * theta);
      w_out = {sgn * center_offset * std::cos(theta) + fiber_scale * (w[0] * c - w[1] * s),
               sgn * center_offset * std::sin(theta) + fiber_scale * (w[0] * s + w[1] * c)};
      break;
    }
    case AtomKind::trivial:
      w_out = {c1 + fiber_scale * w[0], c2 + fiber_scale * w[1]};
      break;
  }
}

double TransferMatrix::path_radius(const AtomPath& p) const {
  double r = 1.0;
  for (int a : p.atoms) r *= atom_table[a].fiber_scale;
  return r;
}

bool TransferMatrix::path_identity(const AtomPath& p) const {
  for (int a : p.atoms)
    if (!atom_table[a].identity) return false;
  return true;
}

TransferMatrix twist_matrix(const TwistFactor& gen, const DiskChoice& dc, const PlumbingGraph& g,
                            const TransferParams& params) {
  const Sphere* s = g.find_sphere(gen.sphere);
  if (!s) throw transfer_error("twist_matrix: unknown sphere " + gen.sphere);
  std::string why;
  if (!params.admissible(&why)) throw transfer_error("twist_matrix: bad params: " + why);

  bool positive_role = (s->sign == Sign::positive) == (dc.orientation == Orientation::standard);
  if (positive_role && gen.exponent < 0)
    throw transfer_error("twist_matrix: negative power of a positive-sphere twist is inconsistent "
                         "with the track orientation");
  if (!positive_role && gen.exponent > 0)
    throw transfer_error("twist_matrix: positive power of a negative-sphere twist is inconsistent "
                         "with the track orientation");

  // The sign the twist imposes at its points (as stored in the disk choice).
  char eps = positive_role ? '+' : '-';

  TransferMatrix m;
  m.source = dc;
  m.target = apply_F(gen, dc, g);

  auto add_atom = [&](MapAtom a) {
    m.atom_table.push_back(std::move(a));
    m.entries[{m.atom_table.back().dst_disk, m.atom_table.back().src_disk}].push_back(
        AtomPath{{static_cast<int>(m.atom_table.size()) - 1}});
  };
  auto identity_atom = [&](const std::string& disk, Group grp) {
    MapAtom a;
    a.kind = AtomKind::scaling;
    a.src_disk = a.dst_disk = disk;
    a.src_group = a.dst_group = grp;
    a.fiber_scale = 1.0;
    a.identity = true;
    a.label = "id";
    add_atom(std::move(a));
  };

  std::set<std::string> on_sphere;
  for (const auto* p : g.points_on(s->id)) on_sphere.insert(p->id);

  for (const auto& p : g.points) {
    if (!on_sphere.count(p.id)) {
      // Untouched by the twist: identity on all fibers at this point.
      identity_atom("S:" + p.id, Group::tilde);
      identity_atom("S:" + p.id, Group::bar);
      identity_atom("Sb+:" + p.id, Group::whole);
      identity_atom("Sb-:" + p.id, Group::whole);
      continue;
    }

    std::string sp = "S:" + p.id;
    // The antipodal disk on the twisted sphere and the one on the other sphere.
    std::string bar_eps = (s->sign == Sign::positive ? "Sb+:" : "Sb-:") + p.id;
    std::string bar_opp = (s->sign == Sign::positive ? "Sb-:" : "Sb+:") + p.id;

    identity_atom(bar_opp, Group::whole);

    // Contributions of the fibers at p into the antipodal region on s.
    {
      MapAtom a;  // scaling: the through-sheets slide antipodally (f1/h1)
      a.kind = AtomKind::scaling;
      a.src_disk = sp;
      a.src_group = Group::tilde;
      a.dst_disk = bar_eps;
      a.dst_group = Group::whole;
      a.half_turn = true;
      a.fiber_scale = params.r1;
      a.center_phase = '-';
      a.label = positive_role ? "h1" : "f1";
      add_atom(std::move(a));
    }
    for (int which = 0; which < 2; ++which) {  // the neck sheets wrap past the antipode (f2/f3)
      MapAtom a;
      a.kind = which == 0 ? AtomKind::singular1 : AtomKind::singular2;
      a.src_disk = sp;
      a.src_group = Group::bar;
      a.dst_disk = bar_eps;
      a.dst_group = Group::whole;
      a.half_turn = true;
      a.fiber_scale = params.r2;
      a.center_offset = params.r0;
      a.center_phase = which == 0 ? '+' : '-';
      a.fiber_rotation_degree = which == 0 ? 0 : 2;
      a.label = positive_role ? (which == 0 ? "h2" : "h3") : (which == 0 ? "f2" : "f3");
      add_atom(std::move(a));
    }

    {
      MapAtom a;  // the antipodal disk on s slides onto the (new) chosen disk (g3/i)
      a.kind = AtomKind::scaling;
      a.src_disk = bar_eps;
      a.src_group = Group::whole;
      a.dst_disk = sp;
      a.dst_group = Group::tilde;
      a.half_turn = true;
      a.fiber_scale = params.r1;
      a.center_phase = '-';
      a.label = positive_role ? "i" : "g3";
      add_atom(std::move(a));
    }

    char old_choice = dc.choice.at(p.id);
    if (old_choice != eps) {
      // The spun fiber disk ends and begins near p: two new singular sheets (g1/g2).
      for (int which = 0; which < 2; ++which) {
        MapAtom a;
        a.kind = which == 0 ? AtomKind::singular1 : AtomKind::singular2;
        a.src_disk = sp;
        a.src_group = Group::bar;
        a.dst_disk = sp;
        a.dst_group = Group::bar;
        a.half_turn = false;
        a.fiber_scale = params.r2;
        a.center_offset = params.r0;
        a.center_phase = which == 0 ? '+' : '-';
        a.fiber_rotation_degree = which == 0 ? 0 : 2;
        a.label = which == 0 ? "g1" : "g2";
        add_atom(std::move(a));
      }
    }

    // Stretched necks at the other points of s pass over p's regions.
    for (const auto* q : g.points_on(s->id)) {
      if (q->id == p.id) continue;
      {
        MapAtom a;
        a.kind = AtomKind::trivial;
        a.src_disk = "S:" + q->id;
        a.src_group = Group::bar;
        a.dst_disk = sp;
        a.dst_group = Group::bar;
        a.fiber_scale = params.rt;
        a.c1 = params.c1;
        a.c2 = params.c2;
        a.label = "h_t";
        add_atom(std::move(a));
      }
      {
        MapAtom a;
        a.kind = AtomKind::trivial;
        a.src_disk = "S:" + q->id;
        a.src_group = Group::bar;
        a.dst_disk = bar_eps;
        a.dst_group = Group::whole;
        a.fiber_scale = params.rt;
        a.c1 = params.c1;
        a.c2 = params.c2;
        a.label = "i_t";
        add_atom(std::move(a));
      }
    }
  }
  return m;
}

TransferMatrix compose(const TransferMatrix& m2, const TransferMatrix& m1) {
  if (!(m2.source == m1.target))
    throw transfer_error("compose: domain mismatch (source of the left factor differs from the "
                         "target of the right factor)");
  TransferMatrix out;
  out.source = m1.source;
  out.target = m2.target;
  out.atom_table = m2.atom_table;
  int offset = static_cast<int>(m2.atom_table.size());
  out.atom_table.insert(out.atom_table.end(), m1.atom_table.begin(), m1.atom_table.end());

  for (const auto& [key2, paths2] : m2.entries) {
    const auto& [i, j] = key2;
    for (const auto& [key1, paths1] : m1.entries) {
      const auto& [j2, k] = key1;
      if (j2 != j) continue;
      for (const auto& p2 : paths2) {
        const MapAtom& in2 = m2.atom_table[p2.atoms.back()];
        for (const auto& p1 : paths1) {
          const MapAtom& out1 = m1.atom_table[p1.atoms.front()];
          if (in2.src_group != out1.dst_group) continue;
          AtomPath np;
          np.atoms = p2.atoms;
          for (int a : p1.atoms) np.atoms.push_back(a + offset);
          out.entries[{i, k}].push_back(std::move(np));
        }
      }
    }
  }
  return out;
}

TransferMatrix word_matrix(const TwistWord& w, const DiskChoice& dc, const PlumbingGraph& g,
                           const TransferParams& params) {
  auto units = unit_factors(w);
  if (units.empty()) throw transfer_error("word_matrix: empty word");
  // Track cycle: the factor applied first acts on dc itself only when dc is
  // the fixed point; in general chain the tracks backwards from dc.
  std::vector<DiskChoice> tracks(units.size() + 1);
  tracks[units.size()] = dc;
  for (size_t i = units.size(); i-- > 0;) {
    // source track of factor i is tracks[i+1]; its target becomes tracks[i].
    tracks[i] = apply_F(units[i], tracks[i + 1], g);
  }
  TransferMatrix m = twist_matrix(units.back(), tracks[units.size()], g, params);
  for (size_t i = units.size() - 1; i-- > 0;) {
    TransferMatrix next = twist_matrix(units[i], tracks[i + 1], g, params);
    m = compose(next, m);
  }
  return m;
}

int CountingMatrix::find(const std::string& disk, Group g) const {
  for (size_t i = 0; i < index.size(); ++i)
    if (index[i].first == disk && index[i].second == g) return static_cast<int>(i);
  return -1;
}

CountingMatrix CountingMatrix::multiply(const CountingMatrix& a, const CountingMatrix& b) {
  if (a.index != b.index) throw transfer_error("counting multiply: index mismatch");
  CountingMatrix out;
  out.index = a.index;
  size_t n = a.index.size();
  out.counts.assign(n, std::vector<long long>(n, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k) {
      if (a.counts[i][k] == 0) continue;
      for (size_t j = 0; j < n; ++j) out.counts[i][j] += a.counts[i][k] * b.counts[k][j];
    }
  return out;
}

CountingMatrix CountingMatrix::power(int m) const {
  CountingMatrix out;
  out.index = index;
  size_t n = index.size();
  out.counts.assign(n, std::vector<long long>(n, 0));
  for (size_t i = 0; i < n; ++i) out.counts[i][i] = 1;
  for (int step = 0; step < m; ++step) out = multiply(*this, out);
  return out;
}

CountingMatrix counting_matrix(const TransferMatrix& m) {
  CountingMatrix out;
  // Index by the source track's fibers; for endo checks the two coincide.
  // Build from the union so rectangular data still lands somewhere sane.
  std::set<std::pair<std::string, Group>> keys;
  for (const auto& a : m.atom_table) {
    keys.insert({a.src_disk, a.src_group});
    keys.insert({a.dst_disk, a.dst_group});
  }
  out.index.assign(keys.begin(), keys.end());
  size_t n = out.index.size();
  out.counts.assign(n, std::vector<long long>(n, 0));
  for (const auto& [key, paths] : m.entries) {
    for (const auto& p : paths) {
      const MapAtom& first = m.atom_table[p.atoms.front()];
      const MapAtom& last = m.atom_table[p.atoms.back()];
      int i = out.find(first.dst_disk, first.dst_group);
      int j = out.find(last.src_disk, last.src_group);
      out.counts[i][j] += 1;
    }
  }
  return out;
}

std::map<std::string, long long> StrandCensus::counts_per_disk() const {
  std::map<std::string, long long> out;
  for (const auto& s : strands) out[s.dst_disk] += 1;
  return out;
}

std::string StrandCensus::strand_key(const Strand& s) const {
  std::string key = s.dst_disk + "|" + to_string(s.dst_group);
  for (int a : s.atoms) key += ":" + std::to_string(a);
  return key;
}

StrandCensus strand_census(const TransferMatrix& psi, int depth) {
  if (depth < 0) throw transfer_error("strand_census: negative depth");
  if (!(psi.source == psi.target))
    throw transfer_error("strand_census: psi must be an endo-matrix (source == target)");

  StrandCensus census;
  census.depth = depth;
  census.track = psi.source;
  census.atom_table = psi.atom_table;
  if (!psi.entries.empty()) {
    census.block_length = static_cast<int>(psi.entries.begin()->second.front().atoms.size());
  }

  // Depth 0: one identity strand per fiber.
  std::set<std::pair<std::string, Group>> fibers;
  for (const auto& a : psi.atom_table) {
    fibers.insert({a.src_disk, a.src_group});
    fibers.insert({a.dst_disk, a.dst_group});
  }
  std::vector<Strand> cur;
  for (const auto& [disk, grp] : fibers) {
    Strand s;
    s.src_disk = s.dst_disk = disk;
    s.src_group = s.dst_group = grp;
    cur.push_back(std::move(s));
  }

  for (int step = 0; step < depth; ++step) {
    std::vector<Strand> next;
    for (const auto& s : cur) {
      for (const auto& [key, paths] : psi.entries) {
        if (key.second != s.dst_disk) continue;
        for (const auto& p : paths) {
          const MapAtom& in = psi.atom_table[p.atoms.back()];
          if (in.src_group != s.dst_group) continue;
          const MapAtom& out = psi.atom_table[p.atoms.front()];
          Strand ns;
          ns.atoms = p.atoms;
          ns.atoms.insert(ns.atoms.end(), s.atoms.begin(), s.atoms.end());
          ns.src_disk = s.src_disk;
          ns.src_group = s.src_group;
          ns.dst_disk = out.dst_disk;
          ns.dst_group = out.dst_group;
          next.push_back(std::move(ns));
        }
      }
    }
    cur = std::move(next);
  }

  // Radii and tube centers.
  for (auto& s : cur) {
    double r = 1.0;
    for (int a : s.atoms) r *= census.atom_table[a].fiber_scale;
    s.radius = r;
    double theta = 0.0;
    std::array<double, 2> w{0.0, 0.0};
    for (auto it = s.atoms.rbegin(); it != s.atoms.rend(); ++it) {
      double t2;
      std::array<double, 2> w2;
      census.atom_table[*it].eval(theta, w, t2, w2);
      theta = t2;
      w = w2;
    }
    s.center_theta0[0] = w[0];
    s.center_theta0[1] = w[1];
  }
  // Deterministic order: lexicographic in the atom sequences.
  std::sort(cur.begin(), cur.end(), [](const Strand& a, const Strand& b) {
    if (a.dst_disk != b.dst_disk) return a.dst_disk < b.dst_disk;
    if (a.dst_group != b.dst_group) return a.dst_group < b.dst_group;
    return a.atoms < b.atoms;
  });
  census.strands = std::move(cur);
  return census;
}

namespace {

struct CenterFamily {
  // center(theta) = phase * offset * e(theta) for rotating families,
  // a constant vector otherwise.
  bool rotating = false;
  double offset = 0.0;
  double sign = 1.0;
  double cx = 0.0, cy = 0.0;
};

CenterFamily family_of(const MapAtom& a) {
  CenterFamily f;
  switch (a.kind) {
    case AtomKind::scaling:
      f.rotating = false;
      break;
    case AtomKind::singular1:
    case AtomKind::singular2:
      f.rotating = true;
      f.offset = a.center_offset;
      f.sign = a.center_phase == '-' ? -1.0 : 1.0;
      break;
    case AtomKind::trivial:
      f.rotating = false;
      f.cx = a.c1;
      f.cy = a.c2;
      break;
  }
  return f;
}

// Analytic min over theta of |center_a(theta) - center_b(theta)|.
double min_center_distance(const CenterFamily& a, const CenterFamily& b) {
  if (a.rotating && b.rotating) {
    // sa*ra*e(t) vs sb*rb*e(t): distance constant |sa*ra - sb*rb|.
    return std::abs(a.sign * a.offset - b.sign * b.offset);
  }
  if (!a.rotating && !b.rotating) {
    return std::hypot(a.cx - b.cx, a.cy - b.cy);
  }
  const CenterFamily& rot = a.rotating ? a : b;
  const CenterFamily& fix = a.rotating ? b : a;
  double norm = std::hypot(fix.cx, fix.cy);
  return std::abs(norm - rot.offset);
}

void check_entry_pairs(const TransferMatrix& m, const std::string& dst, const std::string& src,
                       const std::vector<AtomPath>& paths, GeometryCertificate& cert) {
  // Only depth-1 entries carry the canonical families directly.
  std::vector<const MapAtom*> atoms;
  for (const auto& p : paths)
    if (p.atoms.size() == 1) atoms.push_back(&m.atom_table[p.atoms.front()]);
  for (size_t i = 0; i < atoms.size(); ++i)
    for (size_t j = i + 1; j < atoms.size(); ++j) {
      if (atoms[i]->identity || atoms[j]->identity) continue;
      double dist = min_center_distance(family_of(*atoms[i]), family_of(*atoms[j]));
      double need = atoms[i]->fiber_scale + atoms[j]->fiber_scale;
      if (!(dist > need)) {
        cert.ok = false;
        cert.violations.push_back("tubes overlap in entry (" + dst + " <- " + src + "): " +
                                  atoms[i]->label + " vs " + atoms[j]->label + " (min distance " +
                                  std::to_string(dist) + ", radii sum " + std::to_string(need) +
                                  ")");
      }
    }
}

}  // namespace

GeometryCertificate geometry_check(const TransferMatrix& m) {
  GeometryCertificate cert;
  bool has_singular = false;
  double r0 = 0, r1 = 0, r2 = 0;
  for (const auto& a : m.atom_table) {
    if (a.identity) continue;
    if (!(a.fiber_scale > 0 && a.fiber_scale < 1)) {
      cert.ok = false;
      cert.violations.push_back("atom " + a.label + " has scale outside (0,1)");
    }
    cert.r_max = std::max(cert.r_max, a.fiber_scale);
    if (a.kind == AtomKind::singular1 || a.kind == AtomKind::singular2) {
      has_singular = true;
      r0 = a.center_offset;
      r2 = a.fiber_scale;
    }
    if (a.kind == AtomKind::scaling) r1 = a.fiber_scale;
  }
  if (has_singular && !(r1 + r2 < r0)) {
    cert.ok = false;
    cert.violations.push_back("r1 + r2 < r0 violated (" + std::to_string(r1) + " + " +
                              std::to_string(r2) + " >= " + std::to_string(r0) + ")");
  }
  for (const auto& [key, paths] : m.entries)
    check_entry_pairs(m, key.first, key.second, paths, cert);
  cert.notes.push_back("r_max = " + std::to_string(cert.r_max));
  return cert;
}

GeometryCertificate geometry_check(const StrandCensus& census) {
  GeometryCertificate cert;
  for (const auto& a : census.atom_table) {
    if (a.identity) continue;
    cert.r_max = std::max(cert.r_max, a.fiber_scale);
    if (!(a.fiber_scale > 0 && a.fiber_scale < 1)) {
      cert.ok = false;
      cert.violations.push_back("atom " + a.label + " has scale outside (0,1)");
    }
  }
  double bound = std::pow(cert.r_max, census.depth);
  for (const auto& s : census.strands) {
    if (s.radius > bound * (1 + 1e-12)) {
      cert.ok = false;
      cert.violations.push_back("strand " + census.strand_key(s) + " radius " +
                                std::to_string(s.radius) + " exceeds r_max^m = " +
                                std::to_string(bound));
    }
  }
  cert.notes.push_back("depth " + std::to_string(census.depth) + ", bound " + std::to_string(bound));
  return cert;
}

CarriedClass carried_class(const StrandCensus& census) {
  CarriedClass c;
  c.carrier = census.track;
  for (const auto& s : census.strands) {
    c.counts[{s.dst_disk, s.dst_group}] += 1;
    if (!s.atoms.empty()) {
      const MapAtom& outer = census.atom_table[s.atoms.front()];
      if (outer.kind == AtomKind::singular1 || outer.kind == AtomKind::singular2)
        c.markers.push_back({s.dst_disk, census.strand_key(s), true});
    }
  }
  return c;
}

CarriedCheck check_carried(const CarriedClass& c, const PlumbingGraph& g) {
  CarriedCheck out;
  std::set<std::string> valid_disks;
  for (const auto& d : singular_disks(c.carrier, g)) valid_disks.insert(d.id);
  for (const auto& [key, n] : c.counts) {
    if (n < 0) {
      out.ok = false;
      out.problems.push_back("negative count at " + key.first);
    }
    if (!valid_disks.count(key.first)) {
      out.ok = false;
      out.problems.push_back("count on a fiber not in the carrier track: " + key.first);
    }
  }
  // Branch-locus split: the full fiber over S:p decomposes as tilde + bar.
  for (const auto& p : g.points) {
    auto t = c.counts.find({"S:" + p.id, Group::tilde});
    auto b = c.counts.find({"S:" + p.id, Group::bar});
    long long tilde = t == c.counts.end() ? 0 : t->second;
    long long bar = b == c.counts.end() ? 0 : b->second;
    if (tilde < 0 || bar < 0) {
      out.ok = false;
      out.problems.push_back("switch condition fails at " + p.id);
    }
  }
  for (const auto& mk : c.markers) {
    if (!valid_disks.count(mk.disk)) {
      out.ok = false;
      out.problems.push_back("marker outside singular disks: " + mk.disk);
    }
    if (!mk.real_blow_up) {
      out.ok = false;
      out.problems.push_back("marker not of real blow-up type in " + mk.disk);
    }
  }
  return out;
}

}  // namespace pt
