#include "plumbtwist/twistsys.hpp"

#include <algorithm>
#include <sstream>

namespace pt {

namespace {

// Resolve a generator token index to a sphere id. Positive spheres are
// numbered from 0 (tau_0, tau_1, ...), negative spheres from 1 (sigma_1, ...).
std::string resolve_sphere(char kind, long index, const PlumbingGraph& g) {
  if (kind == 't') {
    auto pos = g.positive_spheres();
    if (index < 0 || index >= static_cast<long>(pos.size()))
      throw twist_error("unknown sphere: t" + std::to_string(index));
    return pos[static_cast<size_t>(index)];
  }
  auto neg = g.negative_spheres();
  if (index < 1 || index > static_cast<long>(neg.size()))
    throw twist_error("unknown sphere: s" + std::to_string(index));
  return neg[static_cast<size_t>(index - 1)];
}

}  // namespace

TwistWord parse_word(const std::string& text, const PlumbingGraph& g) {
  TwistWord w;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok.size() < 2 || (tok[0] != 't' && tok[0] != 's'))
      throw twist_error("syntax error in generator token: " + tok);
    char kind = tok[0];
    size_t caret = tok.find('^');
    std::string idx_str = tok.substr(1, caret == std::string::npos ? std::string::npos : caret - 1);
    long index = 0;
    try {
      size_t used = 0;
      index = std::stol(idx_str, &used);
      if (used != idx_str.size()) throw std::invalid_argument(idx_str);
    } catch (const std::exception&) {
      throw twist_error("syntax error in generator token: " + tok);
    }
    int exponent = 1;
    if (caret != std::string::npos) {
      std::string exp_str = tok.substr(caret + 1);
      try {
        size_t used = 0;
        exponent = std::stoi(exp_str, &used);
        if (used != exp_str.size()) throw std::invalid_argument(exp_str);
      } catch (const std::exception&) {
        throw twist_error("syntax error in exponent: " + tok);
      }
    }
    if (exponent == 0) throw twist_error("zero exponent in token: " + tok);
    w.factors.push_back({resolve_sphere(kind, index, g), exponent});
  }
  return w;
}

std::string format_word(const TwistWord& w) {
  std::string out;
  for (size_t i = 0; i < w.factors.size(); ++i) {
    if (i) out += ' ';
    out += w.factors[i].sphere;
    if (w.factors[i].exponent != 1) out += "^" + std::to_string(w.factors[i].exponent);
  }
  return out;
}

PennerDiagnostics is_generalized_penner(const TwistWord& w, const PlumbingGraph& g,
                                        Orientation orient) {
  PennerDiagnostics d;
  std::map<std::string, bool> seen;
  for (const auto& s : g.spheres) seen[s.id] = false;
  for (const auto& f : w.factors) {
    const Sphere* s = g.find_sphere(f.sphere);
    if (!s) {
      d.problems.push_back("unknown sphere in word: " + f.sphere);
      continue;
    }
    seen[s->id] = true;
    bool positive_role = (s->sign == Sign::positive) == (orient == Orientation::standard);
    if (positive_role && f.exponent < 0)
      d.problems.push_back("negative power of a positive-sphere twist: " + f.sphere);
    if (!positive_role && f.exponent > 0)
      d.problems.push_back("positive power of a negative-sphere twist: " + f.sphere);
  }
  for (const auto& [id, hit] : seen)
    if (!hit) d.problems.push_back("sphere missing from word: " + id);
  if (w.factors.empty()) d.problems.push_back("empty word");
  d.ok = d.problems.empty();
  return d;
}

DiskChoice apply_F(const TwistFactor& gen, const DiskChoice& dc, const PlumbingGraph& g) {
  const Sphere* s = g.find_sphere(gen.sphere);
  if (!s) throw twist_error("apply_F: unknown sphere " + gen.sphere);
  char target;
  if (dc.orientation == Orientation::standard)
    target = s->sign == Sign::positive ? '+' : '-';
  else
    target = s->sign == Sign::positive ? '-' : '+';
  DiskChoice out = dc;
  for (const auto* p : g.points_on(s->id)) out.choice[p->id] = target;
  return out;
}

DiskChoice apply_word_F(const TwistWord& w, const DiskChoice& dc, const PlumbingGraph& g) {
  DiskChoice cur = dc;
  for (auto it = w.factors.rbegin(); it != w.factors.rend(); ++it) cur = apply_F(*it, cur, g);
  return cur;
}

DiskChoice invariant_track(const TwistWord& w, const PlumbingGraph& g, Orientation orient) {
  PennerDiagnostics d = is_generalized_penner(w, g, orient);
  if (!d.ok) throw twist_error("invariant_track: word is not of generalized Penner type: " + d.problems.front());

  std::map<std::string, size_t> leftmost;  // sphere id -> first factor index
  for (size_t i = 0; i < w.factors.size(); ++i)
    if (!leftmost.count(w.factors[i].sphere)) leftmost[w.factors[i].sphere] = i;

  DiskChoice out;
  out.orientation = orient;
  for (const auto& p : g.points) {
    const std::string& pos_sphere =
        g.sphere_sign(p.sphere_a) == Sign::positive ? p.sphere_a : p.sphere_b;
    const std::string& neg_sphere =
        g.sphere_sign(p.sphere_a) == Sign::positive ? p.sphere_b : p.sphere_a;
    bool tau_last = leftmost.at(pos_sphere) < leftmost.at(neg_sphere);
    if (orient == Orientation::standard)
      out.choice[p.id] = tau_last ? '+' : '-';
    else
      out.choice[p.id] = tau_last ? '-' : '+';
  }
  return out;
}

std::vector<DiskChoice> all_disk_choices(const PlumbingGraph& g, Orientation orient) {
  std::vector<DiskChoice> out;
  size_t n = g.points.size();
  if (n > 24) throw twist_error("all_disk_choices: too many points");
  for (size_t mask = 0; mask < (size_t{1} << n); ++mask) {
    DiskChoice dc;
    dc.orientation = orient;
    for (size_t i = 0; i < n; ++i)
      dc.choice[g.points[i].id] = (mask >> i) & 1 ? '+' : '-';
    out.push_back(std::move(dc));
  }
  return out;
}

std::vector<TwistFactor> unit_factors(const TwistWord& w) {
  std::vector<TwistFactor> out;
  for (const auto& f : w.factors) {
    int n = std::abs(f.exponent);
    int unit = f.exponent > 0 ? 1 : -1;
    for (int i = 0; i < n; ++i) out.push_back({f.sphere, unit});
  }
  return out;
}

}  // namespace pt
