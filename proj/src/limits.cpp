#include "plumbtwist/limits.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <set>

namespace pt {

WordSystem::WordSystem(const TwistWord& w, const PlumbingGraph& g, Orientation orient,
                       const TransferParams& params)
    : graph_(g) {
  auto diag = is_generalized_penner(w, g, orient);
  if (!diag.ok) throw limits_error("WordSystem: word is not of generalized Penner type");
  invariant_ = invariant_track(w, g, orient);

  auto units = unit_factors(w);
  std::vector<DiskChoice> tracks(units.size() + 1);
  tracks[units.size()] = invariant_;
  for (size_t i = units.size(); i-- > 0;) tracks[i] = apply_F(units[i], tracks[i + 1], g);
  // F_psi fixes the invariant track, so the cycle closes.
  for (size_t i = 0; i < units.size(); ++i)
    stages_.push_back(twist_matrix(units[i], tracks[i + 1], g, params));
  psi_ = stages_.front();
  for (size_t i = 1; i < stages_.size(); ++i) psi_ = compose(psi_, stages_[i]);
}

bool WordSystem::has_trivial_atoms() const {
  for (const auto& st : stages_)
    for (const auto& a : st.atom_table)
      if (a.kind == AtomKind::trivial) return true;
  return false;
}

namespace {

// Forward BFS distances over the staged graph: from "need an atom of stage t
// with target fiber f" states, stepping inward.
struct StagedGraph {
  const WordSystem& ws;
  std::map<WordSystem::Node, int> ids;
  std::vector<WordSystem::Node> nodes;

  explicit StagedGraph(const WordSystem& w) : ws(w) {
    for (int t = 0; t < ws.length(); ++t) {
      std::set<std::pair<std::string, Group>> fibers;
      for (const auto& a : ws.stage(t).atom_table) {
        fibers.insert({a.dst_disk, a.dst_group});
        fibers.insert({a.src_disk, a.src_group});
      }
      for (const auto& [d, g] : fibers) {
        WordSystem::Node n{t, d, g};
        if (!ids.count(n)) {
          ids[n] = static_cast<int>(nodes.size());
          nodes.push_back(n);
        }
      }
    }
  }

  // Atoms usable from a node: stage t atoms with dst == node fiber. Each
  // leads to node (t+1 mod l, src fiber).
  std::vector<std::pair<int, WordSystem::Node>> steps(const WordSystem::Node& n) const {
    std::vector<std::pair<int, WordSystem::Node>> out;
    const TransferMatrix& st = ws.stage(n.stage);
    for (size_t i = 0; i < st.atom_table.size(); ++i) {
      const MapAtom& a = st.atom_table[i];
      if (a.dst_disk == n.disk && a.dst_group == n.group) {
        WordSystem::Node next{(n.stage + 1) % ws.length(), a.src_disk, a.src_group};
        out.push_back({static_cast<int>(i), next});
      }
    }
    return out;
  }
};

}  // namespace

int WordSystem::staged_diameter() const {
  StagedGraph sg(*this);
  int diam = 0;
  for (const auto& start : sg.nodes) {
    std::map<Node, int> dist;
    std::deque<Node> q{start};
    dist[start] = 0;
    while (!q.empty()) {
      Node cur = q.front();
      q.pop_front();
      for (const auto& [atom, next] : sg.steps(cur)) {
        if (!dist.count(next)) {
          dist[next] = dist[cur] + 1;
          diam = std::max(diam, dist[next]);
          q.push_back(next);
        }
      }
    }
  }
  return diam;
}

namespace {

// Validate that a chain of psi atoms is realizable: consecutive atoms must
// chain through matching fibers, and atom i must belong to stage i mod l.
void validate_chain(const WordSystem& ws, const std::vector<int>& atoms, int start_stage) {
  const auto& table = ws.psi().atom_table;
  // Map psi atom indices back to stages by offset: psi was composed left to
  // right, so its atom table is the concatenation of the stage tables.
  std::vector<int> stage_of;
  std::vector<int> local_index;
  {
    // Reconstruct offsets: compose() concatenates left table then right.
    // psi = (((s0 . s1) . s2) ... ) so table = [s0, s1, s2, ...].
    size_t off = 0;
    for (int t = 0; t < ws.length(); ++t) {
      for (size_t i = 0; i < ws.stage(t).atom_table.size(); ++i) {
        stage_of.push_back(t);
        local_index.push_back(static_cast<int>(i));
      }
      off += ws.stage(t).atom_table.size();
    }
    if (stage_of.size() != table.size())
      throw limits_error("internal: psi atom table does not match stage concatenation");
  }
  for (size_t i = 0; i < atoms.size(); ++i) {
    int a = atoms[i];
    if (a < 0 || a >= static_cast<int>(table.size()))
      throw limits_error("unrealizable prefix: atom id out of range");
    int expected_stage = (start_stage + static_cast<int>(i)) % ws.length();
    if (stage_of[a] != expected_stage)
      throw limits_error("unrealizable prefix: atom " + std::to_string(a) +
                         " is not from stage " + std::to_string(expected_stage));
    if (i + 1 < atoms.size()) {
      const MapAtom& cur = table[a];
      const MapAtom& next = table[atoms[i + 1]];
      if (cur.src_disk != next.dst_disk || cur.src_group != next.dst_group)
        throw limits_error("unrealizable prefix: fibers do not chain at position " +
                           std::to_string(i));
    }
  }
}

}  // namespace

StrandClass classify_strand(const WordSystem& ws, const StrandPrefix& prefix,
                            const std::vector<int>& period) {
  validate_chain(ws, prefix.atoms, 0);
  if (!period.empty()) {
    int period_start = static_cast<int>(prefix.atoms.size()) % ws.length();
    validate_chain(ws, period, period_start);
    if (period.size() % ws.length() != 0)
      throw limits_error("period length must be a multiple of the word length");
    // Period must close up on itself and attach to the prefix.
    const auto& table = ws.psi().atom_table;
    if (!prefix.atoms.empty()) {
      const MapAtom& last = table[prefix.atoms.back()];
      const MapAtom& first = table[period.front()];
      if (last.src_disk != first.dst_disk || last.src_group != first.dst_group)
        throw limits_error("period does not attach to the prefix");
    }
    const MapAtom& pl = table[period.back()];
    const MapAtom& pf = table[period.front()];
    if (pl.src_disk != pf.dst_disk || pl.src_group != pf.dst_group)
      throw limits_error("period does not close up");
  }
  auto has_trivial = [&](const std::vector<int>& v) {
    for (int a : v)
      if (ws.psi().atom_table[a].kind == AtomKind::trivial) return true;
    return false;
  };
  if (has_trivial(prefix.atoms) || has_trivial(period)) return StrandClass::disk_bounding;
  if (period.empty()) return StrandClass::undetermined;
  return StrandClass::accumulation;
}

ApproximationResult approximate_sequence(const WordSystem& ws, const StrandPrefix& prefix) {
  ApproximationResult res;
  if (!ws.has_trivial_atoms()) {
    // Only the one-point two-sphere plumbing lacks trivial atoms (Lemma 4's
    // final case); the lamination there is produced by spinning instead.
    res.status = ApproximationResult::Status::spinning_fallback;
    return res;
  }
  validate_chain(ws, prefix.atoms, 0);
  res.diameter_bound = ws.staged_diameter();

  // BFS from the prefix's inner end.
  StagedGraph sg(ws);
  WordSystem::Node start;
  if (prefix.atoms.empty()) {
    // Start at stage 0 on any fiber; pick the lexicographically first node.
    start = sg.nodes.front();
  } else {
    const MapAtom& last = ws.psi().atom_table[prefix.atoms.back()];
    start = {static_cast<int>(prefix.atoms.size()) % ws.length(), last.src_disk, last.src_group};
  }

  // Map stage-local atom ids back to psi atom ids.
  std::vector<int> stage_offset(ws.length(), 0);
  for (int t = 1; t < ws.length(); ++t)
    stage_offset[t] = stage_offset[t - 1] + static_cast<int>(ws.stage(t - 1).atom_table.size());

  std::map<WordSystem::Node, std::pair<WordSystem::Node, int>> parent;  // node -> (prev, atom)
  std::map<WordSystem::Node, int> dist;
  std::deque<WordSystem::Node> q{start};
  dist[start] = 0;
  while (!q.empty()) {
    WordSystem::Node cur = q.front();
    q.pop_front();
    for (const auto& [local_atom, next] : sg.steps(cur)) {
      const MapAtom& a = ws.stage(cur.stage).atom_table[local_atom];
      int psi_atom = stage_offset[cur.stage] + local_atom;
      if (a.kind == AtomKind::trivial) {
        // Reconstruct the extension ending in this trivial atom.
        std::vector<int> ext;
        ext.push_back(psi_atom);
        WordSystem::Node walk = cur;
        while (!(walk == start)) {
          auto [prev, atom] = parent.at(walk);
          ext.push_back(atom);
          walk = prev;
        }
        std::reverse(ext.begin(), ext.end());
        res.extension = std::move(ext);
        res.n_k = static_cast<int>(res.extension.size());
        return res;
      }
      if (!dist.count(next)) {
        dist[next] = dist[cur] + 1;
        parent[next] = {cur, psi_atom};
        q.push_back(next);
      }
    }
  }
  throw limits_error("approximate_sequence: no trivial atom reachable from the prefix");
}

DecayCertificate decay_certificate(const TransferMatrix& psi, int depth) {
  auto geo = geometry_check(psi);
  if (!geo.ok)
    throw limits_error("decay_certificate: geometry check failed upstream: " +
                       (geo.violations.empty() ? std::string("?") : geo.violations.front()));
  DecayCertificate cert;
  cert.depth = depth;
  cert.r_max = geo.r_max;
  cert.bound = std::pow(geo.r_max, depth);

  StrandCensus prev = strand_census(psi, 0);
  std::set<std::string> prev_keys;
  for (const auto& s : prev.strands) prev_keys.insert(prev.strand_key(s));
  int block = 0;
  for (int m = 1; m <= depth; ++m) {
    StrandCensus cur = strand_census(psi, m);
    block = cur.block_length;
    std::set<std::string> keys;
    double level_bound = std::pow(cert.r_max, m);
    for (const auto& s : cur.strands) {
      keys.insert(cur.strand_key(s));
      if (s.radius > level_bound * (1 + 1e-12)) {
        cert.ok = false;
        cert.violations.push_back("depth " + std::to_string(m) + " strand radius " +
                                  std::to_string(s.radius) + " exceeds " +
                                  std::to_string(level_bound));
      }
      // Nesting: dropping the innermost block must give a depth-(m-1) strand.
      Strand parent;
      parent.atoms.assign(s.atoms.begin(), s.atoms.end() - block);
      if (!parent.atoms.empty()) {
        const MapAtom& outer = cur.atom_table[parent.atoms.front()];
        const MapAtom& inner = cur.atom_table[parent.atoms.back()];
        parent.dst_disk = outer.dst_disk;
        parent.dst_group = outer.dst_group;
        parent.src_disk = inner.src_disk;
        parent.src_group = inner.src_group;
      } else {
        const MapAtom& dropped = cur.atom_table[s.atoms.front()];
        parent.dst_disk = dropped.dst_disk;
        parent.dst_group = dropped.dst_group;
      }
      if (!prev_keys.count(cur.strand_key(parent))) {
        cert.ok = false;
        cert.violations.push_back("depth " + std::to_string(m) +
                                  " strand does not nest in a depth-" + std::to_string(m - 1) +
                                  " tube");
      }
    }
    prev_keys = std::move(keys);
  }
  return cert;
}

}  // namespace pt
