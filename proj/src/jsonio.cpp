#include "plumbtwist/jsonio.hpp"

#include <sstream>

namespace pt {

Json graph_to_json(const PlumbingGraph& g) {
  Json j;
  j["n"] = g.dimension;
  j["spheres"] = Json::array();
  for (const auto& s : g.spheres)
    j["spheres"].push_back({{"id", s.id},
                            {"sign", s.sign == Sign::positive ? "positive" : "negative"}});
  j["points"] = Json::array();
  for (const auto& p : g.points)
    j["points"].push_back({{"id", p.id},
                           {"a", p.sphere_a},
                           {"b", p.sphere_b},
                           {"gluing", p.gluing == Gluing::f ? "f" : "g"},
                           {"pos_a", p.pos_a},
                           {"pos_b", p.pos_b}});
  return j;
}

PlumbingGraph graph_from_json(const Json& j) {
  PlumbingGraph g;
  g.dimension = j.at("n").get<int>();
  for (const auto& s : j.at("spheres")) {
    std::string sign = s.at("sign").get<std::string>();
    if (sign != "positive" && sign != "negative")
      throw plumbing_error("sphere sign must be 'positive' or 'negative'");
    g.spheres.push_back({s.at("id").get<std::string>(),
                         sign == "positive" ? Sign::positive : Sign::negative});
  }
  for (const auto& p : j.at("points")) {
    PlumbingPoint pt;
    pt.id = p.at("id").get<std::string>();
    pt.sphere_a = p.at("a").get<std::string>();
    pt.sphere_b = p.at("b").get<std::string>();
    std::string gl = p.value("gluing", "f");
    if (gl != "f" && gl != "g") throw plumbing_error("gluing must be 'f' or 'g'");
    pt.gluing = gl == "f" ? Gluing::f : Gluing::g;
    pt.pos_a = p.value("pos_a", 0);
    pt.pos_b = p.value("pos_b", 0);
    g.points.push_back(std::move(pt));
  }
  return g;
}

Json disk_choice_to_json(const DiskChoice& dc) {
  Json j;
  j["orientation"] = dc.orientation == Orientation::standard ? "standard" : "opposite";
  Json c = Json::object();
  for (const auto& [p, sign] : dc.choice) c[p] = std::string(1, sign);
  j["choice"] = c;
  return j;
}

DiskChoice disk_choice_from_json(const Json& j) {
  DiskChoice dc;
  dc.orientation = j.value("orientation", "standard") == "opposite" ? Orientation::opposite
                                                                    : Orientation::standard;
  for (const auto& [key, val] : j.at("choice").items()) {
    std::string s = val.get<std::string>();
    if (s != "+" && s != "-") throw twist_error("disk choice must be '+' or '-'");
    dc.choice[key] = s[0];
  }
  return dc;
}

Json validation_to_json(const ValidationReport& rep) {
  Json j;
  j["valid"] = rep.ok();
  j["violations"] = Json::array();
  for (const auto& v : rep.issues) j["violations"].push_back({{"code", v.code}, {"message", v.message}});
  return j;
}

Json parts_to_json(const std::vector<TrackPart>& parts) {
  Json j = Json::array();
  for (const auto& p : parts) {
    Json e;
    e["id"] = p.id;
    e["anchor"] = p.anchor;
    if (p.sign) e["sign"] = std::string(1, p.sign);
    j.push_back(e);
  }
  return j;
}

Json singular_disks_to_json(const std::vector<SingularDisk>& disks) {
  Json j = Json::array();
  for (const auto& d : disks) {
    Json e;
    e["id"] = d.id;
    e["point"] = d.point;
    e["center"] = d.center;
    e["on_branch_locus"] = d.on_branch_locus;
    if (d.sign) e["sign"] = std::string(1, d.sign);
    j.push_back(e);
  }
  return j;
}

Json regular_disks_to_json(const std::vector<RegularDisk>& pieces) {
  Json j = Json::array();
  for (const auto& r : pieces)
    j.push_back({{"id", r.id}, {"covers", r.covers}, {"adjacency", r.adjacency}});
  return j;
}

Json atom_to_json(const MapAtom& a) {
  Json j;
  j["kind"] = to_string(a.kind);
  j["label"] = a.label;
  j["src"] = {{"disk", a.src_disk}, {"group", to_string(a.src_group)}};
  j["dst"] = {{"disk", a.dst_disk}, {"group", to_string(a.dst_group)}};
  j["angle_shift"] = a.half_turn ? "pi" : "0";
  j["fiber_scale"] = a.fiber_scale;
  if (a.kind == AtomKind::singular1 || a.kind == AtomKind::singular2) {
    j["center_offset"] = a.center_offset;
    j["center_phase"] = std::string(1, a.center_phase);
  }
  if (a.kind == AtomKind::singular2) j["fiber_rotation_degree"] = a.fiber_rotation_degree;
  if (a.kind == AtomKind::trivial) j["c"] = {a.c1, a.c2};
  if (a.identity) j["identity"] = true;
  return j;
}

Json matrix_to_json(const TransferMatrix& m) {
  Json j;
  j["source_track"] = disk_choice_to_json(m.source);
  j["target_track"] = disk_choice_to_json(m.target);
  Json entries = Json::array();
  for (const auto& [key, paths] : m.entries) {
    Json e;
    e["target"] = key.first;
    e["source"] = key.second;
    Json terms = Json::array();
    for (const auto& p : paths) {
      Json term = Json::array();
      for (int a : p.atoms) term.push_back(atom_to_json(m.atom_table[a]));
      terms.push_back(term);
    }
    e["terms"] = terms;
    entries.push_back(e);
  }
  j["entries"] = entries;
  return j;
}

Json counting_to_json(const CountingMatrix& m) {
  Json j;
  Json idx = Json::array();
  for (const auto& [disk, grp] : m.index) idx.push_back(disk + "|" + to_string(grp));
  j["index"] = idx;
  j["counts"] = m.counts;
  return j;
}

Json census_to_json(const StrandCensus& c) {
  Json j;
  j["depth"] = c.depth;
  j["track"] = disk_choice_to_json(c.track);
  Json strands = Json::array();
  for (const auto& s : c.strands) {
    Json e;
    e["id"] = c.strand_key(s);
    e["disk"] = s.dst_disk;
    e["group"] = to_string(s.dst_group);
    e["source_disk"] = s.src_disk;
    e["radius"] = s.radius;
    e["center_theta0"] = {s.center_theta0[0], s.center_theta0[1]};
    Json labels = Json::array();
    for (int a : s.atoms) labels.push_back(c.atom_table[a].label);
    e["atoms"] = labels;
    strands.push_back(e);
  }
  j["strands"] = strands;
  return j;
}

Json geometry_to_json(const GeometryCertificate& cert) {
  Json j;
  j["ok"] = cert.ok;
  j["r_max"] = cert.r_max;
  j["violations"] = cert.violations;
  j["notes"] = cert.notes;
  return j;
}

Json weights_to_json(const WeightVector& wv) {
  Json j;
  j["track"] = disk_choice_to_json(wv.track);
  Json w = Json::object();
  for (const auto& [id, val] : wv.w) w[id] = val.str();
  j["weights"] = w;
  return j;
}

std::string matrix_to_dot(const TransferMatrix& m) {
  std::ostringstream out;
  out << "digraph transfer {\n";
  for (const auto& [key, paths] : m.entries) {
    for (const auto& p : paths) {
      const MapAtom& outer = m.atom_table[p.atoms.front()];
      const MapAtom& inner = m.atom_table[p.atoms.back()];
      out << "  \"" << inner.src_disk << "|" << to_string(inner.src_group) << "\" -> \""
          << outer.dst_disk << "|" << to_string(outer.dst_group) << "\" [label=\"";
      for (size_t i = 0; i < p.atoms.size(); ++i) {
        if (i) out << ".";
        out << m.atom_table[p.atoms[i]].label;
      }
      out << "\", kind=\"" << to_string(outer.kind) << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

std::string census_to_csv(const StrandCensus& c) {
  std::ostringstream out;
  out << "strand,disk,group,radius\n";
  for (const auto& s : c.strands) {
    std::ostringstream radius;
    radius.precision(17);
    radius << s.radius;
    out << c.strand_key(s) << "," << s.dst_disk << "," << to_string(s.dst_group) << ","
        << radius.str() << "\n";
  }
  return out.str();
}

std::string decomposition_to_dot(const DiskChoice& dc, const PlumbingGraph& g) {
  std::ostringstream out;
  out << "graph decomposition {\n";
  for (const auto& part : decompose(dc, g))
    out << "  \"" << part.id << "\" [anchor=\"" << part.anchor << "\"];\n";
  for (const auto& piece : regular_disks(dc, g))
    for (const auto& adj : piece.adjacency)
      out << "  \"" << piece.id << "\" -- \"" << adj << "\";\n";
  out << "}\n";
  return out.str();
}

}  // namespace pt
