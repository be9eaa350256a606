#include "plumbtwist/diskdecomp.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace pt {

namespace {

char choice_at(const DiskChoice& dc, const std::string& point) {
  auto it = dc.choice.find(point);
  if (it == dc.choice.end()) throw decomp_error("disk choice undefined at point " + point);
  return it->second;
}

}  // namespace

std::string chosen_sphere(const DiskChoice& dc, const PlumbingGraph& g, const PlumbingPoint& p) {
  char c = choice_at(dc, p.id);
  bool want_positive = (c == '+') == (dc.orientation == Orientation::standard);
  return g.sphere_sign(p.sphere_a) == Sign::positive
             ? (want_positive ? p.sphere_a : p.sphere_b)
             : (want_positive ? p.sphere_b : p.sphere_a);
}

std::vector<TrackPart> decompose(const DiskChoice& dc, const PlumbingGraph& g) {
  std::vector<TrackPart> parts;
  for (const auto& s : g.spheres)
    parts.push_back({PartKind::sphere_complement, s.id, 0, "comp:" + s.id});
  for (const auto& p : g.points) {
    parts.push_back({PartKind::neck, p.id, 0, "neck:" + p.id});
    parts.push_back({PartKind::bar_plus, p.id, '+', "bar+:" + p.id});
    parts.push_back({PartKind::bar_minus, p.id, '-', "bar-:" + p.id});
    parts.push_back({PartKind::disk, p.id, choice_at(dc, p.id), "disk:" + p.id});
  }
  return parts;
}

std::vector<SingularDisk> singular_disks(const DiskChoice& dc, const PlumbingGraph& g) {
  std::vector<SingularDisk> out;
  for (const auto& p : g.points) {
    char c = choice_at(dc, p.id);
    out.push_back({p.id, DiskFlavor::S, c, p.id, true, "S:" + p.id});
    out.push_back({p.id, DiskFlavor::SbarPlus, 0, "tau(" + p.id + ")", false, "Sb+:" + p.id});
    out.push_back({p.id, DiskFlavor::SbarMinus, 0, "sigma^-1(" + p.id + ")", false, "Sb-:" + p.id});
  }
  return out;
}

std::vector<MarkedSlot> marked_cycle(const PlumbingGraph& g, const std::string& sphere_id) {
  std::vector<MarkedSlot> slots;
  auto pts = g.points_on(sphere_id);
  for (const auto* p : pts) slots.push_back({p->id, false});
  for (const auto* p : pts) slots.push_back({p->id, true});
  return slots;
}

std::vector<RegularDisk> regular_disks(const DiskChoice& dc, const PlumbingGraph& g) {
  std::vector<RegularDisk> out;
  for (const auto& s : g.spheres) {
    auto slots = marked_cycle(g, s.id);
    if (slots.empty()) {
      out.push_back({"hemi:" + s.id + ":N", {"comp:" + s.id}, {}});
      out.push_back({"hemi:" + s.id + ":S", {"comp:" + s.id}, {}});
      continue;
    }
    size_t m = slots.size();
    auto boundary_of = [&](const MarkedSlot& slot) -> std::string {
      if (slot.antipode)
        return (g.sphere_sign(s.id) == Sign::positive ? "Sb+:" : "Sb-:") + slot.point;
      const PlumbingPoint* p = g.find_point(slot.point);
      bool disk_here = chosen_sphere(dc, g, *p) == s.id;
      return disk_here ? "S:" + slot.point : "hole:" + slot.point;
    };
    for (size_t i = 0; i < m; ++i) {
      RegularDisk piece;
      piece.id = "arc:" + s.id + ":" + std::to_string(i);
      piece.covers = {"comp:" + s.id};
      piece.adjacency = {boundary_of(slots[i]), boundary_of(slots[(i + 1) % m])};
      out.push_back(std::move(piece));
    }
  }
  for (const auto& p : g.points) {
    RegularDisk piece;
    piece.id = "neckpiece:" + p.id;
    piece.covers = {"neck:" + p.id};
    piece.adjacency = {"S:" + p.id, "hole:" + p.id};
    out.push_back(std::move(piece));
  }
  return out;
}

DecompositionReport check_decomposition(const DiskChoice& dc, const PlumbingGraph& g,
                                        const std::vector<SingularDisk>& disks,
                                        const std::vector<RegularDisk>& pieces) {
  DecompositionReport rep;
  auto parts = decompose(dc, g);
  std::set<std::string> part_ids;
  for (const auto& p : parts) part_ids.insert(p.id);

  // (1) every singular disk sits inside an actual part of the track.
  {
    bool ok = true;
    std::string detail;
    for (const auto& d : disks) {
      std::string host;
      switch (d.flavor) {
        case DiskFlavor::S:
          host = "disk:" + d.point;
          if (d.sign != choice_at(dc, d.point)) {
            ok = false;
            detail = "singular disk " + d.id + " carries sign not present in the track";
          }
          break;
        case DiskFlavor::SbarPlus: host = "bar+:" + d.point; break;
        case DiskFlavor::SbarMinus: host = "bar-:" + d.point; break;
      }
      if (!part_ids.count(host)) {
        ok = false;
        detail = "singular disk " + d.id + " has no host part " + host;
      }
    }
    rep.conditions.push_back({1, ok, detail});
  }

  // (2) pairwise disjoint: no two singular disks at the same point and flavor.
  {
    bool ok = true;
    std::string detail;
    std::set<std::pair<std::string, int>> seen;
    for (const auto& d : disks) {
      auto key = std::make_pair(d.point, static_cast<int>(d.flavor));
      if (!seen.insert(key).second) {
        ok = false;
        detail = "two singular disks share point " + d.point + " and flavor";
      }
    }
    rep.conditions.push_back({2, ok, detail});
  }

  // (3) singular values stay inside singular disks: all three flavors must be
  // present at every point, else some singular value has no disk to live in.
  {
    bool ok = true;
    std::string detail;
    for (const auto& p : g.points) {
      std::set<int> flavors;
      for (const auto& d : disks)
        if (d.point == p.id) flavors.insert(static_cast<int>(d.flavor));
      if (flavors.size() != 3) {
        ok = false;
        detail = "point " + p.id + " is missing a singular-disk flavor";
      }
    }
    rep.conditions.push_back({3, ok, detail});
  }

  // (4) regular pieces match the canonical cutting.
  {
    auto canonical = regular_disks(dc, g);
    std::multiset<std::string> want, got;
    for (const auto& r : canonical) want.insert(r.id);
    for (const auto& r : pieces) got.insert(r.id);
    bool ok = want == got;
    rep.conditions.push_back({4, ok, ok ? "" : "regular pieces differ from the canonical cutting"});
  }

  // (5) pieces and singular disks meet only along boundaries: no piece covers
  // a part that hosts a singular disk.
  {
    bool ok = true;
    std::string detail;
    std::set<std::string> singular_hosts;
    for (const auto& d : disks) {
      switch (d.flavor) {
        case DiskFlavor::S: singular_hosts.insert("disk:" + d.point); break;
        case DiskFlavor::SbarPlus: singular_hosts.insert("bar+:" + d.point); break;
        case DiskFlavor::SbarMinus: singular_hosts.insert("bar-:" + d.point); break;
      }
    }
    for (const auto& r : pieces)
      for (const auto& c : r.covers)
        if (singular_hosts.count(c)) {
          ok = false;
          detail = "regular piece " + r.id + " overlaps singular interior in " + c;
        }
    rep.conditions.push_back({5, ok, detail});
  }

  return rep;
}

}  // namespace pt
