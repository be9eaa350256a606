#pragma once

#include <json.hpp>
#include <string>

#include "plumbtwist/diskdecomp.hpp"
#include "plumbtwist/plumbing.hpp"
#include "plumbtwist/surface.hpp"
#include "plumbtwist/transfer.hpp"
#include "plumbtwist/twistsys.hpp"

namespace pt {

using Json = nlohmann::ordered_json;

// Plumbing graphs: {"n": int, "spheres": [{"id","sign"}],
//   "points": [{"id","a","b","gluing","pos_a","pos_b"}]}.
Json graph_to_json(const PlumbingGraph& g);
PlumbingGraph graph_from_json(const Json& j);

Json disk_choice_to_json(const DiskChoice& dc);
DiskChoice disk_choice_from_json(const Json& j);

Json validation_to_json(const ValidationReport& rep);
Json parts_to_json(const std::vector<TrackPart>& parts);
Json singular_disks_to_json(const std::vector<SingularDisk>& disks);
Json regular_disks_to_json(const std::vector<RegularDisk>& pieces);

Json atom_to_json(const MapAtom& a);
Json matrix_to_json(const TransferMatrix& m);
Json counting_to_json(const CountingMatrix& m);
Json census_to_json(const StrandCensus& c);
Json geometry_to_json(const GeometryCertificate& cert);

Json weights_to_json(const WeightVector& wv);

// DOT digraph of a transfer matrix (typed edges) and CSV of a census.
std::string matrix_to_dot(const TransferMatrix& m);
std::string census_to_csv(const StrandCensus& c);
std::string decomposition_to_dot(const DiskChoice& dc, const PlumbingGraph& g);

}  // namespace pt
