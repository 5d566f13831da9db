#pragma once

#include <json.hpp>

#include "rayfan/chamberfan.hpp"
#include "rayfan/toricmsr.hpp"

namespace rayfan::io {

using nlohmann::json;

// Ring specs: {"kind": "polynomial", "grading_rank": n, "degrees": [[..]],
// "variables": [..]?} or {"kind": "semigroup", "grading_rank": n,
// "ambient_rank": N, "exponents": [[..]], "grading_map": [[..]],
// "degrees": [[..]]?}. Validation reports every violation, not only the
// first one.
gradedring::GradedRingSpec parse_ring_spec(const json& j);

// Toric specs: {"lattice_rank": d, "rays": [[..]], "max_cones": [[ray
// indices]], "divisors": [["p/q", ...], ...]}.
toricmsr::MultiSectionRingSpec parse_toric_spec(const json& j);

json cone_to_json(const polycore::RationalCone& c);
json ideal_to_json(const gradedring::GradedRingSpec& ring, const gradedring::RayIdeal& ideal);
json chamber_to_json(const gradedring::GradedRingSpec& ring, const chamberfan::Chamber& ch);
json fan_to_json(const gradedring::GradedRingSpec& ring, const chamberfan::ChamberFan& fan);
json class_group_to_json(const toricmsr::ClassGroupData& data);
json roundtrip_to_json(const toricmsr::RoundtripReport& rep);

json int_vec_to_json(const IntVec& v);
json rat_vec_to_json(const RatVec& v);
IntVec json_to_int_vec(const json& j);

// "p/q,p/q" -> rational vector (for --point command line options)
RatVec parse_point(const std::string& text);

}  // namespace rayfan::io
