#include "rayfan/jsonio.hpp"

#include <sstream>

namespace rayfan::io {

using namespace polycore;
using gradedring::GradedRingSpec;
using gradedring::RingKind;

namespace {

void fail_all(const std::vector<std::string>& problems) {
    if (problems.empty()) return;
    std::string msg = "invalid input:";
    for (const auto& p : problems) msg += "\n  - " + p;
    throw SpecError(msg);
}

std::vector<IntVec> parse_int_rows(const json& j, const std::string& field, size_t expect_len,
                                   std::vector<std::string>& problems) {
    std::vector<IntVec> rows;
    if (!j.is_array()) {
        problems.push_back(field + " must be an array of integer vectors");
        return rows;
    }
    for (size_t i = 0; i < j.size(); ++i) {
        const auto& row = j[i];
        if (!row.is_array()) {
            problems.push_back(field + "[" + std::to_string(i) + "] must be an array");
            continue;
        }
        IntVec v;
        bool ok = true;
        for (const auto& e : row) {
            if (e.is_number_integer()) {
                v.push_back(Int(e.get<long long>()));
            } else if (e.is_string()) {
                try {
                    Rat q = parse_rat(e.get<std::string>());
                    if (q.get_den() != 1) throw SpecError("fractional");
                    v.push_back(q.get_num());
                } catch (const std::exception&) {
                    problems.push_back(field + "[" + std::to_string(i) +
                                       "] entry '" + e.get<std::string>() +
                                       "' is not an integer (irrational or fractional data "
                                       "is outside the input class)");
                    ok = false;
                }
            } else {
                problems.push_back(field + "[" + std::to_string(i) + "] has a non-integer entry");
                ok = false;
            }
        }
        if (ok && expect_len && v.size() != expect_len)
            problems.push_back(field + "[" + std::to_string(i) + "] has length " +
                               std::to_string(v.size()) + ", expected " +
                               std::to_string(expect_len));
        if (ok) rows.push_back(std::move(v));
    }
    return rows;
}

}  // namespace

GradedRingSpec parse_ring_spec(const json& j) {
    std::vector<std::string> problems;
    if (!j.is_object()) throw SpecError("ring spec must be a JSON object");
    std::string kind = j.value("kind", "");
    if (kind != "polynomial" && kind != "semigroup")
        problems.push_back(
            "kind must be \"polynomial\" or \"semigroup\"; got \"" + kind +
            "\" (infinite presentations such as symbolic Rees algebras of space "
            "monomial primes are outside the input class, and irrational data such as "
            "conjectural Nagata cones cannot be represented)");
    size_t n = 0;
    if (!j.contains("grading_rank") || !j["grading_rank"].is_number_unsigned())
        problems.push_back("grading_rank must be a positive integer");
    else
        n = j["grading_rank"].get<size_t>();
    std::vector<std::string> names;
    if (j.contains("variables"))
        for (const auto& v : j["variables"]) names.push_back(v.get<std::string>());
    fail_all(problems);

    if (kind == "polynomial") {
        if (!j.contains("degrees")) problems.push_back("polynomial spec needs \"degrees\"");
        fail_all(problems);
        auto degrees = parse_int_rows(j["degrees"], "degrees", n, problems);
        fail_all(problems);
        return gradedring::make_polynomial_ring(std::move(degrees), n, std::move(names));
    }

    size_t N = 0;
    if (!j.contains("ambient_rank") || !j["ambient_rank"].is_number_unsigned())
        problems.push_back("semigroup spec needs an integer \"ambient_rank\"");
    else
        N = j["ambient_rank"].get<size_t>();
    if (!j.contains("exponents")) problems.push_back("semigroup spec needs \"exponents\"");
    if (!j.contains("grading_map")) problems.push_back("semigroup spec needs \"grading_map\"");
    fail_all(problems);
    auto exponents = parse_int_rows(j["exponents"], "exponents", N, problems);
    auto gm_rows = parse_int_rows(j["grading_map"], "grading_map", N, problems);
    if (gm_rows.size() != n)
        problems.push_back("grading_map must have grading_rank = " + std::to_string(n) +
                           " rows");
    fail_all(problems);
    IntMatrix gmap = IntMatrix::from_rows(gm_rows, N);
    if (j.contains("degrees")) {
        auto declared = parse_int_rows(j["degrees"], "degrees", n, problems);
        if (declared.size() != exponents.size())
            problems.push_back("degrees and exponents must have the same length");
        for (size_t i = 0; i < declared.size() && i < exponents.size(); ++i)
            if (mat_apply(gmap, exponents[i]) != declared[i])
                problems.push_back("degrees[" + std::to_string(i) +
                                   "] does not equal grading_map * exponents[" +
                                   std::to_string(i) + "]");
        fail_all(problems);
    }
    return gradedring::make_semigroup_ring(std::move(exponents), std::move(gmap),
                                           std::move(names));
}

toricmsr::MultiSectionRingSpec parse_toric_spec(const json& j) {
    std::vector<std::string> problems;
    if (!j.is_object()) throw SpecError("toric spec must be a JSON object");
    size_t d = 0;
    if (!j.contains("lattice_rank") || !j["lattice_rank"].is_number_unsigned())
        problems.push_back("lattice_rank must be a positive integer");
    else
        d = j["lattice_rank"].get<size_t>();
    if (!j.contains("rays")) problems.push_back("toric spec needs \"rays\"");
    if (!j.contains("max_cones")) problems.push_back("toric spec needs \"max_cones\"");
    if (!j.contains("divisors")) problems.push_back("toric spec needs \"divisors\"");
    fail_all(problems);

    auto rays = parse_int_rows(j["rays"], "rays", d, problems);
    std::vector<std::vector<size_t>> max_cones;
    for (const auto& c : j["max_cones"]) {
        std::vector<size_t> cone;
        for (const auto& e : c) {
            if (!e.is_number_unsigned()) {
                problems.push_back("max_cones entries must be ray indices");
                break;
            }
            cone.push_back(e.get<size_t>());
        }
        max_cones.push_back(std::move(cone));
    }
    std::vector<toricmsr::QDivisor> divisors;
    for (size_t i = 0; i < j["divisors"].size(); ++i) {
        toricmsr::QDivisor div;
        for (const auto& e : j["divisors"][i]) {
            try {
                if (e.is_number_integer())
                    div.coefficients.push_back(Rat(e.get<long long>()));
                else
                    div.coefficients.push_back(parse_rat(e.get<std::string>()));
            } catch (const std::exception& ex) {
                problems.push_back("divisors[" + std::to_string(i) + "]: " + ex.what());
            }
        }
        if (div.coefficients.size() != rays.size())
            problems.push_back("divisors[" + std::to_string(i) +
                               "] needs one coefficient per ray");
        divisors.push_back(std::move(div));
    }
    fail_all(problems);
    return toricmsr::make_multi_section_ring(
        toricmsr::make_toric_variety(std::move(rays), std::move(max_cones)),
        std::move(divisors));
}

json int_vec_to_json(const IntVec& v) {
    json out = json::array();
    for (const auto& e : v) {
        if (e.fits_slong_p())
            out.push_back(e.get_si());
        else
            out.push_back(e.get_str());
    }
    return out;
}

json rat_vec_to_json(const RatVec& v) {
    json out = json::array();
    for (const auto& e : v) out.push_back(format_rat(e));
    return out;
}

IntVec json_to_int_vec(const json& j) {
    IntVec v;
    for (const auto& e : j) v.push_back(Int(e.get<long long>()));
    return v;
}

RatVec parse_point(const std::string& text) {
    RatVec out;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) out.push_back(parse_rat(part));
    if (out.empty()) throw SpecError("empty point");
    return out;
}

json cone_to_json(const RationalCone& c) {
    json out;
    out["ambient_dim"] = c.ambient_dim;
    out["dim"] = c.dim;
    out["lineality_dim"] = c.lineality_dim;
    out["generators"] = json::array();
    for (const auto& g : c.generators) out["generators"].push_back(int_vec_to_json(g));
    out["halfspaces"] = json::array();
    for (const auto& h : c.halfspaces) out["halfspaces"].push_back(int_vec_to_json(h));
    return out;
}

namespace {

std::string face_name(const GradedRingSpec& ring, const std::vector<size_t>& face) {
    if (face.empty()) return "1";
    std::string s;
    for (size_t i : face) s += ring.variable_names[i];
    return s;
}

}  // namespace

json ideal_to_json(const GradedRingSpec& ring, const gradedring::RayIdeal& ideal) {
    json out;
    out["ray"] = int_vec_to_json(ideal.ray);
    out["is_zero"] = ideal.is_zero;
    out["is_unit"] = ideal.is_unit;
    json faces = json::array();
    for (const auto& f : ideal.minimal_member_faces) {
        json face = json::array();
        for (size_t i : f) face.push_back(ring.variable_names[i]);
        faces.push_back(face);
    }
    out["minimal_member_faces"] = faces;
    if (ring.kind == RingKind::Polynomial && !ideal.is_zero) {
        json gens = json::array();
        for (const auto& g : ideal.squarefree_generators) gens.push_back(face_name(ring, g));
        out["generators"] = gens;
        json primes = json::array();
        for (const auto& p : ideal.minimal_primes) {
            json prime = json::array();
            for (size_t i : p) prime.push_back(ring.variable_names[i]);
            primes.push_back(prime);
        }
        out["minimal_primes"] = primes;
    }
    return out;
}

json chamber_to_json(const GradedRingSpec& ring, const chamberfan::Chamber& ch) {
    json out;
    out["cone"] = cone_to_json(ch.cone);
    out["sign_vector"] = ch.sign_vector;
    out["interior_point"] = rat_vec_to_json(ch.interior_point);
    out["ideal"] = ideal_to_json(ring, ch.ideal);
    return out;
}

json fan_to_json(const GradedRingSpec& ring, const chamberfan::ChamberFan& fan) {
    json out;
    json cones = json::array();
    for (const auto& e : fan.maximal_cones) {
        json entry;
        entry["cone"] = cone_to_json(e.cone);
        entry["ideal"] = ideal_to_json(ring, e.ideal);
        cones.push_back(entry);
    }
    out["maximal_ray_ideal_cones"] = cones;
    out["nonzero_ray_ideal_count"] = fan.maximal_cones.size();
    json hasse = json::array();
    for (const auto& [i, j] : fan.hasse) hasse.push_back(json::array({i, j}));
    out["hasse"] = hasse;
    json rep;
    rep["unique_maximality"] = fan.report.unique_maximality;
    rep["face_closure"] = fan.report.face_closure;
    rep["order_reversal"] = fan.report.order_reversal;
    rep["fan_axioms"] = fan.report.fan_axioms;
    rep["coverage"] = fan.report.coverage;
    rep["constancy"] = fan.report.constancy;
    rep["cross_validation"] = fan.report.cross_validation;
    rep["all_ok"] = fan.report.all_ok();
    rep["pre_merge_cell_count"] = fan.report.pre_merge_cell_count;
    rep["notes"] = fan.report.notes;
    out["verification"] = rep;
    return out;
}

json class_group_to_json(const toricmsr::ClassGroupData& data) {
    json out;
    out["support_rays"] = data.support_rays;
    out["cl_x"] = data.cl_x.describe();
    out["cl_r"] = data.cl_r.describe();
    out["m_mod_l_plus_z"] = data.m_mod_l_plus_z.describe();
    out["m_equals_l_plus_z"] = data.m_equals_l_plus_z;
    out["image_generates_cl_x"] = data.image_generates_cl_x;
    out["ample_combination_found"] = data.ample.found;
    if (data.ample.found) out["ample_combination"] = int_vec_to_json(data.ample.combination);
    out["conditional"] = data.conditional;
    return out;
}

json roundtrip_to_json(const toricmsr::RoundtripReport& rep) {
    json out;
    json rays = json::array();
    for (const auto& r : rep.msr.variety.rays) rays.push_back(int_vec_to_json(r));
    out["quotient_rays"] = rays;
    out["quotient_max_cones"] = rep.msr.variety.max_cones;
    json divs = json::array();
    for (const auto& d : rep.msr.divisors) divs.push_back(rat_vec_to_json(d.coefficients));
    out["divisor_coefficients"] = divs;
    json qs = json::array();
    for (const auto& q : rep.msr.q_per_ray) qs.push_back(q.get_str());
    out["q_per_ray"] = qs;
    json lifts = json::array();
    for (const auto& w : rep.lifts) lifts.push_back(int_vec_to_json(w));
    out["unit_degree_lifts"] = lifts;
    out["grid_bound"] = rep.grid_bound;
    out["grid_points"] = rep.grid_points;
    out["dims_match"] = rep.dims_match;
    json mism = json::array();
    for (const auto& r : rep.mismatches) mism.push_back(int_vec_to_json(r));
    out["mismatches"] = mism;
    return out;
}

}  // namespace rayfan::io
