#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>

#include "rayfan/jsonio.hpp"

using namespace rayfan;
using namespace rayfan::polycore;
using rayfan::io::json;

namespace {

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SpecError("cannot open input file: " + path);
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw SpecError(std::string("input is not valid JSON: ") + e.what());
    }
    return j;
}

void emit(const json& report, const std::string& output_path) {
    std::string text = report.dump(2) + "\n";
    if (output_path.empty() || output_path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(output_path);
    if (!out) throw SpecError("cannot open output file: " + output_path);
    out << text;
}

struct Options {
    std::string input;
    std::string output;
    std::string point;
    std::string point2;
    long grid_bound = 6;
    long samples = 200;
    unsigned seed = 0;
    bool timing = false;
};

json envelope(const std::string& command, const Options& opt) {
    json rep;
    rep["command"] = command;
    rep["input"] = opt.input;
    rep["options"] = {{"grid_bound", opt.grid_bound},
                      {"samples", opt.samples},
                      {"seed", opt.seed}};
    return rep;
}

json ring_warnings(const gradedring::GradedRingSpec& ring) {
    json w = json::array();
    for (const auto& s : ring.warnings) w.push_back(s);
    return w;
}

// ---- plot2d ------------------------------------------------------------

std::string svg_point(double x, double y) {
    std::ostringstream os;
    os << 300.0 + x << "," << 300.0 - y;
    return os.str();
}

void write_plot(const gradedring::GradedRingSpec& ring,
                const std::vector<chamberfan::Chamber>& chambers, const std::string& svg_path) {
    static const char* palette[] = {"#7fc97f", "#beaed4", "#fdc086", "#ffff99",
                                    "#386cb0", "#f0027f", "#bf5b17", "#666666"};
    double scale = 0;
    for (const auto& d : ring.generator_degrees)
        for (const auto& e : d) scale = std::max(scale, std::abs(e.get_d()));
    if (scale == 0) scale = 1;
    double unit = 120.0 / scale;

    std::ostringstream svg;
    svg << "<svg xmlns='http://www.w3.org/2000/svg' width='600' height='600' "
           "viewBox='0 0 600 600'>\n";
    svg << "<rect width='600' height='600' fill='white'/>\n";
    size_t color = 0;
    for (const auto& ch : chambers) {
        if (ch.cone.dim < 2 || ch.cone.generators.size() < 2) continue;
        // wedge between the two extreme rays, clipped at a fixed radius
        auto dir = [&](const IntVec& g) {
            double x = g[0].get_d(), y = g[1].get_d();
            double norm = std::sqrt(x * x + y * y);
            return std::pair<double, double>{280.0 * x / norm, 280.0 * y / norm};
        };
        auto [x1, y1] = dir(ch.cone.generators.front());
        auto [x2, y2] = dir(ch.cone.generators.back());
        svg << "<path d='M " << svg_point(0, 0) << " L " << svg_point(x1, y1) << " L "
            << svg_point(x2, y2) << " Z' fill='" << palette[color % 8]
            << "' fill-opacity='0.55' stroke='#333' stroke-width='1'/>\n";
        ++color;
    }
    svg << "<line x1='10' y1='300' x2='590' y2='300' stroke='#999'/>\n";
    svg << "<line x1='300' y1='10' x2='300' y2='590' stroke='#999'/>\n";
    for (size_t i = 0; i < ring.num_generators(); ++i) {
        double x = ring.degree(i)[0].get_d() * unit;
        double y = ring.degree(i)[1].get_d() * unit;
        svg << "<line x1='300' y1='300' x2='" << 300.0 + x << "' y2='" << 300.0 - y
            << "' stroke='black' stroke-width='2'/>\n";
        svg << "<circle cx='" << 300.0 + x << "' cy='" << 300.0 - y << "' r='4' fill='black'/>\n";
        svg << "<text x='" << 308.0 + x << "' y='" << 296.0 - y << "' font-size='14'>"
            << ring.variable_names[i] << "</text>\n";
    }
    svg << "</svg>\n";

    std::ofstream out(svg_path);
    if (!out) throw SpecError("cannot open output file: " + svg_path);
    out << svg.str();

    std::string csv_path = svg_path;
    auto dotpos = csv_path.rfind('.');
    csv_path = (dotpos == std::string::npos ? csv_path : csv_path.substr(0, dotpos)) + ".csv";
    std::ofstream csv(csv_path);
    csv << "chamber,generator,x,y\n";
    for (size_t c = 0; c < chambers.size(); ++c)
        for (size_t g = 0; g < chambers[c].cone.generators.size(); ++g)
            csv << c << "," << g << "," << chambers[c].cone.generators[g][0] << ","
                << chambers[c].cone.generators[g][1] << "\n";
}

// ---- selftest fixtures --------------------------------------------------

const char* kExample21 = R"({
  "kind": "polynomial", "grading_rank": 2,
  "degrees": [[1,0],[1,1],[0,1]], "variables": ["x","y","z"]
})";

const char* kExample24 = R"({
  "kind": "semigroup", "grading_rank": 2, "ambient_rank": 4,
  "exponents": [[1,0,1,0],[1,0,0,1],[0,1,1,0],[0,1,0,1]],
  "grading_map": [[2,0,1,0],[0,2,0,1]],
  "degrees": [[3,0],[2,1],[1,2],[0,3]],
  "variables": ["x","y","z","w"]
})";

const char* kExample852 = R"({
  "kind": "polynomial", "grading_rank": 2,
  "degrees": [[1,0],[1,0],[0,1],[0,1],[1,1]], "variables": ["x","y","z","w","u"]
})";

const char* kExample86 = R"({
  "kind": "polynomial", "grading_rank": 2,
  "degrees": [[1,0],[2,0],[0,1],[0,2]], "variables": ["x","y","z","w"]
})";

int run_selftest(const Options& opt) {
    size_t passed = 0, failed = 0;
    auto check = [&](const std::string& name, bool ok) {
        std::cout << (ok ? "PASS " : "FAIL ") << name << "\n";
        (ok ? passed : failed) += 1;
    };

    auto ring21 = io::parse_ring_spec(json::parse(kExample21));
    auto fan21 = chamberfan::assemble_fan(ring21, opt.seed, 200);
    check("2-variable-grading golden fan has 6 ray ideals", fan21.maximal_cones.size() == 6);
    check("golden fan verification block all green", fan21.report.all_ok());
    bool cones_ok = true;
    for (const auto& e : fan21.maximal_cones) cones_ok &= e.cone.verify_descriptions();
    check("cone descriptions verified by mutual containment", cones_ok);

    auto ring24 = io::parse_ring_spec(json::parse(kExample24));
    auto fan24 = chamberfan::assemble_fan(ring24, opt.seed, 200);
    check("xw=yz semigroup fan has 8 ray ideals", fan24.maximal_cones.size() == 8);
    check("xw=yz fan verification block all green", fan24.report.all_ok());

    auto ring852 = io::parse_ring_spec(json::parse(kExample852));
    auto ch852 = chamberfan::chamber_decomposition(ring852);
    check("five-variable example has exactly two chambers", ch852.size() == 2);

    auto ring86 = io::parse_ring_spec(json::parse(kExample86));
    auto rt = toricmsr::demazure_roundtrip(ring86, full_orthant(2), 4);
    bool half = true;
    for (const auto& d : rt.msr.divisors) {
        size_t nonzero = 0;
        for (const auto& q : d.coefficients)
            if (q != 0) {
                ++nonzero;
                half &= (q == rat(1, 2));
            }
        half &= (nonzero == 1);
    }
    check("product-of-lines roundtrip matches on the grid", rt.dims_match);
    check("roundtrip divisor coefficients are both 1/2", half);

    std::cout << (failed == 0 ? "selftest OK" : "selftest FAILED") << " (" << passed << "/"
              << (passed + failed) << ")\n";
    return failed == 0 ? 0 : 1;
}

// ---- subcommand bodies ----------------------------------------------------

int run_command(const std::string& cmd, const Options& opt) {
    auto t0 = std::chrono::steady_clock::now();
    json rep = envelope(cmd, opt);

    if (cmd == "selftest") return run_selftest(opt);

    if (cmd == "chambers" || cmd == "fan" || cmd == "rayideal" || cmd == "compare" ||
        cmd == "thm4" || cmd == "roundtrip" || cmd == "plot2d") {
        auto ring = io::parse_ring_spec(load_json(opt.input));
        rep["warnings"] = ring_warnings(ring);
        if (cmd == "chambers") {
            auto chambers = chamberfan::chamber_decomposition(ring);
            json arr = json::array();
            for (const auto& ch : chambers) arr.push_back(io::chamber_to_json(ring, ch));
            rep["results"] = {{"chambers", arr}, {"count", chambers.size()}};
        } else if (cmd == "fan") {
            auto fan = chamberfan::assemble_fan(ring, opt.seed,
                                                static_cast<size_t>(opt.samples));
            rep["results"] = io::fan_to_json(ring, fan);
            if (ring.grading_rank == 2 && weight_cone(ring).is_strongly_convex()) {
                size_t dim = ring.kind == gradedring::RingKind::Polynomial
                                 ? ring.num_generators()
                                 : rank_of(ring.exponent_vectors, ring.ambient_rank);
                size_t bound = 2 * dim;
                rep["results"]["noether_normalization"] = {
                    {"nonzero_ray_ideals", fan.maximal_cones.size()},
                    {"ring_dimension", dim},
                    {"max_ray_ideals_with_graded_normalization", bound},
                    {"z2_graded_noether_normalization_obstructed",
                     fan.maximal_cones.size() > bound}};
            }
            auto poset = chamberfan::morphism_poset(ring);
            json edges = json::array();
            for (const auto& [a, b] : poset.edges) edges.push_back(json::array({a, b}));
            rep["results"]["morphism_edges"] = edges;
        } else if (cmd == "rayideal") {
            if (opt.point.empty()) throw SpecError("rayideal needs --point \"p/q,p/q\"");
            auto a = io::parse_point(opt.point);
            rep["results"] = {{"ideal", io::ideal_to_json(ring, gradedring::ray_ideal(ring, a))}};
            auto j = gradedring::ray_ideal(ring, a);
            if (!j.is_zero)
                rep["results"]["maximal_cone"] =
                    io::cone_to_json(chamberfan::maximal_ray_ideal_cone(ring, a));
        } else if (cmd == "compare") {
            if (opt.point.empty() || opt.point2.empty())
                throw SpecError("compare needs --point and --point2");
            auto j1 = gradedring::ray_ideal(ring, io::parse_point(opt.point));
            auto j2 = gradedring::ray_ideal(ring, io::parse_point(opt.point2));
            auto order = gradedring::ray_ideal_compare(j1, j2);
            const char* names[] = {"Equal", "LessThan", "GreaterThan", "Incomparable"};
            rep["results"] = {{"order", names[static_cast<int>(order)]},
                              {"first", io::ideal_to_json(ring, j1)},
                              {"second", io::ideal_to_json(ring, j2)}};
        } else if (cmd == "thm4") {
            auto t4 = chamberfan::theorem4_check(ring);
            rep["results"] = {{"one_chamber", t4.one_chamber},
                              {"faces_are_ray_ideal_cones", t4.faces_are_ray_ideal_cones},
                              {"finite_over_axis_subring", t4.finite_over_axis_subring}};
            if (t4.witness)
                rep["results"]["witness"] = {io::rat_vec_to_json(t4.witness->first),
                                             io::rat_vec_to_json(t4.witness->second)};
        } else if (cmd == "roundtrip") {
            RationalCone sigma;
            if (!opt.point.empty()) {
                sigma = chamberfan::maximal_ray_ideal_cone(ring, io::parse_point(opt.point));
            } else {
                auto chambers = chamberfan::chamber_decomposition(ring);
                if (chambers.empty()) throw SpecError("ring has no chambers");
                sigma = chambers.front().cone;
            }
            auto rt = toricmsr::demazure_roundtrip(ring, sigma, opt.grid_bound);
            rep["results"] = io::roundtrip_to_json(rt);
            rep["results"]["sigma"] = io::cone_to_json(sigma);
        } else {  // plot2d
            if (ring.grading_rank != 2)
                throw SpecError("plot2d is only available for grading rank 2");
            if (opt.output.empty()) throw SpecError("plot2d needs --output file.svg");
            auto chambers = chamberfan::chamber_decomposition(ring);
            write_plot(ring, chambers, opt.output);
            std::cout << "wrote " << opt.output << "\n";
            return 0;
        }
    } else {
        auto spec = io::parse_toric_spec(load_json(opt.input));
        if (cmd == "msr-dim") {
            if (!opt.point.empty()) {
                IntVec r;
                for (const auto& q : io::parse_point(opt.point)) {
                    if (q.get_den() != 1) throw SpecError("msr-dim point must be integral");
                    r.push_back(q.get_num());
                }
                rep["results"] = {{"r", io::int_vec_to_json(r)},
                                  {"dim", toricmsr::graded_piece_dim(spec, r)}};
            } else {
                json table = json::array();
                IntVec r(spec.num_divisors(), Int(-opt.grid_bound));
                while (true) {
                    table.push_back(json::array(
                        {io::int_vec_to_json(r), toricmsr::graded_piece_dim(spec, r)}));
                    size_t j = 0;
                    while (j < r.size()) {
                        if (r[j] < opt.grid_bound) {
                            ++r[j];
                            break;
                        }
                        r[j] = -opt.grid_bound;
                        ++j;
                    }
                    if (j == r.size()) break;
                }
                rep["results"] = {{"grid_bound", opt.grid_bound}, {"dims", table}};
            }
            auto h1 = toricmsr::height_one_prime_data(spec);
            json primes = json::array();
            for (const auto& p : h1.primes)
                primes.push_back({{"ray", p.ray_index},
                                  {"q", p.q.get_str()},
                                  {"valuations", io::int_vec_to_json(p.valuations)}});
            rep["results"]["height_one_primes"] = primes;
            rep["results"]["ample_combination_found"] = h1.ample.found;
        } else if (cmd == "classgroup") {
            rep["results"] = io::class_group_to_json(toricmsr::class_group(spec));
        } else if (cmd == "factorial") {
            auto res = toricmsr::is_factorial(spec);
            rep["results"] = io::class_group_to_json(res.data);
            rep["results"]["factorial"] = res.factorial;
        } else {
            throw SpecError("unknown command: " + cmd);
        }
    }

    if (opt.timing) {
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
        rep["timing_ms"] = ms;
    }
    emit(rep, opt.output);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rayfan: chamber decompositions, ray ideals and fans of graded rings, "
                 "and multi-section rings of complete toric varieties"};
    app.require_subcommand(1);

    Options opt;
    std::vector<CLI::App*> subs;
    for (const char* name : {"chambers", "fan", "rayideal", "compare", "thm4", "msr-dim",
                             "classgroup", "factorial", "roundtrip", "plot2d", "selftest"}) {
        auto* sub = app.add_subcommand(name);
        if (std::string(name) != "selftest")
            sub->add_option("--input", opt.input, "input JSON file")->required();
        sub->add_option("--output", opt.output, "output file (default: stdout)");
        sub->add_option("--grid-bound", opt.grid_bound, "grid bound (default 6)");
        sub->add_option("--samples", opt.samples, "verification sample count (default 200)");
        sub->add_option("--seed", opt.seed, "sampling seed (default 0)");
        sub->add_option("--point", opt.point, "rational point \"p/q,p/q\"");
        sub->add_option("--point2", opt.point2, "second rational point");
        sub->add_flag("--timing", opt.timing, "include timing in the report");
        subs.push_back(sub);
    }

    CLI11_PARSE(app, argc, argv);
    std::string cmd;
    for (auto* sub : subs)
        if (sub->parsed()) cmd = sub->get_name();

    try {
        return run_command(cmd, opt);
    } catch (const SpecError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
