#include "wallx/serialize.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

namespace {

std::vector<wallx::Rational> parse_point(const std::string& text) {
    std::vector<wallx::Rational> coords;
    std::string cur;
    for (char ch : text) {
        if (ch == ',') {
            coords.push_back(wallx::rat_from_string(cur));
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(ch))) {
            cur += ch;
        }
    }
    if (!cur.empty()) coords.push_back(wallx::rat_from_string(cur));
    if (coords.empty()) throw wallx::Error("empty point");
    return coords;
}

wallx::Json checks_to_json(const wallx::Report& rep) {
    wallx::Json arr = wallx::Json::array();
    for (const auto& l : rep.lines) {
        wallx::Json c = wallx::Json::object();
        c["name"] = l.name;
        c["pass"] = l.pass;
        c["witness"] = l.witness;
        arr.push_back(std::move(c));
    }
    return arr;
}

wallx::Json point_json(const wallx::InertiaPoint& ip) {
    wallx::Json j = wallx::Json::object();
    wallx::Json pt = wallx::Json::array();
    for (const auto& c : ip.point.coords) pt.push_back(wallx::rat_to_string(c));
    j["point"] = std::move(pt);
    j["lambda"] = wallx::rat_to_string(ip.lambda);
    return j;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact wall-crossing engine for the hypersurface schober on the cylinder"};
    app.require_subcommand(1);

    int n = 2;
    int k = 0; // 0 means: default to n
    int trials = 50;
    std::uint64_t seed = 0;
    std::string point_str;
    std::string lambda_str = "1";
    std::string in_path;
    std::string out_path;
    bool as_json = false;

    auto add_common = [&](CLI::App* sub, bool with_nk) {
        if (with_nk) {
            sub->add_option("--n", n, "number of boundary variables (default 2)");
            sub->add_option("--k", k, "framing index, 1..n (default n)");
        }
        sub->add_flag("--json", as_json, "machine-readable JSON report");
    };

    CLI::App* c_wall = app.add_subcommand("wallcross", "apply the wall-crossing formula to a point");
    add_common(c_wall, true);
    c_wall->add_option("--point", point_str, "torus point, comma-separated rationals")->required();
    c_wall->add_option("--lambda", lambda_str, "monodromy scalar (default 1)");

    CLI::App* c_map = app.add_subcommand("map", "print the wall-crossing map symbolically");
    add_common(c_map, true);

    CLI::App* c_ver = app.add_subcommand("verify-corollary",
                                         "check the categorical wall-crossing at a point");
    add_common(c_ver, true);
    c_ver->add_option("--point", point_str, "torus point, comma-separated rationals")->required();
    c_ver->add_option("--lambda", lambda_str, "monodromy scalar (default 1)");

    CLI::App* c_sph = app.add_subcommand("check-spherical", "run the SF axiom suite");
    add_common(c_sph, true);

    CLI::App* c_mut = app.add_subcommand("mutate", "mutate a serialized quintuple");
    add_common(c_mut, false);
    c_mut->add_option("--in", in_path, "quintuple description (JSON)")->required();
    c_mut->add_option("--out", out_path, "where to write the mutated quintuple");

    CLI::App* c_cmp = app.add_subcommand("compare",
                                         "randomized formula-vs-category agreement suite");
    add_common(c_cmp, true);
    c_cmp->add_option("--trials", trials, "number of trials (default 50)");
    c_cmp->add_option("--seed", seed, "random seed (default 0)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 64;
    }

    bool needs_nk = !app.got_subcommand(c_mut);
    if (needs_nk) {
        if (k == 0) k = n;
        if (n < 2) {
            std::cerr << "error: --n must be at least 2\n";
            return 64;
        }
        if (k < 1 || k > n) {
            std::cerr << "error: --k must lie in 1.." << n << "\n";
            return 64;
        }
    }

    try {
        if (app.got_subcommand(c_wall)) {
            wallx::InertiaPoint ip = wallx::make_inertia_point(
                wallx::TorusPoint(parse_point(point_str)), wallx::rat_from_string(lambda_str));
            wallx::InertiaPoint out = wallx::wallcross_point(ip, n, k);
            if (as_json) {
                wallx::Json j = wallx::Json::object();
                j["command"] = "wallcross";
                j["n"] = n;
                j["k"] = k;
                j["input"] = point_json(ip);
                j["result"] = point_json(out);
                std::cout << wallx::canonical_dump(j);
            } else {
                std::cout << out.to_string() << "\n";
            }
            return 0;
        }
        if (app.got_subcommand(c_map)) {
            wallx::BirationalMap bm = wallx::wallcross_map(n, k);
            if (as_json) {
                wallx::Json j = wallx::Json::object();
                j["command"] = "map";
                j["n"] = n;
                j["k"] = k;
                wallx::Json comps = wallx::Json::object();
                for (int i = 0; i < n; ++i)
                    comps["y" + std::to_string(i + 1)] =
                        bm.comps[static_cast<size_t>(i)].to_string();
                j["components"] = std::move(comps);
                std::cout << wallx::canonical_dump(j);
            } else {
                for (const auto& line : bm.component_lines()) std::cout << line << "\n";
            }
            return 0;
        }
        if (app.got_subcommand(c_ver)) {
            wallx::CylinderSchober cyl = wallx::CylinderSchober::make(n, k);
            wallx::InertiaPoint ip = wallx::make_inertia_point(
                wallx::TorusPoint(parse_point(point_str)), wallx::rat_from_string(lambda_str));
            wallx::InertiaObject obj = wallx::skyscraper_object(cyl, ip);
            wallx::Report rep = wallx::verify_corollary(cyl, obj);
            if (as_json) {
                wallx::Json j = wallx::Json::object();
                j["command"] = "verify-corollary";
                j["n"] = n;
                j["k"] = k;
                j["input"] = point_json(ip);
                j["checks"] = checks_to_json(rep);
                j["pass"] = rep.all_pass();
                std::cout << wallx::canonical_dump(j);
            } else {
                rep.print(std::cout);
            }
            return rep.all_pass() ? 0 : 1;
        }
        if (app.got_subcommand(c_sph)) {
            wallx::HypersurfaceSchober sch = wallx::HypersurfaceSchober::make(n, k);
            wallx::Report rep = wallx::check_sf_axioms(sch, wallx::standard_samples(sch));
            if (as_json) {
                wallx::Json j = wallx::Json::object();
                j["command"] = "check-spherical";
                j["n"] = n;
                j["k"] = k;
                j["checks"] = checks_to_json(rep);
                j["pass"] = rep.all_pass();
                std::cout << wallx::canonical_dump(j);
            } else {
                rep.print(std::cout);
            }
            return rep.all_pass() ? 0 : 1;
        }
        if (app.got_subcommand(c_mut)) {
            wallx::Json in = wallx::read_json_file(in_path);
            wallx::QuintupleSpec spec = wallx::spec_from_json(in);
            wallx::CylinderSchober cyl = wallx::CylinderSchober::make(spec.n, spec.k);
            wallx::Report rep;
            wallx::Json dump;
            std::string direction;
            if (spec.construction == "clifford") {
                direction = "unmutate";
                wallx::TwistedComplex y = wallx::build_object(cyl, spec);
                wallx::ScaledChainMap m = wallx::build_automorphism(y, spec);
                wallx::Quintuple q = wallx::unmutate(wallx::clifford(cyl, y, m));
                rep = wallx::validate_quintuple(q);
                dump = wallx::quintuple_to_json(q);
            } else {
                direction = "mutate";
                wallx::Quintuple q =
                    spec.construction == "counit"
                        ? wallx::counit_quintuple(cyl)
                        : [&]() {
                              wallx::TwistedComplex y = wallx::build_object(cyl, spec);
                              return wallx::chekanov(cyl, y, wallx::build_automorphism(y, spec));
                          }();
                wallx::MutatedQuintuple mq = wallx::mutate(q);
                rep = wallx::validate_mutated_quintuple(mq);
                dump = wallx::mutated_to_json(mq);
            }
            if (!out_path.empty()) wallx::write_text_file(out_path, wallx::canonical_dump(dump));
            if (as_json) {
                wallx::Json j = wallx::Json::object();
                j["command"] = "mutate";
                j["direction"] = direction;
                j["checks"] = checks_to_json(rep);
                j["pass"] = rep.all_pass();
                if (out_path.empty()) j["result"] = std::move(dump);
                std::cout << wallx::canonical_dump(j);
            } else {
                rep.print(std::cout);
            }
            return rep.all_pass() ? 0 : 1;
        }
        if (app.got_subcommand(c_cmp)) {
            if (trials < 1) {
                std::cerr << "error: --trials must be positive\n";
                return 64;
            }
            wallx::CompareOutcome oc = wallx::compare_suite(n, k, trials, seed);
            bool all = oc.passes == oc.trials;
            if (as_json) {
                wallx::Json j = wallx::Json::object();
                j["command"] = "compare";
                j["n"] = n;
                j["k"] = k;
                j["trials"] = oc.trials;
                j["seed"] = seed;
                j["passes"] = oc.passes;
                j["checks"] = checks_to_json(oc.report);
                j["pass"] = all;
                std::cout << wallx::canonical_dump(j);
            } else {
                for (const auto& l : oc.report.lines)
                    if (!l.pass) std::cout << "CHECK " << l.name << " FAIL " << l.witness << "\n";
                std::cout << oc.passes << "/" << oc.trials << (all ? " PASS" : " FAIL") << "\n";
            }
            return all ? 0 : 1;
        }
    } catch (const wallx::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
