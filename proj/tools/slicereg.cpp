// Command-line front end: every library operation behind a batch subcommand.
// Exit codes: 0 success, 1 mathematical negative (e.g. the polynomial does
// not vanish), 2 usage error.

#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "slicereg/checks.hpp"
#include "slicereg/json_io.hpp"

namespace {

using namespace slicereg;

constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;

// JSON arguments are accepted inline or as a path to a file.
json load_json(const std::string& arg) {
    if (std::filesystem::exists(arg)) {
        std::ifstream in(arg);
        return json::parse(in);
    }
    return json::parse(arg);
}

// Polynomials come in as expression text, inline JSON, or a JSON file.
SlicePoly load_poly(const std::string& arg, unsigned nvars) {
    if (std::filesystem::exists(arg) || (!arg.empty() && arg.front() == '{'))
        return poly_from_json(load_json(arg));
    return parse_poly(arg, nvars);
}

int cmd_eval(unsigned nvars, const std::string& expr, const std::string& at) {
    SlicePoly p = load_poly(expr, nvars);
    Point a = point_from_json(load_json(at));
    std::cout << to_string(eval(p, a)) << "\n";
    return 0;
}

int cmd_mul(unsigned nvars, const std::string& lhs, const std::string& rhs, bool as_json) {
    SlicePoly r = star_mul(load_poly(lhs, nvars), load_poly(rhs, nvars));
    if (as_json) std::cout << to_json(r).dump(2) << "\n";
    else std::cout << to_string(r) << "\n";
    return 0;
}

int cmd_divmod(unsigned nvars, const std::string& pe, const std::string& me, unsigned var) {
    SlicePoly p = load_poly(pe, nvars);
    SlicePoly m = load_poly(me, nvars);
    auto [q, r] = div_monic(p, m, var);
    std::cout << "quotient:  " << to_string(q) << "\n";
    std::cout << "remainder: " << to_string(r) << "\n";
    return 0;
}

int report_vanish(const VanishResult& res) {
    std::cout << to_json(res).dump(2) << "\n";
    return res.vanishes() ? 0 : kExitNegative;
}

int cmd_decompose(unsigned nvars, const std::string& pe, const std::string& at) {
    SlicePoly p = load_poly(pe, nvars);
    return report_vanish(decompose_at_point(p, point_from_json(load_json(at))));
}

struct MemberArgs {
    std::string poly;
    std::string point, slab, spheres, sphere_point, arranged, balloon;
};

int cmd_member(unsigned nvars, const MemberArgs& a) {
    SlicePoly p = load_poly(a.poly, nvars);
    if (!a.point.empty())
        return report_vanish(decompose_at_point(p, point_from_json(load_json(a.point))));
    if (!a.slab.empty()) {
        json j = load_json(a.slab);
        return report_vanish(
            factor_slab(p, quaternion_from_json(j.at("a")), j.at("m").get<unsigned>()));
    }
    if (!a.spheres.empty()) {
        std::vector<SphereDescriptor> sp;
        for (const auto& s : load_json(a.spheres)) sp.push_back(sphere_from_json(s));
        return report_vanish(vanishes_on_sphere_product(p, sp));
    }
    if (!a.sphere_point.empty()) {
        json j = load_json(a.sphere_point);
        std::vector<SphereDescriptor> sp;
        for (const auto& s : j.at("spheres")) sp.push_back(sphere_from_json(s));
        std::vector<Quaternion> tail;
        for (const auto& q : j.at("tail")) tail.push_back(quaternion_from_json(q));
        return report_vanish(vanishes_on_sphere_point_set(p, sp, tail));
    }
    if (!a.arranged.empty())
        return report_vanish(vanishes_on_arranged_sphere(p, point_from_json(load_json(a.arranged))));
    if (!a.balloon.empty())
        return report_vanish(vanishes_on_balloon(p, balloon_from_json(load_json(a.balloon))));
    std::cerr << "member: one of --point/--slab/--spheres/--sphere-point/--arranged/--balloon "
                 "is required\n";
    return kExitUsage;
}

int cmd_enlarge(const std::string& ideal_arg, const std::string& at) {
    RightIdeal ideal = ideal_from_json(load_json(ideal_arg));
    Point p = point_from_json(load_json(at));
    EnlargementReport rep = enlarge_zero(ideal, p);
    std::cout << to_json(rep).dump(2) << "\n";
    if (rep.t > 0 && rep.verified.empty()) return kExitNegative;
    return 0;
}

int cmd_slice(const std::string& set_arg, const std::string& frame_arg) {
    SliceAlgebraicSet s = set_from_json(load_json(set_arg));
    SliceFrame fr = frame_from_json(load_json(frame_arg));
    std::cout << to_json(slice(s, fr)).dump(2) << "\n";
    return 0;
}

int cmd_repform(unsigned nvars, const std::string& pe, const std::string& j_arg,
                const std::string& k_arg, const std::string& at) {
    SlicePoly p = load_poly(pe, nvars);
    Quaternion ju = quaternion_from_json(load_json(j_arg));
    Quaternion ku = quaternion_from_json(load_json(k_arg));
    Point z = point_from_json(load_json(at));
    std::cout << to_string(represent(p, ju, ku, z)) << "\n";
    return 0;
}

int cmd_selftest(std::uint64_t seed, bool quick) {
    auto scale = quick ? checks::quick_scale() : checks::desk_scale();
    std::cout << "seed: " << seed << "\n";
    int failures = checks::run_suite(seed, scale, std::cout);
    if (failures > 0) {
        std::cout << failures << " check(s) failed\n";
        return kExitNegative;
    }
    std::cout << "all checks passed\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computer algebra for slice regular quaternionic polynomials"};
    app.require_subcommand(1);

    unsigned nvars = 1;
    std::string poly_arg, rhs_arg, at_arg, by_arg, jj_arg, kk_arg, ideal_arg, set_arg, frame_arg;
    unsigned var = 1;
    bool as_json = false;
    MemberArgs member_args;
    std::uint64_t seed = 0;
    bool seed_given = false, quick = false;

    auto* eval_cmd = app.add_subcommand("eval", "evaluate a polynomial at a point");
    eval_cmd->add_option("-n,--nvars", nvars, "number of variables")->required();
    eval_cmd->add_option("poly", poly_arg, "polynomial (expression or JSON)")->required();
    eval_cmd->add_option("--at", at_arg, "point as JSON")->required();

    auto* mul_cmd = app.add_subcommand("mul", "star product of two polynomials");
    mul_cmd->add_option("-n,--nvars", nvars)->required();
    mul_cmd->add_option("lhs", poly_arg)->required();
    mul_cmd->add_option("rhs", rhs_arg)->required();
    mul_cmd->add_flag("--json", as_json, "print the product as JSON");

    auto* divmod_cmd = app.add_subcommand("divmod", "divide by a monic polynomial");
    divmod_cmd->add_option("-n,--nvars", nvars)->required();
    divmod_cmd->add_option("poly", poly_arg)->required();
    divmod_cmd->add_option("--by", by_arg, "monic divisor")->required();
    divmod_cmd->add_option("-m,--var", var, "variable the divisor is monic in")->required();

    auto* dec_cmd = app.add_subcommand("decompose", "decompose against a zero point");
    dec_cmd->add_option("-n,--nvars", nvars)->required();
    dec_cmd->add_option("poly", poly_arg)->required();
    dec_cmd->add_option("--at", at_arg, "point as JSON")->required();

    auto* member_cmd = app.add_subcommand("member", "decide vanishing on a structured set");
    member_cmd->add_option("-n,--nvars", nvars)->required();
    member_cmd->add_option("poly", member_args.poly)->required();
    member_cmd->add_option("--point", member_args.point, "single point JSON");
    member_cmd->add_option("--slab", member_args.slab, R"({"a": quaternion, "m": index})");
    member_cmd->add_option("--spheres", member_args.spheres, "array of sphere descriptors");
    member_cmd->add_option("--sphere-point", member_args.sphere_point,
                           R"({"spheres": [...], "tail": [...]})");
    member_cmd->add_option("--arranged", member_args.arranged, "arranged base point JSON");
    member_cmd->add_option("--balloon", member_args.balloon, R"({"head": [...], "tail": [...]})");

    auto* enlarge_cmd = app.add_subcommand("enlarge", "enlarge a common zero of a right ideal");
    enlarge_cmd->add_option("ideal", ideal_arg, "right ideal JSON")->required();
    enlarge_cmd->add_option("--at", at_arg, "common zero as JSON")->required();

    auto* slice_cmd = app.add_subcommand("slice", "slice a set descriptor on C_K");
    slice_cmd->add_option("set", set_arg, "set descriptor JSON")->required();
    slice_cmd->add_option("--frame", frame_arg, R"({"k": [...], "l": [...]})")->required();

    auto* rep_cmd = app.add_subcommand("repform", "evaluate via the representation formula");
    rep_cmd->add_option("-n,--nvars", nvars)->required();
    rep_cmd->add_option("poly", poly_arg)->required();
    rep_cmd->add_option("--j", jj_arg, "target imaginary unit JSON")->required();
    rep_cmd->add_option("--k", kk_arg, "slice imaginary unit JSON")->required();
    rep_cmd->add_option("--at", at_arg, "slice point JSON (shadow coordinates)")->required();

    auto* self_cmd = app.add_subcommand("selftest", "run the randomized property suite");
    auto* seed_opt = self_cmd->add_option("--seed", seed, "RNG seed (SLICEREG_SEED fallback)");
    self_cmd->add_flag("--quick", quick, "reduced instance counts");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    seed_given = seed_opt->count() > 0;

    try {
        if (*eval_cmd) return cmd_eval(nvars, poly_arg, at_arg);
        if (*mul_cmd) return cmd_mul(nvars, poly_arg, rhs_arg, as_json);
        if (*divmod_cmd) return cmd_divmod(nvars, poly_arg, by_arg, var);
        if (*dec_cmd) return cmd_decompose(nvars, poly_arg, at_arg);
        if (*member_cmd) return cmd_member(nvars, member_args);
        if (*enlarge_cmd) return cmd_enlarge(ideal_arg, at_arg);
        if (*slice_cmd) return cmd_slice(set_arg, frame_arg);
        if (*rep_cmd) return cmd_repform(nvars, poly_arg, jj_arg, kk_arg, at_arg);
        if (*self_cmd) {
            if (!seed_given) {
                if (const char* env = std::getenv("SLICEREG_SEED")) seed = std::strtoull(env, nullptr, 10);
            }
            return cmd_selftest(seed, quick);
        }
    } catch (const json::exception& e) {
        std::cerr << "bad JSON input: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
