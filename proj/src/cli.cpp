#include "stunted/cli.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "stunted/endo.hpp"
#include "stunted/orientation.hpp"
#include "stunted/report.hpp"
#include "stunted/splitting.hpp"

namespace stunted::cli {

namespace {

using nlohmann::json;

json to_json(const SplittingReport& rep) {
    json j;
    j["p"] = rep.params.p;
    j["k"] = rep.params.k;
    j["c"] = rep.c;
    j["top"] = rep.top;
    j["jordan"] = rep.jordan.blocks;
    j["free_rank"] = rep.free_rank();
    j["free_generator_degrees"] = rep.free_generator_degrees;
    j["free_socle_degrees"] = rep.free_socle_degrees;
    j["finite_socle_degrees"] = rep.finite_socle_degrees;
    j["finite_block_sizes"] = rep.finite_block_sizes;
    j["boundary_block_sizes"] = rep.boundary_block_sizes;
    j["stable_top_index"] = rep.stable_top_index;
    json blocks = json::array();
    for (const auto& blk : rep.blocks)
        blocks.push_back({{"indices", blk.indices}, {"boundary", blk.boundary}});
    j["blocks"] = blocks;
    return j;
}

json to_json(const TValuation& v) {
    if (v.infinite)
        return json{{"infinite", true}};
    return json{{"num", v.num}, {"den", v.den}};
}

json to_json(const TkLemmaReport& rep) {
    json j;
    j["p"] = rep.p;
    j["k"] = rep.k;
    j["n"] = rep.n;
    j["precision"] = rep.t_precision;
    j["v_zeta_minus_1"] = to_json(rep.v_zeta_minus_1);
    j["tbar_digits"] = rep.tbar_digits;
    j["zeta_has_order_p"] = rep.zeta_has_order_p;
    j["digits_below_k_vanish"] = rep.digits_below_k_vanish;
    j["digit_k_is_unit"] = rep.digit_k_is_unit;
    j["valuation_is_k_over_n"] = rep.valuation_is_k_over_n;
    return j;
}

json to_json(const KnownOrdersReport& rep) {
    json j;
    j["p"] = rep.p;
    j["k"] = rep.k;
    j["bound_valuation"] = rep.bound_valuation;
    j["bound_order"] = power_decimal(rep.p, rep.bound_valuation);
    j["conjecture_valuation"] = rep.conjecture_valuation;
    j["conjecture_order"] = power_decimal(rep.p, rep.conjecture_valuation);
    if (rep.known_valuation) {
        j["known_valuation"] = *rep.known_valuation;
        j["known_order"] = power_decimal(rep.p, *rep.known_valuation);
        j["known_provenance"] = rep.known_provenance;
    }
    j["divisibility_ok"] = rep.divisibility_ok;
    if (rep.override_n) {
        j["override_n"] = *rep.override_n;
        j["override_sphere_valuation"] = *rep.override_sphere_valuation;
    }
    return j;
}

bool ko_degrees_match(const std::vector<long long>& degrees) {
    for (std::size_t j = 0; j < degrees.size(); ++j)
        if (degrees[j] != 4 * static_cast<long long>(j + 1) - 2)
            return false;
    return true;
}

struct GridPoint {
    std::uint32_t p = 2, k = 1;
    long long c = 0, top = 40;
};

// The per-point verification battery; failures are isolated into verdicts.
void run_battery(const GridPoint& pt, Report& rep, const std::string& tag) {
    auto guarded = [&](const std::string& claim, const std::string& ref, auto&& fn) {
        try {
            rep.add(tag + claim, ref, fn());
        } catch (const std::exception& e) {
            rep.add(tag + claim + " [" + e.what() + "]", ref, false);
        }
    };

    guarded("decomposition dimension count", "free-finite module decomposition", [&] {
        PkParams params(pt.p, pt.k);
        auto d = decompose_stunted(params, pt.c, pt.top);
        long long total = 0;
        for (const auto& blk : d.blocks)
            total += blk.size();
        return d.jordan.dimension() == pt.top - pt.c + 1 && total == pt.top - pt.c + 1;
    });
    guarded("predicted free generators generate free blocks", "free generator set", [&] {
        return verify_free_generators(PkParams(pt.p, pt.k), pt.c, pt.top);
    });
    guarded("finite part within skeleton", "skeletal support of the finite part", [&] {
        return finite_part_support(PkParams(pt.p, pt.k), pt.c, pt.top).within_skeleton;
    });
    guarded("Thom shift linear for c = p", "Thom shift linearity", [&] {
        return thom_shift_linearity(PkParams(pt.p, pt.k), pt.p, pt.top);
    });
    guarded("Thom shift fails for c = 1", "Thom shift linearity", [&] {
        return !thom_shift_linearity(PkParams(pt.p, pt.k), 1, pt.top);
    });
    guarded("transition map hits free socles", "transition surjectivity", [&] {
        return tate_transition_surjective(PkParams(pt.p, pt.k), pt.c, pt.top);
    });
    guarded("sphere valuation equals p^k - 1", "orientation bound identity", [&] {
        auto bound = eo_bound(pt.p, pt.k);
        return bound.sphere_valuation == bound.bound_valuation;
    });
    guarded("order divisibility chain", "order comparison table", [&] {
        return known_orders_report(pt.p, pt.k).divisibility_ok;
    });
    guarded("coproduct primitivity", "group-ring coproduct expansion", [&] {
        return coproduct_chi_check(pt.p).pass();
    });
    if (pt.p == 2 && pt.k == 1)
        guarded("free block bottom degrees follow 4j - 2", "first-height splitting pattern",
                [&] { return ko_degrees_match(ko_pattern(pt.top)); });
    const std::uint32_t n = pt.k * (pt.p - 1);
    double q = std::pow(double(pt.p), double(n));
    if (q <= 200000.0) {
        guarded("order-p unit digit valuation", "unit digit valuation", [&] {
            return verify_tk_lemma(pt.p, pt.k, std::max(3 * n, pt.k + 2)).pass();
        });
    }
}

std::vector<GridPoint> load_grid(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("sweep: cannot open grid file " + path);
    json j = json::parse(in);
    const json& arr = j.is_array() ? j : j.at("points");
    std::vector<GridPoint> points;
    for (const auto& e : arr) {
        GridPoint pt;
        pt.p = e.at("p").get<std::uint32_t>();
        pt.k = e.at("k").get<std::uint32_t>();
        if (e.contains("c"))
            pt.c = e["c"].get<long long>();
        if (e.contains("top"))
            pt.top = e["top"].get<long long>();
        else
            pt.top = std::max<long long>(40, 6 * beta_constants(pt.p, pt.k).beta_hat);
        points.push_back(pt);
    }
    return points;
}

std::vector<GridPoint> default_grid() {
    std::vector<GridPoint> pts;
    for (auto [p, k] : {std::pair<std::uint32_t, std::uint32_t>{2, 1}, {2, 2}, {3, 1}}) {
        GridPoint pt;
        pt.p = p;
        pt.k = k;
        pt.c = 0;
        pt.top = std::max<long long>(40, 6 * beta_constants(p, k).beta_hat);
        pts.push_back(pt);
    }
    return pts;
}

std::string point_tag(const GridPoint& pt) {
    return "(p=" + std::to_string(pt.p) + ",k=" + std::to_string(pt.k) +
           ",c=" + std::to_string(pt.c) + ",top=" + std::to_string(pt.top) + ") ";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact-algebra toolkit for stunted projective spaces: Jordan "
                 "decompositions of the P_k action, orientation-order valuations, and "
                 "truncated arithmetic in the endomorphism ring of a height-n formal "
                 "group."};
    app.name("stunted");
    app.require_subcommand(1);
    app.fallthrough();

    bool json_out = false;
    app.add_flag("--json", json_out, "emit a machine-readable JSON report");

    long long p = 2, k = 1, c = 0, top = 40, stage = 0, n = 1, precision = 8;
    std::string grid_file;

    auto add_pk = [&](CLI::App* cmd) {
        cmd->add_option("--p", p, "prime")->required()->check(CLI::Range(2LL, 1000003LL));
        cmd->add_option("--k", k, "positive integer k")
            ->required()
            ->check(CLI::Range(1LL, 62LL));
    };

    auto* cmd_decompose = app.add_subcommand("decompose", "free/finite block decomposition");
    add_pk(cmd_decompose);
    cmd_decompose->add_option("--c,--bot", c, "bottom cell")->required();
    cmd_decompose->add_option("--top", top, "top cell")->required();

    auto* cmd_free = app.add_subcommand("free-gens", "check the predicted free generators");
    add_pk(cmd_free);
    cmd_free->add_option("--c,--bot", c, "bottom cell")->required();
    cmd_free->add_option("--top", top, "top cell")->required();

    auto* cmd_finite = app.add_subcommand("finite-support",
                                          "skeletal support of the finite part (p | c)");
    add_pk(cmd_finite);
    cmd_finite->add_option("--c,--bot", c, "bottom cell, divisible by p")->required();
    cmd_finite->add_option("--top", top, "top cell")->required();

    auto* cmd_thom = app.add_subcommand("thom-linear", "degree-shift linearity check");
    add_pk(cmd_thom);
    cmd_thom->add_option("--c,--bot", c, "shift")->required();
    cmd_thom->add_option("--top", top, "top cell")->required();

    auto* cmd_tate = app.add_subcommand("tate-check", "transition surjectivity check");
    add_pk(cmd_tate);
    cmd_tate->add_option("--stage", stage, "source bottom cell")->required();
    cmd_tate->add_option("--top", top, "top cell")->required();

    auto* cmd_ko = app.add_subcommand("ko-pattern", "free-block degrees at (p,k) = (2,1)");
    cmd_ko->add_option("--top", top, "top cell")->required();

    auto* cmd_orient = app.add_subcommand("orient-order",
                                          "sphere orientation-order valuation over CP^n");
    cmd_orient->add_option("--p", p, "prime")->required();
    cmd_orient->add_option("--n", n, "projective space dimension")->required();

    auto* cmd_bound = app.add_subcommand("bound", "orientation-order bound p^(p^k - 1)");
    add_pk(cmd_bound);

    std::optional<long long> n_override;
    auto* cmd_known = app.add_subcommand("known-orders", "bound / known / conjecture table");
    add_pk(cmd_known);
    cmd_known->add_option("--n", n_override, "also evaluate the sphere valuation at n");

    auto* cmd_unit = app.add_subcommand("order-p-element",
                                        "find zeta with zeta^p = 1 to T-precision");
    add_pk(cmd_unit);
    cmd_unit->add_option("--precision", precision, "T-adic truncation order")
        ->check(CLI::Range(1LL, 200LL));

    auto* cmd_tk = app.add_subcommand("verify-tk", "digit valuation of zeta - 1");
    add_pk(cmd_tk);
    cmd_tk->add_option("--precision", precision, "T-adic truncation order")
        ->check(CLI::Range(1LL, 200LL));

    auto* cmd_sweep = app.add_subcommand("sweep", "verification battery over a grid");
    cmd_sweep->add_option("--grid", grid_file, "JSON grid file");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return 0;
        }
        err << e.what() << "\n\n" << app.help();
        return 2;
    }

    Report rep;
    auto started = std::chrono::steady_clock::now();
    try {
        if (app.got_subcommand(cmd_decompose)) {
            rep.command = "decompose";
            rep.inputs = {{"p", p}, {"k", k}, {"c", c}, {"top", top}};
            PkParams params(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(k));
            auto d = decompose_stunted(params, c, top);
            rep.results = to_json(d);
            long long total = 0;
            for (const auto& blk : d.blocks)
                total += blk.size();
            rep.add("block sizes sum to the window dimension",
                    "free-finite module decomposition", total == top - c + 1);
        } else if (app.got_subcommand(cmd_free)) {
            rep.command = "free-gens";
            rep.inputs = {{"p", p}, {"k", k}, {"c", c}, {"top", top}};
            PkParams params(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(k));
            bool ok = verify_free_generators(params, c, top);
            rep.results = {{"verified", ok}};
            rep.add("predicted free generators generate free blocks", "free generator set",
                    ok);
        } else if (app.got_subcommand(cmd_finite)) {
            rep.command = "finite-support";
            rep.inputs = {{"p", p}, {"k", k}, {"c", c}, {"top", top}};
            PkParams params(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(k));
            auto fs = finite_part_support(params, c, top);
            rep.results = {{"max_degree", fs.max_degree},
                           {"finite_part_empty", fs.finite_part_empty},
                           {"skeleton_degree", fs.skeleton_degree},
                           {"skeleton_degree_alt", fs.skeleton_degree_alt},
                           {"within_skeleton", fs.within_skeleton},
                           {"within_skeleton_alt", fs.within_skeleton_alt}};
            rep.add("finite part within skeleton", "skeletal support of the finite part",
                    fs.within_skeleton);
        } else if (app.got_subcommand(cmd_thom)) {
            rep.command = "thom-linear";
            rep.inputs = {{"p", p}, {"k", k}, {"c", c}, {"top", top}};
            PkParams params(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(k));
            bool linear = thom_shift_linearity(params, c, top);
            bool expected = mod_ll(c, static_cast<std::uint32_t>(p)) == 0;
            rep.results = {{"linear", linear}, {"c_divisible_by_p", expected}};
            rep.add("shift is linear exactly when p | c", "Thom shift linearity",
                    linear == expected);
        } else if (app.got_subcommand(cmd_tate)) {
            rep.command = "tate-check";
            rep.inputs = {{"p", p}, {"k", k}, {"stage", stage}, {"top", top}};
            PkParams params(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(k));
            bool ok = tate_transition_surjective(params, stage, top);
            rep.results = {{"surjective", ok}};
            rep.add("transition map hits free socles", "transition surjectivity", ok);
        } else if (app.got_subcommand(cmd_ko)) {
            rep.command = "ko-pattern";
            rep.inputs = {{"top", top}};
            auto degrees = ko_pattern(top);
            auto d = decompose_stunted(PkParams(2, 1), 0, top);
            rep.results = {{"free_block_bottom_degrees", degrees},
                           {"finite_socle_degrees", d.finite_socle_degrees}};
            rep.add("free block bottom degrees follow 4j - 2",
                    "first-height splitting pattern", ko_degrees_match(degrees));
            rep.add("single finite summand in degree 0", "first-height splitting pattern",
                    d.finite_socle_degrees == std::vector<long long>{0});
        } else if (app.got_subcommand(cmd_orient)) {
            rep.command = "orient-order";
            rep.inputs = {{"p", p}, {"n", n}};
            long long v = theta_sphere_valuation(static_cast<std::uint32_t>(p), n);
            rep.results = {{"sphere_valuation", v},
                           {"sphere_order", power_decimal(static_cast<std::uint32_t>(p), v)}};
        } else if (app.got_subcommand(cmd_bound)) {
            rep.command = "bound";
            rep.inputs = {{"p", p}, {"k", k}};
            auto bound = eo_bound(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(k));
            rep.results = {{"n", bound.n},
                           {"sphere_valuation", bound.sphere_valuation},
                           {"bound_valuation", bound.bound_valuation},
                           {"bound_order_exponent", bound.bound_order_exponent},
                           {"bound_order",
                            power_decimal(bound.p, bound.bound_order_exponent)},
                           {"conjecture_valuation", bound.conjecture_valuation}};
            if (bound.known_valuation)
                rep.results["known_valuation"] = *bound.known_valuation;
            rep.add("sphere valuation equals p^k - 1", "orientation bound identity",
                    bound.sphere_valuation == bound.bound_valuation);
            rep.add("conjectured order divides the bound", "order comparison table",
                    bound.conjecture_valuation <= bound.bound_valuation);
        } else if (app.got_subcommand(cmd_known)) {
            rep.command = "known-orders";
            rep.inputs = {{"p", p}, {"k", k}};
            if (n_override)
                rep.inputs["n"] = *n_override;
            auto tbl = known_orders_report(static_cast<std::uint32_t>(p),
                                           static_cast<std::uint32_t>(k), n_override);
            rep.results = to_json(tbl);
            rep.add("order divisibility chain", "order comparison table",
                    tbl.divisibility_ok);
        } else if (app.got_subcommand(cmd_unit)) {
            rep.command = "order-p-element";
            rep.inputs = {{"p", p}, {"k", k}, {"precision", precision}};
            auto zeta = find_order_p_unit(static_cast<std::uint32_t>(p),
                                          static_cast<std::uint32_t>(k),
                                          static_cast<std::uint32_t>(precision));
            bool order_p = endo_pow(zeta, static_cast<std::uint32_t>(p)) ==
                               zeta.ring().one() &&
                           !(zeta == zeta.ring().one());
            rep.results = {{"digits", zeta.digits()},
                           {"v_zeta_minus_1",
                            to_json(t_valuation(endo_sub(zeta, zeta.ring().one())))}};
            rep.add("zeta^p = 1 to precision and zeta != 1", "unit digit valuation",
                    order_p);
        } else if (app.got_subcommand(cmd_tk)) {
            rep.command = "verify-tk";
            rep.inputs = {{"p", p}, {"k", k}, {"precision", precision}};
            auto tk = verify_tk_lemma(static_cast<std::uint32_t>(p),
                                      static_cast<std::uint32_t>(k),
                                      static_cast<std::uint32_t>(precision));
            rep.results = to_json(tk);
            rep.add("zeta has order p to precision", "unit digit valuation",
                    tk.zeta_has_order_p);
            rep.add("digits below k vanish", "unit digit valuation",
                    tk.digits_below_k_vanish);
            rep.add("digit k is a unit", "unit digit valuation", tk.digit_k_is_unit);
            rep.add("v(zeta - 1) = k/n", "unit digit valuation", tk.valuation_is_k_over_n);
        } else if (app.got_subcommand(cmd_sweep)) {
            rep.command = "sweep";
            std::vector<GridPoint> points;
            if (grid_file.empty()) {
                points = default_grid();
            } else {
                try {
                    points = load_grid(grid_file);
                } catch (const nlohmann::json::exception& e) {
                    throw std::invalid_argument(std::string("sweep: malformed grid file: ") +
                                                e.what());
                }
            }
            rep.inputs = {{"points", points.size()}};
            if (!grid_file.empty())
                rep.inputs["grid"] = grid_file;
            std::vector<Report> partial(points.size());
#pragma omp parallel for schedule(dynamic)
            for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(points.size());
                 ++i)
                run_battery(points[i], partial[i], point_tag(points[i]));
            json results = json::array();
            for (std::size_t i = 0; i < points.size(); ++i) {
                for (const auto& v : partial[i].verdicts)
                    rep.verdicts.push_back(v);
                results.push_back({{"p", points[i].p},
                                   {"k", points[i].k},
                                   {"c", points[i].c},
                                   {"top", points[i].top}});
            }
            rep.results = {{"grid", results}};
        }
    } catch (const internal_error& e) {
        err << "internal assertion: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        err << "invalid parameter: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
    auto finished = std::chrono::steady_clock::now();
    rep.elapsed_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(finished - started).count();

    if (json_out)
        out << rep.to_json().dump(2) << "\n";
    else
        out << rep.to_text();
    return rep.all_pass() ? 0 : 1;
}

}  // namespace stunted::cli
