// Command-line front end: exact polytopal valuation calculus.
//
// Subcommands read JSON from file arguments or stdin ("-") and write JSON
// (or CSV for pairing matrices) to stdout or --out. Exit codes: 0 success,
// 2 validation error, 3 cap violation, 1 internal invariant failure.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "valcalc/acceptance.hpp"
#include "valcalc/io.hpp"

using namespace valcalc;

namespace {

std::string read_input(const std::string& path) {
    if (path == "-" || path.empty()) {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    return read_file(path);
}

void write_output(const std::string& out_path, const std::string& payload) {
    if (out_path.empty()) {
        std::cout << payload;
        if (!payload.empty() && payload.back() != '\n') std::cout << "\n";
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw validation_error("cannot write file: " + out_path);
    out << payload;
}

Json parse_input(const std::string& path) {
    return parse_json_text(read_input(path), path.empty() || path == "-" ? "<stdin>" : path);
}

std::vector<Polytope> bodies_from(const Json& j, const char* key) {
    if (!j.contains(key)) throw validation_error(std::string("missing \"") + key + "\"");
    std::vector<Polytope> out;
    for (const auto& b : j.at(key)) out.push_back(polytope_from_json(b));
    return out;
}

ConstructibleFunction constructible_input(const Json& j) {
    // Plain polytopes are accepted as their closed indicator.
    if (j.contains("vertices")) return indicator(polytope_from_json(j));
    return constructible_from_json(j);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact valuation calculus on rational polytopes"};
    app.require_subcommand(1);

    std::string input_path = "-", out_path, format = "json", config_path;
    std::uint64_t seed_flag = 0;
    bool seed_set = false, serial = false;
    int intrinsic_k = -1;

    app.add_option("--config", config_path, "key=value config file (or $VALCALC_CONFIG)");
    app.add_option("--out", out_path, "write output to a file instead of stdout");
    app.add_option("--format", format, "json or csv (csv for pairing matrices only)")
        ->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--seed", seed_flag, "seed for randomized suites")
        ->each([&](const std::string&) { seed_set = true; });

    auto add_input = [&](CLI::App* cmd) {
        cmd->add_option("input", input_path, "input JSON file, or - for stdin");
    };

    auto* cmd_hull = app.add_subcommand("hull", "extreme points of a rational point set");
    add_input(cmd_hull);
    auto* cmd_volume = app.add_subcommand("volume", "exact volume of a polytope");
    add_input(cmd_volume);
    auto* cmd_minkpoly =
        app.add_subcommand("minkpoly", "weighted-volume polynomial of a Minkowski family");
    add_input(cmd_minkpoly);
    auto* cmd_mixed = app.add_subcommand("mixed-volume", "mixed volume of n bodies in R^n");
    add_input(cmd_mixed);
    auto* cmd_euler =
        app.add_subcommand("euler", "Euler integral of a constructible function");
    add_input(cmd_euler);
    auto* cmd_verdier =
        app.add_subcommand("verdier", "Verdier dual of a constructible function");
    add_input(cmd_verdier);
    auto* cmd_cc = app.add_subcommand("cc", "characteristic cycle of a constructible function");
    add_input(cmd_cc);
    auto* cmd_pair = app.add_subcommand("pair", "pairing matrix with exact rank");
    add_input(cmd_pair);
    auto* cmd_val_eval = app.add_subcommand("val-eval", "evaluate a valuation on a body");
    add_input(cmd_val_eval);
    auto* cmd_val_sigma =
        app.add_subcommand("val-sigma", "Euler-Verdier involution of a valuation");
    add_input(cmd_val_sigma);
    auto* cmd_val_product =
        app.add_subcommand("val-product", "product of valuations evaluated on a body");
    add_input(cmd_val_product);
    auto* cmd_val_decompose =
        app.add_subcommand("val-decompose", "homogeneous components evaluated on a body");
    add_input(cmd_val_decompose);
    auto* cmd_intrinsic = app.add_subcommand("intrinsic", "intrinsic volumes (floating point)");
    add_input(cmd_intrinsic);
    cmd_intrinsic->add_option("-k", intrinsic_k, "single degree; all of 0..n by default");
    auto* cmd_acceptance =
        app.add_subcommand("acceptance", "run the full acceptance battery and emit a report");
    cmd_acceptance->add_flag("--serial", serial, "run checks sequentially");

    try {
        app.parse(argc, argv);

        if (config_path.empty())
            if (const char* env = std::getenv("VALCALC_CONFIG")) config_path = env;
        if (!config_path.empty()) load_config_text(read_file(config_path), config());
        if (seed_set) config().seed = seed_flag;

        Json out;
        std::string payload;

        if (cmd_hull->parsed()) {
            Json in = parse_input(input_path);
            int dim = in.contains("dim") ? in.at("dim").get<int>() : 0;
            const char* key = in.contains("points") ? "points" : "vertices";
            if (!in.contains(key)) throw validation_error("hull input needs \"points\"");
            std::vector<Vec> pts;
            for (const auto& p : in.at(key)) pts.push_back(vec_from_json(p));
            if (dim == 0 && !pts.empty()) dim = static_cast<int>(pts[0].size());
            out = polytope_to_json(hull(pts, dim));
        } else if (cmd_volume->parsed()) {
            out["volume"] = scalar_to_string(volume(polytope_from_json(parse_input(input_path))));
        } else if (cmd_minkpoly->parsed()) {
            Json in = parse_input(input_path);
            auto bodies = bodies_from(in, "bodies");
            MultiPoly w = in.contains("weight") ? multipoly_from_json(in.at("weight"))
                                                : unit_weight(bodies.at(0).dim);
            out = multipoly_to_json(minkowski_polynomial(bodies, w));
        } else if (cmd_mixed->parsed()) {
            Json in = parse_input(input_path);
            out["mixed_volume"] = scalar_to_string(mixed_volume(bodies_from(in, "bodies")));
        } else if (cmd_euler->parsed()) {
            auto f = constructible_input(parse_input(input_path));
            out["euler_integral"] = scalar_to_string(euler_integral(f));
        } else if (cmd_verdier->parsed()) {
            out = constructible_to_json(verdier_dual(constructible_input(parse_input(input_path))));
        } else if (cmd_cc->parsed()) {
            out = chain_to_json(cc(constructible_input(parse_input(input_path))));
        } else if (cmd_pair->parsed()) {
            Json in = parse_input(input_path);
            std::string mode = in.value("mode", "evaluation");
            std::vector<ValuationExpr> rows;
            for (const auto& v : in.at("rows")) rows.push_back(valuation_from_json(v));
            std::vector<std::string> row_names =
                in.contains("row_labels") ? in.at("row_labels").get<std::vector<std::string>>()
                                          : std::vector<std::string>{};
            std::vector<std::string> col_names =
                in.contains("col_labels") ? in.at("col_labels").get<std::vector<std::string>>()
                                          : std::vector<std::string>{};
            PairingMatrix m;
            if (mode == "evaluation") {
                std::vector<ConstructibleFunction> cols;
                for (const auto& f : in.at("cols")) cols.push_back(constructible_input(f));
                m = evaluation_pairing_matrix(rows, cols, row_names, col_names);
            } else if (mode == "poincare") {
                std::vector<ValuationExpr> cols;
                for (const auto& v : in.at("cols")) cols.push_back(valuation_from_json(v));
                auto testset = in.contains("testset") ? bodies_from(in, "testset")
                                                      : suite_bodies(rows.at(0).dim);
                m = poincare_pairing_matrix(rows, cols, testset, row_names, col_names);
            } else {
                throw validation_error("pair mode must be \"evaluation\" or \"poincare\"");
            }
            if (format == "csv") {
                payload = pairing_to_csv(m);
            } else {
                out = pairing_to_json(m);
            }
        } else if (cmd_val_eval->parsed()) {
            Json in = parse_input(input_path);
            auto v = valuation_from_json(in.at("valuation"));
            auto k = polytope_from_json(in.at("body"));
            out["value"] = scalar_to_string(evaluate(v, k));
        } else if (cmd_val_sigma->parsed()) {
            out = valuation_to_json(sigma_reflect(valuation_from_json(parse_input(input_path))));
        } else if (cmd_val_product->parsed()) {
            Json in = parse_input(input_path);
            std::vector<ValuationExpr> factors;
            for (const auto& v : in.at("factors")) factors.push_back(valuation_from_json(v));
            auto k = polytope_from_json(in.at("body"));
            out["value"] = scalar_to_string(product_eval(factors, k));
        } else if (cmd_val_decompose->parsed()) {
            Json in = parse_input(input_path);
            auto v = valuation_from_json(in.at("valuation"));
            auto k = polytope_from_json(in.at("body"));
            Json comps = Json::array();
            for (int deg = 0; deg <= v.dim; ++deg)
                comps.push_back(Json::array(
                    {deg, scalar_to_string(component_eval(homogeneous_component(v, deg), k))}));
            out["components"] = std::move(comps);
        } else if (cmd_intrinsic->parsed()) {
            Json in = parse_input(input_path);
            auto p = polytope_from_json(in.contains("body") ? in.at("body") : in);
            if (intrinsic_k >= 0) {
                out["k"] = intrinsic_k;
                out["intrinsic_volume"] = intrinsic_volume(p, intrinsic_k);
            } else {
                Json vals = Json::array();
                for (int k = 0; k <= p.dim; ++k) vals.push_back(intrinsic_volume(p, k));
                out["intrinsic_volumes"] = std::move(vals);
            }
        } else if (cmd_acceptance->parsed()) {
            RunReport report = acceptance_run(config().seed, !serial);
            out = report_to_json(report);
            payload = out.dump(2);
            write_output(out_path, payload);
            for (const auto& c : report.checks)
                std::cerr << c.id << " " << (c.pass ? "PASS" : "FAIL") << " (" << c.runtime_ms
                          << " ms): " << c.description << "\n";
            bool all = true;
            for (const auto& c : report.checks) all = all && c.pass;
            return all ? 0 : 1;
        }

        if (payload.empty()) payload = out.dump(2);
        write_output(out_path, payload);
        return 0;
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const cap_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const validation_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const internal_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
