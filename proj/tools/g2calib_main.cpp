#include "g2calib/commands.hpp"
#include "g2calib/errors.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

using g2calib::Json;

Json load_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw g2calib::ParseError("cannot open input file '" + path + "'");
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw g2calib::ParseError(std::string("invalid JSON: ") + e.what());
    }
    return j;
}

void emit(const g2calib::RunReport& report, bool pretty) {
    if (pretty)
        std::cout << report.to_json().dump(2) << "\n";
    else
        std::cout << report.to_json().dump() << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"G2 calibrated-geometry toolkit: pointwise octonion algebra, boundary "
                 "symbol checks, index bookkeeping, discrete Chern numbers and flat "
                 "orbifold censuses"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand

    std::uint64_t seed = 0;
    long trials = 10000;
    int grid = 0; // 0 = per-command default (360 covector angles, 32 search lattice)
    double tol = 1e-9;
    std::string input_path;
    bool pretty = false;
    bool json_flag = false;
    app.add_flag("--json", json_flag, "single-line JSON output (the default)");
    app.add_flag("--pretty", pretty, "indent the JSON report");
    app.add_option("--seed", seed, "random seed for property suites");
    app.add_option("--trials", trials, "number of random trials");
    app.add_option("--grid", grid, "covector/search grid resolution");
    app.add_option("--tol", tol, "numerical tolerance");
    app.add_option("--input", input_path, "input JSON file");

    auto* verify = app.add_subcommand("verify-identities", "seeded random identity suite");
    auto* classify = app.add_subcommand("classify-plane", "calibration classification of a plane");
    auto* split = app.add_subcommand("boundary-split", "boundary normal-plane splitting");
    auto* index = app.add_subcommand("index", "index formula over boundary components");
    auto* ebc = app.add_subcommand("ebc-check", "boundary-symbol full-rank sweep");
    auto* chern = app.add_subcommand("chern", "discrete first Chern number of a sampled bundle");
    auto* maslov = app.add_subcommand("maslov", "Z2 class of a sphere-sampled bundle");
    auto* fixed = app.add_subcommand("fixed-loci", "fixed locus of a diagonal affine torus map");
    auto* census = app.add_subcommand("census", "orbit census of subtori under a finite group");
    auto* examples = app.add_subcommand("paper-examples",
                                        "recompute the bundled example constructions");

    CLI11_PARSE(app, argc, argv);

    auto need_input = [&]() {
        if (input_path.empty()) throw g2calib::ParseError("missing --input FILE");
        return load_input(input_path);
    };

    try {
        g2calib::CommandOutcome out;
        if (verify->parsed())
            out = g2calib::cmd_verify_identities(seed, trials);
        else if (classify->parsed())
            out = g2calib::cmd_classify_plane(need_input(), grid > 0 ? grid : 32);
        else if (split->parsed())
            out = g2calib::cmd_boundary_split(need_input(), tol);
        else if (index->parsed())
            out = g2calib::cmd_index(need_input());
        else if (ebc->parsed())
            out = g2calib::cmd_ebc_check(grid > 0 ? grid : 360);
        else if (chern->parsed())
            out = g2calib::cmd_chern(need_input(), tol < 1 ? std::max(tol, 1e-12) : 1e-6);
        else if (maslov->parsed())
            out = g2calib::cmd_maslov(need_input());
        else if (fixed->parsed())
            out = g2calib::cmd_fixed_loci(need_input());
        else if (census->parsed())
            out = g2calib::cmd_census(need_input());
        else if (examples->parsed())
            out = g2calib::cmd_paper_examples();
        emit(out.report, pretty);
        return out.exit_code;
    } catch (const g2calib::ParseError& e) {
        std::cout << Json{{"error", e.what()}, {"kind", "parse"}}.dump() << "\n";
        return 2;
    } catch (const g2calib::PreconditionError& e) {
        std::cout << Json{{"error", e.what()}, {"kind", "precondition"}}.dump() << "\n";
        return 3;
    } catch (const g2calib::InvariantViolation& e) {
        std::cout << Json{{"error", e.what()}, {"kind", "invariant"}}.dump() << "\n";
        return 3;
    }
}
