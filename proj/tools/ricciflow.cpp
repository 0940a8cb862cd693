// Command-line front end: catalog listing, fixed-point search, flow
// integration, and the reproduction harness.
//
// Exit codes: 0 success, 1 usage error, 2 domain error, 3 reproduction failure.

#include "ricci/flowfield.hpp"
#include "ricci/integrate.hpp"
#include "ricci/reproduce.hpp"
#include "ricci/rootfind.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>

namespace {

/// All numeric output is emitted at nine significant digits.
void round_floats(nlohmann::json& j)
{
    if (j.is_object() || j.is_array()) {
        for (auto& item : j) round_floats(item);
    } else if (j.is_number_float()) {
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.9g", j.get<double>());
        j = std::stod(buf);
    }
}

std::ostream* open_output(const std::string& path, std::ofstream& file)
{
    if (path.empty()) return &std::cout;
    file.open(path);
    if (!file) throw ricci::Error("cannot open output file '" + path + "'");
    return &file;
}

std::vector<double> parse_vector(const std::string& text)
{
    std::vector<double> out;
    std::string item;
    std::istringstream is(text);
    while (std::getline(is, item, ',')) out.push_back(std::stod(item));
    return out;
}

int cmd_list(const std::string& out_path, const std::string& format)
{
    std::ofstream file;
    std::ostream& os = *open_output(out_path, file);
    const auto rows = ricci::catalog_rows();
    if (format == "json") {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& row : rows)
            j.push_back({{"space", row.key}, {"description", row.description},
                         {"dims", row.dims}, {"constants", row.constants}});
        os << j.dump(2) << "\n";
    } else {
        for (const auto& row : rows)
            os << row.key << "\t" << row.description << "\tdims: " << row.dims
               << "\t" << row.constants << "\n";
    }
    return 0;
}

int cmd_einstein(const std::string& space, double box_lo, double box_hi, int grid, double tol,
                 const std::string& out_path, const std::string& format)
{
    const ricci::SpaceSpec spec = ricci::SpaceSpec::parse(space);
    ricci::SearchOptions opts;
    opts.box_lo = box_lo;
    opts.box_hi = box_hi;
    opts.grid = grid;
    opts.tol = tol;
    const auto fps = ricci::find_fixed_points(spec, opts);
    const auto report = ricci::match_known(spec, fps);

    std::ofstream file;
    std::ostream& os = *open_output(out_path, file);
    if (format == "csv") {
        os << "space,z,residual,einstein_constant,einstein_residual\n";
        os << std::setprecision(9);
        for (const auto& fp : fps) {
            os << spec.canonical() << ",\"";
            for (std::size_t i = 0; i < fp.z.size(); ++i) os << (i ? ";" : "") << fp.z[i];
            os << "\"," << fp.residual << ',' << fp.einstein_constant << ',' << fp.einstein_residual << "\n";
        }
    } else {
        nlohmann::json j;
        j["space"] = spec.canonical();
        j["fixed_points"] = nlohmann::json::array();
        for (const auto& fp : fps) {
            nlohmann::json jf;
            ricci::to_json(jf, fp);
            j["fixed_points"].push_back(std::move(jf));
        }
        nlohmann::json jm;
        ricci::to_json(jm, report);
        j["match_report"] = std::move(jm);
        round_floats(j);
        os << j.dump(2) << "\n";
    }
    return 0;
}

int cmd_flow(const std::string& space, const std::string& x0_text, double t_end, double rtol,
             const std::string& out_path)
{
    const ricci::SpaceSpec spec = ricci::SpaceSpec::parse(space);
    const ricci::IsotropyData iso = ricci::catalog_lookup(spec);
    ricci::Metric x0(static_cast<std::size_t>(iso.q), 1.0);
    if (!x0_text.empty()) x0 = parse_vector(x0_text);

    ricci::Trajectory traj = ricci::integrate_flow(spec, x0, t_end, rtol);
    ricci::label_terminal(traj, ricci::find_fixed_points(spec));

    std::ofstream file;
    std::ostream& os = *open_output(out_path, file);
    ricci::write_trajectory_csv(os, traj);
    return 0;
}

int cmd_reproduce(bool run_all, const std::string& claim, const std::string& out_path)
{
    std::vector<ricci::ClaimResult> results;
    if (run_all)
        results = ricci::run_all_claims();
    else
        results.push_back(ricci::run_claim(claim));

    std::ofstream file;
    std::ostream& os = *open_output(out_path, file);
    nlohmann::json j = nlohmann::json::array();
    bool pass = true;
    for (const auto& r : results) {
        nlohmann::json jr;
        ricci::to_json(jr, r);
        j.push_back(std::move(jr));
        pass = pass && r.pass;
    }
    os << j.dump(2) << "\n";
    return pass ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"normalized Ricci flow toolkit: fixed points at infinity and Einstein metrics"};
    app.require_subcommand(1);

    std::string out_path, format = "json";

    auto* list = app.add_subcommand("list", "print the catalog of supported spaces");
    list->add_option("--out", out_path, "output path (default: stdout)");
    list->add_option("--format", format, "json|csv")->check(CLI::IsMember({"json", "csv", "text"}));

    std::string space;
    double box_lo = 1e-3, box_hi = 10.0, tol = 1e-12;
    int grid = 8;
    auto* einstein = app.add_subcommand("einstein", "find the singularities at infinity");
    einstein->add_option("space,--space", space, "space, e.g. gws7 or stiefel:k2=4,k3=2");
    einstein->add_option("--box", box_hi, "upper edge of the positive seed box");
    einstein->add_option("--box-lo", box_lo, "lower edge of the positive seed box");
    einstein->add_option("--grid", grid, "seeds per axis");
    einstein->add_option("--tol", tol, "residual tolerance on the normalized system");
    einstein->add_option("--out", out_path, "output path (default: stdout)");
    einstein->add_option("--format", format, "json|csv")->check(CLI::IsMember({"json", "csv"}));

    std::string x0_text;
    double t_end = 50, rtol = 1e-9;
    auto* flow = app.add_subcommand("flow", "integrate the normalized flow, emit a CSV trajectory");
    flow->add_option("space,--space", space, "space identifier");
    flow->add_option("--x0", x0_text, "initial metric, comma separated (default: all ones)");
    flow->add_option("--t", t_end, "integration time (may be negative)");
    flow->add_option("--rtol", rtol, "relative tolerance");
    flow->add_option("--out", out_path, "output path (default: stdout)");

    bool run_all = false;
    std::string claim;
    auto* reproduce = app.add_subcommand("reproduce", "run the reproduction claims, emit pass/fail JSON");
    reproduce->add_flag("--all", run_all, "run every claim");
    reproduce->add_option("--claim", claim, "single claim id, e.g. table3 or v5r7");
    reproduce->add_option("--out", out_path, "output path (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if ((einstein->parsed() || flow->parsed()) && space.empty()) {
            std::cerr << "error: a space identifier is required\n";
            return 1;
        }
        if (list->parsed()) return cmd_list(out_path, format);
        if (einstein->parsed()) return cmd_einstein(space, box_lo, box_hi, grid, tol, out_path, format);
        if (flow->parsed()) return cmd_flow(space, x0_text, t_end, rtol, out_path);
        if (reproduce->parsed()) {
            if (!run_all && claim.empty()) {
                std::cerr << "reproduce: pass --all or --claim <id>; known claims:";
                for (const auto& id : ricci::claim_ids()) std::cerr << ' ' << id;
                std::cerr << "\n";
                return 1;
            }
            return cmd_reproduce(run_all, claim, out_path);
        }
    } catch (const ricci::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
