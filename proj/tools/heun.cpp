// Command-line front end.
//
//   heun analyze --input job.cfg [--output report.json]
//   heun solve   --input job.cfg [--output report.json]
//   heun scan    --input job.cfg [--output table.csv]
//
// Exit codes: 0 success (a non-algebraizable finding is a success),
// 2 input/parse error, 3 numerical failure.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "heun/heun.hpp"

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw heun::input_error("cannot open input file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(path);
    if (!out) throw heun::input_error("cannot open output file '" + path + "'");
    out << text;
}

struct CommonFlags {
    std::string input, output, format;
    int nmax = -1;
    double tolerance = -1.0;
    long long seed = -1;
};

void add_common(CLI::App* cmd, CommonFlags& flags, const std::string& default_format) {
    cmd->add_option("--input", flags.input, "job description file")->required();
    cmd->add_option("--output", flags.output, "write the report here instead of stdout");
    cmd->add_option("--nmax", flags.nmax, "largest quasi-polynomial degree to enumerate");
    cmd->add_option("--tol", flags.tolerance, "zero-test tolerance on the coefficients");
    cmd->add_option("--seed", flags.seed, "seed for the eigenvalue root finder");
    flags.format = default_format;
    cmd->add_option("--format", flags.format, "output format")
        ->check(CLI::IsMember({"json", "csv"}));
}

heun::JobSpec load_job(const CommonFlags& flags, heun::JobMode mode) {
    heun::JobSpec job = heun::parse_job(slurp(flags.input));
    job.mode = mode;
    if (flags.nmax >= 0) job.nmax = flags.nmax;
    if (flags.tolerance >= 0.0) job.zero_tol = flags.tolerance;
    if (flags.seed >= 0) job.seed = static_cast<std::uint64_t>(flags.seed);
    return job;
}

int run_report(const CommonFlags& flags, heun::JobMode mode) {
    const heun::JobSpec job = load_job(flags, mode);
    if (flags.format != "json")
        throw heun::input_error("analyze/solve reports are JSON only");
    const heun::SolutionReport report = heun::run_job(job);
    emit(flags.output, heun::to_json(report).dump(2));
    return 0;
}

int run_scan_cmd(const CommonFlags& flags) {
    const heun::JobSpec job = load_job(flags, heun::JobMode::scan);
    if (flags.format != "csv") throw heun::input_error("scan tables are CSV only");
    const auto rows = heun::run_scan(job);
    emit(flags.output, heun::scan_csv(job, rows));
    return heun::scan_had_failures(rows) ? 3 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"su(1,1) algebraization and quasi-polynomial solutions of the Heun class"};
    app.require_subcommand(1);

    CommonFlags analyze_flags, solve_flags, scan_flags;
    auto* analyze = app.add_subcommand("analyze", "algebraize and classify, no eigen solving");
    add_common(analyze, analyze_flags, "json");
    auto* solve = app.add_subcommand("solve", "full pipeline with verified solutions");
    add_common(solve, solve_flags, "json");
    auto* scan = app.add_subcommand("scan", "classification over a parameter grid");
    add_common(scan, scan_flags, "csv");

    std::vector<double> casimirs;
    std::string taxonomy_output;
    auto* taxonomy =
        app.add_subcommand("taxonomy", "admissible representation classes per Casimir value (CSV)");
    taxonomy->add_option("--values", casimirs, "Casimir values")->required()->delimiter(',');
    taxonomy->add_option("--output", taxonomy_output, "write the table here instead of stdout");

    try {
        app.parse(argc, argv);
        if (analyze->parsed()) return run_report(analyze_flags, heun::JobMode::analyze);
        if (solve->parsed()) return run_report(solve_flags, heun::JobMode::solve);
        if (scan->parsed()) return run_scan_cmd(scan_flags);
        if (taxonomy->parsed()) {
            emit(taxonomy_output, heun::taxonomy_csv(casimirs));
            return 0;
        }
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const heun::numerical_failure& e) {
        std::cerr << "numerical failure: " << e.what() << " (defect " << e.defect << ")\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
