#include "gaugetop/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <ostream>

#include "gaugetop/report.hpp"

namespace gaugetop {

namespace {

OutputFormat format_from_name(const std::string& name) {
    if (name == "text")
        return OutputFormat::Text;
    if (name == "json")
        return OutputFormat::Json;
    if (name == "latex")
        return OutputFormat::Latex;
    throw std::invalid_argument("unknown format: " + name);
}

int run_checks(const GroupSpec& g, const BaseData& base, std::ostream& out, std::ostream& err) {
    CheckReport report = check_all(g, base);
    if (report.all_passed()) {
        out << "checks: " << report.checks.size() << " passed\n";
        return 0;
    }
    for (const auto& c : report.checks)
        if (!c.passed)
            err << "check failed: " << c.name << (c.detail.empty() ? "" : " (" + c.detail + ")")
                << "\n";
    return 2;
}

int do_compute(const std::string& group_expr, long long b2, const std::string& space,
               const std::string& format, bool have_series, int series_n, bool have_max_degree,
               int max_degree, bool check, std::ostream& out, std::ostream& err) {
    GroupSpec g = parse_group_spec(group_expr);
    BaseData base(b2);
    ReportOptions options;
    if (have_series)
        options.series_max = series_n;
    if (have_max_degree)
        options.max_degree = max_degree;
    Report report = build_report(g, base, space_from_name(space), options);
    out << render_report(report, format_from_name(format));
    if (check)
        return run_checks(g, base, out, err);
    return 0;
}

int do_tables(const std::string& group_expr, long long b2, std::ostream& out) {
    GroupSpec g = parse_group_spec(group_expr);
    BaseData base(b2);
    const std::vector<Space> spaces = {Space::G,      Space::G0,    Space::Gauge,
                                       Space::BTilde, Space::BStar, Space::BG};
    for (Space space : spaces) {
        out << "== space: " << space_name(space) << " ==\n";
        out << render_report(build_report(g, base, space, {}), OutputFormat::Text);
        if (space == Space::Gauge)
            out << "== space: gauge-tilde: same rational data as gauge (the center is finite) ==\n";
        if (space == Space::BTilde)
            out << "== space: b-tilde-star: same rational data as b-tilde (weakly homotopy "
                   "equivalent) ==\n";
        out << "\n";
    }
    return 0;
}

int do_selftest(std::ostream& out, std::ostream& err) {
    size_t failures = 0;
    size_t total_checks = 0;
    for (const auto& [label, report] : run_selftest()) {
        total_checks += report.checks.size();
        if (report.all_passed()) {
            out << "ok    " << label << "  (" << report.checks.size() << " checks)\n";
        } else {
            failures += report.failure_count();
            out << "FAIL  " << label << "\n";
            for (const auto& c : report.checks)
                if (!c.passed)
                    err << "  failed: " << c.name
                        << (c.detail.empty() ? "" : " (" + c.detail + ")") << "\n";
        }
    }
    out << "selftest: " << total_checks << " checks, " << failures << " failures\n";
    return failures == 0 ? 0 : 2;
}

} // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact rational homotopy and cohomology of gauge groups and "
                 "connection-moduli spaces over compact simply connected four-manifolds"};
    app.name("gaugetop");
    app.require_subcommand(1);

    std::string group_expr;
    long long b2 = 0;
    std::string space;
    std::string format = "text";
    int series_n = 0;
    int max_degree = 0;
    bool check = false;

    const std::vector<std::string> space_tags = {"g",       "g0",           "gauge",
                                                 "gauge-tilde", "b-tilde", "b-tilde-star",
                                                 "b-star",  "bg"};

    CLI::App* compute = app.add_subcommand(
        "compute", "Rank table, cohomology algebra and Poincare series of one space");
    compute->add_option("--group", group_expr, "group expression, e.g. \"SU(2)\" or \"SU(3)xE8\"")
        ->required();
    compute->add_option("--b2", b2, "second Betti number of the base four-manifold")
        ->required()
        ->check(CLI::NonNegativeNumber);
    compute->add_option("--space", space, "which space to report")
        ->required()
        ->check(CLI::IsMember(space_tags));
    compute->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json", "latex"}));
    CLI::Option* series_opt =
        compute->add_option("--series", series_n, "include Betti numbers up to t^N")
            ->check(CLI::NonNegativeNumber);
    CLI::Option* max_degree_opt =
        compute->add_option("--max-degree", max_degree,
                            "truncate tables at this degree (default: full support)")
            ->check(CLI::PositiveNumber);
    compute->add_flag("--check", check, "run the consistency checks; exit 2 on failure");

    CLI::App* tables = app.add_subcommand("tables", "All spaces of one (group, b2) at once");
    tables->add_option("--group", group_expr, "group expression")->required();
    tables->add_option("--b2", b2, "second Betti number of the base four-manifold")
        ->required()
        ->check(CLI::NonNegativeNumber);

    CLI::App* selftest =
        app.add_subcommand("selftest", "Run the consistency checks across the built-in group zoo");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        if (compute->parsed())
            return do_compute(group_expr, b2, space, format, series_opt->count() > 0, series_n,
                              max_degree_opt->count() > 0, max_degree, check, out, err);
        if (tables->parsed())
            return do_tables(group_expr, b2, out);
        if (selftest->parsed())
            return do_selftest(out, err);
    } catch (const GroupParseError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

} // namespace gaugetop
