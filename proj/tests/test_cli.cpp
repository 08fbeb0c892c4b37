#include <doctest.h>

#include <sstream>

#include "gaugetop/cli.hpp"
#include "gaugetop/report.hpp"

using namespace gaugetop;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("compute: text output") {
    CliResult r = cli({"compute", "--group", "SU(2)", "--b2", "5", "--space", "b-star"});
    CHECK(r.code == 0);
    CHECK(r.err.empty());
    CHECK(r.out.find("polynomial algebra on 6 generators") != std::string::npos);
    CHECK(r.out.find("2: 5") != std::string::npos);
    CHECK(r.out.find("4: 1") != std::string::npos);
}

TEST_CASE("compute: json output with series") {
    CliResult r = cli({"compute", "--group", "E8", "--b2", "3", "--space", "gauge",
                       "--series", "30", "--format", "json"});
    CHECK(r.code == 0);
    Report report = parse_report_json(r.out);
    CHECK(report.algebra_total == 39); // 8*3 + 15
    REQUIRE(report.poincare.has_value());
    CHECK(report.poincare->size() == 31);
    CHECK((*report.poincare)[0] == 1);
}

TEST_CASE("compute: latex output") {
    CliResult r = cli({"compute", "--group", "SU(2)", "--b2", "2", "--space", "gauge",
                       "--format", "latex"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\\wedge (z_1, z_2, w)") != std::string::npos);
}

TEST_CASE("compute: unsupported group gives exit 1 and a reason") {
    CliResult r = cli({"compute", "--group", "U(3)", "--b2", "1", "--space", "b-tilde"});
    CHECK(r.code == 1);
    CHECK(r.err.find("simply connected") != std::string::npos);
    CHECK(r.out.empty());
}

TEST_CASE("compute: argument validation gives exit 1") {
    CHECK(cli({"compute", "--group", "SU(2)", "--b2", "-1", "--space", "gauge"}).code == 1);
    CHECK(cli({"compute", "--group", "SU(2)", "--b2", "1", "--space", "nowhere"}).code == 1);
    CHECK(cli({"compute", "--group", "SU(2)", "--b2", "1"}).code == 1); // --space required
    CHECK(cli({"compute", "--b2", "1", "--space", "gauge"}).code == 1);
    CHECK(cli({"compute", "--group", "SU(2", "--b2", "1", "--space", "gauge"}).code == 1);
    CHECK(cli({"bogus-subcommand"}).code == 1);
    CHECK(cli({}).code == 1);
}

TEST_CASE("compute: --check passes on sound data") {
    CliResult r = cli({"compute", "--group", "SU(3)xE7", "--b2", "2", "--space", "b-star",
                       "--check"});
    CHECK(r.code == 0);
    CHECK(r.out.find("checks:") != std::string::npos);
    CHECK(r.out.find("passed") != std::string::npos);
}

TEST_CASE("tables: all spaces at once with alias notes") {
    CliResult r = cli({"tables", "--group", "SU(2)", "--b2", "1"});
    CHECK(r.code == 0);
    for (const char* tag : {"== space: g ==", "== space: g0 ==", "== space: gauge ==",
                            "== space: b-tilde ==", "== space: b-star ==", "== space: bg =="})
        CHECK(r.out.find(tag) != std::string::npos);
    CHECK(r.out.find("gauge-tilde: same rational data as gauge") != std::string::npos);
    CHECK(r.out.find("b-tilde-star: same rational data as b-tilde") != std::string::npos);
}

TEST_CASE("selftest runs the zoo") {
    CliResult r = cli({"selftest"});
    CHECK(r.code == 0);
    CHECK(r.err.empty());
    CHECK(r.out.find("0 failures") != std::string::npos);
}

TEST_CASE("help exits zero") {
    CHECK(cli({"--help"}).code == 0);
    CHECK(cli({"compute", "--help"}).code == 0);
}
