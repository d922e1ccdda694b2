#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

#include "pvg/parse.hpp"
#include "pvg/report.hpp"

using namespace pvg;

namespace {

struct RunResult {
    std::string out;
    int code = -1;
};

RunResult run(const std::string& args, bool merge_stderr = false) {
    const std::string cmd = std::string(PVGCLI_PATH) + " " + args +
                            (merge_stderr ? " 2>&1" : " 2>/dev/null");
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
    const int status = pclose(p);
    RunResult r;
    r.out = std::move(out);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

const char* kExample = "--equation \"x' = x/(2*t)\"";

} // namespace

TEST_CASE("json output matches the library rendering byte for byte") {
    const RunResult r = run(std::string(kExample) +
                            " --theory ordered --order \"t -> 0+\" --format json");
    CHECK(r.code == 0);
    const ClassificationReport want =
        build_report(parse_equation("x' = x/(2*t)"),
                     TheorySpec::ordered_fields(Cut::right_of(RealAlgebraic())),
                     CertificateLevel::Summary);
    CHECK(r.out == to_json(want));
}

TEST_CASE("text is the default format") {
    const RunResult r =
        run(std::string(kExample) + " --theory ordered --order \"t -> 0+\"");
    CHECK(r.code == 0);
    const ClassificationReport want =
        build_report(parse_equation("x' = x/(2*t)"),
                     TheorySpec::ordered_fields(Cut::right_of(RealAlgebraic())),
                     CertificateLevel::Summary);
    CHECK(r.out == to_text(want));
    CHECK(r.out.find("witness c = 1") != std::string::npos);
}

TEST_CASE("repeated runs emit identical bytes") {
    const std::string args = std::string(kExample) +
                             " --format json --certificates full";
    const RunResult a = run(args);
    const RunResult b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    const ClassificationReport want = build_report(
        parse_equation("x' = x/(2*t)"), TheorySpec::fields(), CertificateLevel::Full);
    CHECK(a.out == to_json(want));
}

TEST_CASE("batch mode emits an array in input order") {
    const RunResult r = run(std::string(kExample) +
                            " --equation \"x' = 1/t\" --format json");
    CHECK(r.code == 0);
    const auto arr = nlohmann::ordered_json::parse(r.out);
    REQUIRE(arr.is_array());
    REQUIRE(arr.size() == 2);
    const auto first = nlohmann::ordered_json::parse(
        to_json(build_report(parse_equation("x' = x/(2*t)"), TheorySpec::fields(),
                             CertificateLevel::Summary)));
    CHECK(arr[0] == first);
    CHECK(arr[1]["classification"]["variant"] == "additive_transcendental");

    const RunResult txt = run(std::string(kExample) + " --equation \"x' = 1/t\"");
    CHECK(txt.out.find(std::string(40, '-')) != std::string::npos);
}

TEST_CASE("forcing the reading") {
    const RunResult r =
        run("--equation \"x' = 1/t\" --type homogeneous --format json");
    CHECK(r.code == 0);
    const auto j = nlohmann::ordered_json::parse(r.out);
    CHECK(j["classification"]["variant"] == "in_field");
    CHECK(j["existence"]["presentation"] == "y - t");

    CHECK(run("--equation \"x' = t*x\" --type quadrature").code == 3);
}

TEST_CASE("exit codes") {
    CHECK(run("--equation \"x' =\"", true).code == 2);
    CHECK(run("--equation \"x' =\"", true).out.find("position") !=
          std::string::npos);
    CHECK(run("--equation \"x'' = x\"", true).code == 3);
    CHECK(run("--equation \"x' = x^2\"", true).code == 3);
    CHECK(run("--equation \"x' = x + 1\"", true).code == 3);
    CHECK(run("--equation \"x' = x*x\"", true).code == 3);
    CHECK(run(std::string(kExample) + " --theory ordered", true).code == 2);
    CHECK(run(std::string(kExample) + " --order \"t -> 0+\"", true).code == 2);
    CHECK(run(std::string(kExample) + " --theory ordered --order \"t => 0\"",
              true).code == 2);
    CHECK(run(std::string(kExample) + " --format yaml", true).code == 2);
    CHECK(run("--nonsense", true).code == 2);
    CHECK(run("--help", true).code == 0);
}
