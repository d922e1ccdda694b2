#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "pvg/errors.hpp"
#include "pvg/parse.hpp"
#include "pvg/report.hpp"

namespace {

// 0 success, 2 input that does not parse, 3 input outside the supported
// fragment, 1 internal failure
constexpr int kParseExit = 2;
constexpr int kUnsupportedExit = 3;

} // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "classify x' = a*x and x' = g over Q(t), build the solution groupoid, "
        "and report existence and uniqueness with certificates"};
    std::vector<std::string> equations;
    std::string type;
    std::string theory = "fields";
    std::string order;
    std::string format = "text";
    std::string certificates = "summary";

    app.add_option("--equation", equations,
                   "equation text, e.g. \"x' = x/(2*t)\"; repeatable")
        ->required();
    app.add_option("--type", type, "force the reading of the right side")
        ->check(CLI::IsMember({"homogeneous", "quadrature"}));
    app.add_option("--theory", theory, "fields (default) or ordered")
        ->check(CLI::IsMember({"fields", "ordered"}));
    app.add_option("--order", order,
                   "cut placing t against the constants, e.g. \"t -> 0+\"; "
                   "required with --theory ordered");
    app.add_option("--format", format, "text (default) or json")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--certificates", certificates, "summary (default) or full")
        ->check(CLI::IsMember({"summary", "full"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kParseExit;
    }

    try {
        pvg::TheorySpec th = pvg::TheorySpec::fields();
        if (theory == "ordered") {
            if (order.empty()) {
                std::cerr << "error: --theory ordered requires --order\n";
                return kParseExit;
            }
            th = pvg::TheorySpec::ordered_fields(pvg::parse_cut(order));
        } else if (!order.empty()) {
            std::cerr << "error: --order requires --theory ordered\n";
            return kParseExit;
        }

        std::optional<pvg::LinearODE::Kind> forced;
        if (type == "homogeneous") forced = pvg::LinearODE::Kind::Homogeneous;
        if (type == "quadrature") forced = pvg::LinearODE::Kind::Quadrature;
        const pvg::CertificateLevel level = certificates == "full"
                                                ? pvg::CertificateLevel::Full
                                                : pvg::CertificateLevel::Summary;

        std::vector<pvg::ClassificationReport> reports;
        reports.reserve(equations.size());
        for (const std::string& text : equations)
            reports.push_back(
                pvg::build_report(pvg::parse_equation(text, forced), th, level));

        if (format == "json") {
            if (reports.size() == 1) {
                std::cout << pvg::to_json(reports.front());
            } else {
                nlohmann::ordered_json arr = nlohmann::ordered_json::array();
                for (const pvg::ClassificationReport& r : reports)
                    arr.push_back(nlohmann::ordered_json::parse(pvg::to_json(r)));
                std::cout << arr.dump(2) << "\n";
            }
        } else {
            bool first = true;
            for (const pvg::ClassificationReport& r : reports) {
                if (!first) std::cout << std::string(40, '-') << "\n";
                std::cout << pvg::to_text(r);
                first = false;
            }
        }
        return 0;
    } catch (const pvg::SyntaxError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kParseExit;
    } catch (const pvg::UnsupportedOrder& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUnsupportedExit;
    } catch (const pvg::UnsupportedInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUnsupportedExit;
    } catch (const pvg::ShapeMismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUnsupportedExit;
    } catch (const pvg::ZeroInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUnsupportedExit;
    } catch (const pvg::ZeroObjectPoint& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUnsupportedExit;
    } catch (const pvg::PoleAtPoint& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUnsupportedExit;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
