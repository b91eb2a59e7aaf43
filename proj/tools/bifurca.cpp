#include "bif/analysis.hpp"
#include "bif/parse.hpp"
#include "bif/report.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>

#ifndef BIFURCA_ORACLE_DEFAULT
#define BIFURCA_ORACLE_DEFAULT "off"
#endif

namespace {

constexpr int kOk = 0, kInputError = 1;

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    size_t b = 0;
    for (;;) {
        size_t e = s.find(',', b);
        out.push_back(s.substr(b, e == std::string::npos ? std::string::npos : e - b));
        if (e == std::string::npos) break;
        b = e + 1;
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bifurcation set of a real polynomial f(x, y): critical values and atypical values at infinity"};
    std::string poly, format = "text", plot, radius, levels_csv, oracle_mode = BIFURCA_ORACLE_DEFAULT, output;
    unsigned trunc_extra = 5, digits = 12;
    app.add_option("polynomial", poly, "polynomial in x and y, e.g. \"x + x^2*y\"")->required();
    app.add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--plot", plot, "write an SVG picture to this path");
    app.add_option("--radius-override", radius, "Milnor radius to use (rational, must enclose the mu-set)");
    app.add_option("--trunc-extra", trunc_extra, "extra Puiseux guard terms")->capture_default_str();
    app.add_option("--digits", digits, "decimal digits for algebraic numbers")->capture_default_str()->check(CLI::Range(1u, 200u));
    app.add_option("--oracle", oracle_mode, "numeric cross-check: off or check")->check(CLI::IsMember({"off", "check"}));
    app.add_option("--levels", levels_csv, "comma-separated levels whose fibres are drawn in the plot");
    app.add_option("--output", output, "write the report to this file instead of stdout");
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kInputError;
    }

    const bool json = format == "json";
    auto diagnose = [&](const bif::Error& e, int rc) {
        if (json) {
            nlohmann::ordered_json d = {{"schema_version", bif::kSchemaVersion},
                                {"error", {{"code", bif::error_name(e.code())}, {"message", e.what()}}}};
            if (auto* pe = dynamic_cast<const bif::ParseError*>(&e)) d["error"]["offset"] = pe->offset();
            std::cout << d.dump(2) << "\n";
        }
        std::cerr << "error: " << e.what() << "\n";
        return rc;
    };

    bif::BiPoly f;
    bif::AnalysisOptions opt;
    opt.trunc_extra = static_cast<int>(trunc_extra);
    std::vector<bif::Rational> levels;
    try {
        f = bif::parse_polynomial(poly);
        if (!radius.empty()) {
            opt.radius_override = bif::parse_rational(radius);
            if (sgn(*opt.radius_override) <= 0)
                throw bif::Error(bif::ErrorCode::OverrideTooSmall, "the radius must be positive");
        }
        if (!levels_csv.empty())
            for (auto& s : split_csv(levels_csv)) levels.push_back(bif::parse_rational(s));
    } catch (const bif::Error& e) {
        return diagnose(e, kInputError);
    }

    try {
        bif::Analysis a = bif::analyze(f, opt);
        std::optional<bif::OracleCheck> oc;
        if (oracle_mode == "check") oc = bif::run_oracle_check(a);
        const bif::OracleCheck* op = oc ? &*oc : nullptr;
        std::string out = json ? bif::report_json(a, poly, static_cast<int>(digits), op).dump(2) + "\n"
                               : bif::report_text(a, poly, static_cast<int>(digits), op);
        if (!plot.empty()) {
            std::ofstream ps(plot);
            ps << bif::render_svg(a, levels);
            if (!ps) {
                std::cerr << "error: cannot write " << plot << "\n";
                return kInputError;
            }
        }
        if (!output.empty()) {
            std::ofstream os(output);
            os << out;
            if (!os) {
                std::cerr << "error: cannot write " << output << "\n";
                return kInputError;
            }
        } else {
            std::cout << out;
        }
    } catch (const bif::Error& e) {
        return diagnose(e, bif::exit_status(e.code()));
    }
    return kOk;
}
