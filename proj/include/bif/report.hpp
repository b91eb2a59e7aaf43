#pragma once

#include "bif/analysis.hpp"
#include "bif/oracle.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace bif {

inline constexpr const char* kSchemaVersion = "1.0";

// Process exit status for a failure: 1 for unusable input, 2 when the analysis itself fails.
int exit_status(ErrorCode c);

struct OracleArcCheck {
    int arc = 0;
    std::string status;  // "agrees", "disagrees" or "trace-failed"
    double estimate = 0, error = 0;
    int diverged = 0;  // sign of divergence, 0 for a finite estimate
};
struct OracleSweepCheck {
    AlgebraicReal value;
    oracle::Side side = oracle::Side::Below;
    bool vanishing = false, splitting = false;
};
struct OracleCheck {
    std::vector<OracleArcCheck> arcs;
    std::vector<OracleSweepCheck> sweeps;
    bool consistent = true;
};

// Numeric cross-checks of a finished analysis: every arc limit against a traced
// estimate, and a fibre sweep toward every atypical value from the side its
// odd clusters approach it.
OracleCheck run_oracle_check(const Analysis& a);

// Minimal polynomial data, isolating interval and a decimal with its error bound.
nlohmann::ordered_json algebraic_json(const AlgebraicReal& a, int digits);

nlohmann::ordered_json report_json(const Analysis& a, const std::string& input_text, int digits, const OracleCheck* oracle);
std::string report_text(const Analysis& a, const std::string& input_text, int digits, const OracleCheck* oracle);

// SVG 1.1: C_R with band shading, labelled arc samples, contours of f at the
// given levels and a cluster legend.  Coordinates are those of the analysed
// (translated) polynomial.
std::string render_svg(const Analysis& a, const std::vector<Rational>& levels);

}  // namespace bif
