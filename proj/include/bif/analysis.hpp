#pragma once

#include "bif/clusters.hpp"

#include <optional>

namespace bif {

struct AnalysisOptions {
    std::optional<Rational> radius_override;
    int trunc_extra = 5;
};

struct Analysis {
    BiPoly input;
    BiPoly f;  // primitive form actually analysed (input translated)
    BiPoly J, h;
    MuSet mu;
    BranchSet branches;
    Matching matching;
    BifurcationReport report;
};

// The full certified pipeline: primitivity, Milnor radius, arcs and their
// types, branches at infinity and their limits, clusters and the verdict.
Analysis analyze(const BiPoly& f, const AnalysisOptions& opt = {});

}  // namespace bif
