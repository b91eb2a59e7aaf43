#pragma once

#include "bif/arcs.hpp"
#include "bif/milnor.hpp"
#include "bif/puiseux.hpp"

#include <optional>
#include <vector>

namespace bif {

struct MilnorArc {
    ArcSample sample;
    Monotonicity monotonicity = Monotonicity::Singular;
    RhoType rho_type = RhoType::Inflectional;
    Sign band_before = Sign::Zero, band_after = Sign::Zero;
    LimitValue limit;
    int branch = -1;  // index into the branch set
};

enum class Parity { Even, Odd };
enum class Phenomenon { Vanishing, Splitting };
const char* parity_name(Parity p);
const char* phenomenon_name(Phenomenon p);

struct MuCluster {
    LimitValue value;
    Monotonicity direction = Monotonicity::Increasing;
    std::vector<int> arc_indices;  // 1-based, counterclockwise from the first arc of the run
    int extremal_count = 0;
    Parity parity = Parity::Even;
    std::optional<Phenomenon> phenomenon;  // set for odd clusters at finite values
};

// Arcs (1-based) increasing / decreasing to one limit value.
struct ValueClass {
    LimitValue value;
    std::vector<int> increasing, decreasing;
};
// Finite values in increasing order, then +inf and -inf when present.  Singular arcs are left out.
std::vector<ValueClass> partition_by_value(const std::vector<MilnorArc>& arcs);

// Maximal cyclic runs of arcs with the same limit and direction; parities and labels filled in.
std::vector<MuCluster> form_clusters(const std::vector<MilnorArc>& arcs);
Parity cluster_parity(const MuCluster& c, const std::vector<MilnorArc>& arcs);

struct AtypicalValue {
    AlgebraicReal value;
    std::vector<Phenomenon> phenomena;  // distinct, Vanishing before Splitting
};

struct BifurcationReport {
    PrimitivityInfo primitivity;
    MilnorRadius radius;
    std::vector<InfinityPoint> infinity_points;
    std::vector<MilnorArc> arcs;
    std::vector<MuCluster> clusters;
    std::vector<AlgebraicReal> critical_values;
    std::vector<AlgebraicReal> singular_arc_values;
    std::vector<AtypicalValue> atypical_regular_values;
    std::vector<AlgebraicReal> bifurcation_set;
};

// Fills clusters, atypical values and the bifurcation set of a report whose
// arcs and critical values are known.  Values carried by Singular arcs join
// the critical values.
void verdict(BifurcationReport& r);

}  // namespace bif
