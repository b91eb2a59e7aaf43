#include "bif/clusters.hpp"
#include "bif/error.hpp"

#include <algorithm>

namespace bif {

const char* parity_name(Parity p) { return p == Parity::Even ? "Even" : "Odd"; }
const char* phenomenon_name(Phenomenon p) { return p == Phenomenon::Vanishing ? "Vanishing" : "Splitting"; }

namespace {

bool finite(const LimitValue& v) { return v.kind == LimitValue::Kind::Finite; }

// Order: finite values ascending, then +inf, then -inf.
bool limit_before(const LimitValue& a, const LimitValue& b) {
    auto rank = [](const LimitValue& v) {
        return v.kind == LimitValue::Kind::Finite ? 0 : (v.kind == LimitValue::Kind::PlusInfinity ? 1 : 2);
    };
    if (rank(a) != rank(b)) return rank(a) < rank(b);
    return finite(a) && compare(a.value, b.value) < 0;
}

void insert_sorted(std::vector<AlgebraicReal>& v, const AlgebraicReal& a) {
    for (auto& w : v)
        if (compare(w, a) == 0) return;
    v.push_back(a);
    std::sort(v.begin(), v.end(), [](const AlgebraicReal& p, const AlgebraicReal& q) { return compare(p, q) < 0; });
}

bool contains(const std::vector<AlgebraicReal>& v, const AlgebraicReal& a) {
    for (auto& w : v)
        if (compare(w, a) == 0) return true;
    return false;
}

}  // namespace

std::vector<ValueClass> partition_by_value(const std::vector<MilnorArc>& arcs) {
    std::vector<ValueClass> out;
    for (size_t i = 0; i < arcs.size(); ++i) {
        const auto& a = arcs[i];
        if (a.monotonicity == Monotonicity::Singular) continue;
        auto it = std::find_if(out.begin(), out.end(), [&](const ValueClass& c) { return same_limit(c.value, a.limit); });
        if (it == out.end()) {
            out.push_back(ValueClass{a.limit, {}, {}});
            it = out.end() - 1;
        }
        (a.monotonicity == Monotonicity::Increasing ? it->increasing : it->decreasing).push_back(static_cast<int>(i) + 1);
    }
    std::stable_sort(out.begin(), out.end(), [](const ValueClass& a, const ValueClass& b) { return limit_before(a.value, b.value); });
    return out;
}

Parity cluster_parity(const MuCluster& c, const std::vector<MilnorArc>& arcs) {
    int k = 0;
    for (int i : c.arc_indices) k += arcs[static_cast<size_t>(i - 1)].rho_type != RhoType::Inflectional;
    return k % 2 ? Parity::Odd : Parity::Even;
}

std::vector<MuCluster> form_clusters(const std::vector<MilnorArc>& arcs) {
    size_t n = arcs.size();
    auto eligible = [&](size_t i) { return arcs[i].monotonicity != Monotonicity::Singular; };
    auto same = [&](size_t i, size_t j) {
        return eligible(i) && eligible(j) && arcs[i].monotonicity == arcs[j].monotonicity &&
               same_limit(arcs[i].limit, arcs[j].limit);
    };
    std::vector<MuCluster> out;
    if (n == 0) return out;
    // start at an arc that does not continue its antecedent's run
    size_t start = n;
    for (size_t i = 0; i < n; ++i)
        if (!same((i + n - 1) % n, i)) {
            start = i;
            break;
        }
    auto finish = [&](MuCluster& c) {
        for (int i : c.arc_indices) c.extremal_count += arcs[static_cast<size_t>(i - 1)].rho_type != RhoType::Inflectional;
        c.parity = cluster_parity(c, arcs);
        if (c.parity == Parity::Odd && finite(c.value))
            for (int i : c.arc_indices) {
                RhoType t = arcs[static_cast<size_t>(i - 1)].rho_type;
                if (t == RhoType::Inflectional) continue;
                c.phenomenon = t == RhoType::Max ? Phenomenon::Splitting : Phenomenon::Vanishing;
                break;
            }
        out.push_back(std::move(c));
    };
    if (start == n) {  // one run around the whole circle
        if (!eligible(0)) return out;
        MuCluster c{arcs[0].limit, arcs[0].monotonicity, {}, 0, Parity::Even, std::nullopt};
        for (size_t i = 0; i < n; ++i) c.arc_indices.push_back(static_cast<int>(i) + 1);
        finish(c);
        return out;
    }
    for (size_t k = 0; k < n;) {
        size_t i = (start + k) % n;
        if (!eligible(i)) {
            ++k;
            continue;
        }
        MuCluster c{arcs[i].limit, arcs[i].monotonicity, {static_cast<int>(i) + 1}, 0, Parity::Even, std::nullopt};
        size_t m = 1;
        while (k + m < n && same(i, (start + k + m) % n)) {
            c.arc_indices.push_back(static_cast<int>((start + k + m) % n) + 1);
            ++m;
        }
        finish(c);
        k += m;
    }
    return out;
}

void verdict(BifurcationReport& r) {
    for (auto& a : r.arcs)
        if (a.monotonicity == Monotonicity::Singular) {
            if (!finite(a.limit)) throw Error(ErrorCode::Internal, "singular arc with an infinite limit");
            insert_sorted(r.singular_arc_values, a.limit.value);
            insert_sorted(r.critical_values, a.limit.value);
        }
    r.clusters = form_clusters(r.arcs);
    r.atypical_regular_values.clear();
    for (auto& c : r.clusters) {
        if (!finite(c.value) || c.parity != Parity::Odd || contains(r.critical_values, c.value.value)) continue;
        auto it = std::find_if(r.atypical_regular_values.begin(), r.atypical_regular_values.end(),
                               [&](const AtypicalValue& v) { return compare(v.value, c.value.value) == 0; });
        if (it == r.atypical_regular_values.end()) {
            r.atypical_regular_values.push_back(AtypicalValue{c.value.value, {}});
            it = r.atypical_regular_values.end() - 1;
        }
        if (std::find(it->phenomena.begin(), it->phenomena.end(), *c.phenomenon) == it->phenomena.end())
            it->phenomena.push_back(*c.phenomenon);
    }
    for (auto& v : r.atypical_regular_values) std::sort(v.phenomena.begin(), v.phenomena.end());
    std::sort(r.atypical_regular_values.begin(), r.atypical_regular_values.end(),
              [](const AtypicalValue& a, const AtypicalValue& b) { return compare(a.value, b.value) < 0; });
    r.bifurcation_set = r.critical_values;
    for (auto& v : r.atypical_regular_values) insert_sorted(r.bifurcation_set, v.value);
}

}  // namespace bif
