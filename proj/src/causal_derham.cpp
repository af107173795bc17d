#include "causalcoh/causal_derham.hpp"

#include <stdexcept>

namespace causalcoh::derham {

const char* support_tag(SupportClass x) {
    switch (x) {
        case SupportClass::unrestricted: return "unrestricted";
        case SupportClass::compact: return "compact";
        case SupportClass::retarded: return "ret";
        case SupportClass::advanced: return "adv";
        case SupportClass::past_compact: return "pc";
        case SupportClass::future_compact: return "fc";
        case SupportClass::spacelike_compact: return "sc";
        case SupportClass::timelike_compact: return "tc";
    }
    return "?";
}

std::optional<SupportClass> support_from_tag(const std::string& tag) {
    for (auto x : kAllSupports)
        if (tag == support_tag(x)) return x;
    return std::nullopt;
}

SpacetimeModel make_model(int n, simp::CohomologyProfile sigma, std::string label, bool conal) {
    if (n < 2) throw std::invalid_argument("spacetime dimension must be at least 2");
    if (sigma.m != n - 1)
        throw std::invalid_argument("Cauchy surface has dimension " + std::to_string(sigma.m) + ", expected " + std::to_string(n - 1));
    if (label.empty()) label = (conal ? "conal R x " : "R x ") + sigma.name;
    return {n, std::move(sigma), std::move(label), conal};
}

std::size_t restricted_dimension(const SpacetimeModel& model, SupportClass x, int p) {
    if (p < 0 || p > model.n) return 0;
    const auto& s = model.sigma;
    switch (x) {
        case SupportClass::retarded:
        case SupportClass::advanced:
        case SupportClass::past_compact:
        case SupportClass::future_compact: return 0;
        case SupportClass::spacelike_compact: return s.h_c_at(p);
        case SupportClass::timelike_compact: return s.h_at(p - 1);
        case SupportClass::unrestricted: return s.h_at(p);
        case SupportClass::compact: return s.h_c_at(p - 1);
    }
    return 0;
}

std::size_t solution_dimension(const SpacetimeModel& model, SolutionClass x, int p) {
    if (p < 0 || p > model.n) return 0;
    const auto& s = model.sigma;
    if (x == SolutionClass::spacelike_compact) return s.h_c_at(p) + s.h_c_at(p - 1);
    return s.h_at(p) + s.h_at(p - 1);
}

std::size_t CohomologyTable::dim(SupportClass x, int p) const {
    if (p < kLowest || p > n + 1) return 0;
    return dims[static_cast<std::size_t>(x)][static_cast<std::size_t>(p - kLowest)];
}

std::size_t CohomologyTable::solution_dim(SolutionClass x, int p) const {
    if (p < kLowest || p > n + 1) return 0;
    return solution_dims[static_cast<std::size_t>(x)][static_cast<std::size_t>(p - kLowest)];
}

std::size_t& CohomologyTable::at(SupportClass x, int p) {
    if (p < kLowest || p > n + 1) throw std::out_of_range("degree outside [-1, n+1]");
    return dims[static_cast<std::size_t>(x)][static_cast<std::size_t>(p - kLowest)];
}

std::size_t& CohomologyTable::solution_at(SolutionClass x, int p) {
    if (p < kLowest || p > n + 1) throw std::out_of_range("degree outside [-1, n+1]");
    return solution_dims[static_cast<std::size_t>(x)][static_cast<std::size_t>(p - kLowest)];
}

CohomologyTable full_table(const SpacetimeModel& model) {
    CohomologyTable t;
    t.n = model.n;
    t.label = model.label;
    const auto width = static_cast<std::size_t>(model.n + 3);
    for (auto& row : t.dims) row.assign(width, 0);
    for (auto& row : t.solution_dims) row.assign(width, 0);
    for (int p = CohomologyTable::kLowest; p <= model.n + 1; ++p) {
        for (auto x : kAllSupports) t.at(x, p) = restricted_dimension(model, x, p);
        for (auto x : {SolutionClass::spacelike_compact, SolutionClass::unrestricted})
            t.solution_at(x, p) = solution_dimension(model, x, p);
    }
    return t;
}

std::vector<AuditViolation> pairing_audit(const CohomologyTable& table, int n) {
    std::vector<AuditViolation> out;
    for (int p = CohomologyTable::kLowest; p <= n + 1; ++p) {
        const auto sc = table.dim(SupportClass::spacelike_compact, p);
        const auto tc = table.dim(SupportClass::timelike_compact, n - p);
        if (sc != tc) out.push_back({"sc/tc", p, sc, tc});
        const auto bsc = table.solution_dim(SolutionClass::spacelike_compact, p);
        const auto b = table.solution_dim(SolutionClass::unrestricted, n - p);
        if (bsc != b) out.push_back({"box-sc/box", p, bsc, b});
    }
    return out;
}

std::vector<RouteCheck> route_consistency(const SpacetimeModel& model) {
    // M = R × Σ through the product formula; R has h = (1, 0), h_c = (0, 1).
    const auto m = simp::kunneth(simp::preset_profile("euclidean", 1), model.sigma);
    const auto& s = model.sigma;
    std::vector<RouteCheck> out;
    for (int p = CohomologyTable::kLowest; p <= model.n + 1; ++p) {
        auto in_range = [&](std::size_t v, int q) -> std::size_t { return q < 0 || q > model.n ? 0 : v; };
        // H^p_sc ≅ H^{p+1}_0(M) against H^p_sc ≅ H^p_0(Σ).
        out.push_back({p, "sc", in_range(m.h_c_at(p + 1), p), in_range(s.h_c_at(p), p)});
        // H^p_tc ≅ H^{p-1}(M) against H^{p-1}(Σ).
        out.push_back({p, "tc", in_range(m.h_at(p - 1), p), in_range(s.h_at(p - 1), p)});
        // H^p_{□,sc} ≅ H^p_0(M) ⊕ H^{p+1}_0(M) against H^p_0(Σ) ⊕ H^{p-1}_0(Σ).
        out.push_back({p, "box-sc", in_range(m.h_c_at(p) + m.h_c_at(p + 1), p), in_range(s.h_c_at(p) + s.h_c_at(p - 1), p)});
        out.push_back({p, "box", in_range(m.h_at(p) + m.h_at(p - 1), p), in_range(s.h_at(p) + s.h_at(p - 1), p)});
    }
    return out;
}

bool routes_agree(const std::vector<RouteCheck>& checks) {
    for (const auto& c : checks)
        if (!c.agrees()) return false;
    return true;
}

}  // namespace causalcoh::derham
