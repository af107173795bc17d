#ifndef CAUSALCOH_CAUSAL_DERHAM_HPP
#define CAUSALCOH_CAUSAL_DERHAM_HPP

#include "causalcoh/simplicial.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace causalcoh::derham {

enum class SupportClass { unrestricted, compact, retarded, advanced, past_compact, future_compact, spacelike_compact, timelike_compact };

inline constexpr std::array<SupportClass, 8> kAllSupports = {
    SupportClass::unrestricted,   SupportClass::compact,        SupportClass::retarded,          SupportClass::advanced,
    SupportClass::past_compact,   SupportClass::future_compact, SupportClass::spacelike_compact, SupportClass::timelike_compact};

/// Short tag used in reports: unrestricted, compact, ret, adv, pc, fc, sc, tc.
const char* support_tag(SupportClass x);
std::optional<SupportClass> support_from_tag(const std::string& tag);

/// Solution spaces of the wave operator exist for sc and unrestricted
/// supports only; the other causal classes have none.
enum class SolutionClass { spacelike_compact, unrestricted };

/// Globally hyperbolic M ≅ R × Σ with dim M = n and dim Σ = n - 1.
struct SpacetimeModel {
    int n = 0;
    simp::CohomologyProfile sigma;
    std::string label;
    /// Conal manifolds obey the same dimension formulas; only labels change.
    bool conal = false;
};

/// Throws std::invalid_argument unless n >= 2 and sigma.m == n - 1.
SpacetimeModel make_model(int n, simp::CohomologyProfile sigma, std::string label = {}, bool conal = false);

/// dim H^p_X(M); zero for p < 0 or p > n.
std::size_t restricted_dimension(const SpacetimeModel& model, SupportClass x, int p);
/// dim H^p_{□,X}(M) for X in {sc, unrestricted}.
std::size_t solution_dimension(const SpacetimeModel& model, SolutionClass x, int p);

/// Degrees are stored on [-1, n+1] so the edge conventions are visible.
struct CohomologyTable {
    int n = 0;
    std::string label;
    std::array<std::vector<std::size_t>, 8> dims;
    std::array<std::vector<std::size_t>, 2> solution_dims;

    static constexpr int kLowest = -1;
    std::size_t dim(SupportClass x, int p) const;
    std::size_t solution_dim(SolutionClass x, int p) const;
    std::size_t& at(SupportClass x, int p);
    std::size_t& solution_at(SolutionClass x, int p);
};

CohomologyTable full_table(const SpacetimeModel& model);

struct AuditViolation {
    std::string relation;  // "sc/tc" or "box-sc/box"
    int p;
    std::size_t lhs, rhs;
};

/// dim H^p_sc = dim H^{n-p}_tc and dim H^p_{□,sc} = dim H^{n-p}_□ for all p.
std::vector<AuditViolation> pairing_audit(const CohomologyTable& table, int n);

struct RouteCheck {
    int p;
    std::string relation;
    std::size_t via_m, via_sigma;
    bool agrees() const { return via_m == via_sigma; }
};

/// Compares the M-route (compact and unrestricted cohomology of M = R x Σ
/// from the Künneth product, shifted by the sc/tc isomorphisms) with the
/// Σ-route (read directly off Σ) in every degree.
std::vector<RouteCheck> route_consistency(const SpacetimeModel& model);
bool routes_agree(const std::vector<RouteCheck>& checks);

}  // namespace causalcoh::derham

#endif  // CAUSALCOH_CAUSAL_DERHAM_HPP
