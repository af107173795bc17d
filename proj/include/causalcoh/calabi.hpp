#ifndef CAUSALCOH_CALABI_HPP
#define CAUSALCOH_CALABI_HPP

#include "causalcoh/causal_derham.hpp"
#include "causalcoh/chart.hpp"
#include "causalcoh/young.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace causalcoh::calabi {

using tensor::Chart;
using tensor::Exec;
using tensor::Tensor;
using tensor::YoungDiagram;

class CalabiLevelError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Symmetry type of C_l: (1), (2), (2,2), (2,2,1), (2,2,1,1).
YoungDiagram level_diagram(int level);

/// A section of C_l. The constructor checks rank and Young symmetry.
class CalabiField {
public:
    CalabiField(int level, Tensor field);

    int level() const { return level_; }
    const Tensor& tensor() const { return field_; }
    bool is_zero() const { return field_.is_zero(); }
    friend bool operator==(const CalabiField& a, const CalabiField& b) { return a.level_ == b.level_ && a.field_ == b.field_; }

private:
    int level_;
    Tensor field_;
};

/// Random level-l field: sparse polynomial components of degree <= degree,
/// Young-projected onto the level's symmetry.
CalabiField random_field(int n, int level, Rng& rng, unsigned degree, int nonzero = 3);
CalabiField zero_field(int n, int level);

/// Calabi operators B_l : C_{l-1} -> C_l, l = 1..4.
///   B1[v]_ab      = ∇_a v_b + ∇_b v_a
///   B2[h]_ab:cd   = ½(S(a,c;b,d) - S(b,c;a,d) - S(a,d;b,c) + S(b,d;a,c)) + k/(n(n-1)) (g⊙h)
///                   with S(a,c;b,d) = ∇_a∇_c h_bd + ∇_c∇_a h_bd
/// The curvature coefficient of B2 is the one for which B2B1 = 0 and the
/// homotopy identities for P1 and P2 hold; half of it breaks all three.
///   B3[r]_abc:de  = ∇_a r_bc:de + ∇_b r_ca:de + ∇_c r_ab:de
///   B4[b]_abcd:ef = ∇_a b_bcd:ef - ∇_b b_acd:ef + ∇_c b_abd:ef - ∇_d b_abc:ef
CalabiField B(const Chart& chart, int l, const CalabiField& field, Exec exec = Exec::parallel);

/// Homotopies E_l : C_l -> C_{l-1}, l = 1..4, with D the divergence on the
/// first slot and T, U the traces b_abe:c^e and b_abcf:d^f.
///   E1[h]_a      = ∇^b h_ab - ½ ∇_a tr h
///   E2[r]_ab     = r_ac:b^c
///   E3[b]_ab:cd  = ½(D_ab:cd + D_cd:ab) - ½(∇_a T_cd:b - ∇_b T_cd:a + ∇_c T_ab:d - ∇_d T_ab:c)
///   E4[b]_abc:de = ⅓(2D_abc:de + D_dea:bc + D_deb:ca + D_dec:ab)
///                + ⅙(2∇_d U_abc:e - 2∇_e U_abc:d - ∇_a U_deb:c + ∇_a U_dec:b
///                    - ∇_b U_dec:a + ∇_b U_dea:c - ∇_c U_dea:b + ∇_c U_deb:a)
CalabiField E(const Chart& chart, int l, const CalabiField& field, Exec exec = Exec::parallel);

/// Cochain maps P_l : C_l -> C_l, l = 0..4, from their closed forms with
/// c = 2k/(n(n-1)):
///   P0 = □v + (k/n) v
///   P1 = □h - c h + c g tr h
///   P2 = □r - (2k/n) r + c g⊙tr r
///   P3 = □b - k(3n-7)/(n(n-1)) b - c g⊙tr b
///   P4 = □b - 2k(2n-7)/(n(n-1)) b + c g⊙tr b
CalabiField P(const Chart& chart, int l, const CalabiField& field, Exec exec = Exec::parallel);

struct IdentityCheck {
    std::string name;  // e.g. "B3B2=0", "E3B3+B2E2=P2"
    int level = 0;     // level of the input field
    int cases = 0;
    int failures = 0;
    bool passed() const { return failures == 0; }
};

struct IdentityReport {
    std::string chart;
    std::uint64_t seed = 0;
    unsigned degree = 0;
    std::vector<IdentityCheck> checks;
    bool all_passed() const;
};

/// B_{l+1}B_l = 0 (l = 1..3), E_{l+1}B_{l+1} + B_lE_l = P_l (l = 1..3),
/// E1B1 = P0 and B4E4 = P4 on `cases` seeded random fields per level.
/// Throws std::invalid_argument when degree == 0.
IdentityReport verify_calabi_identities(const Chart& chart, std::uint64_t seed, unsigned degree, int cases,
                                        Exec exec = Exec::parallel);

struct LinearizationResult {
    CalabiField rdot;       // Ṙ[h] from the perturbed metric
    CalabiField predicted;  // -½B2[h] + 2k/(n(n-1)) g⊙h
    CalabiField balanced;   // -½B2[h] + k/(n(n-1)) g⊙h
    bool relation_holds() const { return rdot == predicted; }
    /// The variant with k/(n(n-1)), which h = g (where Ṙ[g] = R̄) singles out.
    bool balanced_relation_holds() const { return rdot == balanced; }
};

/// Riemann tensor of g + λh to first order, compared with the B2 relation.
LinearizationResult linearized_riemann_oracle(const Chart& chart, const CalabiField& h);

enum class SolutionOperator { killing, killing_yano };

struct SolutionDimension {
    std::size_t dim = 0;
    std::size_t unknowns = 0;
    unsigned degree = 0;
    unsigned sufficient_degree = 0;
    bool below_sufficient() const { return degree < sufficient_degree; }
};

/// Degree at which the polynomial ansatz is known to capture all solutions:
/// 1 on Minkowski for both operators; on (anti-)de Sitter 2 for Killing and
/// 3 for Killing–Yano, using upper-index components.
unsigned sufficient_degree(SolutionOperator op, const Chart& chart);

/// Kernel dimension of K[v]_ab = ∇_a v_b + ∇_b v_a or of
/// Y[w]_abc = ∇_a w_bc + ∇_b w_ac on fields whose upper-index components are
/// polynomials of degree <= degree, lowered with g before applying the operator.
SolutionDimension polynomial_solution_dimension(SolutionOperator op, const Chart& chart, unsigned degree);

enum class Background { minkowski4, de_sitter4 };
std::string background_tag(Background b);
std::optional<Background> background_from_tag(const std::string& tag);
Chart background_chart(Background b);

/// How the homology of the adjoint complex is placed in compact-support
/// degrees: HC^l_0 = dual of the Killing–Yano sheaf cohomology in degree
///   reflection: n - l
///   shift:      l - n
enum class IndexingRule { reflection, shift };
const char* indexing_tag(IndexingRule r);

struct IndexingCandidate {
    IndexingRule rule;
    std::vector<std::size_t> hc0;  // degrees 0..n
    bool sc_pattern = false;       // HC_sc support matches the stated one
    bool psc_pattern = false;      // HC_{P,sc} support matches the stated one
    bool fits() const { return sc_pattern && psc_pattern; }
};

/// Calabi cohomology with causally restricted supports. `table.dims` uses
/// the de Rham table layout with the Calabi complex in place of forms, and
/// solution_dims holds HC_{P,sc} and HC_P.
struct CalabiTable {
    std::string background;
    derham::CohomologyTable table;
    std::vector<std::size_t> de_rham;  // H^l(M), degrees 0..n
    std::size_t killing_dim = 0;       // dim V_g
    std::size_t killing_yano_dim = 0;  // dim W_g
    IndexingRule rule = IndexingRule::reflection;
    std::vector<IndexingCandidate> candidates;
};

/// Thrown when no indexing rule reproduces the stated vanishing patterns.
/// `candidates` carries what each rule produced.
class CalabiIndexingError : public std::runtime_error {
public:
    CalabiIndexingError(const std::string& what, std::vector<IndexingCandidate> candidates)
        : std::runtime_error(what), candidates_(std::move(candidates)) {}
    const std::vector<IndexingCandidate>& candidates() const { return candidates_; }

private:
    std::vector<IndexingCandidate> candidates_;
};

/// Stated supports of HC_sc and HC_{P,sc}: Minkowski {n-1} and {n-1, n};
/// de Sitter {n-1} and {0, n-1, n}.
std::vector<int> stated_sc_support(Background b);
std::vector<int> stated_psc_support(Background b);

/// Table for a rule, without the consistency check.
CalabiTable assemble_table(Background b, IndexingRule rule);
/// Runs every rule against the stated patterns. Picks the unique fitting
/// table (all fitting rules must agree), otherwise throws CalabiIndexingError.
CalabiTable calabi_table(Background b);

}  // namespace causalcoh::calabi

#endif  // CAUSALCOH_CALABI_HPP
