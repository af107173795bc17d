#ifndef CAUSALCOH_CHART_HPP
#define CAUSALCOH_CHART_HPP

#include "causalcoh/tensor.hpp"

#include <string>
#include <utility>
#include <vector>

namespace causalcoh::tensor {

enum class ChartKind { minkowski, de_sitter, anti_de_sitter };

class ChartMismatchError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Conformally flat chart with metric g_ab = Ω² η_ab, η = diag(-1, 1, ..., 1).
///   minkowski:      Ω = 1,                k = 0
///   de Sitter:      Ω = 1/(H x^0),        k = n(n-1)H²
///   anti-de Sitter: Ω = 1/(H x^{n-1}),    k = -n(n-1)H²
/// Chart domains are formal: identities are identities of rational functions.
class Chart {
public:
    static Chart minkowski(int n);
    static Chart de_sitter(int n, const Rational& H);
    static Chart anti_de_sitter(int n, const Rational& H);

    int n() const { return n_; }
    ChartKind kind() const { return kind_; }
    const Rational& hubble() const { return H_; }
    const Rational& k() const { return k_; }
    const RF& omega() const { return omega_; }
    std::string label() const;
    std::vector<std::string> coordinate_names() const;

    int eta(int a) const { return a == 0 ? -1 : 1; }
    /// Diagonal metric and inverse metric components.
    const RF& g(int a) const { return g_[static_cast<std::size_t>(a)]; }
    const RF& ginv(int a) const { return ginv_[static_cast<std::size_t>(a)]; }
    /// φ_a = ∂_a ln Ω, and the list of its nonzero entries.
    const RF& phi(int a) const { return phi_[static_cast<std::size_t>(a)]; }
    const std::vector<std::pair<int, RF>>& phi_support() const { return phi_support_; }
    /// √|det g| = Ω^n.
    const RF& volume_factor() const { return volume_; }

    RF zero() const { return RF(n_); }
    RF constant(const Rational& c) const { return RF(n_, c); }
    RF coordinate(int i) const { return RF::variable(n_, i); }

    /// Throws ChartMismatchError unless t lives on an n-dimensional chart.
    void require(const Tensor& t) const;

    friend bool operator==(const Chart& a, const Chart& b) { return a.n_ == b.n_ && a.kind_ == b.kind_ && a.H_ == b.H_; }

private:
    Chart(int n, ChartKind kind, Rational H, RF omega, Rational k);

    int n_;
    ChartKind kind_;
    Rational H_, k_;
    RF omega_, volume_;
    std::vector<RF> g_, ginv_, phi_;
    std::vector<std::pair<int, RF>> phi_support_;
};

/// g_ab (all lower).
Tensor metric(const Chart& chart);
/// g^ab (all upper).
Tensor inverse_metric(const Chart& chart);

/// Γ^a_{bc}: variance (upper, lower, lower).
Tensor christoffel(const Chart& chart);

struct Curvature {
    Tensor riemann;  // R_abcd, all lower
    Tensor ricci;    // R_ac = R_abc^b
    RF scalar;
};

/// Riemann tensor from the Christoffel symbols, with
/// (∇_a ∇_b - ∇_b ∇_a) ω_c = R_abc^d ω_d and R_ac = R_abc^b.
Curvature curvature(const Chart& chart, Exec exec = Exec::parallel);
/// Constant curvature closed form k/(n(n-1)) (g_ac g_bd - g_bc g_ad).
Tensor riemann_closed_form(const Chart& chart);
/// True when curvature(chart) equals the closed form, the Ricci tensor is
/// (k/n) g and the scalar curvature is k.
bool curvature_matches_closed_form(const Chart& chart);

/// Single component (∇_a T)_I of the covariant derivative.
RF nabla_component(const Chart& chart, const Tensor& t, int a, std::size_t flat);
/// (∇T)_{a I} = ∇_a T_I; the new lower index is the leftmost.
Tensor nabla(const Chart& chart, const Tensor& t, Exec exec = Exec::parallel);
/// ∇^f T_{f I}, contracting the derivative with the first slot of T.
Tensor divergence(const Chart& chart, const Tensor& t, Exec exec = Exec::parallel);
/// g^{ab} ∇_a ∇_b T.
Tensor box_tensor(const Chart& chart, const Tensor& t, Exec exec = Exec::parallel);
/// Reference □ from the full second derivative ∇∇T, contracted afterwards.
Tensor box_tensor_reference(const Chart& chart, const Tensor& t);

/// Metric contraction of two lower slots i < j; other slots keep their order.
Tensor contract(const Chart& chart, const Tensor& t, int i, int j);
/// Lowers every upper slot with g.
Tensor lower_all(const Chart& chart, const Tensor& t);

/// Index patterns of the traces: h_e^e, r_{ae:b}^e, b_{abe:c}^e, b_{abce:d}^e.
enum class TraceKind { h, r, b5, b6 };
/// Throws TensorShapeError on a rank that does not match the kind.
Tensor trace(const Chart& chart, const Tensor& t, TraceKind kind);

/// The three ⊙ products of a symmetric g with t:
///   s2s2:   (g⊙h)_{abcd},    h of type (2)       -> (2,2)
///   s2_21:  (g⊙t)_{abc:de},  t_{ab:c} type (2,1) -> (2,2,1)
///   s2_211: (g⊙t)_{abcd:ef}, t_{abc:d} type (2,1,1) -> (2,2,1,1)
enum class OdotShape { s2s2, s2_21, s2_211 };
/// Throws TensorShapeError when g or t lacks the required symmetry.
Tensor odot(const Tensor& g, const Tensor& t, OdotShape shape);

/// Riemann tensor of g + λh to first order in λ, computed from the metric
/// components alone (Christoffels of the second kind from derivatives of
/// g + λh, inverse expanded to first order). Returns {R̄_abcd, Ṙ_abcd}.
std::pair<Tensor, Tensor> riemann_first_order(const Chart& chart, const Tensor& h);

}  // namespace causalcoh::tensor

#endif  // CAUSALCOH_CHART_HPP
