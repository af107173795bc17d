#ifndef CAUSALCOH_FORMS_HPP
#define CAUSALCOH_FORMS_HPP

#include "causalcoh/chart.hpp"

namespace causalcoh::tensor::forms {

/// A p-form is an all-lower antisymmetric rank-p tensor; a 0-form is a
/// rank-0 tensor.
bool is_form(const Tensor& t);

Tensor scalar(const Chart& chart, RF value);

/// Antisymmetric part, (1/p!) Σ sgn(σ) ω∘σ.
Tensor antisymmetrize(const Tensor& t);

/// (dω)_{a0..ap} = Σ_i (-1)^i ∂_{a_i} ω_{a0..âi..ap}.
Tensor d(const Tensor& omega);
/// (α∧β) = Σ over (p,q)-shuffles of sgn · α ⊗ β.
Tensor wedge(const Tensor& alpha, const Tensor& beta);
/// (*ω)_{b1..b(n-p)} = (1/p!) √|g| ω^{a1..ap} ε_{a1..ap b1..b(n-p)}, ε_{01..n-1} = +1.
Tensor star(const Chart& chart, const Tensor& omega);

/// Sign s(p, n) in δ = s(p, n) *d* on p-forms. It is fixed by requiring δ
/// to be the divergence δω_{b..} = +∇^a ω_{ab..}, which makes the scalar
/// wave operator on Minkowski space η^{ab} ∂_a ∂_b. With the Lorentzian
/// star this gives s(p, n) = (-1)^{n(p+1)+1}.
int codifferential_sign(int p, int n);
Tensor delta(const Chart& chart, const Tensor& omega);
/// dδ + δd.
Tensor box_dR(const Chart& chart, const Tensor& omega);

/// Random polynomial p-form: a few random components, antisymmetrized.
Tensor random_form(int n, int p, Rng& rng, unsigned degree, int nonzero);

}  // namespace causalcoh::tensor::forms

#endif  // CAUSALCOH_FORMS_HPP
