#include "causalcoh/chart.hpp"

#include "causalcoh/young.hpp"

namespace causalcoh::tensor {

Chart::Chart(int n, ChartKind kind, Rational H, RF omega, Rational k)
    : n_(n), kind_(kind), H_(std::move(H)), k_(std::move(k)), omega_(std::move(omega)) {
    const RF omega2 = omega_ * omega_;
    const RF inv2 = omega2.inverse();
    for (int a = 0; a < n_; ++a) {
        g_.push_back(Rational(eta(a)) * omega2);
        ginv_.push_back(Rational(eta(a)) * inv2);
        phi_.push_back(omega_.derivative(a) / omega_);
        if (!phi_.back().is_zero()) phi_support_.emplace_back(a, phi_.back());
    }
    volume_ = omega_.pow(n_);
}

namespace {

void check_dimension(int n) {
    if (n < 2 || n > poly::kMaxVars) throw std::invalid_argument("chart dimension must lie in [2, " + std::to_string(poly::kMaxVars) + "]");
}

void check_hubble(const Rational& H) {
    if (H <= 0) throw std::invalid_argument("H must be positive");
}

}  // namespace

Chart Chart::minkowski(int n) {
    check_dimension(n);
    return Chart(n, ChartKind::minkowski, 0, RF(n, 1), 0);
}

Chart Chart::de_sitter(int n, const Rational& H) {
    check_dimension(n);
    check_hubble(H);
    RF omega(Polynomial(n, 1), H * Polynomial::variable(n, 0));
    return Chart(n, ChartKind::de_sitter, H, std::move(omega), Rational(n * (n - 1)) * H * H);
}

Chart Chart::anti_de_sitter(int n, const Rational& H) {
    check_dimension(n);
    check_hubble(H);
    RF omega(Polynomial(n, 1), H * Polynomial::variable(n, n - 1));
    return Chart(n, ChartKind::anti_de_sitter, H, std::move(omega), Rational(-n * (n - 1)) * H * H);
}

std::string Chart::label() const {
    switch (kind_) {
        case ChartKind::minkowski: return "minkowski n=" + std::to_string(n_);
        case ChartKind::de_sitter: return "deSitter n=" + std::to_string(n_) + " H=" + H_.get_str();
        case ChartKind::anti_de_sitter: return "antiDeSitter n=" + std::to_string(n_) + " H=" + H_.get_str();
    }
    return "?";
}

std::vector<std::string> Chart::coordinate_names() const {
    std::vector<std::string> names;
    for (int i = 0; i < n_; ++i) names.push_back("x" + std::to_string(i));
    return names;
}

void Chart::require(const Tensor& t) const {
    if (t.n() != n_)
        throw ChartMismatchError("tensor lives in dimension " + std::to_string(t.n()) + ", chart has dimension " + std::to_string(n_));
}

Tensor metric(const Chart& chart) {
    Tensor g(chart.n(), 2);
    for (int a = 0; a < chart.n(); ++a) g.at({a, a}) = chart.g(a);
    g.symmetry = YoungDiagram{{2}};
    return g;
}

Tensor inverse_metric(const Chart& chart) {
    Tensor g(chart.n(), {Variance::upper, Variance::upper});
    for (int a = 0; a < chart.n(); ++a) g.at({a, a}) = chart.ginv(a);
    return g;
}

Tensor christoffel(const Chart& chart) {
    const int n = chart.n();
    Tensor gamma(n, {Variance::upper, Variance::lower, Variance::lower});
    for (int d = 0; d < n; ++d)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                RF v = chart.zero();
                if (d == b) v += chart.phi(c);
                if (d == c) v += chart.phi(b);
                if (b == c) v -= Rational(chart.eta(b) * chart.eta(d)) * chart.phi(d);
                gamma.at({d, b, c}) = std::move(v);
            }
    return gamma;
}

RF nabla_component(const Chart& chart, const Tensor& t, int a, std::size_t f) {
    RF r = t[f].derivative(a);
    const auto shifted = [&](int slot, int from, int to) {
        return static_cast<std::size_t>(static_cast<long>(f) + (static_cast<long>(to) - from) * static_cast<long>(t.stride(slot)));
    };
    const RF& phi_a = chart.phi(a);
    for (int slot = 0; slot < t.rank(); ++slot) {
        const int c = t.index_at(f, slot);
        if (t.variance()[static_cast<std::size_t>(slot)] == Variance::lower) {
            // Σ_e Γ^e_{ac} T_{..e..} = φ_c T_{..a..} + φ_a T_{..c..} - η_ac Σ_e η^ee φ_e T_{..e..}
            if (!chart.phi(c).is_zero()) r -= chart.phi(c) * t[shifted(slot, c, a)];
            if (!phi_a.is_zero()) r -= phi_a * t[f];
            if (a == c)
                for (const auto& [e, phi_e] : chart.phi_support()) r += Rational(chart.eta(a) * chart.eta(e)) * phi_e * t[shifted(slot, c, e)];
        } else {
            // Σ_e Γ^c_{ae} T^{..e..} = δ^c_a Σ_e φ_e T^{..e..} + φ_a T^{..c..} - η^cc φ_c η_aa T^{..a..}
            if (a == c)
                for (const auto& [e, phi_e] : chart.phi_support()) r += phi_e * t[shifted(slot, c, e)];
            if (!phi_a.is_zero()) r += phi_a * t[f];
            if (!chart.phi(c).is_zero()) r -= Rational(chart.eta(c) * chart.eta(a)) * chart.phi(c) * t[shifted(slot, c, a)];
        }
    }
    return r;
}

Tensor nabla(const Chart& chart, const Tensor& t, Exec exec) {
    chart.require(t);
    auto var = t.variance();
    var.insert(var.begin(), Variance::lower);
    Tensor out(chart.n(), var);
    const std::size_t block = t.size();
    for_each_component(out.size(), exec, [&](std::size_t f) {
        out[f] = nabla_component(chart, t, static_cast<int>(f / block), f % block);
    });
    return out;
}

Tensor divergence(const Chart& chart, const Tensor& t, Exec exec) {
    chart.require(t);
    if (t.rank() < 1 || t.variance()[0] != Variance::lower) throw TensorShapeError("divergence needs a lower first slot");
    std::vector<Variance> var(t.variance().begin() + 1, t.variance().end());
    Tensor out(chart.n(), var);
    const std::size_t s0 = t.stride(0);
    for_each_component(out.size(), exec, [&](std::size_t f) {
        RF acc = chart.zero();
        for (int e = 0; e < chart.n(); ++e) acc += chart.ginv(e) * nabla_component(chart, t, e, static_cast<std::size_t>(e) * s0 + f);
        out[f] = std::move(acc);
    });
    return out;
}

Tensor box_tensor(const Chart& chart, const Tensor& t, Exec exec) {
    chart.require(t);
    const Tensor first = nabla(chart, t, exec);
    Tensor out(chart.n(), t.variance());
    const std::size_t s0 = first.stride(0);
    for_each_component(out.size(), exec, [&](std::size_t f) {
        RF acc = chart.zero();
        for (int a = 0; a < chart.n(); ++a) acc += chart.ginv(a) * nabla_component(chart, first, a, static_cast<std::size_t>(a) * s0 + f);
        out[f] = std::move(acc);
    });
    out.symmetry = t.symmetry;
    return out;
}

Tensor box_tensor_reference(const Chart& chart, const Tensor& t) {
    const Tensor second = nabla(chart, nabla(chart, t, Exec::serial), Exec::serial);
    Tensor out = contract(chart, second, 0, 1);
    out.symmetry = t.symmetry;
    return out;
}

Tensor contract(const Chart& chart, const Tensor& t, int i, int j) {
    chart.require(t);
    if (i < 0 || j <= i || j >= t.rank()) throw TensorShapeError("contraction slots must satisfy 0 <= i < j < rank");
    if (t.variance()[static_cast<std::size_t>(i)] != Variance::lower || t.variance()[static_cast<std::size_t>(j)] != Variance::lower)
        throw TensorShapeError("metric contraction needs two lower slots");
    std::vector<Variance> var;
    for (int s = 0; s < t.rank(); ++s)
        if (s != i && s != j) var.push_back(t.variance()[static_cast<std::size_t>(s)]);
    Tensor out(chart.n(), var);
    for (std::size_t f = 0; f < out.size(); ++f) {
        // Reinsert the contracted slots at positions i and j.
        std::vector<int> idx = out.multi(f);
        idx.insert(idx.begin() + i, 0);
        idx.insert(idx.begin() + j, 0);
        RF acc = chart.zero();
        for (int e = 0; e < chart.n(); ++e) {
            idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(j)] = e;
            const RF& v = t.at(idx);
            if (!v.is_zero()) acc += chart.ginv(e) * v;
        }
        out[f] = std::move(acc);
    }
    return out;
}

Tensor lower_all(const Chart& chart, const Tensor& t) {
    chart.require(t);
    Tensor out(chart.n(), t.rank());
    for (std::size_t f = 0; f < t.size(); ++f) {
        RF v = t[f];
        for (int s = 0; s < t.rank(); ++s)
            if (t.variance()[static_cast<std::size_t>(s)] == Variance::upper) v *= chart.g(t.index_at(f, s));
        out[f] = std::move(v);
    }
    return out;
}

Tensor trace(const Chart& chart, const Tensor& t, TraceKind kind) {
    switch (kind) {
        case TraceKind::h:
            if (t.rank() != 2) throw TensorShapeError("tr[h] needs a rank-2 tensor");
            return contract(chart, t, 0, 1);
        case TraceKind::r:
            if (t.rank() != 4) throw TensorShapeError("tr[r] needs a rank-4 tensor");
            return contract(chart, t, 1, 3);
        case TraceKind::b5:
            if (t.rank() != 5) throw TensorShapeError("tr[b] for level 3 needs a rank-5 tensor");
            return contract(chart, t, 2, 4);
        case TraceKind::b6:
            if (t.rank() != 6) throw TensorShapeError("tr[b] for level 4 needs a rank-6 tensor");
            return contract(chart, t, 3, 5);
    }
    throw TensorShapeError("unknown trace kind");
}

Curvature curvature(const Chart& chart, Exec exec) {
    const int n = chart.n();
    const Tensor gamma = christoffel(chart);
    auto G = [&](int d, int a, int c) -> const RF& { return gamma.at({d, a, c}); };
    // R_abc^d = ∂_b Γ^d_ac - ∂_a Γ^d_bc + Γ^e_ac Γ^d_be - Γ^e_bc Γ^d_ae
    Tensor mixed(n, {Variance::lower, Variance::lower, Variance::lower, Variance::upper});
    for_each_component(mixed.size(), exec, [&](std::size_t f) {
        const int a = mixed.index_at(f, 0), b = mixed.index_at(f, 1), c = mixed.index_at(f, 2), d = mixed.index_at(f, 3);
        RF v = G(d, a, c).derivative(b) - G(d, b, c).derivative(a);
        for (int e = 0; e < n; ++e) v += G(e, a, c) * G(d, b, e) - G(e, b, c) * G(d, a, e);
        mixed[f] = std::move(v);
    });
    Curvature out{lower_all(chart, mixed), Tensor(n, 2), chart.zero()};
    out.riemann.symmetry = YoungDiagram{{2, 2}};
    for (int a = 0; a < n; ++a)
        for (int c = 0; c < n; ++c) {
            RF v = chart.zero();
            for (int b = 0; b < n; ++b) v += mixed.at({a, b, c, b});
            out.ricci.at({a, c}) = std::move(v);
        }
    for (int a = 0; a < n; ++a) out.scalar += chart.ginv(a) * out.ricci.at({a, a});
    return out;
}

Tensor riemann_closed_form(const Chart& chart) {
    const int n = chart.n();
    const Rational c = chart.k() / Rational(n * (n - 1));
    Tensor r(n, 4);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (a == b) continue;
            r.at({a, b, a, b}) = c * chart.g(a) * chart.g(b);
            r.at({a, b, b, a}) = -(c * chart.g(a) * chart.g(b));
        }
    r.symmetry = YoungDiagram{{2, 2}};
    return r;
}

bool curvature_matches_closed_form(const Chart& chart) {
    const Curvature cur = curvature(chart);
    Tensor ricci = Rational(chart.k() / chart.n()) * metric(chart);
    return cur.riemann == riemann_closed_form(chart) && cur.ricci == ricci && cur.scalar == chart.constant(chart.k());
}

Tensor odot(const Tensor& g, const Tensor& t, OdotShape shape) {
    if (g.rank() != 2 || !g.all_lower() || permute(g, {1, 0}) != g) throw TensorShapeError("odot needs a symmetric covariant 2-tensor g");
    if (g.n() != t.n()) throw ChartMismatchError("odot operands live in different dimensions");
    const int n = g.n();
    auto G = [&](int a, int b) -> const RF& { return g.at({a, b}); };
    switch (shape) {
        case OdotShape::s2s2: {
            if (t.rank() != 2 || !has_symmetry(t, YoungDiagram{{2}})) throw TensorShapeError("s2s2 needs a symmetric 2-tensor");
            auto H = [&](int a, int b) -> const RF& { return t.at({a, b}); };
            Tensor out(n, 4);
            for (std::size_t f = 0; f < out.size(); ++f) {
                const int a = out.index_at(f, 0), b = out.index_at(f, 1), c = out.index_at(f, 2), d = out.index_at(f, 3);
                out[f] = G(a, c) * H(b, d) - G(b, c) * H(a, d) - G(a, d) * H(b, c) + G(b, d) * H(a, c);
            }
            out.symmetry = YoungDiagram{{2, 2}};
            return out;
        }
        case OdotShape::s2_21: {
            if (t.rank() != 3 || !has_symmetry(t, YoungDiagram{{2, 1}})) throw TensorShapeError("s2_21 needs a tensor of type (2,1)");
            auto T = [&](int a, int b, int c) -> const RF& { return t.at({a, b, c}); };
            Tensor out(n, 5);
            for (std::size_t f = 0; f < out.size(); ++f) {
                const int a = out.index_at(f, 0), b = out.index_at(f, 1), c = out.index_at(f, 2), d = out.index_at(f, 3), e = out.index_at(f, 4);
                out[f] = G(a, d) * T(b, c, e) + G(b, d) * T(c, a, e) + G(c, d) * T(a, b, e) - G(a, e) * T(b, c, d) - G(b, e) * T(c, a, d) -
                         G(c, e) * T(a, b, d);
            }
            out.symmetry = YoungDiagram{{2, 2, 1}};
            return out;
        }
        case OdotShape::s2_211: {
            if (t.rank() != 4 || !has_symmetry(t, YoungDiagram{{2, 1, 1}})) throw TensorShapeError("s2_211 needs a tensor of type (2,1,1)");
            auto T = [&](int a, int b, int c, int d) -> const RF& { return t.at({a, b, c, d}); };
            Tensor out(n, 6);
            for (std::size_t f = 0; f < out.size(); ++f) {
                const int a = out.index_at(f, 0), b = out.index_at(f, 1), c = out.index_at(f, 2), d = out.index_at(f, 3), e = out.index_at(f, 4),
                          ff = out.index_at(f, 5);
                out[f] = G(a, e) * T(b, c, d, ff) - G(b, e) * T(c, d, a, ff) + G(c, e) * T(d, a, b, ff) - G(d, e) * T(a, b, c, ff) -
                         G(a, ff) * T(b, c, d, e) + G(b, ff) * T(c, d, a, e) - G(c, ff) * T(d, a, b, e) + G(d, ff) * T(a, b, c, e);
            }
            out.symmetry = YoungDiagram{{2, 2, 1, 1}};
            return out;
        }
    }
    throw TensorShapeError("unknown odot shape");
}

namespace {

// First-order jet a + λ b.
struct Dual {
    RF a, b;
    Dual operator+(const Dual& o) const { return {a + o.a, b + o.b}; }
    Dual operator-(const Dual& o) const { return {a - o.a, b - o.b}; }
    Dual operator*(const Dual& o) const { return {a * o.a, a * o.b + b * o.a}; }
    Dual derivative(int i) const { return {a.derivative(i), b.derivative(i)}; }
};

}  // namespace

std::pair<Tensor, Tensor> riemann_first_order(const Chart& chart, const Tensor& h) {
    chart.require(h);
    if (h.rank() != 2 || !h.all_lower() || permute(h, {1, 0}) != h) throw TensorShapeError("perturbation must be a symmetric covariant 2-tensor");
    const int n = chart.n();
    const auto N = static_cast<std::size_t>(n);
    const RF zero = chart.zero();
    std::vector<Dual> G(N * N), Ginv(N * N);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            const auto ab = static_cast<std::size_t>(a * n + b);
            G[ab] = {a == b ? chart.g(a) : zero, h.at({a, b})};
            // (g + λh)^{-1} = g^{-1} - λ g^{-1} h g^{-1} + O(λ²)
            Ginv[ab] = {a == b ? chart.ginv(a) : zero, -(chart.ginv(a) * h.at({a, b}) * chart.ginv(b))};
        }
    auto at = [N](int a, int b) { return static_cast<std::size_t>(a) * N + static_cast<std::size_t>(b); };
    std::vector<Dual> dG(N * N * N);  // dG[(c, a, b)] = ∂_c G_ab
    for (int c = 0; c < n; ++c)
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) dG[static_cast<std::size_t>(c) * N * N + at(a, b)] = G[at(a, b)].derivative(c);
    auto dg = [&](int c, int a, int b) -> const Dual& { return dG[static_cast<std::size_t>(c) * N * N + at(a, b)]; };

    // Γ^d_ac = ½ g^de (∂_a g_ec + ∂_c g_ea - ∂_e g_ac)
    std::vector<Dual> gamma(N * N * N, Dual{zero, zero});
    auto Gm = [&](int d, int a, int c) -> Dual& { return gamma[static_cast<std::size_t>(d) * N * N + at(a, c)]; };
    const Dual half{chart.constant(Rational(1, 2)), zero};
    for (int d = 0; d < n; ++d)
        for (int a = 0; a < n; ++a)
            for (int c = 0; c < n; ++c) {
                Dual s{zero, zero};
                for (int e = 0; e < n; ++e) s = s + Ginv[at(d, e)] * (dg(a, e, c) + dg(c, e, a) - dg(e, a, c));
                Gm(d, a, c) = half * s;
            }

    Tensor background(n, 4), first(n, 4);
    for (std::size_t f = 0; f < background.size(); ++f) {
        const int a = background.index_at(f, 0), b = background.index_at(f, 1), c = background.index_at(f, 2), d = background.index_at(f, 3);
        // R_abcd = R_abc^e g_ed
        Dual r{zero, zero};
        for (int e = 0; e < n; ++e) {
            Dual up = Gm(e, a, c).derivative(b) - Gm(e, b, c).derivative(a);
            for (int q = 0; q < n; ++q) up = up + Gm(q, a, c) * Gm(e, b, q) - Gm(q, b, c) * Gm(e, a, q);
            r = r + up * G[at(e, d)];
        }
        background[f] = std::move(r.a);
        first[f] = std::move(r.b);
    }
    background.symmetry = first.symmetry = YoungDiagram{{2, 2}};
    return {background, first};
}

}  // namespace causalcoh::tensor
