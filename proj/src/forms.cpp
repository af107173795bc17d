#include "causalcoh/forms.hpp"

#include <algorithm>
#include <numeric>

namespace causalcoh::tensor::forms {

namespace {

int permutation_sign(std::vector<int> v) {
    int sign = 1;
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j)
            if (v[i] > v[j]) sign = -sign;
    return sign;
}

void require_form(const Tensor& t, const char* what) {
    if (!is_form(t)) throw TensorShapeError(std::string(what) + " needs an antisymmetric covariant tensor");
}

}  // namespace

bool is_form(const Tensor& t) {
    if (!t.all_lower()) return false;
    std::vector<int> perm(static_cast<std::size_t>(t.rank()));
    std::iota(perm.begin(), perm.end(), 0);
    for (int s = 0; s + 1 < t.rank(); ++s) {
        std::swap(perm[static_cast<std::size_t>(s)], perm[static_cast<std::size_t>(s + 1)]);
        if (permute(t, perm) != Rational(-1) * t) return false;
        std::swap(perm[static_cast<std::size_t>(s)], perm[static_cast<std::size_t>(s + 1)]);
    }
    return true;
}

Tensor scalar(const Chart& chart, RF value) {
    Tensor t(chart.n(), 0);
    t[0] = std::move(value);
    return t;
}

Tensor antisymmetrize(const Tensor& t) {
    const int k = t.rank();
    std::vector<int> perm(static_cast<std::size_t>(k));
    std::iota(perm.begin(), perm.end(), 0);
    Tensor out(t.n(), t.variance());
    long count = 0;
    do {
        Tensor p = permute(t, perm);
        if (permutation_sign(perm) > 0)
            out += p;
        else
            out -= p;
        ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    out *= Rational(1, count);
    return out;
}

Tensor d(const Tensor& omega) {
    require_form(omega, "d");
    const int p = omega.rank();
    const int n = omega.n();
    Tensor out(n, p + 1);
    if (p + 1 > n) return out;
    for (std::size_t f = 0; f < out.size(); ++f) {
        const auto idx = out.multi(f);
        RF acc(n);
        for (int i = 0; i <= p; ++i) {
            std::vector<int> rest = idx;
            rest.erase(rest.begin() + i);
            const RF& w = omega.at(rest);
            if (w.is_zero()) continue;
            if (i % 2 == 0)
                acc += w.derivative(idx[static_cast<std::size_t>(i)]);
            else
                acc -= w.derivative(idx[static_cast<std::size_t>(i)]);
        }
        out[f] = std::move(acc);
    }
    return out;
}

Tensor wedge(const Tensor& alpha, const Tensor& beta) {
    require_form(alpha, "wedge");
    require_form(beta, "wedge");
    if (alpha.n() != beta.n()) throw ChartMismatchError("wedge of forms in different dimensions");
    const int p = alpha.rank(), q = beta.rank(), n = alpha.n();
    Tensor out(n, p + q);
    if (p + q > n) return out;
    // Shuffles: the first p output slots of each term come from `chosen`.
    std::vector<int> mask(static_cast<std::size_t>(p + q), 0);
    std::fill(mask.begin(), mask.begin() + p, 1);
    std::vector<std::pair<std::vector<int>, int>> shuffles;
    do {
        std::vector<int> order;
        for (int s = 0; s < p + q; ++s)
            if (mask[static_cast<std::size_t>(s)]) order.push_back(s);
        for (int s = 0; s < p + q; ++s)
            if (!mask[static_cast<std::size_t>(s)]) order.push_back(s);
        shuffles.emplace_back(order, permutation_sign(order));
    } while (std::prev_permutation(mask.begin(), mask.end()));
    for (std::size_t f = 0; f < out.size(); ++f) {
        const auto idx = out.multi(f);
        RF acc(n);
        for (const auto& [order, sign] : shuffles) {
            std::vector<int> ia, ib;
            for (int s = 0; s < p; ++s) ia.push_back(idx[static_cast<std::size_t>(order[static_cast<std::size_t>(s)])]);
            for (int s = p; s < p + q; ++s) ib.push_back(idx[static_cast<std::size_t>(order[static_cast<std::size_t>(s)])]);
            const RF& a = alpha.at(ia);
            if (a.is_zero()) continue;
            const RF term = a * beta.at(ib);
            if (sign > 0)
                acc += term;
            else
                acc -= term;
        }
        out[f] = std::move(acc);
    }
    return out;
}

Tensor star(const Chart& chart, const Tensor& omega) {
    chart.require(omega);
    require_form(omega, "star");
    const int n = chart.n(), p = omega.rank();
    Tensor out(n, n - p);
    for (std::size_t f = 0; f < out.size(); ++f) {
        const auto b = out.multi(f);
        std::vector<bool> used(static_cast<std::size_t>(n), false);
        bool distinct = true;
        for (int v : b) {
            if (used[static_cast<std::size_t>(v)]) distinct = false;
            used[static_cast<std::size_t>(v)] = true;
        }
        if (!distinct) continue;
        std::vector<int> a;
        for (int v = 0; v < n; ++v)
            if (!used[static_cast<std::size_t>(v)]) a.push_back(v);
        const RF& w = omega.at(a);
        if (w.is_zero()) continue;
        // The p! orderings of the complement all contribute the same term.
        RF term = chart.volume_factor() * w;
        for (int v : a) term *= chart.ginv(v);
        std::vector<int> ab = a;
        ab.insert(ab.end(), b.begin(), b.end());
        out[f] = Rational(permutation_sign(ab)) * term;
    }
    return out;
}

int codifferential_sign(int p, int n) { return (n * (p + 1)) % 2 == 0 ? -1 : 1; }

Tensor delta(const Chart& chart, const Tensor& omega) {
    chart.require(omega);
    const int p = omega.rank();
    if (p == 0) throw TensorShapeError("the codifferential of a 0-form lands in degree -1");
    return Rational(codifferential_sign(p, chart.n())) * star(chart, d(star(chart, omega)));
}

Tensor box_dR(const Chart& chart, const Tensor& omega) {
    chart.require(omega);
    const int p = omega.rank();
    Tensor out(chart.n(), p);
    if (p > 0) out += d(delta(chart, omega));
    if (p < chart.n()) out += delta(chart, d(omega));
    return out;
}

Tensor random_form(int n, int p, Rng& rng, unsigned degree, int nonzero) {
    // Components on increasing index sets, so repeated indices never waste a draw.
    Tensor t(n, p);
    for (int k = 0; k < nonzero && p <= n; ++k) {
        std::vector<int> pool(static_cast<std::size_t>(n));
        std::iota(pool.begin(), pool.end(), 0);
        for (int i = 0; i < p; ++i) std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(rng.uniform(i, n - 1))]);
        std::vector<int> idx(pool.begin(), pool.begin() + p);
        std::sort(idx.begin(), idx.end());
        t.at(idx) += random_polynomial_tensor(n, 0, rng, degree, 1)[0];
    }
    Tensor out = antisymmetrize(t);
    for (int i = 2; i <= p; ++i) out *= Rational(i);
    return out;
}

}  // namespace causalcoh::tensor::forms
