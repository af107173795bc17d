#include "causalcoh/young.hpp"

#include <algorithm>
#include <map>

namespace causalcoh::tensor {

namespace {

// All permutations of `slots` (as maps slot -> slot on k positions), with signs.
std::vector<std::pair<std::vector<int>, long>> symmetric_group_on(const std::vector<int>& slots, int k) {
    std::vector<std::pair<std::vector<int>, long>> out;
    std::vector<int> order(slots.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    do {
        std::vector<int> perm(static_cast<std::size_t>(k));
        for (int s = 0; s < k; ++s) perm[static_cast<std::size_t>(s)] = s;
        for (std::size_t i = 0; i < slots.size(); ++i) perm[static_cast<std::size_t>(slots[i])] = slots[static_cast<std::size_t>(order[i])];
        long sign = 1;
        for (std::size_t i = 0; i < order.size(); ++i)
            for (std::size_t j = i + 1; j < order.size(); ++j)
                if (order[i] > order[j]) sign = -sign;
        out.emplace_back(std::move(perm), sign);
    } while (std::next_permutation(order.begin(), order.end()));
    return out;
}

// Direct product of groups acting on disjoint slot sets.
std::vector<std::pair<std::vector<int>, long>> product_group(const std::vector<std::vector<int>>& blocks, int k) {
    std::vector<int> id(static_cast<std::size_t>(k));
    for (int s = 0; s < k; ++s) id[static_cast<std::size_t>(s)] = s;
    std::vector<std::pair<std::vector<int>, long>> acc{{id, 1}};
    for (const auto& b : blocks) {
        const auto g = symmetric_group_on(b, k);
        std::vector<std::pair<std::vector<int>, long>> next;
        for (const auto& [p, s] : acc)
            for (const auto& [q, t] : g) {
                // Groups act on disjoint slots, so composition is slotwise.
                std::vector<int> r = p;
                for (int x : b) r[static_cast<std::size_t>(x)] = q[static_cast<std::size_t>(x)];
                next.emplace_back(std::move(r), s * t);
            }
        acc = std::move(next);
    }
    return acc;
}

}  // namespace

mpz_class hook_product(const YoungDiagram& d) {
    d.validate();
    const auto cols = d.columns();
    mpz_class h = 1;
    for (std::size_t i = 0; i < d.rows.size(); ++i)
        for (int j = 0; j < d.rows[i]; ++j) {
            const int arm = d.rows[i] - j - 1;
            const int leg = cols[static_cast<std::size_t>(j)] - static_cast<int>(i) - 1;
            h *= arm + leg + 1;
        }
    return h;
}

std::size_t hook_rank(const YoungDiagram& d, int n) {
    d.validate();
    if (n < 0) throw std::invalid_argument("dimension must be non-negative");
    mpz_class num = 1;
    for (std::size_t i = 0; i < d.rows.size(); ++i)
        for (int j = 0; j < d.rows[i]; ++j) num *= n + j - static_cast<int>(i);
    if (num <= 0) return 0;
    const mpz_class q = num / hook_product(d);
    return q.get_ui();
}

YoungProjector::YoungProjector(YoungDiagram diagram) : diagram_(std::move(diagram)) {
    diagram_.validate();
    k_ = diagram_.cells();
    const auto col_lengths = diagram_.columns();
    std::vector<int> col_start(col_lengths.size(), 0);
    for (std::size_t j = 1; j < col_lengths.size(); ++j) col_start[j] = col_start[j - 1] + col_lengths[j - 1];
    cols_.resize(col_lengths.size());
    rows_.resize(diagram_.rows.size());
    for (std::size_t j = 0; j < col_lengths.size(); ++j)
        for (int i = 0; i < col_lengths[j]; ++i) {
            const int slot = col_start[j] + i;
            cols_[j].push_back(slot);
            rows_[static_cast<std::size_t>(i)].push_back(slot);
        }
    row_group_ = product_group(rows_, k_);
    for (auto& entry : row_group_) entry.second = 1;
    col_group_ = product_group(cols_, k_);
    hook_ = tensor::hook_product(diagram_);

    // (A S t)(I) = Σ_τ sgn τ Σ_σ t(I_{τ(σ(0))}, ...).
    std::map<std::vector<int>, long> merged;
    for (const auto& [tau, sign] : col_group_)
        for (const auto& [sigma, unused] : row_group_) {
            std::vector<int> p(static_cast<std::size_t>(k_));
            for (int j = 0; j < k_; ++j) p[static_cast<std::size_t>(j)] = tau[static_cast<std::size_t>(sigma[static_cast<std::size_t>(j)])];
            merged[p] += sign;
        }
    for (auto& [p, c] : merged)
        if (c != 0) expansion_.push_back({p, c});
}

Tensor YoungProjector::apply(const Tensor& t, Exec exec) const {
    if (t.rank() != k_ || !t.all_lower())
        throw TensorShapeError("diagram " + diagram_.to_string() + " needs an all-lower rank-" + std::to_string(k_) + " tensor");
    const int n = t.n();
    const Rational inv(mpz_class(1), hook_);
    auto act = [&](const Tensor& src, const std::vector<std::pair<std::vector<int>, long>>& group) {
        Tensor out(n, k_);
        for_each_component(src.size(), exec, [&](std::size_t f) {
            RF acc(n);
            for (const auto& [perm, sign] : group) {
                std::size_t g = 0;
                for (int j = 0; j < k_; ++j) g += static_cast<std::size_t>(src.index_at(f, perm[static_cast<std::size_t>(j)])) * src.stride(j);
                if (src[g].is_zero()) continue;
                if (sign > 0)
                    acc += src[g];
                else
                    acc -= src[g];
            }
            out[f] = std::move(acc);
        });
        return out;
    };
    // Row symmetrization first, then column antisymmetrization.
    Tensor out = act(act(t, row_group_), col_group_);
    out *= inv;
    out.symmetry = diagram_;
    return out;
}

Tensor project(const Tensor& t, const YoungDiagram& d, Exec exec) { return YoungProjector(d).apply(t, exec); }

bool has_symmetry(const Tensor& t, const YoungDiagram& d) {
    if (t.rank() != d.cells()) return false;
    return project(t, d) == t;
}

namespace {

// Matrix of π restricted to the arrangements of one multiset of index values.
MatrixQ block_matrix(const YoungProjector& p, const std::vector<std::vector<int>>& basis) {
    std::map<std::vector<int>, std::size_t> pos;
    for (std::size_t i = 0; i < basis.size(); ++i) pos.emplace(basis[i], i);
    MatrixQ m(basis.size(), basis.size());
    const Rational inv(mpz_class(1), p.hook_product());
    std::vector<int> j(static_cast<std::size_t>(p.cells()));
    for (std::size_t r = 0; r < basis.size(); ++r)
        for (const auto& term : p.expansion()) {
            for (int s = 0; s < p.cells(); ++s) j[static_cast<std::size_t>(s)] = basis[r][static_cast<std::size_t>(term.perm[static_cast<std::size_t>(s)])];
            m(r, pos.at(j)) += inv * term.coeff;
        }
    return m;
}

}  // namespace

MatrixQ young_projector(const YoungDiagram& d, int k_indices, int n) {
    d.validate();
    if (d.cells() != k_indices)
        throw TensorShapeError("diagram " + d.to_string() + " has " + std::to_string(d.cells()) + " cells, not " + std::to_string(k_indices));
    std::size_t total = 1;
    for (int i = 0; i < k_indices; ++i) {
        total *= static_cast<std::size_t>(n);
        if (total > 1024) throw TensorShapeError("dense projector limited to 1024 components; use audit_projector");
    }
    const YoungProjector p(d);
    std::vector<std::vector<int>> basis;
    const Tensor shape(n, k_indices);
    for (std::size_t f = 0; f < total; ++f) basis.push_back(shape.multi(f));
    return block_matrix(p, basis);
}

ProjectorAudit audit_projector(const YoungDiagram& d, int n) {
    const YoungProjector p(d);
    const int k = p.cells();
    ProjectorAudit audit;
    // Enumerate multisets as non-decreasing sequences over [0, n).
    std::vector<int> content(static_cast<std::size_t>(k), 0);
    while (true) {
        std::vector<std::vector<int>> basis;
        std::vector<int> arrangement = content;
        do basis.push_back(arrangement);
        while (std::next_permutation(arrangement.begin(), arrangement.end()));
        const MatrixQ m = block_matrix(p, basis);
        audit.rank += rank(m);
        if (!(m * m == m)) audit.idempotent = false;
        ++audit.blocks;

        int pos = k - 1;
        while (pos >= 0 && content[static_cast<std::size_t>(pos)] == n - 1) --pos;
        if (pos < 0) break;
        const int v = content[static_cast<std::size_t>(pos)] + 1;
        for (int s = pos; s < k; ++s) content[static_cast<std::size_t>(s)] = v;
    }
    return audit;
}

}  // namespace causalcoh::tensor
