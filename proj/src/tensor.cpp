#include "causalcoh/tensor.hpp"

#include <sstream>

namespace causalcoh::tensor {

YoungDiagram YoungDiagram::parse(const std::string& comma_list) {
    YoungDiagram d;
    std::stringstream ss(comma_list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("diagram entry '" + item + "' is not an integer");
        }
        if (used != item.size()) throw std::invalid_argument("diagram entry '" + item + "' is not an integer");
        d.rows.push_back(v);
    }
    d.validate();
    return d;
}

void YoungDiagram::validate() const {
    if (rows.empty()) throw std::invalid_argument("Young diagram needs at least one row");
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i] <= 0) throw std::invalid_argument("Young diagram rows must be positive");
        if (i > 0 && rows[i] > rows[i - 1]) throw std::invalid_argument("Young diagram rows must be non-increasing");
    }
}

int YoungDiagram::cells() const {
    int c = 0;
    for (int r : rows) c += r;
    return c;
}

std::vector<int> YoungDiagram::columns() const {
    std::vector<int> cols(rows.empty() ? 0 : static_cast<std::size_t>(rows.front()), 0);
    for (int r : rows)
        for (int j = 0; j < r; ++j) ++cols[static_cast<std::size_t>(j)];
    return cols;
}

std::string YoungDiagram::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < rows.size(); ++i) s += (i ? "," : "") + std::to_string(rows[i]);
    return s + ")";
}

Tensor::Tensor(int n, int rank) : Tensor(n, std::vector<Variance>(static_cast<std::size_t>(rank), Variance::lower)) {}

Tensor::Tensor(int n, std::vector<Variance> variance) : n_(n), variance_(std::move(variance)) {
    if (n < 1 || n > poly::kMaxVars) throw TensorShapeError("chart dimension out of range");
    const auto k = variance_.size();
    strides_.assign(k, 1);
    std::size_t total = 1;
    for (std::size_t s = k; s-- > 0;) {
        strides_[s] = total;
        total *= static_cast<std::size_t>(n);
    }
    c_.assign(total, RF(n));
}

bool Tensor::all_lower() const {
    for (auto v : variance_)
        if (v != Variance::lower) return false;
    return true;
}

std::size_t Tensor::flat(const std::vector<int>& idx) const {
    if (idx.size() != variance_.size()) throw TensorShapeError("index count does not match rank");
    std::size_t f = 0;
    for (std::size_t s = 0; s < idx.size(); ++s) {
        if (idx[s] < 0 || idx[s] >= n_) throw TensorShapeError("index value out of range");
        f += static_cast<std::size_t>(idx[s]) * strides_[s];
    }
    return f;
}

std::vector<int> Tensor::multi(std::size_t f) const {
    std::vector<int> idx(variance_.size());
    for (int s = 0; s < rank(); ++s) idx[static_cast<std::size_t>(s)] = index_at(f, s);
    return idx;
}

bool Tensor::is_zero() const {
    for (const auto& x : c_)
        if (!x.is_zero()) return false;
    return true;
}

void Tensor::check_same_shape(const Tensor& o) const {
    if (n_ != o.n_ || variance_ != o.variance_) throw TensorShapeError("tensor shapes differ");
}

Tensor& Tensor::operator+=(const Tensor& o) {
    check_same_shape(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    if (symmetry != o.symmetry) symmetry.reset();
    return *this;
}

Tensor& Tensor::operator-=(const Tensor& o) {
    check_same_shape(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    if (symmetry != o.symmetry) symmetry.reset();
    return *this;
}

Tensor& Tensor::operator*=(const Rational& s) {
    for (auto& x : c_) x *= s;
    return *this;
}

Tensor& Tensor::operator*=(const RF& s) {
    for (auto& x : c_) x *= s;
    return *this;
}

bool operator==(const Tensor& a, const Tensor& b) {
    if (a.n_ != b.n_ || a.variance_ != b.variance_) return false;
    return a.c_ == b.c_;
}

Tensor permute(const Tensor& t, const std::vector<int>& perm) {
    const int k = t.rank();
    if (static_cast<int>(perm.size()) != k) throw TensorShapeError("permutation length does not match rank");
    std::vector<bool> seen(static_cast<std::size_t>(k), false);
    std::vector<Variance> var(static_cast<std::size_t>(k));
    for (int j = 0; j < k; ++j) {
        const int p = perm[static_cast<std::size_t>(j)];
        if (p < 0 || p >= k || seen[static_cast<std::size_t>(p)]) throw TensorShapeError("not a permutation");
        seen[static_cast<std::size_t>(p)] = true;
    }
    // Slot perm[j] of out feeds slot j of t.
    for (int j = 0; j < k; ++j) var[static_cast<std::size_t>(perm[static_cast<std::size_t>(j)])] = t.variance()[static_cast<std::size_t>(j)];
    Tensor out(t.n(), var);
    for (std::size_t f = 0; f < out.size(); ++f) {
        std::size_t g = 0;
        for (int j = 0; j < k; ++j) g += static_cast<std::size_t>(out.index_at(f, perm[static_cast<std::size_t>(j)])) * t.stride(j);
        out[f] = t[g];
    }
    return out;
}

Tensor outer(const Tensor& a, const Tensor& b) {
    if (a.n() != b.n()) throw TensorShapeError("outer product of tensors on different dimensions");
    auto var = a.variance();
    var.insert(var.end(), b.variance().begin(), b.variance().end());
    Tensor out(a.n(), var);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i * b.size() + j] = a[i] * b[j];
    }
    return out;
}

Tensor random_polynomial_tensor(int n, int rank, Rng& rng, unsigned degree, int nonzero) {
    Tensor t(n, rank);
    for (int k = 0; k < nonzero; ++k) {
        const auto f = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(t.size()) - 1));
        std::vector<poly::Term> terms;
        const long count = rng.uniform(1, 3);
        for (long j = 0; j < count; ++j) {
            poly::Monomial m;
            const auto d = static_cast<unsigned>(rng.uniform(0, degree));
            for (unsigned s = 0; s < d; ++s) m = m * poly::Monomial::var(static_cast<int>(rng.uniform(0, n - 1)));
            long c = 0;
            while (c == 0) c = rng.uniform(-3, 3);
            terms.push_back({m, Rational(c)});
        }
        t[f] += RF(Polynomial::from_terms(n, std::move(terms)));
    }
    return t;
}

std::string to_string(const Tensor& t) {
    std::ostringstream os;
    for (std::size_t f = 0; f < t.size(); ++f) {
        if (t[f].is_zero()) continue;
        os << "[";
        const auto idx = t.multi(f);
        for (std::size_t s = 0; s < idx.size(); ++s) os << (s ? "," : "") << idx[s];
        os << "] " << t[f].to_string() << "\n";
    }
    return os.str();
}

}  // namespace causalcoh::tensor
