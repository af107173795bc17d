#include "causalcoh/complex.hpp"

#include <algorithm>
#include <stdexcept>

namespace causalcoh::hom {

namespace {

std::string shape(const MatrixQ& m) { return std::to_string(m.rows()) + "x" + std::to_string(m.cols()); }

}  // namespace

CochainComplex CochainComplex::unchecked(int p_min, std::vector<std::size_t> dims, std::vector<MatrixQ> diffs) {
    CochainComplex c;
    c.p_min_ = p_min;
    c.dims_ = std::move(dims);
    if (diffs.size() > c.dims_.size()) throw ShapeError("more differentials than degrees");
    c.d_ = std::move(diffs);
    for (std::size_t i = c.d_.size(); i < c.dims_.size(); ++i) {
        const std::size_t next = i + 1 < c.dims_.size() ? c.dims_[i + 1] : 0;
        c.d_.push_back(MatrixQ::zero(next, c.dims_[i]));
    }
    for (std::size_t i = 0; i < c.dims_.size(); ++i) {
        const std::size_t next = i + 1 < c.dims_.size() ? c.dims_[i + 1] : 0;
        if (c.d_[i].rows() != next || c.d_[i].cols() != c.dims_[i])
            throw ShapeError("d(" + std::to_string(p_min + static_cast<int>(i)) + ") has shape " + shape(c.d_[i]) +
                             ", expected " + std::to_string(next) + "x" + std::to_string(c.dims_[i]));
    }
    return c;
}

CochainComplex::CochainComplex(int p_min, std::vector<std::size_t> dims, std::vector<MatrixQ> diffs) {
    *this = unchecked(p_min, std::move(dims), std::move(diffs));
    validate();
}

std::size_t CochainComplex::dim(int p) const {
    if (p < p_min() || p > p_max()) return 0;
    return dims_[static_cast<std::size_t>(p - p_min_)];
}

MatrixQ CochainComplex::d(int p) const {
    if (p < p_min() || p > p_max()) return MatrixQ::zero(dim(p + 1), dim(p));
    return d_[static_cast<std::size_t>(p - p_min_)];
}

std::optional<int> CochainComplex::first_violation() const {
    for (int p = p_min(); p < p_max(); ++p)
        if (!(d(p + 1) * d(p)).is_zero()) return p;
    return std::nullopt;
}

void CochainComplex::validate() const {
    if (auto p = first_violation())
        throw InvalidComplexError(*p, "d(" + std::to_string(*p + 1) + ") * d(" + std::to_string(*p) + ") != 0");
}

long CochainComplex::euler_characteristic() const {
    long chi = 0;
    for (int p = p_min(); p <= p_max(); ++p) chi += (p % 2 == 0 ? 1 : -1) * static_cast<long>(dim(p));
    return chi;
}

CochainComplex CochainComplex::direct_sum(const CochainComplex& other) const {
    if (empty()) return other;
    if (other.empty()) return *this;
    const int lo = std::min(p_min(), other.p_min());
    const int hi = std::max(p_max(), other.p_max());
    std::vector<std::size_t> dims;
    std::vector<MatrixQ> diffs;
    for (int p = lo; p <= hi; ++p) {
        dims.push_back(dim(p) + other.dim(p));
        diffs.push_back(d(p).direct_sum(other.d(p)));
    }
    // The top differential must land in the zero space.
    diffs.back() = MatrixQ::zero(0, dims.back());
    return CochainComplex(lo, std::move(dims), std::move(diffs));
}

CochainComplex CochainComplex::cone_of_identity() const {
    if (empty()) return *this;
    const int lo = p_min() - 1;
    const int hi = p_max();
    std::vector<std::size_t> dims;
    std::vector<MatrixQ> diffs;
    for (int p = lo; p <= hi; ++p) dims.push_back(dim(p + 1) + dim(p));
    for (int p = lo; p <= hi; ++p) {
        // Source (a, b) in C^{p+1} ⊕ C^p; target in C^{p+2} ⊕ C^{p+1}.
        const std::size_t a = dim(p + 1), b = dim(p), ta = dim(p + 2), tb = dim(p + 1);
        MatrixQ m(ta + tb, a + b);
        if (p == hi) m = MatrixQ::zero(0, a + b);
        else {
            const MatrixQ da = d(p + 1), db = d(p);
            for (std::size_t r = 0; r < ta; ++r)
                for (std::size_t c = 0; c < a; ++c) m(r, c) = -da(r, c);
            for (std::size_t r = 0; r < tb; ++r) {
                m(ta + r, r) = 1;
                for (std::size_t c = 0; c < b; ++c) m(ta + r, a + c) = db(r, c);
            }
        }
        diffs.push_back(std::move(m));
    }
    return CochainComplex(lo, std::move(dims), std::move(diffs));
}

MatrixQ CochainMap::at(int p) const {
    if (auto it = f.find(p); it != f.end()) return it->second;
    return MatrixQ::zero(target.dim(p), source.dim(p));
}

std::optional<int> CochainMap::first_violation() const {
    const int lo = std::min(source.p_min(), target.p_min()) - 1;
    const int hi = std::max(source.p_max(), target.p_max());
    for (int p = lo; p <= hi; ++p)
        if (!(at(p + 1) * source.d(p) == target.d(p) * at(p))) return p;
    return std::nullopt;
}

void CochainMap::validate() const {
    for (const auto& [p, m] : f)
        if (m.rows() != target.dim(p) || m.cols() != source.dim(p))
            throw ShapeError("f(" + std::to_string(p) + ") has shape " + shape(m));
    if (auto p = first_violation())
        throw InvalidComplexError(*p, "cochain map does not commute with d at degree " + std::to_string(*p));
}

CochainMap CochainMap::identity(const CochainComplex& c) {
    CochainMap m{c, c, {}};
    for (int p = c.p_min(); p <= c.p_max(); ++p) m.f[p] = MatrixQ::identity(c.dim(p));
    return m;
}

CochainMap CochainMap::zero(const CochainComplex& source, const CochainComplex& target) {
    return CochainMap{source, target, {}};
}

MatrixQ CochainHomotopy::at(int p, const CochainComplex& source, const CochainComplex& target) const {
    if (auto it = h.find(p); it != h.end()) {
        if (it->second.rows() != target.dim(p - 1) || it->second.cols() != source.dim(p))
            throw ShapeError("h(" + std::to_string(p) + ") has shape " + shape(it->second) + ", expected " +
                             std::to_string(target.dim(p - 1)) + "x" + std::to_string(source.dim(p)));
        return it->second;
    }
    return MatrixQ::zero(target.dim(p - 1), source.dim(p));
}

CochainMap homotopy_boundary(const CochainComplex& source, const CochainComplex& target, const CochainHomotopy& h) {
    CochainMap out{source, target, {}};
    for (int p = source.p_min(); p <= source.p_max(); ++p)
        out.f[p] = target.d(p - 1) * h.at(p, source, target) + h.at(p + 1, source, target) * source.d(p);
    return out;
}

CohomologySpace cohomology(const CochainComplex& c, int p) {
    const MatrixQ dp = c.d(p);
    const MatrixQ dprev = c.d(p - 1);
    if (!(dp * dprev).is_zero())
        throw InvalidComplexError(p - 1, "d(" + std::to_string(p) + ") * d(" + std::to_string(p - 1) + ") != 0");

    CohomologySpace out;
    out.degree = p;
    out.ambient_dim = c.dim(p);
    out.boundary_basis = dprev.columns(independent_columns(dprev));

    const MatrixQ z = kernel_basis(dp);
    const MatrixQ stacked = out.boundary_basis.hstack(z);
    std::vector<std::size_t> reps;
    for (auto col : independent_columns(stacked))
        if (col >= out.boundary_basis.cols()) reps.push_back(col - out.boundary_basis.cols());
    out.cocycle_basis = z.columns(reps);
    out.dim = reps.size();
    return out;
}

MatrixQ class_coordinates(const CohomologySpace& h, const MatrixQ& v) {
    if (v.rows() != h.ambient_dim) throw ShapeError("class_coordinates: vector length differs from ambient dimension");
    const MatrixQ basis = h.boundary_basis.hstack(h.cocycle_basis);
    const auto x = solve(basis, v);
    if (!x) throw std::invalid_argument("class_coordinates: vector is not a cocycle of this degree");
    MatrixQ out(h.dim, v.cols());
    const std::size_t off = h.boundary_basis.cols();
    for (std::size_t r = 0; r < h.dim; ++r)
        for (std::size_t c = 0; c < v.cols(); ++c) out(r, c) = (*x)(off + r, c);
    return out;
}

MatrixQ induced_map(const CochainMap& f, int p) {
    const auto hs = cohomology(f.source, p);
    const auto ht = cohomology(f.target, p);
    if (hs.dim == 0 || ht.dim == 0) return MatrixQ::zero(ht.dim, hs.dim);
    return class_coordinates(ht, f.at(p) * hs.cocycle_basis);
}

bool check_null_homotopy(const CochainMap& f, const CochainHomotopy& h) {
    const auto& s = f.source;
    const auto& t = f.target;
    for (const auto& [p, m] : f.f)
        if (m.rows() != t.dim(p) || m.cols() != s.dim(p))
            throw ShapeError("f(" + std::to_string(p) + ") has shape " + shape(m));
    const int lo = std::min({s.p_min(), t.p_min(), h.h.empty() ? s.p_min() : h.h.begin()->first});
    const int hi = std::max({s.p_max(), t.p_max(), h.h.empty() ? s.p_max() : h.h.rbegin()->first});
    for (int p = lo - 1; p <= hi + 1; ++p) {
        const MatrixQ rhs = t.d(p - 1) * h.at(p, s, t) + h.at(p + 1, s, t) * s.d(p);
        if (!(f.at(p) == rhs)) return false;
    }
    return true;
}

ContractibilityVerdict contractibility_check(const CochainMap& f, const CochainHomotopy& h) {
    if (!check_null_homotopy(f, h)) throw HomotopyWitnessError("f != d h + h d: homotopy witness invalid");
    const auto& c = f.source;
    ContractibilityVerdict v;
    v.invertible = true;
    for (int p = c.p_min(); p <= c.p_max(); ++p) {
        const MatrixQ m = f.at(p);
        if (!m.is_square() || rank(m) != m.rows()) v.invertible = false;
    }
    v.cohomology_vanishes = true;
    for (int p = c.p_min(); p <= c.p_max(); ++p)
        if (cohomology(c, p).dim != 0) v.cohomology_vanishes = false;
    if (v.invertible && !v.cohomology_vanishes)
        throw std::logic_error("invertible null-homotopic endomorphism on a complex with cohomology");
    return v;
}

}  // namespace causalcoh::hom
