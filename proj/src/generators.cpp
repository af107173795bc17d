#include "causalcoh/generators.hpp"

#include <algorithm>
#include <functional>

namespace causalcoh::hom {

namespace {

CochainComplex from_window(int lo, int hi, const std::function<std::size_t(int)>& dim,
                           const std::function<MatrixQ(int)>& d) {
    std::vector<std::size_t> dims;
    std::vector<MatrixQ> diffs;
    for (int p = lo; p <= hi; ++p) dims.push_back(dim(p));
    for (int p = lo; p <= hi; ++p) diffs.push_back(p == hi ? MatrixQ::zero(0, dim(p)) : d(p));
    return CochainComplex(lo, std::move(dims), std::move(diffs));
}

/// Copies `src` into `dst` at (r0, c0).
void put(MatrixQ& dst, std::size_t r0, std::size_t c0, const MatrixQ& src) {
    for (std::size_t r = 0; r < src.rows(); ++r)
        for (std::size_t c = 0; c < src.cols(); ++c) dst(r0 + r, c0 + c) = src(r, c);
}

/// Same complex expressed in new bases: d'(p) = P(p+1) d(p) P(p)^{-1}.
struct Rebased {
    CochainComplex complex;
    std::map<int, MatrixQ> basis, inverse;
};

Rebased rebase(const CochainComplex& c, Rng& rng) {
    Rebased out;
    for (int p = c.p_min(); p <= c.p_max(); ++p) {
        out.basis[p] = random_unimodular(c.dim(p), rng);
        out.inverse[p] = causalcoh::inverse(out.basis[p]);
    }
    auto mat = [&](std::map<int, MatrixQ>& m, int p) {
        if (auto it = m.find(p); it != m.end()) return it->second;
        return MatrixQ::identity(0);
    };
    out.complex = from_window(
        c.p_min(), c.p_max(), [&](int p) { return c.dim(p); },
        [&](int p) { return mat(out.basis, p + 1) * c.d(p) * mat(out.inverse, p); });
    return out;
}

}  // namespace

MatrixQ random_matrix(std::size_t rows, std::size_t cols, Rng& rng, long bound) {
    MatrixQ m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rng.uniform(-bound, bound);
    return m;
}

MatrixQ random_unimodular(std::size_t n, Rng& rng) {
    MatrixQ lower = MatrixQ::identity(n), upper = MatrixQ::identity(n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < r; ++c) {
            lower(r, c) = rng.uniform(-2, 2);
            upper(c, r) = rng.uniform(-2, 2);
        }
    return lower * upper;
}

CochainComplex random_complex(int p_min, int degrees, std::size_t max_dim, Rng& rng) {
    const auto n = static_cast<std::size_t>(std::max(degrees, 1));
    // edges[k] identity pieces from degree k to k+1, points[k] lone lines.
    std::vector<std::size_t> edges(n, 0), points(n, 0), dims(n, 0);
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t arriving = k ? edges[k - 1] : 0;
        std::size_t room = max_dim > arriving ? max_dim - arriving : 0;
        if (k + 1 < n) {
            edges[k] = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(std::min<std::size_t>(room, 2))));
            room -= edges[k];
        }
        points[k] = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(std::min<std::size_t>(room, 2))));
        dims[k] = arriving + edges[k] + points[k];
    }
    // Basis of degree k: arriving edges, leaving edges, points.
    std::vector<MatrixQ> diffs;
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t next = k + 1 < n ? dims[k + 1] : 0;
        MatrixQ d(next, dims[k]);
        const std::size_t arriving = k ? edges[k - 1] : 0;
        for (std::size_t j = 0; j < edges[k]; ++j) d(j, arriving + j) = 1;
        diffs.push_back(std::move(d));
    }
    CochainComplex plain(p_min, dims, diffs);
    return rebase(plain, rng).complex;
}

ShortExactSeq random_short_exact_sequence(int p_min, int degrees, std::size_t max_dim, Rng& rng) {
    const std::size_t half = std::max<std::size_t>(1, max_dim / 2);
    const CochainComplex a = random_complex(p_min, degrees, half, rng);
    const CochainComplex c = random_complex(p_min, degrees, max_dim - half, rng);
    const int lo = p_min, hi = p_min + degrees - 1;

    // Solve for all twists t(p): C^p -> A^{p+1} with d_A t(p) + t(p+1) d_C = 0,
    // then take a random member of that solution space.
    std::vector<std::size_t> offset;
    std::size_t unknowns = 0;
    for (int p = lo; p <= hi; ++p) {
        offset.push_back(unknowns);
        unknowns += a.dim(p + 1) * c.dim(p);
    }
    auto var = [&](int p, std::size_t r, std::size_t col) {
        return offset[static_cast<std::size_t>(p - lo)] + r * c.dim(p) + col;
    };
    std::vector<std::vector<Rational>> rows;
    for (int p = lo; p <= hi; ++p) {
        const MatrixQ da = a.d(p + 1), dc = c.d(p);
        for (std::size_t r = 0; r < a.dim(p + 2); ++r)
            for (std::size_t col = 0; col < c.dim(p); ++col) {
                std::vector<Rational> row(unknowns);
                for (std::size_t k = 0; k < a.dim(p + 1); ++k) row[var(p, k, col)] += da(r, k);
                if (p + 1 <= hi)
                    for (std::size_t k = 0; k < c.dim(p + 1); ++k) row[var(p + 1, r, k)] += dc(k, col);
                rows.push_back(std::move(row));
            }
    }
    MatrixQ constraints(rows.size(), unknowns);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t k = 0; k < unknowns; ++k) constraints(r, k) = rows[r][k];
    const MatrixQ sol = kernel_basis(constraints);
    const MatrixQ t = sol * random_matrix(sol.cols(), 1, rng, 2);

    auto twist = [&](int p) {
        MatrixQ m(a.dim(p + 1), c.dim(p));
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t col = 0; col < m.cols(); ++col) m(r, col) = t(var(p, r, col), 0);
        return m;
    };
    const CochainComplex split = from_window(
        lo, hi, [&](int p) { return a.dim(p) + c.dim(p); },
        [&](int p) {
            MatrixQ d = a.d(p).direct_sum(c.d(p));
            put(d, 0, a.dim(p), twist(p));
            return d;
        });
    const Rebased b = rebase(split, rng);

    ShortExactSeq s{a, b.complex, c, {a, b.complex, {}}, {b.complex, c, {}}};
    for (int p = lo; p <= hi; ++p) {
        MatrixQ inc(a.dim(p) + c.dim(p), a.dim(p));
        for (std::size_t k = 0; k < a.dim(p); ++k) inc(k, k) = 1;
        MatrixQ proj(c.dim(p), a.dim(p) + c.dim(p));
        for (std::size_t k = 0; k < c.dim(p); ++k) proj(k, a.dim(p) + k) = 1;
        s.i.f[p] = b.basis.at(p) * inc;
        s.q.f[p] = proj * b.inverse.at(p);
    }
    return s;
}

ContractibleWitness random_contractible(int p_min, int degrees, std::size_t max_dim, Rng& rng) {
    const CochainComplex base = random_complex(p_min + 1, std::max(degrees - 1, 1), std::max<std::size_t>(max_dim / 2, 1), rng);
    const CochainComplex cone = base.cone_of_identity();
    const Rebased r = rebase(cone, rng);

    // Contracting homotopy of the cone, (a, b) -> (b, 0), in the new bases.
    CochainHomotopy h0;
    for (int p = cone.p_min(); p <= cone.p_max(); ++p) {
        MatrixQ m(cone.dim(p - 1), cone.dim(p));
        const std::size_t a = base.dim(p + 1);
        for (std::size_t k = 0; k < base.dim(p); ++k) m(k, a + k) = 1;
        const MatrixQ& in = r.inverse.at(p);
        m = (r.basis.count(p - 1) ? r.basis.at(p - 1) : MatrixQ::identity(0)) * m * in;
        h0.h[p] = std::move(m);
    }

    for (int attempt = 0; attempt < 64; ++attempt) {
        CochainHomotopy h = h0;
        const long bound = attempt < 32 ? 1 : 0;
        for (auto& [p, m] : h.h) m = m + random_matrix(m.rows(), m.cols(), rng, bound);
        CochainMap f = homotopy_boundary(r.complex, r.complex, h);
        bool invertible = true;
        for (int p = r.complex.p_min(); p <= r.complex.p_max(); ++p)
            if (rank(f.at(p)) != r.complex.dim(p)) invertible = false;
        if (invertible) return {std::move(f), std::move(h)};
    }
    throw std::logic_error("random_contractible: unperturbed homotopy must give the identity");
}

NullHomotopicExtension null_homotopic_extension(const CochainComplex& a, const CochainComplex& extra, Rng& rng) {
    const int lo = std::min(a.p_min() - 1, extra.p_min());
    const int hi = std::max(a.p_max(), extra.p_max());

    // B^p = (A^{p+1} ⊕ A^p) ⊕ E^p ; C^p = A^{p+1} ⊕ E^p.
    auto bdim = [&](int p) { return a.dim(p + 1) + a.dim(p) + extra.dim(p); };
    auto cdim = [&](int p) { return a.dim(p + 1) + extra.dim(p); };
    const CochainComplex plain_b = from_window(lo, hi, bdim, [&](int p) {
        MatrixQ d(bdim(p + 1), bdim(p));
        const std::size_t ta = a.dim(p + 2), tb = a.dim(p + 1);
        put(d, 0, 0, -1 * a.d(p + 1));
        for (std::size_t k = 0; k < tb; ++k) d(ta + k, k) = 1;
        put(d, ta, a.dim(p + 1), a.d(p));
        put(d, ta + tb, a.dim(p + 1) + a.dim(p), extra.d(p));
        return d;
    });
    const CochainComplex c = from_window(lo, hi, cdim, [&](int p) {
        MatrixQ d(cdim(p + 1), cdim(p));
        put(d, 0, 0, -1 * a.d(p + 1));
        put(d, a.dim(p + 2), a.dim(p + 1), extra.d(p));
        return d;
    });
    const CochainComplex a_full = from_window(lo, hi, [&](int p) { return a.dim(p); }, [&](int p) { return a.d(p); });
    const Rebased b = rebase(plain_b, rng);

    NullHomotopicExtension out{{a_full, b.complex, c, {a_full, b.complex, {}}, {b.complex, c, {}}}, {}};
    for (int p = lo; p <= hi; ++p) {
        MatrixQ inc(bdim(p), a.dim(p));
        for (std::size_t k = 0; k < a.dim(p); ++k) inc(a.dim(p + 1) + k, k) = 1;
        out.seq.i.f[p] = b.basis.at(p) * inc;

        MatrixQ proj(cdim(p), bdim(p));
        for (std::size_t k = 0; k < a.dim(p + 1); ++k) proj(k, k) = 1;
        for (std::size_t k = 0; k < extra.dim(p); ++k) proj(a.dim(p + 1) + k, a.dim(p + 1) + a.dim(p) + k) = 1;
        out.seq.q.f[p] = proj * b.inverse.at(p);

        // h(x) = (x, 0, 0) in B^{p-1} = A^p ⊕ A^{p-1} ⊕ E^{p-1}.
        MatrixQ hm(bdim(p - 1), a.dim(p));
        for (std::size_t k = 0; k < a.dim(p); ++k) hm(k, k) = 1;
        if (p - 1 >= lo) out.h.h[p] = b.basis.at(p - 1) * hm;
    }
    return out;
}

}  // namespace causalcoh::hom
