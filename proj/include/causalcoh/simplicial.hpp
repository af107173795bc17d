#ifndef CAUSALCOH_SIMPLICIAL_HPP
#define CAUSALCOH_SIMPLICIAL_HPP

#include "causalcoh/complex.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace causalcoh::simp {

class TriangulationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

using Simplex = std::vector<int>;

/// Face-closed simplicial complex. faces(p) lists the p-simplices, each as
/// an ascending vertex list, in lexicographic order; the ascending order
/// fixes the orientation.
class SimplicialComplex {
public:
    int vertex_count() const { return vertex_count_; }
    int top_dimension() const { return static_cast<int>(faces_.size()) - 1; }
    const std::vector<Simplex>& faces(int p) const;
    std::vector<std::size_t> f_vector() const;

    /// Coboundary C^p -> C^{p+1}: (δf)(σ) = Σ_i (-1)^i f(σ minus its i-th vertex).
    MatrixQ coboundary(int p) const;
    hom::CochainComplex cochain_complex() const;

    friend SimplicialComplex build_complex(int vertex_count, const std::vector<Simplex>& facets);

private:
    int vertex_count_ = 0;
    std::vector<std::vector<Simplex>> faces_;
};

/// Closes `facets` under taking faces. Throws TriangulationError on an
/// empty facet or a vertex outside [0, vertex_count).
SimplicialComplex build_complex(int vertex_count, const std::vector<Simplex>& facets);

/// Rational Betti number via the coboundary matrices.
std::size_t betti(const SimplicialComplex& k, int p);
/// Same number via boundary matrices of the chain complex.
std::size_t homology_betti(const SimplicialComplex& k, int p);

/// Parses {"vertices": N, "facets": [[i, j, ...], ...]}.
SimplicialComplex triangulation_from_json(const std::string& text);

/// Boundary of the standard (d+1)-simplex, a triangulated S^d.
SimplicialComplex sphere_boundary(int d);
/// Minimal 7-vertex torus.
SimplicialComplex seven_vertex_torus();
/// Cone over k with apex vertex_count(k).
SimplicialComplex cone(const SimplicialComplex& k);

/// Dimensions of H^p(Σ) and H^p_0(Σ) of a Cauchy surface.
struct CohomologyProfile {
    int m = 0;
    std::vector<std::size_t> h;
    std::vector<std::size_t> h_c;
    std::string name;

    std::size_t h_at(int p) const { return p < 0 || p > m ? 0 : h[static_cast<std::size_t>(p)]; }
    std::size_t h_c_at(int p) const { return p < 0 || p > m ? 0 : h_c[static_cast<std::size_t>(p)]; }

    friend bool operator==(const CohomologyProfile&, const CohomologyProfile&) = default;
};

/// Only oriented closed triangulations are supported; pass
/// oriented_closed = false and it throws TriangulationError.
CohomologyProfile profile_from_triangulation(const SimplicialComplex& k, bool oriented_closed, std::string name = "triangulation");

/// point (m = 0), sphere S^m, torus T^m, euclidean R^m (m >= 1).
/// Throws std::invalid_argument on an unknown name or bad m.
CohomologyProfile preset_profile(const std::string& name, int m);

/// Profile of a product: h and h_c are convolutions of the factors.
CohomologyProfile kunneth(const CohomologyProfile& a, const CohomologyProfile& b);

}  // namespace causalcoh::simp

#endif  // CAUSALCOH_SIMPLICIAL_HPP
