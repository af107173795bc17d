#ifndef CAUSALCOH_COMPLEX_HPP
#define CAUSALCOH_COMPLEX_HPP

#include "causalcoh/matrix.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace causalcoh::hom {

/// Raised when d(p+1) * d(p) != 0.
class InvalidComplexError : public std::runtime_error {
public:
    InvalidComplexError(int degree, const std::string& what)
        : std::runtime_error(what), degree_(degree) {}
    int degree() const { return degree_; }

private:
    int degree_;
};

/// Finite-dimensional cochain complex over the rationals,
///   ... -> C^p --d(p)--> C^{p+1} -> ...
/// concentrated in [p_min, p_max]. Outside that window every space is zero
/// and d(p) is returned as a correctly shaped zero matrix.
class CochainComplex {
public:
    CochainComplex() = default;

    /// `dims[i]` is dim C^{p_min+i}; `diffs[i]` is d(p_min+i) and must be
    /// dims[i+1] x dims[i] (the last one maps into the zero space). A shorter
    /// `diffs` is padded with zero maps. Checks shapes and d∘d = 0.
    CochainComplex(int p_min, std::vector<std::size_t> dims, std::vector<MatrixQ> diffs = {});

    /// Same as the constructor but skips the d∘d = 0 check, for building
    /// deliberately broken inputs.
    static CochainComplex unchecked(int p_min, std::vector<std::size_t> dims, std::vector<MatrixQ> diffs);

    int p_min() const { return p_min_; }
    int p_max() const { return p_min_ + static_cast<int>(dims_.size()) - 1; }
    bool empty() const { return dims_.empty(); }

    std::size_t dim(int p) const;
    MatrixQ d(int p) const;

    /// First degree p with d(p+1)*d(p) != 0, if any.
    std::optional<int> first_violation() const;
    void validate() const;

    /// Alternating sum of dimensions.
    long euler_characteristic() const;

    /// Direct sum; degree window is the union of both windows.
    CochainComplex direct_sum(const CochainComplex& other) const;

    /// Mapping cone of the identity: degree p holds C^{p+1} ⊕ C^p with
    /// d(a, b) = (-d a, a + d b). Always acyclic.
    CochainComplex cone_of_identity() const;

private:
    int p_min_ = 0;
    std::vector<std::size_t> dims_;
    std::vector<MatrixQ> d_;
};

/// Degree-0 map f: source -> target commuting with the differentials.
struct CochainMap {
    CochainComplex source;
    CochainComplex target;
    std::map<int, MatrixQ> f;

    /// f(p), or a zero matrix of the right shape when not stored.
    MatrixQ at(int p) const;
    /// First degree where f(p+1) d_source(p) != d_target(p) f(p).
    std::optional<int> first_violation() const;
    /// Throws ShapeError on shape mismatch, InvalidComplexError on failure
    /// to commute.
    void validate() const;

    static CochainMap identity(const CochainComplex& c);
    static CochainMap zero(const CochainComplex& source, const CochainComplex& target);
};

/// Degree -1 maps h(p): C^p -> D^{p-1}.
struct CochainHomotopy {
    std::map<int, MatrixQ> h;

    MatrixQ at(int p, const CochainComplex& source, const CochainComplex& target) const;
};

/// f + g induced by d h + h d; the map a homotopy h generates.
CochainMap homotopy_boundary(const CochainComplex& source, const CochainComplex& target, const CochainHomotopy& h);

struct CohomologySpace {
    int degree = 0;
    std::size_t dim = 0;
    /// Columns are cocycles representing a basis of H^p.
    MatrixQ cocycle_basis;
    /// Columns are an independent spanning set of im d(p-1).
    MatrixQ boundary_basis;
    std::size_t ambient_dim = 0;
};

/// dim H^p = nullity d(p) - rank d(p-1). Representatives are the kernel
/// basis columns (reduced echelon convention) that are independent of the
/// boundaries, chosen greedily left to right after them. Throws
/// InvalidComplexError if d(p) d(p-1) != 0.
CohomologySpace cohomology(const CochainComplex& c, int p);

/// Coordinates of the class of cocycle(s) `v` in the basis of `h`.
/// Each column of v must be a cocycle; the result has h.dim rows.
MatrixQ class_coordinates(const CohomologySpace& h, const MatrixQ& v);

/// Matrix of f^*: H^p(source) -> H^p(target) in the chosen bases.
MatrixQ induced_map(const CochainMap& f, int p);

/// True iff f(p) = d(p-1) h(p) + h(p+1) d(p) in every degree. f may map
/// between two different complexes; h(p): source^p -> target^{p-1}.
/// Throws ShapeError if a stored f or h block has the wrong shape.
bool check_null_homotopy(const CochainMap& f, const CochainHomotopy& h);

struct ContractibilityVerdict {
    bool invertible = false;
    bool cohomology_vanishes = false;
};

class HomotopyWitnessError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// For a null-homotopic endomorphism: whether every f(p) is invertible and
/// whether the complex is acyclic. Invertible and null-homotopic forces
/// acyclic; a violation would mean a bug and throws std::logic_error.
ContractibilityVerdict contractibility_check(const CochainMap& f, const CochainHomotopy& h);

}  // namespace causalcoh::hom

#endif  // CAUSALCOH_COMPLEX_HPP
