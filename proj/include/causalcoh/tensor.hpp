#ifndef CAUSALCOH_TENSOR_HPP
#define CAUSALCOH_TENSOR_HPP

#include "causalcoh/poly.hpp"
#include "causalcoh/rng.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace causalcoh::tensor {

using poly::Polynomial;
using RF = poly::RationalFunction;

/// Component kernels run either as a plain loop or under OpenMP. Every
/// component is computed independently, so both give identical results.
enum class Exec { serial, parallel };

template <class F>
void for_each_component(std::size_t count, Exec exec, F&& f) {
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 8)
        for (long i = 0; i < static_cast<long>(count); ++i) f(static_cast<std::size_t>(i));
    } else {
        for (std::size_t i = 0; i < count; ++i) f(i);
    }
}

enum class Variance { lower, upper };

class TensorShapeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Young diagram given by its non-increasing row lengths.
struct YoungDiagram {
    std::vector<int> rows;

    /// Throws std::invalid_argument unless rows are positive and non-increasing.
    static YoungDiagram parse(const std::string& comma_list);
    void validate() const;
    int cells() const;
    /// Column lengths, left to right.
    std::vector<int> columns() const;
    std::string to_string() const;
    friend bool operator==(const YoungDiagram&, const YoungDiagram&) = default;
};

/// Dense tensor on an n-dimensional chart. Components are stored with the
/// first index most significant; rank 0 holds a single scalar.
class Tensor {
public:
    Tensor() = default;
    Tensor(int n, int rank);
    Tensor(int n, std::vector<Variance> variance);

    int n() const { return n_; }
    int rank() const { return static_cast<int>(variance_.size()); }
    std::size_t size() const { return c_.size(); }
    const std::vector<Variance>& variance() const { return variance_; }
    bool all_lower() const;

    RF& operator[](std::size_t flat) { return c_[flat]; }
    const RF& operator[](std::size_t flat) const { return c_[flat]; }
    RF& at(const std::vector<int>& idx) { return c_[flat(idx)]; }
    const RF& at(const std::vector<int>& idx) const { return c_[flat(idx)]; }

    std::size_t flat(const std::vector<int>& idx) const;
    std::vector<int> multi(std::size_t flat) const;
    /// n^(rank-1-slot).
    std::size_t stride(int slot) const { return strides_[static_cast<std::size_t>(slot)]; }
    int index_at(std::size_t flat, int slot) const { return static_cast<int>((flat / stride(slot)) % static_cast<std::size_t>(n_)); }

    bool is_zero() const;
    std::optional<YoungDiagram> symmetry;

    Tensor& operator+=(const Tensor& o);
    Tensor& operator-=(const Tensor& o);
    Tensor& operator*=(const Rational& s);
    Tensor& operator*=(const RF& s);

    friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
    friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
    friend Tensor operator*(const Rational& s, Tensor a) { return a *= s; }
    friend Tensor operator*(const RF& s, Tensor a) { return a *= s; }
    /// Component equality; symmetry tags are ignored.
    friend bool operator==(const Tensor& a, const Tensor& b);
    friend bool operator!=(const Tensor& a, const Tensor& b) { return !(a == b); }

private:
    void check_same_shape(const Tensor& o) const;

    int n_ = 0;
    std::vector<Variance> variance_;
    std::vector<std::size_t> strides_;
    std::vector<RF> c_;
};

/// out(i_0, ..., i_{k-1}) = t(i_{perm[0]}, ..., i_{perm[k-1]}).
Tensor permute(const Tensor& t, const std::vector<int>& perm);
Tensor outer(const Tensor& a, const Tensor& b);

/// Random tensor: `nonzero` components (chosen with replacement) receive a
/// polynomial of total degree <= degree with up to three terms and integer
/// coefficients in [-3, 3]; the rest are zero.
Tensor random_polynomial_tensor(int n, int rank, Rng& rng, unsigned degree, int nonzero);

/// Structural dump, one nonzero component per line.
std::string to_string(const Tensor& t);

}  // namespace causalcoh::tensor

#endif  // CAUSALCOH_TENSOR_HPP
