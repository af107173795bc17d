#include "causalcoh/matrix.hpp"

#include <sstream>
#include <utility>

namespace causalcoh {

MatrixQ::MatrixQ(std::initializer_list<std::initializer_list<long>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
        if (row.size() != cols_) throw ShapeError("ragged matrix initializer");
        for (long v : row) data_.emplace_back(v);
    }
}

MatrixQ MatrixQ::identity(std::size_t n) {
    MatrixQ m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

bool MatrixQ::is_zero() const {
    for (const auto& v : data_)
        if (sgn(v) != 0) return false;
    return true;
}

MatrixQ MatrixQ::transpose() const {
    MatrixQ t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

MatrixQ MatrixQ::column(std::size_t c) const { return columns({c}); }

MatrixQ MatrixQ::columns(const std::vector<std::size_t>& which) const {
    MatrixQ out(rows_, which.size());
    for (std::size_t j = 0; j < which.size(); ++j) {
        if (which[j] >= cols_) throw ShapeError("column index out of range");
        for (std::size_t r = 0; r < rows_; ++r) out(r, j) = (*this)(r, which[j]);
    }
    return out;
}

MatrixQ MatrixQ::hstack(const MatrixQ& other) const {
    if (rows_ != other.rows_) throw ShapeError("hstack: row counts differ");
    MatrixQ out(rows_, cols_ + other.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) out(r, c) = (*this)(r, c);
        for (std::size_t c = 0; c < other.cols_; ++c) out(r, cols_ + c) = other(r, c);
    }
    return out;
}

MatrixQ MatrixQ::vstack(const MatrixQ& other) const {
    if (cols_ != other.cols_) throw ShapeError("vstack: column counts differ");
    MatrixQ out(rows_ + other.rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out(r, c) = (*this)(r, c);
    for (std::size_t r = 0; r < other.rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out(rows_ + r, c) = other(r, c);
    return out;
}

MatrixQ MatrixQ::direct_sum(const MatrixQ& other) const {
    MatrixQ out(rows_ + other.rows_, cols_ + other.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out(r, c) = (*this)(r, c);
    for (std::size_t r = 0; r < other.rows_; ++r)
        for (std::size_t c = 0; c < other.cols_; ++c) out(rows_ + r, cols_ + c) = other(r, c);
    return out;
}

bool operator==(const MatrixQ& a, const MatrixQ& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

MatrixQ operator*(const MatrixQ& a, const MatrixQ& b) {
    if (a.cols_ != b.rows_)
        throw ShapeError("matrix product: " + std::to_string(a.rows_) + "x" + std::to_string(a.cols_) +
                         " times " + std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
    MatrixQ out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rational& aik = a(i, k);
            if (sgn(aik) == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                if (sgn(b(k, j)) != 0) out(i, j) += aik * b(k, j);
        }
    return out;
}

MatrixQ operator+(const MatrixQ& a, const MatrixQ& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ShapeError("matrix sum: shapes differ");
    MatrixQ out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
    return out;
}

MatrixQ operator-(const MatrixQ& a, const MatrixQ& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ShapeError("matrix difference: shapes differ");
    MatrixQ out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
    return out;
}

MatrixQ operator*(const Rational& s, const MatrixQ& a) {
    MatrixQ out = a;
    for (auto& v : out.data_) v *= s;
    return out;
}

std::string MatrixQ::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t r = 0; r < rows_; ++r) {
        os << (r ? "; " : "");
        for (std::size_t c = 0; c < cols_; ++c) os << (c ? " " : "") << (*this)(r, c).get_str();
    }
    os << "]";
    return os.str();
}

EchelonForm row_reduce(const MatrixQ& m) {
    const std::size_t rows = m.rows(), cols = m.cols();

    // Scale each row by the lcm of its denominators so elimination runs on
    // integers; row scaling changes neither the row space nor the pivots.
    std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
    for (std::size_t r = 0; r < rows; ++r) {
        mpz_class l = 1;
        for (std::size_t c = 0; c < cols; ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
        for (std::size_t c = 0; c < cols; ++c) a[r][c] = m(r, c).get_num() * (l / m(r, c).get_den());
    }

    std::vector<std::size_t> pivots;
    mpz_class prev = 1;
    std::size_t row = 0;
    for (std::size_t c = 0; c < cols && row < rows; ++c) {
        std::size_t p = row;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        if (p != row) {
            std::swap(a[p], a[row]);
        }
        const mpz_class& piv = a[row][c];
        for (std::size_t i = row + 1; i < rows; ++i) {
            const mpz_class lead = a[i][c];
            for (std::size_t j = c + 1; j < cols; ++j) {
                mpz_class t = piv * a[i][j] - lead * a[row][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][c] = 0;
        }
        prev = piv;
        pivots.push_back(c);
        ++row;
    }

    MatrixQ red(rows, cols);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        mpq_class inv(mpz_class(1), a[r][pivots[r]]);
        inv.canonicalize();
        for (std::size_t c = pivots[r]; c < cols; ++c)
            if (a[r][c] != 0) red(r, c) = mpq_class(a[r][c]) * inv;
    }
    for (std::size_t r = pivots.size(); r-- > 0;) {
        const std::size_t pc = pivots[r];
        for (std::size_t i = 0; i < r; ++i) {
            const Rational f = red(i, pc);
            if (sgn(f) == 0) continue;
            for (std::size_t c = pc; c < cols; ++c)
                if (sgn(red(r, c)) != 0) red(i, c) -= f * red(r, c);
        }
    }
    return {std::move(red), std::move(pivots)};
}

std::size_t rank(const MatrixQ& m) { return row_reduce(m).pivots.size(); }

MatrixQ kernel_basis(const MatrixQ& m) {
    const auto ef = row_reduce(m);
    const std::size_t cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (auto p : ef.pivots) is_pivot[p] = true;

    std::vector<std::size_t> free;
    for (std::size_t c = 0; c < cols; ++c)
        if (!is_pivot[c]) free.push_back(c);

    MatrixQ k(cols, free.size());
    for (std::size_t j = 0; j < free.size(); ++j) {
        k(free[j], j) = 1;
        for (std::size_t r = 0; r < ef.pivots.size(); ++r) k(ef.pivots[r], j) = -ef.reduced(r, free[j]);
    }
    return k;
}

std::optional<MatrixQ> solve(const MatrixQ& m, const MatrixQ& b) {
    if (m.rows() != b.rows()) throw ShapeError("solve: right-hand side row count differs");
    MatrixQ x(m.cols(), b.cols());
    for (std::size_t j = 0; j < b.cols(); ++j) {
        const auto ef = row_reduce(m.hstack(b.column(j)));
        if (!ef.pivots.empty() && ef.pivots.back() == m.cols()) return std::nullopt;
        for (std::size_t r = 0; r < ef.pivots.size(); ++r) x(ef.pivots[r], j) = ef.reduced(r, m.cols());
    }
    return x;
}

std::vector<std::size_t> independent_columns(const MatrixQ& m) { return row_reduce(m).pivots; }

MatrixQ inverse(const MatrixQ& m) {
    if (!m.is_square()) throw ShapeError("inverse of non-square matrix");
    const std::size_t n = m.rows();
    const auto ef = row_reduce(m.hstack(MatrixQ::identity(n)));
    if (ef.pivots.size() < n || (n > 0 && ef.pivots[n - 1] != n - 1)) throw ShapeError("inverse of singular matrix");
    MatrixQ inv(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) inv(r, c) = ef.reduced(r, n + c);
    return inv;
}

}  // namespace causalcoh
