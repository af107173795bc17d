#ifndef CAUSALCOH_POLY_HPP
#define CAUSALCOH_POLY_HPP

#include "causalcoh/matrix.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace causalcoh::poly {

inline constexpr int kMaxVars = 8;

struct Monomial {
    std::array<std::uint16_t, kMaxVars> e{};
    std::uint32_t degree = 0;

    static Monomial var(int i, unsigned power = 1);
    bool is_one() const { return degree == 0; }
    bool divides(const Monomial& other) const;
    Monomial operator*(const Monomial& o) const;
    /// Requires divides(other).
    Monomial quotient(const Monomial& divisor) const;
    Monomial gcd(const Monomial& o) const;
    Monomial lcm(const Monomial& o) const;

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return a.e != b.e; }
};

/// Graded lexicographic: higher total degree first, then lexicographic
/// with x0 > x1 > ...
bool grlex_greater(const Monomial& a, const Monomial& b);

struct Term {
    Monomial m;
    Rational c;
};

/// Polynomial in nvars variables over Q. Terms are kept in strictly
/// decreasing grlex order with no zero coefficients, so equality is
/// structural.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(int nvars) : nvars_(nvars) {}
    Polynomial(int nvars, const Rational& c);

    static Polynomial variable(int nvars, int i);
    static Polynomial monomial(int nvars, const Monomial& m, const Rational& c = 1);
    /// Builds from unsorted terms; duplicates are merged, zeros dropped.
    static Polynomial from_terms(int nvars, std::vector<Term> terms);

    int nvars() const { return nvars_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_one()); }
    bool is_monomial() const { return terms_.size() == 1; }
    Rational constant_term() const;
    const Term& leading() const { return terms_.front(); }
    std::uint32_t total_degree() const;
    /// Highest power of variable i.
    unsigned degree_in(int i) const;
    /// Componentwise minimum exponent over all terms.
    Monomial min_monomial() const;

    Polynomial derivative(int i) const;
    Polynomial pow(unsigned k) const;
    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Rational& s);
    /// Divides every exponent vector by m; requires m | every term.
    Polynomial divide_monomial(const Monomial& m) const;
    Polynomial multiply_monomial(const Monomial& m) const;
    /// Exact quotient, or nullopt if d does not divide *this.
    std::optional<Polynomial> exact_divide(const Polynomial& d) const;

    Rational evaluate(const std::vector<Rational>& point) const;
    std::string to_string(const std::vector<std::string>& names = {}) const;

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
    friend bool operator==(const Polynomial& a, const Polynomial& b);
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

private:
    int nvars_ = 0;
    std::vector<Term> terms_;
};

/// Greatest common divisor over Q, made monic. gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// Quotient field element num/den. Canonical form: den != 0, den monic in
/// grlex order, gcd(num, den) = 1, zero stored as 0/1.
class RationalFunction {
public:
    RationalFunction() = default;
    explicit RationalFunction(int nvars) : num_(nvars), den_(nvars, 1) {}
    RationalFunction(int nvars, const Rational& c) : num_(nvars, c), den_(nvars, 1) {}
    explicit RationalFunction(Polynomial num) : num_(std::move(num)), den_(num_.nvars(), 1) {}
    /// Throws std::domain_error if den is zero.
    RationalFunction(Polynomial num, Polynomial den);

    static RationalFunction variable(int nvars, int i) { return RationalFunction(Polynomial::variable(nvars, i)); }

    int nvars() const { return num_.nvars(); }
    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

    RationalFunction derivative(int i) const;
    RationalFunction inverse() const;
    RationalFunction pow(int k) const;
    RationalFunction operator-() const;
    RationalFunction& operator+=(const RationalFunction& o);
    RationalFunction& operator-=(const RationalFunction& o);
    RationalFunction& operator*=(const RationalFunction& o);
    RationalFunction& operator*=(const Rational& s);
    RationalFunction& operator/=(const RationalFunction& o) { return *this *= o.inverse(); }

    /// Throws std::domain_error at a pole.
    Rational evaluate(const std::vector<Rational>& point) const;
    std::string to_string(const std::vector<std::string>& names = {}) const;

    friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
    friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
    friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
    friend RationalFunction operator*(const Rational& s, RationalFunction a) { return a *= s; }
    friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

private:
    void canonicalize();

    Polynomial num_;
    Polynomial den_;
};

}  // namespace causalcoh::poly

#endif  // CAUSALCOH_POLY_HPP
