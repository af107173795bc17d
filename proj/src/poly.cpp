#include "causalcoh/poly.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace causalcoh::poly {

Monomial Monomial::var(int i, unsigned power) {
    Monomial m;
    m.e[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(power);
    m.degree = power;
    return m;
}

bool Monomial::divides(const Monomial& other) const {
    for (int i = 0; i < kMaxVars; ++i)
        if (e[i] > other.e[i]) return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial m;
    for (int i = 0; i < kMaxVars; ++i) m.e[i] = static_cast<std::uint16_t>(e[i] + o.e[i]);
    m.degree = degree + o.degree;
    return m;
}

Monomial Monomial::quotient(const Monomial& divisor) const {
    Monomial m;
    for (int i = 0; i < kMaxVars; ++i) m.e[i] = static_cast<std::uint16_t>(e[i] - divisor.e[i]);
    m.degree = degree - divisor.degree;
    return m;
}

Monomial Monomial::gcd(const Monomial& o) const {
    Monomial m;
    for (int i = 0; i < kMaxVars; ++i) {
        m.e[i] = std::min(e[i], o.e[i]);
        m.degree += m.e[i];
    }
    return m;
}

Monomial Monomial::lcm(const Monomial& o) const {
    Monomial m;
    for (int i = 0; i < kMaxVars; ++i) {
        m.e[i] = std::max(e[i], o.e[i]);
        m.degree += m.e[i];
    }
    return m;
}

bool grlex_greater(const Monomial& a, const Monomial& b) {
    if (a.degree != b.degree) return a.degree > b.degree;
    return a.e > b.e;
}

Polynomial::Polynomial(int nvars, const Rational& c) : nvars_(nvars) {
    if (c != 0) terms_.push_back({Monomial{}, c});
}

Polynomial Polynomial::variable(int nvars, int i) {
    if (i < 0 || i >= nvars) throw std::out_of_range("variable index out of range");
    return monomial(nvars, Monomial::var(i));
}

Polynomial Polynomial::monomial(int nvars, const Monomial& m, const Rational& c) {
    Polynomial p(nvars);
    if (c != 0) p.terms_.push_back({m, c});
    return p;
}

Polynomial Polynomial::from_terms(int nvars, std::vector<Term> terms) {
    if (nvars > kMaxVars) throw std::invalid_argument("too many variables");
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return grlex_greater(a.m, b.m); });
    Polynomial p(nvars);
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().m == t.m)
            p.terms_.back().c += t.c;
        else {
            if (!p.terms_.empty() && p.terms_.back().c == 0) p.terms_.pop_back();
            p.terms_.push_back(std::move(t));
        }
    }
    if (!p.terms_.empty() && p.terms_.back().c == 0) p.terms_.pop_back();
    return p;
}

Rational Polynomial::constant_term() const {
    if (!terms_.empty() && terms_.back().m.is_one()) return terms_.back().c;
    return 0;
}

std::uint32_t Polynomial::total_degree() const { return terms_.empty() ? 0 : terms_.front().m.degree; }

unsigned Polynomial::degree_in(int i) const {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max<unsigned>(d, t.m.e[static_cast<std::size_t>(i)]);
    return d;
}

Monomial Polynomial::min_monomial() const {
    if (terms_.empty()) return {};
    Monomial m = terms_.front().m;
    for (const auto& t : terms_) m = m.gcd(t.m);
    return m;
}

Polynomial Polynomial::derivative(int i) const {
    std::vector<Term> out;
    const auto k = static_cast<std::size_t>(i);
    for (const auto& t : terms_) {
        if (t.m.e[k] == 0) continue;
        Term d{t.m, t.c * t.m.e[k]};
        d.m.e[k] -= 1;
        d.m.degree -= 1;
        out.push_back(std::move(d));
    }
    // Differentiation preserves the relative grlex order of surviving terms.
    Polynomial p(nvars_);
    p.terms_ = std::move(out);
    return p;
}

Polynomial Polynomial::pow(unsigned k) const {
    Polynomial result(nvars_, 1);
    Polynomial base = *this;
    while (k) {
        if (k & 1) result = result * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return result;
}

Polynomial Polynomial::operator-() const {
    Polynomial p = *this;
    for (auto& t : p.terms_) t.c = -t.c;
    return p;
}

namespace {

std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract) {
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && grlex_greater(a[i].m, b[j].m))) {
            out.push_back(a[i++]);
        } else if (i == a.size() || grlex_greater(b[j].m, a[i].m)) {
            out.push_back({b[j].m, subtract ? Rational(-b[j].c) : b[j].c});
            ++j;
        } else {
            Rational c = subtract ? Rational(a[i].c - b[j].c) : Rational(a[i].c + b[j].c);
            if (c != 0) out.push_back({a[i].m, std::move(c)});
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.terms_.empty()) return *this;
    if (terms_.empty()) {
        terms_ = o.terms_;
        nvars_ = std::max(nvars_, o.nvars_);
        return *this;
    }
    terms_ = merge(terms_, o.terms_, false);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (o.terms_.empty()) return *this;
    nvars_ = std::max(nvars_, o.nvars_);
    terms_ = merge(terms_, o.terms_, true);
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& s) {
    if (s == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.c *= s;
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    const int nv = std::max(a.nvars_, b.nvars_);
    if (a.terms_.empty() || b.terms_.empty()) return Polynomial(nv);
    if (b.terms_.size() == 1) {
        Polynomial p = a.multiply_monomial(b.terms_[0].m);
        p.nvars_ = nv;
        return p *= b.terms_[0].c;
    }
    if (a.terms_.size() == 1) return b * a;
    std::vector<Term> out;
    out.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& s : a.terms_)
        for (const auto& t : b.terms_) out.push_back({s.m * t.m, s.c * t.c});
    return Polynomial::from_terms(nv, std::move(out));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
        if (a.terms_[i].m != b.terms_[i].m || a.terms_[i].c != b.terms_[i].c) return false;
    return true;
}

Polynomial Polynomial::divide_monomial(const Monomial& m) const {
    Polynomial p = *this;
    for (auto& t : p.terms_) t.m = t.m.quotient(m);
    return p;
}

Polynomial Polynomial::multiply_monomial(const Monomial& m) const {
    Polynomial p = *this;
    for (auto& t : p.terms_) t.m = t.m * m;
    return p;
}

std::optional<Polynomial> Polynomial::exact_divide(const Polynomial& d) const {
    if (d.is_zero()) throw std::domain_error("division by the zero polynomial");
    const int nv = std::max(nvars_, d.nvars_);
    if (d.is_monomial()) {
        const auto& lt = d.terms_[0];
        for (const auto& t : terms_)
            if (!lt.m.divides(t.m)) return std::nullopt;
        Polynomial q = divide_monomial(lt.m);
        q.nvars_ = nv;
        return q *= Rational(1 / lt.c);
    }
    Polynomial r = *this;
    std::vector<Term> q;
    const Term& lt = d.leading();
    while (!r.is_zero()) {
        const Term& rt = r.leading();
        if (!lt.m.divides(rt.m)) return std::nullopt;
        Term t{rt.m.quotient(lt.m), rt.c / lt.c};
        r -= Polynomial::monomial(nv, t.m, t.c) * d;
        q.push_back(std::move(t));
    }
    return Polynomial::from_terms(nv, std::move(q));
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const {
    Rational sum = 0;
    for (const auto& t : terms_) {
        Rational v = t.c;
        for (int i = 0; i < nvars_; ++i)
            for (unsigned k = 0; k < t.m.e[static_cast<std::size_t>(i)]; ++k) v *= point.at(static_cast<std::size_t>(i));
        sum += v;
    }
    return sum;
}

std::string Polynomial::to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        Rational c = t.c;
        if (!first) {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        } else if (c < 0 && !t.m.is_one()) {
            os << "-";
            c = -c;
        }
        first = false;
        bool need_star = false;
        if (t.m.is_one() || c != 1) {
            os << c.get_str();
            need_star = true;
        }
        for (int i = 0; i < nvars_; ++i) {
            const unsigned p = t.m.e[static_cast<std::size_t>(i)];
            if (!p) continue;
            if (need_star) os << "*";
            os << (static_cast<std::size_t>(i) < names.size() ? names[static_cast<std::size_t>(i)] : "x" + std::to_string(i));
            if (p > 1) os << "^" << p;
            need_star = true;
        }
    }
    return os.str();
}

namespace {

Polynomial make_monic(Polynomial p) {
    if (p.is_zero()) return p;
    const Rational lc = p.leading().c;
    if (lc != 1) p *= Rational(1 / lc);
    return p;
}

int first_variable(const Polynomial& a, const Polynomial& b) {
    for (int i = 0; i < kMaxVars; ++i)
        if (a.degree_in(i) > 0 || b.degree_in(i) > 0) return i;
    return -1;
}

// Coefficients of p as a polynomial in x_v; keys are powers of x_v.
std::map<unsigned, Polynomial> coefficients_in(const Polynomial& p, int v) {
    std::map<unsigned, std::vector<Term>> parts;
    const auto k = static_cast<std::size_t>(v);
    for (const auto& t : p.terms()) {
        Term s = t;
        const unsigned power = s.m.e[k];
        s.m.degree -= power;
        s.m.e[k] = 0;
        parts[power].push_back(std::move(s));
    }
    std::map<unsigned, Polynomial> out;
    for (auto& [power, terms] : parts) out.emplace(power, Polynomial::from_terms(p.nvars(), std::move(terms)));
    return out;
}

Polynomial content_in(const Polynomial& p, int v) {
    Polynomial c(p.nvars());
    for (const auto& [power, coeff] : coefficients_in(p, v)) {
        c = gcd(c, coeff);
        if (c.is_constant() && !c.is_zero()) break;
    }
    return c;
}

// Scales p to coprime integer coefficients with a positive leading one;
// without this the pseudo-remainder sequence grows exponentially.
Polynomial integer_primitive(Polynomial p) {
    if (p.is_zero()) return p;
    mpz_class num_gcd = 0, den_lcm = 1;
    for (const auto& t : p.terms()) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.c.get_num_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.c.get_den_mpz_t());
    }
    Rational scale(den_lcm, num_gcd);
    scale.canonicalize();
    if (p.leading().c < 0) scale = -scale;
    return p *= scale;
}

Polynomial primitive_part(const Polynomial& p, int v) {
    if (p.is_zero()) return p;
    return integer_primitive(*p.exact_divide(content_in(p, v)));
}

Polynomial pseudo_remainder(Polynomial a, const Polynomial& b, int v) {
    const auto bc = coefficients_in(b, v);
    const unsigned db = bc.rbegin()->first;
    const Polynomial& lcb = bc.rbegin()->second;
    while (!a.is_zero()) {
        const auto ac = coefficients_in(a, v);
        const unsigned da = ac.rbegin()->first;
        if (da < db) break;
        const Polynomial shift = Polynomial::monomial(a.nvars(), Monomial::var(v, da - db));
        a = lcb * a - ac.rbegin()->second * shift * b;
    }
    return a;
}

// Substitutes fixed small integers for every variable except v.
Polynomial specialize(const Polynomial& p, int v) {
    std::vector<Term> out;
    for (const auto& t : p.terms()) {
        Rational c = t.c;
        for (int i = 0; i < kMaxVars; ++i) {
            if (i == v) continue;
            for (unsigned k = 0; k < t.m.e[static_cast<std::size_t>(i)]; ++k) c *= 2 * i + 3;
        }
        out.push_back({Monomial::var(v, t.m.e[static_cast<std::size_t>(v)]), std::move(c)});
    }
    return Polynomial::from_terms(p.nvars(), std::move(out));
}

// True when deg_v gcd(a, b) = 0 is certified by one specialization: if the
// leading x_v-coefficients survive, the specialized gcd bounds the degree.
bool coprime_in(const Polynomial& a, const Polynomial& b, int v) {
    const Polynomial sa = specialize(a, v), sb = specialize(b, v);
    if (sa.degree_in(v) != a.degree_in(v) || sb.degree_in(v) != b.degree_in(v)) return false;
    return gcd(sa, sb).is_constant();
}

}  // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    const int nv = std::max(a.nvars(), b.nvars());
    if (a.is_zero()) return make_monic(b);
    if (b.is_zero()) return make_monic(a);
    if (a.is_constant() || b.is_constant()) return Polynomial(nv, 1);
    if (a.is_monomial()) return Polynomial::monomial(nv, a.leading().m.gcd(b.min_monomial()));
    if (b.is_monomial()) return Polynomial::monomial(nv, b.leading().m.gcd(a.min_monomial()));
    const Monomial ma = a.min_monomial(), mb = b.min_monomial();
    if (!ma.is_one() || !mb.is_one())
        return Polynomial::monomial(nv, ma.gcd(mb)) * gcd(a.divide_monomial(ma), b.divide_monomial(mb));

    const int v = first_variable(a, b);
    if (a.degree_in(v) == 0) return gcd(a, content_in(b, v));
    if (b.degree_in(v) == 0) return gcd(content_in(a, v), b);
    for (int w = v; w < kMaxVars; ++w) {
        if (a.degree_in(w) == 0 || b.degree_in(w) == 0) continue;
        bool multivariate = false;
        for (int i = 0; i < kMaxVars; ++i)
            if (i != w && (a.degree_in(i) > 0 || b.degree_in(i) > 0)) multivariate = true;
        if (multivariate && coprime_in(a, b, w)) return gcd(content_in(a, w), content_in(b, w));
    }

    const Polynomial c = gcd(content_in(a, v), content_in(b, v));
    Polynomial p = primitive_part(a, v);
    Polynomial q = primitive_part(b, v);
    if (p.degree_in(v) < q.degree_in(v)) std::swap(p, q);
    while (true) {
        Polynomial r = pseudo_remainder(p, q, v);
        if (r.is_zero()) break;
        if (r.degree_in(v) == 0) {
            q = Polynomial(nv, 1);
            break;
        }
        p = std::move(q);
        q = primitive_part(r, v);
    }
    return make_monic(c * primitive_part(q, v));
}

RationalFunction::RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
    canonicalize();
}

void RationalFunction::canonicalize() {
    if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
    const int nv = std::max(num_.nvars(), den_.nvars());
    if (num_.is_zero()) {
        num_ = Polynomial(nv);
        den_ = Polynomial(nv, 1);
        return;
    }
    if (den_.is_monomial()) {
        const Monomial common = den_.leading().m.gcd(num_.min_monomial());
        if (!common.is_one()) {
            num_ = num_.divide_monomial(common);
            den_ = den_.divide_monomial(common);
        }
    } else {
        const Polynomial g = gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = *num_.exact_divide(g);
            den_ = *den_.exact_divide(g);
        }
    }
    const Rational lc = den_.leading().c;
    if (lc != 1) {
        const Rational inv = 1 / lc;
        num_ *= inv;
        den_ *= inv;
    }
}

RationalFunction RationalFunction::derivative(int i) const {
    RationalFunction r;
    if (den_.is_constant()) {
        r.num_ = num_.derivative(i);
        r.den_ = den_;
        return r;
    }
    if (den_.is_monomial()) {
        const unsigned m = den_.leading().m.e[static_cast<std::size_t>(i)];
        const Polynomial xi = Polynomial::variable(nvars(), i);
        if (m == 0) {
            r.num_ = num_.derivative(i);
            r.den_ = den_;
        } else {
            r.num_ = xi * num_.derivative(i) - Rational(m) * num_;
            r.den_ = den_ * xi;
        }
        r.canonicalize();
        return r;
    }
    r.num_ = num_.derivative(i) * den_ - num_ * den_.derivative(i);
    r.den_ = den_ * den_;
    r.canonicalize();
    return r;
}

RationalFunction RationalFunction::inverse() const {
    if (num_.is_zero()) throw std::domain_error("inverse of zero rational function");
    RationalFunction r;
    r.num_ = den_;
    r.den_ = num_;
    r.canonicalize();
    return r;
}

RationalFunction RationalFunction::pow(int k) const {
    if (k < 0) return inverse().pow(-k);
    RationalFunction r;
    r.num_ = num_.pow(static_cast<unsigned>(k));
    r.den_ = den_.pow(static_cast<unsigned>(k));
    return r;
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
    if (o.num_.is_zero()) return *this;
    if (num_.is_zero()) return *this = o;
    if (den_ == o.den_) {
        num_ += o.num_;
    } else if (den_.is_monomial() && o.den_.is_monomial()) {
        const Monomial l = den_.leading().m.lcm(o.den_.leading().m);
        num_ = num_.multiply_monomial(l.quotient(den_.leading().m)) + o.num_.multiply_monomial(l.quotient(o.den_.leading().m));
        den_ = Polynomial::monomial(den_.nvars(), l);
    } else {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ = den_ * o.den_;
    }
    canonicalize();
    return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
    if (num_.is_zero()) return *this;
    if (o.num_.is_zero()) return *this = RationalFunction(std::max(nvars(), o.nvars()));
    num_ = num_ * o.num_;
    den_ = den_ * o.den_;
    canonicalize();
    return *this;
}

RationalFunction& RationalFunction::operator*=(const Rational& s) {
    num_ *= s;
    if (num_.is_zero()) den_ = Polynomial(den_.nvars(), 1);
    return *this;
}

Rational RationalFunction::evaluate(const std::vector<Rational>& point) const {
    const Rational d = den_.evaluate(point);
    if (d == 0) throw std::domain_error("rational function evaluated at a pole");
    return num_.evaluate(point) / d;
}

std::string RationalFunction::to_string(const std::vector<std::string>& names) const {
    if (den_.is_constant()) return num_.to_string(names);
    std::string n = num_.to_string(names);
    if (num_.terms().size() > 1) n = "(" + n + ")";
    std::string d = den_.to_string(names);
    if (den_.terms().size() > 1 || den_.leading().m.degree > 1) d = "(" + d + ")";
    return n + "/" + d;
}

}  // namespace causalcoh::poly
