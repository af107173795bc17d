#include "causalcoh/calabi.hpp"

#include "causalcoh/simplicial.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace causalcoh::calabi {

using tensor::OdotShape;
using tensor::RF;
using tensor::TraceKind;

namespace {

void require_level(int level, int lo, int hi, const char* op) {
    if (level < lo || level > hi)
        throw CalabiLevelError(std::string(op) + " index " + std::to_string(level) + " outside [" + std::to_string(lo) + ", " +
                               std::to_string(hi) + "]");
}

void require_input(const Chart& chart, const CalabiField& field, int expected, const char* op) {
    if (field.level() != expected)
        throw CalabiLevelError(std::string(op) + " expects a level-" + std::to_string(expected) + " field, got level " +
                               std::to_string(field.level()));
    chart.require(field.tensor());
}

Tensor perm(const Tensor& t, std::vector<int> p) { return tensor::permute(t, p); }

Rational q(long a, long b = 1) {
    Rational r(a, b);
    r.canonicalize();
    return r;
}

// 2k/(n(n-1))
Rational curvature_unit(const Chart& chart) {
    const long n = chart.n();
    return Rational(2) * chart.k() / Rational(n * (n - 1));
}

// Outputs are built from symmetric formulas; the tag records the level.
CalabiField tagged(int level, Tensor t) {
    t.symmetry = level_diagram(level);
    return CalabiField(level, std::move(t));
}

}  // namespace

YoungDiagram level_diagram(int level) {
    switch (level) {
        case 0: return YoungDiagram{{1}};
        case 1: return YoungDiagram{{2}};
        case 2: return YoungDiagram{{2, 2}};
        case 3: return YoungDiagram{{2, 2, 1}};
        case 4: return YoungDiagram{{2, 2, 1, 1}};
        default: throw CalabiLevelError("Calabi level " + std::to_string(level) + " outside [0, 4]");
    }
}

CalabiField::CalabiField(int level, Tensor field) : level_(level), field_(std::move(field)) {
    const auto d = level_diagram(level);
    if (field_.rank() != d.cells() || !field_.all_lower())
        throw tensor::TensorShapeError("level-" + std::to_string(level) + " field must be an all-lower rank-" +
                                       std::to_string(d.cells()) + " tensor");
    if (!tensor::has_symmetry(field_, d))
        throw tensor::TensorShapeError("level-" + std::to_string(level) + " field lacks the " + d.to_string() + " symmetry");
    field_.symmetry = d;
}

CalabiField zero_field(int n, int level) { return CalabiField(level, Tensor(n, level_diagram(level).cells())); }

CalabiField random_field(int n, int level, Rng& rng, unsigned degree, int nonzero) {
    const auto d = level_diagram(level);
    const int k = d.cells();
    if (tensor::hook_rank(d, n) == 0) return zero_field(n, level);
    const tensor::YoungProjector proj(d);
    // Seed components whose columns carry distinct values, so the projection
    // rarely annihilates them; redraw if it does.
    for (int attempt = 0; attempt < 16; ++attempt) {
        Tensor t(n, k);
        for (int c = 0; c < nonzero; ++c) {
            std::vector<int> idx(static_cast<std::size_t>(k));
            for (const auto& col : proj.column_slots()) {
                std::vector<int> pool(static_cast<std::size_t>(n));
                std::iota(pool.begin(), pool.end(), 0);
                for (std::size_t i = 0; i < col.size(); ++i) {
                    std::swap(pool[i], pool[static_cast<std::size_t>(rng.uniform(static_cast<long>(i), n - 1))]);
                    idx[static_cast<std::size_t>(col[i])] = pool[i];
                }
            }
            t.at(idx) += tensor::random_polynomial_tensor(n, 0, rng, degree, 1)[0];
        }
        Tensor p = proj.apply(t);
        if (!p.is_zero()) return CalabiField(level, std::move(p));
    }
    return zero_field(n, level);
}

CalabiField B(const Chart& chart, int l, const CalabiField& field, Exec exec) {
    require_level(l, 1, 4, "B");
    require_input(chart, field, l - 1, "B");
    const Tensor& t = field.tensor();
    switch (l) {
        case 1: {
            const Tensor nv = tensor::nabla(chart, t, exec);
            return tagged(1, nv + perm(nv, {1, 0}));
        }
        case 2: {
            const Tensor m = tensor::nabla(chart, tensor::nabla(chart, t, exec), exec);
            // S(a,c;b,d) as a tensor in (a,b,c,d)
            const Tensor s = perm(m, {0, 2, 1, 3}) + perm(m, {2, 0, 1, 3});
            Tensor out = s - perm(s, {1, 0, 2, 3}) - perm(s, {0, 1, 3, 2}) + perm(s, {1, 0, 3, 2});
            out *= q(1, 2);
            if (chart.k() != 0) {
                Tensor gh = tensor::odot(tensor::metric(chart), t, OdotShape::s2s2);
                gh *= chart.k() / Rational(chart.n() * (chart.n() - 1));
                out += gh;
            }
            return tagged(2, std::move(out));
        }
        case 3: {
            const Tensor nr = tensor::nabla(chart, t, exec);
            return tagged(3, nr + perm(nr, {1, 2, 0, 3, 4}) + perm(nr, {2, 0, 1, 3, 4}));
        }
        default: {
            const Tensor nb = tensor::nabla(chart, t, exec);
            return tagged(4, nb - perm(nb, {1, 0, 2, 3, 4, 5}) + perm(nb, {2, 0, 1, 3, 4, 5}) - perm(nb, {3, 0, 1, 2, 4, 5}));
        }
    }
}

CalabiField E(const Chart& chart, int l, const CalabiField& field, Exec exec) {
    require_level(l, 1, 4, "E");
    require_input(chart, field, l, "E");
    const Tensor& t = field.tensor();
    switch (l) {
        case 1: {
            Tensor out = tensor::divergence(chart, t, exec);
            Tensor grad = tensor::nabla(chart, tensor::trace(chart, t, TraceKind::h), exec);
            grad *= q(1, 2);
            out -= grad;
            return tagged(0, std::move(out));
        }
        case 2: return tagged(1, tensor::trace(chart, t, TraceKind::r));
        case 3: {
            const Tensor d = tensor::divergence(chart, t, exec);
            Tensor out = d + perm(d, {2, 3, 0, 1});
            const Tensor w = tensor::nabla(chart, tensor::trace(chart, t, TraceKind::b5), exec);
            out -= perm(w, {0, 2, 3, 1}) - perm(w, {1, 2, 3, 0}) + perm(w, {2, 0, 1, 3}) - perm(w, {3, 0, 1, 2});
            out *= q(1, 2);
            return tagged(2, std::move(out));
        }
        default: {
            const Tensor d = tensor::divergence(chart, t, exec);
            Tensor first = Rational(2) * d + perm(d, {3, 4, 0, 1, 2}) + perm(d, {3, 4, 1, 2, 0}) + perm(d, {3, 4, 2, 0, 1});
            first *= q(1, 3);
            const Tensor v = tensor::nabla(chart, tensor::trace(chart, t, TraceKind::b6), exec);
            Tensor second = Rational(2) * (perm(v, {3, 0, 1, 2, 4}) - perm(v, {4, 0, 1, 2, 3}));
            second += perm(v, {0, 3, 4, 2, 1}) - perm(v, {0, 3, 4, 1, 2});
            second += perm(v, {1, 3, 4, 0, 2}) - perm(v, {1, 3, 4, 2, 0});
            second += perm(v, {2, 3, 4, 1, 0}) - perm(v, {2, 3, 4, 0, 1});
            second *= q(1, 6);
            return tagged(3, first + second);
        }
    }
}

CalabiField P(const Chart& chart, int l, const CalabiField& field, Exec exec) {
    require_level(l, 0, 4, "P");
    require_input(chart, field, l, "P");
    const Tensor& t = field.tensor();
    Tensor out = tensor::box_tensor(chart, t, exec);
    const Rational& k = chart.k();
    if (k == 0) return tagged(l, std::move(out));
    const long n = chart.n();
    const Rational c = curvature_unit(chart);
    const Tensor g = tensor::metric(chart);
    switch (l) {
        case 0: out += (k / Rational(n)) * t; break;
        case 1: {
            out -= c * t;
            const RF tr = tensor::trace(chart, t, TraceKind::h)[0];
            Tensor gt = g;
            gt *= tr;
            out += c * gt;
            break;
        }
        case 2:
            out -= (Rational(2) * k / Rational(n)) * t;
            out += c * tensor::odot(g, tensor::trace(chart, t, TraceKind::r), OdotShape::s2s2);
            break;
        case 3:
            out -= (k * Rational(3 * n - 7) / Rational(n * (n - 1))) * t;
            out -= c * tensor::odot(g, tensor::trace(chart, t, TraceKind::b5), OdotShape::s2_21);
            break;
        default:
            out -= (Rational(2) * k * Rational(2 * n - 7) / Rational(n * (n - 1))) * t;
            out += c * tensor::odot(g, tensor::trace(chart, t, TraceKind::b6), OdotShape::s2_211);
            break;
    }
    return tagged(l, std::move(out));
}

bool IdentityReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.passed(); });
}

IdentityReport verify_calabi_identities(const Chart& chart, std::uint64_t seed, unsigned degree, int cases, Exec exec) {
    if (degree == 0) throw std::invalid_argument("degree bound must be at least 1");
    if (cases < 0) throw std::invalid_argument("case count must be non-negative");
    const int n = chart.n();
    IdentityReport report{chart.label(), seed, degree, {}};
    Rng rng(seed);
    for (int level = 0; level <= 4; ++level) {
        IdentityCheck homotopy;
        homotopy.level = level;
        homotopy.name = level == 0   ? "E1B1=P0"
                        : level == 4 ? "B4E4=P4"
                                     : "E" + std::to_string(level + 1) + "B" + std::to_string(level + 1) + "+B" +
                                           std::to_string(level) + "E" + std::to_string(level) + "=P" + std::to_string(level);
        IdentityCheck complex;
        complex.level = level;
        const bool has_complex = level <= 2;
        if (has_complex) complex.name = "B" + std::to_string(level + 2) + "B" + std::to_string(level + 1) + "=0";
        for (int c = 0; c < cases; ++c) {
            const CalabiField f = random_field(n, level, rng, degree);
            const CalabiField p = P(chart, level, f, exec);
            Tensor lhs(n, f.tensor().rank());
            if (level < 4) {
                const CalabiField bf = B(chart, level + 1, f, exec);
                lhs += E(chart, level + 1, bf, exec).tensor();
                if (has_complex) {
                    ++complex.cases;
                    if (!B(chart, level + 2, bf, exec).is_zero()) ++complex.failures;
                }
            }
            if (level > 0) lhs += B(chart, level, E(chart, level, f, exec), exec).tensor();
            ++homotopy.cases;
            if (lhs != p.tensor()) ++homotopy.failures;
        }
        report.checks.push_back(homotopy);
        if (has_complex) report.checks.push_back(complex);
    }
    return report;
}

LinearizationResult linearized_riemann_oracle(const Chart& chart, const CalabiField& h) {
    require_input(chart, h, 1, "linearized_riemann_oracle");
    Tensor rdot = tensor::riemann_first_order(chart, h.tensor()).second;
    const Tensor half_b2 = q(-1, 2) * B(chart, 2, h).tensor();
    const Tensor gh = tensor::odot(tensor::metric(chart), h.tensor(), OdotShape::s2s2);
    Tensor predicted = half_b2 + curvature_unit(chart) * gh;
    Tensor balanced = half_b2 + (q(1, 2) * curvature_unit(chart)) * gh;
    return {tagged(2, std::move(rdot)), tagged(2, std::move(predicted)), tagged(2, std::move(balanced))};
}

unsigned sufficient_degree(SolutionOperator op, const Chart& chart) {
    if (chart.kind() == tensor::ChartKind::minkowski) return 1;
    return op == SolutionOperator::killing ? 2 : 3;
}

namespace {

std::vector<poly::Monomial> monomials_up_to(int n, unsigned degree) {
    std::vector<poly::Monomial> out{poly::Monomial{}};
    std::vector<poly::Monomial> layer{poly::Monomial{}};
    for (unsigned d = 1; d <= degree; ++d) {
        std::vector<poly::Monomial> next;
        for (const auto& m : layer)
            for (int i = 0; i < n; ++i) {
                // Only append variables >= the last one used, so each monomial appears once.
                int last = 0;
                for (int j = 0; j < n; ++j)
                    if (m.e[static_cast<std::size_t>(j)] > 0) last = j;
                if (i < last) continue;
                next.push_back(m * poly::Monomial::var(i));
            }
        out.insert(out.end(), next.begin(), next.end());
        layer = std::move(next);
    }
    return out;
}

// Incremental sparse row echelon form over Q, used for kernel dimensions.
class SparseEchelon {
public:
    using Row = std::vector<std::pair<std::size_t, Rational>>;

    void insert(Row row) {
        while (!row.empty()) {
            const std::size_t lead = row.front().first;
            const auto it = pivots_.find(lead);
            if (it == pivots_.end()) {
                const Rational inv = 1 / row.front().second;
                for (auto& [c, v] : row) v *= inv;
                pivots_.emplace(lead, std::move(row));
                return;
            }
            const Rational factor = row.front().second;
            row = axpy(row, it->second, factor);
        }
    }
    std::size_t rank() const { return pivots_.size(); }

private:
    static Row axpy(const Row& a, const Row& b, const Rational& f) {
        Row out;
        std::size_t i = 0, j = 0;
        while (i < a.size() || j < b.size()) {
            if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
                out.push_back(a[i++]);
            } else if (i == a.size() || b[j].first < a[i].first) {
                out.emplace_back(b[j].first, -f * b[j].second);
                ++j;
            } else {
                Rational v = a[i].second - f * b[j].second;
                if (v != 0) out.emplace_back(a[i].first, std::move(v));
                ++i;
                ++j;
            }
        }
        return out;
    }
    std::map<std::size_t, Row> pivots_;
};

poly::Polynomial lcm(const poly::Polynomial& a, const poly::Polynomial& b) {
    if (a.is_monomial() && b.is_monomial()) return poly::Polynomial::monomial(a.nvars(), a.leading().m.lcm(b.leading().m));
    return *(a * b).exact_divide(poly::gcd(a, b));
}

}  // namespace

SolutionDimension polynomial_solution_dimension(SolutionOperator op, const Chart& chart, unsigned degree) {
    const int n = chart.n();
    const auto monos = monomials_up_to(n, degree);
    std::vector<std::vector<int>> slots;  // upper-index component labels
    if (op == SolutionOperator::killing) {
        for (int a = 0; a < n; ++a) slots.push_back({a});
    } else {
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) slots.push_back({a, b});
    }
    // Operator images of every basis element.
    std::vector<Tensor> images;
    for (const auto& s : slots)
        for (const auto& m : monos) {
            const RF value(poly::Polynomial::monomial(n, m));
            if (op == SolutionOperator::killing) {
                Tensor v(n, 1);
                v.at({s[0]}) = chart.g(s[0]) * value;
                const Tensor nv = tensor::nabla(chart, v, Exec::serial);
                images.push_back(nv + tensor::permute(nv, {1, 0}));
            } else {
                Tensor w(n, 2);
                const RF lowered = chart.g(s[0]) * chart.g(s[1]) * value;
                w.at({s[0], s[1]}) = lowered;
                w.at({s[1], s[0]}) = -lowered;
                const Tensor nw = tensor::nabla(chart, w, Exec::serial);
                images.push_back(nw + tensor::permute(nw, {1, 0, 2}));
            }
        }
    const std::size_t unknowns = images.size();
    // Rows of the linear system: (component, monomial of the cleared numerator).
    std::map<std::pair<std::size_t, std::array<std::uint16_t, poly::kMaxVars>>, SparseEchelon::Row> rows;
    const std::size_t comps = images.front().size();
    for (std::size_t f = 0; f < comps; ++f) {
        poly::Polynomial common(n, 1);
        bool any = false;
        for (const auto& img : images)
            if (!img[f].is_zero()) {
                common = lcm(common, img[f].den());
                any = true;
            }
        if (!any) continue;
        for (std::size_t j = 0; j < unknowns; ++j) {
            const RF& c = images[j][f];
            if (c.is_zero()) continue;
            const poly::Polynomial cleared = c.num() * *common.exact_divide(c.den());
            for (const auto& term : cleared.terms()) rows[{f, term.m.e}].emplace_back(j, term.c);
        }
    }
    SparseEchelon echelon;
    for (auto& [key, row] : rows) echelon.insert(std::move(row));
    SolutionDimension out;
    out.unknowns = unknowns;
    out.dim = unknowns - echelon.rank();
    out.degree = degree;
    out.sufficient_degree = sufficient_degree(op, chart);
    return out;
}

std::string background_tag(Background b) { return b == Background::minkowski4 ? "minkowski4" : "deSitter4"; }

std::optional<Background> background_from_tag(const std::string& tag) {
    if (tag == "minkowski4") return Background::minkowski4;
    if (tag == "deSitter4") return Background::de_sitter4;
    return std::nullopt;
}

Chart background_chart(Background b) { return b == Background::minkowski4 ? Chart::minkowski(4) : Chart::de_sitter(4, 1); }

const char* indexing_tag(IndexingRule r) { return r == IndexingRule::reflection ? "reflection" : "shift"; }

std::vector<int> stated_sc_support(Background) { return {3}; }

std::vector<int> stated_psc_support(Background b) {
    if (b == Background::minkowski4) return {3, 4};
    return {0, 3, 4};
}

namespace {

std::vector<int> support_of(const std::vector<std::size_t>& dims) {
    std::vector<int> s;
    for (std::size_t l = 0; l < dims.size(); ++l)
        if (dims[l] != 0) s.push_back(static_cast<int>(l));
    return s;
}

}  // namespace

CalabiTable assemble_table(Background b, IndexingRule rule) {
    constexpr int n = 4;
    const Chart chart = background_chart(b);
    CalabiTable out;
    out.background = background_tag(b);
    out.rule = rule;
    // Cauchy surface: R^3 for Minkowski, S^3 for de Sitter.
    const auto sigma = b == Background::minkowski4 ? simp::preset_profile("euclidean", 3) : simp::preset_profile("sphere", 3);
    const auto de_rham = derham::full_table(derham::make_model(n, sigma));
    for (int l = 0; l <= n; ++l) out.de_rham.push_back(de_rham.dim(derham::SupportClass::unrestricted, l));
    out.killing_dim = polynomial_solution_dimension(SolutionOperator::killing, chart, sufficient_degree(SolutionOperator::killing, chart)).dim;
    out.killing_yano_dim =
        polynomial_solution_dimension(SolutionOperator::killing_yano, chart, sufficient_degree(SolutionOperator::killing_yano, chart)).dim;

    auto hc = [&](int l) -> std::size_t { return l < 0 || l > n ? 0 : out.de_rham[static_cast<std::size_t>(l)] * out.killing_dim; };
    auto hc0 = [&](int l) -> std::size_t {
        if (l < 0 || l > n) return 0;
        const int j = rule == IndexingRule::reflection ? n - l : l - n;
        return j < 0 || j > n ? 0 : out.de_rham[static_cast<std::size_t>(j)] * out.killing_yano_dim;
    };

    auto& t = out.table;
    t.n = n;
    t.label = out.background;
    for (auto& row : t.dims) row.assign(n + 3, 0);
    for (auto& row : t.solution_dims) row.assign(n + 3, 0);
    using derham::SupportClass;
    for (int l = derham::CohomologyTable::kLowest; l <= n + 1; ++l) {
        t.at(SupportClass::unrestricted, l) = hc(l);
        t.at(SupportClass::compact, l) = hc0(l);
        t.at(SupportClass::spacelike_compact, l) = l < 0 || l > n ? 0 : hc0(l + 1);
        t.at(SupportClass::timelike_compact, l) = l < 0 || l > n ? 0 : hc(l - 1);
        t.solution_at(derham::SolutionClass::spacelike_compact, l) = l < 0 || l > n ? 0 : hc0(l) + hc0(l + 1);
        t.solution_at(derham::SolutionClass::unrestricted, l) = l < 0 || l > n ? 0 : hc(l) + hc(l - 1);
    }
    return out;
}

CalabiTable calabi_table(Background b) {
    std::vector<IndexingCandidate> checks;
    std::vector<CalabiTable> fitting;
    for (auto rule : {IndexingRule::reflection, IndexingRule::shift}) {
        CalabiTable t = assemble_table(b, rule);
        IndexingCandidate check{rule, {}, false, false};
        std::vector<std::size_t> sc, psc;
        for (int l = 0; l <= 4; ++l) {
            check.hc0.push_back(t.table.dim(derham::SupportClass::compact, l));
            sc.push_back(t.table.dim(derham::SupportClass::spacelike_compact, l));
            psc.push_back(t.table.solution_dim(derham::SolutionClass::spacelike_compact, l));
        }
        check.sc_pattern = support_of(sc) == stated_sc_support(b);
        check.psc_pattern = support_of(psc) == stated_psc_support(b);
        checks.push_back(check);
        if (check.fits()) fitting.push_back(std::move(t));
    }
    if (fitting.empty()) {
        std::string msg = "no compact-support indexing reproduces the stated vanishing pattern for " + background_tag(b) + ":";
        for (const auto& c : checks) {
            msg += std::string(" ") + indexing_tag(c.rule) + " HC_0=(";
            for (std::size_t l = 0; l < c.hc0.size(); ++l) msg += (l ? "," : "") + std::to_string(c.hc0[l]);
            msg += ") sc " + std::string(c.sc_pattern ? "ok" : "mismatch") + ", P-sc " + (c.psc_pattern ? "ok" : "mismatch") + ";";
        }
        throw CalabiIndexingError(msg, checks);
    }
    for (const auto& t : fitting)
        if (t.table.dims != fitting.front().table.dims || t.table.solution_dims != fitting.front().table.solution_dims)
            throw CalabiIndexingError("indexing rules that fit the stated pattern disagree for " + background_tag(b), checks);
    CalabiTable out = std::move(fitting.front());
    out.candidates = std::move(checks);
    return out;
}

}  // namespace causalcoh::calabi
