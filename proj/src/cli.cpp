#include "causalcoh/cli.hpp"

#include "causalcoh/calabi.hpp"
#include "causalcoh/causal_derham.hpp"
#include "causalcoh/forms.hpp"
#include "causalcoh/generators.hpp"
#include "causalcoh/les.hpp"
#include "causalcoh/simplicial.hpp"
#include "causalcoh/young.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

namespace causalcoh::cli {

using Json = nlohmann::ordered_json;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Check {
    std::string name;
    int cases = 0;
    int failures = 0;
};

struct Options {
    std::string format = "json";
    // derham
    std::string preset;
    int m = -1;
    std::string triangulation;
    int n = -1;
    // calabi, killing, verify
    std::string background = "minkowski4";
    std::string indexing;
    // verify
    std::string suite;
    std::uint64_t seed = 42;
    unsigned degree = 2;
    int cases = -1;
    // hook
    std::string diagram;
    // killing
    std::string op;
};

Json envelope(const std::vector<std::string>& args, const std::string& digest_input, std::optional<std::uint64_t> seed) {
    Json j;
    j["schema"] = kSchema;
    j["command"] = args;
    j["inputs_digest"] = "fnv1a64:" + fnv1a_hex(digest_input);
    j["seed"] = seed ? Json(*seed) : Json(nullptr);
    return j;
}

Json diagnostic(const std::string& kind, const std::string& message) {
    Json j;
    j["schema"] = kSchema;
    j["error"] = {{"kind", kind}, {"message", message}};
    return j;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read triangulation file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Json table_rows(const derham::CohomologyTable& t) {
    Json rows = Json::array();
    for (auto x : {derham::SupportClass::unrestricted, derham::SupportClass::compact, derham::SupportClass::retarded,
                   derham::SupportClass::advanced, derham::SupportClass::past_compact, derham::SupportClass::future_compact,
                   derham::SupportClass::spacelike_compact, derham::SupportClass::timelike_compact})
        for (int p = 0; p <= t.n; ++p) rows.push_back({{"support", derham::support_tag(x)}, {"degree", p}, {"dim", t.dim(x, p)}});
    return rows;
}

Json solution_rows(const derham::CohomologyTable& t) {
    Json rows = Json::array();
    for (auto [x, tag] : {std::pair{derham::SolutionClass::spacelike_compact, "sc"}, std::pair{derham::SolutionClass::unrestricted, "unrestricted"}})
        for (int p = 0; p <= t.n; ++p) rows.push_back({{"support", tag}, {"degree", p}, {"dim", t.solution_dim(x, p)}});
    return rows;
}

std::string markdown_table(const derham::CohomologyTable& t, const std::string& title, const std::string& op) {
    std::ostringstream md;
    md << "## " << title << "\n\n| support |";
    for (int p = 0; p <= t.n; ++p) md << " " << p << " |";
    md << "\n|---|";
    for (int p = 0; p <= t.n; ++p) md << "---|";
    md << "\n";
    auto row = [&](const std::string& label, auto dim) {
        md << "| " << label << " |";
        for (int p = 0; p <= t.n; ++p) md << " " << dim(p) << " |";
        md << "\n";
    };
    for (auto x : {derham::SupportClass::unrestricted, derham::SupportClass::compact, derham::SupportClass::retarded,
                   derham::SupportClass::advanced, derham::SupportClass::past_compact, derham::SupportClass::future_compact,
                   derham::SupportClass::spacelike_compact, derham::SupportClass::timelike_compact})
        row(derham::support_tag(x), [&](int p) { return t.dim(x, p); });
    row(op + ",sc", [&](int p) { return t.solution_dim(derham::SolutionClass::spacelike_compact, p); });
    row(op, [&](int p) { return t.solution_dim(derham::SolutionClass::unrestricted, p); });
    return md.str();
}

Json checks_json(const std::vector<Check>& checks) {
    Json arr = Json::array();
    for (const auto& c : checks)
        arr.push_back({{"name", c.name}, {"cases", c.cases}, {"failures", c.failures}, {"passed", c.failures == 0}});
    return arr;
}

bool all_passed(const std::vector<Check>& checks) {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.failures == 0; });
}

std::string checks_markdown(const std::string& title, const std::vector<Check>& checks) {
    std::ostringstream md;
    md << "## " << title << "\n\n| check | cases | failures | verdict |\n|---|---|---|---|\n";
    for (const auto& c : checks) md << "| " << c.name << " | " << c.cases << " | " << c.failures << " | " << (c.failures ? "FAIL" : "pass") << " |\n";
    return md.str();
}

calabi::Background parse_background(const std::string& tag) {
    const auto b = calabi::background_from_tag(tag);
    if (!b) throw UsageError("unknown background '" + tag + "' (expected minkowski4 or deSitter4)");
    return *b;
}

// Suites ----------------------------------------------------------------

std::vector<Check> homology_suite(std::uint64_t seed, int cases) {
    Rng rng(seed);
    Check les{"long-exact-sequence", 0, 0}, contractible{"contractible-acyclic", 0, 0};
    for (int i = 0; i < cases; ++i) {
        const int degrees = static_cast<int>(rng.uniform(1, 5));
        const auto s = hom::random_short_exact_sequence(0, degrees, 6, rng);
        ++les.cases;
        if (!s.violations().empty() || !hom::all_exact(hom::check_exactness(hom::long_exact_sequence(s)))) ++les.failures;
    }
    for (int i = 0; i < std::max(1, cases / 4); ++i) {
        const auto w = hom::random_contractible(0, 4, 6, rng);
        const auto v = hom::contractibility_check(w.f, w.h);
        ++contractible.cases;
        if (!v.invertible || !v.cohomology_vanishes) ++contractible.failures;
    }
    return {les, contractible};
}

std::vector<Check> forms_suite(const tensor::Chart& chart, std::uint64_t seed, unsigned degree, int cases) {
    using namespace tensor;
    Rng rng(seed);
    const int n = chart.n();
    Check dd{"d^2=0", 0, 0}, commute{"d.box=box.d", 0, 0}, codiff{"delta=divergence", 0, 0}, scalar{"scalar-calibration", 0, 0};
    const Chart flat = Chart::minkowski(n);
    for (int i = 0; i < cases; ++i) {
        const int p = static_cast<int>(rng.uniform(0, n - 1));
        const Tensor w = forms::random_form(n, p, rng, degree, 3);
        ++dd.cases;
        if (!forms::d(forms::d(w)).is_zero()) ++dd.failures;
        ++commute.cases;
        if (forms::d(forms::box_dR(chart, w)) != forms::box_dR(chart, forms::d(w))) ++commute.failures;
        if (p > 0) {
            ++codiff.cases;
            if (forms::delta(chart, w) != divergence(chart, w)) ++codiff.failures;
        }
        const Tensor f = random_polynomial_tensor(n, 0, rng, degree + 1, 3);
        RF expected(n);
        for (int a = 0; a < n; ++a) expected += Rational(flat.eta(a)) * f[0].derivative(a).derivative(a);
        ++scalar.cases;
        if (forms::box_dR(flat, f)[0] != expected) ++scalar.failures;
    }
    return {dd, commute, codiff, scalar};
}

std::vector<Check> young_suite(std::uint64_t seed, unsigned degree, int cases) {
    using namespace tensor;
    std::vector<Check> out;
    for (int n : {3, 4})
        for (int level = 0; level <= 4; ++level) {
            const auto d = calabi::level_diagram(level);
            if (n == 4 && d.cells() > 5) continue;
            const auto audit = audit_projector(d, n);
            out.push_back({"rank" + d.to_string() + "@n=" + std::to_string(n), 1, audit.rank == hook_rank(d, n) && audit.idempotent ? 0 : 1});
        }
    Rng rng(seed);
    Check idem{"projection-idempotent", 0, 0};
    for (int i = 0; i < cases; ++i) {
        const auto d = calabi::level_diagram(static_cast<int>(rng.uniform(0, 4)));
        const Tensor t = project(random_polynomial_tensor(4, d.cells(), rng, degree, 4), d);
        ++idem.cases;
        if (project(t, d) != t || !has_symmetry(t, d)) ++idem.failures;
    }
    out.push_back(idem);
    return out;
}

std::vector<Check> calabi_suite(const tensor::Chart& chart, std::uint64_t seed, unsigned degree, int cases) {
    std::vector<Check> out;
    for (const auto& c : calabi::verify_calabi_identities(chart, seed, degree, cases).checks) out.push_back({c.name, c.cases, c.failures});
    Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
    Check stated{"linearized-riemann", 0, 0}, balanced{"linearized-riemann-balanced", 0, 0};
    for (int i = 0; i < cases; ++i) {
        const auto r = calabi::linearized_riemann_oracle(chart, calabi::random_field(chart.n(), 1, rng, degree));
        ++stated.cases;
        ++balanced.cases;
        if (!r.relation_holds()) ++stated.failures;
        if (!r.balanced_relation_holds()) ++balanced.failures;
    }
    out.push_back(stated);
    out.push_back(balanced);
    return out;
}

// Commands --------------------------------------------------------------

int cmd_derham(const Options& o, const std::vector<std::string>& args, std::ostream& out) {
    if (o.preset.empty() == o.triangulation.empty()) throw UsageError("derham needs exactly one of --preset or --triangulation");
    std::string digest = "derham\n";
    simp::CohomologyProfile sigma;
    if (!o.preset.empty()) {
        if (o.m < 0) throw UsageError("--preset needs --m");
        try {
            sigma = simp::preset_profile(o.preset, o.m);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        digest += "preset=" + o.preset + "\nm=" + std::to_string(o.m) + "\n";
    } else {
        const std::string text = read_file(o.triangulation);
        try {
            sigma = simp::profile_from_triangulation(simp::triangulation_from_json(text), true, o.triangulation);
        } catch (const std::exception& e) {
            throw UsageError(e.what());
        }
        digest += "triangulation=" + text + "\n";
    }
    const int n = o.n < 0 ? sigma.m + 1 : o.n;
    digest += "n=" + std::to_string(n) + "\n";
    derham::SpacetimeModel model;
    try {
        model = derham::make_model(n, sigma);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    const auto table = derham::full_table(model);
    const auto violations = derham::pairing_audit(table, n);
    const auto routes = derham::route_consistency(model);
    const bool ok = violations.empty() && derham::routes_agree(routes);
    if (o.format == "md") {
        out << markdown_table(table, "de Rham cohomology of " + model.label, "box");
        out << "\npairing audit: " << (violations.empty() ? "pass" : "FAIL") << ", routes: " << (derham::routes_agree(routes) ? "agree" : "DISAGREE")
            << "\n";
        return ok ? ExitCode::ok : ExitCode::audit_failure;
    }
    Json j = envelope(args, digest, std::nullopt);
    Json v = Json::array();
    for (const auto& x : violations) v.push_back({{"relation", x.relation}, {"degree", x.p}, {"lhs", x.lhs}, {"rhs", x.rhs}});
    Json r = Json::array();
    for (const auto& x : routes)
        r.push_back({{"degree", x.p}, {"relation", x.relation}, {"via_m", x.via_m}, {"via_sigma", x.via_sigma}, {"agrees", x.agrees()}});
    j["results"] = {{"model", model.label}, {"n", n}, {"table", table_rows(table)}, {"solutions", solution_rows(table)},
                    {"audit", {{"pairing_violations", v}, {"routes", r}, {"passed", ok}}}};
    out << j.dump(2) << "\n";
    return ok ? ExitCode::ok : ExitCode::audit_failure;
}

Json candidates_json(const std::vector<calabi::IndexingCandidate>& cs) {
    Json arr = Json::array();
    for (const auto& c : cs)
        arr.push_back({{"rule", calabi::indexing_tag(c.rule)}, {"hc0", c.hc0}, {"sc_pattern", c.sc_pattern}, {"psc_pattern", c.psc_pattern}});
    return arr;
}

int cmd_calabi(const Options& o, const std::vector<std::string>& args, std::ostream& out) {
    const auto b = parse_background(o.background);
    std::string digest = "calabi\nbackground=" + o.background + "\nindexing=" + o.indexing + "\n";
    calabi::CalabiTable t;
    bool checked = true;
    if (o.indexing.empty()) {
        try {
            t = calabi::calabi_table(b);
        } catch (const calabi::CalabiIndexingError& e) {
            Json j = envelope(args, digest, std::nullopt);
            j["error"] = {{"kind", "indexing"}, {"message", e.what()}, {"candidates", candidates_json(e.candidates())}};
            out << j.dump(2) << "\n";
            return ExitCode::audit_failure;
        }
    } else {
        if (o.indexing != "reflection" && o.indexing != "shift") throw UsageError("--indexing must be reflection or shift");
        t = calabi::assemble_table(b, o.indexing == "reflection" ? calabi::IndexingRule::reflection : calabi::IndexingRule::shift);
        checked = false;
    }
    if (o.format == "md") {
        out << markdown_table(t.table, "Calabi cohomology of " + t.background + " (" + calabi::indexing_tag(t.rule) + ")", "P");
        out << "\ndim V_g = " << t.killing_dim << ", dim W_g = " << t.killing_yano_dim << (checked ? "" : ", pattern check skipped") << "\n";
        return ExitCode::ok;
    }
    Json j = envelope(args, digest, std::nullopt);
    j["results"] = {{"background", t.background},
                    {"indexing", calabi::indexing_tag(t.rule)},
                    {"pattern_checked", checked},
                    {"de_rham", t.de_rham},
                    {"killing_dim", t.killing_dim},
                    {"killing_yano_dim", t.killing_yano_dim},
                    {"table", table_rows(t.table)},
                    {"solutions", solution_rows(t.table)},
                    {"candidates", candidates_json(t.candidates)}};
    out << j.dump(2) << "\n";
    return ExitCode::ok;
}

int cmd_verify(const Options& o, const std::vector<std::string>& args, std::ostream& out) {
    if (o.degree == 0) throw UsageError("--degree must be at least 1");
    std::vector<Check> checks;
    int cases = o.cases;
    std::string background;
    if (o.suite == "homology") {
        if (cases < 0) cases = 200;
        checks = homology_suite(o.seed, cases);
    } else if (o.suite == "forms") {
        if (cases < 0) cases = 50;
        background = o.background;
        checks = forms_suite(calabi::background_chart(parse_background(o.background)), o.seed, o.degree, cases);
    } else if (o.suite == "young") {
        if (cases < 0) cases = 20;
        checks = young_suite(o.seed, o.degree, cases);
    } else if (o.suite == "calabi") {
        if (cases < 0) cases = 20;
        background = o.background;
        checks = calabi_suite(calabi::background_chart(parse_background(o.background)), o.seed, o.degree, cases);
    } else {
        throw UsageError("unknown suite '" + o.suite + "' (expected homology, forms, calabi or young)");
    }
    const bool ok = all_passed(checks);
    if (o.format == "md") {
        out << checks_markdown(o.suite + (background.empty() ? "" : " on " + background), checks);
        return ok ? ExitCode::ok : ExitCode::audit_failure;
    }
    const std::string digest = "verify\nsuite=" + o.suite + "\nbackground=" + background + "\ndegree=" + std::to_string(o.degree) +
                               "\ncases=" + std::to_string(cases) + "\nseed=" + std::to_string(o.seed) + "\n";
    Json j = envelope(args, digest, o.seed);
    j["results"] = {{"suite", o.suite}, {"background", background.empty() ? Json(nullptr) : Json(background)}, {"degree", o.degree},
                    {"cases", cases},   {"checks", checks_json(checks)},                                         {"all_passed", ok}};
    out << j.dump(2) << "\n";
    return ok ? ExitCode::ok : ExitCode::audit_failure;
}

int cmd_hook(const Options& o, const std::vector<std::string>& args, std::ostream& out) {
    tensor::YoungDiagram d;
    try {
        d = tensor::YoungDiagram::parse(o.diagram);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (o.n < 1) throw UsageError("--n must be positive");
    Json j = envelope(args, "hook\ndiagram=" + d.to_string() + "\nn=" + std::to_string(o.n) + "\n", std::nullopt);
    j["results"] = {{"diagram", d.to_string()}, {"n", o.n}, {"cells", d.cells()}, {"hook_product", tensor::hook_product(d).get_str()},
                    {"rank", tensor::hook_rank(d, o.n)}};
    out << j.dump(2) << "\n";
    return ExitCode::ok;
}

int cmd_killing(const Options& o, const std::vector<std::string>& args, std::ostream& out) {
    const auto b = parse_background(o.background);
    calabi::SolutionOperator op;
    if (o.op == "killing")
        op = calabi::SolutionOperator::killing;
    else if (o.op == "killingYano")
        op = calabi::SolutionOperator::killing_yano;
    else
        throw UsageError("--operator must be killing or killingYano");
    const auto s = calabi::polynomial_solution_dimension(op, calabi::background_chart(b), o.degree);
    Json j = envelope(args, "killing\nbackground=" + o.background + "\noperator=" + o.op + "\ndegree=" + std::to_string(o.degree) + "\n",
                      std::nullopt);
    j["results"] = {{"background", o.background},       {"operator", o.op},
                    {"degree", s.degree},               {"dim", s.dim},
                    {"unknowns", s.unknowns},           {"sufficient_degree", s.sufficient_degree},
                    {"below_sufficient_degree", s.below_sufficient()}};
    out << j.dump(2) << "\n";
    return ExitCode::ok;
}

}  // namespace

std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

int run(const std::vector<std::string>& args, std::ostream& out) {
    Options o;
    CLI::App app{"Causally restricted de Rham and Calabi cohomology toolkit", "causalcoh"};
    app.require_subcommand(1, 1);
    auto* derham = app.add_subcommand("derham", "de Rham cohomology table for R x Sigma");
    derham->add_option("--preset", o.preset, "Cauchy surface preset: point, sphere, torus, euclidean");
    derham->add_option("--m", o.m, "Cauchy surface dimension");
    derham->add_option("--triangulation", o.triangulation, "JSON file {\"vertices\": N, \"facets\": [[...]]}");
    derham->add_option("--n", o.n, "spacetime dimension (default m + 1)");
    derham->add_option("--format", o.format)->check(CLI::IsMember({"json", "md"}));

    auto* cal = app.add_subcommand("calabi", "Calabi cohomology table");
    cal->add_option("--background", o.background)->check(CLI::IsMember({"minkowski4", "deSitter4"}));
    cal->add_option("--indexing", o.indexing, "skip the pattern check and use one rule: reflection or shift");
    cal->add_option("--format", o.format)->check(CLI::IsMember({"json", "md"}));

    auto* verify = app.add_subcommand("verify", "seeded identity and audit suites");
    verify->add_option("--suite", o.suite)->required()->check(CLI::IsMember({"homology", "forms", "calabi", "young"}));
    verify->add_option("--background", o.background)->check(CLI::IsMember({"minkowski4", "deSitter4"}));
    verify->add_option("--seed", o.seed);
    verify->add_option("--degree", o.degree);
    verify->add_option("--cases", o.cases)->check(CLI::NonNegativeNumber);
    verify->add_option("--format", o.format)->check(CLI::IsMember({"json", "md"}));

    auto* hook = app.add_subcommand("hook", "fiber rank of a Young diagram");
    hook->add_option("--diagram", o.diagram, "comma list of row lengths")->required();
    hook->add_option("--n", o.n)->required();

    auto* killing = app.add_subcommand("killing", "polynomial Killing / Killing-Yano solution dimension");
    killing->add_option("--background", o.background)->check(CLI::IsMember({"minkowski4", "deSitter4"}));
    killing->add_option("--operator", o.op)->required();
    killing->add_option("--degree", o.degree)->required();

    std::vector<const char*> argv{"causalcoh"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ExitCode::ok;
    } catch (const CLI::ParseError& e) {
        out << diagnostic("usage", e.what()).dump(2) << "\n";
        return ExitCode::usage_error;
    }
    try {
        if (*derham) return cmd_derham(o, args, out);
        if (*cal) return cmd_calabi(o, args, out);
        if (*verify) return cmd_verify(o, args, out);
        if (*hook) return cmd_hook(o, args, out);
        return cmd_killing(o, args, out);
    } catch (const UsageError& e) {
        out << diagnostic("usage", e.what()).dump(2) << "\n";
        return ExitCode::usage_error;
    } catch (const std::exception& e) {
        out << diagnostic("internal", e.what()).dump(2) << "\n";
        return ExitCode::audit_failure;
    }
}

}  // namespace causalcoh::cli
