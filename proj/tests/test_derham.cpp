#include <doctest.h>

#include "causalcoh/causal_derham.hpp"

using namespace causalcoh;
using namespace causalcoh::derham;

namespace {

std::vector<std::size_t> row(const CohomologyTable& t, SupportClass x) {
    std::vector<std::size_t> r;
    for (int p = 0; p <= t.n; ++p) r.push_back(t.dim(x, p));
    return r;
}

std::vector<std::size_t> solution_row(const CohomologyTable& t, SolutionClass x) {
    std::vector<std::size_t> r;
    for (int p = 0; p <= t.n; ++p) r.push_back(t.solution_dim(x, p));
    return r;
}

SpacetimeModel s3_model() {
    return make_model(4, simp::profile_from_triangulation(simp::sphere_boundary(3), true, "S^3"));
}

}  // namespace

TEST_CASE("models validate dimensions") {
    CHECK_THROWS_AS(make_model(1, simp::preset_profile("point", 0)), std::invalid_argument);
    CHECK_THROWS_AS(make_model(4, simp::preset_profile("sphere", 2)), std::invalid_argument);
}

TEST_CASE("restricted dimensions") {
    const auto m = s3_model();
    for (int p = -1; p <= 5; ++p) {
        CHECK(restricted_dimension(m, SupportClass::past_compact, p) == 0);
        CHECK(restricted_dimension(m, SupportClass::retarded, p) == 0);
    }
    std::vector<std::size_t> sc;
    for (int p = 0; p <= 4; ++p) sc.push_back(restricted_dimension(m, SupportClass::spacelike_compact, p));
    CHECK(sc == std::vector<std::size_t>{1, 0, 0, 1, 0});
    CHECK(restricted_dimension(m, SupportClass::unrestricted, -1) == 0);
    CHECK(restricted_dimension(m, SupportClass::timelike_compact, 5) == 0);
}

TEST_CASE("solution dimensions") {
    const auto m = s3_model();
    std::vector<std::size_t> box;
    for (int p = 0; p <= 4; ++p) box.push_back(solution_dimension(m, SolutionClass::unrestricted, p));
    CHECK(box == std::vector<std::size_t>{1, 1, 0, 1, 1});

    const auto circle = make_model(2, simp::preset_profile("sphere", 1));
    std::vector<std::size_t> bsc;
    for (int p = 0; p <= 2; ++p) bsc.push_back(solution_dimension(circle, SolutionClass::spacelike_compact, p));
    CHECK(bsc == std::vector<std::size_t>{1, 2, 1});
    CHECK(solution_dimension(circle, SolutionClass::spacelike_compact, -1) == 0);
}

TEST_CASE("full tables") {
    const auto t = full_table(s3_model());
    CHECK(row(t, SupportClass::spacelike_compact) == std::vector<std::size_t>{1, 0, 0, 1, 0});
    CHECK(row(t, SupportClass::timelike_compact) == std::vector<std::size_t>{0, 1, 0, 0, 1});
    CHECK(solution_row(t, SolutionClass::spacelike_compact) == std::vector<std::size_t>{1, 1, 0, 1, 1});
    CHECK(solution_row(t, SolutionClass::unrestricted) == std::vector<std::size_t>{1, 1, 0, 1, 1});

    const auto mink = full_table(make_model(4, simp::preset_profile("euclidean", 3)));
    CHECK(row(mink, SupportClass::spacelike_compact) == std::vector<std::size_t>{0, 0, 0, 1, 0});
    CHECK(row(mink, SupportClass::timelike_compact) == std::vector<std::size_t>{0, 1, 0, 0, 0});
    CHECK(row(mink, SupportClass::compact) == std::vector<std::size_t>{0, 0, 0, 0, 1});

    for (const auto& tab : {t, mink})
        for (auto x : {SupportClass::retarded, SupportClass::advanced, SupportClass::past_compact, SupportClass::future_compact})
            for (int p = -1; p <= 5; ++p) CHECK(tab.dim(x, p) == 0);
}

TEST_CASE("pairing audit") {
    auto t = full_table(s3_model());
    CHECK(pairing_audit(t, 4).empty());
    t.at(SupportClass::spacelike_compact, 2) += 1;
    const auto v = pairing_audit(t, 4);
    REQUIRE(v.size() == 1);
    CHECK(v[0].p == 2);
    CHECK(v[0].relation == "sc/tc");
    CHECK(pairing_audit(full_table(make_model(2, simp::preset_profile("sphere", 1))), 2).empty());
}

TEST_CASE("route consistency and table invariants across presets") {
    const std::vector<SpacetimeModel> models = {
        s3_model(),
        make_model(4, simp::preset_profile("torus", 3)),
        make_model(4, simp::preset_profile("euclidean", 3)),
        make_model(2, simp::preset_profile("sphere", 1)),
        make_model(3, simp::preset_profile("euclidean", 2)),
        make_model(3, simp::kunneth(simp::preset_profile("sphere", 1), simp::preset_profile("euclidean", 1))),
    };
    for (const auto& m : models) {
        CHECK(routes_agree(route_consistency(m)));
        const auto t = full_table(m);
        CHECK(pairing_audit(t, m.n).empty());
        long alt_sc = 0, alt_sigma = 0;
        for (int p = -1; p <= m.n + 1; ++p) {
            CHECK(t.solution_dim(SolutionClass::spacelike_compact, p) ==
                  t.dim(SupportClass::spacelike_compact, p) + t.dim(SupportClass::spacelike_compact, p - 1));
            alt_sc += (p % 2 ? -1 : 1) * static_cast<long>(t.dim(SupportClass::spacelike_compact, p));
            alt_sigma += (p % 2 ? -1 : 1) * static_cast<long>(m.sigma.h_c_at(p));
        }
        CHECK(alt_sc == alt_sigma);
    }
}

TEST_CASE("support tags round-trip") {
    for (auto x : kAllSupports) CHECK(support_from_tag(support_tag(x)) == x);
    CHECK(!support_from_tag("nope"));
}

TEST_CASE("conal flag only changes the label") {
    const auto a = make_model(4, simp::preset_profile("sphere", 3));
    const auto b = make_model(4, simp::preset_profile("sphere", 3), {}, true);
    CHECK(a.label != b.label);
    CHECK(full_table(a).dims == full_table(b).dims);
}
