#include <doctest.h>

#include "causalcoh/simplicial.hpp"

#include <numeric>

using namespace causalcoh;
using namespace causalcoh::simp;

TEST_CASE("build_complex closes facets under faces") {
    const auto tri = build_complex(3, {{0, 1, 2}});
    CHECK(tri.f_vector() == std::vector<std::size_t>{3, 3, 1});
    CHECK(sphere_boundary(2).f_vector() == std::vector<std::size_t>{4, 6, 4});
    CHECK(sphere_boundary(3).f_vector() == std::vector<std::size_t>{5, 10, 10, 5});
    CHECK(tri.faces(1).front() == Simplex{0, 1});
}

TEST_CASE("build_complex rejects bad facets") {
    CHECK_THROWS_AS(build_complex(3, {{0, 3}}), TriangulationError);
    CHECK_THROWS_AS(build_complex(3, {{}}), TriangulationError);
    CHECK_THROWS_AS(build_complex(3, {{-1, 0}}), TriangulationError);
}

TEST_CASE("betti numbers") {
    const auto circle = sphere_boundary(1);
    CHECK(betti(circle, 0) == 1);
    CHECK(betti(circle, 1) == 1);

    const auto s3 = sphere_boundary(3);
    std::vector<std::size_t> b;
    for (int p = 0; p <= 3; ++p) b.push_back(betti(s3, p));
    CHECK(b == std::vector<std::size_t>{1, 0, 0, 1});

    const auto torus = seven_vertex_torus();
    CHECK(torus.f_vector() == std::vector<std::size_t>{7, 21, 14});
    CHECK(betti(torus, 0) == 1);
    CHECK(betti(torus, 1) == 2);
    CHECK(betti(torus, 2) == 1);

    const auto c = cone(torus);
    CHECK(betti(c, 0) == 1);
    for (int p = 1; p <= c.top_dimension(); ++p) CHECK(betti(c, p) == 0);
}

TEST_CASE("property: cochain and chain Betti numbers agree; Euler characteristic from f-vector") {
    const std::vector<SimplicialComplex> corpus = {sphere_boundary(1), sphere_boundary(2), sphere_boundary(3), seven_vertex_torus(),
                                                   cone(seven_vertex_torus()), build_complex(6, {{0, 1}, {1, 2}, {3, 4, 5}})};
    for (const auto& k : corpus) {
        long chi_f = 0, chi_b = 0;
        const auto f = k.f_vector();
        for (int p = 0; p <= k.top_dimension(); ++p) {
            CHECK(betti(k, p) == homology_betti(k, p));
            chi_f += (p % 2 ? -1 : 1) * static_cast<long>(f[static_cast<std::size_t>(p)]);
            chi_b += (p % 2 ? -1 : 1) * static_cast<long>(betti(k, p));
        }
        CHECK(chi_f == chi_b);
    }
}

TEST_CASE("profiles from triangulations") {
    const auto s3 = profile_from_triangulation(sphere_boundary(3), true);
    CHECK(s3.m == 3);
    CHECK(s3.h == std::vector<std::size_t>{1, 0, 0, 1});
    CHECK(s3.h_c == s3.h);
    CHECK(profile_from_triangulation(sphere_boundary(1), true).h == std::vector<std::size_t>{1, 1});
    CHECK(profile_from_triangulation(seven_vertex_torus(), true).h == std::vector<std::size_t>{1, 2, 1});
    CHECK_THROWS_AS(profile_from_triangulation(sphere_boundary(3), false), TriangulationError);

    // Poincaré duality on closed oriented triangulations.
    for (const auto& k : {sphere_boundary(2), sphere_boundary(3), seven_vertex_torus()}) {
        const auto p = profile_from_triangulation(k, true);
        for (int q = 0; q <= p.m; ++q) CHECK(p.h_at(q) == p.h_at(p.m - q));
    }
}

TEST_CASE("preset profiles") {
    CHECK(preset_profile("sphere", 3).h == profile_from_triangulation(sphere_boundary(3), true).h);
    const auto r3 = preset_profile("euclidean", 3);
    CHECK(r3.h == std::vector<std::size_t>{1, 0, 0, 0});
    CHECK(r3.h_c == std::vector<std::size_t>{0, 0, 0, 1});
    for (int q = 0; q <= 3; ++q) CHECK(r3.h_c_at(q) == r3.h_at(3 - q));
    CHECK(preset_profile("torus", 2).h == profile_from_triangulation(seven_vertex_torus(), true).h);
    CHECK(preset_profile("torus", 3).h == std::vector<std::size_t>{1, 3, 3, 1});
    CHECK(preset_profile("point", 0).h == std::vector<std::size_t>{1});
    CHECK_THROWS_AS(preset_profile("klein", 2), std::invalid_argument);
    CHECK_THROWS_AS(preset_profile("sphere", 0), std::invalid_argument);
}

TEST_CASE("kunneth") {
    const auto pt = preset_profile("point", 0);
    const auto s2 = preset_profile("sphere", 2);
    CHECK(kunneth(pt, s2).h == s2.h);
    CHECK(kunneth(pt, s2).h_c == s2.h_c);

    const auto prod = kunneth(preset_profile("euclidean", 1), s2);
    CHECK(prod.m == 3);
    CHECK(prod.h == std::vector<std::size_t>{1, 0, 1, 0});
    CHECK(prod.h_c == std::vector<std::size_t>{0, 1, 0, 1});

    const auto s1 = preset_profile("sphere", 1);
    CHECK(kunneth(s1, s1).h == std::vector<std::size_t>{1, 2, 1});

    const auto r2 = preset_profile("euclidean", 2);
    const auto t2 = preset_profile("torus", 2);
    CHECK(kunneth(r2, t2).h == kunneth(t2, r2).h);
    CHECK(kunneth(r2, t2).h_c == kunneth(t2, r2).h_c);
    CHECK(kunneth(kunneth(r2, t2), s1).h == kunneth(r2, kunneth(t2, s1)).h);
    CHECK(kunneth(kunneth(r2, t2), s1).h_c == kunneth(r2, kunneth(t2, s1)).h_c);
}

TEST_CASE("triangulation JSON") {
    const auto k = triangulation_from_json(R"({"vertices": 4, "facets": [[0,1,2],[0,1,3],[0,2,3],[1,2,3]]})");
    CHECK(k.f_vector() == std::vector<std::size_t>{4, 6, 4});
    CHECK_THROWS_AS(triangulation_from_json("{"), TriangulationError);
    CHECK_THROWS_AS(triangulation_from_json(R"({"vertices": 2})"), TriangulationError);
    CHECK_THROWS_AS(triangulation_from_json(R"({"vertices": 2, "facets": [[0, 5]]})"), TriangulationError);
    CHECK_THROWS_AS(triangulation_from_json(R"({"vertices": 2, "facets": [["a"]]})"), TriangulationError);
}
