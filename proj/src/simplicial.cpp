#include "causalcoh/simplicial.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <set>

namespace causalcoh::simp {

const std::vector<Simplex>& SimplicialComplex::faces(int p) const {
    static const std::vector<Simplex> none;
    if (p < 0 || p > top_dimension()) return none;
    return faces_[static_cast<std::size_t>(p)];
}

std::vector<std::size_t> SimplicialComplex::f_vector() const {
    std::vector<std::size_t> f;
    for (const auto& layer : faces_) f.push_back(layer.size());
    return f;
}

MatrixQ SimplicialComplex::coboundary(int p) const {
    const auto& src = faces(p);
    const auto& dst = faces(p + 1);
    MatrixQ d(dst.size(), src.size());
    if (src.empty() || dst.empty()) return d;
    std::map<Simplex, std::size_t> index;
    for (std::size_t j = 0; j < src.size(); ++j) index.emplace(src[j], j);
    for (std::size_t r = 0; r < dst.size(); ++r) {
        const Simplex& s = dst[r];
        for (std::size_t i = 0; i < s.size(); ++i) {
            Simplex face = s;
            face.erase(face.begin() + static_cast<long>(i));
            d(r, index.at(face)) = (i % 2 == 0) ? 1 : -1;
        }
    }
    return d;
}

hom::CochainComplex SimplicialComplex::cochain_complex() const {
    std::vector<std::size_t> dims;
    std::vector<MatrixQ> diffs;
    for (int p = 0; p <= top_dimension(); ++p) {
        dims.push_back(faces(p).size());
        diffs.push_back(coboundary(p));
    }
    return hom::CochainComplex(0, std::move(dims), std::move(diffs));
}

SimplicialComplex build_complex(int vertex_count, const std::vector<Simplex>& facets) {
    if (vertex_count < 0) throw TriangulationError("negative vertex count");
    std::vector<std::set<Simplex>> layers;
    for (const auto& facet : facets) {
        if (facet.empty()) throw TriangulationError("empty facet");
        Simplex s = facet;
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        for (int v : s)
            if (v < 0 || v >= vertex_count)
                throw TriangulationError("vertex index " + std::to_string(v) + " outside [0, " + std::to_string(vertex_count) + ")");
        // Every nonempty subset, enumerated by bitmask.
        const std::size_t k = s.size();
        if (layers.size() < k) layers.resize(k);
        for (unsigned long mask = 1; mask < (1ul << k); ++mask) {
            Simplex face;
            for (std::size_t i = 0; i < k; ++i)
                if (mask & (1ul << i)) face.push_back(s[i]);
            layers[face.size() - 1].insert(std::move(face));
        }
    }
    SimplicialComplex out;
    out.vertex_count_ = vertex_count;
    for (auto& layer : layers) out.faces_.emplace_back(layer.begin(), layer.end());
    // Isolated vertices not named by any facet still count.
    if (out.faces_.empty() && vertex_count > 0) out.faces_.emplace_back();
    if (!out.faces_.empty() && out.faces_[0].size() < static_cast<std::size_t>(vertex_count)) {
        out.faces_[0].clear();
        for (int v = 0; v < vertex_count; ++v) out.faces_[0].push_back({v});
    }
    return out;
}

std::size_t betti(const SimplicialComplex& k, int p) {
    if (p < 0 || p > k.top_dimension()) return 0;
    return hom::cohomology(k.cochain_complex(), p).dim;
}

std::size_t homology_betti(const SimplicialComplex& k, int p) {
    if (p < 0 || p > k.top_dimension()) return 0;
    // ∂_p : C_p -> C_{p-1} is the transpose of δ^{p-1}.
    const std::size_t cycles = k.faces(p).size() - rank(k.coboundary(p - 1).transpose());
    return cycles - rank(k.coboundary(p).transpose());
}

SimplicialComplex triangulation_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw TriangulationError(std::string("malformed triangulation JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("vertices") || !j.contains("facets"))
        throw TriangulationError("triangulation JSON needs \"vertices\" and \"facets\"");
    if (!j["vertices"].is_number_integer()) throw TriangulationError("\"vertices\" must be an integer");
    if (!j["facets"].is_array()) throw TriangulationError("\"facets\" must be an array");
    std::vector<Simplex> facets;
    for (const auto& f : j["facets"]) {
        if (!f.is_array()) throw TriangulationError("each facet must be an array of vertex indices");
        Simplex s;
        for (const auto& v : f) {
            if (!v.is_number_integer()) throw TriangulationError("vertex indices must be integers");
            s.push_back(v.get<int>());
        }
        facets.push_back(std::move(s));
    }
    return build_complex(j["vertices"].get<int>(), facets);
}

SimplicialComplex sphere_boundary(int d) {
    std::vector<Simplex> facets;
    for (int skip = 0; skip <= d + 1; ++skip) {
        Simplex s;
        for (int v = 0; v <= d + 1; ++v)
            if (v != skip) s.push_back(v);
        facets.push_back(std::move(s));
    }
    return build_complex(d + 2, facets);
}

SimplicialComplex seven_vertex_torus() {
    std::vector<Simplex> facets;
    for (int i = 0; i < 7; ++i) {
        facets.push_back({i, (i + 1) % 7, (i + 3) % 7});
        facets.push_back({i, (i + 2) % 7, (i + 3) % 7});
    }
    return build_complex(7, facets);
}

SimplicialComplex cone(const SimplicialComplex& k) {
    const int apex = k.vertex_count();
    std::vector<Simplex> facets;
    for (int p = 0; p <= k.top_dimension(); ++p)
        for (auto s : k.faces(p)) {
            s.push_back(apex);
            facets.push_back(std::move(s));
        }
    if (facets.empty()) facets.push_back({apex});
    return build_complex(apex + 1, facets);
}

CohomologyProfile profile_from_triangulation(const SimplicialComplex& k, bool oriented_closed, std::string name) {
    if (!oriented_closed)
        throw TriangulationError("only oriented closed triangulations are supported; use a preset for noncompact surfaces");
    CohomologyProfile p;
    p.m = k.top_dimension();
    p.name = std::move(name);
    for (int q = 0; q <= p.m; ++q) p.h.push_back(betti(k, q));
    p.h_c = p.h;
    return p;
}

CohomologyProfile preset_profile(const std::string& name, int m) {
    CohomologyProfile p;
    p.m = m;
    if (name == "point") {
        if (m != 0) throw std::invalid_argument("preset point has m = 0");
        p.h = p.h_c = {1};
        p.name = "point";
        return p;
    }
    if (m < 1) throw std::invalid_argument("preset " + name + " needs m >= 1");
    const auto size = static_cast<std::size_t>(m) + 1;
    p.h.assign(size, 0);
    p.h_c.assign(size, 0);
    if (name == "sphere") {
        p.h.front() = p.h.back() = 1;
        p.h_c = p.h;
        p.name = "S^" + std::to_string(m);
    } else if (name == "torus") {
        std::size_t binom = 1;
        for (int q = 0; q <= m; ++q) {
            p.h[static_cast<std::size_t>(q)] = binom;
            binom = binom * static_cast<std::size_t>(m - q) / static_cast<std::size_t>(q + 1);
        }
        p.h_c = p.h;
        p.name = "T^" + std::to_string(m);
    } else if (name == "euclidean") {
        p.h.front() = 1;
        // Oriented Poincaré duality: h_c[q] = h[m - q].
        p.h_c.back() = 1;
        p.name = "R^" + std::to_string(m);
    } else {
        throw std::invalid_argument("unknown preset '" + name + "' (expected point, sphere, torus or euclidean)");
    }
    return p;
}

CohomologyProfile kunneth(const CohomologyProfile& a, const CohomologyProfile& b) {
    CohomologyProfile out;
    out.m = a.m + b.m;
    out.name = a.name + " x " + b.name;
    out.h.assign(static_cast<std::size_t>(out.m) + 1, 0);
    out.h_c.assign(static_cast<std::size_t>(out.m) + 1, 0);
    for (int i = 0; i <= a.m; ++i)
        for (int j = 0; j <= b.m; ++j) {
            out.h[static_cast<std::size_t>(i + j)] += a.h_at(i) * b.h_at(j);
            out.h_c[static_cast<std::size_t>(i + j)] += a.h_c_at(i) * b.h_c_at(j);
        }
    return out;
}

}  // namespace causalcoh::simp
