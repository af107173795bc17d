#include "causalcoh/les.hpp"

#include <algorithm>

namespace causalcoh::hom {

namespace {

std::string deg(int p) { return std::to_string(p); }

bool same_shape(const CochainComplex& x, const CochainComplex& y) {
    const int lo = std::min(x.p_min(), y.p_min()), hi = std::max(x.p_max(), y.p_max());
    for (int p = lo; p <= hi; ++p)
        if (x.dim(p) != y.dim(p) || !(x.d(p) == y.d(p))) return false;
    return true;
}

int lowest(const ShortExactSeq& s) { return std::min({s.a.p_min(), s.b.p_min(), s.c.p_min()}); }
int highest(const ShortExactSeq& s) { return std::max({s.a.p_max(), s.b.p_max(), s.c.p_max()}); }

int floor_div(int a, int b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }

}  // namespace

const char* slot_name(Slot s) {
    switch (s) {
        case Slot::A: return "A";
        case Slot::B: return "B";
        case Slot::C: return "C";
    }
    return "?";
}

ExactnessError::ExactnessError(std::vector<std::string> problems)
    : std::runtime_error(problems.empty() ? "short exact sequence invalid" : "short exact sequence invalid: " + problems.front()),
      problems_(std::move(problems)) {}

std::vector<std::string> ShortExactSeq::violations() const {
    std::vector<std::string> out;
    if (!same_shape(i.source, a) || !same_shape(i.target, b)) out.push_back("i is not a map A -> B");
    if (!same_shape(q.source, b) || !same_shape(q.target, c)) out.push_back("q is not a map B -> C");
    if (!out.empty()) return out;
    if (auto p = i.first_violation()) out.push_back("degree " + deg(*p) + ": i does not commute with d");
    if (auto p = q.first_violation()) out.push_back("degree " + deg(*p) + ": q does not commute with d");

    for (int p = lowest(*this); p <= highest(*this); ++p) {
        const MatrixQ ip = i.at(p), qp = q.at(p);
        const std::size_t ri = rank(ip), rq = rank(qp);
        if (ri != a.dim(p)) out.push_back("degree " + deg(p) + ": i not injective");
        if (rq != c.dim(p)) out.push_back("degree " + deg(p) + ": q not surjective");
        if (!(qp * ip).is_zero() || ri != b.dim(p) - rq) out.push_back("degree " + deg(p) + ": ker q != im i");
    }
    return out;
}

LongExactSeq long_exact_sequence(const ShortExactSeq& s) {
    if (auto v = s.violations(); !v.empty()) throw ExactnessError(std::move(v));

    LongExactSeq les;
    const int lo = lowest(s), hi = highest(s);
    for (int p = lo; p <= hi; ++p) {
        const auto ha = cohomology(s.a, p);
        const auto hb = cohomology(s.b, p);
        const auto hc = cohomology(s.c, p);
        les.nodes.push_back({Slot::A, p, ha.dim});
        les.nodes.push_back({Slot::B, p, hb.dim});
        les.nodes.push_back({Slot::C, p, hc.dim});
        les.maps.push_back(induced_map(s.i, p));
        les.maps.push_back(induced_map(s.q, p));
        if (p == hi) break;

        const auto hnext = cohomology(s.a, p + 1);
        MatrixQ delta(hnext.dim, hc.dim);
        if (hc.dim && hnext.dim) {
            const auto lift = solve(s.q.at(p), hc.cocycle_basis);
            if (!lift) throw std::logic_error("connecting map: q not surjective");
            const MatrixQ db = s.b.d(p) * *lift;
            const auto pulled = solve(s.i.at(p + 1), db);
            if (!pulled) throw std::logic_error("connecting map: d_B lift not in image of i");
            delta = class_coordinates(hnext, *pulled);
        }
        les.maps.push_back(std::move(delta));
    }
    return les;
}

std::vector<NodeVerdict> check_exactness(const LongExactSeq& seq) {
    std::vector<NodeVerdict> out;
    for (std::size_t k = 0; k < seq.nodes.size(); ++k) {
        const std::size_t d = seq.nodes[k].dim;
        const MatrixQ in = k > 0 ? seq.maps[k - 1] : MatrixQ::zero(d, 0);
        const MatrixQ outm = k < seq.maps.size() ? seq.maps[k] : MatrixQ::zero(0, d);
        if (in.rows() != d || outm.cols() != d) throw ShapeError("check_exactness: maps not composable at node " + std::to_string(k));
        NodeVerdict v{k, false, rank(in), d - rank(outm), (outm * in).is_zero()};
        v.exact = v.composite_zero && v.image_rank == v.kernel_dim;
        out.push_back(v);
    }
    return out;
}

bool all_exact(const std::vector<NodeVerdict>& v) {
    return std::all_of(v.begin(), v.end(), [](const NodeVerdict& n) { return n.exact; });
}

std::vector<SplitStatement> split_by_null_map(const ShortExactSeq& s, Slot zero_after) {
    const auto les = long_exact_sequence(s);
    const int offset = static_cast<int>(zero_after);

    for (std::size_t k = 0; k < les.maps.size(); ++k) {
        if (static_cast<int>(k % 3) != offset) continue;
        if (!les.maps[k].is_zero()) {
            const auto& n = les.nodes[k];
            throw NonZeroInducedMapError(std::string("induced map out of ") + slot_name(n.slot) + "^" + deg(n.degree) +
                                         " is not zero");
        }
    }

    const int lo = lowest(s);
    const int count = static_cast<int>(les.nodes.size());
    auto node = [&](int j) {
        if (j >= 0 && j < count) return les.nodes[static_cast<std::size_t>(j)];
        const int r = ((j % 3) + 3) % 3;
        return LesNode{static_cast<Slot>(r), lo + floor_div(j, 3), 0};
    };

    std::vector<SplitStatement> out;
    for (int j = offset + 1 - 3; j < count; j += 3) {
        SplitStatement st{node(j), node(j + 1), node(j + 2), false};
        if (st.left.dim == 0 && st.middle.dim == 0 && st.right.dim == 0 && (j < 0 || j + 2 >= count)) continue;
        st.dimension_identity_holds = st.middle.dim == st.left.dim + st.right.dim;
        out.push_back(st);
    }
    return out;
}

}  // namespace causalcoh::hom
