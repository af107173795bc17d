#ifndef CAUSALCOH_LES_HPP
#define CAUSALCOH_LES_HPP

#include "causalcoh/complex.hpp"

#include <string>
#include <vector>

namespace causalcoh::hom {

/// 0 -> A --i--> B --q--> C -> 0, exact in every degree.
struct ShortExactSeq {
    CochainComplex a, b, c;
    CochainMap i;  // A -> B
    CochainMap q;  // B -> C

    /// Per-degree failures of injectivity, surjectivity or ker q = im i;
    /// empty when the sequence is short exact. Also checks i and q are
    /// cochain maps over the stated complexes.
    std::vector<std::string> violations() const;
};

class ExactnessError : public std::runtime_error {
public:
    explicit ExactnessError(std::vector<std::string> problems);
    const std::vector<std::string>& problems() const { return problems_; }

private:
    std::vector<std::string> problems_;
};

enum class Slot { A, B, C };

const char* slot_name(Slot s);

struct LesNode {
    Slot slot;
    int degree;
    std::size_t dim;
};

/// Alternating chain of cohomology spaces
///   H^p(A) -> H^p(B) -> H^p(C) -> H^{p+1}(A) -> ...
/// maps[k] goes from nodes[k] to nodes[k+1]. The chain is implicitly
/// bracketed by zero spaces on both ends.
struct LongExactSeq {
    std::vector<LesNode> nodes;
    std::vector<MatrixQ> maps;
};

/// Builds the long exact sequence; the connecting map lifts a C-cocycle
/// through q, applies d_B and pulls the result back through i.
/// Throws ExactnessError if the input is not short exact.
LongExactSeq long_exact_sequence(const ShortExactSeq& s);

struct NodeVerdict {
    std::size_t index;
    bool exact;
    std::size_t image_rank;   // rank of incoming map
    std::size_t kernel_dim;   // nullity of outgoing map
    bool composite_zero;      // outgoing * incoming == 0
};

/// Exactness at each node: image of the incoming map equals the kernel of
/// the outgoing one (containment plus equal dimension).
std::vector<NodeVerdict> check_exactness(const LongExactSeq& seq);
bool all_exact(const std::vector<NodeVerdict>& v);

/// One short exact piece 0 -> left -> middle -> right -> 0 cut out of a
/// long exact sequence whose designated map induces zero.
struct SplitStatement {
    LesNode left, middle, right;
    /// dim middle == dim left + dim right.
    bool dimension_identity_holds;
};

class NonZeroInducedMapError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// `zero_after` names the map that induces zero on cohomology:
/// A means i^* : H(A) -> H(B), B means q^* : H(B) -> H(C), C means the
/// connecting map H(C) -> H(A[+1]). Each zero map cuts the long exact
/// sequence into short exact pieces that begin right after it.
/// Throws NonZeroInducedMapError if any designated map is nonzero.
std::vector<SplitStatement> split_by_null_map(const ShortExactSeq& s, Slot zero_after);

}  // namespace causalcoh::hom

#endif  // CAUSALCOH_LES_HPP
