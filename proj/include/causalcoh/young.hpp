#ifndef CAUSALCOH_YOUNG_HPP
#define CAUSALCOH_YOUNG_HPP

#include "causalcoh/tensor.hpp"

#include <gmpxx.h>

namespace causalcoh::tensor {

/// Young projector on covariant k-tensors, k = cells of the diagram.
/// Cells are assigned to tensor slots column by column: a tensor written
/// t_{abc:de} with diagram (2,2,1) has its first column on slots a, b, c
/// and its second column on d, e. The projector symmetrizes over each row,
/// then antisymmetrizes over each column, and divides by the hook product
/// so that π² = π. Its image is antisymmetric in every column.
class YoungProjector {
public:
    explicit YoungProjector(YoungDiagram diagram);

    const YoungDiagram& diagram() const { return diagram_; }
    int cells() const { return k_; }
    /// Slots of row i and of column j.
    const std::vector<std::vector<int>>& row_slots() const { return rows_; }
    const std::vector<std::vector<int>>& column_slots() const { return cols_; }

    /// Throws TensorShapeError unless t is an all-lower tensor of rank k.
    Tensor apply(const Tensor& t, Exec exec = Exec::parallel) const;

    struct Term {
        std::vector<int> perm;  // (t ∘ perm)(I) = t(I_{perm[0]}, ...)
        long coeff;
    };
    /// π = (1 / hook product) Σ coeff · (t ∘ perm), merged over equal perms.
    const std::vector<Term>& expansion() const { return expansion_; }
    const mpz_class& hook_product() const { return hook_; }

private:
    YoungDiagram diagram_;
    int k_;
    std::vector<std::vector<int>> rows_, cols_;
    std::vector<std::pair<std::vector<int>, long>> row_group_, col_group_;
    std::vector<Term> expansion_;
    mpz_class hook_;
};

/// Product of hook lengths.
mpz_class hook_product(const YoungDiagram& d);
/// Fiber rank from the hook formula: Π (n + column - row) / Π hooks.
std::size_t hook_rank(const YoungDiagram& d, int n);

Tensor project(const Tensor& t, const YoungDiagram& d, Exec exec = Exec::parallel);
/// π(t) == t.
bool has_symmetry(const Tensor& t, const YoungDiagram& d);

/// Dense projector matrix on the n^k components (row = output component).
/// Throws TensorShapeError when n^k exceeds 1024.
MatrixQ young_projector(const YoungDiagram& d, int k_indices, int n);

struct ProjectorAudit {
    std::size_t rank = 0;
    bool idempotent = true;
    std::size_t blocks = 0;
};
/// Rank and idempotence of the projector, computed block by block: π only
/// permutes slots, so it preserves the multiset of index values and is
/// block diagonal over those multisets.
ProjectorAudit audit_projector(const YoungDiagram& d, int n);

}  // namespace causalcoh::tensor

#endif  // CAUSALCOH_YOUNG_HPP
