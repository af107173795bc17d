#ifndef CAUSALCOH_GENERATORS_HPP
#define CAUSALCOH_GENERATORS_HPP

#include "causalcoh/les.hpp"
#include "causalcoh/rng.hpp"

namespace causalcoh::hom {

/// Invertible matrix with det 1: product of random unit lower and upper
/// triangular integer matrices.
MatrixQ random_unimodular(std::size_t n, Rng& rng);

MatrixQ random_matrix(std::size_t rows, std::size_t cols, Rng& rng, long bound = 3);

/// Random complex on [p_min, p_min + degrees - 1], each space of dimension
/// at most max_dim. Built as a sum of one-dimensional pieces and identity
/// pieces Q -> Q, then conjugated degreewise by random unimodular matrices,
/// so every isomorphism type is reachable.
CochainComplex random_complex(int p_min, int degrees, std::size_t max_dim, Rng& rng);

/// 0 -> A -> B -> C -> 0 with B an extension of C by A twisted by a random
/// d_A s - s d_C term and presented in a random basis.
ShortExactSeq random_short_exact_sequence(int p_min, int degrees, std::size_t max_dim, Rng& rng);

struct ContractibleWitness {
    CochainMap f;
    CochainHomotopy h;
};

/// Acyclic complex (a randomly re-based cone of the identity) with a
/// random homotopy h and f = d h + h d, rejection-sampled until every f(p)
/// is invertible.
ContractibleWitness random_contractible(int p_min, int degrees, std::size_t max_dim, Rng& rng);

/// Injective null-homotopic map A -> Cone(id_A) ⊕ D and its cokernel; the
/// finite analogue of 0 -> Ω_0 --□--> Ω_0 --G--> Ω_{□,sc} -> 0. Returns the
/// sequence and the homotopy witnessing that i is null-homotopic.
struct NullHomotopicExtension {
    ShortExactSeq seq;
    CochainHomotopy h;
};
NullHomotopicExtension null_homotopic_extension(const CochainComplex& a, const CochainComplex& extra, Rng& rng);

}  // namespace causalcoh::hom

#endif  // CAUSALCOH_GENERATORS_HPP
