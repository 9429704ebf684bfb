#ifndef SEMIHOM_SIMPLICIAL_HPP
#define SEMIHOM_SIMPLICIAL_HPP

#include <vector>

#include "semihom/exactla.hpp"
#include "semihom/monoid.hpp"

namespace semihom {

// Simplicial commutative monoid truncated at level N: levels 0..N, faces
// d_i: X_n -> X_{n-1}, degeneracies s_j: X_n -> X_{n+1} for n < N. All
// simplicial identities that fit inside the truncation are checked, and all
// structure maps must be monoid homomorphisms.
struct TruncatedSimplicialMonoid {
    int truncation = 0;
    std::vector<FiniteCommMonoid> levels;
    std::vector<std::vector<std::vector<int>>> faces;        // faces[n][i], n = 1..N
    std::vector<std::vector<std::vector<int>>> degeneracies; // degeneracies[n][j], n = 0..N-1

    const std::vector<int>& face(int n, int i) const { return faces[n][i]; }
    const std::vector<int>& degeneracy(int n, int j) const { return degeneracies[n][j]; }
    void validate() const;
};

// h_i^n: X_n -> X_{n+1} for 0 <= i <= n < N, contracting the object onto a
// constant; the witnessing identities are checked in cech_resolution.
struct SimplicialHomotopy {
    std::vector<std::vector<std::vector<int>>> maps; // maps[n][i]
};

struct CechResolution {
    TruncatedSimplicialMonoid object;
    SimplicialHomotopy homotopy;
    std::vector<std::vector<std::vector<int>>> tuples; // per level, per element
    std::vector<int> section;                          // minimal-index section of pi
};

// X_n = (n+1)-tuples of source elements with equal image under pi, with
// coordinate-deletion faces and coordinate-repeat degeneracies. The chosen
// set-level section yields the contracting homotopy onto the constant object.
CechResolution cech_resolution(const MonoidHom& pi, int truncation, long level_cap = 1500);

// the constant simplicial object: every level is m, every map the identity
TruncatedSimplicialMonoid constant_simplicial(const FiniteCommMonoid& m, int truncation);

// Homology of the degreewise linearization with the alternating face sum,
// reported in degrees 0..up_to (up_to <= truncation - 1: the top level has no
// incoming differential and is excluded).
std::vector<int> moore_homology(const TruncatedSimplicialMonoid& s, FieldSpec field, int up_to);

// number of connected components: coequalizer of d_0, d_1 on level 0
int pi0_classes(const TruncatedSimplicialMonoid& s);

// The Hom-dual complex 0 -> k[Hom(A,B)] -> k[Hom(X_0,B)] -> k[Hom(X_1,B)] -> ...
struct CosimplicialReport {
    std::vector<int> hom_counts;   // |Hom(X_n, B)| for n = 0..N-1
    int base_hom_count = 0;        // |Hom(A, B)|
    bool augmentation_injective = false;
    bool exact_at_zero = false;    // ker d^0 = im of the augmentation
    std::vector<int> cohomology;   // H^1..H^{N-2}, all expected zero
};
CosimplicialReport hom_cosimplicial_check(const MonoidHom& pi, const FiniteCommMonoid& b,
                                          FieldSpec field, int truncation,
                                          long cap = 10'000'000);

// Degreewise Grothendieck completion of a simplicial monoid with the induced
// structure maps, plus the homology comparison on both sides.
struct CompletionComparison {
    TruncatedSimplicialMonoid completed;
    bool connected = false;
    bool levels_inverse = false;
    bool prop55_hypothesis = false;       // every local unit group dies over k
    std::vector<int> homology_original;   // degrees 0..N-1
    std::vector<int> homology_completed;  // degrees 0..N-1
};
CompletionComparison degreewise_group_completion(const TruncatedSimplicialMonoid& s,
                                                 FieldSpec field);

} // namespace semihom

#endif
