#ifndef SEMIHOM_TENSORMON_HPP
#define SEMIHOM_TENSORMON_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "semihom/category.hpp"
#include "semihom/monoid.hpp"

namespace semihom {

// Smallest monoid congruence containing the given pairs, computed by
// union-find saturated under translation, plus the quotient table.
struct CongruencePartition {
    std::vector<int> class_of;                // element -> quotient element
    std::vector<std::vector<int>> classes;    // quotient element -> members (sorted)
    FiniteCommMonoid quotient;
};
CongruencePartition congruence_closure(const FiniteCommMonoid& m,
                                       const std::vector<std::pair<int, int>>& pairs);

// A semilattice presented by generators and join-relations. Elements are
// saturated generator sets; the quotient is enumerated by closing the
// generators under join, so only the actual quotient is ever materialized.
class SemilatticePresentation {
public:
    explicit SemilatticePresentation(int generators);

    // join of lhs equals join of rhs (either side may be empty = bottom)
    void relate(std::vector<int> lhs, std::vector<int> rhs);

    struct Result {
        FiniteCommMonoid monoid;
        std::vector<int> generator_class; // generator -> element index
    };
    // cap bounds the number of quotient elements
    Result saturate(long cap = 100'000) const;

private:
    int generators_;
    std::vector<std::pair<std::vector<int>, std::vector<int>>> relations_;
};

// Tensor product of commutative monoids restricted to the case where at
// least one side is a semilattice (then the tensor is one too).
struct TensorResult {
    FiniteCommMonoid monoid;
    std::vector<std::vector<int>> pure; // pure[a][b] = class of the generator a (x) b
};
TensorResult tensor_semilattice(const FiniteCommMonoid& a, const FiniteCommMonoid& b,
                                long cap = 100'000);

// General tensor: the free commutative monoid on A x B with every generator
// capped by the eventual periodicity of its multiples, then the bilinearity
// congruence. Throws Errc::unbounded_tensor when the capped carrier would
// exceed `bound` elements.
TensorResult tensor_bounded(const FiniteCommMonoid& a, const FiniteCommMonoid& b,
                            long bound = 1 << 14);

// induced map A (x) B -> A' (x) B from a monoid hom on pure tensors; checks
// well-definedness on the presented quotients
std::vector<int> tensor_map_left(const FiniteCommMonoid& a, const FiniteCommMonoid& a2,
                                 const FiniteCommMonoid& b, const std::vector<int>& hom,
                                 const TensorResult& src, const TensorResult& dst);

// Monoid-level coend of a contravariant functor `a` (a MonFunctor over
// c.opposite()) against a covariant `b`, for semilattice values: the direct
// sum of the objectwise tensors modulo A(f)x (x) y ~ x (x) B(f)y.
struct CoendResult {
    FiniteCommMonoid monoid;
    // pure[c][x][y] = class of the generator at object c
    std::vector<std::vector<std::vector<int>>> pure;
};
CoendResult coend_mon(const FiniteCategory& c, const MonFunctor& a, const MonFunctor& b,
                      long cap = 100'000);

} // namespace semihom

#endif
