#ifndef SEMIHOM_MONOID_HPP
#define SEMIHOM_MONOID_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "semihom/exactla.hpp"

namespace semihom {

// Finite commutative monoid given by its Cayley table, written additively.
// Commutativity, associativity and the neutral element are checked at
// construction; associativity is sampled (seeded) above kAssocExhaustiveLimit
// since the table check is cubic in the order.
class FiniteCommMonoid {
public:
    static constexpr int kAssocExhaustiveLimit = 512;

    FiniteCommMonoid(int order, std::vector<int> table, int zero);

    int order() const { return n_; }
    int zero() const { return zero_; }
    int add(int x, int y) const { return table_[static_cast<std::size_t>(x) * n_ + y]; }
    bool is_idempotent(int x) const { return add(x, x) == x; }
    std::vector<int> idempotents() const;

    // k-fold sum k*x (k >= 0)
    int multiple(int k, int x) const;

    bool operator==(const FiniteCommMonoid& other) const {
        return n_ == other.n_ && zero_ == other.zero_ && table_ == other.table_;
    }

    // text format: "monoid n zero=i" then n rows of n 0-based indices
    static FiniteCommMonoid parse(std::istream& in);
    static FiniteCommMonoid parse_text(const std::string& text);
    std::string to_text() const;

private:
    int n_;
    int zero_;
    std::vector<int> table_;
};

// --- constructors for the curated families -------------------------------

FiniteCommMonoid trivial_monoid();
FiniteCommMonoid cyclic_group(int n);
// { 0, x, 2x, ... } with index i and period p: i + p elements, (i+p)x = ix
FiniteCommMonoid cyclic_monoid(int index, int period);
FiniteCommMonoid product_monoid(const FiniteCommMonoid& a, const FiniteCommMonoid& b);
// adjoin a new absorbing element to m (index order(m))
FiniteCommMonoid adjoin_absorbing(const FiniteCommMonoid& m);
// the n-element chain as a join semilattice, add = max
FiniteCommMonoid chain_semilattice(int n);

// --- structure predicates --------------------------------------------------

struct ClassifyFlags {
    bool is_semilattice;
    bool is_regular;
    bool is_inverse;
};
ClassifyFlags classify(const FiniteCommMonoid& m);

// The unique x* with x + x* + x = x and x* + x + x* = x*.
int pseudo_inverse(const FiniteCommMonoid& m, int x);

// --- Clifford decomposition ------------------------------------------------

struct CliffordData {
    std::vector<int> idempotents;               // ascending element indices
    std::vector<FiniteCommMonoid> unit_groups;  // G_e = (e + M)^x, identity re-indexed to 0
    std::vector<std::vector<int>> embeddings;   // unit_groups[i] element -> element of M
    std::vector<int> component_of;              // M element -> index into idempotents
};
CliffordData clifford_data(const FiniteCommMonoid& m);

// phi_{e->f} for f <= e (e + f = f): G_e -> G_f, u -> u + f, as group-element indices
std::vector<int> clifford_structure_map(const FiniteCommMonoid& m, const CliffordData& data,
                                        int from_idem, int to_idem);

// Explicit linear isomorphism k[M] -> prod_e k[G_e]. Column x (lying in G_e)
// has a 1 in the block of every idempotent f with f + e = f, at row [x + f].
struct MonoidAlgebraIso {
    CliffordData clifford;
    std::vector<int> block_offset; // row offset per idempotent block
    ExactMatrix phi;               // |M| x |M|
};
MonoidAlgebraIso monoid_algebra_decomposition(const FiniteCommMonoid& m, FieldSpec field);
// checks phi(x.y) = phi(x).phi(y) on all |M|^2 basis pairs (blockwise group product)
bool decomposition_is_multiplicative(const FiniteCommMonoid& m, const MonoidAlgebraIso& iso);

// --- group completion ------------------------------------------------------

struct FiniteAbelianGroup {
    std::vector<long> invariant_factors; // d_1 | d_2 | ..., each >= 2; empty = trivial
    long order() const;
    bool operator==(const FiniteAbelianGroup&) const = default;
};

// invariant factors of a finite abelian group presented as a Cayley table
FiniteAbelianGroup abelian_invariants(const FiniteCommMonoid& group);

struct GroupCompletion {
    FiniteCommMonoid group;      // M^+ as a Cayley table (a group)
    FiniteAbelianGroup invariants;
    std::vector<int> unit_map;   // canonical hom M -> M^+
};
GroupCompletion group_completion(const FiniteCommMonoid& m);

bool tensor_Z_vanishes(const FiniteAbelianGroup& g, FieldSpec field);

// units of the local submonoid e + M, as a group with identity e
struct LocalUnits {
    FiniteCommMonoid group;
    std::vector<int> embedding; // group element -> element of M
};
LocalUnits unit_group_at(const FiniteCommMonoid& m, int e);

// regular and G_e tensor k = 0 for every idempotent e
bool is_k_trivial_monoid(const FiniteCommMonoid& m, FieldSpec field);

// --- hom enumeration -------------------------------------------------------

struct MonoidHom {
    MonoidHom(FiniteCommMonoid source, FiniteCommMonoid target, std::vector<int> map);
    FiniteCommMonoid source;
    FiniteCommMonoid target;
    std::vector<int> map;
    int operator()(int x) const { return map[x]; }
};

// All monoid homomorphisms a -> b, duplicate-free, deterministic order.
// `cap` bounds the number of search nodes visited, not the naive |b|^|a|.
std::vector<std::vector<int>> enumerate_homs(const FiniteCommMonoid& a, const FiniteCommMonoid& b,
                                             long cap = 10'000'000);

// the two-element semilattice {0, 1}
FiniteCommMonoid two_element_semilattice();

struct DualMonoid {
    FiniteCommMonoid monoid;            // pointwise sum on the homs
    std::vector<std::vector<int>> homs; // element i of the dual is homs[i]
};
DualMonoid two_element_dual(const FiniteCommMonoid& m, long cap = 10'000'000);

// All multiplicative characters M -> k for a prime field k: chi(0) = 1 and
// chi(x+y) = chi(x) chi(y); values canonical in [0, p).
std::vector<std::vector<long>> characters(const FiniteCommMonoid& m, FieldSpec field,
                                          long cap = 10'000'000);

// --- isomorphism search ----------------------------------------------------

std::optional<std::vector<int>> find_monoid_iso(const FiniteCommMonoid& a,
                                                const FiniteCommMonoid& b);

} // namespace semihom

#endif
