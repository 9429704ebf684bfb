#ifndef SEMIHOM_LATTICE_HPP
#define SEMIHOM_LATTICE_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "semihom/monoid.hpp"

namespace semihom {

// Finite lattice presented by its order relation; joins and meets are
// computed and verified total at construction.
class FiniteLattice {
public:
    FiniteLattice(int order, std::vector<char> leq);

    static FiniteLattice chain(int n);
    static FiniteLattice boolean(int k); // subset lattice of a k-set, 2^k elements
    static FiniteLattice product(const FiniteLattice& a, const FiniteLattice& b);
    // builtin names "chain:n" and "boolean:k"
    static FiniteLattice from_name(const std::string& name);

    // text format: "lattice n" then n rows of n 0/1 entries for leq
    static FiniteLattice parse(std::istream& in);
    static FiniteLattice parse_text(const std::string& text);
    std::string to_text() const;

    int order() const { return n_; }
    bool leq(int a, int b) const { return leq_[static_cast<std::size_t>(a) * n_ + b] != 0; }
    int join(int a, int b) const { return join_[static_cast<std::size_t>(a) * n_ + b]; }
    int meet(int a, int b) const { return meet_[static_cast<std::size_t>(a) * n_ + b]; }
    int bottom() const { return bottom_; }
    int top() const { return top_; }

    bool operator==(const FiniteLattice& other) const {
        return n_ == other.n_ && leq_ == other.leq_;
    }

private:
    int n_;
    std::vector<char> leq_;
    std::vector<int> join_, meet_;
    int bottom_, top_;
};

bool is_distributive(const FiniteLattice& l);

// carrier = lattice elements, + = join, zero = bottom
FiniteCommMonoid join_monoid(const FiniteLattice& l);
FiniteCommMonoid meet_monoid(const FiniteLattice& l);

// The finite-lattice duality Hom(L, {0,1}) = L. Homs are enumerated with the
// join labeling (f(bottom) = 0); under the unit labeling the preimage of 1 is
// a principal ideal and f -> max f^{-1}(1) is the canonical bijection.
struct SelfDuality {
    DualMonoid dual;             // hom monoid under pointwise sum
    std::vector<int> to_lattice; // canonical bijection dual element -> lattice element
    std::vector<int> join_iso;   // a monoid iso dual.monoid -> join_monoid(l), found by search
};
SelfDuality semilattice_self_duality(const FiniteLattice& l);

// evaluation pairing rows = lattice elements, cols = dual elements; the entry
// is 1 exactly when a <= to_lattice[f]; always invertible (checked).
ExactMatrix duality_evaluation_matrix(const FiniteLattice& l, const SelfDuality& d, FieldSpec field);

} // namespace semihom

#endif
