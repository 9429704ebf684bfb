#include "doctest.h"

#include "semihom/lattice.hpp"

using namespace semihom;

namespace {

const FieldSpec kQ = FieldSpec::rationals();
const FieldSpec kF2 = FieldSpec::prime(2);
const FieldSpec kF3 = FieldSpec::prime(3);
const FieldSpec kF5 = FieldSpec::prime(5);

// five elements, three incomparable atoms between bottom and top
FiniteLattice diamond_m3() {
    int n = 5;
    std::vector<char> leq(n * n, 0);
    auto set = [&](int a, int b) { leq[a * n + b] = 1; };
    for (int a = 0; a < n; ++a) set(a, a);
    for (int a = 1; a < n; ++a) set(0, a);
    for (int a = 0; a < n; ++a) set(a, 4);
    return FiniteLattice(n, std::move(leq));
}

std::vector<FiniteLattice> lattice_corpus() {
    std::vector<FiniteLattice> out;
    for (int n = 1; n <= 6; ++n) out.push_back(FiniteLattice::chain(n));
    for (int k = 0; k <= 3; ++k) out.push_back(FiniteLattice::boolean(k));
    out.push_back(FiniteLattice::product(FiniteLattice::chain(2), FiniteLattice::chain(3)));
    out.push_back(FiniteLattice::product(FiniteLattice::chain(3), FiniteLattice::chain(3)));
    out.push_back(FiniteLattice::product(FiniteLattice::boolean(2), FiniteLattice::chain(2)));
    return out;
}

} // namespace

TEST_CASE("basic constructors") {
    FiniteLattice one = FiniteLattice::chain(1);
    CHECK(one.bottom() == one.top());
    FiniteLattice b2 = FiniteLattice::boolean(2);
    CHECK(b2.order() == 4);
    CHECK(b2.join(1, 2) == 3);
    CHECK(b2.meet(1, 2) == 0);
    FiniteLattice c3 = FiniteLattice::chain(3);
    CHECK(c3.join(1, 2) == 2);
    CHECK(c3.meet(1, 2) == 1);
}

TEST_CASE("construction rejects non-lattices") {
    // two incomparable points, no bounds
    CHECK_THROWS_AS(FiniteLattice(2, {1, 0, 0, 1}), Error);
    // broken reflexivity
    CHECK_THROWS_AS(FiniteLattice(2, {0, 1, 0, 1}), Error);
}

TEST_CASE("product of chains is the boolean square") {
    FiniteLattice p = FiniteLattice::product(FiniteLattice::chain(2), FiniteLattice::chain(2));
    CHECK(find_monoid_iso(join_monoid(p), join_monoid(FiniteLattice::boolean(2))).has_value());
}

TEST_CASE("distributivity") {
    for (int n = 1; n <= 6; ++n) CHECK(is_distributive(FiniteLattice::chain(n)));
    for (int k = 0; k <= 3; ++k) CHECK(is_distributive(FiniteLattice::boolean(k)));
    CHECK(!is_distributive(diamond_m3()));
    // products respect distributivity in both factors
    FiniteLattice c2 = FiniteLattice::chain(2);
    CHECK(is_distributive(FiniteLattice::product(c2, c2)));
    CHECK(is_distributive(FiniteLattice::product(c2, FiniteLattice::chain(3))) ==
          (is_distributive(c2) && is_distributive(FiniteLattice::chain(3))));
    CHECK(is_distributive(FiniteLattice::product(c2, diamond_m3())) == false);
}

TEST_CASE("join monoid") {
    CHECK(join_monoid(FiniteLattice::chain(2)) == chain_semilattice(2));
    CHECK(join_monoid(FiniteLattice::boolean(1)) == chain_semilattice(2));
    FiniteCommMonoid c3 = join_monoid(FiniteLattice::chain(3));
    CHECK(c3.add(1, 2) == 2);
    for (const auto& l : lattice_corpus()) {
        ClassifyFlags f = classify(join_monoid(l));
        CHECK(f.is_semilattice);
        CHECK(f.is_regular);
        CHECK(f.is_inverse);
    }
}

TEST_CASE("self duality on the pinned examples") {
    SUBCASE("chain(2)") {
        FiniteLattice l = FiniteLattice::chain(2);
        SelfDuality d = semilattice_self_duality(l);
        CHECK(d.to_lattice.size() == 2);
        ExactMatrix ev = duality_evaluation_matrix(l, d, kQ);
        CHECK(rank(ev) == 2);
        // triangular shape: three ones, one zero
        int ones = 0;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) ones += ev.get(i, j) == 1 ? 1 : 0;
        CHECK(ones == 3);
    }
    SUBCASE("chain(3)") {
        FiniteLattice l = FiniteLattice::chain(3);
        SelfDuality d = semilattice_self_duality(l);
        CHECK(d.to_lattice.size() == 3);
    }
    SUBCASE("boolean(2)") {
        FiniteLattice l = FiniteLattice::boolean(2);
        SelfDuality d = semilattice_self_duality(l);
        CHECK(d.to_lattice.size() == 4);
    }
}

TEST_CASE("self duality across the corpus and fields") {
    for (const auto& l : lattice_corpus()) {
        SelfDuality d = semilattice_self_duality(l);
        CHECK(static_cast<int>(d.to_lattice.size()) == l.order());
        CHECK(static_cast<int>(d.join_iso.size()) == l.order());
        for (FieldSpec f : {kQ, kF2, kF3, kF5}) {
            ExactMatrix ev = duality_evaluation_matrix(l, d, f);
            CHECK(rank(ev) == l.order());
        }
    }
}

TEST_CASE("text format and builtins") {
    FiniteLattice b2 = FiniteLattice::boolean(2);
    CHECK(FiniteLattice::parse_text(b2.to_text()) == b2);
    CHECK(FiniteLattice::from_name("chain:4") == FiniteLattice::chain(4));
    CHECK(FiniteLattice::from_name("boolean:2") == b2);
    CHECK_THROWS_AS(FiniteLattice::from_name("cube:3"), Error);
    CHECK_THROWS_AS(FiniteLattice::parse_text("lattice 2\n1 2\n0 1"), Error);
}
