#include "doctest.h"

#include <map>
#include <numeric>

#include "semihom/lattice.hpp"
#include "semihom/tensormon.hpp"

using namespace semihom;

namespace {

// The literal construction: free semilattice on A x B = subsets under union,
// then the bilinearity congruence. Exponential carrier; oracle for small inputs.
FiniteCommMonoid tensor_by_free_semilattice(const FiniteCommMonoid& a, const FiniteCommMonoid& b) {
    int na = a.order(), nb = b.order();
    int g = na * nb;
    REQUIRE(g <= 12);
    int n = 1 << g;
    std::vector<int> table(static_cast<std::size_t>(n) * n);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) table[static_cast<std::size_t>(u) * n + v] = u | v;
    FiniteCommMonoid free_semilattice(n, std::move(table), 0);
    auto single = [&](int x, int y) { return 1 << (x * nb + y); };
    std::vector<std::pair<int, int>> pairs;
    for (int x = 0; x < na; ++x) pairs.push_back({single(x, b.zero()), 0});
    for (int y = 0; y < nb; ++y) pairs.push_back({single(a.zero(), y), 0});
    for (int x1 = 0; x1 < na; ++x1)
        for (int x2 = x1; x2 < na; ++x2)
            for (int y = 0; y < nb; ++y)
                pairs.push_back({single(a.add(x1, x2), y), single(x1, y) | single(x2, y)});
    for (int y1 = 0; y1 < nb; ++y1)
        for (int y2 = y1; y2 < nb; ++y2)
            for (int x = 0; x < na; ++x)
                pairs.push_back({single(x, b.add(y1, y2)), single(x, y1) | single(x, y2)});
    return congruence_closure(free_semilattice, pairs).quotient;
}

// Extend a map given on pure tensors to the whole quotient by joins; fails the
// test if the extension is inconsistent.
std::vector<int> extend_by_joins(const FiniteCommMonoid& src, const FiniteCommMonoid& dst,
                                 std::vector<std::pair<int, int>> seeds) {
    std::vector<int> out(src.order(), -1);
    out[src.zero()] = dst.zero();
    for (auto [s, d] : seeds) {
        REQUIRE((out[s] < 0 || out[s] == d));
        out[s] = d;
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (int u = 0; u < src.order(); ++u)
            for (int v = 0; v < src.order(); ++v) {
                if (out[u] < 0 || out[v] < 0) continue;
                int s = src.add(u, v);
                int d = dst.add(out[u], out[v]);
                if (out[s] < 0) {
                    out[s] = d;
                    changed = true;
                } else {
                    REQUIRE(out[s] == d);
                }
            }
    }
    for (int u = 0; u < src.order(); ++u) REQUIRE(out[u] >= 0);
    return out;
}

} // namespace

TEST_CASE("congruence closure on the pinned examples") {
    FiniteCommMonoid two = chain_semilattice(2);
    SUBCASE("no pairs gives the discrete partition") {
        CongruencePartition p = congruence_closure(two, {});
        CHECK(p.quotient == two);
        CHECK(p.classes.size() == 2);
    }
    SUBCASE("collapsing a with zero collapses everything") {
        CongruencePartition p = congruence_closure(two, {{1, 0}});
        CHECK(p.quotient.order() == 1);
    }
    SUBCASE("chain(3) with 1 ~ 2 quotients to the two-chain") {
        CongruencePartition p = congruence_closure(chain_semilattice(3), {{1, 2}});
        CHECK(p.quotient.order() == 2);
        CHECK(find_monoid_iso(p.quotient, two).has_value());
        CHECK(p.class_of[1] == p.class_of[2]);
        CHECK(p.class_of[0] != p.class_of[1]);
    }
}

TEST_CASE("semilattice tensor on the pinned examples") {
    FiniteCommMonoid two = chain_semilattice(2);
    SUBCASE("two-chain against itself") {
        TensorResult t = tensor_semilattice(two, two);
        CHECK(find_monoid_iso(t.monoid, two).has_value());
        CHECK(t.pure[1][1] != t.monoid.zero());
    }
    SUBCASE("anything against the trivial monoid dies") {
        for (const auto& l : {chain_semilattice(3), chain_semilattice(4)}) {
            TensorResult t = tensor_semilattice(l, trivial_monoid());
            CHECK(t.monoid.order() == 1);
        }
    }
    SUBCASE("chain(3) against the two-chain") {
        TensorResult t = tensor_semilattice(chain_semilattice(3), two);
        CHECK(find_monoid_iso(t.monoid, chain_semilattice(3)).has_value());
    }
}

TEST_CASE("semilattice tensor agrees with the free-semilattice construction") {
    std::vector<std::pair<FiniteCommMonoid, FiniteCommMonoid>> cases = {
        {chain_semilattice(2), chain_semilattice(2)},
        {chain_semilattice(3), chain_semilattice(2)},
        {chain_semilattice(2), join_monoid(FiniteLattice::boolean(2))},
        {chain_semilattice(3), chain_semilattice(3)},
    };
    for (const auto& [a, b] : cases) {
        TensorResult fast = tensor_semilattice(a, b);
        FiniteCommMonoid oracle = tensor_by_free_semilattice(a, b);
        CHECK(fast.monoid.order() == oracle.order());
        CHECK(find_monoid_iso(fast.monoid, oracle).has_value());
    }
}

TEST_CASE("semilattice tensor is commutative and associative via pure bookkeeping") {
    FiniteCommMonoid a = chain_semilattice(2);
    FiniteCommMonoid b = chain_semilattice(3);
    FiniteCommMonoid c = join_monoid(FiniteLattice::boolean(1));
    SUBCASE("commutativity") {
        TensorResult ab = tensor_semilattice(a, b);
        TensorResult ba = tensor_semilattice(b, a);
        std::vector<std::pair<int, int>> seeds;
        for (int x = 0; x < a.order(); ++x)
            for (int y = 0; y < b.order(); ++y) seeds.push_back({ab.pure[x][y], ba.pure[y][x]});
        std::vector<int> swap = extend_by_joins(ab.monoid, ba.monoid, seeds);
        std::vector<char> hit(ba.monoid.order(), 0);
        for (int u : swap) hit[u] = 1;
        for (char h : hit) CHECK(h == 1);
    }
    SUBCASE("associativity") {
        TensorResult ab = tensor_semilattice(a, b);
        TensorResult ab_c = tensor_semilattice(ab.monoid, c);
        TensorResult bc = tensor_semilattice(b, c);
        TensorResult a_bc = tensor_semilattice(a, bc.monoid);
        std::vector<std::pair<int, int>> seeds;
        for (int x = 0; x < a.order(); ++x)
            for (int y = 0; y < b.order(); ++y)
                for (int z = 0; z < c.order(); ++z)
                    seeds.push_back({ab_c.pure[ab.pure[x][y]][z], a_bc.pure[x][bc.pure[y][z]]});
        std::vector<int> assoc = extend_by_joins(ab_c.monoid, a_bc.monoid, seeds);
        std::vector<char> hit(a_bc.monoid.order(), 0);
        for (int u : assoc) hit[u] = 1;
        for (char h : hit) CHECK(h == 1);
        CHECK(ab_c.monoid.order() == a_bc.monoid.order());
    }
}

TEST_CASE("tensor is bifunctorial through induced maps") {
    FiniteCommMonoid c3 = chain_semilattice(3);
    FiniteCommMonoid two = chain_semilattice(2);
    // collapse 1~2 in chain(3)
    std::vector<int> hom = {0, 1, 1};
    TensorResult src = tensor_semilattice(c3, two);
    TensorResult dst = tensor_semilattice(two, two);
    std::vector<int> induced = tensor_map_left(c3, two, two, hom, src, dst);
    for (int u = 0; u < src.monoid.order(); ++u)
        for (int v = 0; v < src.monoid.order(); ++v)
            CHECK(induced[src.monoid.add(u, v)] == dst.monoid.add(induced[u], induced[v]));
}

TEST_CASE("bounded tensor matches the cyclic-group formula") {
    for (int m = 1; m <= 6; ++m)
        for (int n = 1; n <= 6; ++n) {
            TensorResult t = tensor_bounded(cyclic_group(m), cyclic_group(n));
            long g = std::gcd(m, n);
            CHECK(t.monoid.order() == g);
            FiniteAbelianGroup inv = abelian_invariants(t.monoid);
            if (g == 1)
                CHECK(inv.invariant_factors.empty());
            else
                CHECK(inv == FiniteAbelianGroup{{g}});
        }
}

TEST_CASE("bounded tensor agrees with the semilattice engine") {
    std::vector<std::pair<FiniteCommMonoid, FiniteCommMonoid>> cases = {
        {chain_semilattice(2), chain_semilattice(2)},
        {chain_semilattice(3), chain_semilattice(2)},
    };
    for (const auto& [a, b] : cases) {
        TensorResult bounded = tensor_bounded(a, b);
        TensorResult semi = tensor_semilattice(a, b);
        CHECK(bounded.monoid.order() == semi.monoid.order());
        CHECK(find_monoid_iso(bounded.monoid, semi.monoid).has_value());
    }
}

TEST_CASE("bounded tensor reports exhaustion instead of truncating") {
    FiniteCommMonoid e8 = product_monoid(product_monoid(cyclic_group(2), cyclic_group(2)), cyclic_group(2));
    CHECK_THROWS_AS(tensor_bounded(e8, e8, 16), Error);
    // with enough room the answer is the full elementary abelian tensor
    TensorResult t = tensor_bounded(e8, e8, 1 << 12);
    CHECK(t.monoid.order() == 512);
}

TEST_CASE("one-object coends") {
    FiniteLattice c2 = FiniteLattice::chain(2);
    SUBCASE("trivial endomorphisms reduce to the plain tensor") {
        FiniteCategory cat = one_object_category(trivial_monoid(), trivial_monoid());
        FiniteCategory op = cat.opposite();
        MonFunctor a = constant_functor(op, chain_semilattice(2));
        MonFunctor b = constant_functor(cat, chain_semilattice(3));
        CoendResult co = coend_mon(cat, a, b);
        TensorResult t = tensor_semilattice(chain_semilattice(2), chain_semilattice(3));
        CHECK(co.monoid.order() == t.monoid.order());
        CHECK(find_monoid_iso(co.monoid, t.monoid).has_value());
    }
    SUBCASE("meet action of the two-chain") {
        // endomorphisms (T, meet), addition (T, join), T acting on itself
        FiniteCategory cat = one_object_category(meet_monoid(c2), join_monoid(c2));
        FiniteCategory op = cat.opposite();
        auto self_module = [&](const FiniteCategory& on) {
            MonFunctor f;
            f.cat = &on;
            f.values = {join_monoid(c2)};
            f.action.assign(1, std::vector<std::vector<std::vector<int>>>(1));
            f.action[0][0].resize(2);
            for (int t = 0; t < 2; ++t) {
                std::vector<int> m(2);
                for (int u = 0; u < 2; ++u) m[u] = c2.meet(t, u);
                f.action[0][0][t] = std::move(m);
            }
            f.validate();
            return f;
        };
        MonFunctor a = self_module(op);
        MonFunctor b = self_module(cat);
        CoendResult co = coend_mon(cat, a, b);
        // worked out by hand: the quotient is the two-chain
        CHECK(co.monoid.order() == 2);
        CHECK(find_monoid_iso(co.monoid, chain_semilattice(2)).has_value());
    }
}

TEST_CASE("coend against a representable collapses to evaluation") {
    for (const auto& l : {FiniteLattice::chain(2), FiniteLattice::chain(3)}) {
        FiniteCategory cat = one_object_category(meet_monoid(l), join_monoid(l));
        FiniteCategory op = cat.opposite();
        MonFunctor b = representable_functor(cat, 0);
        // contravariant side: the self-module by meet
        MonFunctor a;
        a.cat = &op;
        a.values = {join_monoid(l)};
        a.action.assign(1, std::vector<std::vector<std::vector<int>>>(1));
        a.action[0][0].resize(l.order());
        for (int t = 0; t < l.order(); ++t) {
            std::vector<int> m(l.order());
            for (int u = 0; u < l.order(); ++u) m[u] = l.meet(t, u);
            a.action[0][0][t] = std::move(m);
        }
        a.validate();
        CoendResult co = coend_mon(cat, a, b);
        CHECK(co.monoid.order() == l.order());
        CHECK(find_monoid_iso(co.monoid, join_monoid(l)).has_value());
    }
}

TEST_CASE("presentation cap is enforced") {
    SemilatticePresentation pres(12);
    CHECK_THROWS_AS(pres.saturate(5), Error);
}
