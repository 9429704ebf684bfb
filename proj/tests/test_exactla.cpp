#include "doctest.h"

#include <random>
#include <vector>

#include "semihom/exactla.hpp"

using namespace semihom;

namespace {

const FieldSpec kQ = FieldSpec::rationals();
const FieldSpec kF2 = FieldSpec::prime(2);
const FieldSpec kF3 = FieldSpec::prime(3);
const FieldSpec kF5 = FieldSpec::prime(5);

ExactMatrix random_matrix(FieldSpec f, int rows, int cols, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> entry(-4, 4);
    ExactMatrix m(f, rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.set(i, j, entry(rng));
    return m;
}

// Independent Čech-style complex builder used as the oracle for homology:
// levels are tuples over a fiber partition of a finite set, faces delete a
// coordinate, the differential is the alternating face sum. Built here from
// first principles so it shares nothing with the simplicial module.
struct TupleComplex {
    std::vector<std::vector<std::vector<int>>> levels; // per degree, list of tuples

    static TupleComplex over_fibers(const std::vector<int>& fiber_of, int top_degree) {
        TupleComplex c;
        int n = static_cast<int>(fiber_of.size());
        c.levels.resize(top_degree + 1);
        for (int x = 0; x < n; ++x) c.levels[0].push_back({x});
        for (int d = 1; d <= top_degree; ++d)
            for (const auto& t : c.levels[d - 1])
                for (int x = 0; x < n; ++x)
                    if (fiber_of[x] == fiber_of[t[0]]) {
                        auto ext = t;
                        ext.push_back(x);
                        c.levels[d].push_back(ext);
                    }
        return c;
    }

    int index_of(int degree, const std::vector<int>& t) const {
        for (std::size_t i = 0; i < levels[degree].size(); ++i)
            if (levels[degree][i] == t) return static_cast<int>(i);
        return -1;
    }

    ChainComplex linearize(FieldSpec field) const {
        std::vector<int> dims;
        for (const auto& lv : levels) dims.push_back(static_cast<int>(lv.size()));
        std::vector<ExactMatrix> diffs;
        for (std::size_t d = 1; d < levels.size(); ++d) {
            ExactMatrix m(field, dims[d - 1], dims[d]);
            for (std::size_t j = 0; j < levels[d].size(); ++j) {
                const auto& t = levels[d][j];
                for (std::size_t i = 0; i < t.size(); ++i) {
                    std::vector<int> face;
                    for (std::size_t k = 0; k < t.size(); ++k)
                        if (k != i) face.push_back(t[k]);
                    int row = index_of(static_cast<int>(d) - 1, face);
                    m.add_to(row, static_cast<int>(j), (i % 2 == 0) ? 1 : -1);
                }
            }
            diffs.push_back(m);
        }
        return ChainComplex(field, dims, diffs);
    }
};

} // namespace

TEST_CASE("field spec validation and parsing") {
    CHECK(FieldSpec::prime(2).characteristic() == 2);
    CHECK(FieldSpec::rationals().characteristic() == 0);
    CHECK_THROWS_AS(FieldSpec::prime(4), Error);
    CHECK_THROWS_AS(FieldSpec::prime(1), Error);
    CHECK(FieldSpec::parse("q") == kQ);
    CHECK(FieldSpec::parse("f:7") == FieldSpec::prime(7));
    CHECK_THROWS_AS(FieldSpec::parse("f:6"), Error);
    CHECK_THROWS_AS(FieldSpec::parse("r"), Error);
    CHECK(kF3.name() == "f:3");
    CHECK(kQ.name() == "q");
}

TEST_CASE("rank on the pinned examples") {
    CHECK(rank(ExactMatrix(kQ, 3, 3)) == 0);
    CHECK(rank(ExactMatrix::identity(kQ, 3)) == 3);
    CHECK(rank(ExactMatrix::from_rows(kF2, {{1, 1}, {1, 1}})) == 1);
    CHECK(rank(ExactMatrix(kQ, 0, 5)) == 0);
    CHECK(rank(ExactMatrix(kF5, 4, 0)) == 0);
}

TEST_CASE("kernel_basis on the pinned examples") {
    CHECK(kernel_basis(ExactMatrix::identity(kQ, 2)).cols() == 0);
    CHECK(kernel_basis(ExactMatrix(kQ, 2, 3)).cols() == 3);
    ExactMatrix parity = ExactMatrix::from_rows(kF2, {{1, 1}});
    ExactMatrix k = kernel_basis(parity);
    REQUIRE(k.cols() == 1);
    CHECK(k.get(0, 0) == 1);
    CHECK(k.get(1, 0) == 1);
}

TEST_CASE("homology of hand-built complexes") {
    SUBCASE("single spot complex") {
        ChainComplex c(kQ, {1}, {});
        CHECK(homology_dims(c) == std::vector<int>{1});
    }
    SUBCASE("identity is exact") {
        ChainComplex c(kQ, {1, 1}, {ExactMatrix::identity(kQ, 1)});
        CHECK(homology_dims(c) == std::vector<int>{0, 0});
    }
    SUBCASE("d squared must vanish") {
        ExactMatrix d1 = ExactMatrix::from_rows(kQ, {{1, 0}, {0, 1}});
        ExactMatrix d2 = ExactMatrix::from_rows(kQ, {{1}, {0}});
        CHECK_THROWS_AS(ChainComplex(kQ, {2, 2, 1}, {d1, d2}), Error);
    }
}

TEST_CASE("coordinate-deletion complex of the two-chain collapse") {
    // Two-element monoid collapsed to a point: levels have sizes 2, 4, 8.
    // Expected values worked out by hand: rank d1 = 1, rank d2 = 3,
    // so H_0 = 1 and H_1 = 0.
    TupleComplex t = TupleComplex::over_fibers({0, 0}, 2);
    REQUIRE(t.levels[0].size() == 2);
    REQUIRE(t.levels[1].size() == 4);
    REQUIRE(t.levels[2].size() == 8);
    for (FieldSpec f : {kQ, kF2, kF3}) {
        ChainComplex c = t.linearize(f);
        CHECK(rank(c.differentials[0]) == 1);
        CHECK(rank(c.differentials[1]) == 3);
        std::vector<int> h = homology_dims(c);
        CHECK(h[0] == 1);
        CHECK(h[1] == 0);
    }
}

TEST_CASE("contracted complexes are concentrated in degree zero") {
    // Each fibered tuple complex carries a contracting homotopy onto its
    // fiber set, so homology away from the top degree sits in degree 0.
    std::vector<std::vector<int>> partitions = {
        {0, 0}, {0, 0, 0}, {0, 1}, {0, 0, 1, 1}, {0, 1, 2}, {0, 0, 0, 1}};
    for (const auto& fibers : partitions) {
        int classes = 1 + *std::max_element(fibers.begin(), fibers.end());
        TupleComplex t = TupleComplex::over_fibers(fibers, 3);
        for (FieldSpec f : {kQ, kF2, kF5}) {
            std::vector<int> h = homology_dims(t.linearize(f));
            CHECK(h[0] == classes);
            CHECK(h[1] == 0);
            CHECK(h[2] == 0);
        }
    }
}

TEST_CASE("rank identities on random matrices") {
    std::mt19937_64 rng(7);
    for (FieldSpec f : {kQ, kF2, kF3, kF5}) {
        for (int trial = 0; trial < 60; ++trial) {
            int rows = 1 + static_cast<int>(rng() % 8);
            int cols = 1 + static_cast<int>(rng() % 8);
            ExactMatrix m = random_matrix(f, rows, cols, rng);
            int r = rank(m);
            CHECK(r == rank(m.transpose()));
            ExactMatrix k = kernel_basis(m);
            CHECK(r + k.cols() == cols);
            CHECK(m.multiply(k).is_zero());
        }
    }
}

TEST_CASE("rank over Q dominates rank over F_p for integer matrices") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 80; ++trial) {
        int rows = 1 + static_cast<int>(rng() % 7);
        int cols = 1 + static_cast<int>(rng() % 7);
        ExactMatrix m = random_matrix(kQ, rows, cols, rng);
        for (std::uint32_t p : {2u, 3u, 5u}) CHECK(rank(m) >= rank(m.reduced_mod(p)));
    }
}

TEST_CASE("solve recovers coordinates and rejects inconsistent systems") {
    std::mt19937_64 rng(23);
    for (FieldSpec f : {kQ, kF2, kF3}) {
        ExactMatrix a = random_matrix(f, 5, 3, rng);
        ExactMatrix x = random_matrix(f, 3, 2, rng);
        ExactMatrix b = a.multiply(x);
        auto sol = solve(a, b);
        REQUIRE(sol.has_value());
        CHECK(a.multiply(*sol) == b);
    }
    ExactMatrix a = ExactMatrix::from_rows(kQ, {{1, 0}, {1, 0}});
    ExactMatrix b = ExactMatrix::from_rows(kQ, {{1}, {2}});
    CHECK(!solve(a, b).has_value());
}

TEST_CASE("span builder matches batch rank") {
    std::mt19937_64 rng(31);
    for (FieldSpec f : {kQ, kF2, kF3}) {
        int dim = 7;
        ExactMatrix m = random_matrix(f, dim, 9, rng);
        SpanBuilder span(f, dim);
        for (int j = 0; j < m.cols(); ++j) span.add(m.col(j));
        CHECK(span.rank() == rank(m));
        for (int j = 0; j < m.cols(); ++j) CHECK(span.contains(m.col(j)));
        ExactMatrix probe = random_matrix(f, dim, 1, rng);
        SpanBuilder copy(f, dim);
        for (int j = 0; j < m.cols(); ++j) copy.add(m.col(j));
        bool grew = copy.add(probe);
        CHECK(grew == !span.contains(probe));
    }
}

TEST_CASE("prime field entries stay canonical") {
    ExactMatrix m(kF5, 1, 3);
    m.set(0, 0, -1);
    m.set(0, 1, 12);
    m.set(0, 2, mpq_class(1, 2)); // 1/2 = 3 mod 5
    CHECK(m.get(0, 0) == 4);
    CHECK(m.get(0, 1) == 2);
    CHECK(m.get(0, 2) == 3);
}
