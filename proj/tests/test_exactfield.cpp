#include <random>

#include "doctest.h"
#include "fbk/exactfield.hpp"

using namespace fbk;

namespace {

RationalMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int lo, int hi, double zero_prob) {
    std::uniform_int_distribution<int> d(lo, hi);
    std::uniform_real_distribution<double> z(0, 1);
    RationalMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            if (z(rng) >= zero_prob) m.set(i, j, d(rng));
    m.normalize_storage();
    return m;
}

}  // namespace

TEST_CASE("rank of small matrices") {
    CHECK(rank(RationalMatrix::from_rows({{1, 2}, {2, 4}})) == 1);
    CHECK(rank(RationalMatrix::from_rows({{1, 2}, {3, 4}})) == 2);
    CHECK(rank(RationalMatrix(3, 4)) == 0);
    CHECK(rank(RationalMatrix::from_rows({{0, 0, 1}, {0, 1, 0}, {1, 1, 1}})) == 3);
}

TEST_CASE("Bareiss agrees with Gaussian elimination on random 20x20 matrices") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        double zp = trial % 2 ? 0.0 : 0.85;
        auto m = random_matrix(rng, 20, 20, -9, 9, zp);
        if (trial % 5 == 0) {
            // force rank deficiency by repeating a combination of rows
            for (std::size_t j = 0; j < 20; ++j) m.set(19, j, m.get(0, j) * 2 - m.get(3, j));
            m.normalize_storage();
        }
        std::size_t g = rank_gauss(m);
        CHECK(rank_bareiss_dense(m) == g);
        CHECK(rank_fraction_free_sparse(m) == g);
        CHECK(rank(m) == g);
    }
}

TEST_CASE("storage switches to dense above the fill threshold") {
    RationalMatrix m(4, 4);
    m.set(0, 0, 1);
    m.normalize_storage();
    CHECK_FALSE(m.is_dense());
    for (int i = 0; i < 4; ++i) m.set(1, i, 1);
    m.normalize_storage();
    CHECK(m.is_dense());
}

TEST_CASE("kernel and image bases") {
    auto m = RationalMatrix::from_rows({{1, 1, 0}, {0, 1, 1}});
    auto k = kernel_basis(m);
    REQUIRE(k.dim() == 1);
    CHECK(m.apply(k.vectors()[0]).empty());
    CHECK(image_basis(m).dim() == 2);
    std::mt19937_64 rng(3);
    for (int t = 0; t < 10; ++t) {
        auto r = random_matrix(rng, 6, 9, -3, 3, 0.5);
        auto kb = kernel_basis(r);
        CHECK(kb.dim() + rank(r) == 9);
        for (const auto& v : kb.vectors()) CHECK(r.apply(v).empty());
        CHECK(rank(kb.basis) == kb.dim());
    }
}

TEST_CASE("quotient and projection") {
    auto rel = Subspace::from_vectors(3, {SparseVec::unit(0) , add(SparseVec::unit(1), SparseVec::unit(2), -1)});
    auto q = quotient_and_projection(rel);
    CHECK(q.quotient_dim == 1);
    for (const auto& v : rel.vectors()) CHECK(q.projection.apply(v).empty());
    CHECK_FALSE(q.projection.apply(SparseVec::unit(2)).empty());
}

TEST_CASE("solve") {
    auto m = RationalMatrix::from_rows({{2, 0}, {0, 3}, {1, 1}});
    SparseVec x;
    SparseVec b;
    b.push(0, 4);
    b.push(1, 9);
    b.push(2, 5);
    REQUIRE(solve(m, b, x));
    CHECK(x.coeff(0) == 2);
    CHECK(x.coeff(1) == 3);
    b.terms[2].second = 6;
    CHECK_FALSE(solve(m, b, x));
}

TEST_CASE("echelon insertion is deterministic") {
    Echelon e(3);
    CHECK(e.insert(add(SparseVec::unit(1), SparseVec::unit(2))));
    CHECK(e.insert(SparseVec::unit(0)));
    CHECK_FALSE(e.insert(add(SparseVec::unit(0), add(SparseVec::unit(1), SparseVec::unit(2)))));
    CHECK(e.free_columns() == std::vector<std::size_t>{2});
}
