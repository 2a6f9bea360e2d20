#include "doctest.h"
#include "fbk/homalg.hpp"

#include <atomic>

using namespace fbk;

namespace {

RationalMatrix mat(const std::vector<std::vector<long>>& rows) { return RationalMatrix::from_rows(rows); }

// 0 -> Q -> Q -> 0 as a bidegree-(0,0) complex in degrees 0, 1.
class Interval : public DgBimodule {
public:
    explicit Interval(long c) : c_(c) {}
    std::string name() const override { return "interval"; }
    int bound() const override { return 0; }
    std::size_t dim(int s, int t) const override { return s == 0 && t == 0 ? 2 : 0; }
    int degree(int, int, std::size_t i) const override { return static_cast<int>(i); }
    SparseVec differential(int, int, std::size_t i) const override {
        return i == 0 && c_ ? SparseVec::unit(1, c_) : SparseVec{};
    }
    SparseVec right_perm(int, int, std::size_t i, const Perm&) const override { return SparseVec::unit(i); }
    SparseVec left_perm(int, int, const Perm&, std::size_t i) const override { return SparseVec::unit(i); }

private:
    long c_;
};

}  // namespace

TEST_CASE("homology of small complexes") {
    auto iso = BidegreeComplex::from_matrices(0, {1, 1}, {mat({{1}})});
    auto h = homology(iso);
    CHECK(h.total_homology() == 0);
    CHECK(h.euler_ok());
    auto zero = BidegreeComplex::from_matrices(0, {1, 1}, {mat({{0}})});
    h = homology(zero);
    CHECK(h.homology_dims[0] == 1);
    CHECK(h.homology_dims[1] == 1);
    // Q^2 -> Q^2 -> Q with d = [[1,1],[1,1]], [1,-1]
    auto c = BidegreeComplex::from_matrices(-1, {2, 2, 1}, {mat({{1, 1}, {1, 1}}), mat({{1, -1}})});
    CHECK(check_d_squared(c).ok);
    h = homology(c);
    CHECK(h.homology_dims[-1] == 1);
    CHECK(h.homology_dims[0] == 0);
    CHECK(h.homology_dims[1] == 0);
    CHECK(h.euler_ok());
    auto bad = BidegreeComplex::from_matrices(0, {1, 1, 1}, {mat({{1}}), mat({{1}})});
    CHECK_FALSE(check_d_squared(bad).ok);
}

TEST_CASE("quasi-isomorphism criteria") {
    auto acyclic = std::make_shared<Interval>(1);
    auto split = std::make_shared<Interval>(0);
    auto id = identity_map(acyclic);
    CHECK(check_chain_map(id, Window::square(0)).ok);
    auto r = is_quasi_iso(id, Window::square(0));
    CHECK(r.quasi_iso);
    CHECK(r.criteria_agree);
    // The zero map of an acyclic complex to itself is a quasi-isomorphism too.
    CHECK(is_quasi_iso(zero_map(acyclic, acyclic), Window::square(0)).quasi_iso);
    auto z = is_quasi_iso(zero_map(split, split), Window::square(0));
    CHECK_FALSE(z.quasi_iso);
    CHECK(z.criteria_agree);
    CHECK(is_quasi_iso(identity_map(split), Window::square(0)).quasi_iso);
    auto cone = mapping_cone(identity_map(split), 0, 0);
    CHECK(check_d_squared(cone).ok);
    CHECK(homology(cone).total_homology() == 0);
}

TEST_CASE("corrupted differential is detected") {
    auto good = std::make_shared<Interval>(1);
    CHECK(check_d_squared(*good, Window::square(0)).ok);
    auto bad = corrupt_differential(good, 0, 0, 1, SparseVec::unit(0));
    CHECK_THROWS_AS(bidegree_complex(*bad, 0, 0), FbError);
    auto kfi = as_dg_bimodule(build_builtin(Builtin::FI, 3));
    CHECK(check_d_squared(*kfi, Window::square(3)).ok);
}

TEST_CASE("homology does not depend on the basis order") {
    auto c = std::make_shared<Interval>(0);
    auto a = homology(bidegree_complex(*c, 0, 0, false));
    auto b = homology(bidegree_complex(*c, 0, 0, true));
    CHECK(a.homology_dims == b.homology_dims);
}

TEST_CASE("character tables") {
    CHECK(mn_character({2}, {1, 1}) == 1);
    CHECK(mn_character({1, 1}, {2}) == -1);
    CHECK(mn_character({2, 1}, {1, 1, 1}) == 2);
    CHECK(mn_character({2, 1}, {3}) == -1);
    CHECK(mn_character({2, 2}, {2, 2}) == 2);
    CHECK(mn_character({3, 1}, {2, 1, 1}) == 1);
    for (int n = 1; n <= 6; ++n) {
        const auto& tab = character_table(n);
        auto parts = partitions(n);
        CAPTURE(n);
        // Column orthogonality at the identity: sum of squared degrees is n!.
        std::size_t id = parts.size() - 1;
        Integer sum = 0;
        for (const auto& row : tab) sum += row[id] * row[id];
        CHECK(sum == Integer(factorial(n)));
        // Row orthogonality.
        for (std::size_t a = 0; a < tab.size(); ++a)
            for (std::size_t b = 0; b < tab.size(); ++b) {
                Rational ip = 0;
                for (std::size_t k = 0; k < parts.size(); ++k)
                    ip += Rational(tab[a][k] * tab[b][k]) / Rational(centralizer_order(parts[k]));
                CHECK(ip == (a == b ? 1 : 0));
            }
    }
}

TEST_CASE("bicharacters of FB-bimodules") {
    // kS_2 as an S_2 x S_2 bimodule: regular, so triv(x)triv + sgn(x)sgn.
    auto fb = as_dg_bimodule(build_builtin(Builtin::FB, 2));
    auto h = homology(*fb, 2, 2, true);
    REQUIRE(h.characters.count(0));
    auto chi = h.characters[0];
    auto dec = decompose_bicharacter(2, 2, chi);
    CHECK(dec.size() == 2);
    CHECK(dec[{0, 0}] == 1);
    CHECK(dec[{1, 1}] == 1);
    CHECK(irreducible_bicharacter({2}, {1, 1}).size() == 4);
    CHECK(partition_name({2, 1}) == "[2,1]");
}

TEST_CASE("parallel jobs") {
    std::atomic<int> sum{0};
    run_parallel(100, 4, [&](std::size_t i) { sum += static_cast<int>(i); });
    CHECK(sum == 4950);
    CHECK_THROWS(run_parallel(10, 2, [](std::size_t i) {
        if (i == 3) throw FbError("boom");
    }));
}
