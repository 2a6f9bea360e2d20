#include "doctest.h"
#include "fbk/operad.hpp"

using namespace fbk;

namespace {

OperadCategoryPtr com(int n) { return cat_from_operad(builtin_operad(BuiltinOperad::Com), n); }
OperadCategoryPtr lie(int n) { return cat_from_operad(builtin_operad(BuiltinOperad::Lie), n); }
OperadCategoryPtr unit_op(int n) { return cat_from_operad(builtin_operad(BuiltinOperad::Unit), n); }

// Full-space weight-two ideal at (k+2,k): the span of sigma . r . rho for all
// permutations, computed without the surjection slicing.
std::size_t full_ideal_dim(const QuadraticEngine& e, int k) {
    std::size_t nc = e.chain_count(k, 2);
    auto full = [&](const Perm& tau, std::size_t chain) { return perm_rank(tau) * nc + chain; };
    Echelon ech(factorial(k) * nc);
    for (const auto& r : e.data().relations(k))
        for (std::size_t rr = 0; rr < factorial(k + 2); ++rr) {
            Perm rho = perm_unrank(k + 2, rr);
            std::map<Perm, VecBuilder> right;
            VecBuilder acc0;
            std::vector<std::pair<Perm, std::pair<std::size_t, Rational>>> terms;
            for (const auto& [ci, c] : r.terms)
                for (const auto& t : e.push(k, e.chain_decode(k, 2, ci), rho, nullptr))
                    terms.push_back({t.v, {e.chain_encode(k, t.chain), c * t.coeff}});
            for (std::size_t lr = 0; lr < factorial(k); ++lr) {
                Perm sigma = perm_unrank(k, lr);
                VecBuilder v;
                for (const auto& [tv, pc] : terms) v.add(full(compose(sigma, tv), pc.first), pc.second);
                ech.insert(v.take());
            }
        }
    return ech.rank();
}

}  // namespace

TEST_CASE("tree oracle relations") {
    auto c = tree_oracle_relations(BuiltinOperad::Com);
    CHECK(c.size() == 2);
    auto l = tree_oracle_relations(BuiltinOperad::Lie);
    REQUIRE(l.size() == 1);
    // Jacobi: b1 - b2 - b3 up to scale
    const SparseVec& j = l[0];
    REQUIRE(j.size() == 3);
    CHECK(j.coeff(1) == -j.coeff(0));
    CHECK(j.coeff(2) == -j.coeff(0));
    for (const auto& v : c) CHECK(v.coeff(0) + v.coeff(1) + v.coeff(2) == 0);
}

TEST_CASE("presentations validate and round-trip through JSON") {
    for (auto w : {BuiltinOperad::Com, BuiltinOperad::Lie, BuiltinOperad::Unit}) {
        auto p = builtin_operad(w);
        CHECK_NOTHROW(p.validate());
        auto q = parse_operad_json(operad_to_json(p));
        CHECK(presentation_hash(p) == presentation_hash(q));
    }
    CHECK(presentation_hash(builtin_operad(BuiltinOperad::Com)) != presentation_hash(builtin_operad(BuiltinOperad::Lie)));
    CHECK_THROWS_AS(parse_operad_json("{\"arity2_dim\": 1}"), FbError);
    // a relation span that is not S_3-stable
    auto bad = builtin_operad(BuiltinOperad::Com);
    SparseVec r;
    r.push(0, 1);
    r.push(1, -1);
    bad.relations = {r};
    CHECK_FALSE(bad.s3_stable());
    CHECK_THROWS_AS(cat_from_operad(bad, 3), FbError);
    CHECK_THROWS_AS(cat_from_operad(builtin_operad(BuiltinOperad::Com), 9), FbError);
}

TEST_CASE("Cat Com has the dimensions of kFS and is isomorphic to it") {
    auto c = com(5);
    auto fs = std::static_pointer_cast<const FunctionCategory>(build_builtin(Builtin::FS, 5));
    for (int m = 0; m <= 5; ++m)
        for (int n = 0; n <= 5; ++n) CHECK(c->dim(m, n) == fs->dim(m, n));
    BasisMap f = [&](int a, int b, std::size_t i) {
        if (b == 0) return SparseVec::unit(0);
        return SparseVec::unit(fs->maps(a, b).index(basis_surjection(*c, a, b, i)));
    };
    auto r = check_functor(*c, *fs, f, 4, true);
    CHECK_MESSAGE(r.ok(), r.failure);
    for (int m = 1; m <= 5; ++m)
        for (int n = 1; n <= m; ++n) CHECK(functor_rank(*c, *fs, f, m, n) == fs->dim(m, n));
}

TEST_CASE("Cat Lie dimensions") {
    auto c = lie(5);
    std::vector<Integer> lie_dims{0, 1, 1, 2, 6, 24, 120};
    for (int n = 1; n <= 5; ++n) CHECK(c->dim(n, 1) == factorial(n - 1));
    for (int m = 0; m <= 5; ++m)
        for (int n = 0; n <= 5; ++n) CHECK(Integer(c->dim(m, n)) == (m == 0 && n == 0 ? Integer(1) : cat_dim_formula(lie_dims, m, n)));
    // weight zero is kFB
    auto fb = build_builtin(Builtin::FB, 5)->underlying();
    auto u = c->underlying();
    for (int n = 0; n <= 5; ++n) CHECK(isomorphic(u.at(n, n), fb.at(n, n)));
}

TEST_CASE("surjection slicing agrees with the full weight-two computation") {
    for (auto c : {com(5), lie(5)})
        for (int k = 1; k <= 3; ++k) CHECK(full_ideal_dim(*c, k) == factorial(k) * c->ideal(k, 2).rank());
}

TEST_CASE("operad categories are unital and associative") {
    for (auto c : {com(5), lie(5), unit_op(5)}) {
        CAPTURE(c->name());
        CHECK(check_unitality(*c, 5).ok());
        auto r = check_associativity(*c, 5, 3, 300);
        CHECK_MESSAGE(r.ok(), r.failure);
    }
}

TEST_CASE("weight components") {
    auto c = com(4);
    CHECK(weight_component(*c, 1).dim(3, 2) == 6);
    auto w0 = weight_component(*c, 0);
    for (int n = 0; n <= 4; ++n) CHECK(w0.dim(n, n) == factorial(n));
    CHECK(w0.dim(3, 2) == 0);
}

TEST_CASE("assembled unital categories") {
    int n = 4;
    auto fa = std::static_pointer_cast<const FunctionCategory>(build_builtin(Builtin::FA, n));
    auto fi = std::static_pointer_cast<const FunctionCategory>(build_builtin(Builtin::FI, n));
    auto c = com(n);
    auto cu = assemble_cat_pu(c, n);
    for (int s = 0; s <= n; ++s)
        for (int t = 0; t <= n; ++t) CHECK(cu->dim(s, t) == fa->dim(s, t));
    BasisMap f = [&](int s, int t, std::size_t i) {
        const auto& l = cu->labels(s, t)[i];
        Map p = l.mid == 0 ? Map{} : basis_surjection(*c, s, l.mid, l.b);
        return SparseVec::unit(fa->maps(s, t).index(compose(fi->maps(l.mid, t)[l.a], p)));
    };
    auto r = check_functor(*cu, *fa, f, 3, true);
    CHECK_MESSAGE(r.ok(), r.failure);
    for (int s = 0; s <= n; ++s)
        for (int t = 0; t <= n; ++t) CHECK(functor_rank(*cu, *fa, f, s, t) == fa->dim(s, t));
    auto ua = check_associativity(*cu, n, 3, 300);
    CHECK_MESSAGE(ua.ok(), ua.failure);

    auto uu = assemble_cat_pu(unit_op(n), n);
    for (int s = 0; s <= n; ++s)
        for (int t = 0; t <= n; ++t) CHECK(uu->dim(s, t) == fi->dim(s, t));
    CHECK(isomorphic(uu->underlying(), fi->underlying(), n));
    CHECK(check_associativity(*uu, n, 3, 100).ok());

    auto lu = assemble_cat_pu(lie(n), n);
    CHECK(check_associativity(*lu, n, 3, 200).ok());
    CHECK(check_unitality(*lu, n).ok());
}

TEST_CASE("filtrations of Cat Com^u") {
    int n = 4;
    auto c = com(n);
    auto cu = assemble_cat_pu(c, n);
    auto g0 = filtration(*cu, Filtration::G, 0);
    auto g1 = filtration(*cu, Filtration::G, 1);
    auto fi1 = z_component(build_builtin(Builtin::FI, n)->underlying(), 1);
    auto layer = tensor_over_fb(fi1, c->underlying());
    for (int s = 0; s <= n; ++s)
        for (int t = 0; t <= n; ++t) {
            CHECK(isomorphic(g0.at(s, t), c->underlying().at(s, t)));
            CHECK(g1.dim(s, t) - g0.dim(s, t) == layer.dim(s, t));
        }
    CHECK(g1.dim(2, 2) == 4);
    CHECK(check_filtration_multiplicative(*cu, Filtration::F, 3).ok());
    CHECK(check_filtration_multiplicative(*cu, Filtration::G, 3).ok());
}

TEST_CASE("augmentation actions for Com") {
    int n = 4;
    auto c = com(n);
    auto cu = assemble_cat_pu(c, n);
    auto aug = augmentation_actions(cu);
    auto fs = std::static_pointer_cast<const FunctionCategory>(build_builtin(Builtin::FS, n));
    auto fi = std::static_pointer_cast<const FunctionCategory>(build_builtin(Builtin::FI, n));
    auto surj = [&](int m, int k, std::size_t i) { return basis_surjection(*c, m, k, i); };
    for (int a = 1; a <= 3; ++a)
        for (int b = a; b <= 4; ++b)
            for (int cc = 1; cc <= b; ++cc)
                for (std::size_t p = 0; p < c->dim(b, cc); ++p)
                    for (std::size_t u = 0; u < fi->dim(a, b); ++u) {
                        Map h = compose(surj(b, cc, p), fi->maps(a, b)[u]);
                        SparseVec got = aug.right(a, b, cc, p, u);
                        if (!is_surjective(h, cc)) {
                            CHECK(got.empty());
                        } else {
                            REQUIRE(got.size() == 1);
                            CHECK(got.terms[0].second == 1);
                            CHECK(surj(a, cc, got.terms[0].first) == h);
                        }
                    }
    // p: 2 -> 1 against both injections 1 -> 2
    for (std::size_t u = 0; u < 2; ++u) {
        RationalMatrix m = aug.right_matrix(1, 2, 1, u);
        for (std::size_t r = 0; r < m.rows(); ++r) CHECK_FALSE(m.row(r).empty());
    }
    // unit
    std::size_t id2 = fi->maps(2, 2).index(identity_perm(2));
    for (std::size_t p = 0; p < c->dim(2, 1); ++p) CHECK(equal(aug.right(2, 2, 1, p, id2), SparseVec::unit(p)));
}

TEST_CASE("self-consistency identity for the augmentation projection") {
    // A = Cat P^u, R = kFI, ker = labels of positive operad weight; q projects onto R.
    int n = 4;
    for (auto c : {com(n), lie(n)}) {
        auto cu = assemble_cat_pu(c, n);
        auto proj = [&](int s, int t, const SparseVec& v, bool keep_r) {
            VecBuilder b;
            for (const auto& [i, x] : v.terms)
                if ((cu->operad_weight(s, t, i) == 0) == keep_r) b.add(i, x);
            return b.take();
        };
        std::size_t checked = 0;
        for (int a = 0; a <= n; ++a)
            for (int b = 0; b <= n; ++b)
                for (int cc = 0; cc <= n; ++cc)
                    for (int d = 0; d <= n; ++d) {
                        if (!cu->dim(a, b) || !cu->dim(b, cc) || !cu->dim(cc, d)) continue;
                        if (cu->dim(a, b) * cu->dim(b, cc) * cu->dim(cc, d) > 4000) continue;
                        for (std::size_t r = 0; r < cu->dim(a, b); ++r) {
                            if (cu->operad_weight(a, b, r) != 0) continue;
                            for (std::size_t y = 0; y < cu->dim(b, cc); ++y) {
                                if (cu->operad_weight(b, cc, y) == 0) continue;
                                SparseVec qyr = proj(a, cc, cu->compose(a, b, cc, SparseVec::unit(y), SparseVec::unit(r)), true);
                                for (std::size_t x = 0; x < cu->dim(cc, d); ++x) {
                                    if (cu->operad_weight(cc, d, x) == 0) continue;
                                    SparseVec lhs = proj(a, d, cu->compose(a, cc, d, SparseVec::unit(x), qyr), true);
                                    SparseVec xy = proj(b, d, cu->compose(b, cc, d, SparseVec::unit(x), SparseVec::unit(y)), false);
                                    SparseVec rhs = proj(a, d, cu->compose(a, b, d, xy, SparseVec::unit(r)), true);
                                    CHECK(equal(lhs, rhs));
                                    ++checked;
                                }
                            }
                        }
                    }
        CHECK(checked > 0);
    }
}
