#include "doctest.h"
#include "fbk/fbcore.hpp"
#include "fbk/lincat.hpp"

using namespace fbk;

namespace {

FbBimodule bi(Builtin b, int bound) { return build_builtin(b, bound)->underlying(); }

bool is_perm_matrix(const RationalMatrix& m) {
    std::vector<int> per_col(m.cols(), 0);
    for (const auto& [r, c, x] : m.entries()) {
        if (x != 1) return false;
        ++per_col[c];
    }
    for (int k : per_col)
        if (k != 1) return false;
    return true;
}

}  // namespace

TEST_CASE("symmetric group actions validate") {
    CHECK_NOTHROW(SymAction::regular(4).validate());
    CHECK_NOTHROW(SymAction::sign(3).validate());
    SymAction bad = SymAction::trivial(3);
    bad.gens[1] = bad.gens[1].scaled(-1);
    CHECK_THROWS_AS(bad.validate(), FbError);
}

TEST_CASE("Day convolution") {
    FbModule t1 = FbModule::concentrated(3, SymAction::trivial(1));
    FbModule c = day_convolution(t1, t1);
    CHECK(c.dim(2) == 2);
    CHECK(c.dim(1) == 0);
    FbBimodule u = bi(Builtin::FB, 4);
    FbBimodule ut = day_convolution(u, FbModule::triv(4));
    for (int a = 0; a <= 4; ++a)
        for (int b = 0; b <= 4; ++b) {
            std::size_t expect = b >= a ? factorial(b) / factorial(b - a) : 0;
            CHECK(ut.dim(a, b) == expect);
            CHECK_NOTHROW(ut.at(a, b).validate());
        }
}

TEST_CASE("tensor over FB") {
    int n = 4;
    FbBimodule u = bi(Builtin::FB, n), fi = bi(Builtin::FI, n), fs = bi(Builtin::FS, n), fa = bi(Builtin::FA, n);
    CHECK(isomorphic(tensor_over_fb(u, fa), fa, n));
    CHECK(isomorphic(tensor_over_fb(fa, u), fa, n));
    CHECK(tensor_over_fb(fi, fs).dim(2, 2) == 4);
    FbBimodule fi1 = z_component(fi, 1);
    CHECK(tensor_over_fb(fi1, fi1).dim(0, 2) == 2);
    // associativity up to isomorphism
    FbBimodule l = tensor_over_fb(tensor_over_fb(fi, fs), fa);
    FbBimodule r = tensor_over_fb(fi, tensor_over_fb(fs, fa));
    CHECK(isomorphic(l, r, n));
    // kFI (x) kFS is kFA as bimodules (epi-mono factorisation)
    CHECK(isomorphic(tensor_over_fb(fi, fs), fa, n));
}

TEST_CASE("tensor with a truncated module agrees at the truncation arity") {
    int n = 4;
    // non-negative bimodules only see arities up to the target
    for (auto b : {Builtin::FI, Builtin::FB}) {
        FbBimodule x = bi(b, n);
        for (const FbModule& t : {FbModule::triv(n), FbModule::sgn(n)}) {
            FbBimodule full = tensor_over_fb(x, as_left_bimodule(t));
            for (int s = 0; s <= n; ++s) {
                FbBimodule cut = tensor_over_fb(x, as_left_bimodule(truncate(t, s, TruncateKind::AtMost)));
                CHECK(same_structure(cut.at(0, s), full.at(0, s)));
            }
        }
    }
    // kFA is not non-negative and the truncation is visible
    FbBimodule fa = bi(Builtin::FA, n);
    FbModule t = FbModule::triv(n);
    CHECK(tensor_over_fb(fa, as_left_bimodule(truncate(t, 1, TruncateKind::AtMost))).dim(0, 1) <
          tensor_over_fb(fa, as_left_bimodule(t)).dim(0, 1));
}

TEST_CASE("hom over FB") {
    int n = 4;
    FbBimodule u = bi(Builtin::FB, n), fi = bi(Builtin::FI, n);
    CHECK(isomorphic(hom_over_fb(u, u, HomSide::Left), u, n));
    CHECK(isomorphic(hom_over_fb(u, u, HomSide::Right), u, n));
    FbBimodule h = hom_over_fb(fi, u, HomSide::Right);
    for (int a = 0; a <= n; ++a)
        for (int b = 0; b <= n; ++b) {
            CHECK(h.dim(a, b) == fi.dim(b, a));
            CHECK_NOTHROW(h.at(a, b).validate());
        }
}

TEST_CASE("sharp duality") {
    int n = 4;
    FbBimodule u = bi(Builtin::FB, n), fi = bi(Builtin::FI, n), fa = bi(Builtin::FA, n);
    FbBimodule ss = sharp_dual(sharp_dual(fa));
    for (int a = 0; a <= n; ++a)
        for (int b = 0; b <= n; ++b) CHECK(same_structure(ss.at(a, b), fa.at(a, b)));
    CHECK(isomorphic(sharp_dual(u), u, n));
    FbBimodule fs = sharp_dual(fi);
    for (int a = 0; a <= n; ++a)
        for (int b = 0; b <= n; ++b) {
            const BiComponent& c = fs.at(b, a);
            std::size_t expect = b >= a ? factorial(b) / factorial(b - a) : 0;
            CHECK(c.dim == expect);
            for (const auto& g : c.right) CHECK(is_perm_matrix(g));
            for (const auto& g : c.left) CHECK(is_perm_matrix(g));
            // kFI lives in a <= b, its dual in a >= b
            if (a > b) CHECK(fi.dim(a, b) == 0);
            if (a < b) CHECK(fs.dim(a, b) == 0);
        }
}

TEST_CASE("sign twist") {
    int n = 4;
    FbBimodule u = bi(Builtin::FB, n), fi = bi(Builtin::FI, n);
    FbBimodule ut = ddag_twist(u);
    for (int k = 0; k <= n; ++k) {
        // x -> sgn(x) x intertwines kS_k with its doubly twisted copy
        const auto& ms = map_set(k, k, MapKind::Bijective);
        RationalMatrix d(ms.size(), ms.size());
        for (std::size_t i = 0; i < ms.size(); ++i) d.set(i, i, perm_sign(ms[i]));
        const BiComponent& x = u.at(k, k);
        const BiComponent& y = ut.at(k, k);
        for (std::size_t g = 0; g < x.right.size(); ++g) {
            CHECK(d * y.right[g] == x.right[g] * d);
            CHECK(d * y.left[g] == x.left[g] * d);
        }
    }
    FbBimodule l = ddag_twist(tensor_over_fb(fi, fi));
    FbBimodule r = tensor_over_fb(ddag_twist(fi), ddag_twist(fi));
    CHECK(isomorphic(l, r, n));
}

TEST_CASE("weight components and truncation") {
    int n = 4;
    FbBimodule u = bi(Builtin::FB, n), fi = bi(Builtin::FI, n), fs = bi(Builtin::FS, n);
    FbBimodule fi0 = z_component(fi, 0);
    for (int a = 0; a <= n; ++a)
        for (int b = 0; b <= n; ++b) {
            CHECK(same_structure(fi0.at(a, b), u.at(a, b)));
            for (int k = 1; k <= n; ++k) CHECK(z_component(fs, k).dim(a, b) == 0);
        }
    FbModule t = truncate(FbModule::triv(n), 2, TruncateKind::AtMost);
    CHECK(t.support() == std::vector<int>{0, 1, 2});
}

TEST_CASE("sheering") {
    int n = 4;
    FbBimodule u = bi(Builtin::FB, n), fi = bi(Builtin::FI, n);
    for (auto dir : {SheerDirection::R, SheerDirection::L}) {
        GradedFbBimodule s = sheer(GradedFbBimodule::concentrated(u), dir);
        for (auto [a, b, k] : s.support()) CHECK(k == 0);
        CHECK(isomorphic(s.degree_part(0), u, n));
    }
    GradedFbBimodule s = sheer(GradedFbBimodule::concentrated(fi), SheerDirection::L);
    for (auto [a, b, k] : s.support()) CHECK(k == -(b - a));
    CHECK(s.at(1, 3, -2).dim == 3);
}
