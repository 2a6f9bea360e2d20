#include "doctest.h"
#include "fbk/quadratic.hpp"

using namespace fbk;

namespace {

OperadCategoryPtr cat_of(BuiltinOperad w, int n) { return cat_from_operad(builtin_operad(w), n); }

}  // namespace

TEST_CASE("dual engine: annihilator and dimension duality") {
    for (auto w : {BuiltinOperad::Com, BuiltinOperad::Lie}) {
        auto c = cat_of(w, 5);
        auto e = dual_engine(*c);
        for (int k = 0; k <= 3; ++k) {
            auto r = weight2_duality(*c, *e, k);
            CAPTURE(k);
            CHECK(r.annihilator_dim + r.ideal_dim == r.free_dim);
            CHECK(r.closure_stable);
            CHECK(r.dual_dim == factorial(k) * r.ideal_dim);
            CHECK(r.dual_dim == factorial(k) * r.free_dim - c->dim(k + 2, k));
        }
    }
    auto d = absolute_dual(*cat_of(BuiltinOperad::Com, 5));
    CHECK(d->dim(1, 3) == 2);
    CHECK(d->dim(2, 3) == 6);
    CHECK(d->degree(1, 3, 0) == 2);
    auto u = absolute_dual(*cat_of(BuiltinOperad::Unit, 4));
    for (int a = 0; a <= 4; ++a)
        for (int b = 0; b <= 4; ++b) CHECK(u->dim(a, b) == (a == b ? factorial(a) : 0));
}

TEST_CASE("absolute duals are categories") {
    for (auto w : {BuiltinOperad::Com, BuiltinOperad::Lie}) {
        auto d = absolute_dual(*cat_of(w, 5));
        CHECK(check_unitality(*d, 5).ok());
        auto r = check_associativity(*d, 5, 3, 200);
        CHECK_MESSAGE(r.ok(), r.failure);
    }
}

TEST_CASE("dual of kFI") {
    auto r = verify_fi_dual(5);
    CHECK_MESSAGE(r.ok(), r.failure);
    auto fd = fi_dual(5);
    auto fi = build_builtin(Builtin::FI, 5);
    for (int a = 0; a <= 5; ++a)
        for (int b = 0; b <= 5; ++b) {
            CHECK(fd->dim(b, a) == fi->dim(a, b));
            for (std::size_t i = 0; i < fd->dim(b, a); ++i) CHECK(fd->degree(b, a, i) == b - a);
        }
    CHECK(check_associativity(*fd, 5, 3, 100).ok());
}

TEST_CASE("presentation sequence of kFI") {
    for (int a = 0; a <= 4; ++a) {
        auto p = presentation_sequence(a);
        CAPTURE(a);
        CHECK(p.tensor_dim == factorial(a + 2));
        CHECK(p.image_dim == factorial(a + 2) / 2);
        CHECK(p.kernel_dim == factorial(a + 2) / 2);
        CHECK(p.kernel_is_sign);
    }
}

TEST_CASE("relative dual for the G filtration") {
    for (auto w : {BuiltinOperad::Com, BuiltinOperad::Lie, BuiltinOperad::Unit}) {
        int n = 4;
        auto cu = assemble_cat_pu(cat_of(w, n), n);
        auto g = relative_dual_grG(cu, n);
        CAPTURE(g->name());
        CHECK(check_unitality(*g, n).ok());
        auto ra = check_associativity(*g, n, 3, 200);
        CHECK_MESSAGE(ra.ok(), ra.failure);
        auto rd = check_d_squared(*g, n);
        CHECK_MESSAGE(rd.ok(), rd.failure);
        auto rl = check_leibniz(*g, n, 200);
        CHECK_MESSAGE(rl.ok(), rl.failure);
        for (int s = 0; s <= n; ++s)
            for (int t = 0; t <= n; ++t) {
                auto win = degree_window(*g, s, t);
                if (!win.empty) {
                    CHECK(win.lo >= 0);
                    CHECK(win.hi <= s - t);
                }
            }
    }
}

TEST_CASE("relative dual for the F filtration") {
    for (auto w : {BuiltinOperad::Com, BuiltinOperad::Lie, BuiltinOperad::Unit}) {
        int n = 4;
        auto cu = assemble_cat_pu(cat_of(w, n), n);
        auto f = relative_dual_grF(cu, n);
        CAPTURE(f->name());
        CHECK(check_unitality(*f, n).ok());
        auto ra = check_associativity(*f, n, 3, 200);
        CHECK_MESSAGE(ra.ok(), ra.failure);
        auto rd = check_d_squared(*f, n);
        CHECK_MESSAGE(rd.ok(), rd.failure);
        auto rl = check_leibniz(*f, n, 200);
        CHECK_MESSAGE(rl.ok(), rl.failure);
        for (int s = 0; s <= n; ++s)
            for (int t = 0; t <= n; ++t) {
                auto win = degree_window(*f, s, t);
                if (!win.empty) {
                    CHECK(win.lo >= 0);
                    CHECK(win.hi <= t - s);
                }
            }
    }
}

TEST_CASE("desuspension of the dual of Cat Com is Cat Lie opposite") {
    int n = 5;
    auto e = dual_engine(*cat_of(BuiltinOperad::Com, n));
    EnginePtr lie = cat_of(BuiltinOperad::Lie, n);
    auto ds = desuspend(std::make_shared<OppositeCategory>(e));
    CHECK(ds->dim(1, 3) == 2);
    CHECK(ds->degree(1, 3, 0) == 0);
    auto iso = find_desuspension_iso(e, lie, 4);
    CHECK_MESSAGE(iso.found, "no signed chain isomorphism");
    MESSAGE(iso.description());
}

TEST_CASE("relative duals: differential examples") {
    int n = 4;
    auto com = assemble_cat_pu(cat_of(BuiltinOperad::Com, n), n);
    auto g = relative_dual_grG(com, n);
    for (std::size_t i = 0; i < g->dim(2, 2); ++i)
        if (g->degree(2, 2, i) == 0) CHECK(g->differential(2, 2, i).empty());
    bool some = false;
    for (std::size_t i = 0; i < g->dim(2, 1); ++i)
        if (g->degree(2, 1, i) == 0) {
            some = true;
            CHECK_FALSE(g->differential(2, 1, i).empty());
        }
    CHECK(some);
    CHECK(check_differential_equivariant(*g, n).ok());

    auto f = relative_dual_grF(com, n);
    CHECK(check_differential_equivariant(*f, n).ok());
    for (int a = 0; a <= n; ++a) CHECK(f->differential(a, a, 0).empty());
    const auto& e = f->absolute()->engine();
    auto fi = std::static_pointer_cast<const FunctionCategory>(f->right());
    // [alpha] -> sum over i<j of the dual merge tensored with f_ij o alpha, when injective
    for (int s = 0; s <= 3; ++s)
        for (int x = s; x <= n; ++x)
            for (std::size_t ai = 0; ai < fi->dim(s, x); ++ai) {
                const Map& alpha = fi->maps(s, x)[ai];
                TensorCategory::Label lab{x, 0, ai};
                std::size_t idx = f->index_of(s, x, lab);
                REQUIRE(idx != MapSet::npos);
                VecBuilder want;
                for (int i = 0; i < x; ++i)
                    for (int j = i + 1; j < x; ++j) {
                        Map h = compose(merge_map(x, i, j), alpha);
                        if (!is_injective(h, x - 1)) continue;
                        std::size_t gv = e.basis_index(x - 1, 1, identity_perm(x - 1),
                                                       e.free_slot(x - 1, 1, e.gen_index(x - 1, i, j, 0)));
                        want.add(f->element(s, x - 1, x, SparseVec::unit(gv),
                                            SparseVec::unit(fi->maps(s, x - 1).index(h))));
                    }
                CHECK(equal(f->differential(s, x, idx), want.take()));
            }

    auto unit = assemble_cat_pu(cat_of(BuiltinOperad::Unit, n), n);
    auto gu = relative_dual_grG(unit, n);
    auto fu = relative_dual_grF(unit, n);
    auto fd = fi_dual(n);
    auto kfi = build_builtin(Builtin::FI, n);
    for (int s = 0; s <= n; ++s)
        for (int t = 0; t <= n; ++t) {
            CHECK(gu->dim(s, t) == fd->dim(s, t));
            CHECK(fu->dim(s, t) == kfi->dim(s, t));
            for (std::size_t i = 0; i < gu->dim(s, t); ++i) CHECK(gu->differential(s, t, i).empty());
            for (std::size_t i = 0; i < fu->dim(s, t); ++i) CHECK(fu->differential(s, t, i).empty());
        }
}

TEST_CASE("desuspended relative duals stay DG") {
    int n = 4;
    auto fa = assemble_cat_pu(cat_of(BuiltinOperad::Com, n), n);
    auto d = desuspend(relative_dual_grF(fa, n));
    CHECK(check_unitality(*d, n).ok());
    auto rd = check_d_squared(*d, n);
    CHECK_MESSAGE(rd.ok(), rd.failure);
    auto rl = check_leibniz(*d, n, 200);
    CHECK_MESSAGE(rl.ok(), rl.failure);
    // degree zero part matches the desuspended absolute dual
    auto abs = desuspend(absolute_dual(*cat_of(BuiltinOperad::Com, n)));
    for (int s = 0; s <= n; ++s)
        for (int t = 0; t <= n; ++t)
            for (std::size_t i = 0; i < abs->dim(s, t); ++i) CHECK(abs->degree(s, t, i) == 0);
}
