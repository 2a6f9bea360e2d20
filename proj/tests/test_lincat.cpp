#include "doctest.h"
#include "fbk/lincat.hpp"

using namespace fbk;

namespace {

std::size_t surjections(int m, int n) {
    return map_set(m, n, MapKind::Surjective).size();
}

// Inclusion-exclusion count of surjections, independent of the enumeration.
long long surj_count(int m, int n) {
    long long s = 0;
    for (int k = 0; k <= n; ++k) {
        long long p = 1;
        for (int i = 0; i < m; ++i) p *= (n - k);
        long long term = static_cast<long long>(binomial(n, k)) * p;
        s += k % 2 ? -term : term;
    }
    return s;
}

}  // namespace

TEST_CASE("builtin dimensions") {
    auto fi = build_builtin(Builtin::FI, 5);
    auto fs = build_builtin(Builtin::FS, 5);
    auto fa = build_builtin(Builtin::FA, 5);
    CHECK(fi->dim(2, 3) == 6);
    CHECK(fa->dim(2, 2) == 4);
    for (int m = 0; m <= 5; ++m)
        for (int n = 0; n <= 5; ++n) {
            CHECK(fi->dim(m, n) == (n >= m ? factorial(n) / factorial(n - m) : 0));
            CHECK(static_cast<long long>(fs->dim(m, n)) == surj_count(m, n));
            std::size_t p = 1;
            for (int i = 0; i < m; ++i) p *= n;
            CHECK(fa->dim(m, n) == p);
            (void)surjections;
        }
}

TEST_CASE("builtin categories are unital and associative") {
    for (auto b : {Builtin::FB, Builtin::FI, Builtin::FIddag, Builtin::FS, Builtin::FA}) {
        auto c = build_builtin(b, 4);
        CAPTURE(c->name());
        CHECK(check_unitality(*c, 4).ok());
        auto r = check_associativity(*c, 4, 3, 200);
        CHECK_MESSAGE(r.ok(), r.failure);
        OppositeCategory op(c);
        CHECK(check_unitality(op, 4).ok());
        CHECK(check_associativity(op, 3, 3, 50).ok());
    }
}

TEST_CASE("kFI-ddag twists permutations by the sign") {
    auto c = build_builtin(Builtin::FIddag, 3);
    Perm t = coxeter(2, 0);
    CHECK(c->perm(2, t).terms[0].second == -1);
    auto u = c->underlying();
    auto fi = build_builtin(Builtin::FI, 3)->underlying();
    CHECK(isomorphic(u, ddag_twist(fi), 3));
}

TEST_CASE("underlying bimodules validate") {
    auto fa = build_builtin(Builtin::FA, 4)->underlying();
    for (int a = 0; a <= 4; ++a)
        for (int b = 0; b <= 4; ++b) CHECK_NOTHROW(fa.at(a, b).validate());
}

TEST_CASE("parse builtin names") {
    CHECK(parse_builtin("kFI") == Builtin::FI);
    CHECK_THROWS_AS(parse_builtin("nope"), FbError);
}
