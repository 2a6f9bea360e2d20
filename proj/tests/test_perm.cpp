#include "doctest.h"
#include "fbk/perm.hpp"
#include "fbk/fbcore.hpp"

using namespace fbk;

TEST_CASE("map sets have the expected sizes") {
    CHECK(map_set(2, 3, MapKind::Injective).size() == 6);
    CHECK(map_set(3, 2, MapKind::Surjective).size() == 6);
    CHECK(map_set(2, 2, MapKind::All).size() == 4);
    CHECK(map_set(0, 3, MapKind::Injective).size() == 1);
    CHECK(map_set(0, 0, MapKind::Bijective).size() == 1);
    CHECK(map_set(1, 0, MapKind::All).size() == 0);
}

TEST_CASE("coxeter words reproduce permutations") {
    for (int n = 0; n <= 5; ++n)
        for (std::size_t r = 0; r < factorial(n); ++r) {
            Perm p = perm_unrank(n, r);
            CHECK(perm_rank(p) == r);
            CHECK(perm_from_word(n, coxeter_word(p)) == p);
            CHECK(perm_sign(p) == (coxeter_word(p).size() % 2 ? -1 : 1));
        }
}

TEST_CASE("partitions and class representatives") {
    CHECK(partitions(4).size() == 5);
    CHECK(partitions(8).size() == 22);
    auto w = class_representative_word({3, 1});
    Perm p = perm_from_word(4, w);
    CHECK(p[3] == 3);
    CHECK(perm_sign(p) == 1);
}

TEST_CASE("merge and skip maps") {
    CHECK(merge_map(3, 0, 2) == Map{0, 1, 0});
    CHECK(skip_map(3, 1) == Map{0, 2});
}
