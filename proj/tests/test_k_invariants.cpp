#include <doctest.h>

#include "busecoarse/errors.hpp"
#include "busecoarse/k_invariants.hpp"
#include "oracles.hpp"

using namespace busecoarse;
using Group = AbelianGroupDescriptor;

TEST_CASE("sphere K-homology against the suspension recursion") {
    CHECK(sphere_k_homology(1, 1) == Group::integers());
    CHECK(sphere_k_homology(0, 1) == Group::zero());
    CHECK(sphere_k_homology(2, 0) == Group::integers());
    for (int m = 0; m <= 12; ++m)
        for (int q = 0; q <= 1; ++q) CHECK(sphere_k_homology(m, q).rank() == oracle::sphere_rank(m, q));
    CHECK_THROWS_AS(sphere_k_homology(-1, 0), DomainError);
    CHECK_THROWS_AS(sphere_k_homology(1, 2), DomainError);
}

TEST_CASE("product normal form") {
    const auto z = Group::integers();
    CHECK(Group::product({}) == Group::zero());
    CHECK(Group::product({z}) == z);
    CHECK(Group::product({Group::zero(), z, Group::zero()}) == z);
    const auto zz = Group::product({z, z});
    CHECK(zz.kind() == Group::Kind::FiniteProduct);
    CHECK(zz.rank() == 2);
    CHECK(Group::product({zz, z}).rank() == 3);
    CHECK(Group::product({zz, Group::countable_product_of_z()}) == Group::countable_product_of_z());
    CHECK(std::string(to_string(Group::Kind::CountableProductOfZ)) == "countable_product_of_Z");
}

TEST_CASE("boundary of X_p") {
    CHECK(xp_boundary_k(0) == Group::countable_product_of_z());
    CHECK(xp_boundary_k(1) == Group::countable_product_of_z());
    CHECK(xp_boundary_contributors(0, 4) == std::vector<int>{1, 3});
    CHECK(xp_boundary_contributors(1, 4) == std::vector<int>{2, 4});
    const auto t = xp_boundary_k_truncated(0, 4);
    CHECK(t.kind() == Group::Kind::FiniteProduct);
    CHECK(t.rank() == 2);
    for (int n = 1; n <= 20; ++n)
        for (int q = 0; q <= 1; ++q) {
            int rank = 0;
            for (int i = 1; i <= n; ++i) rank += oracle::sphere_rank(i - 1, q);
            CHECK(xp_boundary_k_truncated(q, n).rank() == rank);
        }
}
