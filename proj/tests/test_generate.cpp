#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hforge/canon.hpp"
#include "hforge/generate.hpp"
#include "hforge/hadamard.hpp"

#include "fixtures.hpp"

#include <set>

using namespace hforge;

TEST_CASE("one equivalence class at small orders") {
    for (int n : {1, 2, 4, 8, 12}) {
        auto cls = hadamard_classes(n);
        CHECK(cls.size() == 1);
        CHECK(is_hadamard(cls[0]));
    }
}

TEST_CASE("five classes at order 16") {
    auto cls = hadamard_classes(16);
    REQUIRE(cls.size() == 5);
    std::set<std::vector<std::uint8_t>> certs;
    for (const auto& M : cls) {
        CHECK(is_hadamard(M));
        CHECK(M.n_rows() == 16);
        certs.insert(hadamard_certificate(M).form);
    }
    // representatives really are pairwise inequivalent
    CHECK(certs.size() == 5);
}

TEST_CASE("known matrices land in the census") {
    auto cls12 = hadamard_classes(12);
    REQUIRE(cls12.size() == 1);
    CHECK(hadamard_equivalent(cls12[0], fixtures::h12()));

    auto cls16 = hadamard_classes(16);
    auto syl = fixtures::sylvester(16);
    int hits = 0;
    for (const auto& M : cls16)
        if (hadamard_equivalent(M, syl)) ++hits;
    CHECK(hits == 1);
}

TEST_CASE("thread count does not change the result") {
    auto a = hadamard_classes(16, 1);
    auto b = hadamard_classes(16, 4);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        CHECK(hadamard_certificate(a[i]).form == hadamard_certificate(b[i]).form);
}

TEST_CASE("invalid orders are rejected") {
    CHECK_THROWS(hadamard_classes(3));
    CHECK_THROWS(hadamard_classes(6));
    CHECK_THROWS(hadamard_classes(36));
}
