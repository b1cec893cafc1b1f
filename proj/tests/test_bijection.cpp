#include <catch2/catch_amalgamated.hpp>

#include "gapset/bijection.hpp"
#include "gapset/oracle.hpp"

using namespace gapset;

TEST_CASE("forward map", "[bijection]") {
    auto s23 = from_generators({2, 3});
    auto img = forward(s23, 7);
    CHECK(img.semigroup.gaps() == std::vector<Int>{1, 2, 3, 4, 5, 7});
    CHECK(img.bijective);
    CHECK(invariants(img.semigroup) == InvariantSummary{7, 6, 6, 5, 2});

    auto s25 = from_generators({2, 5});
    img = forward(s25, 7);
    CHECK(img.semigroup.gaps() == std::vector<Int>{1, 2, 3, 5, 7});
    CHECK(img.semigroup.contains(4));
    CHECK(invariants(img.semigroup).type == 3);
    CHECK(invariants(img.semigroup).multiplicity == 4);

    img = forward(NumericalSemigroup{}, 5);
    CHECK(img.semigroup.gaps() == std::vector<Int>{1, 2, 3, 4, 5});
    CHECK(invariants(img.semigroup).type == 5);
    CHECK(invariants(img.semigroup).depth == 1);  // genus-0 seed is the one depth-1 image
    CHECK(img.bijective);

    // F must exceed twice the Frobenius number of the source
    CHECK_THROWS_AS(forward(s25, 6), DomainError);
    CHECK_THROWS_AS(forward(s23, 0), DomainError);
    // genus 3 with F(S) = 3: F = 7 gives a valid image below the 4g-1 = 11 threshold
    CHECK_FALSE(forward(from_gaps({1, 2, 3}), 7).bijective);
}

TEST_CASE("image pseudo-Frobenius formula", "[bijection]") {
    CHECK(image_pf(from_generators({2, 3}), 7).elements == std::vector<Int>{2, 3, 4, 5, 7});
    CHECK(image_pf(from_generators({2, 5}), 7).elements == std::vector<Int>{2, 5, 7});
    CHECK(image_pf(NumericalSemigroup{}, 5).elements == std::vector<Int>{1, 2, 3, 4, 5});
}

TEST_CASE("inverse map", "[bijection]") {
    CHECK(inverse(from_gaps({1, 2, 3, 4, 5, 7})) == from_generators({2, 3}));
    CHECK(inverse(from_gaps({1, 2, 3, 5, 7})) == from_generators({2, 5}));
    CHECK(inverse(from_gaps({1, 2, 3, 4, 5, 6, 7})) == NumericalSemigroup{});

    CHECK_THROWS_AS(inverse(from_generators({4, 5, 11})), DomainError);  // t = 2 < (F-1)/2
    CHECK_THROWS_AS(inverse(NumericalSemigroup{}), DomainError);
}

TEST_CASE("high-type characterization", "[bijection]") {
    CHECK(almost_symmetric_via_star_dual(from_gaps({1, 2, 3, 4, 5, 7})));
    CHECK(almost_symmetric_via_star_dual(from_gaps({1, 2, 3, 4, 5, 6, 7})));
    // high type but not almost symmetric: the star dual has the wrong genus
    CHECK_FALSE(almost_symmetric_via_star_dual(from_gaps({1, 2, 3, 5, 6, 7})));
    CHECK_THROWS_AS(almost_symmetric_via_star_dual(from_generators({4, 5, 11})), DomainError);
}

TEST_CASE("characterization agrees with almost symmetry for F <= 20", "[bijection]") {
    int applicable = 0, almost_symmetric_count = 0;
    for (Int f = 2; f <= 20; ++f)
        for (const auto& s : oracle::enumerate_by_frobenius(f)) {
            const Int t = static_cast<Int>(pseudo_frobenius(s).elements.size());
            if (2 * t < f - 1 || (f - t) % 2 != 0) continue;
            ++applicable;
            const bool as = is_almost_symmetric(s);
            almost_symmetric_count += as;
            CHECK(almost_symmetric_via_star_dual(s) == as);
        }
    CHECK(applicable > almost_symmetric_count);  // both outcomes are exercised
}

TEST_CASE("recover_from_pf", "[bijection]") {
    CHECK(recover_from_pf({{2, 3, 4, 5, 7}}, 1) == from_generators({2, 3}));
    CHECK(recover_from_pf({{2, 5, 7}}, 2) == from_generators({2, 5}));
    CHECK(recover_from_pf({{1, 2, 3, 4, 5}}, 0) == NumericalSemigroup{});
    // {1,2,3,4,5} \ {2,5} = {1,3,4} is not closed (4 = 2+2)
    CHECK_THROWS_AS(recover_from_pf({{2, 5}}, 3), InvalidPfError);
}

TEST_CASE("round trip and image invariants, genus <= 8", "[bijection]") {
    for (Int g = 1; g <= 8; ++g)
        for (const auto& s : oracle::tree_enumerate_by_genus(g))
            for (Int f : {4 * g - 1, 4 * g, 4 * g + 1, 4 * g + 5}) {
                const auto img = forward(s, f);
                REQUIRE(img.bijective);
                CHECK(inverse(img.semigroup) == s);
                const auto v = invariants(img.semigroup);
                CHECK(v.frobenius == f);
                CHECK(v.genus == f - g);
                CHECK(v.type == f - 2 * g);
                CHECK(v.multiplicity == f - s.frobenius());
                CHECK(v.depth == 2);
                CHECK(is_almost_symmetric_definitional(img.semigroup));
                CHECK(image_pf(s, f) == pseudo_frobenius(img.semigroup));
            }
}

TEST_CASE("genus-0 seed round trips at any F", "[bijection]") {
    for (Int f = 1; f <= 9; ++f) {
        const auto img = forward(NumericalSemigroup{}, f);
        CHECK(invariants(img.semigroup).type == f);
        CHECK(inverse(img.semigroup) == NumericalSemigroup{});
        CHECK(image_pf(NumericalSemigroup{}, f) == pseudo_frobenius(img.semigroup));
    }
}

TEST_CASE("injectivity at fixed F and genus", "[bijection]") {
    for (Int g = 1; g <= 7; ++g) {
        const Int f = 4 * g - 1;
        std::vector<NumericalSemigroup> images;
        for (const auto& s : oracle::tree_enumerate_by_genus(g))
            images.push_back(forward(s, f).semigroup);
        std::sort(images.begin(), images.end());
        CHECK(std::adjacent_find(images.begin(), images.end()) == images.end());
    }
}

TEST_CASE("surjectivity onto almost symmetric semigroups, F <= 17", "[bijection]") {
    for (Int f = 1; f <= 17; ++f)
        for (Int g = 0; 4 * g - 1 <= f && f - 2 * g >= 0; ++g) {
            std::vector<NumericalSemigroup> fwd;
            for (const auto& s : oracle::tree_enumerate_by_genus(g))
                fwd.push_back(forward(s, f).semigroup);
            std::sort(fwd.begin(), fwd.end());
            CHECK(fwd == oracle::enumerate_as_by_frobenius(f, f - 2 * g));
        }
}

TEST_CASE("pf uniqueness in the high-type regime, F <= 19", "[bijection]") {
    for (Int f = 1; f <= 19; ++f)
        for (Int t = f; t >= 0 && 2 * t >= f - 1; t -= 2) {
            std::vector<std::vector<Int>> pf_sets;
            for (const auto& s : oracle::enumerate_as_by_frobenius(f, t))
                pf_sets.push_back(pseudo_frobenius(s).elements);
            std::sort(pf_sets.begin(), pf_sets.end());
            CHECK(std::adjacent_find(pf_sets.begin(), pf_sets.end()) == pf_sets.end());
        }
}
