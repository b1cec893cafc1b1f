#include <catch2/catch_amalgamated.hpp>

#include "gapset/ideals.hpp"
#include "gapset/oracle.hpp"

using namespace gapset;

namespace {

// independent route: x lies in { F(S)+shift-z : z outside S } exactly when
// F(S)+shift-x is outside S
bool in_shifted_canonical(const NumericalSemigroup& s, Int shift, Int x) {
    return !s.contains(s.frobenius() + shift - x);
}

}  // namespace

TEST_CASE("relative ideal normalization", "[ideals]") {
    auto s23 = from_generators({2, 3});

    RelativeIdeal full(s23, {0, 1, 2, 3}, 3);  // all of N
    CHECK(full.bound() == -1);
    CHECK(full.small_elements().empty());
    CHECK(full.contains(0));
    CHECK(full.contains(123));

    RelativeIdeal tail(s23, {5}, 5);  // [5, oo)
    CHECK(tail.bound() == 4);
    CHECK(tail.small_elements().empty());
    CHECK(tail.min_element() == 5);

    RelativeIdeal mixed(s23, {-2, 4}, 4);
    CHECK(mixed.bound() == 3);
    CHECK(mixed.small_elements() == std::vector<Int>{-2});
    CHECK(mixed.min_element() == -2);
    CHECK(mixed.contains(-2));
    CHECK_FALSE(mixed.contains(-1));

    CHECK(RelativeIdeal(s23, {0, 2}, 3) == RelativeIdeal(s23, {0, 2, 4, 5}, 5));
}

TEST_CASE("shifted canonical ideal", "[ideals]") {
    auto s23 = from_generators({2, 3});

    auto k0 = shifted_canonical(s23, 0);
    CHECK(k0.small_elements() == std::vector<Int>{0});
    CHECK(k0.bound() == 1);
    for (Int x = -10; x <= 10; ++x) CHECK(k0.contains(x) == in_shifted_canonical(s23, 0, x));

    auto k6 = shifted_canonical(s23, 6);
    CHECK(k6.bound() == 7);
    CHECK(k6.small_elements() == std::vector<Int>{6});
    CHECK(k6.positive_gaps() == std::vector<Int>{1, 2, 3, 4, 5, 7});
    for (Int x = -10; x <= 20; ++x) CHECK(k6.contains(x) == in_shifted_canonical(s23, 6, x));

    // negative shift keeps negative members
    auto km = shifted_canonical(s23, -3);
    CHECK(km.small_elements() == std::vector<Int>{-3});
    for (Int x = -10; x <= 10; ++x) CHECK(km.contains(x) == in_shifted_canonical(s23, -3, x));

    // genus-0 owner: the ideal is a pure tail
    auto kn = shifted_canonical(NumericalSemigroup{}, 8);  // F(N) = -1, shift F+1 = 8 targets F = 7
    CHECK(kn.small_elements().empty());
    CHECK(kn.bound() == 7);
    CHECK(kn.positive_gaps() == std::vector<Int>{1, 2, 3, 4, 5, 6, 7});
}

TEST_CASE("gapset of the shifted canonical ideal", "[ideals]") {
    auto s23 = from_generators({2, 3});
    auto s25 = from_generators({2, 5});
    CHECK(gaps_of_shifted_canonical(s23, 7) == std::vector<Int>{1, 2, 3, 4, 5, 7});
    CHECK(gaps_of_shifted_canonical(s25, 7) == std::vector<Int>{1, 2, 3, 5, 7});
    CHECK(gaps_of_shifted_canonical(NumericalSemigroup{}, 5) == std::vector<Int>{1, 2, 3, 4, 5});
    CHECK_THROWS_AS(gaps_of_shifted_canonical(s23, 1), DomainError);
    CHECK_THROWS_AS(gaps_of_shifted_canonical(s23, 0), DomainError);
}

TEST_CASE("shifted canonical matches its gapset description exhaustively", "[ideals]") {
    // owners with F(S) <= 10, targets F(S) < F <= 25
    for (Int fs = 1; fs <= 10; ++fs)
        for (const auto& s : oracle::enumerate_by_frobenius(fs))
            for (Int f = fs + 1; f <= 25; ++f)
                CHECK(gaps_of_shifted_canonical(s, f) ==
                      shifted_canonical(s, f - s.frobenius()).positive_gaps());
    for (Int f = 1; f <= 25; ++f)
        CHECK(gaps_of_shifted_canonical(NumericalSemigroup{}, f) ==
              shifted_canonical(NumericalSemigroup{}, f + 1).positive_gaps());
}

TEST_CASE("star dual", "[ideals]") {
    auto d1 = star_dual(from_generators({2, 3}));
    CHECK(d1.bound() == -1);  // S u PF = all of N here
    CHECK(d1.small_elements().empty());

    auto d2 = star_dual(from_gaps({1, 2, 3, 4, 5, 7}));
    CHECK(d2.positive_gaps() == std::vector<Int>{1});

    auto d3 = star_dual(from_generators({4, 5, 11}));
    CHECK(d3.positive_gaps() == std::vector<Int>{1, 2, 3});

    CHECK_THROWS_AS(star_dual(NumericalSemigroup{}), DomainError);
}

TEST_CASE("star dual is an ideal containing S with g-t gaps", "[ideals]") {
    for (Int f = 1; f <= 14; ++f)
        for (const auto& s : oracle::enumerate_by_frobenius(f)) {
            const auto dual = star_dual(s);
            CHECK(is_relative_ideal(dual.small_elements(), dual.bound(), s));
            for (Int x = 0; x <= f; ++x)
                if (s.contains(x)) CHECK(dual.contains(x));
            const Int type = static_cast<Int>(pseudo_frobenius(s).elements.size());
            CHECK(static_cast<Int>(dual.positive_gaps().size()) == s.genus() - type);
        }
}

TEST_CASE("is_relative_ideal", "[ideals]") {
    auto s4511 = from_generators({4, 5, 11});
    auto dual = star_dual(s4511);
    CHECK(is_relative_ideal(dual.small_elements(), dual.bound(), s4511));

    // S as an ideal over itself
    CHECK(is_relative_ideal({0, 4, 5}, 7, s4511));

    auto s23 = from_generators({2, 3});
    CHECK(is_relative_ideal({0, 1}, 1, s23));  // {1} u S = N

    CHECK_FALSE(is_relative_ideal({0, 3, 4, 5}, 7, s4511));  // 3+4 lands outside
    CHECK_FALSE(is_relative_ideal({0}, 7, s4511));           // 0+4 lands outside
}
