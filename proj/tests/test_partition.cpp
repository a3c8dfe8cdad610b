#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "thetamult/characters.hpp"
#include "thetamult/partition.hpp"
#include "thetamult/permutation.hpp"

using namespace thetamult;

namespace {

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

// Independent oracle for the Pieri expansion: multiplicity of chi_mu in
// Ind_{S_k x S_{n-k}}(1 (x) chi_lambda), by Frobenius reciprocity over Q.
// <1 (x) chi_lambda, Res chi_mu> summed over class pairs.
std::set<Partition> pieri_character_oracle(const Partition& lambda, int k) {
    int nk = static_cast<int>(lambda.size());
    int n = nk + k;
    std::set<Partition> out;
    for (const auto& mu : partitions_of(n)) {
        __int128 total = 0;
        for (const auto& alpha : partitions_of(k)) {
            for (const auto& beta : partitions_of(nk)) {
                // class of S_n with cycle type alpha ++ beta
                std::vector<int> joined = alpha.parts();
                joined.insert(joined.end(), beta.parts().begin(), beta.parts().end());
                std::sort(joined.rbegin(), joined.rend());
                Partition gamma(joined);
                long long ca = static_cast<long long>(conjugacy_class_size(alpha));
                long long cb = static_cast<long long>(conjugacy_class_size(beta));
                long long chl = (nk == 0) ? 1 : mn_character(lambda, beta);
                long long chm = mn_character(mu, gamma);
                total += static_cast<__int128>(ca) * cb * chl * chm;
            }
        }
        __int128 order = static_cast<__int128>(factorial(k)) * factorial(nk);
        REQUIRE(total % order == 0);
        long long mult = static_cast<long long>(total / order);
        REQUIRE(mult >= 0);
        REQUIRE(mult <= 1);  // Pieri multiplicities are multiplicity-free
        if (mult == 1) out.insert(mu);
    }
    return out;
}

}  // namespace

TEST_CASE("partition literals round-trip") {
    CHECK(Partition::parse("[3,1,1]") == P({3, 1, 1}));
    CHECK(Partition::parse("[0]").is_zero());
    CHECK(Partition::parse("[]").is_empty());
    CHECK(Partition::parse("[3,1,1]").to_string() == "[3,1,1]");
    CHECK(Partition::parse("[0]").to_string() == "[0]");
    CHECK(Partition::parse("[]").to_string() == "[]");
    CHECK_THROWS_AS(Partition::parse("[1,3]"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("[1,-2]"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("3,1"), std::invalid_argument);
}

TEST_CASE("degenerate partitions compare unequal to everything else") {
    CHECK(Partition::zero() != Partition::empty());
    CHECK(Partition::zero() != P({1}));
    CHECK(Partition::empty() != P({1}));
    CHECK(Partition::zero() == Partition::zero());
    CHECK(Partition::empty() == Partition::empty());
}

TEST_CASE("is_l_regular") {
    CHECK_FALSE(is_l_regular(P({2, 1, 1}), 2));
    CHECK(is_l_regular(P({3, 1}), 2));
    CHECK_FALSE(is_l_regular(P({2, 2, 2}), 3));
    CHECK(is_l_regular(Partition::zero(), 2));
    CHECK(is_l_regular(Partition::empty(), 2));
}

TEST_CASE("dominance order") {
    CHECK(dominance_leq(P({1, 1, 1}), P({3})));
    CHECK_FALSE(dominance_leq(P({3}), P({1, 1, 1})));
    CHECK(dominance_leq(P({2, 2}), P({3, 1})));
    CHECK_THROWS_AS(dominance_leq(P({2}), P({3})), std::invalid_argument);
}

TEST_CASE("dominance is a partial order on Par_n for n <= 8") {
    for (int n = 1; n <= 8; ++n) {
        auto ps = partitions_of(n);
        for (const auto& a : ps) {
            CHECK(dominance_leq(a, a));
            for (const auto& b : ps) {
                if (dominance_leq(a, b) && dominance_leq(b, a)) CHECK(a == b);
                for (const auto& c : ps)
                    if (dominance_leq(a, b) && dominance_leq(b, c)) CHECK(dominance_leq(a, c));
            }
        }
    }
}

TEST_CASE("distinct parts") {
    CHECK(distinct_parts(P({2, 2, 1})) == std::vector<int>{2, 1});
    CHECK(distinct_parts(P({3, 3, 3})) == std::vector<int>{3});
    CHECK(distinct_parts(Partition::zero()).empty());
}

TEST_CASE("horizontal strips") {
    CHECK(is_horizontal_strip(P({1}), P({3, 1})));
    CHECK_FALSE(is_horizontal_strip(P({1}), P({2, 2})));
    CHECK(is_horizontal_strip(P({2, 1}), P({2, 1})));
    CHECK(is_horizontal_strip(Partition::zero(), P({4})));
    CHECK_FALSE(is_horizontal_strip(Partition::zero(), P({1, 1})));
    CHECK_FALSE(is_horizontal_strip(Partition::empty(), P({1})));
}

TEST_CASE("pieri_expand examples") {
    CHECK(pieri_expand(P({1}), 1) ==
          std::vector<Partition>{P({2}), P({1, 1})});
    for (int k = 1; k <= 4; ++k)
        CHECK(pieri_expand(Partition::zero(), k) == std::vector<Partition>{P({k})});
    auto got = pieri_expand(P({2, 1}), 2);
    std::set<Partition> gotset(got.begin(), got.end());
    std::set<Partition> want{P({4, 1}), P({3, 2}), P({3, 1, 1}), P({2, 2, 1})};
    CHECK(gotset == want);
}

TEST_CASE("pieri_expand agrees with the character oracle") {
    for (int nk = 0; nk <= 4; ++nk)
        for (const auto& lambda : partitions_of(nk))
            for (int k = 1; k <= 3; ++k) {
                auto got = pieri_expand(lambda, k);
                std::set<Partition> gotset(got.begin(), got.end());
                CHECK(gotset == pieri_character_oracle(lambda, k));
            }
}

TEST_CASE("pieri_expand members are horizontal strips of the right size") {
    for (int n = 0; n <= 5; ++n)
        for (const auto& lambda : partitions_of(n))
            for (int k = 0; k <= 3; ++k) {
                auto got = pieri_expand(lambda, k);
                std::set<Partition> dedup(got.begin(), got.end());
                CHECK(dedup.size() == got.size());
                for (const auto& mu : got) {
                    CHECK(mu.size() == lambda.size() + k);
                    CHECK(is_horizontal_strip(lambda, mu));
                }
            }
}

TEST_CASE("pieri_expand with k=1 adds one new distinct corner") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& lambda : partitions_of(n))
            CHECK(pieri_expand(lambda, 1).size() == distinct_parts(lambda).size() + 1);
}

TEST_CASE("standard tableaux counts") {
    CHECK(count_standard_tableaux(P({5})) == 1);
    CHECK(count_standard_tableaux(P({2, 1})) == 2);
    CHECK(count_standard_tableaux(P({2, 2})) == 2);
    for (int n = 1; n <= 8; ++n) {
        unsigned long long sum = 0;
        for (const auto& lambda : partitions_of(n)) {
            unsigned long long f = count_standard_tableaux(lambda);
            sum += f * f;
        }
        CHECK(sum == factorial(n));
    }
}

TEST_CASE("composition helpers") {
    Composition c({1, 2, 3});
    CHECK(c.total() == 6);
    CHECK(c.opposite().parts == std::vector<int>{3, 2, 1});
    CHECK(c.scaled(2).parts == std::vector<int>{2, 4, 6});
    CHECK_THROWS_AS(Composition({1, 0}), std::invalid_argument);
}
