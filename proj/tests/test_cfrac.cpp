#include <gtest/gtest.h>

#include "cqs/cfrac.hpp"
#include "oracles.hpp"

using namespace cqs;

TEST(Cfrac, ExpandsKnownFractions) {
    EXPECT_EQ(hj_expand(11, 7).entries, (std::vector<Int>{2, 3, 2, 2}));
    EXPECT_EQ(hj_expand(11, 4).entries, (std::vector<Int>{3, 4}));
    EXPECT_EQ(hj_expand(5, 3).entries, (std::vector<Int>{2, 3}));
    EXPECT_EQ(hj_expand(7, 1).entries, (std::vector<Int>{7}));
    EXPECT_EQ(hj_expand(11, 7).str(), "[2,3,2,2]");
}

TEST(Cfrac, ChainOfTwosForSl2) {
    for (Int n = 2; n <= 30; ++n) EXPECT_EQ(hj_expand(n, n - 1).entries, std::vector<Int>(n - 1, 2)) << n;
}

TEST(Cfrac, MatchesCeilingOracleAndEvaluatesBack) {
    for (auto [n, q] : oracle::coprime_pairs(80)) {
        auto cf = hj_expand(n, q);
        ASSERT_EQ(cf.entries, oracle::hj(n, q)) << n << ',' << q;
        EXPECT_TRUE(std::all_of(cf.entries.begin(), cf.entries.end(), [](Int b) { return b >= 2; }));
        EXPECT_EQ(oracle::evaluate_minus(cf.entries), std::make_pair(n, q));
        EXPECT_EQ(hj_evaluate(cf), Rational(n, q));
    }
}

TEST(Cfrac, RejectsInvalidInput) {
    EXPECT_THROW(SingularityInput::make(6, 4), ValidationError);
    EXPECT_THROW(SingularityInput::make(5, 0), ValidationError);
    EXPECT_THROW(SingularityInput::make(5, 5), ValidationError);
    EXPECT_THROW(SingularityInput::make(1, 1), ValidationError);
    EXPECT_THROW(hj_expand(3, 0), ValidationError);
}

TEST(Cfrac, IjSeries) {
    auto ij = ij_series(SingularityInput::make(11, 7));
    EXPECT_EQ(ij.i_values, (std::vector<Int>{11, 4, 1, 0}));
    EXPECT_EQ(ij.j_values, (std::vector<Int>{0, 1, 3, 11}));
    auto t = ij_series(SingularityInput::make(5, 3));
    EXPECT_EQ(t.i_values, (std::vector<Int>{5, 2, 1, 0}));
    EXPECT_EQ(t.j_values, (std::vector<Int>{0, 1, 3, 5}));
    for (Int n = 3; n <= 20; ++n) {
        auto s = ij_series(SingularityInput::make(n, n - 1));
        EXPECT_EQ(s.i_values, (std::vector<Int>{n, 1, 0}));
        EXPECT_EQ(s.j_values, (std::vector<Int>{0, 1, n}));
    }
}

TEST(Cfrac, IjSeriesAreTheMinimalInvariants) {
    for (auto [n, q] : oracle::coprime_pairs(60)) {
        auto ij = ij_series(SingularityInput::make(n, q));
        auto want = oracle::minimal_invariants(n, q);
        ASSERT_EQ(ij.size(), want.size()) << n << ',' << q;
        for (std::size_t t = 0; t < want.size(); ++t)
            EXPECT_EQ(std::make_pair(ij.i_values[t], ij.j_values[t]), want[t]);
    }
}

TEST(Cfrac, UnrefinedSeries) {
    auto u = unrefined_series(SingularityInput::make(11, 7));
    EXPECT_EQ(u.i_values, (std::vector<Int>{11, 7, 3, 2, 1, 0}));
    EXPECT_EQ(u.j_values, (std::vector<Int>{0, 1, 2, 5, 8, 11}));
    auto v = unrefined_series(SingularityInput::make(5, 3));
    EXPECT_EQ(v.i_values, (std::vector<Int>{5, 3, 1, 0}));
    EXPECT_EQ(v.j_values, (std::vector<Int>{0, 1, 2, 5}));
    auto w = unrefined_series(SingularityInput::make(6, 5));
    EXPECT_EQ(w.i_values, (std::vector<Int>{6, 5, 4, 3, 2, 1, 0}));
}

TEST(Cfrac, Identities) {
    auto id = identities(SingularityInput::make(11, 7));
    EXPECT_EQ(id.e, 4);
    EXPECT_EQ(id.sum_b, 5);
    EXPECT_EQ(id.sum_a, 5);
    EXPECT_EQ(identities(SingularityInput::make(11, 4)).e, 6);
    EXPECT_EQ(identities(SingularityInput::make(9, 8)).e, 3);
    for (auto [n, q] : oracle::coprime_pairs(120)) {
        auto s = SingularityInput::make(n, q);
        auto i = identities(s);
        EXPECT_EQ(i.e, static_cast<Int>(oracle::minimal_invariants(n, q).size())) << n << ',' << q;
    }
}

TEST(Cfrac, DualityReversesTheFraction) {
    for (auto [n, q] : oracle::coprime_pairs(100)) {
        Int qi = inverse_mod(q, n);
        EXPECT_EQ(qi * q % n, 1 % n);
        EXPECT_EQ(hj_expand(n, qi), hj_expand(n, q).reversed()) << n << ',' << q;
    }
}

TEST(Cfrac, TSingularity) {
    auto w = is_T_singularity(SingularityInput::make(4, 1));
    ASSERT_TRUE(w);
    EXPECT_EQ(*w, (TWitness{1, 2, 1}));
    EXPECT_FALSE(is_T_singularity(SingularityInput::make(11, 7)));
    for (Int n = 2; n <= 30; ++n) EXPECT_TRUE(is_T_singularity(SingularityInput::make(n, n - 1)));

    // brute force over every (d, m, a) with d m^2 = n
    for (auto [n, q] : oracle::coprime_pairs(60)) {
        bool want = false;
        for (Int m = 1; m * m <= n; ++m)
            for (Int a = 1; a <= m; ++a)
                if (n % (m * m) == 0 && std::gcd(a, m) == 1 && (n / (m * m)) * m * a - 1 == q) want = true;
        EXPECT_EQ(is_T_singularity(SingularityInput::make(n, q)).has_value(), want) << n << ',' << q;
    }
}

TEST(Cfrac, Isomorphism) {
    auto s = SingularityInput::make(11, 7);
    EXPECT_TRUE(are_isomorphic(s, SingularityInput::make(11, 8)));
    EXPECT_FALSE(are_isomorphic(s, SingularityInput::make(11, 4)));
    EXPECT_TRUE(are_isomorphic(s, s));
    EXPECT_FALSE(are_isomorphic(s, SingularityInput::make(13, 7)));
}
