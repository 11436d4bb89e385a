#include <gtest/gtest.h>

#include "cqs/gfan.hpp"
#include "oracles.hpp"
#include "printers.hpp"

using namespace cqs;

namespace {

const VariableTable xy{"x", "y"};

std::set<std::string> normalized(const std::vector<std::string>& gens, const WeightedOrder& o) {
    std::set<std::string> out;
    for (auto& g : gens) out.insert(format(monic(parse_polynomial(g, xy), o), xy));
    return out;
}

std::set<std::string> texts(const std::vector<Polynomial>& basis) {
    std::set<std::string> out;
    for (auto& g : basis) out.insert(format(g, xy));
    return out;
}

std::vector<Rational> W(Int a, Int b) { return {Rational(a), Rational(b)}; }

} // namespace

TEST(Gfan, OrbitIdeal) {
    auto I = orbit_ideal(SingularityInput::make(11, 7));
    std::vector<Polynomial> want;
    for (auto s : {"x^11-1", "x^4 y-1", "x y^3-1", "y^11-1"}) want.push_back(parse_polynomial(s, xy));
    EXPECT_EQ(I.generators, want);
    EXPECT_EQ(orbit_ideal(SingularityInput::make(2, 1)).generators.size(), 3u);
    EXPECT_THROW(orbit_ideal(SingularityInput::make(2, 1), 0, 1), ValidationError);
}

TEST(Gfan, ReducedBasesAtTheFiveWeights) {
    auto I = orbit_ideal(SingularityInput::make(11, 7));
    std::vector<std::pair<std::vector<Rational>, std::vector<std::string>>> cases{
        {W(1, 11), {"-x^7 + y", "x^11 - 1"}},
        {W(2, 7), {"-x^3 + y^2", "x^7 - y", "x^4 y - 1"}},
        {W(3, 3), {"x^3 - y^2", "x y^3 - 1", "-x^2 + y^5"}},
        {W(6, 2), {"x y^3 - 1", "x^2 - y^5", "-x + y^8"}},
        {W(9, 1), {"x - y^8", "y^11 - 1"}},
    };
    for (auto& [w, gens] : cases) {
        auto o = xy_order(w);
        auto c = cone_of_weight(I, w);
        ASSERT_TRUE(c);
        EXPECT_EQ(texts(c->basis), normalized(gens, o));
    }
}

TEST(Gfan, ConeInequalities) {
    auto I = orbit_ideal(SingularityInput::make(11, 7));
    auto c1 = cone_of_weight(I, W(1, 11));
    EXPECT_EQ(c1->lower, (Ray{1, 7}));
    EXPECT_EQ(c1->upper, (Ray{0, 1}));
    auto c3 = cone_of_weight(I, W(3, 3));
    EXPECT_EQ(c3->lower, (Ray{5, 2}));
    EXPECT_EQ(c3->upper, (Ray{2, 3}));
    EXPECT_FALSE(cone_of_weight(I, W(1, 7)));  // on a wall
    EXPECT_THROW(cone_of_weight(I, W(0, 1)), ValidationError);

    auto a1 = orbit_ideal(SingularityInput::make(2, 1));
    auto c = cone_of_weight(a1, W(1, 2));
    EXPECT_EQ(c->lower, (Ray{1, 1}));
    EXPECT_EQ(c->upper, (Ray{0, 1}));
}

TEST(Gfan, FanOfKnownCases) {
    auto gf = groebner_fan(SingularityInput::make(11, 7));
    EXPECT_EQ(gf.fan.primitive_interior(), (std::set<Ray>{{1, 7}, {2, 3}, {5, 2}, {8, 1}}));
    EXPECT_EQ(gf.cones.size(), 5u);
    auto a1 = groebner_fan(SingularityInput::make(2, 1));
    EXPECT_EQ(a1.fan.interior(), (std::vector<Ray>{{1, 1}}));
    EXPECT_EQ(a1.cones.size(), 2u);
    for (Int n = 2; n <= 12; ++n) EXPECT_EQ(groebner_fan(SingularityInput::make(n, 1)).cones.size(), 2u);
    EXPECT_TRUE(fans_equal(groebner_fan(SingularityInput::make(7, 5)).fan,
                           resolution_fan(SingularityInput::make(7, 5))));
}

// Every sampled weight inside a cone gives that cone's basis; samples on
// opposite sides of a ray differ.
TEST(Gfan, ConesAreConstantOnSampledWeights) {
    for (auto [n, q] : oracle::coprime_pairs(13)) {
        auto s = SingularityInput::make(n, q);
        auto gf = groebner_fan(s);
        auto I = orbit_ideal(s);
        for (auto& c : gf.cones) {
            for (Int t = 1; t <= 3; ++t) {
                // t parts lower + (4 - t) parts upper, strictly inside
                std::vector<Rational> w{Rational(t * c.lower.x + (4 - t) * c.upper.x),
                                        Rational(t * c.lower.y + (4 - t) * c.upper.y)};
                if (sgn(w[0]) == 0 || sgn(w[1]) == 0) continue;
                auto d = cone_of_weight(I, w);
                ASSERT_TRUE(d) << n << ',' << q;
                EXPECT_EQ(texts(d->basis), texts(c.basis)) << n << ',' << q;
            }
        }
    }
}

TEST(Gfan, IndependentOfBasePoint) {
    for (auto [n, q] : oracle::coprime_pairs(12)) {
        auto s = SingularityInput::make(n, q);
        auto a = groebner_fan(s, 1, 1), b = groebner_fan(s, 2, Rational(-3, 5));
        EXPECT_TRUE(fans_equal(a.fan, b.fan)) << n << ',' << q;
    }
}

TEST(Gfan, EqualsToricFan) {
    for (auto [n, q] : oracle::coprime_pairs(25)) {
        auto s = SingularityInput::make(n, q);
        EXPECT_TRUE(fans_equal(groebner_fan(s).fan, resolution_fan(s))) << n << ',' << q;
    }
}
