#include <gtest/gtest.h>

#include "cqs/invariant_ring.hpp"
#include "oracles.hpp"
#include "printers.hpp"

using namespace cqs;

namespace {

std::vector<std::pair<Int, Int>> exponents(const std::vector<InvariantGenerator>& g) {
    std::vector<std::pair<Int, Int>> out;
    for (auto& x : g) out.emplace_back(x.i, x.j);
    return out;
}

// (x, y) exponents of prod z_t^{e_t}
std::pair<Int, Int> image(const std::vector<oracle::Pt>& gens, const std::vector<std::uint32_t>& e) {
    Int x = 0, y = 0;
    for (std::size_t t = 0; t < e.size(); ++t) {
        x += e[t] * gens[t].first;
        y += e[t] * gens[t].second;
    }
    return {x, y};
}

} // namespace

TEST(InvariantRing, Generators) {
    using V = std::vector<std::pair<Int, Int>>;
    EXPECT_EQ(exponents(generators(SingularityInput::make(11, 7))), (V{{11, 0}, {4, 1}, {1, 3}, {0, 11}}));
    EXPECT_EQ(exponents(generators(SingularityInput::make(5, 1))),
              (V{{5, 0}, {4, 1}, {3, 2}, {2, 3}, {1, 4}, {0, 5}}));
    for (Int n = 2; n <= 20; ++n)
        EXPECT_EQ(exponents(generators(SingularityInput::make(n, n - 1))), (V{{n, 0}, {1, 1}, {0, n}}));
    EXPECT_EQ(generators(SingularityInput::make(11, 7))[1].symbol(), "z_2");
}

TEST(InvariantRing, GeneratorsMatchBruteForce) {
    for (auto [n, q] : oracle::coprime_pairs(60))
        EXPECT_EQ(exponents(generators(SingularityInput::make(n, q))), oracle::minimal_invariants(n, q))
            << n << ',' << q;
}

TEST(InvariantRing, DefiningEquations) {
    auto eq = defining_equations(SingularityInput::make(11, 7));
    ASSERT_EQ(eq.size(), 3u);
    // z1 z3 = z2^3, z2 z4 = z3^4, z1 z4 = z2^2 z3^3
    EXPECT_EQ(eq[0], (BinomialRelation{1, 3, {0, 3, 0, 0}}));
    EXPECT_EQ(eq[1], (BinomialRelation{2, 4, {0, 0, 4, 0}}));
    EXPECT_EQ(eq[2], (BinomialRelation{1, 4, {0, 2, 3, 0}}));

    auto a = defining_equations(SingularityInput::make(9, 8));
    ASSERT_EQ(a.size(), 1u);
    EXPECT_EQ(a[0], (BinomialRelation{1, 3, {0, 9, 0}}));

    auto f = defining_equations(SingularityInput::make(5, 3));
    ASSERT_EQ(f.size(), 3u);
    EXPECT_EQ(f[0], (BinomialRelation{1, 3, {0, 3, 0, 0}}));
    EXPECT_EQ(f[1], (BinomialRelation{2, 4, {0, 0, 2, 0}}));
    EXPECT_EQ(f[2], (BinomialRelation{1, 4, {0, 2, 1, 0}}));
}

TEST(InvariantRing, EquationsHoldUnderSubstitution) {
    for (auto [n, q] : oracle::coprime_pairs(120)) {
        auto s = SingularityInput::make(n, q);
        auto gens = oracle::minimal_invariants(n, q);
        auto e = gens.size();
        auto eq = defining_equations(s);
        ASSERT_EQ(eq.size(), (e - 1) * (e - 2) / 2) << n << ',' << q;
        for (auto& r : eq) {
            std::vector<std::uint32_t> lhs(e, 0);
            lhs[r.left - 1] += 1;
            lhs[r.right - 1] += 1;
            EXPECT_EQ(image(gens, lhs), image(gens, r.rhs)) << n << ',' << q;
        }
        EXPECT_TRUE(verify_presentation(s));
    }
}

TEST(InvariantRing, PolynomialForm) {
    auto vars = z_variables(4);
    auto eq = defining_equations(SingularityInput::make(11, 7));
    EXPECT_EQ(as_polynomial(eq[0], 4), parse_polynomial("z_1 z_3 - z_2^3", vars));
}

TEST(InvariantRing, McKayCyclesAreClosedWalks) {
    for (auto [n, q] : oracle::coprime_pairs(30)) {
        auto s = SingularityInput::make(n, q);
        auto gens = generators(s);
        auto cycles = mckay_cycles(s);
        ASSERT_EQ(cycles.size(), gens.size());
        for (std::size_t k = 0; k < cycles.size(); ++k) {
            auto& c = cycles[k];
            Int v = 0, xs = 0, ys = 0;
            for (std::size_t t = 0; t < c.steps.size(); ++t) {
                if (c.steps[t] == 'x') {
                    v = (v + 1) % n;
                    ++xs;
                } else {
                    v = (v + q) % n;
                    ++ys;
                }
                EXPECT_EQ(c.vertices[t + 1], v);
            }
            EXPECT_EQ(v, 0);
            EXPECT_EQ(xs, gens[k].i);
            EXPECT_EQ(ys, gens[k].j);
        }
    }
    auto c = mckay_cycles(SingularityInput::make(11, 7));
    EXPECT_EQ(c[0].vertices, (std::vector<Int>{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 0}));
    auto d = mckay_cycles(SingularityInput::make(5, 4));
    EXPECT_EQ(d[1].vertices.size(), 3u);
}
