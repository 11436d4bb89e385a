#pragma once

// Invariant ring C[x,y]^G: minimal monomial generators z_1..z_e, the binomial
// relations z_i z_j = p_ij, and closed walks in the McKay quiver.

#include <string>
#include <vector>

#include "cfrac.hpp"
#include "polyring.hpp"

namespace cqs {

struct InvariantGenerator {
    int index = 0;  // 1..e
    Int i = 0;      // power of x
    Int j = 0;      // power of y

    std::string symbol() const { return "z_" + std::to_string(index); }
    bool operator==(const InvariantGenerator&) const = default;
};

inline std::vector<InvariantGenerator> generators(const SingularityInput& s) {
    auto ij = ij_series(s);
    std::vector<InvariantGenerator> g;
    for (std::size_t t = 0; t < ij.size(); ++t)
        g.push_back({static_cast<int>(t + 1), ij.i_values[t], ij.j_values[t]});
    for (auto& x : g) ensure((x.i + s.q * x.j) % s.n == 0, "generator is not invariant");
    return g;
}

inline VariableTable z_variables(std::size_t e) {
    std::vector<std::string> names;
    for (std::size_t t = 1; t <= e; ++t) names.push_back("z_" + std::to_string(t));
    return VariableTable(std::move(names));
}

// z_left * z_right = prod z_t^{rhs[t-1]}
struct BinomialRelation {
    int left = 0;
    int right = 0;
    std::vector<std::uint32_t> rhs;

    bool operator==(const BinomialRelation&) const = default;
};

// Exponent vector of p_ij over z_1..z_e; a holds the dual fraction [a_2..a_{e-1}].
inline std::vector<std::uint32_t> p_exponents(const ContinuedFraction& a, int i, int j) {
    std::size_t e = a.size() + 2;
    auto av = [&](int m) { return static_cast<std::uint32_t>(a[static_cast<std::size_t>(m - 2)]); };
    std::vector<std::uint32_t> x(e, 0);
    if (j == i + 2) {
        x[i] = av(i + 1);
        return x;
    }
    x[i] = av(i + 1) - 1;
    for (int m = i + 2; m <= j - 2; ++m) x[m - 1] = av(m) - 2;
    x[j - 2] = av(j - 1) - 1;
    return x;
}

// Pairs (i,j), j >= i+2, ordered by gap then i.
inline std::vector<std::pair<int, int>> relation_pairs(int e) {
    std::vector<std::pair<int, int>> out;
    for (int gap = 2; gap < e; ++gap)
        for (int i = 1; i + gap <= e; ++i) out.emplace_back(i, i + gap);
    return out;
}

inline std::vector<BinomialRelation> defining_equations(const SingularityInput& s) {
    auto a = dual_fraction(s);
    int e = static_cast<int>(a.size()) + 2;
    std::vector<BinomialRelation> rel;
    for (auto [i, j] : relation_pairs(e)) rel.push_back({i, j, p_exponents(a, i, j)});
    return rel;
}

inline Polynomial as_polynomial(const BinomialRelation& r, std::size_t e) {
    Monomial lhs(e), rhs(r.rhs);
    lhs[r.left - 1] += 1;
    lhs[r.right - 1] += 1;
    return Polynomial::term(lhs, 1) - Polynomial::term(rhs, 1);
}

inline bool verify_presentation(const SingularityInput& s) {
    auto gens = generators(s);
    auto image = [&](const std::vector<std::uint32_t>& ex) {
        Int x = 0, y = 0;
        for (std::size_t t = 0; t < ex.size(); ++t) {
            x += ex[t] * gens[t].i;
            y += ex[t] * gens[t].j;
        }
        return std::make_pair(x, y);
    };
    for (auto& r : defining_equations(s)) {
        std::vector<std::uint32_t> lhs(gens.size(), 0);
        lhs[r.left - 1] += 1;
        lhs[r.right - 1] += 1;
        if (image(lhs) != image(r.rhs)) return false;
    }
    return true;
}

struct McKayCycle {
    int generator = 0;
    std::vector<Int> vertices;  // starts and ends at 0
    std::string steps;          // 'x' adds 1, 'y' adds q
};

// Lexicographically smallest vertex sequence realising x^i y^j as a closed walk.
inline std::vector<McKayCycle> mckay_cycles(const SingularityInput& s) {
    std::vector<McKayCycle> out;
    for (auto& g : generators(s)) {
        McKayCycle c{g.index, {0}, {}};
        Int xs = g.i, ys = g.j, v = 0;
        while (xs + ys > 0) {
            Int vx = (v + 1) % s.n, vy = (v + s.q) % s.n;
            bool take_x = xs > 0 && (ys == 0 || vx <= vy);
            if (take_x) {
                v = vx;
                --xs;
                c.steps += 'x';
            } else {
                v = vy;
                --ys;
                c.steps += 'y';
            }
            c.vertices.push_back(v);
        }
        ensure(v == 0, "cycle does not close");
        out.push_back(std::move(c));
    }
    return out;
}

} // namespace cqs
