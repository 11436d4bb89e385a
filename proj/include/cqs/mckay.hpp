#pragma once

// McKay combinatorics for G = 1/n(1,q): weights, the McKay quiver, B(G) and
// L(G), special representations and the torus-fixed G-clusters.

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "cfrac.hpp"
#include "quiver.hpp"

namespace cqs {

// Weight of x^a y^b: the character by which the generator scales it.
inline Int weight(const SingularityInput& s, Int a, Int b) { return (a + s.q * b) % s.n; }

inline Quiver mckay_quiver(const SingularityInput& s) {
    Quiver q;
    for (Int k = 0; k < s.n; ++k) q.vertices.push_back("rho_" + std::to_string(k));
    for (Int k = 0; k < s.n; ++k) {
        auto v = static_cast<std::size_t>(k);
        q.add_arrow(v, static_cast<std::size_t>((k + 1) % s.n), "x");
        q.add_arrow(v, static_cast<std::size_t>((k + s.q) % s.n), "y");
    }
    return q;
}

using MonomialSet = std::set<std::pair<Int, Int>>;

inline bool is_invariant(const SingularityInput& s, Int a, Int b) { return weight(s, a, b) == 0; }

// Monomials divisible by no invariant monomial other than 1.
inline MonomialSet g_basis(const SingularityInput& s) {
    // killed[a][b]: some invariant (c,d) != 0 with c<=a, d<=b
    std::vector<std::vector<char>> killed(s.n, std::vector<char>(s.n, 0));
    MonomialSet out;
    for (Int a = 0; a < s.n; ++a)
        for (Int b = 0; b < s.n; ++b) {
            bool k = (a || b) && is_invariant(s, a, b);
            if (a > 0 && killed[a - 1][b]) k = true;
            if (b > 0 && killed[a][b - 1]) k = true;
            killed[a][b] = k;
            if (!k) out.emplace(a, b);
        }
    return out;
}

// Monomials not divisible by x^n, y^n or xy.
inline MonomialSet l_set(const SingularityInput& s) {
    MonomialSet out;
    for (Int k = 0; k < s.n; ++k) {
        out.emplace(k, 0);
        out.emplace(0, k);
    }
    return out;
}

// k != 0 such that every weight-k monomial of B(G) lies in L(G).
inline std::vector<Int> special_reps(const SingularityInput& s) {
    std::vector<char> bad(s.n, 0);
    auto l = l_set(s);
    for (auto& [a, b] : g_basis(s))
        if (!l.count({a, b})) bad[weight(s, a, b)] = 1;
    std::vector<Int> out;
    for (Int k = 1; k < s.n; ++k)
        if (!bad[k]) out.push_back(k);
    return out;
}

struct GCluster {
    std::vector<Int> heights;                       // column heights over x^0, x^1, ...
    std::vector<std::pair<Int, Int>> generators;    // minimal generators, descending x-power

    Int x_exponent() const { return static_cast<Int>(heights.size()); }
    Int y_exponent() const { return heights.front(); }
    bool operator==(const GCluster&) const = default;
};

inline std::vector<std::pair<Int, Int>> ideal_generators(const std::vector<Int>& heights) {
    std::vector<std::pair<Int, Int>> gens;
    Int w = static_cast<Int>(heights.size());
    for (Int a = w; a >= 0; --a) {
        Int h = a == w ? 0 : heights[a];
        if (a == 0 || h < heights[a - 1]) gens.emplace_back(a, h);
    }
    return gens;
}

inline std::string format_monomial_xy(Int a, Int b) {
    std::string s;
    if (a) s += a == 1 ? "x" : "x^" + std::to_string(a);
    if (b) s += (s.empty() ? "" : "*") + (b == 1 ? std::string("y") : "y^" + std::to_string(b));
    return s.empty() ? "1" : s;
}

inline std::string format_ideal(const GCluster& c) {
    std::string s = "<";
    for (std::size_t i = 0; i < c.generators.size(); ++i)
        s += (i ? ", " : "") + format_monomial_xy(c.generators[i].first, c.generators[i].second);
    return s + ">";
}

// Young diagrams with n boxes whose weights hit every residue once,
// ordered by the pure x-power generator.
inline std::vector<GCluster> g_clusters(const SingularityInput& s) {
    std::vector<GCluster> out;
    std::vector<char> used(s.n, 0);
    std::vector<Int> heights;

    auto dfs = [&](auto&& self, Int col, Int max_h, Int remaining) -> void {
        if (remaining == 0) {
            out.push_back({heights, ideal_generators(heights)});
            return;
        }
        Int limit = std::min(max_h, remaining);
        Int h = 0;
        while (h < limit) {
            Int w = weight(s, col, h);
            if (used[w]) break;
            used[w] = 1;
            ++h;
            heights.push_back(h);
            self(self, col + 1, h, remaining - h);
            heights.pop_back();
        }
        for (Int b = 0; b < h; ++b) used[weight(s, col, b)] = 0;
    };
    dfs(dfs, 0, s.n, s.n);

    std::sort(out.begin(), out.end(),
              [](const GCluster& a, const GCluster& b) { return a.x_exponent() < b.x_exponent(); });
    for (auto& c : out) {
        std::vector<char> seen(s.n, 0);
        Int boxes = 0;
        for (Int a = 0; a < c.x_exponent(); ++a)
            for (Int b = 0; b < c.heights[a]; ++b, ++boxes) {
                ensure(!seen[weight(s, a, b)], "cluster weights repeat");
                seen[weight(s, a, b)] = 1;
            }
        ensure(boxes == s.n, "cluster has wrong colength");
    }
    return out;
}

struct CurveRep {
    int curve = 0;             // 1..r
    Int weight = 0;
    Int x_corner = 0;          // x^x_corner generates I_k
    Int y_corner = 0;          // y^y_corner generates I_{k+1}
};

// Curve k joins I_k and I_{k+1}; its coordinate is the ratio of the two
// pure powers, which must carry the same weight.
inline std::vector<CurveRep> curve_rep_assignment(const SingularityInput& s) {
    auto cl = g_clusters(s);
    std::vector<CurveRep> out;
    for (std::size_t k = 0; k + 1 < cl.size(); ++k) {
        Int xa = cl[k].x_exponent(), yb = cl[k + 1].y_exponent();
        Int wx = weight(s, xa, 0), wy = weight(s, 0, yb);
        ensure(wx == wy, "corner monomials of curve " + std::to_string(k + 1) + " have different weights");
        out.push_back({static_cast<int>(k + 1), wx, xa, yb});
    }
    std::vector<Int> ws;
    for (auto& c : out) ws.push_back(c.weight);
    std::sort(ws.begin(), ws.end());
    ensure(ws == special_reps(s), "curve weights differ from the special representations");
    return out;
}

} // namespace cqs
