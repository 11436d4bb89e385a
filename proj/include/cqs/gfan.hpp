#pragma once

// Groebner fan of the G-orbit ideal <f_t(x,y) - f_t(p)> in the positive quadrant.

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "invariant_ring.hpp"
#include "polyring.hpp"
#include "toric.hpp"

namespace cqs {

struct OrbitIdeal {
    SingularityInput input;
    Rational px = 1, py = 1;
    VariableTable vars{"x", "y"};
    std::vector<Polynomial> generators;
};

inline OrbitIdeal orbit_ideal(const SingularityInput& s, const Rational& px = 1, const Rational& py = 1) {
    if (sgn(px) == 0 || sgn(py) == 0) throw ValidationError("base point needs nonzero coordinates");
    OrbitIdeal I{s, px, py, VariableTable{"x", "y"}, {}};
    for (auto& g : generators(s)) {
        Rational value = 1;
        for (Int k = 0; k < g.i; ++k) value *= px;
        for (Int k = 0; k < g.j; ++k) value *= py;
        Monomial m{static_cast<std::uint32_t>(g.i), static_cast<std::uint32_t>(g.j)};
        I.generators.push_back(Polynomial::term(m, 1) - Polynomial::constant(2, value));
    }
    return I;
}

// Weighted order on (x,y) refined by degree-lex with x > y.
inline WeightedOrder xy_order(const std::vector<Rational>& w) { return WeightedOrder(w, {0, 1}); }

struct GroebnerCone {
    std::vector<Ray> normals;        // closed half-planes n . w >= 0
    Ray lower{1, 0};                 // boundary ray nearer the x-axis
    Ray upper{0, 1};
    std::vector<Rational> weight;    // representative interior weight
    std::vector<Polynomial> basis;   // reduced, monic

    std::set<Monomial> leading_monomials() const {
        std::set<Monomial> s;
        auto order = xy_order(weight);
        for (auto& g : basis) s.insert(leading_term(g, order).monomial);
        return s;
    }
};

inline bool in_open_quadrant(const std::vector<Rational>& w) {
    return w.size() == 2 && sgn(w[0]) > 0 && sgn(w[1]) > 0;
}

// nullopt: w lies on a wall (some basis element has a weight tie at its top).
inline std::optional<GroebnerCone> cone_of_weight(const OrbitIdeal& I, const std::vector<Rational>& w) {
    if (!in_open_quadrant(w)) throw ValidationError("weight must lie in the open quadrant");
    auto order = xy_order(w);
    GroebnerCone c;
    c.weight = w;
    c.basis = buchberger(I.generators, order);

    std::set<Ray> normals;
    for (auto& g : c.basis) {
        auto lead = leading_term(g, order).monomial;
        Rational top = order.weight_of(lead);
        for (auto& [m, coef] : g.terms()) {
            if (m == lead) continue;
            if (order.weight_of(m) == top) return std::nullopt;
            normals.insert({static_cast<Int>(lead[0]) - static_cast<Int>(m[0]),
                            static_cast<Int>(lead[1]) - static_cast<Int>(m[1])});
        }
    }
    c.normals.assign(normals.begin(), normals.end());

    for (auto& nv : c.normals) {
        if (nv.x < 0 && nv.y > 0) {
            Ray r = Ray{nv.y, -nv.x}.primitive();
            if (angle_less(c.lower, r)) c.lower = r;
        } else if (nv.x > 0 && nv.y < 0) {
            Ray r = Ray{-nv.y, nv.x}.primitive();
            if (angle_less(r, c.upper)) c.upper = r;
        } else if (nv.x <= 0 && nv.y <= 0) {
            throw ConsistencyError("cone inequality excludes the open quadrant");
        }
    }
    ensure(angle_less(c.lower, c.upper), "degenerate Groebner cone");
    return c;
}

struct GroebnerFan {
    Fan2D fan;                        // primitive directions, denominator 1
    std::vector<GroebnerCone> cones;  // counterclockwise, matching fan cones
};

// Angular sweep from the x-axis: each step probes k*u + (0,1) just across
// the last ray u, doubling k until the probe lands in the adjacent cone.
inline GroebnerFan groebner_fan(const SingularityInput& s, const Rational& px = 1, const Rational& py = 1) {
    auto I = orbit_ideal(s, px, py);
    GroebnerFan out;
    out.fan.denominator = 1;
    out.fan.rays.push_back({1, 0});
    Ray prev{1, 0};
    while (!(prev == Ray{0, 1})) {
        std::optional<GroebnerCone> c;
        for (Int k = 1;; k *= 2) {
            ensure(k < (Int(1) << 40), "sweep failed to step across ray");
            c = cone_of_weight(I, {Rational(k * prev.x), Rational(k * prev.y + 1)});
            if (c && c->lower == prev) break;
        }
        if (!out.cones.empty())
            ensure(c->leading_monomials() != out.cones.back().leading_monomials(),
                   "adjacent cones share an initial ideal");
        prev = c->upper;
        out.fan.rays.push_back(prev);
        out.cones.push_back(std::move(*c));
        ensure(out.cones.size() <= static_cast<std::size_t>(s.n) + 1, "sweep does not terminate");
    }
    return out;
}

inline bool fans_equal(const Fan2D& a, const Fan2D& b) {
    return a.primitive_interior() == b.primitive_interior();
}

} // namespace cqs
