#pragma once

// Toric model in the lattice N = Z^2 + Z (1/n)(1,q) on the positive quadrant.
// Points of N are stored scaled by n, i.e. as integer (a,b) with b = q a mod n.

#include <algorithm>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "cfrac.hpp"

namespace cqs {

struct Ray {
    Int x = 0;
    Int y = 0;

    auto operator<=>(const Ray&) const = default;

    Ray primitive() const {
        Int g = std::gcd(x, y);
        return g ? Ray{x / g, y / g} : *this;
    }
};

inline Int cross(const Ray& a, const Ray& b) { return a.x * b.y - a.y * b.x; }

// true if a comes before b counterclockwise in the quadrant
inline bool angle_less(const Ray& a, const Ray& b) { return cross(a, b) > 0; }

// Rays ordered counterclockwise from the (1,0) side to the (0,1) side,
// boundary rays included. Ray k is denominator^-1 * rays[k].
struct Fan2D {
    Int denominator = 1;
    std::vector<Ray> rays;

    std::size_t cone_count() const { return rays.empty() ? 0 : rays.size() - 1; }
    std::vector<Ray> interior() const {
        if (rays.size() < 2) return {};
        return {rays.begin() + 1, rays.end() - 1};
    }
    std::set<Ray> primitive_interior() const {
        std::set<Ray> s;
        for (auto& r : interior()) s.insert(r.primitive());
        return s;
    }
};

using LatticePoint = std::pair<Int, Int>;

// Irreducible elements of {(a,b) >= 0 : a + q b = 0 mod n}, by increasing b.
inline std::vector<LatticePoint> hilbert_basis_dual(const SingularityInput& s) {
    std::vector<LatticePoint> pts;
    for (Int b = 0; b <= s.n; ++b)
        for (Int a = 0; a <= s.n; ++a)
            if ((a + s.q * b) % s.n == 0 && (a || b)) pts.emplace_back(a, b);
    std::vector<LatticePoint> basis;
    for (auto& p : pts) {
        bool reducible = std::any_of(pts.begin(), pts.end(), [&](const LatticePoint& o) {
            return o != p && o.first <= p.first && o.second <= p.second;
        });
        if (!reducible) basis.push_back(p);
    }
    return basis;
}

// Rays through the boundary lattice points of conv(N cap quadrant minus 0).
inline Fan2D resolution_fan(const SingularityInput& s) {
    // lowest lattice point over each a in [0,n]
    std::vector<Ray> pts;
    for (Int a = 0; a <= s.n; ++a) {
        Int b = (s.q * a) % s.n;
        if (a == 0) b = s.n;
        pts.push_back({a, b});
    }
    // lower hull from (0,n) to (n,0); lattice points on an edge are rays too
    std::vector<Ray> hull;
    for (auto& p : pts) {
        while (hull.size() >= 2) {
            auto& o = hull[hull.size() - 2];
            auto& m = hull.back();
            Ray u{m.x - o.x, m.y - o.y}, v{p.x - o.x, p.y - o.y};
            if (cross(u, v) < 0) hull.pop_back();  // m lies above the chord
            else break;
        }
        hull.push_back(p);
    }
    Fan2D fan;
    fan.denominator = s.n;
    fan.rays.assign(hull.rbegin(), hull.rend());
    return fan;
}

// Reads the chain from the (0,1) side: b_k = (v_{k-1} + v_{k+1}) / v_k.
inline ContinuedFraction self_intersections(const Fan2D& fan) {
    if (fan.rays.size() < 3) throw ValidationError("fan has no interior rays");
    std::vector<Ray> v(fan.rays.rbegin(), fan.rays.rend());
    ContinuedFraction cf;
    for (std::size_t k = 1; k + 1 < v.size(); ++k) {
        Int sx = v[k - 1].x + v[k + 1].x, sy = v[k - 1].y + v[k + 1].y;
        if (v[k].x == 0 || v[k].y == 0) throw ConsistencyError("interior ray on an axis");
        if (sx % v[k].x || sy % v[k].y || sx / v[k].x != sy / v[k].y)
            throw ConsistencyError("non-integral ray recursion: malformed fan");
        cf.entries.push_back(sx / v[k].x);
    }
    return cf;
}

// Consecutive rays span N: |det| = n in scaled coordinates.
inline bool is_unimodular(const Fan2D& fan) {
    for (std::size_t k = 0; k + 1 < fan.rays.size(); ++k)
        if (std::abs(cross(fan.rays[k], fan.rays[k + 1])) != fan.denominator) return false;
    return true;
}

} // namespace cqs
