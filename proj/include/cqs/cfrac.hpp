#pragma once

// Hirzebruch-Jung (all-minus) continued fractions and the numerical data
// of the cyclic quotient singularity 1/n(1,q).

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "polyring.hpp"

namespace cqs {

using Int = std::int64_t;

struct SingularityInput {
    Int n = 0;
    Int q = 0;

    static SingularityInput make(Int n, Int q) {
        if (n < 2 || q < 1 || q >= n)
            throw ValidationError("need 0 < q < n, got n=" + std::to_string(n) + " q=" + std::to_string(q));
        if (std::gcd(n, q) != 1)
            throw ValidationError("n and q must be coprime, got n=" + std::to_string(n) + " q=" + std::to_string(q));
        return {n, q};
    }

    auto operator<=>(const SingularityInput&) const = default;
};

struct ContinuedFraction {
    std::vector<Int> entries;

    std::size_t size() const { return entries.size(); }
    Int operator[](std::size_t i) const { return entries[i]; }
    ContinuedFraction reversed() const { return {{entries.rbegin(), entries.rend()}}; }
    bool operator==(const ContinuedFraction&) const = default;

    std::string str() const {
        std::string s = "[";
        for (std::size_t i = 0; i < entries.size(); ++i) s += (i ? "," : "") + std::to_string(entries[i]);
        return s + "]";
    }
};

inline ContinuedFraction hj_expand(Int p, Int q) {
    if (q < 1 || p <= q || std::gcd(p, q) != 1)
        throw ValidationError("hj_expand needs p > q >= 1 coprime, got " + std::to_string(p) + "/" +
                              std::to_string(q));
    ContinuedFraction cf;
    while (q != 0) {
        Int b = (p + q - 1) / q;
        cf.entries.push_back(b);
        Int next = b * q - p;
        p = q;
        q = next;
    }
    return cf;
}

// b_1 - 1/(b_2 - 1/(... - 1/b_r))
inline Rational hj_evaluate(const ContinuedFraction& cf) {
    if (cf.entries.empty()) throw ValidationError("empty continued fraction");
    Rational v = cf.entries.back();
    for (auto it = cf.entries.rbegin() + 1; it != cf.entries.rend(); ++it) v = Rational(*it) - 1 / v;
    return v;
}

inline ContinuedFraction fraction(const SingularityInput& s) { return hj_expand(s.n, s.q); }

// n/(n-q) = [a_2, ..., a_{e-1}]
inline ContinuedFraction dual_fraction(const SingularityInput& s) { return hj_expand(s.n, s.n - s.q); }

inline Int inverse_mod(Int q, Int n) {
    Int t = 0, nt = 1, r = n, nr = q % n;
    while (nr != 0) {
        Int k = r / nr;
        t = std::exchange(nt, t - k * nt);
        r = std::exchange(nr, r - k * nr);
    }
    if (r != 1) throw ValidationError("not invertible mod n");
    return t < 0 ? t + n : t;
}

struct IJSeries {
    std::vector<Int> i_values;
    std::vector<Int> j_values;

    std::size_t size() const { return i_values.size(); }
};

// Exponents of the minimal invariant monomials x^i y^j, from (n,0) to (0,n).
inline IJSeries ij_series(const SingularityInput& s) {
    auto a = dual_fraction(s);
    IJSeries r;
    r.i_values = {s.n, s.n - s.q};
    r.j_values = {0, 1};
    for (std::size_t k = 0; k < a.size(); ++k) {
        auto t = r.i_values.size();
        r.i_values.push_back(a[k] * r.i_values[t - 1] - r.i_values[t - 2]);
        r.j_values.push_back(a[k] * r.j_values[t - 1] - r.j_values[t - 2]);
    }
    ensure(r.i_values.back() == 0 && r.j_values.back() == s.n, "i/j-series does not end at (0,n)");
    return r;
}

// The same recursion driven by n/q itself; not minimal in general.
inline IJSeries unrefined_series(const SingularityInput& s) {
    auto b = fraction(s);
    IJSeries r;
    r.i_values = {s.n, s.q};
    r.j_values = {0, 1};
    for (std::size_t k = 0; k < b.size(); ++k) {
        auto t = r.i_values.size();
        r.i_values.push_back(b[k] * r.i_values[t - 1] - r.i_values[t - 2]);
        r.j_values.push_back(b[k] * r.j_values[t - 1] - r.j_values[t - 2]);
    }
    ensure(r.i_values.back() == 0 && r.j_values.back() == s.n, "unrefined series does not end at (0,n)");
    return r;
}

struct Identities {
    Int e = 0;      // embedding dimension
    Int sum_b = 0;  // sum (b_j - 1)
    Int sum_a = 0;  // sum (a_i - 1)
};

inline Identities identities(const SingularityInput& s) {
    auto b = fraction(s), a = dual_fraction(s);
    Identities id;
    Int excess = 0;
    for (auto x : b.entries) {
        id.sum_b += x - 1;
        excess += x - 2;
    }
    for (auto x : a.entries) id.sum_a += x - 1;
    id.e = 3 + excess;
    ensure(id.sum_a == id.sum_b, "sum(b-1) != sum(a-1) for " + std::to_string(s.n) + "," + std::to_string(s.q));
    ensure(id.e == static_cast<Int>(a.size()) + 2, "e != len(a)+2 for " + std::to_string(s.n) + "," +
                                                      std::to_string(s.q));
    return id;
}

struct TWitness {
    Int d, m, a;
    bool operator==(const TWitness&) const = default;
};

// n = d m^2, q = d m a - 1, gcd(a,m) = 1. Smallest m first.
inline std::optional<TWitness> is_T_singularity(const SingularityInput& s) {
    for (Int m = 1; m * m <= s.n; ++m) {
        if (s.n % (m * m)) continue;
        Int d = s.n / (m * m);
        // q + 1 = d m a with 1 <= q < n forces 1 <= a <= m
        if ((s.q + 1) % (d * m)) continue;
        Int a = (s.q + 1) / (d * m);
        if (a >= 1 && a <= m && std::gcd(a, m) == 1) return TWitness{d, m, a};
    }
    return std::nullopt;
}

inline bool are_isomorphic(const SingularityInput& a, const SingularityInput& b) {
    if (a.n != b.n) return false;
    return a.q == b.q || (a.q * b.q) % a.n == 1;
}

} // namespace cqs
