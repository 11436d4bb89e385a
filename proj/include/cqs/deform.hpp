#pragma once

// Deformations: dim T^1, the A_{m-1} hypersurface family and discriminant,
// and Arndt's explicit equations for the versal deformation when e >= 4.

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "cfrac.hpp"
#include "invariant_ring.hpp"
#include "polyring.hpp"

namespace cqs {

// dim_Q Q[x]/(f, df/dx_1, ..., df/dx_k); requires an isolated singularity.
inline Int tjurina_number(const Polynomial& f) {
    std::vector<Polynomial> gens{f};
    for (std::size_t v = 0; v < f.nvars(); ++v) gens.push_back(derivative(f, v));
    auto order = WeightedOrder::deglex(f.nvars());
    auto gb = buchberger(gens, order);
    if (gb.empty()) throw UnsupportedError("Tjurina ideal is zero");
    std::vector<Monomial> lms;
    for (auto& g : gb) lms.push_back(leading_term(g, order).monomial);
    // Zero-dimensional iff every variable has a pure power among the leading monomials.
    std::vector<std::uint32_t> bound(f.nvars(), 0);
    for (std::size_t v = 0; v < f.nvars(); ++v) {
        for (auto& m : lms) {
            bool pure = m.degree() == m[v];
            if (pure && m[v] > 0 && (bound[v] == 0 || m[v] < bound[v])) bound[v] = m[v];
        }
        if (bound[v] == 0) throw UnsupportedError("singularity is not isolated");
    }
    Int count = 0;
    Monomial m(f.nvars());
    for (;;) {
        bool standard = std::none_of(lms.begin(), lms.end(), [&](const Monomial& l) { return l.divides(m); });
        if (standard) ++count;
        std::size_t v = 0;
        while (v < m.size() && ++m[v] == bound[v]) m[v++] = 0;
        if (v == m.size()) break;
    }
    return count;
}

inline Int dim_t1(const SingularityInput& s) {
    auto a = dual_fraction(s);
    Int e = static_cast<Int>(a.size()) + 2;
    if (e >= 4) {
        Int sum = 0;
        for (auto x : a.entries) sum += x - 1;
        return sum + (e - 4);
    }
    // q = n-1: the hypersurface uv = w^n
    VariableTable uvw{"u", "v", "w"};
    return tjurina_number(parse_polynomial("u*v - w^" + std::to_string(s.n), uvw));
}

struct HypersurfaceFamily {
    VariableTable vars;
    Polynomial equation;
    std::vector<std::string> parameters;
};

// x^2 + y^2 + z^m + c_{m-2} z^{m-2} + ... + c_0
inline HypersurfaceFamily an_versal_family(Int m) {
    if (m < 2) throw ValidationError("an_versal_family needs m >= 2");
    std::vector<std::string> names{"x", "y", "z"}, params;
    for (Int k = 0; k <= m - 2; ++k) params.push_back("c_" + std::to_string(k));
    names.insert(names.end(), params.begin(), params.end());
    HypersurfaceFamily fam{VariableTable(names), Polynomial(), params};
    auto nv = fam.vars.size();
    auto z = static_cast<std::uint32_t>(m);
    Polynomial f = Polynomial::variable(nv, 0, 2) + Polynomial::variable(nv, 1, 2) + Polynomial::variable(nv, 2, z);
    for (Int k = 0; k <= m - 2; ++k)
        f += Polynomial::variable(nv, 3 + static_cast<std::size_t>(k)) *
             Polynomial::variable(nv, 2, static_cast<std::uint32_t>(k));
    fam.equation = f;
    return fam;
}

inline Rational discriminant(const std::vector<Rational>& h) {
    Rational sum = 0;
    for (auto& x : h) sum += x;
    if (sgn(sum) != 0) throw ValidationError("discriminant needs roots summing to zero");
    Rational d = 1;
    for (std::size_t i = 0; i < h.size(); ++i)
        for (std::size_t j = i + 1; j < h.size(); ++j) d *= (h[i] - h[j]) * (h[i] - h[j]);
    return d;
}

// Ring B = Q[z_1..z_e, s_i^(k), t_j]: a holds [a_2..a_{e-1}].
class DeformationVariables {
public:
    explicit DeformationVariables(ContinuedFraction dual) : a_(std::move(dual)) {
        e_ = static_cast<int>(a_.size()) + 2;
        std::vector<std::string> names;
        for (int i = 1; i <= e_; ++i) names.push_back("z_" + std::to_string(i));
        for (int i = 2; i <= e_ - 1; ++i)
            for (int k = 1; k <= a(i) - 1; ++k) {
                s_index_[{i, k}] = names.size();
                names.push_back("s_" + std::to_string(i) + "^(" + std::to_string(k) + ")");
            }
        for (int i = 3; i <= e_ - 2; ++i) {
            t_index_[i] = names.size();
            names.push_back("t_" + std::to_string(i));
        }
        table_ = VariableTable(names);
    }

    int e() const { return e_; }
    int a(int i) const { return static_cast<int>(a_[static_cast<std::size_t>(i - 2)]); }
    const ContinuedFraction& fraction() const { return a_; }
    const VariableTable& table() const { return table_; }
    std::size_t size() const { return table_.size(); }
    std::size_t parameter_count() const { return s_index_.size() + t_index_.size(); }
    bool has_t(int i) const { return t_index_.count(i) > 0; }

    std::size_t z_index(int i) const { return static_cast<std::size_t>(i - 1); }
    std::vector<std::size_t> z_indices() const {
        std::vector<std::size_t> v;
        for (int i = 1; i <= e_; ++i) v.push_back(z_index(i));
        return v;
    }
    std::vector<std::size_t> parameter_indices() const {
        std::vector<std::size_t> v;
        for (auto i = static_cast<std::size_t>(e_); i < size(); ++i) v.push_back(i);
        return v;
    }

    Polynomial z(int i) const { return Polynomial::variable(size(), z_index(i)); }
    Polynomial t(int i) const { return Polynomial::variable(size(), t_index_.at(i)); }
    // s_i^(0) = 1
    Polynomial s(int i, int k) const {
        if (k == 0) return Polynomial::constant(size(), 1);
        return Polynomial::variable(size(), s_index_.at({i, k}));
    }
    Polynomial w(int j) const { return has_t(j) ? z(j) + t(j) : z(j); }

    // z^{a-1} + z^{a-2} s^(1) + ... + s^(a-1)
    Polynomial tail(int m) const { return tail_of_length(m, a(m)); }
    // polynomial part of tail(m) / z_m
    Polynomial short_tail(int m) const { return tail_of_length(m, a(m) - 1); }
    Polynomial Z(int m) const { return w(m) * tail(m); }

private:
    Polynomial tail_of_length(int m, int len) const {
        Polynomial p(size());
        for (int k = 0; k < len; ++k) p += z(m).pow(static_cast<unsigned>(len - 1 - k)) * s(m, k);
        return p;
    }

    ContinuedFraction a_;
    int e_ = 0;
    VariableTable table_;
    std::map<std::pair<int, int>, std::size_t> s_index_;
    std::map<int, std::size_t> t_index_;
};

struct TotalSpaceRelation {
    int i = 0, j = 0;
    Polynomial lhs;  // z_i w_j
    Polynomial rhs;  // P_ij
    Polynomial relation() const { return lhs - rhs; }
};

struct VersalPresentation {
    bool hypersurface = false;  // e = 3: z_1 z_3 = z_2^n + lower terms
    VariableTable vars;
    std::vector<std::string> parameters;
    std::vector<TotalSpaceRelation> relations;
    std::vector<Polynomial> base_ideal;

    std::vector<Polynomial> total_ideal() const {
        std::vector<Polynomial> out;
        for (auto& r : relations) out.push_back(r.relation());
        out.insert(out.end(), base_ideal.begin(), base_ideal.end());
        return out;
    }
};

// Arndt's P_ij. For j = i+2 it is Z_{i+1}. Otherwise each quotient in
// (Z_{i+1}/z_{i+1}) prod (Z_m/(z_m w_m)) (Z_{j-1}/w_{j-1}) is replaced by a
// polynomial with the same value at s = t = 0:
//   first factor  w_{i+1} * short_tail, or tail when a_{i+1} = 2 and w_{i+1} carries a t
//   middle        short_tail(m)
//   last          tail(j-1)
inline Polynomial arndt_P(const DeformationVariables& v, int i, int j) {
    if (j == i + 2) return v.Z(i + 1);
    int f = i + 1;
    Polynomial p = (v.a(f) == 2 && v.has_t(f)) ? v.tail(f) : v.w(f) * v.short_tail(f);
    for (int m = i + 2; m <= j - 2; ++m) p *= v.short_tail(m);
    return p * v.tail(j - 1);
}

// P at z = 0
inline Polynomial H_z(const DeformationVariables& v, const Polynomial& p) { return set_zero(p, v.z_indices()); }

// P at w = 0: z_j = -t_j where w_j carries a t, else z_j = 0
inline Polynomial H_w(const DeformationVariables& v, const Polynomial& p) {
    std::vector<Polynomial> images;
    for (std::size_t k = 0; k < v.size(); ++k) images.push_back(Polynomial::variable(v.size(), k));
    for (int j = 1; j <= v.e(); ++j)
        images[v.z_index(j)] = v.has_t(j) ? -v.t(j) : Polynomial(v.size());
    return substitute(p, images);
}

inline VersalPresentation hypersurface_presentation(const SingularityInput& s) {
    VersalPresentation vp;
    vp.hypersurface = true;
    std::vector<std::string> names{"z_1", "z_2", "z_3"};
    for (Int k = 0; k <= s.n - 2; ++k) vp.parameters.push_back("c_" + std::to_string(k));
    names.insert(names.end(), vp.parameters.begin(), vp.parameters.end());
    vp.vars = VariableTable(names);
    auto nv = vp.vars.size();
    Polynomial rhs = Polynomial::variable(nv, 1, static_cast<std::uint32_t>(s.n));
    for (Int k = 0; k <= s.n - 2; ++k)
        rhs += Polynomial::variable(nv, 3 + static_cast<std::size_t>(k)) *
               Polynomial::variable(nv, 1, static_cast<std::uint32_t>(k));
    vp.relations.push_back({1, 3, Polynomial::variable(nv, 0) * Polynomial::variable(nv, 2), rhs});
    return vp;
}

inline VersalPresentation arndt_presentation(const SingularityInput& s) {
    auto a = dual_fraction(s);
    if (a.size() < 2) return hypersurface_presentation(s);

    DeformationVariables v(a);
    int e = v.e();
    VersalPresentation vp;
    vp.vars = v.table();
    for (auto idx : v.parameter_indices()) vp.parameters.push_back(v.table().name(idx));
    ensure(static_cast<Int>(vp.parameters.size()) == dim_t1(s), "parameter count differs from dim T^1");

    for (auto [i, j] : relation_pairs(e)) vp.relations.push_back({i, j, v.z(i) * v.w(j), arndt_P(v, i, j)});

    auto add = [&](const Polynomial& p) {
        if (p.is_zero()) return;
        if (std::find(vp.base_ideal.begin(), vp.base_ideal.end(), p) == vp.base_ideal.end())
            vp.base_ideal.push_back(p);
    };
    // H_z over 2 <= i+1 <= j-1 <= e-1, H_w over 3 <= i+1 <= j-1 <= e
    for (int i = 1; i <= e; ++i)
        for (int j = i + 2; j <= e; ++j) {
            auto p = arndt_P(v, i, j);
            add(H_z(v, p));
            if (i >= 2) add(H_w(v, p));
        }
    for (int m = 3; m <= e - 2; ++m) add(v.s(m, v.a(m) - 1) * v.t(m));
    return vp;
}

} // namespace cqs
