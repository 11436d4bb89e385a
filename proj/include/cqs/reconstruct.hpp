#pragma once

// Reconstruction quiver of the resolution chain, its relations for the
// shapes covered (all b_i = 2, or a single b_p = 3), the quasideterminantal
// presentation and the deformed relations over the Artin base.

#include <algorithm>
#include <string>
#include <vector>

#include "cfrac.hpp"
#include "polyring.hpp"
#include "quiver.hpp"

namespace cqs {

// Arrows composed left to right: the first arrow is applied first.
struct PathTerm {
    Rational coefficient;
    std::vector<std::size_t> arrows;

    bool operator==(const PathTerm&) const = default;
};

struct PathRelation {
    std::size_t vertex = 0;
    std::vector<PathTerm> terms;

    bool operator==(const PathRelation&) const = default;
};

inline PathRelation negate(PathRelation r) {
    for (auto& t : r.terms) t.coefficient = -t.coefficient;
    return r;
}

inline std::string index_pair(std::size_t i, std::size_t j) {
    if (i < 10 && j < 10) return std::to_string(i) + std::to_string(j);
    return std::to_string(i) + "," + std::to_string(j);
}

inline std::string format_path(const Quiver& q, const std::vector<std::size_t>& path) {
    std::string s;
    for (auto a : path) s += q.arrows[a].label;
    return s;
}

inline std::string format_relation(const Quiver& q, const PathRelation& r) {
    std::string s;
    for (std::size_t i = 0; i < r.terms.size(); ++i) {
        auto& t = r.terms[i];
        bool neg = sgn(t.coefficient) < 0;
        if (i == 0)
            s += neg ? "-" : "";
        else
            s += neg ? " - " : " + ";
        Rational a = abs(t.coefficient);
        if (a != 1) s += a.get_str() + "*";
        s += format_path(q, t.arrows);
    }
    return s;
}

// Image in the commutative ring on the arrows, i.e. on one-dimensional representations.
inline Polynomial commutative_image(const Quiver& q, const PathRelation& r) {
    Polynomial p(q.arrows.size());
    for (auto& t : r.terms) {
        Monomial m(q.arrows.size());
        for (auto a : t.arrows) m[a] += 1;
        p.add_term(m, t.coefficient);
    }
    return p;
}

inline VariableTable arrow_table(const Quiver& q) {
    std::vector<std::string> names;
    for (auto& a : q.arrows) names.push_back(a.label);
    return VariableTable(names);
}

struct ReconstructionQuiver {
    ContinuedFraction b;
    Quiver quiver;
    bool relations_available = false;
    std::string status;                 // "pattern-verified" or why relations are missing
    std::vector<PathRelation> relations;
    std::size_t special_vertex = 0;     // the vertex with b = 3, 0 if none

    std::size_t rank() const { return b.size(); }
    std::size_t a(std::size_t i) const { return quiver.find_arrow("a_{" + index_pair(i, next(i)) + "}"); }
    std::size_t c(std::size_t i) const { return quiver.find_arrow("c_{" + index_pair(next(i), i) + "}"); }
    std::size_t next(std::size_t i) const { return (i + 1) % (b.size() + 1); }
    std::size_t prev(std::size_t i) const { return (i + b.size()) % (b.size() + 1); }

    // i -> i+1 -> i
    std::vector<std::size_t> up_loop(std::size_t i) const { return {a(i), c(i)}; }
    // i -> i-1 -> i
    std::vector<std::size_t> down_loop(std::size_t i) const { return {c(prev(i)), a(prev(i))}; }
    // 0 -> 1 -> ... -> p along a-arrows
    std::vector<std::size_t> a_path(std::size_t p) const {
        std::vector<std::size_t> path;
        for (std::size_t i = 0; i < p; ++i) path.push_back(a(i));
        return path;
    }
    // 0 -> r -> ... -> p along c-arrows
    std::vector<std::size_t> c_path(std::size_t p) const {
        std::vector<std::size_t> path;
        for (std::size_t i = b.size() + 1; i > p; --i) path.push_back(c(i - 1));
        return path;
    }
};

inline std::vector<std::size_t> concat(std::vector<std::size_t> a, const std::vector<std::size_t>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

inline PathRelation difference(std::size_t v, std::vector<std::size_t> plus, std::vector<std::size_t> minus) {
    return {v, {{Rational(1), std::move(plus)}, {Rational(-1), std::move(minus)}}};
}

inline void check_cycle(const Quiver& q, const PathRelation& r) {
    for (auto& t : r.terms) {
        std::size_t at = r.vertex;
        for (auto a : t.arrows) {
            ensure(q.arrows[a].tail == at, "relation path is not composable");
            at = q.arrows[a].head;
        }
        ensure(at == r.vertex, "relation path is not a cycle at its vertex");
    }
}

inline ReconstructionQuiver reconstruction_quiver(const ContinuedFraction& b) {
    if (b.size() < 2) throw UnsupportedError("reconstruction quiver needs at least two exceptional curves");
    ReconstructionQuiver rq;
    rq.b = b;
    std::size_t R = b.size() + 1;
    for (std::size_t i = 0; i < R; ++i) rq.quiver.vertices.push_back("b_" + std::to_string(i));
    for (std::size_t i = 0; i < R; ++i) {
        std::size_t j = (i + 1) % R;
        rq.quiver.add_arrow(i, j, "a_{" + index_pair(i, j) + "}");
        rq.quiver.add_arrow(j, i, "c_{" + index_pair(j, i) + "}");
    }
    std::vector<std::size_t> big;
    for (std::size_t i = 1; i < R; ++i) {
        for (Int l = 1; l <= b[i - 1] - 2; ++l)
            rq.quiver.add_arrow(i, 0, "k^{(" + std::to_string(i) + ")}_" + std::to_string(l));
        if (b[i - 1] > 2) big.push_back(i);
    }

    if (big.empty()) {
        for (std::size_t v = 0; v < R; ++v) rq.relations.push_back(difference(v, rq.down_loop(v), rq.up_loop(v)));
    } else if (big.size() == 1 && b[big[0] - 1] == 3) {
        std::size_t p = big[0];
        rq.special_vertex = p;
        auto k = std::vector<std::size_t>{rq.quiver.find_arrow("k^{(" + std::to_string(p) + ")}_1")};
        auto A = rq.a_path(p), C = rq.c_path(p);
        for (std::size_t v = 1; v < R; ++v)
            if (v != p) rq.relations.push_back(difference(v, rq.down_loop(v), rq.up_loop(v)));
        rq.relations.push_back(difference(0, concat(A, k), rq.down_loop(0)));
        rq.relations.push_back(difference(0, concat(C, k), rq.up_loop(0)));
        rq.relations.push_back(difference(p, concat(k, C), rq.down_loop(p)));
        rq.relations.push_back(difference(p, concat(k, A), rq.up_loop(p)));
    } else {
        rq.status = "relations unavailable: only chains with every b_i = 2 or a single b_i = 3 are covered";
        return rq;
    }
    for (auto& r : rq.relations) check_cycle(rq.quiver, r);
    rq.relations_available = true;
    rq.status = "pattern-verified";
    return rq;
}

inline ReconstructionQuiver reconstruction_quiver(const SingularityInput& s) {
    return reconstruction_quiver(fraction(s));
}

struct DeformedRelation {
    PathRelation relation;  // relation = t_{group,index}
    int group = 0;          // 1-based, one per dual-fraction entry
    int index = 0;

    std::string parameter() const { return "t_{" + std::to_string(group) + "," + std::to_string(index) + "}"; }
};

struct DeformedRelations {
    ReconstructionQuiver quiver;
    std::vector<DeformedRelation> relations;
    std::vector<Int> group_sizes;

    Int base_dimension() const {
        Int d = 0;
        for (auto g : group_sizes) d += g - 1;
        return d;
    }
};

// Each group is a closed chain of loops; consecutive relations are
// differences of adjacent loops, so the parameters of a group sum to zero.
inline DeformedRelations deformed_relations(const SingularityInput& s) {
    DeformedRelations d{reconstruction_quiver(s), {}, {}};
    auto& rq = d.quiver;
    if (!rq.relations_available) throw UnsupportedError(rq.status);
    std::size_t R = rq.rank() + 1;
    auto add = [&](int g, int idx, PathRelation r) { d.relations.push_back({std::move(r), g, idx}); };

    if (rq.special_vertex == 0) {
        for (std::size_t v = 0; v < R; ++v)
            add(1, static_cast<int>(v), difference(v, rq.up_loop(v), rq.down_loop(v)));
        d.group_sizes = {static_cast<Int>(R)};
    } else {
        std::size_t p = rq.special_vertex;
        auto k = std::vector<std::size_t>{rq.quiver.find_arrow("k^{(" + std::to_string(p) + ")}_1")};
        auto A = rq.a_path(p), C = rq.c_path(p);
        add(1, 0, difference(0, rq.up_loop(0), concat(C, k)));
        for (std::size_t v = 1; v < p; ++v) add(1, static_cast<int>(v), difference(v, rq.up_loop(v), rq.down_loop(v)));
        add(1, static_cast<int>(p), difference(p, concat(k, C), rq.down_loop(p)));
        add(2, 0, difference(0, concat(A, k), rq.down_loop(0)));
        add(2, 1, difference(p, rq.up_loop(p), concat(k, A)));
        for (std::size_t v = p + 1; v < R; ++v)
            add(2, static_cast<int>(v - p + 1), difference(v, rq.up_loop(v), rq.down_loop(v)));
        d.group_sizes = {static_cast<Int>(p + 1), static_cast<Int>(R - p + 1)};
    }
    ensure(d.group_sizes == dual_fraction(s).entries, "parameter groups differ from the dual fraction");
    for (auto& r : d.relations) check_cycle(rq.quiver, r.relation);
    return d;
}

struct QuasidetMatrix {
    Int rows = 0;
    Int cols = 0;
    bool supported = false;
    std::string status;
    std::vector<std::vector<std::string>> grid;  // row-major symbols
    VariableTable vars;
    std::vector<Polynomial> relations;            // 2x2 quasiminors
};

inline std::string quasidet_symbol(Int i, Int j) {
    if (i < 10 && j < 10) return "z" + std::to_string(i) + std::to_string(j);
    return "z_" + std::to_string(i) + "_" + std::to_string(j);
}

// Layout: rows = length of the dual fraction, columns = its first entry.
// Only the two-row shape with entries >= 3 has a worked symbol pattern.
inline QuasidetMatrix quasidet_presentation(const SingularityInput& s) {
    auto a = dual_fraction(s);
    QuasidetMatrix m;
    m.rows = static_cast<Int>(a.size());
    m.cols = a[0];
    bool has_two = std::find(a.entries.begin(), a.entries.end(), 2) != a.entries.end();
    if (m.rows != 2 || has_two) {
        m.status = m.rows == 1 ? "degenerate layout: single-entry dual fraction"
                               : "layout unspecified: only two-row dual fractions with entries >= 3 are covered";
        return m;
    }
    std::vector<std::string> top, bottom;
    for (Int c = 0; c < m.cols; ++c) top.push_back(quasidet_symbol(c, 0));
    for (Int c = 0; c + 1 < m.cols; ++c) bottom.push_back(quasidet_symbol(c + 1, 1));
    bottom.push_back(quasidet_symbol(m.cols, 0));
    m.grid = {top, bottom};
    std::vector<std::string> names = top;
    names.insert(names.end(), bottom.begin(), bottom.end());
    m.vars = VariableTable(names);
    auto nv = m.vars.size();
    auto sym = [&](Int row, Int col) {
        return Polynomial::variable(nv, static_cast<std::size_t>(row * m.cols + col));
    };
    for (Int c = 0; c < m.cols; ++c)
        for (Int d = c + 1; d < m.cols; ++d)
            m.relations.push_back(sym(0, c) * sym(1, d) - sym(1, c) * sym(0, d));
    m.supported = true;
    m.status = "pattern-verified";
    return m;
}

} // namespace cqs
