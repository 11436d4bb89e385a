#pragma once

// Sparse multivariate polynomials over Q, weighted monomial orders,
// division and Buchberger's algorithm.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "errors.hpp"

namespace cqs {

using Rational = mpq_class;

inline std::string to_string(const Rational& r) { return r.get_str(); }

class VariableTable {
public:
    VariableTable() = default;
    VariableTable(std::initializer_list<std::string> names)
        : VariableTable(std::vector<std::string>(names)) {}
    explicit VariableTable(std::vector<std::string> names) : names_(std::move(names)) {
        for (std::size_t i = 0; i < names_.size(); ++i) {
            if (names_[i].empty()) throw ValidationError("empty variable name");
            if (!index_.emplace(names_[i], i).second)
                throw ValidationError("duplicate variable name: " + names_[i]);
        }
    }

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }

    std::optional<std::size_t> find(std::string_view name) const {
        auto it = index_.find(std::string(name));
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }
    std::size_t index(std::string_view name) const {
        auto i = find(name);
        if (!i) throw ValidationError("unknown variable: " + std::string(name));
        return *i;
    }

    bool operator==(const VariableTable& o) const { return names_ == o.names_; }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, std::size_t> index_;
};

class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars) : e_(nvars, 0) {}
    explicit Monomial(std::vector<std::uint32_t> e) : e_(std::move(e)) {}
    Monomial(std::initializer_list<std::uint32_t> e) : e_(e) {}

    std::size_t size() const { return e_.size(); }
    std::uint32_t operator[](std::size_t i) const { return e_[i]; }
    std::uint32_t& operator[](std::size_t i) { return e_[i]; }
    const std::vector<std::uint32_t>& exponents() const { return e_; }

    std::uint64_t degree() const {
        std::uint64_t d = 0;
        for (auto x : e_) d += x;
        return d;
    }
    bool is_one() const {
        return std::all_of(e_.begin(), e_.end(), [](auto x) { return x == 0; });
    }
    bool divides(const Monomial& o) const {
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > o.e_[i]) return false;
        return true;
    }
    bool coprime(const Monomial& o) const {
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i] && o.e_[i]) return false;
        return true;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial r(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) r.e_[i] = a.e_[i] + b.e_[i];
        return r;
    }
    // a / b, requires b | a
    friend Monomial operator/(const Monomial& a, const Monomial& b) {
        Monomial r(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) r.e_[i] = a.e_[i] - b.e_[i];
        return r;
    }
    friend Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) r.e_[i] = std::max(a.e_[i], b.e_[i]);
        return r;
    }

    auto operator<=>(const Monomial&) const = default;

private:
    std::vector<std::uint32_t> e_;
};

// Weighted order refined by degree-lex with a declared variable precedence.
// A zero weight gives plain degree-lex.
class WeightedOrder {
public:
    explicit WeightedOrder(std::vector<Rational> weight, std::vector<std::size_t> precedence = {})
        : weight_(std::move(weight)), precedence_(std::move(precedence)) {
        for (auto& w : weight_)
            if (sgn(w) < 0) throw ValidationError("weights must be nonnegative");
        if (precedence_.empty())
            for (std::size_t i = 0; i < weight_.size(); ++i) precedence_.push_back(i);
        if (precedence_.size() != weight_.size())
            throw ValidationError("precedence must list every variable");
        std::vector<std::size_t> seen = precedence_;
        std::sort(seen.begin(), seen.end());
        for (std::size_t i = 0; i < seen.size(); ++i)
            if (seen[i] != i) throw ValidationError("precedence is not a permutation");

        // Scale to integers; positive scaling does not change the order.
        mpz_class den = 1;
        for (auto& w : weight_) den = lcm_z(den, w.get_den());
        fits_small_ = true;
        for (auto& w : weight_) {
            mpz_class v = w.get_num() * (den / w.get_den());
            scaled_.push_back(v);
            if (!v.fits_slong_p() || abs(v) > mpz_class(1L << 30)) fits_small_ = false;
            small_.push_back(v.fits_slong_p() ? v.get_si() : 0);
        }
    }

    static WeightedOrder deglex(std::size_t nvars) {
        return WeightedOrder(std::vector<Rational>(nvars, Rational(0)));
    }

    std::size_t size() const { return weight_.size(); }
    const std::vector<Rational>& weight() const { return weight_; }
    const std::vector<std::size_t>& precedence() const { return precedence_; }

    Rational weight_of(const Monomial& m) const {
        Rational s = 0;
        for (std::size_t i = 0; i < m.size(); ++i) s += weight_[i] * m[i];
        return s;
    }

    // -1, 0, +1
    int compare(const Monomial& a, const Monomial& b) const {
        if (fits_small_) {
            __int128 wa = 0, wb = 0;
            for (std::size_t i = 0; i < a.size(); ++i) {
                wa += static_cast<__int128>(small_[i]) * a[i];
                wb += static_cast<__int128>(small_[i]) * b[i];
            }
            if (wa != wb) return wa < wb ? -1 : 1;
        } else {
            mpz_class wa = 0, wb = 0;
            for (std::size_t i = 0; i < a.size(); ++i) {
                wa += scaled_[i] * a[i];
                wb += scaled_[i] * b[i];
            }
            if (wa != wb) return wa < wb ? -1 : 1;
        }
        auto da = a.degree(), db = b.degree();
        if (da != db) return da < db ? -1 : 1;
        for (auto v : precedence_)
            if (a[v] != b[v]) return a[v] < b[v] ? -1 : 1;
        return 0;
    }
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

private:
    static mpz_class lcm_z(const mpz_class& a, const mpz_class& b) {
        mpz_class r;
        mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        return r;
    }

    std::vector<Rational> weight_;
    std::vector<std::size_t> precedence_;
    std::vector<mpz_class> scaled_;
    std::vector<long> small_;
    bool fits_small_ = false;
};

class Polynomial {
public:
    using Terms = std::map<Monomial, Rational>;

    Polynomial() = default;
    explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

    static Polynomial constant(std::size_t nvars, const Rational& c) {
        Polynomial p(nvars);
        p.add_term(Monomial(nvars), c);
        return p;
    }
    static Polynomial variable(std::size_t nvars, std::size_t i, std::uint32_t power = 1) {
        Monomial m(nvars);
        m[i] = power;
        return term(m, 1);
    }
    static Polynomial term(const Monomial& m, const Rational& c) {
        Polynomial p(m.size());
        p.add_term(m, c);
        return p;
    }

    std::size_t nvars() const { return nvars_; }
    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    Rational coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(const Monomial& m, const Rational& c) {
        if (m.size() != nvars_) throw ValidationError("monomial arity mismatch");
        if (sgn(c) == 0) return;
        auto [it, fresh] = terms_.emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (sgn(it->second) == 0) terms_.erase(it);
        }
    }

    std::uint64_t total_degree() const {
        std::uint64_t d = 0;
        for (auto& [m, c] : terms_) d = std::max(d, m.degree());
        return d;
    }

    Polynomial& operator+=(const Polynomial& o) {
        check(o);
        for (auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        check(o);
        for (auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    Polynomial& operator*=(const Rational& c) {
        if (sgn(c) == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, x] : terms_) x *= c;
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.check(b);
        Polynomial r(a.nvars_);
        for (auto& [ma, ca] : a.terms_)
            for (auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
        return r;
    }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    Polynomial times(const Monomial& m, const Rational& c) const {
        Polynomial r(nvars_);
        if (sgn(c) == 0) return r;
        for (auto& [mm, x] : terms_) r.terms_.emplace_hint(r.terms_.end(), mm * m, x * c);
        return r;
    }

    Polynomial pow(unsigned k) const {
        Polynomial r = constant(nvars_, 1);
        for (unsigned i = 0; i < k; ++i) r *= *this;
        return r;
    }

    bool operator==(const Polynomial& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

private:
    void check(const Polynomial& o) const {
        if (o.nvars_ != nvars_) throw ValidationError("polynomial arity mismatch");
    }

    std::size_t nvars_ = 0;
    Terms terms_;
};

struct Term {
    Monomial monomial;
    Rational coefficient;
};

inline Term leading_term(const Polynomial& f, const WeightedOrder& order) {
    if (f.is_zero()) throw ValidationError("zero polynomial has no leading term");
    auto best = f.terms().begin();
    for (auto it = std::next(best); it != f.terms().end(); ++it)
        if (order.greater(it->first, best->first)) best = it;
    return {best->first, best->second};
}

// Terms sorted by the order, largest first.
inline std::vector<Term> sorted_terms(const Polynomial& f, const WeightedOrder& order) {
    std::vector<Term> ts;
    for (auto& [m, c] : f.terms()) ts.push_back({m, c});
    std::sort(ts.begin(), ts.end(),
              [&](const Term& a, const Term& b) { return order.greater(a.monomial, b.monomial); });
    return ts;
}

inline Polynomial initial_form(const Polynomial& f, const std::vector<Rational>& w) {
    if (f.is_zero()) throw ValidationError("initial form of the zero polynomial");
    if (w.size() != f.nvars()) throw ValidationError("weight length mismatch");
    auto dot = [&](const Monomial& m) {
        Rational s = 0;
        for (std::size_t i = 0; i < m.size(); ++i) s += w[i] * m[i];
        return s;
    };
    std::optional<Rational> best;
    for (auto& [m, c] : f.terms()) {
        Rational d = dot(m);
        if (!best || d > *best) best = d;
    }
    Polynomial r(f.nvars());
    for (auto& [m, c] : f.terms())
        if (dot(m) == *best) r.add_term(m, c);
    return r;
}

inline Polynomial monic(const Polynomial& f, const WeightedOrder& order) {
    if (f.is_zero()) return f;
    return f * (Rational(1) / leading_term(f, order).coefficient);
}

namespace detail {

struct Lead {
    Polynomial poly;
    Monomial lm;
    Rational lc;
};

inline Lead make_lead(Polynomial p, const WeightedOrder& order) {
    auto t = leading_term(p, order);
    return {std::move(p), t.monomial, t.coefficient};
}

inline Polynomial reduce(Polynomial p, const std::vector<const Lead*>& basis, const WeightedOrder& order) {
    Polynomial rem(p.nvars());
    while (!p.is_zero()) {
        auto [m, c] = leading_term(p, order);
        const Lead* hit = nullptr;
        for (auto* g : basis)
            if (g->lm.divides(m)) {
                hit = g;
                break;
            }
        if (hit) {
            p -= hit->poly.times(m / hit->lm, c / hit->lc);
        } else {
            rem.add_term(m, c);
            p.add_term(m, -c);
        }
    }
    return rem;
}

} // namespace detail

// Full reduction: no term of the result is divisible by a leading monomial of the basis.
inline Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis,
                              const WeightedOrder& order) {
    std::vector<detail::Lead> leads;
    for (auto& g : basis)
        if (!g.is_zero()) leads.push_back(detail::make_lead(g, order));
    std::vector<const detail::Lead*> ptrs;
    for (auto& l : leads) ptrs.push_back(&l);
    return detail::reduce(f, ptrs, order);
}

inline Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const WeightedOrder& order) {
    auto tf = leading_term(f, order), tg = leading_term(g, order);
    auto l = lcm(tf.monomial, tg.monomial);
    return f.times(l / tf.monomial, Rational(1) / tf.coefficient) -
           g.times(l / tg.monomial, Rational(1) / tg.coefficient);
}

// Monic reduced basis, sorted by leading monomial, largest first.
inline std::vector<Polynomial> reduce_basis(std::vector<Polynomial> gens, const WeightedOrder& order) {
    std::vector<detail::Lead> g;
    for (auto& p : gens)
        if (!p.is_zero()) g.push_back(detail::make_lead(monic(p, order), order));
    std::sort(g.begin(), g.end(),
              [&](const detail::Lead& a, const detail::Lead& b) { return order.greater(b.lm, a.lm); });
    // Drop elements whose leading monomial is divisible by a smaller one.
    std::vector<detail::Lead> minimal;
    for (auto& x : g) {
        bool redundant = std::any_of(minimal.begin(), minimal.end(),
                                     [&](const detail::Lead& y) { return y.lm.divides(x.lm); });
        if (!redundant) minimal.push_back(x);
    }
    std::vector<Polynomial> out;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<const detail::Lead*> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(&minimal[j]);
        Polynomial tail = minimal[i].poly;
        tail.add_term(minimal[i].lm, -minimal[i].lc);
        Polynomial r = detail::reduce(tail, others, order);
        r.add_term(minimal[i].lm, minimal[i].lc);
        out.push_back(monic(r, order));
    }
    std::sort(out.begin(), out.end(), [&](const Polynomial& a, const Polynomial& b) {
        return order.greater(leading_term(a, order).monomial, leading_term(b, order).monomial);
    });
    return out;
}

inline std::vector<Polynomial> buchberger(const std::vector<Polynomial>& gens, const WeightedOrder& order) {
    if (gens.empty()) throw ValidationError("buchberger needs at least one generator");
    for (auto& p : gens)
        if (p.nvars() != order.size()) throw ValidationError("order arity mismatch");

    std::vector<detail::Lead> g;
    for (auto& p : gens)
        if (!p.is_zero()) g.push_back(detail::make_lead(monic(p, order), order));
    if (g.empty()) return {};

    struct Pair {
        std::size_t i, j;
        Monomial l;
    };
    std::vector<Pair> pairs;
    auto add_pairs = [&](std::size_t k) {
        for (std::size_t i = 0; i < k; ++i) pairs.push_back({i, k, lcm(g[i].lm, g[k].lm)});
    };
    for (std::size_t k = 1; k < g.size(); ++k) add_pairs(k);

    while (!pairs.empty()) {
        // normal strategy: smallest lcm first
        auto it = std::min_element(pairs.begin(), pairs.end(), [&](const Pair& a, const Pair& b) {
            return order.greater(b.l, a.l);
        });
        Pair pr = *it;
        pairs.erase(it);
        if (g[pr.i].lm.coprime(g[pr.j].lm)) continue;
        Polynomial s = g[pr.i].poly.times(pr.l / g[pr.i].lm, Rational(1) / g[pr.i].lc) -
                       g[pr.j].poly.times(pr.l / g[pr.j].lm, Rational(1) / g[pr.j].lc);
        std::vector<const detail::Lead*> ptrs;
        for (auto& x : g) ptrs.push_back(&x);
        Polynomial h = detail::reduce(s, ptrs, order);
        if (h.is_zero()) continue;
        g.push_back(detail::make_lead(monic(h, order), order));
        add_pairs(g.size() - 1);
    }
    std::vector<Polynomial> all;
    for (auto& x : g) all.push_back(std::move(x.poly));
    return reduce_basis(std::move(all), order);
}

// Every S-polynomial reduces to zero.
inline bool is_groebner_basis(const std::vector<Polynomial>& g, const WeightedOrder& order) {
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = i + 1; j < g.size(); ++j)
            if (!normal_form(s_polynomial(g[i], g[j], order), g, order).is_zero()) return false;
    return true;
}

// Replace every variable i by images[i] (all images share one arity).
inline Polynomial substitute(const Polynomial& f, const std::vector<Polynomial>& images) {
    if (images.size() != f.nvars()) throw ValidationError("substitution arity mismatch");
    std::size_t out = images.empty() ? 0 : images.front().nvars();
    std::map<std::pair<std::size_t, std::uint32_t>, Polynomial> powers;
    auto power = [&](std::size_t v, std::uint32_t k) -> const Polynomial& {
        auto key = std::make_pair(v, k);
        auto it = powers.find(key);
        if (it == powers.end()) it = powers.emplace(key, images[v].pow(k)).first;
        return it->second;
    };
    Polynomial r(out);
    for (auto& [m, c] : f.terms()) {
        Polynomial t = Polynomial::constant(out, c);
        for (std::size_t v = 0; v < m.size() && !t.is_zero(); ++v)
            if (m[v]) t *= power(v, m[v]);
        r += t;
    }
    return r;
}

// Set the listed variables to zero.
inline Polynomial set_zero(const Polynomial& f, const std::vector<std::size_t>& vars) {
    std::vector<bool> kill(f.nvars(), false);
    for (auto v : vars) kill.at(v) = true;
    Polynomial r(f.nvars());
    for (auto& [m, c] : f.terms()) {
        bool dead = false;
        for (std::size_t v = 0; v < m.size(); ++v)
            if (kill[v] && m[v]) dead = true;
        if (!dead) r.add_term(m, c);
    }
    return r;
}

inline Polynomial derivative(const Polynomial& f, std::size_t var) {
    Polynomial r(f.nvars());
    for (auto& [m, c] : f.terms()) {
        if (m[var] == 0) continue;
        Monomial d = m;
        d[var] -= 1;
        r.add_term(d, c * m[var]);
    }
    return r;
}

// Move a polynomial between variable tables by name; missing names are an error.
inline Polynomial remap(const Polynomial& f, const VariableTable& from, const VariableTable& to) {
    std::vector<std::size_t> target(from.size());
    for (std::size_t i = 0; i < from.size(); ++i) target[i] = to.index(from.name(i));
    Polynomial r(to.size());
    for (auto& [m, c] : f.terms()) {
        Monomial mm(to.size());
        for (std::size_t i = 0; i < m.size(); ++i) mm[target[i]] += m[i];
        r.add_term(mm, c);
    }
    return r;
}

inline std::string format_monomial(const Monomial& m, const VariableTable& vars) {
    std::string s;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (!m[i]) continue;
        if (!s.empty()) s += '*';
        s += vars.name(i);
        if (m[i] > 1) s += '^' + std::to_string(m[i]);
    }
    return s.empty() ? "1" : s;
}

// Canonical text: terms by descending order, coefficients as integers or a/b.
inline std::string format(const Polynomial& f, const VariableTable& vars, const WeightedOrder& order) {
    if (f.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (auto& [m, c] : sorted_terms(f, order)) {
        Rational a = abs(c);
        if (first) {
            if (sgn(c) < 0) s += '-';
        } else {
            s += sgn(c) < 0 ? " - " : " + ";
        }
        first = false;
        if (m.is_one()) {
            s += a.get_str();
        } else {
            if (a != 1) s += a.get_str() + '*';
            s += format_monomial(m, vars);
        }
    }
    return s;
}

inline std::string format(const Polynomial& f, const VariableTable& vars) {
    return format(f, vars, WeightedOrder::deglex(vars.size()));
}

namespace detail {

class PolyParser {
public:
    PolyParser(std::string_view text, const VariableTable& vars) : s_(text), vars_(vars) {}

    Polynomial parse() {
        Polynomial p = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& why) const {
        throw ValidationError("polynomial parse error at " + std::to_string(pos_) + ": " + why);
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool peek(char c) {
        skip();
        return pos_ < s_.size() && s_[pos_] == c;
    }
    bool starts_factor() {
        skip();
        if (pos_ >= s_.size()) return false;
        char c = s_[pos_];
        return c == '(' || std::isalpha(static_cast<unsigned char>(c)) ||
               std::isdigit(static_cast<unsigned char>(c));
    }

    Polynomial expr() {
        Polynomial acc(vars_.size());
        bool neg = false;
        if (peek('+') || peek('-')) neg = s_[pos_++] == '-';
        acc = neg ? -term() : term();
        while (peek('+') || peek('-')) {
            bool minus = s_[pos_++] == '-';
            if (minus)
                acc -= term();
            else
                acc += term();
        }
        return acc;
    }

    Polynomial term() {
        Polynomial acc = factor();
        for (;;) {
            if (peek('*')) {
                ++pos_;
                acc *= factor();
            } else if (starts_factor()) {
                acc *= factor();
            } else {
                return acc;
            }
        }
    }

    Polynomial factor() {
        Polynomial b = base();
        if (peek('^')) {
            ++pos_;
            b = b.pow(static_cast<unsigned>(number()));
        }
        return b;
    }

    unsigned long number() {
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected a number");
        return std::stoul(std::string(s_.substr(start, pos_ - start)));
    }

    Polynomial base() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Polynomial p = expr();
            if (!peek(')')) fail("expected ')'");
            ++pos_;
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (pos_ < s_.size() && s_[pos_] == '/') {
                ++pos_;
                while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            }
            Rational r(std::string(s_.substr(start, pos_ - start)));
            r.canonicalize();
            return Polynomial::constant(vars_.size(), r);
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            // A "^(k)" suffix is part of the name (s_3^(2)); plain "^k" is a power.
            if (pos_ + 1 < s_.size() && s_[pos_] == '^' && s_[pos_ + 1] == '(') {
                std::size_t close = s_.find(')', pos_);
                if (close == std::string_view::npos) fail("unterminated superscript");
                pos_ = close + 1;
            }
            auto name = s_.substr(start, pos_ - start);
            auto idx = vars_.find(name);
            if (!idx) fail("unknown variable " + std::string(name));
            return Polynomial::variable(vars_.size(), *idx);
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view s_;
    const VariableTable& vars_;
    std::size_t pos_ = 0;
};

} // namespace detail

inline Polynomial parse_polynomial(std::string_view text, const VariableTable& vars) {
    return detail::PolyParser(text, vars).parse();
}

} // namespace cqs
