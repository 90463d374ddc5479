#ifndef CENTERFOCUS_POLY_HPP
#define CENTERFOCUS_POLY_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

#include <centerfocus/rational.hpp>

namespace cf {

enum class VarKind { phase, coefficient, auxiliary };

struct VarId {
    std::uint32_t index = 0;

    friend constexpr bool operator==(VarId, VarId) = default;
    friend constexpr auto operator<=>(VarId, VarId) = default;
};

inline constexpr VarId var_x{0};
inline constexpr VarId var_y{1};

// Ordered list of variable names. The position in the table is the variable
// index and fixes the monomial order.
class VarTable {
public:
    struct Entry {
        std::string name;
        VarKind kind;
    };

    VarTable() = default;

    // Table starting with the phase variables x, y.
    static VarTable with_phase() {
        VarTable t;
        t.add("x", VarKind::phase);
        t.add("y", VarKind::phase);
        return t;
    }

    VarId add(std::string name, VarKind kind) {
        if (find(name)) throw std::invalid_argument("duplicate variable name '" + name + "'");
        entries_.push_back({std::move(name), kind});
        return VarId{static_cast<std::uint32_t>(entries_.size() - 1)};
    }

    std::optional<VarId> find(std::string_view name) const {
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            if (entries_[i].name == name) return VarId{static_cast<std::uint32_t>(i)};
        }
        return std::nullopt;
    }

    VarId at(std::string_view name) const {
        if (auto v = find(name)) return *v;
        throw std::out_of_range("unknown variable '" + std::string(name) + "'");
    }

    const std::string& name(VarId v) const { return entries_.at(v.index).name; }
    VarKind kind(VarId v) const { return entries_.at(v.index).kind; }
    std::size_t size() const noexcept { return entries_.size(); }

    std::vector<VarId> vars_of_kind(VarKind k) const {
        std::vector<VarId> out;
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            if (entries_[i].kind == k) out.push_back(VarId{static_cast<std::uint32_t>(i)});
        }
        return out;
    }

private:
    std::vector<Entry> entries_;
};

// Dense exponent vector with trailing zeros trimmed, so equal monomials have
// identical storage.
class Monomial {
public:
    using exponent_type = std::uint16_t;

    Monomial() = default;

    static Monomial of(VarId v, unsigned e = 1) {
        Monomial m;
        if (e == 0) return m;
        m.exps_.assign(v.index + 1, 0);
        m.exps_[v.index] = checked(e);
        return m;
    }

    unsigned exponent(VarId v) const noexcept { return v.index < exps_.size() ? exps_[v.index] : 0u; }

    unsigned degree() const noexcept {
        unsigned d = 0;
        for (auto e : exps_) d += e;
        return d;
    }

    bool is_one() const noexcept { return exps_.empty(); }
    std::size_t width() const noexcept { return exps_.size(); }
    std::span<const exponent_type> exponents() const noexcept { return exps_; }

    Monomial operator*(const Monomial& o) const {
        Monomial r;
        const auto& big = exps_.size() >= o.exps_.size() ? exps_ : o.exps_;
        const auto& small = exps_.size() >= o.exps_.size() ? o.exps_ : exps_;
        r.exps_ = big;
        for (std::size_t i = 0; i < small.size(); ++i) r.exps_[i] = checked(unsigned(r.exps_[i]) + small[i]);
        return r;
    }

    bool divides(const Monomial& o) const noexcept {
        if (exps_.size() > o.exps_.size()) return false;
        for (std::size_t i = 0; i < exps_.size(); ++i) {
            if (exps_[i] > o.exps_[i]) return false;
        }
        return true;
    }

    // Requires divisor.divides(*this).
    Monomial quotient(const Monomial& divisor) const {
        Monomial r = *this;
        for (std::size_t i = 0; i < divisor.exps_.size(); ++i) r.exps_[i] -= divisor.exps_[i];
        r.trim();
        return r;
    }

    // Drops the variable v, returning its exponent.
    std::pair<Monomial, unsigned> extract(VarId v) const {
        Monomial r = *this;
        unsigned e = exponent(v);
        if (e != 0) {
            r.exps_[v.index] = 0;
            r.trim();
        }
        return {r, e};
    }

    Monomial with_exponent(VarId v, unsigned e) const {
        Monomial r = *this;
        if (r.exps_.size() <= v.index) r.exps_.resize(v.index + 1, 0);
        r.exps_[v.index] = checked(e);
        r.trim();
        return r;
    }

    friend bool operator==(const Monomial&, const Monomial&) = default;

    // Graded reverse-lexicographic order: higher total degree first; ties are
    // broken by the last variable in which the exponents differ, where the
    // smaller exponent wins.
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
        const unsigned da = a.degree();
        const unsigned db = b.degree();
        if (da != db) return da <=> db;
        const std::size_t n = std::max(a.exps_.size(), b.exps_.size());
        for (std::size_t i = n; i-- > 0;) {
            const unsigned ea = i < a.exps_.size() ? a.exps_[i] : 0u;
            const unsigned eb = i < b.exps_.size() ? b.exps_[i] : 0u;
            if (ea != eb) return eb <=> ea;
        }
        return std::strong_ordering::equal;
    }

    std::size_t hash() const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (auto e : exps_) {
            h ^= e;
            h *= 1099511628211ull;
        }
        return h;
    }

private:
    static exponent_type checked(unsigned e) {
        if (e > 0xFFFFu) throw std::overflow_error("monomial exponent overflow");
        return static_cast<exponent_type>(e);
    }

    void trim() {
        while (!exps_.empty() && exps_.back() == 0) exps_.pop_back();
    }

    std::vector<exponent_type> exps_;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

// Sparse polynomial with rational coefficients. Terms are kept sorted in
// decreasing monomial order with no zero coefficients, so structural equality
// is polynomial equality.
class Poly {
public:
    using Term = std::pair<Monomial, Rational>;

    Poly() = default;
    Poly(long c) {  // NOLINT(google-explicit-constructor)
        if (c != 0) terms_.emplace_back(Monomial{}, Rational(c));
    }
    Poly(const Rational& c) {  // NOLINT(google-explicit-constructor)
        if (c != 0) terms_.emplace_back(Monomial{}, c);
    }

    static Poly var(VarId v) { return term(Monomial::of(v), 1); }

    static Poly term(Monomial m, Rational c) {
        Poly p;
        if (c != 0) p.terms_.emplace_back(std::move(m), std::move(c));
        return p;
    }

    // Builds from arbitrary (possibly repeated, unsorted) terms.
    static Poly from_terms(std::vector<Term> terms) {
        std::unordered_map<Monomial, Rational, MonomialHash> acc;
        acc.reserve(terms.size());
        for (auto& [m, c] : terms) acc[std::move(m)] += c;
        return from_map(acc);
    }

    const std::vector<Term>& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one()); }

    Rational constant_value() const {
        if (!is_constant()) throw std::domain_error("polynomial is not constant");
        return terms_.empty() ? Rational(0) : terms_[0].second;
    }

    const Term& leading_term() const {
        if (terms_.empty()) throw std::domain_error("zero polynomial has no leading term");
        return terms_.front();
    }

    Rational coefficient(const Monomial& m) const {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                                   [](const Term& t, const Monomial& key) { return t.first > key; });
        if (it != terms_.end() && it->first == m) return it->second;
        return 0;
    }

    unsigned total_degree() const noexcept { return terms_.empty() ? 0u : terms_.front().first.degree(); }

    unsigned degree_in(VarId v) const noexcept {
        unsigned d = 0;
        for (const auto& t : terms_) d = std::max(d, t.first.exponent(v));
        return d;
    }

    bool depends_on(VarId v) const noexcept {
        for (const auto& t : terms_) {
            if (t.first.exponent(v) != 0) return true;
        }
        return false;
    }

    Poly operator-() const {
        Poly r = *this;
        for (auto& t : r.terms_) t.second = -t.second;
        return r;
    }

    friend Poly operator+(const Poly& a, const Poly& b) { return merge(a, b, false); }
    friend Poly operator-(const Poly& a, const Poly& b) { return merge(a, b, true); }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        if (a.is_constant()) return b * a.terms_[0].second;
        if (b.is_constant()) return a * b.terms_[0].second;
        std::unordered_map<Monomial, Rational, MonomialHash> acc;
        acc.reserve(a.size() * b.size());
        for (const auto& [ma, ca] : a.terms_) {
            for (const auto& [mb, cb] : b.terms_) acc[ma * mb] += ca * cb;
        }
        return from_map(acc);
    }

    friend Poly operator*(const Poly& a, const Rational& c) {
        if (c == 0) return {};
        Poly r = a;
        for (auto& t : r.terms_) t.second *= c;
        return r;
    }
    friend Poly operator*(const Rational& c, const Poly& a) { return a * c; }
    friend Poly operator*(const Poly& a, long c) { return a * Rational(c); }
    friend Poly operator*(long c, const Poly& a) { return a * Rational(c); }
    friend Poly operator/(const Poly& a, const Rational& c) {
        if (c == 0) throw std::domain_error("division by zero");
        return a * Rational(1 / c);
    }

    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

    Poly pow(unsigned n) const {
        Poly result = 1;
        Poly base = *this;
        while (n) {
            if (n & 1u) result *= base;
            n >>= 1u;
            if (n) base *= base;
        }
        return result;
    }

    Poly derivative(VarId v) const {
        std::vector<Term> out;
        out.reserve(terms_.size());
        for (const auto& [m, c] : terms_) {
            unsigned e = m.exponent(v);
            if (e == 0) continue;
            out.emplace_back(m.with_exponent(v, e - 1), c * e);
        }
        return from_terms(std::move(out));
    }

    // Simultaneous substitution; unbound variables pass through.
    Poly substitute(const std::map<VarId, Poly>& bindings) const {
        if (bindings.empty()) return *this;
        std::map<std::pair<VarId, unsigned>, Poly> power_cache;
        auto power = [&](VarId v, const Poly& base, unsigned e) -> const Poly& {
            auto key = std::make_pair(v, e);
            auto it = power_cache.find(key);
            if (it == power_cache.end()) it = power_cache.emplace(key, base.pow(e)).first;
            return it->second;
        };
        std::unordered_map<Monomial, Rational, MonomialHash> acc;
        for (const auto& [m, c] : terms_) {
            Monomial rest = m;
            Poly factor = c;
            for (const auto& [v, image] : bindings) {
                auto [stripped, e] = rest.extract(v);
                if (e == 0) continue;
                rest = std::move(stripped);
                factor *= power(v, image, e);
            }
            for (const auto& [fm, fc] : factor.terms_) acc[fm * rest] += fc;
        }
        return from_map(acc);
    }

    Poly substitute(const std::map<VarId, Rational>& values) const {
        std::map<VarId, Poly> b;
        for (const auto& [v, q] : values) b.emplace(v, Poly(q));
        return substitute(b);
    }

    // Full evaluation; `point[i]` is the value of the variable with index i.
    Rational evaluate(std::span<const Rational> point) const {
        Rational sum = 0;
        Rational t;
        for (const auto& [m, c] : terms_) {
            t = c;
            auto ex = m.exponents();
            for (std::size_t i = 0; i < ex.size(); ++i) {
                if (ex[i] == 0) continue;
                if (i >= point.size()) throw std::out_of_range("evaluation point is missing a variable");
                for (unsigned k = 0; k < ex[i]; ++k) t *= point[i];
            }
            sum += t;
        }
        return sum;
    }

    // Largest variable index used plus one.
    std::size_t width() const noexcept {
        std::size_t w = 0;
        for (const auto& t : terms_) w = std::max(w, t.first.width());
        return w;
    }

    // Collects the coefficient of each power of v.
    std::map<unsigned, Poly> collect(VarId v) const {
        std::map<unsigned, std::vector<Term>> parts;
        for (const auto& [m, c] : terms_) {
            auto [rest, e] = m.extract(v);
            parts[e].emplace_back(std::move(rest), c);
        }
        std::map<unsigned, Poly> out;
        for (auto& [e, ts] : parts) out.emplace(e, from_terms(std::move(ts)));
        return out;
    }

    // Coefficient of x^i y^j treating x, y as the main variables.
    Poly phase_coefficient(unsigned i, unsigned j) const {
        std::vector<Term> out;
        for (const auto& [m, c] : terms_) {
            if (m.exponent(var_x) == i && m.exponent(var_y) == j) {
                out.emplace_back(m.with_exponent(var_x, 0).with_exponent(var_y, 0), c);
            }
        }
        return from_terms(std::move(out));
    }

    // Terms of total degree d in x, y.
    Poly phase_component(unsigned d) const {
        std::vector<Term> out;
        for (const auto& t : terms_) {
            if (t.first.exponent(var_x) + t.first.exponent(var_y) == d) out.push_back(t);
        }
        return from_sorted(std::move(out));
    }

    // Content: gcd of numerators over lcm of denominators; sign follows the
    // leading coefficient.
    Rational content() const {
        if (terms_.empty()) return 0;
        Integer g = 0;
        Integer l = 1;
        for (const auto& [m, c] : terms_) {
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
        }
        Rational r(g, l);
        r.canonicalize();
        if (terms_.front().second < 0) r = -r;
        return r;
    }

private:
    template <class Map>
    static Poly from_map(Map& acc) {
        Poly r;
        r.terms_.reserve(acc.size());
        for (auto& [m, c] : acc) {
            if (c != 0) r.terms_.emplace_back(m, std::move(c));
        }
        std::sort(r.terms_.begin(), r.terms_.end(), [](const Term& a, const Term& b) { return a.first > b.first; });
        return r;
    }

    static Poly from_sorted(std::vector<Term> terms) {
        Poly r;
        r.terms_ = std::move(terms);
        return r;
    }

    static Poly merge(const Poly& a, const Poly& b, bool subtract) {
        Poly r;
        r.terms_.reserve(a.size() + b.size());
        auto ia = a.terms_.begin();
        auto ib = b.terms_.begin();
        while (ia != a.terms_.end() || ib != b.terms_.end()) {
            if (ib == b.terms_.end() || (ia != a.terms_.end() && ia->first > ib->first)) {
                r.terms_.push_back(*ia++);
            } else if (ia == a.terms_.end() || ib->first > ia->first) {
                r.terms_.emplace_back(ib->first, subtract ? Rational(-ib->second) : ib->second);
                ++ib;
            } else {
                Rational c = subtract ? Rational(ia->second - ib->second) : Rational(ia->second + ib->second);
                if (c != 0) r.terms_.emplace_back(ia->first, std::move(c));
                ++ia;
                ++ib;
            }
        }
        return r;
    }

    std::vector<Term> terms_;
};

inline Poly partial_derivative(const Poly& p, VarId v) { return p.derivative(v); }

// Exact division: returns r with p == q * r, or nullopt when q does not divide p.
inline std::optional<Poly> divide_exact(const Poly& p, const Poly& q) {
    if (q.is_zero()) throw std::domain_error("division by the zero polynomial");
    if (p.is_zero()) return Poly{};
    if (q.is_constant()) return p / q.constant_value();
    const auto& [lm, lc] = q.leading_term();
    std::vector<Poly::Term> quotient;
    Poly rem = p;
    while (!rem.is_zero()) {
        const auto& [rm, rc] = rem.leading_term();
        if (!lm.divides(rm)) return std::nullopt;
        Poly::Term t{rm.quotient(lm), rc / lc};
        rem -= q * Poly::term(t.first, t.second);
        quotient.push_back(std::move(t));
    }
    return Poly::from_terms(std::move(quotient));
}

struct Homogeneous {
    std::vector<unsigned> degrees;
};

struct Inhomogeneous {
    std::size_t group = 0;
    Monomial first;
    Monomial second;
};

using MultiDegree = std::variant<Homogeneous, Inhomogeneous>;

// Degree of every term in each variable group; inhomogeneity is reported with
// two witness monomials. The zero polynomial is homogeneous of degree 0.
inline MultiDegree multidegree(const Poly& p, const std::vector<std::vector<VarId>>& groups) {
    Homogeneous h{std::vector<unsigned>(groups.size(), 0)};
    if (p.is_zero()) return h;
    auto group_degree = [&](const Monomial& m, std::size_t g) {
        unsigned d = 0;
        for (VarId v : groups[g]) d += m.exponent(v);
        return d;
    };
    const Monomial& ref = p.terms().front().first;
    for (std::size_t g = 0; g < groups.size(); ++g) h.degrees[g] = group_degree(ref, g);
    for (const auto& [m, c] : p.terms()) {
        for (std::size_t g = 0; g < groups.size(); ++g) {
            if (group_degree(m, g) != h.degrees[g]) return Inhomogeneous{g, ref, m};
        }
    }
    return h;
}

}  // namespace cf

#endif  // CENTERFOCUS_POLY_HPP
