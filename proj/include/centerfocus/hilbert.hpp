#ifndef CENTERFOCUS_HILBERT_HPP
#define CENTERFOCUS_HILBERT_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <centerfocus/poly.hpp>
#include <centerfocus/poly_io.hpp>
#include <centerfocus/system.hpp>

namespace cf {

// numerator / prod (1 - monomial)^multiplicity, over formal variables held in
// the series' own table.
struct HilbertSeries {
    struct Factor {
        Monomial monomial;
        unsigned multiplicity = 1;
        friend bool operator==(const Factor&, const Factor&) = default;
    };

    VarTable vars;
    Poly numerator;
    std::vector<Factor> denominator;

    // Single-variable series in `var`: denominator pairs (a, m) mean (1 - var^a)^m.
    static HilbertSeries univariate(std::string_view numerator_text, const std::vector<std::pair<unsigned, unsigned>>& den,
                                    const std::string& var = "t") {
        HilbertSeries h;
        VarId t = h.vars.add(var, VarKind::auxiliary);
        h.numerator = parse_poly(numerator_text, h.vars);
        for (auto [a, m] : den) {
            if (a == 0 || m == 0) throw std::invalid_argument("denominator factors need exponent and multiplicity >= 1");
            h.denominator.push_back({Monomial::of(t, static_cast<std::uint16_t>(a)), m});
        }
        return h;
    }

    // Variables that actually occur.
    std::vector<VarId> support() const {
        std::vector<bool> used(vars.size(), false);
        auto mark = [&](const Monomial& m) {
            auto ex = m.exponents();
            for (std::size_t i = 0; i < ex.size(); ++i) {
                if (ex[i]) used[i] = true;
            }
        };
        for (const auto& [m, c] : numerator.terms()) mark(m);
        for (const auto& f : denominator) mark(f.monomial);
        std::vector<VarId> out;
        for (std::size_t i = 0; i < used.size(); ++i) {
            if (used[i]) out.push_back(VarId{static_cast<std::uint32_t>(i)});
        }
        return out;
    }

    std::optional<VarId> single_variable() const {
        auto s = support();
        if (s.size() > 1) return std::nullopt;
        if (s.empty()) return vars.size() ? VarId{0} : std::optional<VarId>{};
        return s.front();
    }

    std::string to_string() const {
        std::string den;
        for (const auto& f : denominator) {
            den += "(1 - " + canonical_string(Poly::term(f.monomial, 1), vars) + ")";
            if (f.multiplicity > 1) den += "^" + std::to_string(f.multiplicity);
        }
        return "(" + canonical_string(numerator, vars) + ")/(" + (den.empty() ? "1" : den) + ")";
    }
};

namespace detail {

inline VarId require_univariate(const HilbertSeries& h) {
    auto v = h.single_variable();
    if (!v) throw std::invalid_argument("operation needs a single-variable series");
    return *v;
}

inline unsigned exponent_of(const HilbertSeries::Factor& f, VarId t) { return f.monomial.exponent(t); }

}  // namespace detail

// Pole order at 1: total denominator multiplicity minus the vanishing order of
// the numerator at 1 (found by exact division by 1 - t).
inline unsigned krull_dimension(const HilbertSeries& h) {
    if (h.numerator.is_zero()) throw std::domain_error("numerator is identically zero");
    if (h.vars.size() == 0) return 0;
    const VarId t = detail::require_univariate(h);
    unsigned poles = 0;
    for (const auto& f : h.denominator) poles += f.multiplicity;
    const Poly one_minus_t = Poly(1) - Poly::var(t);
    Poly num = h.numerator;
    unsigned order = 0;
    while (true) {
        auto q = divide_exact(num, one_minus_t);
        if (!q) break;
        num = std::move(*q);
        ++order;
    }
    if (order > poles) throw std::domain_error("series has no pole at 1");
    return poles - order;
}

// Power-series coefficients 0..N.
inline std::vector<Rational> expand(const HilbertSeries& h, unsigned N) {
    std::vector<Rational> c(N + 1, Rational(0));
    if (h.vars.size() == 0) {
        if (h.numerator.is_constant()) c[0] = h.numerator.constant_value();
        return c;
    }
    const VarId t = detail::require_univariate(h);
    for (const auto& [m, v] : h.numerator.terms()) {
        const unsigned e = m.exponent(t);
        if (e <= N) c[e] += v;
    }
    for (const auto& f : h.denominator) {
        const unsigned a = detail::exponent_of(f, t);
        for (unsigned rep = 0; rep < f.multiplicity; ++rep) {
            // multiply by 1/(1 - t^a): running sum with stride a
            for (unsigned n = a; n <= N; ++n) c[n] += c[n - a];
        }
    }
    return c;
}

enum class SeriesOrder { equal, less, greater, incomparable };

inline std::string to_string(SeriesOrder o) {
    switch (o) {
        case SeriesOrder::equal: return "equal";
        case SeriesOrder::less: return "a <= b";
        case SeriesOrder::greater: return "b <= a";
        case SeriesOrder::incomparable: return "incomparable";
    }
    return "?";
}

// Coefficient-wise comparison up to order N.
inline SeriesOrder compare(const HilbertSeries& a, const HilbertSeries& b, unsigned N) {
    const auto x = expand(a, N);
    const auto y = expand(b, N);
    bool le = true;
    bool ge = true;
    for (unsigned n = 0; n <= N; ++n) {
        if (x[n] > y[n]) le = false;
        if (x[n] < y[n]) ge = false;
    }
    if (le && ge) return SeriesOrder::equal;
    if (le) return SeriesOrder::less;
    if (ge) return SeriesOrder::greater;
    return SeriesOrder::incomparable;
}

// a <= C / (1 - t)^m coefficient-wise up to order N; the t^n coefficient of
// the bound is C * binom(n + m - 1, m - 1).
inline bool envelope_check(const HilbertSeries& a, const Rational& C, unsigned m, unsigned N) {
    if (m == 0) throw std::invalid_argument("envelope exponent must be positive");
    const auto x = expand(a, N);
    for (unsigned n = 0; n <= N; ++n) {
        if (x[n] > C * Rational(binomial(n + m - 1, m - 1))) return false;
    }
    return true;
}

// Merges equal factors and cancels numerator divisors 1 + t + ... + t^(a-1)
// against factors (1 - t^a), leaving (1 - t).
inline HilbertSeries simplify(HilbertSeries h) {
    std::map<Monomial, unsigned> merged;
    for (const auto& f : h.denominator) merged[f.monomial] += f.multiplicity;
    h.denominator.clear();
    for (const auto& [m, k] : merged) h.denominator.push_back({m, k});
    auto t = h.single_variable();
    if (!t || h.numerator.is_zero()) return h;
    bool changed = true;
    while (changed) {
        changed = false;
        std::sort(h.denominator.begin(), h.denominator.end(),
                  [&](const auto& l, const auto& r) { return l.monomial.exponent(*t) < r.monomial.exponent(*t); });
        for (auto& f : h.denominator) {
            const unsigned a = f.monomial.exponent(*t);
            if (a < 2) continue;
            Poly geom;
            for (unsigned i = 0; i < a; ++i) geom += Poly::term(Monomial::of(*t, static_cast<std::uint16_t>(i)), 1);
            auto q = divide_exact(h.numerator, geom);
            if (!q) continue;
            h.numerator = std::move(*q);
            --f.multiplicity;
            h.denominator.push_back({Monomial::of(*t, 1), 1});
            changed = true;
            break;
        }
        std::map<Monomial, unsigned> again;
        for (const auto& f : h.denominator) again[f.monomial] += f.multiplicity;
        h.denominator.clear();
        for (const auto& [m, k] : again) {
            if (k) h.denominator.push_back({m, k});
        }
    }
    return h;
}

enum class Specialization { invariants, common };

// invariants: the phase-degree variable `u` set to 0 (factors containing u
// drop out); common: every variable set to a single variable named `target`.
inline HilbertSeries specialize(const HilbertSeries& h, Specialization mode, std::string_view u = "u",
                                const std::string& target = "") {
    HilbertSeries out;
    if (mode == Specialization::invariants) {
        auto uid = h.vars.find(u);
        out.vars = h.vars;
        if (!uid) return simplify(h);
        std::map<VarId, Rational> zero{{*uid, Rational(0)}};
        out.numerator = h.numerator.substitute(zero);
        for (const auto& f : h.denominator) {
            if (f.monomial.exponent(*uid) > 0) continue;
            out.denominator.push_back(f);
        }
        if (out.numerator.is_zero()) throw std::domain_error("specialization kills the numerator");
        return simplify(out);
    }
    const std::string name = target.empty() ? std::string(u) : target;
    VarId t = out.vars.add(name, VarKind::auxiliary);
    std::map<VarId, Poly> sub;
    for (std::size_t i = 0; i < h.vars.size(); ++i) sub.emplace(VarId{static_cast<std::uint32_t>(i)}, Poly::var(t));
    out.numerator = h.numerator.substitute(sub);
    for (const auto& f : h.denominator) {
        const unsigned d = f.monomial.degree();
        if (d == 0) throw std::domain_error("specialization makes a denominator factor vanish");
        out.denominator.push_back({Monomial::of(t, static_cast<std::uint16_t>(d)), f.multiplicity});
    }
    return simplify(out);
}

namespace detail {

inline HilbertSeries generalized(std::string_view numerator, const std::vector<std::string>& factors,
                                 const std::vector<std::string>& names) {
    HilbertSeries h;
    for (const auto& n : names) h.vars.add(n, VarKind::auxiliary);
    h.numerator = parse_poly(numerator, h.vars);
    for (const auto& f : factors) {
        Poly m = parse_poly(f, h.vars);
        if (m.size() != 1 || m.terms()[0].second != 1) throw std::invalid_argument("factor must be a monic monomial");
        h.denominator.push_back({m.terms()[0].first, 1});
    }
    return h;
}

}  // namespace detail

// Built-in series for the unimodular comitants / invariants of s(0,1).
inline HilbertSeries builtin_series(std::string_view name) {
    if (name == "S01") return HilbertSeries::univariate("1 - u + u^2", {{1, 2}, {2, 1}, {3, 2}}, "u");
    if (name == "SI01") return HilbertSeries::univariate("1", {{1, 1}, {2, 1}, {3, 1}}, "z");
    if (name == "S01-graded") {
        return detail::generalized("1 + u*z0*z1", {"u*z0", "z1", "z1^2", "z0^2*z1", "u^2*z1"}, {"u", "z0", "z1"});
    }
    if (name == "SI01-graded") return detail::generalized("1", {"z1", "z1^2", "z0^2*z1"}, {"z0", "z1"});
    throw std::invalid_argument("unknown built-in series '" + std::string(name) + "'");
}

inline std::vector<std::string> builtin_series_names() { return {"S01", "SI01", "S01-graded", "SI01-graded"}; }

// 2 (sum of all degrees + l) + 1, l = number of components beyond the first.
inline unsigned rho_bound(const Signature& sig) {
    unsigned sum = 0;
    for (unsigned d : sig.degrees()) sum += d;
    return 2 * (sum + sig.ell()) + 1;
}

struct ReferenceEntry {
    unsigned krull = 0;
    std::optional<unsigned> integer_basis;
};

inline const std::map<std::string, ReferenceEntry>& reference_table() {
    static const std::map<std::string, ReferenceEntry> table{
        {"SI_2", {3, 3}},           {"SI_3", {5, 5}},       {"SI_4", {7, 9}},        {"S_{0,1}", {5, 5}},
        {"SI_{0,1}", {3, 3}},       {"SI_{1,2}", {7, 7}},   {"SI_{1,2,3}", {15, 21}}, {"S_{1,2}", {9, std::nullopt}},
    };
    return table;
}

inline ReferenceEntry reference(std::string_view name) {
    const auto& t = reference_table();
    auto it = t.find(std::string(name));
    if (it == t.end()) throw std::out_of_range("unknown algebra '" + std::string(name) + "'");
    return it->second;
}

}  // namespace cf

#endif  // CENTERFOCUS_HILBERT_HPP
