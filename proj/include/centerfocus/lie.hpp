#ifndef CENTERFOCUS_LIE_HPP
#define CENTERFOCUS_LIE_HPP

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <centerfocus/matrix.hpp>
#include <centerfocus/poly.hpp>
#include <centerfocus/system.hpp>

namespace cf {

// A derivation of the polynomial ring, given by the image of each variable it
// moves.
class LieOperator {
public:
    LieOperator() = default;
    explicit LieOperator(std::map<VarId, Poly> images) {
        for (auto& [v, p] : images) {
            if (!p.is_zero()) images_.emplace(v, std::move(p));
        }
    }

    const std::map<VarId, Poly>& images() const noexcept { return images_; }

    Poly image(VarId v) const {
        auto it = images_.find(v);
        return it == images_.end() ? Poly{} : it->second;
    }

    Poly operator()(const Poly& p) const {
        Poly out;
        for (const auto& [v, img] : images_) {
            if (!p.depends_on(v)) continue;
            out += p.derivative(v) * img;
        }
        return out;
    }

    // Component acting only on the given variables.
    LieOperator restricted_to(const std::vector<VarId>& vars) const {
        std::map<VarId, Poly> out;
        for (VarId v : vars) {
            auto it = images_.find(v);
            if (it != images_.end()) out.emplace(v, it->second);
        }
        return LieOperator(std::move(out));
    }

    friend LieOperator operator+(const LieOperator& a, const LieOperator& b) {
        auto m = a.images_;
        for (const auto& [v, p] : b.images_) m[v] += p;
        return LieOperator(std::move(m));
    }

    friend LieOperator operator*(const Rational& s, const LieOperator& a) {
        auto m = a.images_;
        for (auto& [v, p] : m) p = p * s;
        return LieOperator(std::move(m));
    }

    friend bool operator==(const LieOperator&, const LieOperator&) = default;

private:
    std::map<VarId, Poly> images_;
};

inline LieOperator commutator(const LieOperator& a, const LieOperator& b) {
    std::map<VarId, Poly> m;
    for (const auto& [v, p] : a.images()) m[v];
    for (const auto& [v, p] : b.images()) m[v];
    for (auto& [v, img] : m) {
        img = a(b.image(v)) - b(a.image(v));
    }
    return LieOperator(std::move(m));
}

// X_i = phase part + D_i for the four elementary matrices E11, E12, E21, E22.
struct Operators {
    std::array<LieOperator, 4> X;
    std::array<LieOperator, 4> D;
};

namespace detail {

// First-order change of the field under x -> (I + eps E) x, pushing the field
// forward: F -> q F(q^{-1} x). Returns (E F - DF . E x).
inline VectorField infinitesimal_transform(const VectorField& f, int which) {
    const Poly x = Poly::var(var_x);
    const Poly y = Poly::var(var_y);
    Poly ef_p, ef_q, ex1, ex2;
    switch (which) {
        case 0: ef_p = f.P; ex1 = x; break;
        case 1: ef_p = f.Q; ex1 = y; break;
        case 2: ef_q = f.P; ex2 = x; break;
        default: ef_q = f.Q; ex2 = y; break;
    }
    VectorField d;
    d.P = ef_p - (f.P.derivative(var_x) * ex1 + f.P.derivative(var_y) * ex2);
    d.Q = ef_q - (f.Q.derivative(var_x) * ex1 + f.Q.derivative(var_y) * ex2);
    return d;
}

}  // namespace detail

// The D_i are derived by reading off how each coefficient moves under the
// infinitesimal linear substitution; nothing is tabulated.
inline Operators operators(const SystemSpec& spec) {
    if (!spec.fully_symbolic()) {
        throw std::invalid_argument("operators act on the symbolic coefficient ring; spec has concrete values");
    }
    const VectorField f = vector_field(spec);
    Operators ops;
    const Poly x = Poly::var(var_x);
    const Poly y = Poly::var(var_y);
    const std::array<std::map<VarId, Poly>, 4> phase{{
        {{var_x, x}},
        {{var_x, y}},
        {{var_y, x}},
        {{var_y, y}},
    }};
    for (int i = 0; i < 4; ++i) {
        const VectorField delta = detail::infinitesimal_transform(f, i);
        std::map<VarId, Poly> coeff;
        for (const auto& s : spec.slots()) {
            const Poly& side = s.side == Side::P ? delta.P : delta.Q;
            Poly c = side.phase_coefficient(s.component_degree - s.position, s.position);
            coeff.emplace(s.var, c / Rational(binomial(s.component_degree, s.position)));
        }
        ops.D[i] = LieOperator(coeff);
        auto all = coeff;
        for (const auto& [v, p] : phase[i]) all.emplace(v, p);
        ops.X[i] = LieOperator(std::move(all));
    }
    return ops;
}

// (delta, d_0, ..., d_l)
struct ComitantType {
    unsigned delta = 0;
    std::vector<unsigned> d;

    friend bool operator==(const ComitantType&, const ComitantType&) = default;
    friend auto operator<=>(const ComitantType&, const ComitantType&) = default;

    std::string to_string() const {
        std::string s = "(" + std::to_string(delta);
        for (unsigned v : d) s += "," + std::to_string(v);
        return s + ")";
    }
};

inline std::variant<ComitantType, Inhomogeneous> type_of(const Poly& p, const SystemSpec& spec) {
    auto md = multidegree(p, spec.type_groups());
    if (auto* bad = std::get_if<Inhomogeneous>(&md)) return *bad;
    const auto& deg = std::get<Homogeneous>(md).degrees;
    return ComitantType{deg[0], std::vector<unsigned>(deg.begin() + 1, deg.end())};
}

// g from 2g = sum d_i (m_i - 1) - delta; nullopt when the right side is odd.
inline std::optional<int> weight_of(const ComitantType& t, const Signature& sig) {
    if (t.d.size() != sig.components()) throw std::invalid_argument("type length does not match the signature");
    long twice = -static_cast<long>(t.delta);
    for (std::size_t i = 0; i < t.d.size(); ++i) twice += static_cast<long>(t.d[i]) * (static_cast<long>(sig.degrees()[i]) - 1);
    if (twice % 2 != 0) return std::nullopt;
    return static_cast<int>(twice / 2);
}

struct ComitantVerdict {
    bool comitant = false;
    ComitantType type;
    std::optional<int> weight;
    std::string witness;  // failing identity, e.g. "X2"
    Poly residual;
};

// X2(k) = X3(k) = 0 and X1(k) = X4(k) = -g k.
inline ComitantVerdict is_comitant(const Poly& p, const SystemSpec& spec, const Operators& ops) {
    auto t = type_of(p, spec);
    if (std::holds_alternative<Inhomogeneous>(t)) throw std::invalid_argument("polynomial is not homogeneous of a comitant type");
    ComitantVerdict v;
    v.type = std::get<ComitantType>(t);
    v.weight = weight_of(v.type, spec.signature());
    for (int i : {1, 2}) {
        Poly r = ops.X[i](p);
        if (!r.is_zero()) {
            v.witness = "X" + std::to_string(i + 1);
            v.residual = std::move(r);
            return v;
        }
    }
    if (!v.weight) {
        v.witness = "weight";
        return v;
    }
    for (int i : {0, 3}) {
        Poly r = ops.X[i](p) + p * Rational(*v.weight);
        if (!r.is_zero()) {
            v.witness = "X" + std::to_string(i + 1);
            v.residual = std::move(r);
            return v;
        }
    }
    v.comitant = true;
    return v;
}

inline ComitantVerdict is_comitant(const Poly& p, const SystemSpec& spec) { return is_comitant(p, spec, operators(spec)); }

class reconstruction_error : public std::domain_error {
public:
    reconstruction_error(const std::string& what, Poly residual)
        : std::domain_error(what), residual_(std::move(residual)) {}
    const Poly& residual() const noexcept { return residual_; }

private:
    Poly residual_;
};

// k = sum_j (-1)^j / j! D3^j(S) x^(delta-j) y^j
inline Poly reconstruct_from_semi_invariant(const Poly& s, unsigned delta, const Operators& ops) {
    if (s.depends_on(var_x) || s.depends_on(var_y)) {
        throw std::invalid_argument("semi-invariant must be free of the phase variables");
    }
    const LieOperator& d3 = ops.D[2];
    Poly out;
    Poly cur = s;
    for (unsigned j = 0; j <= delta; ++j) {
        Rational c(j % 2 ? -1 : 1);
        c /= Rational(factorial(j));
        out += cur * Poly::term(Monomial::of(var_x, delta - j) * Monomial::of(var_y, j), c);
        cur = d3(cur);
    }
    if (!cur.is_zero()) {
        throw reconstruction_error("D3^(delta+1) of the semi-invariant does not vanish", cur);
    }
    return out;
}

inline Poly reconstruct_from_semi_invariant(const Poly& s, unsigned delta, const SystemSpec& spec) {
    return reconstruct_from_semi_invariant(s, delta, operators(spec));
}

struct IsobarityPair {
    int w1 = 0;
    int w2 = 0;
    friend bool operator==(const IsobarityPair&, const IsobarityPair&) = default;
};

struct NotIsobaric {
    Monomial first;
    Monomial second;
};

namespace detail {

// Eigenvalue of the diagonal operator on a single variable; throws if it is
// not diagonal there.
inline Rational diagonal_weight(const LieOperator& op, VarId v) {
    Poly img = op.image(v);
    if (img.is_zero()) return 0;
    if (img.size() != 1 || img.terms()[0].first != Monomial::of(v)) {
        throw std::logic_error("operator is not diagonal on the coefficient ring");
    }
    return img.terms()[0].second;
}

}  // namespace detail

// Eigenvalue pair of p under (D1, D4), reported with the sign convention under
// which the first defining focal quantity of s(1,2) reads (3, -1).
inline std::variant<IsobarityPair, NotIsobaric> isobarity_of(const Poly& p, const Operators& ops) {
    if (p.depends_on(var_x) || p.depends_on(var_y)) throw std::invalid_argument("isobarity is defined for coefficient polynomials");
    if (p.is_zero()) throw std::invalid_argument("zero polynomial has no isobarity");
    auto eig = [&](const Monomial& m) {
        Rational a = 0;
        Rational b = 0;
        auto ex = m.exponents();
        for (std::size_t i = 0; i < ex.size(); ++i) {
            if (!ex[i]) continue;
            VarId v{static_cast<std::uint32_t>(i)};
            a += ex[i] * detail::diagonal_weight(ops.D[0], v);
            b += ex[i] * detail::diagonal_weight(ops.D[3], v);
        }
        return std::make_pair(a, b);
    };
    const Monomial& ref = p.terms().front().first;
    const auto e0 = eig(ref);
    for (const auto& [m, c] : p.terms()) {
        if (eig(m) != e0) return NotIsobaric{ref, m};
    }
    return IsobarityPair{-static_cast<int>(e0.first.get_num().get_si()), -static_cast<int>(e0.second.get_num().get_si())};
}

// Torus weights of each coefficient symbol under (D1, D4), for scaling probes.
inline std::map<VarId, std::pair<int, int>> torus_weights(const SystemSpec& spec, const Operators& ops) {
    std::map<VarId, std::pair<int, int>> out;
    for (const auto& s : spec.slots()) {
        out.emplace(s.var, std::make_pair(static_cast<int>(detail::diagonal_weight(ops.D[0], s.var).get_num().get_si()),
                                          static_cast<int>(detail::diagonal_weight(ops.D[3], s.var).get_num().get_si())));
    }
    return out;
}

// Small random rationals for probabilistic checks.
class RationalSampler {
public:
    explicit RationalSampler(std::uint64_t seed) : rng_(seed) {}

    Rational next() {
        std::uniform_int_distribution<long> num(-60, 60);
        std::uniform_int_distribution<long> den(1, 9);
        return rational(num(rng_), den(rng_));
    }

    Rational next_nonzero() {
        Rational r;
        do r = next();
        while (r == 0);
        return r;
    }

    std::vector<Rational> point(std::size_t n) {
        std::vector<Rational> p(n);
        for (auto& v : p) v = next();
        return p;
    }

    std::mt19937_64& engine() noexcept { return rng_; }

private:
    std::mt19937_64 rng_;
};

// Max Jacobian rank over random points: a lower bound for the transcendence
// degree, exact with probability one.
inline std::size_t independence_rank(const std::vector<Poly>& polys, const std::vector<VarId>& vars, int trials,
                                     std::uint64_t seed = 0x5eed) {
    if (polys.empty()) throw std::invalid_argument("independence rank of an empty set");
    std::size_t width = 0;
    for (const auto& p : polys) width = std::max(width, p.width());
    for (VarId v : vars) width = std::max<std::size_t>(width, v.index + 1);
    std::vector<std::vector<Poly>> jac(polys.size());
    for (std::size_t i = 0; i < polys.size(); ++i) {
        for (VarId v : vars) jac[i].push_back(polys[i].derivative(v));
    }
    RationalSampler rng(seed);
    std::size_t best = 0;
    for (int t = 0; t < trials; ++t) {
        auto pt = rng.point(width);
        RationalMatrix m(polys.size(), vars.size());
        for (std::size_t i = 0; i < polys.size(); ++i) {
            for (std::size_t j = 0; j < vars.size(); ++j) m(i, j) = jac[i][j].evaluate(pt);
        }
        best = std::max(best, rank(std::move(m)));
    }
    return best;
}

}  // namespace cf

#endif  // CENTERFOCUS_LIE_HPP
