#ifndef CENTERFOCUS_SYSTEM_HPP
#define CENTERFOCUS_SYSTEM_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <centerfocus/poly.hpp>

namespace cf {

class signature_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class variety_conflict : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Degrees (m_0, m_1, ..., m_l) of the homogeneous components, m_0 = 1 (or the
// s(0,1) form with m_0 = 0 followed by 1).
class Signature {
public:
    Signature() : degrees_{1} {}

    explicit Signature(std::vector<unsigned> degrees) : degrees_(std::move(degrees)) {
        if (degrees_.empty()) throw signature_error("empty signature");
        for (std::size_t i = 1; i < degrees_.size(); ++i) {
            if (degrees_[i] <= degrees_[i - 1]) {
                throw signature_error("degrees must be sorted distinct with 1 present");
            }
        }
        const bool linear_first = degrees_[0] == 1;
        const bool affine_first = degrees_[0] == 0 && degrees_.size() > 1 && degrees_[1] == 1;
        if (!linear_first && !affine_first) throw signature_error("degrees must be sorted distinct with 1 present");
    }

    const std::vector<unsigned>& degrees() const noexcept { return degrees_; }
    std::size_t components() const noexcept { return degrees_.size(); }
    unsigned ell() const noexcept { return static_cast<unsigned>(degrees_.size() - 1); }
    bool has_constant_part() const noexcept { return degrees_[0] == 0; }

    // Index of the linear component.
    std::size_t linear_index() const noexcept { return has_constant_part() ? 1 : 0; }

    std::size_t slot_count() const noexcept {
        std::size_t n = 0;
        for (unsigned d : degrees_) n += 2 * (d + 1);
        return n;
    }

    std::string to_string() const {
        std::string s = "s(";
        for (std::size_t i = 0; i < degrees_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(degrees_[i]);
        }
        return s + ")";
    }

    friend bool operator==(const Signature&, const Signature&) = default;

private:
    std::vector<unsigned> degrees_;
};

enum class Side { P, Q };

// One coefficient slot: the symbol multiplies binom(d, position) x^(d-position) y^position.
struct CoeffSymbol {
    unsigned component_degree = 0;
    std::size_t component = 0;
    Side side = Side::P;
    unsigned position = 0;
    std::string display_name;
    VarId var;
};

struct VectorField {
    Poly P;
    Poly Q;
};

enum class Layout { s01, s12, s123, systematic };

// A system s(1, m_1, ..., m_l): symbol table plus, per slot, either a concrete
// rational value or nothing (symbolic).
class SystemSpec {
public:
    const Signature& signature() const noexcept { return signature_; }
    const VarTable& vars() const noexcept { return vars_; }
    const std::vector<CoeffSymbol>& slots() const noexcept { return slots_; }
    Layout layout() const noexcept { return layout_; }

    const CoeffSymbol& slot(std::string_view name) const {
        for (const auto& s : slots_) {
            if (s.display_name == name) return s;
        }
        throw std::out_of_range("unknown coefficient '" + std::string(name) + "'");
    }

    std::size_t slot_index(std::string_view name) const {
        for (std::size_t i = 0; i < slots_.size(); ++i) {
            if (slots_[i].display_name == name) return i;
        }
        throw std::out_of_range("unknown coefficient '" + std::string(name) + "'");
    }

    const std::optional<Rational>& value(std::size_t slot) const { return values_.at(slot); }

    bool is_symbolic(std::size_t slot) const { return !values_.at(slot).has_value(); }

    bool fully_symbolic() const {
        return std::none_of(values_.begin(), values_.end(), [](const auto& v) { return v.has_value(); });
    }
    bool fully_concrete() const {
        return std::all_of(values_.begin(), values_.end(), [](const auto& v) { return v.has_value(); });
    }

    // The slot's entry as a polynomial: its symbol when symbolic, else the value.
    Poly coefficient(std::size_t slot) const {
        const auto& v = values_.at(slot);
        return v ? Poly(*v) : Poly::var(slots_[slot].var);
    }
    Poly coefficient(std::string_view name) const { return coefficient(slot_index(name)); }

    SystemSpec with_value(std::string_view name, std::optional<Rational> v) const {
        SystemSpec s = *this;
        s.values_.at(slot_index(name)) = std::move(v);
        return s;
    }

    // Symbol -> value map for every concrete slot.
    std::map<VarId, Rational> assignment() const {
        std::map<VarId, Rational> out;
        for (std::size_t i = 0; i < slots_.size(); ++i) {
            if (values_[i]) out.emplace(slots_[i].var, *values_[i]);
        }
        return out;
    }

    // Slots of the given component, in declaration order.
    std::vector<std::size_t> component_slots(std::size_t component) const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < slots_.size(); ++i) {
            if (slots_[i].component == component) out.push_back(i);
        }
        return out;
    }

    std::vector<VarId> component_vars(std::size_t component) const {
        std::vector<VarId> out;
        for (std::size_t i : component_slots(component)) out.push_back(slots_[i].var);
        return out;
    }

    std::vector<VarId> coefficient_vars() const {
        std::vector<VarId> out;
        for (const auto& s : slots_) out.push_back(s.var);
        return out;
    }

    // Variable groups {x, y}, then one group per component.
    std::vector<std::vector<VarId>> type_groups() const {
        std::vector<std::vector<VarId>> g{{var_x, var_y}};
        for (std::size_t c = 0; c < signature_.components(); ++c) g.push_back(component_vars(c));
        return g;
    }

    friend SystemSpec build_generic(const Signature& sig);

private:
    Signature signature_;
    VarTable vars_;
    std::vector<CoeffSymbol> slots_;
    std::vector<std::optional<Rational>> values_;
    Layout layout_ = Layout::systematic;
};

namespace detail {

inline Layout layout_for(const Signature& sig) {
    const auto& d = sig.degrees();
    if (d == std::vector<unsigned>{0, 1}) return Layout::s01;
    if (d == std::vector<unsigned>{1, 2}) return Layout::s12;
    if (d == std::vector<unsigned>{1, 2, 3}) return Layout::s123;
    return Layout::systematic;
}

inline std::vector<std::string> named_symbols(Layout layout, unsigned degree, Side side) {
    const bool p = side == Side::P;
    switch (degree) {
        case 0:
            return {p ? "a" : "b"};
        case 1:
            return p ? std::vector<std::string>{"c", "d"} : std::vector<std::string>{"e", "f"};
        case 2:
            if (layout != Layout::systematic) {
                return p ? std::vector<std::string>{"g", "h", "k"} : std::vector<std::string>{"l", "m", "n"};
            }
            break;
        case 3:
            if (layout == Layout::s123) {
                return p ? std::vector<std::string>{"p", "q", "r", "s"} : std::vector<std::string>{"t", "u", "v", "w"};
            }
            break;
        default:
            break;
    }
    std::vector<std::string> out;
    for (unsigned j = 0; j <= degree; ++j) {
        out.push_back(std::string(p ? "p" : "q") + std::to_string(degree) + "_" + std::to_string(j));
    }
    return out;
}

}  // namespace detail

// Fully symbolic system; display names follow the classical layouts for
// s(0,1), s(1,2), s(1,2,3) and are systematic (p<d>_<j>, q<d>_<j>) otherwise.
inline SystemSpec build_generic(const Signature& sig) {
    SystemSpec s;
    s.signature_ = sig;
    s.layout_ = detail::layout_for(sig);
    s.vars_ = VarTable::with_phase();
    for (std::size_t comp = 0; comp < sig.components(); ++comp) {
        const unsigned d = sig.degrees()[comp];
        for (Side side : {Side::P, Side::Q}) {
            auto names = detail::named_symbols(s.layout_, d, side);
            for (unsigned j = 0; j <= d; ++j) {
                VarId v = s.vars_.add(names[j], VarKind::coefficient);
                s.slots_.push_back(CoeffSymbol{d, comp, side, j, names[j], v});
            }
        }
    }
    s.values_.assign(s.slots_.size(), std::nullopt);
    return s;
}

inline VectorField vector_field(const SystemSpec& spec) {
    VectorField f;
    for (std::size_t i = 0; i < spec.slots().size(); ++i) {
        const auto& s = spec.slots()[i];
        Poly mono = Poly::term(Monomial::of(var_x, s.component_degree - s.position) * Monomial::of(var_y, s.position),
                               Rational(binomial(s.component_degree, s.position)));
        Poly t = spec.coefficient(i) * mono;
        (s.side == Side::P ? f.P : f.Q) += t;
    }
    return f;
}

// Homogeneous component of the field of the given signature index.
inline VectorField component_field(const SystemSpec& spec, std::size_t component) {
    const VectorField f = vector_field(spec);
    const unsigned d = spec.signature().degrees().at(component);
    return {f.P.phase_component(d), f.Q.phase_component(d)};
}

// The variety chart {c = 0, d = 1, e = -1, f = 0}: linear part becomes the rotation
// x' = y, y' = -x.
inline std::map<std::string, Rational> variety_point() {
    return {{"c", 0}, {"d", 1}, {"e", -1}, {"f", 0}};
}

inline SystemSpec restrict_to_variety(const SystemSpec& spec) {
    if (spec.signature().degrees()[spec.signature().linear_index()] != 1) {
        throw signature_error("system has no linear component");
    }
    SystemSpec out = spec;
    for (const auto& [name, v] : variety_point()) {
        const auto& cur = spec.value(spec.slot_index(name));
        if (cur && *cur != v) {
            throw variety_conflict("coefficient " + name + " = " + to_string(*cur) +
                                   " contradicts the center-focus variety (" + name + " = " + to_string(v) + ")");
        }
        out = out.with_value(name, v);
    }
    return out;
}

inline bool on_variety(const SystemSpec& spec) {
    for (const auto& [name, v] : variety_point()) {
        const auto& cur = spec.value(spec.slot_index(name));
        if (!cur || *cur != v) return false;
    }
    return true;
}

struct LinearGenerators {
    Poly i1;
    Poly i2;
    Poly k2;
};

// i1 = c + f, i2 = c^2 + 2de + f^2, k2 = -e x^2 + (c - f) x y + d y^2.
inline LinearGenerators linear_generators(const SystemSpec& spec) {
    const Poly c = spec.coefficient("c");
    const Poly d = spec.coefficient("d");
    const Poly e = spec.coefficient("e");
    const Poly f = spec.coefficient("f");
    const Poly x = Poly::var(var_x);
    const Poly y = Poly::var(var_y);
    return {c + f, c * c + 2 * d * e + f * f, -e * x * x + (c - f) * x * y + d * y * y};
}

struct Discriminants {
    Poly classical;  // B^2 - 4AC of k2 = A x^2 + B xy + C y^2
    Poly invariant;  // 2 i2 - i1^2
};

inline Discriminants k2_discriminants(const SystemSpec& spec) {
    const auto g = linear_generators(spec);
    const Poly a = g.k2.phase_coefficient(2, 0);
    const Poly b = g.k2.phase_coefficient(1, 1);
    const Poly c = g.k2.phase_coefficient(0, 2);
    return {b * b - 4 * a * c, 2 * g.i2 - g.i1 * g.i1};
}

}  // namespace cf

#endif  // CENTERFOCUS_SYSTEM_HPP
